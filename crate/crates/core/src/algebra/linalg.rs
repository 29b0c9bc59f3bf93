//! Sparse row echelon forms over F_p.

use std::collections::{BTreeMap, HashMap};

use crate::algebra::PrimeField;

pub(crate) type SparseVec = BTreeMap<usize, u64>;

/// Rows indexed by their pivot (smallest column), each normalized so the
/// pivot entry is 1.
pub(crate) struct Echelon {
    field: PrimeField,
    rows: HashMap<usize, Vec<(usize, u64)>>,
}

impl Echelon {
    pub fn new(field: PrimeField) -> Self {
        Echelon {
            field,
            rows: HashMap::new(),
        }
    }

    /// Eliminates every pivot column from `v`.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let f = self.field;
        let mut cursor = 0usize;
        while let Some((&k, &c)) = v.range(cursor..).next() {
            match self.rows.get(&k) {
                Some(row) => {
                    for &(col, val) in row {
                        let cur = v.get(&col).copied().unwrap_or(0);
                        let next = f.sub(cur, f.mul(c, val));
                        if next == 0 {
                            v.remove(&col);
                        } else {
                            v.insert(col, next);
                        }
                    }
                }
                None => cursor = k + 1,
            }
        }
        v
    }

    /// Reduces and inserts `v`; returns the reduced vector (empty when `v`
    /// was dependent).
    pub fn insert(&mut self, v: SparseVec) -> SparseVec {
        let v = self.reduce(v);
        if let Some((&pivot, &lead)) = v.iter().next() {
            let inv = self.field.inv(lead);
            let row = v.iter().map(|(&c, &x)| (c, self.field.mul(x, inv))).collect();
            self.rows.insert(pivot, row);
        }
        v
    }
}
