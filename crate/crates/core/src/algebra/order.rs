//! Monomial orders.

use std::cmp::Ordering;
use std::fmt;

use super::monomial::{Monomial, MAX_VARS};

/// A monomial order on the exponent vectors of a ring.
///
/// `Block { split }` compares the first `split` variables by graded reverse
/// lexicographic order and breaks ties by grevlex on the remaining variables.
/// It eliminates the leading block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    #[default]
    GrevLex,
    Lex,
    Block {
        split: usize,
    },
}

#[inline]
fn revlex(a: &Monomial, b: &Monomial, range: std::ops::Range<usize>) -> Ordering {
    for i in range.rev() {
        let (x, y) = (a.exp(i), b.exp(i));
        if x != y {
            // the smaller exponent in the last differing variable wins
            return y.cmp(&x);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::GrevLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| revlex(a, b, 0..MAX_VARS)),
            MonomialOrder::Lex => a.exponents().cmp(b.exponents()),
            MonomialOrder::Block { split } => {
                let (da, db) = (a.partial_degree(0..split), b.partial_degree(0..split));
                da.cmp(&db)
                    .then_with(|| revlex(a, b, 0..split))
                    .then_with(|| (a.degree() - da).cmp(&(b.degree() - db)))
                    .then_with(|| revlex(a, b, split..MAX_VARS))
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::GrevLex => "grevlex".into(),
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::Block { split } => format!("block{split}"),
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "grevlex" => Some(MonomialOrder::GrevLex),
            "lex" => Some(MonomialOrder::Lex),
            _ => s
                .strip_prefix("block")
                .and_then(|k| k.parse().ok())
                .map(|split| MonomialOrder::Block { split }),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}
