//! Dense univariate polynomials over F_p and Cantor–Zassenhaus factoring.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::PrimeField;

/// Coefficients from the constant term upward; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPoly {
    pub coeffs: Vec<u64>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        UPoly { coeffs: vec![1] }
    }

    pub fn x() -> Self {
        UPoly { coeffs: vec![0, 1] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// Degree; the zero polynomial has degree `usize::MAX` by convention
    /// and callers test `is_zero` first.
    pub fn degree(&self) -> usize {
        self.coeffs.len().wrapping_sub(1)
    }

    pub fn lead(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }
}

/// Arithmetic in F_p[x].
#[derive(Clone, Copy, Debug)]
pub struct UArith {
    pub field: PrimeField,
}

impl UArith {
    pub fn add(&self, a: &UPoly, b: &UPoly) -> UPoly {
        let n = a.coeffs.len().max(b.coeffs.len());
        let c = (0..n)
            .map(|i| {
                self.field.add(
                    a.coeffs.get(i).copied().unwrap_or(0),
                    b.coeffs.get(i).copied().unwrap_or(0),
                )
            })
            .collect();
        UPoly::new(c)
    }

    pub fn sub(&self, a: &UPoly, b: &UPoly) -> UPoly {
        let n = a.coeffs.len().max(b.coeffs.len());
        let c = (0..n)
            .map(|i| {
                self.field.sub(
                    a.coeffs.get(i).copied().unwrap_or(0),
                    b.coeffs.get(i).copied().unwrap_or(0),
                )
            })
            .collect();
        UPoly::new(c)
    }

    pub fn mul(&self, a: &UPoly, b: &UPoly) -> UPoly {
        if a.is_zero() || b.is_zero() {
            return UPoly::zero();
        }
        let mut c = vec![0u64; a.coeffs.len() + b.coeffs.len() - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                c[i + j] = self.field.add(c[i + j], self.field.mul(x, y));
            }
        }
        UPoly::new(c)
    }

    pub fn monic(&self, a: &UPoly) -> UPoly {
        if a.is_zero() {
            return a.clone();
        }
        let inv = self.field.inv(a.lead());
        UPoly::new(a.coeffs.iter().map(|&c| self.field.mul(c, inv)).collect())
    }

    pub fn divrem(&self, a: &UPoly, b: &UPoly) -> (UPoly, UPoly) {
        assert!(!b.is_zero(), "division by zero polynomial");
        if a.is_zero() || a.degree() < b.degree() {
            return (UPoly::zero(), a.clone());
        }
        let inv = self.field.inv(b.lead());
        let mut rem = a.coeffs.clone();
        let db = b.degree();
        let mut quot = vec![0u64; a.degree() - db + 1];
        for k in (0..quot.len()).rev() {
            let c = self.field.mul(rem[k + db], inv);
            quot[k] = c;
            if c == 0 {
                continue;
            }
            for (j, &bj) in b.coeffs.iter().enumerate() {
                rem[k + j] = self.field.sub(rem[k + j], self.field.mul(c, bj));
            }
        }
        (UPoly::new(quot), UPoly::new(rem))
    }

    pub fn rem(&self, a: &UPoly, b: &UPoly) -> UPoly {
        self.divrem(a, b).1
    }

    /// Monic gcd.
    pub fn gcd(&self, a: &UPoly, b: &UPoly) -> UPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    pub fn derivative(&self, a: &UPoly) -> UPoly {
        let p = self.field.p();
        UPoly::new(
            a.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| self.field.mul(c, i as u64 % p))
                .collect(),
        )
    }

    pub fn powmod(&self, base: &UPoly, mut exp: u64, modulus: &UPoly) -> UPoly {
        let mut acc = self.rem(&UPoly::one(), modulus);
        let mut b = self.rem(base, modulus);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.rem(&self.mul(&acc, &b), modulus);
            }
            b = self.rem(&self.mul(&b, &b), modulus);
            exp >>= 1;
        }
        acc
    }

    /// For a polynomial in x^p, returns its p-th root.
    fn pth_root(&self, a: &UPoly) -> UPoly {
        let p = self.field.p() as usize;
        UPoly::new(a.coeffs.iter().step_by(p).copied().collect())
    }

    /// Square-free decomposition of a monic polynomial:
    /// `a = Π g_i^{m_i}` with the `g_i` square-free and pairwise coprime.
    pub fn squarefree(&self, a: &UPoly) -> Vec<(UPoly, u32)> {
        let mut out = Vec::new();
        if a.is_zero() || a.degree() == 0 {
            return out;
        }
        let p = self.field.p() as u32;
        let d = self.derivative(a);
        let mut c = self.gcd(a, &d);
        let mut w = self.divrem(a, &c).0;
        let mut i = 1;
        while !w.is_one() {
            let y = self.gcd(&w, &c);
            let fac = self.divrem(&w, &y).0;
            if !fac.is_one() {
                out.push((self.monic(&fac), i));
            }
            w = y;
            c = self.divrem(&c, &w).0;
            i += 1;
        }
        if !c.is_one() {
            let root = self.pth_root(&c);
            for (g, m) in self.squarefree(&root) {
                out.push((g, m * p));
            }
        }
        out
    }

    /// Distinct-degree factorization of a monic square-free polynomial.
    fn distinct_degree(&self, a: &UPoly) -> Vec<(UPoly, usize)> {
        let p = self.field.p();
        let mut out = Vec::new();
        let mut rest = a.clone();
        let mut h = self.rem(&UPoly::x(), &rest);
        let mut i = 1;
        while !rest.is_zero() && rest.degree() >= 2 * i {
            h = self.powmod(&h, p, &rest);
            let g = self.gcd(&self.sub(&h, &UPoly::x()), &rest);
            if !g.is_one() {
                rest = self.divrem(&rest, &g).0;
                h = self.rem(&h, &rest);
                out.push((g, i));
            }
            i += 1;
        }
        if rest.degree() >= 1 && !rest.is_zero() {
            let d = rest.degree();
            out.push((rest, d));
        }
        out
    }

    /// Splits a product of distinct irreducibles of common degree `d`.
    fn equal_degree(&self, a: &UPoly, d: usize, rng: &mut ChaCha8Rng) -> Vec<UPoly> {
        if a.degree() == d {
            return vec![self.monic(a)];
        }
        let p = self.field.p();
        loop {
            let r: Vec<u64> = (0..a.degree()).map(|_| rng.gen_range(0..p)).collect();
            let r = UPoly::new(r);
            if r.is_zero() || r.degree() == 0 {
                continue;
            }
            let candidate = if p == 2 {
                // absolute trace r + r^2 + ... + r^{2^{d-1}}
                let mut t = r.clone();
                let mut acc = r.clone();
                for _ in 1..d {
                    t = self.rem(&self.mul(&t, &t), a);
                    acc = self.add(&acc, &t);
                }
                acc
            } else {
                // r^{(p^d - 1)/2} = (r * r^p * ... * r^{p^{d-1}})^{(p-1)/2}
                let mut t = r.clone();
                let mut norm = r.clone();
                for _ in 1..d {
                    t = self.powmod(&t, p, a);
                    norm = self.rem(&self.mul(&norm, &t), a);
                }
                self.sub(&self.powmod(&norm, (p - 1) / 2, a), &UPoly::one())
            };
            let g = self.gcd(&candidate, a);
            if !g.is_one() && g.degree() < a.degree() {
                let h = self.divrem(a, &g).0;
                let mut out = self.equal_degree(&g, d, rng);
                out.extend(self.equal_degree(&h, d, rng));
                return out;
            }
        }
    }

    /// Complete factorization into monic irreducibles with multiplicities.
    /// Returns the leading coefficient separately.
    pub fn factor(&self, a: &UPoly) -> (u64, Vec<(UPoly, u32)>) {
        assert!(!a.is_zero());
        let lc = a.lead();
        let monic = self.monic(a);
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let mut out = Vec::new();
        for (sf, m) in self.squarefree(&monic) {
            for (block, d) in self.distinct_degree(&sf) {
                for irr in self.equal_degree(&block, d, &mut rng) {
                    out.push((irr, m));
                }
            }
        }
        out.sort_by(|a, b| (a.0.degree(), &a.0.coeffs).cmp(&(b.0.degree(), &b.0.coeffs)));
        (lc, out)
    }
}
