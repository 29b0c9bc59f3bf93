//! Exhaustive compatibility checks over an explicit family of primes, with
//! primality and membership decided without Gröbner bases.

use crate::algebra::upoly::{UArith, UPoly};
use crate::algebra::{Monomial, Poly, PrimeField, RingRef};
use crate::error::{Error, Result};
use crate::frobenius::trace_eval_q;
use crate::groebner::Ideal;
use crate::maps::MapDatum;

/// A prime from the family, in a form that supports membership tests.
enum Certified {
    /// A linear subspace: `x_pivot = Σ c_j x_j + c` for each pivot.
    Linear { images: Vec<Poly> },
    /// A principal prime `(h)`.
    Principal(Poly),
}

impl Certified {
    fn contains(&self, g: &Poly) -> Result<bool> {
        match self {
            Certified::Linear { images } => Ok(g.substitute(g.ring(), images)?.is_zero()),
            Certified::Principal(h) => Ok(g.is_zero() || g.exact_div(h)?.is_some()),
        }
    }
}

fn is_linear(g: &Poly) -> bool {
    g.total_degree().is_some_and(|d| d <= 1)
}

/// Row reduction of affine linear forms; `None` when the system is
/// inconsistent (the forms generate the unit ideal).
fn linear_images(ring: &RingRef, gens: &[Poly]) -> Result<Option<Vec<Poly>>> {
    let n = ring.nvars();
    let field = PrimeField::new(ring.p())?;
    // column n holds the constant term
    let mut rows: Vec<Vec<u64>> = gens
        .iter()
        .map(|g| {
            let mut row = vec![0u64; n + 1];
            for t in g.terms() {
                match t.mono.support().next() {
                    Some(i) => row[i] = t.coeff,
                    None => row[n] = t.coeff,
                }
            }
            row
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(k) = (r..rows.len()).find(|&k| rows[k][col] != 0) else {
            continue;
        };
        rows.swap(r, k);
        let inv = field.inv(rows[r][col]);
        for v in rows[r].iter_mut() {
            *v = field.mul(*v, inv);
        }
        for k in 0..rows.len() {
            if k != r && rows[k][col] != 0 {
                let c = rows[k][col];
                for j in 0..=n {
                    let s = field.mul(c, rows[r][j]);
                    rows[k][j] = field.sub(rows[k][j], s);
                }
            }
        }
        pivots.push((r, col));
        r += 1;
    }
    if rows[r..].iter().any(|row| row[n] != 0) {
        return Ok(None);
    }
    let mut images: Vec<Poly> = ring.vars();
    for (row, col) in pivots {
        let mut terms = Vec::new();
        for j in 0..n {
            if j != col && rows[row][j] != 0 {
                terms.push((Monomial::var(j), field.neg(rows[row][j]) as i64));
            }
        }
        if rows[row][n] != 0 {
            terms.push((Monomial::one(), field.neg(rows[row][n]) as i64));
        }
        images[col] = Poly::from_terms(ring, terms);
    }
    Ok(Some(images))
}

/// `Some(irreducible?)` for a polynomial in one variable, `None` otherwise.
fn univariate_irreducible(h: &Poly) -> Result<Option<bool>> {
    let ring = h.ring();
    let support: Vec<usize> = (0..ring.nvars()).filter(|&i| h.degree_in(i) > 0).collect();
    let [v] = support[..] else {
        return Ok(None);
    };
    let mut coeffs = vec![0u64; h.degree_in(v) as usize + 1];
    for t in h.terms() {
        coeffs[t.mono.exp(v) as usize] = t.coeff;
    }
    let arith = UArith {
        field: PrimeField::new(ring.p())?,
    };
    let (_, factors) = arith.factor(&UPoly::new(coeffs));
    Ok(Some(factors.len() == 1 && factors[0].1 == 1))
}

fn certify(prime: &Ideal, attested: &[Poly]) -> Result<Certified> {
    let ring = prime.ring();
    let gens = prime.gens();
    let reject = || Error::NotPrime(prime.to_string());
    if gens.is_empty() {
        return Ok(Certified::Linear {
            images: ring.vars(),
        });
    }
    if gens.iter().all(is_linear) {
        return match linear_images(ring, gens)? {
            Some(images) => Ok(Certified::Linear { images }),
            None => Err(reject()),
        };
    }
    if let [h] = gens {
        if attested.iter().any(|a| a.monic() == h.monic()) {
            return Ok(Certified::Principal(h.clone()));
        }
        match univariate_irreducible(h)? {
            Some(true) => return Ok(Certified::Principal(h.clone())),
            Some(false) => return Err(reject()),
            None if h.is_monomial() => return Err(reject()),
            None => {}
        }
    }
    Err(Error::Unsupported(format!(
        "cannot certify primality of {prime} without decomposition"
    )))
}

/// The primes of `family` that are compatible with the datum, in family
/// order. Every family member must be certifiably prime (linear, a
/// univariate irreducible, or principal with an attested generator).
pub fn candidate_center_bruteforce(
    datum: &MapDatum,
    family: &[Ideal],
    attested: &[Poly],
) -> Result<Vec<Ideal>> {
    if !datum.modulus().is_zero_ideal() {
        return Err(Error::InvalidArgument(
            "the brute-force oracle works on the polynomial ring (modulus 0)".into(),
        ));
    }
    let ring = datum.ring();
    let q = datum.q();
    let n = ring.nvars();
    let f = datum.multiplier();
    let mut basis: Vec<Monomial> = Vec::new();
    let total = q
        .checked_pow(n as u32)
        .ok_or_else(|| Error::Overflow("digit basis".into()))?;
    for mut idx in 0..total {
        let mut exps = vec![0u32; n];
        for e in exps.iter_mut() {
            *e = (idx % q) as u32;
            idx /= q;
        }
        basis.push(Monomial::from_exponents(&exps)?);
    }
    let mut out = Vec::new();
    for prime in family {
        if prime.ring() != ring {
            return Err(Error::RingMismatch);
        }
        let cert = certify(prime, attested)?;
        let mut compatible = true;
        'gens: for p in prime.gens() {
            let fp = f.checked_mul(p)?;
            for m in &basis {
                let v = trace_eval_q(&fp.mul_term(m, 1)?, q)?;
                if !cert.contains(&v)? {
                    compatible = false;
                    break 'gens;
                }
            }
        }
        if compatible {
            out.push(prime.clone());
        }
    }
    Ok(out)
}

/// Primes generated by the nonempty subsets of the variables.
pub fn variable_subset_family(ring: &RingRef) -> Vec<Ideal> {
    let n = ring.nvars();
    let vars = ring.vars();
    (1u32..(1 << n))
        .map(|mask| {
            let gens = (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| vars[i].clone())
                .collect();
            Ideal::new(ring, gens).expect("variables share the ring")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, MonomialOrder, Ring};

    fn ideal(r: &RingRef, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|g| parse_poly(r, g).unwrap()).collect()).unwrap()
    }

    #[test]
    fn cross_family() {
        let r = Ring::new(2, &["x", "y"], MonomialOrder::GrevLex).unwrap();
        let d = MapDatum::on_ambient(parse_poly(&r, "x*y").unwrap(), 1).unwrap();
        let mut family = variable_subset_family(&r);
        family.push(ideal(&r, &["x + y"]));
        family.push(ideal(&r, &["x + 1"]));
        let found: Vec<String> = candidate_center_bruteforce(&d, &family, &[])
            .unwrap()
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(found, ["(x)", "(y)", "(x, y)"]);
        assert!(candidate_center_bruteforce(&d, &[], &[]).unwrap().is_empty());
    }

    #[test]
    fn rejects_non_primes() {
        let r = Ring::new(2, &["x", "y"], MonomialOrder::GrevLex).unwrap();
        let d = MapDatum::on_ambient(parse_poly(&r, "x*y").unwrap(), 1).unwrap();
        for bad in [vec!["x*y"], vec!["x^2"], vec!["x", "x + 1"], vec!["x^2 + 1"]] {
            let res = candidate_center_bruteforce(&d, &[ideal(&r, &bad)], &[]);
            assert!(matches!(res, Err(Error::NotPrime(_))), "{bad:?}");
        }
    }

    #[test]
    fn affine_linear_primes() {
        // xyz(x+y+z+1) at p = 2: the plane x+y+z+1 is a center, x+1 is not
        let r = Ring::new(2, &["x", "y", "z"], MonomialOrder::GrevLex).unwrap();
        let h = parse_poly(&r, "x*y*z*(x + y + z + 1)").unwrap();
        let d = MapDatum::on_ambient(h, 1).unwrap();
        let family = [
            ideal(&r, &["x + y + z + 1"]),
            ideal(&r, &["x + 1"]),
            ideal(&r, &["x", "y + 1"]),
            ideal(&r, &["x", "y + z + 1"]),
        ];
        let found = candidate_center_bruteforce(&d, &family, &[]).unwrap();
        let found: Vec<String> = found.iter().map(|p| p.to_string()).collect();
        assert_eq!(found, ["(x + y + z + 1)", "(x, y + z + 1)"]);
    }
}
