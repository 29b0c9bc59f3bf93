//! Exact rational exponents and the integer ceilings built from them.

use num_rational::Ratio;

use crate::algebra::prime_power;
use crate::error::{Error, Result};

/// Non-negative rational numbers.
pub type Rational = Ratio<u64>;

/// `⌈t·k⌉`, computed in integers.
pub fn ceil_mul(t: &Rational, k: u64) -> Result<u64> {
    let num = (*t.numer() as u128) * (k as u128);
    let den = *t.denom() as u128;
    u64::try_from(num.div_ceil(den)).map_err(|_| Error::Overflow(format!("⌈{t}·{k}⌉")))
}

/// `(q^n − 1)/(q − 1) = 1 + q + ⋯ + q^{n−1}`.
pub fn geometric_exponent(q: u64, n: u32) -> Result<u64> {
    let mut acc: u64 = 0;
    let mut pow: u64 = 1;
    for i in 0..n {
        acc = acc
            .checked_add(pow)
            .ok_or_else(|| Error::Overflow(format!("(q^{n} - 1)/(q - 1) for q = {q}")))?;
        if i + 1 < n {
            pow = pow
                .checked_mul(q)
                .ok_or_else(|| Error::Overflow(format!("{q}^{n}")))?;
        }
    }
    Ok(acc)
}

/// The smallest multiple `e'` of `e` with `e' ≤ emax` such that
/// `t·(p^{e'} − 1)` is an integer; returns `(e', t·(p^{e'} − 1))`.
pub fn integral_level(t: &Rational, p: u64, e: u32, emax: u32) -> Result<(u32, u64)> {
    let den = *t.denom();
    if e == 0 {
        return Err(Error::InvalidArgument("level must be positive".into()));
    }
    let mut level = e;
    while level <= emax {
        let q = prime_power(p, level)?;
        if (q - 1) % den == 0 {
            return Ok((level, ceil_mul(t, q - 1)?));
        }
        level += e;
    }
    Err(Error::IncompatibleExponentDenominator { den, emax })
}

/// Parses `num/den` or an integer.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::InvalidArgument(format!("`{text}` is not a non-negative rational"));
    let (n, d) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text.trim(), "1"),
    };
    let n: u64 = n.parse().map_err(|_| bad())?;
    let d: u64 = d.parse().map_err(|_| bad())?;
    if d == 0 {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ceilings() {
        assert_eq!(ceil_mul(&Rational::new(1, 3), 7).unwrap(), 3);
        assert_eq!(ceil_mul(&Rational::new(2, 3), 3).unwrap(), 2);
        assert_eq!(ceil_mul(&Rational::new(5, 1), 0).unwrap(), 0);
        assert_eq!(geometric_exponent(4, 2).unwrap(), 5);
        assert_eq!(geometric_exponent(2, 3).unwrap(), 7);
        assert_eq!(geometric_exponent(9, 1).unwrap(), 1);
    }

    #[test]
    fn levels() {
        // 1/3 needs 2^2 - 1 = 3
        assert_eq!(integral_level(&Rational::new(1, 3), 2, 1, 6).unwrap(), (2, 1));
        // 1/5 needs 2^4 - 1 = 15
        assert_eq!(integral_level(&Rational::new(1, 5), 2, 2, 6).unwrap(), (4, 3));
        assert!(matches!(
            integral_level(&Rational::new(1, 2), 2, 1, 8),
            Err(Error::IncompatibleExponentDenominator { den: 2, emax: 8 })
        ));
        assert_eq!(parse_rational("3/6").unwrap(), Rational::new(1, 2));
        assert!(parse_rational("1/0").is_err());
    }
}
