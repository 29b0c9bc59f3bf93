//! Text grammar for polynomials.
//!
//! ```text
//! poly   := ["-"] term (("+" | "-") term)*
//! term   := factor ("*" factor)*
//! factor := (int | ident | "(" poly ")") ["^" int]
//! ```
//! Whitespace is allowed between tokens. Coefficients are reduced mod p.

use super::monomial::Monomial;
use super::poly::Poly;
use super::ring::RingRef;
use crate::error::{Error, Result};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            line: 1,
            col: self.pos + 1,
            msg: msg.into(),
        }
    }

    fn integer(&mut self) -> Result<u128> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse::<u128>()
            .map_err(|_| Error::Parse {
                line: 1,
                col: start + 1,
                msg: "integer too large".into(),
            })
    }

    fn ident(&mut self) -> Result<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        if start == self.pos || self.src[start].is_ascii_digit() {
            return Err(self.err("expected a variable name"));
        }
        Ok((start, std::str::from_utf8(&self.src[start..self.pos]).unwrap()))
    }
}

/// Parses `text` as a polynomial of `ring`.
pub fn parse_poly(ring: &RingRef, text: &str) -> Result<Poly> {
    let mut cur = Cursor {
        src: text.as_bytes(),
        pos: 0,
    };
    let f = expr(&mut cur, ring)?;
    match cur.peek() {
        None => Ok(f),
        Some(c) => Err(cur.err(format!("unexpected character `{}`", c as char))),
    }
}

fn expr(cur: &mut Cursor<'_>, ring: &RingRef) -> Result<Poly> {
    let mut negative = cur.eat(b'-');
    if !negative {
        cur.eat(b'+');
    }
    let mut acc = Poly::zero(ring);
    loop {
        let t = term(cur, ring)?;
        acc = if negative { acc.checked_sub(&t)? } else { acc.checked_add(&t)? };
        if cur.eat(b'+') {
            negative = false;
        } else if cur.eat(b'-') {
            negative = true;
        } else {
            return Ok(acc);
        }
    }
}

fn term(cur: &mut Cursor<'_>, ring: &RingRef) -> Result<Poly> {
    let mut acc = factor(cur, ring)?;
    while cur.eat(b'*') {
        let f = factor(cur, ring)?;
        acc = if f.is_monomial() && !f.is_zero() {
            let t = &f.terms()[0];
            acc.mul_term(&t.mono, t.coeff)?
        } else {
            acc.checked_mul(&f)?
        };
    }
    Ok(acc)
}

fn factor(cur: &mut Cursor<'_>, ring: &RingRef) -> Result<Poly> {
    let base = match cur.peek() {
        Some(b'(') => {
            cur.pos += 1;
            let inner = expr(cur, ring)?;
            if !cur.eat(b')') {
                return Err(cur.err("expected `)`"));
            }
            inner
        }
        Some(c) if c.is_ascii_digit() => {
            let n = cur.integer()? % ring.p() as u128;
            Poly::constant(ring, n as i64)
        }
        _ => {
            let (col, name) = cur.ident()?;
            let idx = ring.var_index(name).ok_or_else(|| Error::Parse {
                line: 1,
                col: col + 1,
                msg: format!("unknown variable `{name}`"),
            })?;
            Poly::monomial(ring, Monomial::var(idx), 1)
        }
    };
    if !cur.eat(b'^') {
        return Ok(base);
    }
    let k = u32::try_from(cur.integer()?).map_err(|_| cur.err("exponent too large"))?;
    if base.is_monomial() && !base.is_zero() {
        let t = &base.terms()[0];
        let c = ring.field().pow(t.coeff, k as u64);
        return Ok(Poly::monomial(ring, t.mono.checked_pow(k as u64)?, c));
    }
    base.checked_pow(k as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{MonomialOrder, Ring};

    #[test]
    fn parses_and_prints_canonically() {
        let r = Ring::new(2, &["a", "b", "c"], MonomialOrder::GrevLex).unwrap();
        let f = parse_poly(&r, "a*c^2 + b^2").unwrap();
        assert_eq!(f.to_string(), "a*c^2 + b^2");
        let g = parse_poly(&r, "b^2 - a*c^2 + 3").unwrap();
        assert_eq!(g.to_string(), "a*c^2 + b^2 + 1");
        let r7 = Ring::new(7, &["x", "y"], MonomialOrder::GrevLex).unwrap();
        assert_eq!(parse_poly(&r7, "-x*y - 8").unwrap().to_string(), "6*x*y + 6");
        assert_eq!(parse_poly(&r7, "x*x").unwrap().to_string(), "x^2");
        assert!(parse_poly(&r7, "7*x").unwrap().is_zero());
        let h = parse_poly(&r7, "x*(x + y)^2 - 2*(x*y)^2").unwrap();
        assert_eq!(h.to_string(), "5*x^2*y^2 + x^3 + 2*x^2*y + x*y^2");
    }

    #[test]
    fn reports_columns() {
        let r = Ring::new(3, &["x", "y"], MonomialOrder::GrevLex).unwrap();
        match parse_poly(&r, "x + z") {
            Err(Error::Parse { col, .. }) => assert_eq!(col, 5),
            other => panic!("{other:?}"),
        }
        assert!(parse_poly(&r, "x y").is_err());
        assert!(parse_poly(&r, "x^").is_err());
        assert!(parse_poly(&r, "").is_err());
        assert!(parse_poly(&r, "(x + y").is_err());
    }
}
