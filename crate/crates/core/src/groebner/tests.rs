use super::*;
use crate::algebra::{parse_poly, MonomialOrder, Ring, RingRef};
use crate::error::Error;

fn ring(p: u64, vars: &[&str]) -> RingRef {
    Ring::new(p, vars, MonomialOrder::GrevLex).unwrap()
}

fn ideal(r: &RingRef, gens: &[&str]) -> Ideal {
    Ideal::new(r, gens.iter().map(|g| parse_poly(r, g).unwrap()).collect()).unwrap()
}

fn gb_text(i: &Ideal) -> String {
    i.canonical_string().unwrap()
}

#[test]
fn small_bases() {
    let r = ring(7, &["x", "y"]);
    assert_eq!(gb_text(&ideal(&r, &["x^2", "x*y"])), "(x*y, x^2)");
    assert_eq!(gb_text(&ideal(&r, &["x + y", "x"])), "(y, x)");
    assert_eq!(gb_text(&ideal(&r, &["x", "1 + x"])), "(1)");
    assert_eq!(gb_text(&Ideal::zero(&r)), "(0)");
}

#[test]
fn twisted_cubic_elimination_lex() {
    let r = Ring::new(5, &["x", "y", "z"], MonomialOrder::Lex).unwrap();
    let i = ideal(&r, &["x^2 - y", "x^3 - z"]);
    let target = parse_poly(&r, "y^3 - z^2").unwrap();
    assert!(i.groebner().unwrap().contains(&target));
    let e = i.eliminate(&[0]).unwrap();
    assert!(e.equals(&Ideal::principal(&target)).unwrap());
}

#[test]
fn normal_forms() {
    let r = ring(3, &["x", "y"]);
    let i = ideal(&r, &["x"]);
    assert!(i.normal_form(&parse_poly(&r, "x^2").unwrap()).unwrap().is_zero());
    assert_eq!(i.normal_form(&parse_poly(&r, "y").unwrap()).unwrap().to_string(), "y");
    let h = ideal(&r, &["x^2*y + y^3"]);
    assert!(h.contains_poly(&parse_poly(&r, "x^2*y + y^3").unwrap()).unwrap());
}

#[test]
fn sums_products_containment() {
    let r = ring(2, &["x", "y"]);
    let x = ideal(&r, &["x"]);
    let y = ideal(&r, &["y"]);
    assert!(x.sum(&y).unwrap().equals(&ideal(&r, &["x", "y"])).unwrap());
    assert!(x.product(&y).unwrap().equals(&ideal(&r, &["x*y"])).unwrap());
    assert!(ideal(&r, &["x", "y"]).contains(&ideal(&r, &["x^2 + x*y"])).unwrap());
}

#[test]
fn intersections() {
    let r = ring(3, &["x", "y"]);
    let cases = [
        (vec!["x"], vec!["y"], vec!["x*y"]),
        (vec!["x", "y"], vec!["x"], vec!["x"]),
        (vec!["x^2", "y"], vec!["x"], vec!["x^2", "x*y"]),
    ];
    for (a, b, c) in cases {
        let got = ideal(&r, &a).intersect(&ideal(&r, &b)).unwrap();
        assert!(got.equals(&ideal(&r, &c)).unwrap(), "{a:?} ∩ {b:?} = {got}");
    }
}

#[test]
fn colons() {
    let r = ring(2, &["x", "y", "z"]);
    let c = ideal(&r, &["x^2"]).colon(&ideal(&r, &["x"])).unwrap();
    assert!(c.equals(&ideal(&r, &["x"])).unwrap());
    let c = ideal(&r, &["x^2", "y^2"]).colon(&ideal(&r, &["x*y"])).unwrap();
    assert!(c.equals(&ideal(&r, &["x", "y"])).unwrap());
    let h = parse_poly(&r, "x^3 + y^3 + z^3").unwrap();
    let c = Ideal::principal(&h.checked_pow(2).unwrap())
        .colon(&Ideal::principal(&h))
        .unwrap();
    assert!(c.equals(&Ideal::principal(&h)).unwrap());
    // colon by the zero ideal is everything
    assert!(ideal(&r, &["x"]).colon(&Ideal::zero(&r)).unwrap().is_unit().unwrap());
}

#[test]
fn elimination_saturation_radical() {
    let r = ring(5, &["t", "x", "y"]);
    let e = ideal(&r, &["t*x", "y - t*y"]).eliminate(&[0]).unwrap();
    assert!(e.equals(&ideal(&r, &["x*y"])).unwrap());
    let s = ideal(&r, &["x^2*y"]).saturate(&parse_poly(&r, "x").unwrap()).unwrap();
    assert!(s.equals(&ideal(&r, &["y"])).unwrap());
    assert!(ideal(&r, &["x^2"]).radical_member(&parse_poly(&r, "x").unwrap()).unwrap());
    assert!(!ideal(&r, &["x^2"]).radical_member(&parse_poly(&r, "y").unwrap()).unwrap());
}

#[test]
fn dimension_and_height() {
    let r = ring(2, &["a", "b", "c", "d"]);
    let cone = ideal(&r, &["a*c - b^2", "b*d - c^2", "a*d - b*c"]);
    assert_eq!(cone.dimension().unwrap(), Some(2));
    assert_eq!(cone.height().unwrap(), Some(2));
    assert_eq!(Ideal::unit(&r).dimension().unwrap(), None);
}

#[test]
fn minimal_primes() {
    let r = ring(2, &["x", "y"]);
    let texts = |v: Vec<Ideal>| -> Vec<String> { v.iter().map(gb_text).collect() };
    let mp = min_primes_restricted(&ideal(&r, &["x^2*y"]), &[]).unwrap();
    assert_eq!(texts(mp), vec!["(x)", "(y)"]);
    let mp = min_primes_restricted(&ideal(&r, &["x^2*y + x*y^2"]), &[]).unwrap();
    assert_eq!(texts(mp), vec!["(x)", "(y)", "(x + y)"]);
    let r5 = ring(5, &["x", "y"]);
    assert!(matches!(
        min_primes_restricted(&ideal(&r5, &["x^2 + y^3"]), &[]),
        Err(Error::Unsupported(_))
    ));
    // product of points: x^2 - 1 and y over F_5
    let mp = min_primes_restricted(&ideal(&r5, &["x^2 - 1", "y"]), &[]).unwrap();
    assert_eq!(mp.len(), 2);
    // linear part plus a monomial remainder
    let r3 = ring(3, &["x", "y", "z"]);
    let mp = min_primes_restricted(&ideal(&r3, &["x + y", "y*z"]), &[]).unwrap();
    assert_eq!(texts(mp), vec!["(y, x)", "(z, x + y)"]);
    assert!(is_prime(&ideal(&r3, &["x", "y + z"]), &[]).unwrap());
    assert!(!is_prime(&ideal(&r3, &["x^2"]), &[]).unwrap());
}

#[test]
fn budget_is_reported() {
    let r = ring(32003, &["x", "y", "z", "w"]);
    r.context().set_budget(3);
    let i = ideal(
        &r,
        &["x^3 + y^2*z + w", "x*y*z - w^3 + 1", "y^4 - x*z*w + x", "z^3 - y*w + x^2"],
    );
    assert!(matches!(i.groebner(), Err(Error::BudgetExceeded { limit: 3 })));
}

#[test]
fn hilbert_counts() {
    let r = ring(2, &["x", "y"]);
    let i = ideal(&r, &["x^2", "y^2"]);
    assert_eq!(i.standard_monomial_count(0).unwrap(), 1);
    assert_eq!(i.standard_monomial_count(1).unwrap(), 2);
    assert_eq!(i.standard_monomial_count(2).unwrap(), 1);
    assert_eq!(i.standard_monomial_count(3).unwrap(), 0);
}

#[test]
fn lex_by_order_change_matches_direct() {
    let cases: [&[&str]; 3] = [
        &["x^2 + y*z + 1", "y^2 - x*z", "z^2 + x + y"],
        &["x*y - 1", "y^2 + x + z", "z^3 - x"],
        &["x^3 - 2*y", "y^2 - z", "x*z + y*z"],
    ];
    for gens in cases {
        let r = Ring::new(7, &["x", "y", "z"], MonomialOrder::Lex).unwrap();
        let i = ideal(&r, gens);
        let (direct, _) = super::buchberger::reduced_groebner(&r, i.gens()).unwrap();
        assert_eq!(i.groebner().unwrap(), direct.as_slice(), "{gens:?}");
    }
}
