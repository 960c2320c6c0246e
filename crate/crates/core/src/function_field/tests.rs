use proptest::prelude::*;

use super::*;
use crate::field::Field;

fn gf(p: u64) -> Field {
    Field::prime(p).unwrap()
}

fn poly(f: &Field, c: &[i64]) -> Polynomial {
    Polynomial::from_ints(f, c)
}

fn genus2_gf7() -> HyperellipticCurve {
    let f = gf(7);
    HyperellipticCurve::new(poly(&f, &[1, 0, 0, 0, 0, 1]), Polynomial::zero(&f)).unwrap()
}

fn genus2_gf2() -> HyperellipticCurve {
    let f = gf(2);
    HyperellipticCurve::new(poly(&f, &[1, 0, 0, 0, 0, 1]), poly(&f, &[0, 1])).unwrap()
}

fn genus2_gf5_with_h() -> HyperellipticCurve {
    let f = gf(5);
    (0..5)
        .find_map(|c| HyperellipticCurve::new(poly(&f, &[c, 2, 0, 1, 0, 1]), poly(&f, &[3, 1])).ok())
        .unwrap()
}

fn element(curve: &HyperellipticCurve, a: &[i64], b: &[i64], c: &[i64]) -> FunctionFieldElement {
    let f = curve.field();
    FunctionFieldElement::new(curve, poly(f, a), poly(f, b), poly(f, c)).unwrap()
}

#[test]
fn relation_and_cancellation() {
    for curve in [genus2_gf7(), genus2_gf2(), genus2_gf5_with_h()] {
        let y = FunctionFieldElement::y(&curve);
        let yy = &y * &y;
        assert_eq!(yy.num_a(), curve.f());
        assert_eq!(yy.num_b(), &-curve.h());
        let f = curve.field();
        let u = poly(f, &[3, 0, 1]);
        let v = poly(f, &[1, 1]);
        let psi = FunctionFieldElement::new(&curve, &v + curve.h(), Polynomial::one(f), u.clone()).unwrap();
        let back = psi.mul_polynomial(&u);
        assert_eq!(back, FunctionFieldElement::new(&curve, &v + curve.h(), Polynomial::one(f), Polynomial::one(f)).unwrap());
        assert_eq!(&psi * &FunctionFieldElement::one(&curve), psi);
    }
}

#[test]
fn conjugation() {
    for curve in [genus2_gf7(), genus2_gf2(), genus2_gf5_with_h()] {
        let x = FunctionFieldElement::x(&curve);
        assert_eq!(x.conjugate(), x);
        let y = FunctionFieldElement::y(&curve);
        let expected = &(-&y) - &FunctionFieldElement::from_polynomial(&curve, curve.h().clone());
        assert_eq!(y.conjugate(), expected);
        let g = element(&curve, &[1, 2], &[3], &[1, 0, 1]);
        assert_eq!(g.conjugate().conjugate(), g);
        let (n, d) = g.norm();
        assert_eq!(&g * &g.conjugate(), FunctionFieldElement::new(&curve, n, Polynomial::zero(curve.field()), d).unwrap());
    }
}

#[test]
fn norms() {
    let curve = genus2_gf7();
    let f = curve.field();
    let line = FunctionFieldElement::from_polynomial(&curve, poly(f, &[-3, 1]));
    assert_eq!(line.norm().0, poly(f, &[-3, 1]).pow(2));
    assert_eq!(FunctionFieldElement::y(&curve).norm().0, -curve.f());
}

#[test]
fn inverse_and_zero_division() {
    for curve in [genus2_gf7(), genus2_gf2(), genus2_gf5_with_h()] {
        let g = element(&curve, &[1, 2, 1], &[3, 1], &[2, 0, 1]);
        assert!((&g * &g.inv().unwrap()).is_one());
        assert_eq!(FunctionFieldElement::zero(&curve).inv().unwrap_err(), FunctionFieldError::DivisionByZero);
        let f = curve.field();
        assert_eq!(
            FunctionFieldElement::new(&curve, Polynomial::one(f), Polynomial::zero(f), Polynomial::zero(f)).unwrap_err(),
            FunctionFieldError::DivisionByZero
        );
    }
}

#[test]
fn canonical_form() {
    let curve = genus2_gf7();
    let f = curve.field();
    // (2(x+1) + 2(x+1) y) / (3(x+1)(x+2)) reduces to (1 + y)/(x + 2)
    let g = FunctionFieldElement::new(
        &curve,
        poly(f, &[2, 2]),
        poly(f, &[2, 2]),
        &poly(f, &[3, 3]) * &poly(f, &[2, 1]),
    )
    .unwrap();
    assert_eq!(g.den(), &poly(f, &[2, 1]));
    assert!(g.den().is_monic());
    let third = f.from_i64(3).inv().unwrap();
    assert_eq!(g.num_a(), &Polynomial::constant(&(&f.from_i64(2) * &third)));
}

#[test]
fn infinity_valuations() {
    for curve in [genus2_gf7(), genus2_gf2(), genus2_gf5_with_h()] {
        assert_eq!(FunctionFieldElement::x(&curve).v_infinity().unwrap(), -2);
        assert_eq!(FunctionFieldElement::y(&curve).v_infinity().unwrap(), -(curve.degree() as i64));
        assert_eq!(FunctionFieldElement::zero(&curve).v_infinity().unwrap_err(), FunctionFieldError::ZeroFunction);
        let one = FunctionFieldElement::one(&curve);
        assert_eq!(one.v_infinity().unwrap(), 0);
    }
}

#[test]
fn infinity_parity_on_monomials() {
    let curve = genus2_gf7();
    let f = curve.field();
    for i in 0..8 {
        let xi = FunctionFieldElement::from_polynomial(&curve, Polynomial::monomial(&f.one(), i));
        assert_eq!(xi.v_infinity().unwrap().rem_euclid(2), 0);
        let xiy = &xi * &FunctionFieldElement::y(&curve);
        assert_eq!(xiy.v_infinity().unwrap().rem_euclid(2), 1);
        assert_eq!(xiy.v_infinity().unwrap(), -(2 * i as i64) - 5);
    }
}

#[test]
fn uniformizer_valuations() {
    for curve in [genus2_gf7(), genus2_gf2(), genus2_gf5_with_h()] {
        for p in curve.enumerate_points().unwrap() {
            let line = FunctionFieldElement::from_polynomial(&curve, Polynomial::linear(&p.x));
            let expected = if curve.is_weierstrass(&p).unwrap() { 2 } else { 1 };
            assert_eq!(line.v_affine(&p).unwrap(), expected, "{p}");
        }
    }
    let curve = genus2_gf7();
    let off = AffinePoint::from_ints(curve.field(), 1, 1);
    assert!(matches!(FunctionFieldElement::x(&curve).v_affine(&off), Err(FunctionFieldError::PointNotOnCurve(_))));
}

#[test]
fn divisors_of_simple_functions() {
    let curve = genus2_gf7();
    let f = curve.field();
    for p in curve.enumerate_points().unwrap() {
        let line = FunctionFieldElement::from_polynomial(&curve, Polynomial::linear(&p.x));
        let (emb, div) = line.divisor_of(DEFAULT_MAX_EXTENSION).unwrap();
        assert!(emb.is_identity());
        let mut expected = Divisor::omega_multiple(f, -2);
        expected.add_point(&p, 1);
        expected.add_point(&curve.opposite(&p).unwrap(), 1);
        assert_eq!(div, expected);
    }
    let (_, div) = FunctionFieldElement::constant(&curve, &f.from_i64(3)).divisor_of(1).unwrap();
    assert!(div.is_zero());
    // y vanishes at the roots of x^5 + 1 = (x + 1)(x^4 - x^3 + x^2 - x + 1); the quartic
    // carries the primitive 10th roots of unity and 7 has order 4 mod 10
    let (emb, div) = FunctionFieldElement::y(&curve).divisor_of(DEFAULT_MAX_EXTENSION).unwrap();
    assert_eq!(emb.degree(), 4);
    assert_eq!(div.omega(), -5);
    assert!(div.terms().iter().all(|(_, n)| *n == 1));
    assert_eq!(div.terms().len(), 5);
}

#[test]
fn non_split_support_is_reported() {
    let curve = genus2_gf7();
    let f = curve.field();
    // x^5 - 2 over GF(7): an irreducible quintic factor needs degree 5 > 4
    let irreducible: Polynomial = (0..7)
        .map(|c| poly(f, &[c, 1, 0, 0, 0, 1]))
        .find(|p| p.is_irreducible())
        .unwrap();
    let g = FunctionFieldElement::from_polynomial(&curve, irreducible.clone());
    match g.divisor_of(4) {
        Err(FunctionFieldError::NonSplitSupport { factor, degree, .. }) => {
            assert_eq!(factor, irreducible.to_string());
            assert_eq!(degree, 5);
        }
        other => panic!("expected NonSplitSupport, got {other:?}"),
    }
}

#[test]
fn removable_singularity_evaluation() {
    let curve = genus2_gf7();
    let f = curve.field();
    for p in curve.enumerate_points().unwrap() {
        if curve.is_weierstrass(&p).unwrap() {
            continue;
        }
        // (y - y0)/(x - x0) at P is dy/dx = f'(x0)/(2 y0)
        let g = FunctionFieldElement::new(&curve, Polynomial::constant(&-&p.y), Polynomial::one(f), Polynomial::linear(&p.x)).unwrap();
        let expected = &curve.f().derivative().eval(&p.x) / &(&f.from_i64(2) * &p.y);
        assert_eq!(g.eval_at(&p).unwrap(), expected);
        let pole = FunctionFieldElement::new(&curve, Polynomial::one(f), Polynomial::zero(f), Polynomial::linear(&p.x)).unwrap();
        assert!(matches!(pole.eval_at(&p), Err(FunctionFieldError::Pole(_))));
    }
}

#[test]
fn weierstrass_removable_evaluation() {
    // at a Weierstrass point W = (x0, 0), y^2/(x - x0) reduces to a polynomial, while
    // (x - x0)/y has valuation 1 and so vanishes
    let curve = genus2_gf7();
    let f = curve.field();
    let w = AffinePoint::from_ints(f, 6, 0);
    assert!(curve.is_weierstrass(&w).unwrap());
    let g = FunctionFieldElement::from_polynomial(&curve, Polynomial::linear(&w.x)).try_div(&FunctionFieldElement::y(&curve)).unwrap();
    assert_eq!(g.v_affine(&w).unwrap(), 1);
    assert!(g.eval_at(&w).unwrap().is_zero());
    // y / (x - x0) * y = f/(x - x0): value f'(x0)
    let q = FunctionFieldElement::y(&curve).try_div(&FunctionFieldElement::from_polynomial(&curve, Polynomial::linear(&w.x))).unwrap();
    let r = &q * &FunctionFieldElement::y(&curve);
    assert_eq!(r.eval_at(&w).unwrap(), curve.f().derivative().eval(&w.x));
}

fn arb_poly(p: u64, max_len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(0..p as i64, 0..=max_len)
}

fn arb_element(which: usize) -> impl Strategy<Value = (usize, Vec<i64>, Vec<i64>, Vec<i64>)> {
    let p = [7u64, 2, 5][which];
    (Just(which), arb_poly(p, 4), arb_poly(p, 3), arb_poly(p, 3))
}

fn build(which: usize, a: &[i64], b: &[i64], c: &[i64]) -> Option<FunctionFieldElement> {
    let curve = [genus2_gf7(), genus2_gf2(), genus2_gf5_with_h()][which].clone();
    let f = curve.field().clone();
    let c = if poly(&f, c).is_zero() { vec![1] } else { c.to_vec() };
    let g = FunctionFieldElement::new(&curve, poly(&f, a), poly(&f, b), poly(&f, &c)).ok()?;
    (!g.is_zero()).then_some(g)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn valuations_are_additive(which in 0usize..3, (_, a1, b1, c1) in arb_element(0), (_, a2, b2, c2) in arb_element(0)) {
        let p = [7i64, 2, 5][which];
        let reduce = |v: &[i64]| v.iter().map(|c| c.rem_euclid(p)).collect::<Vec<_>>();
        let (Some(g1), Some(g2)) = (build(which, &reduce(&a1), &reduce(&b1), &reduce(&c1)), build(which, &reduce(&a2), &reduce(&b2), &reduce(&c2))) else {
            return Ok(());
        };
        let prod = &g1 * &g2;
        prop_assert_eq!(prod.v_infinity().unwrap(), g1.v_infinity().unwrap() + g2.v_infinity().unwrap());
        for pt in g1.curve().enumerate_points().unwrap() {
            prop_assert_eq!(prod.v_affine(&pt).unwrap(), g1.v_affine(&pt).unwrap() + g2.v_affine(&pt).unwrap());
        }
    }

    #[test]
    fn principal_divisors_have_degree_zero((which, a, b, c) in (0usize..3).prop_flat_map(arb_element)) {
        let Some(g) = build(which, &a, &b, &c) else { return Ok(()) };
        match g.divisor_of(DEFAULT_MAX_EXTENSION) {
            Ok((_, div)) => prop_assert_eq!(div.degree(), 0),
            Err(FunctionFieldError::NonSplitSupport { .. }) => {}
            Err(e) => prop_assert!(false, "{e}"),
        }
    }

    #[test]
    fn fibre_sums_match_norm_orders((which, a, b, c) in (0usize..3).prop_flat_map(arb_element)) {
        let Some(g) = build(which, &a, &b, &c) else { return Ok(()) };
        let curve = g.curve().clone();
        let (num, den) = g.norm();
        for x0 in curve.field().elements() {
            let fibre = curve.points_above(&x0);
            if fibre.is_empty() {
                continue;
            }
            // a ramified point counts once: v_W(F) = v_W(N)/2 = ord_x0(N)
            let total: i64 = fibre.iter().map(|pt| g.v_affine(pt).unwrap()).sum();
            let expected = num.root_multiplicity(&x0) as i64 - den.root_multiplicity(&x0) as i64;
            prop_assert_eq!(total, expected);
        }
    }

    #[test]
    fn evaluation_is_multiplicative((which, a, b, c) in (0usize..3).prop_flat_map(arb_element), (_, a2, b2, c2) in arb_element(0)) {
        let p = [7i64, 2, 5][which];
        let reduce = |v: &[i64]| v.iter().map(|c| c.rem_euclid(p)).collect::<Vec<_>>();
        let (Some(g1), Some(g2)) = (build(which, &a, &b, &c), build(which, &reduce(&a2), &reduce(&b2), &reduce(&c2))) else {
            return Ok(());
        };
        let prod = &g1 * &g2;
        for pt in g1.curve().enumerate_points().unwrap() {
            if g1.v_affine(&pt).unwrap() >= 0 && g2.v_affine(&pt).unwrap() >= 0 {
                prop_assert_eq!(prod.eval_at(&pt).unwrap(), &g1.eval_at(&pt).unwrap() * &g2.eval_at(&pt).unwrap());
            }
        }
    }
}
