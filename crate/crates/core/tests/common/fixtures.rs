//! Seeded random curves, divisors and code data.

use mumford_rr::{AffinePoint, Field, FieldElement, GeneralDivisor, HyperellipticCurve, MumfordDivisor, Polynomial};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_element(field: &Field, rng: &mut ChaCha8Rng) -> FieldElement {
    field.element(rng.gen_range(0..field.order())).unwrap()
}

/// Smooth `y^2 + h y = f` with monic `f` of degree `2g + 1`; `h` is nonzero about half the time.
pub fn random_curve(field: &Field, g: usize, rng: &mut ChaCha8Rng) -> HyperellipticCurve {
    loop {
        let mut f: Vec<FieldElement> = (0..=2 * g).map(|_| random_element(field, rng)).collect();
        f.push(field.one());
        let f = Polynomial::from_elements(field, &f).unwrap();
        let h = if field.characteristic() == 2 || rng.gen_bool(0.5) {
            let dh = rng.gen_range(0..=g);
            let h: Vec<FieldElement> = (0..=dh).map(|_| random_element(field, rng)).collect();
            Polynomial::from_elements(field, &h).unwrap()
        } else {
            Polynomial::zero(field)
        };
        if let Ok(c) = HyperellipticCurve::new(f, h) {
            return c;
        }
    }
}

/// Reduction of a random sum of rational points, some repeated, some Weierstrass.
pub fn random_reduced(curve: &HyperellipticCurve, rng: &mut ChaCha8Rng) -> MumfordDivisor {
    let points = curve.enumerate_points().unwrap();
    let mut acc = MumfordDivisor::zero(curve);
    if points.is_empty() {
        return acc;
    }
    let count = rng.gen_range(0..=curve.genus() + 2);
    for _ in 0..count {
        let p = points.choose(rng).unwrap();
        let d = MumfordDivisor::from_point(curve, p).unwrap();
        acc = acc.add(&d).unwrap().0;
    }
    acc
}

/// A reduced divisor with exactly `t` distinct rational points in its support, if the
/// curve has enough non-opposite points.
pub fn reduced_of_degree(curve: &HyperellipticCurve, t: usize, rng: &mut ChaCha8Rng) -> Option<MumfordDivisor> {
    let mut points = curve.enumerate_points().unwrap();
    points.shuffle(rng);
    let mut chosen: Vec<(AffinePoint, usize)> = Vec::new();
    for p in points {
        if chosen.len() == t {
            break;
        }
        if chosen.iter().all(|(q, _)| q.x != p.x) {
            chosen.push((p, 1));
        }
    }
    (chosen.len() == t).then(|| MumfordDivisor::from_points(curve, &chosen).unwrap())
}

pub fn random_general(curve: &HyperellipticCurve, rng: &mut ChaCha8Rng) -> GeneralDivisor {
    let points = curve.enumerate_points().unwrap();
    if points.is_empty() {
        return GeneralDivisor::new(Vec::new(), rng.gen_range(-2i64..=8));
    }
    let n = rng.gen_range(1..=5);
    let terms = (0..n)
        .map(|_| (points.choose(rng).unwrap().clone(), rng.gen_range(-3i64..=3)))
        .collect();
    GeneralDivisor::new(terms, rng.gen_range(-6i64..=8))
}

pub fn gf(p: u64) -> Field {
    Field::prime(p).unwrap()
}

pub fn poly(field: &Field, coeffs: &[i64]) -> Polynomial {
    Polynomial::from_ints(field, coeffs)
}
