//! Brute-force `dim L(Δ + mΩ)` by linear algebra, sharing no valuation code with the crate.
//!
//! Every `F ∈ L(Δ + mΩ)` has poles only above roots of `u` and at Ω, so `uF = a + b y`
//! with polynomial `a`, `b`. The unknowns are the coefficients of `a` and `b`; the
//! constraints are the Ω condition and vanishing orders read off local power series at
//! each point above a root of `u`, over an extension where all of them are rational.
//! Odd characteristic only.

use mumford_rr::field::FieldElement;
use mumford_rr::{Embedding, HyperellipticCurve, MumfordDivisor, Polynomial};

type Series = Vec<FieldElement>;

fn mul(a: &Series, b: &Series, prec: usize) -> Series {
    let zero = a[0].field().zero();
    let mut out = vec![zero; prec];
    for (i, x) in a.iter().enumerate().take(prec) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(prec - i) {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

fn inverse(a: &Series, prec: usize) -> Series {
    let inv0 = a[0].inv().expect("unit series");
    let mut out = vec![a[0].field().zero(); prec];
    out[0] = inv0.clone();
    for n in 1..prec {
        let mut acc = a[0].field().zero();
        for k in 1..=n.min(a.len() - 1) {
            acc = &acc + &(&a[k] * &out[n - k]);
        }
        out[n] = -(&acc * &inv0);
    }
    out
}

fn pad(mut s: Series, prec: usize) -> Series {
    let zero = s[0].field().zero();
    s.resize(prec, zero);
    s
}

/// `p(s)` by Horner.
fn compose(p: &Polynomial, s: &Series, prec: usize) -> Series {
    let field = s[0].field().clone();
    let mut acc = vec![field.zero(); prec];
    for c in p.coefficients().iter().rev() {
        acc = mul(&acc, s, prec);
        acc[0] = &acc[0] + c;
    }
    acc
}

fn derivative(p: &Polynomial) -> Polynomial {
    let field = p.field().clone();
    let coeffs: Vec<FieldElement> =
        p.coefficients().iter().enumerate().skip(1).map(|(i, c)| c * &field.from_i64(i as i64)).collect();
    if coeffs.is_empty() {
        Polynomial::zero(&field)
    } else {
        Polynomial::from_elements(&field, &coeffs).unwrap()
    }
}

/// `(x(σ), y(σ))` in a uniformizer σ at `(x0, y0)`: `σ = x - x0` off the Weierstrass locus,
/// `σ = y - y0` on it.
fn local_coordinates(f: &Polynomial, h: &Polynomial, x0: &FieldElement, y0: &FieldElement, prec: usize) -> (Series, Series) {
    let field = x0.field().clone();
    let shift = pad(vec![x0.clone(), field.one()], prec);
    let two = field.from_i64(2);
    let slope = &(&two * y0) + &h.eval(x0);
    if !slope.is_zero() {
        // y^2 + h y = f coefficient by coefficient
        let fs = compose(f, &shift, prec);
        let hs = compose(h, &shift, prec);
        let mut y = vec![field.zero(); prec];
        y[0] = y0.clone();
        let inv = slope.inv().unwrap();
        for n in 1..prec {
            let mut rhs = fs[n].clone();
            for i in 1..n {
                rhs = &rhs - &(&y[i] * &y[n - i]);
            }
            for i in 1..=n {
                rhs = &rhs - &(&hs[i] * &y[n - i]);
            }
            y[n] = &rhs * &inv;
        }
        return (shift, y);
    }
    // Newton on R(x) = y^2 + h(x) y - f(x) with y = y0 + s
    let y = pad(vec![y0.clone(), field.one()], prec);
    let (dh, df) = (derivative(h), derivative(f));
    let mut x = pad(vec![x0.clone()], prec);
    for _ in 0..prec + 1 {
        let r = {
            let hy = mul(&compose(h, &x, prec), &y, prec);
            let yy = mul(&y, &y, prec);
            let fx = compose(f, &x, prec);
            (0..prec).map(|i| &(&yy[i] + &hy[i]) - &fx[i]).collect::<Series>()
        };
        let rx = {
            let hy = mul(&compose(&dh, &x, prec), &y, prec);
            let fx = compose(&df, &x, prec);
            (0..prec).map(|i| &hy[i] - &fx[i]).collect::<Series>()
        };
        let step = mul(&r, &inverse(&rx, prec), prec);
        x = (0..prec).map(|i| &x[i] - &step[i]).collect();
    }
    (x, y)
}

fn fibre(f: &Polynomial, h: &Polynomial, x0: &FieldElement) -> Option<Vec<FieldElement>> {
    let field = x0.field();
    let (h0, f0) = (h.eval(x0), f.eval(x0));
    let disc = &(&h0 * &h0) + &(&field.from_i64(4) * &f0);
    let root = disc.sqrt()?;
    let half = field.from_i64(2).inv().unwrap();
    let mut ys = vec![&(&root - &h0) * &half, &(-&(&root + &h0)) * &half];
    ys.dedup();
    Some(ys)
}

/// Smallest extension of degree `<= max_degree` over which `u` splits with rational fibres.
pub fn splitting_extension(curve: &HyperellipticCurve, u: &Polynomial, max_degree: usize) -> Option<Embedding> {
    let field = curve.field();
    let t = u.degree().unwrap_or(0);
    for e in 1..=max_degree {
        let Ok(emb) = field.extension(e) else { break };
        if emb.target().order() > 1 << 36 {
            break;
        }
        let uk = emb.map_poly(u);
        let roots = uk.roots();
        if roots.iter().map(|(_, m)| m).sum::<usize>() != t {
            continue;
        }
        let (fk, hk) = (emb.map_poly(curve.f()), emb.map_poly(curve.h()));
        if roots.iter().all(|(x0, _)| fibre(&fk, &hk, x0).is_some()) {
            return Some(emb);
        }
    }
    None
}

/// `dim L(Δ + mΩ)` for `m >= 0`, or `None` when the support needs too large an extension.
pub fn dimension(curve: &HyperellipticCurve, delta: &MumfordDivisor, m: i64, max_degree: usize) -> Option<usize> {
    let emb = splitting_extension(curve, delta.u(), max_degree)?;
    Some(dimension_over(curve, delta, m, &emb))
}

pub fn dimension_over(curve: &HyperellipticCurve, delta: &MumfordDivisor, m: i64, emb: &Embedding) -> usize {
    let k = emb.target();
    let g = curve.genus() as i64;
    let d = 2 * g + 1;
    let t = delta.degree() as i64;
    // generous bounds; the Ω rows cut them down
    let a_max = (m + 2 * t).div_euclid(2);
    let b_max = (m + 2 * t - d).div_euclid(2);
    let na = (a_max + 1).max(0) as usize;
    let nb = (b_max + 1).max(0) as usize;
    let cols = na + nb;
    if cols == 0 {
        return 0;
    }
    let mut rows: Vec<Vec<FieldElement>> = Vec::new();
    let unit = |j: usize| {
        let mut r = vec![k.zero(); cols];
        r[j] = k.one();
        r
    };
    // v_Ω(a + b y) >= -(m + t): 2 deg a <= m + t and 2 deg b + d <= m + t
    for i in 0..na {
        if 2 * i as i64 > m + t {
            rows.push(unit(i));
        }
    }
    for i in 0..nb {
        if 2 * i as i64 + d > m + t {
            rows.push(unit(na + i));
        }
    }
    let (f, h) = (emb.map_poly(curve.f()), emb.map_poly(curve.h()));
    let (u, v) = (emb.map_poly(delta.u()), emb.map_poly(delta.v()));
    for (x0, e) in u.roots() {
        let on_delta = v.eval(&x0);
        for y0 in fibre(&f, &h, &x0).expect("split fibre") {
            let weierstrass = (&(&y0 + &y0) + &h.eval(&x0)).is_zero();
            let v_u = if weierstrass { 2 * e } else { e };
            let mult = if y0 == on_delta { e } else { 0 };
            let need = v_u - mult;
            if need == 0 {
                continue;
            }
            let (xs, ys) = local_coordinates(&f, &h, &x0, &y0, need);
            let mut columns: Vec<Series> = Vec::with_capacity(cols);
            let mut power = pad(vec![k.one()], need);
            let mut powers = Vec::new();
            for _ in 0..na.max(nb) {
                powers.push(power.clone());
                power = mul(&power, &xs, need);
            }
            columns.extend(powers.iter().take(na).cloned());
            columns.extend(powers.iter().take(nb).map(|p| mul(p, &ys, need)));
            for n in 0..need {
                rows.push(columns.iter().map(|c| c[n].clone()).collect());
            }
        }
    }
    if rows.is_empty() {
        return cols;
    }
    cols - rank(rows)
}

fn rank(mut rows: Vec<Vec<FieldElement>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].inv().unwrap();
        for i in r + 1..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let factor = &rows[i][c] * &inv;
            let pivot = rows[r].clone();
            for (x, p) in rows[i].iter_mut().zip(&pivot).skip(c) {
                *x = &*x - &(&factor * p);
            }
        }
        r += 1;
    }
    r
}
