//! Degree-zero divisors in Mumford form `div(u, v)`, Cantor composition and
//! reduction, and the reduction of arbitrary divisors to `Δ + mΩ + div(ψ)`.

use std::fmt;

use thiserror::Error;

use crate::curve::{AffinePoint, HyperellipticCurve};
use crate::extension::Embedding;
use crate::function_field::{splitting_embedding, Divisor, FunctionFieldElement, FunctionFieldError};
use crate::poly::Polynomial;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DivisorError {
    #[error("u must be monic and nonzero")]
    NonMonicU,
    #[error("deg v = {deg_v} must be below deg u = {deg_u}")]
    DegreeViolation { deg_u: i64, deg_v: i64 },
    #[error("u does not divide v^2 + v h - f")]
    DivisibilityFailure,
    #[error("opposite points {0} and {1} in one Mumford pair")]
    OppositePoints(String, String),
    #[error("Weierstrass point {0} with multiplicity > 1")]
    WeierstrassMultiplicity(String),
    #[error("deg u = {deg} is already <= g = {genus}")]
    AlreadyReduced { deg: usize, genus: usize },
    #[error("point {0} is not on the curve")]
    PointNotOnCurve(String),
    #[error("zero multiplicity for {0}")]
    ZeroMultiplicity(String),
    #[error("operands live on different curves")]
    CurveMismatch,
    #[error(transparent)]
    Function(#[from] FunctionFieldError),
}

/// `Δ = div(u, v)`: the points `(x0, v(x0))` over the roots of `u`, minus `deg u` times Ω.
#[derive(Clone, PartialEq, Eq)]
pub struct MumfordDivisor {
    curve: HyperellipticCurve,
    u: Polynomial,
    v: Polynomial,
}

impl fmt::Debug for MumfordDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "div({}, {})", self.u, self.v)
    }
}

impl fmt::Display for MumfordDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

impl MumfordDivisor {
    pub fn new(curve: &HyperellipticCurve, u: Polynomial, v: Polynomial) -> Result<MumfordDivisor, DivisorError> {
        if u.field() != curve.field() || v.field() != curve.field() {
            return Err(DivisorError::CurveMismatch);
        }
        if !u.is_monic() {
            return Err(DivisorError::NonMonicU);
        }
        if v.deg() >= u.deg() && !v.is_zero() {
            return Err(DivisorError::DegreeViolation { deg_u: u.deg(), deg_v: v.deg() });
        }
        let residual = &(&(&v * &v) + &(&v * curve.h())) - curve.f();
        if !u.divides(&residual) {
            return Err(DivisorError::DivisibilityFailure);
        }
        Ok(MumfordDivisor { curve: curve.clone(), u, v })
    }

    /// The pair `(1, 0)`.
    pub fn zero(curve: &HyperellipticCurve) -> MumfordDivisor {
        let field = curve.field();
        MumfordDivisor { curve: curve.clone(), u: Polynomial::one(field), v: Polynomial::zero(field) }
    }

    /// `P - Ω` as `(x - x0, y0)`.
    pub fn from_point(curve: &HyperellipticCurve, p: &AffinePoint) -> Result<MumfordDivisor, DivisorError> {
        if !curve.on_curve(p) {
            return Err(DivisorError::PointNotOnCurve(p.to_string()));
        }
        Ok(MumfordDivisor { curve: curve.clone(), u: Polynomial::linear(&p.x), v: Polynomial::constant(&p.y) })
    }

    /// `Σ l_i P_i - (Σ l_i) Ω` for pairwise non-opposite points. Multiplicities above one
    /// match `v` against the local expansion of `y` to that order.
    pub fn from_points(curve: &HyperellipticCurve, points: &[(AffinePoint, usize)]) -> Result<MumfordDivisor, DivisorError> {
        let mut merged: Vec<(AffinePoint, usize)> = Vec::new();
        for (p, l) in points {
            if !curve.on_curve(p) {
                return Err(DivisorError::PointNotOnCurve(p.to_string()));
            }
            if *l == 0 {
                return Err(DivisorError::ZeroMultiplicity(p.to_string()));
            }
            match merged.iter_mut().find(|(q, _)| q.x == p.x) {
                Some((q, m)) if q == p => *m += l,
                Some((q, _)) => return Err(DivisorError::OppositePoints(q.to_string(), p.to_string())),
                None => merged.push((p.clone(), *l)),
            }
        }
        let field = curve.field();
        let mut u = Polynomial::one(field);
        let mut v = Polynomial::zero(field);
        for (p, l) in &merged {
            if *l > 1 && curve.opposite_unchecked(p) == *p {
                return Err(DivisorError::WeierstrassMultiplicity(p.to_string()));
            }
            let local = if *l == 1 {
                Polynomial::constant(&p.y)
            } else {
                let series = crate::function_field::y_expansion(curve, p, *l);
                let coeffs: Vec<_> = (0..*l).map(|i| series.coeff(i)).collect();
                Polynomial::from_elements(field, &coeffs).expect("same field").taylor_shift(&-&p.x)
            };
            let modulus = Polynomial::linear(&p.x).pow(*l as u32);
            v = Polynomial::crt(&v, &u, &local, &modulus).expect("distinct abscissae give coprime moduli");
            u = &u * &modulus;
        }
        MumfordDivisor::new(curve, u, v)
    }

    pub fn curve(&self) -> &HyperellipticCurve {
        &self.curve
    }

    pub fn u(&self) -> &Polynomial {
        &self.u
    }

    pub fn v(&self) -> &Polynomial {
        &self.v
    }

    /// `t = deg u`.
    pub fn degree(&self) -> usize {
        self.u.degree().expect("u is nonzero")
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_one()
    }

    pub fn is_reduced(&self) -> bool {
        self.degree() <= self.curve.genus()
    }

    /// Whether a Weierstrass point (`2y + h(x) = 0`) lies in the support.
    pub fn has_ramified_support(&self) -> bool {
        let two_v_h = &(&self.v + &self.v) + self.curve.h();
        !self.u.gcd(&two_v_h).is_one()
    }

    /// `-Δ = div(u, -v - h mod u)`.
    pub fn opposite(&self) -> MumfordDivisor {
        let v = (&(-&self.v) - self.curve.h()).rem(&self.u).expect("u nonzero");
        MumfordDivisor { curve: self.curve.clone(), u: self.u.clone(), v }
    }

    /// Semi-reduced sum: `Δ1 + Δ2 = Δ3 + div(d)`, returned as `(Δ3, d)`.
    pub fn compose(&self, other: &MumfordDivisor) -> Result<(MumfordDivisor, Polynomial), DivisorError> {
        if self.curve != other.curve {
            return Err(DivisorError::CurveMismatch);
        }
        let (u1, v1, u2, v2) = (&self.u, &self.v, &other.u, &other.v);
        let curve = &self.curve;
        let e1 = u1.ext_gcd(u2).expect("u1 nonzero");
        let w = &(v1 + v2) + curve.h();
        let e2 = e1.gcd.ext_gcd(&w).expect("gcd nonzero");
        let d = e2.gcd;
        let s1 = &e2.s * &e1.s;
        let s2 = &e2.s * &e1.t;
        let s3 = e2.t;
        let u3 = (u1 * u2).div_exact(&(&d * &d)).expect("d^2 divides u1 u2");
        let combo = &(&(&(&s1 * u1) * v2) + &(&(&s2 * u2) * v1)) + &(&s3 * &(&(v1 * v2) + curve.f()));
        let v3 = combo.div_exact(&d).expect("d divides the Bezout combination").rem(&u3).expect("u3 nonzero");
        let sum = MumfordDivisor { curve: curve.clone(), u: u3, v: v3 };
        debug_assert!(MumfordDivisor::new(curve, sum.u.clone(), sum.v.clone()).is_ok());
        Ok((sum, d))
    }

    /// One Cantor reduction step: `Δ = Δ' + div(ψ)` with `ψ = (y - v)/u'`, `deg u' < deg u`.
    pub fn cantor_reduce_step(&self) -> Result<(MumfordDivisor, FunctionFieldElement), DivisorError> {
        let g = self.curve.genus();
        if self.degree() <= g {
            return Err(DivisorError::AlreadyReduced { deg: self.degree(), genus: g });
        }
        let curve = &self.curve;
        let (u, v) = (&self.u, &self.v);
        let num = &(curve.f() - &(v * curve.h())) - &(v * v);
        let u_next = num.div_exact(u).expect("u divides f - vh - v^2").monic();
        let v_next = (&(-curve.h()) - v).rem(&u_next).expect("u' nonzero");
        let field = curve.field();
        let psi = FunctionFieldElement::new(curve, -v, Polynomial::one(field), u_next.clone())?;
        Ok((MumfordDivisor { curve: curve.clone(), u: u_next, v: v_next }, psi))
    }

    /// Repeated reduction: `Δ = Δ_red + div(ψ)`.
    pub fn reduce(&self) -> (MumfordDivisor, FunctionFieldElement) {
        let mut psi = FunctionFieldElement::one(&self.curve);
        let mut current = self.clone();
        while !current.is_reduced() {
            let (next, step) = current.cantor_reduce_step().expect("not yet reduced");
            psi = &psi * &step;
            current = next;
        }
        (current, psi)
    }

    /// Reduced sum: `Δ1 + Δ2 = Δ3 + div(ψ)`.
    pub fn add(&self, other: &MumfordDivisor) -> Result<(MumfordDivisor, FunctionFieldElement), DivisorError> {
        let (sum, d) = self.compose(other)?;
        let (reduced, psi) = sum.reduce();
        Ok((reduced, psi.mul_polynomial(&d)))
    }

    pub fn base_change(&self, emb: &Embedding, target: &HyperellipticCurve) -> MumfordDivisor {
        MumfordDivisor { curve: target.clone(), u: emb.map_poly(&self.u), v: emb.map_poly(&self.v) }
    }

    /// Smallest extension (degree at most `max_degree`) over which the support is rational.
    pub fn splitting_embedding(&self, max_degree: usize) -> Result<Embedding, DivisorError> {
        Ok(splitting_embedding(&self.curve, &[&self.u], max_degree)?)
    }

    /// The affine support with multiplicities over the target of `emb`.
    pub fn support(&self, emb: &Embedding) -> Result<Vec<(AffinePoint, usize)>, DivisorError> {
        let u = emb.map_poly(&self.u);
        let v = emb.map_poly(&self.v);
        let roots = u.roots();
        let rational: usize = roots.iter().map(|(_, m)| m).sum();
        if rational != self.degree() {
            return Err(FunctionFieldError::NonSplitSupport {
                factor: self.u.to_string(),
                degree: emb.degree(),
                max_degree: emb.degree(),
            }
            .into());
        }
        Ok(roots.into_iter().map(|(x0, m)| (AffinePoint { y: v.eval(&x0), x: x0 }, m)).collect())
    }

    /// `Δ` as a formal sum over the target of `emb`, including `-t Ω`.
    pub fn to_divisor(&self, emb: &Embedding) -> Result<Divisor, DivisorError> {
        let mut div = Divisor::omega_multiple(emb.target(), -(self.degree() as i64));
        for (p, m) in self.support(emb)? {
            div.add_point(&p, m as i64);
        }
        Ok(div)
    }
}

/// An arbitrary divisor `Σ n_P P + n_Ω Ω` with rational affine points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralDivisor {
    terms: Vec<(AffinePoint, i64)>,
    omega: i64,
}

impl GeneralDivisor {
    /// Repeated points are merged and zero coefficients dropped.
    pub fn new(terms: Vec<(AffinePoint, i64)>, omega: i64) -> GeneralDivisor {
        let mut merged: Vec<(AffinePoint, i64)> = Vec::new();
        for (p, n) in terms {
            match merged.iter_mut().find(|(q, _)| *q == p) {
                Some((_, m)) => *m += n,
                None => merged.push((p, n)),
            }
        }
        merged.retain(|(_, n)| *n != 0);
        GeneralDivisor { terms: merged, omega }
    }

    pub fn terms(&self) -> &[(AffinePoint, i64)] {
        &self.terms
    }

    pub fn omega(&self) -> i64 {
        self.omega
    }

    pub fn degree(&self) -> i64 {
        self.terms.iter().map(|(_, n)| n).sum::<i64>() + self.omega
    }

    pub fn to_divisor(&self, emb: &Embedding) -> Divisor {
        let mut div = Divisor::omega_multiple(emb.target(), self.omega);
        for (p, n) in &self.terms {
            div.add_point(&p.map(emb), *n);
        }
        div
    }
}

/// `D = Δ + mΩ + div(ψ)` with `Δ` reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionResult {
    pub delta: MumfordDivisor,
    pub m: i64,
    pub psi: FunctionFieldElement,
}

impl ReductionResult {
    /// `L(D) -> L(Δ + mΩ)`, `F -> ψ F`.
    pub fn transport(&self, f: &FunctionFieldElement) -> FunctionFieldElement {
        &self.psi * f
    }

    /// `L(Δ + mΩ) -> L(D)`, `G -> G / ψ`.
    pub fn pull_back(&self, g: &FunctionFieldElement) -> FunctionFieldElement {
        g.try_div(&self.psi).expect("ψ is a nonzero function")
    }
}

/// Reduces `D = D1 - D2 + n Ω`: each negative point is traded for its opposite through a
/// vertical line, points are composed one at a time, and Cantor steps bring `deg u` to `<= g`.
pub fn reduce_general(d: &GeneralDivisor, curve: &HyperellipticCurve) -> Result<ReductionResult, DivisorError> {
    let field = curve.field();
    let mut acc = MumfordDivisor::zero(curve);
    let mut composition = Polynomial::one(field);
    let mut steps = FunctionFieldElement::one(curve);
    let mut phi = Polynomial::one(field);
    for (p, n) in d.terms() {
        if !curve.on_curve(p) {
            return Err(DivisorError::PointNotOnCurve(p.to_string()));
        }
        let single = if *n > 0 {
            MumfordDivisor::from_point(curve, p)?
        } else {
            phi = &phi * &Polynomial::linear(&p.x).pow(n.unsigned_abs() as u32);
            MumfordDivisor::from_point(curve, &curve.opposite_unchecked(p))?
        };
        for _ in 0..n.unsigned_abs() {
            let (sum, g) = acc.compose(&single)?;
            composition = &composition * &g;
            acc = sum;
            if !acc.is_reduced() {
                let (next, step) = acc.cantor_reduce_step()?;
                steps = &steps * &step;
                acc = next;
            }
        }
    }
    let psi = steps.mul_polynomial(&composition).div_polynomial(&phi)?;
    Ok(ReductionResult { delta: acc, m: d.degree(), psi })
}
