//! Functions `(a(x) + b(x) y)/c(x)` on a hyperelliptic curve, reduced with
//! `y^2 = f - h y`, together with their valuations and divisors.

mod divisor;
pub(crate) mod text;
#[cfg(test)]
mod tests;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::curve::{AffinePoint, HyperellipticCurve};
use crate::extension::Embedding;
use crate::field::FieldElement;
use crate::poly::Polynomial;
use crate::series::Series;

pub use divisor::{splitting_embedding, Divisor, DEFAULT_MAX_EXTENSION};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FunctionFieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("the zero function has no valuation or divisor")]
    ZeroFunction,
    #[error("point {0} is not on the curve")]
    PointNotOnCurve(String),
    #[error("support does not split over an extension of degree <= {max_degree}; irreducible factor {factor} of degree {degree}")]
    NonSplitSupport { factor: String, degree: usize, max_degree: usize },
    #[error("function has a pole at {0}")]
    Pole(String),
    #[error("operands live on different curves")]
    CurveMismatch,
    #[error("cannot parse function: {0}")]
    Parse(String),
}

/// An element `(a + b y)/c` with `c` monic and `gcd(a, b, c) = 1`.
#[derive(Clone, PartialEq, Eq)]
pub struct FunctionFieldElement {
    curve: HyperellipticCurve,
    a: Polynomial,
    b: Polynomial,
    c: Polynomial,
}

impl FunctionFieldElement {
    pub fn new(
        curve: &HyperellipticCurve,
        a: Polynomial,
        b: Polynomial,
        c: Polynomial,
    ) -> Result<FunctionFieldElement, FunctionFieldError> {
        let field = curve.field();
        if a.field() != field || b.field() != field || c.field() != field {
            return Err(FunctionFieldError::CurveMismatch);
        }
        if c.is_zero() {
            return Err(FunctionFieldError::DivisionByZero);
        }
        Ok(FunctionFieldElement::canonical(curve.clone(), a, b, c))
    }

    fn canonical(curve: HyperellipticCurve, a: Polynomial, b: Polynomial, c: Polynomial) -> FunctionFieldElement {
        if a.is_zero() && b.is_zero() {
            let c = Polynomial::one(curve.field());
            return FunctionFieldElement { curve, a, b, c };
        }
        let g = a.gcd(&b).gcd(&c);
        let (a, b, c) = if g.is_one() {
            (a, b, c)
        } else {
            (a.div_exact(&g).unwrap(), b.div_exact(&g).unwrap(), c.div_exact(&g).unwrap())
        };
        let lc = c.leading_coefficient().expect("nonzero denominator");
        if lc.is_one() {
            return FunctionFieldElement { curve, a, b, c };
        }
        let s = lc.inv().expect("nonzero");
        FunctionFieldElement { curve, a: a.scale(&s), b: b.scale(&s), c: c.scale(&s) }
    }

    pub fn from_polynomial(curve: &HyperellipticCurve, a: Polynomial) -> FunctionFieldElement {
        let field = curve.field();
        FunctionFieldElement::canonical(curve.clone(), a, Polynomial::zero(field), Polynomial::one(field))
    }

    pub fn constant(curve: &HyperellipticCurve, c: &FieldElement) -> FunctionFieldElement {
        FunctionFieldElement::from_polynomial(curve, Polynomial::constant(c))
    }

    pub fn zero(curve: &HyperellipticCurve) -> FunctionFieldElement {
        FunctionFieldElement::from_polynomial(curve, Polynomial::zero(curve.field()))
    }

    pub fn one(curve: &HyperellipticCurve) -> FunctionFieldElement {
        FunctionFieldElement::from_polynomial(curve, Polynomial::one(curve.field()))
    }

    pub fn x(curve: &HyperellipticCurve) -> FunctionFieldElement {
        FunctionFieldElement::from_polynomial(curve, Polynomial::x(curve.field()))
    }

    pub fn y(curve: &HyperellipticCurve) -> FunctionFieldElement {
        let field = curve.field();
        FunctionFieldElement::canonical(curve.clone(), Polynomial::zero(field), Polynomial::one(field), Polynomial::one(field))
    }

    pub fn curve(&self) -> &HyperellipticCurve {
        &self.curve
    }

    pub fn num_a(&self) -> &Polynomial {
        &self.a
    }

    pub fn num_b(&self) -> &Polynomial {
        &self.b
    }

    pub fn den(&self) -> &Polynomial {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_one()
    }

    fn check_curve(&self, other: &FunctionFieldElement) -> Result<(), FunctionFieldError> {
        if self.curve == other.curve {
            Ok(())
        } else {
            Err(FunctionFieldError::CurveMismatch)
        }
    }

    pub fn try_add(&self, other: &FunctionFieldElement) -> Result<FunctionFieldElement, FunctionFieldError> {
        self.check_curve(other)?;
        if self.c == other.c {
            return Ok(FunctionFieldElement::canonical(self.curve.clone(), &self.a + &other.a, &self.b + &other.b, self.c.clone()));
        }
        let a = &(&self.a * &other.c) + &(&other.a * &self.c);
        let b = &(&self.b * &other.c) + &(&other.b * &self.c);
        Ok(FunctionFieldElement::canonical(self.curve.clone(), a, b, &self.c * &other.c))
    }

    pub fn try_mul(&self, other: &FunctionFieldElement) -> Result<FunctionFieldElement, FunctionFieldError> {
        self.check_curve(other)?;
        let bb = &self.b * &other.b;
        let a = &(&self.a * &other.a) + &(&bb * self.curve.f());
        let b = &(&(&self.a * &other.b) + &(&other.a * &self.b)) - &(&bb * self.curve.h());
        Ok(FunctionFieldElement::canonical(self.curve.clone(), a, b, &self.c * &other.c))
    }

    pub fn inv(&self) -> Result<FunctionFieldElement, FunctionFieldError> {
        if self.is_zero() {
            return Err(FunctionFieldError::DivisionByZero);
        }
        let n = self.norm_numerator();
        let conj_a = &self.a - &(&self.b * self.curve.h());
        let conj_b = -&self.b;
        Ok(FunctionFieldElement::canonical(self.curve.clone(), &conj_a * &self.c, &conj_b * &self.c, n))
    }

    pub fn try_div(&self, other: &FunctionFieldElement) -> Result<FunctionFieldElement, FunctionFieldError> {
        self.try_mul(&other.inv()?)
    }

    pub fn scale(&self, s: &FieldElement) -> FunctionFieldElement {
        FunctionFieldElement::canonical(self.curve.clone(), self.a.scale(s), self.b.scale(s), self.c.clone())
    }

    pub fn mul_polynomial(&self, p: &Polynomial) -> FunctionFieldElement {
        FunctionFieldElement::canonical(self.curve.clone(), &self.a * p, &self.b * p, self.c.clone())
    }

    pub fn div_polynomial(&self, p: &Polynomial) -> Result<FunctionFieldElement, FunctionFieldError> {
        if p.is_zero() {
            return Err(FunctionFieldError::DivisionByZero);
        }
        Ok(FunctionFieldElement::canonical(self.curve.clone(), self.a.clone(), self.b.clone(), &self.c * p))
    }

    pub fn pow(&self, n: u32) -> FunctionFieldElement {
        let mut acc = FunctionFieldElement::one(&self.curve);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Image under the hyperelliptic involution `y -> -y - h`.
    pub fn conjugate(&self) -> FunctionFieldElement {
        let a = &self.a - &(&self.b * self.curve.h());
        FunctionFieldElement::canonical(self.curve.clone(), a, -&self.b, self.c.clone())
    }

    /// `a^2 - a b h - b^2 f`, the norm of the numerator.
    pub fn norm_numerator(&self) -> Polynomial {
        let (a, b) = (&self.a, &self.b);
        &(&(a * a) - &(&(a * b) * self.curve.h())) - &(&(b * b) * self.curve.f())
    }

    /// `F * conj(F)` as (numerator, denominator) in `x` alone.
    pub fn norm(&self) -> (Polynomial, Polynomial) {
        (self.norm_numerator(), &self.c * &self.c)
    }

    /// Valuation at Ω: `2 deg c - max(2 deg a, 2 deg b + d)`.
    pub fn v_infinity(&self) -> Result<i64, FunctionFieldError> {
        if self.is_zero() {
            return Err(FunctionFieldError::ZeroFunction);
        }
        let d = self.curve.degree() as i64;
        let pole_a = if self.a.is_zero() { i64::MIN } else { 2 * self.a.deg() };
        let pole_b = if self.b.is_zero() { i64::MIN } else { 2 * self.b.deg() + d };
        Ok(2 * self.c.deg() - pole_a.max(pole_b))
    }

    /// Valuation at an affine point of the curve (same field).
    pub fn v_affine(&self, p: &AffinePoint) -> Result<i64, FunctionFieldError> {
        if self.is_zero() {
            return Err(FunctionFieldError::ZeroFunction);
        }
        if !self.curve.on_curve(p) {
            return Err(FunctionFieldError::PointNotOnCurve(p.to_string()));
        }
        let den_order = self.c.root_multiplicity(&p.x) as i64;
        let weierstrass = self.curve.opposite_unchecked(p) == *p;
        if weierstrass {
            let n = self.norm_numerator();
            return Ok(n.root_multiplicity(&p.x) as i64 - 2 * den_order);
        }
        Ok(self.numerator_order_at(p) - den_order)
    }

    /// Order of `a + b y` at a non-Weierstrass point, through the expansion of `y` in `x - x0`.
    fn numerator_order_at(&self, p: &AffinePoint) -> i64 {
        if self.b.is_zero() {
            return self.a.root_multiplicity(&p.x) as i64;
        }
        let max_deg = [self.a.deg(), self.b.deg(), self.curve.f().deg()].into_iter().max().unwrap().max(0) as usize;
        let mut precision = 2 * max_deg + 2;
        loop {
            let y = y_expansion(&self.curve, p, precision);
            let a = Series::from_polynomial(&self.a.taylor_shift(&p.x), precision);
            let b = Series::from_polynomial(&self.b.taylor_shift(&p.x), precision);
            if let Some(order) = a.add(&b.mul(&y)).order() {
                return order as i64;
            }
            precision *= 2;
        }
    }

    /// Value at an affine point where the function has no pole.
    pub fn eval_at(&self, p: &AffinePoint) -> Result<FieldElement, FunctionFieldError> {
        if !self.curve.on_curve(p) {
            return Err(FunctionFieldError::PointNotOnCurve(p.to_string()));
        }
        let c = self.c.eval(&p.x);
        if !c.is_zero() {
            return Ok(&(&self.a.eval(&p.x) + &(&self.b.eval(&p.x) * &p.y)) / &c);
        }
        match self.v_affine(p)? {
            v if v < 0 => Err(FunctionFieldError::Pole(p.to_string())),
            v if v > 0 => Ok(self.curve.field().zero()),
            _ => Ok(self.leading_term_at(p)),
        }
    }

    /// Constant term of the local expansion at a point where the valuation is zero.
    fn leading_term_at(&self, p: &AffinePoint) -> FieldElement {
        let max_deg = [self.a.deg(), self.b.deg(), self.c.deg(), self.curve.f().deg()].into_iter().max().unwrap().max(0);
        let precision = 4 * max_deg as usize + 4;
        let (xs, ys) = local_expansion(&self.curve, p, precision);
        let num = xs.substitute_into(&self.a).add(&xs.substitute_into(&self.b).mul(&ys));
        let den = xs.substitute_into(&self.c);
        let k = den.order().expect("denominator is nonzero");
        debug_assert_eq!(num.order(), Some(k));
        num.coeff(k) / den.coeff(k)
    }

    /// The same function read on the base change of its curve.
    pub fn base_change(&self, emb: &Embedding, target: &HyperellipticCurve) -> FunctionFieldElement {
        FunctionFieldElement {
            curve: target.clone(),
            a: emb.map_poly(&self.a),
            b: emb.map_poly(&self.b),
            c: emb.map_poly(&self.c),
        }
    }
}

/// Expansion of `y` in the uniformizer `x - x0` at a non-Weierstrass point, by Newton iteration on
/// `G(y) = y^2 + h y - f`.
pub(crate) fn y_expansion(curve: &HyperellipticCurve, p: &AffinePoint, precision: usize) -> Series {
    let h = Series::from_polynomial(&curve.h().taylor_shift(&p.x), precision);
    let f = Series::from_polynomial(&curve.f().taylor_shift(&p.x), precision);
    let two = curve.field().from_i64(2).value();
    let mut y = Series::constant(&p.y, precision);
    let mut correct = 1;
    while correct < precision {
        let g = y.mul(&y).add(&h.mul(&y)).sub(&f);
        let dg = y.scale(two).add(&h);
        y = y.sub(&g.mul(&dg.inv().expect("non-Weierstrass point")));
        correct *= 2;
    }
    y
}

/// `(x(s), y(s))` in a uniformizer `s` at any affine point: `x = x0 + s` away from Weierstrass points,
/// `y = y0 + s` at them.
pub(crate) fn local_expansion(curve: &HyperellipticCurve, p: &AffinePoint, precision: usize) -> (Series, Series) {
    if curve.opposite_unchecked(p) != *p {
        return (Series::linear(&p.x, precision), y_expansion(curve, p, precision));
    }
    let ys = Series::linear(&p.y, precision);
    let h1 = curve.h().derivative();
    let f1 = curve.f().derivative();
    let mut x = Series::constant(&p.x, precision);
    let mut correct = 1;
    while correct < precision {
        let hx = x.substitute_into(curve.h());
        let fx = x.substitute_into(curve.f());
        let g = ys.mul(&ys).add(&hx.mul(&ys)).sub(&fx);
        let dg = x.substitute_into(&h1).mul(&ys).sub(&x.substitute_into(&f1));
        x = x.sub(&g.mul(&dg.inv().expect("smooth Weierstrass point")));
        correct *= 2;
    }
    (x, ys)
}

impl fmt::Debug for FunctionFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// Pretty form such as `(y + x^6 + 1)/(x^11 + 1)`.
impl fmt::Display for FunctionFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        if !self.b.is_zero() {
            terms.push(if self.b.is_one() {
                "y".to_string()
            } else if self.b.is_constant() || self.b.coefficients().iter().filter(|c| !c.is_zero()).count() == 1 {
                format!("{}*y", self.b)
            } else {
                format!("({})*y", self.b)
            });
        }
        if !self.a.is_zero() || terms.is_empty() {
            terms.push(self.a.to_string());
        }
        let num = terms.join(" + ");
        if self.c.is_one() {
            write!(f, "{num}")
        } else if terms.len() > 1 || self.a.coefficients().iter().filter(|c| !c.is_zero()).count() > 1 {
            write!(f, "({num})/({})", self.c)
        } else {
            write!(f, "{num}/({})", self.c)
        }
    }
}

macro_rules! ff_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl<'a> $trait<&'a FunctionFieldElement> for &'a FunctionFieldElement {
            type Output = FunctionFieldElement;
            fn $method(self, rhs: &'a FunctionFieldElement) -> FunctionFieldElement {
                let op: fn(&FunctionFieldElement, &FunctionFieldElement) -> Result<FunctionFieldElement, FunctionFieldError> = $body;
                op(self, rhs).expect("function field elements on different curves")
            }
        }
        impl $trait<FunctionFieldElement> for FunctionFieldElement {
            type Output = FunctionFieldElement;
            fn $method(self, rhs: FunctionFieldElement) -> FunctionFieldElement {
                (&self).$method(&rhs)
            }
        }
    };
}

ff_binop!(Add, add, |a, b| a.try_add(b));
ff_binop!(Sub, sub, |a, b| a.try_add(&-b));
ff_binop!(Mul, mul, |a, b| a.try_mul(b));

impl Neg for &FunctionFieldElement {
    type Output = FunctionFieldElement;
    fn neg(self) -> FunctionFieldElement {
        FunctionFieldElement { curve: self.curve.clone(), a: -&self.a, b: -&self.b, c: self.c.clone() }
    }
}

impl Neg for FunctionFieldElement {
    type Output = FunctionFieldElement;
    fn neg(self) -> FunctionFieldElement {
        -&self
    }
}
