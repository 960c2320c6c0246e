//! Dense univariate polynomials over a [`Field`].
//!
//! Coefficients are stored constant term first with no trailing zeros; the
//! zero polynomial has an empty coefficient vector and degree `None`, which
//! orders below every `Some(d)`.
//!
//! Monic normalization is never implicit: `mul`, `divmod` and friends leave
//! leading coefficients alone, and callers normalize with [`Polynomial::monic`].

mod factor;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::field::{Field, FieldElement};

pub use factor::IrreducibleComponent;
pub(crate) use factor::lcm;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("gcd of two zero polynomials")]
    BothZero,
    #[error("abscissa {0} appears more than once")]
    DuplicateAbscissa(String),
    #[error("expected {expected} interpolation points, got {got}")]
    WrongPointCount { expected: usize, got: usize },
    #[error("operands belong to different fields")]
    FieldMismatch,
}

#[derive(Clone)]
pub struct Polynomial {
    field: Field,
    coeffs: Vec<u64>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && self.field == other.field
    }
}

impl Eq for Polynomial {}

/// Result of the extended Euclidean algorithm: `s*f + t*g = gcd`, gcd monic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtGcd {
    pub gcd: Polynomial,
    pub s: Polynomial,
    pub t: Polynomial,
}

impl Polynomial {
    pub(crate) fn from_raw(field: &Field, mut coeffs: Vec<u64>) -> Polynomial {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Polynomial { field: field.clone(), coeffs }
    }

    pub(crate) fn coeffs_raw(&self) -> &[u64] {
        &self.coeffs
    }

    pub(crate) fn coeff_raw(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn zero(field: &Field) -> Polynomial {
        Polynomial { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &Field) -> Polynomial {
        Polynomial { field: field.clone(), coeffs: vec![1] }
    }

    /// The polynomial `x`.
    pub fn x(field: &Field) -> Polynomial {
        Polynomial { field: field.clone(), coeffs: vec![0, 1] }
    }

    pub fn constant(c: &FieldElement) -> Polynomial {
        Polynomial::from_raw(c.field(), vec![c.value()])
    }

    /// `c * x^degree`.
    pub fn monomial(c: &FieldElement, degree: usize) -> Polynomial {
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = c.value();
        Polynomial::from_raw(c.field(), coeffs)
    }

    /// `x - a`.
    pub fn linear(a: &FieldElement) -> Polynomial {
        Polynomial::from_raw(a.field(), vec![a.field().neg(a.value()), 1])
    }

    /// From ascending coefficients; every coefficient must live in `field`.
    pub fn from_elements(field: &Field, coeffs: &[FieldElement]) -> Result<Polynomial, PolyError> {
        if coeffs.iter().any(|c| c.field() != field) {
            return Err(PolyError::FieldMismatch);
        }
        Ok(Polynomial::from_raw(field, coeffs.iter().map(|c| c.value()).collect()))
    }

    /// From ascending integer coefficients, mapped into the prime subfield.
    pub fn from_ints(field: &Field, coeffs: &[i64]) -> Polynomial {
        Polynomial::from_raw(field, coeffs.iter().map(|&c| field.int(c)).collect())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree as a signed integer with `-1` for zero; handy in inequalities.
    pub fn deg(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.field.wrap(self.coeff_raw(i))
    }

    pub fn coefficients(&self) -> Vec<FieldElement> {
        self.coeffs.iter().map(|&c| self.field.wrap(c)).collect()
    }

    pub fn leading_coefficient(&self) -> Option<FieldElement> {
        self.coeffs.last().map(|&c| self.field.wrap(c))
    }

    fn assert_same_field(&self, other: &Polynomial) {
        assert!(self.field == other.field, "polynomials over different fields");
    }

    pub fn scale(&self, s: &FieldElement) -> Polynomial {
        assert!(s.field() == &self.field, "scalar from a different field");
        self.scale_raw(s.value())
    }

    pub(crate) fn scale_raw(&self, s: u64) -> Polynomial {
        if s == 0 {
            return Polynomial::zero(&self.field);
        }
        let f = &self.field;
        Polynomial { field: f.clone(), coeffs: self.coeffs.iter().map(|&c| f.mul(c, s)).collect() }
    }

    /// Monic associate; zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.coeffs.last() {
            None | Some(1) => self.clone(),
            Some(&lc) => self.scale_raw(self.field.inv(lc).expect("nonzero leading coefficient")),
        }
    }

    /// `x^n * self`.
    pub fn shift_up(&self, n: usize) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0; n];
        coeffs.extend_from_slice(&self.coeffs);
        Polynomial { field: self.field.clone(), coeffs }
    }

    pub fn divmod(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial), PolyError> {
        self.assert_same_field(divisor);
        let f = &self.field;
        let dl = divisor.coeffs.len();
        if dl == 0 {
            return Err(PolyError::DivisionByZero);
        }
        if self.coeffs.len() < dl {
            return Ok((Polynomial::zero(f), self.clone()));
        }
        let lc_inv = f.inv(divisor.coeffs[dl - 1]).expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; rem.len() - dl + 1];
        for k in (0..quot.len()).rev() {
            let lead = rem[k + dl - 1];
            if lead == 0 {
                continue;
            }
            let factor = f.mul(lead, lc_inv);
            quot[k] = factor;
            for (i, &d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = f.sub(rem[k + i], f.mul(factor, d));
            }
        }
        rem.truncate(dl - 1);
        Ok((Polynomial::from_raw(f, quot), Polynomial::from_raw(f, rem)))
    }

    pub fn rem(&self, divisor: &Polynomial) -> Result<Polynomial, PolyError> {
        Ok(self.divmod(divisor)?.1)
    }

    /// Quotient when `divisor` divides `self` exactly, `None` otherwise.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        match self.divmod(divisor) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    pub fn divides(&self, other: &Polynomial) -> bool {
        other.div_exact(self).is_some()
    }

    pub fn ext_gcd(&self, other: &Polynomial) -> Result<ExtGcd, PolyError> {
        self.assert_same_field(other);
        if self.is_zero() && other.is_zero() {
            return Err(PolyError::BothZero);
        }
        let f = &self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Polynomial::one(f), Polynomial::zero(f));
        let (mut t0, mut t1) = (Polynomial::zero(f), Polynomial::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1)?;
            let s2 = &s0 - &(&q * &s1);
            let t2 = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let lc_inv = f.inv(*r0.coeffs.last().expect("nonzero gcd")).expect("unit");
        let out = ExtGcd { gcd: r0.scale_raw(lc_inv), s: s0.scale_raw(lc_inv), t: t0.scale_raw(lc_inv) };
        debug_assert_eq!(&(&out.s * self) + &(&out.t * other), out.gcd, "Bezout identity");
        Ok(out)
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_field(other);
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = std::mem::replace(&mut b, r);
        }
        a.monic()
    }

    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        assert!(x.field() == &self.field, "evaluation point from a different field");
        self.field.wrap(self.eval_raw(x.value()))
    }

    pub(crate) fn eval_raw(&self, x: u64) -> u64 {
        let f = &self.field;
        self.coeffs.iter().rev().fold(0u64, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn derivative(&self) -> Polynomial {
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(c, f.int(i as i64)))
            .collect();
        Polynomial::from_raw(f, coeffs)
    }

    /// Taylor shift: the polynomial `g(t) = self(t + a)`.
    pub fn taylor_shift(&self, a: &FieldElement) -> Polynomial {
        assert!(a.field() == &self.field);
        let f = &self.field;
        let a = a.value();
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n - 1).rev() {
                c[j] = f.add(c[j], f.mul(a, c[j + 1]));
            }
        }
        Polynomial::from_raw(f, c)
    }

    /// Multiplicity of `a` as a root (0 when `self(a) != 0`). Zero has no finite order.
    pub fn root_multiplicity(&self, a: &FieldElement) -> usize {
        assert!(!self.is_zero(), "order of vanishing of the zero polynomial");
        let shifted = self.taylor_shift(a);
        shifted.coeffs.iter().take_while(|&&c| c == 0).count()
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.field);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Interpolating polynomial through `points` with pairwise-distinct abscissae.
    ///
    /// With `degree_cap = Some(d)` exactly `d + 1` points are required.
    pub fn interpolate(
        field: &Field,
        points: &[(FieldElement, FieldElement)],
        degree_cap: Option<usize>,
    ) -> Result<Polynomial, PolyError> {
        if let Some(d) = degree_cap {
            if points.len() != d + 1 {
                return Err(PolyError::WrongPointCount { expected: d + 1, got: points.len() });
            }
        }
        if points.iter().any(|(x, y)| x.field() != field || y.field() != field) {
            return Err(PolyError::FieldMismatch);
        }
        let xs: Vec<u64> = points.iter().map(|(x, _)| x.value()).collect();
        for i in 0..xs.len() {
            if xs[..i].contains(&xs[i]) {
                return Err(PolyError::DuplicateAbscissa(points[i].0.to_string()));
            }
        }
        let f = field;
        // Newton divided differences
        let mut dd: Vec<u64> = points.iter().map(|(_, y)| y.value()).collect();
        let n = dd.len();
        for level in 1..n {
            for i in (level..n).rev() {
                let num = f.sub(dd[i], dd[i - 1]);
                let den = f.sub(xs[i], xs[i - level]);
                dd[i] = f.div(num, den).expect("distinct abscissae");
            }
        }
        let mut acc = Polynomial::zero(f);
        for i in (0..n).rev() {
            acc = &(&acc * &Polynomial::from_raw(f, vec![f.neg(xs[i]), 1])) + &Polynomial::from_raw(f, vec![dd[i]]);
        }
        Ok(acc)
    }

    /// Chinese remainder: the unique `r` with `deg r < deg(m1*m2)`, `r = a1 mod m1`, `r = a2 mod m2`.
    pub fn crt(a1: &Polynomial, m1: &Polynomial, a2: &Polynomial, m2: &Polynomial) -> Result<Polynomial, PolyError> {
        let eg = m1.ext_gcd(m2)?;
        if !eg.gcd.is_one() {
            return Err(PolyError::DivisionByZero);
        }
        // s*m1 + t*m2 = 1  =>  r = a1 + (a2 - a1) * s * m1
        let modulus = m1 * m2;
        let r = a1 + &(&(&(a2 - a1) * &eg.s) * m1);
        r.rem(&modulus)
    }

    /// Compose `self(x)` with `inner(x)`.
    pub fn compose(&self, inner: &Polynomial) -> Polynomial {
        self.assert_same_field(inner);
        let mut acc = Polynomial::zero(&self.field);
        for &c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Polynomial::from_raw(&self.field, vec![c]);
        }
        acc
    }

    /// Human-readable rendering in the variable `var`, e.g. `x^6 + 1`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let coeff = self.field.wrap(c).to_string();
            let term = match (i, c == 1) {
                (0, _) => coeff,
                (1, true) => var.to_string(),
                (1, false) => format!("{coeff}*{var}"),
                (_, true) => format!("{var}^{i}"),
                (_, false) => format!("{coeff}*{var}^{i}"),
            };
            terms.push(term);
        }
        terms.join(" + ")
    }

    /// Ascending coefficient list `[c0,c1,...]` as used in the textual function format.
    pub fn coefficient_list(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(|&c| self.field.wrap(c).to_string()).collect();
        format!("[{}]", parts.join(","))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self.render("x"), self.field)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("x"))
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.assert_same_field(rhs);
        let f = &self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| f.add(self.coeff_raw(i), rhs.coeff_raw(i))).collect();
        Polynomial::from_raw(f, coeffs)
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.assert_same_field(rhs);
        let f = &self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| f.sub(self.coeff_raw(i), rhs.coeff_raw(i))).collect();
        Polynomial::from_raw(f, coeffs)
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        self.assert_same_field(rhs);
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(&self.field);
        }
        let f = &self.field;
        let mut out = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Polynomial::from_raw(f, out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let f = &self.field;
        Polynomial { field: f.clone(), coeffs: self.coeffs.iter().map(|&c| f.neg(c)).collect() }
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &'a Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
