//! Exact arithmetic in GF(p) and GF(p^c).
//!
//! An element of GF(p^c) is stored as a single packed integer: the residues
//! `a_0, ..., a_{c-1}` of its coefficient vector (constant term first) are the
//! base-`p` digits of the packed value. Equality of elements is therefore
//! plain integer comparison, and the order `p^c` is bounded by `2^62`.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use thiserror::Error;

use crate::poly::Polynomial;

/// Largest supported extension degree (GF(2^61) is the largest binary field).
pub const MAX_EXTENSION_DEGREE: usize = 61;

const ORDER_LIMIT: u64 = 1 << 62;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("characteristic {0} is not prime")]
    CompositeModulus(u64),
    #[error("supplied modulus is reducible over GF({p})")]
    ReducibleModulus { p: u64 },
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {p}^{c} exceeds 2^62")]
    OrderTooLarge { p: u64, c: usize },
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("residue {value} is out of range for GF({p})")]
    ResidueOutOfRange { value: u64, p: u64 },
}

struct FieldInner {
    p: u64,
    c: usize,
    q: u64,
    /// Ascending coefficients of the monic modulus (length c + 1), empty for prime fields.
    modulus: Vec<u64>,
}

/// A finite field GF(p^c). Cheap to clone; immutable after construction.
#[derive(Clone)]
pub struct Field {
    inner: Arc<FieldInner>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p
                && self.inner.c == other.inner.c
                && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.c == 1 {
            write!(f, "GF({})", self.inner.p)
        } else {
            write!(f, "GF({}^{}; {:?})", self.inner.p, self.inner.c, self.inner.modulus)
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.c == 1 {
            write!(f, "GF({})", self.inner.p)
        } else {
            write!(f, "GF({}^{})", self.inner.p, self.inner.c)
        }
    }
}

impl Field {
    /// The prime field GF(p).
    pub fn prime(p: u64) -> Result<Field, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::CompositeModulus(p));
        }
        if p >= 1 << 61 {
            return Err(FieldError::OrderTooLarge { p, c: 1 });
        }
        Ok(Field {
            inner: Arc::new(FieldInner { p, c: 1, q: p, modulus: Vec::new() }),
        })
    }

    /// GF(p^c). Without a modulus the lexicographically smallest monic
    /// irreducible of degree `c` is used (coefficients read as base-p digits,
    /// constant term least significant).
    pub fn new(p: u64, c: usize, modulus: Option<&[u64]>) -> Result<Field, FieldError> {
        if c == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let base = Field::prime(p)?;
        if c == 1 {
            if let Some(m) = modulus {
                // a degree-1 modulus carries no information, but reject garbage
                if !m.is_empty() && (m.len() != 2 || m[1] != 1) {
                    return Err(FieldError::InvalidModulus(format!(
                        "expected a monic linear modulus or none, got {m:?}"
                    )));
                }
            }
            return Ok(base);
        }
        let order = checked_order(p, c)?;
        let modulus = match modulus {
            Some(m) if !m.is_empty() => {
                if m.len() != c + 1 {
                    return Err(FieldError::InvalidModulus(format!(
                        "modulus of degree {c} needs {} coefficients, got {}",
                        c + 1,
                        m.len()
                    )));
                }
                if let Some(&bad) = m.iter().find(|&&r| r >= p) {
                    return Err(FieldError::ResidueOutOfRange { value: bad, p });
                }
                if m[c] != 1 {
                    return Err(FieldError::InvalidModulus("modulus is not monic".into()));
                }
                let poly = Polynomial::from_raw(&base, m.to_vec());
                if !poly.is_irreducible() {
                    return Err(FieldError::ReducibleModulus { p });
                }
                m.to_vec()
            }
            _ => smallest_irreducible(&base, c).coeffs_raw().to_vec(),
        };
        Ok(Field {
            inner: Arc::new(FieldInner { p, c, q: order, modulus }),
        })
    }

    pub fn characteristic(&self) -> u64 {
        self.inner.p
    }

    /// Extension degree over the prime field.
    pub fn degree(&self) -> usize {
        self.inner.c
    }

    /// Number of elements, p^c.
    pub fn order(&self) -> u64 {
        self.inner.q
    }

    /// Ascending coefficients of the defining modulus; empty for prime fields.
    pub fn modulus(&self) -> &[u64] {
        &self.inner.modulus
    }

    pub fn is_prime_field(&self) -> bool {
        self.inner.c == 1
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { field: self.clone(), value: 0 }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement { field: self.clone(), value: 1 }
    }

    /// Element from its packed encoding.
    pub fn element(&self, packed: u64) -> Result<FieldElement, FieldError> {
        if packed >= self.inner.q {
            return Err(FieldError::ResidueOutOfRange { value: packed, p: self.inner.p });
        }
        Ok(FieldElement { field: self.clone(), value: packed })
    }

    /// Element from its residue vector (constant term first, at most c entries).
    pub fn from_coefficients(&self, residues: &[u64]) -> Result<FieldElement, FieldError> {
        if residues.len() > self.inner.c {
            return Err(FieldError::InvalidModulus(format!(
                "{} residues given for a degree-{} field",
                residues.len(),
                self.inner.c
            )));
        }
        let mut value = 0u64;
        for &r in residues.iter().rev() {
            if r >= self.inner.p {
                return Err(FieldError::ResidueOutOfRange { value: r, p: self.inner.p });
            }
            value = value * self.inner.p + r;
        }
        Ok(FieldElement { field: self.clone(), value })
    }

    /// The image of an integer in the prime subfield.
    pub fn from_i64(&self, n: i64) -> FieldElement {
        FieldElement { field: self.clone(), value: self.int(n) }
    }

    /// All elements in packed order. Intended for small fields.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.inner.q).map(move |v| FieldElement { field: self.clone(), value: v })
    }

    pub(crate) fn wrap(&self, value: u64) -> FieldElement {
        debug_assert!(value < self.inner.q);
        FieldElement { field: self.clone(), value }
    }

    // ----- raw arithmetic on packed encodings -----

    pub(crate) fn int(&self, n: i64) -> u64 {
        let p = self.inner.p as i128;
        (((n as i128) % p + p) % p) as u64
    }

    pub(crate) fn add(&self, a: u64, b: u64) -> u64 {
        let p = self.inner.p;
        if self.inner.c == 1 {
            return add_mod(a, b, p);
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0u64;
        let mut scale = 1u64;
        for _ in 0..self.inner.c {
            out += add_mod(a % p, b % p, p) * scale;
            a /= p;
            b /= p;
            scale = scale.wrapping_mul(p);
        }
        out
    }

    pub(crate) fn neg(&self, a: u64) -> u64 {
        let p = self.inner.p;
        if self.inner.c == 1 {
            return if a == 0 { 0 } else { p - a };
        }
        let mut a = a;
        let mut out = 0u64;
        let mut scale = 1u64;
        for _ in 0..self.inner.c {
            let d = a % p;
            out += (if d == 0 { 0 } else { p - d }) * scale;
            a /= p;
            scale = scale.wrapping_mul(p);
        }
        out
    }

    pub(crate) fn sub(&self, a: u64, b: u64) -> u64 {
        if self.inner.c == 1 {
            let p = self.inner.p;
            return if a >= b { a - b } else { a + (p - b) };
        }
        self.add(a, self.neg(b))
    }

    pub(crate) fn mul(&self, a: u64, b: u64) -> u64 {
        if self.inner.c == 1 {
            return ((a as u128 * b as u128) % self.inner.p as u128) as u64;
        }
        if a == 0 || b == 0 {
            return 0;
        }
        let p = self.inner.p;
        let c = self.inner.c;
        let mut da = [0u64; MAX_EXTENSION_DEGREE];
        let mut db = [0u64; MAX_EXTENSION_DEGREE];
        self.unpack(a, &mut da[..c]);
        self.unpack(b, &mut db[..c]);
        // p < 2^31 whenever c >= 2, so single products fit in u64
        let mut prod = [0u64; 2 * MAX_EXTENSION_DEGREE];
        for i in 0..c {
            if da[i] == 0 {
                continue;
            }
            for j in 0..c {
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            }
        }
        let m = &self.inner.modulus;
        for k in (c..2 * c - 1).rev() {
            let lead = prod[k];
            if lead == 0 {
                continue;
            }
            prod[k] = 0;
            for i in 0..c {
                let t = lead * m[i] % p;
                prod[k - c + i] = (prod[k - c + i] + p - t) % p;
            }
        }
        self.pack(&prod[..c])
    }

    pub(crate) fn pow(&self, a: u64, mut e: u128) -> u64 {
        let mut base = a;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub(crate) fn inv(&self, a: u64) -> Option<u64> {
        if a == 0 {
            return None;
        }
        if self.inner.c == 1 {
            return Some(inv_mod(a, self.inner.p));
        }
        Some(self.pow(a, (self.inner.q - 2) as u128))
    }

    pub(crate) fn div(&self, a: u64, b: u64) -> Option<u64> {
        self.inv(b).map(|ib| self.mul(a, ib))
    }

    /// A square root, if one exists.
    pub(crate) fn sqrt(&self, a: u64) -> Option<u64> {
        if a == 0 {
            return Some(0);
        }
        let q = self.inner.q;
        if self.inner.p == 2 {
            // squaring is a bijection; its inverse is a -> a^(q/2)
            return Some(self.pow(a, (q / 2) as u128));
        }
        let one = 1u64;
        let minus_one = self.neg(one);
        let half = ((q - 1) / 2) as u128;
        if self.pow(a, half) != one {
            return None;
        }
        // Tonelli-Shanks
        let mut s = 0u32;
        let mut odd = q - 1;
        while odd.is_multiple_of(2) {
            odd /= 2;
            s += 1;
        }
        let z = (2..q)
            .find(|&z| self.pow(z, half) == minus_one)
            .expect("odd-order field has a non-residue");
        let mut m = s;
        let mut c = self.pow(z, odd as u128);
        let mut t = self.pow(a, odd as u128);
        let mut r = self.pow(a, odd.div_ceil(2) as u128);
        while t != one {
            let mut i = 0u32;
            let mut t2 = t;
            while t2 != one {
                t2 = self.mul(t2, t2);
                i += 1;
            }
            let mut b = c;
            for _ in 0..(m - i - 1) {
                b = self.mul(b, b);
            }
            m = i;
            c = self.mul(b, b);
            t = self.mul(t, c);
            r = self.mul(r, b);
        }
        Some(r)
    }

    pub(crate) fn unpack(&self, mut a: u64, out: &mut [u64]) {
        let p = self.inner.p;
        for d in out.iter_mut() {
            *d = a % p;
            a /= p;
        }
    }

    pub(crate) fn pack(&self, digits: &[u64]) -> u64 {
        let p = self.inner.p;
        digits.iter().rev().fold(0u64, |acc, &d| acc * p + d)
    }
}

fn checked_order(p: u64, c: usize) -> Result<u64, FieldError> {
    let mut q: u64 = 1;
    for _ in 0..c {
        q = q
            .checked_mul(p)
            .filter(|&q| q < ORDER_LIMIT)
            .ok_or(FieldError::OrderTooLarge { p, c })?;
    }
    Ok(q)
}

/// Lexicographically smallest monic irreducible polynomial of the given degree.
pub(crate) fn smallest_irreducible(base: &Field, degree: usize) -> Polynomial {
    let p = base.characteristic();
    let mut digits = vec![0u64; degree];
    loop {
        let mut coeffs = digits.clone();
        coeffs.push(1);
        if coeffs[0] != 0 {
            let candidate = Polynomial::from_raw(base, coeffs);
            if candidate.is_irreducible() {
                return candidate;
            }
        }
        // increment, constant term least significant
        let mut i = 0;
        loop {
            digits[i] += 1;
            if digits[i] < p {
                break;
            }
            digits[i] = 0;
            i += 1;
            assert!(i < degree, "irreducible polynomials exist in every degree");
        }
    }
}

fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1);
    t0.rem_euclid(p as i128) as u64
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &w in &WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'outer: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// An element of a finite field, tied to its ambient [`Field`].
#[derive(Clone)]
pub struct FieldElement {
    field: Field,
    value: u64,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && self.field == other.field
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.inner.p.hash(state);
        self.field.inner.c.hash(state);
        self.value.hash(state);
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Prime-field elements print as their residue, extension elements as
/// the residue list `[a0,a1,...]`.
impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.is_prime_field() {
            write!(f, "{}", self.value)
        } else {
            let digits = self.coefficients();
            write!(f, "[")?;
            for (i, d) in digits.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{d}")?;
            }
            write!(f, "]")
        }
    }
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Packed encoding (base-p digits are the residues).
    pub fn value(&self) -> u64 {
        self.value
    }

    /// Residues of the coefficient vector, constant term first, length exactly c.
    pub fn coefficients(&self) -> Vec<u64> {
        let mut out = vec![0; self.field.degree()];
        self.field.unpack(self.value, &mut out);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn is_one(&self) -> bool {
        self.value == 1
    }

    fn check(&self, other: &FieldElement) -> Result<(), FieldError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(FieldError::FieldMismatch)
        }
    }

    pub fn try_add(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check(other)?;
        Ok(self.field.wrap(self.field.add(self.value, other.value)))
    }

    pub fn try_sub(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check(other)?;
        Ok(self.field.wrap(self.field.sub(self.value, other.value)))
    }

    pub fn try_mul(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check(other)?;
        Ok(self.field.wrap(self.field.mul(self.value, other.value)))
    }

    pub fn try_div(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check(other)?;
        self.try_mul(&other.inv()?)
    }

    pub fn inv(&self) -> Result<FieldElement, FieldError> {
        self.field
            .inv(self.value)
            .map(|v| self.field.wrap(v))
            .ok_or(FieldError::DivisionByZero)
    }

    /// `self^n`; negative exponents invert first.
    pub fn pow(&self, n: i64) -> Result<FieldElement, FieldError> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        Ok(self.field.wrap(self.field.pow(base.value, n.unsigned_abs() as u128)))
    }

    /// Some `r` with `r^2 = self`, or `None` for a non-square.
    pub fn sqrt(&self) -> Option<FieldElement> {
        self.field.sqrt(self.value).map(|v| self.field.wrap(v))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<'a> $trait<&'a FieldElement> for &'a FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &'a FieldElement) -> FieldElement {
                self.$checked(rhs).expect(concat!("FieldElement::", stringify!($method)))
            }
        }
        impl $trait<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &'a FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);
forward_binop!(Div, div, try_div);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.field.wrap(self.field.neg(self.value))
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}
