//! Truncated power series `a_0 + a_1 s + ... + a_{N-1} s^{N-1} + O(s^N)`.

use std::fmt;

use crate::field::{Field, FieldElement};
use crate::poly::Polynomial;

#[derive(Clone, PartialEq, Eq)]
pub struct Series {
    field: Field,
    /// Exactly `precision` coefficients.
    coeffs: Vec<u64>,
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let poly = Polynomial::from_raw(&self.field, self.coeffs.clone());
        write!(f, "{} + O(s^{})", poly.render("s"), self.precision())
    }
}

impl Series {
    pub fn zero(field: &Field, precision: usize) -> Series {
        Series { field: field.clone(), coeffs: vec![0; precision] }
    }

    pub fn constant(c: &FieldElement, precision: usize) -> Series {
        let mut s = Series::zero(c.field(), precision);
        if precision > 0 {
            s.coeffs[0] = c.value();
        }
        s
    }

    /// `c + s`, the uniformizer shifted by a constant.
    pub fn linear(c: &FieldElement, precision: usize) -> Series {
        let mut s = Series::constant(c, precision);
        if precision > 1 {
            s.coeffs[1] = 1;
        }
        s
    }

    /// Truncation of a polynomial read in the series variable.
    pub fn from_polynomial(p: &Polynomial, precision: usize) -> Series {
        let coeffs = (0..precision).map(|i| p.coeff_raw(i)).collect();
        Series { field: p.field().clone(), coeffs }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.field.wrap(self.coeffs[i])
    }

    /// Index of the first nonzero coefficient; `None` if zero to this precision.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|&c| c != 0)
    }

    pub fn with_precision(&self, precision: usize) -> Series {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(precision, 0);
        Series { field: self.field.clone(), coeffs }
    }

    pub fn add(&self, other: &Series) -> Series {
        let n = self.precision().min(other.precision());
        let f = &self.field;
        Series { field: f.clone(), coeffs: (0..n).map(|i| f.add(self.coeffs[i], other.coeffs[i])).collect() }
    }

    pub fn sub(&self, other: &Series) -> Series {
        let n = self.precision().min(other.precision());
        let f = &self.field;
        Series { field: f.clone(), coeffs: (0..n).map(|i| f.sub(self.coeffs[i], other.coeffs[i])).collect() }
    }

    pub fn scale(&self, c: u64) -> Series {
        let f = &self.field;
        Series { field: f.clone(), coeffs: self.coeffs.iter().map(|&a| f.mul(a, c)).collect() }
    }

    pub fn mul(&self, other: &Series) -> Series {
        let n = self.precision().min(other.precision());
        let f = &self.field;
        let mut out = vec![0u64; n];
        for (i, &a) in self.coeffs.iter().take(n).enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().take(n - i).enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Series { field: f.clone(), coeffs: out }
    }

    /// Multiplicative inverse; `None` when the constant term vanishes.
    pub fn inv(&self) -> Option<Series> {
        let f = &self.field;
        let n = self.precision();
        let c0_inv = f.inv(*self.coeffs.first()?)?;
        let mut out = vec![0u64; n];
        out[0] = c0_inv;
        for k in 1..n {
            let mut acc = 0u64;
            for i in 1..=k {
                acc = f.add(acc, f.mul(self.coeffs[i], out[k - i]));
            }
            out[k] = f.neg(f.mul(acc, c0_inv));
        }
        Some(Series { field: f.clone(), coeffs: out })
    }

    /// `p(self)`; Horner in the series ring.
    pub fn substitute_into(&self, p: &Polynomial) -> Series {
        let f = &self.field;
        let n = self.precision();
        let mut acc = Series::zero(f, n);
        for &c in p.coeffs_raw().iter().rev() {
            acc = acc.mul(self);
            acc.coeffs[0] = f.add(acc.coeffs[0], c);
        }
        acc
    }
}
