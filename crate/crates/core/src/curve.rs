//! Imaginary hyperelliptic curves `y^2 + h(x) y = f(x)` with `deg f = 2g + 1`
//! and `deg h <= g`; the point at infinity Ω = [0:1:0] is a rational
//! Weierstrass point.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::extension::Embedding;
use crate::field::{Field, FieldElement};
use crate::poly::Polynomial;

/// Point scans are limited to fields of at most this many elements.
pub const ENUMERATION_LIMIT: u64 = 10_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CurveError {
    #[error("deg f = {0} is not an odd number >= 3")]
    EvenDegree(i64),
    #[error("f is not monic")]
    NonMonic,
    #[error("the curve is singular")]
    SingularCurve,
    #[error("characteristic 2 requires h != 0")]
    MissingHInChar2,
    #[error("deg h = {deg} exceeds the genus {genus}")]
    HDegreeTooLarge { deg: usize, genus: usize },
    #[error("characteristic 2 models cannot be normalized to h = 0")]
    Char2NotNormalizable,
    #[error("point {0} is not on the curve")]
    PointNotOnCurve(String),
    #[error("field of order {0} is too large for this operation")]
    FieldTooLarge(u64),
    #[error("operands belong to different fields")]
    FieldMismatch,
}

struct CurveInner {
    field: Field,
    f: Polynomial,
    h: Polynomial,
    genus: usize,
}

/// A validated curve; cheap to clone.
#[derive(Clone)]
pub struct HyperellipticCurve {
    inner: Arc<CurveInner>,
}

impl PartialEq for HyperellipticCurve {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || (self.inner.f == other.inner.f && self.inner.h == other.inner.h)
    }
}

impl Eq for HyperellipticCurve {}

impl fmt::Debug for HyperellipticCurve {
    fn fmt(&self, fmt: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(fmt, "y^2 + ({})*y = {} over {}", self.inner.h, self.inner.f, self.inner.field)
    }
}

impl fmt::Display for HyperellipticCurve {
    fn fmt(&self, fmt: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.h.is_zero() {
            write!(fmt, "y^2 = {}", self.inner.f)
        } else {
            write!(fmt, "y^2 + ({})*y = {}", self.inner.h, self.inner.f)
        }
    }
}

/// An affine point; on a given curve when `y^2 + h(x) y = f(x)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AffinePoint {
    pub x: FieldElement,
    pub y: FieldElement,
}

impl AffinePoint {
    pub fn new(x: FieldElement, y: FieldElement) -> AffinePoint {
        AffinePoint { x, y }
    }

    pub fn from_ints(field: &Field, x: i64, y: i64) -> AffinePoint {
        AffinePoint { x: field.from_i64(x), y: field.from_i64(y) }
    }

    pub fn map(&self, emb: &Embedding) -> AffinePoint {
        AffinePoint { x: emb.map(&self.x), y: emb.map(&self.y) }
    }

    pub(crate) fn sort_key(&self) -> (u64, u64) {
        (self.x.value(), self.y.value())
    }
}

impl fmt::Display for AffinePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl HyperellipticCurve {
    /// A curve in the monic model: `f` monic of odd degree `2g + 1 >= 3`, `deg h <= g`,
    /// `h != 0` in characteristic 2, and nonsingular.
    pub fn new(f: Polynomial, h: Polynomial) -> Result<HyperellipticCurve, CurveError> {
        if !f.is_monic() {
            return Err(CurveError::NonMonic);
        }
        HyperellipticCurve::new_general(f, h)
    }

    /// As [`HyperellipticCurve::new`] but accepting any nonzero leading coefficient of `f`.
    /// Curves fitted through prescribed points are generally of this form.
    pub fn new_general(f: Polynomial, h: Polynomial) -> Result<HyperellipticCurve, CurveError> {
        if f.field() != h.field() {
            return Err(CurveError::FieldMismatch);
        }
        let field = f.field().clone();
        let d = f.deg();
        if d < 3 || d % 2 == 0 {
            return Err(CurveError::EvenDegree(d));
        }
        let genus = ((d - 1) / 2) as usize;
        if let Some(dh) = h.degree() {
            if dh > genus {
                return Err(CurveError::HDegreeTooLarge { deg: dh, genus });
            }
        }
        if field.characteristic() == 2 && h.is_zero() {
            return Err(CurveError::MissingHInChar2);
        }
        let curve = HyperellipticCurve { inner: Arc::new(CurveInner { field, f, h, genus }) };
        if !curve.is_smooth()? {
            return Err(CurveError::SingularCurve);
        }
        Ok(curve)
    }

    /// Skips validation; for base changes of already validated curves.
    pub(crate) fn new_unchecked(f: Polynomial, h: Polynomial) -> HyperellipticCurve {
        let field = f.field().clone();
        let genus = ((f.deg() - 1) / 2) as usize;
        HyperellipticCurve { inner: Arc::new(CurveInner { field, f, h, genus }) }
    }

    pub fn field(&self) -> &Field {
        &self.inner.field
    }

    pub fn f(&self) -> &Polynomial {
        &self.inner.f
    }

    pub fn h(&self) -> &Polynomial {
        &self.inner.h
    }

    pub fn genus(&self) -> usize {
        self.inner.genus
    }

    /// `d = 2g + 1`.
    pub fn degree(&self) -> usize {
        2 * self.inner.genus + 1
    }

    fn is_smooth(&self) -> Result<bool, CurveError> {
        let field = self.field();
        if field.characteristic() != 2 {
            let (f, _) = normalize_model(self.f(), self.h())?;
            return Ok(f.gcd(&f.derivative()).is_one());
        }
        // Jacobian criterion for F = y^2 + h y - f: singular points have h(x0) = 0,
        // y0^2 = f(x0) and y0 h'(x0) = f'(x0).
        let h = self.h();
        if h.is_constant() {
            return Ok(true);
        }
        let dh = h.derivative();
        let df = self.f().derivative();
        for comp in h.irreducible_components() {
            let emb = field
                .extension(comp.degree)
                .map_err(|_| CurveError::FieldTooLarge(field.order()))?;
            let f_e = emb.map_poly(self.f());
            for (x0, _) in emb.map_poly(&comp.product).roots() {
                let y0 = f_e.eval(&x0).sqrt().expect("squares are surjective in characteristic 2");
                let lhs = &y0 * &emb.map_poly(&dh).eval(&x0);
                if lhs == emb.map_poly(&df).eval(&x0) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The isomorphic model with `h = 0` (characteristic != 2), via `y -> y - h/2`.
    pub fn normalized(&self) -> Result<HyperellipticCurve, CurveError> {
        if self.h().is_zero() {
            return Ok(self.clone());
        }
        let (f, h) = normalize_model(self.f(), self.h())?;
        Ok(HyperellipticCurve::new_unchecked(f, h))
    }

    /// Rescales `x = αX, y = βY` so that the new `f` is monic. Returns the new curve
    /// and `(α, β)`; a point `(x, y)` maps to `(x/α, y/β)`.
    pub fn rescale_to_monic(&self) -> (HyperellipticCurve, FieldElement, FieldElement) {
        let lc = self.f().leading_coefficient().expect("f is nonzero");
        let d = self.degree() as i64;
        let alpha = lc.inv().expect("nonzero");
        let beta = lc.pow((1 - d) / 2).expect("nonzero");
        let scale_arg = |p: &Polynomial| {
            let mut pw = self.field().one();
            let coeffs: Vec<FieldElement> = p
                .coefficients()
                .into_iter()
                .map(|c| {
                    let out = &c * &pw;
                    pw = &pw * &alpha;
                    out
                })
                .collect();
            Polynomial::from_elements(self.field(), &coeffs).expect("same field")
        };
        let beta_inv = beta.inv().expect("nonzero");
        let f = scale_arg(self.f()).scale(&(&beta_inv * &beta_inv));
        let h = scale_arg(self.h()).scale(&beta_inv);
        (HyperellipticCurve::new_unchecked(f, h), alpha, beta)
    }

    /// The same equation read over an extension field.
    pub fn base_change(&self, emb: &Embedding) -> HyperellipticCurve {
        if emb.is_identity() {
            return self.clone();
        }
        HyperellipticCurve::new_unchecked(emb.map_poly(self.f()), emb.map_poly(self.h()))
    }

    /// `y^2 + h(x) y - f(x)` at `(x, y)`.
    pub fn equation_at(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        &(&(y * y) + &(y * &self.h().eval(x))) - &self.f().eval(x)
    }

    pub fn on_curve(&self, p: &AffinePoint) -> bool {
        p.x.field() == self.field() && p.y.field() == self.field() && self.equation_at(&p.x, &p.y).is_zero()
    }

    fn require_on_curve(&self, p: &AffinePoint) -> Result<(), CurveError> {
        if self.on_curve(p) {
            Ok(())
        } else {
            Err(CurveError::PointNotOnCurve(p.to_string()))
        }
    }

    /// The hyperelliptic involution `(x, y) -> (x, -y - h(x))`.
    pub fn opposite(&self, p: &AffinePoint) -> Result<AffinePoint, CurveError> {
        self.require_on_curve(p)?;
        Ok(self.opposite_unchecked(p))
    }

    pub(crate) fn opposite_unchecked(&self, p: &AffinePoint) -> AffinePoint {
        AffinePoint { x: p.x.clone(), y: &(-&p.y) - &self.h().eval(&p.x) }
    }

    /// Fixed point of the involution, i.e. `2y + h(x) = 0`.
    pub fn is_weierstrass(&self, p: &AffinePoint) -> Result<bool, CurveError> {
        self.require_on_curve(p)?;
        Ok(self.opposite_unchecked(p) == *p)
    }

    /// All points with abscissa `x0` (zero, one or two of them).
    pub fn points_above(&self, x0: &FieldElement) -> Vec<AffinePoint> {
        let field = self.field();
        let h0 = self.h().eval(x0);
        let f0 = self.f().eval(x0);
        let ys: Vec<FieldElement> = if field.characteristic() == 2 {
            if h0.is_zero() {
                vec![f0.sqrt().expect("squares are surjective in characteristic 2")]
            } else {
                let quadratic = Polynomial::from_elements(field, &[-&f0, h0, field.one()]).expect("same field");
                quadratic.roots().into_iter().map(|(r, _)| r).collect()
            }
        } else {
            let two = field.from_i64(2);
            let disc = &(&h0 * &h0) + &(&field.from_i64(4) * &f0);
            match disc.sqrt() {
                None => Vec::new(),
                Some(r) if r.is_zero() => vec![&(-&h0) / &two],
                Some(r) => {
                    let mut v = vec![&(&r - &h0) / &two, &(&(-&r) - &h0) / &two];
                    v.sort_by_key(|y| y.value());
                    v
                }
            }
        };
        ys.into_iter().map(|y| AffinePoint { x: x0.clone(), y }).collect()
    }

    /// Every affine rational point, ordered by `(x, y)`.
    pub fn enumerate_points(&self) -> Result<Vec<AffinePoint>, CurveError> {
        let q = self.field().order();
        if q > ENUMERATION_LIMIT {
            return Err(CurveError::FieldTooLarge(q));
        }
        Ok(self.field().elements().flat_map(|x| self.points_above(&x)).collect())
    }
}

/// `(f + h^2/4, 0)`: the `h = 0` model of `y^2 + h y = f` in odd characteristic.
pub fn normalize_model(f: &Polynomial, h: &Polynomial) -> Result<(Polynomial, Polynomial), CurveError> {
    let field = f.field();
    if field.characteristic() == 2 {
        return Err(CurveError::Char2NotNormalizable);
    }
    let quarter = field.from_i64(4).inv().expect("odd characteristic");
    Ok((f + &(h * h).scale(&quarter), Polynomial::zero(field)))
}
