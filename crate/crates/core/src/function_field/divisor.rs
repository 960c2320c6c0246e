use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use super::{FunctionFieldElement, FunctionFieldError};
use crate::curve::{AffinePoint, HyperellipticCurve};
use crate::extension::Embedding;
use crate::field::Field;
use crate::poly::Polynomial;

/// Largest extension degree the support splitter will try unless told otherwise.
pub const DEFAULT_MAX_EXTENSION: usize = 4;

/// A finite formal sum of affine points plus a multiple of Ω, all points
/// rational over `field`.
#[derive(Clone, PartialEq, Eq)]
pub struct Divisor {
    field: Field,
    terms: BTreeMap<(u64, u64), i64>,
    omega: i64,
}

impl Divisor {
    pub fn zero(field: &Field) -> Divisor {
        Divisor { field: field.clone(), terms: BTreeMap::new(), omega: 0 }
    }

    pub fn point(p: &AffinePoint, n: i64) -> Divisor {
        let mut d = Divisor::zero(p.x.field());
        d.add_point(p, n);
        d
    }

    pub fn omega_multiple(field: &Field, n: i64) -> Divisor {
        Divisor { field: field.clone(), terms: BTreeMap::new(), omega: n }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn add_point(&mut self, p: &AffinePoint, n: i64) {
        assert!(p.x.field() == &self.field, "point outside the divisor's field");
        let key = p.sort_key();
        let entry = self.terms.entry(key).or_insert(0);
        *entry += n;
        if *entry == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn add_omega(&mut self, n: i64) {
        self.omega += n;
    }

    pub fn omega(&self) -> i64 {
        self.omega
    }

    pub fn coefficient(&self, p: &AffinePoint) -> i64 {
        self.terms.get(&p.sort_key()).copied().unwrap_or(0)
    }

    /// Affine part, ordered by `(x, y)`.
    pub fn terms(&self) -> Vec<(AffinePoint, i64)> {
        self.terms
            .iter()
            .map(|(&(x, y), &n)| (AffinePoint::new(self.field.wrap(x), self.field.wrap(y)), n))
            .collect()
    }

    pub fn degree(&self) -> i64 {
        self.terms.values().sum::<i64>() + self.omega
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.omega == 0
    }

    pub fn is_effective(&self) -> bool {
        self.omega >= 0 && self.terms.values().all(|&n| n >= 0)
    }

    pub fn map(&self, emb: &Embedding) -> Divisor {
        let mut out = Divisor::omega_multiple(emb.target(), self.omega);
        for (p, n) in self.terms() {
            out.add_point(&p.map(emb), n);
        }
        out
    }
}

impl fmt::Debug for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<(i64, String)> = self.terms().into_iter().map(|(p, n)| (n, p.to_string())).collect();
        if self.omega != 0 {
            parts.push((self.omega, "Ω".to_string()));
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        for (i, (n, name)) in parts.iter().enumerate() {
            let sign = if *n < 0 { "-" } else { "+" };
            match (i, n.abs()) {
                (0, 1) if *n > 0 => write!(f, "{name}")?,
                (0, k) if *n > 0 => write!(f, "{k}*{name}")?,
                (0, 1) => write!(f, "-{name}")?,
                (0, k) => write!(f, "-{k}*{name}")?,
                (_, 1) => write!(f, " {sign} {name}")?,
                (_, k) => write!(f, " {sign} {k}*{name}")?,
            }
        }
        Ok(())
    }
}

impl Add<&Divisor> for &Divisor {
    type Output = Divisor;
    fn add(self, rhs: &Divisor) -> Divisor {
        assert!(self.field == rhs.field, "divisors over different fields");
        let mut out = self.clone();
        for (&key, &n) in &rhs.terms {
            let entry = out.terms.entry(key).or_insert(0);
            *entry += n;
            if *entry == 0 {
                out.terms.remove(&key);
            }
        }
        out.omega += rhs.omega;
        out
    }
}

impl Neg for &Divisor {
    type Output = Divisor;
    fn neg(self) -> Divisor {
        Divisor {
            field: self.field.clone(),
            terms: self.terms.iter().map(|(&k, &n)| (k, -n)).collect(),
            omega: -self.omega,
        }
    }
}

impl Sub<&Divisor> for &Divisor {
    type Output = Divisor;
    fn sub(self, rhs: &Divisor) -> Divisor {
        self + &(-rhs)
    }
}

/// The smallest extension (degree at most `max_degree`) over which every root of every
/// polynomial in `polys` is rational and every fibre of `x` above those roots consists of
/// rational points.
pub fn splitting_embedding(
    curve: &HyperellipticCurve,
    polys: &[&Polynomial],
    max_degree: usize,
) -> Result<Embedding, FunctionFieldError> {
    let field = curve.field();
    let mut factors: Vec<Polynomial> = Vec::new();
    let mut degree = 1usize;
    for p in polys.iter().filter(|p| p.deg() > 0) {
        for comp in p.irreducible_components() {
            degree = crate::poly::lcm(degree, comp.degree);
            factors.extend(comp.product.equal_degree_factors(comp.degree));
        }
    }
    let too_big = |factor: &Polynomial, needed: usize| FunctionFieldError::NonSplitSupport {
        factor: factor.to_string(),
        degree: needed,
        max_degree,
    };
    if degree > max_degree {
        let worst = factors.iter().max_by_key(|f| f.deg()).expect("some factor forced the degree");
        return Err(too_big(worst, degree));
    }
    loop {
        let emb = field.extension(degree).map_err(|_| too_big(&factors[0], degree))?;
        let ext_curve = curve.base_change(&emb);
        let unsplit = factors.iter().find(|g| {
            emb.map_poly(g)
                .roots()
                .iter()
                .any(|(x0, _)| ext_curve.points_above(x0).is_empty())
        });
        match unsplit {
            None => return Ok(emb),
            Some(g) if 2 * degree > max_degree => return Err(too_big(g, 2 * degree)),
            Some(_) => degree *= 2,
        }
    }
}

impl FunctionFieldElement {
    /// `div(F)` over the smallest extension of degree at most `max_degree` carrying its support.
    pub fn divisor_of(&self, max_degree: usize) -> Result<(Embedding, Divisor), FunctionFieldError> {
        if self.is_zero() {
            return Err(FunctionFieldError::ZeroFunction);
        }
        let norm = self.norm_numerator();
        let emb = splitting_embedding(&self.curve, &[&self.c, &norm], max_degree)?;
        let div = self.divisor_over(&emb)?;
        Ok((emb, div))
    }

    /// `div(F)` computed over the target of `emb`, which must split the support.
    pub fn divisor_over(&self, emb: &Embedding) -> Result<Divisor, FunctionFieldError> {
        if self.is_zero() {
            return Err(FunctionFieldError::ZeroFunction);
        }
        let ext_curve = self.curve.base_change(emb);
        let fe = self.base_change(emb, &ext_curve);
        let support = emb.map_poly(&(&self.c * &self.norm_numerator()));
        let mut div = Divisor::omega_multiple(emb.target(), fe.v_infinity()?);
        for (x0, _) in support.roots() {
            let fibre = ext_curve.points_above(&x0);
            if fibre.is_empty() {
                return Err(FunctionFieldError::NonSplitSupport {
                    factor: Polynomial::linear(&x0).to_string(),
                    degree: 2 * emb.target().degree() / self.curve.field().degree(),
                    max_degree: emb.target().degree() / self.curve.field().degree(),
                });
            }
            for p in fibre {
                div.add_point(&p, fe.v_affine(&p)?);
            }
        }
        let total = support.degree().unwrap_or(0);
        let rational: usize = support.roots().iter().map(|(_, m)| *m).sum();
        if rational != total {
            return Err(FunctionFieldError::NonSplitSupport {
                factor: self.c.to_string(),
                degree: emb.target().degree(),
                max_degree: emb.target().degree(),
            });
        }
        assert_eq!(div.degree(), 0, "principal divisor of nonzero degree: {div}");
        Ok(div)
    }
}
