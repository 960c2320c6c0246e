//! Bases and dimensions of `L(Δ + mΩ)` for a reduced Mumford pair `Δ = div(u, v)`.
//!
//! With `t = deg u` and `d = 2g + 1`, the space is spanned by `x^i` for
//! `2i <= m - t` and, once `m >= d - t`, by `Ψ x^j` for `2j <= m - d + t`,
//! where `Ψ = (y + v + h)/u`.

use std::fmt::Write as _;

use thiserror::Error;

use crate::curve::HyperellipticCurve;
use crate::divisor::{reduce_general, DivisorError, GeneralDivisor, MumfordDivisor, ReductionResult};
use crate::function_field::{splitting_embedding, FunctionFieldElement, FunctionFieldError};
use crate::poly::Polynomial;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RiemannRochError {
    #[error("m = {0} is negative")]
    NegativeM(i64),
    #[error("m = {0} is not positive; use the degree <= 0 special cases")]
    NonPositiveM(i64),
    #[error("t = {t} outside [0, g = {g}]")]
    InvalidT { t: i64, g: i64 },
    #[error("genus {0} < 1")]
    InvalidGenus(i64),
    #[error("divisor of degree {deg} is not reduced (g = {genus})")]
    NotReduced { deg: usize, genus: usize },
    #[error(transparent)]
    Function(#[from] FunctionFieldError),
    #[error(transparent)]
    Divisor(#[from] DivisorError),
}

/// `Ψ = (y + v + h)/u`; for `Δ = (1, 0)` this is `y + h`.
pub fn psi_function(delta: &MumfordDivisor) -> FunctionFieldElement {
    let curve = delta.curve();
    let field = curve.field();
    FunctionFieldElement::new(curve, delta.v() + curve.h(), Polynomial::one(field), delta.u().clone())
        .expect("u is nonzero")
}

/// `dim L(Δ + mΩ)` for `deg Δ = t`: `⌊(m-t)/2⌋ + 1` x-powers when `m >= t`, plus
/// `⌊(m-d+t)/2⌋ + 1` Ψ-multiples when `m >= d - t`; zero for `m < t`.
pub fn rr_dim(t: i64, m: i64, g: i64) -> Result<usize, RiemannRochError> {
    if g < 1 {
        return Err(RiemannRochError::InvalidGenus(g));
    }
    if t < 0 || t > g {
        return Err(RiemannRochError::InvalidT { t, g });
    }
    if m < 0 {
        return Err(RiemannRochError::NegativeM(m));
    }
    let d = 2 * g + 1;
    let powers = if m >= t { (m - t) / 2 + 1 } else { 0 };
    let psi_multiples = if m >= d - t { (m - d + t) / 2 + 1 } else { 0 };
    Ok((powers + psi_multiples) as usize)
}

/// Whether `dim L(Δ + mΩ) = m - g + 1`, which holds exactly when `m >= d - t - 2`.
pub fn deboer_threshold_check(t: i64, m: i64, g: i64) -> bool {
    m >= 2 * g + 1 - t - 2
}

#[derive(Clone, Debug)]
pub struct RrBasis {
    pub delta: MumfordDivisor,
    pub m: i64,
    /// `x^i` ascending, then `Ψ x^j` ascending.
    pub elements: Vec<FunctionFieldElement>,
    pub psi_included: bool,
}

impl RrBasis {
    pub fn dimension(&self) -> usize {
        self.elements.len()
    }

    /// Number of leading `x^i` elements.
    pub fn power_count(&self) -> usize {
        let t = self.delta.degree() as i64;
        if self.m >= t {
            ((self.m - t) / 2 + 1) as usize
        } else {
            0
        }
    }
}

pub fn rr_basis(delta: &MumfordDivisor, m: i64) -> Result<RrBasis, RiemannRochError> {
    if m <= 0 {
        return Err(RiemannRochError::NonPositiveM(m));
    }
    let curve = delta.curve();
    if !delta.is_reduced() {
        return Err(RiemannRochError::NotReduced { deg: delta.degree(), genus: curve.genus() });
    }
    let field = curve.field();
    let t = delta.degree() as i64;
    let d = curve.degree() as i64;
    let mut elements = Vec::new();
    if m >= t {
        for i in 0..=((m - t) / 2) as usize {
            elements.push(FunctionFieldElement::from_polynomial(curve, Polynomial::monomial(&field.one(), i)));
        }
    }
    let psi_included = m >= d - t;
    if psi_included {
        let psi = psi_function(delta);
        for j in 0..=((m - d + t) / 2) as usize {
            elements.push(psi.mul_polynomial(&Polynomial::monomial(&field.one(), j)));
        }
    }
    Ok(RrBasis { delta: delta.clone(), m, elements, psi_included })
}

/// `div(F) + Δ + mΩ >= 0`. Poles of `F` lie above roots of its denominator, and `Δ` is
/// supported above roots of `u`, so only those fibres and Ω need checking.
pub fn membership_check(
    f: &FunctionFieldElement,
    delta: &MumfordDivisor,
    m: i64,
    max_extension: usize,
) -> Result<bool, RiemannRochError> {
    if f.is_zero() {
        return Ok(true);
    }
    let curve = delta.curve();
    let t = delta.degree() as i64;
    if f.v_infinity()? < t - m {
        return Ok(false);
    }
    let emb = splitting_embedding(curve, &[f.den(), delta.u()], max_extension)?;
    let ext_curve = curve.base_change(&emb);
    let fe = f.base_change(&emb, &ext_curve);
    let support = delta.support(&emb)?;
    let fibres = emb.map_poly(&(f.den() * delta.u())).roots();
    for (x0, _) in fibres {
        for p in ext_curve.points_above(&x0) {
            let mult = support.iter().find(|(q, _)| *q == p).map_or(0, |(_, l)| *l as i64);
            if fe.v_affine(&p)? + mult < 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A basis of `L(D)` for an arbitrary divisor, through `D = Δ + mΩ + div(ψ)`.
#[derive(Clone, Debug)]
pub struct GeneralBasis {
    pub reduction: ReductionResult,
    pub elements: Vec<FunctionFieldElement>,
}

/// `m > 0`: the pull-back of `rr_basis(Δ, m)` by `ψ`. `m < 0`: `{0}`. `m = 0`: `span(1/ψ)`
/// when `Δ = (1, 0)` (then `D = div(ψ)`), otherwise `{0}`.
pub fn rr_basis_general(d: &GeneralDivisor, curve: &HyperellipticCurve) -> Result<GeneralBasis, RiemannRochError> {
    let reduction = reduce_general(d, curve)?;
    let elements = match reduction.m {
        m if m > 0 => rr_basis(&reduction.delta, m)?
            .elements
            .iter()
            .map(|b| reduction.pull_back(b))
            .collect(),
        0 if reduction.delta.is_zero() => vec![reduction.psi.inv()?],
        _ => Vec::new(),
    };
    Ok(GeneralBasis { reduction, elements })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DimensionRow {
    pub t: i64,
    pub m: i64,
    pub dim: usize,
    pub deboer: bool,
}

/// All `(t, m)` with `0 <= t <= g` and `0 <= m <= m_max`.
pub fn dimension_table(g: i64, m_max: i64) -> Result<Vec<DimensionRow>, RiemannRochError> {
    let mut rows = Vec::new();
    for t in 0..=g {
        for m in 0..=m_max {
            rows.push(DimensionRow { t, m, dim: rr_dim(t, m, g)?, deboer: deboer_threshold_check(t, m, g) });
        }
    }
    Ok(rows)
}

/// CSV with header `t,m,dim,deboer_flag`.
pub fn dimension_table_csv(rows: &[DimensionRow]) -> String {
    let mut out = String::from("t,m,dim,deboer_flag\n");
    for r in rows {
        writeln!(out, "{},{},{},{}", r.t, r.m, r.dim, r.deboer).expect("writing to a String");
    }
    out
}
