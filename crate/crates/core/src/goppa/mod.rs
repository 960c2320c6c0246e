//! Algebraic-geometry Goppa codes from `L(div(u, v) + (k + g - 1)Ω)`.
//!
//! The generator matrix only needs `u`, `v`, `h` and the evaluation points: its rows
//! are `x^i` for `i <= η` and `Ψ x^j` after that, with `Ψ = (y + v + h)/u`. A curve
//! through the points, if one is wanted, comes from [`fit_curve`].

mod distance;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::curve::{AffinePoint, CurveError, HyperellipticCurve};
use crate::divisor::MumfordDivisor;
use crate::field::{Field, FieldElement};
use crate::linalg::Matrix;
use crate::poly::{PolyError, Polynomial};

pub use distance::{
    mds_check, mds_check_with, min_distance_bruteforce, min_distance_bruteforce_with, Execution, MdsReport,
    MAX_MINORS, MAX_SEARCH_SPACE,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GoppaError {
    #[error("expected {expected} points, got {got}")]
    WrongPointCount { expected: usize, got: usize },
    #[error("u vanishes at x = {0}")]
    UOnSupport(String),
    #[error("abscissa {0} appears twice")]
    DuplicateAbscissa(String),
    #[error("fitted curve is singular or degenerate ({0}); perturb the free points")]
    SingularCurve(String),
    #[error("k = {k} outside [{min}, {max}]")]
    KOutOfRange { k: usize, min: usize, max: usize },
    #[error("message of length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("{count} minors exceed the limit of {limit}")]
    TooManyMinors { count: u128, limit: u128 },
    #[error("search space of {size} codewords exceeds {limit}")]
    SearchSpaceTooLarge { size: u128, limit: u128 },
    #[error("genus {g} is smaller than deg u = {t} or deg h = {dh}")]
    GenusTooSmall { g: usize, t: usize, dh: i64 },
    #[error("gcd(u, u', v) is not 1")]
    RepeatedRamifiedSupport,
    #[error("u must be monic with deg v < deg u")]
    InvalidPair,
    #[error("the code is zero")]
    ZeroCode,
    #[error("inputs live over different fields")]
    FieldMismatch,
    #[error("no smooth curve after {0} attempts")]
    FillExhausted(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GoppaWarning {
    /// `q <= (m - t)/2` or `q <= (m - d + t)/2`: some basis functions agree on every rational point.
    RepeatedEvaluations { q: u64, m: i64 },
    DuplicateColumns(usize, usize),
}

impl std::fmt::Display for GoppaWarning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GoppaWarning::RepeatedEvaluations { q, m } => {
                write!(f, "field of order {q} is too small for m = {m}: some rows repeat on rational points")
            }
            GoppaWarning::DuplicateColumns(a, b) => write!(f, "columns {a} and {b} coincide"),
        }
    }
}

/// Evaluation points together with `u`, `v`, `h` at their abscissae.
#[derive(Clone, Debug)]
pub struct EvaluationSet {
    points: Vec<AffinePoint>,
    u_values: Vec<FieldElement>,
    v_values: Vec<FieldElement>,
    h_values: Vec<FieldElement>,
}

impl EvaluationSet {
    pub fn new(points: Vec<AffinePoint>, u: &Polynomial, v: &Polynomial, h: &Polynomial) -> Result<Self, GoppaError> {
        let field = u.field();
        if v.field() != field || h.field() != field || points.iter().any(|p| p.x.field() != field || p.y.field() != field) {
            return Err(GoppaError::FieldMismatch);
        }
        let u_values: Vec<FieldElement> = points.iter().map(|p| u.eval(&p.x)).collect();
        if let Some(i) = u_values.iter().position(FieldElement::is_zero) {
            return Err(GoppaError::UOnSupport(points[i].x.to_string()));
        }
        let v_values = points.iter().map(|p| v.eval(&p.x)).collect();
        let h_values = points.iter().map(|p| h.eval(&p.x)).collect();
        Ok(EvaluationSet { points, u_values, v_values, h_values })
    }

    /// Each `(x, y)` followed by its opposite `(x, -y - h(x))`.
    pub fn paired(base: &[AffinePoint], u: &Polynomial, v: &Polynomial, h: &Polynomial) -> Result<Self, GoppaError> {
        let points = base
            .iter()
            .flat_map(|p| {
                let opposite = AffinePoint::new(p.x.clone(), -(&p.y + &h.eval(&p.x)));
                [p.clone(), opposite]
            })
            .collect();
        EvaluationSet::new(points, u, v, h)
    }

    pub fn points(&self) -> &[AffinePoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `Ψ(x_s, y_s) = (y_s + v(x_s) + h(x_s))/u(x_s)`.
    pub fn psi_values(&self) -> Vec<FieldElement> {
        (0..self.len())
            .map(|s| {
                let num = &(&self.points[s].y + &self.v_values[s]) + &self.h_values[s];
                num.try_div(&self.u_values[s]).expect("u(x_s) is nonzero")
            })
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct GeneratorMatrix {
    pub matrix: Matrix,
    pub k: usize,
    pub n: usize,
    /// Highest power of `x` among the rows, `⌊(k + g - 1 - t)/2⌋`.
    pub eta: usize,
    pub warnings: Vec<GoppaWarning>,
}

impl GeneratorMatrix {
    /// Wraps an arbitrary `k × n` matrix, e.g. one read from a file.
    pub fn from_matrix(matrix: Matrix) -> GeneratorMatrix {
        let (k, n) = (matrix.rows(), matrix.cols());
        GeneratorMatrix { matrix, k, n, eta: k.saturating_sub(1), warnings: Vec::new() }
    }

    pub fn field(&self) -> &Field {
        self.matrix.field()
    }

    /// Number of leading `x^i` rows.
    pub fn power_rows(&self) -> usize {
        (self.eta + 1).min(self.k)
    }
}

/// The `k × n` matrix whose rows are `x^0, ..., x^η` then `Ψ x^0, ..., Ψ x^{k-η-2}`
/// evaluated at the points, in input order. Accepts `1 <= k < n`; below `g - t + 2`
/// every row is a power of `x`.
pub fn generator_matrix(
    u: &Polynomial,
    v: &Polynomial,
    h: &Polynomial,
    g: usize,
    k: usize,
    points: &EvaluationSet,
) -> Result<GeneratorMatrix, GoppaError> {
    let field = u.field();
    let t = check_pair(u, v, h, g)?;
    let n = points.len();
    if k == 0 || k >= n {
        return Err(GoppaError::KOutOfRange { k, min: 1, max: n.saturating_sub(1) });
    }
    let eta = (k + g - 1 - t) / 2;
    let mut warnings = Vec::new();
    let q = field.order();
    let m = (k + g - 1) as i64;
    let (t_i, d) = (t as i64, (2 * g + 1) as i64);
    if q as i64 <= (m - t_i) / 2 || (m >= d - t_i && q as i64 <= (m - d + t_i) / 2) {
        warnings.push(GoppaWarning::RepeatedEvaluations { q, m });
    }
    let mut data = Vec::with_capacity(k * n);
    let powers = (eta + 1).min(k);
    for r in 0..powers {
        data.extend(points.points.iter().map(|p| p.x.pow(r as i64).expect("nonnegative power").value()));
    }
    if k > powers {
        let psi = points.psi_values();
        for j in 0..k - powers {
            data.extend(points.points.iter().zip(&psi).map(|(p, s)| (s * &p.x.pow(j as i64).expect("nonnegative power")).value()));
        }
    }
    let matrix = Matrix::from_raw(field, k, n, data);
    for a in 0..n {
        for b in a + 1..n {
            if (0..k).all(|r| matrix.get_raw(r, a) == matrix.get_raw(r, b)) {
                warnings.push(GoppaWarning::DuplicateColumns(a, b));
            }
        }
    }
    Ok(GeneratorMatrix { matrix, k, n, eta, warnings })
}

fn check_pair(u: &Polynomial, v: &Polynomial, h: &Polynomial, g: usize) -> Result<usize, GoppaError> {
    if v.field() != u.field() || h.field() != u.field() {
        return Err(GoppaError::FieldMismatch);
    }
    if !u.is_monic() || v.deg() >= u.deg() {
        return Err(GoppaError::InvalidPair);
    }
    let t = u.deg() as usize;
    if g < t || h.deg() > g as i64 {
        return Err(GoppaError::GenusTooSmall { g, t, dh: h.deg() });
    }
    Ok(t)
}

/// `message · G`.
pub fn encode(g: &GeneratorMatrix, message: &[FieldElement]) -> Result<Vec<FieldElement>, GoppaError> {
    if message.len() != g.k {
        return Err(GoppaError::LengthMismatch { expected: g.k, got: message.len() });
    }
    if message.iter().any(|m| m.field() != g.field()) {
        return Err(GoppaError::FieldMismatch);
    }
    Ok(g.matrix.left_multiply(message))
}

/// Whether the generator rows are exactly `x_s^{r-1}`, `r = 1..k`.
pub fn rs_coincidence_check(
    u: &Polynomial,
    v: &Polynomial,
    h: &Polynomial,
    g: usize,
    k: usize,
    points: &EvaluationSet,
) -> bool {
    let Ok(gm) = generator_matrix(u, v, h, g, k, points) else { return false };
    (0..k).all(|r| {
        points.points.iter().enumerate().all(|(s, p)| gm.matrix.get(r, s) == p.x.pow(r as i64).expect("nonnegative power"))
    })
}

/// The curve `y^2 + h y = v^2 + h v - c u` where `c` interpolates
/// `(v^2 + h v - y^2 - y h)/u` at exactly `2g + 2 - t` points. The leading coefficient of
/// `f` is `-lc(c)`, so the model is monic only by accident.
pub fn fit_curve(
    u: &Polynomial,
    v: &Polynomial,
    h: &Polynomial,
    g: usize,
    points: &[AffinePoint],
) -> Result<HyperellipticCurve, GoppaError> {
    let field = u.field();
    let t = check_pair(u, v, h, g)?;
    if !u.derivative().gcd(u).gcd(v).is_one() {
        return Err(GoppaError::RepeatedRamifiedSupport);
    }
    let needed = 2 * g + 2 - t;
    if points.len() != needed {
        return Err(GoppaError::WrongPointCount { expected: needed, got: points.len() });
    }
    let set = EvaluationSet::new(points.to_vec(), u, v, h)?;
    let samples: Vec<(FieldElement, FieldElement)> = (0..needed)
        .map(|s| {
            let (x, y) = (&set.points[s].x, &set.points[s].y);
            let (vs, hs) = (&set.v_values[s], &set.h_values[s]);
            let num = &(&(vs * vs) + &(hs * vs)) - &(&(y * y) + &(y * hs));
            (x.clone(), num.try_div(&set.u_values[s]).expect("u(x_s) is nonzero"))
        })
        .collect();
    let c = Polynomial::interpolate(field, &samples, Some(needed - 1)).map_err(|e| match e {
        PolyError::DuplicateAbscissa(x) => GoppaError::DuplicateAbscissa(x),
        _ => GoppaError::FieldMismatch,
    })?;
    let f = &(&(v * v) + &(h * v)) - &(&c * u);
    if f.deg() != (2 * g + 1) as i64 {
        return Err(GoppaError::SingularCurve(format!("deg f = {} instead of {}", f.deg(), 2 * g + 1)));
    }
    let curve = HyperellipticCurve::new_general(f, h.clone()).map_err(|e| match e {
        CurveError::EvenDegree(d) => GoppaError::SingularCurve(format!("deg f = {d}")),
        other => GoppaError::SingularCurve(other.to_string()),
    })?;
    MumfordDivisor::new(&curve, u.clone(), v.clone()).map_err(|e| GoppaError::SingularCurve(e.to_string()))?;
    Ok(curve)
}

/// Result of [`fit_curve_filling`]: the curve and every point it was forced through.
#[derive(Clone, Debug)]
pub struct FittedCurve {
    pub curve: HyperellipticCurve,
    pub points: Vec<AffinePoint>,
    pub attempts: usize,
}

/// Fits a curve through `required` (plus `extra`, in order) and tops up with
/// pseudorandom points drawn from `seed`, retrying when the fit is singular.
#[allow(clippy::too_many_arguments)]
pub fn fit_curve_filling(
    u: &Polynomial,
    v: &Polynomial,
    h: &Polynomial,
    g: usize,
    required: &[AffinePoint],
    extra: &[AffinePoint],
    seed: u64,
    max_attempts: usize,
) -> Result<FittedCurve, GoppaError> {
    let field = u.field();
    let t = check_pair(u, v, h, g)?;
    let needed = 2 * g + 2 - t;
    let mut fixed: Vec<AffinePoint> = required.iter().chain(extra).cloned().collect();
    if fixed.len() > needed {
        return Err(GoppaError::WrongPointCount { expected: needed, got: fixed.len() });
    }
    fixed.truncate(needed);
    let free = needed - fixed.len();
    let mut unused: Vec<FieldElement> =
        field.elements().filter(|x| !u.eval(x).is_zero() && fixed.iter().all(|p| &p.x != x)).collect();
    if unused.len() < free {
        return Err(GoppaError::WrongPointCount { expected: needed, got: fixed.len() + unused.len() });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last = GoppaError::FillExhausted(max_attempts);
    for attempt in 1..=max_attempts.max(1) {
        let mut points = fixed.clone();
        for i in 0..free {
            let j = rng.gen_range(i..unused.len());
            unused.swap(i, j);
            let y = field.element(rng.gen_range(0..field.order())).expect("in range");
            points.push(AffinePoint::new(unused[i].clone(), y));
        }
        match fit_curve(u, v, h, g, &points) {
            Ok(curve) => return Ok(FittedCurve { curve, points, attempts: attempt }),
            Err(GoppaError::SingularCurve(_)) if free > 0 => {
                last = GoppaError::FillExhausted(attempt);
            }
            Err(e) => return Err(e),
        }
    }
    Err(last)
}
