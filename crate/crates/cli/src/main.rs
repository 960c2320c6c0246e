use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use mumford_rr::divisor::{reduce_general, DivisorError};
use mumford_rr::function_field::{FunctionFieldError, DEFAULT_MAX_EXTENSION};
use mumford_rr::goppa::{self, EvaluationSet, GoppaError};
use mumford_rr::io::{self, DivisorInput, FieldSpec, IoError};
use mumford_rr::riemann_roch::{self, RiemannRochError};
use mumford_rr::{CurveError, Execution, Field, FunctionFieldElement, HyperellipticCurve, Polynomial};

#[derive(Parser)]
#[command(name = "mumford-rr", version, about = "Riemann-Roch spaces and Goppa codes on hyperelliptic curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce a divisor to Δ + mΩ + div(ψ); prints {"u","v","m","psi"}.
    Reduce {
        #[arg(long)]
        curve: PathBuf,
        #[arg(long)]
        divisor: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Basis of L(D), one function per line, then its dimension.
    Basis {
        #[arg(long)]
        curve: PathBuf,
        #[arg(long)]
        divisor: PathBuf,
        /// Overrides "m" from a reduced divisor file.
        #[arg(long, allow_negative_numbers = true)]
        m: Option<i64>,
        /// Print coefficient lists instead of formulas.
        #[arg(long)]
        text: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// dim L(Δ + mΩ) from (g, t, m); without --m, a CSV table for m in 0..=m-max.
    Dim {
        #[arg(long)]
        g: i64,
        #[arg(long)]
        t: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        m: Option<i64>,
        #[arg(long)]
        m_max: Option<i64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Fit a curve through the divisor support and the given points, topping up with pseudorandom points.
    FitCurve {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        points: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Where to write every point the curve was forced through.
        #[arg(long)]
        points_out: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generator matrix of the Goppa code as CSV.
    Goppa {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        points: PathBuf,
        #[arg(long)]
        k: usize,
        /// Follow every point by its opposite.
        #[arg(long)]
        paired: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// message · G as comma-separated residues.
    Encode {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, allow_hyphen_values = true)]
        message: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exit 0 when every k×k minor is nonsingular, 1 otherwise.
    MdsCheck {
        #[command(flatten)]
        code: CodeArgs,
    },
    /// Minimum distance by exhaustive enumeration.
    Mindist {
        #[command(flatten)]
        code: CodeArgs,
    },
    /// Exit 0 when F lies in L(Δ + mΩ), 1 otherwise.
    Verify {
        #[arg(long)]
        curve: PathBuf,
        #[arg(long)]
        divisor: PathBuf,
        /// `([a..] + [b..]*y)/[c..]`
        #[arg(long)]
        function: String,
        #[arg(long, allow_negative_numbers = true)]
        m: Option<i64>,
        #[arg(long, default_value_t = DEFAULT_MAX_EXTENSION)]
        max_extension: usize,
    },
}

#[derive(Args)]
struct PairArgs {
    /// Field as p or p,c; ignored when --curve is given.
    #[arg(long)]
    field: Option<String>,
    /// Takes the field and h from a curve file.
    #[arg(long)]
    curve: Option<PathBuf>,
    #[arg(long, allow_hyphen_values = true)]
    u: String,
    #[arg(long, allow_hyphen_values = true)]
    v: String,
    #[arg(long, allow_hyphen_values = true)]
    h: Option<String>,
    #[arg(long)]
    g: usize,
}

#[derive(Args)]
struct CodeArgs {
    #[arg(long)]
    matrix: PathBuf,
    #[arg(long)]
    field: String,
    #[arg(long)]
    sequential: bool,
}

impl CodeArgs {
    fn load(&self) -> Result<goppa::GeneratorMatrix, Failure> {
        let field = FieldSpec::parse_flag(&self.field)?.build()?;
        let m = io::matrix_from_csv(&field, &read(&self.matrix)?)?;
        Ok(goppa::GeneratorMatrix::from_matrix(m))
    }

    fn execution(&self) -> Execution {
        if self.sequential {
            Execution::Sequential
        } else {
            Execution::default()
        }
    }
}

enum Failure {
    Validation(String),
    NonSplit(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Validation(_) => 2,
            Failure::NonSplit(_) => 3,
            Failure::Io(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Validation(m) | Failure::NonSplit(m) | Failure::Io(m) => m,
        }
    }
}

impl From<FunctionFieldError> for Failure {
    fn from(e: FunctionFieldError) -> Self {
        match e {
            FunctionFieldError::NonSplitSupport { .. } => Failure::NonSplit(format!("NonSplitSupport: {e}")),
            _ => Failure::Validation(format!("{e:?}: {e}")),
        }
    }
}

impl From<DivisorError> for Failure {
    fn from(e: DivisorError) -> Self {
        match e {
            DivisorError::Function(inner) => inner.into(),
            _ => Failure::Validation(format!("{e:?}: {e}")),
        }
    }
}

impl From<RiemannRochError> for Failure {
    fn from(e: RiemannRochError) -> Self {
        match e {
            RiemannRochError::Function(inner) => inner.into(),
            RiemannRochError::Divisor(inner) => inner.into(),
            _ => Failure::Validation(format!("{e:?}: {e}")),
        }
    }
}

impl From<GoppaError> for Failure {
    fn from(e: GoppaError) -> Self {
        Failure::Validation(format!("{e:?}: {e}"))
    }
}

impl From<CurveError> for Failure {
    fn from(e: CurveError) -> Self {
        Failure::Validation(format!("{e:?}: {e}"))
    }
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        match e {
            IoError::Divisor(inner) => inner.into(),
            _ => Failure::Validation(e.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_curve(path: &Path) -> Result<HyperellipticCurve, Failure> {
    Ok(io::curve_from_json(&read(path)?)?)
}

struct Pair {
    field: Field,
    u: Polynomial,
    v: Polynomial,
    h: Polynomial,
}

impl PairArgs {
    fn load(&self) -> Result<Pair, Failure> {
        let (field, curve_h) = match (&self.curve, &self.field) {
            (Some(path), _) => {
                let curve = load_curve(path)?;
                (curve.field().clone(), Some(curve.h().clone()))
            }
            (None, Some(spec)) => (FieldSpec::parse_flag(spec)?.build()?, None),
            (None, None) => return Err(Failure::Validation("one of --field or --curve is required".into())),
        };
        let u = io::polynomial_from_list(&field, &self.u)?;
        let v = io::polynomial_from_list(&field, &self.v)?;
        let h = match (&self.h, curve_h) {
            (Some(h), _) => io::polynomial_from_list(&field, h)?,
            (None, Some(h)) => h,
            (None, None) => Polynomial::zero(&field),
        };
        Ok(Pair { field, u, v, h })
    }
}

/// Returns the process exit code for commands whose answer is a boolean.
fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Reduce { curve, divisor, out } => {
            let curve = load_curve(&curve)?;
            let general = match io::divisor_from_json(&curve, &read(&divisor)?)? {
                DivisorInput::General(d) => d,
                DivisorInput::Reduced { delta, m } => {
                    let emb = delta.splitting_embedding(DEFAULT_MAX_EXTENSION)?;
                    if !emb.is_identity() {
                        return Err(Failure::Validation("reduce needs a divisor with rational support".into()));
                    }
                    let terms = delta.support(&emb)?.into_iter().map(|(p, n)| (p, n as i64)).collect();
                    mumford_rr::GeneralDivisor::new(terms, m - delta.degree() as i64)
                }
            };
            let r = reduce_general(&general, &curve)?;
            emit(&out, &format!("{}\n", io::reduced_to_json(&r.delta, r.m, Some(r.psi.to_text()))))?;
        }
        Command::Basis { curve, divisor, m, text, out } => {
            let curve = load_curve(&curve)?;
            let elements = match io::divisor_from_json(&curve, &read(&divisor)?)? {
                DivisorInput::Reduced { delta, m: file_m } => {
                    let m = m.unwrap_or(file_m);
                    let basis = riemann_roch::rr_basis(&delta, m)?;
                    let dim = riemann_roch::rr_dim(delta.degree() as i64, m, curve.genus() as i64)?;
                    debug_assert_eq!(dim, basis.dimension());
                    basis.elements
                }
                DivisorInput::General(d) => riemann_roch::rr_basis_general(&d, &curve)?.elements,
            };
            let mut listing = String::new();
            for e in &elements {
                listing.push_str(&if text { e.to_text() } else { e.to_string() });
                listing.push('\n');
            }
            listing.push_str(&format!("dim = {}\n", elements.len()));
            emit(&out, &listing)?;
        }
        Command::Dim { g, t, m, m_max, out } => match (t, m) {
            (Some(t), Some(m)) => {
                let dim = riemann_roch::rr_dim(t, m, g)?;
                let deboer = riemann_roch::deboer_threshold_check(t, m, g);
                emit(&out, &format!("dim = {dim}\ndeboer = {deboer}\n"))?;
            }
            (_, None) => {
                let rows = riemann_roch::dimension_table(g, m_max.unwrap_or(3 * (2 * g + 1)))?;
                let rows: Vec<_> = rows.into_iter().filter(|r| t.is_none_or(|t| r.t == t)).collect();
                emit(&out, &riemann_roch::dimension_table_csv(&rows))?;
            }
            (None, Some(_)) => return Err(Failure::Validation("--m needs --t".into())),
        },
        Command::FitCurve { pair, points, seed, points_out, out } => {
            let g = pair.g;
            let pair = pair.load()?;
            let required = match &points {
                Some(path) => io::points_from_json(&pair.field, &read(path)?)?,
                None => Vec::new(),
            };
            let fitted = goppa::fit_curve_filling(&pair.u, &pair.v, &pair.h, g, &required, &[], seed, 64)?;
            if let Some(path) = &points_out {
                emit(&Some(path.clone()), &format!("{}\n", io::points_to_json(&fitted.points)))?;
            }
            emit(&out, &format!("{}\n", io::curve_to_json(&fitted.curve)))?;
        }
        Command::Goppa { pair, points, k, paired, out } => {
            let g = pair.g;
            let pair = pair.load()?;
            let pts = io::points_from_json(&pair.field, &read(&points)?)?;
            let set = if paired {
                EvaluationSet::paired(&pts, &pair.u, &pair.v, &pair.h)?
            } else {
                EvaluationSet::new(pts, &pair.u, &pair.v, &pair.h)?
            };
            let gm = goppa::generator_matrix(&pair.u, &pair.v, &pair.h, g, k, &set)?;
            for w in &gm.warnings {
                eprintln!("warning: {w}");
            }
            emit(&out, &io::matrix_to_csv(&gm.matrix))?;
        }
        Command::Encode { code, message, out } => {
            let gm = code.load()?;
            let msg = io::elements_from_csv(gm.field(), &message)?;
            let word = goppa::encode(&gm, &msg)?;
            emit(&out, &format!("{}\n", io::elements_to_csv(&word)))?;
        }
        Command::MdsCheck { code } => {
            let gm = code.load()?;
            let report = goppa::mds_check_with(&gm, code.execution())?;
            println!("minors = {}", report.total_minors);
            println!("checked = {}", report.minors_checked);
            if let Some(cols) = &report.singular_minor {
                println!("singular = {cols:?}");
            }
            match report.distance {
                Some(d) => println!("mds = true\ndistance = {d}"),
                None => println!("mds = false"),
            }
            return Ok(if report.mds { 0 } else { 1 });
        }
        Command::Mindist { code } => {
            let gm = code.load()?;
            let d = goppa::min_distance_bruteforce_with(&gm, code.execution())?;
            println!("distance = {d}");
        }
        Command::Verify { curve, divisor, function, m, max_extension } => {
            let curve = load_curve(&curve)?;
            let DivisorInput::Reduced { delta, m: file_m } = io::divisor_from_json(&curve, &read(&divisor)?)? else {
                return Err(Failure::Validation("verify needs a reduced {u, v, m} divisor".into()));
            };
            let f = FunctionFieldElement::parse(&curve, &function)?;
            let member = riemann_roch::membership_check(&f, &delta, m.unwrap_or(file_m), max_extension)?;
            println!("{member}");
            return Ok(if member { 0 } else { 1 });
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}
