//! Riemann-Roch spaces on imaginary hyperelliptic curves, computed directly
//! from the Mumford representation of a divisor, and the algebraic-geometry
//! Goppa codes built from them.
//!
//! The crate is organised bottom-up:
//!
//! - [`field`], [`poly`], [`extension`]: GF(p^c) arithmetic, dense polynomials,
//!   factorization and splitting fields.
//! - [`curve`]: the model `y^2 + h(x) y = f(x)` with `deg f = 2g + 1`.
//! - [`function_field`]: functions `(a + b y)/c`, norms, valuations and principal divisors.
//! - [`divisor`]: Mumford pairs, Cantor composition/reduction, general divisor reduction.
//! - [`riemann_roch`]: explicit bases and dimensions of `L(Δ + mΩ)`.
//! - [`goppa`]: curve fitting, generator matrices, encoding, MDS and distance checks.
//! - [`io`]: the JSON/CSV file formats used by the command-line front end.

pub mod curve;
pub mod divisor;
pub mod extension;
pub mod field;
pub mod function_field;
pub mod goppa;
pub mod io;
pub mod linalg;
pub mod poly;
pub mod riemann_roch;
pub mod series;

pub use curve::{AffinePoint, CurveError, HyperellipticCurve};
pub use divisor::{DivisorError, GeneralDivisor, MumfordDivisor, ReductionResult};
pub use extension::Embedding;
pub use field::{Field, FieldElement, FieldError};
pub use function_field::{Divisor, FunctionFieldElement, FunctionFieldError};
pub use goppa::{Execution, GeneratorMatrix, GoppaError};
pub use poly::{PolyError, Polynomial};
pub use riemann_roch::{RiemannRochError, RrBasis};
