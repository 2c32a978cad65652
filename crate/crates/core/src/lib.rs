//! Exact and high-precision machinery for a family of Bernoulli/zeta identities:
//! a pi-graded exact layer (rational coefficients attached to powers of pi), a
//! generic Hessenberg/corner-layered determinant engine, Ramanujan-style even
//! polynomials and their derivative identities, and an MPFR-backed numeric layer
//! (double-exponential quadrature, Hurwitz/Lerch/L functions, Mellin-type
//! recurrence constants, lattice sums and Hurwitz numbers).
//!
//! The `report` module ties the check families into machine-readable suites.

pub mod bernoulli;
pub mod dzeta;
pub mod hessenberg;
pub mod identities;
pub mod lattice;
pub mod mellin;
pub mod pipoly;
pub mod prec;
pub mod quad;
pub mod rampoly;
pub mod rational;
pub mod report;
pub mod special;

pub use pipoly::PiPoly;
pub use prec::Ctx;
pub use rational::Rat;

/// Checked domain errors. Math routines return these instead of panicking on
/// bad arguments; internal invariant violations still assert.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Argument outside the operation's domain (message names the constraint).
    Domain(String),
    /// An even-index quantity was requested at an odd index or vice versa.
    Parity(String),
    /// Exact division of pi-polynomials would need a negative pi power.
    PiDegree(String),
    /// A numeric routine failed to reach its accuracy target.
    Numeric(String),
}

impl std::fmt::Display for Error {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Error::Domain(m) => write!(f, "domain: {m}"),
            Error::Parity(m) => write!(f, "parity: {m}"),
            Error::PiDegree(m) => write!(f, "pi degree: {m}"),
            Error::Numeric(m) => write!(f, "numeric: {m}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
