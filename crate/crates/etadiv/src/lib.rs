//! Exact arithmetic for divisors and zero-locations of eta-quotients and
//! classical modular forms on `Gamma_0(N)`.
//!
//! Everything here is computed over the rationals with arbitrary precision;
//! there is no floating point anywhere in the crate. The main pieces:
//!
//! * [`qseries`]: truncated q-expansions with exponents in units of 1/24,
//!   including the product expansion of the Dedekind eta function and the
//!   level-1 Eisenstein series.
//! * [`gamma0`]: index, elliptic-point counts, cusp enumeration, and genus
//!   of the congruence subgroup `Gamma_0(N)`.
//! * [`eta`]: eta-quotients, their modularity conditions, and their exact
//!   orders of vanishing at every cusp.
//! * [`valence`]: divisors on the modular curve `X_0(N)` and the valence
//!   formula that constrains them, plus level-1 dimension counts.
//! * [`catalog`]: an embedded table of cuspforms whose zero sets are
//!   pinned down by the valence formula, with machine verification.
//! * [`cli`]: the command-line front end, exposed as a library function so
//!   it can be tested without spawning processes.
//!
//! The runnable programs under `examples/` walk through each capability;
//! `cargo run --example eta_divisor` is a good starting point.

pub mod arith;
pub mod catalog;
pub mod cli;
pub mod eta;
pub mod gamma0;
pub mod qseries;
pub mod rational;
pub mod valence;

pub use catalog::{CatalogRow, FormFixture};
pub use eta::{CuspDivisor, EtaQuotient, LigozatReport};
pub use gamma0::{BasePoint, Cusp, FiberStructure, Gamma0Data};
pub use qseries::QSeries;
pub use rational::Rational;
pub use valence::{Divisor, Place};

/// Errors shared by every module in the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A domain precondition failed (zero level, odd weight, and so on).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// Division of a series by a series that is zero to its precision.
    #[error("division by a series that is zero to its precision")]
    DivisionByZero,
    /// A valuation was requested of a series with no visible terms; the
    /// true valuation could be anything at or beyond the precision bound.
    #[error("series is zero to its precision, valuation is indeterminate")]
    IndeterminateValuation,
    /// Text input did not match the expected grammar.
    #[error("cannot parse `{token}`: expected {expected}")]
    Parse {
        token: String,
        expected: &'static str,
    },
    /// A cusp or divisor from one level was used with another.
    #[error("cusp belongs to level {found}, expected level {expected}")]
    LevelMismatch { expected: u64, found: u64 },
    /// A cusp order that must be an integer is not.
    #[error("non-integral order {order} at cusp {cusp}")]
    NonIntegralOrder { cusp: String, order: String },
    /// The computation is well posed but outside what this crate decides.
    #[error("unsupported case: {0}")]
    UnsupportedCase(String),
}
