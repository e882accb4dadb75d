//! Exact computation of the r-coloured partition function `p_{-r}(n)`, the
//! sum-of-divisors function `sigma(n)` and partial Bell polynomials
//! `B_{n,k}`, together with a verifier that mechanically checks the
//! identities relating them over user-chosen ranges.
//!
//! Everything is computed in arbitrary-precision rational arithmetic; there
//! is no floating point anywhere and every identity check is an exact
//! equality. The same quantity is always reachable by at least two
//! independent routes (generating function, recurrence, brute-force
//! enumeration), which is what makes the verifier meaningful.
//!
//! Module map:
//! - [`exact`]: big integers/rationals in canonical form, binomials, factorials
//! - [`series`]: truncated formal power series over exact rationals
//!   (product, inverse, log, exp, powers, the Euler product `E(q)`)
//! - [`divisors`]: `sigma(n)`, a divisor-sum sieve, `theta(n) = sigma(n)/n`
//! - [`compositions`]: enumeration of compositions of `n` into `m` parts
//! - [`partitions`]: `p(n)` and `p_{-r}(n)` by series, recurrence and
//!   brute-force counting
//! - [`bell`]: partial Bell polynomials by definition, recurrence and the
//!   nested-sum (composition) formula
//! - [`identities`]: right-hand-side evaluators and range verifiers for the
//!   identities connecting all of the above
//! - [`output`]: textual table/report formats shared with the CLI

pub mod bell;
pub mod compositions;
pub mod divisors;
pub mod exact;
pub mod identities;
pub mod output;
pub mod partitions;
pub mod series;

pub use exact::{ExactInt, ExactRat};

use thiserror::Error;

/// Errors surfaced by the library. Guard violations are deliberate cost
/// limits on the exponential-time oracles, not implementation limits.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("zero denominator in rational")]
    ZeroDenominator,
    #[error("series inverse requires a nonzero constant term")]
    InverseConstantZero,
    #[error("series logarithm requires constant term 1, found {found}")]
    LogConstantNotOne { found: String },
    #[error("series exponential requires constant term 0, found {found}")]
    ExpConstantNotZero { found: String },
    #[error("sigma(n) and theta(n) are defined for n >= 1")]
    SigmaOfZero,
    #[error("{what} guard exceeded: {detail}")]
    GuardExceeded { what: &'static str, detail: String },
    #[error("argument vector too short: need x_1..x_{need}, have {have}")]
    ArgsTooShort { need: usize, have: usize },
    #[error("{0}")]
    OutOfRange(String),
    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },
    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
