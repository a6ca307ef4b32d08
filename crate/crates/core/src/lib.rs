//! Exact-arithmetic engine for the class of the double-point divisor on the
//! moduli space of pointed curves.
//!
//! For `g = 3s` and `d = 2s + 2` the locus of smooth pointed curves `[C, p]`
//! carrying a net of degree `d` that maps `p` to a double point is a divisor
//! in the moduli space of 1-pointed genus-`g` curves. This crate computes its
//! class on the standard basis (lambda, psi, delta_0, ..., delta_{g-1}) with
//! exact rational coefficients, reproducing every intermediate step of the
//! cohomological computation: the graded-ring expansion on a triple product
//! of curves times a Brill-Noether locus, Grothendieck-Riemann-Roch fiber
//! integration, Newton identities, the 2x2 Porteous determinant and the final
//! top-degree evaluation, together with the test-curve relations that pin the
//! boundary coefficients.
//!
//! Floating point is never used; all coefficients are `BigRational`.

pub mod brill_noether;
pub mod chern;
pub mod divisor;
pub mod oracle;
pub mod report;
pub mod ring;

use num_bigint::BigInt;

/// Exact rational scalar used for every coefficient in the crate.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for the reduced fraction `n / d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Render a rational in lowest terms, omitting a denominator of one.
pub fn rational_str(q: &Rational) -> String {
    if q.denom() == &BigInt::from(1) {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Malformed arguments: out-of-range parameters, mixed presentations,
    /// inputs violating a documented precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// An internal consistency check failed against a known closed form or
    /// golden expression. The message names the first diverging quantity.
    #[error("verification failed: {0}")]
    Verification(String),
    /// The engine itself misbehaved (e.g. the rewrite guard tripped).
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
