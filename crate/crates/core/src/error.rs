use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// f(1) is not ±1, so no integer-valued Dirichlet inverse exists.
    #[error("not a unit: f(1) = {value}, expected +1 or -1")]
    NotAUnit { value: BigInt },

    #[error("Dirichlet series diverges at s = {s} (requires s > 1)")]
    Divergent { s: f64 },

    /// The evaluation point lies at or below the real pole of the closed form.
    #[error(
        "s = {s} is outside the convergence domain: zeta({s}) = {zeta:.6} >= 2 \
         (the closed form has its pole at rho = {rho:.6})"
    )]
    SingularityDomain { s: f64, zeta: f64, rho: f64 },

    #[error("requested tolerance {tol:e} is below the attainable floating-point accuracy {attainable:e}")]
    ToleranceUnattainable { tol: f64, attainable: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
