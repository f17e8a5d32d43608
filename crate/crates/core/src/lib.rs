//! Exact Dirichlet-convolution algebra over integer sequences, centred on the
//! recursive divisor function κ_x and the ordered-factorization count K.
//!
//! Sequences are tabulated exactly on `1..=N` with arbitrary-precision
//! integers. [`builtin`] generates the standard functions, [`seq`] provides
//! convolution and inversion, [`identities`] checks the convolution
//! identities linking them, [`dyadic`] sums the halving series exactly, and
//! [`numerics`] handles the real-variable Dirichlet series.

pub mod bfile;
pub mod builtin;
pub mod divisors;
pub mod dyadic;
pub mod error;
pub mod format;
pub mod identities;
pub mod numerics;
pub mod oracles;
pub mod parallel;
pub mod seq;

pub use builtin::{gen_builtin, BuiltinFn};
pub use divisors::DivisorTable;
pub use dyadic::{series_partial, RatSeq, SeriesKind};
pub use error::{Error, Result};
pub use identities::{check_all, check_identity, IdentityReport};
pub use numerics::{
    dirichlet_partial_sum, find_singularity, verify_kappa_series, zeta, SeriesPoint, ZetaValue,
};
pub use seq::ArithSeq;

/// `f * g` on a shared range.
pub fn dirichlet_convolve(f: &ArithSeq, g: &ArithSeq) -> Result<ArithSeq> {
    f.convolve(g)
}

/// The integer Dirichlet inverse of `f`; requires `f(1) = ±1`.
pub fn dirichlet_inverse(f: &ArithSeq) -> Result<ArithSeq> {
    f.inverse()
}

/// Divisor table on `1..=n_max`.
pub fn make_divisor_table(n_max: usize) -> Result<DivisorTable> {
    DivisorTable::new(n_max)
}
