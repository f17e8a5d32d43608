//! Generators for the standard arithmetic functions and the two recursive ones.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use crate::divisors::DivisorTable;
use crate::error::{invalid, Error, Result};
use crate::seq::ArithSeq;

/// Identifiers accepted by [`gen_builtin`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BuiltinFn {
    /// ε, the convolution identity.
    Epsilon,
    /// μ.
    Mobius,
    /// The constant function **1**.
    One,
    /// id_x(n) = n^x.
    Id,
    /// Euler's totient, J_1.
    Phi,
    /// Jordan's totient J_x.
    Jordan,
    /// d = σ_0.
    NumDivisors,
    /// σ_x.
    Sigma,
    /// Recursive divisor function κ_x.
    Kappa,
    /// Number of ordered factorizations K.
    K,
}

impl BuiltinFn {
    pub const ALL: [BuiltinFn; 10] = [
        BuiltinFn::Epsilon,
        BuiltinFn::Mobius,
        BuiltinFn::One,
        BuiltinFn::Id,
        BuiltinFn::Phi,
        BuiltinFn::Jordan,
        BuiltinFn::NumDivisors,
        BuiltinFn::Sigma,
        BuiltinFn::Kappa,
        BuiltinFn::K,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BuiltinFn::Epsilon => "epsilon",
            BuiltinFn::Mobius => "mobius",
            BuiltinFn::One => "one",
            BuiltinFn::Id => "id",
            BuiltinFn::Phi => "phi",
            BuiltinFn::Jordan => "jordan",
            BuiltinFn::NumDivisors => "num_divisors",
            BuiltinFn::Sigma => "sigma",
            BuiltinFn::Kappa => "kappa",
            BuiltinFn::K => "K",
        }
    }

    /// Whether the exponent `x` changes the function.
    pub fn takes_exponent(self) -> bool {
        matches!(
            self,
            BuiltinFn::Id | BuiltinFn::Jordan | BuiltinFn::Sigma | BuiltinFn::Kappa
        )
    }

    fn label(self, x: u32) -> String {
        if self.takes_exponent() {
            format!("{}_{x}", self.name())
        } else {
            self.name().to_string()
        }
    }
}

impl fmt::Display for BuiltinFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BuiltinFn {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let f = match s {
            "epsilon" => BuiltinFn::Epsilon,
            "mobius" | "mu" => BuiltinFn::Mobius,
            "one" => BuiltinFn::One,
            "id" => BuiltinFn::Id,
            "phi" => BuiltinFn::Phi,
            "jordan" => BuiltinFn::Jordan,
            "num_divisors" | "d" => BuiltinFn::NumDivisors,
            "sigma" => BuiltinFn::Sigma,
            "kappa" => BuiltinFn::Kappa,
            "K" => BuiltinFn::K,
            other => return Err(invalid(format!("unknown function identifier `{other}`"))),
        };
        Ok(f)
    }
}

/// Tabulates a built-in function on `1..=n_max`. `x` is ignored by functions
/// without an exponent.
pub fn gen_builtin(name: BuiltinFn, x: u32, n_max: usize) -> Result<ArithSeq> {
    if n_max == 0 {
        return Err(invalid("n_max must be at least 1"));
    }
    let label = name.label(x);
    let values = match name {
        BuiltinFn::Epsilon => epsilon_values(n_max),
        BuiltinFn::Mobius => mobius_values(&DivisorTable::new(n_max)?),
        BuiltinFn::One => vec![BigInt::one(); n_max],
        BuiltinFn::Id => power_values(x, n_max),
        BuiltinFn::Phi => jordan_values(1, &DivisorTable::new(n_max)?),
        BuiltinFn::Jordan => jordan_values(x, &DivisorTable::new(n_max)?),
        BuiltinFn::NumDivisors => divisor_sum_values(0, n_max),
        BuiltinFn::Sigma => divisor_sum_values(x, n_max),
        BuiltinFn::Kappa => recursive_divisor_sieve(power_values(x, n_max)),
        BuiltinFn::K => recursive_divisor_sieve(epsilon_values(n_max)),
    };
    ArithSeq::new(label, values)
}

/// Shorthand for the common case `gen_builtin(..).unwrap()` with a validated range.
pub(crate) fn builtin(name: BuiltinFn, x: u32, n_max: usize) -> ArithSeq {
    gen_builtin(name, x, n_max).expect("n_max validated by caller")
}

fn epsilon_values(n_max: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); n_max];
    v[0] = BigInt::one();
    v
}

fn power_values(x: u32, n_max: usize) -> Vec<BigInt> {
    (1..=n_max).map(|n| BigInt::from(n).pow(x)).collect()
}

/// μ from the smallest-prime-factor table: μ(p·m) = 0 if p | m, else -μ(m).
fn mobius_values(table: &DivisorTable) -> Vec<BigInt> {
    let n_max = table.n_max();
    let mut mu = vec![0i8; n_max + 1];
    mu[1] = 1;
    for n in 2..=n_max {
        let p = table.smallest_prime_factor(n).unwrap();
        let m = n / p;
        mu[n] = if m.is_multiple_of(p) { 0 } else { -mu[m] };
    }
    mu[1..].iter().map(|&v| BigInt::from(v)).collect()
}

/// J_x is multiplicative with J_x(p^a) = p^{ax} - p^{(a-1)x}, so walking the
/// smallest prime factor gives J_x(p·m) = p^x J_x(m) when p | m and
/// (p^x - 1) J_x(m) otherwise.
fn jordan_values(x: u32, table: &DivisorTable) -> Vec<BigInt> {
    let n_max = table.n_max();
    let mut j: Vec<BigInt> = Vec::with_capacity(n_max);
    j.push(BigInt::one());
    for n in 2..=n_max {
        let p = table.smallest_prime_factor(n).unwrap();
        let m = n / p;
        let px = BigInt::from(p).pow(x);
        let factor = if m.is_multiple_of(p) { px } else { px - 1 };
        let v = &j[m - 1] * factor;
        j.push(v);
    }
    j
}

/// σ_x(n) = Σ_{d|n} d^x by pushing each d^x into the multiples of d.
fn divisor_sum_values(x: u32, n_max: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n_max];
    for d in 1..=n_max {
        let dx = BigInt::from(d).pow(x);
        for m in (d..=n_max).step_by(d) {
            out[m - 1] += &dx;
        }
    }
    out
}

/// Solves `f(n) = seed(n) + Σ_{d|n, d<n} f(d)` in ascending order.
///
/// When the outer loop reaches `d`, every proper divisor of `d` has already
/// pushed its value into slot `d`, so `f(d)` is final and is pushed on to
/// `2d, 3d, ...`. Total work is Σ N/d = O(N log N) additions.
fn recursive_divisor_sieve(mut values: Vec<BigInt>) -> Vec<BigInt> {
    let n_max = values.len();
    for d in 1..=n_max / 2 {
        let fd = values[d - 1].clone();
        if fd.is_zero() {
            continue;
        }
        for m in (2 * d..=n_max).step_by(d) {
            values[m - 1] += &fd;
        }
    }
    values
}
