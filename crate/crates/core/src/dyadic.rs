//! Dyadic-rational sequences and the truncated halving series for κ_x and K.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::builtin::{builtin, BuiltinFn};
use crate::error::{invalid, Result};
use crate::seq::ArithSeq;

/// Values `numerator(n) / 2^m` on `1..=n_max`, all sharing one denominator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatSeq {
    numerators: Vec<BigInt>,
    denominator_exponent: u32,
}

impl RatSeq {
    pub fn new(numerators: Vec<BigInt>, denominator_exponent: u32) -> Result<Self> {
        if numerators.is_empty() {
            return Err(invalid("a sequence needs at least one value (n_max >= 1)"));
        }
        Ok(Self {
            numerators,
            denominator_exponent,
        })
    }

    pub fn n_max(&self) -> usize {
        self.numerators.len()
    }

    pub fn denominator_exponent(&self) -> u32 {
        self.denominator_exponent
    }

    pub fn numerators(&self) -> &[BigInt] {
        &self.numerators
    }

    /// Numerator at `n` (1-based); the value is this over `2^m`.
    pub fn numerator(&self, n: usize) -> &BigInt {
        &self.numerators[n - 1]
    }

    /// Exact equality of entry `n` with `num / 2^exp`, by cross-multiplication.
    pub fn entry_equals(&self, n: usize, num: &BigInt, exp: u32) -> bool {
        let (a, b) = cross(self.numerator(n), self.denominator_exponent, num, exp);
        a == b
    }

    /// `|entry(n) - target|` as a dyadic pair `(numerator, exponent)`.
    pub fn abs_error(&self, n: usize, target: &BigInt) -> (BigInt, u32) {
        let m = self.denominator_exponent;
        ((self.numerator(n) - (target << m)).abs(), m)
    }

    /// Whether `|entry(n) - target| <= 2^-bits`.
    pub fn within_pow2(&self, n: usize, target: &BigInt, bits: u32) -> bool {
        let (err, m) = self.abs_error(n, target);
        (err << bits) <= (BigInt::one() << m)
    }

    pub fn to_f64(&self, n: usize) -> f64 {
        let v = self.numerator(n).to_f64().unwrap_or(f64::NAN);
        v / 2f64.powi(self.denominator_exponent as i32)
    }
}

/// Compares two dyadic values `a / 2^ea` and `b / 2^eb`.
pub fn cmp_dyadic(a: &BigInt, ea: u32, b: &BigInt, eb: u32) -> Ordering {
    let (x, y) = cross(a, ea, b, eb);
    x.cmp(&y)
}

fn cross(a: &BigInt, ea: u32, b: &BigInt, eb: u32) -> (BigInt, BigInt) {
    match ea.cmp(&eb) {
        Ordering::Less => (a << (eb - ea), b.clone()),
        Ordering::Greater => (a.clone(), b << (ea - eb)),
        Ordering::Equal => (a.clone(), b.clone()),
    }
}

/// Which halving series to truncate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    /// κ_x = id_x/2 + (1*id_x)/2^2 + (1*1*id_x)/2^3 + ...
    Kappa,
    /// K = ε/2 + 1/2^2 + (1*1)/2^3 + ...
    K,
}

/// Exact sum of the first `m` terms `(1^{*(k-1)} * base) / 2^k`, `k = 1..=m`,
/// with `base = id_x` for κ and `base = ε` for K.
///
/// Each term's convolution is obtained from the previous one by one more
/// convolution with **1**, and the numerators are accumulated Horner-style
/// over the shared denominator `2^m`.
pub fn series_partial(kind: SeriesKind, x: u32, m: u32, n_max: usize) -> Result<RatSeq> {
    if m == 0 {
        return Err(invalid("term count m must be at least 1"));
    }
    if n_max == 0 {
        return Err(invalid("n_max must be at least 1"));
    }
    let base = match kind {
        SeriesKind::Kappa => builtin(BuiltinFn::Id, x, n_max),
        SeriesKind::K => builtin(BuiltinFn::Epsilon, 0, n_max),
    };
    // numerator = Σ_k term_k · 2^(m-k) = (((t_1)·2 + t_2)·2 + ...) + t_m
    let mut acc: Vec<BigInt> = vec![BigInt::zero(); n_max];
    let mut term = base.into_values();
    for k in 1..=m {
        for (a, t) in acc.iter_mut().zip(&term) {
            *a <<= 1u32;
            *a += t;
        }
        if k < m {
            term = summatory_over_divisors(&term);
        }
    }
    RatSeq::new(acc, m)
}

/// `(1 * f)(n) = Σ_{d|n} f(d)` on the same range.
fn summatory_over_divisors(f: &[BigInt]) -> Vec<BigInt> {
    let n_max = f.len();
    let mut out = vec![BigInt::zero(); n_max];
    for d in 1..=n_max {
        let fd = &f[d - 1];
        if fd.is_zero() {
            continue;
        }
        for mult in (d..=n_max).step_by(d) {
            out[mult - 1] += fd;
        }
    }
    out
}

/// The limit the series converges to, as an exact integer sequence.
pub fn series_limit(kind: SeriesKind, x: u32, n_max: usize) -> Result<ArithSeq> {
    match kind {
        SeriesKind::Kappa => crate::builtin::gen_builtin(BuiltinFn::Kappa, x, n_max),
        SeriesKind::K => crate::builtin::gen_builtin(BuiltinFn::K, 0, n_max),
    }
}
