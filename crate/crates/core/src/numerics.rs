//! Floating-point side: ζ(s) for real s > 1, truncated Dirichlet series, and
//! the numerical comparison of Σ κ_x(n)/n^s with ζ(s-x)/(2-ζ(s)).

// `!(a > b)` guards below are written that way so NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::builtin::{gen_builtin, BuiltinFn};
use crate::error::{invalid, Error, Result};
use crate::seq::ArithSeq;

/// Bernoulli numbers B_2, B_4, ..., B_14.
const BERNOULLI_EVEN: [f64; 7] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
];

/// Correction terms used before the remainder; the next one bounds the error.
const EM_TERMS: usize = 6;

const MAX_CUTOFF: u64 = 1 << 24;

/// Neumaier's variant of compensated summation.
#[derive(Debug, Default, Clone, Copy)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.compensation += (self.sum - t) + v;
        } else {
            self.compensation += (v - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut s = Self::new();
        iter.into_iter().for_each(|v| s.add(v));
        s
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ZetaValue {
    pub s: f64,
    pub value: f64,
    pub abs_error_bound: f64,
}

/// Euler–Maclaurin term `j` (1-based): B_{2j}/(2j)! · s(s+1)···(s+2j-2) · M^{-s-2j+1}.
fn em_term(j: usize, s: f64, m: f64) -> f64 {
    let mut rising = 1.0;
    let mut fact = 1.0;
    for i in 0..(2 * j - 1) {
        rising *= s + i as f64;
    }
    for i in 1..=(2 * j) {
        fact *= i as f64;
    }
    BERNOULLI_EVEN[j - 1] / fact * rising * m.powf(-s - 2.0 * j as f64 + 1.0)
}

/// ζ(s) for real `s > 1` with a certified-in-exact-arithmetic error bound.
///
/// Sums `n^-s` directly for `n < M`, then adds the integral tail
/// `M^{1-s}/(s-1)`, the endpoint term `M^{-s}/2`, and six Bernoulli
/// corrections. For real `s` the truncation error is at most the first
/// omitted correction; `M` is doubled until that drops below `tol / 2`.
pub fn zeta(s: f64, tol: f64) -> Result<ZetaValue> {
    if !(s > 1.0) {
        return Err(Error::Divergent { s });
    }
    if !(tol > 0.0) {
        return Err(invalid("zeta tolerance must be positive"));
    }
    // ζ(s) > 1, so the rounding term alone exceeds this
    if tol < 4.0 * f64::EPSILON {
        return Err(Error::ToleranceUnattainable {
            tol,
            attainable: 4.0 * f64::EPSILON,
        });
    }
    let mut cutoff: u64 = 8;
    loop {
        let m = cutoff as f64;
        let truncation = em_term(EM_TERMS + 1, s, m).abs();
        if truncation <= tol / 2.0 || cutoff >= MAX_CUTOFF {
            let mut acc: CompensatedSum = (1..cutoff).map(|n| (n as f64).powf(-s)).collect();
            acc.add(m.powf(1.0 - s) / (s - 1.0));
            acc.add(0.5 * m.powf(-s));
            for j in 1..=EM_TERMS {
                acc.add(em_term(j, s, m));
            }
            let value = acc.value();
            // each power carries ~1 ulp, compensated summation adds ~2 ulp of the total
            let rounding = 4.0 * f64::EPSILON * value.abs();
            let bound = truncation + rounding;
            if bound > tol {
                return Err(Error::ToleranceUnattainable {
                    tol,
                    attainable: bound,
                });
            }
            return Ok(ZetaValue {
                s,
                value,
                abs_error_bound: bound,
            });
        }
        cutoff *= 2;
    }
}

/// Tolerance used internally wherever ζ feeds another computation.
const INTERNAL_ZETA_TOL: f64 = 1e-13;

fn zeta_internal(s: f64) -> Result<f64> {
    zeta(s, INTERNAL_ZETA_TOL).map(|z| z.value)
}

/// A truncated Dirichlet series `Σ_{n ≤ n_terms} f(n) / n^s`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeriesPoint {
    pub s: f64,
    pub n_terms: usize,
    pub partial_sum: f64,
    pub tail_note: String,
}

/// `Σ_{n=1}^{n_max} f(n) / n^s`, summed in ascending `n` with compensation.
pub fn dirichlet_partial_sum(f: &ArithSeq, s: f64) -> SeriesPoint {
    let (sums, last) = partial_sums_at(f, s, &[f.n_max()]);
    SeriesPoint {
        s,
        n_terms: f.n_max(),
        partial_sum: sums[0],
        tail_note: format!("last term |f(N)/N^s| = {last:.3e}; tail not bounded"),
    }
}

/// Running partial sums read off at each checkpoint (ascending, within range),
/// plus the magnitude of the final term.
pub fn partial_sums_at(f: &ArithSeq, s: f64, checkpoints: &[usize]) -> (Vec<f64>, f64) {
    let mut acc = CompensatedSum::new();
    let mut out = Vec::with_capacity(checkpoints.len());
    let mut next = checkpoints.iter().peekable();
    let mut last = 0.0;
    for (n, v) in f.iter() {
        let fv = v.to_f64().unwrap_or(f64::NAN);
        last = if fv == 0.0 {
            0.0
        } else {
            fv * (n as f64).powf(-s)
        };
        acc.add(last);
        while next.peek() == Some(&&n) {
            out.push(acc.value());
            next.next();
        }
    }
    (out, last.abs())
}

/// Outcome of comparing truncated Σ κ_x(n)/n^s with its closed form.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KappaSeriesReport {
    pub x: u32,
    pub s: f64,
    pub closed_form: f64,
    /// `(n_max/4, n_max/2, n_max)`.
    pub checkpoints: [usize; 3],
    pub partial_sums: [f64; 3],
    /// `|closed_form - partial_sum|` at each checkpoint.
    pub gaps: [f64; 3],
    pub relative_gap: f64,
    pub tol: f64,
    pub shrinking: bool,
    pub passed: bool,
}

/// ζ(s-x) / (2 - ζ(s)), guarded to the region where the series converges.
pub fn kappa_series_closed_form(x: u32, s: f64) -> Result<f64> {
    check_kappa_domain(x, s)?;
    Ok(zeta_internal(s - x as f64)? / (2.0 - zeta_internal(s)?))
}

fn check_kappa_domain(x: u32, s: f64) -> Result<()> {
    let rho = || find_singularity(1e-10).unwrap_or(f64::NAN);
    if !(s > 1.0) {
        return Err(Error::SingularityDomain {
            s,
            zeta: f64::INFINITY,
            rho: rho(),
        });
    }
    let z = zeta_internal(s)?;
    if z >= 2.0 {
        return Err(Error::SingularityDomain {
            s,
            zeta: z,
            rho: rho(),
        });
    }
    if !(s - x as f64 > 1.0) {
        return Err(Error::Divergent { s: s - x as f64 });
    }
    Ok(())
}

/// Gap sequence is shrinking if each gap is no larger than the previous one,
/// treating anything below `floor` as converged.
pub fn gaps_shrinking(gaps: &[f64], floor: f64) -> bool {
    gaps.windows(2).all(|w| w[1] <= w[0] || w[1] <= floor)
}

/// Compares Σ_{n ≤ N} κ_x(n)/n^s with ζ(s-x)/(2-ζ(s)) at N/4, N/2 and N.
/// Passes when the relative gap at N is below `tol` and the gap shrinks
/// across the two doublings.
pub fn verify_kappa_series(x: u32, s: f64, n_max: usize, tol: f64) -> Result<KappaSeriesReport> {
    if n_max < 4 {
        return Err(invalid("n_max must be at least 4 to take three doublings"));
    }
    if !(tol > 0.0) {
        return Err(invalid("tolerance must be positive"));
    }
    let closed_form = kappa_series_closed_form(x, s)?;
    let kappa = gen_builtin(BuiltinFn::Kappa, x, n_max)?;
    let checkpoints = [n_max / 4, n_max / 2, n_max];
    let (sums, _) = partial_sums_at(&kappa, s, &checkpoints);
    let partial_sums = [sums[0], sums[1], sums[2]];
    let gaps = partial_sums.map(|p| (closed_form - p).abs());
    let relative_gap = gaps[2] / closed_form.abs();
    let floor = 1e-12 * closed_form.abs();
    let shrinking = gaps_shrinking(&gaps, floor);
    Ok(KappaSeriesReport {
        x,
        s,
        closed_form,
        checkpoints,
        partial_sums,
        gaps,
        relative_gap,
        tol,
        shrinking,
        passed: shrinking && relative_gap < tol,
    })
}

/// The real point ρ in (1.5, 2) where ζ(ρ) = 2, by bisection to width `tol`.
pub fn find_singularity(tol: f64) -> Result<f64> {
    if !(tol > 0.0) {
        return Err(invalid("bisection tolerance must be positive"));
    }
    let (mut lo, mut hi) = (1.5f64, 2.0f64);
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        // ζ is decreasing on (1, ∞): above 2 means mid is left of ρ
        if zeta_internal(mid)? > 2.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}
