//! Exact integer-valued arithmetic functions tabulated on `1..=n_max`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{invalid, Error, Result};
use crate::parallel;

/// Below this range the convolution always runs on the calling thread.
const PARALLEL_THRESHOLD: usize = 1 << 15;

/// An arithmetic function `f(1), ..., f(n_max)` with arbitrary-precision values.
///
/// Values are stored 0-based internally; every public accessor is 1-based.
#[derive(Clone, PartialEq, Eq)]
pub struct ArithSeq {
    label: String,
    values: Vec<BigInt>,
}

impl ArithSeq {
    pub fn new(label: impl Into<String>, values: Vec<BigInt>) -> Result<Self> {
        if values.is_empty() {
            return Err(invalid("a sequence needs at least one value (n_max >= 1)"));
        }
        Ok(Self {
            label: label.into(),
            values,
        })
    }

    pub fn from_fn<F, V>(label: impl Into<String>, n_max: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(usize) -> V,
        V: Into<BigInt>,
    {
        Self::new(label, (1..=n_max).map(|n| f(n).into()).collect())
    }

    pub fn from_i64s(label: impl Into<String>, values: &[i64]) -> Result<Self> {
        Self::new(label, values.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn n_max(&self) -> usize {
        self.values.len()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// `f(n)` for `1 <= n <= n_max`.
    ///
    /// Panics when `n` is out of range.
    pub fn get(&self, n: usize) -> &BigInt {
        assert!(
            (1..=self.n_max()).contains(&n),
            "index {n} outside 1..={}",
            self.n_max()
        );
        &self.values[n - 1]
    }

    /// Values in order `f(1), f(2), ...`.
    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn into_values(self) -> Vec<BigInt> {
        self.values
    }

    /// `(n, f(n))` pairs.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigInt)> + '_ {
        self.values.iter().enumerate().map(|(i, v)| (i + 1, v))
    }

    /// Restriction to `1..=n_max`.
    pub fn truncate(&self, n_max: usize) -> Result<Self> {
        if n_max == 0 || n_max > self.n_max() {
            return Err(invalid(format!(
                "cannot truncate a length-{} sequence to {n_max}",
                self.n_max()
            )));
        }
        Self::new(self.label.clone(), self.values[..n_max].to_vec())
    }

    /// First index where the two sequences differ.
    pub fn first_mismatch(&self, other: &Self) -> Option<usize> {
        self.values
            .iter()
            .zip(&other.values)
            .position(|(a, b)| a != b)
            .map(|i| i + 1)
            .or_else(|| {
                (self.n_max() != other.n_max()).then(|| self.n_max().min(other.n_max()) + 1)
            })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_range(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a + b)
            .collect();
        Self::new(format!("({} + {})", self.label, other.label), values)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_range(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a - b)
            .collect();
        Self::new(format!("({} - {})", self.label, other.label), values)
    }

    pub fn scale(&self, k: i64) -> Self {
        let k = BigInt::from(k);
        Self {
            label: format!("{k}*{}", self.label),
            values: self.values.iter().map(|v| v * &k).collect(),
        }
    }

    /// Dirichlet convolution `(f * g)(n) = Σ_{d|n} f(d) g(n/d)`.
    ///
    /// Runs the double loop over `d` and its multiples. Large ranges are split
    /// into contiguous blocks of `n` handled on separate threads; each block is
    /// summed exactly, so the result does not depend on the thread count.
    pub fn convolve(&self, other: &Self) -> Result<Self> {
        self.same_range(other)?;
        let n = self.n_max();
        let threads = if n >= PARALLEL_THRESHOLD {
            parallel::thread_count()
        } else {
            1
        };
        let values = if threads <= 1 {
            convolve_block(&self.values, &other.values, 1, n)
        } else {
            let ranges = parallel::chunk_ranges(n, threads);
            std::thread::scope(|scope| {
                let handles: Vec<_> = ranges
                    .iter()
                    .map(|&(lo, hi)| {
                        scope.spawn(move || convolve_block(&self.values, &other.values, lo, hi))
                    })
                    .collect();
                handles
                    .into_iter()
                    .flat_map(|h| h.join().expect("convolution worker panicked"))
                    .collect()
            })
        };
        Self::new(format!("({} * {})", self.label, other.label), values)
    }

    /// Dirichlet inverse over the integers; requires `f(1) = ±1`.
    ///
    /// `g(1) = f(1)` and `g(n) = -f(1) Σ_{d|n, d<n} f(n/d) g(d)`. The sum is
    /// accumulated by a sieve: once `g(d)` is final it is pushed into every
    /// multiple `k·d`, so `g` costs O(N log N) multiplications.
    pub fn inverse(&self) -> Result<Self> {
        let f1 = self.values[0].clone();
        if !(f1.is_one() || (-&f1).is_one()) {
            return Err(Error::NotAUnit { value: f1 });
        }
        let n = self.n_max();
        let mut acc: Vec<BigInt> = vec![BigInt::zero(); n];
        acc[0] = f1.clone();
        for d in 1..=n {
            let gd = if d == 1 {
                f1.clone()
            } else {
                let s = std::mem::take(&mut acc[d - 1]);
                if f1.is_negative() {
                    s
                } else {
                    -s
                }
            };
            if !gd.is_zero() {
                for k in 2..=n / d {
                    let fk = &self.values[k - 1];
                    if !fk.is_zero() {
                        acc[k * d - 1] += fk * &gd;
                    }
                }
            }
            acc[d - 1] = gd;
        }
        Self::new(format!("{}^-1", self.label), acc)
    }

    fn same_range(&self, other: &Self) -> Result<()> {
        if self.n_max() != other.n_max() {
            return Err(invalid(format!(
                "range mismatch: {} has n_max {}, {} has n_max {}",
                self.label,
                self.n_max(),
                other.label,
                other.n_max()
            )));
        }
        Ok(())
    }
}

/// Convolution restricted to output indices `lo..=hi`.
fn convolve_block(f: &[BigInt], g: &[BigInt], lo: usize, hi: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); hi - lo + 1];
    for d in 1..=hi {
        let fd = &f[d - 1];
        if fd.is_zero() {
            continue;
        }
        let k_start = lo.div_ceil(d).max(1);
        for k in k_start..=hi / d {
            let gk = &g[k - 1];
            if !gk.is_zero() {
                out[d * k - lo] += fd * gk;
            }
        }
    }
    out
}

impl fmt::Debug for ArithSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const SHOWN: usize = 16;
        write!(f, "ArithSeq({}, n_max={}, [", self.label, self.n_max())?;
        for (i, v) in self.values.iter().take(SHOWN).enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        if self.n_max() > SHOWN {
            f.write_str(", ...")?;
        }
        f.write_str("])")
    }
}
