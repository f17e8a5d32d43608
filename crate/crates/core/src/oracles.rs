//! Slow reference implementations. Nothing here touches the sieve or the
//! divisor table, so a bug there cannot hide behind a matching bug here.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use crate::error::{invalid, Result};

/// K(n) by recursion on the first factor: K(n) = Σ_{f | n, f ≥ 2} K(n/f),
/// with the empty product giving K(1) = 1.
pub fn count_ordered_factorizations(n: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(invalid("n must be positive"));
    }
    fn go(n: u64, memo: &mut HashMap<u64, BigInt>) -> BigInt {
        if n == 1 {
            return BigInt::one();
        }
        if let Some(v) = memo.get(&n) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for first in 2..=n {
            if n.is_multiple_of(first) {
                total += go(n / first, memo);
            }
        }
        memo.insert(n, total.clone());
        total
    }
    Ok(go(n, &mut HashMap::new()))
}

/// Every ordered factorization of `n` into factors greater than one.
/// `n = 1` yields the single empty factorization.
pub fn ordered_factorizations(n: u64) -> Result<Vec<Vec<u64>>> {
    if n == 0 {
        return Err(invalid("n must be positive"));
    }
    fn go(n: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if n == 1 {
            out.push(prefix.clone());
            return;
        }
        for first in (2..=n).rev() {
            if n.is_multiple_of(first) {
                prefix.push(first);
                go(n / first, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    Ok(out)
}

/// κ_x(n) straight from the definition: n^x plus κ_x of every proper
/// divisor, found by trial division, memoized per call.
pub fn naive_kappa(x: u32, n: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(invalid("n must be positive"));
    }
    Ok(NaiveKappa::new(x).get(n))
}

/// Memo table for repeated [`naive_kappa`] queries at one exponent.
#[derive(Debug, Clone)]
pub struct NaiveKappa {
    x: u32,
    memo: HashMap<u64, BigInt>,
}

impl NaiveKappa {
    pub fn new(x: u32) -> Self {
        Self {
            x,
            memo: HashMap::new(),
        }
    }

    /// Panics on `n = 0`.
    pub fn get(&mut self, n: u64) -> BigInt {
        assert!(n > 0, "kappa is defined on positive integers");
        if let Some(v) = self.memo.get(&n) {
            return v.clone();
        }
        let mut total: BigInt = BigInt::from(n).pow(self.x);
        for d in proper_divisors_by_trial(n) {
            total += self.get(d);
        }
        self.memo.insert(n, total.clone());
        total
    }
}

fn proper_divisors_by_trial(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small.pop();
    small
}
