//! Smallest-prime-factor table and divisor enumeration on `1..=n_max`.

use crate::error::{invalid, Result};

/// Precomputed factor structure for every integer up to `n_max`.
#[derive(Debug, Clone)]
pub struct DivisorTable {
    n_max: usize,
    // spf[n] for n >= 2; entries 0 and 1 are unused.
    spf: Vec<u32>,
    primes: Vec<u32>,
}

impl DivisorTable {
    /// Linear sieve; every composite is struck exactly once by its smallest prime.
    pub fn new(n_max: usize) -> Result<Self> {
        if n_max == 0 {
            return Err(invalid("n_max must be at least 1"));
        }
        if n_max > u32::MAX as usize {
            return Err(invalid("n_max exceeds the u32 sieve range"));
        }
        let mut spf = vec![0u32; n_max + 1];
        let mut primes = Vec::new();
        for i in 2..=n_max {
            if spf[i] == 0 {
                spf[i] = i as u32;
                primes.push(i as u32);
            }
            let si = spf[i];
            for &p in &primes {
                let m = i * p as usize;
                if p > si || m > n_max {
                    break;
                }
                spf[m] = p;
            }
        }
        Ok(Self { n_max, spf, primes })
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn primes(&self) -> &[u32] {
        &self.primes
    }

    /// Smallest prime factor of `n`, or `None` for `n = 1`.
    pub fn smallest_prime_factor(&self, n: usize) -> Option<usize> {
        self.check(n);
        (n >= 2).then(|| self.spf[n] as usize)
    }

    pub fn is_prime(&self, n: usize) -> bool {
        self.smallest_prime_factor(n) == Some(n)
    }

    /// Prime factorization as `(p, exponent)` pairs in ascending `p`.
    pub fn factorize(&self, mut n: usize) -> Vec<(usize, u32)> {
        self.check(n);
        let mut out: Vec<(usize, u32)> = Vec::new();
        while n > 1 {
            let p = self.spf[n] as usize;
            match out.last_mut() {
                Some((q, e)) if *q == p => *e += 1,
                _ => out.push((p, 1)),
            }
            n /= p;
        }
        out
    }

    /// Ω(n): prime factors counted with multiplicity.
    pub fn big_omega(&self, n: usize) -> u32 {
        self.factorize(n).iter().map(|&(_, e)| e).sum()
    }

    /// All divisors of `n`, ascending.
    pub fn divisors(&self, n: usize) -> Vec<usize> {
        let mut divs = vec![1usize];
        for (p, e) in self.factorize(n) {
            let len = divs.len();
            let mut pk = 1;
            for _ in 0..e {
                pk *= p;
                for i in 0..len {
                    divs.push(divs[i] * pk);
                }
            }
        }
        divs.sort_unstable();
        divs
    }

    /// Divisors `d` of `n` with `d < n`.
    pub fn proper_divisors(&self, n: usize) -> Vec<usize> {
        let mut divs = self.divisors(n);
        divs.pop();
        divs
    }

    fn check(&self, n: usize) {
        assert!(
            (1..=self.n_max).contains(&n),
            "index {n} outside table range 1..={}",
            self.n_max
        );
    }
}
