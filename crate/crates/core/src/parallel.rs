//! Thread budget for the internally parallel kernels.

use std::num::NonZeroUsize;

/// Environment variable capping internal parallelism. `0` or unset picks the
/// machine default.
pub const THREADS_ENV: &str = "KAPPA_THREADS";

pub fn thread_count() -> usize {
    let default = || {
        std::thread::available_parallelism()
            .map(NonZeroUsize::get)
            .unwrap_or(1)
    };
    match std::env::var(THREADS_ENV) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(0) | Err(_) => default(),
            Ok(n) => n,
        },
        Err(_) => default(),
    }
}

/// Splits `1..=n` into at most `parts` contiguous, nonempty inclusive ranges.
pub(crate) fn chunk_ranges(n: usize, parts: usize) -> Vec<(usize, usize)> {
    let parts = parts.clamp(1, n.max(1));
    let step = n.div_ceil(parts);
    (0..parts)
        .map(|i| (i * step + 1, ((i + 1) * step).min(n)))
        .filter(|(lo, hi)| lo <= hi)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chunks_cover_range_exactly() {
        for n in [1usize, 2, 7, 100, 101] {
            for parts in 1..9 {
                let ranges = chunk_ranges(n, parts);
                let mut next = 1;
                for (lo, hi) in ranges {
                    assert_eq!(lo, next);
                    assert!(hi >= lo);
                    next = hi + 1;
                }
                assert_eq!(next, n + 1);
            }
        }
    }
}
