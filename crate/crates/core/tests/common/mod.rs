#![allow(dead_code)]

use kappa_core::{gen_builtin, ArithSeq, BuiltinFn};

/// Rows of the reference table, n = 1..12.
pub const EPSILON: [i64; 12] = [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0];
pub const MOBIUS: [i64; 12] = [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0];
pub const ONE: [i64; 12] = [1; 12];
pub const ID_1: [i64; 12] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12];
pub const PHI: [i64; 12] = [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4];
pub const NUM_DIVISORS: [i64; 12] = [1, 2, 2, 3, 2, 4, 2, 4, 3, 4, 2, 6];
pub const SIGMA: [i64; 12] = [1, 3, 4, 7, 6, 12, 8, 15, 13, 18, 12, 28];
pub const KAPPA_0: [i64; 12] = [1, 2, 2, 4, 2, 6, 2, 8, 4, 6, 2, 16];
pub const KAPPA_1: [i64; 12] = [1, 3, 4, 8, 6, 14, 8, 20, 14, 20, 12, 42];
pub const KAPPA_0_INV: [i64; 12] = [1, -2, -2, 0, -2, 2, -2, 0, 0, 2, -2, 0];
pub const K_ROW: [i64; 12] = [1, 1, 1, 2, 1, 3, 1, 4, 2, 3, 1, 8];
pub const K_INV: [i64; 12] = [1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1];

/// The four-term symbolic rows at exponent `x`: (σ_x, id_x, J_x, κ_x).
pub fn symbolic_rows(x: u32) -> [[i64; 4]; 4] {
    let p = |b: i64| b.pow(x);
    [
        [1, p(2) + 1, p(3) + 1, p(4) + p(2) + 1],
        [1, p(2), p(3), p(4)],
        [1, p(2) - 1, p(3) - 1, p(4) - p(2)],
        [1, p(2) + 1, p(3) + 1, p(4) + p(2) + 2],
    ]
}

pub fn seq(name: BuiltinFn, x: u32, n: usize) -> ArithSeq {
    gen_builtin(name, x, n).unwrap()
}

pub fn as_i64(s: &ArithSeq) -> Vec<i64> {
    s.values()
        .iter()
        .map(|v| i64::try_from(v).unwrap())
        .collect()
}

/// Every reference row as `(label, computed, expected)`.
pub fn table_rows() -> Vec<(&'static str, Vec<i64>, Vec<i64>)> {
    use BuiltinFn::*;
    let n = 12;
    let mut rows = vec![
        ("epsilon", as_i64(&seq(Epsilon, 0, n)), EPSILON.to_vec()),
        ("mobius", as_i64(&seq(Mobius, 0, n)), MOBIUS.to_vec()),
        ("one", as_i64(&seq(One, 0, n)), ONE.to_vec()),
        ("id_1", as_i64(&seq(Id, 1, n)), ID_1.to_vec()),
        ("phi", as_i64(&seq(Phi, 0, n)), PHI.to_vec()),
        (
            "num_divisors",
            as_i64(&seq(NumDivisors, 0, n)),
            NUM_DIVISORS.to_vec(),
        ),
        ("sigma", as_i64(&seq(Sigma, 1, n)), SIGMA.to_vec()),
        ("kappa_0", as_i64(&seq(Kappa, 0, n)), KAPPA_0.to_vec()),
        ("kappa_1", as_i64(&seq(Kappa, 1, n)), KAPPA_1.to_vec()),
        (
            "kappa_0^-1",
            as_i64(&seq(Kappa, 0, n).inverse().unwrap()),
            KAPPA_0_INV.to_vec(),
        ),
        ("K", as_i64(&seq(K, 0, n)), K_ROW.to_vec()),
        (
            "K^-1",
            as_i64(&seq(K, 0, n).inverse().unwrap()),
            K_INV.to_vec(),
        ),
    ];
    const NAMES: [&str; 4] = ["sigma_x", "id_x", "jordan_x", "kappa_x"];
    for x in 0..4u32 {
        let expected = symbolic_rows(x);
        for (i, f) in [Sigma, Id, Jordan, Kappa].into_iter().enumerate() {
            rows.push((NAMES[i], as_i64(&seq(f, x, 4)), expected[i].to_vec()));
        }
    }
    rows
}
