//! Registry of the convolution identities relating κ_x, K, σ_x, J_x and friends,
//! each checked exactly on `1..=n_max`.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::builtin::{builtin, BuiltinFn};
use crate::error::{invalid, Result};
use crate::seq::ArithSeq;

type Sides = (ArithSeq, ArithSeq);
type Evaluator = fn(u32, u32, usize) -> Result<Sides>;

/// One registered identity `lhs = rhs`.
#[derive(Clone, Copy)]
pub struct IdentityCheck {
    pub id: &'static str,
    pub description: &'static str,
    /// How many of `(x, y)` the identity reads: 0, 1 (x only) or 2.
    pub exponents_required: u8,
    evaluator: Evaluator,
}

impl IdentityCheck {
    /// Builds both sides at the given exponents.
    pub fn evaluate(&self, x: u32, y: u32, n_max: usize) -> Result<Sides> {
        if n_max == 0 {
            return Err(invalid("n_max must be at least 1"));
        }
        (self.evaluator)(x, y, n_max)
    }
}

impl std::fmt::Debug for IdentityCheck {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentityCheck")
            .field("id", &self.id)
            .field("description", &self.description)
            .field("exponents_required", &self.exponents_required)
            .finish()
    }
}

/// Result of checking one identity at one exponent combination.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: String,
    pub x: Option<u32>,
    pub y: Option<u32>,
    pub n_max: usize,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub first_failure_n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default, with = "opt_bigint")]
    pub lhs_value: Option<BigInt>,
    #[serde(skip_serializing_if = "Option::is_none", default, with = "opt_bigint")]
    pub rhs_value: Option<BigInt>,
}

mod opt_bigint {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(b) => s.serialize_str(&b.to_string()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigInt>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|s| s.parse().map_err(serde::de::Error::custom))
            .transpose()
    }
}

/// Identities whose content is a convergent series rather than a finite
/// convolution identity. They are verified by the dyadic partial-sum
/// convergence checks in [`crate::dyadic`], not by this registry.
pub const DELEGATED_TO_SERIES: [&str; 2] = ["EQ5", "EQ11"];

fn f(name: BuiltinFn, x: u32, n: usize) -> ArithSeq {
    builtin(name, x, n)
}

fn eq3(x: u32, y: u32, n: usize) -> Result<Sides> {
    use BuiltinFn::{Kappa, Sigma};
    let lhs = f(Kappa, x, n).convolve(&f(Sigma, y, n))?;
    let rhs = f(Kappa, y, n).convolve(&f(Sigma, x, n))?;
    Ok((lhs, rhs))
}

fn eq4(x: u32, _: u32, n: usize) -> Result<Sides> {
    use BuiltinFn::{Id, Kappa, One};
    let kappa = f(Kappa, x, n);
    let rhs = f(Id, x, n).add(&f(One, 0, n).convolve(&kappa)?)?;
    Ok((kappa.scale(2), rhs))
}

fn eq6(x: u32, _: u32, n: usize) -> Result<Sides> {
    use BuiltinFn::{Jordan, Kappa};
    let rhs = f(Jordan, x, n).convolve(&f(Kappa, 0, n))?;
    Ok((f(Kappa, x, n), rhs))
}

/// 2μ - ε
fn two_mu_minus_epsilon(n: usize) -> Result<ArithSeq> {
    f(BuiltinFn::Mobius, 0, n)
        .scale(2)
        .sub(&f(BuiltinFn::Epsilon, 0, n))
}

fn eq7(x: u32, _: u32, n: usize) -> Result<Sides> {
    use BuiltinFn::{Jordan, Kappa};
    let lhs = f(Kappa, x, n).inverse()?;
    let rhs = f(Jordan, x, n)
        .inverse()?
        .convolve(&two_mu_minus_epsilon(n)?)?;
    Ok((lhs, rhs))
}

fn eq8(x: u32, _: u32, n: usize) -> Result<Sides> {
    use BuiltinFn::{Kappa, NumDivisors, One, Sigma};
    let kernel = f(One, 0, n).scale(2).sub(&f(NumDivisors, 0, n))?;
    Ok((f(Sigma, x, n), f(Kappa, x, n).convolve(&kernel)?))
}

fn eq9(_: u32, _: u32, n: usize) -> Result<Sides> {
    use BuiltinFn::{Kappa, One, K};
    Ok((f(Kappa, 0, n), f(One, 0, n).convolve(&f(K, 0, n))?))
}

fn eq10(_: u32, _: u32, n: usize) -> Result<Sides> {
    use BuiltinFn::{Epsilon, One, K};
    let k = f(K, 0, n);
    let rhs = f(Epsilon, 0, n).add(&f(One, 0, n).convolve(&k)?)?;
    Ok((k.scale(2), rhs))
}

fn eq12(x: u32, _: u32, n: usize) -> Result<Sides> {
    use BuiltinFn::{Id, Kappa, K};
    Ok((f(Kappa, x, n), f(Id, x, n).convolve(&f(K, 0, n))?))
}

fn eq13(_: u32, _: u32, n: usize) -> Result<Sides> {
    use BuiltinFn::{Epsilon, One, K};
    let rhs = f(Epsilon, 0, n).scale(2).sub(&f(One, 0, n))?;
    Ok((f(K, 0, n).inverse()?, rhs))
}

fn sc1(_: u32, _: u32, n: usize) -> Result<Sides> {
    use BuiltinFn::{Kappa, Phi};
    Ok((f(Kappa, 1, n), f(Phi, 0, n).convolve(&f(Kappa, 0, n))?))
}

fn sc2(_: u32, _: u32, n: usize) -> Result<Sides> {
    Ok((
        f(BuiltinFn::Kappa, 0, n).inverse()?,
        two_mu_minus_epsilon(n)?,
    ))
}

fn jy(x: u32, y: u32, n: usize) -> Result<Sides> {
    use BuiltinFn::{Jordan, Kappa};
    let lhs = f(Kappa, x, n).convolve(&f(Jordan, y, n))?;
    let rhs = f(Kappa, y, n).convolve(&f(Jordan, x, n))?;
    Ok((lhs, rhs))
}

const REGISTRY: [IdentityCheck; 12] = [
    IdentityCheck {
        id: "EQ3",
        description: "exchange symmetry: kappa_x * sigma_y = kappa_y * sigma_x",
        exponents_required: 2,
        evaluator: eq3,
    },
    IdentityCheck {
        id: "EQ4",
        description: "definition of kappa_x, cleared: 2 kappa_x = id_x + 1 * kappa_x",
        exponents_required: 1,
        evaluator: eq4,
    },
    IdentityCheck {
        id: "EQ6",
        description: "kappa_x = J_x * kappa_0",
        exponents_required: 1,
        evaluator: eq6,
    },
    IdentityCheck {
        id: "EQ7",
        description: "inverse of kappa_x: kappa_x^-1 = J_x^-1 * (2 mu - epsilon)",
        exponents_required: 1,
        evaluator: eq7,
    },
    IdentityCheck {
        id: "EQ8",
        description: "sigma_x = kappa_x * (2 1 - d)",
        exponents_required: 1,
        evaluator: eq8,
    },
    IdentityCheck {
        id: "EQ9",
        description: "kappa_0 = 1 * K",
        exponents_required: 0,
        evaluator: eq9,
    },
    IdentityCheck {
        id: "EQ10",
        description: "definition of K, cleared: 2 K = epsilon + 1 * K",
        exponents_required: 0,
        evaluator: eq10,
    },
    IdentityCheck {
        id: "EQ12",
        description: "kappa_x = id_x * K",
        exponents_required: 1,
        evaluator: eq12,
    },
    IdentityCheck {
        id: "EQ13",
        description: "inverse of K: K^-1 = 2 epsilon - 1",
        exponents_required: 0,
        evaluator: eq13,
    },
    IdentityCheck {
        id: "SC1",
        description: "kappa_1 = phi * kappa_0",
        exponents_required: 0,
        evaluator: sc1,
    },
    IdentityCheck {
        id: "SC2",
        description: "kappa_0^-1 = 2 mu - epsilon",
        exponents_required: 0,
        evaluator: sc2,
    },
    IdentityCheck {
        id: "JY",
        description: "kappa_x * J_y = kappa_y * J_x",
        exponents_required: 2,
        evaluator: jy,
    },
];

/// Every registered identity, in registry order.
pub fn registry() -> &'static [IdentityCheck] {
    &REGISTRY
}

pub fn lookup(id: &str) -> Result<&'static IdentityCheck> {
    registry()
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| invalid(format!("unknown identity `{id}`")))
}

/// Checks identity `id` exactly on `1..=n_max`. Exponents the identity does
/// not read are ignored and reported as absent.
pub fn check_identity(id: &str, x: u32, y: u32, n_max: usize) -> Result<IdentityReport> {
    let check = lookup(id)?;
    let (lhs, rhs) = check.evaluate(x, y, n_max)?;
    Ok(report_from_sides(check, x, y, &lhs, &rhs))
}

fn report_from_sides(
    check: &IdentityCheck,
    x: u32,
    y: u32,
    lhs: &ArithSeq,
    rhs: &ArithSeq,
) -> IdentityReport {
    let first = lhs.first_mismatch(rhs);
    let (x, y) = match check.exponents_required {
        0 => (None, None),
        1 => (Some(x), None),
        _ => (Some(x), Some(y)),
    };
    IdentityReport {
        identity: check.id.to_string(),
        x,
        y,
        n_max: lhs.n_max(),
        passed: first.is_none(),
        first_failure_n: first,
        lhs_value: first.map(|n| lhs.get(n).clone()),
        rhs_value: first.map(|n| rhs.get(n).clone()),
    }
}

/// Runs every identity for every exponent combination drawn from
/// `exponents` (ordered pairs for two-exponent identities). Reports are
/// sorted by `(identity, x, y)`.
pub fn check_all(n_max: usize, exponents: &[u32]) -> Result<Vec<IdentityReport>> {
    if exponents.is_empty() {
        return Err(invalid("exponent set must be nonempty"));
    }
    let mut exps = exponents.to_vec();
    exps.sort_unstable();
    exps.dedup();

    let mut jobs: Vec<(&'static str, u32, u32)> = Vec::new();
    for check in registry() {
        match check.exponents_required {
            0 => jobs.push((check.id, 0, 0)),
            1 => jobs.extend(exps.iter().map(|&x| (check.id, x, 0))),
            _ => {
                for &x in &exps {
                    jobs.extend(exps.iter().map(|&y| (check.id, x, y)));
                }
            }
        }
    }

    let threads = crate::parallel::thread_count().min(jobs.len()).max(1);
    let mut reports: Vec<IdentityReport> = if threads == 1 {
        jobs.iter()
            .map(|&(id, x, y)| check_identity(id, x, y, n_max))
            .collect::<Result<_>>()?
    } else {
        let chunk = jobs.len().div_ceil(threads);
        std::thread::scope(|scope| {
            let handles: Vec<_> = jobs
                .chunks(chunk)
                .map(|part| {
                    scope.spawn(move || {
                        part.iter()
                            .map(|&(id, x, y)| check_identity(id, x, y, n_max))
                            .collect::<Result<Vec<_>>>()
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("identity worker panicked"))
                .collect::<Result<Vec<Vec<_>>>>()
        })?
        .into_iter()
        .flatten()
        .collect()
    };
    reports.sort_by(|a, b| (&a.identity, a.x, a.y).cmp(&(&b.identity, b.x, b.y)));
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_identity() {
        assert!(check_identity("EQ99", 0, 0, 10).is_err());
        assert!(check_identity("EQ5", 0, 0, 10).is_err());
    }

    #[test]
    fn empty_exponent_set() {
        assert!(check_all(10, &[]).is_err());
    }

    #[test]
    fn zero_range() {
        assert!(check_identity("EQ9", 0, 0, 0).is_err());
    }

    #[test]
    fn passing_report_has_no_failure() {
        let r = check_identity("EQ9", 0, 0, 12).unwrap();
        assert!(r.passed);
        assert_eq!(r.first_failure_n, None);
        assert_eq!((r.x, r.y), (None, None));
    }

    #[test]
    fn kappa_1_at_6_via_jordan() {
        let (lhs, rhs) = lookup("EQ6").unwrap().evaluate(1, 0, 12).unwrap();
        assert_eq!(lhs.get(6), &BigInt::from(14));
        assert_eq!(rhs.get(6), &BigInt::from(14));
        assert!(check_identity("EQ6", 1, 0, 12).unwrap().passed);
    }

    #[test]
    fn failing_report_names_first_mismatch() {
        let check = lookup("EQ9").unwrap();
        let (lhs, rhs) = check.evaluate(0, 0, 12).unwrap();
        let mut broken = rhs.into_values();
        broken[7] += 1;
        let rhs = ArithSeq::new("broken", broken).unwrap();
        let r = report_from_sides(check, 0, 0, &lhs, &rhs);
        assert!(!r.passed);
        assert_eq!(r.first_failure_n, Some(8));
        assert_eq!(r.lhs_value, Some(BigInt::from(8)));
        assert_eq!(r.rhs_value, Some(BigInt::from(9)));
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["first_failure_n"], 8);
        assert_eq!(json["rhs_value"], "9");
        let back: IdentityReport = serde_json::from_value(json).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn report_json_omits_absent_failure() {
        let r = check_identity("EQ3", 1, 2, 30).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["identity"], "EQ3");
        assert_eq!(json["x"], 1);
        assert_eq!(json["y"], 2);
        assert_eq!(json["passed"], true);
        assert!(json.get("first_failure_n").is_none());
    }

    #[test]
    fn sorted_and_counted() {
        let reports = check_all(12, &[1, 0]).unwrap();
        // 5 zero-exponent, 5 one-exponent × 2, 2 two-exponent × 4
        assert_eq!(reports.len(), 5 + 10 + 8);
        let keys: Vec<_> = reports
            .iter()
            .map(|r| (r.identity.clone(), r.x, r.y))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert!(reports.iter().all(|r| r.passed));
    }
}
