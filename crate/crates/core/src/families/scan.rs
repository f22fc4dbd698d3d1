//! Prime-discriminant scans and discriminant-identity checks over ranges of `t`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::primality::{primality, Certainty};
use super::registry::lookup;
use crate::error::{Error, Result};
use crate::exactmath::two_part;

/// Which values count as prime in a scan.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PrimeRule {
    /// The family's named quartic takes a positive prime value.
    #[default]
    Named,
    /// `|D(t)|` is prime.
    Absolute,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanResult {
    pub name: String,
    #[serde(with = "crate::serial::int_string")]
    pub t: BigInt,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub eps: Vec<i64>,
    /// `D(t)`.
    #[serde(rename = "D", with = "crate::serial::int_string")]
    pub d: BigInt,
    pub sign: i8,
    /// `v_2(D(t))`.
    pub two_valuation: u32,
    pub prime: bool,
    pub certainty: Certainty,
}

/// Runs `f` on a pool of `jobs` threads, or on the global pool when `jobs` is `None`.
pub fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        None => Ok(f()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .map_err(|e| Error::InvalidParameters(format!("thread pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

fn scan_one(name: &str, t: i64, eps: &[i64], rule: PrimeRule) -> Result<ScanResult> {
    let fam = lookup(name)?;
    let t = BigInt::from(t);
    let d = fam.reduced_disc(&t, eps, &[])?;
    let (two_valuation, sign) = if d.is_zero() {
        (0, 0)
    } else {
        (two_part(&d)?.0, if d.is_negative() { -1 } else { 1 })
    };
    let v = match rule {
        PrimeRule::Absolute => primality(&d.abs()),
        PrimeRule::Named => primality(&(&d * BigInt::from(fam.named_sign))),
    };
    Ok(ScanResult {
        name: name.to_string(),
        t,
        eps: eps.to_vec(),
        d,
        sign,
        two_valuation,
        prime: v.prime,
        certainty: v.certainty,
    })
}

/// Every `t` in `lo..=hi` at which the family's named quartic is prime, in increasing order.
pub fn prime_disc_scan(name: &str, lo: i64, hi: i64) -> Result<Vec<ScanResult>> {
    prime_disc_scan_with(name, lo, hi, &[], PrimeRule::Named, None)
}

/// [`prime_disc_scan`] with signs and an explicit thread count; the output does not
/// depend on `jobs`.
pub fn prime_disc_scan_with(
    name: &str,
    lo: i64,
    hi: i64,
    eps: &[i64],
    rule: PrimeRule,
    jobs: Option<usize>,
) -> Result<Vec<ScanResult>> {
    let fam = lookup(name)?;
    if fam.extra.len() > 0 {
        return Err(Error::InvalidParameters(format!("`{name}` cannot be scanned over t alone")));
    }
    let all: Vec<Result<ScanResult>> =
        with_jobs(jobs, || (lo..=hi).into_par_iter().map(|t| scan_one(name, t, eps, rule)).collect())?;
    let mut out = Vec::new();
    for r in all {
        let r = r?;
        if r.prime {
            out.push(r);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityViolation {
    #[serde(with = "crate::serial::int_string")]
    pub t: BigInt,
    pub eps: Vec<i64>,
    pub expected: String,
    pub computed: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub name: String,
    pub checked: usize,
    pub violations: Vec<IdentityViolation>,
}

impl IdentityReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `Δ(instantiate(t)) = 2^scale D(t)` for every `t` in `lo..=hi` and every sign vector.
pub fn disc_identity_check(name: &str, lo: i64, hi: i64) -> Result<IdentityReport> {
    let fam = lookup(name)?;
    let signs = super::registry::sign_vectors(fam.signs);
    let cases: Vec<(i64, Vec<i64>)> = (lo..=hi)
        .flat_map(|t| signs.iter().map(move |e| (t, e.clone())))
        .collect();
    let results: Vec<Result<Option<IdentityViolation>>> = cases
        .par_iter()
        .map(|(t, eps)| {
            let tb = BigInt::from(*t);
            let e = fam.instantiate(&tb, eps, &[])?;
            let expected = fam.expected_discriminant(&tb, eps, &[])?;
            let computed = e.discriminant().clone();
            Ok((computed != num_rational::BigRational::from_integer(expected.clone())).then(|| {
                IdentityViolation {
                    t: tb,
                    eps: eps.clone(),
                    expected: expected.to_string(),
                    computed: crate::serial::rat_to_string(&computed),
                }
            }))
        })
        .collect();
    let mut violations = Vec::new();
    for r in results {
        if let Some(v) = r? {
            violations.push(v);
        }
    }
    Ok(IdentityReport {
        name: name.to_string(),
        checked: cases.len(),
        violations,
    })
}
