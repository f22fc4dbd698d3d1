//! Models `y^2 = x(x - b)(x^3 + t x^2 + e x + f)` with `b = ε1 2^k`, `f = ε2 2^l`,
//! `b^3 + t b^2 + e b + f = ε3 2^m` and `2^n` exactly dividing the cubic's discriminant,
//! `2k+2l+2m+n = 32`. Each residue class of `t` is tested on sampled lifts.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::descent::Descent;
use crate::error::{domain, Result};
use crate::exactmath::pow2;
use crate::igusa::IgusaInvariants;
use crate::weierstrass::cubic_discriminant;
use crate::weierstrass::GenusTwoEquation;

pub const BUDGET: u32 = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ThreeWpTuple {
    pub k: u32,
    pub l: u32,
    pub m: u32,
    pub n: u32,
}

impl ThreeWpTuple {
    pub fn new(k: u32, l: u32, m: u32) -> Option<Self> {
        let used = 2 * (k + l + m);
        (used <= BUDGET && m >= k.min(l)).then(|| ThreeWpTuple { k, l, m, n: BUDGET - used })
    }
}

/// All `(k, l, m, n)` with `2k+2l+2m+n = 32`, `n >= 0` and `m >= min(k, l)`.
pub fn admissible_tuples() -> Vec<ThreeWpTuple> {
    let h = BUDGET / 2;
    let mut out = Vec::new();
    for k in 0..=h {
        for l in 0..=h - k {
            for m in 0..=h - k - l {
                out.extend(ThreeWpTuple::new(k, l, m));
            }
        }
    }
    out
}

pub const SIGNS: [[i8; 3]; 8] = [
    [1, 1, 1],
    [1, 1, -1],
    [1, -1, 1],
    [1, -1, -1],
    [-1, 1, 1],
    [-1, 1, -1],
    [-1, -1, 1],
    [-1, -1, -1],
];

/// Why a sampled `t` fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum SampleFailure {
    /// `e` would not be an integer for any `t`.
    NoIntegralE,
    Singular,
    /// `v_2` of the cubic discriminant differs from `n`.
    Valuation { found: u32 },
    /// `v_2(J_2i^5 / J10^i) < 0`.
    BadReduction { i: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreeWpSurvivor {
    pub tuple: ThreeWpTuple,
    pub eps: [i8; 3],
    pub modulus: u64,
    pub residues: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreeWpRejection {
    pub tuple: ThreeWpTuple,
    pub eps: [i8; 3],
    /// First failure seen in the class of `0`.
    #[serde(with = "crate::serial::int_string")]
    pub t: BigInt,
    pub failure: SampleFailure,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreeWpReport {
    pub modulus: u64,
    pub samples: usize,
    pub tuples: usize,
    pub survivors: Vec<ThreeWpSurvivor>,
    pub rejections: Vec<ThreeWpRejection>,
}

impl ThreeWpReport {
    /// Surviving tuples, each once.
    pub fn surviving_tuples(&self) -> Vec<ThreeWpTuple> {
        let mut v: Vec<ThreeWpTuple> = self.survivors.iter().map(|s| s.tuple).collect();
        v.dedup();
        v
    }
}

fn signed(s: i8, k: u32) -> BigInt {
    pow2(k) * i64::from(s)
}

/// The parameters `(b, f)` and the `t`-free part of `e b`, or `None` when `b` does not
/// divide it.
fn shape(tuple: &ThreeWpTuple, eps: [i8; 3]) -> Option<(BigInt, BigInt, BigInt)> {
    let b = signed(eps[0], tuple.k);
    let f = signed(eps[1], tuple.l);
    let num = signed(eps[2], tuple.m) - &b * &b * &b - &f;
    (&num % &b).is_zero().then_some((b, f, num))
}

/// The model `E'_t`, if `e(t)` is integral.
pub fn model(tuple: &ThreeWpTuple, eps: [i8; 3], t: &BigInt) -> Option<GenusTwoEquation> {
    let (b, f, num) = shape(tuple, eps)?;
    let e = (&num - t * &b * &b) / &b;
    Some(GenusTwoEquation::from_cubic_split(&b, t, &e, &f).equation)
}

fn test_sample(b: &BigInt, f: &BigInt, num: &BigInt, n: u32, t: &BigInt) -> std::result::Result<(), SampleFailure> {
    let e = (num - t * b * b) / b;
    let cd = cubic_discriminant(t, &e, f);
    if cd.is_zero() {
        return Err(SampleFailure::Singular);
    }
    let v = cd.trailing_zeros().expect("nonzero") as u32;
    if v != n {
        return Err(SampleFailure::Valuation { found: v });
    }
    let eq = GenusTwoEquation::from_cubic_split(b, t, &e, f).equation;
    if !eq.is_smooth() {
        return Err(SampleFailure::Singular);
    }
    let inv = IgusaInvariants::of(&eq).map_err(|_| SampleFailure::Singular)?;
    match inv.bad_reduction_witness(2) {
        Some(i) => Err(SampleFailure::BadReduction { i }),
        None => Ok(()),
    }
}

/// Lifts of the class `r` used as samples: `r + 3 modulus j` for `j` centred on zero.
pub fn sample_lifts(r: u64, modulus: u64, samples: usize) -> Vec<BigInt> {
    let half = (samples / 2) as i64;
    (0..samples as i64)
        .map(|j| BigInt::from(r) + BigInt::from(modulus) * 3 * (j - half))
        .collect()
}

fn run_case(
    tuple: ThreeWpTuple,
    eps: [i8; 3],
    modulus: u64,
    samples: usize,
) -> (Option<ThreeWpSurvivor>, Option<ThreeWpRejection>) {
    let Some((b, f, num)) = shape(&tuple, eps) else {
        let rej = ThreeWpRejection {
            tuple,
            eps,
            t: BigInt::zero(),
            failure: SampleFailure::NoIntegralE,
        };
        return (None, Some(rej));
    };
    let mut residues = Vec::new();
    let mut first: Option<(BigInt, SampleFailure)> = None;
    for r in 0..modulus {
        let mut ok = true;
        for t in sample_lifts(r, modulus, samples) {
            if let Err(why) = test_sample(&b, &f, &num, tuple.n, &t) {
                if r == 0 && first.is_none() {
                    first = Some((t, why));
                }
                ok = false;
                break;
            }
        }
        if ok {
            residues.push(r);
        }
    }
    if residues.is_empty() {
        let (t, failure) = first.expect("class 0 failed");
        (None, Some(ThreeWpRejection { tuple, eps, t, failure }))
    } else {
        (
            Some(ThreeWpSurvivor {
                tuple,
                eps,
                modulus,
                residues,
            }),
            None,
        )
    }
}

pub fn classify_three_wp(modulus: u64, samples: usize) -> Result<ThreeWpReport> {
    if modulus < 64 || !modulus.is_power_of_two() {
        return Err(domain("residue modulus must be a power of 2, at least 64"));
    }
    if samples == 0 {
        return Err(domain("need at least one sample per class"));
    }
    let tuples = admissible_tuples();
    let cases: Vec<(ThreeWpTuple, [i8; 3])> = tuples
        .iter()
        .flat_map(|t| SIGNS.iter().map(move |e| (*t, *e)))
        .collect();
    let results: Vec<_> = cases
        .par_iter()
        .map(|(t, e)| run_case(*t, *e, modulus, samples))
        .collect();
    let mut survivors = Vec::new();
    let mut rejections = Vec::new();
    for (s, r) in results {
        survivors.extend(s);
        rejections.extend(r);
    }
    Ok(ThreeWpReport {
        modulus,
        samples,
        tuples: tuples.len(),
        survivors,
        rejections,
    })
}

/// Whether the models of a surviving class come down to odd discriminant; used to
/// label the `2^20 * odd` cases.
pub fn class_descent(tuple: &ThreeWpTuple, eps: [i8; 3], t: &BigInt) -> Option<Descent> {
    let e = model(tuple, eps, t)?;
    Some(super::descent::classify_descent(&e.integral_p()?))
}
