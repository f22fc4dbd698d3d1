//! Models `y^2 = x(x-b1)(x-b2)(x^2+b3 x+b4)` with `Δ = ±2^40 p`: exhaustive search over
//! the exponent tuples `(a,b,c,d,e,f,g)` with `2a+2b+2c+2d+e+2f+2g = 32`.
//!
//! `b1 = ±2^a`, `b2 = ±2^b`, `b1 - b2 = ±2^c`, `b4 = ±2^d`, `b_i^2 + b_i b3 + b4 = ±2^f, ±2^g`
//! and `b3^2 - 4 b4 = ±2^e p`. Subtracting the last two conditions gives `b3` linearly.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::descent::{classify_descent, Descent};
use crate::families::is_prime;
use crate::weierstrass::{EquationJson, GenusTwoEquation};

pub const BUDGET: u32 = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FourWpTuple {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
    pub e: u32,
    pub f: u32,
    pub g: u32,
}

impl FourWpTuple {
    pub fn weight(&self) -> u32 {
        2 * (self.a + self.b + self.c + self.d + self.f + self.g) + self.e
    }

    pub fn is_admissible(&self) -> bool {
        self.weight() == BUDGET
    }

    /// `i`: `a = b = 0`; `ii`: exactly one of `a, b` is zero; `iii`: both positive.
    pub fn subcase(&self) -> &'static str {
        match (self.a, self.b) {
            (0, 0) => "i",
            (0, _) | (_, 0) => "ii",
            _ => "iii",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FourWpOutcome {
    /// `|b3^2 - 4 b4| / 2^e = 1`.
    Unit,
    Composite,
    /// `p` is prime but no model with odd discriminant exists.
    EliminatedAtTwo,
    Hit,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FourWpCandidate {
    pub tuple: FourWpTuple,
    pub subcase: String,
    #[serde(with = "crate::serial::int_string")]
    pub b1: BigInt,
    #[serde(with = "crate::serial::int_string")]
    pub b2: BigInt,
    #[serde(with = "crate::serial::int_string")]
    pub b3: BigInt,
    #[serde(with = "crate::serial::int_string")]
    pub b4: BigInt,
    /// Odd part of `|b3^2 - 4 b4|`.
    #[serde(with = "crate::serial::int_string")]
    pub p: BigInt,
    pub outcome: FourWpOutcome,
    pub descent: Option<Descent>,
    pub equation: EquationJson,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FourWpReport {
    /// Admissible tuples times sign choices.
    pub searched: usize,
    pub tuples: usize,
    /// Candidates passing every exponent condition.
    pub trace: Vec<FourWpCandidate>,
    pub hits: Vec<FourWpCandidate>,
}

impl FourWpReport {
    pub fn rejections_with(&self, subcase: &str, p: &BigInt) -> Vec<&FourWpCandidate> {
        self.trace
            .iter()
            .filter(|c| c.subcase == subcase && &c.p == p && c.outcome != FourWpOutcome::Hit)
            .collect()
    }
}

/// All admissible tuples in lexicographic order.
pub fn admissible_tuples() -> Vec<FourWpTuple> {
    let mut out = Vec::new();
    let h = BUDGET / 2;
    for a in 0..=h {
        for b in 0..=h - a {
            for c in 0..=h - a - b {
                for d in 0..=h - a - b - c {
                    for f in 0..=h - a - b - c - d {
                        for g in 0..=h - a - b - c - d - f {
                            let e = BUDGET - 2 * (a + b + c + d + f + g);
                            out.push(FourWpTuple { a, b, c, d, e, f, g });
                        }
                    }
                }
            }
        }
    }
    out
}

fn signed_pow2(s: i8, k: u32) -> BigInt {
    let v = BigInt::from(1) << k as usize;
    if s < 0 {
        -v
    } else {
        v
    }
}

/// Every sign choice of one tuple that meets all exponent conditions.
pub fn search_tuple(t: &FourWpTuple) -> Vec<FourWpCandidate> {
    let mut out = Vec::new();
    if !t.is_admissible() {
        return out;
    }
    let signs = [1i8, -1];
    for &s1 in &signs {
        for &s2 in &signs {
            let b1 = signed_pow2(s1, t.a);
            let b2 = signed_pow2(s2, t.b);
            let diff = &b1 - &b2;
            if diff == BigInt::from(0) || diff.magnitude() != (BigInt::from(1) << t.c as usize).magnitude() {
                continue;
            }
            for &s4 in &signs {
                let b4 = signed_pow2(s4, t.d);
                for &sf in &signs {
                    for &sg in &signs {
                        let fv = signed_pow2(sf, t.f);
                        let gv = signed_pow2(sg, t.g);
                        let num = &fv - &gv;
                        if &num % &diff != BigInt::from(0) {
                            continue;
                        }
                        let b3 = &num / &diff - &b1 - &b2;
                        if &b1 * &b1 + &b1 * &b3 + &b4 != fv {
                            continue;
                        }
                        let disc: BigInt = &b3 * &b3 - 4 * &b4;
                        if disc == BigInt::from(0) {
                            continue;
                        }
                        let v = disc.trailing_zeros().expect("nonzero") as u32;
                        if v != t.e {
                            continue;
                        }
                        let p = (&disc >> v as usize).magnitude().clone().into();
                        out.push(candidate(t, b1.clone(), b2.clone(), b3, b4.clone(), p));
                    }
                }
            }
        }
    }
    out
}

fn candidate(t: &FourWpTuple, b1: BigInt, b2: BigInt, b3: BigInt, b4: BigInt, p: BigInt) -> FourWpCandidate {
    let c = GenusTwoEquation::from_quartic_split(&b1, &b2, &b3, &b4);
    let (outcome, descent) = if p == BigInt::from(1) {
        (FourWpOutcome::Unit, None)
    } else if !is_prime(&p) {
        (FourWpOutcome::Composite, None)
    } else {
        let d = classify_descent(&c.equation.integral_p().expect("integral"));
        let o = if d == Descent::Full {
            FourWpOutcome::Hit
        } else {
            FourWpOutcome::EliminatedAtTwo
        };
        (o, Some(d))
    };
    FourWpCandidate {
        tuple: *t,
        subcase: t.subcase().to_string(),
        b1,
        b2,
        b3,
        b4,
        p,
        outcome,
        descent,
        equation: c.equation.to_json(),
    }
}

pub fn classify_four_wp() -> FourWpReport {
    let tuples = admissible_tuples();
    let per: Vec<Vec<FourWpCandidate>> = tuples.par_iter().map(search_tuple).collect();
    let trace: Vec<FourWpCandidate> = per.into_iter().flatten().collect();
    let hits = trace
        .iter()
        .filter(|c| c.outcome == FourWpOutcome::Hit)
        .cloned()
        .collect();
    FourWpReport {
        searched: tuples.len() * 32,
        tuples: tuples.len(),
        trace,
        hits,
    }
}
