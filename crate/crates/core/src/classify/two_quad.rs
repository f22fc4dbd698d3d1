//! Models `y^2 = x(x^2+a1 x+a2)(x^2+b1 x+b2)` with `Δ = ±2^40 p`: `|a2| = 2^a`,
//! `|b2| = 2^b`, `|a1^2 - 4a2| = 2^c`, `|b1^2 - 4b2| = 2^d p` and `K = ±2^w` with
//! `2a+2b+c+d+2w = 32`, where `K` is the resultant of the two quadratics.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::descent::{classify_descent, Descent};
use crate::exactmath::{exact_sqrt, is_perfect_square, pow2, solve_quadratic};
use crate::families::is_prime;
use crate::weierstrass::two_quadratic_k;
use crate::weierstrass::{EquationJson, GenusTwoEquation};

pub const BUDGET: u32 = 32;

/// The 32 pairs `(a, c)` with their case labels.
pub const PAIRS: [(&str, u32, u32); 32] = [
    ("i", 0, 2),
    ("i", 2, 4),
    ("i", 4, 6),
    ("i", 6, 8),
    ("i", 8, 10),
    ("i", 10, 12),
    ("ii", 1, 3),
    ("ii", 3, 5),
    ("ii", 5, 7),
    ("ii", 7, 9),
    ("ii", 9, 11),
    ("iiia", 1, 2),
    ("iiia", 3, 4),
    ("iiia", 5, 6),
    ("iiia", 7, 8),
    ("iiia", 9, 10),
    ("iiib", 1, 0),
    ("iiib", 3, 2),
    ("iiib", 5, 4),
    ("iiib", 7, 6),
    ("iiib", 9, 8),
    ("iiib", 11, 10),
    ("iva", 0, 3),
    ("iva", 2, 5),
    ("iva", 4, 7),
    ("iva", 6, 9),
    ("iva", 8, 11),
    ("ivb", 0, 5),
    ("ivb", 2, 7),
    ("ivb", 4, 9),
    ("ivb", 6, 11),
    ("ivb", 8, 13),
];

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TwoQuadCandidate {
    pub case: String,
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
    pub w: u32,
    #[serde(with = "crate::serial::int_string")]
    pub a1: BigInt,
    #[serde(with = "crate::serial::int_string")]
    pub a2: BigInt,
    #[serde(with = "crate::serial::int_string")]
    pub b1: BigInt,
    #[serde(with = "crate::serial::int_string")]
    pub b2: BigInt,
    #[serde(rename = "K", with = "crate::serial::int_string")]
    pub k: BigInt,
    #[serde(with = "crate::serial::int_string")]
    pub p: BigInt,
    /// Whether `x^2 + a1 x + a2` is irreducible over the rationals.
    pub a_irreducible: bool,
    pub descent: Descent,
    pub equation: EquationJson,
}

impl TwoQuadCandidate {
    pub fn equation(&self) -> GenusTwoEquation {
        GenusTwoEquation::from_json(&self.equation).expect("built from integers")
    }
}

/// One branch of the `(a,c) = (11,10)`, `b2 = ±1` argument: `K(b1) = k` has no
/// integer solution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WalkthroughCase {
    #[serde(with = "crate::serial::int_string")]
    pub a1: BigInt,
    #[serde(with = "crate::serial::int_string")]
    pub a2: BigInt,
    #[serde(with = "crate::serial::int_string")]
    pub b2: BigInt,
    #[serde(with = "crate::serial::int_string")]
    pub k: BigInt,
    pub solutions: Vec<String>,
    /// `v_2((a2 - b2)^2 - k)`; the other summand of `K - k` has valuation exactly 5.
    pub constant_valuation: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Walkthrough {
    pub a: u32,
    pub c: u32,
    pub cases: Vec<WalkthroughCase>,
    /// `2a + 2b + c` for the smallest even `b2`, which already exceeds the budget.
    pub even_b2_weight: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TwoQuadReport {
    pub pairs: usize,
    /// `(a2, a1, b2, w, sign of K)` combinations examined.
    pub searched: usize,
    /// Odd-prime candidates with both quadratics irreducible and a model with odd discriminant.
    pub hits: Vec<TwoQuadCandidate>,
    /// Irreducible odd-prime candidates whose 2-part descends halfway.
    pub byproducts: Vec<TwoQuadCandidate>,
    /// Irreducible odd-prime candidates with no descent at 2.
    pub eliminated: Vec<TwoQuadCandidate>,
    /// Odd-prime candidates with a reducible `x^2 + a1 x + a2` that descend at least halfway.
    pub reducible_shadow: Vec<TwoQuadCandidate>,
    /// Odd-prime candidates from pairs outside [`PAIRS`], searched as a cross-check.
    pub off_list: Vec<TwoQuadCandidate>,
    pub walkthrough: Walkthrough,
}

fn signed(s: i64, k: u32) -> BigInt {
    pow2(k) * s
}

/// `a1` with `|a1^2 - 4 a2| = 2^c`.
fn a1_values(a2: &BigInt, c: u32) -> Vec<BigInt> {
    let mut out = Vec::new();
    for s in [1, -1] {
        if let Some(r) = exact_sqrt(&(4 * a2 + signed(s, c))) {
            out.push(r.clone());
            out.push(-r);
        }
    }
    out.sort();
    out.dedup();
    out
}

/// `b1` with `K(a1, a2, b1, b2) = k`.
fn b1_values(a1: &BigInt, a2: &BigInt, b2: &BigInt, k: &BigInt) -> Vec<BigInt> {
    let qa = a2.clone();
    let qb = -(a1 * a2 + a1 * b2);
    let qc = (a2 - b2) * (a2 - b2) + a1 * a1 * b2;
    solve_quadratic(&qa, &qb, &qc, k).expect("a2 != 0")
}

fn search_pair(case: &str, a: u32, c: u32, searched: &mut usize) -> Vec<TwoQuadCandidate> {
    let mut out = Vec::new();
    for sa in [1, -1] {
        let a2 = signed(sa, a);
        for a1 in a1_values(&a2, c) {
            let disc_a = &a1 * &a1 - 4 * &a2;
            let a_irreducible = !is_perfect_square(&disc_a);
            let mut b = 0;
            while 2 * a + 2 * b + c <= BUDGET {
                for sb in [1, -1] {
                    let b2 = signed(sb, b);
                    let mut w = 0;
                    while 2 * a + 2 * b + c + 2 * w <= BUDGET {
                        let d = BUDGET - 2 * a - 2 * b - c - 2 * w;
                        for sk in [1, -1] {
                            *searched += 1;
                            let k = signed(sk, w);
                            for b1 in b1_values(&a1, &a2, &b2, &k) {
                                let disc_b: BigInt = &b1 * &b1 - 4 * &b2;
                                if disc_b.is_zero() || disc_b.trailing_zeros() != Some(d as u64) {
                                    continue;
                                }
                                let p: BigInt = (disc_b.abs()) >> d as usize;
                                if !is_prime(&p) {
                                    continue;
                                }
                                debug_assert_eq!(two_quadratic_k(&a1, &a2, &b1, &b2), k);
                                let eq = GenusTwoEquation::from_two_quadratics(&a1, &a2, &b1, &b2);
                                let descent =
                                    classify_descent(&eq.equation.integral_p().expect("integral"));
                                out.push(TwoQuadCandidate {
                                    case: case.to_string(),
                                    a,
                                    b,
                                    c,
                                    d,
                                    w,
                                    a1: a1.clone(),
                                    a2: a2.clone(),
                                    b1,
                                    b2: b2.clone(),
                                    k: k.clone(),
                                    p,
                                    a_irreducible,
                                    descent,
                                    equation: eq.equation.to_json(),
                                });
                            }
                        }
                        w += 1;
                    }
                }
                b += 1;
            }
        }
    }
    out
}

/// The `(a,c) = (11,10)` argument with `b2 = ±1` and `K = ±1`.
pub fn walkthrough_11_10() -> Walkthrough {
    let (a, c) = (11, 10);
    let mut cases = Vec::new();
    for sa in [1, -1] {
        let a2 = signed(sa, a);
        for a1 in a1_values(&a2, c) {
            for sb in [1, -1] {
                let b2 = BigInt::from(sb);
                for sk in [1, -1] {
                    let k = BigInt::from(sk);
                    let sols = b1_values(&a1, &a2, &b2, &k);
                    let konst = (&a2 - &b2) * (&a2 - &b2) - &k;
                    cases.push(WalkthroughCase {
                        a1: a1.clone(),
                        a2: a2.clone(),
                        b2: b2.clone(),
                        k: k.clone(),
                        solutions: sols.iter().map(|s| s.to_string()).collect(),
                        constant_valuation: konst.trailing_zeros().unwrap_or(0) as u32,
                    });
                }
            }
        }
    }
    Walkthrough {
        a,
        c,
        cases,
        even_b2_weight: 2 * a + 2 + c,
    }
}

pub fn classify_two_plus_quadratic() -> TwoQuadReport {
    let per: Vec<(Vec<TwoQuadCandidate>, usize)> = PAIRS
        .par_iter()
        .map(|(case, a, c)| {
            let mut n = 0;
            let v = search_pair(case, *a, *c, &mut n);
            (v, n)
        })
        .collect();
    let searched = per.iter().map(|x| x.1).sum();
    let all: Vec<TwoQuadCandidate> = per.into_iter().flat_map(|x| x.0).collect();

    let off: Vec<(u32, u32)> = (0..=BUDGET / 2)
        .flat_map(|a| (0..=BUDGET - 2 * a).map(move |c| (a, c)))
        .filter(|(a, c)| !PAIRS.iter().any(|p| p.1 == *a && p.2 == *c))
        .collect();
    let off_list: Vec<TwoQuadCandidate> = off
        .par_iter()
        .map(|(a, c)| {
            let mut n = 0;
            search_pair("off-list", *a, *c, &mut n)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();

    let pick = |irr: bool, f: &dyn Fn(Descent) -> bool| -> Vec<TwoQuadCandidate> {
        all.iter()
            .filter(|c| c.a_irreducible == irr && f(c.descent))
            .cloned()
            .collect()
    };
    TwoQuadReport {
        pairs: PAIRS.len(),
        searched,
        hits: pick(true, &|d| d == Descent::Full),
        byproducts: pick(true, &|d| d == Descent::HalfBySquare || d == Descent::HalfByScaling),
        eliminated: pick(true, &|d| d == Descent::None),
        reducible_shadow: pick(false, &|d| d.at_least_half()),
        off_list,
        walkthrough: walkthrough_11_10(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairs_are_the_32_listed() {
        assert_eq!(PAIRS.len(), 32);
        for (_, a, c) in PAIRS {
            // every listed pair admits an a1
            assert!(!a1_values(&pow2(a), c).is_empty() || !a1_values(&-pow2(a), c).is_empty());
        }
    }

    #[test]
    fn k_solver_agrees_with_the_resultant() {
        let (a1, a2, b2) = (BigInt::from(12), BigInt::from(4), BigInt::from(-4));
        let k = two_quadratic_k(&a1, &a2, &BigInt::from(-12), &b2);
        assert!(b1_values(&a1, &a2, &b2, &k).contains(&BigInt::from(-12)));
    }

    #[test]
    fn eleven_ten_has_no_b1() {
        let w = walkthrough_11_10();
        assert_eq!(w.cases.len(), 8);
        assert!(w.cases.iter().all(|c| c.solutions.is_empty()));
        assert!(w.cases.iter().all(|c| c.a1.abs() == BigInt::from(96)));
        assert!(w.even_b2_weight > BUDGET);
    }
}
