//! Certificates for the claimed isomorphisms between registered families: equal points
//! of weighted projective space for the Igusa invariants, at every parameter in range.
//! This is isomorphism over an algebraic closure, which is what the claims are checked
//! against here.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::families::lookup;
use crate::igusa::{same_weighted_point, IgusaInvariants};
use crate::weierstrass::GenusTwoEquation;

/// One curve of a claim, instantiated at a concrete parameter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub family: String,
    pub t: i64,
    pub eps: Vec<i64>,
    pub extra: Vec<i64>,
}

impl Instance {
    fn new(family: &str, t: i64, eps: &[i64], extra: &[i64]) -> Self {
        Instance {
            family: family.to_string(),
            t,
            eps: eps.to_vec(),
            extra: extra.to_vec(),
        }
    }

    pub fn equation(&self) -> Result<GenusTwoEquation> {
        let extra: Vec<BigInt> = self.extra.iter().map(|&x| BigInt::from(x)).collect();
        lookup(&self.family)?.instantiate(&BigInt::from(self.t), &self.eps, &extra)
    }
}

impl std::fmt::Display for Instance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}[t={}", self.family, self.t)?;
        if !self.eps.is_empty() {
            write!(f, ", eps={:?}", self.eps)?;
        }
        if !self.extra.is_empty() {
            write!(f, ", extra={:?}", self.extra)?;
        }
        write!(f, "]")
    }
}

/// A claimed isomorphism with all its instantiations.
#[derive(Clone, Debug)]
pub struct Claim {
    pub label: String,
    /// `false` for claims added here as corrections rather than taken from the table.
    pub listed: bool,
    pub cases: Vec<(i64, Vec<Instance>)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub label: String,
    pub listed: bool,
    pub checked: usize,
    /// Parameters where the members differ, or failed to instantiate.
    pub failures: Vec<String>,
}

impl ClaimResult {
    pub fn passed(&self) -> bool {
        self.checked > 0 && self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsomorphismReport {
    pub t_range: (i64, i64),
    pub claims: Vec<ClaimResult>,
    /// A pair that must not be isomorphic; `failures` lists where it does differ.
    pub control: ClaimResult,
}

impl IsomorphismReport {
    pub fn all_claims_pass(&self) -> bool {
        self.claims.iter().filter(|c| c.listed).all(|c| c.passed())
    }

    pub fn failing(&self) -> Vec<&ClaimResult> {
        self.claims.iter().filter(|c| !c.passed()).collect()
    }

    /// The control differs somewhere in range.
    pub fn control_rejected(&self) -> bool {
        !self.control.failures.is_empty()
    }
}

fn check_case(members: &[Instance]) -> std::result::Result<(), String> {
    let mut invs = Vec::with_capacity(members.len());
    for m in members {
        let e = m.equation().map_err(|e| format!("{m}: {e}"))?;
        let inv = IgusaInvariants::of(&e).map_err(|e| format!("{m}: {e}"))?;
        if inv.j10.is_zero() {
            return Err(format!("{m}: singular"));
        }
        invs.push(inv);
    }
    for (m, inv) in members.iter().zip(&invs).skip(1) {
        if !same_weighted_point(&invs[0], inv) {
            return Err(format!("{} vs {m}", members[0]));
        }
    }
    Ok(())
}

fn run(claim: &Claim) -> ClaimResult {
    let failures: Vec<String> = claim
        .cases
        .par_iter()
        .filter_map(|(t, ms)| check_case(ms).err().map(|why| format!("t={t}: {why}")))
        .collect();
    ClaimResult {
        label: claim.label.clone(),
        listed: claim.listed,
        checked: claim.cases.len(),
        failures,
    }
}

fn over(lo: i64, hi: i64, f: impl Fn(i64) -> Vec<Instance>) -> Vec<(i64, Vec<Instance>)> {
    (lo..=hi).map(|t| (t, f(t))).collect()
}

/// The claims between the odd-discriminant families, over `t` in `lo..=hi`.
pub fn three_point_claims(lo: i64, hi: i64) -> Vec<Claim> {
    let claim = |label: &str, f: &dyn Fn(i64) -> Vec<Instance>| Claim {
        label: label.to_string(),
        listed: true,
        cases: over(lo, hi, f),
    };
    let e4 = |shift: i64, eps: [i64; 3]| {
        move |t: i64| {
            vec![
                Instance::new("thm7-E4", t, &eps, &[]),
                Instance::new("thm7-E4", t + shift, &[1, 1, 1], &[]),
            ]
        }
    };
    vec![
        claim("E2_t(1) ~ E2_{t-4}(-1) ~ E1_{t+4}(-1)", &|t| {
            vec![
                Instance::new("thm7-E2", t, &[1], &[]),
                Instance::new("thm7-E2", t - 4, &[-1], &[]),
                Instance::new("thm7-E1", t + 4, &[-1], &[]),
            ]
        }),
        claim("E1_t(1) ~ E1_{-t}(-1)", &|t| {
            vec![
                Instance::new("thm7-E1", t, &[1], &[]),
                Instance::new("thm7-E1", -t, &[-1], &[]),
            ]
        }),
        // the pair actually isomorphic to E1_t(1); their discriminants agree under t -> t+12
        Claim {
            listed: false,
            ..claim("E1_t(1) ~ E1_{t+12}(-1)", &|t| {
                vec![
                    Instance::new("thm7-E1", t, &[1], &[]),
                    Instance::new("thm7-E1", t + 12, &[-1], &[]),
                ]
            })
        },
        claim("E3_t(1) ~ E2_{-t}(-1)", &|t| {
            vec![
                Instance::new("thm7-E3", t, &[1], &[]),
                Instance::new("thm7-E2", -t, &[-1], &[]),
            ]
        }),
        claim("E3_t(-1) ~ E2_{-t}(1)", &|t| {
            vec![
                Instance::new("thm7-E3", t, &[-1], &[]),
                Instance::new("thm7-E2", -t, &[1], &[]),
            ]
        }),
        claim("E4_t(1,-1,1) ~ E4_{t+1}(1,1,1)", &e4(1, [1, -1, 1])),
        claim("E4_t(1,-1,-1) ~ E4_{t+2}(1,1,1)", &e4(2, [1, -1, -1])),
        claim("E4_t(-1,1,1) ~ E4_{t-3}(1,1,1)", &e4(-3, [-1, 1, 1])),
        claim("E4_t(-1,1,-1) ~ E4_{t-2}(1,1,1)", &e4(-2, [-1, 1, -1])),
        claim("E4_t(-1,-1,-1) ~ E4_{t-1}(1,1,1)", &e4(-1, [-1, -1, -1])),
    ]
}

/// The claims between the six-point families. Their parameters are exponents, so
/// they run over `0..=hi` with `hi` capped to keep the roots small.
pub fn six_point_claims(hi: i64) -> Vec<Claim> {
    let hi = hi.clamp(0, 6);
    let grid = |f: &dyn Fn(i64, i64) -> Vec<Instance>| -> Vec<(i64, Vec<Instance>)> {
        let mut out = Vec::new();
        for t in 0..=hi {
            for d in 0..=hi {
                out.push((t * 100 + d, f(t, d)));
            }
        }
        out
    };
    let one = |label: &str, ms: Vec<Instance>| Claim {
        label: label.to_string(),
        listed: true,
        cases: vec![(0, ms)],
    };
    vec![
        Claim {
            listed: true,
            label: "E_d ~ E_{d+2}".into(),
            cases: over(0, hi, |d| {
                vec![Instance::new("thm3-E", d, &[], &[]), Instance::new("thm3-E", d + 2, &[], &[])]
            }),
        },
        Claim {
            listed: true,
            label: "C'_d ~ C'_{d+2}".into(),
            cases: over(0, hi, |d| {
                vec![
                    Instance::new("thm3-Cprime", d, &[], &[]),
                    Instance::new("thm3-Cprime", d + 2, &[], &[]),
                ]
            }),
        },
        Claim {
            listed: true,
            label: "C_{t,d} ~ C_{t,d+2} (case 100t+d)".into(),
            cases: grid(&|t, d| {
                vec![Instance::new("thm3-C", t, &[], &[d]), Instance::new("thm3-C", t, &[], &[d + 2])]
            }),
        },
        Claim {
            listed: true,
            label: "C_{t,d} ~ C_{t+1,d} (case 100t+d)".into(),
            cases: grid(&|t, d| {
                vec![Instance::new("thm3-C", t, &[], &[d]), Instance::new("thm3-C", t + 1, &[], &[d])]
            }),
        },
        one(
            "E_0 ~ C'_0",
            vec![Instance::new("thm3-E", 0, &[], &[]), Instance::new("thm3-Cprime", 0, &[], &[])],
        ),
        one(
            "E_1 ~ C'_1",
            vec![Instance::new("thm3-E", 1, &[], &[]), Instance::new("thm3-Cprime", 1, &[], &[])],
        ),
        one(
            "E_0 ~ C_{1,0}",
            vec![Instance::new("thm3-E", 0, &[], &[]), Instance::new("thm3-C", 1, &[], &[0])],
        ),
        one(
            "E_1 ~ C_{1,1}",
            vec![Instance::new("thm3-E", 1, &[], &[]), Instance::new("thm3-C", 1, &[], &[1])],
        ),
    ]
}

/// `E_t` against `F_t`, which have different discriminant polynomials.
pub fn negative_control(lo: i64, hi: i64) -> Claim {
    Claim {
        label: "E_t ~ F_t (control)".into(),
        listed: false,
        cases: over(lo, hi, |t| {
            vec![Instance::new("thm7-E", t, &[], &[]), Instance::new("thm7-F", t, &[], &[])]
        }),
    }
}

pub fn certify_isomorphism_tables(lo: i64, hi: i64) -> IsomorphismReport {
    let mut claims = three_point_claims(lo, hi);
    claims.extend(six_point_claims(hi.min(4)));
    IsomorphismReport {
        t_range: (lo, hi),
        claims: claims.iter().map(run).collect(),
        control: run(&negative_control(lo, hi)),
    }
}
