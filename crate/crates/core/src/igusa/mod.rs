//! Igusa invariants `J2..J10` of a genus 2 equation, computed from the sextic
//! `F = 4P + Q^2`, and the potential-good-reduction test built on them.

mod tables;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::exactmath::{disc_n_q, v_p_rat, QPoly};
use crate::weierstrass::GenusTwoEquation;

/// Igusa–Clebsch invariants `(I2, I4, I6, I10)` of a sextic of formal degree 6.
pub fn igusa_clebsch(f: &QPoly) -> Result<[BigRational; 4]> {
    if f.degree().is_some_and(|d| d > 6) {
        return Err(domain("sextic of degree > 6"));
    }
    let c: Vec<BigRational> = (0..7).map(|i| f.coeff(i)).collect();
    let eval = |table: &[([u8; 7], i64)]| -> BigRational {
        let mut acc = BigRational::zero();
        for (e, k) in table {
            let mut term = BigRational::from_integer(BigInt::from(*k));
            for (ci, &ei) in c.iter().zip(e.iter()) {
                if ei > 0 {
                    term *= num_traits::pow(ci.clone(), ei as usize);
                }
            }
            acc += term;
        }
        acc
    };
    let i10 = if f.is_zero() {
        BigRational::zero()
    } else {
        disc_n_q(f, 6)?
    };
    Ok([eval(&tables::I2), eval(&tables::I4), eval(&tables::I6), i10])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IgusaInvariants {
    #[serde(with = "crate::serial::rat_string")]
    pub j2: BigRational,
    #[serde(with = "crate::serial::rat_string")]
    pub j4: BigRational,
    #[serde(with = "crate::serial::rat_string")]
    pub j6: BigRational,
    #[serde(with = "crate::serial::rat_string")]
    pub j8: BigRational,
    #[serde(with = "crate::serial::rat_string")]
    pub j10: BigRational,
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

impl IgusaInvariants {
    /// Invariants of a smooth equation; `J10` equals the discriminant.
    pub fn of(e: &GenusTwoEquation) -> Result<Self> {
        if !e.is_smooth() {
            return Err(domain("Igusa invariants of a singular equation"));
        }
        let [i2, i4, i6, i10] = igusa_clebsch(e.sextic())?;
        let j2 = i2 / q(8);
        let j4 = (q(4) * &j2 * &j2 - i4) / q(96);
        let j6 = (q(8) * &j2 * &j2 * &j2 - q(160) * &j2 * &j4 - i6) / q(576);
        let j8 = (&j2 * &j6 - &j4 * &j4) / q(4);
        let j10 = i10 / q(4096);
        Ok(IgusaInvariants { j2, j4, j6, j8, j10 })
    }

    /// `[J2, J4, J6, J8, J10]`.
    pub fn as_array(&self) -> [&BigRational; 5] {
        [&self.j2, &self.j4, &self.j6, &self.j8, &self.j10]
    }

    /// `4 J8 = J2 J6 - J4^2`.
    pub fn j8_identity_holds(&self) -> bool {
        q(4) * &self.j8 == &self.j2 * &self.j6 - &self.j4 * &self.j4
    }

    /// Rescales by weight: `J_2i -> s^i J_2i`.
    pub fn weighted_scale(&self, s: &BigRational) -> Self {
        let s2 = s * s;
        let s3 = &s2 * s;
        let s4 = &s2 * &s2;
        let s5 = &s4 * s;
        IgusaInvariants {
            j2: &self.j2 * s,
            j4: &self.j4 * s2,
            j6: &self.j6 * s3,
            j8: &self.j8 * s4,
            j10: &self.j10 * s5,
        }
    }

    /// The first `i` in `1..=5` with `v_p(J_2i^5 / J10^i) < 0`, if any.
    pub fn bad_reduction_witness(&self, p: u64) -> Option<usize> {
        let v10 = v_p_rat(&self.j10, p).expect("J10 != 0 for smooth equations");
        (1..=5).find(|&i| {
            let j = self.as_array()[i - 1];
            if j.is_zero() {
                return false;
            }
            5 * v_p_rat(j, p).unwrap() - (i as i64) * v10 < 0
        })
    }
}

/// `J2^5/J10, J4^5/J10^2, J6^5/J10^3, J8^5/J10^4`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbsoluteInvariants {
    #[serde(with = "crate::serial::rat_string")]
    pub r1: BigRational,
    #[serde(with = "crate::serial::rat_string")]
    pub r2: BigRational,
    #[serde(with = "crate::serial::rat_string")]
    pub r3: BigRational,
    #[serde(with = "crate::serial::rat_string")]
    pub r4: BigRational,
}

pub fn absolute_invariants(inv: &IgusaInvariants) -> Result<AbsoluteInvariants> {
    if inv.j10.is_zero() {
        return Err(domain("absolute invariants need J10 != 0"));
    }
    let r = |j: &BigRational, i: usize| num_traits::pow(j.clone(), 5) / num_traits::pow(inv.j10.clone(), i);
    Ok(AbsoluteInvariants {
        r1: r(&inv.j2, 1),
        r2: r(&inv.j4, 2),
        r3: r(&inv.j6, 3),
        r4: r(&inv.j8, 4),
    })
}

pub fn igusa_invariants(e: &GenusTwoEquation) -> Result<IgusaInvariants> {
    IgusaInvariants::of(e)
}

/// Potential good reduction at `p`: `v_p(J_2i^5 / J10^i) >= 0` for `i = 1..5`.
pub fn potential_good_reduction(e: &GenusTwoEquation, p: u64) -> Result<bool> {
    Ok(IgusaInvariants::of(e)?.bad_reduction_witness(p).is_none())
}

/// Equality of the invariant vectors as points of weighted projective space
/// `P(1,2,3,4,5)`; this is isomorphism over an algebraic closure of the rationals,
/// and only a necessary condition for isomorphism over the rationals.
pub fn same_weighted_point(a: &IgusaInvariants, b: &IgusaInvariants) -> bool {
    let (xa, xb) = (a.as_array(), b.as_array());
    for i in 0..5 {
        for j in i + 1..5 {
            let (wi, wj) = (i + 1, j + 1);
            let g = wi.gcd(&wj);
            let (ei, ej) = (wj / g, wi / g);
            let lhs = num_traits::pow(xa[i].clone(), ei) * num_traits::pow(xb[j].clone(), ej);
            let rhs = num_traits::pow(xb[i].clone(), ei) * num_traits::pow(xa[j].clone(), ej);
            if lhs != rhs {
                return false;
            }
        }
    }
    // the zero vector is not a point
    xa.iter().any(|x| !x.is_zero()) == xb.iter().any(|x| !x.is_zero())
}

/// Geometric isomorphism test on smooth equations.
pub fn geometrically_isomorphic(e1: &GenusTwoEquation, e2: &GenusTwoEquation) -> Result<bool> {
    Ok(same_weighted_point(&IgusaInvariants::of(e1)?, &IgusaInvariants::of(e2)?))
}

/// `e^4 det^-6`, the weight-one factor by which the invariants change under `T`.
pub fn covariance_factor(t: &crate::weierstrass::Transformation) -> BigRational {
    let det = BigRational::from_integer(t.det());
    num_traits::pow(t.e.clone(), 4) / num_traits::pow(det, 6)
}

/// Smallest `k` with `2^k J` integral for all five invariants; `None` if some
/// denominator has an odd prime factor.
pub fn two_power_denominator(inv: &IgusaInvariants) -> Option<u32> {
    let mut k = 0;
    for j in inv.as_array() {
        let d = j.denom();
        let v = d.trailing_zeros().unwrap_or(0) as u32;
        if (d >> v as usize) != BigInt::one() {
            return None;
        }
        k = k.max(v);
    }
    Some(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::pow2;
    use crate::weierstrass::Transformation;

    fn int(n: i64) -> BigRational {
        q(n)
    }

    fn e0() -> GenusTwoEquation {
        GenusTwoEquation::from_i64s(&[0, 4, 0, -5, 0, 1], &[]).unwrap()
    }

    #[test]
    fn j10_is_the_discriminant() {
        let inv = IgusaInvariants::of(&e0()).unwrap();
        assert_eq!(inv.j10, BigRational::from_integer(pow2(18) * 81));
        assert!(inv.j8_identity_holds());
    }

    #[test]
    fn e0_vector() {
        let inv = IgusaInvariants::of(&e0()).unwrap();
        assert_eq!(
            [&inv.j2, &inv.j4, &inv.j6, &inv.j8],
            [&int(620), &int(9830), &int(-17820), &int(-26919325)]
        );
        assert_eq!(inv.j10, int(21233664));
    }

    #[test]
    fn covariance_under_a_transformation() {
        let e = GenusTwoEquation::from_i64s(&[1, -2, 0, 3, 1, 1], &[1, 0, 1]).unwrap();
        let t = Transformation::from_i64s(1, 2, 3, -1, -2, &[1, 0, 2, -1]).unwrap();
        let a = IgusaInvariants::of(&e).unwrap();
        let b = IgusaInvariants::of(&e.transform(&t)).unwrap();
        assert_eq!(b, a.weighted_scale(&covariance_factor(&t)));
        assert_eq!(absolute_invariants(&a).unwrap(), absolute_invariants(&b).unwrap());
        assert!(same_weighted_point(&a, &b));
    }

    #[test]
    fn singular_rejected() {
        let e = GenusTwoEquation::from_i64s(&[0, 0, 1, 1], &[]).unwrap();
        assert!(IgusaInvariants::of(&e).is_err());
    }

    #[test]
    fn odd_unit_discriminant_has_good_reduction() {
        let e = e0();
        assert!(potential_good_reduction(&e, 5).unwrap());
        assert!(potential_good_reduction(&e, 7).unwrap());
    }

    #[test]
    fn distinct_curves_separated() {
        let e1 = GenusTwoEquation::from_i64s(&[1, 0, 0, 0, 0, 1], &[]).unwrap();
        assert!(!geometrically_isomorphic(&e0(), &e1).unwrap());
        assert!(geometrically_isomorphic(&e1, &e1).unwrap());
    }
}
