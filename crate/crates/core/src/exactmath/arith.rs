//! Scalar helpers: valuations, squares, integer quadratics.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{domain, Result};

/// `v_p(n)`; zero has no valuation.
pub fn v_p(n: &BigInt, p: u64) -> Result<u32> {
    if n.is_zero() {
        return Err(domain("valuation of zero"));
    }
    if p < 2 {
        return Err(domain("valuation base must be at least 2"));
    }
    if p == 2 {
        return Ok(n.magnitude().trailing_zeros().unwrap_or(0) as u32);
    }
    let p = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return Ok(v);
        }
        n = q;
        v += 1;
    }
}

/// `v_p` of a nonzero rational, possibly negative.
pub fn v_p_rat(x: &BigRational, p: u64) -> Result<i64> {
    if x.is_zero() {
        return Err(domain("valuation of zero"));
    }
    Ok(v_p(x.numer(), p)? as i64 - v_p(x.denom(), p)? as i64)
}

/// Splits `n != 0` as `2^v * odd` with the sign carried by `odd`.
pub fn two_part(n: &BigInt) -> Result<(u32, BigInt)> {
    let v = v_p(n, 2)?;
    Ok((v, n >> v as usize))
}

pub fn pow2(k: u32) -> BigInt {
    BigInt::one() << k as usize
}

/// Exact square root if `n` is a perfect square.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

pub fn is_perfect_square(n: &BigInt) -> bool {
    exact_sqrt(n).is_some()
}

pub fn is_rational_square(x: &BigRational) -> bool {
    is_perfect_square(x.numer()) && is_perfect_square(x.denom())
}

/// All integers `x` with `A x^2 + B x + C = N`, ascending.
///
/// The degenerate case `A = B = 0` with `C = N` has infinitely many solutions and
/// is reported as a domain error.
pub fn solve_quadratic(a: &BigInt, b: &BigInt, c: &BigInt, n: &BigInt) -> Result<Vec<BigInt>> {
    let c = c - n;
    if a.is_zero() {
        if b.is_zero() {
            return if c.is_zero() {
                Err(domain("every integer solves 0 = 0"))
            } else {
                Ok(vec![])
            };
        }
        let (q, r) = (-&c).div_rem(b);
        return Ok(if r.is_zero() { vec![q] } else { vec![] });
    }
    let disc = b * b - BigInt::from(4) * a * &c;
    let Some(s) = exact_sqrt(&disc) else {
        return Ok(vec![]);
    };
    let two_a = a * 2;
    let mut out = Vec::new();
    for num in [-b + &s, -b - &s] {
        let (q, r) = num.div_rem(&two_a);
        if r.is_zero() && !out.contains(&q) {
            out.push(q);
        }
    }
    out.sort();
    Ok(out)
}
