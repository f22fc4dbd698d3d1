//! Möbius substitutions on polynomials viewed as binary forms.

use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::{Coeff, Polynomial};
use crate::error::{domain, Error, Result};

/// `(cx+d)^n f((ax+b)/(cx+d))`, expanded.
///
/// This is a right action: transforming by `M1` and then by `M2` is the same as
/// transforming once by `M1 * M2`.
pub fn mobius_transform<T: Coeff>(
    f: &Polynomial<T>,
    n: usize,
    a: &BigInt,
    b: &BigInt,
    c: &BigInt,
    d: &BigInt,
) -> Result<Polynomial<T>> {
    if (a * d - b * c).is_zero() {
        return Err(Error::SingularMatrix);
    }
    if f.degree().is_some_and(|m| m > n) {
        return Err(domain(format!("degree exceeds formal degree {n}")));
    }
    let num = Polynomial::<T>::new(vec![T::from(b.clone()), T::from(a.clone())]);
    let den = Polynomial::<T>::new(vec![T::from(d.clone()), T::from(c.clone())]);

    // powers of numerator and denominator, built once
    let mut num_pows = vec![Polynomial::one()];
    let mut den_pows = vec![Polynomial::one()];
    for i in 1..=n {
        num_pows.push(&num_pows[i - 1] * &num);
        den_pows.push(&den_pows[i - 1] * &den);
    }
    let mut out = Polynomial::zero();
    for (i, fi) in f.coeffs().iter().enumerate() {
        if fi.is_zero() {
            continue;
        }
        let term = (&num_pows[i] * &den_pows[n - i]).scale(fi);
        out = &out + &term;
    }
    Ok(out)
}

/// 2x2 integer matrix product `m1 * m2`, entries `(a, b, c, d)` row-major.
pub fn mat_mul(
    m1: (&BigInt, &BigInt, &BigInt, &BigInt),
    m2: (&BigInt, &BigInt, &BigInt, &BigInt),
) -> (BigInt, BigInt, BigInt, BigInt) {
    let (a1, b1, c1, d1) = m1;
    let (a2, b2, c2, d2) = m2;
    (
        a1 * a2 + b1 * c2,
        a1 * b2 + b1 * d2,
        c1 * a2 + d1 * c2,
        c1 * b2 + d1 * d2,
    )
}
