//! The quintic normal form `y^2 = x G(x)` of an equation with a rational
//! Weierstrass point besides the one at infinity.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{GenusTwoEquation, Transformation};
use crate::error::{domain, Error, Result};
use crate::exactmath::{rational_roots, QPoly};

/// The finite rational root of `4P + Q^2` of least absolute value, the positive one on a tie.
pub fn default_weierstrass_point(e: &GenusTwoEquation) -> Result<BigRational> {
    rational_roots(e.sextic())
        .into_iter()
        .min_by(|a, b| a.abs().cmp(&b.abs()).then(b.cmp(a)))
        .ok_or(Error::NoRationalWeierstrassPoint)
}

/// `u = 4x - 4x0`, `v = 32y + 16Q(x)`, so that `v^2 = 256 F(x)`.
pub fn origin_transformation(e: &GenusTwoEquation, x0: &BigRational) -> Result<Transformation> {
    let b = -(x0 * BigRational::from_integer(4.into()));
    if !b.is_integer() {
        return Err(domain("4*x0 must be an integer"));
    }
    let h: QPoly = e.q().scale(&BigRational::from_integer(16.into()));
    Transformation::new(
        4.into(),
        b.to_integer(),
        BigInt::zero(),
        1.into(),
        BigRational::from_integer(32.into()),
        h,
    )
}

/// Sends the Weierstrass point `x0` (default: [`default_weierstrass_point`]) to the
/// origin, giving an integral `y^2 = G(x)` with `G` monic of degree 5, `G(0) = 0`,
/// and `Δ(G) = 2^40 Δ(E)`.
pub fn quintic_normal_form(
    e: &GenusTwoEquation,
    x0: Option<&BigRational>,
) -> Result<GenusTwoEquation> {
    if !e.has_standard_shape() || !e.is_integral() {
        return Err(domain("quintic normal form needs an integral equation with Q of degree <= 2 and P monic quintic"));
    }
    if !e.is_smooth() {
        return Err(domain("singular equation"));
    }
    let x0 = match x0 {
        Some(r) => {
            if !e.sextic().eval(r).is_zero() {
                return Err(domain("given point is not a root of 4P + Q^2"));
            }
            r.clone()
        }
        None => default_weierstrass_point(e)?,
    };
    let t = origin_transformation(e, &x0)?;
    Ok(e.transform(&t))
}
