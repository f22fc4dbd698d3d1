//! Resultants and binary-form discriminants.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{QPoly, ZPoly};
use crate::error::{domain, Result};

/// Sylvester resultant of two integer polynomials, via the subresultant PRS.
///
/// `Res(0, g) = 0` for nonzero `g`; both arguments zero is a domain error.
pub fn resultant(f: &ZPoly, g: &ZPoly) -> Result<BigInt> {
    let (Some(m), Some(n)) = (f.degree(), g.degree()) else {
        if f.is_zero() && g.is_zero() {
            return Err(domain("resultant of two zero polynomials"));
        }
        return Ok(BigInt::zero());
    };
    let (mut a, mut b, mut s) = if m >= n {
        (f.clone(), g.clone(), BigInt::one())
    } else {
        let sign = if (m * n) % 2 == 1 { -BigInt::one() } else { BigInt::one() };
        (g.clone(), f.clone(), sign)
    };
    let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
    if db == 0 {
        return Ok(s * num_traits::pow(b.leading().unwrap().clone(), da));
    }

    let ca = a.content();
    let cb = b.content();
    a = a.div_exact_scalar(&ca);
    b = b.div_exact_scalar(&cb);
    let t = num_traits::pow(ca, db) * num_traits::pow(cb, da);

    let mut g_ = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
        let r = a.pseudo_rem(&b);
        a = b;
        if r.is_zero() {
            return Ok(BigInt::zero());
        }
        let div = &g_ * num_traits::pow(h.clone(), delta);
        b = r.div_exact_scalar(&div);
        g_ = a.leading().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            num_traits::pow(g_.clone(), delta) / num_traits::pow(h.clone(), delta - 1)
        };
        if b.degree() == Some(0) {
            break;
        }
    }
    let da = a.degree().unwrap();
    let lb = b.leading().unwrap().clone();
    let h = num_traits::pow(lb, da) / num_traits::pow(h, da - 1);
    Ok(s * t * h)
}

/// Resultant over the rationals, by clearing denominators.
pub fn resultant_q(f: &QPoly, g: &QPoly) -> Result<BigRational> {
    let (fz, lf) = f.clear_denominators();
    let (gz, lg) = g.clear_denominators();
    let r = resultant(&fz, &gz)?;
    let (m, n) = (f.degree().unwrap_or(0), g.degree().unwrap_or(0));
    Ok(BigRational::new(
        r,
        num_traits::pow(lf, n) * num_traits::pow(lg, m),
    ))
}

/// Classical discriminant of a polynomial of exact degree `m >= 1`.
fn classical_disc(f: &ZPoly) -> BigInt {
    let m = f.degree().expect("nonzero");
    if m == 1 {
        return BigInt::one();
    }
    let lc = f.leading().unwrap().clone();
    let r = resultant(f, &f.derivative()).expect("nonzero input");
    let (q, rem) = r.div_rem(&lc);
    debug_assert!(rem.is_zero());
    if (m * (m - 1) / 2) % 2 == 1 {
        -q
    } else {
        q
    }
}

/// Discriminant of `f` read as a binary form of degree `n`.
///
/// With `m = deg f`: the classical discriminant when `m = n`, `lc(f)^2 disc_m(f)` when
/// `m = n - 1` (a simple root at infinity), and `0` when `m <= n - 2` (at least a
/// double root at infinity). This is the convention under which
/// `disc_n(f o M) = det(M)^(n(n-1)) disc_n(f)` holds for every invertible `M`.
pub fn disc_n(f: &ZPoly, n: usize) -> Result<BigInt> {
    if n < 1 {
        return Err(domain("disc_n requires n >= 1"));
    }
    let Some(m) = f.degree() else {
        return Err(domain("discriminant of the zero polynomial"));
    };
    if m > n {
        return Err(domain(format!("degree {m} exceeds formal degree {n}")));
    }
    if n == 1 {
        return Ok(BigInt::one());
    }
    if m == n {
        Ok(classical_disc(f))
    } else if m + 1 == n {
        let lc = f.leading().unwrap().clone();
        if m == 0 {
            return Ok(&lc * &lc);
        }
        Ok(&lc * &lc * classical_disc(f))
    } else {
        Ok(BigInt::zero())
    }
}

/// [`disc_n`] over the rationals: `disc_n(f / l) = disc_n(f) / l^(2n-2)`.
pub fn disc_n_q(f: &QPoly, n: usize) -> Result<BigRational> {
    let (fz, l) = f.clear_denominators();
    let d = disc_n(&fz, n)?;
    Ok(BigRational::new(d, num_traits::pow(l, 2 * n - 2)))
}

/// Sign of a big integer as -1, 0 or 1.
pub fn signum(n: &BigInt) -> i32 {
    if n.is_positive() {
        1
    } else if n.is_negative() {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(cs: &[i64]) -> ZPoly {
        ZPoly::from_i64s(cs)
    }

    #[test]
    fn linear_resultant() {
        assert_eq!(resultant(&z(&[-2, 1]), &z(&[-5, 1])).unwrap(), BigInt::from(-3));
    }

    #[test]
    fn quadratic_resultant() {
        assert_eq!(resultant(&z(&[-1, 0, 1]), &z(&[-4, 0, 1])).unwrap(), BigInt::from(9));
    }

    #[test]
    fn resultant_with_self_vanishes() {
        let f = z(&[3, -1, 0, 2]);
        assert!(resultant(&f, &f).unwrap().is_zero());
    }

    #[test]
    fn resultant_edge_cases() {
        assert!(resultant(&ZPoly::zero(), &ZPoly::zero()).is_err());
        assert!(resultant(&ZPoly::zero(), &z(&[1, 1])).unwrap().is_zero());
        // constant against degree 3: c^3
        assert_eq!(resultant(&z(&[2]), &z(&[1, 0, 0, 1])).unwrap(), BigInt::from(8));
        assert_eq!(resultant(&z(&[1, 0, 0, 1]), &z(&[2])).unwrap(), BigInt::from(8));
    }

    #[test]
    fn small_discriminants() {
        assert_eq!(disc_n(&z(&[-1, 0, 1]), 2).unwrap(), BigInt::from(4));
        // x^3 + p x + q: -4p^3 - 27q^2
        assert_eq!(disc_n(&z(&[1, -1, 0, 1]), 3).unwrap(), BigInt::from(-23));
        let quintic = z(&[0, 4, 0, -5, 0, 1]);
        assert_eq!(disc_n(&quintic, 5).unwrap(), BigInt::from(82944));
    }

    #[test]
    fn root_at_infinity_conventions() {
        let g = z(&[0, 4, 0, -5, 0, 1]).scale(&BigInt::from(4));
        assert_eq!(
            disc_n(&g, 6).unwrap(),
            BigInt::from(16) * disc_n(&g, 5).unwrap()
        );
        assert!(disc_n(&z(&[1, 0, 1]), 4).unwrap().is_zero());
        assert!(disc_n(&ZPoly::zero(), 3).is_err());
        assert!(disc_n(&z(&[1, 1]), 0).is_err());
    }

    #[test]
    fn rational_discriminant_scales() {
        let f = z(&[-1, 0, 1]).to_rational().scale(&BigRational::new(1.into(), 2.into()));
        assert_eq!(disc_n_q(&f, 2).unwrap(), BigRational::from_integer(1.into()));
    }
}
