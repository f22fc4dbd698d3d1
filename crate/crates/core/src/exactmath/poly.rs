//! Dense univariate polynomials over exact coefficient rings.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Coefficient rings the polynomial code works over (in practice [`BigInt`] and [`BigRational`]).
pub trait Coeff:
    Clone
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + From<BigInt>
    + Send
    + Sync
{
}

impl<T> Coeff for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
        + From<BigInt>
        + Send
        + Sync
{
}

/// A dense polynomial; `coeffs[i]` is the coefficient of `x^i`.
///
/// Trailing zero coefficients are always stripped, so the zero polynomial has
/// an empty coefficient vector and `degree()` returns `None`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

pub type ZPoly = Polynomial<BigInt>;
pub type QPoly = Polynomial<BigRational>;

impl<T: Coeff> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `x - r`.
    pub fn linear_root(r: T) -> Self {
        Self::new(vec![-r, T::one()])
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| T::from(BigInt::from(c))).collect())
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// `self(g(x))`.
    pub fn compose(&self, g: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * g) + &Self::constant(c.clone()))
    }

    /// `self(x + s)`.
    pub fn shift(&self, s: &T) -> Self {
        self.compose(&Self::new(vec![s.clone(), T::one()]))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| T::from(BigInt::from(i)) * c.clone())
                .collect(),
        )
    }

    /// Coefficient reversal with respect to a formal degree `n >= deg`.
    pub fn reverse(&self, n: usize) -> Self {
        let mut cs: Vec<T> = (0..=n).map(|i| self.coeff(i)).collect();
        cs.reverse();
        Self::new(cs)
    }

    pub fn map<U: Coeff>(&self, f: impl Fn(&T) -> U) -> Polynomial<U> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }

    /// Formats the polynomial in the variable `var`, e.g. `x^5 - 3*x + 1`.
    pub fn display_in(&self, var: &str) -> String
    where
        T: fmt::Display + Signed,
    {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if i == 0 {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}*{mono}"));
            }
        }
        out
    }
}

impl<T: Coeff + fmt::Display + Signed> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl<T: Coeff> Add for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Coeff> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Coeff> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

impl<T: Coeff> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        Polynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Coeff> $tr for Polynomial<T> {
            type Output = Polynomial<T>;
            fn $m(self, rhs: Polynomial<T>) -> Polynomial<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Coeff> Neg for Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        -(&self)
    }
}

impl ZPoly {
    /// Gcd of the coefficients, non-negative; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// `self / content`, with a positive leading coefficient.
    pub fn primitive_part(&self) -> ZPoly {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(|l| l.is_negative()) {
            c = -c;
        }
        self.div_exact_scalar(&c)
    }

    /// Divides every coefficient by `c`; the division must be exact.
    pub fn div_exact_scalar(&self, c: &BigInt) -> ZPoly {
        ZPoly::new(
            self.coeffs
                .iter()
                .map(|a| {
                    debug_assert!((a % c).is_zero(), "inexact scalar division");
                    a / c
                })
                .collect(),
        )
    }

    /// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a = q*b + r`.
    pub fn pseudo_rem(&self, b: &ZPoly) -> ZPoly {
        let db = b.degree().expect("pseudo_rem by zero polynomial");
        let Some(da) = self.degree() else {
            return ZPoly::zero();
        };
        if da < db {
            let lb = b.leading().unwrap().clone();
            return self.scale(&lb);
        }
        let lb = b.leading().unwrap().clone();
        let mut r = self.clone();
        let mut steps = da - db + 1;
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.leading().unwrap().clone();
            r = &r.scale(&lb) - &(b * &ZPoly::monomial(lr, dr - db));
            steps -= 1;
        }
        r.scale(&num_traits::pow(lb, steps))
    }

    pub fn to_rational(&self) -> QPoly {
        self.map(|c| BigRational::from_integer(c.clone()))
    }
}

impl QPoly {
    /// `Some` when every coefficient is an integer.
    pub fn to_integer(&self) -> Option<ZPoly> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(ZPoly::new)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Returns `(g, l)` with `g = l * self` integral and `l > 0` the lcm of the denominators.
    pub fn clear_denominators(&self) -> (ZPoly, BigInt) {
        let l = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let g = ZPoly::new(
            self.coeffs
                .iter()
                .map(|c| c.numer() * (&l / c.denom()))
                .collect(),
        );
        (g, l)
    }

    /// Euclidean division over the rationals.
    pub fn div_rem(&self, b: &QPoly) -> (QPoly, QPoly) {
        let db = b.degree().expect("division by zero polynomial");
        let lb = b.leading().unwrap().clone();
        let mut q = vec![BigRational::zero(); self.coeffs.len().saturating_sub(db).max(1)];
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let c = r.leading().unwrap().clone() / lb.clone();
            q[dr - db] = c.clone();
            r = &r - &(b * &QPoly::monomial(c, dr - db));
        }
        (QPoly::new(q), r)
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> QPoly {
        match self.leading() {
            None => QPoly::zero(),
            Some(l) => {
                let inv = l.recip();
                self.scale(&inv)
            }
        }
    }

    /// True when `gcd(f, f')` is constant; the zero polynomial is not squarefree.
    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// `f / gcd(f, f')`, monic.
    pub fn squarefree_part(&self) -> QPoly {
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }
}

/// Converts an integer to a rational.
pub fn rat(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(cs: &[i64]) -> ZPoly {
        ZPoly::from_i64s(cs)
    }

    #[test]
    fn normalizes_trailing_zeros() {
        let p = z(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(z(&[0, 0]).is_zero());
        assert_eq!(ZPoly::zero().degree(), None);
    }

    #[test]
    fn arithmetic_and_evaluation() {
        let f = z(&[-2, 1]);
        let g = z(&[-5, 1]);
        assert_eq!(&f * &g, z(&[10, -7, 1]));
        assert_eq!(&f + &g, z(&[-7, 2]));
        assert_eq!(&f - &g, z(&[3]));
        assert_eq!((&f * &g).eval(&BigInt::from(3)), BigInt::from(-2));
        assert_eq!(f.pow(3), z(&[-8, 12, -6, 1]));
    }

    #[test]
    fn compose_and_shift() {
        let f = z(&[0, 0, 1]);
        assert_eq!(f.compose(&z(&[1, 1])), z(&[1, 2, 1]));
        assert_eq!(z(&[0, 1, 0, 1]).shift(&BigInt::from(-1)), z(&[-2, 4, -3, 1]));
    }

    #[test]
    fn content_and_primitive_part() {
        let f = z(&[6, -12, -18]);
        assert_eq!(f.content(), BigInt::from(6));
        assert_eq!(f.primitive_part(), z(&[-1, 2, 3]));
    }

    #[test]
    fn pseudo_remainder_identity() {
        let a = z(&[1, 0, 3, 2]);
        let b = z(&[1, 2]);
        let r = a.pseudo_rem(&b);
        // lc(b)^3 * a(-1/2) = 8 * 3/2
        assert_eq!(r, z(&[12]));
    }

    #[test]
    fn squarefree_detection() {
        assert!(z(&[-1, 0, 1]).to_rational().is_squarefree());
        assert!(!z(&[1, 2, 1]).to_rational().is_squarefree());
        let sf = (&z(&[1, 2, 1]) * &z(&[0, 1])).to_rational().squarefree_part();
        assert_eq!(sf, z(&[0, 1, 1]).to_rational());
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(z(&[1, -3, 0, 0, 0, 1]).to_string(), "x^5 - 3*x + 1");
        assert_eq!(z(&[0, 0, -1]).to_string(), "-x^2");
        assert_eq!(ZPoly::zero().to_string(), "0");
    }
}
