//! Equations `y^2 = x * G(x)` assembled from factor data, each paired with the
//! closed-form discriminant of its shape.

use num_bigint::BigInt;

use super::GenusTwoEquation;
use crate::exactmath::{pow2, ZPoly};

/// An equation together with the closed-form value of its discriminant.
#[derive(Clone, Debug)]
pub struct Constructed {
    pub equation: GenusTwoEquation,
    pub closed_form: BigInt,
}

impl Constructed {
    /// True when the closed form equals `2^-12 disc_6(4P + Q^2)`.
    pub fn consistent(&self) -> bool {
        self.equation.integral_discriminant().as_ref() == Some(&self.closed_form)
    }
}

fn lin(r: &BigInt) -> ZPoly {
    ZPoly::linear_root(r.clone())
}

fn x_times(factors: &[ZPoly]) -> GenusTwoEquation {
    let g = factors.iter().fold(ZPoly::x(), |acc, f| &acc * f);
    GenusTwoEquation::hyperelliptic(&g).expect("degree 5")
}

fn sq(x: &BigInt) -> BigInt {
    x * x
}

impl GenusTwoEquation {
    /// `y^2 = x (x-b1)(x-b2)(x-b3)(x-b4)`.
    pub fn from_roots_quintic(b: [&BigInt; 4]) -> Constructed {
        let equation = x_times(&b.map(lin));
        let mut cf = pow2(8);
        for i in 0..4 {
            cf *= sq(b[i]);
            for j in i + 1..4 {
                cf *= sq(&(b[i] - b[j]));
            }
        }
        Constructed {
            equation,
            closed_form: cf,
        }
    }

    /// `y^2 = x (x-b1)(x-b2)(x^2 + b3 x + b4)`.
    pub fn from_quartic_split(b1: &BigInt, b2: &BigInt, b3: &BigInt, b4: &BigInt) -> Constructed {
        let quad = ZPoly::new(vec![b4.clone(), b3.clone(), 1.into()]);
        let equation = x_times(&[lin(b1), lin(b2), quad]);
        let closed_form = pow2(8)
            * sq(b1)
            * sq(&(b1 - b2))
            * sq(b2)
            * (sq(b3) - 4 * b4)
            * sq(b4)
            * sq(&(sq(b1) + b1 * b3 + b4))
            * sq(&(sq(b2) + b2 * b3 + b4));
        Constructed {
            equation,
            closed_form,
        }
    }

    /// `y^2 = x (x^2 + a1 x + a2)(x^2 + b1 x + b2)`.
    pub fn from_two_quadratics(a1: &BigInt, a2: &BigInt, b1: &BigInt, b2: &BigInt) -> Constructed {
        let qa = ZPoly::new(vec![a2.clone(), a1.clone(), 1.into()]);
        let qb = ZPoly::new(vec![b2.clone(), b1.clone(), 1.into()]);
        let equation = x_times(&[qa, qb]);
        let closed_form = pow2(8)
            * (sq(a1) - 4 * a2)
            * sq(a2)
            * (sq(b1) - 4 * b2)
            * sq(b2)
            * sq(&two_quadratic_k(a1, a2, b1, b2));
        Constructed {
            equation,
            closed_form,
        }
    }

    /// `y^2 = x (x-b)(x^3 + d x^2 + e x + f)`.
    pub fn from_cubic_split(b: &BigInt, d: &BigInt, e: &BigInt, f: &BigInt) -> Constructed {
        let cubic = ZPoly::new(vec![f.clone(), e.clone(), d.clone(), 1.into()]);
        let equation = x_times(&[lin(b), cubic]);
        let at_b = b * b * b + d * b * b + e * b + f;
        let closed_form = pow2(8) * sq(b) * sq(f) * sq(&at_b) * cubic_discriminant(d, e, f);
        Constructed {
            equation,
            closed_form,
        }
    }

    /// `y^2 = x (x^4 + b x^3 + c x^2 + d x + e)`.
    pub fn from_quartic(b: &BigInt, c: &BigInt, d: &BigInt, e: &BigInt) -> Constructed {
        let quartic = ZPoly::new(vec![e.clone(), d.clone(), c.clone(), b.clone(), 1.into()]);
        let equation = x_times(&[quartic]);
        let (b2, c2, d2, e2) = (sq(b), sq(c), sq(d), sq(e));
        let b3 = &b2 * b;
        let c3 = &c2 * c;
        let d3 = &d2 * d;
        let inner = &b2 * &c2 * &d2 - 4 * &c3 * &d2 - 4 * &b3 * &d3 + 18 * b * c * &d3
            - 27 * &d2 * &d2
            - 4 * &b2 * &c3 * e
            + 16 * &c2 * &c2 * e
            + 18 * &b3 * c * d * e
            - 80 * b * &c2 * d * e
            - 6 * &b2 * &d2 * e
            + 144 * c * &d2 * e
            - 27 * &b2 * &b2 * &e2
            + 144 * &b2 * c * &e2
            - 128 * &c2 * &e2
            - 192 * b * d * &e2
            + 256 * &e2 * e;
        Constructed {
            equation,
            closed_form: pow2(8) * e2 * inner,
        }
    }
}

/// `K = (a2-b2)^2 + (a1-b1)(a1 b2 - a2 b1)`, the resultant of the two quadratics.
pub fn two_quadratic_k(a1: &BigInt, a2: &BigInt, b1: &BigInt, b2: &BigInt) -> BigInt {
    sq(&(a2 - b2)) + (a1 - b1) * (a1 * b2 - a2 * b1)
}

/// Discriminant of `x^3 + d x^2 + e x + f`.
pub fn cubic_discriminant(d: &BigInt, e: &BigInt, f: &BigInt) -> BigInt {
    sq(d) * sq(e) - 4 * e * e * e - 4 * d * d * d * f + 18 * d * e * f - 27 * sq(f)
}
