//! Genus 2 Weierstrass equations `y^2 + Q(x) y = P(x)` and changes of coordinates.

mod constructors;
mod normal_form;

pub use constructors::{cubic_discriminant, two_quadratic_k, Constructed};
pub use normal_form::{default_weierstrass_point, origin_transformation, quintic_normal_form};

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::exactmath::{disc_n_q, mobius_transform, two_part, QPoly, ZPoly};
use crate::serial::ExactRat;

/// A Weierstrass equation with `deg P <= 6`, `deg Q <= 3`.
///
/// Coefficients are rational so that intermediate models produced by a change of
/// coordinates can be represented; [`is_integral`](Self::is_integral) tells them apart.
#[derive(Clone, Debug)]
pub struct GenusTwoEquation {
    p: QPoly,
    q: QPoly,
    f: QPoly,
    disc: OnceLock<BigRational>,
}

impl PartialEq for GenusTwoEquation {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.q == other.q
    }
}

impl Eq for GenusTwoEquation {}

impl GenusTwoEquation {
    pub fn new(p: QPoly, q: QPoly) -> Result<Self> {
        if p.degree().is_some_and(|d| d > 6) {
            return Err(domain("deg P must be at most 6"));
        }
        if q.degree().is_some_and(|d| d > 3) {
            return Err(domain("deg Q must be at most 3"));
        }
        let f = &p.scale(&BigRational::from_integer(4.into())) + &(&q * &q);
        Ok(GenusTwoEquation {
            p,
            q,
            f,
            disc: OnceLock::new(),
        })
    }

    pub fn from_integral(p: &ZPoly, q: &ZPoly) -> Result<Self> {
        Self::new(p.to_rational(), q.to_rational())
    }

    /// Shorthand for tests and tables: coefficient lists from `x^0` upward.
    pub fn from_i64s(p: &[i64], q: &[i64]) -> Result<Self> {
        Self::from_integral(&ZPoly::from_i64s(p), &ZPoly::from_i64s(q))
    }

    /// `y^2 = g(x)`.
    pub fn hyperelliptic(g: &ZPoly) -> Result<Self> {
        Self::from_integral(g, &ZPoly::zero())
    }

    pub fn p(&self) -> &QPoly {
        &self.p
    }

    pub fn q(&self) -> &QPoly {
        &self.q
    }

    /// The sextic `4P + Q^2`.
    pub fn sextic(&self) -> &QPoly {
        &self.f
    }

    /// `2^-12 disc_6(4P + Q^2)`.
    pub fn discriminant(&self) -> &BigRational {
        self.disc.get_or_init(|| {
            let d = disc_n_q(&self.f, 6).unwrap_or_else(|_| BigRational::zero());
            d / BigRational::from_integer(BigInt::from(4096))
        })
    }

    /// The discriminant as an integer, if it is one.
    pub fn integral_discriminant(&self) -> Option<BigInt> {
        let d = self.discriminant();
        d.is_integer().then(|| d.to_integer())
    }

    pub fn is_smooth(&self) -> bool {
        !self.discriminant().is_zero()
    }

    pub fn is_integral(&self) -> bool {
        self.p.is_integral() && self.q.is_integral()
    }

    /// `deg Q <= 2` and `P` monic of degree 5.
    pub fn has_standard_shape(&self) -> bool {
        self.q.degree().is_none_or(|d| d <= 2) && self.p.degree() == Some(5) && self.p.is_monic()
    }

    pub fn integral_p(&self) -> Option<ZPoly> {
        self.p.to_integer()
    }

    pub fn integral_q(&self) -> Option<ZPoly> {
        self.q.to_integer()
    }

    /// `(odd, v)` with `Δ = 2^v * odd`; the sign stays on `odd`.
    pub fn discriminant_two_part(&self) -> Result<(BigInt, u32)> {
        let d = self
            .integral_discriminant()
            .ok_or_else(|| domain("discriminant is not an integer"))?;
        let (v, odd) = two_part(&d)?;
        Ok((odd, v))
    }

    /// Applies the change of coordinates `T`, returning the equation in the new
    /// coordinates `(u, v)`.
    ///
    /// With `u = (ax+b)/(cx+d)` and `v = (ey + H(x))/(cx+d)^3`, write `X̂` for the image of
    /// a form `X` under the inverse substitution `x = (du-b)/(a-cu)`, homogenized
    /// by `(a-cu)^deg`. The new equation is
    /// `Q' = (e Q̂ - 2Ĥ)/det^3`, `P' = (e^2 P̂ + e Q̂ Ĥ - Ĥ^2)/det^6`,
    /// whence `F' = e^2 F̂ / det^6` and `Δ' = e^20 det^-30 Δ`.
    pub fn transform(&self, t: &Transformation) -> GenusTwoEquation {
        let (a, b, c, d) = (&t.a, &t.b, &t.c, &t.d);
        let (nb, nc) = (-b, -c);
        let inv = |f: &QPoly, n: usize| mobius_transform(f, n, d, &nb, &nc, a).expect("det != 0");
        let qh = inv(&self.q, 3);
        let ph = inv(&self.p, 6);
        let hh = inv(&t.h, 3);
        let det = BigRational::from_integer(t.det());
        let det3 = &det * &det * &det;
        let det6 = &det3 * &det3;
        let two = BigRational::from_integer(2.into());
        let q_new = (&qh.scale(&t.e) - &hh.scale(&two)).scale(&det3.recip());
        let p_new = (&(&ph.scale(&(&t.e * &t.e)) + &(&qh * &hh).scale(&t.e)) - &(&hh * &hh))
            .scale(&det6.recip());
        GenusTwoEquation::new(p_new, q_new).expect("degrees are preserved")
    }

    /// Canonical text form `y^2 + (Q)*y = P`.
    pub fn to_text(&self) -> String {
        if self.q.is_zero() {
            format!("y^2 = {}", self.p)
        } else {
            format!("y^2 + ({})*y = {}", self.q, self.p)
        }
    }

    pub fn to_json(&self) -> EquationJson {
        EquationJson {
            p: self.p.coeffs().iter().cloned().map(ExactRat).collect(),
            q: self.q.coeffs().iter().cloned().map(ExactRat).collect(),
        }
    }

    pub fn from_json(j: &EquationJson) -> Result<Self> {
        let p = QPoly::new(j.p.iter().map(|c| c.0.clone()).collect());
        let q = QPoly::new(j.q.iter().map(|c| c.0.clone()).collect());
        Self::new(p, q)
    }

    /// Parses the JSON object `{"P": [..], "Q": [..]}`.
    pub fn from_json_str(s: &str) -> Result<Self> {
        let j: EquationJson =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("equation JSON: {e}")))?;
        Self::from_json(&j)
    }

    /// Canonical serialization used for hashing and storage.
    pub fn canonical_json(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("serializable")
    }
}

impl fmt::Display for GenusTwoEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Wire format of an equation; coefficients from `x^0` upward.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquationJson {
    #[serde(rename = "P")]
    pub p: Vec<ExactRat>,
    #[serde(rename = "Q", default)]
    pub q: Vec<ExactRat>,
}

/// The change of coordinates `u = (ax+b)/(cx+d)`, `v = (ey + H(x))/(cx+d)^3`.
#[derive(Clone, Debug, PartialEq)]
pub struct Transformation {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
    pub e: BigRational,
    pub h: QPoly,
}

impl Transformation {
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt, e: BigRational, h: QPoly) -> Result<Self> {
        if (&a * &d - &b * &c).is_zero() {
            return Err(Error::SingularMatrix);
        }
        if e.is_zero() {
            return Err(domain("e must be nonzero"));
        }
        if h.degree().is_some_and(|k| k > 3) {
            return Err(domain("deg H must be at most 3"));
        }
        Ok(Transformation { a, b, c, d, e, h })
    }

    /// Integer-parameter shorthand.
    pub fn from_i64s(a: i64, b: i64, c: i64, d: i64, e: i64, h: &[i64]) -> Result<Self> {
        Self::new(
            a.into(),
            b.into(),
            c.into(),
            d.into(),
            BigRational::from_integer(e.into()),
            ZPoly::from_i64s(h).to_rational(),
        )
    }

    pub fn identity() -> Self {
        Transformation {
            a: BigInt::one(),
            b: BigInt::zero(),
            c: BigInt::zero(),
            d: BigInt::one(),
            e: BigRational::one(),
            h: QPoly::zero(),
        }
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    /// The composite "first `self`, then `next`".
    ///
    /// Matrix `M_next * M_self`, `e = e_self e_next`,
    /// `H = e_next H_self + (c x + d)^3 H_next(M_self x)` with `(c, d)` from `self`.
    pub fn then(&self, next: &Transformation) -> Transformation {
        let (a, b, c, d) = crate::exactmath::mobius::mat_mul(
            (&next.a, &next.b, &next.c, &next.d),
            (&self.a, &self.b, &self.c, &self.d),
        );
        let h2 = mobius_transform(&next.h, 3, &self.a, &self.b, &self.c, &self.d).expect("det != 0");
        let h = &self.h.scale(&next.e) + &h2;
        Transformation {
            a,
            b,
            c,
            d,
            e: &self.e * &next.e,
            h,
        }
    }

    /// The factor `e^20 det^-30` by which the discriminant changes.
    pub fn discriminant_factor(&self) -> BigRational {
        let det = BigRational::from_integer(self.det());
        num_traits::pow(self.e.clone(), 20) / num_traits::pow(det, 30)
    }
}
