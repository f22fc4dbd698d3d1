//! The registered one-parameter families.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exactmath::{pow2, QPoly, ZPoly};
use crate::weierstrass::GenusTwoEquation;

type Build = fn(&BigInt, &[i64], &[BigInt]) -> Result<GenusTwoEquation>;
type DiscPoly = fn(&[i64]) -> ZPoly;
type ClosedDisc = fn(&BigInt, &[i64], &[BigInt]) -> BigInt;

/// A family of equations in an integer parameter `t`, optional signs `ε_i` and
/// optional extra integer parameters.
pub struct ParametricFamily {
    pub name: &'static str,
    pub summary: &'static str,
    /// Number of sign parameters.
    pub signs: usize,
    /// Names of extra integer parameters.
    pub extra: &'static [&'static str],
    /// `Δ = 2^disc_scale_log2 * D(t)`.
    pub disc_scale_log2: u32,
    /// Whether the models have odd discriminant for every `t`.
    pub odd_discriminant: bool,
    /// Smallest admissible `t`, if bounded below.
    pub min_t: Option<i64>,
    /// Sign relating `D(t)` to the family's named quartic, which has positive leading coefficient.
    pub named_sign: i8,
    build: Build,
    disc_poly: Option<DiscPoly>,
    closed_disc: Option<ClosedDisc>,
}

fn r(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

fn qp(cs: Vec<BigInt>) -> QPoly {
    QPoly::new(cs.into_iter().map(r).collect())
}

fn eq(p: Vec<BigInt>, q: &[i64]) -> Result<GenusTwoEquation> {
    GenusTwoEquation::new(qp(p), ZPoly::from_i64s(q).to_rational())
}

fn b(n: i64) -> BigInt {
    BigInt::from(n)
}

/// `y^2 = x * prod (x - r)` for integer roots `r`.
fn x_roots(roots: &[BigInt]) -> Result<GenusTwoEquation> {
    let g = roots
        .iter()
        .fold(ZPoly::x(), |acc, r| &acc * &ZPoly::linear_root(r.clone()));
    GenusTwoEquation::hyperelliptic(&g)
}

fn pow3(d: &BigInt) -> Result<BigInt> {
    let d: u32 = u32::try_from(d).map_err(|_| Error::InvalidParameters("exponent out of range".into()))?;
    Ok(num_traits::pow(b(3), d as usize))
}

fn roots_disc(roots: &[BigInt]) -> BigInt {
    GenusTwoEquation::from_roots_quintic([&roots[0], &roots[1], &roots[2], &roots[3]]).closed_form
}

fn three_point_roots(t: &BigInt) -> Result<Vec<BigInt>> {
    let s = pow3(t)?;
    Ok(vec![2 * &s, -2 * &s, s.clone(), -s])
}

fn three_point_prime_roots(t: &BigInt) -> Result<Vec<BigInt>> {
    let s = pow3(t)?;
    Ok(vec![8 * &s, -4 * &s, 2 * &s, -s])
}

fn three_point_c_roots(t: &BigInt, d: &BigInt) -> Result<Vec<BigInt>> {
    let s = pow3(d)?;
    let k: u32 = u32::try_from(t).map_err(|_| Error::InvalidParameters("exponent out of range".into()))?;
    let two = pow2(k);
    Ok(vec![
        8 * &two * &s,
        -4 * &two * &s,
        2 * &two * &s,
        -(&two * &s),
    ])
}

fn e1(t: &BigInt, e: &[i64], _: &[BigInt]) -> Result<GenusTwoEquation> {
    let e1 = b(e[0]);
    eq(
        vec![b(0), -&e1, 64 * &e1 + 16 * t, -16 - 8 * &e1 * t, -4 * &e1 + t, b(1)],
        &[0, -1],
    )
}

fn e2(t: &BigInt, e: &[i64], _: &[BigInt]) -> Result<GenusTwoEquation> {
    let e2 = b(e[0]);
    eq(
        vec![b(0), e2.clone(), 8 * &e2 + t, 16 * &e2 + 8 * t, 16 * t, b(1)],
        &[0, 0, -1],
    )
}

fn e3(t: &BigInt, e: &[i64], _: &[BigInt]) -> Result<GenusTwoEquation> {
    let e3 = b(e[0]);
    eq(
        vec![
            -1 + 27 * &e3 - 9 * t,
            4 - 135 * &e3 + 42 * t,
            -9 + 252 * &e3 - 73 * t,
            9 - 208 * &e3 + 56 * t,
            -5 + 64 * &e3 - 16 * t,
            b(1),
        ],
        &[-1, 0, -1],
    )
}

fn e4(t: &BigInt, e: &[i64], _: &[BigInt]) -> Result<GenusTwoEquation> {
    let (e1, e2, e3) = (b(e[0]), b(e[1]), b(e[2]));
    let half = BigRational::new(b(1), b(2));
    let x3 = r(-&e1 * &e2 + &e1 * &e3 - 2 * &e1 * t) - (r(b(3)) + r(e1.clone())) * half;
    if !x3.is_integer() {
        return Err(Error::NonIntegral("thm7-E4".into()));
    }
    let p = QPoly::new(vec![
        r(b(0)),
        r(-&e1 * &e2),
        r(&e1 + 2 * &e2 - &e3 + t),
        x3,
        r(-&e1 + t),
        r(b(1)),
    ]);
    GenusTwoEquation::new(p, ZPoly::from_i64s(&[0, -1, -1]).to_rational())
}

fn sec1_i(t: &BigInt, _: &[i64], _: &[BigInt]) -> Result<GenusTwoEquation> {
    let cubic = ZPoly::new(vec![b(256), 64 * (t + 4), 64 * t, b(1)]);
    let g = &(&ZPoly::x() * &ZPoly::from_i64s(&[1, 1])) * &cubic;
    GenusTwoEquation::hyperelliptic(&g)
}

fn sec1_ii(t: &BigInt, _: &[i64], _: &[BigInt]) -> Result<GenusTwoEquation> {
    let cubic = ZPoly::new(vec![b(64), -4 * (4 * t + 5), 4 * t + 1, b(1)]);
    let g = &(&ZPoly::x() * &ZPoly::from_i64s(&[-4, 1])) * &cubic;
    GenusTwoEquation::hyperelliptic(&g)
}

fn sec8_i(t: &BigInt, _: &[i64], _: &[BigInt]) -> Result<GenusTwoEquation> {
    let quartic = ZPoly::new(vec![b(256), 16 * (4 * t + 1), b(0), b(0), b(1)]);
    GenusTwoEquation::hyperelliptic(&(&ZPoly::x() * &quartic))
}

fn sec8_ii(t: &BigInt, _: &[i64], _: &[BigInt]) -> Result<GenusTwoEquation> {
    let quartic = ZPoly::new(vec![b(-256), b(256), b(-80), 4 * t + 1, b(1)]);
    GenusTwoEquation::hyperelliptic(&(&ZPoly::x() * &quartic))
}

fn f_poly(_: &[i64]) -> ZPoly {
    ZPoly::from_i64s(&[-1051, 384, 4192, -2064, 256])
}

fn g_poly(_: &[i64]) -> ZPoly {
    ZPoly::from_i64s(&[-6343, -2064, -800, 768, 256])
}

fn h1_neg(_: &[i64]) -> ZPoly {
    -ZPoly::from_i64s(&[-65509, 432, 2592, 6912, 6912])
}

fn h2_neg(_: &[i64]) -> ZPoly {
    -ZPoly::from_i64s(&[134075, -288720, 167968, -19712, 6912])
}

fn e1_poly(e: &[i64]) -> ZPoly {
    match e[0] {
        1 => ZPoly::from_i64s(&[262117, 195456, 52960, 6128, 256]),
        _ => ZPoly::from_i64s(&[262117, -197760, 53536, -6160, 256]),
    }
}

fn e2_poly(e: &[i64]) -> ZPoly {
    match e[0] {
        1 => f_poly(e),
        _ => ZPoly::from_i64s(&[997, 384, 4000, 2032, 256]),
    }
}

fn e3_poly(e: &[i64]) -> ZPoly {
    match e[0] {
        1 => ZPoly::from_i64s(&[997, -384, 4000, -2032, 256]),
        _ => ZPoly::from_i64s(&[-1051, -384, 4192, 2064, 256]),
    }
}

fn e4_poly(e: &[i64]) -> ZPoly {
    match (e[0], e[1], e[2]) {
        (1, 1, 1) => g_poly(e),
        (1, 1, -1) => ZPoly::from_i64s(&[157, 56, 16]).pow(2),
        (1, -1, 1) => ZPoly::from_i64s(&[-8183, -336, 3040, 1792, 256]),
        (1, -1, -1) => ZPoly::from_i64s(&[-3431, 12144, 9952, 2816, 256]),
        (-1, 1, 1) => ZPoly::from_i64s(&[-7351, -4176, 6112, -2304, 256]),
        (-1, 1, -1) => ZPoly::from_i64s(&[-7463, 2160, 736, -1280, 256]),
        (-1, -1, 1) => ZPoly::from_i64s(&[133, -40, 16]).pow(2),
        _ => ZPoly::from_i64s(&[-5591, 816, -1568, -256, 256]),
    }
}

fn e4_as_f(t: &BigInt, _: &[i64], x: &[BigInt]) -> Result<GenusTwoEquation> {
    e4(t, &[1, 1, 1], x)
}

fn e2_as_e(t: &BigInt, _: &[i64], x: &[BigInt]) -> Result<GenusTwoEquation> {
    e2(t, &[1], x)
}

pub static FAMILIES: &[ParametricFamily] = &[
    ParametricFamily {
        name: "thm7-E",
        summary: "y^2 - x^2 y = x^5 + 16t x^4 + (16+8t) x^3 + (8+t) x^2 + x",
        signs: 0,
        extra: &[],
        disc_scale_log2: 0,
        odd_discriminant: true,
        min_t: None,
        named_sign: 1,
        build: e2_as_e,
        disc_poly: Some(f_poly),
        closed_disc: None,
    },
    ParametricFamily {
        name: "thm7-F",
        summary: "y^2 + (-x^2-x) y = x^5 + (t-1) x^4 + (-2-2t) x^3 + (2+t) x^2 - x",
        signs: 0,
        extra: &[],
        disc_scale_log2: 0,
        odd_discriminant: true,
        min_t: None,
        named_sign: 1,
        build: e4_as_f,
        disc_poly: Some(g_poly),
        closed_disc: None,
    },
    ParametricFamily {
        name: "thm7-E1",
        summary: "y^2 - x y = x^5 + (t-4e1) x^4 + (-16-8e1 t) x^3 + (64e1+16t) x^2 - e1 x",
        signs: 1,
        extra: &[],
        disc_scale_log2: 0,
        odd_discriminant: true,
        min_t: None,
        named_sign: 1,
        build: e1,
        disc_poly: Some(e1_poly),
        closed_disc: None,
    },
    ParametricFamily {
        name: "thm7-E2",
        summary: "y^2 - x^2 y = x^5 + 16t x^4 + (16e2+8t) x^3 + (8e2+t) x^2 + e2 x",
        signs: 1,
        extra: &[],
        disc_scale_log2: 0,
        odd_discriminant: true,
        min_t: None,
        named_sign: 1,
        build: e2,
        disc_poly: Some(e2_poly),
        closed_disc: None,
    },
    ParametricFamily {
        name: "thm7-E3",
        summary: "y^2 + (-x^2-1) y = x^5 + (-5+64e3-16t) x^4 + ... + (-1+27e3-9t)",
        signs: 1,
        extra: &[],
        disc_scale_log2: 0,
        odd_discriminant: true,
        min_t: None,
        named_sign: 1,
        build: e3,
        disc_poly: Some(e3_poly),
        closed_disc: None,
    },
    ParametricFamily {
        name: "thm7-E4",
        summary: "y^2 + (-x^2-x) y = x^5 + (t-e1) x^4 + (-3/2-e1/2-e1e2+e1e3-2e1 t) x^3 + (e1+2e2-e3+t) x^2 - e1e2 x",
        signs: 3,
        extra: &[],
        disc_scale_log2: 0,
        odd_discriminant: true,
        min_t: None,
        named_sign: 1,
        build: e4,
        disc_poly: Some(e4_poly),
        closed_disc: None,
    },
    ParametricFamily {
        name: "sec1-i",
        summary: "y^2 = x(x+1)(x^3 + 64t x^2 + 64(t+4) x + 256)",
        signs: 0,
        extra: &[],
        disc_scale_log2: 40,
        odd_discriminant: false,
        min_t: None,
        named_sign: 1,
        build: sec1_i,
        disc_poly: Some(f_poly),
        closed_disc: None,
    },
    ParametricFamily {
        name: "sec1-ii",
        summary: "y^2 = x(x-4)(x^3 + (4t+1) x^2 - 4(4t+5) x + 64)",
        signs: 0,
        extra: &[],
        disc_scale_log2: 40,
        odd_discriminant: false,
        min_t: None,
        named_sign: 1,
        build: sec1_ii,
        disc_poly: Some(g_poly),
        closed_disc: None,
    },
    ParametricFamily {
        name: "sec8-i",
        summary: "y^2 = x(x^4 + 16(4t+1) x + 256)",
        signs: 0,
        extra: &[],
        disc_scale_log2: 40,
        odd_discriminant: false,
        min_t: None,
        named_sign: -1,
        build: sec8_i,
        disc_poly: Some(h1_neg),
        closed_disc: None,
    },
    ParametricFamily {
        name: "sec8-ii",
        summary: "y^2 = x(x^4 + (4t+1) x^3 - 80 x^2 + 256 x - 256)",
        signs: 0,
        extra: &[],
        disc_scale_log2: 40,
        odd_discriminant: false,
        min_t: None,
        named_sign: -1,
        build: sec8_ii,
        disc_poly: Some(h2_neg),
        closed_disc: None,
    },
    ParametricFamily {
        name: "thm3-E",
        summary: "y^2 = x(x - 2*3^t)(x + 2*3^t)(x - 3^t)(x + 3^t)",
        signs: 0,
        extra: &[],
        disc_scale_log2: 0,
        odd_discriminant: false,
        min_t: Some(0),
        named_sign: 1,
        build: |t, _, _| x_roots(&three_point_roots(t)?),
        disc_poly: None,
        closed_disc: Some(|t, _, _| roots_disc(&three_point_roots(t).expect("checked"))),
    },
    ParametricFamily {
        name: "thm3-Cprime",
        summary: "y^2 = x(x - 8*3^t)(x + 4*3^t)(x - 2*3^t)(x + 3^t)",
        signs: 0,
        extra: &[],
        disc_scale_log2: 0,
        odd_discriminant: false,
        min_t: Some(0),
        named_sign: 1,
        build: |t, _, _| x_roots(&three_point_prime_roots(t)?),
        disc_poly: None,
        closed_disc: Some(|t, _, _| roots_disc(&three_point_prime_roots(t).expect("checked"))),
    },
    ParametricFamily {
        name: "thm3-C",
        summary: "y^2 = x(x - 2^(t+3) 3^d)(x + 2^(t+2) 3^d)(x - 2^(t+1) 3^d)(x + 2^t 3^d)",
        signs: 0,
        extra: &["d"],
        disc_scale_log2: 0,
        odd_discriminant: false,
        min_t: Some(0),
        named_sign: 1,
        build: |t, _, x| x_roots(&three_point_c_roots(t, &x[0])?),
        disc_poly: None,
        closed_disc: Some(|t, _, x| roots_disc(&three_point_c_roots(t, &x[0]).expect("checked"))),
    },
];

pub fn lookup(name: &str) -> Result<&'static ParametricFamily> {
    FAMILIES
        .iter()
        .find(|f| f.name == name)
        .ok_or_else(|| Error::UnknownFamily(name.to_string()))
}

/// Sign vectors in lexicographic order with `+1` first.
pub fn sign_vectors(k: usize) -> Vec<Vec<i64>> {
    (0..1usize << k)
        .map(|m| (0..k).map(|i| if m >> (k - 1 - i) & 1 == 0 { 1 } else { -1 }).collect())
        .collect()
}

impl ParametricFamily {
    fn check(&self, t: &BigInt, eps: &[i64], extra: &[BigInt]) -> Result<()> {
        if eps.len() != self.signs || eps.iter().any(|e| e.abs() != 1) {
            return Err(Error::InvalidParameters(format!(
                "`{}` takes {} sign(s) in {{1, -1}}",
                self.name, self.signs
            )));
        }
        if extra.len() != self.extra.len() {
            return Err(Error::InvalidParameters(format!(
                "`{}` takes extra parameters {:?}",
                self.name, self.extra
            )));
        }
        if let Some(lo) = self.min_t {
            if *t < BigInt::from(lo) || extra.iter().any(|x| x.is_negative()) {
                return Err(Error::InvalidParameters(format!(
                    "`{}` needs t >= {lo} and non-negative extra parameters",
                    self.name
                )));
            }
        }
        Ok(())
    }

    pub fn instantiate(&self, t: &BigInt, eps: &[i64], extra: &[BigInt]) -> Result<GenusTwoEquation> {
        self.check(t, eps, extra)?;
        let e = (self.build)(t, eps, extra)?;
        if !e.is_integral() {
            return Err(Error::NonIntegral(self.name.into()));
        }
        Ok(e)
    }

    /// `D(t)` for polynomial families.
    pub fn disc_poly(&self, eps: &[i64]) -> Option<ZPoly> {
        self.disc_poly.map(|f| f(eps))
    }

    pub fn disc_scale(&self) -> BigInt {
        pow2(self.disc_scale_log2)
    }

    /// `D(t)`, from the polynomial or the closed form.
    pub fn reduced_disc(&self, t: &BigInt, eps: &[i64], extra: &[BigInt]) -> Result<BigInt> {
        self.check(t, eps, extra)?;
        if let Some(p) = self.disc_poly {
            return Ok(p(eps).eval(t));
        }
        let f = self.closed_disc.expect("every family has a discriminant formula");
        Ok(f(t, eps, extra))
    }

    /// The discriminant predicted by the registry, `2^scale * D(t)`.
    pub fn expected_discriminant(&self, t: &BigInt, eps: &[i64], extra: &[BigInt]) -> Result<BigInt> {
        Ok(self.disc_scale() * self.reduced_disc(t, eps, extra)?)
    }
}

pub fn instantiate(name: &str, t: &BigInt, eps: &[i64], extra: &[BigInt]) -> Result<GenusTwoEquation> {
    lookup(name)?.instantiate(t, eps, extra)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spot_values() {
        let e = instantiate("thm7-E", &b(3), &[], &[]).unwrap();
        assert_eq!(e.integral_discriminant().unwrap(), b(2837));
        let e = instantiate("sec8-i", &b(2), &[], &[]).unwrap();
        assert_eq!(e.integral_discriminant().unwrap(), pow2(40) * b(-111611));
        let e = instantiate("thm7-E4", &b(1), &[1, 1, -1], &[]).unwrap();
        assert_eq!(e.integral_discriminant().unwrap(), b(229 * 229));
        let e = instantiate("sec8-ii", &b(1), &[], &[]).unwrap();
        assert_eq!(e.integral_discriminant().unwrap(), pow2(40) * b(-523));
    }

    #[test]
    fn every_registered_family_matches_its_formula() {
        for fam in FAMILIES {
            let extras: Vec<Vec<BigInt>> = if fam.extra.is_empty() {
                vec![vec![]]
            } else {
                vec![vec![b(0)], vec![b(1)]]
            };
            let ts: Vec<i64> = if fam.min_t.is_some() { vec![0, 1, 2] } else { vec![-3, 0, 5] };
            for eps in sign_vectors(fam.signs) {
                for x in &extras {
                    for &t in &ts {
                        let e = fam.instantiate(&b(t), &eps, x).unwrap();
                        assert_eq!(
                            e.integral_discriminant().unwrap(),
                            fam.expected_discriminant(&b(t), &eps, x).unwrap(),
                            "{} t={t} eps={eps:?}",
                            fam.name
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn parameter_errors() {
        assert!(matches!(instantiate("nope", &b(0), &[], &[]), Err(Error::UnknownFamily(_))));
        assert!(instantiate("thm7-E4", &b(0), &[1, 1], &[]).is_err());
        assert!(instantiate("thm7-E1", &b(0), &[2], &[]).is_err());
        assert!(instantiate("thm3-E", &b(-1), &[], &[]).is_err());
        assert!(instantiate("thm3-C", &b(1), &[], &[]).is_err());
    }

    #[test]
    fn sign_vector_order() {
        assert_eq!(sign_vectors(2), vec![vec![1, 1], vec![1, -1], vec![-1, 1], vec![-1, -1]]);
        assert_eq!(sign_vectors(0), vec![Vec::<i64>::new()]);
    }
}
