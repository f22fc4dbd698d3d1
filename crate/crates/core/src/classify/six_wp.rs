//! Curves `y^2 = c x (x-b1)(x-b2)(x-b3)(x-b4)` whose discriminant is supported on
//! `{2, p}`: the six Weierstrass points `∞, 0, b_i` must have pairwise differences
//! that are `{2, p}`-units.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::exactmath::{is_rational_square, mobius_transform, v_p, QPoly, ZPoly};
use crate::families::is_prime;
use crate::igusa::{absolute_invariants, AbsoluteInvariants, IgusaInvariants};
use crate::weierstrass::{EquationJson, GenusTwoEquation};

/// A model `y^2 = twist * x * prod (x - roots[i])`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SixWpModel {
    #[serde(with = "crate::serial::int_string")]
    pub twist: BigInt,
    pub roots: Vec<String>,
    pub equation: EquationJson,
    #[serde(with = "crate::serial::int_string")]
    pub discriminant: BigInt,
    pub two_valuation: u32,
    pub p_valuation: u32,
}

/// The matrix `(a, b, c, d)` and scalar `λ` with `(cx+d)^6 F1((ax+b)/(cx+d)) = λ F2(x)`,
/// `λ` a rational square.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsomorphismCertificate {
    pub matrix: [String; 4],
    pub scale: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SixWpRationalClass {
    pub representative: SixWpModel,
    /// Other models in the class, each with its certificate against the representative.
    pub members: Vec<(SixWpModel, IsomorphismCertificate)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SixWpGeometricClass {
    pub invariants: AbsoluteInvariants,
    /// Root quadruples, before twist reduction, landing in this class.
    pub quadruples: usize,
    pub rational_classes: Vec<SixWpRationalClass>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SixWpReport {
    pub p: u64,
    pub exp_bound: u32,
    /// Size of the root alphabet `±2^c p^d`.
    pub alphabet: usize,
    pub quadruples: usize,
    pub classes: Vec<SixWpGeometricClass>,
}

impl SixWpReport {
    pub fn rational_class_count(&self) -> usize {
        self.classes.iter().map(|c| c.rational_classes.len()).sum()
    }

    /// Discriminants of the rational-class representatives.
    pub fn discriminants(&self) -> Vec<BigInt> {
        self.classes
            .iter()
            .flat_map(|c| c.rational_classes.iter().map(|r| r.representative.discriminant.clone()))
            .collect()
    }
}

fn strip(mut n: i128, p: i128) -> i128 {
    n = n.abs();
    n >>= n.trailing_zeros();
    while n % p == 0 {
        n /= p;
    }
    n
}

fn is_s_unit(n: i128, p: i128) -> bool {
    n != 0 && strip(n, p) == 1
}

/// Squared-difference discriminant `2^8 prod b_i^2 prod (b_i - b_j)^2` of the untwisted model.
fn roots_discriminant(b: &[BigInt; 4]) -> BigInt {
    GenusTwoEquation::from_roots_quintic([&b[0], &b[1], &b[2], &b[3]]).closed_form
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Model {
    twist: BigInt,
    roots: [BigInt; 4],
}

impl Model {
    fn sextic(&self) -> ZPoly {
        let g = self
            .roots
            .iter()
            .fold(ZPoly::x(), |acc, r| &acc * &ZPoly::linear_root(r.clone()));
        g.scale(&self.twist)
    }

    fn equation(&self) -> GenusTwoEquation {
        GenusTwoEquation::hyperelliptic(&self.sextic()).expect("degree 5")
    }

    fn discriminant(&self) -> BigInt {
        num_traits::pow(self.twist.clone(), 10) * roots_discriminant(&self.roots)
    }

    /// Ordering key: smallest `|Δ|`, then smallest roots.
    fn key(&self) -> (BigInt, BigInt, BigInt, [BigInt; 4]) {
        let l1: BigInt = self.roots.iter().map(|r| r.abs()).sum();
        (self.discriminant().abs(), l1, self.twist.clone(), self.roots.clone())
    }

    fn report(&self, p: u64) -> SixWpModel {
        let d = self.discriminant();
        SixWpModel {
            twist: self.twist.clone(),
            roots: self.roots.iter().map(|r| r.to_string()).collect(),
            equation: self.equation().to_json(),
            two_valuation: v_p(&d, 2).expect("smooth"),
            p_valuation: v_p(&d, p).expect("smooth"),
            discriminant: d,
        }
    }
}

/// Pulls common factors of 2 and `p` out of the roots into the twist, then reduces the
/// twist modulo squares.
fn reduce(roots: [i128; 4], p: i128) -> Model {
    let mut r = roots;
    let mut c: i128 = 1;
    for q in [2, p] {
        while r.iter().all(|x| x % q == 0) {
            r = r.map(|x| x / q);
            c *= q;
        }
        while c % (q * q) == 0 {
            c /= q * q;
        }
    }
    r.sort();
    Model {
        twist: c.into(),
        roots: r.map(BigInt::from),
    }
}

type Point = Option<BigRational>;

fn rat(n: &BigInt) -> BigRational {
    BigRational::from_integer(n.clone())
}

/// Projective matrix sending `0, ∞, 1` to `z1, z2, z3`.
fn from_three(z: [&Point; 3]) -> [BigRational; 4] {
    let vec = |p: &Point| match p {
        None => (BigRational::one(), BigRational::zero()),
        Some(x) => (x.clone(), BigRational::one()),
    };
    let (v1, v2, v3) = (vec(z[0]), vec(z[1]), vec(z[2]));
    let det = &v2.0 * &v1.1 - &v1.0 * &v2.1;
    let al = (&v3.0 * &v1.1 - &v1.0 * &v3.1) / &det;
    let be = (&v2.0 * &v3.1 - &v3.0 * &v2.1) / &det;
    [&al * &v2.0, &be * &v1.0, &al * &v2.1, &be * &v1.1]
}

fn mat_mul(m: &[BigRational; 4], n: &[BigRational; 4]) -> [BigRational; 4] {
    [
        &m[0] * &n[0] + &m[1] * &n[2],
        &m[0] * &n[1] + &m[1] * &n[3],
        &m[2] * &n[0] + &m[3] * &n[2],
        &m[2] * &n[1] + &m[3] * &n[3],
    ]
}

fn adjugate(m: &[BigRational; 4]) -> [BigRational; 4] {
    [m[3].clone(), -m[1].clone(), -m[2].clone(), m[0].clone()]
}

fn integral_matrix(m: &[BigRational; 4]) -> [BigInt; 4] {
    use num_integer::Integer;
    let l = m.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    m.clone().map(|x| (x * rat(&l)).to_integer())
}

fn apply(m: &[BigInt; 4], z: &Point) -> Point {
    let [a, b, c, d] = m;
    match z {
        None => (!c.is_zero()).then(|| BigRational::new(a.clone(), c.clone())),
        Some(x) => {
            let den = rat(c) * x + rat(d);
            (!den.is_zero()).then(|| (rat(a) * x + rat(b)) / den)
        }
    }
}

fn points(m: &Model) -> Vec<Point> {
    let mut v: Vec<Point> = vec![None, Some(BigRational::zero())];
    v.extend(m.roots.iter().map(|r| Some(rat(r))));
    v
}

/// An explicit rational isomorphism from `m2` to `m1`, if one exists.
fn rational_isomorphism(m1: &Model, m2: &Model) -> Option<IsomorphismCertificate> {
    let a = points(m1);
    let mut a_sorted = a.clone();
    a_sorted.sort();
    let b = points(m2);
    let nb = adjugate(&from_three([&b[0], &b[1], &b[2]]));
    let f1: QPoly = m1.sextic().to_rational();
    let f2: QPoly = m2.sextic().to_rational();
    for i in 0..6 {
        for j in 0..6 {
            for k in 0..6 {
                if i == j || j == k || i == k {
                    continue;
                }
                let m = integral_matrix(&mat_mul(&from_three([&a[i], &a[j], &a[k]]), &nb));
                let mut image: Vec<Point> = b.iter().map(|z| apply(&m, z)).collect();
                image.sort();
                if image != a_sorted {
                    continue;
                }
                let g = mobius_transform(&f1, 6, &m[0], &m[1], &m[2], &m[3]).ok()?;
                let lambda = g.leading()? / f2.leading()?;
                if g == f2.scale(&lambda) && is_rational_square(&lambda) {
                    return Some(IsomorphismCertificate {
                        matrix: m.map(|x| x.to_string()),
                        scale: crate::serial::rat_to_string(&lambda),
                    });
                }
            }
        }
    }
    None
}

/// All models with six rational Weierstrass points and `|Δ| = 2^a p^b`, `b >= 1`, whose
/// roots are `±2^c p^d` with `c, d <= exp_bound`, grouped into geometric classes and,
/// within those, rational classes.
pub fn classify_six_wp(p: u64, exp_bound: u32) -> Result<SixWpReport> {
    if p % 2 == 0 || !is_prime(&BigInt::from(p)) {
        return Err(domain("p must be an odd prime"));
    }
    let pi = p as i128;
    pi
        .checked_pow(exp_bound)
        .and_then(|x| x.checked_mul(1i128 << exp_bound))
        .filter(|x| *x < i128::MAX / 4)
        .ok_or_else(|| Error::InvalidParameters("exponent bound too large for p".into()))?;
    let mut alphabet = Vec::new();
    for c in 0..=exp_bound {
        for d in 0..=exp_bound {
            let v = (1i128 << c) * pi.pow(d);
            alphabet.push(v);
            alphabet.push(-v);
        }
    }
    alphabet.sort();
    let n = alphabet.len();
    let adj: Vec<Vec<usize>> = (0..n)
        .into_par_iter()
        .map(|i| {
            (i + 1..n)
                .filter(|&j| is_s_unit(alphabet[j] - alphabet[i], pi))
                .collect()
        })
        .collect();
    let linked = |i: usize, j: usize| adj[i].binary_search(&j).is_ok();
    let mut quads = Vec::new();
    for i in 0..n {
        for (x, &j) in adj[i].iter().enumerate() {
            for (y, &k) in adj[i][x + 1..].iter().enumerate() {
                if !linked(j, k) {
                    continue;
                }
                for &l in &adj[i][x + 1 + y + 1..] {
                    if linked(j, l) && linked(k, l) {
                        quads.push([alphabet[i], alphabet[j], alphabet[k], alphabet[l]]);
                    }
                }
            }
        }
    }

    let mut by_model: BTreeMap<Model, usize> = BTreeMap::new();
    for q in &quads {
        *by_model.entry(reduce(*q, pi)).or_default() += 1;
    }
    let models: Vec<(Model, usize)> = by_model
        .into_iter()
        .filter(|(m, _)| v_p(&m.discriminant(), p).is_ok_and(|v| v >= 1))
        .collect();
    let invs: Vec<AbsoluteInvariants> = models
        .par_iter()
        .map(|(m, _)| absolute_invariants(&IgusaInvariants::of(&m.equation())?))
        .collect::<Result<_>>()?;

    let mut groups: Vec<(AbsoluteInvariants, usize, Vec<Model>)> = Vec::new();
    for ((m, count), inv) in models.into_iter().zip(invs) {
        match groups.iter_mut().find(|g| g.0 == inv) {
            Some(g) => {
                g.1 += count;
                g.2.push(m);
            }
            None => groups.push((inv, count, vec![m])),
        }
    }
    let mut classes: Vec<SixWpGeometricClass> = groups
        .into_par_iter()
        .map(|(invariants, quadruples, mut ms)| {
            ms.sort_by_key(|m| m.key());
            let mut rc: Vec<(Model, Vec<(Model, IsomorphismCertificate)>)> = Vec::new();
            for m in ms {
                let hit = rc
                    .iter()
                    .position(|(rep, _)| rational_isomorphism(rep, &m).is_some());
                match hit {
                    Some(i) => {
                        let cert = rational_isomorphism(&rc[i].0, &m).expect("found above");
                        rc[i].1.push((m, cert));
                    }
                    None => rc.push((m, Vec::new())),
                }
            }
            SixWpGeometricClass {
                invariants,
                quadruples,
                rational_classes: rc
                    .into_iter()
                    .map(|(rep, members)| SixWpRationalClass {
                        representative: rep.report(p),
                        members: members.into_iter().map(|(m, c)| (m.report(p), c)).collect(),
                    })
                    .collect(),
            }
        })
        .collect();
    classes.sort_by(|a, b| {
        let k = |c: &SixWpGeometricClass| c.rational_classes[0].representative.discriminant.abs();
        k(a).cmp(&k(b))
    });
    Ok(SixWpReport {
        p,
        exp_bound,
        alphabet: n,
        quadruples: quads.len(),
        classes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::pow2;

    fn m(c: i64, r: [i64; 4]) -> Model {
        Model {
            twist: c.into(),
            roots: r.map(BigInt::from),
        }
    }

    #[test]
    fn reduction_moves_common_factors_into_the_twist() {
        assert_eq!(reduce([-6, -3, 3, 6], 3), m(3, [-2, -1, 1, 2]));
        assert_eq!(reduce([-4, -2, 2, 4], 3), m(2, [-2, -1, 1, 2]));
        assert_eq!(reduce([-36, -18, 18, 36], 3), m(2, [-2, -1, 1, 2]));
        assert_eq!(reduce([-48, -24, 24, 48], 3), m(6, [-2, -1, 1, 2]));
    }

    #[test]
    fn certificates_are_isomorphisms() {
        let a = m(1, [-2, -1, 1, 2]);
        let b = m(1, [-1, 1, 2, 3]);
        let cert = rational_isomorphism(&a, &b).expect("translate by one");
        let mx: Vec<BigInt> = cert.matrix.iter().map(|s| s.parse().unwrap()).collect();
        let g = mobius_transform(&a.sextic().to_rational(), 6, &mx[0], &mx[1], &mx[2], &mx[3]).unwrap();
        let lambda = crate::serial::parse_rat(&cert.scale).unwrap();
        assert_eq!(g, b.sextic().to_rational().scale(&lambda));
        // a nontrivial twist is not rationally isomorphic
        assert!(rational_isomorphism(&a, &m(3, [-2, -1, 1, 2])).is_none());
    }

    #[test]
    fn p3_small_bound() {
        let r = classify_six_wp(3, 4).unwrap();
        assert_eq!(r.classes.len(), 2);
        let first = &r.classes[0].rational_classes[0].representative;
        assert_eq!(first.discriminant, pow2(18) * 81);
        assert_eq!(first.roots, ["-2", "-1", "1", "2"]);
        assert!(r.discriminants().contains(&(pow2(18) * num_traits::pow(BigInt::from(3), 14))));
    }

    #[test]
    fn even_p_rejected() {
        assert!(classify_six_wp(2, 4).is_err());
        assert!(classify_six_wp(9, 4).is_err());
    }
}
