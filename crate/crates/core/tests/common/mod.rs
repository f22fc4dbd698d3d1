//! Independent oracles: a Sylvester-determinant discriminant and the root-product
//! formulas for the Igusa–Clebsch invariants. Neither shares code with the library
//! beyond the big-number types.
#![allow(dead_code)]

use g2disc_core::{BigInt, BigRational, GenusTwoEquation};
use num_traits::{One, Signed, Zero};

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn qi(n: &BigInt) -> BigRational {
    BigRational::from_integer(n.clone())
}

/// Determinant by fraction-free Bareiss elimination.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Sylvester matrix of `f` and `g` (coefficients from `x^0` upward, both nonzero
/// leading coefficients).
pub fn sylvester(f: &[BigInt], g: &[BigInt]) -> Vec<Vec<BigInt>> {
    let (m, n) = (f.len() - 1, g.len() - 1);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![BigInt::zero(); size];
        for (j, c) in f.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![BigInt::zero(); size];
        for (j, c) in g.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    rows
}

fn trim(f: &[BigInt]) -> Vec<BigInt> {
    let mut v = f.to_vec();
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

/// The classical discriminant of `f` of exact degree `n >= 1`.
pub fn classical_disc(f: &[BigInt]) -> BigInt {
    let f = trim(f);
    let n = f.len() - 1;
    if n == 1 {
        return BigInt::one();
    }
    let df: Vec<BigInt> = f.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect();
    let res = bareiss_det(sylvester(&f, &df));
    let sign = if (n * (n - 1) / 2) % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    sign * res / &f[n]
}

/// The discriminant of `f` taken as a form of degree 6.
pub fn sextic_disc(f: &[BigInt]) -> BigInt {
    let f = trim(f);
    match f.len().saturating_sub(1) {
        6 => classical_disc(&f),
        5 => &f[5] * &f[5] * classical_disc(&f),
        _ => BigInt::zero(),
    }
}

/// `4P + Q^2` for integer coefficient lists.
pub fn sextic_of(p: &[i64], q: &[i64]) -> Vec<BigInt> {
    let mut f = vec![BigInt::zero(); 7];
    for (i, c) in p.iter().enumerate() {
        f[i] += BigInt::from(4 * c);
    }
    for (i, a) in q.iter().enumerate() {
        for (j, b) in q.iter().enumerate() {
            f[i + j] += BigInt::from(a * b);
        }
    }
    f
}

/// `2^-12 disc_6(4P + Q^2)` by the Sylvester determinant.
pub fn oracle_discriminant(p: &[i64], qq: &[i64]) -> BigRational {
    BigRational::new(sextic_disc(&sextic_of(p, qq)), BigInt::from(4096))
}

fn pairings(s: &[usize]) -> Vec<Vec<(usize, usize)>> {
    if s.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for k in 1..s.len() {
        let rest: Vec<usize> = s[1..].iter().copied().filter(|&x| x != s[k]).collect();
        for mut p in pairings(&rest) {
            p.insert(0, (s[0], s[k]));
            out.push(p);
        }
    }
    out
}

fn permutations(v: &[usize]) -> Vec<Vec<usize>> {
    if v.len() <= 1 {
        return vec![v.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..v.len() {
        let mut rest = v.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// `(I2, I4, I6, I10)` of `a0 * prod (x - r_i)` over six roots.
pub fn root_igusa_clebsch(a0: &BigRational, r: &[BigRational; 6]) -> [BigRational; 4] {
    let d2 = |i: usize, j: usize| {
        let x = &r[i] - &r[j];
        &x * &x
    };
    let idx: Vec<usize> = (0..6).collect();
    let mut i2 = BigRational::zero();
    for p in pairings(&idx) {
        i2 += p.iter().fold(BigRational::one(), |acc, &(i, j)| acc * d2(i, j));
    }
    let tri = |s: &[usize]| d2(s[0], s[1]) * d2(s[1], s[2]) * d2(s[2], s[0]);
    let (mut i4, mut i6) = (BigRational::zero(), BigRational::zero());
    for a in 1..6 {
        for b in a + 1..6 {
            let t = [0, a, b];
            let u: Vec<usize> = (0..6).filter(|x| !t.contains(x)).collect();
            let base = tri(&t) * tri(&u);
            i4 += &base;
            for perm in permutations(&u) {
                i6 += &base * (0..3).fold(BigRational::one(), |acc, k| acc * d2(t[k], perm[k]));
            }
        }
    }
    let mut i10 = BigRational::one();
    for i in 0..6 {
        for j in i + 1..6 {
            i10 *= d2(i, j);
        }
    }
    let p = |k: usize| num_traits::pow(a0.clone(), k);
    [i2 * p(2), i4 * p(4), i6 * p(6), i10 * p(10)]
}

/// `[J2, J4, J6, J8, J10]` from `(I2, I4, I6, I10)`.
pub fn j_from_i(i: &[BigRational; 4]) -> [BigRational; 5] {
    let j2 = &i[0] / q(8);
    let j4 = (q(4) * &j2 * &j2 - &i[1]) / q(96);
    let j6 = (q(8) * &j2 * &j2 * &j2 - q(160) * &j2 * &j4 - &i[2]) / q(576);
    let j8 = (&j2 * &j6 - &j4 * &j4) / q(4);
    let j10 = &i[3] / q(4096);
    [j2, j4, j6, j8, j10]
}

/// Invariants of `y^2 = a * prod (x - r_i)` with five finite roots: the substitution
/// `x -> s + 1/x` (determinant -1, which even weights do not see) turns the sextic
/// into `a x prod ((s - r_i) x + 1)`, whose six roots are finite.
pub fn root_j_quintic(a: i64, roots: &[i64; 5], s: i64) -> [BigRational; 5] {
    let a0 = roots.iter().fold(q(4 * a), |acc, r| acc * q(s - r));
    let mut rs: Vec<BigRational> = vec![BigRational::zero()];
    for r in roots {
        rs.push(-BigRational::new(BigInt::one(), BigInt::from(s - r)));
    }
    let rs: [BigRational; 6] = rs.try_into().expect("six roots");
    j_from_i(&root_igusa_clebsch(&a0, &rs))
}

/// Invariants of `y^2 = a * prod (x - r_i)` with six roots.
pub fn root_j_sextic(a: i64, roots: &[i64; 6]) -> [BigRational; 5] {
    let rs = roots.map(q);
    j_from_i(&root_igusa_clebsch(&q(4 * a), &rs))
}

pub fn poly_from_roots(a: i64, roots: &[i64]) -> Vec<i64> {
    let mut c = vec![a];
    for r in roots {
        let mut next = vec![0; c.len() + 1];
        for (i, x) in c.iter().enumerate() {
            next[i + 1] += x;
            next[i] -= r * x;
        }
        c = next;
    }
    c
}

pub fn curve(p: &[i64], qq: &[i64]) -> GenusTwoEquation {
    GenusTwoEquation::from_i64s(p, qq).expect("valid degrees")
}

pub fn distinct(v: &[i64]) -> bool {
    (0..v.len()).all(|i| (i + 1..v.len()).all(|j| v[i] != v[j]))
}

pub fn abs(x: &BigInt) -> BigInt {
    x.abs()
}

/// `2^-12 disc_6(4P + Q^2)` for rational coefficients, by clearing denominators
/// (`disc_6(D f) = D^10 disc_6(f)`).
pub fn oracle_discriminant_of(e: &GenusTwoEquation) -> BigRational {
    let (p, qq) = (e.p().coeffs(), e.q().coeffs());
    let mut f = vec![BigRational::zero(); 7];
    for (i, c) in p.iter().enumerate() {
        f[i] += q(4) * c;
    }
    for (i, a) in qq.iter().enumerate() {
        for (j, b) in qq.iter().enumerate() {
            f[i + j] += a * b;
        }
    }
    let den = f.iter().fold(BigInt::one(), |acc, c| num_integer::Integer::lcm(&acc, c.denom()));
    let fz: Vec<BigInt> = f.iter().map(|c| (c * qi(&den)).to_integer()).collect();
    BigRational::new(sextic_disc(&fz), BigInt::from(4096) * num_traits::pow(den, 10))
}
