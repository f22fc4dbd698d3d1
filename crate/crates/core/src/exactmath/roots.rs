//! Rational roots via Sturm-sequence isolation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{QPoly, ZPoly};

fn sturm_chain(f: &QPoly) -> Vec<QPoly> {
    let mut chain = vec![f.clone(), f.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(-r);
    }
    chain
}

fn sign_changes(chain: &[QPoly], x: &BigRational) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for p in chain {
        let v = p.eval(x);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Distinct integer roots of a nonzero integer polynomial, ascending.
pub fn integer_roots(f: &ZPoly) -> Vec<BigInt> {
    let Some(deg) = f.degree() else {
        return vec![];
    };
    if deg == 0 {
        return vec![];
    }
    let sf = f.to_rational().squarefree_part();
    let chain = sturm_chain(&sf);
    let fz = sf.clear_denominators().0;

    // Cauchy bound
    let lc = fz.leading().unwrap().abs();
    let mut bound = BigInt::zero();
    for c in &fz.coeffs()[..fz.coeffs().len() - 1] {
        let q = c.abs() / &lc + 1;
        if q > bound {
            bound = q;
        }
    }
    let bound: BigInt = bound + 1;

    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        // roots in (lo, hi]
        let vlo = sign_changes(&chain, &BigRational::from_integer(lo.clone()));
        let vhi = sign_changes(&chain, &BigRational::from_integer(hi.clone()));
        if vlo <= vhi {
            continue;
        }
        if &hi - &lo == BigInt::one() {
            if fz.eval(&hi).is_zero() {
                out.push(hi);
            }
            continue;
        }
        let mid: BigInt = (&lo + &hi) >> 1;
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    out.sort();
    out
}

/// Distinct rational roots, ascending.
pub fn rational_roots(f: &QPoly) -> Vec<BigRational> {
    let Some(n) = f.degree() else {
        return vec![];
    };
    if n == 0 {
        return vec![];
    }
    let g = f.clear_denominators().0.primitive_part();
    let a = g.leading().unwrap().clone();
    // monic h(x) = a^(n-1) g(x/a); roots of g are roots of h divided by a
    let h = ZPoly::new(
        g.coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if i == n {
                    BigInt::one()
                } else {
                    c * num_traits::pow(a.clone(), n - 1 - i)
                }
            })
            .collect(),
    );
    let mut roots: Vec<BigRational> = integer_roots(&h)
        .into_iter()
        .map(|r| BigRational::new(r, a.clone()))
        .collect();
    roots.sort();
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(cs: &[i64]) -> ZPoly {
        ZPoly::from_i64s(cs)
    }

    #[test]
    fn integer_roots_of_products() {
        let f = &(&z(&[-3, 1]) * &z(&[5, 1])) * &z(&[1, 0, 1]);
        assert_eq!(integer_roots(&f), vec![BigInt::from(-5), BigInt::from(3)]);
        let g = &z(&[0, 1]).pow(3) * &z(&[-7, 1]);
        assert_eq!(integer_roots(&g), vec![BigInt::from(0), BigInt::from(7)]);
        assert!(integer_roots(&z(&[-2, 0, 1])).is_empty());
    }

    #[test]
    fn rational_roots_with_denominators() {
        // (2x - 1)(4x + 3)(x^2 + 1)
        let f = &(&z(&[-1, 2]) * &z(&[3, 4])) * &z(&[1, 0, 1]);
        let roots = rational_roots(&f.to_rational());
        assert_eq!(
            roots,
            vec![
                BigRational::new((-3).into(), 4.into()),
                BigRational::new(1.into(), 2.into())
            ]
        );
    }

    #[test]
    fn large_roots() {
        let r: BigInt = num_traits::pow(BigInt::from(10), 15) + 7;
        let f = &ZPoly::linear_root(r.clone()) * &z(&[1, 1, 1]);
        assert_eq!(integer_roots(&f), vec![r]);
    }
}
