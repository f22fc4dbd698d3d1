//! Primality: Miller–Rabin with a fixed base set below 3.3e24, Baillie–PSW above.

use std::sync::LazyLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::exactmath::is_perfect_square;

/// The first thirteen primes make Miller–Rabin exact below this bound.
static MR_BOUND: LazyLock<BigInt> =
    LazyLock::new(|| "3317044064679887385961981".parse().unwrap());

const MR_BASES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Certainty {
    Deterministic,
    Probable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub prime: bool,
    pub certainty: Certainty,
}

pub fn is_prime(n: &BigInt) -> bool {
    primality(n).prime
}

/// Primality of `n`; composites are always certain, primes above the bound are "probable".
pub fn primality(n: &BigInt) -> Verdict {
    let det = |prime| Verdict {
        prime,
        certainty: Certainty::Deterministic,
    };
    if n < &BigInt::from(2) {
        return det(false);
    }
    for p in MR_BASES {
        let p = BigInt::from(p);
        if *n == p {
            return det(true);
        }
        if (n % &p).is_zero() {
            return det(false);
        }
    }
    if *n < *MR_BOUND {
        return det(MR_BASES.iter().all(|&a| miller_rabin_round(n, &BigInt::from(a))));
    }
    if bpsw(n) {
        Verdict {
            prime: true,
            certainty: Certainty::Probable,
        }
    } else {
        det(false)
    }
}

/// One strong-probable-prime test of odd `n > 2` to base `a`.
pub fn miller_rabin_round(n: &BigInt, a: &BigInt) -> bool {
    let one = BigInt::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s as usize;
    let a = a.mod_floor(n);
    if a.is_zero() {
        return true;
    }
    let mut x = a.modpow(&d, n);
    if x == one || x == nm1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == nm1 {
            return true;
        }
        if x == one {
            return false;
        }
    }
    false
}

/// Jacobi symbol `(a/n)` for odd positive `n`.
pub fn jacobi(a: &BigInt, n: &BigInt) -> i32 {
    let mut a = a.mod_floor(n);
    let mut n = n.clone();
    let mut t = 1;
    let three = BigInt::from(3);
    let five = BigInt::from(5);
    let eight = BigInt::from(8);
    while !a.is_zero() {
        while a.is_even() {
            a >>= 1usize;
            let r = &n % &eight;
            if r == three || r == five {
                t = -t;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if (&a % 4u32) == three && (&n % 4u32) == three {
            t = -t;
        }
        a = a.mod_floor(&n);
    }
    if n.is_one() {
        t
    } else {
        0
    }
}

fn half_mod(x: BigInt, n: &BigInt) -> BigInt {
    let x: BigInt = if x.is_odd() { x + n } else { x };
    (x >> 1usize).mod_floor(n)
}

/// Strong Lucas probable-prime test with Selfridge's parameters.
pub fn strong_lucas(n: &BigInt) -> bool {
    if is_perfect_square(n) {
        return false;
    }
    let mut d = BigInt::from(5);
    loop {
        let j = jacobi(&d, n);
        if j == -1 {
            break;
        }
        if j == 0 && d.abs() != *n {
            return false;
        }
        d = if d.is_positive() { -(&d + 2u32) } else { -(&d - 2u32) };
    }
    let p = BigInt::one();
    let q: BigInt = (BigInt::one() - &d) / 4u32;

    let np1: BigInt = n + 1;
    let s = np1.trailing_zeros().unwrap_or(0);
    let k = &np1 >> s as usize;

    let mut u = BigInt::one();
    let mut v = p.clone();
    let mut qk = q.mod_floor(n);
    let bits = k.bits();
    for i in (0..bits - 1).rev() {
        u = (&u * &v).mod_floor(n);
        v = (&v * &v - &qk * 2u32).mod_floor(n);
        qk = (&qk * &qk).mod_floor(n);
        if k.bit(i) {
            let u2 = half_mod(&p * &u + &v, n);
            let v2 = half_mod(&d * &u + &p * &v, n);
            u = u2;
            v = v2;
            qk = (&qk * &q).mod_floor(n);
        }
    }
    if u.is_zero() || v.is_zero() {
        return true;
    }
    for _ in 1..s {
        v = (&v * &v - &qk * 2u32).mod_floor(n);
        if v.is_zero() {
            return true;
        }
        qk = (&qk * &qk).mod_floor(n);
    }
    false
}

/// Baillie–PSW: base-2 strong test plus strong Lucas test.
pub fn bpsw(n: &BigInt) -> bool {
    if n < &BigInt::from(2) {
        return false;
    }
    if n.is_even() {
        return *n == BigInt::from(2);
    }
    miller_rabin_round(n, &BigInt::from(2)) && strong_lucas(n)
}
