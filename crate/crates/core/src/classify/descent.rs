//! 2-adic descent tests for integral models `y^2 = G(x)` with `G` monic of degree 5
//! and `Δ(G) = 2^40 * odd`.
//!
//! A model with odd discriminant `y^2 + Q y = P` becomes such a `G` under
//! `u = 4x - 4x0`, `v = 32y + 16Q`. The full test asks whether some integral `G`-model
//! comes back down that way; the half test asks whether one of the two square roots of
//! that step exists, which is what a minimal discriminant `2^20 * odd` looks like.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::exactmath::ZPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Descent {
    /// An integral model with odd discriminant exists.
    Full,
    /// `G(x+s) ≡ h(x)^2 (mod 4)`: `y -> 2y + h` halves the 2-part.
    HalfBySquare,
    /// `G(4x+b) ≡ 64 h(x)^2 (mod 256)`: `x -> 4x + b`, `y -> 8y + 8h`.
    HalfByScaling,
    /// Neither step applies.
    None,
}

impl Descent {
    pub fn at_least_half(self) -> bool {
        self != Descent::None
    }
}

/// Coefficients of `G` reduced mod `m`, padded to degree 6.
fn residues(g: &ZPoly, m: i64) -> [i64; 7] {
    let mb = BigInt::from(m);
    let mut r = [0i64; 7];
    for (i, c) in g.coeffs().iter().enumerate().take(7) {
        r[i] = c.mod_floor(&mb).to_i64().expect("reduced");
    }
    r
}

/// `G(x + s) mod m` by Horner.
fn shift_mod(g: &[i64; 7], s: i64, m: i64) -> [i64; 7] {
    let mut out = [0i64; 7];
    for &c in g.iter().rev() {
        let mut next = [0i64; 7];
        for i in 0..7 {
            let mut v = out[i] * s;
            if i > 0 {
                v += out[i - 1];
            }
            next[i] = v.rem_euclid(m);
        }
        next[0] = (next[0] + c).rem_euclid(m);
        out = next;
    }
    out
}

/// All squares of cubics over `Z/4`, as coefficient vectors of degree 6.
fn squares_mod4() -> &'static Vec<[i64; 7]> {
    static SQ: std::sync::OnceLock<Vec<[i64; 7]>> = std::sync::OnceLock::new();
    SQ.get_or_init(|| {
        let mut out = Vec::with_capacity(256);
        for n in 0..256 {
            let q = [n & 3, (n >> 2) & 3, (n >> 4) & 3, (n >> 6) & 3];
            let mut s = [0i64; 7];
            for i in 0..4 {
                for j in 0..4 {
                    s[i + j] = (s[i + j] + q[i] * q[j]) % 4;
                }
            }
            out.push(s);
        }
        out.sort();
        out.dedup();
        out
    })
}

fn is_square_mod4(h: &[i64; 7]) -> bool {
    let h = h.map(|c| c.rem_euclid(4));
    squares_mod4().binary_search(&h).is_ok()
}

/// Whether some `s` makes `G(x+s)` divisible as the inverse of the normal-form step
/// requires, with the resulting `4P + Q^2` congruent to a square mod 4.
pub fn full_descent(g: &ZPoly) -> bool {
    let r = residues(g, 1024);
    (0..1024).any(|s| {
        let h = shift_mod(&r, s, 1024);
        if h[3] % 4 != 0 || h[2] % 16 != 0 || h[1] % 64 != 0 || h[0] % 256 != 0 {
            return false;
        }
        let f = [h[0] / 256, h[1] / 64, h[2] / 16, h[3] / 4, h[4], 0, 0];
        is_square_mod4(&f)
    })
}

pub fn half_descent(g: &ZPoly) -> bool {
    !matches!(classify_descent(g), Descent::None)
}

pub fn classify_descent(g: &ZPoly) -> Descent {
    if full_descent(g) {
        return Descent::Full;
    }
    let r4 = residues(g, 4);
    if (0..4).any(|s| is_square_mod4(&shift_mod(&r4, s, 4))) {
        return Descent::HalfBySquare;
    }
    let r = residues(g, 256);
    let scaled = (0..256).any(|b| {
        let h = shift_mod(&r, b, 256);
        let mut q = [0i64; 7];
        let mut pw = 1i64;
        for i in 0..7 {
            let c = (h[i] * pw).rem_euclid(256);
            if c % 64 != 0 {
                return false;
            }
            q[i] = c / 64;
            pw = (pw * 4) % 256;
        }
        is_square_mod4(&q)
    });
    if scaled {
        Descent::HalfByScaling
    } else {
        Descent::None
    }
}
