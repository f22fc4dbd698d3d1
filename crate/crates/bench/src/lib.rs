//! Fixed inputs shared by the benchmarks.

use g2disc_core::families::instantiate;
use g2disc_core::{BigInt, GenusTwoEquation};

/// `y^2 = x (x^2 - 1)(x^2 - 4)`.
pub fn six_point_curve() -> GenusTwoEquation {
    GenusTwoEquation::from_i64s(&[0, 4, 0, -5, 0, 1], &[]).expect("quintic")
}

/// A member of each odd-discriminant family at a moderately large parameter.
pub fn family_curves() -> Vec<GenusTwoEquation> {
    ["thm7-E", "thm7-F", "sec8-i", "sec8-ii"]
        .iter()
        .map(|n| instantiate(n, &BigInt::from(49983), &[], &[]).expect("registered"))
        .collect()
}
