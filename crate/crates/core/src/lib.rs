//! Discriminants, Igusa invariants and bounded classification searches for genus 2
//! curves `y^2 + Q(x) y = P(x)` over the rationals, all in exact arithmetic.

pub mod classify;
pub mod error;
pub mod exactmath;
pub mod families;
pub mod igusa;
pub mod record;
pub mod serial;
pub mod verify;
pub mod weierstrass;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use igusa::{AbsoluteInvariants, IgusaInvariants};
pub use weierstrass::{GenusTwoEquation, Transformation};
