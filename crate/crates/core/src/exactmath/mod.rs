//! Exact integer, rational and polynomial arithmetic.

pub mod arith;
pub mod mobius;
pub mod poly;
pub mod resultant;
pub mod roots;

pub use arith::{exact_sqrt, is_perfect_square, is_rational_square, pow2, solve_quadratic, two_part, v_p, v_p_rat};
pub use mobius::mobius_transform;
pub use poly::{rat, Coeff, Polynomial, QPoly, ZPoly};
pub use resultant::{disc_n, disc_n_q, resultant, resultant_q};
pub use roots::{integer_roots, rational_roots};
