//! Bounded exhaustive searches over the discriminant shapes `±2^a p^b`, and the
//! isomorphism-table certificates.

pub mod descent;
pub mod four_wp;
pub mod six_wp;
pub mod tables;
pub mod three_wp;
pub mod two_quad;

pub use descent::{classify_descent, Descent};
pub use four_wp::{classify_four_wp, FourWpCandidate, FourWpOutcome, FourWpReport, FourWpTuple};
pub use six_wp::{classify_six_wp, SixWpGeometricClass, SixWpModel, SixWpRationalClass, SixWpReport};
pub use tables::{certify_isomorphism_tables, ClaimResult, IsomorphismReport};
pub use three_wp::{classify_three_wp, ThreeWpRejection, ThreeWpReport, ThreeWpSurvivor, ThreeWpTuple};
pub use two_quad::{classify_two_plus_quadratic, TwoQuadCandidate, TwoQuadReport};
