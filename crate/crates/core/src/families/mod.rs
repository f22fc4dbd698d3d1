//! Parametric families of genus 2 equations, their discriminant polynomials and
//! prime-discriminant scans.

pub mod primality;
pub mod registry;
pub mod scan;

pub use primality::{is_prime, primality, Certainty, Verdict};
pub use registry::{instantiate, lookup, sign_vectors, ParametricFamily, FAMILIES};
pub use scan::{disc_identity_check, prime_disc_scan, prime_disc_scan_with, IdentityReport, PrimeRule, ScanResult};
