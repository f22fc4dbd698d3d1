//! Library values against the independent oracles in `common`.

mod common;

use common::*;
use g2disc_core::exactmath::{disc_n, ZPoly};
use g2disc_core::{BigInt, GenusTwoEquation, IgusaInvariants};
use proptest::prelude::*;

#[test]
fn bareiss_matches_small_determinants() {
    let m = |rows: &[&[i64]]| rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    assert_eq!(bareiss_det(m(&[&[2, 3], &[5, 7]])), BigInt::from(-1));
    assert_eq!(bareiss_det(m(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 4]])), BigInt::from(-4));
    assert_eq!(bareiss_det(m(&[&[1, 2], &[2, 4]])), BigInt::from(0));
}

#[test]
fn classical_discriminants_of_low_degree() {
    let z = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
    // b^2 - 4ac
    assert_eq!(classical_disc(&z(&[3, 5, 2])), BigInt::from(1));
    // -4p^3 - 27q^2 for x^3 + px + q
    assert_eq!(classical_disc(&z(&[1, -2, 0, 1])), BigInt::from(32 - 27));
}

#[test]
fn six_point_anchor_by_both_routes() {
    let g = poly_from_roots(1, &[0, 1, -1, 2, -2]);
    let e = curve(&g, &[]);
    assert_eq!(oracle_discriminant(&g, &[]), q(21233664));
    assert_eq!(e.discriminant(), &q(21233664));
}

#[test]
fn six_point_anchor_invariants_from_roots() {
    let e = curve(&poly_from_roots(1, &[0, 1, -1, 2, -2]), &[]);
    let lib = IgusaInvariants::of(&e).unwrap();
    let want = [620, 9830, -17820, -26919325, 21233664].map(q);
    assert_eq!(lib.as_array().map(|x| x.clone()), want);
    assert_eq!(root_j_quintic(1, &[0, 1, -1, 2, -2], 3), want);
    assert_eq!(root_j_quintic(1, &[0, 1, -1, 2, -2], -7), want);
}

#[test]
fn degenerate_degrees() {
    // deg F = 5 picks up lc^2; deg F <= 4 is singular at infinity
    let quintic = [0, 3, 0, 1, 1, 2];
    let e = curve(&quintic, &[]);
    assert_eq!(e.discriminant(), &oracle_discriminant(&quintic, &[]));
    let quartic = curve(&[1, 0, 0, 1, 1], &[]);
    assert_eq!(quartic.discriminant(), &q(0));
    assert!(!quartic.is_smooth());
}

fn coeffs(len: usize, r: i64) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-r..=r, len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(600))]

    #[test]
    fn discriminant_matches_sylvester(p in coeffs(7, 30), qq in coeffs(4, 10)) {
        let e = curve(&p, &qq);
        prop_assert_eq!(e.discriminant(), &oracle_discriminant(&p, &qq));
    }

    #[test]
    fn disc_n_matches_sylvester(f in coeffs(7, 50)) {
        let z: Vec<BigInt> = f.iter().map(|&x| BigInt::from(x)).collect();
        prop_assert_eq!(disc_n(&ZPoly::from_i64s(&f), 6).unwrap(), sextic_disc(&z));
    }

    #[test]
    fn igusa_matches_root_formulas(roots in prop::collection::vec(-12i64..=12, 6), a in 1i64..=5) {
        prop_assume!(distinct(&roots));
        let r: [i64; 6] = roots.clone().try_into().unwrap();
        let e = GenusTwoEquation::hyperelliptic(&ZPoly::from_i64s(&poly_from_roots(a, &roots))).unwrap();
        let lib = IgusaInvariants::of(&e).unwrap();
        prop_assert_eq!(lib.as_array().map(|x| x.clone()), root_j_sextic(a, &r));
    }

    #[test]
    fn quintic_igusa_matches_root_formulas(roots in prop::collection::vec(-12i64..=12, 5), s in 13i64..=40) {
        prop_assume!(distinct(&roots));
        let r: [i64; 5] = roots.clone().try_into().unwrap();
        let e = curve(&poly_from_roots(1, &roots), &[]);
        let lib = IgusaInvariants::of(&e).unwrap();
        prop_assert_eq!(lib.as_array().map(|x| x.clone()), root_j_quintic(1, &r, s));
    }
}
