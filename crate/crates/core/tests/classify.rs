//! Classification searches: shape constraints on every emitted curve, closure under
//! the stated isomorphisms, determinism and stability of the sampled search.

mod common;

use common::*;
use g2disc_core::classify::*;
use g2disc_core::exactmath::{v_p, ZPoly};
use g2disc_core::igusa::{absolute_invariants, geometrically_isomorphic};
use g2disc_core::{BigInt, GenusTwoEquation, IgusaInvariants};
use num_traits::{One, Signed};

/// `|n|` with every factor in `primes` removed.
fn strip(n: &BigInt, primes: &[u64]) -> BigInt {
    let mut n = n.abs();
    for &p in primes {
        let p = BigInt::from(p);
        while (&n % &p) == BigInt::from(0) {
            n /= &p;
        }
    }
    n
}

#[test]
fn six_point_models_have_discriminant_supported_on_2_and_3() {
    let r = classify_six_wp(3, 16).unwrap();
    assert_eq!(r.classes.len(), 2);
    assert_eq!(r.rational_class_count(), 4);
    for class in &r.classes {
        for rc in &class.rational_classes {
            let e = GenusTwoEquation::from_json(&rc.representative.equation).unwrap();
            let d = e.integral_discriminant().unwrap();
            assert_eq!(oracle_discriminant_of(&e), qi(&d));
            assert!(strip(&d, &[2, 3]).is_one());
            assert_eq!(v_p(&d, 2).unwrap(), rc.representative.two_valuation);
            assert_eq!(v_p(&d, 3).unwrap(), rc.representative.p_valuation);
            for (m, _) in &rc.members {
                let f = GenusTwoEquation::from_json(&m.equation).unwrap();
                assert!(geometrically_isomorphic(&e, &f).unwrap());
            }
        }
    }
    let mut discs: Vec<String> = r.discriminants().iter().map(|d| d.to_string()).collect();
    discs.sort();
    assert_eq!(discs, ["12230590464", "12524124635136", "1253826625536", "21233664"]);
}

#[test]
fn six_point_classes_are_closed_under_the_parameter_shift() {
    let r = classify_six_wp(3, 16).unwrap();
    let known: Vec<_> = r.classes.iter().map(|c| c.invariants.clone()).collect();
    for d in 0..4 {
        for name in ["thm3-E", "thm3-Cprime"] {
            let a = g2disc_core::families::instantiate(name, &BigInt::from(d), &[], &[]).unwrap();
            let b = g2disc_core::families::instantiate(name, &BigInt::from(d + 2), &[], &[]).unwrap();
            let (ia, ib) = (IgusaInvariants::of(&a).unwrap(), IgusaInvariants::of(&b).unwrap());
            let abs = absolute_invariants(&ia).unwrap();
            assert_eq!(abs, absolute_invariants(&ib).unwrap(), "{name} d={d}");
            assert!(known.contains(&abs), "{name} d={d} is outside the classification");
        }
    }
}

#[test]
fn no_six_point_curves_for_p_5() {
    assert!(classify_six_wp(5, 12).unwrap().classes.is_empty());
}

#[test]
fn six_point_search_is_deterministic() {
    let a = serde_json::to_string(&classify_six_wp(3, 8).unwrap()).unwrap();
    let b = serde_json::to_string(&classify_six_wp(3, 8).unwrap()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn four_point_trace_is_consistent() {
    let r = classify_four_wp();
    assert!(r.hits.is_empty());
    assert!(!r.rejections_with("i", &BigInt::from(4097)).is_empty());
    for c in &r.trace {
        assert!(c.tuple.is_admissible());
        let e = GenusTwoEquation::from_json(&c.equation).unwrap();
        let d = e.integral_discriminant().unwrap();
        // Δ = ±2^k p^2 with p the odd part of the quadratic's discriminant
        let disc_quad = &c.b3 * &c.b3 - 4 * &c.b4;
        assert_eq!(strip(&disc_quad, &[2]), c.p);
        // the irreducible quadratic contributes the only odd factor of Δ
        let mut odd = strip(&d, &[2]);
        while c.p > BigInt::one() && (&odd % &c.p) == BigInt::from(0) {
            odd /= &c.p;
        }
        assert!(odd.is_one(), "{c:?}");
    }
    let a = serde_json::to_string(&r).unwrap();
    assert_eq!(a, serde_json::to_string(&classify_four_wp()).unwrap());
}

#[test]
fn two_quadratic_candidates_are_consistent() {
    let r = classify_two_plus_quadratic();
    assert!(r.hits.is_empty());
    for c in r.byproducts.iter().chain(&r.eliminated).chain(&r.reducible_shadow) {
        let e = c.equation();
        let d = e.integral_discriminant().unwrap();
        assert_eq!(oracle_discriminant_of(&e), qi(&d));
        assert_eq!(strip(&d, &[2]), c.p, "{c:?}");
        assert_eq!(c.k, two_quadratic_k_of(c));
    }
    for c in &r.byproducts {
        // model Δ = 2^40 * 5
        assert_eq!(c.equation().integral_discriminant().unwrap(), BigInt::from(5) << 40);
        assert!(c.descent.at_least_half());
    }
}

fn two_quadratic_k_of(c: &TwoQuadCandidate) -> BigInt {
    g2disc_core::weierstrass::two_quadratic_k(&c.a1, &c.a2, &c.b1, &c.b2)
}

#[test]
fn three_point_models_respect_their_tuple() {
    let r = classify_three_wp(64, 2).unwrap();
    for s in &r.survivors {
        for &res in s.residues.iter().take(3) {
            let t = BigInt::from(res);
            let e = three_wp_model(&s.tuple, s.eps, &t).expect("survivor has integral models");
            assert!(e.is_smooth());
            let g = e.integral_p().unwrap();
            // y^2 = x (x - b)(cubic): the root b = eps1 2^k
            let b = BigInt::from(s.eps[0]) * (BigInt::one() << s.tuple.k);
            assert_eq!(g.eval(&b), BigInt::from(0));
            assert_eq!(g.eval(&BigInt::from(0)), BigInt::from(0));
            assert_eq!(oracle_discriminant_of(&e), qi(&e.integral_discriminant().unwrap()));
        }
    }
}

fn three_wp_model(tuple: &ThreeWpTuple, eps: [i8; 3], t: &BigInt) -> Option<GenusTwoEquation> {
    g2disc_core::classify::three_wp::model(tuple, eps, t)
}

#[test]
fn three_point_survivors_are_stable_under_refinement() {
    let coarse = classify_three_wp(64, 8).unwrap();
    let fine = classify_three_wp(128, 16).unwrap();
    let key = |r: &ThreeWpReport| r.survivors.iter().map(|s| (s.tuple, s.eps)).collect::<Vec<_>>();
    assert_eq!(key(&coarse), key(&fine));
    for (c, f) in coarse.survivors.iter().zip(&fine.survivors) {
        let mut reduced: Vec<u64> = f.residues.iter().map(|r| r % 64).collect();
        reduced.sort();
        reduced.dedup();
        assert_eq!(reduced, c.residues, "{:?} {:?}", c.tuple, c.eps);
    }
}

#[test]
fn three_point_rejects_bad_parameters() {
    assert!(classify_three_wp(32, 8).is_err());
    assert!(classify_three_wp(96, 8).is_err());
    assert!(classify_three_wp(64, 0).is_err());
}

#[test]
fn descent_of_a_known_odd_model() {
    // the normal form of an odd-discriminant family member descends fully
    let e = g2disc_core::families::instantiate("thm7-E", &BigInt::from(3), &[], &[]).unwrap();
    let n = g2disc_core::weierstrass::quintic_normal_form(&e, None).unwrap();
    let g: ZPoly = n.integral_p().unwrap();
    assert_eq!(classify_descent(&g), Descent::Full);
}
