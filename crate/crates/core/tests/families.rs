//! Registered families: discriminant identities, prime scans and large values.

mod common;

use common::*;
use g2disc_core::families::{
    disc_identity_check, instantiate, is_prime, lookup, prime_disc_scan, prime_disc_scan_with, primality,
    PrimeRule, FAMILIES,
};
use g2disc_core::verify::{PRIME_LISTS, SPOT_VALUES};
use g2disc_core::BigInt;

#[test]
fn every_polynomial_family_satisfies_its_identity() {
    for fam in FAMILIES.iter().filter(|f| f.extra.is_empty()) {
        let lo = fam.min_t.unwrap_or(-60);
        let r = disc_identity_check(fam.name, lo, 60).unwrap();
        assert!(r.ok(), "{}: {:?}", fam.name, r.violations.first());
        assert!(r.checked > 0);
    }
}

#[test]
fn family_discriminants_agree_with_the_oracle() {
    for fam in FAMILIES.iter().filter(|f| f.extra.is_empty()) {
        let signs = g2disc_core::families::sign_vectors(fam.signs);
        for t in fam.min_t.unwrap_or(-5)..=5 {
            for eps in &signs {
                let e = fam.instantiate(&BigInt::from(t), eps, &[]).unwrap();
                let want = fam.expected_discriminant(&BigInt::from(t), eps, &[]).unwrap();
                assert_eq!(oracle_discriminant_of(&e), qi(&want), "{} t={t} {eps:?}", fam.name);
            }
        }
    }
}

#[test]
fn published_prime_lists() {
    for (name, want) in PRIME_LISTS {
        let got: Vec<i64> = prime_disc_scan(name, 1, 99)
            .unwrap()
            .iter()
            .map(|r| i64::try_from(&r.t).unwrap())
            .collect();
        assert_eq!(got, want, "{name}");
    }
}

#[test]
fn absolute_rule_adds_a_negative_value() {
    let named = prime_disc_scan("sec8-i", 1, 99).unwrap();
    let abs = prime_disc_scan_with("sec8-i", 1, 99, &[], PrimeRule::Absolute, None).unwrap();
    let extra: Vec<_> = abs.iter().filter(|r| !named.contains(r)).collect();
    assert_eq!(extra.len(), 1);
    assert_eq!(extra[0].t, BigInt::from(1));
    // h(1) = -48661 is prime up to sign; the named quartic takes the value 48661
    assert!(is_prime(&BigInt::from(48661)));
}

#[test]
fn minimal_model_spot_values() {
    for (name, t, want) in SPOT_VALUES {
        let fam = lookup(name).unwrap();
        let e = instantiate(name, &BigInt::from(t), &[], &[]).unwrap();
        let d = e.integral_discriminant().unwrap();
        assert_eq!(d / fam.disc_scale(), BigInt::from(want), "{name} t={t}");
    }
}

#[test]
fn scans_do_not_depend_on_thread_count() {
    let one = prime_disc_scan_with("thm7-F", -50, 150, &[], PrimeRule::Named, Some(1)).unwrap();
    let many = prime_disc_scan_with("thm7-F", -50, 150, &[], PrimeRule::Named, Some(7)).unwrap();
    assert_eq!(serde_json::to_string(&one).unwrap(), serde_json::to_string(&many).unwrap());
}

#[test]
fn large_values_are_prime() {
    let fam = lookup("thm7-E").unwrap();
    for (t, v) in [(49983, "1597567383051905525717"), (69945, "6126558731378331096629")] {
        let d = fam.reduced_disc(&BigInt::from(t), &[], &[]).unwrap();
        assert_eq!(d.to_string(), v);
        let verdict = primality(&d);
        assert!(verdict.prime);
    }
}

#[test]
fn primality_on_edge_cases() {
    let b = |s: &str| s.parse::<BigInt>().unwrap();
    for p in ["2", "3", "5", "7919", "2147483647", "170141183460469231731687303715884105727"] {
        assert!(is_prime(&b(p)), "{p}");
    }
    // Carmichael numbers and a strong pseudoprime to bases 2..=11
    for c in ["0", "1", "-7", "561", "41041", "3825123056546413051", "4"] {
        assert!(!is_prime(&b(c)), "{c}");
    }
}

#[test]
fn bad_parameters_are_rejected() {
    assert!(instantiate("no-such", &BigInt::from(1), &[], &[]).is_err());
    assert!(instantiate("thm7-E1", &BigInt::from(1), &[], &[]).is_err());
    assert!(instantiate("thm7-E1", &BigInt::from(1), &[2], &[]).is_err());
    assert!(prime_disc_scan("thm3-C", 0, 3).is_err());
}
