//! Curve records: re-ingestion round trips and the store.

use g2disc_core::families::instantiate;
use g2disc_core::record::{CurveRecord, DiscriminantReport, FamilyTag, JsonlStore};
use g2disc_core::{BigInt, GenusTwoEquation, IgusaInvariants};

fn tagged(name: &str, t: i64, eps: &[i64]) -> CurveRecord {
    let e = instantiate(name, &BigInt::from(t), eps, &[]).unwrap();
    let tag = FamilyTag { name: name.into(), t: t.into(), eps: eps.to_vec(), extra: vec![] };
    CurveRecord::new(&e, Some(tag)).unwrap()
}

#[test]
fn reingested_equations_reproduce_every_field() {
    for (name, t, eps) in [("thm7-E", 3, vec![]), ("thm7-E4", -2, vec![1, -1, 1]), ("sec8-ii", 7, vec![])] {
        let r = tagged(name, t, &eps);
        let e = GenusTwoEquation::from_json_str(&serde_json::to_string(&r.equation).unwrap()).unwrap();
        let again = CurveRecord::new(&e, r.family.clone()).unwrap();
        assert_eq!(again, r);
        let j = IgusaInvariants::of(&e).unwrap();
        assert_eq!(j.as_array().map(g2disc_core::serial::rat_to_string), r.j);
        assert!(DiscriminantReport::of(&e).consistent());
    }
}

#[test]
fn store_is_append_only_and_idempotent() {
    let dir = std::env::temp_dir().join(format!("g2disc-records-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let store = JsonlStore::open(dir.join("curves.jsonl"));
    let a = tagged("thm7-E", 3, &[]);
    let b = tagged("thm7-F", 3, &[]);
    assert_eq!(store.append(&[a.clone()]).unwrap(), 1);
    let before = std::fs::read_to_string(store.path()).unwrap();
    assert_eq!(store.append(&[a.clone(), b.clone()]).unwrap(), 1);
    let after = std::fs::read_to_string(store.path()).unwrap();
    assert!(after.starts_with(&before));
    assert_eq!(store.load().unwrap(), vec![a, b]);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn singular_equation_reports_zero() {
    let e = GenusTwoEquation::from_i64s(&[0, 0, 1, 0, 0, 1], &[]).unwrap();
    let d = DiscriminantReport::of(&e);
    assert_eq!(d.sign, 0);
    assert!(!d.smooth);
    assert!(d.consistent());
    assert!(CurveRecord::new(&e, None).is_err());
}
