//! Integration tests of the catalog: exact instantiation values, parameter
//! validation, scan semantics, and report serialization.

use std::collections::BTreeMap;

use towerlab_core::catalog::{families, family, instantiate, scan, verify, CatalogError};
use towerlab_core::lattice::{rat, LatticeVector};

fn params(pairs: &[(&str, i64)]) -> BTreeMap<String, i64> {
    pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

fn ranges(pairs: &[(&str, (i64, i64))]) -> BTreeMap<String, (i64, i64)> {
    pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

#[test]
fn listing_is_complete_and_unique() {
    let all = families();
    assert_eq!(all.len(), 13);
    let mut ids: Vec<&str> = all.iter().map(|f| f.id).collect();
    ids.sort_unstable();
    ids.dedup();
    assert_eq!(ids.len(), 13, "family ids must be unique");
    assert!(family("cE2").is_some());
    assert!(family("no-such-family").is_none());
}

#[test]
fn instantiation_reproduces_the_worked_values() {
    let i = instantiate("cD2-a4-case1", &params(&[("l", 1)])).unwrap();
    assert_eq!(i.v1, LatticeVector::from_ints(&[5, 4, 2, 1, 9]));
    assert_eq!(i.chart, 5);
    assert_eq!(i.expected_w2.order, 18);
    assert_eq!(i.expected_w2.numerators, vec![7, 11, 1, 14, 4]);
    assert_eq!(i.v2, LatticeVector::scaled(2, &[3, 3, 1, 2, 4]));
    assert_eq!(i.reversed_chart, 4);
    assert_eq!(i.expected_w2_prime.order, 2);
    assert_eq!(i.expected_w2_prime.numerators, vec![7, 5, 3, 2, 14]);
    let nef = i.nef.as_ref().unwrap();
    assert_eq!(nef.expected_t, rat(-34, 77));
    assert_eq!(nef.ecube, rat(2, 18));
    assert_eq!(nef.fcube, rat(324, 77));
    assert!(verify(&i).passed());

    let i = instantiate("cE2", &BTreeMap::new()).unwrap();
    assert_eq!(i.v1, LatticeVector::from_ints(&[3, 2, 1, 4]));
    let nef = i.nef.as_ref().unwrap();
    assert_eq!(nef.expected_t, rat(-1, 10));
    assert_eq!(nef.ecube, rat(1, 6));
    assert_eq!(nef.fcube, rat(36, 5));
    assert!(verify(&i).passed());
}

#[test]
fn parameter_validation() {
    assert!(matches!(
        instantiate("no-such-family", &BTreeMap::new()),
        Err(CatalogError::UnknownFamily(_))
    ));
    assert!(matches!(
        instantiate("cD2-a4-case1", &BTreeMap::new()),
        Err(CatalogError::MissingParam(_))
    ));
    assert!(matches!(
        instantiate("cE2", &params(&[("l", 1)])),
        Err(CatalogError::UnexpectedParam(_))
    ));
    assert!(matches!(
        instantiate("cD2-a4-case1", &params(&[("l", 0)])),
        Err(CatalogError::Constraint(_))
    ));
    // An even first-step discrepancy numerator is rejected with a message.
    match instantiate("cD2-a-case1-sub1", &params(&[("r", 7), ("a", 4)])) {
        Err(CatalogError::Constraint(msg)) => assert!(msg.contains("odd"), "{}", msg),
        other => panic!("expected a constraint violation, got {:?}", other.map(|_| ())),
    }
}

#[test]
fn scan_is_deterministic_across_jobs() {
    let r = ranges(&[("l", (1, 10))]);
    let one = scan("cD2-a4-case1", &r, 1).unwrap();
    let four = scan("cD2-a4-case1", &r, 4).unwrap();
    assert_eq!(one, four);
    assert!(one.passed());
    assert_eq!(one.reports.len(), 10);
    assert_eq!(one.skipped, 0);
}

#[test]
fn scan_skips_inadmissible_tuples_in_order() {
    let r = ranges(&[("n", (2, 3)), ("b", (1, 2)), ("a", (2, 4)), ("d", (1, 2)), ("r1", (1, 6))]);
    let report = scan("cAn-sub1", &r, 2).unwrap();
    assert!(report.passed());
    assert!(!report.reports.is_empty());
    assert!(report.skipped > 0);
    // Lexicographic over the declared order (n, b, a, d, r1).
    let order = ["n", "b", "a", "d", "r1"];
    let tuples: Vec<Vec<i64>> = report
        .reports
        .iter()
        .map(|rep| order.iter().map(|k| rep.params[*k]).collect())
        .collect();
    for pair in tuples.windows(2) {
        assert!(pair[0] < pair[1], "reports out of order: {:?}", pair);
    }
}

#[test]
fn scan_validates_its_ranges() {
    assert!(matches!(
        scan("cD2-a4-case1", &ranges(&[("x", (1, 2))]), 1),
        Err(CatalogError::UnexpectedParam(_))
    ));
    assert!(matches!(
        scan("cD2-a4-case1", &BTreeMap::new(), 1),
        Err(CatalogError::MissingParam(_))
    ));
    // An empty range verifies nothing but is not an error.
    let empty = scan("cD2-a4-case1", &ranges(&[("l", (5, 4))]), 1).unwrap();
    assert!(empty.reports.is_empty());
    assert_eq!(empty.skipped, 0);
}

#[test]
fn reports_round_trip_through_json() {
    let rep = verify(&instantiate("cE2", &BTreeMap::new()).unwrap());
    let json = serde_json::to_string(&rep).unwrap();
    assert_eq!(serde_json::from_str::<towerlab_core::catalog::VerificationReport>(&json).unwrap(), rep);

    let sc = scan("cD2-d1-case1", &ranges(&[("l", (1, 3))]), 1).unwrap();
    let json = serde_json::to_string(&sc).unwrap();
    assert_eq!(serde_json::from_str::<towerlab_core::catalog::ScanReport>(&json).unwrap(), sc);
}
