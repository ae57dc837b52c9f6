use stacktop::grading::{check_pairing_degree, sweep, EigenData, SectorRecord};
use stacktop::scalar::int;

#[test]
fn exhaustive_cyclic_sweep() {
    let s = sweep(12, 4);
    assert!(s.passed(), "{:?}", &s.failures[..s.failures.len().min(5)]);
    assert!(s.actions > 1000);
}

#[test]
fn worked_pairings() {
    let rec = |l: &str, e: &str| SectorRecord::from_eigen(l, &EigenData::parse(e).unwrap());
    let l = check_pairing_degree(&rec("-1", "1/2"), &rec("-1", "1/2"), &rec("1", "0"), 0, &int(1), &int(1)).unwrap();
    assert!(l.report.passed());
    let g = rec("g", "1/3,2/3");
    let l = check_pairing_degree(&g, &g, &rec("g^2", "2/3,1/3"), 0, &int(2), &int(2)).unwrap();
    assert!(l.report.passed());
}
