//! The whole lemma suite at the caps the structural results are stated for:
//! every connected graph up to 7 vertices, star sizes up to 8.

use bugscope::verify::lemma_suite;

#[test]
fn full_suite_passes_at_n7_l8() {
    let reports = lemma_suite(7, 8).unwrap();
    assert_eq!(reports.len(), 13 + 9);
    for r in &reports {
        assert!(
            r.passed,
            "{} failed (checked {}), counterexample {:?}",
            r.name, r.checked, r.counterexample
        );
        println!("lemma {} ({} graphs): PASS", r.name, r.checked);
    }
    // The exhaustive pools are the full isomorphism-class counts.
    let ratio = reports.iter().find(|r| r.name == "ratio-bound").unwrap();
    assert_eq!(ratio.checked, 996);
    let consistency = reports.iter().find(|r| r.name == "certification-consistency").unwrap();
    assert_eq!(consistency.checked, (2 + 4 + 11 + 34 + 156 + 1044) - (1 + 2 + 6 + 21 + 112 + 853));
}
