//! The acceptance suite: runs every verification criterion at its pinned
//! tolerance and prints one pass/fail line per criterion.
//!
//! Criterion 3 is pinned to its verified outcome: exact enumeration of
//! the even-index quasi-Grassmannians gives 15 and 31 hyperplanes where
//! the classical block template predicts 7 and 15 (the odd-index spaces
//! match the template exactly, and every template set is verified to be
//! a hyperplane in all four). The extra hyperplanes are cross-checked by
//! the independent subset-filter oracle of criterion 12 and surface as
//! verified counterexamples in criterion 11. The suite keeps the
//! historical expectation and reports the discrepancy; this test asserts
//! that exact outcome, so a change in either direction is flagged.

use bsts::verify::run_verify_suite;

#[test]
fn acceptance_criteria() {
    let results = run_verify_suite();
    assert_eq!(results.len(), 12);
    for r in &results {
        let status = if r.passed { "PASS" } else { "FAIL" };
        println!(
            "[{status}] criterion {:2} {:32} {:>7.2}s  {}",
            r.id, r.name, r.seconds, r.detail
        );
    }
    let mut unexpected = Vec::new();
    for r in &results {
        if r.id == 3 {
            let documented = !r.passed
                && r.detail.contains("R6: 15 hyperplanes, expected 7")
                && r.detail.contains("R7=15")
                && r.detail.contains("R8: 31 hyperplanes, expected 15")
                && r.detail.contains("R9=31")
                && r.detail.contains("template sets all verified");
            if !documented {
                unexpected.push(format!(
                    "criterion 3 no longer matches its documented outcome: {}",
                    r.detail
                ));
            }
        } else if !r.passed {
            unexpected.push(format!("criterion {} ({}): {}", r.id, r.name, r.detail));
        }
    }
    assert!(
        unexpected.is_empty(),
        "unexpected outcomes:\n{}",
        unexpected.join("\n")
    );
}
