mod common;

use common::{c1_suite, kernel_suite};

#[test]
fn every_basis_function_is_c1() {
    let results = c1_suite();
    assert_eq!(results.len(), 4 * (2 + 3 + 4));
    for (name, jump, size_ok) in results {
        assert!(jump < 1e-8, "{name}: {jump:e}");
        assert!(size_ok, "{name}: basis size differs from formula");
    }
}

#[test]
fn kernel_dimension_matches_formula() {
    for (name, nullity, expected) in kernel_suite() {
        assert_eq!(nullity, expected, "{name}");
    }
}
