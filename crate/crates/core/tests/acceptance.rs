//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. All comparisons are exact; there are no tolerances anywhere.

use fqsym::verify::{self, VerifyConfig};

fn criterion(number: usize, name: &str, result: verify::CheckResult) {
    match &result {
        Ok(()) => println!("criterion {number:2} ({name}): PASS"),
        Err(msg) => println!("criterion {number:2} ({name}): FAIL - {msg}"),
    }
    assert!(result.is_ok(), "criterion {number} ({name}): {result:?}");
}

fn cfg(n_max: usize) -> VerifyConfig {
    VerifyConfig { n_max, budget: None }
}

#[test]
fn acceptance_01_type_a_alternating() {
    // support of sec + tan equals the alternating class up to n = 7 and
    // the EGF coefficients are 1, 1, 1, 2, 5, 16, 61, 272
    criterion(1, "type-A alternating", verify::check_sec_tan(7));
}

#[test]
fn acceptance_02_superization() {
    // printed expansions of the first three superized complete functions,
    // plus agreement of the two superization levels
    criterion(2, "superization", verify::check_superization(5));
}

#[test]
fn acceptance_03_matrices() {
    // printed matrices for n = 2, 3 entrywise; block recursions rebuild
    // n = 3, 4, 5 and agree with direct expansion
    criterion(3, "specialization matrices", verify::check_matrices());
}

#[test]
fn acceptance_04_type_b_alternating() {
    // printed supports at n <= 4, the quasi-differential equation and the
    // fixed point to degree 7, and the t-weighted EGF as a polynomial
    // identity per degree <= 7
    criterion(4, "type-B alternating", verify::check_xb(7, None));
}

#[test]
fn acceptance_05_snakes() {
    // the three snake series have supports of sizes 1,1,3,11,57,361,2763,
    // the modified snakes match the printed lists up to n = 4, and the
    // d/delta identities hold to degree 7
    let combined = verify::check_snakes(7, None).and(verify::check_ribbon_forms(6));
    criterion(5, "type-B snakes", combined);
}

#[test]
fn acceptance_06_valley_model() {
    // U^{-1} is multiplicity-free with valley support; Z U^{-1} and
    // (1+Z) U^{-1} are multiplicity-free with the stated sizes and lists;
    // p_12 has its two tilings
    criterion(6, "valley model", verify::check_valley_model(7, None));
}

#[test]
fn acceptance_07_triangles() {
    let tables = verify::check_triangle_tables();
    let enumeration = verify::check_triangle_enumeration(None);
    let relations = verify::check_triangle_relations(6);
    let combined = tables.and(enumeration).and(relations);
    criterion(7, "triangles", combined);
}

#[test]
fn acceptance_08_type_d() {
    // D = X - Y, its differential and fixed-point equations to degree 7,
    // and the verified bijection with counts 1, 1, 5, 23, 151
    criterion(8, "type D", verify::check_type_d(7, None));
}

#[test]
fn acceptance_09_bijection_and_splitting() {
    criterion(9, "bijection and splitting", verify::check_bijection_and_split(None));
}

#[test]
fn acceptance_10_derivative_polynomials() {
    criterion(
        10,
        "derivative polynomials",
        verify::check_derivative_polynomials(6, 6),
    );
}

#[test]
fn acceptance_11_colored_egfs() {
    criterion(11, "colored EGFs", verify::check_colored(5, None));
}

#[test]
fn full_suite_at_desk_scale() {
    // every registered check once more at the documented default order
    let cfg = cfg(6);
    let mut failures = Vec::new();
    for (name, result) in verify::run_suite("all", &cfg) {
        if let Err(msg) = result {
            failures.push(format!("{name}: {msg}"));
        }
    }
    assert!(failures.is_empty(), "{failures:?}");
}
