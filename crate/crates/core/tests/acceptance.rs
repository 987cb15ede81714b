//! One PASS/FAIL line per acceptance criterion, at exact tolerance.
//!
//! Row 4 asks for a 3-dimensional diagonal system over 𝔽₃. Over 𝔽₃ the
//! system is 4-dimensional: the centralizer ℤ₃ of a 3-cycle has a nonzero
//! character into 𝔽₃, which contributes one more solution. Row 6 counts the
//! same system and expects 4 there. Row 4 is reported as FAIL, and its other
//! clauses are asserted separately.

use std::io::Write;

use hopf_adjoint::acceptance::{run_one, Row};
use hopf_adjoint::cohomology::{c1_basis, diagonal_2cocycles, Mutation};
use hopf_adjoint::constructions::group_algebra;
use hopf_adjoint::groups::FiniteGroup;
use hopf_adjoint::FieldSpec;

/// Written to the process stdout directly so the table shows without
/// `--nocapture`.
fn show(line: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{line}");
}

fn rows() -> Vec<Row> {
    (1..=11).map(|id| run_one(id, Mutation::None).expect("criterion ran")).collect()
}

#[test]
fn acceptance_table() {
    let rows = rows();
    for r in &rows {
        show(&r.line());
    }
    let unexpected: Vec<usize> = rows.iter().filter(|r| !r.pass && r.id != 4).map(|r| r.id).collect();
    assert!(unexpected.is_empty(), "failing rows: {unexpected:?}");
}

#[test]
fn row_4_discrepancy_is_confined_to_characteristic_3() {
    let s3 = FiniteGroup::symmetric(3).unwrap();
    assert_eq!(c1_basis(&group_algebra(&s3, FieldSpec::Rationals)).dim(), 0);
    assert_eq!(diagonal_2cocycles(&s3, FieldSpec::Rationals).dim(), 3);
    for p in [5, 7, 11] {
        assert_eq!(diagonal_2cocycles(&s3, FieldSpec::PrimeField(p)).dim(), 3);
    }
    assert_eq!(diagonal_2cocycles(&s3, FieldSpec::PrimeField(3)).dim(), 4);
}

#[test]
fn omitting_the_r_term_fails_row_7() {
    let broken = run_one(7, Mutation::OmitRTerm).unwrap();
    show(&format!("with the R_ad term of d32 omitted: {}", broken.line()));
    assert!(!broken.pass);
}
