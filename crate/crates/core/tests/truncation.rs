mod common;

use common::truncation;

#[test]
fn classes_biject_with_catalog() {
    truncation::classes_biject_with_catalog();
}

#[test]
fn containment_counts_agree() {
    truncation::containment_counts_agree();
}

#[test]
fn orbit_types_agree_for_modes_one_and_two() {
    truncation::orbit_types_agree_for_modes_one_and_two();
}
