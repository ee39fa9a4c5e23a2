mod common;

use common::finite;

#[test]
fn s4z2_classes_match_brute_force() {
    finite::s4z2_classes_match_brute_force();
}

#[test]
fn s4z2_names_biject_with_reference_list() {
    finite::s4z2_names_biject_with_reference_list();
}

#[test]
fn s4_has_eleven_classes() {
    finite::s4_has_eleven_classes();
}

#[test]
fn radial_products_match_coset_orbits() {
    finite::radial_products_match_coset_orbits();
}
