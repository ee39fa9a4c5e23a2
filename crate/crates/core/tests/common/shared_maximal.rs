use orbitdeg::degree::shared_maximal_check;
use orbitdeg::elliptic::DegreeReport;
use orbitdeg::lattice::Catalog;
use orbitdeg::representations::{maximal_orbit_types, IrrDescriptor, Sign};

/// Two distinct factors of a report sharing a maximal orbit type with odd
/// fixed dimension on both sides: equal coefficients there, product
/// coefficient 0. Returns the number of (pair, class) cases checked.
pub fn check_report_factors(r: &DegreeReport, cat: &Catalog) -> usize {
    let mut reps: Vec<IrrDescriptor> = r.factors.iter().map(|f| IrrDescriptor::new(f.m, f.j, Sign::Minus)).collect();
    reps.sort_by_key(|d| (d.m, d.j));
    reps.dedup();
    let maximal: Vec<_> = reps.iter().map(|d| maximal_orbit_types(d, cat).unwrap()).collect();
    let mut qualifying = 0;
    for a in 0..reps.len() {
        for b in a + 1..reps.len() {
            for &h0 in maximal[a].intersection(&maximal[b]) {
                if let Some(check) = shared_maximal_check(cat, &reps[a], &reps[b], h0).unwrap() {
                    assert!(check.holds(), "{} and {} at {check:?}", reps[a], reps[b]);
                    qualifying += 1;
                }
            }
        }
    }
    qualifying
}
