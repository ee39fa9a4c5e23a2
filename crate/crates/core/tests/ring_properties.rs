use std::sync::OnceLock;

use proptest::prelude::*;

use orbitdeg::burnside::BurnsideElement;
use orbitdeg::lattice::Catalog;

fn cat() -> &'static Catalog {
    static C: OnceLock<Catalog> = OnceLock::new();
    C.get_or_init(|| Catalog::from_descriptor("S4*Z2", 3).unwrap())
}

/// Classes that survive `Ψ_2` and `Ψ_3` inside the fold-3 catalog.
fn low_fold() -> &'static Vec<usize> {
    static L: OnceLock<Vec<usize>> = OnceLock::new();
    L.get_or_init(|| cat().classes().iter().filter(|c| c.fold() <= 1).map(|c| c.id).collect())
}

fn element(pool: fn() -> Vec<usize>) -> impl Strategy<Value = BurnsideElement> {
    prop::collection::vec((any::<prop::sample::Index>(), -3i64..=3), 0..6).prop_map(move |terms| {
        let ids = pool();
        BurnsideElement::from_terms(cat(), terms.into_iter().map(|(i, c)| (ids[i.index(ids.len())], c))).unwrap()
    })
}

fn any_class() -> Vec<usize> {
    (0..cat().len()).collect()
}

fn fold_one() -> Vec<usize> {
    low_fold().clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms(a in element(any_class), b in element(any_class), c in element(any_class)) {
        let cat = cat();
        let ab = a.mul(&b, cat).unwrap();
        prop_assert_eq!(&ab, &b.mul(&a, cat).unwrap());
        prop_assert_eq!(ab.mul(&c, cat).unwrap(), a.mul(&b.mul(&c, cat).unwrap(), cat).unwrap());
        let left = a.mul(&b.add(&c).unwrap(), cat).unwrap();
        prop_assert_eq!(left, ab.add(&a.mul(&c, cat).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&BurnsideElement::unit(cat), cat).unwrap(), a.clone());
        prop_assert!(a.mul(&BurnsideElement::zero(cat), cat).unwrap().is_zero());
        prop_assert!(a.sub(&a).unwrap().is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn folding_is_a_ring_homomorphism(a in element(fold_one), b in element(fold_one), nu in 2u32..=3) {
        let cat = cat();
        let f = |x: &BurnsideElement| x.fold_hom(nu, cat).unwrap();
        prop_assert_eq!(f(&a.mul(&b, cat).unwrap()), f(&a).mul(&f(&b), cat).unwrap());
        prop_assert_eq!(f(&a.add(&b).unwrap()), f(&a).add(&f(&b)).unwrap());
        prop_assert_eq!(f(&BurnsideElement::unit(cat)), BurnsideElement::unit(cat));
    }
}
