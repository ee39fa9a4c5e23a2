//! Seeded ring-axiom sweep, for runs that need a fixed element count rather
//! than proptest's shrinking.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use orbitdeg::burnside::BurnsideElement;
use orbitdeg::lattice::Catalog;

pub fn random_element(rng: &mut impl Rng, cat: &Catalog) -> BurnsideElement {
    let terms: Vec<(usize, i64)> = (0..rng.gen_range(0..6))
        .map(|_| (rng.gen_range(0..cat.len()), rng.gen_range(-3..=3)))
        .collect();
    BurnsideElement::from_terms(cat, terms).unwrap()
}

/// Checks commutativity, associativity, distributivity and the unit on
/// `elements / 3` random triples. Returns the number of elements drawn.
pub fn check_ring_axioms(cat: &Catalog, elements: usize, seed: u64) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let unit = BurnsideElement::unit(cat);
    let mut drawn = 0;
    while drawn < elements {
        let a = random_element(&mut rng, cat);
        let b = random_element(&mut rng, cat);
        let c = random_element(&mut rng, cat);
        drawn += 3;
        let ab = a.mul(&b, cat).unwrap();
        assert_eq!(ab, b.mul(&a, cat).unwrap());
        assert_eq!(ab.mul(&c, cat).unwrap(), a.mul(&b.mul(&c, cat).unwrap(), cat).unwrap());
        let left = a.mul(&b.add(&c).unwrap(), cat).unwrap();
        assert_eq!(left, ab.add(&a.mul(&c, cat).unwrap()).unwrap());
        assert_eq!(a.mul(&unit, cat).unwrap(), a);
    }
    drawn
}
