//! Brute-force checks on `S4 × Z2`: subgroup classes by adjoining elements
//! one at a time, and Burnside products by counting orbits on `K/H × K/H'`.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use orbitdeg::burnside::BurnsideElement;
use orbitdeg::group::{ElemSet, FiniteGroup, Perm, SubgroupClassTable};
use orbitdeg::lattice::Catalog;

/// Reference names of the 33 subgroup classes of `S4 × Z2`, in the
/// conventional listing order.
const NAMES: [&str; 33] = [
    "Z1", "Z2", "D1z", "D1", "Z2m", "Z1p", "Z3", "Z2p", "V4m", "D2", "Z4", "V4", "D2z", "Z4d", "D2d", "D1p", "Z3p",
    "D3", "D3z", "V4p", "D4d", "Z4p", "D4", "D2p", "D4z", "D4hd", "D3p", "A4", "D4p", "S4", "A4p", "S4m", "S4p",
];

/// Orders read off the names: `Z_n` has `n`, `D_n` and `V4` have `2n` and 4,
/// a `p` suffix doubles.
fn order_from_name(name: &str) -> usize {
    let (base, p) = match name.strip_suffix('p') {
        Some(b) => (b, 2),
        None => (name, 1),
    };
    let digits: String = base.chars().filter(|c| c.is_ascii_digit()).collect();
    let n: usize = digits.parse().unwrap();
    let o = match base.chars().next().unwrap() {
        'Z' => n,
        'D' => 2 * n,
        'V' => 4,
        'A' => 12,
        'S' => 24,
        _ => unreachable!(),
    };
    o * p
}

struct Brute {
    els: Vec<Perm>,
    mul: Vec<Vec<usize>>,
    inv: Vec<usize>,
}

impl Brute {
    fn new(g: &FiniteGroup) -> Brute {
        let els = g.elements().to_vec();
        let index: HashMap<Perm, usize> = els.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let mul: Vec<Vec<usize>> = els.iter().map(|a| els.iter().map(|b| index[&a.compose(b)]).collect()).collect();
        let e = index[&Perm::identity(g.degree())];
        let inv = (0..els.len()).map(|a| (0..els.len()).find(|&b| mul[a][b] == e).unwrap()).collect();
        Brute { els, mul, inv }
    }

    fn closure(&self, gens: &[usize]) -> BTreeSet<usize> {
        let e = self.mul[0][self.inv[0]];
        let mut s: BTreeSet<usize> = [e].into();
        let mut list = vec![e];
        let mut i = 0;
        while i < list.len() {
            for &g in gens {
                let y = self.mul[list[i]][g];
                if s.insert(y) {
                    list.push(y);
                }
            }
            i += 1;
        }
        s
    }

    fn conj(&self, t: usize, h: &BTreeSet<usize>) -> BTreeSet<usize> {
        h.iter().map(|&x| self.mul[self.mul[self.inv[t]][x]][t]).collect()
    }

    fn subgroups(&self) -> Vec<BTreeSet<usize>> {
        let mut seen: HashSet<BTreeSet<usize>> = HashSet::new();
        let mut queue = vec![self.closure(&[])];
        seen.insert(queue[0].clone());
        while let Some(h) = queue.pop() {
            for g in 0..self.els.len() {
                if h.contains(&g) {
                    continue;
                }
                let gens: Vec<usize> = h.iter().copied().chain([g]).collect();
                let s = self.closure(&gens);
                if seen.insert(s.clone()) {
                    queue.push(s);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Classes as lists of members.
    fn classes(&self) -> Vec<Vec<BTreeSet<usize>>> {
        let mut done: HashSet<BTreeSet<usize>> = HashSet::new();
        let mut subs = self.subgroups();
        subs.sort();
        let mut out = Vec::new();
        for h in subs {
            if done.contains(&h) {
                continue;
            }
            let members: BTreeSet<BTreeSet<usize>> = (0..self.els.len()).map(|t| self.conj(t, &h)).collect();
            done.extend(members.iter().cloned());
            out.push(members.into_iter().collect());
        }
        out
    }
}

fn to_elemset(n: usize, s: &BTreeSet<usize>) -> ElemSet {
    ElemSet::from_iter_with_capacity(n, s.iter().copied())
}

pub fn s4z2_classes_match_brute_force() {
    let g = FiniteGroup::from_descriptor("S4*Z2").unwrap();
    let b = Brute::new(&g);
    let brute = b.classes();
    let table = SubgroupClassTable::build(&g);
    assert_eq!(brute.len(), 33);
    assert_eq!(table.len(), 33);
    let mut hit = BTreeSet::new();
    for members in &brute {
        let ids: BTreeSet<usize> = members
            .iter()
            .map(|m| table.class_of(&to_elemset(48, m)).expect("every subgroup is located"))
            .collect();
        assert_eq!(ids.len(), 1, "a brute-force class splits");
        let id = *ids.iter().next().unwrap();
        let c = table.class(id).unwrap();
        assert_eq!(c.members.len(), members.len());
        assert_eq!(c.order, members[0].len());
        hit.insert(id);
    }
    assert_eq!(hit.len(), 33);
}

pub fn s4z2_names_biject_with_reference_list() {
    let g = FiniteGroup::from_descriptor("S4*Z2").unwrap();
    let table = SubgroupClassTable::build(&g);
    let ours: BTreeSet<&str> = table.classes.iter().map(|c| c.name.as_str()).collect();
    let theirs: BTreeSet<&str> = NAMES.into_iter().collect();
    assert_eq!(ours, theirs);
    for name in NAMES {
        let c = table.class(table.by_name(name).unwrap()).unwrap();
        assert_eq!(c.order, order_from_name(name), "{name}");
    }
}

pub fn s4_has_eleven_classes() {
    let g = FiniteGroup::from_descriptor("S4").unwrap();
    assert_eq!(Brute::new(&g).classes().len(), 11);
    assert_eq!(SubgroupClassTable::build(&g).len(), 11);
}

/// `(O(2) × H)(O(2) × H')` against the orbit decomposition of
/// `K/H × K/H'` for every pair of classes.
pub fn radial_products_match_coset_orbits() {
    let g = FiniteGroup::from_descriptor("S4*Z2").unwrap();
    let b = Brute::new(&g);
    let table = SubgroupClassTable::build(&g);
    let cat = Catalog::from_descriptor("S4*Z2", 1).unwrap();
    let reps: Vec<BTreeSet<usize>> = table.classes.iter().map(|c| c.rep.iter().collect()).collect();
    let radial: Vec<usize> = table
        .classes
        .iter()
        .map(|c| cat.by_name(&format!("O(2) x {}", c.name)).unwrap())
        .collect();
    let cosets = |h: &BTreeSet<usize>| -> Vec<BTreeSet<usize>> {
        let set: BTreeSet<BTreeSet<usize>> =
            (0..48).map(|a| h.iter().map(|&x| b.mul[a][x]).collect()).collect();
        set.into_iter().collect()
    };
    let all_cosets: Vec<Vec<BTreeSet<usize>>> = reps.iter().map(cosets).collect();
    for i in 0..reps.len() {
        for j in i..reps.len() {
            let ci = &all_cosets[i];
            let cj = &all_cosets[j];
            let idx_i: HashMap<&BTreeSet<usize>, usize> = ci.iter().enumerate().map(|(k, c)| (c, k)).collect();
            let idx_j: HashMap<&BTreeSet<usize>, usize> = cj.iter().enumerate().map(|(k, c)| (c, k)).collect();
            let act = |a: usize, c: &BTreeSet<usize>| -> BTreeSet<usize> { c.iter().map(|&x| b.mul[a][x]).collect() };
            let mut seen = vec![vec![false; cj.len()]; ci.len()];
            let mut counts: BTreeMap<usize, i64> = BTreeMap::new();
            for x in 0..ci.len() {
                for y in 0..cj.len() {
                    if seen[x][y] {
                        continue;
                    }
                    let mut stab = BTreeSet::new();
                    for a in 0..48 {
                        let (x2, y2) = (idx_i[&act(a, &ci[x])], idx_j[&act(a, &cj[y])]);
                        seen[x2][y2] = true;
                        if (x2, y2) == (x, y) {
                            stab.insert(a);
                        }
                    }
                    let class = table.class_of(&to_elemset(48, &stab)).unwrap();
                    *counts.entry(radial[class]).or_default() += 1;
                }
            }
            let want = BurnsideElement::from_terms(&cat, counts).unwrap();
            let x = BurnsideElement::generator(&cat, radial[i], 1);
            let y = BurnsideElement::generator(&cat, radial[j], 1);
            assert_eq!(x.mul(&y, &cat).unwrap(), want, "{} * {}", cat.name(radial[i]), cat.name(radial[j]));
        }
    }
}
