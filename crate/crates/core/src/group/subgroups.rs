//! Subgroup lattice of a finite group, up to conjugacy.
//!
//! Subgroups are found bottom-up: every subgroup is a join of cyclic
//! subgroups, so repeatedly joining known subgroups with cyclic ones reaches
//! all of them. This is exhaustive and fast enough for the groups handled
//! here (order ≤ 48 in practice); a smarter enumeration would slot into
//! [`all_subgroups`].

use std::collections::{HashMap, HashSet, VecDeque};

use serde::Serialize;

use super::{AtomicGroup, ElemSet, FiniteGroup};
use crate::error::{Error, Result};

/// Closure of `gens` under multiplication.
pub fn closure(g: &FiniteGroup, gens: &[usize]) -> ElemSet {
    let mut set = ElemSet::new(g.order());
    set.insert(0);
    let mut list = vec![0usize];
    let mut i = 0;
    while i < list.len() {
        let a = list[i];
        for &s in gens {
            let b = g.mul(a, s);
            if set.insert(b) {
                list.push(b);
            }
        }
        i += 1;
    }
    set
}

fn join(g: &FiniteGroup, h: &ElemSet, extra: usize) -> ElemSet {
    let mut gens: Vec<usize> = h.iter().collect();
    gens.push(extra);
    closure(g, &gens)
}

/// All subgroups of `g`, each as an element bitset.
pub fn all_subgroups(g: &FiniteGroup) -> Vec<ElemSet> {
    let mut cyclic_gens = Vec::new();
    let mut seen_cyclic = HashSet::new();
    for a in 0..g.order() {
        let c = closure(g, &[a]);
        if seen_cyclic.insert(c) {
            cyclic_gens.push(a);
        }
    }
    let trivial = closure(g, &[]);
    let mut found: HashSet<ElemSet> = HashSet::new();
    let mut out = vec![trivial.clone()];
    found.insert(trivial.clone());
    let mut queue = VecDeque::from([trivial]);
    while let Some(h) = queue.pop_front() {
        for &c in &cyclic_gens {
            if h.contains(c) {
                continue;
            }
            let j = join(g, &h, c);
            if found.insert(j.clone()) {
                out.push(j.clone());
                queue.push_back(j);
            }
        }
    }
    out
}

/// Image of a subgroup under conjugation `x -> t x t^-1`.
pub fn conjugate_set(g: &FiniteGroup, t: usize, h: &ElemSet) -> ElemSet {
    ElemSet::from_iter_with_capacity(g.order(), h.iter().map(|x| g.conj(t, x)))
}

/// A subgroup given by its element set.
#[derive(Clone, Debug)]
pub struct Subgroup {
    pub elements: ElemSet,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// One conjugacy class of subgroups.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    pub id: usize,
    pub name: String,
    pub rep: ElemSet,
    pub order: usize,
    pub normalizer_order: usize,
    /// All conjugates of the representative.
    pub members: Vec<ElemSet>,
    /// `conjugators[i]` maps the representative onto `members[i]`.
    pub conjugators: Vec<usize>,
}

impl SubgroupClass {
    pub fn weyl_order(&self) -> usize {
        self.normalizer_order / self.order
    }

    pub fn is_normal(&self) -> bool {
        self.members.len() == 1
    }
}

/// The conjugacy classes of subgroups of a finite group, with the
/// subconjugacy order and containment counts.
#[derive(Clone, Debug)]
pub struct SubgroupClassTable {
    pub classes: Vec<SubgroupClass>,
    /// `n[h][k]`: subgroups of class `k` containing the representative of `h`.
    n: Vec<Vec<u32>>,
    lookup: HashMap<ElemSet, (usize, usize)>,
}

impl SubgroupClassTable {
    pub fn build(g: &FiniteGroup) -> SubgroupClassTable {
        let subs = all_subgroups(g);
        let mut assigned: HashSet<ElemSet> = HashSet::new();
        let mut classes = Vec::new();
        for h in subs {
            if assigned.contains(&h) {
                continue;
            }
            let mut members: Vec<ElemSet> = Vec::new();
            let mut conjugators = Vec::new();
            let mut seen = HashSet::new();
            for t in 0..g.order() {
                let c = conjugate_set(g, t, &h);
                if seen.insert(c.clone()) {
                    members.push(c);
                    conjugators.push(t);
                }
            }
            // Use the smallest member as representative so the choice does not
            // depend on enumeration order.
            let min_idx = (0..members.len()).min_by(|&a, &b| members[a].cmp(&members[b])).unwrap();
            let rep = members[min_idx].clone();
            let t0 = g.inv(conjugators[min_idx]);
            let conjugators: Vec<usize> = conjugators.iter().map(|&t| g.mul(t, t0)).collect();
            let mut paired: Vec<(ElemSet, usize)> = members.into_iter().zip(conjugators).collect();
            paired.sort();
            for (m, _) in &paired {
                assigned.insert(m.clone());
            }
            let order = rep.len();
            let n_members = paired.len();
            classes.push(SubgroupClass {
                id: 0,
                name: String::new(),
                rep,
                order,
                normalizer_order: g.order() / n_members,
                members: paired.iter().map(|p| p.0.clone()).collect(),
                conjugators: paired.iter().map(|p| p.1).collect(),
            });
        }

        let names = class_names(g, &classes);
        for (c, name) in classes.iter_mut().zip(names) {
            c.name = name;
        }
        classes.sort_by(|a, b| (a.order, &a.name).cmp(&(b.order, &b.name)));
        let mut lookup = HashMap::new();
        for (i, c) in classes.iter_mut().enumerate() {
            c.id = i;
            for (j, m) in c.members.iter().enumerate() {
                lookup.insert(m.clone(), (i, j));
            }
        }
        let k = classes.len();
        let mut n = vec![vec![0u32; k]; k];
        for (h, ch) in classes.iter().enumerate() {
            for (kk, ck) in classes.iter().enumerate() {
                if ck.order % ch.order == 0 {
                    n[h][kk] = ck.members.iter().filter(|m| ch.rep.is_subset(m)).count() as u32;
                }
            }
        }
        SubgroupClassTable {
            classes,
            n,
            lookup,
        }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class(&self, id: usize) -> Result<&SubgroupClass> {
        self.classes.get(id).ok_or(Error::InvalidClass(id))
    }

    /// Number of subgroups in class `k` containing a fixed member of class `h`.
    pub fn n_count(&self, h: usize, k: usize) -> Result<u32> {
        self.class(h)?;
        self.class(k)?;
        Ok(self.n[h][k])
    }

    /// Subconjugacy `(h) ≤ (k)`.
    pub fn le(&self, h: usize, k: usize) -> bool {
        self.n[h][k] > 0
    }

    /// Class id and member index of a subgroup.
    pub fn locate(&self, s: &ElemSet) -> Option<(usize, usize)> {
        self.lookup.get(s).copied()
    }

    pub fn class_of(&self, s: &ElemSet) -> Option<usize> {
        self.locate(s).map(|x| x.0)
    }

    pub fn by_name(&self, name: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.name == name)
    }

    /// Full group class id (the last one).
    pub fn top(&self) -> usize {
        self.classes.len() - 1
    }

    /// Every subgroup of the group, across all classes.
    pub fn all_members(&self) -> impl Iterator<Item = (usize, &ElemSet)> {
        self.classes
            .iter()
            .flat_map(|c| c.members.iter().map(move |m| (c.id, m)))
    }

    /// Normal subgroups of the subgroup `s`.
    pub fn normal_subgroups_of(&self, g: &FiniteGroup, s: &ElemSet) -> Vec<ElemSet> {
        let elems: Vec<usize> = s.iter().collect();
        self.all_members()
            .filter(|(_, m)| m.is_subset(s))
            .filter(|(_, m)| {
                elems
                    .iter()
                    .all(|&t| m.iter().all(|x| m.contains(g.conj(t, x))))
            })
            .map(|(_, m)| m.clone())
            .collect()
    }

    pub fn export(&self) -> ClassTableExport {
        let k = self.len();
        let mut edges = Vec::new();
        let mut n_counts = Vec::new();
        for h in 0..k {
            for kk in 0..k {
                if self.n[h][kk] > 0 {
                    if h != kk {
                        edges.push((h, kk));
                    }
                    n_counts.push((h, kk, self.n[h][kk]));
                }
            }
        }
        ClassTableExport {
            classes: self
                .classes
                .iter()
                .map(|c| ClassRecord {
                    id: c.id,
                    name: c.name.clone(),
                    order: c.order,
                    normalizer_order: c.normalizer_order,
                    weyl_order: c.weyl_order(),
                    conjugates: c.members.len(),
                })
                .collect(),
            le_edges: edges,
            n_counts,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassRecord {
    pub id: usize,
    pub name: String,
    pub order: usize,
    pub normalizer_order: usize,
    pub weyl_order: usize,
    pub conjugates: usize,
}

/// Structured form of a [`SubgroupClassTable`].
#[derive(Clone, Debug, Serialize)]
pub struct ClassTableExport {
    pub classes: Vec<ClassRecord>,
    /// Strict subconjugacy pairs `(h, k)` with `(h) < (k)`.
    pub le_edges: Vec<(usize, usize)>,
    /// Nonzero `n(h, k)` as `(h, k, n)`.
    pub n_counts: Vec<(usize, usize, u32)>,
}

fn class_names(g: &FiniteGroup, classes: &[SubgroupClass]) -> Vec<String> {
    let s4 = [AtomicGroup::Symmetric(4)];
    let s4z2 = [AtomicGroup::Symmetric(4), AtomicGroup::Cyclic2];
    let z2 = [AtomicGroup::Cyclic2];
    if g.is_direct_product_of(&s4) {
        classes.iter().map(|c| s4_name(g, &c.rep, c.is_normal())).collect()
    } else if g.is_direct_product_of(&s4z2) {
        classes.iter().map(|c| s4z2_name(g, &c.rep)).collect()
    } else if g.is_direct_product_of(&z2) {
        classes
            .iter()
            .map(|c| if c.order == 1 { "Z1" } else { "Z2" }.to_string())
            .collect()
    } else {
        synthetic_names(classes)
    }
}

/// `H{order}_{k}`, with `k` ranking same-order classes by representative.
fn synthetic_names(classes: &[SubgroupClass]) -> Vec<String> {
    let mut idx: Vec<usize> = (0..classes.len()).collect();
    idx.sort_by(|&a, &b| (classes[a].order, &classes[a].rep).cmp(&(classes[b].order, &classes[b].rep)));
    let mut names = vec![String::new(); classes.len()];
    let mut k = 0;
    for (pos, &i) in idx.iter().enumerate() {
        if pos > 0 && classes[idx[pos - 1]].order == classes[i].order {
            k += 1;
        } else {
            k = 0;
        }
        names[i] = format!("H{}_{}", classes[i].order, k);
    }
    names
}

/// Name of an S4 subgroup given as a set of permutations of `0..4`.
fn s4_name_of_perms(perms: &[super::Perm], normal: bool) -> String {
    let order = perms.len();
    let has_transposition = perms.iter().any(|p| p.cycle_type() == [2, 1, 1]);
    let cyclic = perms.iter().any(|p| {
        let ct = p.cycle_type();
        let ord = ct.iter().fold(1, |a, &b| num_lcm(a, b));
        ord == order
    });
    match order {
        1 => "Z1",
        2 if has_transposition => "D1",
        2 => "Z2",
        3 => "Z3",
        4 if cyclic => "Z4",
        4 if normal => "V4",
        4 => "D2",
        6 => "D3",
        8 => "D4",
        12 => "A4",
        24 => "S4",
        _ => unreachable!("S4 has no subgroup of order {order}"),
    }
    .to_string()
}

fn num_lcm(a: usize, b: usize) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

fn s4_name(g: &FiniteGroup, rep: &ElemSet, normal: bool) -> String {
    let perms: Vec<_> = rep.iter().map(|a| g.element(a).clone()).collect();
    s4_name_of_perms(&perms, normal)
}

fn is_normal_in_s4(perms: &[super::Perm]) -> bool {
    let set: HashSet<&super::Perm> = perms.iter().collect();
    super::Perm::all(4).iter().all(|t| {
        let ti = t.inverse();
        perms.iter().all(|p| set.contains(&t.compose(p).compose(&ti)))
    })
}

/// Name of a subgroup of `S4 x Z2` from its `S4` projection, the part lying
/// over `+1`, and whether it contains `(e, -1)`.
fn s4z2_name(g: &FiniteGroup, rep: &ElemSet) -> String {
    let mut proj = Vec::new();
    let mut kernel = Vec::new();
    let mut has_minus = false;
    for a in rep.iter() {
        let p = g.factor_perm(a, 0);
        let minus = g.component(a, 1) == 1;
        if minus && p.is_identity() {
            has_minus = true;
        }
        if !minus {
            kernel.push(p.clone());
        }
        if !proj.contains(&p) {
            proj.push(p);
        }
    }
    let p_name = s4_name_of_perms(&proj, is_normal_in_s4(&proj));
    if has_minus {
        return format!("{p_name}p");
    }
    let n_name = s4_name_of_perms(&kernel, is_normal_in_s4(&kernel));
    if kernel.len() == proj.len() {
        return p_name;
    }
    let twisted = match (p_name.as_str(), n_name.as_str()) {
        ("Z2", "Z1") => "Z2m",
        ("D1", "Z1") => "D1z",
        ("V4", "Z2") => "V4m",
        ("D2", "Z2") => "D2z",
        ("D2", "D1") => "D2d",
        ("Z4", "Z2") => "Z4d",
        ("D3", "Z3") => "D3z",
        ("D4", "Z4") => "D4z",
        ("D4", "D2") => "D4d",
        ("D4", "V4") => "D4hd",
        ("S4", "A4") => "S4m",
        _ => unreachable!("no index-2 pair ({p_name}, {n_name}) in S4"),
    };
    twisted.to_string()
}
