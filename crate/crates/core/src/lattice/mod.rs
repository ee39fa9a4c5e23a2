//! Conjugacy classes of closed subgroups of `O(2) × K` with finite Weyl
//! group.
//!
//! Two families occur. Classes containing `SO(2)` are preimages of
//! subgroups of `O(2)/SO(2) × K` and are labelled by that finite group's
//! subgroup classes. Classes with finite head are always dihedral-headed, and
//! each one is the `f`-fold preimage `Ψ_f(P)` of a unique "primitive" class
//! `P` whose pure-rotation subgroup `P ∩ (SO(2) × e)` is trivial; `f` is the
//! order of that subgroup. Primitives have heads `D_n` with `n` bounded by
//! the element orders of `K`, so they form a finite list, and the catalog
//! holds every `Ψ_f(P)` for `f` up to a fold bound.
//!
//! Containment counts reduce to primitives:
//! `n(Ψ_a P, Ψ_b Q) = n(P, Ψ_{b/a} Q)` when `a | b` and `0` otherwise.

mod ambient;

pub use ambient::Ambient;

use std::collections::{HashMap, HashSet};
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::ElemSet;
use crate::o2::{DElem, O2Closed, Quotient};

/// Primitive dihedral-headed class: pure-rotation subgroup trivial.
#[derive(Clone, Debug)]
pub struct Primitive {
    /// Head is the standard `D_n`.
    pub n: u32,
    /// Canonical representative at modulus `2n`.
    pub set: ElemSet,
    /// All conjugates with the standard head.
    pub conjugates: Vec<ElemSet>,
    pub order: u64,
    pub weyl: u64,
    /// Left kernel `S ∩ (D_n × e)` is a reflection group `D_1` (else trivial).
    pub dihedral_kernel: bool,
    pub k_class: usize,
    pub r_class: usize,
    pub rot_class: usize,
    pub zk_class: usize,
    pub quotient: Quotient,
    /// Disambiguation suffix, empty unless two primitives share a name.
    pub suffix: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ClassKind {
    /// Contains `SO(2)`; indexed by a subgroup class of `O(2)/SO(2) × K`.
    Radial { zk_class: usize },
    /// `Ψ_fold(primitive)`.
    Dihedral { prim: usize, fold: u32 },
}

/// Conjugacy class of a closed subgroup of `O(2) × K` in amalgamated form
/// `H ^Z×_L^R K'`.
#[derive(Clone, Debug)]
pub struct ProductClass {
    pub id: usize,
    pub name: String,
    pub kind: ClassKind,
    pub head: O2Closed,
    pub kernel_left: O2Closed,
    /// Class of `K'` in the subgroup table of `K`.
    pub k_class: usize,
    /// Class of `R` in the subgroup table of `K`.
    pub kernel_right: usize,
    pub quotient: Quotient,
    pub weyl_order: u64,
    /// Order of the subgroup, `None` when it contains `SO(2)`.
    pub order: Option<u64>,
}

impl ProductClass {
    pub fn is_radial(&self) -> bool {
        matches!(self.kind, ClassKind::Radial { .. })
    }

    pub fn fold(&self) -> u32 {
        match self.kind {
            ClassKind::Radial { .. } => 0,
            ClassKind::Dihedral { fold, .. } => fold,
        }
    }

    /// Rotational order of the head (`0` for `SO(2)`/`O(2)` heads).
    pub fn rotational_order(&self) -> u32 {
        match self.head {
            O2Closed::D(n) | O2Closed::Z(n) => n,
            _ => 0,
        }
    }
}

/// Catalog of all finite-Weyl classes up to a fold bound, with containment
/// counts.
#[derive(Debug)]
pub struct Catalog {
    /// Distinguishes catalogs so elements of different rings are not mixed.
    uid: u64,
    pub amb: Ambient,
    pub fold_bound: u32,
    pub primitives: Vec<Primitive>,
    classes: Vec<ProductClass>,
    /// `up[l]`: `(h, n(l, h))` for every `h ≥ l`, sorted by `h`.
    up: Vec<Vec<(u32, u32)>>,
    /// Class ids ordered so that larger classes come first.
    topo: Vec<usize>,
    by_name: HashMap<String, usize>,
    by_kind: HashMap<ClassKind, usize>,
    prim_lookup: HashMap<(u32, ElemSet), usize>,
}

fn transversal(amb: &Ambient, kp: &ElemSet, r: &ElemSet) -> Vec<usize> {
    let mut covered = ElemSet::new(amb.k_order());
    let mut reps = Vec::new();
    for x in kp.iter() {
        if covered.contains(x) {
            continue;
        }
        reps.push(x);
        for y in r.iter() {
            covered.insert(amb.k.mul(x, y));
        }
    }
    reps
}

struct RawPrimitive {
    n: u32,
    conjugates: Vec<ElemSet>,
    dihedral_kernel: bool,
}

/// Goursat enumeration of primitive classes.
fn enumerate_primitives(amb: &Ambient) -> Vec<RawPrimitive> {
    let max_n = (0..amb.k_order()).map(|a| amb.k.element_order(a)).max().unwrap_or(1) as u32;
    let mut out = Vec::new();
    for n in 1..=max_n {
        let c = amb.codec(n);
        let mut seen: HashSet<ElemSet> = HashSet::new();
        let mut z_options: Vec<Option<DElem>> = vec![None];
        if n <= 2 {
            z_options.push(Some(DElem::reflection(0)));
        }
        if n == 2 {
            z_options.push(Some(DElem::reflection(2)));
        }
        for z in z_options {
            let l_order = 2 * n as usize / if z.is_some() { 2 } else { 1 };
            for kc in &amb.k_table.classes {
                let kp = &kc.rep;
                if kp.len() % l_order != 0 {
                    continue;
                }
                for r in amb.k_table.normal_subgroups_of(&amb.k, kp) {
                    if r.len() * l_order != kp.len() {
                        continue;
                    }
                    let reps = transversal(amb, kp, &r);
                    for &x in &reps {
                        for &y in &reps {
                            let mut gens = vec![
                                c.encode(DElem::rot(2 % c.q), x),
                                c.encode(DElem::reflection(0), y),
                            ];
                            if let Some(zr) = z {
                                gens.push(c.encode(zr, 0));
                            }
                            gens.extend(r.iter().map(|k| c.encode(DElem::IDENTITY, k)));
                            let s = amb.closure_codes(&c, &gens);
                            if s.len() != 2 * n as usize * r.len() || amb.k_projection(&c, &s) != *kp {
                                continue;
                            }
                            if seen.contains(&s) {
                                continue;
                            }
                            let conjugates = amb.conjugates(n, &s);
                            seen.extend(conjugates.iter().cloned());
                            out.push(RawPrimitive {
                                n,
                                conjugates,
                                dihedral_kernel: z.is_some(),
                            });
                        }
                    }
                }
            }
        }
    }
    out
}

/// `H ^Z ×_L ^R K'`, with `Z`, `R` dropped when trivial and the whole
/// amalgamation dropped when `L` is trivial.
pub fn format_amalgamated(head: &str, kernel_left: Option<&str>, quotient: Option<&str>, kernel_right: Option<&str>, k: &str) -> String {
    let Some(l) = quotient else {
        return format!("{head} x {k}");
    };
    let mut s = head.to_string();
    if let Some(z) = kernel_left {
        s.push_str(&format!("^{{{z}}}"));
    }
    s.push_str(&format!(" x_{{{l}}}"));
    if let Some(r) = kernel_right {
        s.push_str(&format!("^{{{r}}}"));
    }
    s.push(' ');
    s.push_str(k);
    s
}

impl Catalog {
    /// Builds the catalog for `O(2) × K`, holding dihedral classes up to
    /// `fold_bound` folds and all classes containing `SO(2)`.
    pub fn build(amb: Ambient, fold_bound: u32) -> Result<Catalog> {
        if fold_bound < 1 {
            return Err(Error::OutOfRange("fold bound must be at least 1".into()));
        }
        let raw = enumerate_primitives(&amb);
        let ko = amb.k_order() as u64;
        let mut primitives: Vec<Primitive> = raw
            .into_iter()
            .map(|r| {
                let n = r.n;
                let c = amb.codec(n);
                let set = r.conjugates[0].clone();
                let order = set.len() as u64;
                let weyl = 4 * n as u64 * ko / (r.conjugates.len() as u64 * order);
                let kt = &amb.k_table;
                let quotient = match (r.dihedral_kernel, n) {
                    (false, n) => Quotient::D(n),
                    (true, 1) => Quotient::Z(1),
                    (true, _) => Quotient::Z(2),
                };
                Primitive {
                    n,
                    k_class: kt.class_of(&amb.k_projection(&c, &set)).expect("projection is a subgroup"),
                    r_class: kt.class_of(&amb.right_kernel(&c, &set)).expect("kernel is a subgroup"),
                    rot_class: kt.class_of(&amb.rotation_part(&c, &set)).expect("rotation part is a subgroup"),
                    zk_class: amb.zk_table.class_of(&amb.zk_image(&c, &set)).expect("image is a subgroup"),
                    set,
                    conjugates: r.conjugates,
                    order,
                    weyl,
                    dihedral_kernel: r.dihedral_kernel,
                    quotient,
                    suffix: String::new(),
                }
            })
            .collect();

        // Names, disambiguated where the amalgamated data does not separate
        // classes.
        let base: Vec<String> = primitives.iter().map(|p| primitive_name(&amb, p, 1)).collect();
        let mut groups: HashMap<&str, Vec<usize>> = HashMap::new();
        for (i, b) in base.iter().enumerate() {
            groups.entry(b.as_str()).or_default().push(i);
        }
        let mut suffixes = vec![String::new(); primitives.len()];
        for idx in groups.values().filter(|v| v.len() > 1) {
            let mut rot_groups: HashMap<usize, Vec<usize>> = HashMap::new();
            for &i in idx {
                rot_groups.entry(primitives[i].rot_class).or_default().push(i);
            }
            for (rot, members) in rot_groups {
                let rot_name = &amb.k_table.classes[rot].name;
                for (pos, &i) in members.iter().enumerate() {
                    suffixes[i] = if members.len() == 1 {
                        format!(" [rot:{rot_name}]")
                    } else {
                        format!(" [rot:{rot_name}#{pos}]")
                    };
                }
            }
        }
        for (p, s) in primitives.iter_mut().zip(suffixes) {
            p.suffix = s;
        }
        // deterministic primitive order: by head, order, then name
        let mut keyed: Vec<(u32, u64, String, Primitive)> = primitives
            .into_iter()
            .map(|p| {
                let name = primitive_name(&amb, &p, 1);
                (p.n, p.order, name, p)
            })
            .collect();
        keyed.sort_by(|a, b| (a.0, a.1, &a.2).cmp(&(b.0, b.1, &b.2)));
        let primitives: Vec<Primitive> = keyed.into_iter().map(|x| x.3).collect();

        let mut prim_lookup = HashMap::new();
        for (i, p) in primitives.iter().enumerate() {
            for s in &p.conjugates {
                prim_lookup.insert((p.n, s.clone()), i);
            }
        }

        // classes
        let mut classes = Vec::new();
        for zc in &amb.zk_table.classes {
            classes.push(radial_class(&amb, zc.id));
        }
        for (pi, p) in primitives.iter().enumerate() {
            for f in 1..=fold_bound {
                classes.push(dihedral_class(&amb, pi, p, f));
            }
        }
        let head_rank = |c: &ProductClass| match c.head {
            O2Closed::O2 => 0,
            O2Closed::SO2 => 1,
            _ => 2,
        };
        classes.sort_by(|a, b| {
            let ka = (head_rank(a), std::cmp::Reverse(a.rotational_order()), std::cmp::Reverse(radial_size(&amb, a)));
            let kb = (head_rank(b), std::cmp::Reverse(b.rotational_order()), std::cmp::Reverse(radial_size(&amb, b)));
            ka.cmp(&kb).then_with(|| a.name.cmp(&b.name))
        });
        let mut by_name = HashMap::new();
        let mut by_kind = HashMap::new();
        for (i, c) in classes.iter_mut().enumerate() {
            c.id = i;
            if by_name.insert(c.name.clone(), i).is_some() {
                return Err(Error::Invalid(format!("class name `{}` is not unique", c.name)));
            }
            by_kind.insert(c.kind, i);
        }

        let mut topo: Vec<usize> = (0..classes.len()).collect();
        topo.sort_by_key(|&i| {
            let c = &classes[i];
            match c.kind {
                ClassKind::Radial { zk_class } => (0, std::cmp::Reverse(amb.zk_table.classes[zk_class].order as u64), i),
                ClassKind::Dihedral { .. } => (1, std::cmp::Reverse(c.order.unwrap()), i),
            }
        });

        static NEXT_UID: AtomicU64 = AtomicU64::new(1);
        let mut catalog = Catalog {
            uid: NEXT_UID.fetch_add(1, Ordering::Relaxed),
            amb,
            fold_bound,
            primitives,
            classes,
            up: Vec::new(),
            topo,
            by_name,
            by_kind,
            prim_lookup,
        };
        catalog.up = catalog.containment_counts();
        Ok(catalog)
    }

    pub fn from_descriptor(k: &str, fold_bound: u32) -> Result<Catalog> {
        Catalog::build(Ambient::from_descriptor(k)?, fold_bound)
    }

    /// `n(P, Ψ_c Q)` for every pair of primitives and `c ≤ fold_bound`,
    /// as `table[p][c - 1] = [(q, n)]`.
    fn primitive_counts(&self) -> Vec<Vec<Vec<(usize, u32)>>> {
        let amb = &self.amb;
        let prims = &self.primitives;
        let folds: Vec<u32> = (1..=self.fold_bound).collect();
        // conjugates of Ψ_c Q with standard head are the folds of Q's conjugates
        let folded: Vec<Vec<Vec<ElemSet>>> = folds
            .iter()
            .map(|&c| {
                prims
                    .par_iter()
                    .map(|q| q.conjugates.iter().map(|s| amb.fold_set(q.n, s, c)).collect())
                    .collect()
            })
            .collect();
        prims
            .par_iter()
            .map(|p| {
                let mut embeds: HashMap<u32, ElemSet> = HashMap::new();
                folds
                    .iter()
                    .map(|&c| {
                        let mut row = Vec::new();
                        for (qi, q) in prims.iter().enumerate() {
                            let big = q.n * c;
                            if big % p.n != 0 || (c as u64 * q.order) % p.order != 0 {
                                continue;
                            }
                            if !amb.k_table.le(p.k_class, q.k_class) || !amb.zk_table.le(p.zk_class, q.zk_class) {
                                continue;
                            }
                            let e = embeds.entry(big).or_insert_with(|| amb.embed_set(p.n, &p.set, big));
                            let count = folded[(c - 1) as usize][qi].iter().filter(|x| e.is_subset(x)).count() as u32;
                            if count > 0 {
                                row.push((qi, count));
                            }
                        }
                        row
                    })
                    .collect()
            })
            .collect()
    }

    fn containment_counts(&self) -> Vec<Vec<(u32, u32)>> {
        let pc = self.primitive_counts();
        let zt = &self.amb.zk_table;
        let radial: Vec<(usize, usize)> = self
            .classes
            .iter()
            .filter_map(|c| match c.kind {
                ClassKind::Radial { zk_class } => Some((c.id, zk_class)),
                _ => None,
            })
            .collect();
        self.classes
            .iter()
            .map(|c| {
                let mut row: Vec<(u32, u32)> = Vec::new();
                let zl = match c.kind {
                    ClassKind::Radial { zk_class } => zk_class,
                    ClassKind::Dihedral { prim, fold } => {
                        let mut b = fold;
                        while b <= self.fold_bound {
                            for &(q, n) in &pc[prim][(b / fold - 1) as usize] {
                                let id = self.by_kind[&ClassKind::Dihedral { prim: q, fold: b }];
                                row.push((id as u32, n));
                            }
                            b += fold;
                        }
                        self.primitives[prim].zk_class
                    }
                };
                for &(id, zr) in &radial {
                    let n = zt.n_count(zl, zr).expect("valid class ids");
                    if n > 0 {
                        row.push((id as u32, n));
                    }
                }
                row.sort_unstable();
                row
            })
            .collect()
    }

    pub fn uid(&self) -> u64 {
        self.uid
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[ProductClass] {
        &self.classes
    }

    pub fn class(&self, id: usize) -> Result<&ProductClass> {
        self.classes.get(id).ok_or(Error::InvalidClass(id))
    }

    pub fn name(&self, id: usize) -> &str {
        &self.classes[id].name
    }

    /// The class of the whole group `O(2) × K`.
    pub fn top(&self) -> usize {
        0
    }

    pub fn by_name(&self, name: &str) -> Result<usize> {
        self.by_name
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownClassName(name.to_string()))
    }

    pub fn id_of(&self, kind: ClassKind) -> Option<usize> {
        self.by_kind.get(&kind).copied()
    }

    pub fn weyl(&self, id: usize) -> u64 {
        self.classes[id].weyl_order
    }

    /// Classes ordered so that every class precedes the classes below it.
    pub fn topological_order(&self) -> &[usize] {
        &self.topo
    }

    /// `(h, n(l, h))` for every `h` with `(l) ≤ (h)`.
    pub fn up(&self, l: usize) -> &[(u32, u32)] {
        &self.up[l]
    }

    /// Number of subgroups in class `h` containing a fixed member of `l`.
    pub fn n_count(&self, l: usize, h: usize) -> Result<u32> {
        self.class(l)?;
        self.class(h)?;
        Ok(self.up[l]
            .binary_search_by_key(&(h as u32), |x| x.0)
            .map(|i| self.up[l][i].1)
            .unwrap_or(0))
    }

    pub fn le(&self, l: usize, h: usize) -> bool {
        self.n_count(l, h).map(|n| n > 0).unwrap_or(false)
    }

    /// Class of `ψ_ν^{-1}(H)`.
    pub fn fold_class(&self, id: usize, nu: u32) -> Result<usize> {
        if nu == 0 {
            return Err(Error::OutOfRange("fold factor must be positive".into()));
        }
        match self.class(id)?.kind {
            ClassKind::Radial { .. } => Ok(id),
            ClassKind::Dihedral { prim, fold } => {
                let f = fold * nu;
                if f > self.fold_bound {
                    return Err(Error::CatalogTooSmall {
                        required: f,
                        available: self.fold_bound,
                    });
                }
                Ok(self.by_kind[&ClassKind::Dihedral { prim, fold: f }])
            }
        }
    }

    /// Standard representative of a finite-headed class: head `D_N` and the
    /// element set at modulus `2N`.
    pub fn finite_rep(&self, id: usize) -> Option<(u32, ElemSet)> {
        match self.classes[id].kind {
            ClassKind::Radial { .. } => None,
            ClassKind::Dihedral { prim, fold } => {
                let p = &self.primitives[prim];
                Some((p.n * fold, self.amb.fold_set(p.n, &p.set, fold)))
            }
        }
    }

    /// Class of a standard-headed finite subgroup given at modulus `2N`.
    pub fn locate_finite(&self, big_n: u32, set: &ElemSet) -> Option<usize> {
        let c = self.amb.codec(big_n);
        let f = self.amb.pure_rotation_order(&c, set);
        if f == 0 || big_n % f != 0 {
            return None;
        }
        let prim_set = self.amb.unfold_set(big_n, set, f);
        let prim = *self.prim_lookup.get(&(big_n / f, prim_set))?;
        self.id_of(ClassKind::Dihedral { prim, fold: f })
    }

    /// Class of the preimage of a subgroup of `O(2)/SO(2) × K`.
    pub fn locate_radial(&self, zs: &ElemSet) -> Option<usize> {
        let zk_class = self.amb.zk_table.class_of(zs)?;
        self.id_of(ClassKind::Radial { zk_class })
    }

    /// Whether two standard-headed finite subgroups are conjugate in `O(2) × K`.
    pub fn conjugate_subgroups(&self, n_a: u32, a: &ElemSet, n_b: u32, b: &ElemSet) -> bool {
        n_a == n_b && a.len() == b.len() && self.amb.canonical(n_a, a) == self.amb.canonical(n_b, b)
    }

    /// Name of the family `Ψ_m(H)`, `m ∈ ℕ`, with the fold written
    /// symbolically, e.g. `D(6m)^{Z(m)} x_{D6} D3p`. `None` for radial
    /// classes, which folding fixes.
    pub fn family_template(&self, id: usize) -> Option<String> {
        let ClassKind::Dihedral { prim, fold } = self.classes.get(id)?.kind else {
            return None;
        };
        let p = &self.primitives[prim];
        let kt = &self.amb.k_table;
        let z = symbolic(if p.dihedral_kernel { 'D' } else { 'Z' }, fold);
        let r = &kt.classes[p.r_class];
        let l_name = p.quotient.to_string();
        let name = format_amalgamated(
            &symbolic('D', p.n * fold),
            Some(&z),
            (!p.quotient.is_trivial()).then_some(l_name.as_str()),
            (r.order > 1).then_some(r.name.as_str()),
            &kt.classes[p.k_class].name,
        );
        Some(format!("{name}{}", p.suffix))
    }

    pub fn export(&self) -> CatalogExport {
        CatalogExport {
            k: self.amb.k.descriptor().to_string(),
            fold_bound: self.fold_bound,
            classes: self
                .classes
                .iter()
                .map(|c| CatalogRecord {
                    id: c.id,
                    name: c.name.clone(),
                    head: c.head.to_string(),
                    kernel_left: c.kernel_left.to_string(),
                    quotient: c.quotient.to_string(),
                    k_class: self.amb.k_table.classes[c.k_class].name.clone(),
                    kernel_right: self.amb.k_table.classes[c.kernel_right].name.clone(),
                    weyl_order: c.weyl_order,
                    order: c.order,
                    fold: c.fold(),
                })
                .collect(),
        }
    }
}

fn radial_size(amb: &Ambient, c: &ProductClass) -> u64 {
    match c.kind {
        ClassKind::Radial { zk_class } => amb.zk_table.classes[zk_class].order as u64,
        ClassKind::Dihedral { .. } => c.order.unwrap_or(0),
    }
}

fn radial_class(amb: &Ambient, zk_class: usize) -> ProductClass {
    let zc = &amb.zk_table.classes[zk_class];
    let (proj, kernel, has_reflection) = amb.zk_k_part(&zc.rep);
    let kt = &amb.k_table;
    let k_class = kt.class_of(&proj).expect("projection is a subgroup");
    let r_class = kt.class_of(&kernel).expect("kernel is a subgroup");
    let k_name = &kt.classes[k_class].name;
    let (head, kernel_left, quotient, name) = if !has_reflection {
        (O2Closed::SO2, O2Closed::SO2, Quotient::Z(1), format_amalgamated("SO(2)", None, None, None, k_name))
    } else if proj == kernel {
        (O2Closed::O2, O2Closed::O2, Quotient::Z(1), format_amalgamated("O(2)", None, None, None, k_name))
    } else {
        let r = &kt.classes[r_class];
        let r_name = (r.order > 1).then_some(r.name.as_str());
        (
            O2Closed::O2,
            O2Closed::SO2,
            Quotient::Z(2),
            format_amalgamated("O(2)", Some("SO(2)"), Some("Z2"), r_name, k_name),
        )
    };
    let weyl = zc.weyl_order() as u64;
    ProductClass {
        id: 0,
        name,
        kind: ClassKind::Radial { zk_class },
        head,
        kernel_left,
        k_class,
        kernel_right: r_class,
        quotient,
        weyl_order: weyl,
        order: None,
    }
}

fn left_kernel(p: &Primitive, fold: u32) -> O2Closed {
    if p.dihedral_kernel {
        O2Closed::D(fold)
    } else {
        O2Closed::Z(fold)
    }
}

fn primitive_name(amb: &Ambient, p: &Primitive, fold: u32) -> String {
    let kt = &amb.k_table;
    let head = O2Closed::D(p.n * fold).to_string();
    let z = left_kernel(p, fold);
    let z_name = z.to_string();
    let r = &kt.classes[p.r_class];
    let l_name = p.quotient.to_string();
    let name = format_amalgamated(
        &head,
        (!z.is_trivial()).then_some(z_name.as_str()),
        (!p.quotient.is_trivial()).then_some(l_name.as_str()),
        (r.order > 1).then_some(r.name.as_str()),
        &kt.classes[p.k_class].name,
    );
    format!("{name}{}", p.suffix)
}

fn symbolic(prefix: char, k: u32) -> String {
    if k == 1 {
        format!("{prefix}(m)")
    } else {
        format!("{prefix}({k}m)")
    }
}

fn dihedral_class(amb: &Ambient, prim: usize, p: &Primitive, fold: u32) -> ProductClass {
    ProductClass {
        id: 0,
        name: primitive_name(amb, p, fold),
        kind: ClassKind::Dihedral { prim, fold },
        head: O2Closed::D(p.n * fold),
        kernel_left: left_kernel(p, fold),
        k_class: p.k_class,
        kernel_right: p.r_class,
        quotient: p.quotient,
        weyl_order: p.weyl,
        order: Some(p.order * fold as u64),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CatalogRecord {
    pub id: usize,
    pub name: String,
    pub head: String,
    pub kernel_left: String,
    pub quotient: String,
    pub k_class: String,
    pub kernel_right: String,
    pub weyl_order: u64,
    pub order: Option<u64>,
    pub fold: u32,
}

/// Structured form of a [`Catalog`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CatalogExport {
    pub k: String,
    pub fold_bound: u32,
    pub classes: Vec<CatalogRecord>,
}
