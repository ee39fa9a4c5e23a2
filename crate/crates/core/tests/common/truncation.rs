//! Brute-force oracle: finite subgroups of `O(2) × S4 × Z2` whose head is a
//! dihedral group of order dividing 24 all live in `D_24 × K`, and their
//! conjugacy in `O(2) × K` is conjugacy under `D_48 × K`. Subgroups are
//! enumerated here from Goursat data with plain bitsets and compared with the
//! catalog: classes, orders, Weyl orders, containment counts, and orbit
//! types of `W_m ⊗ U` for `m = 1, 2` (whose isotropy groups all have
//! rotational order dividing 24).

use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::OnceLock;

use orbitdeg::group::FiniteGroup;
use orbitdeg::lattice::Catalog;
use orbitdeg::representations::{orbit_types, IrrDescriptor, Sign};

const Q: usize = 48; // D_48 turns; D_24 uses the even ones
const KO: usize = 48;
const SIZE: usize = 2 * Q * KO;

type Bits = Vec<u64>;

fn bits_new(n: usize) -> Bits {
    vec![0; n.div_ceil(64)]
}
fn set(b: &mut Bits, x: usize) {
    b[x / 64] |= 1 << (x % 64);
}
fn has(b: &Bits, x: usize) -> bool {
    b[x / 64] >> (x % 64) & 1 == 1
}
fn members(b: &Bits) -> Vec<usize> {
    let mut out = Vec::new();
    for (i, &w) in b.iter().enumerate() {
        let mut w = w;
        while w != 0 {
            let t = w.trailing_zeros() as usize;
            out.push(i * 64 + t);
            w &= w - 1;
        }
    }
    out
}

/// `ρ^t κ^r`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
struct D {
    t: usize,
    r: bool,
}

fn dmul(a: D, b: D) -> D {
    let t = if a.r { (a.t + Q - b.t) % Q } else { (a.t + b.t) % Q };
    D { t, r: a.r != b.r }
}
fn dinv(a: D) -> D {
    if a.r {
        a
    } else {
        D { t: (Q - a.t) % Q, r: false }
    }
}
fn dcode(a: D) -> usize {
    a.t * 2 + a.r as usize
}
fn ddecode(c: usize) -> D {
    D { t: c / 2, r: c % 2 == 1 }
}

struct Oracle {
    kmul: Vec<Vec<usize>>,
    kinv: Vec<usize>,
}

impl Oracle {
    fn new(k: &FiniteGroup) -> Oracle {
        let els = k.elements();
        let index: HashMap<_, _> = els.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let kmul: Vec<Vec<usize>> = els
            .iter()
            .map(|a| els.iter().map(|b| index[&a.compose(b)]).collect())
            .collect();
        let kinv = (0..KO).map(|a| (0..KO).find(|&b| kmul[a][b] == 0).unwrap()).collect();
        Oracle { kmul, kinv }
    }

    fn mul(&self, x: usize, y: usize) -> usize {
        let (dx, kx) = (ddecode(x / KO), x % KO);
        let (dy, ky) = (ddecode(y / KO), y % KO);
        dcode(dmul(dx, dy)) * KO + self.kmul[kx][ky]
    }

    fn inv(&self, x: usize) -> usize {
        dcode(dinv(ddecode(x / KO))) * KO + self.kinv[x % KO]
    }

    fn closure(&self, gens: &[usize]) -> Bits {
        let mut b = bits_new(SIZE);
        let mut list = vec![0usize];
        set(&mut b, 0);
        let mut i = 0;
        while i < list.len() {
            for &g in gens {
                let y = self.mul(list[i], g);
                if !has(&b, y) {
                    set(&mut b, y);
                    list.push(y);
                }
            }
            i += 1;
        }
        b
    }

    fn conj(&self, g: usize, h: &[usize]) -> Bits {
        let gi = self.inv(g);
        let mut b = bits_new(SIZE);
        for &x in h {
            set(&mut b, self.mul(self.mul(gi, x), g));
        }
        b
    }
}

/// All subgroups of a group given as a list of element codes, by repeatedly
/// adjoining one element.
fn all_subgroups(o: &Oracle, elements: &[usize]) -> Vec<Bits> {
    let mut seen: HashSet<Bits> = HashSet::new();
    let triv = o.closure(&[]);
    let mut queue = vec![triv.clone()];
    seen.insert(triv);
    while let Some(h) = queue.pop() {
        let mem = members(&h);
        for &g in elements {
            if has(&h, g) {
                continue;
            }
            let mut gens = mem.clone();
            gens.push(g);
            let b = o.closure(&gens);
            if seen.insert(b.clone()) {
                queue.push(b);
            }
        }
    }
    let mut v: Vec<Bits> = seen.into_iter().collect();
    v.sort();
    v
}

fn is_subset(a: &Bits, b: &Bits) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

fn normalizer(o: &Oracle, h: &Bits, ambient: &[usize]) -> Vec<usize> {
    let mem = members(h);
    ambient.iter().copied().filter(|&g| &o.conj(g, &mem) == h).collect()
}

fn generating_set(o: &Oracle, els: &[usize]) -> Vec<usize> {
    let target = els.len();
    let mut gens = Vec::new();
    let mut cur = o.closure(&[]);
    for &x in els {
        if !has(&cur, x) {
            gens.push(x);
            cur = o.closure(&gens);
            if members(&cur).len() == target {
                break;
            }
        }
    }
    gens
}

/// Isomorphisms `A1/A0 → B1/B0`, as maps from coset keys to coset keys.
fn quotient_isos(o: &Oracle, a1: &[usize], a0: &Bits, b1: &[usize], b0: &Bits) -> Vec<HashMap<usize, usize>> {
    let key = |x: usize, n: &Bits| -> usize { members(n).iter().map(|&y| o.mul(x, y)).min().unwrap() };
    let qa: BTreeSet<usize> = a1.iter().map(|&x| key(x, a0)).collect();
    let qb: BTreeSet<usize> = b1.iter().map(|&x| key(x, b0)).collect();
    if qa.len() != qb.len() {
        return Vec::new();
    }
    let qa: Vec<usize> = qa.into_iter().collect();
    let qb: Vec<usize> = qb.into_iter().collect();
    let qmul_a = |x: usize, y: usize| key(o.mul(x, y), a0);
    let qmul_b = |x: usize, y: usize| key(o.mul(x, y), b0);
    // generators of A1/A0
    let mut gens = Vec::new();
    let mut span: HashSet<usize> = [key(0, a0)].into();
    for &x in &qa {
        if span.contains(&x) {
            continue;
        }
        gens.push(x);
        let mut list: Vec<usize> = span.iter().copied().collect();
        let mut i = 0;
        while i < list.len() {
            for &g in &gens {
                let y = qmul_a(list[i], g);
                if span.insert(y) {
                    list.push(y);
                }
            }
            i += 1;
        }
        if span.len() == qa.len() {
            break;
        }
    }
    let id_b = key(0, b0);
    let mut out = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    loop {
        let imgs: Vec<usize> = choice.iter().map(|&i| qb[i]).collect();
        let mut map: HashMap<usize, usize> = [(key(0, a0), id_b)].into();
        let mut list = vec![key(0, a0)];
        let mut ok = true;
        let mut i = 0;
        'ext: while i < list.len() {
            for (g, &img) in gens.iter().zip(&imgs) {
                let y = qmul_a(list[i], *g);
                let iy = qmul_b(map[&list[i]], img);
                match map.get(&y) {
                    Some(&v) if v != iy => {
                        ok = false;
                        break 'ext;
                    }
                    Some(_) => {}
                    None => {
                        map.insert(y, iy);
                        list.push(y);
                    }
                }
            }
            i += 1;
        }
        if ok {
            let image: HashSet<usize> = map.values().copied().collect();
            let hom = qa.iter().all(|&x| qa.iter().all(|&y| map[&qmul_a(x, y)] == qmul_b(map[&x], map[&y])));
            if image.len() == qa.len() && hom {
                out.push(map);
            }
        }
        // next choice
        let mut p = 0;
        loop {
            if p == choice.len() {
                return out;
            }
            choice[p] += 1;
            if choice[p] < qb.len() {
                break;
            }
            choice[p] = 0;
            p += 1;
        }
    }
}

struct OracleClass {
    rep: Bits,
    order: usize,
    /// `|N_{O(2)×K}(H)|`.
    normalizer: usize,
    /// Head `D_n`.
    n: usize,
}

struct Truncation {
    o: Oracle,
    classes: Vec<OracleClass>,
    cat: Catalog,
    /// Oracle class index → catalog class id.
    to_cat: Vec<usize>,
}

fn d_el(t: usize, r: bool) -> usize {
    dcode(D { t, r }) * KO
}

fn truncation() -> &'static Truncation {
    static T: OnceLock<Truncation> = OnceLock::new();
    T.get_or_init(|| {
        let k = FiniteGroup::from_descriptor("S4*Z2").unwrap();
        let o = Oracle::new(&k);
        let d24: Vec<usize> = (0..Q).step_by(2).flat_map(|t| [d_el(t, false), d_el(t, true)]).collect();
        let d48: Vec<usize> = (0..Q).flat_map(|t| [d_el(t, false), d_el(t, true)]).collect();
        let kel: Vec<usize> = (0..KO).collect();

        // heads: subgroups of D_24 containing a reflection, up to D_48-conjugacy
        let heads_all: Vec<Bits> = all_subgroups(&o, &d24)
            .into_iter()
            .filter(|h| members(h).iter().any(|&x| ddecode(x / KO).r))
            .collect();
        let mut heads: Vec<Bits> = Vec::new();
        for h in &heads_all {
            let mem = members(h);
            if !heads.iter().any(|r| d48.iter().any(|&g| &o.conj(g, &mem) == r)) {
                heads.push(h.clone());
            }
        }
        let d24_subs = all_subgroups(&o, &d24);
        let k_subs = all_subgroups(&o, &kel);
        let mut k_reps: Vec<Bits> = Vec::new();
        for h in &k_subs {
            let mem = members(h);
            if !k_reps.iter().any(|r| kel.iter().any(|&g| &o.conj(g, &mem) == r)) {
                k_reps.push(h.clone());
            }
        }
        assert_eq!(k_reps.len(), 33);

        let mut classes = Vec::new();
        for a1 in &heads {
            let a1m = members(a1);
            let na = normalizer(&o, a1, &d48);
            let na_gens = generating_set(&o, &na);
            let a_normals: Vec<&Bits> = d24_subs
                .iter()
                .filter(|s| is_subset(s, a1) && a1m.iter().all(|&g| &o.conj(g, &members(s)) == *s))
                .collect();
            for b1 in &k_reps {
                let b1m = members(b1);
                let nb = normalizer(&o, b1, &kel);
                let nb_gens = generating_set(&o, &nb);
                let b_normals: Vec<&Bits> = k_subs
                    .iter()
                    .filter(|s| is_subset(s, b1) && b1m.iter().all(|&g| &o.conj(g, &members(s)) == *s))
                    .collect();
                let mut found: HashSet<Bits> = HashSet::new();
                let mut subs = Vec::new();
                for a0 in &a_normals {
                    for b0 in &b_normals {
                        if a1m.len() * members(b0).len() != b1m.len() * members(a0).len() {
                            continue;
                        }
                        for iso in quotient_isos(&o, &a1m, a0, &b1m, b0) {
                            let ka = |x: usize| members(a0).iter().map(|&y| o.mul(x, y)).min().unwrap();
                            let kb = |x: usize| members(b0).iter().map(|&y| o.mul(x, y)).min().unwrap();
                            let kbs: HashMap<usize, usize> = b1m.iter().map(|&b| (b, kb(b))).collect();
                            let mut h = bits_new(SIZE);
                            for &a in &a1m {
                                let target = iso[&ka(a)];
                                for &b in &b1m {
                                    if kbs[&b] == target {
                                        // a is a D-code times KO, b a K index
                                        set(&mut h, a + b);
                                    }
                                }
                            }
                            if found.insert(h.clone()) {
                                subs.push(h);
                            }
                        }
                    }
                }
                // orbits under N(A1) x N(B1)
                let gens: Vec<usize> = na_gens.iter().copied().chain(nb_gens.iter().copied()).collect();
                let mut visited: HashSet<Bits> = HashSet::new();
                for h in subs {
                    if visited.contains(&h) {
                        continue;
                    }
                    let mut orbit = vec![h.clone()];
                    visited.insert(h.clone());
                    let mut i = 0;
                    while i < orbit.len() {
                        let mem = members(&orbit[i]);
                        for &g in &gens {
                            let c = o.conj(g, &mem);
                            if visited.insert(c.clone()) {
                                orbit.push(c);
                            }
                        }
                        i += 1;
                    }
                    let order = members(&h).len();
                    let n = a1m.iter().filter(|&&x| !ddecode(x / KO).r).count();
                    classes.push(OracleClass {
                        rep: h,
                        order,
                        normalizer: na.len() * nb.len() / orbit.len(),
                        n,
                    });
                }
            }
        }

        let cat = Catalog::from_descriptor("S4*Z2", 24).unwrap();
        let to_cat = classes
            .iter()
            .map(|c| {
                let (n, std) = standardise(&o, c);
                cat.locate_finite(n as u32, &std).expect("oracle class is in the catalog")
            })
            .collect();
        Truncation { o, classes, cat, to_cat }
    })
}

/// Conjugate so that the head is the standard `D_n` and rewrite at the
/// catalog's modulus `2n`.
fn standardise(o: &Oracle, c: &OracleClass) -> (usize, orbitdeg::group::ElemSet) {
    let mem = members(&c.rep);
    let t0 = mem.iter().map(|&x| ddecode(x / KO)).find(|d| d.r).unwrap().t;
    // conjugating by ρ^s moves a reflection turn t to t - 2s
    let s = d_el(t0 / 2, false);
    let std = members(&o.conj(s, &mem));
    let scale = Q / (2 * c.n);
    let codec = orbitdeg::o2::Codec::new(2 * c.n as u32, KO);
    let out = orbitdeg::group::ElemSet::from_iter_with_capacity(
        codec.size(),
        std.iter().map(|&x| {
            let d = ddecode(x / KO);
            assert_eq!(d.t % scale, 0);
            codec.encode(
                orbitdeg::o2::DElem {
                    turn: (d.t / scale) as u32,
                    refl: d.r,
                },
                x % KO,
            )
        }),
    );
    (c.n, out)
}

fn targets(cat: &Catalog) -> Vec<usize> {
    cat.classes()
        .iter()
        .filter(|c| !c.is_radial() && 24 % c.rotational_order() == 0)
        .map(|c| c.id)
        .collect()
}

pub fn classes_biject_with_catalog() {
    let t = truncation();
    let mut seen = HashSet::new();
    for (c, &id) in t.classes.iter().zip(&t.to_cat) {
        assert!(seen.insert(id), "two oracle classes map to {}", t.cat.name(id));
        let pc = t.cat.class(id).unwrap();
        assert_eq!(pc.order, Some(c.order as u64), "{}", pc.name);
        assert_eq!(pc.rotational_order() as usize, c.n, "{}", pc.name);
        assert_eq!(pc.weyl_order as usize, c.normalizer / c.order, "{}", pc.name);
    }
    assert_eq!(seen.len(), targets(&t.cat).len());
    assert_eq!(t.classes.len(), 1690);
}

pub fn containment_counts_agree() {
    let t = truncation();
    let o = &t.o;
    let d48k: Vec<usize> = (0..SIZE).collect();
    let mut checked = 0usize;
    for (li, l) in t.classes.iter().enumerate() {
        let lmem = members(&l.rep);
        let lgens = generating_set(o, &lmem);
        // conjugated generator tuples, with the number of conjugators giving each
        let mut conjs: HashMap<Vec<usize>, usize> = HashMap::new();
        for &g in &d48k {
            let gi = o.inv(g);
            *conjs.entry(lgens.iter().map(|&x| o.mul(o.mul(gi, x), g)).collect()).or_default() += 1;
        }
        for (hi, h) in t.classes.iter().enumerate() {
            if h.order % l.order != 0 {
                continue;
            }
            // #{g : g^-1 L g ⊂ H}, and n(L, H) = that / |N(H)|
            let total: usize = conjs
                .iter()
                .filter(|(c, _)| c.iter().all(|&x| has(&h.rep, x)))
                .map(|(_, k)| k)
                .sum();
            assert_eq!(total % h.normalizer, 0);
            let n = (total / h.normalizer) as u32;
            let want = t.cat.n_count(t.to_cat[li], t.to_cat[hi]).unwrap();
            assert_eq!(n, want, "n({}, {})", t.cat.name(t.to_cat[li]), t.cat.name(t.to_cat[hi]));
            checked += 1;
        }
    }
    assert!(checked > 100_000, "{checked}");
}

pub fn orbit_types_agree_for_modes_one_and_two() {
    let t = truncation();
    let chars = &t.cat.amb.k_chars;
    let up: Vec<Vec<usize>> = (0..t.classes.len())
        .map(|l| {
            (0..t.classes.len())
                .filter(|&h| h != l && t.cat.le(t.to_cat[l], t.to_cat[h]))
                .collect()
        })
        .collect();
    for m in 1..=2u32 {
        for j in 0..5 {
            for sign in [Sign::Plus, Sign::Minus] {
                let rep = IrrDescriptor::new(m, j, sign);
                let chi = chars.irreducible(rep.k_irrep(&t.cat).unwrap());
                let dims: Vec<i64> = t
                    .classes
                    .iter()
                    .map(|c| {
                        let mem = members(&c.rep);
                        let s: f64 = mem
                            .iter()
                            .map(|&x| {
                                let d = ddecode(x / KO);
                                let w = if d.r {
                                    0.0
                                } else {
                                    2.0 * (std::f64::consts::TAU * (m as usize * d.t) as f64 / Q as f64).cos()
                                };
                                w * chars.eval(chi, x % KO) as f64
                            })
                            .sum();
                        (s / mem.len() as f64).round() as i64
                    })
                    .collect();
                let oracle: BTreeSet<usize> = (0..t.classes.len())
                    .filter(|&l| dims[l] > 0 && up[l].iter().all(|&h| dims[h] < dims[l]))
                    .map(|l| t.to_cat[l])
                    .collect();
                let lib: BTreeSet<usize> = orbit_types(&rep, &t.cat).unwrap().into_iter().collect();
                assert_eq!(oracle, lib, "{rep}");
            }
        }
    }
}
