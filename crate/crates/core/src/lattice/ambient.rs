//! The finite factor `K` and the arithmetic of finite subgroups of
//! `O(2) × K` with a standard dihedral head.

use crate::error::Result;
use crate::group::{AtomicGroup, CharacterTable, ElemSet, FiniteGroup, GroupDescriptor, SubgroupClassTable};
use crate::o2::{Codec, DElem};

/// `K` together with its subgroup table, character table, and the group
/// `Z2 × K` whose subgroups label the classes containing `SO(2)`.
#[derive(Debug)]
pub struct Ambient {
    pub k: FiniteGroup,
    pub k_table: SubgroupClassTable,
    pub k_chars: CharacterTable,
    /// `O(2)/SO(2) × K`; element `z * |K| + k`.
    pub zk: FiniteGroup,
    pub zk_table: SubgroupClassTable,
}

impl Ambient {
    pub fn new(k_desc: &GroupDescriptor) -> Result<Ambient> {
        let k = FiniteGroup::build(k_desc)?;
        let k_table = SubgroupClassTable::build(&k);
        let k_chars = CharacterTable::build(&k)?;
        let zk_desc = GroupDescriptor::atomic(AtomicGroup::Cyclic2).product(k_desc);
        let zk = FiniteGroup::build(&zk_desc)?;
        let zk_table = SubgroupClassTable::build(&zk);
        Ok(Ambient {
            k,
            k_table,
            k_chars,
            zk,
            zk_table,
        })
    }

    pub fn from_descriptor(text: &str) -> Result<Ambient> {
        Ambient::new(&text.parse()?)
    }

    pub fn k_order(&self) -> usize {
        self.k.order()
    }

    /// Codec for subgroups with head `D_n`, i.e. modulus `2n`.
    pub fn codec(&self, n: u32) -> Codec {
        Codec::new(2 * n, self.k.order())
    }

    #[inline]
    pub fn mul_code(&self, c: &Codec, a: usize, b: usize) -> usize {
        let (oa, ka) = c.decode(a);
        let (ob, kb) = c.decode(b);
        c.encode(oa.mul(ob, c.q), self.k.mul(ka, kb))
    }

    pub fn closure_codes(&self, c: &Codec, gens: &[usize]) -> ElemSet {
        let mut set = ElemSet::new(c.size());
        set.insert(0);
        let mut list = vec![0usize];
        let mut i = 0;
        while i < list.len() {
            let a = list[i];
            for &s in gens {
                let b = self.mul_code(c, a, s);
                if set.insert(b) {
                    list.push(b);
                }
            }
            i += 1;
        }
        set
    }

    /// `g^-1 S g` for `g = (o, k)`.
    pub fn conjugate(&self, c: &Codec, set: &ElemSet, o: DElem, k: usize) -> ElemSet {
        let kinv = self.k.inv(k);
        let mut out = ElemSet::new(c.size());
        for x in set.iter() {
            let (ox, kx) = c.decode(x);
            out.insert(c.encode(ox.conj_by(o, c.q), self.k.mul(self.k.mul(kinv, kx), k)));
        }
        out
    }

    /// All distinct conjugates of a standard-headed subgroup, sorted; the
    /// conjugating group is `D_2n × K`, the normaliser of the head.
    pub fn conjugates(&self, n: u32, set: &ElemSet) -> Vec<ElemSet> {
        let c = self.codec(n);
        let mut out = Vec::new();
        for turn in 0..c.q {
            for refl in [false, true] {
                let o = DElem { turn, refl };
                for k in 0..self.k.order() {
                    out.push(self.conjugate(&c, set, o, k));
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    pub fn k_projection(&self, c: &Codec, set: &ElemSet) -> ElemSet {
        ElemSet::from_iter_with_capacity(self.k.order(), set.iter().map(|x| c.decode(x).1))
    }

    /// Image in `O(2)/SO(2) × K`.
    pub fn zk_image(&self, c: &Codec, set: &ElemSet) -> ElemSet {
        let ko = self.k.order();
        ElemSet::from_iter_with_capacity(
            self.zk.order(),
            set.iter().map(|x| {
                let (o, k) = c.decode(x);
                o.refl as usize * ko + k
            }),
        )
    }

    /// Elements of `K` paired with a rotation.
    pub fn rotation_part(&self, c: &Codec, set: &ElemSet) -> ElemSet {
        ElemSet::from_iter_with_capacity(
            self.k.order(),
            set.iter().filter_map(|x| {
                let (o, k) = c.decode(x);
                (!o.refl).then_some(k)
            }),
        )
    }

    /// `S ∩ (e × K)`.
    pub fn right_kernel(&self, c: &Codec, set: &ElemSet) -> ElemSet {
        ElemSet::from_iter_with_capacity(
            self.k.order(),
            set.iter().filter_map(|x| {
                let (o, k) = c.decode(x);
                (o == DElem::IDENTITY).then_some(k)
            }),
        )
    }

    /// Order of the pure-rotation subgroup `S ∩ (SO(2) × e)`.
    pub fn pure_rotation_order(&self, c: &Codec, set: &ElemSet) -> u32 {
        set.iter()
            .filter(|&x| {
                let (o, k) = c.decode(x);
                !o.refl && k == 0
            })
            .count() as u32
    }

    /// Preimage under the `f`-fold covering: head `D_n` becomes `D_nf`.
    pub fn fold_set(&self, n: u32, set: &ElemSet, f: u32) -> ElemSet {
        let c = self.codec(n);
        let cf = self.codec(n * f);
        let mut out = ElemSet::new(cf.size());
        for x in set.iter() {
            let (o, k) = c.decode(x);
            for i in 0..f {
                let o2 = DElem {
                    turn: o.turn + i * c.q,
                    refl: o.refl,
                };
                out.insert(cf.encode(o2, k));
            }
        }
        out
    }

    /// Image under the `f`-fold covering of a subgroup containing `Z_f × e`;
    /// head `D_nf` becomes `D_n`.
    pub fn unfold_set(&self, nf: u32, set: &ElemSet, f: u32) -> ElemSet {
        let c = self.codec(nf);
        let cn = self.codec(nf / f);
        let mut out = ElemSet::new(cn.size());
        for x in set.iter() {
            let (o, k) = c.decode(x);
            let o2 = DElem {
                turn: o.turn % cn.q,
                refl: o.refl,
            };
            out.insert(cn.encode(o2, k));
        }
        out
    }

    /// The same subgroup written at the modulus of head `D_big` (`n | big`).
    pub fn embed_set(&self, n: u32, set: &ElemSet, big: u32) -> ElemSet {
        let c = self.codec(n);
        let cb = self.codec(big);
        let s = big / n;
        ElemSet::from_iter_with_capacity(
            cb.size(),
            set.iter().map(|x| {
                let (o, k) = c.decode(x);
                cb.encode(
                    DElem {
                        turn: o.turn * s,
                        refl: o.refl,
                    },
                    k,
                )
            }),
        )
    }

    /// For a subgroup of `Z2 × K`: its projection to `K`, its intersection
    /// with `K`, and whether it reaches the non-identity coset of `Z2`.
    pub fn zk_k_part(&self, zs: &ElemSet) -> (ElemSet, ElemSet, bool) {
        let ko = self.k.order();
        let proj = ElemSet::from_iter_with_capacity(ko, zs.iter().map(|x| x % ko));
        let kernel = ElemSet::from_iter_with_capacity(ko, zs.iter().filter(|&x| x < ko));
        let has_reflection = zs.iter().any(|x| x >= ko);
        (proj, kernel, has_reflection)
    }

    /// Smallest set among the conjugates, used as a canonical key.
    pub fn canonical(&self, n: u32, set: &ElemSet) -> ElemSet {
        self.conjugates(n, set).swap_remove(0)
    }
}
