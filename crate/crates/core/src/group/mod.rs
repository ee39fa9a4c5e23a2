//! Finite permutation groups built from symmetric groups, `Z1` and `Z2` by
//! direct products.
//!
//! Elements of a direct product are laid out in mixed radix: the element
//! `(a_0, ..., a_k)` sits at index `((a_0 * |G_1| + a_1) * |G_2| + ...)`,
//! so factor projections are plain integer arithmetic. Index 0 is always the
//! identity.

mod characters;
mod elemset;
mod perm;
mod subgroups;

pub use characters::{CharacterTable, ElementClass};
pub use elemset::ElemSet;
pub use perm::Perm;
pub use subgroups::{closure, Subgroup, SubgroupClass, SubgroupClassTable};

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest group order accepted by [`FiniteGroup::build`].
pub const MAX_GROUP_ORDER: usize = 10_000;

const MUL_TABLE_LIMIT: usize = 1024;

/// Irreducible building block of a group descriptor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AtomicGroup {
    Trivial,
    Cyclic2,
    Symmetric(usize),
}

impl AtomicGroup {
    pub fn order(&self) -> usize {
        match self {
            AtomicGroup::Trivial => 1,
            AtomicGroup::Cyclic2 => 2,
            AtomicGroup::Symmetric(n) => (1..=*n).product(),
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            AtomicGroup::Trivial => 1,
            AtomicGroup::Cyclic2 => 2,
            AtomicGroup::Symmetric(n) => *n,
        }
    }
}

impl fmt::Display for AtomicGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AtomicGroup::Trivial => write!(f, "Z1"),
            AtomicGroup::Cyclic2 => write!(f, "Z2"),
            AtomicGroup::Symmetric(n) => write!(f, "S{n}"),
        }
    }
}

/// A group descriptor such as `S4*Z2`: a direct product of atomic groups.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupDescriptor {
    pub factors: Vec<AtomicGroup>,
}

impl GroupDescriptor {
    pub fn atomic(g: AtomicGroup) -> Self {
        GroupDescriptor { factors: vec![g] }
    }

    pub fn product(&self, other: &GroupDescriptor) -> GroupDescriptor {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().copied());
        GroupDescriptor { factors }
    }

    pub fn order(&self) -> usize {
        self.factors
            .iter()
            .map(|f| f.order())
            .try_fold(1usize, |acc, o| acc.checked_mul(o))
            .unwrap_or(usize::MAX)
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl FromStr for GroupDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unsupported = || Error::UnsupportedDescriptor(s.to_string());
        let mut factors = Vec::new();
        for part in s.split(['*', 'x', '×']) {
            let part = part.trim();
            let g = match part {
                "Z1" | "1" => AtomicGroup::Trivial,
                "Z2" => AtomicGroup::Cyclic2,
                p if p.starts_with('S') => {
                    let n: usize = p[1..].parse().map_err(|_| unsupported())?;
                    if n == 0 {
                        return Err(unsupported());
                    }
                    AtomicGroup::Symmetric(n)
                }
                _ => return Err(unsupported()),
            };
            factors.push(g);
        }
        if factors.is_empty() {
            return Err(unsupported());
        }
        Ok(GroupDescriptor { factors })
    }
}

/// One atomic factor of a [`FiniteGroup`] together with the points it moves.
#[derive(Clone, Debug)]
pub struct Factor {
    pub kind: AtomicGroup,
    pub order: usize,
    pub offset: usize,
    stride: usize,
}

/// A finite permutation group with explicit element list.
#[derive(Clone)]
pub struct FiniteGroup {
    descriptor: GroupDescriptor,
    factors: Vec<Factor>,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    inverse: Vec<usize>,
    table: Option<Vec<u32>>,
    generators: Vec<usize>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("descriptor", &self.descriptor.to_string())
            .field("order", &self.order())
            .finish()
    }
}

fn atomic_elements(g: AtomicGroup) -> (Vec<Perm>, Vec<Perm>) {
    match g {
        AtomicGroup::Trivial => (vec![Perm::identity(1)], vec![]),
        AtomicGroup::Cyclic2 => {
            let swap = Perm::from_images(vec![1, 0]);
            (vec![Perm::identity(2), swap.clone()], vec![swap])
        }
        AtomicGroup::Symmetric(n) => {
            let elements = Perm::all(n);
            let mut gens = Vec::new();
            if n >= 2 {
                gens.push(Perm::from_cycles(n, &[&[0, 1]]));
            }
            if n >= 3 {
                let cycle: Vec<usize> = (0..n).collect();
                gens.push(Perm::from_cycles(n, &[&cycle]));
            }
            (elements, gens)
        }
    }
}

impl FiniteGroup {
    /// Builds the group named by `descriptor`.
    pub fn build(descriptor: &GroupDescriptor) -> Result<FiniteGroup> {
        let order = descriptor.order();
        if order > MAX_GROUP_ORDER {
            return Err(Error::OrderLimit {
                order,
                limit: MAX_GROUP_ORDER,
            });
        }
        let mut factors = Vec::new();
        let mut offset = 0;
        let mut parts = Vec::new();
        for &kind in &descriptor.factors {
            let (elems, gens) = atomic_elements(kind);
            factors.push(Factor {
                kind,
                order: elems.len(),
                offset,
                stride: 1,
            });
            offset += kind.degree();
            parts.push((elems, gens));
        }
        let mut stride = 1;
        for f in factors.iter_mut().rev() {
            f.stride = stride;
            stride *= f.order;
        }
        let degree = offset;

        let mut elements = Vec::with_capacity(order);
        let mut digits = vec![0usize; factors.len()];
        for _ in 0..order {
            let mut images = Vec::with_capacity(degree);
            for (fi, f) in factors.iter().enumerate() {
                let p = &parts[fi].0[digits[fi]];
                images.extend(p.images().iter().map(|&x| x as usize + f.offset));
            }
            elements.push(Perm::from_images(images));
            for fi in (0..factors.len()).rev() {
                digits[fi] += 1;
                if digits[fi] < factors[fi].order {
                    break;
                }
                digits[fi] = 0;
            }
        }

        let mut generators = Vec::new();
        let index: HashMap<Perm, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        for (fi, f) in factors.iter().enumerate() {
            for g in &parts[fi].1 {
                let mut images: Vec<usize> = (0..degree).collect();
                for (x, &y) in g.images().iter().enumerate() {
                    images[x + f.offset] = y as usize + f.offset;
                }
                generators.push(index[&Perm::from_images(images)]);
            }
        }
        if generators.is_empty() {
            generators.push(0);
        }

        let inverse = elements.iter().map(|p| index[&p.inverse()]).collect();
        let mut group = FiniteGroup {
            descriptor: descriptor.clone(),
            factors,
            elements,
            index,
            inverse,
            table: None,
            generators,
        };
        if order <= MUL_TABLE_LIMIT {
            let mut table = vec![0u32; order * order];
            for a in 0..order {
                for b in 0..order {
                    let p = group.elements[a].compose(&group.elements[b]);
                    table[a * order + b] = group.index[&p] as u32;
                }
            }
            group.table = Some(table);
        }
        group.validate()?;
        Ok(group)
    }

    /// Parses and builds a group from text such as `"S4*Z2"`.
    pub fn from_descriptor(text: &str) -> Result<FiniteGroup> {
        FiniteGroup::build(&text.parse()?)
    }

    fn validate(&self) -> Result<()> {
        let n = self.order();
        if self.elements[0] != Perm::identity(self.degree()) {
            return Err(Error::Invalid("identity is not the first element".into()));
        }
        if self.index.len() != n {
            return Err(Error::Invalid("duplicate group elements".into()));
        }
        for a in 0..n {
            if self.mul(a, self.inverse[a]) != 0 {
                return Err(Error::Invalid("inverse table is inconsistent".into()));
            }
        }
        if n <= MUL_TABLE_LIMIT {
            // closure is implied by the table build; spot-check generators
            for &g in &self.generators {
                for a in 0..n {
                    let _ = self.mul(g, a);
                }
            }
        }
        Ok(())
    }

    pub fn descriptor(&self) -> &GroupDescriptor {
        &self.descriptor
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.elements[0].degree()
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.index[&self.elements[a].compose(&self.elements[b])],
        }
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `g a g^-1`
    #[inline]
    pub fn conj(&self, g: usize, a: usize) -> usize {
        self.mul(self.mul(g, a), self.inverse[g])
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Index of the component of `a` in factor `f`.
    pub fn component(&self, a: usize, f: usize) -> usize {
        let fac = &self.factors[f];
        (a / fac.stride) % fac.order
    }

    /// Restriction of element `a` to the points of factor `f`, as a permutation
    /// of `0..degree(f)`.
    pub fn factor_perm(&self, a: usize, f: usize) -> Perm {
        let fac = &self.factors[f];
        let d = fac.kind.degree();
        let images = self.elements[a].images()[fac.offset..fac.offset + d]
            .iter()
            .map(|&y| y as usize - fac.offset)
            .collect();
        Perm::from_images(images)
    }

    /// Splits the group as `A x B` with `A` the first `split` factors; returns
    /// `(index in A, index in B)`.
    pub fn split_index(&self, a: usize, split: usize) -> (usize, usize) {
        let b_order: usize = self.factors[split..].iter().map(|f| f.order).product();
        (a / b_order, a % b_order)
    }

    pub fn is_direct_product_of(&self, names: &[AtomicGroup]) -> bool {
        self.descriptor.factors == names
    }
}
