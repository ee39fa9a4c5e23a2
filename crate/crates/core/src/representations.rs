//! Irreducible representations `W_m ⊗ U_j^±` of `O(2) × Γ × Z2`, their
//! fixed-point dimensions on catalog classes, and orbit types.
//!
//! `W_0` is the trivial representation of `O(2)`; for `m ≥ 1`, `W_m` is
//! the plane on which rotation by `θ` acts by `mθ` and the reflection `κ`
//! by complex conjugation.

use std::collections::BTreeSet;
use std::f64::consts::TAU;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::AtomicGroup;
use crate::lattice::{Catalog, ClassKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl std::str::FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Sign> {
        match s {
            "+" | "plus" => Ok(Sign::Plus),
            "-" | "minus" => Ok(Sign::Minus),
            _ => Err(Error::Invalid(format!("sign must be + or -, got `{s}`"))),
        }
    }
}

/// `W_m ⊗ U_j^sign`, with `j` an irreducible of `Γ` and the sign giving
/// the action of the trailing `Z2` factor of `K = Γ × Z2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IrrDescriptor {
    pub m: u32,
    pub j: usize,
    pub sign: Sign,
}

impl IrrDescriptor {
    pub fn new(m: u32, j: usize, sign: Sign) -> IrrDescriptor {
        IrrDescriptor { m, j, sign }
    }

    /// Index of `U_j^sign` in the character table of `K`.
    pub fn k_irrep(&self, cat: &Catalog) -> Result<usize> {
        let k = &cat.amb.k;
        if k.factors().last().map(|f| f.kind) != Some(AtomicGroup::Cyclic2) {
            return Err(Error::Invalid("K must end with a Z2 factor".into()));
        }
        let idx = self.j * 2 + (self.sign == Sign::Minus) as usize;
        if idx >= cat.amb.k_chars.len() {
            return Err(Error::OutOfRange(format!("irreducible index {} is out of range", self.j)));
        }
        Ok(idx)
    }

    pub fn dim(&self, cat: &Catalog) -> Result<usize> {
        let d = cat.amb.k_chars.degree(self.k_irrep(cat)?) as usize;
        Ok(if self.m == 0 { d } else { 2 * d })
    }
}

impl fmt::Display for IrrDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V{}_{{{},{}}}", self.sign, self.m, self.j)
    }
}

/// `dim V^H` for the class `id`.
pub fn fixed_dim_product(rep: &IrrDescriptor, cat: &Catalog, id: usize) -> Result<usize> {
    let chi = cat.amb.k_chars.irreducible(rep.k_irrep(cat)?);
    let class = cat.class(id)?;
    match class.kind {
        ClassKind::Radial { zk_class } => {
            if rep.m > 0 {
                // SO(2) has no fixed vectors in W_m
                return Ok(0);
            }
            let (proj, _, _) = cat.amb.zk_k_part(&cat.amb.zk_table.classes[zk_class].rep);
            cat.amb.k_chars.fixed_dim(chi, &proj)
        }
        ClassKind::Dihedral { .. } => {
            let (n, set) = cat.finite_rep(id).expect("dihedral class");
            let codec = cat.amb.codec(n);
            let mut sum = 0.0f64;
            for x in set.iter() {
                let (o, k) = codec.decode(x);
                let w = if rep.m == 0 {
                    1.0
                } else if o.refl {
                    0.0
                } else {
                    2.0 * (TAU * rep.m as f64 * o.angle(codec.q)).cos()
                };
                sum += w * cat.amb.k_chars.eval(chi, k) as f64;
            }
            let avg = sum / set.len() as f64;
            let r = avg.round();
            if (avg - r).abs() > 1e-6 || r < 0.0 {
                return Err(Error::InconsistentCharacter(format!(
                    "fixed-point average {avg} on {} is not a nonnegative integer",
                    class.name
                )));
            }
            Ok(r as usize)
        }
    }
}

/// Fixed dimensions on every catalog class.
pub fn fixed_dims(rep: &IrrDescriptor, cat: &Catalog) -> Result<Vec<usize>> {
    (0..cat.len()).map(|id| fixed_dim_product(rep, cat, id)).collect()
}

fn require_bound(rep: &IrrDescriptor, cat: &Catalog) -> Result<()> {
    if rep.m > cat.fold_bound {
        return Err(Error::CatalogTooSmall {
            required: rep.m,
            available: cat.fold_bound,
        });
    }
    Ok(())
}

/// Classes realised as isotropy of nonzero vectors: positive fixed
/// dimension, strictly larger than at every class above.
pub fn orbit_types(rep: &IrrDescriptor, cat: &Catalog) -> Result<BTreeSet<usize>> {
    require_bound(rep, cat)?;
    let dims = fixed_dims(rep, cat)?;
    Ok(orbit_types_from_dims(cat, &dims))
}

pub fn orbit_types_from_dims(cat: &Catalog, dims: &[usize]) -> BTreeSet<usize> {
    (0..cat.len())
        .filter(|&l| dims[l] > 0)
        .filter(|&l| {
            cat.up(l)
                .iter()
                .all(|&(h, _)| h as usize == l || dims[h as usize] < dims[l])
        })
        .collect()
}

/// Elements of `set` with nothing in `set` strictly above them.
pub fn maximal_elements(cat: &Catalog, set: &BTreeSet<usize>) -> BTreeSet<usize> {
    set.iter()
        .copied()
        .filter(|&l| {
            !cat.up(l)
                .iter()
                .any(|&(h, _)| h as usize != l && set.contains(&(h as usize)))
        })
        .collect()
}

pub fn maximal_orbit_types(rep: &IrrDescriptor, cat: &Catalog) -> Result<BTreeSet<usize>> {
    Ok(maximal_elements(cat, &orbit_types(rep, cat)?))
}

/// Maximal elements of the union of the maximal orbit types of `reps`,
/// with the representations contributing each class.
pub fn maximal_orbit_types_union(
    reps: &[IrrDescriptor],
    cat: &Catalog,
) -> Result<Vec<(usize, Vec<IrrDescriptor>)>> {
    if reps.is_empty() {
        return Err(Error::Invalid("no representations given".into()));
    }
    let per_rep: Vec<BTreeSet<usize>> = reps
        .iter()
        .map(|r| maximal_orbit_types(r, cat))
        .collect::<Result<_>>()?;
    let union: BTreeSet<usize> = per_rep.iter().flatten().copied().collect();
    Ok(maximal_elements(cat, &union)
        .into_iter()
        .map(|id| {
            let from = reps
                .iter()
                .zip(&per_rep)
                .filter(|(_, s)| s.contains(&id))
                .map(|(r, _)| *r)
                .collect();
            (id, from)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::ClassKind;

    #[test]
    fn trivial_rep_has_only_the_full_group() {
        let cat = Catalog::from_descriptor("Z2", 2).unwrap();
        let rep = IrrDescriptor::new(0, 0, Sign::Plus);
        let ot = orbit_types(&rep, &cat).unwrap();
        assert_eq!(ot.into_iter().collect::<Vec<_>>(), vec![cat.top()]);
    }

    #[test]
    fn mode_one_minus_has_d2_twisted_maximal_type() {
        let cat = Catalog::from_descriptor("Z2", 2).unwrap();
        let rep = IrrDescriptor::new(1, 0, Sign::Minus);
        let max = maximal_orbit_types(&rep, &cat).unwrap();
        let names: Vec<_> = max.iter().map(|&i| cat.name(i)).collect();
        assert_eq!(names, ["D2^{D1} x_{Z2} Z2"]);
        assert_eq!(fixed_dim_product(&rep, &cat, cat.top()).unwrap(), 0);
    }

    #[test]
    fn dihedral_axis_class_fixes_a_line() {
        let cat = Catalog::from_descriptor("Z2", 3).unwrap();
        for m in 1..=3 {
            let rep = IrrDescriptor::new(m, 0, Sign::Plus);
            // D_m x Z2: the fold-m preimage of D1 x Z2
            let prim = cat
                .primitives
                .iter()
                .position(|p| p.n == 1 && p.dihedral_kernel && p.order == 4)
                .unwrap();
            let id = cat.id_of(ClassKind::Dihedral { prim, fold: m }).unwrap();
            assert_eq!(fixed_dim_product(&rep, &cat, id).unwrap(), 1, "m = {m}");
        }
    }

    #[test]
    fn catalog_too_small_is_reported() {
        let cat = Catalog::from_descriptor("Z2", 1).unwrap();
        let rep = IrrDescriptor::new(2, 0, Sign::Minus);
        assert!(matches!(
            orbit_types(&rep, &cat),
            Err(Error::CatalogTooSmall { required: 2, available: 1 })
        ));
    }
}
