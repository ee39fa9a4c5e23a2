//! Basic degrees and equivariant degrees of linear isomorphisms.
//!
//! The basic degree of `V` is the element whose mark at `L` is
//! `(-1)^{dim V^L}`. The degree of `-id` on a sum of irreducibles is the
//! product of their basic degrees, and the degree of the full problem is
//! `(G)` minus that product.

use serde::Serialize;

use crate::burnside::BurnsideElement;
use crate::error::{Error, Result};
use crate::lattice::Catalog;
use crate::representations::{fixed_dims, IrrDescriptor, Sign};

/// Marks `(-1)^{dim V^L}` over the catalog.
pub fn basic_degree_marks(rep: &IrrDescriptor, cat: &Catalog) -> Result<Vec<i64>> {
    if rep.m > cat.fold_bound {
        return Err(Error::CatalogTooSmall {
            required: rep.m,
            available: cat.fold_bound,
        });
    }
    Ok(fixed_dims(rep, cat)?
        .into_iter()
        .map(|d| if d % 2 == 0 { 1 } else { -1 })
        .collect())
}

pub fn basic_degree(rep: &IrrDescriptor, cat: &Catalog) -> Result<BurnsideElement> {
    BurnsideElement::from_marks(cat, &basic_degree_marks(rep, cat)?)
}

/// Coefficient of a basic degree at a maximal orbit type `H0`: with only
/// `(G)` above it the recurrence gives `((-1)^d - 1)/|W(H0)|`, i.e. `-x0` with
/// `x0 = 0` for even `d` and `x0 = 2/|W(H0)|` for odd `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MaximalCoefficient {
    pub fixed_dim: usize,
    pub weyl: u64,
    pub x0: i64,
}

pub fn x0_at_maximal(rep: &IrrDescriptor, cat: &Catalog, h0: usize) -> Result<MaximalCoefficient> {
    let d = crate::representations::fixed_dim_product(rep, cat, h0)?;
    let weyl = cat.weyl(h0);
    let x0 = if d % 2 == 0 {
        0
    } else if 2 % weyl == 0 {
        (2 / weyl) as i64
    } else {
        return Err(Error::NonExactDivision {
            class: cat.name(h0).to_string(),
            numerator: -2,
            denominator: weyl as i64,
        });
    };
    Ok(MaximalCoefficient {
        fixed_dim: d,
        weyl,
        x0,
    })
}

/// One factor `deg_{V_{m,j}}^{mult}` of the linear degree, coming from the
/// Bessel zero `s_{n,m}` lying below `μ_j`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TraceFactor {
    pub j: usize,
    pub m: u32,
    pub n: usize,
    pub mu: f64,
    pub zero: f64,
    pub multiplicity: usize,
    pub rep: String,
}

/// Negative-spectrum data of the linearisation: for each isotypic
/// component, its eigenvalue and multiplicity.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectralAssignment {
    pub entries: Vec<SpectralEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectralEntry {
    pub mu: f64,
    pub j: usize,
    pub multiplicity: usize,
}

/// Product of basic degrees for the given factors, `(G)` if none.
pub fn gdeg_linear(cat: &Catalog, factors: &[TraceFactor]) -> Result<BurnsideElement> {
    let mut marks = vec![1i64; cat.len()];
    for f in factors {
        let rep = IrrDescriptor::new(f.m, f.j, Sign::Minus);
        let b = basic_degree_marks(&rep, cat)?;
        for _ in 0..f.multiplicity {
            for (x, y) in marks.iter_mut().zip(&b) {
                *x *= y;
            }
        }
    }
    BurnsideElement::from_marks(cat, &marks)
}

/// `(G) - gdeg_linear`.
pub fn gdeg_field(cat: &Catalog, factors: &[TraceFactor]) -> Result<BurnsideElement> {
    BurnsideElement::unit(cat).sub(&gdeg_linear(cat, factors)?)
}

/// Coefficient identities for two basic degrees sharing a maximal class
/// `h0` at which both have odd fixed dimension: equal coefficients there,
/// and a product with zero coefficient there.
#[derive(Clone, Debug, Serialize)]
pub struct SharedMaximalCheck {
    pub class: String,
    pub coeff_a: i64,
    pub coeff_b: i64,
    pub coeff_product: i64,
}

impl SharedMaximalCheck {
    pub fn holds(&self) -> bool {
        self.coeff_a == self.coeff_b && self.coeff_product == 0
    }
}

pub fn shared_maximal_check(
    cat: &Catalog,
    a: &IrrDescriptor,
    b: &IrrDescriptor,
    h0: usize,
) -> Result<Option<SharedMaximalCheck>> {
    let xa = x0_at_maximal(a, cat, h0)?;
    let xb = x0_at_maximal(b, cat, h0)?;
    if xa.fixed_dim % 2 == 0 || xb.fixed_dim % 2 == 0 {
        return Ok(None);
    }
    let da = basic_degree(a, cat)?;
    let db = basic_degree(b, cat)?;
    let prod = da.mul(&db, cat)?;
    Ok(Some(SharedMaximalCheck {
        class: cat.name(h0).to_string(),
        coeff_a: da.coeff(h0),
        coeff_b: db.coeff(h0),
        coeff_product: prod.coeff(h0),
    }))
}
