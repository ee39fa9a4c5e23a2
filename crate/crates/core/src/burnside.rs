//! The Burnside ring `A(O(2) × K)` on finite-Weyl classes.
//!
//! Multiplication goes through marks: `φ_L(H) = n(L, H)·|W(H)|` counts the
//! `L`-fixed points of `G/H`, marks multiply pointwise, and coefficients are
//! recovered top-down by
//! `n_L = [φ_L − Σ_{L' > L} n_{L'} n(L, L') |W(L')|] / |W(L)|`.
//! Every division must be exact.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::Catalog;

/// Finite integer combination of catalog classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BurnsideElement {
    catalog: u64,
    terms: BTreeMap<usize, i64>,
}

impl BurnsideElement {
    pub fn zero(cat: &Catalog) -> BurnsideElement {
        BurnsideElement {
            catalog: cat.uid(),
            terms: BTreeMap::new(),
        }
    }

    /// `coeff · (H)`.
    pub fn generator(cat: &Catalog, id: usize, coeff: i64) -> BurnsideElement {
        let mut e = BurnsideElement::zero(cat);
        if coeff != 0 {
            e.terms.insert(id, coeff);
        }
        e
    }

    /// The unit `(G)`.
    pub fn unit(cat: &Catalog) -> BurnsideElement {
        BurnsideElement::generator(cat, cat.top(), 1)
    }

    pub fn from_terms(cat: &Catalog, terms: impl IntoIterator<Item = (usize, i64)>) -> Result<BurnsideElement> {
        let mut e = BurnsideElement::zero(cat);
        for (id, c) in terms {
            cat.class(id)?;
            let slot = e.terms.entry(id).or_insert(0);
            *slot = slot.checked_add(c).ok_or(Error::Overflow)?;
        }
        e.terms.retain(|_, c| *c != 0);
        Ok(e)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, id: usize) -> i64 {
        self.terms.get(&id).copied().unwrap_or(0)
    }

    /// Nonzero terms in catalog order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.terms.iter().map(|(&k, &v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn check(&self, cat: &Catalog) -> Result<()> {
        if self.catalog == cat.uid() {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    pub fn add(&self, other: &BurnsideElement) -> Result<BurnsideElement> {
        if self.catalog != other.catalog {
            return Err(Error::AmbientMismatch);
        }
        let mut out = self.clone();
        for (&k, &v) in &other.terms {
            let slot = out.terms.entry(k).or_insert(0);
            *slot = slot.checked_add(v).ok_or(Error::Overflow)?;
        }
        out.terms.retain(|_, c| *c != 0);
        Ok(out)
    }

    pub fn neg(&self) -> BurnsideElement {
        BurnsideElement {
            catalog: self.catalog,
            terms: self.terms.iter().map(|(&k, &v)| (k, -v)).collect(),
        }
    }

    pub fn sub(&self, other: &BurnsideElement) -> Result<BurnsideElement> {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: i64) -> Result<BurnsideElement> {
        let mut out = BurnsideElement {
            catalog: self.catalog,
            terms: BTreeMap::new(),
        };
        for (&k, &v) in &self.terms {
            let c = v.checked_mul(s).ok_or(Error::Overflow)?;
            if c != 0 {
                out.terms.insert(k, c);
            }
        }
        Ok(out)
    }

    /// Marks `φ_L(self)` for every class `L` of the catalog.
    pub fn marks(&self, cat: &Catalog) -> Result<Vec<i64>> {
        self.check(cat)?;
        let mut marks = vec![0i64; cat.len()];
        if self.terms.is_empty() {
            return Ok(marks);
        }
        for (l, m) in marks.iter_mut().enumerate() {
            let mut acc = 0i64;
            for &(h, n) in cat.up(l) {
                if let Some(&a) = self.terms.get(&(h as usize)) {
                    let t = a
                        .checked_mul(n as i64 * cat.weyl(h as usize) as i64)
                        .ok_or(Error::Overflow)?;
                    acc = acc.checked_add(t).ok_or(Error::Overflow)?;
                }
            }
            *m = acc;
        }
        Ok(marks)
    }

    /// Inverts the mark homomorphism.
    pub fn from_marks(cat: &Catalog, marks: &[i64]) -> Result<BurnsideElement> {
        if marks.len() != cat.len() {
            return Err(Error::Invalid(format!(
                "{} marks given for {} classes",
                marks.len(),
                cat.len()
            )));
        }
        let mut coeffs = vec![0i64; cat.len()];
        for &l in cat.topological_order() {
            let mut num = marks[l];
            for &(h, n) in cat.up(l) {
                let h = h as usize;
                if h == l || coeffs[h] == 0 {
                    continue;
                }
                let t = coeffs[h]
                    .checked_mul(n as i64)
                    .and_then(|x| x.checked_mul(cat.weyl(h) as i64))
                    .ok_or(Error::Overflow)?;
                num = num.checked_sub(t).ok_or(Error::Overflow)?;
            }
            let w = cat.weyl(l) as i64;
            if num % w != 0 {
                return Err(Error::NonExactDivision {
                    class: cat.name(l).to_string(),
                    numerator: num,
                    denominator: w,
                });
            }
            coeffs[l] = num / w;
        }
        BurnsideElement::from_terms(cat, coeffs.into_iter().enumerate().filter(|x| x.1 != 0))
    }

    pub fn mul(&self, other: &BurnsideElement, cat: &Catalog) -> Result<BurnsideElement> {
        if self.catalog != other.catalog {
            return Err(Error::AmbientMismatch);
        }
        let a = self.marks(cat)?;
        let b = other.marks(cat)?;
        let prod = a
            .iter()
            .zip(&b)
            .map(|(x, y)| x.checked_mul(*y).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        BurnsideElement::from_marks(cat, &prod)
    }

    pub fn pow(&self, e: u32, cat: &Catalog) -> Result<BurnsideElement> {
        let mut out = BurnsideElement::unit(cat);
        for _ in 0..e {
            out = out.mul(self, cat)?;
        }
        Ok(out)
    }

    /// Image under the ring homomorphism induced by the `ν`-fold covering.
    pub fn fold_hom(&self, nu: u32, cat: &Catalog) -> Result<BurnsideElement> {
        self.check(cat)?;
        let mut terms = Vec::with_capacity(self.terms.len());
        for (&k, &v) in &self.terms {
            terms.push((cat.fold_class(k, nu)?, v));
        }
        BurnsideElement::from_terms(cat, terms)
    }

    /// `(canonical name, coefficient)` pairs in catalog order.
    pub fn to_named(&self, cat: &Catalog) -> Vec<NamedTerm> {
        self.terms
            .iter()
            .map(|(&k, &v)| NamedTerm {
                class: cat.name(k).to_string(),
                coeff: v,
            })
            .collect()
    }

    pub fn from_named(cat: &Catalog, terms: &[NamedTerm]) -> Result<BurnsideElement> {
        let ids = terms
            .iter()
            .map(|t| Ok((cat.by_name(&t.class)?, t.coeff)))
            .collect::<Result<Vec<_>>>()?;
        BurnsideElement::from_terms(cat, ids)
    }

    pub fn display<'a>(&'a self, cat: &'a Catalog) -> DisplayElement<'a> {
        DisplayElement { e: self, cat }
    }
}

/// One serialized term.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NamedTerm {
    pub class: String,
    pub coeff: i64,
}

/// Text form such as `(O(2) x S4p) - 2(D1 x S4p)`.
pub struct DisplayElement<'a> {
    e: &'a BurnsideElement,
    cat: &'a Catalog,
}

impl fmt::Display for DisplayElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.e.is_zero() {
            return write!(f, "0");
        }
        for (i, (id, c)) in self.e.terms().enumerate() {
            let name = self.cat.name(id);
            let mag = c.unsigned_abs();
            let sign = if c < 0 { "-" } else { "+" };
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if mag != 1 {
                write!(f, "{mag}")?;
            }
            write!(f, "({name})")?;
        }
        Ok(())
    }
}
