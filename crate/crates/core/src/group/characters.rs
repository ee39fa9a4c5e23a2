//! Character tables of direct products of symmetric groups.
//!
//! Each atomic factor is treated as a symmetric group on its points (`Z2` is
//! `S2`, `Z1` is `S1`). Irreducibles of `S_n` come from the
//! Murnaghan–Nakayama rule; irreducibles of a product are tensor products,
//! indexed lexicographically by factor.

use std::collections::HashMap;

use super::{ElemSet, FiniteGroup, Perm};
use crate::error::{Error, Result};

/// A conjugacy class of elements.
#[derive(Clone, Debug)]
pub struct ElementClass {
    pub rep: usize,
    pub size: usize,
    pub label: String,
}

#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub classes: Vec<ElementClass>,
    /// `values[i][c]`: irreducible `i` at element class `c`.
    pub values: Vec<Vec<i64>>,
    pub names: Vec<String>,
    class_of: Vec<usize>,
    group_order: usize,
}

/// Partitions of `n` as non-increasing vectors, ascending lexicographically.
fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=max.min(n)).rev() {
            cur.push(k);
            rec(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// `χ^λ` at an element of cycle type `mu`, by rim-hook removal on beta sets.
fn murnaghan_nakayama(beta: &[i64], mu: &[usize]) -> i64 {
    let Some((&r, rest)) = mu.split_first() else {
        return 1;
    };
    let r = r as i64;
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        let target = b - r;
        if target < 0 || beta.contains(&target) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.to_vec();
        next[i] = target;
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * murnaghan_nakayama(&next, rest);
    }
    total
}

fn beta_set(lambda: &[usize]) -> Vec<i64> {
    let l = lambda.len();
    lambda
        .iter()
        .enumerate()
        .map(|(i, &x)| (x + l - 1 - i) as i64)
        .collect()
}

struct AtomicTable {
    cycle_types: Vec<Vec<usize>>,
    values: Vec<Vec<i64>>,
    names: Vec<String>,
}

fn symmetric_table(n: usize, is_z2: bool) -> AtomicTable {
    let cycle_types = partitions(n);
    let mut irreps: Vec<(Vec<usize>, Vec<i64>)> = partitions(n)
        .into_iter()
        .map(|lambda| {
            let beta = beta_set(&lambda);
            let row = cycle_types.iter().map(|mu| murnaghan_nakayama(&beta, mu)).collect();
            (lambda, row)
        })
        .collect();
    // degree ascending, then value at a transposition descending
    let trans = cycle_types.iter().position(|c| c.first() == Some(&2) && c.iter().skip(1).all(|&x| x == 1));
    irreps.sort_by(|a, b| {
        let ta = trans.map_or(0, |t| a.1[t]);
        let tb = trans.map_or(0, |t| b.1[t]);
        (a.1[0], -ta, std::cmp::Reverse(&a.0)).cmp(&(b.1[0], -tb, std::cmp::Reverse(&b.0)))
    });
    let names = (0..irreps.len())
        .map(|i| {
            if is_z2 {
                if i == 0 { "+" } else { "-" }.to_string()
            } else if n == 1 {
                "1".to_string()
            } else {
                format!("chi{i}")
            }
        })
        .collect();
    AtomicTable {
        cycle_types,
        values: irreps.into_iter().map(|x| x.1).collect(),
        names,
    }
}

impl CharacterTable {
    pub fn build(g: &FiniteGroup) -> Result<CharacterTable> {
        let atoms: Vec<AtomicTable> = g
            .factors()
            .iter()
            .map(|f| symmetric_table(f.kind.degree(), f.kind == super::AtomicGroup::Cyclic2))
            .collect();

        // element class = tuple of factor cycle-type indices
        let mut key_of = Vec::with_capacity(g.order());
        for a in 0..g.order() {
            let key: Vec<usize> = (0..atoms.len())
                .map(|f| {
                    let ct = g.factor_perm(a, f).cycle_type();
                    atoms[f].cycle_types.iter().position(|c| *c == ct).unwrap()
                })
                .collect();
            key_of.push(key);
        }
        let mut keys: Vec<Vec<usize>> = key_of.clone();
        keys.sort();
        keys.dedup();
        let pos: HashMap<&Vec<usize>, usize> = keys.iter().enumerate().map(|(i, k)| (k, i)).collect();
        let class_of: Vec<usize> = key_of.iter().map(|k| pos[k]).collect();
        let mut classes: Vec<ElementClass> = keys
            .iter()
            .map(|_| ElementClass {
                rep: usize::MAX,
                size: 0,
                label: String::new(),
            })
            .collect();
        for (a, &c) in class_of.iter().enumerate() {
            // representative with the smallest cycle notation, e.g. (1,2) over (3,4)
            let label = g.element(a).to_string();
            if classes[c].rep == usize::MAX || label < classes[c].label {
                classes[c].rep = a;
                classes[c].label = label;
            }
            classes[c].size += 1;
        }

        // irreducibles: lexicographic over factor irreducible indices
        let mut values = Vec::new();
        let mut names = Vec::new();
        let counts: Vec<usize> = atoms.iter().map(|t| t.values.len()).collect();
        let total: usize = counts.iter().product();
        for idx in 0..total {
            let mut digits = vec![0; atoms.len()];
            let mut r = idx;
            for f in (0..atoms.len()).rev() {
                digits[f] = r % counts[f];
                r /= counts[f];
            }
            let row: Vec<i64> = keys
                .iter()
                .map(|key| (0..atoms.len()).map(|f| atoms[f].values[digits[f]][key[f]]).product())
                .collect();
            let mut name = String::new();
            for f in 0..atoms.len() {
                let part = &atoms[f].names[digits[f]];
                if !name.is_empty() && !(part == "+" || part == "-") {
                    name.push('.');
                }
                name.push_str(part);
            }
            values.push(row);
            names.push(name);
        }
        let table = CharacterTable {
            classes,
            values,
            names,
            class_of,
            group_order: g.order(),
        };
        table.check_orthogonality()?;
        Ok(table)
    }

    fn check_orthogonality(&self) -> Result<()> {
        let n = self.group_order as i64;
        let mut deg_sq = 0;
        for i in 0..self.values.len() {
            deg_sq += self.values[i][0] * self.values[i][0];
            for j in 0..self.values.len() {
                let ip = self.inner_raw(&self.values[i], &self.values[j]);
                let expect = if i == j { n } else { 0 };
                if ip != expect {
                    return Err(Error::InconsistentCharacter(format!(
                        "rows {i} and {j} have inner product {ip}, expected {expect}"
                    )));
                }
            }
        }
        if deg_sq != n {
            return Err(Error::InconsistentCharacter("degrees do not square-sum to |G|".into()));
        }
        Ok(())
    }

    /// `Σ_c |c| a(c) b(c)`, i.e. `|G|` times the inner product (all characters
    /// here are real).
    fn inner_raw(&self, a: &[i64], b: &[i64]) -> i64 {
        self.classes
            .iter()
            .enumerate()
            .map(|(c, cl)| cl.size as i64 * a[c] * b[c])
            .sum()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.values[i][0]
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.class_of[a]
    }

    /// Value of a class function at element `a`.
    pub fn eval(&self, chi: &[i64], a: usize) -> i64 {
        chi[self.class_of[a]]
    }

    pub fn irreducible(&self, i: usize) -> &[i64] {
        &self.values[i]
    }

    /// Character of a permutation action given by the images of each element
    /// (`action[a]` is the permutation of points induced by element `a`).
    pub fn permutation_character(&self, action: &[Perm]) -> Vec<i64> {
        self.classes
            .iter()
            .map(|c| action[c.rep].fixed_points() as i64)
            .collect()
    }

    /// `dim V^H = (1/|H|) Σ_{h∈H} χ(h)`.
    pub fn fixed_dim(&self, chi: &[i64], h: &ElemSet) -> Result<usize> {
        let sum: i64 = h.iter().map(|a| self.eval(chi, a)).sum();
        let n = h.len() as i64;
        if sum % n != 0 || sum < 0 {
            return Err(Error::InconsistentCharacter(format!(
                "fixed-point average {sum}/{n} is not a nonnegative integer"
            )));
        }
        Ok((sum / n) as usize)
    }

    /// Multiplicity of each irreducible in `chi`.
    pub fn isotypic_multiplicities(&self, chi: &[i64]) -> Result<Vec<usize>> {
        let n = self.group_order as i64;
        let mut out = Vec::with_capacity(self.len());
        for (i, row) in self.values.iter().enumerate() {
            let ip = self.inner_raw(chi, row);
            if ip % n != 0 || ip < 0 {
                return Err(Error::InconsistentCharacter(format!(
                    "multiplicity of {} is {ip}/{n}",
                    self.names[i]
                )));
            }
            out.push((ip / n) as usize);
        }
        let deg: i64 = out.iter().enumerate().map(|(i, &m)| m as i64 * self.degree(i)).sum();
        if deg != chi[0] {
            return Err(Error::InconsistentCharacter("decomposition misses a summand".into()));
        }
        Ok(out)
    }
}
