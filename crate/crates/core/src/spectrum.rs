//! Permutation actions of `Γ` on `ℝ^k`, the cube coupling template, and the
//! isotypic spectrum of a `Γ`-commuting matrix.
//!
//! Isotypic projectors are kept as integer matrices
//! `Q_j = deg χ_j · Σ_g χ_j(g) ρ(g)` with `Q_j² = |Γ| Q_j`, so the
//! decomposition itself is exact; only the eigenvalue read-off is floating
//! point.

use std::collections::VecDeque;

use nalgebra::{DMatrix, SymmetricEigen};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{CharacterTable, FiniteGroup, Perm};

/// Dense row-major real matrix.
pub type Matrix = Vec<Vec<f64>>;

/// A homomorphism `Γ → S_k`.
#[derive(Debug)]
pub struct GammaAction {
    pub gamma: FiniteGroup,
    pub chars: CharacterTable,
    images: Vec<Perm>,
}

impl GammaAction {
    /// Extends generator images to a homomorphism, rejecting inconsistent
    /// data. Each pair is (element of `Γ`, permutation of `0..dim`).
    pub fn from_generators(gamma: FiniteGroup, dim: usize, gens: &[(Perm, Perm)]) -> Result<GammaAction> {
        let mut gi = Vec::with_capacity(gens.len());
        for (g, img) in gens {
            let a = gamma
                .index_of(g)
                .ok_or_else(|| Error::Invalid(format!("{g} is not an element of {}", gamma.descriptor())))?;
            if img.degree() != dim {
                return Err(Error::Invalid(format!("image {img} does not act on {dim} points")));
            }
            gi.push((a, img.clone()));
        }
        let n = gamma.order();
        let mut images: Vec<Option<Perm>> = vec![None; n];
        images[0] = Some(Perm::identity(dim));
        let mut queue = VecDeque::from([0usize]);
        while let Some(a) = queue.pop_front() {
            let pa = images[a].clone().unwrap();
            for (g, pg) in &gi {
                let b = gamma.mul(a, *g);
                let pb = pa.compose(pg);
                match &images[b] {
                    Some(p) if *p != pb => {
                        return Err(Error::Invalid("generator images do not define a homomorphism".into()))
                    }
                    Some(_) => {}
                    None => {
                        images[b] = Some(pb);
                        queue.push_back(b);
                    }
                }
            }
        }
        let images: Vec<Perm> = images
            .into_iter()
            .collect::<Option<_>>()
            .ok_or_else(|| Error::Invalid("generators do not generate the group".into()))?;
        for a in 0..n {
            for b in 0..n {
                if images[gamma.mul(a, b)] != images[a].compose(&images[b]) {
                    return Err(Error::Invalid("generator images do not define a homomorphism".into()));
                }
            }
        }
        let chars = CharacterTable::build(&gamma)?;
        Ok(GammaAction { gamma, chars, images })
    }

    /// `S4` acting on the vertices of a cube by rotations, vertices numbered
    /// so that the coupling matrix of [`cube_matrix`] is the adjacency
    /// pattern. `S4` is identified with the permutations of the four long
    /// diagonals `{1,8}, {2,5}, {3,6}, {4,7}`.
    pub fn cube() -> GammaAction {
        let gamma = FiniteGroup::from_descriptor("S4").expect("S4 builds");
        // quarter turn about the axis through faces 1234 and 5678
        let r4 = Perm::from_cycles(8, &[&[0, 1, 2, 3], &[5, 6, 7, 4]]);
        // third turn about the diagonal through vertices 1 and 8
        let r3 = Perm::from_cycles(8, &[&[1, 3, 5], &[2, 4, 6]]);
        let diagonal = [0usize, 1, 2, 3, 1, 2, 3, 0];
        let rep = [0usize, 1, 2, 3];
        let on_diagonals = |p: &Perm| Perm::from_images(rep.iter().map(|&v| diagonal[p.apply(v)]).collect());
        let gens = [(on_diagonals(&r4), r4.clone()), (on_diagonals(&r3), r3.clone())];
        GammaAction::from_generators(gamma, 8, &gens).expect("cube rotations form S4")
    }

    pub fn dim(&self) -> usize {
        self.images[0].degree()
    }

    pub fn image(&self, a: usize) -> &Perm {
        &self.images[a]
    }

    /// Permutation character, one value per element class.
    pub fn character(&self) -> Vec<i64> {
        self.chars.permutation_character(&self.images)
    }

    /// Largest entry of `ρ(g)A - Aρ(g)` over the generators of `Γ`.
    pub fn commutator_norm(&self, a: &Matrix) -> f64 {
        let k = self.dim();
        let mut worst = 0.0f64;
        for &g in self.gamma.generators() {
            let p = &self.images[g];
            let pinv = p.inverse();
            // (ρA)[x][y] = A[p⁻¹(x)][y], (Aρ)[x][y] = A[x][p(y)]
            for x in 0..k {
                for y in 0..k {
                    let pa = a[pinv.apply(x)][y];
                    let ap = a[x][p.apply(y)];
                    worst = worst.max((pa - ap).abs());
                }
            }
        }
        worst
    }

    /// `Q_j` for irreducible `j`.
    pub fn projector(&self, j: usize) -> Vec<Vec<i64>> {
        let k = self.dim();
        let chi = self.chars.irreducible(j);
        let deg = self.chars.degree(j);
        let mut q = vec![vec![0i64; k]; k];
        for a in 0..self.gamma.order() {
            let c = deg * self.chars.eval(chi, a);
            if c == 0 {
                continue;
            }
            let p = &self.images[a];
            for y in 0..k {
                q[p.apply(y)][y] += c;
            }
        }
        q
    }
}

/// `A = c·I + d·(cube adjacency)` with vertices 1..4 and 5..8 on opposite
/// faces and 1~6, 2~7, 3~8, 4~5.
pub fn cube_matrix(c: f64, d: f64) -> Matrix {
    const EDGES: [(usize, usize); 12] = [
        (0, 1), (1, 2), (2, 3), (3, 0),
        (4, 5), (5, 6), (6, 7), (7, 4),
        (0, 5), (1, 6), (2, 7), (3, 4),
    ];
    let mut a = vec![vec![0.0; 8]; 8];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = c;
    }
    for (x, y) in EDGES {
        a[x][y] = d;
        a[y][x] = d;
    }
    a
}

/// One isotypic component `V_j` with `A|V_j = μ_j id`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IsotypicEigen {
    pub j: usize,
    pub irreducible: String,
    pub mu: f64,
    /// `dim V_j`.
    pub dim: usize,
    /// `m_j = dim V_j / deg χ_j`.
    pub multiplicity: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumReport {
    pub components: Vec<IsotypicEigen>,
    /// Largest gap between the isotypic eigenvalues (with multiplicity) and a
    /// symmetric eigensolver, when `A` is symmetric.
    pub eigensolver_deviation: Option<f64>,
}

impl SpectrumReport {
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut out: Vec<f64> = self
            .components
            .iter()
            .flat_map(|c| std::iter::repeat_n(c.mu, c.dim))
            .collect();
        out.sort_by(f64::total_cmp);
        out
    }

    pub fn component(&self, j: usize) -> Option<&IsotypicEigen> {
        self.components.iter().find(|c| c.j == j)
    }
}

const SCALAR_TOL: f64 = 1e-9;

/// Splits `ℝ^k` into isotypic components and reads off the scalar by which
/// `A` acts on each. Fails if `A` does not commute with `Γ` or is not scalar
/// on some component.
pub fn isotypic_spectrum(action: &GammaAction, a: &Matrix) -> Result<SpectrumReport> {
    let k = action.dim();
    if a.len() != k || a.iter().any(|r| r.len() != k) {
        return Err(Error::Invalid(format!("matrix must be {k}x{k}")));
    }
    if a.iter().flatten().any(|x| !x.is_finite()) {
        return Err(Error::Invalid("matrix has non-finite entries".into()));
    }
    let scale = a.iter().flatten().fold(1.0f64, |m, x| m.max(x.abs()));
    let comm = action.commutator_norm(a);
    if comm > SCALAR_TOL * scale {
        return Err(Error::Invalid(format!("matrix does not commute with the action (residual {comm:e})")));
    }
    let order = action.gamma.order() as i64;
    let mults = action.chars.isotypic_multiplicities(&action.character())?;
    let mut components = Vec::new();
    for (j, &mult) in mults.iter().enumerate() {
        if mult == 0 {
            continue;
        }
        let q = action.projector(j);
        check_idempotent(&q, order)?;
        let trace: i64 = (0..k).map(|i| q[i][i]).sum();
        let dim = (trace / order) as usize;
        debug_assert_eq!(dim, mult * action.chars.degree(j) as usize);
        // A Q = μ Q on the image of Q
        let aq: Vec<Vec<f64>> = (0..k)
            .map(|x| (0..k).map(|y| (0..k).map(|z| a[x][z] * q[z][y] as f64).sum()).collect())
            .collect();
        let mu = (0..k).map(|i| aq[i][i]).sum::<f64>() / trace as f64;
        let resid = (0..k)
            .flat_map(|x| (0..k).map(move |y| (x, y)))
            .map(|(x, y)| (aq[x][y] - mu * q[x][y] as f64).abs())
            .fold(0.0f64, f64::max);
        let qscale = q.iter().flatten().fold(1i64, |m, x| m.max(x.abs())) as f64;
        if resid > SCALAR_TOL * scale * qscale {
            return Err(Error::Invalid(format!(
                "matrix is not scalar on the {} component",
                action.chars.names[j]
            )));
        }
        components.push(IsotypicEigen {
            j,
            irreducible: action.chars.names[j].clone(),
            mu,
            dim,
            multiplicity: mult,
        });
    }
    let mut report = SpectrumReport {
        components,
        eigensolver_deviation: None,
    };
    let symmetric = (0..k).all(|x| (0..k).all(|y| (a[x][y] - a[y][x]).abs() <= 1e-12 * scale));
    if symmetric {
        let m = DMatrix::from_fn(k, k, |x, y| a[x][y]);
        let mut ev: Vec<f64> = SymmetricEigen::new(m).eigenvalues.iter().copied().collect();
        ev.sort_by(f64::total_cmp);
        let dev = ev
            .iter()
            .zip(report.eigenvalues())
            .map(|(x, y)| (x - y).abs())
            .fold(0.0f64, f64::max);
        report.eigensolver_deviation = Some(dev);
    }
    Ok(report)
}

fn check_idempotent(q: &[Vec<i64>], order: i64) -> Result<()> {
    let k = q.len();
    for x in 0..k {
        for y in 0..k {
            let s: i64 = (0..k).map(|z| q[x][z] * q[z][y]).sum();
            if s != order * q[x][y] {
                return Err(Error::InconsistentCharacter("isotypic projector is not idempotent".into()));
            }
        }
    }
    Ok(())
}
