//! Odd `Γ`-coupled elliptic systems `-Δu = f(u)` on the unit disc: mode
//! tables, the non-resonance condition, the parity counters, and the
//! existence report.
//!
//! The linearisation at the origin is `-Δ - A` on `H¹₀(D; ℝ^k)`. Its
//! negative spectrum is indexed by the isotypic components `V_j` of `A`
//! (eigenvalue `μ_j`) and the Dirichlet modes `s_{n,m}` below `μ_j`, each
//! contributing the basic degree of `W_m ⊗ U_j^-` to the power `m_j`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::bessel::{watson_bound, ZeroTable, MAX_ORDER};
use crate::burnside::{BurnsideElement, NamedTerm};
use crate::degree::{basic_degree, gdeg_field, TraceFactor};
use crate::error::{Error, Result};
use crate::lattice::Catalog;
use crate::representations::{maximal_orbit_types, maximal_orbit_types_union, IrrDescriptor, Sign};
use crate::spectrum::{cube_matrix, isotypic_spectrum, GammaAction, IsotypicEigen, Matrix, SpectrumReport};

/// Eigenvalues closer than this to a Bessel zero count as resonant.
pub const RESONANCE_GAP: f64 = 1e-8;

/// Largest supported `|Γ|`.
pub const MAX_GAMMA_ORDER: usize = 48;

/// Growth data of the nonlinearity: `|f(x)| ≤ a|x|^α + b` and
/// `f(x) = Ax + o(|x|^β)`-type bounds with constant `c`. Only validated.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GrowthMetadata {
    pub alpha: f64,
    pub a: f64,
    pub b: f64,
    pub beta: f64,
    pub c: f64,
}

impl Default for GrowthMetadata {
    fn default() -> Self {
        GrowthMetadata {
            alpha: 0.5,
            a: 1.0,
            b: 1.0,
            beta: 2.0,
            c: 1.0,
        }
    }
}

impl GrowthMetadata {
    pub fn validate(&self) -> Result<()> {
        let bad = |what: &str| Err(Error::Invalid(format!("growth metadata: {what}")));
        if !(self.alpha > 0.0 && self.alpha < 1.0) {
            return bad("alpha must lie in (0, 1)");
        }
        if !(self.beta > 1.0) || !self.beta.is_finite() {
            return bad("beta must exceed 1");
        }
        for (name, v) in [("a", self.a), ("b", self.b), ("c", self.c)] {
            if !(v > 0.0) || !v.is_finite() {
                return bad(&format!("{name} must be positive"));
            }
        }
        Ok(())
    }
}

/// `Γ` acting on `ℝ^k` by permutations, the linearisation `A`, and growth
/// metadata.
#[derive(Debug)]
pub struct CouplingProblem {
    pub action: GammaAction,
    pub matrix: Matrix,
    pub growth: GrowthMetadata,
    /// `(c, d)` when the matrix came from the cube template.
    pub cube: Option<(f64, f64)>,
}

impl CouplingProblem {
    pub fn new(action: GammaAction, matrix: Matrix, growth: GrowthMetadata) -> Result<CouplingProblem> {
        growth.validate()?;
        if action.gamma.order() > MAX_GAMMA_ORDER {
            return Err(Error::OrderLimit {
                order: action.gamma.order(),
                limit: MAX_GAMMA_ORDER,
            });
        }
        let problem = CouplingProblem {
            action,
            matrix,
            growth,
            cube: None,
        };
        // rejects wrong shapes, non-commuting and non-semisimple matrices
        problem.spectrum()?;
        Ok(problem)
    }

    /// Eight oscillators on the vertices of a cube, each coupled to its three
    /// neighbours with strength `d`.
    pub fn cube(c: f64, d: f64, growth: GrowthMetadata) -> Result<CouplingProblem> {
        let mut p = CouplingProblem::new(GammaAction::cube(), cube_matrix(c, d), growth)?;
        p.cube = Some((c, d));
        Ok(p)
    }

    /// Descriptor of `K = Γ × Z2`, the finite factor of the symmetry group.
    pub fn k_descriptor(&self) -> String {
        format!("{}*Z2", self.action.gamma.descriptor())
    }

    pub fn spectrum(&self) -> Result<SpectrumReport> {
        isotypic_spectrum(&self.action, &self.matrix)
    }
}

/// Zeros `s_{n,m}` for every mode that can lie below `μ_max`.
#[derive(Clone, Debug)]
pub struct ModeTable {
    pub mu_max: f64,
    /// Minimal `M` with `√(M(M+2)) ≥ μ_max`; modes above it have no zero
    /// below `μ_max`.
    pub max_mode: u32,
    table: ZeroTable,
}

impl ModeTable {
    pub fn for_bound(mu_max: f64) -> Result<ModeTable> {
        let mu_max = mu_max.max(0.0);
        let mut m = 0u32;
        while watson_bound(m) < mu_max {
            m += 1;
            if m >= MAX_ORDER {
                return Err(Error::OutOfRange(format!("eigenvalue {mu_max} needs more than {MAX_ORDER} modes")));
            }
        }
        let table = ZeroTable::build(m, mu_max + 1.0)?;
        Ok(ModeTable {
            mu_max,
            max_mode: m,
            table,
        })
    }

    pub fn zeros(&self, m: u32) -> &[f64] {
        self.table.mode(m)
    }

    pub fn get(&self, n: usize, m: u32) -> Option<f64> {
        self.table.get(n, m)
    }

    /// `𝔫_m(μ)`: the number of `n` with `s_{n,m} < μ`.
    pub fn count_below(&self, m: u32, mu: f64) -> usize {
        self.zeros(m).iter().take_while(|&&s| s < mu).count()
    }

    /// Largest mode with a zero below `μ`.
    pub fn top_active_mode(&self, mu: f64) -> Option<u32> {
        (0..=self.max_mode).rev().find(|&m| self.count_below(m, mu) > 0)
    }
}

/// A zero `s_{n,m}` within [`RESONANCE_GAP`] of an eigenvalue.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Collision {
    pub n: usize,
    pub m: u32,
    pub zero: f64,
    pub mu: f64,
}

impl Collision {
    pub fn into_error(self) -> Error {
        Error::Resonance {
            n: self.n,
            m: self.m as usize,
            zero: self.zero,
            mu: self.mu,
            gap: (self.zero - self.mu).abs(),
        }
    }
}

fn collisions(sigma_plus: &[f64], modes: &ModeTable) -> Vec<Collision> {
    let mut out = Vec::new();
    for &mu in sigma_plus.iter().filter(|&&mu| mu > 0.0) {
        for m in 0..=modes.max_mode {
            for (i, &zero) in modes.zeros(m).iter().enumerate() {
                if (zero - mu).abs() <= RESONANCE_GAP {
                    out.push(Collision { n: i + 1, m, zero, mu });
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConditionD {
    pub satisfied: bool,
    pub witness: Option<Collision>,
}

/// Non-resonance: every positive eigenvalue is more than [`RESONANCE_GAP`]
/// away from every `s_{n,m}`. Eigenvalues above the table bound are not
/// covered and are rejected.
pub fn check_condition_d(sigma_plus: &[f64], modes: &ModeTable) -> Result<ConditionD> {
    if let Some(&mu) = sigma_plus.iter().find(|&&mu| mu > modes.mu_max) {
        return Err(Error::OutOfRange(format!("eigenvalue {mu} exceeds the mode table bound {}", modes.mu_max)));
    }
    let witness = collisions(sigma_plus, modes).into_iter().next();
    Ok(ConditionD {
        satisfied: witness.is_none(),
        witness,
    })
}

/// Modes `m` carrying a collision.
pub fn resonant_set(sigma_plus: &[f64], modes: &ModeTable) -> BTreeSet<u32> {
    collisions(sigma_plus, modes).into_iter().map(|c| c.m).collect()
}

/// True iff no odd multiple `(2k-1)l` of `l` is resonant.
pub fn check_s3_1(resonant: &BTreeSet<u32>, l: u32) -> bool {
    l > 0 && !resonant.iter().any(|&c| c % l == 0 && (c / l) % 2 == 1)
}

/// Positive isotypic eigenvalues.
pub fn sigma_plus(spec: &SpectrumReport) -> Vec<f64> {
    spec.components.iter().map(|c| c.mu).filter(|&mu| mu > 0.0).collect()
}

/// One factor per zero `s_{n,m} < μ_j`, carrying the isotypic multiplicity
/// `m_j` as exponent.
pub fn trace_factors(spec: &SpectrumReport, modes: &ModeTable) -> Vec<TraceFactor> {
    let mut out = Vec::new();
    for m in 0..=modes.max_mode {
        for comp in spec.components.iter().filter(|c| c.mu > 0.0) {
            for (i, &zero) in modes.zeros(m).iter().enumerate().take_while(|(_, &s)| s < comp.mu) {
                out.push(TraceFactor {
                    j: comp.j,
                    m,
                    n: i + 1,
                    mu: comp.mu,
                    zero,
                    multiplicity: comp.multiplicity,
                    rep: IrrDescriptor::new(m, comp.j, Sign::Minus).to_string(),
                });
            }
        }
    }
    out
}

/// `𝔫_m(μ_j)` for one component and mode.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ModeCount {
    pub m: u32,
    pub j: usize,
    pub mu: f64,
    pub count: usize,
}

/// `𝔪_m = Σ_{μ ∈ σ+} 𝔫_m(μ) dim E(μ)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ModeMultiplicity {
    pub m: u32,
    pub total: usize,
}

/// `𝔫_j(H_ν)` for each component and `𝔪(H_ν) = Σ_j 𝔫_j(H_ν) m_j`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FoldCounter {
    pub nu: u32,
    pub class: String,
    pub per_component: Vec<(usize, usize)>,
    pub total: usize,
}

/// Counters for one `H ∈ 𝔐₁` along its fold family.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MaximalClassCounters {
    pub class: String,
    pub id: usize,
    /// Components `j` for which `H` is a maximal orbit type of `W_1 ⊗ U_j^-`.
    pub from: Vec<usize>,
    pub folds: Vec<FoldCounter>,
    /// Largest `ν` with `𝔪(H_ν)` odd.
    pub nu0: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counters {
    pub mode_counts: Vec<ModeCount>,
    pub mode_multiplicities: Vec<ModeMultiplicity>,
    pub classes: Vec<MaximalClassCounters>,
}

/// Basic degrees `deg_{ν,j}` of `W_ν ⊗ U_j^-`, computed directly and checked
/// against `Ψ_ν(deg_{1,j})`.
struct DegreeCache<'a> {
    cat: &'a Catalog,
    degrees: BTreeMap<(u32, usize), BurnsideElement>,
}

impl<'a> DegreeCache<'a> {
    fn new(cat: &'a Catalog) -> Self {
        DegreeCache {
            cat,
            degrees: BTreeMap::new(),
        }
    }

    fn get(&mut self, nu: u32, j: usize) -> Result<&BurnsideElement> {
        let cat = self.cat;
        if !self.degrees.contains_key(&(nu, j)) {
            let d = basic_degree(&IrrDescriptor::new(nu, j, Sign::Minus), cat)?;
            if nu > 1 {
                let base = self.get(1, j)?.fold_hom(nu, cat)?;
                if base != d {
                    return Err(Error::InconsistentCharacter(format!(
                        "deg of V-_{{{nu},{j}}} differs from the {nu}-fold image of deg of V-_{{1,{j}}}"
                    )));
                }
            }
            self.degrees.insert((nu, j), d);
        }
        Ok(&self.degrees[&(nu, j)])
    }
}

/// The mode-one maximal orbit types `𝔐₁` over every component of `A`.
pub fn maximal_mode_one(spec: &SpectrumReport, cat: &Catalog) -> Result<Vec<(usize, Vec<usize>)>> {
    let reps: Vec<IrrDescriptor> = spec
        .components
        .iter()
        .map(|c| IrrDescriptor::new(1, c.j, Sign::Minus))
        .collect();
    Ok(maximal_orbit_types_union(&reps, cat)?
        .into_iter()
        .map(|(id, from)| (id, from.iter().map(|r| r.j).collect()))
        .collect())
}

/// All counter families. Fails on resonance.
pub fn counters(spec: &SpectrumReport, modes: &ModeTable, cat: &Catalog) -> Result<Counters> {
    counters_inner(spec, modes, cat, &mut DegreeCache::new(cat))
}

fn counters_inner(spec: &SpectrumReport, modes: &ModeTable, cat: &Catalog, cache: &mut DegreeCache) -> Result<Counters> {
    let sp = sigma_plus(spec);
    if let Some(w) = check_condition_d(&sp, modes)?.witness {
        return Err(w.into_error());
    }
    let positive: Vec<&IsotypicEigen> = spec.components.iter().filter(|c| c.mu > 0.0).collect();
    let mut mode_counts = Vec::new();
    let mut mode_multiplicities = Vec::new();
    for m in 0..=modes.max_mode {
        let mut total = 0;
        for c in &positive {
            let count = modes.count_below(m, c.mu);
            total += count * c.dim;
            mode_counts.push(ModeCount {
                m,
                j: c.j,
                mu: c.mu,
                count,
            });
        }
        mode_multiplicities.push(ModeMultiplicity { m, total });
    }
    let top = positive
        .iter()
        .filter_map(|c| modes.top_active_mode(c.mu))
        .max()
        .unwrap_or(0);
    if top > cat.fold_bound {
        return Err(Error::CatalogTooSmall {
            required: top,
            available: cat.fold_bound,
        });
    }
    let mut classes = Vec::new();
    for (id, from) in maximal_mode_one(spec, cat)? {
        let mut folds = Vec::new();
        let mut nu0 = None;
        for nu in 1..=top.max(1) {
            let h_nu = cat.fold_class(id, nu)?;
            let mut per_component = Vec::new();
            let mut total = 0;
            for c in &positive {
                let zeros = modes.count_below(nu, c.mu);
                let count = if zeros > 0 && cache.get(nu, c.j)?.coeff(h_nu) != 0 {
                    zeros
                } else {
                    0
                };
                per_component.push((c.j, count));
                total += count * c.multiplicity;
            }
            if total % 2 == 1 {
                nu0 = Some(nu);
            }
            folds.push(FoldCounter {
                nu,
                class: cat.name(h_nu).to_string(),
                per_component,
                total,
            });
        }
        classes.push(MaximalClassCounters {
            class: cat.name(id).to_string(),
            id,
            from,
            folds,
            nu0,
        });
    }
    Ok(Counters {
        mode_counts,
        mode_multiplicities,
        classes,
    })
}

/// A non-radial orbit type guaranteed by an odd parity counter.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NonRadialOrbit {
    /// The class `H ∈ 𝔐₁`.
    pub class: String,
    /// `Ψ_m(H)` with `m` left symbolic.
    pub family: String,
    pub nu0: u32,
    /// `H_{ν₀}`.
    pub folded_class: String,
    /// `𝔪(H_{ν₀})`.
    pub parity: usize,
    /// Coefficient of `H_{ν₀}` in the full degree.
    pub coefficient: i64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RadialOrbit {
    pub class: String,
    pub coefficient: i64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DegreeReport {
    pub k: String,
    pub components: Vec<IsotypicEigen>,
    pub condition_d: ConditionD,
    pub resonant_modes: Vec<u32>,
    /// `(l, holds)` for `l = 1..=max_mode`.
    pub odd_multiples_clear: Vec<(u32, bool)>,
    pub max_mode: u32,
    pub fold_bound: u32,
    pub counters: Counters,
    pub factors: Vec<TraceFactor>,
    pub degree: Vec<NamedTerm>,
    pub non_radial: Vec<NonRadialOrbit>,
    pub radial: Vec<RadialOrbit>,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ReportOptions {
    /// Catalog fold bound; defaults to the largest active mode.
    pub max_mode: Option<u32>,
}

/// Fold bound a catalog needs for `problem`.
pub fn required_fold_bound(problem: &CouplingProblem) -> Result<u32> {
    let spec = problem.spectrum()?;
    let sp = sigma_plus(&spec);
    let modes = ModeTable::for_bound(sp.iter().copied().fold(0.0, f64::max))?;
    Ok(sp.iter().filter_map(|&mu| modes.top_active_mode(mu)).max().unwrap_or(0).max(1))
}

/// Builds the catalog and runs [`existence_report_in`].
pub fn existence_report(problem: &CouplingProblem, opts: ReportOptions) -> Result<DegreeReport> {
    let need = required_fold_bound(problem)?;
    let bound = match opts.max_mode {
        Some(b) if b < need => {
            return Err(Error::CatalogTooSmall {
                required: need,
                available: b,
            })
        }
        Some(b) => b,
        None => need,
    };
    let cat = Catalog::from_descriptor(&problem.k_descriptor(), bound)?;
    existence_report_in(problem, &cat)
}

/// Spectrum, modes, counters and degree for `problem` over `cat`.
pub fn existence_report_in(problem: &CouplingProblem, cat: &Catalog) -> Result<DegreeReport> {
    let k = problem.k_descriptor();
    if cat.amb.k.descriptor().to_string() != k {
        return Err(Error::Invalid(format!("catalog is over {}, problem needs {k}", cat.amb.k.descriptor())));
    }
    let spec = problem.spectrum()?;
    let sp = sigma_plus(&spec);
    let modes = ModeTable::for_bound(sp.iter().copied().fold(0.0, f64::max))?;
    let condition_d = check_condition_d(&sp, &modes)?;
    let resonant = resonant_set(&sp, &modes);
    let odd_multiples_clear = (1..=modes.max_mode.max(1)).map(|l| (l, check_s3_1(&resonant, l))).collect();
    if let Some(w) = condition_d.witness {
        return Err(w.into_error());
    }
    let mut cache = DegreeCache::new(cat);
    let counters = counters_inner(&spec, &modes, cat, &mut cache)?;
    let factors = trace_factors(&spec, &modes);
    for mm in &counters.mode_multiplicities {
        let from_factors: usize = factors
            .iter()
            .filter(|f| f.m == mm.m)
            .map(|f| f.multiplicity * problem.action.chars.degree(f.j) as usize)
            .sum();
        if from_factors != mm.total {
            return Err(Error::InconsistentCharacter(format!(
                "mode {} exponent {from_factors} differs from the multiplicity count {}",
                mm.m, mm.total
            )));
        }
    }
    let degree = gdeg_field(cat, &factors)?;

    let mut non_radial = Vec::new();
    for c in &counters.classes {
        let Some(nu0) = c.nu0 else { continue };
        let fc = &c.folds[nu0 as usize - 1];
        let h = cat.fold_class(c.id, nu0)?;
        non_radial.push(NonRadialOrbit {
            class: c.class.clone(),
            family: cat.family_template(c.id).unwrap_or_else(|| c.class.clone()),
            nu0,
            folded_class: fc.class.clone(),
            parity: fc.total,
            coefficient: degree.coeff(h),
        });
    }

    // radial types: maximal orbit types of each mode-zero factor that
    // survive in the degree
    let mode_zero: BTreeSet<usize> = factors.iter().filter(|f| f.m == 0).map(|f| f.j).collect();
    let mut candidates = BTreeSet::new();
    for &j in &mode_zero {
        candidates.extend(maximal_orbit_types(&IrrDescriptor::new(0, j, Sign::Minus), cat)?);
    }
    let radial = candidates
        .into_iter()
        .filter(|&id| degree.coeff(id) != 0)
        .map(|id| RadialOrbit {
            class: cat.name(id).to_string(),
            coefficient: degree.coeff(id),
        })
        .collect();

    Ok(DegreeReport {
        k,
        components: spec.components,
        condition_d,
        resonant_modes: resonant.into_iter().collect(),
        odd_multiples_clear,
        max_mode: modes.max_mode,
        fold_bound: cat.fold_bound,
        counters,
        factors,
        degree: degree.to_named(cat),
        non_radial,
        radial,
    })
}
