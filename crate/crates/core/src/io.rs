//! Problem files, line-delimited report records, golden comparison, and the
//! on-disk catalog cache.
//!
//! A problem file is a JSON object:
//!
//! ```json
//! { "schema": "orbitdeg.problem/1",
//!   "gamma": "S4",
//!   "cube": { "c": 4.0, "d": 1.0 },
//!   "growth": { "alpha": 0.5, "a": 1.0, "b": 1.0, "beta": 2.0, "c": 1.0 } }
//! ```
//!
//! Instead of `cube`, a general problem gives `action` (the degree `k` and
//! generator images in 1-based cycle notation) and `matrix` (`k` dense rows).
//! `growth` is optional.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::burnside::{BurnsideElement, NamedTerm};
use crate::elliptic::{CouplingProblem, DegreeReport, GrowthMetadata};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Perm};
use crate::lattice::{Catalog, CatalogExport};
use crate::spectrum::{GammaAction, Matrix};

pub const PROBLEM_SCHEMA: &str = "orbitdeg.problem/1";
pub const RECORD_SCHEMA: &str = "orbitdeg.record/1";
pub const CATALOG_SCHEMA: &str = "orbitdeg.catalog/1";

/// Environment variable naming the catalog cache directory.
pub const CACHE_ENV: &str = "ORBITDEG_CACHE_DIR";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub schema: String,
    pub gamma: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cube: Option<CubeTemplate>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<ActionSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Matrix>,
    #[serde(default)]
    pub growth: GrowthMetadata,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CubeTemplate {
    pub c: f64,
    pub d: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionSpec {
    pub degree: usize,
    pub generators: Vec<GeneratorImage>,
}

/// `element` acts on the points of `Γ`, `image` on `1..=degree`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorImage {
    pub element: String,
    pub image: String,
}

impl ProblemFile {
    pub fn parse(text: &str) -> Result<ProblemFile> {
        let file: ProblemFile = serde_json::from_str(text)?;
        if file.schema != PROBLEM_SCHEMA {
            return Err(Error::Invalid(format!(
                "problem schema `{}` is not supported (expected `{PROBLEM_SCHEMA}`)",
                file.schema
            )));
        }
        Ok(file)
    }

    pub fn to_problem(&self) -> Result<CouplingProblem> {
        match (&self.cube, &self.action, &self.matrix) {
            (Some(t), None, None) => {
                if self.gamma != "S4" {
                    return Err(Error::Invalid("the cube template needs gamma = S4".into()));
                }
                CouplingProblem::cube(t.c, t.d, self.growth)
            }
            (None, Some(a), Some(m)) => {
                let gamma = FiniteGroup::from_descriptor(&self.gamma)?;
                let gens = a
                    .generators
                    .iter()
                    .map(|g| {
                        Ok((
                            Perm::parse_cycles(gamma.degree(), &g.element)?,
                            Perm::parse_cycles(a.degree, &g.image)?,
                        ))
                    })
                    .collect::<Result<Vec<_>>>()?;
                let action = GammaAction::from_generators(gamma, a.degree, &gens)?;
                CouplingProblem::new(action, m.clone(), self.growth)
            }
            _ => Err(Error::Invalid("give either `cube`, or both `action` and `matrix`".into())),
        }
    }
}

pub fn read_problem(path: &Path) -> Result<CouplingProblem> {
    ProblemFile::parse(&fs::read_to_string(path)?)?.to_problem()
}

/// One JSON line with `schema`, `kind` and the fields of `body`, keys sorted.
pub fn record<T: Serialize>(kind: &str, body: &T) -> Result<String> {
    let mut map = Map::new();
    map.insert("schema".into(), Value::from(RECORD_SCHEMA));
    map.insert("kind".into(), Value::from(kind));
    match serde_json::to_value(body)? {
        Value::Object(fields) => map.extend(fields),
        other => {
            map.insert("value".into(), other);
        }
    }
    Ok(serde_json::to_string(&Value::Object(map))?)
}

/// Records for a full report: components, conditions, counters, factors,
/// degree terms, orbit types.
pub fn report_records(r: &DegreeReport) -> Result<Vec<String>> {
    let mut out = Vec::new();
    out.push(record(
        "problem",
        &serde_json::json!({ "k": r.k, "max_mode": r.max_mode, "fold_bound": r.fold_bound }),
    )?);
    for c in &r.components {
        out.push(record("component", c)?);
    }
    out.push(record(
        "condition",
        &serde_json::json!({
            "non_resonance": r.condition_d.satisfied,
            "resonant_modes": r.resonant_modes,
            "odd_multiples_clear": r.odd_multiples_clear,
        }),
    )?);
    for c in &r.counters.mode_counts {
        out.push(record("mode_count", c)?);
    }
    for c in &r.counters.mode_multiplicities {
        out.push(record("mode_multiplicity", c)?);
    }
    for c in &r.counters.classes {
        out.push(record("class_counter", c)?);
    }
    for f in &r.factors {
        out.push(record("factor", f)?);
    }
    for t in &r.degree {
        out.push(record("term", t)?);
    }
    for o in &r.non_radial {
        out.push(record("non_radial", o)?);
    }
    for o in &r.radial {
        out.push(record("radial", o)?);
    }
    Ok(out)
}

/// `term` records of a line-delimited document; other kinds are skipped.
pub fn read_terms(text: &str) -> Result<Vec<NamedTerm>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let v: Value = serde_json::from_str(line)?;
        if v.get("schema").and_then(Value::as_str) != Some(RECORD_SCHEMA) {
            return Err(Error::Invalid(format!("line {}: missing or unknown schema", i + 1)));
        }
        if v.get("kind").and_then(Value::as_str) == Some("term") {
            out.push(serde_json::from_value(v)?);
        }
    }
    Ok(out)
}

/// Multiset difference of two expansions.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct GoldenDiff {
    /// In the expected expansion, absent from the actual one.
    pub missing: Vec<NamedTerm>,
    /// In the actual expansion, absent from the expected one.
    pub unexpected: Vec<NamedTerm>,
}

impl GoldenDiff {
    pub fn is_match(&self) -> bool {
        self.missing.is_empty() && self.unexpected.is_empty()
    }
}

pub fn golden_diff(actual: &[NamedTerm], expected: &[NamedTerm]) -> GoldenDiff {
    let mut count: BTreeMap<&NamedTerm, i64> = BTreeMap::new();
    for t in actual {
        *count.entry(t).or_default() += 1;
    }
    for t in expected {
        *count.entry(t).or_default() -= 1;
    }
    let mut diff = GoldenDiff::default();
    for (t, c) in count {
        let list = if c > 0 { &mut diff.unexpected } else { &mut diff.missing };
        list.extend(std::iter::repeat_n(t.clone(), c.unsigned_abs() as usize));
    }
    diff
}

/// Parses the text form printed by [`BurnsideElement::display`], e.g.
/// `(O(2) x S4p) - 2(D1 x S4p)`, or `0`.
pub fn parse_element(cat: &Catalog, text: &str) -> Result<BurnsideElement> {
    let bad = |why: &str| Error::Invalid(format!("cannot parse `{text}`: {why}"));
    let s = text.trim();
    if s == "0" {
        return Ok(BurnsideElement::zero(cat));
    }
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    let mut terms = Vec::new();
    let skip_ws = |i: &mut usize| {
        while *i < chars.len() && chars[*i].is_whitespace() {
            *i += 1;
        }
    };
    while i < chars.len() {
        skip_ws(&mut i);
        let mut sign = 1i64;
        if i < chars.len() && (chars[i] == '+' || chars[i] == '-') {
            if chars[i] == '-' {
                sign = -1;
            }
            i += 1;
            skip_ws(&mut i);
        } else if !terms.is_empty() {
            return Err(bad("expected + or - between terms"));
        }
        let start = i;
        while i < chars.len() && chars[i].is_ascii_digit() {
            i += 1;
        }
        let coeff: i64 = if start == i {
            1
        } else {
            chars[start..i].iter().collect::<String>().parse().map_err(|_| bad("coefficient too large"))?
        };
        skip_ws(&mut i);
        if i >= chars.len() || chars[i] != '(' {
            return Err(bad("expected `(`"));
        }
        let open = i;
        let mut depth = 0;
        loop {
            if i >= chars.len() {
                return Err(bad("unbalanced parentheses"));
            }
            match chars[i] {
                '(' => depth += 1,
                ')' => depth -= 1,
                _ => {}
            }
            i += 1;
            if depth == 0 {
                break;
            }
        }
        let name: String = chars[open + 1..i - 1].iter().collect();
        terms.push((cat.by_name(name.trim())?, sign * coeff));
        skip_ws(&mut i);
    }
    BurnsideElement::from_terms(cat, terms)
}

#[derive(Serialize, Deserialize)]
struct CachedCatalog {
    schema: String,
    export: CatalogExport,
}

fn cache_file(dir: &Path, k: &str, fold_bound: u32) -> PathBuf {
    let safe: String = k.chars().map(|c| if c.is_ascii_alphanumeric() { c } else { '_' }).collect();
    dir.join(format!("catalog-{safe}-F{fold_bound}.json"))
}

/// Catalog export for `(k, fold_bound)`, read from `dir` if cached, built and
/// stored otherwise. A cache entry for a different schema is rebuilt.
pub fn cached_export(dir: Option<&Path>, k: &str, fold_bound: u32) -> Result<CatalogExport> {
    if let Some(dir) = dir {
        let path = cache_file(dir, k, fold_bound);
        if let Ok(text) = fs::read_to_string(&path) {
            if let Ok(c) = serde_json::from_str::<CachedCatalog>(&text) {
                if c.schema == CATALOG_SCHEMA && c.export.k == k && c.export.fold_bound == fold_bound {
                    return Ok(c.export);
                }
            }
        }
        let export = Catalog::from_descriptor(k, fold_bound)?.export();
        fs::create_dir_all(dir)?;
        let entry = CachedCatalog {
            schema: CATALOG_SCHEMA.into(),
            export,
        };
        fs::write(&path, serde_json::to_string(&entry)?)?;
        return Ok(entry.export);
    }
    Ok(Catalog::from_descriptor(k, fold_bound)?.export())
}
