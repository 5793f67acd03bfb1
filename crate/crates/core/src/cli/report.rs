use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use serde::Serialize;

use super::config::{JobConfig, Task};
use crate::bruhat::{
    closure_codim_consistency, counting_identities, expected_dense_set, stratify, IdentityReport,
};
use crate::elliptic::{dominant_form, grade, EllipticElement, GradedDecomposition, GradingDims};
use crate::error::{Error, Result};
use crate::lowrank::{lowrank_suite, LowRankReport};
use crate::rational::{self, Rat, Q};
use crate::realform::{accepted_witnesses, compact_roots, criterion_s, known_vector_field_note, CriterionVerdict, InnerInvolution};
use crate::rootsys::{Root, RootSystem};
use crate::weyl::{coset_sets, WeylGroup};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Random samples per class in the low-rank suite.
pub const LOWRANK_SAMPLES: usize = 1000;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub config: JobConfig,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub root_system: Option<RootSystemSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grading: Option<GradingSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stratification: Option<StratificationSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub identities: Option<IdentitySection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub criterion: Option<CriterionSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lowrank: Option<LowRankReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootSystemSection {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub cartan: Vec<Vec<i64>>,
    pub rank: usize,
    pub positive_roots: Vec<Root>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weyl_order: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelRow {
    pub level: Rat,
    pub roots: Vec<Root>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradingSection {
    #[serde(with = "rational::vec_as_str")]
    pub elliptic_coeffs: Vec<Q>,
    pub dominant: bool,
    pub levels: Vec<LevelRow>,
    pub levi_roots: Vec<Root>,
    pub u_plus: Vec<Root>,
    #[serde(with = "rational::vec_as_str")]
    pub omega_weights: Vec<Q>,
    pub dims: GradingDims,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellRow {
    pub word: Vec<usize>,
    pub n: usize,
    pub cell_dim: usize,
    pub u_dim: usize,
    pub gamma: Vec<Root>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StratificationSection {
    #[serde(with = "rational::vec_as_str")]
    pub dominant_coeffs: Vec<Q>,
    /// Reduced word of `w` with `w·T` dominant.
    pub conjugator_word: Vec<usize>,
    pub levi_roots: Vec<Root>,
    pub levi_group_order: usize,
    pub coset_count: usize,
    pub cells: Vec<CellRow>,
    pub histogram: BTreeMap<usize, usize>,
    pub unique_minimum: bool,
    pub dense_o: Vec<Vec<usize>>,
    pub dense_o_matches_expected: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentitySection {
    #[serde(with = "rational::vec_as_str")]
    pub dominant_coeffs: Vec<Q>,
    pub checked: usize,
    pub failures: usize,
    pub cells: Vec<IdentityReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionSection {
    #[serde(with = "rational::vec_as_str")]
    pub elliptic_coeffs: Vec<Q>,
    pub involution_coweight: Vec<i64>,
    pub compact_positive_roots: Vec<Root>,
    pub verdict: CriterionVerdict,
    pub accepted_systems: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'static str>,
}

impl Report {
    /// Descriptions of every internal check that did not hold.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if let Some(id) = &self.identities {
            for c in id.cells.iter().filter(|c| !c.all_hold()) {
                out.push(format!(
                    "counting identities fail for sigma = {:?}: {}",
                    c.word,
                    c.counterexample.as_deref().unwrap_or("")
                ));
            }
        }
        if let Some(s) = &self.stratification {
            if !s.unique_minimum {
                out.push("stratification has no unique open cell".into());
            }
        }
        if let Some(l) = &self.lowrank {
            if !l.passed() {
                out.push("low-rank matrix checks failed".into());
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

fn roots_of(rs: &RootSystem, idx: impl IntoIterator<Item = usize>) -> Vec<Root> {
    idx.into_iter().map(|i| rs.root(i).clone()).collect()
}

fn grading_section(rs: &RootSystem, g: &GradedDecomposition) -> GradingSection {
    GradingSection {
        elliptic_coeffs: g.element.coeffs().to_vec(),
        dominant: g.element.is_dominant(),
        levels: g
            .levels
            .iter()
            .map(|(l, idx)| LevelRow {
                level: Rat(*l),
                roots: roots_of(rs, idx.iter().copied()),
            })
            .collect(),
        levi_roots: roots_of(rs, g.levi.iter().copied()),
        u_plus: roots_of(rs, g.u_plus.iter().copied()),
        omega_weights: g.omega_weights(),
        dims: g.dims,
    }
}

/// Executes every task in `config` and assembles the report.
pub fn run(config: &JobConfig) -> Result<Report> {
    let rs = config.validate()?;
    let tasks = config.task_set();
    let mut report = Report {
        tool: "flagstrat",
        version: VERSION,
        config: config.clone(),
        root_system: None,
        grading: None,
        stratification: None,
        identities: None,
        criterion: None,
        lowrank: None,
    };
    if let Some(rs) = &rs {
        let needs_group = tasks.iter().any(|t| matches!(t, Task::Stratify | Task::Identities | Task::Criterion));
        let group = needs_group.then(|| WeylGroup::enumerate(rs, config.weyl_cap)).transpose()?;
        report.root_system = Some(RootSystemSection {
            label: config.type_label.clone(),
            cartan: rs.cartan().rows(),
            rank: rs.rank(),
            positive_roots: rs.positive_roots().to_vec(),
            weyl_order: group.as_ref().map(WeylGroup::order),
        });
        let t = EllipticElement::new(config.elliptic_coeffs.clone());
        if tasks.contains(&Task::Grade) {
            report.grading = Some(grading_section(rs, &grade(rs, &t)?));
        }
        if let Some(group) = &group {
            let (w, dominant) = dominant_form(rs, &t)?;
            let graded = grade(rs, &dominant)?;
            if tasks.contains(&Task::Stratify) {
                let strat = stratify(rs, group, &graded)?;
                let codim = closure_codim_consistency(&strat);
                let dense: std::collections::BTreeSet<usize> =
                    strat.dense_o.iter().map(|&i| strat.cells[i].sigma).collect();
                let sets_len = strat.cells.len();
                report.stratification = Some(StratificationSection {
                    dominant_coeffs: dominant.coeffs().to_vec(),
                    conjugator_word: w.word_one_based(),
                    levi_roots: roots_of(rs, graded.levi.iter().copied()),
                    levi_group_order: strat.levi_group_order,
                    coset_count: sets_len,
                    cells: strat
                        .cells
                        .iter()
                        .map(|c| CellRow {
                            word: c.word.iter().map(|i| i + 1).collect(),
                            n: c.n,
                            cell_dim: c.cell_dim,
                            u_dim: c.u_dim,
                            gamma: roots_of(rs, c.gamma.iter().copied()),
                        })
                        .collect(),
                    histogram: codim.histogram,
                    unique_minimum: codim.unique_minimum,
                    dense_o: strat
                        .dense_o
                        .iter()
                        .map(|&i| strat.cells[i].word.iter().map(|j| j + 1).collect())
                        .collect(),
                    dense_o_matches_expected: dense == expected_dense_set(rs, group, &graded),
                });
            }
            if tasks.contains(&Task::Identities) {
                let sets = coset_sets(rs, group, &graded.levi)?;
                let cells = sets
                    .cosets
                    .iter()
                    .map(|&s| counting_identities(rs, group, &sets, group.element(s), &graded))
                    .collect::<Result<Vec<_>>>()?;
                report.identities = Some(IdentitySection {
                    dominant_coeffs: dominant.coeffs().to_vec(),
                    checked: cells.len(),
                    failures: cells.iter().filter(|c| !c.all_hold()).count(),
                    cells,
                });
            }
            if tasks.contains(&Task::Criterion) {
                let z = config.involution_coweight.clone().expect("validated");
                let inv = InnerInvolution::new(z.clone());
                let k = compact_roots(rs, &inv)?;
                let verdict = criterion_s(rs, group, &t, &inv)?;
                report.criterion = Some(CriterionSection {
                    elliptic_coeffs: t.coeffs().to_vec(),
                    involution_coweight: z,
                    compact_positive_roots: roots_of(rs, k.compact.iter().copied().filter(|&i| rs.is_positive_index(i))),
                    accepted_systems: accepted_witnesses(rs, group, &t, &inv)?.len(),
                    note: config
                        .type_label
                        .as_deref()
                        .and_then(|l| known_vector_field_note(&l.to_ascii_uppercase(), &t, &inv)),
                    verdict,
                });
            }
        }
    }
    if tasks.contains(&Task::LowrankSuite) {
        report.lowrank = Some(lowrank_suite(config.seed, LOWRANK_SAMPLES)?);
    }
    Ok(report)
}

/// Writes `contents` to `path` through a temporary file in the same
/// directory, so readers never observe a partial report.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let io = |e: std::io::Error| Error::Io(format!("{}: {e}", path.display()));
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(contents.as_bytes()).map_err(io)?;
    tmp.as_file().sync_all().map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn word(w: &[usize]) -> String {
    if w.is_empty() {
        "e".into()
    } else {
        w.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join(" ")
    }
}

/// Plain-text rendering of a report.
pub fn render_text(r: &Report) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{} {}", r.tool, r.version);
    let tasks: Vec<String> = r.config.task_set().iter().map(ToString::to_string).collect();
    let _ = writeln!(s, "tasks: {}", tasks.join(", "));
    if let Some(rs) = &r.root_system {
        let _ = writeln!(s, "\nroot system {} (rank {})", rs.label.as_deref().unwrap_or("custom"), rs.rank);
        let _ = writeln!(s, "  positive roots: {}", join(&rs.positive_roots));
        if let Some(o) = rs.weyl_order {
            let _ = writeln!(s, "  |W| = {o}");
        }
    }
    if let Some(g) = &r.grading {
        let _ = writeln!(s, "\ngrading, -iT = {}", join(&g.elliptic_coeffs));
        for row in &g.levels {
            let _ = writeln!(s, "  level {:>5}: {}", row.level.0.to_string(), join(&row.roots));
        }
        let _ = writeln!(s, "  levi roots: {}", join(&g.levi_roots));
        let d = &g.dims;
        let _ = writeln!(
            s,
            "  dim g = {}, dim l = {}, dim u+ = {}, dim q = {}, dim G/Q = {}",
            d.dim_g, d.dim_levi, d.r, d.dim_parabolic, d.dim_flag
        );
    }
    if let Some(st) = &r.stratification {
        let _ = writeln!(
            s,
            "\nstratification, dominant -iT = {} (conjugator {})",
            join(&st.dominant_coeffs),
            word(&st.conjugator_word)
        );
        let _ = writeln!(s, "  |W1| = {}, |W^1| = {}", st.levi_group_order, st.coset_count);
        for c in &st.cells {
            let _ = writeln!(s, "  {:<16} n = {:<2} dim = {:<3} gamma: {}", word(&c.word), c.n, c.cell_dim, join(&c.gamma));
        }
        let dense: Vec<String> = st.dense_o.iter().map(|w| word(w)).collect();
        let _ = writeln!(s, "  dense set: {}", dense.join(", "));
    }
    if let Some(id) = &r.identities {
        let _ = writeln!(s, "\nidentities: {} cells checked, {} failures", id.checked, id.failures);
    }
    if let Some(c) = &r.criterion {
        let _ = writeln!(
            s,
            "\ncriterion, -iT = {}, Z = {:?}: {}",
            join(&c.elliptic_coeffs),
            c.involution_coweight,
            if c.verdict.holds { "holds" } else { "fails" }
        );
        if let Some(w) = &c.verdict.witness {
            let _ = writeln!(s, "  witness w = {}", word(&w.word));
            for root in &w.roots {
                let _ = writeln!(
                    s,
                    "    {:<10} value {:>5}  {}",
                    root.root.to_string(),
                    root.value.to_string(),
                    if root.compact { "compact" } else { "noncompact" }
                );
            }
        }
        if let Some(reason) = c.verdict.failure_reason {
            let _ = writeln!(s, "  reason: {}", serde_json::to_value(reason).unwrap().as_str().unwrap_or(""));
        }
        if let Some(note) = c.note {
            let _ = writeln!(s, "  {note}");
        }
    }
    if let Some(l) = &r.lowrank {
        let _ = writeln!(s, "\nsu(2,1) metrics (negatives, positives):");
        for m in &l.su21_signatures.metrics {
            let _ = writeln!(s, "  g{}: ({}, {})", m.index, m.negatives, m.positives);
        }
        let _ = writeln!(s, "sl(2,R) classifier, seed {}:", l.sl2_classifier.seed);
        for c in &l.sl2_classifier.classes {
            let _ = writeln!(s, "  {}: {} samples, max error {:.2e}", c.tag, c.samples, c.max_error);
        }
        let _ = writeln!(
            s,
            "  invariance: {}/{} trials kept their class",
            l.sl2_classifier.invariance_trials - l.sl2_classifier.invariance_failures,
            l.sl2_classifier.invariance_trials
        );
        let _ = writeln!(s, "ad T eigenvalues on the sl(2) basis: {}", l.sl2_ad_eigenvalues.eigenvalues.join(", "));
        let _ = writeln!(
            s,
            "A2 grading oracle: {}",
            if l.a2_grading.root_by_root && l.a2_grading.multiset_match { "match" } else { "MISMATCH" }
        );
    }
    s
}
