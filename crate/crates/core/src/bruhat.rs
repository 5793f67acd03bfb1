//! Generalized Bruhat cells of `G_C` relative to the parabolic `Q⁻`.
//!
//! For each `σ ∈ W¹` the cell `N⁺σ⁻¹Q⁻` has codimension `n_σ = |Φ_σ|` and
//! its unipotent factor is spanned by the root set
//! `Γ_σ = {γ ∈ Φ_{σ⁻¹κ} | σγ ∈ Δ⁺ − ▲}`.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Signed;
use serde::Serialize;

use crate::elliptic::GradedDecomposition;
use crate::error::{Error, Result};
use crate::rootsys::RootSystem;
use crate::weyl::{coset_sets, is_standard_levi, CosetSets, WeylElement, WeylGroup};

#[derive(Debug, Clone)]
pub struct BruhatCell {
    /// Position of `σ` in the [`WeylGroup`].
    pub sigma: usize,
    pub word: Vec<usize>,
    pub gamma: BTreeSet<usize>,
    pub n: usize,
    pub cell_dim: usize,
    pub u_dim: usize,
}

#[derive(Debug, Clone)]
pub struct Stratification {
    pub cells: Vec<BruhatCell>,
    /// Indices into `cells` with `n ≤ 1`.
    pub dense_o: Vec<usize>,
    pub levi_group_order: usize,
}

impl Stratification {
    pub fn histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for c in &self.cells {
            *h.entry(c.n).or_insert(0) += 1;
        }
        h
    }
}

fn require_in_cosets(
    rs: &RootSystem,
    grading: &GradedDecomposition,
    sigma: &WeylElement,
) -> Result<()> {
    let ok = sigma
        .inversion_set()
        .indices()
        .iter()
        .all(|i| !grading.levi.contains(i));
    debug_assert!(sigma.inversion_set().indices().iter().all(|&i| rs.is_positive_index(i)));
    if ok {
        Ok(())
    } else {
        Err(Error::NotInCosetSet(sigma.word_one_based()))
    }
}

/// `Γ_σ` as root indices.
pub fn gamma_set(
    rs: &RootSystem,
    group: &WeylGroup,
    sigma: &WeylElement,
    grading: &GradedDecomposition,
) -> Result<BTreeSet<usize>> {
    require_in_cosets(rs, grading, sigma)?;
    let sigma_inv = sigma.inverse(rs);
    let x = group.product(rs, &sigma_inv, group.longest());
    Ok(x
        .inversion_set()
        .indices()
        .iter()
        .copied()
        .filter(|&g| {
            let img = sigma.act_index(g);
            rs.is_positive_index(img) && !grading.levi.contains(&img)
        })
        .collect())
}

/// Result of the per-cell counting checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub word: Vec<usize>,
    /// `Φ_{σ⁻¹κ} = Γ_σ ⊔ σ⁻¹(▲⁺)`
    pub partition: bool,
    /// `|Φ_{σ⁻¹κ}| + |Φ_{σ⁻¹}| = |Δ⁺|`
    pub complement_count: bool,
    /// `(r − n) + dim q⁻ = dim G − n`
    pub dimension: bool,
    /// `ℓ(τσ) = ℓ(τ) + ℓ(σ) ≥ n_σ` for all `τ ∈ W₁`; `None` when `▲` is not a
    /// standard parabolic set.
    pub borel_bound: Option<bool>,
    pub counterexample: Option<String>,
}

impl IdentityReport {
    pub fn all_hold(&self) -> bool {
        self.partition && self.complement_count && self.dimension && self.borel_bound != Some(false)
    }
}

pub fn counting_identities(
    rs: &RootSystem,
    group: &WeylGroup,
    sets: &CosetSets,
    sigma: &WeylElement,
    grading: &GradedDecomposition,
) -> Result<IdentityReport> {
    let gamma = gamma_set(rs, group, sigma, grading)?;
    let sigma_inv = group.inverse(rs, sigma);
    let phi_sik = group.product(rs, sigma_inv, group.longest()).inversion_set().to_set();
    let n = sigma.length();
    let mut notes = Vec::new();

    let pulled_back: BTreeSet<usize> = grading
        .levi_positive(rs)
        .map(|i| sigma.act_inverse_index(i))
        .collect();
    let disjoint = gamma.is_disjoint(&pulled_back);
    let union: BTreeSet<usize> = gamma.union(&pulled_back).copied().collect();
    let partition = disjoint && union == phi_sik;
    if !partition {
        notes.push(format!(
            "partition: |Phi|={} |Gamma|={} |pullback|={} disjoint={disjoint}",
            phi_sik.len(),
            gamma.len(),
            pulled_back.len()
        ));
    }

    let complement_count = phi_sik.len() + sigma_inv.length() == rs.num_positive();
    if !complement_count {
        notes.push("complement count".into());
    }

    let d = &grading.dims;
    let dimension = gamma.len() == d.r - n
        && (d.r - n) + d.dim_parabolic == d.dim_g - n
        && d.dim_g - n == rs.dim_algebra() - n;
    if !dimension {
        notes.push(format!("dimension: |Gamma|={} r-n={}", gamma.len(), d.r - n));
    }

    let borel_bound = is_standard_levi(rs, &grading.levi).then(|| {
        sets.levi.iter().all(|&t| {
            let tau = group.element(t);
            let ts = group.product(rs, tau, sigma);
            ts.length() == tau.length() + n && ts.length() >= n
        })
    });
    if borel_bound == Some(false) {
        notes.push("borel bound".into());
    }

    Ok(IdentityReport {
        word: sigma.word_one_based(),
        partition,
        complement_count,
        dimension,
        borel_bound,
        counterexample: (!notes.is_empty()).then(|| notes.join("; ")),
    })
}

/// One cell per `σ ∈ W¹`, ordered by `(n, word)`.
///
/// Requires a dominant grading so that `Δ⁺ − ▲` is the root set of `u⁺`.
pub fn stratify(rs: &RootSystem, group: &WeylGroup, grading: &GradedDecomposition) -> Result<Stratification> {
    if let Some(i) = (0..rs.rank()).find(|&i| grading.values[i].is_negative()) {
        return Err(Error::NotDominant {
            index: i + 1,
            value: grading.values[i].to_string(),
        });
    }
    let sets = coset_sets(rs, group, &grading.levi)?;
    let dim_g = rs.dim_algebra();
    let r = grading.dims.r;
    let mut cells = Vec::with_capacity(sets.cosets.len());
    for &s in &sets.cosets {
        let sigma = group.element(s);
        let gamma = gamma_set(rs, group, sigma, grading)?;
        let n = sigma.length();
        cells.push(BruhatCell {
            sigma: s,
            word: sigma.word().to_vec(),
            gamma,
            n,
            cell_dim: dim_g - n,
            u_dim: r - n,
        });
    }
    cells.sort_by(|a, b| a.n.cmp(&b.n).then_with(|| a.word.cmp(&b.word)));
    let dense_o = cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.n <= 1)
        .map(|(i, _)| i)
        .collect();
    Ok(Stratification {
        cells,
        dense_o,
        levi_group_order: sets.levi.len(),
    })
}

/// Codimension histogram with the unique-minimum check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodimReport {
    pub histogram: BTreeMap<usize, usize>,
    pub total: usize,
    pub unique_minimum: bool,
    pub max_codim: usize,
}

pub fn closure_codim_consistency(strat: &Stratification) -> CodimReport {
    let histogram = strat.histogram();
    CodimReport {
        total: strat.cells.len(),
        unique_minimum: histogram.get(&0) == Some(&1),
        max_codim: histogram.keys().next_back().copied().unwrap_or(0),
        histogram,
    }
}

/// The expected members of the dense set `O`: the identity together with the
/// simple reflections `s_β` for `β ∈ Π − ▲`, as group positions.
pub fn expected_dense_set(rs: &RootSystem, group: &WeylGroup, grading: &GradedDecomposition) -> BTreeSet<usize> {
    let mut out: BTreeSet<usize> = [0].into_iter().collect();
    for b in 0..rs.rank() {
        if !grading.levi.contains(&b) {
            out.insert(group.position(group.simple(b)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elliptic::{grade, EllipticElement};
    use crate::weyl::DEFAULT_WEYL_CAP;

    fn setup(label: &str, t: &[i64]) -> (RootSystem, WeylGroup, GradedDecomposition) {
        let rs = RootSystem::from_label(label).unwrap();
        let g = WeylGroup::enumerate(&rs, DEFAULT_WEYL_CAP).unwrap();
        let gr = grade(&rs, &EllipticElement::from_integers(t)).unwrap();
        (rs, g, gr)
    }

    #[test]
    fn identity_cell_is_full() {
        let (rs, g, gr) = setup("B3", &[1, 0, 1]);
        let gamma = gamma_set(&rs, &g, g.identity(), &gr).unwrap();
        let expected: BTreeSet<usize> = gr.positive_complement(&rs).into_iter().collect();
        assert_eq!(gamma, expected);
    }

    #[test]
    fn simple_reflection_cells() {
        let (rs, g, gr) = setup("A3", &[1, 0, 1]);
        for b in [0, 2] {
            let gamma = gamma_set(&rs, &g, g.simple(b), &gr).unwrap();
            assert_eq!(gamma.len(), gr.dims.r - 1);
        }
        assert!(matches!(
            gamma_set(&rs, &g, g.simple(1), &gr),
            Err(Error::NotInCosetSet(_))
        ));
    }

    #[test]
    fn a2_stratification() {
        let (rs, g, gr) = setup("A2", &[1, 0]);
        let s = stratify(&rs, &g, &gr).unwrap();
        assert_eq!(s.cells.iter().map(|c| c.n).collect::<Vec<_>>(), vec![0, 1, 2]);
        assert_eq!(s.dense_o, vec![0, 1]);
        assert_eq!(s.levi_group_order, 2);
    }

    #[test]
    fn degenerate_and_borel_cases() {
        let (rs, g, gr) = setup("A2", &[0, 0]);
        let s = stratify(&rs, &g, &gr).unwrap();
        assert_eq!(s.cells.len(), 1);
        assert_eq!(s.cells[0].n, 0);

        let (rs, g, gr) = setup("A2", &[1, 1]);
        let s = stratify(&rs, &g, &gr).unwrap();
        let rep = closure_codim_consistency(&s);
        assert_eq!(rep.histogram, [(0, 1), (1, 2), (2, 2), (3, 1)].into_iter().collect());
        assert!(rep.unique_minimum);
    }

    #[test]
    fn non_dominant_is_rejected() {
        let (rs, g, gr) = setup("G2", &[1, -2]);
        assert!(matches!(stratify(&rs, &g, &gr), Err(Error::NotDominant { index: 2, .. })));
    }

    #[test]
    fn identities_hold_on_g2() {
        let (rs, g, gr) = setup("G2", &[0, 1]);
        let sets = coset_sets(&rs, &g, &gr.levi).unwrap();
        for &s in &sets.cosets {
            let rep = counting_identities(&rs, &g, &sets, g.element(s), &gr).unwrap();
            assert!(rep.all_hold(), "{rep:?}");
            assert_eq!(rep.borel_bound, Some(true));
        }
    }
}
