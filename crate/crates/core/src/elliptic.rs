//! Elliptic elements and the eigenvalue grading they induce on the roots.
//!
//! An elliptic element `T` is stored through `-iT = Σ c_a Z_a`, the rational
//! coordinates on the basis `{Z_a}` dual to the simple roots. A root `α` then
//! sits in level `α(-iT) = Σ c_a · coords(α)_a`.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Q};
use crate::rootsys::RootSystem;
use crate::weyl::WeylElement;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EllipticElement {
    #[serde(with = "rational::vec_as_str")]
    coeffs: Vec<Q>,
}

impl EllipticElement {
    pub fn new(coeffs: Vec<Q>) -> Self {
        EllipticElement { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Q::from_integer(c)).collect())
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check_rank(&self, rs: &RootSystem) -> Result<()> {
        if self.coeffs.len() != rs.rank() {
            return Err(Error::DimensionMismatch {
                expected: rs.rank(),
                got: self.coeffs.len(),
            });
        }
        Ok(())
    }

    /// `α(-iT)` for the root with index `i`.
    pub fn value_at(&self, rs: &RootSystem, i: usize) -> Q {
        rs.root(i)
            .0
            .iter()
            .zip(&self.coeffs)
            .map(|(&a, &c)| Q::from_integer(a) * c)
            .sum()
    }

    /// Whether every simple root takes a non-negative value.
    pub fn is_dominant(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

/// Root-level data of the grading `g_C = ⊕ g^λ` by `ad T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedDecomposition {
    pub element: EllipticElement,
    /// Value `α(-iT)` for every root index.
    pub values: Vec<Q>,
    /// Nonzero levels `λ` with the roots (indices) in `g^λ`.
    pub levels: BTreeMap<Q, Vec<usize>>,
    /// `▲ = {γ | γ(T) = 0}`.
    pub levi: BTreeSet<usize>,
    pub u_plus: Vec<usize>,
    pub u_minus: Vec<usize>,
    pub dims: GradingDims,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GradingDims {
    pub rank: usize,
    pub dim_g: usize,
    pub dim_levi: usize,
    /// `r = dim u⁺ = |Δ⁺ − ▲|`
    pub r: usize,
    pub dim_parabolic: usize,
    pub dim_flag: usize,
}

impl GradedDecomposition {
    /// Levels `λ > 0` only.
    pub fn positive_levels(&self) -> impl Iterator<Item = (&Q, &Vec<usize>)> {
        self.levels.iter().filter(|(l, _)| l.is_positive())
    }

    /// Sorted multiset of `α(-iT)` over all roots.
    pub fn level_multiset(&self) -> Vec<Q> {
        let mut v = self.values.clone();
        v.sort();
        v
    }

    /// `▲⁺ = ▲ ∩ Δ⁺`.
    pub fn levi_positive<'a>(&'a self, rs: &'a RootSystem) -> impl Iterator<Item = usize> + 'a {
        self.levi.iter().copied().filter(|&i| rs.is_positive_index(i))
    }

    /// `Δ⁺ − ▲` as indices in canonical order.
    pub fn positive_complement(&self, rs: &RootSystem) -> Vec<usize> {
        (0..rs.num_positive()).filter(|i| !self.levi.contains(i)).collect()
    }

    /// The weights `ω_j = β_j(-iT)` over `u⁺` in canonical root order.
    pub fn omega_weights(&self) -> Vec<Q> {
        self.u_plus.iter().map(|&i| self.values[i]).collect()
    }
}

pub fn grade(rs: &RootSystem, t: &EllipticElement) -> Result<GradedDecomposition> {
    t.check_rank(rs)?;
    let values: Vec<Q> = (0..rs.num_roots()).map(|i| t.value_at(rs, i)).collect();
    let mut levels: BTreeMap<Q, Vec<usize>> = BTreeMap::new();
    let mut levi = BTreeSet::new();
    let mut u_plus = Vec::new();
    for (i, v) in values.iter().enumerate() {
        if v.is_zero() {
            levi.insert(i);
        } else {
            levels.entry(*v).or_default().push(i);
            if v.is_positive() {
                u_plus.push(i);
            }
        }
    }
    // canonical order: positive roots first, by index
    u_plus.sort_by_key(|&i| if rs.is_positive_index(i) { (0, i) } else { (1, rs.negate_index(i)) });
    let u_minus: Vec<usize> = u_plus.iter().map(|&i| rs.negate_index(i)).collect();
    let l = rs.rank();
    let dim_levi = l + levi.len();
    let r = (0..rs.num_positive()).filter(|i| !levi.contains(i)).count();
    debug_assert_eq!(r, u_plus.len());
    let dims = GradingDims {
        rank: l,
        dim_g: rs.dim_algebra(),
        dim_levi,
        r,
        dim_parabolic: dim_levi + r,
        dim_flag: r,
    };
    Ok(GradedDecomposition {
        element: t.clone(),
        values,
        levels,
        levi,
        u_plus,
        u_minus,
        dims,
    })
}

/// Conjugates `T` into the dominant chamber by reflecting in any simple root
/// with a negative value until none remains. Returns `w` with `T' = w·T`.
pub fn dominant_form(rs: &RootSystem, t: &EllipticElement) -> Result<(WeylElement, EllipticElement)> {
    t.check_rank(rs)?;
    let mut w = WeylElement::identity(rs);
    let mut c = t.coeffs.clone();
    let cartan = rs.cartan();
    while let Some(i) = c.iter().position(|x| x.is_negative()) {
        // (s_i c)_a = c_a - C[a][i] c_i
        let ci = c[i];
        for (a, x) in c.iter_mut().enumerate() {
            *x -= Q::from_integer(cartan.get(a, i)) * ci;
        }
        // accumulate left: w ← s_i w
        w = WeylElement::from_word(rs, &[i]).compose(rs, &w);
    }
    let word: Vec<usize> = w.word().to_vec();
    let w = WeylElement::from_word(rs, &word);
    Ok((w, EllipticElement::new(c)))
}

/// All `(n_1..n_r) ≥ 0` with `Σ ω_j n_j = θ`, in lexicographic order.
pub fn count_weighted_partitions(weights: &[Q], theta: Q) -> Result<Vec<Vec<u64>>> {
    if let Some(w) = weights.iter().find(|w| !w.is_positive()) {
        return Err(Error::Config(format!("weights must be positive, got {w}")));
    }
    let mut out = Vec::new();
    if theta.is_negative() {
        return Ok(out);
    }
    let mut current = vec![0u64; weights.len()];
    fill(weights, 0, theta, &mut current, &mut out);
    out.sort();
    Ok(out)
}

fn fill(weights: &[Q], k: usize, rest: Q, current: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if k == weights.len() {
        if rest.is_zero() {
            out.push(current.clone());
        }
        return;
    }
    // 0 <= n_k <= rest / ω_k
    let bound = (rest / weights[k]).floor().to_integer();
    for n in 0..=bound {
        current[k] = n as u64;
        fill(weights, k + 1, rest - weights[k] * Q::from_integer(n), current, out);
    }
    current[k] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, q};
    use crate::rootsys::Root;

    fn roots(rs: &RootSystem, idx: &BTreeSet<usize>) -> BTreeSet<Vec<i64>> {
        idx.iter().map(|&i| rs.root(i).0.clone()).collect()
    }

    #[test]
    fn g2_case_a_grading() {
        let rs = RootSystem::from_label("G2").unwrap();
        let g = grade(&rs, &EllipticElement::from_integers(&[1, -2])).unwrap();
        assert_eq!(
            roots(&rs, &g.levi),
            [vec![2, 1], vec![-2, -1]].into_iter().collect()
        );
        assert_eq!(g.dims.r, 5);
        assert_eq!(g.dims.dim_levi, 4);
        assert_eq!(g.dims.dim_g, 14);
        assert_eq!(g.dims.dim_g, 2 * g.dims.r + g.dims.dim_levi);
    }

    #[test]
    fn a2_grading() {
        let rs = RootSystem::from_label("A2").unwrap();
        let g = grade(&rs, &EllipticElement::from_integers(&[1, 0])).unwrap();
        assert_eq!(roots(&rs, &g.levi), [vec![0, 1], vec![0, -1]].into_iter().collect());
        let up: Vec<Root> = g.u_plus.iter().map(|&i| rs.root(i).clone()).collect();
        assert_eq!(up, vec![Root(vec![1, 0]), Root(vec![1, 1])]);
        assert_eq!(g.dims.r, 2);
        assert_eq!(g.positive_levels().count(), 1);
    }

    #[test]
    fn zero_element_grading() {
        let rs = RootSystem::from_label("B3").unwrap();
        let g = grade(&rs, &EllipticElement::from_integers(&[0, 0, 0])).unwrap();
        assert_eq!(g.levi.len(), rs.num_roots());
        assert_eq!(g.dims.r, 0);
        assert_eq!(g.dims.dim_levi, g.dims.dim_g);
        assert!(g.levels.is_empty());
    }

    #[test]
    fn rank_mismatch() {
        let rs = RootSystem::from_label("A2").unwrap();
        assert!(matches!(
            grade(&rs, &EllipticElement::from_integers(&[1])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn dominant_form_cases() {
        let rs = RootSystem::from_label("A2").unwrap();
        let t = EllipticElement::from_integers(&[2, 1]);
        let (w, t2) = dominant_form(&rs, &t).unwrap();
        assert!(w.is_identity());
        assert_eq!(t2, t);

        let t = EllipticElement::from_integers(&[-1, 0]);
        let (w, t2) = dominant_form(&rs, &t).unwrap();
        assert!(t2.is_dominant());
        assert_eq!(w.act_on_coweight(&rs, t.coeffs()), t2.coeffs());
        assert_eq!(grade(&rs, &t2).unwrap().levi.len(), 2);

        let g2 = RootSystem::from_label("G2").unwrap();
        let t = EllipticElement::from_integers(&[1, -2]);
        let (w, t2) = dominant_form(&g2, &t).unwrap();
        assert_eq!(t2.coeffs(), &[q(0), q(1)]);
        assert_eq!(w.act_on_coweight(&g2, t.coeffs()), t2.coeffs());
        assert_eq!(
            grade(&g2, &t).unwrap().level_multiset(),
            grade(&g2, &t2).unwrap().level_multiset()
        );
    }

    #[test]
    fn partitions() {
        assert!(count_weighted_partitions(&[q(1), q(2)], q(-1)).unwrap().is_empty());
        assert_eq!(
            count_weighted_partitions(&[q(1), q(2)], q(2)).unwrap(),
            vec![vec![0, 1], vec![2, 0]]
        );
        assert_eq!(
            count_weighted_partitions(&[q(1), frac(1, 2), q(3)], q(0)).unwrap(),
            vec![vec![0, 0, 0]]
        );
        assert_eq!(
            count_weighted_partitions(&[frac(2, 3)], q(1)).unwrap(),
            Vec::<Vec<u64>>::new()
        );
        assert!(count_weighted_partitions(&[q(0)], q(1)).is_err());
    }
}
