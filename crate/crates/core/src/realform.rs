//! Inner involutions `θ = exp π ad(iZ)` and the compact-root criterion.
//!
//! For an integer coweight `Z`, `θ` acts on the root space of `α` by
//! `(-1)^{α(Z)}`, so a root is compact exactly when `α(Z)` is even.
//!
//! The criterion asks for a fundamental system `Π'` on which `T` is
//! dominant (s1) and whose simple roots with `β(T) ≠ 0` are all compact (s2).
//! Candidate systems are the Weyl images `w(Π)`, scanned in canonical group
//! order so the first hit is the reported witness.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::elliptic::EllipticElement;
use crate::error::{Error, Result};
use crate::rational::{fmt_q, Q};
use crate::rootsys::{Root, RootSystem};
use crate::weyl::WeylGroup;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct InnerInvolution {
    coweight: Vec<i64>,
}

impl InnerInvolution {
    pub fn new(coweight: Vec<i64>) -> Self {
        InnerInvolution { coweight }
    }

    pub fn coweight(&self) -> &[i64] {
        &self.coweight
    }

    /// `α(Z)` for a root.
    pub fn parity_value(&self, alpha: &Root) -> i64 {
        alpha.0.iter().zip(&self.coweight).map(|(a, z)| a * z).sum()
    }

    pub fn is_compact(&self, alpha: &Root) -> bool {
        self.parity_value(alpha).rem_euclid(2) == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompactRootData {
    pub compact: BTreeSet<usize>,
    pub noncompact: BTreeSet<usize>,
}

impl CompactRootData {
    pub fn is_compact(&self, i: usize) -> bool {
        self.compact.contains(&i)
    }
}

pub fn compact_roots(rs: &RootSystem, inv: &InnerInvolution) -> Result<CompactRootData> {
    if inv.coweight.len() != rs.rank() {
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            got: inv.coweight.len(),
        });
    }
    let (compact, noncompact) = (0..rs.num_roots()).partition(|&i| inv.is_compact(rs.root(i)));
    Ok(CompactRootData { compact, noncompact })
}

/// A fundamental system `w(Π)`, listed as `[w(α_1), ..., w(α_ℓ)]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FundamentalSystem {
    /// Position of `w` in the [`WeylGroup`].
    pub element: usize,
    pub roots: Vec<usize>,
}

impl FundamentalSystem {
    pub fn root_set(&self) -> BTreeSet<usize> {
        self.roots.iter().copied().collect()
    }
}

pub fn enumerate_fundamental_systems(rs: &RootSystem, group: &WeylGroup) -> Vec<FundamentalSystem> {
    group
        .elements()
        .iter()
        .enumerate()
        .map(|(p, w)| FundamentalSystem {
            element: p,
            roots: (0..rs.rank()).map(|j| w.act_index(j)).collect(),
        })
        .collect()
}

/// (s1): every root of `Π'` is non-negative on `-iT`.
pub fn check_s1(rs: &RootSystem, system: &[usize], t: &EllipticElement) -> bool {
    system.iter().all(|&i| !t.value_at(rs, i).is_negative())
}

/// (s2): every root of `Π'` with `β(-iT) ≠ 0` is compact.
pub fn check_s2(rs: &RootSystem, system: &[usize], t: &EllipticElement, k: &CompactRootData) -> bool {
    system
        .iter()
        .all(|&i| t.value_at(rs, i).is_zero() || k.is_compact(i))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureReason {
    HermitianFastFail,
    ExhaustedSearch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessRoot {
    pub root: Root,
    #[serde(with = "crate::rational::as_str")]
    pub value: Q,
    pub parity: i64,
    pub compact: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Canonical reduced word (1-based) of the conjugating element.
    pub word: Vec<usize>,
    pub roots: Vec<WitnessRoot>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionVerdict {
    pub holds: bool,
    pub witness: Option<Witness>,
    pub failure_reason: Option<FailureReason>,
}

fn annotate(rs: &RootSystem, group: &WeylGroup, sys: &FundamentalSystem, t: &EllipticElement, inv: &InnerInvolution) -> Witness {
    Witness {
        word: group.element(sys.element).word_one_based(),
        roots: sys
            .roots
            .iter()
            .map(|&i| {
                let root = rs.root(i).clone();
                WitnessRoot {
                    value: t.value_at(rs, i),
                    parity: inv.parity_value(&root),
                    compact: inv.is_compact(&root),
                    root,
                }
            })
            .collect(),
    }
}

/// Decides the criterion, returning the first witness in canonical order.
pub fn criterion_s(
    rs: &RootSystem,
    group: &WeylGroup,
    t: &EllipticElement,
    inv: &InnerInvolution,
) -> Result<CriterionVerdict> {
    if t.coeffs().len() != rs.rank() {
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            got: t.coeffs().len(),
        });
    }
    let k = compact_roots(rs, inv)?;
    if !t.is_zero() {
        let any_active_compact = (0..rs.num_roots())
            .any(|i| !t.value_at(rs, i).is_zero() && k.is_compact(i));
        if !any_active_compact {
            return Ok(CriterionVerdict {
                holds: false,
                witness: None,
                failure_reason: Some(FailureReason::HermitianFastFail),
            });
        }
    }
    let found = enumerate_fundamental_systems(rs, group)
        .into_iter()
        .find(|sys| check_s1(rs, &sys.roots, t) && check_s2(rs, &sys.roots, t, &k));
    Ok(match found {
        Some(sys) => CriterionVerdict {
            holds: true,
            witness: Some(annotate(rs, group, &sys, t, inv)),
            failure_reason: None,
        },
        None => CriterionVerdict {
            holds: false,
            witness: None,
            failure_reason: Some(FailureReason::ExhaustedSearch),
        },
    })
}

/// Every fundamental system satisfying both conditions.
pub fn accepted_witnesses(
    rs: &RootSystem,
    group: &WeylGroup,
    t: &EllipticElement,
    inv: &InnerInvolution,
) -> Result<Vec<FundamentalSystem>> {
    let k = compact_roots(rs, inv)?;
    Ok(enumerate_fundamental_systems(rs, group)
        .into_iter()
        .filter(|sys| check_s1(rs, &sys.roots, t) && check_s2(rs, &sys.roots, t, &k))
        .collect())
}

/// Free-text notes on the holomorphic vector field algebra for the three
/// worked cases that have one on record; `None` elsewhere.
pub fn known_vector_field_note(label: &str, t: &EllipticElement, inv: &InnerInvolution) -> Option<&'static str> {
    let c: Vec<String> = t.coeffs().iter().map(fmt_q).collect();
    let c: Vec<&str> = c.iter().map(String::as_str).collect();
    match (label, c.as_slice(), inv.coweight()) {
        ("G2", ["1", "-2"], [0, 1]) => Some("G/L = G2(2)/(SL(2,R)·T^1); O(T^{1,0}(G/L)) = (g2)_C"),
        ("G2", ["1", "-3"], [0, 1]) => Some("G/L = G2(2)/(SL(2,R)·T^1); O(T^{1,0}(G/L)) = so(7,C)"),
        ("A2", ["1", "0"], [0, 1]) => Some("G/L = SU(2,1)/S(U(1)×U(1,1)); O(T^{1,0}(G/L)) = sl(3,C)"),
        _ => None,
    }
}
