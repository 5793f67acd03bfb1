//! Explicit matrix models over the Gaussian rationals for `sl(2)` and
//! `sl(3)` real forms.
//!
//! These models serve two purposes: they reproduce the low-rank worked
//! examples directly (the `sl(2,R)` orbit classifier and the `su(2,1)`
//! pseudo-Kähler signature table) and they provide an independent check on
//! the root-level combinatorics in rank at most two.

mod gaussian;
mod inertia;
pub mod oracle;
pub mod sl2;
pub mod su21;

pub use gaussian::{GaussianMatrix, GaussianRational};
pub use inertia::{determinant, inertia, Inertia};

use serde::Serialize;

use crate::error::Result;
use crate::rational::q;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LowRankReport {
    pub su21_signatures: su21::SignatureReport,
    pub sl2_classifier: sl2::Sl2SuiteReport,
    pub sl2_ad_eigenvalues: oracle::Sl2ExampleReport,
    pub a2_grading: oracle::GradingOracleReport,
}

impl LowRankReport {
    pub fn passed(&self) -> bool {
        let sig = &self.su21_signatures;
        sig.omega_antisymmetric
            && sig.omega_nondegenerate
            && sig.metrics.iter().all(|m| m.symmetric && m.squares_to_minus_one)
            && self.sl2_classifier.passed()
            && self.sl2_ad_eigenvalues.matches
            && self.a2_grading.root_by_root
            && self.a2_grading.multiset_match
    }
}

/// Runs every matrix-model check with the given seed.
pub fn lowrank_suite(seed: u64, samples: usize) -> Result<LowRankReport> {
    Ok(LowRankReport {
        su21_signatures: su21::su21_signature_table()?,
        sl2_classifier: sl2::sl2_suite(seed, samples, samples),
        sl2_ad_eigenvalues: oracle::sl2_example_oracle()?,
        a2_grading: oracle::sl_grading_oracle(&[q(1), q(0)])?,
    })
}
