//! Brute-force cross-checks of the root-level combinatorics against explicit
//! `sl(n)` matrices.

use std::collections::BTreeSet;

use serde::Serialize;

use super::gaussian::{GaussianMatrix, GaussianRational};
use crate::elliptic::{grade, EllipticElement};
use crate::error::{Error, Result};
use crate::rational::{frac, Q};
use crate::rootsys::{Root, RootSystem};
use crate::weyl::WeylGroup;

/// Root of `sl(n)` carried by the matrix unit `E_ij`, `i ≠ j`.
pub fn unit_root(n: usize, i: usize, j: usize) -> Root {
    let mut v = vec![0; n - 1];
    let (lo, hi, s) = if i < j { (i, j, 1) } else { (j, i, -1) };
    for x in &mut v[lo..hi] {
        *x = s;
    }
    Root(v)
}

/// The coweight `Z_k` of `sl(n)` as a real diagonal matrix (`k` is 1-based).
pub fn fundamental_coweight(n: usize, k: usize) -> Vec<Q> {
    (0..n)
        .map(|i| {
            if i < k {
                frac((n - k) as i64, n as i64)
            } else {
                frac(-(k as i64), n as i64)
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootLevel {
    pub root: Root,
    #[serde(with = "crate::rational::as_str")]
    pub matrix_level: Q,
    #[serde(with = "crate::rational::as_str")]
    pub root_level: Q,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradingOracleReport {
    pub rank: usize,
    #[serde(with = "crate::rational::vec_as_str")]
    pub coeffs: Vec<Q>,
    pub roots: Vec<RootLevel>,
    pub root_by_root: bool,
    pub multiset_match: bool,
}

/// Diagonalizes `ad T` on the root vectors `E_ij` of the `n × n` model with
/// `T = i·Σ c_k Z_k` and compares each eigenvalue with the level `grade`
/// assigns to the same root of `A_{n-1}`.
pub fn sl_grading_oracle(coeffs: &[Q]) -> Result<GradingOracleReport> {
    let rank = coeffs.len();
    let n = rank + 1;
    let rs = RootSystem::from_label(&format!("A{rank}"))?;
    let graded = grade(&rs, &EllipticElement::new(coeffs.to_vec()))?;
    let mut h = vec![Q::from_integer(0); n];
    for (k, c) in coeffs.iter().enumerate() {
        for (x, z) in h.iter_mut().zip(fundamental_coweight(n, k + 1)) {
            *x += *c * z;
        }
    }
    let t = GaussianMatrix::diagonal(&h.iter().map(|&x| GaussianRational::imag(x)).collect::<Vec<_>>());
    let mut roots = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let e = GaussianMatrix::unit(n, i, j);
            let mu = e
                .proportionality(&t.bracket(&e)?)
                .ok_or_else(|| Error::IdentityFailure(format!("E_{i}{j} is not an eigenvector")))?;
            if mu.re != Q::from_integer(0) {
                return Err(Error::IdentityFailure(format!("eigenvalue of E_{i}{j} is not imaginary")));
            }
            let root = unit_root(n, i, j);
            let idx = rs.require_index(&root)?;
            roots.push(RootLevel {
                root_level: graded.values[idx],
                matrix_level: mu.im,
                root,
            });
        }
    }
    let root_by_root = roots.iter().all(|r| r.matrix_level == r.root_level);
    let mut from_matrix: Vec<Q> = roots.iter().map(|r| r.matrix_level).collect();
    from_matrix.sort();
    let multiset_match = from_matrix == graded.level_multiset();
    roots.sort_by(|a, b| crate::rootsys::canonical_cmp(&a.root, &b.root));
    Ok(GradingOracleReport {
        rank,
        coeffs: coeffs.to_vec(),
        roots,
        root_by_root,
        multiset_match,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sl2ExampleReport {
    /// Eigenvalues of `ad T` on `E_1, E_2, E_3`.
    pub eigenvalues: Vec<String>,
    pub matches: bool,
}

/// `T = [[0, 1], [-1, 0]]` acting on `E_1 = [[-i, 1], [1, i]]`,
/// `E_2 = [[i, 1], [1, -i]]` and `E_3 = T`.
pub fn sl2_example_oracle() -> Result<Sl2ExampleReport> {
    let g = GaussianRational::int;
    let t = GaussianMatrix::from_rows(vec![vec![g(0, 0), g(1, 0)], vec![g(-1, 0), g(0, 0)]])?;
    let e1 = GaussianMatrix::from_rows(vec![vec![g(0, -1), g(1, 0)], vec![g(1, 0), g(0, 1)]])?;
    let e2 = GaussianMatrix::from_rows(vec![vec![g(0, 1), g(1, 0)], vec![g(1, 0), g(0, -1)]])?;
    let mut eigen = Vec::new();
    for e in [&e1, &e2, &t] {
        let mu = e
            .proportionality(&t.bracket(e)?)
            .ok_or_else(|| Error::IdentityFailure("not an eigenvector of ad T".into()))?;
        eigen.push(mu);
    }
    let matches = eigen == vec![g(0, 2), g(0, -2), g(0, 0)];
    Ok(Sl2ExampleReport {
        eigenvalues: eigen.iter().map(ToString::to_string).collect(),
        matches,
    })
}

/// Checks that `W(A_{n-1})` acts on the roots exactly as `S_n` permuting the
/// `ε_i`.
pub fn symmetric_group_oracle(rank: usize, group: &WeylGroup, rs: &RootSystem) -> Result<bool> {
    let n = rank + 1;
    // root index → (a, b) with root = ε_a − ε_b
    let mut pairs = vec![(0, 0); rs.num_roots()];
    for a in 0..n {
        for b in 0..n {
            if a != b {
                pairs[rs.require_index(&unit_root(n, a, b))?] = (a, b);
            }
        }
    }
    let from_weyl: BTreeSet<Vec<usize>> = group
        .elements()
        .iter()
        .map(|w| (0..rs.num_roots()).map(|i| w.act_index(i)).collect())
        .collect();
    let mut from_sym = BTreeSet::new();
    let mut perm: Vec<usize> = (0..n).collect();
    permutations(&mut perm, 0, &mut |p| {
        let action: Vec<usize> = pairs
            .iter()
            .map(|&(a, b)| rs.index_of(&unit_root(n, p[a], p[b])).expect("root"))
            .collect();
        from_sym.insert(action);
    });
    Ok(from_weyl == from_sym && from_weyl.len() == group.order())
}

fn permutations(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permutations(p, k + 1, f);
        p.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use crate::weyl::DEFAULT_WEYL_CAP;

    #[test]
    fn unit_roots() {
        assert_eq!(unit_root(3, 0, 2), Root(vec![1, 1]));
        assert_eq!(unit_root(3, 2, 1), Root(vec![0, -1]));
    }

    #[test]
    fn a2_grading_matches() {
        for c in [[1, 0], [0, 1], [1, 1], [2, -1]] {
            let r = sl_grading_oracle(&[q(c[0]), q(c[1])]).unwrap();
            assert!(r.root_by_root && r.multiset_match, "{c:?}");
            assert_eq!(r.roots.len(), 6);
        }
        let r = sl_grading_oracle(&[q(1), frac(1, 2), q(0)]).unwrap();
        assert!(r.root_by_root);
    }

    #[test]
    fn sl2_eigenvalues() {
        let r = sl2_example_oracle().unwrap();
        assert!(r.matches);
        assert_eq!(r.eigenvalues, vec!["2i", "-2i", "0"]);
    }

    #[test]
    fn weyl_is_symmetric_group() {
        for rank in 1..=3 {
            let rs = RootSystem::from_label(&format!("A{rank}")).unwrap();
            let g = WeylGroup::enumerate(&rs, DEFAULT_WEYL_CAP).unwrap();
            assert!(symmetric_group_oracle(rank, &g, &rs).unwrap());
        }
    }
}
