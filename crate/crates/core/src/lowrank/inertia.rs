use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Q;

/// Sylvester inertia of a symmetric rational matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct Inertia {
    pub negative: usize,
    pub positive: usize,
    pub zero: usize,
}

/// Diagonalizes by congruence (symmetric Gaussian elimination) and counts
/// the signs of the pivots.
pub fn inertia(matrix: &[Vec<Q>]) -> Result<Inertia> {
    let n = matrix.len();
    let mut a: Vec<Vec<Q>> = matrix.to_vec();
    for (i, row) in a.iter().enumerate() {
        if row.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: row.len() });
        }
        for j in 0..n {
            if row[j] != matrix[j][i] {
                return Err(Error::IdentityFailure(format!("matrix not symmetric at ({i},{j})")));
            }
        }
    }
    let mut out = Inertia { negative: 0, positive: 0, zero: 0 };
    let mut k = 0;
    while k < n {
        if a[k][k].is_zero() {
            if let Some(p) = (k + 1..n).find(|&p| !a[p][p].is_zero()) {
                a.swap(k, p);
                for row in a.iter_mut() {
                    row.swap(k, p);
                }
            } else if let Some(p) = (k + 1..n).find(|&p| !a[k][p].is_zero()) {
                // row_k += row_p, col_k += col_p makes a[k][k] = 2 a[k][p] + a[p][p]
                for c in 0..n {
                    let v = a[p][c];
                    a[k][c] += v;
                }
                for r in 0..n {
                    let v = a[r][p];
                    a[r][k] += v;
                }
            } else {
                out.zero += 1;
                k += 1;
                continue;
            }
        }
        let pivot = a[k][k];
        if pivot.is_positive() {
            out.positive += 1;
        } else {
            out.negative += 1;
        }
        for r in k + 1..n {
            let f = a[r][k] / pivot;
            if f.is_zero() {
                continue;
            }
            for c in k..n {
                let v = a[k][c];
                a[r][c] -= f * v;
            }
            a[r][k] = Q::zero();
        }
        for c in k + 1..n {
            a[k][c] = Q::zero();
        }
        k += 1;
    }
    Ok(out)
}

/// Determinant of a square rational matrix by elimination.
pub fn determinant(matrix: &[Vec<Q>]) -> Q {
    let n = matrix.len();
    let mut a = matrix.to_vec();
    let mut det = Q::from_integer(1);
    for k in 0..n {
        let Some(p) = (k..n).find(|&p| !a[p][k].is_zero()) else {
            return Q::zero();
        };
        if p != k {
            a.swap(k, p);
            det = -det;
        }
        let pivot = a[k][k];
        det *= pivot;
        for r in k + 1..n {
            let f = a[r][k] / pivot;
            for c in k..n {
                let v = a[k][c];
                a[r][c] -= f * v;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Q>> {
        rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
    }

    #[test]
    fn diagonal_and_hyperbolic() {
        assert_eq!(
            inertia(&m(&[&[1, 0], &[0, -3]])).unwrap(),
            Inertia { negative: 1, positive: 1, zero: 0 }
        );
        // zero diagonal needs the off-diagonal pivot trick
        assert_eq!(
            inertia(&m(&[&[0, 1], &[1, 0]])).unwrap(),
            Inertia { negative: 1, positive: 1, zero: 0 }
        );
        assert_eq!(
            inertia(&m(&[&[0, 0], &[0, 0]])).unwrap(),
            Inertia { negative: 0, positive: 0, zero: 2 }
        );
        assert_eq!(
            inertia(&m(&[&[2, 1, 0], &[1, 2, 1], &[0, 1, 2]])).unwrap(),
            Inertia { negative: 0, positive: 3, zero: 0 }
        );
        assert!(inertia(&m(&[&[1, 2], &[0, 1]])).is_err());
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant(&m(&[&[0, 1], &[-1, 0]])), q(1));
        assert_eq!(determinant(&m(&[&[1, 2], &[2, 4]])), q(0));
        assert_eq!(determinant(&m(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]])), q(4));
    }
}
