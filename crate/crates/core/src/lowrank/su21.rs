//! Pseudo-Kähler metrics on `SU(2,1)/T²` for `T = diag(i, 0, -i)`.
//!
//! The tangent space `ad T(g)` is parametrized by `(b, c, x, y, z, w)`:
//!
//! ```text
//! [[ 0,       b + ic,  ix - y],
//!  [-b + ic,  0,       iz - w],
//!  [-ix - y, -iz - w,  0     ]]
//! ```
//!
//! Each invariant complex structure `j_a` is linear in these parameters, and
//! `g_a(X, Y) = Ω(X, j_a Y)` with `Ω(X, Y) = B(T, [X, Y])`.

use num_traits::Zero;
use serde::Serialize;

use super::gaussian::{GaussianMatrix, GaussianRational};
use super::inertia::{determinant, inertia};
use crate::error::{Error, Result};
use crate::rational::{q, Q};

pub const PARAMETERS: [&str; 6] = ["b", "c", "x", "y", "z", "w"];

/// The matrix with parameters `(b, c, x, y, z, w)`.
pub fn tangent_vector(p: &[Q; 6]) -> GaussianMatrix {
    let g = GaussianRational::new;
    let z0 = GaussianRational::default();
    let [b, c, x, y, z, w] = *p;
    GaussianMatrix::from_rows(vec![
        vec![z0, g(b, c), g(-y, x)],
        vec![g(-b, c), z0, g(-w, z)],
        vec![g(-y, -x), g(-w, -z), z0],
    ])
    .expect("square")
}

/// Inverse of [`tangent_vector`]; errors if `m` is not of that shape.
pub fn parameters(m: &GaussianMatrix) -> Result<[Q; 6]> {
    let p = [
        m.get(0, 1).re,
        m.get(0, 1).im,
        m.get(0, 2).im,
        -m.get(0, 2).re,
        m.get(1, 2).im,
        -m.get(1, 2).re,
    ];
    if tangent_vector(&p) != *m {
        return Err(Error::IdentityFailure("matrix is not in ad T(g)".into()));
    }
    Ok(p)
}

pub fn element_t() -> GaussianMatrix {
    GaussianMatrix::diagonal(&[
        GaussianRational::int(0, 1),
        GaussianRational::default(),
        GaussianRational::int(0, -1),
    ])
}

/// `j_a` as a matrix on parameter vectors (column `k` is the image of the
/// `k`-th basis vector).
pub fn complex_structure(a: usize) -> Vec<Vec<Q>> {
    // images of (b, c, x, y, z, w) as signed permutations
    let base: [(usize, i64); 6] = match a {
        1 | 2 => [(1, -1), (0, 1), (3, -1), (2, 1), (5, -1), (4, 1)],
        3 | 4 => [(1, -1), (0, 1), (3, -1), (2, 1), (5, 1), (4, -1)],
        5 | 6 => [(1, -1), (0, 1), (3, 1), (2, -1), (5, 1), (4, -1)],
        _ => panic!("complex structures are numbered 1..=6"),
    };
    let sign = if a % 2 == 0 { -1 } else { 1 };
    // new_k = s · old_src
    let mut m = vec![vec![Q::zero(); 6]; 6];
    for (k, &(src, s)) in base.iter().enumerate() {
        m[k][src] = q(s * sign);
    }
    m
}

fn mat_mul(x: &[Vec<Q>], y: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let n = x.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| x[i][k] * y[k][j]).sum()).collect())
        .collect()
}

fn basis_vector(k: usize) -> [Q; 6] {
    let mut p = [Q::zero(); 6];
    p[k] = q(1);
    p
}

/// Gram matrix of `Ω` on the parameter basis.
pub fn omega_gram() -> Result<Vec<Vec<Q>>> {
    let t = element_t();
    let basis: Vec<GaussianMatrix> = (0..6).map(|k| tangent_vector(&basis_vector(k))).collect();
    let mut out = vec![vec![Q::zero(); 6]; 6];
    for i in 0..6 {
        for j in 0..6 {
            let v = t.killing(&basis[i].bracket(&basis[j])?)?;
            if !v.im.is_zero() {
                return Err(Error::IdentityFailure(format!("Omega({i},{j}) is not real")));
            }
            out[i][j] = v.re;
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MetricSignature {
    pub index: usize,
    #[serde(serialize_with = "serialize_gram")]
    pub gram: Vec<Vec<Q>>,
    pub negatives: usize,
    pub positives: usize,
    pub symmetric: bool,
    pub squares_to_minus_one: bool,
}

fn serialize_gram<S: serde::Serializer>(g: &[Vec<Q>], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(g.len()))?;
    for row in g {
        seq.serialize_element(&row.iter().map(|x| x.to_string()).collect::<Vec<_>>())?;
    }
    seq.end()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignatureReport {
    pub basis: [&'static str; 6],
    pub killing_scale: i64,
    pub omega_antisymmetric: bool,
    pub omega_nondegenerate: bool,
    pub metrics: Vec<MetricSignature>,
}

impl SignatureReport {
    pub fn signatures(&self) -> Vec<(usize, usize)> {
        self.metrics.iter().map(|m| (m.negatives, m.positives)).collect()
    }
}

pub fn su21_signature_table() -> Result<SignatureReport> {
    let omega = omega_gram()?;
    let omega_antisymmetric = (0..6).all(|i| (0..6).all(|j| omega[i][j] == -omega[j][i]));
    let omega_nondegenerate = !determinant(&omega).is_zero();
    let minus_id: Vec<Vec<Q>> = (0..6)
        .map(|i| (0..6).map(|j| if i == j { q(-1) } else { Q::zero() }).collect())
        .collect();
    let mut metrics = Vec::with_capacity(6);
    for a in 1..=6 {
        let j = complex_structure(a);
        let gram = mat_mul(&omega, &j);
        let symmetric = (0..6).all(|r| (0..6).all(|c| gram[r][c] == gram[c][r]));
        if !symmetric {
            return Err(Error::IdentityFailure(format!("g{a} is not symmetric")));
        }
        let s = inertia(&gram)?;
        if s.zero != 0 {
            return Err(Error::IdentityFailure(format!("g{a} is degenerate")));
        }
        metrics.push(MetricSignature {
            index: a,
            negatives: s.negative,
            positives: s.positive,
            symmetric,
            squares_to_minus_one: mat_mul(&j, &j) == minus_id,
            gram,
        });
    }
    Ok(SignatureReport {
        basis: PARAMETERS,
        killing_scale: 6,
        omega_antisymmetric,
        omega_nondegenerate,
        metrics,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameters_round_trip() {
        let p = [q(1), q(-2), q(3), q(4), q(-5), q(6)];
        assert_eq!(parameters(&tangent_vector(&p)).unwrap(), p);
        assert!(parameters(&GaussianMatrix::identity(3)).is_err());
    }

    #[test]
    fn tangent_vectors_are_in_su21() {
        // X* I + I X = 0 with I = diag(1, 1, -1)
        let p = [q(1), q(2), q(3), q(4), q(5), q(6)];
        let x = tangent_vector(&p);
        let sign = [1, 1, -1];
        for i in 0..3 {
            for j in 0..3 {
                let lhs = x.get(j, i).conj().scale(q(sign[j])) + x.get(i, j).scale(q(sign[i]));
                assert!(lhs.is_zero(), "({i},{j})");
            }
        }
        assert!(x.trace().is_zero());
    }

    #[test]
    fn j1_matches_matrix_formula() {
        let p = [q(1), q(2), q(3), q(4), q(5), q(6)];
        let j = complex_structure(1);
        let img: Vec<Q> = (0..6).map(|k| (0..6).map(|l| j[k][l] * p[l]).sum()).collect();
        let m = tangent_vector(&img.try_into().unwrap());
        let g = GaussianRational::int;
        // [[0, ib - c, -x - iy], [ib + c, 0, -z - iw], [-x + iy, -z + iw, 0]]
        assert_eq!(m.get(0, 1), g(-2, 1));
        assert_eq!(m.get(1, 0), g(2, 1));
        assert_eq!(m.get(0, 2), g(-3, -4));
        assert_eq!(m.get(2, 0), g(-3, 4));
        assert_eq!(m.get(1, 2), g(-5, -6));
        assert_eq!(m.get(2, 1), g(-5, 6));
    }

    #[test]
    fn table() {
        let r = su21_signature_table().unwrap();
        assert!(r.omega_antisymmetric && r.omega_nondegenerate);
        assert_eq!(r.signatures(), vec![(2, 4), (4, 2), (4, 2), (2, 4), (6, 0), (0, 6)]);
        assert!(r.metrics.iter().all(|m| m.squares_to_minus_one));
        let d: Vec<Q> = (0..6).map(|i| r.metrics[0].gram[i][i]).collect();
        assert_eq!(d, [-12, -12, 24, 24, 12, 12].map(q).to_vec());
    }
}
