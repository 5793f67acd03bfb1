//! Orbits of `GL(1,R) × SL(2,R)` acting on `sl(2,R)` by `X ↦ λ·Ad g(X)`.
//!
//! Writing `X = [[a, b], [c, -a]]`, the sign of `det X = -a² - bc` separates
//! the elliptic class `K`, the hyperbolic class `A` and the nilpotent cone,
//! which splits into `N` and the zero orbit `O2`.

use std::fmt;

use num_traits::{Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{frac, q, rational_sqrt, Q};

pub type Mat2<T> = [[T; 2]; 2];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sl2Tag {
    K,
    A,
    N,
    O2,
}

impl Sl2Tag {
    pub const ALL: [Sl2Tag; 4] = [Sl2Tag::K, Sl2Tag::A, Sl2Tag::N, Sl2Tag::O2];

    pub fn representative(self) -> Mat2<i64> {
        match self {
            Sl2Tag::K => [[0, -1], [1, 0]],
            Sl2Tag::A => [[1, 0], [0, -1]],
            Sl2Tag::N => [[0, 1], [0, 0]],
            Sl2Tag::O2 => [[0, 0], [0, 0]],
        }
    }
}

impl fmt::Display for Sl2Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Sl2Tag::K => "K",
            Sl2Tag::A => "A",
            Sl2Tag::N => "N",
            Sl2Tag::O2 => "O2",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Sl2Class {
    pub tag: Sl2Tag,
    pub representative: Mat2<i64>,
}

pub fn determinant(a: Q, b: Q, c: Q) -> Q {
    -a * a - b * c
}

pub fn sl2_classify(a: Q, b: Q, c: Q) -> Sl2Class {
    let det = determinant(a, b, c);
    let tag = if det.is_positive() {
        Sl2Tag::K
    } else if det.is_negative() {
        Sl2Tag::A
    } else if a.is_zero() && b.is_zero() && c.is_zero() {
        Sl2Tag::O2
    } else {
        Sl2Tag::N
    };
    Sl2Class {
        tag,
        representative: tag.representative(),
    }
}

/// A pair `(λ, g)` with `det g = 1` and `λ·g X g⁻¹` equal to the class
/// representative.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Normalizer {
    pub tag: Sl2Tag,
    pub lambda: f64,
    pub g: Mat2<f64>,
    /// Result of the exact check, when every radical involved is rational.
    pub exact: Option<bool>,
}

fn mul<T: Copy + std::ops::Mul<Output = T> + std::ops::Add<Output = T>>(x: Mat2<T>, y: Mat2<T>) -> Mat2<T> {
    let e = |i: usize, j: usize| x[i][0] * y[0][j] + x[i][1] * y[1][j];
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

/// `λ · g X g⁻¹` in floating point.
pub fn act_f64(lambda: f64, g: Mat2<f64>, x: Mat2<f64>) -> Mat2<f64> {
    let det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
    let inv = [[g[1][1] / det, -g[0][1] / det], [-g[1][0] / det, g[0][0] / det]];
    let m = mul(mul(g, x), inv);
    m.map(|r| r.map(|v| lambda * v))
}

/// `λ · g X g⁻¹` over the rationals; `g` must be invertible.
pub fn act_exact(lambda: Q, g: Mat2<Q>, x: Mat2<Q>) -> Mat2<Q> {
    let det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
    let inv = [[g[1][1] / det, -g[0][1] / det], [-g[1][0] / det, g[0][0] / det]];
    let m = mul(mul(g, x), inv);
    m.map(|r| r.map(|v| lambda * v))
}

fn matrix(a: Q, b: Q, c: Q) -> Mat2<Q> {
    [[a, b], [c, -a]]
}

fn to_f64(x: Q) -> f64 {
    *x.numer() as f64 / *x.denom() as f64
}

fn rep_q(tag: Sl2Tag) -> Mat2<Q> {
    tag.representative().map(|r| r.map(q))
}

pub fn sl2_normalizer(a: Q, b: Q, c: Q) -> Result<Normalizer> {
    let class = sl2_classify(a, b, c);
    let det = determinant(a, b, c);
    match class.tag {
        Sl2Tag::O2 => Err(Error::ZeroMatrix),
        Sl2Tag::K => {
            let (af, cf, d) = (to_f64(a), to_f64(c), to_f64(det));
            let delta = d.powf(0.25);
            let (lambda, g) = if c.is_positive() {
                let rc = cf.sqrt();
                (1.0 / d.sqrt(), [[rc / delta, -af / (rc * delta)], [0.0, delta / rc]])
            } else {
                let rc = (-cf).sqrt();
                (-1.0 / d.sqrt(), [[rc / delta, af / (rc * delta)], [0.0, delta / rc]])
            };
            // g = [[p, q], [0, 1/p]] only enters through p² and pq, so the
            // exact check needs √det alone.
            let exact = rational_sqrt(&det).map(|s| {
                let (sign, p2, pq) = if c.is_positive() {
                    (q(1), c / s, -a / s)
                } else {
                    (q(-1), -c / s, a / s)
                };
                let qp = pq / p2;
                let m = [
                    [a + qp * c, p2 * b - q(2) * pq * a - pq * pq / p2 * c],
                    [c / p2, -a - qp * c],
                ];
                let lambda = sign / s;
                m.map(|r| r.map(|v| lambda * v)) == rep_q(Sl2Tag::K)
            });
            Ok(Normalizer { tag: class.tag, lambda, g, exact })
        }
        Sl2Tag::A => {
            // the closed form divides by c; conjugate by a lower unipotent
            // first when c = 0
            let (u, a2, c2) = if c.is_zero() {
                let t = if q(2) * a - b != Q::zero() { q(1) } else { q(-1) };
                let u: Mat2<Q> = [[q(1), q(0)], [t, q(1)]];
                let m = act_exact(q(1), u, matrix(a, b, c));
                (u, m[0][0], m[1][0])
            } else {
                ([[q(1), q(0)], [q(0), q(1)]], a, c)
            };
            let (af2, cf2) = (to_f64(a2), to_f64(c2));
            let s = (-to_f64(det)).sqrt();
            let g0 = [[1.0, -(af2 + s) / cf2], [cf2 / (2.0 * s), (s - af2) / (2.0 * s)]];
            let g = mul(g0, u.map(|r| r.map(to_f64)));
            let exact = rational_sqrt(&-det).map(|s| {
                let g0 = [[q(1), -(a2 + s) / c2], [c2 / (q(2) * s), (s - a2) / (q(2) * s)]];
                let g = mul(g0, u);
                g[0][0] * g[1][1] - g[0][1] * g[1][0] == q(1)
                    && act_exact(-s.recip(), g, matrix(a, b, c)) == rep_q(Sl2Tag::A)
            });
            Ok(Normalizer { tag: class.tag, lambda: -1.0 / s, g, exact })
        }
        Sl2Tag::N => {
            let (lambda, g) = if c.is_zero() {
                (b.recip(), [[q(1), q(0)], [q(0), q(1)]])
            } else {
                (-c.recip(), [[c, q(1) - a], [q(-1), a / c]])
            };
            let exact = act_exact(lambda, g, matrix(a, b, c)) == rep_q(Sl2Tag::N);
            Ok(Normalizer {
                tag: class.tag,
                lambda: to_f64(lambda),
                g: g.map(|r| r.map(to_f64)),
                exact: Some(exact),
            })
        }
    }
}

/// Largest entrywise deviation of `λ·g X g⁻¹` from the representative, and
/// of `det g` from 1.
pub fn normalizer_error(a: Q, b: Q, c: Q, n: &Normalizer) -> f64 {
    let x = matrix(a, b, c).map(|r| r.map(to_f64));
    let img = act_f64(n.lambda, n.g, x);
    let rep = n.tag.representative();
    let mut err = (n.g[0][0] * n.g[1][1] - n.g[0][1] * n.g[1][0] - 1.0).abs();
    for i in 0..2 {
        for j in 0..2 {
            err = err.max((img[i][j] - rep[i][j] as f64).abs());
        }
    }
    err
}

fn random_q(rng: &mut ChaCha8Rng, bound: i64) -> Q {
    frac(rng.gen_range(-bound..=bound), rng.gen_range(1..=6))
}

/// A random triple `(a, b, c)` in the given class.
pub fn random_sample(rng: &mut ChaCha8Rng, tag: Sl2Tag) -> (Q, Q, Q) {
    match tag {
        Sl2Tag::O2 => (Q::zero(), Q::zero(), Q::zero()),
        Sl2Tag::N => loop {
            // k · (p, r)ᵀ (r, -p) is nilpotent
            let (k, p, r) = (random_q(rng, 8), random_q(rng, 8), random_q(rng, 8));
            let x = (k * p * r, -k * p * p, k * r * r);
            if sl2_classify(x.0, x.1, x.2).tag == Sl2Tag::N {
                break x;
            }
        },
        _ => loop {
            let x = (random_q(rng, 20), random_q(rng, 20), random_q(rng, 20));
            if sl2_classify(x.0, x.1, x.2).tag == tag {
                break x;
            }
        },
    }
}

/// A random `(λ, g)` with `λ ≠ 0` and `g ∈ SL(2, Q)`.
pub fn random_action(rng: &mut ChaCha8Rng) -> (Q, Mat2<Q>) {
    let s = q(rng.gen_range(-4..=4));
    let t = q(rng.gen_range(-4..=4));
    let u = frac(rng.gen_range(1..=4), rng.gen_range(1..=4));
    let upper = [[q(1), s], [q(0), q(1)]];
    let lower = [[q(1), q(0)], [t, q(1)]];
    let diag = [[u, q(0)], [q(0), u.recip()]];
    let g = mul(mul(upper, lower), diag);
    let mut lambda = frac(rng.gen_range(1..=5), rng.gen_range(1..=5));
    if rng.gen_bool(0.5) {
        lambda = -lambda;
    }
    (lambda, g)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassSampleReport {
    pub tag: Sl2Tag,
    pub samples: usize,
    pub max_error: f64,
    pub within_tolerance: bool,
    pub exact_checked: usize,
    pub exact_failures: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Sl2SuiteReport {
    pub seed: u64,
    pub tolerance: f64,
    pub representatives: Vec<Sl2Class>,
    pub classes: Vec<ClassSampleReport>,
    pub invariance_trials: usize,
    pub invariance_failures: usize,
}

impl Sl2SuiteReport {
    pub fn passed(&self) -> bool {
        self.invariance_failures == 0
            && self.classes.iter().all(|c| c.within_tolerance && c.exact_failures == 0)
            && self.representatives.iter().zip(Sl2Tag::ALL).all(|(c, t)| c.tag == t)
    }
}

pub const NORMALIZER_TOLERANCE: f64 = 1e-9;

/// Classifies the four representatives, certifies normalizers on random
/// samples of the three nonzero classes and checks that tags survive random
/// group actions.
pub fn sl2_suite(seed: u64, samples: usize, perturbations: usize) -> Sl2SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let representatives = Sl2Tag::ALL
        .iter()
        .map(|t| {
            let r = t.representative();
            sl2_classify(q(r[0][0]), q(r[0][1]), q(r[1][0]))
        })
        .collect();
    let mut classes = Vec::new();
    for tag in [Sl2Tag::K, Sl2Tag::A, Sl2Tag::N] {
        let mut rep = ClassSampleReport {
            tag,
            samples,
            max_error: 0.0,
            within_tolerance: true,
            exact_checked: 0,
            exact_failures: 0,
        };
        for _ in 0..samples {
            let (a, b, c) = random_sample(&mut rng, tag);
            let n = sl2_normalizer(a, b, c).expect("nonzero sample");
            rep.max_error = rep.max_error.max(normalizer_error(a, b, c, &n));
            if let Some(ok) = n.exact {
                rep.exact_checked += 1;
                rep.exact_failures += usize::from(!ok);
            }
        }
        rep.within_tolerance = rep.max_error <= NORMALIZER_TOLERANCE;
        classes.push(rep);
    }
    let mut invariance_failures = 0;
    for i in 0..perturbations {
        let tag = Sl2Tag::ALL[i % 4];
        let (a, b, c) = random_sample(&mut rng, tag);
        let (lambda, g) = random_action(&mut rng);
        let m = act_exact(lambda, g, matrix(a, b, c));
        if sl2_classify(m[0][0], m[0][1], m[1][0]).tag != tag {
            invariance_failures += 1;
        }
    }
    Sl2SuiteReport {
        seed,
        tolerance: NORMALIZER_TOLERANCE,
        representatives,
        classes,
        invariance_trials: perturbations,
        invariance_failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn representatives_classify() {
        assert_eq!(sl2_classify(q(0), q(-1), q(1)).tag, Sl2Tag::K);
        assert_eq!(sl2_classify(q(1), q(0), q(0)).tag, Sl2Tag::A);
        assert_eq!(sl2_classify(q(0), q(1), q(0)).tag, Sl2Tag::N);
        assert_eq!(sl2_classify(q(0), q(0), q(0)).tag, Sl2Tag::O2);
        assert_eq!(sl2_classify(q(0), q(1), q(-1)).tag, Sl2Tag::K);
    }

    #[test]
    fn nilpotent_with_c_zero() {
        let n = sl2_normalizer(q(0), q(2), q(0)).unwrap();
        assert_eq!(n.lambda, 0.5);
        assert_eq!(n.g, [[1.0, 0.0], [0.0, 1.0]]);
        assert_eq!(n.exact, Some(true));
    }

    #[test]
    fn k_itself() {
        let n = sl2_normalizer(q(0), q(-1), q(1)).unwrap();
        assert!(normalizer_error(q(0), q(-1), q(1), &n) < 1e-12);
        assert_eq!(n.exact, Some(true));
        // c < 0 branch
        let n = sl2_normalizer(q(0), q(1), q(-4)).unwrap();
        assert!(normalizer_error(q(0), q(1), q(-4), &n) < 1e-12);
        assert_eq!(n.exact, Some(true));
    }

    #[test]
    fn hyperbolic_with_c_zero() {
        for (a, b) in [(1, 0), (1, 2), (-3, 5), (2, 4)] {
            let n = sl2_normalizer(q(a), q(b), q(0)).unwrap();
            assert!(normalizer_error(q(a), q(b), q(0), &n) < 1e-12, "{a} {b}");
            assert_eq!(n.exact, Some(true));
        }
    }

    #[test]
    fn zero_has_no_normalizer() {
        assert_eq!(sl2_normalizer(q(0), q(0), q(0)), Err(Error::ZeroMatrix));
    }

    #[test]
    fn suite_is_deterministic() {
        let a = sl2_suite(7, 50, 50);
        let b = sl2_suite(7, 50, 50);
        assert_eq!(a, b);
        assert!(a.passed(), "{a:?}");
    }
}
