use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{q, Q};

/// `re + i·im` with exact rational parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: Q,
    pub im: Q,
}

impl GaussianRational {
    pub const fn new(re: Q, im: Q) -> Self {
        GaussianRational { re, im }
    }

    pub fn real(re: Q) -> Self {
        Self::new(re, Q::zero())
    }

    pub fn imag(im: Q) -> Self {
        Self::new(Q::zero(), im)
    }

    pub fn int(re: i64, im: i64) -> Self {
        Self::new(q(re), q(im))
    }

    pub fn i() -> Self {
        Self::int(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(self) -> Self {
        Self::new(self.re, -self.im)
    }

    pub fn scale(self, k: Q) -> Self {
        Self::new(self.re * k, self.im * k)
    }

    /// Exact quotient `self / other` when `other ≠ 0`.
    pub fn checked_div(self, other: Self) -> Option<Self> {
        let n = other.re * other.re + other.im * other.im;
        if n.is_zero() {
            return None;
        }
        let p = self * other.conj();
        Some(Self::new(p.re / n, p.im / n))
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.re - o.re, self.im - o.im)
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self::new(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            _ => write!(f, "{}+{}i", self.re, self.im),
        }
    }
}

/// Dense square matrix over the Gaussian rationals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussianMatrix {
    n: usize,
    entries: Vec<GaussianRational>,
}

impl GaussianMatrix {
    pub fn zeros(n: usize) -> Self {
        GaussianMatrix {
            n,
            entries: vec![GaussianRational::default(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, GaussianRational::int(1, 0));
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: rows.iter().map(Vec::len).find(|&l| l != n).unwrap_or(0),
            });
        }
        Ok(GaussianMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_real(rows: &[Vec<Q>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| GaussianRational::real(x)).collect())
                .collect(),
        )
    }

    pub fn diagonal(d: &[GaussianRational]) -> Self {
        let mut m = Self::zeros(d.len());
        for (i, &x) in d.iter().enumerate() {
            m.set(i, i, x);
        }
        m
    }

    /// Matrix unit `E_ij`.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n);
        m.set(i, j, GaussianRational::int(1, 0));
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> GaussianRational {
        self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: GaussianRational) {
        self.entries[i * self.n + j] = v;
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.zip(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.zip(other, |a, b| a - b))
    }

    fn zip(&self, other: &Self, f: impl Fn(GaussianRational, GaussianRational) -> GaussianRational) -> Self {
        GaussianMatrix {
            n: self.n,
            entries: self.entries.iter().zip(&other.entries).map(|(&a, &b)| f(a, b)).collect(),
        }
    }

    pub fn scale(&self, k: GaussianRational) -> Self {
        GaussianMatrix {
            n: self.n,
            entries: self.entries.iter().map(|&a| a * k).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> GaussianRational {
        (0..self.n).fold(GaussianRational::default(), |s, i| s + self.get(i, i))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(GaussianRational::is_zero)
    }

    /// `[X, Y] = XY − YX`.
    pub fn bracket(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Killing form of `sl(n, C)`: `B(X, Y) = 2n · tr(XY)`.
    pub fn killing(&self, other: &Self) -> Result<GaussianRational> {
        Ok(self.mul(other)?.trace().scale(q(2 * self.n as i64)))
    }

    /// If `other = λ · self` for a scalar `λ` (and `self ≠ 0`), returns `λ`.
    pub fn proportionality(&self, other: &Self) -> Option<GaussianRational> {
        let pivot = self.entries.iter().position(|e| !e.is_zero())?;
        let lambda = other.entries[pivot].checked_div(self.entries[pivot])?;
        (self.scale(lambda) == *other).then_some(lambda)
    }
}

impl fmt::Display for GaussianMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
