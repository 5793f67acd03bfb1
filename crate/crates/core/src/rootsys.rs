//! Finite root systems built from Cartan matrices.
//!
//! Roots are integer vectors on the simple roots. Positive roots are produced
//! by closing the simple roots under simple reflections and keeping the
//! non-negative vectors; no per-type tables are stored.
//!
//! Cartan convention: `C[i][j] = 2 (α_i, α_j) / (α_j, α_j)`, so the simple
//! reflection is `s_j(β) = β - (Σ_i b_i C[i][j]) α_j`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{q, Q};

/// Square integer matrix of finite type.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i64>>", into = "Vec<Vec<i64>>")]
pub struct CartanMatrix {
    rank: usize,
    entries: Vec<i64>,
}

impl CartanMatrix {
    /// Validates shape, entry ranges, zero pattern, symmetrizability and
    /// finite type.
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let rank = rows.len();
        if rank == 0 {
            return Err(Error::InvalidCartan("empty matrix".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != rank {
                return Err(Error::InvalidCartan(format!(
                    "row {i} has length {} (expected {rank})",
                    row.len()
                )));
            }
        }
        let entries: Vec<i64> = rows.into_iter().flatten().collect();
        let m = CartanMatrix { rank, entries };
        for i in 0..rank {
            if m.get(i, i) != 2 {
                return Err(Error::InvalidCartan(format!("diagonal entry ({i},{i}) is not 2")));
            }
            for j in 0..rank {
                if i == j {
                    continue;
                }
                let a = m.get(i, j);
                if !(-3..=0).contains(&a) {
                    return Err(Error::InvalidCartan(format!(
                        "off-diagonal entry ({i},{j}) = {a} not in {{0,-1,-2,-3}}"
                    )));
                }
                if (a == 0) != (m.get(j, i) == 0) {
                    return Err(Error::InvalidCartan(format!(
                        "entries ({i},{j}) and ({j},{i}) must vanish together"
                    )));
                }
            }
        }
        for k in 1..=rank {
            let minor = m.leading_minor(k);
            if !minor.is_positive() {
                return Err(Error::NotFiniteType {
                    order: k,
                    value: minor.to_string(),
                });
            }
        }
        // finite type forces symmetrizability, but check so errors are precise
        m.symmetrizer()?;
        Ok(m)
    }

    /// Cartan matrix for a Dynkin label such as `"A2"`, `"B3"`, `"G2"`.
    pub fn from_label(label: &str) -> Result<Self> {
        label.parse::<DynkinType>()?.cartan_matrix()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.rank + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.rank).map(|r| r.to_vec()).collect()
    }

    fn leading_minor(&self, k: usize) -> Q {
        let mut a: Vec<Vec<Q>> = (0..k)
            .map(|i| (0..k).map(|j| q(self.get(i, j))).collect())
            .collect();
        determinant(&mut a)
    }

    /// Half squared lengths of the simple roots, scaled so that the shortest
    /// simple root in each connected component has `(α, α) = 2`.
    fn symmetrizer(&self) -> Result<Vec<Q>> {
        let n = self.rank;
        let mut d: Vec<Option<Q>> = vec![None; n];
        for start in 0..n {
            if d[start].is_some() {
                continue;
            }
            let mut component = vec![start];
            d[start] = Some(Q::one());
            let mut queue = VecDeque::from([start]);
            while let Some(i) = queue.pop_front() {
                for j in 0..n {
                    if i == j || self.get(i, j) == 0 {
                        continue;
                    }
                    // C_ij d_j = C_ji d_i
                    let dj = d[i].unwrap() * q(self.get(j, i)) / q(self.get(i, j));
                    match d[j] {
                        None => {
                            d[j] = Some(dj);
                            component.push(j);
                            queue.push_back(j);
                        }
                        Some(existing) if existing != dj => {
                            return Err(Error::InvalidCartan("matrix is not symmetrizable".into()))
                        }
                        Some(_) => {}
                    }
                }
            }
            let min = component.iter().map(|&i| d[i].unwrap()).min().unwrap();
            for &i in &component {
                d[i] = Some(d[i].unwrap() / min);
            }
        }
        Ok(d.into_iter().map(Option::unwrap).collect())
    }
}

impl TryFrom<Vec<Vec<i64>>> for CartanMatrix {
    type Error = Error;
    fn try_from(rows: Vec<Vec<i64>>) -> Result<Self> {
        CartanMatrix::new(rows)
    }
}

impl From<CartanMatrix> for Vec<Vec<i64>> {
    fn from(m: CartanMatrix) -> Self {
        m.rows()
    }
}

pub(crate) fn determinant(a: &mut [Vec<Q>]) -> Q {
    let n = a.len();
    let mut det = Q::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Q::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let pivot = a[col][col];
        det *= pivot;
        for r in col + 1..n {
            let f = a[r][col] / pivot;
            if f.is_zero() {
                continue;
            }
            for c in col..n {
                let v = a[col][c];
                a[r][c] -= f * v;
            }
        }
    }
    det
}

/// Irreducible Dynkin types (Bourbaki numbering).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DynkinType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2,
}

impl DynkinType {
    pub fn rank(self) -> usize {
        match self {
            DynkinType::A(n) | DynkinType::B(n) | DynkinType::C(n) | DynkinType::D(n) => n,
            DynkinType::E(n) => n,
            DynkinType::F4 => 4,
            DynkinType::G2 => 2,
        }
    }

    pub fn cartan_matrix(self) -> Result<CartanMatrix> {
        let n = self.rank();
        let mut m = vec![vec![0i64; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            m[i][j] = -1;
            m[j][i] = -1;
        };
        match self {
            DynkinType::A(_) | DynkinType::B(_) | DynkinType::C(_) => {
                for i in 1..n {
                    link(i - 1, i);
                }
            }
            DynkinType::D(_) => {
                for i in 1..n - 1 {
                    link(i - 1, i);
                }
                link(n - 3, n - 1);
            }
            DynkinType::E(_) => {
                // 1-3-4-5-..., with 2 attached to 4
                link(0, 2);
                link(1, 3);
                for i in 3..n {
                    link(i - 1, i);
                }
            }
            DynkinType::F4 => {
                link(0, 1);
                link(1, 2);
                link(2, 3);
            }
            DynkinType::G2 => link(0, 1),
        }
        match self {
            DynkinType::B(_) => m[n - 2][n - 1] = -2,
            DynkinType::C(_) => m[n - 1][n - 2] = -2,
            DynkinType::F4 => m[1][2] = -2,
            DynkinType::G2 => m[1][0] = -3,
            _ => {}
        }
        CartanMatrix::new(m)
    }
}

impl FromStr for DynkinType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::UnknownType(s.to_string());
        let mut chars = t.chars();
        let letter = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
        let n: usize = chars.as_str().trim_start_matches('_').parse().map_err(|_| bad())?;
        let ty = match (letter, n) {
            ('A', n) if n >= 1 => DynkinType::A(n),
            ('B', n) if n >= 2 => DynkinType::B(n),
            ('C', n) if n >= 2 => DynkinType::C(n),
            ('D', n) if n >= 4 => DynkinType::D(n),
            ('E', n) if (6..=8).contains(&n) => DynkinType::E(n),
            ('F', 4) => DynkinType::F4,
            ('G', 2) => DynkinType::G2,
            _ => return Err(bad()),
        };
        Ok(ty)
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinType::A(n) => write!(f, "A{n}"),
            DynkinType::B(n) => write!(f, "B{n}"),
            DynkinType::C(n) => write!(f, "C{n}"),
            DynkinType::D(n) => write!(f, "D{n}"),
            DynkinType::E(n) => write!(f, "E{n}"),
            DynkinType::F4 => write!(f, "F4"),
            DynkinType::G2 => write!(f, "G2"),
        }
    }
}

/// A root, as integer coefficients on the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn simple(rank: usize, i: usize) -> Root {
        let mut v = vec![0; rank];
        v[i] = 1;
        Root(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.0.iter().all(|&c| c <= 0) && self.0.iter().any(|&c| c < 0)
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            if mag == 1 {
                write!(f, "{sign}a{}", i + 1)?;
            } else {
                write!(f, "{sign}{mag}a{}", i + 1)?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Canonical root order: height, then coordinates in descending
/// lexicographic order (so the simple roots come out as `α_1, ..., α_ℓ`).
pub fn canonical_cmp(a: &Root, b: &Root) -> std::cmp::Ordering {
    a.height().cmp(&b.height()).then_with(|| b.0.cmp(&a.0))
}

/// A finite root system with its positive roots, pairing and simple
/// reflections.
///
/// Roots are indexed `0..N` for the positive roots in canonical order and
/// `N..2N` for their negatives (index `i + N` holds `-roots[i]`). Indices
/// `0..ℓ` are the simple roots.
#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan: CartanMatrix,
    symmetrizer: Vec<Q>,
    roots: Vec<Root>,
    index: HashMap<Root, usize>,
    n_pos: usize,
    /// `reflections[j][k]` is the index of `s_j(root k)`.
    reflections: Vec<Vec<usize>>,
}

impl RootSystem {
    pub fn new(cartan: CartanMatrix) -> Result<Self> {
        build_root_system(cartan)
    }

    pub fn from_label(label: &str) -> Result<Self> {
        build_root_system(CartanMatrix::from_label(label)?)
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[Q] {
        &self.symmetrizer
    }

    pub fn num_positive(&self) -> usize {
        self.n_pos
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    /// `dim g_C = |Δ| + ℓ`.
    pub fn dim_algebra(&self) -> usize {
        self.roots.len() + self.rank()
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.n_pos]
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &Root {
        &self.roots[i]
    }

    pub fn simple_root(&self, i: usize) -> &Root {
        &self.roots[i]
    }

    pub fn index_of(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn require_index(&self, r: &Root) -> Result<usize> {
        self.index_of(r).ok_or_else(|| Error::NotARoot(r.0.clone()))
    }

    pub fn is_positive_index(&self, i: usize) -> bool {
        i < self.n_pos
    }

    pub fn negate_index(&self, i: usize) -> usize {
        if i < self.n_pos {
            i + self.n_pos
        } else {
            i - self.n_pos
        }
    }

    /// Index of `s_j(root i)`.
    pub fn reflect_index(&self, j: usize, i: usize) -> usize {
        self.reflections[j][i]
    }

    /// Inner product of two lattice vectors on the simple-root basis.
    pub fn pairing(&self, a: &Root, b: &Root) -> Q {
        let l = self.rank();
        let mut s = Q::zero();
        for i in 0..l {
            if a.0[i] == 0 {
                continue;
            }
            for j in 0..l {
                if b.0[j] == 0 {
                    continue;
                }
                // (α_i, α_j) = C_ij d_j
                s += q(a.0[i] * b.0[j] * self.cartan.get(i, j)) * self.symmetrizer[j];
            }
        }
        s
    }

    /// `2⟨a, b⟩ / ⟨b, b⟩`.
    pub fn cartan_integer(&self, a: &Root, b: &Root) -> Q {
        q(2) * self.pairing(a, b) / self.pairing(b, b)
    }

    /// `α(Σ c_a Z_a)` where `{Z_a}` is dual to the simple roots.
    pub fn evaluate_on_coweight(&self, alpha: &Root, c: &[Q]) -> Result<Q> {
        if c.len() != self.rank() || alpha.0.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: if c.len() != self.rank() { c.len() } else { alpha.0.len() },
            });
        }
        Ok(alpha.0.iter().zip(c).map(|(&a, &x)| q(a) * x).sum())
    }

    /// Simple reflection `s_j` on an arbitrary lattice vector.
    pub fn reflect(&self, j: usize, v: &Root) -> Root {
        let l = self.rank();
        let pair: i64 = (0..l).map(|i| v.0[i] * self.cartan.get(i, j)).sum();
        let mut out = v.0.clone();
        out[j] -= pair;
        Root(out)
    }

    /// Reflection along an arbitrary root `gamma`.
    pub fn reflect_along(&self, gamma: &Root, v: &Root) -> Root {
        let k = self.cartan_integer(v, gamma);
        debug_assert!(k.is_integer());
        let k = k.to_integer();
        Root(v.0.iter().zip(&gamma.0).map(|(a, g)| a - k * g).collect())
    }

    /// Whether a set of root indices is closed under root addition.
    pub fn closure_violation(&self, set: &BTreeSet<usize>) -> Option<(usize, usize)> {
        for &a in set {
            for &b in set {
                if let Some(s) = self.index_of(&self.roots[a].add(&self.roots[b])) {
                    if !set.contains(&s) {
                        return Some((a, b));
                    }
                }
            }
        }
        None
    }

    pub fn is_closed(&self, set: &BTreeSet<usize>) -> bool {
        self.closure_violation(set).is_none()
    }

    pub fn is_symmetric(&self, set: &BTreeSet<usize>) -> bool {
        set.iter().all(|&i| set.contains(&self.negate_index(i)))
    }
}

/// Generates the positive roots by closing `Π` under simple reflections.
pub fn build_root_system(cartan: CartanMatrix) -> Result<RootSystem> {
    let l = cartan.rank();
    let symmetrizer = cartan.symmetrizer()?;
    // Finite root systems have height at most 29 (E8); anything beyond this
    // bound signals a non-finite matrix that slipped past validation.
    let height_bound = 2 * (l as i64) * 30;

    let reflect = |j: usize, v: &[i64]| -> Vec<i64> {
        let pair: i64 = (0..l).map(|i| v[i] * cartan.get(i, j)).sum();
        let mut out = v.to_vec();
        out[j] -= pair;
        out
    };

    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..l {
        let r = Root::simple(l, i).0;
        seen.insert(r.clone());
        queue.push_back(r);
    }
    while let Some(v) = queue.pop_front() {
        for j in 0..l {
            let w = reflect(j, &v);
            if w.iter().map(|c| c.abs()).sum::<i64>() > height_bound {
                return Err(Error::InvalidCartan(format!(
                    "root generation exceeded height bound {height_bound}"
                )));
            }
            if seen.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }

    let mut positive: Vec<Root> = seen
        .into_iter()
        .map(Root)
        .filter(|r| r.is_positive())
        .collect();
    positive.sort_by(canonical_cmp);
    let n_pos = positive.len();
    let mut roots = positive.clone();
    roots.extend(positive.iter().map(Root::neg));
    let index: HashMap<Root, usize> = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
    if index.len() != roots.len() {
        return Err(Error::InvalidCartan("mixed-sign vector produced".into()));
    }

    let mut reflections = vec![vec![0usize; roots.len()]; l];
    for (j, table) in reflections.iter_mut().enumerate() {
        for (k, r) in roots.iter().enumerate() {
            let img = Root(reflect(j, &r.0));
            table[k] = *index.get(&img).ok_or_else(|| {
                Error::InvalidCartan(format!("reflection of {r} left the root set"))
            })?;
        }
    }

    Ok(RootSystem {
        cartan,
        symmetrizer,
        roots,
        index,
        n_pos,
        reflections,
    })
}
