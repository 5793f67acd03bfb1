//! Weyl group enumeration, inversion sets and parabolic coset data.
//!
//! Elements are stored as permutations of the root indices of a
//! [`RootSystem`] together with their lexicographically least reduced word.
//! Equality of elements is equality of inversion sets.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Q;
use crate::rootsys::{Root, RootSystem};

pub const DEFAULT_WEYL_CAP: usize = 1_000_000;

/// `Φ_w = {β ∈ Δ⁺ | w⁻¹β ∈ Δ⁻}`, stored as sorted positive-root indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct InversionSet(Vec<usize>);

impl InversionSet {
    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn to_set(&self) -> BTreeSet<usize> {
        self.0.iter().copied().collect()
    }

    pub fn roots(&self, rs: &RootSystem) -> Vec<Root> {
        self.0.iter().map(|&i| rs.root(i).clone()).collect()
    }
}

/// An element of the Weyl group.
#[derive(Debug, Clone)]
pub struct WeylElement {
    perm: Vec<usize>,
    inv_perm: Vec<usize>,
    word: Vec<usize>,
    inversions: InversionSet,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.inversions == other.inversions
    }
}

impl Eq for WeylElement {}

impl std::hash::Hash for WeylElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.inversions.hash(state);
    }
}

impl WeylElement {
    pub fn identity(rs: &RootSystem) -> Self {
        let perm: Vec<usize> = (0..rs.num_roots()).collect();
        WeylElement {
            inv_perm: perm.clone(),
            perm,
            word: Vec::new(),
            inversions: InversionSet(Vec::new()),
        }
    }

    /// Builds an element from a word in simple reflections (indices `0..ℓ`,
    /// applied right to left: `[i, j]` is `s_i s_j`). The stored word is the
    /// given one, which need not be reduced.
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Self {
        let mut w = WeylElement::identity(rs);
        for &i in word {
            w = w.times_simple(rs, i);
        }
        w
    }

    /// Reflection along an arbitrary root. The stored word is empty; use
    /// [`WeylGroup::canonical`] for the reduced word.
    pub fn reflection(rs: &RootSystem, gamma: &Root) -> Result<Self> {
        rs.require_index(gamma)?;
        let perm: Vec<usize> = rs
            .roots()
            .iter()
            .map(|r| rs.index_of(&rs.reflect_along(gamma, r)).expect("reflection preserves roots"))
            .collect();
        Ok(Self::from_perm(rs, perm, Vec::new()))
    }

    fn from_perm(rs: &RootSystem, perm: Vec<usize>, word: Vec<usize>) -> Self {
        let mut inv_perm = vec![0; perm.len()];
        for (i, &p) in perm.iter().enumerate() {
            inv_perm[p] = i;
        }
        // Φ_w = {β > 0 : w⁻¹β < 0}
        let inversions = InversionSet(
            (0..rs.num_positive())
                .filter(|&b| !rs.is_positive_index(inv_perm[b]))
                .collect(),
        );
        WeylElement {
            perm,
            inv_perm,
            word,
            inversions,
        }
    }

    /// `self · s_i`.
    pub fn times_simple(&self, rs: &RootSystem, i: usize) -> Self {
        let perm: Vec<usize> = (0..rs.num_roots())
            .map(|k| self.perm[rs.reflect_index(i, k)])
            .collect();
        let mut word = self.word.clone();
        word.push(i);
        Self::from_perm(rs, perm, word)
    }

    /// Group product `self · other` (as maps: apply `other` first). The word
    /// is the concatenation and may not be reduced.
    pub fn compose(&self, rs: &RootSystem, other: &WeylElement) -> Self {
        let perm: Vec<usize> = other.perm.iter().map(|&k| self.perm[k]).collect();
        let mut word = self.word.clone();
        word.extend(&other.word);
        Self::from_perm(rs, perm, word)
    }

    pub fn inverse(&self, rs: &RootSystem) -> Self {
        let word: Vec<usize> = self.word.iter().rev().copied().collect();
        Self::from_perm(rs, self.inv_perm.clone(), word)
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Word with 1-based generator labels, for reports.
    pub fn word_one_based(&self) -> Vec<usize> {
        self.word.iter().map(|i| i + 1).collect()
    }

    pub fn length(&self) -> usize {
        self.inversions.len()
    }

    pub fn is_identity(&self) -> bool {
        self.inversions.is_empty()
    }

    pub fn inversion_set(&self) -> &InversionSet {
        &self.inversions
    }

    /// Index of `w(root i)`.
    pub fn act_index(&self, i: usize) -> usize {
        self.perm[i]
    }

    /// Index of `w⁻¹(root i)`.
    pub fn act_inverse_index(&self, i: usize) -> usize {
        self.inv_perm[i]
    }

    pub fn act(&self, rs: &RootSystem, alpha: &Root) -> Result<Root> {
        let i = rs.require_index(alpha)?;
        Ok(rs.root(self.perm[i]).clone())
    }

    pub fn act_inverse(&self, rs: &RootSystem, alpha: &Root) -> Result<Root> {
        let i = rs.require_index(alpha)?;
        Ok(rs.root(self.inv_perm[i]).clone())
    }

    /// Image of a lattice vector (simple-root coordinates).
    pub fn act_on_lattice(&self, rs: &RootSystem, v: &[i64]) -> Vec<i64> {
        let l = rs.rank();
        let mut out = vec![0; l];
        for (j, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let img = rs.root(self.perm[j]);
            for k in 0..l {
                out[k] += c * img.0[k];
            }
        }
        out
    }

    /// Action on an element of the Cartan subalgebra written on the coweight
    /// basis: `(w·c)_a = (w⁻¹ α_a)(c)`.
    pub fn act_on_coweight(&self, rs: &RootSystem, c: &[Q]) -> Vec<Q> {
        (0..rs.rank())
            .map(|a| {
                let pre = rs.root(self.inv_perm[a]);
                pre.0.iter().zip(c).map(|(&k, &x)| Q::from_integer(k) * x).sum()
            })
            .collect()
    }

    /// Integer version of [`Self::act_on_coweight`].
    pub fn act_on_integer_coweight(&self, rs: &RootSystem, c: &[i64]) -> Vec<i64> {
        (0..rs.rank())
            .map(|a| {
                let pre = rs.root(self.inv_perm[a]);
                pre.0.iter().zip(c).map(|(k, x)| k * x).sum()
            })
            .collect()
    }

    /// Whether both elements induce the same permutation of roots.
    pub fn same_action(&self, other: &WeylElement) -> bool {
        self.perm == other.perm
    }
}

/// The full Weyl group in canonical order (length, then least reduced word).
#[derive(Debug, Clone)]
pub struct WeylGroup {
    elements: Vec<WeylElement>,
    lookup: HashMap<InversionSet, usize>,
    longest: usize,
}

impl WeylGroup {
    /// Breadth-first enumeration from the identity over right multiplication
    /// by simple reflections. Processing each layer in word order and the
    /// generators in ascending order makes the first word found for an
    /// element its lexicographically least reduced word.
    pub fn enumerate(rs: &RootSystem, cap: usize) -> Result<Self> {
        let mut elements = vec![WeylElement::identity(rs)];
        let mut lookup = HashMap::new();
        lookup.insert(elements[0].inversions.clone(), 0);
        let mut layer_start = 0;
        while layer_start < elements.len() {
            let layer_end = elements.len();
            for idx in layer_start..layer_end {
                for i in 0..rs.rank() {
                    let next = elements[idx].times_simple(rs, i);
                    if next.length() != elements[idx].length() + 1 {
                        continue;
                    }
                    if lookup.contains_key(&next.inversions) {
                        continue;
                    }
                    if elements.len() >= cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    lookup.insert(next.inversions.clone(), elements.len());
                    elements.push(next);
                }
            }
            layer_start = layer_end;
        }
        let longest = elements.len() - 1;
        debug_assert_eq!(elements[longest].length(), rs.num_positive());
        Ok(WeylGroup {
            elements,
            lookup,
            longest,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &WeylElement {
        &self.elements[i]
    }

    pub fn identity(&self) -> &WeylElement {
        &self.elements[0]
    }

    /// The longest element `κ`, with `Φ_κ = Δ⁺`.
    pub fn longest(&self) -> &WeylElement {
        &self.elements[self.longest]
    }

    pub fn position(&self, w: &WeylElement) -> usize {
        self.lookup[&w.inversions]
    }

    /// The enumerated copy of `w` (with its canonical reduced word).
    pub fn canonical(&self, w: &WeylElement) -> &WeylElement {
        &self.elements[self.position(w)]
    }

    pub fn product(&self, rs: &RootSystem, a: &WeylElement, b: &WeylElement) -> &WeylElement {
        self.canonical(&a.compose(rs, b))
    }

    pub fn inverse(&self, rs: &RootSystem, a: &WeylElement) -> &WeylElement {
        self.canonical(&a.inverse(rs))
    }

    /// The simple reflection `s_i`.
    pub fn simple(&self, i: usize) -> &WeylElement {
        self.elements
            .iter()
            .find(|w| w.word == [i])
            .expect("simple reflections are enumerated")
    }
}

/// The parabolic subgroup `W₁` and the coset set `W¹` attached to a Levi
/// root set `▲`.
#[derive(Debug, Clone)]
pub struct CosetSets {
    /// Positions in the [`WeylGroup`], canonical order.
    pub levi: Vec<usize>,
    pub cosets: Vec<usize>,
}

/// Validates `▲` as a symmetric closed root set.
pub fn validate_levi_set(rs: &RootSystem, levi: &BTreeSet<usize>) -> Result<()> {
    for &i in levi {
        if !levi.contains(&rs.negate_index(i)) {
            return Err(Error::NotSymmetric(rs.root(i).0.clone()));
        }
    }
    if let Some((a, b)) = rs.closure_violation(levi) {
        return Err(Error::NotClosed {
            a: rs.root(a).0.clone(),
            b: rs.root(b).0.clone(),
        });
    }
    Ok(())
}

/// Whether `▲⁺` is spanned by the simple roots it contains.
pub fn is_standard_levi(rs: &RootSystem, levi: &BTreeSet<usize>) -> bool {
    let simple: Vec<usize> = (0..rs.rank()).filter(|i| levi.contains(i)).collect();
    levi.iter()
        .filter(|&&i| rs.is_positive_index(i))
        .all(|&i| rs.root(i).0.iter().enumerate().all(|(k, &c)| c == 0 || simple.contains(&k)))
}

/// `W₁` is the subgroup generated by the reflections along `▲`; `W¹` is
/// `{σ | Φ_σ ⊆ Δ⁺ − ▲}`.
pub fn coset_sets(rs: &RootSystem, group: &WeylGroup, levi: &BTreeSet<usize>) -> Result<CosetSets> {
    validate_levi_set(rs, levi)?;

    let mut in_levi = vec![false; group.order()];
    in_levi[0] = true;
    let mut frontier = vec![0usize];
    let generators: Vec<WeylElement> = levi
        .iter()
        .filter(|&&i| rs.is_positive_index(i))
        .map(|&i| WeylElement::reflection(rs, rs.root(i)))
        .collect::<Result<_>>()?;
    while let Some(p) = frontier.pop() {
        for g in &generators {
            let q = group.position(&group.element(p).compose(rs, g));
            if !in_levi[q] {
                in_levi[q] = true;
                frontier.push(q);
            }
        }
    }
    let levi_elems: Vec<usize> = (0..group.order()).filter(|&p| in_levi[p]).collect();
    let cosets: Vec<usize> = (0..group.order())
        .filter(|&p| {
            group
                .element(p)
                .inversion_set()
                .indices()
                .iter()
                .all(|i| !levi.contains(i))
        })
        .collect();
    if levi_elems.len() * cosets.len() != group.order() {
        return Err(Error::IncompatibleLevi {
            order: group.order(),
            product: levi_elems.len() * cosets.len(),
        });
    }
    Ok(CosetSets {
        levi: levi_elems,
        cosets,
    })
}

/// Factorization `w = τσ` with `τ ∈ W₁`, `σ ∈ W¹`, returned as positions.
pub fn factorize(
    rs: &RootSystem,
    group: &WeylGroup,
    sets: &CosetSets,
    w: &WeylElement,
) -> Result<(usize, usize)> {
    let in_cosets: BTreeSet<usize> = sets.cosets.iter().copied().collect();
    for &t in &sets.levi {
        let tau_inv = group.element(t).inverse(rs);
        let sigma = group.position(&tau_inv.compose(rs, w));
        if in_cosets.contains(&sigma) {
            return Ok((t, sigma));
        }
    }
    Err(Error::IdentityFailure(format!(
        "no factorization found for w = {:?}",
        w.word_one_based()
    )))
}

/// Whether an arbitrary root-index set is closed.
pub fn is_closed_set(rs: &RootSystem, set: &InversionSet) -> bool {
    rs.is_closed(&set.to_set())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn levi_from(rs: &RootSystem, roots: &[&[i64]]) -> BTreeSet<usize> {
        let mut s = BTreeSet::new();
        for r in roots {
            let i = rs.index_of(&Root(r.to_vec())).unwrap();
            s.insert(i);
            s.insert(rs.negate_index(i));
        }
        s
    }

    #[test]
    fn orders() {
        for (label, n) in [
            ("A1", 2),
            ("A2", 6),
            ("A3", 24),
            ("B2", 8),
            ("B3", 48),
            ("C3", 48),
            ("G2", 12),
            ("D4", 192),
            ("F4", 1152),
        ] {
            let rs = RootSystem::from_label(label).unwrap();
            assert_eq!(WeylGroup::enumerate(&rs, DEFAULT_WEYL_CAP).unwrap().order(), n, "{label}");
        }
    }

    #[test]
    fn cap_is_enforced() {
        let rs = RootSystem::from_label("B3").unwrap();
        assert_eq!(
            WeylGroup::enumerate(&rs, 10).unwrap_err(),
            Error::CapExceeded { cap: 10 }
        );
    }

    #[test]
    fn basic_actions_and_inversions() {
        let rs = RootSystem::from_label("G2").unwrap();
        let g = WeylGroup::enumerate(&rs, DEFAULT_WEYL_CAP).unwrap();
        let e = g.identity();
        for r in rs.roots() {
            assert_eq!(&e.act(&rs, r).unwrap(), r);
        }
        assert!(e.inversion_set().is_empty());
        for i in 0..2 {
            let s = g.simple(i);
            assert_eq!(s.act(&rs, rs.simple_root(i)).unwrap(), rs.simple_root(i).neg());
            assert_eq!(s.inversion_set().indices(), &[i]);
        }
        assert_eq!(g.longest().inversion_set().len(), rs.num_positive());
    }

    #[test]
    fn canonical_words_are_least_reduced() {
        let rs = RootSystem::from_label("A2").unwrap();
        let g = WeylGroup::enumerate(&rs, DEFAULT_WEYL_CAP).unwrap();
        let words: Vec<Vec<usize>> = g.elements().iter().map(|w| w.word().to_vec()).collect();
        assert_eq!(
            words,
            vec![vec![], vec![0], vec![1], vec![0, 1], vec![1, 0], vec![0, 1, 0]]
        );
    }

    #[test]
    fn longest_element_is_an_involution() {
        for label in ["A3", "B3", "G2"] {
            let rs = RootSystem::from_label(label).unwrap();
            let g = WeylGroup::enumerate(&rs, DEFAULT_WEYL_CAP).unwrap();
            let k = g.longest();
            assert!(k.compose(&rs, k).is_identity());
        }
    }

    #[test]
    fn coset_sets_extremes() {
        let rs = RootSystem::from_label("A2").unwrap();
        let g = WeylGroup::enumerate(&rs, DEFAULT_WEYL_CAP).unwrap();
        let empty = coset_sets(&rs, &g, &BTreeSet::new()).unwrap();
        assert_eq!(empty.levi, vec![0]);
        assert_eq!(empty.cosets.len(), 6);
        let all: BTreeSet<usize> = (0..rs.num_roots()).collect();
        let full = coset_sets(&rs, &g, &all).unwrap();
        assert_eq!(full.levi.len(), 6);
        assert_eq!(full.cosets, vec![0]);
    }

    #[test]
    fn g2_nonstandard_levi() {
        let rs = RootSystem::from_label("G2").unwrap();
        let g = WeylGroup::enumerate(&rs, DEFAULT_WEYL_CAP).unwrap();
        let levi = levi_from(&rs, &[&[2, 1]]);
        assert!(!is_standard_levi(&rs, &levi));
        let sets = coset_sets(&rs, &g, &levi).unwrap();
        assert_eq!(sets.levi.len(), 2);
        assert_eq!(sets.cosets.len(), 6);
    }

    #[test]
    fn rejects_bad_levi_sets() {
        let rs = RootSystem::from_label("A2").unwrap();
        let g = WeylGroup::enumerate(&rs, DEFAULT_WEYL_CAP).unwrap();
        let one_sided: BTreeSet<usize> = [0].into_iter().collect();
        assert!(matches!(coset_sets(&rs, &g, &one_sided), Err(Error::NotSymmetric(_))));
        let not_closed = levi_from(&rs, &[&[1, 0], &[0, 1]]);
        assert!(matches!(coset_sets(&rs, &g, &not_closed), Err(Error::NotClosed { .. })));
    }

    #[test]
    fn factorization_of_identity_and_coset_elements() {
        let rs = RootSystem::from_label("B3").unwrap();
        let g = WeylGroup::enumerate(&rs, DEFAULT_WEYL_CAP).unwrap();
        let levi = levi_from(&rs, &[&[1, 0, 0]]);
        let sets = coset_sets(&rs, &g, &levi).unwrap();
        assert_eq!(factorize(&rs, &g, &sets, g.identity()).unwrap(), (0, 0));
        for &s in &sets.cosets {
            assert_eq!(factorize(&rs, &g, &sets, g.element(s)).unwrap(), (0, s));
        }
    }

    #[test]
    fn coweight_action_matches_root_action() {
        let rs = RootSystem::from_label("G2").unwrap();
        let g = WeylGroup::enumerate(&rs, DEFAULT_WEYL_CAP).unwrap();
        let c = [Q::from_integer(1), Q::from_integer(-2)];
        for w in g.elements() {
            let wc = w.act_on_coweight(&rs, &c);
            for r in rs.roots() {
                // (wα)(w·c) = α(c)
                let wr = w.act(&rs, r).unwrap();
                assert_eq!(
                    rs.evaluate_on_coweight(&wr, &wc).unwrap(),
                    rs.evaluate_on_coweight(r, &c).unwrap()
                );
            }
        }
    }
}
