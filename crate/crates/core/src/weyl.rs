//! Weyl group elements as signed permutations of the positive roots.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::roots::{RootSystem, SignedRoot};
use crate::rootset::{ClosedSet, RootSet};

/// An element `w` of the Weyl group, stored as its action `β ↦ w(β)` on
/// every positive root. Two elements are equal iff their tables are.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    action: Vec<SignedRoot>,
}

impl WeylElement {
    pub fn identity(rs: &RootSystem) -> Self {
        WeylElement { action: (0..rs.len()).map(SignedRoot::positive).collect() }
    }

    /// The simple reflection `r_k`.
    pub fn simple(rs: &RootSystem, k: usize) -> Self {
        WeylElement { action: (0..rs.len()).map(|b| rs.reflect(k, b)).collect() }
    }

    /// `r_{w[0]} r_{w[1]} ⋯` for a word of simple indices.
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Self {
        word.iter().fold(Self::identity(rs), |w, &k| w.mul_simple(rs, k))
    }

    pub fn apply(&self, beta: usize) -> SignedRoot {
        self.action[beta]
    }

    pub fn apply_signed(&self, beta: SignedRoot) -> SignedRoot {
        let img = self.action[beta.index];
        if beta.negative {
            img.negate()
        } else {
            img
        }
    }

    /// `w · r_k`.
    pub fn mul_simple(&self, rs: &RootSystem, k: usize) -> Self {
        WeylElement { action: (0..self.action.len()).map(|b| self.apply_signed(rs.reflect(k, b))).collect() }
    }

    /// `r_k · w`.
    pub fn simple_mul(&self, rs: &RootSystem, k: usize) -> Self {
        WeylElement { action: self.action.iter().map(|&img| rs.reflect_signed(k, img)).collect() }
    }

    /// `self · other`.
    pub fn compose(&self, other: &WeylElement) -> Self {
        WeylElement { action: other.action.iter().map(|&img| self.apply_signed(img)).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut action = vec![SignedRoot::positive(0); self.action.len()];
        for (b, img) in self.action.iter().enumerate() {
            action[img.index] = SignedRoot { index: b, negative: img.negative };
        }
        WeylElement { action }
    }

    /// Length `l(w)`: the number of positive roots sent to negative ones.
    pub fn length(&self) -> usize {
        self.action.iter().filter(|s| s.negative).count()
    }

    pub fn is_identity(&self) -> bool {
        self.action.iter().enumerate().all(|(b, s)| !s.negative && s.index == b)
    }

    /// `Φ_w = {α ∈ Φ⁺ | w⁻¹α ∈ Φ⁻}`, equivalently `{-w(γ) | γ ∈ Φ⁺, w(γ) < 0}`.
    pub fn inversion_set(&self) -> ClosedSet {
        ClosedSet::new_unchecked(self.action.iter().filter(|s| s.negative).map(|s| s.index).collect())
    }

    /// `l(r_k w) < l(w)`, i.e. `α_k ∈ Φ_w`.
    pub fn has_left_descent(&self, k: usize) -> bool {
        self.inversion_set().contains(k)
    }

    /// `l(w r_k) < l(w)`, i.e. `w(α_k) < 0`.
    pub fn has_right_descent(&self, k: usize) -> bool {
        self.action[k].negative
    }

    /// Lexicographically smallest reduced word, 0-based letters.
    pub fn reduced_word(&self, rs: &RootSystem) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::with_capacity(self.length());
        while let Some(k) = (0..rs.rank()).find(|&k| w.has_left_descent(k)) {
            word.push(k);
            w = w.simple_mul(rs, k);
        }
        word
    }
}

/// `v ≤ w` in the weak order (`w = vu` with lengths adding), decided by
/// `Φ_v ⊆ Φ_w`.
pub fn weak_order_leq(v: &WeylElement, w: &WeylElement) -> bool {
    v.inversion_set().is_subset(w.inversion_set())
}

/// The longest element `w₀`.
pub fn longest_element(rs: &RootSystem) -> WeylElement {
    let mut w = WeylElement::identity(rs);
    while let Some(k) = (0..rs.rank()).find(|&k| !w.has_right_descent(k)) {
        w = w.mul_simple(rs, k);
    }
    w
}

/// The Weyl element whose inversion set is the largest `Φ_w` inside `a`.
///
/// Greedy ascent: while some `k` has `w(α_k) > 0` and `w(α_k) ∈ a`, replace
/// `w` by `w r_k`, since `Φ_{w r_k} = Φ_w ∪ {w(α_k)}`. The family of
/// inversion sets inside a closed set has a unique maximum, so the ascent
/// cannot get stuck below it.
pub fn max_inversion_subset(rs: &RootSystem, a: &ClosedSet) -> WeylElement {
    let mut w = WeylElement::identity(rs);
    loop {
        let step = (0..rs.rank()).find(|&k| {
            let img = w.apply(k);
            !img.negative && a.contains(img.index)
        });
        match step {
            Some(k) => w = w.mul_simple(rs, k),
            None => return w,
        }
    }
}

/// Every element of `W`, in breadth-first order from the identity.
pub fn enumerate_weyl_group(rs: &RootSystem, budget: u128) -> Result<Vec<WeylElement>> {
    let order = rs.spec().weyl_order();
    if order > budget {
        return Err(Error::TooLarge { size: order, bound: budget });
    }
    let id = WeylElement::identity(rs);
    let mut seen: HashSet<WeylElement> = HashSet::from([id.clone()]);
    let mut all = vec![id];
    let mut next = 0;
    while next < all.len() {
        let w = all[next].clone();
        next += 1;
        for k in 0..rs.rank() {
            let v = w.mul_simple(rs, k);
            if seen.insert(v.clone()) {
                all.push(v);
            }
        }
    }
    debug_assert_eq!(all.len() as u128, order);
    Ok(all)
}

/// `β ↦ -w₀(β)` as a permutation of positive-root indices.
pub fn negative_longest_permutation(rs: &RootSystem) -> Vec<usize> {
    let w0 = longest_element(rs);
    (0..rs.len())
        .map(|b| {
            let img = w0.apply(b);
            debug_assert!(img.negative);
            img.index
        })
        .collect()
}

/// Inversion sets of all elements, for exhaustive checks at small rank.
pub fn inversion_sets(elements: &[WeylElement]) -> Vec<RootSet> {
    elements.iter().map(|w| w.inversion_set().set()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::TypeSpec;

    fn a2() -> RootSystem {
        RootSystem::build(TypeSpec::a(2).unwrap())
    }

    #[test]
    fn inversion_set_examples() {
        let rs = a2();
        assert!(WeylElement::identity(&rs).inversion_set().is_empty());
        assert_eq!(WeylElement::simple(&rs, 0).inversion_set().set(), RootSet::singleton(0));
        assert_eq!(longest_element(&rs).inversion_set().set(), rs.all_roots());
        // Φ_{r1 r2} = {α1, r1(α2)} = {α1, α1+α2}
        let w = WeylElement::from_word(&rs, &[0, 1]);
        assert_eq!(w.inversion_set().set(), [0, 2].into_iter().collect());
    }

    #[test]
    fn longest_element_examples() {
        let a1 = RootSystem::build(TypeSpec::a(1).unwrap());
        assert_eq!(longest_element(&a1), WeylElement::simple(&a1, 0));
        let rs = a2();
        assert_eq!(longest_element(&rs).reduced_word(&rs), vec![0, 1, 0]);
        let d4 = RootSystem::build(TypeSpec::d(4).unwrap());
        assert_eq!(longest_element(&d4).length(), 12);
    }

    #[test]
    fn max_inversion_subset_examples() {
        let rs = a2();
        assert!(max_inversion_subset(&rs, &ClosedSet::empty()).is_identity());
        let a = ClosedSet::new(&rs, RootSet::singleton(0)).unwrap();
        assert_eq!(max_inversion_subset(&rs, &a), WeylElement::simple(&rs, 0));
        let b = ClosedSet::new(&rs, RootSet::singleton(2)).unwrap();
        assert!(max_inversion_subset(&rs, &b).is_identity());
    }

    #[test]
    fn weak_order_examples() {
        let rs = a2();
        let r1 = WeylElement::simple(&rs, 0);
        let r2 = WeylElement::simple(&rs, 1);
        assert!(weak_order_leq(&WeylElement::identity(&rs), &r1));
        assert!(weak_order_leq(&r1, &WeylElement::from_word(&rs, &[0, 1])));
        assert!(!weak_order_leq(&r1, &r2));
    }

    #[test]
    fn group_orders() {
        assert_eq!(enumerate_weyl_group(&a2(), 1000).unwrap().len(), 6);
        let d4 = RootSystem::build(TypeSpec::d(4).unwrap());
        assert_eq!(enumerate_weyl_group(&d4, 1000).unwrap().len(), 192);
        let e8 = RootSystem::build(TypeSpec::e(8).unwrap());
        assert!(matches!(enumerate_weyl_group(&e8, 1000), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn reduced_word_round_trip() {
        let rs = RootSystem::build(TypeSpec::a(3).unwrap());
        for w in enumerate_weyl_group(&rs, 100).unwrap() {
            let word = w.reduced_word(&rs);
            assert_eq!(word.len(), w.length());
            assert_eq!(WeylElement::from_word(&rs, &word), w);
        }
    }

    #[test]
    fn inverse_and_compose() {
        let rs = RootSystem::build(TypeSpec::d(4).unwrap());
        let w = WeylElement::from_word(&rs, &[0, 1, 3, 2, 1]);
        assert!(w.compose(&w.inverse()).is_identity());
        assert_eq!(w.simple_mul(&rs, 2), WeylElement::simple(&rs, 2).compose(&w));
    }
}
