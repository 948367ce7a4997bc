//! Positive-monoid combinatorics: the lift `b: W → B⁺`, the `*` action
//! on closed sets, heads, and a rewrite-closure oracle for monoid
//! equality that never consults the representation.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::roots::RootSystem;
use crate::rootset::{ClosedSet, RootSet};
use crate::weyl::{longest_element, max_inversion_subset, WeylElement};
use crate::words::PositiveWord;

/// Default cap on the number of words the rewrite oracle may enumerate.
pub const DEFAULT_WORD_BUDGET: u128 = 2_000_000;

/// The lexicographically smallest reduced word of `w`, read in `B⁺`.
pub fn b_embed(rs: &RootSystem, w: &WeylElement) -> PositiveWord {
    PositiveWord(w.reduced_word(rs))
}

/// `s_k * A = {α_k} ∪ {β : β - α_k ∈ A if (α_k,β) = 1; β ∈ A if 0;
/// β, β + α_k ∈ A if -1}`.
pub fn star_act(rs: &RootSystem, k: usize, a: ClosedSet) -> ClosedSet {
    let mut out = RootSet::singleton(rs.simple(k));
    for beta in 0..rs.len() {
        let member = match rs.inner_simple(k, beta) {
            2 => continue,
            1 => rs.sub_simple(beta, k).is_some_and(|b| a.contains(b)),
            0 => a.contains(beta),
            _ => a.contains(beta) && rs.add_simple(beta, k).is_some_and(|b| a.contains(b)),
        };
        if member {
            out.insert(beta);
        }
    }
    ClosedSet::new_unchecked(out)
}

/// `x * A`; the rightmost letter acts first, so that `(xy) * A = x * (y * A)`.
pub fn star_act_word(rs: &RootSystem, x: &PositiveWord, a: ClosedSet) -> ClosedSet {
    x.letters().iter().rev().fold(a, |a, &k| star_act(rs, k, a))
}

/// The head `L(x)`: the longest `w` with `b(w)` a left divisor of `x`,
/// computed as `g(x * ∅)`.
pub fn head_l(rs: &RootSystem, x: &PositiveWord) -> WeylElement {
    max_inversion_subset(rs, &star_act_word(rs, x, ClosedSet::empty()))
}

/// `x ∈ B⁺ ∖ b(w₀)B⁺`.
pub fn positive_and_not_delta_divisible(rs: &RootSystem, x: &PositiveWord) -> bool {
    head_l(rs, x) != longest_element(rs)
}

/// All words obtained from `word` by one braid-relation substitution.
fn neighbours(rs: &RootSystem, word: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for p in 0..word.len() {
        if p + 1 < word.len() {
            let (i, j) = (word[p], word[p + 1]);
            if i != j && !rs.adjacent(i, j) {
                let mut w = word.to_vec();
                w.swap(p, p + 1);
                out.push(w);
            }
        }
        if p + 2 < word.len() {
            let (i, j, k) = (word[p], word[p + 1], word[p + 2]);
            if i == k && rs.adjacent(i, j) {
                let mut w = word.to_vec();
                w[p..p + 3].copy_from_slice(&[j, i, j]);
                out.push(w);
            }
        }
    }
    out
}

/// Every word equal to `word` in `B⁺`. Braid relations preserve length, so
/// this is a finite breadth-first search.
pub fn rewrite_class(rs: &RootSystem, word: &PositiveWord) -> Vec<PositiveWord> {
    let start = word.letters().to_vec();
    let mut seen: HashSet<Vec<usize>> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    let mut out = Vec::new();
    while let Some(w) = queue.pop_front() {
        for v in neighbours(rs, &w) {
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
        out.push(PositiveWord(w));
    }
    out.sort();
    out
}

/// `L(x)` without the `*` action: the longest Weyl element having a
/// reduced word that is a prefix of some word equal to `x`.
pub fn head_by_rewriting(rs: &RootSystem, x: &PositiveWord) -> WeylElement {
    let mut best = WeylElement::identity(rs);
    for word in rewrite_class(rs, x) {
        let mut w = WeylElement::identity(rs);
        for &k in word.letters() {
            if w.has_right_descent(k) {
                break;
            }
            w = w.mul_simple(rs, k);
        }
        if w.length() > best.length() {
            best = w;
        }
    }
    best
}

/// Positive words of length `≤ len`, grouped into classes of equal monoid
/// elements.
#[derive(Clone, Debug)]
pub struct WordPartition {
    words: Vec<PositiveWord>,
    class: Vec<usize>,
    classes: Vec<Vec<usize>>,
    index: HashMap<PositiveWord, usize>,
}

impl WordPartition {
    pub fn words(&self) -> &[PositiveWord] {
        &self.words
    }

    /// Classes as lists of word indices, each sorted, ordered by first member.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, word: &PositiveWord) -> Option<usize> {
        self.index.get(word).map(|&i| self.class[i])
    }

    pub fn equivalent(&self, x: &PositiveWord, y: &PositiveWord) -> Option<bool> {
        Some(self.class_of(x)? == self.class_of(y)?)
    }
}

fn find(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

/// Number of positive words of length `≤ len` over `rank` letters.
pub fn word_count(rank: usize, len: usize) -> u128 {
    (0..=len as u32).map(|l| (rank as u128).saturating_pow(l)).fold(0u128, u128::saturating_add)
}

/// Partitions all positive words of length `≤ len` by connecting words
/// that differ by a single braid-relation substitution.
pub fn word_equiv_oracle(rs: &RootSystem, len: usize, budget: u128) -> Result<WordPartition> {
    let n = rs.rank();
    let needed = word_count(n, len);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let mut words: Vec<PositiveWord> = vec![PositiveWord::empty()];
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..len {
        layer = layer.iter().flat_map(|w| (0..n).map(move |k| [w.as_slice(), &[k]].concat())).collect();
        words.extend(layer.iter().cloned().map(PositiveWord));
    }
    let index: HashMap<PositiveWord, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let mut parent: Vec<usize> = (0..words.len()).collect();
    for (i, w) in words.iter().enumerate() {
        for v in neighbours(rs, w.letters()) {
            let j = index[&PositiveWord(v)];
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut class = vec![0; words.len()];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut root_class: HashMap<usize, usize> = HashMap::new();
    for i in 0..words.len() {
        let root = find(&mut parent, i);
        let c = *root_class.entry(root).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        class[i] = c;
        classes[c].push(i);
    }
    Ok(WordPartition { words, class, classes, index })
}

/// Word budget from `LK_BUDGET`, falling back to `default`.
pub fn budget_from_env(default: u128) -> u128 {
    std::env::var("LK_BUDGET").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(default)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::TypeSpec;

    fn a2() -> RootSystem {
        RootSystem::build(TypeSpec::a(2).unwrap())
    }

    fn word(v: &[usize]) -> PositiveWord {
        PositiveWord(v.to_vec())
    }

    fn set(rs: &RootSystem, v: &[usize]) -> ClosedSet {
        ClosedSet::new(rs, v.iter().copied().collect()).unwrap()
    }

    #[test]
    fn star_examples() {
        let rs = a2();
        assert_eq!(star_act(&rs, 0, ClosedSet::empty()), set(&rs, &[0]));
        assert_eq!(star_act(&rs, 0, set(&rs, &[0])), set(&rs, &[0]));
        assert_eq!(star_act(&rs, 0, ClosedSet::all(&rs)), ClosedSet::all(&rs));
        assert_eq!(star_act_word(&rs, &word(&[0, 0]), ClosedSet::empty()), set(&rs, &[0]));
        assert_eq!(star_act_word(&rs, &word(&[0, 1]), ClosedSet::empty()), set(&rs, &[0, 2]));
        assert_eq!(star_act_word(&rs, &PositiveWord::empty(), set(&rs, &[1])), set(&rs, &[1]));
    }

    #[test]
    fn head_examples() {
        let rs = a2();
        assert!(head_l(&rs, &PositiveWord::empty()).is_identity());
        assert_eq!(head_l(&rs, &word(&[0, 1, 0])), longest_element(&rs));
        assert_eq!(head_l(&rs, &word(&[0, 0, 1])), WeylElement::simple(&rs, 0));
        assert!(positive_and_not_delta_divisible(&rs, &word(&[0])));
        assert!(!positive_and_not_delta_divisible(&rs, &word(&[0, 1, 0])));
        assert!(positive_and_not_delta_divisible(&rs, &word(&[0, 0])));
    }

    #[test]
    fn head_by_rewriting_examples() {
        let rs = a2();
        assert_eq!(head_by_rewriting(&rs, &word(&[0, 0, 1])), WeylElement::simple(&rs, 0));
        assert_eq!(head_by_rewriting(&rs, &word(&[1, 0, 1, 1])), longest_element(&rs));
    }

    #[test]
    fn b_embed_examples() {
        let rs = a2();
        assert_eq!(b_embed(&rs, &WeylElement::identity(&rs)), PositiveWord::empty());
        assert_eq!(b_embed(&rs, &WeylElement::simple(&rs, 0)), word(&[0]));
        assert_eq!(b_embed(&rs, &longest_element(&rs)), word(&[0, 1, 0]));
    }

    #[test]
    fn oracle_examples() {
        let rs = a2();
        let p = word_equiv_oracle(&rs, 3, 1000).unwrap();
        assert_eq!(p.equivalent(&word(&[0, 1, 0]), &word(&[1, 0, 1])), Some(true));
        assert_eq!(p.equivalent(&word(&[0, 1]), &word(&[1, 0])), Some(false));
        let a3 = RootSystem::build(TypeSpec::a(3).unwrap());
        let p = word_equiv_oracle(&a3, 2, 1000).unwrap();
        assert_eq!(p.equivalent(&word(&[0, 2]), &word(&[2, 0])), Some(true));
        assert!(matches!(word_equiv_oracle(&a3, 10, 1000), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn word_counts() {
        assert_eq!(word_count(2, 3), 15);
        assert_eq!(word_count(1, 4), 5);
    }
}
