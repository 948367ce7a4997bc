//! Positive roots of the simply laced types A, D and E.
//!
//! Roots are integer vectors in the basis of simple roots; the pairing is
//! the Cartan form. Simple roots are numbered as in Bourbaki. Positive
//! roots are indexed by height, ties broken by coordinates in descending
//! lexicographic order, so the first `rank` indices are `α_1, …, α_n`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootset::RootSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    D,
    E,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "D" | "d" => Ok(Family::D),
            "E" | "e" => Ok(Family::E),
            other => Err(Error::InvalidType { family: other.to_string(), rank: 0 }),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => "A",
            Family::D => "D",
            Family::E => "E",
        };
        f.write_str(c)
    }
}

/// A validated Dynkin type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TypeSpec {
    family: Family,
    rank: usize,
}

impl TypeSpec {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
        };
        // Root sets are stored in a u128.
        if !ok || positive_root_count(family, rank) > RootSet::CAPACITY {
            return Err(Error::InvalidType { family: family.to_string(), rank });
        }
        Ok(TypeSpec { family, rank })
    }

    pub fn a(rank: usize) -> Result<Self> {
        Self::new(Family::A, rank)
    }

    pub fn d(rank: usize) -> Result<Self> {
        Self::new(Family::D, rank)
    }

    pub fn e(rank: usize) -> Result<Self> {
        Self::new(Family::E, rank)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of positive roots.
    pub fn positive_root_count(&self) -> usize {
        positive_root_count(self.family, self.rank)
    }

    /// Order of the Weyl group.
    pub fn weyl_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match (self.family, self.rank) {
            (Family::A, _) => fact(n + 1),
            (Family::D, _) => (1u128 << (n - 1)) * fact(n),
            (Family::E, 6) => 51_840,
            (Family::E, 7) => 2_903_040,
            (Family::E, _) => 696_729_600,
        }
    }

    /// Edges of the Coxeter diagram, 0-based.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank;
        match self.family {
            Family::A => (1..n).map(|i| (i - 1, i)).collect(),
            Family::D => {
                let mut e: Vec<_> = (1..n - 1).map(|i| (i - 1, i)).collect();
                e.push((n - 3, n - 1));
                e
            }
            Family::E => {
                // 1-3-4-5-6(-7-8) with 2 attached to 4.
                let mut e = vec![(0, 2), (1, 3), (2, 3)];
                e.extend((3..n - 1).map(|i| (i, i + 1)));
                e
            }
        }
    }

    pub fn cartan(&self) -> Vec<Vec<i32>> {
        let n = self.rank;
        let mut c = vec![vec![0; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (i, j) in self.edges() {
            c[i][j] = -1;
            c[j][i] = -1;
        }
        c
    }
}

impl fmt::Display for TypeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

fn positive_root_count(family: Family, n: usize) -> usize {
    match (family, n) {
        (Family::A, _) => n * (n + 1) / 2,
        (Family::D, _) => n * n.saturating_sub(1),
        (Family::E, 6) => 36,
        (Family::E, 7) => 63,
        (Family::E, 8) => 120,
        _ => 0,
    }
}

/// A positive root in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Root(Vec<i32>);

impl Root {
    pub fn coords(&self) -> &[i32] {
        &self.0
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn in_support(&self, k: usize) -> bool {
        self.0[k] != 0
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&k| self.0[k] != 0).collect()
    }
}

/// A root of `Φ = Φ⁺ ∪ -Φ⁺` given as a positive-root index and a sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedRoot {
    pub index: usize,
    pub negative: bool,
}

impl SignedRoot {
    pub fn positive(index: usize) -> Self {
        SignedRoot { index, negative: false }
    }

    pub fn negate(self) -> Self {
        SignedRoot { index: self.index, negative: !self.negative }
    }
}

/// The positive roots of a fixed type together with precomputed pairing,
/// root-sum and reflection tables.
#[derive(Clone, Debug)]
pub struct RootSystem {
    spec: TypeSpec,
    roots: Vec<Root>,
    cartan: Vec<Vec<i32>>,
    inner: Vec<i8>,
    sums: Vec<Option<u8>>,
    reflections: Vec<Vec<SignedRoot>>,
    lookup: HashMap<Vec<i32>, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootSystemExport {
    #[serde(rename = "type")]
    pub family: Family,
    pub rank: usize,
    pub roots: Vec<Root>,
    pub cartan: Vec<Vec<i32>>,
}

impl RootSystem {
    pub fn build(spec: TypeSpec) -> Self {
        let n = spec.rank();
        let cartan = spec.cartan();
        let pair = |a: &[i32], b: &[i32]| -> i32 {
            let mut s = 0;
            for i in 0..n {
                if a[i] == 0 {
                    continue;
                }
                for j in 0..n {
                    s += a[i] * cartan[i][j] * b[j];
                }
            }
            s
        };

        // Closure of the simple roots under simple reflections, keeping
        // positive images only.
        let mut found: Vec<Vec<i32>> = (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v
            })
            .collect();
        let mut seen: std::collections::HashSet<Vec<i32>> = found.iter().cloned().collect();
        let mut next = 0;
        while next < found.len() {
            let beta = found[next].clone();
            next += 1;
            for i in 0..n {
                let mut alpha = vec![0; n];
                alpha[i] = 1;
                let c = pair(&alpha, &beta);
                let mut image = beta.clone();
                image[i] -= c;
                if image.iter().all(|&x| x >= 0) && image.iter().any(|&x| x > 0) && seen.insert(image.clone()) {
                    found.push(image);
                }
            }
        }
        found.sort_by(|a, b| {
            let (ha, hb): (i32, i32) = (a.iter().sum(), b.iter().sum());
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        assert_eq!(found.len(), spec.positive_root_count(), "positive root count for {spec}");

        let lookup: HashMap<Vec<i32>, usize> = found.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        let count = found.len();
        let mut inner = vec![0i8; count * count];
        let mut sums = vec![None; count * count];
        for a in 0..count {
            for b in 0..count {
                inner[a * count + b] = pair(&found[a], &found[b]) as i8;
                let s: Vec<i32> = found[a].iter().zip(&found[b]).map(|(x, y)| x + y).collect();
                sums[a * count + b] = lookup.get(&s).map(|&i| i as u8);
            }
        }
        let reflections = (0..n)
            .map(|i| {
                (0..count)
                    .map(|b| {
                        if b == i {
                            return SignedRoot { index: i, negative: true };
                        }
                        let c = inner[i * count + b] as i32;
                        let mut image = found[b].clone();
                        image[i] -= c;
                        SignedRoot::positive(lookup[&image])
                    })
                    .collect()
            })
            .collect();

        RootSystem { spec, roots: found.into_iter().map(Root).collect(), cartan, inner, sums, reflections, lookup }
    }

    pub fn spec(&self) -> TypeSpec {
        self.spec
    }

    pub fn rank(&self) -> usize {
        self.spec.rank()
    }

    /// Number of positive roots, the dimension of the representation.
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, index: usize) -> &Root {
        &self.roots[index]
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    /// The JSON export; `roots` is in matrix index order.
    pub fn export(&self) -> RootSystemExport {
        RootSystemExport {
            family: self.spec.family(),
            rank: self.rank(),
            roots: self.roots.clone(),
            cartan: self.cartan.clone(),
        }
    }

    pub fn index_of(&self, coords: &[i32]) -> Option<usize> {
        self.lookup.get(coords).copied()
    }

    /// Index of the simple root `α_k`.
    pub fn simple(&self, k: usize) -> usize {
        debug_assert!(k < self.rank());
        k
    }

    pub fn is_simple(&self, beta: usize) -> bool {
        beta < self.rank()
    }

    pub fn height(&self, beta: usize) -> i32 {
        self.roots[beta].height()
    }

    /// `(β, γ)` for root indices.
    pub fn inner(&self, beta: usize, gamma: usize) -> i32 {
        self.inner[beta * self.len() + gamma] as i32
    }

    /// `(α_k, β)`.
    pub fn inner_simple(&self, k: usize, beta: usize) -> i32 {
        self.inner(k, beta)
    }

    /// Pairing of two coordinate vectors, which must both be roots.
    pub fn inner_of(&self, beta: &[i32], gamma: &[i32]) -> Result<i32> {
        let b = self.index_of(beta).ok_or_else(|| Error::UnknownRoot(beta.to_vec()))?;
        let g = self.index_of(gamma).ok_or_else(|| Error::UnknownRoot(gamma.to_vec()))?;
        Ok(self.inner(b, g))
    }

    pub fn adjacent(&self, k: usize, l: usize) -> bool {
        self.cartan[k][l] == -1
    }

    /// Index of `β + γ` when it is a positive root.
    pub fn sum(&self, beta: usize, gamma: usize) -> Option<usize> {
        self.sums[beta * self.len() + gamma].map(usize::from)
    }

    /// Index of `β + α_k` when it is a positive root.
    pub fn add_simple(&self, beta: usize, k: usize) -> Option<usize> {
        self.sum(beta, k)
    }

    /// Index of `β - α_k` when it is a positive root.
    pub fn sub_simple(&self, beta: usize, k: usize) -> Option<usize> {
        let mut c = self.roots[beta].0.clone();
        c[k] -= 1;
        self.index_of(&c)
    }

    /// `r_k(β) = β - (α_k, β) α_k`.
    pub fn reflect(&self, k: usize, beta: usize) -> SignedRoot {
        self.reflections[k][beta]
    }

    pub fn reflect_signed(&self, k: usize, beta: SignedRoot) -> SignedRoot {
        let img = self.reflect(k, beta.index);
        if beta.negative {
            img.negate()
        } else {
            img
        }
    }

    /// `γ ≤ β` in the root order: `β - γ` has nonnegative coordinates.
    pub fn root_leq(&self, gamma: usize, beta: usize) -> bool {
        self.roots[gamma].0.iter().zip(&self.roots[beta].0).all(|(g, b)| g <= b)
    }

    /// Simple indices `k` with `(α_k, β) = 1`.
    pub fn descents_at_one(&self, beta: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.rank()).filter(move |&k| self.inner_simple(k, beta) == 1)
    }

    /// Whether `set` is closed under root addition; on failure returns a
    /// witness pair whose sum is missing.
    pub fn closure_witness(&self, set: RootSet) -> Option<(usize, usize)> {
        for b in set.iter() {
            for g in set.iter() {
                if g < b {
                    continue;
                }
                if let Some(s) = self.sum(b, g) {
                    if !set.contains(s) {
                        return Some((b, g));
                    }
                }
            }
        }
        None
    }

    pub fn is_closed(&self, set: RootSet) -> bool {
        self.closure_witness(set).is_none()
    }

    pub fn all_roots(&self) -> RootSet {
        RootSet::full(self.len())
    }

    /// Number of positive roots not orthogonal to root `beta`, itself included.
    pub fn non_orthogonal_count(&self, beta: usize) -> usize {
        (0..self.len()).filter(|&g| self.inner(beta, g) != 0).count()
    }
}
