//! The coefficients `T_{k,β}` of the rank-one part of `σ_k`.
//!
//! [`solve_t`] runs the height recursion: every `T_{k,β}` with `ht(β) > 2`
//! is written as a `Z[r^±1]`-combination of values at lower heights using
//! one of four linear relations, selected by the inner products of `β`
//! with the simple roots. When several simple roots qualify, a
//! [`TieBreak`] policy picks one; the solution is unique, so the policy
//! must not change the result.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::roots::RootSystem;
use crate::scalar::Ring;

/// Table of `T_{k,β}` for every simple index `k` and positive root `β`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TTable {
    rank: usize,
    nroots: usize,
    values: Vec<LaurentPoly>,
}

impl TTable {
    fn zeros(rank: usize, nroots: usize) -> Self {
        TTable { rank, nroots, values: vec![LaurentPoly::zero(); rank * nroots] }
    }

    pub(crate) fn from_values(rank: usize, nroots: usize, values: Vec<LaurentPoly>) -> Self {
        assert_eq!(values.len(), rank * nroots);
        TTable { rank, nroots, values }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn root_count(&self) -> usize {
        self.nroots
    }

    pub fn get(&self, k: usize, beta: usize) -> &LaurentPoly {
        &self.values[k * self.nroots + beta]
    }

    fn set(&mut self, k: usize, beta: usize, value: LaurentPoly) {
        self.values[k * self.nroots + beta] = value;
    }

    /// Rows of the JSON export, `k` 1-based.
    pub fn export(&self, rs: &RootSystem) -> Vec<TTableEntry> {
        let mut out = Vec::with_capacity(self.values.len());
        for k in 0..self.rank {
            for b in 0..self.nroots {
                out.push(TTableEntry { k: k + 1, root: rs.root(b).coords().to_vec(), poly: self.get(k, b).clone() });
            }
        }
        out
    }
}

/// One row of the `ttable` JSON export.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TTableEntry {
    pub k: usize,
    pub root: Vec<i32>,
    pub poly: LaurentPoly,
}

/// Which simple root to recurse along when several qualify.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TieBreak {
    #[default]
    Smallest,
    Largest,
}

impl TieBreak {
    fn pick<I: DoubleEndedIterator<Item = usize>>(self, candidates: I) -> Option<usize> {
        let mut it = candidates;
        match self {
            TieBreak::Smallest => it.next(),
            TieBreak::Largest => it.next_back(),
        }
    }
}

fn r() -> LaurentPoly {
    LaurentPoly::r()
}

/// `r - r⁻¹`
fn r_minus_rinv() -> LaurentPoly {
    LaurentPoly::term(1, 1, 0) - LaurentPoly::term(1, -1, 0)
}

pub(crate) fn r4() -> LaurentPoly {
    LaurentPoly::r_pow(4)
}

/// `r⁵ - r³`
pub(crate) fn r5_minus_r3() -> LaurentPoly {
    LaurentPoly::term(1, 5, 0) - LaurentPoly::term(1, 3, 0)
}

/// Solves for the T-table with the smallest-index tie break.
pub fn solve_t(rs: &RootSystem) -> Result<TTable> {
    solve_t_with(rs, TieBreak::Smallest)
}

pub fn solve_t_with(rs: &RootSystem, tie: TieBreak) -> Result<TTable> {
    let n = rs.rank();
    let mut table = TTable::zeros(n, rs.len());
    // Root indices are sorted by height, so every recursive reference has
    // already been filled in.
    for beta in 0..rs.len() {
        let root = rs.root(beta);
        let ht = root.height();
        for k in 0..n {
            if !root.in_support(k) {
                continue;
            }
            let value = if beta == rs.simple(k) {
                r4()
            } else if ht == 2 {
                r5_minus_r3()
            } else {
                recurse(rs, &table, tie, k, beta)?
            };
            table.set(k, beta, value);
        }
    }
    Ok(table)
}

fn recurse(rs: &RootSystem, table: &TTable, tie: TieBreak, k: usize, beta: usize) -> Result<LaurentPoly> {
    let n = rs.rank();
    let inconsistent = || Error::InconsistentSystem { k, root: beta };
    let lower = |b: Option<usize>| b.ok_or_else(inconsistent);

    // T_{k,β} = r T_{k,β-α_l} for l not adjacent to k with (α_l, β) = 1.
    let far = (0..n).filter(|&l| l != k && !rs.adjacent(k, l) && rs.inner_simple(l, beta) == 1);
    if let Some(l) = tie.pick(far.collect::<Vec<_>>().into_iter()) {
        let b1 = lower(rs.sub_simple(beta, l))?;
        return Ok(r().mul_ref(table.get(k, b1)));
    }

    let near = (0..n).filter(|&l| rs.adjacent(k, l) && rs.inner_simple(l, beta) == 1);
    if let Some(l) = tie.pick(near.collect::<Vec<_>>().into_iter()) {
        let b1 = lower(rs.sub_simple(beta, l))?;
        return match rs.inner_simple(k, beta) {
            // T_{l,β-α_k-α_l} + (r - r⁻¹) T_{k,β-α_l}
            0 => {
                let b2 = lower(rs.sub_simple(b1, k))?;
                Ok(table.get(l, b2).add_ref(&r_minus_rinv().mul_ref(table.get(k, b1))))
            }
            // r⁻¹ T_{l,β-α_l} + (r - r⁻¹) T_{k,β-α_l}
            -1 => Ok(LaurentPoly::r_pow(-1).mul_ref(table.get(l, b1)).add_ref(&r_minus_rinv().mul_ref(table.get(k, b1)))),
            _ => Err(inconsistent()),
        };
    }

    // Only α_k pairs to 1 with β: T_{k,β} = r T_{l,β-α_k} for a neighbour
    // l of k with (α_l, β) = 0.
    if rs.inner_simple(k, beta) == 1 {
        let flat = (0..n).filter(|&l| rs.adjacent(k, l) && rs.inner_simple(l, beta) == 0);
        if let Some(l) = tie.pick(flat.collect::<Vec<_>>().into_iter()) {
            let b1 = lower(rs.sub_simple(beta, k))?;
            return Ok(r().mul_ref(table.get(l, b1)));
        }
    }
    Err(inconsistent())
}

/// Which defining relation a violation refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TableRule {
    /// `T_{k,α_l} = 0` for `k ≠ l`.
    OffDiagonalSimple,
    /// `T_{k,α_k} = r⁴`.
    Diagonal,
    /// `T_{k,α_k+α_l} = r⁵ - r³`.
    HeightTwo,
    /// `T_{k,β} = r T_{k,β-α_l}`, `(α_l,β) = 1`, `(α_k,α_l) = 0`.
    Commuting,
    /// `T_{k,β} = T_{l,β-α_k-α_l} + (r-r⁻¹) T_{k,β-α_l}`, `(α_k,β) = 0`, `(α_l,β) = 1`, `k ∼ l`.
    ZeroOne,
    /// `T_{k,β} = r⁻¹ T_{l,β-α_l} + (r-r⁻¹) T_{k,β-α_l}`, `(α_k,β) = -1`, `(α_l,β) = 1`, `k ∼ l`.
    MinusOneOne,
    /// `T_{k,β} = r T_{l,β-α_k}`, `(α_k,β) = 1`, `(α_l,β) = 0`, `k ∼ l`.
    OneZero,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableViolation {
    pub rule: TableRule,
    pub k: usize,
    pub l: usize,
    pub root: usize,
}

/// Substitutes `table` into every defining relation whose side conditions
/// hold and reports each one that fails.
pub fn table_violations(rs: &RootSystem, table: &TTable) -> Vec<TableViolation> {
    let n = rs.rank();
    let mut out = Vec::new();
    let t = |k: usize, b: usize| table.get(k, b);
    for beta in 0..rs.len() {
        for k in 0..n {
            for l in 0..n {
                let mut check = |rule: TableRule, ok: bool| {
                    if !ok {
                        out.push(TableViolation { rule, k, l, root: beta });
                    }
                };
                let ip_k = rs.inner_simple(k, beta);
                let ip_l = rs.inner_simple(l, beta);
                if k != l && beta == rs.simple(l) {
                    check(TableRule::OffDiagonalSimple, t(k, beta).is_zero());
                }
                if k == l && beta == rs.simple(k) {
                    check(TableRule::Diagonal, *t(k, beta) == r4());
                }
                if rs.adjacent(k, l) && rs.sum(rs.simple(k), rs.simple(l)) == Some(beta) {
                    check(TableRule::HeightTwo, *t(k, beta) == r5_minus_r3());
                }
                if k != l && !rs.adjacent(k, l) && ip_l == 1 {
                    let ok = rs.sub_simple(beta, l).is_some_and(|b1| *t(k, beta) == r().mul_ref(t(k, b1)));
                    check(TableRule::Commuting, ok);
                }
                if rs.adjacent(k, l) && ip_k == 0 && ip_l == 1 {
                    let ok = rs.sub_simple(beta, l).and_then(|b1| rs.sub_simple(b1, k).map(|b2| (b1, b2))).is_some_and(
                        |(b1, b2)| *t(k, beta) == t(l, b2).add_ref(&r_minus_rinv().mul_ref(t(k, b1))),
                    );
                    check(TableRule::ZeroOne, ok);
                }
                if rs.adjacent(k, l) && ip_k == -1 && ip_l == 1 {
                    let ok = rs.sub_simple(beta, l).is_some_and(|b1| {
                        *t(k, beta)
                            == LaurentPoly::r_pow(-1).mul_ref(t(l, b1)).add_ref(&r_minus_rinv().mul_ref(t(k, b1)))
                    });
                    check(TableRule::MinusOneOne, ok);
                }
                if rs.adjacent(k, l) && ip_k == 1 && ip_l == 0 {
                    let ok = rs.sub_simple(beta, k).is_some_and(|b1| *t(k, beta) == r().mul_ref(t(l, b1)));
                    check(TableRule::OneZero, ok);
                }
            }
        }
    }
    out
}

/// Structural properties every solution satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum StructureRule {
    /// `(α_k,β) = (α_l,β) = 0`, `k ∼ l` ⇒ `T_{k,β} = T_{l,β}`.
    EqualOnOrthogonal,
    /// `(α_k,β) = 1` ⇒ `T_{k,β} = r^{ht(β)+1}(r² - 1)`.
    InnerOneFormula,
    /// `k ∈ Supp(β)` ⇒ `deg_r T_{k,β} = 3 + ht(β)`.
    Degree,
    /// `β ≠ α_k` ⇒ `(r² - 1) | T_{k,β}`.
    Divisibility,
    /// `k ∉ Supp(β)` ⇒ `T_{k,β} = 0`.
    SupportVanishing,
    /// No powers of `t`, no negative powers of `r`.
    PolynomialInR,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureViolation {
    pub rule: StructureRule,
    pub k: usize,
    pub root: usize,
}

pub fn structure_violations(rs: &RootSystem, table: &TTable) -> Vec<StructureViolation> {
    let n = rs.rank();
    let r2m1 = LaurentPoly::r_pow(2) - LaurentPoly::one();
    let mut out = Vec::new();
    for beta in 0..rs.len() {
        let root = rs.root(beta);
        let ht = root.height();
        for k in 0..n {
            let tk = table.get(k, beta);
            let mut check = |rule: StructureRule, ok: bool| {
                if !ok {
                    out.push(StructureViolation { rule, k, root: beta });
                }
            };
            let ip = rs.inner_simple(k, beta);
            for l in 0..n {
                if rs.adjacent(k, l) && ip == 0 && rs.inner_simple(l, beta) == 0 {
                    check(StructureRule::EqualOnOrthogonal, tk == table.get(l, beta));
                }
            }
            if ip == 1 {
                check(StructureRule::InnerOneFormula, *tk == LaurentPoly::r_pow(ht + 1).mul_ref(&r2m1));
            }
            if root.in_support(k) {
                check(StructureRule::Degree, tk.r_degree_range().map(|(_, hi)| hi) == Some(3 + ht));
            } else {
                check(StructureRule::SupportVanishing, tk.is_zero());
            }
            if beta != rs.simple(k) {
                check(StructureRule::Divisibility, tk.exact_div(&r2m1).is_some());
            }
            check(StructureRule::PolynomialInR, tk.terms().iter().all(|(e, _)| e.t == 0 && e.r >= 0));
        }
    }
    out
}
