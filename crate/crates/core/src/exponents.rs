//! Closed form for `T_{k,β}` through three integer exponents.
//!
//! With `N = r^{ht(β)+1}(r² - 1)`, every nonzero `T_{k,β}` other than
//! `T_{k,α_k} = r⁴` is `N`, `N(1 - r^{-a})` or `N(1 - r^{-c})(1 - r^{-d})`
//! according as `(α_k, β)` is `1`, `0` or `-1`. The exponents obey
//! recursions along `β ↦ β - α_l`, computed here height by height.

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::roots::RootSystem;
use crate::scalar::Ring;
use crate::ttable::{r4, TTable};

/// Exponents `a_{k,β}` (meaningful when `(α_k,β) = 0`) and the unordered
/// pair `{c_{k,β}, d_{k,β}}` (when `(α_k,β) = -1`), stored with `c ≤ d`.
/// All three are zero outside those cases and off the support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentTable {
    nroots: usize,
    a: Vec<u32>,
    cd: Vec<(u32, u32)>,
}

impl ExponentTable {
    pub fn a(&self, k: usize, beta: usize) -> u32 {
        self.a[k * self.nroots + beta]
    }

    pub fn c(&self, k: usize, beta: usize) -> u32 {
        self.cd[k * self.nroots + beta].0
    }

    pub fn d(&self, k: usize, beta: usize) -> u32 {
        self.cd[k * self.nroots + beta].1
    }

    fn cd_pair(&self, k: usize, beta: usize) -> (u32, u32) {
        self.cd[k * self.nroots + beta]
    }
}

fn unordered(x: u32, y: u32) -> (u32, u32) {
    (x.min(y), x.max(y))
}

/// Solves the exponent recursions and assembles the T-table from them.
pub fn solve_t_closed_form(rs: &RootSystem) -> Result<(TTable, ExponentTable)> {
    let exps = solve_exponents(rs)?;
    let n = rs.rank();
    let mut values = Vec::with_capacity(n * rs.len());
    for k in 0..n {
        for beta in 0..rs.len() {
            values.push(closed_form_value(rs, &exps, k, beta));
        }
    }
    Ok((TTable::from_values(n, rs.len(), values), exps))
}

fn closed_form_value(rs: &RootSystem, exps: &ExponentTable, k: usize, beta: usize) -> LaurentPoly {
    let root = rs.root(beta);
    if !root.in_support(k) {
        return LaurentPoly::zero();
    }
    if beta == rs.simple(k) {
        return r4();
    }
    let one = LaurentPoly::one();
    let factor = |e: u32| one.sub_ref(&LaurentPoly::r_pow(-(e as i32)));
    let norm = LaurentPoly::r_pow(root.height() + 1).mul_ref(&(LaurentPoly::r_pow(2) - LaurentPoly::one()));
    match rs.inner_simple(k, beta) {
        1 => norm,
        0 => norm.mul_ref(&factor(exps.a(k, beta))),
        _ => norm.mul_ref(&factor(exps.c(k, beta))).mul_ref(&factor(exps.d(k, beta))),
    }
}

fn solve_exponents(rs: &RootSystem) -> Result<ExponentTable> {
    let n = rs.rank();
    let len = rs.len();
    let mut ex = ExponentTable { nroots: len, a: vec![0; n * len], cd: vec![(0, 0); n * len] };
    let mut start = 0;
    while start < len {
        let ht = rs.height(start);
        let end = (start..len).find(|&b| rs.height(b) != ht).unwrap_or(len);
        // a-values first: the last c/d rule reads a at the same height.
        for beta in start..end {
            for k in 0..n {
                if rs.root(beta).in_support(k) && rs.inner_simple(k, beta) == 0 {
                    let v = exponent_a(rs, &ex, k, beta)?;
                    ex.a[k * len + beta] = v;
                }
            }
        }
        for beta in start..end {
            for k in 0..n {
                if rs.root(beta).in_support(k) && rs.inner_simple(k, beta) == -1 {
                    let v = exponents_cd(rs, &ex, k, beta)?;
                    ex.cd[k * len + beta] = v;
                }
            }
        }
        start = end;
    }
    Ok(ex)
}

fn exponent_a(rs: &RootSystem, ex: &ExponentTable, k: usize, beta: usize) -> Result<u32> {
    let n = rs.rank();
    let stuck = Error::RuleNotApplicable { k, root: beta };
    for l in (0..n).filter(|&l| l != k && rs.inner_simple(l, beta) == 1) {
        let Some(b1) = rs.sub_simple(beta, l) else { continue };
        if !rs.adjacent(k, l) {
            return Ok(ex.a(k, b1));
        }
        if let Some(b2) = rs.sub_simple(b1, k) {
            return Ok(ex.a(l, b2) + 2);
        }
    }
    Err(stuck)
}

fn exponents_cd(rs: &RootSystem, ex: &ExponentTable, k: usize, beta: usize) -> Result<(u32, u32)> {
    let n = rs.rank();
    let ones = || (0..n).filter(|&l| l != k && rs.inner_simple(l, beta) == 1);
    for l in ones().filter(|&l| !rs.adjacent(k, l)) {
        if let Some(b1) = rs.sub_simple(beta, l) {
            return Ok(ex.cd_pair(k, b1));
        }
    }
    // Adjacent l: r⁻²(1-r^{-c'})(1-r^{-d'}) + (1-r⁻²)(1-r^{-a'}) factors
    // whenever one of c', d' vanishes or equals a'.
    for l in ones().filter(|&l| rs.adjacent(k, l)) {
        let Some(b1) = rs.sub_simple(beta, l) else { continue };
        let (c1, d1) = ex.cd_pair(l, b1);
        let a1 = ex.a(k, b1);
        if c1 == 0 || d1 == 0 {
            return Ok(unordered(a1, 2));
        }
        if d1 == a1 {
            return Ok(unordered(a1, c1 + 2));
        }
        if c1 == a1 {
            return Ok(unordered(a1, d1 + 2));
        }
    }
    let zeros: Vec<usize> = (0..n).filter(|&l| rs.adjacent(k, l) && rs.inner_simple(l, beta) == 0).collect();
    if let [l, m, ..] = zeros[..] {
        return Ok(unordered(ex.a(l, beta), ex.a(m, beta)));
    }
    Err(Error::RuleNotApplicable { k, root: beta })
}
