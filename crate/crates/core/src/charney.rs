//! Charney length `l_Ω`: the fewest factors from `Ω ∪ Ω⁻¹`, `Ω = b(W)`,
//! whose product is a given group element.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::matrix::PolyMatrix;
use crate::rep::LkRep;
use crate::weyl::enumerate_weyl_group;
use crate::words::SignedWord;

/// Default cap on `|W|` for the search oracle.
pub const DEFAULT_WEYL_BUDGET: u128 = 1_000;

/// Lowest and highest power of `t` over all nonzero entries.
pub fn t_range(m: &PolyMatrix) -> (i32, i32) {
    let mut range: Option<(i32, i32)> = None;
    for (_, _, x) in m.entries() {
        if let Ok((lo, hi)) = x.t_degree_range() {
            range = Some(match range {
                Some((a, b)) => (a.min(lo), b.max(hi)),
                None => (lo, hi),
            });
        }
    }
    range.expect("an invertible matrix has a nonzero entry")
}

/// `max(h - k, h, -k)` for `ρ(x) = Σ_{i=k}^{h} A_i tⁱ`.
pub fn charney_length_matrix(rep: &LkRep, x: &SignedWord) -> i32 {
    formula(t_range(&rep.rho_word(x)))
}

fn formula((k, h): (i32, i32)) -> i32 {
    (h - k).max(h).max(-k)
}

/// Every product of at most `radius` factors from `Ω ∪ Ω⁻¹`, keyed by its
/// matrix and mapped to the fewest factors needed.
///
/// A query splits a factorization of length `≤ 2·radius` as `x = y z`
/// with both halves in the ball, so `l(x) = min_u level(u) + level(u x)`
/// over `u` in the ball.
#[derive(Clone, Debug)]
pub struct CharneyOracle {
    ball: HashMap<PolyMatrix, usize>,
    radius: usize,
}

impl CharneyOracle {
    pub fn new(rep: &LkRep, radius: usize, weyl_budget: u128) -> Result<Self> {
        let rs = rep.root_system();
        let elements = enumerate_weyl_group(rs, weyl_budget)?;
        let id = PolyMatrix::identity(rep.dim());
        let mut factors: Vec<PolyMatrix> = Vec::new();
        for w in elements.iter().filter(|w| !w.is_identity()) {
            let word = SignedWord(w.reduced_word(rs).into_iter().map(crate::words::Letter::pos).collect());
            factors.push(rep.rho_word(&word));
            factors.push(rep.rho_word(&word.inverse()));
        }
        let mut ball: HashMap<PolyMatrix, usize> = HashMap::from([(id.clone(), 0)]);
        let mut frontier = vec![id];
        for level in 1..=radius {
            let mut next = Vec::new();
            for m in &frontier {
                for f in &factors {
                    let p = m.mul_ref(f);
                    if !ball.contains_key(&p) {
                        ball.insert(p.clone(), level);
                        next.push(p);
                    }
                }
            }
            frontier = next;
        }
        Ok(CharneyOracle { ball, radius })
    }

    pub fn max_length(&self) -> usize {
        2 * self.radius
    }

    pub fn ball_size(&self) -> usize {
        self.ball.len()
    }

    /// `l_Ω` of the element with matrix `m`, if at most `max_length()`.
    pub fn length_of(&self, m: &PolyMatrix) -> Option<usize> {
        self.ball
            .iter()
            .filter_map(|(u, lu)| self.ball.get(&u.mul_ref(m)).map(|lv| lu + lv))
            .min()
    }
}

/// Search value of `l_Ω(x)`; `NotFound` above `maxlen`.
pub fn charney_length_bfs(rep: &LkRep, x: &SignedWord, maxlen: usize) -> Result<usize> {
    let oracle = CharneyOracle::new(rep, maxlen.div_ceil(2), DEFAULT_WEYL_BUDGET)?;
    match oracle.length_of(&rep.rho_word(x)) {
        Some(l) if l <= maxlen => Ok(l),
        _ => Err(Error::NotFound { maxlen }),
    }
}
