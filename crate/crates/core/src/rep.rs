//! The matrices `τ_k`, `σ_k = τ_k + t T_k` and products `ρ(x)`.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::matrix::PolyMatrix;
use crate::roots::{Family, RootSystem, TypeSpec};
use crate::scalar::Ring;
use crate::ttable::{solve_t, TTable};
use crate::weyl::{longest_element, negative_longest_permutation};
use crate::words::{Letter, PositiveWord, SignedWord};

/// The `t`-free part: column `β` of `τ_k` is `0`, `r x_{β-α_k}`, `x_β` or
/// `(1-r²) x_β + r x_{β+α_k}` for `(α_k, β) = 2, 1, 0, -1`.
pub fn tau(rs: &RootSystem, k: usize) -> PolyMatrix {
    let mut m = PolyMatrix::zeros(rs.len());
    for beta in 0..rs.len() {
        match rs.inner_simple(k, beta) {
            2 => {}
            1 => {
                let lower = rs.sub_simple(beta, k).expect("β - α_k is a root when (α_k, β) = 1");
                m.set(lower, beta, LaurentPoly::r());
            }
            0 => m.set(beta, beta, LaurentPoly::one()),
            _ => {
                let upper = rs.add_simple(beta, k).expect("β + α_k is a root when (α_k, β) = -1");
                m.set(beta, beta, LaurentPoly::one() - LaurentPoly::r_pow(2));
                m.set(upper, beta, LaurentPoly::r());
            }
        }
    }
    m
}

/// `σ_k`: `τ_k` plus `t T_{k,β}` in row `α_k` of every column `β`.
pub fn sigma(rs: &RootSystem, table: &TTable, k: usize) -> PolyMatrix {
    let mut m = tau(rs, k);
    let row = rs.simple(k);
    let t = LaurentPoly::t();
    for beta in 0..rs.len() {
        let entry = table.get(k, beta);
        if !entry.is_zero() {
            let updated = m.get(row, beta).add_ref(&t.mul_ref(entry));
            m.set(row, beta, updated);
        }
    }
    m
}

/// `Q = σ² + (r² - 1)σ - r² I`, whose image is spanned by `x_{α_k}`.
pub fn quadratic_defect(sigma: &PolyMatrix) -> PolyMatrix {
    let n = sigma.size();
    let r2 = LaurentPoly::r_pow(2);
    let shifted = &sigma.mul_ref(sigma) + &sigma.scale(&(r2.clone() - LaurentPoly::one()));
    &shifted - &PolyMatrix::identity(n).scale(&r2)
}

/// Columns of `Q` with a nonzero entry outside row `α_k`.
pub fn rank_one_violations(rs: &RootSystem, table: &TTable, k: usize) -> Vec<usize> {
    let q = quadratic_defect(&sigma(rs, table, k));
    let row = rs.simple(k);
    (0..rs.len()).filter(|&col| (0..rs.len()).any(|g| g != row && !q.get(g, col).is_zero())).collect()
}

/// `σ_k⁻¹ = r⁻²(σ_k + (r² - 1) I - (t r⁴)⁻¹ Q)`.
pub fn sigma_inverse(rs: &RootSystem, table: &TTable, k: usize) -> PolyMatrix {
    let s = sigma(rs, table, k);
    let n = s.size();
    let q = quadratic_defect(&s);
    let r2 = LaurentPoly::r_pow(2);
    let sum = &s + &PolyMatrix::identity(n).scale(&(r2 - LaurentPoly::one()));
    let m = &sum - &q.scale(&LaurentPoly::term(1, -4, -1));
    m.scale(&LaurentPoly::r_pow(-2))
}

/// `det σ_k` by fraction-free elimination.
pub fn determinant_sigma(rs: &RootSystem, table: &TTable, k: usize) -> LaurentPoly {
    sigma(rs, table, k).determinant()
}

/// `(-1)^c t r^{4+2c}` with `c = #{β : (α_k, β) = -1}`.
pub fn expected_determinant(rs: &RootSystem, k: usize) -> LaurentPoly {
    let c = (0..rs.len()).filter(|&b| rs.inner_simple(k, b) == -1).count() as i32;
    LaurentPoly::term(if c % 2 == 0 { 1 } else { -1 }, 4 + 2 * c, 1)
}

/// The exponent `e + 3` of `ρ(b(w₀)) = t r^{e+3} π`, from the type alone.
pub fn longest_exponent(spec: TypeSpec) -> i32 {
    let n = spec.rank() as i32;
    match (spec.family(), n) {
        (Family::A, _) => 2 * (n + 1),
        (Family::D, _) => 4 * (n - 1),
        (Family::E, 6) => 24,
        (Family::E, 7) => 36,
        _ => 60,
    }
}

/// Nonzero entries of each column, for cheap right multiplication.
type SparseColumns = Vec<Vec<(usize, LaurentPoly)>>;

fn sparse_columns(m: &PolyMatrix) -> SparseColumns {
    (0..m.size())
        .map(|c| m.column(c).enumerate().filter(|(_, x)| !x.is_zero()).map(|(r, x)| (r, x.clone())).collect())
        .collect()
}

/// `m · s` where `s` has few nonzero entries per column.
fn mul_sparse(m: &PolyMatrix, s: &SparseColumns) -> PolyMatrix {
    let n = m.size();
    let mut out = PolyMatrix::zeros(n);
    for (col, entries) in s.iter().enumerate() {
        for (k, c) in entries {
            for row in 0..n {
                let a = m.get(row, *k);
                if !a.is_zero() {
                    out.get_mut(row, col).add_assign_mul(a, c);
                }
            }
        }
    }
    out
}

/// The representation of one root system: cached `σ_k`, `σ_k⁻¹` and the
/// T-table they are built from.
#[derive(Clone, Debug)]
pub struct LkRep {
    rs: RootSystem,
    table: TTable,
    sigma: Vec<PolyMatrix>,
    sigma_inv: Vec<PolyMatrix>,
    sparse: Vec<SparseColumns>,
    sparse_inv: Vec<SparseColumns>,
}

impl LkRep {
    pub fn new(rs: &RootSystem) -> Result<Self> {
        let table = solve_t(rs)?;
        Ok(Self::with_table(rs, table))
    }

    pub fn with_table(rs: &RootSystem, table: TTable) -> Self {
        let n = rs.rank();
        let sigma: Vec<_> = (0..n).into_par_iter().map(|k| sigma(rs, &table, k)).collect();
        let sigma_inv: Vec<_> = (0..n).into_par_iter().map(|k| sigma_inverse(rs, &table, k)).collect();
        let sparse = sigma.iter().map(sparse_columns).collect();
        let sparse_inv = sigma_inv.iter().map(sparse_columns).collect();
        LkRep { rs: rs.clone(), table, sigma, sigma_inv, sparse, sparse_inv }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn table(&self) -> &TTable {
        &self.table
    }

    pub fn dim(&self) -> usize {
        self.rs.len()
    }

    pub fn sigma(&self, k: usize) -> &PolyMatrix {
        &self.sigma[k]
    }

    pub fn sigma_inverse(&self, k: usize) -> &PolyMatrix {
        &self.sigma_inv[k]
    }

    /// `m · ρ(letter)`.
    pub fn mul_letter(&self, m: &PolyMatrix, letter: Letter) -> PolyMatrix {
        let s = if letter.inverse { &self.sparse_inv[letter.gen] } else { &self.sparse[letter.gen] };
        mul_sparse(m, s)
    }

    /// `ρ(s_{i1}^{±1} s_{i2}^{±1} ⋯)`, the identity for the empty word.
    pub fn rho_word(&self, word: &SignedWord) -> PolyMatrix {
        self.rho_letters(word.letters().iter().copied())
    }

    pub fn rho_positive(&self, word: &PositiveWord) -> PolyMatrix {
        self.rho_letters(word.letters().iter().map(|&g| Letter::pos(g)))
    }

    fn rho_letters<I: IntoIterator<Item = Letter>>(&self, letters: I) -> PolyMatrix {
        letters.into_iter().fold(PolyMatrix::identity(self.dim()), |m, l| self.mul_letter(&m, l))
    }

    /// Factors `ρ(b(w₀))` as `scalar × π`, returning the scalar and the
    /// permutation `β ↦ π(β)` of its columns.
    pub fn rho_longest(&self) -> Result<(LaurentPoly, Vec<usize>)> {
        let word = PositiveWord(longest_element(&self.rs).reduced_word(&self.rs));
        monomial_factorization(&self.rho_positive(&word))
    }
}

/// Writes `m` as a scalar times a permutation matrix.
pub fn monomial_factorization(m: &PolyMatrix) -> Result<(LaurentPoly, Vec<usize>)> {
    let n = m.size();
    let mut scalar: Option<LaurentPoly> = None;
    let mut perm = Vec::with_capacity(n);
    let mut hit = vec![false; n];
    for col in 0..n {
        let nonzero: Vec<usize> = (0..n).filter(|&r| !m.get(r, col).is_zero()).collect();
        let [row] = nonzero[..] else { return Err(Error::NotMonomialMatrix { column: col }) };
        let entry = m.get(row, col);
        match &scalar {
            Some(s) if s != entry => return Err(Error::NotMonomialMatrix { column: col }),
            Some(_) => {}
            None => scalar = Some(entry.clone()),
        }
        if std::mem::replace(&mut hit[row], true) {
            return Err(Error::NotMonomialMatrix { column: col });
        }
        perm.push(row);
    }
    Ok((scalar.unwrap_or_else(LaurentPoly::one), perm))
}

/// `β ↦ -w₀(β)`, the permutation `ρ(b(w₀))` must realise.
pub fn expected_longest_permutation(rs: &RootSystem) -> Vec<usize> {
    negative_longest_permutation(rs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BraidFamily {
    Sigma,
    Tau,
}

/// A failing braid relation, with the first column where the two sides differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BraidFailure {
    pub family: BraidFamily,
    pub i: usize,
    pub j: usize,
    pub column: usize,
}

/// Checks `s_i s_j = s_j s_i` (non-adjacent) and `s_i s_j s_i = s_j s_i s_j`
/// (adjacent) for all pairs `i < j`, both for the `σ` and the `τ` matrices.
/// An empty result means every relation holds.
pub fn verify_braid_relations(rs: &RootSystem, table: &TTable) -> Vec<BraidFailure> {
    let n = rs.rank();
    let mats = |fam: BraidFamily| -> Vec<SparseColumns> {
        (0..n)
            .map(|k| match fam {
                BraidFamily::Sigma => sparse_columns(&sigma(rs, table, k)),
                BraidFamily::Tau => sparse_columns(&tau(rs, k)),
            })
            .collect()
    };
    let sig = mats(BraidFamily::Sigma);
    let ta = mats(BraidFamily::Tau);
    let jobs: Vec<(BraidFamily, usize, usize)> = [BraidFamily::Sigma, BraidFamily::Tau]
        .into_iter()
        .flat_map(|f| (0..n).flat_map(move |i| (i + 1..n).map(move |j| (f, i, j))))
        .collect();
    let mut failures: Vec<BraidFailure> = jobs
        .into_par_iter()
        .filter_map(|(family, i, j)| {
            let set = if family == BraidFamily::Sigma { &sig } else { &ta };
            let word = |a: usize, b: usize| {
                let mut seq = vec![a, b];
                if rs.adjacent(i, j) {
                    seq.push(a);
                }
                seq.iter().fold(PolyMatrix::identity(rs.len()), |m, &g| mul_sparse(&m, &set[g]))
            };
            let (lhs, rhs) = (word(i, j), word(j, i));
            (0..rs.len())
                .find(|&c| lhs.column(c).ne(rhs.column(c)))
                .map(|column| BraidFailure { family, i, j, column })
        })
        .collect();
    failures.sort_by_key(|f| (f.family as u8, f.i, f.j));
    failures
}

/// JSON export of one generator matrix, `generator` 1-based.
#[derive(Clone, Debug, Serialize)]
pub struct GeneratorExport {
    pub generator: usize,
    pub size: usize,
    pub entries: Vec<Vec<LaurentPoly>>,
}

impl GeneratorExport {
    pub fn new(k: usize, m: &PolyMatrix) -> Self {
        GeneratorExport { generator: k + 1, size: m.size(), entries: m.rows().map(|r| r.to_vec()).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(spec: TypeSpec) -> (RootSystem, TTable) {
        let rs = RootSystem::build(spec);
        let t = solve_t(&rs).unwrap();
        (rs, t)
    }

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn a2_sigma_one() {
        let (rs, t) = setup(TypeSpec::a(2).unwrap());
        let s = sigma(&rs, &t, 0);
        let expected = PolyMatrix::from_rows(vec![
            vec![p("t*r^4"), p("0"), p("-t*r^3 + t*r^5")],
            vec![p("0"), p("1 - r^2"), p("r")],
            vec![p("0"), p("r"), p("0")],
        ])
        .unwrap();
        assert_eq!(s, expected);
        assert_eq!(tau(&rs, 0), s.map(|x| LaurentPoly::from_terms(x.terms().iter().filter(|(e, _)| e.t == 0).cloned())));
    }

    #[test]
    fn inverse_both_sides() {
        let (rs, t) = setup(TypeSpec::d(4).unwrap());
        let id = PolyMatrix::identity(rs.len());
        for k in 0..4 {
            let s = sigma(&rs, &t, k);
            let si = sigma_inverse(&rs, &t, k);
            assert_eq!(&s * &si, id);
            assert_eq!(&si * &s, id);
            assert_eq!(*si.get(k, k), p("t^-1*r^-4"));
        }
    }

    #[test]
    fn a1_is_scalar() {
        let (rs, t) = setup(TypeSpec::a(1).unwrap());
        assert_eq!(sigma(&rs, &t, 0), PolyMatrix::from_rows(vec![vec![p("t*r^4")]]).unwrap());
        assert_eq!(sigma_inverse(&rs, &t, 0), PolyMatrix::from_rows(vec![vec![p("t^-1*r^-4")]]).unwrap());
    }

    #[test]
    fn determinants() {
        let (rs, t) = setup(TypeSpec::a(2).unwrap());
        assert_eq!(determinant_sigma(&rs, &t, 0), p("-t*r^6"));
        let (rs, t) = setup(TypeSpec::d(4).unwrap());
        for k in 0..4 {
            assert_eq!(determinant_sigma(&rs, &t, k), expected_determinant(&rs, k));
        }
    }

    #[test]
    fn rank_one_defect() {
        let (rs, t) = setup(TypeSpec::a(3).unwrap());
        for k in 0..3 {
            assert!(rank_one_violations(&rs, &t, k).is_empty());
        }
    }

    #[test]
    fn braid_relations_small() {
        for spec in [TypeSpec::a(2), TypeSpec::a(3), TypeSpec::d(4)] {
            let (rs, t) = setup(spec.unwrap());
            assert_eq!(verify_braid_relations(&rs, &t), vec![]);
        }
    }

    #[test]
    fn braid_failure_is_reported() {
        let (rs, mut t) = setup(TypeSpec::a(2).unwrap());
        t = TTable::from_values(2, 3, (0..6).map(|i| if i == 2 { p("r") } else { t.get(i / 3, i % 3).clone() }).collect());
        let failures = verify_braid_relations(&rs, &t);
        assert_eq!(failures.len(), 1);
        assert_eq!(failures[0].family, BraidFamily::Sigma);
    }

    #[test]
    fn words_and_longest() {
        let rs = RootSystem::build(TypeSpec::a(2).unwrap());
        let rep = LkRep::new(&rs).unwrap();
        assert_eq!(rep.rho_word(&SignedWord::empty()), PolyMatrix::identity(3));
        let w = SignedWord::parse("2 -2", 2).unwrap();
        assert_eq!(rep.rho_word(&w), PolyMatrix::identity(3));
        let (scalar, perm) = rep.rho_longest().unwrap();
        assert_eq!(scalar, p("t*r^6"));
        assert_eq!(perm, vec![1, 0, 2]);
        assert_eq!(perm, expected_longest_permutation(&rs));
    }

    #[test]
    fn longest_exponent_matches_root_count() {
        for spec in [TypeSpec::a(1), TypeSpec::a(5), TypeSpec::d(4), TypeSpec::d(6), TypeSpec::e(6), TypeSpec::e(8)] {
            let spec = spec.unwrap();
            let rs = RootSystem::build(spec);
            assert_eq!(rs.non_orthogonal_count(rs.len() - 1) as i32 + 3, longest_exponent(spec), "{spec}");
        }
    }

    #[test]
    fn not_monomial() {
        let m = PolyMatrix::from_rows(vec![vec![p("1"), p("1")], vec![p("0"), p("1")]]).unwrap();
        assert_eq!(monomial_factorization(&m), Err(Error::NotMonomialMatrix { column: 1 }));
    }
}
