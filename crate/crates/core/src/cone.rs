//! Positivity after specializing `r` to a rational `r₀ ∈ (0, 1)`.
//!
//! The cone is `U = ⊕_β (Q_{≥0} ⊕ t Q[t]) x_β`. A vector of `U` lies in
//! the piece `U_A` where `A` is the set of coordinates with zero constant
//! term.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Rational, TPoly};
use crate::matrix::{Matrix, PolyMatrix};
use crate::rep::LkRep;
use crate::roots::RootSystem;
use crate::rootset::{ClosedSet, RootSet};
use crate::weyl::{max_inversion_subset, WeylElement};
use crate::words::PositiveWord;

pub type TMatrix = Matrix<TPoly>;

/// The default specialization `r₀ = 1/2`.
pub fn default_r0() -> Rational {
    Rational::new(1.into(), 2.into())
}

pub fn specialize(m: &PolyMatrix, r0: &Rational) -> Result<TMatrix> {
    m.try_map(|x: &LaurentPoly| x.eval_r(r0))
}

fn in_cone(x: &TPoly) -> bool {
    x.min_exponent().map_or(true, |e| e >= 0) && !x.constant_term().is_negative()
}

/// `ρ(generators)` specialized at `r₀`, for repeated products.
#[derive(Clone, Debug)]
pub struct Specialized {
    sigma: Vec<TMatrix>,
    r0: Rational,
}

impl Specialized {
    pub fn new(rep: &LkRep, r0: &Rational) -> Result<Self> {
        let sigma = (0..rep.root_system().rank()).map(|k| specialize(rep.sigma(k), r0)).collect::<Result<_>>()?;
        Ok(Specialized { sigma, r0: r0.clone() })
    }

    pub fn r0(&self) -> &Rational {
        &self.r0
    }

    pub fn sigma(&self, k: usize) -> &TMatrix {
        &self.sigma[k]
    }

    pub fn rho(&self, word: &PositiveWord) -> TMatrix {
        let n = self.sigma.first().map_or(0, Matrix::size);
        word.letters().iter().fold(TMatrix::identity(n), |m, &k| m.mul_ref(&self.sigma[k]))
    }

    /// `ρ(word) v`, applying the letters right to left.
    pub fn apply(&self, word: &PositiveWord, v: &[TPoly]) -> Vec<TPoly> {
        word.letters().iter().rev().fold(v.to_vec(), |v, &k| self.sigma[k].mul_vec(&v))
    }
}

/// An entry of `ρ(word)` outside `Q_{≥0} ⊕ t Q[t]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConeViolation {
    pub row: usize,
    pub col: usize,
}

/// Checks that `ρ(word)` at `r₀` maps the cone into itself entrywise.
pub fn cone_check(rep: &LkRep, word: &PositiveWord, r0: &Rational) -> Result<Vec<ConeViolation>> {
    let m = Specialized::new(rep, r0)?.rho(word);
    Ok(matrix_cone_violations(&m))
}

pub fn matrix_cone_violations(m: &TMatrix) -> Vec<ConeViolation> {
    m.entries().filter(|(_, _, x)| !in_cone(x)).map(|(row, col, _)| ConeViolation { row, col }).collect()
}

/// A vector of the cone `U`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeVector(Vec<TPoly>);

impl ConeVector {
    pub fn new(coords: Vec<TPoly>) -> Result<Self> {
        match coords.iter().position(|x| !in_cone(x)) {
            Some(coordinate) => Err(Error::NotInCone { coordinate }),
            None => Ok(ConeVector(coords)),
        }
    }

    /// Generic vector of `U_A`: constant `1` off `A`, `t` on `A`.
    pub fn probe(rs: &RootSystem, a: RootSet) -> Self {
        let one = TPoly::one();
        let t = TPoly::monomial(Rational::one(), 1);
        ConeVector((0..rs.len()).map(|b| if a.contains(b) { t.clone() } else { one.clone() }).collect())
    }

    pub fn coords(&self) -> &[TPoly] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<TPoly> {
        self.0
    }
}

/// The set `A` with `v ∈ U_A`.
pub fn classify_cone(v: &[TPoly]) -> Result<RootSet> {
    let mut a = RootSet::empty();
    for (i, x) in v.iter().enumerate() {
        if !in_cone(x) {
            return Err(Error::NotInCone { coordinate: i });
        }
        if x.constant_term().is_zero() {
            a.insert(i);
        }
    }
    Ok(a)
}

/// `g(A)` for the piece `U_A` containing `ρ(x) v`, with `v` the generic
/// vector of `U_∅`. Should equal the head `L(x)`.
pub fn faithfulness_probe(rep: &LkRep, x: &PositiveWord, r0: &Rational) -> Result<WeylElement> {
    probe_with(rep.root_system(), &Specialized::new(rep, r0)?, x)
}

pub fn probe_with(rs: &RootSystem, spec: &Specialized, x: &PositiveWord) -> Result<WeylElement> {
    let v = ConeVector::probe(rs, RootSet::empty());
    let a = classify_cone(&spec.apply(x, v.coords()))?;
    Ok(max_inversion_subset(rs, &ClosedSet::new(rs, a)?))
}
