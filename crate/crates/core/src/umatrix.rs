//! The matrix `U` over `Z[r^±1]` with `σ_k U σ̂_k = U` for every `k`,
//! where `σ̂_k` is `σ_k` with `r, t` replaced by `r⁻¹, t⁻¹`.

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::matrix::PolyMatrix;
use crate::roots::RootSystem;
use crate::scalar::Ring;
use crate::ttable::TTable;

/// Builds `U` column by column in height order. Every `k` with
/// `(α_k, β) = 1` gives a candidate column; they must all agree.
pub fn build_u_matrix(rs: &RootSystem, table: &TTable) -> Result<PolyMatrix> {
    let n = rs.len();
    let mut u = PolyMatrix::zeros(n);
    let r_inv = LaurentPoly::r_pow(-1);
    let r_inv_minus_r = r_inv.clone() - LaurentPoly::r();
    let r4 = LaurentPoly::r_pow(4);
    for beta in 0..n {
        if rs.is_simple(beta) {
            u.set(beta, beta, LaurentPoly::one());
            continue;
        }
        let mut chosen: Option<Vec<LaurentPoly>> = None;
        for k in (0..rs.rank()).filter(|&k| rs.inner_simple(k, beta) == 1) {
            let prev = rs.sub_simple(beta, k).expect("β - α_k is a root when (α_k, β) = 1");
            let at = |g: Option<usize>| g.map(|g| u.get(g, prev).clone()).unwrap_or_else(LaurentPoly::zero);
            let column: Vec<LaurentPoly> = (0..n)
                .map(|gamma| {
                    if gamma == beta {
                        LaurentPoly::one()
                    } else if !rs.root_leq(gamma, beta) {
                        LaurentPoly::zero()
                    } else if gamma == rs.simple(k) {
                        table.get(k, beta).bar().mul_ref(&r4)
                    } else {
                        match rs.inner_simple(k, gamma) {
                            1 => at(rs.sub_simple(gamma, k)),
                            0 => r_inv.mul_ref(&at(Some(gamma))),
                            _ => at(rs.add_simple(gamma, k)).add_ref(&r_inv_minus_r.mul_ref(&at(Some(gamma)))),
                        }
                    }
                })
                .collect();
            match &chosen {
                None => chosen = Some(column),
                Some(c) => {
                    if let Some(gamma) = (0..n).find(|&g| c[g] != column[g]) {
                        return Err(Error::AmbiguousRule { gamma, beta });
                    }
                }
            }
        }
        let column = chosen.expect("every non-simple positive root pairs to 1 with some simple root");
        for (gamma, x) in column.into_iter().enumerate() {
            u.set(gamma, beta, x);
        }
    }
    Ok(u)
}

/// Entrywise `r ↦ r⁻¹, t ↦ t⁻¹`.
pub fn bar_matrix(m: &PolyMatrix) -> PolyMatrix {
    m.map(LaurentPoly::bar)
}

/// Generators `k` for which `σ_k U σ̂_k ≠ U`.
pub fn u_identity_violations(u: &PolyMatrix, sigmas: &[PolyMatrix]) -> Vec<usize> {
    sigmas
        .iter()
        .enumerate()
        .filter(|(_, s)| &s.mul_ref(u).mul_ref(&bar_matrix(s)) != u)
        .map(|(k, _)| k)
        .collect()
}

/// `U` is unitriangular for the root order: ones on the diagonal, zero at
/// `(γ, β)` unless `γ ≤ β`.
pub fn is_unitriangular(rs: &RootSystem, u: &PolyMatrix) -> bool {
    u.entries().all(|(g, b, x)| {
        if g == b {
            x.is_one()
        } else {
            rs.root_leq(g, b) || x.is_zero()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::sigma;
    use crate::roots::TypeSpec;
    use crate::ttable::solve_t;

    fn check(spec: TypeSpec) {
        let rs = RootSystem::build(spec);
        let t = solve_t(&rs).unwrap();
        let u = build_u_matrix(&rs, &t).unwrap();
        let sigmas: Vec<_> = (0..rs.rank()).map(|k| sigma(&rs, &t, k)).collect();
        assert_eq!(u_identity_violations(&u, &sigmas), Vec::<usize>::new(), "{spec}");
        assert!(is_unitriangular(&rs, &u));
    }

    #[test]
    fn a2_entry() {
        let rs = RootSystem::build(TypeSpec::a(2).unwrap());
        let u = build_u_matrix(&rs, &solve_t(&rs).unwrap()).unwrap();
        assert_eq!(*u.get(0, 2), "r^-1 - r".parse().unwrap());
    }

    #[test]
    fn identity_small_types() {
        check(TypeSpec::a(2).unwrap());
        check(TypeSpec::a(3).unwrap());
        check(TypeSpec::d(4).unwrap());
    }
}
