//! Generalized Lawrence–Krammer representations of the Artin groups of
//! type A, D and E, over exact Laurent polynomial rings.
//!
//! The ring and matrix layers are generic over the coefficient type
//! ([`Laurent`], [`Matrix`]); the aliases below fix the concrete types the
//! representation uses.

pub mod charney;
pub mod cone;
pub mod error;
pub mod exponents;
pub mod garside;
pub mod laurent;
pub mod matrix;
pub mod rep;
pub mod roots;
pub mod rootset;
pub mod scalar;
pub mod ttable;
pub mod umatrix;
pub mod weyl;
pub mod words;

pub use charney::{charney_length_bfs, charney_length_matrix, CharneyOracle};
pub use cone::{classify_cone, cone_check, default_r0, faithfulness_probe, ConeVector, TMatrix};
pub use error::{Error, Result};
pub use exponents::{solve_t_closed_form, ExponentTable};
pub use garside::{b_embed, head_l, star_act, star_act_word, word_equiv_oracle};
pub use laurent::{BiExp, Laurent, LaurentPoly, Rational, TPoly};
pub use matrix::{Matrix, PolyMatrix};
pub use rep::{sigma, sigma_inverse, tau, verify_braid_relations, LkRep};
pub use roots::{Family, Root, RootSystem, SignedRoot, TypeSpec};
pub use rootset::{ClosedSet, RootSet};
pub use scalar::{Coefficient, Exponent, Ring};
pub use ttable::{solve_t, solve_t_with, TTable, TieBreak};
pub use umatrix::build_u_matrix;
pub use weyl::{max_inversion_subset, WeylElement};
pub use words::{Letter, PositiveWord, SignedWord};
