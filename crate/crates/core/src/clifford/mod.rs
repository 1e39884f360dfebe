//! Clifford algebra arithmetic, Clifford ideals, spinor matrix
//! factorizations, the special Clifford group action, and the hyperplane and
//! cone ideal relations.
//!
//! The algebra of a form `q` on a space of dimension `n+1` has rank `2^{n+1}`
//! with basis monomials `e_S` indexed by subsets `S` of the coordinates,
//! subject to `e_i e_i = a_ii` and `e_i e_j = b_ij - e_j e_i` for `i > j`.
//! With the value line bundle trivialized only the parity of the degree
//! matters, but the integer label is kept so degree-shift and duality
//! statements can be expressed.

mod algebra;
mod group;
mod ideal;
mod relations;
mod spinor;

pub use algebra::{Clifford, CliffordElement};
pub use group::{sgamma, SgammaReport};
pub use ideal::{ideal_basis, parity_masks, IdealBasis};
pub use relations::{cone_ideal_check, hyperplane_ideal_check, ConeIdealReport, HyperplaneIdealReport};
pub use spinor::{
    dual_pair, mf_equiv, mf_verify, projective_points, spinor_phi, MfEquivOutcome, MfPair,
    MfVerifyReport, PointRankSample, SpinorFactorization,
};
