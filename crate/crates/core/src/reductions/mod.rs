//! Decision-problem reductions, parameterized by word-problem oracles for the
//! quotient, and the congruence-subgroup examples.

pub mod demo;
pub mod fibre;
pub mod kernel;
pub mod phi;
pub mod sl2;

pub use crate::constructions::fibre::PairWord;
pub use demo::MappingTorus;
pub use fibre::{
    conjugacy_reduction_query, conjugacy_rewrite, membership_query, ConjugacyAnswer, ConjugacyRewrite,
    ConjugacyVerdict, ConjugationTable, Membership,
};
pub use kernel::{z_kernel_membership, ZKernelError, ZKernelSpec};
pub use phi::{build_phi, PhiError, PhiMap};
pub use sl2::{eval_sl2_word, gamma0_membership, sl2z_word, torsion_order, Sl2Error};
