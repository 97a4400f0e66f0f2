//! The symmetric Δ-complex of stable tropical curves: simplices, face and
//! relabelling tables, automorphisms, and the genus-zero flag structure.

mod aut;
mod delta;
mod genus_zero;
mod io;

pub use aut::{
    aut_complex, induced_automorphisms, is_complex_automorphism, sn_induced_automorphism,
    ComplexAutGroup, ComplexAutomorphism,
};
pub use delta::{build_delta, SymmetricDeltaComplex};
pub use genus_zero::{
    is_flag_g0, one_skeleton_g0, split_of, splits_compatible, FlagResult, OneSkeleton,
};
pub use io::{skeleton_to_dot, ComplexJson, DimensionJson};
