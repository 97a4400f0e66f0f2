//! Weight vectors, exact rationals, permutation groups and the weight
//! complex `K_w`.

mod kw;
mod perm;
mod rational;
mod vector;

pub use kw::{
    admissible_transpositions, aut_kw, aut_mbar, certify_product, classify_heavy_light,
    is_transposition_automorphism, kw_contains, kw_faces, kw_facets,
    kw_has_one_dimensional_facet, kw_transpositions, preserves_kw, realize_product, symmetrize,
    AdmissibleQuantifier, HeavyLight, WeightComplex,
};
pub use perm::{factorial, Permutation, PermutationGroup};
pub use rational::Rational;
pub use vector::{WeightVector, MAX_MARKINGS};
