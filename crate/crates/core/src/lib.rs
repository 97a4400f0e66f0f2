//! Tropical moduli complexes of weighted stable curves.
//!
//! The crate builds the symmetric Δ-complex `Δ_{g,w}` of `w`-stable
//! tropical curves of genus `g` from exact rational weight data, computes
//! its automorphism group, and compares it with the automorphism group of
//! the weight complex `K_w` (subsets of markings with total weight at most
//! one).
//!
//! Layout:
//! - [`weights`]: exact rationals, weight vectors, `K_w` and permutation groups.
//! - [`graphs`]: marked genus-labelled multigraphs, contraction, canonical
//!   forms, expansions and enumeration of stable graphs.
//! - [`complex`]: the symmetric Δ-complex, its face/permutation tables and
//!   automorphism search.
//! - [`verify`]: named checks producing structured reports.

pub mod complex;
pub mod error;
pub mod graphs;
pub mod verify;
pub mod weights;

pub use error::{Error, Result};

/// Size limits shared by the enumeration and search routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Caps {
    /// Maximum number of simplex classes in a built complex.
    pub max_simplices: usize,
    /// Maximum number of group elements enumerated explicitly.
    pub max_group_elements: usize,
    /// Maximum vertex count accepted by the canonical-form search.
    pub max_vertices: usize,
    /// Maximum number of unlabelled stable graphs produced by enumeration.
    pub max_graphs: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_simplices: 50_000,
            max_group_elements: 1_000_000,
            max_vertices: 16,
            max_graphs: 20_000,
        }
    }
}
