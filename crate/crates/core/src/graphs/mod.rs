//! Marked genus-labelled multigraphs: stability, contraction, canonical
//! forms, expansions and enumeration of stable graphs.

mod canon;
mod expand;
mod families;
mod io;
mod marked;

pub use canon::{CanonicalCode, GraphAutomorphism};
pub use expand::{enumerate_stable_graphs, one_edge_expansions, StableGraphs};
pub use families::{make_b, make_rose, special_graphs, stable_splits, Split};
pub use io::{graph_to_dot, GraphJson};
pub use marked::{EdgeLabelledGraph, MarkedGraph};

pub(crate) use canon::permutations;
