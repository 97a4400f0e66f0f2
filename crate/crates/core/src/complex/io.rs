use serde::Serialize;

use super::{split_of, OneSkeleton, SymmetricDeltaComplex};
use crate::weights::WeightVector;

#[derive(Clone, Debug, Serialize)]
pub struct DimensionJson {
    pub dimension: usize,
    pub codes: Vec<String>,
    /// `faces[s][i]` is `d_i` of simplex `s`.
    pub faces: Vec<Vec<usize>>,
    /// `swaps[s][k]` is the image of simplex `s` under swapping labels `k`, `k + 1`.
    pub swaps: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComplexJson {
    pub genus: u32,
    pub weights: WeightVector,
    pub dimensions: Vec<DimensionJson>,
}

impl From<&SymmetricDeltaComplex> for ComplexJson {
    fn from(x: &SymmetricDeltaComplex) -> Self {
        ComplexJson {
            genus: x.genus(),
            weights: x.weights().clone(),
            dimensions: (0..x.dimensions())
                .map(|p| DimensionJson {
                    dimension: p,
                    codes: (0..x.size(p)).map(|s| x.code(p, s).to_string()).collect(),
                    faces: (0..x.size(p)).map(|s| x.faces_of(p, s).to_vec()).collect(),
                    swaps: (0..x.size(p)).map(|s| x.swaps_of(p, s).to_vec()).collect(),
                })
                .collect(),
        }
    }
}

/// Graphviz picture of the 1-skeleton of a genus-zero complex, each vertex
/// captioned by the side of its split holding marking 1.
pub fn skeleton_to_dot(x: &SymmetricDeltaComplex, skel: &OneSkeleton) -> String {
    let mut out = String::from("graph skeleton {\n");
    for v in 0..skel.vertices {
        let side: Vec<String> = split_of(x, v).iter().map(|m| (m + 1).to_string()).collect();
        out.push_str(&format!("  b{v} [label=\"{{{}}}\"];\n", side.join(",")));
    }
    for &(a, b) in &skel.edges {
        out.push_str(&format!("  b{a} -- b{b};\n"));
    }
    out.push_str("}\n");
    out
}
