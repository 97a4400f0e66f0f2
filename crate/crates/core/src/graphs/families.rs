use serde::Serialize;

use super::MarkedGraph;
use crate::error::{input, Result};
use crate::weights::{classify_heavy_light, WeightVector};

/// Two genus-zero vertices: the first carries `k` loops and the markings in
/// `a`, the second `l` loops and the remaining markings, joined by
/// `g − (k + l) + 1` parallel edges. Returns the graph and whether it is
/// stable for `w`.
pub fn make_b(g: u32, k: u32, l: u32, a: &[usize], w: &WeightVector) -> Result<(MarkedGraph, bool)> {
    if k + l > g {
        return input(format!("k + l = {} exceeds g = {g}", k + l));
    }
    let n = w.len();
    w.mask_of(a)?;
    let markings = (0..n).map(|i| if a.contains(&i) { 0 } else { 1 }).collect();
    let mut edges = vec![(0, 0); k as usize];
    edges.extend(std::iter::repeat_n((1, 1), l as usize));
    edges.extend(std::iter::repeat_n((0, 1), (g - k - l + 1) as usize));
    let graph = MarkedGraph::new(vec![0, 0], edges, markings)?;
    let stable = graph.is_w_stable(w, g);
    Ok((graph, stable))
}

/// One genus-zero vertex with `g` loops carrying all `n` markings.
pub fn make_rose(g: u32, n: usize) -> Result<MarkedGraph> {
    if g == 0 {
        return input("a rose needs at least one loop");
    }
    Ok(MarkedGraph::single_vertex(0, g as usize, n))
}

/// A one-edge genus-zero tree, described by the markings on one side.
#[derive(Clone, Debug, Serialize)]
pub struct Split {
    pub side: Vec<usize>,
    pub graph: MarkedGraph,
}

/// Every stable one-edge genus-zero tree, one per class, each described by
/// the side containing marking 0.
pub fn stable_splits(w: &WeightVector) -> Vec<Split> {
    let n = w.len();
    let mut out = Vec::new();
    for mask in 0..(1u32 << n) {
        if mask & 1 == 0 || mask == w.full_mask() {
            continue;
        }
        let side: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        if let Ok((graph, true)) = make_b(0, 0, 0, &side, w) {
            out.push(Split { side, graph });
        }
    }
    out
}

/// For a heavy/light vector, the one-edge trees isolating exactly one light
/// and one heavy marking on a side.
pub fn special_graphs(w: &WeightVector) -> Result<Vec<MarkedGraph>> {
    let hl = classify_heavy_light(w);
    if !hl.is_heavy_light {
        return input(format!("{w} is not heavy/light"));
    }
    let mut out = Vec::new();
    for &i in &hl.light {
        for &j in &hl.heavy {
            let (g, stable) = make_b(0, 0, 0, &[i, j], w)?;
            if stable {
                out.push(g);
            }
        }
    }
    Ok(out)
}
