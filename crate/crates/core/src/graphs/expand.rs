use std::collections::BTreeMap;

use serde::Serialize;

use super::{CanonicalCode, MarkedGraph};
use crate::error::{capacity, input, Result};
use crate::weights::WeightVector;
use crate::Caps;

/// Every graph obtained by splitting vertex `v` into two vertices joined by
/// a new edge. Incident edges go to either side; a loop at `v` stays on one
/// side or becomes an edge between the two sides; markings and genus are
/// distributed. The new edge is appended last.
fn vertex_splits(g: &MarkedGraph, v: usize, out: &mut Vec<MarkedGraph>) {
    let nv = g.vertex_count();
    let v2 = nv;
    let incident: Vec<usize> = (0..g.edge_count())
        .filter(|&e| {
            let (a, b) = g.edges()[e];
            a == v || b == v
        })
        .collect();
    let marks = g.markings_at(v);
    let h = g.vertex_genera()[v];
    // each incident edge: 0 = side one, 1 = side two, 2 = loop opened between the sides
    let choices: Vec<u32> = incident.iter().map(|&e| if g.is_loop(e) { 3 } else { 2 }).collect();
    let mut assign = vec![0u32; incident.len()];
    loop {
        let mut edges = g.edges().to_vec();
        for (k, &e) in incident.iter().enumerate() {
            let (a, b) = edges[e];
            edges[e] = if a == b {
                match assign[k] {
                    0 => (v, v),
                    1 => (v2, v2),
                    _ => (v, v2),
                }
            } else if assign[k] == 0 {
                (a, b)
            } else {
                let other = if a == v { b } else { a };
                (other.min(v2), other.max(v2))
            };
        }
        edges.push((v, v2));
        for mark_mask in 0u64..(1u64 << marks.len()) {
            let mut markings = g.markings().to_vec();
            for (k, &m) in marks.iter().enumerate() {
                if mark_mask & (1 << k) != 0 {
                    markings[m] = v2;
                }
            }
            for h1 in 0..=h {
                let mut genus = g.vertex_genera().to_vec();
                genus[v] = h1;
                genus.push(h - h1);
                out.push(MarkedGraph::from_parts_unchecked(
                    genus,
                    edges.clone(),
                    markings.clone(),
                ));
            }
        }
        // odometer over the edge choices
        let mut k = 0;
        while k < assign.len() {
            assign[k] += 1;
            if assign[k] < choices[k] {
                break;
            }
            assign[k] = 0;
            k += 1;
        }
        if k == assign.len() {
            break;
        }
    }
}

/// Stable graphs with one more edge that contract onto `g`, one per
/// isomorphism class, sorted by canonical code.
pub fn one_edge_expansions(g: &MarkedGraph, w: &WeightVector, genus: u32) -> Result<Vec<MarkedGraph>> {
    if !g.is_w_stable(w, genus) {
        return input("expansions are only defined for stable graphs");
    }
    let mut candidates = Vec::new();
    for v in 0..g.vertex_count() {
        vertex_splits(g, v, &mut candidates);
        let h = g.vertex_genera()[v];
        if h >= 1 {
            let mut genera = g.vertex_genera().to_vec();
            genera[v] = h - 1;
            let mut edges = g.edges().to_vec();
            edges.push((v, v));
            candidates.push(MarkedGraph::from_parts_unchecked(
                genera,
                edges,
                g.markings().to_vec(),
            ));
        }
    }
    let mut classes: BTreeMap<CanonicalCode, MarkedGraph> = BTreeMap::new();
    for c in candidates {
        if c.vertices_stable(w) {
            classes.entry(c.canonical_code()).or_insert(c);
        }
    }
    Ok(classes.into_values().collect())
}

/// Stable graph classes of genus `g` for weight `w`, grouped by edge count.
#[derive(Clone, Debug, Serialize)]
pub struct StableGraphs {
    pub genus: u32,
    pub weights: WeightVector,
    /// `levels[k]` holds the classes with `k + 1` edges.
    pub levels: Vec<Vec<MarkedGraph>>,
}

impl StableGraphs {
    pub fn all(&self) -> impl Iterator<Item = &MarkedGraph> {
        self.levels.iter().flatten()
    }

    pub fn len(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }
}

/// Breadth-first enumeration by edge count, starting from the edgeless
/// vertex of genus `g`. Every stable graph contracts onto that vertex
/// through stable graphs, so the expansions reach all classes.
pub fn enumerate_stable_graphs(g: u32, w: &WeightVector, caps: &Caps) -> Result<StableGraphs> {
    w.check_genus(g)?;
    let mut frontier = vec![MarkedGraph::single_vertex(g, 0, w.len())];
    let mut levels = Vec::new();
    let mut total = 0;
    loop {
        let mut next: BTreeMap<CanonicalCode, MarkedGraph> = BTreeMap::new();
        for f in &frontier {
            for h in one_edge_expansions(f, w, g)? {
                let code = h.canonical_code_capped(caps.max_vertices)?;
                next.entry(code).or_insert(h);
            }
        }
        if next.is_empty() {
            break;
        }
        total += next.len();
        if total > caps.max_graphs {
            return capacity(format!("more than {} stable graphs", caps.max_graphs));
        }
        frontier = next.into_values().collect();
        levels.push(frontier.clone());
    }
    Ok(StableGraphs {
        genus: g,
        weights: w.clone(),
        levels,
    })
}
