use std::collections::BTreeSet;

use crate::error::{input, Error, Result};
use crate::weights::{Rational, WeightVector};

/// A connected multigraph with genus labels on vertices and marked points
/// attached to vertices.
///
/// Edges are unordered pairs stored as `(u, v)` with `u ≤ v`; a loop has
/// `u == v` and counts twice towards valence. `markings[i]` is the vertex
/// carrying marking `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MarkedGraph {
    vertex_genus: Vec<u32>,
    edges: Vec<(usize, usize)>,
    markings: Vec<usize>,
}

impl MarkedGraph {
    pub fn new(
        vertex_genus: Vec<u32>,
        edges: Vec<(usize, usize)>,
        markings: Vec<usize>,
    ) -> Result<Self> {
        let nv = vertex_genus.len();
        if nv == 0 {
            return input("a graph needs at least one vertex");
        }
        for &(u, v) in &edges {
            if u >= nv || v >= nv {
                return input(format!("edge ({u}, {v}) refers to a missing vertex"));
            }
        }
        for (i, &v) in markings.iter().enumerate() {
            if v >= nv {
                return input(format!("marking {} sits on missing vertex {v}", i + 1));
            }
        }
        let edges = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        let g = MarkedGraph {
            vertex_genus,
            edges,
            markings,
        };
        if !g.is_connected() {
            return input("graph is not connected");
        }
        Ok(g)
    }

    /// One vertex of genus `h` with `loops` loops carrying all `n` markings.
    pub fn single_vertex(h: u32, loops: usize, n: usize) -> Self {
        MarkedGraph {
            vertex_genus: vec![h],
            edges: vec![(0, 0); loops],
            markings: vec![0; n],
        }
    }

    pub(crate) fn from_parts_unchecked(
        vertex_genus: Vec<u32>,
        edges: Vec<(usize, usize)>,
        markings: Vec<usize>,
    ) -> Self {
        let edges = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        MarkedGraph {
            vertex_genus,
            edges,
            markings,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_genus.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn marking_count(&self) -> usize {
        self.markings.len()
    }

    pub fn vertex_genera(&self) -> &[u32] {
        &self.vertex_genus
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn markings(&self) -> &[usize] {
        &self.markings
    }

    pub fn is_loop(&self, e: usize) -> bool {
        let (u, v) = self.edges[e];
        u == v
    }

    fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// `|E| − |V| + 1`.
    pub fn first_betti(&self) -> usize {
        self.edge_count() + 1 - self.vertex_count()
    }

    /// First Betti number plus the vertex genera.
    pub fn genus(&self) -> u32 {
        self.first_betti() as u32 + self.vertex_genus.iter().sum::<u32>()
    }

    /// Valence with loops counted twice.
    pub fn valence(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| (a == v) as usize + (b == v) as usize)
            .sum()
    }

    pub fn loops_at(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v && b == v).count()
    }

    pub fn markings_at(&self, v: usize) -> Vec<usize> {
        (0..self.markings.len())
            .filter(|&i| self.markings[i] == v)
            .collect()
    }

    /// Number of edges joining `u` and `v` (loops when `u == v`).
    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        let key = (u.min(v), u.max(v));
        self.edges.iter().filter(|&&e| e == key).count()
    }

    fn vertex_weight(&self, w: &WeightVector, v: usize) -> Rational {
        self.markings
            .iter()
            .enumerate()
            .filter(|&(_, &x)| x == v)
            .map(|(i, _)| w.get(i))
            .sum()
    }

    /// `2h(v) − 2 + val(v) + w(m⁻¹(v)) > 0` at every vertex.
    pub fn vertices_stable(&self, w: &WeightVector) -> bool {
        if w.len() != self.markings.len() {
            return false;
        }
        (0..self.vertex_count()).all(|v| {
            let base = 2 * self.vertex_genus[v] as i64 - 2 + self.valence(v) as i64;
            (Rational::from_integer(base) + self.vertex_weight(w, v)).is_positive()
        })
    }

    /// Genus equals `g` and every vertex is stable for `w`.
    pub fn is_w_stable(&self, w: &WeightVector, g: u32) -> bool {
        self.genus() == g && self.vertices_stable(w)
    }

    /// Non-loop edges whose removal disconnects the graph.
    pub fn bridges(&self) -> Vec<usize> {
        (0..self.edge_count())
            .filter(|&e| {
                if self.is_loop(e) {
                    return false;
                }
                let mut rest = self.clone();
                rest.edges.remove(e);
                !rest.is_connected()
            })
            .collect()
    }

    /// Contracts edge `e`. A non-loop merges its endpoints (genera add), a
    /// loop is deleted and its vertex genus goes up by one. The remaining
    /// edges keep their relative order.
    pub fn contract_edge(&self, e: usize) -> Result<MarkedGraph> {
        if e >= self.edge_count() {
            return input(format!("edge {e} out of range"));
        }
        let (a, b) = self.edges[e];
        let mut vertex_genus = self.vertex_genus.clone();
        let mut edges = self.edges.clone();
        edges.remove(e);
        if a == b {
            vertex_genus[a] += 1;
            return Ok(MarkedGraph::from_parts_unchecked(
                vertex_genus,
                edges,
                self.markings.clone(),
            ));
        }
        // merge b into a, then close the gap left by b
        vertex_genus[a] += vertex_genus[b];
        vertex_genus.remove(b);
        let remap = |x: usize| {
            let x = if x == b { a } else { x };
            if x > b {
                x - 1
            } else {
                x
            }
        };
        let edges = edges.into_iter().map(|(u, v)| (remap(u), remap(v))).collect();
        let markings = self.markings.iter().map(|&x| remap(x)).collect();
        Ok(MarkedGraph::from_parts_unchecked(vertex_genus, edges, markings))
    }

    /// Moves marking `i` to `σ(i)`: the result has `m'(σ(i)) = m(i)`.
    pub fn permute_markings(&self, sigma: &crate::weights::Permutation) -> Result<MarkedGraph> {
        if sigma.degree() != self.markings.len() {
            return input("permutation degree differs from the number of markings");
        }
        let mut markings = vec![0; self.markings.len()];
        for (i, &v) in self.markings.iter().enumerate() {
            markings[sigma.apply(i)] = v;
        }
        Ok(MarkedGraph {
            markings,
            ..self.clone()
        })
    }

    /// Same weighted graph with every marking removed.
    pub fn forget_markings(&self) -> MarkedGraph {
        MarkedGraph {
            markings: Vec::new(),
            ..self.clone()
        }
    }

    pub(crate) fn with_edges(&self, edges: Vec<(usize, usize)>) -> MarkedGraph {
        MarkedGraph::from_parts_unchecked(self.vertex_genus.clone(), edges, self.markings.clone())
    }
}

/// A marked graph together with a bijection from its edges to `{0..p}`.
///
/// Stored with edge index equal to label, so `graph().edges()[i]` is the
/// edge labelled `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeLabelledGraph {
    graph: MarkedGraph,
}

impl EdgeLabelledGraph {
    /// `labels[e]` is the label given to edge `e` of `graph`.
    pub fn new(graph: &MarkedGraph, labels: &[usize]) -> Result<Self> {
        let n = graph.edge_count();
        if labels.len() != n {
            return input(format!("{} labels for {n} edges", labels.len()));
        }
        let mut edges = vec![None; n];
        for (e, &l) in labels.iter().enumerate() {
            if l >= n || edges[l].is_some() {
                return input("edge labels must be a bijection onto 0..p");
            }
            edges[l] = Some(graph.edges[e]);
        }
        Ok(EdgeLabelledGraph {
            graph: graph.with_edges(edges.into_iter().map(|e| e.expect("bijection")).collect()),
        })
    }

    /// Labels edges by their current index.
    pub fn in_edge_order(graph: MarkedGraph) -> Self {
        EdgeLabelledGraph { graph }
    }

    pub fn graph(&self) -> &MarkedGraph {
        &self.graph
    }

    pub fn into_graph(self) -> MarkedGraph {
        self.graph
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    /// Endpoints of the edge labelled `label`.
    pub fn edge(&self, label: usize) -> (usize, usize) {
        self.graph.edges[label]
    }

    fn check_label(&self, label: usize) -> Result<()> {
        if label >= self.edge_count() {
            return input(format!(
                "label {label} out of range 0..{}",
                self.edge_count()
            ));
        }
        Ok(())
    }

    /// Contracts the edge labelled `label`; later labels shift down by one.
    pub fn contract(&self, label: usize) -> Result<Self> {
        self.check_label(label)?;
        Ok(EdgeLabelledGraph {
            graph: self.graph.contract_edge(label)?,
        })
    }

    /// Contracts every edge whose label is not in `keep`. Kept edges are
    /// relabelled preserving their order.
    pub fn contract_complement(&self, keep: &[usize]) -> Result<Self> {
        if keep.is_empty() {
            return input("at least one edge must be kept");
        }
        let keep: BTreeSet<usize> = keep.iter().copied().collect();
        for &l in &keep {
            self.check_label(l)?;
        }
        let mut out = self.clone();
        // contract from the top so lower labels stay valid
        for l in (0..self.edge_count()).rev() {
            if !keep.contains(&l) {
                out = out.contract(l)?;
            }
        }
        Ok(out)
    }

    /// Relabels so the edge labelled `l` gets label `f[l]`.
    pub fn relabel(&self, f: &[usize]) -> Result<Self> {
        EdgeLabelledGraph::new(&self.graph, f)
    }

    /// Swaps labels `k` and `k + 1`.
    pub fn swap_adjacent(&self, k: usize) -> Self {
        let mut g = self.clone();
        g.graph.edges.swap(k, k + 1);
        g
    }

    pub fn permute_markings(&self, sigma: &crate::weights::Permutation) -> Result<Self> {
        Ok(EdgeLabelledGraph {
            graph: self.graph.permute_markings(sigma)?,
        })
    }

    /// Labels of bridges.
    pub fn bridge_labels(&self) -> Vec<usize> {
        self.graph.bridges()
    }

    /// Label sets of size `k` forming a cycle: a loop for `k = 1`, a pair of
    /// parallel edges for `k = 2`, a simple cycle through `k` distinct
    /// vertices otherwise.
    pub fn cycle_index_sets(&self, k: usize) -> Vec<Vec<usize>> {
        let g = &self.graph;
        let n = g.edge_count();
        let mut out = Vec::new();
        if k == 0 || k > n {
            return out;
        }
        let mut chosen = Vec::with_capacity(k);
        subsets(n, k, &mut chosen, 0, &mut |set| {
            if is_simple_cycle(g, set) {
                out.push(set.to_vec());
            }
        });
        out
    }

    /// Pairs of loops sitting on the same vertex.
    pub fn loop_pairs(&self) -> Vec<(usize, usize)> {
        let g = &self.graph;
        let n = g.edge_count();
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if g.is_loop(a) && g.is_loop(b) && g.edges[a] == g.edges[b] {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

fn subsets(n: usize, k: usize, chosen: &mut Vec<usize>, start: usize, f: &mut impl FnMut(&[usize])) {
    if chosen.len() == k {
        f(chosen);
        return;
    }
    for i in start..n {
        chosen.push(i);
        subsets(n, k, chosen, i + 1, f);
        chosen.pop();
    }
}

fn is_simple_cycle(g: &MarkedGraph, set: &[usize]) -> bool {
    match set.len() {
        1 => g.is_loop(set[0]),
        2 => !g.is_loop(set[0]) && g.edges[set[0]] == g.edges[set[1]],
        k => {
            // k distinct vertices each of degree 2 within the set, connected
            let mut deg = std::collections::BTreeMap::new();
            for &e in set {
                let (u, v) = g.edges[e];
                if u == v {
                    return false;
                }
                *deg.entry(u).or_insert(0) += 1;
                *deg.entry(v).or_insert(0) += 1;
            }
            if deg.len() != k || deg.values().any(|&d| d != 2) {
                return false;
            }
            let sub = MarkedGraph::from_parts_unchecked(
                vec![0; g.vertex_count()],
                set.iter().map(|&e| g.edges[e]).collect(),
                vec![],
            );
            let start = *deg.keys().next().expect("nonempty");
            let mut seen = BTreeSet::from([start]);
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for &(u, v) in sub.edges() {
                    let y = if u == x { v } else if v == x { u } else { continue };
                    if seen.insert(y) {
                        stack.push(y);
                    }
                }
            }
            seen.len() == k
        }
    }
}

impl From<MarkedGraph> for EdgeLabelledGraph {
    fn from(g: MarkedGraph) -> Self {
        EdgeLabelledGraph::in_edge_order(g)
    }
}

impl TryFrom<(MarkedGraph, Vec<usize>)> for EdgeLabelledGraph {
    type Error = Error;

    fn try_from((g, labels): (MarkedGraph, Vec<usize>)) -> Result<Self> {
        EdgeLabelledGraph::new(&g, &labels)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn theta() -> MarkedGraph {
        MarkedGraph::new(vec![0, 0], vec![(0, 1); 3], vec![0, 1]).unwrap()
    }

    #[test]
    fn betti_numbers() {
        assert_eq!(MarkedGraph::single_vertex(0, 3, 0).first_betti(), 3);
        let tree = MarkedGraph::new(vec![0; 3], vec![(0, 1), (1, 2)], vec![]).unwrap();
        assert_eq!(tree.first_betti(), 0);
        assert_eq!(theta().first_betti(), 2);
        assert!(MarkedGraph::new(vec![0, 0], vec![], vec![]).is_err());
    }

    #[test]
    fn stability_examples() {
        let w: WeightVector = "1/2,1/2".parse().unwrap();
        let loop1 = MarkedGraph::single_vertex(0, 1, 2);
        assert!(loop1.is_w_stable(&w, 1));
        let bridge = MarkedGraph::new(vec![1, 0], vec![(0, 1)], vec![1, 1]).unwrap();
        assert!(!bridge.is_w_stable(&w, 1));
        let w: WeightVector = "1^4".parse().unwrap();
        let split = MarkedGraph::new(vec![0, 0], vec![(0, 1)], vec![0, 0, 1, 1]).unwrap();
        assert!(split.is_w_stable(&w, 0));
    }

    #[test]
    fn contraction_examples() {
        let rose = EdgeLabelledGraph::from(MarkedGraph::single_vertex(0, 2, 0));
        let c = rose.contract(0).unwrap();
        assert_eq!(c.graph().vertex_genera(), &[1]);
        assert_eq!(c.edge_count(), 1);

        let g = MarkedGraph::new(vec![0, 0], vec![(0, 1), (1, 1)], vec![0]).unwrap();
        let c = EdgeLabelledGraph::from(g).contract(0).unwrap();
        assert_eq!(c.graph().vertex_genera(), &[0]);
        assert_eq!(c.graph().edges(), &[(0, 0)]);

        let t = EdgeLabelledGraph::from(theta()).contract(1).unwrap();
        assert_eq!(t.graph().vertex_count(), 1);
        assert_eq!(t.graph().edges(), &[(0, 0), (0, 0)]);
        assert!(EdgeLabelledGraph::from(theta()).contract(3).is_err());
    }

    #[test]
    fn contract_complement_examples() {
        let t = EdgeLabelledGraph::from(theta());
        assert_eq!(t.contract_complement(&[0, 1, 2]).unwrap(), t);
        let r = t.contract_complement(&[2]).unwrap();
        assert_eq!(r.graph().edges(), &[(0, 0)]);
        assert_eq!(r.graph().vertex_genera(), &[1]);
        assert!(t.contract_complement(&[]).is_err());

        let path = MarkedGraph::new(vec![0; 3], vec![(0, 1), (1, 2)], vec![0, 0, 1, 2, 2]).unwrap();
        let one = EdgeLabelledGraph::from(path).contract_complement(&[1]).unwrap();
        assert_eq!(one.graph().vertex_count(), 2);
        assert_eq!(one.graph().markings(), &[0, 0, 0, 1, 1]);
    }

    #[test]
    fn bridges_and_cycles() {
        let tree = MarkedGraph::new(vec![0; 3], vec![(0, 1), (1, 2)], vec![]).unwrap();
        assert_eq!(tree.bridges(), vec![0, 1]);
        assert!(theta().bridges().is_empty());
        let lb = MarkedGraph::new(vec![0, 0], vec![(0, 0), (0, 1)], vec![]).unwrap();
        assert_eq!(lb.bridges(), vec![1]);

        let rose = EdgeLabelledGraph::from(MarkedGraph::single_vertex(0, 2, 0));
        assert_eq!(rose.cycle_index_sets(1), vec![vec![0], vec![1]]);
        assert_eq!(rose.loop_pairs(), vec![(0, 1)]);
        let t = EdgeLabelledGraph::from(theta());
        assert_eq!(t.cycle_index_sets(2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        let tri = MarkedGraph::new(vec![0; 3], vec![(0, 1), (1, 2), (0, 2)], vec![]).unwrap();
        assert_eq!(EdgeLabelledGraph::from(tri).cycle_index_sets(3), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn labelling_must_be_bijective() {
        assert!(EdgeLabelledGraph::new(&theta(), &[0, 0, 1]).is_err());
        assert!(EdgeLabelledGraph::new(&theta(), &[0, 1]).is_err());
        let g = EdgeLabelledGraph::new(&theta(), &[2, 0, 1]).unwrap();
        assert_eq!(g.edge_count(), 3);
    }
}
