use std::fmt;

use serde::{Deserialize, Serialize};

use super::{EdgeLabelledGraph, MarkedGraph};
use crate::error::{capacity, Result};

/// Isomorphism-invariant encoding of a graph. Unlabelled and labelled codes
/// carry different leading tags and never compare equal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalCode(Vec<u32>);

impl CanonicalCode {
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join("."))
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Code({self})")
    }
}

const TAG_UNLABELLED: u32 = 0;
const TAG_LABELLED: u32 = 1;

/// Encoding of `g` under the vertex order `order` (`order[new] = old`).
fn encode(g: &MarkedGraph, order: &[usize], tag: u32, labelled: bool) -> Vec<u32> {
    let n = g.vertex_count();
    let mut pos = vec![0usize; n];
    for (new, &old) in order.iter().enumerate() {
        pos[old] = new;
    }
    let mut out = Vec::with_capacity(4 + n + g.marking_count() + 2 * g.edge_count());
    out.extend([tag, n as u32, g.edge_count() as u32, g.marking_count() as u32]);
    out.extend(order.iter().map(|&v| g.vertex_genera()[v]));
    out.extend(g.markings().iter().map(|&v| pos[v] as u32));
    let mut edges: Vec<(u32, u32)> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (pos[u] as u32, pos[v] as u32);
            (a.min(b), a.max(b))
        })
        .collect();
    if !labelled {
        edges.sort_unstable();
    }
    for (a, b) in edges {
        out.extend([a, b]);
    }
    out
}

/// Ordered partition of the vertices refined until equitable.
fn refine(g: &MarkedGraph, mult: &[Vec<usize>], cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut cells = cells;
    loop {
        let mut cell_of = vec![0usize; n];
        for (c, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = c;
            }
        }
        let signature = |v: usize| {
            let mut s: Vec<(usize, usize)> = (0..n)
                .filter(|&u| u != v && mult[v][u] > 0)
                .map(|u| (cell_of[u], mult[v][u]))
                .collect();
            s.sort_unstable();
            s
        };
        let mut next = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<(usize, usize)>, usize)> =
                cell.iter().map(|&v| (signature(v), v)).collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|x| x.1).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn multiplicity_matrix(g: &MarkedGraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut mult = vec![vec![0usize; n]; n];
    for &(u, v) in g.edges() {
        mult[u][v] += 1;
        if u != v {
            mult[v][u] += 1;
        }
    }
    mult
}

/// Initial ordered partition from vertex invariants: genus, loops, the
/// markings carried, and valence.
fn initial_cells(g: &MarkedGraph) -> Vec<Vec<usize>> {
    let mut keyed: Vec<((u32, usize, Vec<usize>, usize), usize)> = (0..g.vertex_count())
        .map(|v| {
            (
                (g.vertex_genera()[v], g.loops_at(v), g.markings_at(v), g.valence(v)),
                v,
            )
        })
        .collect();
    keyed.sort();
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for i in 0..keyed.len() {
        if i > 0 && keyed[i].0 == keyed[i - 1].0 {
            cells.last_mut().expect("nonempty").push(keyed[i].1);
        } else {
            cells.push(vec![keyed[i].1]);
        }
    }
    cells
}

fn search_unlabelled(
    g: &MarkedGraph,
    mult: &[Vec<usize>],
    cells: Vec<Vec<usize>>,
    best: &mut Option<Vec<u32>>,
) {
    let cells = refine(g, mult, cells);
    match cells.iter().position(|c| c.len() > 1) {
        None => {
            let order: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
            let code = encode(g, &order, TAG_UNLABELLED, false);
            if best.as_ref().is_none_or(|b| code < *b) {
                *best = Some(code);
            }
        }
        Some(i) => {
            for &v in &cells[i] {
                let mut next = cells[..i].to_vec();
                next.push(vec![v]);
                next.push(cells[i].iter().copied().filter(|&u| u != v).collect());
                next.extend_from_slice(&cells[i + 1..]);
                search_unlabelled(g, mult, next, best);
            }
        }
    }
}

impl MarkedGraph {
    /// Canonical code up to isomorphism fixing every marking.
    pub fn canonical_code(&self) -> CanonicalCode {
        let mult = multiplicity_matrix(self);
        let mut best = None;
        search_unlabelled(self, &mult, initial_cells(self), &mut best);
        CanonicalCode(best.expect("at least one leaf"))
    }

    /// As [`canonical_code`](Self::canonical_code), refusing graphs with
    /// more than `max_vertices` vertices.
    pub fn canonical_code_capped(&self, max_vertices: usize) -> Result<CanonicalCode> {
        if self.vertex_count() > max_vertices {
            return capacity(format!(
                "graph has {} vertices, above the canonical-form bound {max_vertices}",
                self.vertex_count()
            ));
        }
        Ok(self.canonical_code())
    }

    pub fn is_isomorphic(&self, other: &MarkedGraph) -> bool {
        self.canonical_code() == other.canonical_code()
    }

    /// Every automorphism: vertex maps fixing genera and markings, paired
    /// with every matching of parallel edges. Fails once more than `cap`
    /// automorphisms have been produced.
    pub fn automorphisms(&self, cap: usize) -> Result<Vec<GraphAutomorphism>> {
        let n = self.vertex_count();
        let mult = multiplicity_matrix(self);
        let cells = refine(self, &mult, initial_cells(self));
        let mut cell_of = vec![0; n];
        for (c, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = c;
            }
        }
        let mut vertex_maps = Vec::new();
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        vertex_backtrack(self, &mult, &cell_of, 0, &mut map, &mut used, &mut vertex_maps);

        let mut out = Vec::new();
        for vmap in vertex_maps {
            // group edges by endpoint pair, then match parallel classes in every order
            let mut groups: std::collections::BTreeMap<(usize, usize), Vec<usize>> =
                Default::default();
            for (e, &(u, v)) in self.edges().iter().enumerate() {
                groups.entry((u, v)).or_default().push(e);
            }
            let pairs: Vec<(Vec<usize>, Vec<usize>)> = groups
                .iter()
                .map(|(&(u, v), src)| {
                    let (a, b) = (vmap[u], vmap[v]);
                    (src.clone(), groups[&(a.min(b), a.max(b))].clone())
                })
                .collect();
            let mut edge_map = vec![usize::MAX; self.edge_count()];
            edge_matchings(&pairs, 0, &mut edge_map, &mut |em| {
                out.push(GraphAutomorphism {
                    vertex_map: vmap.clone(),
                    edge_map: em.to_vec(),
                });
            });
            if out.len() > cap {
                return capacity(format!("more than {cap} graph automorphisms"));
            }
        }
        Ok(out)
    }
}

fn vertex_backtrack(
    g: &MarkedGraph,
    mult: &[Vec<usize>],
    cell_of: &[usize],
    v: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut Vec<Vec<usize>>,
) {
    let n = g.vertex_count();
    if v == n {
        out.push(map.clone());
        return;
    }
    for t in 0..n {
        if used[t] || cell_of[t] != cell_of[v] || g.markings_at(t) != g.markings_at(v) {
            continue;
        }
        if (0..v).any(|u| mult[u][v] != mult[map[u]][t]) || mult[v][v] != mult[t][t] {
            continue;
        }
        map[v] = t;
        used[t] = true;
        vertex_backtrack(g, mult, cell_of, v + 1, map, used, out);
        used[t] = false;
        map[v] = usize::MAX;
    }
}

fn edge_matchings(
    pairs: &[(Vec<usize>, Vec<usize>)],
    i: usize,
    edge_map: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    if i == pairs.len() {
        f(edge_map);
        return;
    }
    let (src, dst) = &pairs[i];
    for perm in permutations(dst) {
        for (a, b) in src.iter().zip(&perm) {
            edge_map[*a] = *b;
        }
        edge_matchings(pairs, i + 1, edge_map, f);
    }
}

pub(crate) fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// A graph automorphism as a vertex map together with an edge map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphAutomorphism {
    pub vertex_map: Vec<usize>,
    pub edge_map: Vec<usize>,
}

fn search_labelled(
    g: &MarkedGraph,
    label: usize,
    order: &mut Vec<usize>,
    placed: &mut Vec<bool>,
    best: &mut Option<Vec<u32>>,
) {
    if label == g.edge_count() {
        let mut order = order.clone();
        // isolated leftovers only occur for the edgeless graph
        order.extend((0..g.vertex_count()).filter(|&v| !placed[v]));
        let code = encode(g, &order, TAG_LABELLED, true);
        if best.as_ref().is_none_or(|b| code < *b) {
            *best = Some(code);
        }
        return;
    }
    let (u, v) = g.edges()[label];
    let mut fresh: Vec<usize> = [u, v].into_iter().filter(|&x| !placed[x]).collect();
    fresh.dedup();
    let orders: Vec<Vec<usize>> = if fresh.len() == 2 {
        vec![vec![fresh[0], fresh[1]], vec![fresh[1], fresh[0]]]
    } else {
        vec![fresh]
    };
    for add in orders {
        for &x in &add {
            placed[x] = true;
            order.push(x);
        }
        search_labelled(g, label + 1, order, placed, best);
        for &x in &add {
            placed[x] = false;
            order.pop();
        }
    }
}

impl EdgeLabelledGraph {
    /// Canonical code up to isomorphisms preserving markings and labels.
    pub fn canonical_code(&self) -> CanonicalCode {
        let g = self.graph();
        let mut best = None;
        let mut placed = vec![false; g.vertex_count()];
        search_labelled(g, 0, &mut Vec::new(), &mut placed, &mut best);
        CanonicalCode(best.expect("at least one leaf"))
    }

    /// Isomorphism of the underlying genus-labelled graphs respecting edge
    /// labels, ignoring markings.
    pub fn weak_isomorphic(&self, other: &EdgeLabelledGraph) -> bool {
        let a = EdgeLabelledGraph::in_edge_order(self.graph().forget_markings());
        let b = EdgeLabelledGraph::in_edge_order(other.graph().forget_markings());
        a.canonical_code() == b.canonical_code()
    }

    /// Non-loop contraction deck: the class of each single non-loop
    /// contraction together with the contracted label.
    pub fn deck(&self) -> Vec<(CanonicalCode, usize)> {
        let mut out: Vec<(CanonicalCode, usize)> = (0..self.edge_count())
            .filter(|&l| !self.graph().is_loop(l))
            .map(|l| (self.contract(l).expect("label in range").canonical_code(), l))
            .collect();
        out.sort();
        out
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::graphs::marked::EdgeLabelledGraph;

    /// Brute-force isomorphism over all vertex bijections.
    pub(crate) fn brute_isomorphic(a: &MarkedGraph, b: &MarkedGraph) -> bool {
        if a.vertex_count() != b.vertex_count()
            || a.edge_count() != b.edge_count()
            || a.marking_count() != b.marking_count()
        {
            return false;
        }
        let n = a.vertex_count();
        let ids: Vec<usize> = (0..n).collect();
        let sorted = |g: &MarkedGraph, f: &dyn Fn(usize) -> usize| {
            let mut e: Vec<(usize, usize)> = g
                .edges()
                .iter()
                .map(|&(u, v)| (f(u).min(f(v)), f(u).max(f(v))))
                .collect();
            e.sort();
            e
        };
        let target = sorted(b, &|x| x);
        permutations(&ids).into_iter().any(|p| {
            (0..n).all(|v| a.vertex_genera()[v] == b.vertex_genera()[p[v]])
                && a.markings().iter().zip(b.markings()).all(|(&x, &y)| p[x] == y)
                && sorted(a, &|x| p[x]) == target
        })
    }

    /// Brute-force labelled isomorphism: the vertex map must send the edge
    /// labelled `i` to the edge labelled `i`.
    pub(crate) fn brute_labelled_isomorphic(a: &EdgeLabelledGraph, b: &EdgeLabelledGraph) -> bool {
        let (ga, gb) = (a.graph(), b.graph());
        if ga.vertex_count() != gb.vertex_count()
            || ga.edge_count() != gb.edge_count()
            || ga.marking_count() != gb.marking_count()
        {
            return false;
        }
        let ids: Vec<usize> = (0..ga.vertex_count()).collect();
        permutations(&ids).into_iter().any(|p| {
            (0..ga.vertex_count()).all(|v| ga.vertex_genera()[v] == gb.vertex_genera()[p[v]])
                && ga.markings().iter().zip(gb.markings()).all(|(&x, &y)| p[x] == y)
                && ga.edges().iter().zip(gb.edges()).all(|(&(u, v), &(x, y))| {
                    (p[u], p[v]) == (x, y) || (p[v], p[u]) == (x, y)
                })
        })
    }

    fn theta(markings: Vec<usize>) -> MarkedGraph {
        MarkedGraph::new(vec![0, 0], vec![(0, 1); 3], markings).unwrap()
    }

    #[test]
    fn relabelling_vertices_keeps_code() {
        let a = MarkedGraph::new(vec![0, 1, 0], vec![(0, 1), (1, 2), (1, 2), (0, 0)], vec![2, 0]).unwrap();
        let b = MarkedGraph::new(vec![1, 0, 0], vec![(1, 0), (0, 2), (2, 0), (1, 1)], vec![2, 1]).unwrap();
        assert!(brute_isomorphic(&a, &b));
        assert_eq!(a.canonical_code(), b.canonical_code());
    }

    #[test]
    fn loop_placement_and_genus_distinguish() {
        let a = MarkedGraph::new(vec![0, 0], vec![(0, 0), (0, 1)], vec![0]).unwrap();
        let b = MarkedGraph::new(vec![0, 0], vec![(1, 1), (0, 1)], vec![0]).unwrap();
        assert_ne!(a.canonical_code(), b.canonical_code());
        let c = MarkedGraph::new(vec![1, 0], vec![(0, 0), (0, 1)], vec![]).unwrap();
        let d = MarkedGraph::new(vec![0, 1], vec![(0, 0), (0, 1)], vec![]).unwrap();
        assert_ne!(c.canonical_code(), d.canonical_code());
    }

    #[test]
    fn capped_code() {
        let g = MarkedGraph::new(vec![0; 3], vec![(0, 1), (1, 2)], vec![]).unwrap();
        assert!(g.canonical_code_capped(2).is_err());
        assert!(g.canonical_code_capped(3).is_ok());
    }

    #[test]
    fn automorphism_examples() {
        let auts = theta(vec![0, 1]).automorphisms(100).unwrap();
        assert_eq!(auts.len(), 6);
        assert!(auts.iter().all(|a| a.vertex_map == vec![0, 1]));
        let rose = MarkedGraph::single_vertex(0, 3, 2);
        assert_eq!(rose.automorphisms(100).unwrap().len(), 6);
        let tree = MarkedGraph::new(vec![0, 0], vec![(0, 1)], vec![0, 0, 1]).unwrap();
        assert_eq!(tree.automorphisms(100).unwrap().len(), 1);
        let sym = theta(vec![]);
        assert_eq!(sym.automorphisms(100).unwrap().len(), 12);
        assert!(sym.automorphisms(5).is_err());
    }

    #[test]
    fn labelled_codes() {
        let t = EdgeLabelledGraph::from(theta(vec![0, 1]));
        // swapping two parallel labels is realised by an automorphism
        let s = t.relabel(&[1, 0, 2]).unwrap();
        assert_eq!(t.canonical_code(), s.canonical_code());
        let path = MarkedGraph::new(vec![0; 3], vec![(0, 1), (1, 2)], vec![0, 2, 2]).unwrap();
        let p = EdgeLabelledGraph::from(path);
        let q = p.relabel(&[1, 0]).unwrap();
        assert!(!brute_labelled_isomorphic(&p, &q));
        assert_ne!(p.canonical_code(), q.canonical_code());
        assert_ne!(p.canonical_code(), p.graph().canonical_code());
    }

    #[test]
    fn weak_isomorphism_examples() {
        let a = MarkedGraph::new(vec![0, 0], vec![(0, 1)], vec![0, 1, 1]).unwrap();
        let b = MarkedGraph::new(vec![0, 0], vec![(0, 1)], vec![1, 0, 1]).unwrap();
        assert!(EdgeLabelledGraph::from(a).weak_isomorphic(&EdgeLabelledGraph::from(b)));
        let rose = EdgeLabelledGraph::from(MarkedGraph::single_vertex(0, 3, 0));
        let th = EdgeLabelledGraph::from(theta(vec![]));
        assert!(!rose.weak_isomorphic(&th));
        let c = MarkedGraph::new(vec![0, 0], vec![(0, 1), (0, 1), (1, 1)], vec![0]).unwrap();
        let lc = EdgeLabelledGraph::from(c);
        assert!(lc.weak_isomorphic(&lc.relabel(&[1, 0, 2]).unwrap()));
    }

    #[test]
    fn deck_examples() {
        let rose = EdgeLabelledGraph::from(MarkedGraph::single_vertex(0, 2, 1));
        assert!(rose.deck().is_empty());
        let tree = MarkedGraph::new(vec![0, 0], vec![(0, 1)], vec![0, 1]).unwrap();
        assert_eq!(EdgeLabelledGraph::from(tree).deck().len(), 1);
        let t = EdgeLabelledGraph::from(theta(vec![0, 1]));
        let d = t.deck();
        assert_eq!(d.len(), 3);
        assert_eq!(d.iter().map(|x| x.1).collect::<Vec<_>>(), vec![0, 1, 2]);
    }
}
