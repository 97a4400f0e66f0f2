use std::collections::BTreeSet;

use serde::Serialize;

use super::SymmetricDeltaComplex;
use crate::error::{domain, Result};

/// Graph on the dimension-0 simplices of a genus-zero complex: two vertices
/// are adjacent when they are the two edges of a common 1-simplex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OneSkeleton {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

impl OneSkeleton {
    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp: Vec<usize> = (0..self.vertices).collect();
        fn find(c: &mut [usize], x: usize) -> usize {
            if c[x] != x {
                let r = find(c, c[x]);
                c[x] = r;
            }
            c[x]
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut comp, a), find(&mut comp, b));
            comp[ra.max(rb)] = ra.min(rb);
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for v in 0..self.vertices {
            let r = find(&mut comp, v);
            groups.entry(r).or_default().push(v);
        }
        groups.into_values().collect()
    }

    /// Every clique with at least two vertices, each sorted.
    pub fn cliques(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        self.extend_cliques(0, &mut cur, &mut out);
        out
    }

    fn extend_cliques(&self, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        for v in start..self.vertices {
            if cur.iter().all(|&u| self.adjacent(u, v)) {
                cur.push(v);
                if cur.len() >= 2 {
                    out.push(cur.clone());
                }
                self.extend_cliques(v + 1, cur, out);
                cur.pop();
            }
        }
    }
}

fn require_genus_zero(x: &SymmetricDeltaComplex) -> Result<()> {
    if x.genus() != 0 {
        return domain(format!("genus {} is not zero", x.genus()));
    }
    Ok(())
}

pub fn one_skeleton_g0(x: &SymmetricDeltaComplex) -> Result<OneSkeleton> {
    require_genus_zero(x)?;
    let mut edges = BTreeSet::new();
    for t in 0..x.size(1) {
        let (a, b) = (x.face(1, t, 0), x.face(1, t, 1));
        if a != b {
            edges.insert((a.min(b), a.max(b)));
        }
    }
    Ok(OneSkeleton {
        vertices: x.size(0),
        edges: edges.into_iter().collect(),
    })
}

/// Markings on the side of a one-edge tree that carries marking 0.
pub fn split_of(x: &SymmetricDeltaComplex, s: usize) -> Vec<usize> {
    let g = x.simplex(0, s).graph();
    g.markings_at(g.markings()[0])
}

/// Two splits of `{0..n-1}` are compatible when one of the four
/// intersections of sides is empty.
pub fn splits_compatible(a: &[usize], b: &[usize], n: usize) -> bool {
    let a: BTreeSet<usize> = a.iter().copied().collect();
    let b: BTreeSet<usize> = b.iter().copied().collect();
    let all: BTreeSet<usize> = (0..n).collect();
    let ac: BTreeSet<usize> = all.difference(&a).copied().collect();
    let bc: BTreeSet<usize> = all.difference(&b).copied().collect();
    a.is_disjoint(&b) || a.is_disjoint(&bc) || ac.is_disjoint(&b) || ac.is_disjoint(&bc)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlagResult {
    pub is_flag: bool,
    /// A clique of the 1-skeleton spanning no simplex.
    pub witness: Option<Vec<usize>>,
    pub cliques_checked: usize,
}

/// Whether every clique of the 1-skeleton is the vertex set of a simplex.
pub fn is_flag_g0(x: &SymmetricDeltaComplex) -> Result<FlagResult> {
    let skel = one_skeleton_g0(x)?;
    let mut spans = BTreeSet::new();
    for p in 0..x.dimensions() {
        for s in 0..x.size(p) {
            let mut v = x.vertices_of(p, s);
            v.sort_unstable();
            v.dedup();
            if v.len() == p + 1 {
                spans.insert(v);
            }
        }
    }
    let cliques = skel.cliques();
    let witness = cliques.iter().find(|c| !spans.contains(*c)).cloned();
    Ok(FlagResult {
        is_flag: witness.is_none(),
        witness,
        cliques_checked: cliques.len(),
    })
}
