use std::collections::{BTreeMap, HashMap, HashSet};

use crate::error::{capacity, input, Error, Result};
use crate::graphs::{enumerate_stable_graphs, permutations, CanonicalCode, EdgeLabelledGraph};
use crate::weights::{Permutation, WeightVector};
use crate::Caps;

/// The symmetric Δ-complex of stable tropical curves of genus `g` with
/// weights `w`.
///
/// `p`-simplices are classes of stable graphs with `p + 1` edges carrying
/// a bijective edge labelling onto `{0..p}`. The face `d_i` contracts the
/// edge labelled `i`; `s_k` swaps labels `k` and `k + 1`. Within each
/// dimension simplices are sorted by canonical code.
#[derive(Clone, Debug)]
pub struct SymmetricDeltaComplex {
    genus: u32,
    weights: WeightVector,
    reps: Vec<Vec<EdgeLabelledGraph>>,
    codes: Vec<Vec<CanonicalCode>>,
    index: Vec<HashMap<CanonicalCode, usize>>,
    faces: Vec<Vec<Vec<usize>>>,
    swaps: Vec<Vec<Vec<usize>>>,
}

impl SymmetricDeltaComplex {
    pub fn build(g: u32, w: &WeightVector, caps: &Caps) -> Result<Self> {
        let graphs = enumerate_stable_graphs(g, w, caps)?;
        let mut classes: Vec<BTreeMap<CanonicalCode, EdgeLabelledGraph>> = Vec::new();
        let mut total = 0usize;
        for (level, gs) in graphs.levels.iter().enumerate() {
            let mut dim = BTreeMap::new();
            let ids: Vec<usize> = (0..=level).collect();
            for graph in gs {
                for labels in permutations(&ids) {
                    let lg = EdgeLabelledGraph::new(graph, &labels)?;
                    let code = lg.canonical_code();
                    if let std::collections::btree_map::Entry::Vacant(e) = dim.entry(code) {
                        total += 1;
                        if total > caps.max_simplices {
                            return capacity(format!(
                                "more than {} simplices",
                                caps.max_simplices
                            ));
                        }
                        e.insert(lg);
                    }
                }
            }
            classes.push(dim);
        }
        Self::from_classes(g, w.clone(), classes)
    }

    fn from_classes(
        genus: u32,
        weights: WeightVector,
        classes: Vec<BTreeMap<CanonicalCode, EdgeLabelledGraph>>,
    ) -> Result<Self> {
        let mut reps = Vec::new();
        let mut codes = Vec::new();
        let mut index = Vec::new();
        for dim in classes {
            let (c, r): (Vec<_>, Vec<_>) = dim.into_iter().unzip();
            index.push(c.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect());
            codes.push(c);
            reps.push(r);
        }
        let mut x = SymmetricDeltaComplex {
            genus,
            weights,
            reps,
            codes,
            index,
            faces: Vec::new(),
            swaps: Vec::new(),
        };
        x.fill_tables()?;
        Ok(x)
    }

    fn fill_tables(&mut self) -> Result<()> {
        let mut faces = Vec::new();
        let mut swaps = Vec::new();
        for p in 0..self.reps.len() {
            let mut fp = Vec::with_capacity(self.reps[p].len());
            let mut sp = Vec::with_capacity(self.reps[p].len());
            for rep in &self.reps[p] {
                let mut f = Vec::new();
                if p > 0 {
                    for i in 0..=p {
                        let code = rep.contract(i)?.canonical_code();
                        f.push(self.lookup(p - 1, &code).ok_or_else(|| {
                            Error::Domain(format!("face {i} of a {p}-simplex is missing"))
                        })?);
                    }
                }
                let mut s = Vec::new();
                for k in 0..p {
                    let code = rep.swap_adjacent(k).canonical_code();
                    s.push(self.lookup(p, &code).expect("relabelling stays in dimension"));
                }
                fp.push(f);
                sp.push(s);
            }
            faces.push(fp);
            swaps.push(sp);
        }
        self.faces = faces;
        self.swaps = swaps;
        Ok(())
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    /// Number of nonempty dimensions.
    pub fn dimensions(&self) -> usize {
        self.reps.len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.reps.iter().map(Vec::len).collect()
    }

    pub fn size(&self, p: usize) -> usize {
        self.reps.get(p).map_or(0, Vec::len)
    }

    pub fn total(&self) -> usize {
        self.reps.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.total() == 0
    }

    /// Representative labelled graph of simplex `s` in dimension `p`.
    pub fn simplex(&self, p: usize, s: usize) -> &EdgeLabelledGraph {
        &self.reps[p][s]
    }

    pub fn code(&self, p: usize, s: usize) -> &CanonicalCode {
        &self.codes[p][s]
    }

    pub fn lookup(&self, p: usize, code: &CanonicalCode) -> Option<usize> {
        self.index.get(p)?.get(code).copied()
    }

    /// Index of the class of `g`.
    pub fn find(&self, g: &EdgeLabelledGraph) -> Option<(usize, usize)> {
        let p = g.edge_count().checked_sub(1)?;
        Some((p, self.lookup(p, &g.canonical_code())?))
    }

    /// `d_i` of simplex `s` in dimension `p ≥ 1`.
    pub fn face(&self, p: usize, s: usize, i: usize) -> usize {
        self.faces[p][s][i]
    }

    pub fn faces_of(&self, p: usize, s: usize) -> &[usize] {
        &self.faces[p][s]
    }

    /// `s_k` of simplex `s` in dimension `p`, `k < p`.
    pub fn swap(&self, p: usize, s: usize, k: usize) -> usize {
        self.swaps[p][s][k]
    }

    pub fn swaps_of(&self, p: usize, s: usize) -> &[usize] {
        &self.swaps[p][s]
    }

    pub fn vertex_count(&self, p: usize, s: usize) -> usize {
        self.reps[p][s].graph().vertex_count()
    }

    /// `α^*` with `α^*[G, τ] = [G, α⁻¹ ∘ τ]`, applied as a word in the
    /// adjacent transpositions.
    pub fn permute(&self, p: usize, s: usize, alpha: &Permutation) -> Result<usize> {
        if alpha.degree() != p + 1 {
            return input(format!("permutation of degree {} on a {p}-simplex", alpha.degree()));
        }
        let inv = alpha.inverse();
        Ok(self.apply_relabel(p, s, inv.images()))
    }

    /// Applies adjacent swaps until the edge currently labelled `c` carries
    /// label `target[c]`.
    fn apply_relabel(&self, p: usize, s: usize, target: &[usize]) -> usize {
        let mut target = target.to_vec();
        let mut cur = s;
        loop {
            let mut changed = false;
            for k in 0..p {
                if target[k] > target[k + 1] {
                    target.swap(k, k + 1);
                    cur = self.swap(p, cur, k);
                    changed = true;
                }
            }
            if !changed {
                return cur;
            }
        }
    }

    fn check_injection(&self, iota: &[usize], q: usize) -> Result<()> {
        if iota.is_empty() || iota.len() > q + 1 {
            return input("an injection needs between 1 and q + 1 points");
        }
        let mut seen = HashSet::new();
        for &x in iota {
            if x > q || !seen.insert(x) {
                return input(format!("{iota:?} is not an injection into 0..={q}"));
            }
        }
        if q >= self.dimensions() {
            return input(format!("no simplices in dimension {q}"));
        }
        Ok(())
    }

    /// `ι^*` for an injection `ι: [p] → [q]` given as `iota[j] = ι(j)`.
    ///
    /// Factors `ι = α ∘ ι₀` with `ι₀` the standard inclusion, applying `α^*`
    /// and then `d_q, …, d_{p+1}`.
    pub fn apply_injection(&self, iota: &[usize], q: usize, s: usize) -> Result<usize> {
        self.check_injection(iota, q)?;
        let p = iota.len() - 1;
        let mut alpha: Vec<usize> = iota.to_vec();
        alpha.extend((0..=q).filter(|x| !iota.contains(x)));
        let alpha = Permutation::from_images(alpha)?;
        let mut cur = self.permute(q, s, &alpha)?;
        for i in (p + 1..=q).rev() {
            cur = self.face(i, cur, i);
        }
        Ok(cur)
    }

    /// `ι^*` through the other factorization `ι = ι_sorted ∘ β`: faces first,
    /// then a permutation of `[p]`.
    pub fn apply_injection_faces_first(&self, iota: &[usize], q: usize, s: usize) -> Result<usize> {
        self.check_injection(iota, q)?;
        let mut image = iota.to_vec();
        image.sort_unstable();
        let mut cur = s;
        let mut dim = q;
        for i in (0..=q).rev() {
            if !image.contains(&i) {
                cur = self.face(dim, cur, i);
                dim -= 1;
            }
        }
        let beta: Vec<usize> = iota
            .iter()
            .map(|x| image.binary_search(x).expect("in image"))
            .collect();
        self.permute(dim, cur, &Permutation::from_images(beta)?)
    }

    /// `ι^*` computed on the representative graph, without the tables.
    pub fn apply_injection_direct(&self, iota: &[usize], q: usize, s: usize) -> Result<usize> {
        self.check_injection(iota, q)?;
        let p = iota.len() - 1;
        let rep = self.simplex(q, s);
        let mut labels = vec![usize::MAX; q + 1];
        for (j, &x) in iota.iter().enumerate() {
            labels[x] = j;
        }
        let mut next = p + 1;
        for l in labels.iter_mut().filter(|l| **l == usize::MAX) {
            *l = next;
            next += 1;
        }
        let keep: Vec<usize> = (0..=p).collect();
        let g = rep.relabel(&labels)?.contract_complement(&keep)?;
        self.lookup(p, &g.canonical_code())
            .ok_or_else(|| Error::Domain("contraction left the complex".into()))
    }

    /// Dimension-0 classes under each edge of simplex `s`.
    pub fn vertices_of(&self, p: usize, s: usize) -> Vec<usize> {
        (0..=p)
            .map(|j| self.apply_injection(&[j], p, s).expect("valid injection"))
            .collect()
    }

    /// Size of the orbit of `s` under the relabelling action.
    pub fn orbit_size(&self, p: usize, s: usize) -> usize {
        let mut seen = HashSet::from([s]);
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &y in self.swaps_of(p, x) {
                if seen.insert(y) {
                    stack.push(y);
                }
            }
        }
        seen.len()
    }

    /// Number of relabelling orbits in dimension `p`, i.e. of underlying
    /// unlabelled graphs with `p + 1` edges.
    pub fn orbit_count(&self, p: usize) -> usize {
        let mut seen = vec![false; self.size(p)];
        let mut count = 0;
        for s in 0..self.size(p) {
            if seen[s] {
                continue;
            }
            count += 1;
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(x) = stack.pop() {
                for &y in self.swaps_of(p, x) {
                    if !std::mem::replace(&mut seen[y], true) {
                        stack.push(y);
                    }
                }
            }
        }
        count
    }

    /// Restriction to simplices whose graphs have at most `i` vertices.
    pub fn v_subcomplex(&self, i: usize) -> Result<Self> {
        if i == 0 {
            return input("the vertex bound must be positive");
        }
        let mut classes = Vec::new();
        for p in 0..self.dimensions() {
            let dim: BTreeMap<CanonicalCode, EdgeLabelledGraph> = (0..self.size(p))
                .filter(|&s| self.vertex_count(p, s) <= i)
                .map(|s| (self.codes[p][s].clone(), self.reps[p][s].clone()))
                .collect();
            if dim.is_empty() {
                break;
            }
            classes.push(dim);
        }
        Self::from_classes(self.genus, self.weights.clone(), classes)
    }

    /// Indices in dimension `p` of the simplices with at most `i` vertices.
    pub fn v_filter(&self, p: usize, i: usize) -> Vec<usize> {
        (0..self.size(p)).filter(|&s| self.vertex_count(p, s) <= i).collect()
    }

    /// Violations of the simplicial identities, the relations of the
    /// symmetric groups, and the compatibilities between faces and swaps.
    pub fn structure_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for p in 0..self.dimensions() {
            for s in 0..self.size(p) {
                self.check_simplex(p, s, &mut out);
            }
        }
        out
    }

    fn check_simplex(&self, p: usize, s: usize, out: &mut Vec<String>) {
        let sw = |x: usize, k: usize| self.swap(p, x, k);
        for k in 0..p {
            if sw(sw(s, k), k) != s {
                out.push(format!("s_{k}^2 != id on ({p},{s})"));
            }
            if k + 1 < p {
                let mut x = s;
                for _ in 0..3 {
                    x = sw(sw(x, k + 1), k);
                }
                if x != s {
                    out.push(format!("(s_{k} s_{})^3 != id on ({p},{s})", k + 1));
                }
            }
            for j in k + 2..p {
                if sw(sw(s, j), k) != sw(sw(s, k), j) {
                    out.push(format!("s_{k} s_{j} != s_{j} s_{k} on ({p},{s})"));
                }
            }
        }
        if p == 0 {
            return;
        }
        let d = |q: usize, x: usize, i: usize| self.face(q, x, i);
        for j in 0..=p {
            for i in 0..j {
                if p >= 2 && d(p - 1, d(p, s, j), i) != d(p - 1, d(p, s, i), j - 1) {
                    out.push(format!("d_{i} d_{j} != d_{} d_{i} on ({p},{s})", j - 1));
                }
            }
        }
        for i in 0..=p {
            for k in 0..p {
                let lhs = d(p, sw(s, k), i);
                let rhs = if k + 1 < i {
                    self.swap(p - 1, d(p, s, i), k)
                } else if k > i {
                    self.swap(p - 1, d(p, s, i), k - 1)
                } else if k == i {
                    d(p, s, i + 1)
                } else {
                    d(p, s, i - 1)
                };
                if lhs != rhs {
                    out.push(format!("d_{i} s_{k} relation fails on ({p},{s})"));
                }
            }
        }
    }
}

/// Builds the complex for genus `g` and weights `w`.
pub fn build_delta(g: u32, w: &WeightVector, caps: &Caps) -> Result<SymmetricDeltaComplex> {
    SymmetricDeltaComplex::build(g, w, caps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(g: u32, s: &str) -> SymmetricDeltaComplex {
        build_delta(g, &s.parse().unwrap(), &Caps::default()).unwrap()
    }

    #[test]
    fn sizes() {
        assert_eq!(build(1, "1/2,1/2").sizes(), vec![1, 1]);
        assert_eq!(build(0, "1^4").sizes(), vec![3]);
        // each two-edge path has distinguishable ends, so two labelled classes
        let x = build(0, "1/3^3,7/12^3");
        assert_eq!(x.sizes(), vec![12, 18]);
        assert_eq!(x.orbit_count(1), 9);
    }

    #[test]
    fn tables_satisfy_relations() {
        for (g, w) in [(1, "1^3"), (0, "1^5"), (2, "1"), (1, "1,1,1/2")] {
            let x = build(g, w);
            assert!(x.structure_violations().is_empty(), "{g} {w}");
        }
    }

    #[test]
    fn injections_agree() {
        let x = build(1, "1^3");
        let q = x.dimensions() - 1;
        let ids: Vec<usize> = (0..=q).collect();
        for s in 0..x.size(q) {
            assert_eq!(x.apply_injection(&ids, q, s).unwrap(), s);
            for i in 0..=q {
                let iota: Vec<usize> = (0..=q).filter(|&j| j != i).collect();
                assert_eq!(x.apply_injection(&iota, q, s).unwrap(), x.face(q, s, i));
            }
            for perm in permutations(&ids) {
                for len in 1..=q + 1 {
                    let iota = &perm[..len];
                    let a = x.apply_injection(iota, q, s).unwrap();
                    assert_eq!(a, x.apply_injection_faces_first(iota, q, s).unwrap());
                    assert_eq!(a, x.apply_injection_direct(iota, q, s).unwrap());
                }
            }
        }
        assert!(x.apply_injection(&[0, 0], q, 0).is_err());
        assert!(x.apply_injection(&[q + 1], q, 0).is_err());
    }

    #[test]
    fn filtration() {
        let x = build(2, "1");
        let v1 = x.v_subcomplex(1).unwrap();
        for p in 0..v1.dimensions() {
            for s in 0..v1.size(p) {
                assert_eq!(v1.vertex_count(p, s), 1);
            }
        }
        assert!(v1.structure_violations().is_empty());
        let mut prev = 0;
        for i in 1..=3 {
            let t = x.v_subcomplex(i).unwrap().total();
            assert!(t >= prev);
            prev = t;
        }
        assert_eq!(prev, x.total());
        let y = build(1, "1/2,1/2");
        assert_eq!(y.v_subcomplex(2).unwrap().sizes(), y.sizes());
        assert!(y.v_subcomplex(0).is_err());
    }

    #[test]
    fn capacity_is_reported() {
        let caps = Caps {
            max_simplices: 5,
            ..Caps::default()
        };
        assert!(matches!(
            build_delta(0, &"1^5".parse().unwrap(), &caps),
            Err(Error::Capacity(_))
        ));
    }
}
