use std::collections::{HashMap, HashSet};

use num_bigint::BigUint;
use serde::Serialize;

use super::SymmetricDeltaComplex;
use crate::error::{capacity, domain, Result};
use crate::weights::{factorial, preserves_kw, Permutation, PermutationGroup};
use crate::Caps;

/// A family of bijections `Φ_p` on the simplices of each dimension.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ComplexAutomorphism {
    pub maps: Vec<Vec<usize>>,
}

impl ComplexAutomorphism {
    pub fn identity(x: &SymmetricDeltaComplex) -> Self {
        ComplexAutomorphism {
            maps: x.sizes().into_iter().map(|n| (0..n).collect()).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.maps.iter().all(|m| m.iter().enumerate().all(|(i, &x)| i == x))
    }

    pub fn apply(&self, p: usize, s: usize) -> usize {
        self.maps[p][s]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        ComplexAutomorphism {
            maps: self
                .maps
                .iter()
                .zip(&other.maps)
                .map(|(a, b)| b.iter().map(|&x| a[x]).collect())
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        ComplexAutomorphism {
            maps: self
                .maps
                .iter()
                .map(|m| {
                    let mut inv = vec![0; m.len()];
                    for (i, &x) in m.iter().enumerate() {
                        inv[x] = i;
                    }
                    inv
                })
                .collect(),
        }
    }

    /// Restriction to the dimension-0 simplices.
    pub fn on_vertices(&self) -> &[usize] {
        self.maps.first().map_or(&[], Vec::as_slice)
    }
}

/// Whether `phi` is a bijection in every dimension commuting with every face
/// map and every relabelling.
pub fn is_complex_automorphism(x: &SymmetricDeltaComplex, phi: &ComplexAutomorphism) -> bool {
    if phi.maps.len() != x.dimensions() {
        return false;
    }
    for p in 0..x.dimensions() {
        let m = &phi.maps[p];
        if m.len() != x.size(p) {
            return false;
        }
        let mut seen = vec![false; m.len()];
        for &t in m {
            if t >= m.len() || std::mem::replace(&mut seen[t], true) {
                return false;
            }
        }
        for s in 0..x.size(p) {
            let t = m[s];
            if p > 0 && (0..=p).any(|i| phi.maps[p - 1][x.face(p, s, i)] != x.face(p, t, i)) {
                return false;
            }
            if (0..p).any(|k| m[x.swap(p, s, k)] != x.swap(p, t, k)) {
                return false;
            }
        }
    }
    true
}

/// The automorphism group of a complex.
#[derive(Clone, Debug, Serialize)]
pub struct ComplexAutGroup {
    #[serde(serialize_with = "ser_big")]
    pub order: BigUint,
    /// Every element, when the group was enumerated.
    pub elements: Option<Vec<ComplexAutomorphism>>,
    pub generators: Vec<ComplexAutomorphism>,
}

fn ser_big<S: serde::Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

impl ComplexAutGroup {
    pub fn contains(&self, phi: &ComplexAutomorphism) -> Option<bool> {
        self.elements.as_ref().map(|e| e.binary_search(phi).is_ok())
    }
}

/// Largest all-vertex complex whose symmetric group is listed explicitly.
const MAX_LISTED_DISCRETE: usize = 8;

/// Isomorphism-invariant colouring of the simplices computed from the
/// complex alone: dimension, relabelling orbit size and coface count,
/// refined by the ordered face colours, the coface colours per face index,
/// and the colours of the adjacent relabellings.
pub(crate) fn refine_colors(x: &SymmetricDeltaComplex) -> Vec<Vec<u32>> {
    let dims = x.dimensions();
    let mut cofaces: Vec<Vec<Vec<(usize, usize)>>> =
        (0..dims).map(|p| vec![Vec::new(); x.size(p)]).collect();
    for p in 1..dims {
        for t in 0..x.size(p) {
            for i in 0..=p {
                cofaces[p - 1][x.face(p, t, i)].push((t, i));
            }
        }
    }
    let initial: Vec<Vec<Vec<u64>>> = (0..dims)
        .map(|p| {
            (0..x.size(p))
                .map(|s| vec![p as u64, x.orbit_size(p, s) as u64, cofaces[p][s].len() as u64])
                .collect()
        })
        .collect();
    let (mut colors, mut count) = rank(initial);
    loop {
        let sigs: Vec<Vec<Vec<u64>>> = (0..dims)
            .map(|p| {
                (0..x.size(p))
                    .map(|s| {
                        let mut sig = vec![colors[p][s] as u64];
                        if p > 0 {
                            sig.extend(x.faces_of(p, s).iter().map(|&f| colors[p - 1][f] as u64));
                        }
                        sig.extend(x.swaps_of(p, s).iter().map(|&y| colors[p][y] as u64));
                        let mut co: Vec<(u64, u64)> = cofaces[p][s]
                            .iter()
                            .map(|&(t, i)| (colors[p + 1][t] as u64, i as u64))
                            .collect();
                        co.sort_unstable();
                        for (c, i) in co {
                            sig.extend([c, i]);
                        }
                        sig
                    })
                    .collect()
            })
            .collect();
        let (next, n) = rank(sigs);
        if n == count {
            return colors;
        }
        colors = next;
        count = n;
    }
}

fn rank(sigs: Vec<Vec<Vec<u64>>>) -> (Vec<Vec<u32>>, usize) {
    let mut all: Vec<&Vec<u64>> = sigs.iter().flatten().collect();
    all.sort();
    all.dedup();
    let ids: HashMap<&Vec<u64>, u32> = all.iter().enumerate().map(|(i, s)| (*s, i as u32)).collect();
    let colors = sigs
        .iter()
        .map(|d| d.iter().map(|s| ids[s]).collect())
        .collect();
    (colors, all.len())
}

struct Search<'a> {
    x: &'a SymmetricDeltaComplex,
    colors: Vec<Vec<u32>>,
    /// Colours of the 1-simplices with `d_1 = a`, `d_0 = b`, keyed by `(a, b)`.
    relation: HashMap<(usize, usize), Vec<u32>>,
    by_faces: Vec<HashMap<Vec<usize>, Vec<usize>>>,
    cap: usize,
    found: Vec<ComplexAutomorphism>,
}

#[derive(Clone)]
struct State {
    maps: Vec<Vec<usize>>,
    used: Vec<Vec<bool>>,
    assigned0: Vec<usize>,
}

const UNSET: usize = usize::MAX;

impl Search<'_> {
    fn relation(&self, a: usize, b: usize) -> &[u32] {
        self.relation.get(&(a, b)).map_or(&[], Vec::as_slice)
    }

    /// Sets `Φ_p(s) = t` and everything it forces through faces and
    /// relabellings; false on any contradiction.
    fn assign(&self, st: &mut State, p: usize, s: usize, t: usize) -> bool {
        let mut queue = vec![(p, s, t)];
        while let Some((p, s, t)) = queue.pop() {
            let cur = st.maps[p][s];
            if cur != UNSET {
                if cur != t {
                    return false;
                }
                continue;
            }
            if st.used[p][t] || self.colors[p][s] != self.colors[p][t] {
                return false;
            }
            if p == 0 {
                if self.relation(s, s) != self.relation(t, t) {
                    return false;
                }
                for &a in &st.assigned0 {
                    let b = st.maps[0][a];
                    if self.relation(s, a) != self.relation(t, b)
                        || self.relation(a, s) != self.relation(b, t)
                    {
                        return false;
                    }
                }
                st.assigned0.push(s);
            }
            st.maps[p][s] = t;
            st.used[p][t] = true;
            if p > 0 {
                for i in 0..=p {
                    queue.push((p - 1, self.x.face(p, s, i), self.x.face(p, t, i)));
                }
            }
            for k in 0..p {
                queue.push((p, self.x.swap(p, s, k), self.x.swap(p, t, k)));
            }
        }
        true
    }

    fn next_unassigned(&self, st: &State) -> Option<(usize, usize)> {
        for (p, m) in st.maps.iter().enumerate() {
            if let Some(s) = m.iter().position(|&t| t == UNSET) {
                return Some((p, s));
            }
        }
        None
    }

    fn candidates(&self, st: &State, p: usize, s: usize) -> Vec<usize> {
        let pool: Vec<usize> = if p == 0 {
            (0..self.x.size(0)).collect()
        } else {
            let key: Vec<usize> = self
                .x
                .faces_of(p, s)
                .iter()
                .map(|&f| st.maps[p - 1][f])
                .collect();
            self.by_faces[p].get(&key).cloned().unwrap_or_default()
        };
        pool.into_iter()
            .filter(|&t| !st.used[p][t] && self.colors[p][t] == self.colors[p][s])
            .collect()
    }

    fn run(&mut self, st: State) -> Result<()> {
        let Some((p, s)) = self.next_unassigned(&st) else {
            let phi = ComplexAutomorphism { maps: st.maps };
            if is_complex_automorphism(self.x, &phi) {
                self.found.push(phi);
                if self.found.len() > self.cap {
                    return capacity(format!("more than {} complex automorphisms", self.cap));
                }
            }
            return Ok(());
        };
        for t in self.candidates(&st, p, s) {
            let mut next = st.clone();
            if self.assign(&mut next, p, s, t) {
                self.run(next)?;
            }
        }
        Ok(())
    }
}

/// Automorphism group of a symmetric Δ-complex by backtracking.
///
/// Dimension 0 is assigned first, pruned by colour and by the colours of the
/// 1-simplices joining each pair of vertices; higher simplices are then
/// matched by their images under the face maps. Every assignment propagates
/// through faces and relabellings. A complex with only vertices has the full
/// symmetric group; it is listed only for at most eight vertices.
pub fn aut_complex(x: &SymmetricDeltaComplex, caps: &Caps) -> Result<ComplexAutGroup> {
    if x.total() > caps.max_simplices {
        return capacity(format!("complex has more than {} simplices", caps.max_simplices));
    }
    if x.total() <= 1 {
        let id = ComplexAutomorphism::identity(x);
        return Ok(ComplexAutGroup {
            order: BigUint::from(1u32),
            elements: Some(vec![id]),
            generators: vec![],
        });
    }
    if x.dimensions() == 1 && x.size(0) > MAX_LISTED_DISCRETE {
        let n = x.size(0);
        let swap = (0..n).map(|i| if i < 2 { 1 - i } else { i }).collect();
        let cycle = (0..n).map(|i| (i + 1) % n).collect();
        return Ok(ComplexAutGroup {
            order: factorial(n),
            elements: None,
            generators: vec![
                ComplexAutomorphism { maps: vec![swap] },
                ComplexAutomorphism { maps: vec![cycle] },
            ],
        });
    }
    let colors = refine_colors(x);
    let mut relation: HashMap<(usize, usize), Vec<u32>> = HashMap::new();
    if x.dimensions() > 1 {
        for t in 0..x.size(1) {
            let key = (x.face(1, t, 1), x.face(1, t, 0));
            relation.entry(key).or_default().push(colors[1][t]);
        }
        for v in relation.values_mut() {
            v.sort_unstable();
        }
    }
    let by_faces = (0..x.dimensions())
        .map(|p| {
            let mut m: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
            if p > 0 {
                for t in 0..x.size(p) {
                    m.entry(x.faces_of(p, t).to_vec()).or_default().push(t);
                }
            }
            m
        })
        .collect();
    let mut search = Search {
        x,
        colors,
        relation,
        by_faces,
        cap: caps.max_group_elements,
        found: Vec::new(),
    };
    let st = State {
        maps: x.sizes().iter().map(|&n| vec![UNSET; n]).collect(),
        used: x.sizes().iter().map(|&n| vec![false; n]).collect(),
        assigned0: Vec::new(),
    };
    search.run(st)?;
    let mut elements = search.found;
    elements.sort();
    let generators = greedy_generators(&elements);
    Ok(ComplexAutGroup {
        order: BigUint::from(elements.len()),
        elements: Some(elements),
        generators,
    })
}

/// Subgroup generated by `gens`, as a set.
pub(crate) fn closure(
    identity: &ComplexAutomorphism,
    gens: &[ComplexAutomorphism],
) -> HashSet<ComplexAutomorphism> {
    let mut seen = HashSet::from([identity.clone()]);
    let mut stack = vec![identity.clone()];
    while let Some(a) = stack.pop() {
        for g in gens {
            let b = g.compose(&a);
            if !seen.contains(&b) {
                seen.insert(b.clone());
                stack.push(b);
            }
        }
    }
    seen
}

fn greedy_generators(elements: &[ComplexAutomorphism]) -> Vec<ComplexAutomorphism> {
    let Some(first) = elements.first() else {
        return vec![];
    };
    let identity = ComplexAutomorphism {
        maps: first.maps.iter().map(|m| (0..m.len()).collect()).collect(),
    };
    let mut gens = Vec::new();
    let mut span = HashSet::from([identity.clone()]);
    for e in elements {
        if !span.contains(e) {
            gens.push(e.clone());
            span = closure(&identity, &gens);
        }
    }
    gens
}

/// The automorphism induced by moving marking `i` to `σ(i)` on every
/// simplex. Only permutations preserving the weight complex keep graphs
/// stable.
pub fn sn_induced_automorphism(
    x: &SymmetricDeltaComplex,
    sigma: &Permutation,
) -> Result<ComplexAutomorphism> {
    if sigma.degree() != x.weights().len() {
        return domain("permutation degree differs from the number of markings");
    }
    if !preserves_kw(x.weights(), sigma) {
        return domain(format!("{sigma} does not preserve the weight complex"));
    }
    let mut maps = Vec::new();
    for p in 0..x.dimensions() {
        let mut m = Vec::with_capacity(x.size(p));
        for s in 0..x.size(p) {
            let moved = x.simplex(p, s).permute_markings(sigma)?;
            match x.lookup(p, &moved.canonical_code()) {
                Some(t) => m.push(t),
                None => return domain(format!("{sigma} moves a simplex out of the complex")),
            }
        }
        maps.push(m);
    }
    Ok(ComplexAutomorphism { maps })
}

/// The induced automorphism of every element of `group`.
pub fn induced_automorphisms(
    x: &SymmetricDeltaComplex,
    group: &PermutationGroup,
    cap: usize,
) -> Result<Vec<(Permutation, ComplexAutomorphism)>> {
    group
        .elements(cap)?
        .into_iter()
        .map(|s| Ok((s.clone(), sn_induced_automorphism(x, &s)?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::build_delta;
    use crate::weights::{aut_kw, WeightVector};

    fn build(g: u32, s: &str) -> SymmetricDeltaComplex {
        build_delta(g, &s.parse().unwrap(), &Caps::default()).unwrap()
    }

    fn order(x: &SymmetricDeltaComplex) -> BigUint {
        aut_complex(x, &Caps::default()).unwrap().order
    }

    #[test]
    fn small_orders() {
        assert_eq!(order(&build(1, "1/2,1/2")), BigUint::from(1u32));
        assert_eq!(order(&build(1, "2/5,2/5")), BigUint::from(1u32));
        assert_eq!(order(&build(0, "1^4")), BigUint::from(6u32));
        assert_eq!(order(&build(0, "1/3^3,7/12^3")), BigUint::from(1296u32));
    }

    #[test]
    fn discrete_complexes_are_symbolic() {
        let x = build(0, "1/2^6");
        assert_eq!(x.sizes(), vec![10]);
        let a = aut_complex(&x, &Caps::default()).unwrap();
        assert_eq!(a.order, factorial(10));
        assert!(a.elements.is_none());
        for gen in &a.generators {
            assert!(is_complex_automorphism(&x, gen));
        }
    }

    #[test]
    fn induced_examples() {
        let x = build(1, "1^3");
        let id = sn_induced_automorphism(&x, &Permutation::identity(3)).unwrap();
        assert!(id.is_identity());
        let t = sn_induced_automorphism(&x, &Permutation::transposition(3, 0, 1)).unwrap();
        assert!(!t.is_identity());
        assert!(t.compose(&t).is_identity());
        assert!(is_complex_automorphism(&x, &t));

        let w: WeightVector = "1/3^3,7/12^3".parse().unwrap();
        let y = build_delta(0, &w, &Caps::default()).unwrap();
        assert!(sn_induced_automorphism(&y, &Permutation::transposition(6, 0, 3)).is_err());
        let group = aut_kw(&w);
        for (_, phi) in induced_automorphisms(&y, &group, 1000).unwrap() {
            assert!(is_complex_automorphism(&y, &phi));
        }
    }

    #[test]
    fn generators_span_the_group() {
        let x = build(0, "1/3^3,7/12^3");
        let a = aut_complex(&x, &Caps::default()).unwrap();
        let id = ComplexAutomorphism::identity(&x);
        assert_eq!(closure(&id, &a.generators).len(), 1296);
    }

    #[test]
    fn group_cap() {
        let x = build(0, "1/3^3,7/12^3");
        let caps = Caps {
            max_group_elements: 100,
            ..Caps::default()
        };
        assert!(aut_complex(&x, &caps).is_err());
    }
}
