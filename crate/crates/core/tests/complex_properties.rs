use std::collections::{BTreeMap, BTreeSet};

use hassett::complex::{aut_complex, build_delta, induced_automorphisms, SymmetricDeltaComplex};
use hassett::graphs::{enumerate_stable_graphs, CanonicalCode};
use hassett::weights::{aut_kw, Permutation, WeightVector};
use hassett::Caps;
use num_bigint::BigUint;

fn wv(s: &str) -> WeightVector {
    s.parse().unwrap()
}

/// Every automorphism by plain backtracking: simplices are assigned bottom
/// up and a choice is kept only when it commutes with faces and swaps
/// among already assigned simplices.
fn brute_automorphisms(x: &SymmetricDeltaComplex) -> BTreeSet<Vec<Vec<usize>>> {
    let order: Vec<(usize, usize)> = (0..x.dimensions())
        .flat_map(|p| (0..x.size(p)).map(move |s| (p, s)))
        .collect();
    let mut maps: Vec<Vec<Option<usize>>> = x.sizes().iter().map(|&n| vec![None; n]).collect();
    let mut used: Vec<Vec<bool>> = x.sizes().iter().map(|&n| vec![false; n]).collect();
    let mut out = BTreeSet::new();

    fn consistent(x: &SymmetricDeltaComplex, maps: &[Vec<Option<usize>>], p: usize, s: usize, t: usize) -> bool {
        if p > 0 && (0..=p).any(|i| maps[p - 1][x.face(p, s, i)] != Some(x.face(p, t, i))) {
            return false;
        }
        (0..p).all(|k| {
            let a = x.swap(p, s, k);
            if a == s {
                return x.swap(p, t, k) == t;
            }
            maps[p][a].is_none_or(|img| img == x.swap(p, t, k))
        }) && (0..x.size(p)).all(|r| {
            // simplices already mapped whose swap leads to s
            maps[p][r].is_none_or(|img| (0..p).all(|k| x.swap(p, r, k) != s || x.swap(p, img, k) == t))
        })
    }

    fn go(
        x: &SymmetricDeltaComplex,
        order: &[(usize, usize)],
        depth: usize,
        maps: &mut Vec<Vec<Option<usize>>>,
        used: &mut Vec<Vec<bool>>,
        out: &mut BTreeSet<Vec<Vec<usize>>>,
    ) {
        let Some(&(p, s)) = order.get(depth) else {
            out.insert(maps.iter().map(|m| m.iter().map(|v| v.unwrap()).collect()).collect());
            return;
        };
        for t in 0..x.size(p) {
            if used[p][t] || !consistent(x, maps, p, s, t) {
                continue;
            }
            maps[p][s] = Some(t);
            used[p][t] = true;
            go(x, order, depth + 1, maps, used, out);
            maps[p][s] = None;
            used[p][t] = false;
        }
    }

    go(x, &order, 0, &mut maps, &mut used, &mut out);
    out
}

#[test]
fn automorphism_search_matches_backtracking() {
    let caps = Caps::default();
    for (g, w) in [
        (1, "1/2,1/2,1/2"),
        (1, "1,1"),
        (1, "1/2,1/2"),
        (1, "1"),
        (0, "1^4"),
        (0, "1/3,1/3,1/3,1,1"),
        (0, "1/2,1/2,1,1,1"),
        (2, "1"),
        (1, "1,1,1"),
    ] {
        let x = build_delta(g, &wv(w), &caps).unwrap();
        let brute = brute_automorphisms(&x);
        let ours = aut_complex(&x, &caps).unwrap();
        assert_eq!(ours.order, BigUint::from(brute.len()), "g={g} w={w}");
        let listed: BTreeSet<Vec<Vec<usize>>> =
            ours.elements.unwrap().into_iter().map(|phi| phi.maps).collect();
        assert_eq!(listed, brute, "g={g} w={w}");
    }
}

#[test]
fn induced_maps_are_a_homomorphism() {
    let caps = Caps::default();
    for (g, w) in [(1, "1,1,1"), (0, "1/2^2,1^4"), (2, "1/2,1/2")] {
        let w = wv(w);
        let x = build_delta(g, &w, &caps).unwrap();
        let induced = induced_automorphisms(&x, &aut_kw(&w), 10_000).unwrap();
        let find = |s: &Permutation| induced.iter().find(|(t, _)| t == s).map(|(_, phi)| phi).unwrap();
        let (mut hom, mut anti) = (true, true);
        for (a, pa) in &induced {
            for (b, pb) in &induced {
                let ab = find(&a.compose(b));
                hom &= ab == &pa.compose(pb);
                anti &= ab == &pb.compose(pa);
            }
        }
        // one convention must hold throughout
        assert!(hom || anti, "g={g} w={w}");
    }
}

#[test]
fn vertex_classes_are_one_edge_graphs() {
    let caps = Caps::default();
    for (g, w) in [(1, "1,1,1"), (2, "1,1"), (0, "1/3^3,7/12^3"), (0, "1/2^6")] {
        let w = wv(w);
        let x = build_delta(g, &w, &caps).unwrap();
        let graphs = enumerate_stable_graphs(g, &w, &caps).unwrap();
        assert_eq!(x.size(0), graphs.levels[0].len());
        // labellings of G up to isomorphism: (p+1)! over the number of edge
        // permutations realised by automorphisms of G
        for p in 0..x.dimensions() {
            let mut per_graph: BTreeMap<CanonicalCode, usize> = BTreeMap::new();
            for s in 0..x.size(p) {
                *per_graph.entry(x.simplex(p, s).graph().canonical_code()).or_default() += 1;
            }
            assert_eq!(per_graph.len(), graphs.levels[p].len());
            for gr in &graphs.levels[p] {
                let edge_perms: BTreeSet<Vec<usize>> =
                    gr.automorphisms(100_000).unwrap().into_iter().map(|a| a.edge_map).collect();
                let labellings = (1..=p + 1).product::<usize>() / edge_perms.len();
                assert_eq!(per_graph[&gr.canonical_code()], labellings, "g={g} w={w}");
            }
        }
    }
}
