use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_bigint::BigUint;
use serde_json::{json, Value};

use super::{CheckReport, Recorder};
use crate::complex::{
    aut_complex, build_delta, induced_automorphisms, is_complex_automorphism, is_flag_g0,
    one_skeleton_g0, split_of, splits_compatible, ComplexAutGroup, ComplexAutomorphism, SymmetricDeltaComplex,
};
use crate::error::{domain, Result};
use crate::graphs::{
    enumerate_stable_graphs, one_edge_expansions, permutations, special_graphs, stable_splits,
    CanonicalCode, EdgeLabelledGraph, MarkedGraph,
};
use crate::weights::{
    aut_kw, certify_product, classify_heavy_light, factorial, realize_product, Rational,
    WeightVector,
};
use crate::Caps;

fn big(x: &BigUint) -> String {
    x.to_string()
}

/// Compares the automorphisms induced by `Aut(K_w)` with the full
/// automorphism group of `x`.
fn compare_induced(rec: &mut Recorder, x: &SymmetricDeltaComplex, group: &ComplexAutGroup, caps: &Caps) -> Result<()> {
    let kw = aut_kw(x.weights());
    let induced = induced_automorphisms(x, &kw, caps.max_group_elements)?;
    rec.note("aut_kw_order", induced.len());
    rec.note("aut_complex_order", big(&group.order));
    let mut images: BTreeMap<&ComplexAutomorphism, String> = BTreeMap::new();
    for (sigma, phi) in &induced {
        rec.expect(is_complex_automorphism(x, phi), || {
            json!({"not_an_automorphism": sigma.to_string()})
        });
        if let Some(prev) = images.insert(phi, sigma.to_string()) {
            rec.fail(json!({"not_injective": [prev, sigma.to_string()]}));
        }
    }
    let injective = images.len() == induced.len();
    let surjective = match &group.elements {
        Some(all) => {
            let missing: Vec<&ComplexAutomorphism> =
                all.iter().filter(|phi| !images.contains_key(phi)).collect();
            if let Some(phi) = missing.first() {
                rec.fail(json!({"not_induced": phi.on_vertices(), "count": missing.len()}));
            }
            for phi in images.keys() {
                rec.expect(group.contains(phi) == Some(true), || {
                    json!({"induced_outside_search": phi.on_vertices()})
                });
            }
            missing.is_empty()
        }
        None => {
            let ok = BigUint::from(images.len()) == group.order;
            rec.expect(ok, || json!({"order_mismatch": [images.len().to_string(), big(&group.order)]}));
            ok
        }
    };
    rec.note("induced_bijective", injective && surjective);
    Ok(())
}

/// The automorphisms of the complex are exactly those induced by
/// permutations of markings preserving the weight complex.
pub fn verify_main_theorem(g: u32, w: &WeightVector, caps: &Caps) -> Result<CheckReport> {
    if g == 0 || 2 * g as usize + w.len() < 5 {
        return domain(format!("needs g >= 1 and 2g - 2 + n >= 3, got g = {g}, n = {}", w.len()));
    }
    let mut rec = Recorder::new("main-theorem", json!({"g": g, "weights": w.to_string()}));
    let x = build_delta(g, w, caps)?;
    rec.note("sizes", x.sizes());
    let group = aut_complex(&x, caps)?;
    compare_induced(&mut rec, &x, &group, caps)?;
    Ok(rec.finish())
}

fn heavy_light_vector(m: usize, n: usize, eps: Rational) -> Result<WeightVector> {
    if m < 2 || n < 2 || m + n < 5 {
        return domain(format!("needs m, n >= 2 and m + n >= 5, got m = {m}, n = {n}"));
    }
    if !eps.is_positive() || eps * Rational::from_integer(m as i64) > 1 {
        return domain(format!("needs 0 < eps <= 1/m, got eps = {eps}"));
    }
    WeightVector::heavy_light(m, n, eps)
}

/// Genus zero, heavy/light weights: the automorphism group has order
/// `m!·n!`, is induced from the weight complex, and the complex is flag.
pub fn verify_heavy_light(m: usize, n: usize, eps: Rational, caps: &Caps) -> Result<CheckReport> {
    let w = heavy_light_vector(m, n, eps)?;
    let mut rec = Recorder::new(
        "heavy-light",
        json!({"m": m, "n": n, "eps": eps.to_string(), "weights": w.to_string()}),
    );
    let x = build_delta(0, &w, caps)?;
    rec.note("sizes", x.sizes());
    let group = aut_complex(&x, caps)?;
    let expected = factorial(m) * factorial(n);
    rec.note("expected_order", big(&expected));
    rec.expect(group.order == expected, || {
        json!({"order": big(&group.order), "expected": big(&expected)})
    });
    compare_induced(&mut rec, &x, &group, caps)?;
    let flag = is_flag_g0(&x)?;
    rec.note("flag", flag.is_flag);
    if let Some(c) = flag.witness {
        rec.fail(json!({"clique_without_simplex": c}));
    }
    Ok(rec.finish())
}

/// `C(2k+2, k+1) / 2`.
fn central_half(k: usize) -> BigUint {
    let top = 2 * k + 2;
    let mut c = BigUint::from(1u32);
    for i in 0..k + 1 {
        c = c * BigUint::from(top - i) / BigUint::from(i + 1);
    }
    c / BigUint::from(2u32)
}

/// For `w = (1/k)^(2k+2)` in genus zero the complex is a discrete set of
/// `C(2k+2, k+1)/2` points with the full symmetric group as automorphisms.
pub fn verify_disjoint_vertices(k: usize, caps: &Caps) -> Result<CheckReport> {
    if k == 0 {
        return domain("k must be positive");
    }
    let eps = Rational::new(1, k as i64)?;
    let w = WeightVector::uniform(eps, 2 * k + 2)?;
    let mut rec = Recorder::new("disjoint-vertices", json!({"k": k, "weights": w.to_string()}));
    let x = build_delta(0, &w, caps)?;
    let expected = central_half(k);
    rec.note("sizes", x.sizes());
    rec.note("expected_vertices", big(&expected));
    rec.expect(x.dimensions() == 1, || json!({"higher_simplices": x.sizes()}));
    rec.expect(BigUint::from(x.size(0)) == expected, || {
        json!({"vertices": x.size(0), "expected": big(&expected)})
    });
    let group = aut_complex(&x, caps)?;
    let want = factorial(x.size(0));
    rec.note("aut_order", big(&group.order));
    rec.note("aut_listed", group.elements.is_some());
    rec.expect(group.order == want, || json!({"aut_order": big(&group.order)}));
    Ok(rec.finish())
}

/// `w = (1/3^3, 7/12^3)` in genus zero: the 1-skeleton is three disjoint
/// stars with three leaves, the automorphism group has order 1296 while the
/// weight complex only has 36 symmetries.
pub fn verify_wreath_example(caps: &Caps) -> Result<CheckReport> {
    let w: WeightVector = "1/3^3,7/12^3".parse()?;
    let mut rec = Recorder::new("wreath", json!({"g": 0, "weights": w.to_string()}));
    let x = build_delta(0, &w, caps)?;
    let skel = one_skeleton_g0(&x)?;
    let comps = skel.components();
    rec.note("sizes", x.sizes());
    rec.note("skeleton_vertices", skel.vertices);
    rec.note("skeleton_edges", skel.edges.len());
    rec.note("components", comps.len());
    rec.expect(skel.vertices == 12 && skel.edges.len() == 9, || {
        json!({"skeleton": [skel.vertices, skel.edges.len()]})
    });
    rec.expect(comps.len() == 3, || json!({"components": comps}));
    for c in &comps {
        let mut deg: Vec<usize> = c.iter().map(|&v| skel.degree(v)).collect();
        deg.sort_unstable();
        rec.expect(deg == [1, 1, 1, 3], || json!({"not_a_three_leaf_star": c}));
    }
    let group = aut_complex(&x, caps)?;
    let kw = aut_kw(&w).order(caps.max_group_elements)?;
    rec.note("aut_complex_order", big(&group.order));
    rec.note("aut_kw_order", big(&kw));
    rec.expect(group.order == BigUint::from(1296u32), || json!({"aut_complex_order": big(&group.order)}));
    rec.expect(kw == BigUint::from(36u32), || json!({"aut_kw_order": big(&kw)}));
    rec.expect(group.order != kw, || json!({"orders_agree": big(&kw)}));
    Ok(rec.finish())
}

/// Labelled classes with equal non-loop contraction decks are equal, among
/// classes whose graph has first Betti number `g` and at least three
/// vertices. Collisions without the Betti restriction are reported as data.
pub fn verify_reconstruction(g: u32, w: &WeightVector, caps: &Caps) -> Result<CheckReport> {
    let mut rec = Recorder::new("reconstruction", json!({"g": g, "weights": w.to_string()}));
    let x = build_delta(g, w, caps)?;
    let mut compared = 0usize;
    let mut unrestricted_collisions = 0usize;
    for p in 0..x.dimensions() {
        let mut restricted: BTreeMap<Vec<(CanonicalCode, usize)>, Vec<usize>> = BTreeMap::new();
        let mut all: BTreeMap<Vec<(CanonicalCode, usize)>, Vec<usize>> = BTreeMap::new();
        for s in 0..x.size(p) {
            let rep = x.simplex(p, s);
            if rep.graph().vertex_count() < 3 {
                continue;
            }
            let deck = rep.deck();
            if rep.graph().first_betti() == g as usize {
                compared += 1;
                restricted.entry(deck.clone()).or_default().push(s);
            }
            all.entry(deck).or_default().push(s);
        }
        for (_, group) in restricted.iter().filter(|(_, v)| v.len() > 1) {
            rec.fail(json!({
                "dimension": p,
                "same_deck": group.iter().map(|&s| x.code(p, s).to_string()).collect::<Vec<_>>(),
            }));
        }
        unrestricted_collisions += all.values().filter(|v| v.len() > 1).count();
    }
    rec.note("classes_compared", compared);
    rec.note("unrestricted_collisions", unrestricted_collisions);
    Ok(rec.finish())
}

/// Expansion count of every stable one-edge tree against
/// `2^x − 2^y + 2^{m+n−x} − 2^{m−y} − 2 − n` (`x` markings on a side, `y`
/// of them light), and the maximizers against the special graphs.
pub fn verify_expansion_formula(m: usize, n: usize, eps: Rational) -> Result<CheckReport> {
    let w = heavy_light_vector(m, n, eps)?;
    let mut rec = Recorder::new(
        "expansion-formula",
        json!({"m": m, "n": n, "eps": eps.to_string(), "weights": w.to_string()}),
    );
    let lights: BTreeSet<usize> = classify_heavy_light(&w).light.into_iter().collect();
    let p2 = |e: usize| 1i64 << e;
    let mut counts: Vec<(CanonicalCode, usize)> = Vec::new();
    for split in stable_splits(&w) {
        let count = one_edge_expansions(&split.graph, &w, 0)?.len();
        let x = split.side.len();
        let y = split.side.iter().filter(|i| lights.contains(i)).count();
        let formula = p2(x) - p2(y) + p2(m + n - x) - p2(m - y) - 2 - n as i64;
        rec.expect(count as i64 == formula, || {
            json!({"side": split.side, "count": count, "formula": formula})
        });
        counts.push((split.graph.canonical_code(), count));
    }
    let max = counts.iter().map(|c| c.1).max().unwrap_or(0);
    let maximizers: BTreeSet<CanonicalCode> =
        counts.iter().filter(|c| c.1 == max).map(|c| c.0.clone()).collect();
    let specials: BTreeSet<CanonicalCode> =
        special_graphs(&w)?.iter().map(MarkedGraph::canonical_code).collect();
    rec.note("one_edge_classes", counts.len());
    rec.note("max_expansions", max);
    rec.note("maximizers", maximizers.len());
    rec.note("special_graphs", specials.len());
    rec.expect(maximizers == specials, || {
        json!({"maximizers": maximizers.len(), "specials": specials.len()})
    });
    Ok(rec.finish())
}

/// The constructed weight vector has `Aut(K_w) ≅ ∏ S_{n_i}`.
pub fn verify_realize_product(blocks: &[usize], caps: &Caps) -> Result<CheckReport> {
    let mut rec = Recorder::new("realize-product", json!({"blocks": blocks}));
    let w = realize_product(blocks)?;
    let group = aut_kw(&w);
    let order = group.order(caps.max_group_elements)?;
    let expected: BigUint = blocks.iter().map(|&k| factorial(k)).product();
    rec.note("weights", w.to_string());
    rec.note("order", big(&order));
    rec.note("orbit_sizes", group.orbit_sizes());
    rec.expect(order == expected, || json!({"order": big(&order), "expected": big(&expected)}));
    rec.expect(certify_product(&w, blocks, caps.max_group_elements)?, || {
        json!({"orbit_blocks": group.orbit_sizes()})
    });
    Ok(rec.finish())
}

fn rose(genus_at_vertex: u32, loops: usize, n: usize) -> EdgeLabelledGraph {
    EdgeLabelledGraph::in_edge_order(MarkedGraph::single_vertex(genus_at_vertex, loops, n))
}

/// Every automorphism preserves the vertex filtration, fixes the roses with
/// one and with `g` loops, and preserves bridge labels, cycle label sets and
/// same-vertex loop pairs on every simplex. Distinct automorphisms differ on
/// the simplices with at most two vertices.
pub fn verify_filtration_and_locals(g: u32, w: &WeightVector, caps: &Caps) -> Result<CheckReport> {
    if g == 0 {
        return domain("the filtration check needs g >= 1");
    }
    let mut rec = Recorder::new("filtration", json!({"g": g, "weights": w.to_string()}));
    let x = build_delta(g, w, caps)?;
    let group = aut_complex(&x, caps)?;
    let Some(elements) = group.elements else {
        return domain("automorphism group too large to list");
    };
    rec.note("sizes", x.sizes());
    rec.note("aut_order", elements.len());
    let n = w.len();
    let r1 = x.find(&rose(g - 1, 1, n));
    let rg = x.find(&rose(0, g as usize, n));
    rec.expect(r1.is_some() && rg.is_some(), || json!({"roses_missing": [r1.is_some(), rg.is_some()]}));
    let max_vertices = (0..x.dimensions())
        .flat_map(|p| (0..x.size(p)).map(move |s| (p, s)))
        .map(|(p, s)| x.vertex_count(p, s))
        .max()
        .unwrap_or(0);
    let locals: Vec<Vec<Value>> = (0..x.dimensions())
        .map(|p| {
            (0..x.size(p))
                .map(|s| {
                    let r = x.simplex(p, s);
                    let cycles: Vec<Vec<Vec<usize>>> =
                        (1..=p + 1).map(|k| r.cycle_index_sets(k)).collect();
                    json!([r.bridge_labels(), cycles, r.loop_pairs()])
                })
                .collect()
        })
        .collect();
    let mut restrictions = HashSet::new();
    for phi in &elements {
        for i in 1..=max_vertices {
            for p in 0..x.dimensions() {
                let v = x.v_filter(p, i);
                let moved: BTreeSet<usize> = v.iter().map(|&s| phi.apply(p, s)).collect();
                let orig: BTreeSet<usize> = v.into_iter().collect();
                rec.expect(moved == orig, || json!({"moves_filtration": i, "dimension": p}));
            }
        }
        for (name, r) in [("R_1", r1), ("R_g", rg)] {
            if let Some((p, s)) = r {
                rec.expect(phi.apply(p, s) == s, || json!({"moves_rose": name}));
            }
        }
        for p in 0..x.dimensions() {
            for s in 0..x.size(p) {
                let t = phi.apply(p, s);
                rec.expect(locals[p][s] == locals[p][t], || {
                    json!({"local_data_differs": [x.code(p, s).to_string(), x.code(p, t).to_string()]})
                });
            }
        }
        let restricted: Vec<Vec<usize>> = (0..x.dimensions())
            .map(|p| x.v_filter(p, 2).into_iter().map(|s| phi.apply(p, s)).collect())
            .collect();
        rec.expect(restrictions.insert(restricted), || json!({"restriction_not_injective": phi.on_vertices()}));
    }
    Ok(rec.finish())
}

/// The cases outside the main hypothesis: genus one with a single marking
/// is a point, and genus one with two markings of total weight at most one
/// is a single edge; both have trivial automorphism groups.
pub fn verify_excluded_cases(caps: &Caps) -> Result<CheckReport> {
    let mut rec = Recorder::new("excluded-cases", json!({}));
    let cases: [(&str, Option<Vec<usize>>); 3] = [
        ("1", Some(vec![1])),
        ("1/2", Some(vec![1])),
        ("2/5,2/5", Some(vec![1, 1])),
    ];
    for (ws, sizes) in cases {
        let w: WeightVector = ws.parse()?;
        let x = build_delta(1, &w, caps)?;
        let group = aut_complex(&x, caps)?;
        rec.note(ws, json!({"sizes": x.sizes(), "aut_order": big(&group.order)}));
        if let Some(s) = sizes {
            rec.expect(x.sizes() == s, || json!({"weights": ws, "sizes": x.sizes()}));
        }
        rec.expect(group.order == BigUint::from(1u32), || {
            json!({"weights": ws, "aut_order": big(&group.order)})
        });
    }
    Ok(rec.finish())
}

/// Every clique of the genus-zero 1-skeleton spans a simplex, and two
/// vertices are adjacent exactly when their splits are compatible.
pub fn verify_flag(w: &WeightVector, caps: &Caps) -> Result<CheckReport> {
    let mut rec = Recorder::new("flag", json!({"g": 0, "weights": w.to_string()}));
    let x = build_delta(0, w, caps)?;
    let skel = one_skeleton_g0(&x)?;
    for a in 0..skel.vertices {
        for b in a + 1..skel.vertices {
            let compatible = splits_compatible(&split_of(&x, a), &split_of(&x, b), w.len());
            rec.expect(skel.adjacent(a, b) == compatible, || {
                json!({"adjacency_differs_from_compatibility": [x.code(0, a).to_string(), x.code(0, b).to_string()]})
            });
        }
    }
    let r = is_flag_g0(&x)?;
    rec.note("sizes", x.sizes());
    rec.note("cliques_checked", r.cliques_checked);
    if let Some(c) = r.witness {
        rec.fail(json!({"clique_without_simplex": c}));
    }
    Ok(rec.finish())
}

/// Brute-force isomorphism over every vertex bijection.
fn brute_isomorphic(a: &MarkedGraph, b: &MarkedGraph, labelled: bool) -> bool {
    if a.vertex_count() != b.vertex_count()
        || a.edge_count() != b.edge_count()
        || a.marking_count() != b.marking_count()
    {
        return false;
    }
    let ids: Vec<usize> = (0..a.vertex_count()).collect();
    let norm = |u: usize, v: usize| (u.min(v), u.max(v));
    let mut target: Vec<(usize, usize)> = b.edges().to_vec();
    if !labelled {
        target.sort_unstable();
    }
    permutations(&ids).into_iter().any(|p| {
        if (0..ids.len()).any(|v| a.vertex_genera()[v] != b.vertex_genera()[p[v]])
            || a.markings().iter().zip(b.markings()).any(|(&x, &y)| p[x] != y)
        {
            return false;
        }
        let mut e: Vec<(usize, usize)> = a.edges().iter().map(|&(u, v)| norm(p[u], p[v])).collect();
        if !labelled {
            e.sort_unstable();
        }
        e == target
    })
}

/// Largest vertex count for the brute-force isomorphism comparison.
const BRUTE_FORCE_VERTICES: usize = 6;

/// Structural invariants of a built complex: simplicial and symmetric-group
/// relations, contraction preserving genus and stability, contraction order
/// independence, canonical codes against brute-force isomorphism, and the
/// labelled description of bridges.
pub fn verify_structure(g: u32, w: &WeightVector, caps: &Caps) -> Result<CheckReport> {
    let mut rec = Recorder::new("structure", json!({"g": g, "weights": w.to_string()}));
    let graphs = enumerate_stable_graphs(g, w, caps)?;
    let x = build_delta(g, w, caps)?;
    rec.note("sizes", x.sizes());
    for v in x.structure_violations() {
        rec.fail(json!({"relation": v}));
    }

    // contraction: genus, stability, order independence
    let mut contractions = 0usize;
    for p in 0..x.dimensions() {
        for s in 0..x.size(p) {
            let rep = x.simplex(p, s);
            for i in 0..=p {
                let c = rep.contract(i)?;
                contractions += 1;
                rec.expect(c.graph().genus() == g, || json!({"genus_changed": x.code(p, s).to_string(), "label": i}));
                rec.expect(p == 0 || c.graph().is_w_stable(w, g), || {
                    json!({"unstable_contraction": x.code(p, s).to_string(), "label": i})
                });
                for j in i + 1..=p {
                    let a = c.contract(j - 1)?.canonical_code();
                    let b = rep.contract(j)?.contract(i)?.canonical_code();
                    rec.expect(a == b, || json!({"order_dependent": x.code(p, s).to_string(), "labels": [i, j]}));
                }
            }
        }
    }
    rec.note("contractions_checked", contractions);

    // canonical codes against brute force, unlabelled
    let mut by_shape: BTreeMap<(usize, usize), Vec<&MarkedGraph>> = BTreeMap::new();
    for gr in graphs.all().filter(|gr| gr.vertex_count() <= BRUTE_FORCE_VERTICES) {
        by_shape.entry((gr.vertex_count(), gr.edge_count())).or_default().push(gr);
        let n = gr.vertex_count();
        let rev = MarkedGraph::new(
            gr.vertex_genera().iter().rev().copied().collect(),
            gr.edges().iter().rev().map(|&(u, v)| (n - 1 - u, n - 1 - v)).collect(),
            gr.markings().iter().map(|&v| n - 1 - v).collect(),
        )?;
        rec.expect(rev.canonical_code() == gr.canonical_code() && brute_isomorphic(gr, &rev, false), || {
            json!({"relabel_changes_code": gr.canonical_code().to_string()})
        });
    }
    let mut pairs = 0usize;
    for group in by_shape.values() {
        for (i, a) in group.iter().enumerate() {
            for b in &group[i + 1..] {
                pairs += 1;
                rec.expect(!brute_isomorphic(a, b, false), || {
                    json!({"distinct_codes_but_isomorphic": [a.canonical_code().to_string(), b.canonical_code().to_string()]})
                });
            }
        }
    }
    // labelled classes over the same graph
    for p in 0..x.dimensions() {
        let mut by_graph: BTreeMap<CanonicalCode, Vec<usize>> = BTreeMap::new();
        for s in 0..x.size(p) {
            if x.vertex_count(p, s) <= BRUTE_FORCE_VERTICES {
                by_graph.entry(x.simplex(p, s).graph().canonical_code()).or_default().push(s);
            }
        }
        for group in by_graph.values() {
            for (i, &a) in group.iter().enumerate() {
                for &b in &group[i + 1..] {
                    pairs += 1;
                    rec.expect(!brute_isomorphic(x.simplex(p, a).graph(), x.simplex(p, b).graph(), true), || {
                        json!({"labelled_duplicate": [x.code(p, a).to_string(), x.code(p, b).to_string()]})
                    });
                }
            }
        }
    }
    rec.note("brute_force_pairs", pairs);

    // bridges: keeping only label i gives a loop exactly when i is not a bridge
    if g >= 1 {
        if let Some((0, r1)) = x.find(&rose(g - 1, 1, w.len())) {
            for p in 0..x.dimensions() {
                for s in 0..x.size(p) {
                    let from_tables: Vec<usize> = (0..=p)
                        .filter(|&i| x.apply_injection(&[i], p, s).is_ok_and(|v| v != r1))
                        .collect();
                    rec.expect(from_tables == x.simplex(p, s).bridge_labels(), || {
                        json!({"bridge_mismatch": x.code(p, s).to_string()})
                    });
                }
            }
        }
    }
    Ok(rec.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn central_binomials() {
        let v: Vec<String> = (1..=4).map(|k| central_half(k).to_string()).collect();
        assert_eq!(v, ["3", "10", "35", "126"]);
    }

    #[test]
    fn hypotheses_are_enforced() {
        let caps = Caps::default();
        let q = |s: &str| s.parse::<Rational>().unwrap();
        assert!(verify_main_theorem(0, &"1^5".parse().unwrap(), &caps).is_err());
        assert!(verify_main_theorem(1, &"1,1".parse().unwrap(), &caps).is_err());
        assert!(verify_heavy_light(1, 4, q("1/2"), &caps).is_err());
        assert!(verify_heavy_light(2, 3, q("2/3"), &caps).is_err());
        assert!(verify_expansion_formula(2, 2, q("1/2")).is_err());
        assert!(verify_disjoint_vertices(0, &caps).is_err());
        assert!(verify_filtration_and_locals(0, &"1^5".parse().unwrap(), &caps).is_err());
    }

    #[test]
    fn brute_force_matches_codes_on_small_graphs() {
        let a = MarkedGraph::new(vec![0, 0, 0], vec![(0, 1), (1, 2), (1, 2)], vec![0]).unwrap();
        let b = MarkedGraph::new(vec![0, 0, 0], vec![(2, 1), (0, 1), (0, 1)], vec![2]).unwrap();
        assert!(brute_isomorphic(&a, &b, false));
        assert_eq!(a.canonical_code(), b.canonical_code());
    }
}
