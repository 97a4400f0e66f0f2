//! The weight complex `K_w` and the permutation groups read off from it.

use serde::Serialize;

use super::perm::{factorial, Permutation, PermutationGroup};
use super::vector::mask_to_vec;
use super::{Rational, WeightVector};
use crate::error::{input, Error, Result};

/// `K_w`: the simplicial complex on the markings whose faces are the
/// subsets of total weight at most one. Facets are computed on
/// construction.
#[derive(Clone, Debug)]
pub struct WeightComplex {
    weights: WeightVector,
    facets: Vec<Vec<usize>>,
}

impl WeightComplex {
    pub fn new(weights: WeightVector) -> Self {
        let facets = kw_facets(&weights);
        WeightComplex { weights, facets }
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn contains(&self, set: &[usize]) -> Result<bool> {
        kw_contains(&self.weights, set)
    }
}

pub fn kw_contains(w: &WeightVector, set: &[usize]) -> Result<bool> {
    Ok(w.weight_of_subset(set)? <= Rational::one())
}

/// Calls `f(mask, weight)` for every subset of `indices` with weight at
/// most `bound`. Weights are positive, so branches exceeding the bound are
/// cut.
fn for_each_subset_below(
    w: &WeightVector,
    indices: &[usize],
    bound: Rational,
    f: &mut impl FnMut(u32, Rational),
) {
    fn go(
        w: &WeightVector,
        indices: &[usize],
        pos: usize,
        mask: u32,
        sum: Rational,
        bound: Rational,
        f: &mut impl FnMut(u32, Rational),
    ) {
        if pos == indices.len() {
            f(mask, sum);
            return;
        }
        go(w, indices, pos + 1, mask, sum, bound, f);
        let i = indices[pos];
        let s = sum + w.get(i);
        if s <= bound {
            go(w, indices, pos + 1, mask | (1 << i), s, bound, f);
        }
    }
    go(w, indices, 0, 0, Rational::zero(), bound, f);
}

/// Every face of `K_w` as a mask, including the empty face.
pub fn kw_faces(w: &WeightVector) -> Vec<u32> {
    let all: Vec<usize> = (0..w.len()).collect();
    let mut out = Vec::new();
    for_each_subset_below(w, &all, Rational::one(), &mut |m, _| out.push(m));
    out.sort_unstable();
    out
}

/// Maximal faces of `K_w`, each sorted, in lexicographic order.
pub fn kw_facets(w: &WeightVector) -> Vec<Vec<usize>> {
    let n = w.len();
    let all: Vec<usize> = (0..n).collect();
    let mut facets = Vec::new();
    for_each_subset_below(w, &all, Rational::one(), &mut |mask, sum| {
        // downward closure: a face is maximal iff no single point extends it
        let extendable = (0..n).any(|i| mask & (1 << i) == 0 && sum + w.get(i) <= Rational::one());
        if !extendable {
            facets.push(mask_to_vec(mask));
        }
    });
    facets.sort();
    facets
}

pub fn kw_has_one_dimensional_facet(w: &WeightVector) -> bool {
    kw_facets(w).iter().any(|f| f.len() == 2)
}

fn check_pair(w: &WeightVector, i: usize, j: usize) -> Result<()> {
    if i >= w.len() || j >= w.len() {
        return input(format!("marking pair ({}, {}) out of range", i + 1, j + 1));
    }
    if i == j {
        return input("a transposition needs two distinct markings");
    }
    Ok(())
}

/// Whether swapping markings `i` and `j` maps faces of `K_w` to faces.
///
/// With `w_a ≤ w_b` for `{a, b} = {i, j}` the swap fails exactly when some
/// `T` avoiding both has `1 − w_b < w(T) ≤ 1 − w_a`.
pub fn is_transposition_automorphism(w: &WeightVector, i: usize, j: usize) -> Result<bool> {
    check_pair(w, i, j)?;
    let (light, heavy) = if w.get(i) <= w.get(j) { (i, j) } else { (j, i) };
    if w.get(light) == w.get(heavy) {
        return Ok(true);
    }
    let lo = Rational::one() - w.get(heavy);
    let hi = Rational::one() - w.get(light);
    let rest: Vec<usize> = (0..w.len()).filter(|&k| k != i && k != j).collect();
    let mut hit = false;
    for_each_subset_below(w, &rest, hi, &mut |_, s| {
        if s > lo {
            hit = true;
        }
    });
    Ok(!hit)
}

fn all_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

/// Transpositions of markings that preserve `K_w`.
pub fn kw_transpositions(w: &WeightVector) -> Vec<(usize, usize)> {
    all_pairs(w.len())
        .filter(|&(i, j)| is_transposition_automorphism(w, i, j).unwrap_or(false))
        .collect()
}

/// `Aut(K_w)`, generated by the transpositions that preserve `K_w`.
pub fn aut_kw(w: &WeightVector) -> PermutationGroup {
    PermutationGroup::from_transpositions(w.len(), &kw_transpositions(w))
        .expect("pairs are in range")
}

/// Whether an arbitrary permutation of markings preserves `K_w`, by
/// checking every face.
pub fn preserves_kw(w: &WeightVector, sigma: &Permutation) -> bool {
    let one = Rational::one();
    kw_faces(w).into_iter().all(|m| {
        let image: Vec<usize> = mask_to_vec(m).into_iter().map(|x| sigma.apply(x)).collect();
        w.weight_of_subset(&image).map(|s| s <= one).unwrap_or(false)
    })
}

/// How the sets `S` are quantified in the admissible-transposition test.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub enum AdmissibleQuantifier {
    /// `S` ranges over subsets of the other markings (`S ∩ {i,j} = ∅`).
    #[default]
    DisjointFromPair,
    /// `S` ranges over all subsets with `|S| ≥ 2`.
    Unrestricted,
}

/// Pairs `(i, j)`, `i < j`, with `w_i + w(S) ≤ 1 ⇔ w_j + w(S) ≤ 1` for
/// every `S` with `|S| ≥ 2`.
pub fn admissible_transpositions(
    w: &WeightVector,
    quantifier: AdmissibleQuantifier,
) -> Vec<(usize, usize)> {
    let n = w.len();
    let one = Rational::one();
    all_pairs(n)
        .filter(|&(i, j)| {
            let pair = (1u32 << i) | (1u32 << j);
            (0..=w.full_mask()).all(|s| {
                if s.count_ones() < 2 {
                    return true;
                }
                if quantifier == AdmissibleQuantifier::DisjointFromPair && s & pair != 0 {
                    return true;
                }
                let ws = w.weight_of_mask(s);
                (w.get(i) + ws <= one) == (w.get(j) + ws <= one)
            })
        })
        .collect()
}

/// Subgroup generated by the admissible transpositions.
pub fn aut_mbar(w: &WeightVector, quantifier: AdmissibleQuantifier) -> PermutationGroup {
    PermutationGroup::from_transpositions(w.len(), &admissible_transpositions(w, quantifier))
        .expect("pairs are in range")
}

/// Averages `w` over the orbits of `Aut(K_w)`.
///
/// The set of vectors with a given weight complex is cut out by the
/// inequalities `w(S) ≤ 1` / `w(S) > 1`, so it is convex, and the orbit
/// average is a convex combination of the permuted vectors `w ∘ σ`, each
/// of which has the same weight complex. The result is therefore reached
/// in one step; the facets are compared afterwards.
pub fn symmetrize(w: &WeightVector) -> Result<WeightVector> {
    let group = aut_kw(w);
    let mut out = w.weights().to_vec();
    for orbit in group.orbits() {
        let sum: Rational = orbit.iter().map(|&i| w.get(i)).sum();
        let mean = sum / Rational::from_integer(orbit.len() as i64);
        for &i in &orbit {
            out[i] = mean;
        }
    }
    let sym = WeightVector::new(out)?;
    if kw_facets(&sym) != kw_facets(w) {
        return Err(Error::Input(format!(
            "orbit averaging changed the weight complex of {w}"
        )));
    }
    Ok(sym)
}

/// Checks that `Aut(K_w)` is the product of symmetric groups of the given
/// block sizes: orders agree, the orbits of size at least two have the
/// requested sizes, and each orbit carries its full symmetric group.
pub fn certify_product(w: &WeightVector, block_sizes: &[usize], cap: usize) -> Result<bool> {
    let group = aut_kw(w);
    let expected: num_bigint::BigUint = block_sizes.iter().map(|&k| factorial(k)).product();
    if group.order(cap)? != expected {
        return Ok(false);
    }
    let mut want: Vec<usize> = block_sizes.iter().copied().filter(|&k| k > 1).collect();
    want.sort_unstable();
    let got: Vec<usize> = group.orbit_sizes().into_iter().filter(|&k| k > 1).collect();
    if got != want {
        return Ok(false);
    }
    group.certify_symmetric_product(cap)
}

/// Weight vector whose `Aut(K_w)` is `∏ S_{n_i}` for the given sizes.
///
/// The first block is a run of ones. The next block of size at least two
/// is a run of `1/n_k`, making the vector heavy/light. Each further block
/// adds a partner weight `1 − ε/n_k` together with `n_k` copies of
/// `ε/n_k`, where `ε` is the current smallest weight. Blocks of size one
/// after the first contribute the trivial group and are skipped, so the
/// output may have fewer orbits of size one than requested. Partner
/// weights are fixed points. If a candidate fails certification, `ε` is
/// halved and the step retried.
pub fn realize_product(block_sizes: &[usize]) -> Result<WeightVector> {
    if block_sizes.is_empty() || block_sizes.contains(&0) {
        return input("block sizes must be a nonempty list of positive integers");
    }
    let total: usize = block_sizes.iter().map(|k| k + 1).sum();
    if total > super::MAX_MARKINGS + 1 {
        return input("block sizes too large for the supported number of markings");
    }
    let mut weights = vec![Rational::one(); block_sizes[0]];
    let mut placed = vec![block_sizes[0]];
    let mut have_light_run = false;
    for &size in &block_sizes[1..] {
        if size == 1 {
            continue;
        }
        placed.push(size);
        let k = Rational::from_integer(size as i64);
        if !have_light_run {
            have_light_run = true;
            weights.extend(std::iter::repeat_n(Rational::one() / k, size));
            let candidate = WeightVector::new(weights.clone())?;
            if !certify_product(&candidate, &placed, usize::MAX)? {
                return Err(Error::Input(format!("construction failed for blocks {placed:?}")));
            }
            continue;
        }
        let mut eps = *weights.iter().min().expect("nonempty");
        let mut done = false;
        for _ in 0..24 {
            let mut trial = weights.clone();
            trial.push(Rational::one() - eps / k);
            trial.extend(std::iter::repeat_n(eps / k, size));
            let candidate = WeightVector::new(trial.clone())?;
            if certify_product(&candidate, &placed, usize::MAX)? {
                weights = trial;
                done = true;
                break;
            }
            eps = eps / Rational::from_integer(2);
        }
        if !done {
            return Err(Error::Input(format!("construction failed for blocks {placed:?}")));
        }
    }
    WeightVector::new(weights)
}

/// Heavy, light and remaining markings of a weight vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HeavyLight {
    /// `w_i + w_j > 1` for every `j ≠ i`.
    pub heavy: Vec<usize>,
    /// Not heavy, and `w(S) < 1 ⇒ w(S) + w_i ≤ 1` for every `S` avoiding `i`.
    pub light: Vec<usize>,
    pub neither: Vec<usize>,
    /// Every marking heavy or light, at least one of each, lights summing
    /// to at most one.
    pub is_heavy_light: bool,
}

pub fn classify_heavy_light(w: &WeightVector) -> HeavyLight {
    let n = w.len();
    let one = Rational::one();
    let is_heavy = |i: usize| (0..n).all(|j| j == i || w.get(i) + w.get(j) > one);
    let is_light = |i: usize| {
        let others: Vec<usize> = (0..n).filter(|&k| k != i).collect();
        let mut ok = true;
        for_each_subset_below(w, &others, one, &mut |_, s| {
            if s < one && s + w.get(i) > one {
                ok = false;
            }
        });
        ok
    };
    let mut out = HeavyLight {
        heavy: vec![],
        light: vec![],
        neither: vec![],
        is_heavy_light: false,
    };
    for i in 0..n {
        if is_heavy(i) {
            out.heavy.push(i);
        } else if is_light(i) {
            out.light.push(i);
        } else {
            out.neither.push(i);
        }
    }
    let light_sum: Rational = out.light.iter().map(|&i| w.get(i)).sum();
    out.is_heavy_light = out.neither.is_empty()
        && !out.heavy.is_empty()
        && !out.light.is_empty()
        && light_sum <= one;
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;
    use proptest::prelude::*;

    fn wv(s: &str) -> WeightVector {
        s.parse().unwrap()
    }

    fn sets(v: &[&[usize]]) -> Vec<Vec<usize>> {
        // 1-based literal sets to 0-based
        let mut out: Vec<Vec<usize>> = v.iter().map(|s| s.iter().map(|x| x - 1).collect()).collect();
        out.sort();
        out
    }

    /// Brute force over every subset: the oracle for facets.
    fn facets_oracle(w: &WeightVector) -> Vec<Vec<usize>> {
        let n = w.len();
        let faces: Vec<u32> = (0..1u32 << n)
            .filter(|&m| w.weight_of_mask(m) <= Rational::one())
            .collect();
        let mut out: Vec<Vec<usize>> = faces
            .iter()
            .filter(|&&f| !faces.iter().any(|&g| g != f && g & f == f))
            .map(|&f| mask_to_vec(f))
            .collect();
        out.sort();
        out
    }

    /// Brute force: the swap maps every face to a face.
    fn transposition_oracle(w: &WeightVector, i: usize, j: usize) -> bool {
        let t = Permutation::transposition(w.len(), i, j);
        (0..1u32 << w.len()).all(|m| {
            if w.weight_of_mask(m) > Rational::one() {
                return true;
            }
            let img: Vec<usize> = mask_to_vec(m).iter().map(|&x| t.apply(x)).collect();
            w.weight_of_subset(&img).unwrap() <= Rational::one()
        })
    }

    #[test]
    fn membership_examples() {
        let w = wv("1/3^3,7/12^3");
        assert!(kw_contains(&w, &[0, 1, 2]).unwrap());
        assert!(!kw_contains(&w, &[3, 4]).unwrap());
        for i in 0..6 {
            assert!(kw_contains(&w, &[i]).unwrap());
        }
        assert!(kw_contains(&w, &[9]).is_err());
    }

    #[test]
    fn facet_examples() {
        assert_eq!(kw_facets(&wv("1/2^3")), sets(&[&[1, 2], &[1, 3], &[2, 3]]));
        assert_eq!(kw_facets(&wv("1^3")), sets(&[&[1], &[2], &[3]]));
        let mut expected = vec![vec![0, 1, 2]];
        for i in 0..3 {
            for j in 3..6 {
                expected.push(vec![i, j]);
            }
        }
        expected.sort();
        assert_eq!(kw_facets(&wv("1/3^3,7/12^3")), expected);
    }

    #[test]
    fn one_dimensional_facets() {
        assert!(kw_has_one_dimensional_facet(&wv("1/2^3")));
        assert!(!kw_has_one_dimensional_facet(&wv("1/4^4")));
        assert!(kw_has_one_dimensional_facet(&wv("1/3^3,7/12^3")));
    }

    #[test]
    fn transposition_examples() {
        let w = wv("1,1,1/2,1/2");
        assert!(is_transposition_automorphism(&w, 2, 3).unwrap());
        assert!(!is_transposition_automorphism(&w, 0, 2).unwrap());
        let w = wv("1/3^3,7/12^3");
        assert!(!is_transposition_automorphism(&w, 0, 3).unwrap());
        assert!(is_transposition_automorphism(&w, 0, 0).is_err());
    }

    #[test]
    fn aut_kw_orders() {
        let order = |s: &str| aut_kw(&wv(s)).order(1_000_000).unwrap();
        assert_eq!(order("1^3"), BigUint::from(6u32));
        assert_eq!(order("1/3^3,7/12^3"), BigUint::from(36u32));
        assert_eq!(order("1,1,1/2,1/2"), BigUint::from(4u32));
        assert_eq!(aut_kw(&wv("1/3^3,7/12^3")).orbit_sizes(), vec![3, 3]);
    }

    #[test]
    fn admissible_examples() {
        let q = AdmissibleQuantifier::DisjointFromPair;
        assert_eq!(admissible_transpositions(&wv("1,1,1/2,1/2"), q).len(), 6);
        assert_eq!(admissible_transpositions(&wv("1^3"), q).len(), 3);
        let within = admissible_transpositions(&wv("1/3^3,7/12^3"), q);
        assert_eq!(within, vec![(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]);
    }

    #[test]
    fn aut_mbar_examples() {
        let q = AdmissibleQuantifier::DisjointFromPair;
        let order = |s: &str| aut_mbar(&wv(s), q).order(1_000_000).unwrap();
        assert_eq!(order("1,1,1/2,1/2"), BigUint::from(24u32));
        assert_eq!(order("1/2^3"), BigUint::from(6u32));
        assert_eq!(order("1/4^4"), BigUint::from(24u32));
    }

    #[test]
    fn symmetrize_examples() {
        assert_eq!(symmetrize(&wv("1^3")).unwrap(), wv("1^3"));
        assert_eq!(symmetrize(&wv("1/2,1/3")).unwrap(), wv("5/12,5/12"));
        assert_eq!(symmetrize(&wv("1,1,1/2,1/2")).unwrap(), wv("1,1,1/2,1/2"));
    }

    #[test]
    fn realize_product_examples() {
        let w = realize_product(&[4]).unwrap();
        assert_eq!(w, wv("1^4"));
        let w = realize_product(&[2, 3]).unwrap();
        assert!(w.len() == 5 || w.len() == 6);
        assert_eq!(aut_kw(&w).order(1000).unwrap(), BigUint::from(12u32));
        assert_eq!(
            aut_kw(&w).orbit_sizes().into_iter().filter(|&k| k > 1).collect::<Vec<_>>(),
            vec![2, 3]
        );
        let w = realize_product(&[1]).unwrap();
        assert_eq!(w, wv("1"));
        assert_eq!(aut_kw(&w).order(10).unwrap(), BigUint::from(1u32));
        assert!(realize_product(&[]).is_err());
        assert!(realize_product(&[2, 0]).is_err());
    }

    #[test]
    fn realize_longer_products() {
        for blocks in [vec![2, 2, 2], vec![3, 2, 4], vec![2, 1, 3], vec![1, 4], vec![2, 2, 2, 2]] {
            let w = realize_product(&blocks).unwrap();
            assert!(certify_product(&w, &blocks, 1_000_000).unwrap(), "{blocks:?} -> {w}");
        }
    }

    #[test]
    fn heavy_light_examples() {
        let c = classify_heavy_light(&wv("1/4,1/4,1,1,1"));
        assert_eq!(c.light, vec![0, 1]);
        assert_eq!(c.heavy, vec![2, 3, 4]);
        assert!(c.is_heavy_light);

        // No marking is heavy (7/12 + 1/3 ≤ 1). None is light either:
        // S = {1/3, 7/12} has weight 11/12 < 1 and adding 1/3 exceeds 1,
        // and S = {7/12} rules out the heavier weights.
        let c = classify_heavy_light(&wv("1/3^3,7/12^3"));
        assert!(c.heavy.is_empty());
        assert!(c.light.is_empty());
        assert_eq!(c.neither.len(), 6);
        assert!(!c.is_heavy_light);

        let c = classify_heavy_light(&wv("1^3"));
        assert_eq!(c.heavy, vec![0, 1, 2]);
        assert!(c.light.is_empty());
        assert!(!c.is_heavy_light);
    }

    fn small_vectors() -> impl Strategy<Value = WeightVector> {
        proptest::collection::vec((1i64..=12, 1i64..=12), 1..=8).prop_map(|v| {
            WeightVector::new(
                v.into_iter()
                    .map(|(a, b)| Rational::new(a.min(b), b).unwrap())
                    .collect(),
            )
            .unwrap()
        })
    }

    proptest! {
        #[test]
        fn facets_match_brute_force(w in small_vectors()) {
            let facets = kw_facets(&w);
            prop_assert_eq!(&facets, &facets_oracle(&w));
            for a in &facets {
                for b in &facets {
                    if a != b {
                        prop_assert!(!a.iter().all(|x| b.contains(x)));
                    }
                }
            }
        }

        #[test]
        fn transposition_test_matches_brute_force(w in small_vectors()) {
            for (i, j) in all_pairs(w.len()) {
                prop_assert_eq!(
                    is_transposition_automorphism(&w, i, j).unwrap(),
                    transposition_oracle(&w, i, j)
                );
            }
        }

        #[test]
        fn faces_are_downward_closed(w in small_vectors()) {
            let faces = kw_faces(&w);
            for &f in &faces {
                let mut sub = f;
                while sub != 0 {
                    sub = (sub - 1) & f;
                    prop_assert!(faces.binary_search(&sub).is_ok());
                }
            }
        }

        #[test]
        fn every_group_element_preserves_kw(w in small_vectors()) {
            let g = aut_kw(&w);
            let elems = g.elements(50_000).unwrap();
            for s in elems.iter().take(200) {
                prop_assert!(preserves_kw(&w, s));
            }
            let n: usize = (1..=w.len()).product();
            prop_assert_eq!(n % elems.len(), 0);
        }

        #[test]
        fn symmetrize_properties(w in small_vectors()) {
            let s = symmetrize(&w).unwrap();
            prop_assert_eq!(symmetrize(&s).unwrap(), s.clone());
            prop_assert_eq!(kw_facets(&s), kw_facets(&w));
            prop_assert!(aut_kw(&s).same_subgroup(&aut_kw(&w), 100_000).unwrap());
            for orbit in aut_kw(&s).orbits() {
                prop_assert!(orbit.iter().all(|&i| s.get(i) == s.get(orbit[0])));
            }
        }

        #[test]
        fn no_edge_facets_means_equal_groups(w in small_vectors()) {
            if !kw_has_one_dimensional_facet(&w) && w.len() >= 2 {
                let a = aut_mbar(&w, AdmissibleQuantifier::DisjointFromPair);
                prop_assert!(a.same_subgroup(&aut_kw(&w), 100_000).unwrap());
            }
        }

        #[test]
        fn kw_transpositions_are_admissible(w in small_vectors()) {
            let adm = admissible_transpositions(&w, AdmissibleQuantifier::DisjointFromPair);
            for p in kw_transpositions(&w) {
                prop_assert!(adm.contains(&p));
            }
        }

        #[test]
        fn realize_product_certifies(blocks in proptest::collection::vec(1usize..=4, 1..=3)) {
            let w = realize_product(&blocks).unwrap();
            prop_assert!(certify_product(&w, &blocks, 1_000_000).unwrap());
        }
    }
}
