use std::collections::BTreeSet;

use hassett::weights::{aut_kw, realize_product, symmetrize, Rational, WeightVector};
use proptest::prelude::*;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn faces(w: &WeightVector) -> BTreeSet<Vec<usize>> {
    let n = w.len();
    (0u32..1 << n)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect::<Vec<usize>>())
        .filter(|s| s.iter().map(|&i| w.get(i)).sum::<Rational>() <= Rational::one())
        .collect()
}

/// Permutations of the markings that map faces to faces.
fn brute_aut(w: &WeightVector) -> BTreeSet<Vec<usize>> {
    let f = faces(w);
    permutations(w.len())
        .into_iter()
        .filter(|p| {
            f.iter().all(|s| {
                let mut t: Vec<usize> = s.iter().map(|&i| p[i]).collect();
                t.sort_unstable();
                f.contains(&t)
            })
        })
        .collect()
}

fn arb_weights() -> impl Strategy<Value = WeightVector> {
    prop::collection::vec((1i64..=12).prop_flat_map(|d| (1..=d, Just(d))), 1..=6)
        .prop_map(|v| WeightVector::new(v.into_iter().map(|(a, b)| Rational::new(a, b).unwrap()).collect()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn transposition_group_is_the_full_automorphism_group(w in arb_weights()) {
        let brute = brute_aut(&w);
        let ours: BTreeSet<Vec<usize>> = aut_kw(&w)
            .elements(10_000)
            .unwrap()
            .into_iter()
            .map(|p| p.images().to_vec())
            .collect();
        prop_assert_eq!(ours, brute);
    }

    #[test]
    fn symmetrizing_keeps_the_complex(w in arb_weights()) {
        let s = symmetrize(&w).unwrap();
        prop_assert_eq!(faces(&s), faces(&w));
        for p in aut_kw(&w).elements(10_000).unwrap() {
            for i in 0..w.len() {
                prop_assert_eq!(s.get(i), s.get(p.apply(i)));
            }
        }
    }
}

#[test]
fn realized_products_have_the_requested_blocks() {
    for blocks in [vec![3], vec![2, 2], vec![2, 3], vec![1, 4], vec![3, 2], vec![2, 2, 2]] {
        let w = realize_product(&blocks).unwrap();
        let aut = brute_aut(&w);
        let want: usize = blocks.iter().map(|&k| (1..=k).product::<usize>()).product();
        assert_eq!(aut.len(), want, "blocks {blocks:?} weights {w}");
        // orbits of the brute-force group, nontrivial sizes only
        let mut sizes: Vec<usize> = (0..w.len())
            .map(|i| aut.iter().map(|p| p[i]).collect::<BTreeSet<_>>().len())
            .collect::<Vec<_>>();
        sizes.retain(|&s| s > 1);
        let mut expected: Vec<usize> = blocks.iter().filter(|&&k| k > 1).flat_map(|&k| vec![k; k]).collect();
        sizes.sort_unstable();
        expected.sort_unstable();
        assert_eq!(sizes, expected, "blocks {blocks:?}");
    }
}
