use std::collections::{HashSet, VecDeque};
use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{capacity, input, Result};

/// A bijection of `{0, .., n-1}` stored as its image list.
///
/// Composition follows function notation: `a.compose(&b)` maps `x` to
/// `a(b(x))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return input(format!("not a bijection of 0..{n}: {images:?}"));
            }
            seen[x] = true;
        }
        Ok(Permutation(images))
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut p = Self::identity(n);
        p.0.swap(i, j);
        p
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// The swapped pair when this is a transposition.
    pub fn as_transposition(&self) -> Option<(usize, usize)> {
        let moved: Vec<usize> = (0..self.0.len()).filter(|&i| self.0[i] != i).collect();
        match moved[..] {
            [a, b] if self.0[a] == b => Some((a, b)),
            _ => None,
        }
    }

    /// Image of a set of points.
    pub fn image_of_set(&self, set: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = set.iter().map(|&x| self.0[x]).collect();
        out.sort_unstable();
        out
    }

    /// Disjoint cycles of length at least two, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] == start {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut x = self.0[start];
            while x != start {
                seen[x] = true;
                cyc.push(x);
                x = self.0[x];
            }
            out.push(cyc);
        }
        out
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation on 1-based points, `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Subgroup of the symmetric group on `degree` points, given by generators.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::from(1u32), |acc, k| acc * BigUint::from(k))
}

impl PermutationGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return input(format!(
                    "generator {g} has degree {} but the group has degree {degree}",
                    g.degree()
                ));
            }
        }
        let mut generators: Vec<Permutation> =
            generators.into_iter().filter(|g| !g.is_identity()).collect();
        generators.sort();
        generators.dedup();
        Ok(PermutationGroup { degree, generators })
    }

    pub fn trivial(degree: usize) -> Self {
        PermutationGroup {
            degree,
            generators: Vec::new(),
        }
    }

    pub fn symmetric(degree: usize) -> Self {
        let gens = (1..degree)
            .map(|i| Permutation::transposition(degree, i - 1, i))
            .collect();
        PermutationGroup {
            degree,
            generators: gens,
        }
    }

    pub fn from_transpositions(degree: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut gens = Vec::with_capacity(pairs.len());
        for &(i, j) in pairs {
            if i >= degree || j >= degree || i == j {
                return input(format!("bad transposition ({i},{j}) on {degree} points"));
            }
            gens.push(Permutation::transposition(degree, i, j));
        }
        Self::new(degree, gens)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn is_generated_by_transpositions(&self) -> bool {
        self.generators.iter().all(|g| g.as_transposition().is_some())
    }

    /// Orbits of the generated group, each sorted, ordered by least element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.degree).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for g in &self.generators {
            for x in 0..self.degree {
                let (a, b) = (find(&mut parent, x), find(&mut parent, g.apply(x)));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut root_block = vec![usize::MAX; self.degree];
        for x in 0..self.degree {
            let r = find(&mut parent, x);
            if root_block[r] == usize::MAX {
                root_block[r] = blocks.len();
                blocks.push(Vec::new());
            }
            blocks[root_block[r]].push(x);
        }
        blocks
    }

    /// Sizes of the orbits, sorted ascending.
    pub fn orbit_sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.orbits().iter().map(Vec::len).collect();
        s.sort_unstable();
        s
    }

    /// All elements, by breadth-first closure under the generators.
    pub fn elements(&self, cap: usize) -> Result<Vec<Permutation>> {
        let id = Permutation::identity(self.degree);
        let mut seen: HashSet<Permutation> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(id.clone());
        queue.push_back(id);
        while let Some(x) = queue.pop_front() {
            for g in &self.generators {
                let y = g.compose(&x);
                if !seen.contains(&y) {
                    if seen.len() >= cap {
                        return capacity(format!(
                            "group element enumeration exceeded {cap} elements"
                        ));
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let mut out: Vec<Permutation> = seen.into_iter().collect();
        out.sort();
        Ok(out)
    }

    /// Group order. Transposition-generated groups are the direct product
    /// of the full symmetric groups on their orbits, so no enumeration is
    /// needed there; other groups are enumerated up to `cap`.
    pub fn order(&self, cap: usize) -> Result<BigUint> {
        if self.is_generated_by_transpositions() {
            Ok(self
                .orbits()
                .iter()
                .map(|o| factorial(o.len()))
                .product())
        } else {
            Ok(BigUint::from(self.elements(cap)?.len()))
        }
    }

    pub fn contains(&self, p: &Permutation, cap: usize) -> Result<bool> {
        if p.degree() != self.degree {
            return Ok(false);
        }
        if self.is_generated_by_transpositions() {
            let mut block_of = vec![0; self.degree];
            for (b, orbit) in self.orbits().iter().enumerate() {
                for &x in orbit {
                    block_of[x] = b;
                }
            }
            return Ok((0..self.degree).all(|x| block_of[x] == block_of[p.apply(x)]));
        }
        Ok(self.elements(cap)?.binary_search(p).is_ok())
    }

    /// Equality as subgroups of the symmetric group.
    pub fn same_subgroup(&self, other: &PermutationGroup, cap: usize) -> Result<bool> {
        if self.degree != other.degree {
            return Ok(false);
        }
        for g in &self.generators {
            if !other.contains(g, cap)? {
                return Ok(false);
            }
        }
        for g in &other.generators {
            if !self.contains(g, cap)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Structural certificate that the group is the direct product of the
    /// full symmetric groups on its orbits: within each orbit the
    /// transposition generators must connect every point. For groups that
    /// are small enough the enumerated order is compared with the product
    /// of orbit factorials as an independent check.
    pub fn certify_symmetric_product(&self, cap: usize) -> Result<bool> {
        let orbits = self.orbits();
        let expected: BigUint = orbits.iter().map(|o| factorial(o.len())).product();
        if expected <= BigUint::from(cap) {
            let n = self.elements(cap)?.len();
            return Ok(BigUint::from(n) == expected);
        }
        if self.is_generated_by_transpositions() {
            // a connected set of transpositions generates the full
            // symmetric group on the points it touches
            return Ok(true);
        }
        capacity("cannot certify a large group not generated by transpositions")
    }
}
