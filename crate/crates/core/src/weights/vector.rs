use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Rational;
use crate::error::{domain, input, Error, Result};

/// Largest number of markings accepted; subsets are handled as `u32` masks
/// and scanned exhaustively.
pub const MAX_MARKINGS: usize = 24;

/// Weight vector `w ∈ ℚ^n ∩ (0,1]^n`.
///
/// Indices are 0-based in the API; text output uses 1-based markings.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeightVector {
    weights: Vec<Rational>,
}

impl WeightVector {
    pub fn new(weights: Vec<Rational>) -> Result<Self> {
        if weights.is_empty() {
            return input("weight vector must have at least one entry");
        }
        if weights.len() > MAX_MARKINGS {
            return input(format!(
                "{} markings exceeds the supported maximum {MAX_MARKINGS}",
                weights.len()
            ));
        }
        for (i, w) in weights.iter().enumerate() {
            if !w.is_positive() || *w > 1 {
                return input(format!("weight w_{} = {w} is not in (0,1]", i + 1));
            }
        }
        Ok(WeightVector { weights })
    }

    /// `n` copies of the same weight.
    pub fn uniform(value: Rational, n: usize) -> Result<Self> {
        Self::new(vec![value; n])
    }

    /// Heavy/light vector `(ε^(m), 1^(n))`.
    pub fn heavy_light(m: usize, n: usize, eps: Rational) -> Result<Self> {
        let mut w = vec![eps; m];
        w.extend(std::iter::repeat_n(Rational::one(), n));
        Self::new(w)
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn get(&self, i: usize) -> Rational {
        self.weights[i]
    }

    pub fn total(&self) -> Rational {
        self.weights.iter().sum()
    }

    /// Mask with every marking set.
    pub fn full_mask(&self) -> u32 {
        if self.len() == 32 {
            u32::MAX
        } else {
            (1u32 << self.len()) - 1
        }
    }

    /// Requires `2g − 2 + Σ w_i > 0`.
    pub fn check_genus(&self, g: u32) -> Result<()> {
        let lhs = Rational::from_integer(2 * g as i64 - 2) + self.total();
        if lhs.is_positive() {
            Ok(())
        } else {
            domain(format!("2g - 2 + sum(w) = {lhs} is not positive for g = {g}, w = {self}"))
        }
    }

    pub fn mask_of(&self, set: &[usize]) -> Result<u32> {
        let mut mask = 0u32;
        for &i in set {
            if i >= self.len() {
                return input(format!("marking index {} out of range 1..={}", i + 1, self.len()));
            }
            mask |= 1 << i;
        }
        Ok(mask)
    }

    pub fn weight_of_mask(&self, mask: u32) -> Rational {
        let mut total = Rational::zero();
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            total = total + self.weights[i];
            m &= m - 1;
        }
        total
    }

    /// `w(S) = Σ_{i∈S} w_i`; repeated indices count once.
    pub fn weight_of_subset(&self, set: &[usize]) -> Result<Rational> {
        Ok(self.weight_of_mask(self.mask_of(set)?))
    }
}

pub(crate) fn mask_to_vec(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask & (1 << i) != 0).collect()
}

impl FromStr for WeightVector {
    type Err = Error;

    /// Comma-separated rationals, each optionally followed by `^k` for
    /// `k` repetitions: `"1/3^3,7/12^3"`.
    fn from_str(s: &str) -> Result<Self> {
        let mut weights = Vec::new();
        for part in s.split(',') {
            let part = part.trim();
            if part.is_empty() {
                return input(format!("empty entry in weight list {s:?}"));
            }
            let (value, reps) = match part.split_once('^') {
                Some((v, k)) => {
                    let k: usize = k
                        .trim()
                        .parse()
                        .map_err(|_| Error::Input(format!("bad repetition count in {part:?}")))?;
                    if k == 0 {
                        return input(format!("repetition count must be positive in {part:?}"));
                    }
                    (v, k)
                }
                None => (part, 1),
            };
            let r: Rational = value.parse()?;
            if reps > MAX_MARKINGS {
                return input(format!("repetition count {reps} too large"));
            }
            weights.extend(std::iter::repeat_n(r, reps));
        }
        WeightVector::new(weights)
    }
}

impl fmt::Display for WeightVector {
    /// Run-length form using the `^k` shorthand, re-parseable by `FromStr`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.weights.len() {
            let mut j = i;
            while j < self.weights.len() && self.weights[j] == self.weights[i] {
                j += 1;
            }
            if j - i == 1 {
                parts.push(self.weights[i].to_string());
            } else {
                parts.push(format!("{}^{}", self.weights[i], j - i));
            }
            i = j;
        }
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeightVector({self})")
    }
}

impl Serialize for WeightVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.weights.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for WeightVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let w = Vec::<Rational>::deserialize(deserializer)?;
        WeightVector::new(w).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn parse_shorthand() {
        let w: WeightVector = "1/3^3,7/12^3".parse().unwrap();
        assert_eq!(w.len(), 6);
        assert_eq!(w.get(0), q("1/3"));
        assert_eq!(w.get(5), q("7/12"));
        assert_eq!(w.to_string(), "1/3^3,7/12^3");
        let w: WeightVector = " 1, 1 ,1/2^2".parse().unwrap();
        assert_eq!(w.to_string(), "1^2,1/2^2");
    }

    #[test]
    fn rejects_out_of_range() {
        assert!("0".parse::<WeightVector>().is_err());
        assert!("3/2".parse::<WeightVector>().is_err());
        assert!("-1/2".parse::<WeightVector>().is_err());
        assert!("1/2^0".parse::<WeightVector>().is_err());
        assert!("1/2,,1".parse::<WeightVector>().is_err());
        assert!("".parse::<WeightVector>().is_err());
    }

    #[test]
    fn weight_of_subset_examples() {
        let w: WeightVector = "1/3^3,7/12^3".parse().unwrap();
        assert_eq!(w.weight_of_subset(&[0, 3]).unwrap(), q("11/12"));
        assert_eq!(w.weight_of_subset(&[]).unwrap(), Rational::zero());
        let h: WeightVector = "1/2,1/2".parse().unwrap();
        assert_eq!(h.weight_of_subset(&[0, 1]).unwrap(), 1);
        assert!(matches!(h.weight_of_subset(&[2]), Err(Error::Input(_))));
    }

    #[test]
    fn genus_condition() {
        let w: WeightVector = "1/2,1/2".parse().unwrap();
        assert!(w.check_genus(1).is_ok());
        assert!(w.check_genus(0).is_err());
        let w: WeightVector = "1^3".parse().unwrap();
        assert!(w.check_genus(0).is_ok());
    }

    #[test]
    fn json_is_array_of_fractions() {
        let w: WeightVector = "1/2,1".parse().unwrap();
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(s, r#"[{"num":1,"den":2},{"num":1,"den":1}]"#);
        let back: WeightVector = serde_json::from_str(&s).unwrap();
        assert_eq!(back, w);
    }

    proptest! {
        #[test]
        fn display_round_trips(entries in proptest::collection::vec((1i64..=12, 1i64..=12), 1..10)) {
            let ws: Vec<Rational> = entries
                .into_iter()
                .map(|(a, b)| Rational::new(a.min(b), b).unwrap())
                .collect();
            let w = WeightVector::new(ws).unwrap();
            let back: WeightVector = w.to_string().parse().unwrap();
            prop_assert_eq!(back, w);
        }
    }
}
