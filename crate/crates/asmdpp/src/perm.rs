//! Permutations in one-line notation and their inversion words.
//!
//! The inversion word of a permutation `sigma` of size `n` is the sequence
//! `(a_1, ..., a_{n-1})` where `a_k` counts the inversions opened at
//! position `k`, i.e. `a_k = #{ j > k : sigma(j) < sigma(k) }`. The bounds
//! `0 <= a_k <= n - k` always hold, the entries sum to `inv(sigma)`, and
//! every sequence within the bounds decodes to a unique permutation, so
//! inversion words are just another encoding of permutations.
//!
//! For the example word `sigma = (3 5 2 4 6 1)` the inversion word is
//! `(2, 3, 1, 1, 1)`. (Read through the inverse permutation, `a_k` is the
//! number of elements greater than `k` standing to the left of `k`.)

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("word of length {len} is not a permutation: {reason}")]
    NotAPermutation { len: usize, reason: String },
    #[error("inversion word entry a_{index} = {value} is out of bounds (0 ..= {max})")]
    WordOutOfBounds { index: usize, value: i64, max: u32 },
}

impl PermError {
    /// Stable taxonomy name of the violated condition.
    pub fn name(&self) -> &'static str {
        match self {
            PermError::NotAPermutation { .. } => "NotAPermutation",
            PermError::WordOutOfBounds { .. } => "WordOutOfBounds",
        }
    }
}

/// A permutation of `{1, ..., n}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    word: Vec<u32>,
}

impl Permutation {
    /// Validates a one-line word (1-based values).
    pub fn new(word: Vec<i64>) -> Result<Self, PermError> {
        let n = word.len();
        let mut seen = vec![false; n];
        for &v in &word {
            if v < 1 || v as usize > n {
                return Err(PermError::NotAPermutation {
                    len: n,
                    reason: format!("value {v} is outside 1..={n}"),
                });
            }
            if seen[v as usize - 1] {
                return Err(PermError::NotAPermutation {
                    len: n,
                    reason: format!("value {v} appears twice"),
                });
            }
            seen[v as usize - 1] = true;
        }
        Ok(Permutation { word: word.into_iter().map(|v| v as u32).collect() })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { word: (1..=n as u32).collect() }
    }

    pub fn size(&self) -> usize {
        self.word.len()
    }

    /// The one-line word `(sigma(1), ..., sigma(n))`.
    pub fn word(&self) -> &[u32] {
        &self.word
    }

    /// Number of pairs `i < j` with `sigma(i) > sigma(j)`.
    pub fn inversions(&self) -> u64 {
        let mut count = 0;
        for i in 0..self.word.len() {
            for j in i + 1..self.word.len() {
                if self.word[i] > self.word[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// The inversion word `(a_1, ..., a_{n-1})`,
    /// `a_k = #{ j > k : sigma(j) < sigma(k) }`.
    pub fn inversion_word(&self) -> InversionWord {
        let n = self.word.len();
        let entries = (0..n.saturating_sub(1))
            .map(|k| (k + 1..n).filter(|&j| self.word[j] < self.word[k]).count() as u32)
            .collect();
        InversionWord { entries }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.word {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.word.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = Vec::<i64>::deserialize(deserializer)?;
        Permutation::new(raw).map_err(D::Error::custom)
    }
}

/// An inversion word `(a_1, ..., a_{n-1})` with `0 <= a_k <= n - k`, the
/// ambient size being `n = entries.len() + 1`. The empty word encodes the
/// unique permutation of size 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InversionWord {
    entries: Vec<u32>,
}

impl InversionWord {
    /// Validates the bounds `0 <= a_k <= n - k`.
    pub fn new(entries: Vec<i64>) -> Result<Self, PermError> {
        let n = entries.len() + 1;
        for (k, &v) in entries.iter().enumerate() {
            let max = (n - (k + 1)) as u32;
            if v < 0 || v as u32 > max {
                return Err(PermError::WordOutOfBounds { index: k + 1, value: v, max });
            }
        }
        Ok(InversionWord { entries: entries.into_iter().map(|v| v as u32).collect() })
    }

    /// Ambient permutation size.
    pub fn n(&self) -> usize {
        self.entries.len() + 1
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn sum(&self) -> u64 {
        self.entries.iter().map(|&v| v as u64).sum()
    }

    /// Decodes the unique permutation with this inversion word: `sigma(k)`
    /// is the `(a_k + 1)`-th smallest value not used at earlier positions.
    pub fn to_permutation(&self) -> Permutation {
        let n = self.n();
        let mut remaining: Vec<u32> = (1..=n as u32).collect();
        let mut word = Vec::with_capacity(n);
        for &a in &self.entries {
            word.push(remaining.remove(a as usize));
        }
        word.push(remaining[0]);
        debug_assert!(remaining.len() == 1);
        Permutation { word }
    }
}

impl fmt::Display for InversionWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.entries {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl Serialize for InversionWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.entries.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for InversionWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = Vec::<i64>::deserialize(deserializer)?;
        InversionWord::new(raw).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_permutations() {
        assert!(matches!(Permutation::new(vec![1, 1]), Err(PermError::NotAPermutation { .. })));
        assert!(matches!(Permutation::new(vec![0, 1]), Err(PermError::NotAPermutation { .. })));
        assert!(matches!(Permutation::new(vec![1, 3]), Err(PermError::NotAPermutation { .. })));
        assert!(Permutation::new(vec![]).is_ok());
    }

    #[test]
    fn example_inversion_word() {
        let s = Permutation::new(vec![3, 5, 2, 4, 6, 1]).unwrap();
        assert_eq!(s.inversion_word().entries(), &[2, 3, 1, 1, 1]);
    }

    #[test]
    fn identity_word_is_zero() {
        let s = Permutation::identity(5);
        assert_eq!(s.inversion_word().entries(), &[0, 0, 0, 0]);
        assert_eq!(s.inversions(), 0);
    }

    #[test]
    fn reversal_word() {
        let s = Permutation::new(vec![3, 2, 1]).unwrap();
        assert_eq!(s.inversion_word().entries(), &[2, 1]);
        assert_eq!(s.inversions(), 3);
    }

    #[test]
    fn example_word_decodes() {
        let w = InversionWord::new(vec![2, 3, 1, 1, 1]).unwrap();
        assert_eq!(w.to_permutation().word(), &[3, 5, 2, 4, 6, 1]);
    }

    #[test]
    fn zero_word_decodes_to_identity() {
        let w = InversionWord::new(vec![0, 0, 0]).unwrap();
        assert_eq!(w.to_permutation(), Permutation::identity(4));
    }

    #[test]
    fn small_word_decodes() {
        let w = InversionWord::new(vec![2, 1]).unwrap();
        assert_eq!(w.to_permutation().word(), &[3, 2, 1]);
    }

    #[test]
    fn word_bounds_checked() {
        assert!(matches!(
            InversionWord::new(vec![3, 0]),
            Err(PermError::WordOutOfBounds { index: 1, value: 3, max: 2 })
        ));
        assert!(matches!(
            InversionWord::new(vec![0, -1]),
            Err(PermError::WordOutOfBounds { .. })
        ));
        assert!(InversionWord::new(vec![]).is_ok());
    }

    #[test]
    fn sum_equals_inversions() {
        let s = Permutation::new(vec![3, 5, 2, 4, 6, 1]).unwrap();
        assert_eq!(s.inversion_word().sum(), s.inversions());
        assert_eq!(s.inversions(), 8);
    }

    #[test]
    fn size_one_round_trip() {
        let s = Permutation::identity(1);
        let w = s.inversion_word();
        assert_eq!(w.n(), 1);
        assert!(w.entries().is_empty());
        assert_eq!(w.to_permutation(), s);
    }

    #[test]
    fn json_round_trip() {
        let s = Permutation::new(vec![2, 1, 3]).unwrap();
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(j, "[2,1,3]");
        assert_eq!(serde_json::from_str::<Permutation>(&j).unwrap(), s);
        assert!(serde_json::from_str::<Permutation>("[1,1]").is_err());
    }
}
