//! Alternating sign matrices.
//!
//! An alternating sign matrix (ASM) of dimension `n` is an `n x n` matrix
//! over `{-1, 0, 1}` in which every row and column sums to 1 and the nonzero
//! entries of every row and column alternate in sign. Equivalently, every
//! prefix sum of a row or column lies in `{0, 1}` and the full sums are 1;
//! validation uses this single-pass criterion.
//!
//! The number of inversions of an ASM `A` is
//!
//! ```text
//! sum over 1 <= i < k <= n, 1 <= l < j <= n of A[i][j] * A[k][l]
//! ```
//!
//! which restricts to the usual inversion number on permutation matrices.

use crate::perm::Permutation;
use crate::stats::StatQuadruple;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use thiserror::Error;

/// Validation failures for ASM candidates. Row/column indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum AsmError {
    #[error("matrix is empty")]
    Empty,
    #[error("matrix is not square: row {row} has {len} entries, expected {dim}")]
    NotSquare { row: usize, len: usize, dim: usize },
    #[error("entry at row {row}, column {col} is {value}, not -1, 0, or 1")]
    BadEntryValue { row: usize, col: usize, value: i64 },
    #[error("row {row} sums to {sum}, not 1")]
    RowSumNot1 { row: usize, sum: i64 },
    #[error("column {col} sums to {sum}, not 1")]
    ColSumNot1 { col: usize, sum: i64 },
    #[error("nonzero entries do not alternate in sign ({axis} {index}, position {pos})")]
    AlternationViolated { axis: Axis, index: usize, pos: usize },
    #[error("matrix contains a -1 at row {row}, column {col}, so it is not a permutation matrix")]
    NotAPermutationMatrix { row: usize, col: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    Row,
    Column,
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axis::Row => "row",
            Axis::Column => "column",
        })
    }
}

impl AsmError {
    /// Stable taxonomy name of the violated condition.
    pub fn name(&self) -> &'static str {
        match self {
            AsmError::Empty => "Empty",
            AsmError::NotSquare { .. } => "NotSquare",
            AsmError::BadEntryValue { .. } => "BadEntryValue",
            AsmError::RowSumNot1 { .. } => "RowSumNot1",
            AsmError::ColSumNot1 { .. } => "ColSumNot1",
            AsmError::AlternationViolated { .. } => "AlternationViolated",
            AsmError::NotAPermutationMatrix { .. } => "NotAPermutationMatrix",
        }
    }
}

/// A validated alternating sign matrix.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Asm {
    entries: Vec<Vec<i8>>,
}

impl Asm {
    /// Validates a square integer matrix as an ASM. Rows are checked before
    /// columns; within a line, an out-of-range prefix sum is reported as an
    /// alternation violation and a bad full sum as a sum violation.
    pub fn new(matrix: Vec<Vec<i64>>) -> Result<Self, AsmError> {
        let n = matrix.len();
        if n == 0 {
            return Err(AsmError::Empty);
        }
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != n {
                return Err(AsmError::NotSquare { row: i + 1, len: row.len(), dim: n });
            }
        }
        for (i, row) in matrix.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if !(-1..=1).contains(&v) {
                    return Err(AsmError::BadEntryValue { row: i + 1, col: j + 1, value: v });
                }
            }
        }
        for (i, row) in matrix.iter().enumerate() {
            let mut sum = 0;
            for (j, &v) in row.iter().enumerate() {
                sum += v;
                if sum != 0 && sum != 1 {
                    return Err(AsmError::AlternationViolated {
                        axis: Axis::Row,
                        index: i + 1,
                        pos: j + 1,
                    });
                }
            }
            if sum != 1 {
                return Err(AsmError::RowSumNot1 { row: i + 1, sum });
            }
        }
        for j in 0..n {
            let mut sum = 0;
            for (i, row) in matrix.iter().enumerate() {
                sum += row[j];
                if sum != 0 && sum != 1 {
                    return Err(AsmError::AlternationViolated {
                        axis: Axis::Column,
                        index: j + 1,
                        pos: i + 1,
                    });
                }
            }
            if sum != 1 {
                return Err(AsmError::ColSumNot1 { col: j + 1, sum });
            }
        }
        Ok(Asm {
            entries: matrix.into_iter().map(|r| r.into_iter().map(|v| v as i8).collect()).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "dimension must be at least 1");
        let entries = (0..n)
            .map(|i| (0..n).map(|j| i8::from(i == j)).collect())
            .collect();
        Asm { entries }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<i8>] {
        &self.entries
    }

    pub fn minus_one_count(&self) -> u64 {
        self.entries.iter().flatten().filter(|&&v| v == -1).count() as u64
    }

    pub fn is_permutation_matrix(&self) -> bool {
        self.entries.iter().flatten().all(|&v| v >= 0)
    }

    /// The inversion number: the sum of `A[i][j] * A[k][l]` over all pairs
    /// with `i < k` and `l < j`. Computed in `O(n^2)` by accumulating, for
    /// each cell, the total weight strictly above and strictly to the right.
    pub fn inversions(&self) -> u64 {
        let n = self.dim();
        let mut inv: i64 = 0;
        // above[l] = sum of entries in rows < k, columns > l
        let mut above = vec![0i64; n];
        for k in 0..n {
            for l in 0..n {
                inv += self.entries[k][l] as i64 * above[l];
            }
            let mut suffix = 0i64;
            for l in (0..n).rev() {
                if l + 1 < n {
                    suffix += self.entries[k][l + 1] as i64;
                }
                above[l] += suffix;
            }
        }
        debug_assert!(inv >= 0, "inversions are nonnegative on valid ASMs");
        inv as u64
    }

    /// The statistic quadruple: zeros left of the 1 in the first row, count
    /// of −1 entries, inversions, zeros right of the 1 in the last row.
    pub fn stats(&self) -> StatQuadruple {
        let n = self.dim();
        // the first and last row of an ASM contain a single nonzero entry, a 1
        let p = self.entries[0].iter().position(|&v| v == 1).expect("first row has a 1") as u64;
        let last = self.entries[n - 1].iter().position(|&v| v == 1).expect("last row has a 1");
        let b = (n - 1 - last) as u64;
        StatQuadruple { p, m: self.minus_one_count(), t: self.inversions(), b }
    }

    /// Extracts the permutation with `M[i][sigma(i)] = 1` from a permutation
    /// matrix; fails on any matrix containing a −1.
    pub fn to_permutation(&self) -> Result<Permutation, AsmError> {
        for (i, row) in self.entries.iter().enumerate() {
            if let Some(j) = row.iter().position(|&v| v == -1) {
                return Err(AsmError::NotAPermutationMatrix { row: i + 1, col: j + 1 });
            }
        }
        let word = self
            .entries
            .iter()
            .map(|row| row.iter().position(|&v| v == 1).expect("row has a 1") as i64 + 1)
            .collect();
        Ok(Permutation::new(word).expect("rows of a permutation matrix select distinct columns"))
    }
}

/// The permutation matrix of a permutation: `M[i][j] = 1` iff `sigma(i) = j`.
impl From<&Permutation> for Asm {
    fn from(s: &Permutation) -> Asm {
        let n = s.size();
        let mut entries = vec![vec![0i8; n]; n];
        for (i, &v) in s.word().iter().enumerate() {
            entries[i][v as usize - 1] = 1;
        }
        Asm { entries }
    }
}

impl fmt::Display for Asm {
    /// One row per line, entries space-separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.entries.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let mut first = true;
            for v in row {
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
                first = false;
            }
        }
        Ok(())
    }
}

impl Serialize for Asm {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.entries.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Asm {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = Vec::<Vec<i64>>::deserialize(deserializer)?;
        Asm::new(raw).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The 5x5 example with two -1 entries.
    pub(crate) fn example5() -> Asm {
        Asm::new(vec![
            vec![0, 1, 0, 0, 0],
            vec![0, 0, 1, 0, 0],
            vec![1, -1, 0, 1, 0],
            vec![0, 1, 0, -1, 1],
            vec![0, 0, 0, 1, 0],
        ])
        .unwrap()
    }

    #[test]
    fn example5_validates() {
        assert_eq!(example5().dim(), 5);
        assert_eq!(example5().minus_one_count(), 2);
    }

    #[test]
    fn identity_validates_any_size() {
        for n in 1..=6 {
            let a = Asm::identity(n);
            assert_eq!(Asm::new(a.entries().iter().map(|r| r.iter().map(|&v| v as i64).collect()).collect()), Ok(a));
        }
    }

    #[test]
    fn row_sum_failure() {
        assert_eq!(
            Asm::new(vec![vec![1, -1], vec![0, 1]]),
            Err(AsmError::RowSumNot1 { row: 1, sum: 0 })
        );
    }

    #[test]
    fn alternation_failure() {
        // prefix sum reaches 2 in row 1
        assert_eq!(
            Asm::new(vec![vec![1, 1], vec![0, -1]]),
            Err(AsmError::AlternationViolated { axis: Axis::Row, index: 1, pos: 2 })
        );
        // rows fine, column 1 starts with -1
        assert_eq!(
            Asm::new(vec![vec![-1, 1, 1], vec![1, 0, 0], vec![1, 0, 0]]),
            Err(AsmError::AlternationViolated { axis: Axis::Row, index: 1, pos: 1 })
        );
    }

    #[test]
    fn column_failures() {
        assert_eq!(
            Asm::new(vec![vec![1, 0], vec![1, 0]]),
            Err(AsmError::AlternationViolated { axis: Axis::Column, index: 1, pos: 2 })
        );
    }

    #[test]
    fn bad_entry_and_shape() {
        assert_eq!(
            Asm::new(vec![vec![2, -1], vec![-1, 2]]),
            Err(AsmError::BadEntryValue { row: 1, col: 1, value: 2 })
        );
        assert_eq!(
            Asm::new(vec![vec![1, 0], vec![0]]),
            Err(AsmError::NotSquare { row: 2, len: 1, dim: 2 })
        );
        assert_eq!(Asm::new(vec![]), Err(AsmError::Empty));
    }

    #[test]
    fn identity_has_no_inversions() {
        for n in 1..=5 {
            assert_eq!(Asm::identity(n).inversions(), 0);
        }
    }

    #[test]
    fn antidiagonal_inversions() {
        let a = Asm::new(vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]).unwrap();
        assert_eq!(a.inversions(), 3);
    }

    #[test]
    fn example5_inversions() {
        // frozen from the quadruple-loop evaluation of the defining sum
        assert_eq!(example5().inversions(), 4);
    }

    #[test]
    fn example5_stats() {
        assert_eq!(example5().stats(), StatQuadruple::new(1, 2, 4, 1));
    }

    #[test]
    fn identity_stats_zero() {
        for n in 1..=5 {
            assert_eq!(Asm::identity(n).stats(), StatQuadruple::ZERO);
        }
    }

    #[test]
    fn permutation_matrix_round_trip() {
        let s = Permutation::new(vec![3, 5, 2, 4, 6, 1]).unwrap();
        let m = Asm::from(&s);
        let expected = Asm::new(vec![
            vec![0, 0, 1, 0, 0, 0],
            vec![0, 0, 0, 0, 1, 0],
            vec![0, 1, 0, 0, 0, 0],
            vec![0, 0, 0, 1, 0, 0],
            vec![0, 0, 0, 0, 0, 1],
            vec![1, 0, 0, 0, 0, 0],
        ])
        .unwrap();
        assert_eq!(m, expected);
        assert_eq!(m.minus_one_count(), 0);
        assert_eq!(m.to_permutation().unwrap(), s);
    }

    #[test]
    fn swap_matrix() {
        let s = Permutation::new(vec![2, 1]).unwrap();
        assert_eq!(Asm::from(&s).entries(), &[vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn identity_matrix_to_identity_perm() {
        assert_eq!(Asm::identity(4).to_permutation().unwrap(), Permutation::identity(4));
    }

    #[test]
    fn minus_one_blocks_permutation_extraction() {
        assert_eq!(
            example5().to_permutation(),
            Err(AsmError::NotAPermutationMatrix { row: 3, col: 2 })
        );
    }

    #[test]
    fn json_round_trip() {
        let a = example5();
        let s = serde_json::to_string(&a).unwrap();
        let back: Asm = serde_json::from_str(&s).unwrap();
        assert_eq!(back, a);
        assert!(serde_json::from_str::<Asm>("[[1,1],[0,-1]]").is_err());
    }
}
