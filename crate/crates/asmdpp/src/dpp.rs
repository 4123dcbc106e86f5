//! Descending plane partitions.
//!
//! A descending plane partition (DPP) is a shifted array of positive
//! integers
//!
//! ```text
//! a_{1,1}  a_{1,2}  ...  a_{1,mu_1}
//!          a_{2,2}  ...  a_{2,mu_2}
//!                   ...
//! ```
//!
//! in which rows decrease weakly, columns decrease strictly, the first part
//! of every row exceeds the length of that row, and the first part of every
//! row from the second on is at most the length of the preceding row.
//!
//! A part `a_{i,j}` is *special* if `a_{i,j} <= j - i`, i.e. if it does not
//! exceed the number of parts to its left in its row.

use crate::stats::StatQuadruple;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use thiserror::Error;

/// Validation failures, reported for the first violated condition in the
/// order of the definition. Rows and columns in error positions are 1-based;
/// `col` is the shifted column index `j` (row `i` occupies columns
/// `i ..= i + len - 1`).
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DppError {
    #[error("row {row} is empty")]
    EmptyRow { row: usize },
    #[error("part at row {row}, column {col} is {value}, but parts must be positive")]
    NonPositivePart { row: usize, col: usize, value: i64 },
    #[error("row {row} is not weakly decreasing at column {col}")]
    RowNotWeaklyDecreasing { row: usize, col: usize },
    #[error("column {col} is not strictly decreasing between rows {row} and {}", row + 1)]
    ColumnNotStrictlyDecreasing { row: usize, col: usize },
    #[error("first part of row {row} is not greater than the length of row {row}")]
    Condition3Violated { row: usize },
    #[error("first part of row {row} exceeds the length of row {}", row - 1)]
    Condition4Violated { row: usize },
    #[error("dimension {dim} is too small: largest part is {max_part}")]
    DimensionTooSmall { max_part: u32, dim: u32 },
}

impl DppError {
    /// Stable taxonomy name of the violated condition.
    pub fn name(&self) -> &'static str {
        match self {
            DppError::EmptyRow { .. } => "EmptyRow",
            DppError::NonPositivePart { .. } => "NonPositivePart",
            DppError::RowNotWeaklyDecreasing { .. } => "RowNotWeaklyDecreasing",
            DppError::ColumnNotStrictlyDecreasing { .. } => "ColumnNotStrictlyDecreasing",
            DppError::Condition3Violated { .. } => "Condition3Violated",
            DppError::Condition4Violated { .. } => "Condition4Violated",
            DppError::DimensionTooSmall { .. } => "DimensionTooSmall",
        }
    }
}

/// A validated descending plane partition. The empty array is allowed and
/// denotes the DPP with no parts.
///
/// A `Dpp` value does not carry a dimension; a DPP whose parts are at most
/// `n` has dimension `n` (and every dimension above `n` as well). Operations
/// parameterized by the dimension, such as [`Dpp::stats`], take `n`
/// explicitly.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dpp {
    rows: Vec<Vec<u32>>,
}

impl Dpp {
    /// Validates raw rows against the four conditions of the definition and
    /// returns the DPP on success. The first violated condition is reported:
    /// positivity, then weak row decrease, strict column decrease,
    /// condition 3, condition 4.
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self, DppError> {
        for (i, row) in rows.iter().enumerate() {
            if row.is_empty() {
                return Err(DppError::EmptyRow { row: i + 1 });
            }
            for (c, &v) in row.iter().enumerate() {
                if v < 1 {
                    return Err(DppError::NonPositivePart { row: i + 1, col: i + 1 + c, value: v });
                }
            }
        }
        for (i, row) in rows.iter().enumerate() {
            for c in 1..row.len() {
                if row[c - 1] < row[c] {
                    return Err(DppError::RowNotWeaklyDecreasing { row: i + 1, col: i + 1 + c });
                }
            }
        }
        // Row i+1 entry at offset c sits in the column of row i's offset c+1.
        for i in 1..rows.len() {
            for c in 0..rows[i].len() {
                if c + 1 < rows[i - 1].len() && rows[i][c] >= rows[i - 1][c + 1] {
                    return Err(DppError::ColumnNotStrictlyDecreasing { row: i, col: i + 1 + c });
                }
            }
        }
        for (i, row) in rows.iter().enumerate() {
            if row[0] as usize <= row.len() {
                return Err(DppError::Condition3Violated { row: i + 1 });
            }
        }
        for i in 1..rows.len() {
            if rows[i][0] as usize > rows[i - 1].len() {
                return Err(DppError::Condition4Violated { row: i + 1 });
            }
        }
        Ok(Dpp { rows: rows.into_iter().map(|r| r.into_iter().map(|v| v as u32).collect()).collect() })
    }

    /// The empty DPP.
    pub fn empty() -> Self {
        Dpp { rows: Vec::new() }
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    /// All parts in row-major order.
    pub fn parts(&self) -> impl Iterator<Item = u32> + '_ {
        self.rows.iter().flatten().copied()
    }

    pub fn part_count(&self) -> u64 {
        self.rows.iter().map(|r| r.len() as u64).sum()
    }

    /// The largest part, or 0 for the empty DPP. Every `n >= max_part`
    /// (with `n >= 1`) is a dimension of this DPP.
    pub fn max_part(&self) -> u32 {
        self.rows.first().map_or(0, |r| r[0])
    }

    /// Positions `(i, j)` of the special parts (`a_{i,j} <= j - i`) in
    /// row-major order, 1-based, with `j` the shifted column index.
    pub fn special_positions(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                // j - i = c for the c-th entry (0-based) of any row
                if v as usize <= c {
                    out.push((i + 1, i + 1 + c));
                }
            }
        }
        out
    }

    pub fn special_count(&self) -> u64 {
        self.rows
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, &v)| v as usize <= c).count() as u64)
            .sum()
    }

    /// The statistic quadruple of this DPP viewed in dimension `n`:
    /// `p` = parts equal to `n`, `m` = special parts, `t` = all parts,
    /// `b` = parts equal to `n - 1` plus rows of length `n - 1`.
    pub fn stats(&self, n: u32) -> Result<StatQuadruple, DppError> {
        if n < 1 || self.max_part() > n {
            return Err(DppError::DimensionTooSmall { max_part: self.max_part(), dim: n });
        }
        let p = self.parts().filter(|&v| v == n).count() as u64;
        let t = self.part_count();
        let m = self.special_count();
        let b = self.parts().filter(|&v| v + 1 == n).count() as u64
            + self.rows.iter().filter(|r| r.len() as u32 + 1 == n).count() as u64;
        Ok(StatQuadruple { p, m, t, b })
    }
}

impl fmt::Display for Dpp {
    /// One row per line, parts space-separated; the empty DPP prints as an
    /// empty string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
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

impl Serialize for Dpp {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Dpp {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = Vec::<Vec<i64>>::deserialize(deserializer)?;
        Dpp::new(raw).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The worked example: 3 rows, 10 parts, 3 of them special.
    pub(crate) fn d0() -> Dpp {
        Dpp::new(vec![vec![6, 6, 6, 4, 2], vec![5, 3, 2, 1], vec![2]]).unwrap()
    }

    #[test]
    fn d0_validates() {
        let d = d0();
        assert_eq!(d.row_count(), 3);
        assert_eq!(d.part_count(), 10);
    }

    #[test]
    fn empty_is_valid() {
        let d = Dpp::new(vec![]).unwrap();
        assert!(d.is_empty());
        assert_eq!(d, Dpp::empty());
    }

    #[test]
    fn single_one_violates_condition3() {
        assert_eq!(Dpp::new(vec![vec![1]]), Err(DppError::Condition3Violated { row: 1 }));
    }

    #[test]
    fn equal_column_violates_condition2() {
        assert_eq!(
            Dpp::new(vec![vec![2, 2], vec![2]]),
            Err(DppError::ColumnNotStrictlyDecreasing { row: 1, col: 2 })
        );
    }

    #[test]
    fn nonpositive_part_rejected() {
        assert_eq!(
            Dpp::new(vec![vec![3, 0]]),
            Err(DppError::NonPositivePart { row: 1, col: 2, value: 0 })
        );
        assert!(matches!(Dpp::new(vec![vec![-1]]), Err(DppError::NonPositivePart { .. })));
    }

    #[test]
    fn increasing_row_rejected() {
        assert_eq!(
            Dpp::new(vec![vec![3, 4]]),
            Err(DppError::RowNotWeaklyDecreasing { row: 1, col: 2 })
        );
    }

    #[test]
    fn condition4_rejected() {
        // second row's first part exceeds the first row's length
        assert_eq!(
            Dpp::new(vec![vec![5, 4], vec![3]]),
            Err(DppError::Condition4Violated { row: 2 })
        );
    }

    #[test]
    fn empty_row_rejected() {
        assert_eq!(Dpp::new(vec![vec![3], vec![]]), Err(DppError::EmptyRow { row: 2 }));
    }

    #[test]
    fn d0_special_positions() {
        // the trailing 2 and 1 of row 2 and the trailing 2 of row 1; the 2
        // in the last row is not special
        assert_eq!(d0().special_positions(), vec![(1, 5), (2, 4), (2, 5)]);
        assert_eq!(d0().special_count(), 3);
    }

    #[test]
    fn empty_has_no_specials() {
        assert!(Dpp::empty().special_positions().is_empty());
    }

    #[test]
    fn single_special_in_short_row() {
        let d = Dpp::new(vec![vec![3, 1]]).unwrap();
        assert_eq!(d.special_positions(), vec![(1, 2)]);
    }

    #[test]
    fn d0_stats_at_dim6() {
        assert_eq!(d0().stats(6).unwrap(), StatQuadruple::new(3, 3, 10, 2));
    }

    #[test]
    fn empty_stats_all_zero() {
        for n in 1..=8 {
            assert_eq!(Dpp::empty().stats(n).unwrap(), StatQuadruple::ZERO);
        }
    }

    #[test]
    fn small_dpp_stats() {
        let d = Dpp::new(vec![vec![3, 3], vec![2]]).unwrap();
        assert_eq!(d.stats(3).unwrap(), StatQuadruple::new(2, 0, 3, 2));
    }

    #[test]
    fn dimension_too_small() {
        assert_eq!(
            d0().stats(5),
            Err(DppError::DimensionTooSmall { max_part: 6, dim: 5 })
        );
        assert_eq!(Dpp::empty().stats(0), Err(DppError::DimensionTooSmall { max_part: 0, dim: 0 }));
    }

    #[test]
    fn larger_dimension_forces_p_zero() {
        let d = d0();
        for n in 7..=10 {
            let q = d.stats(n).unwrap();
            assert_eq!(q.p, 0);
            assert_eq!(q.t, 10);
        }
        // b also empties out once n - 1 exceeds every part and row length
        assert_eq!(d.stats(8).unwrap().b, 0);
    }

    #[test]
    fn json_round_trip() {
        let d = d0();
        let s = serde_json::to_string(&d).unwrap();
        assert_eq!(s, "[[6,6,6,4,2],[5,3,2,1],[2]]");
        let back: Dpp = serde_json::from_str(&s).unwrap();
        assert_eq!(back, d);
        assert!(serde_json::from_str::<Dpp>("[[1]]").is_err());
    }

    #[test]
    fn display_one_row_per_line() {
        assert_eq!(d0().to_string(), "6 6 6 4 2\n5 3 2 1\n2");
        assert_eq!(Dpp::empty().to_string(), "");
    }
}
