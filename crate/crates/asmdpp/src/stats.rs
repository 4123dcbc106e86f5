//! The four statistics carried by both alternating sign matrices and
//! descending plane partitions.

use serde::{Deserialize, Serialize};
use std::fmt;

/// The statistic quadruple `(p, m, t, b)`.
///
/// On an alternating sign matrix of dimension `n`:
/// * `p` — number of 0's to the left of the 1 in the first row,
/// * `m` — number of −1 entries,
/// * `t` — number of inversions,
/// * `b` — number of 0's to the right of the 1 in the last row.
///
/// On a descending plane partition of dimension `n`:
/// * `p` — number of parts equal to `n`,
/// * `m` — number of special parts,
/// * `t` — total number of parts,
/// * `b` — number of parts equal to `n − 1` plus the number of rows of
///   length `n − 1`.
///
/// The two families are equidistributed with respect to this quadruple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct StatQuadruple {
    pub p: u64,
    pub m: u64,
    pub t: u64,
    pub b: u64,
}

impl StatQuadruple {
    pub const ZERO: StatQuadruple = StatQuadruple { p: 0, m: 0, t: 0, b: 0 };

    pub fn new(p: u64, m: u64, t: u64, b: u64) -> Self {
        StatQuadruple { p, m, t, b }
    }

    /// Drops `b`, leaving the triplet `(p, m, t)` of the original
    /// Mills–Robbins–Rumsey conjecture.
    pub fn triplet(&self) -> StatTriplet {
        StatTriplet { p: self.p, m: self.m, t: self.t }
    }
}

impl fmt::Display for StatQuadruple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={} m={} t={} b={}", self.p, self.m, self.t, self.b)
    }
}

/// The triplet projection `(p, m, t)` of [`StatQuadruple`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct StatTriplet {
    pub p: u64,
    pub m: u64,
    pub t: u64,
}

impl fmt::Display for StatTriplet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={} m={} t={}", self.p, self.m, self.t)
    }
}
