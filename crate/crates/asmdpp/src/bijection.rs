//! The statistic-preserving bijection between permutations of size `n`
//! (equivalently permutation matrices) and descending plane partitions of
//! dimension `n` without special parts.
//!
//! The map factors through inversion words and lattice paths:
//!
//! 1. Encode the permutation as an inversion word.
//! 2. Peel the word one entry per dimension level `n, n-1, ..., 2`. At
//!    level `j` the entry removed is the first one holding its maximal
//!    value (`a_k = j - k` in the current word), or a trailing zero when
//!    none does. An entry of value `a` removed at current index `v`
//!    contributes a block of `a` equal parts: plain parts of value
//!    `a + v - 1`, except that the block's leading part is raised to `n`
//!    when the removal position touches the word's nonzero prefix
//!    (`v <= prefix + 1`), which is exactly when the block extends the top
//!    row of the final object to full length.
//! 3. Lay out the collected parts, largest first, as east steps of lattice
//!    paths: each path advances east while the next part is at least its
//!    1-based position in the path and a new path begins when the step
//!    would cross the diagonal `y = x`. The resulting family is
//!    non-intersecting and decodes to the image DPP.
//!
//! No part of the image is special (every east step stays strictly above
//! the diagonal), and the four statistics carry over: `p = sigma(1) - 1`
//! parts equal `n`, the part total is `inv(sigma)`, and
//! `b = n - sigma(n)` counts parts equal to `n - 1` together with a full
//! top row. The inverse recovers the word by reading `b` off the DPP at
//! each level and removing the corresponding block.

use crate::dpp::Dpp;
use crate::paths::{check_nonintersecting, paths_to_dpp, row_path, PathFamily};
use crate::perm::Permutation;
use crate::stats::StatQuadruple;
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("permutation has size {size} but dimension {dim} was requested; the bijection is defined for dim = size")]
    DimensionMismatch { size: usize, dim: u32 },
    #[error("DPP has {count} special part(s) (first at row {}, column {}), so it is outside the bijection's image", first.0, first.1)]
    HasSpecialParts { count: u64, first: (usize, usize) },
    #[error("DPP has largest part {max_part}, which exceeds the dimension {dim}")]
    DimensionTooSmall { max_part: u32, dim: u32 },
}

impl BijectionError {
    /// Stable taxonomy name of the failure.
    pub fn name(&self) -> &'static str {
        match self {
            BijectionError::DimensionMismatch { .. } => "DimensionMismatch",
            BijectionError::HasSpecialParts { .. } => "HasSpecialParts",
            BijectionError::DimensionTooSmall { .. } => "DimensionTooSmall",
        }
    }
}

/// The inversion word of `sigma` read through values: entry `k` counts the
/// elements greater than `k` standing left of `k` in the one-line word.
/// (This is the inversion word of the inverse permutation; peeling the
/// last element of `sigma` deletes a single entry of it.)
fn value_word(s: &Permutation) -> Vec<u32> {
    let word = s.word();
    let n = word.len();
    let mut pos = vec![0usize; n + 1];
    for (i, &v) in word.iter().enumerate() {
        pos[v as usize] = i;
    }
    (1..n)
        .map(|k| word[..pos[k]].iter().filter(|&&x| x as usize > k).count() as u32)
        .collect()
}

/// Decodes a value word by inserting `k = n-1, ..., 1` into the list
/// `[n]`, each at the index given by its entry.
fn decode_value_word(entries: &[u32]) -> Permutation {
    let n = entries.len() + 1;
    let mut word: Vec<i64> = vec![n as i64];
    for k in (1..n).rev() {
        word.insert(entries[k - 1] as usize, k as i64);
    }
    Permutation::new(word).expect("decoded word is a permutation")
}

/// Peels the value word level by level and collects the part multiset of
/// the image DPP.
fn word_parts(entries: &[u32], n: u32) -> Vec<u32> {
    let mut slots: Vec<u32> = entries.to_vec();
    let mut parts = Vec::new();
    for j in (2..=n).rev() {
        let maximal = slots
            .iter()
            .enumerate()
            .position(|(idx, &val)| val as u64 == j as u64 - (idx as u64 + 1));
        let Some(idx) = maximal else {
            let trailing = slots.pop();
            debug_assert_eq!(trailing, Some(0), "non-maximal final slot must be zero");
            continue;
        };
        let vi = (idx + 1) as u32;
        let val = slots.remove(idx);
        debug_assert!(val >= 1);
        let prefix = slots.iter().take_while(|&&x| x > 0).count() as u32;
        let grow = vi <= prefix + 1;
        if grow {
            parts.push(n);
            for _ in 1..val {
                parts.push(val + vi - 1);
            }
        } else {
            for _ in 0..val {
                parts.push(val + vi - 1);
            }
        }
    }
    parts
}

/// Length of the first row when the given parts (sorted descending) are
/// laid out greedily: the longest prefix in which the `c`-th part is at
/// least `c`.
fn leading_row_len(sorted: &[u32]) -> usize {
    let mut len = 0;
    while len < sorted.len() && sorted[len] as usize >= len + 1 {
        len += 1;
    }
    len
}

/// Lays a part multiset out as a family of lattice paths, cutting each
/// path where the next east step would cross the diagonal.
fn parts_to_paths(mut parts: Vec<u32>) -> PathFamily {
    parts.sort_unstable_by(|a, b| b.cmp(a));
    let mut paths = Vec::new();
    let mut rest: &[u32] = &parts;
    while !rest.is_empty() {
        let len = leading_row_len(rest);
        assert!(len > 0, "part multiset of a no-special-part DPP always has a nonspecial head");
        paths.push(row_path(&rest[..len]));
        rest = &rest[len..];
    }
    PathFamily::new(paths)
}

/// The image of `s` under the bijection as a lattice-path family — the
/// intermediate object of [`perm_to_dpp`], exposed for inspection.
pub fn perm_to_path_family(s: &Permutation, n: u32) -> Result<PathFamily, BijectionError> {
    if s.size() as u32 != n {
        return Err(BijectionError::DimensionMismatch { size: s.size(), dim: n });
    }
    Ok(parts_to_paths(word_parts(&value_word(s), n)))
}

/// Maps a permutation of size `n` to the dimension-`n` DPP without special
/// parts carrying the same statistic quadruple.
pub fn perm_to_dpp(s: &Permutation, n: u32) -> Result<Dpp, BijectionError> {
    let family = perm_to_path_family(s, n)?;
    debug_assert!(check_nonintersecting(&family));
    Ok(paths_to_dpp(&family).expect("bijection image decodes to a valid DPP"))
}

/// Inverse of [`perm_to_dpp`]: accepts any DPP of dimension at most `n`
/// with no special parts.
pub fn dpp_to_perm(d: &Dpp, n: u32) -> Result<Permutation, BijectionError> {
    let specials = d.special_positions();
    if let Some(&first) = specials.first() {
        return Err(BijectionError::HasSpecialParts { count: specials.len() as u64, first });
    }
    if n < 1 || d.max_part() > n {
        return Err(BijectionError::DimensionTooSmall { max_part: d.max_part(), dim: n });
    }
    let mut parts: Vec<u32> = d.parts().collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    let word = unpeel(parts, n);
    Ok(decode_value_word(&word))
}

/// Rebuilds the value word from the part multiset, inverting one peeling
/// level at a time.
fn unpeel(mut parts: Vec<u32>, n: u32) -> Vec<u32> {
    if n == 1 {
        debug_assert!(parts.is_empty());
        return Vec::new();
    }
    let count_top = parts.iter().filter(|&&x| x == n).count() as u32;
    let count_next = parts.iter().filter(|&&x| x + 1 == n).count() as u32;
    let full_top_row = leading_row_len(&parts) as u32 + 1 == n;
    let b = count_next + u32::from(full_top_row);
    let v = n - b;
    if v == n {
        // nothing was inserted at this level; undo the promotion n -> n-1
        for x in parts.iter_mut() {
            if *x == n {
                *x = n - 1;
            }
        }
        let mut word = unpeel(parts, n - 1);
        word.push(0);
        return word;
    }
    // remove the inserted block: every part equal to n-1 plus, when the
    // top row is full, one of the parts equal to n
    let grow = full_top_row;
    debug_assert!(!grow || count_top > 0);
    let mut removed_top = !grow;
    parts.retain(|&x| {
        if x + 1 == n {
            return false;
        }
        if x == n && !removed_top {
            removed_top = true;
            return false;
        }
        true
    });
    for x in parts.iter_mut() {
        if *x == n {
            *x = n - 1;
        }
    }
    let mut word = unpeel(parts, n - 1);
    word.insert(v as usize - 1, n - v);
    word
}

/// Outcome of comparing the statistic quadruple of a permutation matrix
/// with that of its image DPP.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PreservationReport {
    pub n: u32,
    pub matrix_stats: StatQuadruple,
    pub dpp_stats: StatQuadruple,
    pub equal: bool,
}

impl PreservationReport {
    pub fn component_equality(&self) -> [(&'static str, bool); 4] {
        [
            ("p", self.matrix_stats.p == self.dpp_stats.p),
            ("m", self.matrix_stats.m == self.dpp_stats.m),
            ("t", self.matrix_stats.t == self.dpp_stats.t),
            ("b", self.matrix_stats.b == self.dpp_stats.b),
        ]
    }
}

impl fmt::Display for PreservationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "matrix side: {}", self.matrix_stats)?;
        writeln!(f, "dpp side:    {}", self.dpp_stats)?;
        write!(f, "preserved:   {}", if self.equal { "yes" } else { "NO" })
    }
}

/// Computes both statistic quadruples — of the permutation matrix and of
/// the image DPP — and reports component-wise equality.
pub fn check_preservation(s: &Permutation, n: u32) -> Result<PreservationReport, BijectionError> {
    let matrix_stats = crate::asm::Asm::from(s).stats();
    let image = perm_to_dpp(s, n)?;
    let dpp_stats = image.stats(n).expect("image dimension matches by construction");
    Ok(PreservationReport { n, matrix_stats, dpp_stats, equal: matrix_stats == dpp_stats })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dpp(rows: &[&[i64]]) -> Dpp {
        Dpp::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn identity_maps_to_empty() {
        for n in 1..=6 {
            let d = perm_to_dpp(&Permutation::identity(n), n as u32).unwrap();
            assert!(d.is_empty());
        }
    }

    #[test]
    fn spec_examples_at_n3() {
        let cases: [(&[i64], &[&[i64]]); 3] = [
            (&[3, 1, 2], &[&[3, 3]]),
            (&[3, 2, 1], &[&[3, 3], &[2]]),
            (&[2, 3, 1], &[&[3, 2]]),
        ];
        for (word, rows) in cases {
            let s = Permutation::new(word.to_vec()).unwrap();
            assert_eq!(perm_to_dpp(&s, 3).unwrap(), dpp(rows), "sigma = {s}");
        }
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let s = Permutation::identity(3);
        assert_eq!(
            perm_to_dpp(&s, 4),
            Err(BijectionError::DimensionMismatch { size: 3, dim: 4 })
        );
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(dpp_to_perm(&Dpp::empty(), 3).unwrap(), Permutation::identity(3));
        assert_eq!(
            dpp_to_perm(&dpp(&[&[3, 3], &[2]]), 3).unwrap().word(),
            &[3, 2, 1]
        );
    }

    #[test]
    fn special_parts_rejected() {
        let d0 = dpp(&[&[6, 6, 6, 4, 2], &[5, 3, 2, 1], &[2]]);
        assert_eq!(
            dpp_to_perm(&d0, 6),
            Err(BijectionError::HasSpecialParts { count: 3, first: (1, 5) })
        );
    }

    #[test]
    fn dimension_too_small_rejected() {
        let d = dpp(&[&[4, 3]]);
        assert_eq!(
            dpp_to_perm(&d, 3),
            Err(BijectionError::DimensionTooSmall { max_part: 4, dim: 3 })
        );
    }

    #[test]
    fn preservation_identity() {
        let r = check_preservation(&Permutation::identity(4), 4).unwrap();
        assert!(r.equal);
        assert_eq!(r.matrix_stats, StatQuadruple::ZERO);
    }

    #[test]
    fn preservation_reversal() {
        let s = Permutation::new(vec![3, 2, 1]).unwrap();
        let r = check_preservation(&s, 3).unwrap();
        assert!(r.equal);
        assert_eq!(r.matrix_stats, StatQuadruple::new(2, 0, 3, 2));
    }

    #[test]
    fn preservation_all_of_s5() {
        for s in crate::enumerate::enumerate_perms(5).unwrap() {
            let r = check_preservation(&s, 5).unwrap();
            assert!(r.equal, "statistics differ for {s}: {r}");
        }
    }

    #[test]
    fn intermediate_family_nonintersecting() {
        for s in crate::enumerate::enumerate_perms(5).unwrap() {
            let family = perm_to_path_family(&s, 5).unwrap();
            assert!(check_nonintersecting(&family));
        }
    }

    #[test]
    fn round_trip_s6() {
        for s in crate::enumerate::enumerate_perms(6).unwrap() {
            let d = perm_to_dpp(&s, 6).unwrap();
            assert_eq!(d.special_count(), 0);
            assert_eq!(dpp_to_perm(&d, 6).unwrap(), s);
        }
    }
}
