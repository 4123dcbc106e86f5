//! Exhaustive generation of permutations, DPPs, and ASMs at small size.
//!
//! Every stream has a documented canonical order so that repeated runs are
//! byte-stable:
//!
//! * permutations — lexicographic on the one-line word;
//! * DPPs — by row count, then lexicographically on the row lists;
//! * ASMs — lexicographically on rows, entries ordered `-1 < 0 < 1`.
//!
//! Bounds keep every count far below `2^63`: permutations up to `n = 10`,
//! DPPs up to `n = 7` (218348 objects), ASMs up to `n = 6` (7436 objects).

use crate::asm::Asm;
use crate::dpp::Dpp;
use crate::perm::Permutation;
use thiserror::Error;

pub const PERM_MAX_N: u32 = 10;
pub const DPP_MAX_N: u32 = 7;
pub const ASM_MAX_N: u32 = 6;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{kind} enumeration size {n} out of range 1..={max}")]
pub struct SizeOutOfRange {
    pub kind: &'static str,
    pub n: u32,
    pub max: u32,
}

fn check_bound(kind: &'static str, n: u32, max: u32) -> Result<(), SizeOutOfRange> {
    if n < 1 || n > max {
        return Err(SizeOutOfRange { kind, n, max });
    }
    Ok(())
}

/// Iterator over all permutations of size `n` in lexicographic word order.
pub struct PermIter {
    word: Vec<u32>,
    done: bool,
}

impl Iterator for PermIter {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let current = Permutation::new(self.word.iter().map(|&v| v as i64).collect())
            .expect("internal word is a permutation");
        // advance to the lexicographic successor
        let w = &mut self.word;
        let n = w.len();
        let mut i = n.wrapping_sub(1);
        while i > 0 && w[i - 1] >= w[i] {
            i -= 1;
        }
        if i == 0 {
            self.done = true;
        } else {
            let mut j = n - 1;
            while w[j] <= w[i - 1] {
                j -= 1;
            }
            w.swap(i - 1, j);
            w[i..].reverse();
        }
        Some(current)
    }
}

/// Yields each of the `n!` permutations of size `n` exactly once.
pub fn enumerate_perms(n: u32) -> Result<PermIter, SizeOutOfRange> {
    check_bound("permutation", n, PERM_MAX_N)?;
    Ok(PermIter { word: (1..=n).collect(), done: false })
}

/// Yields every valid DPP with no part exceeding `n` exactly once, ordered
/// by row count and then lexicographically on the rows.
pub fn enumerate_dpps(n: u32) -> Result<impl Iterator<Item = Dpp>, SizeOutOfRange> {
    check_bound("DPP", n, DPP_MAX_N)?;
    let mut rows_acc: Vec<Vec<u32>> = Vec::new();
    let mut out: Vec<Vec<Vec<u32>>> = vec![Vec::new()];
    collect_dpps(n, &mut rows_acc, &mut out);
    out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    Ok(out.into_iter().map(|rows| {
        Dpp::new(rows.into_iter().map(|r| r.into_iter().map(|v| v as i64).collect()).collect())
            .expect("generator emits valid DPPs")
    }))
}

/// Extends `rows` with every admissible next row, recording each stack.
fn collect_dpps(n: u32, rows: &mut Vec<Vec<u32>>, out: &mut Vec<Vec<Vec<u32>>>) {
    // next row may have lengths 1 ..= prev_len - 1 (or up to n - 1 for the
    // first row); its first part must exceed its own length (condition 3),
    // be at most the previous row's length (condition 4), and every part
    // must sit strictly below the part above it (condition 2).
    let prev: Option<Vec<u32>> = rows.last().cloned();
    let max_len = match &prev {
        None => (n - 1) as usize,
        Some(p) => p.len() - 1,
    };
    for len in 1..=max_len {
        let mut row = Vec::with_capacity(len);
        extend_row(n, len, prev.as_deref(), &mut row, rows, out);
    }
}

fn extend_row(
    n: u32,
    len: usize,
    prev: Option<&[u32]>,
    row: &mut Vec<u32>,
    rows: &mut Vec<Vec<u32>>,
    out: &mut Vec<Vec<Vec<u32>>>,
) {
    let c = row.len();
    if c == len {
        rows.push(row.clone());
        out.push(rows.clone());
        collect_dpps(n, rows, out);
        rows.pop();
        return;
    }
    let mut hi = if c == 0 { n } else { row[c - 1] };
    if let Some(p) = prev {
        if c == 0 {
            hi = hi.min(p.len() as u32); // condition 4
        }
        // len <= p.len() - 1, so the part above at offset c + 1 exists
        hi = hi.min(p[c + 1] - 1); // condition 2
    }
    let lo = if c == 0 { len as u32 + 1 } else { 1 }; // condition 3
    for v in lo..=hi {
        row.push(v);
        extend_row(n, len, prev, row, rows, out);
        row.pop();
    }
}

/// Yields every `n x n` alternating sign matrix exactly once via row-by-row
/// backtracking on column prefix sums, in lexicographic row order.
pub fn enumerate_asms(n: u32) -> Result<impl Iterator<Item = Asm>, SizeOutOfRange> {
    check_bound("ASM", n, ASM_MAX_N)?;
    let n = n as usize;
    let mut out = Vec::new();
    let mut rows: Vec<Vec<i8>> = Vec::new();
    let mut colsum = vec![0i8; n];
    asm_rows(n, &mut rows, &mut colsum, &mut out);
    Ok(out.into_iter().map(|entries| {
        Asm::new(entries.into_iter().map(|r| r.into_iter().map(|v| v as i64).collect()).collect())
            .expect("generator emits valid ASMs")
    }))
}

fn asm_rows(n: usize, rows: &mut Vec<Vec<i8>>, colsum: &mut [i8], out: &mut Vec<Vec<Vec<i8>>>) {
    if rows.len() == n {
        out.push(rows.clone());
        return;
    }
    let last = rows.len() + 1 == n;
    let mut row = Vec::with_capacity(n);
    asm_entries(n, last, &mut row, 0, rows, colsum, out);
}

fn asm_entries(
    n: usize,
    last: bool,
    row: &mut Vec<i8>,
    rowsum: i8,
    rows: &mut Vec<Vec<i8>>,
    colsum: &mut [i8],
    out: &mut Vec<Vec<Vec<i8>>>,
) {
    let j = row.len();
    if j == n {
        if rowsum == 1 {
            rows.push(row.clone());
            asm_rows(n, rows, colsum, out);
            rows.pop();
        }
        return;
    }
    for e in [-1i8, 0, 1] {
        let rs = rowsum + e;
        if rs != 0 && rs != 1 {
            continue;
        }
        let cs = colsum[j] + e;
        if cs != 0 && cs != 1 {
            continue;
        }
        if last && cs != 1 {
            continue;
        }
        row.push(e);
        colsum[j] = cs;
        asm_entries(n, last, row, rs, rows, colsum, out);
        colsum[j] = cs - e;
        row.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn perm_counts_and_order() {
        assert_eq!(enumerate_perms(1).unwrap().count(), 1);
        let all: Vec<_> = enumerate_perms(3).unwrap().collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], Permutation::identity(3));
        assert_eq!(all[5].word(), &[3, 2, 1]);
        let mut sorted = all.clone();
        sorted.sort_by(|a, b| a.word().cmp(b.word()));
        assert_eq!(all, sorted);
    }

    #[test]
    fn s6_contains_the_example() {
        let target = Permutation::new(vec![3, 5, 2, 4, 6, 1]).unwrap();
        let all: Vec<_> = enumerate_perms(6).unwrap().collect();
        assert_eq!(all.len(), 720);
        assert!(all.contains(&target));
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(enumerate_perms(0).is_err());
        assert!(enumerate_perms(11).is_err());
        assert!(enumerate_dpps(8).is_err());
        assert!(enumerate_asms(7).is_err());
    }

    #[test]
    fn dpp1_is_only_empty() {
        let all: Vec<_> = enumerate_dpps(1).unwrap().collect();
        assert_eq!(all, vec![Dpp::empty()]);
    }

    #[test]
    fn dpp3_lists_seven_objects() {
        let all: Vec<_> = enumerate_dpps(3).unwrap().collect();
        let expect: Vec<Dpp> = [
            vec![],
            vec![vec![2]],
            vec![vec![3]],
            vec![vec![3, 1]],
            vec![vec![3, 2]],
            vec![vec![3, 3]],
            vec![vec![3, 3], vec![2]],
        ]
        .into_iter()
        .map(|rows| Dpp::new(rows).unwrap())
        .collect();
        assert_eq!(all, expect);
    }

    #[test]
    fn dpp_counts_match_asm_numbers() {
        let counts: Vec<usize> =
            (1..=5).map(|n| enumerate_dpps(n).unwrap().count()).collect();
        assert_eq!(counts, vec![1, 2, 7, 42, 429]);
    }

    #[test]
    fn dpps_are_distinct_and_valid() {
        let all: Vec<_> = enumerate_dpps(5).unwrap().collect();
        let set: HashSet<_> = all.iter().map(|d| format!("{d}")).collect();
        assert_eq!(set.len(), all.len());
        assert!(all.iter().all(|d| d.max_part() <= 5));
    }

    #[test]
    fn asm1_and_asm3() {
        let all: Vec<_> = enumerate_asms(1).unwrap().collect();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0], Asm::identity(1));
        let all3: Vec<_> = enumerate_asms(3).unwrap().collect();
        assert_eq!(all3.len(), 7);
        let with_minus = all3.iter().filter(|a| a.minus_one_count() > 0).count();
        assert_eq!(with_minus, 1);
    }

    #[test]
    fn asm5_contains_the_example_and_counts() {
        let all: Vec<_> = enumerate_asms(5).unwrap().collect();
        assert_eq!(all.len(), 429);
        let example = Asm::new(vec![
            vec![0, 1, 0, 0, 0],
            vec![0, 0, 1, 0, 0],
            vec![1, -1, 0, 1, 0],
            vec![0, 1, 0, -1, 1],
            vec![0, 0, 0, 1, 0],
        ])
        .unwrap();
        assert!(all.contains(&example));
    }

    #[test]
    fn asm_stream_is_sorted() {
        let all: Vec<_> = enumerate_asms(4).unwrap().collect();
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
        assert_eq!(all.len(), 42);
    }
}
