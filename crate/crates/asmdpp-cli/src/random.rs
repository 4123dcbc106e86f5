//! Seeded random DPP generation for the randomized path round-trip sweep.

use asmdpp::Dpp;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Draws a valid DPP with parts at most `n` by sampling rows top-down
/// within the admissible bounds of the defining conditions. Row counts are
/// geometric-ish: after each row a coin flip decides whether to continue.
pub fn random_dpp(rng: &mut ChaCha8Rng, n: u32) -> Dpp {
    let mut rows: Vec<Vec<i64>> = Vec::new();
    loop {
        let max_len = match rows.last() {
            None => (n - 1) as usize,
            Some(prev) => prev.len() - 1,
        };
        if max_len == 0 || (!rows.is_empty() && rng.gen_bool(0.5)) {
            break;
        }
        match sample_row(rng, n, max_len, rows.last()) {
            Some(row) => rows.push(row),
            None => break,
        }
    }
    Dpp::new(rows).expect("sampled rows satisfy the defining conditions")
}

fn sample_row(
    rng: &mut ChaCha8Rng,
    n: u32,
    max_len: usize,
    prev: Option<&Vec<i64>>,
) -> Option<Vec<i64>> {
    'attempt: for _ in 0..20 {
        let len = rng.gen_range(1..=max_len);
        let mut row: Vec<i64> = Vec::with_capacity(len);
        for c in 0..len {
            let mut hi = if c == 0 { n as i64 } else { row[c - 1] };
            if let Some(p) = prev {
                if c == 0 {
                    hi = hi.min(p.len() as i64); // condition 4
                }
                hi = hi.min(p[c + 1] - 1); // condition 2
            }
            let lo = if c == 0 { len as i64 + 1 } else { 1 }; // condition 3
            if lo > hi {
                continue 'attempt;
            }
            row.push(rng.gen_range(lo..=hi));
        }
        return Some(row);
    }
    None
}
