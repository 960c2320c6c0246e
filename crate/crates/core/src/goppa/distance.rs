//! Exhaustive code checks: all k×k minors, and minimum weight over all codewords.
//!
//! Both searches are indexed by an integer (combination rank, message number), so the
//! sequential and parallel paths visit the same items and return the same answer.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use super::{GeneratorMatrix, GoppaError};
use crate::linalg::rank_raw;

pub const MAX_MINORS: u128 = 1_000_000;
pub const MAX_SEARCH_SPACE: u128 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// Rayon's global pool; same as `Sequential` when built without the `parallel` feature.
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MdsReport {
    pub mds: bool,
    pub total_minors: u128,
    /// Minors examined before the answer was known (all of them when `mds`).
    pub minors_checked: u128,
    /// Columns of the first singular minor in lexicographic order.
    pub singular_minor: Option<Vec<usize>>,
    /// `n - k + 1` when `mds`.
    pub distance: Option<usize>,
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// The `rank`-th k-subset of `0..n` in lexicographic order.
pub(crate) fn combination_at(n: usize, k: usize, mut rank: u128) -> Vec<usize> {
    let mut out = Vec::with_capacity(k);
    let mut next = 0;
    for slot in 0..k {
        let mut c = next;
        loop {
            let below = binomial(n - c - 1, k - slot - 1);
            if rank < below {
                break;
            }
            rank -= below;
            c += 1;
        }
        out.push(c);
        next = c + 1;
    }
    out
}

pub fn mds_check(g: &GeneratorMatrix) -> Result<MdsReport, GoppaError> {
    mds_check_with(g, Execution::default())
}

pub fn mds_check_with(g: &GeneratorMatrix, exec: Execution) -> Result<MdsReport, GoppaError> {
    let (k, n) = (g.k, g.n);
    let total = binomial(n, k);
    if total > MAX_MINORS {
        return Err(GoppaError::TooManyMinors { count: total, limit: MAX_MINORS });
    }
    let field = g.field();
    let singular = |rank: u128| {
        let cols = combination_at(n, k, rank);
        let mut data = Vec::with_capacity(k * k);
        for r in 0..k {
            data.extend(cols.iter().map(|&c| g.matrix.get_raw(r, c)));
        }
        rank_raw(field, k, k, data) < k
    };
    let first = match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => (0..total as u64).into_par_iter().find_first(|&r| singular(r as u128)),
        _ => (0..total as u64).find(|&r| singular(r as u128)),
    };
    Ok(match first {
        None => MdsReport {
            mds: true,
            total_minors: total,
            minors_checked: total,
            singular_minor: None,
            distance: Some(n - k + 1),
        },
        Some(r) => MdsReport {
            mds: false,
            total_minors: total,
            minors_checked: r as u128 + 1,
            singular_minor: Some(combination_at(n, k, r as u128)),
            distance: None,
        },
    })
}

pub fn min_distance_bruteforce(g: &GeneratorMatrix) -> Result<usize, GoppaError> {
    min_distance_bruteforce_with(g, Execution::default())
}

/// Minimum Hamming weight over nonzero codewords `m G`. Only messages whose leading
/// nonzero digit is 1 are visited, since scaling preserves weight.
pub fn min_distance_bruteforce_with(g: &GeneratorMatrix, exec: Execution) -> Result<usize, GoppaError> {
    let field = g.field();
    let q = field.order() as u128;
    let (k, n) = (g.k, g.n);
    let size = (0..k).try_fold(1u128, |acc, _| acc.checked_mul(q).filter(|&s| s <= MAX_SEARCH_SPACE));
    let Some(size) = size else {
        let size = q.checked_pow(k as u32).unwrap_or(u128::MAX);
        return Err(GoppaError::SearchSpaceTooLarge { size, limit: MAX_SEARCH_SPACE });
    };
    let weight = |index: u64| -> Option<usize> {
        // digit r of the message sits at base-q position k-1-r
        let mut digits = vec![0u64; k];
        let mut rest = index;
        for d in digits.iter_mut().rev() {
            *d = rest % q as u64;
            rest /= q as u64;
        }
        if digits.iter().find(|&&d| d != 0) != Some(&1) {
            return None;
        }
        let w = (0..n)
            .filter(|&c| {
                let mut acc = 0u64;
                for (r, &d) in digits.iter().enumerate() {
                    if d != 0 {
                        acc = field.add(acc, field.mul(d, g.matrix.get_raw(r, c)));
                    }
                }
                acc != 0
            })
            .count();
        (w > 0).then_some(w)
    };
    let best = match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => (1..size as u64).into_par_iter().filter_map(weight).min(),
        _ => (1..size as u64).filter_map(weight).min(),
    };
    best.ok_or(GoppaError::ZeroCode)
}
