//! Strongly 312-avoiding permutations that end in 1.
//!
//! Such a permutation is unimodal: `(k+1)(k+2)…n k(k−1)…1` with
//! `⌈n/2⌉ ≤ k ≤ n`. The breakpoints `k = n − 1` and `k = n` both give
//! `δ_n`, so for `n ≥ 2` the admissible range of `k` is one larger than the
//! number of distinct permutations.

use std::ops::RangeInclusive;

use crate::closed_forms::ceil_half;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// The unimodal shape with ascending block `k+1..=n` and descending block
/// `k..=1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnimodalForm {
    n: usize,
    k: usize,
}

impl UnimodalForm {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain {
                what: "unimodal form".into(),
                n,
                requirement: "n >= 1".into(),
            });
        }
        if !admissible_breakpoints(n).contains(&k) {
            return Err(Error::Domain {
                what: format!("unimodal form with k = {k}"),
                n,
                requirement: format!("k >= n/2 and k <= n, i.e. {} <= k <= {n}", ceil_half(n)),
            });
        }
        Ok(UnimodalForm { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn to_permutation(&self) -> Permutation {
        let (n, k) = (self.n as u32, self.k as u32);
        let values = (k + 1..=n).chain((1..=k).rev()).collect();
        Permutation::from_vec_unchecked(values)
    }
}

/// `⌈n/2⌉ ..= n`.
pub fn admissible_breakpoints(n: usize) -> RangeInclusive<usize> {
    ceil_half(n)..=n
}

pub fn build_unimodal(n: usize, k: usize) -> Result<Permutation> {
    UnimodalForm::new(n, k).map(|f| f.to_permutation())
}

/// Returns the breakpoint `k` if `pi` has the unimodal form, `None`
/// otherwise. `δ_n` is reported as `k = n`.
///
/// `pi` must be non-empty and end in 1.
pub fn classify_strong_312_ending_in_1(pi: &Permutation) -> Result<Option<usize>> {
    let w = pi.values();
    if w.last() != Some(&1) {
        return Err(Error::Precondition(format!("{pi} does not end in 1")));
    }
    let n = w.len();
    // length of the ascending prefix ending at the peak n
    let peak = match w.iter().position(|&v| v as usize == n) {
        Some(p) => p,
        None => return Ok(None),
    };
    let k = if peak == 0 { n } else { n - peak - 1 };
    if !admissible_breakpoints(n).contains(&k) {
        return Ok(None);
    }
    let candidate = UnimodalForm { n, k }.to_permutation();
    Ok((candidate.values() == w).then_some(k))
}

/// Number of distinct permutations of length `n` ending in 1 that have the
/// unimodal form: `n − ⌈n/2⌉` for `n ≥ 2`, and 1 for `n = 1`.
pub fn count_strong_312_ending_in_1(n: usize) -> u64 {
    match n {
        0 => 0,
        1 => 1,
        _ => (n - ceil_half(n)) as u64,
    }
}

/// Size of the admissible breakpoint range, counting `k = n − 1` and `k = n`
/// separately.
pub fn breakpoint_count(n: usize) -> u64 {
    if n == 0 {
        0
    } else {
        (n - ceil_half(n) + 1) as u64
    }
}
