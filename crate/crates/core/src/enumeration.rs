//! Exhaustive enumeration of `S_n` and chain-avoider counting.
//!
//! This is the brute-force oracle the closed forms are checked against, so
//! it deliberately uses no symmetry reductions: every permutation of `S_n`
//! is generated and tested.

use rayon::prelude::*;

use crate::chain::{ChainEvaluator, ChainSpec};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Largest `n` enumerated without an explicit override (14! ≈ 8.7e10).
pub const MAX_ENUMERATION_N: usize = 14;

/// Rearranges `word` into its lexicographic successor. Returns `false` (and
/// leaves `word` sorted ascending) when `word` was the last permutation.
pub fn next_permutation(word: &mut [u32]) -> bool {
    let n = word.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && word[i - 1] >= word[i] {
        i -= 1;
    }
    if i == 0 {
        word.reverse();
        return false;
    }
    let mut j = n - 1;
    while word[j] <= word[i - 1] {
        j -= 1;
    }
    word.swap(i - 1, j);
    word[i..].reverse();
    true
}

/// Lexicographic stream over `S_n`. Memory is O(n).
#[derive(Debug, Clone)]
pub struct Permutations {
    word: Vec<u32>,
    done: bool,
}

impl Permutations {
    /// Unbounded constructor; see [`generate_sn`] for the guarded entry point.
    pub fn new(n: usize) -> Self {
        Permutations {
            word: (1..=n as u32).collect(),
            done: false,
        }
    }
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let current = Permutation::from_vec_unchecked(self.word.clone());
        self.done = !next_permutation(&mut self.word);
        Some(current)
    }
}

fn check_bound(n: usize, force: bool) -> Result<()> {
    if n > MAX_ENUMERATION_N && !force {
        return Err(Error::EnumerationBound {
            n,
            bound: MAX_ENUMERATION_N,
        });
    }
    Ok(())
}

/// All of `S_n` in lexicographic order, refusing `n > MAX_ENUMERATION_N`.
pub fn generate_sn(n: usize) -> Result<Permutations> {
    check_bound(n, false)?;
    Ok(Permutations::new(n))
}

/// `c_n` for one chain together with its split by the position of the
/// value 1: `by_position_of_one[i - 1] = c_n^(i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountRefinement {
    pub n: usize,
    pub chain: ChainSpec,
    pub total: u64,
    pub by_position_of_one: Vec<u64>,
}

impl CountRefinement {
    /// `c_n^(i)` for 1-based `i`.
    pub fn at_position(&self, i: usize) -> Option<u64> {
        i.checked_sub(1)
            .and_then(|j| self.by_position_of_one.get(j))
            .copied()
    }
}

/// Counting front end with worker and bound settings.
///
/// Work is split by the first entry `π_1`: shard `j` holds the `(n-1)!`
/// permutations starting with `j`. Shard tallies are merged by summation,
/// so results do not depend on the worker count.
#[derive(Debug)]
pub struct Counter {
    force: bool,
    pool: Option<rayon::ThreadPool>,
}

impl Default for Counter {
    fn default() -> Self {
        Counter::serial()
    }
}

impl Counter {
    pub fn serial() -> Self {
        Counter {
            force: false,
            pool: None,
        }
    }

    /// Uses `jobs` workers; `jobs <= 1` counts on the calling thread.
    pub fn with_jobs(jobs: usize) -> Result<Self> {
        if jobs <= 1 {
            return Ok(Counter::serial());
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Precondition(format!("cannot start worker pool: {e}")))?;
        Ok(Counter {
            force: false,
            pool: Some(pool),
        })
    }

    /// Lifts the `MAX_ENUMERATION_N` refusal.
    pub fn force(mut self, force: bool) -> Self {
        self.force = force;
        self
    }

    pub fn jobs(&self) -> usize {
        self.pool.as_ref().map_or(1, |p| p.current_num_threads())
    }

    pub fn count_chain(&self, n: usize, chain: &ChainSpec) -> Result<CountRefinement> {
        check_bound(n, self.force)?;
        let mut by_position_of_one = vec![0u64; n];
        if n == 0 {
            let total = u64::from(ChainEvaluator::new(chain, 0).avoids_word(&[]));
            return Ok(CountRefinement {
                n,
                chain: chain.clone(),
                total,
                by_position_of_one,
            });
        }
        let shards: Vec<Vec<u64>> = match &self.pool {
            None => (1..=n as u32)
                .map(|first| count_shard(n, first, chain))
                .collect(),
            Some(pool) => pool.install(|| {
                (1..=n as u32)
                    .into_par_iter()
                    .map(|first| count_shard(n, first, chain))
                    .collect()
            }),
        };
        for shard in &shards {
            for (acc, c) in by_position_of_one.iter_mut().zip(shard) {
                *acc += c;
            }
        }
        Ok(CountRefinement {
            n,
            chain: chain.clone(),
            total: by_position_of_one.iter().sum(),
            by_position_of_one,
        })
    }

    /// Totals `c_1, …, c_{n_max}`.
    pub fn count_sequence(&self, chain: &ChainSpec, n_max: usize) -> Result<Vec<u64>> {
        check_bound(n_max, self.force)?;
        (1..=n_max)
            .map(|n| self.count_chain(n, chain).map(|r| r.total))
            .collect()
    }

    /// Members of `C_n(chain)` in lexicographic order.
    pub fn list_chain_avoiders<'a>(
        &self,
        n: usize,
        chain: &'a ChainSpec,
    ) -> Result<impl Iterator<Item = Permutation> + 'a> {
        check_bound(n, self.force)?;
        let mut eval = ChainEvaluator::new(chain, n);
        Ok(Permutations::new(n).filter(move |p| eval.avoids_word(p.values())))
    }
}

/// Per-position tallies for the permutations beginning with `first`.
fn count_shard(n: usize, first: u32, chain: &ChainSpec) -> Vec<u64> {
    let mut counts = vec![0u64; n];
    let mut word = Vec::with_capacity(n);
    word.push(first);
    word.extend((1..=n as u32).filter(|&v| v != first));
    let mut eval = ChainEvaluator::new(chain, n);
    loop {
        if eval.avoids_word(&word) {
            let pos = word.iter().position(|&v| v == 1).expect("1 is present");
            counts[pos] += 1;
        }
        if !next_permutation(&mut word[1..]) {
            break;
        }
    }
    counts
}

pub fn count_chain(n: usize, chain: &ChainSpec) -> Result<CountRefinement> {
    Counter::serial().count_chain(n, chain)
}

pub fn count_sequence(chain: &ChainSpec, n_max: usize) -> Result<Vec<u64>> {
    Counter::serial().count_sequence(chain, n_max)
}

pub fn list_chain_avoiders(n: usize, chain: &ChainSpec) -> Result<Vec<Permutation>> {
    Ok(Counter::serial().list_chain_avoiders(n, chain)?.collect())
}
