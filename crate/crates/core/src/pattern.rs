//! Classical pattern containment.
//!
//! `τ ≤ π` when some subsequence of π is order-isomorphic to τ. The search
//! is a depth-first scan over increasing index tuples that abandons a prefix
//! as soon as its relative order disagrees with the matching prefix of τ.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A non-empty permutation used as a containment template.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pattern(Permutation);

impl Pattern {
    pub fn new(template: Permutation) -> Result<Self> {
        if template.is_empty() {
            return Err(Error::EmptyPattern);
        }
        Ok(Pattern(template))
    }

    pub fn template(&self) -> &Permutation {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn reverse_complement(&self) -> Pattern {
        Pattern(self.0.reverse_complement())
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let template: Permutation = s.parse()?;
        Pattern::new(template).map_err(|e| Error::Parse {
            token: s.trim().to_string(),
            reason: e.to_string(),
        })
    }
}

impl From<Pattern> for Permutation {
    fn from(p: Pattern) -> Self {
        p.0
    }
}

pub fn contains(pi: &Permutation, tau: &Pattern) -> bool {
    contains_word(pi.values(), tau.template().values())
}

pub fn avoids(pi: &Permutation, tau: &Pattern) -> bool {
    !contains(pi, tau)
}

/// Lexicographically smallest 1-based index tuple `i_1 < … < i_k` whose
/// entries form an occurrence of `tau`, or `None` if `pi` avoids it.
pub fn find_occurrence(pi: &Permutation, tau: &Pattern) -> Option<Vec<usize>> {
    if tau.len() > pi.len() {
        return None;
    }
    let mut chosen = vec![0usize; tau.len()];
    if search(pi.values(), tau.template().values(), &mut chosen, 0, 0) {
        Some(chosen.into_iter().map(|i| i + 1).collect())
    } else {
        None
    }
}

/// Containment on raw one-line words. `word` and `pattern` must both be
/// permutation words; the empty pattern is contained everywhere.
pub(crate) fn contains_word(word: &[u32], pattern: &[u32]) -> bool {
    let k = pattern.len();
    if k > word.len() {
        return false;
    }
    match k {
        0 => true,
        1 => true,
        2 => {
            // some ascent / inversion pair exists
            if pattern[0] < pattern[1] {
                !is_decreasing(word)
            } else {
                !is_increasing(word)
            }
        }
        _ => {
            let mut buf = [0usize; 16];
            if k <= buf.len() {
                search(word, pattern, &mut buf[..k], 0, 0)
            } else {
                let mut chosen = vec![0usize; k];
                search(word, pattern, &mut chosen, 0, 0)
            }
        }
    }
}

fn is_increasing(word: &[u32]) -> bool {
    word.windows(2).all(|w| w[0] < w[1])
}

fn is_decreasing(word: &[u32]) -> bool {
    word.windows(2).all(|w| w[0] > w[1])
}

/// Fills `chosen[depth..]` with increasing word indices (0-based, all at
/// least `start`) extending the already-consistent prefix `chosen[..depth]`.
fn search(word: &[u32], pattern: &[u32], chosen: &mut [usize], depth: usize, start: usize) -> bool {
    let k = pattern.len();
    if depth == k {
        return true;
    }
    let target = pattern[depth];
    // leave room for the remaining k - depth - 1 entries
    let last = word.len() + depth + 1 - k;
    for idx in start..last {
        let v = word[idx];
        let consistent = chosen[..depth]
            .iter()
            .zip(&pattern[..depth])
            .all(|(&c, &t)| (word[c] < v) == (t < target));
        if consistent {
            chosen[depth] = idx;
            if search(word, pattern, chosen, depth + 1, idx + 1) {
                return true;
            }
        }
    }
    false
}
