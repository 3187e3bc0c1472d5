//! Chain avoidance: level `i` of a chain constrains the `i`-th power of π.
//!
//! Text grammar: levels separated by `:`, patterns within a level separated
//! by `,`, each pattern written as a digit string. `231,1432:231` means π
//! avoids 231 and 1432, and π² avoids 231.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::pattern::{contains_word, Pattern};
use crate::perm::{compose_into, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChainSpec {
    levels: Vec<Vec<Pattern>>,
}

impl ChainSpec {
    pub fn new(levels: Vec<Vec<Pattern>>) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::EmptyChain);
        }
        if let Some(i) = levels.iter().position(|l| l.is_empty()) {
            return Err(Error::Parse {
                token: String::new(),
                reason: format!("level {} has no patterns", i + 1),
            });
        }
        Ok(ChainSpec { levels })
    }

    /// The chain `(τ : τ)`.
    pub fn strong(tau: Pattern) -> Self {
        ChainSpec {
            levels: vec![vec![tau.clone()], vec![tau]],
        }
    }

    pub fn single(tau: Pattern) -> Self {
        ChainSpec {
            levels: vec![vec![tau]],
        }
    }

    /// Patterns constraining `π^i`, with `i` 1-based.
    pub fn level(&self, i: usize) -> Option<&[Pattern]> {
        i.checked_sub(1)
            .and_then(|j| self.levels.get(j))
            .map(Vec::as_slice)
    }

    pub fn levels(&self) -> &[Vec<Pattern>] {
        &self.levels
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    /// Applies reverse-complement to every pattern of every level.
    pub fn reverse_complement(&self) -> ChainSpec {
        ChainSpec {
            levels: self
                .levels
                .iter()
                .map(|l| l.iter().map(Pattern::reverse_complement).collect())
                .collect(),
        }
    }

    /// Adds `tau` to the 1-based `level`, appending empty levels if needed.
    pub fn with_pattern(mut self, level: usize, tau: Pattern) -> ChainSpec {
        let idx = level.max(1) - 1;
        if self.levels.len() <= idx {
            self.levels.resize_with(idx + 1, Vec::new);
        }
        self.levels[idx].push(tau);
        self
    }
}

/// Parses the chain text grammar; whitespace is ignored.
pub fn parse_chain(text: &str) -> Result<ChainSpec> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse {
            token: text.to_string(),
            reason: "empty chain".into(),
        });
    }
    let mut levels = Vec::new();
    for (li, level_text) in compact.split(':').enumerate() {
        if level_text.is_empty() {
            return Err(Error::Parse {
                token: compact.clone(),
                reason: format!("level {} is empty", li + 1),
            });
        }
        let mut level = Vec::new();
        for token in level_text.split(',') {
            if token.is_empty() {
                return Err(Error::Parse {
                    token: level_text.to_string(),
                    reason: format!("empty pattern in level {}", li + 1),
                });
            }
            if !token.chars().all(|c| c.is_ascii_digit()) {
                return Err(Error::Parse {
                    token: token.to_string(),
                    reason: "patterns in a chain are digit strings".into(),
                });
            }
            level.push(token.parse::<Pattern>()?);
        }
        levels.push(level);
    }
    ChainSpec::new(levels)
}

impl FromStr for ChainSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_chain(s)
    }
}

impl fmt::Display for ChainSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, level) in self.levels.iter().enumerate() {
            if i > 0 {
                f.write_str(":")?;
            }
            for (j, tau) in level.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{tau}")?;
            }
        }
        Ok(())
    }
}

pub fn chain_avoids(pi: &Permutation, chain: &ChainSpec) -> bool {
    ChainEvaluator::new(chain, pi.len()).avoids_word(pi.values())
}

/// `π` and `π²` both avoid `tau`.
pub fn strongly_avoids(pi: &Permutation, tau: &Pattern) -> bool {
    chain_avoids(pi, &ChainSpec::strong(tau.clone()))
}

/// Reusable evaluator for one chain over words of a fixed length. Holds the
/// scratch buffers for successive powers so the enumeration loop does not
/// allocate.
#[derive(Debug, Clone)]
pub struct ChainEvaluator<'a> {
    chain: &'a ChainSpec,
    current: Vec<u32>,
    scratch: Vec<u32>,
}

impl<'a> ChainEvaluator<'a> {
    pub fn new(chain: &'a ChainSpec, n: usize) -> Self {
        ChainEvaluator {
            chain,
            current: vec![0; n],
            scratch: vec![0; n],
        }
    }

    /// Evaluates the chain on a one-line word of the configured length.
    pub fn avoids_word(&mut self, word: &[u32]) -> bool {
        debug_assert_eq!(word.len(), self.current.len());
        for (i, level) in self.chain.levels.iter().enumerate() {
            // π^{i+1} = π ∘ π^i
            let power: &[u32] = if i == 0 {
                word
            } else {
                if i == 1 {
                    compose_into(word, word, &mut self.current);
                } else {
                    compose_into(word, &self.current, &mut self.scratch);
                    std::mem::swap(&mut self.current, &mut self.scratch);
                }
                &self.current
            };
            if level
                .iter()
                .any(|tau| contains_word(power, tau.template().values()))
            {
                return false;
            }
        }
        true
    }
}
