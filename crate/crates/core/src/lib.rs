//! Chain pattern avoidance for permutations.
//!
//! A permutation π avoids the chain `(S_1 : S_2 : … : S_m)` when `π^i`
//! avoids every pattern of `S_i`. This crate provides
//!
//! * [`Permutation`] with composition, powers, the reverse / complement
//!   symmetries and the direct and skew sums,
//! * classical containment ([`contains`], [`find_occurrence`]),
//! * the chain predicate ([`chain_avoids`]) and its text grammar,
//! * an exhaustive, optionally parallel enumerator ([`Counter`]),
//! * exact evaluators for the nine closed-form counts ([`closed_forms`]),
//! * the unimodal characterization of strongly 312-avoiding permutations
//!   that end in 1 ([`structure`]).
//!
//! ```
//! use permchain::{count_chain, parse_chain};
//!
//! let chain = parse_chain("231,1432:231").unwrap();
//! assert_eq!(count_chain(5, &chain).unwrap().total, 14);
//! ```

pub mod chain;
pub mod closed_forms;
pub mod enumeration;
pub mod error;
pub mod pattern;
pub mod perm;
pub mod structure;

pub use chain::{chain_avoids, parse_chain, strongly_avoids, ChainEvaluator, ChainSpec};
pub use closed_forms::{
    ceiling_half_sum, evaluate, fibonacci, formula_table, lucas, Formula, FormulaTag,
};
pub use enumeration::{
    count_chain, count_sequence, generate_sn, list_chain_avoiders, CountRefinement, Counter,
    Permutations, MAX_ENUMERATION_N,
};
pub use error::{Error, Result};
pub use pattern::{avoids, contains, find_occurrence, Pattern};
pub use perm::Permutation;
pub use structure::{
    build_unimodal, classify_strong_312_ending_in_1, count_strong_312_ending_in_1, UnimodalForm,
};
