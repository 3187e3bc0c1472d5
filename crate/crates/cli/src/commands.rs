use permchain::closed_forms::ceil_half;
use permchain::structure::admissible_breakpoints;
use permchain::{
    build_unimodal, classify_strong_312_ending_in_1, count_strong_312_ending_in_1, evaluate,
    find_occurrence, formula_table, strongly_avoids, ChainSpec, Counter, FormulaTag, Pattern,
    Permutations, Result,
};

use crate::report::{StructureRow, SymmetryRow, VerificationRow};

/// Rows plus human-readable notes for the error stream.
#[derive(Debug, Clone, Default)]
pub struct Report<R> {
    pub rows: Vec<R>,
    pub notes: Vec<String>,
}

pub fn cmd_count(
    counter: &Counter,
    chain: &ChainSpec,
    n_max: usize,
) -> Result<Report<VerificationRow>> {
    let mut rows = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let r = counter.count_chain(n, chain)?;
        rows.push(VerificationRow::new(
            n,
            chain.to_string(),
            r.total,
            None,
            None,
            r.by_position_of_one,
        ));
    }
    Ok(Report {
        rows,
        notes: Vec::new(),
    })
}

/// Compares both chains of every selected row against its closed form for
/// `valid_from ≤ n ≤ n_max`.
pub fn cmd_verify(
    counter: &Counter,
    tags: &[FormulaTag],
    n_max: usize,
) -> Result<Report<VerificationRow>> {
    let mut rows = Vec::new();
    let mut notes = Vec::new();
    for f in formula_table()
        .into_iter()
        .filter(|f| tags.contains(&f.tag))
    {
        for n in f.valid_from..=n_max {
            let expected = evaluate(f.tag, n)?;
            for (side, chain) in [("231", &f.chain_231), ("312", &f.chain_312)] {
                let r = counter.count_chain(n, chain)?;
                let row = VerificationRow::new(
                    n,
                    chain.to_string(),
                    r.total,
                    Some(expected),
                    Some(f.tag.to_string()),
                    r.by_position_of_one,
                );
                if !row.agree && notes.is_empty() {
                    notes.push(format!(
                        "first disagreement: tag {} n={n} side {side}: brute force {} vs formula {expected}",
                        f.tag, row.brute_force
                    ));
                }
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        notes.push(format!(
            "no rows: every selected formula starts above n_max = {n_max}"
        ));
    }
    Ok(Report { rows, notes })
}

/// Exhaustive check that a permutation ending in 1 strongly avoids 312 iff
/// it has the unimodal form.
pub fn cmd_structure(n_max: usize) -> Result<Report<StructureRow>> {
    let tau: Pattern = "312".parse()?;
    let mut rows = Vec::new();
    let mut notes = Vec::new();
    for n in 1..=n_max {
        let mut strong_avoiders = 0u64;
        let mut counterexamples = 0u64;
        // only the (n-1)! permutations ending in 1
        for rest in Permutations::new(n - 1) {
            let mut values: Vec<u32> = rest.values().iter().map(|v| v + 1).collect();
            values.push(1);
            let pi = permchain::Permutation::new(values)?;
            let strong = strongly_avoids(&pi, &tau);
            let shaped = classify_strong_312_ending_in_1(&pi)?;
            strong_avoiders += u64::from(strong);
            if strong != shaped.is_some() {
                counterexamples += 1;
                let witness = match (
                    find_occurrence(&pi, &tau),
                    find_occurrence(&pi.power(2), &tau),
                ) {
                    (Some(idx), _) => format!("312 in pi at positions {idx:?}"),
                    (None, Some(idx)) => {
                        format!("square {} has 312 at positions {idx:?}", pi.power(2))
                    }
                    (None, None) => "strongly avoids 312 but is not unimodal".to_string(),
                };
                notes.push(format!("counterexample n={n}: {pi}: {witness}"));
            }
        }
        let breakpoints: Vec<usize> = admissible_breakpoints(n).collect();
        debug_assert_eq!(breakpoints.first(), Some(&ceil_half(n)));
        let mut distinct: Vec<_> = breakpoints
            .iter()
            .map(|&k| build_unimodal(n, k))
            .collect::<Result<_>>()?;
        distinct.dedup();
        let distinct_forms = distinct.len() as u64;
        debug_assert_eq!(distinct_forms, count_strong_312_ending_in_1(n));
        rows.push(StructureRow {
            n,
            breakpoints,
            distinct_forms,
            strong_avoiders,
            counterexamples,
            agree: counterexamples == 0 && strong_avoiders == distinct_forms,
        });
    }
    Ok(Report { rows, notes })
}

/// Independent counts of each row's 231-side and 312-side chains.
pub fn cmd_symmetry(counter: &Counter, n_max: usize) -> Result<Report<SymmetryRow>> {
    let mut rows = Vec::new();
    let mut notes = Vec::new();
    for f in formula_table() {
        for n in 1..=n_max {
            let count_231 = counter.count_chain(n, &f.chain_231)?.total;
            let count_312 = counter.count_chain(n, &f.chain_312)?.total;
            let agree = count_231 == count_312;
            if !agree {
                notes.push(format!(
                    "mismatch: tag {} n={n}: {count_231} vs {count_312}",
                    f.tag
                ));
            }
            rows.push(SymmetryRow {
                tag: f.tag.to_string(),
                n,
                chain_231: f.chain_231.to_string(),
                count_231,
                chain_312: f.chain_312.to_string(),
                count_312,
                agree,
            });
        }
    }
    Ok(Report { rows, notes })
}
