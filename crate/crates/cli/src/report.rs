//! Report rows and their CSV / JSON renderings.
//!
//! Every row type serializes the same fields in both formats: CSV columns
//! follow `HEADER`, and list-valued fields become a quoted comma-joined cell.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

pub trait Row: Serialize {
    const HEADER: &'static [&'static str];

    fn cells(&self) -> Vec<String>;

    fn agrees(&self) -> bool;
}

fn join<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map(ToString::to_string).unwrap_or_default()
}

/// One `(n, chain)` count, optionally compared to a closed form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationRow {
    pub n: usize,
    pub chain: String,
    pub brute_force: u64,
    pub formula: Option<u128>,
    pub tag: Option<String>,
    pub agree: bool,
    pub by_position_of_one: Vec<u64>,
}

impl VerificationRow {
    pub fn new(
        n: usize,
        chain: String,
        brute_force: u64,
        formula: Option<u128>,
        tag: Option<String>,
        by_position_of_one: Vec<u64>,
    ) -> Self {
        let agree = formula.is_none_or(|f| f == u128::from(brute_force));
        VerificationRow {
            n,
            chain,
            brute_force,
            formula,
            tag,
            agree,
            by_position_of_one,
        }
    }
}

impl Row for VerificationRow {
    const HEADER: &'static [&'static str] = &[
        "n",
        "chain",
        "brute_force",
        "formula",
        "tag",
        "agree",
        "by_position_of_one",
    ];

    fn cells(&self) -> Vec<String> {
        vec![
            self.n.to_string(),
            self.chain.clone(),
            self.brute_force.to_string(),
            opt(&self.formula),
            opt(&self.tag),
            self.agree.to_string(),
            join(&self.by_position_of_one),
        ]
    }

    fn agrees(&self) -> bool {
        self.agree
    }
}

/// Census of strongly 312-avoiding permutations of length `n` ending in 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureRow {
    pub n: usize,
    /// Admissible breakpoints `k`, from `⌈n/2⌉` to `n`.
    pub breakpoints: Vec<usize>,
    /// Distinct permutations produced by those breakpoints.
    pub distinct_forms: u64,
    /// Strongly 312-avoiding permutations ending in 1, by enumeration.
    pub strong_avoiders: u64,
    pub counterexamples: u64,
    pub agree: bool,
}

impl Row for StructureRow {
    const HEADER: &'static [&'static str] = &[
        "n",
        "breakpoints",
        "distinct_forms",
        "strong_avoiders",
        "counterexamples",
        "agree",
    ];

    fn cells(&self) -> Vec<String> {
        vec![
            self.n.to_string(),
            join(&self.breakpoints),
            self.distinct_forms.to_string(),
            self.strong_avoiders.to_string(),
            self.counterexamples.to_string(),
            self.agree.to_string(),
        ]
    }

    fn agrees(&self) -> bool {
        self.agree
    }
}

/// Paired counts for a table row's 231-side and 312-side chains.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymmetryRow {
    pub tag: String,
    pub n: usize,
    pub chain_231: String,
    pub count_231: u64,
    pub chain_312: String,
    pub count_312: u64,
    pub agree: bool,
}

impl Row for SymmetryRow {
    const HEADER: &'static [&'static str] = &[
        "tag",
        "n",
        "chain_231",
        "count_231",
        "chain_312",
        "count_312",
        "agree",
    ];

    fn cells(&self) -> Vec<String> {
        vec![
            self.tag.clone(),
            self.n.to_string(),
            self.chain_231.clone(),
            self.count_231.to_string(),
            self.chain_312.clone(),
            self.count_312.to_string(),
            self.agree.to_string(),
        ]
    }

    fn agrees(&self) -> bool {
        self.agree
    }
}

pub fn render<R: Row>(rows: &[R], format: Format) -> Result<String, String> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(rows).map_err(|e| e.to_string())?;
            s.push('\n');
            Ok(s)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(R::HEADER).map_err(|e| e.to_string())?;
            for row in rows {
                w.write_record(row.cells()).map_err(|e| e.to_string())?;
            }
            let bytes = w.into_inner().map_err(|e| e.to_string())?;
            String::from_utf8(bytes).map_err(|e| e.to_string())
        }
    }
}
