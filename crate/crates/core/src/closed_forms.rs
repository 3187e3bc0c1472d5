//! Exact closed-form counts for the nine chains `(231, τ₁ : 231)` and their
//! reverse-complement partners `(312, τ₂ : 312)`.
//!
//! Everything is integer arithmetic on `u128` with checked operations;
//! rational coefficients are cleared by exact division.

use std::fmt;
use std::str::FromStr;

use crate::chain::{parse_chain, ChainSpec};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FormulaTag {
    T31,
    T32,
    T33,
    T34,
    T35,
    T41,
    T42,
    T43,
    T44,
}

impl FormulaTag {
    pub const ALL: [FormulaTag; 9] = [
        FormulaTag::T31,
        FormulaTag::T32,
        FormulaTag::T33,
        FormulaTag::T34,
        FormulaTag::T35,
        FormulaTag::T41,
        FormulaTag::T42,
        FormulaTag::T43,
        FormulaTag::T44,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FormulaTag::T31 => "T31",
            FormulaTag::T32 => "T32",
            FormulaTag::T33 => "T33",
            FormulaTag::T34 => "T34",
            FormulaTag::T35 => "T35",
            FormulaTag::T41 => "T41",
            FormulaTag::T42 => "T42",
            FormulaTag::T43 => "T43",
            FormulaTag::T44 => "T44",
        }
    }

    /// Smallest `n` covered by the theorem's hypothesis.
    pub fn valid_from(self) -> usize {
        match self {
            FormulaTag::T31 => 3,
            FormulaTag::T42 => 2,
            _ => 1,
        }
    }

    /// `(τ₁, τ₂)`: the extra pattern on the 231 side and on the 312 side.
    fn extra_patterns(self) -> (&'static str, &'static str) {
        match self {
            FormulaTag::T31 => ("123", "123"),
            FormulaTag::T32 => ("321", "321"),
            FormulaTag::T33 => ("132", "213"),
            FormulaTag::T34 => ("312", "231"),
            FormulaTag::T35 => ("213", "132"),
            FormulaTag::T41 => ("1432", "3214"),
            FormulaTag::T42 => ("1423", "2314"),
            FormulaTag::T43 => ("1243", "2134"),
            FormulaTag::T44 => ("2143", "2143"),
        }
    }

    fn hypothesis(self) -> &'static str {
        match self {
            FormulaTag::T31 => "n >= 3",
            FormulaTag::T42 => "n > 1",
            _ => "n >= 1",
        }
    }
}

impl fmt::Display for FormulaTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FormulaTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        FormulaTag::ALL
            .into_iter()
            .find(|tag| tag.as_str().eq_ignore_ascii_case(t))
            .ok_or_else(|| Error::Parse {
                token: t.to_string(),
                reason: "unknown formula tag (expected T31..T35 or T41..T44)".into(),
            })
    }
}

/// One row of the summary table: the paired chains and the closed form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Formula {
    pub tag: FormulaTag,
    pub chain_231: ChainSpec,
    pub chain_312: ChainSpec,
    pub valid_from: usize,
}

impl Formula {
    pub fn new(tag: FormulaTag) -> Formula {
        let (left, right) = tag.extra_patterns();
        let chain_231 = parse_chain(&format!("231,{left}:231")).expect("static chain");
        let chain_312 = parse_chain(&format!("312,{right}:312")).expect("static chain");
        Formula {
            tag,
            chain_231,
            chain_312,
            valid_from: tag.valid_from(),
        }
    }

    pub fn evaluate(&self, n: usize) -> Result<u128> {
        evaluate(self.tag, n)
    }
}

/// All nine rows in table order.
pub fn formula_table() -> Vec<Formula> {
    FormulaTag::ALL.into_iter().map(Formula::new).collect()
}

fn overflow(what: &str) -> Error {
    Error::Overflow(what.to_string())
}

fn domain(what: &str, n: usize, requirement: &str) -> Error {
    Error::Domain {
        what: what.to_string(),
        n,
        requirement: requirement.to_string(),
    }
}

/// `x_n` for `x_n = x_{n-1} + x_{n-2}` with `x_1 = a`, `x_2 = b`.
fn linear_recurrence(what: &str, n: usize, a: u128, b: u128) -> Result<u128> {
    if n == 0 {
        return Err(domain(what, n, "n >= 1"));
    }
    let (mut prev, mut cur) = (a, b);
    if n == 1 {
        return Ok(a);
    }
    for _ in 2..n {
        let next = prev.checked_add(cur).ok_or_else(|| overflow(what))?;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Fibonacci numbers indexed so that `F_1 = 1`, `F_2 = 2` (shifted by one
/// from the `F_1 = F_2 = 1` convention).
pub fn fibonacci(n: usize) -> Result<u128> {
    linear_recurrence("fibonacci", n, 1, 2)
}

/// Lucas numbers with `L_1 = 1`, `L_2 = 3`.
pub fn lucas(n: usize) -> Result<u128> {
    linear_recurrence("lucas", n, 1, 3)
}

/// `Σ_{i=1}^{n} ⌈i/2⌉` in closed form: `k² + k` for `n = 2k`,
/// `k² + 2k + 1` for `n = 2k + 1`.
pub fn ceiling_half_sum(n: u64) -> u128 {
    let k = u128::from(n / 2);
    if n.is_multiple_of(2) {
        k * k + k
    } else {
        k * k + 2 * k + 1
    }
}

pub fn ceil_half(n: usize) -> usize {
    n.div_ceil(2)
}

fn exact_div(num: u128, den: u128, what: &str) -> Result<u128> {
    if !num.is_multiple_of(den) {
        return Err(Error::Precondition(format!(
            "{what}: {num}/{den} is not an integer"
        )));
    }
    Ok(num / den)
}

/// `k^2 + 1` for `n = 2k`, `k^2 + k + 1` for `n = 2k + 1`.
fn quadratic_split(n: u128) -> u128 {
    let k = n / 2;
    if n.is_multiple_of(2) {
        k * k + 1
    } else {
        k * k + k + 1
    }
}

/// `(7·4^{k-1} − 1)/3` for `n = 2k`, `(14·4^{k-1} − 2)/3` for `n = 2k + 1`.
fn four_power_split(n: u128, what: &str) -> Result<u128> {
    let k = n / 2;
    let exp = u32::try_from(k - 1).map_err(|_| overflow(what))?;
    let four = 4u128.checked_pow(exp).ok_or_else(|| overflow(what))?;
    let (mult, minus) = if n.is_multiple_of(2) { (7, 1) } else { (14, 2) };
    let num = four.checked_mul(mult).ok_or_else(|| overflow(what))? - minus;
    exact_div(num, 3, what)
}

/// `(4k³ + 3k² − k)/6 + 1` for `n = 2k`, `(4k³ + 9k² + 5k)/6 + 1` for
/// `n = 2k + 1`.
fn cubic_split(n: u128, what: &str) -> Result<u128> {
    let k = n / 2;
    let k2 = k.checked_mul(k).ok_or_else(|| overflow(what))?;
    let k3 = k2.checked_mul(k).ok_or_else(|| overflow(what))?;
    let four_k3 = k3.checked_mul(4).ok_or_else(|| overflow(what))?;
    let (a, b) = if n.is_multiple_of(2) {
        (3, None)
    } else {
        (9, Some(5))
    };
    let mut num = k2
        .checked_mul(a)
        .and_then(|x| x.checked_add(four_k3))
        .ok_or_else(|| overflow(what))?;
    num = match b {
        // even case subtracts k
        None => num - k,
        Some(b) => num.checked_add(b * k).ok_or_else(|| overflow(what))?,
    };
    Ok(exact_div(num, 6, what)? + 1)
}

/// The closed form for `tag` at `n`. Refuses `n` below the theorem's
/// hypothesis instead of extrapolating.
pub fn evaluate(tag: FormulaTag, n: usize) -> Result<u128> {
    let what = tag.as_str();
    if n < tag.valid_from() {
        return Err(domain(what, n, tag.hypothesis()));
    }
    let m = n as u128;
    match tag {
        FormulaTag::T31 => Ok(2 * m - 3),
        FormulaTag::T32 => fibonacci(n),
        FormulaTag::T33 | FormulaTag::T35 => Ok(quadratic_split(m)),
        FormulaTag::T34 => {
            let exp = u32::try_from(n - 1).map_err(|_| overflow(what))?;
            2u128.checked_pow(exp).ok_or_else(|| overflow(what))
        }
        FormulaTag::T41 => {
            let l = lucas(n + 1)?;
            Ok(l - ceil_half(n) as u128 - 1)
        }
        FormulaTag::T42 => four_power_split(m, what),
        FormulaTag::T43 | FormulaTag::T44 => cubic_split(m, what),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fibonacci_indexing() {
        assert_eq!(fibonacci(1), Ok(1));
        assert_eq!(fibonacci(2), Ok(2));
        assert_eq!(fibonacci(3), Ok(3));
        assert_eq!(fibonacci(6), Ok(13));
        assert!(matches!(fibonacci(0), Err(Error::Domain { .. })));
    }

    #[test]
    fn lucas_indexing() {
        assert_eq!(lucas(1), Ok(1));
        assert_eq!(lucas(2), Ok(3));
        assert_eq!(lucas(4), Ok(7));
        assert_eq!(lucas(5), Ok(11));
        assert_eq!(lucas(7), Ok(29));
        assert!(lucas(0).is_err());
    }

    #[test]
    fn ceiling_sum_examples() {
        assert_eq!(ceiling_half_sum(4), 6);
        assert_eq!(ceiling_half_sum(1), 1);
        assert_eq!(ceiling_half_sum(7), 16);
        assert_eq!(ceiling_half_sum(0), 0);
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(evaluate(FormulaTag::T31, 3), Ok(3));
        assert_eq!(evaluate(FormulaTag::T34, 4), Ok(8));
        assert_eq!(evaluate(FormulaTag::T41, 6), Ok(25));
        assert_eq!(evaluate(FormulaTag::T41, 5), Ok(14));
        assert_eq!(evaluate(FormulaTag::T42, 2), Ok(2));
        assert_eq!(evaluate(FormulaTag::T42, 3), Ok(4));
        assert_eq!(evaluate(FormulaTag::T42, 7), Ok(74));
        assert_eq!(evaluate(FormulaTag::T43, 7), Ok(35));
        assert_eq!(evaluate(FormulaTag::T33, 7), Ok(13));
    }

    #[test]
    fn hypotheses_are_enforced() {
        assert!(matches!(
            evaluate(FormulaTag::T31, 2),
            Err(Error::Domain { .. })
        ));
        assert!(matches!(
            evaluate(FormulaTag::T42, 1),
            Err(Error::Domain { .. })
        ));
        for tag in FormulaTag::ALL {
            assert!(evaluate(tag, 0).is_err(), "{tag}");
        }
    }

    #[test]
    fn overflow_is_reported() {
        assert_eq!(evaluate(FormulaTag::T34, 128), Ok(1u128 << 127));
        assert!(matches!(
            evaluate(FormulaTag::T34, 129),
            Err(Error::Overflow(_))
        ));
        assert!(matches!(
            evaluate(FormulaTag::T42, 200),
            Err(Error::Overflow(_))
        ));
        assert!(matches!(fibonacci(400), Err(Error::Overflow(_))));
    }

    #[test]
    fn table_rows() {
        let table = formula_table();
        assert_eq!(table.len(), 9);
        let t41 = table.iter().find(|f| f.tag == FormulaTag::T41).unwrap();
        assert_eq!(t41.chain_231.to_string(), "231,1432:231");
        assert_eq!(t41.chain_312.to_string(), "312,3214:312");
        let t33 = &table[2];
        assert_eq!(t33.tag, FormulaTag::T33);
        assert_eq!(
            (t33.chain_231.to_string(), t33.chain_312.to_string()),
            ("231,132:231".to_string(), "312,213:312".to_string())
        );
        for f in &table {
            assert_eq!(f.chain_231.reverse_complement(), f.chain_312, "{}", f.tag);
            assert_eq!(f.valid_from, f.tag.valid_from());
        }
        assert_eq!(table[0].valid_from, 3);
        assert_eq!(table[6].valid_from, 2);
    }

    #[test]
    fn tag_parsing() {
        assert_eq!("t41".parse::<FormulaTag>(), Ok(FormulaTag::T41));
        assert_eq!(FormulaTag::T35.to_string(), "T35");
        assert!("T36".parse::<FormulaTag>().is_err());
    }
}
