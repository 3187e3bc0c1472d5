//! Permutations in one-line notation.
//!
//! A [`Permutation`] of length `n` stores the word `π(1) π(2) … π(n)` with
//! values in `1..=n`. Positions are 1-based everywhere in the public API
//! (`get`, text form); the backing slice is 0-indexed.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Permutation {
    values: Vec<u32>,
}

impl Permutation {
    /// Builds a permutation from its one-line word, checking bijectivity.
    pub fn new(values: Vec<u32>) -> Result<Self> {
        check_bijective(&values)?;
        Ok(Permutation { values })
    }

    /// Builds a permutation without checking. Callers guarantee `values` is a
    /// rearrangement of `1..=values.len()`.
    pub(crate) fn from_vec_unchecked(values: Vec<u32>) -> Self {
        debug_assert!(check_bijective(&values).is_ok());
        Permutation { values }
    }

    pub fn empty() -> Self {
        Permutation { values: Vec::new() }
    }

    /// `id_n = 1 2 … n`.
    pub fn identity(n: usize) -> Self {
        Permutation {
            values: (1..=n as u32).collect(),
        }
    }

    /// `δ_n = n … 2 1`.
    pub fn reverse_identity(n: usize) -> Self {
        Permutation {
            values: (1..=n as u32).rev().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn into_values(self) -> Vec<u32> {
        self.values
    }

    /// `π(i)` for a 1-based position `i`.
    pub fn get(&self, i: usize) -> Option<u32> {
        i.checked_sub(1).and_then(|j| self.values.get(j).copied())
    }

    /// 1-based position holding the value 1, if any.
    pub fn position_of_one(&self) -> Option<usize> {
        self.values.iter().position(|&v| v == 1).map(|j| j + 1)
    }

    /// `(outer ∘ inner)(i) = outer(inner(i))`.
    pub fn compose(outer: &Permutation, inner: &Permutation) -> Result<Permutation> {
        if outer.len() != inner.len() {
            return Err(Error::LengthMismatch {
                left: outer.len(),
                right: inner.len(),
            });
        }
        let mut out = vec![0; outer.len()];
        compose_into(&outer.values, &inner.values, &mut out);
        Ok(Permutation { values: out })
    }

    /// `self ∘ self ∘ … ∘ self` (`k` factors); `power(0)` is the identity.
    pub fn power(&self, k: u32) -> Permutation {
        // square-and-multiply; powers of one permutation commute
        let mut result = Permutation::identity(self.len());
        let mut base = self.clone();
        let mut scratch = vec![0; self.len()];
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                compose_into(&base.values, &result.values, &mut scratch);
                std::mem::swap(&mut result.values, &mut scratch);
            }
            e >>= 1;
            if e > 0 {
                compose_into(&base.values, &base.values, &mut scratch);
                std::mem::swap(&mut base.values, &mut scratch);
            }
        }
        result
    }

    pub fn inverse(&self) -> Permutation {
        let mut out = vec![0; self.len()];
        for (i, &v) in self.values.iter().enumerate() {
            out[v as usize - 1] = i as u32 + 1;
        }
        Permutation { values: out }
    }

    /// `rev(π) = π_n … π_1`.
    pub fn reverse(&self) -> Permutation {
        Permutation {
            values: self.values.iter().rev().copied().collect(),
        }
    }

    /// `comp(π)_i = n + 1 - π_i`.
    pub fn complement(&self) -> Permutation {
        let top = self.len() as u32 + 1;
        Permutation {
            values: self.values.iter().map(|&v| top - v).collect(),
        }
    }

    /// `comp(rev(π))`. Commutes with taking powers.
    pub fn reverse_complement(&self) -> Permutation {
        let top = self.len() as u32 + 1;
        Permutation {
            values: self.values.iter().rev().map(|&v| top - v).collect(),
        }
    }

    /// `σ ⊕ μ`: σ followed by μ shifted up by `|σ|`.
    pub fn direct_sum(sigma: &Permutation, mu: &Permutation) -> Permutation {
        let shift = sigma.len() as u32;
        let mut values = Vec::with_capacity(sigma.len() + mu.len());
        values.extend_from_slice(&sigma.values);
        values.extend(mu.values.iter().map(|&v| v + shift));
        Permutation { values }
    }

    /// `σ ⊖ μ`: σ shifted up by `|μ|`, followed by μ.
    pub fn skew_sum(sigma: &Permutation, mu: &Permutation) -> Permutation {
        let shift = mu.len() as u32;
        let mut values = Vec::with_capacity(sigma.len() + mu.len());
        values.extend(sigma.values.iter().map(|&v| v + shift));
        values.extend_from_slice(&mu.values);
        Permutation { values }
    }
}

/// `out[i] = outer[inner[i] - 1]` on raw one-line words.
pub(crate) fn compose_into(outer: &[u32], inner: &[u32], out: &mut [u32]) {
    for (o, &j) in out.iter_mut().zip(inner) {
        *o = outer[j as usize - 1];
    }
}

fn check_bijective(values: &[u32]) -> Result<()> {
    let n = values.len();
    let mut seen = vec![false; n];
    for &v in values {
        let idx = v as usize;
        if idx == 0 || idx > n {
            return Err(Error::NotBijective {
                len: n,
                detail: format!("value {v} out of range"),
            });
        }
        if std::mem::replace(&mut seen[idx - 1], true) {
            return Err(Error::NotBijective {
                len: n,
                detail: format!("value {v} repeated"),
            });
        }
    }
    Ok(())
}

impl fmt::Display for Permutation {
    /// Digit string for `n <= 9`, comma-separated integers otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.values {
                write!(f, "{v}")?;
            }
        } else {
            for (i, v) in self.values.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let parse_err = |reason: String| Error::Parse {
            token: s.trim().to_string(),
            reason,
        };
        let values = if text.contains(',') {
            text.split(',')
                .map(|part| {
                    part.parse::<u32>()
                        .map_err(|_| parse_err(format!("`{part}` is not a positive integer")))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            text.chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| parse_err(format!("unexpected character `{c}`")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Permutation::new(values).map_err(|e| parse_err(e.to_string()))
    }
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = Error;

    fn try_from(values: Vec<u32>) -> Result<Self> {
        Permutation::new(values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn identity_and_reverse_identity() {
        assert_eq!(Permutation::identity(3), p("123"));
        assert_eq!(Permutation::identity(5), p("12345"));
        assert!(Permutation::identity(0).is_empty());
        assert_eq!(Permutation::reverse_identity(4), p("4321"));
        assert_eq!(Permutation::reverse_identity(1), p("1"));
        assert!(Permutation::reverse_identity(0).is_empty());
    }

    #[test]
    fn compose_examples() {
        assert_eq!(
            Permutation::compose(&p("231"), &p("231")).unwrap(),
            p("312")
        );
        assert_eq!(
            Permutation::compose(&Permutation::identity(4), &p("3142")).unwrap(),
            p("3142")
        );
        assert_eq!(Permutation::compose(&p("21"), &p("21")).unwrap(), p("12"));
        assert_eq!(
            Permutation::compose(&p("21"), &p("123")),
            Err(Error::LengthMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn power_examples() {
        // 1432 is an involution: 4 <-> 2 swap, 1 and 3 fixed
        assert_eq!(p("1432").power(2), p("1234"));
        assert_eq!(p("3142").power(0), Permutation::identity(4));
        assert_eq!(p("3142").power(1), p("3142"));
        assert_eq!(p("15432").power(2), Permutation::identity(5));
        assert_eq!(p("231").power(3), p("123"));
    }

    #[test]
    fn symmetry_examples() {
        assert_eq!(p("24153").reverse(), p("35142"));
        assert_eq!(Permutation::identity(3).reverse(), p("321"));
        assert!(Permutation::empty().reverse().is_empty());
        assert_eq!(p("231").complement(), p("213"));
        assert_eq!(
            Permutation::identity(4).complement(),
            Permutation::reverse_identity(4)
        );
        assert_eq!(p("3142").complement().complement(), p("3142"));
        assert_eq!(p("231").reverse_complement(), p("312"));
        assert_eq!(p("1432").reverse_complement(), p("3214"));
        assert_eq!(p("1423").reverse_complement(), p("2314"));
    }

    #[test]
    fn sums() {
        assert_eq!(Permutation::direct_sum(&p("1"), &p("21")), p("132"));
        assert_eq!(
            Permutation::direct_sum(&Permutation::empty(), &p("3142")),
            p("3142")
        );
        assert_eq!(Permutation::direct_sum(&p("21"), &p("21")), p("2143"));
        assert_eq!(Permutation::skew_sum(&p("1"), &p("21")), p("321"));
        assert_eq!(
            Permutation::skew_sum(&Permutation::identity(2), &p("1")),
            p("231")
        );
        assert_eq!(
            Permutation::skew_sum(&Permutation::empty(), &p("3142")),
            p("3142")
        );
    }

    #[test]
    fn text_form() {
        assert_eq!(p("24153").to_string(), "24153");
        let big = Permutation::reverse_identity(10);
        assert_eq!(big.to_string(), "10,9,8,7,6,5,4,3,2,1");
        assert_eq!(big.to_string().parse::<Permutation>().unwrap(), big);
        assert_eq!(p(" 2 1 3 "), p("213"));
        assert_eq!(p("2,1,3"), p("213"));
        assert_eq!("".parse::<Permutation>().unwrap(), Permutation::empty());
        assert!("122".parse::<Permutation>().is_err());
        assert!("13".parse::<Permutation>().is_err());
        assert!("1a".parse::<Permutation>().is_err());
        assert!("0".parse::<Permutation>().is_err());
    }

    #[test]
    fn get_is_one_based() {
        let q = p("3142");
        assert_eq!(q.get(1), Some(3));
        assert_eq!(q.get(4), Some(2));
        assert_eq!(q.get(0), None);
        assert_eq!(q.position_of_one(), Some(2));
        assert_eq!(q.inverse(), p("2413"));
    }

    fn perm_up_to(max: usize) -> impl Strategy<Value = Permutation> {
        (0..=max)
            .prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(Permutation::from_vec_unchecked)
    }

    fn same_length_triple(
        max: usize,
    ) -> impl Strategy<Value = (Permutation, Permutation, Permutation)> {
        (0..=max).prop_flat_map(|n| {
            let one = || {
                Just((1..=n as u32).collect::<Vec<_>>())
                    .prop_shuffle()
                    .prop_map(Permutation::from_vec_unchecked)
            };
            (one(), one(), one())
        })
    }

    /// k-fold composition, independent of the square-and-multiply path.
    fn naive_power(pi: &Permutation, k: u32) -> Permutation {
        let mut acc = Permutation::identity(pi.len());
        for _ in 0..k {
            acc = Permutation::compose(pi, &acc).unwrap();
        }
        acc
    }

    proptest! {
        #[test]
        fn involutions(pi in perm_up_to(7)) {
            prop_assert_eq!(pi.reverse().reverse(), pi.clone());
            prop_assert_eq!(pi.complement().complement(), pi.clone());
            prop_assert_eq!(pi.reverse_complement(), pi.reverse().complement());
        }

        #[test]
        fn reverse_complement_commutes_with_power(pi in perm_up_to(6), k in 0u32..=4) {
            prop_assert_eq!(pi.power(k).reverse_complement(), pi.reverse_complement().power(k));
        }

        #[test]
        fn direct_sum_powers_blockwise(sigma in perm_up_to(4), mu in perm_up_to(3), k in 1u32..=3) {
            let lhs = Permutation::direct_sum(&sigma, &mu).power(k);
            let rhs = Permutation::direct_sum(&sigma.power(k), &mu.power(k));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn power_laws(pi in perm_up_to(6), a in 0u32..=3, b in 0u32..=3) {
            prop_assert_eq!(pi.power(a), naive_power(&pi, a));
            let split = Permutation::compose(&pi.power(a), &pi.power(b)).unwrap();
            prop_assert_eq!(pi.power(a + b), split);
        }

        #[test]
        fn compose_associative((x, y, z) in same_length_triple(6)) {
            let left = Permutation::compose(&Permutation::compose(&x, &y).unwrap(), &z).unwrap();
            let right = Permutation::compose(&x, &Permutation::compose(&y, &z).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn sums_are_permutations(sigma in perm_up_to(4), mu in perm_up_to(4)) {
            let d = Permutation::direct_sum(&sigma, &mu);
            let s = Permutation::skew_sum(&sigma, &mu);
            prop_assert!(Permutation::new(d.into_values()).is_ok());
            prop_assert!(Permutation::new(s.into_values()).is_ok());
        }

        #[test]
        fn text_round_trip(pi in perm_up_to(12)) {
            prop_assert_eq!(pi.to_string().parse::<Permutation>().unwrap(), pi);
        }
    }
}
