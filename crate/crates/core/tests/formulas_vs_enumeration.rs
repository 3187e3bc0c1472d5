use permchain::closed_forms::ceil_half;
use permchain::structure::admissible_breakpoints;
use permchain::{
    build_unimodal, ceiling_half_sum, classify_strong_312_ending_in_1, count_chain, evaluate,
    formula_table, parse_chain, strongly_avoids, Counter, FormulaTag, Pattern, Permutations,
};

#[test]
fn closed_forms_match_enumeration_on_both_sides() {
    let counter = Counter::with_jobs(4).unwrap();
    for f in formula_table() {
        if f.tag == FormulaTag::T31 {
            continue; // covered by t31_diverges_from_enumeration
        }
        for n in f.valid_from..=9 {
            let expected = evaluate(f.tag, n).unwrap();
            let right = counter.count_chain(n, &f.chain_312).unwrap().total;
            let left = counter.count_chain(n, &f.chain_231).unwrap().total;
            assert_eq!(u128::from(right), expected, "{} n={n} (312 side)", f.tag);
            assert_eq!(u128::from(left), expected, "{} n={n} (231 side)", f.tag);
        }
    }
}

/// The `2n − 3` form holds for n = 3, 4; enumeration gives `n + 1` from
/// n = 4 on. Only `δ_i` can sit in front of a decreasing tail without
/// creating a 123, so `c_n^(i) = 1` for `3 ≤ i ≤ n − 1`.
#[test]
fn t31_diverges_from_enumeration() {
    let chain = parse_chain("312,123:312").unwrap();
    let counter = Counter::with_jobs(4).unwrap();
    for n in 3..=9usize {
        let r = counter.count_chain(n, &chain).unwrap();
        let formula = evaluate(FormulaTag::T31, n).unwrap();
        if n <= 4 {
            assert_eq!(u128::from(r.total), formula);
        } else {
            assert_eq!(r.total, n as u64 + 1);
            assert_ne!(u128::from(r.total), formula);
        }
        if n >= 4 {
            let mut expected = vec![1u64; n];
            expected[n - 1] = 2;
            assert_eq!(r.by_position_of_one, expected, "n={n}");
        }
    }
}

#[test]
fn reverse_complement_pairs_count_equally() {
    for f in formula_table() {
        for n in 1..=8 {
            let a = count_chain(n, &f.chain_231).unwrap();
            let b = count_chain(n, &f.chain_312).unwrap();
            assert_eq!(a.total, b.total, "{} n={n}", f.tag);
            assert_eq!(a.total, a.by_position_of_one.iter().sum::<u64>());
            assert_eq!(b.total, b.by_position_of_one.iter().sum::<u64>());
        }
    }
}

#[test]
fn unimodal_characterization_is_exact() {
    let tau: Pattern = "312".parse().unwrap();
    for n in 1..=9 {
        let mut forms = 0;
        for pi in Permutations::new(n).filter(|p| p.get(n) == Some(1)) {
            let strong = strongly_avoids(&pi, &tau);
            let shaped = classify_strong_312_ending_in_1(&pi).unwrap();
            assert_eq!(strong, shaped.is_some(), "n={n} pi={pi}");
            if let Some(k) = shaped {
                assert!(k >= ceil_half(n));
                assert_eq!(build_unimodal(n, k).unwrap(), pi);
                forms += 1;
            }
        }
        assert_eq!(forms, permchain::count_strong_312_ending_in_1(n));
        assert_eq!(admissible_breakpoints(n).count(), n - ceil_half(n) + 1);
    }
}

#[test]
fn ceiling_sum_matches_direct_summation() {
    let mut direct: u128 = 0;
    for n in 1..=1000u64 {
        direct += u128::from(n.div_ceil(2));
        assert_eq!(ceiling_half_sum(n), direct, "n={n}");
    }
}

#[test]
fn recurrences_hold() {
    use FormulaTag::*;
    for n in 3..=60 {
        let lhs = evaluate(T41, n).unwrap();
        let rhs = evaluate(T41, n - 1).unwrap()
            + evaluate(T41, n - 2).unwrap()
            + (n - ceil_half(n)) as u128;
        assert_eq!(lhs, rhs, "T41 n={n}");
    }
    for n in 1..=30 {
        let prefix: u128 = (1..n).map(|i| evaluate(T34, i).unwrap()).sum();
        assert_eq!(evaluate(T34, n).unwrap(), prefix + 1, "T34 n={n}");
    }
    for n in 1..=60 {
        assert_eq!(evaluate(T33, n), evaluate(T35, n));
        assert_eq!(evaluate(T43, n), evaluate(T44, n));
    }
}
