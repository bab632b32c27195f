//! Randomized invariants. Each property restates a fact the deterministic
//! tests pin at specific points, quantified over generated inputs instead.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use avoidance::{
    balanced_factor, certify, contains_instance, count_avoiders, count_instances, find_instance,
    golod_series, instance_series, parikh_prefixes, ratio_check, Pattern, TruncatedSeries,
    Verdict, DEFAULT_BUDGET,
};

/// Canonical pattern text: each new variable enters in alphabet order, so
/// the string parses back to exactly these symbols.
fn pattern_text(symbols: &[u8]) -> String {
    symbols.iter().map(|&s| (b'x' + s) as char).collect()
}

fn arb_symbols(max_vars: u8, max_len: usize) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0..max_vars, 1..=max_len).prop_map(|raw| {
        let mut next = 0u8;
        let mut map = [u8::MAX; 8];
        raw.into_iter()
            .map(|v| {
                let slot = &mut map[v as usize];
                if *slot == u8::MAX {
                    *slot = next;
                    next += 1;
                }
                *slot
            })
            .collect()
    })
}

fn arb_series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(-1_000_000i64..=1_000_000, order)
        .prop_map(|tail| {
            let mut coeffs = vec![BigInt::one()];
            coeffs.extend(tail.into_iter().map(BigInt::from));
            TruncatedSeries::from_coeffs(coeffs).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    /// a * (1/a) == 1 for any unit constant term and any truncation order.
    #[test]
    fn reciprocal_inverts(a in (1usize..=48).prop_flat_map(arb_series)) {
        let order = a.order();
        let r = a.reciprocal(order).unwrap();
        prop_assert_eq!(a.mul(&r), TruncatedSeries::one(order));
    }

    /// The instance series only sees how often each variable occurs, never
    /// in what order the variables are listed.
    #[test]
    fn instance_series_ignores_variable_order(
        mut occ in prop::collection::vec(1usize..=5, 1..=4),
        m in 2u32..=4,
    ) {
        let original = instance_series(&occ, m, 12).unwrap();
        occ.reverse();
        let reversed = instance_series(&occ, m, 12).unwrap();
        prop_assert_eq!(original, reversed);
    }

    /// The bound series satisfies its defining recurrence
    /// b_n = m b_{n-1} - sum_j c_j b_{n-j} with b_0 = 1.
    #[test]
    fn golod_series_satisfies_recurrence(
        symbols in arb_symbols(3, 6),
        m in 2u32..=4,
    ) {
        // Length-1 patterns have length-1 instances; the bound needs c_1 = 0.
        prop_assume!(symbols.len() >= 2);
        let p = Pattern::parse(&pattern_text(&symbols)).unwrap();
        let order = 20usize;
        let c = instance_series(p.occurrence_counts(), m, order).unwrap();
        let b = golod_series(m, &c, order).unwrap();
        prop_assert_eq!(b.coeff(0), BigInt::one());
        for n in 1..=order {
            let mut rhs = BigInt::from(m) * b.coeff(n - 1);
            for j in 2..=n {
                rhs -= c.coeff(j) * b.coeff(n - j);
            }
            prop_assert_eq!(b.coeff(n), rhs, "recurrence broken at n={}", n);
        }
    }

    /// Prefix count vectors difference back to factor counts: the counts of
    /// word[i..j] are v_j - v_i, reduced mod m.
    #[test]
    fn prefix_vectors_difference_to_factors(
        word in prop::collection::vec(0u8..3, 1..=40),
        m in 2u32..=5,
        raw_i in 0usize..40,
        raw_j in 0usize..40,
    ) {
        let k = 3;
        let mut i = raw_i % (word.len() + 1);
        let mut j = raw_j % (word.len() + 1);
        if i > j {
            std::mem::swap(&mut i, &mut j);
        }
        let prefixes = parikh_prefixes(&word, k, m);
        let diff = prefixes[j].sub_mod(&prefixes[i]);
        let mut counts = vec![0u32; k];
        for &a in &word[i..j] {
            counts[a as usize] = (counts[a as usize] + 1) % m;
        }
        prop_assert_eq!(diff.counts(), counts.as_slice());
    }

    /// Any word long enough (length >= m^k) contains a factor whose letter
    /// counts all vanish mod m, and the reported span is such a factor.
    #[test]
    fn long_words_have_balanced_factors(
        (k, m, word) in (1usize..=3, 2u32..=3).prop_flat_map(|(k, m)| {
            let len = (m as usize).pow(k as u32);
            (Just(k), Just(m), prop::collection::vec(0..k as u8, len..len + 8))
        }),
    ) {
        let span = balanced_factor(&word, k, m).expect("guaranteed by length");
        prop_assert!(span.start < span.end);
        let mut counts = vec![0u32; k];
        for &a in &word[span.start..span.end] {
            counts[a as usize] += 1;
        }
        prop_assert!(counts.iter().all(|c| c % m == 0));
    }

    /// A reported match is a real one: applying the assignment to the
    /// pattern reproduces the word, with every image non-empty.
    #[test]
    fn found_assignments_reproduce_the_word(
        symbols in arb_symbols(3, 5),
        word in prop::collection::vec(0u8..2, 1..=12),
    ) {
        let p = Pattern::parse(&pattern_text(&symbols)).unwrap();
        if let Some(assignment) = find_instance(&word, &p) {
            prop_assert!(assignment.images().iter().all(|img| !img.is_empty()));
            prop_assert_eq!(assignment.apply(&p), word);
        }
    }

    /// Renaming variables never changes the parsed structure: first-use
    /// reindexing canonicalizes any bijective relettering.
    #[test]
    fn parsing_canonicalizes_renamings(
        symbols in arb_symbols(3, 8),
        perm_seed in 0usize..6,
    ) {
        let perms: [[usize; 3]; 6] =
            [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let perm = perms[perm_seed];
        let letters = ['x', 'y', 'z'];
        let renamed: String = symbols.iter().map(|&s| letters[perm[s as usize]]).collect();
        let p = Pattern::parse(&pattern_text(&symbols)).unwrap();
        let q = Pattern::parse(&renamed).unwrap();
        prop_assert_eq!(p.symbols(), q.symbols());
        prop_assert_eq!(p.occurrence_counts(), q.occurrence_counts());
    }

    /// A word with no instance anywhere has no factor containing one.
    #[test]
    fn avoidance_is_factor_closed(
        symbols in arb_symbols(2, 4),
        word in prop::collection::vec(0u8..3, 1..=10),
    ) {
        let p = Pattern::parse(&pattern_text(&symbols)).unwrap();
        if !contains_instance(&word, &p) {
            for start in 0..word.len() {
                for end in start + 1..=word.len() {
                    prop_assert!(!contains_instance(&word[start..end], &p));
                }
            }
        }
    }
}

proptest! {
    // The enumeration-backed properties walk exponential spaces, so they run
    // fewer cases with tighter size bounds.
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Exhaustive instance counts never exceed the series coefficient.
    #[test]
    fn instance_counts_respect_the_bound(
        symbols in arb_symbols(2, 4),
        m in 2u32..=3,
        n in 0usize..=8,
    ) {
        let p = Pattern::parse(&pattern_text(&symbols)).unwrap();
        let exact = count_instances(m, &p, n, DEFAULT_BUDGET).unwrap();
        let bound = instance_series(p.occurrence_counts(), m, n).unwrap();
        prop_assert!(BigInt::from(exact) <= bound.coeff(n));
    }

    /// Wherever the bound series stays non-negative, it undercounts the
    /// avoiders found by exhaustive search.
    #[test]
    fn avoider_counts_respect_the_bound(
        symbols in arb_symbols(2, 5),
        m in 2u32..=3,
    ) {
        prop_assume!(symbols.len() >= 2);
        let n_max = 8usize;
        let p = Pattern::parse(&pattern_text(&symbols)).unwrap();
        let table = count_avoiders(m, &p, n_max, DEFAULT_BUDGET).unwrap();
        let c = instance_series(p.occurrence_counts(), m, n_max).unwrap();
        let b = golod_series(m, &c, n_max).unwrap();
        for n in 0..=n_max {
            if (0..=n).any(|j| b.coeff(j).is_negative()) {
                break;
            }
            prop_assert!(BigInt::from(table.counts()[n]) >= b.coeff(n));
        }
    }

    /// When every variable is forced mu times over and the closed form
    /// holds, the concrete series backs it up order by order.
    #[test]
    fn closed_form_implies_concrete_growth(
        (m, mu, lambda_num) in prop_oneof![
            (Just(3u32), Just(3u32), 145i64..=147),
            (Just(2u32), Just(4u32), 95i64..=97),
        ],
        extra in prop::collection::vec(0usize..=2, 2..=3),
    ) {
        let lambda = BigRational::new(BigInt::from(lambda_num), BigInt::from(50));
        let occ: Vec<usize> = extra.iter().map(|e| mu as usize + e).collect();
        let c = instance_series(&occ, m, 60).unwrap();
        let b = golod_series(m, &c, 60).unwrap();
        let check = ratio_check(&b, &lambda, m, mu);
        prop_assert!(check.passed, "failed at {:?} for occ={:?}", check.first_failure, occ);
    }

    /// Raising the alphabet size never weakens a certificate: anything
    /// settled over m letters stays settled over more.
    #[test]
    fn certificates_are_monotone_in_alphabet_size(
        symbols in arb_symbols(2, 8),
    ) {
        let p = Pattern::parse(&pattern_text(&symbols)).unwrap();
        let at = |target| certify(&p, target, 60).unwrap().verdict;
        if matches!(at(2), Verdict::Proved | Verdict::Cited) {
            prop_assert_ne!(at(3), Verdict::Inconclusive);
            prop_assert_ne!(at(4), Verdict::Inconclusive);
        }
    }

    /// Zero constant term in the multiplicand is preserved: instance series
    /// always start 0, 0 and stay coefficient-wise non-negative.
    #[test]
    fn instance_series_shape(
        occ in prop::collection::vec(1usize..=4, 1..=4),
        m in 1u32..=4,
    ) {
        let c = instance_series(&occ, m, 16).unwrap();
        prop_assert!(c.coeff(0).is_zero());
        prop_assert!(c.coeff(1).is_zero() || occ == vec![1]);
        for n in 0..=16 {
            prop_assert!(!c.coeff(n).is_negative());
        }
        let min_len: usize = occ.iter().sum();
        for n in 0..min_len.min(17) {
            prop_assert!(c.coeff(n).is_zero(), "no instance shorter than {}", min_len);
        }
    }
}
