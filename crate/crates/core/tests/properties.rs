use proptest::prelude::*;

use shifted_crystal::crystal::{primed_lower, primed_raise, sigma, unprimed_lower, unprimed_raise};
use shifted_crystal::involutions::{eta, eta_interval, reversal, IntervalPermutation};
use shifted_crystal::jdt::{knuth_equivalent, rectify, rectify_word};
use shifted_crystal::{Letter, PrimedWord, ShiftedTableau, SkewShape};

fn letters(n: u8, max_len: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec((1..=n, any::<bool>()), 0..=max_len)
        .prop_map(|v| v.into_iter().map(|(value, primed)| Letter { value, primed }).collect())
}

fn tableau() -> impl Strategy<Value = ShiftedTableau> {
    let shapes = ["4,2/1", "4,3,1/2", "5,3,1/3,1", "3,2", "4,1", "5,2/2"];
    (0..shapes.len(), 3u8..=4, any::<prop::sample::Index>()).prop_filter_map("empty crystal", move |(s, n, idx)| {
        let all = ShiftedTableau::enumerate(&shapes[s].parse::<SkewShape>().unwrap(), n);
        (!all.is_empty()).then(|| all[idx.index(all.len())].clone())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn canonical_form_is_idempotent(w in letters(4, 10)) {
        let c = PrimedWord::canonicalize(&w, 4).unwrap();
        prop_assert_eq!(PrimedWord::canonicalize(c.letters(), 4).unwrap(), c.clone());
        prop_assert_eq!(PrimedWord::destandardize(&c.standardize(), &c.weight()), Some(c));
    }

    #[test]
    fn operators_on_words_are_coplactic(w in letters(3, 7), i in 1usize..=2) {
        let w = PrimedWord::canonicalize(&w, 3).unwrap();
        let r = rectify_word(&w);
        for (op, name) in [(primed_lower as fn(&ShiftedTableau, usize) -> Option<ShiftedTableau>, "F'"),
                           (primed_raise, "E'"), (unprimed_lower, "F"), (unprimed_raise, "E")] {
            let strip = shifted_crystal::jdt::strip_tableau(&w);
            let moved = op(&strip, i).map(|t| rectify(&t).0);
            prop_assert_eq!(moved, op(&r, i), "{} on {}", name, w);
        }
    }

    #[test]
    fn rectification_class_is_knuth_class(a in letters(2, 5), b in letters(2, 5)) {
        let a = PrimedWord::canonicalize(&a, 2).unwrap();
        let b = PrimedWord::canonicalize(&b, 2).unwrap();
        prop_assert_eq!(knuth_equivalent(&a, &b, 8).unwrap(), rectify_word(&a) == rectify_word(&b));
    }

    #[test]
    fn involutions(t in tableau()) {
        let n = t.n() as usize;
        let e = eta(&t);
        prop_assert_eq!(eta(&e), t.clone());
        prop_assert_eq!(e.weight(), t.weight().reversed());
        prop_assert_eq!(reversal(&t), e);
        for p in 1..n {
            for q in p + 1..=n {
                let x = eta_interval(&t, p, q).unwrap();
                prop_assert_eq!(x.weight(), IntervalPermutation::new(p, q).weight(&t.weight()));
                prop_assert_eq!(eta_interval(&x, p, q).unwrap(), t.clone());
            }
            let s = sigma(&t, p).unwrap();
            prop_assert_eq!(&s, &eta_interval(&t, p, p + 1).unwrap());
            prop_assert_eq!(rectify(&s).0, sigma(&rectify(&t).0, p).unwrap());
        }
    }

    #[test]
    fn lowering_then_raising(t in tableau(), i in 1usize..=3) {
        prop_assume!(i < t.n() as usize);
        if let Some(u) = unprimed_lower(&t, i) {
            prop_assert_eq!(u.weight(), t.weight().shift_alpha(i, false).unwrap());
            prop_assert_eq!(unprimed_raise(&u, i), Some(t.clone()));
        }
        if let Some(u) = primed_lower(&t, i) {
            prop_assert_eq!(primed_raise(&u, i), Some(t.clone()));
        }
    }
}
