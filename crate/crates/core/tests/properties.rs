mod common;

use proptest::prelude::*;
use pushpa_core::braid::Permutation;
use pushpa_core::{
    apply_word, band_generator, estimate_dilatation, push_braid, push_word, BraidWord, GrowthOptions, GrowthStatus,
    LamCoord, LoopLetter, LoopWord, Sign,
};

fn strands_and_word(max_len: usize) -> impl Strategy<Value = (usize, Vec<i32>)> {
    (3usize..=8).prop_flat_map(move |n| {
        let letter = (1..n as i32, any::<bool>()).prop_map(|(i, pos)| if pos { i } else { -i });
        (Just(n), prop::collection::vec(letter, 0..max_len))
    })
}

fn coord(n: usize) -> impl Strategy<Value = LamCoord> {
    (prop::collection::vec(-500i64..=500, n - 2), prop::collection::vec(-500i64..=500, n - 2))
        .prop_map(move |(a, b)| LamCoord::from_i64(n, &a, &b).unwrap())
}

fn word_and_coord(max_len: usize) -> impl Strategy<Value = (BraidWord, LamCoord)> {
    strands_and_word(max_len).prop_flat_map(|(n, l)| (Just(BraidWord::from_signed(n, &l).unwrap()), coord(n)))
}

fn three_words() -> impl Strategy<Value = (BraidWord, BraidWord, BraidWord)> {
    (3usize..=7).prop_flat_map(|n| {
        let letter = (1..n as i32, any::<bool>()).prop_map(|(i, pos)| if pos { i } else { -i });
        let w = prop::collection::vec(letter, 0..12).prop_map(move |l| BraidWord::from_signed(n, &l).unwrap());
        (w.clone(), w.clone(), w)
    })
}

proptest! {
    #[test]
    fn composition_is_associative((u, v, w) in three_words()) {
        let left = u.compose(&v).unwrap().compose(&w).unwrap();
        let right = u.compose(&v.compose(&w).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn inverse_cancels((n, l) in strands_and_word(20)) {
        let w = BraidWord::from_signed(n, &l).unwrap();
        prop_assert!(w.compose(&w.inverse()).unwrap().is_empty());
        prop_assert!(w.inverse().compose(&w).unwrap().is_empty());
        prop_assert_eq!(w.inverse().inverse(), w);
    }

    #[test]
    fn permutation_is_a_homomorphism((u, v, _) in three_words()) {
        let uv = u.compose(&v).unwrap();
        prop_assert_eq!(uv.permutation(), u.permutation().then(&v.permutation()));
        prop_assert!(u.compose(&u.inverse()).unwrap().permutation().is_identity());
    }

    #[test]
    fn text_round_trip((n, l) in strands_and_word(20)) {
        let w = BraidWord::from_signed(n, &l).unwrap();
        let back: BraidWord = w.to_string().parse().unwrap();
        prop_assert_eq!(back, w);
    }

    #[test]
    fn action_round_trips_exactly((w, x) in word_and_coord(25)) {
        let y = apply_word(&x, &w).unwrap();
        prop_assert_eq!(apply_word(&y, &w.inverse()).unwrap(), x);
    }

    #[test]
    fn action_is_a_homomorphism((u, v, _) in three_words(), seed in prop::collection::vec(-200i64..=200, 12)) {
        let n = u.strands();
        let x = LamCoord::from_i64(n, &seed[..n - 2], &seed[6..6 + n - 2]).unwrap();
        let stepwise = apply_word(&apply_word(&x, &u).unwrap(), &v).unwrap();
        prop_assert_eq!(apply_word(&x, &u.compose(&v).unwrap()).unwrap(), stepwise);
    }

    #[test]
    fn braid_relations_hold(n in 4usize..=8, i in 1usize..7, j in 1usize..8, neg in any::<bool>(), seed in prop::collection::vec(-1000i64..=1000, 12)) {
        prop_assume!(i + 1 < n && j < n);
        let x = LamCoord::from_i64(n, &seed[..n - 2], &seed[6..6 + n - 2]).unwrap();
        let s = if neg { -1 } else { 1 };
        let (i, j) = (i as i32, j as i32);
        let l = BraidWord::from_signed(n, &[s * i, s * (i + 1), s * i]).unwrap();
        let r = BraidWord::from_signed(n, &[s * (i + 1), s * i, s * (i + 1)]).unwrap();
        prop_assert_eq!(apply_word(&x, &l).unwrap(), apply_word(&x, &r).unwrap());
        if (i - j).abs() >= 2 {
            let l = BraidWord::from_signed(n, &[s * i, j]).unwrap();
            let r = BraidWord::from_signed(n, &[j, s * i]).unwrap();
            prop_assert_eq!(apply_word(&x, &l).unwrap(), apply_word(&x, &r).unwrap());
        }
    }

    #[test]
    fn band_generators_are_pure(n in 3usize..=9, i in 1usize..9, j in 2usize..=9) {
        prop_assume!(i < j && j <= n);
        let a = band_generator(i, j, n).unwrap();
        prop_assert!(a.permutation().is_identity());
        prop_assert_eq!(a.len(), 2 * (j - i - 1) + 2);
    }

    #[test]
    fn push_is_a_homomorphism(n in 3usize..=7, l1 in prop::collection::vec((1usize..6, any::<bool>()), 0..6), l2 in prop::collection::vec((1usize..6, any::<bool>()), 0..6)) {
        let letters = |l: &[(usize, bool)]| -> Vec<LoopLetter> {
            l.iter().map(|&(g, p)| LoopLetter::new(1 + (g - 1) % (n - 1), if p { Sign::Pos } else { Sign::Neg })).collect()
        };
        let (a, b) = (letters(&l1), letters(&l2));
        let joined: Vec<LoopLetter> = a.iter().chain(&b).copied().collect();
        let pa = push_word(n, &a).unwrap();
        let pb = push_word(n, &b).unwrap();
        prop_assert_eq!(push_word(n, &joined).unwrap(), pa.compose(&pb).unwrap());
        prop_assert!(pa.permutation().is_identity());
        let inverse: Vec<LoopLetter> = a.iter().rev().map(|l| l.inverse()).collect();
        prop_assert_eq!(push_word(n, &inverse).unwrap(), pa.inverse());
    }

    #[test]
    fn loop_text_round_trip(n in 3usize..=7, l in prop::collection::vec((1usize..6, any::<bool>()), 0..10)) {
        let signed: Vec<i32> = l.iter().map(|&(g, p)| (1 + (g - 1) % (n - 1)) as i32 * if p { 1 } else { -1 }).collect();
        let lp = LoopWord::from_signed(n, &signed).unwrap();
        let back: LoopWord = lp.to_string().parse().unwrap();
        prop_assert_eq!(back, lp.clone());
        if !lp.is_trivial() {
            let push = push_braid(&lp).unwrap();
            prop_assert_eq!(push.pushed_strand, n);
            prop_assert!(push.braid.permutation().is_identity());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn dilatation_is_a_conjugacy_invariant(c in prop::collection::vec((1i32..3, any::<bool>()), 0..8)) {
        let base = BraidWord::from_signed(3, &[2, -1]).unwrap();
        let c: Vec<i32> = c.iter().map(|&(i, p)| if p { i } else { -i }).collect();
        let c = BraidWord::from_signed(3, &c).unwrap();
        let conj = c.compose(&base).unwrap().compose(&c.inverse()).unwrap();
        let opts = GrowthOptions::default();
        let r = estimate_dilatation(&conj, &opts).unwrap();
        prop_assert_eq!(r.status, GrowthStatus::Converged);
        prop_assert!((r.lambda_hat - common::reference_dilatation(3)).abs() < 2e-6);
    }

    #[test]
    fn dilatation_of_powers(p in prop_oneof![Just(-3i64), Just(-2), Just(-1), Just(2), Just(3), Just(4)], strands in 3usize..=5) {
        let (n, l) = common::REFERENCE_WORDS[strands - 3];
        let w = BraidWord::from_signed(n, l).unwrap().power(p);
        let r = estimate_dilatation(&w, &GrowthOptions::default()).unwrap();
        let want = common::reference_dilatation(n).powi(p.unsigned_abs() as i32);
        prop_assert_eq!(r.status, GrowthStatus::Converged);
        prop_assert!((r.lambda_hat - want).abs() < 2e-6 * want.max(1.0), "{} vs {}", r.lambda_hat, want);
    }
}

#[test]
fn permutation_identity_composes() {
    let p = BraidWord::from_signed(4, &[1, 2, 3]).unwrap().permutation();
    assert_eq!(p.then(&Permutation::identity(4)), p);
    assert_eq!(Permutation::identity(4).then(&p), p);
}
