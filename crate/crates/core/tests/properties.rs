use proptest::prelude::*;

use supercrystal::alphabet::{Letter, Rank};
use supercrystal::crystal::Crystal;
use supercrystal::matrix::SuperMatrix;
use supercrystal::partition::{GeneralizedPartition, Partition};
use supercrystal::semi::{build_script_a, RationalTableau, SemiMatrix, SemiTableau};
use supercrystal::tableau::{p_tableau, HookTableau};
use supercrystal::word::Word;

fn rank() -> impl Strategy<Value = Rank> {
    (0usize..=3, 0usize..=3).prop_filter("non-empty alphabet", |(m, n)| m + n > 0).prop_map(|(m, n)| Rank::new(m, n))
}

fn word_in(rank: Rank, max: usize) -> impl Strategy<Value = Vec<Letter>> {
    let letters = rank.letters();
    prop::collection::vec(prop::sample::select(letters), 0..=max)
}

fn matrix22() -> impl Strategy<Value = SuperMatrix> {
    let r = Rank::new(2, 2);
    prop::collection::vec(0u32..=2, 16).prop_filter_map("barred entries are free", move |v| {
        let rows: Vec<Vec<u32>> = v.chunks(4).map(|c| c.to_vec()).collect();
        SuperMatrix::from_rows(r, r, &rows).ok()
    })
}

proptest! {
    #[test]
    fn insertion_keeps_the_weight(r in rank(), seed in any::<u64>()) {
        let letters = r.letters();
        let w: Vec<Letter> = (0..8).map(|k| letters[((seed >> (k * 4)) as usize) % letters.len()]).collect();
        let p = p_tableau(r, &w);
        prop_assert!(p.validate().is_ok());
        prop_assert_eq!(p.weight(), Word::new(w.clone()).weight());
        prop_assert_eq!(p.size(), w.len());
    }

    #[test]
    fn reading_word_reinserts(w in rank().prop_flat_map(|r| (Just(r), word_in(r, 9)))) {
        let (r, w) = w;
        let p = p_tableau(r, &w);
        let again = p_tableau(r, p.column_reading().letters());
        prop_assert_eq!(&again, &p);
        let back = HookTableau::from_reading(r, &p.shape(), p.column_reading().letters()).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn operators_are_partial_inverses(w in word_in(Rank::new(2, 2), 7)) {
        let w = Word::new(w);
        for i in Rank::new(2, 2).indices() {
            if let Some(x) = w.lower(i) {
                prop_assert_eq!(x.raise(i), Some(w.clone()));
            }
            if let Some(x) = w.raise(i) {
                prop_assert_eq!(x.lower(i), Some(w.clone()));
            }
        }
    }

    #[test]
    fn insertion_intertwines_operators(w in word_in(Rank::new(2, 2), 7)) {
        let r = Rank::new(2, 2);
        let p = p_tableau(r, &w);
        let word = Word::new(w);
        for i in r.indices() {
            let lhs = word.lower(i).map(|x| p_tableau(r, x.letters()));
            prop_assert_eq!(lhs, p.apply_op(i, supercrystal::crystal::Op::Lower));
        }
    }

    #[test]
    fn rsk_pair_has_equal_shapes(a in matrix22()) {
        let (p, q) = a.rsk_pi();
        prop_assert_eq!(p.shape(), q.shape());
        prop_assert_eq!(p.weight(), a.inner().row_weight());
        prop_assert_eq!(q.weight(), a.inner().col_weight());
    }

    #[test]
    fn transpose_swaps_the_pair(a in matrix22()) {
        let (p, q) = a.rsk_pi();
        let (p2, q2) = a.transpose().rsk_pi();
        prop_assert_eq!((p2, q2), (q, p));
    }

    #[test]
    fn generalized_shapes_round_trip(parts in prop::collection::vec(-3i32..=3, 1..=4)) {
        let mut parts = parts;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let l = GeneralizedPartition::new(parts).unwrap();
        prop_assert_eq!(GeneralizedPartition::parse(&l.to_string()).unwrap(), l.clone());
        prop_assert_eq!(l.star().star(), l.clone());
        let a = build_script_a(&l);
        let (p, q) = a.varpi();
        prop_assert_eq!(p, SemiTableau::highest(&l));
        prop_assert_eq!(q, RationalTableau::highest(&l.star()));
    }

    #[test]
    fn semi_matrices_round_trip_through_json(seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let a = supercrystal::semi::random_semi_matrix(&mut rng, 3, 3, 2, 4);
        let s = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<SemiMatrix>(&s).unwrap(), a.clone());
        let (m, n) = a.window();
        prop_assert_eq!(SemiMatrix::lift(&a.res(m + 1, n + 1)), a);
    }

    #[test]
    fn conjugation_is_an_involution(parts in prop::collection::vec(1u32..=5, 0..=5)) {
        let mut parts = parts;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let l = Partition::new(parts).unwrap();
        prop_assert_eq!(l.conjugate().conjugate(), l.clone());
        prop_assert_eq!(l.conjugate().size(), l.size());
    }
}
