use afl_core::affine_weyl::{AffineRoot, AffineWeylGroup};
use afl_core::flag_cells::{self, Facet};
use afl_core::parse::{parse_element, parse_group};
use proptest::prelude::*;

fn group(i: usize) -> AffineWeylGroup {
    let spec = ["SL2", "SL3", "C2", "G2", "PGL3", "GL2", "B3"][i];
    AffineWeylGroup::new(parse_group(spec).unwrap())
}

fn word_strategy() -> impl Strategy<Value = (usize, Vec<usize>)> {
    (0usize..7).prop_flat_map(|i| {
        let n = group(i).num_generators();
        (Just(i), prop::collection::vec(0..n, 0..14))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn length_is_inverse_invariant((i, word) in word_strategy()) {
        let g = group(i);
        let w = g.product(&word);
        prop_assert_eq!(g.length(&w), g.length(&g.inverse(&w)));
        prop_assert!(g.length(&w) <= word.len());
        prop_assert_eq!(g.length(&w) % 2, word.len() % 2);
    }

    #[test]
    fn simple_reflections_change_length_by_one((i, word) in word_strategy()) {
        let g = group(i);
        let w = g.product(&word);
        let l = g.length(&w);
        for s in 0..g.num_generators() {
            let ws = g.right_mul(&w, s);
            let lws = g.length(&ws);
            prop_assert_eq!(l.abs_diff(lws), 1);
            prop_assert_eq!(lws < l, g.is_right_descent(&w, s));
            prop_assert_eq!(g.length(&g.left_mul(s, &w)) < l, g.is_left_descent(&w, s));
        }
    }

    #[test]
    fn reduced_words_multiply_back((i, word) in word_strategy()) {
        let g = group(i);
        let w = g.product(&word);
        let (rw, tau) = g.reduced_word(&w);
        prop_assert_eq!(rw.len(), g.length(&w));
        prop_assert_eq!(g.length(&tau), 0);
        prop_assert_eq!(g.multiply(&g.product(&rw), &tau), w);
    }

    #[test]
    fn conjugate_reflection((i, word) in word_strategy(), r in 0usize..64, k in -3i64..4) {
        let g = group(i);
        let w = g.product(&word);
        let roots = g.datum().roots();
        let alpha = AffineRoot { finite: roots[r % roots.len()].root.clone(), level: k };
        let lhs = g.multiply(&g.multiply(&w, &g.reflection(&alpha)), &g.inverse(&w));
        prop_assert_eq!(lhs, g.reflection(&g.act_on_affine_root(&w, &alpha)));
    }

    #[test]
    fn min_rep_is_shortest_in_coset((i, word) in word_strategy(), f in 0usize..64) {
        let g = group(i);
        let facets = Facet::all(&g);
        let f = &facets[f % facets.len()];
        let w = g.product(&word);
        let m = flag_cells::coset_min_rep(&g, &w, f);
        prop_assert!(flag_cells::is_min_rep(&g, &m, f));
        for u in flag_cells::parabolic_elements(&g, f) {
            let v = g.multiply(&m, &u);
            prop_assert_eq!(g.length(&v), g.length(&m) + g.length(&u));
            prop_assert_eq!(flag_cells::coset_min_rep(&g, &v, f), m.clone());
        }
    }

    #[test]
    fn json_round_trip((i, word) in word_strategy()) {
        let g = group(i);
        let w = g.product(&word);
        let text = serde_json::to_string(&g.to_json(&w)).unwrap();
        prop_assert_eq!(parse_element(&g, &text).unwrap(), w);
    }
}
