mod common;

use scp_core::braid::{predicted_simple_count, sigma_atom};
use scp_core::{artin_structure, bkl_structure, enumerate_simples, partial, Element, GarsideStructure};

use common::{action_of, band_sigma_word, FreeAction};

#[test]
fn free_action_separates_braids() {
    let braid = |w: &[i64]| FreeAction::of_sigma_word(4, w);
    assert_eq!(braid(&[1, 2, 1]), braid(&[2, 1, 2]));
    assert_eq!(braid(&[1, 3]), braid(&[3, 1]));
    assert_eq!(braid(&[1, -1, 2]), braid(&[2]));
    assert_ne!(braid(&[1, 2]), braid(&[2, 1]));
    assert_ne!(braid(&[1, 1]), braid(&[]));
}

#[test]
fn band_words_satisfy_the_band_relations() {
    // a_ts a_sr = a_tr a_ts = a_sr a_tr for t > s > r
    let a = |t, s| band_sigma_word(t, s);
    for (t, s, r) in [(3, 2, 1), (4, 2, 1), (4, 3, 1), (5, 3, 2)] {
        let lhs = [a(t, s), a(s, r)].concat();
        let mid = [a(t, r), a(t, s)].concat();
        let rhs = [a(s, r), a(t, r)].concat();
        assert_eq!(FreeAction::of_sigma_word(5, &lhs), FreeAction::of_sigma_word(5, &mid));
        assert_eq!(FreeAction::of_sigma_word(5, &lhs), FreeAction::of_sigma_word(5, &rhs));
    }
}

#[test]
fn garside_elements_match_braid_words() {
    for n in 3..=6 {
        let g = artin_structure(n).unwrap();
        let g = g.as_ref();
        let half_twist: Vec<i64> = (1..n as i64).flat_map(|k| (1..=k).rev()).collect();
        let delta = Element::delta_power(g, 1);
        assert_eq!(action_of(g, &delta), FreeAction::of_sigma_word(n, &half_twist));

        let g = bkl_structure(n).unwrap();
        let g = g.as_ref();
        let cycle: Vec<i64> = (1..n as i64).rev().collect();
        assert_eq!(action_of(g, &Element::delta_power(g, 1)), FreeAction::of_sigma_word(n, &cycle));
    }
}

#[test]
fn simple_counts_are_factorial_and_catalan() {
    let factorial = [1u128, 1, 2, 6, 24, 120, 720];
    let catalan = [1u128, 1, 2, 5, 14, 42, 132];
    for n in 2..=6 {
        let g = artin_structure(n).unwrap();
        assert_eq!(enumerate_simples(g.as_ref()).unwrap().len() as u128, factorial[n]);
        assert_eq!(predicted_simple_count(g.kind(), n), factorial[n]);
        let g = bkl_structure(n).unwrap();
        assert_eq!(enumerate_simples(g.as_ref()).unwrap().len() as u128, catalan[n]);
        assert_eq!(predicted_simple_count(g.kind(), n), catalan[n]);
    }
}

fn check_simple_set(g: &dyn GarsideStructure) {
    let all = enumerate_simples(g).unwrap();
    let delta = g.delta();
    let id = g.identity();
    for s in &all {
        assert!(g.left_divides(s, &delta) && g.right_divides(&delta, s));
        assert!(g.left_divides(&id, s) && g.right_divides(s, &id));
        if *s != delta {
            assert!(!g.left_divides(&delta, s));
        }
        // ∂-identities
        let d = partial(g, s, 1);
        assert_eq!(s.then(&d), delta);
        assert_eq!(partial(g, s, 2), g.tau(s, 1));
        assert_eq!(partial(g, &d, -1), *s);
        assert!(all.contains(&d));
        // τ agrees with conjugation by Δ
        let conj = Element::from_simple(g, s).conjugate(g, &Element::delta_power(g, 1)).unwrap();
        assert_eq!(conj, Element::from_simple(g, &g.tau(s, 1)));
    }
}

#[test]
fn simples_divide_delta_and_satisfy_complement_identities() {
    for n in 3..=5 {
        check_simple_set(artin_structure(n).unwrap().as_ref());
        check_simple_set(bkl_structure(n).unwrap().as_ref());
    }
}

#[test]
fn tau_permutes_atoms() {
    for n in 3..=7 {
        let g = artin_structure(n).unwrap();
        let g = g.as_ref();
        for i in 1..n {
            assert_eq!(g.tau(&g.atom(sigma_atom(g, i).unwrap()), 1), g.atom(sigma_atom(g, n - i).unwrap()));
        }
        let g = bkl_structure(n).unwrap();
        let g = g.as_ref();
        let bkl = scp_core::BklStructure::new(n).unwrap();
        for i in 0..g.n_atoms() {
            let (t, s) = bkl.band(i);
            // Rotation by one: a_{ts} ↦ a_{t+1,s+1}, wrapping a_{N,s} to a_{s+1,1}.
            let rotated = if t == n { bkl.band_index(s + 1, 1) } else { bkl.band_index(t + 1, s + 1) }.unwrap();
            assert_eq!(g.tau(&g.atom(i), 1), g.atom(rotated));
        }
    }
}

/// Kreweras complement on noncrossing partitions of 1..N, computed on the
/// doubled circle 1′ < 1 < 2′ < 2 < … independently of the permutation code.
fn kreweras_blocks(n: usize, block_of: &[usize]) -> Vec<usize> {
    // Primed points i′ and j′ (i < j) share a block iff no block of the
    // partition joins a point in [i, j) to a point outside it.
    let mut lab: Vec<usize> = (0..n).collect();
    for i in 0..n {
        for j in i + 1..n {
            let inside = |p: usize| p >= i && p < j;
            let separated = (0..n).any(|p| (0..n).any(|q| block_of[p] == block_of[q] && inside(p) && !inside(q)));
            if !separated && lab[j] == j {
                lab[j] = lab[i];
            }
        }
    }
    lab
}

#[test]
fn bkl_partial_is_the_kreweras_complement() {
    for n in 3..=6 {
        let g = bkl_structure(n).unwrap();
        let g = g.as_ref();
        let bkl = scp_core::BklStructure::new(n).unwrap();
        for s in enumerate_simples(g).unwrap() {
            let lab_s: Vec<usize> = bkl.labels(&s)[..n].iter().map(|&b| b as usize).collect();
            let want = kreweras_blocks(n, &lab_s);
            let d = partial(g, &s, 1);
            let got: Vec<usize> = bkl.labels(&d)[..n].iter().map(|&b| b as usize).collect();
            assert_eq!(got, want, "s = {s:?}");
        }
    }
}
