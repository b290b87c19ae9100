//! Property tests for the algebraic invariants of the ideal
//! arithmetic and the deciders.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use socle::sampling::random_antichain_complex;
use socle::socle::socle_set;
use socle::{Monomial, MonomialIdeal, SocleStrategy, VertexSet};

/// Everything is an immutable value, safely shared across workers.
#[test]
fn domain_values_are_send_and_sync() {
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<Monomial>();
    assert_send_sync::<MonomialIdeal>();
    assert_send_sync::<socle::Graph>();
    assert_send_sync::<socle::SimplicialComplex>();
    assert_send_sync::<socle::SocleReport>();
    assert_send_sync::<socle::census::RunConfig>();
}

fn arb_monomial(n: usize) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..=3, n).prop_map(Monomial::new)
}

fn arb_nonunit_monomial(n: usize) -> impl Strategy<Value = Monomial> {
    arb_monomial(n).prop_filter("unit generators excluded", |m| !m.is_unit())
}

fn arb_generators(n: usize) -> impl Strategy<Value = Vec<Monomial>> {
    prop::collection::vec(arb_nonunit_monomial(n), 1..=6)
}

fn arb_ideal(n: usize) -> impl Strategy<Value = MonomialIdeal> {
    arb_generators(n).prop_map(move |gens| MonomialIdeal::new(n, gens).unwrap())
}

fn arb_squarefree_ideal(n: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(
        prop::collection::vec(0u32..=1, n)
            .prop_map(Monomial::new)
            .prop_filter("unit excluded", |m| !m.is_unit()),
        1..=6,
    )
    .prop_map(move |gens| MonomialIdeal::new(n, gens).unwrap())
}

/// Every monomial with exponents up to 3 in n variables.
fn probe_box(n: usize) -> Vec<Monomial> {
    let mut probes = vec![vec![]];
    for _ in 0..n {
        probes = probes
            .into_iter()
            .flat_map(|p: Vec<u32>| {
                (0..=3u32).map(move |e| {
                    let mut q = p.clone();
                    q.push(e);
                    q
                })
            })
            .collect();
    }
    probes.into_iter().map(Monomial::new).collect()
}

proptest! {
    #[test]
    fn minimalize_is_order_independent_and_idempotent(
        (n, gens, shuffled) in (2usize..=4).prop_flat_map(|n| {
            arb_generators(n).prop_flat_map(move |gens| {
                (Just(gens.clone()), Just(gens).prop_shuffle())
                    .prop_map(move |(g, s)| (n, g, s))
            })
        })
    ) {
        let from_original = MonomialIdeal::new(n, gens.clone()).unwrap();
        let from_shuffled = MonomialIdeal::new(n, shuffled).unwrap();
        prop_assert_eq!(&from_original, &from_shuffled);
        let doubled = gens.iter().cloned().chain(gens.clone());
        prop_assert_eq!(
            &from_original,
            &MonomialIdeal::new(n, doubled).unwrap()
        );
        let again =
            MonomialIdeal::new(n, from_original.generators().to_vec()).unwrap();
        prop_assert_eq!(&from_original, &again);
    }

    #[test]
    fn membership_ignores_redundant_generators(
        (n, gens, multipliers) in (2usize..=4).prop_flat_map(|n| {
            (Just(n), arb_generators(n), prop::collection::vec(arb_monomial(n), 1..=4))
        })
    ) {
        let ideal = MonomialIdeal::new(n, gens.clone()).unwrap();
        let redundant: Vec<Monomial> = multipliers
            .iter()
            .zip(gens.iter().cycle())
            .map(|(m, g)| m.checked_mul(g).unwrap())
            .collect();
        let padded =
            MonomialIdeal::new(n, gens.into_iter().chain(redundant)).unwrap();
        prop_assert_eq!(&ideal, &padded);
        for probe in probe_box(n) {
            prop_assert_eq!(
                ideal.contains(&probe).unwrap(),
                padded.contains(&probe).unwrap()
            );
        }
    }

    #[test]
    fn powers_add_up(
        ideal in (2usize..=3).prop_flat_map(arb_ideal),
        a in 1u32..=2,
        b in 1u32..=2,
    ) {
        let sum = ideal.power(a + b).unwrap();
        let split = ideal.power(a).unwrap().product(&ideal.power(b).unwrap()).unwrap();
        prop_assert_eq!(sum, split);
    }

    #[test]
    fn intersection_is_membership_conjunction(
        (n, a, b) in (2usize..=3).prop_flat_map(|n| {
            (Just(n), arb_ideal(n), arb_ideal(n))
        })
    ) {
        let meet = a.intersect(&b).unwrap();
        for probe in probe_box(n) {
            prop_assert_eq!(
                meet.contains(&probe).unwrap(),
                a.contains(&probe).unwrap() && b.contains(&probe).unwrap()
            );
        }
    }

    #[test]
    fn colon_by_maximal_is_the_variable_multiple_test(
        (n, ideal) in (2usize..=3).prop_flat_map(|n| (Just(n), arb_ideal(n)))
    ) {
        let colon = ideal.colon_by_maximal();
        for probe in probe_box(n) {
            let all_multiples_inside = (0..n).all(|i| {
                ideal.contains(&probe.times_variable(i).unwrap()).unwrap()
            });
            prop_assert_eq!(colon.contains(&probe).unwrap(), all_multiples_inside);
        }
    }

    #[test]
    fn squarefree_powers_bound_exponents_by_k(
        ideal in (2usize..=4).prop_flat_map(arb_squarefree_ideal),
        k in 1u32..=3,
    ) {
        let degrees = ideal.power(k).unwrap().max_degrees().unwrap();
        prop_assert!(degrees.into_iter().all(|c| c <= k));
    }

    #[test]
    fn box_and_colon_strategies_agree(
        ideal in (2usize..=4).prop_flat_map(arb_ideal)
    ) {
        let by_box = socle_set(&ideal, SocleStrategy::BoxEnumeration, 1 << 20).unwrap();
        let by_colon = socle_set(&ideal, SocleStrategy::ColonEnumeration, 1 << 20).unwrap();
        prop_assert_eq!(by_box, by_colon);
    }

    #[test]
    fn depth_zero_iff_colon_strictly_grows(
        ideal in (2usize..=4).prop_flat_map(arb_ideal)
    ) {
        let report = socle::socle_report(&ideal).unwrap();
        prop_assert_eq!(report.depth_zero, ideal.colon_by_maximal() != ideal);
    }

    #[test]
    fn reported_socle_elements_recheck_against_the_definition(
        ideal in (2usize..=4).prop_flat_map(arb_ideal)
    ) {
        let report = socle::socle_report(&ideal).unwrap();
        for u in &report.socle {
            prop_assert!(!ideal.contains(u).unwrap());
            for i in 0..ideal.n() {
                prop_assert!(ideal.contains(&u.times_variable(i).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn ideal_json_round_trips(
        ideal in (2usize..=4).prop_flat_map(arb_ideal)
    ) {
        let parsed = MonomialIdeal::from_json(&ideal.to_json()).unwrap();
        prop_assert_eq!(parsed, ideal);
    }

    #[test]
    fn nonempty_intersections_are_monotone_in_k(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let complex = random_antichain_complex(&mut rng, 5);
        prop_assert!(complex.k_intersections_nonempty(1).holds);
        for k in 1..=3u32 {
            let at_k = complex.k_intersections_nonempty(k).holds;
            let at_next = complex.k_intersections_nonempty(k + 1).holds;
            // Larger tuples only shrink intersections.
            prop_assert!(at_k || !at_next);
        }
    }

    #[test]
    fn intersection_witnesses_are_sound(seed in any::<u64>(), k in 1u32..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let complex = random_antichain_complex(&mut rng, 5);
        let full = VertexSet::full(complex.n());

        let check = complex.k_intersections_nonempty(k);
        if let Some(tuple) = &check.counterexample {
            prop_assert!(!check.holds);
            prop_assert_eq!(tuple.len(), k as usize);
            let common = tuple.iter().fold(full, |acc, f| acc.intersection(f));
            prop_assert!(common.is_empty());
            for facet in tuple {
                prop_assert!(complex.facets().contains(facet));
            }
        }

        let cover = complex.singleton_intersection_cover(k);
        for (j, witness) in cover.witnesses.iter().enumerate() {
            if let Some(tuple) = witness {
                prop_assert_eq!(tuple.len(), k as usize);
                let common = tuple.iter().fold(full, |acc, f| acc.intersection(f));
                prop_assert_eq!(common, VertexSet::singleton(j + 1));
            }
        }
    }

    #[test]
    fn facet_ideal_round_trips(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let complex = random_antichain_complex(&mut rng, 6);
        let back =
            socle::SimplicialComplex::from_facet_ideal(&complex.facet_ideal()).unwrap();
        prop_assert_eq!(back, complex);
    }

    #[test]
    fn graph_witness_is_a_dominating_triangle(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mask = rand::Rng::random_range(&mut rng, 0u64..1 << 10);
        let graph = socle::Graph::from_edge_mask(5, mask).unwrap();
        if let Some([a, b, c]) = graph.depth2_criterion() {
            prop_assert!(graph.has_edge(a, b));
            prop_assert!(graph.has_edge(a, c));
            prop_assert!(graph.has_edge(b, c));
            for v in 1..=graph.n() {
                prop_assert!(
                    graph.has_edge(v, a) || graph.has_edge(v, b) || graph.has_edge(v, c)
                );
            }
        }
    }
}
