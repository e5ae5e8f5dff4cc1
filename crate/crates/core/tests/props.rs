//! Randomized properties tying the optimized solver to its independent
//! oracle and checking structural laws of the constructors.

use proptest::prelude::*;

use tmv_core::construct::{cartesian_product, lexicographic_product, random_connected};
use tmv_core::domination::{connected_domination_number, domination_number};
use tmv_core::graph::Graph;
use tmv_core::visibility::{
    brute_force_max_tmv, compulsory_set, convex_p3_centers, forbidden_set, is_pair_visible,
    is_tmv_set, mu_it, mu_t, simplicial_set,
};

fn connected(n: usize, seed: u64) -> Graph {
    random_connected(n, seed).expect("n >= 1")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn edge_list_round_trips(n in 1usize..=9, seed in any::<u64>()) {
        let g = connected(n, seed);
        let parsed = Graph::parse_edge_list(&g.to_edge_list()).unwrap();
        prop_assert!(parsed == g);
    }

    #[test]
    fn cartesian_distances_add(
        n1 in 2usize..=5, s1 in any::<u64>(),
        n2 in 2usize..=5, s2 in any::<u64>(),
    ) {
        let g = connected(n1, s1);
        let h = connected(n2, s2);
        let p = cartesian_product(&g, &h);
        let dg = g.distances();
        let dh = h.distances();
        let dp = p.distances();
        for a in 0..n1 {
            for b in 0..n2 {
                for x in 0..n1 {
                    for y in 0..n2 {
                        prop_assert_eq!(
                            dp.get(a * n2 + b, x * n2 + y),
                            dg.get(a, x) + dh.get(b, y)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn lexicographic_distances_follow_first_factor(
        n1 in 2usize..=5, s1 in any::<u64>(),
        n2 in 1usize..=4, s2 in any::<u64>(),
    ) {
        let g = connected(n1, s1);
        let h = connected(n2, s2);
        let p = lexicographic_product(&g, &h);
        let dg = g.distances();
        let dh = h.distances();
        let dp = p.distances();
        for a in 0..n1 {
            for b in 0..n2 {
                for x in 0..n1 {
                    for y in 0..n2 {
                        let expect = if a != x {
                            dg.get(a, x)
                        } else {
                            dh.get(b, y).min(2)
                        };
                        prop_assert_eq!(dp.get(a * n2 + b, x * n2 + y), expect);
                    }
                }
            }
        }
    }

    #[test]
    fn solver_matches_brute_force(n in 2usize..=7, seed in any::<u64>()) {
        let g = connected(n, seed);
        let fast = mu_t(&g).unwrap();
        let slow = brute_force_max_tmv(&g).unwrap();
        prop_assert_eq!(fast.value, slow.value);
        prop_assert_eq!(fast.witness, slow.witness);
    }

    #[test]
    fn witnesses_are_feasible_and_hereditary(n in 2usize..=8, seed in any::<u64>()) {
        let g = connected(n, seed);
        let r = mu_t(&g).unwrap();
        prop_assert!(is_tmv_set(&g, &r.witness).unwrap());
        for v in r.witness.iter() {
            let mut smaller = r.witness.clone();
            smaller.remove(v);
            prop_assert!(is_tmv_set(&g, &smaller).unwrap());
        }
    }

    #[test]
    fn independent_optimum_is_independent_and_bounded(n in 2usize..=8, seed in any::<u64>()) {
        let g = connected(n, seed);
        let it = mu_it(&g).unwrap();
        let t = mu_t(&g).unwrap();
        prop_assert!(it.value <= t.value);
        prop_assert!(is_tmv_set(&g, &it.witness).unwrap());
        let members = it.witness.to_vec();
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                prop_assert!(!g.has_edge(u, v));
            }
        }
    }

    #[test]
    fn blocking_is_monotone(n in 2usize..=8, seed in any::<u64>(), extra in any::<u64>()) {
        let g = connected(n, seed);
        let d = g.distances();
        // A pair visible past a blocker set stays visible past any subset.
        let mut x = tmv_core::graph::VertexSet::new(n);
        for v in 0..n {
            if (seed >> (v % 60)) & 1 == 1 {
                x.insert(v);
            }
        }
        let v_extra = (extra % n as u64) as usize;
        let mut bigger = x.clone();
        bigger.insert(v_extra);
        for u in 0..n {
            for v in u + 1..n {
                if is_pair_visible(&g, &d, &bigger, u, v) {
                    prop_assert!(is_pair_visible(&g, &d, &x, u, v));
                }
            }
        }
    }

    #[test]
    fn derived_sets_bracket_the_witness(n in 2usize..=7, seed in any::<u64>()) {
        let g = connected(n, seed);
        let r = mu_t(&g).unwrap();
        let c = compulsory_set(&g).unwrap();
        let f = forbidden_set(&g).unwrap();
        let s = simplicial_set(&g);
        let p = convex_p3_centers(&g);
        prop_assert!(c.is_subset_of(&r.witness));
        prop_assert!(r.witness.is_disjoint_from(&f));
        prop_assert!(s.cardinality() <= r.value);
        prop_assert!(r.value <= g.n() - p.cardinality());
        // Simplicial vertices never block and convex path centers always do.
        prop_assert!(p.is_subset_of(&f));
    }

    #[test]
    fn domination_chain(n in 2usize..=8, seed in any::<u64>()) {
        let g = connected(n, seed);
        let gamma = domination_number(&g).unwrap().value;
        let gamma_c = connected_domination_number(&g).unwrap().value;
        let diam = g.diameter().unwrap();
        prop_assert!(gamma <= gamma_c);
        prop_assert!(gamma_c + 1 >= diam);
    }
}
