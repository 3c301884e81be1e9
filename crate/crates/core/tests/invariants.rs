//! Property tests for the structural invariants: closure shape, poset
//! partition, metric axioms, and constructive guarantees on random inputs.

use proptest::prelude::*;

use permbound::extremal;
use permbound::oracle;
use permbound::sample::{random_dag, rng_from_seed};
use permbound::{Metric, Permutation, RestrictionGraph};

/// Seeded random DAG with n in [2, hi], edge density from the standard grid.
fn dag(hi: usize) -> impl Strategy<Value = RestrictionGraph> {
    (2..=hi, 0..3usize, any::<u64>()).prop_map(|(n, pi, seed)| {
        let p = permbound::sample::EDGE_DENSITIES[pi];
        random_dag(n, p, &mut rng_from_seed(seed))
    })
}

/// Reference reachability by plain DFS from each vertex.
fn dfs_pairs(g: &RestrictionGraph) -> Vec<(u32, u32)> {
    let n = g.n();
    let mut adj = vec![Vec::new(); n + 1];
    for &(u, v) in g.edges() {
        adj[u as usize].push(v);
    }
    let mut out = Vec::new();
    for s in 1..=n as u32 {
        let mut seen = vec![false; n + 1];
        let mut stack = adj[s as usize].clone();
        while let Some(v) = stack.pop() {
            if !seen[v as usize] {
                seen[v as usize] = true;
                stack.extend(adj[v as usize].iter().copied());
            }
        }
        for v in 1..=n as u32 {
            if seen[v as usize] {
                out.push((s, v));
            }
        }
    }
    out
}

proptest! {
    #[test]
    fn closure_matches_dfs(g in dag(24)) {
        let r = g.transitive_closure()?;
        prop_assert_eq!(r.pairs(), dfs_pairs(&g));
    }

    #[test]
    fn closure_is_irreflexive_transitive_and_dual(g in dag(16)) {
        let r = g.transitive_closure()?;
        let n = g.n() as u32;
        for v in 1..=n {
            prop_assert!(!r.reaches(v, v), "closure must be irreflexive on DAGs");
        }
        for u in 1..=n {
            for v in 1..=n {
                if r.reaches(u, v) {
                    prop_assert!(r.inverse_reachable_set(v)?.contains(&u));
                    for w in 1..=n {
                        if r.reaches(v, w) {
                            prop_assert!(r.reaches(u, w), "{u}->{v}->{w} must close");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn incomparable_and_comparable_pairs_partition(g in dag(24)) {
        let p = g.to_poset()?;
        let n = g.n() as u32;
        let mut comparable = 0usize;
        for i in 1..=n {
            for j in (i + 1)..=n {
                if p.leq(i, j) || p.leq(j, i) {
                    comparable += 1;
                }
            }
        }
        let total = g.n() * (g.n() - 1) / 2;
        prop_assert_eq!(p.incomparable_pairs().len() + comparable, total);
    }

    #[test]
    fn metrics_are_metrics(
        (a, b, c) in (2..=16usize, any::<u64>(), any::<u64>(), any::<u64>())
            .prop_map(|(n, s1, s2, s3)| {
                use rand::seq::SliceRandom;
                let mk = |seed| {
                    let mut v: Vec<u32> = (1..=n as u32).collect();
                    v.shuffle(&mut rng_from_seed(seed));
                    Permutation::new(v).unwrap()
                };
                (mk(s1), mk(s2), mk(s3))
            })
    ) {
        for metric in [Metric::Linf, Metric::Kendall] {
            let d = |x: &Permutation, y: &Permutation| -> u64 {
                match metric {
                    Metric::Linf => x.linf_distance(y).unwrap() as u64,
                    Metric::Kendall => x.kendall_distance(y).unwrap(),
                }
            };
            prop_assert_eq!(d(&a, &b) == 0, a == b);
            prop_assert_eq!(d(&a, &b), d(&b, &a));
            prop_assert!(d(&a, &c) <= d(&a, &b) + d(&b, &c), "triangle inequality");
        }
    }

    #[test]
    fn kendall_is_inversion_count_of_relative_order(
        (a, b) in (2..=16usize, any::<u64>(), any::<u64>()).prop_map(|(n, s1, s2)| {
            use rand::seq::SliceRandom;
            let mk = |seed| {
                let mut v: Vec<u32> = (1..=n as u32).collect();
                v.shuffle(&mut rng_from_seed(seed));
                Permutation::new(v).unwrap()
            };
            (mk(s1), mk(s2))
        })
    ) {
        let rel = a.compose(&b.inverse())?;
        prop_assert_eq!(a.kendall_distance(&b)?, rel.inversion_number());
    }

    #[test]
    fn greedy_satisfies_and_pair_attains_bound(g in dag(16)) {
        let greedy = extremal::greedy_construct(&g)?;
        prop_assert!(greedy.satisfies(&g)?);
        let bound = extremal::linf_diameter_bound(&g)? as u64;
        let (s, r) = extremal::linf_extremal_pair(&g)?;
        prop_assert!(s.satisfies(&g)?);
        prop_assert!(r.satisfies(&g)?);
        prop_assert_eq!(s.linf_distance(&r)? as u64, bound);
    }

    #[test]
    fn family_members_sit_inside_value_intervals(g in dag(6)) {
        let r = g.transitive_closure()?;
        let n = g.n();
        for sigma in oracle::enumerate_family(&g, 6)? {
            for v in 1..=n as u32 {
                let val = sigma.at(v) as usize;
                let lo = r.reachable_count(v)? + 1;
                let hi = n - r.inverse_reachable_count(v)?;
                prop_assert!((lo..=hi).contains(&val), "sigma_{v}={val} outside [{lo},{hi}]");
            }
        }
    }

    #[test]
    fn kendall_bound_dominates_and_realizer_realizes(g in dag(7)) {
        let bound = extremal::kendall_upper_bound(&g)?;
        let (value, _) = oracle::brute_diameter(&g, Metric::Kendall, 7)?;
        prop_assert!(value <= bound);
        if let Some(real) = extremal::dimension_at_most_two(&g)? {
            prop_assert!(real.realizes(&g.to_poset()?));
            let (s1, s2) = real.permutations()?;
            prop_assert_eq!(s1.kendall_distance(&s2)?, bound);
            prop_assert_eq!(value, bound);
        }
    }
}
