//! Property tests over random graphs: engine equivalences, metric
//! invariances, and the counting identities.

use proptest::prelude::*;

use stress_core::checks;
use stress_core::classify::simplicial_vertices;
use stress_core::oracle::{enumerate_geodesics, stress_oracle};
use stress_core::stress::{
    census, geodesic_histogram, stress_profile, stress_profile_accumulated,
    total_stress_from_histogram,
};
use stress_core::verify::canonical_form;
use stress_core::Graph;

fn graph_from_bits(n: usize, bits: u64) -> Graph {
    let mut edges = Vec::new();
    let mut p = 0;
    for i in 0..n {
        for j in i + 1..n {
            if bits >> p & 1 == 1 {
                edges.push((i, j));
            }
            p += 1;
        }
    }
    Graph::from_edge_list(n, edges).expect("bit pairs are in range")
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| any::<u64>().prop_map(move |bits| graph_from_bits(n, bits)))
}

fn arb_graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    (1..=max_n).prop_flat_map(|n| {
        (
            any::<u64>().prop_map(move |bits| graph_from_bits(n, bits)),
            Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
        )
    })
}

/// Test-side all-pairs distances, kept independent of the BFS engine.
fn floyd_warshall(g: &Graph) -> Vec<Option<u32>> {
    let n = g.n();
    let mut dist = vec![None; n * n];
    for v in 0..n {
        dist[v * n + v] = Some(0);
    }
    for (u, v) in g.edges() {
        dist[u * n + v] = Some(1);
        dist[v * n + u] = Some(1);
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (dist[i * n + k], dist[k * n + j]) {
                    if dist[i * n + j].map_or(true, |d| a + b < d) {
                        dist[i * n + j] = Some(a + b);
                    }
                }
            }
        }
    }
    dist
}

proptest! {
    #[test]
    fn bfs_sigma_satisfies_the_predecessor_recurrence(g in arb_graph(8)) {
        for s in g.vertices() {
            let b = g.bfs(s).unwrap();
            for v in g.vertices() {
                if v == s {
                    prop_assert_eq!(b.dist[v], Some(0));
                    prop_assert_eq!(b.sigma[v], 1);
                    continue;
                }
                match b.dist[v] {
                    None => prop_assert_eq!(b.sigma[v], 0),
                    Some(dv) => {
                        let from_preds: u64 = g
                            .neighbors(v)
                            .iter()
                            .filter(|&&u| b.dist[u] == Some(dv - 1))
                            .map(|&u| b.sigma[u])
                            .sum();
                        prop_assert_eq!(b.sigma[v], from_preds);
                    }
                }
            }
        }
    }

    #[test]
    fn bfs_distances_match_floyd_warshall(g in arb_graph(8)) {
        let n = g.n();
        let fw = floyd_warshall(&g);
        let c = census(&g).unwrap();
        for u in 0..n {
            for v in 0..n {
                prop_assert_eq!(c.dist(u, v), fw[u * n + v]);
            }
        }
    }

    #[test]
    fn edge_distances_differ_by_at_most_one(g in arb_graph(8)) {
        for s in g.vertices() {
            let b = g.bfs(s).unwrap();
            for (u, w) in g.edges() {
                if let (Some(du), Some(dw)) = (b.dist[u], b.dist[w]) {
                    prop_assert!(du.abs_diff(dw) <= 1);
                }
            }
        }
    }

    #[test]
    fn metrics_are_relabeling_invariant((g, perm) in arb_graph_and_perm(7)) {
        let h = g.relabel(&perm);
        if g.is_connected() {
            for v in g.vertices() {
                prop_assert_eq!(
                    g.eccentricity(v).unwrap(),
                    h.eccentricity(perm[v]).unwrap()
                );
            }
            prop_assert_eq!(g.diameter().unwrap(), h.diameter().unwrap());
        }
        let pg = stress_profile(&g).unwrap();
        let ph = stress_profile(&h).unwrap();
        for v in g.vertices() {
            prop_assert_eq!(pg.stress[v], ph.stress[perm[v]]);
        }
        prop_assert_eq!(pg.total, ph.total);
    }

    #[test]
    fn canonical_form_is_relabeling_invariant((g, perm) in arb_graph_and_perm(7)) {
        let h = g.relabel(&perm);
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn different_degree_sequences_get_different_keys(
        (a, b) in (arb_graph(7), arb_graph(7))
    ) {
        let mut da: Vec<usize> = a.vertices().map(|v| a.degree(v)).collect();
        let mut db: Vec<usize> = b.vertices().map(|v| b.degree(v)).collect();
        da.sort_unstable();
        db.sort_unstable();
        if da != db {
            prop_assert_ne!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
        }
    }

    #[test]
    fn engines_and_oracle_agree(g in arb_graph(7)) {
        let naive = stress_profile(&g).unwrap();
        let accumulated = stress_profile_accumulated(&g).unwrap();
        prop_assert_eq!(&naive, &accumulated);
        for v in g.vertices() {
            prop_assert_eq!(stress_oracle(&g, v).unwrap(), naive.stress[v]);
        }
    }

    #[test]
    fn total_stress_equals_weighted_histogram(g in arb_graph(8)) {
        let c = census(&g).unwrap();
        let h = geodesic_histogram(&c).unwrap();
        let total = total_stress_from_histogram(&h).unwrap();
        prop_assert_eq!(total, stress_profile(&g).unwrap().total);
        prop_assert_eq!(h.f.get(1).copied().unwrap_or(0), g.edge_count() as u64);
    }

    #[test]
    fn zero_stress_is_exactly_simplicial(g in arb_graph(8)) {
        let profile = stress_profile(&g).unwrap();
        let simplicial = simplicial_vertices(&g);
        for v in g.vertices() {
            prop_assert_eq!(profile.stress[v] == 0, simplicial.contains(&v));
        }
    }

    #[test]
    fn stress_is_bounded_by_long_geodesic_count(g in arb_graph(7)) {
        let c = census(&g).unwrap();
        let h = geodesic_histogram(&c).unwrap();
        let long_geodesics: u64 = h.f.iter().skip(2).sum();
        let profile = stress_profile(&g).unwrap();
        for v in g.vertices() {
            prop_assert!(profile.stress[v] <= long_geodesics);
        }
    }

    #[test]
    fn geodesic_enumeration_counts_match_sigma(g in arb_graph(6)) {
        let c = census(&g).unwrap();
        let paths = enumerate_geodesics(&g).unwrap();
        let n = g.n();
        let mut listed = vec![0u64; n * n];
        for p in &paths {
            let (s, t) = (p[0], *p.last().unwrap());
            prop_assert!(s < t, "canonical orientation");
            listed[s * n + t] += 1;
        }
        for s in 0..n {
            for t in s + 1..n {
                prop_assert_eq!(listed[s * n + t], c.sigma(s, t));
            }
        }
    }

    #[test]
    fn imposing_matches_enumeration_on_connected_graphs(g in arb_graph(6)) {
        if g.is_connected() {
            prop_assert!(checks::imposes_stress_matches_enumeration(&g).unwrap());
        }
    }

    #[test]
    fn geodesic_length_bound_holds(g in arb_graph(8)) {
        prop_assert!(checks::Invariant::GeodesicLengthBound.check(&g).unwrap());
    }

    #[test]
    fn universal_vertex_dominance_holds(g in arb_graph(8)) {
        prop_assert!(checks::Invariant::UniversalVertexDominance.check(&g).unwrap());
    }

    #[test]
    fn components_partition_the_vertices(g in arb_graph(8)) {
        let parts = g.components();
        let mut seen = vec![false; g.n()];
        for part in &parts {
            for &v in part {
                prop_assert!(!seen[v], "components must be disjoint");
                seen[v] = true;
            }
        }
        prop_assert!(seen.into_iter().all(|s| s));
    }

    #[test]
    fn edge_round_trip(g in arb_graph(8)) {
        let rebuilt = Graph::from_edge_list(g.n(), g.edges()).unwrap();
        prop_assert_eq!(rebuilt, g);
    }
}
