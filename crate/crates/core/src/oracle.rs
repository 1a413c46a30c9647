//! Brute-force geodesic enumeration, used as an independent check on the
//! counting engine.
//!
//! The enumerator deliberately shares nothing with the BFS machinery: it
//! recomputes all-pairs distances by Floyd–Warshall relaxation and then
//! walks every distance-decreasing path, so a bug in the engine cannot
//! hide here.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default ceiling on the number of enumerated paths. Enumeration is for
/// desk-scale graphs; anything bigger should use the counting engine.
pub const DEFAULT_GEODESIC_CAP: usize = 1_000_000;

fn floyd_warshall(g: &Graph) -> Vec<Option<u32>> {
    let n = g.n();
    let mut dist: Vec<Option<u32>> = vec![None; n * n];
    for v in 0..n {
        dist[v * n + v] = Some(0);
    }
    for (u, v) in g.edges() {
        dist[u * n + v] = Some(1);
        dist[v * n + u] = Some(1);
    }
    for k in 0..n {
        for i in 0..n {
            let Some(dik) = dist[i * n + k] else { continue };
            for j in 0..n {
                let Some(dkj) = dist[k * n + j] else { continue };
                let through = dik + dkj;
                if dist[i * n + j].map_or(true, |d| through < d) {
                    dist[i * n + j] = Some(through);
                }
            }
        }
    }
    dist
}

/// Every geodesic of length at least 1, oriented from its smaller endpoint
/// to its larger one, ordered by endpoint pair.
pub fn enumerate_geodesics(g: &Graph) -> Result<Vec<Vec<usize>>> {
    enumerate_geodesics_capped(g, DEFAULT_GEODESIC_CAP)
}

pub fn enumerate_geodesics_capped(g: &Graph, cap: usize) -> Result<Vec<Vec<usize>>> {
    let n = g.n();
    let dist = floyd_warshall(g);
    let mut out = Vec::new();
    let mut path = Vec::new();
    for s in 0..n {
        for t in s + 1..n {
            if dist[s * n + t].is_none() {
                continue;
            }
            path.clear();
            path.push(s);
            extend(g, &dist, t, &mut path, &mut out, cap)?;
        }
    }
    Ok(out)
}

fn extend(
    g: &Graph,
    dist: &[Option<u32>],
    t: usize,
    path: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    cap: usize,
) -> Result<()> {
    let n = g.n();
    let u = *path.last().expect("path starts non-empty");
    if u == t {
        if out.len() >= cap {
            return Err(Error::OutputLimitExceeded { cap });
        }
        out.push(path.clone());
        return Ok(());
    }
    let remaining = dist[u * n + t].expect("endpoints share a component");
    for &w in g.neighbors(u) {
        if dist[w * n + t] == Some(remaining - 1) {
            path.push(w);
            extend(g, dist, t, path, out, cap)?;
            path.pop();
        }
    }
    Ok(())
}

/// Stress of `v` counted by enumeration: the number of geodesics with `v`
/// strictly in their interior.
pub fn stress_oracle(g: &Graph, v: usize) -> Result<u64> {
    g.check_vertex(v)?;
    let paths = enumerate_geodesics(g)?;
    Ok(paths
        .iter()
        .filter(|p| p[1..p.len() - 1].contains(&v))
        .count() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_four_has_eight_geodesics() {
        let g = Graph::from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let paths = enumerate_geodesics(&g).unwrap();
        assert_eq!(paths.len(), 8);
        assert_eq!(paths.iter().filter(|p| p.len() == 2).count(), 4);
        assert_eq!(paths.iter().filter(|p| p.len() == 3).count(), 4);
    }

    #[test]
    fn triangle_has_only_edges() {
        let g = Graph::from_edge_list(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(enumerate_geodesics(&g).unwrap().len(), 3);
    }

    #[test]
    fn path_three_lists_all() {
        let g = Graph::from_edge_list(3, [(0, 1), (1, 2)]).unwrap();
        let paths = enumerate_geodesics(&g).unwrap();
        assert_eq!(paths, vec![vec![0, 1], vec![0, 1, 2], vec![1, 2]]);
    }

    #[test]
    fn cap_is_enforced() {
        let g = Graph::from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(
            enumerate_geodesics_capped(&g, 5),
            Err(Error::OutputLimitExceeded { cap: 5 })
        );
    }

    #[test]
    fn oracle_on_windmill_and_octahedron() {
        // Wd(3,2): two triangles glued at vertex 0.
        let wd = Graph::from_edge_list(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap();
        assert_eq!(stress_oracle(&wd, 0).unwrap(), 4);
        for leaf in 1..5 {
            assert_eq!(stress_oracle(&wd, leaf).unwrap(), 0);
        }
        // K6 minus a perfect matching.
        let oct = Graph::from_edge_list(
            6,
            (0..6)
                .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
                .filter(|&(u, v)| !(u / 2 == v / 2)),
        )
        .unwrap();
        for v in 0..6 {
            assert_eq!(stress_oracle(&oct, v).unwrap(), 2);
        }
    }

    #[test]
    fn oracle_counts_match_sigma() {
        let g = Graph::from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        let c = crate::stress::census(&g).unwrap();
        let paths = enumerate_geodesics(&g).unwrap();
        for s in 0..5 {
            for t in s + 1..5 {
                let listed = paths
                    .iter()
                    .filter(|p| p[0] == s && *p.last().unwrap() == t)
                    .count() as u64;
                assert_eq!(listed, c.sigma(s, t), "pair ({s},{t})");
            }
        }
    }
}
