//! Exact stress computation from all-pairs geodesic counts.
//!
//! The stress of a vertex `v` is the number of geodesics having `v` as an
//! internal vertex, each geodesic counted once. The normative computation
//! sums `sigma(s,v) * sigma(v,t)` over ordered pairs `(s,t)` with
//! `d(s,v) + d(v,t) = d(s,t)` and halves the (provably even) result.
//! [`stress_profile_accumulated`] is a faster single-pass variant over the
//! shortest-path DAG of each source; the two are bound together by an
//! equivalence test on the whole corpus.
//!
//! Disconnected inputs are fine: only geodesics inside a component exist,
//! so pairs at infinite distance contribute nothing.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// All-pairs distance and shortest-path-count matrices for one graph.
#[derive(Debug, Clone)]
pub struct GeodesicCensus {
    n: usize,
    dist: Vec<Option<u32>>,
    sigma: Vec<u64>,
}

impl GeodesicCensus {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dist(&self, u: usize, v: usize) -> Option<u32> {
        self.dist[u * self.n + v]
    }

    /// Number of distinct geodesics between `u` and `v`; zero iff
    /// unreachable, one on the diagonal.
    pub fn sigma(&self, u: usize, v: usize) -> u64 {
        self.sigma[u * self.n + v]
    }
}

/// Runs BFS from every source and assembles the distance / path-count
/// matrices.
pub fn census(g: &Graph) -> Result<GeodesicCensus> {
    let n = g.n();
    let mut dist = vec![None; n * n];
    let mut sigma = vec![0u64; n * n];
    for s in g.vertices() {
        let b = g.bfs(s)?;
        dist[s * n..(s + 1) * n].copy_from_slice(&b.dist);
        sigma[s * n..(s + 1) * n].copy_from_slice(&b.sigma);
    }
    let c = GeodesicCensus { n, dist, sigma };
    #[cfg(debug_assertions)]
    for u in 0..n {
        debug_assert_eq!(c.dist(u, u), Some(0));
        debug_assert_eq!(c.sigma(u, u), 1);
        for v in 0..n {
            debug_assert_eq!(c.dist(u, v), c.dist(v, u));
            debug_assert_eq!(c.sigma(u, v), c.sigma(v, u));
        }
    }
    Ok(c)
}

/// Stress of a single vertex: half the ordered-pair sum of
/// `sigma(s,v) * sigma(v,t)` over pairs whose geodesics run through `v`.
pub fn stress(c: &GeodesicCensus, v: usize) -> Result<u64> {
    let n = c.n();
    if v >= n {
        return Err(Error::IndexOutOfRange { vertex: v, n });
    }
    let mut doubled: u64 = 0;
    for s in 0..n {
        if s == v {
            continue;
        }
        let Some(dsv) = c.dist(s, v) else { continue };
        for t in 0..n {
            if t == v || t == s {
                continue;
            }
            let Some(dvt) = c.dist(v, t) else { continue };
            let Some(dst) = c.dist(s, t) else { continue };
            if u64::from(dsv) + u64::from(dvt) == u64::from(dst) {
                let through = c
                    .sigma(s, v)
                    .checked_mul(c.sigma(v, t))
                    .ok_or(Error::CountOverflow)?;
                doubled = doubled.checked_add(through).ok_or(Error::CountOverflow)?;
            }
        }
    }
    debug_assert_eq!(doubled % 2, 0);
    Ok(doubled / 2)
}

/// Per-vertex stress values plus their total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StressProfile {
    pub stress: Vec<u64>,
    pub total: u64,
}

pub fn stress_profile(g: &Graph) -> Result<StressProfile> {
    let c = census(g)?;
    stress_profile_from_census(&c)
}

pub(crate) fn stress_profile_from_census(c: &GeodesicCensus) -> Result<StressProfile> {
    let stress: Vec<u64> = (0..c.n()).map(|v| stress(c, v)).collect::<Result<_>>()?;
    let mut total: u64 = 0;
    for &s in &stress {
        total = total.checked_add(s).ok_or(Error::CountOverflow)?;
    }
    Ok(StressProfile { stress, total })
}

/// Same output as [`stress_profile`], computed by accumulating geodesic
/// continuations over each source's shortest-path DAG instead of looping
/// over endpoint pairs per vertex.
///
/// For a source `s` let `cont(v)` be the number of geodesics that start at
/// `v` and extend away from `s` (to any valid endpoint). Walking vertices
/// in reverse BFS order gives `cont(v) = sum over successors w of
/// (1 + cont(w))`, and `sigma(s,v) * cont(v)` is exactly the number of
/// geodesics from `s` through `v`. Summing over all sources double-counts
/// every geodesic once per endpoint, so the accumulator is halved.
pub fn stress_profile_accumulated(g: &Graph) -> Result<StressProfile> {
    let n = g.n();
    let mut doubled = vec![0u64; n];
    let mut cont = vec![0u64; n];
    for s in g.vertices() {
        let b = g.bfs(s)?;
        for &v in &b.order {
            cont[v] = 0;
        }
        for &v in b.order.iter().rev() {
            let dv = b.dist[v].expect("ordered vertices are reachable");
            let mut acc: u64 = 0;
            for &w in g.neighbors(v) {
                if b.dist[w] == Some(dv + 1) {
                    let via = cont[w].checked_add(1).ok_or(Error::CountOverflow)?;
                    acc = acc.checked_add(via).ok_or(Error::CountOverflow)?;
                }
            }
            cont[v] = acc;
            if v != s {
                let through = b.sigma[v].checked_mul(acc).ok_or(Error::CountOverflow)?;
                doubled[v] = doubled[v]
                    .checked_add(through)
                    .ok_or(Error::CountOverflow)?;
            }
        }
    }
    let stress: Vec<u64> = doubled
        .into_iter()
        .map(|d| {
            debug_assert_eq!(d % 2, 0);
            d / 2
        })
        .collect();
    let mut total: u64 = 0;
    for &s in &stress {
        total = total.checked_add(s).ok_or(Error::CountOverflow)?;
    }
    Ok(StressProfile { stress, total })
}

/// Geodesic counts by length: `f[i]` is the number of geodesics of length
/// `i`. `f[0]` is always zero (single vertices are not counted), and
/// `f[1]` equals the number of edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeodesicHistogram {
    pub f: Vec<u64>,
}

pub fn geodesic_histogram(c: &GeodesicCensus) -> Result<GeodesicHistogram> {
    let n = c.n();
    let mut max_len: u32 = 0;
    for u in 0..n {
        for v in u + 1..n {
            if let Some(d) = c.dist(u, v) {
                max_len = max_len.max(d);
            }
        }
    }
    let mut f = vec![0u64; max_len as usize + 1];
    for u in 0..n {
        for v in u + 1..n {
            if let Some(d) = c.dist(u, v) {
                f[d as usize] = f[d as usize]
                    .checked_add(c.sigma(u, v))
                    .ok_or(Error::CountOverflow)?;
            }
        }
    }
    f[0] = 0;
    Ok(GeodesicHistogram { f })
}

/// Total stress computed as `sum (i - 1) * f[i]`: a geodesic of length `i`
/// has `i - 1` internal vertices and puts one unit of stress on each.
pub fn total_stress_from_histogram(h: &GeodesicHistogram) -> Result<u64> {
    let mut total: u64 = 0;
    for (i, &count) in h.f.iter().enumerate().skip(1) {
        let weight = (i - 1) as u64;
        let term = weight.checked_mul(count).ok_or(Error::CountOverflow)?;
        total = total.checked_add(term).ok_or(Error::CountOverflow)?;
    }
    Ok(total)
}

/// True iff some geodesic starting at `u` passes through `v`, decided by
/// the neighbor-distance criterion: `v` has a neighbor strictly farther
/// from `u` than `v` itself. A vertex never imposes stress on itself.
pub fn imposes_stress(g: &Graph, u: usize, v: usize) -> Result<bool> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    let b = g.bfs(u)?;
    if b.order.len() < g.n() {
        return Err(Error::Disconnected);
    }
    if u == v {
        return Ok(false);
    }
    let duv = b.dist[v].expect("connected graph");
    Ok(g.neighbors(v).iter().any(|&w| b.dist[w] == Some(duv + 1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edge_list(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_edge_list(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    #[test]
    fn census_cycle() {
        let c = census(&cycle(4)).unwrap();
        assert_eq!(
            (0..4).map(|v| c.dist(0, v)).collect::<Vec<_>>(),
            vec![Some(0), Some(1), Some(2), Some(1)]
        );
        assert_eq!(c.sigma(0, 2), 2);
    }

    #[test]
    fn census_complete_and_path() {
        let c = census(&complete(4)).unwrap();
        for u in 0..4 {
            for v in 0..4 {
                if u != v {
                    assert_eq!(c.dist(u, v), Some(1));
                    assert_eq!(c.sigma(u, v), 1);
                }
            }
        }
        let c = census(&path(4)).unwrap();
        assert_eq!(c.dist(0, 3), Some(3));
        assert_eq!(c.sigma(0, 3), 1);
    }

    #[test]
    fn stress_cycle_and_complete() {
        let c = census(&cycle(5)).unwrap();
        for v in 0..5 {
            assert_eq!(stress(&c, v).unwrap(), 1);
        }
        let c = census(&complete(6)).unwrap();
        for v in 0..6 {
            assert_eq!(stress(&c, v).unwrap(), 0);
        }
    }

    #[test]
    fn stress_path_five() {
        let p = stress_profile(&path(5)).unwrap();
        assert_eq!(p.stress, vec![0, 3, 4, 3, 0]);
        assert_eq!(p.total, 10);
    }

    #[test]
    fn stress_out_of_range() {
        let c = census(&cycle(4)).unwrap();
        assert_eq!(
            stress(&c, 4),
            Err(Error::IndexOutOfRange { vertex: 4, n: 4 })
        );
    }

    #[test]
    fn profile_cycle_six() {
        let p = stress_profile(&cycle(6)).unwrap();
        assert_eq!(p.stress, vec![3; 6]);
        assert_eq!(p.total, 18);
    }

    #[test]
    fn profile_complete_bipartite_2_3() {
        let g = Graph::from_edge_list(
            5,
            (0..2).flat_map(|u| (2..5).map(move |v| (u, v))),
        )
        .unwrap();
        let p = stress_profile(&g).unwrap();
        assert_eq!(p.stress, vec![3, 3, 1, 1, 1]);
        assert_eq!(p.total, 9);
    }

    #[test]
    fn accumulated_matches_naive() {
        for g in [cycle(5), cycle(6), path(7), complete(5)] {
            assert_eq!(
                stress_profile(&g).unwrap(),
                stress_profile_accumulated(&g).unwrap()
            );
        }
        let k1 = Graph::edgeless(1);
        assert_eq!(stress_profile_accumulated(&k1).unwrap().stress, vec![0]);
    }

    #[test]
    fn accumulated_handles_disconnected() {
        let g = Graph::from_edge_list(7, [(0, 1), (1, 2), (2, 3), (4, 5), (5, 6)]).unwrap();
        assert_eq!(
            stress_profile(&g).unwrap(),
            stress_profile_accumulated(&g).unwrap()
        );
    }

    #[test]
    fn histogram_cycle_complete_path() {
        let h = geodesic_histogram(&census(&cycle(4)).unwrap()).unwrap();
        assert_eq!(h.f, vec![0, 4, 4]);
        let h = geodesic_histogram(&census(&complete(4)).unwrap()).unwrap();
        assert_eq!(h.f, vec![0, 6]);
        let h = geodesic_histogram(&census(&path(4)).unwrap()).unwrap();
        assert_eq!(h.f, vec![0, 3, 2, 1]);
    }

    #[test]
    fn histogram_total_matches_profile() {
        for g in [cycle(4), cycle(7), complete(5), path(6)] {
            let c = census(&g).unwrap();
            let h = geodesic_histogram(&c).unwrap();
            assert_eq!(
                total_stress_from_histogram(&h).unwrap(),
                stress_profile(&g).unwrap().total
            );
        }
        let c7 = cycle(7);
        let h = geodesic_histogram(&census(&c7).unwrap()).unwrap();
        assert_eq!(total_stress_from_histogram(&h).unwrap(), 21);
    }

    #[test]
    fn imposes_stress_examples() {
        let p3 = path(3);
        assert!(imposes_stress(&p3, 0, 1).unwrap());
        let k3 = complete(3);
        assert!(!imposes_stress(&k3, 0, 1).unwrap());
        let p4 = path(4);
        assert!(imposes_stress(&p4, 0, 2).unwrap());
        assert!(!imposes_stress(&p4, 1, 0).unwrap());
        assert!(!imposes_stress(&p4, 2, 2).unwrap());
        assert_eq!(
            imposes_stress(&Graph::edgeless(2), 0, 1),
            Err(Error::Disconnected)
        );
    }
}
