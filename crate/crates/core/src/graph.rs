//! Immutable simple undirected graphs with basic metric queries.
//!
//! Vertices are dense integers `0..n`. Adjacency is stored as sorted
//! neighbor lists, so equality of two `Graph` values is equality of
//! their edge sets. Distances use `Option<u32>` with `None` standing
//! for "unreachable"; no arithmetic can be done on it by accident.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// A finite simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are collapsed,
    /// endpoints are validated against `n`, and self-loops are rejected.
    pub fn from_edge_list(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n {
                return Err(Error::IndexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::IndexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
            nbrs.dedup();
        }
        Ok(Self { adj })
    }

    /// Graph on `n` vertices with no edges.
    pub fn edgeless(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    /// Neighbors of `v` in ascending order. Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nbrs)| {
            nbrs.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        2 * self.edge_count() == n * n.saturating_sub(1)
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Copy of the graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n());
        let mut adj = vec![Vec::new(); self.n()];
        for (u, nbrs) in self.adj.iter().enumerate() {
            adj[perm[u]] = nbrs.iter().map(|&w| perm[w]).collect();
            adj[perm[u]].sort_unstable();
        }
        Graph { adj }
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    /// Breadth-first search from `source`, recording exact distances and
    /// shortest-path counts.
    pub fn bfs(&self, source: usize) -> Result<BfsResult> {
        self.check_vertex(source)?;
        let n = self.n();
        let mut dist: Vec<Option<u32>> = vec![None; n];
        let mut sigma = vec![0u64; n];
        let mut order = Vec::with_capacity(n);
        let mut queue = VecDeque::new();

        dist[source] = Some(0);
        sigma[source] = 1;
        queue.push_back(source);

        while let Some(u) = queue.pop_front() {
            order.push(u);
            let du = dist[u].expect("queued vertices have a distance");
            for &w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
                if dist[w] == Some(du + 1) {
                    sigma[w] = sigma[w]
                        .checked_add(sigma[u])
                        .ok_or(Error::CountOverflow)?;
                }
            }
        }

        Ok(BfsResult {
            source,
            dist,
            sigma,
            order,
        })
    }

    /// Greatest distance from `v` to any vertex. Errors if some vertex is
    /// unreachable from `v`.
    pub fn eccentricity(&self, v: usize) -> Result<u32> {
        let b = self.bfs(v)?;
        let mut ecc = 0;
        for d in &b.dist {
            match d {
                Some(d) => ecc = ecc.max(*d),
                None => return Err(Error::Disconnected),
            }
        }
        Ok(ecc)
    }

    /// Maximum eccentricity. The empty graph and `K1` both have diameter 0.
    pub fn diameter(&self) -> Result<u32> {
        let mut diam = 0;
        for v in self.vertices() {
            diam = diam.max(self.eccentricity(v)?);
        }
        Ok(diam)
    }

    /// Connected components as sorted vertex sets, ordered by smallest
    /// member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut parts = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut part = vec![start];
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        part.push(w);
                        queue.push_back(w);
                    }
                }
            }
            part.sort_unstable();
            parts.push(part);
        }
        parts
    }

    /// True iff every unordered pair of distinct vertices in `set` is an
    /// edge. Empty sets and singletons qualify vacuously.
    pub fn induced_is_clique(&self, set: &[usize]) -> Result<bool> {
        for &v in set {
            self.check_vertex(v)?;
        }
        let mut s: Vec<usize> = set.to_vec();
        s.sort_unstable();
        s.dedup();
        for (i, &u) in s.iter().enumerate() {
            for &v in &s[i + 1..] {
                if !self.has_edge(u, v) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Single-source BFS output: distances, shortest-path counts, and the
/// visit order (reachable vertices only, non-decreasing distance).
#[derive(Debug, Clone)]
pub struct BfsResult {
    pub source: usize,
    pub dist: Vec<Option<u32>>,
    pub sigma: Vec<u64>,
    pub order: Vec<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    fn k3() -> Graph {
        Graph::from_edge_list(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn from_edge_list_builds_triangle() {
        let g = k3();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 3);
        assert!(g.has_edge(0, 2) && g.has_edge(2, 0));
    }

    #[test]
    fn from_edge_list_builds_cycle() {
        let g = c4();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
    }

    #[test]
    fn from_edge_list_rejects_self_loop() {
        assert_eq!(
            Graph::from_edge_list(3, [(0, 0)]),
            Err(Error::SelfLoop(0))
        );
    }

    #[test]
    fn from_edge_list_rejects_out_of_range() {
        assert_eq!(
            Graph::from_edge_list(2, [(0, 2)]),
            Err(Error::IndexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edge_list(2, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn bfs_counts_cycle_geodesics() {
        let b = c4().bfs(0).unwrap();
        assert_eq!(b.dist, vec![Some(0), Some(1), Some(2), Some(1)]);
        assert_eq!(b.sigma, vec![1, 1, 2, 1]);
    }

    #[test]
    fn bfs_complete_graph() {
        let b = k3().bfs(0).unwrap();
        assert_eq!(b.dist, vec![Some(0), Some(1), Some(1)]);
        assert_eq!(b.sigma, vec![1, 1, 1]);
    }

    #[test]
    fn bfs_unreachable_vertex() {
        let g = Graph::edgeless(2);
        let b = g.bfs(0).unwrap();
        assert_eq!(b.dist, vec![Some(0), None]);
        assert_eq!(b.sigma, vec![1, 0]);
        assert_eq!(b.order, vec![0]);
    }

    #[test]
    fn eccentricity_cycle_star_path() {
        let c5 = Graph::from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        for v in 0..5 {
            assert_eq!(c5.eccentricity(v).unwrap(), 2);
        }
        let star = Graph::from_edge_list(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(star.eccentricity(0).unwrap(), 1);
        let p4 = Graph::from_edge_list(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4.eccentricity(0).unwrap(), 3);
    }

    #[test]
    fn eccentricity_errors_on_disconnected() {
        assert_eq!(Graph::edgeless(2).eccentricity(0), Err(Error::Disconnected));
    }

    #[test]
    fn diameter_basics() {
        let k5 = Graph::from_edge_list(
            5,
            (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))),
        )
        .unwrap();
        assert_eq!(k5.diameter().unwrap(), 1);
        let c6 = Graph::from_edge_list(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        assert_eq!(c6.diameter().unwrap(), 3);
        assert_eq!(Graph::edgeless(1).diameter().unwrap(), 0);
    }

    #[test]
    fn components_partition() {
        assert_eq!(c4().components(), vec![vec![0, 1, 2, 3]]);
        assert_eq!(
            Graph::edgeless(3).components(),
            vec![vec![0], vec![1], vec![2]]
        );
        let g = Graph::from_edge_list(5, [(0, 1), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1], vec![2], vec![3, 4]]);
    }

    #[test]
    fn induced_clique_checks() {
        let k4 = Graph::from_edge_list(
            4,
            (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v))),
        )
        .unwrap();
        assert!(k4.induced_is_clique(&[0, 1, 2]).unwrap());
        assert!(!c4().induced_is_clique(&[0, 1, 2]).unwrap());
        assert!(c4().induced_is_clique(&[]).unwrap());
        assert!(c4().induced_is_clique(&[2]).unwrap());
        assert_eq!(
            c4().induced_is_clique(&[0, 9]),
            Err(Error::IndexOutOfRange { vertex: 9, n: 4 })
        );
    }

    #[test]
    fn relabel_preserves_structure() {
        let g = c4();
        let h = g.relabel(&[2, 0, 3, 1]);
        assert_eq!(h.edge_count(), 4);
        assert!(h.has_edge(2, 0) && h.has_edge(0, 3) && h.has_edge(3, 1) && h.has_edge(1, 2));
    }
}
