//! Constructors for the graph families and named fixtures used throughout
//! the toolkit.
//!
//! Vertex numbering is fixed per family so that positional stress vectors
//! are reproducible:
//! - `complete_bipartite(m, n)`: side A is `0..m`, side B is `m..m+n`.
//! - `star(n)`: center 0, leaves `1..=n`.
//! - `windmill(n, m)`: shared universal vertex 0, then `m` blocks of
//!   `n - 1` consecutive vertices.
//! - `corona(g1, g2)`: the `g1` copy keeps its labels; copy `i` of `g2`
//!   occupies `g1.n() + i * g2.n() ..`.

use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::stress::census;

fn bad(msg: impl Into<String>) -> Error {
    Error::BadParameter(msg.into())
}

/// Complete graph `K_n`.
pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(bad("complete graph needs n >= 1"));
    }
    Graph::from_edge_list(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Cycle `C_n` with edges `(i, i+1 mod n)`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(bad("cycle needs n >= 3"));
    }
    Graph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Path `P_n` on `n` vertices.
pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(bad("path needs n >= 1"));
    }
    Graph::from_edge_list(n, (1..n).map(|i| (i - 1, i)))
}

/// Star `K_{1,n}`: center 0 joined to `n` leaves.
pub fn star(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(bad("star needs n >= 1"));
    }
    Graph::from_edge_list(n + 1, (1..=n).map(|v| (0, v)))
}

/// Complete bipartite graph `K_{m,n}`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    if m < 1 || n < 1 {
        return Err(bad("complete bipartite graph needs m, n >= 1"));
    }
    Graph::from_edge_list(m + n, (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v))))
}

/// Windmill `Wd(n, m)`: `m` copies of `K_n` sharing the universal vertex 0.
pub fn windmill(n: usize, m: usize) -> Result<Graph> {
    if n < 2 || m < 2 {
        return Err(bad("windmill needs n >= 2 and m >= 2"));
    }
    let block = n - 1;
    let total = m * block + 1;
    let mut edges = Vec::new();
    for copy in 0..m {
        let base = 1 + copy * block;
        for i in 0..block {
            edges.push((0, base + i));
            for j in i + 1..block {
                edges.push((base + i, base + j));
            }
        }
    }
    Graph::from_edge_list(total, edges)
}

/// Corona product `g1 ∘ g2`: one copy of `g1`, a copy of `g2` per vertex
/// of `g1`, and vertex `i` of `g1` joined to all of copy `i`.
pub fn corona(g1: &Graph, g2: &Graph) -> Result<Graph> {
    if g2.n() == 0 {
        return Err(bad("corona needs a non-empty second factor"));
    }
    let n1 = g1.n();
    let n2 = g2.n();
    let mut edges: Vec<(usize, usize)> = g1.edges().collect();
    for i in 0..n1 {
        let base = n1 + i * n2;
        for (u, v) in g2.edges() {
            edges.push((base + u, base + v));
        }
        for v in 0..n2 {
            edges.push((i, base + v));
        }
    }
    Graph::from_edge_list(n1 + n1 * n2, edges)
}

/// `k`-th power of a connected graph: same vertices, edges between all
/// pairs at distance 1 through `k`.
pub fn power(g: &Graph, k: u32) -> Result<Graph> {
    if k < 1 {
        return Err(bad("graph power needs k >= 1"));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let c = census(g)?;
    let n = g.n();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            match c.dist(u, v) {
                Some(d) if d >= 1 && d <= k => edges.push((u, v)),
                _ => {}
            }
        }
    }
    Graph::from_edge_list(n, edges)
}

/// Cocktail-party graph: `K_{2k+2}` minus the perfect matching
/// `(2i, 2i+1)`.
pub fn cocktail_party(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(bad("cocktail party graph needs k >= 1"));
    }
    let n = 2 * k + 2;
    Graph::from_edge_list(
        n,
        (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| u / 2 != v / 2),
    )
}

/// The named fixture graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Fixture {
    /// 3-regular graph on 10 vertices whose stress values are not all
    /// equal: two hubs of stress 43, four mid vertices of stress 16, four
    /// outer vertices of stress 1.
    Fig1Regular3,
    /// 2-stress-regular graph on 6 vertices that is not regular (degree
    /// sequence 4,4,3,3,4,4).
    Fig2TwoStressRegular,
    /// Triangular prism: 2-stress regular and 3-regular.
    Fig3Prism,
    /// Octahedron (`K6` minus a perfect matching): 2-stress regular and
    /// 4-regular.
    Fig4Octahedron,
    /// Petersen graph, srg(10, 3, 0, 1).
    Petersen,
}

impl Fixture {
    pub const ALL: [Fixture; 5] = [
        Fixture::Fig1Regular3,
        Fixture::Fig2TwoStressRegular,
        Fixture::Fig3Prism,
        Fixture::Fig4Octahedron,
        Fixture::Petersen,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Fixture::Fig1Regular3 => "FIG1_REG3",
            Fixture::Fig2TwoStressRegular => "FIG2_2SR",
            Fixture::Fig3Prism => "FIG3_PRISM",
            Fixture::Fig4Octahedron => "FIG4_OCTAHEDRON",
            Fixture::Petersen => "PETERSEN",
        }
    }
}

impl std::fmt::Display for Fixture {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.tag())
    }
}

impl std::str::FromStr for Fixture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Fixture::ALL
            .into_iter()
            .find(|fx| fx.tag().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownFixture(s.to_string()))
    }
}

/// Fixed edge list for a named fixture.
pub fn named(id: Fixture) -> Graph {
    let (n, edges): (usize, Vec<(usize, usize)>) = match id {
        Fixture::Fig1Regular3 => (
            10,
            vec![
                (0, 5),
                (0, 1),
                (0, 2),
                (1, 3),
                (1, 4),
                (2, 3),
                (2, 4),
                (3, 4),
                (5, 6),
                (5, 7),
                (6, 8),
                (6, 9),
                (7, 8),
                (7, 9),
                (8, 9),
            ],
        ),
        Fixture::Fig2TwoStressRegular => (
            6,
            vec![
                (0, 1),
                (0, 2),
                (1, 3),
                (2, 3),
                (2, 4),
                (1, 4),
                (0, 4),
                (0, 5),
                (3, 5),
                (1, 5),
                (4, 5),
            ],
        ),
        Fixture::Fig3Prism => (
            6,
            vec![
                (0, 1),
                (1, 2),
                (0, 2),
                (3, 4),
                (4, 5),
                (3, 5),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        ),
        Fixture::Fig4Octahedron => {
            return cocktail_party(2).expect("k = 2 is valid");
        }
        Fixture::Petersen => (
            10,
            (0..5)
                .flat_map(|i| {
                    [
                        (i, (i + 1) % 5),
                        (i, i + 5),
                        (i + 5, 5 + (i + 2) % 5),
                    ]
                })
                .collect(),
        ),
    };
    Graph::from_edge_list(n, edges).expect("fixture edge lists are valid")
}

/// Uniform random tree on `n` vertices, decoded from a random Prüfer
/// sequence. The generator is ChaCha8 seeded with `seed`; each sequence
/// entry is `next_u64() % n`, so a seed reproduces the same tree anywhere.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n < 1 {
        return Err(bad("random tree needs n >= 1"));
    }
    if n == 1 {
        return Ok(Graph::edgeless(1));
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let pruefer: Vec<usize> = (0..n - 2)
        .map(|_| (rng.next_u64() % n as u64) as usize)
        .collect();
    Graph::from_edge_list(n, pruefer_decode(n, &pruefer))
}

fn pruefer_decode(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    debug_assert_eq!(seq.len(), n - 2);
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &v in seq {
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 && v < ptr {
            leaf = v;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    edges
}
