//! Closed-form stress predictions for standard families. Every formula
//! returns an exact integer; a division that would truncate is reported
//! as infeasible instead of rounded.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Side of the bipartition of `K_{m,n}`: side A has `m` vertices
/// (labels `0..m`), side B has `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

/// Parameters of a strongly regular graph srg(v, k, lambda, mu).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SrgParameters {
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

impl SrgParameters {
    /// Validates the standard feasibility constraints:
    /// `k(k - lambda - 1) = (v - k - 1) mu`, `lambda <= k - 1` (for
    /// `k >= 1`), and `mu <= k`.
    pub fn new(v: usize, k: usize, lambda: usize, mu: usize) -> Result<Self> {
        let infeasible = Error::InfeasibleParameters { v, k, lambda, mu };
        if k >= v {
            return Err(infeasible);
        }
        if k == 0 {
            if lambda != 0 || mu != 0 {
                return Err(infeasible);
            }
        } else if lambda > k - 1 || mu > k {
            return Err(infeasible);
        }
        let lhs = (k as i128) * (k as i128 - lambda as i128 - 1);
        let rhs = (v as i128 - k as i128 - 1) * mu as i128;
        if lhs != rhs {
            return Err(infeasible);
        }
        Ok(Self { v, k, lambda, mu })
    }
}

fn pairs(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

/// Stress of a vertex of `K_{m,n}`: `n(n-1)/2` on side A, `m(m-1)/2` on
/// side B.
pub fn predict_complete_bipartite(m: usize, n: usize, side: Side) -> Result<u64> {
    if m < 1 || n < 1 {
        return Err(Error::BadParameter(
            "complete bipartite prediction needs m, n >= 1".into(),
        ));
    }
    Ok(match side {
        Side::A => pairs(n as u64),
        Side::B => pairs(m as u64),
    })
}

/// Total stress of `K_{m,n}`: `mn(m + n - 2)/2`.
pub fn predict_complete_bipartite_total(m: usize, n: usize) -> Result<u64> {
    if m < 1 || n < 1 {
        return Err(Error::BadParameter(
            "complete bipartite prediction needs m, n >= 1".into(),
        ));
    }
    let (m, n) = (m as u64, n as u64);
    Ok(m * n * (m + n - 2) / 2)
}

/// Stress of every vertex of the cycle `C_n`: `(n-1)(n-3)/8` for odd `n`,
/// `n(n-2)/8` for even `n`.
pub fn predict_cycle(n: usize) -> Result<u64> {
    if n < 3 {
        return Err(Error::BadParameter("cycle prediction needs n >= 3".into()));
    }
    let n = n as u64;
    Ok(if n % 2 == 1 {
        (n - 1) * (n - 3) / 8
    } else {
        n * (n - 2) / 8
    })
}

/// Stress of the shared universal vertex of `Wd(n, m)`:
/// `m(m-1)(n-1)^2 / 2`. All other vertices have stress zero.
pub fn predict_windmill_center(n: usize, m: usize) -> Result<u64> {
    if n < 2 || m < 2 {
        return Err(Error::BadParameter(
            "windmill prediction needs n >= 2 and m >= 2".into(),
        ));
    }
    let (n, m) = (n as u64, m as u64);
    Ok(m * (m - 1) * (n - 1) * (n - 1) / 2)
}

/// Stress of a tree vertex: remove `v`, multiply component sizes pairwise.
/// Every path between two different components runs through `v` exactly
/// once.
pub fn predict_tree_vertex(t: &Graph, v: usize) -> Result<u64> {
    t.check_vertex(v)?;
    let n = t.n();
    if n == 0 || t.edge_count() != n - 1 || !t.is_connected() {
        return Err(Error::NotATree);
    }
    let mut seen = vec![false; n];
    seen[v] = true;
    let mut sizes: Vec<u64> = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut size = 0u64;
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(u) = stack.pop() {
            size += 1;
            for &w in t.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        sizes.push(size);
    }
    let sum: u64 = sizes.iter().sum();
    let sum_sq: u64 = sizes.iter().map(|c| c * c).sum();
    Ok((sum * sum - sum_sq) / 2)
}

/// Stress of every vertex of a strongly regular graph:
/// `k(k - 1 - lambda)/2` when `mu >= 1` (diameter 2), zero when `mu = 0`
/// (disjoint complete graphs).
pub fn predict_srg(p: &SrgParameters) -> Result<u64> {
    if p.mu == 0 {
        return Ok(0);
    }
    let product = (p.k as u64) * ((p.k - 1 - p.lambda) as u64);
    if product % 2 != 0 {
        return Err(Error::InfeasibleParameters {
            v: p.v,
            k: p.k,
            lambda: p.lambda,
            mu: p.mu,
        });
    }
    Ok(product / 2)
}

/// Closed-form prediction `mn(m-1)(n+1)/2` for a vertex of the `K_m`
/// copy in the corona `K_m ∘ G`, `G` on `n` vertices.
///
/// This prediction is a hypothesis under test, not a trusted identity:
/// the exact engine (confirmed by the enumeration oracle) agrees with it
/// only for `m = 2` with a complete `G`. The acceptance sweep compares
/// the two and reports every discrepancy rather than patching either
/// side.
pub fn predict_corona_hub(m: usize, n: usize) -> Result<u64> {
    if m < 2 || n < 1 {
        return Err(Error::BadParameter(
            "corona hub prediction needs m >= 2 and n >= 1".into(),
        ));
    }
    let (m, n) = (m as u64, n as u64);
    Ok(m * n * (m - 1) * (n + 1) / 2)
}

/// Stress of the vertex of a `G`-copy in `K_m ∘ G` corresponding to `v`
/// in `G`: the number of unordered non-adjacent pairs inside `N_G(v)`,
/// measured in `G` itself.
pub fn predict_corona_leaf(g: &Graph, v: usize) -> Result<u64> {
    g.check_vertex(v)?;
    Ok(non_adjacent_neighbor_pairs(g, v))
}

/// Stress of a vertex in a diameter-2 graph: the number of unordered
/// non-adjacent pairs inside its neighborhood.
pub fn predict_diameter2(g: &Graph, v: usize) -> Result<u64> {
    g.check_vertex(v)?;
    let d = g.diameter()?;
    if d != 2 {
        return Err(Error::WrongDiameter {
            expected: 2,
            actual: d,
        });
    }
    Ok(non_adjacent_neighbor_pairs(g, v))
}

pub(crate) fn non_adjacent_neighbor_pairs(g: &Graph, v: usize) -> u64 {
    let nbrs = g.neighbors(v);
    let mut count = 0u64;
    for (i, &a) in nbrs.iter().enumerate() {
        for &b in &nbrs[i + 1..] {
            if !g.has_edge(a, b) {
                count += 1;
            }
        }
    }
    count
}
