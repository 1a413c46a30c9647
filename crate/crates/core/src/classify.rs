//! Structural predicates: simplicial vertices, block–cut-vertex
//! decomposition, strongly-regular detection, stress regularity, and the
//! characterization checks that tie stress profiles to structure.

use crate::closed_form::SrgParameters;
use crate::error::{Error, Result};
use crate::generators::{self, Fixture};
use crate::graph::Graph;
use crate::stress::{stress_profile, StressProfile};
use crate::verify::canonical_form;

/// Vertices whose open neighborhood induces a clique. These are exactly
/// the zero-stress vertices; isolated and pendant vertices qualify.
pub fn simplicial_vertices(g: &Graph) -> Vec<usize> {
    g.vertices()
        .filter(|&v| {
            g.induced_is_clique(g.neighbors(v))
                .expect("neighbor lists are in range")
        })
        .collect()
}

/// Cut vertices and blocks (maximal nonseparable subgraphs) of a graph.
/// Every edge lies in exactly one block; two blocks share at most a cut
/// vertex; isolated vertices form their own trivial blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCutDecomposition {
    pub cut_vertices: Vec<usize>,
    pub blocks: Vec<Vec<usize>>,
}

/// Standard articulation-point search: iterative depth-first traversal
/// with low-link values and an edge stack.
pub fn block_cut_decomposition(g: &Graph) -> BlockCutDecomposition {
    const UNSET: usize = usize::MAX;
    let n = g.n();
    let mut disc = vec![UNSET; n];
    let mut low = vec![0usize; n];
    let mut parent = vec![UNSET; n];
    let mut child_count = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut timer = 0usize;

    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();

    // (vertex, index into its neighbor list)
    let mut stack: Vec<(usize, usize)> = Vec::new();

    fn pop_block(
        edge_stack: &mut Vec<(usize, usize)>,
        until: (usize, usize),
        blocks: &mut Vec<Vec<usize>>,
    ) {
        let mut verts = Vec::new();
        while let Some(e) = edge_stack.pop() {
            verts.push(e.0);
            verts.push(e.1);
            if e == until {
                break;
            }
        }
        verts.sort_unstable();
        verts.dedup();
        blocks.push(verts);
    }

    for root in 0..n {
        if disc[root] != UNSET {
            continue;
        }
        if g.degree(root) == 0 {
            disc[root] = timer;
            timer += 1;
            blocks.push(vec![root]);
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        stack.push((root, 0));

        while let Some(&mut (u, ref mut i)) = stack.last_mut() {
            if *i < g.degree(u) {
                let w = g.neighbors(u)[*i];
                *i += 1;
                if disc[w] == UNSET {
                    parent[w] = u;
                    child_count[u] += 1;
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    edge_stack.push((u, w));
                    stack.push((w, 0));
                } else if w != parent[u] && disc[w] < disc[u] {
                    edge_stack.push((u, w));
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _)) = stack.last() {
                    low[p] = low[p].min(low[u]);
                    if low[u] >= disc[p] {
                        if parent[p] != UNSET || child_count[p] >= 2 {
                            is_cut[p] = true;
                        }
                        pop_block(&mut edge_stack, (p, u), &mut blocks);
                    }
                }
            }
        }
    }

    let cut_vertices: Vec<usize> = (0..n).filter(|&v| is_cut[v]).collect();
    blocks.sort();
    BlockCutDecomposition {
        cut_vertices,
        blocks,
    }
}

fn require_connected_at_least(g: &Graph, min: usize) -> Result<()> {
    if g.n() < min {
        return Err(Error::TooSmall { n: g.n(), min });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// The unique cut vertex of `g` if `g` has exactly one and every block
/// induces a clique; the structural side of the single-stressed-vertex
/// characterization.
pub fn is_unique_cutvertex_complete_blocks(g: &Graph) -> Result<Option<usize>> {
    require_connected_at_least(g, 3)?;
    let d = block_cut_decomposition(g);
    if d.cut_vertices.len() != 1 {
        return Ok(None);
    }
    for block in &d.blocks {
        if !g.induced_is_clique(block)? {
            return Ok(None);
        }
    }
    Ok(Some(d.cut_vertices[0]))
}

/// The unique vertex of positive stress if exactly one exists.
pub fn has_single_positive_stress_vertex(g: &Graph) -> Result<Option<usize>> {
    require_connected_at_least(g, 3)?;
    let profile = stress_profile(g)?;
    let mut positive = profile
        .stress
        .iter()
        .enumerate()
        .filter(|(_, &s)| s > 0)
        .map(|(v, _)| v);
    match (positive.next(), positive.next()) {
        (Some(v), None) => Ok(Some(v)),
        _ => Ok(None),
    }
}

/// Stress-side star test: on `n + 1` vertices, exactly one vertex of
/// stress `n(n-1)/2` with every other vertex at zero.
pub fn is_star_by_stress(g: &Graph) -> Result<bool> {
    require_connected_at_least(g, 3)?;
    let n = (g.n() - 1) as u64;
    let target = n * (n - 1) / 2;
    let profile = stress_profile(g)?;
    let hits = profile.stress.iter().filter(|&&s| s == target).count();
    let zeros = profile.stress.iter().filter(|&&s| s == 0).count();
    Ok(hits == 1 && zeros == g.n() - 1)
}

/// Structural star test: one center adjacent to everything, all other
/// vertices pendant.
pub fn is_structural_star(g: &Graph) -> bool {
    let n = g.n();
    if n < 3 || !g.is_connected() {
        return false;
    }
    let centers = g.vertices().filter(|&v| g.degree(v) == n - 1).count();
    let leaves = g.vertices().filter(|&v| g.degree(v) == 1).count();
    centers == 1 && leaves == n - 1
}

/// Detects strongly regular parameters: `g` must be regular with a
/// constant common-neighbor count over adjacent pairs and over
/// non-adjacent pairs. Complete graphs (no non-adjacent pairs) return
/// `None` by convention; an edgeless graph reports `lambda = 0`.
pub fn detect_srg(g: &Graph) -> Option<SrgParameters> {
    let n = g.n();
    if n < 2 || g.is_complete() {
        return None;
    }
    let k = g.degree(0);
    if (1..n).any(|v| g.degree(v) != k) {
        return None;
    }
    let mut lambda: Option<usize> = None;
    let mut mu: Option<usize> = None;
    for u in 0..n {
        for v in u + 1..n {
            let common = common_neighbors(g, u, v);
            let slot = if g.has_edge(u, v) { &mut lambda } else { &mut mu };
            match slot {
                Some(c) if *c != common => return None,
                Some(_) => {}
                None => *slot = Some(common),
            }
        }
    }
    let lambda = lambda.unwrap_or(0);
    let mu = mu.expect("a non-complete graph on >= 2 vertices has a non-adjacent pair");
    Some(
        SrgParameters::new(n, k, lambda, mu)
            .expect("parameters counted from a graph satisfy the feasibility identity"),
    )
}

fn common_neighbors(g: &Graph, u: usize, v: usize) -> usize {
    let (a, b) = (g.neighbors(u), g.neighbors(v));
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// `Some(k)` if every vertex has stress exactly `k`.
pub fn stress_regularity(g: &Graph) -> Result<Option<u64>> {
    if g.n() == 0 {
        return Ok(None);
    }
    let profile = stress_profile(g)?;
    let k = profile.stress[0];
    Ok(profile.stress.iter().all(|&s| s == k).then_some(k))
}

pub(crate) fn stress_regularity_of(profile: &StressProfile) -> Option<u64> {
    let first = *profile.stress.first()?;
    profile.stress.iter().all(|&s| s == first).then_some(first)
}

/// Families recognized by the `k`-stress-regular characterizations plus
/// the star characterization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Complete,
    C4,
    C5,
    Fig2TwoStressRegular,
    Prism,
    Octahedron,
    Star,
    None,
}

impl Family {
    pub fn tag(self) -> &'static str {
        match self {
            Family::Complete => "COMPLETE",
            Family::C4 => "C4",
            Family::C5 => "C5",
            Family::Fig2TwoStressRegular => "FIG2_2SR",
            Family::Prism => "PRISM",
            Family::Octahedron => "OCTAHEDRON",
            Family::Star => "STAR",
            Family::None => "NONE",
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.tag())
    }
}

/// Everything the classifier knows about one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub n: usize,
    pub is_connected: bool,
    pub diameter: Option<u32>,
    pub stress_regular_k: Option<u64>,
    pub simplicial: Vec<usize>,
    pub srg: Option<SrgParameters>,
    pub one_stress_center: Option<usize>,
    pub recognized_family: Family,
    /// Disagreements between the stress-side and structure-side
    /// predicates. Always empty unless a theorem is violated; never
    /// silently dropped.
    pub findings: Vec<String>,
}

/// Runs the stress-based and structural predicates independently and
/// reports both, recording any disagreement as a finding.
pub fn classify(g: &Graph) -> Result<ClassificationReport> {
    let n = g.n();
    let is_connected = g.is_connected();
    let diameter = if is_connected && n > 0 {
        Some(g.diameter()?)
    } else {
        None
    };
    let stress_regular_k = stress_regularity(g)?;
    let simplicial = simplicial_vertices(g);
    let srg = detect_srg(g);
    let mut findings = Vec::new();

    let one_stress_center = if is_connected && n >= 3 {
        let by_stress = has_single_positive_stress_vertex(g)?;
        let by_structure = is_unique_cutvertex_complete_blocks(g)?;
        if by_stress != by_structure {
            findings.push(format!(
                "single-stressed-vertex predicates disagree: stress side {:?}, structure side {:?}",
                by_stress, by_structure
            ));
        }
        by_stress
    } else {
        None
    };

    if let Some(p) = &srg {
        match stress_regular_k {
            Some(k) => {
                if p.mu >= 1 && predict_srg_stress(p) != Some(k) {
                    findings.push(format!(
                        "strongly regular stress mismatch: profile k = {k}, formula {:?}",
                        predict_srg_stress(p)
                    ));
                }
            }
            None => findings.push("strongly regular graph is not stress regular".into()),
        }
    }

    let structural_star = is_structural_star(g);
    if is_connected && n >= 3 {
        let stress_star = is_star_by_stress(g)?;
        if stress_star != structural_star {
            findings.push(format!(
                "star predicates disagree: stress side {stress_star}, structural side {structural_star}"
            ));
        }
    }

    let recognized_family = recognize_family(g, is_connected, stress_regular_k, structural_star)?;

    Ok(ClassificationReport {
        n,
        is_connected,
        diameter,
        stress_regular_k,
        simplicial,
        srg,
        one_stress_center,
        recognized_family,
        findings,
    })
}

fn predict_srg_stress(p: &SrgParameters) -> Option<u64> {
    crate::closed_form::predict_srg(p).ok()
}

fn recognize_family(
    g: &Graph,
    is_connected: bool,
    stress_regular_k: Option<u64>,
    structural_star: bool,
) -> Result<Family> {
    if !is_connected || g.n() == 0 {
        return Ok(Family::None);
    }
    match stress_regular_k {
        Some(0) if g.is_complete() => return Ok(Family::Complete),
        Some(1) => {
            let key = canonical_form(g).ok();
            if g.n() == 4 && key == Some(canonical_form(&generators::cycle(4)?)?) {
                return Ok(Family::C4);
            }
            if g.n() == 5 && key == Some(canonical_form(&generators::cycle(5)?)?) {
                return Ok(Family::C5);
            }
        }
        Some(2) if g.n() == 6 => {
            let key = canonical_form(g)?;
            if key == canonical_form(&generators::named(Fixture::Fig2TwoStressRegular))? {
                return Ok(Family::Fig2TwoStressRegular);
            }
            if key == canonical_form(&generators::named(Fixture::Fig3Prism))? {
                return Ok(Family::Prism);
            }
            if key == canonical_form(&generators::named(Fixture::Fig4Octahedron))? {
                return Ok(Family::Octahedron);
            }
        }
        _ => {}
    }
    if structural_star {
        return Ok(Family::Star);
    }
    Ok(Family::None)
}
