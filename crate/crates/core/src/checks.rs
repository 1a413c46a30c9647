//! Per-graph invariant checks. The exhaustive battery (and the
//! property-test corpora) run these on every graph they scan.

use crate::classify::{simplicial_vertices, stress_regularity_of};
use crate::closed_form::non_adjacent_neighbor_pairs;
use crate::error::Result;
use crate::graph::Graph;
use crate::oracle;
use crate::stress::{
    census, geodesic_histogram, stress_profile_accumulated, stress_profile_from_census,
    total_stress_from_histogram, GeodesicCensus, StressProfile,
};

/// The battery invariants, each checkable on any graph. Conditional
/// statements hold vacuously when their hypothesis fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Invariant {
    /// A vertex has zero stress iff its neighborhood induces a clique.
    SimplicialZeroStress,
    /// Total stress equals `sum (i-1) f_i` over the geodesic histogram.
    TotalStressIdentity,
    /// A `k`-stress-regular connected graph (`k >= 1`) of diameter 2 has
    /// minimum degree at least the smallest `t` with `t(t-1)/2 >= k`.
    MinDegreeBound,
    /// With `L` the longest geodesic length and `K` the maximum stress:
    /// `floor(L/2) * ceil(L/2) <= K` whenever `L >= 2`.
    GeodesicLengthBound,
    /// In a connected non-complete graph, a vertex of eccentricity 1
    /// dominates every stress value, with equality exactly on other
    /// eccentricity-1 vertices; if its stress is positive some vertex is
    /// strictly below it.
    UniversalVertexDominance,
    /// A `k`-stress-regular connected graph with `k >= 1` has no vertex
    /// of eccentricity 1.
    EccentricityAtLeastTwo,
}

impl Invariant {
    pub const ALL: [Invariant; 6] = [
        Invariant::SimplicialZeroStress,
        Invariant::TotalStressIdentity,
        Invariant::MinDegreeBound,
        Invariant::GeodesicLengthBound,
        Invariant::UniversalVertexDominance,
        Invariant::EccentricityAtLeastTwo,
    ];

    pub fn check(self, g: &Graph) -> Result<bool> {
        let facts = Facts::new(g)?;
        Ok(self.holds(&facts))
    }

    fn holds(self, facts: &Facts) -> bool {
        match self {
            Invariant::SimplicialZeroStress => simplicial_zero_stress(facts),
            Invariant::TotalStressIdentity => total_stress_identity(facts),
            Invariant::MinDegreeBound => min_degree_bound(facts),
            Invariant::GeodesicLengthBound => geodesic_length_bound(facts),
            Invariant::UniversalVertexDominance => universal_vertex_dominance(facts),
            Invariant::EccentricityAtLeastTwo => eccentricity_at_least_two(facts),
        }
    }
}

/// Shared per-graph data so a battery run computes the census once.
pub(crate) struct Facts<'g> {
    pub g: &'g Graph,
    pub census: GeodesicCensus,
    pub profile: StressProfile,
    pub connected: bool,
    /// Longest finite distance (the diameter when connected).
    pub max_dist: u32,
    /// `Some(k)` when every vertex has stress `k`.
    pub regular_k: Option<u64>,
}

impl<'g> Facts<'g> {
    pub fn new(g: &'g Graph) -> Result<Self> {
        let census = census(g)?;
        let profile = stress_profile_from_census(&census)?;
        let n = g.n();
        let mut connected = true;
        let mut max_dist = 0;
        for u in 0..n {
            for v in u + 1..n {
                match census.dist(u, v) {
                    Some(d) => max_dist = max_dist.max(d),
                    None => connected = false,
                }
            }
        }
        let regular_k = stress_regularity_of(&profile);
        Ok(Facts {
            g,
            census,
            profile,
            connected,
            max_dist,
            regular_k,
        })
    }

    fn eccentricity(&self, v: usize) -> Option<u32> {
        let mut ecc = 0;
        for u in self.g.vertices() {
            ecc = ecc.max(self.census.dist(v, u)?);
        }
        Some(ecc)
    }
}

fn simplicial_zero_stress(f: &Facts) -> bool {
    let simplicial = simplicial_vertices(f.g);
    f.g
        .vertices()
        .all(|v| (f.profile.stress[v] == 0) == simplicial.contains(&v))
}

fn total_stress_identity(f: &Facts) -> bool {
    let Ok(h) = geodesic_histogram(&f.census) else {
        return false;
    };
    total_stress_from_histogram(&h) == Ok(f.profile.total)
}

fn min_degree_bound(f: &Facts) -> bool {
    let Some(k) = f.regular_k else { return true };
    if k == 0 || !f.connected || f.max_dist != 2 {
        return true;
    }
    let mut t = 1u64;
    while t * (t - 1) / 2 < k {
        t += 1;
    }
    f.g.min_degree() as u64 >= t
}

fn geodesic_length_bound(f: &Facts) -> bool {
    let l = u64::from(f.max_dist);
    if l < 2 {
        return true;
    }
    let max_stress = f.profile.stress.iter().copied().max().unwrap_or(0);
    (l / 2) * l.div_ceil(2) <= max_stress
}

fn universal_vertex_dominance(f: &Facts) -> bool {
    if !f.connected || f.g.is_complete() || f.g.n() == 0 {
        return true;
    }
    for v in f.g.vertices() {
        if f.eccentricity(v) != Some(1) {
            continue;
        }
        let sv = f.profile.stress[v];
        for w in f.g.vertices() {
            let sw = f.profile.stress[w];
            if sw > sv {
                return false;
            }
            if (sw == sv) != (f.eccentricity(w) == Some(1)) {
                return false;
            }
        }
        if sv >= 1 && !f.profile.stress.iter().any(|&s| s < sv) {
            return false;
        }
    }
    true
}

fn eccentricity_at_least_two(f: &Facts) -> bool {
    let Some(k) = f.regular_k else { return true };
    if k == 0 || !f.connected {
        return true;
    }
    f.g.vertices().all(|v| f.eccentricity(v) != Some(1))
}

/// Evaluates several invariants over one shared census. Returns the
/// failing subset.
pub fn failing_invariants(g: &Graph, invariants: &[Invariant]) -> Result<Vec<Invariant>> {
    let facts = Facts::new(g)?;
    Ok(invariants
        .iter()
        .copied()
        .filter(|inv| !inv.holds(&facts))
        .collect())
}

/// One-pass battery evaluation: the failing subset of `invariants` plus
/// the hypothesis data (stress-regularity and diameter 2) the verifier
/// uses to collect witnesses.
pub(crate) fn battery_eval(
    g: &Graph,
    invariants: &[Invariant],
) -> Result<(Vec<Invariant>, Option<u64>, bool)> {
    let facts = Facts::new(g)?;
    let failed = invariants
        .iter()
        .copied()
        .filter(|inv| !inv.holds(&facts))
        .collect();
    Ok((
        failed,
        facts.regular_k,
        facts.connected && facts.max_dist == 2,
    ))
}

/// Diameter-2 shortcut: in a connected graph of diameter 2, the stress of
/// every vertex equals the number of unordered non-adjacent pairs in its
/// neighborhood. Vacuous at other diameters.
pub fn diameter2_shortcut_agrees(g: &Graph) -> Result<bool> {
    let facts = Facts::new(g)?;
    if !facts.connected || facts.max_dist != 2 {
        return Ok(true);
    }
    Ok(g.vertices()
        .all(|v| facts.profile.stress[v] == non_adjacent_neighbor_pairs(g, v)))
}

/// Agreement between the neighbor-distance criterion and the enumerated
/// geodesic set: `u` imposes stress on `v` iff some listed geodesic has
/// endpoint `u` and `v` in its interior. Connected graphs only.
pub fn imposes_stress_matches_enumeration(g: &Graph) -> Result<bool> {
    let n = g.n();
    let paths = oracle::enumerate_geodesics(g)?;
    let mut imposed = vec![false; n * n];
    for p in &paths {
        let (a, b) = (p[0], *p.last().expect("paths are non-empty"));
        for &v in &p[1..p.len() - 1] {
            imposed[a * n + v] = true;
            imposed[b * n + v] = true;
        }
    }
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            if crate::stress::imposes_stress(g, u, v)? != imposed[u * n + v] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The pair-sum engine, the accumulation engine, and (optionally) the
/// enumeration oracle agree on every vertex.
pub fn engines_agree(g: &Graph, include_oracle: bool) -> Result<bool> {
    let naive = crate::stress::stress_profile(g)?;
    let accumulated = stress_profile_accumulated(g)?;
    if naive != accumulated {
        return Ok(false);
    }
    if include_oracle {
        for v in g.vertices() {
            if oracle::stress_oracle(g, v)? != naive.stress[v] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, corona, cycle, named, path, star, windmill, Fixture};

    fn corpus() -> Vec<Graph> {
        vec![
            Graph::edgeless(1),
            complete(2).unwrap(),
            complete(5).unwrap(),
            path(4).unwrap(),
            path(7).unwrap(),
            cycle(4).unwrap(),
            cycle(5).unwrap(),
            cycle(7).unwrap(),
            star(5).unwrap(),
            windmill(3, 3).unwrap(),
            corona(&complete(2).unwrap(), &path(3).unwrap()).unwrap(),
            named(Fixture::Fig1Regular3),
            named(Fixture::Fig2TwoStressRegular),
            named(Fixture::Fig3Prism),
            named(Fixture::Fig4Octahedron),
            named(Fixture::Petersen),
        ]
    }

    #[test]
    fn battery_holds_on_corpus() {
        for g in corpus() {
            assert_eq!(failing_invariants(&g, &Invariant::ALL).unwrap(), vec![]);
        }
    }

    #[test]
    fn shortcut_and_enumeration_hold_on_corpus() {
        for g in corpus() {
            assert!(diameter2_shortcut_agrees(&g).unwrap());
            if g.is_connected() {
                assert!(imposes_stress_matches_enumeration(&g).unwrap());
            }
            assert!(engines_agree(&g, g.n() <= 7).unwrap());
        }
    }

    #[test]
    fn universal_vertex_dominance_on_wheel() {
        // Hub of a wheel has eccentricity 1 and maximal stress.
        let wheel = corona(&complete(1).unwrap(), &cycle(4).unwrap()).unwrap();
        assert!(Invariant::UniversalVertexDominance.check(&wheel).unwrap());
        assert!(Invariant::MinDegreeBound.check(&wheel).unwrap());
    }
}
