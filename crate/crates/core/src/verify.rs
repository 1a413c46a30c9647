//! Exhaustive verification over all connected labeled graphs up to a
//! vertex bound.
//!
//! Graphs on `n <= 8` vertices are encoded as edge masks: bit `p` of the
//! mask is pair `p` in row-major upper-triangle order `(0,1), (0,2), ...,
//! (0,n-1), (1,2), ...`. Scans walk masks in ascending order, optionally
//! split across worker threads in contiguous ranges; results are merged
//! in range order, so reports are identical regardless of worker count.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::Range;
use std::time::{Duration, Instant};

use crate::checks::{battery_eval, Invariant};
use crate::classify::{
    has_single_positive_stress_vertex, is_star_by_stress, is_structural_star,
    is_unique_cutvertex_complete_blocks, stress_regularity,
};
use crate::error::{Error, Result};
use crate::generators::{self, Fixture};
use crate::graph::Graph;

/// Largest vertex count the canonical-form search and the exhaustive
/// enumeration support.
pub const MAX_EXHAUSTIVE_N: usize = 8;

/// Statements the verifier can check, named by their tags in reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// Zero stress iff simplicial.
    SimplicialZeroStress,
    /// 0-stress regular iff complete (connected case).
    ZeroStressComplete,
    /// Total stress equals the weighted histogram sum.
    TotalStressIdentity,
    /// Unique positive-stress vertex iff unique cut vertex with complete
    /// blocks.
    SingleStressedVertex,
    /// One vertex of stress n(n-1)/2 and the rest zero iff a star.
    StarCharacterization,
    /// 1-stress regular iff C4 or C5.
    OneStressRegular,
    /// 2-stress regular iff one of the three six-vertex graphs.
    TwoStressRegular,
    /// Minimum-degree bound for diameter-2 stress-regular graphs.
    MinDegreeBound,
    /// Geodesic length bound from the maximum stress.
    GeodesicLengthBound,
    /// Universal vertices dominate every stress value.
    UniversalVertexDominance,
    /// Stress-regular graphs with positive stress have no universal
    /// vertex.
    EccentricityAtLeastTwo,
}

impl Theorem {
    pub fn tag(self) -> &'static str {
        match self {
            Theorem::SimplicialZeroStress => "T2_4",
            Theorem::ZeroStressComplete => "C2_5",
            Theorem::TotalStressIdentity => "P2_6",
            Theorem::SingleStressedVertex => "T4_1",
            Theorem::StarCharacterization => "C4_2",
            Theorem::OneStressRegular => "T6_5",
            Theorem::TwoStressRegular => "T6_6",
            Theorem::MinDegreeBound => "L6_1",
            Theorem::GeodesicLengthBound => "L6_2",
            Theorem::UniversalVertexDominance => "L6_3",
            Theorem::EccentricityAtLeastTwo => "C6_4",
        }
    }
}

impl std::fmt::Display for Theorem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.tag())
    }
}

fn invariant_theorem(inv: Invariant) -> Theorem {
    match inv {
        Invariant::SimplicialZeroStress => Theorem::SimplicialZeroStress,
        Invariant::TotalStressIdentity => Theorem::TotalStressIdentity,
        Invariant::MinDegreeBound => Theorem::MinDegreeBound,
        Invariant::GeodesicLengthBound => Theorem::GeodesicLengthBound,
        Invariant::UniversalVertexDominance => Theorem::UniversalVertexDominance,
        Invariant::EccentricityAtLeastTwo => Theorem::EccentricityAtLeastTwo,
    }
}

/// Isomorphism-invariant key: the lexicographically minimal adjacency
/// bit-string over all vertex relabelings, with the pair `(0,1)` in the
/// most significant position. Equal keys mean isomorphic graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey {
    n: u8,
    bits: u64,
}

impl CanonicalKey {
    pub fn n(self) -> usize {
        self.n as usize
    }

    /// The canonically labeled representative.
    pub fn to_graph(self) -> Graph {
        let n = self.n as usize;
        let total = pair_count(n);
        let mut edges = Vec::new();
        for (p, (i, j)) in pairs_row_major(n).enumerate() {
            if self.bits >> (total - 1 - p) & 1 == 1 {
                edges.push((i, j));
            }
        }
        Graph::from_edge_list(n, edges).expect("keys encode valid graphs")
    }
}

impl std::fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{:x}", self.n, self.bits)
    }
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn pairs_row_major(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

fn pair_index(i: usize, j: usize, n: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (n - 1) - (i * i - i) / 2 + j - i - 1
}

/// Minimal adjacency bit-string over all `n!` relabelings, found by
/// explicit permutation search (Heap's algorithm).
pub fn canonical_form(g: &Graph) -> Result<CanonicalKey> {
    let n = g.n();
    if n > MAX_EXHAUSTIVE_N {
        return Err(Error::TooLarge {
            n,
            max: MAX_EXHAUSTIVE_N,
        });
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let total = pair_count(n);
    let key_of = |perm: &[usize]| -> u64 {
        let mut bits = 0u64;
        for &(u, v) in &edges {
            let (a, b) = if perm[u] < perm[v] {
                (perm[u], perm[v])
            } else {
                (perm[v], perm[u])
            };
            bits |= 1 << (total - 1 - pair_index(a, b, n));
        }
        bits
    };

    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = key_of(&perm);
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            best = best.min(key_of(&perm));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(CanonicalKey { n: n as u8, bits: best })
}

pub(crate) fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    for (p, (i, j)) in pairs_row_major(n).enumerate() {
        if mask >> p & 1 == 1 {
            edges.push((i, j));
        }
    }
    Graph::from_edge_list(n, edges).expect("mask pairs are in range")
}

fn mask_passes(n: usize, mask: u64, min_degree: Option<usize>) -> bool {
    let mut rows = [0u8; 8];
    for (p, (i, j)) in pairs_row_major(n).enumerate() {
        if mask >> p & 1 == 1 {
            rows[i] |= 1 << j;
            rows[j] |= 1 << i;
        }
    }
    if let Some(d) = min_degree {
        if rows[..n].iter().any(|r| (r.count_ones() as usize) < d) {
            return false;
        }
    }
    let full: u8 = if n == 8 { !0 } else { (1 << n) - 1 };
    let mut reach: u8 = 1;
    loop {
        let mut next = reach;
        let mut bits = reach;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            next |= rows[i];
        }
        if next == reach {
            break;
        }
        reach = next;
    }
    reach == full
}

/// Every connected labeled graph on `n` vertices, in ascending edge-mask
/// order, optionally restricted to minimum degree at least `min_degree`.
pub fn enumerate_connected(
    n: usize,
    min_degree: Option<usize>,
) -> Result<impl Iterator<Item = Graph>> {
    if n < 1 || n > MAX_EXHAUSTIVE_N {
        return Err(Error::BadParameter(format!(
            "enumeration supports 1 <= n <= {MAX_EXHAUSTIVE_N}, got {n}"
        )));
    }
    let total: u64 = 1 << pair_count(n);
    Ok((0..total).filter_map(move |mask| {
        mask_passes(n, mask, min_degree).then(|| graph_from_mask(n, mask))
    }))
}

/// A graph reported back as an explicit edge list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Counterexample {
    fn of(g: &Graph) -> Self {
        Counterexample {
            n: g.n(),
            edges: g.edges().collect(),
        }
    }
}

/// Outcome of one exhaustive check. `counterexamples` empty means the
/// statement held everywhere at this scale.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub theorem: Theorem,
    pub max_n: usize,
    pub graphs_scanned: u64,
    /// Canonical keys of the graphs satisfying the characterized
    /// property, one per isomorphism class.
    pub witnesses: Vec<CanonicalKey>,
    pub counterexamples: Vec<Counterexample>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn verified(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Scan configuration: optional minimum-degree pruning and the worker
/// count (1 = fully sequential).
#[derive(Debug, Clone)]
pub struct ScanOptions {
    pub prune_min_degree: Option<usize>,
    pub jobs: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            prune_min_degree: None,
            jobs: 1,
        }
    }
}

fn scan_range<T, F>(
    n: usize,
    range: Range<u64>,
    min_degree: Option<usize>,
    eval: &F,
) -> Result<(u64, Vec<T>)>
where
    F: Fn(&Graph) -> Result<Option<T>>,
{
    let mut scanned = 0u64;
    let mut out = Vec::new();
    for mask in range {
        if !mask_passes(n, mask, min_degree) {
            continue;
        }
        scanned += 1;
        let g = graph_from_mask(n, mask);
        if let Some(t) = eval(&g)? {
            out.push(t);
        }
    }
    Ok((scanned, out))
}

/// Runs `eval` over every connected graph on `n` vertices. The mask space
/// is split into contiguous chunks across `jobs` threads; chunk results
/// are concatenated in order.
fn scan_connected<T, F>(
    n: usize,
    min_degree: Option<usize>,
    jobs: usize,
    eval: &F,
) -> Result<(u64, Vec<T>)>
where
    F: Fn(&Graph) -> Result<Option<T>> + Sync,
    T: Send,
{
    let total: u64 = 1 << pair_count(n);
    let jobs = jobs.max(1).min(64);
    if jobs == 1 || total < 1024 {
        return scan_range(n, 0..total, min_degree, eval);
    }
    let chunk = total.div_ceil(jobs as u64);
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for j in 0..jobs as u64 {
            let lo = j * chunk;
            if lo >= total {
                break;
            }
            let hi = (lo + chunk).min(total);
            handles.push(scope.spawn(move || scan_range(n, lo..hi, min_degree, eval)));
        }
        let mut scanned = 0u64;
        let mut out = Vec::new();
        for h in handles {
            let (c, mut v) = h.join().expect("scan worker panicked")?;
            scanned += c;
            out.append(&mut v);
        }
        Ok((scanned, out))
    })
}

fn check_scan_bounds(max_n: usize, min_n: usize, opts: &ScanOptions) -> Result<()> {
    if max_n < min_n || max_n > MAX_EXHAUSTIVE_N {
        return Err(Error::BadParameter(format!(
            "max_n must be between {min_n} and {MAX_EXHAUSTIVE_N}, got {max_n}"
        )));
    }
    if max_n == MAX_EXHAUSTIVE_N && opts.prune_min_degree.is_none() {
        return Err(Error::BadParameter(
            "scans at n = 8 require min-degree pruning".into(),
        ));
    }
    Ok(())
}

/// Checks that the `k`-stress-regular connected graphs with at most
/// `max_n` vertices are exactly the expected isomorphism classes:
/// complete graphs for `k = 0`, `{C4, C5}` for `k = 1`, and the three
/// six-vertex graphs for `k = 2`.
pub fn verify_k_stress_characterization(
    k: u64,
    max_n: usize,
    opts: &ScanOptions,
) -> Result<VerificationReport> {
    if k > 2 {
        return Err(Error::BadParameter(format!(
            "characterizations exist for k in 0..=2, got {k}"
        )));
    }
    check_scan_bounds(max_n, 1, opts)?;
    let start = Instant::now();

    let expected: BTreeSet<CanonicalKey> = match k {
        0 => (1..=max_n)
            .map(|n| canonical_form(&generators::complete(n)?))
            .collect::<Result<_>>()?,
        1 => [generators::cycle(4)?, generators::cycle(5)?]
            .iter()
            .map(canonical_form)
            .collect::<Result<_>>()?,
        _ => [
            generators::named(Fixture::Fig2TwoStressRegular),
            generators::named(Fixture::Fig3Prism),
            generators::named(Fixture::Fig4Octahedron),
        ]
        .iter()
        .map(canonical_form)
        .collect::<Result<_>>()?,
    };

    let mut scanned = 0u64;
    let mut witnesses = BTreeSet::new();
    let mut counterexamples = BTreeMap::new();
    for n in 1..=max_n {
        let (count, hits) = scan_connected(n, opts.prune_min_degree, opts.jobs, &|g| {
            Ok((stress_regularity(g)? == Some(k)).then(|| g.clone()))
        })?;
        scanned += count;
        for g in hits {
            let key = canonical_form(&g)?;
            witnesses.insert(key);
            if !expected.contains(&key) {
                counterexamples.entry(key).or_insert_with(|| Counterexample::of(&g));
            }
        }
    }

    Ok(VerificationReport {
        theorem: match k {
            0 => Theorem::ZeroStressComplete,
            1 => Theorem::OneStressRegular,
            _ => Theorem::TwoStressRegular,
        },
        max_n,
        graphs_scanned: scanned,
        witnesses: witnesses.into_iter().collect(),
        counterexamples: counterexamples.into_values().collect(),
        elapsed: start.elapsed(),
    })
}

enum PredicateHit {
    Witness(Graph),
    Violation(Graph),
}

fn verify_biconditional<F>(
    theorem: Theorem,
    max_n: usize,
    opts: &ScanOptions,
    eval: F,
) -> Result<VerificationReport>
where
    F: Fn(&Graph) -> Result<Option<PredicateHit>> + Sync,
{
    let start = Instant::now();
    let mut scanned = 0u64;
    let mut witnesses = BTreeSet::new();
    let mut counterexamples = Vec::new();
    for n in 3..=max_n {
        let (count, hits) = scan_connected(n, opts.prune_min_degree, opts.jobs, &eval)?;
        scanned += count;
        for hit in hits {
            match hit {
                PredicateHit::Witness(g) => {
                    witnesses.insert(canonical_form(&g)?);
                }
                PredicateHit::Violation(g) => counterexamples.push(Counterexample::of(&g)),
            }
        }
    }
    Ok(VerificationReport {
        theorem,
        max_n,
        graphs_scanned: scanned,
        witnesses: witnesses.into_iter().collect(),
        counterexamples,
        elapsed: start.elapsed(),
    })
}

/// Checks, for every connected graph with `3 <= n <= max_n`, that having
/// exactly one positive-stress vertex coincides with having a unique cut
/// vertex whose blocks are all complete, and that the two predicates name
/// the same vertex.
pub fn verify_unique_stress_theorem(
    max_n: usize,
    opts: &ScanOptions,
) -> Result<VerificationReport> {
    check_scan_bounds(max_n, 3, opts)?;
    if max_n > 7 {
        return Err(Error::BadParameter(
            "the single-stressed-vertex scan is bounded at n = 7".into(),
        ));
    }
    verify_biconditional(Theorem::SingleStressedVertex, max_n, opts, |g| {
        let by_stress = has_single_positive_stress_vertex(g)?;
        let by_structure = is_unique_cutvertex_complete_blocks(g)?;
        Ok(if by_stress != by_structure {
            Some(PredicateHit::Violation(g.clone()))
        } else if by_stress.is_some() {
            Some(PredicateHit::Witness(g.clone()))
        } else {
            None
        })
    })
}

/// Checks, for every connected graph with `3 <= n <= max_n`, that the
/// stress profile of a star (one vertex at `n(n-1)/2`, the rest zero)
/// occurs exactly on the stars.
pub fn verify_star_characterization(
    max_n: usize,
    opts: &ScanOptions,
) -> Result<VerificationReport> {
    check_scan_bounds(max_n, 3, opts)?;
    if max_n > 7 {
        return Err(Error::BadParameter(
            "the star-characterization scan is bounded at n = 7".into(),
        ));
    }
    verify_biconditional(Theorem::StarCharacterization, max_n, opts, |g| {
        let by_stress = is_star_by_stress(g)?;
        let by_structure = is_structural_star(g);
        Ok(if by_stress != by_structure {
            Some(PredicateHit::Violation(g.clone()))
        } else if by_stress {
            Some(PredicateHit::Witness(g.clone()))
        } else {
            None
        })
    })
}

struct BatteryHit {
    g: Graph,
    failed: Vec<Invariant>,
    regular_k: Option<u64>,
    diameter_two: bool,
}

/// Runs the named invariants over every connected graph with at most
/// `max_n` vertices in one shared pass, producing one report per
/// invariant. Witnesses are collected only for the two conditional
/// statements whose hypothesis class is sparse: the min-degree bound
/// (stress-regular of diameter 2) and the eccentricity corollary
/// (stress-regular with positive stress).
pub fn verify_invariants(
    invariants: &[Invariant],
    max_n: usize,
    opts: &ScanOptions,
) -> Result<Vec<VerificationReport>> {
    check_scan_bounds(max_n, 1, opts)?;
    if max_n > 7 {
        return Err(Error::BadParameter(
            "the invariant battery is bounded at n = 7".into(),
        ));
    }
    let start = Instant::now();
    let mut scanned = 0u64;
    let mut hits: Vec<BatteryHit> = Vec::new();
    for n in 1..=max_n {
        let (count, mut found) =
            scan_connected(n, opts.prune_min_degree, opts.jobs, &|g| {
                let (failed, regular_k, diameter_two) = battery_eval(g, invariants)?;
                let positive_regular = regular_k.is_some_and(|k| k >= 1);
                Ok((!failed.is_empty() || positive_regular).then(|| BatteryHit {
                    g: g.clone(),
                    failed,
                    regular_k,
                    diameter_two,
                }))
            })?;
        scanned += count;
        hits.append(&mut found);
    }

    let mut reports = Vec::new();
    for &inv in invariants {
        let mut witnesses = BTreeSet::new();
        let mut counterexamples = Vec::new();
        for hit in &hits {
            if hit.failed.contains(&inv) {
                counterexamples.push(Counterexample::of(&hit.g));
            }
            let positive_regular = hit.regular_k.is_some_and(|k| k >= 1);
            let is_witness = match inv {
                Invariant::MinDegreeBound => positive_regular && hit.diameter_two,
                Invariant::EccentricityAtLeastTwo => positive_regular,
                _ => false,
            };
            if is_witness {
                witnesses.insert(canonical_form(&hit.g)?);
            }
        }
        reports.push(VerificationReport {
            theorem: invariant_theorem(inv),
            max_n,
            graphs_scanned: scanned,
            witnesses: witnesses.into_iter().collect(),
            counterexamples,
            elapsed: start.elapsed(),
        });
    }
    Ok(reports)
}

/// The full six-invariant battery in one pass.
pub fn verify_invariant_battery(
    max_n: usize,
    opts: &ScanOptions,
) -> Result<Vec<VerificationReport>> {
    verify_invariants(&Invariant::ALL, max_n, opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cocktail_party, complete, cycle, path, power, star, windmill};

    #[test]
    fn connected_counts_small() {
        let counts: Vec<u64> = (1..=5)
            .map(|n| enumerate_connected(n, None).unwrap().count() as u64)
            .collect();
        assert_eq!(counts, vec![1, 1, 4, 38, 728]);
    }

    #[test]
    fn enumeration_rejects_bad_n() {
        assert!(enumerate_connected(0, None).is_err());
        assert!(enumerate_connected(9, None).is_err());
    }

    #[test]
    fn min_degree_pruning_filters() {
        // Connected graphs on 4 vertices with min degree >= 2.
        let pruned: Vec<Graph> = enumerate_connected(4, Some(2)).unwrap().collect();
        assert!(pruned.iter().all(|g| g.min_degree() >= 2));
        assert!(pruned.len() < 38);
        // C4 and K4 are both in there.
        let keys: BTreeSet<CanonicalKey> = pruned
            .iter()
            .map(|g| canonical_form(g).unwrap())
            .collect();
        assert!(keys.contains(&canonical_form(&cycle(4).unwrap()).unwrap()));
        assert!(keys.contains(&canonical_form(&complete(4).unwrap()).unwrap()));
    }

    #[test]
    fn canonical_form_invariance() {
        let c4 = cycle(4).unwrap();
        let relabeled = c4.relabel(&[2, 0, 3, 1]);
        assert_eq!(
            canonical_form(&c4).unwrap(),
            canonical_form(&relabeled).unwrap()
        );
        assert_ne!(
            canonical_form(&path(3).unwrap()).unwrap(),
            canonical_form(&complete(3).unwrap()).unwrap()
        );
    }

    #[test]
    fn canonical_form_octahedron_equals_cocktail_party() {
        let via_power = power(&cycle(6).unwrap(), 2).unwrap();
        assert_eq!(
            canonical_form(&via_power).unwrap(),
            canonical_form(&cocktail_party(2).unwrap()).unwrap()
        );
    }

    #[test]
    fn canonical_form_rejects_large() {
        assert_eq!(
            canonical_form(&complete(9).unwrap()),
            Err(Error::TooLarge { n: 9, max: 8 })
        );
    }

    #[test]
    fn canonical_key_round_trips() {
        for g in [cycle(5).unwrap(), star(4).unwrap(), complete(4).unwrap()] {
            let key = canonical_form(&g).unwrap();
            let rep = key.to_graph();
            assert_eq!(canonical_form(&rep).unwrap(), key);
            assert_eq!(rep.edge_count(), g.edge_count());
        }
    }

    #[test]
    fn one_stress_regular_at_small_n() {
        let report =
            verify_k_stress_characterization(1, 5, &ScanOptions::default()).unwrap();
        assert_eq!(report.graphs_scanned, 1 + 1 + 4 + 38 + 728);
        let expected: Vec<CanonicalKey> = [cycle(4).unwrap(), cycle(5).unwrap()]
            .iter()
            .map(|g| canonical_form(g).unwrap())
            .collect();
        let mut expected = expected;
        expected.sort();
        assert_eq!(report.witnesses, expected);
        assert!(report.verified());
    }

    #[test]
    fn zero_stress_regular_is_complete() {
        let report =
            verify_k_stress_characterization(0, 5, &ScanOptions::default()).unwrap();
        assert_eq!(report.witnesses.len(), 5);
        assert!(report.verified());
    }

    #[test]
    fn unique_stress_theorem_small() {
        let report = verify_unique_stress_theorem(5, &ScanOptions::default()).unwrap();
        assert!(report.verified());
        // P3 (two K2 blocks at one cut vertex) is a witness.
        assert!(report
            .witnesses
            .contains(&canonical_form(&path(3).unwrap()).unwrap()));
        let report = verify_unique_stress_theorem(6, &ScanOptions::default()).unwrap();
        assert!(report
            .witnesses
            .contains(&canonical_form(&windmill(3, 2).unwrap()).unwrap()));
        assert!(report.verified());
    }

    #[test]
    fn star_characterization_small() {
        let report = verify_star_characterization(5, &ScanOptions::default()).unwrap();
        assert!(report.verified());
        let stars: Vec<CanonicalKey> = (2..=4)
            .map(|n| canonical_form(&star(n).unwrap()).unwrap())
            .collect();
        let mut stars = stars;
        stars.sort();
        assert_eq!(report.witnesses, stars);
    }

    #[test]
    fn battery_small() {
        let reports = verify_invariant_battery(5, &ScanOptions::default()).unwrap();
        assert_eq!(reports.len(), 6);
        for r in &reports {
            assert!(r.verified(), "{}", r.theorem);
            assert_eq!(r.graphs_scanned, 772);
        }
        // C4 and C5 are stress regular with diameter 2, so they witness
        // both conditional invariants.
        let c4 = canonical_form(&cycle(4).unwrap()).unwrap();
        let min_degree = reports
            .iter()
            .find(|r| r.theorem == Theorem::MinDegreeBound)
            .unwrap();
        assert!(min_degree.witnesses.contains(&c4));
    }

    #[test]
    fn jobs_do_not_change_reports() {
        let serial = verify_k_stress_characterization(1, 5, &ScanOptions::default()).unwrap();
        let parallel = verify_k_stress_characterization(
            1,
            5,
            &ScanOptions {
                prune_min_degree: None,
                jobs: 4,
            },
        )
        .unwrap();
        assert_eq!(serial.graphs_scanned, parallel.graphs_scanned);
        assert_eq!(serial.witnesses, parallel.witnesses);
        assert_eq!(serial.counterexamples, parallel.counterexamples);
    }

    #[test]
    fn n8_requires_pruning() {
        assert!(verify_k_stress_characterization(2, 8, &ScanOptions::default()).is_err());
    }
}
