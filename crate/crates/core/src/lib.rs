//! Exact stress centrality for finite simple graphs.
//!
//! The stress of a vertex is the number of geodesics (shortest paths)
//! passing through it as an internal vertex. This crate computes it
//! exactly, predicts it in closed form for standard families, classifies
//! graphs by the structure their stress profile forces, and verifies the
//! characterization statements exhaustively over all small connected
//! graphs.
//!
//! - [`graph`]: immutable simple graphs, BFS with path counts, metrics.
//! - [`stress`]: all-pairs geodesic census, stress profiles (pair-sum and
//!   accumulated engines), length histogram, the stress-imposing relation.
//! - [`oracle`]: brute-force geodesic enumeration for cross-checking.
//! - [`generators`]: standard families, corona products, graph powers,
//!   named fixtures, seeded random trees.
//! - [`closed_form`]: exact formulas per family, cross-validated against
//!   the engine.
//! - [`classify`]: simplicial vertices, block–cut structure, strongly
//!   regular detection, stress regularity, family recognition.
//! - [`checks`]: per-graph invariants shared by tests and the verifier.
//! - [`verify`]: exhaustive scans over all connected labeled graphs up to
//!   eight vertices, with canonical-form witness dedup.

pub mod checks;
pub mod classify;
pub mod closed_form;
pub mod error;
pub mod generators;
pub mod graph;
pub mod oracle;
pub mod stress;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{BfsResult, Graph};
pub use stress::{GeodesicCensus, GeodesicHistogram, StressProfile};
