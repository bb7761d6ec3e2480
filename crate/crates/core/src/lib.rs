//! Constructions and verifiers for tight distance-regular graphs, their
//! local graphs and mu-graphs, plus a parameter screener.
//!
//! Graphs are stored as packed adjacency bitsets. Per-vertex loops run on
//! rayon when the `parallel` feature (default) is on and sequentially
//! otherwise; results are identical either way.

pub mod bitset;
pub mod clique;
pub mod designs;
pub mod drg;
pub mod families;
pub mod graph;
pub mod linalg;
pub mod mu;
pub mod par;
pub mod report;
pub mod scalar;
pub mod screen;
pub mod srg;

pub use drg::{
    is_distance_regular, spectrum_from_array, tightness_test, IntersectionArray, Spectrum,
    TightReport,
};
pub use families::{taylor_double, NamedGraph};
pub use graph::{all_pairs_distances, Graph};
pub use srg::{srg_params_from_graph, SrgParams};
