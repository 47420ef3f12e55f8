//! Distances, diameters, and distance-balancedness of generalized Petersen
//! graphs GP(n,k).
//!
//! Every closed form in [`pathform`] and [`diameter`] has a brute-force
//! counterpart in [`graph`], and the test suites check one against the other.

#![forbid(unsafe_code)]

pub mod balance;
pub mod diameter;
pub mod error;
pub mod graph;
pub mod pathform;
pub mod report;

pub use balance::{
    balance_report, conjecture_predicate, conjecture_scan, is_diam_distance_balanced,
    is_highly_distance_balanced, is_l_distance_balanced, w_set, BalanceReport, ConjectureRecord,
    LBalanceVerdict, Witness,
};
pub use diameter::{
    diameter, diameter_small_k, diameter_theorem, diameter_theorem_unchecked, DiameterMethod,
    DiameterResult, Strategy,
};
pub use error::{Error, Result};
pub use graph::{
    bfs_distances, oracle_diameter, oracle_distance, DistanceMap, GpParams, VertexClass, VertexId,
};
pub use pathform::{
    closed_distance, decompose, distance_table, jstar_case_analysis, jstar_scan, path_length,
    Decomposition, DistanceProfile, JStarResult, PathType,
};
