//! Finite ultrametric spaces.
//!
//! The crate builds the representing tree of a space (the tree of its
//! closed balls labeled by diameter), produces minimum spanning paths,
//! decides membership in several structural classes, and computes the
//! Hausdorff distance between subsets from the ball structure. Each
//! algorithm has a brute-force counterpart used by the test suites.
//!
//! ```
//! use ultrametric::{build_representing_tree, hausdorff, fixtures};
//!
//! let z = fixtures::z15();
//! let tree = build_representing_tree(&z);
//! let a = z.point_set(&["x3", "x4", "x6", "x7", "x10", "x13", "x15"]).unwrap();
//! let b = z.point_set(&["x1", "x3", "x5", "x7", "x10", "x12", "x13", "x14"]).unwrap();
//! assert_eq!(hausdorff(&z, &tree, &a, &b).unwrap().to_string(), "7");
//! ```

// Distance matrices read most clearly with explicit indices.
#![allow(clippy::needless_range_loop)]

pub mod classify;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod generate;
pub mod hausdorff;
pub mod msp;
pub mod space;
pub mod tree;
pub mod weight;

mod union_find;

#[cfg(test)]
pub(crate) mod testing;

pub use classify::{
    all_msts_are_paths, classify, in_class_r, in_class_u, is_injective_labeling,
    is_strictly_binary, path_criterion_injective, path_criterion_strictly_binary, ClassReport,
    TreeShape,
};
pub use error::{Error, Result};
pub use generate::{generate_space, GeneratorSpec, Hierarchy};
pub use hausdorff::{bxy, hausdorff, hausdorff_oracle, hausdorff_via_path, BxySet};
pub use msp::{
    balls_from_path, enumerate_all_msts, eq4_distribution, kruskal_mst, msp_greedy,
    msp_tree_guided, verify_min_spanning_path, Edge, PathSpectrum, SpanningPath, SpanningTree,
    WeightDistribution,
};
pub use space::{
    diameter, multispectrum, set_distance, spectrum, Multispectrum, PointSet, Spectrum,
    UltrametricSpace,
};
pub use tree::{
    ballean, build_representing_tree, diametrical_partition, is_complete_multipartite,
    level_graph, tree_distance, Ball, Ballean, DiametricalPartition, Graph, LevelGraph, Node,
    NodeId, RepresentingTree,
};
pub use weight::Weight;
