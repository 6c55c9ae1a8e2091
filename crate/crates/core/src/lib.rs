//! Partial Steiner triple systems with 3-element lines: constructors for
//! the binomial families, exact hyperplane enumeration, Veldkamp spaces,
//! freely contained complete graphs, canonical labeling, and the census
//! of small binomial configurations.

pub mod budget;
pub mod canon;
pub mod catalog;
pub mod census;
pub mod document;
pub mod dot;
pub mod error;
pub mod families;
pub mod free_graphs;
pub mod hyperplanes;
pub mod incidence;
pub mod label;
pub mod partition;
pub mod point_set;
pub mod verify;

pub use canon::{are_isomorphic, canonical_form, GeometrySignature};
pub use census::generate_all_binomial;
pub use error::{Error, Result};
pub use families::{
    desargues, dual_veronesian, graph_sum, multi_veblen, perspective_system, quasi_grassmannian,
    tetrahedra, veronesian, PerspectiveData, SimpleGraph,
};
pub use free_graphs::{
    check_degeneracy, check_partition_criteria, decompose_hyperplane, find_free_complete_graphs,
    graph_complement, is_freely_contained, pairwise_intersections, FreeGraphWitness,
};
pub use hyperplanes::{
    check_connected_or_split_hypothesis, classify_hyperplane, enumerate_hyperplanes,
    labeled_veldkamp, veldkamp_space, HyperplaneGeometry, VeldkampSpace,
};
pub use incidence::{
    is_hyperplane, is_subspace, restrict, star, third_point, validate_psts, BinomialType,
    Configuration, ValidationReport,
};
pub use label::PointLabel;
pub use partition::{generate_subalgebra, hipcap, partition_hyperplane, PartitionSpec};
pub use point_set::PointSet;
