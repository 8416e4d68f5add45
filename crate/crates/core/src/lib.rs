//! Trapspaces, trapping closures and structural classes of finite Boolean
//! networks `f : B^n -> B^n`.
//!
//! Networks are stored as explicit image tables, so every operation is exact
//! and exhaustive. Coordinate `x_i` lives in bit `i - 1` of a machine word and
//! configurations are printed `x_1 x_2 ... x_n` from left to right.
//!
//! ```
//! use trapspaces::{BooleanNetwork, Configuration, principal_trapspace};
//!
//! let f = trapspaces::fixtures::f_ex3();
//! let x: Configuration = "000".parse().unwrap();
//! assert_eq!(principal_trapspace(&f, x).unwrap().to_string(), "**0");
//! # let _ = BooleanNetwork::identity(2).unwrap();
//! ```

pub mod classes;
pub mod collections;
pub mod cube;
pub mod dynamics;
pub mod error;
pub mod fixtures;
pub mod generators;
pub mod netio;
pub mod network;
pub mod trapspaces;
pub mod verify;

pub use classes::{
    check_alternate_definitions, classify_network, min_trapspace_equivalent,
    trapspace_equivalent, verify_diagram, AlternateTheorem, ClassReport, DiagramId, DiagramSpec,
    Guard, Property, Violation,
};
pub use collections::{
    classify_collection, collection_at, lambda_closure, mu_reduction, realize, CollectionFlags,
    SubcubeCollection,
};
pub use cube::{delta_mask, opposite, span, Configuration, Mask, Subcube, MAX_DIMENSION};
pub use dynamics::{
    build_graph, graph_property, network_from_graph, strongly_connected_components,
    transient_and_period, Components, GraphKind, GraphProperty, HypercubeGraph,
};
pub use error::{Error, Result};
pub use network::{BooleanNetwork, LatticeOp, UpdateWord};
pub use trapspaces::{
    enumerate_trapspaces, is_trapspace, min_trapping_extension, minimal_trapspaces,
    principal_collection, principal_table, principal_trapspace, trapping_closure, trapping_graph,
    TrapspaceReport,
};
