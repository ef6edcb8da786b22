//! Pinning control of Boolean networks toward a target set of states.
//!
//! Nodes are split by the target set into free and fixed-state nodes. A small
//! set of fixed-state nodes is pinned so that the fixed-state subnetwork
//! becomes acyclic, and each pinned node gets a state-feedback law coupled to
//! its original rule. Every trajectory of the rewritten network then enters
//! the target set and stays there.

pub mod error;
pub mod fixtures;
pub mod model;
pub mod partition;
pub mod random;
pub mod stp;
pub mod structure;
pub mod synthesis;
pub mod verify;

pub use error::{Error, Result};
pub use model::{parse_network, BoolExpr, BooleanNetwork, StateVector, TargetSet};
pub use partition::{lambda_partition, NodePartition};
pub use stp::LogicalMatrix;
pub use synthesis::{synthesize, Synthesis};
