//! Boolean-network representation: expressions, parsing, states and targets.

mod expr;
mod network;
mod parse;
mod target;

pub use expr::{
    column_bit, column_of, functional_inputs, functional_inputs_capped, BoolExpr, TruthTable,
    DEFAULT_ARITY_CAP,
};
pub use network::{BooleanNetwork, StateVector};
pub use parse::{emit_network, is_identifier, parse_network, parse_network_capped};
pub use target::{member, TargetSet};
