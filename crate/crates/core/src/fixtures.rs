//! Bundled example models.

use crate::error::Result;
use crate::model::{parse_network, BooleanNetwork, TargetSet};

/// 29-node T-LGL survival signalling network in the rule-file format.
pub const TLGL_MODEL: &str = include_str!("../fixtures/tlgl.bn");
/// Stabilize IL15, PDGF to 1 and PI3K, TPL2, SPHK to 0.
pub const TLGL_TARGET: &str = include_str!("../fixtures/tlgl.target");

pub fn tlgl() -> Result<(BooleanNetwork, TargetSet)> {
    let net = parse_network(TLGL_MODEL)?;
    let target = TargetSet::parse(TLGL_TARGET, &net)?;
    Ok((net, target))
}
