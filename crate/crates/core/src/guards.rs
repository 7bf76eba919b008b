//! Size guards. Vertex-scale guards honor the `DIVGRAPH_MAX_VERTICES`
//! environment variable (default 8192); per-algorithm dimension caps are
//! fixed because they track the cost profile of a specific routine, not
//! the size of the graph.

use crate::error::{Error, Result};

pub const DEFAULT_MAX_VERTICES: u64 = 8192;

/// Hard ceiling for graph construction regardless of the env override.
pub const BUILD_HARD_MAX_VERTICES: u64 = 1 << 20;
pub const BUILD_MAX_PARTS: usize = 16;

pub const CHARPOLY_MAX_DIM: usize = 320;
pub const DET_MAX_DIM: usize = 4096;
pub const RATIONAL_NULLITY_MAX_DIM: usize = 512;
pub const MODULAR_NULLITY_MAX_DIM: usize = 8192;
pub const LUCAS_MAX_K: u32 = 16;
pub const PLANARITY_ORACLE_MAX_VERTICES: usize = 256;
pub const POSET_LIFT_DEFAULT_BOUND: usize = 10;

/// Effective vertex guard: `DIVGRAPH_MAX_VERTICES` if set and parseable,
/// otherwise [`DEFAULT_MAX_VERTICES`].
pub fn max_vertices() -> u64 {
    std::env::var("DIVGRAPH_MAX_VERTICES")
        .ok()
        .and_then(|s| s.trim().parse::<u64>().ok())
        .unwrap_or(DEFAULT_MAX_VERTICES)
}

pub fn check_vertices(what: &'static str, requested: u64) -> Result<()> {
    let limit = max_vertices();
    if requested > limit {
        return Err(Error::GuardExceeded {
            what,
            requested,
            limit,
        });
    }
    Ok(())
}

pub fn check_dim(what: &'static str, requested: usize, limit: usize) -> Result<()> {
    if requested > limit {
        return Err(Error::GuardExceeded {
            what,
            requested: requested as u64,
            limit: limit as u64,
        });
    }
    Ok(())
}
