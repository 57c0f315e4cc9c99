//! Enforced size bounds for the combinatorial explosions in this crate.
//!
//! The environment variable `CRYSTAL_MAX_N` may raise (never lower) the
//! defaults.

pub const DEFAULT_CHAR_BOUND: usize = 12;
pub const DEFAULT_GRAPH_BOUND: usize = 8;

fn raised(default: usize) -> usize {
    std::env::var("CRYSTAL_MAX_N")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .map_or(default, |v| v.max(default))
}

/// Maximum total length for induced-character computations.
pub fn char_bound() -> usize {
    raised(DEFAULT_CHAR_BOUND)
}

/// Maximum node size for graph builders.
pub fn graph_bound() -> usize {
    raised(DEFAULT_GRAPH_BOUND)
}
