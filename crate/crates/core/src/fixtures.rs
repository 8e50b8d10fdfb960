//! The 3-vertex, 8-arc worked-example digraph used by tests, the CLI sample
//! file and the acceptance suite.
//!
//! Vertices `v1, v2, v3` are `0, 1, 2`; arcs `a1..a8` are ids `0..8`:
//! two loops at `v1`, `v1 -> v2`, `v2 -> v1`, two arcs `v2 -> v3`,
//! `v3 -> v2` and `v3 -> v1`.

use crate::digraph::{Digraph, Vertex};

pub const WORKED_EXAMPLE_ARCS: [(Vertex, Vertex); 8] = [
    (0, 0),
    (0, 0),
    (0, 1),
    (1, 0),
    (1, 2),
    (1, 2),
    (2, 1),
    (2, 0),
];

pub fn worked_example_digraph() -> Digraph {
    Digraph::new(3, WORKED_EXAMPLE_ARCS.to_vec()).expect("valid fixture")
}
