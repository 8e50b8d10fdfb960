//! Exact computation of generalized weighted graph zeta functions of
//! Bartholdi type on finite digraphs with multi-arcs and multi-loops.
//!
//! The four presentations of a zeta function are available:
//! exponential and Euler expressions as truncated series (via closed-path
//! enumeration), the Hashimoto expression `det(I - t M)` over the arc-indexed
//! edge matrix, and the vertex-indexed Ihara expression
//! `f(t) det(I - t A(t) + t^2 D(t))`.

pub mod algebra;
pub mod error;

pub use error::{Error, Result};
pub mod digraph;
pub mod fixtures;
pub mod lyndon;
pub mod paths;
pub mod weights;
pub mod zeta;
pub mod classical;
pub mod io;
