//! Finite digraphs with multi-arcs and multi-loops, and finite graphs with
//! their symmetric digraphs.
//!
//! Vertices are `0..vertex_count` in ascending order; arcs are identified by
//! their position in the arc list. Both orders are the fixed total orders
//! used throughout the crate.

use crate::algebra::{Matrix, Ring};
use crate::error::{Error, Result};

pub type Vertex = usize;
pub type ArcId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    vertex_count: usize,
    arcs: Vec<(Vertex, Vertex)>,
    out_arcs: Vec<Vec<ArcId>>,
}

/// Vertex pairs `(u, v)` with `u <= v` that carry at least one arc, split by
/// kind: loops, one-directional pairs and bidirectional pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PhiPartition {
    pub loops: Vec<(Vertex, Vertex)>,
    pub one_way: Vec<(Vertex, Vertex)>,
    pub two_way: Vec<(Vertex, Vertex)>,
}

impl PhiPartition {
    /// All pairs in ascending lexicographic order.
    pub fn all(&self) -> Vec<(Vertex, Vertex)> {
        let mut v: Vec<_> = self
            .loops
            .iter()
            .chain(&self.one_way)
            .chain(&self.two_way)
            .copied()
            .collect();
        v.sort_unstable();
        v
    }
}

impl Digraph {
    pub fn new(vertex_count: usize, arcs: Vec<(Vertex, Vertex)>) -> Result<Self> {
        let mut out_arcs = vec![Vec::new(); vertex_count];
        for (id, &(tail, head)) in arcs.iter().enumerate() {
            if tail >= vertex_count {
                return Err(Error::InvalidVertex(tail));
            }
            if head >= vertex_count {
                return Err(Error::InvalidVertex(head));
            }
            out_arcs[tail].push(id);
        }
        Ok(Digraph {
            vertex_count,
            arcs,
            out_arcs,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(Vertex, Vertex)] {
        &self.arcs
    }

    pub fn tail(&self, a: ArcId) -> Vertex {
        self.arcs[a].0
    }

    pub fn head(&self, a: ArcId) -> Vertex {
        self.arcs[a].1
    }

    pub fn is_loop(&self, a: ArcId) -> bool {
        self.tail(a) == self.head(a)
    }

    /// Arcs leaving `u`, ascending id.
    pub fn out_arcs(&self, u: Vertex) -> &[ArcId] {
        &self.out_arcs[u]
    }

    fn check_arc(&self, a: ArcId) -> Result<()> {
        if a < self.arcs.len() {
            Ok(())
        } else {
            Err(Error::InvalidArc(a))
        }
    }

    fn check_vertex(&self, u: Vertex) -> Result<()> {
        if u < self.vertex_count {
            Ok(())
        } else {
            Err(Error::InvalidVertex(u))
        }
    }

    /// `A_uv`: arcs from `u` to `v`, ascending id.
    pub fn arcs_from_to(&self, u: Vertex, v: Vertex) -> Vec<ArcId> {
        self.out_arcs
            .get(u)
            .map(|out| out.iter().copied().filter(|&a| self.head(a) == v).collect())
            .unwrap_or_default()
    }

    /// `a2` is an inverse of `a1`: it runs from the head of `a1` back to its
    /// tail. Loops are self-inverse, and every loop at a vertex is an inverse
    /// of every other loop there.
    pub fn is_inverse(&self, a1: ArcId, a2: ArcId) -> bool {
        self.tail(a2) == self.head(a1) && self.head(a2) == self.tail(a1)
    }

    /// `S(a)`, the inverse-arc set of `a`.
    pub fn inverse_set(&self, a: ArcId) -> Result<Vec<ArcId>> {
        self.check_arc(a)?;
        Ok(self.arcs_from_to(self.head(a), self.tail(a)))
    }

    /// `(A_uv, A_vu)`; for `u == v` both entries are the loops at `u`.
    pub fn arcs_between(&self, u: Vertex, v: Vertex) -> Result<(Vec<ArcId>, Vec<ArcId>)> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok((self.arcs_from_to(u, v), self.arcs_from_to(v, u)))
    }

    pub fn phi_partition(&self) -> PhiPartition {
        let n = self.vertex_count;
        let mut counts = vec![0usize; n * n];
        for &(t, h) in &self.arcs {
            counts[t * n + h] += 1;
        }
        let mut part = PhiPartition::default();
        for u in 0..n {
            for v in u..n {
                let forward = counts[u * n + v];
                let backward = counts[v * n + u];
                if u == v {
                    if forward > 0 {
                        part.loops.push((u, v));
                    }
                } else if forward > 0 && backward > 0 {
                    part.two_way.push((u, v));
                } else if forward > 0 || backward > 0 {
                    part.one_way.push((u, v));
                }
            }
        }
        part
    }

    /// `A[u][v] = |A_uv|`.
    pub fn adjacency_matrix<R: Ring>(&self) -> Matrix<R> {
        let n = self.vertex_count;
        let mut counts = vec![0i64; n * n];
        for &(t, h) in &self.arcs {
            counts[t * n + h] += 1;
        }
        Matrix::from_fn(n, n, |i, j| R::from_int(counts[i * n + j]))
    }

    /// Diagonal matrix of `d_u = sum_{v != u} |A_uv| |A_vu|`, the number of
    /// non-loop backtracking pairs based at `u`.
    pub fn backtrack_matrix<R: Ring>(&self) -> Matrix<R> {
        let n = self.vertex_count;
        let mut counts = vec![0i64; n * n];
        for &(t, h) in &self.arcs {
            counts[t * n + h] += 1;
        }
        Matrix::diagonal(
            (0..n)
                .map(|u| {
                    let d: i64 = (0..n)
                        .filter(|&v| v != u)
                        .map(|v| counts[u * n + v] * counts[v * n + u])
                        .sum();
                    R::from_int(d)
                })
                .collect(),
        )
    }
}

/// An undirected finite graph; loops and parallel edges allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(Vertex, Vertex)>,
}

/// The arcs a graph edge turns into inside the symmetric digraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeArcs {
    /// `forward` runs from the smaller endpoint to the larger one.
    Pair { forward: ArcId, backward: ArcId },
    Loop(ArcId),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricDigraph {
    pub digraph: Digraph,
    /// Indexed by edge position.
    pub provenance: Vec<EdgeArcs>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: Vec<(Vertex, Vertex)>) -> Result<Self> {
        for &(u, v) in &edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::InvalidVertex(w));
                }
            }
        }
        Ok(Graph {
            vertex_count,
            edges,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|(u, v)| u == v).count()
    }

    /// No loops and at most one edge per vertex pair.
    pub fn is_simple(&self) -> bool {
        self.simple_violation().is_none()
    }

    pub(crate) fn simple_violation(&self) -> Option<String> {
        let mut seen = std::collections::BTreeSet::new();
        for &(u, v) in &self.edges {
            if u == v {
                return Some(format!("loop at vertex {u}"));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Some(format!("parallel edges between {u} and {v}"));
            }
        }
        None
    }

    /// Each non-loop edge becomes two opposite arcs, each loop one arc.
    pub fn symmetric_digraph(&self) -> SymmetricDigraph {
        let mut arcs = Vec::new();
        let mut provenance = Vec::with_capacity(self.edges.len());
        for &(u, v) in &self.edges {
            if u == v {
                provenance.push(EdgeArcs::Loop(arcs.len()));
                arcs.push((u, u));
            } else {
                let (lo, hi) = (u.min(v), u.max(v));
                provenance.push(EdgeArcs::Pair {
                    forward: arcs.len(),
                    backward: arcs.len() + 1,
                });
                arcs.push((lo, hi));
                arcs.push((hi, lo));
            }
        }
        SymmetricDigraph {
            digraph: Digraph::new(self.vertex_count, arcs).expect("edge endpoints validated"),
            provenance,
        }
    }

    /// Adjacency matrix; a loop contributes one to its diagonal entry.
    pub fn adjacency_matrix<R: Ring>(&self) -> Matrix<R> {
        self.symmetric_digraph().digraph.adjacency_matrix()
    }

    /// Diagonal matrix of row sums of the adjacency matrix.
    pub fn degree_matrix<R: Ring>(&self) -> Matrix<R> {
        let a: Matrix<R> = self.adjacency_matrix();
        Matrix::diagonal(
            (0..self.vertex_count)
                .map(|u| a.row(u).iter().fold(R::zero(), |acc, x| acc.add(x)))
                .collect(),
        )
    }
}
