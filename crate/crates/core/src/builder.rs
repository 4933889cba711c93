//! Maps from signed rotation systems.
//!
//! A connected graph, a cyclic order of edge-ends at each vertex and a
//! twisted/untwisted sign per edge determine a map on any surface. Each edge
//! contributes four flags, one for each (end, side) combination; the side of
//! an end is the corner it faces, previous or next in the rotation.

use thiserror::Error;

use crate::edgeset::EdgeId;
use crate::graph::EdgeEnd;
use crate::map::{CombinatorialMap, Flag, MapError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BuildError {
    #[error("edge-end {0} is listed {1} times across the rotations")]
    EndMultiplicity(EdgeEnd, usize),
    #[error("edge-end {end} is listed at vertex {listed} but belongs to vertex {actual}")]
    WrongVertex {
        end: EdgeEnd,
        listed: usize,
        actual: usize,
    },
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),
    #[error(transparent)]
    Map(#[from] MapError),
}

/// Side of an edge-end: toward the previous or the next corner of the
/// rotation at its vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Side {
    Prev = 0,
    Next = 1,
}

/// Flag numbering shared by every builder: edge `e` owns flags
/// `4(e−1) .. 4e`, so quadrilateral numbering follows edge labels.
#[inline]
pub(crate) fn flag_of(end: EdgeEnd, side: Side) -> Flag {
    4 * end.edge.index() + 2 * end.end as usize + side as usize
}

#[derive(Clone, Debug)]
pub struct SignedRotation {
    vertex_count: usize,
    /// `edges[i]` is edge `i + 1`.
    edges: Vec<[usize; 2]>,
    rotations: Vec<Vec<EdgeEnd>>,
    twisted: Vec<bool>,
}

impl SignedRotation {
    pub fn new(
        vertex_count: usize,
        edges: Vec<[usize; 2]>,
        rotations: Vec<Vec<EdgeEnd>>,
        twisted: Vec<bool>,
    ) -> Result<Self, BuildError> {
        assert_eq!(edges.len(), twisted.len(), "one sign per edge");
        if rotations.len() != vertex_count {
            return Err(BuildError::VertexOutOfRange(rotations.len().max(vertex_count)));
        }
        let mut seen = vec![0usize; 2 * edges.len()];
        for (v, rot) in rotations.iter().enumerate() {
            for &h in rot {
                let Some(ends) = edges.get(h.edge.index()) else {
                    return Err(BuildError::EndMultiplicity(h, 0));
                };
                let actual = ends[h.end as usize];
                if actual != v {
                    return Err(BuildError::WrongVertex {
                        end: h,
                        listed: v,
                        actual,
                    });
                }
                seen[2 * h.edge.index() + h.end as usize] += 1;
            }
        }
        if let Some(i) = seen.iter().position(|&c| c != 1) {
            let end = EdgeEnd::new(EdgeId::from_index(i / 2), (i % 2) as u8);
            return Err(BuildError::EndMultiplicity(end, seen[i]));
        }
        Ok(SignedRotation {
            vertex_count,
            edges,
            rotations,
            twisted,
        })
    }

    /// Untwisted rotation system of a simple graph given by cyclic neighbor
    /// lists. Edges are numbered in lexicographic order of `(min, max)`
    /// endpoints, end 0 at the smaller vertex.
    pub fn from_neighbor_orders(neighbors: &[&[usize]]) -> Result<Self, BuildError> {
        let mut pairs: Vec<[usize; 2]> = Vec::new();
        for (u, ns) in neighbors.iter().enumerate() {
            for &v in ns.iter() {
                if v >= neighbors.len() {
                    return Err(BuildError::VertexOutOfRange(v));
                }
                if u < v {
                    pairs.push([u, v]);
                }
            }
        }
        pairs.sort();
        let rotations = neighbors
            .iter()
            .enumerate()
            .map(|(u, ns)| {
                ns.iter()
                    .map(|&v| {
                        let key = [u.min(v), u.max(v)];
                        let i = pairs.binary_search(&key).expect("edge listed at both ends");
                        EdgeEnd::new(EdgeId::from_index(i), u8::from(u > v))
                    })
                    .collect()
            })
            .collect();
        let twisted = vec![false; pairs.len()];
        SignedRotation::new(neighbors.len(), pairs, rotations, twisted)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// The map of this embedding. Fails only when the graph is disconnected.
    pub fn build(&self) -> Result<CombinatorialMap, MapError> {
        let n = 4 * self.edges.len();
        let mut red = vec![0; n];
        let mut green = vec![0; n];
        let mut black = vec![0; n];
        for (i, &twisted) in self.twisted.iter().enumerate() {
            let e = EdgeId::from_index(i);
            for end in 0..2u8 {
                let h = EdgeEnd::new(e, end);
                let (p, q) = (flag_of(h, Side::Prev), flag_of(h, Side::Next));
                red[p] = q;
                red[q] = p;
            }
            // Untwisted: the face left of the edge is on the next side at end
            // 0 and on the previous side at end 1.
            for side in [Side::Prev, Side::Next] {
                let across = match (twisted, side) {
                    (false, Side::Prev) | (true, Side::Next) => Side::Next,
                    (false, Side::Next) | (true, Side::Prev) => Side::Prev,
                };
                let a = flag_of(EdgeEnd::new(e, 0), side);
                let b = flag_of(EdgeEnd::new(e, 1), across);
                green[a] = b;
                green[b] = a;
            }
        }
        for rot in &self.rotations {
            for (i, &h) in rot.iter().enumerate() {
                let next = rot[(i + 1) % rot.len()];
                let (a, b) = (flag_of(h, Side::Next), flag_of(next, Side::Prev));
                black[a] = b;
                black[b] = a;
            }
        }
        CombinatorialMap::from_involutions([red, green, black])
    }
}
