//! Small multigraphs whose edges carry [`EdgeId`] labels.
//!
//! Both graphs a map encodes (the embedded graph and its geometric dual) are
//! stored this way, as are the inputs to reconstruction. Loops and parallel
//! edges are ordinary edges here.

use std::collections::HashMap;

use thiserror::Error;

use crate::edgeset::{EdgeId, EdgeSet};
use crate::unionfind::UnionFind;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge {0} appears more than once")]
    DuplicateEdge(EdgeId),
    #[error("edge {edge} has endpoint {vertex} but the graph has {count} vertices")]
    EndpointOutOfRange {
        edge: EdgeId,
        vertex: usize,
        count: usize,
    },
    #[error("edge label 0 is not allowed; labels start at 1")]
    ZeroLabel,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LabeledEdge {
    pub id: EdgeId,
    pub ends: [usize; 2],
}

impl LabeledEdge {
    pub fn is_loop(&self) -> bool {
        self.ends[0] == self.ends[1]
    }
}

/// One end of a labeled edge: `end` 0 or 1 indexes [`LabeledEdge::ends`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeEnd {
    pub edge: EdgeId,
    pub end: u8,
}

impl EdgeEnd {
    pub fn new(edge: EdgeId, end: u8) -> Self {
        debug_assert!(end < 2);
        EdgeEnd { edge, end }
    }

    pub fn opposite(self) -> Self {
        EdgeEnd {
            edge: self.edge,
            end: 1 - self.end,
        }
    }
}

impl std::fmt::Display for EdgeEnd {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}{}", self.edge, if self.end == 0 { '-' } else { '+' })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    vertices: Vec<String>,
    edges: Vec<LabeledEdge>,
    by_id: HashMap<EdgeId, usize>,
}

impl LabeledGraph {
    /// Edges are kept sorted by label.
    pub fn new(vertices: Vec<String>, mut edges: Vec<LabeledEdge>) -> Result<Self, GraphError> {
        edges.sort_by_key(|e| e.id);
        let mut by_id = HashMap::with_capacity(edges.len());
        for (i, e) in edges.iter().enumerate() {
            if e.id.0 == 0 {
                return Err(GraphError::ZeroLabel);
            }
            if by_id.insert(e.id, i).is_some() {
                return Err(GraphError::DuplicateEdge(e.id));
            }
            for &v in &e.ends {
                if v >= vertices.len() {
                    return Err(GraphError::EndpointOutOfRange {
                        edge: e.id,
                        vertex: v,
                        count: vertices.len(),
                    });
                }
            }
        }
        Ok(LabeledGraph {
            vertices,
            edges,
            by_id,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[LabeledEdge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> Option<&LabeledEdge> {
        self.by_id.get(&id).map(|&i| &self.edges[i])
    }

    pub fn labels(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.iter().map(|e| e.id)
    }

    /// Labels as an [`EdgeSet`]; `None` if some label exceeds 64.
    pub fn label_set(&self) -> Option<EdgeSet> {
        if self.labels().any(|e| e.0 > crate::edgeset::MAX_EDGE_ID) {
            return None;
        }
        Some(self.labels().collect())
    }

    /// True when the labels are exactly `1..=edge_count`.
    pub fn has_dense_labels(&self) -> bool {
        self.edges
            .iter()
            .enumerate()
            .all(|(i, e)| e.id == EdgeId::from_index(i))
    }

    /// Edge-ends sitting at `v`, in label order; a loop contributes both ends.
    pub fn ends_at(&self, v: usize) -> Vec<EdgeEnd> {
        let mut ends = Vec::new();
        for e in &self.edges {
            for end in 0..2u8 {
                if e.ends[end as usize] == v {
                    ends.push(EdgeEnd::new(e.id, end));
                }
            }
        }
        ends
    }

    /// Degree counting a loop twice.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|e| e.ends.iter().filter(|&&w| w == v).count())
            .sum()
    }

    pub fn is_connected(&self) -> bool {
        self.components_without(&[]) <= 1
    }

    /// Connected components after deleting the given vertices.
    fn components_without(&self, removed: &[usize]) -> usize {
        let mut uf = UnionFind::new(self.vertices.len());
        for e in &self.edges {
            if removed.contains(&e.ends[0]) || removed.contains(&e.ends[1]) {
                continue;
            }
            uf.union(e.ends[0], e.ends[1]);
        }
        uf.count() - removed.len()
    }

    /// No loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.edges.iter().all(|e| {
            let [a, b] = e.ends;
            a != b && seen.insert((a.min(b), a.max(b)))
        })
    }

    /// Brute-force vertex 3-connectivity: at least four vertices, and no set
    /// of at most two vertices disconnects the graph.
    pub fn is_3_connected(&self) -> bool {
        let n = self.vertices.len();
        if n < 4 || !self.is_connected() {
            return false;
        }
        for a in 0..n {
            if self.components_without(&[a]) > 1 {
                return false;
            }
            for b in a + 1..n {
                if self.components_without(&[a, b]) > 1 {
                    return false;
                }
            }
        }
        true
    }
}

/// Whether some vertex bijection maps every edge of `a` onto the edge of `b`
/// with the same label. Labels are fixed pointwise; only vertex names may
/// differ.
pub fn labeled_isomorphic(a: &LabeledGraph, b: &LabeledGraph) -> bool {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut pairs = Vec::with_capacity(a.edge_count());
    for ea in a.edges() {
        match b.edge(ea.id) {
            Some(eb) if ea.is_loop() == eb.is_loop() => pairs.push((ea.ends, eb.ends)),
            _ => return false,
        }
    }
    let n = a.vertex_count();
    let mut fwd = vec![usize::MAX; n];
    let mut back = vec![usize::MAX; n];
    extend_vertex_map(&pairs, 0, &mut fwd, &mut back)
}

fn extend_vertex_map(
    pairs: &[([usize; 2], [usize; 2])],
    i: usize,
    fwd: &mut [usize],
    back: &mut [usize],
) -> bool {
    let Some(&(ends_a, ends_b)) = pairs.get(i) else {
        // Unmatched vertices are isolated on both sides; any pairing works.
        return true;
    };
    for flip in [false, true] {
        let target = if flip { [ends_b[1], ends_b[0]] } else { ends_b };
        let mut assigned = Vec::new();
        let mut ok = true;
        for k in 0..2 {
            let (u, v) = (ends_a[k], target[k]);
            if fwd[u] == usize::MAX && back[v] == usize::MAX {
                fwd[u] = v;
                back[v] = u;
                assigned.push(u);
            } else if fwd[u] != v || back[v] != u {
                ok = false;
                break;
            }
        }
        if ok && extend_vertex_map(pairs, i + 1, fwd, back) {
            return true;
        }
        for u in assigned {
            back[fwd[u]] = usize::MAX;
            fwd[u] = usize::MAX;
        }
        if ends_b[0] == ends_b[1] {
            break;
        }
    }
    false
}

#[cfg(test)]
pub(crate) fn graph(n: usize, edges: &[(u32, usize, usize)]) -> LabeledGraph {
    LabeledGraph::new(
        (0..n).map(|i| format!("v{i}")).collect(),
        edges
            .iter()
            .map(|&(id, a, b)| LabeledEdge {
                id: EdgeId(id),
                ends: [a, b],
            })
            .collect(),
    )
    .unwrap()
}
