//! Rebuilding a map from its graph and geometric dual.
//!
//! Two edges at a vertex `v` follow each other in the rotation at `v` exactly
//! when they border a common face, i.e. share an endpoint in the dual. When
//! both graphs are simple and 3-connected this pins down every rotation, and
//! the face labels on the corners then fix how the two ends of each edge are
//! glued. Whenever the labels leave a choice open the functions here report
//! it instead of picking one.

use thiserror::Error;

use crate::builder::{flag_of, Side};
use crate::edgeset::EdgeId;
use crate::graph::{labeled_isomorphic, EdgeEnd, LabeledGraph};
use crate::map::{Color, ColorPair, CombinatorialMap, MapError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReconstructError {
    #[error("graph and dual must carry the same edge labels, numbered 1..=m")]
    LabelMismatch,
    #[error("corners at vertex {vertex} are ambiguous: {reason}")]
    AmbiguousCorners { vertex: usize, reason: String },
    #[error("edge {edge} borders the same face on both sides at one end")]
    AmbiguousGluing { edge: EdgeId },
    #[error("the faces on the two ends of edge {edge} do not match")]
    UnmatchedGluing { edge: EdgeId },
    #[error("rotation system does not fit the graph: {0}")]
    RotationMismatch(String),
    #[error("reconstructed flags are not a valid map: {0}")]
    ValidationFailed(#[from] MapError),
    #[error("reconstructed map does not reproduce the given graph and dual")]
    ResultMismatch,
}

/// Cyclic order of edge-ends at each vertex, with the face sitting in each
/// corner.
///
/// `corner_faces[v][i]` is the dual vertex between `rotations[v][i]` and
/// `rotations[v][i + 1]` (cyclically).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationSystem {
    pub rotations: Vec<Vec<EdgeEnd>>,
    pub corner_faces: Vec<Vec<usize>>,
}

impl RotationSystem {
    /// The rotation system a map carries, read off its red/black cycles.
    /// Vertex, end and face numbering follow
    /// [`CombinatorialMap::underlying_graph`] and
    /// [`CombinatorialMap::dual_graph`].
    pub fn of_map(map: &CombinatorialMap) -> Self {
        let face = map.cycle_index(ColorPair::GreenBlack);
        let end_of = |x: usize| {
            let q = map.quadrilateral(map.edge_of(x));
            let end = u8::from(!(x == q.flags[0] || x == q.flags[1]));
            EdgeEnd::new(q.id, end)
        };
        let mut rotations = Vec::new();
        let mut corner_faces = Vec::new();
        for cycle in map.orbit_cycles(ColorPair::RedBlack) {
            // cycle = [x0, R x0, B R x0, …]: red steps are ends, black steps corners.
            let ends = cycle.chunks(2).map(|p| end_of(p[0])).collect();
            let corners = cycle.chunks(2).map(|p| face[p[1]]).collect();
            rotations.push(ends);
            corner_faces.push(corners);
        }
        RotationSystem {
            rotations,
            corner_faces,
        }
    }

    /// Same cyclic orders, each up to rotation and reflection, with the same
    /// corner faces.
    pub fn equivalent(&self, other: &RotationSystem) -> bool {
        self.rotations.len() == other.rotations.len()
            && (0..self.rotations.len()).all(|v| {
                same_cycle(
                    &self.corner_sequence(v),
                    &other.corner_sequence(v),
                )
            })
    }

    /// `[end0, face0, end1, face1, …]` encoded as integers for comparison.
    fn corner_sequence(&self, v: usize) -> Vec<(u8, u64)> {
        self.rotations[v]
            .iter()
            .zip(&self.corner_faces[v])
            .flat_map(|(h, &f)| [(0, (h.edge.0 as u64) << 1 | h.end as u64), (1, f as u64)])
            .collect()
    }

    /// Number of corners, summed over vertices.
    pub fn corner_count(&self) -> usize {
        self.corner_faces.iter().map(Vec::len).sum()
    }
}

fn same_cycle<T: PartialEq + Clone>(a: &[T], b: &[T]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    let n = a.len();
    let mut reversed = b.to_vec();
    reversed.reverse();
    // Reversing [e0, f0, e1, f1, …] gives […, f1, e1, f0, e0]; shift by one so
    // ends stay on even positions.
    reversed.rotate_right(1);
    [b.to_vec(), reversed]
        .iter()
        .any(|c| (0..n).step_by(2).any(|s| (0..n).all(|i| a[i] == c[(i + s) % n])))
}

/// Dual endpoints of every edge, as a sorted deduplicated list.
fn faces_of(gstar: &LabeledGraph) -> Vec<Vec<usize>> {
    gstar
        .edges()
        .iter()
        .map(|e| {
            let mut f = e.ends.to_vec();
            f.sort();
            f.dedup();
            f
        })
        .collect()
}

fn check_labels(g: &LabeledGraph, gstar: &LabeledGraph) -> Result<(), ReconstructError> {
    if g.edge_count() != gstar.edge_count()
        || g.edge_count() == 0
        || !g.has_dense_labels()
        || !gstar.has_dense_labels()
    {
        return Err(ReconstructError::LabelMismatch);
    }
    Ok(())
}

/// Recovers the rotation at every vertex of `g` from co-incidence in
/// `gstar`.
///
/// At each vertex the corner graph joins two edge-ends when their edges share
/// exactly one dual vertex; that vertex labels the corner. The corner graph
/// must be a single cycle through all ends at the vertex.
pub fn recover_rotations(
    g: &LabeledGraph,
    gstar: &LabeledGraph,
) -> Result<RotationSystem, ReconstructError> {
    check_labels(g, gstar)?;
    let faces = faces_of(gstar);
    let mut rotations = Vec::with_capacity(g.vertex_count());
    let mut corner_faces = Vec::with_capacity(g.vertex_count());
    for v in 0..g.vertex_count() {
        let ambiguous = |reason: String| ReconstructError::AmbiguousCorners { vertex: v, reason };
        let ends = g.ends_at(v);
        if ends.is_empty() {
            return Err(ambiguous("isolated vertex".into()));
        }
        // Corner graph as adjacency lists of (end index, face).
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); ends.len()];
        for i in 0..ends.len() {
            for j in i + 1..ends.len() {
                let (e1, e2) = (ends[i].edge, ends[j].edge);
                if e1 == e2 {
                    return Err(ambiguous(format!("loop {e1} has two indistinguishable ends")));
                }
                let common: Vec<usize> = faces[e1.index()]
                    .iter()
                    .filter(|f| faces[e2.index()].contains(f))
                    .copied()
                    .collect();
                match common.as_slice() {
                    [] => {}
                    [f] => {
                        adj[i].push((j, *f));
                        adj[j].push((i, *f));
                    }
                    _ => {
                        return Err(ambiguous(format!(
                            "edges {e1} and {e2} share {} faces",
                            common.len()
                        )))
                    }
                }
            }
        }
        if let Some(i) = adj.iter().position(|a| a.len() != 2) {
            return Err(ambiguous(format!(
                "end {} lies in {} corners, expected 2",
                ends[i],
                adj[i].len()
            )));
        }
        // Walk from the first end toward its smaller neighbour.
        let mut order = vec![0usize];
        let mut faces_here = Vec::with_capacity(ends.len());
        let mut cur = 0usize;
        let mut step = *adj[0].iter().min().unwrap();
        loop {
            faces_here.push(step.1);
            let prev = std::mem::replace(&mut cur, step.0);
            if cur == 0 {
                break;
            }
            order.push(cur);
            step = *adj[cur].iter().find(|&&(n, _)| n != prev).unwrap();
        }
        if order.len() != ends.len() {
            return Err(ambiguous(format!(
                "corner graph splits into several cycles ({} of {} ends on the first)",
                order.len(),
                ends.len()
            )));
        }
        debug_assert_eq!(faces_here.len(), g.degree(v));
        rotations.push(order.iter().map(|&i| ends[i]).collect());
        corner_faces.push(faces_here);
    }
    Ok(RotationSystem {
        rotations,
        corner_faces,
    })
}

/// Builds the flag graph from a graph, its dual and a rotation system.
///
/// Edge `e` gets flags `4(e−1) .. 4e`, one per (end, side). Red joins the two
/// sides of an end, black joins the two flags of a corner, and green joins
/// the flags on opposite ends of an edge that face the same dual vertex.
pub fn build_map(
    g: &LabeledGraph,
    gstar: &LabeledGraph,
    rot: &RotationSystem,
) -> Result<CombinatorialMap, ReconstructError> {
    check_labels(g, gstar)?;
    let mismatch = |s: String| ReconstructError::RotationMismatch(s);
    if rot.rotations.len() != g.vertex_count() || rot.corner_faces.len() != g.vertex_count() {
        return Err(mismatch("one rotation per vertex is required".into()));
    }
    let faces = faces_of(gstar);
    let m = g.edge_count();
    let n = 4 * m;
    // Face seen by each flag.
    let mut flag_face = vec![usize::MAX; n];
    let mut red = vec![usize::MAX; n];
    let mut black = vec![usize::MAX; n];
    for (v, (ends, corners)) in rot.rotations.iter().zip(&rot.corner_faces).enumerate() {
        let mut expected = g.ends_at(v);
        let mut listed = ends.clone();
        expected.sort();
        listed.sort();
        if expected != listed || corners.len() != ends.len() {
            return Err(mismatch(format!("rotation at vertex {v} does not list its edge-ends")));
        }
        let d = ends.len();
        for i in 0..d {
            let (h, next) = (ends[i], ends[(i + 1) % d]);
            let face = corners[i];
            for e in [h.edge, next.edge] {
                if !faces[e.index()].contains(&face) {
                    return Err(mismatch(format!("corner face {face} is not incident to edge {e}")));
                }
            }
            let (a, b) = (flag_of(h, Side::Next), flag_of(next, Side::Prev));
            black[a] = b;
            black[b] = a;
            flag_face[a] = face;
            flag_face[b] = face;
            let (p, q) = (flag_of(h, Side::Prev), flag_of(h, Side::Next));
            red[p] = q;
            red[q] = p;
        }
    }
    let mut green = vec![usize::MAX; n];
    for i in 0..m {
        let edge = EdgeId::from_index(i);
        let sides = |end: u8| {
            let h = EdgeEnd::new(edge, end);
            [Side::Prev, Side::Next].map(|s| (flag_of(h, s), flag_face[flag_of(h, s)]))
        };
        let (near, far) = (sides(0), sides(1));
        if near[0].1 == near[1].1 || far[0].1 == far[1].1 {
            return Err(ReconstructError::AmbiguousGluing { edge });
        }
        for (a, face) in near {
            let (b, _) = *far
                .iter()
                .find(|&&(_, f)| f == face)
                .ok_or(ReconstructError::UnmatchedGluing { edge })?;
            green[a] = b;
            green[b] = a;
        }
    }
    let map = CombinatorialMap::from_involutions([red, green, black])?;
    if !labeled_isomorphic(&map.underlying_graph(), g) || !labeled_isomorphic(&map.dual_graph(), gstar) {
        return Err(ReconstructError::ResultMismatch);
    }
    Ok(map)
}

/// Recover rotations, then build. The whole constructive path from `(G, G*)`
/// back to a map.
pub fn reconstruct(g: &LabeledGraph, gstar: &LabeledGraph) -> Result<CombinatorialMap, ReconstructError> {
    let rot = recover_rotations(g, gstar)?;
    build_map(g, gstar, &rot)
}

/// Rebuilds `map` from its own graph and dual and compares.
pub fn roundtrip_check(map: &CombinatorialMap) -> Result<bool, ReconstructError> {
    let rebuilt = reconstruct(&map.underlying_graph(), &map.dual_graph())?;
    Ok(maps_isomorphic(&rebuilt, map))
}

/// Whether a flag bijection exists that preserves all three colors and maps
/// each quadrilateral onto the one with the same label.
///
/// The flag graph is connected and each color is a function, so the image of
/// one flag determines the rest; only the four flags of the matching
/// quadrilateral are candidates.
pub fn maps_isomorphic(a: &CombinatorialMap, b: &CombinatorialMap) -> bool {
    if a.flag_count() != b.flag_count() {
        return false;
    }
    let n = a.flag_count();
    b.quadrilateral(a.edge_of(0)).flags.iter().any(|&target| {
        let mut image = vec![usize::MAX; n];
        let mut used = vec![false; n];
        image[0] = target;
        used[target] = true;
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            for c in Color::ALL {
                let (y, ty) = (a.partner(c, x), b.partner(c, image[x]));
                if image[y] == usize::MAX {
                    if used[ty] || a.edge_of(y) != b.edge_of(ty) {
                        return false;
                    }
                    image[y] = ty;
                    used[ty] = true;
                    stack.push(y);
                } else if image[y] != ty {
                    return false;
                }
            }
        }
        true
    })
}
