//! Combinatorial maps as 3-edge-colored flag graphs.
//!
//! A map on `4m` flags is given by three perfect matchings on the flags,
//! colored red, green and black. The map axioms are:
//!
//! 1. each color class is a perfect matching,
//! 2. red ∪ green is a disjoint union of 4-cycles,
//! 3. the flag graph is connected.
//!
//! Red and green may never pair the same two flags; black may coincide with
//! either. The alternating cycles of each two-color subgraph carry the
//! topology: red/black cycles are the vertices of the embedded graph,
//! red/green cycles (the quadrilaterals) are its edges, green/black cycles are
//! its faces.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::edgeset::EdgeId;
use crate::graph::{LabeledEdge, LabeledGraph};
use crate::unionfind::UnionFind;

/// Flags are dense indices `0..n`.
pub type Flag = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Color {
    Red,
    Green,
    Black,
}

impl Color {
    pub const ALL: [Color; 3] = [Color::Red, Color::Green, Color::Black];

    fn slot(self) -> usize {
        match self {
            Color::Red => 0,
            Color::Green => 1,
            Color::Black => 2,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Color::Red => 'R',
            Color::Green => 'G',
            Color::Black => 'B',
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Red => "red",
            Color::Green => "green",
            Color::Black => "black",
        })
    }
}

/// Two-color subgraphs whose alternating cycles are vertices, edges and faces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ColorPair {
    /// Vertices of the embedded graph.
    RedBlack,
    /// Edges (quadrilaterals).
    RedGreen,
    /// Faces, i.e. vertices of the geometric dual.
    GreenBlack,
}

impl ColorPair {
    pub fn colors(self) -> (Color, Color) {
        match self {
            ColorPair::RedBlack => (Color::Red, Color::Black),
            ColorPair::RedGreen => (Color::Red, Color::Green),
            ColorPair::GreenBlack => (Color::Green, Color::Black),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MapError {
    #[error("a map needs at least one flag")]
    NoFlags,
    #[error("{color} pairing mentions flag {flag}, outside 0..{n}")]
    FlagOutOfRange { color: Color, flag: Flag, n: usize },
    #[error("{color} pairing is not an involution: flag {flag} is matched twice")]
    NotInvolution { color: Color, flag: Flag },
    #[error("{color} pairing leaves flag {flag} fixed")]
    FixedPoint { color: Color, flag: Flag },
    #[error("red and green both pair flag {flag} with flag {partner}")]
    RedGreenParallel { flag: Flag, partner: Flag },
    #[error("the red/green cycle through flag {flag} has {size} flags, expected 4")]
    BadQuadrilateral { flag: Flag, size: usize },
    #[error("the flag graph has {components} connected components")]
    Disconnected { components: usize },
}

/// One red/green 4-cycle, i.e. one edge of the embedded graph.
///
/// `flags` is `[a, R(a), G(a), R(G(a))]` where `a` is the smallest flag of
/// the cycle. The red pairs are `{0,1}` and `{2,3}` of that array, the green
/// pairs `{0,2}` and `{1,3}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Quadrilateral {
    pub id: EdgeId,
    pub flags: [Flag; 4],
}

impl Quadrilateral {
    pub fn red_pairs(&self) -> [(Flag, Flag); 2] {
        let f = self.flags;
        [(f[0], f[1]), (f[2], f[3])]
    }

    pub fn green_pairs(&self) -> [(Flag, Flag); 2] {
        let f = self.flags;
        [(f[0], f[2]), (f[1], f[3])]
    }
}

/// A validated combinatorial map. Immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct CombinatorialMap {
    involutions: [Vec<Flag>; 3],
    quads: Vec<Quadrilateral>,
    edge_of: Vec<EdgeId>,
}

impl fmt::Debug for CombinatorialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CombinatorialMap")
            .field("flags", &self.flag_count())
            .field("red", &self.involutions[0])
            .field("green", &self.involutions[1])
            .field("black", &self.involutions[2])
            .finish()
    }
}

/// Validates three flag pairings on `0..n` and builds the map.
///
/// Errors name the first violated axiom, checked in the order: matchings,
/// red/green parallels, quadrilaterals, connectivity.
pub fn validate_map(
    n: usize,
    red: &[(Flag, Flag)],
    green: &[(Flag, Flag)],
    black: &[(Flag, Flag)],
) -> Result<CombinatorialMap, MapError> {
    if n == 0 {
        return Err(MapError::NoFlags);
    }
    let red = matching(n, Color::Red, red)?;
    let green = matching(n, Color::Green, green)?;
    let black = matching(n, Color::Black, black)?;
    CombinatorialMap::from_involutions([red, green, black])
}

fn matching(n: usize, color: Color, pairs: &[(Flag, Flag)]) -> Result<Vec<Flag>, MapError> {
    let mut partner = vec![usize::MAX; n];
    for &(a, b) in pairs {
        for flag in [a, b] {
            if flag >= n {
                return Err(MapError::FlagOutOfRange { color, flag, n });
            }
        }
        if a == b {
            return Err(MapError::FixedPoint { color, flag: a });
        }
        for flag in [a, b] {
            if partner[flag] != usize::MAX {
                return Err(MapError::NotInvolution { color, flag });
            }
        }
        partner[a] = b;
        partner[b] = a;
    }
    if let Some(flag) = partner.iter().position(|&p| p == usize::MAX) {
        return Err(MapError::FixedPoint { color, flag });
    }
    Ok(partner)
}

impl CombinatorialMap {
    /// Builds a map from partner arrays (`inv[c][x]` is the `c`-partner of
    /// flag `x`), in red, green, black order.
    pub fn from_involutions(involutions: [Vec<Flag>; 3]) -> Result<Self, MapError> {
        let n = involutions[0].len();
        if n == 0 {
            return Err(MapError::NoFlags);
        }
        for (color, inv) in Color::ALL.into_iter().zip(&involutions) {
            for x in 0..n {
                let y = *inv.get(x).ok_or(MapError::FixedPoint { color, flag: x })?;
                if y >= n {
                    return Err(MapError::FlagOutOfRange { color, flag: y, n });
                }
                if y == x {
                    return Err(MapError::FixedPoint { color, flag: x });
                }
                if inv.get(y) != Some(&x) {
                    return Err(MapError::NotInvolution { color, flag: y });
                }
            }
            if inv.len() != n {
                return Err(MapError::FlagOutOfRange {
                    color,
                    flag: inv.len() - 1,
                    n,
                });
            }
        }
        let [red, green, _] = &involutions;
        if let Some(x) = (0..n).find(|&x| red[x] == green[x]) {
            return Err(MapError::RedGreenParallel {
                flag: x,
                partner: red[x],
            });
        }

        // Red/green orbits, numbered by their smallest flag.
        let mut edge_of = vec![EdgeId(0); n];
        let mut quads = Vec::with_capacity(n / 4);
        for a in 0..n {
            if edge_of[a].0 != 0 {
                continue;
            }
            let size = alternating_cycle(red, green, a).len();
            if size != 4 {
                return Err(MapError::BadQuadrilateral { flag: a, size });
            }
            let id = EdgeId::from_index(quads.len());
            let flags = [a, red[a], green[a], red[green[a]]];
            for &f in &flags {
                edge_of[f] = id;
            }
            quads.push(Quadrilateral { id, flags });
        }

        let map = CombinatorialMap {
            involutions,
            quads,
            edge_of,
        };
        let components = map.flag_components();
        if components != 1 {
            return Err(MapError::Disconnected { components });
        }
        debug_assert!(map.is_bridgeless(), "a valid flag graph is edge 2-connected");
        Ok(map)
    }

    pub fn flag_count(&self) -> usize {
        self.edge_of.len()
    }

    /// Number of edges of the embedded graph, `n / 4`.
    pub fn edge_count(&self) -> usize {
        self.quads.len()
    }

    #[inline]
    pub fn partner(&self, color: Color, flag: Flag) -> Flag {
        self.involutions[color.slot()][flag]
    }

    pub fn involution(&self, color: Color) -> &[Flag] {
        &self.involutions[color.slot()]
    }

    pub fn quadrilaterals(&self) -> &[Quadrilateral] {
        &self.quads
    }

    pub fn quadrilateral(&self, id: EdgeId) -> &Quadrilateral {
        &self.quads[id.index()]
    }

    /// The edge (quadrilateral) a flag belongs to.
    #[inline]
    pub fn edge_of(&self, flag: Flag) -> EdgeId {
        self.edge_of[flag]
    }

    /// Each edge of the flag graph once, as `(a, b, color)` with `a < b`.
    pub fn flag_graph_edges(&self) -> impl Iterator<Item = (Flag, Flag, Color)> + '_ {
        Color::ALL.into_iter().flat_map(move |c| {
            let inv = self.involution(c);
            (0..self.flag_count())
                .filter(move |&x| x < inv[x])
                .map(move |x| (x, inv[x], c))
        })
    }

    /// Alternating cycles of a two-color subgraph, each starting at its
    /// smallest flag and stepping first along the pair's first color. Cycles
    /// are ordered by smallest flag.
    pub fn orbit_cycles(&self, pair: ColorPair) -> Vec<Vec<Flag>> {
        let (c1, c2) = pair.colors();
        let (p1, p2) = (self.involution(c1), self.involution(c2));
        let mut seen = vec![false; self.flag_count()];
        let mut cycles = Vec::new();
        for a in 0..self.flag_count() {
            if seen[a] {
                continue;
            }
            let cycle = alternating_cycle(p1, p2, a);
            for &f in &cycle {
                seen[f] = true;
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Index of the `pair`-cycle containing each flag, numbered as in
    /// [`orbit_cycles`](Self::orbit_cycles).
    pub fn cycle_index(&self, pair: ColorPair) -> Vec<usize> {
        let mut index = vec![0; self.flag_count()];
        for (i, cycle) in self.orbit_cycles(pair).iter().enumerate() {
            for &f in cycle {
                index[f] = i;
            }
        }
        index
    }

    pub fn vertex_count(&self) -> usize {
        self.orbit_cycles(ColorPair::RedBlack).len()
    }

    pub fn face_count(&self) -> usize {
        self.orbit_cycles(ColorPair::GreenBlack).len()
    }

    /// The embedded graph `(V, E)`: vertices are red/black cycles, and each
    /// quadrilateral joins the cycles through its two red pairs.
    ///
    /// End 0 of edge `e` is the vertex through `flags[0]` of its
    /// quadrilateral, end 1 the vertex through `flags[2]`.
    pub fn underlying_graph(&self) -> LabeledGraph {
        self.incidence_graph(ColorPair::RedBlack, 'v', Color::Green)
    }

    /// The geometric dual `(V*, E)`: vertices are green/black cycles, and each
    /// quadrilateral joins the cycles through its two green pairs.
    ///
    /// End 0 of edge `e` is the face through `flags[0]`, end 1 the face
    /// through `flags[1]`.
    pub fn dual_graph(&self) -> LabeledGraph {
        self.incidence_graph(ColorPair::GreenBlack, 'f', Color::Red)
    }

    fn incidence_graph(&self, pair: ColorPair, prefix: char, across: Color) -> LabeledGraph {
        let index = self.cycle_index(pair);
        let count = index.iter().max().map_or(0, |m| m + 1);
        let edges = self
            .quads
            .iter()
            .map(|q| {
                let a = q.flags[0];
                LabeledEdge {
                    id: q.id,
                    ends: [index[a], index[self.partner(across, a)]],
                }
            })
            .collect();
        LabeledGraph::new((0..count).map(|i| format!("{prefix}{i}")).collect(), edges)
            .expect("incidence graph of a valid map is well formed")
    }

    /// `|V| − |E| + |V*|`.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    /// Orientable exactly when the flag graph is bipartite.
    pub fn is_orientable(&self) -> bool {
        let n = self.flag_count();
        let mut side = vec![u8::MAX; n];
        let mut queue = VecDeque::from([0]);
        side[0] = 0;
        while let Some(x) = queue.pop_front() {
            for c in Color::ALL {
                let y = self.partner(c, x);
                if side[y] == u8::MAX {
                    side[y] = 1 - side[x];
                    queue.push_back(y);
                } else if side[y] == side[x] {
                    return false;
                }
            }
        }
        true
    }

    fn flag_components(&self) -> usize {
        let mut uf = UnionFind::new(self.flag_count());
        for (a, b, _) in self.flag_graph_edges() {
            uf.union(a, b);
        }
        uf.count()
    }

    /// Whether deleting any single edge of the flag graph leaves it
    /// connected. Quadratic; meant for checking small maps.
    pub fn is_bridgeless(&self) -> bool {
        let edges: Vec<_> = self.flag_graph_edges().collect();
        (0..edges.len()).all(|skip| {
            let mut uf = UnionFind::new(self.flag_count());
            for (i, &(a, b, _)) in edges.iter().enumerate() {
                if i != skip {
                    uf.union(a, b);
                }
            }
            uf.count() == 1
        })
    }
}

/// The cycle through `start` alternating `p1`, `p2`, `p1`, …
fn alternating_cycle(p1: &[Flag], p2: &[Flag], start: Flag) -> Vec<Flag> {
    let mut cycle = vec![start];
    let mut x = start;
    loop {
        cycle.push(p1[x]);
        x = p2[p1[x]];
        if x == start {
            return cycle;
        }
        cycle.push(x);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    // Flags a, b, c, d = 0, 1, 2, 3 with R = {a-b, c-d}, G = {b-c, d-a}.
    // The three perfect matchings on four flags are R itself, G itself and
    // {a-c, b-d}; black = G gives the loop map, black = R the bridge map and
    // the remaining one the cross-cap.
    const R: [(usize, usize); 2] = [(0, 1), (2, 3)];
    const G: [(usize, usize); 2] = [(1, 2), (3, 0)];

    fn counts(map: &CombinatorialMap) -> (usize, usize, usize) {
        (
            map.orbit_cycles(ColorPair::RedBlack).len(),
            map.orbit_cycles(ColorPair::RedGreen).len(),
            map.orbit_cycles(ColorPair::GreenBlack).len(),
        )
    }

    #[test]
    fn four_flag_maps() {
        let looped = validate_map(4, &R, &G, &G).unwrap();
        assert_eq!(counts(&looped), (1, 1, 2));
        assert_eq!(looped.euler_characteristic(), 2);
        assert!(looped.is_orientable());

        let bridge = validate_map(4, &R, &G, &R).unwrap();
        assert_eq!(counts(&bridge), (2, 1, 1));
        assert_eq!(bridge.euler_characteristic(), 2);
        assert!(bridge.is_orientable());

        let crosscap = validate_map(4, &R, &G, &[(0, 2), (1, 3)]).unwrap();
        assert_eq!(counts(&crosscap), (1, 1, 1));
        assert_eq!(crosscap.euler_characteristic(), 1);
        assert!(!crosscap.is_orientable());
    }

    #[test]
    fn single_quadrilateral() {
        let map = validate_map(4, &R, &G, &G).unwrap();
        assert_eq!(map.quadrilaterals().len(), 1);
        assert_eq!(map.quadrilaterals()[0].flags, [0, 1, 3, 2]);
        let mut flags = map.quadrilaterals()[0].flags;
        flags.sort();
        assert_eq!(flags, [0, 1, 2, 3]);
    }

    #[test]
    fn red_green_parallel_is_rejected() {
        let err = validate_map(4, &R, &R, &G).unwrap_err();
        assert_eq!(err, MapError::RedGreenParallel { flag: 0, partner: 1 });
    }

    #[test]
    fn disjoint_union_is_disconnected() {
        let shift = |p: &[(usize, usize)]| -> Vec<(usize, usize)> {
            p.iter().chain(p).enumerate().map(|(i, &(a, b))| if i < p.len() { (a, b) } else { (a + 4, b + 4) }).collect()
        };
        let err = validate_map(8, &shift(&R), &shift(&G), &shift(&G)).unwrap_err();
        assert_eq!(err, MapError::Disconnected { components: 2 });
    }

    #[test]
    fn matching_errors() {
        assert_eq!(
            validate_map(4, &[(0, 1), (1, 2)], &G, &G).unwrap_err(),
            MapError::NotInvolution { color: Color::Red, flag: 1 }
        );
        assert_eq!(
            validate_map(4, &[(0, 1)], &G, &G).unwrap_err(),
            MapError::FixedPoint { color: Color::Red, flag: 2 }
        );
        assert_eq!(
            validate_map(4, &R, &G, &[(0, 0), (1, 2)]).unwrap_err(),
            MapError::FixedPoint { color: Color::Black, flag: 0 }
        );
        assert_eq!(
            validate_map(4, &R, &G, &[(0, 7), (1, 2)]).unwrap_err(),
            MapError::FlagOutOfRange { color: Color::Black, flag: 7, n: 4 }
        );
        // Odd flag count: some flag is always left unmatched.
        assert!(matches!(
            validate_map(5, &R, &G, &G).unwrap_err(),
            MapError::FixedPoint { flag: 4, .. }
        ));
        assert_eq!(validate_map(0, &[], &[], &[]).unwrap_err(), MapError::NoFlags);
    }

    #[test]
    fn hexagon_is_not_a_quadrilateral() {
        // R ∪ G forms one 8-cycle.
        let r = [(0, 1), (2, 3), (4, 5), (6, 7)];
        let g = [(1, 2), (3, 4), (5, 6), (7, 0)];
        assert_eq!(
            validate_map(8, &r, &g, &g).unwrap_err(),
            MapError::BadQuadrilateral { flag: 0, size: 8 }
        );
    }

    #[test]
    fn incidence_graphs_of_small_maps() {
        let bridge = validate_map(4, &R, &G, &R).unwrap();
        let g = bridge.underlying_graph();
        assert_eq!(g.vertex_count(), 2);
        assert!(!g.edges()[0].is_loop());
        let d = bridge.dual_graph();
        assert_eq!(d.vertex_count(), 1);
        assert!(d.edges()[0].is_loop());

        let looped = validate_map(4, &R, &G, &G).unwrap();
        assert!(looped.underlying_graph().edges()[0].is_loop());
        assert_eq!(looped.dual_graph().vertex_count(), 2);
        assert!(!looped.dual_graph().edges()[0].is_loop());
    }

    #[test]
    fn fixture_shapes() {
        let torus = fixtures::get("torus1v").unwrap();
        assert_eq!(torus.flag_count(), 8);
        assert_eq!(torus.edge_count(), 2);
        assert_eq!(torus.euler_characteristic(), 0);
        assert!(torus.is_orientable());

        let k5 = fixtures::get("k5torus").unwrap();
        assert_eq!(k5.edge_count(), 10);
        assert_eq!(k5.euler_characteristic(), 0);
        let g = k5.underlying_graph();
        let d = k5.dual_graph();
        for graph in [&g, &d] {
            assert_eq!(graph.vertex_count(), 5);
            assert!(graph.is_simple());
            assert_eq!(graph.edge_count(), 10);
        }
    }

    #[test]
    fn every_fixture_is_cubic_and_bridgeless() {
        for (name, map) in fixtures::all() {
            let mut degree = vec![0; map.flag_count()];
            for (a, b, _) in map.flag_graph_edges() {
                degree[a] += 1;
                degree[b] += 1;
            }
            assert!(degree.iter().all(|&d| d == 3), "{name}");
            assert!(map.is_bridgeless(), "{name}");
            assert_eq!(map.orbit_cycles(ColorPair::RedGreen).len(), map.flag_count() / 4);
        }
    }

    #[test]
    fn sphere_fixtures_have_characteristic_two() {
        for name in ["loop", "bridge", "theta", "k4sphere"] {
            assert_eq!(fixtures::get(name).unwrap().euler_characteristic(), 2, "{name}");
        }
        for name in ["crosscap", "torus1v", "k5torus"] {
            assert!(fixtures::get(name).unwrap().euler_characteristic() < 2, "{name}");
        }
    }
}
