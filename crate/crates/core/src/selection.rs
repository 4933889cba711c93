//! Fully black 2-regular subgraphs of a flag graph.
//!
//! A 2-regular subgraph that contains every black edge meets each red/green
//! quadrilateral in one monochromatic pair, so it is the same thing as a
//! [`Selection`]: a choice of the green pair or the red pair for every edge.
//!
//! Feasible sets always record the **green**-selected quadrilaterals. The
//! red-selected view is the complementary family, available through
//! [`FamilyColor::Red`].

use rayon::prelude::*;
use thiserror::Error;

use crate::edgeset::{EdgeId, EdgeSet, SetFamily, MAX_EDGE_ID};
use crate::map::{Color, CombinatorialMap, Flag};
use crate::unionfind::UnionFind;

/// Default bound on `m` for the `2^m` selection enumerations.
pub const MAX_ENUM_EDGES: usize = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumError {
    #[error("map has {edges} edges; exhaustive enumeration is limited to {limit}")]
    GroundSetTooLarge { edges: usize, limit: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pair {
    Green,
    Red,
}

impl Pair {
    pub fn swapped(self) -> Pair {
        match self {
            Pair::Green => Pair::Red,
            Pair::Red => Pair::Green,
        }
    }
}

/// Which of the two delta-matroids of a map.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// Fully black Hamiltonian cycles.
    Gamma,
    /// Fully black 2-regular `K` with `K ∪ R` and `K ∪ G` connected.
    K,
}

/// Which pair a feasible set records.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum FamilyColor {
    #[default]
    Green,
    Red,
}

/// A choice of pair for every quadrilateral, indexed by edge label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Selection(Vec<Pair>);

impl Selection {
    pub fn uniform(m: usize, pair: Pair) -> Self {
        Selection(vec![pair; m])
    }

    /// Green on exactly the edges of `green`.
    pub fn from_green_set(m: usize, green: EdgeSet) -> Self {
        Selection(
            (0..m)
                .map(|i| {
                    if green.contains(EdgeId::from_index(i)) {
                        Pair::Green
                    } else {
                        Pair::Red
                    }
                })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn pair(&self, e: EdgeId) -> Pair {
        self.0[e.index()]
    }

    pub fn set(&mut self, e: EdgeId, pair: Pair) {
        self.0[e.index()] = pair;
    }

    pub fn swap(&mut self, e: EdgeId) {
        let p = &mut self.0[e.index()];
        *p = p.swapped();
    }

    pub fn green_set(&self) -> EdgeSet {
        self.edges_with(Pair::Green)
    }

    pub fn red_set(&self) -> EdgeSet {
        self.edges_with(Pair::Red)
    }

    fn edges_with(&self, pair: Pair) -> EdgeSet {
        self.0
            .iter()
            .enumerate()
            .filter(|&(_, &p)| p == pair)
            .map(|(i, _)| EdgeId::from_index(i))
            .collect()
    }
}

/// Edges of the fully black subgraph a selection picks out.
pub fn selection_subgraph(map: &CombinatorialMap, sel: &Selection) -> Vec<(Flag, Flag, Color)> {
    assert_eq!(sel.len(), map.edge_count(), "selection must cover every edge");
    let mut edges: Vec<_> = map
        .flag_graph_edges()
        .filter(|&(_, _, c)| c == Color::Black)
        .collect();
    for q in map.quadrilaterals() {
        let (pairs, color) = match sel.pair(q.id) {
            Pair::Green => (q.green_pairs(), Color::Green),
            Pair::Red => (q.red_pairs(), Color::Red),
        };
        edges.extend(pairs.iter().map(|&(a, b)| (a.min(b), a.max(b), color)));
    }
    edges
}

/// Connected components of the selection subgraph.
pub fn component_count(map: &CombinatorialMap, sel: &Selection) -> usize {
    selection_components(map, sel).count()
}

fn selection_components(map: &CombinatorialMap, sel: &Selection) -> UnionFind {
    let mut uf = black_components(map);
    for q in map.quadrilaterals() {
        let pairs = match sel.pair(q.id) {
            Pair::Green => q.green_pairs(),
            Pair::Red => q.red_pairs(),
        };
        for (a, b) in pairs {
            uf.union(a, b);
        }
    }
    uf
}

fn black_components(map: &CombinatorialMap) -> UnionFind {
    let mut uf = UnionFind::new(map.flag_count());
    let black = map.involution(Color::Black);
    for (x, &y) in black.iter().enumerate() {
        if x < y {
            uf.union(x, y);
        }
    }
    uf
}

pub fn is_fully_black_hamiltonian(map: &CombinatorialMap, sel: &Selection) -> bool {
    component_count(map, sel) == 1
}

/// Quadrilateral pairs laid out for the enumeration loops.
struct QuadPairs {
    green: Vec<[(Flag, Flag); 2]>,
    red: Vec<[(Flag, Flag); 2]>,
}

impl QuadPairs {
    fn of(map: &CombinatorialMap) -> Self {
        QuadPairs {
            green: map.quadrilaterals().iter().map(|q| q.green_pairs()).collect(),
            red: map.quadrilaterals().iter().map(|q| q.red_pairs()).collect(),
        }
    }
}

fn guard(map: &CombinatorialMap, limit: usize) -> Result<usize, EnumError> {
    let m = map.edge_count();
    let limit = limit.min(MAX_EDGE_ID as usize - 1);
    if m > limit {
        return Err(EnumError::GroundSetTooLarge { edges: m, limit });
    }
    Ok(m)
}

/// Runs `keep` on every selection mask (bit `i` set = edge `i + 1` green) and
/// collects the accepted masks as a family over `{1, …, m}`.
fn enumerate<F>(map: &CombinatorialMap, limit: usize, keep: F) -> Result<SetFamily, EnumError>
where
    F: Fn(u64) -> bool + Sync,
{
    let m = guard(map, limit)?;
    let members: Vec<EdgeSet> = (0..1u64 << m)
        .into_par_iter()
        .filter(|&mask| keep(mask))
        .map(EdgeSet::from_bits)
        .collect();
    Ok(SetFamily::new(EdgeSet::full(m), members))
}

/// Feasible sets of the Hamiltonian delta-matroid: the green-selected edges
/// of every fully black Hamiltonian cycle.
pub fn enumerate_feasible_gamma(map: &CombinatorialMap) -> Result<SetFamily, EnumError> {
    enumerate_feasible_gamma_with_limit(map, MAX_ENUM_EDGES)
}

pub fn enumerate_feasible_gamma_with_limit(
    map: &CombinatorialMap,
    limit: usize,
) -> Result<SetFamily, EnumError> {
    let quads = QuadPairs::of(map);
    let base = black_components(map);
    enumerate(map, limit, |mask| {
        let mut uf = base.clone();
        for i in 0..quads.green.len() {
            let pairs = if mask >> i & 1 == 1 { &quads.green[i] } else { &quads.red[i] };
            for &(a, b) in pairs {
                uf.union(a, b);
            }
        }
        uf.count() == 1
    })
}

/// Feasible sets of the 2-regular delta-matroid: green-selected edges of
/// every selection `K` such that `K ∪ R` and `K ∪ G` are both connected.
pub fn enumerate_feasible_k(map: &CombinatorialMap) -> Result<SetFamily, EnumError> {
    enumerate_feasible_k_with_limit(map, MAX_ENUM_EDGES)
}

pub fn enumerate_feasible_k_with_limit(
    map: &CombinatorialMap,
    limit: usize,
) -> Result<SetFamily, EnumError> {
    let quads = QuadPairs::of(map);
    let base = black_components(map);
    // K ∪ R only gains the green pairs of green-selected edges over B ∪ R;
    // K ∪ G only gains the red pairs of red-selected edges over B ∪ G.
    let mut with_red = base.clone();
    let mut with_green = base;
    for i in 0..quads.green.len() {
        for &(a, b) in &quads.red[i] {
            with_red.union(a, b);
        }
        for &(a, b) in &quads.green[i] {
            with_green.union(a, b);
        }
    }
    enumerate(map, limit, |mask| {
        let mut kr = with_red.clone();
        let mut kg = with_green.clone();
        for i in 0..quads.green.len() {
            if mask >> i & 1 == 1 {
                for &(a, b) in &quads.green[i] {
                    kr.union(a, b);
                }
            } else {
                for &(a, b) in &quads.red[i] {
                    kg.union(a, b);
                }
            }
        }
        kr.count() == 1 && kg.count() == 1
    })
}

/// Feasible family of either variant, recorded by either pair color.
pub fn feasible_family(
    map: &CombinatorialMap,
    variant: Variant,
    color: FamilyColor,
    limit: usize,
) -> Result<SetFamily, EnumError> {
    let family = match variant {
        Variant::Gamma => enumerate_feasible_gamma_with_limit(map, limit)?,
        Variant::K => enumerate_feasible_k_with_limit(map, limit)?,
    };
    Ok(match color {
        FamilyColor::Green => family,
        FamilyColor::Red => family.complemented(),
    })
}

/// Outcome of the component-merging search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwapSearch {
    pub selection: Selection,
    /// Components of the starting all-green subgraph, i.e. the face count.
    pub initial_components: usize,
    pub swaps: usize,
}

/// A fully black Hamiltonian cycle, found by merging components.
pub fn find_hamiltonian(map: &CombinatorialMap) -> Selection {
    find_hamiltonian_traced(map).selection
}

/// Starts from the all-green selection and, while the subgraph has more than
/// one component, swaps the first quadrilateral (in label order) whose two
/// chosen edges lie in different components. Each swap joins exactly two
/// components, so the search makes `initial_components − 1` swaps.
pub fn find_hamiltonian_traced(map: &CombinatorialMap) -> SwapSearch {
    let mut sel = Selection::uniform(map.edge_count(), Pair::Green);
    let initial_components = component_count(map, &sel);
    let mut swaps = 0;
    loop {
        let mut uf = selection_components(map, &sel);
        let components = uf.count();
        assert_eq!(components + swaps, initial_components, "every swap merges two components");
        if components == 1 {
            break;
        }
        let q = map
            .quadrilaterals()
            .iter()
            .find(|q| {
                let [(a, _), (b, _)] = match sel.pair(q.id) {
                    Pair::Green => q.green_pairs(),
                    Pair::Red => q.red_pairs(),
                };
                !uf.same(a, b)
            })
            .expect("a connected flag graph has a quadrilateral spanning two components");
        sel.swap(q.id);
        swaps += 1;
    }
    SwapSearch {
        selection: sel,
        initial_components,
        swaps,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn family(sets: &[&[u32]]) -> Vec<EdgeSet> {
        sets.iter().map(|s| s.iter().map(|&i| EdgeId(i)).collect()).collect()
    }

    fn components_by_walk(map: &CombinatorialMap, sel: &Selection) -> usize {
        // Independent count: walk the 2-regular subgraph cycle by cycle.
        let edges = selection_subgraph(map, sel);
        let n = map.flag_count();
        let mut adj = vec![Vec::new(); n];
        for (a, b, _) in edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            cycles += 1;
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                if !std::mem::replace(&mut seen[x], true) {
                    stack.extend(&adj[x]);
                }
            }
        }
        cycles
    }

    #[test]
    fn loop_map_subgraphs() {
        let map = fixtures::get("loop").unwrap();
        let red = Selection::uniform(1, Pair::Red);
        let green = Selection::uniform(1, Pair::Green);
        assert_eq!(component_count(&map, &red), 1);
        assert_eq!(component_count(&map, &green), 2);
        for sel in [&red, &green] {
            let mut degree = [0; 4];
            for (a, b, _) in selection_subgraph(&map, sel) {
                degree[a] += 1;
                degree[b] += 1;
            }
            assert_eq!(degree, [2; 4]);
        }
    }

    #[test]
    fn all_green_subgraph_is_green_and_black() {
        for (_, map) in fixtures::all() {
            let sel = Selection::uniform(map.edge_count(), Pair::Green);
            let mut got = selection_subgraph(&map, &sel);
            let mut want: Vec<_> = map
                .flag_graph_edges()
                .filter(|&(_, _, c)| c != Color::Red)
                .collect();
            got.sort_by_key(|&(a, b, c)| (a, b, c.letter()));
            want.sort_by_key(|&(a, b, c)| (a, b, c.letter()));
            assert_eq!(got, want);
            assert_eq!(component_count(&map, &sel), map.face_count());
        }
    }

    #[test]
    fn hamiltonicity_of_four_flag_maps() {
        let g = Selection::uniform(1, Pair::Green);
        let r = Selection::uniform(1, Pair::Red);
        let bridge = fixtures::get("bridge").unwrap();
        assert!(is_fully_black_hamiltonian(&bridge, &g));
        assert!(!is_fully_black_hamiltonian(&bridge, &r));
        let looped = fixtures::get("loop").unwrap();
        assert!(is_fully_black_hamiltonian(&looped, &r));
        let crosscap = fixtures::get("crosscap").unwrap();
        assert!(is_fully_black_hamiltonian(&crosscap, &g));
        assert!(is_fully_black_hamiltonian(&crosscap, &r));
    }

    #[test]
    fn gamma_families_of_small_fixtures() {
        let fam = |name| enumerate_feasible_gamma(&fixtures::get(name).unwrap()).unwrap();
        assert_eq!(fam("bridge").members(), family(&[&[1]]));
        assert_eq!(fam("loop").members(), family(&[&[]]));
        assert_eq!(fam("crosscap").members(), family(&[&[], &[1]]));
        assert_eq!(fam("torus1v").members(), family(&[&[], &[1, 2]]));
        assert_eq!(fam("theta").members(), family(&[&[1], &[2], &[3]]));
    }

    #[test]
    fn k_families_of_small_fixtures() {
        let fam = |name| enumerate_feasible_k(&fixtures::get(name).unwrap()).unwrap();
        assert_eq!(fam("torus1v").members(), family(&[&[], &[1], &[2], &[1, 2]]));
        assert_eq!(fam("loop").members(), family(&[&[]]));
        assert_eq!(fam("bridge").members(), family(&[&[1]]));
    }

    #[test]
    fn red_view_is_the_complement() {
        let map = fixtures::get("bridge").unwrap();
        let red = feasible_family(&map, Variant::Gamma, FamilyColor::Red, MAX_ENUM_EDGES).unwrap();
        assert_eq!(red.members(), family(&[&[]]));
    }

    #[test]
    fn size_guard() {
        let map = fixtures::get("k5torus").unwrap();
        assert_eq!(
            enumerate_feasible_gamma_with_limit(&map, 9),
            Err(EnumError::GroundSetTooLarge { edges: 10, limit: 9 })
        );
        assert!(enumerate_feasible_k_with_limit(&map, 9).is_err());
    }

    #[test]
    fn union_find_count_matches_cycle_walk() {
        for (_, map) in fixtures::all().into_iter().filter(|(_, m)| m.edge_count() <= 6) {
            let m = map.edge_count();
            for mask in 0..1u64 << m {
                let sel = Selection::from_green_set(m, EdgeSet::from_bits(mask));
                assert_eq!(component_count(&map, &sel), components_by_walk(&map, &sel));
            }
        }
    }

    #[test]
    fn one_swap_moves_component_count_by_at_most_one() {
        for (name, map) in fixtures::all().into_iter().filter(|(_, m)| m.edge_count() <= 6) {
            let m = map.edge_count();
            for mask in 0..1u64 << m {
                let sel = Selection::from_green_set(m, EdgeSet::from_bits(mask));
                let before = component_count(&map, &sel) as i64;
                for q in map.quadrilaterals() {
                    let mut swapped = sel.clone();
                    swapped.swap(q.id);
                    let after = component_count(&map, &swapped) as i64;
                    assert!((after - before).abs() <= 1, "{name} mask {mask:b} edge {}", q.id);
                }
            }
        }
    }

    #[test]
    fn swap_search_on_fixtures() {
        let looped = fixtures::get("loop").unwrap();
        assert_eq!(find_hamiltonian(&looped), Selection::uniform(1, Pair::Red));

        for (name, map) in fixtures::all() {
            let run = find_hamiltonian_traced(&map);
            assert!(is_fully_black_hamiltonian(&map, &run.selection), "{name}");
            assert_eq!(run.initial_components, map.face_count());
            assert_eq!(run.swaps, run.initial_components - 1);
        }

        let k5 = fixtures::get("k5torus").unwrap();
        let green = find_hamiltonian(&k5).green_set().len();
        assert!((4..=6).contains(&green), "{green}");
    }

    #[test]
    fn gamma_contains_swap_result_and_sits_inside_k() {
        for (name, map) in fixtures::all() {
            let gamma = enumerate_feasible_gamma(&map).unwrap();
            let k = enumerate_feasible_k(&map).unwrap();
            assert!(!gamma.is_empty(), "{name}");
            assert!(gamma.contains(find_hamiltonian(&map).green_set()), "{name}");
            assert!(gamma.is_subfamily_of(&k), "{name}");
        }
    }
}
