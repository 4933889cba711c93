//! The built-in corpus of small maps.
//!
//! | name       | surface          | V | E  | F |
//! |------------|------------------|---|----|---|
//! | `loop`     | sphere           | 1 | 1  | 2 |
//! | `bridge`   | sphere           | 2 | 1  | 1 |
//! | `crosscap` | projective plane | 1 | 1  | 1 |
//! | `theta`    | sphere           | 2 | 3  | 3 |
//! | `torus1v`  | torus            | 1 | 2  | 1 |
//! | `k4sphere` | sphere           | 4 | 6  | 4 |
//! | `k5torus`  | torus            | 5 | 10 | 5 |

use crate::builder::SignedRotation;
use crate::edgeset::EdgeId;
use crate::graph::EdgeEnd;
use crate::map::{validate_map, CombinatorialMap};

pub const NAMES: [&str; 7] = [
    "loop", "bridge", "crosscap", "theta", "torus1v", "k4sphere", "k5torus",
];

/// Looks up a fixture by name.
pub fn get(name: &str) -> Option<CombinatorialMap> {
    // The four-flag maps share R = {0-1, 2-3} and G = {1-2, 3-0}; they
    // differ only in which of the three perfect matchings is black.
    const R: [(usize, usize); 2] = [(0, 1), (2, 3)];
    const G: [(usize, usize); 2] = [(1, 2), (3, 0)];
    let map = match name {
        "loop" => validate_map(4, &R, &G, &G),
        "bridge" => validate_map(4, &R, &G, &R),
        "crosscap" => validate_map(4, &R, &G, &[(0, 2), (1, 3)]),
        "theta" => {
            let ends = |end: u8, order: [u32; 3]| order.map(|e| EdgeEnd::new(EdgeId(e), end)).to_vec();
            SignedRotation::new(
                2,
                vec![[0, 1]; 3],
                vec![ends(0, [1, 2, 3]), ends(1, [1, 3, 2])],
                vec![false; 3],
            )
            .expect("theta rotation")
            .build()
        }
        "torus1v" => {
            let (a, b) = (EdgeId(1), EdgeId(2));
            SignedRotation::new(
                1,
                vec![[0, 0]; 2],
                vec![vec![
                    EdgeEnd::new(a, 0),
                    EdgeEnd::new(b, 0),
                    EdgeEnd::new(a, 1),
                    EdgeEnd::new(b, 1),
                ]],
                vec![false; 2],
            )
            .expect("torus rotation")
            .build()
        }
        "k4sphere" => SignedRotation::from_neighbor_orders(&[&[1, 2, 3], &[0, 3, 2], &[0, 1, 3], &[0, 2, 1]])
            .expect("k4 rotation")
            .build(),
        "k5torus" => {
            // Vertex i sees i+1, i+2, i+4, i+3 (mod 5): five quadrilateral faces.
            let rows: Vec<Vec<usize>> = (0..5)
                .map(|i| [1, 2, 4, 3].iter().map(|o| (i + o) % 5).collect())
                .collect();
            let rows: Vec<&[usize]> = rows.iter().map(Vec::as_slice).collect();
            SignedRotation::from_neighbor_orders(&rows)
                .expect("k5 rotation")
                .build()
        }
        _ => return None,
    };
    Some(map.expect("built-in fixture is a valid map"))
}

/// All fixtures in [`NAMES`] order.
pub fn all() -> Vec<(&'static str, CombinatorialMap)> {
    NAMES
        .iter()
        .map(|&name| (name, get(name).expect("listed fixture exists")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_matches_orbit_counts() {
        let expected = [
            ("loop", 1, 1, 2),
            ("bridge", 2, 1, 1),
            ("crosscap", 1, 1, 1),
            ("theta", 2, 3, 3),
            ("torus1v", 1, 2, 1),
            ("k4sphere", 4, 6, 4),
            ("k5torus", 5, 10, 5),
        ];
        for (name, v, e, f) in expected {
            let map = get(name).unwrap();
            assert_eq!(
                (map.vertex_count(), map.edge_count(), map.face_count()),
                (v, e, f),
                "{name}"
            );
        }
    }

    #[test]
    fn unknown_name() {
        assert!(get("dodecahedron").is_none());
    }
}
