//! Seeded random maps for property tests.
//!
//! A map is drawn as a random connected multigraph (loops and parallel edges
//! allowed), a uniformly shuffled rotation at each vertex and, for half of the
//! draws, a random twist on each edge. The other half stays untwisted and is
//! therefore orientable.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::builder::SignedRotation;
use crate::edgeset::EdgeId;
use crate::graph::EdgeEnd;
use crate::map::CombinatorialMap;

pub fn random_signed_rotation<R: Rng + ?Sized>(rng: &mut R, max_edges: usize) -> SignedRotation {
    assert!(max_edges >= 1);
    let m = rng.random_range(1..=max_edges);
    let vertices = rng.random_range(1..=m + 1);
    let mut edges: Vec<[usize; 2]> = (1..vertices).map(|v| [rng.random_range(0..v), v]).collect();
    while edges.len() < m {
        edges.push([rng.random_range(0..vertices), rng.random_range(0..vertices)]);
    }
    edges.shuffle(rng);

    let mut rotations = vec![Vec::new(); vertices];
    for (i, e) in edges.iter().enumerate() {
        for end in 0..2u8 {
            rotations[e[end as usize]].push(EdgeEnd::new(EdgeId::from_index(i), end));
        }
    }
    for rot in &mut rotations {
        rot.shuffle(rng);
    }
    let twisted = if rng.random_bool(0.5) {
        vec![false; m]
    } else {
        (0..m).map(|_| rng.random_bool(0.5)).collect()
    };
    SignedRotation::new(vertices, edges, rotations, twisted).expect("generated rotation is consistent")
}

pub fn random_map<R: Rng + ?Sized>(rng: &mut R, max_edges: usize) -> CombinatorialMap {
    random_signed_rotation(rng, max_edges)
        .build()
        .expect("generated graph is connected")
}

/// One map from a `u64` seed; the same seed always gives the same map.
pub fn seeded_map(seed: u64, max_edges: usize) -> CombinatorialMap {
    random_map(&mut ChaCha8Rng::seed_from_u64(seed), max_edges)
}

/// `count` maps drawn from seeds `seed, seed + 1, …`.
pub fn corpus(seed: u64, count: usize, max_edges: usize) -> Vec<CombinatorialMap> {
    (0..count as u64)
        .map(|i| seeded_map(seed.wrapping_add(i), max_edges))
        .collect()
}
