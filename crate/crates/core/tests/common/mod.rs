#![allow(dead_code)]

use annulus_core::PointSet;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Points on a coarse half-integer lattice so ties and duplicates are common.
pub fn tied_points(rng: &mut ChaCha8Rng, n: usize, side: i32) -> PointSet {
    let coords: Vec<(f64, f64)> = (0..n)
        .map(|_| {
            (
                f64::from(rng.gen_range(0..2 * side)) / 2.0,
                f64::from(rng.gen_range(0..2 * side)) / 2.0,
            )
        })
        .collect();
    PointSet::from_coords(&coords).unwrap()
}

/// A lattice coordinate, or occasionally an infinity on the given side.
pub fn coord_or_inf(rng: &mut ChaCha8Rng, side: i32, inf: f64) -> f64 {
    if rng.gen_bool(0.15) {
        inf
    } else {
        f64::from(rng.gen_range(-2..2 * side + 2)) / 2.0
    }
}

pub fn sorted_pair(rng: &mut ChaCha8Rng, side: i32) -> (f64, f64) {
    let a = coord_or_inf(rng, side, f64::NEG_INFINITY);
    let b = coord_or_inf(rng, side, f64::INFINITY);
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}
