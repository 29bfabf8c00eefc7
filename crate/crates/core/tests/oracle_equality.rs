use annulus_core::gen::{generate, Distribution, GenSpec};
use annulus_core::oracle::{brute_max_era, brute_max_esa, naive_corridor};
use annulus_core::{is_empty, is_valid, max_era, max_esa, widest_l_corridor, PointSet};

fn instance(seed: u64, n_min: usize, n_max: usize, dist: Distribution) -> PointSet {
    let n = n_min + (seed as usize * 7919) % (n_max - n_min + 1);
    generate(&GenSpec::new(dist, n, seed))
}

#[test]
fn rect_matches_oracle() {
    for seed in 0..150 {
        let ps = instance(seed, 3, 25, Distribution::Uniform);
        let fast = max_era(&ps).unwrap();
        let slow = brute_max_era(&ps, 30).unwrap();
        assert_eq!(fast.width, slow.width, "seed {seed}: {:?}", ps.points());
        assert!(is_empty(&fast.rect_form, &ps) && is_valid(&fast.rect_form, &ps), "seed {seed}");
    }
}

#[test]
fn rect_matches_oracle_on_clusters() {
    for seed in 0..60 {
        let ps = instance(seed, 3, 25, Distribution::Clustered);
        assert_eq!(max_era(&ps).unwrap().width, brute_max_era(&ps, 30).unwrap().width, "seed {seed}");
    }
}

#[test]
fn square_matches_oracle() {
    for seed in 0..150 {
        let ps = instance(seed, 2, 20, Distribution::Uniform);
        let fast = max_esa(&ps).unwrap();
        let slow = brute_max_esa(&ps, 25).unwrap();
        assert_eq!(fast.width, slow.width, "seed {seed}: {:?}", ps.points());
        assert!(is_empty(&fast.rect_form, &ps) && is_valid(&fast.rect_form, &ps), "seed {seed}");
    }
}

#[test]
fn corridor_matches_corner_scan() {
    for seed in 0..100 {
        let ps = instance(seed, 1, 20, Distribution::Uniform);
        let fast = widest_l_corridor(&ps).map(|s| s.width);
        let slow = naive_corridor(&ps).map(|(w, _)| w);
        assert_eq!(fast, slow, "seed {seed}");
    }
}
