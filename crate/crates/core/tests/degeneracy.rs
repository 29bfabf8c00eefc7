use annulus_core::gen::{generate, Distribution, GenSpec};
use annulus_core::oracle::{brute_max_era, brute_max_esa};
use annulus_core::{annulus_width, is_empty, is_valid, max_era, max_esa, Error, PointSet};

fn sound(ps: &PointSet, what: &str) {
    for (name, result) in [("rect", max_era(ps)), ("square", max_esa(ps))] {
        match result {
            Ok(s) => {
                assert!(is_empty(&s.rect_form, ps), "{what}: {name} annulus not empty");
                assert!(is_valid(&s.rect_form, ps), "{what}: {name} annulus not valid");
                assert_eq!(annulus_width(&s.rect_form).value(), s.width, "{what}: {name} width");
            }
            Err(e) => {
                assert_eq!(e, Error::NoValidAnnulus);
                assert!(!ps.has_distinct_points(), "{what}: {name} found nothing");
            }
        }
    }
}

#[test]
fn grid_and_collinear_outputs_are_sound() {
    for seed in 0..60 {
        for dist in [Distribution::Grid, Distribution::Collinear] {
            let n = 2 + (seed as usize * 13) % 60;
            sound(&generate(&GenSpec::new(dist, n, seed)), &format!("{} n={n} seed={seed}", dist.name()));
        }
    }
}

#[test]
fn small_degenerate_sets_never_beat_the_oracle() {
    // With ties the solvers may be conservative, never optimistic.
    for seed in 0..40 {
        let ps = generate(&GenSpec::new(Distribution::Grid, 3 + seed as usize % 14, seed));
        assert!(max_era(&ps).unwrap().width <= brute_max_era(&ps, 30).unwrap().width);
        assert!(max_esa(&ps).unwrap().width <= brute_max_esa(&ps, 25).unwrap().width);
    }
}

#[test]
fn duplicates_and_tiny_inputs() {
    let empty = PointSet::from_coords(&[]).unwrap();
    assert_eq!(max_era(&empty), Err(Error::NoValidAnnulus));
    assert_eq!(max_esa(&empty), Err(Error::NoValidAnnulus));
    let dup = PointSet::from_coords(&[(1.0, 1.0); 4]).unwrap();
    assert_eq!(max_era(&dup), Err(Error::NoValidAnnulus));
    assert_eq!(max_esa(&dup), Err(Error::NoValidAnnulus));
    let pair = PointSet::from_coords(&[(1.0, 1.0), (1.0, 1.0), (4.0, 1.0)]).unwrap();
    sound(&pair, "duplicate pair");
    assert_eq!(max_era(&pair).unwrap().width, 3.0);
}
