mod common;

use annulus_core::envelope::{build_f, build_g, build_h, minimize_valid, PairContext};
use annulus_core::oracle::naive_envelopes;
use common::tied_points;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_context(rng: &mut ChaCha8Rng) -> Option<PairContext> {
    let n = rng.gen_range(3..30);
    let ps = tied_points(rng, n, 10);
    let i = rng.gen_range(0..n - 2);
    let j = rng.gen_range(i + 2..n);
    PairContext::new(&ps, i, j)
}

#[test]
fn envelopes_match_pointwise_maxima() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let mut contexts = 0;
    while contexts < 1000 {
        let Some(ctx) = random_context(&mut rng) else { continue };
        contexts += 1;
        let (g, h) = (build_g(&ctx), build_h(&ctx));
        let f = build_f(&g, &h);
        let mut probes: Vec<f64> = f.breaks().to_vec();
        probes.extend(g.breaks());
        probes.extend(h.breaks());
        probes.extend((0..10).map(|_| rng.gen_range(-4.0..14.0)));
        for c in probes {
            let (gn, hn, fn_) = naive_envelopes(ctx.slab(), ctx.ell_y, ctx.r, c);
            assert_eq!((g.eval(c), h.eval(c), f.eval(c)), (gn, hn, fn_), "c = {c}, ctx {ctx:?}");
        }
    }
}

#[test]
fn breakpoints_stay_linear_in_the_slab() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..1000 {
        let Some(ctx) = random_context(&mut rng) else { continue };
        let f = build_f(&build_g(&ctx), &build_h(&ctx));
        assert!(f.breaks().len() <= 6 * ctx.slab_ids.len() + 2, "{} breaks for {}", f.breaks().len(), ctx.slab_ids.len());
    }
}

#[test]
fn chosen_center_is_optimal_among_probes() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..500 {
        let Some(ctx) = random_context(&mut rng) else { continue };
        let f = build_f(&build_g(&ctx), &build_h(&ctx));
        let Some(choice) = minimize_valid(&f, &ctx) else { continue };
        assert!(ctx.c_lo <= choice.center_x && choice.center_x <= ctx.c_hi);
        for _ in 0..50 {
            let c = rng.gen_range(ctx.c_lo..=ctx.c_hi);
            let v = naive_envelopes(ctx.slab(), ctx.ell_y, ctx.r, c).2;
            if v > 0.0 {
                assert!(choice.inner_radius <= v, "center {c} beats the choice");
            }
        }
    }
}
