//! Predicates against the naive oracle, plus symmetry properties.

mod common;

use common::oracle::{self, RawBox};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sprel_core::geometry::{
    average_depth, axis_distances, check_between, check_depth_overlap, check_depth_relation,
    check_directional, check_next, DepthOrder,
};
use sprel_core::{BoundingBox, DepthMap, Locality, Strictness};

fn bx(r: &RawBox) -> BoundingBox {
    BoundingBox::from_array(*r).unwrap()
}

fn agree_pair(a: &RawBox, b: &RawBox, tau: f64) {
    let s = Strictness::new(tau).unwrap();
    let (ba, bb) = (bx(a), bx(b));
    let d = axis_distances(&ba, &bb);
    assert_eq!(
        [d.x_max_dist, d.x_min_dist, d.y_max_dist, d.y_min_dist],
        oracle::distances(a, b)
    );
    assert_eq!(
        check_directional(&ba, &bb, Locality::Right, s),
        oracle::right(a, b, tau),
        "{a:?} right {b:?}"
    );
    assert_eq!(
        check_directional(&ba, &bb, Locality::Left, s),
        oracle::left(a, b, tau),
        "{a:?} left {b:?}"
    );
    assert_eq!(
        check_directional(&ba, &bb, Locality::Top, s),
        oracle::top(a, b, tau),
        "{a:?} top {b:?}"
    );
    assert_eq!(
        check_directional(&ba, &bb, Locality::Bottom, s),
        oracle::bottom(a, b, tau),
        "{a:?} bottom {b:?}"
    );
    assert_eq!(check_next(&ba, &bb, s), oracle::next(a, b, tau));
    assert_eq!(check_depth_overlap(&ba, &bb, s), oracle::overlap(a, b, tau));
}

fn random_box(rng: &mut impl Rng, extent: f64) -> RawBox {
    loop {
        let (x0, x1) = (rng.gen_range(0.0..extent), rng.gen_range(0.0..extent));
        let (y0, y1) = (rng.gen_range(0.0..extent), rng.gen_range(0.0..extent));
        if x0 < x1 && y0 < y1 {
            return [x0, y0, x1, y1];
        }
    }
}

#[test]
fn exhaustive_grid_pairs_match_oracle() {
    let boxes = oracle::grid_boxes(8);
    assert_eq!(boxes.len(), 784);
    for tau in [2.0, 3.0, 5.0] {
        for a in &boxes {
            for b in &boxes {
                agree_pair(a, b, tau);
            }
        }
    }
}

#[test]
fn exhaustive_small_grid_triplets_match_oracle() {
    let boxes = oracle::grid_boxes(5);
    for tau in [2.0, 3.0, 5.0] {
        let s = Strictness::new(tau).unwrap();
        for l in &boxes {
            for m in &boxes {
                for r in &boxes {
                    assert_eq!(
                        check_between(&bx(l), &bx(m), &bx(r), s),
                        oracle::between(l, m, r, tau)
                    );
                }
            }
        }
    }
}

#[test]
fn random_real_pairs_match_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for i in 0..100_000 {
        let tau = [2.0, 3.0, 5.0][i % 3];
        let a = random_box(&mut rng, 200.0);
        // bias towards nearby boxes so the constraints are exercised
        let b = if i % 2 == 0 {
            random_box(&mut rng, 200.0)
        } else {
            let dx = rng.gen_range(-20.0..20.0);
            let dy = rng.gen_range(-20.0..20.0);
            let b = [
                a[0] + 40.0 + dx,
                a[1] + dy,
                a[2] + 40.0 + dx + dy,
                a[3] + dy + dx,
            ];
            if b.iter().all(|c| *c >= 0.0) && b[0] < b[2] && b[1] < b[3] {
                b
            } else {
                random_box(&mut rng, 200.0)
            }
        };
        agree_pair(&a, &b, tau);
        let c = random_box(&mut rng, 200.0);
        let s = Strictness::new(tau).unwrap();
        assert_eq!(
            check_between(&bx(&a), &bx(&b), &bx(&c), s),
            oracle::between(&a, &b, &c, tau)
        );
    }
}

#[test]
fn depth_matches_oracle_on_integer_maps() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let (w, h) = (24usize, 18usize);
    for _ in 0..200 {
        let grid: Vec<Vec<f64>> = (0..h)
            .map(|_| (0..w).map(|_| rng.gen_range(0..50) as f64).collect())
            .collect();
        let map = DepthMap::new(w, h, grid.iter().flatten().copied().collect()).unwrap();
        for _ in 0..200 {
            let a = random_box(&mut rng, 30.0);
            let b = random_box(&mut rng, 30.0);
            let got = average_depth(&map, &bx(&a)).ok();
            assert_eq!(got, oracle::mean_depth(&grid, &a));
            let rel = check_depth_relation(&bx(&a), &bx(&b), &map, Strictness::default());
            let want = oracle::front(&grid, &a, &b, 3.0);
            match rel {
                Ok(r) => assert_eq!(r.map(|o| o == DepthOrder::Front), want),
                Err(_) => assert!(oracle::overlap(&a, &b, 3.0)),
            }
        }
    }
}

#[test]
fn pair_symmetry_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let s = Strictness::default();
    let mut violations = 0;
    for _ in 0..100_000 {
        let a = bx(&random_box(&mut rng, 100.0));
        let b = bx(&random_box(&mut rng, 100.0));
        violations += usize::from(
            check_directional(&a, &b, Locality::Right, s)
                != check_directional(&b, &a, Locality::Left, s),
        );
        violations += usize::from(
            check_directional(&a, &b, Locality::Bottom, s)
                != check_directional(&b, &a, Locality::Top, s),
        );
        violations += usize::from(check_next(&a, &b, s) != check_next(&b, &a, s));
        violations += usize::from(check_depth_overlap(&a, &b, s) != check_depth_overlap(&b, &a, s));
    }
    assert_eq!(violations, 0);
}

fn arb_box() -> impl Strategy<Value = BoundingBox> {
    (0.0..500.0f64, 0.0..500.0f64, 0.5..200.0f64, 0.5..200.0f64)
        .prop_map(|(x, y, w, h)| BoundingBox::new(x, y, x + w, y + h).unwrap())
}

fn arb_int_box(n: u32) -> impl Strategy<Value = BoundingBox> {
    (0..n - 1, 0..n - 1, 1..n, 1..n).prop_map(move |(x, y, w, h)| {
        let (x1, y1) = ((x + w).min(n), (y + h).min(n));
        BoundingBox::new(x as f64, y as f64, x1 as f64, y1 as f64).unwrap()
    })
}

proptest! {
    #[test]
    fn looser_tau_keeps_passing_checks(a in arb_box(), b in arb_box(), tau in 0.5..10.0f64, shrink in 0.01..1.0f64) {
        let strict = Strictness::new(tau).unwrap();
        let loose = Strictness::new(tau * shrink).unwrap();
        for loc in Locality::ALL {
            if check_directional(&a, &b, loc, strict) {
                prop_assert!(check_directional(&a, &b, loc, loose));
            }
        }
        if check_depth_overlap(&a, &b, strict) {
            prop_assert!(check_depth_overlap(&a, &b, loose));
        }
    }

    #[test]
    fn front_behind_antisymmetric(a in arb_int_box(32), b in arb_int_box(32), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let values: Vec<f64> = (0..32 * 32).map(|_| rng.gen_range(0..100) as f64).collect();
        let map = DepthMap::new(32, 32, values).unwrap();
        let s = Strictness::default();
        let ab = check_depth_relation(&a, &b, &map, s).unwrap();
        let ba = check_depth_relation(&b, &a, &map, s).unwrap();
        prop_assert_eq!(ab, ba.map(DepthOrder::reversed));
    }

    #[test]
    fn average_depth_shifts_with_constant(b in arb_int_box(16), c in 0u32..1000, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let values: Vec<f64> = (0..16 * 16).map(|_| rng.gen_range(0..100) as f64).collect();
        let shifted: Vec<f64> = values.iter().map(|v| v + c as f64).collect();
        let m1 = DepthMap::new(16, 16, values).unwrap();
        let m2 = DepthMap::new(16, 16, shifted).unwrap();
        let d1 = average_depth(&m1, &b).unwrap();
        let d2 = average_depth(&m2, &b).unwrap();
        prop_assert!((d2 - d1 - c as f64).abs() < 1e-9);
        let other = BoundingBox::new(4.0, 4.0, 12.0, 12.0).unwrap();
        let s = Strictness::default();
        prop_assert_eq!(
            check_depth_relation(&b, &other, &m1, s).unwrap(),
            check_depth_relation(&b, &other, &m2, s).unwrap()
        );
    }
}
