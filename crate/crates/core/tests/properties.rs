use proptest::prelude::*;

use genvor::diagram::{
    build, build_multiplicative, build_order_k_sequence, build_semi, build_standard, BuildOptions, DiagramKind,
    FaceLabel, SemiOptions,
};
use genvor::geom::rational::rat_int;
use genvor::geom::{bisector, intersect, Curve, Intersection, Point2, Rational, Rect, SiteSet, WeightedSite, V2};
use genvor::models::{
    dominance_prune, random_geometry, sample_instance, side_bit, stretch, ModelConfig, StretchContext, WeightProfile,
};
use genvor::oracle::{nearest_site, nearest_visible_site, nearest_weighted_site};

fn dyadic(k: u32) -> Rational {
    Rational::new(k.into(), (1u64 << 16).into())
}

fn point() -> impl Strategy<Value = Point2> {
    (0u32..=1 << 16, 0u32..=1 << 16).prop_map(|(x, y)| Point2::new(dyadic(x), dyadic(y)))
}

fn weight() -> impl Strategy<Value = Rational> {
    (1i64..=16, 1i64..=4).prop_map(|(p, q)| Rational::new(p.into(), q.into()))
}

fn site_pair() -> impl Strategy<Value = (WeightedSite, WeightedSite)> {
    (point(), weight(), point(), weight())
        .prop_filter("distinct", |(a, _, b, _)| a != b)
        .prop_map(|(a, wa, b, wb)| (WeightedSite::new(0, a, wa), WeightedSite::new(1, b, wb)))
}

fn site_set(max: usize) -> impl Strategy<Value = SiteSet> {
    prop::collection::vec((point(), weight()), 2..=max).prop_filter_map("distinct sites", |v| {
        let sites = v.into_iter().enumerate().map(|(i, (p, w))| WeightedSite::new(i, p, w)).collect();
        SiteSet::new(sites).ok()
    })
}

fn wdist(s: &WeightedSite, x: V2) -> f64 {
    let w: f64 = num_traits::ToPrimitive::to_f64(&s.weight).unwrap();
    w * s.pos.to_v2().dist(x)
}

/// Sign of the second curve's implicit equation at `p`.
fn implicit(c: &Curve, p: V2) -> f64 {
    match *c {
        Curve::Line { origin, dir } => dir.cross(p - origin),
        Curve::Circle { center, radius } => (p - center).norm2() - radius * radius,
    }
}

fn probes(seed: u64, n: usize, r: Rect) -> Vec<V2> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| V2::new(rng.gen_range(r.min.x..r.max.x), rng.gen_range(r.min.y..r.max.y))).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn bisector_is_symmetric((a, b) in site_pair()) {
        prop_assert_eq!(bisector(&a, &b).unwrap(), bisector(&b, &a).unwrap());
    }

    #[test]
    fn apollonius_points_balance_weighted_distances((a, b) in site_pair()) {
        let c = bisector(&a, &b).unwrap().to_curve();
        let wsum: f64 = num_traits::ToPrimitive::to_f64(&(&a.weight + &b.weight)).unwrap();
        for k in 0..16 {
            let t = match c {
                Curve::Circle { .. } => k as f64 * std::f64::consts::TAU / 16.0,
                Curve::Line { .. } => (k as f64 - 8.0) * 0.37,
            };
            let x = c.point(t);
            let tol = 1e-9 * wsum * (1.0 + x.max_abs());
            prop_assert!((wdist(&a, x) - wdist(&b, x)).abs() <= tol);
        }
    }

    #[test]
    fn equal_weights_give_a_line(a in point(), b in point(), w in weight()) {
        prop_assume!(a != b);
        let c = bisector(&WeightedSite::new(0, a, w.clone()), &WeightedSite::new(1, b, w)).unwrap();
        prop_assert!(c.is_line());
    }

    #[test]
    fn weighted_oracle_with_unit_weights_is_nearest(s in site_set(12), x in (-0.5f64..1.5, -0.5f64..1.5)) {
        let x = V2::new(x.0, x.1);
        let u = s.unweighted();
        prop_assert_eq!(nearest_weighted_site(x, &u), nearest_site(x, &u));
    }

    #[test]
    fn full_plane_visibility_is_nearest(s in site_set(12), x in (-0.5f64..1.5, -0.5f64..1.5)) {
        let x = V2::new(x.0, x.1);
        let u = s.unweighted();
        prop_assert_eq!(nearest_visible_site(x, &u), Some(nearest_site(x, &u)));
    }

    #[test]
    fn sampling_is_reproducible(n in 1usize..40, seed in any::<u64>()) {
        for cfg in [
            ModelConfig::uniform(n, WeightProfile::Interval(rat_int(4)), seed),
            ModelConfig::random_side(random_geometry(n, seed ^ 7), seed),
            ModelConfig::finite_weight_set(n, vec![rat_int(1), rat_int(2), rat_int(4)], None, seed),
        ] {
            let a = sample_instance(&cfg).unwrap();
            let b = sample_instance(&cfg).unwrap();
            prop_assert_eq!(a.sites(), b.sites());
            prop_assert_eq!(a.constraints(), b.constraints());
        }
    }

    #[test]
    fn stretch_preserves_weighted_distance_exactly(s in site_set(10), sigma in point()) {
        prop_assume!(s.sites().iter().all(|w| w.pos != sigma));
        let ctx = StretchContext::new(sigma.clone(), s.len());
        let t = stretch(&s, &ctx).unwrap();
        let min_w = s.min_weight();
        let d2 = |p: &Point2| {
            let dx = &p.x - &sigma.x;
            let dy = &p.y - &sigma.y;
            &dx * &dx + &dy * &dy
        };
        for (site, ti) in s.sites().iter().zip(&t) {
            let w = &site.weight / &min_w;
            prop_assert_eq!(d2(ti), &w * &w * d2(&site.pos));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn intersections_are_sound_and_complete((a, b) in site_pair(), (c, d) in site_pair()) {
        let (Ok(p), Ok(q)) = (bisector(&a, &b), bisector(&c, &d)) else { return Ok(()) };
        let pts = match intersect(&p, &q) {
            Intersection::Overlap => return Ok(()),
            Intersection::Points(v) => v,
        };
        let (c1, c2) = (p.to_curve(), q.to_curve());
        for x in &pts {
            let tol = 1e-9 * (1.0 + x.max_abs());
            prop_assert!(c1.distance(*x) <= tol && c2.distance(*x) <= tol, "{x:?} off the curves");
        }
        // brute-force scan of c1 for sign changes of c2's equation
        let steps = 4096;
        let (t0, t1) = match c1 {
            Curve::Circle { .. } => (0.0, std::f64::consts::TAU),
            Curve::Line { .. } => (-50.0, 50.0),
        };
        let at = |k: usize| t0 + (t1 - t0) * k as f64 / steps as f64;
        for k in 0..steps {
            let (pa, pb) = (c1.point(at(k)), c1.point(at(k + 1)));
            let (fa, fb) = (implicit(&c2, pa), implicit(&c2, pb));
            if fa * fb < 0.0 {
                let reach = pa.dist(pb) + 1e-9;
                prop_assert!(
                    pts.iter().any(|x| x.dist(pa) <= reach || x.dist(pb) <= reach),
                    "missed crossing near {pa:?}"
                );
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn pruned_sites_never_win_near_sigma(s in site_set(40), sigma in point(), seed in any::<u64>()) {
        prop_assume!(s.sites().iter().all(|w| w.pos != sigma));
        let ctx = StretchContext::new(sigma.clone(), s.len());
        let part = dominance_prune(&s, &ctx);
        let c = sigma.to_v2();
        let r = ctx.gamma;
        for x in probes(seed, 400, Rect::new(c - V2::new(r, r), c + V2::new(r, r))) {
            if x.dist(c) > r {
                continue;
            }
            let best_kept = part.kept.iter().map(|&i| wdist(&s.sites()[i], x)).fold(f64::INFINITY, f64::min);
            for &j in &part.pruned {
                prop_assert!(best_kept < wdist(&s.sites()[j], x));
            }
        }
    }

    #[test]
    fn standard_diagram_has_one_face_per_site(s in site_set(24)) {
        let d = build_standard(&s).unwrap();
        prop_assert_eq!(d.complexity(None).faces, s.len());
        prop_assert!(d.euler_holds());
    }

    #[test]
    fn equal_weights_reduce_to_standard(s in site_set(16), seed in any::<u64>()) {
        let u = s.unweighted();
        let m = build_multiplicative(&u, None).unwrap();
        let st = build_standard(&u).unwrap();
        for x in probes(seed, 500, Rect::new(V2::new(-0.5, -0.5), V2::new(1.5, 1.5))) {
            if m.near_edge(x, 1e-7) || st.near_edge(x, 1e-7) {
                continue;
            }
            prop_assert_eq!(m.label_at(x), st.label_at(x));
        }
    }

    #[test]
    fn full_plane_semi_matches_standard(n in 2usize..16, seed in any::<u64>()) {
        let s = sample_instance(&ModelConfig::random_side(random_geometry(n, seed ^ 3), seed)).unwrap();
        let semi = build_semi(&s, SemiOptions { full_plane: true, sentinels: false }).unwrap();
        let st = build_standard(&s).unwrap();
        for x in probes(seed, 500, Rect::new(V2::new(-0.5, -0.5), V2::new(1.5, 1.5))) {
            if semi.near_edge(x, 1e-7) || st.near_edge(x, 1e-7) {
                continue;
            }
            prop_assert_eq!(semi.label_at(x), st.label_at(x));
        }
    }

    #[test]
    fn sequence_labels_increase_in_distance(s in site_set(9), k in 1usize..4) {
        prop_assume!(k <= s.len());
        let d = build_order_k_sequence(&s, k).unwrap();
        let arr = d.arrangement();
        for f in 0..arr.faces.len() as u32 {
            let (Some(FaceLabel::Sequence(seq)), Some(x)) = (d.raw_face_label(f), arr.interior_point(f)) else {
                continue;
            };
            prop_assert_eq!(seq.len(), k);
            let dist: Vec<f64> = seq.iter().map(|&i| s.pos(i).dist(x)).collect();
            prop_assert!(dist.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn builders_agree_and_satisfy_euler(s in site_set(10), kind in 0usize..3) {
        let kind = [DiagramKind::Standard, DiagramKind::Multiplicative, DiagramKind::OrderKSequence(2)][kind];
        let a = build(kind, &s, &BuildOptions::reference()).unwrap();
        let b = build(kind, &s, &BuildOptions::default()).unwrap();
        prop_assert!(a.euler_holds() && b.euler_holds());
        let u = Rect::unit();
        prop_assert_eq!(a.complexity(Some(u)).total, b.complexity(Some(u)).total);
    }
}

#[test]
fn random_side_bits_are_fair_and_independent() {
    let mean = (0..10_000u64).map(|s| side_bit(s, 0) as f64).sum::<f64>() / 1e4;
    assert!((mean - 0.5).abs() <= 0.02, "mean side {mean}");

    let mut cells = [0f64; 4];
    let n = 100_000u64;
    for s in 0..n {
        cells[(side_bit(s, 0) * 2 + side_bit(s, 1)) as usize] += 1.0;
    }
    let e = n as f64 / 4.0;
    let chi2: f64 = cells.iter().map(|c| (c - e) * (c - e) / e).sum();
    // 3 degrees of freedom, p = 0.001
    assert!(chi2 < 16.266, "chi-square {chi2}");
}

#[test]
fn uniform_locations_fill_quarters_evenly() {
    let s = sample_instance(&ModelConfig::uniform(10_000, WeightProfile::AllOnes, 99)).unwrap();
    let sigma = (10_000f64 * 0.25 * 0.75).sqrt();
    for (qx, qy) in [(0.0, 0.0), (0.5, 0.0), (0.0, 0.5), (0.5, 0.5)] {
        let q = Rect::new(V2::new(qx, qy), V2::new(qx + 0.5, qy + 0.5));
        let count = s.positions().iter().filter(|p| q.contains_strict(**p)).count() as f64;
        assert!((count - 2500.0).abs() <= 3.0 * sigma, "quarter ({qx}, {qy}) holds {count}");
    }
}
