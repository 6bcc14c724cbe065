use std::collections::BTreeSet;

use genvor::diagram::{
    build_multiplicative, build_order_k_sequence, build_semi, build_standard, DiagramKind, FaceLabel, PlanarDiagram,
    SemiOptions,
};
use genvor::geom::{Rect, Side, SiteSet, VisibilityConstraint, V2};
use genvor::oracle::label;

fn sites(p: &[(f64, f64, f64)]) -> SiteSet {
    SiteSet::from_weighted(p).unwrap()
}

/// Number of 4-connected same-label components of the oracle labeling on a
/// `res` x `res` grid over `win`, as `(components of 16+ pixels, all)`.
/// Sharp wedges break into stray pixels and small faces shrink to a few,
/// so the true face count lies between the two.
fn grid_components(kind: DiagramKind, s: &SiteSet, win: Rect, res: usize) -> (usize, usize) {
    let cell = |i: usize, j: usize| {
        let x = win.min.x + win.width() * (i as f64 + 0.5) / res as f64;
        let y = win.min.y + win.height() * (j as f64 + 0.5) / res as f64;
        label(kind, s, V2::new(x, y))
    };
    let labels: Vec<FaceLabel> = (0..res * res).map(|k| cell(k % res, k / res)).collect();
    let mut seen = vec![false; res * res];
    let (mut large, mut all) = (0, 0);
    for start in 0..res * res {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut stack = vec![start];
        let mut size = 0;
        while let Some(k) = stack.pop() {
            size += 1;
            let (i, j) = (k % res, k / res);
            let mut nb = Vec::with_capacity(4);
            if i > 0 {
                nb.push(k - 1);
            }
            if i + 1 < res {
                nb.push(k + 1);
            }
            if j > 0 {
                nb.push(k - res);
            }
            if j + 1 < res {
                nb.push(k + res);
            }
            for m in nb {
                if !seen[m] && labels[m] == labels[k] {
                    seen[m] = true;
                    stack.push(m);
                }
            }
        }
        large += (size >= 16) as usize;
        all += 1;
    }
    (large, all)
}

fn margin(d: &PlanarDiagram) -> Rect {
    d.clip.inflate(0.1 * d.clip.width().max(d.clip.height()))
}

#[test]
fn standard_small_cases() {
    let one = build_standard(&sites(&[(0.5, 0.5, 1.0)])).unwrap();
    let c = one.complexity(None);
    assert_eq!((c.faces, c.edges, c.finite_vertices), (1, 0, 0));

    let two = build_standard(&sites(&[(0.0, 0.0, 1.0), (2.0, 0.0, 1.0)])).unwrap();
    let c = two.complexity(None);
    assert_eq!((c.finite_vertices, c.infinity_vertex, c.edges, c.faces, c.total), (0, 1, 1, 2, 4));

    let three = build_standard(&sites(&[(0.1, 0.2, 1.0), (0.8, 0.3, 1.0), (0.4, 0.9, 1.0)])).unwrap();
    let c = three.complexity(None);
    assert_eq!((c.finite_vertices, c.infinity_vertex, c.edges, c.faces, c.total), (1, 1, 3, 3, 8));
}

#[test]
fn apollonius_region_counts() {
    // bisector is the circle centered (0.6, 0.5) with radius 0.2
    let s = sites(&[(0.2, 0.5, 1.0), (0.5, 0.5, 2.0)]);
    let d = build_multiplicative(&s, None).unwrap();
    let c = d.complexity(Some(Rect::unit()));
    assert_eq!((c.finite_vertices, c.edges, c.faces), (0, 1, 2));
    assert_eq!(d.label_at(V2::new(0.6, 0.5)), Some(FaceLabel::Nearest(1)));
    assert_eq!(d.label_at(V2::new(0.95, 0.5)), Some(FaceLabel::Nearest(0)));
}

#[test]
fn collinear_weighted_faces_match_grid_components() {
    let s = sites(&[(0.0, 0.0, 1.0), (1.0, 0.0, 2.0), (2.0, 0.0, 4.0)]);
    let d = build_multiplicative(&s, None).unwrap();
    let (large, all) = grid_components(DiagramKind::Multiplicative, &s, margin(&d), 500);
    assert_eq!(large, all);
    assert_eq!(d.face_count(), all);
}

#[test]
fn semi_face_counts_match_grid_components_for_all_sides() {
    let pos = [(0.2, 0.3), (0.75, 0.4), (0.45, 0.8)];
    let angles = [0.3, 1.2, 2.4];
    for combo in 0..8u8 {
        let s = sites(&pos.map(|(x, y)| (x, y, 1.0)))
            .with_constraints(
                (0..3).map(|i| VisibilityConstraint::new(angles[i], Side::from_bit((combo >> i) & 1))).collect(),
            )
            .unwrap();
        let d = build_semi(&s, SemiOptions { full_plane: false, sentinels: false }).unwrap();
        let (large, all) = grid_components(DiagramKind::Semi, &s, margin(&d), 600);
        let n = d.face_count();
        assert!(large <= n && n <= all, "side combination {combo:03b}: {n} faces, grid {large}..{all}");
        assert!(genvor::oracle::validate(&d, &s, 4000, combo as u64, None).passed());
    }
}

#[test]
fn semi_single_site_splits_the_plane() {
    let s = sites(&[(0.5, 0.5, 1.0)]).with_constraints(vec![VisibilityConstraint::new(0.0, Side::Left)]).unwrap();
    let d = build_semi(&s, SemiOptions { full_plane: false, sentinels: false }).unwrap();
    assert_eq!(d.face_count(), 2);
    assert_eq!(d.label_at(V2::new(0.5, 0.9)), Some(FaceLabel::Nearest(0)));
    assert_eq!(d.label_at(V2::new(0.5, 0.1)), Some(FaceLabel::NotVisible));
}

#[test]
fn order_k_sequence_small_cases() {
    let two = build_order_k_sequence(&sites(&[(0.0, 0.0, 1.0), (2.0, 0.0, 1.0)]), 2).unwrap();
    let labels: BTreeSet<_> = two.face_labels().iter().cloned().collect();
    assert_eq!(labels, [FaceLabel::Sequence(vec![0, 1]), FaceLabel::Sequence(vec![1, 0])].into());

    let s = sites(&[(0.1, 0.2, 1.0), (0.8, 0.3, 1.0), (0.4, 0.9, 1.0)]);
    let d = build_order_k_sequence(&s, 2).unwrap();
    let labels: BTreeSet<_> = d.face_labels().iter().cloned().collect();
    assert_eq!(d.face_count(), 6);
    assert_eq!(labels.len(), 6);

    let k1 = build_order_k_sequence(&s, 1).unwrap();
    let st = build_standard(&s).unwrap();
    for i in 0..40 {
        for j in 0..40 {
            let x = V2::new(-0.5 + i as f64 * 0.05 + 0.013, -0.5 + j as f64 * 0.05 + 0.007);
            let a = match k1.label_at(x) {
                Some(FaceLabel::Sequence(v)) => Some(FaceLabel::Nearest(v[0])),
                other => other,
            };
            assert_eq!(a, st.label_at(x));
        }
    }
}
