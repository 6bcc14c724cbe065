//! Candidate curves for the reference construction: every bisector and every
//! visibility line, unclipped.

use crate::geom::curve::intersect;
use crate::geom::{Curve, Piece, Rect, SiteSet, Source, V2};

use super::DiagramKind;

/// Square clip box around `r`, scaled by three, never smaller than 3 wide.
pub fn clip_box(r: &Rect) -> Rect {
    let b = r.square_scaled(3.0);
    if b.width() >= 3.0 {
        b
    } else {
        let c = b.center();
        Rect::new(c - V2::new(1.5, 1.5), c + V2::new(1.5, 1.5))
    }
}

pub(crate) fn unbounded(curve: Curve, source: Source) -> Piece {
    match curve {
        Curve::Line { .. } => Piece::new(curve, f64::NEG_INFINITY, f64::INFINITY, source),
        Curve::Circle { .. } => Piece::full_circle(curve, source),
    }
}

pub fn candidates(kind: DiagramKind, sites: &SiteSet) -> (Rect, Vec<Piece>) {
    let n = sites.len();
    let (pos, w) = (sites.positions(), sites.weights());
    let weighted = kind == DiagramKind::Multiplicative;
    let mut curves: Vec<Piece> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let (wi, wj) = if weighted { (w[i], w[j]) } else { (1.0, 1.0) };
            let c = Curve::bisector(pos[i], wi, pos[j], wj);
            curves.push(unbounded(c, Source::Bisector(i as u32, j as u32)));
        }
    }
    if kind == DiagramKind::Semi && sites.constraints().is_some() {
        for (i, c) in sites.constraints().unwrap().iter().enumerate() {
            curves.push(unbounded(Curve::line(pos[i], c.direction()), Source::Visibility(i as u32)));
        }
    }

    let mut r = Rect::empty();
    for &p in pos {
        r.include(p);
    }
    for (a, pa) in curves.iter().enumerate() {
        if let Curve::Circle { center, radius } = pa.curve {
            r.include(center - V2::new(radius, radius));
            r.include(center + V2::new(radius, radius));
        }
        for pb in &curves[a + 1..] {
            for (p, _, _) in intersect(&pa.curve, &pb.curve) {
                r.include(p);
            }
        }
    }
    (clip_box(&r), curves)
}
