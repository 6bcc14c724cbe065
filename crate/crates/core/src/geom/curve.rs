//! Floating-point lines and circles, the working representation of every
//! arrangement. Lines are parametrized by arc length from `origin`; circles
//! by angle, counter-clockwise, in `[0, 2pi)`.

use std::f64::consts::TAU;

use super::point::{Rect, V2};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Curve {
    Line { origin: V2, dir: V2 },
    Circle { center: V2, radius: f64 },
}

impl Curve {
    pub fn line(origin: V2, dir: V2) -> Curve {
        Curve::Line { origin, dir: dir.unit() }
    }

    pub fn circle(center: V2, radius: f64) -> Curve {
        Curve::Circle { center, radius }
    }

    /// Locus where `w_i |x - s_i| = w_j |x - s_j|`.
    pub fn bisector(si: V2, wi: f64, sj: V2, wj: f64) -> Curve {
        if wi == wj {
            Curve::line((si + sj) * 0.5, (sj - si).perp())
        } else {
            let wi2 = wi * wi;
            let denom = (wi - wj) * (wi + wj);
            let center = sj + (si - sj) * (wi2 / denom);
            let radius = wi * wj * si.dist(sj) / denom.abs();
            Curve::circle(center, radius)
        }
    }

    pub fn is_closed(&self) -> bool {
        matches!(self, Curve::Circle { .. })
    }

    pub fn point(&self, t: f64) -> V2 {
        match *self {
            Curve::Line { origin, dir } => origin + dir * t,
            Curve::Circle { center, radius } => center + V2::new(t.cos(), t.sin()) * radius,
        }
    }

    /// Unit tangent in the direction of increasing parameter.
    pub fn tangent(&self, t: f64) -> V2 {
        match *self {
            Curve::Line { dir, .. } => dir,
            Curve::Circle { .. } => V2::new(-t.sin(), t.cos()),
        }
    }

    /// Signed curvature along increasing parameter (left turns positive).
    pub fn curvature(&self) -> f64 {
        match *self {
            Curve::Line { .. } => 0.0,
            Curve::Circle { radius, .. } => 1.0 / radius,
        }
    }

    /// Parameter of the point of the curve closest to `p`.
    pub fn param_of(&self, p: V2) -> f64 {
        match *self {
            Curve::Line { origin, dir } => (p - origin).dot(dir),
            Curve::Circle { center, .. } => angle_of(p - center),
        }
    }

    /// Parameter tolerance equivalent to a spatial tolerance `tol`.
    pub fn param_tol(&self, tol: f64) -> f64 {
        match *self {
            Curve::Line { .. } => tol,
            Curve::Circle { radius, .. } => tol / radius,
        }
    }

    pub fn distance(&self, p: V2) -> f64 {
        match *self {
            Curve::Line { origin, dir } => (p - origin).cross(dir).abs(),
            Curve::Circle { center, radius } => (p.dist(center) - radius).abs(),
        }
    }
}

/// Angle of `v` normalized to `[0, 2pi)`.
pub fn angle_of(v: V2) -> f64 {
    let a = v.y.atan2(v.x);
    if a < 0.0 {
        let b = a + TAU;
        if b >= TAU {
            0.0
        } else {
            b
        }
    } else {
        a
    }
}

/// Intersections of two curves as `(point, param on a, param on b)`.
/// Tangential contacts and coincident curves yield nothing.
pub fn intersect(a: &Curve, b: &Curve) -> Vec<(V2, f64, f64)> {
    match (*a, *b) {
        (Curve::Line { origin: o1, dir: d1 }, Curve::Line { origin: o2, dir: d2 }) => {
            let den = d1.cross(d2);
            if den == 0.0 {
                return Vec::new();
            }
            let w = o2 - o1;
            let t = w.cross(d2) / den;
            let s = w.cross(d1) / den;
            vec![(o1 + d1 * t, t, s)]
        }
        (Curve::Line { origin, dir }, Curve::Circle { center, radius }) => line_circle(origin, dir, center, radius)
            .into_iter()
            .map(|t| {
                let p = origin + dir * t;
                (p, t, angle_of(p - center))
            })
            .collect(),
        (Curve::Circle { .. }, Curve::Line { .. }) => intersect(b, a).into_iter().map(|(p, s, t)| (p, t, s)).collect(),
        (Curve::Circle { center: c1, radius: r1 }, Curve::Circle { center: c2, radius: r2 }) => {
            let dv = c2 - c1;
            let d = dv.norm();
            if d == 0.0 || d > r1 + r2 || d < (r1 - r2).abs() {
                return Vec::new();
            }
            let e = dv * (1.0 / d);
            let along = (r1 * r1 - r2 * r2 + d * d) / (2.0 * d);
            let h2 = r1 * r1 - along * along;
            if h2 <= 0.0 {
                return Vec::new();
            }
            let h = h2.sqrt();
            let foot = c1 + e * along;
            [foot - e.perp() * h, foot + e.perp() * h]
                .into_iter()
                .map(|p| (p, angle_of(p - c1), angle_of(p - c2)))
                .collect()
        }
    }
}

/// Line parameters where `origin + t dir` meets the circle.
fn line_circle(origin: V2, dir: V2, center: V2, radius: f64) -> Vec<f64> {
    let t0 = (center - origin).dot(dir);
    let foot = origin + dir * t0;
    let off = foot.dist(center);
    let h2 = (radius - off) * (radius + off);
    if h2 <= 0.0 {
        return Vec::new();
    }
    let h = h2.sqrt();
    vec![t0 - h, t0 + h]
}

/// Tag recording where a piece came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Source {
    /// One of the four clip-box sides.
    Box,
    /// Bisector of two sites.
    Bisector(u32, u32),
    /// Bounding line of a site's visible half-plane.
    Visibility(u32),
}

/// A curve restricted to a parameter interval `[t0, t1]`; circles may wrap
/// (`t1 > 2pi`) and a full circle has `t1 = t0 + 2pi`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Piece {
    pub curve: Curve,
    pub t0: f64,
    pub t1: f64,
    pub source: Source,
}

impl Piece {
    pub fn new(curve: Curve, t0: f64, t1: f64, source: Source) -> Piece {
        Piece { curve, t0, t1, source }
    }

    pub fn full_circle(curve: Curve, source: Source) -> Piece {
        Piece::new(curve, 0.0, TAU, source)
    }

    pub fn is_full_circle(&self) -> bool {
        self.curve.is_closed() && self.t1 - self.t0 >= TAU
    }

    pub fn start(&self) -> V2 {
        self.curve.point(self.t0)
    }

    pub fn end(&self) -> V2 {
        self.curve.point(self.t1)
    }

    /// Maps a raw parameter (circle angle in `[0, 2pi)`) into the piece's
    /// range, allowing `ptol` slack at both ends.
    pub fn locate_param(&self, t: f64, ptol: f64) -> Option<f64> {
        if !self.curve.is_closed() {
            return (t >= self.t0 - ptol && t <= self.t1 + ptol).then_some(t);
        }
        let mut u = self.t0 + (t - self.t0).rem_euclid(TAU);
        if u > self.t1 + ptol {
            if u - TAU >= self.t0 - ptol {
                u -= TAU;
            } else {
                return None;
            }
        }
        Some(u)
    }

    pub fn bbox(&self) -> Rect {
        let mut r = Rect::empty();
        match self.curve {
            Curve::Line { .. } => {
                r.include(self.start());
                r.include(self.end());
            }
            Curve::Circle { center, radius } => {
                if self.is_full_circle() {
                    r.include(center - V2::new(radius, radius));
                    r.include(center + V2::new(radius, radius));
                } else {
                    r.include(self.start());
                    r.include(self.end());
                    for q in 0..8 {
                        let a = q as f64 * TAU / 4.0;
                        if a > self.t0 && a < self.t1 {
                            r.include(self.curve.point(a));
                        }
                    }
                }
            }
        }
        r
    }

    /// Distance from `p` to the piece.
    pub fn distance(&self, p: V2) -> f64 {
        match self.curve {
            Curve::Line { origin, dir } => {
                let t = (p - origin).dot(dir).clamp(self.t0, self.t1);
                p.dist(origin + dir * t)
            }
            Curve::Circle { center, radius } => {
                if self.locate_param(angle_of(p - center), 0.0).is_some() {
                    (p.dist(center) - radius).abs()
                } else {
                    p.dist(self.start()).min(p.dist(self.end()))
                }
            }
        }
    }

    /// Distances `s > min_s` at which the ray `origin + s dir` (unit `dir`)
    /// meets the piece.
    pub fn ray_hits(&self, origin: V2, dir: V2, min_s: f64) -> Vec<(f64, f64)> {
        let ray = Curve::Line { origin, dir };
        let ptol = self.curve.param_tol(1e-12 * (1.0 + origin.max_abs()));
        intersect(&ray, &self.curve)
            .into_iter()
            .filter(|&(_, s, _)| s > min_s)
            .filter_map(|(_, s, t)| self.locate_param(t, ptol).map(|u| (s, u)))
            .collect()
    }

    /// Sub-pieces lying inside `rect`.
    pub fn clip(&self, rect: &Rect) -> Vec<Piece> {
        match self.curve {
            Curve::Line { origin, dir } => clip_line(origin, dir, self.t0, self.t1, rect)
                .map(|(a, b)| vec![Piece::new(self.curve, a, b, self.source)])
                .unwrap_or_default(),
            Curve::Circle { .. } => {
                let sides = rect_sides(rect);
                let mut cuts: Vec<f64> = Vec::new();
                for side in &sides {
                    for (_, _, t) in intersect(&side.curve, &self.curve) {
                        if let Some(u) = self.locate_param(t, 0.0) {
                            cuts.push(u);
                        }
                    }
                }
                cuts.push(self.t0);
                cuts.push(self.t1);
                cuts.sort_by(f64::total_cmp);
                cuts.dedup();
                let mut out: Vec<Piece> = Vec::new();
                for w in cuts.windows(2) {
                    if w[1] - w[0] <= 0.0 {
                        continue;
                    }
                    let mid = self.curve.point(0.5 * (w[0] + w[1]));
                    if rect.contains(mid) {
                        match out.last_mut() {
                            Some(last) if last.t1 == w[0] => last.t1 = w[1],
                            _ => out.push(Piece::new(self.curve, w[0], w[1], self.source)),
                        }
                    }
                }
                // re-join an arc split at the seam of a full circle
                if self.is_full_circle() && out.len() >= 2 {
                    let first = out[0];
                    let last = *out.last().unwrap();
                    if first.t0 == self.t0 && last.t1 == self.t1 {
                        out.pop();
                        out[0] = Piece::new(self.curve, last.t0, first.t1 + TAU, self.source);
                    }
                }
                out
            }
        }
    }

    pub fn intersects_rect(&self, rect: &Rect) -> bool {
        if !self.bbox().overlaps(rect) {
            return false;
        }
        match self.curve {
            Curve::Line { origin, dir } => clip_line(origin, dir, self.t0, self.t1, rect).is_some(),
            Curve::Circle { .. } => !self.clip(rect).is_empty(),
        }
    }
}

/// Liang-Barsky clipping of a parametrized line to a rectangle.
pub fn clip_line(origin: V2, dir: V2, t0: f64, t1: f64, rect: &Rect) -> Option<(f64, f64)> {
    let (mut lo, mut hi) = (t0, t1);
    for (o, d, min, max) in [(origin.x, dir.x, rect.min.x, rect.max.x), (origin.y, dir.y, rect.min.y, rect.max.y)] {
        if d == 0.0 {
            if o < min || o > max {
                return None;
            }
        } else {
            let (a, b) = ((min - o) / d, (max - o) / d);
            let (a, b) = if a < b { (a, b) } else { (b, a) };
            lo = lo.max(a);
            hi = hi.min(b);
        }
    }
    (lo < hi).then_some((lo, hi))
}

/// The four sides of `rect`, traversed counter-clockwise.
pub fn rect_sides(rect: &Rect) -> [Piece; 4] {
    let (w, h) = (rect.width(), rect.height());
    [
        Piece::new(Curve::line(rect.min, V2::new(1.0, 0.0)), 0.0, w, Source::Box),
        Piece::new(Curve::line(V2::new(rect.max.x, rect.min.y), V2::new(0.0, 1.0)), 0.0, h, Source::Box),
        Piece::new(Curve::line(rect.max, V2::new(-1.0, 0.0)), 0.0, w, Source::Box),
        Piece::new(Curve::line(V2::new(rect.min.x, rect.max.y), V2::new(0.0, -1.0)), 0.0, h, Source::Box),
    ]
}

/// Signed area between the traversal `from -> to` along `curve` and its
/// chord; zero for lines.
pub fn segment_area(curve: &Curve, from: f64, to: f64) -> f64 {
    match *curve {
        Curve::Line { .. } => 0.0,
        Curve::Circle { radius, .. } => {
            let d = to - from;
            // d - sin d without cancellation for small arcs
            let excess = if d.abs() < 1e-2 {
                let d2 = d * d;
                d * d2 / 6.0 * (1.0 - d2 / 20.0 * (1.0 - d2 / 42.0))
            } else {
                d - d.sin()
            };
            0.5 * radius * radius * excess
        }
    }
}

/// Leftmost point of the traversal `from -> to`.
pub fn leftmost_point(curve: &Curve, from: f64, to: f64) -> V2 {
    let (a, b) = if from < to { (from, to) } else { (to, from) };
    let mut best = curve.point(a);
    let pb = curve.point(b);
    if pb.x < best.x {
        best = pb;
    }
    if let Curve::Circle { .. } = curve {
        let mut k = ((a - std::f64::consts::PI) / TAU).ceil();
        loop {
            let th = std::f64::consts::PI + k * TAU;
            if th >= b {
                break;
            }
            if th > a {
                let p = curve.point(th);
                if p.x < best.x {
                    best = p;
                }
            }
            k += 1.0;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle_circle_unit() {
        let a = Curve::circle(V2::new(0.0, 0.0), 1.0);
        let b = Curve::circle(V2::new(1.0, 0.0), 1.0);
        let mut pts: Vec<V2> = intersect(&a, &b).into_iter().map(|x| x.0).collect();
        pts.sort_by(|p, q| p.y.total_cmp(&q.y));
        assert!((pts[0].x - 0.5).abs() < 1e-15 && (pts[0].y + 0.75f64.sqrt()).abs() < 1e-15);
        assert!((pts[1].x - 0.5).abs() < 1e-15 && (pts[1].y - 0.75f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn params_are_consistent() {
        let a = Curve::line(V2::new(0.3, -1.0), V2::new(0.2, 1.0));
        let b = Curve::circle(V2::new(0.5, 0.2), 0.7);
        for (p, t, s) in intersect(&a, &b) {
            assert!(a.point(t).dist(p) < 1e-12);
            assert!(b.point(s).dist(p) < 1e-12);
        }
    }

    #[test]
    fn clip_circle_to_rect() {
        let c = Curve::circle(V2::new(0.0, 0.0), 1.0);
        let rect = Rect::new(V2::new(0.0, -2.0), V2::new(2.0, 2.0));
        let arcs = Piece::full_circle(c, Source::Box).clip(&rect);
        assert_eq!(arcs.len(), 1);
        let arc = arcs[0];
        assert!((arc.t1 - arc.t0 - std::f64::consts::PI).abs() < 1e-12);
        assert!(arc.curve.point(0.5 * (arc.t0 + arc.t1)).x > 0.9);
    }

    #[test]
    fn circle_area_is_positive_ccw() {
        let c = Curve::circle(V2::new(3.0, -2.0), 2.0);
        let a = segment_area(&c, 0.0, TAU);
        assert!((a - std::f64::consts::PI * 4.0).abs() < 1e-12);
        assert!(segment_area(&c, TAU, 0.0) < 0.0);
    }

    #[test]
    fn small_segment_matches_closed_form() {
        let c = Curve::circle(V2::new(0.0, 0.0), 40.0);
        for d in [3e-3, 9.9e-3, 0.5] {
            let exact = 0.5 * 1600.0 * (d - f64::sin(d));
            let got = segment_area(&c, 1.0, 1.0 + d);
            assert!((got - exact).abs() <= 1e-7 * exact);
        }
        let tiny = segment_area(&c, 1.0, 1.0 + 1e-7);
        assert!((tiny / (800.0 * 1e-21 / 6.0) - 1.0).abs() < 1e-8);
    }

    #[test]
    fn apollonius_bisector_points() {
        let c = Curve::bisector(V2::new(0.0, 0.0), 1.0, V2::new(3.0, 0.0), 2.0);
        match c {
            Curve::Circle { center, radius } => {
                assert!(center.dist(V2::new(4.0, 0.0)) < 1e-15);
                assert!((radius - 2.0).abs() < 1e-15);
            }
            _ => panic!("expected a circle"),
        }
    }
}
