//! Exact weighted bisectors.
//!
//! Squaring `w_i |x - s_i| = w_j |x - s_j|` gives
//! `(w_i^2 - w_j^2)|x|^2 - 2 (w_i^2 s_i - w_j^2 s_j) . x + (w_i^2 |s_i|^2 - w_j^2 |s_j|^2) = 0`,
//! so rational inputs produce rational line coefficients or a rational
//! center and squared radius.

use num_traits::{Signed, ToPrimitive, Zero};

use super::curve::{self, Curve};
use super::point::{Point2, V2};
use super::rational::Rational;
use super::site::WeightedSite;
use crate::error::{GenvorError, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BisectorCurve {
    /// `a x + b y = c`, normalized so the first non-zero of `(a, b)` is 1.
    Line {
        a: Rational,
        b: Rational,
        c: Rational,
    },
    Circle {
        center: Point2,
        radius2: Rational,
    },
}

/// Result of intersecting two bisector curves.
#[derive(Clone, Debug, PartialEq)]
pub enum Intersection {
    Points(Vec<V2>),
    Overlap,
}

pub fn bisector(si: &WeightedSite, sj: &WeightedSite) -> Result<BisectorCurve> {
    if si.pos == sj.pos {
        return Err(GenvorError::CoincidentSites(si.id, sj.id));
    }
    let (xi, yi, xj, yj) = (&si.pos.x, &si.pos.y, &sj.pos.x, &sj.pos.y);
    if si.weight == sj.weight {
        let a: Rational = (xj - xi) * Rational::from_integer(2.into());
        let b: Rational = (yj - yi) * Rational::from_integer(2.into());
        let c: Rational = (xj * xj + yj * yj) - (xi * xi + yi * yi);
        let lead = if !a.is_zero() { a.clone() } else { b.clone() };
        return Ok(BisectorCurve::Line { a: a / &lead, b: b / &lead, c: c / &lead });
    }
    let wi2 = &si.weight * &si.weight;
    let wj2 = &sj.weight * &sj.weight;
    let den = &wi2 - &wj2;
    let cx = (&wi2 * xi - &wj2 * xj) / &den;
    let cy = (&wi2 * yi - &wj2 * yj) / &den;
    let k = (&wi2 * (xi * xi + yi * yi) - &wj2 * (xj * xj + yj * yj)) / &den;
    let radius2 = &cx * &cx + &cy * &cy - k;
    debug_assert!(radius2.is_positive());
    Ok(BisectorCurve::Circle { center: Point2::new(cx, cy), radius2 })
}

impl BisectorCurve {
    pub fn is_line(&self) -> bool {
        matches!(self, BisectorCurve::Line { .. })
    }

    /// Floating-point working copy.
    pub fn to_curve(&self) -> Curve {
        match self {
            BisectorCurve::Line { a, b, c } => {
                let (a, b, c) = (f(a), f(b), f(c));
                let n2 = a * a + b * b;
                Curve::line(V2::new(a * c / n2, b * c / n2), V2::new(-b, a))
            }
            BisectorCurve::Circle { center, radius2 } => Curve::circle(center.to_v2(), f(radius2).sqrt()),
        }
    }

    /// Exact residual of the defining equation at an exact point.
    pub fn residual(&self, p: &Point2) -> Rational {
        match self {
            BisectorCurve::Line { a, b, c } => a * &p.x + b * &p.y - c,
            BisectorCurve::Circle { center, radius2 } => {
                let dx = &p.x - &center.x;
                let dy = &p.y - &center.y;
                &dx * &dx + &dy * &dy - radius2
            }
        }
    }
}

fn f(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Intersection points sorted lexicographically by `(x, y)`. Line pairs are
/// solved exactly and rounded once; curves involving a circle are solved in
/// floating point.
pub fn intersect(c1: &BisectorCurve, c2: &BisectorCurve) -> Intersection {
    if c1 == c2 {
        return Intersection::Overlap;
    }
    let mut pts = match (c1, c2) {
        (BisectorCurve::Line { a: a1, b: b1, c: k1 }, BisectorCurve::Line { a: a2, b: b2, c: k2 }) => {
            let det = a1 * b2 - a2 * b1;
            if det.is_zero() {
                Vec::new()
            } else {
                let x = (k1 * b2 - k2 * b1) / &det;
                let y = (a1 * k2 - a2 * k1) / &det;
                vec![V2::new(f(&x), f(&y))]
            }
        }
        _ => curve::intersect(&c1.to_curve(), &c2.to_curve()).into_iter().map(|(p, _, _)| p).collect(),
    };
    pts.sort_by(|p, q| p.x.total_cmp(&q.x).then(p.y.total_cmp(&q.y)));
    Intersection::Points(pts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::rational::rat_int;

    fn line(a: i64, b: i64, c: i64) -> BisectorCurve {
        BisectorCurve::Line { a: rat_int(a), b: rat_int(b), c: rat_int(c) }
    }

    #[test]
    fn equal_weights_give_perpendicular_bisector() {
        let b = bisector(&WeightedSite::unit(0, 0.0, 0.0), &WeightedSite::unit(1, 2.0, 0.0)).unwrap();
        assert_eq!(b, line(1, 0, 1));
        let b = bisector(&WeightedSite::unit(0, 0.0, 0.0), &WeightedSite::unit(1, 0.0, 4.0)).unwrap();
        assert_eq!(b, line(0, 1, 2));
    }

    #[test]
    fn apollonius_circle_oracle() {
        let si = WeightedSite::weighted(0, 0.0, 0.0, 1.0);
        let sj = WeightedSite::weighted(1, 3.0, 0.0, 2.0);
        let b = bisector(&si, &sj).unwrap();
        assert_eq!(b, BisectorCurve::Circle { center: Point2::new(rat_int(4), rat_int(0)), radius2: rat_int(4) });
        let c = b.to_curve();
        for k in 0..8 {
            let x = c.point(k as f64 * std::f64::consts::TAU / 8.0);
            let lhs = 1.0 * x.dist(V2::new(0.0, 0.0));
            let rhs = 2.0 * x.dist(V2::new(3.0, 0.0));
            assert!((lhs - rhs).abs() <= 1e-12, "{lhs} vs {rhs}");
        }
    }

    #[test]
    fn coincident_sites_rejected() {
        let e = bisector(&WeightedSite::unit(0, 1.0, 1.0), &WeightedSite::weighted(1, 1.0, 1.0, 2.0));
        assert!(matches!(e, Err(GenvorError::CoincidentSites(0, 1))));
    }

    #[test]
    fn intersection_examples() {
        assert_eq!(intersect(&line(1, 0, 1), &line(0, 1, 2)), Intersection::Points(vec![V2::new(1.0, 2.0)]));
        let unit = BisectorCurve::Circle { center: Point2::from_f64(0.0, 0.0), radius2: rat_int(1) };
        assert_eq!(intersect(&unit, &line(1, 0, 2)), Intersection::Points(vec![]));
        assert_eq!(intersect(&unit, &unit), Intersection::Overlap);
        let other = BisectorCurve::Circle { center: Point2::from_f64(1.0, 0.0), radius2: rat_int(1) };
        let Intersection::Points(pts) = intersect(&unit, &other) else { panic!() };
        assert_eq!(pts.len(), 2);
        let h = 0.75f64.sqrt();
        assert!((pts[0].x - 0.5).abs() < 1e-12 && (pts[0].y + h).abs() < 1e-12);
        assert!((pts[1].x - 0.5).abs() < 1e-12 && (pts[1].y - h).abs() < 1e-12);
        for p in pts {
            assert!((p.x * p.x + p.y * p.y - 1.0).abs() <= 1e-12);
            assert!(((p.x - 1.0).powi(2) + p.y * p.y - 1.0).abs() <= 1e-12);
        }
    }
}
