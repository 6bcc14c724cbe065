//! SVG output for any [`PlanarDiagram`].
//!
//! The view window (the unit square unless given) maps onto a 1000 x 1000
//! viewBox with the y axis pointing up. Circular edges become arc segments.

use std::f64::consts::{PI, TAU};
use std::fmt::Write as _;

use crate::geom::{Curve, Rect, V2};

use super::{FaceLabel, PlanarDiagram};

const SIZE: f64 = 1000.0;

struct View {
    win: Rect,
    sx: f64,
    sy: f64,
}

impl View {
    fn new(win: Rect) -> View {
        View { win, sx: SIZE / win.width(), sy: SIZE / win.height() }
    }

    fn map(&self, p: V2) -> (f64, f64) {
        ((p.x - self.win.min.x) * self.sx, (self.win.max.y - p.y) * self.sy)
    }
}

fn num(v: f64) -> String {
    let s = format!("{v:.3}");
    if s == "-0.000" {
        "0.000".to_string()
    } else {
        s
    }
}

/// Stable color for a face label.
pub fn label_color(label: &FaceLabel) -> String {
    if *label == FaceLabel::NotVisible {
        return "#d0d0d0".to_string();
    }
    let key = format!("{label:?}");
    let mut h: u64 = 0xcbf29ce484222325;
    for b in key.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    let ch = |shift: u32| 110 + ((h >> shift) % 130) as u8;
    format!("#{:02x}{:02x}{:02x}", ch(0), ch(21), ch(42))
}

/// Appends the path commands drawing `curve` from parameter `from` to `to`,
/// assuming the pen already sits at the start point.
fn trace(out: &mut String, view: &View, curve: &Curve, from: f64, to: f64) {
    match *curve {
        Curve::Line { .. } => {
            let (x, y) = view.map(curve.point(to));
            let _ = write!(out, "L{} {}", num(x), num(y));
        }
        Curve::Circle { radius, .. } => {
            let (rx, ry) = (radius * view.sx, radius * view.sy);
            let delta = to - from;
            let steps = if delta.abs() >= TAU - 1e-12 { 2 } else { 1 };
            for s in 1..=steps {
                let t = from + delta * s as f64 / steps as f64;
                let (x, y) = view.map(curve.point(t));
                let large = (delta.abs() / steps as f64 > PI) as u8;
                let sweep = (delta > 0.0) as u8;
                let _ = write!(out, "A{} {} 0 {} {} {} {}", num(rx), num(ry), large, sweep, num(x), num(y));
            }
        }
    }
}

fn move_to(out: &mut String, view: &View, p: V2) {
    let (x, y) = view.map(p);
    let _ = write!(out, "M{} {}", num(x), num(y));
}

/// Renders `d` over `window`, or over the unit square when `None`.
pub fn render_svg(d: &PlanarDiagram, window: Option<Rect>) -> String {
    let view = View::new(window.unwrap_or_else(Rect::unit));
    let arr = d.arrangement();
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {s} {s}\" width=\"{s}\" height=\"{s}\">",
        s = SIZE as u32
    );
    let _ = writeln!(
        out,
        "<defs><clipPath id=\"view\"><rect x=\"0\" y=\"0\" width=\"{s}\" height=\"{s}\"/></clipPath></defs>",
        s = SIZE as u32
    );
    let _ = writeln!(out, "<rect x=\"0\" y=\"0\" width=\"{s}\" height=\"{s}\" fill=\"white\"/>", s = SIZE as u32);
    let _ = writeln!(out, "<g clip-path=\"url(#view)\">");

    let _ = writeln!(out, "<g stroke=\"none\" fill-rule=\"evenodd\">");
    for f in 0..arr.faces.len() as u32 {
        let Some(label) = d.raw_face_label(f) else { continue };
        let mut bbox = Rect::empty();
        let mut path = String::new();
        for &c in &arr.faces[f as usize] {
            let hs = arr.cycle_half_edges(c);
            move_to(&mut path, &view, arr.vertices[arr.half_edges[hs[0] as usize].origin as usize].pos);
            for h in hs {
                let he = &arr.half_edges[h as usize];
                bbox = bbox.union(&arr.edge_piece(h as usize / 2).bbox());
                trace(&mut path, &view, arr.curve(h), he.from, he.to);
            }
            path.push('Z');
        }
        if !bbox.overlaps(&view.win) {
            continue;
        }
        let _ = writeln!(out, "<path fill=\"{}\" d=\"{}\"/>", label_color(label), path);
    }
    let _ = writeln!(out, "</g>");

    let _ = writeln!(out, "<g fill=\"none\" stroke=\"black\" stroke-width=\"1.5\">");
    for e in d.kept_edges() {
        let p = arr.edge_piece(e);
        if !p.intersects_rect(&view.win) {
            continue;
        }
        let mut path = String::new();
        move_to(&mut path, &view, p.start());
        trace(&mut path, &view, &p.curve, p.t0, p.t1);
        let _ = writeln!(out, "<path d=\"{path}\"/>");
    }
    let _ = writeln!(out, "</g>");

    let _ = writeln!(out, "<g fill=\"black\" stroke=\"none\">");
    for i in 0..d.sites().len() {
        let p = d.sites().pos(i);
        if !view.win.contains(p) {
            continue;
        }
        let (x, y) = view.map(p);
        let _ = writeln!(out, "<circle cx=\"{}\" cy=\"{}\" r=\"3\"/>", num(x), num(y));
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, "</g>");
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{build_multiplicative, build_standard};
    use crate::geom::SiteSet;

    fn sites(w: &[f64]) -> SiteSet {
        SiteSet::from_weighted(&[(0.2, 0.3, w[0]), (0.7, 0.6, w[1]), (0.4, 0.8, w[2])]).unwrap()
    }

    #[test]
    fn deterministic_and_well_formed() {
        let d = build_multiplicative(&sites(&[1.0, 2.0, 1.5]), None).unwrap();
        let a = render_svg(&d, None);
        let b = render_svg(&d, None);
        assert_eq!(a, b);
        assert!(a.starts_with("<svg"));
        assert!(a.trim_end().ends_with("</svg>"));
        assert!(a.contains('A'));
        assert_eq!(a.matches("<circle").count(), 3);
    }

    #[test]
    fn standard_has_no_arcs() {
        let d = build_standard(&sites(&[1.0, 1.0, 1.0])).unwrap();
        let s = render_svg(&d, None);
        assert!(!s.contains('A'));
        assert!(s.contains("<path"));
    }

    #[test]
    fn colors_depend_only_on_label() {
        assert_eq!(label_color(&FaceLabel::Nearest(3)), label_color(&FaceLabel::Nearest(3)));
        assert_ne!(label_color(&FaceLabel::Nearest(3)), label_color(&FaceLabel::Nearest(4)));
    }
}
