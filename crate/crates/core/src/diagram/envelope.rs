//! Candidate curves for the scalable construction.
//!
//! For each bisector (and each visibility line of a semi diagram) only the
//! parameters where fewer than `thr` competing sites are strictly closer
//! survive: `thr = 1` for nearest-site kinds and `thr = k` for order-k kinds.
//! Competitors are visited in rings of a uniform grid around the curve, so
//! fully covered curves are discarded after a handful of sites.

use std::f64::consts::{PI, TAU};

use crate::geom::curve::intersect;
use crate::geom::{Curve, Piece, Rect, SiteSet, Source, V2};

use super::reference::clip_box;
use super::DiagramKind;

type Iv = (f64, f64);

/// Open intervals where `a t^2 + b t + c < 0`.
fn quad_negative(a: f64, b: f64, c: f64, out: &mut Vec<Iv>) {
    if a == 0.0 {
        if b == 0.0 {
            if c < 0.0 {
                out.push((f64::NEG_INFINITY, f64::INFINITY));
            }
        } else if b > 0.0 {
            out.push((f64::NEG_INFINITY, -c / b));
        } else {
            out.push((-c / b, f64::INFINITY));
        }
        return;
    }
    let disc = b * b - 4.0 * a * c;
    if disc <= 0.0 {
        if a < 0.0 {
            out.push((f64::NEG_INFINITY, f64::INFINITY));
        }
        return;
    }
    let q = -0.5 * (b + b.signum() * disc.sqrt());
    let (mut r1, mut r2) = if q == 0.0 {
        let h = (-c / a).abs().sqrt();
        (-h, h)
    } else {
        (q / a, c / q)
    };
    if r1 > r2 {
        std::mem::swap(&mut r1, &mut r2);
    }
    if a > 0.0 {
        out.push((r1, r2));
    } else {
        out.push((f64::NEG_INFINITY, r1));
        out.push((r2, f64::INFINITY));
    }
}

/// Angles in `[0, 2pi)` where `alpha + rho cos(theta - phi) < 0`.
fn cos_negative(alpha: f64, rho: f64, phi: f64, out: &mut Vec<Iv>) {
    if alpha >= rho {
        return;
    }
    if alpha <= -rho {
        out.push((0.0, TAU));
        return;
    }
    let delta = (-alpha / rho).acos();
    let a = (phi + delta).rem_euclid(TAU);
    let b = a + 2.0 * (PI - delta);
    if b <= TAU {
        out.push((a, b));
    } else {
        out.push((a, TAU));
        out.push((0.0, b - TAU));
    }
}

fn intersect_sets(xs: &[Iv], ys: &[Iv], out: &mut Vec<Iv>) {
    for &(a, b) in xs {
        for &(c, d) in ys {
            let (lo, hi) = (a.max(c), b.min(d));
            if lo < hi {
                out.push((lo, hi));
            }
        }
    }
}

/// Maximal stretches of `[lo, hi]` covered by fewer than `thr` intervals.
fn free_intervals(ivs: &[Iv], lo: f64, hi: f64, thr: usize) -> Vec<Iv> {
    let mut ev: Vec<(f64, i32)> = Vec::with_capacity(2 * ivs.len());
    for &(a, b) in ivs {
        ev.push((a, 1));
        ev.push((b, -1));
    }
    ev.sort_by(|x, y| x.0.total_cmp(&y.0).then(y.1.cmp(&x.1)));
    let thr = thr as i32;
    let mut depth = 0;
    let mut from = Some(lo);
    let mut out = Vec::new();
    for (p, d) in ev {
        let before = depth < thr;
        depth += d;
        let after = depth < thr;
        if before && !after {
            if let Some(s) = from.take() {
                if p > s {
                    out.push((s, p));
                }
            }
        } else if !before && after {
            from = Some(p);
        }
    }
    if let Some(s) = from {
        if hi > s {
            out.push((s, hi));
        }
    }
    out
}

/// A candidate curve with its reference site `i` (whose distance equals the
/// curve's level) and the sites excluded from blocking.
struct Target {
    curve: Curve,
    source: Source,
    i: usize,
    j: Option<usize>,
    /// Point the curve stays close to, used to order competitors.
    anchor: V2,
}

struct Grid {
    rect: Rect,
    cell: f64,
    g: usize,
    cells: Vec<Vec<u32>>,
}

impl Grid {
    fn new(pos: &[V2]) -> Grid {
        let mut rect = Rect::empty();
        for &p in pos {
            rect.include(p);
        }
        let g = ((pos.len() as f64).sqrt().ceil() as usize).max(1);
        let cell = (rect.width().max(rect.height()) / g as f64).max(1e-12);
        let mut grid = Grid { rect, cell, g, cells: vec![Vec::new(); g * g] };
        for (k, &p) in pos.iter().enumerate() {
            let (cx, cy) = grid.cell_of(p);
            grid.cells[cy * g + cx].push(k as u32);
        }
        grid
    }

    fn cell_of(&self, p: V2) -> (usize, usize) {
        let f = |v: f64, m: f64| (((v - m) / self.cell).floor().max(0.0) as usize).min(self.g - 1);
        (f(p.x, self.rect.min.x), f(p.y, self.rect.min.y))
    }

    /// Visits cells at Chebyshev distance exactly `r` from `(cx, cy)`;
    /// false when none of them lies in the grid.
    fn ring(&self, cx: usize, cy: usize, r: usize, mut f: impl FnMut(&[u32])) -> bool {
        let (cx, cy, r, g) = (cx as i64, cy as i64, r as i64, self.g as i64);
        let inside = |v: i64| (0..g).contains(&v);
        let mut any = false;
        let mut visit = |x: i64, y: i64, any: &mut bool| {
            if inside(x) && inside(y) {
                *any = true;
                f(&self.cells[(y * g + x) as usize]);
            }
        };
        if r == 0 {
            visit(cx, cy, &mut any);
            return any;
        }
        for x in cx - r..=cx + r {
            visit(x, cy - r, &mut any);
            visit(x, cy + r, &mut any);
        }
        for y in cy - r + 1..cy + r {
            visit(cx - r, y, &mut any);
            visit(cx + r, y, &mut any);
        }
        any
    }
}

struct Ctx<'a> {
    sites: &'a SiteSet,
    weighted: bool,
    semi: bool,
    thr: usize,
    grid: Grid,
    lightest: Vec<usize>,
    w_min: f64,
    stamp: Vec<u32>,
    gen: u32,
}

impl Ctx<'_> {
    fn visible_set(&self, k: usize, curve: &Curve, out: &mut Vec<Iv>) {
        let Curve::Line { origin, dir } = *curve else {
            out.push((f64::NEG_INFINITY, f64::INFINITY));
            return;
        };
        if !self.semi || self.sites.constraints().is_none() {
            out.push((f64::NEG_INFINITY, f64::INFINITY));
            return;
        }
        let n = self.sites.normal(k);
        let a = n.dot(origin - self.sites.pos(k));
        let b = n.dot(dir);
        if b == 0.0 {
            if a >= 0.0 {
                out.push((f64::NEG_INFINITY, f64::INFINITY));
            }
        } else if b > 0.0 {
            out.push((-a / b, f64::INFINITY));
        } else {
            out.push((f64::NEG_INFINITY, -a / b));
        }
    }

    /// Where site `k` is strictly closer (and visible) than the reference.
    fn blocked(&self, t: &Target, k: usize, out: &mut Vec<Iv>) {
        let (pos, w) = (self.sites.positions(), self.sites.weights());
        let (wi, wk) = if self.weighted { (w[t.i], w[k]) } else { (1.0, 1.0) };
        let (wi2, wk2) = (wi * wi, wk * wk);
        let (si, sk) = (pos[t.i], pos[k]);
        let mut closer = Vec::new();
        match t.curve {
            Curve::Line { origin, dir } => {
                let (ok, oi) = (origin - sk, origin - si);
                let a = wk2 - wi2;
                let b = 2.0 * (wk2 * ok.dot(dir) - wi2 * oi.dot(dir));
                let c = wk2 * ok.norm2() - wi2 * oi.norm2();
                quad_negative(a, b, c, &mut closer);
            }
            Curve::Circle { center, radius } => {
                let (ck, ci) = (center - sk, center - si);
                let r2 = radius * radius;
                let alpha = (wk2 - wi2) * r2 + wk2 * ck.norm2() - wi2 * ci.norm2();
                let v = ck * wk2 - ci * wi2;
                cos_negative(alpha, 2.0 * radius * v.norm(), v.y.atan2(v.x), &mut closer);
            }
        }
        if self.semi && self.sites.constraints().is_some() {
            let mut vis = Vec::new();
            self.visible_set(k, &t.curve, &mut vis);
            intersect_sets(&closer, &vis, out);
        } else {
            out.extend(closer);
        }
    }

    fn domain(curve: &Curve) -> (f64, f64) {
        match curve {
            Curve::Line { .. } => (f64::NEG_INFINITY, f64::INFINITY),
            Curve::Circle { .. } => (0.0, TAU),
        }
    }

    /// Largest distance from `anchor` to a point of `free`, or `None` when
    /// some interval is unbounded.
    fn reach(t: &Target, free: &[Iv]) -> Option<f64> {
        match t.curve {
            Curve::Line { .. } => {
                let mut d: f64 = 0.0;
                for &(a, b) in free {
                    if !a.is_finite() || !b.is_finite() {
                        return None;
                    }
                    d = d.max(t.curve.point(a).dist(t.anchor)).max(t.curve.point(b).dist(t.anchor));
                }
                Some(d)
            }
            Curve::Circle { center, radius } => Some(center.dist(t.anchor) + radius),
        }
    }

    fn envelope(&mut self, t: &Target) -> Vec<Iv> {
        let n = self.sites.len();
        let (lo, hi) = Self::domain(&t.curve);
        let mut ivs: Vec<Iv> = Vec::new();
        if let (true, Some(j)) = (self.semi && self.sites.constraints().is_some(), t.j) {
            // a bisector only matters where both of its sites are visible
            for s in [t.i, j] {
                let mut vis = Vec::new();
                self.visible_set(s, &t.curve, &mut vis);
                let inv = free_intervals(&vis, lo, hi, 1);
                ivs.extend(inv);
            }
        }
        self.gen = self.gen.wrapping_add(1);
        if self.gen == 0 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.gen = 1;
        }
        let gen = self.gen;
        self.stamp[t.i] = gen;
        if let Some(j) = t.j {
            self.stamp[j] = gen;
        }
        let mut seen = 1 + t.j.is_some() as usize;
        if self.weighted {
            for idx in 0..self.lightest.len() {
                let k = self.lightest[idx];
                if self.stamp[k] != gen {
                    self.stamp[k] = gen;
                    seen += 1;
                    self.blocked(t, k, &mut ivs);
                }
            }
        }
        let wi = if self.weighted { self.sites.weight(t.i) } else { 1.0 };
        let si = self.sites.pos(t.i);
        let (cx, cy) = self.grid.cell_of(t.anchor);
        let mut r = 0;
        loop {
            let mut batch: Vec<usize> = Vec::new();
            let any = self.grid.ring(cx, cy, r, |cell| batch.extend(cell.iter().map(|&k| k as usize)));
            for k in batch {
                if self.stamp[k] != gen {
                    self.stamp[k] = gen;
                    seen += 1;
                    self.blocked(t, k, &mut ivs);
                }
            }
            let free = free_intervals(&ivs, lo, hi, self.thr);
            if free.is_empty() || !any || seen >= n {
                return free;
            }
            if let Some(d) = Self::reach(t, &free) {
                // unseen sites are at least r * cell from the anchor
                let lb = r as f64 * self.grid.cell - d;
                let w_lo = if self.weighted { self.w_min } else { 1.0 };
                if lb > 0.0 && w_lo * lb > wi * (d + si.dist(t.anchor)) {
                    return free;
                }
            }
            r += 1;
        }
    }
}

fn to_pieces(t: &Target, free: Vec<Iv>, out: &mut Vec<Piece>) {
    match t.curve {
        Curve::Line { .. } => {
            out.extend(free.into_iter().map(|(a, b)| Piece::new(t.curve, a, b, t.source)));
        }
        Curve::Circle { .. } => {
            let mut free = free;
            if free.len() == 1 && free[0].0 <= 0.0 && free[0].1 >= TAU {
                out.push(Piece::full_circle(t.curve, t.source));
                return;
            }
            if free.len() >= 2 && free[0].0 <= 0.0 && free[free.len() - 1].1 >= TAU {
                let first = free.remove(0);
                let last = free.last_mut().unwrap();
                last.1 = first.1 + TAU;
            }
            out.extend(free.into_iter().map(|(a, b)| Piece::new(t.curve, a, b, t.source)));
        }
    }
}

pub fn candidates(kind: DiagramKind, sites: &SiteSet) -> (Rect, Vec<Piece>) {
    let n = sites.len();
    let pos = sites.positions();
    let weighted = kind == DiagramKind::Multiplicative && !sites.has_equal_weights();
    let thr = match kind {
        DiagramKind::OrderK(k) | DiagramKind::OrderKSequence(k) => k,
        _ => 1,
    };
    let mut lightest: Vec<usize> = (0..n).collect();
    lightest.sort_by(|&a, &b| sites.weight(a).total_cmp(&sites.weight(b)).then(a.cmp(&b)));
    lightest.truncate(8);
    let w_min = sites.weights().iter().cloned().fold(f64::INFINITY, f64::min);
    let semi = kind == DiagramKind::Semi;
    let mut ctx = Ctx { sites, weighted, semi, thr, grid: Grid::new(pos), lightest, w_min, stamp: vec![0; n], gen: 0 };

    let mut pieces: Vec<Piece> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let (wi, wj) = if weighted { (sites.weight(i), sites.weight(j)) } else { (1.0, 1.0) };
            let curve = Curve::bisector(pos[i], wi, pos[j], wj);
            let anchor = match curve {
                Curve::Line { origin, .. } => origin,
                Curve::Circle { center, radius } => {
                    // the point of the circle between the two sites
                    let m = (pos[i] + pos[j]) * 0.5;
                    let u = (m - center).unit();
                    center + u * radius
                }
            };
            let t = Target { curve, source: Source::Bisector(i as u32, j as u32), i, j: Some(j), anchor };
            let free = ctx.envelope(&t);
            to_pieces(&t, free, &mut pieces);
        }
    }
    if semi {
        if let Some(cons) = sites.constraints() {
            for (i, c) in cons.iter().enumerate() {
                let curve = Curve::line(pos[i], c.direction());
                let t = Target { curve, source: Source::Visibility(i as u32), i, j: None, anchor: pos[i] };
                let free = ctx.envelope(&t);
                to_pieces(&t, free, &mut pieces);
            }
        }
    }

    let mut r = Rect::empty();
    for &p in pos {
        r.include(p);
    }
    for p in &pieces {
        match p.curve {
            Curve::Line { .. } => {
                for t in [p.t0, p.t1] {
                    if t.is_finite() {
                        r.include(p.curve.point(t));
                    }
                }
            }
            Curve::Circle { .. } => r = r.union(&p.bbox()),
        }
    }
    if thr > 1 {
        // higher-order diagrams can have vertices inside candidate pieces
        for (a, pa) in pieces.iter().enumerate() {
            for pb in &pieces[a + 1..] {
                for (q, ta, tb) in intersect(&pa.curve, &pb.curve) {
                    if pa.locate_param(ta, 0.0).is_some() && pb.locate_param(tb, 0.0).is_some() {
                        r.include(q);
                    }
                }
            }
        }
    }
    (clip_box(&r), pieces)
}
