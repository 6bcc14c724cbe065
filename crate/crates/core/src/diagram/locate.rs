//! Horizontal-slab bucketing of curve pieces for ray shooting and
//! proximity queries.

use crate::geom::{Piece, Rect, V2};

#[derive(Clone, Debug)]
pub struct EdgeIndex {
    ids: Vec<u32>,
    pieces: Vec<Piece>,
    boxes: Vec<Rect>,
    y0: f64,
    inv_dy: f64,
    slabs: Vec<Vec<u32>>,
}

impl EdgeIndex {
    pub fn new(rect: Rect, items: Vec<(u32, Piece)>) -> EdgeIndex {
        let count = ((items.len() as f64).sqrt() * 2.0).clamp(1.0, 2048.0) as usize;
        let height = rect.height().max(f64::MIN_POSITIVE);
        let mut idx = EdgeIndex {
            ids: Vec::with_capacity(items.len()),
            pieces: Vec::with_capacity(items.len()),
            boxes: Vec::with_capacity(items.len()),
            y0: rect.min.y,
            inv_dy: count as f64 / height,
            slabs: vec![Vec::new(); count],
        };
        for (k, (id, p)) in items.into_iter().enumerate() {
            let b = p.bbox();
            let (lo, hi) = idx.slab_range(b.min.y, b.max.y);
            for s in &mut idx.slabs[lo..=hi] {
                s.push(k as u32);
            }
            idx.ids.push(id);
            idx.pieces.push(p);
            idx.boxes.push(b);
        }
        idx
    }

    fn slab_of(&self, y: f64) -> usize {
        let s = ((y - self.y0) * self.inv_dy).floor();
        if s.is_nan() || s < 0.0 {
            0
        } else {
            (s as usize).min(self.slabs.len() - 1)
        }
    }

    fn slab_range(&self, lo: f64, hi: f64) -> (usize, usize) {
        (self.slab_of(lo), self.slab_of(hi))
    }

    /// Nearest piece hit by the ray from `p` towards `+x`: `(id, s, u)` with
    /// distance `s` and curve parameter `u` at the hit.
    pub fn ray_right(&self, p: V2) -> Option<(u32, f64, f64)> {
        let mut best: Option<(u32, f64, f64)> = None;
        for &k in &self.slabs[self.slab_of(p.y)] {
            let b = &self.boxes[k as usize];
            if b.max.x < p.x || p.y < b.min.y || p.y > b.max.y {
                continue;
            }
            for (s, u) in self.pieces[k as usize].ray_hits(p, V2::new(1.0, 0.0), 0.0) {
                if best.is_none_or(|(_, bs, _)| s < bs) {
                    best = Some((self.ids[k as usize], s, u));
                }
            }
        }
        best
    }

    /// True iff some piece passes within `eps` of `p`.
    pub fn within(&self, p: V2, eps: f64) -> bool {
        let (lo, hi) = self.slab_range(p.y - eps, p.y + eps);
        let probe = Rect::new(p - V2::new(eps, eps), p + V2::new(eps, eps));
        let mut seen: Vec<u32> = Vec::new();
        for s in lo..=hi {
            for &k in &self.slabs[s] {
                if !self.boxes[k as usize].overlaps(&probe) || (lo != hi && seen.contains(&k)) {
                    continue;
                }
                if self.pieces[k as usize].distance(p) <= eps {
                    return true;
                }
                if lo != hi {
                    seen.push(k);
                }
            }
        }
        false
    }
}
