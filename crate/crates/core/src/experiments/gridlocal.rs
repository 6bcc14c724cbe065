//! Complexity seen by each cell of a `ceil(sqrt n)`-square grid over the
//! unit square.

use serde::{Deserialize, Serialize};

use crate::diagram::PlanarDiagram;
use crate::geom::{Rect, V2};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridLocalReport {
    pub n: usize,
    /// Cells per row; the cell side is `1 / side`.
    pub side: usize,
    /// Row-major per-cell totals: vertices inside plus edges and faces
    /// meeting the cell.
    pub cells: Vec<usize>,
    pub mean: f64,
    pub max: usize,
}

struct Grid {
    g: usize,
}

impl Grid {
    fn cell(&self, ix: usize, iy: usize) -> Rect {
        let s = 1.0 / self.g as f64;
        Rect::new(V2::new(ix as f64 * s, iy as f64 * s), V2::new((ix + 1) as f64 * s, (iy + 1) as f64 * s))
    }

    /// Cells whose closed rectangle may meet `r`.
    fn range(&self, r: &Rect) -> Option<(usize, usize, usize, usize)> {
        let g = self.g as f64;
        let lo = |v: f64| ((v * g).floor() - 1.0).clamp(0.0, g - 1.0) as usize;
        let hi = |v: f64| ((v * g).floor() + 1.0).clamp(0.0, g - 1.0) as usize;
        if r.max.x < 0.0 || r.max.y < 0.0 || r.min.x > 1.0 || r.min.y > 1.0 {
            return None;
        }
        Some((lo(r.min.x), lo(r.min.y), hi(r.max.x), hi(r.max.y)))
    }
}

/// Counts, for each grid cell, the diagram features meeting it. Matches
/// `d.complexity(Some(cell)).total` cell by cell.
pub fn grid_local_complexity(d: &PlanarDiagram, n: usize) -> GridLocalReport {
    let g = ((n.max(1) as f64).sqrt().ceil() as usize).max(1);
    let grid = Grid { g };
    let arr = d.arrangement();
    let mut items: Vec<Vec<(u8, u32)>> = vec![Vec::new(); g * g];

    for p in d.finite_vertices() {
        let r = Rect::new(p, p);
        if let Some((x0, y0, x1, y1)) = grid.range(&r) {
            for iy in y0..=y1 {
                for ix in x0..=x1 {
                    if grid.cell(ix, iy).contains(p) {
                        items[iy * g + ix].push((0, 0));
                    }
                }
            }
        }
    }
    let mark_piece = |e: usize, tag: u8, id: u32, items: &mut Vec<Vec<(u8, u32)>>| {
        let piece = arr.edge_piece(e);
        if let Some((x0, y0, x1, y1)) = grid.range(&piece.bbox()) {
            for iy in y0..=y1 {
                for ix in x0..=x1 {
                    if piece.intersects_rect(&grid.cell(ix, iy)) {
                        items[iy * g + ix].push((tag, id));
                    }
                }
            }
        }
    };
    for (c, chain) in d.chains().iter().enumerate() {
        for &e in chain {
            mark_piece(e, 1, c as u32, &mut items);
        }
    }
    for e in 0..arr.edge_count() {
        let faces: Vec<u32> =
            [2 * e as u32, 2 * e as u32 + 1].iter().filter_map(|&h| d.merged_face_of(arr.face_of(h))).collect();
        for m in faces {
            mark_piece(e, 2, m, &mut items);
        }
    }
    let mut cells = Vec::with_capacity(g * g);
    for iy in 0..g {
        for ix in 0..g {
            let list = &mut items[iy * g + ix];
            if let Some(m) = d.face_at(grid.cell(ix, iy).center()) {
                list.push((2, m));
            }
            let vertices = list.iter().filter(|x| x.0 == 0).count();
            list.retain(|x| x.0 != 0);
            list.sort_unstable();
            list.dedup();
            cells.push(vertices + list.len());
        }
    }
    let mean = cells.iter().sum::<usize>() as f64 / cells.len() as f64;
    let max = cells.iter().copied().max().unwrap_or(0);
    GridLocalReport { n, side: g, cells, mean, max }
}
