//! Vertex, edge and face counts of a merged diagram.
//!
//! Finite vertices are merged-subdivision vertices of degree at least three
//! strictly inside the clip box. Every place an edge leaves the box stands
//! for one shared vertex at infinity. Edges are maximal chains through
//! degree-two vertices; a closed curve without vertices is one edge.

use serde::{Deserialize, Serialize};

use crate::geom::{Rect, V2};

use super::PlanarDiagram;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexityReport {
    pub finite_vertices: usize,
    pub infinity_vertex: usize,
    pub edges: usize,
    pub faces: usize,
    pub total: usize,
    pub region: Option<RegionTag>,
}

/// The rectangle counts were restricted to, as `[min_x, min_y, max_x, max_y]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RegionTag(pub [f64; 4]);

impl Eq for RegionTag {}

impl From<Rect> for RegionTag {
    fn from(r: Rect) -> Self {
        RegionTag([r.min.x, r.min.y, r.max.x, r.max.y])
    }
}

impl ComplexityReport {
    fn new(finite_vertices: usize, infinity_vertex: usize, edges: usize, faces: usize, region: Option<Rect>) -> Self {
        ComplexityReport {
            finite_vertices,
            infinity_vertex,
            edges,
            faces,
            total: finite_vertices + infinity_vertex + edges + faces,
            region: region.map(RegionTag::from),
        }
    }
}

impl PlanarDiagram {
    /// Edge chains of the merged subdivision, as lists of arrangement edges.
    pub fn chains(&self) -> Vec<Vec<usize>> {
        let arr = self.arrangement();
        let nv = arr.vertices.len();
        let mut out_kept: Vec<Vec<u32>> = vec![Vec::new(); nv];
        for e in self.kept_edges() {
            for h in [2 * e as u32, 2 * e as u32 + 1] {
                out_kept[arr.half_edges[h as usize].origin as usize].push(h);
            }
        }
        let terminal = |v: usize| out_kept[v].len() != 2 || arr.vertices[v].on_box;
        let mut used = vec![false; arr.edge_count()];
        let mut chains = Vec::new();
        let walk = |mut h: u32, used: &mut Vec<bool>| -> Vec<usize> {
            let mut chain = Vec::new();
            loop {
                let e = (h / 2) as usize;
                if used[e] {
                    break;
                }
                used[e] = true;
                chain.push(e);
                let w = arr.half_edges[(h ^ 1) as usize].origin as usize;
                if terminal(w) {
                    break;
                }
                let twin = h ^ 1;
                h = match out_kept[w].iter().find(|&&g| g != twin) {
                    Some(&g) => g,
                    None => break,
                };
            }
            chain
        };
        for (v, outs) in out_kept.iter().enumerate() {
            if !terminal(v) {
                continue;
            }
            for &h in outs {
                if !used[(h / 2) as usize] {
                    chains.push(walk(h, &mut used));
                }
            }
        }
        for e in self.kept_edges() {
            if !used[e] {
                chains.push(walk(2 * e as u32, &mut used));
            }
        }
        chains
    }

    fn kept_degree(&self) -> Vec<usize> {
        let arr = self.arrangement();
        let mut deg = vec![0usize; arr.vertices.len()];
        for e in self.kept_edges() {
            deg[arr.half_edges[2 * e].origin as usize] += 1;
            deg[arr.half_edges[2 * e + 1].origin as usize] += 1;
        }
        deg
    }

    /// Positions of the finite vertices.
    pub fn finite_vertices(&self) -> Vec<V2> {
        let arr = self.arrangement();
        self.kept_degree()
            .iter()
            .enumerate()
            .filter(|&(v, &d)| d >= 3 && !arr.vertices[v].on_box)
            .map(|(v, _)| arr.vertices[v].pos)
            .collect()
    }

    pub fn complexity(&self, region: Option<Rect>) -> ComplexityReport {
        let arr = self.arrangement();
        let deg = self.kept_degree();
        let chains = self.chains();
        let Some(reg) = region else {
            let finite = self.finite_vertices().len();
            let infinity = arr.vertices.iter().zip(&deg).any(|(v, &d)| v.on_box && d > 0) as usize;
            return ComplexityReport::new(finite, infinity, chains.len(), self.face_count(), None);
        };
        let finite = self.finite_vertices().into_iter().filter(|&p| reg.contains(p)).count();
        let edges = chains.iter().filter(|c| c.iter().any(|&e| arr.edge_piece(e).intersects_rect(&reg))).count();
        let mut hit = vec![false; self.face_count()];
        for e in 0..arr.edge_count() {
            if !arr.edge_piece(e).intersects_rect(&reg) {
                continue;
            }
            for h in [2 * e as u32, 2 * e as u32 + 1] {
                if let Some(m) = self.merged_face_of(arr.face_of(h)) {
                    hit[m as usize] = true;
                }
            }
        }
        if let Some(m) = self.face_at(reg.center()) {
            hit[m as usize] = true;
        }
        let faces = hit.iter().filter(|&&b| b).count();
        ComplexityReport::new(finite, 0, edges, faces, Some(reg))
    }
}
