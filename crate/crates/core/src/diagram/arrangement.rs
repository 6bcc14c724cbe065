//! Half-edge arrangement of line segments and circular arcs inside a clip box.
//!
//! Input pieces are clipped to the box, split at every pairwise crossing,
//! and stitched into a doubly connected edge list whose faces lie to the
//! left of their half-edges. Half-edge `h` and `h ^ 1` are twins.

use crate::geom::curve::{leftmost_point, rect_sides, segment_area, Curve, Piece, Source};
use crate::geom::{Rect, V2};

/// Snapping tolerance at a point; relative for large coordinates.
pub fn snap_tol(p: V2) -> f64 {
    1e-9 * p.max_abs().max(1.0)
}

/// Rough magnitude of the numbers involved in evaluating points on `c`.
pub fn curve_scale(c: &Curve) -> f64 {
    match *c {
        Curve::Line { origin, .. } => origin.max_abs(),
        Curve::Circle { center, radius } => center.max_abs() + radius,
    }
}

#[derive(Clone, Debug)]
pub struct Vertex {
    pub pos: V2,
    pub on_box: bool,
    /// Artificial vertex placed on a circle that nothing else crosses.
    pub anchor: bool,
}

#[derive(Clone, Debug)]
pub struct HalfEdge {
    pub origin: u32,
    pub next: u32,
    pub cycle: u32,
    pub piece: u32,
    pub from: f64,
    pub to: f64,
}

#[derive(Clone, Debug)]
pub struct Cycle {
    pub start: u32,
    pub area: f64,
}

#[derive(Clone, Debug)]
pub struct Arrangement {
    pub rect: Rect,
    /// Clipped input pieces followed by the four box sides.
    pub pieces: Vec<Piece>,
    pub vertices: Vec<Vertex>,
    pub half_edges: Vec<HalfEdge>,
    pub cycles: Vec<Cycle>,
    pub cycle_face: Vec<u32>,
    pub faces: Vec<Vec<u32>>,
    pub outer_face: u32,
    pub components: usize,
}

pub(crate) struct UnionFind(Vec<u32>);

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind((0..n as u32).collect())
    }
    pub(crate) fn find(&mut self, mut x: u32) -> u32 {
        while self.0[x as usize] != x {
            let p = self.0[x as usize];
            self.0[x as usize] = self.0[p as usize];
            x = p;
        }
        x
    }
    pub(crate) fn union(&mut self, a: u32, b: u32) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            self.0[hi as usize] = lo;
        }
    }
}

impl Arrangement {
    pub fn build(rect: Rect, input: &[Piece]) -> Arrangement {
        let mut pieces: Vec<Piece> = input.iter().flat_map(|p| p.clip(&rect)).collect();
        pieces.extend(rect_sides(&rect));
        let n_pieces = pieces.len();

        // candidate vertex points and per-piece split parameters
        let mut pts: Vec<V2> = Vec::new();
        let mut tols: Vec<f64> = Vec::new();
        let mut splits: Vec<Vec<(f64, u32)>> = vec![Vec::new(); n_pieces];
        for (i, p) in pieces.iter().enumerate() {
            if !p.is_full_circle() {
                for t in [p.t0, p.t1] {
                    let q = p.curve.point(t);
                    splits[i].push((t, pts.len() as u32));
                    pts.push(q);
                    tols.push(snap_tol(q) + 1e-14 * curve_scale(&p.curve));
                }
            }
        }
        let boxes: Vec<Rect> = pieces
            .iter()
            .map(|p| {
                let b = p.bbox();
                b.inflate(2.0 * (snap_tol(b.min).max(snap_tol(b.max)) + 1e-14 * curve_scale(&p.curve)))
            })
            .collect();
        let mut order: Vec<usize> = (0..n_pieces).collect();
        order.sort_by(|&a, &b| boxes[a].min.x.total_cmp(&boxes[b].min.x));
        let mut active: Vec<usize> = Vec::new();
        for &i in &order {
            active.retain(|&j| boxes[j].max.x >= boxes[i].min.x);
            for &j in &active {
                if !boxes[i].overlaps(&boxes[j]) || pieces[i].curve == pieces[j].curve {
                    continue;
                }
                let (pa, pb) = (&pieces[i], &pieces[j]);
                let extra = 1e-14 * (curve_scale(&pa.curve) + curve_scale(&pb.curve));
                for (p, ta, tb) in crate::geom::curve::intersect(&pa.curve, &pb.curve) {
                    let tol = snap_tol(p) + extra;
                    let (Some(ua), Some(ub)) =
                        (pa.locate_param(ta, pa.curve.param_tol(tol)), pb.locate_param(tb, pb.curve.param_tol(tol)))
                    else {
                        continue;
                    };
                    let id = pts.len() as u32;
                    pts.push(p);
                    tols.push(tol);
                    splits[i].push((ua, id));
                    splits[j].push((ub, id));
                }
            }
            active.push(i);
        }

        // snap nearby points into vertices; each pair is found from the
        // side with the larger tolerance
        let mut uf = UnionFind::new(pts.len());
        let mut by_x: Vec<u32> = (0..pts.len() as u32).collect();
        by_x.sort_by(|&a, &b| pts[a as usize].x.total_cmp(&pts[b as usize].x));
        for (k, &a) in by_x.iter().enumerate() {
            let (pa, tol) = (pts[a as usize], tols[a as usize]);
            for &b in &by_x[k + 1..] {
                let pb = pts[b as usize];
                if pb.x - pa.x > tol {
                    break;
                }
                if pa.dist(pb) <= tol {
                    uf.union(a, b);
                }
            }
            for &b in by_x[..k].iter().rev() {
                let pb = pts[b as usize];
                if pa.x - pb.x > tol {
                    break;
                }
                if pa.dist(pb) <= tol {
                    uf.union(a, b);
                }
            }
        }
        let mut vid = vec![u32::MAX; pts.len()];
        let mut vertices: Vec<Vertex> = Vec::new();
        for i in 0..pts.len() as u32 {
            let r = uf.find(i);
            if vid[r as usize] == u32::MAX {
                vid[r as usize] = vertices.len() as u32;
                vertices.push(Vertex { pos: pts[r as usize], on_box: false, anchor: false });
            }
            vid[i as usize] = vid[r as usize];
        }

        // edges between consecutive distinct vertices along each piece
        let mut half_edges: Vec<HalfEdge> = Vec::new();
        let push_edge = |piece: usize, u: u32, v: u32, a: f64, b: f64, hes: &mut Vec<HalfEdge>| {
            hes.push(HalfEdge { origin: u, next: 0, cycle: 0, piece: piece as u32, from: a, to: b });
            hes.push(HalfEdge { origin: v, next: 0, cycle: 0, piece: piece as u32, from: b, to: a });
        };
        for (i, p) in pieces.iter().enumerate() {
            let mut list: Vec<(f64, u32)> = splits[i].iter().map(|&(t, id)| (t, vid[id as usize])).collect();
            list.sort_by(|a, b| a.0.total_cmp(&b.0));
            list.dedup_by(|b, a| a.1 == b.1);
            if p.source == Source::Box {
                for &(_, v) in &list {
                    vertices[v as usize].on_box = true;
                }
            }
            let min_span = p.curve.param_tol(snap_tol(p.start()));
            if p.is_full_circle() {
                if list.len() > 1 && list[0].1 == list[list.len() - 1].1 {
                    list.pop();
                }
                if list.is_empty() {
                    let v = vertices.len() as u32;
                    vertices.push(Vertex { pos: p.start(), on_box: false, anchor: true });
                    push_edge(i, v, v, p.t0, p.t1, &mut half_edges);
                    continue;
                }
                for k in 0..list.len() {
                    let (ta, u) = list[k];
                    let (tb, v) =
                        if k + 1 < list.len() { list[k + 1] } else { (list[0].0 + std::f64::consts::TAU, list[0].1) };
                    push_edge(i, u, v, ta, tb, &mut half_edges);
                }
            } else {
                for w in list.windows(2) {
                    let ((ta, u), (tb, v)) = (w[0], w[1]);
                    if u == v && tb - ta <= 4.0 * min_span {
                        continue;
                    }
                    push_edge(i, u, v, ta, tb, &mut half_edges);
                }
            }
        }

        // angular order of outgoing half-edges
        let mut outgoing: Vec<Vec<u32>> = vec![Vec::new(); vertices.len()];
        for (h, he) in half_edges.iter().enumerate() {
            outgoing[he.origin as usize].push(h as u32);
        }
        let key = |h: &HalfEdge| -> (f64, f64) {
            let c = &pieces[h.piece as usize].curve;
            let sgn = if h.to > h.from { 1.0 } else { -1.0 };
            let d = c.tangent(h.from) * sgn;
            (d.y.atan2(d.x), c.curvature() * sgn)
        };
        let mut pos_in = vec![0u32; half_edges.len()];
        for list in &mut outgoing {
            list.sort_by(|&a, &b| {
                let (ka, kb) = (key(&half_edges[a as usize]), key(&half_edges[b as usize]));
                ka.0.total_cmp(&kb.0).then(ka.1.total_cmp(&kb.1))
            });
            for (k, &h) in list.iter().enumerate() {
                pos_in[h as usize] = k as u32;
            }
        }
        for h in 0..half_edges.len() {
            let twin = h ^ 1;
            let dest = half_edges[twin].origin as usize;
            let list = &outgoing[dest];
            let k = pos_in[twin] as usize;
            half_edges[h].next = list[(k + list.len() - 1) % list.len()];
        }

        // boundary cycles
        let mut cycles: Vec<Cycle> = Vec::new();
        let mut seen = vec![false; half_edges.len()];
        for h0 in 0..half_edges.len() {
            if seen[h0] {
                continue;
            }
            let c = cycles.len() as u32;
            // chord polygon about a local origin plus the arc bulges
            let o = vertices[half_edges[h0].origin as usize].pos;
            let mut area = 0.0;
            let mut h = h0;
            while !seen[h] {
                seen[h] = true;
                half_edges[h].cycle = c;
                let he = &half_edges[h];
                let a = vertices[he.origin as usize].pos - o;
                let b = vertices[half_edges[h ^ 1].origin as usize].pos - o;
                area += 0.5 * a.cross(b) + segment_area(&pieces[he.piece as usize].curve, he.from, he.to);
                h = he.next as usize;
            }
            cycles.push(Cycle { start: h0 as u32, area });
        }

        // connected components
        let mut vuf = UnionFind::new(vertices.len());
        for h in (0..half_edges.len()).step_by(2) {
            vuf.union(half_edges[h].origin, half_edges[h + 1].origin);
        }
        let comp: Vec<u32> = (0..vertices.len() as u32).map(|v| vuf.find(v)).collect();
        let mut roots: Vec<u32> = comp.clone();
        roots.sort_unstable();
        roots.dedup();
        let components = roots.len();

        let box_edge = half_edges
            .iter()
            .position(|he| pieces[he.piece as usize].source == Source::Box && he.to > he.from)
            .expect("box sides are always present");
        let outer_cycle = half_edges[box_edge ^ 1].cycle;

        let mut arr = Arrangement {
            rect,
            pieces,
            vertices,
            half_edges,
            cycles,
            cycle_face: Vec::new(),
            faces: Vec::new(),
            outer_face: 0,
            components,
        };

        // attach holes to the face enclosing them
        let mut cuf = UnionFind::new(arr.cycles.len());
        for c in 0..arr.cycles.len() {
            if arr.cycles[c].area > 0.0 || c as u32 == outer_cycle {
                continue;
            }
            let hs = arr.cycle_half_edges(c as u32);
            let own = comp[arr.half_edges[hs[0] as usize].origin as usize];
            let p = hs
                .iter()
                .map(|&h| {
                    let he = &arr.half_edges[h as usize];
                    leftmost_point(&arr.pieces[he.piece as usize].curve, he.from, he.to)
                })
                .min_by(|a, b| a.x.total_cmp(&b.x))
                .unwrap();
            let hit = arr.cast_ray(p, V2::new(-1.0, 0.0), |e| comp[arr.half_edges[2 * e].origin as usize] != own);
            let target = match hit {
                Some((h, _)) => arr.half_edges[h as usize].cycle,
                None => outer_cycle,
            };
            cuf.union(c as u32, target);
        }
        let mut face_of_root = vec![u32::MAX; arr.cycles.len()];
        let mut cycle_face = vec![0u32; arr.cycles.len()];
        let mut faces: Vec<Vec<u32>> = Vec::new();
        for c in 0..arr.cycles.len() as u32 {
            let r = cuf.find(c) as usize;
            if face_of_root[r] == u32::MAX {
                face_of_root[r] = faces.len() as u32;
                faces.push(Vec::new());
            }
            cycle_face[c as usize] = face_of_root[r];
            faces[face_of_root[r] as usize].push(c);
        }
        arr.outer_face = cycle_face[outer_cycle as usize];
        arr.cycle_face = cycle_face;
        arr.faces = faces;
        arr
    }

    pub fn edge_count(&self) -> usize {
        self.half_edges.len() / 2
    }

    pub fn face_of(&self, h: u32) -> u32 {
        self.cycle_face[self.half_edges[h as usize].cycle as usize]
    }

    pub fn is_box_edge(&self, e: usize) -> bool {
        self.pieces[self.half_edges[2 * e].piece as usize].source == Source::Box
    }

    pub fn source(&self, e: usize) -> Source {
        self.pieces[self.half_edges[2 * e].piece as usize].source
    }

    pub fn curve(&self, h: u32) -> &Curve {
        &self.pieces[self.half_edges[h as usize].piece as usize].curve
    }

    /// Geometry of edge `e` as a piece with increasing parameters.
    pub fn edge_piece(&self, e: usize) -> Piece {
        let he = &self.half_edges[2 * e];
        let p = &self.pieces[he.piece as usize];
        Piece::new(p.curve, he.from.min(he.to), he.from.max(he.to), p.source)
    }

    /// Unit tangent of half-edge `h` at parameter `t`, in traversal direction.
    pub fn tangent(&self, h: u32, t: f64) -> V2 {
        let he = &self.half_edges[h as usize];
        let d = self.curve(h).tangent(t);
        if he.to > he.from {
            d
        } else {
            -d
        }
    }

    pub fn cycle_half_edges(&self, c: u32) -> Vec<u32> {
        let start = self.cycles[c as usize].start;
        let mut out = vec![start];
        let mut h = self.half_edges[start as usize].next;
        while h != start {
            out.push(h);
            h = self.half_edges[h as usize].next;
        }
        out
    }

    /// Nearest edge hit by the ray from `p` along the axis direction `dir`,
    /// restricted to edges accepted by `filter`. Returns the half-edge whose
    /// face contains `p` and the hit distance.
    pub fn cast_ray(&self, p: V2, dir: V2, filter: impl Fn(usize) -> bool) -> Option<(u32, f64)> {
        let mut best: Option<(usize, f64, f64)> = None;
        for e in 0..self.edge_count() {
            if !filter(e) {
                continue;
            }
            let piece = self.edge_piece(e);
            let b = piece.bbox();
            if dir.x != 0.0 && (p.y < b.min.y || p.y > b.max.y) {
                continue;
            }
            for (s, u) in piece.ray_hits(p, dir, 0.0) {
                if best.is_none_or(|(_, bs, _)| s < bs) {
                    best = Some((e, s, u));
                }
            }
        }
        best.map(|(e, s, u)| {
            let h = 2 * e as u32;
            let tau = self.tangent(h, u);
            // p lies left of h iff cross(tau, -dir) > 0
            let left = tau.cross(-dir) > 0.0;
            (if left { h } else { h ^ 1 }, s)
        })
    }

    /// A point strictly inside face `f`, found by stepping off the longest
    /// boundary edges along their inward normals halfway to the nearest
    /// obstacle.
    pub fn interior_point(&self, f: u32) -> Option<V2> {
        let mut hs: Vec<(f64, u32)> = self.faces[f as usize]
            .iter()
            .flat_map(|&c| self.cycle_half_edges(c))
            .map(|h| {
                let he = &self.half_edges[h as usize];
                let len = match *self.curve(h) {
                    Curve::Line { .. } => (he.to - he.from).abs(),
                    Curve::Circle { radius, .. } => (he.to - he.from).abs() * radius,
                };
                (len, h)
            })
            .collect();
        hs.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1)));
        let mut best: Option<(f64, V2)> = None;
        for &(_, h) in hs.iter().take(6) {
            let he = &self.half_edges[h as usize];
            let mid = 0.5 * (he.from + he.to);
            let m = self.curve(h).point(mid);
            let n = self.tangent(h, mid).perp();
            let min_s = 1e-12 * (1.0 + m.max_abs());
            let clear = self
                .pieces
                .iter()
                .flat_map(|pc| pc.ray_hits(m, n, min_s))
                .map(|(s, _)| s)
                .fold(f64::INFINITY, f64::min);
            if !clear.is_finite() {
                continue;
            }
            let q = m + n * (0.5 * clear);
            if best.is_none_or(|(c, _)| clear > c) {
                best = Some((clear, q));
            }
            if clear > 1e-7 * (1.0 + m.max_abs()) {
                break;
            }
        }
        best.map(|(_, q)| q)
    }

    /// `V - E + F` of the boxed subdivision, counting the outer face.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edge_count() as i64 + self.faces.len() as i64
    }
}
