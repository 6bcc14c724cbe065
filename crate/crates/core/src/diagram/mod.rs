//! Labeled planar subdivisions for the standard, semi, multiplicative,
//! order-k and order-k sequence diagrams.
//!
//! Every builder produces a set of candidate curve pieces, overlays them in
//! a clip box, labels each face with the brute-force oracle at an interior
//! point and merges faces that share a label. Two candidate generators
//! exist: [`BuildPath::Reference`] uses every bisector (and visibility line)
//! in full; [`BuildPath::Scalable`] keeps only the parts of each curve that
//! can separate labels.

pub mod arrangement;
pub mod complexity;
pub mod envelope;
pub mod locate;
pub mod reference;
pub mod svg;

use serde::{Deserialize, Serialize};

use crate::error::{GenvorError, Result};
use crate::geom::rational::{rat_from_f64, rat_int};
use crate::geom::Point2;
use crate::geom::{Piece, Rect, Side, SiteSet, VisibilityConstraint, WeightedSite, V2};
use crate::oracle;
use arrangement::{Arrangement, UnionFind};
use locate::EdgeIndex;

pub use complexity::ComplexityReport;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FaceLabel {
    Nearest(usize),
    /// The `k` nearest sites in increasing distance.
    Sequence(Vec<usize>),
    /// The `k` nearest sites as a sorted set.
    Set(Vec<usize>),
    NotVisible,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DiagramKind {
    Standard,
    Semi,
    Multiplicative,
    OrderK(usize),
    OrderKSequence(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BuildPath {
    Reference,
    Scalable,
}

impl BuildPath {
    pub fn capacity(self) -> usize {
        match self {
            BuildPath::Reference => 64,
            BuildPath::Scalable => 4096,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BuildOptions {
    pub path: BuildPath,
    /// Overrides the automatic clip box.
    pub clip: Option<Rect>,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { path: BuildPath::Scalable, clip: None }
    }
}

impl BuildOptions {
    pub fn reference() -> Self {
        BuildOptions { path: BuildPath::Reference, clip: None }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SemiOptions {
    /// Ignore the visibility constraints; the result matches the standard
    /// diagram.
    pub full_plane: bool,
    /// Append two far-away sites whose half-planes cover the whole plane.
    pub sentinels: bool,
}

#[derive(Clone, Debug)]
pub struct PlanarDiagram {
    pub kind: DiagramKind,
    pub path: BuildPath,
    pub clip: Rect,
    sites: SiteSet,
    arr: Arrangement,
    face_label: Vec<Option<FaceLabel>>,
    merged: Vec<u32>,
    merged_labels: Vec<FaceLabel>,
    kept: Vec<bool>,
    all_index: EdgeIndex,
    kept_index: EdgeIndex,
}

impl PlanarDiagram {
    fn assemble(kind: DiagramKind, path: BuildPath, sites: SiteSet, clip: Rect, pieces: &[Piece]) -> PlanarDiagram {
        let arr = Arrangement::build(clip, pieces);
        let face_label: Vec<Option<FaceLabel>> = (0..arr.faces.len() as u32)
            .map(|f| {
                if f == arr.outer_face {
                    return None;
                }
                let p = arr.interior_point(f).unwrap_or_else(|| {
                    let c = arr.faces[f as usize][0];
                    arr.vertices[arr.half_edges[arr.cycles[c as usize].start as usize].origin as usize].pos
                });
                Some(oracle::label(kind, &sites, p))
            })
            .collect();

        let mut uf = UnionFind::new(arr.faces.len());
        let mut kept = vec![false; arr.edge_count()];
        for (e, k) in kept.iter_mut().enumerate() {
            if arr.is_box_edge(e) {
                continue;
            }
            let (fa, fb) = (arr.face_of(2 * e as u32), arr.face_of(2 * e as u32 + 1));
            if face_label[fa as usize] == face_label[fb as usize] {
                uf.union(fa, fb);
            } else {
                *k = true;
            }
        }
        let mut merged = vec![u32::MAX; arr.faces.len()];
        let mut root_id = vec![u32::MAX; arr.faces.len()];
        let mut merged_labels = Vec::new();
        for f in 0..arr.faces.len() as u32 {
            if f == arr.outer_face {
                continue;
            }
            let r = uf.find(f) as usize;
            if root_id[r] == u32::MAX {
                root_id[r] = merged_labels.len() as u32;
                merged_labels.push(face_label[f as usize].clone().expect("inner faces are labeled"));
            }
            merged[f as usize] = root_id[r];
        }

        let all_index = EdgeIndex::new(clip, (0..arr.edge_count()).map(|e| (e as u32, arr.edge_piece(e))).collect());
        let kept_index = EdgeIndex::new(
            clip,
            (0..arr.edge_count()).filter(|&e| kept[e]).map(|e| (e as u32, arr.edge_piece(e))).collect(),
        );
        PlanarDiagram { kind, path, clip, sites, arr, face_label, merged, merged_labels, kept, all_index, kept_index }
    }

    /// Sites the diagram was built from, including any sentinels.
    pub fn sites(&self) -> &SiteSet {
        &self.sites
    }

    pub fn arrangement(&self) -> &Arrangement {
        &self.arr
    }

    /// Labels of the merged faces.
    pub fn face_labels(&self) -> &[FaceLabel] {
        &self.merged_labels
    }

    pub fn face_count(&self) -> usize {
        self.merged_labels.len()
    }

    /// Label of the arrangement face `f` before merging; `None` outside the box.
    pub fn raw_face_label(&self, f: u32) -> Option<&FaceLabel> {
        self.face_label[f as usize].as_ref()
    }

    /// Merged face containing arrangement face `f`.
    pub fn merged_face_of(&self, f: u32) -> Option<u32> {
        let m = self.merged[f as usize];
        (m != u32::MAX).then_some(m)
    }

    pub fn is_kept(&self, e: usize) -> bool {
        self.kept[e]
    }

    /// Edges of the merged subdivision, as arrangement edge ids.
    pub fn kept_edges(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.kept.len()).filter(|&e| self.kept[e])
    }

    /// Arrangement face containing `x`, or `None` outside the clip box.
    pub fn locate(&self, x: V2) -> Option<u32> {
        if !self.clip.contains(x) {
            return None;
        }
        let (e, _, u) = self.all_index.ray_right(x)?;
        let h = 2 * e;
        let h = if self.arr.tangent(h, u).y > 0.0 { h } else { h ^ 1 };
        let f = self.arr.face_of(h);
        (f != self.arr.outer_face).then_some(f)
    }

    /// Merged face containing `x`.
    pub fn face_at(&self, x: V2) -> Option<u32> {
        self.locate(x).and_then(|f| self.merged_face_of(f))
    }

    pub fn label_at(&self, x: V2) -> Option<FaceLabel> {
        self.face_at(x).map(|m| self.merged_labels[m as usize].clone())
    }

    /// True iff some diagram edge passes within `eps` of `x`.
    pub fn near_edge(&self, x: V2, eps: f64) -> bool {
        self.kept_index.within(x, eps)
    }

    /// `V - E + F` of the boxed arrangement before merging, and its number of
    /// connected components.
    pub fn euler(&self) -> (i64, usize) {
        (self.arr.euler_characteristic(), self.arr.components)
    }

    /// Euler's relation for a subdivision with `C` components:
    /// `V - E + F = 1 + C`, i.e. 2 when connected.
    pub fn euler_holds(&self) -> bool {
        let (chi, c) = self.euler();
        chi == 1 + c as i64
    }

    #[cfg(test)]
    pub(crate) fn corrupt_label(&mut self, m: usize, label: FaceLabel) {
        self.merged_labels[m] = label;
    }
}

fn check_common(sites: &SiteSet, path: BuildPath) -> Result<()> {
    if sites.is_empty() {
        return Err(GenvorError::InvalidConfig("at least one site is required".into()));
    }
    sites.check_distinct()?;
    let limit = path.capacity();
    if sites.len() > limit {
        return Err(GenvorError::BuilderCapacityExceeded { n: sites.len(), limit });
    }
    Ok(())
}

fn build_prepared(kind: DiagramKind, sites: SiteSet, opts: &BuildOptions) -> Result<PlanarDiagram> {
    check_common(&sites, opts.path)?;
    if let DiagramKind::OrderK(k) | DiagramKind::OrderKSequence(k) = kind {
        if k == 0 || k > sites.len() {
            return Err(GenvorError::KOutOfRange { k, n: sites.len() });
        }
    }
    let (auto_clip, pieces) = match opts.path {
        BuildPath::Reference => reference::candidates(kind, &sites),
        BuildPath::Scalable => envelope::candidates(kind, &sites),
    };
    let clip = opts.clip.unwrap_or(auto_clip);
    Ok(PlanarDiagram::assemble(kind, opts.path, sites, clip, &pieces))
}

/// Builds a diagram of `kind`. Standard and order-k kinds ignore weights and
/// constraints; the multiplicative kind ignores constraints.
pub fn build(kind: DiagramKind, sites: &SiteSet, opts: &BuildOptions) -> Result<PlanarDiagram> {
    let sites = match kind {
        DiagramKind::Standard | DiagramKind::OrderK(_) | DiagramKind::OrderKSequence(_) => {
            sites.unweighted().without_constraints()
        }
        DiagramKind::Semi => {
            if sites.constraints().is_none() {
                return Err(GenvorError::MissingConstraint(0));
            }
            sites.unweighted()
        }
        DiagramKind::Multiplicative => {
            sites.check_weights()?;
            sites.without_constraints()
        }
    };
    build_prepared(kind, sites, opts)
}

pub fn build_standard(sites: &SiteSet) -> Result<PlanarDiagram> {
    build(DiagramKind::Standard, sites, &BuildOptions::default())
}

pub fn build_semi(sites: &SiteSet, opts: SemiOptions) -> Result<PlanarDiagram> {
    build_semi_with(sites, opts, &BuildOptions::default())
}

pub fn build_semi_with(sites: &SiteSet, opts: SemiOptions, build_opts: &BuildOptions) -> Result<PlanarDiagram> {
    let mut s = if opts.full_plane {
        sites.without_constraints()
    } else {
        if sites.constraints().is_none() {
            return Err(GenvorError::MissingConstraint(0));
        }
        sites.clone()
    };
    if opts.sentinels {
        s = with_sentinels(&s)?;
    }
    build_prepared(DiagramKind::Semi, s.unweighted(), build_opts)
}

/// Two far sites, below and above the input, seeing up and down
/// respectively. Unconstrained inputs stay unconstrained.
pub fn with_sentinels(sites: &SiteSet) -> Result<SiteSet> {
    let mut b = Rect::empty();
    for &p in sites.positions() {
        b.include(p);
    }
    let c = b.center();
    let r = 1000.0 * (1.0 + b.width().max(b.height())).round();
    let n = sites.len();
    let mut all: Vec<WeightedSite> = sites.sites().to_vec();
    for (k, dy) in [(0, -r), (1, r)] {
        let pos = Point2::new(rat_from_f64(c.x.round()), rat_from_f64(c.y.round() + dy));
        all.push(WeightedSite::new(n + k, pos, rat_int(1)));
    }
    let s = SiteSet::new(all)?;
    match sites.constraints() {
        Some(c) => {
            let mut cons = c.to_vec();
            cons.push(VisibilityConstraint::new(0.0, Side::Left));
            cons.push(VisibilityConstraint::new(0.0, Side::Right));
            s.with_constraints(cons)
        }
        None => Ok(s),
    }
}

pub fn build_multiplicative(sites: &SiteSet, clip: Option<Rect>) -> Result<PlanarDiagram> {
    build(DiagramKind::Multiplicative, sites, &BuildOptions { clip, ..BuildOptions::default() })
}

pub fn build_order_k_sequence(sites: &SiteSet, k: usize) -> Result<PlanarDiagram> {
    build(DiagramKind::OrderKSequence(k), sites, &BuildOptions::default())
}

pub fn build_order_k(sites: &SiteSet, k: usize) -> Result<PlanarDiagram> {
    build(DiagramKind::OrderK(k), sites, &BuildOptions::default())
}
