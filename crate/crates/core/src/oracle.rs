//! Brute-force ground truth: direct nearest-site evaluation at a point.
//!
//! Every query is a linear scan. Equal distances resolve to the lower id.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::diagram::{DiagramKind, FaceLabel, PlanarDiagram};
use crate::error::{GenvorError, Result};
use crate::geom::{Rect, SiteSet, V2};

/// Probes closer than this to a diagram edge are skipped.
pub const BOUNDARY_EXCLUSION: f64 = 1e-7;

fn argmin(n: usize, mut key: impl FnMut(usize) -> Option<f64>) -> Option<usize> {
    let mut best: Option<(usize, f64)> = None;
    for i in 0..n {
        if let Some(d) = key(i) {
            if best.is_none_or(|(_, b)| d < b) {
                best = Some((i, d));
            }
        }
    }
    best.map(|(i, _)| i)
}

pub fn nearest_site(x: V2, sites: &SiteSet) -> usize {
    let pos = sites.positions();
    argmin(pos.len(), |i| Some((x - pos[i]).norm2())).expect("nonempty site set")
}

/// Nearest site among those whose half-plane contains `x`; sites without
/// constraints see everything.
pub fn nearest_visible_site(x: V2, sites: &SiteSet) -> Option<usize> {
    let pos = sites.positions();
    argmin(pos.len(), |i| sites.sees(i, x).then(|| (x - pos[i]).norm2()))
}

pub fn nearest_weighted_site(x: V2, sites: &SiteSet) -> usize {
    let (pos, w) = (sites.positions(), sites.weights());
    argmin(pos.len(), |i| Some(w[i] * w[i] * (x - pos[i]).norm2())).expect("nonempty site set")
}

/// Ids of the `k` nearest sites in increasing distance.
pub fn k_nearest_sequence(x: V2, sites: &SiteSet, k: usize) -> Result<Vec<usize>> {
    let n = sites.len();
    if k == 0 || k > n {
        return Err(GenvorError::KOutOfRange { k, n });
    }
    let pos = sites.positions();
    let mut d: Vec<(f64, usize)> = (0..n).map(|i| ((x - pos[i]).norm2(), i)).collect();
    let cmp = |a: &(f64, usize), b: &(f64, usize)| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1));
    if k < n {
        d.select_nth_unstable_by(k - 1, cmp);
        d.truncate(k);
    }
    d.sort_by(cmp);
    Ok(d.into_iter().map(|(_, i)| i).collect())
}

/// The label the diagram of `kind` should carry at `x`.
pub fn label(kind: DiagramKind, sites: &SiteSet, x: V2) -> FaceLabel {
    match kind {
        DiagramKind::Standard => FaceLabel::Nearest(nearest_site(x, sites)),
        DiagramKind::Semi => match nearest_visible_site(x, sites) {
            Some(i) => FaceLabel::Nearest(i),
            None => FaceLabel::NotVisible,
        },
        DiagramKind::Multiplicative => FaceLabel::Nearest(nearest_weighted_site(x, sites)),
        DiagramKind::OrderK(k) => {
            let mut s = k_nearest_sequence(x, sites, k).expect("k checked at build time");
            s.sort_unstable();
            FaceLabel::Set(s)
        }
        DiagramKind::OrderKSequence(k) => {
            FaceLabel::Sequence(k_nearest_sequence(x, sites, k).expect("k checked at build time"))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Mismatch {
    pub point: [f64; 2],
    pub diagram: Option<FaceLabel>,
    pub oracle: FaceLabel,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ProbeReport {
    pub probes_tested: usize,
    pub mismatches: Vec<Mismatch>,
    pub excluded_near_boundary: usize,
}

impl ProbeReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares the diagram's face label with the oracle at `probes` uniform
/// points of `region` (the clip box when `None`).
pub fn validate(d: &PlanarDiagram, sites: &SiteSet, probes: usize, seed: u64, region: Option<Rect>) -> ProbeReport {
    let r = region.unwrap_or(d.clip);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = ProbeReport::default();
    for _ in 0..probes {
        let x = V2::new(r.min.x + rng.gen::<f64>() * r.width(), r.min.y + rng.gen::<f64>() * r.height());
        if d.near_edge(x, BOUNDARY_EXCLUSION) {
            report.excluded_near_boundary += 1;
            continue;
        }
        report.probes_tested += 1;
        let expect = label(d.kind, sites, x);
        let got = d.label_at(x);
        if got.as_ref() != Some(&expect) {
            report.mismatches.push(Mismatch { point: [x.x, x.y], diagram: got, oracle: expect });
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{Side, VisibilityConstraint};

    #[test]
    fn nearest_examples() {
        let s = SiteSet::from_points(&[(0.0, 0.0), (5.0, 5.0)]).unwrap();
        assert_eq!(nearest_site(V2::new(0.0, 0.0), &s), 0);
        let pts: Vec<(f64, f64)> = (0..8).map(|i| (i as f64, if i == 2 || i == 7 { 0.0 } else { 9.0 })).collect();
        let s = SiteSet::from_points(&pts).unwrap();
        assert_eq!(nearest_site(V2::new(4.5, 0.0), &s), 2);
    }

    #[test]
    fn weighted_examples() {
        let s = SiteSet::from_weighted(&[(0.0, 0.0, 1.0), (1.0, 0.0, 10.0)]).unwrap();
        assert_eq!(nearest_weighted_site(V2::new(0.6, 0.0), &s), 0);
        assert_eq!(nearest_weighted_site(V2::new(0.95, 0.0), &s), 1);
    }

    #[test]
    fn visible_examples() {
        let s = SiteSet::from_points(&[(0.0, 0.0), (3.0, 0.0)])
            .unwrap()
            .with_constraints(vec![VisibilityConstraint::new(0.0, Side::Left); 2])
            .unwrap();
        assert_eq!(nearest_visible_site(V2::new(1.0, -1.0), &s), None);
        assert_eq!(nearest_visible_site(V2::new(1.0, 0.0), &s), Some(0));
        let s = SiteSet::from_points(&[(0.0, 0.0), (3.0, 0.0)])
            .unwrap()
            .with_constraints(vec![
                VisibilityConstraint::new(0.0, Side::Right),
                VisibilityConstraint::new(0.0, Side::Left),
            ])
            .unwrap();
        assert_eq!(nearest_visible_site(V2::new(0.1, 0.5), &s), Some(1));
    }

    #[test]
    fn k_nearest_examples() {
        let s = SiteSet::from_points(&[(0.0, 0.0), (1.0, 0.0)]).unwrap();
        assert_eq!(k_nearest_sequence(V2::new(0.9, 0.0), &s, 2).unwrap(), vec![1, 0]);
        assert!(matches!(k_nearest_sequence(V2::new(0.0, 0.0), &s, 3), Err(GenvorError::KOutOfRange { .. })));
        assert!(k_nearest_sequence(V2::new(0.0, 0.0), &s, 0).is_err());
    }
}
