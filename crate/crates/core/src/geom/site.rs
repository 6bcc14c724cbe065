use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::point::{Point2, V2};
use super::rational::{rat_int, rat_to_f64, Rational};
use crate::error::{GenvorError, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedSite {
    pub id: usize,
    pub pos: Point2,
    pub weight: Rational,
}

impl WeightedSite {
    pub fn new(id: usize, pos: Point2, weight: Rational) -> Self {
        WeightedSite { id, pos, weight }
    }

    pub fn unit(id: usize, x: f64, y: f64) -> Self {
        WeightedSite::new(id, Point2::from_f64(x, y), rat_int(1))
    }

    pub fn weighted(id: usize, x: f64, y: f64, w: f64) -> Self {
        WeightedSite::new(id, Point2::from_f64(x, y), super::rational::rat_from_f64(w))
    }
}

/// Which closed half-plane of the bounding line is visible, relative to the
/// line direction `(cos angle, sin angle)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn from_bit(bit: u8) -> Side {
        if bit == 0 {
            Side::Left
        } else {
            Side::Right
        }
    }

    pub fn bit(self) -> u8 {
        match self {
            Side::Left => 0,
            Side::Right => 1,
        }
    }
}

/// Closed half-plane whose bounding line passes through the owning site.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct VisibilityConstraint {
    /// Direction of the bounding line, in `[0, pi)`.
    pub angle: f64,
    pub side: Side,
}

impl VisibilityConstraint {
    pub fn new(angle: f64, side: Side) -> Self {
        VisibilityConstraint { angle, side }
    }

    pub fn direction(&self) -> V2 {
        V2::new(self.angle.cos(), self.angle.sin())
    }

    /// Normal pointing into the visible half-plane.
    pub fn inward_normal(&self) -> V2 {
        let n = self.direction().perp();
        match self.side {
            Side::Left => n,
            Side::Right => -n,
        }
    }
}

/// `w * |x - s|`.
pub fn weighted_distance(x: V2, s: &WeightedSite) -> f64 {
    rat_to_f64(&s.weight) * x.dist(s.pos.to_v2())
}

/// True iff `x` lies in the closed half-plane `H(s)`.
pub fn visible(x: V2, s: &WeightedSite, v: &VisibilityConstraint) -> bool {
    v.inward_normal().dot(x - s.pos.to_v2()) >= 0.0
}

/// Sites with optional visibility constraints; caches `f64` copies of the
/// exact inputs for the builders.
#[derive(Clone, Debug)]
pub struct SiteSet {
    sites: Vec<WeightedSite>,
    constraints: Option<Vec<VisibilityConstraint>>,
    pos: Vec<V2>,
    weight: Vec<f64>,
    normal: Vec<V2>,
}

impl SiteSet {
    pub fn new(sites: Vec<WeightedSite>) -> Result<Self> {
        for (i, s) in sites.iter().enumerate() {
            if s.id != i {
                return Err(GenvorError::InvalidConfig(format!(
                    "site ids must be dense in [0, n): position {i} has id {}",
                    s.id
                )));
            }
            if !s.weight.is_positive() {
                return Err(GenvorError::NonpositiveWeight(i));
            }
        }
        let pos = sites.iter().map(|s| s.pos.to_v2()).collect();
        let weight = sites.iter().map(|s| rat_to_f64(&s.weight)).collect();
        Ok(SiteSet { sites, constraints: None, pos, weight, normal: Vec::new() })
    }

    /// Unit-weight sites from `f64` coordinates (taken exactly).
    pub fn from_points(points: &[(f64, f64)]) -> Result<Self> {
        SiteSet::new(points.iter().enumerate().map(|(i, &(x, y))| WeightedSite::unit(i, x, y)).collect())
    }

    pub fn from_weighted(points: &[(f64, f64, f64)]) -> Result<Self> {
        SiteSet::new(points.iter().enumerate().map(|(i, &(x, y, w))| WeightedSite::weighted(i, x, y, w)).collect())
    }

    pub fn with_constraints(mut self, constraints: Vec<VisibilityConstraint>) -> Result<Self> {
        if constraints.len() != self.sites.len() {
            return Err(GenvorError::MissingConstraint(constraints.len().min(self.sites.len())));
        }
        self.normal = constraints.iter().map(|c| c.inward_normal()).collect();
        self.constraints = Some(constraints);
        Ok(self)
    }

    pub fn without_constraints(&self) -> SiteSet {
        let mut s = self.clone();
        s.constraints = None;
        s.normal.clear();
        s
    }

    /// Same positions with every weight set to one.
    pub fn unweighted(&self) -> SiteSet {
        let mut s = self.clone();
        for site in &mut s.sites {
            site.weight = rat_int(1);
        }
        s.weight = vec![1.0; s.sites.len()];
        s
    }

    pub fn len(&self) -> usize {
        self.sites.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sites.is_empty()
    }

    pub fn sites(&self) -> &[WeightedSite] {
        &self.sites
    }

    pub fn constraints(&self) -> Option<&[VisibilityConstraint]> {
        self.constraints.as_deref()
    }

    pub fn pos(&self, i: usize) -> V2 {
        self.pos[i]
    }

    pub fn positions(&self) -> &[V2] {
        &self.pos
    }

    pub fn weight(&self, i: usize) -> f64 {
        self.weight[i]
    }

    pub fn weights(&self) -> &[f64] {
        &self.weight
    }

    /// Inward normal of `H(s_i)`; panics when the set carries no constraints.
    pub fn normal(&self, i: usize) -> V2 {
        self.normal[i]
    }

    pub fn sees(&self, i: usize, x: V2) -> bool {
        self.normal.is_empty() || self.normal[i].dot(x - self.pos[i]) >= 0.0
    }

    pub fn has_equal_weights(&self) -> bool {
        self.sites.windows(2).all(|w| w[0].weight == w[1].weight)
    }

    pub fn min_weight(&self) -> Rational {
        self.sites.iter().map(|s| s.weight.clone()).min().unwrap_or_else(|| rat_int(1))
    }

    /// Fails with `DuplicateSites` when two sites share a position.
    pub fn check_distinct(&self) -> Result<()> {
        let mut idx: Vec<usize> = (0..self.len()).collect();
        idx.sort_by(|&a, &b| {
            let (pa, pb) = (&self.sites[a].pos, &self.sites[b].pos);
            pa.x.cmp(&pb.x).then_with(|| pa.y.cmp(&pb.y))
        });
        for w in idx.windows(2) {
            if self.sites[w[0]].pos == self.sites[w[1]].pos {
                let (a, b) = (w[0].min(w[1]), w[0].max(w[1]));
                return Err(GenvorError::DuplicateSites(a, b));
            }
        }
        Ok(())
    }

    pub fn check_weights(&self) -> Result<()> {
        match self.sites.iter().position(|s| s.weight <= Rational::zero()) {
            Some(i) => Err(GenvorError::NonpositiveWeight(i)),
            None => Ok(()),
        }
    }
}
