//! Seeded random input models and the stretched-site transform.
//!
//! All randomness comes from ChaCha8 seeded with the configuration seed.
//! Each site draws from its own stream, selected by a purpose tag and the
//! site index, so the first `m` sites of an instance do not depend on `n`.

use num_traits::{One, Zero};
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{GenvorError, Result};
use crate::geom::rational::{as_string_vec, dyadic, rat_int, rat_to_f64, Rational};
use crate::geom::{Point2, Side, SiteSet, VisibilityConstraint, WeightedSite};

const TAG_POSITION: u64 = 1;
const TAG_SIDE: u64 = 2;
const TAG_WEIGHT: u64 = 3;
const TAG_ANGLE: u64 = 4;

/// Generator for site `index` and purpose `tag` under `seed`.
pub fn substream(seed: u64, tag: u64, index: usize) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream((tag << 32) | index as u64);
    r
}

fn unit_dyadic(r: &mut ChaCha8Rng) -> Rational {
    dyadic(r.next_u32() as u64, 32)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModelKind {
    RandomSide,
    FiniteWeightSet,
    UniformLocations,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WeightProfile {
    AllOnes,
    /// Uniform on `[1, c]` at 32-bit resolution.
    Interval(#[serde(with = "crate::geom::rational::as_string")] Rational),
    /// `w_i = 2^min(i, cap)`.
    Geometric {
        cap: u32,
    },
    Explicit(#[serde(with = "as_string_vec")] Vec<Rational>),
}

impl WeightProfile {
    pub fn geometric() -> Self {
        WeightProfile::Geometric { cap: 20 }
    }

    pub fn weight(&self, i: usize, seed: u64) -> Result<Rational> {
        Ok(match self {
            WeightProfile::AllOnes => Rational::one(),
            WeightProfile::Interval(c) => {
                if *c < Rational::one() {
                    return Err(GenvorError::InvalidConfig("interval bound must be at least 1".into()));
                }
                let u = unit_dyadic(&mut substream(seed, TAG_WEIGHT, i));
                Rational::one() + (c - Rational::one()) * u
            }
            WeightProfile::Geometric { cap } => {
                Rational::from_integer(num_bigint::BigInt::one() << (i as u32).min(*cap))
            }
            WeightProfile::Explicit(v) => v
                .get(i)
                .cloned()
                .ok_or_else(|| GenvorError::InvalidConfig(format!("explicit weight list has no entry {i}")))?,
        })
    }
}

/// Site positions and line directions held fixed while sides are sampled.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FixedGeometry {
    pub positions: Vec<Point2>,
    /// Directions of the bounding lines in `[0, pi)`; may be empty when only
    /// positions are fixed.
    #[serde(default)]
    pub angles: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModelConfig {
    pub model: ModelKind,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "opt_rational_vec")]
    pub weight_set: Option<Vec<Rational>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight_profile: Option<WeightProfile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixed_geometry: Option<FixedGeometry>,
    pub seed: u64,
}

mod opt_rational_vec {
    use super::Rational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<Vec<Rational>>, s: S) -> std::result::Result<S::Ok, S::Error> {
        match v {
            Some(v) => s.collect_seq(v.iter().map(crate::geom::rational::format_rational)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Option<Vec<Rational>>, D::Error> {
        let v = Option::<Vec<String>>::deserialize(d)?;
        v.map(|v| {
            v.iter().map(|s| crate::geom::rational::parse_rational(s).map_err(serde::de::Error::custom)).collect()
        })
        .transpose()
    }
}

impl ModelConfig {
    pub fn random_side(geometry: FixedGeometry, seed: u64) -> Self {
        ModelConfig {
            model: ModelKind::RandomSide,
            n: geometry.positions.len(),
            weight_set: None,
            weight_profile: None,
            fixed_geometry: Some(geometry),
            seed,
        }
    }

    pub fn finite_weight_set(n: usize, w: Vec<Rational>, positions: Option<Vec<Point2>>, seed: u64) -> Self {
        ModelConfig {
            model: ModelKind::FiniteWeightSet,
            n,
            weight_set: Some(w),
            weight_profile: None,
            fixed_geometry: positions.map(|positions| FixedGeometry { positions, angles: Vec::new() }),
            seed,
        }
    }

    pub fn uniform(n: usize, profile: WeightProfile, seed: u64) -> Self {
        ModelConfig {
            model: ModelKind::UniformLocations,
            n,
            weight_set: None,
            weight_profile: Some(profile),
            fixed_geometry: None,
            seed,
        }
    }

    pub fn with_seed(&self, seed: u64) -> Self {
        ModelConfig { seed, ..self.clone() }
    }

    pub fn check(&self) -> Result<()> {
        let bad = |m: &str| Err(GenvorError::InvalidConfig(m.into()));
        if self.n == 0 {
            return bad("n must be positive");
        }
        match self.model {
            ModelKind::RandomSide => {
                let Some(g) = &self.fixed_geometry else {
                    return bad("random-side model requires a fixed geometry");
                };
                if g.positions.len() != self.n || g.angles.len() != self.n {
                    return bad("fixed geometry must give n positions and n angles");
                }
            }
            ModelKind::FiniteWeightSet => match &self.weight_set {
                Some(w) if !w.is_empty() && w.iter().all(|x| *x > Rational::zero()) => {}
                _ => return bad("finite weight set must be nonempty and positive"),
            },
            ModelKind::UniformLocations => {
                if self.weight_profile.is_none() {
                    return bad("uniform-locations model requires a weight profile");
                }
                if let Some(WeightProfile::Explicit(v)) = &self.weight_profile {
                    if v.len() != self.n {
                        return bad("explicit weight list must have n entries");
                    }
                }
            }
        }
        if let Some(g) = &self.fixed_geometry {
            if self.model != ModelKind::RandomSide && g.positions.len() != self.n {
                return bad("fixed positions must have n entries");
            }
        }
        Ok(())
    }
}

/// Uniform point of `[0,1]^2` with 32-bit dyadic coordinates for site `i`.
pub fn uniform_position(seed: u64, i: usize) -> Point2 {
    let mut r = substream(seed, TAG_POSITION, i);
    let x = unit_dyadic(&mut r);
    let y = unit_dyadic(&mut r);
    Point2::new(x, y)
}

/// Line direction `pi * k / 2^32` for site `i`.
pub fn uniform_angle(seed: u64, i: usize) -> f64 {
    let k = substream(seed, TAG_ANGLE, i).next_u32();
    std::f64::consts::PI * (k as f64 / 4294967296.0)
}

/// Generic fixed geometry: uniform positions in the unit square and uniform
/// line directions.
pub fn random_geometry(n: usize, seed: u64) -> FixedGeometry {
    FixedGeometry {
        positions: (0..n).map(|i| uniform_position(seed, i)).collect(),
        angles: (0..n).map(|i| uniform_angle(seed, i)).collect(),
    }
}

pub fn side_bit(seed: u64, i: usize) -> u8 {
    (substream(seed, TAG_SIDE, i).next_u32() & 1) as u8
}

/// Constraint whose visible half-plane has inward normal at angle `theta`.
pub fn constraint_from_normal(theta: f64) -> VisibilityConstraint {
    let a = (theta - std::f64::consts::FRAC_PI_2).rem_euclid(std::f64::consts::TAU);
    if a < std::f64::consts::PI {
        VisibilityConstraint::new(a, Side::Left)
    } else {
        VisibilityConstraint::new(a - std::f64::consts::PI, Side::Right)
    }
}

/// The alternative semi model: each site's inward normal is uniform on
/// `[0, 2pi)`.
pub fn sample_normal_directions(positions: &[Point2], seed: u64) -> Result<SiteSet> {
    let sites: Vec<WeightedSite> =
        positions.iter().enumerate().map(|(i, p)| WeightedSite::new(i, p.clone(), rat_int(1))).collect();
    let cons = (0..positions.len())
        .map(|i| {
            let k = substream(seed, TAG_ANGLE, i).next_u32();
            constraint_from_normal(std::f64::consts::TAU * (k as f64 / 4294967296.0))
        })
        .collect();
    SiteSet::new(sites)?.with_constraints(cons)
}

pub fn sample_instance(cfg: &ModelConfig) -> Result<SiteSet> {
    cfg.check()?;
    let seed = cfg.seed;
    let positions: Vec<Point2> = match &cfg.fixed_geometry {
        Some(g) => g.positions.clone(),
        None => (0..cfg.n).map(|i| uniform_position(seed, i)).collect(),
    };
    let weights: Vec<Rational> = match cfg.model {
        ModelKind::RandomSide => vec![Rational::one(); cfg.n],
        ModelKind::FiniteWeightSet => {
            let w = cfg.weight_set.as_ref().unwrap();
            (0..cfg.n).map(|i| w[substream(seed, TAG_WEIGHT, i).gen_range(0..w.len())].clone()).collect()
        }
        ModelKind::UniformLocations => {
            let p = cfg.weight_profile.as_ref().unwrap();
            (0..cfg.n).map(|i| p.weight(i, seed)).collect::<Result<_>>()?
        }
    };
    let sites: Vec<WeightedSite> =
        positions.into_iter().zip(weights).enumerate().map(|(i, (p, w))| WeightedSite::new(i, p, w)).collect();
    let set = SiteSet::new(sites)?;
    if cfg.model == ModelKind::RandomSide {
        let g = cfg.fixed_geometry.as_ref().unwrap();
        let cons = g
            .angles
            .iter()
            .enumerate()
            .map(|(i, &a)| VisibilityConstraint::new(a, Side::from_bit(side_bit(seed, i))))
            .collect();
        return set.with_constraints(cons);
    }
    Ok(set)
}

/// Reference point `sigma` and radius `gamma = sqrt(1 / (2n))`.
#[derive(Clone, Debug, PartialEq)]
pub struct StretchContext {
    pub sigma: Point2,
    pub gamma: f64,
}

impl StretchContext {
    pub fn new(sigma: Point2, n: usize) -> Self {
        StretchContext { sigma, gamma: (1.0 / (2.0 * n as f64)).sqrt() }
    }
}

/// Moves each site along the ray from `sigma` to `w_i / w_min` times its
/// distance, exactly.
pub fn stretch(sites: &SiteSet, ctx: &StretchContext) -> Result<Vec<Point2>> {
    let m = sites.min_weight();
    sites
        .sites()
        .iter()
        .map(|s| {
            if s.pos == ctx.sigma {
                return Err(GenvorError::SiteAtSigma(s.id));
            }
            let f = &s.weight / &m;
            let x = &ctx.sigma.x + &f * (&s.pos.x - &ctx.sigma.x);
            let y = &ctx.sigma.y + &f * (&s.pos.y - &ctx.sigma.y);
            Ok(Point2::new(x, y))
        })
        .collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PruneResult {
    pub kept: Vec<usize>,
    pub pruned: Vec<usize>,
}

/// Discards every site `j` for which some `i != j` has
/// `w_i (d_i + gamma) < w_j (d_j - gamma)`, with weights divided by their
/// minimum and `d` the distance to `sigma`.
pub fn dominance_prune(sites: &SiteSet, ctx: &StretchContext) -> PruneResult {
    let m = rat_to_f64(&sites.min_weight());
    let sigma = ctx.sigma.to_v2();
    let g = ctx.gamma;
    let w: Vec<f64> = sites.weights().iter().map(|w| w / m).collect();
    let d: Vec<f64> = sites.positions().iter().map(|p| p.dist(sigma)).collect();
    let upper: Vec<f64> = (0..sites.len()).map(|i| w[i] * (d[i] + g)).collect();
    // smallest and second smallest upper bounds, so each j can exclude itself
    let (mut best, mut second) = ((f64::INFINITY, usize::MAX), f64::INFINITY);
    for (i, &u) in upper.iter().enumerate() {
        if u < best.0 {
            second = best.0;
            best = (u, i);
        } else if u < second {
            second = u;
        }
    }
    let mut r = PruneResult::default();
    for j in 0..sites.len() {
        let other = if best.1 == j { second } else { best.0 };
        if other < w[j] * (d[j] - g) {
            r.pruned.push(j);
        } else {
            r.kept.push(j);
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sx(p: &[(f64, f64, f64)]) -> SiteSet {
        SiteSet::from_weighted(p).unwrap()
    }

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a.into(), b.into())
    }

    #[test]
    fn stretch_examples() {
        let ctx = StretchContext { sigma: Point2::new(q(1, 2), q(1, 2)), gamma: 0.1 };
        let s = SiteSet::new(vec![
            WeightedSite::new(0, Point2::new(q(1, 2), q(7, 10)), rat_int(3)),
            WeightedSite::new(1, Point2::new(q(1, 10), q(1, 10)), rat_int(1)),
        ])
        .unwrap();
        let t = stretch(&s, &ctx).unwrap();
        assert_eq!(t[0], Point2::new(q(1, 2), q(11, 10)));
        assert_eq!(t[1], s.sites()[1].pos);

        let ctx = StretchContext { sigma: Point2::new(q(0, 1), q(0, 1)), gamma: 0.1 };
        let s = SiteSet::new(vec![
            WeightedSite::new(0, Point2::new(q(3, 10), q(4, 10)), rat_int(2)),
            WeightedSite::new(1, Point2::new(q(1, 1), q(1, 1)), rat_int(1)),
        ])
        .unwrap();
        let t = stretch(&s, &ctx).unwrap();
        assert_eq!(t[0], Point2::new(q(6, 10), q(8, 10)));
        let s = sx(&[(0.0, 0.0, 2.0)]);
        assert!(matches!(stretch(&s, &ctx), Err(GenvorError::SiteAtSigma(0))));
    }

    #[test]
    fn prune_examples() {
        let ctx = StretchContext { sigma: Point2::from_f64(0.0, 0.0), gamma: 0.1 };
        let s = sx(&[(0.2, 0.0, 1.0), (0.8, 0.0, 2.0)]);
        assert_eq!(dominance_prune(&s, &ctx), PruneResult { kept: vec![0], pruned: vec![1] });
        let s = sx(&[(0.5, 0.0, 1.0), (-0.5, 0.0, 1.0)]);
        assert_eq!(dominance_prune(&s, &ctx).pruned, Vec::<usize>::new());
    }

    #[test]
    fn gamma_formula() {
        let ctx = StretchContext::new(Point2::from_f64(0.5, 0.5), 50);
        assert_eq!(ctx.gamma, 0.1);
    }

    #[test]
    fn samplers_are_deterministic_and_prefix_stable() {
        let a = sample_instance(&ModelConfig::uniform(10, WeightProfile::Interval(rat_int(4)), 9)).unwrap();
        let b = sample_instance(&ModelConfig::uniform(20, WeightProfile::Interval(rat_int(4)), 9)).unwrap();
        assert_eq!(a.sites(), &b.sites()[..10]);
        for w in a.weights() {
            assert!((1.0..=4.0).contains(w));
        }
        let g = sample_instance(&ModelConfig::uniform(30, WeightProfile::geometric(), 1)).unwrap();
        assert_eq!(g.weight(3), 8.0);
        assert_eq!(g.weight(25), (1u64 << 20) as f64);
    }

    #[test]
    fn finite_weight_set_single_value() {
        let s = sample_instance(&ModelConfig::finite_weight_set(5, vec![rat_int(1)], None, 3)).unwrap();
        assert!(s.weights().iter().all(|&w| w == 1.0));
    }

    #[test]
    fn invalid_configs() {
        let mut c = ModelConfig::uniform(5, WeightProfile::AllOnes, 1);
        c.weight_profile = None;
        assert!(matches!(sample_instance(&c), Err(GenvorError::InvalidConfig(_))));
        let c = ModelConfig::finite_weight_set(5, vec![], None, 1);
        assert!(sample_instance(&c).is_err());
        let mut c = ModelConfig::random_side(random_geometry(3, 1), 1);
        c.fixed_geometry = None;
        assert!(sample_instance(&c).is_err());
    }

    #[test]
    fn normal_direction_round_trip() {
        for k in 0..16 {
            let th = k as f64 * 0.4;
            let n = constraint_from_normal(th).inward_normal();
            assert!((n.x - th.cos()).abs() < 1e-12 && (n.y - th.sin()).abs() < 1e-12);
            assert!((0.0..std::f64::consts::PI).contains(&constraint_from_normal(th).angle));
        }
    }
}
