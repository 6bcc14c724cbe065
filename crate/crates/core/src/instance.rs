//! Instance files: JSON with exact decimal-string coordinates and weights.
//!
//! ```json
//! {"sites": [["0.25", "0.5"], ["0.75", "1/3"]], "weights": ["1", "2"],
//!  "lines": [{"angle": 0.0, "side": "left"}, {"angle": 1.5, "side": "right"}],
//!  "seed": 7, "model": "uniform_locations"}
//! ```

use std::path::Path;

use num_bigint::BigInt;
use num_traits::One;
use rand::RngCore;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::geom::rational::{as_string_vec, Rational};
use crate::geom::{Point2, SiteSet, VisibilityConstraint, WeightedSite};
use crate::models::substream;

/// Record of the jitter applied to an adversarial input.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Perturbation {
    pub seed: u64,
    /// Bound on the absolute shift of each coordinate.
    pub magnitude: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Instance {
    pub sites: Vec<Point2>,
    #[serde(default, skip_serializing_if = "Vec::is_empty", with = "as_string_vec")]
    pub weights: Vec<Rational>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub lines: Vec<VisibilityConstraint>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub model: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub perturbation: Option<Perturbation>,
}

impl Instance {
    pub fn from_sites(s: &SiteSet, seed: Option<u64>, model: Option<String>) -> Instance {
        Instance {
            sites: s.sites().iter().map(|w| w.pos.clone()).collect(),
            weights: s.sites().iter().map(|w| w.weight.clone()).collect(),
            lines: s.constraints().map(|c| c.to_vec()).unwrap_or_default(),
            seed,
            model,
            perturbation: None,
        }
    }

    pub fn to_sites(&self) -> Result<SiteSet> {
        let sites = self
            .sites
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let w = self.weights.get(i).cloned().unwrap_or_else(Rational::one);
                WeightedSite::new(i, p.clone(), w)
            })
            .collect();
        let s = SiteSet::new(sites)?;
        if self.lines.is_empty() {
            Ok(s)
        } else {
            s.with_constraints(self.lines.clone())
        }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }

    pub fn from_json(s: &str) -> Result<Instance> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn load(path: &Path) -> Result<Instance> {
        Instance::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json()?)?;
        Ok(())
    }

    /// Shifts every coordinate by a seed-derived dyadic amount of at most
    /// `2^-31` (below `1e-9`) to break degeneracies in hand-made inputs.
    pub fn perturb(&mut self, seed: u64) {
        let half = BigInt::from(1u64 << 31);
        let den = BigInt::one() << 62u32;
        for (i, p) in self.sites.iter_mut().enumerate() {
            let mut r = substream(seed, 9, i);
            for c in [&mut p.x, &mut p.y] {
                let k = BigInt::from(r.next_u32()) - &half;
                *c = &*c + Rational::new(k, den.clone());
            }
        }
        self.perturbation = Some(Perturbation { seed, magnitude: 2f64.powi(-31) });
    }
}
