//! Soundness and size of the dominance prune at every grid-cell center.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::geom::{Point2, SiteSet, V2};
use crate::models::{dominance_prune, StretchContext};
use crate::oracle::nearest_weighted_site;

use super::mix_seed;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PruneCell {
    pub sigma: [f64; 2],
    pub kept: usize,
    pub pruned: usize,
    /// Probes in `B(sigma, gamma)` won by a pruned site.
    pub violations: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PruneReport {
    pub n: usize,
    pub gamma: f64,
    pub probes_per_cell: usize,
    pub cells: Vec<PruneCell>,
    pub violations: usize,
    pub mean_kept: f64,
}

/// Runs the prune at the centers of the `ceil(sqrt n)`-square grid over the
/// unit square and probes each ball `B(sigma, gamma)` uniformly.
pub fn prune_effectiveness(sites: &SiteSet, probes_per_cell: usize, seed: u64) -> PruneReport {
    let n = sites.len();
    let g = ((n.max(1) as f64).sqrt().ceil() as usize).max(1);
    let centers: Vec<(usize, V2)> = (0..g * g)
        .map(|c| {
            let (ix, iy) = (c % g, c / g);
            (c, V2::new((ix as f64 + 0.5) / g as f64, (iy as f64 + 0.5) / g as f64))
        })
        .collect();
    let cells: Vec<PruneCell> = centers
        .par_iter()
        .map(|&(c, sigma)| {
            let ctx = StretchContext::new(Point2::from_f64(sigma.x, sigma.y), n);
            let part = dominance_prune(sites, &ctx);
            let mut is_pruned = vec![false; n];
            for &j in &part.pruned {
                is_pruned[j] = true;
            }
            let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(seed, c as u64, 0x7072));
            let mut violations = 0;
            for _ in 0..probes_per_cell {
                let r = ctx.gamma * rng.gen::<f64>().sqrt();
                let t = std::f64::consts::TAU * rng.gen::<f64>();
                let x = sigma + V2::new(t.cos(), t.sin()) * r;
                if is_pruned[nearest_weighted_site(x, sites)] {
                    violations += 1;
                }
            }
            PruneCell { sigma: [sigma.x, sigma.y], kept: part.kept.len(), pruned: part.pruned.len(), violations }
        })
        .collect();
    let violations = cells.iter().map(|c| c.violations).sum();
    let mean_kept = cells.iter().map(|c| c.kept as f64).sum::<f64>() / cells.len() as f64;
    PruneReport { n, gamma: (1.0 / (2.0 * n as f64)).sqrt(), probes_per_cell, cells, violations, mean_kept }
}
