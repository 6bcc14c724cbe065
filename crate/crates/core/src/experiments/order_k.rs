//! Total complexity of order-k sequence diagrams against `C n k^3`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::diagram::{build_order_k_sequence, PlanarDiagram};
use crate::error::Result;
use crate::models::{sample_instance, ModelConfig, WeightProfile};

use super::mix_seed;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OrderKCell {
    pub n: usize,
    pub k: usize,
    pub mean_total: f64,
    /// `mean_total / (n k^3)`.
    pub ratio: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OrderKReport {
    pub cells: Vec<OrderKCell>,
    /// Geometric mean of the per-cell ratios.
    pub c_fit: f64,
    /// Largest `mean_total / (c_fit n k^3)`.
    pub worst: f64,
}

impl OrderKReport {
    pub fn within(&self, factor: f64) -> bool {
        self.worst <= factor
    }
}

/// Builds `trials` uniform instances per `(n, k)` and fits one constant.
/// `inspect` sees every diagram, e.g. for oracle validation.
pub fn order_k_fit(
    ns: &[usize],
    ks: &[usize],
    trials: usize,
    seed: u64,
    inspect: impl Fn(&PlanarDiagram) + Sync,
) -> Result<OrderKReport> {
    let grid: Vec<(usize, usize)> = ns.iter().flat_map(|&n| ks.iter().map(move |&k| (n, k))).collect();
    let cells: Vec<OrderKCell> = grid
        .par_iter()
        .map(|&(n, k)| {
            let mut sum = 0.0;
            for t in 0..trials {
                let s = sample_instance(&ModelConfig::uniform(
                    n,
                    WeightProfile::AllOnes,
                    mix_seed(seed, n as u64, t as u64),
                ))?;
                let d = build_order_k_sequence(&s, k)?;
                inspect(&d);
                sum += d.complexity(None).total as f64;
            }
            let mean_total = sum / trials as f64;
            Ok(OrderKCell { n, k, mean_total, ratio: mean_total / (n * k * k * k) as f64 })
        })
        .collect::<Result<_>>()?;
    let c_fit = (cells.iter().map(|c| c.ratio.ln()).sum::<f64>() / cells.len() as f64).exp();
    let worst = cells.iter().map(|c| c.ratio / c_fit).fold(0.0, f64::max);
    Ok(OrderKReport { cells, c_fit, worst })
}
