//! Complexity seen by each cell of a sqrt(n) x sqrt(n) grid stays flat as n
//! grows.

use genvor::diagram::build_multiplicative;
use genvor::experiments::{grid_local_complexity, mix_seed};
use genvor::models::{sample_instance, ModelConfig, WeightProfile};

fn main() -> genvor::Result<()> {
    for n in [64, 256, 1024] {
        let trials = 4;
        let mut mean = 0.0;
        let mut max = 0;
        for t in 0..trials {
            let sites =
                sample_instance(&ModelConfig::uniform(n, WeightProfile::geometric(), mix_seed(8, n as u64, t)))?;
            let r = grid_local_complexity(&build_multiplicative(&sites, None)?, n);
            mean += r.mean / trials as f64;
            max = max.max(r.max);
        }
        println!("n = {n:4}: mean per cell {mean:.3}, busiest cell {max}");
    }
    Ok(())
}
