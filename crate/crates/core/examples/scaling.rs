//! Mean complexity against n for a random model, with oracle checks and a
//! log-log slope. Writes CSV files next to the working directory.

use genvor::experiments::output::write_run;
use genvor::experiments::{run_scaling, ScaleModel, ScalingSpec};
use genvor::models::WeightProfile;

fn main() -> genvor::Result<()> {
    let mut spec =
        ScalingSpec::new(ScaleModel::Multiplicative(WeightProfile::geometric()), vec![16, 32, 64, 128], 10, 2024);
    spec.validate_probes = 2_000;
    let run = run_scaling(&spec)?;
    for r in &run.summary {
        println!("n = {:4}: mean {:8.1}  var {:8.1}  max {:6}", r.n, r.mean, r.var, r.max);
    }
    println!("log-log slope {:.3}, oracle mismatches {}", run.slope, run.total_mismatches());

    let dir = std::env::temp_dir();
    write_run(&dir.join("genvor_trials.csv"), Some(&dir.join("genvor_summary.csv")), &run)?;
    println!("wrote {}", dir.join("genvor_trials.csv").display());
    Ok(())
}
