//! Stretch sites about a center and drop the ones that cannot win near it.

use genvor::experiments::prune_effectiveness;
use genvor::geom::rational::rat_int;
use genvor::geom::Point2;
use genvor::models::{dominance_prune, sample_instance, stretch, ModelConfig, StretchContext, WeightProfile};

fn main() -> genvor::Result<()> {
    let sites = sample_instance(&ModelConfig::uniform(200, WeightProfile::Interval(rat_int(4)), 17))?;
    let ctx = StretchContext::new(Point2::from_f64(0.5, 0.5), sites.len());
    let stretched = stretch(&sites, &ctx)?;
    let part = dominance_prune(&sites, &ctx);
    println!("gamma = {:.4}; {} of {} sites survive at the center", ctx.gamma, part.kept.len(), sites.len());
    for &i in part.kept.iter().take(5) {
        let p = stretched[i].to_v2();
        println!("  site {i} stretched to ({:.4}, {:.4})", p.x, p.y);
    }

    let report = prune_effectiveness(&sites, 1_000, 3);
    println!("{} cells, mean kept {:.2}, pruned winners {}", report.cells.len(), report.mean_kept, report.violations);
    Ok(())
}
