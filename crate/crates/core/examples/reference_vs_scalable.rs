//! The all-bisector arrangement and the envelope-based builder produce the
//! same subdivision.

use genvor::diagram::{build, BuildOptions, DiagramKind};
use genvor::geom::rational::rat_int;
use genvor::models::{sample_instance, ModelConfig, WeightProfile};
use genvor::oracle::validate;

fn main() -> genvor::Result<()> {
    let sites = sample_instance(&ModelConfig::uniform(20, WeightProfile::Interval(rat_int(2)), 6))?;
    for kind in [DiagramKind::Standard, DiagramKind::Multiplicative, DiagramKind::OrderKSequence(2)] {
        let slow = build(kind, &sites, &BuildOptions::reference())?;
        let fast = build(kind, &sites, &BuildOptions::default())?;
        let (a, b) = (slow.complexity(None), fast.complexity(None));
        let r = validate(&fast, fast.sites(), 5_000, 1, None);
        println!(
            "{kind:?}: reference total {}, scalable total {}, scalable mismatches {}",
            a.total,
            b.total,
            r.mismatches.len()
        );
    }
    Ok(())
}
