//! Multiplicatively weighted diagram: bisectors are Apollonius circles and a
//! site's region may fall apart into several pieces.

use genvor::diagram::build_multiplicative;
use genvor::geom::rational::rat_int;
use genvor::geom::{Rect, SiteSet, V2};
use genvor::models::{sample_instance, ModelConfig, WeightProfile};
use genvor::oracle::validate;

fn main() -> genvor::Result<()> {
    // Three collinear sites; each heavier site owns a disc cut out of the
    // lighter sites' regions.
    let sites = SiteSet::from_weighted(&[(0.0, 0.0, 1.0), (1.0, 0.0, 2.0), (2.0, 0.0, 4.0)])?;
    let d = build_multiplicative(&sites, None)?;
    for (i, label) in d.face_labels().iter().enumerate() {
        println!("face {i}: {label:?}");
    }

    for (name, profile) in [
        ("all ones", WeightProfile::AllOnes),
        ("interval [1, 4]", WeightProfile::Interval(rat_int(4))),
        ("geometric", WeightProfile::geometric()),
    ] {
        let sites = sample_instance(&ModelConfig::uniform(200, profile, 9))?;
        let d = build_multiplicative(&sites, None)?;
        let all = d.complexity(None);
        let unit = d.complexity(Some(Rect::unit()));
        let report = validate(&d, d.sites(), 10_000, 4, Some(Rect::unit()));
        println!(
            "{name}: total {} overall, {} inside the unit square, {} mismatches",
            all.total,
            unit.total,
            report.mismatches.len()
        );
    }
    println!("label at (0.5, 0.5): {:?}", d.label_at(V2::new(0.5, 0.5)));
    Ok(())
}
