//! Write SVG pictures of one diagram of each kind to the temp directory.

use genvor::diagram::svg::render_svg;
use genvor::diagram::{build_multiplicative, build_order_k_sequence, build_semi, build_standard, SemiOptions};
use genvor::geom::rational::rat_int;
use genvor::models::{random_geometry, sample_instance, ModelConfig, WeightProfile};

fn main() -> genvor::Result<()> {
    let plain = sample_instance(&ModelConfig::uniform(25, WeightProfile::AllOnes, 1))?;
    let weighted = sample_instance(&ModelConfig::uniform(25, WeightProfile::Interval(rat_int(3)), 1))?;
    let sided = sample_instance(&ModelConfig::random_side(random_geometry(25, 1), 1))?;
    let diagrams = [
        ("standard", build_standard(&plain)?),
        ("multiplicative", build_multiplicative(&weighted, None)?),
        ("semi", build_semi(&sided, SemiOptions::default())?),
        ("order2_sequence", build_order_k_sequence(&plain, 2)?),
    ];
    let dir = std::env::temp_dir();
    for (name, d) in &diagrams {
        let path = dir.join(format!("genvor_{name}.svg"));
        std::fs::write(&path, render_svg(d, None))?;
        println!("{}", path.display());
    }
    Ok(())
}
