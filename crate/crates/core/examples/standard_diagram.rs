//! Build the ordinary Voronoi diagram of uniform points and check it
//! against the brute-force oracle.

use genvor::diagram::build_standard;
use genvor::models::{sample_instance, ModelConfig, WeightProfile};
use genvor::oracle::validate;

fn main() -> genvor::Result<()> {
    let sites = sample_instance(&ModelConfig::uniform(50, WeightProfile::AllOnes, 3))?;
    let d = build_standard(&sites)?;
    let c = d.complexity(None);
    println!(
        "faces {} (one per site), edges {}, vertices {} + {}",
        c.faces, c.edges, c.finite_vertices, c.infinity_vertex
    );
    println!("euler holds: {}", d.euler_holds());

    let report = validate(&d, d.sites(), 10_000, 1, None);
    println!("{} probes, {} mismatches", report.probes_tested, report.mismatches.len());
    Ok(())
}
