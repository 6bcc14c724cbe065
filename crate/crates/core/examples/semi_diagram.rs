//! Semi Voronoi diagram: every site sees one closed half-plane bounded by a
//! line through it, and a point belongs to its nearest visible site.

use genvor::diagram::{build_semi, FaceLabel, SemiOptions};
use genvor::geom::V2;
use genvor::models::{random_geometry, sample_instance, ModelConfig};
use genvor::oracle::validate;

fn main() -> genvor::Result<()> {
    let sites = sample_instance(&ModelConfig::random_side(random_geometry(40, 11), 5))?;
    let d = build_semi(&sites, SemiOptions::default())?;
    let c = d.complexity(None);
    println!("semi diagram of 40 sites: total complexity {} ({} faces)", c.total, c.faces);

    let dark = d.face_labels().iter().filter(|l| **l == FaceLabel::NotVisible).count();
    println!("{dark} faces see no site");
    println!("label at the center: {:?}", d.label_at(V2::new(0.5, 0.5)));

    // With both sentinels every point sees some site.
    let covered = build_semi(&sites, SemiOptions { full_plane: false, sentinels: true })?;
    assert!(!covered.face_labels().contains(&FaceLabel::NotVisible));

    let report = validate(&d, d.sites(), 10_000, 2, None);
    println!("oracle mismatches: {}", report.mismatches.len());
    Ok(())
}
