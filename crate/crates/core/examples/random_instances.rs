//! Sample one instance from each random model and round-trip it through JSON.
//!
//! ```sh
//! cargo run --example random_instances
//! ```

use genvor::geom::rational::rat_int;
use genvor::instance::Instance;
use genvor::models::{random_geometry, sample_instance, ModelConfig, WeightProfile};

fn main() -> genvor::Result<()> {
    let configs = [
        ("uniform, geometric weights", ModelConfig::uniform(8, WeightProfile::geometric(), 7)),
        ("random sides", ModelConfig::random_side(random_geometry(8, 1), 7)),
        ("finite weight set", ModelConfig::finite_weight_set(8, vec![rat_int(1), rat_int(2), rat_int(4)], None, 7)),
    ];
    for (name, cfg) in configs {
        let sites = sample_instance(&cfg)?;
        let inst = Instance::from_sites(&sites, Some(cfg.seed), None);
        let back = Instance::from_json(&inst.to_json()?)?;
        assert_eq!(back, inst);
        println!("{name}:");
        for (i, s) in sites.sites().iter().enumerate() {
            let p = s.pos.to_v2();
            print!("  site {i}: ({:.4}, {:.4}) weight {}", p.x, p.y, s.weight);
            match sites.constraints() {
                Some(c) => println!(" sees {:?} of angle {:.3}", c[i].side, c[i].angle),
                None => println!(),
            }
        }
    }
    Ok(())
}
