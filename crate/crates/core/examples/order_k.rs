//! Order-k and order-k sequence diagrams, and their growth against n k^3.

use genvor::diagram::{build_order_k, build_order_k_sequence};
use genvor::experiments::order_k_fit;
use genvor::models::{sample_instance, ModelConfig, WeightProfile};

fn main() -> genvor::Result<()> {
    let sites = sample_instance(&ModelConfig::uniform(12, WeightProfile::AllOnes, 1))?;
    for k in 1..=3 {
        let set = build_order_k(&sites, k)?;
        let seq = build_order_k_sequence(&sites, k)?;
        println!("k = {k}: order-k has {} faces, the sequence diagram {}", set.face_count(), seq.face_count());
    }

    let fit = order_k_fit(&[8, 12, 16], &[2, 3, 4], 5, 42, |_| {})?;
    for c in &fit.cells {
        println!("n = {:2}, k = {}: mean total {:7.1}, ratio to n k^3 {:.3}", c.n, c.k, c.mean_total, c.ratio);
    }
    println!("fitted C = {:.3}, worst cell at {:.2} C", fit.c_fit, fit.worst);
    Ok(())
}
