//! How often do k random half-planes, one per fixed line, fail to cover the
//! plane? Exact face enumeration against Monte Carlo.

use genvor::experiments::{estimate_cover_failure, exact_failure_probability, lemma31_bound};
use genvor::models::random_geometry;

fn main() -> genvor::Result<()> {
    for k in 3..=8u32 {
        let g = random_geometry(k as usize, 100 + k as u64);
        let exact = exact_failure_probability(&g)?;
        let t = estimate_cover_failure(&g, 100_000, k as u64)?;
        println!(
            "k = {k}: bound {} = {:.5}, exact {exact}, estimate {:.5} +- {:.5}",
            lemma31_bound(k),
            t.bound_value,
            t.p_hat,
            t.std_err
        );
    }
    Ok(())
}
