//! CSV writers and the metadata sidecar written next to every artifact.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::Result;

use super::scaling::{ExperimentRun, SummaryRow, TrialRecord};

/// Float with nine significant digits.
pub fn fmt_f64(v: f64) -> String {
    if v == 0.0 {
        return "0.00000000e0".to_string();
    }
    format!("{v:.8e}")
}

pub const TRIAL_HEADER: &str = "model,n,trial,seed,vertices,edges,faces,total,total_in_U,wall_ms";
pub const SUMMARY_HEADER: &str = "model,n,mean,var,max,slope";

pub fn trials_csv(records: &[TrialRecord]) -> String {
    let mut out = String::from(TRIAL_HEADER);
    out.push('\n');
    for r in records {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{}",
            r.model,
            r.n,
            r.trial,
            r.seed,
            r.vertices,
            r.edges,
            r.faces,
            r.total,
            r.total_in_u,
            fmt_f64(r.wall_ms)
        );
    }
    out
}

pub fn summary_csv(rows: &[SummaryRow], slope: f64) -> String {
    let mut out = String::from(SUMMARY_HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            r.model,
            r.n,
            fmt_f64(r.mean),
            fmt_f64(r.var),
            fmt_f64(r.max),
            fmt_f64(slope)
        );
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Metadata {
    pub tool: String,
    pub version: String,
    pub subcommand: String,
    pub seed: u64,
    /// SHA-256 of the canonical JSON form of the configuration.
    pub config_hash: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub perturbation: Option<crate::instance::Perturbation>,
}

impl Metadata {
    pub fn new<C: Serialize>(subcommand: &str, seed: u64, config: &C) -> Self {
        Metadata {
            tool: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            subcommand: subcommand.to_string(),
            seed,
            config_hash: config_hash(config),
            perturbation: None,
        }
    }
}

pub fn config_hash<C: Serialize>(config: &C) -> String {
    let bytes = serde_json::to_vec(config).expect("config serializes");
    let digest = Sha256::digest(&bytes);
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

pub fn meta_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".meta.json");
    PathBuf::from(s)
}

pub fn write_with_meta(out: &Path, contents: &str, meta: &Metadata) -> Result<()> {
    std::fs::write(out, contents)?;
    let mut js = serde_json::to_string_pretty(meta)?;
    js.push('\n');
    std::fs::write(meta_path(out), js)?;
    Ok(())
}

/// Writes `<stem>.trials.csv` style outputs for a scaling run.
pub fn write_run(trials: &Path, summary: Option<&Path>, run: &ExperimentRun) -> Result<()> {
    let meta = Metadata::new("scale", run.spec.seed, &run.spec);
    write_with_meta(trials, &trials_csv(&run.records), &meta)?;
    if let Some(s) = summary {
        write_with_meta(s, &summary_csv(&run.summary, run.slope), &meta)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nine_digits() {
        assert_eq!(fmt_f64(1.0), "1.00000000e0");
        assert_eq!(fmt_f64(123.456789012), "1.23456789e2");
        assert_eq!(fmt_f64(0.0), "0.00000000e0");
    }

    #[test]
    fn hash_stable() {
        let a = config_hash(&(1u32, "x"));
        assert_eq!(a, config_hash(&(1u32, "x")));
        assert_ne!(a, config_hash(&(2u32, "x")));
        assert_eq!(a.len(), 64);
    }

    #[test]
    fn meta_name() {
        assert_eq!(meta_path(Path::new("out/run.csv")), PathBuf::from("out/run.csv.meta.json"));
    }
}
