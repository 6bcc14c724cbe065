//! Complexity-versus-n experiments over the random input models.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::diagram::{build, build_semi, BuildOptions, DiagramKind, PlanarDiagram, SemiOptions};
use crate::error::{GenvorError, Result};
use crate::geom::rational::Rational;
use crate::geom::{Rect, SiteSet};
use crate::models::{random_geometry, sample_instance, ModelConfig, WeightProfile};
use crate::oracle::validate;

use super::stats::{log_log_slope, summarize};
use super::{mix_seed, with_jobs};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScaleModel {
    /// Standard diagram of uniform points.
    Standard,
    /// Semi diagram with random sides. The geometry is redrawn per trial
    /// unless `geometry_seed` pins it.
    Semi { geometry_seed: Option<u64> },
    /// Multiplicative diagram of uniform points, measured inside the unit
    /// square.
    Multiplicative(WeightProfile),
    /// Multiplicative diagram with weights drawn from `weights`; positions
    /// are fixed by `positions_seed`.
    FiniteWeightSet {
        #[serde(with = "crate::geom::rational::as_string_vec")]
        weights: Vec<Rational>,
        positions_seed: u64,
    },
}

impl ScaleModel {
    pub fn name(&self) -> String {
        match self {
            ScaleModel::Standard => "standard".into(),
            ScaleModel::Semi { .. } => "semi".into(),
            ScaleModel::Multiplicative(WeightProfile::AllOnes) => "multiplicative_ones".into(),
            ScaleModel::Multiplicative(WeightProfile::Interval(_)) => "multiplicative_interval".into(),
            ScaleModel::Multiplicative(WeightProfile::Geometric { .. }) => "multiplicative_geometric".into(),
            ScaleModel::Multiplicative(WeightProfile::Explicit(_)) => "multiplicative_explicit".into(),
            ScaleModel::FiniteWeightSet { .. } => "finite_weight_set".into(),
        }
    }

    /// Whether the tracked statistic is the count inside the unit square.
    pub fn restricted(&self) -> bool {
        matches!(self, ScaleModel::Multiplicative(_))
    }

    pub fn kind(&self) -> DiagramKind {
        match self {
            ScaleModel::Standard => DiagramKind::Standard,
            ScaleModel::Semi { .. } => DiagramKind::Semi,
            _ => DiagramKind::Multiplicative,
        }
    }

    /// The sampled instance for `(n, seed)`.
    pub fn instance(&self, n: usize, seed: u64) -> Result<SiteSet> {
        match self {
            ScaleModel::Standard => sample_instance(&ModelConfig::uniform(n, WeightProfile::AllOnes, seed)),
            ScaleModel::Semi { geometry_seed } => {
                let gs = geometry_seed.unwrap_or_else(|| mix_seed(seed, 0x6765_6f6d, 0));
                sample_instance(&ModelConfig::random_side(random_geometry(n, gs), seed))
            }
            ScaleModel::Multiplicative(p) => sample_instance(&ModelConfig::uniform(n, p.clone(), seed)),
            ScaleModel::FiniteWeightSet { weights, positions_seed } => {
                let positions = random_geometry(n, *positions_seed).positions;
                sample_instance(&ModelConfig::finite_weight_set(n, weights.clone(), Some(positions), seed))
            }
        }
    }

    pub fn build(&self, sites: &SiteSet) -> Result<PlanarDiagram> {
        match self {
            ScaleModel::Semi { .. } => build_semi(sites, SemiOptions::default()),
            _ => build(self.kind(), sites, &BuildOptions::default()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScalingSpec {
    pub model: ScaleModel,
    pub schedule: Vec<usize>,
    pub trials: usize,
    pub seed: u64,
    /// Oracle probes per diagram; 0 skips validation.
    #[serde(default)]
    pub validate_probes: usize,
    /// Also build the standard diagram of the same points and record its
    /// count inside the unit square.
    #[serde(default)]
    pub compare_standard: bool,
    #[serde(default)]
    pub jobs: Option<usize>,
    /// Record wall-clock build times; off keeps output reproducible.
    #[serde(default)]
    pub timing: bool,
}

impl ScalingSpec {
    pub fn new(model: ScaleModel, schedule: Vec<usize>, trials: usize, seed: u64) -> Self {
        ScalingSpec {
            model,
            schedule,
            trials,
            seed,
            validate_probes: 0,
            compare_standard: false,
            jobs: None,
            timing: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub model: String,
    pub n: usize,
    pub trial: usize,
    pub seed: u64,
    /// Finite vertices plus the vertex at infinity.
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub total: usize,
    pub total_in_u: usize,
    pub wall_ms: f64,
    pub euler_ok: bool,
    pub mismatches: Option<usize>,
    pub standard_total_in_u: Option<usize>,
}

impl TrialRecord {
    pub fn metric(&self, restricted: bool) -> usize {
        if restricted {
            self.total_in_u
        } else {
            self.total
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub model: String,
    pub n: usize,
    pub mean: f64,
    pub var: f64,
    pub max: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentRun {
    pub spec: ScalingSpec,
    pub records: Vec<TrialRecord>,
    pub summary: Vec<SummaryRow>,
    pub slope: f64,
}

impl ExperimentRun {
    pub fn restricted(&self) -> bool {
        self.spec.model.restricted()
    }

    pub fn summarize(
        records: &[TrialRecord],
        schedule: &[usize],
        model: &str,
        restricted: bool,
    ) -> (Vec<SummaryRow>, f64) {
        let summary: Vec<SummaryRow> = schedule
            .iter()
            .map(|&n| {
                let xs: Vec<f64> = records.iter().filter(|r| r.n == n).map(|r| r.metric(restricted) as f64).collect();
                let s = summarize(&xs);
                SummaryRow { model: model.to_string(), n, mean: s.mean, var: s.var, max: s.max }
            })
            .collect();
        let slope = if schedule.len() >= 2 {
            let xs: Vec<f64> = summary.iter().map(|r| r.n as f64).collect();
            let ys: Vec<f64> = summary.iter().map(|r| r.mean).collect();
            log_log_slope(&xs, &ys)
        } else {
            f64::NAN
        };
        (summary, slope)
    }

    /// Recomputes the summary from the records and compares.
    pub fn summary_consistent(&self) -> bool {
        let (s, slope) =
            Self::summarize(&self.records, &self.spec.schedule, &self.spec.model.name(), self.restricted());
        s == self.summary && (slope == self.slope || (slope.is_nan() && self.slope.is_nan()))
    }

    /// `mean / n` at the given size.
    pub fn mean_per_site(&self, n: usize) -> Option<f64> {
        self.summary.iter().find(|r| r.n == n).map(|r| r.mean / n as f64)
    }

    pub fn total_mismatches(&self) -> usize {
        self.records.iter().filter_map(|r| r.mismatches).sum()
    }
}

fn run_trial(spec: &ScalingSpec, n: usize, trial: usize) -> Result<TrialRecord> {
    let seed = mix_seed(spec.seed, n as u64, trial as u64);
    let sites = spec.model.instance(n, seed)?;
    let start = Instant::now();
    let d = spec.model.build(&sites)?;
    let all = d.complexity(None);
    let wall = start.elapsed().as_secs_f64() * 1e3;
    let in_u = d.complexity(Some(Rect::unit()));
    let mismatches = (spec.validate_probes > 0).then(|| {
        let region = spec.model.restricted().then(Rect::unit);
        validate(&d, d.sites(), spec.validate_probes, seed ^ 0x5eed, region).mismatches.len()
    });
    let standard_total_in_u = if spec.compare_standard {
        let s = build(DiagramKind::Standard, &sites, &BuildOptions::default())?;
        Some(s.complexity(Some(Rect::unit())).total)
    } else {
        None
    };
    Ok(TrialRecord {
        model: spec.model.name(),
        n,
        trial,
        seed,
        vertices: all.finite_vertices + all.infinity_vertex,
        edges: all.edges,
        faces: all.faces,
        total: all.total,
        total_in_u: in_u.total,
        wall_ms: if spec.timing { wall } else { 0.0 },
        euler_ok: d.euler_holds(),
        mismatches,
        standard_total_in_u,
    })
}

/// Builds `trials` instances for every `n` of the schedule. Trials run in
/// parallel; records come back ordered by `(n, trial)`.
pub fn run_scaling(spec: &ScalingSpec) -> Result<ExperimentRun> {
    let cap = crate::diagram::BuildPath::Scalable.capacity();
    if let Some(&n) = spec.schedule.iter().find(|&&n| n > cap) {
        return Err(GenvorError::BuilderCapacityExceeded { n, limit: cap });
    }
    let jobs: Vec<(usize, usize)> = spec.schedule.iter().flat_map(|&n| (0..spec.trials).map(move |t| (n, t))).collect();
    let records: Vec<TrialRecord> =
        with_jobs(spec.jobs, || jobs.par_iter().map(|&(n, t)| run_trial(spec, n, t)).collect::<Result<_>>())?;
    let (summary, slope) =
        ExperimentRun::summarize(&records, &spec.schedule, &spec.model.name(), spec.model.restricted());
    Ok(ExperimentRun { spec: spec.clone(), records, summary, slope })
}
