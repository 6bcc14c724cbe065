//! The `genvor` command line.
//!
//! Exit status: 0 on success, 1 on usage or input errors, 2 when a
//! validation finds a mismatch, 3 when a builder's capacity is exceeded.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::diagram::svg::render_svg;
use crate::diagram::{build, build_semi_with, BuildOptions, BuildPath, DiagramKind, PlanarDiagram, SemiOptions};
use crate::error::{GenvorError, Result};
use crate::experiments::output::{fmt_f64, write_run, write_with_meta, Metadata};
use crate::experiments::{
    estimate_cover_failure, grid_local_complexity, mix_seed, prune_effectiveness, run_scaling, ScaleModel, ScalingSpec,
};
use crate::geom::rational::parse_rational;
use crate::geom::{Rational, Rect, SiteSet, V2};
use crate::instance::Instance;
use crate::models::{random_geometry, sample_instance, ModelConfig, WeightProfile};
use crate::oracle::validate;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "genvor", version, about = "Generalized Voronoi diagrams and their expected complexity")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Command {
    /// Sample an instance file from a random model.
    Gen(GenArgs),
    /// Build a diagram and write it as SVG or JSON, optionally with counts.
    Build(BuildArgs),
    /// Compare a diagram against the brute-force oracle.
    Validate(ValidateArgs),
    /// Count vertices, edges and faces of a diagram.
    Count(CountArgs),
    /// Estimate the probability that random half-planes fail to cover the plane.
    Cover(CoverArgs),
    /// Mean complexity against n over a schedule of sizes.
    Scale(ScaleArgs),
    /// Per-grid-cell complexity of multiplicative diagrams.
    Gridlocal(GridlocalArgs),
    /// Check the dominance prune against probes near each grid-cell center.
    Prune(PruneArgs),
    /// Render a diagram as SVG.
    Render(RenderArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModelArg {
    Uniform,
    RandomSide,
    FiniteWeightSet,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WeightsArg {
    Ones,
    Interval,
    Geometric,
}

#[derive(Args, Debug, Serialize)]
pub struct WeightFlags {
    /// Weight profile for uniform locations.
    #[arg(long, value_enum, default_value = "ones")]
    pub weights: WeightsArg,
    /// Upper end of the interval profile.
    #[arg(long, default_value = "4")]
    pub interval_max: String,
    /// Largest exponent of the geometric profile.
    #[arg(long, default_value_t = 20)]
    pub cap: u32,
}

impl WeightFlags {
    fn profile(&self) -> Result<WeightProfile> {
        Ok(match self.weights {
            WeightsArg::Ones => WeightProfile::AllOnes,
            WeightsArg::Interval => WeightProfile::Interval(parse_rational(&self.interval_max)?),
            WeightsArg::Geometric => WeightProfile::Geometric { cap: self.cap },
        })
    }
}

#[derive(Args, Debug, Serialize)]
pub struct GenArgs {
    #[arg(long, value_enum, default_value = "uniform")]
    pub model: ModelArg,
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    pub weight: WeightFlags,
    /// Comma-separated weight set for the finite-weight-set model.
    #[arg(long, value_delimiter = ',', default_value = "1,2,4")]
    pub weight_set: Vec<String>,
    /// Seed for fixed positions and line angles; defaults to a value derived
    /// from `--seed`.
    #[arg(long)]
    pub geometry_seed: Option<u64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DiagramArg {
    Standard,
    Semi,
    Multiplicative,
    OrderK,
    OrderKSeq,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PathArg {
    Reference,
    Scalable,
}

#[derive(Args, Debug, Serialize)]
pub struct DiagramFlags {
    #[arg(short, long)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "standard")]
    pub diagram: DiagramArg,
    /// Order for the order-k kinds.
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    #[arg(long, value_enum, default_value = "scalable")]
    pub path: PathArg,
    /// Semi diagram: ignore the visibility constraints.
    #[arg(long)]
    pub full_plane: bool,
    /// Semi diagram: add two far sites covering the plane.
    #[arg(long)]
    pub sentinels: bool,
    /// Jitter the input coordinates with this seed before building.
    #[arg(long)]
    pub perturb: Option<u64>,
}

impl DiagramFlags {
    fn kind(&self) -> DiagramKind {
        match self.diagram {
            DiagramArg::Standard => DiagramKind::Standard,
            DiagramArg::Semi => DiagramKind::Semi,
            DiagramArg::Multiplicative => DiagramKind::Multiplicative,
            DiagramArg::OrderK => DiagramKind::OrderK(self.k),
            DiagramArg::OrderKSeq => DiagramKind::OrderKSequence(self.k),
        }
    }

    fn load(&self) -> Result<(Instance, PlanarDiagram)> {
        let mut inst = Instance::load(&self.input)?;
        if let Some(s) = self.perturb {
            inst.perturb(s);
        }
        let sites = inst.to_sites()?;
        let opts = BuildOptions {
            path: match self.path {
                PathArg::Reference => BuildPath::Reference,
                PathArg::Scalable => BuildPath::Scalable,
            },
            clip: None,
        };
        let d = match self.kind() {
            DiagramKind::Semi => {
                build_semi_with(&sites, SemiOptions { full_plane: self.full_plane, sentinels: self.sentinels }, &opts)?
            }
            kind => build(kind, &sites, &opts)?,
        };
        Ok((inst, d))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Svg,
}

#[derive(Args, Debug, Serialize)]
pub struct BuildArgs {
    #[command(flatten)]
    pub diagram: DiagramFlags,
    /// Diagram output; `.svg` renders, anything else gets JSON.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Also write the complexity counts as CSV.
    #[arg(long)]
    pub count: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
pub struct ValidateArgs {
    #[command(flatten)]
    pub diagram: DiagramFlags,
    #[arg(long, default_value_t = 10_000)]
    pub probes: usize,
    /// Probe region `x0,y0,x1,y1`; defaults to the clip box.
    #[arg(long, value_delimiter = ',')]
    pub region: Option<Vec<f64>>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
pub struct CountArgs {
    #[command(flatten)]
    pub diagram: DiagramFlags,
    /// Restrict to features meeting `x0,y0,x1,y1`.
    #[arg(long, value_delimiter = ',')]
    pub region: Option<Vec<f64>>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
pub struct CoverArgs {
    #[arg(long)]
    pub k: usize,
    #[arg(long, default_value_t = 100_000)]
    pub trials: u64,
    /// Number of random line geometries to test.
    #[arg(long, default_value_t = 1)]
    pub geometries: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScaleModelArg {
    Standard,
    Semi,
    Multiplicative,
    FiniteWeightSet,
}

#[derive(Args, Debug, Serialize)]
pub struct ScaleArgs {
    #[arg(long, value_enum, default_value = "multiplicative")]
    pub model: ScaleModelArg,
    #[command(flatten)]
    pub weight: WeightFlags,
    #[arg(long, value_delimiter = ',', default_value = "1,2,4")]
    pub weight_set: Vec<String>,
    /// Pins the semi geometry or the finite-weight-set positions.
    #[arg(long)]
    pub geometry_seed: Option<u64>,
    #[arg(long, value_delimiter = ',', default_value = "16,32,64,128,256")]
    pub schedule: Vec<usize>,
    #[arg(long, default_value_t = 30)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Oracle probes per diagram; 0 disables validation.
    #[arg(long, default_value_t = 0)]
    pub validate_probes: usize,
    #[arg(long)]
    pub compare_standard: bool,
    /// Worker threads; defaults to all cores.
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Record wall-clock times (output is then not reproducible).
    #[arg(long)]
    pub timing: bool,
    /// Per-trial CSV.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Summary CSV.
    #[arg(long)]
    pub summary: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
pub struct GridlocalArgs {
    #[arg(long, value_delimiter = ',', default_value = "64,256,1024")]
    pub n: Vec<usize>,
    #[arg(long, default_value_t = 10)]
    pub trials: usize,
    #[command(flatten)]
    pub weight: WeightFlags,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
pub struct PruneArgs {
    #[arg(long, default_value_t = 200)]
    pub n: usize,
    #[arg(long, default_value_t = 1)]
    pub instances: usize,
    #[arg(long, default_value_t = 1000)]
    pub probes: usize,
    #[command(flatten)]
    pub weight: WeightFlags,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
pub struct RenderArgs {
    #[command(flatten)]
    pub diagram: DiagramFlags,
    /// View window `x0,y0,x1,y1`; defaults to the unit square.
    #[arg(long, value_delimiter = ',')]
    pub window: Option<Vec<f64>>,
    #[arg(short, long)]
    pub output: PathBuf,
}

/// Seed after applying the `GENVOR_SEED` override.
pub fn effective_seed(flag: u64) -> Result<u64> {
    match std::env::var("GENVOR_SEED") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| GenvorError::InvalidConfig(format!("GENVOR_SEED={v:?} is not an unsigned integer"))),
        Err(_) => Ok(flag),
    }
}

fn rect(v: &Option<Vec<f64>>) -> Result<Option<Rect>> {
    match v.as_deref() {
        None => Ok(None),
        Some(&[x0, y0, x1, y1]) if x0 < x1 && y0 < y1 => Ok(Some(Rect::new(V2::new(x0, y0), V2::new(x1, y1)))),
        Some(v) => Err(GenvorError::InvalidConfig(format!("expected x0,y0,x1,y1 with x0 < x1 and y0 < y1, got {v:?}"))),
    }
}

fn rationals(v: &[String]) -> Result<Vec<Rational>> {
    v.iter().map(|s| parse_rational(s.trim())).collect()
}

struct Outcome {
    code: i32,
}

impl Outcome {
    fn ok() -> Outcome {
        Outcome { code: EXIT_OK }
    }

    fn check(passed: bool) -> Outcome {
        Outcome { code: if passed { EXIT_OK } else { EXIT_MISMATCH } }
    }
}

/// Writes to `path` with a metadata sidecar, or to stdout with the metadata
/// on stderr.
fn emit(path: Option<&Path>, contents: &str, meta: &Metadata) -> Result<()> {
    match path {
        Some(p) => write_with_meta(p, contents, meta),
        None => {
            eprintln!("# {} {} seed={} config={}", meta.tool, meta.version, meta.seed, meta.config_hash);
            print!("{contents}");
            Ok(())
        }
    }
}

fn meta_for<C: Serialize>(name: &str, seed: u64, config: &C, inst: Option<&Instance>) -> Metadata {
    let mut m = Metadata::new(name, seed, config);
    m.perturbation = inst.and_then(|i| i.perturbation.clone());
    m
}

const COUNT_HEADER: &str = "diagram,n,finite_vertices,infinity_vertex,edges,faces,total";

fn count_csv(d: &PlanarDiagram, n: usize, region: Option<Rect>) -> String {
    let c = d.complexity(region);
    let name = serde_json::to_value(d.kind).ok().map(|v| match v {
        serde_json::Value::String(s) => s,
        serde_json::Value::Object(o) => o.keys().next().cloned().unwrap_or_default(),
        _ => String::new(),
    });
    format!(
        "{COUNT_HEADER}\n{},{},{},{},{},{},{}\n",
        name.unwrap_or_default(),
        n,
        c.finite_vertices,
        c.infinity_vertex,
        c.edges,
        c.faces,
        c.total
    )
}

#[derive(Serialize)]
struct DiagramSummary<'a> {
    kind: DiagramKind,
    path: BuildPath,
    clip: Rect,
    complexity: crate::diagram::ComplexityReport,
    euler_ok: bool,
    labels: &'a [crate::diagram::FaceLabel],
}

fn cmd_gen(a: &GenArgs, seed: u64) -> Result<Outcome> {
    let gs = a.geometry_seed.unwrap_or_else(|| mix_seed(seed, 0x6765_6f6d, 0));
    let cfg = match a.model {
        ModelArg::Uniform => ModelConfig::uniform(a.n, a.weight.profile()?, seed),
        ModelArg::RandomSide => ModelConfig::random_side(random_geometry(a.n, gs), seed),
        ModelArg::FiniteWeightSet => ModelConfig::finite_weight_set(
            a.n,
            rationals(&a.weight_set)?,
            a.geometry_seed.map(|g| random_geometry(a.n, g).positions),
            seed,
        ),
    };
    let sites = sample_instance(&cfg)?;
    let model = serde_json::to_value(cfg.model)?.as_str().map(str::to_string);
    let inst = Instance::from_sites(&sites, Some(seed), model);
    emit(a.output.as_deref(), &inst.to_json()?, &meta_for("gen", seed, &cfg, None))?;
    Ok(Outcome::ok())
}

fn cmd_build(a: &BuildArgs) -> Result<Outcome> {
    let (inst, d) = a.diagram.load()?;
    let meta = meta_for("build", inst.seed.unwrap_or(0), a, Some(&inst));
    let format = a.format.unwrap_or(match a.output.as_ref().and_then(|p| p.extension()) {
        Some(e) if e == "svg" => Format::Svg,
        Some(e) if e == "csv" => Format::Csv,
        _ => Format::Json,
    });
    let body = match format {
        Format::Svg => render_svg(&d, None),
        Format::Csv => count_csv(&d, inst.sites.len(), None),
        Format::Json => {
            let s = DiagramSummary {
                kind: d.kind,
                path: d.path,
                clip: d.clip,
                complexity: d.complexity(None),
                euler_ok: d.euler_holds(),
                labels: d.face_labels(),
            };
            serde_json::to_string_pretty(&s)? + "\n"
        }
    };
    emit(a.output.as_deref(), &body, &meta)?;
    if let Some(c) = &a.count {
        write_with_meta(c, &count_csv(&d, inst.sites.len(), None), &meta)?;
    }
    Ok(Outcome::ok())
}

fn cmd_validate(a: &ValidateArgs, seed: u64) -> Result<Outcome> {
    let (inst, d) = a.diagram.load()?;
    let report = validate(&d, d.sites(), a.probes, seed, rect(&a.region)?);
    let body = serde_json::to_string_pretty(&report)? + "\n";
    emit(a.output.as_deref(), &body, &meta_for("validate", seed, a, Some(&inst)))?;
    if !report.passed() {
        eprintln!("validation failed: {} of {} probes mismatched", report.mismatches.len(), report.probes_tested);
    }
    Ok(Outcome::check(report.passed()))
}

fn cmd_count(a: &CountArgs) -> Result<Outcome> {
    let (inst, d) = a.diagram.load()?;
    let region = rect(&a.region)?;
    let body = match a.format {
        Format::Json => serde_json::to_string_pretty(&d.complexity(region))? + "\n",
        Format::Csv => count_csv(&d, inst.sites.len(), region),
        Format::Svg => return Err(GenvorError::InvalidConfig("count writes csv or json".into())),
    };
    emit(a.output.as_deref(), &body, &meta_for("count", inst.seed.unwrap_or(0), a, Some(&inst)))?;
    Ok(Outcome::ok())
}

fn cmd_cover(a: &CoverArgs, seed: u64) -> Result<Outcome> {
    let mut body = String::from("k,geometry,trials,failures,p_hat,bound,bound_value,std_err,within\n");
    let mut all = true;
    for g in 0..a.geometries.max(1) {
        let geom = random_geometry(a.k, mix_seed(seed, a.k as u64, g as u64));
        let t = estimate_cover_failure(&geom, a.trials, mix_seed(seed, a.k as u64, 1 << 32 | g as u64))?;
        let ok = t.within(3.0);
        all &= ok;
        println!(
            "k={} geometry={} p_hat={} bound={} ({}) se={} {}",
            t.k,
            g,
            fmt_f64(t.p_hat),
            t.bound,
            t.bound_value,
            fmt_f64(t.std_err),
            if ok { "within" } else { "EXCEEDS" }
        );
        let _ = writeln!(
            body,
            "{},{},{},{},{},{},{},{},{}",
            t.k,
            g,
            t.trials,
            t.failures,
            fmt_f64(t.p_hat),
            t.bound,
            fmt_f64(t.bound_value),
            fmt_f64(t.std_err),
            ok
        );
    }
    if let Some(p) = &a.output {
        write_with_meta(p, &body, &meta_for("cover", seed, a, None))?;
    }
    Ok(Outcome::check(all))
}

fn cmd_scale(a: &ScaleArgs, seed: u64) -> Result<Outcome> {
    let model = match a.model {
        ScaleModelArg::Standard => ScaleModel::Standard,
        ScaleModelArg::Semi => ScaleModel::Semi { geometry_seed: a.geometry_seed },
        ScaleModelArg::Multiplicative => ScaleModel::Multiplicative(a.weight.profile()?),
        ScaleModelArg::FiniteWeightSet => ScaleModel::FiniteWeightSet {
            weights: rationals(&a.weight_set)?,
            positions_seed: a.geometry_seed.unwrap_or(seed),
        },
    };
    let mut spec = ScalingSpec::new(model, a.schedule.clone(), a.trials, seed);
    spec.validate_probes = a.validate_probes;
    spec.compare_standard = a.compare_standard;
    spec.jobs = a.jobs;
    spec.timing = a.timing;
    let run = run_scaling(&spec)?;
    for r in &run.summary {
        println!("{} n={} mean={} var={} max={}", r.model, r.n, fmt_f64(r.mean), fmt_f64(r.var), fmt_f64(r.max));
    }
    println!("slope={}", fmt_f64(run.slope));
    if let Some(p) = &a.output {
        write_run(p, a.summary.as_deref(), &run)?;
    } else if let Some(s) = &a.summary {
        let meta = Metadata::new("scale", seed, &spec);
        write_with_meta(s, &crate::experiments::output::summary_csv(&run.summary, run.slope), &meta)?;
    }
    let mismatches = run.total_mismatches();
    let euler = run.records.iter().all(|r| r.euler_ok);
    if mismatches > 0 || !euler {
        eprintln!("validation failed: {mismatches} oracle mismatches, euler ok = {euler}");
    }
    Ok(Outcome::check(mismatches == 0 && euler))
}

fn cmd_gridlocal(a: &GridlocalArgs, seed: u64) -> Result<Outcome> {
    let profile = a.weight.profile()?;
    let mut body = String::from("n,trial,seed,side,mean,max\n");
    for &n in &a.n {
        let mut acc = 0.0;
        for t in 0..a.trials {
            let s = mix_seed(seed, n as u64, t as u64);
            let sites = sample_instance(&ModelConfig::uniform(n, profile.clone(), s))?;
            let d = build(DiagramKind::Multiplicative, &sites, &BuildOptions::default())?;
            let r = grid_local_complexity(&d, n);
            acc += r.mean;
            let _ = writeln!(body, "{n},{t},{s},{},{},{}", r.side, fmt_f64(r.mean), r.max);
        }
        println!("n={n} mean_per_cell={}", fmt_f64(acc / a.trials.max(1) as f64));
    }
    if let Some(p) = &a.output {
        write_with_meta(p, &body, &meta_for("gridlocal", seed, a, None))?;
    }
    Ok(Outcome::ok())
}

fn cmd_prune(a: &PruneArgs, seed: u64) -> Result<Outcome> {
    let profile = a.weight.profile()?;
    let mut reports = Vec::new();
    for i in 0..a.instances {
        let sites: SiteSet =
            sample_instance(&ModelConfig::uniform(a.n, profile.clone(), mix_seed(seed, a.n as u64, i as u64)))?;
        let r = prune_effectiveness(&sites, a.probes, mix_seed(seed, 0x7072, i as u64));
        println!("instance={i} cells={} mean_kept={} violations={}", r.cells.len(), fmt_f64(r.mean_kept), r.violations);
        reports.push(r);
    }
    let violations: usize = reports.iter().map(|r| r.violations).sum();
    if let Some(p) = &a.output {
        write_with_meta(p, &(serde_json::to_string_pretty(&reports)? + "\n"), &meta_for("prune", seed, a, None))?;
    }
    Ok(Outcome::check(violations == 0))
}

fn cmd_render(a: &RenderArgs) -> Result<Outcome> {
    let (inst, d) = a.diagram.load()?;
    let svg = render_svg(&d, rect(&a.window)?);
    write_with_meta(&a.output, &svg, &meta_for("render", inst.seed.unwrap_or(0), a, Some(&inst)))?;
    Ok(Outcome::ok())
}

fn dispatch(cli: &mut Cli) -> Result<Outcome> {
    match &mut cli.command {
        Command::Gen(a) => {
            a.seed = effective_seed(a.seed)?;
            cmd_gen(a, a.seed)
        }
        Command::Build(a) => cmd_build(a),
        Command::Validate(a) => {
            a.seed = effective_seed(a.seed)?;
            cmd_validate(a, a.seed)
        }
        Command::Count(a) => cmd_count(a),
        Command::Cover(a) => {
            a.seed = effective_seed(a.seed)?;
            cmd_cover(a, a.seed)
        }
        Command::Scale(a) => {
            a.seed = effective_seed(a.seed)?;
            cmd_scale(a, a.seed)
        }
        Command::Gridlocal(a) => {
            a.seed = effective_seed(a.seed)?;
            cmd_gridlocal(a, a.seed)
        }
        Command::Prune(a) => {
            a.seed = effective_seed(a.seed)?;
            cmd_prune(a, a.seed)
        }
        Command::Render(a) => cmd_render(a),
    }
}

/// Parses `argv` (program name first) and runs it; returns the exit status.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match dispatch(&mut cli) {
        Ok(o) => o.code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                GenvorError::BuilderCapacityExceeded { .. } => EXIT_CAPACITY,
                _ => EXIT_USAGE,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(run(["genvor", "frobnicate"]), EXIT_USAGE);
        assert_eq!(run(["genvor", "gen"]), EXIT_USAGE);
    }
}
