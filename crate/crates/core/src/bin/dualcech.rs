use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use dualcech::bifiltration::{ambient_dc_finite, ambient_dc_planar, intrinsic_dc};
use dualcech::homology::{betti_table, slice_persistence, Barcode};
use dualcech::interleaving::{prohorov_check, prohorov_distance, verify_sandwich, CHECK_SUPPORT_CAP};
use dualcech::io::{self, export_firep, hilbert_csv, parse_staircases, svg_heatmap, write_atomic, write_staircases, Dataset};
use dualcech::metric::euclidean;
use dualcech::shift::PathPoint;
use dualcech::suites::{run_suite, SUITES};
use dualcech::{BifilteredComplex, DiscreteMeasure, Error, FiniteMetricSpace, MonotonePath, DEFAULT_DIM_CAP};

#[derive(Parser)]
#[command(name = "dualcech", version, about = "Dual degree Cech bifiltrations of finite metric-measure spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a bifiltration and write its staircase table.
    Build {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, short)]
        output: PathBuf,
    },
    /// Betti numbers on a grid as CSV plus one SVG heatmap per degree.
    Hilbert {
        #[command(flatten)]
        source: SourceArgs,
        /// Comma-separated mass thresholds (default: critical values and midpoints).
        #[arg(long, value_parser = parse_grid)]
        m_grid: Option<Grid>,
        #[arg(long)]
        out_dir: PathBuf,
    },
    /// Barcode along a monotone path: `m=<v>`, `diag m0,r0` or `points m,r;m,r;...`.
    Slice {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        path: String,
    },
    /// Run a randomized verification suite, or check a sandwich on given data.
    Verify {
        #[arg(value_parser = suite_names())]
        suite: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        /// Point or matrix file to check the sandwich on instead of random instances.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Kind::Points)]
        kind: Kind,
        #[arg(long)]
        weights: Option<String>,
        /// Intrinsic and ambient staircase tables to check the sandwich on.
        #[arg(long, num_args = 2, value_names = ["INTRINSIC", "AMBIENT"])]
        artifacts: Option<Vec<PathBuf>>,
    },
    /// Prohorov distance between the measures of two files on a shared space.
    Prohorov {
        file0: PathBuf,
        file1: PathBuf,
        #[arg(long, value_enum, default_value_t = Kind::Points)]
        kind: Kind,
        #[arg(long)]
        weights: Option<String>,
        /// Check a candidate epsilon instead of computing the distance.
        #[arg(long)]
        check: Option<f64>,
    },
    /// Export one homological degree of a staircase table in firep format.
    ExportFirep {
        #[arg(long)]
        artifact: PathBuf,
        #[arg(long, default_value_t = 0)]
        degree: usize,
        #[arg(long, short)]
        output: PathBuf,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Points,
    Matrix,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Intrinsic,
    AmbientFinite,
    AmbientPlanar,
}

type Grid = Vec<f64>;

#[derive(Args, Clone)]
struct InputArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = Kind::Points)]
    kind: Kind,
    /// Weight column name; weights default to 1.
    #[arg(long)]
    weights: Option<String>,
    #[arg(long, value_enum, default_value_t = Mode::Intrinsic)]
    mode: Mode,
    #[arg(long, default_value_t = DEFAULT_DIM_CAP, value_parser = clap::value_parser!(usize))]
    dim_cap: usize,
    /// Comma-separated radii (sampling grid for ambient-planar, display grid otherwise).
    #[arg(long, value_parser = parse_grid)]
    r_grid: Option<Grid>,
}

#[derive(Args, Clone)]
struct SourceArgs {
    /// A staircase table written by `build`.
    #[arg(long, conflicts_with = "input")]
    artifact: Option<PathBuf>,
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Kind::Points)]
    kind: Kind,
    #[arg(long)]
    weights: Option<String>,
    #[arg(long, value_enum, default_value_t = Mode::Intrinsic)]
    mode: Mode,
    #[arg(long, default_value_t = DEFAULT_DIM_CAP)]
    dim_cap: usize,
    #[arg(long, value_parser = parse_grid)]
    r_grid: Option<Grid>,
}

/// Resolved settings of one invocation.
struct RunConfig {
    input: PathBuf,
    kind: Kind,
    weights: Option<String>,
    mode: Mode,
    dim_cap: usize,
    r_grid: Option<Grid>,
}

impl From<&InputArgs> for RunConfig {
    fn from(a: &InputArgs) -> Self {
        RunConfig {
            input: a.input.clone(),
            kind: a.kind,
            weights: a.weights.clone(),
            mode: a.mode,
            dim_cap: a.dim_cap,
            r_grid: a.r_grid.clone(),
        }
    }
}

fn suite_names() -> clap::builder::PossibleValuesParser {
    let mut names: Vec<&str> = SUITES.to_vec();
    names.push("all");
    clap::builder::PossibleValuesParser::new(names)
}

fn parse_grid(s: &str) -> Result<Grid, String> {
    let mut g = s
        .split(',')
        .map(|v| v.trim().parse::<f64>().map_err(|_| format!("not a number: {v:?}")))
        .collect::<Result<Vec<_>, _>>()?;
    if g.iter().any(|v| v.is_nan()) {
        return Err("NaN in grid".into());
    }
    if g.windows(2).any(|w| w[0] >= w[1]) {
        return Err("grid values must be strictly increasing".into());
    }
    g.dedup();
    Ok(g)
}

/// Failures of a command: usage or input problems, or a failed verification.
enum Failure {
    Input(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn read_dataset(path: &Path, kind: Kind, weights: Option<&str>) -> Result<Dataset, Failure> {
    let file = fs::File::open(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let parsed = match kind {
        Kind::Points => io::parse_points_csv(file, weights),
        Kind::Matrix => io::parse_matrix_csv(file, weights),
    };
    parsed.map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn build(cfg: &RunConfig) -> Result<BifilteredComplex, Failure> {
    if cfg.dim_cap < 1 {
        return Err(Failure::Input("dim-cap must be at least 1".into()));
    }
    let data = read_dataset(&cfg.input, cfg.kind, cfg.weights.as_deref())?;
    Ok(match cfg.mode {
        Mode::Intrinsic => intrinsic_dc(&data.space, &data.measure, cfg.dim_cap)?,
        Mode::AmbientFinite => ambient_dc_finite(&data.space, &data.measure, cfg.dim_cap)?,
        Mode::AmbientPlanar => ambient_dc_planar(&data.space, &data.measure, cfg.dim_cap, cfg.r_grid.as_deref())?,
    })
}

fn load(source: &SourceArgs) -> Result<(BifilteredComplex, Option<Grid>), Failure> {
    match (&source.artifact, &source.input) {
        (Some(path), _) => {
            let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            let k = parse_staircases(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            Ok((k, source.r_grid.clone()))
        }
        (None, Some(input)) => {
            let cfg = RunConfig {
                input: input.clone(),
                kind: source.kind,
                weights: source.weights.clone(),
                mode: source.mode,
                dim_cap: source.dim_cap,
                r_grid: source.r_grid.clone(),
            };
            Ok((build(&cfg)?, cfg.r_grid))
        }
        (None, None) => Err(Failure::Input("give --artifact or --input".into())),
    }
}

fn write_file(path: &Path, contents: &str) -> CmdResult {
    write_atomic(path, contents.as_bytes()).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn cmd_build(input: &InputArgs, output: &Path) -> CmdResult {
    let k = build(&RunConfig::from(input))?;
    write_file(output, &write_staircases(&k))?;
    println!("wrote {} simplices to {}", k.len(), output.display());
    Ok(())
}

fn cmd_hilbert(source: &SourceArgs, m_grid: Option<Grid>, out_dir: &Path) -> CmdResult {
    let (k, r_grid) = load(source)?;
    let (default_r, default_m) = k.default_grid();
    let rs = r_grid.unwrap_or(if default_r.is_empty() { vec![0.0] } else { default_r });
    let ms = m_grid.unwrap_or(if default_m.is_empty() { vec![1.0] } else { default_m });
    let max_degree = k.dim_cap().saturating_sub(1);
    let table = betti_table(&k, &ms, &rs, max_degree)?;
    fs::create_dir_all(out_dir).map_err(|e| Failure::Input(format!("{}: {e}", out_dir.display())))?;
    write_file(&out_dir.join("hilbert.csv"), &hilbert_csv(&table)?)?;
    for d in 0..=max_degree {
        write_file(&out_dir.join(format!("betti{d}.svg")), &svg_heatmap(&table, d))?;
    }
    println!("wrote {} grid cells and {} heatmaps to {}", ms.len() * rs.len(), max_degree + 1, out_dir.display());
    Ok(())
}

fn parse_path_spec(spec: &str, k: &BifilteredComplex) -> Result<MonotonePath, Failure> {
    let bad = || Failure::Input(format!("path must be `m=<v>`, `diag m0,r0` or `points m,r;m,r;...`, got {spec:?}"));
    let num = |s: &str| s.trim().parse::<f64>().map_err(|_| bad());
    if let Some(v) = spec.trim().strip_prefix("m=") {
        Ok(MonotonePath::horizontal_exact(num(v)?, &[k])?)
    } else if let Some(rest) = spec.trim().strip_prefix("diag") {
        let (m0, r0) = rest.split_once(',').ok_or_else(bad)?;
        Ok(MonotonePath::diagonal_exact(num(m0)?, num(r0)?, &[k])?)
    } else if let Some(rest) = spec.trim().strip_prefix("points") {
        let pts = rest
            .split(';')
            .enumerate()
            .map(|(k, pair)| {
                let (m, r) = pair.split_once(',').ok_or_else(bad)?;
                Ok(PathPoint { t: k as f64, m: num(m)?, r: num(r)? })
            })
            .collect::<Result<Vec<_>, Failure>>()?;
        Ok(MonotonePath::new(pts)?)
    } else {
        Err(bad())
    }
}

fn format_barcode(bars: &Barcode, max_degree: usize) -> String {
    let mut out = String::new();
    for d in 0..=max_degree {
        out.push_str(&format!("H{d}:"));
        for (b, e) in bars.in_dim(d) {
            out.push_str(&format!(" [{b},{e})"));
        }
        out.push('\n');
    }
    out
}

fn cmd_slice(source: &SourceArgs, spec: &str) -> CmdResult {
    let (k, _) = load(source)?;
    let path = parse_path_spec(spec, &k)?;
    let max_degree = k.dim_cap().saturating_sub(1);
    print!("{}", format_barcode(&slice_persistence(&k, &path, max_degree), max_degree));
    Ok(())
}

fn sandwich_on(intrinsic: &BifilteredComplex, ambient: &BifilteredComplex) -> CmdResult {
    let rep = verify_sandwich(intrinsic, ambient)?;
    print!("{rep}");
    if rep.passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn read_artifact(path: &Path) -> Result<BifilteredComplex, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_staircases(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    suite: &str,
    seed: u64,
    trials: usize,
    input: Option<&Path>,
    kind: Kind,
    weights: Option<&str>,
    artifacts: Option<&[PathBuf]>,
) -> CmdResult {
    if input.is_some() || artifacts.is_some() {
        if suite != "sandwich" {
            return Err(Failure::Input("--input and --artifacts are only supported by the sandwich suite".into()));
        }
        if let Some([int, amb]) = artifacts {
            return sandwich_on(&read_artifact(int)?, &read_artifact(amb)?);
        }
        let data = read_dataset(input.expect("checked above"), kind, weights)?;
        let int = intrinsic_dc(&data.space, &data.measure, DEFAULT_DIM_CAP)?;
        let amb = if data.space.coords().is_some() {
            ambient_dc_planar(&data.space, &data.measure, DEFAULT_DIM_CAP, None)?
        } else {
            ambient_dc_finite(&data.space, &data.measure, DEFAULT_DIM_CAP)?
        };
        return sandwich_on(&int, &amb);
    }
    let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite] };
    let mut ok = true;
    for name in names {
        let rep = run_suite(name, seed, trials).expect("suite names are validated by the parser")?;
        print!("{rep}");
        ok &= rep.passed();
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

/// Points of both files in one space; points with equal coordinates are merged.
fn shared_points(d0: &Dataset, d1: &Dataset) -> Result<(FiniteMetricSpace, DiscreteMeasure, DiscreteMeasure), Failure> {
    let (c0, c1) = (d0.space.coords().expect("point input"), d1.space.coords().expect("point input"));
    let mut pts: Vec<[f64; 2]> = Vec::new();
    let index = |p: [f64; 2], pts: &mut Vec<[f64; 2]>| match pts.iter().position(|q| euclidean(*q, p) == 0.0) {
        Some(i) => i,
        None => {
            pts.push(p);
            pts.len() - 1
        }
    };
    let i0: Vec<usize> = c0.iter().map(|&p| index(p, &mut pts)).collect();
    let i1: Vec<usize> = c1.iter().map(|&p| index(p, &mut pts)).collect();
    let mut w0 = vec![0.0; pts.len()];
    let mut w1 = vec![0.0; pts.len()];
    for (k, &i) in i0.iter().enumerate() {
        w0[i] += d0.measure.weight(k);
    }
    for (k, &i) in i1.iter().enumerate() {
        w1[i] += d1.measure.weight(k);
    }
    Ok((FiniteMetricSpace::from_points(pts)?, DiscreteMeasure::new(w0)?, DiscreteMeasure::new(w1)?))
}

fn cmd_prohorov(file0: &Path, file1: &Path, kind: Kind, weights: Option<&str>, check: Option<f64>) -> CmdResult {
    let d0 = read_dataset(file0, kind, weights)?;
    let d1 = read_dataset(file1, kind, weights)?;
    let (space, mu0, mu1) = match kind {
        Kind::Points => shared_points(&d0, &d1)?,
        Kind::Matrix => {
            if d0.space.matrix() != d1.space.matrix() {
                return Err(Error::DifferentSpaces(d0.space.len(), d1.space.len()).into());
            }
            (d0.space, d0.measure, d1.measure)
        }
    };
    match check {
        Some(eps) => {
            let rep = prohorov_check(&space, &mu0, &mu1, eps)?;
            println!("{} eps={eps} worst slack {}", if rep.passed { "PASS" } else { "FAIL" }, rep.worst_slack);
            if let Some((i, set)) = rep.witness {
                println!("binding set {set:?} of measure {i}");
            }
            if rep.passed {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
        None => match prohorov_distance(&space, &mu0, &mu1) {
            Ok(p) => {
                println!("{p}");
                Ok(())
            }
            Err(e @ Error::SupportTooLarge { .. }) => Err(Failure::Input(format!(
                "{e}; use --check <eps> to test a candidate value (supports up to {CHECK_SUPPORT_CAP} points)"
            ))),
            Err(e) => Err(e.into()),
        },
    }
}

fn cmd_export_firep(artifact: &Path, degree: usize, output: &Path) -> CmdResult {
    let k = read_artifact(artifact)?;
    write_file(output, &export_firep(&k, degree)?)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Build { input, output } => cmd_build(input, output),
        Command::Hilbert { source, m_grid, out_dir } => cmd_hilbert(source, m_grid.clone(), out_dir),
        Command::Slice { source, path } => cmd_slice(source, path),
        Command::Verify { suite, seed, trials, input, kind, weights, artifacts } => {
            cmd_verify(suite, *seed, *trials, input.as_deref(), *kind, weights.as_deref(), artifacts.as_deref())
        }
        Command::Prohorov { file0, file1, kind, weights, check } => {
            cmd_prohorov(file0, file1, *kind, weights.as_deref(), *check)
        }
        Command::ExportFirep { artifact, degree, output } => cmd_export_firep(artifact, *degree, output),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
