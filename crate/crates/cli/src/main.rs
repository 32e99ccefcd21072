//! `edgelift`: plan slip-free lifting trajectories for limp sheet strips,
//! reconstruct full strip shapes, sweep covering friction, and cross-check
//! plans against an independent chain equilibrium.
//!
//! Exit codes: 0 success, 2 configuration error, 3 infeasible request or
//! solver failure, 4 verification failure, 1 file system error.

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use edgelift::{
    generate_trajectory, shape_at, sweep_friction, verify_trajectory, LiftMode, MaterialShape,
    MaterialSpec, SolverConfig, TrajectoryRequest,
};
use edgelift_cli::config::ConfigFile;
use edgelift_cli::{formats, output, presets};

/// Prints one line to stdout; exits quietly if the consumer closed the pipe
/// (e.g. `edgelift presets | head`).
fn say_line(args: std::fmt::Arguments<'_>) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if out.write_fmt(args).and_then(|()| out.write_all(b"\n")).is_err() {
        std::process::exit(0);
    }
}

macro_rules! say {
    ($($t:tt)*) => { say_line(format_args!($($t)*)) };
}

#[derive(Parser)]
#[command(
    name = "edgelift",
    version,
    about = "Slip-free lifting trajectories for limp sheet materials grasped at one edge"
)]
struct Cli {
    /// Config file with `key = value` defaults for the flags; flags win
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a lifting trajectory and write robot-ready waypoints
    Plan(PlanArgs),
    /// Reconstruct the whole strip shape at given lift heights
    Shape(ShapeArgs),
    /// Tabulate grasp pose against covering friction and lift height
    Sweep(SweepArgs),
    /// Cross-check a plan against an independent chain equilibrium
    Verify(VerifyArgs),
    /// List the built-in material presets
    Presets(PresetsArgs),
}

#[derive(Args, Debug, Clone)]
struct MaterialArgs {
    /// Material preset name (see `edgelift presets`)
    #[arg(long)]
    preset: Option<String>,
    /// Strip length in metres
    #[arg(long = "L", value_name = "METRES")]
    length: Option<f64>,
    /// Strip weight per unit length in N/m
    #[arg(long = "q", value_name = "N_PER_M")]
    weight: Option<f64>,
    /// Friction coefficient between strip and covering surface
    #[arg(long = "k", value_name = "COEFF")]
    covering: Option<f64>,
    /// Friction coefficient between strip and gripper
    #[arg(long = "f", value_name = "COEFF")]
    gripper: Option<f64>,
}

#[derive(Args, Debug, Clone)]
struct SolverArgs {
    /// Bracket tolerance of the root solve (dimensionless)
    #[arg(long = "tol-u", value_name = "TOL")]
    tol_u: Option<f64>,
    /// Absolute equilibrium residual tolerance in metres
    #[arg(long = "tol-res", value_name = "METRES")]
    tol_res: Option<f64>,
}

#[derive(Args)]
struct PlanArgs {
    #[command(flatten)]
    material: MaterialArgs,
    #[command(flatten)]
    solver: SolverArgs,
    /// Height increment between consecutive waypoints, metres
    #[arg(long, value_name = "METRES")]
    step: Option<f64>,
    /// Lifting mode: dexterous | vertical-naive
    #[arg(long, value_name = "MODE")]
    mode: Option<String>,
    /// Skip the analytic fully-vertical end pose
    #[arg(long = "no-terminal")]
    no_terminal: bool,
    /// Output format: csv | jsonl
    #[arg(long, value_name = "FMT")]
    format: Option<String>,
    /// Output path (default: waypoints.<fmt> under EDGELIFT_OUT_DIR or .)
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ShapeArgs {
    #[command(flatten)]
    material: MaterialArgs,
    #[command(flatten)]
    solver: SolverArgs,
    /// Comma-separated lift heights in metres
    #[arg(long, value_name = "LIST")]
    heights: Option<String>,
    /// Points sampled along the strip per height. The default is dense
    /// enough that the emitted polyline conserves arc length to 1e-6 L.
    #[arg(long, value_name = "COUNT")]
    samples: Option<usize>,
    /// Lifting mode: dexterous | vertical-naive
    #[arg(long, value_name = "MODE")]
    mode: Option<String>,
    /// Output format: csv | jsonl
    #[arg(long, value_name = "FMT")]
    format: Option<String>,
    /// Output path (default: shape.<fmt> under EDGELIFT_OUT_DIR or .)
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    material: MaterialArgs,
    #[command(flatten)]
    solver: SolverArgs,
    /// Covering friction range as min:max:count
    #[arg(long = "k-range", value_name = "MIN:MAX:N")]
    k_range: Option<String>,
    /// Comma-separated lift heights (default: 50 heights up to 0.98 L)
    #[arg(long, value_name = "LIST")]
    heights: Option<String>,
    /// Output format: csv | jsonl
    #[arg(long, value_name = "FMT")]
    format: Option<String>,
    /// Output path (default: sweep.<fmt> under EDGELIFT_OUT_DIR or .)
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    material: MaterialArgs,
    #[command(flatten)]
    solver: SolverArgs,
    /// Height increment of the plan under test, metres
    #[arg(long, value_name = "METRES")]
    step: Option<f64>,
    /// Lifting mode: dexterous | vertical-naive
    #[arg(long, value_name = "MODE")]
    mode: Option<String>,
    /// Number of links in the reference chain
    #[arg(long = "n", value_name = "LINKS")]
    links: Option<usize>,
    /// Check every stride-th waypoint
    #[arg(long, value_name = "COUNT")]
    stride: Option<usize>,
    /// Grasp position tolerance in metres (default 1e-3 of the length)
    #[arg(long = "pos-tol", value_name = "METRES")]
    pos_tol: Option<f64>,
    /// Grasp pitch tolerance in degrees
    #[arg(long = "ang-tol-deg", value_name = "DEG")]
    ang_tol_deg: Option<f64>,
    /// Tension balance tolerance in newtons (default 1e-9 of the weight)
    #[arg(long = "tension-tol", value_name = "NEWTONS")]
    tension_tol: Option<f64>,
    /// Also write the JSON report to this path
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PresetsArgs {
    /// Output format: text | csv | jsonl
    #[arg(long, value_name = "FMT")]
    format: Option<String>,
}

#[derive(Debug)]
enum CliError {
    /// Bad flags, config file, or material definition. Exit 2.
    Config(String),
    /// The request was well-formed but the model cannot satisfy it. Exit 3.
    Solver(edgelift::Error),
    /// The chain cross-check failed its tolerances. Exit 4.
    Verification(String),
    /// File system trouble. Exit 1.
    Io(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) => 1,
            CliError::Config(_) => 2,
            CliError::Solver(_) => 3,
            CliError::Verification(_) => 4,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Config(msg) | CliError::Verification(msg) | CliError::Io(msg) => {
                f.write_str(msg)
            }
            CliError::Solver(e) => write!(f, "{e}"),
        }
    }
}

impl From<edgelift::Error> for CliError {
    fn from(e: edgelift::Error) -> Self {
        use edgelift::Error::*;
        match e {
            // Problems with what the user asked for.
            InvalidMaterial { .. }
            | InvalidSolverConfig { .. }
            | InvalidStep { .. }
            | InvalidStride
            | InvalidChain { .. }
            | InvalidSampleCount { .. }
            | InvalidSpacing { .. }
            | HeightsNotIncreasing
            | EmptyTrajectory
            | TooFewWaypoints => CliError::Config(e.to_string()),
            // Problems the model ran into while solving.
            _ => CliError::Solver(e),
        }
    }
}

fn main() {
    let cli = Cli::parse();
    if let Err(err) = run(cli) {
        eprintln!("error: {err}");
        std::process::exit(err.exit_code());
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let cfg = match &cli.config {
        Some(path) => ConfigFile::load(path).map_err(CliError::Config)?,
        None => ConfigFile::default(),
    };
    match cli.command {
        Command::Plan(args) => cmd_plan(args, &cfg),
        Command::Shape(args) => cmd_shape(args, &cfg),
        Command::Sweep(args) => cmd_sweep(args, &cfg),
        Command::Verify(args) => cmd_verify(args, &cfg),
        Command::Presets(args) => cmd_presets(args, &cfg),
    }
}

// ---- config merging helpers ----

fn fill_parsed<T: FromStr>(
    slot: &mut Option<T>,
    cfg: &ConfigFile,
    key: &str,
) -> Result<(), CliError>
where
    T::Err: std::fmt::Display,
{
    if slot.is_none() {
        if let Some(raw) = cfg.get(key) {
            let value = raw
                .parse::<T>()
                .map_err(|e| CliError::Config(format!("config key {key:?}: {e}")))?;
            *slot = Some(value);
        }
    }
    Ok(())
}

/// Boolean flag: set on the command line wins, otherwise the config value.
fn merge_flag(set: bool, cfg: &ConfigFile, key: &str) -> Result<bool, CliError> {
    if set {
        return Ok(true);
    }
    match cfg.get(key) {
        None => Ok(false),
        Some(raw) => raw
            .parse::<bool>()
            .map_err(|e| CliError::Config(format!("config key {key:?}: {e}"))),
    }
}

fn resolve_material(args: &MaterialArgs, cfg: &ConfigFile) -> Result<MaterialSpec, CliError> {
    let mut preset = args.preset.clone();
    if preset.is_none() {
        preset = cfg.get("preset").map(str::to_string);
    }
    let mut length = args.length;
    let mut weight = args.weight;
    let mut covering = args.covering;
    let mut gripper = args.gripper;
    fill_parsed(&mut length, cfg, "L")?;
    fill_parsed(&mut weight, cfg, "q")?;
    fill_parsed(&mut covering, cfg, "k")?;
    fill_parsed(&mut gripper, cfg, "f")?;

    if let Some(name) = preset {
        if length.is_some() || weight.is_some() || covering.is_some() || gripper.is_some() {
            return Err(CliError::Config(
                "choose the material either with --preset or with explicit --L/--q/--k/--f, not both"
                    .into(),
            ));
        }
        let preset = presets::find(&name).ok_or_else(|| {
            CliError::Config(format!("unknown preset {name:?} (try `edgelift presets`)"))
        })?;
        return Ok(preset.material);
    }

    let (Some(length), Some(weight), Some(covering)) = (length, weight, covering) else {
        return Err(CliError::Config(
            "material undefined: pass --preset NAME, or all of --L, --q and --k".into(),
        ));
    };
    let mut material = MaterialSpec::new(length, weight, covering)?;
    if let Some(f) = gripper {
        material = material.with_gripper_friction(f)?;
    }
    Ok(material)
}

fn resolve_solver(
    args: &SolverArgs,
    cfg: &ConfigFile,
    length: f64,
) -> Result<SolverConfig, CliError> {
    let mut tol_u = args.tol_u;
    let mut tol_res = args.tol_res;
    fill_parsed(&mut tol_u, cfg, "tol-u")?;
    fill_parsed(&mut tol_res, cfg, "tol-res")?;
    let mut solver = SolverConfig::for_length(length);
    if let Some(t) = tol_u {
        solver.tol_shape_ratio = t;
    }
    if let Some(t) = tol_res {
        solver.tol_residual = t;
    }
    Ok(solver)
}

fn resolve_mode(raw: Option<String>, cfg: &ConfigFile) -> Result<LiftMode, CliError> {
    let mut raw = raw;
    if raw.is_none() {
        raw = cfg.get("mode").map(str::to_string);
    }
    match raw {
        None => Ok(LiftMode::Dexterous),
        Some(s) => s.parse::<LiftMode>().map_err(CliError::Config),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Csv,
    Jsonl,
}

impl Format {
    fn ext(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Jsonl => "jsonl",
        }
    }
}

fn resolve_format(raw: Option<String>, cfg: &ConfigFile) -> Result<Format, CliError> {
    let mut raw = raw;
    if raw.is_none() {
        raw = cfg.get("format").map(str::to_string);
    }
    match raw.as_deref() {
        None | Some("csv") => Ok(Format::Csv),
        Some("jsonl") => Ok(Format::Jsonl),
        Some(other) => Err(CliError::Config(format!(
            "unknown format {other:?}, expected \"csv\" or \"jsonl\""
        ))),
    }
}

/// Output path: explicit flag, else `<stem>.<ext>` under `EDGELIFT_OUT_DIR`
/// (falling back to the working directory).
fn resolve_out(
    out: Option<PathBuf>,
    cfg: &ConfigFile,
    stem: &str,
    ext: &str,
) -> Result<PathBuf, CliError> {
    let mut out = out;
    fill_parsed(&mut out, cfg, "out")?;
    if let Some(path) = out {
        return Ok(path);
    }
    let name = format!("{stem}.{ext}");
    Ok(match std::env::var_os("EDGELIFT_OUT_DIR") {
        Some(dir) if !dir.is_empty() => {
            // the env var designates a drop zone, so bring it into existence;
            // explicit --out paths stay strict about their parent
            let dir = PathBuf::from(dir);
            std::fs::create_dir_all(&dir).map_err(|e| {
                CliError::Io(format!("cannot create {}: {e}", dir.display()))
            })?;
            dir.join(name)
        }
        _ => PathBuf::from(name),
    })
}

fn write_file(path: &std::path::Path, contents: &str) -> Result<(), CliError> {
    output::write_atomic(path, contents)
        .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))
}

fn parse_heights(raw: &str) -> Result<Vec<f64>, CliError> {
    let mut heights = Vec::new();
    for part in raw.split(',') {
        let part = part.trim();
        if part.is_empty() {
            return Err(CliError::Config("empty entry in height list".into()));
        }
        let value = part
            .parse::<f64>()
            .map_err(|e| CliError::Config(format!("bad height {part:?}: {e}")))?;
        heights.push(value);
    }
    Ok(heights)
}

fn parse_k_range(raw: &str) -> Result<Vec<f64>, CliError> {
    let parts: Vec<&str> = raw.split(':').collect();
    let [min, max, count] = parts[..] else {
        return Err(CliError::Config(format!(
            "bad friction range {raw:?}, expected MIN:MAX:COUNT"
        )));
    };
    let min = min
        .trim()
        .parse::<f64>()
        .map_err(|e| CliError::Config(format!("bad range minimum {min:?}: {e}")))?;
    let max = max
        .trim()
        .parse::<f64>()
        .map_err(|e| CliError::Config(format!("bad range maximum {max:?}: {e}")))?;
    let count = count
        .trim()
        .parse::<usize>()
        .map_err(|e| CliError::Config(format!("bad range count {count:?}: {e}")))?;
    if !min.is_finite() || !max.is_finite() || min <= 0.0 {
        return Err(CliError::Config(
            "friction range bounds must be finite and positive".into(),
        ));
    }
    if max < min {
        return Err(CliError::Config("friction range needs max >= min".into()));
    }
    if count == 0 {
        return Err(CliError::Config("friction range needs at least one value".into()));
    }
    Ok(linspace(min, max, count))
}

fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![a];
    }
    let h = (b - a) / (n - 1) as f64;
    (0..n).map(|i| a + h * i as f64).collect()
}

fn describe(material: &MaterialSpec) -> String {
    let name = if material.label.is_empty() { "custom strip" } else { material.label.as_str() };
    format!(
        "{name} (L = {} m, q = {} N/m, k = {}, f = {})",
        material.length,
        material.weight_per_length,
        material.covering_friction,
        material.gripper_friction
    )
}

// ---- subcommands ----

fn cmd_plan(args: PlanArgs, cfg: &ConfigFile) -> Result<(), CliError> {
    let material = resolve_material(&args.material, cfg)?;
    let solver = resolve_solver(&args.solver, cfg, material.length)?;
    let mode = resolve_mode(args.mode, cfg)?;
    let format = resolve_format(args.format, cfg)?;
    let mut step = args.step;
    fill_parsed(&mut step, cfg, "step")?;
    let step = step.unwrap_or(1e-3);
    let no_terminal = merge_flag(args.no_terminal, cfg, "no-terminal")?;

    let mut request = TrajectoryRequest::new(material.clone(), step)?
        .with_mode(mode)
        .with_solver(solver);
    if no_terminal {
        request = request.without_terminal();
    }
    let trajectory = generate_trajectory(&request)?;

    let text = match format {
        Format::Csv => formats::waypoints_csv(&trajectory),
        Format::Jsonl => formats::waypoints_jsonl(&trajectory),
    };
    let path = resolve_out(args.out, cfg, "waypoints", format.ext())?;
    write_file(&path, &text)?;

    let end = trajectory.waypoints.last().expect("plans are never empty");
    say!("material: {}", describe(&material));
    say!(
        "plan: mode {}, step {} m, {} waypoints{}",
        mode,
        step,
        trajectory.waypoints.len(),
        if trajectory.terminal_appended { ", end pose appended" } else { "" }
    );
    say!(
        "end pose: x = {:.6} m, z = {:.6} m, pitch = {:.3} deg",
        end.x,
        end.z,
        end.pitch.to_degrees()
    );
    say!(
        "max pitch step: {:.3} deg; path length: {:.6} m",
        trajectory.max_pitch_step().to_degrees(),
        trajectory.path_length()
    );
    say!("wrote {}", path.display());
    Ok(())
}

fn cmd_shape(args: ShapeArgs, cfg: &ConfigFile) -> Result<(), CliError> {
    let material = resolve_material(&args.material, cfg)?;
    let solver = resolve_solver(&args.solver, cfg, material.length)?;
    let mode = resolve_mode(args.mode, cfg)?;
    let format = resolve_format(args.format, cfg)?;
    let mut heights_raw = args.heights;
    if heights_raw.is_none() {
        heights_raw = cfg.get("heights").map(str::to_string);
    }
    let heights_raw = heights_raw.ok_or_else(|| {
        CliError::Config("--heights is required (comma-separated metres)".into())
    })?;
    let heights = parse_heights(&heights_raw)?;
    let mut samples = args.samples;
    fill_parsed(&mut samples, cfg, "samples")?;
    let samples = samples.unwrap_or(20_001);

    let mut shapes: Vec<MaterialShape> = Vec::with_capacity(heights.len());
    for &z1 in &heights {
        shapes.push(shape_at(z1, &material, mode, samples, &solver)?);
    }

    let text = match format {
        Format::Csv => formats::shapes_csv(&shapes, material.length),
        Format::Jsonl => formats::shapes_jsonl(&shapes, material.length),
    };
    let path = resolve_out(args.out, cfg, "shape", format.ext())?;
    write_file(&path, &text)?;

    say!("material: {}", describe(&material));
    for shape in &shapes {
        let (far_x, _) = shape.far_end();
        let (grasp_x, grasp_z) = shape.grasp_point();
        say!(
            "z1 = {} m: lying {:.6} m, far end x = {:.6} m, grasp ({:.6}, {:.6}) m, polyline {:.6} m",
            shape.lift_height,
            shape.lying_length,
            far_x,
            grasp_x,
            grasp_z,
            shape.polyline_length()
        );
    }
    say!("wrote {}", path.display());
    Ok(())
}

fn cmd_sweep(args: SweepArgs, cfg: &ConfigFile) -> Result<(), CliError> {
    let material = resolve_material(&args.material, cfg)?;
    let solver = resolve_solver(&args.solver, cfg, material.length)?;
    let format = resolve_format(args.format, cfg)?;
    let mut k_range = args.k_range;
    if k_range.is_none() {
        k_range = cfg.get("k-range").map(str::to_string);
    }
    let frictions = parse_k_range(k_range.as_deref().unwrap_or("0.1:3:30"))?;
    let mut heights_raw = args.heights;
    if heights_raw.is_none() {
        heights_raw = cfg.get("heights").map(str::to_string);
    }
    let heights = match heights_raw {
        Some(raw) => parse_heights(&raw)?,
        None => linspace(0.0, 0.98 * material.length, 50),
    };

    let table = sweep_friction(&material, &frictions, &heights, &solver);
    for failure in &table.failures {
        eprintln!(
            "infeasible cell: k = {}, z1 = {} m: {}",
            failure.covering_friction, failure.lift_height, failure.error
        );
    }

    let text = match format {
        Format::Csv => formats::sweep_csv(&table),
        Format::Jsonl => formats::sweep_jsonl(&table),
    };
    let path = resolve_out(args.out, cfg, "sweep", format.ext())?;
    write_file(&path, &text)?;

    say!("material: {}", describe(&material));
    say!(
        "sweep: {} friction values x {} heights -> {} cells solved, {} infeasible",
        frictions.len(),
        heights.len(),
        table.cells.len(),
        table.failures.len()
    );
    say!("wrote {}", path.display());
    Ok(())
}

fn cmd_verify(args: VerifyArgs, cfg: &ConfigFile) -> Result<(), CliError> {
    let material = resolve_material(&args.material, cfg)?;
    let solver = resolve_solver(&args.solver, cfg, material.length)?;
    let mode = resolve_mode(args.mode, cfg)?;
    let mut step = args.step;
    fill_parsed(&mut step, cfg, "step")?;
    let step = step.unwrap_or(1e-3);
    let mut links = args.links;
    fill_parsed(&mut links, cfg, "n")?;
    let links = links.unwrap_or(10_000);
    let mut stride = args.stride;
    fill_parsed(&mut stride, cfg, "stride")?;
    let stride = stride.unwrap_or(50);

    let mut pos_tol = args.pos_tol;
    let mut ang_tol_deg = args.ang_tol_deg;
    let mut tension_tol = args.tension_tol;
    fill_parsed(&mut pos_tol, cfg, "pos-tol")?;
    fill_parsed(&mut ang_tol_deg, cfg, "ang-tol-deg")?;
    fill_parsed(&mut tension_tol, cfg, "tension-tol")?;
    let pos_tol = pos_tol.unwrap_or(1e-3 * material.length);
    let ang_tol = ang_tol_deg.unwrap_or(0.1).to_radians();
    let tension_tol = tension_tol
        .unwrap_or(1e-9 * material.weight_per_length * material.length);

    let request = TrajectoryRequest::new(material.clone(), step)?
        .with_mode(mode)
        .with_solver(solver);
    let trajectory = generate_trajectory(&request)?;
    let report = verify_trajectory(&trajectory, links, stride)?;
    let pass = report.passes(pos_tol, ang_tol, tension_tol);

    let json = serde_json::json!({
        "pass": pass,
        "worst_pos_err": report.position_error,
        "worst_ang_err": report.angle_error,
        "worst_ang_err_deg": report.angle_error.to_degrees(),
        "tension_err": report.tension_error,
        "samples_checked": report.samples_checked,
        "links": links,
        "stride": stride,
        "pos_tol": pos_tol,
        "ang_tol": ang_tol,
        "tension_tol": tension_tol,
    });
    let line = json.to_string();
    say!("{line}");
    if let Some(path) = args.out {
        write_file(&path, &format!("{line}\n"))?;
    }
    eprintln!(
        "chain check over {} samples: pos {:.3e} m, ang {:.3e} deg, tension {:.3e} N",
        report.samples_checked,
        report.position_error,
        report.angle_error.to_degrees(),
        report.tension_error
    );

    if pass {
        Ok(())
    } else {
        Err(CliError::Verification(format!(
            "chain check failed: pos {:.3e} m (tol {:.3e}), ang {:.3e} rad (tol {:.3e}), tension {:.3e} N (tol {:.3e})",
            report.position_error,
            pos_tol,
            report.angle_error,
            ang_tol,
            report.tension_error,
            tension_tol
        )))
    }
}

fn cmd_presets(args: PresetsArgs, cfg: &ConfigFile) -> Result<(), CliError> {
    let mut format = args.format;
    if format.is_none() {
        format = cfg.get("format").map(str::to_string);
    }
    let catalog = presets::catalog();
    match format.as_deref() {
        None | Some("text") => {
            say!(
                "{:<6} {:<24} {:>6} {:>10} {:>6} {:>6} {:>14}",
                "name", "fabric", "L [m]", "q [N/m]", "k", "f", "areal [g/cm2]"
            );
            for p in &catalog {
                let raw = p
                    .raw_weight_g_cm2
                    .map(|w| format!("{w}"))
                    .unwrap_or_else(|| "-".into());
                say!(
                    "{:<6} {:<24} {:>6} {:>10.6} {:>6} {:>6} {:>14}",
                    p.name,
                    p.label,
                    p.material.length,
                    p.material.weight_per_length,
                    p.material.covering_friction,
                    p.material.gripper_friction,
                    raw
                );
            }
        }
        Some("csv") => {
            say!("name,label,L,q,k,f,raw_weight_g_cm2");
            for p in &catalog {
                let raw = p
                    .raw_weight_g_cm2
                    .map(formats::fmt17)
                    .unwrap_or_default();
                say!(
                    "{},{},{},{},{},{},{}",
                    p.name,
                    p.label,
                    formats::fmt17(p.material.length),
                    formats::fmt17(p.material.weight_per_length),
                    formats::fmt17(p.material.covering_friction),
                    formats::fmt17(p.material.gripper_friction),
                    raw
                );
            }
        }
        Some("jsonl") => {
            for p in &catalog {
                let row = serde_json::json!({
                    "name": p.name,
                    "label": p.label,
                    "L": p.material.length,
                    "q": p.material.weight_per_length,
                    "k": p.material.covering_friction,
                    "f": p.material.gripper_friction,
                    "raw_weight_g_cm2": p.raw_weight_g_cm2,
                });
                say!("{row}");
            }
        }
        Some(other) => {
            return Err(CliError::Config(format!(
                "unknown format {other:?}, expected \"text\", \"csv\" or \"jsonl\""
            )));
        }
    }
    Ok(())
}
