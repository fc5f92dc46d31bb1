//! `braids`: command-line access to the verification toolkit.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use truncated_braids::enumerate::DEFAULT_CAP;
use truncated_braids::geometry::{
    coeffs_to_roots, discriminant_winding, linking_number, meridian_loop, monodromy,
    orbit_polyline, orbit_samples, RootTriple, SpherePoint,
};
use truncated_braids::report::{
    center_case, order_case, verify_all, CaseStatus, ReportConfig, VerificationCase,
};
use truncated_braids::tiling::{render, synthesize_tiling};

#[derive(Parser)]
#[command(
    name = "braids",
    version,
    about = "Braid group quotients, regular tilings, and trefoil geometry"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Orders of braid group quotients by coset enumeration
    #[command(subcommand)]
    Coxeter(CoxeterCommand),
    /// Regular tilings: synthesis and rendering
    #[command(subcommand)]
    Tiling(TilingCommand),
    /// Trefoil-side numerics: meridians, orbits, linking
    #[command(subcommand)]
    Geom(GeomCommand),
    /// Machine-readable verification reports
    #[command(subcommand)]
    Report(ReportCommand),
}

#[derive(Subcommand)]
enum CoxeterCommand {
    /// Check one order claim: enumeration vs the face-count formula
    Verify(VerifyArgs),
    /// The order of the full twist in the 3-strand quotient
    CenterOrder(CenterArgs),
    /// The five exceptional orders as an aligned table and JSON
    Table,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    d: usize,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
}

#[derive(Args)]
struct CenterArgs {
    #[arg(long)]
    d: usize,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
}

#[derive(Subcommand)]
enum TilingCommand {
    /// Build the dart-level spherical tiling and print its counts
    Synthesize(SynthesizeArgs),
    /// Write an SVG drawing of the tiling
    Render(RenderArgs),
}

#[derive(Args)]
struct SynthesizeArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    d: usize,
    /// Write the full dart partition as JSON to this path
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct RenderArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    d: usize,
    /// Expansion generations for Euclidean and hyperbolic tilings
    #[arg(long, default_value_t = 3)]
    depth: usize,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Subcommand)]
enum GeomCommand {
    /// Sample the meridian family and report its winding and monodromy
    Meridian(StepsArgs),
    /// Discriminant winding along one Seifert orbit
    OrbitWinding(SamplesArgs),
    /// Gauss linking number of two sampled orbits
    Linking(SamplesArgs),
    /// Root-tracking monodromy of the meridian family
    Monodromy(StepsArgs),
}

#[derive(Args)]
struct StepsArgs {
    #[arg(long, default_value_t = 256)]
    steps: usize,
}

#[derive(Args)]
struct SamplesArgs {
    #[arg(long, default_value_t = 512)]
    samples: usize,
}

#[derive(Subcommand)]
enum ReportCommand {
    /// Run every verification case and emit the JSON report
    All(ReportArgs),
}

#[derive(Args)]
struct ReportArgs {
    /// JSON config file (keys: cap, infinite_cap, samples, steps, tolerance)
    #[arg(long)]
    config: Option<PathBuf>,
    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

fn case_exit(case: &VerificationCase) -> ExitCode {
    match case.status {
        CaseStatus::Fail => ExitCode::from(1),
        _ => ExitCode::SUCCESS,
    }
}

fn print_case(case: &VerificationCase) -> anyhow::Result<()> {
    println!("{}", serde_json::to_string_pretty(case)?);
    Ok(())
}

fn run() -> anyhow::Result<ExitCode> {
    let cli = Cli::parse();
    match cli.command {
        Command::Coxeter(CoxeterCommand::Verify(args)) => {
            let case = order_case(args.n, args.d, args.cap);
            print_case(&case)?;
            Ok(case_exit(&case))
        }
        Command::Coxeter(CoxeterCommand::CenterOrder(args)) => {
            let case = center_case(args.d, args.cap);
            print_case(&case)?;
            Ok(case_exit(&case))
        }
        Command::Coxeter(CoxeterCommand::Table) => {
            let cases: Vec<VerificationCase> = [(3, 3), (3, 4), (3, 5), (4, 3), (5, 3)]
                .into_iter()
                .map(|(n, d)| order_case(n, d, DEFAULT_CAP))
                .collect();
            println!(
                "{:<12} {:>10} {:>10}  status",
                "case", "expected", "computed"
            );
            for case in &cases {
                println!(
                    "{:<12} {:>10} {:>10}  {:?}",
                    case.id,
                    serde_json::to_string(&case.expected)?,
                    serde_json::to_string(&case.computed)?,
                    case.status
                );
            }
            println!("{}", serde_json::to_string_pretty(&cases)?);
            let failed = cases.iter().any(|c| c.status == CaseStatus::Fail);
            Ok(if failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Tiling(TilingCommand::Synthesize(args)) => {
            let tiling = synthesize_tiling(args.n, args.d, DEFAULT_CAP)?;
            let summary = json!({
                "n": args.n,
                "d": args.d,
                "geometry": tiling.symbol().geometry(),
                "V": tiling.vertex_count(),
                "E": tiling.edge_count(),
                "F": tiling.face_count(),
                "darts": tiling.dart_count(),
            });
            println!("{}", serde_json::to_string_pretty(&summary)?);
            if let Some(path) = args.json {
                let full = serde_json::to_string_pretty(&tiling.to_json())?;
                std::fs::write(&path, full + "\n")
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Tiling(TilingCommand::Render(args)) => {
            let doc = render(args.n, args.d, args.depth)?;
            std::fs::write(&args.out, doc.to_svg())
                .with_context(|| format!("writing {}", args.out.display()))?;
            println!(
                "{}",
                json!({
                    "n": args.n,
                    "d": args.d,
                    "depth": args.depth,
                    "polygons": doc.polygon_count(),
                    "out": args.out,
                })
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Geom(GeomCommand::Meridian(args)) => {
            let (points, winding) = meridian_loop(args.steps)?;
            let family: Vec<RootTriple> = points
                .iter()
                .map(|p| coeffs_to_roots(p.a(), p.b()))
                .collect();
            let perm = monodromy(&family)?;
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "steps": args.steps,
                    "winding": winding,
                    "monodromy": perm.to_string(),
                    "transposition": perm.is_transposition(),
                }))?
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Geom(GeomCommand::OrbitWinding(args)) => {
            let base = SpherePoint::from_polar(0.75, 0.3, 1.2).expect("generic base point");
            let samples = orbit_samples(&base, args.samples)?;
            let winding = discriminant_winding(&samples)?;
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "samples": args.samples,
                    "winding": winding,
                }))?
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Geom(GeomCommand::Linking(args)) => {
            let p1 = SpherePoint::from_polar(0.7, 0.3, 1.1).expect("generic base point");
            let p2 = SpherePoint::from_polar(0.5, 2.0, 0.4).expect("generic base point");
            let k1 = orbit_polyline(&p1, args.samples)?;
            let k2 = orbit_polyline(&p2, args.samples)?;
            let lk = linking_number(&k1, &k2)?;
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "samples": args.samples,
                    "value": lk.value,
                    "nearest": lk.nearest,
                }))?
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Geom(GeomCommand::Monodromy(args)) => {
            let (points, _) = meridian_loop(args.steps)?;
            let family: Vec<RootTriple> = points
                .iter()
                .map(|p| coeffs_to_roots(p.a(), p.b()))
                .collect();
            let perm = monodromy(&family)?;
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "steps": args.steps,
                    "monodromy": perm.to_string(),
                    "order": perm.order(),
                    "transposition": perm.is_transposition(),
                }))?
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Report(ReportCommand::All(args)) => {
            let config = match args.config {
                Some(path) => match ReportConfig::load(&path) {
                    Ok(config) => config,
                    Err(e) => {
                        eprintln!("config error: {e}");
                        return Ok(ExitCode::from(2));
                    }
                },
                None => ReportConfig::default(),
            };
            let report = match verify_all(&config) {
                Ok(report) => report,
                Err(e) => {
                    eprintln!("config error: {e}");
                    return Ok(ExitCode::from(2));
                }
            };
            let text = report.to_json_string();
            match args.out {
                Some(path) => std::fs::write(&path, &text)
                    .with_context(|| format!("writing {}", path.display()))?,
                None => print!("{text}"),
            }
            Ok(ExitCode::from(report.exit_code() as u8))
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
