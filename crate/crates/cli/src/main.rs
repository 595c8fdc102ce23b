mod render;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};
use serde::Serialize;

use plankforge::cover::{spiky_annulus_cover, CoverError, Strategy};
use plankforge::geom::{ConvexBody, Plank};
use plankforge::io::{parse_body, to_json, AnyBody, CoverJson, SCHEMA_VERSION};
use plankforge::spiky::{find_spiky_minimal_width_direction, SpikeWitness, SpikyBody};
use plankforge::tol::Tolerances;
use plankforge::verify::{verify_result, SamplePlan, Sampleable, VerifyReport};

const EXIT_INPUT: u8 = 3;
const EXIT_NOT_SPIKY: u8 = 4;
const EXIT_CONSTRUCTION: u8 = 2;

#[derive(Parser)]
#[command(name = "plankforge", version, about = "Plank coverings of spiky convex annuli")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Minimal width and a minimizing direction.
    Width { body: PathBuf },
    /// Spiky minimal-width direction, if any.
    Spiky { body: PathBuf },
    /// Build a covering of K \ int(εK + y).
    Cover {
        body: PathBuf,
        #[arg(long, default_value_t = 0.5)]
        eps: f64,
        /// two_plank (2D), polyhedral or lemma2 (3D).
        #[arg(long)]
        strategy: Option<Strategy>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Adjudicate a covering by sampling and trace audits.
    Verify {
        body: PathBuf,
        cover: PathBuf,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// SVG picture of a planar body and optionally its covering.
    Render {
        body: PathBuf,
        cover: Option<PathBuf>,
        #[arg(short, long)]
        output: PathBuf,
    },
}

/// Failure carrying its exit status.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

fn input<E: Into<anyhow::Error>>(e: E) -> Failure {
    Failure { code: EXIT_INPUT, error: e.into() }
}

impl From<CoverError> for Failure {
    fn from(e: CoverError) -> Self {
        let code = match e {
            CoverError::NotSpiky => EXIT_NOT_SPIKY,
            CoverError::Geom(_)
            | CoverError::EpsilonOutOfRange(_)
            | CoverError::StrategyMismatch(..)
            | CoverError::DeltaOutOfRange { .. } => EXIT_INPUT,
            _ => EXIT_CONSTRUCTION,
        };
        Failure { code, error: e.into() }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display())).map_err(input)
}

fn load_body(path: &Path) -> Result<AnyBody, Failure> {
    parse_body(&read(path)?).with_context(|| format!("invalid body {}", path.display())).map_err(input)
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), Failure> {
    match output {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display())).map_err(input),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn json<T: Serialize>(value: &T) -> Result<String, Failure> {
    to_json(value).map_err(input)
}

#[derive(Serialize)]
struct WidthJson {
    schema_version: u32,
    w: f64,
    u_star: Vec<f64>,
}

#[derive(Serialize)]
struct SpikyJson {
    schema_version: u32,
    spiky: bool,
    direction: Option<Vec<f64>>,
    apex: Option<Vec<f64>>,
    aperture: Option<f64>,
    generators: Option<Vec<Vec<f64>>>,
}

impl SpikyJson {
    fn new<const D: usize>(w: Option<SpikeWitness<D>>) -> Self {
        let flat = |v: &plankforge::geom::Point<D>| v.iter().copied().collect::<Vec<f64>>();
        Self {
            schema_version: SCHEMA_VERSION,
            spiky: w.is_some(),
            direction: w.as_ref().map(|w| flat(w.direction.as_vec())),
            apex: w.as_ref().map(|w| flat(&w.apex)),
            aperture: w.as_ref().map(|w| w.aperture),
            generators: w.as_ref().map(|w| w.cone.generators.iter().map(flat).collect()),
        }
    }
}

#[derive(Serialize)]
struct ReportJson<'a> {
    schema_version: u32,
    #[serde(flatten)]
    report: &'a VerifyReport,
}

fn width_json<const D: usize, B: ConvexBody<D>>(b: &B) -> WidthJson {
    let (w, u) = b.minimal_width();
    WidthJson { schema_version: SCHEMA_VERSION, w, u_star: u.iter().copied().collect() }
}

fn spiky_json<const D: usize, B: SpikyBody<D>>(b: &B, tol: &Tolerances) -> SpikyJson {
    SpikyJson::new(find_spiky_minimal_width_direction(b, tol.geom))
}

fn verify_any<const D: usize, B: Sampleable<D>>(b: &B, cover: &CoverJson, plan: &SamplePlan) -> Result<VerifyReport, Failure> {
    let result = cover.to_result::<D>().map_err(input)?;
    Ok(verify_result(b, &result, plan))
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let tol = Tolerances::from_env();
    match cli.command {
        Command::Width { body } => {
            let out = match load_body(&body)? {
                AnyBody::Planar(b) => width_json(&b),
                AnyBody::Spatial(b) => width_json(&b),
            };
            emit(&json(&out)?, None)?;
            Ok(0)
        }
        Command::Spiky { body } => {
            let out = match load_body(&body)? {
                AnyBody::Planar(b) => spiky_json(&b, &tol),
                AnyBody::Spatial(b) => spiky_json(&b, &tol),
            };
            emit(&json(&out)?, None)?;
            Ok(0)
        }
        Command::Cover { body, eps, strategy, seed: _, output } => {
            let cover = match load_body(&body)? {
                AnyBody::Planar(b) => CoverJson::from_result(&spiky_annulus_cover(&b, eps, strategy, &tol)?),
                AnyBody::Spatial(b) => CoverJson::from_result(&spiky_annulus_cover(&b, eps, strategy, &tol)?),
            };
            emit(&json(&cover)?, output.as_deref())?;
            Ok(if cover.margin > 0.0 { 0 } else { EXIT_CONSTRUCTION })
        }
        Command::Verify { body, cover, samples, seed, output } => {
            let b = load_body(&body)?;
            let c: CoverJson = serde_json::from_str(&read(&cover)?)
                .with_context(|| format!("invalid cover {}", cover.display()))
                .map_err(input)?;
            let plan = SamplePlan::with_total(samples, seed);
            let report = match &b {
                AnyBody::Planar(k) => verify_any(k, &c, &plan)?,
                AnyBody::Spatial(k) => verify_any(k, &c, &plan)?,
            };
            emit(&json(&ReportJson { schema_version: SCHEMA_VERSION, report: &report })?, output.as_deref())?;
            Ok(report.verdict.exit_code() as u8)
        }
        Command::Render { body, cover, output } => {
            let AnyBody::Planar(k) = load_body(&body)? else {
                return Err(input(anyhow::anyhow!("render supports planar bodies only")));
            };
            let (inner, planks): (Option<_>, Vec<Plank<2>>) = match cover {
                Some(path) => {
                    let c: CoverJson = serde_json::from_str(&read(&path)?)
                        .with_context(|| format!("invalid cover {}", path.display()))
                        .map_err(input)?;
                    let r = c.to_result::<2>().map_err(input)?;
                    (Some(k.scaled_translated(r.params.epsilon, &r.y)), r.planks)
                }
                None => (None, Vec::new()),
            };
            let svg = render::render(&k, inner.as_ref(), &planks, &render::RenderSpec::default());
            emit(&svg, Some(&output))?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}
