//! Command-line front end.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::config::VerifyConfig;
use crate::dome::{build_dome, dome_mesh};
use crate::epstein::{epstein_mesh, EpsteinInput};
use crate::error::{Error, Result};
use crate::halfspace::H3Point;
use crate::metrics::{ConformalMetric, PlaneDomain};
use crate::schwarzian::MapCatalogEntry;
use crate::tables::{bound_table, radius_range, wvolume_table};
use crate::verify;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "epstein-kit", version, about = "Epstein surfaces, domes and W-volume checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Schwarzian,
    Anderson,
    Epstein,
    Dome,
    Wvolume,
    Bounds,
    All,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Schwarzian => "schwarzian",
            Suite::Anderson => "anderson",
            Suite::Epstein => "epstein",
            Suite::Dome => "dome",
            Suite::Wvolume => "wvolume",
            Suite::Bounds => "bounds",
            Suite::All => "all",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MeshTarget {
    Epstein,
    Dome,
    Flow,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportTarget {
    WvolumeTable,
    BoundTable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MetricChoice {
    Hyperbolic,
    /// Spherical metric, seen from (0, 0, 1).
    Visual,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DomainChoice {
    Disk,
    TwoDisks,
    Slit,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run a verification suite; exit 0 iff every check passes.
    Verify {
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Tolerance file (`key = value` lines); missing keys keep defaults.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Write the text report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write a JSON summary.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Write an OBJ mesh in half-space coordinates.
    Mesh {
        target: MeshTarget,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value = "koebe")]
        map: String,
        #[arg(long, value_enum, default_value_t = MetricChoice::Hyperbolic)]
        metric: MetricChoice,
        /// Hyperbolic radius of the sampled source disk.
        #[arg(long, default_value_t = 3.0)]
        radius: f64,
        #[arg(long, default_value_t = 24)]
        rings: usize,
        #[arg(long, default_value_t = 48)]
        spokes: usize,
        #[arg(long, value_enum, default_value_t = DomainChoice::TwoDisks)]
        domain: DomainChoice,
        #[arg(long, default_value_t = 0.5)]
        a: f64,
        /// Number of flow steps (flow target).
        #[arg(long, default_value_t = 5)]
        steps: usize,
        /// Flow time per step.
        #[arg(long, default_value_t = 0.5)]
        ds: f64,
    },
    /// Write a CSV table.
    Report {
        target: ReportTarget,
        #[arg(long)]
        out: PathBuf,
        /// Radius range for the W-volume table.
        #[arg(long, default_value_t = 0.5)]
        from: f64,
        #[arg(long, default_value_t = 2.0)]
        to: f64,
        #[arg(long, default_value_t = 0.5)]
        step: f64,
        /// Log-spaced range for the bound table.
        #[arg(long, default_value_t = 1e-3)]
        lo: f64,
        #[arg(long, default_value_t = 1.0)]
        hi: f64,
        #[arg(long, default_value_t = 25)]
        n: usize,
        #[arg(long, default_value_t = 1.5)]
        k: f64,
    },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Config(_) | Error::InvalidParameter(_) | Error::Unsupported(_) => EXIT_USAGE,
        _ => EXIT_FAIL,
    }
}

fn write(path: &Path, text: &str) -> Result<()> {
    Ok(std::fs::write(path, text)?)
}

/// `out/stem.obj` becomes `out/stem_k.obj`.
pub fn flow_path(out: &Path, k: usize) -> PathBuf {
    let stem = out.file_stem().and_then(|s| s.to_str()).unwrap_or("flow");
    let ext = out.extension().and_then(|s| s.to_str()).unwrap_or("obj");
    out.with_file_name(format!("{stem}_{k}.{ext}"))
}

fn run_command(cmd: Command) -> Result<i32> {
    match cmd {
        Command::Verify { suite, seed, config, out, json } => {
            let config = match config {
                Some(p) => VerifyConfig::load(&p).map_err(|e| match e {
                    Error::Io(io) => Error::Config(format!("{}: {io}", p.display())),
                    other => other,
                })?,
                None => VerifyConfig::default(),
            };
            let reports = verify::run(suite.name(), &config, seed)?;
            let text = verify::render(&reports, &config);
            match out {
                Some(p) => write(&p, &text)?,
                None => print!("{text}"),
            }
            if let Some(p) = json {
                write(&p, &verify::summary_json(&reports))?;
            }
            Ok(if reports.iter().all(|r| r.pass) { EXIT_PASS } else { EXIT_FAIL })
        }
        Command::Mesh { target, out, map, metric, radius, rings, spokes, domain, a, steps, ds } => {
            if rings == 0 || spokes < 3 {
                return Err(Error::InvalidParameter("need rings ≥ 1 and spokes ≥ 3".into()));
            }
            let input = || -> Result<EpsteinInput> {
                let f = MapCatalogEntry::lookup(&map)?;
                Ok(match metric {
                    MetricChoice::Hyperbolic => EpsteinInput::hyperbolic(f),
                    MetricChoice::Visual => {
                        EpsteinInput::new(f, ConformalMetric::Visual(H3Point::new(0.0.into(), 1.0)?))
                    }
                })
            };
            match target {
                MeshTarget::Epstein => {
                    let m = epstein_mesh(&input()?, radius, rings, spokes)?;
                    m.write_obj(&out, &format!("epstein surface, map {map}, {metric:?} metric"))?;
                }
                MeshTarget::Dome => {
                    let d = match domain {
                        DomainChoice::Disk => PlaneDomain::disk(),
                        DomainChoice::TwoDisks => PlaneDomain::two_disks(a)?,
                        DomainChoice::Slit => PlaneDomain::SlitPlane,
                    };
                    let m = dome_mesh(&build_dome(&d)?, rings, spokes)?;
                    m.write_obj(&out, &format!("dome of {domain:?}"))?;
                }
                MeshTarget::Flow => {
                    let base = input()?;
                    for k in 1..=steps {
                        let s = k as f64 * ds;
                        let m = epstein_mesh(&base.scaled(s), radius, rings, spokes)?;
                        m.write_obj(&flow_path(&out, k), &format!("epstein surface, map {map}, flow time {s}"))?;
                    }
                }
            }
            Ok(EXIT_PASS)
        }
        Command::Report { target, out, from, to, step, lo, hi, n, k } => {
            let csv = match target {
                ReportTarget::WvolumeTable => wvolume_table(&radius_range(from, to, step)?)?,
                ReportTarget::BoundTable => bound_table(lo, hi, n, k)?,
            };
            write(&out, &csv)?;
            Ok(EXIT_PASS)
        }
    }
}

/// Parse `args` and run; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
        }
    };
    match run_command(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flow_paths() {
        assert_eq!(flow_path(Path::new("/tmp/a/flow.obj"), 3), PathBuf::from("/tmp/a/flow_3.obj"));
        assert_eq!(flow_path(Path::new("x"), 1), PathBuf::from("x_1.obj"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(main_with_args(["epstein-kit", "verify", "nope"]), EXIT_USAGE);
        assert_eq!(main_with_args(["epstein-kit"]), EXIT_USAGE);
        assert_eq!(main_with_args(["epstein-kit", "verify", "bounds", "--config", "/nonexistent/cfg"]), EXIT_USAGE);
    }
}
