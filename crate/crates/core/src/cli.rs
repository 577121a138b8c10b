//! Command-line front end. Exit codes: 0 success, 1 failed verification,
//! 2 usage or input error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::area::{area_quadrature, area_series_checked, extremal_map, AreaOutcome};
use crate::bounds::{
    area_lower_bound, class_constants, coefficient_bound, corollary1_predicate, heinz_lower,
    kh3_radius_interval, koebe_lower_bound, koebe_radius_lower, BoundReport, ClassIndex,
};
use crate::error::{Error, Result};
use crate::harmonic::{ClosedFormId, DilatationSpec};
use crate::io::{map_from_json, map_to_json, to_json_string, write_boundary_csv};
use crate::radius::{boundary_profile, koebe_radius_estimate, MapSource};
use crate::shear::shear_koebe;
use crate::tolerances::{
    AREA_ANGULAR_NODES, AREA_RADIAL_NODES, DEFAULT_J_MAX, DEFAULT_J_MIN, DEFAULT_PROFILE_SAMPLES,
    DEFAULT_SHEAR_ORDER,
};
use crate::verify;

pub const THREADS_ENV: &str = "HARMONIC_KOEBE_THREADS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "harmonic-koebe",
    version,
    about = "Harmonic shears of the Koebe function and their covering bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write the shear of K with dilatation k e^{iα} z^m as map JSON.
    Shear {
        #[arg(long)]
        k: f64,
        #[arg(long)]
        m: f64,
        #[arg(long, default_value_t = 0.0)]
        alpha: f64,
        #[arg(long, default_value_t = DEFAULT_SHEAR_ORDER)]
        order: usize,
        /// Output file; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Estimate the covering radius by a radial ladder.
    Radius {
        #[command(flatten)]
        map: MapArgs,
        #[arg(long, default_value_t = DEFAULT_J_MIN)]
        j_min: u32,
        #[arg(long, default_value_t = DEFAULT_J_MAX)]
        j_max: u32,
        #[arg(long, default_value_t = DEFAULT_PROFILE_SAMPLES)]
        samples: usize,
    },
    /// Evaluate one closed-form bound.
    Bounds {
        #[command(subcommand)]
        which: BoundCommand,
    },
    /// Image area of the disk of radius r, by coefficients and by quadrature.
    Area {
        #[command(flatten)]
        map: MapArgs,
        /// Use the extremal map z + k e^{iα}/(m+1) conj(z)^{m+1} instead of a file.
        #[arg(long, conflicts_with_all = ["file", "closed_form"])]
        extremal: bool,
        #[arg(long, requires = "extremal")]
        k: Option<f64>,
        #[arg(long, requires = "extremal")]
        m: Option<f64>,
        #[arg(long, default_value_t = 0.0)]
        alpha: f64,
        #[arg(long, default_value_t = 0.9)]
        r: f64,
        #[arg(long, default_value_t = AREA_RADIAL_NODES)]
        n_rad: usize,
        #[arg(long, default_value_t = AREA_ANGULAR_NODES)]
        n_ang: usize,
    },
    /// Write f(r e^{iθ}) samples as CSV.
    ExportBoundary {
        #[command(flatten)]
        map: MapArgs,
        #[arg(long)]
        r: f64,
        #[arg(long, default_value_t = DEFAULT_PROFILE_SAMPLES)]
        samples: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the verification suite.
    Verify {
        /// Run a single named check.
        #[arg(long)]
        only: Option<String>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
struct MapArgs {
    /// Map JSON file.
    file: Option<PathBuf>,
    /// Closed form instead of a file: K, KH_1 .. KH_4.
    #[arg(long, conflicts_with = "file")]
    closed_form: Option<String>,
}

#[derive(Debug, Subcommand)]
enum BoundCommand {
    /// r / (4 (1 + k r^m)^{2/m})
    KoebeLower {
        #[arg(long)]
        r: f64,
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// 1 / (4 (1 + k)^{2/m})
    KoebeRadius {
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// Covering predicate for the 1/6 disk, stated and exact forms.
    Corollary1 {
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// R_q and d_q.
    ClassConstants {
        #[arg(long)]
        q: u32,
    },
    /// Bound on |a_p| in S_H^{p,q}.
    Coefficient {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        q: u32,
    },
    /// 3√3 R / (2π)
    Heinz {
        #[arg(long)]
        r: f64,
    },
    /// π (1 - k^2 / (m + 1))
    Area {
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// Lower and upper covering radius estimates for S_H^0(1, 3).
    Kh3Interval,
}

#[derive(Debug, Args)]
struct SpecArgs {
    #[arg(long)]
    k: f64,
    #[arg(long)]
    m: f64,
}

impl SpecArgs {
    fn spec(&self) -> Result<DilatationSpec> {
        DilatationSpec::new(self.k, self.m, 0.0)
    }
}

impl MapArgs {
    fn load(&self) -> Result<MapSource> {
        match (&self.file, &self.closed_form) {
            (_, Some(name)) => Ok(MapSource::Closed(name.parse::<ClosedFormId>()?)),
            (Some(path), None) => read_map(path),
            (None, None) => Err(Error::Format("give a map file or --closed-form".into())),
        }
    }
}

fn read_map(path: &Path) -> Result<MapSource> {
    let text =
        fs::read_to_string(path).map_err(|e| Error::Format(format!("{}: {e}", path.display())))?;
    map_from_json(&text)
}

fn write_output(path: Option<&Path>, text: &str, stdout: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Error::Format(format!("{}: {e}", p.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| Error::Format(e.to_string())),
    }
}

fn json_line<T: Serialize>(value: &T) -> Result<String> {
    to_json_string(value).map(|s| s + "\n")
}

fn configure_threads(stderr: &mut dyn Write) {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return;
    };
    match raw.trim().parse::<usize>() {
        Ok(n) if n > 0 => {
            // a second call in the same process keeps the first pool
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global();
        }
        _ => {
            let _ = writeln!(
                stderr,
                "ignoring {THREADS_ENV}={raw:?}: expected a positive integer"
            );
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    configure_threads(stderr);
    match dispatch(cli.command, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(command: Command, stdout: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Shear {
            k,
            m,
            alpha,
            order,
            output,
        } => {
            let spec = DilatationSpec::new(k, m, alpha)?;
            let map = shear_koebe(&spec, order)?;
            let meta = serde_json::json!({"k": k, "m": m, "alpha": spec.alpha(), "order": order});
            write_output(
                output.as_deref(),
                &(map_to_json(&map, Some(meta))? + "\n"),
                stdout,
            )?;
        }
        Command::Radius {
            map,
            j_min,
            j_max,
            samples,
        } => {
            let est = koebe_radius_estimate(&map.load()?, j_min, j_max, samples)?;
            write_output(None, &json_line(&est)?, stdout)?;
        }
        Command::Bounds { which } => {
            write_output(None, &json_line(&bound_report(which)?)?, stdout)?;
        }
        Command::Area {
            map,
            extremal,
            k,
            m,
            alpha,
            r,
            n_rad,
            n_ang,
        } => {
            let source = if extremal {
                let (Some(k), Some(m)) = (k, m) else {
                    return Err(Error::InvalidSpec("--extremal needs --k and --m".into()));
                };
                MapSource::Series(extremal_map(&DilatationSpec::new(k, m, alpha)?)?)
            } else {
                map.load()?
            };
            let MapSource::Series(f) = source else {
                return Err(Error::Format(
                    "area needs a series map, not a closed form".into(),
                ));
            };
            #[derive(Serialize)]
            struct AreaReport {
                r: f64,
                series: AreaOutcome,
                quadrature: Option<f64>,
            }
            let quadrature = if r < 1.0 {
                Some(area_quadrature(&f, r, n_rad, n_ang)?)
            } else {
                None
            };
            let report = AreaReport {
                r,
                series: area_series_checked(&f, r)?,
                quadrature,
            };
            write_output(None, &json_line(&report)?, stdout)?;
        }
        Command::ExportBoundary {
            map,
            r,
            samples,
            output,
        } => {
            let profile = boundary_profile(&map.load()?, r, samples)?;
            let mut buf = Vec::new();
            write_boundary_csv(&profile, &mut buf).map_err(|e| Error::Format(e.to_string()))?;
            write_output(output.as_deref(), &String::from_utf8_lossy(&buf), stdout)?;
        }
        Command::Verify { only, json } => return run_verify(only.as_deref(), json, stdout),
    }
    Ok(EXIT_OK)
}

fn bound_report(which: BoundCommand) -> Result<BoundReport> {
    Ok(match which {
        BoundCommand::KoebeLower { r, spec } => {
            let s = spec.spec()?;
            BoundReport::formula(
                "koebe_lower_bound",
                [("r", r), ("k", s.k()), ("m", s.m())],
                koebe_lower_bound(r, &s)?,
            )
        }
        BoundCommand::KoebeRadius { spec } => {
            let s = spec.spec()?;
            BoundReport::formula(
                "koebe_radius_lower",
                [("k", s.k()), ("m", s.m())],
                koebe_radius_lower(&s),
            )
        }
        BoundCommand::Corollary1 { spec } => {
            let s = spec.spec()?;
            let pred = corollary1_predicate(&s);
            let mut report = BoundReport::formula(
                "corollary1_predicate",
                [("k", s.k()), ("m", s.m())],
                koebe_radius_lower(&s),
            );
            report
                .inputs
                .insert("stated".into(), pred.stated as u8 as f64);
            report
                .inputs
                .insert("exact".into(), pred.exact as u8 as f64);
            report
        }
        BoundCommand::ClassConstants { q } => {
            let c = class_constants(q)?;
            let mut report = BoundReport::formula("class_constants", [("q", q as f64)], c.r_q);
            report.inputs.insert("d_q".into(), c.d_q);
            report
        }
        BoundCommand::Coefficient { p, q } => {
            let idx = ClassIndex::new(p, q)?;
            BoundReport::formula(
                "coefficient_bound",
                [("p", p as f64), ("q", q as f64)],
                coefficient_bound(idx),
            )
        }
        BoundCommand::Heinz { r } => {
            BoundReport::formula("heinz_lower", [("R", r)], heinz_lower(r)?)
        }
        BoundCommand::Area { spec } => {
            let s = spec.spec()?;
            BoundReport::formula(
                "area_lower_bound",
                [("k", s.k()), ("m", s.m())],
                area_lower_bound(&s)?,
            )
        }
        BoundCommand::Kh3Interval => {
            let (lo, hi) = kh3_radius_interval();
            BoundReport::formula("kh3_radius_interval", [("upper", hi)], lo)
        }
    })
}

fn run_verify(only: Option<&str>, json: bool, stdout: &mut dyn Write) -> Result<i32> {
    if let Some(name) = only {
        if !verify::check_names().any(|n| n == name) {
            let known: Vec<_> = verify::check_names().collect();
            return Err(Error::Format(format!(
                "unknown check {name:?}; known: {}",
                known.join(", ")
            )));
        }
    }
    let outcomes = verify::run(|n| only.is_none_or(|o| o == n));
    let all_pass = outcomes.iter().all(|o| o.pass);
    let text = if json {
        #[derive(Serialize)]
        struct Report<'a> {
            all_pass: bool,
            checks: &'a [verify::CheckOutcome],
        }
        json_line(&Report {
            all_pass,
            checks: &outcomes,
        })?
    } else {
        let mut t = format!("{:<28} {:<6} {:<56} got\n", "name", "pass", "expected");
        for o in &outcomes {
            t += &format!(
                "{:<28} {:<6} {:<56} {}\n",
                o.name,
                if o.pass { "PASS" } else { "FAIL" },
                o.expected,
                o.got
            );
        }
        t
    };
    write_output(None, &text, stdout)?;
    Ok(if all_pass { EXIT_OK } else { EXIT_FAILED })
}
