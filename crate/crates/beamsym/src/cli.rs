//! Command-line front end.
//!
//! Every subcommand is a thin adapter: parse flags, call the library with
//! exactly those parameters, render one report.  Exit codes: 0 success
//! (report written), 1 domain or validation failure, 2 usage error.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::beam::{load_beam_spec, BeamProfile};
use crate::classifier::{classify, ClassLabel};
use crate::equivalence::{build_transform, TransformConstants};
use crate::error::{Error, Result};
use crate::gottlieb::{make_gottlieb, GottliebParams, Rational};
use crate::reduction::reduce_stage3;
use crate::report::{
    canonicalize_report, classify_report, gottlieb_report, isospectral_report, reduce_report,
    spectrum_report, Report, ReportFormat,
};
use crate::spectral::{assemble, isospectral_check, solve_spectrum, uniform_frequencies,
    BoundaryCondition};

#[derive(Parser)]
#[command(
    name = "beamsym",
    version,
    about = "Symmetry classification, canonical transformations and iso-spectral \
             verification for fourth-order beam vibration equations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Seed for randomized probes; all current subcommands are
    /// deterministic, the value is recorded in the report.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct OutputOpts {
    /// Report rendering: structured (byte-stable) or human.
    #[arg(long, default_value = "structured")]
    format: String,
    /// Write the report to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Assign the point-symmetry class of a beam and print the residual table.
    Classify {
        /// Beam-spec file (name, f, m, domain).
        #[arg(long)]
        beam: PathBuf,
        /// Number of interior sample nodes.
        #[arg(long, default_value_t = 33)]
        samples: usize,
        /// Residual threshold separating satisfied from violated.
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Build the explicit map onto the class representative and probe it.
    Canonicalize {
        #[arg(long)]
        beam: PathBuf,
        #[arg(long, default_value_t = 33)]
        samples: usize,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Transform constants; give all three or none (defaults applied).
        #[arg(long)]
        c1: Option<f64>,
        #[arg(long)]
        c2: Option<f64>,
        #[arg(long)]
        c3: Option<f64>,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Generate one member of the iso-spectral beam family.
    Gottlieb {
        /// Power-law exponent: an integer or p/q (admissible: 0, 3/2, 5/2, 4).
        #[arg(long)]
        exponent: String,
        /// Affine slope in Ax + B.
        #[arg(long = "A", default_value_t = 1.0, allow_hyphen_values = true)]
        a: f64,
        /// Affine offset in Ax + B.
        #[arg(long = "B", default_value_t = 1.0, allow_hyphen_values = true)]
        b: f64,
        /// Rigidity scale.
        #[arg(long = "K", default_value_t = 1.0)]
        k: f64,
        /// Möbius coefficients L,M,P,Q.
        #[arg(long, value_delimiter = ',', default_value = "0,1,1,0", allow_hyphen_values = true)]
        mobius: Vec<f64>,
        /// Beam interval endpoints.
        #[arg(long, num_args = 2, default_values_t = [0.0, 1.0], allow_hyphen_values = true)]
        interval: Vec<f64>,
        /// Write the generated beam-spec file here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Report rendering: structured (byte-stable) or human.
        #[arg(long, default_value = "structured")]
        format: String,
    },
    /// Solve the clamped-clamped spectrum on a uniform grid.
    Spectrum {
        #[arg(long)]
        beam: PathBuf,
        /// Grid intervals (also solved at half this for error estimates).
        #[arg(long, default_value_t = 2000)]
        grid: usize,
        /// Number of eigenfrequencies.
        #[arg(long, default_value_t = 3)]
        modes: usize,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Verify a maximal-class beam against its uniform iso-spectral partner.
    IsospectralCheck {
        #[arg(long)]
        beam: PathBuf,
        #[arg(long, default_value_t = 2000)]
        grid: usize,
        #[arg(long, default_value_t = 3)]
        modes: usize,
        /// Acceptance threshold on the per-mode relative deviation.
        #[arg(long, default_value_t = 5e-3)]
        max_deviation: f64,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Run the order-reduction chain of the rigidity constraint.
    Reduce {
        /// Rigidity expression f(x).
        #[arg(long)]
        f: String,
        /// Interval endpoints.
        #[arg(long, num_args = 2, required = true, allow_hyphen_values = true)]
        interval: Vec<f64>,
        #[arg(long, default_value_t = 33)]
        samples: usize,
        #[command(flatten)]
        output: OutputOpts,
    },
}

enum Failure {
    Usage(String),
    Run(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Run(e)
    }
}

/// Parses `argv` (including the program name), runs one subcommand, and
/// returns the process exit code.
pub fn run(argv: &[String]) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let seed = cli.seed;
    match dispatch(cli.command, seed) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            2
        }
        Err(Failure::Run(e)) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn read_beam(path: &Path) -> Result<BeamProfile> {
    let doc = fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        source: e,
    })?;
    load_beam_spec(&doc)
}

fn parse_format(tag: &str) -> std::result::Result<ReportFormat, Failure> {
    tag.parse::<ReportFormat>()
        .map_err(|e| Failure::Usage(e.to_string()))
}

fn emit(mut report: Report, seed: u64, format: ReportFormat, out: Option<&Path>) -> Result<()> {
    report.int("options.seed", seed as i64);
    let text = report.render(format);
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Error::Io {
            path: path.display().to_string(),
            source: e,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn parse_exponent(s: &str) -> std::result::Result<Rational, Failure> {
    let parse_int = |t: &str| {
        t.trim()
            .parse::<i64>()
            .map_err(|_| Failure::Usage(format!("exponent \"{s}\" is not an integer or p/q")))
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let den = parse_int(q)?;
            if den == 0 {
                return Err(Failure::Usage("exponent denominator is zero".into()));
            }
            Ok(Rational::new(parse_int(p)?, den))
        }
        None => Ok(Rational::from(parse_int(s)?)),
    }
}

fn dispatch(command: Command, seed: u64) -> std::result::Result<(), Failure> {
    match command {
        Command::Classify {
            beam,
            samples,
            tol,
            output,
        } => {
            let format = parse_format(&output.format)?;
            let profile = read_beam(&beam)?;
            let cls = classify(&profile, samples, tol)?;
            emit(classify_report(&profile, &cls), seed, format, output.out.as_deref())?;
            Ok(())
        }
        Command::Canonicalize {
            beam,
            samples,
            tol,
            c1,
            c2,
            c3,
            output,
        } => {
            let format = parse_format(&output.format)?;
            let constants = match (c1, c2, c3) {
                (Some(c1), Some(c2), Some(c3)) => Some(TransformConstants::new(c1, c2, c3)),
                (None, None, None) => None,
                _ => {
                    return Err(Failure::Usage(
                        "give all of --c1 --c2 --c3 or none".into(),
                    ))
                }
            };
            let profile = read_beam(&beam)?;
            let cls = classify(&profile, samples, tol)?;
            let tr = build_transform(&profile, &cls, constants)?;
            let orbit = tr.orbit_check()?;
            // For the scaling class, also probe whether a nonzero time
            // shear still maps solutions; reported either way.
            let shear = if cls.label == ClassLabel::A1PlusA2 && constants.is_none() {
                let c = tr.constants();
                let sheared =
                    build_transform(&profile, &cls, Some(TransformConstants::new(0.1, c.c2, c.c3)))?;
                Some((0.1, sheared.orbit_check()?.max_residual))
            } else {
                None
            };
            emit(
                canonicalize_report(&profile, &cls, &tr, &orbit, shear),
                seed,
                format,
                output.out.as_deref(),
            )?;
            Ok(())
        }
        Command::Gottlieb {
            exponent,
            a,
            b,
            k,
            mobius,
            interval,
            out,
            format,
        } => {
            let format = parse_format(&format)?;
            if mobius.len() != 4 {
                return Err(Failure::Usage(format!(
                    "--mobius needs exactly 4 coefficients L,M,P,Q, got {}",
                    mobius.len()
                )));
            }
            let params = GottliebParams {
                k,
                a,
                b,
                exponent: parse_exponent(&exponent)?,
                mobius: [mobius[0], mobius[1], mobius[2], mobius[3]],
                interval: (interval[0], interval[1]),
            };
            let beam = make_gottlieb(&params)?;
            let cls = classify(&beam, 33, 1e-9)?;
            if let Some(path) = &out {
                fs::write(path, beam.to_beam_spec()).map_err(|e| Error::Io {
                    path: path.display().to_string(),
                    source: e,
                })?;
            }
            emit(gottlieb_report(&params, &beam, &cls), seed, format, None)?;
            Ok(())
        }
        Command::Spectrum {
            beam,
            grid,
            modes,
            output,
        } => {
            let format = parse_format(&output.format)?;
            let profile = read_beam(&beam)?;
            let coarse = solve_spectrum(
                &assemble(&profile, grid / 2, BoundaryCondition::ClampedClamped)?,
                modes,
            )?;
            let fine = solve_spectrum(
                &assemble(&profile, grid, BoundaryCondition::ClampedClamped)?,
                modes,
            )?;
            // Analytic reference exists exactly when the beam is equivalent
            // to a uniform one.
            let reference = match classify(&profile, 33, 1e-9) {
                Ok(cls) if cls.label == ClassLabel::A33PlusA1 => {
                    Some(uniform_frequencies(modes, profile.g()?.total()))
                }
                _ => None,
            };
            emit(
                spectrum_report(&profile, &coarse, &fine, reference.as_deref()),
                seed,
                format,
                output.out.as_deref(),
            )?;
            Ok(())
        }
        Command::IsospectralCheck {
            beam,
            grid,
            modes,
            max_deviation,
            output,
        } => {
            let format = parse_format(&output.format)?;
            let profile = read_beam(&beam)?;
            let rep = isospectral_check(&profile, modes, grid, max_deviation)?;
            emit(
                isospectral_report(&profile, &rep),
                seed,
                format,
                output.out.as_deref(),
            )?;
            Ok(())
        }
        Command::Reduce {
            f,
            interval,
            samples,
            output,
        } => {
            let format = parse_format(&output.format)?;
            let ast = crate::expr::parse_expr(&f)?;
            let st = crate::reduction::reduce_stage1(&ast, (interval[0], interval[1]), samples)?;
            let st = crate::reduction::reduce_stage2(st)?;
            let st = reduce_stage3(st)?;
            emit(
                reduce_report(&f, (interval[0], interval[1]), &st),
                seed,
                format,
                output.out.as_deref(),
            )?;
            Ok(())
        }
    }
}
