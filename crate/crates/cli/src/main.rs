//! Command-line front-end: parse input files, dispatch to the library, and
//! emit deterministic reports as pretty text or JSON.
//!
//! Exit codes: 0 on success, 1 on input or parse errors, 2 on violated
//! operation preconditions.

mod commands;
mod formats;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use quadrics_core::exact::field::Scalar;
use quadrics_core::quadform::{QuadraticForm, Subspace};
use quadrics_core::Error;

use report::Report;

#[derive(Parser)]
#[command(
    name = "quadrics",
    about = "Exact computations for quadratic forms, Clifford algebras, spinor matrix factorizations, discriminant covers, and finite-field Fano enumeration"
)]
struct Cli {
    /// Emit the report as JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized equivalence sampling; recorded in the report.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Corank report of a form, or of a bundle fiber at a base point.
    Corank {
        #[arg(long)]
        form: Option<PathBuf>,
        #[arg(long)]
        bundle: Option<PathBuf>,
        /// Base point "c0,...,cm" (with --bundle).
        #[arg(long)]
        point: Option<String>,
    },
    /// Hyperbolic reduction of a form, or of a bundle along a constant
    /// coordinate subbundle.
    Reduce {
        #[arg(long)]
        form: Option<PathBuf>,
        #[arg(long)]
        bundle: Option<PathBuf>,
        #[arg(long)]
        subspace: PathBuf,
    },
    /// Canonical basis of a Clifford ideal component.
    CliffordIdeal {
        #[arg(long)]
        form: PathBuf,
        #[arg(long)]
        subspace: PathBuf,
        #[arg(long)]
        degree: i64,
    },
    /// Spinor matrix factorization with verification.
    SpinorMf {
        #[arg(long)]
        form: PathBuf,
        #[arg(long)]
        subspace: PathBuf,
        #[arg(long)]
        degree: i64,
    },
    /// Equivalence search between two spinor factorizations.
    MfEquiv {
        #[arg(long)]
        form: PathBuf,
        #[arg(long)]
        subspace: PathBuf,
        #[arg(long)]
        degree: i64,
        #[arg(long)]
        subspace2: PathBuf,
        /// Defaults to --degree.
        #[arg(long)]
        degree2: Option<i64>,
        /// Compare the dual pair of the first factorization instead.
        #[arg(long)]
        dual: bool,
    },
    /// Universal even-rank discriminant over the integers.
    DiscUniversal {
        #[arg(long)]
        rank: usize,
    },
    /// Discriminant cover of an even-rank quadric bundle.
    DiscBundle {
        #[arg(long)]
        bundle: PathBuf,
    },
    /// Discriminant cover of a cubic fourfold containing a plane.
    Cubic4Cover {
        #[arg(long)]
        cubic: PathBuf,
    },
    /// Bidegree pieces of the two-disjoint-planes K3 model.
    Cubic4K3 {
        #[arg(long)]
        cubic: PathBuf,
    },
    /// Exhaustive isotropic subspace enumeration over a finite field.
    FanoEnum {
        #[arg(long)]
        form: PathBuf,
        /// Linear dimension of the subspaces.
        #[arg(long)]
        dim: usize,
    },
    /// Ruling classes of maximal isotropics on a smooth even quadric.
    FanoComponents {
        #[arg(long)]
        form: PathBuf,
        #[arg(long)]
        dim: usize,
    },
    /// Frobenius splitting of the corank-2 double cover.
    CoverSplit {
        #[arg(long)]
        form: PathBuf,
    },
    /// Component and singular-line intersection label of a line on a
    /// reducible quadric surface; with a second line, spinor agreement.
    LineClass {
        #[arg(long)]
        form: PathBuf,
        #[arg(long)]
        subspace: PathBuf,
        #[arg(long)]
        subspace2: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        degree: i64,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: if e.is_input_error() { 1 } else { 2 }, message: e.to_string() }
    }
}

fn read_file(report: &mut Report, path: &PathBuf) -> Result<String, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure {
        code: 1,
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    report.record_input(&path.display().to_string(), &text);
    Ok(text)
}

fn load_form(report: &mut Report, path: &PathBuf) -> Result<QuadraticForm, Failure> {
    let text = read_file(report, path)?;
    Ok(formats::load_form(&path.display().to_string(), &text)?)
}

fn load_subspace_for(
    report: &mut Report,
    path: &PathBuf,
    field: &quadrics_core::exact::field::Field,
) -> Result<Subspace, Failure> {
    let text = read_file(report, path)?;
    Ok(formats::load_subspace(&path.display().to_string(), &text, field)?)
}

fn load_bundle(
    report: &mut Report,
    path: &PathBuf,
) -> Result<quadrics_core::bundles::QuadricBundleData, Failure> {
    let text = read_file(report, path)?;
    Ok(formats::load_bundle(&path.display().to_string(), &text)?)
}

fn run(cli: Cli) -> Result<Report, Failure> {
    let command = match &cli.cmd {
        Cmd::Corank { .. } => "corank",
        Cmd::Reduce { .. } => "reduce",
        Cmd::CliffordIdeal { .. } => "clifford-ideal",
        Cmd::SpinorMf { .. } => "spinor-mf",
        Cmd::MfEquiv { .. } => "mf-equiv",
        Cmd::DiscUniversal { .. } => "disc-universal",
        Cmd::DiscBundle { .. } => "disc-bundle",
        Cmd::Cubic4Cover { .. } => "cubic4-cover",
        Cmd::Cubic4K3 { .. } => "cubic4-k3",
        Cmd::FanoEnum { .. } => "fano-enum",
        Cmd::FanoComponents { .. } => "fano-components",
        Cmd::CoverSplit { .. } => "cover-split",
        Cmd::LineClass { .. } => "line-class",
    };
    let mut report = Report::new(command, cli.seed);
    match cli.cmd {
        Cmd::Corank { form, bundle, point } => match (form, bundle) {
            (Some(f), None) => {
                let q = load_form(&mut report, &f)?;
                commands::cmd_corank_form(&mut report, &q);
            }
            (None, Some(b)) => {
                let bundle = load_bundle(&mut report, &b)?;
                let spec = point.ok_or(Failure {
                    code: 1,
                    message: "--bundle needs --point".to_string(),
                })?;
                let pt: Vec<Scalar> = spec
                    .split(',')
                    .map(|s| formats::parse_scalar(s.trim(), &bundle.field))
                    .collect::<Result<_, _>>()?;
                commands::cmd_corank_bundle(&mut report, &bundle, &pt)?;
            }
            _ => {
                return Err(Failure {
                    code: 1,
                    message: "pass exactly one of --form or --bundle".to_string(),
                })
            }
        },
        Cmd::Reduce { form, bundle, subspace } => match (form, bundle) {
            (Some(f), None) => {
                let q = load_form(&mut report, &f)?;
                let w = load_subspace_for(&mut report, &subspace, &q.field)?;
                commands::cmd_reduce_form(&mut report, &q, &w)?;
            }
            (None, Some(b)) => {
                let bundle = load_bundle(&mut report, &b)?;
                let w = load_subspace_for(&mut report, &subspace, &bundle.field)?;
                commands::cmd_reduce_bundle(&mut report, &bundle, &w)?;
            }
            _ => {
                return Err(Failure {
                    code: 1,
                    message: "pass exactly one of --form or --bundle".to_string(),
                })
            }
        },
        Cmd::CliffordIdeal { form, subspace, degree } => {
            let q = load_form(&mut report, &form)?;
            let w = load_subspace_for(&mut report, &subspace, &q.field)?;
            commands::cmd_clifford_ideal(&mut report, &q, &w, degree)?;
        }
        Cmd::SpinorMf { form, subspace, degree } => {
            let q = load_form(&mut report, &form)?;
            let w = load_subspace_for(&mut report, &subspace, &q.field)?;
            commands::cmd_spinor_mf(&mut report, &q, &w, degree)?;
        }
        Cmd::MfEquiv { form, subspace, degree, subspace2, degree2, dual } => {
            let q = load_form(&mut report, &form)?;
            let w1 = load_subspace_for(&mut report, &subspace, &q.field)?;
            let w2 = load_subspace_for(&mut report, &subspace2, &q.field)?;
            let d2 = degree2.unwrap_or(degree);
            commands::cmd_mf_equiv(&mut report, &q, &w1, degree, &w2, d2, dual, cli.seed)?;
        }
        Cmd::DiscUniversal { rank } => {
            commands::cmd_disc_universal(&mut report, rank)?;
        }
        Cmd::DiscBundle { bundle } => {
            let b = load_bundle(&mut report, &bundle)?;
            commands::cmd_disc_bundle(&mut report, &b)?;
        }
        Cmd::Cubic4Cover { cubic } => {
            let text = read_file(&mut report, &cubic)?;
            let (field, f) = formats::load_cubic(&cubic.display().to_string(), &text)?;
            commands::cmd_cubic4_cover(&mut report, &field, &f)?;
        }
        Cmd::Cubic4K3 { cubic } => {
            let text = read_file(&mut report, &cubic)?;
            let (field, f) = formats::load_cubic(&cubic.display().to_string(), &text)?;
            commands::cmd_cubic4_k3(&mut report, &field, &f)?;
        }
        Cmd::FanoEnum { form, dim } => {
            let q = load_form(&mut report, &form)?;
            commands::cmd_fano_enum(&mut report, &q, dim)?;
        }
        Cmd::FanoComponents { form, dim } => {
            let q = load_form(&mut report, &form)?;
            commands::cmd_fano_components(&mut report, &q, dim)?;
        }
        Cmd::CoverSplit { form } => {
            let q = load_form(&mut report, &form)?;
            commands::cmd_cover_split(&mut report, &q)?;
        }
        Cmd::LineClass { form, subspace, subspace2, degree } => {
            let q = load_form(&mut report, &form)?;
            let w = load_subspace_for(&mut report, &subspace, &q.field)?;
            let w2 = match subspace2 {
                Some(p) => Some(load_subspace_for(&mut report, &p, &q.field)?),
                None => None,
            };
            commands::cmd_line_class(&mut report, &q, &w, w2.as_ref(), degree, cli.seed)?;
        }
    }
    Ok(report)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprintln!("{e}");
            return ExitCode::from(1);
        }
    };
    let json = cli.json;
    match run(cli) {
        Ok(report) => {
            if json {
                println!("{}", serde_json::to_string_pretty(&report.to_json()).expect("json"));
            } else {
                print!("{}", report.render_text());
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
