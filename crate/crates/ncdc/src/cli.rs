//! The `nc` command line: one subcommand per construction. Exit codes:
//! 0 on PASS/success, 1 on FAIL or a counterexample, 2 on usage or
//! parse errors.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::cartan::{
    action_pairing_identity, roundtrip_calculus, roundtrip_pair, DEFAULT_DEGREE, DEFAULT_SEED,
    DEFAULT_TRIALS,
};
use crate::error::Result;
use crate::model::{self, emit, ModelFile};
use crate::report::{Report, Status};

#[derive(Parser)]
#[command(
    name = "nc",
    version,
    about = "Exact first-order differential calculi and Cartan pairs on presented algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct TrialOpts {
    /// Number of randomized trials.
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    trials: usize,
    /// Degree bound for randomized inputs.
    #[arg(long, default_value_t = DEFAULT_DEGREE)]
    degree: usize,
    /// Seed for the deterministic trial stream.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Args)]
struct ReportOpts {
    /// Print tab-separated machine lines instead of the human report.
    #[arg(long)]
    machine: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a model: confluence, bimodule and calculus consistency.
    Check {
        file: PathBuf,
        #[command(flatten)]
        report: ReportOpts,
    },
    /// Parse a model file and print its canonical form.
    Emit { file: PathBuf },
    /// Apply the differential to an expression.
    D { file: PathBuf, expr: String },
    /// Apply a partial derivative: the action of a dual element.
    Partial {
        file: PathBuf,
        /// Dual element, e.g. `dx` or `( 2 x ).dx + ( 1 ).dy`.
        along: String,
        /// Algebra expression to differentiate.
        expr: String,
    },
    /// Evaluate the canonical pairing of a dual element and a module
    /// element.
    PairEval {
        file: PathBuf,
        dual: String,
        element: String,
    },
    /// Check the right Cartan pair axioms on the model's pair.
    CartanCheck {
        file: PathBuf,
        #[command(flatten)]
        trials: TrialOpts,
        #[command(flatten)]
        report: ReportOpts,
    },
    /// Check the left Cartan pair axioms on the mirrored pair.
    LeftCheck {
        file: PathBuf,
        #[command(flatten)]
        trials: TrialOpts,
        #[command(flatten)]
        report: ReportOpts,
    },
    /// Reconstruct the calculus from the model's pair and print the
    /// differential on the generators.
    FromPair { file: PathBuf },
    /// Verify both directions of the calculus/pair correspondence.
    Roundtrip {
        file: PathBuf,
        #[command(flatten)]
        trials: TrialOpts,
        #[command(flatten)]
        report: ReportOpts,
    },
    /// Bounded faithfulness: solve for the kernel of the action.
    Faithful {
        file: PathBuf,
        /// Degree bound for the kernel coefficients.
        #[arg(long, default_value_t = DEFAULT_DEGREE)]
        degree: usize,
        #[command(flatten)]
        report: ReportOpts,
    },
    /// Bounded spanned-by-differentials test.
    Spans {
        file: PathBuf,
        /// Degree bound for the spanning words and coefficients.
        #[arg(long, default_value_t = 0)]
        degree: usize,
        #[command(flatten)]
        report: ReportOpts,
    },
    /// Print the mirror model: the opposite algebra and bimodule, with
    /// the pair data translated.
    Mirror { file: PathBuf },
}

/// Run with the process arguments and return the exit code.
pub fn run_from_env() -> i32 {
    run(std::env::args_os())
}

/// Run the CLI on the given arguments and return the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn load(path: &Path) -> Result<ModelFile> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        crate::error::Error::invalid(format!("cannot read {}: {e}", path.display()))
    })?;
    model::parse(&text)
}

fn finish(report: &Report, machine: bool) -> i32 {
    if machine {
        print!("{}", report.machine());
    } else {
        print!("{}", report.human());
    }
    match report.verdict() {
        Status::Pass => 0,
        _ => 1,
    }
}

fn dispatch(command: Command) -> Result<i32> {
    match command {
        Command::Check { file, report } => {
            let model = load(&file)?;
            let mut out = Report::new();
            out.extend(model.algebra.check());
            if let Some(m) = &model.bimodule {
                out.extend(m.check());
            }
            if model.differential.is_some() {
                out.extend(model.calculus()?.check());
            }
            if model.action.is_some() {
                // Deterministic rule compatibility only; the randomized
                // axiom suite lives under `cartan-check`.
                out.extend(model.pair()?.check_rule_compatibility());
            }
            Ok(finish(&out, report.machine))
        }
        Command::Emit { file } => {
            let model = load(&file)?;
            print!("{}", emit::emit_model(&model));
            Ok(0)
        }
        Command::D { file, expr } => {
            let model = load(&file)?;
            let calculus = model.calculus()?;
            let e = model::parse_alg_expr(&expr, calculus.algebra())?;
            let value = calculus.diff(&calculus.algebra().nf(&e));
            println!("{}", emit::emit_bim(calculus.bimodule(), &value));
            Ok(0)
        }
        Command::Partial { file, along, expr } => {
            let model = load(&file)?;
            let pair = model.pair()?;
            let x = model::parse_dual_expr(&along, pair.module())?;
            let f = model::parse_alg_expr(&expr, pair.algebra())?;
            let value = pair.action_apply(&x, &f);
            println!("{}", emit::emit_alg(pair.algebra(), &value));
            Ok(0)
        }
        Command::PairEval {
            file,
            dual,
            element,
        } => {
            let model = load(&file)?;
            let m = model.bimodule()?;
            let x = model::parse_dual_expr(&dual, m)?;
            let v = model::parse_mod_expr(&element, m)?;
            let value = crate::dual::pair(m, &x, &v);
            println!("{}", emit::emit_alg(m.algebra(), &value));
            Ok(0)
        }
        Command::CartanCheck {
            file,
            trials,
            report,
        } => {
            let model = load(&file)?;
            let pair = model.pair()?;
            let out = pair.check_axioms(trials.trials, trials.degree, trials.seed);
            Ok(finish(&out, report.machine))
        }
        Command::LeftCheck {
            file,
            trials,
            report,
        } => {
            let model = load(&file)?;
            let left = model.pair()?.mirror()?;
            let out = left.check_axioms(trials.trials, trials.degree, trials.seed);
            Ok(finish(&out, report.machine))
        }
        Command::FromPair { file } => {
            let model = load(&file)?;
            let pair = model.pair()?;
            let calculus = pair.to_calculus();
            let p = calculus.algebra();
            for g in 0..p.n_generators() {
                let gid = crate::algebra::GenId(g);
                println!(
                    "d: {} = {}",
                    p.name(gid),
                    emit::emit_bim(calculus.bimodule(), calculus.differential().on_gen(gid))
                );
            }
            Ok(0)
        }
        Command::Roundtrip {
            file,
            trials,
            report,
        } => {
            let model = load(&file)?;
            let mut out = Report::new();
            if model.differential.is_some() {
                let calculus = model.calculus()?;
                out.extend(roundtrip_calculus(
                    &calculus,
                    trials.trials,
                    trials.degree,
                    trials.seed,
                ));
                out.extend(action_pairing_identity(
                    &calculus,
                    trials.trials,
                    trials.degree,
                    trials.seed,
                ));
            }
            let pair = model.pair()?;
            out.extend(roundtrip_pair(
                &pair,
                trials.trials,
                trials.degree,
                trials.seed,
            ));
            Ok(finish(&out, report.machine))
        }
        Command::Faithful {
            file,
            degree,
            report,
        } => {
            let model = load(&file)?;
            let pair = model.pair()?;
            let kernel = pair.faithful_bounded(degree);
            let out = kernel.to_report(pair.module());
            Ok(finish(&out, report.machine))
        }
        Command::Spans {
            file,
            degree,
            report,
        } => {
            let model = load(&file)?;
            let calculus = model.calculus()?;
            let out = calculus.spans_check(degree).to_report(calculus.bimodule());
            Ok(finish(&out, report.machine))
        }
        Command::Mirror { file } => {
            let model = load(&file)?;
            let mirrored_bimodule = match &model.bimodule {
                Some(m) => Some(m.mirror()?),
                None => None,
            };
            // Differentials and action matrices are chiral: their mirror
            // images are left-handed objects with no file section, so
            // only the presentations carry over.
            if model.differential.is_some() || model.action.is_some() {
                eprintln!(
                    "note: `d:`/`rho:` sections describe one-sided data and are not mirrored; \
                     use `left-check` on the original file for the mirrored pair"
                );
            }
            let mirrored = ModelFile {
                algebra: model.algebra.mirror()?,
                bimodule: mirrored_bimodule,
                differential: None,
                action: None,
                decl_lines: Default::default(),
            };
            print!("{}", emit::emit_model(&mirrored));
            Ok(0)
        }
    }
}
