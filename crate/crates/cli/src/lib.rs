//! The `foxforge` command line: presentations, Fox calculus, Alexander
//! polynomials, automorphism checks and Scheuneman invariants.
//!
//! Exit codes: 0 success, 1 domain error or failed check, 2 usage error,
//! 3 inconclusive comparison.

mod groups;
mod input;
mod lie;
pub mod reference;
mod reproduce;
mod verify;

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] foxforge_core::Error),

    #[error("cannot read `{path}`: {source}")]
    Read {
        path: String,
        #[source]
        source: io::Error,
    },

    #[error("{0}")]
    Input(String),

    #[error("cannot write output: {0}")]
    Output(#[from] io::Error),

    #[error("cannot encode JSON: {0}")]
    Json(#[from] serde_json::Error),
}

/// How a successfully executed command ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Success,
    /// A check ran and did not hold; the message goes to standard error.
    Failed(String),
    Inconclusive,
}

impl Status {
    fn from_verdict(v: foxforge_core::alexander::Verdict) -> Self {
        match v {
            foxforge_core::alexander::Verdict::Distinguished => Status::Success,
            foxforge_core::alexander::Verdict::Inconclusive => Status::Inconclusive,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "foxforge", version, about = "Fox calculus, Alexander polynomials and Scheuneman invariants")]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a presentation in canonical form.
    Present(PresArgs),
    /// Fox derivatives of every relator.
    Fox(FoxArgs),
    /// Alexander matrix and polynomial.
    Alexander(AlexanderArgs),
    /// Check relators, braid membership or centrality for automorphisms.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Scheuneman invariant, Hessian and signature of class-2 algebras or cubic forms.
    Scheuneman(ScheunemanArgs),
    /// Recompute a named reference result and compare it with the stated values.
    Reproduce(ReproduceArgs),
}

#[derive(Debug, Args)]
struct PresArgs {
    /// Presentation file or `builtin:NAME[:N]`.
    #[arg(long)]
    pres: String,
}

#[derive(Debug, Args)]
struct FoxArgs {
    #[arg(long)]
    pres: String,
    /// Also print `g ↦ t^k` specializations; unlisted generators get weight 1.
    #[arg(long)]
    specialize: bool,
    /// Weights as `g=k,...`.
    #[arg(long)]
    weights: Option<String>,
}

#[derive(Debug, Args)]
struct AlexanderArgs {
    #[arg(long)]
    pres: String,
    /// Weights as `g=k,...`; unlisted generators get weight 1.
    #[arg(long)]
    weights: Option<String>,
    /// Show a trial factorization into small cyclotomic-style factors.
    #[arg(long)]
    factored_hint: bool,
    /// Second presentation to compare against.
    #[arg(long)]
    against: Option<String>,
    /// Weights for the second presentation.
    #[arg(long, requires = "against")]
    against_weights: Option<String>,
}

#[derive(Debug, Subcommand)]
enum VerifyCommand {
    /// Evaluate every relator under an assignment of automorphisms.
    Relators(RelatorsArgs),
    /// Artin's conditions for a single automorphism.
    Braid(BraidArgs),
    /// Whether a product of automorphisms commutes with each listed one.
    Center(CenterArgs),
}

#[derive(Debug, Args)]
struct RelatorsArgs {
    #[arg(long)]
    pres: String,
    /// `auto-eps`, `auto-a`, `auto-sigma`, or `g=spec,...`.
    #[arg(long)]
    assign: String,
    /// Inverses as `g=spec,...`, overriding those implied by the specs.
    #[arg(long)]
    inverses: Option<String>,
}

#[derive(Debug, Args)]
struct BraidArgs {
    #[arg(long)]
    autom: String,
}

#[derive(Debug, Args)]
struct CenterArgs {
    /// Product `spec*spec*...`, applied left to right.
    #[arg(long)]
    candidate: String,
    /// `spec,spec,...`, or `all-eps:N` / `all-a:N` for every generator of the family.
    #[arg(long)]
    against: String,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("mode").required(true).args(["alpha", "form", "compare", "compare_forms"])))]
struct ScheunemanArgs {
    /// Bracket triple, e.g. `a1=[t2,t3];a2=[t1,t3];a3=[t1,t2]`.
    #[arg(long)]
    alpha: Option<String>,
    /// A polynomial in `y1..yN`, analysed as a cubic form.
    #[arg(long)]
    form: Option<String>,
    /// Two bracket triples to compare.
    #[arg(long, num_args = 2, value_names = ["ALPHA1", "ALPHA2"])]
    compare: Option<Vec<String>>,
    /// Two forms to compare.
    #[arg(long, num_args = 2, value_names = ["FORM1", "FORM2"])]
    compare_forms: Option<Vec<String>>,
    /// Number of variables for `--form` and `--compare-forms`.
    #[arg(long, default_value_t = 6)]
    vars: usize,
}

#[derive(Debug, Args)]
struct ReproduceArgs {
    target: Target,
    /// Weights for `thm2.1`, as `g=k,...` over the generators of either group.
    #[arg(long)]
    weights: Option<String>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Target {
    /// Alexander polynomials of the two five-generator groups.
    #[value(name = "thm2.1")]
    Thm21,
    /// Invariants of the three twelve-dimensional algebras.
    #[value(name = "sec3.3")]
    Sec33,
    /// Embedding of the poison group of F2.
    #[value(name = "prop3.2")]
    Prop32,
}

/// Shared output sink for command implementations.
pub(crate) struct Out<'a> {
    pub json: bool,
    pub w: &'a mut dyn Write,
}

impl Out<'_> {
    pub fn json<T: Serialize>(&mut self, value: &T) -> Result<(), CliError> {
        serde_json::to_writer_pretty(&mut *self.w, value)?;
        writeln!(self.w)?;
        Ok(())
    }
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                return 2;
            }
            let _ = write!(out, "{rendered}");
            return 0;
        }
    };
    let mut sink = Out { json: cli.json, w: out };
    match dispatch(cli.command, &mut sink) {
        Ok(Status::Success) => 0,
        Ok(Status::Inconclusive) => 3,
        Ok(Status::Failed(message)) => {
            let _ = writeln!(err, "foxforge: {message}");
            1
        }
        Err(e) => {
            let _ = writeln!(err, "foxforge: error: {e}");
            1
        }
    }
}

fn dispatch(command: Command, out: &mut Out<'_>) -> Result<Status, CliError> {
    match command {
        Command::Present(a) => groups::present(&a.pres, out),
        Command::Fox(a) => groups::fox(&a.pres, a.specialize, a.weights.as_deref(), out),
        Command::Alexander(a) => groups::alexander(
            &a.pres,
            a.weights.as_deref(),
            a.factored_hint,
            a.against.as_deref().map(|s| (s, a.against_weights.as_deref())),
            out,
        ),
        Command::Verify(VerifyCommand::Relators(a)) => verify::relators(&a.pres, &a.assign, a.inverses.as_deref(), out),
        Command::Verify(VerifyCommand::Braid(a)) => verify::braid(&a.autom, out),
        Command::Verify(VerifyCommand::Center(a)) => verify::center(&a.candidate, &a.against, out),
        Command::Scheuneman(a) => {
            if let Some(alpha) = a.alpha {
                lie::alpha(&alpha, out)
            } else if let Some(form) = a.form {
                lie::form(&form, a.vars, out)
            } else if let Some(pair) = a.compare {
                lie::compare(&pair[0], &pair[1], out)
            } else {
                let pair = a.compare_forms.unwrap_or_default();
                lie::compare_forms(&pair[0], &pair[1], a.vars, out)
            }
        }
        Command::Reproduce(a) => match a.target {
            Target::Thm21 => reproduce::thm21(a.weights.as_deref(), out),
            Target::Sec33 => reproduce::sec33(out),
            Target::Prop32 => reproduce::prop32(out),
        },
    }
}
