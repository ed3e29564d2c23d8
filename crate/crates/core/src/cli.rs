//! The `oscq` command line: table generation, classification of r-matrices
//! and the verification suites.
//!
//! Exit codes: 0 when everything asserted passes, 1 on a mismatch or failed
//! check, 2 on a usage error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::algebra::expr::parse_coefficient;
use crate::algebra::render::{render, render_wedge, Style};
use crate::algebra::uea::{Generator, LATEX_NAMES, NAMES};
use crate::bialgebra::{self, classify, cocommutator, ClassifyError, Flavor, Kind, RMatrixSkew};
use crate::coeff::{Coefficient, Param};
use crate::report::{self, Format, TableEntry};
use crate::suite::{self, Target};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "oscq", version, about = "Exact checks for the oscillator Lie bialgebras and their quantizations")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Regenerate a reference table and diff it against the bundled fixture.
    Tables {
        #[arg(long, value_enum)]
        which: Which,
        /// Expansion order for coproducts given in matrix form.
        #[arg(long, default_value_t = 6, env = "OSCQ_ORDER")]
        order: i32,
    },
    /// Classify a skew r-matrix given by its six coefficients on
    /// `A∧A+, A∧A-, A∧M, A+∧A-, A+∧M, A-∧M`.
    Classify {
        /// Six comma-separated rationals or parameter expressions.
        #[arg(long, allow_hyphen_values = true)]
        r: String,
        /// Parameters known to be nonzero. By default every parameter that
        /// appears is taken to be generic (nonzero).
        #[arg(long, value_delimiter = ',')]
        nonzero: Option<Vec<String>>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum, default_value_t = Target::All)]
        target: Target,
        /// Restrict to one family label (e.g. `Uz`, `IIn`, `FunIIs`, `I+n`).
        #[arg(long)]
        family: Option<String>,
        /// Truncation order in the deformation parameters.
        #[arg(long, default_value_t = 6, env = "OSCQ_ORDER")]
        order: i32,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    #[value(name = "I")]
    One,
    #[value(name = "II")]
    Two,
    #[value(name = "III")]
    Three,
}

/// The outcome of a command: rendered output and an exit code.
#[derive(Debug)]
pub struct Outcome {
    pub output: String,
    pub code: i32,
}

pub fn tables(which: Which, order: i32, format: Format) -> Outcome {
    let rows: Vec<TableEntry> = match which {
        Which::One => bialgebra::table_one(),
        Which::Two => crate::poisson::table_two(),
        Which::Three => crate::lm::table_three(order),
    };
    let ok = rows.iter().all(|r| r.matches);
    Outcome { output: report::table(&rows, format), code: if ok { EXIT_OK } else { EXIT_MISMATCH } }
}

#[derive(Debug, Serialize)]
pub struct ClassifyOutput {
    pub r: String,
    pub r_latex: String,
    /// `trivial`, `classified` or `not_coboundary`.
    pub result: String,
    pub kind: Option<Kind>,
    pub flavor: Option<Flavor>,
    pub constraints: Vec<(String, String)>,
    pub cocommutators: Vec<(String, String)>,
    pub summary: String,
}

fn kind_text(k: Kind) -> &'static str {
    match k {
        Kind::Iplus => "Type I+",
        Kind::Iminus => "Type I-",
        Kind::II => "Type II",
    }
}

fn flavor_text(f: Flavor) -> &'static str {
    match f {
        Flavor::Standard => "standard",
        Flavor::Nonstandard => "non-standard",
    }
}

/// Parses six comma-separated coefficients.
pub fn parse_r(s: &str) -> Result<RMatrixSkew, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 6 {
        return Err(format!("expected six coefficients, got {}", parts.len()));
    }
    let mut c: [Coefficient; 6] = Default::default();
    for (slot, p) in parts.iter().enumerate() {
        c[slot] = parse_coefficient(p).map_err(|e| format!("coefficient {}: {e}", slot + 1))?;
    }
    Ok(RMatrixSkew::new(c))
}

fn params_of(r: &RMatrixSkew) -> Vec<Param> {
    let mut out: Vec<Param> = Vec::new();
    for c in &r.c {
        for poly in [c.numer(), c.denom()] {
            for (i, used) in poly.vars().iter().enumerate() {
                if *used && !out.iter().any(|p| p.index() == i) {
                    out.push(Param::from_index(i));
                }
            }
        }
    }
    out
}

fn wedge_text(t: &crate::algebra::uea::Uea2) -> String {
    render_wedge(t, &NAMES, Style::Text).unwrap_or_else(|| render(t, &NAMES, Style::Text))
}

pub fn classify_r(r: &RMatrixSkew, nonzero: Option<&[Param]>) -> Result<ClassifyOutput, ClassifyError> {
    let declared = nonzero.map(<[Param]>::to_vec).unwrap_or_else(|| params_of(r));
    let cocommutators: Vec<(String, String)> =
        Generator::ALL.iter().map(|&g| (format!("δ({g})"), wedge_text(&cocommutator(r, g)))).collect();
    let t = r.as_tensor();
    let r_text = wedge_text(&t);
    let r_latex = render_wedge(&t, &LATEX_NAMES, Style::Latex).unwrap_or_else(|| render(&t, &LATEX_NAMES, Style::Latex));
    let trivial = Generator::ALL.iter().all(|&g| cocommutator(r, g).is_zero());
    match classify(r, &declared) {
        Ok(c) => {
            let summary = if trivial {
                "trivial bialgebra (all δ = 0)".to_string()
            } else {
                format!("{} {}", kind_text(c.kind), flavor_text(c.flavor))
            };
            Ok(ClassifyOutput {
                r: r_text,
                r_latex,
                result: if trivial { "trivial" } else { "classified" }.into(),
                kind: Some(c.kind),
                flavor: Some(c.flavor),
                constraints: c.constraints.iter().map(|(n, v)| (n.clone(), v.to_string())).collect(),
                cocommutators,
                summary,
            })
        }
        Err(ClassifyError::NotCoboundary(violated)) => {
            let summary = format!(
                "not a coboundary bialgebra: violated {}",
                violated.iter().map(|(n, v)| format!("{n} = {v}")).collect::<Vec<_>>().join(", ")
            );
            Ok(ClassifyOutput {
                r: r_text,
                r_latex,
                result: "not_coboundary".into(),
                kind: None,
                flavor: None,
                constraints: violated.iter().map(|(n, v)| (n.clone(), v.to_string())).collect(),
                cocommutators: Vec::new(),
                summary,
            })
        }
        Err(e) => Err(e),
    }
}

fn render_classification(c: &ClassifyOutput, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(c).unwrap(),
        Format::Text => {
            let mut out = format!("{}\nr = {}\n", c.summary, c.r);
            for (n, v) in &c.constraints {
                out.push_str(&format!("  {n} = {v}\n"));
            }
            for (n, v) in &c.cocommutators {
                out.push_str(&format!("  {n} = {v}\n"));
            }
            out
        }
        Format::Latex => {
            let mut out = format!("% {}\n\\begin{{align*}}\nr &= {}", c.summary, c.r_latex);
            for (n, v) in &c.constraints {
                out.push_str(&format!(" \\\\\n{n} &= {v}"));
            }
            out.push_str("\n\\end{align*}\n");
            out
        }
    }
}

fn classify_command(r: &str, nonzero: Option<&[String]>, format: Format) -> Outcome {
    let parsed = match parse_r(r) {
        Ok(p) => p,
        Err(e) => return Outcome { output: format!("error: {e}\n"), code: EXIT_USAGE },
    };
    let declared: Option<Vec<Param>> = nonzero.map(|v| v.iter().map(|s| Param::new(s.trim())).collect());
    match classify_r(&parsed, declared.as_deref()) {
        Ok(c) => Outcome { output: render_classification(&c, format), code: EXIT_OK },
        Err(e) => Outcome { output: format!("{e}\n"), code: EXIT_MISMATCH },
    }
}

pub fn verify(target: Target, family: Option<&str>, order: i32, format: Format) -> Outcome {
    match suite::run(target, family, order) {
        Ok(rows) => {
            let code = if suite::all_pass(&rows) { EXIT_OK } else { EXIT_MISMATCH };
            Outcome { output: report::checks(&rows, format), code }
        }
        Err(e) => Outcome { output: format!("error: {e}\n"), code: EXIT_USAGE },
    }
}

/// Runs a parsed command line.
pub fn execute(cli: &Cli) -> Outcome {
    let f = cli.common.format;
    match &cli.command {
        Command::Tables { which, order } => tables(*which, *order, f),
        Command::Classify { r, nonzero } => classify_command(r, nonzero.as_deref(), f),
        Command::Verify { target, family, order } => verify(*target, family.as_deref(), *order, f),
    }
}

/// Parses `args`, runs the command and writes its output. Returns the exit
/// code.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    if let Some(j) = cli.common.jobs {
        if j == 0 {
            eprintln!("error: --jobs must be positive");
            return EXIT_USAGE;
        }
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j).build_global();
    }
    let outcome = execute(&cli);
    let written = match &cli.common.out {
        Some(path) => std::fs::write(path, &outcome.output),
        None => std::io::stdout().write_all(outcome.output.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return EXIT_USAGE;
    }
    outcome.code
}
