//! Check results and table rows, rendered as text, JSON or LaTeX.

use std::fmt;
use std::time::Instant;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A probe of a stated intermediate claim that did not hold; not an
    /// asserted identity.
    Finding,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn ok(self) -> bool {
        self == Status::Pass
    }

    /// Anything but an asserted failure.
    pub fn acceptable(self) -> bool {
        self != Status::Fail
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Finding => "FINDING",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub family: String,
    pub check: String,
    pub order: Option<i32>,
    pub status: Status,
    pub residuals: Vec<String>,
    /// Seconds.
    pub wall_time: f64,
}

impl CheckResult {
    /// Runs `f`, which returns the list of nonvanishing residuals.
    pub fn run(family: impl Into<String>, check: impl Into<String>, order: Option<i32>, f: impl FnOnce() -> Vec<String>) -> Self {
        let t = Instant::now();
        let residuals = f();
        CheckResult {
            family: family.into(),
            check: check.into(),
            order,
            status: Status::from_bool(residuals.is_empty()),
            residuals,
            wall_time: t.elapsed().as_secs_f64(),
        }
    }

    /// As [`CheckResult::run`] for a probe: nonvanishing residuals are a
    /// finding rather than a failure.
    pub fn probe(family: impl Into<String>, check: impl Into<String>, order: Option<i32>, f: impl FnOnce() -> Vec<String>) -> Self {
        let mut r = CheckResult::run(family, check, order, f);
        if r.status == Status::Fail {
            r.status = Status::Finding;
        }
        r
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TableEntry {
    pub table: String,
    pub family: String,
    pub entry: String,
    pub expected: String,
    pub computed: String,
    pub latex: String,
    pub matches: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Latex,
}

pub fn checks(rows: &[CheckResult], format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(rows).unwrap(),
        Format::Text => {
            let mut out = String::new();
            for r in rows {
                let order = r.order.map(|o| format!(" (order {o})")).unwrap_or_default();
                out.push_str(&format!("{:<7} {:<6} {}{} [{:.2}s]\n", r.status, r.family, r.check, order, r.wall_time));
                for res in &r.residuals {
                    out.push_str(&format!("      residual: {res}\n"));
                }
            }
            out
        }
        Format::Latex => {
            let mut out = String::from("\\begin{tabular}{llll}\nfamily & check & order & status \\\\\n\\hline\n");
            for r in rows {
                let order = r.order.map(|o| o.to_string()).unwrap_or_else(|| "--".into());
                out.push_str(&format!("{} & {} & {} & {} \\\\\n", r.family, r.check, order, r.status));
            }
            out.push_str("\\end{tabular}\n");
            out
        }
    }
}

fn latex_entry(entry: &str) -> String {
    let mut out = entry.replace('{', "\\{").replace('}', "\\}").replace('δ', "\\delta").replace('Δ', "\\Delta").replace('ν', "\\nu");
    for (plain, tex) in [("Ap", "A_+"), ("Am", "A_-"), ("theta", "\\theta"), ("a_p", "a_+"), ("a_m", "a_-")] {
        out = out.replace(plain, tex);
    }
    out
}

pub fn table(rows: &[TableEntry], format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(rows).unwrap(),
        Format::Text => {
            let mut out = String::new();
            for r in rows {
                let mark = if r.matches { "ok" } else { "MISMATCH" };
                out.push_str(&format!("[{}] {:<4} {:<14} {}\n", mark, r.family, r.entry, r.computed));
                if !r.matches {
                    out.push_str(&format!("      expected {}\n", r.expected));
                }
            }
            out
        }
        Format::Latex => {
            let mut out = String::from("\\begin{tabular}{lll}\n\\hline\n");
            for r in rows {
                out.push_str(&format!("{} & ${}$ & ${}$ \\\\\n", r.family, latex_entry(&r.entry), r.latex));
            }
            out.push_str("\\hline\n\\end{tabular}\n");
            out
        }
    }
}
