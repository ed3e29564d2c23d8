//! Verification targets: named groups of checks over the quantized
//! families, run in parallel and reported in a fixed order.

use rayon::prelude::*;
use thiserror::Error;

use crate::bialgebra::Family;
use crate::hopf::families::QuantumFamily;
use crate::hopf::fun::{self, FunFamily};
use crate::lm::{counit_defects, first_order_defects, lm_coproduct, table_three, LMSpec};
use crate::report::CheckResult;
use crate::rmatrix::rep::{self, PrimedReading};
use crate::rmatrix::{self, conjugation, frt};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, serde::Serialize)]
pub enum Target {
    /// LM coproducts of the six bialgebra families.
    Prop1,
    /// Hopf structure of the type I+ non-standard quantum algebra `U_z`,
    /// with its universal R-matrix.
    Prop2,
    /// Quantum oscillator group of `U_z` and its FRT relations.
    Prop3,
    /// Hopf structure of the type II non-standard quantum algebra.
    Prop4,
    /// Universal R-matrix, quantum group and FRT relations of type II
    /// non-standard.
    Prop5,
    /// Standard type II: Hopf structure, R-matrix, quantum group and FRT.
    Prop6,
    /// The four conjugation identities behind the type II non-standard
    /// intertwining property.
    #[value(name = "appendixA")]
    AppendixA,
    All,
}

impl Target {
    pub const EACH: [Target; 7] =
        [Target::Prop1, Target::Prop2, Target::Prop3, Target::Prop4, Target::Prop5, Target::Prop6, Target::AppendixA];

    /// Family labels the target reports on.
    pub fn families(self) -> Vec<&'static str> {
        match self {
            Target::Prop1 => Family::ALL.iter().map(|f| f.key()).collect(),
            Target::Prop2 => vec!["Uz"],
            Target::Prop3 => vec!["FunUz"],
            Target::Prop4 => vec!["IIn"],
            Target::Prop5 => vec!["IIn", "FunIIn"],
            Target::Prop6 => vec!["IIs", "FunIIs"],
            Target::AppendixA => vec!["IIn"],
            Target::All => {
                let mut v: Vec<&str> = Target::EACH.iter().flat_map(|t| t.families()).collect();
                v.sort();
                v.dedup();
                v
            }
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SuiteError {
    #[error("family {family} has a coproduct only; target {target} needs its algebra relations")]
    UnsupportedFamily { family: String, target: String },
    #[error("unknown family {0}")]
    UnknownFamily(String),
    #[error("order must be non-negative, got {0}")]
    NegativeOrder(i32),
}

fn target_name(t: Target) -> String {
    clap::ValueEnum::to_possible_value(&t).map(|v| v.get_name().to_string()).unwrap_or_default()
}

fn known_family(s: &str) -> bool {
    Family::parse(s).is_some()
        || QuantumFamily::parse(s).is_some()
        || FunFamily::ALL.iter().any(|f| f.key().eq_ignore_ascii_case(s))
}

/// LM coproduct checks for one bialgebra family.
pub fn lm_checks(f: Family, order: i32) -> Vec<CheckResult> {
    let spec = LMSpec::for_family(f);
    let r = f.r();
    let key = f.key();
    let rows: Vec<_> = table_three(order).into_iter().filter(|e| e.family == key).collect();
    vec![
        CheckResult::run(key, "LM data", None, || spec.validate().err().map(|e| e.to_string()).into_iter().collect()),
        CheckResult::run(key, "counit", Some(order), || match lm_coproduct(&spec, crate::algebra::uea::oscillator_at(order)) {
            Ok(map) => counit_defects(&map),
            Err(e) => vec![e.to_string()],
        }),
        CheckResult::run(key, "first-order cocommutator", Some(1), || first_order_defects(&spec, &r)),
        CheckResult::run(key, "coproduct table", Some(order), || {
            rows.iter().filter(|e| !e.matches).map(|e| format!("{}: got {} want {}", e.entry, e.computed, e.expected)).collect()
        }),
    ]
}

/// Universal R-matrix checks for one quantized family.
pub fn r_matrix_checks(f: QuantumFamily, order: i32) -> Vec<CheckResult> {
    let h = f.build(order);
    let r = rmatrix::universal_r(f, &h.alg);
    let key = f.key();
    let o = Some(order);
    let mut v = vec![
        CheckResult::run(key, "R expansion", o, || rmatrix::expansion_defects(f, &h, &r)),
        CheckResult::run(key, "QYBE", o, || rmatrix::qybe_defects(&h, &r)),
    ];
    v.push(CheckResult::run(key, "intertwining", o, || rmatrix::intertwining_defects(&h, &r)));
    if f == QuantumFamily::Uz {
        v.push(CheckResult::run(key, "two-step conjugation", o, || rmatrix::uz_conjugation_steps(&h)));
    }
    let closed = rep::d_r_closed(f, PrimedReading::Definition);
    v.push(CheckResult::run(key, "3×3 representation", None, || rep::homomorphism_defects(&h.alg, &rep::standard_images())));
    v.push(CheckResult::run(key, "D(R) closed form", o, || {
        let got = rep::rep3_tensor(&r.expansion);
        let want = closed.truncate(order);
        if got == want {
            Vec::new()
        } else {
            vec![format!("D(R) differs by\n{}", got.sub(&want))]
        }
    }));
    v.push(CheckResult::run(key, "exact QYBE of D(R)", None, || rep::qybe_exact_defects(&closed)));
    if f == QuantumFamily::IIs {
        v.push(CheckResult::probe(key, "exact QYBE of D(R) with D(A+') = D(A)", None, || {
            rep::qybe_exact_defects(&rep::d_r_closed(f, PrimedReading::AsPrinted))
        }));
    }
    v
}

fn hopf_checks(f: QuantumFamily, order: i32) -> Vec<CheckResult> {
    f.build(order).verify(f.key())
}

fn group_checks(f: QuantumFamily, order: i32) -> Vec<CheckResult> {
    let ff = frt::fun_family(f);
    let mut v = fun::build(ff, order).verify(ff.key());
    v.extend(frt::check(f, order));
    v
}

type Job = Box<dyn Fn() -> Vec<CheckResult> + Send + Sync>;

fn jobs(target: Target, order: i32) -> Vec<Job> {
    let o = order;
    match target {
        Target::Prop1 => Family::ALL.into_iter().map(|f| Box::new(move || lm_checks(f, o)) as Job).collect(),
        Target::Prop2 => vec![
            Box::new(move || hopf_checks(QuantumFamily::Uz, o)),
            Box::new(move || r_matrix_checks(QuantumFamily::Uz, o)),
        ],
        Target::Prop3 => vec![Box::new(move || group_checks(QuantumFamily::Uz, o))],
        Target::Prop4 => vec![Box::new(move || hopf_checks(QuantumFamily::IIn, o))],
        Target::Prop5 => vec![
            Box::new(move || r_matrix_checks(QuantumFamily::IIn, o)),
            Box::new(move || group_checks(QuantumFamily::IIn, o)),
        ],
        Target::Prop6 => vec![
            Box::new(move || hopf_checks(QuantumFamily::IIs, o)),
            Box::new(move || r_matrix_checks(QuantumFamily::IIs, o)),
            Box::new(move || group_checks(QuantumFamily::IIs, o)),
        ],
        Target::AppendixA => vec![Box::new(move || conjugation::check(o))],
        Target::All => Target::EACH.into_iter().flat_map(|t| jobs(t, o)).collect(),
    }
}

/// Runs a target, optionally restricted to one family label. Reports come
/// back in a fixed order regardless of scheduling.
pub fn run(target: Target, family: Option<&str>, order: i32) -> Result<Vec<CheckResult>, SuiteError> {
    if order < 0 {
        return Err(SuiteError::NegativeOrder(order));
    }
    if let Some(fam) = family {
        if !target.families().iter().any(|k| k.eq_ignore_ascii_case(fam)) {
            return Err(if known_family(fam) {
                SuiteError::UnsupportedFamily { family: fam.to_string(), target: target_name(target) }
            } else {
                SuiteError::UnknownFamily(fam.to_string())
            });
        }
    }
    let results: Vec<Vec<CheckResult>> = jobs(target, order).par_iter().map(|j| j()).collect();
    let mut out: Vec<CheckResult> = results.into_iter().flatten().collect();
    if let Some(fam) = family {
        out.retain(|r| r.family.eq_ignore_ascii_case(fam));
    }
    Ok(out)
}

/// Whether every asserted check passed (findings do not count against).
pub fn all_pass(rows: &[CheckResult]) -> bool {
    rows.iter().all(|r| r.status.acceptable())
}
