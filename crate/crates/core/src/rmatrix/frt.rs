//! Quantum-group relations from `R T₁ T₂ = T₂ T₁ R`, with `T` the 3×3 group
//! element
//!
//! ```text
//!     | 1  a- E  m + a- a+ |
//! T = | 0  E     a+        |
//!     | 0  0     1         |
//! ```
//!
//! The commutators of the four non-constant entries are solved for
//! symbolically from the 81 entry equations, compared with the stated
//! quantum-group relations, and their order-one parts compared with the
//! Sklyanin brackets.

use std::collections::BTreeMap;

use crate::algebra::linear::{Element, LinComb};
use crate::algebra::render::{render, Style};
use crate::bialgebra::{skew_part, RMatrixSkew};
use crate::coeff::Coefficient;
use crate::hopf::families::QuantumFamily;
use crate::hopf::fun::{self, FunFamily, QuantumGroup, A_M, A_P, E, M, THETA};
use crate::poisson::{self, Coord, GroupFunction};
use crate::report::CheckResult;

use super::rep::{d_r_closed, Mat, PrimedReading};

/// Positions `(row, col)` of the non-constant entries, in a fixed order.
pub const ENTRIES: [(usize, usize); 4] = [(0, 1), (0, 2), (1, 1), (1, 2)];
pub const ENTRY_NAMES: [&str; 4] = ["T12", "T13", "T22", "T23"];

/// A product of at most two entries, by index into [`ENTRIES`];
/// `NONE` marks an empty position.
pub type Word = [u8; 2];
pub const NONE: u8 = u8::MAX;

fn entry_index(i: usize, j: usize) -> Option<usize> {
    ENTRIES.iter().position(|&e| e == (i, j))
}

/// `T_ij` as a scalar plus an optional symbol.
fn entry(i: usize, j: usize) -> (Coefficient, Option<usize>) {
    if i == j && i != 1 {
        return (Coefficient::one(), None);
    }
    match entry_index(i, j) {
        Some(k) => (Coefficient::zero(), Some(k)),
        None => (Coefficient::zero(), None),
    }
}

/// `Σ_K c_K [T_y, T_x] = rhs`, one row per entry equation, where the
/// six unknowns are the commutators of entry pairs `x < y`.
#[derive(Clone, Debug)]
struct Row {
    k: [Coefficient; 6],
    rhs: LinComb<Word>,
}

pub const PAIRS: [(usize, usize); 6] = [(1, 0), (2, 0), (3, 0), (2, 1), (3, 1), (3, 2)];

fn pair_index(hi: usize, lo: usize) -> usize {
    PAIRS.iter().position(|&p| p == (hi, lo)).unwrap()
}

fn word(a: Option<usize>, b: Option<usize>) -> Word {
    let enc = |x: Option<usize>| x.map(|v| v as u8).unwrap_or(NONE);
    match (a, b) {
        (Some(x), Some(y)) if x > y => unreachable!(),
        _ => [enc(a), enc(b)],
    }
}

/// Adds `c · T_a T_b` to a row, rewriting an out-of-order product as
/// `T_b T_a + [T_a, T_b]`.
fn add_product(row: &mut Row, c: &Coefficient, a: (usize, usize), b: (usize, usize)) {
    if c.is_zero() {
        return;
    }
    let (ca, sa) = entry(a.0, a.1);
    let (cb, sb) = entry(b.0, b.1);
    match (sa, sb) {
        (None, None) => row.rhs.add_term(word(None, None), -&(&(c * &ca) * &cb)),
        (Some(x), None) => row.rhs.add_term(word(Some(x), None), -&(c * &cb)),
        (None, Some(y)) => row.rhs.add_term(word(Some(y), None), -&(c * &ca)),
        (Some(x), Some(y)) if x <= y => row.rhs.add_term(word(Some(x), Some(y)), -c),
        (Some(x), Some(y)) => {
            row.rhs.add_term(word(Some(y), Some(x)), -c);
            let i = pair_index(x, y);
            row.k[i] = &row.k[i] + c;
        }
    }
}

/// The 81 equations of `R T₁ T₂ − T₂ T₁ R = 0`.
fn equations(r: &Mat) -> Vec<Row> {
    let mut rows = Vec::new();
    for i in 0..3 {
        for k in 0..3 {
            for j in 0..3 {
                for l in 0..3 {
                    let mut row = Row { k: std::array::from_fn(|_| Coefficient::zero()), rhs: LinComb::zero() };
                    for a in 0..3 {
                        for b in 0..3 {
                            let left = r.get(i * 3 + k, a * 3 + b);
                            add_product(&mut row, left, (a, j), (b, l));
                            let right = r.get(a * 3 + b, j * 3 + l);
                            add_product(&mut row, &-right, (k, b), (i, a));
                        }
                    }
                    rows.push(row);
                }
            }
        }
    }
    rows
}

/// Commutators of the entries solved from the FRT equations.
#[derive(Clone, Debug)]
pub struct Extraction {
    /// `[T_y, T_x]` for each pair in [`PAIRS`], when determined.
    pub commutators: Vec<Option<LinComb<Word>>>,
    /// Word relations left over after elimination (should be empty).
    pub residual_relations: Vec<LinComb<Word>>,
}

pub fn extract(r: &Mat) -> Extraction {
    let mut rows = equations(r);
    let mut pivots: Vec<(usize, Row)> = Vec::new();
    for col in 0..6 {
        let Some(p) = rows.iter().position(|row| !row.k[col].is_zero()) else {
            continue;
        };
        let mut prow = rows.swap_remove(p);
        let inv = prow.k[col].inv();
        prow.k = prow.k.map(|c| &c * &inv);
        prow.rhs = prow.rhs.scale(&inv);
        for row in rows.iter_mut().chain(pivots.iter_mut().map(|(_, r)| r)) {
            let f = row.k[col].clone();
            if f.is_zero() {
                continue;
            }
            for c in 0..6 {
                row.k[c] = &row.k[c] - &(&f * &prow.k[c]);
            }
            row.rhs.add_scaled(&prow.rhs, &-&f);
        }
        pivots.push((col, prow));
    }
    let mut commutators = vec![None; 6];
    for (col, row) in pivots {
        if row.k.iter().enumerate().all(|(c, v)| c == col || v.is_zero()) {
            commutators[col] = Some(row.rhs);
        }
    }
    let residual_relations = rows.into_iter().filter(|r| !r.rhs.is_zero()).map(|r| r.rhs).collect();
    Extraction { commutators, residual_relations }
}

pub fn render_word_comb(x: &LinComb<Word>) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let parts: Vec<String> = x
        .iter()
        .map(|(w, c)| {
            let letters: Vec<&str> = w.iter().filter(|&&v| v != NONE).map(|&v| ENTRY_NAMES[v as usize]).collect();
            let body = if letters.is_empty() { "1".to_string() } else { letters.join("*") };
            format!("({c})*{body}")
        })
        .collect();
    parts.join(" + ")
}

/// The entries as elements of the quantum group.
pub fn entry_elements(g: &QuantumGroup) -> [Element<5>; 4] {
    let alg = &g.alg;
    let e = alg.gen(E);
    let (ap, am, m) = (alg.gen(A_P), alg.gen(A_M), alg.gen(M));
    [alg.mul(&am, &e), &m + &alg.mul(&am, &ap), e, ap]
}

fn eval_word(g: &QuantumGroup, entries: &[Element<5>; 4], w: &Word) -> Element<5> {
    w.iter().filter(|&&v| v != NONE).fold(g.alg.one(), |acc, &v| g.alg.mul(&acc, &entries[v as usize]))
}

fn eval_comb(g: &QuantumGroup, entries: &[Element<5>; 4], x: &LinComb<Word>) -> Element<5> {
    let mut out = Element::zero();
    for (w, c) in x.iter() {
        out.add_scaled(&eval_word(g, entries, w), c);
    }
    g.alg.truncate(&out)
}

/// All 81 entries of `R T₁ T₂ − T₂ T₁ R` in the quantum group.
pub fn frt_entry_defects(g: &QuantumGroup, r: &Mat) -> Vec<String> {
    let alg = &g.alg;
    let ent = entry_elements(g);
    let t = |i: usize, j: usize| -> Element<5> {
        let (c, s) = entry(i, j);
        match s {
            Some(k) => ent[k].clone(),
            None => alg.scalar(c),
        }
    };
    let mut out = Vec::new();
    for i in 0..3 {
        for k in 0..3 {
            for j in 0..3 {
                for l in 0..3 {
                    let mut acc = Element::zero();
                    for a in 0..3 {
                        for b in 0..3 {
                            let lc = r.get(i * 3 + k, a * 3 + b);
                            if !lc.is_zero() {
                                acc.add_scaled(&alg.mul(&t(a, j), &t(b, l)), lc);
                            }
                            let rc = r.get(a * 3 + b, j * 3 + l);
                            if !rc.is_zero() {
                                acc.add_scaled(&alg.mul(&t(k, b), &t(i, a)), &-rc);
                            }
                        }
                    }
                    let acc = alg.truncate(&acc);
                    if !acc.is_zero() {
                        out.push(format!("entry ({i}{k},{j}{l}): {}", render(&acc, &fun::NAMES, Style::Text)));
                    }
                }
            }
        }
    }
    out
}

/// Extracted commutators against the stated relations of the quantum group.
pub fn relation_defects(g: &QuantumGroup, ex: &Extraction) -> Vec<String> {
    let ent = entry_elements(g);
    let mut out = Vec::new();
    for rel in &ex.residual_relations {
        out.push(format!("extra relation {} = 0", render_word_comb(rel)));
    }
    for (idx, &(hi, lo)) in PAIRS.iter().enumerate() {
        let name = format!("[{},{}]", ENTRY_NAMES[hi], ENTRY_NAMES[lo]);
        match &ex.commutators[idx] {
            None => out.push(format!("{name} is not determined")),
            Some(x) => {
                let stated = g.alg.commutator(&ent[hi], &ent[lo]);
                let d = &eval_comb(g, &ent, x) - &stated;
                if !d.is_zero() {
                    out.push(format!("{name}: differs by {}", render(&d, &fun::NAMES, Style::Text)));
                }
            }
        }
    }
    out
}

fn classical_entry(k: usize) -> GroupFunction {
    let e = poisson::exp_theta(1, 0);
    let c = |x| poisson::coordinate(x, 0);
    match k {
        0 => poisson::mul(&c(Coord::Am), &e),
        1 => &c(Coord::M) + &poisson::mul(&c(Coord::Am), &c(Coord::Ap)),
        2 => e,
        3 => c(Coord::Ap),
        _ => unreachable!(),
    }
}

fn classical_comb(x: &LinComb<Word>) -> GroupFunction {
    let mut out = GroupFunction::zero();
    for (w, c) in x.iter() {
        let f = w.iter().filter(|&&v| v != NONE).fold(poisson::constant(Coefficient::one()), |acc, &v| {
            poisson::mul(&acc, &classical_entry(v as usize))
        });
        out.add_scaled(&f, c);
    }
    out
}

/// Fun coordinates as quantum-group generators.
fn fun_coordinate(c: Coord) -> usize {
    match c {
        Coord::Theta => THETA,
        Coord::Ap => A_P,
        Coord::Am => A_M,
        Coord::M => M,
    }
}

/// Maps a quantum-group element with commuting letters to a classical
/// function on one copy of the group.
fn to_classical(x: &Element<5>) -> GroupFunction {
    let mut out = GroupFunction::zero();
    for (m, c) in x.iter() {
        let mut f = poisson::exp_theta(m.0[E], 0);
        for (coord, idx) in [(Coord::Theta, THETA), (Coord::Ap, A_P), (Coord::Am, A_M), (Coord::M, M)] {
            for _ in 0..m.0[idx] {
                f = poisson::mul(&f, &poisson::coordinate(coord, 0));
            }
        }
        out.add_scaled(&f, c);
    }
    out
}

/// Order-one parts of the extracted entry commutators and of the stated
/// coordinate commutators against the Sklyanin brackets of `r`.
pub fn semiclassical_defects(g: &QuantumGroup, ex: &Extraction, r: &RMatrixSkew) -> Vec<String> {
    let mut out = Vec::new();
    for (idx, &(hi, lo)) in PAIRS.iter().enumerate() {
        let Some(x) = &ex.commutators[idx] else { continue };
        let lhs = classical_comb(&x.map_coeffs(|c| c.truncate(1)).degree_part(1));
        let rhs = poisson::sklyanin_bracket(r, &classical_entry(hi), &classical_entry(lo), 0);
        if lhs != rhs {
            out.push(format!("[{},{}] at order one differs from the Sklyanin bracket", ENTRY_NAMES[hi], ENTRY_NAMES[lo]));
        }
    }
    for (a, b) in poisson::PAIRS {
        let q = g.alg.commutator(&g.alg.gen(fun_coordinate(a)), &g.alg.gen(fun_coordinate(b)));
        let lhs = to_classical(&q.degree_part(1));
        let rhs = poisson::coordinate_bracket(r, a, b);
        if lhs != rhs {
            out.push(format!("[{},{}] at order one differs from the Sklyanin bracket", a.name(), b.name()));
        }
    }
    out
}

pub fn fun_family(f: QuantumFamily) -> FunFamily {
    match f {
        QuantumFamily::Uz => FunFamily::Uz,
        QuantumFamily::IIn => FunFamily::IIn,
        QuantumFamily::IIs => FunFamily::IIs,
    }
}

/// The skew part of the order-one term of the universal R-matrix.
pub fn classical_r(f: QuantumFamily) -> RMatrixSkew {
    let t = super::expected_classical(f);
    RMatrixSkew::from_tensor(&skew_part(&t)).expect("an antisymmetric tensor")
}

/// FRT relations and the semiclassical comparison for one family.
pub fn check(f: QuantumFamily, order: i32) -> Vec<CheckResult> {
    let g = fun::build(fun_family(f), order);
    let r = d_r_closed(f, PrimedReading::Definition);
    let key = fun_family(f).key();
    let ex = extract(&r);
    vec![
        CheckResult::run(key, "RT1T2 = T2T1R", Some(order), || frt_entry_defects(&g, &r)),
        CheckResult::run(key, "FRT relations", Some(order), || relation_defects(&g, &ex)),
        CheckResult::run(key, "semiclassical limit", Some(order.max(1)), || {
            if order >= 1 {
                semiclassical_defects(&g, &ex, &classical_r(f))
            } else {
                semiclassical_defects(&fun::build(fun_family(f), 1), &ex, &classical_r(f))
            }
        }),
    ]
}

/// Extracted relations rendered as `[T_y, T_x] = …`.
pub fn describe(ex: &Extraction) -> BTreeMap<String, String> {
    PAIRS
        .iter()
        .zip(&ex.commutators)
        .map(|(&(hi, lo), c)| {
            (
                format!("[{},{}]", ENTRY_NAMES[hi], ENTRY_NAMES[lo]),
                c.as_ref().map(render_word_comb).unwrap_or_else(|| "undetermined".into()),
            )
        })
        .collect()
}
