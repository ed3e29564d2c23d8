//! Coboundary Lie bialgebra structures on the oscillator algebra.
//!
//! A skew element `r = Σ c_i X∧Y` over the six wedge pairs defines
//! `δ(X) = [X⊗1 + 1⊗X, r]`, which is a Lie bialgebra exactly when the
//! Schouten bracket `[[r,r]]` is ad-invariant (the modified classical
//! Yang–Baxter equation).

use std::fmt;

use thiserror::Error;

use crate::algebra::linear::{embed, tensor2, Tensor};
use crate::algebra::uea::{oscillator, primitive2, tensor_adjoint, tensor_adjoint3, wedge, Generator, Uea, Uea2, Uea3};
use crate::algebra::render::{render, render_wedge, Style};
use crate::algebra::uea::{context, LATEX_NAMES, NAMES};
use crate::coeff::{Coefficient, Param};
use crate::report::TableEntry;

/// Wedge pairs in slot order c1..c6.
pub const SLOTS: [(Generator, Generator); 6] = [
    (Generator::A, Generator::Ap),
    (Generator::A, Generator::Am),
    (Generator::A, Generator::M),
    (Generator::Ap, Generator::Am),
    (Generator::Ap, Generator::M),
    (Generator::Am, Generator::M),
];

#[derive(Clone, Debug, PartialEq)]
pub struct RMatrixSkew {
    pub c: [Coefficient; 6],
}

impl RMatrixSkew {
    pub fn new(c: [Coefficient; 6]) -> Self {
        RMatrixSkew { c }
    }

    pub fn zero() -> Self {
        RMatrixSkew { c: std::array::from_fn(|_| Coefficient::zero()) }
    }

    /// Six independent symbolic coefficients.
    pub fn generic() -> Self {
        RMatrixSkew { c: Param::r_slots().map(Coefficient::param) }
    }

    pub fn from_ints(c: [i64; 6]) -> Self {
        RMatrixSkew { c: c.map(Coefficient::int) }
    }

    pub fn with(mut self, slot: usize, value: Coefficient) -> Self {
        self.c[slot] = value;
        self
    }

    pub fn as_tensor(&self) -> Uea2 {
        let mut t = Uea2::zero();
        for (c, (x, y)) in self.c.iter().zip(SLOTS) {
            t.add_scaled(&wedge(&x.elem(), &y.elem()), c);
        }
        t
    }

    /// Reads the six coefficients back from an antisymmetric tensor.
    pub fn from_tensor(t: &Uea2) -> Option<Self> {
        use crate::algebra::linear::Mono;
        let r = RMatrixSkew { c: SLOTS.map(|(x, y)| t.coeff(&[Mono::gen(x.index()), Mono::gen(y.index())])) };
        if r.as_tensor() == *t {
            Some(r)
        } else {
            None
        }
    }

    /// The three polynomial conditions equivalent to the modified CYBE:
    /// `c1·c2`, `c1·(c4 + c3)`, `c2·(c4 − c3)`.
    pub fn solution_system(&self) -> [Coefficient; 3] {
        let c = &self.c;
        [&c[0] * &c[1], &c[0] * &(&c[3] + &c[2]), &c[1] * &(&c[3] - &c[2])]
    }

    pub fn subs(&self, p: Param, v: &Coefficient) -> Self {
        RMatrixSkew { c: std::array::from_fn(|i| self.c[i].subs(p, v)) }
    }
}

impl fmt::Display for RMatrixSkew {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.c.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `[[r,r]] = [r12,r13] + [r12,r23] + [r13,r23]`.
pub fn schouten(r: &RMatrixSkew) -> Uea3 {
    let t = r.as_tensor();
    let alg = oscillator();
    let r12 = embed(&t, 0, 1);
    let r13 = embed(&t, 0, 2);
    let r23 = embed(&t, 1, 2);
    let mut s = alg.commutator(&r12, &r13);
    s += &alg.commutator(&r12, &r23);
    s += &alg.commutator(&r13, &r23);
    s
}

/// `X∧Y∧Z` as the signed sum over the six slot permutations.
pub fn wedge3(x: Generator, y: Generator, z: Generator) -> Uea3 {
    let g = [x.elem(), y.elem(), z.elem()];
    const PERMS: [([usize; 3], i64); 6] =
        [([0, 1, 2], 1), ([1, 0, 2], -1), ([1, 2, 0], 1), ([2, 1, 0], -1), ([2, 0, 1], 1), ([0, 2, 1], -1)];
    let mut out = Uea3::zero();
    for (p, s) in PERMS {
        let t = crate::algebra::linear::tensor3(&g[p[0]], &g[p[1]], &g[p[2]]);
        out.add_scaled(&t, &Coefficient::int(s));
    }
    out
}

/// Closed form of the Schouten bracket for a generic skew `r`:
/// `c1(c4+c3) A∧M∧A+ + c2(c4−c3) A∧M∧A− − 2c1c2 A∧A+∧A− + (c1c6+c2c5−c4²) M∧A+∧A−`.
pub fn schouten_closed_form(r: &RMatrixSkew) -> Uea3 {
    use Generator::*;
    let c = &r.c;
    let mut out = Uea3::zero();
    out.add_scaled(&wedge3(A, M, Ap), &(&c[0] * &(&c[3] + &c[2])));
    out.add_scaled(&wedge3(A, M, Am), &(&c[1] * &(&c[3] - &c[2])));
    out.add_scaled(&wedge3(A, Ap, Am), &(&Coefficient::int(-2) * &(&c[0] * &c[1])));
    out.add_scaled(&wedge3(M, Ap, Am), &(&(&(&c[0] * &c[5]) + &(&c[1] * &c[4])) - &(&c[3] * &c[3])));
    out
}

#[derive(Clone, Debug)]
pub struct McybeReport {
    pub holds: bool,
    /// Nonvanishing `[X⊗1⊗1 + …, [[r,r]]]`, per generator.
    pub residuals: Vec<(Generator, Uea3)>,
}

pub fn mcybe_check(r: &RMatrixSkew) -> McybeReport {
    let s = schouten(r);
    let residuals: Vec<(Generator, Uea3)> = Generator::ALL
        .iter()
        .map(|&g| (g, tensor_adjoint3(g, &s)))
        .filter(|(_, t)| !t.is_zero())
        .collect();
    McybeReport { holds: residuals.is_empty(), residuals }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum Kind {
    Iplus,
    Iminus,
    II,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum Flavor {
    Standard,
    Nonstandard,
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub kind: Kind,
    pub flavor: Flavor,
    /// The three defining conditions with their values (all zero here).
    pub constraints: Vec<(String, Coefficient)>,
}

#[derive(Debug, Error, PartialEq)]
pub enum ClassifyError {
    #[error("not a coboundary bialgebra: violated {}", .0.iter().map(|(n, c)| format!("{n} = {c}")).collect::<Vec<_>>().join(", "))]
    NotCoboundary(Vec<(String, Coefficient)>),
    #[error("cannot decide whether {0} vanishes; declare its parameters nonzero")]
    Undetermined(String),
}

const CONDITION_NAMES: [&str; 3] = ["c1*c2", "c1*(c4+c3)", "c2*(c4-c3)"];

/// Whether a coefficient is zero, given parameters declared nonzero.
/// `None` when the answer depends on an undeclared parameter.
pub fn is_zero_given(c: &Coefficient, nonzero: &[Param]) -> Option<bool> {
    if c.is_zero() {
        return Some(true);
    }
    if c.is_param_free() {
        return Some(false);
    }
    // a single monomial over declared-nonzero parameters cannot vanish
    let num = c.numer();
    if num.terms().len() == 1 {
        let (m, _) = &num.terms()[0];
        let ok = m.0.iter().enumerate().all(|(i, &e)| e == 0 || nonzero.iter().any(|p| p.index() == i));
        if ok {
            return Some(false);
        }
    }
    None
}

pub fn classify(r: &RMatrixSkew, nonzero: &[Param]) -> Result<Classification, ClassifyError> {
    let sys = r.solution_system();
    let constraints: Vec<(String, Coefficient)> =
        CONDITION_NAMES.iter().zip(sys.iter()).map(|(n, c)| (n.to_string(), c.clone())).collect();
    let report = mcybe_check(r);
    if !report.holds {
        let violated: Vec<(String, Coefficient)> = constraints.iter().filter(|(_, c)| !c.is_zero()).cloned().collect();
        let decided = violated.iter().any(|(_, c)| is_zero_given(c, nonzero) == Some(false));
        if let Some((name, _)) = violated.iter().find(|(_, c)| is_zero_given(c, nonzero).is_none()).filter(|_| !decided) {
            return Err(ClassifyError::Undetermined(name.clone()));
        }
        return Err(ClassifyError::NotCoboundary(violated));
    }
    let z1 = is_zero_given(&r.c[0], nonzero).ok_or_else(|| ClassifyError::Undetermined("c1".into()))?;
    let z2 = is_zero_given(&r.c[1], nonzero).ok_or_else(|| ClassifyError::Undetermined("c2".into()))?;
    let kind = match (z1, z2) {
        (false, _) => Kind::Iplus,
        (true, false) => Kind::Iminus,
        (true, true) => Kind::II,
    };
    let flavor = if schouten(r).is_zero() { Flavor::Nonstandard } else { Flavor::Standard };
    Ok(Classification { kind, flavor, constraints })
}

/// `δ(X) = [X⊗1 + 1⊗X, r]`.
pub fn cocommutator(r: &RMatrixSkew, x: Generator) -> Uea2 {
    tensor_adjoint(x, &r.as_tensor())
}

/// δ extended linearly to degree-one elements.
pub fn cocommutator_of(r: &RMatrixSkew, x: &Uea) -> Uea2 {
    oscillator().commutator(&primitive2(x), &r.as_tensor())
}

#[derive(Clone, Debug, PartialEq)]
pub struct Cocommutator {
    pub images: [Uea2; 4],
}

impl Cocommutator {
    pub fn of(r: &RMatrixSkew) -> Self {
        Cocommutator { images: Generator::ALL.map(|g| cocommutator(r, g)) }
    }

    pub fn get(&self, g: Generator) -> &Uea2 {
        &self.images[g.index()]
    }
}

/// 1-cocycle condition `δ([X,Y]) = [X⊗1+1⊗X, δ(Y)] − [Y⊗1+1⊗Y, δ(X)]` on all pairs.
pub fn cocycle_check(r: &RMatrixSkew) -> bool {
    let alg = oscillator();
    for x in Generator::ALL {
        for y in Generator::ALL {
            let xy = alg.commutator(&x.elem(), &y.elem());
            let lhs = cocommutator_of(r, &xy);
            let rhs = &alg.commutator(&primitive2(&x.elem()), &cocommutator(r, y))
                - &alg.commutator(&primitive2(&y.elem()), &cocommutator(r, x));
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// Co-Jacobi: the cyclic sum of `(δ⊗id)δ(X)` vanishes for every generator.
pub fn cojacobi_check(r: &RMatrixSkew) -> bool {
    for x in Generator::ALL {
        let d = cocommutator(r, x);
        let mut t = Uea3::zero();
        for ([a, b], c) in d.iter() {
            let da = cocommutator_of(r, &Uea::basis(*a));
            for ([p, q], e) in da.iter() {
                t.add_term([*p, *q, *b], c * e);
            }
        }
        let mut cyc = t.clone();
        cyc += &t.map_basis(|[p, q, s]| [*s, *p, *q]);
        cyc += &t.map_basis(|[p, q, s]| [*q, *s, *p]);
        if !cyc.is_zero() {
            return false;
        }
    }
    true
}

/// `[X⊗1 + 1⊗X, η] = 0` for every generator.
pub fn ad_invariant_check(eta: &Uea2) -> bool {
    Generator::ALL.iter().all(|&g| tensor_adjoint(g, eta).is_zero())
}

/// The six coboundary families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    IplusStandard,
    IplusNonstandard,
    IminusStandard,
    IminusNonstandard,
    IIStandard,
    IINonstandard,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::IplusStandard,
        Family::IplusNonstandard,
        Family::IminusStandard,
        Family::IminusNonstandard,
        Family::IIStandard,
        Family::IINonstandard,
    ];

    pub fn key(self) -> &'static str {
        match self {
            Family::IplusStandard => "I+s",
            Family::IplusNonstandard => "I+n",
            Family::IminusStandard => "I-s",
            Family::IminusNonstandard => "I-n",
            Family::IIStandard => "IIs",
            Family::IINonstandard => "IIn",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.key().eq_ignore_ascii_case(s))
    }

    pub fn kind(self) -> Kind {
        match self {
            Family::IplusStandard | Family::IplusNonstandard => Kind::Iplus,
            Family::IminusStandard | Family::IminusNonstandard => Kind::Iminus,
            _ => Kind::II,
        }
    }

    pub fn flavor(self) -> Flavor {
        match self {
            Family::IplusStandard | Family::IminusStandard | Family::IIStandard => Flavor::Standard,
            _ => Flavor::Nonstandard,
        }
    }

    /// Parameters declared nonzero for the family.
    pub fn nonzero(self) -> Vec<Param> {
        match self.kind() {
            Kind::Iplus => vec![Param::ALPHA_P],
            Kind::Iminus => vec![Param::ALPHA_M],
            Kind::II if self.flavor() == Flavor::Standard => vec![Param::Y],
            Kind::II => vec![],
        }
    }

    /// The family's r with its defining constraints substituted.
    pub fn r(self) -> RMatrixSkew {
        let p = Coefficient::param;
        let (ap, am, x, y, bp, yp) =
            (p(Param::ALPHA_P), p(Param::ALPHA_M), p(Param::X), p(Param::Y), p(Param::BETA_P), p(Param::Y_P));
        let zero = Coefficient::zero;
        let x2 = &x * &x;
        match self {
            Family::IplusStandard => RMatrixSkew::new([ap, zero(), x.clone(), -&x, bp, yp]),
            Family::IplusNonstandard => {
                let c6 = &x2 / &ap;
                RMatrixSkew::new([ap, zero(), x.clone(), -&x, bp, c6])
            }
            Family::IminusStandard => RMatrixSkew::new([zero(), am, x.clone(), x, bp, yp]),
            Family::IminusNonstandard => {
                let c5 = &x2 / &am;
                RMatrixSkew::new([zero(), am, x.clone(), x, c5, yp])
            }
            Family::IIStandard => RMatrixSkew::new([zero(), zero(), x, y, bp, yp]),
            Family::IINonstandard => RMatrixSkew::new([zero(), zero(), x, zero(), bp, yp]),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

#[derive(serde::Deserialize)]
struct TableOne {
    family: Vec<TableOneRow>,
}

#[derive(serde::Deserialize)]
#[allow(non_snake_case)]
struct TableOneRow {
    key: String,
    r: String,
    A: String,
    Ap: String,
    Am: String,
    M: String,
}

fn entry(table: &str, family: &str, name: &str, expected: &str, computed: &Uea2) -> TableEntry {
    let want = context().tensor2(expected).unwrap_or_else(|e| panic!("fixture {family} {name}: {e}"));
    let text = render_wedge(computed, &NAMES, Style::Text).unwrap_or_else(|| render(computed, &NAMES, Style::Text));
    let latex = render_wedge(computed, &LATEX_NAMES, Style::Latex)
        .unwrap_or_else(|| render(computed, &LATEX_NAMES, Style::Latex));
    TableEntry {
        table: table.into(),
        family: family.into(),
        entry: name.into(),
        expected: expected.into(),
        computed: text,
        latex,
        matches: want == *computed,
    }
}

/// r and δ on each generator for all six families, compared with the
/// reference table.
pub fn table_one() -> Vec<TableEntry> {
    let data: TableOne = toml::from_str(include_str!("../fixtures/table_1.toml")).expect("table 1 fixture");
    let mut out = Vec::new();
    for row in &data.family {
        let f = Family::parse(&row.key).expect("family key");
        let r = f.r();
        out.push(entry("I", &row.key, "r", &row.r, &r.as_tensor()));
        for (g, s) in Generator::ALL.iter().zip([&row.A, &row.Ap, &row.Am, &row.M]) {
            out.push(entry("I", &row.key, &format!("δ({g})"), s, &cocommutator(&r, *g)));
        }
    }
    out
}

/// Symmetric part of a two-slot tensor, `(t + σt)/2`.
pub fn symmetric_part(t: &Uea2) -> Uea2 {
    (t + &crate::algebra::uea::sigma(t)).scale(&Coefficient::rational(1, 2))
}

pub fn skew_part(t: &Uea2) -> Uea2 {
    (t - &crate::algebra::uea::sigma(t)).scale(&Coefficient::rational(1, 2))
}

/// `t1 ⊗ t2` helper for tests and examples.
pub fn simple(x: Generator, y: Generator) -> Tensor<4, 2> {
    tensor2(&x.elem(), &y.elem())
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::*;

    fn z() -> Coefficient {
        Coefficient::param(Param::Z)
    }

    #[test]
    fn schouten_matches_closed_form_generically() {
        let r = RMatrixSkew::generic();
        assert_eq!(schouten(&r), schouten_closed_form(&r));
    }

    #[test]
    fn type_ii_with_only_y() {
        let y = Coefficient::param(Param::Y);
        let r = RMatrixSkew::zero().with(3, y.clone());
        assert_eq!(schouten(&r), wedge3(M, Ap, Am).scale(&-(&y * &y)));
    }

    #[test]
    fn tensor_roundtrip() {
        let r = RMatrixSkew::generic();
        assert_eq!(RMatrixSkew::from_tensor(&r.as_tensor()), Some(r));
        assert_eq!(RMatrixSkew::from_tensor(&simple(A, Ap)), None);
    }

    #[test]
    fn mcybe_examples() {
        assert!(mcybe_check(&RMatrixSkew::zero().with(0, z())).holds);
        assert!(!mcybe_check(&RMatrixSkew::from_ints([1, 1, 0, 0, 0, 0])).holds);
        assert!(mcybe_check(&RMatrixSkew::zero()).holds);
    }

    #[test]
    fn classify_examples() {
        let c = classify(&RMatrixSkew::zero().with(0, z()), &[Param::Z]).unwrap();
        assert_eq!((c.kind, c.flavor), (Kind::Iplus, Flavor::Nonstandard));
        let c = classify(&Family::IINonstandard.r(), &[]).unwrap();
        assert_eq!((c.kind, c.flavor), (Kind::II, Flavor::Nonstandard));
        let c = classify(&RMatrixSkew::zero().with(3, -z()), &[Param::Z]).unwrap();
        assert_eq!((c.kind, c.flavor), (Kind::II, Flavor::Standard));
        let e = classify(&RMatrixSkew::from_ints([1, 1, 0, 0, 0, 0]), &[]).unwrap_err();
        assert!(matches!(e, ClassifyError::NotCoboundary(v) if v[0].0 == "c1*c2"));
    }

    #[test]
    fn families_classify_as_labelled() {
        for f in Family::ALL {
            let c = classify(&f.r(), &f.nonzero()).unwrap();
            assert_eq!((c.kind, c.flavor), (f.kind(), f.flavor()), "{f}");
        }
    }

    #[test]
    fn u_z_cocommutator() {
        let r = RMatrixSkew::zero().with(0, z());
        let expected = (&wedge(&Am.elem(), &Ap.elem()) + &wedge(&A.elem(), &M.elem())).scale(&z());
        assert_eq!(cocommutator(&r, Am), expected);
        assert!(cocommutator(&r, M).is_zero());
    }

    #[test]
    fn cocycle_and_cojacobi_on_families() {
        for f in Family::ALL {
            assert!(cocycle_check(&f.r()), "{f}");
            assert!(cojacobi_check(&f.r()), "{f}");
        }
    }

    #[test]
    fn table_one_matches() {
        let rows = table_one();
        assert_eq!(rows.len(), 30);
        for r in rows {
            assert!(r.matches, "{} {}: got {} want {}", r.family, r.entry, r.computed, r.expected);
        }
    }

    #[test]
    fn eta_is_invariant() {
        assert!(ad_invariant_check(&crate::algebra::uea::eta()));
        assert!(ad_invariant_check(&simple(M, M)));
        assert!(!ad_invariant_check(&simple(A, A)));
    }
}
