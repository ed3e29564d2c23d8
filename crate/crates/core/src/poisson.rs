//! Functions on the oscillator group, invariant vector fields and the
//! Sklyanin bracket.
//!
//! A group element has coordinates `(θ, a+, a-, m)` with matrix
//!
//! ```text
//! ⎛ 1  a- e^θ  m + a- a+ ⎞
//! ⎜ 0  e^θ     a+        ⎟
//! ⎝ 0  0       1         ⎠
//! ```
//!
//! Functions are polynomials in `θ, a+, a-, m` and Laurent in `E = e^θ`.
//! Up to three independent copies of the coordinates ("slots") are
//! available, so compositions `g'·g` and `g''·g'·g` are plain functions.

use std::sync::OnceLock;

use crate::algebra::engine::{Algebra, Presentation};
use crate::algebra::expr::Context;
use crate::algebra::linear::{Element, Mono};
use crate::algebra::render::{render, Style};
use crate::algebra::uea::Generator;
use crate::bialgebra::{mcybe_check, ClassifyError, Family, RMatrixSkew};
use crate::coeff::Coefficient;
use crate::report::TableEntry;

pub const SLOT_WIDTH: usize = 5;
pub const NSLOTS: usize = 3;
pub const NVARS: usize = SLOT_WIDTH * NSLOTS;

pub type GroupFunction = Element<NVARS>;

pub const NAMES: [&str; NVARS] = [
    "theta", "E", "a_p", "a_m", "m", "theta'", "E'", "a_p'", "a_m'", "m'", "theta''", "E''", "a_p''", "a_m''", "m''",
];

pub const LATEX_NAMES: [&str; NVARS] = [
    "\\theta", "e^{\\theta}", "a_+", "a_-", "m", "\\theta'", "e^{\\theta'}", "a_+'", "a_-'", "m'", "\\theta''",
    "e^{\\theta''}", "a_+''", "a_-''", "m''",
];

const THETA: usize = 0;
const EXP: usize = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Coord {
    Theta,
    Ap,
    Am,
    M,
}

impl Coord {
    pub const ALL: [Coord; 4] = [Coord::Theta, Coord::Ap, Coord::Am, Coord::M];

    fn offset(self) -> usize {
        match self {
            Coord::Theta => THETA,
            Coord::Ap => 2,
            Coord::Am => 3,
            Coord::M => 4,
        }
    }

    pub fn name(self) -> &'static str {
        NAMES[self.offset()]
    }

    pub fn parse(s: &str) -> Option<Coord> {
        Coord::ALL.into_iter().find(|c| c.name() == s)
    }
}

/// The commutative function algebra on three copies of the group.
pub fn functions() -> &'static Algebra<NVARS> {
    static ALG: OnceLock<Algebra<NVARS>> = OnceLock::new();
    ALG.get_or_init(|| {
        let mut p = Presentation::new(NAMES);
        for i in 0..NVARS {
            p = p.central(i);
        }
        Algebra::new(p, None)
    })
}

fn var(slot: usize, i: usize) -> GroupFunction {
    Element::basis(Mono::gen(slot * SLOT_WIDTH + i))
}

pub fn coordinate(c: Coord, slot: usize) -> GroupFunction {
    var(slot, c.offset())
}

/// `e^{kθ}` in the given slot.
pub fn exp_theta(k: i16, slot: usize) -> GroupFunction {
    Element::basis(Mono::one().bump(slot * SLOT_WIDTH + EXP, k))
}

pub fn constant(c: Coefficient) -> GroupFunction {
    functions().scalar(c)
}

pub fn mul(f: &GroupFunction, g: &GroupFunction) -> GroupFunction {
    functions().mul(f, g)
}

/// `∂f/∂c` in one slot; `∂θ` also differentiates `e^{±θ}`.
pub fn partial(f: &GroupFunction, c: Coord, slot: usize) -> GroupFunction {
    let base = slot * SLOT_WIDTH;
    let mut out = GroupFunction::zero();
    for (m, k) in f.iter() {
        let i = base + c.offset();
        let e = m.0[i];
        if e != 0 {
            out.add_term(m.bump(i, -1), k * &Coefficient::int(e as i64));
        }
        if c == Coord::Theta {
            let ee = m.0[base + EXP];
            if ee != 0 {
                out.add_term(*m, k * &Coefficient::int(ee as i64));
            }
        }
    }
    out
}

/// `Σ f_c ∂_c` acting on one slot.
#[derive(Clone, Debug, PartialEq)]
pub struct VectorField {
    pub slot: usize,
    /// Coefficients of `∂θ, ∂a+, ∂a-, ∂m`.
    pub components: [GroupFunction; 4],
}

impl VectorField {
    pub fn zero(slot: usize) -> Self {
        VectorField { slot, components: std::array::from_fn(|_| GroupFunction::zero()) }
    }

    pub fn new(slot: usize, components: [GroupFunction; 4]) -> Self {
        VectorField { slot, components }
    }

    pub fn apply(&self, f: &GroupFunction) -> GroupFunction {
        let mut out = GroupFunction::zero();
        for (c, k) in Coord::ALL.iter().zip(&self.components) {
            if !k.is_zero() {
                out += &mul(k, &partial(f, *c, self.slot));
            }
        }
        out
    }

    /// `[X, Y] = Σ (X(Y_c) − Y(X_c)) ∂_c`.
    pub fn commutator(&self, other: &VectorField) -> VectorField {
        assert_eq!(self.slot, other.slot);
        let components =
            std::array::from_fn(|i| &self.apply(&other.components[i]) - &other.apply(&self.components[i]));
        VectorField { slot: self.slot, components }
    }

    pub fn scale(&self, c: &Coefficient) -> VectorField {
        VectorField { slot: self.slot, components: self.components.clone().map(|x| x.scale(c)) }
    }

    pub fn add(&self, other: &VectorField) -> VectorField {
        VectorField { slot: self.slot, components: std::array::from_fn(|i| &self.components[i] + &other.components[i]) }
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.is_zero())
    }

    pub fn to_text(&self) -> String {
        let parts: Vec<String> = Coord::ALL
            .iter()
            .zip(&self.components)
            .filter(|(_, k)| !k.is_zero())
            .map(|(c, k)| format!("({})∂{}", render(k, &NAMES, Style::Text), c.name()))
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

fn field(slot: usize, th: GroupFunction, ap: GroupFunction, am: GroupFunction, m: GroupFunction) -> VectorField {
    VectorField::new(slot, [th, ap, am, m])
}

/// Left invariant fields `X^L_A, X^L_A+, X^L_A-, X^L_M`.
pub fn left_fields(slot: usize) -> [VectorField; 4] {
    let one = functions().one();
    let z = GroupFunction::zero;
    let e = exp_theta(1, slot);
    let ei = exp_theta(-1, slot);
    [
        field(slot, one.clone(), z(), z(), z()),
        field(slot, z(), e, z(), z()),
        field(slot, z(), z(), ei.clone(), -&mul(&coordinate(Coord::Ap, slot), &ei)),
        field(slot, z(), z(), z(), one),
    ]
}

/// Right invariant fields `X^R_A, X^R_A+, X^R_A-, X^R_M`, generated by
/// left translations: `X^R_A = ∂θ + a+∂a+ − a-∂a-`.
pub fn right_fields(slot: usize) -> [VectorField; 4] {
    let one = functions().one();
    let z = GroupFunction::zero;
    [
        field(slot, one.clone(), coordinate(Coord::Ap, slot), -&coordinate(Coord::Am, slot), z()),
        field(slot, z(), one.clone(), z(), -&coordinate(Coord::Am, slot)),
        field(slot, z(), z(), one.clone(), z()),
        field(slot, z(), z(), z(), one),
    ]
}

/// Linear combination of fields given a Lie algebra element (as structure constants).
fn combine(fields: &[VectorField; 4], x: &crate::algebra::uea::Uea) -> VectorField {
    let mut out = VectorField::zero(fields[0].slot);
    for (m, c) in x.iter() {
        let g = m.first().expect("degree-one element");
        out = out.add(&fields[g].scale(c));
    }
    out
}

/// Closure defects: `[X^L_i, X^L_j] − X^L_[i,j]`, `[X^R_i, X^R_j] + X^R_[i,j]`
/// and `[X^L_i, X^R_j]`, listed when nonzero.
pub fn field_defects(slot: usize) -> Vec<String> {
    let l = left_fields(slot);
    let r = right_fields(slot);
    let mut out = Vec::new();
    for i in Generator::ALL {
        for j in Generator::ALL {
            let s = crate::algebra::uea::structure(i, j);
            let dl = l[i.index()].commutator(&l[j.index()]).add(&combine(&l, &s).scale(&Coefficient::int(-1)));
            if !dl.is_zero() {
                out.push(format!("left [{i},{j}]: {}", dl.to_text()));
            }
            let dr = r[i.index()].commutator(&r[j.index()]).add(&combine(&r, &s));
            if !dr.is_zero() {
                out.push(format!("right [{i},{j}]: {}", dr.to_text()));
            }
            let lr = l[i.index()].commutator(&r[j.index()]);
            if !lr.is_zero() {
                out.push(format!("mixed [L{i},R{j}]: {}", lr.to_text()));
            }
        }
    }
    out
}

/// Coordinates of a group element; `e` and `e_inv` stand for `e^{±θ}`.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupElementCoords {
    pub theta: GroupFunction,
    pub e: GroupFunction,
    pub e_inv: GroupFunction,
    pub a_p: GroupFunction,
    pub a_m: GroupFunction,
    pub m: GroupFunction,
}

impl GroupElementCoords {
    pub fn symbolic(slot: usize) -> Self {
        GroupElementCoords {
            theta: coordinate(Coord::Theta, slot),
            e: exp_theta(1, slot),
            e_inv: exp_theta(-1, slot),
            a_p: coordinate(Coord::Ap, slot),
            a_m: coordinate(Coord::Am, slot),
            m: coordinate(Coord::M, slot),
        }
    }

    pub fn identity() -> Self {
        let c = |x: i64| constant(Coefficient::int(x));
        GroupElementCoords { theta: c(0), e: c(1), e_inv: c(1), a_p: c(0), a_m: c(0), m: c(0) }
    }

    /// A numeric element; `theta` is carried as a label, `e` must be nonzero.
    pub fn numeric(theta: Coefficient, e: Coefficient, a_p: Coefficient, a_m: Coefficient, m: Coefficient) -> Self {
        let e_inv = e.inv();
        GroupElementCoords {
            theta: constant(theta),
            e: constant(e),
            e_inv: constant(e_inv),
            a_p: constant(a_p),
            a_m: constant(a_m),
            m: constant(m),
        }
    }

    pub fn coord(&self, c: Coord) -> &GroupFunction {
        match c {
            Coord::Theta => &self.theta,
            Coord::Ap => &self.a_p,
            Coord::Am => &self.a_m,
            Coord::M => &self.m,
        }
    }

    pub fn matrix(&self) -> [[GroupFunction; 3]; 3] {
        let z = GroupFunction::zero;
        let one = functions().one();
        [
            [one.clone(), mul(&self.a_m, &self.e), &self.m + &mul(&self.a_m, &self.a_p)],
            [z(), self.e.clone(), self.a_p.clone()],
            [z(), z(), one],
        ]
    }
}

/// `g'' = g2 · g1` (matrix product `T2 T1`).
pub fn group_compose(g2: &GroupElementCoords, g1: &GroupElementCoords) -> GroupElementCoords {
    GroupElementCoords {
        theta: &g1.theta + &g2.theta,
        e: mul(&g1.e, &g2.e),
        e_inv: mul(&g1.e_inv, &g2.e_inv),
        a_p: &g2.a_p + &mul(&g1.a_p, &g2.e),
        a_m: &g2.a_m + &mul(&g1.a_m, &g2.e_inv),
        m: &(&g1.m + &g2.m) - &mul(&mul(&g1.a_m, &g2.a_p), &g2.e_inv),
    }
}

pub fn mat_mul(a: &[[GroupFunction; 3]; 3], b: &[[GroupFunction; 3]; 3]) -> [[GroupFunction; 3]; 3] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let mut s = GroupFunction::zero();
            for k in 0..3 {
                s += &mul(&a[i][k], &b[k][j]);
            }
            s
        })
    })
}

/// Substitutes the coordinates of `slot` in `f` by those of `g`.
pub fn pullback(f: &GroupFunction, slot: usize, g: &GroupElementCoords) -> GroupFunction {
    let alg = functions();
    let base = slot * SLOT_WIDTH;
    let images = [&g.theta, &g.e, &g.a_p, &g.a_m, &g.m];
    let mut out = GroupFunction::zero();
    for (m, c) in f.iter() {
        let mut rest = *m;
        let mut acc = alg.scalar(c.clone());
        for (i, img) in images.iter().enumerate() {
            let e = rest.0[base + i];
            rest.0[base + i] = 0;
            if e == 0 {
                continue;
            }
            let p = if i == EXP && e < 0 { alg.pow(&g.e_inv, (-e) as u32) } else { alg.pow(img, e as u32) };
            acc = alg.mul(&acc, &p);
        }
        out += &alg.mul(&acc, &Element::basis(rest));
    }
    out
}

/// `{f, g} = r^{αβ}(X^L_α f X^L_β g − X^R_α f X^R_β g)` on one slot.
pub fn sklyanin_bracket(r: &RMatrixSkew, f: &GroupFunction, g: &GroupFunction, slot: usize) -> GroupFunction {
    let l = left_fields(slot);
    let rf = right_fields(slot);
    let lf: [GroupFunction; 4] = std::array::from_fn(|i| l[i].apply(f));
    let lg: [GroupFunction; 4] = std::array::from_fn(|i| l[i].apply(g));
    let rff: [GroupFunction; 4] = std::array::from_fn(|i| rf[i].apply(f));
    let rg: [GroupFunction; 4] = std::array::from_fn(|i| rf[i].apply(g));
    let mut out = GroupFunction::zero();
    for ([a, b], c) in r.as_tensor().iter() {
        let (i, j) = (a.first().unwrap(), b.first().unwrap());
        let t = &mul(&lf[i], &lg[j]) - &mul(&rff[i], &rg[j]);
        out.add_scaled(&t, c);
    }
    out
}

/// Bracket on a product of slots: the sum of the single-slot brackets.
pub fn product_bracket(r: &RMatrixSkew, f: &GroupFunction, g: &GroupFunction, slots: usize) -> GroupFunction {
    let mut out = GroupFunction::zero();
    for s in 0..slots {
        out += &sklyanin_bracket(r, f, g, s);
    }
    out
}

/// The ten coordinate pairs: six off-diagonal in reference order, then the diagonal.
pub const PAIRS: [(Coord, Coord); 10] = [
    (Coord::Theta, Coord::Ap),
    (Coord::Theta, Coord::Am),
    (Coord::Am, Coord::Ap),
    (Coord::Theta, Coord::M),
    (Coord::Ap, Coord::M),
    (Coord::Am, Coord::M),
    (Coord::Theta, Coord::Theta),
    (Coord::Ap, Coord::Ap),
    (Coord::Am, Coord::Am),
    (Coord::M, Coord::M),
];

pub fn coordinate_bracket(r: &RMatrixSkew, a: Coord, b: Coord) -> GroupFunction {
    sklyanin_bracket(r, &coordinate(a, 0), &coordinate(b, 0), 0)
}

/// Jacobi identity on the four coordinate triples; returns the nonzero defects.
pub fn jacobi_defects(r: &RMatrixSkew) -> Vec<String> {
    let c = |x: Coord| coordinate(x, 0);
    let br = |f: &GroupFunction, g: &GroupFunction| sklyanin_bracket(r, f, g, 0);
    let mut out = Vec::new();
    let all = Coord::ALL;
    for i in 0..4 {
        for j in i + 1..4 {
            for k in j + 1..4 {
                let (f, g, h) = (c(all[i]), c(all[j]), c(all[k]));
                let s = &(&br(&f, &br(&g, &h)) + &br(&g, &br(&h, &f))) + &br(&h, &br(&f, &g));
                if !s.is_zero() {
                    out.push(format!(
                        "{{{},{},{}}}: {}",
                        all[i].name(),
                        all[j].name(),
                        all[k].name(),
                        render(&s, &NAMES, Style::Text)
                    ));
                }
            }
        }
    }
    out
}

pub fn jacobi_check(r: &RMatrixSkew) -> bool {
    jacobi_defects(r).is_empty()
}

/// Group multiplication is a Poisson map: for every coordinate pair,
/// `{u∘μ, v∘μ}` on `G×G` equals `{u, v}∘μ`. Returns the failing pairs.
pub fn multiplicativity_defects(r: &RMatrixSkew) -> Result<Vec<String>, ClassifyError> {
    if !mcybe_check(r).holds {
        return Err(ClassifyError::NotCoboundary(
            ["c1*c2", "c1*(c4+c3)", "c2*(c4-c3)"]
                .iter()
                .zip(r.solution_system())
                .filter(|(_, c)| !c.is_zero())
                .map(|(n, c)| (n.to_string(), c))
                .collect(),
        ));
    }
    let g = group_compose(&GroupElementCoords::symbolic(1), &GroupElementCoords::symbolic(0));
    let mut out = Vec::new();
    for (a, b) in PAIRS.iter().take(6) {
        let lhs = product_bracket(r, g.coord(*a), g.coord(*b), 2);
        let rhs = pullback(&coordinate_bracket(r, *a, *b), 0, &g);
        if lhs != rhs {
            out.push(format!("{{{},{}}}: {}", a.name(), b.name(), render(&(&lhs - &rhs), &NAMES, Style::Text)));
        }
    }
    Ok(out)
}

pub fn multiplicativity_check(r: &RMatrixSkew) -> Result<bool, ClassifyError> {
    Ok(multiplicativity_defects(r)?.is_empty())
}

/// `(g3·g2)·g1 = g3·(g2·g1)` on three symbolic elements.
pub fn associativity_check() -> bool {
    let g: Vec<GroupElementCoords> = (0..3).map(GroupElementCoords::symbolic).collect();
    let lhs = group_compose(&group_compose(&g[2], &g[1]), &g[0]);
    let rhs = group_compose(&g[2], &group_compose(&g[1], &g[0]));
    lhs == rhs
}

/// Composition agrees with the product of the 3×3 matrices.
pub fn matches_matrix_product(g2: &GroupElementCoords, g1: &GroupElementCoords) -> bool {
    group_compose(g2, g1).matrix() == mat_mul(&g2.matrix(), &g1.matrix())
}

/// Expression context for functions of the first slot.
pub fn context() -> Context<'static, NVARS> {
    let mut c = Context::new(functions(), vec![("theta", 0), ("E", 1), ("a_p", 2), ("a_m", 3), ("m", 4)]);
    c.log_of_exp = Some(("theta", EXP));
    c
}

#[derive(serde::Deserialize)]
struct TableTwo {
    family: Vec<TableTwoRow>,
}

#[derive(serde::Deserialize)]
struct TableTwoRow {
    key: String,
    brackets: std::collections::BTreeMap<String, String>,
}

/// All ten brackets for all six families, compared with the reference table.
pub fn table_two() -> Vec<TableEntry> {
    let data: TableTwo = toml::from_str(include_str!("../fixtures/table_2.toml")).expect("table 2 fixture");
    let ctx = context();
    let mut out = Vec::new();
    for row in &data.family {
        let f = Family::parse(&row.key).expect("family key");
        let r = f.r();
        for (a, b) in PAIRS {
            let key = format!("{},{}", a.name(), b.name());
            let expected = row.brackets.get(&key).unwrap_or_else(|| panic!("{} misses {key}", row.key));
            let want = ctx.element(expected).unwrap_or_else(|e| panic!("fixture {} {key}: {e}", row.key));
            let got = coordinate_bracket(&r, a, b);
            out.push(TableEntry {
                table: "II".into(),
                family: row.key.clone(),
                entry: format!("{{{key}}}"),
                expected: expected.clone(),
                computed: render(&got, &NAMES, Style::Text),
                latex: render(&got, &LATEX_NAMES, Style::Latex),
                matches: want == got,
            });
        }
    }
    out
}
