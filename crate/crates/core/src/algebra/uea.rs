//! The oscillator Lie algebra and its universal enveloping algebra.
//!
//! Basis `A, A+, A-, M` with `[A,A+] = A+`, `[A,A-] = -A-`, `[A-,A+] = M`
//! and `M` central. PBW monomials are ordered `A < A+ < A- < M`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use super::engine::{Algebra, Presentation};
use super::linear::{flip, tensor2, tensor3, Element, Mono, Tensor};
use crate::coeff::Coefficient;

pub type Uea = Element<4>;
pub type Uea2 = Tensor<4, 2>;
pub type Uea3 = Tensor<4, 3>;

pub const NAMES: [&str; 4] = ["A", "Ap", "Am", "M"];
pub const LATEX_NAMES: [&str; 4] = ["A", "A_+", "A_-", "M"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    A,
    Ap,
    Am,
    M,
}

impl Generator {
    pub const ALL: [Generator; 4] = [Generator::A, Generator::Ap, Generator::Am, Generator::M];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Generator {
        Generator::ALL[i]
    }

    pub fn name(self) -> &'static str {
        NAMES[self.index()]
    }

    pub fn latex(self) -> &'static str {
        ["A", "A_+", "A_-", "M"][self.index()]
    }

    pub fn parse(s: &str) -> Option<Generator> {
        match s {
            "A" => Some(Generator::A),
            "Ap" | "A+" | "A_+" => Some(Generator::Ap),
            "Am" | "A-" | "A_-" => Some(Generator::Am),
            "M" => Some(Generator::M),
            _ => None,
        }
    }

    pub fn elem(self) -> Uea {
        Element::basis(Mono::gen(self.index()))
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Structure constants: `[X_i, X_j]` as a linear combination of generators.
pub fn structure(i: Generator, j: Generator) -> Uea {
    use Generator::*;
    match (i, j) {
        (A, Ap) => Ap.elem(),
        (Ap, A) => -&Ap.elem(),
        (A, Am) => -&Am.elem(),
        (Am, A) => Am.elem(),
        (Am, Ap) => M.elem(),
        (Ap, Am) => -&M.elem(),
        _ => Uea::zero(),
    }
}

pub fn presentation() -> Presentation<4> {
    use Generator::*;
    Presentation::new(NAMES)
        .central(M.index())
        .rule(Ap.index(), A.index(), structure(Ap, A))
        .rule(Am.index(), A.index(), structure(Am, A))
        .rule(Am.index(), Ap.index(), structure(Am, Ap))
}

/// The undeformed enveloping algebra (no truncation).
pub fn oscillator() -> &'static Algebra<4> {
    static ALG: OnceLock<Algebra<4>> = OnceLock::new();
    ALG.get_or_init(|| Algebra::new(presentation(), None))
}

/// The enveloping algebra truncated at ħ-order `order` (cached).
pub fn oscillator_at(order: i32) -> &'static Algebra<4> {
    static CACHE: OnceLock<std::sync::Mutex<BTreeMap<i32, &'static Algebra<4>>>> = OnceLock::new();
    let mut m = CACHE.get_or_init(Default::default).lock().unwrap();
    m.entry(order).or_insert_with(|| Box::leak(Box::new(Algebra::new(presentation(), Some(order)))))
}

/// Expression context over `A, Ap, Am, M` (with `A+`, `A-` aliases).
pub fn context() -> super::expr::Context<'static, 4> {
    context_in(oscillator())
}

pub fn context_in(alg: &Algebra<4>) -> super::expr::Context<'_, 4> {
    let mut c = super::expr::Context::new(
        alg,
        vec![("A", 0), ("Ap", 1), ("A+", 1), ("Am", 2), ("A-", 2), ("M", 3)],
    );
    c.central = Some(3);
    c
}

/// Normal-orders a word of weighted generators.
pub fn pbw_normalize(word: &[(Generator, Coefficient)]) -> Uea {
    let alg = oscillator();
    let mut acc = alg.one();
    for (g, c) in word {
        acc = alg.mul(&acc, &g.elem().scale(c));
    }
    acc
}

pub fn bracket(x: &Uea, y: &Uea) -> Uea {
    oscillator().commutator(x, y)
}

/// `x ∧ y = x⊗y − y⊗x`.
pub fn wedge(x: &Uea, y: &Uea) -> Uea2 {
    &tensor2(x, y) - &tensor2(y, x)
}

pub fn sigma(t: &Uea2) -> Uea2 {
    flip(t)
}

/// `X⊗1 + 1⊗X` (or the three-slot analogue).
pub fn primitive2(x: &Uea) -> Uea2 {
    &super::linear::left(x) + &super::linear::right(x)
}

pub fn primitive3(x: &Uea) -> Uea3 {
    let one = Element::basis(Mono::one());
    let mut t = tensor3(x, &one, &one);
    t += &tensor3(&one, x, &one);
    t += &tensor3(&one, &one, x);
    t
}

/// `[X⊗1 + 1⊗X, t]` in the two-slot tensor algebra.
pub fn tensor_adjoint(x: Generator, t: &Uea2) -> Uea2 {
    oscillator().commutator(&primitive2(&x.elem()), t)
}

/// Three-slot version `[X⊗1⊗1 + 1⊗X⊗1 + 1⊗1⊗X, t]`.
pub fn tensor_adjoint3(x: Generator, t: &Uea3) -> Uea3 {
    oscillator().commutator(&primitive3(&x.elem()), t)
}

/// ħ-graded view: each parameter scaled by ħ, components keyed by ħ-degree.
pub fn hbar_scale<B: Ord + Copy>(e: &super::linear::LinComb<B>) -> BTreeMap<i32, super::linear::LinComb<B>> {
    e.graded()
}

/// `C = 2AM − A+A− − A−A+`.
pub fn casimir() -> Uea {
    use Generator::*;
    let alg = oscillator();
    let two_am = alg.mul(&A.elem(), &M.elem()).scale(&Coefficient::int(2));
    let ab = alg.mul(&Ap.elem(), &Am.elem());
    let ba = alg.mul(&Am.elem(), &Ap.elem());
    &(&two_am - &ab) - &ba
}

/// `η = A⊗M + M⊗A − A+⊗A− − A−⊗A+`.
pub fn eta() -> Uea2 {
    use Generator::*;
    let mut t = tensor2(&A.elem(), &M.elem());
    t += &tensor2(&M.elem(), &A.elem());
    t -= &tensor2(&Ap.elem(), &Am.elem());
    t -= &tensor2(&Am.elem(), &Ap.elem());
    t
}
