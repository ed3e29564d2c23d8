//! Quantum oscillator groups: deformed function algebras on the group with
//! generators `E = e^θ, θ, a+, a-, m`. They share the group coalgebra and
//! differ in their commutation relations.

use crate::algebra::engine::{Algebra, Presentation};
use crate::algebra::linear::{left, right, tensor2, Element, Mono, Tensor};
use crate::coeff::{Coefficient, Param};

use super::HopfStructure;

pub type QuantumGroup = HopfStructure<5>;

pub const NAMES: [&str; 5] = ["E", "theta", "a_p", "a_m", "m"];

pub const E: usize = 0;
pub const THETA: usize = 1;
pub const A_P: usize = 2;
pub const A_M: usize = 3;
pub const M: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum FunFamily {
    Uz,
    IIn,
    IIs,
}

impl FunFamily {
    pub const ALL: [FunFamily; 3] = [FunFamily::Uz, FunFamily::IIn, FunFamily::IIs];

    pub fn key(self) -> &'static str {
        match self {
            FunFamily::Uz => "FunUz",
            FunFamily::IIn => "FunIIn",
            FunFamily::IIs => "FunIIs",
        }
    }
}

fn gen(i: usize) -> Element<5> {
    Element::basis(Mono::gen(i))
}

fn e_pow(k: i16) -> Element<5> {
    Element::basis(Mono::one().bump(E, k))
}

fn one() -> Element<5> {
    Element::basis(Mono::one())
}

fn mono(e: [i16; 5]) -> Element<5> {
    Element::basis(Mono(e))
}

/// The relations of each family as a presentation.
pub fn presentation(family: FunFamily) -> Presentation<5> {
    let base = Presentation::new(NAMES).exponential();
    match family {
        FunFamily::Uz => {
            let z = Coefficient::param(Param::Z);
            let e_minus_one = &e_pow(1) - &one();
            // [m, a+] = −z a- a+ = −z a+ a- − z² a-
            let m_ap = &mono([0, 0, 1, 1, 0]).scale(&-&z) - &gen(A_M).scale(&(&z * &z));
            base.shift(A_P, e_minus_one.scale(&z))
                .shift(M, gen(A_M).scale(&z))
                .rule(A_P, THETA, e_minus_one.scale(&-&z))
                .rule(A_M, A_P, gen(A_M).scale(&z))
                .rule(M, THETA, gen(A_M).scale(&-&z))
                .rule(M, A_P, m_ap)
                .rule(M, A_M, mono([0, 0, 0, 2, 0]).scale(&z))
        }
        FunFamily::IIn => {
            let (x, bp, yp) =
                (Coefficient::param(Param::X), Coefficient::param(Param::BETA_P), Coefficient::param(Param::Y_P));
            let m_ap = &gen(A_P).scale(&x) - &(&e_pow(1) - &one()).scale(&bp);
            let m_am = &gen(A_M).scale(&-&x) - &(&e_pow(-1) - &one()).scale(&yp);
            base.rule(M, A_P, m_ap).rule(M, A_M, m_am)
        }
        FunFamily::IIs => {
            let z = Coefficient::param(Param::Z);
            base.rule(M, A_P, gen(A_P).scale(&-&z)).rule(M, A_M, gen(A_M).scale(&-&z))
        }
    }
}

/// The group coalgebra: `Δ(E) = E⊗E`, `Δ(a+) = E⊗a+ + a+⊗1`,
/// `Δ(a-) = E⁻¹⊗a- + a-⊗1`, `Δ(m) = 1⊗m + m⊗1 − E⁻¹a+⊗a-`.
pub fn build(family: FunFamily, order: i32) -> QuantumGroup {
    let alg = Algebra::new(presentation(family), Some(order));
    let prim = |x: &Element<5>| &left(x) + &right(x);
    let coproduct = vec![
        tensor2(&e_pow(1), &e_pow(1)),
        prim(&gen(THETA)),
        &tensor2(&e_pow(1), &gen(A_P)) + &left(&gen(A_P)),
        &tensor2(&e_pow(-1), &gen(A_M)) + &left(&gen(A_M)),
        &prim(&gen(M)) - &tensor2(&mono([-1, 0, 1, 0, 0]), &gen(A_M)),
    ];
    let mut counit = vec![Coefficient::zero(); 5];
    counit[E] = Coefficient::one();
    let conj = alg.mul(&alg.mul(&e_pow(-1), &gen(A_P)), &e_pow(1));
    let antipode = vec![
        e_pow(-1),
        -&gen(THETA),
        -&mono([-1, 0, 1, 0, 0]),
        -&mono([1, 0, 0, 1, 0]),
        &(-&gen(M)) - &alg.mul(&conj, &gen(A_M)),
    ];
    let inverse: (Tensor<5, 2>, Element<5>) = (tensor2(&e_pow(-1), &e_pow(-1)), e_pow(1));
    HopfStructure::new(family.key(), alg, coproduct, counit, antipode).with_inverse(inverse.0, inverse.1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poisson::{self, group_compose, Coord, GroupElementCoords, GroupFunction, SLOT_WIDTH};

    fn all_pass(h: &QuantumGroup) {
        for r in h.verify(&h.name) {
            assert!(r.status.ok(), "{} {}: {:?}", r.family, r.check, r.residuals);
        }
    }

    #[test]
    fn fun_families_are_hopf() {
        for f in FunFamily::ALL {
            all_pass(&build(f, 3));
        }
    }

    // Fun index → offset inside a slot of the classical function algebra.
    fn classical_index(i: usize) -> usize {
        match i {
            E => 1,
            THETA => 0,
            other => other,
        }
    }

    fn to_classical(t: &Tensor<5, 2>) -> GroupFunction {
        let mut out = GroupFunction::zero();
        for ([a, b], c) in t.iter() {
            let mut m = [0i16; poisson::NVARS];
            for i in 0..5 {
                m[SLOT_WIDTH + classical_index(i)] = a.0[i];
                m[classical_index(i)] = b.0[i];
            }
            out.add_term(Mono(m), c.clone());
        }
        out
    }

    #[test]
    fn classical_coproduct_is_group_law() {
        let h = build(FunFamily::Uz, 2);
        let g = group_compose(&GroupElementCoords::symbolic(1), &GroupElementCoords::symbolic(0));
        for (i, c) in [(THETA, Coord::Theta), (A_P, Coord::Ap), (A_M, Coord::Am), (M, Coord::M)] {
            let d = h.delta(&gen(i)).degree_part(0);
            assert_eq!(to_classical(&d), *g.coord(c), "{}", NAMES[i]);
        }
        assert_eq!(to_classical(&h.delta(&gen(E))), g.e);
    }

    #[test]
    fn broken_relation_is_detected() {
        let z = Coefficient::param(Param::Z);
        let pres = presentation(FunFamily::IIs).rule(A_M, A_P, one().scale(&z));
        let mut h = build(FunFamily::IIs, 2);
        h.alg = Algebra::new(pres, Some(2));
        assert!(!h.homomorphism_defects().is_empty());
    }
}
