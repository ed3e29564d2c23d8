//! Universal R-matrices of the quantum oscillator algebras as truncated
//! tensor series, with the quantum Yang–Baxter equation and the
//! intertwining property `σ∘Δ(X) = R Δ(X) R⁻¹`.

pub mod conjugation;
pub mod frt;
pub mod rep;

use rayon::prelude::*;

use crate::algebra::engine::Algebra;
use crate::algebra::linear::{embed, flip, left, right, tensor2, Element, Tensor};
use crate::algebra::render::{render, Style};
use crate::algebra::series::{conjugate, exp};
use crate::coeff::{Coefficient, Param};
use crate::hopf::families::{Quantum, QuantumFamily};

pub type Tensor2 = Tensor<4, 2>;

/// `R = exp(F_1) exp(F_2) ⋯` with its truncated expansion.
pub struct UniversalR {
    pub factors: Vec<Tensor2>,
    pub expansion: Tensor2,
}

fn p(x: Param) -> Coefficient {
    Coefficient::param(x)
}

fn gen(i: usize) -> Element<4> {
    Element::basis(crate::algebra::linear::Mono::gen(i))
}

fn wedge(a: &Element<4>, b: &Element<4>) -> Tensor2 {
    &tensor2(a, b) - &tensor2(b, a)
}

/// `W = x A + β+ A+ + y+ A-`.
pub fn w_element() -> Element<4> {
    let mut w = gen(0).scale(&p(Param::X));
    w += &gen(1).scale(&p(Param::BETA_P));
    w += &gen(2).scale(&p(Param::Y_P));
    w
}

impl UniversalR {
    pub fn from_factors(alg: &Algebra<4>, factors: Vec<Tensor2>) -> Self {
        let one = tensor2(&gen_one(), &gen_one());
        let expansion = factors.iter().fold(one, |acc, f| alg.mul(&acc, &exp(alg, f)));
        UniversalR { factors, expansion }
    }

    /// Inverse by the Neumann series in `1⊗1 − R`.
    pub fn inverse(&self, alg: &Algebra<4>) -> Tensor2 {
        let one = tensor2(&gen_one(), &gen_one());
        let d = &one - &self.expansion;
        let mut acc = one.clone();
        let mut pw = one;
        let top = alg.order().expect("a truncated algebra");
        for _ in 0..top {
            pw = alg.mul(&pw, &d);
            if pw.is_zero() {
                break;
            }
            acc += &pw;
        }
        acc
    }

    /// The ħ-order-one part, i.e. the classical r-matrix.
    pub fn classical(&self) -> Tensor2 {
        self.expansion.degree_part(1)
    }
}

fn gen_one() -> Element<4> {
    Element::basis(crate::algebra::linear::Mono::one())
}

/// The universal R-matrix of each family:
/// `U_z`: `exp(−z A+⊗A) exp(z A⊗A+)`;
/// II n: `exp(−M⊗W) exp(W⊗M)`;
/// II s: `exp(−z(A⊗M + M⊗A)) exp(2z A-⊗A+')`.
pub fn universal_r(family: QuantumFamily, alg: &Algebra<4>) -> UniversalR {
    let z = p(Param::Z);
    let factors = match family {
        QuantumFamily::Uz => vec![tensor2(&gen(1), &gen(0)).scale(&-&z), tensor2(&gen(0), &gen(1)).scale(&z)],
        QuantumFamily::IIn => {
            let w = w_element();
            vec![-&tensor2(&gen(3), &w), tensor2(&w, &gen(3))]
        }
        QuantumFamily::IIs => {
            let sym = &tensor2(&gen(0), &gen(3)) + &tensor2(&gen(3), &gen(0));
            vec![sym.scale(&-&z), tensor2(&gen(2), &gen(1)).scale(&(&z * &Coefficient::int(2)))]
        }
    };
    UniversalR::from_factors(alg, factors)
}

/// Alternative factorizations that must agree with [`universal_r`]:
/// II n as `exp(x A∧M + β+ A+∧M + y+ A-∧M)`, II s with the symmetric
/// exponent split into two factors.
pub fn alternative_r(family: QuantumFamily, alg: &Algebra<4>) -> Option<UniversalR> {
    let z = p(Param::Z);
    match family {
        QuantumFamily::Uz => None,
        QuantumFamily::IIn => Some(UniversalR::from_factors(alg, vec![wedge(&w_element(), &gen(3))])),
        QuantumFamily::IIs => Some(UniversalR::from_factors(
            alg,
            vec![
                tensor2(&gen(0), &gen(3)).scale(&-&z),
                tensor2(&gen(3), &gen(0)).scale(&-&z),
                tensor2(&gen(2), &gen(1)).scale(&(&z * &Coefficient::int(2))),
            ],
        )),
    }
}

/// The classical r-matrix each R should start with.
pub fn expected_classical(family: QuantumFamily) -> Tensor2 {
    let z = p(Param::Z);
    match family {
        QuantumFamily::Uz => wedge(&gen(0), &gen(1)).scale(&z),
        QuantumFamily::IIn => wedge(&w_element(), &gen(3)),
        QuantumFamily::IIs => {
            let sym = &tensor2(&gen(0), &gen(3)) + &tensor2(&gen(3), &gen(0));
            &sym.scale(&-&z) + &tensor2(&gen(2), &gen(1)).scale(&(&z * &Coefficient::int(2)))
        }
    }
}

fn residual<B: crate::algebra::linear::Basis<4>>(label: &str, x: &crate::algebra::linear::LinComb<B>, names: &[&str]) -> String {
    let low = x.min_degree();
    format!("{label}: lowest failing order {low}: {}", render(&x.degree_part(low), names, Style::Text))
}

/// `R₁₂R₁₃R₂₃ = R₂₃R₁₃R₁₂` in the deformed triple tensor algebra.
pub fn qybe_defects(h: &Quantum, r: &UniversalR) -> Vec<String> {
    let alg = &h.alg;
    let (r12, r13, r23) = (embed(&r.expansion, 0, 1), embed(&r.expansion, 0, 2), embed(&r.expansion, 1, 2));
    let (lhs, rhs) = rayon::join(
        || alg.mul(&alg.mul(&r12, &r13), &r23),
        || alg.mul(&alg.mul(&r23, &r13), &r12),
    );
    let d = &lhs - &rhs;
    if d.is_zero() {
        Vec::new()
    } else {
        vec![residual("QYBE", &d, h.names())]
    }
}

/// `R Δ(X) R⁻¹ = σ∘Δ(X)` for the four generators, plus `R R⁻¹ = 1⊗1`.
pub fn intertwining_defects(h: &Quantum, r: &UniversalR) -> Vec<String> {
    let alg = &h.alg;
    let inv = r.inverse(alg);
    let mut out = Vec::new();
    let one = tensor2(&gen_one(), &gen_one());
    let d = &alg.mul(&r.expansion, &inv) - &one;
    if !d.is_zero() {
        out.push(residual("R R⁻¹", &d, h.names()));
    }
    let per: Vec<String> = (0..4)
        .into_par_iter()
        .filter_map(|i| {
            let dx = h.delta(&gen(i));
            let lhs = alg.mul(&alg.mul(&r.expansion, &dx), &inv);
            let d = &lhs - &flip(&dx);
            (!d.is_zero()).then(|| residual(&format!("intertwining on {}", h.names()[i]), &d, h.names()))
        })
        .collect();
    out.extend(per);
    out
}

/// Agreement of the alternative factorization and the classical limit.
pub fn expansion_defects(family: QuantumFamily, h: &Quantum, r: &UniversalR) -> Vec<String> {
    let mut out = Vec::new();
    let c = &r.classical() - &h.alg.truncate(&expected_classical(family));
    if !c.is_zero() {
        out.push(format!("classical part differs by {}", render(&c, h.names(), Style::Text)));
    }
    if !r.expansion.degree_part(0).eq(&tensor2(&gen_one(), &gen_one())) {
        out.push("order-zero part is not 1⊗1".into());
    }
    if let Some(alt) = alternative_r(family, &h.alg) {
        let d = &alt.expansion - &r.expansion;
        if !d.is_zero() {
            out.push(residual("factorizations differ", &d, h.names()));
        }
    }
    out
}

/// The two conjugation steps behind the `U_z` intertwining on `A-`:
/// `e^{zA⊗A+} Δ(A-) e^{−zA⊗A+} = Δ₀(A-)` and
/// `e^{−zA+⊗A} Δ₀(A-) e^{zA+⊗A} = σ∘Δ(A-)`.
pub fn uz_conjugation_steps(h: &Quantum) -> Vec<String> {
    let alg = &h.alg;
    let z = p(Param::Z);
    let am = gen(2);
    let d0 = &left(&am) + &right(&am);
    let first = conjugate(alg, &tensor2(&gen(0), &gen(1)).scale(&z), &h.delta(&am));
    let second = conjugate(alg, &tensor2(&gen(1), &gen(0)).scale(&-&z), &d0);
    let mut out = Vec::new();
    let a = &first - &d0;
    if !a.is_zero() {
        out.push(residual("first conjugation", &a, h.names()));
    }
    let b = &second - &flip(&h.delta(&am));
    if !b.is_zero() {
        out.push(residual("second conjugation", &b, h.names()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn universal_r_holds_at_low_order() {
        for f in QuantumFamily::ALL {
            let h = f.build(3);
            let r = universal_r(f, &h.alg);
            assert!(expansion_defects(f, &h, &r).is_empty(), "{f:?}: {:?}", expansion_defects(f, &h, &r));
            assert!(qybe_defects(&h, &r).is_empty(), "{f:?}");
            let i = intertwining_defects(&h, &r);
            assert!(i.is_empty(), "{f:?}: {i:?}");
        }
    }

    #[test]
    fn uz_two_step_conjugation() {
        assert!(uz_conjugation_steps(&QuantumFamily::Uz.build(4)).is_empty());
    }

    #[test]
    fn flipped_r_fails_intertwining() {
        let h = QuantumFamily::Uz.build(2);
        let r = universal_r(QuantumFamily::Uz, &h.alg);
        let bad = UniversalR { factors: vec![], expansion: flip(&r.expansion) };
        assert!(!intertwining_defects(&h, &bad).is_empty());
    }
}
