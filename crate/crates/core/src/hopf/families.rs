//! The three quantum oscillator algebras: `U_z` (non-standard, primitive
//! `A+`), the three-parameter type II non-standard algebra and the standard
//! type II algebra in the basis `A, A+', A-, M`.

use crate::algebra::engine::{Algebra, Presentation};
use crate::algebra::linear::{left, right, tensor2, Element, Tensor};
use crate::algebra::series::{exp_scaled, expm1_over, sinh_over, v_series};
use crate::algebra::uea::{self, oscillator_at};
use crate::coeff::{Coefficient, Param};

use super::HopfStructure;

pub type Quantum = HopfStructure<4>;

const A: usize = 0;
const AP: usize = 1;
const AM: usize = 2;
const M: usize = 3;

fn p(x: Param) -> Coefficient {
    Coefficient::param(x)
}

fn gen(i: usize) -> Element<4> {
    oscillator_at(0).gen(i)
}

fn primitive(x: &Element<4>) -> Tensor<4, 2> {
    &left(x) + &right(x)
}

fn neg(x: &Element<4>) -> Element<4> {
    -x
}

/// `U_z`: `[A,A+] = (e^{zA+}−1)/z`, `[A,A-] = −A-`, `[A-,A+] = M e^{zA+}`.
pub fn uz(order: i32) -> Quantum {
    let z = p(Param::Z);
    let base = oscillator_at(order);
    let ez = exp_scaled(base, &z, &gen(AP));
    let pres = Presentation::new(["A", "Ap", "Am", "M"])
        .central(M)
        .rule(AP, A, neg(&expm1_over(base, &z, &gen(AP))))
        .rule(AM, A, gen(AM))
        .rule(AM, AP, base.mul(&ez, &gen(M)));
    let alg = Algebra::new(pres, Some(order));
    let ez = exp_scaled(&alg, &z, &gen(AP));
    let emz = exp_scaled(&alg, &(-&z), &gen(AP));
    let m_ez = alg.mul(&gen(M), &ez);
    let coproduct = vec![
        &right(&gen(A)) + &tensor2(&gen(A), &ez),
        primitive(&gen(AP)),
        &(&right(&gen(AM)) + &tensor2(&gen(AM), &ez)) + &tensor2(&gen(A), &m_ez).scale(&z),
        primitive(&gen(M)),
    ];
    let a_m_emz = alg.mul(&alg.mul(&gen(A), &gen(M)), &emz);
    let antipode = vec![
        neg(&alg.mul(&gen(A), &emz)),
        neg(&gen(AP)),
        &neg(&alg.mul(&gen(AM), &emz)) + &a_m_emz.scale(&z),
        neg(&gen(M)),
    ];
    let f = neg(&expm1_over(&alg, &(-&z), &gen(AP)));
    let mut c = alg.mul(&gen(A), &gen(M)).scale(&Coefficient::int(2));
    c += &alg.mul(&f, &gen(AM));
    c += &alg.mul(&gen(AM), &f);
    let counit = vec![Coefficient::zero(); 4];
    HopfStructure::new("Uz", alg, coproduct, counit, antipode).with_casimir(alg_trunc(c, order), uea::casimir())
}

fn alg_trunc(c: Element<4>, order: i32) -> Element<4> {
    c.truncate(Some(order))
}

/// The type II non-standard algebra with parameters `x, β+, y+`:
/// `[A,A+] = A+ − y+ v(−x)`, `[A,A-] = −A- − β+ v(x)`, `[A-,A+] = M`,
/// where `v(t) = (e^{tM} − 1 − tM)/t²`.
pub fn ii_n(order: i32) -> Quantum {
    let (x, bp, yp) = (p(Param::X), p(Param::BETA_P), p(Param::Y_P));
    let base = oscillator_at(order);
    let v = |t: &Coefficient| v_series(base, t, &gen(M));
    let pres = Presentation::new(["A", "Ap", "Am", "M"])
        .central(M)
        .rule(AP, A, &neg(&gen(AP)) + &v(&-&x).scale(&yp))
        .rule(AM, A, &gen(AM) + &v(&x).scale(&bp))
        .rule(AM, AP, gen(M));
    let alg = Algebra::new(pres, Some(order));
    let e_x = exp_scaled(&alg, &x, &gen(M));
    let e_mx = exp_scaled(&alg, &(-&x), &gen(M));
    // (1 − e^{−xM})/x and (1 − e^{xM})/x
    let minus_side = expm1_over(&alg, &(-&x), &gen(M));
    let plus_side = neg(&expm1_over(&alg, &x, &gen(M)));
    let mut da = primitive(&gen(A));
    da += &tensor2(&gen(AP), &minus_side).scale(&bp);
    da += &tensor2(&gen(AM), &plus_side).scale(&yp);
    let coproduct = vec![
        da,
        &right(&gen(AP)) + &tensor2(&gen(AP), &e_mx),
        &right(&gen(AM)) + &tensor2(&gen(AM), &e_x),
        primitive(&gen(M)),
    ];
    let mut ga = neg(&gen(A));
    ga -= &alg.mul(&gen(AP), &plus_side).scale(&bp);
    ga -= &alg.mul(&gen(AM), &minus_side).scale(&yp);
    let antipode = vec![
        ga,
        neg(&alg.mul(&gen(AP), &e_x)),
        neg(&alg.mul(&gen(AM), &e_mx)),
        neg(&gen(M)),
    ];
    let mut c = alg.mul(&gen(A), &gen(M)).scale(&Coefficient::int(2));
    c -= &alg.mul(&gen(AP), &gen(AM));
    c -= &alg.mul(&gen(AM), &gen(AP));
    c += &alg.mul(&v_series(&alg, &-&x, &gen(M)), &gen(AM)).scale(&(&yp * &Coefficient::int(2)));
    c -= &alg.mul(&v_series(&alg, &x, &gen(M)), &gen(AP)).scale(&(&bp * &Coefficient::int(2)));
    let counit = vec![Coefficient::zero(); 4];
    HopfStructure::new("IIn", alg, coproduct, counit, antipode).with_casimir(alg_trunc(c, order), uea::casimir())
}

/// The standard type II algebra on `A, A+' = e^{−zM}A+, A-, M`:
/// `[A,A+'] = A+'`, `[A,A-] = −A-`, `[A-,A+'] = sinh(zM)/z`.
pub fn ii_s(order: i32) -> Quantum {
    let z = p(Param::Z);
    let base = oscillator_at(order);
    let pres = Presentation::new(["A", "Ap'", "Am", "M"])
        .central(M)
        .rule(AP, A, neg(&gen(AP)))
        .rule(AM, A, gen(AM))
        .rule(AM, AP, sinh_over(base, &z, &gen(M)));
    let alg = Algebra::new(pres, Some(order));
    let e_z = exp_scaled(&alg, &z, &gen(M));
    let e_mz = exp_scaled(&alg, &(-&z), &gen(M));
    let coproduct = vec![
        primitive(&gen(A)),
        &tensor2(&e_mz, &gen(AP)) + &left(&gen(AP)),
        &right(&gen(AM)) + &tensor2(&gen(AM), &e_z),
        primitive(&gen(M)),
    ];
    let antipode = vec![
        neg(&gen(A)),
        neg(&alg.mul(&gen(AP), &e_z)),
        neg(&alg.mul(&gen(AM), &e_mz)),
        neg(&gen(M)),
    ];
    let mut c = alg.mul(&gen(A), &sinh_over(&alg, &z, &gen(M))).scale(&Coefficient::int(2));
    c -= &alg.mul(&gen(AP), &gen(AM));
    c -= &alg.mul(&gen(AM), &gen(AP));
    let counit = vec![Coefficient::zero(); 4];
    HopfStructure::new("IIs", alg, coproduct, counit, antipode).with_casimir(alg_trunc(c, order), uea::casimir())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum QuantumFamily {
    Uz,
    IIn,
    IIs,
}

impl QuantumFamily {
    pub const ALL: [QuantumFamily; 3] = [QuantumFamily::Uz, QuantumFamily::IIn, QuantumFamily::IIs];

    pub fn key(self) -> &'static str {
        match self {
            QuantumFamily::Uz => "Uz",
            QuantumFamily::IIn => "IIn",
            QuantumFamily::IIs => "IIs",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.key().eq_ignore_ascii_case(s))
    }

    pub fn build(self, order: i32) -> Quantum {
        match self {
            QuantumFamily::Uz => uz(order),
            QuantumFamily::IIn => ii_n(order),
            QuantumFamily::IIs => ii_s(order),
        }
    }
}
