//! Hopf algebra structures on deformed presentations, and their axioms
//! checked to a fixed ħ-order.

pub mod families;
pub mod fun;
pub mod rewrite;

use std::collections::HashMap;
use std::sync::RwLock;

use rayon::prelude::*;

use crate::algebra::engine::Algebra;
use crate::algebra::linear::{Element, LinComb, Mono, Tensor};
use crate::algebra::render::{render, Style};
use crate::coeff::Coefficient;
use crate::report::CheckResult;

/// Generators, relations (inside `alg`), coproduct, counit and antipode.
/// When the presentation has an exponential generator `E` at index 0, the
/// images of `E^{-1}` are given separately.
pub struct HopfStructure<const N: usize> {
    pub name: String,
    pub alg: Algebra<N>,
    pub coproduct: Vec<Tensor<N, 2>>,
    pub counit: Vec<Coefficient>,
    pub antipode: Vec<Element<N>>,
    pub inverse: Option<(Tensor<N, 2>, Element<N>)>,
    pub casimir: Option<Element<N>>,
    /// Expected order-zero part of the Casimir, in normal form.
    pub classical_casimir: Option<Element<N>>,
    delta_memo: RwLock<HashMap<Mono<N>, Tensor<N, 2>>>,
}

fn residual_text<B: crate::algebra::linear::Basis<N>, const N: usize>(
    label: String,
    x: &LinComb<B>,
    names: &[&str],
) -> String {
    let low = x.min_degree();
    let part = x.degree_part(low);
    format!("{label}: lowest failing order {low}: {}", render(&part, names, Style::Text))
}

impl<const N: usize> HopfStructure<N> {
    pub fn new(
        name: impl Into<String>,
        alg: Algebra<N>,
        coproduct: Vec<Tensor<N, 2>>,
        counit: Vec<Coefficient>,
        antipode: Vec<Element<N>>,
    ) -> Self {
        HopfStructure {
            name: name.into(),
            alg,
            coproduct,
            counit,
            antipode,
            inverse: None,
            casimir: None,
            classical_casimir: None,
            delta_memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn with_inverse(mut self, delta: Tensor<N, 2>, gamma: Element<N>) -> Self {
        self.inverse = Some((delta, gamma));
        self
    }

    pub fn with_casimir(mut self, c: Element<N>, classical: Element<N>) -> Self {
        self.casimir = Some(c);
        self.classical_casimir = Some(classical);
        self
    }

    pub fn order(&self) -> Option<i32> {
        self.alg.order()
    }

    pub fn names(&self) -> &[&'static str; N] {
        &self.alg.presentation().names
    }

    fn exp_gen(&self) -> bool {
        self.alg.presentation().exp_gen
    }

    fn tensor_one() -> Tensor<N, 2> {
        Tensor::basis([Mono::one(), Mono::one()])
    }

    fn delta_mono(&self, m: &Mono<N>) -> Tensor<N, 2> {
        if let Some(hit) = self.delta_memo.read().unwrap().get(m) {
            return hit.clone();
        }
        let mut acc = Self::tensor_one();
        for i in 0..N {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let img = if e < 0 {
                &self.inverse.as_ref().expect("inverse images for the exponential generator").0
            } else {
                &self.coproduct[i]
            };
            for _ in 0..e.unsigned_abs() {
                acc = self.alg.mul(&acc, img);
            }
        }
        self.delta_memo.write().unwrap().insert(*m, acc.clone());
        acc
    }

    /// The coproduct extended as an algebra map.
    pub fn delta(&self, x: &Element<N>) -> Tensor<N, 2> {
        let mut out = Tensor::zero();
        for (m, c) in x.iter() {
            out.add_scaled(&self.delta_mono(m), c);
        }
        self.alg.truncate(&out)
    }

    pub fn epsilon(&self, x: &Element<N>) -> Coefficient {
        let mut out = Coefficient::zero();
        for (m, c) in x.iter() {
            let mut v = c.clone();
            for i in 0..N {
                let e = m.0[i];
                if e != 0 {
                    let base = if e < 0 { self.counit[i].inv() } else { self.counit[i].clone() };
                    v = &v * &base.pow(e.unsigned_abs() as u32);
                }
            }
            out += &v;
        }
        out
    }

    /// The antipode extended as an algebra anti-map.
    pub fn gamma(&self, x: &Element<N>) -> Element<N> {
        let mut out = Element::zero();
        for (m, c) in x.iter() {
            let mut acc = self.alg.one();
            for i in (0..N).rev() {
                let e = m.0[i];
                if e == 0 {
                    continue;
                }
                let img = if e < 0 {
                    &self.inverse.as_ref().expect("inverse images for the exponential generator").1
                } else {
                    &self.antipode[i]
                };
                for _ in 0..e.unsigned_abs() {
                    acc = self.alg.mul(&acc, img);
                }
            }
            out.add_scaled(&acc, c);
        }
        out
    }

    /// Generators, plus `E^{-1}` when present, as elements with labels.
    fn letters(&self) -> Vec<(String, Element<N>)> {
        let mut v: Vec<(String, Element<N>)> = (0..N).map(|i| (self.names()[i].to_string(), self.alg.gen(i))).collect();
        if self.exp_gen() {
            v.push((format!("{}^-1", self.names()[0]), Element::basis(Mono::one().bump(0, -1))));
        }
        v
    }

    /// `Δ(x_j)Δ(x_i) = Δ(x_j x_i)` for every out-of-order pair, with the
    /// right side normal ordered by the relations.
    pub fn homomorphism_defects(&self) -> Vec<String> {
        let letters = self.letters();
        let mut pairs = Vec::new();
        for (j, a) in letters.iter().enumerate() {
            for (i, b) in letters.iter().enumerate() {
                if i != j {
                    pairs.push((a, b));
                }
            }
        }
        pairs
            .par_iter()
            .filter_map(|((na, a), (nb, b))| {
                let lhs = self.alg.mul(&self.delta(a), &self.delta(b));
                let rhs = self.delta(&self.alg.mul(a, b));
                let d = &lhs - &rhs;
                (!d.is_zero()).then(|| residual_text(format!("Δ({na}{nb})"), &d, self.names()))
            })
            .collect()
    }

    fn delta_left(&self, t: &Tensor<N, 2>) -> Tensor<N, 3> {
        let mut out = Tensor::zero();
        for ([a, b], c) in t.iter() {
            for ([p, q], d) in self.delta_mono(a).iter() {
                out.add_term([*p, *q, *b], c * d);
            }
        }
        self.alg.truncate(&out)
    }

    fn delta_right(&self, t: &Tensor<N, 2>) -> Tensor<N, 3> {
        let mut out = Tensor::zero();
        for ([a, b], c) in t.iter() {
            for ([p, q], d) in self.delta_mono(b).iter() {
                out.add_term([*a, *p, *q], c * d);
            }
        }
        self.alg.truncate(&out)
    }

    pub fn coassociativity_defects(&self) -> Vec<String> {
        self.letters()
            .par_iter()
            .filter_map(|(n, x)| {
                let d = self.delta(x);
                let diff = &self.delta_left(&d) - &self.delta_right(&d);
                (!diff.is_zero()).then(|| residual_text(format!("coassociativity on {n}"), &diff, self.names()))
            })
            .collect()
    }

    pub fn counit_defects(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (n, x) in self.letters() {
            let d = self.delta(&x);
            let mut left = Element::zero();
            let mut right = Element::zero();
            for ([a, b], c) in d.iter() {
                left.add_scaled(&Element::basis(*b), &(c * &self.epsilon(&Element::basis(*a))));
                right.add_scaled(&Element::basis(*a), &(c * &self.epsilon(&Element::basis(*b))));
            }
            for (side, v) in [("left", left), ("right", right)] {
                let diff = &v - &x;
                if !diff.is_zero() {
                    out.push(residual_text(format!("{side} counit on {n}"), &diff, self.names()));
                }
            }
        }
        out
    }

    /// `m(γ⊗id)Δ(x) = ε(x)1 = m(id⊗γ)Δ(x)`.
    pub fn antipode_defects(&self) -> Vec<String> {
        self.letters()
            .par_iter()
            .flat_map_iter(|(n, x)| {
                let d = self.delta(x);
                let unit = self.alg.scalar(self.epsilon(x));
                let mut left = Element::zero();
                let mut right = Element::zero();
                for ([a, b], c) in d.iter() {
                    let (ea, eb) = (Element::basis(*a), Element::basis(*b));
                    left.add_scaled(&self.alg.mul(&self.gamma(&ea), &eb), c);
                    right.add_scaled(&self.alg.mul(&ea, &self.gamma(&eb)), c);
                }
                [("left", left), ("right", right)]
                    .into_iter()
                    .filter_map(|(side, v)| {
                        let diff = self.alg.truncate(&(&v - &unit));
                        (!diff.is_zero()).then(|| residual_text(format!("{side} antipode on {n}"), &diff, self.names()))
                    })
                    .collect::<Vec<_>>()
            })
            .collect()
    }

    /// `[C, x] = 0` for every generator, and the order-zero part of `C`
    /// equals the classical Casimir.
    pub fn center_defects(&self) -> Vec<String> {
        let Some(c) = &self.casimir else {
            return vec!["no Casimir given".into()];
        };
        let mut out: Vec<String> = (0..N)
            .into_par_iter()
            .filter_map(|i| {
                let d = self.alg.commutator(c, &self.alg.gen(i));
                (!d.is_zero()).then(|| residual_text(format!("[C,{}]", self.names()[i]), &d, self.names()))
            })
            .collect();
        if let Some(cl) = &self.classical_casimir {
            let d = &c.degree_part(0) - cl;
            if !d.is_zero() {
                out.push(format!("classical limit differs by {}", render(&d, self.names(), Style::Text)));
            }
        }
        out
    }

    /// All five checks as reports.
    pub fn verify(&self, family: &str) -> Vec<CheckResult> {
        let o = self.order();
        let mut v = vec![
            CheckResult::run(family, "homomorphism", o, || self.homomorphism_defects()),
            CheckResult::run(family, "coassociativity", o, || self.coassociativity_defects()),
            CheckResult::run(family, "counit", o, || self.counit_defects()),
            CheckResult::run(family, "antipode", o, || self.antipode_defects()),
        ];
        if self.casimir.is_some() {
            v.push(CheckResult::run(family, "center", o, || self.center_defects()));
        }
        v
    }
}
