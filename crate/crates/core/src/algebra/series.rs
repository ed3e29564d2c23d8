//! Truncated power series of algebra elements.
//!
//! Every helper evaluates `Σ_k c_k x^k` for a coefficient sequence `c_k`
//! whose ħ-valuation grows with `k`, stopping once the remaining terms
//! vanish at the algebra's truncation order.

use num_bigint::BigInt;

use super::engine::Algebra;
use super::linear::{Basis, LinComb};
use crate::coeff::{Coefficient, Q};

fn factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::from(1), |a, b| a * b)
}

pub fn inv_factorial(k: u32) -> Coefficient {
    Coefficient::from_q(Q::new(BigInt::from(1), factorial(k)))
}

/// `Σ_{k ≤ kmax} c(k) x^k` in `alg`. When the algebra is truncated, terms are
/// dropped as soon as the power of `x` times `c(k)` is identically zero for
/// every remaining `k` (detected by valuation).
pub fn power_series<B: Basis<N>, const N: usize>(
    alg: &Algebra<N>,
    x: &LinComb<B>,
    coeff: impl Fn(u32) -> Coefficient,
    kmax: u32,
) -> LinComb<B> {
    let mut acc = LinComb::zero();
    let mut pw = LinComb::basis(B::unit());
    for k in 0..=kmax {
        let c = coeff(k);
        if !c.is_zero() {
            acc.add_scaled(&pw, &c);
        }
        if k == kmax {
            break;
        }
        pw = alg.mul(&pw, x);
        if pw.is_zero() {
            break;
        }
    }
    alg.truncate(&acc)
}

fn default_kmax<const N: usize>(alg: &Algebra<N>, extra: u32) -> u32 {
    match alg.order() {
        Some(n) => (n.max(0) as u32) + extra + 1,
        None => 64,
    }
}

/// `exp(x)` for `x` with positive ħ-valuation (or nilpotent `x`).
pub fn exp<B: Basis<N>, const N: usize>(alg: &Algebra<N>, x: &LinComb<B>) -> LinComb<B> {
    let kmax = match alg.order() {
        Some(n) => {
            let v = x.min_degree().max(1);
            (n.max(0) / v) as u32 + 1
        }
        None => 64,
    };
    power_series(alg, x, inv_factorial, kmax)
}

/// `exp(t·x)` for a scalar `t` of positive ħ-degree and an element `x` of
/// degree zero, e.g. `e^{z A₊}` with `t = z`, `x = A₊`.
pub fn exp_scaled<B: Basis<N>, const N: usize>(alg: &Algebra<N>, t: &Coefficient, x: &LinComb<B>) -> LinComb<B> {
    power_series(alg, x, |k| &t.pow(k) * &inv_factorial(k), default_kmax(alg, 0))
}

/// `(e^{t·x} − 1)/t`.
pub fn expm1_over<B: Basis<N>, const N: usize>(alg: &Algebra<N>, t: &Coefficient, x: &LinComb<B>) -> LinComb<B> {
    power_series(
        alg,
        x,
        |k| if k == 0 { Coefficient::zero() } else { &t.pow(k - 1) * &inv_factorial(k) },
        default_kmax(alg, 1),
    )
}

/// `(e^{t·x} − 1 − t·x)/t²`; with `x = M` this is `v(t)`.
pub fn v_series<B: Basis<N>, const N: usize>(alg: &Algebra<N>, t: &Coefficient, x: &LinComb<B>) -> LinComb<B> {
    power_series(
        alg,
        x,
        |k| if k < 2 { Coefficient::zero() } else { &t.pow(k - 2) * &inv_factorial(k) },
        default_kmax(alg, 2),
    )
}

/// `sinh(t·x)/t`.
pub fn sinh_over<B: Basis<N>, const N: usize>(alg: &Algebra<N>, t: &Coefficient, x: &LinComb<B>) -> LinComb<B> {
    power_series(
        alg,
        x,
        |k| if k % 2 == 0 { Coefficient::zero() } else { &t.pow(k - 1) * &inv_factorial(k) },
        default_kmax(alg, 1),
    )
}

/// `(1 − e^{t·x})/t`.
pub fn one_minus_exp_over<B: Basis<N>, const N: usize>(
    alg: &Algebra<N>,
    t: &Coefficient,
    x: &LinComb<B>,
) -> LinComb<B> {
    let s = expm1_over(alg, t, x);
    -&s
}

/// `e^{x} y e^{−x} = Σ ad_x^k(y)/k!` for `x` of positive ħ-valuation.
pub fn conjugate<B: Basis<N>, const N: usize>(alg: &Algebra<N>, x: &LinComb<B>, y: &LinComb<B>) -> LinComb<B> {
    let mut acc = y.clone();
    let mut term = y.clone();
    let mut k = 1u32;
    loop {
        term = alg.commutator(x, &term);
        if term.is_zero() {
            break;
        }
        acc.add_scaled(&term, &inv_factorial(k));
        k += 1;
        if alg.order().is_none() && k > 64 {
            panic!("adjoint series does not terminate in an untruncated algebra");
        }
    }
    alg.truncate(&acc)
}
