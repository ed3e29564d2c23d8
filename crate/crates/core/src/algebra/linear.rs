//! Monomials and finite linear combinations over [`Coefficient`].

use std::collections::BTreeMap;
use std::fmt::{self, Debug};
use std::hash::Hash;

use crate::coeff::Coefficient;

/// Exponent vector of a PBW-ordered monomial `g_0^e_0 · g_1^e_1 · …`.
///
/// Exponents are signed only so that an invertible generator (index 0 of a
/// presentation with an exponential generator) can carry negative powers.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mono<const N: usize>(pub [i16; N]);

impl<const N: usize> Mono<N> {
    pub fn one() -> Self {
        Mono([0; N])
    }

    pub fn gen(i: usize) -> Self {
        let mut e = [0; N];
        e[i] = 1;
        Mono(e)
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> i32 {
        self.0.iter().map(|&e| e.unsigned_abs() as i32).sum()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.iter().position(|&e| e != 0)
    }

    pub fn bump(mut self, i: usize, by: i16) -> Self {
        self.0[i] += by;
        self
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(mut self, other: &Mono<N>) -> Self {
        for (a, b) in self.0.iter_mut().zip(other.0.iter()) {
            *a += *b;
        }
        self
    }
}

impl<const N: usize> Debug for Mono<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// A basis element of an `ARITY`-fold tensor power: one monomial per slot.
pub trait Basis<const N: usize>: Copy + Ord + Hash + Debug + Send + Sync + 'static {
    const ARITY: usize;
    fn unit() -> Self;
    fn slot(&self, i: usize) -> Mono<N>;
    fn from_slots(f: impl FnMut(usize) -> Mono<N>) -> Self;
}

impl<const N: usize> Basis<N> for Mono<N> {
    const ARITY: usize = 1;
    fn unit() -> Self {
        Mono::one()
    }
    fn slot(&self, _i: usize) -> Mono<N> {
        *self
    }
    fn from_slots(mut f: impl FnMut(usize) -> Mono<N>) -> Self {
        f(0)
    }
}

impl<const N: usize, const K: usize> Basis<N> for [Mono<N>; K] {
    const ARITY: usize = K;
    fn unit() -> Self {
        [Mono::one(); K]
    }
    fn slot(&self, i: usize) -> Mono<N> {
        self[i]
    }
    fn from_slots(f: impl FnMut(usize) -> Mono<N>) -> Self {
        std::array::from_fn(f)
    }
}

/// Finite linear combination of basis elements. Zero coefficients are never
/// stored and iteration order is the basis order, so output is deterministic.
#[derive(Clone, PartialEq, Eq)]
pub struct LinComb<B: Ord> {
    terms: BTreeMap<B, Coefficient>,
}

pub type Element<const N: usize> = LinComb<Mono<N>>;
pub type Tensor<const N: usize, const K: usize> = LinComb<[Mono<N>; K]>;

impl<B: Ord + Copy> LinComb<B> {
    pub fn zero() -> Self {
        LinComb { terms: BTreeMap::new() }
    }

    pub fn term(b: B, c: Coefficient) -> Self {
        let mut s = LinComb::zero();
        s.add_term(b, c);
        s
    }

    pub fn basis(b: B) -> Self {
        LinComb::term(b, Coefficient::one())
    }

    pub fn from_terms(it: impl IntoIterator<Item = (B, Coefficient)>) -> Self {
        let mut s = LinComb::zero();
        for (b, c) in it {
            s.add_term(b, c);
        }
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B, &Coefficient)> {
        self.terms.iter()
    }

    pub fn coeff(&self, b: &B) -> Coefficient {
        self.terms.get(b).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, b: B, c: Coefficient) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &LinComb<B>, c: &Coefficient) {
        if c.is_zero() {
            return;
        }
        let one = c.is_one();
        for (b, a) in &other.terms {
            self.add_term(*b, if one { a.clone() } else { a * c });
        }
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        if c.is_zero() {
            return LinComb::zero();
        }
        LinComb { terms: self.terms.iter().map(|(b, a)| (*b, a * c)).filter(|(_, a)| !a.is_zero()).collect() }
    }

    pub fn map_coeffs(&self, mut f: impl FnMut(&Coefficient) -> Coefficient) -> Self {
        LinComb { terms: self.terms.iter().map(|(b, a)| (*b, f(a))).filter(|(_, a)| !a.is_zero()).collect() }
    }

    pub fn map_basis<C: Ord + Copy>(&self, mut f: impl FnMut(&B) -> C) -> LinComb<C> {
        LinComb::from_terms(self.terms.iter().map(|(b, a)| (f(b), a.clone())))
    }

    /// Drops every coefficient component above ħ-order `order`.
    pub fn truncate(&self, order: Option<i32>) -> Self {
        match order {
            None => self.clone(),
            Some(n) => self.map_coeffs(|c| c.truncate(n)),
        }
    }

    /// Smallest ħ-valuation among the coefficients (`i32::MAX` for zero).
    pub fn min_degree(&self) -> i32 {
        self.terms.values().map(|c| c.min_degree()).min().unwrap_or(i32::MAX)
    }

    /// The ħ-graded view: homogeneous components keyed by marker degree.
    pub fn graded(&self) -> BTreeMap<i32, LinComb<B>> {
        let mut out: BTreeMap<i32, LinComb<B>> = BTreeMap::new();
        for (b, c) in &self.terms {
            for (d, part) in c.graded_parts() {
                out.entry(d).or_insert_with(LinComb::zero).add_term(*b, part);
            }
        }
        out
    }

    /// Homogeneous ħ-component of degree `d`.
    pub fn degree_part(&self, d: i32) -> Self {
        self.graded().remove(&d).unwrap_or_else(LinComb::zero)
    }

    pub fn subs(&self, p: crate::coeff::Param, v: &Coefficient) -> Self {
        self.map_coeffs(|c| c.subs(p, v))
    }
}

impl<B: Ord + Copy> Default for LinComb<B> {
    fn default() -> Self {
        LinComb::zero()
    }
}

impl<B: Ord + Copy> std::ops::Add for &LinComb<B> {
    type Output = LinComb<B>;
    fn add(self, rhs: &LinComb<B>) -> LinComb<B> {
        let mut s = self.clone();
        s.add_scaled(rhs, &Coefficient::one());
        s
    }
}

impl<B: Ord + Copy> std::ops::Sub for &LinComb<B> {
    type Output = LinComb<B>;
    fn sub(self, rhs: &LinComb<B>) -> LinComb<B> {
        let mut s = self.clone();
        s.add_scaled(rhs, &Coefficient::int(-1));
        s
    }
}

impl<B: Ord + Copy> std::ops::Neg for &LinComb<B> {
    type Output = LinComb<B>;
    fn neg(self) -> LinComb<B> {
        self.map_coeffs(|c| -c)
    }
}

impl<B: Ord + Copy> std::ops::AddAssign<&LinComb<B>> for LinComb<B> {
    fn add_assign(&mut self, rhs: &LinComb<B>) {
        self.add_scaled(rhs, &Coefficient::one());
    }
}

impl<B: Ord + Copy> std::ops::SubAssign<&LinComb<B>> for LinComb<B> {
    fn sub_assign(&mut self, rhs: &LinComb<B>) {
        self.add_scaled(rhs, &Coefficient::int(-1));
    }
}

impl<B: Ord + Copy + Debug> Debug for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(b, c)| format!("({c}){b:?}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Tensor product of single-slot elements.
pub fn tensor2<const N: usize>(a: &Element<N>, b: &Element<N>) -> Tensor<N, 2> {
    let mut out = Tensor::zero();
    for (ma, ca) in a.iter() {
        for (mb, cb) in b.iter() {
            out.add_term([*ma, *mb], ca * cb);
        }
    }
    out
}

pub fn tensor3<const N: usize>(a: &Element<N>, b: &Element<N>, c: &Element<N>) -> Tensor<N, 3> {
    let mut out = Tensor::zero();
    for (ma, ca) in a.iter() {
        for (mb, cb) in b.iter() {
            let cab = ca * cb;
            for (mc, cc) in c.iter() {
                out.add_term([*ma, *mb, *mc], &cab * cc);
            }
        }
    }
    out
}

/// The flip `a⊗b ↦ b⊗a`.
pub fn flip<const N: usize>(t: &Tensor<N, 2>) -> Tensor<N, 2> {
    t.map_basis(|[a, b]| [*b, *a])
}

/// Places a two-slot tensor into slots `(i, j)` of a three-slot tensor.
pub fn embed<const N: usize>(t: &Tensor<N, 2>, i: usize, j: usize) -> Tensor<N, 3> {
    t.map_basis(|[a, b]| {
        let mut s = [Mono::one(); 3];
        s[i] = *a;
        s[j] = *b;
        s
    })
}

/// `x ↦ x ⊗ 1` and `x ↦ 1 ⊗ x`.
pub fn left<const N: usize>(x: &Element<N>) -> Tensor<N, 2> {
    x.map_basis(|m| [*m, Mono::one()])
}

pub fn right<const N: usize>(x: &Element<N>) -> Tensor<N, 2> {
    x.map_basis(|m| [Mono::one(), *m])
}

pub fn one<B: Basis<N>, const N: usize>() -> LinComb<B> {
    LinComb::basis(B::unit())
}

pub fn scalar<B: Basis<N>, const N: usize>(c: Coefficient) -> LinComb<B> {
    LinComb::term(B::unit(), c)
}

/// The scalar (unit-basis) coefficient.
pub fn scalar_part<B: Basis<N>, const N: usize>(x: &LinComb<B>) -> Coefficient {
    x.coeff(&B::unit())
}
