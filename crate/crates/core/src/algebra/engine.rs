//! Normal ordering for algebras presented by commutation rules over a PBW basis.
//!
//! A [`Presentation`] lists, for each out-of-order pair `g_hi g_lo` with
//! `hi > lo`, the tail `T` in `g_hi g_lo = g_lo g_hi + T`. Generators may be
//! flagged central. Index 0 may instead be an invertible exponential
//! generator `E = e^θ`; commuting past it uses `g E^k = E^k (g − k·C_g)` where
//! `C_g = [θ, g]` must commute with θ and with `E`.
//!
//! An [`Algebra`] pairs a presentation with a truncation order and a
//! thread-safe memo of normal forms. Products are computed with an ħ-budget:
//! a factor whose coefficient already has valuation `d` is only expanded to
//! order `N − d`. This is exact provided every rule tail has non-negative
//! valuation, which holds for all presentations built in this crate.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use super::linear::{Basis, Element, LinComb, Mono};
use crate::coeff::Coefficient;

#[derive(Clone)]
pub struct Presentation<const N: usize> {
    pub names: [&'static str; N],
    pub central: [bool; N],
    /// Index 0 is `E = e^θ`, with integer (possibly negative) exponents.
    pub exp_gen: bool,
    tails: HashMap<(usize, usize), Element<N>>,
    shifts: Vec<Option<Element<N>>>,
}

impl<const N: usize> Presentation<N> {
    pub fn new(names: [&'static str; N]) -> Self {
        Presentation { names, central: [false; N], exp_gen: false, tails: HashMap::new(), shifts: vec![None; N] }
    }

    pub fn central(mut self, i: usize) -> Self {
        self.central[i] = true;
        self
    }

    /// Declares `g_hi g_lo = g_lo g_hi + tail`, i.e. `[g_hi, g_lo] = tail`.
    pub fn rule(mut self, hi: usize, lo: usize, tail: Element<N>) -> Self {
        assert!(hi > lo, "rules are stated for out-of-order pairs");
        if tail.is_zero() {
            self.tails.remove(&(hi, lo));
        } else {
            self.tails.insert((hi, lo), tail);
        }
        self
    }

    /// Declares index 0 exponential and sets `C_g = [θ, g]` for generator `g`.
    pub fn shift(mut self, g: usize, c: Element<N>) -> Self {
        self.exp_gen = true;
        self.shifts[g] = if c.is_zero() { None } else { Some(c) };
        self
    }

    pub fn exponential(mut self) -> Self {
        self.exp_gen = true;
        self
    }

    pub fn tail(&self, hi: usize, lo: usize) -> Option<&Element<N>> {
        self.tails.get(&(hi, lo))
    }

    pub fn rules(&self) -> impl Iterator<Item = ((usize, usize), &Element<N>)> {
        self.tails.iter().map(|(k, v)| (*k, v))
    }

    pub fn shift_of(&self, g: usize) -> Option<&Element<N>> {
        self.shifts[g].as_ref()
    }
}

type MemoKey<const N: usize> = (u8, Mono<N>, i32);
type PairKey<const N: usize> = (Mono<N>, Mono<N>, i32);

pub struct Algebra<const N: usize> {
    pres: Presentation<N>,
    order: Option<i32>,
    gen_memo: RwLock<HashMap<MemoKey<N>, Arc<Element<N>>>>,
    mono_memo: RwLock<HashMap<PairKey<N>, Arc<Element<N>>>>,
}

const EXACT: i32 = i32::MAX;

impl<const N: usize> Algebra<N> {
    pub fn new(pres: Presentation<N>, order: Option<i32>) -> Self {
        Algebra { pres, order, gen_memo: RwLock::new(HashMap::new()), mono_memo: RwLock::new(HashMap::new()) }
    }

    pub fn presentation(&self) -> &Presentation<N> {
        &self.pres
    }

    pub fn order(&self) -> Option<i32> {
        self.order
    }

    fn top(&self) -> i32 {
        self.order.unwrap_or(EXACT)
    }

    pub fn gen(&self, i: usize) -> Element<N> {
        Element::basis(Mono::gen(i))
    }

    pub fn one(&self) -> Element<N> {
        Element::basis(Mono::one())
    }

    pub fn scalar(&self, c: Coefficient) -> Element<N> {
        Element::term(Mono::one(), c)
    }

    pub fn memo_size(&self) -> usize {
        self.gen_memo.read().unwrap().len() + self.mono_memo.read().unwrap().len()
    }

    fn budget_after(budget: i32, c: &Coefficient) -> i32 {
        if budget == EXACT {
            EXACT
        } else {
            budget.saturating_sub(c.min_degree())
        }
    }

    fn trunc(budget: i32, c: Coefficient) -> Coefficient {
        if budget == EXACT {
            c
        } else {
            c.truncate(budget)
        }
    }

    /// Strips exponents of central generators (other than `keep`).
    fn split_central(&self, m: &Mono<N>) -> (Mono<N>, Mono<N>) {
        let mut core = *m;
        let mut cen = Mono::one();
        for i in 0..N {
            if self.pres.central[i] && core.0[i] != 0 {
                cen.0[i] = core.0[i];
                core.0[i] = 0;
            }
        }
        (core, cen)
    }

    /// `g · m` in normal form, truncated to ħ-order `budget`.
    fn left_gen(&self, g: usize, m: &Mono<N>, budget: i32) -> Arc<Element<N>> {
        if budget < 0 {
            return Arc::new(Element::zero());
        }
        if self.pres.central[g] {
            return Arc::new(Element::basis(m.bump(g, 1)));
        }
        let (core, cen) = self.split_central(m);
        match core.first() {
            None => return Arc::new(Element::basis(m.bump(g, 1))),
            Some(j) if j >= g => return Arc::new(Element::basis(m.bump(g, 1))),
            _ => {}
        }
        let key = (g as u8, core, budget);
        if let Some(hit) = self.gen_memo.read().unwrap().get(&key) {
            return Arc::new(add_mono(hit, &cen));
        }
        let res = self.left_gen_uncached(g, &core, budget);
        let res = Arc::new(res);
        self.gen_memo.write().unwrap().insert(key, res.clone());
        Arc::new(add_mono(&res, &cen))
    }

    fn left_gen_uncached(&self, g: usize, core: &Mono<N>, budget: i32) -> Element<N> {
        let h = core.first().unwrap();
        if h == 0 && self.pres.exp_gen {
            let k = core.0[0];
            let mut rest = *core;
            rest.0[0] = 0;
            let mut x = (*self.left_gen(g, &rest, budget)).clone();
            if let Some(c) = self.pres.shift_of(g) {
                let cr = self.mul_elem_mono(c, &rest, budget);
                x.add_scaled(&cr, &Coefficient::int(-(k as i64)));
            }
            return x.map_basis(|mm| mm.bump(0, k));
        }
        let reduced = core.bump(h, -1);
        let x = self.left_gen(g, &reduced, budget);
        let mut out = Element::zero();
        for (mm, c) in x.iter() {
            let b = Self::budget_after(budget, c);
            let y = self.left_gen(h, mm, b);
            for (m2, c2) in y.iter() {
                out.add_term(*m2, Self::trunc(budget, c * c2));
            }
        }
        if let Some(t) = self.pres.tail(g, h) {
            let tr = self.mul_elem_mono(t, &reduced, budget);
            out += &tr;
        }
        out
    }

    fn mul_elem_mono(&self, a: &Element<N>, m: &Mono<N>, budget: i32) -> Element<N> {
        let mut out = Element::zero();
        for (ma, ca) in a.iter() {
            let b = Self::budget_after(budget, ca);
            let p = self.mono_mul(ma, m, b);
            for (mp, cp) in p.iter() {
                out.add_term(*mp, Self::trunc(budget, ca * cp));
            }
        }
        out
    }

    /// `a · m` for PBW monomials, in normal form to ħ-order `budget`.
    pub fn mono_mul(&self, a: &Mono<N>, m: &Mono<N>, budget: i32) -> Arc<Element<N>> {
        if budget < 0 {
            return Arc::new(Element::zero());
        }
        if a.is_one() {
            return Arc::new(Element::basis(*m));
        }
        if m.is_one() {
            return Arc::new(Element::basis(*a));
        }
        // a single letter or a prefix that is already in order needs no work
        let last_a = (0..N).rev().find(|&i| a.0[i] != 0).unwrap();
        if let Some(fm) = self.split_central(m).0.first() {
            if fm >= last_a {
                return Arc::new(Element::basis(a.add(m)));
            }
        } else {
            return Arc::new(Element::basis(a.add(m)));
        }
        let key = (*a, *m, budget);
        if let Some(hit) = self.mono_memo.read().unwrap().get(&key) {
            return hit.clone();
        }
        let mut cur = Element::basis(*m);
        for g in (0..N).rev() {
            let e = a.0[g];
            if e == 0 {
                continue;
            }
            if g == 0 && self.pres.exp_gen {
                cur = cur.map_basis(|mm| mm.bump(0, e));
                continue;
            }
            assert!(e > 0, "negative exponent on a non-invertible generator");
            for _ in 0..e {
                let mut next = Element::zero();
                for (mm, c) in cur.iter() {
                    let b = Self::budget_after(budget, c);
                    let y = self.left_gen(g, mm, b);
                    for (m2, c2) in y.iter() {
                        next.add_term(*m2, Self::trunc(budget, c * c2));
                    }
                }
                cur = next;
            }
        }
        let res = Arc::new(cur);
        self.mono_memo.write().unwrap().insert(key, res.clone());
        res
    }

    /// Product in the algebra or its tensor powers (slotwise).
    pub fn mul<B: Basis<N>>(&self, a: &LinComb<B>, b: &LinComb<B>) -> LinComb<B> {
        let top = self.top();
        let mut out = LinComb::zero();
        let mut rhs: Vec<(i32, &B, &Coefficient)> = b.iter().map(|(bb, cb)| (cb.min_degree(), bb, cb)).collect();
        rhs.sort_by_key(|t| t.0);
        for (ba, ca) in a.iter() {
            let room = Self::budget_after(top, ca);
            for &(db, bb, cb) in &rhs {
                if db > room {
                    break;
                }
                let c = Self::trunc(top, ca * cb);
                if c.is_zero() {
                    continue;
                }
                let budget = Self::budget_after(top, &c);
                self.accumulate_product(&mut out, ba, bb, &c, budget, top);
            }
        }
        out
    }

    fn accumulate_product<B: Basis<N>>(
        &self,
        out: &mut LinComb<B>,
        ba: &B,
        bb: &B,
        c: &Coefficient,
        budget: i32,
        top: i32,
    ) {
        let k = B::ARITY;
        let parts: Vec<Arc<Element<N>>> = (0..k).map(|i| self.mono_mul(&ba.slot(i), &bb.slot(i), budget)).collect();
        if parts.iter().any(|p| p.is_zero()) {
            return;
        }
        let lists: Vec<Vec<(&Mono<N>, &Coefficient)>> = parts.iter().map(|p| p.iter().collect()).collect();
        let mut idx = vec![0usize; k];
        loop {
            let mut coef = c.clone();
            let mut zero = false;
            for i in 0..k {
                let ci = lists[i][idx[i]].1;
                if !ci.is_one() {
                    coef = Self::trunc(top, &coef * ci);
                    if coef.is_zero() {
                        zero = true;
                        break;
                    }
                }
            }
            if !zero {
                out.add_term(B::from_slots(|i| *lists[i][idx[i]].0), coef);
            }
            let mut i = k;
            loop {
                if i == 0 {
                    return;
                }
                i -= 1;
                idx[i] += 1;
                if idx[i] < lists[i].len() {
                    break;
                }
                idx[i] = 0;
            }
        }
    }

    pub fn pow<B: Basis<N>>(&self, a: &LinComb<B>, k: u32) -> LinComb<B> {
        let mut acc = LinComb::basis(B::unit());
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }

    pub fn commutator<B: Basis<N>>(&self, a: &LinComb<B>, b: &LinComb<B>) -> LinComb<B> {
        &self.mul(a, b) - &self.mul(b, a)
    }

    /// Product of an ordered word of generators.
    pub fn word(&self, letters: &[usize]) -> Element<N> {
        let mut acc = self.one();
        for &g in letters {
            acc = self.mul(&acc, &self.gen(g));
        }
        acc
    }

    /// Multiplication map `a⊗b ↦ ab`.
    pub fn multiply_slots(&self, t: &LinComb<[Mono<N>; 2]>) -> Element<N> {
        let top = self.top();
        let mut out = Element::zero();
        for ([a, b], c) in t.iter() {
            let budget = Self::budget_after(top, c);
            let p = self.mono_mul(a, b, budget);
            for (m, cp) in p.iter() {
                out.add_term(*m, Self::trunc(top, c * cp));
            }
        }
        out
    }

    pub fn truncate<B: Basis<N>>(&self, a: &LinComb<B>) -> LinComb<B> {
        a.truncate(self.order)
    }
}

fn add_mono<const N: usize>(e: &Element<N>, m: &Mono<N>) -> Element<N> {
    if m.is_one() {
        return e.clone();
    }
    e.map_basis(|mm| mm.add(m))
}
