//! A word-rewriting normal form, independent of the PBW engine, used to test
//! that reduction is confluent.
//!
//! Words are sequences of letters; a letter is a generator index, or the
//! inverse of the exponential generator. One step rewrites a single adjacent
//! out-of-order pair using the presentation's tails and shifts.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::engine::Presentation;
use crate::algebra::linear::{Element, Mono};
use crate::coeff::Coefficient;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Gen(u8),
    /// `E^{-1}` for the exponential generator at index 0.
    Inv,
}

impl Letter {
    fn index(self) -> usize {
        match self {
            Letter::Gen(i) => i as usize,
            Letter::Inv => 0,
        }
    }
}

pub type Word = Vec<Letter>;

#[derive(Clone, Copy, Debug)]
pub enum Strategy {
    Leftmost,
    Rightmost,
    Random(u64),
}

pub struct Rewriter<'a, const N: usize> {
    pres: &'a Presentation<N>,
    order: Option<i32>,
}

fn word_of<const N: usize>(m: &Mono<N>) -> Word {
    let mut w = Vec::new();
    for (i, &e) in m.0.iter().enumerate() {
        let l = if e < 0 { Letter::Inv } else { Letter::Gen(i as u8) };
        w.extend(std::iter::repeat_n(l, e.unsigned_abs() as usize));
    }
    w
}

impl<'a, const N: usize> Rewriter<'a, N> {
    pub fn new(pres: &'a Presentation<N>, order: Option<i32>) -> Self {
        Rewriter { pres, order }
    }

    fn exp(&self) -> bool {
        self.pres.exp_gen
    }

    fn trunc(&self, c: Coefficient) -> Coefficient {
        match self.order {
            Some(n) => c.truncate(n),
            None => c,
        }
    }

    /// Whether `a b` must be rewritten.
    fn redex(&self, a: Letter, b: Letter) -> bool {
        if self.exp() && a.index() == 0 && b.index() == 0 {
            return a != b;
        }
        a.index() > b.index()
    }

    fn redexes(&self, w: &Word) -> Vec<usize> {
        (0..w.len().saturating_sub(1)).filter(|&i| self.redex(w[i], w[i + 1])).collect()
    }

    /// The words replacing `a b`.
    fn rewrite_pair(&self, a: Letter, b: Letter) -> Vec<(Word, Coefficient)> {
        let one = Coefficient::one();
        if self.exp() && a.index() == 0 && b.index() == 0 {
            return vec![(Vec::new(), one)];
        }
        let mut out = vec![(vec![b, a], one)];
        let (hi, lo) = (a.index(), b.index());
        if self.exp() && lo == 0 {
            // g E = E (g − C_g),  g E⁻¹ = E⁻¹ (g + C_g)
            if let Some(c) = self.pres.shift_of(hi) {
                let sign = if b == Letter::Inv { Coefficient::one() } else { Coefficient::int(-1) };
                for (m, k) in c.iter() {
                    let mut w = vec![b];
                    w.extend(word_of(m));
                    out.push((w, &sign * k));
                }
            }
        } else if let Some(t) = self.pres.tail(hi, lo) {
            for (m, k) in t.iter() {
                out.push((word_of(m), k.clone()));
            }
        }
        out
    }

    fn step(&self, w: &Word, pos: usize) -> Vec<(Word, Coefficient)> {
        self.rewrite_pair(w[pos], w[pos + 1])
            .into_iter()
            .map(|(mid, c)| {
                let mut nw = w[..pos].to_vec();
                nw.extend(mid);
                nw.extend_from_slice(&w[pos + 2..]);
                (nw, c)
            })
            .collect()
    }

    /// Reduces a combination of words to normal form with the given strategy.
    pub fn normal_form(&self, start: BTreeMap<Word, Coefficient>, strategy: Strategy) -> Element<N> {
        let mut rng = match strategy {
            Strategy::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
            _ => None,
        };
        let mut pending = start;
        let mut done = Element::zero();
        while let Some((w, c)) = pending.pop_first() {
            let c = self.trunc(c);
            if c.is_zero() {
                continue;
            }
            let r = self.redexes(&w);
            if r.is_empty() {
                let mut m = Mono::one();
                for l in &w {
                    m = m.bump(l.index(), if *l == Letter::Inv { -1 } else { 1 });
                }
                done.add_term(m, c);
                continue;
            }
            let pos = match (&strategy, rng.as_mut()) {
                (Strategy::Leftmost, _) => r[0],
                (Strategy::Rightmost, _) => r[r.len() - 1],
                (_, Some(g)) => r[g.gen_range(0..r.len())],
                _ => unreachable!(),
            };
            for (nw, k) in self.step(&w, pos) {
                let v = self.trunc(&c * &k);
                if v.is_zero() {
                    continue;
                }
                let e = pending.entry(nw).or_insert_with(Coefficient::zero);
                *e = &*e + &v;
            }
        }
        done
    }

    pub fn reduce(&self, w: &Word, strategy: Strategy) -> Element<N> {
        self.normal_form(BTreeMap::from([(w.clone(), Coefficient::one())]), strategy)
    }

    /// Normal forms obtained by taking each possible first step, then
    /// finishing leftmost.
    pub fn all_first_steps(&self, w: &Word) -> Vec<Element<N>> {
        self.redexes(w)
            .into_iter()
            .map(|pos| self.normal_form(self.step(w, pos).into_iter().collect(), Strategy::Leftmost))
            .collect()
    }

    pub fn alphabet(&self) -> Vec<Letter> {
        let mut v: Vec<Letter> = (0..N).map(|i| Letter::Gen(i as u8)).collect();
        if self.exp() {
            v.push(Letter::Inv);
        }
        v
    }

    pub fn words(&self, len: usize) -> Vec<Word> {
        let a = self.alphabet();
        let mut out: Vec<Word> = vec![Vec::new()];
        for _ in 0..len {
            out = out.iter().flat_map(|w| a.iter().map(move |l| [w.clone(), vec![*l]].concat())).collect();
        }
        out
    }

    pub fn random_word(&self, len: usize, rng: &mut impl Rng) -> Word {
        let a = self.alphabet();
        (0..len).map(|_| a[rng.gen_range(0..a.len())]).collect()
    }
}

/// The word as a product of elements, for comparison with the engine.
pub fn word_element<const N: usize>(w: &Word) -> Vec<Element<N>> {
    w.iter()
        .map(|l| match l {
            Letter::Gen(i) => Element::basis(Mono::gen(*i as usize)),
            Letter::Inv => Element::basis(Mono::one().bump(0, -1)),
        })
        .collect()
}

/// Words on which reduction strategies, first-step choices or the engine
/// disagree.
pub fn confluence_failures<const N: usize>(
    alg: &crate::algebra::engine::Algebra<N>,
    words: &[Word],
    seeds: &[u64],
    exhaustive_first_step: bool,
) -> Vec<String> {
    use rayon::prelude::*;
    let rw = Rewriter::new(alg.presentation(), alg.order());
    words
        .par_iter()
        .filter_map(|w| {
            let reference = rw.reduce(w, Strategy::Leftmost);
            let mut others = vec![rw.reduce(w, Strategy::Rightmost)];
            others.extend(seeds.iter().map(|s| rw.reduce(w, Strategy::Random(*s))));
            if exhaustive_first_step {
                others.extend(rw.all_first_steps(w));
            }
            let engine = word_element::<N>(w).iter().fold(alg.one(), |acc, x| alg.mul(&acc, x));
            others.push(engine);
            others.iter().any(|o| *o != reference).then(|| format!("{w:?}"))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::uea::oscillator;
    use crate::hopf::{families, fun};

    #[test]
    fn oscillator_degree_three_is_confluent() {
        let alg = oscillator();
        let rw = Rewriter::new(alg.presentation(), None);
        assert!(confluence_failures(alg, &rw.words(3), &[1, 2], true).is_empty());
    }

    #[test]
    fn deformed_degree_three_is_confluent() {
        let h = families::uz(3);
        let rw = Rewriter::new(h.alg.presentation(), h.order());
        assert!(confluence_failures(&h.alg, &rw.words(3), &[7], true).is_empty());
        let g = fun::build(fun::FunFamily::Uz, 3);
        let rw = Rewriter::new(g.alg.presentation(), g.order());
        assert!(confluence_failures(&g.alg, &rw.words(3), &[7], true).is_empty());
    }

    #[test]
    fn inverse_letters_cancel() {
        let g = fun::build(fun::FunFamily::Uz, 2);
        let rw = Rewriter::new(g.alg.presentation(), g.order());
        let nf = rw.reduce(&vec![Letter::Gen(0), Letter::Gen(2), Letter::Inv], Strategy::Leftmost);
        assert_eq!(nf, g.alg.mul(&g.alg.mul(&g.alg.gen(0), &g.alg.gen(2)), &Element::basis(Mono::one().bump(0, -1))));
    }
}
