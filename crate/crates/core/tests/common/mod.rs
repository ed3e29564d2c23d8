//! Independent oracles: the oscillator Lie algebra by its structure
//! constants, degree-one tensors as coefficient maps, and the 3×3 matrix
//! representation with coefficient entries.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_rational::BigRational;
use oscq::algebra::expr::Context;
use oscq::algebra::linear::{scalar_part, Basis, Element, LinComb, Mono};
use oscq::coeff::{Coefficient, Param};
use oscq::hopf::families::QuantumFamily;
use oscq::hopf::fun::{self, FunFamily, QuantumGroup, A_M, A_P, E, M as FM, THETA};
use oscq::poisson::GroupFunction;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub const A: usize = 0;
pub const AP: usize = 1;
pub const AM: usize = 2;
pub const M: usize = 3;

pub fn c(n: i64) -> Coefficient {
    Coefficient::int(n)
}

pub fn p(param: Param) -> Coefficient {
    Coefficient::param(param)
}

/// `[e_i, e_j]` from `[A,A+] = A+`, `[A,A-] = −A-`, `[A-,A+] = M`.
pub fn lie(i: usize, j: usize) -> [i64; 4] {
    let mut out = [0; 4];
    match (i, j) {
        (A, AP) => out[AP] = 1,
        (AP, A) => out[AP] = -1,
        (A, AM) => out[AM] = -1,
        (AM, A) => out[AM] = 1,
        (AM, AP) => out[M] = 1,
        (AP, AM) => out[M] = -1,
        _ => {}
    }
    out
}

pub type Lin2 = BTreeMap<(usize, usize), Coefficient>;
pub type Lin3 = BTreeMap<(usize, usize, usize), Coefficient>;

fn add<K: Ord>(map: &mut BTreeMap<K, Coefficient>, k: K, v: Coefficient) {
    let e = map.entry(k).or_insert_with(Coefficient::zero);
    *e = &*e + &v;
}

pub fn clean<K: Ord>(map: BTreeMap<K, Coefficient>) -> BTreeMap<K, Coefficient> {
    map.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

fn index(m: &Mono<4>) -> usize {
    assert_eq!(m.degree(), 1, "expected a degree-one slot, got {m:?}");
    m.first().unwrap()
}

pub fn to_lin2(t: &LinComb<[Mono<4>; 2]>) -> Lin2 {
    clean(t.iter().map(|([a, b], v)| ((index(a), index(b)), v.clone())).collect())
}

pub fn to_lin3(t: &LinComb<[Mono<4>; 3]>) -> Lin3 {
    clean(t.iter().map(|([a, b, d], v)| ((index(a), index(b), index(d)), v.clone())).collect())
}

/// `x∧y = x⊗y − y⊗x`.
pub fn wedge2(terms: &[(Coefficient, usize, usize)]) -> Lin2 {
    let mut out = Lin2::new();
    for (v, i, j) in terms {
        add(&mut out, (*i, *j), v.clone());
        add(&mut out, (*j, *i), -v);
    }
    clean(out)
}

/// `x∧y∧z` as the signed sum over the six slot permutations.
pub fn wedge3(terms: &[(Coefficient, usize, usize, usize)]) -> Lin3 {
    let mut out = Lin3::new();
    for (v, i, j, k) in terms {
        for (s, t) in [
            (1, (*i, *j, *k)),
            (1, (*j, *k, *i)),
            (1, (*k, *i, *j)),
            (-1, (*j, *i, *k)),
            (-1, (*i, *k, *j)),
            (-1, (*k, *j, *i)),
        ] {
            add(&mut out, t, v * &c(s));
        }
    }
    clean(out)
}

/// `[r12, r13] + [r12, r23] + [r13, r23]` using only Lie brackets.
pub fn schouten(r: &Lin2) -> Lin3 {
    let mut out = Lin3::new();
    for ((a, b), u) in r {
        for ((d, e), w) in r {
            let uw = u * w;
            // [a⊗b⊗1, d⊗1⊗e] = [a,d]⊗b⊗e
            for (k, n) in lie(*a, *d).iter().enumerate().filter(|(_, n)| **n != 0) {
                add(&mut out, (k, *b, *e), &uw * &c(*n));
            }
            // [a⊗b⊗1, 1⊗d⊗e] = a⊗[b,d]⊗e
            for (k, n) in lie(*b, *d).iter().enumerate().filter(|(_, n)| **n != 0) {
                add(&mut out, (*a, k, *e), &uw * &c(*n));
            }
            // [a⊗1⊗b, 1⊗d⊗e] = a⊗d⊗[b,e]
            for (k, n) in lie(*b, *e).iter().enumerate().filter(|(_, n)| **n != 0) {
                add(&mut out, (*a, *d, k), &uw * &c(*n));
            }
        }
    }
    clean(out)
}

/// `δ(X) = [X⊗1 + 1⊗X, r]` using only Lie brackets.
pub fn cocommutator(r: &Lin2, x: usize) -> Lin2 {
    let mut out = Lin2::new();
    for ((a, b), v) in r {
        for (k, n) in lie(x, *a).iter().enumerate().filter(|(_, n)| **n != 0) {
            add(&mut out, (k, *b), v * &c(*n));
        }
        for (k, n) in lie(x, *b).iter().enumerate().filter(|(_, n)| **n != 0) {
            add(&mut out, (*a, k), v * &c(*n));
        }
    }
    clean(out)
}

/// Square matrix with coefficient entries, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct Mx {
    pub n: usize,
    pub d: Vec<Coefficient>,
}

impl Mx {
    pub fn zero(n: usize) -> Mx {
        Mx { n, d: vec![Coefficient::zero(); n * n] }
    }

    pub fn id(n: usize) -> Mx {
        let mut m = Mx::zero(n);
        for i in 0..n {
            m.d[i * n + i] = Coefficient::one();
        }
        m
    }

    pub fn at(&self, i: usize, j: usize) -> &Coefficient {
        &self.d[i * self.n + j]
    }

    pub fn mul(&self, o: &Mx) -> Mx {
        let n = self.n;
        let mut out = Mx::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.d[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &o.d[k * n + j];
                    if !b.is_zero() {
                        out.d[i * n + j] = &out.d[i * n + j] + &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, o: &Mx) -> Mx {
        Mx { n: self.n, d: self.d.iter().zip(&o.d).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &Mx) -> Mx {
        Mx { n: self.n, d: self.d.iter().zip(&o.d).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, v: &Coefficient) -> Mx {
        Mx { n: self.n, d: self.d.iter().map(|a| a * v).collect() }
    }

    pub fn kron(&self, o: &Mx) -> Mx {
        let (n, m) = (self.n, o.n);
        let mut out = Mx::zero(n * m);
        for i in 0..n {
            for j in 0..n {
                for k in 0..m {
                    for l in 0..m {
                        out.d[(i * m + k) * n * m + j * m + l] = self.at(i, j) * o.at(k, l);
                    }
                }
            }
        }
        out
    }

    pub fn truncate(&self, order: i32) -> Mx {
        Mx { n: self.n, d: self.d.iter().map(|a| a.truncate(order)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.d.iter().all(|a| a.is_zero())
    }
}

/// `D(A), D(A+), D(A-), D(M)`: single units at (1,1), (1,2), (0,1), (0,2).
pub fn d(g: usize) -> Mx {
    let mut m = Mx::zero(3);
    let (i, j) = [(1, 1), (1, 2), (0, 1), (0, 2)][g];
    m.d[i * 3 + j] = Coefficient::one();
    m
}

/// The representation on a PBW monomial.
pub fn d_mono(m: &Mono<4>) -> Mx {
    let mut out = Mx::id(3);
    for (g, &e) in m.0.iter().enumerate() {
        for _ in 0..e {
            out = out.mul(&d(g));
        }
    }
    out
}

pub fn d_elem<B: Basis<4>>(x: &LinComb<B>, slot_rep: impl Fn(&B) -> Mx, n: usize) -> Mx {
    let mut out = Mx::zero(n);
    for (b, v) in x.iter() {
        out = out.add(&slot_rep(b).scale(v));
    }
    out
}

pub fn d1(x: &LinComb<Mono<4>>) -> Mx {
    d_elem(x, d_mono, 3)
}

pub fn d2(t: &LinComb<[Mono<4>; 2]>) -> Mx {
    d_elem(t, |[a, b]| d_mono(a).kron(&d_mono(b)), 9)
}

pub fn d3(t: &LinComb<[Mono<4>; 3]>) -> Mx {
    d_elem(t, |[a, b, e]| d_mono(a).kron(&d_mono(b)).kron(&d_mono(e)), 27)
}

pub fn wedge_mx(a: &Mx, b: &Mx) -> Mx {
    a.kron(b).sub(&b.kron(a))
}

/// `D(R)` written out from the generator matrices.
pub fn d_r(f: QuantumFamily) -> Mx {
    let id = Mx::id(9);
    let z = p(Param::Z);
    match f {
        QuantumFamily::Uz => id.add(&wedge_mx(&d(A), &d(AP)).scale(&z)),
        QuantumFamily::IIn => id
            .add(&wedge_mx(&d(A), &d(M)).scale(&p(Param::X)))
            .add(&wedge_mx(&d(AP), &d(M)).scale(&p(Param::BETA_P)))
            .add(&wedge_mx(&d(AM), &d(M)).scale(&p(Param::Y_P))),
        // D(e^{−zM} A+) = D(A+)
        QuantumFamily::IIs => id
            .add(&d(AM).kron(&d(AP)).scale(&(&z * &c(2))))
            .sub(&d(A).kron(&d(M)).add(&d(M).kron(&d(A))).scale(&z)),
    }
}

pub fn embed(r: &Mx, slots: (usize, usize)) -> Mx {
    let mut out = Mx::zero(27);
    let other = 3 - slots.0 - slots.1;
    for row in 0..9 {
        for col in 0..9 {
            let v = r.at(row, col);
            if v.is_zero() {
                continue;
            }
            for t in 0..3 {
                let mut a = [0; 3];
                let mut b = [0; 3];
                (a[slots.0], a[slots.1], a[other]) = (row / 3, row % 3, t);
                (b[slots.0], b[slots.1], b[other]) = (col / 3, col % 3, t);
                out.d[(a[0] * 9 + a[1] * 3 + a[2]) * 27 + b[0] * 9 + b[1] * 3 + b[2]] = v.clone();
            }
        }
    }
    out
}

pub fn qybe(r: &Mx) -> Mx {
    let (r12, r13, r23) = (embed(r, (0, 1)), embed(r, (0, 2)), embed(r, (1, 2)));
    r12.mul(&r13).mul(&r23).sub(&r23.mul(&r13).mul(&r12))
}

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

pub fn value(f: &GroupFunction) -> Q {
    assert!(f.len() <= 1);
    scalar_part(f).as_constant().expect("numeric coordinate")
}

/// `T = [[1, a- E, m + a- a+], [0, E, a+], [0, 0, 1]]`.
pub fn matrix(e: &Q, ap: &Q, am: &Q, m: &Q) -> [[Q; 3]; 3] {
    let z = || q(0, 1);
    let one = || q(1, 1);
    [[one(), am * e, m + am * ap], [z(), e.clone(), ap.clone()], [z(), z(), one()]]
}

pub fn matmul(a: &[[Q; 3]; 3], b: &[[Q; 3]; 3]) -> [[Q; 3]; 3] {
    std::array::from_fn(|i| std::array::from_fn(|j| (0..3).map(|k| &a[i][k] * &b[k][j]).sum()))
}

pub fn random_q(rng: &mut ChaCha8Rng, nonzero: bool) -> Q {
    loop {
        let v = q(rng.gen_range(-9..=9), rng.gen_range(1..=7));
        if !nonzero || v != q(0, 1) {
            return v;
        }
    }
}

pub fn fun_el(g: &QuantumGroup, s: &str) -> Element<5> {
    let mut cx = Context::new(&g.alg, vec![("E", E), ("theta", THETA), ("a_p", A_P), ("a_m", A_M), ("m", FM)]);
    cx.log_of_exp = Some(("theta", E));
    g.alg.truncate(&cx.element(s).unwrap())
}

/// Stated commutators `[x, y] = rhs` of each quantum group; pairs not
/// listed commute.
pub fn stated(f: FunFamily) -> Vec<(usize, usize, &'static str)> {
    match f {
        FunFamily::Uz => vec![
            (THETA, A_P, "z*(exp(theta) - 1)"),
            (A_M, A_P, "z*a_m"),
            (THETA, FM, "z*a_m"),
            (A_P, FM, "z*a_m*a_p"),
            (A_M, FM, "-z*a_m^2"),
        ],
        FunFamily::IIn => vec![
            (A_P, FM, "-x*a_p + beta_p*(exp(theta) - 1)"),
            (A_M, FM, "x*a_m + y_p*(exp(-theta) - 1)"),
        ],
        FunFamily::IIs => vec![(A_P, FM, "z*a_p"), (A_M, FM, "z*a_m")],
    }
}

/// Coordinate pairs whose commutator in `g` differs from the stated one.
pub fn stated_relation_defects(g: &QuantumGroup) -> Vec<String> {
    let f = fun::FunFamily::ALL.into_iter().find(|f| f.key() == g.name).unwrap();
    let rel = stated(f);
    let coords = [THETA, A_P, A_M, FM];
    let mut out = Vec::new();
    for (i, &x) in coords.iter().enumerate() {
        for &y in &coords[i + 1..] {
            let got = g.alg.commutator(&g.alg.gen(x), &g.alg.gen(y));
            let want = match rel.iter().find(|(a, b, _)| (*a, *b) == (x, y) || (*a, *b) == (y, x)) {
                Some((a, _, s)) if *a == x => fun_el(g, s),
                Some((_, _, s)) => -&fun_el(g, s),
                None => Element::zero(),
            };
            if got != want {
                out.push(format!("[{x},{y}]"));
            }
        }
    }
    out
}
