//! The 3×3 representation `D` of the oscillator algebra, its tensor powers,
//! and exact matrix checks of the represented R-matrices.

use std::fmt;

use crate::algebra::linear::{Basis, LinComb, Mono, Tensor};
use crate::coeff::{Coefficient, Param};
use crate::hopf::families::QuantumFamily;

/// Dense square matrix over [`Coefficient`].
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    pub n: usize,
    pub data: Vec<Coefficient>,
}

impl Mat {
    pub fn zero(n: usize) -> Self {
        Mat { n, data: vec![Coefficient::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n);
        for i in 0..n {
            m.data[i * n + i] = Coefficient::one();
        }
        m
    }

    /// The matrix unit `e_{ij}` (0-based).
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Mat::zero(n);
        m.data[i * n + j] = Coefficient::one();
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &Coefficient {
        &self.data[i * self.n + j]
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        assert_eq!(self.n, o.n);
        let n = self.n;
        let mut out = Mat::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        out.data[i * n + j] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, o: &Mat) -> Mat {
        Mat { n: self.n, data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &Mat) -> Mat {
        Mat { n: self.n, data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, c: &Coefficient) -> Mat {
        Mat { n: self.n, data: self.data.iter().map(|a| a * c).collect() }
    }

    pub fn kron(&self, o: &Mat) -> Mat {
        let (n, m) = (self.n, o.n);
        let mut out = Mat::zero(n * m);
        for i in 0..n {
            for j in 0..n {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..m {
                    for l in 0..m {
                        out.data[(i * m + k) * n * m + j * m + l] = a * o.get(k, l);
                    }
                }
            }
        }
        out
    }

    /// Entrywise truncation to ħ-order `order`.
    pub fn truncate(&self, order: i32) -> Mat {
        Mat { n: self.n, data: self.data.iter().map(|c| c.truncate(order)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| c.is_zero())
    }

    /// Nonzero entries as `(row, col, value)`.
    pub fn nonzero(&self) -> Vec<(usize, usize, Coefficient)> {
        let n = self.n;
        self.data.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k / n, k % n, c.clone())).collect()
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `D(A) = e₂₂`, `D(A+) = e₂₃`, `D(A-) = e₁₂`, `D(M) = e₁₃` (1-based).
pub fn generator(i: usize) -> Mat {
    match i {
        0 => Mat::unit(3, 1, 1),
        1 => Mat::unit(3, 1, 2),
        2 => Mat::unit(3, 0, 1),
        3 => Mat::unit(3, 0, 2),
        _ => panic!("generator index out of range"),
    }
}

fn mono_matrix(m: &Mono<4>, images: &[Mat; 4]) -> Mat {
    let mut acc = Mat::identity(3);
    for (i, img) in images.iter().enumerate() {
        let e = m.0[i];
        assert!(e >= 0, "negative exponent in the 3×3 representation");
        for _ in 0..e {
            acc = acc.mul(img);
        }
    }
    acc
}

/// Images of `A, A+, A-, M`.
pub fn standard_images() -> [Mat; 4] {
    std::array::from_fn(generator)
}

/// `D` extended linearly and multiplicatively to PBW monomials.
pub fn rep3(x: &LinComb<Mono<4>>) -> Mat {
    rep_with(x, &standard_images())
}

/// As [`rep3`], with the images of the four generators given.
pub fn rep_with<B: Basis<4>>(x: &LinComb<B>, images: &[Mat; 4]) -> Mat {
    let k = B::ARITY;
    let dim = 3usize.pow(k as u32);
    let mut out = Mat::zero(dim);
    for (b, c) in x.iter() {
        let mut m = mono_matrix(&b.slot(0), images);
        for s in 1..k {
            m = m.kron(&mono_matrix(&b.slot(s), images));
        }
        out = out.add(&m.scale(c));
    }
    out
}

pub fn rep3_tensor(t: &Tensor<4, 2>) -> Mat {
    rep_with(t, &standard_images())
}

/// Exact representation property on all 16 ordered generator pairs of the
/// given algebra.
pub fn homomorphism_defects(alg: &crate::algebra::engine::Algebra<4>, images: &[Mat; 4]) -> Vec<String> {
    let mut out = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            let prod = alg.mul(&alg.gen(i), &alg.gen(j));
            let lhs = images[i].mul(&images[j]);
            if rep_with(&prod, images) != lhs {
                out.push(format!("D({}{}) ≠ D({})D({})", alg.presentation().names[i], alg.presentation().names[j], alg.presentation().names[i], alg.presentation().names[j]));
            }
        }
    }
    out
}

/// How `D(A+')` is read in the standard type II form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrimedReading {
    /// From the definition `A+' = e^{−zM} A+`.
    Definition,
    /// `D(A+') = D(A)`, the reading of the printed remark.
    AsPrinted,
}

/// `D(A+')` from `A+' = e^{−zM}A+`, summed exactly (nilpotent).
pub fn primed_from_definition() -> Mat {
    let z = Coefficient::param(Param::Z);
    let m = generator(3);
    let mut e = Mat::identity(3);
    let mut term = Mat::identity(3);
    let mut k = 1;
    loop {
        term = term.mul(&m).scale(&(&-&z / &Coefficient::int(k)));
        if term.is_zero() {
            break;
        }
        e = e.add(&term);
        k += 1;
    }
    e.mul(&generator(1))
}

/// The closed forms of `D(R)`:
/// `U_z`: `I⊗I + z(D(A)⊗D(A+) − D(A+)⊗D(A))`;
/// II n: `I⊗I + x D(A)∧D(M) + β+ D(A+)∧D(M) + y+ D(A-)∧D(M)`;
/// II s: `I⊗I + 2z D(A-)⊗D(A+') − z(D(A)⊗D(M) + D(M)⊗D(A))`.
pub fn d_r_closed(family: QuantumFamily, reading: PrimedReading) -> Mat {
    let d = standard_images();
    let z = Coefficient::param(Param::Z);
    let wedge = |a: &Mat, b: &Mat| a.kron(b).sub(&b.kron(a));
    let id = Mat::identity(9);
    match family {
        QuantumFamily::Uz => id.add(&wedge(&d[0], &d[1]).scale(&z)),
        QuantumFamily::IIn => id
            .add(&wedge(&d[0], &d[3]).scale(&Coefficient::param(Param::X)))
            .add(&wedge(&d[1], &d[3]).scale(&Coefficient::param(Param::BETA_P)))
            .add(&wedge(&d[2], &d[3]).scale(&Coefficient::param(Param::Y_P))),
        QuantumFamily::IIs => {
            let primed = match reading {
                PrimedReading::Definition => primed_from_definition(),
                PrimedReading::AsPrinted => d[0].clone(),
            };
            id.add(&d[2].kron(&primed).scale(&(&z * &Coefficient::int(2))))
                .sub(&d[0].kron(&d[3]).add(&d[3].kron(&d[0])).scale(&z))
        }
    }
}

fn embed3(r: &Mat, slots: (usize, usize)) -> Mat {
    let mut out = Mat::zero(27);
    let idx = |a: [usize; 3]| a[0] * 9 + a[1] * 3 + a[2];
    let other = 3 - slots.0 - slots.1;
    for (row, col, c) in r.nonzero() {
        let (i, k) = (row / 3, row % 3);
        let (j, l) = (col / 3, col % 3);
        for t in 0..3 {
            let mut a = [0; 3];
            let mut b = [0; 3];
            a[slots.0] = i;
            a[slots.1] = k;
            a[other] = t;
            b[slots.0] = j;
            b[slots.1] = l;
            b[other] = t;
            out.data[idx(a) * 27 + idx(b)] = c.clone();
        }
    }
    out
}

/// `R₁₂R₁₃R₂₃ − R₂₃R₁₃R₁₂` for a 9×9 matrix.
pub fn qybe_residual(r: &Mat) -> Mat {
    let (r12, r13, r23) = (embed3(r, (0, 1)), embed3(r, (0, 2)), embed3(r, (1, 2)));
    r12.mul(&r13).mul(&r23).sub(&r23.mul(&r13).mul(&r12))
}

/// Entries of the exact 27×27 QYBE residual, as text.
pub fn qybe_exact_defects(r: &Mat) -> Vec<String> {
    qybe_residual(r).nonzero().into_iter().map(|(i, j, c)| format!("QYBE entry ({i},{j}) = {c}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::uea::oscillator;
    use crate::rmatrix::universal_r;

    #[test]
    fn heisenberg_commutator() {
        let (ap, am, m) = (generator(1), generator(2), generator(3));
        assert_eq!(am.mul(&ap).sub(&ap.mul(&am)), m);
        assert_eq!(rep3(&oscillator().one()), Mat::identity(3));
    }

    #[test]
    fn represents_every_family() {
        assert!(homomorphism_defects(oscillator(), &standard_images()).is_empty());
        for f in QuantumFamily::ALL {
            let h = f.build(4);
            assert!(homomorphism_defects(&h.alg, &standard_images()).is_empty(), "{f:?}");
        }
    }

    #[test]
    fn represented_r_is_closed_form() {
        for f in QuantumFamily::ALL {
            let h = f.build(4);
            let r = universal_r(f, &h.alg);
            assert_eq!(rep3_tensor(&r.expansion), d_r_closed(f, PrimedReading::Definition), "{f:?}");
        }
    }

    #[test]
    fn closed_forms_solve_qybe() {
        for f in QuantumFamily::ALL {
            assert!(qybe_exact_defects(&d_r_closed(f, PrimedReading::Definition)).is_empty(), "{f:?}");
        }
        assert!(qybe_exact_defects(&Mat::identity(9)).is_empty());
    }

    #[test]
    fn primed_generator_has_the_unprimed_image() {
        assert_eq!(primed_from_definition(), generator(1));
    }
}
