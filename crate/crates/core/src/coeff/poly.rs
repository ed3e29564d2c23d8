//! Sparse multivariate polynomials over the rationals.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::param::{Param, MAX_PARAMS};

pub type Q = BigRational;

/// Exponent vector over the parameter registry. Ordered lexicographically,
/// which is the monomial order used for leading terms.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PMono(pub [u8; MAX_PARAMS]);

impl PMono {
    pub fn one() -> Self {
        PMono([0; MAX_PARAMS])
    }

    pub fn var(p: Param) -> Self {
        let mut e = [0; MAX_PARAMS];
        e[p.index()] = 1;
        PMono(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &PMono) -> PMono {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a = a.checked_add(*b).expect("parameter exponent overflow");
        }
        PMono(e)
    }

    pub fn divides(&self, other: &PMono) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn div(&self, other: &PMono) -> PMono {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a -= *b;
        }
        PMono(e)
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

/// Terms are kept sorted by monomial with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(PMono, Q)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(PMono::one(), c)] }
        }
    }

    pub fn from_int(n: i64) -> Self {
        Poly::constant(Q::from_integer(BigInt::from(n)))
    }

    pub fn var(p: Param) -> Self {
        Poly { terms: vec![(PMono::var(p), Q::one())] }
    }

    pub fn monomial(m: PMono, c: Q) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    /// Builds a polynomial from arbitrary (possibly repeated) terms.
    pub fn from_terms(terms: impl IntoIterator<Item = (PMono, Q)>) -> Self {
        let mut map: BTreeMap<PMono, Q> = BTreeMap::new();
        for (m, c) in terms {
            *map.entry(m).or_insert_with(Q::zero) += c;
        }
        Poly { terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn terms(&self) -> &[(PMono, Q)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn constant_value(&self) -> Option<Q> {
        match self.terms.as_slice() {
            [] => Some(Q::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&(PMono, Q)> {
        self.terms.last()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        match (self.min_degree(), self.total_degree()) {
            (Some(a), Some(b)) => a == b,
            _ => true,
        }
    }

    pub fn degree_in(&self, p: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.0[p] as u32).max().unwrap_or(0)
    }

    pub fn vars(&self) -> [bool; MAX_PARAMS] {
        let mut v = [false; MAX_PARAMS];
        for (m, _) in &self.terms {
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    v[i] = true;
                }
            }
        }
        v
    }

    pub fn scale(&self, c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect() }
    }

    pub fn mul_mono(&self, m: &PMono, c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        // multiplying by a monomial preserves the lex order
        Poly { terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect() }
    }

    /// Keeps only terms whose total degree is at most `max`.
    pub fn truncate_degree(&self, max: i64) -> Poly {
        Poly {
            terms: self.terms.iter().filter(|(m, _)| (m.degree() as i64) <= max).cloned().collect(),
        }
    }

    pub fn homogeneous_part(&self, deg: u32) -> Poly {
        Poly { terms: self.terms.iter().filter(|(m, _)| m.degree() == deg).cloned().collect() }
    }

    /// Divides by `d` when the division is exact.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        if d.is_zero() {
            return None;
        }
        if let Some(c) = d.constant_value() {
            return Some(self.scale(&c.recip()));
        }
        let (dm, dc) = d.leading().unwrap().clone();
        let mut rem = self.clone();
        let mut quot: Vec<(PMono, Q)> = Vec::new();
        while let Some((rm, rc)) = rem.leading().cloned() {
            if !dm.divides(&rm) {
                return None;
            }
            let m = rm.div(&dm);
            let c = rc / &dc;
            rem = &rem - &d.mul_mono(&m, &c);
            quot.push((m, c));
        }
        Some(Poly::from_terms(quot))
    }

    /// Coefficients as a univariate polynomial in variable `p`.
    pub fn to_univariate(&self, p: usize) -> Vec<Poly> {
        let deg = self.degree_in(p) as usize;
        let mut parts: Vec<Vec<(PMono, Q)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let k = m.0[p] as usize;
            let mut mm = *m;
            mm.0[p] = 0;
            parts[k].push((mm, c.clone()));
        }
        parts.into_iter().map(Poly::from_terms).collect()
    }

    pub fn from_univariate(coeffs: &[Poly], p: usize) -> Poly {
        let mut terms = Vec::new();
        for (k, c) in coeffs.iter().enumerate() {
            for (m, a) in &c.terms {
                let mut mm = *m;
                mm.0[p] += k as u8;
                terms.push((mm, a.clone()));
            }
        }
        Poly::from_terms(terms)
    }

    /// Substitutes `value` for parameter `p`.
    pub fn subs(&self, p: Param, value: &Poly) -> Poly {
        let mut out = Poly::zero();
        let mut pow_cache: Vec<Poly> = vec![Poly::one()];
        for (m, c) in &self.terms {
            let k = m.0[p.index()] as usize;
            while pow_cache.len() <= k {
                let next = pow_cache.last().unwrap() * value;
                pow_cache.push(next);
            }
            let mut mm = *m;
            mm.0[p.index()] = 0;
            out = &out + &pow_cache[k].mul_mono(&mm, c);
        }
        out
    }

    /// Evaluates at rational values (missing parameters evaluate to zero).
    pub fn eval(&self, values: &[(Param, Q)]) -> Q {
        let mut acc = Q::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let v = values
                    .iter()
                    .find(|(p, _)| p.index() == i)
                    .map(|(_, v)| v.clone())
                    .unwrap_or_else(Q::zero);
                t *= num_traits::pow(v, e as usize);
            }
            acc += t;
        }
        acc
    }

    pub fn neg(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    fn merge(a: &Poly, b: &Poly, negate_b: bool) -> Poly {
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < a.terms.len() || j < b.terms.len() {
            let ord = match (a.terms.get(i), b.terms.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (None, None) => unreachable!(),
            };
            match ord {
                Ordering::Less => {
                    out.push(a.terms[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let (m, c) = &b.terms[j];
                    out.push((*m, if negate_b { -c } else { c.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_b { &a.terms[i].1 - &b.terms[j].1 } else { &a.terms[i].1 + &b.terms[j].1 };
                    if !c.is_zero() {
                        out.push((a.terms[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Poly { terms: out }
    }

    fn product(a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        if a.terms.len() == 1 {
            let (m, c) = &a.terms[0];
            return b.mul_mono(m, c);
        }
        if b.terms.len() == 1 {
            let (m, c) = &b.terms[0];
            return a.mul_mono(m, c);
        }
        let mut map: BTreeMap<PMono, Q> = BTreeMap::new();
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let e = map.entry(ma.mul(mb)).or_insert_with(Q::zero);
                *e += ca * cb;
            }
        }
        Poly { terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    fn fmt_with(&self, f: &mut fmt::Formatter<'_>, latex: bool) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest total degree first, then lex
        let mut ts: Vec<&(PMono, Q)> = self.terms.iter().collect();
        ts.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then(b.0.cmp(&a.0)));
        for (i, (m, c)) in ts.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let mut factors: Vec<String> = Vec::new();
            for (k, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = Param(k as u8);
                let name = if latex { p.latex() } else { p.name() };
                if e == 1 {
                    factors.push(name);
                } else if latex {
                    factors.push(format!("{name}^{{{e}}}"));
                } else {
                    factors.push(format!("{name}^{e}"));
                }
            }
            let coeff_str = if latex && !abs.is_integer() {
                format!("\\frac{{{}}}{{{}}}", abs.numer(), abs.denom())
            } else {
                abs.to_string()
            };
            let sep = if latex { " " } else { "*" };
            if factors.is_empty() {
                write!(f, "{coeff_str}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join(sep))?;
            } else {
                write!(f, "{coeff_str}{sep}{}", factors.join(sep))?;
            }
        }
        Ok(())
    }

    pub fn to_latex(&self) -> String {
        struct L<'a>(&'a Poly);
        impl fmt::Display for L<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt_with(f, true)
            }
        }
        L(self).to_string()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, false)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl std::ops::Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        Poly::merge(self, rhs, false)
    }
}

impl std::ops::Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        Poly::merge(self, rhs, true)
    }
}

impl std::ops::Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        Poly::product(self, rhs)
    }
}

impl std::ops::Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Poly {
        Poly::var(Param::X)
    }
    fn y() -> Poly {
        Poly::var(Param::Y)
    }

    #[test]
    fn exact_division() {
        let a = &(&x() + &y()) * &(&x() - &y());
        let q = a.div_exact(&(&x() + &y())).unwrap();
        assert_eq!(q, &x() - &y());
        assert!(a.div_exact(&(&x() + &Poly::one())).is_none());
    }

    #[test]
    fn univariate_round_trip() {
        let a = &(&(&x() * &x()) * &y()) + &(&y() - &Poly::from_int(3));
        let u = a.to_univariate(Param::X.index());
        assert_eq!(u.len(), 3);
        assert_eq!(Poly::from_univariate(&u, Param::X.index()), a);
    }

    #[test]
    fn substitution() {
        let a = &(&x() * &x()) + &y();
        let b = a.subs(Param::X, &(&y() + &Poly::one()));
        assert_eq!(b, &(&(&y() * &y()) + &(&y() * &Poly::from_int(3))) + &Poly::one());
    }

    #[test]
    fn display_is_stable() {
        let a = &(&x() * &x()).scale(&Q::new(BigInt::from(-1), BigInt::from(2))) + &y();
        assert_eq!(a.to_string(), "-1/2*x^2 + y");
    }
}
