//! Exact scalar arithmetic: rational functions in the deformation parameters.
//!
//! A [`Coefficient`] is `num / den` with `gcd(num, den) = 1` and `den` monic,
//! so structural equality is mathematical equality.
//!
//! Truncation uses a single marker grading: scaling every parameter by ħ
//! multiplies a homogeneous `num/den` by ħ^(deg num − deg den). All series
//! in this crate are built from exponents linear in the parameters, so every
//! identity holds order by order in ħ. Truncating requires a homogeneous
//! denominator; numerators may mix degrees and are split on demand.

pub mod gcd;
pub mod param;
pub mod poly;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use param::Param;
pub use poly::{PMono, Poly, Q};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Coefficient {
    num: Poly,
    den: Poly,
}

impl Coefficient {
    pub fn zero() -> Self {
        Coefficient { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        Coefficient { num: Poly::one(), den: Poly::one() }
    }

    pub fn int(n: i64) -> Self {
        Coefficient { num: Poly::from_int(n), den: Poly::one() }
    }

    pub fn rational(n: i64, d: i64) -> Self {
        Coefficient::from_q(Q::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn from_q(q: Q) -> Self {
        Coefficient { num: Poly::constant(q), den: Poly::one() }
    }

    pub fn param(p: Param) -> Self {
        Coefficient { num: Poly::var(p), den: Poly::one() }
    }

    pub fn from_poly(p: Poly) -> Self {
        Coefficient { num: p, den: Poly::one() }
    }

    /// Builds `num/den` in canonical form. Panics on a zero denominator.
    pub fn from_parts(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Coefficient::normalize(num, den)
    }

    fn normalize(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Coefficient::zero();
        }
        if let Some(c) = den.constant_value() {
            if c.is_one() {
                return Coefficient { num, den };
            }
            return Coefficient { num: num.scale(&c.recip()), den: Poly::one() };
        }
        let g = gcd::gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        let lc = den.leading().unwrap().1.clone();
        if lc.is_one() {
            Coefficient { num, den }
        } else {
            let inv = lc.recip();
            Coefficient { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The rational value when the coefficient is parameter-free.
    pub fn as_constant(&self) -> Option<Q> {
        if self.den.is_one() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn is_param_free(&self) -> bool {
        self.as_constant().is_some()
    }

    /// Net ħ-degree, defined when numerator and denominator are homogeneous.
    pub fn marker_degree(&self) -> Option<i32> {
        if self.is_zero() {
            return Some(0);
        }
        if self.num.is_homogeneous() && self.den.is_homogeneous() {
            Some(self.num.total_degree().unwrap() as i32 - self.den.total_degree().unwrap() as i32)
        } else {
            None
        }
    }

    /// Lowest ħ-degree present (the ħ-adic valuation). Zero maps to `i32::MAX`.
    pub fn min_degree(&self) -> i32 {
        if self.is_zero() {
            return i32::MAX;
        }
        self.num.min_degree().unwrap() as i32 - self.den.min_degree().unwrap() as i32
    }

    /// Homogeneous components keyed by ħ-degree.
    ///
    /// Panics if the denominator is not homogeneous.
    pub fn graded_parts(&self) -> Vec<(i32, Coefficient)> {
        if self.is_zero() {
            return Vec::new();
        }
        assert!(self.den.is_homogeneous(), "marker grading needs a homogeneous denominator: {self}");
        let dd = self.den.total_degree().unwrap() as i32;
        let lo = self.num.min_degree().unwrap();
        let hi = self.num.total_degree().unwrap();
        (lo..=hi)
            .filter_map(|d| {
                let part = self.num.homogeneous_part(d);
                if part.is_zero() {
                    None
                } else {
                    Some((d as i32 - dd, Coefficient::normalize(part, self.den.clone())))
                }
            })
            .collect()
    }

    /// Drops every homogeneous component of ħ-degree above `order`.
    ///
    /// Panics if the denominator is not homogeneous.
    pub fn truncate(&self, order: i32) -> Coefficient {
        if self.is_zero() || self.min_degree() > order {
            return if self.min_degree() > order { Coefficient::zero() } else { self.clone() };
        }
        if self.den.is_one() {
            if self.num.total_degree().unwrap() as i32 <= order {
                return self.clone();
            }
            return Coefficient { num: self.num.truncate_degree(order as i64), den: Poly::one() };
        }
        assert!(self.den.is_homogeneous(), "marker grading needs a homogeneous denominator: {self}");
        let dd = self.den.total_degree().unwrap() as i64;
        if self.num.total_degree().unwrap() as i64 - dd <= order as i64 {
            return self.clone();
        }
        Coefficient::normalize(self.num.truncate_degree(order as i64 + dd), self.den.clone())
    }

    pub fn inv(&self) -> Coefficient {
        assert!(!self.is_zero(), "division by zero coefficient");
        Coefficient::normalize(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, k: u32) -> Coefficient {
        let mut acc = Coefficient::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn subs(&self, p: Param, value: &Coefficient) -> Coefficient {
        let n = substitute(&self.num, p, value);
        let d = substitute(&self.den, p, value);
        &n / &d
    }

    /// Evaluates at rational parameter values; `None` if the denominator vanishes.
    pub fn eval(&self, values: &[(Param, Q)]) -> Option<Q> {
        let d = self.den.eval(values);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(values) / d)
        }
    }

    pub fn scale_q(&self, q: &Q) -> Coefficient {
        if q.is_zero() {
            return Coefficient::zero();
        }
        Coefficient { num: self.num.scale(q), den: self.den.clone() }
    }

    pub fn to_latex(&self) -> String {
        if self.den.is_one() {
            self.num.to_latex()
        } else {
            format!("\\frac{{{}}}{{{}}}", self.num.to_latex(), self.den.to_latex())
        }
    }

    /// True when printing needs parentheses in a product.
    pub fn is_compound(&self) -> bool {
        self.num.terms().len() > 1 || !self.den.is_one()
    }

    /// True when the leading printed sign is negative.
    pub fn is_negative_display(&self) -> bool {
        self.to_string().starts_with('-')
    }
}

fn substitute(p: &Poly, param: Param, value: &Coefficient) -> Coefficient {
    if value.is_polynomial() {
        return Coefficient::from_poly(p.subs(param, &value.num));
    }
    // expand in powers of the substituted parameter
    let coeffs = p.to_univariate(param.index());
    let mut acc = Coefficient::zero();
    let mut pw = Coefficient::one();
    for c in coeffs {
        acc = &acc + &(&Coefficient::from_poly(c) * &pw);
        pw = &pw * value;
    }
    acc
}

impl Default for Coefficient {
    fn default() -> Self {
        Coefficient::zero()
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            let n = if self.num.terms().len() > 1 { format!("({})", self.num) } else { self.num.to_string() };
            let d = if self.den.terms().len() > 1 || !self.den.terms()[0].1.is_one() {
                format!("({})", self.den)
            } else {
                self.den.to_string()
            };
            write!(f, "{n}/{d}")
        }
    }
}

impl fmt::Debug for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl std::ops::Add for &Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: &Coefficient) -> Coefficient {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return Coefficient { num: &self.num + &rhs.num, den: Poly::one() };
            }
            return Coefficient::normalize(&self.num + &rhs.num, self.den.clone());
        }
        let g = gcd::gcd(&self.den, &rhs.den);
        let a = self.den.div_exact(&g).unwrap();
        let b = rhs.den.div_exact(&g).unwrap();
        let num = &(&self.num * &b) + &(&rhs.num * &a);
        let den = &self.den * &b;
        Coefficient::normalize(num, den)
    }
}

impl std::ops::Sub for &Coefficient {
    type Output = Coefficient;
    fn sub(self, rhs: &Coefficient) -> Coefficient {
        self + &(-rhs)
    }
}

impl std::ops::Neg for &Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        Coefficient { num: -&self.num, den: self.den.clone() }
    }
}

impl std::ops::Neg for Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        -&self
    }
}

impl std::ops::Mul for &Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: &Coefficient) -> Coefficient {
        if self.is_zero() || rhs.is_zero() {
            return Coefficient::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Coefficient { num: &self.num * &rhs.num, den: Poly::one() };
        }
        // cross-cancel so the product stays reduced
        let g1 = gcd::gcd(&self.num, &rhs.den);
        let g2 = gcd::gcd(&rhs.num, &self.den);
        let n1 = self.num.div_exact(&g1).unwrap();
        let d2 = rhs.den.div_exact(&g1).unwrap();
        let n2 = rhs.num.div_exact(&g2).unwrap();
        let d1 = self.den.div_exact(&g2).unwrap();
        Coefficient::normalize(&n1 * &n2, &d1 * &d2)
    }
}

impl std::ops::Div for &Coefficient {
    type Output = Coefficient;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &Coefficient) -> Coefficient {
        self * &rhs.inv()
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl std::ops::$tr for Coefficient {
            type Output = Coefficient;
            fn $m(self, rhs: Coefficient) -> Coefficient {
                std::ops::$tr::$m(&self, &rhs)
            }
        }
        impl std::ops::$tr<&Coefficient> for Coefficient {
            type Output = Coefficient;
            fn $m(self, rhs: &Coefficient) -> Coefficient {
                std::ops::$tr::$m(&self, rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl std::ops::AddAssign<&Coefficient> for Coefficient {
    fn add_assign(&mut self, rhs: &Coefficient) {
        *self = &*self + rhs;
    }
}

impl From<i64> for Coefficient {
    fn from(n: i64) -> Self {
        Coefficient::int(n)
    }
}

impl From<Param> for Coefficient {
    fn from(p: Param) -> Self {
        Coefficient::param(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: Param) -> Coefficient {
        Coefficient::param(x)
    }

    #[test]
    fn canonical_form_makes_equality_syntactic() {
        let x = p(Param::X);
        let a = p(Param::ALPHA_P);
        let lhs = &(&x * &x) / &a;
        let rhs = &(&(&x * &x) * &x) / &(&a * &x);
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.to_string(), "x^2/alpha_p");
    }

    #[test]
    fn denominator_is_monic() {
        let x = p(Param::X);
        let c = &Coefficient::one() / &(&x * &Coefficient::int(-2));
        assert_eq!(c.denom(), &Poly::var(Param::X));
        assert_eq!(c.numer(), &Poly::constant(Q::new((-1).into(), 2.into())));
    }

    #[test]
    fn sums_over_distinct_denominators() {
        let x = p(Param::X);
        let y = p(Param::Y);
        let s = &(&Coefficient::one() / &(&x + &y)) + &(&Coefficient::one() / &(&x - &y));
        let expected = &(&x * &Coefficient::int(2)) / &(&(&x * &x) - &(&y * &y));
        assert_eq!(s, expected);
        let back = &s - &(&Coefficient::one() / &(&x - &y));
        assert_eq!(back, &Coefficient::one() / &(&x + &y));
    }

    #[test]
    fn marker_degree_of_ratio() {
        let x = p(Param::X);
        let a = p(Param::ALPHA_P);
        assert_eq!((&(&x * &x) / &a).marker_degree(), Some(1));
        assert_eq!(Coefficient::rational(3, 7).marker_degree(), Some(0));
        assert_eq!((&x + &(&x * &x)).marker_degree(), None);
    }

    #[test]
    fn truncation_splits_numerator() {
        let x = p(Param::X);
        let b = p(Param::BETA_P);
        let c = &(&b + &(&x * &b)) / &x;
        assert_eq!(c.truncate(0), &b / &x);
        assert_eq!(c.truncate(1), c);
        assert_eq!(c.graded_parts().len(), 2);
    }

    #[test]
    fn substitution_into_rational() {
        let x = p(Param::X);
        let a = p(Param::ALPHA_P);
        let c = &(&x * &x) / &a;
        assert_eq!(c.subs(Param::ALPHA_P, &x), x);
    }
}
