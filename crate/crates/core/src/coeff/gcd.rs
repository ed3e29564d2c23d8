//! Multivariate polynomial GCD over the rationals.
//!
//! Recursive primitive pseudo-remainder sequences: pick the lowest-indexed
//! variable present, split off the content (gcd of the coefficients in that
//! variable, computed recursively) and run a primitive PRS on the primitive
//! parts. The parameter counts and degrees met here are small, so this is
//! plenty fast and never needs modular methods.

use num_traits::One;

use super::poly::Poly;

/// Monic (lex-leading coefficient one) greatest common divisor.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return monic(b);
    }
    if b.is_zero() {
        return monic(a);
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    if a == b {
        return monic(a);
    }
    let va = a.vars();
    let vb = b.vars();
    let var = (0..va.len()).find(|&i| va[i] || vb[i]).expect("non-constant polynomial has a variable");
    let da = a.degree_in(var);
    let db = b.degree_in(var);
    if da == 0 {
        return gcd(a, &content(b, var));
    }
    if db == 0 {
        return gcd(&content(a, var), b);
    }
    let ca = content(a, var);
    let cb = content(b, var);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let c = gcd(&ca, &cb);
    let g = primitive_prs(pa, pb, var);
    monic(&(&c * &g))
}

fn monic(p: &Poly) -> Poly {
    match p.leading() {
        None => Poly::zero(),
        Some((_, c)) => {
            if c.is_one() {
                p.clone()
            } else {
                p.scale(&c.recip())
            }
        }
    }
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `var`.
fn content(p: &Poly, var: usize) -> Poly {
    let coeffs = p.to_univariate(var);
    let mut g = Poly::zero();
    for c in coeffs.iter().filter(|c| !c.is_zero()) {
        g = gcd(&g, c);
        if g.is_constant() {
            return Poly::one();
        }
    }
    g
}

fn primitive_part(p: &Poly, var: usize) -> Poly {
    let c = content(p, var);
    p.div_exact(&c).expect("content divides")
}

fn primitive_prs(a: Poly, b: Poly, var: usize) -> Poly {
    let (mut f, mut g) = if a.degree_in(var) >= b.degree_in(var) { (a, b) } else { (b, a) };
    loop {
        let r = pseudo_remainder(&f, &g, var);
        if r.is_zero() {
            return primitive_part(&g, var);
        }
        if r.degree_in(var) == 0 {
            return Poly::one();
        }
        f = g;
        g = primitive_part(&r, var);
    }
}

fn pseudo_remainder(f: &Poly, g: &Poly, var: usize) -> Poly {
    let gu = g.to_univariate(var);
    let dg = gu.len() - 1;
    let lc = gu[dg].clone();
    let mut r = f.to_univariate(var);
    while r.len() > dg && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        if lr.is_zero() {
            r.pop();
            continue;
        }
        let shift = dr - dg;
        for c in r.iter_mut() {
            *c = &*c * &lc;
        }
        for (k, gc) in gu.iter().enumerate() {
            let t = gc * &lr;
            r[k + shift] = &r[k + shift] - &t;
        }
        debug_assert!(r[dr].is_zero());
        r.pop();
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    Poly::from_univariate(&r, var)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::param::Param;
    use crate::coeff::poly::Q;

    fn v(p: Param) -> Poly {
        Poly::var(p)
    }

    #[test]
    fn gcd_of_products() {
        let x = v(Param::X);
        let y = v(Param::Y);
        let a = v(Param::ALPHA_P);
        let f1 = &x + &y;
        let f2 = &(&x * &a) - &Poly::one();
        let f3 = &y - &a;
        let p = &(&f1 * &f2) * &f1;
        let q = &(&f1 * &f3) * &f2.scale(&Q::from_integer(3.into()));
        let g = gcd(&p, &q);
        assert_eq!(g, monic(&(&f1 * &f2)));
    }

    #[test]
    fn coprime() {
        let x = v(Param::X);
        let y = v(Param::Y);
        assert!(gcd(&(&x + &y), &(&x - &y)).is_one());
        assert!(gcd(&x, &y).is_one());
    }

    #[test]
    fn gcd_with_pure_power() {
        let x = v(Param::X);
        let b = v(Param::BETA_P);
        let p = &(&x * &x) * &b;
        let q = x.pow(3);
        assert_eq!(gcd(&p, &q), x.pow(2));
    }
}
