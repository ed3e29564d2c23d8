//! A small expression language for algebra elements and tensors.
//!
//! ```text
//! sum    := tensor (('+' | '-') tensor)*
//! tensor := prod (('⊗' | '<x>' | '∧' | '/\') prod)*
//! prod   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | ident | ident '(' sum ')' | '(' sum ')'
//! ```
//!
//! Identifiers resolve to generators through the context, otherwise to
//! deformation parameters. Functions: `exp`, `sinh`, and `v(t)` for
//! `(e^{tM} − 1 − tM)/t²`.

use num_bigint::BigInt;
use thiserror::Error;

use super::engine::Algebra;
use super::linear::{scalar_part, tensor2, Element, LinComb, Mono, Tensor};
use super::series;
use crate::coeff::{Coefficient, Param, Q};

#[derive(Debug, Error, PartialEq)]
pub enum ParseError {
    #[error("unexpected character {0:?} at {1}")]
    BadChar(char, usize),
    #[error("unexpected end of input")]
    Eof,
    #[error("expected {0} at {1}")]
    Expected(&'static str, usize),
    #[error("trailing input at {0}")]
    Trailing(usize),
    #[error("{0}")]
    Eval(String),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    Otimes,
    Wedge,
}

fn lex(s: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<(usize, char)> = s.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        let rest = &s[pos..];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if rest.starts_with("<x>") {
            out.push((Tok::Otimes, pos));
            i += 3;
            continue;
        }
        if rest.starts_with("/\\") {
            out.push((Tok::Wedge, pos));
            i += 2;
            continue;
        }
        let t = match c {
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' | '·' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            '⊗' => Tok::Otimes,
            '∧' => Tok::Wedge,
            d if d.is_ascii_digit() => {
                let mut j = i;
                while j < chars.len() && chars[j].1.is_ascii_digit() {
                    j += 1;
                }
                let end = if j < chars.len() { chars[j].0 } else { s.len() };
                out.push((Tok::Num(s[pos..end].parse().unwrap()), pos));
                i = j;
                continue;
            }
            a if a.is_alphabetic() || a == '_' => {
                let mut j = i;
                while j < chars.len() && (chars[j].1.is_alphanumeric() || chars[j].1 == '_' || chars[j].1 == '\'') {
                    j += 1;
                }
                let end = if j < chars.len() { chars[j].0 } else { s.len() };
                out.push((Tok::Ident(s[pos..end].to_string()), pos));
                i = j;
                continue;
            }
            other => return Err(ParseError::BadChar(other, pos)),
        };
        out.push((t, pos));
        i += 1;
    }
    Ok(out)
}

#[derive(Clone, Debug)]
enum Ast {
    Num(BigInt),
    Ident(String),
    Neg(Box<Ast>),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Div(Box<Ast>, Box<Ast>),
    Pow(Box<Ast>, i64),
    Otimes(Box<Ast>, Box<Ast>),
    Wedge(Box<Ast>, Box<Ast>),
    Call(String, Vec<Ast>),
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn at(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.1).unwrap_or(self.len)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<Ast, ParseError> {
        let mut lhs = self.tensor()?;
        loop {
            if self.eat(&Tok::Plus) {
                lhs = Ast::Add(Box::new(lhs), Box::new(self.tensor()?));
            } else if self.eat(&Tok::Minus) {
                lhs = Ast::Sub(Box::new(lhs), Box::new(self.tensor()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn tensor(&mut self) -> Result<Ast, ParseError> {
        let mut lhs = self.prod()?;
        loop {
            if self.eat(&Tok::Otimes) {
                lhs = Ast::Otimes(Box::new(lhs), Box::new(self.prod()?));
            } else if self.eat(&Tok::Wedge) {
                lhs = Ast::Wedge(Box::new(lhs), Box::new(self.prod()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn prod(&mut self) -> Result<Ast, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat(&Tok::Star) {
                lhs = Ast::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat(&Tok::Slash) {
                lhs = Ast::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Ast, ParseError> {
        if self.eat(&Tok::Minus) {
            return Ok(Ast::Neg(Box::new(self.unary()?)));
        }
        if self.eat(&Tok::Plus) {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Ast, ParseError> {
        let base = self.atom()?;
        if self.eat(&Tok::Caret) {
            let paren = self.eat(&Tok::LParen);
            let neg = self.eat(&Tok::Minus);
            let k = match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    i64::try_from(n).map_err(|_| ParseError::Expected("small exponent", self.at()))?
                }
                _ => return Err(ParseError::Expected("integer exponent", self.at())),
            };
            if paren && !self.eat(&Tok::RParen) {
                return Err(ParseError::Expected("')'", self.at()));
            }
            return Ok(Ast::Pow(Box::new(base), if neg { -k } else { k }));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Ast, ParseError> {
        let at = self.at();
        match self.peek().cloned() {
            None => Err(ParseError::Eof),
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Ast::Num(n))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.sum()?;
                if !self.eat(&Tok::RParen) {
                    return Err(ParseError::Expected("')'", self.at()));
                }
                Ok(e)
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if self.eat(&Tok::LParen) {
                    let mut args = vec![self.sum()?];
                    while self.eat(&Tok::Comma) {
                        args.push(self.sum()?);
                    }
                    if !self.eat(&Tok::RParen) {
                        return Err(ParseError::Expected("')'", self.at()));
                    }
                    Ok(Ast::Call(name, args))
                } else {
                    Ok(Ast::Ident(name))
                }
            }
            Some(_) => Err(ParseError::Expected("operand", at)),
        }
    }
}

fn parse(s: &str) -> Result<Ast, ParseError> {
    let toks = lex(s)?;
    let mut p = Parser { toks, pos: 0, len: s.len() };
    let e = p.sum()?;
    if p.pos != p.toks.len() {
        return Err(ParseError::Trailing(p.at()));
    }
    Ok(e)
}

/// Parses a pure scalar expression (parameters and rationals only).
pub fn parse_coefficient(s: &str) -> Result<Coefficient, ParseError> {
    let ast = parse(s)?;
    scalar_of(&ast)
}

fn scalar_of(ast: &Ast) -> Result<Coefficient, ParseError> {
    Ok(match ast {
        Ast::Num(n) => Coefficient::from_q(Q::from_integer(n.clone())),
        Ast::Ident(name) => Coefficient::param(Param::new(name)),
        Ast::Neg(a) => -scalar_of(a)?,
        Ast::Add(a, b) => scalar_of(a)? + scalar_of(b)?,
        Ast::Sub(a, b) => scalar_of(a)? - scalar_of(b)?,
        Ast::Mul(a, b) => scalar_of(a)? * scalar_of(b)?,
        Ast::Div(a, b) => {
            let d = scalar_of(b)?;
            if d.is_zero() {
                return Err(ParseError::Eval("division by zero".into()));
            }
            scalar_of(a)? / d
        }
        Ast::Pow(a, k) => {
            let base = scalar_of(a)?;
            if *k >= 0 {
                base.pow(*k as u32)
            } else {
                base.inv().pow((-k) as u32)
            }
        }
        _ => return Err(ParseError::Eval("not a scalar expression".into())),
    })
}

/// Value produced by evaluation: an element or a 2- or 3-fold tensor.
#[derive(Clone, Debug, PartialEq)]
pub enum Value<const N: usize> {
    One(Element<N>),
    Two(Tensor<N, 2>),
    Three(Tensor<N, 3>),
}

impl<const N: usize> Value<N> {
    pub fn into_element(self) -> Result<Element<N>, ParseError> {
        match self {
            Value::One(e) => Ok(e),
            _ => Err(ParseError::Eval("expected an algebra element, found a tensor".into())),
        }
    }

    pub fn into_tensor2(self) -> Result<Tensor<N, 2>, ParseError> {
        match self {
            Value::Two(t) => Ok(t),
            Value::One(e) if e.is_zero() => Ok(Tensor::zero()),
            _ => Err(ParseError::Eval("expected a two-slot tensor".into())),
        }
    }

    pub fn into_tensor3(self) -> Result<Tensor<N, 3>, ParseError> {
        match self {
            Value::Three(t) => Ok(t),
            Value::One(e) if e.is_zero() => Ok(Tensor::zero()),
            _ => Err(ParseError::Eval("expected a three-slot tensor".into())),
        }
    }

    fn scalar(&self) -> Option<Coefficient> {
        match self {
            Value::One(e) => {
                if e.iter().all(|(m, _)| m.is_one()) {
                    Some(scalar_part::<Mono<N>, N>(e))
                } else {
                    None
                }
            }
            _ => None,
        }
    }
}

/// Symbol table for one presentation.
pub struct Context<'a, const N: usize> {
    pub alg: &'a Algebra<N>,
    /// Identifier → generator index.
    pub symbols: Vec<(&'a str, usize)>,
    /// Index of the central generator used by `v(t)`, if any.
    pub central: Option<usize>,
    /// `exp(±name)` is read as `g^{±1}` for the invertible generator `g`.
    pub log_of_exp: Option<(&'a str, usize)>,
}

impl<'a, const N: usize> Context<'a, N> {
    pub fn new(alg: &'a Algebra<N>, symbols: Vec<(&'a str, usize)>) -> Self {
        Context { alg, symbols, central: None, log_of_exp: None }
    }

    pub fn eval(&self, s: &str) -> Result<Value<N>, ParseError> {
        let ast = parse(s)?;
        self.ev(&ast)
    }

    pub fn element(&self, s: &str) -> Result<Element<N>, ParseError> {
        self.eval(s)?.into_element()
    }

    pub fn tensor2(&self, s: &str) -> Result<Tensor<N, 2>, ParseError> {
        self.eval(s)?.into_tensor2()
    }

    pub fn tensor3(&self, s: &str) -> Result<Tensor<N, 3>, ParseError> {
        self.eval(s)?.into_tensor3()
    }

    fn ev(&self, ast: &Ast) -> Result<Value<N>, ParseError> {
        use Value::*;
        Ok(match ast {
            Ast::Num(n) => One(self.alg.scalar(Coefficient::from_q(Q::from_integer(n.clone())))),
            Ast::Ident(name) => match self.symbols.iter().find(|(s, _)| s == name) {
                Some((_, i)) => One(self.alg.gen(*i)),
                None => One(self.alg.scalar(Coefficient::param(Param::new(name)))),
            },
            Ast::Neg(a) => match self.ev(a)? {
                One(x) => One(-&x),
                Two(x) => Two(-&x),
                Three(x) => Three(-&x),
            },
            Ast::Add(a, b) => self.add(self.ev(a)?, self.ev(b)?, 1)?,
            Ast::Sub(a, b) => self.add(self.ev(a)?, self.ev(b)?, -1)?,
            Ast::Mul(a, b) => {
                let (x, y) = (self.ev(a)?, self.ev(b)?);
                if let Some(c) = x.scalar() {
                    return Ok(scale(y, &c));
                }
                if let Some(c) = y.scalar() {
                    return Ok(scale(x, &c));
                }
                match (x, y) {
                    (One(x), One(y)) => One(self.alg.mul(&x, &y)),
                    (Two(x), Two(y)) => Two(self.alg.mul(&x, &y)),
                    (Three(x), Three(y)) => Three(self.alg.mul(&x, &y)),
                    _ => return Err(ParseError::Eval("product of tensors of different arity".into())),
                }
            }
            Ast::Div(a, b) => {
                let d = self.ev(b)?.scalar().ok_or_else(|| ParseError::Eval("can only divide by scalars".into()))?;
                if d.is_zero() {
                    return Err(ParseError::Eval("division by zero".into()));
                }
                scale(self.ev(a)?, &d.inv())
            }
            Ast::Pow(a, k) => {
                let x = self.ev(a)?;
                if let Some(c) = x.scalar() {
                    let v = if *k >= 0 { c.pow(*k as u32) } else { c.inv().pow((-k) as u32) };
                    return Ok(One(self.alg.scalar(v)));
                }
                match x {
                    One(e) if *k < 0 => {
                        // only invertible generators have negative powers
                        let inv = |i: usize| {
                            (i == 0 && self.alg.presentation().exp_gen) || self.log_of_exp.is_some_and(|(_, g)| g == i)
                        };
                        let gen = (e.len() == 1).then(|| e.iter().next().unwrap()).and_then(|(m, c)| {
                            let nz: Vec<usize> = (0..N).filter(|&i| m.0[i] != 0).collect();
                            (c.is_one() && nz.len() == 1 && inv(nz[0])).then(|| (nz[0], m.0[nz[0]]))
                        });
                        let Some((i, e0)) = gen else {
                            return Err(ParseError::Eval("negative power of a non-invertible element".into()));
                        };
                        One(Element::basis(Mono::one().bump(i, (e0 as i64 * k) as i16)))
                    }
                    One(e) => One(self.alg.pow(&e, *k as u32)),
                    Two(t) if *k >= 0 => Two(self.alg.pow(&t, *k as u32)),
                    Three(t) if *k >= 0 => Three(self.alg.pow(&t, *k as u32)),
                    _ => return Err(ParseError::Eval("negative power of a tensor".into())),
                }
            }
            Ast::Otimes(a, b) => match (self.ev(a)?, self.ev(b)?) {
                (One(x), One(y)) => Two(tensor2(&x, &y)),
                (Two(x), One(y)) => Three(append(&x, &y)),
                (One(x), Two(y)) => Three(prepend(&x, &y)),
                _ => return Err(ParseError::Eval("tensor arity above three".into())),
            },
            Ast::Wedge(a, b) => match (self.ev(a)?, self.ev(b)?) {
                (One(x), One(y)) => Two(&tensor2(&x, &y) - &tensor2(&y, &x)),
                (Two(x), One(y)) => Three(alt3(&append(&x, &y))),
                (One(x), Two(y)) => Three(alt3(&prepend(&x, &y))),
                _ => return Err(ParseError::Eval("wedge arity above three".into())),
            },
            Ast::Call(f, args) => self.call(f, args)?,
        })
    }

    fn add(&self, x: Value<N>, y: Value<N>, sign: i64) -> Result<Value<N>, ParseError> {
        use Value::*;
        let s = Coefficient::int(sign);
        Ok(match (x, y) {
            (One(mut x), One(y)) => {
                x.add_scaled(&y, &s);
                One(x)
            }
            (Two(mut x), Two(y)) => {
                x.add_scaled(&y, &s);
                Two(x)
            }
            (Three(mut x), Three(y)) => {
                x.add_scaled(&y, &s);
                Three(x)
            }
            (One(x), Two(y)) if x.is_zero() => Two(y.scale(&s)),
            (Two(x), One(y)) if y.is_zero() => Two(x),
            (One(x), Two(y)) => {
                // a scalar added to a tensor means scalar·1⊗1
                let mut t = Tensor::term([Mono::one(); 2], scalar_part::<Mono<N>, N>(&x));
                if x.len() > 1 || !x.iter().all(|(m, _)| m.is_one()) {
                    return Err(ParseError::Eval("sum of an element and a tensor".into()));
                }
                t.add_scaled(&y, &s);
                Two(t)
            }
            (Two(mut x), One(y)) => {
                if !y.iter().all(|(m, _)| m.is_one()) {
                    return Err(ParseError::Eval("sum of a tensor and an element".into()));
                }
                x.add_term([Mono::one(); 2], &scalar_part::<Mono<N>, N>(&y) * &s);
                Two(x)
            }
            _ => return Err(ParseError::Eval("sum of tensors of different arity".into())),
        })
    }

    fn call(&self, f: &str, args: &[Ast]) -> Result<Value<N>, ParseError> {
        use Value::*;
        if args.len() != 1 {
            return Err(ParseError::Eval(format!("{f} takes one argument")));
        }
        match f {
            "exp" => {
                if let Some((log, gi)) = self.log_of_exp {
                    let sign = match &args[0] {
                        Ast::Ident(n) if n == log => Some(1),
                        Ast::Neg(b) if matches!(&**b, Ast::Ident(n) if n == log) => Some(-1),
                        _ => None,
                    };
                    if let Some(s) = sign {
                        return Ok(One(Element::basis(Mono::one().bump(gi, s))));
                    }
                }
                let x = self.ev(&args[0])?;
                if let Some(c) = x.scalar() {
                    if c.is_zero() {
                        return Ok(One(self.alg.one()));
                    }
                    return Err(ParseError::Eval("exp of a nonzero scalar".into()));
                }
                self.require_small(&x)?;
                Ok(match x {
                    One(e) => One(series::exp(self.alg, &e)),
                    Two(t) => Two(series::exp(self.alg, &t)),
                    Three(t) => Three(series::exp(self.alg, &t)),
                })
            }
            "sinh" => {
                let x = self.ev(&args[0])?.into_element()?;
                self.require_small(&One(x.clone()))?;
                let kmax = self.alg.order().map(|n| n as u32 + 2).unwrap_or(64);
                Ok(One(series::power_series(
                    self.alg,
                    &x,
                    |k| if k % 2 == 1 { series::inv_factorial(k) } else { Coefficient::zero() },
                    kmax,
                )))
            }
            "v" => {
                let t = self.ev(&args[0])?.scalar().ok_or_else(|| ParseError::Eval("v takes a scalar".into()))?;
                let m = self.central.ok_or_else(|| ParseError::Eval("v needs a central generator".into()))?;
                Ok(One(series::v_series(self.alg, &t, &self.alg.gen(m))))
            }
            other => Err(ParseError::Eval(format!("unknown function {other}"))),
        }
    }

    fn require_small(&self, x: &Value<N>) -> Result<(), ParseError> {
        let d = match x {
            Value::One(e) => e.min_degree(),
            Value::Two(t) => t.min_degree(),
            Value::Three(t) => t.min_degree(),
        };
        if self.alg.order().is_some() && d < 1 {
            return Err(ParseError::Eval("series argument must vanish at zero deformation".into()));
        }
        Ok(())
    }
}

fn scale<const N: usize>(v: Value<N>, c: &Coefficient) -> Value<N> {
    match v {
        Value::One(x) => Value::One(x.scale(c)),
        Value::Two(x) => Value::Two(x.scale(c)),
        Value::Three(x) => Value::Three(x.scale(c)),
    }
}

fn append<const N: usize>(x: &Tensor<N, 2>, y: &Element<N>) -> Tensor<N, 3> {
    let mut out = Tensor::zero();
    for ([a, b], c) in x.iter() {
        for (m, d) in y.iter() {
            out.add_term([*a, *b, *m], c * d);
        }
    }
    out
}

fn prepend<const N: usize>(x: &Element<N>, y: &Tensor<N, 2>) -> Tensor<N, 3> {
    let mut out = Tensor::zero();
    for (m, d) in x.iter() {
        for ([a, b], c) in y.iter() {
            out.add_term([*m, *a, *b], c * d);
        }
    }
    out
}

/// Half the full antisymmetrization, so that `(x∧y)∧z = Σ_π sgn(π) x_π1⊗x_π2⊗x_π3`.
fn alt3<const N: usize>(t: &Tensor<N, 3>) -> Tensor<N, 3> {
    const PERMS: [([usize; 3], i64); 6] =
        [([0, 1, 2], 1), ([1, 0, 2], -1), ([1, 2, 0], 1), ([2, 1, 0], -1), ([2, 0, 1], 1), ([0, 2, 1], -1)];
    let mut out: LinComb<[Mono<N>; 3]> = LinComb::zero();
    let half = Coefficient::rational(1, 2);
    for (s, c) in t.iter() {
        for (p, sg) in PERMS {
            out.add_term([s[p[0]], s[p[1]], s[p[2]]], c * &(&half * &Coefficient::int(sg)));
        }
    }
    out
}
