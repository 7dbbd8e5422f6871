//! Sparse multivariate polynomials with exact coefficients, plus the text
//! syntax used for ideal generators and presentation matrices.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// Exponent vector, one entry per ambient variable.
///
/// The derived `Ord` is *not* used; the explicit impl below is graded
/// reverse lexicographic, which is the storage order for [`Poly`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// Index of the single variable when this monomial is a pure power `x_i^e`, `e > 0`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    pub fn format(&self, vars: &[String]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .zip(vars)
            .filter(|(e, _)| **e > 0)
            .map(|(e, v)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        MonomialOrder::GrevLex.cmp(self, other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Monomial orders understood by the Gröbner engine.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    #[default]
    GrevLex,
    Lex,
    DegLex,
}

impl MonomialOrder {
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (&a.0, &b.0);
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::DegLex => {
                let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
                da.cmp(&db).then_with(|| a.cmp(b))
            }
            MonomialOrder::GrevLex => {
                let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
                da.cmp(&db).then_with(|| {
                    for (x, y) in a.iter().zip(b).rev() {
                        if x != y {
                            return y.cmp(x);
                        }
                    }
                    Ordering::Equal
                })
            }
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MonomialOrder::GrevLex => "grevlex",
            MonomialOrder::Lex => "lex",
            MonomialOrder::DegLex => "deglex",
        }
    }
}

/// A polynomial over `field` in the variables `vars`.
///
/// Terms are kept in a map keyed by monomial (grevlex order); zero
/// coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    vars: Arc<[String]>,
    terms: BTreeMap<Monomial, Scalar>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

impl Poly {
    pub fn zero(field: Field, vars: Arc<[String]>) -> Self {
        Poly { field, vars, terms: BTreeMap::new() }
    }

    pub fn constant(field: Field, vars: Arc<[String]>, c: Scalar) -> Self {
        let n = vars.len();
        Self::monomial(field, vars, Monomial::one(n), c)
    }

    pub fn monomial(field: Field, vars: Arc<[String]>, m: Monomial, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { field, vars, terms }
    }

    pub fn var(field: Field, vars: Arc<[String]>, i: usize) -> Self {
        let n = vars.len();
        Self::monomial(field, vars, Monomial::var(n, i), field.one())
    }

    pub fn from_terms(
        field: Field,
        vars: Arc<[String]>,
        terms: impl IntoIterator<Item = (Monomial, Scalar)>,
    ) -> Self {
        let mut p = Poly::zero(field, vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&Scalar> {
        self.terms.get(m)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Leading monomial and coefficient with respect to `order`.
    pub fn leading(&self, order: MonomialOrder) -> Option<(&Monomial, &Scalar)> {
        match order {
            MonomialOrder::GrevLex => self.terms.iter().next_back(),
            _ => self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0)),
        }
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let s = existing.add(&c);
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn compatible(&self, other: &Poly) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.to_string(), other.field.to_string()));
        }
        if self.vars != other.vars {
            return Err(Error::VariableMismatch);
        }
        Ok(())
    }

    /// Checked arithmetic; fails when the operands live in different rings.
    pub fn arith(&self, other: &Poly, op: PolyOp) -> Result<Poly> {
        self.compatible(other)?;
        Ok(match op {
            PolyOp::Add => self.add_unchecked(other, false),
            PolyOp::Sub => self.add_unchecked(other, true),
            PolyOp::Mul => self.mul_unchecked(other),
        })
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.arith(other, PolyOp::Add)
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly> {
        self.arith(other, PolyOp::Sub)
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        self.arith(other, PolyOp::Mul)
    }

    pub(crate) fn add_unchecked(&self, other: &Poly, negate: bool) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), if negate { c.neg() } else { c.clone() });
        }
        out
    }

    pub(crate) fn mul_unchecked(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.field, self.vars.clone());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.mul(cb));
            }
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.field, self.vars.clone());
        }
        Poly {
            field: self.field,
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a.mul(c))).collect(),
        }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.field, self.vars.clone());
        }
        Poly {
            field: self.field,
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a.mul(c))).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::constant(self.field, self.vars.clone(), self.field.one());
        for _ in 0..e {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// Parses `text` as a polynomial in `vars` over `field`.
    pub fn parse(text: &str, vars: &Arc<[String]>, field: Field) -> Result<Poly> {
        Parser::new(text, vars.clone(), field)?.parse()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = if negative { c.neg() } else { c.clone() };
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", m.format(&self.vars))?;
            } else {
                write!(f, "{abs}*{}", m.format(&self.vars))?;
            }
        }
        Ok(())
    }
}

/// Convenience wrapper matching the exchange-format entry point.
pub fn parse_poly(text: &str, vars: &[&str]) -> Result<Poly> {
    let vars: Arc<[String]> = vars.iter().map(|s| s.to_string()).collect();
    Poly::parse(text, &vars, Field::Rational)
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = text[start..i].parse().expect("digits parse");
            out.push((start, Tok::Num(n)));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(text[start..i].to_string())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(Error::Syntax { position: i, message: format!("unexpected character `{c}`") });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    vars: Arc<[String]>,
    field: Field,
}

impl Parser {
    fn new(text: &str, vars: Arc<[String]>, field: Field) -> Result<Self> {
        Ok(Parser { toks: lex(text)?, pos: 0, end: text.len(), vars, field })
    }

    fn parse(mut self) -> Result<Poly> {
        if self.toks.is_empty() {
            return Err(self.err_here("empty expression"));
        }
        let p = self.expr()?;
        if self.pos < self.toks.len() {
            return Err(self.err_here("unexpected trailing input"));
        }
        Ok(p)
    }

    fn position(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.0).unwrap_or(self.end)
    }

    fn err_here(&self, msg: &str) -> Error {
        Error::Syntax { position: self.position(), message: msg.to_string() }
    }

    fn peek_op(&self) -> Option<char> {
        match self.toks.get(self.pos) {
            Some((_, Tok::Op(c))) => Some(*c),
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = acc.add_unchecked(&rhs, op == '-');
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.unary()?;
        while let Some(op @ ('*' | '/')) = self.peek_op() {
            let at = self.position();
            self.pos += 1;
            let rhs = self.unary()?;
            if op == '*' {
                acc = acc.mul_unchecked(&rhs);
            } else {
                acc = self.divide(acc, &rhs, at)?;
            }
        }
        Ok(acc)
    }

    fn divide(&self, num: Poly, den: &Poly, at: usize) -> Result<Poly> {
        let constant = match den.terms.iter().next() {
            Some((m, c)) if den.num_terms() == 1 && m.is_one() => c.clone(),
            None => {
                return Err(Error::Syntax { position: at, message: "division by zero".into() })
            }
            _ => {
                return Err(Error::Syntax {
                    position: at,
                    message: "only division by a nonzero constant is supported".into(),
                })
            }
        };
        Ok(num.scale(&constant.inv()))
    }

    fn unary(&mut self) -> Result<Poly> {
        match self.peek_op() {
            Some('-') => {
                self.pos += 1;
                let p = self.unary()?;
                Ok(p.scale(&self.field.from_i64(-1)))
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.peek_op() == Some('^') {
            self.pos += 1;
            match self.toks.get(self.pos) {
                Some((at, Tok::Num(n))) => {
                    let e: u32 = n.try_into().map_err(|_| Error::Syntax {
                        position: *at,
                        message: "exponent too large".into(),
                    })?;
                    self.pos += 1;
                    return Ok(base.pow(e));
                }
                _ => return Err(self.err_here("expected a nonnegative integer exponent")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly> {
        let Some((at, tok)) = self.toks.get(self.pos).cloned() else {
            return Err(self.err_here("unexpected end of input"));
        };
        match tok {
            Tok::Num(n) => {
                self.pos += 1;
                Ok(Poly::constant(self.field, self.vars.clone(), self.field.from_bigint(&n)))
            }
            Tok::Ident(name) => {
                self.pos += 1;
                let i = self
                    .vars
                    .iter()
                    .position(|v| *v == name)
                    .ok_or_else(|| Error::UnknownVariable(name.clone()))?;
                Ok(Poly::var(self.field, self.vars.clone(), i))
            }
            Tok::Op('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek_op() != Some(')') {
                    return Err(self.err_here("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Tok::Op(c) => Err(Error::Syntax { position: at, message: format!("unexpected `{c}`") }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars(names: &[&str]) -> Arc<[String]> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parses_difference_of_squares() {
        let v = vars(&["x", "y", "z"]);
        let p = Poly::parse("x^2 - y^2", &v, Field::Rational).unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.coefficient(&Monomial(vec![2, 0, 0])), Some(&Field::Rational.one()));
        assert_eq!(p.coefficient(&Monomial(vec![0, 2, 0])), Some(&Field::Rational.from_i64(-1)));
    }

    #[test]
    fn zero_and_collection() {
        let v = vars(&["x", "y"]);
        assert!(Poly::parse("0", &v, Field::Rational).unwrap().is_zero());
        let p = Poly::parse("x*y + 2*x*y", &v, Field::Rational).unwrap();
        assert_eq!(p.num_terms(), 1);
        assert_eq!(p.coefficient(&Monomial(vec![1, 1])), Some(&Field::Rational.from_i64(3)));
    }

    #[test]
    fn products() {
        let v = vars(&["x", "y"]);
        let a = Poly::parse("x + y", &v, Field::Rational).unwrap();
        let b = Poly::parse("x - y", &v, Field::Rational).unwrap();
        assert_eq!(a.try_mul(&b).unwrap(), Poly::parse("x^2 - y^2", &v, Field::Rational).unwrap());
        let z = Poly::zero(Field::Rational, v.clone());
        assert!(a.try_mul(&z).unwrap().is_zero());

        let f2 = Field::Fp(2);
        let s = Poly::parse("x + y", &v, f2).unwrap();
        assert_eq!(s.try_mul(&s).unwrap(), Poly::parse("x^2 + y^2", &v, f2).unwrap());
    }

    #[test]
    fn field_mismatch_is_an_error() {
        let v = vars(&["x"]);
        let a = Poly::parse("x", &v, Field::Rational).unwrap();
        let b = Poly::parse("x", &v, Field::Fp(3)).unwrap();
        assert!(matches!(a.try_add(&b), Err(Error::FieldMismatch(..))));
    }

    #[test]
    fn syntax_errors_report_position() {
        let v = vars(&["x", "y"]);
        match Poly::parse("x + * y", &v, Field::Rational) {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(Poly::parse("x + w", &v, Field::Rational), Err(Error::UnknownVariable(_))));
        assert!(matches!(Poly::parse("x # y", &v, Field::Rational), Err(Error::Syntax { .. })));
        assert!(Poly::parse("(x + y", &v, Field::Rational).is_err());
        assert!(Poly::parse("x/y", &v, Field::Rational).is_err());
    }

    #[test]
    fn rational_coefficients_round_trip() {
        let v = vars(&["x", "y"]);
        let p = Poly::parse("1/2*x^2 - 3/4*x*y + 5", &v, Field::Rational).unwrap();
        let printed = p.to_string();
        assert_eq!(printed, "1/2*x^2 - 3/4*x*y + 5");
        assert_eq!(Poly::parse(&printed, &v, Field::Rational).unwrap(), p);
    }

    #[test]
    fn grevlex_breaks_ties_on_last_variable() {
        let o = MonomialOrder::GrevLex;
        // x*z < y^2 in grevlex with x > y > z
        assert_eq!(o.cmp(&Monomial(vec![1, 0, 1]), &Monomial(vec![0, 2, 0])), Ordering::Less);
        assert_eq!(
            MonomialOrder::Lex.cmp(&Monomial(vec![1, 0, 1]), &Monomial(vec![0, 2, 0])),
            Ordering::Greater
        );
    }
}
