//! Exact sparse multivariate polynomials with rational coefficients.
//!
//! Variables are named by strings. Terms live in a map from [`Monomial`] to a
//! nonzero [`Rational`], so equality of polynomials is equality of term sets.
//!
//! Output is ordered graded-lexicographically, descending, with variable
//! priority given by the caller (see [`Polynomial::render`]). Variables the
//! caller does not list rank after the listed ones in natural order
//! (`x2 < x10`).

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable {0:?} has no binding")]
    UnboundVariable(String),
    #[error("malformed polynomial {input:?} at character {offset}: {reason}")]
    Parse {
        input: String,
        offset: usize,
        reason: &'static str,
    },
    #[error("malformed term record: {0}")]
    BadRecord(String),
}

/// A product of variables raised to positive powers. The empty monomial is 1.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exponents: BTreeMap<String, u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(name: impl Into<String>) -> Self {
        Monomial::from_iter([(name.into(), 1)])
    }

    pub fn exponent(&self, var: &str) -> u32 {
        self.exponents.get(var).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &BTreeMap<String, u32> {
        &self.exponents
    }

    pub fn degree(&self) -> u32 {
        self.exponents.values().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.is_empty()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut exponents = self.exponents.clone();
        for (v, e) in &other.exponents {
            *exponents.entry(v.clone()).or_insert(0) += e;
        }
        Monomial { exponents }
    }
}

/// Zero exponents are dropped; repeated variables accumulate.
impl<S: Into<String>> FromIterator<(S, u32)> for Monomial {
    fn from_iter<I: IntoIterator<Item = (S, u32)>>(iter: I) -> Self {
        let mut exponents = BTreeMap::new();
        for (v, e) in iter {
            let v = v.into();
            assert!(!v.is_empty(), "variable names must be nonempty");
            if e > 0 {
                *exponents.entry(v).or_insert(0) += e;
            }
        }
        Monomial { exponents }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::term(Monomial::one(), c)
    }

    pub fn var(name: impl Into<String>) -> Self {
        Polynomial::term(Monomial::var(name), Rational::one())
    }

    pub fn term(monomial: Monomial, coefficient: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !coefficient.is_zero() {
            terms.insert(monomial, coefficient);
        }
        Polynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn variables(&self) -> BTreeSet<&str> {
        self.terms
            .keys()
            .flat_map(|m| m.exponents.keys().map(String::as_str))
            .collect()
    }

    /// The coefficient of `m`, zero if absent.
    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// `self^k` by repeated squaring; `p^0 = 1`.
    pub fn pow(&self, mut k: u32) -> Polynomial {
        let mut result = Polynomial::one();
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Replaces every variable by its binding and expands.
    pub fn substitute(
        &self,
        bindings: &BTreeMap<String, Polynomial>,
    ) -> Result<Polynomial, PolyError> {
        let mut powers: BTreeMap<(&str, u32), Polynomial> = BTreeMap::new();
        let mut result = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut product = Polynomial::constant(c.clone());
            for (v, &e) in &m.exponents {
                let power = match powers.entry((v.as_str(), e)) {
                    Entry::Occupied(o) => o.into_mut(),
                    Entry::Vacant(slot) => {
                        let base = bindings
                            .get(v)
                            .ok_or_else(|| PolyError::UnboundVariable(v.clone()))?;
                        slot.insert(base.pow(e))
                    }
                };
                product = &product * power;
            }
            result = result + product;
        }
        Ok(result)
    }

    pub fn evaluate(&self, values: &BTreeMap<String, Rational>) -> Result<Rational, PolyError> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut value = c.clone();
            for (v, &e) in &m.exponents {
                let x = values
                    .get(v)
                    .ok_or_else(|| PolyError::UnboundVariable(v.clone()))?;
                value *= num_traits::pow(x.clone(), e as usize);
            }
            total += value;
        }
        Ok(total)
    }

    /// Sum of all coefficients, i.e. the value at all-ones.
    pub fn coefficient_sum(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }

    /// Terms in descending graded-lex order under the given variable priority.
    pub fn sorted_terms<S: AsRef<str>>(&self, order: &[S]) -> Vec<(&Monomial, &Rational)> {
        let mut vars: Vec<&str> = self.variables().into_iter().collect();
        vars.sort_by(|a, b| variable_rank(order, a).cmp(&variable_rank(order, b)));
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| grlex_desc(&vars, a, b));
        terms
    }

    /// Text form: integer or `(a/b)` coefficients, `var^exp` factors with
    /// `^1` omitted. Factors are juxtaposed when every variable name is a
    /// single character and joined by `·` otherwise.
    pub fn render<S: AsRef<str>>(&self, order: &[S]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let joiner = if self.variables().iter().all(|v| v.chars().count() == 1) {
            ""
        } else {
            "·"
        };
        let mut out = String::new();
        for (k, (m, c)) in self.sorted_terms(order).into_iter().enumerate() {
            match (k, c.is_negative()) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let abs = c.abs();
            let factors = render_monomial(m, order, joiner);
            if factors.is_empty() {
                out.push_str(&render_rational(&abs));
            } else if abs.is_one() {
                out.push_str(&factors);
            } else {
                out.push_str(&render_rational(&abs));
                out.push_str(joiner);
                out.push_str(&factors);
            }
        }
        out
    }

    pub fn to_records<S: AsRef<str>>(&self, order: &[S]) -> Vec<TermRecord> {
        self.sorted_terms(order)
            .into_iter()
            .map(|(m, c)| TermRecord {
                coefficient: RationalRecord {
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                },
                exponents: m.exponents.clone(),
            })
            .collect()
    }

    pub fn from_records(records: &[TermRecord]) -> Result<Polynomial, PolyError> {
        let mut p = Polynomial::zero();
        for r in records {
            let num: BigInt =
                r.coefficient.num.parse().map_err(|_| {
                    PolyError::BadRecord(format!("numerator {:?}", r.coefficient.num))
                })?;
            let den: BigInt = r.coefficient.den.parse().map_err(|_| {
                PolyError::BadRecord(format!("denominator {:?}", r.coefficient.den))
            })?;
            if den.is_zero() {
                return Err(PolyError::BadRecord("zero denominator".into()));
            }
            if r.exponents.keys().any(String::is_empty) {
                return Err(PolyError::BadRecord("empty variable name".into()));
            }
            let m = r.exponents.iter().map(|(v, &e)| (v.clone(), e)).collect();
            p.add_term(m, Rational::new(num, den));
        }
        Ok(p)
    }
}

/// JSON shape of one term.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub coefficient: RationalRecord,
    pub exponents: BTreeMap<String, u32>,
}

/// Decimal strings, so coefficients of any size survive JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalRecord {
    pub num: String,
    pub den: String,
}

/// Sort key for a variable: caller-listed variables first, in listed order,
/// then the rest by alphabetic prefix and numeric suffix.
fn variable_rank<'a, S: AsRef<str>>(order: &[S], name: &'a str) -> (usize, &'a str, u64, &'a str) {
    let listed = order
        .iter()
        .position(|v| v.as_ref() == name)
        .unwrap_or(order.len());
    let split = name.trim_end_matches(|c: char| c.is_ascii_digit()).len();
    let (prefix, digits) = name.split_at(split);
    let suffix = digits.parse().unwrap_or(0);
    (listed, prefix, suffix, name)
}

fn grlex_desc(vars: &[&str], a: &Monomial, b: &Monomial) -> Ordering {
    b.degree().cmp(&a.degree()).then_with(|| {
        vars.iter()
            .map(|v| b.exponent(v).cmp(&a.exponent(v)))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    })
}

fn render_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("({}/{})", c.numer(), c.denom())
    }
}

fn render_monomial<S: AsRef<str>>(m: &Monomial, order: &[S], joiner: &str) -> String {
    let mut vars: Vec<(&String, &u32)> = m.exponents.iter().collect();
    vars.sort_by(|(a, _), (b, _)| variable_rank(order, a).cmp(&variable_rank(order, b)));
    vars.into_iter()
        .map(|(v, &e)| {
            if e == 1 {
                v.clone()
            } else {
                format!("{v}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join(joiner)
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render::<&str>(&[]))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;

    fn add(mut self, rhs: Polynomial) -> Polynomial {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: Polynomial) -> Polynomial {
        self + (-rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

/// Parses the text form produced by [`Polynomial::render`], plus `*` as a
/// factor separator and bare `a/b` coefficients.
///
/// A variable is one ASCII letter optionally followed by digits, which is
/// what makes juxtaposed forms like `3br^2w` unambiguous.
impl FromStr for Polynomial {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Parser::new(s).polynomial()
    }
}

struct Parser<'a> {
    input: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(input: &'a str) -> Self {
        Parser {
            input,
            chars: input.chars().collect(),
            pos: 0,
        }
    }

    fn error(&self, reason: &'static str) -> PolyError {
        PolyError::Parse {
            input: self.input.to_string(),
            offset: self.pos,
            reason,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits.parse().ok()
    }

    fn exponent(&mut self) -> Result<u32, PolyError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits.parse().map_err(|_| self.error("expected exponent"))
    }

    fn polynomial(&mut self) -> Result<Polynomial, PolyError> {
        let mut result = Polynomial::zero();
        self.skip_ws();
        let mut negative = self.eat('-');
        if !negative {
            self.eat('+');
        }
        loop {
            self.skip_ws();
            let (m, c) = self.term()?;
            result.add_term(m, if negative { -c } else { c });
            self.skip_ws();
            match self.peek() {
                None => return Ok(result),
                Some('+') => negative = false,
                Some('-') => negative = true,
                Some(_) => return Err(self.error("expected '+' or '-'")),
            }
            self.pos += 1;
        }
    }

    fn coefficient(&mut self) -> Result<Option<Rational>, PolyError> {
        if self.eat('(') {
            let num = self
                .integer()
                .ok_or_else(|| self.error("expected numerator"))?;
            if !self.eat('/') {
                return Err(self.error("expected '/'"));
            }
            let den = self
                .integer()
                .ok_or_else(|| self.error("expected denominator"))?;
            if !self.eat(')') {
                return Err(self.error("expected ')'"));
            }
            if den.is_zero() {
                return Err(self.error("zero denominator"));
            }
            return Ok(Some(Rational::new(num, den)));
        }
        match self.integer() {
            None => Ok(None),
            Some(num) if self.eat('/') => {
                let den = self
                    .integer()
                    .ok_or_else(|| self.error("expected denominator"))?;
                if den.is_zero() {
                    return Err(self.error("zero denominator"));
                }
                Ok(Some(Rational::new(num, den)))
            }
            Some(num) => Ok(Some(Rational::from_integer(num))),
        }
    }

    fn term(&mut self) -> Result<(Monomial, Rational), PolyError> {
        let coefficient = self.coefficient()?;
        let mut factors: Vec<(String, u32)> = Vec::new();
        loop {
            let save = self.pos;
            self.skip_ws();
            let separated =
                (coefficient.is_some() || !factors.is_empty()) && (self.eat('·') || self.eat('*'));
            if separated {
                self.skip_ws();
            }
            match self.peek() {
                Some(c) if c.is_ascii_alphabetic() => {
                    let mut name = String::from(c);
                    self.pos += 1;
                    while let Some(d) = self.peek().filter(|d| d.is_ascii_digit()) {
                        name.push(d);
                        self.pos += 1;
                    }
                    let e = if self.eat('^') { self.exponent()? } else { 1 };
                    factors.push((name, e));
                }
                _ if separated => return Err(self.error("expected variable after separator")),
                _ => {
                    self.pos = save;
                    break;
                }
            }
        }
        if coefficient.is_none() && factors.is_empty() {
            return Err(self.error("expected a term"));
        }
        Ok((
            factors.into_iter().collect(),
            coefficient.unwrap_or_else(Rational::one),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn poly(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn mono(pairs: &[(&str, u32)]) -> Monomial {
        pairs.iter().map(|&(v, e)| (v, e)).collect()
    }

    #[test]
    fn addition() {
        let sum = Polynomial::var("x1").pow(4) + Polynomial::var("x2").pow(2);
        assert_eq!(sum.len(), 2);
        assert_eq!(&sum + &Polynomial::zero(), sum);
        assert_eq!(poly("r + w") + poly("r - w"), poly("2r"));
        assert!((poly("r") - poly("r")).is_zero());
    }

    #[test]
    fn multiplication() {
        let m = Polynomial::var("x1").pow(2) * Polynomial::var("x2");
        assert_eq!(m, Polynomial::term(mono(&[("x1", 2), ("x2", 1)]), q(1, 1)));
        assert_eq!(&m * &Polynomial::one(), m);
        assert_eq!(poly("r + w") * poly("r + w"), poly("r^2 + 2rw + w^2"));
        assert!((&m * &Polynomial::zero()).is_zero());
    }

    #[test]
    fn powers() {
        let p = poly("r + w + b");
        assert_eq!(p.pow(0), Polynomial::one());
        assert_eq!(p.pow(1), p);
        assert_eq!(p.pow(4), &(&p * &p) * &(&p * &p));
    }

    #[test]
    fn scaling() {
        let p = poly("x1^4 + x2^2 + 2x4");
        assert_eq!(p.scale(&q(1, 4)), poly("(1/4)x1^4 + (1/4)x2^2 + (1/2)x4"));
        assert_eq!(p.scale(&q(1, 1)), p);
        assert!(p.scale(&q(0, 1)).is_zero());
    }

    #[test]
    fn substitution() {
        let x1 = BTreeMap::from([("x1".to_string(), Polynomial::var("x1"))]);
        assert_eq!(poly("x1").substitute(&x1).unwrap(), poly("x1"));
        let rw = BTreeMap::from([("x1".to_string(), poly("r + w"))]);
        assert_eq!(
            poly("x1^2").substitute(&rw).unwrap(),
            poly("r^2 + 2rw + w^2")
        );
        assert_eq!(
            poly("x1 + x2").substitute(&rw),
            Err(PolyError::UnboundVariable("x2".into()))
        );
    }

    #[test]
    fn coefficients_and_evaluation() {
        let p = poly("(1/4)x1^4 + 3x2");
        assert_eq!(p.coefficient(&mono(&[("x1", 4)])), q(1, 4));
        assert_eq!(p.coefficient(&mono(&[("x2", 2)])), q(0, 1));
        let five = Polynomial::constant(q(5, 1));
        assert_eq!(five.evaluate(&BTreeMap::new()).unwrap(), q(5, 1));
        let vals = BTreeMap::from([("x1".to_string(), q(2, 1)), ("x2".to_string(), q(1, 3))]);
        assert_eq!(p.evaluate(&vals).unwrap(), q(5, 1));
        assert_eq!(
            p.evaluate(&BTreeMap::new()),
            Err(PolyError::UnboundVariable("x1".into()))
        );
        assert_eq!(p.coefficient_sum(), q(13, 4));
    }

    #[test]
    fn rendering() {
        let ci = poly("(1/8)x1^4 + (3/8)x2^2 + (1/4)x1^2x2 + (1/4)x4");
        assert_eq!(
            ci.render(&["x1", "x2", "x4"]),
            "(1/8)·x1^4 + (1/4)·x1^2·x2 + (3/8)·x2^2 + (1/4)·x4"
        );
        // Unlisted variables fall back to natural order.
        assert_eq!(ci.to_string(), ci.render(&["x1", "x2", "x4"]));
        let p = poly("b^2 + 2rw - 3 + w");
        assert_eq!(p.render(&["r", "w", "b"]), "2rw + b^2 + w - 3");
        assert_eq!(p.render(&["b", "w", "r"]), "b^2 + 2wr + w - 3");
        assert_eq!(poly("-x1 + x2").render(&["x1", "x2"]), "-x1 + x2");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(Polynomial::constant(q(-1, 2)).to_string(), "-(1/2)");
        let natural = poly("x10 + x2");
        assert_eq!(natural.to_string(), "x2 + x10");
    }

    #[test]
    fn parse_forms() {
        assert_eq!(poly("3br^2w"), poly("3 * b * r^2 * w"));
        assert_eq!(poly("1/2 x1"), poly("(1/2)·x1"));
        assert_eq!(poly("x1 + x1"), poly("2x1"));
        assert_eq!(poly("0"), Polynomial::zero());
        for bad in ["", "+", "x^", "(1/0)x", "x1 +", "2 ·", "x!", "(1/2"] {
            assert!(bad.parse::<Polynomial>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn render_parse_round_trip() {
        let p = poly("(1/8)x1^4 - (3/8)x2^2 + 7x1^2x2 - 12");
        assert_eq!(poly(&p.render(&["x2"])), p);
    }

    #[test]
    fn records_round_trip() {
        let p = poly("(1/8)x1^4 + (3/8)x2^2 - 2");
        let records = p.to_records(&["x1", "x2"]);
        assert_eq!(
            records[0].coefficient,
            RationalRecord {
                num: "1".into(),
                den: "8".into()
            }
        );
        assert!(records[2].exponents.is_empty());
        assert_eq!(Polynomial::from_records(&records).unwrap(), p);
        let bad = TermRecord {
            coefficient: RationalRecord {
                num: "1".into(),
                den: "0".into(),
            },
            exponents: BTreeMap::new(),
        };
        assert!(Polynomial::from_records(&[bad]).is_err());
    }
}
