//! Scalar literal syntax.
//!
//! Printing produces `a/b` for rationals, `r mod p` for residues, polynomials
//! in `z` for cyclotomic elements and `(num)/(den)` in the field variable for
//! rational functions (with a trailing ` mod p` over prime fields). Parsing
//! evaluates arbitrary arithmetic expressions over these symbols, so every
//! printed literal parses back to the same element.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::base::{is_negative, BaseField, BaseVal};
use super::{Field, Scalar, Value};
use crate::error::{Error, Result};

pub(super) fn print(s: &Scalar) -> String {
    let inner = &s.field.0;
    let mod_suffix = match inner.base {
        BaseField::Prime(p) => format!(" mod {p}"),
        _ => String::new(),
    };
    match &s.value {
        Value::Base(BaseVal::Q(r)) => print_rational(r),
        Value::Base(BaseVal::P(r)) => format!("{r}{mod_suffix}"),
        Value::Base(BaseVal::C(c)) => print_poly(&rational_terms(c), "z"),
        Value::Frac(fr) => {
            let var = inner.var.as_deref().expect("function field has a variable");
            let num = print_poly(&base_terms(&inner.base, &fr.num), var);
            if fr.den.len() == 1 {
                format!("{num}{mod_suffix}")
            } else {
                let den = print_poly(&base_terms(&inner.base, &fr.den), var);
                format!("({num})/({den}){mod_suffix}")
            }
        }
    }
}

fn print_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A coefficient prepared for printing: `negative` and `unit` are only set
/// when the coefficient is a plain rational.
struct Term {
    power: usize,
    body: String,
    negative: bool,
    unit: bool,
}

fn rational_term(power: usize, r: &BigRational) -> Term {
    Term {
        power,
        body: print_rational(&r.abs()),
        negative: is_negative(r),
        unit: r.abs().is_one(),
    }
}

fn rational_terms(c: &[BigRational]) -> Vec<Term> {
    c.iter()
        .enumerate()
        .filter(|(_, r)| !r.is_zero())
        .map(|(k, r)| rational_term(k, r))
        .collect()
}

fn base_terms(base: &BaseField, coeffs: &[BaseVal]) -> Vec<Term> {
    let mut out = Vec::new();
    for (k, c) in coeffs.iter().enumerate() {
        match c {
            BaseVal::Q(r) if !r.is_zero() => out.push(rational_term(k, r)),
            BaseVal::P(r) if *r != 0 => out.push(Term {
                power: k,
                body: r.to_string(),
                negative: false,
                unit: *r == 1,
            }),
            BaseVal::C(cs) => {
                if let Some(r) = base.as_rational(c) {
                    if !r.is_zero() {
                        out.push(rational_term(k, &r));
                    }
                } else {
                    out.push(Term {
                        power: k,
                        body: format!("({})", print_poly(&rational_terms(cs), "z")),
                        negative: false,
                        unit: false,
                    });
                }
            }
            _ => {}
        }
    }
    out
}

fn print_poly(terms: &[Term], var: &str) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, t) in terms.iter().rev().enumerate() {
        let monomial = match t.power {
            0 => String::new(),
            1 => var.to_string(),
            k => format!("{var}^{k}"),
        };
        let body = if monomial.is_empty() {
            t.body.clone()
        } else if t.unit {
            monomial
        } else {
            format!("{}*{}", t.body, monomial)
        };
        match (i, t.negative) {
            (0, false) => out.push_str(&body),
            (0, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((col, Tok::Num(digits.parse().expect("digits"))));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((col, Tok::Ident(chars[start..i].iter().collect())));
        } else if "+-*/^()".contains(c) {
            out.push((col, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(Error::parse(col, format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    field: &'a Field,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end_col: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |(c, _)| *c)
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Scalar> {
        let mut acc = self.term()?;
        loop {
            if self.eat_sym('+') {
                acc = &acc + &self.term()?;
            } else if self.eat_sym('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Scalar> {
        let mut acc = self.unary()?;
        loop {
            if self.eat_sym('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat_sym('/') {
                let col = self.col();
                let rhs = self.unary()?;
                acc = acc
                    .try_div(&rhs)
                    .map_err(|_| Error::parse(col, "division by zero"))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Scalar> {
        if self.eat_sym('-') {
            Ok(-self.unary()?)
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Scalar> {
        let base = self.atom()?;
        if !self.eat_sym('^') {
            return Ok(base);
        }
        let col = self.col();
        let negative = self.eat_sym('-');
        match self.toks.get(self.pos).cloned() {
            Some((_, Tok::Num(n))) => {
                self.pos += 1;
                let e: i64 = n
                    .try_into()
                    .map_err(|_| Error::parse(col, "exponent too large"))?;
                let e = if negative { -e } else { e };
                base.pow(e).map_err(|_| Error::parse(col, "zero to a negative power"))
            }
            _ => Err(Error::parse(col, "expected integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<Scalar> {
        let col = self.col();
        match self.toks.get(self.pos).cloned() {
            Some((_, Tok::Num(n))) => {
                self.pos += 1;
                Ok(self.field.from_bigint(&n))
            }
            Some((_, Tok::Ident(name))) => {
                self.pos += 1;
                if Some(name.as_str()) == self.field.variable() {
                    Ok(self.field.variable_element().expect("function field"))
                } else if name == "z" {
                    self.field
                        .cyclotomic_generator()
                        .ok_or_else(|| Error::parse(col, "`z` requires a cyclotomic field"))
                } else {
                    Err(Error::parse(col, format!("unknown symbol {name:?}")))
                }
            }
            Some((_, Tok::Sym('('))) => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat_sym(')') {
                    return Err(Error::parse(self.col(), "expected `)`"));
                }
                Ok(v)
            }
            Some(_) => Err(Error::parse(col, "unexpected token")),
            None => Err(Error::parse(col, "unexpected end of literal")),
        }
    }
}

pub(super) fn parse(field: &Field, s: &str) -> Result<Scalar> {
    let toks = tokenize(s)?;
    let mut p = Parser {
        field,
        toks,
        pos: 0,
        end_col: s.chars().count() + 1,
    };
    let value = p.expr()?;
    if let Some(Tok::Ident(kw)) = p.peek() {
        if kw == "mod" {
            p.pos += 1;
            let col = p.col();
            match p.toks.get(p.pos).cloned() {
                Some((_, Tok::Num(n))) => {
                    p.pos += 1;
                    if BigInt::from(field.characteristic()) != n {
                        return Err(Error::parse(col, format!("modulus {n} does not match {field}")));
                    }
                }
                _ => return Err(Error::parse(col, "expected modulus")),
            }
        }
    }
    if p.pos != p.toks.len() {
        return Err(Error::parse(p.col(), "trailing input"));
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::FieldDescriptor;

    fn round_trip(f: &Field, s: &Scalar) {
        let printed = s.to_string();
        let back = f.parse_scalar(&printed).unwrap();
        assert_eq!(&back, s, "literal {printed}");
    }

    #[test]
    fn prints_canonical_forms() {
        let q = Field::rationals();
        assert_eq!(q.from_ratio(-5, 6).unwrap().to_string(), "-5/6");
        let f5 = Field::prime(5).unwrap();
        assert_eq!(f5.from_int(-2).to_string(), "3 mod 5");
        let c3 = Field::cyclotomic(3).unwrap();
        let z = c3.cyclotomic_generator().unwrap();
        assert_eq!((&z * &z).to_string(), "-z - 1");
        let rf = Field::rational_functions("q", FieldDescriptor::Rationals).unwrap();
        let qv = rf.variable_element().unwrap();
        let x = (&qv - &rf.one()).inv().unwrap();
        assert_eq!(x.to_string(), "(1)/(q - 1)");
    }

    #[test]
    fn parses_expressions() {
        let c3 = Field::cyclotomic(3).unwrap();
        let v = c3.parse_scalar("z^2 + z + 1").unwrap();
        assert!(v.is_zero());
        let f7 = Field::prime(7).unwrap();
        assert_eq!(f7.parse_scalar("1/2 mod 7").unwrap(), f7.from_int(4));
        assert!(f7.parse_scalar("1 mod 5").is_err());
        let e = Field::rationals().parse_scalar("1 + ?").unwrap_err();
        assert!(matches!(e, Error::Parse { column: 5, .. }));
    }

    #[test]
    fn round_trips() {
        let q = Field::rationals();
        round_trip(&q, &q.from_ratio(-7, 3).unwrap());
        let c5 = Field::cyclotomic(5).unwrap();
        round_trip(&c5, &c5.parse_scalar("1/2*z^3 - z + 4").unwrap());
        let rf = Field::rational_functions("q", FieldDescriptor::Cyclotomic(3)).unwrap();
        round_trip(&rf, &rf.parse_scalar("(z*q^2 - 1)/(q^3 + z)").unwrap());
        let rp = Field::rational_functions("t", FieldDescriptor::PrimeField(5)).unwrap();
        round_trip(&rp, &rp.parse_scalar("(2*t + 1)/(3*t^2) mod 5").unwrap());
        round_trip(&rp, &rp.zero());
    }
}
