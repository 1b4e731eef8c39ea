//! Exact scalars: rationals, prime fields, cyclotomic fields and univariate
//! rational function fields over any of those.
//!
//! Every [`Scalar`] carries a handle to its [`Field`]. Payloads are kept in a
//! canonical form so that structural equality is field equality: reduced
//! fractions, residues in `[0, p)`, cyclotomic polynomials reduced modulo
//! `Φ_n`, and rational functions with coprime parts and a monic denominator.

mod base;
mod literal;
pub(crate) mod poly;

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use base::{BaseField, BaseVal};
use poly::Arith;

/// Describes one of the supported fields.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldDescriptor {
    Rationals,
    PrimeField(u64),
    /// `Q(ζ_n)`; the generator prints as `z`.
    Cyclotomic(u32),
    /// `base(var)` where `base` is not itself a function field.
    RationalFunctions {
        var: String,
        base: Box<FieldDescriptor>,
    },
}

impl FieldDescriptor {
    pub fn validate(&self) -> Result<()> {
        match self {
            FieldDescriptor::Rationals => Ok(()),
            FieldDescriptor::PrimeField(p) => {
                if base::is_prime(*p) {
                    Ok(())
                } else {
                    Err(Error::InvalidField(format!("{p} is not prime")))
                }
            }
            FieldDescriptor::Cyclotomic(n) => {
                if *n >= 1 {
                    Ok(())
                } else {
                    Err(Error::InvalidField("cyclotomic order must be >= 1".into()))
                }
            }
            FieldDescriptor::RationalFunctions { var, base } => {
                if matches!(**base, FieldDescriptor::RationalFunctions { .. }) {
                    return Err(Error::InvalidField(
                        "nested rational function fields are not supported".into(),
                    ));
                }
                let valid_ident = var.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                    && var.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
                if !valid_ident || var == "mod" {
                    return Err(Error::InvalidField(format!("bad variable name {var:?}")));
                }
                if var == "z" && matches!(**base, FieldDescriptor::Cyclotomic(_)) {
                    return Err(Error::InvalidField(
                        "variable `z` is reserved for the cyclotomic generator".into(),
                    ));
                }
                base.validate()
            }
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldDescriptor::PrimeField(p) => *p,
            FieldDescriptor::RationalFunctions { base, .. } => base.characteristic(),
            _ => 0,
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rationals => write!(f, "Q"),
            FieldDescriptor::PrimeField(p) => write!(f, "fp:{p}"),
            FieldDescriptor::Cyclotomic(n) => write!(f, "cyclotomic:{n}"),
            FieldDescriptor::RationalFunctions { var, base } => match **base {
                FieldDescriptor::Rationals => write!(f, "ratfunc:{var}"),
                _ => write!(f, "ratfunc:{var}:{base}"),
            },
        }
    }
}

impl FromStr for FieldDescriptor {
    type Err = Error;

    /// Accepts `Q`, `fp:P`, `cyclotomic:N`, `ratfunc`, `ratfunc:VAR` and
    /// `ratfunc:VAR:BASE`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidField(s.to_string());
        let desc = if s == "Q" || s == "QQ" || s == "rationals" {
            FieldDescriptor::Rationals
        } else if let Some(p) = s.strip_prefix("fp:") {
            FieldDescriptor::PrimeField(p.parse().map_err(|_| bad())?)
        } else if let Some(n) = s.strip_prefix("cyclotomic:") {
            FieldDescriptor::Cyclotomic(n.parse().map_err(|_| bad())?)
        } else if s == "ratfunc" {
            FieldDescriptor::RationalFunctions {
                var: "q".into(),
                base: Box::new(FieldDescriptor::Rationals),
            }
        } else if let Some(rest) = s.strip_prefix("ratfunc:") {
            let (var, base) = match rest.split_once(':') {
                Some((v, b)) => (v, b.parse()?),
                None => (rest, FieldDescriptor::Rationals),
            };
            FieldDescriptor::RationalFunctions {
                var: var.to_string(),
                base: Box::new(base),
            }
        } else {
            return Err(bad());
        };
        desc.validate()?;
        Ok(desc)
    }
}

#[derive(Debug)]
struct FieldInner {
    desc: FieldDescriptor,
    base: BaseField,
    var: Option<String>,
}

/// Shared handle to a field; cheap to clone.
#[derive(Clone, Debug)]
pub struct Field(Arc<FieldInner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.desc == other.0.desc
    }
}

impl Eq for Field {}

impl Hash for Field {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.desc.hash(state)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.desc.fmt(f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Value {
    Base(BaseVal),
    Frac(Box<Frac>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Frac {
    num: Vec<BaseVal>,
    den: Vec<BaseVal>,
}

/// An exact field element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    field: Field,
    value: Value,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Applies `op` to two scalars of the same field.
pub fn arith(a: &Scalar, b: &Scalar, op: ArithOp) -> Result<Scalar> {
    match op {
        ArithOp::Add => a.try_add(b),
        ArithOp::Sub => a.try_sub(b),
        ArithOp::Mul => a.try_mul(b),
        ArithOp::Div => a.try_div(b),
    }
}

/// A primitive `n`-th root of unity in `field`; see [`Field::primitive_root`].
pub fn primitive_root(field: &Field, n: u64) -> Result<Scalar> {
    field.primitive_root(n)
}

impl FieldInner {
    fn normalize_frac(&self, num: Vec<BaseVal>, den: Vec<BaseVal>) -> Value {
        let b = &self.base;
        if num.is_empty() {
            return Value::Frac(Box::new(Frac {
                num: Vec::new(),
                den: vec![b.one()],
            }));
        }
        let g = poly::gcd(b, &num, &den);
        let (mut num, mut den) = if g.len() > 1 {
            (poly::divrem(b, &num, &g).0, poly::divrem(b, &den, &g).0)
        } else {
            (num, den)
        };
        let lead = den.last().expect("nonzero denominator").clone();
        if !b.is_one(&lead) {
            let inv = b.inv(&lead).expect("nonzero");
            num = poly::scale(b, &num, &inv);
            den = poly::scale(b, &den, &inv);
        }
        Value::Frac(Box::new(Frac { num, den }))
    }

    fn is_zero(&self, v: &Value) -> bool {
        match v {
            Value::Base(x) => self.base.is_zero(x),
            Value::Frac(fr) => fr.num.is_empty(),
        }
    }

    fn lift(&self, x: BaseVal) -> Value {
        if self.var.is_some() {
            let b = &self.base;
            let num = poly::trim(b, vec![x]);
            Value::Frac(Box::new(Frac {
                num,
                den: vec![b.one()],
            }))
        } else {
            Value::Base(x)
        }
    }

    fn add(&self, a: &Value, b: &Value) -> Value {
        match (a, b) {
            (Value::Base(x), Value::Base(y)) => Value::Base(self.base.add(x, y)),
            (Value::Frac(x), Value::Frac(y)) => {
                let f = &self.base;
                if x.den == y.den {
                    return self.normalize_frac(poly::add(f, &x.num, &y.num), x.den.clone());
                }
                let num = poly::add(f, &poly::mul(f, &x.num, &y.den), &poly::mul(f, &y.num, &x.den));
                self.normalize_frac(num, poly::mul(f, &x.den, &y.den))
            }
            _ => unreachable!("mixed scalar representations"),
        }
    }

    fn neg(&self, a: &Value) -> Value {
        match a {
            Value::Base(x) => Value::Base(self.base.neg(x)),
            Value::Frac(x) => Value::Frac(Box::new(Frac {
                num: poly::neg(&self.base, &x.num),
                den: x.den.clone(),
            })),
        }
    }

    fn mul(&self, a: &Value, b: &Value) -> Value {
        match (a, b) {
            (Value::Base(x), Value::Base(y)) => Value::Base(self.base.mul(x, y)),
            (Value::Frac(x), Value::Frac(y)) => {
                let f = &self.base;
                self.normalize_frac(poly::mul(f, &x.num, &y.num), poly::mul(f, &x.den, &y.den))
            }
            _ => unreachable!("mixed scalar representations"),
        }
    }

    fn inv(&self, a: &Value) -> Option<Value> {
        match a {
            Value::Base(x) => self.base.inv(x).map(Value::Base),
            Value::Frac(x) => {
                if x.num.is_empty() {
                    None
                } else {
                    Some(self.normalize_frac(x.den.clone(), x.num.clone()))
                }
            }
        }
    }
}

impl Field {
    pub fn new(desc: FieldDescriptor) -> Result<Field> {
        desc.validate()?;
        let (base, var) = match &desc {
            FieldDescriptor::Rationals => (BaseField::Rationals, None),
            FieldDescriptor::PrimeField(p) => (BaseField::Prime(*p), None),
            FieldDescriptor::Cyclotomic(n) => (BaseField::cyclotomic(*n), None),
            FieldDescriptor::RationalFunctions { var, base } => {
                let inner = Field::new((**base).clone())?;
                (inner.0.base.clone(), Some(var.clone()))
            }
        };
        Ok(Field(Arc::new(FieldInner { desc, base, var })))
    }

    pub fn rationals() -> Field {
        Field::new(FieldDescriptor::Rationals).expect("Q is valid")
    }

    pub fn prime(p: u64) -> Result<Field> {
        Field::new(FieldDescriptor::PrimeField(p))
    }

    pub fn cyclotomic(n: u32) -> Result<Field> {
        Field::new(FieldDescriptor::Cyclotomic(n))
    }

    pub fn rational_functions(var: &str, base: FieldDescriptor) -> Result<Field> {
        Field::new(FieldDescriptor::RationalFunctions {
            var: var.to_string(),
            base: Box::new(base),
        })
    }

    pub fn descriptor(&self) -> &FieldDescriptor {
        &self.0.desc
    }

    pub fn characteristic(&self) -> u64 {
        self.0.base.characteristic()
    }

    /// The base field of a rational function field, or the field itself.
    pub fn base_field(&self) -> Field {
        match &self.0.desc {
            FieldDescriptor::RationalFunctions { base, .. } => {
                Field::new((**base).clone()).expect("validated")
            }
            _ => self.clone(),
        }
    }

    pub fn variable(&self) -> Option<&str> {
        self.0.var.as_deref()
    }

    fn wrap(&self, value: Value) -> Scalar {
        Scalar {
            field: self.clone(),
            value,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.wrap(self.0.lift(self.0.base.zero()))
    }

    pub fn one(&self) -> Scalar {
        self.wrap(self.0.lift(self.0.base.one()))
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        self.wrap(self.0.lift(self.0.base.from_int(n)))
    }

    pub fn from_rational(&self, r: &BigRational) -> Result<Scalar> {
        let v = self.0.base.from_rational(r).ok_or(Error::DivisionByZero)?;
        Ok(self.wrap(self.0.lift(v)))
    }

    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Scalar> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        self.from_rational(&BigRational::new(num.into(), den.into()))
    }

    /// The cyclotomic generator `z` (also inside a function field over a
    /// cyclotomic base).
    pub fn cyclotomic_generator(&self) -> Option<Scalar> {
        self.0.base.generator().map(|g| self.wrap(self.0.lift(g)))
    }

    /// The transcendental variable of a rational function field.
    pub fn variable_element(&self) -> Option<Scalar> {
        self.0.var.as_ref()?;
        let b = &self.0.base;
        Some(self.wrap(Value::Frac(Box::new(Frac {
            num: vec![b.zero(), b.one()],
            den: vec![b.one()],
        }))))
    }

    /// Parses the literal syntax produced by `Display for Scalar`.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        literal::parse(self, s)
    }

    /// A primitive `n`-th root of unity. Prime fields return the smallest
    /// residue of exact order `n`.
    pub fn primitive_root(&self, n: u64) -> Result<Scalar> {
        let none = || Error::NoSuchRoot {
            field: self.to_string(),
            n,
        };
        if n == 0 {
            return Err(none());
        }
        match &self.0.base {
            BaseField::Rationals => match n {
                1 => Ok(self.one()),
                2 => Ok(self.from_int(-1)),
                _ => Err(none()),
            },
            BaseField::Prime(p) => {
                if (p - 1) % n != 0 {
                    return Err(none());
                }
                let has_order_n = |a: u64| {
                    base::pow_mod(a, n, *p) == 1
                        && (1..n).all(|m| n % m != 0 || base::pow_mod(a, m, *p) != 1)
                };
                (1..*p)
                    .find(|&a| has_order_n(a))
                    .map(|a| self.from_int(a as i64))
                    .ok_or_else(none)
            }
            BaseField::Cyclotomic { n: m, .. } => {
                let m = *m as u64;
                let z = self.cyclotomic_generator().expect("cyclotomic");
                // roots of unity in Q(ζ_m) form μ_lcm(2, m)
                if m % n == 0 {
                    z.pow((m / n) as i64)
                } else if m % 2 == 1 && (2 * m) % n == 0 {
                    (-&z).pow((2 * m / n) as i64)
                } else {
                    Err(none())
                }
            }
        }
    }

    pub(crate) fn check(&self, s: &Scalar) -> Result<()> {
        if &s.field == self {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.to_string(), s.field.to_string()))
        }
    }

    /// True if every element of `self` has a canonical image in `target`.
    pub fn embeds_into(&self, target: &Field) -> bool {
        if self == target {
            return true;
        }
        match (&self.0.desc, &target.0.desc) {
            (FieldDescriptor::Rationals, FieldDescriptor::Cyclotomic(_)) => true,
            (FieldDescriptor::Rationals, FieldDescriptor::RationalFunctions { base, .. })
            | (FieldDescriptor::PrimeField(_), FieldDescriptor::RationalFunctions { base, .. })
            | (FieldDescriptor::Cyclotomic(_), FieldDescriptor::RationalFunctions { base, .. }) => {
                let base = Field::new((**base).clone()).expect("validated");
                self.embeds_into(&base)
            }
            _ => false,
        }
    }
}

impl Arith for Field {
    type E = Scalar;

    fn zero(&self) -> Scalar {
        Field::zero(self)
    }
    fn one(&self) -> Scalar {
        Field::one(self)
    }
    fn from_int(&self, n: &BigInt) -> Scalar {
        self.from_bigint(n)
    }
    fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        a + b
    }
    fn neg(&self, a: &Scalar) -> Scalar {
        -a
    }
    fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        a * b
    }
    fn inv(&self, a: &Scalar) -> Option<Scalar> {
        a.inv().ok()
    }
    fn is_zero(&self, a: &Scalar) -> bool {
        a.is_zero()
    }
}

impl Scalar {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.field.0.is_zero(&self.value)
    }

    pub fn is_one(&self) -> bool {
        *self == self.field.one()
    }

    fn same_field(&self, other: &Scalar) -> Result<()> {
        self.field.check(other)
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(self.field.wrap(self.field.0.add(&self.value, &other.value)))
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        let neg = self.field.0.neg(&other.value);
        Ok(self.field.wrap(self.field.0.add(&self.value, &neg)))
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(self.field.wrap(self.field.0.mul(&self.value, &other.value)))
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        self.try_mul(&other.inv()?)
    }

    pub fn inv(&self) -> Result<Scalar> {
        self.field
            .0
            .inv(&self.value)
            .map(|v| self.field.wrap(v))
            .ok_or(Error::DivisionByZero)
    }

    pub fn pow(&self, e: i64) -> Result<Scalar> {
        let mut base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Rational value, if the scalar lies in Q.
    pub fn as_rational(&self) -> Option<BigRational> {
        match &self.value {
            Value::Base(x) => self.field.0.base.as_rational(x),
            Value::Frac(fr) => {
                if fr.den.len() == 1 && fr.num.len() <= 1 {
                    match fr.num.first() {
                        None => Some(BigRational::zero()),
                        Some(c) => self.field.0.base.as_rational(c),
                    }
                } else {
                    None
                }
            }
        }
    }

    /// Residue of a prime-field scalar.
    pub fn as_residue(&self) -> Option<u64> {
        match &self.value {
            Value::Base(BaseVal::P(r)) => Some(*r),
            _ => None,
        }
    }

    /// Maps `self` into `target` along the canonical inclusion
    /// (Q ⊆ Q(ζ_n), k ⊆ k(q)).
    pub fn embed(&self, target: &Field) -> Result<Scalar> {
        if &self.field == target {
            return Ok(self.clone());
        }
        let unsupported =
            || Error::UnsupportedExtension(self.field.to_string(), target.to_string());
        if !self.field.embeds_into(target) {
            return Err(unsupported());
        }
        let Value::Base(x) = &self.value else {
            return Err(unsupported());
        };
        let v = target
            .0
            .base
            .embed_from(&self.field.0.base, x)
            .ok_or_else(unsupported)?;
        Ok(target.wrap(target.0.lift(v)))
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.try_add(rhs).expect("scalar addition across fields")
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.try_sub(rhs).expect("scalar subtraction across fields")
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.try_mul(rhs).expect("scalar multiplication across fields")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.field.wrap(self.field.0.neg(&self.value))
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&literal::print(self))
    }
}
