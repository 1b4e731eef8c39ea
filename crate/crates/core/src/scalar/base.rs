//! Base fields: Q, F_p and cyclotomic extensions Q(ζ_n).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::{self, Arith, Rationals};

#[derive(Clone, Debug)]
pub(crate) enum BaseField {
    Rationals,
    Prime(u64),
    /// `modulus` is the monic cyclotomic polynomial Φ_n.
    Cyclotomic { n: u32, modulus: Vec<BigRational> },
}

/// Canonical element of a base field. Cyclotomic payloads always have
/// exactly `deg Φ_n` coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) enum BaseVal {
    Q(BigRational),
    P(u64),
    C(Vec<BigRational>),
}

impl BaseField {
    pub(crate) fn cyclotomic(n: u32) -> Self {
        BaseField::Cyclotomic {
            n,
            modulus: poly::cyclotomic_polynomial(n),
        }
    }

    pub(crate) fn characteristic(&self) -> u64 {
        match self {
            BaseField::Prime(p) => *p,
            _ => 0,
        }
    }

    fn phi(&self) -> usize {
        match self {
            BaseField::Cyclotomic { modulus, .. } => modulus.len() - 1,
            _ => 0,
        }
    }

    pub(crate) fn from_rational(&self, r: &BigRational) -> Option<BaseVal> {
        match self {
            BaseField::Rationals => Some(BaseVal::Q(r.clone())),
            BaseField::Prime(p) => {
                let num = mod_bigint(r.numer(), *p);
                let den = mod_bigint(r.denom(), *p);
                let inv = inv_mod(den, *p)?;
                Some(BaseVal::P(mul_mod(num, inv, *p)))
            }
            BaseField::Cyclotomic { .. } => {
                let mut v = vec![BigRational::zero(); self.phi()];
                v[0] = r.clone();
                Some(BaseVal::C(v))
            }
        }
    }

    /// The generator ζ of a cyclotomic field.
    pub(crate) fn generator(&self) -> Option<BaseVal> {
        match self {
            BaseField::Cyclotomic { .. } => {
                let x = vec![BigRational::zero(), BigRational::one()];
                Some(self.reduce_cyclo(x))
            }
            _ => None,
        }
    }

    fn reduce_cyclo(&self, p: Vec<BigRational>) -> BaseVal {
        let BaseField::Cyclotomic { modulus, .. } = self else {
            unreachable!("reduce_cyclo on a non-cyclotomic field")
        };
        let p = poly::trim(&Rationals, p);
        let (_, mut rem) = poly::divrem(&Rationals, &p, modulus);
        rem.resize(self.phi(), BigRational::zero());
        BaseVal::C(rem)
    }

    /// Returns the value as a rational if it lies in the prime subfield Q.
    pub(crate) fn as_rational(&self, v: &BaseVal) -> Option<BigRational> {
        match v {
            BaseVal::Q(r) => Some(r.clone()),
            BaseVal::P(_) => None,
            BaseVal::C(c) => {
                if c.iter().skip(1).all(Zero::is_zero) {
                    Some(c[0].clone())
                } else {
                    None
                }
            }
        }
    }

    /// Embeds a value of `other` (Q or the same field) into `self`.
    pub(crate) fn embed_from(&self, other: &BaseField, v: &BaseVal) -> Option<BaseVal> {
        match (other, v) {
            (BaseField::Rationals, BaseVal::Q(r)) => self.from_rational(r),
            _ if self.same_as(other) => Some(v.clone()),
            _ => None,
        }
    }

    pub(crate) fn same_as(&self, other: &BaseField) -> bool {
        match (self, other) {
            (BaseField::Rationals, BaseField::Rationals) => true,
            (BaseField::Prime(p), BaseField::Prime(q)) => p == q,
            (BaseField::Cyclotomic { n, .. }, BaseField::Cyclotomic { n: m, .. }) => n == m,
            _ => false,
        }
    }
}

impl Arith for BaseField {
    type E = BaseVal;

    fn zero(&self) -> BaseVal {
        match self {
            BaseField::Rationals => BaseVal::Q(BigRational::zero()),
            BaseField::Prime(_) => BaseVal::P(0),
            BaseField::Cyclotomic { .. } => BaseVal::C(vec![BigRational::zero(); self.phi()]),
        }
    }

    fn one(&self) -> BaseVal {
        self.from_rational(&BigRational::one()).expect("1 exists")
    }

    fn from_int(&self, n: &BigInt) -> BaseVal {
        match self {
            BaseField::Prime(p) => BaseVal::P(mod_bigint(n, *p)),
            _ => self
                .from_rational(&BigRational::from_integer(n.clone()))
                .expect("integers embed"),
        }
    }

    fn add(&self, a: &BaseVal, b: &BaseVal) -> BaseVal {
        match (self, a, b) {
            (_, BaseVal::Q(x), BaseVal::Q(y)) => BaseVal::Q(x + y),
            (BaseField::Prime(p), BaseVal::P(x), BaseVal::P(y)) => {
                BaseVal::P(((*x as u128 + *y as u128) % *p as u128) as u64)
            }
            (_, BaseVal::C(x), BaseVal::C(y)) => {
                BaseVal::C(x.iter().zip(y).map(|(s, t)| s + t).collect())
            }
            _ => unreachable!("mixed base values"),
        }
    }

    fn neg(&self, a: &BaseVal) -> BaseVal {
        match (self, a) {
            (_, BaseVal::Q(x)) => BaseVal::Q(-x),
            (BaseField::Prime(p), BaseVal::P(x)) => BaseVal::P(if *x == 0 { 0 } else { p - x }),
            (_, BaseVal::C(x)) => BaseVal::C(x.iter().map(|s| -s).collect()),
            _ => unreachable!("mixed base values"),
        }
    }

    fn sub(&self, a: &BaseVal, b: &BaseVal) -> BaseVal {
        match (a, b) {
            (BaseVal::Q(x), BaseVal::Q(y)) => BaseVal::Q(x - y),
            (BaseVal::C(x), BaseVal::C(y)) => {
                BaseVal::C(x.iter().zip(y).map(|(s, t)| s - t).collect())
            }
            _ => self.add(a, &self.neg(b)),
        }
    }

    fn mul(&self, a: &BaseVal, b: &BaseVal) -> BaseVal {
        match (self, a, b) {
            (_, BaseVal::Q(x), BaseVal::Q(y)) => BaseVal::Q(x * y),
            (BaseField::Prime(p), BaseVal::P(x), BaseVal::P(y)) => BaseVal::P(mul_mod(*x, *y, *p)),
            (BaseField::Cyclotomic { .. }, BaseVal::C(x), BaseVal::C(y)) => {
                self.reduce_cyclo(poly::mul(&Rationals, x, y))
            }
            _ => unreachable!("mixed base values"),
        }
    }

    fn inv(&self, a: &BaseVal) -> Option<BaseVal> {
        if self.is_zero(a) {
            return None;
        }
        match (self, a) {
            (_, BaseVal::Q(x)) => Some(BaseVal::Q(x.recip())),
            (BaseField::Prime(p), BaseVal::P(x)) => inv_mod(*x, *p).map(BaseVal::P),
            (BaseField::Cyclotomic { modulus, .. }, BaseVal::C(x)) => {
                let x = poly::trim(&Rationals, x.clone());
                let (g, s) = poly::half_ext_gcd(&Rationals, &x, modulus);
                debug_assert_eq!(g.len(), 1, "cyclotomic polynomial is irreducible");
                Some(self.reduce_cyclo(s))
            }
            _ => unreachable!("mixed base values"),
        }
    }

    fn is_zero(&self, a: &BaseVal) -> bool {
        match a {
            BaseVal::Q(x) => x.is_zero(),
            BaseVal::P(x) => *x == 0,
            BaseVal::C(x) => x.iter().all(Zero::is_zero),
        }
    }
}

pub(crate) fn mod_bigint(n: &BigInt, p: u64) -> u64 {
    let m = BigInt::from(p);
    let r = n.mod_floor(&m);
    r.to_u64().expect("residue fits")
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, p: u64) -> Option<u64> {
    if a % p == 0 {
        None
    } else {
        Some(pow_mod(a, p - 2, p))
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// True if the rational is negative (used by printers).
pub(crate) fn is_negative(r: &BigRational) -> bool {
    r.is_negative()
}
