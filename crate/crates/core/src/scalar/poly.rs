//! Dense univariate polynomials over an exact coefficient domain.
//!
//! Polynomials are little-endian coefficient vectors with no trailing zeros;
//! the zero polynomial is the empty vector.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Field operations on a coefficient type. Implementors are cheap handles.
pub(crate) trait Arith {
    type E: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn from_int(&self, n: &BigInt) -> Self::E;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn inv(&self, a: &Self::E) -> Option<Self::E>;
    fn is_zero(&self, a: &Self::E) -> bool;

    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E {
        self.add(a, &self.neg(b))
    }

    fn is_one(&self, a: &Self::E) -> bool {
        *a == self.one()
    }
}

/// The rationals.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Rationals;

impl Arith for Rationals {
    type E = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_int(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
}

pub(crate) fn trim<A: Arith>(f: &A, mut p: Vec<A::E>) -> Vec<A::E> {
    while p.last().is_some_and(|c| f.is_zero(c)) {
        p.pop();
    }
    p
}

pub(crate) fn degree<E>(p: &[E]) -> Option<usize> {
    p.len().checked_sub(1)
}

pub(crate) fn add<A: Arith>(f: &A, a: &[A::E], b: &[A::E]) -> Vec<A::E> {
    let n = a.len().max(b.len());
    let zero = f.zero();
    let out = (0..n)
        .map(|i| f.add(a.get(i).unwrap_or(&zero), b.get(i).unwrap_or(&zero)))
        .collect();
    trim(f, out)
}

pub(crate) fn neg<A: Arith>(f: &A, a: &[A::E]) -> Vec<A::E> {
    a.iter().map(|c| f.neg(c)).collect()
}

pub(crate) fn sub<A: Arith>(f: &A, a: &[A::E], b: &[A::E]) -> Vec<A::E> {
    add(f, a, &neg(f, b))
}

pub(crate) fn scale<A: Arith>(f: &A, a: &[A::E], c: &A::E) -> Vec<A::E> {
    if f.is_zero(c) {
        return Vec::new();
    }
    trim(f, a.iter().map(|x| f.mul(x, c)).collect())
}

pub(crate) fn mul<A: Arith>(f: &A, a: &[A::E], b: &[A::E]) -> Vec<A::E> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = f.add(&out[i + j], &f.mul(x, y));
        }
    }
    trim(f, out)
}

/// Euclidean division; `b` must be nonzero.
pub(crate) fn divrem<A: Arith>(f: &A, a: &[A::E], b: &[A::E]) -> (Vec<A::E>, Vec<A::E>) {
    let db = degree(b).expect("polynomial division by zero");
    let lead_inv = f.inv(&b[db]).expect("leading coefficient is nonzero");
    let mut rem = a.to_vec();
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![f.zero(); rem.len() - db];
    while let Some(dr) = degree(&rem) {
        if dr < db {
            break;
        }
        let c = f.mul(&rem[dr], &lead_inv);
        let shift = dr - db;
        for (i, y) in b.iter().enumerate() {
            rem[shift + i] = f.sub(&rem[shift + i], &f.mul(&c, y));
        }
        quot[shift] = c;
        rem = trim(f, rem);
    }
    (trim(f, quot), rem)
}

pub(crate) fn make_monic<A: Arith>(f: &A, a: &[A::E]) -> Vec<A::E> {
    match a.last() {
        None => Vec::new(),
        Some(lead) => {
            let inv = f.inv(lead).expect("nonzero leading coefficient");
            scale(f, a, &inv)
        }
    }
}

/// Monic gcd (zero if both inputs are zero).
pub(crate) fn gcd<A: Arith>(f: &A, a: &[A::E], b: &[A::E]) -> Vec<A::E> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    while !y.is_empty() {
        let (_, r) = divrem(f, &x, &y);
        x = y;
        y = r;
    }
    make_monic(f, &x)
}

/// Returns `(g, s)` with `g = gcd(a, m)` monic and `s·a ≡ g (mod m)`.
pub(crate) fn half_ext_gcd<A: Arith>(f: &A, a: &[A::E], m: &[A::E]) -> (Vec<A::E>, Vec<A::E>) {
    let (mut r0, mut r1) = (a.to_vec(), m.to_vec());
    let (mut s0, mut s1) = (vec![f.one()], Vec::new());
    while !r1.is_empty() {
        let (q, r) = divrem(f, &r0, &r1);
        let s = sub(f, &s0, &mul(f, &q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    match r0.last() {
        None => (Vec::new(), Vec::new()),
        Some(lead) => {
            let inv = f.inv(lead).expect("nonzero leading coefficient");
            (scale(f, &r0, &inv), scale(f, &s0, &inv))
        }
    }
}

/// The n-th cyclotomic polynomial over Q, monic, little-endian.
pub(crate) fn cyclotomic_polynomial(n: u32) -> Vec<BigRational> {
    let q = Rationals;
    let mut xn_minus_1 = vec![BigRational::zero(); n as usize + 1];
    xn_minus_1[0] = -BigRational::one();
    xn_minus_1[n as usize] = BigRational::one();
    let mut p = xn_minus_1;
    for d in 1..n {
        if n % d == 0 {
            let (quot, rem) = divrem(&q, &p, &cyclotomic_polynomial(d));
            debug_assert!(rem.is_empty());
            p = quot;
        }
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![r(-1), r(1)]);
        assert_eq!(cyclotomic_polynomial(3), vec![r(1), r(1), r(1)]);
        assert_eq!(cyclotomic_polynomial(4), vec![r(1), r(0), r(1)]);
        assert_eq!(cyclotomic_polynomial(6), vec![r(1), r(-1), r(1)]);
        assert_eq!(cyclotomic_polynomial(12), vec![r(1), r(0), r(-1), r(0), r(1)]);
    }

    #[test]
    fn ext_gcd_gives_inverse() {
        let f = Rationals;
        let m = cyclotomic_polynomial(5);
        let a = vec![r(2), r(0), r(1)];
        let (g, s) = half_ext_gcd(&f, &a, &m);
        assert_eq!(g, vec![r(1)]);
        let (_, rem) = divrem(&f, &mul(&f, &s, &a), &m);
        assert_eq!(rem, vec![r(1)]);
    }

    #[test]
    fn gcd_of_shared_factor() {
        let f = Rationals;
        // (x-1)(x+2) and (x-1)(x-3)
        let a = mul(&f, &[r(-1), r(1)], &[r(2), r(1)]);
        let b = mul(&f, &[r(-1), r(1)], &[r(-3), r(1)]);
        assert_eq!(gcd(&f, &a, &b), vec![r(-1), r(1)]);
    }
}
