//! `U_q(sl2)` and its quotients through PBW normal forms `F^a K^b E^c`.
//!
//! Relations: `KE = q²EK`, `KF = q⁻²FK`, `EF − FE = (K − K⁻¹)/(q − q⁻¹)`,
//! `KK⁻¹ = K⁻¹K = 1`. The quotient by `EⁿU + FⁿU` additionally kills
//! `Eⁿ` and `Fⁿ`; the small quantum group also imposes `Kⁿ = 1`.
//! Coalgebra: `ΔE = E⊗1 + K⊗E`, `ΔF = F⊗K⁻¹ + 1⊗F`, `ΔK = K⊗K`.

mod probe;
mod rewrite;

pub use probe::{adfin_probe, AdModule, WindowCheck};
pub use rewrite::{Letter, RewriteSystem, Rule, Word};

use std::collections::HashMap;
use std::fmt;
use std::sync::RwLock;

use crate::error::{Error, Result};
use crate::linalg::SparseVec;
use crate::scalar::{Field, Scalar};

/// The PBW monomial `F^a K^b E^c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mono {
    pub a: u32,
    pub b: i64,
    pub c: u32,
}

impl Mono {
    pub const ONE: Mono = Mono { a: 0, b: 0, c: 0 };

    pub fn new(a: u32, b: i64, c: u32) -> Mono {
        Mono { a, b, c }
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let mut push = |sym: &str, e: i64| match e {
            0 => {}
            1 => parts.push(sym.to_string()),
            _ => parts.push(format!("{sym}^{e}")),
        };
        push("F", self.a as i64);
        push("K", self.b);
        push("E", self.c as i64);
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(""))
        }
    }
}

/// A finitely supported combination of PBW monomials.
pub type PBWElement = SparseVec<Mono>;

/// Gaussian binomial `[n choose k]_t` by the Pascal recurrence
/// `[n k] = [n−1 k−1] + t^k [n−1 k]`.
pub fn q_binomial(n: u32, k: u32, t: &Scalar) -> Scalar {
    let f = t.field();
    if k > n {
        return f.zero();
    }
    let mut row = vec![f.one()];
    for m in 1..=n as usize {
        let mut next = vec![f.one(); m + 1];
        let mut tk = f.one();
        for (j, slot) in next.iter_mut().enumerate().take(m).skip(1) {
            tk = &tk * t;
            *slot = &row[j - 1] + &(&tk * &row[j]);
        }
        row = next;
    }
    row[k as usize].clone()
}

/// `U_q(sl2)`, the truncated quotient, or the small quantum group.
pub struct PresentedAlgebra {
    field: Field,
    q: Scalar,
    /// `1/(q − q⁻¹)`
    bracket: Scalar,
    truncation: Option<u32>,
    k_order: Option<u32>,
    system: RewriteSystem,
    critical_pairs: usize,
    cache: RwLock<HashMap<(Mono, Mono), PBWElement>>,
}

impl fmt::Debug for PresentedAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PresentedAlgebra")
            .field("field", &self.field.to_string())
            .field("q", &self.q.to_string())
            .field("truncation", &self.truncation)
            .field("k_order", &self.k_order)
            .finish()
    }
}

fn exact_order(q: &Scalar, n: u32) -> Result<bool> {
    Ok(q.pow(n as i64)?.is_one() && (1..n).all(|m| !q.pow(m as i64).is_ok_and(|x| x.is_one())))
}

impl PresentedAlgebra {
    /// `U_q(sl2)` without truncation. Needs `q² ≠ 1`.
    pub fn uq_sl2(q: Scalar) -> Result<PresentedAlgebra> {
        Self::build(q, None, None)
    }

    /// `U_q(sl2)` over `k(q)` with `q` the transcendental variable.
    pub fn generic(field: &Field) -> Result<PresentedAlgebra> {
        let q = field.variable_element().ok_or_else(|| {
            Error::PreconditionViolated(format!("{field} is not a rational function field"))
        })?;
        Self::uq_sl2(q)
    }

    /// `U/(EⁿU + FⁿU)` for odd `n` and `q` a primitive `n`-th root of unity.
    pub fn quotient(q: Scalar, n: u32) -> Result<PresentedAlgebra> {
        Self::check_root(&q, n)?;
        Self::build(q, Some(n), None)
    }

    /// The quotient with `Kⁿ = 1` added.
    pub fn small_quantum(q: Scalar, n: u32) -> Result<PresentedAlgebra> {
        Self::check_root(&q, n)?;
        Self::build(q, Some(n), Some(n))
    }

    fn check_root(q: &Scalar, n: u32) -> Result<()> {
        if n < 3 || n % 2 == 0 {
            return Err(Error::PreconditionViolated("n must be odd and at least 3".into()));
        }
        if !exact_order(q, n)? {
            return Err(Error::PreconditionViolated(format!(
                "{q} is not a primitive {n}-th root of unity"
            )));
        }
        Ok(())
    }

    fn build(q: Scalar, truncation: Option<u32>, k_order: Option<u32>) -> Result<PresentedAlgebra> {
        let field = q.field().clone();
        let qinv = q.inv()?;
        let diff = &q - &qinv;
        let bracket = diff.inv().map_err(|_| {
            Error::PreconditionViolated("q − q⁻¹ must be invertible".into())
        })?;
        let system = Self::rules(&field, &q, &bracket, truncation, k_order)?;
        let critical_pairs = system.check_confluence()?;
        Ok(PresentedAlgebra {
            field,
            q,
            bracket,
            truncation,
            k_order,
            system,
            critical_pairs,
            cache: RwLock::new(HashMap::new()),
        })
    }

    fn rules(
        f: &Field,
        q: &Scalar,
        bracket: &Scalar,
        truncation: Option<u32>,
        k_order: Option<u32>,
    ) -> Result<RewriteSystem> {
        use Letter::*;
        let q2 = q.pow(2)?;
        let qm2 = q.pow(-2)?;
        let one = f.one();
        let rule = |lhs: Vec<Letter>, rhs: Vec<(Vec<Letter>, Scalar)>| Rule { lhs, rhs };
        let mut rules = vec![
            rule(vec![K, F], vec![(vec![F, K], qm2.clone())]),
            rule(vec![Kinv, F], vec![(vec![F, Kinv], q2.clone())]),
            rule(
                vec![E, F],
                vec![
                    (vec![F, E], one.clone()),
                    (vec![K], bracket.clone()),
                    (vec![Kinv], -bracket),
                ],
            ),
            rule(vec![E, K], vec![(vec![K, E], qm2)]),
            rule(vec![E, Kinv], vec![(vec![Kinv, E], q2)]),
            rule(vec![K, Kinv], vec![(vec![], one.clone())]),
            rule(vec![Kinv, K], vec![(vec![], one.clone())]),
        ];
        if let Some(n) = truncation {
            rules.push(rule(vec![E; n as usize], vec![]));
            rules.push(rule(vec![F; n as usize], vec![]));
        }
        if let Some(n) = k_order {
            rules.push(rule(vec![K; n as usize], vec![(vec![], one.clone())]));
            rules.push(rule(vec![Kinv], vec![(vec![K; n as usize - 1], one)]));
        }
        Ok(RewriteSystem::new(f, rules))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn q(&self) -> &Scalar {
        &self.q
    }

    pub fn truncation(&self) -> Option<u32> {
        self.truncation
    }

    pub fn k_order(&self) -> Option<u32> {
        self.k_order
    }

    pub fn rewrite_system(&self) -> &RewriteSystem {
        &self.system
    }

    /// Number of critical pairs resolved by the construction-time check.
    pub fn critical_pair_count(&self) -> usize {
        self.critical_pairs
    }

    /// Canonical representative of a monomial, or `None` if it is zero.
    pub fn normalize(&self, m: Mono) -> Option<Mono> {
        if let Some(n) = self.truncation {
            if m.a >= n || m.c >= n {
                return None;
            }
        }
        let b = match self.k_order {
            Some(n) => m.b.rem_euclid(n as i64),
            None => m.b,
        };
        Some(Mono { b, ..m })
    }

    pub fn monomial(&self, a: u32, b: i64, c: u32) -> PBWElement {
        self.term(Mono::new(a, b, c), self.field.one())
    }

    fn term(&self, m: Mono, c: Scalar) -> PBWElement {
        match self.normalize(m) {
            Some(m) => SparseVec::monomial(m, c),
            None => SparseVec::new(),
        }
    }

    pub fn one(&self) -> PBWElement {
        self.monomial(0, 0, 0)
    }

    pub fn generator(&self, l: Letter) -> PBWElement {
        match l {
            Letter::F => self.monomial(1, 0, 0),
            Letter::K => self.monomial(0, 1, 0),
            Letter::Kinv => self.monomial(0, -1, 0),
            Letter::E => self.monomial(0, 0, 1),
        }
    }

    fn qpow(&self, e: i64) -> Scalar {
        self.q.pow(e).expect("q is invertible")
    }

    /// Reads a normal word `F^a K^b E^c` (or with `K⁻¹`) as a monomial.
    fn word_mono(w: &[Letter]) -> Mono {
        let count = |l| w.iter().filter(|&&x| x == l).count();
        Mono::new(
            count(Letter::F) as u32,
            count(Letter::K) as i64 - count(Letter::Kinv) as i64,
            count(Letter::E) as u32,
        )
    }

    /// Normal form of a word given as `(letter, exponent)` factors, computed
    /// by the rewriting system. Negative exponents of `K` mean powers of
    /// `K⁻¹`.
    pub fn normal_form(&self, word: &[(Letter, i64)]) -> Result<PBWElement> {
        let mut w = Vec::new();
        for &(l, e) in word {
            match (l, e < 0) {
                (Letter::K, true) => w.extend(std::iter::repeat_n(Letter::Kinv, e.unsigned_abs() as usize)),
                (Letter::Kinv, true) => w.extend(std::iter::repeat_n(Letter::K, e.unsigned_abs() as usize)),
                (_, true) => {
                    return Err(Error::PreconditionViolated(format!(
                        "negative power of {l}"
                    )))
                }
                (_, false) => w.extend(std::iter::repeat_n(l, e as usize)),
            }
        }
        let reduced = self.system.reduce_word(&w)?;
        let mut out = SparseVec::new();
        for (word, c) in reduced.iter() {
            out.add(&self.term(Self::word_mono(word), c.clone()));
        }
        Ok(out)
    }

    /// `E · F^a K^b E^c` for `a ≥ 1`, using
    /// `E F^a = F^a E + F^{a−1}(α_a K − β_a K⁻¹)/(q − q⁻¹)` with
    /// `α_a = Σ_{m<a} q^{−2m}` and `β_a = Σ_{m<a} q^{2m}`.
    fn left_mul_e(&self, m: Mono) -> PBWElement {
        let f = &self.field;
        let mut alpha = f.zero();
        let mut beta = f.zero();
        for j in 0..m.a as i64 {
            alpha = &alpha + &self.qpow(-2 * j);
            beta = &beta + &self.qpow(2 * j);
        }
        let mut out = self.term(Mono::new(m.a, m.b, m.c + 1), self.qpow(-2 * m.b));
        out.add(&self.term(Mono::new(m.a - 1, m.b + 1, m.c), &alpha * &self.bracket));
        out.add(&self.term(Mono::new(m.a - 1, m.b - 1, m.c), -&(&beta * &self.bracket)));
        out
    }

    /// Product of two normalized monomials.
    pub fn mul_mono(&self, x: Mono, y: Mono) -> PBWElement {
        if let Some(r) = self.cache.read().expect("cache lock").get(&(x, y)) {
            return r.clone();
        }
        let result = if x.c == 0 {
            // K^b F^a' = q^{−2ba'} F^a' K^b
            self.term(
                Mono::new(x.a + y.a, x.b + y.b, y.c),
                self.qpow(-2 * x.b * y.a as i64),
            )
        } else if y.a == 0 {
            // E^c K^b' = q^{−2cb'} K^b' E^c
            self.term(
                Mono::new(x.a, x.b + y.b, x.c + y.c),
                self.qpow(-2 * x.c as i64 * y.b),
            )
        } else {
            let head = Mono::new(x.a, x.b, x.c - 1);
            let mut out = SparseVec::new();
            for (m, c) in self.left_mul_e(y).iter() {
                out.add_scaled(c, &self.mul_mono(head, *m));
            }
            out
        };
        self.cache
            .write()
            .expect("cache lock")
            .insert((x, y), result.clone());
        result
    }

    pub fn mul(&self, x: &PBWElement, y: &PBWElement) -> PBWElement {
        let mut out = SparseVec::new();
        for (m, c) in x.iter() {
            for (n, d) in y.iter() {
                out.add_scaled(&(c * d), &self.mul_mono(*m, *n));
            }
        }
        out
    }

    pub fn pow(&self, x: &PBWElement, e: u32) -> PBWElement {
        (0..e).fold(self.one(), |acc, _| self.mul(&acc, x))
    }

    /// `Δ(F^a K^b E^c) = Σ_{k,m} [a k]_{q²} [c m]_{q²} q^{−2m(c−m)}
    /// F^{a−k} K^{b+c−m} E^m ⊗ F^k K^{b−a+k} E^{c−m}`.
    pub fn coproduct_mono(&self, x: Mono) -> SparseVec<(Mono, Mono)> {
        let q2 = self.qpow(2);
        let mut out = SparseVec::new();
        for k in 0..=x.a {
            let bk = q_binomial(x.a, k, &q2);
            for m in 0..=x.c {
                let coeff = &(&bk * &q_binomial(x.c, m, &q2))
                    * &self.qpow(-2 * m as i64 * (x.c - m) as i64);
                let left = self.normalize(Mono::new(x.a - k, x.b + (x.c - m) as i64, m));
                let right = self.normalize(Mono::new(k, x.b - (x.a - k) as i64, x.c - m));
                if let (Some(l), Some(r)) = (left, right) {
                    out.add_term((l, r), coeff);
                }
            }
        }
        out
    }

    pub fn coproduct(&self, x: &PBWElement) -> SparseVec<(Mono, Mono)> {
        let mut out = SparseVec::new();
        for (m, c) in x.iter() {
            out.add_scaled(c, &self.coproduct_mono(*m));
        }
        out
    }

    /// Product in `U ⊗ U`.
    pub fn tensor_mul(
        &self,
        x: &SparseVec<(Mono, Mono)>,
        y: &SparseVec<(Mono, Mono)>,
    ) -> SparseVec<(Mono, Mono)> {
        let mut out = SparseVec::new();
        for ((a, b), c) in x.iter() {
            for ((a2, b2), d) in y.iter() {
                let cd = c * d;
                let left = self.mul_mono(*a, *a2);
                let right = self.mul_mono(*b, *b2);
                for (l, u) in left.iter() {
                    let cdu = &cd * u;
                    for (r, w) in right.iter() {
                        out.add_term((*l, *r), &cdu * w);
                    }
                }
            }
        }
        out
    }

    /// `S(F^a K^b E^c) = (−K⁻¹E)^c K^{−b} (−FK)^a`.
    pub fn antipode_mono(&self, x: Mono) -> PBWElement {
        let f = &self.field;
        let s_e = self.term(Mono::new(0, -1, 1), f.from_int(-1));
        let s_f = self.term(Mono::new(1, 1, 0), f.from_int(-1));
        let mut out = self.pow(&s_e, x.c);
        out = self.mul(&out, &self.monomial(0, -x.b, 0));
        self.mul(&out, &self.pow(&s_f, x.a))
    }

    pub fn antipode(&self, x: &PBWElement) -> PBWElement {
        let mut out = SparseVec::new();
        for (m, c) in x.iter() {
            out.add_scaled(c, &self.antipode_mono(*m));
        }
        out
    }

    pub fn counit(&self, x: &PBWElement) -> Scalar {
        x.iter()
            .filter(|(m, _)| m.a == 0 && m.c == 0)
            .fold(self.field.zero(), |acc, (_, c)| &acc + c)
    }

    /// `k.v = k₍₁₎ v S(k₍₂₎)`.
    pub fn adjoint_action(&self, k: &PBWElement, v: &PBWElement) -> PBWElement {
        let mut out = SparseVec::new();
        for ((x, y), c) in self.coproduct(k).iter() {
            let xv = self.mul(&SparseVec::unit(*x, &self.field), v);
            out.add_scaled(c, &self.mul(&xv, &self.antipode_mono(*y)));
        }
        out
    }

    /// True if every monomial lies in `EⁿU + FⁿU`.
    pub fn in_truncation_ideal(x: &PBWElement, n: u32) -> bool {
        x.keys().all(|m| m.a >= n || m.c >= n)
    }
}

/// `adjoint_action_pbw`.
pub fn adjoint_action_pbw(alg: &PresentedAlgebra, k: &PBWElement, v: &PBWElement) -> PBWElement {
    alg.adjoint_action(k, v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn generic() -> PresentedAlgebra {
        let f: Field = Field::new("ratfunc".parse().unwrap()).unwrap();
        PresentedAlgebra::generic(&f).unwrap()
    }

    fn cyclo_quotient(n: u32) -> PresentedAlgebra {
        let f = Field::cyclotomic(n).unwrap();
        PresentedAlgebra::quotient(f.primitive_root(n as u64).unwrap(), n).unwrap()
    }

    #[test]
    fn q_binomials() {
        let q = Field::rationals();
        let t = q.from_int(2);
        // [4 2]_t = 1 + t + 2t² + t³ + t⁴
        assert_eq!(q_binomial(4, 2, &t), q.from_int(1 + 2 + 8 + 8 + 16));
        assert_eq!(q_binomial(5, 0, &t), q.one());
        assert_eq!(q_binomial(5, 5, &t), q.one());
        assert_eq!(q_binomial(3, 1, &q.one()), q.from_int(3));
    }

    #[test]
    fn k_conjugates_e_by_q_squared() {
        let u = generic();
        let q2 = u.q().pow(2).unwrap();
        let ke = u.normal_form(&[(Letter::K, 1), (Letter::E, 1)]).unwrap();
        assert_eq!(ke, u.monomial(0, 1, 1));
        let ek = u.normal_form(&[(Letter::E, 1), (Letter::K, 1)]).unwrap();
        assert_eq!(ek, SparseVec::monomial(Mono::new(0, 1, 1), q2.inv().unwrap()));
        let kek = u
            .normal_form(&[(Letter::K, 1), (Letter::E, 1), (Letter::K, -1)])
            .unwrap();
        assert_eq!(kek, SparseVec::monomial(Mono::new(0, 0, 1), q2));
    }

    #[test]
    fn commutator_of_e_and_f() {
        let u = generic();
        let ef = u.normal_form(&[(Letter::E, 1), (Letter::F, 1)]).unwrap();
        let fe = u.normal_form(&[(Letter::F, 1), (Letter::E, 1)]).unwrap();
        let q = u.q();
        let br = (q - &q.inv().unwrap()).inv().unwrap();
        let expected = SparseVec::from_terms([(Mono::new(0, 1, 0), br.clone()), (Mono::new(0, -1, 0), -&br)]);
        assert_eq!(ef.sub(&fe), expected);
    }

    #[test]
    fn truncation_kills_cube() {
        let h = cyclo_quotient(3);
        assert!(h.normal_form(&[(Letter::E, 3)]).unwrap().is_zero());
        assert!(h.normal_form(&[(Letter::F, 2), (Letter::K, 5), (Letter::F, 1)]).unwrap().is_zero());
    }

    #[test]
    fn fast_product_matches_rewriting() {
        for alg in [generic(), cyclo_quotient(3)] {
            let monos: Vec<Mono> = (0..3)
                .flat_map(|a| (-2..=2).flat_map(move |b| (0..3).map(move |c| Mono::new(a, b, c))))
                .collect();
            for x in monos.iter().step_by(4) {
                for y in monos.iter().step_by(3) {
                    let word = [
                        (Letter::F, x.a as i64),
                        (Letter::K, x.b),
                        (Letter::E, x.c as i64),
                        (Letter::F, y.a as i64),
                        (Letter::K, y.b),
                        (Letter::E, y.c as i64),
                    ];
                    assert_eq!(alg.mul_mono(*x, *y), alg.normal_form(&word).unwrap(), "{x} · {y}");
                }
            }
        }
    }

    #[test]
    fn coproduct_matches_multiplicative_expansion() {
        let u = generic();
        let gens = [Letter::F, Letter::K, Letter::E].map(|l| u.coproduct(&u.generator(l)));
        for a in 0..3u32 {
            for b in -1..=1i64 {
                for c in 0..3u32 {
                    let mut d = u.coproduct(&u.one());
                    for _ in 0..a {
                        d = u.tensor_mul(&d, &gens[0]);
                    }
                    let kb = u.coproduct(&u.monomial(0, b, 0));
                    d = u.tensor_mul(&d, &kb);
                    for _ in 0..c {
                        d = u.tensor_mul(&d, &gens[2]);
                    }
                    assert_eq!(d, u.coproduct_mono(Mono::new(a, b, c)));
                }
            }
        }
    }

    #[test]
    fn generator_values() {
        let u = generic();
        let e = u.generator(Letter::E);
        let k = u.generator(Letter::K);
        assert!(u.counit(&e).is_zero());
        assert!(u.counit(&k).is_one());
        let kb = u.monomial(0, 4, 0);
        assert_eq!(
            u.coproduct(&kb),
            SparseVec::unit((Mono::new(0, 4, 0), Mono::new(0, 4, 0)), u.field())
        );
    }

    #[test]
    fn e_to_the_n_is_skew_primitive_at_roots_of_unity() {
        for n in [3u32, 5] {
            let f = Field::cyclotomic(n).unwrap();
            let u = PresentedAlgebra::uq_sl2(f.primitive_root(n as u64).unwrap()).unwrap();
            let en = u.pow(&u.generator(Letter::E), n);
            let expected = SparseVec::from_terms([
                ((Mono::new(0, 0, n), Mono::ONE), f.one()),
                ((Mono::new(0, n as i64, 0), Mono::new(0, 0, n)), f.one()),
            ]);
            assert_eq!(u.coproduct(&en), expected);
        }
    }

    #[test]
    fn ad_k_is_diagonal() {
        let h = cyclo_quotient(3);
        let q = h.q().clone();
        let k = h.generator(Letter::K);
        for a in 0..3u32 {
            for b in -3..=3i64 {
                for c in 0..3u32 {
                    let v = h.monomial(a, b, c);
                    let expected = v.scaled(&q.pow(2 * (c as i64 - a as i64)).unwrap());
                    assert_eq!(h.adjoint_action(&k, &v), expected);
                }
            }
        }
        let v = h.monomial(1, 2, 1);
        assert_eq!(h.adjoint_action(&h.one(), &v), v);
    }

    #[test]
    fn ad_e_two_ways() {
        // E.v = E v − K v K⁻¹ E
        let u = generic();
        let e = u.generator(Letter::E);
        let k = u.generator(Letter::K);
        let kinv = u.generator(Letter::Kinv);
        for v in [u.monomial(0, -1, 0), u.monomial(1, 2, 0), u.monomial(2, -1, 1)] {
            let direct = u
                .mul(&e, &v)
                .sub(&u.mul(&u.mul(&u.mul(&k, &v), &kinv), &e));
            assert_eq!(u.adjoint_action(&e, &v), direct);
        }
    }

    #[test]
    fn small_quantum_reduces_k() {
        let f = Field::cyclotomic(3).unwrap();
        let u = PresentedAlgebra::small_quantum(f.primitive_root(3).unwrap(), 3).unwrap();
        assert_eq!(u.monomial(0, 3, 0), u.one());
        assert_eq!(u.generator(Letter::Kinv), u.monomial(0, 2, 0));
        let w = u.normal_form(&[(Letter::K, -1), (Letter::E, 1)]).unwrap();
        assert_eq!(w, u.monomial(0, 2, 1));
    }

    #[test]
    fn rejects_non_primitive_root() {
        let f = Field::cyclotomic(3).unwrap();
        assert!(PresentedAlgebra::quotient(f.one(), 3).is_err());
        assert!(PresentedAlgebra::quotient(f.primitive_root(3).unwrap(), 4).is_err());
    }
}
