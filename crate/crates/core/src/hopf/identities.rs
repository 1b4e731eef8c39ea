use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

use rand::Rng;

use super::data::{HopfAlgebraData, Pair, Triple};
use crate::linalg::SparseVec;

/// Outcome of one identity over a batch of random arguments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityResult {
    pub name: &'static str,
    pub checked: usize,
    pub failed: usize,
}

impl IdentityResult {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

/// Evaluates the adjoint-action identities on sparse elements, caching
/// `e_k . e_v` on basis pairs.
pub struct IdentityChecker<'a> {
    h: &'a HopfAlgebraData,
    ad: RefCell<HashMap<(usize, usize), SparseVec<usize>>>,
    sandwich: RefCell<HashMap<Triple, SparseVec<usize>>>,
}

impl<'a> IdentityChecker<'a> {
    pub fn new(h: &'a HopfAlgebraData) -> IdentityChecker<'a> {
        IdentityChecker {
            h,
            ad: RefCell::new(HashMap::new()),
            sandwich: RefCell::new(HashMap::new()),
        }
    }

    fn ad_basis(&self, k: usize, v: usize) -> SparseVec<usize> {
        if let Some(r) = self.ad.borrow().get(&(k, v)) {
            return r.clone();
        }
        let r = self.h.ad_basis(k, v);
        self.ad.borrow_mut().insert((k, v), r.clone());
        r
    }

    pub fn ad(&self, k: &SparseVec<usize>, v: &SparseVec<usize>) -> SparseVec<usize> {
        let mut out = SparseVec::new();
        for (&a, x) in k.iter() {
            for (&b, y) in v.iter() {
                out.add_scaled(&(x * y), &self.ad_basis(a, b));
            }
        }
        out
    }

    fn unit(&self, i: usize) -> SparseVec<usize> {
        SparseVec::unit(i, &self.h.field)
    }

    fn tensor(a: &SparseVec<usize>, b: &SparseVec<usize>) -> SparseVec<Pair> {
        let mut out = SparseVec::new();
        for (&i, x) in a.iter() {
            for (&j, y) in b.iter() {
                out.add_term((i, j), x * y);
            }
        }
        out
    }

    /// `a · p · S(c)` on basis elements.
    fn sandwich(&self, a: usize, p: usize, c: usize) -> SparseVec<usize> {
        if let Some(r) = self.sandwich.borrow().get(&(a, p, c)) {
            return r.clone();
        }
        let h = self.h;
        let r = h.mul_sparse(h.mul_basis(a, p), &h.antipode[c]);
        self.sandwich.borrow_mut().insert((a, p, c), r.clone());
        r
    }

    /// `Δ(k.v) = Σ k₍₁₎ v₍₁₎ S(k₍₃₎) ⊗ k₍₂₎.v₍₂₎`.
    pub fn comult_of_ad(&self, k: &SparseVec<usize>, v: &SparseVec<usize>) -> bool {
        let h = self.h;
        let lhs = h.comult_sparse(&self.ad(k, v));
        // Δ³k grouped by its middle leg: b ↦ Σ a ⊗ c
        let mut outer: BTreeMap<usize, SparseVec<Pair>> = BTreeMap::new();
        for (&(a, b, c), x) in h.comult3_sparse(k).iter() {
            outer.entry(b).or_default().add_term((a, c), x.clone());
        }
        let v2 = h.comult_sparse(v);
        let mut rhs = SparseVec::new();
        for (&b, ac) in &outer {
            let mut inner: SparseVec<Pair> = SparseVec::new();
            for (&(p, r), y) in v2.iter() {
                for (&s, z) in self.ad_basis(b, r).iter() {
                    inner.add_term((p, s), y * z);
                }
            }
            let mut left: HashMap<usize, SparseVec<usize>> = HashMap::new();
            for (&(p, s), y) in inner.iter() {
                let l = left.entry(p).or_insert_with(|| {
                    let mut out = SparseVec::new();
                    for (&(a, c), x) in ac.iter() {
                        out.add_scaled(x, &self.sandwich(a, p, c));
                    }
                    out
                });
                for (&t, w) in l.iter() {
                    rhs.add_term((t, s), w * y);
                }
            }
        }
        lhs == rhs
    }

    /// `h k = Σ (h₍₁₎.k) h₍₂₎`.
    pub fn multiplication_recovery(&self, h_: &SparseVec<usize>, k: &SparseVec<usize>) -> bool {
        let h = self.h;
        let mut rhs = SparseVec::new();
        for (&(a, b), x) in h.comult_sparse(h_).iter() {
            rhs.add_scaled(x, &h.mul_sparse(&self.ad(&self.unit(a), k), &self.unit(b)));
        }
        h.mul_sparse(h_, k) == rhs
    }

    /// `k.(vw) = Σ (k₍₁₎.v)(k₍₂₎.w)`.
    pub fn module_algebra(&self, k: &SparseVec<usize>, v: &SparseVec<usize>, w: &SparseVec<usize>) -> bool {
        let h = self.h;
        let lhs = self.ad(k, &h.mul_sparse(v, w));
        let mut rhs = SparseVec::new();
        for (&(a, b), x) in h.comult_sparse(k).iter() {
            rhs.add_scaled(
                x,
                &h.mul_sparse(&self.ad(&self.unit(a), v), &self.ad(&self.unit(b), w)),
            );
        }
        lhs == rhs
    }

    /// `Δ(k.v) = Σ k₍₁₎.v₍₁₎ ⊗ k₍₂₎.v₍₂₎`; holds when `H` is cocommutative.
    pub fn equivariance(&self, k: &SparseVec<usize>, v: &SparseVec<usize>) -> bool {
        let h = self.h;
        let lhs = h.comult_sparse(&self.ad(k, v));
        let mut rhs = SparseVec::new();
        for (&(a, b), x) in h.comult_sparse(k).iter() {
            for (&(p, r), y) in h.comult_sparse(v).iter() {
                rhs.add_scaled(&(x * y), &Self::tensor(&self.ad_basis(a, p), &self.ad_basis(b, r)));
            }
        }
        lhs == rhs
    }

    /// Runs every applicable identity on `count` random argument tuples.
    /// Equivariance is included only for cocommutative algebras.
    pub fn run_random<R: Rng>(&self, rng: &mut R, count: usize, max_terms: usize) -> Vec<IdentityResult> {
        let h = self.h;
        let cocom = h.is_cocommutative();
        let mut results = vec![
            IdentityResult { name: "comult-of-adjoint", checked: 0, failed: 0 },
            IdentityResult { name: "multiplication-recovery", checked: 0, failed: 0 },
            IdentityResult { name: "module-algebra", checked: 0, failed: 0 },
        ];
        if cocom {
            results.push(IdentityResult { name: "cocommutative-equivariance", checked: 0, failed: 0 });
        }
        for _ in 0..count {
            let k = random_element(h, rng, max_terms);
            let v = random_element(h, rng, max_terms);
            let w = random_element(h, rng, max_terms);
            let mut outcomes = vec![
                self.comult_of_ad(&k, &v),
                self.multiplication_recovery(&k, &v),
                self.module_algebra(&k, &v, &w),
            ];
            if cocom {
                outcomes.push(self.equivariance(&k, &v));
            }
            for (r, ok) in results.iter_mut().zip(outcomes) {
                r.checked += 1;
                r.failed += usize::from(!ok);
            }
        }
        results
    }
}

/// A combination of at most `max_terms` basis elements with small nonzero
/// integer coefficients.
pub fn random_element<R: Rng>(h: &HopfAlgebraData, rng: &mut R, max_terms: usize) -> SparseVec<usize> {
    let terms = rng.gen_range(1..=max_terms.max(1));
    let mut out = SparseVec::new();
    for _ in 0..terms {
        let i = rng.gen_range(0..h.dim);
        let mut c = rng.gen_range(-3i64..=3);
        if c == 0 {
            c = 1;
        }
        out.add_term(i, h.field.from_int(c));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::small;
    use crate::hopf::{group_algebra, sweedler, taft};
    use crate::scalar::Field;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn identities_hold_on_sweedler_and_taft() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let h = sweedler(&Field::rationals()).unwrap();
        for r in IdentityChecker::new(&h).run_random(&mut rng, 40, 4) {
            assert!(r.passed(), "{r:?}");
        }
        let t = taft(3, &Field::cyclotomic(3).unwrap()).unwrap();
        for r in IdentityChecker::new(&t).run_random(&mut rng, 20, 4) {
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn equivariance_for_group_algebras_only() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let g = group_algebra(&small::by_name("S3").unwrap(), &Field::rationals()).unwrap();
        let res = IdentityChecker::new(&g).run_random(&mut rng, 20, 3);
        assert_eq!(res.len(), 4);
        assert!(res.iter().all(IdentityResult::passed));
        // in Sweedler's algebra the naive equivariance fails for k = x, v = g
        let h = sweedler(&Field::rationals()).unwrap();
        let c = IdentityChecker::new(&h);
        let (g_, x) = (SparseVec::unit(1, &h.field), SparseVec::unit(2, &h.field));
        assert!(!c.equivariance(&x, &g_));
        assert!(c.comult_of_ad(&x, &g_));
    }

    #[test]
    fn sweedler_ad_x_on_g() {
        let q = Field::rationals();
        let h = sweedler(&q).unwrap();
        let c = IdentityChecker::new(&h);
        let r = c.ad(&SparseVec::unit(2, &q), &SparseVec::unit(1, &q));
        assert_eq!(r, SparseVec::monomial(3, q.from_int(-2)));
    }
}
