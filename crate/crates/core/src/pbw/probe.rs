use super::{Letter, Mono, PBWElement, PresentedAlgebra};
use crate::error::{Error, Result};
use crate::finmod::{
    orbit_closure_traced, sparse_u_double_prime, ComputableModule, GeneratorInfo, OrbitTrace,
};
use crate::linalg::SparseVec;
use crate::scalar::Field;

/// The adjoint representation of a presented algebra on itself, generated
/// by `ad E`, `ad F`, `ad K`, `ad K⁻¹`; `K^{±1}` are flagged as `T`.
pub struct AdModule<'a> {
    alg: &'a PresentedAlgebra,
    elements: Vec<PBWElement>,
    info: Vec<GeneratorInfo>,
}

impl<'a> AdModule<'a> {
    pub fn new(alg: &'a PresentedAlgebra) -> AdModule<'a> {
        let letters = [Letter::E, Letter::F, Letter::K, Letter::Kinv];
        AdModule {
            alg,
            elements: letters.iter().map(|&l| alg.generator(l)).collect(),
            info: letters
                .iter()
                .map(|&l| GeneratorInfo::new(l.to_string(), matches!(l, Letter::K | Letter::Kinv)))
                .collect(),
        }
    }
}

impl ComputableModule for AdModule<'_> {
    type Key = Mono;

    fn field(&self) -> &Field {
        self.alg.field()
    }

    fn generators(&self) -> &[GeneratorInfo] {
        &self.info
    }

    fn act(&self, gen: usize, key: &Mono) -> Result<PBWElement> {
        Ok(self
            .alg
            .adjoint_action(&self.elements[gen], &SparseVec::unit(*key, self.alg.field())))
    }
}

/// Local finiteness of `v` under the adjoint action. In a truncated
/// quotient only `ad K^{±1}` is iterated: the quotient is a finitely
/// generated right module over `k[K^{±1}]`. Otherwise all generators are.
pub fn adfin_probe(alg: &PresentedAlgebra, v: &PBWElement, budget: usize) -> Result<OrbitTrace<Mono>> {
    let m = AdModule::new(alg);
    orbit_closure_traced(&m, std::slice::from_ref(v), budget, alg.truncation().is_some())
}

/// Outcome of a check run over every monomial of a window.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WindowCheck {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl WindowCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl PresentedAlgebra {
    /// All normal monomials `F^a K^b E^c` of a truncated algebra with
    /// `|b| ≤ b_max`.
    pub fn window(&self, b_max: i64) -> Result<Vec<Mono>> {
        let n = self.truncation().ok_or_else(|| {
            Error::PreconditionViolated("windows are defined for truncated algebras".into())
        })?;
        let mut out = Vec::new();
        for a in 0..n {
            for b in -b_max..=b_max {
                for c in 0..n {
                    if let Some(m) = self.normalize(Mono::new(a, b, c)) {
                        if !out.contains(&m) {
                            out.push(m);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Every window monomial is locally finite.
    pub fn check_window_finite(&self, b_max: i64, budget: usize) -> Result<WindowCheck> {
        let mut r = WindowCheck::default();
        for m in self.window(b_max)? {
            r.checked += 1;
            let t = adfin_probe(self, &SparseVec::unit(m, self.field()), budget)?;
            if !t.verdict.is_finite() {
                r.failures.push(format!("{m}: {}", t.verdict));
            }
        }
        Ok(r)
    }

    /// For every window monomial `v`, each second tensor leg of `Δv` is
    /// locally finite (the left coideal property of the locally finite part).
    pub fn check_window_coideal(&self, b_max: i64, budget: usize) -> Result<WindowCheck> {
        let mut r = WindowCheck::default();
        for m in self.window(b_max)? {
            for leg in sparse_u_double_prime(&self.coproduct_mono(m)) {
                r.checked += 1;
                let t = adfin_probe(self, &leg, budget)?;
                if !t.verdict.is_finite() {
                    r.failures.push(format!("second leg {leg} of Δ({m}): {}", t.verdict));
                }
            }
        }
        Ok(r)
    }

    /// For every window monomial `v`, `S(v)` is locally finite.
    pub fn check_window_antipode(&self, b_max: i64, budget: usize) -> Result<WindowCheck> {
        let mut r = WindowCheck::default();
        for m in self.window(b_max)? {
            r.checked += 1;
            let s = self.antipode_mono(m);
            let t = adfin_probe(self, &s, budget)?;
            if !t.verdict.is_finite() {
                r.failures.push(format!("S({m}) = {s}: {}", t.verdict));
            }
        }
        Ok(r)
    }

    /// True if every generator has a symmetric coproduct.
    pub fn is_cocommutative(&self) -> bool {
        [Letter::E, Letter::F, Letter::K].iter().all(|&l| {
            let d = self.coproduct(&self.generator(l));
            let flipped = SparseVec::from_terms(d.iter().map(|((x, y), c)| ((*y, *x), c.clone())));
            flipped == d
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finmod::FinitenessVerdict;

    fn quotient3() -> PresentedAlgebra {
        let f = Field::cyclotomic(3).unwrap();
        PresentedAlgebra::quotient(f.primitive_root(3).unwrap(), 3).unwrap()
    }

    #[test]
    fn monomials_are_k_eigenvectors() {
        let h = quotient3();
        for m in h.window(6).unwrap() {
            let t = adfin_probe(&h, &SparseVec::unit(m, h.field()), 200).unwrap();
            assert_eq!(t.verdict.finite_dim(), Some(1), "{m}");
        }
    }

    #[test]
    fn one_is_invariant() {
        let f: Field = Field::new("ratfunc".parse().unwrap()).unwrap();
        let u = PresentedAlgebra::generic(&f).unwrap();
        let t = adfin_probe(&u, &u.one(), 20).unwrap();
        assert_eq!(t.verdict.finite_dim(), Some(1));
    }

    #[test]
    fn k_orbit_grows_in_generic_algebra() {
        let f: Field = Field::new("ratfunc".parse().unwrap()).unwrap();
        let u = PresentedAlgebra::generic(&f).unwrap();
        let t = adfin_probe(&u, &u.generator(Letter::K), 40).unwrap();
        assert!(matches!(t.verdict, FinitenessVerdict::BudgetExceeded { .. }));
        assert!(t.dims.windows(2).take(5).all(|w| w[0] < w[1]), "{:?}", t.dims);
    }

    #[test]
    fn quotient_is_not_cocommutative() {
        assert!(!quotient3().is_cocommutative());
    }

    #[test]
    fn window_checks_pass() {
        let h = quotient3();
        assert!(h.check_window_coideal(2, 200).unwrap().passed());
        assert!(h.check_window_antipode(2, 200).unwrap().passed());
    }
}
