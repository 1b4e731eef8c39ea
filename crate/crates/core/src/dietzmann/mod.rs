//! Finite sums of ad-stable finite-dimensional left coideal subalgebras
//! generate finite-dimensional subalgebras.
//!
//! [`product_filtration`] computes `C^(n)`, the span of products of at most
//! `n` elements of `C = ΣC_i`, until it stabilizes. [`straighten`] rewrites a
//! monomial `c_{i_1}⋯c_{i_s}` with `s > k` as a sum of monomials of length
//! `s − 1`: adjacent factors from the same `C_i` are merged, otherwise the
//! leftmost closest same-index pair is brought together with
//! `cd = (c₍₁₎.d) c₍₂₎`.

mod host;

pub use host::{AlgebraHost, GroupHost, PbwHost};

use std::fmt;

use crate::error::{Error, Result};
use crate::finmod::sparse_u_double_prime;
use crate::linalg::{SparseSubspace, SparseVec};

/// Hard cap on rewrite steps in one [`straighten`] call.
pub const STEP_CAP: usize = 1_000_000;

/// Status of `ad`-stability of `C = ΣC_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stability {
    /// `h.C ⊆ C` for every algebra generator `h`.
    Verified,
    /// Every `C_i` is a sub-bialgebra and `C_i.C ⊆ C` for all `i`.
    SubBialgebras,
    Assumed,
    Unknown,
}

impl fmt::Display for Stability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Stability::Verified => "verified",
            Stability::SubBialgebras => "sub-bialgebras",
            Stability::Assumed => "assumed",
            Stability::Unknown => "unknown",
        })
    }
}

fn window_tolerant(r: Result<bool>) -> Result<bool> {
    match r {
        Err(Error::WindowOverflow(_)) => Ok(false),
        other => other,
    }
}

/// `1 ∈ B`, `B·B ⊆ B` and `Δ(B) ⊆ H ⊗ B`.
pub fn is_left_coideal_subalgebra_in<H: AlgebraHost>(host: &H, b: &SparseSubspace<H::Key>) -> Result<bool> {
    if !b.contains(&host.one()) {
        return Ok(false);
    }
    for x in b.basis() {
        for y in b.basis() {
            if !b.contains(&host.mul(x, y)?) {
                return Ok(false);
            }
        }
        if !sparse_u_double_prime(&host.coproduct(x)).iter().all(|s| b.contains(s)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `Δ(B) ⊆ B ⊗ B`.
pub fn is_subcoalgebra_in<H: AlgebraHost>(host: &H, b: &SparseSubspace<H::Key>) -> bool {
    b.basis().iter().all(|x| {
        let d = host.coproduct(x);
        crate::finmod::sparse_u_prime(&d).iter().all(|s| b.contains(s))
            && sparse_u_double_prime(&d).iter().all(|s| b.contains(s))
    })
}

/// `h.c ∈ C` for every actor `h` and basis element `c`.
pub fn is_ad_stable_under<H: AlgebraHost>(
    host: &H,
    c: &SparseSubspace<H::Key>,
    actors: &[SparseVec<H::Key>],
) -> Result<bool> {
    for h in actors {
        for v in c.basis() {
            if !c.contains(&host.adjoint(h, v)?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Subspaces `C_1, …, C_k` of a host algebra with their verification flags.
pub struct CoidealFamily<'a, H: AlgebraHost> {
    host: &'a H,
    parts: Vec<SparseSubspace<H::Key>>,
    sum: SparseSubspace<H::Key>,
    /// Per part: verified left coideal subalgebra.
    pub coideal_verified: Vec<bool>,
    /// Per part: `Δ(C_i) ⊆ C_i ⊗ C_i`.
    pub sub_bialgebra: Vec<bool>,
    pub stability: Stability,
}

impl<'a, H: AlgebraHost> CoidealFamily<'a, H> {
    /// Spans each list and verifies the coideal and stability conditions.
    pub fn new(host: &'a H, spanning: &[Vec<SparseVec<H::Key>>]) -> Result<Self> {
        if spanning.is_empty() {
            return Err(Error::PreconditionViolated("empty family".into()));
        }
        let f = host.field();
        let mut parts = Vec::new();
        for vs in spanning {
            for v in vs {
                host.check_window(v)?;
            }
            parts.push(SparseSubspace::spanned_by(f, vs.iter()));
        }
        let sum = parts
            .iter()
            .fold(SparseSubspace::new(f), |acc, p| acc.sum(p));
        let coideal_verified = parts
            .iter()
            .map(|p| window_tolerant(is_left_coideal_subalgebra_in(host, p)))
            .collect::<Result<Vec<_>>>()?;
        let sub_bialgebra = parts.iter().map(|p| is_subcoalgebra_in(host, p)).collect::<Vec<_>>();
        let stability = if window_tolerant(is_ad_stable_under(host, &sum, &host.ad_generators()))? {
            Stability::Verified
        } else {
            let mut relaxed = sub_bialgebra.iter().all(|&b| b);
            for p in &parts {
                if !relaxed {
                    break;
                }
                relaxed = window_tolerant(is_ad_stable_under(host, &sum, p.basis()))?;
            }
            if relaxed {
                Stability::SubBialgebras
            } else {
                Stability::Unknown
            }
        };
        Ok(CoidealFamily {
            host,
            parts,
            sum,
            coideal_verified,
            sub_bialgebra,
            stability,
        })
    }

    /// Marks `C` as ad-stable without proof.
    pub fn assume_stable(mut self) -> Self {
        if self.stability == Stability::Unknown {
            self.stability = Stability::Assumed;
        }
        self
    }

    pub fn host(&self) -> &H {
        self.host
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    pub fn part(&self, i: usize) -> &SparseSubspace<H::Key> {
        &self.parts[i]
    }

    /// `C = ΣC_i`.
    pub fn sum(&self) -> &SparseSubspace<H::Key> {
        &self.sum
    }

    pub fn all_verified(&self) -> bool {
        self.coideal_verified.iter().all(|&b| b)
            && matches!(self.stability, Stability::Verified | Stability::SubBialgebras)
    }

    /// Writes `y ∈ C` as `Σ y_l` with `y_l ∈ C_l`, reading coefficients
    /// against the concatenated bases of `C_1, …, C_k` in order.
    pub fn decompose(&self, y: &SparseVec<H::Key>) -> Option<Vec<SparseVec<H::Key>>> {
        #[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
        enum Aug<K> {
            Coord(K),
            // relations eliminate their least key, so later basis vectors
            // get the smaller tags
            Tag(std::cmp::Reverse<usize>),
        }
        let f = self.host.field();
        let mut owners = Vec::new();
        let mut aug = SparseSubspace::new(f);
        for (l, p) in self.parts.iter().enumerate() {
            for b in p.basis() {
                let mut row: SparseVec<Aug<H::Key>> =
                    SparseVec::from_terms(b.iter().map(|(k, c)| (Aug::Coord(k.clone()), c.clone())));
                row.add_term(Aug::Tag(std::cmp::Reverse(owners.len())), f.one());
                owners.push((l, b.clone()));
                aug.insert(&row);
            }
        }
        let target = SparseVec::from_terms(y.iter().map(|(k, c)| (Aug::Coord(k.clone()), c.clone())));
        let r = aug.reduce(&target);
        if r.keys().any(|k| matches!(k, Aug::Coord(_))) {
            return None;
        }
        let mut out = vec![SparseVec::new(); self.k()];
        for (k, c) in r.iter() {
            if let Aug::Tag(std::cmp::Reverse(j)) = k {
                let (l, b) = &owners[*j];
                out[*l].add_scaled(&-c, b);
            }
        }
        Some(out)
    }
}

/// Dimensions of `C^(1) ⊆ C^(2) ⊆ …`.
#[derive(Clone, Debug)]
pub struct FiltrationReport<K: Ord> {
    /// `dims[n − 1] = dim C^(n)`.
    pub dims: Vec<usize>,
    /// Least `n` with `C^(n) = C^(n+1)`, if reached.
    pub stabilization: Option<usize>,
    /// `levels[n − 1] = C^(n)`.
    pub levels: Vec<SparseSubspace<K>>,
}

impl<K: Ord + Clone> FiltrationReport<K> {
    pub fn closure(&self) -> &SparseSubspace<K> {
        self.levels.last().expect("at least C^(1)")
    }

    pub fn closure_dim(&self) -> usize {
        self.closure().dim()
    }

    /// `C^(n)`, using the stable value beyond the computed range.
    pub fn level(&self, n: usize) -> Option<&SparseSubspace<K>> {
        if n == 0 {
            return None;
        }
        match self.levels.get(n - 1) {
            Some(l) => Some(l),
            None => self.stabilization.map(|_| self.closure()),
        }
    }
}

/// `C^(n+1) = C^(n) + C·C^(n)` until two consecutive terms agree or
/// `max_steps` products have been taken.
pub fn product_filtration<H: AlgebraHost>(
    family: &CoidealFamily<'_, H>,
    max_steps: usize,
    budget: usize,
) -> Result<FiltrationReport<H::Key>> {
    let c = family.sum();
    let check = |d: usize| {
        if d > budget {
            Err(Error::BudgetExceeded { reached: d, budget })
        } else {
            Ok(())
        }
    };
    check(c.dim())?;
    let mut levels = vec![c.clone()];
    let mut dims = vec![c.dim()];
    for n in 1..=max_steps {
        let prev = levels.last().expect("nonempty");
        let mut next = prev.clone();
        for x in c.basis() {
            for y in prev.basis() {
                next.insert(&family.host().mul(x, y)?);
                check(next.dim())?;
            }
        }
        let stable = next.dim() == prev.dim();
        dims.push(next.dim());
        levels.push(next);
        if stable {
            return Ok(FiltrationReport {
                dims,
                stabilization: Some(n),
                levels,
            });
        }
    }
    Ok(FiltrationReport {
        dims,
        stabilization: None,
        levels,
    })
}

/// A factor `c ∈ C_index` of a monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor<K: Ord> {
    pub index: usize,
    pub element: SparseVec<K>,
}

impl<K: Ord> Factor<K> {
    pub fn new(index: usize, element: SparseVec<K>) -> Self {
        Factor { index, element }
    }
}

/// A certified rewriting of a monomial as a sum of shorter monomials.
#[derive(Clone, Debug)]
pub struct Straightened<K: Ord> {
    pub terms: Vec<Vec<Factor<K>>>,
    /// The common value of the input monomial and of the sum of terms.
    pub value: SparseVec<K>,
    pub steps: usize,
}

fn product<H: AlgebraHost>(host: &H, factors: &[Factor<H::Key>]) -> Result<SparseVec<H::Key>> {
    factors
        .iter()
        .try_fold(host.one(), |acc, f| host.mul(&acc, &f.element))
}

/// The closest pair of equal indices, leftmost among ties: `(p, gap)`.
fn closest_pair<K: Ord>(m: &[Factor<K>]) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for p in 0..m.len() {
        if let Some(q) = (p + 1..m.len()).find(|&q| m[q].index == m[p].index) {
            let gap = q - p - 1;
            if best.is_none_or(|(_, g)| gap < g) {
                best = Some((p, gap));
            }
        }
    }
    best
}

/// Rewrites `c_{i_1}⋯c_{i_s}` (`s > k`) as a sum of monomials of length
/// `s − 1` whose factors lie in the `C_i`.
///
/// Fails with `HypothesisViolated` when an intermediate adjoint image
/// leaves `C`, a merged product leaves `C_i`, or a second coproduct leg of a
/// factor leaves its `C_i`.
pub fn straighten<H: AlgebraHost>(
    family: &CoidealFamily<'_, H>,
    monomial: &[Factor<H::Key>],
) -> Result<Straightened<H::Key>> {
    let host = family.host();
    let s = monomial.len();
    if s <= family.k() {
        return Err(Error::PreconditionViolated(format!(
            "monomial of length {s} needs more than k = {} factors",
            family.k()
        )));
    }
    for (pos, f) in monomial.iter().enumerate() {
        if f.index >= family.k() || !family.part(f.index).contains(&f.element) {
            return Err(Error::PreconditionViolated(format!(
                "factor {pos} does not lie in C_{}",
                f.index + 1
            )));
        }
    }
    let mut terms = Vec::new();
    let mut stack = vec![(monomial.to_vec(), 0usize)];
    let mut steps = 0;
    while let Some((m, depth)) = stack.pop() {
        steps += 1;
        if steps > STEP_CAP || depth > s {
            return Err(Error::RecursionCap(STEP_CAP));
        }
        if m.iter().any(|f| f.element.is_zero()) {
            continue;
        }
        let (p, gap) = closest_pair(&m).ok_or_else(|| {
            Error::HypothesisViolated("monomial has pairwise distinct indices".into())
        })?;
        let i = m[p].index;
        if gap == 0 {
            let merged = host.mul(&m[p].element, &m[p + 1].element)?;
            if !family.part(i).contains(&merged) {
                return Err(Error::HypothesisViolated(format!(
                    "C_{} is not closed under multiplication",
                    i + 1
                )));
            }
            let mut out = m[..p].to_vec();
            out.push(Factor::new(i, merged));
            out.extend_from_slice(&m[p + 2..]);
            terms.push(out);
            continue;
        }
        // cd = Σ_t (h_t . d) b_t with Δc = Σ h_t ⊗ b_t, b_t the basis of C_i
        let (c, d) = (&m[p].element, &m[p + 1].element);
        let ci = family.part(i);
        let mut h: Vec<SparseVec<H::Key>> = vec![SparseVec::new(); ci.dim()];
        let delta = host.coproduct(c);
        let mut by_first: std::collections::BTreeMap<H::Key, SparseVec<H::Key>> = Default::default();
        for ((a, b), x) in delta.iter() {
            by_first.entry(a.clone()).or_default().add_term(b.clone(), x.clone());
        }
        for (a, leg) in &by_first {
            let coords = ci.coordinates(leg).ok_or_else(|| {
                Error::HypothesisViolated(format!("Δ of a factor leaves H ⊗ C_{}", i + 1))
            })?;
            for (t, x) in coords.iter().enumerate() {
                if !x.is_zero() {
                    h[t].add_term(a.clone(), x.clone());
                }
            }
        }
        for (t, ht) in h.iter().enumerate() {
            if ht.is_zero() {
                continue;
            }
            let y = host.adjoint(ht, d)?;
            let parts = family.decompose(&y).ok_or_else(|| {
                Error::HypothesisViolated(format!("adjoint image {y} leaves C"))
            })?;
            for (l, yl) in parts.into_iter().enumerate() {
                if yl.is_zero() {
                    continue;
                }
                let mut out = m[..p].to_vec();
                out.push(Factor::new(l, yl));
                out.push(Factor::new(i, ci.basis()[t].clone()));
                out.extend_from_slice(&m[p + 2..]);
                stack.push((out, depth + 1));
            }
        }
    }
    let value = product(host, monomial)?;
    let mut total = SparseVec::new();
    for t in &terms {
        if t.len() != s - 1 {
            return Err(Error::HypothesisViolated("output monomial has wrong length".into()));
        }
        total.add(&product(host, t)?);
    }
    if total != value {
        return Err(Error::HypothesisViolated(
            "straightened sum differs from the monomial".into(),
        ));
    }
    Ok(Straightened { terms, value, steps })
}

/// Span of the values of all output terms of [`straighten`] over every
/// monomial of length `s` whose factors are basis elements of the `C_i`.
pub fn straightened_span<H: AlgebraHost>(
    family: &CoidealFamily<'_, H>,
    s: usize,
) -> Result<SparseSubspace<H::Key>> {
    let host = family.host();
    let k = family.k();
    let mut span = SparseSubspace::new(host.field());
    let mut indices = vec![0usize; s];
    loop {
        let mut choice = vec![0usize; s];
        loop {
            let m: Vec<Factor<H::Key>> = (0..s)
                .map(|l| Factor::new(indices[l], family.part(indices[l]).basis()[choice[l]].clone()))
                .collect();
            for t in straighten(family, &m)?.terms {
                span.insert(&product(host, &t)?);
            }
            if !advance(&mut choice, |l| family.part(indices[l]).dim()) {
                break;
            }
        }
        if !advance(&mut indices, |_| k) {
            break;
        }
    }
    Ok(span)
}

/// Odometer increment; false after the last tuple.
fn advance(v: &mut [usize], bound: impl Fn(usize) -> usize) -> bool {
    for l in (0..v.len()).rev() {
        v[l] += 1;
        if v[l] < bound(l) {
            return true;
        }
        v[l] = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{small, Group, GroupElem};
    use crate::hopf::{group_algebra, label_index};
    use crate::scalar::Field;

    fn d4_family_vectors(h: &crate::hopf::HopfAlgebraData) -> Vec<Vec<SparseVec<usize>>> {
        // r = (1234), s = (13)
        let idx = label_index(h);
        let e = |l: &str| SparseVec::unit(idx[l], &h.field);
        vec![
            ["()", "(1234)", "(13)(24)", "(1432)"].map(e).to_vec(),
            ["()", "(13)(24)", "(13)", "(24)"].map(e).to_vec(),
        ]
    }

    #[test]
    fn d4_family_stabilizes_at_two() {
        let q = Field::rationals();
        let h = group_algebra(&small::by_name("D4").unwrap(), &q).unwrap();
        let fam = CoidealFamily::new(&h, &d4_family_vectors(&h)).unwrap();
        assert_eq!(fam.coideal_verified, vec![true, true]);
        assert_eq!(fam.stability, Stability::Verified);
        let r = product_filtration(&fam, 5, 100).unwrap();
        assert_eq!(r.dims, vec![6, 8, 8]);
        assert_eq!(r.stabilization, Some(2));
        assert_eq!(r.closure_dim(), 8);
    }

    #[test]
    fn straighten_merges_adjacent_and_certifies() {
        let q = Field::rationals();
        let h = group_algebra(&small::by_name("D4").unwrap(), &q).unwrap();
        let fam = CoidealFamily::new(&h, &d4_family_vectors(&h)).unwrap();
        let c1 = fam.part(0).basis()[1].clone();
        let c2 = fam.part(1).basis()[2].clone();
        let out = straighten(&fam, &[Factor::new(0, c1.clone()), Factor::new(0, c1.clone()), Factor::new(1, c2.clone())]).unwrap();
        assert_eq!(out.terms.len(), 1);
        assert_eq!(out.steps, 1);
        let out = straighten(&fam, &[Factor::new(0, c1.clone()), Factor::new(1, c2), Factor::new(0, c1)]).unwrap();
        assert!(out.terms.iter().all(|t| t.len() == 2));
        let r = product_filtration(&fam, 5, 100).unwrap();
        assert!(r.level(2).unwrap().contains(&out.value));
    }

    #[test]
    fn too_short_monomial_is_rejected() {
        let q = Field::rationals();
        let h = group_algebra(&small::by_name("D4").unwrap(), &q).unwrap();
        let fam = CoidealFamily::new(&h, &d4_family_vectors(&h)).unwrap();
        let one = SparseVec::unit(0, &q);
        assert!(matches!(
            straighten(&fam, &[Factor::new(0, one.clone()), Factor::new(1, one)]),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn infinite_dihedral_negative_control() {
        let q = Field::rationals();
        let g = Group::InfiniteDihedral;
        let host = GroupHost::new(&g, &q);
        let e = |k, reflect| host.element(&GroupElem::Dihedral { k, reflect });
        let fam = CoidealFamily::new(&host, &[vec![e(0, false), e(0, true)], vec![e(0, false), e(1, true)]]).unwrap();
        assert_eq!(fam.coideal_verified, vec![true, true]);
        assert_eq!(fam.stability, Stability::Unknown);
        let fam = fam.assume_stable();
        let m = [Factor::new(0, e(0, true)), Factor::new(1, e(1, true)), Factor::new(0, e(0, true))];
        assert!(matches!(straighten(&fam, &m), Err(Error::HypothesisViolated(_))));
    }

    #[test]
    fn decomposition_prefers_earlier_parts() {
        let q = Field::rationals();
        let h = group_algebra(&small::by_name("D4").unwrap(), &q).unwrap();
        let fam = CoidealFamily::new(&h, &d4_family_vectors(&h)).unwrap();
        let one = AlgebraHost::one(&h);
        let parts = fam.decompose(&one).unwrap();
        assert_eq!(parts[0], one);
        assert!(parts[1].is_zero());
        assert!(fam.decompose(&SparseVec::unit(label_index(&h)["(12)(34)"], &q)).is_none());
    }

    #[test]
    fn window_overflow_is_reported() {
        let q = Field::rationals();
        let g = Group::InfiniteDihedral;
        let host = GroupHost::with_window(&g, &q, 2);
        let r = host.element(&GroupElem::Dihedral { k: 2, reflect: false });
        assert!(matches!(host.mul(&r, &r), Err(Error::WindowOverflow(_))));
    }
}
