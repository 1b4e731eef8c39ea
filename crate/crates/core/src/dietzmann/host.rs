use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::groups::{Group, GroupElem};
use crate::hopf::HopfAlgebraData;
use crate::linalg::SparseVec;
use crate::pbw::{Letter, Mono, PresentedAlgebra};
use crate::scalar::Field;

/// A Hopf algebra with a basis of keys, possibly restricted to a finite
/// window of keys outside of which products are refused.
pub trait AlgebraHost {
    type Key: Ord + Clone + fmt::Debug + fmt::Display;

    fn field(&self) -> &Field;

    fn one(&self) -> SparseVec<Self::Key>;

    /// Product, or `WindowOverflow` if it leaves the window.
    fn mul(&self, a: &SparseVec<Self::Key>, b: &SparseVec<Self::Key>) -> Result<SparseVec<Self::Key>>;

    fn coproduct(&self, a: &SparseVec<Self::Key>) -> SparseVec<(Self::Key, Self::Key)>;

    /// `h.v = h₍₁₎ v S(h₍₂₎)`.
    fn adjoint(&self, h: &SparseVec<Self::Key>, v: &SparseVec<Self::Key>) -> Result<SparseVec<Self::Key>>;

    /// Elements whose adjoint actions generate that of the whole algebra.
    fn ad_generators(&self) -> Vec<SparseVec<Self::Key>>;

    fn in_window(&self, _key: &Self::Key) -> bool {
        true
    }

    fn check_window(&self, v: &SparseVec<Self::Key>) -> Result<()> {
        match v.keys().find(|k| !self.in_window(k)) {
            Some(k) => Err(Error::WindowOverflow(format!("{k} lies outside the window"))),
            None => Ok(()),
        }
    }
}

impl AlgebraHost for HopfAlgebraData {
    type Key = usize;

    fn field(&self) -> &Field {
        &self.field
    }

    fn one(&self) -> SparseVec<usize> {
        SparseVec::from_terms(
            self.unit
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone())),
        )
    }

    fn mul(&self, a: &SparseVec<usize>, b: &SparseVec<usize>) -> Result<SparseVec<usize>> {
        Ok(self.mul_sparse(a, b))
    }

    fn coproduct(&self, a: &SparseVec<usize>) -> SparseVec<(usize, usize)> {
        self.comult_sparse(a)
    }

    fn adjoint(&self, h: &SparseVec<usize>, v: &SparseVec<usize>) -> Result<SparseVec<usize>> {
        Ok(self.adjoint_action_sparse(h, v))
    }

    fn ad_generators(&self) -> Vec<SparseVec<usize>> {
        (0..self.dim).map(|i| SparseVec::unit(i, &self.field)).collect()
    }
}

/// The group algebra of a group provider, with an optional finite window
/// of admissible elements.
pub struct GroupHost {
    pub group: Group,
    field: Field,
    window: Option<BTreeSet<GroupElem>>,
}

impl GroupHost {
    /// Without a window every product is admissible.
    pub fn new(group: &Group, field: &Field) -> GroupHost {
        GroupHost {
            group: group.clone(),
            field: field.clone(),
            window: None,
        }
    }

    /// Restricts to the elements of word length at most `len`.
    pub fn with_window(group: &Group, field: &Field, len: usize) -> GroupHost {
        GroupHost {
            group: group.clone(),
            field: field.clone(),
            window: Some(group.enumerate(len).into_iter().collect()),
        }
    }

    pub fn element(&self, g: &GroupElem) -> SparseVec<GroupElem> {
        SparseVec::unit(g.clone(), &self.field)
    }

    /// Window elements (or, for finite groups without a window, all
    /// elements) by display label.
    pub fn lookup(&self, label: &str) -> Option<GroupElem> {
        let pool: Vec<GroupElem> = match &self.window {
            Some(w) => w.iter().cloned().collect(),
            None => self.group.finite_elements(),
        };
        pool.into_iter().find(|g| g.to_string() == label)
    }
}

impl AlgebraHost for GroupHost {
    type Key = GroupElem;

    fn field(&self) -> &Field {
        &self.field
    }

    fn one(&self) -> SparseVec<GroupElem> {
        self.element(&self.group.identity())
    }

    fn mul(&self, a: &SparseVec<GroupElem>, b: &SparseVec<GroupElem>) -> Result<SparseVec<GroupElem>> {
        let mut out = SparseVec::new();
        for (g, x) in a.iter() {
            for (h, y) in b.iter() {
                out.add_term(self.group.mul(g, h), x * y);
            }
        }
        self.check_window(&out)?;
        Ok(out)
    }

    fn coproduct(&self, a: &SparseVec<GroupElem>) -> SparseVec<(GroupElem, GroupElem)> {
        SparseVec::from_terms(a.iter().map(|(g, c)| ((g.clone(), g.clone()), c.clone())))
    }

    fn adjoint(&self, h: &SparseVec<GroupElem>, v: &SparseVec<GroupElem>) -> Result<SparseVec<GroupElem>> {
        let mut out = SparseVec::new();
        for (g, x) in h.iter() {
            for (k, y) in v.iter() {
                out.add_term(self.group.conjugate(g, k), x * y);
            }
        }
        self.check_window(&out)?;
        Ok(out)
    }

    fn ad_generators(&self) -> Vec<SparseVec<GroupElem>> {
        self.group.generators().iter().map(|g| self.element(g)).collect()
    }

    fn in_window(&self, key: &GroupElem) -> bool {
        self.window.as_ref().is_none_or(|w| w.contains(key))
    }
}

/// A presented algebra restricted to monomials `F^a K^b E^c` with
/// `a + |b| + c ≤ max_degree`.
pub struct PbwHost<'a> {
    pub alg: &'a PresentedAlgebra,
    pub max_degree: u64,
}

impl AlgebraHost for PbwHost<'_> {
    type Key = Mono;

    fn field(&self) -> &Field {
        self.alg.field()
    }

    fn one(&self) -> SparseVec<Mono> {
        self.alg.one()
    }

    fn mul(&self, a: &SparseVec<Mono>, b: &SparseVec<Mono>) -> Result<SparseVec<Mono>> {
        let p = self.alg.mul(a, b);
        self.check_window(&p)?;
        Ok(p)
    }

    fn coproduct(&self, a: &SparseVec<Mono>) -> SparseVec<(Mono, Mono)> {
        self.alg.coproduct(a)
    }

    fn adjoint(&self, h: &SparseVec<Mono>, v: &SparseVec<Mono>) -> Result<SparseVec<Mono>> {
        let p = self.alg.adjoint_action(h, v);
        self.check_window(&p)?;
        Ok(p)
    }

    fn ad_generators(&self) -> Vec<SparseVec<Mono>> {
        [Letter::E, Letter::F, Letter::K, Letter::Kinv]
            .iter()
            .map(|&l| self.alg.generator(l))
            .collect()
    }

    fn in_window(&self, m: &Mono) -> bool {
        u64::from(m.a) + m.b.unsigned_abs() + u64::from(m.c) <= self.max_degree
    }
}
