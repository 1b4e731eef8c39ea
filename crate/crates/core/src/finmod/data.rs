use std::sync::Arc;

use super::{orbit_closure, ComputableModule, CoproductTerm, GeneratorInfo};
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebraData;
use crate::linalg::{self, LinearMap, SparseVec, Subspace, Vector};
use crate::scalar::{Field, Scalar};

/// A finite-dimensional left module: one matrix per algebra basis element.
#[derive(Clone, Debug)]
pub struct ModuleData {
    algebra: Arc<HopfAlgebraData>,
    dim: usize,
    action: Vec<LinearMap>,
    generators: Vec<GeneratorInfo>,
}

fn same_algebra(a: &Arc<HopfAlgebraData>, b: &Arc<HopfAlgebraData>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl ModuleData {
    /// Checks that `action[i]` is a `dim × dim` matrix, that the unit acts
    /// as the identity and that `ρ(e_i)ρ(e_j) = ρ(e_i e_j)`.
    pub fn new(algebra: &Arc<HopfAlgebraData>, dim: usize, action: Vec<LinearMap>) -> Result<ModuleData> {
        let h = algebra.as_ref();
        if action.len() != h.dim {
            return Err(Error::DimensionMismatch {
                expected: h.dim,
                found: action.len(),
            });
        }
        if action
            .iter()
            .any(|m| m.domain_dim() != dim || m.codomain_dim() != dim || m.field() != &h.field)
        {
            return Err(Error::ShapeMismatch("action matrices must be dim × dim over the algebra's field".into()));
        }
        let m = ModuleData {
            algebra: algebra.clone(),
            dim,
            action,
            generators: h.labels.iter().map(|l| GeneratorInfo::new(l.clone(), false)).collect(),
        };
        if m.rho(&h.unit) != LinearMap::identity(&h.field, dim) {
            return Err(Error::NotAModule("unit does not act as the identity".into()));
        }
        for i in 0..h.dim {
            for j in 0..h.dim {
                let lhs = m.action[i].compose(&m.action[j])?;
                if lhs != m.rho_sparse(h.mul_basis(i, j)) {
                    return Err(Error::NotAModule(format!(
                        "ρ({})ρ({}) ≠ ρ({}·{})",
                        h.label(i),
                        h.label(j),
                        h.label(i),
                        h.label(j)
                    )));
                }
            }
        }
        Ok(m)
    }

    fn rho_sparse(&self, x: &SparseVec<usize>) -> LinearMap {
        let f = &self.algebra.field;
        let mut out = LinearMap::zero(f, self.dim, self.dim);
        for (&k, c) in x.iter() {
            out = out.add(&self.action[k].scale(c)).expect("same shape");
        }
        out
    }

    /// The matrix by which an algebra element acts.
    pub fn rho(&self, x: &[Scalar]) -> LinearMap {
        let s = SparseVec::from_terms(crate::hopf::nonzeros(x).map(|(i, c)| (i, c.clone())));
        self.rho_sparse(&s)
    }

    pub fn algebra(&self) -> &Arc<HopfAlgebraData> {
        &self.algebra
    }

    pub fn field(&self) -> &Field {
        &self.algebra.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self, i: usize) -> &LinearMap {
        &self.action[i]
    }

    pub fn actions(&self) -> &[LinearMap] {
        &self.action
    }

    /// `h · v`.
    pub fn act_vector(&self, h: &[Scalar], v: &[Scalar]) -> Result<Vector> {
        self.algebra.check_element(h)?;
        self.rho(h).apply(v)
    }

    /// `H` acting on itself by left multiplication.
    pub fn regular(h: &Arc<HopfAlgebraData>) -> ModuleData {
        let action = (0..h.dim).map(|k| h.left_mult_matrix(k)).collect();
        Self::unchecked(h, h.dim, action)
    }

    /// `H` acting on itself by the adjoint action.
    pub fn adjoint(h: &Arc<HopfAlgebraData>) -> ModuleData {
        let action = (0..h.dim).map(|k| h.ad_matrix(k)).collect();
        Self::unchecked(h, h.dim, action)
    }

    /// The one-dimensional module through the counit.
    pub fn trivial(h: &Arc<HopfAlgebraData>) -> ModuleData {
        Self::character(h, &h.counit).expect("the counit is an algebra map")
    }

    /// The one-dimensional module through an algebra map `χ: H → k`.
    pub fn character(h: &Arc<HopfAlgebraData>, values: &[Scalar]) -> Result<ModuleData> {
        h.check_element(values)?;
        let action = values
            .iter()
            .map(|c| {
                let mut m = LinearMap::zero(&h.field, 1, 1);
                m.set(0, 0, c.clone());
                m
            })
            .collect();
        ModuleData::new(h, 1, action)
    }

    pub fn zero(h: &Arc<HopfAlgebraData>) -> ModuleData {
        Self::unchecked(h, 0, vec![LinearMap::zero(&h.field, 0, 0); h.dim])
    }

    fn unchecked(h: &Arc<HopfAlgebraData>, dim: usize, action: Vec<LinearMap>) -> ModuleData {
        ModuleData {
            algebra: h.clone(),
            dim,
            action,
            generators: h.labels.iter().map(|l| GeneratorInfo::new(l.clone(), false)).collect(),
        }
    }

    pub fn direct_sum(&self, other: &ModuleData) -> Result<ModuleData> {
        if !same_algebra(&self.algebra, &other.algebra) {
            return Err(Error::AlgebraMismatch("direct sum of modules over different algebras".into()));
        }
        let f = self.field();
        let n = self.dim + other.dim;
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| {
                let mut m = LinearMap::zero(f, n, n);
                for i in 0..self.dim {
                    for j in 0..self.dim {
                        m.set(i, j, a.get(i, j).clone());
                    }
                }
                for i in 0..other.dim {
                    for j in 0..other.dim {
                        m.set(self.dim + i, self.dim + j, b.get(i, j).clone());
                    }
                }
                m
            })
            .collect();
        Ok(Self::unchecked(&self.algebra, n, action))
    }

    /// True if `h·U ⊆ U` for every basis element `h`.
    pub fn is_stable(&self, u: &Subspace) -> Result<bool> {
        for m in &self.action {
            if !u.contains_subspace(&m.image_of(u)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The submodule `U` in the coordinates of its echelon basis.
    pub fn restrict(&self, u: &Subspace) -> Result<ModuleData> {
        if u.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: u.ambient_dim(),
            });
        }
        let mut action = Vec::with_capacity(self.action.len());
        for m in &self.action {
            let mut cols = Vec::with_capacity(u.dim());
            for b in u.basis() {
                let img = m.apply(b)?;
                cols.push(u.coordinates(&img)?.ok_or_else(|| {
                    Error::PreconditionViolated("subspace is not a submodule".into())
                })?);
            }
            action.push(LinearMap::from_columns(self.field(), u.dim(), &cols)?);
        }
        Ok(Self::unchecked(&self.algebra, u.dim(), action))
    }

    /// The same module over the scalar extension `H_F`.
    pub fn extend_scalars(&self, target: &Field) -> Result<ModuleData> {
        if !self.field().embeds_into(target) {
            return Err(Error::UnsupportedExtension(
                self.field().to_string(),
                target.to_string(),
            ));
        }
        let h = Arc::new(self.algebra.extend_scalars(target)?);
        let action = self
            .action
            .iter()
            .map(|m| m.embed(target))
            .collect::<Result<_>>()?;
        Ok(Self::unchecked(&h, self.dim, action))
    }
}

impl ComputableModule for ModuleData {
    type Key = usize;

    fn field(&self) -> &Field {
        &self.algebra.field
    }

    fn generators(&self) -> &[GeneratorInfo] {
        &self.generators
    }

    fn act(&self, gen: usize, key: &usize) -> Result<SparseVec<usize>> {
        if *key >= self.dim {
            return Err(Error::IndexOutOfRange {
                index: *key,
                bound: self.dim,
            });
        }
        let col = self.action[gen].column(*key);
        Ok(SparseVec::from_terms(
            col.into_iter().enumerate().filter(|(_, c)| !c.is_zero()),
        ))
    }

    fn generator_coproduct(&self, gen: usize) -> Result<Vec<CoproductTerm>> {
        Ok(self.algebra.comult[gen]
            .iter()
            .map(|(&(i, j), c)| (c.clone(), vec![i], vec![j]))
            .collect())
    }
}

/// `M ⊗ N` with `h·(v⊗w) = h₍₁₎v ⊗ h₍₂₎w`, row-major indices.
pub fn tensor_module(m: &ModuleData, n: &ModuleData) -> Result<ModuleData> {
    if !same_algebra(&m.algebra, &n.algebra) {
        return Err(Error::AlgebraMismatch("tensor product of modules over different algebras".into()));
    }
    let h = &m.algebra;
    let d = m.dim * n.dim;
    let action = h
        .comult
        .iter()
        .map(|dk| {
            let mut acc = LinearMap::zero(&h.field, d, d);
            for (&(i, j), c) in dk.iter() {
                acc = acc
                    .add(&m.action[i].tensor(&n.action[j]).scale(c))
                    .expect("same shape");
            }
            acc
        })
        .collect();
    Ok(ModuleData::unchecked(h, d, action))
}

/// For a finite-dimensional module the locally finite part is the whole
/// space; each basis vector's orbit is closed explicitly as a certificate.
pub fn locally_finite_part(module: &ModuleData) -> Result<Subspace> {
    let f = module.field();
    for i in 0..module.dim() {
        let v = orbit_closure(module, &[SparseVec::unit(i, f)], module.dim().max(1))?;
        if !v.is_finite() {
            return Err(Error::HypothesisViolated(format!(
                "basis vector {i} of a finite-dimensional module has no finite orbit"
            )));
        }
    }
    Ok(Subspace::full(f, module.dim()))
}

impl ModuleData {
    /// Dense coordinates of a sparse vector.
    pub fn densify(&self, v: &SparseVec<usize>) -> Vector {
        let mut out = linalg::zero_vector(self.field(), self.dim);
        for (&k, c) in v.iter() {
            out[k] = c.clone();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::small;
    use crate::hopf;

    fn kc2() -> Arc<HopfAlgebraData> {
        let c2 = small::by_name("C2").unwrap();
        Arc::new(hopf::group_algebra(&c2, &Field::rationals()).unwrap())
    }

    #[test]
    fn trivial_tensor_is_identity() {
        let h = Arc::new(hopf::sweedler(&Field::rationals()).unwrap());
        let m = ModuleData::regular(&h);
        let t = tensor_module(&ModuleData::trivial(&h), &m).unwrap();
        assert_eq!(t.dim(), 4);
        assert_eq!(t.actions(), m.actions());
        assert!(ModuleData::new(&h, 4, t.actions().to_vec()).is_ok());
    }

    #[test]
    fn dimensions_multiply() {
        let h = kc2();
        let two = ModuleData::regular(&h);
        let three = two.direct_sum(&ModuleData::trivial(&h)).unwrap();
        assert_eq!(tensor_module(&two, &three).unwrap().dim(), 6);
    }

    #[test]
    fn sign_squared_is_trivial() {
        let h = kc2();
        let q = &h.field;
        let sign = ModuleData::character(&h, &[q.one(), q.from_int(-1)]).unwrap();
        let t = tensor_module(&sign, &sign).unwrap();
        assert_eq!(t.actions(), ModuleData::trivial(&h).actions());
    }

    #[test]
    fn rejects_non_module() {
        let h = kc2();
        let q = &h.field;
        assert!(matches!(
            ModuleData::character(&h, &[q.one(), q.from_int(2)]),
            Err(Error::NotAModule(_))
        ));
    }

    #[test]
    fn locally_finite_parts() {
        let h = Arc::new(hopf::sweedler(&Field::rationals()).unwrap());
        assert_eq!(locally_finite_part(&ModuleData::adjoint(&h)).unwrap().dim(), 4);
        assert_eq!(locally_finite_part(&ModuleData::zero(&h)).unwrap().dim(), 0);
        assert!(locally_finite_part(&ModuleData::regular(&h)).unwrap().is_full());
    }

    #[test]
    fn adjoint_module_is_a_module() {
        let h = Arc::new(hopf::sweedler(&Field::rationals()).unwrap());
        let ad = ModuleData::adjoint(&h);
        assert!(ModuleData::new(&h, 4, ad.actions().to_vec()).is_ok());
    }

    #[test]
    fn extension_keeps_trivial_module() {
        let h = kc2();
        let f = Field::cyclotomic(4).unwrap();
        let t = ModuleData::trivial(&h).extend_scalars(&f).unwrap();
        assert_eq!(t.dim(), 1);
        assert_eq!(t.field(), &f);
        assert!(matches!(
            ModuleData::trivial(&h).extend_scalars(&Field::prime(5).unwrap()),
            Err(Error::UnsupportedExtension(..))
        ));
    }

    #[test]
    fn s3_adjoint_extended_is_still_locally_finite() {
        let s3 = small::by_name("S3").unwrap();
        let h = Arc::new(hopf::group_algebra(&s3, &Field::rationals()).unwrap());
        let f = Field::cyclotomic(3).unwrap();
        let ad = ModuleData::adjoint(&h).extend_scalars(&f).unwrap();
        assert_eq!(locally_finite_part(&ad).unwrap().dim(), 6);
    }
}
