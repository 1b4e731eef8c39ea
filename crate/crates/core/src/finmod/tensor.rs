use std::fmt;

use super::{ComputableModule, CoproductTerm, GeneratorInfo};
use crate::error::{Error, Result};
use crate::linalg::{SparseVec, Subspace, Vector};
use crate::scalar::Field;

fn check_ambient(u: &Subspace, dim_v: usize, dim_w: usize) -> Result<()> {
    if u.ambient_dim() != dim_v * dim_w {
        return Err(Error::DimensionMismatch {
            expected: dim_v * dim_w,
            found: u.ambient_dim(),
        });
    }
    Ok(())
}

/// `U′ = Σ_f (Id ⊗ f)(U)`, the smallest `V′` with `U ⊆ V′ ⊗ W`.
pub fn u_prime(u: &Subspace, dim_v: usize, dim_w: usize) -> Result<Subspace> {
    check_ambient(u, dim_v, dim_w)?;
    let slices: Vec<Vector> = u
        .basis()
        .iter()
        .flat_map(|x| (0..dim_w).map(move |j| (0..dim_v).map(|i| x[i * dim_w + j].clone()).collect()))
        .collect();
    Subspace::span(u.field(), &slices, dim_v)
}

/// `U″ = Σ_f (f ⊗ Id)(U)`, the smallest `W′` with `U ⊆ V ⊗ W′`.
pub fn u_double_prime(u: &Subspace, dim_v: usize, dim_w: usize) -> Result<Subspace> {
    check_ambient(u, dim_v, dim_w)?;
    let slices: Vec<Vector> = u
        .basis()
        .iter()
        .flat_map(|x| (0..dim_v).map(move |i| x[i * dim_w..(i + 1) * dim_w].to_vec()))
        .collect();
    Subspace::span(u.field(), &slices, dim_w)
}

/// Slices `(Id ⊗ f_j)(x)` of a sparse tensor, one per second key.
pub fn sparse_u_prime<A: Ord + Clone, B: Ord + Clone>(x: &SparseVec<(A, B)>) -> Vec<SparseVec<A>> {
    let mut by_second: std::collections::BTreeMap<B, SparseVec<A>> = Default::default();
    for ((a, b), c) in x.iter() {
        by_second.entry(b.clone()).or_default().add_term(a.clone(), c.clone());
    }
    by_second.into_values().collect()
}

/// Slices `(f_i ⊗ Id)(x)` of a sparse tensor, one per first key.
pub fn sparse_u_double_prime<A: Ord + Clone, B: Ord + Clone>(x: &SparseVec<(A, B)>) -> Vec<SparseVec<B>> {
    let mut by_first: std::collections::BTreeMap<A, SparseVec<B>> = Default::default();
    for ((a, b), c) in x.iter() {
        by_first.entry(a.clone()).or_default().add_term(b.clone(), c.clone());
    }
    by_first.into_values().collect()
}

/// Key of a tensor product basis element.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Pair<A, B>(pub A, pub B);

impl<A: fmt::Display, B: fmt::Display> fmt::Display for Pair<A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}⊗{}", self.0, self.1)
    }
}

/// `V ⊗ W` for computable modules over the same generators.
pub struct TensorModule<'a, M, N> {
    left: &'a M,
    right: &'a N,
    coproducts: Vec<Vec<CoproductTerm>>,
}

impl<'a, M: ComputableModule, N: ComputableModule> TensorModule<'a, M, N> {
    pub fn new(left: &'a M, right: &'a N) -> Result<Self> {
        if left.generators() != right.generators() || left.field() != right.field() {
            return Err(Error::AlgebraMismatch(
                "tensor factors must share generators and field".into(),
            ));
        }
        let coproducts = (0..left.generators().len())
            .map(|g| left.generator_coproduct(g))
            .collect::<Result<_>>()?;
        Ok(TensorModule {
            left,
            right,
            coproducts,
        })
    }

    pub fn pure(v: &SparseVec<M::Key>, w: &SparseVec<N::Key>) -> SparseVec<Pair<M::Key, N::Key>> {
        let mut out = SparseVec::new();
        for (a, x) in v.iter() {
            for (b, y) in w.iter() {
                out.add_term(Pair(a.clone(), b.clone()), x * y);
            }
        }
        out
    }

    /// Splits `x` into the sparse tensor of its key pairs.
    pub fn as_pairs(x: &SparseVec<Pair<M::Key, N::Key>>) -> SparseVec<(M::Key, N::Key)> {
        SparseVec::from_terms(x.iter().map(|(Pair(a, b), c)| ((a.clone(), b.clone()), c.clone())))
    }
}

impl<M: ComputableModule, N: ComputableModule> ComputableModule for TensorModule<'_, M, N> {
    type Key = Pair<M::Key, N::Key>;

    fn field(&self) -> &Field {
        self.left.field()
    }

    fn generators(&self) -> &[GeneratorInfo] {
        self.left.generators()
    }

    fn act(&self, gen: usize, key: &Self::Key) -> Result<SparseVec<Self::Key>> {
        let f = self.field();
        let mut out = SparseVec::new();
        for (c, lw, rw) in &self.coproducts[gen] {
            let v = self.left.act_word(lw, &SparseVec::unit(key.0.clone(), f))?;
            let w = self.right.act_word(rw, &SparseVec::unit(key.1.clone(), f))?;
            out.add_scaled(c, &Self::pure(&v, &w));
        }
        Ok(out)
    }

    fn generator_coproduct(&self, gen: usize) -> Result<Vec<CoproductTerm>> {
        Ok(self.coproducts[gen].clone())
    }
}

/// `V_F = F ⊗_k V` for a field extension `F/k`, on the same basis keys.
pub struct ExtendedModule<'a, M> {
    inner: &'a M,
    target: Field,
}

impl<'a, M: ComputableModule> ExtendedModule<'a, M> {
    pub fn new(inner: &'a M, target: &Field) -> Result<Self> {
        if !inner.field().embeds_into(target) {
            return Err(Error::UnsupportedExtension(
                inner.field().to_string(),
                target.to_string(),
            ));
        }
        Ok(ExtendedModule {
            inner,
            target: target.clone(),
        })
    }

    /// Reinterprets a vector of the base module.
    pub fn embed(&self, v: &SparseVec<M::Key>) -> Result<SparseVec<M::Key>> {
        Ok(SparseVec::from_terms(
            v.iter()
                .map(|(k, c)| Ok((k.clone(), c.embed(&self.target)?)))
                .collect::<Result<Vec<_>>>()?,
        ))
    }
}

impl<M: ComputableModule> ComputableModule for ExtendedModule<'_, M> {
    type Key = M::Key;

    fn field(&self) -> &Field {
        &self.target
    }

    fn generators(&self) -> &[GeneratorInfo] {
        self.inner.generators()
    }

    fn act(&self, gen: usize, key: &Self::Key) -> Result<SparseVec<Self::Key>> {
        self.embed(&self.inner.act(gen, key)?)
    }

    fn generator_coproduct(&self, gen: usize) -> Result<Vec<CoproductTerm>> {
        self.inner
            .generator_coproduct(gen)?
            .into_iter()
            .map(|(c, l, r)| Ok((c.embed(&self.target)?, l, r)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::tensor_vectors;

    fn v(q: &Field, xs: &[i64]) -> Vector {
        xs.iter().map(|&x| q.from_int(x)).collect()
    }

    #[test]
    fn rank_two_tensor() {
        let q = Field::rationals();
        // v1 = (1,0,0), v2 = (0,1,1) in k³; w1 = (1,0), w2 = (1,1) in k²
        let (v1, v2) = (v(&q, &[1, 0, 0]), v(&q, &[0, 1, 1]));
        let (w1, w2) = (v(&q, &[1, 0]), v(&q, &[1, 1]));
        let x: Vector = tensor_vectors(&v1, &w1)
            .iter()
            .zip(tensor_vectors(&v2, &w2))
            .map(|(a, b)| a + &b)
            .collect();
        let u = Subspace::span(&q, &[x], 6).unwrap();
        assert_eq!(u_prime(&u, 3, 2).unwrap(), Subspace::span(&q, &[v1, v2], 3).unwrap());
        assert_eq!(u_double_prime(&u, 3, 2).unwrap(), Subspace::full(&q, 2));
    }

    #[test]
    fn full_and_zero() {
        let q = Field::rationals();
        let full = Subspace::full(&q, 6);
        assert!(u_prime(&full, 2, 3).unwrap().is_full());
        assert!(u_double_prime(&full, 2, 3).unwrap().is_full());
        assert!(u_prime(&Subspace::zero(&q, 6), 2, 3).unwrap().is_zero());
        assert!(matches!(u_prime(&full, 2, 2), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn sparse_slices() {
        let q = Field::rationals();
        let x: SparseVec<(u8, u8)> = SparseVec::from_terms([
            ((0, 0), q.one()),
            ((1, 0), q.from_int(2)),
            ((1, 1), q.one()),
        ]);
        let p = sparse_u_prime(&x);
        assert_eq!(p.len(), 2);
        assert_eq!(p[0], SparseVec::from_terms([(0, q.one()), (1, q.from_int(2))]));
        let pp: Vec<SparseVec<u8>> = sparse_u_double_prime(&x);
        assert_eq!(pp[1], SparseVec::from_terms([(0, q.from_int(2)), (1, q.one())]));
    }
}
