use super::{check_len, kernel, zero_vector, Subspace, Vector};
use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// A linear map `k^domain → k^codomain`. Column `j` is the image of `e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    field: Field,
    domain: usize,
    codomain: usize,
    /// row-major, `codomain × domain`
    entries: Vec<Scalar>,
}

impl LinearMap {
    pub fn zero(field: &Field, domain: usize, codomain: usize) -> LinearMap {
        LinearMap {
            field: field.clone(),
            domain,
            codomain,
            entries: vec![field.zero(); domain * codomain],
        }
    }

    pub fn identity(field: &Field, n: usize) -> LinearMap {
        let mut m = LinearMap::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_columns(field: &Field, codomain: usize, columns: &[Vector]) -> Result<LinearMap> {
        let mut m = LinearMap::zero(field, columns.len(), codomain);
        for (j, col) in columns.iter().enumerate() {
            check_len(col, codomain)?;
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn domain_dim(&self) -> usize {
        self.domain
    }

    pub fn codomain_dim(&self) -> usize {
        self.codomain
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.domain + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        self.entries[i * self.domain + j] = x;
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.codomain).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row(&self, i: usize) -> Vector {
        self.entries[i * self.domain..(i + 1) * self.domain].to_vec()
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vector> {
        check_len(v, self.domain)?;
        let mut out = zero_vector(&self.field, self.codomain);
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() {
                    *o = &*o + &(a * x);
                }
            }
        }
        Ok(out)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap> {
        if other.codomain != self.domain {
            return Err(Error::DimensionMismatch {
                expected: self.domain,
                found: other.codomain,
            });
        }
        let cols = (0..other.domain)
            .map(|j| self.apply(&other.column(j)))
            .collect::<Result<Vec<_>>>()?;
        LinearMap::from_columns(&self.field, self.codomain, &cols)
    }

    pub fn add(&self, other: &LinearMap) -> Result<LinearMap> {
        if self.domain != other.domain || self.codomain != other.codomain {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} vs {}x{}",
                self.codomain, self.domain, other.codomain, other.domain
            )));
        }
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            *a = &*a + b;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> LinearMap {
        let mut out = self.clone();
        for a in out.entries.iter_mut() {
            *a = &*a * c;
        }
        out
    }

    pub fn transpose(&self) -> LinearMap {
        let mut out = LinearMap::zero(&self.field, self.codomain, self.domain);
        for i in 0..self.codomain {
            for j in 0..self.domain {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn kernel(&self) -> Subspace {
        let rows: Vec<Vector> = (0..self.codomain).map(|i| self.row(i)).collect();
        let k = kernel(&self.field, &rows, self.domain);
        Subspace::span(&self.field, &k, self.domain).expect("kernel vectors have domain length")
    }

    pub fn image(&self) -> Subspace {
        let cols: Vec<Vector> = (0..self.domain).map(|j| self.column(j)).collect();
        Subspace::span(&self.field, &cols, self.codomain).expect("columns have codomain length")
    }

    pub fn image_of(&self, s: &Subspace) -> Result<Subspace> {
        let imgs = s
            .basis()
            .iter()
            .map(|v| self.apply(v))
            .collect::<Result<Vec<_>>>()?;
        Subspace::span(&self.field, &imgs, self.codomain)
    }

    pub fn rank(&self) -> usize {
        self.image().dim()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    /// Kronecker product `self ⊗ other` in the row-major tensor convention.
    pub fn tensor(&self, other: &LinearMap) -> LinearMap {
        let dom = self.domain * other.domain;
        let cod = self.codomain * other.codomain;
        let mut out = LinearMap::zero(&self.field, dom, cod);
        for i in 0..self.codomain {
            for j in 0..self.domain {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.codomain {
                    for l in 0..other.domain {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * other.codomain + k, j * other.domain + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Reinterprets the entries in an extension field.
    pub fn embed(&self, target: &Field) -> Result<LinearMap> {
        Ok(LinearMap {
            field: target.clone(),
            domain: self.domain,
            codomain: self.codomain,
            entries: self
                .entries
                .iter()
                .map(|x| x.embed(target))
                .collect::<Result<_>>()?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_nullity_small() {
        let q = Field::rationals();
        let cols: Vec<Vector> = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
            .iter()
            .map(|c| c.iter().map(|&x| q.from_int(x)).collect())
            .collect();
        let m = LinearMap::from_columns(&q, 3, &cols).unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.kernel().dim(), 1);
        let k = m.kernel().basis()[0].clone();
        assert!(crate::linalg::is_zero_vector(&m.apply(&k).unwrap()));
    }

    #[test]
    fn compose_with_identity() {
        let q = Field::rationals();
        let cols = vec![vec![q.from_int(1), q.from_int(5)], vec![q.from_int(-2), q.zero()]];
        let m = LinearMap::from_columns(&q, 2, &cols).unwrap();
        assert_eq!(m.compose(&LinearMap::identity(&q, 2)).unwrap(), m);
        assert_eq!(m.transpose().transpose(), m);
    }
}
