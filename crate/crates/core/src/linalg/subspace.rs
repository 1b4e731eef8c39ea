use std::fmt;

use super::{check_len, kernel, rref, tensor_vectors, zero_vector, Vector};
use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// A subspace of `k^n` stored as its reduced row echelon basis. Two
/// subspaces are equal as sets iff they compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(field: &Field, vectors: &[Vector], ambient: usize) -> Result<Subspace> {
        for v in vectors {
            check_len(v, ambient)?;
            for x in v {
                field.check(x)?;
            }
        }
        let mut rows = vectors.to_vec();
        let pivots = rref(&mut rows, ambient);
        Ok(Subspace {
            field: field.clone(),
            ambient,
            rows,
            pivots,
        })
    }

    pub fn zero(field: &Field, ambient: usize) -> Subspace {
        Subspace {
            field: field.clone(),
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &Field, ambient: usize) -> Subspace {
        let rows = (0..ambient)
            .map(|i| super::unit_vector(field, ambient, i))
            .collect();
        Subspace {
            field: field.clone(),
            ambient,
            rows,
            pivots: (0..ambient).collect(),
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    /// Echelon basis rows.
    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn same_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.same_ambient(other)?;
        let mut all = self.rows.clone();
        all.extend(other.rows.iter().cloned());
        Subspace::span(&self.field, &all, self.ambient)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.same_ambient(other)?;
        self.annihilator().sum(&other.annihilator())?.annihilator_checked()
    }

    fn annihilator_checked(&self) -> Result<Subspace> {
        Ok(self.annihilator())
    }

    /// `{f : f·v = 0 for all v}` under the standard dot product.
    pub fn annihilator(&self) -> Subspace {
        let k = kernel(&self.field, &self.rows, self.ambient);
        Subspace::span(&self.field, &k, self.ambient).expect("kernel vectors have ambient length")
    }

    /// Remainder of `v` after reduction by the echelon basis; zero iff `v`
    /// lies in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Result<Vector> {
        check_len(v, self.ambient)?;
        let mut r = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !r[p].is_zero() {
                let c = -&r[p];
                super::add_assign_scaled(&mut r, &c, row);
            }
        }
        Ok(r)
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        Ok(super::is_zero_vector(&self.reduce(v)?))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        self.same_ambient(other)?;
        for v in &other.rows {
            if !self.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vector>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    /// Span of `a ⊗ b` for `a ∈ self`, `b ∈ other`, inside the tensor product
    /// of the ambient spaces.
    pub fn tensor(&self, other: &Subspace) -> Subspace {
        let ambient = self.ambient * other.ambient;
        let rows: Vec<Vector> = self
            .rows
            .iter()
            .flat_map(|a| other.rows.iter().map(move |b| tensor_vectors(a, b)))
            .collect();
        Subspace::span(&self.field, &rows, ambient).expect("tensor rows have matching length")
    }

    /// Linear combination of the basis rows.
    pub fn combine(&self, coords: &[Scalar]) -> Vector {
        let mut v = zero_vector(&self.field, self.ambient);
        for (c, row) in coords.iter().zip(&self.rows) {
            super::add_assign_scaled(&mut v, c, row);
        }
        v
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{{")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "(")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        write!(f, "}} ⊆ k^{}", self.ambient)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(q: &Field, xs: &[i64]) -> Vector {
        xs.iter().map(|&x| q.from_int(x)).collect()
    }

    #[test]
    fn span_examples() {
        let q = Field::rationals();
        let s = Subspace::span(&q, &[v(&q, &[1, 0]), v(&q, &[1, 1])], 2).unwrap();
        assert!(s.is_full());
        let s = Subspace::span(&q, &[v(&q, &[2, 4])], 2).unwrap();
        assert_eq!(s.basis(), &[v(&q, &[1, 2])]);
        let s = Subspace::span(&q, &[], 3).unwrap();
        assert_eq!(s.dim(), 0);
        assert!(matches!(
            Subspace::span(&q, &[v(&q, &[1])], 2),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn sum_intersect_contains() {
        let q = Field::rationals();
        let x = Subspace::span(&q, &[v(&q, &[1, 0, 0])], 3).unwrap();
        let y = Subspace::span(&q, &[v(&q, &[0, 1, 0])], 3).unwrap();
        let xy = x.sum(&y).unwrap();
        assert_eq!(
            xy,
            Subspace::span(&q, &[v(&q, &[1, 1, 0]), v(&q, &[1, -1, 0])], 3).unwrap()
        );
        let yz = Subspace::span(&q, &[v(&q, &[0, 1, 0]), v(&q, &[0, 0, 1])], 3).unwrap();
        assert_eq!(xy.intersect(&yz).unwrap(), y);
        assert!(!xy.contains(&v(&q, &[0, 0, 1])).unwrap());
    }

    #[test]
    fn coordinates_round_trip() {
        let q = Field::rationals();
        let s = Subspace::span(&q, &[v(&q, &[1, 2, 3]), v(&q, &[0, 1, 1])], 3).unwrap();
        let w = v(&q, &[2, 7, 9]);
        let c = s.coordinates(&w).unwrap().unwrap();
        assert_eq!(s.combine(&c), w);
        assert!(s.coordinates(&v(&q, &[0, 0, 1])).unwrap().is_none());
    }
}
