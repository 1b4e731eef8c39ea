//! Exact finite-dimensional linear algebra over [`Scalar`]s.
//!
//! Vectors are plain `Vec<Scalar>`. Tensor products use the row-major
//! convention: `e_i ⊗ f_j` of `V ⊗ W` is coordinate `i·dim W + j`.

mod map;
mod sparse;
mod subspace;

pub use map::LinearMap;
pub use sparse::{SparseSubspace, SparseVec};
pub use subspace::Subspace;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// Coordinate vector.
pub type Vector = Vec<Scalar>;

/// Coordinate of `e_i ⊗ f_j` in `V ⊗ W`.
pub fn tensor_index(i: usize, j: usize, dim_w: usize) -> Result<usize> {
    if j >= dim_w {
        return Err(Error::IndexOutOfRange {
            index: j,
            bound: dim_w,
        });
    }
    Ok(i * dim_w + j)
}

pub fn zero_vector(field: &Field, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn unit_vector(field: &Field, n: usize, i: usize) -> Vector {
    let mut v = zero_vector(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn add_assign_scaled(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a = &*a + &(c * x);
        }
    }
}

pub fn scale_vector(c: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

pub fn add_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Kronecker product of coordinate vectors.
pub fn tensor_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x * y);
        }
    }
    out
}

pub(crate) fn check_len(v: &[Scalar], n: usize) -> Result<()> {
    if v.len() == n {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected: n,
            found: v.len(),
        })
    }
}

/// Reduced row echelon form in place. Returns the pivot columns; zero rows
/// are dropped.
pub(crate) fn rref(rows: &mut Vec<Vector>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].inv().expect("nonzero pivot");
        if !inv.is_one() {
            rows[r] = rows[r].iter().map(|x| x * &inv).collect();
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let c = -&row[col];
                add_assign_scaled(row, &c, &pivot_row);
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{x : M x = 0}` for `M` given by rows of length `ncols`.
pub(crate) fn kernel(field: &Field, rows: &[Vector], ncols: usize) -> Vec<Vector> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut out = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = zero_vector(field, ncols);
        v[free] = field.one();
        for (row, &p) in m.iter().zip(&pivots) {
            v[p] = -&row[free];
        }
        out.push(v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tensor_index_convention() {
        assert_eq!(tensor_index(0, 0, 4).unwrap(), 0);
        assert_eq!(tensor_index(2, 3, 4).unwrap(), 11);
        assert_eq!(tensor_index(1, 0, 1).unwrap(), 1);
        assert!(matches!(
            tensor_index(0, 4, 4),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn kernel_of_rank_one() {
        let q = Field::rationals();
        let rows = vec![vec![q.from_int(1), q.from_int(2), q.from_int(3)]];
        let k = kernel(&q, &rows, 3);
        assert_eq!(k.len(), 2);
        for v in k {
            let dot = &(&v[0] + &(&q.from_int(2) * &v[1])) + &(&q.from_int(3) * &v[2]);
            assert!(dot.is_zero());
        }
    }
}
