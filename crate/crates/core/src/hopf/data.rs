use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{self, LinearMap, SparseVec, Subspace, Vector};
use crate::scalar::{Field, Scalar};

/// A basis pair `(i, j)` standing for `e_i ⊗ e_j`.
pub type Pair = (usize, usize);
/// A basis triple standing for `e_i ⊗ e_j ⊗ e_l`.
pub type Triple = (usize, usize, usize);

/// A finite-dimensional Hopf algebra given by structure constants on a
/// fixed basis `e_0, …, e_{d-1}`.
///
/// Tensors are stored sparsely: `mult[i * dim + j]` is `e_i e_j`,
/// `comult[k]` is `Δ e_k` and `antipode[j]` is `S e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebraData {
    pub field: Field,
    pub dim: usize,
    pub labels: Vec<String>,
    pub mult: Vec<SparseVec<usize>>,
    pub unit: Vector,
    pub comult: Vec<SparseVec<Pair>>,
    pub counit: Vector,
    pub antipode: Vec<SparseVec<usize>>,
    /// Grouplike elements supplied by a constructor whose coradical is known
    /// to be their span (a pointedness certificate).
    pub pointed_certificate: Option<Vec<Vector>>,
}

/// Outcome of one axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub name: &'static str,
    pub passed: bool,
    /// First violated instance, named by basis labels.
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(f, "{:<24} {}", c.name, if c.passed { "pass" } else { "FAIL" })?;
            if let Some(w) = &c.witness {
                write!(f, "  ({w})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

pub(crate) fn nonzeros(v: &[Scalar]) -> impl Iterator<Item = (usize, &Scalar)> {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero())
}

fn densify(field: &Field, n: usize, v: &SparseVec<usize>) -> Vector {
    let mut out = linalg::zero_vector(field, n);
    for (&k, c) in v.iter() {
        out[k] = c.clone();
    }
    out
}

fn sparsify(v: &[Scalar]) -> SparseVec<usize> {
    SparseVec::from_terms(nonzeros(v).map(|(i, c)| (i, c.clone())))
}

impl HopfAlgebraData {
    /// Data with every structure tensor zero; fill in before use.
    pub fn empty(field: &Field, dim: usize, labels: Vec<String>) -> HopfAlgebraData {
        HopfAlgebraData {
            field: field.clone(),
            dim,
            labels,
            mult: vec![SparseVec::new(); dim * dim],
            unit: linalg::zero_vector(field, dim),
            comult: vec![SparseVec::new(); dim],
            counit: linalg::zero_vector(field, dim),
            antipode: vec![SparseVec::new(); dim],
            pointed_certificate: None,
        }
    }

    pub fn label(&self, i: usize) -> &str {
        self.labels.get(i).map_or("?", String::as_str)
    }

    /// Checks that every tensor has the shape implied by `dim`.
    pub fn check_shapes(&self) -> Result<()> {
        let d = self.dim;
        let bad = |what: &str| Err(Error::ShapeMismatch(what.to_string()));
        if self.labels.len() != d {
            return bad("labels");
        }
        if self.mult.len() != d * d || self.comult.len() != d || self.antipode.len() != d {
            return bad("tensor lengths");
        }
        if self.unit.len() != d || self.counit.len() != d {
            return bad("unit/counit length");
        }
        let idx_ok = |v: &SparseVec<usize>| v.keys().all(|&k| k < d);
        if !self.mult.iter().all(idx_ok) || !self.antipode.iter().all(idx_ok) {
            return bad("basis index out of range");
        }
        if !self.comult.iter().all(|v| v.keys().all(|&(i, j)| i < d && j < d)) {
            return bad("comultiplication index out of range");
        }
        let scalars = self
            .unit
            .iter()
            .chain(&self.counit)
            .chain(self.mult.iter().flat_map(|v| v.iter().map(|(_, c)| c)))
            .chain(self.antipode.iter().flat_map(|v| v.iter().map(|(_, c)| c)))
            .chain(self.comult.iter().flat_map(|v| v.iter().map(|(_, c)| c)));
        for c in scalars {
            self.field.check(c)?;
        }
        Ok(())
    }

    pub fn check_element(&self, v: &[Scalar]) -> Result<()> {
        linalg::check_len(v, self.dim)
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        linalg::unit_vector(&self.field, self.dim, i)
    }

    pub fn one(&self) -> Vector {
        self.unit.clone()
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec<usize> {
        &self.mult[i * self.dim + j]
    }

    pub fn mul_sparse(&self, a: &SparseVec<usize>, b: &SparseVec<usize>) -> SparseVec<usize> {
        let mut out = SparseVec::new();
        for (&i, x) in a.iter() {
            for (&j, y) in b.iter() {
                out.add_scaled(&(x * y), self.mul_basis(i, j));
            }
        }
        out
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Result<Vector> {
        self.check_element(a)?;
        self.check_element(b)?;
        let p = self.mul_sparse(&sparsify(a), &sparsify(b));
        Ok(densify(&self.field, self.dim, &p))
    }

    pub fn comult_sparse(&self, a: &SparseVec<usize>) -> SparseVec<Pair> {
        let mut out = SparseVec::new();
        for (&k, c) in a.iter() {
            out.add_scaled(c, &self.comult[k]);
        }
        out
    }

    /// `Δa` as a coordinate vector of length `dim²`.
    pub fn comult(&self, a: &[Scalar]) -> Result<Vector> {
        self.check_element(a)?;
        let d = self.dim;
        let mut out = linalg::zero_vector(&self.field, d * d);
        for (&(i, j), c) in self.comult_sparse(&sparsify(a)).iter() {
            out[i * d + j] = c.clone();
        }
        Ok(out)
    }

    /// `(Δ ⊗ id)Δ`, sparse.
    pub fn comult3_sparse(&self, a: &SparseVec<usize>) -> SparseVec<Triple> {
        let mut out = SparseVec::new();
        for (&(i, j), c) in self.comult_sparse(a).iter() {
            for (&(p, r), x) in self.comult[i].iter() {
                out.add_term((p, r, j), c * x);
            }
        }
        out
    }

    pub fn antipode_sparse(&self, a: &SparseVec<usize>) -> SparseVec<usize> {
        let mut out = SparseVec::new();
        for (&k, c) in a.iter() {
            out.add_scaled(c, &self.antipode[k]);
        }
        out
    }

    pub fn antipode(&self, a: &[Scalar]) -> Result<Vector> {
        self.check_element(a)?;
        Ok(densify(
            &self.field,
            self.dim,
            &self.antipode_sparse(&sparsify(a)),
        ))
    }

    pub fn antipode_map(&self) -> LinearMap {
        let cols: Vec<Vector> = self
            .antipode
            .iter()
            .map(|s| densify(&self.field, self.dim, s))
            .collect();
        LinearMap::from_columns(&self.field, self.dim, &cols).expect("columns have length dim")
    }

    pub fn counit(&self, a: &[Scalar]) -> Result<Scalar> {
        self.check_element(a)?;
        Ok(self.counit_sparse(&sparsify(a)))
    }

    pub fn counit_sparse(&self, a: &SparseVec<usize>) -> Scalar {
        let mut acc = self.field.zero();
        for (&k, c) in a.iter() {
            acc = &acc + &(c * &self.counit[k]);
        }
        acc
    }

    /// Left adjoint action on basis elements: `e_k₍₁₎ e_v S(e_k₍₂₎)`.
    pub fn ad_basis(&self, k: usize, v: usize) -> SparseVec<usize> {
        let mut out = SparseVec::new();
        let ev = SparseVec::unit(v, &self.field);
        for (&(a, b), c) in self.comult[k].iter() {
            let left = self.mul_sparse(&SparseVec::unit(a, &self.field), &ev);
            out.add_scaled(c, &self.mul_sparse(&left, &self.antipode[b]));
        }
        out
    }

    pub fn adjoint_action_sparse(&self, k: &SparseVec<usize>, v: &SparseVec<usize>) -> SparseVec<usize> {
        let mut out = SparseVec::new();
        for (&(a, b), c) in self.comult_sparse(k).iter() {
            let left = self.mul_sparse(&SparseVec::unit(a, &self.field), v);
            out.add_scaled(c, &self.mul_sparse(&left, &self.antipode[b]));
        }
        out
    }

    /// `k.v = k₍₁₎ v S(k₍₂₎)`.
    pub fn adjoint_action(&self, k: &[Scalar], v: &[Scalar]) -> Result<Vector> {
        self.check_element(k)?;
        self.check_element(v)?;
        let r = self.adjoint_action_sparse(&sparsify(k), &sparsify(v));
        Ok(densify(&self.field, self.dim, &r))
    }

    /// Matrix of `v ↦ e_k . v`.
    pub fn ad_matrix(&self, k: usize) -> LinearMap {
        let cols: Vec<Vector> = (0..self.dim)
            .map(|v| densify(&self.field, self.dim, &self.ad_basis(k, v)))
            .collect();
        LinearMap::from_columns(&self.field, self.dim, &cols).expect("columns have length dim")
    }

    /// Matrix of left multiplication by `e_k`.
    pub fn left_mult_matrix(&self, k: usize) -> LinearMap {
        let cols: Vec<Vector> = (0..self.dim)
            .map(|v| densify(&self.field, self.dim, self.mul_basis(k, v)))
            .collect();
        LinearMap::from_columns(&self.field, self.dim, &cols).expect("columns have length dim")
    }

    /// `Δ` as a linear map `k^d → k^{d²}`.
    pub fn comult_map(&self) -> LinearMap {
        let d = self.dim;
        let cols: Vec<Vector> = (0..d)
            .map(|k| {
                let mut v = linalg::zero_vector(&self.field, d * d);
                for (&(i, j), c) in self.comult[k].iter() {
                    v[i * d + j] = c.clone();
                }
                v
            })
            .collect();
        LinearMap::from_columns(&self.field, d * d, &cols).expect("columns have length dim²")
    }

    /// Product in `H ⊗ H`.
    pub fn tensor_mul(&self, a: &SparseVec<Pair>, b: &SparseVec<Pair>) -> SparseVec<Pair> {
        let mut out = SparseVec::new();
        for (&(i, j), x) in a.iter() {
            for (&(k, l), y) in b.iter() {
                let c = x * y;
                for (&p, u) in self.mul_basis(i, k).iter() {
                    let cu = &c * u;
                    for (&r, w) in self.mul_basis(j, l).iter() {
                        out.add_term((p, r), &cu * w);
                    }
                }
            }
        }
        out
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.mul_basis(i, j) == self.mul_basis(j, i)))
    }

    pub fn is_cocommutative(&self) -> bool {
        self.comult.iter().all(|d| {
            let flipped = SparseVec::from_terms(d.iter().map(|(&(i, j), c)| ((j, i), c.clone())));
            &flipped == d
        })
    }

    /// Structure constants reinterpreted over an extension field.
    pub fn extend_scalars(&self, target: &Field) -> Result<HopfAlgebraData> {
        let sv = |v: &SparseVec<usize>| -> Result<SparseVec<usize>> {
            Ok(SparseVec::from_terms(
                v.iter()
                    .map(|(&k, c)| Ok((k, c.embed(target)?)))
                    .collect::<Result<Vec<_>>>()?,
            ))
        };
        let vec = |v: &Vector| -> Result<Vector> { v.iter().map(|c| c.embed(target)).collect() };
        Ok(HopfAlgebraData {
            field: target.clone(),
            dim: self.dim,
            labels: self.labels.clone(),
            mult: self.mult.iter().map(sv).collect::<Result<_>>()?,
            unit: vec(&self.unit)?,
            comult: self
                .comult
                .iter()
                .map(|v| {
                    Ok(SparseVec::from_terms(
                        v.iter()
                            .map(|(&k, c)| Ok((k, c.embed(target)?)))
                            .collect::<Result<Vec<_>>>()?,
                    ))
                })
                .collect::<Result<_>>()?,
            counit: vec(&self.counit)?,
            antipode: self.antipode.iter().map(sv).collect::<Result<_>>()?,
            pointed_certificate: self
                .pointed_certificate
                .as_ref()
                .map(|gs| gs.iter().map(vec).collect::<Result<_>>())
                .transpose()?,
        })
    }

    /// Span of a list of elements as a subspace of `H`.
    pub fn span(&self, vs: &[Vector]) -> Result<Subspace> {
        Subspace::span(&self.field, vs, self.dim)
    }

    fn pair_label(&self, i: usize, j: usize) -> String {
        format!("{}, {}", self.label(i), self.label(j))
    }

    /// Checks every Hopf algebra axiom on basis elements.
    pub fn verify_axioms(&self) -> Result<AxiomReport> {
        self.check_shapes()?;
        let d = self.dim;
        let f = &self.field;
        let e = |i: usize| SparseVec::unit(i, f);
        let one = sparsify(&self.unit);
        let mut checks = Vec::new();
        let mut push = |name: &'static str, witness: Option<String>| {
            checks.push(AxiomCheck {
                name,
                passed: witness.is_none(),
                witness,
            })
        };

        let mut w = None;
        'assoc: for i in 0..d {
            for j in 0..d {
                let ij = self.mul_basis(i, j);
                for k in 0..d {
                    let lhs = self.mul_sparse(ij, &e(k));
                    let rhs = self.mul_sparse(&e(i), self.mul_basis(j, k));
                    if lhs != rhs {
                        w = Some(format!(
                            "({})·{} ≠ {}·({})",
                            self.pair_label(i, j),
                            self.label(k),
                            self.label(i),
                            self.pair_label(j, k)
                        ));
                        break 'assoc;
                    }
                }
            }
        }
        push("associativity", w);

        let w = (0..d)
            .find(|&i| self.mul_sparse(&one, &e(i)) != e(i) || self.mul_sparse(&e(i), &one) != e(i))
            .map(|i| format!("1·{0} or {0}·1", self.label(i)));
        push("unit", w);

        let w = (0..d)
            .find(|&k| {
                let mut left = SparseVec::new();
                let mut right = SparseVec::new();
                for (&(i, j), c) in self.comult[k].iter() {
                    for (&(p, r), x) in self.comult[i].iter() {
                        left.add_term((p, r, j), c * x);
                    }
                    for (&(p, r), x) in self.comult[j].iter() {
                        right.add_term((i, p, r), c * x);
                    }
                }
                left != right
            })
            .map(|k| format!("Δ on {}", self.label(k)));
        push("coassociativity", w);

        let w = (0..d)
            .find(|&k| {
                let mut left = SparseVec::new();
                let mut right = SparseVec::new();
                for (&(i, j), c) in self.comult[k].iter() {
                    left.add_term(j, c * &self.counit[i]);
                    right.add_term(i, c * &self.counit[j]);
                }
                left != e(k) || right != e(k)
            })
            .map(|k| format!("ε-counit on {}", self.label(k)));
        push("counit", w);

        let mut w = None;
        let one_one = {
            let mut t = SparseVec::new();
            for (&i, x) in one.iter() {
                for (&j, y) in one.iter() {
                    t.add_term((i, j), x * y);
                }
            }
            t
        };
        if self.comult_sparse(&one) != one_one {
            w = Some("Δ(1) ≠ 1⊗1".to_string());
        }
        'mult: for i in 0..d {
            if w.is_some() {
                break;
            }
            for j in 0..d {
                let lhs = self.comult_sparse(self.mul_basis(i, j));
                let rhs = self.tensor_mul(&self.comult[i], &self.comult[j]);
                if lhs != rhs {
                    w = Some(format!("Δ({}·{})", self.label(i), self.label(j)));
                    break 'mult;
                }
            }
        }
        push("comult_multiplicative", w);

        let mut w = None;
        if !self.counit_sparse(&one).is_one() {
            w = Some("ε(1) ≠ 1".to_string());
        }
        'eps: for i in 0..d {
            if w.is_some() {
                break;
            }
            for j in 0..d {
                let lhs = self.counit_sparse(self.mul_basis(i, j));
                if lhs != &self.counit[i] * &self.counit[j] {
                    w = Some(format!("ε({}·{})", self.label(i), self.label(j)));
                    break 'eps;
                }
            }
        }
        push("counit_multiplicative", w);

        let w = (0..d)
            .find(|&k| {
                let target = one.scaled(&self.counit[k]);
                let mut left = SparseVec::new();
                let mut right = SparseVec::new();
                for (&(i, j), c) in self.comult[k].iter() {
                    left.add_scaled(c, &self.mul_sparse(&self.antipode[i], &e(j)));
                    right.add_scaled(c, &self.mul_sparse(&e(i), &self.antipode[j]));
                }
                left != target || right != target
            })
            .map(|k| format!("S-identity on {}", self.label(k)));
        push("antipode", w);

        Ok(AxiomReport { checks })
    }
}
