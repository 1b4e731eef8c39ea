use std::collections::HashMap;

use super::data::{HopfAlgebraData, Pair};
use crate::error::{Error, Result};
use crate::linalg::{self, SparseVec};
use crate::pbw::{Letter, PresentedAlgebra};
use crate::scalar::{Field, Scalar};

/// A finite group as a multiplication table: `table[i * n + j]` is the
/// index of the product of elements `i` and `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    pub labels: Vec<String>,
    pub table: Vec<usize>,
}

impl GroupTable {
    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i * self.order() + j]
    }

    /// Checks closure, associativity, identity and inverses. Returns the
    /// identity index and the inverse of every element.
    pub fn validate(&self) -> Result<(usize, Vec<usize>)> {
        let n = self.order();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if self.table.len() != n * n || self.table.iter().any(|&x| x >= n) {
            return Err(Error::NotAGroup("table is not an n×n table on n labels".into()));
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::NotAGroup(format!(
                            "associativity fails at ({}, {}, {})",
                            self.labels[a], self.labels[b], self.labels[c]
                        )));
                    }
                }
            }
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|a| self.mul(e, a) == a && self.mul(a, e) == a))
            .ok_or_else(|| Error::NotAGroup("no identity".into()))?;
        let inv = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| self.mul(a, b) == e && self.mul(b, a) == e)
                    .ok_or_else(|| Error::NotAGroup(format!("{} has no inverse", self.labels[a])))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((e, inv))
    }
}

/// `kG` with `Δg = g⊗g`, `S g = g⁻¹`, `ε g = 1`.
pub fn group_algebra(table: &GroupTable, field: &Field) -> Result<HopfAlgebraData> {
    let (e, inv) = table.validate()?;
    let n = table.order();
    let mut h = HopfAlgebraData::empty(field, n, table.labels.clone());
    for i in 0..n {
        for j in 0..n {
            h.mult[i * n + j] = SparseVec::unit(table.mul(i, j), field);
        }
        h.comult[i] = SparseVec::unit((i, i), field);
        h.antipode[i] = SparseVec::unit(inv[i], field);
        h.counit[i] = field.one();
    }
    h.unit = linalg::unit_vector(field, n, e);
    h.pointed_certificate = Some((0..n).map(|i| h.basis_vector(i)).collect());
    Ok(h)
}

/// Structure maps of one algebra generator.
struct GenData {
    comult: SparseVec<Pair>,
    antipode: SparseVec<usize>,
    counit: Scalar,
}

/// Fills in `Δ`, `S`, `ε` from generator values, given each basis element
/// as a word in the generators. Requires `mult` and `unit` to be set.
fn extend_from_generators(h: &mut HopfAlgebraData, words: &[Vec<usize>], gens: &[GenData]) {
    let f = h.field.clone();
    let one = SparseVec::from_terms(super::data::nonzeros(&h.unit).map(|(i, c)| (i, c.clone())));
    let one_one = {
        let mut t = SparseVec::new();
        for (&i, x) in one.iter() {
            for (&j, y) in one.iter() {
                t.add_term((i, j), x * y);
            }
        }
        t
    };
    for (k, word) in words.iter().enumerate() {
        let mut d = one_one.clone();
        let mut s = one.clone();
        let mut eps = f.one();
        for &g in word {
            d = h.tensor_mul(&d, &gens[g].comult);
            s = h.mul_sparse(&gens[g].antipode, &s);
            eps = &eps * &gens[g].counit;
        }
        h.comult[k] = d;
        h.antipode[k] = s;
        h.counit[k] = eps;
    }
}

fn power_label(sym: &str, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => sym.to_string(),
        _ => format!("{sym}^{e}"),
    }
}

fn monomial_label(parts: &[(&str, usize)]) -> String {
    let s: String = parts.iter().map(|&(sym, e)| power_label(sym, e)).collect();
    if s.is_empty() {
        "1".to_string()
    } else {
        s
    }
}

/// The Taft algebra with `x g = q g x`, `gⁿ = 1`, `xⁿ = 0`, `Δg = g⊗g`,
/// `Δx = x⊗1 + g⊗x`. `index(i, j)` places `g^i x^j` in the basis.
fn taft_with(n: usize, q: &Scalar, index: impl Fn(usize, usize) -> usize) -> HopfAlgebraData {
    let f = q.field().clone();
    let d = n * n;
    let mut labels = vec![String::new(); d];
    let mut words = vec![Vec::new(); d];
    for i in 0..n {
        for j in 0..n {
            labels[index(i, j)] = monomial_label(&[("g", i), ("x", j)]);
            words[index(i, j)] = [vec![0; i], vec![1; j]].concat();
        }
    }
    let mut h = HopfAlgebraData::empty(&f, d, labels);
    let qpow: Vec<Scalar> = (0..n * n)
        .map(|e| q.pow(e as i64).expect("q is nonzero"))
        .collect();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    if j + l >= n {
                        continue;
                    }
                    // x^j g^k = q^{jk} g^k x^j
                    let c = qpow[(j * k) % n].clone();
                    h.mult[index(i, j) * d + index(k, l)] =
                        SparseVec::monomial(index((i + k) % n, j + l), c);
                }
            }
        }
    }
    h.unit = linalg::unit_vector(&f, d, index(0, 0));
    let g = index(1 % n, 0);
    let x = index(0, 1);
    let g_inv = index((n - 1) % n, 0);
    let gens = [
        GenData {
            comult: SparseVec::unit((g, g), &f),
            antipode: SparseVec::unit(g_inv, &f),
            counit: f.one(),
        },
        GenData {
            comult: SparseVec::from_terms([((x, index(0, 0)), f.one()), ((g, x), f.one())]),
            antipode: SparseVec::monomial(index((n - 1) % n, 1), f.from_int(-1)),
            counit: f.zero(),
        },
    ];
    extend_from_generators(&mut h, &words, &gens);
    h.pointed_certificate = Some((0..n).map(|i| h.basis_vector(index(i, 0))).collect());
    h
}

/// Sweedler's 4-dimensional algebra: `g² = 1`, `x² = 0`, `xg = −gx`,
/// `Δx = x⊗1 + g⊗x`, with basis order `1, g, x, gx`.
pub fn sweedler(field: &Field) -> Result<HopfAlgebraData> {
    if field.characteristic() == 2 {
        return Err(Error::BadCharacteristic(
            "Sweedler's algebra needs char k ≠ 2".into(),
        ));
    }
    Ok(taft_with(2, &field.from_int(-1), |i, j| 2 * j + i))
}

/// The Taft algebra of dimension `n²` for the field's chosen primitive
/// `n`-th root `q`, basis `g^i x^j` at index `i·n + j`.
pub fn taft(n: usize, field: &Field) -> Result<HopfAlgebraData> {
    if n < 2 {
        return Err(Error::PreconditionViolated("taft needs n ≥ 2".into()));
    }
    let q = field.primitive_root(n as u64)?;
    Ok(taft_with(n, &q, |i, j| i * n + j))
}

/// The small quantum group `u_q(sl2)` of dimension `n³` (`n` odd):
/// `Eⁿ = Fⁿ = 0`, `Kⁿ = 1`, basis `F^a K^b E^c` at index `(a·n + b)·n + c`.
pub fn small_quantum_sl2(n: usize, field: &Field) -> Result<HopfAlgebraData> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::PreconditionViolated(
            "small_quantum_sl2 needs odd n ≥ 3".into(),
        ));
    }
    let q = field.primitive_root(n as u64)?;
    let alg = PresentedAlgebra::small_quantum(q, n as u32)?;
    let d = n * n * n;
    let idx = |a: u32, b: i64, c: u32| -> usize {
        ((a as usize * n + b.rem_euclid(n as i64) as usize) * n) + c as usize
    };
    let mut labels = vec![String::new(); d];
    let mut words = vec![Vec::new(); d];
    let mut monos = Vec::with_capacity(d);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let i = idx(a as u32, b as i64, c as u32);
                labels[i] = monomial_label(&[("F", a), ("K", b), ("E", c)]);
                words[i] = [vec![0; a], vec![1; b], vec![2; c]].concat();
                monos.push((i, alg.monomial(a as u32, b as i64, c as u32)));
            }
        }
    }
    monos.sort_by_key(|(i, _)| *i);
    let f = field.clone();
    let to_sparse = |e: &crate::pbw::PBWElement| -> SparseVec<usize> {
        SparseVec::from_terms(e.iter().map(|(m, c)| (idx(m.a, m.b, m.c), c.clone())))
    };
    let mut h = HopfAlgebraData::empty(&f, d, labels);
    for (i, x) in &monos {
        for (j, y) in &monos {
            h.mult[i * d + j] = to_sparse(&alg.mul(x, y));
        }
    }
    h.unit = linalg::unit_vector(&f, d, idx(0, 0, 0));
    let gens = [Letter::F, Letter::K, Letter::E].map(|l| {
        let g = alg.generator(l);
        let comult = SparseVec::from_terms(alg.coproduct(&g).iter().map(|((m1, m2), c)| {
            ((idx(m1.a, m1.b, m1.c), idx(m2.a, m2.b, m2.c)), c.clone())
        }));
        GenData {
            comult,
            antipode: to_sparse(&alg.antipode(&g)),
            counit: alg.counit(&g),
        }
    });
    extend_from_generators(&mut h, &words, &gens);
    h.pointed_certificate = Some((0..n).map(|b| h.basis_vector(idx(0, b as i64, 0))).collect());
    Ok(h)
}

/// The dual Hopf algebra on the dual basis `e^0, …, e^{d-1}`: every
/// structure tensor is transposed.
pub fn dual_hopf(h: &HopfAlgebraData) -> Result<HopfAlgebraData> {
    h.check_shapes()?;
    let d = h.dim;
    let labels = h.labels.iter().map(|l| format!("{l}*")).collect();
    let mut out = HopfAlgebraData::empty(&h.field, d, labels);
    for (k, dk) in h.comult.iter().enumerate() {
        for (&(i, j), c) in dk.iter() {
            out.mult[i * d + j].add_term(k, c.clone());
        }
    }
    for (ij, m) in h.mult.iter().enumerate() {
        for (&k, c) in m.iter() {
            out.comult[k].add_term((ij / d, ij % d), c.clone());
        }
    }
    out.unit = h.counit.clone();
    out.counit = h.unit.clone();
    for (i, s) in h.antipode.iter().enumerate() {
        for (&j, c) in s.iter() {
            out.antipode[j].add_term(i, c.clone());
        }
    }
    Ok(out)
}

/// Relabels the basis: basis element `i` of `h` becomes element `perm[i]`.
pub fn permute_basis(h: &HopfAlgebraData, perm: &[usize]) -> Result<HopfAlgebraData> {
    let d = h.dim;
    let mut seen = vec![false; d];
    if perm.len() != d || perm.iter().any(|&p| p >= d || std::mem::replace(&mut seen[p], true)) {
        return Err(Error::ShapeMismatch("not a permutation of the basis".into()));
    }
    let mut labels = vec![String::new(); d];
    for i in 0..d {
        labels[perm[i]] = h.labels[i].clone();
    }
    let mut out = HopfAlgebraData::empty(&h.field, d, labels);
    let remap = |v: &SparseVec<usize>| SparseVec::from_terms(v.iter().map(|(&k, c)| (perm[k], c.clone())));
    let remap_vec = |v: &[Scalar]| {
        let mut w = linalg::zero_vector(&h.field, d);
        for (i, c) in v.iter().enumerate() {
            w[perm[i]] = c.clone();
        }
        w
    };
    for i in 0..d {
        for j in 0..d {
            out.mult[perm[i] * d + perm[j]] = remap(h.mul_basis(i, j));
        }
        out.comult[perm[i]] =
            SparseVec::from_terms(h.comult[i].iter().map(|(&(a, b), c)| ((perm[a], perm[b]), c.clone())));
        out.antipode[perm[i]] = remap(&h.antipode[i]);
    }
    out.unit = remap_vec(&h.unit);
    out.counit = remap_vec(&h.counit);
    out.pointed_certificate = h
        .pointed_certificate
        .as_ref()
        .map(|gs| gs.iter().map(|g| remap_vec(g)).collect());
    Ok(out)
}

/// Looks up basis indices by label.
pub fn label_index(h: &HopfAlgebraData) -> HashMap<&str, usize> {
    h.labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::small;

    fn c2() -> GroupTable {
        GroupTable {
            labels: vec!["e".into(), "t".into()],
            table: vec![0, 1, 1, 0],
        }
    }

    #[test]
    fn group_algebra_c2() {
        let h = group_algebra(&c2(), &Field::rationals()).unwrap();
        assert_eq!(h.dim, 2);
        assert!(h.verify_axioms().unwrap().all_pass());
        assert_eq!(h.pointed_certificate.as_ref().unwrap().len(), 2);
    }

    #[test]
    fn group_algebra_rejects_non_group() {
        let t = GroupTable {
            labels: vec!["a".into(), "b".into()],
            table: vec![0, 0, 0, 0],
        };
        assert!(matches!(group_algebra(&t, &Field::rationals()), Err(Error::NotAGroup(_))));
    }

    #[test]
    fn s3_is_cocommutative() {
        let s3 = small::by_name("S3").unwrap();
        let h = group_algebra(&s3, &Field::rationals()).unwrap();
        assert_eq!(h.dim, 6);
        assert!(h.is_cocommutative());
        assert!(!h.is_commutative());
        assert!(h.verify_axioms().unwrap().all_pass());
    }

    #[test]
    fn d4_over_f3() {
        let d4 = small::by_name("D4").unwrap();
        let h = group_algebra(&d4, &Field::prime(3).unwrap()).unwrap();
        assert_eq!(h.dim, 8);
        assert!(h.verify_axioms().unwrap().all_pass());
    }

    #[test]
    fn sweedler_presentation() {
        let q = Field::rationals();
        let h = sweedler(&q).unwrap();
        assert_eq!(h.labels, ["1", "g", "x", "gx"]);
        assert!(h.verify_axioms().unwrap().all_pass());
        let e = |i| h.basis_vector(i);
        let neg = |v: Vec<Scalar>| v.iter().map(|c| -c).collect::<Vec<_>>();
        assert_eq!(h.mul(&e(1), &e(1)).unwrap(), e(0));
        assert!(linalg::is_zero_vector(&h.mul(&e(2), &e(2)).unwrap()));
        assert_eq!(h.mul(&e(2), &e(1)).unwrap(), neg(e(3)));
        assert_eq!(h.antipode(&e(2)).unwrap(), neg(e(3)));
        assert!(matches!(sweedler(&Field::prime(2).unwrap()), Err(Error::BadCharacteristic(_))));
    }

    #[test]
    fn sweedler_perturbed_fails_associativity() {
        let q = Field::rationals();
        let mut h = sweedler(&q).unwrap();
        h.mult[2 * 4 + 2] = SparseVec::unit(0, &q);
        let report = h.verify_axioms().unwrap();
        let failed: Vec<_> = report.failures().map(|c| c.name).collect();
        assert!(failed.contains(&"associativity"), "{report}");
    }

    #[test]
    fn taft_two_is_sweedler() {
        let q = Field::rationals();
        let t = taft(2, &q).unwrap();
        // taft order 1, x, g, gx; sweedler order 1, g, x, gx
        let relabeled = permute_basis(&t, &[0, 2, 1, 3]).unwrap();
        assert_eq!(relabeled, sweedler(&q).unwrap());
    }

    #[test]
    fn taft_dimensions() {
        for n in 2..=5 {
            let f = Field::cyclotomic(n as u32).unwrap();
            let h = taft(n, &f).unwrap();
            assert_eq!(h.dim, n * n);
            assert!(h.verify_axioms().unwrap().all_pass(), "taft({n})");
        }
        assert!(matches!(taft(3, &Field::rationals()), Err(Error::NoSuchRoot { .. })));
    }

    #[test]
    fn small_quantum_group_axioms() {
        let f = Field::cyclotomic(3).unwrap();
        let h = small_quantum_sl2(3, &f).unwrap();
        assert_eq!(h.dim, 27);
        assert!(h.verify_axioms().unwrap().all_pass());
        assert!(!h.is_cocommutative());
    }

    #[test]
    fn dual_of_s3() {
        let s3 = small::by_name("S3").unwrap();
        let h = group_algebra(&s3, &Field::rationals()).unwrap();
        let d = dual_hopf(&h).unwrap();
        assert_eq!(d.dim, 6);
        assert!(d.is_commutative());
        assert!(!d.is_cocommutative());
        assert!(d.verify_axioms().unwrap().all_pass());
        assert_eq!(dual_hopf(&d).unwrap().mult, h.mult);
    }
}
