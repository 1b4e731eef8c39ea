use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::data::{nonzeros, HopfAlgebraData};
use crate::error::{Error, Result};
use crate::linalg::{self, SparseVec, Subspace, Vector};
use crate::scalar::{Field, FieldDescriptor, Scalar};

fn dense(h: &HopfAlgebraData, v: &SparseVec<usize>) -> Vector {
    let mut out = linalg::zero_vector(&h.field, h.dim);
    for (&k, c) in v.iter() {
        out[k] = c.clone();
    }
    out
}

fn sparse(v: &[Scalar]) -> SparseVec<usize> {
    SparseVec::from_terms(nonzeros(v).map(|(i, c)| (i, c.clone())))
}

/// True iff `1 ∈ B`, `B·B ⊆ B` and `Δ(B) ⊆ H ⊗ B`.
pub fn is_left_coideal_subalgebra(h: &HopfAlgebraData, b: &Subspace) -> Result<bool> {
    if b.ambient_dim() != h.dim {
        return Err(Error::DimensionMismatch {
            expected: h.dim,
            found: b.ambient_dim(),
        });
    }
    if !b.contains(&h.unit)? {
        return Ok(false);
    }
    let basis: Vec<SparseVec<usize>> = b.basis().iter().map(|v| sparse(v)).collect();
    for x in &basis {
        for y in &basis {
            if !b.contains(&dense(h, &h.mul_sparse(x, y)))? {
                return Ok(false);
            }
        }
    }
    for x in &basis {
        // Δx ∈ H ⊗ B iff every slice (e^i ⊗ Id)(Δx) lies in B
        for slice in crate::finmod::sparse_u_double_prime(&h.comult_sparse(x)) {
            if !b.contains(&dense(h, &slice))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Structure constants of the dual algebra `H*`: `e^i e^j = Σ_k Δ_k[i][j] e^k`.
fn dual_mult(h: &HopfAlgebraData) -> Vec<SparseVec<usize>> {
    let d = h.dim;
    let mut m = vec![SparseVec::new(); d * d];
    for (k, dk) in h.comult.iter().enumerate() {
        for (&(i, j), c) in dk.iter() {
            m[i * d + j].add_term(k, c.clone());
        }
    }
    m
}

fn mul_with(table: &[SparseVec<usize>], d: usize, a: &SparseVec<usize>, b: &SparseVec<usize>) -> SparseVec<usize> {
    let mut out = SparseVec::new();
    for (&i, x) in a.iter() {
        for (&j, y) in b.iter() {
            out.add_scaled(&(x * y), &table[i * d + j]);
        }
    }
    out
}

/// Roots in the field of a polynomial given by coefficients, lowest degree
/// first. Supported over `Q` (rational root theorem) and small prime fields
/// (exhaustive search).
fn roots(f: &Field, poly: &[Scalar]) -> Result<Vec<Scalar>> {
    let eval = |x: &Scalar| poly.iter().rev().fold(f.zero(), |acc, c| &(&acc * x) + c);
    match f.descriptor() {
        FieldDescriptor::PrimeField(p) => {
            if *p > 1_000_000 {
                return Err(Error::Unsupported(format!("root search in F_{p}")));
            }
            Ok((0..*p as i64)
                .map(|r| f.from_int(r))
                .filter(|x| eval(x).is_zero())
                .collect())
        }
        FieldDescriptor::Rationals => {
            let rats: Vec<_> = poly.iter().map(|c| c.as_rational().expect("rational")).collect();
            let lcm = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
            let ints: Vec<BigInt> = rats.iter().map(|r| (r * &lcm).to_integer()).collect();
            let mut out = Vec::new();
            let low = ints.iter().position(|c| !c.is_zero()).expect("nonzero polynomial");
            if low > 0 {
                out.push(f.zero());
            }
            let a0 = ints[low].abs();
            let an = ints.last().expect("nonempty").abs();
            let (Some(a0), Some(an)) = (a0.to_u64(), an.to_u64()) else {
                return Err(Error::Unsupported("coefficients too large for root search".into()));
            };
            for p in divisors(a0)? {
                for q in divisors(an)? {
                    for s in [1i64, -1] {
                        let x = f.from_ratio(s * p as i64, q as i64)?;
                        if !out.contains(&x) && eval(&x).is_zero() {
                            out.push(x);
                        }
                    }
                }
            }
            Ok(out)
        }
        other => Err(Error::Unsupported(format!("grouplike search over {other}"))),
    }
}

fn divisors(n: u64) -> Result<Vec<u64>> {
    if n > 1 << 40 {
        return Err(Error::Unsupported("coefficients too large for root search".into()));
    }
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    Ok(out)
}

/// All algebra maps `A → k` of an algebra given by structure constants,
/// as value vectors on the basis.
pub fn algebra_characters(
    field: &Field,
    dim: usize,
    mult: &[SparseVec<usize>],
    unit: &[Scalar],
) -> Result<Vec<Vector>> {
    let one = sparse(unit);
    let to_dense = |v: &SparseVec<usize>| {
        let mut out = linalg::zero_vector(field, dim);
        for (&k, c) in v.iter() {
            out[k] = c.clone();
        }
        out
    };
    // commutator ideal
    let mut gens = Vec::new();
    for i in 0..dim {
        for j in 0..i {
            let c = mult[i * dim + j].sub(&mult[j * dim + i]);
            if !c.is_zero() {
                gens.push(to_dense(&c));
            }
        }
    }
    let ideal = close_ideal(field, dim, mult, gens)?;
    let mut out = Vec::new();
    split(field, dim, mult, &one, ideal, &mut out)?;
    Ok(out)
}

/// Two-sided ideal generated by `gens`.
fn close_ideal(field: &Field, dim: usize, mult: &[SparseVec<usize>], gens: Vec<Vector>) -> Result<Subspace> {
    let mut ideal = Subspace::span(field, &gens, dim)?;
    loop {
        let mut vs = ideal.basis().to_vec();
        for v in ideal.basis() {
            let s = sparse(v);
            for k in 0..dim {
                let e = SparseVec::unit(k, field);
                for p in [mul_with(mult, dim, &e, &s), mul_with(mult, dim, &s, &e)] {
                    let mut d = linalg::zero_vector(field, dim);
                    for (&i, c) in p.iter() {
                        d[i] = c.clone();
                    }
                    vs.push(d);
                }
            }
        }
        let next = Subspace::span(field, &vs, dim)?;
        if next.dim() == ideal.dim() {
            return Ok(ideal);
        }
        ideal = next;
    }
}

/// Splits the commutative quotient `A/M` into characters.
fn split(
    field: &Field,
    dim: usize,
    mult: &[SparseVec<usize>],
    one: &SparseVec<usize>,
    m: Subspace,
    out: &mut Vec<Vector>,
) -> Result<()> {
    if m.dim() == dim || m.contains(&dense_of(field, dim, one))? {
        return Ok(());
    }
    let reduce = |v: &SparseVec<usize>| -> Result<Vector> { m.reduce(&dense_of(field, dim, v)) };
    let one_red = reduce(one)?;
    let mut values = Vec::with_capacity(dim);
    for i in 0..dim {
        let ei = SparseVec::unit(i, field);
        // minimal polynomial of e_i on A/M
        let mut powers = vec![one_red.clone()];
        let mut cur = one.clone();
        let poly = loop {
            cur = mul_with(mult, dim, &cur, &ei);
            powers.push(reduce(&cur)?);
            let rows: Vec<Vector> = (0..dim)
                .map(|r| powers.iter().map(|p| p[r].clone()).collect())
                .collect();
            let ker = linalg::kernel(field, &rows, powers.len());
            if let Some(k) = ker.into_iter().next() {
                let lead = k.last().expect("nonempty").inv()?;
                break k.iter().map(|c| c * &lead).collect::<Vec<_>>();
            }
        };
        if poly.len() == 2 {
            // e_i ≡ λ mod M
            values.push(-&poly[0]);
            continue;
        }
        for lambda in roots(field, &poly)? {
            let shifted = ei.sub(&one.scaled(&lambda));
            let mut gens = m.basis().to_vec();
            for j in 0..dim {
                gens.push(dense_of(field, dim, &mul_with(mult, dim, &shifted, &SparseVec::unit(j, field))));
            }
            split(field, dim, mult, one, Subspace::span(field, &gens, dim)?, out)?;
        }
        return Ok(());
    }
    out.push(values);
    Ok(())
}

fn dense_of(field: &Field, dim: usize, v: &SparseVec<usize>) -> Vector {
    let mut out = linalg::zero_vector(field, dim);
    for (&k, c) in v.iter() {
        out[k] = c.clone();
    }
    out
}

/// Grouplike elements: `Δg = g⊗g`, `εg = 1`. Uses the constructor
/// certificate when present, otherwise the characters of `H*`.
pub fn grouplikes(h: &HopfAlgebraData) -> Result<Vec<Vector>> {
    if let Some(gs) = &h.pointed_certificate {
        return Ok(gs.clone());
    }
    let chars = algebra_characters(&h.field, h.dim, &dual_mult(h), &h.counit)?;
    let mut out = Vec::new();
    for g in chars {
        let s = sparse(&g);
        let mut gg = SparseVec::new();
        for (&i, x) in s.iter() {
            for (&j, y) in s.iter() {
                gg.add_term((i, j), x * y);
            }
        }
        if h.comult_sparse(&s) != gg || !h.counit_sparse(&s).is_one() {
            return Err(Error::HypothesisViolated(
                "character of the dual is not grouplike".into(),
            ));
        }
        out.push(g);
    }
    Ok(out)
}

/// The coradical `H₀`: the span of the grouplikes for certified pointed
/// algebras, otherwise (char 0) the annihilator of the radical of `H*`,
/// which is the kernel of the trace form.
pub fn coradical(h: &HopfAlgebraData) -> Result<Subspace> {
    if let Some(gs) = &h.pointed_certificate {
        return h.span(gs);
    }
    if h.field.characteristic() != 0 {
        return Err(Error::UnsupportedCharacteristic(format!(
            "coradical over {} without a pointedness certificate",
            h.field
        )));
    }
    let d = h.dim;
    let m = dual_mult(h);
    // tr(L_{e^k}) = Σ_i [e^i] e^k e^i
    let traces: Vec<Scalar> = (0..d)
        .map(|k| {
            (0..d).fold(h.field.zero(), |acc, i| {
                &acc + m[k * d + i].get(&i).unwrap_or(&h.field.zero())
            })
        })
        .collect();
    let form: Vec<Vector> = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    m[i * d + j]
                        .iter()
                        .fold(h.field.zero(), |acc, (&k, c)| &acc + &(c * &traces[k]))
                })
                .collect()
        })
        .collect();
    let radical = linalg::kernel(&h.field, &form, d);
    Ok(Subspace::span(&h.field, &radical, d)?.annihilator())
}

/// `H₀ ⊆ H₁ ⊆ … ⊆ H` with `H_n = Δ⁻¹(H⊗H_{n−1} + H₀⊗H)`.
pub fn coradical_filtration(h: &HopfAlgebraData) -> Result<Vec<Subspace>> {
    let h0 = coradical(h)?;
    let d = h.dim;
    let h0_perp = h0.annihilator();
    let mut out = vec![h0];
    while !out.last().expect("nonempty").is_full() {
        if out.len() > d + 1 {
            return Err(Error::HypothesisViolated("coradical filtration does not exhaust H".into()));
        }
        let prev_perp = out.last().expect("nonempty").annihilator();
        // h ∈ H_n iff (f ⊗ g)(Δh) = 0 for f ⊥ H₀, g ⊥ H_{n−1}
        let mut rows = Vec::new();
        for f in h0_perp.basis() {
            for g in prev_perp.basis() {
                rows.push(
                    (0..d)
                        .map(|k| {
                            h.comult[k]
                                .iter()
                                .fold(h.field.zero(), |acc, (&(i, j), c)| &acc + &(&(c * &f[i]) * &g[j]))
                        })
                        .collect::<Vector>(),
                );
            }
        }
        let next = Subspace::span(&h.field, &linalg::kernel(&h.field, &rows, d), d)?;
        if next.dim() <= out.last().expect("nonempty").dim() {
            return Err(Error::HypothesisViolated("coradical filtration stalled".into()));
        }
        out.push(next);
    }
    Ok(out)
}

/// Pointed iff the coradical is spanned by grouplikes.
pub fn is_pointed(h: &HopfAlgebraData) -> Result<bool> {
    if h.pointed_certificate.is_some() {
        return Ok(true);
    }
    let h0 = coradical(h)?;
    Ok(h0.dim() == grouplikes(h)?.len())
}

/// For pointed `H` and a left coideal subalgebra `B`: whether
/// `S(B ∩ kG) = B ∩ kG`, the criterion for `H` to be free over `B`.
pub fn masuoka_freeness_criterion(h: &HopfAlgebraData, b: &Subspace) -> Result<bool> {
    if !is_pointed(h)? {
        return Err(Error::PreconditionViolated("algebra is not pointed".into()));
    }
    if !is_left_coideal_subalgebra(h, b)? {
        return Err(Error::PreconditionViolated(
            "subspace is not a left coideal subalgebra".into(),
        ));
    }
    let kg = h.span(&grouplikes(h)?)?;
    let bg = b.intersect(&kg)?;
    Ok(h.antipode_map().image_of(&bg)? == bg)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `H = ⊕ x_i B`
    Right,
    /// `H = ⊕ B x_i`
    Left,
}

/// Searches the basis of `H` for a free basis of `H` as a `B`-module.
/// Returns `None` if no subset of basis elements works.
pub fn find_free_basis(h: &HopfAlgebraData, b: &Subspace, side: Side) -> Result<Option<Vec<Vector>>> {
    let r = b.dim();
    if r == 0 || h.dim % r != 0 {
        return Ok(None);
    }
    let rank = h.dim / r;
    let blocks: Vec<Vec<Vector>> = (0..h.dim)
        .map(|k| {
            let x = h.basis_vector(k);
            b.basis()
                .iter()
                .map(|y| match side {
                    Side::Right => h.mul(&x, y),
                    Side::Left => h.mul(y, &x),
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let mut chosen = Vec::new();
    if search(h, &blocks, rank, 0, &mut chosen)? {
        return Ok(Some(chosen.iter().map(|&k| h.basis_vector(k)).collect()));
    }
    Ok(None)
}

fn search(
    h: &HopfAlgebraData,
    blocks: &[Vec<Vector>],
    rank: usize,
    start: usize,
    chosen: &mut Vec<usize>,
) -> Result<bool> {
    if chosen.len() == rank {
        let all: Vec<Vector> = chosen.iter().flat_map(|&k| blocks[k].iter().cloned()).collect();
        return Ok(h.span(&all)?.is_full());
    }
    for k in start..blocks.len() {
        chosen.push(k);
        let all: Vec<Vector> = chosen.iter().flat_map(|&k| blocks[k].iter().cloned()).collect();
        if h.span(&all)?.dim() == all.len() && search(h, blocks, rank, k + 1, chosen)? {
            return Ok(true);
        }
        chosen.pop();
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::small;
    use crate::hopf::{dual_hopf, group_algebra, sweedler, taft};

    fn vecs(q: &Field, rows: &[&[i64]]) -> Vec<Vector> {
        rows.iter().map(|r| r.iter().map(|&x| q.from_int(x)).collect()).collect()
    }

    #[test]
    fn sweedler_coideal_subalgebras() {
        let q = Field::rationals();
        let h = sweedler(&q).unwrap();
        let one = Subspace::span(&q, &vecs(&q, &[&[1, 0, 0, 0]]), 4).unwrap();
        assert!(is_left_coideal_subalgebra(&h, &one).unwrap());
        let one_x = Subspace::span(&q, &vecs(&q, &[&[1, 0, 0, 0], &[0, 0, 1, 0]]), 4).unwrap();
        assert!(is_left_coideal_subalgebra(&h, &one_x).unwrap());
        let one_gx = Subspace::span(&q, &vecs(&q, &[&[1, 0, 0, 0], &[0, 0, 0, 1]]), 4).unwrap();
        assert!(!is_left_coideal_subalgebra(&h, &one_gx).unwrap());
        assert!(is_left_coideal_subalgebra(&h, &Subspace::full(&q, 4)).unwrap());
    }

    #[test]
    fn sweedler_coradical_filtration() {
        let q = Field::rationals();
        let mut h = sweedler(&q).unwrap();
        // forget the certificate to exercise the trace-form computation
        h.pointed_certificate = None;
        let filt = coradical_filtration(&h).unwrap();
        assert_eq!(filt.len(), 2);
        assert_eq!(filt[0], Subspace::span(&q, &vecs(&q, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]), 4).unwrap());
        assert!(filt[1].is_full());
        assert_eq!(grouplikes(&h).unwrap().len(), 2);
        assert!(is_pointed(&h).unwrap());
    }

    #[test]
    fn group_algebra_is_cosemisimple() {
        let q = Field::rationals();
        let mut h = group_algebra(&small::by_name("S3").unwrap(), &q).unwrap();
        h.pointed_certificate = None;
        assert!(coradical(&h).unwrap().is_full());
        assert_eq!(grouplikes(&h).unwrap().len(), 6);
        assert!(is_pointed(&h).unwrap());
    }

    #[test]
    fn dual_of_s3_is_not_pointed() {
        let q = Field::rationals();
        let h = dual_hopf(&group_algebra(&small::by_name("S3").unwrap(), &q).unwrap()).unwrap();
        assert!(coradical(&h).unwrap().is_full());
        assert_eq!(grouplikes(&h).unwrap().len(), 2);
        assert!(!is_pointed(&h).unwrap());
    }

    #[test]
    fn positive_characteristic_needs_certificate() {
        let f = Field::prime(5).unwrap();
        let mut h = group_algebra(&small::by_name("C2").unwrap(), &f).unwrap();
        assert!(is_pointed(&h).unwrap());
        h.pointed_certificate = None;
        assert!(matches!(coradical(&h), Err(Error::UnsupportedCharacteristic(_))));
    }

    #[test]
    fn taft_filtration_length() {
        let f = Field::cyclotomic(3).unwrap();
        let h = taft(3, &f).unwrap();
        let filt = coradical_filtration(&h).unwrap();
        assert_eq!(filt.iter().map(Subspace::dim).collect::<Vec<_>>(), [3, 6, 9]);
    }

    #[test]
    fn masuoka_examples() {
        let q = Field::rationals();
        let h = sweedler(&q).unwrap();
        let one_x = Subspace::span(&q, &vecs(&q, &[&[1, 0, 0, 0], &[0, 0, 1, 0]]), 4).unwrap();
        assert!(masuoka_freeness_criterion(&h, &one_x).unwrap());
        let kg = h.span(&grouplikes(&h).unwrap()).unwrap();
        assert!(masuoka_freeness_criterion(&h, &kg).unwrap());
        let k1 = Subspace::span(&q, &vecs(&q, &[&[1, 0, 0, 0]]), 4).unwrap();
        assert!(masuoka_freeness_criterion(&h, &k1).unwrap());
        let one_gx = Subspace::span(&q, &vecs(&q, &[&[1, 0, 0, 0], &[0, 0, 0, 1]]), 4).unwrap();
        assert!(matches!(
            masuoka_freeness_criterion(&h, &one_gx),
            Err(Error::PreconditionViolated(_))
        ));
        for b in [&one_x, &kg, &k1] {
            for side in [Side::Right, Side::Left] {
                assert!(find_free_basis(&h, b, side).unwrap().is_some());
            }
        }
    }

    #[test]
    fn rational_roots() {
        let q = Field::rationals();
        // (2x − 1)(x + 3) x = 2x³ + 5x² − 3x
        let p = [0, -3, 5, 2].map(|c| q.from_int(c));
        let mut r = roots(&q, &p).unwrap();
        r.sort_by_key(|x| x.to_string());
        let mut expected = vec![q.zero(), q.from_int(-3), q.from_ratio(1, 2).unwrap()];
        expected.sort_by_key(|x| x.to_string());
        assert_eq!(r, expected);
    }
}
