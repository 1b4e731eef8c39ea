use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::{Field, Scalar};

/// A finitely supported vector indexed by ordered basis keys. Stored
/// coefficients are never zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseVec<K: Ord> {
    entries: BTreeMap<K, Scalar>,
}

impl<K: Ord> Default for SparseVec<K> {
    fn default() -> Self {
        SparseVec {
            entries: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> SparseVec<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(key: K, field: &Field) -> Self {
        Self::monomial(key, field.one())
    }

    pub fn monomial(key: K, c: Scalar) -> Self {
        let mut v = Self::new();
        v.add_term(key, c);
        v
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (K, Scalar)>) -> Self {
        let mut v = Self::new();
        for (k, c) in terms {
            v.add_term(k, c);
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, key: &K) -> Option<&Scalar> {
        self.entries.get(key)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Scalar)> {
        self.entries.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.entries.keys()
    }

    pub fn leading(&self) -> Option<(&K, &Scalar)> {
        self.entries.iter().next()
    }

    pub fn add_term(&mut self, key: K, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.entries.get_mut(&key) {
            Some(x) => {
                let s = &*x + &c;
                if s.is_zero() {
                    self.entries.remove(&key);
                } else {
                    *x = s;
                }
            }
            None => {
                self.entries.insert(key, c);
            }
        }
    }

    pub fn add_scaled(&mut self, c: &Scalar, other: &SparseVec<K>) {
        if c.is_zero() {
            return;
        }
        for (k, x) in &other.entries {
            self.add_term(k.clone(), c * x);
        }
    }

    pub fn add(&mut self, other: &SparseVec<K>) {
        for (k, x) in &other.entries {
            self.add_term(k.clone(), x.clone());
        }
    }

    pub fn scaled(&self, c: &Scalar) -> SparseVec<K> {
        if c.is_zero() {
            return Self::new();
        }
        SparseVec {
            entries: self.entries.iter().map(|(k, x)| (k.clone(), x * c)).collect(),
        }
    }

    pub fn neg(&self) -> SparseVec<K> {
        SparseVec {
            entries: self.entries.iter().map(|(k, x)| (k.clone(), -x)).collect(),
        }
    }

    pub fn sub(&self, other: &SparseVec<K>) -> SparseVec<K> {
        let mut out = self.clone();
        out.add(&other.neg());
        out
    }

    /// Applies a linear map given on basis keys.
    pub fn map_linear<L: Ord + Clone, E>(
        &self,
        mut f: impl FnMut(&K) -> Result<SparseVec<L>, E>,
    ) -> Result<SparseVec<L>, E> {
        let mut out = SparseVec::new();
        for (k, c) in &self.entries {
            out.add_scaled(c, &f(k)?);
        }
        Ok(out)
    }

    pub fn map_coefficients(&self, mut f: impl FnMut(&Scalar) -> Scalar) -> SparseVec<K> {
        SparseVec::from_terms(self.entries.iter().map(|(k, x)| (k.clone(), f(x))))
    }

    pub fn into_terms(self) -> impl Iterator<Item = (K, Scalar)> {
        self.entries.into_iter()
    }
}

impl<K: Ord + fmt::Display> fmt::Display for SparseVec<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{k}")?;
            } else {
                write!(f, "({c})·{k}")?;
            }
        }
        Ok(())
    }
}

/// A finite-dimensional subspace of a space with ordered basis keys, kept
/// in fully reduced echelon form: each row is monic at its pivot (its least
/// key) and no pivot key occurs in any other row.
#[derive(Clone, Debug)]
pub struct SparseSubspace<K: Ord> {
    field: Field,
    rows: Vec<SparseVec<K>>,
    pivots: BTreeMap<K, usize>,
}

impl<K: Ord + Clone> SparseSubspace<K> {
    pub fn new(field: &Field) -> Self {
        SparseSubspace {
            field: field.clone(),
            rows: Vec::new(),
            pivots: BTreeMap::new(),
        }
    }

    pub fn spanned_by<'a>(field: &Field, vs: impl IntoIterator<Item = &'a SparseVec<K>>) -> Self
    where
        K: 'a,
    {
        let mut s = Self::new(field);
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Basis rows in insertion order.
    pub fn basis(&self) -> &[SparseVec<K>] {
        &self.rows
    }

    /// All keys occurring in the basis.
    pub fn support(&self) -> std::collections::BTreeSet<K> {
        self.rows.iter().flat_map(|r| r.keys().cloned()).collect()
    }

    pub fn reduce(&self, v: &SparseVec<K>) -> SparseVec<K> {
        // rows are fully reduced, so subtracting one never creates another
        // pivot key: only the pivots present in `v` matter
        let mut r = v.clone();
        let hits: Vec<(usize, Scalar)> = v
            .iter()
            .filter_map(|(k, c)| self.pivots.get(k).map(|&idx| (idx, -c)))
            .collect();
        for (idx, c) in hits {
            r.add_scaled(&c, &self.rows[idx]);
        }
        r
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn contains_subspace(&self, other: &SparseSubspace<K>) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    /// Adds `v` to the span. Returns the new basis row if the dimension grew.
    pub fn insert(&mut self, v: &SparseVec<K>) -> Option<SparseVec<K>> {
        let r = self.reduce(v);
        let (pivot, lead) = r.leading()?;
        let pivot = pivot.clone();
        let inv = lead.inv().expect("nonzero");
        let r = r.scaled(&inv);
        for row in self.rows.iter_mut() {
            if let Some(c) = row.get(&pivot) {
                let c = -c;
                row.add_scaled(&c, &r);
            }
        }
        self.pivots.insert(pivot, self.rows.len());
        self.rows.push(r.clone());
        Some(r)
    }

    /// Coordinates of `v` relative to [`basis`](Self::basis).
    pub fn coordinates(&self, v: &SparseVec<K>) -> Option<Vec<Scalar>> {
        let mut coords = vec![self.field.zero(); self.rows.len()];
        for (p, &idx) in &self.pivots {
            if let Some(c) = v.get(p) {
                coords[idx] = c.clone();
            }
        }
        let mut check = v.clone();
        for (c, row) in coords.iter().zip(&self.rows) {
            check.add_scaled(&-c, row);
        }
        check.is_zero().then_some(coords)
    }

    /// Canonical rows sorted by pivot, for set comparison.
    pub fn canonical_rows(&self) -> Vec<SparseVec<K>> {
        self.pivots.values().map(|&i| self.rows[i].clone()).collect()
    }

    pub fn same_span(&self, other: &SparseSubspace<K>) -> bool {
        self.dim() == other.dim() && self.canonical_rows() == other.canonical_rows()
    }

    pub fn sum(&self, other: &SparseSubspace<K>) -> SparseSubspace<K> {
        let mut s = self.clone();
        for r in &other.rows {
            s.insert(r);
        }
        s
    }
}
