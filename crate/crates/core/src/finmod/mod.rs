//! Modules over Hopf algebras: orbit closure and locally finite parts.
//!
//! A [`ComputableModule`] has an ordered basis of keys and a finite list of
//! algebra generators acting by finitely supported combinations. Orbit
//! closure decides finiteness only in one direction: a `Finite` verdict is a
//! proof, `BudgetExceeded` is evidence.

mod data;
mod kz;
mod tensor;

pub use data::{locally_finite_part, tensor_module, ModuleData};
pub use kz::{KzKey, KzModule, KzSummand};
pub use tensor::{
    sparse_u_double_prime, sparse_u_prime, u_double_prime, u_prime, ExtendedModule, Pair,
    TensorModule,
};

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{SparseSubspace, SparseVec};
use crate::scalar::{Field, Scalar};

/// Default orbit budget in dimensions.
pub const DEFAULT_BUDGET: usize = 200;

/// Largest support accepted from a single generator application.
const MAX_SUPPORT: usize = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorInfo {
    pub name: String,
    /// Marks generators of the distinguished subalgebra `T`.
    pub in_t: bool,
}

impl GeneratorInfo {
    pub fn new(name: impl Into<String>, in_t: bool) -> GeneratorInfo {
        GeneratorInfo {
            name: name.into(),
            in_t,
        }
    }
}

/// One term `c · (word ⊗ word)` of a generator's coproduct; words are
/// generator indices, applied right to left.
pub type CoproductTerm = (Scalar, Vec<usize>, Vec<usize>);

pub trait ComputableModule {
    type Key: Ord + Clone + fmt::Debug + fmt::Display;

    fn field(&self) -> &Field;

    fn generators(&self) -> &[GeneratorInfo];

    /// `gen · key`.
    fn act(&self, gen: usize, key: &Self::Key) -> Result<SparseVec<Self::Key>>;

    /// Coproduct of a generator in terms of generator words. Needed only for
    /// tensor products.
    fn generator_coproduct(&self, gen: usize) -> Result<Vec<CoproductTerm>> {
        Err(Error::Unsupported(format!(
            "no coproduct data for generator {gen}"
        )))
    }

    /// Linear extension of [`act`](Self::act).
    fn act_on(&self, gen: usize, v: &SparseVec<Self::Key>) -> Result<SparseVec<Self::Key>> {
        if gen >= self.generators().len() {
            return Err(Error::ActionNotFinitelySupported(format!(
                "generator index {gen} out of range"
            )));
        }
        let mut out = SparseVec::new();
        for (k, c) in v.iter() {
            let img = self.act(gen, k)?;
            if img.len() > MAX_SUPPORT {
                return Err(Error::ActionNotFinitelySupported(format!(
                    "{} · {k} has support {}",
                    self.generators()[gen].name,
                    img.len()
                )));
            }
            out.add_scaled(c, &img);
        }
        Ok(out)
    }

    /// Applies a word of generators, rightmost first.
    fn act_word(&self, word: &[usize], v: &SparseVec<Self::Key>) -> Result<SparseVec<Self::Key>> {
        word.iter().rev().try_fold(v.clone(), |acc, &g| self.act_on(g, &acc))
    }
}

#[derive(Clone, Debug)]
pub enum FinitenessVerdict<K: Ord> {
    /// The orbit span is finite-dimensional; `subspace` is closed under
    /// every iterated generator.
    Finite {
        dim: usize,
        subspace: SparseSubspace<K>,
    },
    /// The span grew past the budget. Not a proof of infinite orbit.
    BudgetExceeded { reached: usize, budget: usize },
}

impl<K: Ord + Clone> FinitenessVerdict<K> {
    pub fn is_finite(&self) -> bool {
        matches!(self, FinitenessVerdict::Finite { .. })
    }

    pub fn finite_dim(&self) -> Option<usize> {
        match self {
            FinitenessVerdict::Finite { dim, .. } => Some(*dim),
            FinitenessVerdict::BudgetExceeded { .. } => None,
        }
    }

    /// `"finite"` or `"budget-exceeded"`.
    pub fn kind(&self) -> &'static str {
        match self {
            FinitenessVerdict::Finite { .. } => "finite",
            FinitenessVerdict::BudgetExceeded { .. } => "budget-exceeded",
        }
    }
}

impl<K: Ord> fmt::Display for FinitenessVerdict<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FinitenessVerdict::Finite { dim, .. } => write!(f, "Finite({dim})"),
            FinitenessVerdict::BudgetExceeded { reached, budget } => {
                write!(f, "BudgetExceeded({reached}, {budget})")
            }
        }
    }
}

/// A verdict with the span dimension after each breadth-first round
/// (round 0 is the seed span).
#[derive(Clone, Debug)]
pub struct OrbitTrace<K: Ord> {
    pub verdict: FinitenessVerdict<K>,
    pub dims: Vec<usize>,
}

/// Breadth-first closure of `span(seeds)` under the generators, in their
/// declared order. With `t_only`, only generators flagged as belonging to
/// `T` are applied.
pub fn orbit_closure_traced<M: ComputableModule>(
    module: &M,
    seeds: &[SparseVec<M::Key>],
    budget: usize,
    t_only: bool,
) -> Result<OrbitTrace<M::Key>> {
    if budget == 0 {
        return Err(Error::PreconditionViolated("budget must be at least 1".into()));
    }
    let gens: Vec<usize> = module
        .generators()
        .iter()
        .enumerate()
        .filter(|(_, g)| !t_only || g.in_t)
        .map(|(i, _)| i)
        .collect();
    let mut span = SparseSubspace::new(module.field());
    let mut frontier = Vec::new();
    let exceeded = |reached: usize, dims: Vec<usize>| OrbitTrace {
        verdict: FinitenessVerdict::BudgetExceeded { reached, budget },
        dims,
    };
    for s in seeds {
        if let Some(row) = span.insert(s) {
            frontier.push(row);
            if span.dim() > budget {
                return Ok(exceeded(span.dim(), vec![span.dim()]));
            }
        }
    }
    let mut dims = vec![span.dim()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &g in &gens {
            for v in &frontier {
                let w = module.act_on(g, v)?;
                if let Some(row) = span.insert(&w) {
                    next.push(row);
                    if span.dim() > budget {
                        dims.push(span.dim());
                        return Ok(exceeded(span.dim(), dims));
                    }
                }
            }
        }
        frontier = next;
        if !frontier.is_empty() {
            dims.push(span.dim());
        }
    }
    Ok(OrbitTrace {
        verdict: FinitenessVerdict::Finite {
            dim: span.dim(),
            subspace: span,
        },
        dims,
    })
}

/// Orbit closure under all generators.
pub fn orbit_closure<M: ComputableModule>(
    module: &M,
    seeds: &[SparseVec<M::Key>],
    budget: usize,
) -> Result<FinitenessVerdict<M::Key>> {
    Ok(orbit_closure_traced(module, seeds, budget, false)?.verdict)
}

/// Orbit closure under the generators of `T` only. Valid as a finiteness
/// test for the whole algebra when it is finitely generated as a right
/// module over `T`.
pub fn orbit_closure_over_t<M: ComputableModule>(
    module: &M,
    seeds: &[SparseVec<M::Key>],
    budget: usize,
) -> Result<FinitenessVerdict<M::Key>> {
    Ok(orbit_closure_traced(module, seeds, budget, true)?.verdict)
}

/// True if `v` has a finite orbit within `budget`.
pub fn is_locally_finite<M: ComputableModule>(
    module: &M,
    v: &SparseVec<M::Key>,
    budget: usize,
) -> Result<bool> {
    Ok(orbit_closure(module, std::slice::from_ref(v), budget)?.is_finite())
}
