use std::fmt;

use super::{ComputableModule, CoproductTerm, GeneratorInfo};
use crate::error::{Error, Result};
use crate::linalg::SparseVec;
use crate::scalar::{Field, Scalar};

/// A direct summand of a `kZ = k[t, t⁻¹]` module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KzSummand {
    /// `k[t, t⁻¹]` acting on itself, basis `t^e`.
    Regular,
    /// One dimension on which `t` acts by a nonzero scalar.
    Character(Scalar),
}

/// Basis key: summand index and, for regular summands, the exponent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KzKey {
    pub summand: usize,
    pub exponent: i64,
}

impl KzKey {
    pub fn new(summand: usize, exponent: i64) -> KzKey {
        KzKey { summand, exponent }
    }
}

impl fmt::Display for KzKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]t^{}", self.summand, self.exponent)
    }
}

/// A finite direct sum of regular and one-dimensional `kZ`-modules, with
/// generators `t` and `t⁻¹` (both grouplike).
#[derive(Clone, Debug)]
pub struct KzModule {
    field: Field,
    summands: Vec<KzSummand>,
    generators: Vec<GeneratorInfo>,
}

impl KzModule {
    pub fn new(field: &Field, summands: Vec<KzSummand>) -> Result<KzModule> {
        for s in &summands {
            if let KzSummand::Character(c) = s {
                if c.field() != field || c.is_zero() {
                    return Err(Error::NotAModule(format!("t must act invertibly, got {c}")));
                }
            }
        }
        Ok(KzModule {
            field: field.clone(),
            summands,
            generators: vec![GeneratorInfo::new("t", false), GeneratorInfo::new("t⁻¹", false)],
        })
    }

    pub fn regular(field: &Field) -> KzModule {
        KzModule::new(field, vec![KzSummand::Regular]).expect("valid")
    }

    pub fn summands(&self) -> &[KzSummand] {
        &self.summands
    }

    /// The first `len` keys of each regular summand centred at zero
    /// (exponents `−len/2 .. len/2`), plus one key per character summand.
    pub fn window(&self, len: usize) -> Vec<KzKey> {
        let lo = -(len as i64) / 2;
        let mut keys = Vec::new();
        for (i, s) in self.summands.iter().enumerate() {
            match s {
                KzSummand::Regular => keys.extend((lo..lo + len as i64).map(|e| KzKey::new(i, e))),
                KzSummand::Character(_) => keys.push(KzKey::new(i, 0)),
            }
        }
        keys
    }

    pub fn extend_scalars(&self, target: &Field) -> Result<KzModule> {
        if !self.field.embeds_into(target) {
            return Err(Error::UnsupportedExtension(
                self.field.to_string(),
                target.to_string(),
            ));
        }
        let summands = self
            .summands
            .iter()
            .map(|s| match s {
                KzSummand::Regular => Ok(KzSummand::Regular),
                KzSummand::Character(c) => Ok(KzSummand::Character(c.embed(target)?)),
            })
            .collect::<Result<_>>()?;
        KzModule::new(target, summands)
    }
}

impl ComputableModule for KzModule {
    type Key = KzKey;

    fn field(&self) -> &Field {
        &self.field
    }

    fn generators(&self) -> &[GeneratorInfo] {
        &self.generators
    }

    fn act(&self, gen: usize, key: &KzKey) -> Result<SparseVec<KzKey>> {
        let step = if gen == 0 { 1 } else { -1 };
        match self.summands.get(key.summand) {
            Some(KzSummand::Regular) => Ok(SparseVec::unit(
                KzKey::new(key.summand, key.exponent + step),
                &self.field,
            )),
            Some(KzSummand::Character(c)) => Ok(SparseVec::monomial(*key, c.pow(step)?)),
            None => Err(Error::IndexOutOfRange {
                index: key.summand,
                bound: self.summands.len(),
            }),
        }
    }

    fn generator_coproduct(&self, gen: usize) -> Result<Vec<CoproductTerm>> {
        Ok(vec![(self.field.one(), vec![gen], vec![gen])])
    }
}
