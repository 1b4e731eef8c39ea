use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::SparseVec;
use crate::scalar::{Field, Scalar};

/// Generators of `U_q(sl2)`, in the monomial order `F < K < K⁻¹ < E`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    F,
    K,
    Kinv,
    E,
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Letter::F => "F",
            Letter::K => "K",
            Letter::Kinv => "K⁻¹",
            Letter::E => "E",
        })
    }
}

pub type Word = Vec<Letter>;

/// `lhs → Σ c · word`.
#[derive(Clone, Debug)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: Vec<(Word, Scalar)>,
}

/// A linear rewriting system on words. Reduction always rewrites the
/// leftmost occurrence of the first matching rule.
#[derive(Clone, Debug)]
pub struct RewriteSystem {
    field: Field,
    rules: Vec<Rule>,
}

const STEP_CAP: usize = 1_000_000;

fn word_string(w: &[Letter]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter().map(Letter::to_string).collect::<Vec<_>>().join("·")
}

impl RewriteSystem {
    pub fn new(field: &Field, rules: Vec<Rule>) -> RewriteSystem {
        RewriteSystem {
            field: field.clone(),
            rules,
        }
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    fn find(&self, w: &[Letter]) -> Option<(usize, usize)> {
        (0..w.len()).find_map(|pos| {
            self.rules
                .iter()
                .position(|r| w[pos..].starts_with(&r.lhs))
                .map(|ri| (pos, ri))
        })
    }

    pub fn is_irreducible(&self, w: &[Letter]) -> bool {
        self.find(w).is_none()
    }

    fn apply_at(&self, w: &[Letter], pos: usize, rule: usize) -> SparseVec<Word> {
        let r = &self.rules[rule];
        let mut out = SparseVec::new();
        for (rw, c) in &r.rhs {
            let mut nw = w[..pos].to_vec();
            nw.extend_from_slice(rw);
            nw.extend_from_slice(&w[pos + r.lhs.len()..]);
            out.add_term(nw, c.clone());
        }
        out
    }

    /// Fully reduces a combination of words.
    pub fn reduce(&self, x: &SparseVec<Word>) -> Result<SparseVec<Word>> {
        let mut pending = x.clone();
        let mut done = SparseVec::new();
        let mut steps = 0;
        while let Some((w, c)) = pending.leading().map(|(w, c)| (w.clone(), c.clone())) {
            pending.add_term(w.clone(), -&c);
            match self.find(&w) {
                None => done.add_term(w, c),
                Some((pos, ri)) => {
                    steps += 1;
                    if steps > STEP_CAP {
                        return Err(Error::RecursionCap(STEP_CAP));
                    }
                    pending.add_scaled(&c, &self.apply_at(&w, pos, ri));
                }
            }
        }
        Ok(done)
    }

    pub fn reduce_word(&self, w: &[Letter]) -> Result<SparseVec<Word>> {
        self.reduce(&SparseVec::unit(w.to_vec(), &self.field))
    }

    /// Words on which two rule applications overlap, with both one-step
    /// rewrites.
    pub fn critical_pairs(&self) -> Vec<(Word, SparseVec<Word>, SparseVec<Word>)> {
        let mut out = Vec::new();
        for (i, r1) in self.rules.iter().enumerate() {
            for (j, r2) in self.rules.iter().enumerate() {
                let (l1, l2) = (&r1.lhs, &r2.lhs);
                for o in 1..l1.len().min(l2.len()) {
                    if l1[l1.len() - o..] == l2[..o] {
                        let mut w = l1.clone();
                        w.extend_from_slice(&l2[o..]);
                        let a = self.apply_at(&w, 0, i);
                        let b = self.apply_at(&w, l1.len() - o, j);
                        out.push((w, a, b));
                    }
                }
                if i != j && l2.len() < l1.len() {
                    for p in 0..=l1.len() - l2.len() {
                        if l1[p..].starts_with(l2) {
                            out.push((l1.clone(), self.apply_at(l1, 0, i), self.apply_at(l1, p, j)));
                        }
                    }
                }
            }
        }
        out
    }

    /// Resolves every critical pair; a failure means the rule set is not
    /// confluent.
    pub fn check_confluence(&self) -> Result<usize> {
        let pairs = self.critical_pairs();
        for (w, a, b) in &pairs {
            if self.reduce(a)? != self.reduce(b)? {
                return Err(Error::NotConfluent(word_string(w)));
            }
        }
        Ok(pairs.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutative_polynomials_are_confluent() {
        let q = Field::rationals();
        // y x → x y with x < y
        let sys = RewriteSystem::new(
            &q,
            vec![Rule {
                lhs: vec![Letter::E, Letter::F],
                rhs: vec![(vec![Letter::F, Letter::E], q.one())],
            }],
        );
        assert!(sys.check_confluence().is_ok());
        let r = sys.reduce_word(&[Letter::E, Letter::E, Letter::F]).unwrap();
        assert_eq!(r, SparseVec::unit(vec![Letter::F, Letter::E, Letter::E], &q));
    }

    #[test]
    fn detects_non_confluence() {
        let q = Field::rationals();
        // E F → F, F E → E overlaps on E F E with distinct normal forms
        let sys = RewriteSystem::new(
            &q,
            vec![
                Rule {
                    lhs: vec![Letter::E, Letter::F],
                    rhs: vec![(vec![Letter::F], q.one())],
                },
                Rule {
                    lhs: vec![Letter::F, Letter::E],
                    rhs: vec![(vec![Letter::F], q.from_int(2))],
                },
            ],
        );
        assert!(matches!(sys.check_confluence(), Err(Error::NotConfluent(_))));
    }
}
