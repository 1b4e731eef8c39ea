use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{1, 2, …}` with finite support. Stored zero-based with
/// trailing fixed points trimmed, so equal permutations compare equal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn identity() -> Perm {
        Perm(Vec::new())
    }

    /// From zero-based images.
    pub fn from_images(images: Vec<u32>) -> Result<Perm> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x as usize >= images.len() || std::mem::replace(&mut seen[x as usize], true) {
                return Err(Error::NotAGroup(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Perm(images).trimmed())
    }

    /// From cycles over one-based points.
    pub fn from_cycles(cycles: &[Vec<u32>]) -> Result<Perm> {
        let degree = cycles.iter().flatten().copied().max().unwrap_or(0) as usize;
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut seen = vec![false; degree];
        for cycle in cycles {
            for (i, &p) in cycle.iter().enumerate() {
                if p == 0 {
                    return Err(Error::parse(0, "points are numbered from 1"));
                }
                if std::mem::replace(&mut seen[p as usize - 1], true) {
                    return Err(Error::parse(0, format!("point {p} repeated")));
                }
                images[p as usize - 1] = cycle[(i + 1) % cycle.len()] - 1;
            }
        }
        Perm::from_images(images)
    }

    fn trimmed(mut self) -> Perm {
        while let Some(&last) = self.0.last() {
            if last as usize + 1 == self.0.len() {
                self.0.pop();
            } else {
                break;
            }
        }
        self
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn image(&self, x: u32) -> u32 {
        self.0.get(x as usize).copied().unwrap_or(x)
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    /// `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        let n = self.degree().max(other.degree());
        Perm((0..n as u32).map(|x| self.image(other.image(x))).collect()).trimmed()
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm(inv)
    }

    /// Disjoint cycles of length ≥ 2, one-based, each starting at its
    /// smallest point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start as u32;
            while !seen[x as usize] {
                seen[x as usize] = true;
                cycle.push(x + 1);
                x = self.image(x);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "()");
        }
        let sep = if self.degree() > 9 { "," } else { "" };
        for c in self.cycles() {
            let pts: Vec<String> = c.iter().map(u32::to_string).collect();
            write!(f, "({})", pts.join(sep))?;
        }
        Ok(())
    }
}

/// Parses a product of cycles such as `(123)(45)` or `(1,2,10)`. Without
/// commas every digit is one point.
pub fn parse_cycles(s: &str) -> Result<Perm> {
    let s = s.trim();
    let mut cycles = Vec::new();
    let mut rest = s;
    let mut offset = 0;
    while !rest.is_empty() {
        let Some(body) = rest.strip_prefix('(') else {
            return Err(Error::parse(offset + 1, format!("expected '(' in {s:?}")));
        };
        let Some(end) = body.find(')') else {
            return Err(Error::parse(offset + 1, format!("unclosed cycle in {s:?}")));
        };
        let inner = &body[..end];
        let points: Result<Vec<u32>> = if inner.contains(',') {
            inner
                .split(',')
                .map(|p| {
                    p.trim()
                        .parse()
                        .map_err(|_| Error::parse(offset + 2, format!("bad point {p:?}")))
                })
                .collect()
        } else {
            inner
                .chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| Error::parse(offset + 2, format!("bad point {c:?}")))
                })
                .collect()
        };
        let points = points?;
        if !points.is_empty() {
            cycles.push(points);
        }
        offset += end + 2;
        rest = &body[end + 1..];
    }
    Perm::from_cycles(&cycles)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let p = parse_cycles("(123)(45)").unwrap();
        assert_eq!(p.to_string(), "(123)(45)");
        assert_eq!(parse_cycles("()").unwrap(), Perm::identity());
        assert_eq!(parse_cycles("(1,2,10)").unwrap().to_string(), "(1,2,10)");
        assert!(parse_cycles("(1 2").is_err());
        assert!(parse_cycles("(121)").is_err());
    }

    #[test]
    fn composition_is_right_to_left() {
        let a = parse_cycles("(12)").unwrap();
        let b = parse_cycles("(23)").unwrap();
        // (12)(23) sends 1 → 1 → 2 and 3 → 2 → 1
        assert_eq!(a.compose(&b), parse_cycles("(123)").unwrap());
        assert!(a.compose(&a).is_identity());
        let c = parse_cycles("(1234)").unwrap();
        assert!(c.compose(&c.inverse()).is_identity());
    }
}
