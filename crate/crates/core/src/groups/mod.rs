//! Group providers with conjugacy oracles, the FC-center and the adjoint
//! module of a group algebra.
//!
//! Elements have canonical forms so equality is exact: dihedral elements
//! are `r^k s^ε`, Heisenberg elements integer triples, free-group elements
//! reduced words. Infinite conjugacy classes are certified per family rather
//! than semidecided.

mod perm;
pub mod small;

pub use perm::{parse_cycles, Perm};

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::finmod::{ComputableModule, GeneratorInfo};
use crate::linalg::SparseVec;
use crate::scalar::Field;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupElem {
    Perm(Perm),
    /// `r^k s^{reflect}` in `⟨r, s | s² = 1, srs = r⁻¹⟩`.
    Dihedral { k: i64, reflect: bool },
    /// The unitriangular matrix with `a` and `b` above the diagonal and `c`
    /// in the corner.
    Heisenberg { a: i64, b: i64, c: i64 },
    /// Reduced word over `±1` (`a^{±1}`) and `±2` (`b^{±1}`).
    Free(Vec<i8>),
    /// `t^k` in the infinite cyclic group.
    Int(i64),
    Pair(Box<GroupElem>, Box<GroupElem>),
}

impl fmt::Display for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let power = |f: &mut fmt::Formatter<'_>, base: &str, k: i64| match k {
            0 => Ok(()),
            1 => write!(f, "{base}"),
            _ => write!(f, "{base}^{k}"),
        };
        match self {
            GroupElem::Perm(p) => write!(f, "{p}"),
            GroupElem::Dihedral { k, reflect } => {
                if *k == 0 && !reflect {
                    return write!(f, "e");
                }
                power(f, "r", *k)?;
                if *reflect {
                    write!(f, "s")?;
                }
                Ok(())
            }
            GroupElem::Heisenberg { a, b, c } => write!(f, "[{a},{b},{c}]"),
            GroupElem::Free(w) => {
                if w.is_empty() {
                    return write!(f, "e");
                }
                for &l in w {
                    let c = match l {
                        1 => 'a',
                        -1 => 'A',
                        2 => 'b',
                        _ => 'B',
                    };
                    write!(f, "{c}")?;
                }
                Ok(())
            }
            GroupElem::Int(k) => {
                if *k == 0 {
                    write!(f, "e")
                } else {
                    power(f, "t", *k)
                }
            }
            GroupElem::Pair(x, y) => write!(f, "({x}, {y})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Group {
    /// The subgroup of a symmetric group generated by `gens`.
    Perm { name: String, gens: Vec<Perm> },
    InfiniteDihedral,
    Heisenberg,
    Free2,
    Integers,
    Product(Box<Group>, Box<Group>),
}

/// Answer of a conjugacy oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConjugacyClass {
    Finite(Vec<GroupElem>),
    /// Infinite class, with the reason.
    Infinite(&'static str),
}

/// FC-center membership verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FcVerdict {
    /// Finite class of the given size.
    Finite(usize),
    Infinite,
}

impl Group {
    /// Parses `dinf`, `heis`, `free2`, `z`, `perm:<cycles>,<cycles>,…`,
    /// `prod:<a>,<b>` or a small-group name such as `S3`.
    pub fn parse(s: &str) -> Result<Group> {
        let s = s.trim();
        match s {
            "dinf" => return Ok(Group::InfiniteDihedral),
            "heis" => return Ok(Group::Heisenberg),
            "free2" => return Ok(Group::Free2),
            "z" | "Z" => return Ok(Group::Integers),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix("perm:") {
            let gens = split_top_level(rest)
                .iter()
                .map(|g| parse_cycles(g))
                .collect::<Result<Vec<_>>>()?;
            return Ok(Group::Perm {
                name: rest.to_string(),
                gens,
            });
        }
        if let Some(rest) = s.strip_prefix("prod:") {
            // the first factor ends at the first top-level comma
            let parts = split_top_level(rest);
            if parts.len() < 2 {
                return Err(Error::parse(6, "prod expects two factors"));
            }
            return Ok(Group::Product(
                Box::new(Group::parse(&parts[0])?),
                Box::new(Group::parse(&parts[1..].join(","))?),
            ));
        }
        small::group(s).ok_or_else(|| Error::parse(1, format!("unknown group {s:?}")))
    }

    pub fn product(a: Group, b: Group) -> Group {
        Group::Product(Box::new(a), Box::new(b))
    }

    pub fn identity(&self) -> GroupElem {
        match self {
            Group::Perm { .. } => GroupElem::Perm(Perm::identity()),
            Group::InfiniteDihedral => GroupElem::Dihedral { k: 0, reflect: false },
            Group::Heisenberg => GroupElem::Heisenberg { a: 0, b: 0, c: 0 },
            Group::Free2 => GroupElem::Free(Vec::new()),
            Group::Integers => GroupElem::Int(0),
            Group::Product(x, y) => GroupElem::Pair(Box::new(x.identity()), Box::new(y.identity())),
        }
    }

    /// Generators, without inverses.
    pub fn generators(&self) -> Vec<GroupElem> {
        match self {
            Group::Perm { gens, .. } => gens.iter().cloned().map(GroupElem::Perm).collect(),
            Group::InfiniteDihedral => vec![
                GroupElem::Dihedral { k: 1, reflect: false },
                GroupElem::Dihedral { k: 0, reflect: true },
            ],
            Group::Heisenberg => vec![
                GroupElem::Heisenberg { a: 1, b: 0, c: 0 },
                GroupElem::Heisenberg { a: 0, b: 1, c: 0 },
            ],
            Group::Free2 => vec![GroupElem::Free(vec![1]), GroupElem::Free(vec![2])],
            Group::Integers => vec![GroupElem::Int(1)],
            Group::Product(x, y) => {
                let (ex, ey) = (x.identity(), y.identity());
                x.generators()
                    .into_iter()
                    .map(|g| GroupElem::Pair(Box::new(g), Box::new(ey.clone())))
                    .chain(
                        y.generators()
                            .into_iter()
                            .map(|g| GroupElem::Pair(Box::new(ex.clone()), Box::new(g))),
                    )
                    .collect()
            }
        }
    }

    pub fn contains(&self, g: &GroupElem) -> bool {
        match (self, g) {
            (Group::Perm { .. }, GroupElem::Perm(_)) => self.finite_elements().contains(g),
            (Group::InfiniteDihedral, GroupElem::Dihedral { .. })
            | (Group::Heisenberg, GroupElem::Heisenberg { .. })
            | (Group::Integers, GroupElem::Int(_)) => true,
            (Group::Free2, GroupElem::Free(w)) => {
                w.iter().all(|l| matches!(l, 1 | -1 | 2 | -2)) && w.windows(2).all(|p| p[0] != -p[1])
            }
            (Group::Product(x, y), GroupElem::Pair(a, b)) => x.contains(a) && y.contains(b),
            _ => false,
        }
    }

    pub fn mul(&self, g: &GroupElem, h: &GroupElem) -> GroupElem {
        match (self, g, h) {
            (_, GroupElem::Perm(p), GroupElem::Perm(q)) => GroupElem::Perm(p.compose(q)),
            (_, GroupElem::Dihedral { k: k1, reflect: r1 }, GroupElem::Dihedral { k: k2, reflect: r2 }) => {
                // r^{k1} s^{r1} r^{k2} s^{r2} = r^{k1 ± k2} s^{r1 + r2}
                let k = if *r1 { k1 - k2 } else { k1 + k2 };
                GroupElem::Dihedral { k, reflect: r1 ^ r2 }
            }
            (
                _,
                GroupElem::Heisenberg { a, b, c },
                GroupElem::Heisenberg { a: a2, b: b2, c: c2 },
            ) => GroupElem::Heisenberg {
                a: a + a2,
                b: b + b2,
                c: c + c2 + a * b2,
            },
            (_, GroupElem::Free(u), GroupElem::Free(v)) => {
                let mut w = u.clone();
                for &l in v {
                    if w.last() == Some(&-l) {
                        w.pop();
                    } else {
                        w.push(l);
                    }
                }
                GroupElem::Free(w)
            }
            (_, GroupElem::Int(a), GroupElem::Int(b)) => GroupElem::Int(a + b),
            (Group::Product(x, y), GroupElem::Pair(a1, b1), GroupElem::Pair(a2, b2)) => {
                GroupElem::Pair(Box::new(x.mul(a1, a2)), Box::new(y.mul(b1, b2)))
            }
            _ => panic!("mixed group elements {g} and {h}"),
        }
    }

    pub fn inverse(&self, g: &GroupElem) -> GroupElem {
        match (self, g) {
            (_, GroupElem::Perm(p)) => GroupElem::Perm(p.inverse()),
            (_, GroupElem::Dihedral { k, reflect }) => {
                if *reflect {
                    g.clone()
                } else {
                    GroupElem::Dihedral { k: -k, reflect: false }
                }
            }
            (_, GroupElem::Heisenberg { a, b, c }) => GroupElem::Heisenberg {
                a: -a,
                b: -b,
                c: a * b - c,
            },
            (_, GroupElem::Free(w)) => GroupElem::Free(w.iter().rev().map(|l| -l).collect()),
            (_, GroupElem::Int(k)) => GroupElem::Int(-k),
            (Group::Product(x, y), GroupElem::Pair(a, b)) => {
                GroupElem::Pair(Box::new(x.inverse(a)), Box::new(y.inverse(b)))
            }
            _ => panic!("element {g} does not belong to a product group"),
        }
    }

    /// `g h g⁻¹`.
    pub fn conjugate(&self, g: &GroupElem, h: &GroupElem) -> GroupElem {
        self.mul(&self.mul(g, h), &self.inverse(g))
    }

    pub fn is_finite(&self) -> bool {
        match self {
            Group::Perm { .. } => true,
            Group::Product(x, y) => x.is_finite() && y.is_finite(),
            _ => false,
        }
    }

    /// All elements of a finite group in breadth-first order from the
    /// identity. Empty for infinite groups.
    pub fn finite_elements(&self) -> Vec<GroupElem> {
        if !self.is_finite() {
            return Vec::new();
        }
        let gens = self.generators();
        let mut seen = BTreeSet::from([self.identity()]);
        let mut out = vec![self.identity()];
        let mut queue = VecDeque::from([self.identity()]);
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y = self.mul(&x, g);
                if seen.insert(y.clone()) {
                    out.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        out
    }

    /// Elements of word length at most `len` in the generators and their
    /// inverses, by length and then canonical order.
    pub fn enumerate(&self, len: usize) -> Vec<GroupElem> {
        let mut steps = self.generators();
        steps.extend(self.generators().iter().map(|g| self.inverse(g)));
        let mut seen = BTreeSet::from([self.identity()]);
        let mut out = vec![self.identity()];
        let mut layer = vec![self.identity()];
        for _ in 0..len {
            let mut next = BTreeSet::new();
            for x in &layer {
                for g in &steps {
                    let y = self.mul(x, g);
                    if !seen.contains(&y) {
                        next.insert(y);
                    }
                }
            }
            seen.extend(next.iter().cloned());
            out.extend(next.iter().cloned());
            layer = next.into_iter().collect();
        }
        out
    }

    /// The conjugacy class of `g`: closure under conjugation by the
    /// generators for finite groups, closed forms otherwise.
    pub fn conjugacy_class(&self, g: &GroupElem) -> ConjugacyClass {
        match (self, g) {
            (Group::Perm { .. }, _) => ConjugacyClass::Finite(self.class_by_closure(g)),
            (Group::InfiniteDihedral, GroupElem::Dihedral { k, reflect }) => {
                if *reflect {
                    ConjugacyClass::Infinite("reflections r^k s are conjugate to r^{k+2m} s for all m")
                } else if *k == 0 {
                    ConjugacyClass::Finite(vec![g.clone()])
                } else {
                    ConjugacyClass::Finite(vec![
                        GroupElem::Dihedral { k: -k.abs(), reflect: false },
                        GroupElem::Dihedral { k: k.abs(), reflect: false },
                    ])
                }
            }
            (Group::Heisenberg, GroupElem::Heisenberg { a, b, .. }) => {
                if *a == 0 && *b == 0 {
                    ConjugacyClass::Finite(vec![g.clone()])
                } else {
                    ConjugacyClass::Infinite("non-central: the corner entry shifts by a·n − b·m")
                }
            }
            (Group::Free2, GroupElem::Free(w)) => {
                if w.is_empty() {
                    ConjugacyClass::Finite(vec![g.clone()])
                } else {
                    ConjugacyClass::Infinite("free group: nontrivial classes are infinite")
                }
            }
            (Group::Integers, _) => ConjugacyClass::Finite(vec![g.clone()]),
            (Group::Product(x, y), GroupElem::Pair(a, b)) => {
                match (x.conjugacy_class(a), y.conjugacy_class(b)) {
                    (ConjugacyClass::Finite(ca), ConjugacyClass::Finite(cb)) => {
                        let mut out: Vec<GroupElem> = ca
                            .iter()
                            .flat_map(|u| {
                                cb.iter()
                                    .map(move |v| GroupElem::Pair(Box::new(u.clone()), Box::new(v.clone())))
                            })
                            .collect();
                        out.sort();
                        ConjugacyClass::Finite(out)
                    }
                    (ConjugacyClass::Infinite(why), _) | (_, ConjugacyClass::Infinite(why)) => {
                        ConjugacyClass::Infinite(why)
                    }
                }
            }
            _ => panic!("element {g} does not belong to this group"),
        }
    }

    fn class_by_closure(&self, g: &GroupElem) -> Vec<GroupElem> {
        let gens = self.generators();
        let mut seen = BTreeSet::from([g.clone()]);
        let mut queue = VecDeque::from([g.clone()]);
        while let Some(x) = queue.pop_front() {
            for s in &gens {
                let y = self.conjugate(s, &x);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        seen.into_iter().collect()
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Group::Perm { name, .. } => write!(f, "{name}"),
            Group::InfiniteDihedral => write!(f, "D∞"),
            Group::Heisenberg => write!(f, "Heis"),
            Group::Free2 => write!(f, "F2"),
            Group::Integers => write!(f, "Z"),
            Group::Product(x, y) => write!(f, "{x}×{y}"),
        }
    }
}

/// Splits on commas that are not inside parentheses or a nested `prod:`.
fn split_top_level(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur));
                continue;
            }
            _ => {}
        }
        cur.push(ch);
    }
    out.push(cur);
    out
}

/// Whether `g` lies in the FC-center, with its class size if so.
pub fn fc_center_membership(group: &Group, g: &GroupElem) -> FcVerdict {
    match group.conjugacy_class(g) {
        ConjugacyClass::Finite(c) => FcVerdict::Finite(c.len()),
        ConjugacyClass::Infinite(_) => FcVerdict::Infinite,
    }
}

/// FC-center members among the elements of word length at most `len`.
pub fn fc_center_window(group: &Group, len: usize) -> Vec<GroupElem> {
    group
        .enumerate(len)
        .into_iter()
        .filter(|g| matches!(fc_center_membership(group, g), FcVerdict::Finite(_)))
        .collect()
}

/// `ad kG` with basis the group elements and generators acting by
/// conjugation.
pub struct GroupAdModule {
    group: Group,
    field: Field,
    gens: Vec<GroupElem>,
    info: Vec<GeneratorInfo>,
}

impl GroupAdModule {
    pub fn group(&self) -> &Group {
        &self.group
    }
}

pub fn group_ad_module(group: &Group, field: &Field) -> GroupAdModule {
    let gens = group.generators();
    let info = gens.iter().map(|g| GeneratorInfo::new(g.to_string(), false)).collect();
    GroupAdModule {
        group: group.clone(),
        field: field.clone(),
        gens,
        info,
    }
}

impl ComputableModule for GroupAdModule {
    type Key = GroupElem;

    fn field(&self) -> &Field {
        &self.field
    }

    fn generators(&self) -> &[GeneratorInfo] {
        &self.info
    }

    fn act(&self, gen: usize, key: &GroupElem) -> Result<SparseVec<GroupElem>> {
        Ok(SparseVec::unit(self.group.conjugate(&self.gens[gen], key), &self.field))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finmod::{orbit_closure, FinitenessVerdict};

    fn dih(k: i64, reflect: bool) -> GroupElem {
        GroupElem::Dihedral { k, reflect }
    }

    #[test]
    fn dihedral_relations() {
        let g = Group::InfiniteDihedral;
        let (r, s) = (dih(1, false), dih(0, true));
        assert_eq!(g.mul(&s, &s), g.identity());
        assert_eq!(g.mul(&g.mul(&s, &r), &s), dih(-1, false));
        assert_eq!(g.conjugate(&r, &s), dih(2, true));
        assert_eq!(fc_center_membership(&g, &dih(5, false)), FcVerdict::Finite(2));
        assert_eq!(fc_center_membership(&g, &s), FcVerdict::Infinite);
    }

    #[test]
    fn heisenberg_commutator_is_central() {
        let g = Group::Heisenberg;
        let (x, y) = (g.generators()[0].clone(), g.generators()[1].clone());
        let comm = g.mul(&g.mul(&x, &y), &g.mul(&g.inverse(&x), &g.inverse(&y)));
        assert_eq!(comm, GroupElem::Heisenberg { a: 0, b: 0, c: 1 });
        for h in g.enumerate(3) {
            assert_eq!(g.mul(&h, &g.inverse(&h)), g.identity());
            assert_eq!(g.conjugate(&h, &comm), comm);
        }
        let fc = fc_center_window(&g, 4);
        assert_eq!(fc.len(), 3);
    }

    #[test]
    fn free_group_window() {
        let g = Group::Free2;
        assert_eq!(g.enumerate(3).len(), 1 + 4 + 12 + 36);
        assert_eq!(fc_center_window(&g, 3), vec![g.identity()]);
    }

    #[test]
    fn products_and_parsing() {
        let g = Group::parse("prod:z,perm:(123),(12)").unwrap();
        assert!(!g.is_finite());
        let w = g.enumerate(3);
        assert_eq!(fc_center_window(&g, 3), w);
        let s3 = Group::parse("perm:(123),(12)").unwrap();
        assert_eq!(s3.finite_elements().len(), 6);
        assert!(Group::parse("bogus").is_err());
    }

    #[test]
    fn ad_module_orbits_match_classes() {
        let q = Field::rationals();
        let g = Group::InfiniteDihedral;
        let m = group_ad_module(&g, &q);
        let v = orbit_closure(&m, &[SparseVec::unit(dih(1, false), &q)], 30).unwrap();
        assert_eq!(v.finite_dim(), Some(2));
        let v = orbit_closure(&m, &[SparseVec::unit(dih(0, true), &q)], 30).unwrap();
        assert!(matches!(v, FinitenessVerdict::BudgetExceeded { .. }));
    }

    #[test]
    fn fc_window_is_a_partial_subgroup() {
        for g in [Group::InfiniteDihedral, Group::Heisenberg] {
            let w: BTreeSet<_> = g.enumerate(4).into_iter().collect();
            let fc: BTreeSet<_> = fc_center_window(&g, 4).into_iter().collect();
            for x in &fc {
                assert!(fc.contains(&g.inverse(x)));
                for y in &fc {
                    let xy = g.mul(x, y);
                    if w.contains(&xy) {
                        assert!(fc.contains(&xy));
                    }
                }
            }
        }
    }
}
