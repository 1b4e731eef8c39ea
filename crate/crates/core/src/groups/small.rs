//! The groups of order at most 12, as permutation groups.

use super::{parse_cycles, Group, GroupElem};
use crate::hopf::GroupTable;

const CATALOGUE: &[(&str, &[&str])] = &[
    ("C1", &[]),
    ("C2", &["(12)"]),
    ("C3", &["(123)"]),
    ("C4", &["(1234)"]),
    ("V4", &["(12)", "(34)"]),
    ("C5", &["(12345)"]),
    ("C6", &["(123456)"]),
    ("S3", &["(123)", "(12)"]),
    ("C7", &["(1234567)"]),
    ("C8", &["(12345678)"]),
    ("C4xC2", &["(1234)", "(56)"]),
    ("C2xC2xC2", &["(12)", "(34)", "(56)"]),
    ("D4", &["(1234)", "(13)"]),
    ("Q8", &["(1243)(5687)", "(1548)(2736)"]),
    ("C9", &["(123456789)"]),
    ("C3xC3", &["(123)", "(456)"]),
    ("C10", &["(1,2,3,4,5,6,7,8,9,10)"]),
    ("D5", &["(12345)", "(25)(34)"]),
    ("C11", &["(1,2,3,4,5,6,7,8,9,10,11)"]),
    ("C12", &["(1,2,3,4,5,6,7,8,9,10,11,12)"]),
    ("C6xC2", &["(123456)", "(78)"]),
    ("A4", &["(123)", "(12)(34)"]),
    ("D6", &["(123456)", "(16)(25)(34)"]),
    ("Dic3", &["(123)", "(12)(4567)"]),
];

/// Names of all catalogued groups, by order.
pub fn names() -> Vec<&'static str> {
    CATALOGUE.iter().map(|(n, _)| *n).collect()
}

/// The catalogued group with this name, as a provider.
pub fn group(name: &str) -> Option<Group> {
    let name = match name {
        "C2xC2" => "V4",
        "S2" => "C2",
        "C2xC4" => "C4xC2",
        "C2xC6" => "C6xC2",
        "D3" => "S3",
        "Z" => return None,
        other => other,
    };
    let (n, gens) = CATALOGUE.iter().find(|(n, _)| *n == name)?;
    Some(Group::Perm {
        name: n.to_string(),
        gens: gens.iter().map(|g| parse_cycles(g).expect("catalogue entry")).collect(),
    })
}

/// Multiplication table of a finite group, elements labelled by
/// [`GroupElem`]'s display and listed breadth-first from the identity.
pub fn table_of(group: &Group) -> Option<GroupTable> {
    if !group.is_finite() {
        return None;
    }
    let elems: Vec<GroupElem> = group.finite_elements();
    let index: std::collections::BTreeMap<&GroupElem, usize> =
        elems.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let n = elems.len();
    let mut table = vec![0; n * n];
    for (i, a) in elems.iter().enumerate() {
        for (j, b) in elems.iter().enumerate() {
            table[i * n + j] = index[&group.mul(a, b)];
        }
    }
    Some(GroupTable {
        labels: elems.iter().map(ToString::to_string).collect(),
        table,
    })
}

/// Multiplication table of a catalogued group.
pub fn by_name(name: &str) -> Option<GroupTable> {
    table_of(&group(name)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order_counts(t: &GroupTable) -> Vec<usize> {
        let (e, _) = t.validate().unwrap();
        let mut counts = vec![0; t.order() + 1];
        for g in 0..t.order() {
            let (mut x, mut k) = (g, 1);
            while x != e {
                x = t.mul(x, g);
                k += 1;
            }
            counts[k] += 1;
        }
        counts
    }

    fn is_abelian(t: &GroupTable) -> bool {
        (0..t.order()).all(|i| (0..t.order()).all(|j| t.mul(i, j) == t.mul(j, i)))
    }

    #[test]
    fn catalogue_orders() {
        let expected = [
            1, 2, 3, 4, 4, 5, 6, 6, 7, 8, 8, 8, 8, 8, 9, 9, 10, 10, 11, 12, 12, 12, 12, 12,
        ];
        for (name, &n) in names().iter().zip(&expected) {
            assert_eq!(by_name(name).unwrap().order(), n, "{name}");
        }
        assert_eq!(names().len(), 24);
    }

    #[test]
    fn groups_are_pairwise_non_isomorphic() {
        // order statistics and commutativity separate all groups of order ≤ 12
        let sigs: Vec<_> = names()
            .iter()
            .map(|n| {
                let t = by_name(n).unwrap();
                (order_counts(&t), is_abelian(&t))
            })
            .collect();
        for i in 0..sigs.len() {
            for j in 0..i {
                assert_ne!(sigs[i], sigs[j], "{} vs {}", names()[i], names()[j]);
            }
        }
    }

    #[test]
    fn quaternion_and_dicyclic_have_one_involution() {
        for name in ["Q8", "Dic3"] {
            assert_eq!(order_counts(&by_name(name).unwrap())[2], 1, "{name}");
            assert!(!is_abelian(&by_name(name).unwrap()));
        }
    }

    #[test]
    fn s3_labels() {
        let t = by_name("S3").unwrap();
        for l in ["()", "(12)", "(13)", "(23)", "(123)", "(132)"] {
            assert!(t.labels.iter().any(|x| x == l), "{l}");
        }
    }
}
