use hopfad::finmod::{u_double_prime, u_prime};
use hopfad::linalg::{tensor_index, LinearMap, Subspace, Vector};
use hopfad::Field;
use proptest::prelude::*;

fn vectors(n: usize, max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, n), 0..=max)
}

fn span(f: &Field, rows: &[Vec<i64>], n: usize) -> Subspace {
    let vs: Vec<Vector> = rows.iter().map(|r| r.iter().map(|&x| f.from_int(x)).collect()).collect();
    Subspace::span(f, &vs, n).unwrap()
}

fn q() -> Field {
    Field::rationals()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn dimension_formula(a in vectors(5, 4), b in vectors(5, 4)) {
        let f = q();
        let (a, b) = (span(&f, &a, 5), span(&f, &b, 5));
        let s = a.sum(&b).unwrap();
        let i = a.intersect(&b).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), a.dim() + b.dim());
        prop_assert!(s.contains_subspace(&a).unwrap() && s.contains_subspace(&b).unwrap());
        prop_assert!(a.contains_subspace(&i).unwrap() && b.contains_subspace(&i).unwrap());
    }

    #[test]
    fn modular_law(a in vectors(5, 3), b in vectors(5, 3), d in vectors(5, 3)) {
        let f = q();
        let a = span(&f, &a, 5);
        let b = span(&f, &b, 5);
        let c = a.sum(&span(&f, &d, 5)).unwrap();
        let lhs = a.sum(&b.intersect(&c).unwrap()).unwrap();
        let rhs = a.sum(&b).unwrap().intersect(&c).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn annihilator_is_an_involution(a in vectors(6, 5)) {
        let f = Field::prime(3).unwrap();
        let a = span(&f, &a, 6);
        let perp = a.annihilator();
        prop_assert_eq!(a.dim() + perp.dim(), 6);
        prop_assert_eq!(perp.annihilator(), a);
    }

    #[test]
    fn rank_nullity(cols in prop::collection::vec(prop::collection::vec(-2i64..=2, 4), 1..=6)) {
        let f = q();
        let cols: Vec<Vector> = cols.iter().map(|c| c.iter().map(|&x| f.from_int(x)).collect()).collect();
        let m = LinearMap::from_columns(&f, 4, &cols).unwrap();
        prop_assert_eq!(m.rank() + m.kernel().dim(), cols.len());
        prop_assert_eq!(m.rank(), m.transpose().rank());
        for v in m.kernel().basis() {
            prop_assert!(m.apply(v).unwrap().iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn tensor_slices_bound_u(u in vectors(6, 3)) {
        let f = q();
        let u = span(&f, &u, 6);
        let (up, upp) = (u_prime(&u, 3, 2).unwrap(), u_double_prime(&u, 3, 2).unwrap());
        prop_assert!(up.tensor(&upp).contains_subspace(&u).unwrap());
        prop_assert!(up.dim() <= u.dim() * 2 && upp.dim() <= u.dim() * 3);
    }
}

#[test]
fn tensor_index_is_row_major_bijection() {
    let mut seen = vec![false; 12];
    for i in 0..3 {
        for j in 0..4 {
            let k = tensor_index(i, j, 4).unwrap();
            assert_eq!(k, i * 4 + j);
            assert!(!std::mem::replace(&mut seen[k], true));
        }
    }
    assert!(tensor_index(0, 4, 4).is_err());
}
