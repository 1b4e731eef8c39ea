use hopfad::{Field, Scalar};
use proptest::prelude::*;

fn fields() -> Vec<Field> {
    vec![
        Field::rationals(),
        Field::prime(7).unwrap(),
        Field::prime(10007).unwrap(),
        Field::cyclotomic(5).unwrap(),
        Field::new("ratfunc:q:Q".parse().unwrap()).unwrap(),
        Field::new("ratfunc:t:fp:5".parse().unwrap()).unwrap(),
    ]
}

/// `Σ r_i g^i` for the field's generator `g` (1 for prime fields and Q).
fn element(f: &Field, coeffs: &[(i64, i64)]) -> Scalar {
    let g = f
        .variable_element()
        .or_else(|| f.cyclotomic_generator())
        .unwrap_or_else(|| f.from_int(2));
    let mut acc = f.zero();
    let mut power = f.one();
    for &(n, d) in coeffs {
        let c = f.from_ratio(n, d).unwrap_or_else(|_| f.from_int(n));
        acc = &acc + &(&c * &power);
        power = &power * &g;
    }
    acc
}

fn coeffs() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-20i64..=20, 1i64..=6), 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn field_axioms(fi in 0usize..6, a in coeffs(), b in coeffs(), c in coeffs()) {
        let f = &fields()[fi];
        let (a, b, c) = (element(f, &a), element(f, &b), element(f, &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &f.zero(), a.clone());
        prop_assert_eq!(&a * &f.one(), a.clone());
        prop_assert!((&a + &(-&a)).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
            prop_assert_eq!(a.try_div(&a).unwrap(), f.one());
        } else {
            prop_assert!(a.inv().is_err());
        }
    }

    #[test]
    fn literals_round_trip(fi in 0usize..6, a in coeffs()) {
        let f = &fields()[fi];
        let a = element(f, &a);
        prop_assert_eq!(f.parse_scalar(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn powers_add(fi in 0usize..6, a in coeffs(), m in -4i64..5, n in -4i64..5) {
        let f = &fields()[fi];
        let a = element(f, &a);
        prop_assume!(!a.is_zero());
        prop_assert_eq!(&a.pow(m).unwrap() * &a.pow(n).unwrap(), a.pow(m + n).unwrap());
    }
}
