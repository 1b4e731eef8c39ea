use hopfad::finmod::{ComputableModule, KzKey, KzModule, KzSummand, TensorModule};
use hopfad::linalg::SparseVec;
use hopfad::pbw::{Mono, PBWElement, PresentedAlgebra};
use hopfad::Field;
use proptest::prelude::*;

fn algebras() -> Vec<PresentedAlgebra> {
    let q = Field::rationals();
    let z3 = Field::cyclotomic(3).unwrap();
    vec![
        PresentedAlgebra::uq_sl2(q.from_int(2)).unwrap(),
        PresentedAlgebra::quotient(z3.primitive_root(3).unwrap(), 3).unwrap(),
    ]
}

type Terms = Vec<(u32, i64, u32, i64)>;

fn terms() -> impl Strategy<Value = Terms> {
    prop::collection::vec((0u32..3, -2i64..=2, 0u32..3, -3i64..=3), 1..3)
}

fn element(alg: &PresentedAlgebra, t: &Terms) -> PBWElement {
    let mut x = SparseVec::new();
    for &(a, b, c, n) in t {
        x.add_scaled(&alg.field().from_int(n), &alg.monomial(a, b, c));
    }
    x
}

/// `m ∘ (S ⊗ id) ∘ Δ`.
fn antipode_convolution(alg: &PresentedAlgebra, x: &PBWElement) -> PBWElement {
    let mut out = SparseVec::new();
    for ((l, r), c) in alg.coproduct(x).iter() {
        let sl = alg.antipode_mono(*l);
        out.add_scaled(c, &alg.mul(&sl, &SparseVec::unit(*r, alg.field())));
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn pbw_product_is_associative(x in terms(), y in terms(), z in terms()) {
        for alg in algebras() {
            let (x, y, z) = (element(&alg, &x), element(&alg, &y), element(&alg, &z));
            prop_assert_eq!(alg.mul(&alg.mul(&x, &y), &z), alg.mul(&x, &alg.mul(&y, &z)));
        }
    }

    #[test]
    fn coproduct_is_multiplicative(x in terms(), y in terms()) {
        for alg in algebras() {
            let (x, y) = (element(&alg, &x), element(&alg, &y));
            let lhs = alg.coproduct(&alg.mul(&x, &y));
            let rhs = alg.tensor_mul(&alg.coproduct(&x), &alg.coproduct(&y));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn antipode_reverses_products(x in terms(), y in terms()) {
        for alg in algebras() {
            let (x, y) = (element(&alg, &x), element(&alg, &y));
            let lhs = alg.antipode(&alg.mul(&x, &y));
            let rhs = alg.mul(&alg.antipode(&y), &alg.antipode(&x));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn counit_is_multiplicative(x in terms(), y in terms()) {
        for alg in algebras() {
            let (x, y) = (element(&alg, &x), element(&alg, &y));
            prop_assert_eq!(alg.counit(&alg.mul(&x, &y)), &alg.counit(&x) * &alg.counit(&y));
        }
    }

    #[test]
    fn antipode_axiom(x in terms()) {
        for alg in algebras() {
            let x = element(&alg, &x);
            let expected = alg.one().scaled(&alg.counit(&x));
            prop_assert_eq!(antipode_convolution(&alg, &x), expected);
        }
    }

    #[test]
    fn adjoint_action_of_one_is_identity(x in terms()) {
        for alg in algebras() {
            let x = element(&alg, &x);
            prop_assert_eq!(alg.adjoint_action(&alg.one(), &x), x);
        }
    }

    #[test]
    fn kz_generators_are_inverse(keys in prop::collection::vec((0usize..3, -10i64..=10, -3i64..=3), 1..5)) {
        let f = Field::rationals();
        let m = KzModule::new(&f, vec![
            KzSummand::Regular,
            KzSummand::Character(f.from_int(-1)),
            KzSummand::Character(f.from_ratio(2, 3).unwrap()),
        ]).unwrap();
        let v = SparseVec::from_terms(keys.iter().map(|&(s, e, c)| (KzKey::new(s, e), f.from_int(c))));
        prop_assert_eq!(m.act_on(1, &m.act_on(0, &v).unwrap()).unwrap(), v.clone());
        prop_assert_eq!(m.act_on(0, &m.act_on(1, &v).unwrap()).unwrap(), v);
    }

    #[test]
    fn kz_tensor_action_is_diagonal(e1 in -10i64..=10, e2 in -10i64..=10, s in 0usize..2) {
        let f = Field::rationals();
        let v = KzModule::new(&f, vec![KzSummand::Regular, KzSummand::Character(f.from_int(-1))]).unwrap();
        let t = TensorModule::new(&v, &v).unwrap();
        let a = SparseVec::unit(KzKey::new(0, e1), &f);
        let b = SparseVec::unit(KzKey::new(s, e2), &f);
        for gen in 0..2 {
            let lhs = t.act_on(gen, &TensorModule::<KzModule, KzModule>::pure(&a, &b)).unwrap();
            let rhs = TensorModule::<KzModule, KzModule>::pure(
                &v.act_on(gen, &a).unwrap(),
                &v.act_on(gen, &b).unwrap(),
            );
            prop_assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn monomials_normalize() {
    let quotient = &algebras()[1];
    assert_eq!(quotient.normalize(Mono::new(0, 4, 0)), Some(Mono::new(0, 4, 0)));
    assert_eq!(quotient.normalize(Mono::new(3, 0, 0)), None);
    let z3 = Field::cyclotomic(3).unwrap();
    let small = PresentedAlgebra::small_quantum(z3.primitive_root(3).unwrap(), 3).unwrap();
    assert_eq!(small.normalize(Mono::new(0, 4, 0)), Some(Mono::new(0, 1, 0)));
    assert_eq!(small.normalize(Mono::new(0, -1, 2)), Some(Mono::new(0, 2, 2)));
}
