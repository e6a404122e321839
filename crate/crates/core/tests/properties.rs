use std::sync::OnceLock;

use proptest::prelude::*;

use hopf2_core::bicross::{build_bicrossproduct, build_hopf2, build_mirror, Hopf2Algebra};
use hopf2_core::catalog::{group_algebra, sweedler_h4, FiniteGroup};
use hopf2_core::hopfcore::{convolution_inverse, HopfData};
use hopf2_core::tensorspace::{quotient_by_relations, BasedSpace, LinearMap};
use hopf2_core::{Scalar, Vector};

fn mirror_product() -> &'static HopfData {
    static P: OnceLock<HopfData> = OnceLock::new();
    P.get_or_init(|| build_bicrossproduct(&build_mirror(&sweedler_h4()).unwrap().data).unwrap())
}

fn mirror_z2() -> &'static Hopf2Algebra {
    static M: OnceLock<Hopf2Algebra> = OnceLock::new();
    M.get_or_init(|| build_hopf2(&build_mirror(&group_algebra(&FiniteGroup::cyclic(2, "σ"))).unwrap()).unwrap())
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| Scalar::ratio(n, d))
}

fn vector(dim: usize) -> impl Strategy<Value = Vector> {
    proptest::collection::vec(scalar(), dim).prop_map(|v| Vector::from_dense(&v))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn scalar_field_laws(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if let Some(r) = b.recip() {
            prop_assert_eq!(&(&a * &b) * &r, a.clone());
        }
        let text = a.to_string();
        prop_assert_eq!(text.parse::<Scalar>().unwrap(), a);
    }

    #[test]
    fn mirror_antipode_is_anti_multiplicative(u in vector(16), v in vector(16)) {
        let p = mirror_product();
        prop_assert_eq!(p.s(&p.mul(&u, &v)), p.mul(&p.s(&v), &p.s(&u)));
    }

    #[test]
    fn mirror_coproduct_is_multiplicative(u in vector(16), v in vector(16)) {
        let p = mirror_product();
        let lhs = p.coproduct(&p.mul(&u, &v));
        let rhs = p.algebra().mul_pairs(&p.coproduct(&u), &p.coproduct(&v));
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(p.counit_of(&p.mul(&u, &v)), &p.counit_of(&u) * &p.counit_of(&v));
    }

    #[test]
    fn mirror_counit_and_antipode(u in vector(16)) {
        let p = mirror_product();
        prop_assert_eq!(p.counit_of(&p.s(&u)), p.counit_of(&u));
        prop_assert_eq!(&p.s(p.unit()), p.unit());
    }

    #[test]
    fn full_antipode_of_group_mirror_is_anti_multiplicative(u in vector(4), v in vector(4)) {
        let h = mirror_z2();
        let s = h.full_antipode.as_ref().unwrap();
        let alg = h.hopf.algebra();
        prop_assert_eq!(s.apply(&alg.mul(&u, &v)), alg.mul(&s.apply(&v), &s.apply(&u)));
        prop_assert_eq!(s.apply(&s.apply(&u)), u);
    }

    #[test]
    fn quotient_projection_is_idempotent(
        rels in proptest::collection::vec(vector(5), 0..4),
        v in vector(5),
    ) {
        let space = BasedSpace::numbered("e", 5);
        let q = quotient_by_relations(&space, rels.clone()).unwrap();
        let p = q.project(&v);
        prop_assert_eq!(q.project(&q.lift(&p)), p);
        prop_assert_eq!(q.dim() + q.rank(), 5);
        for r in &rels {
            prop_assert!(q.project(r).is_zero());
            prop_assert!(q.is_zero_class(r));
        }
    }

    #[test]
    fn convolution_inverse_of_identity_is_inversion(n in 1usize..=7) {
        let h = group_algebra(&FiniteGroup::cyclic(n, "r"));
        let id = LinearMap::identity(h.space());
        let s = convolution_inverse(&id, &h, h.algebra()).unwrap();
        prop_assert_eq!(s.matrix(), h.antipode().unwrap().matrix());
    }
}

#[test]
fn sweedler_antipode_has_order_four() {
    let h = sweedler_h4();
    let s = h.antipode().unwrap();
    let s2 = s.compose(s).unwrap();
    assert!(!s2.is_identity());
    assert!(s2.compose(&s2).unwrap().is_identity());
}
