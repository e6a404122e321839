use hopf2_core::algebroid::{check_algebroid_levels, check_bialgebroid_axioms, AlgebroidLevel};
use hopf2_core::bicross::{
    build_bicrossproduct, build_hopf2, build_mirror, check_bicross_conditions, check_hopf2, check_peiffer, BicrossData,
    BicrossError,
};
use hopf2_core::catalog::{
    function_hopf_algebra, group_algebra, misordered_mirror_data, remark_counterexample, sweedler_h4,
    trivial_coaction_mirror_data, two_group_from_crossed_module, two_group_function_algebroid, CrossedModuleData,
    FiniteGroup,
};
use hopf2_core::hopfcore::{check_hopf_axioms, HopfData, HopfLevel};
use hopf2_core::tensorspace::LinearMap;
use hopf2_core::{Scalar, Vector};

fn z2() -> FiniteGroup {
    FiniteGroup::cyclic(2, "σ")
}

fn element(h: &HopfData, terms: &[(&str, i64)]) -> Vector {
    let mut v = Vector::zeros(h.dim());
    for (label, c) in terms {
        let i = h.space().index_of(label).unwrap_or_else(|| panic!("no label {label}"));
        v.add_at(i, &Scalar::from_int(*c));
    }
    v
}

#[test]
fn sweedler_relations() {
    let h = sweedler_h4();
    let (g, x) = (h.basis(1), h.basis(2));
    assert_eq!(h.mul(&x, &g), element(&h, &[("gx", -1)]));
    assert_eq!(h.mul(&g, &x), element(&h, &[("gx", 1)]));
    assert!(h.mul(&x, &x).is_zero());
    assert_eq!(h.mul(&g, &g), h.unit().clone());
    assert_eq!(h.s(&g), g);
    // Δ(gx) = g⊗gx + gx⊗1
    let expect = h.basis(1).tensor(&h.basis(3)).add(&h.basis(3).tensor(&h.basis(0)));
    assert_eq!(h.coproduct(&h.basis(3)), expect);
    let s = h.antipode().unwrap().matrix();
    assert!(!s.compose(s).unwrap().is_identity());
    let s4 = s.compose(s).unwrap().compose(&s.compose(s).unwrap()).unwrap();
    assert!(s4.is_identity());
}

#[test]
fn mirror_h4_action_and_coaction() {
    let h = sweedler_h4();
    let m = build_mirror(&h).unwrap();
    let d = &m.data;
    // x ◁ g = −x
    assert_eq!(d.act_basis(2, 1), &Vector::basis(4, 2).scale(&Scalar::from_int(-1)));
    // δ(x) = x⊗1 + g⊗x − x⊗g
    let pair = |b: usize, a: usize| Vector::basis(16, b * 4 + a);
    let expect = pair(2, 0).add(&pair(1, 2)).sub(&pair(2, 1));
    assert_eq!(d.coaction.apply(&Vector::basis(4, 2)), expect);
    assert!(check_bicross_conditions(d).passed());
    assert!(check_peiffer(&m).passed());
}

#[test]
fn mirror_h4_product_structure() {
    let m = build_mirror(&sweedler_h4()).unwrap();
    let p = build_bicrossproduct(&m.data).unwrap();
    assert_eq!(p.dim(), 16);
    let x1 = element(&p, &[("x⊗1", 1)]);
    let g1 = element(&p, &[("g⊗1", 1)]);
    assert_eq!(p.mul(&x1, &g1), element(&p, &[("gx⊗1", -1)]));
    let one_g = element(&p, &[("1⊗g", 1)]);
    assert_eq!(p.coproduct(&one_g), one_g.tensor(&one_g));
    assert!(check_hopf_axioms(&p, HopfLevel::Hopf).passed());
}

#[test]
fn misordered_coaction_fails_condition_iv_at_x_g() {
    let d = misordered_mirror_data(&sweedler_h4()).unwrap();
    let r = check_bicross_conditions(&d);
    let iv = r.get("bicross.compat-iv").unwrap();
    assert!(!iv.passed);
    assert_eq!(iv.witness.as_ref().unwrap().labels, vec!["x", "g"]);
}

#[test]
fn trivial_coaction_breaks_condition_iii() {
    let d = trivial_coaction_mirror_data(&sweedler_h4()).unwrap();
    match build_bicrossproduct(&d) {
        Err(BicrossError::Conditions(r)) => assert!(r.failing_ids().contains(&"bicross.compat-iii")),
        other => panic!("unexpected {other:?}"),
    }
}

/// `A ⋈ k` with trivial structure maps reproduces `A`, and so does `k ⋈ B`.
#[test]
fn degenerate_factors_reproduce_the_other_factor() {
    let a = sweedler_h4();
    let k = group_algebra(&FiniteGroup::trivial());
    let action = LinearMap::from_fn(&k.space().tensor(a.space()), k.space(), |i| {
        k.unit().scale(&a.counit_basis(i))
    })
    .unwrap();
    let coaction = LinearMap::from_fn(a.space(), &k.space().tensor(a.space()), |i| a.basis(i)).unwrap();
    let p = build_bicrossproduct(&BicrossData::new(a.clone(), k.clone(), action, coaction).unwrap()).unwrap();
    assert_eq!(p.algebra().mult_map().matrix(), a.algebra().mult_map().matrix());
    assert_eq!(p.comult_map().matrix(), a.comult_map().matrix());
    assert_eq!(p.antipode().unwrap().matrix(), a.antipode().unwrap().matrix());

    let b = sweedler_h4();
    let action = LinearMap::from_fn(&b.space().tensor(k.space()), b.space(), |i| b.basis(i)).unwrap();
    let coaction = LinearMap::from_fn(k.space(), &b.space().tensor(k.space()), |_| b.unit().tensor(k.unit())).unwrap();
    let p = build_bicrossproduct(&BicrossData::new(k, b.clone(), action, coaction).unwrap()).unwrap();
    assert_eq!(p.comult_map().matrix(), b.comult_map().matrix());
    assert_eq!(p.counit(), b.counit());
}

#[test]
fn function_algebra_of_z2() {
    let f = function_hopf_algebra(&z2());
    let (f1, fs) = (f.basis(0), f.basis(1));
    assert_eq!(f.coproduct(&fs), f1.tensor(&fs).add(&fs.tensor(&f1)));
    assert_eq!(f.unit(), &f1.add(&fs));
    assert_eq!(f.space().labels(), &["f_1", "f_σ"]);
}

#[test]
fn group_algebra_antipode_is_inverse_permutation() {
    let g = FiniteGroup::s3();
    let h = group_algebra(&g);
    let s = h.antipode().unwrap();
    for i in 0..g.order() {
        assert_eq!(s.image_of_basis(i), &Vector::basis(g.order(), g.inv(i)));
    }
    assert!(s.matrix().compose(s.matrix()).unwrap().is_identity());
}

/// The function algebra is the linear dual of the group algebra: structure
/// constants of one are the transpose of the other's.
#[test]
fn duality_pairing_for_small_groups() {
    for g in [
        FiniteGroup::trivial(),
        z2(),
        FiniteGroup::cyclic(3, "r"),
        FiniteGroup::cyclic(4, "r"),
        z2().product(&z2()),
        FiniteGroup::cyclic(5, "r"),
        FiniteGroup::cyclic(6, "r"),
        FiniteGroup::s3(),
    ] {
        let n = g.order();
        let kg = group_algebra(&g);
        let fg = function_hopf_algebra(&g);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let pair = a * n + b;
                    assert_eq!(kg.mul_basis(a, b).get(c), fg.coproduct_basis(c).get(pair));
                    assert_eq!(fg.mul_basis(a, b).get(c), kg.coproduct_basis(c).get(pair));
                }
            }
            assert_eq!(kg.counit_basis(a), fg.unit().get(a));
            assert_eq!(fg.counit_basis(a), kg.unit().get(a));
            assert_eq!(kg.s_basis(a).get(g.inv(a)), fg.s_basis(g.inv(a)).get(a));
        }
    }
}

#[test]
fn two_group_positive_instance() {
    let t = two_group_from_crossed_module(&CrossedModuleData::trivial(z2(), z2())).unwrap();
    assert_eq!(t.g1.order(), 4);
    assert_eq!(t.src, t.tgt);
    let h2 = two_group_function_algebroid(&t).unwrap();
    assert_eq!(h2.algebroid.base().dim(), 2);
    assert_eq!(h2.algebroid.dim(), 4);
    assert_eq!(h2.algebroid.tensor_b().dim(), 8);
    let r = check_hopf2(&h2);
    assert!(r.passed(), "{:?}", r.failing_ids());
    assert_eq!(r.get("hopf2.cocommutation").unwrap().checked, 4);
}

#[test]
fn groupoid_algebra_fails_counit_condition() {
    let t = two_group_from_crossed_module(&CrossedModuleData::trivial(z2(), z2())).unwrap();
    let h2 = remark_counterexample(&t).unwrap();
    let r = check_hopf2(&h2);
    let first = r.first_failure().unwrap();
    assert_eq!(first.id, "hopf2.counit-coalgebra-map");
    let w = first.witness.as_ref().unwrap();
    assert_eq!(w.lhs.len(), 1);
    assert_eq!(w.rhs.len(), 2);
    let levels = check_algebroid_levels(
        &h2.algebroid,
        h2.full_antipode.as_ref(),
        h2.lambda_translation.as_ref(),
        h2.mu_translation.as_ref(),
        AlgebroidLevel::FullHopfAlgebroid,
    );
    assert!(levels.passed(), "{:?}", levels.failing_ids());
}

#[test]
fn groupoid_algebra_over_one_object_passes_counit_condition() {
    let t = two_group_from_crossed_module(&CrossedModuleData::trivial(FiniteGroup::trivial(), z2())).unwrap();
    let h2 = remark_counterexample(&t).unwrap();
    assert_eq!(h2.algebroid.base().dim(), 1);
    assert!(check_hopf2(&h2).get("hopf2.counit-coalgebra-map").unwrap().passed);
}

#[test]
fn mirror_counit_splits_source_and_target() {
    for h in [sweedler_h4(), group_algebra(&z2())] {
        let h2 = build_hopf2(&build_mirror(&h).unwrap()).unwrap();
        let r = &h2.algebroid;
        for i in 0..r.base().dim() {
            let b = r.base().basis(i);
            assert_eq!(r.eps_of(&r.s_of(&b)), b);
            assert_eq!(r.eps_of(&r.t_of(&b)), b);
        }
        assert!(check_bialgebroid_axioms(r).passed());
    }
}

#[test]
fn mirror_h4_full_antipode_generators() {
    let h2 = build_hopf2(&build_mirror(&sweedler_h4()).unwrap()).unwrap();
    let s = h2.full_antipode.as_ref().unwrap();
    let p = &h2.hopf;
    let img = |l: &str| s.apply(&element(p, &[(l, 1)]));
    assert_eq!(img("g⊗g"), element(p, &[("1⊗g", 1)]));
    assert_eq!(img("x⊗g"), element(p, &[("x⊗g", 1), ("1⊗gx", 2)]));
    assert_eq!(img("g⊗x"), element(p, &[("1⊗x", -1), ("x⊗1", 1)]));
    assert_eq!(img("x⊗x"), element(p, &[("x⊗x", 1)]));
    assert!(!s.matrix().compose(s.matrix()).unwrap().is_identity());
}

#[test]
fn phi_trivial_breaks_condition_4_at_g_x() {
    let m = build_mirror(&sweedler_h4()).unwrap();
    let (a, b) = (&m.data.a, &m.data.b);
    let phi = LinearMap::from_fn(b.space(), a.space(), |i| a.unit().scale(&b.counit_basis(i))).unwrap();
    let m = hopf2_core::bicross::BicrossedModule::new(m.data.clone(), phi).unwrap();
    let r = check_peiffer(&m);
    let c4 = r.get("peiffer.cond-4").unwrap();
    let w = c4.witness.as_ref().unwrap();
    assert_eq!(w.labels, vec!["g", "x"]);
    assert_eq!(w.lhs, vec![("x".to_string(), Scalar::one())]);
    assert_eq!(w.rhs, vec![("x".to_string(), Scalar::from_int(-1))]);
}

#[test]
fn mirror_s3_is_a_hopf2_algebra() {
    let h2 = build_hopf2(&build_mirror(&group_algebra(&FiniteGroup::s3())).unwrap()).unwrap();
    assert_eq!(h2.hopf.dim(), 36);
    let r = check_hopf2(&h2);
    assert!(r.passed(), "{:?}", r.failing_ids());
}
