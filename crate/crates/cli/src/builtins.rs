//! Fixtures addressed as `builtin:<name>`.

use hopf2_core::bicross::{build_hopf2, build_mirror, BicrossedModule};
use hopf2_core::catalog::{
    function_hopf_algebra, group_algebra, misordered_mirror_data, remark_counterexample, sweedler_h4,
    trivial_coaction_mirror_data, two_group_from_crossed_module, two_group_function_algebroid, CrossedModuleData,
    FiniteGroup,
};
use hopf2_core::format::Bundle;
use hopf2_core::hopfcore::HopfData;
use hopf2_core::tensorspace::LinearMap;

pub const NAMES: &[&str] = &[
    "sweedler",
    "group-trivial",
    "group-z2",
    "group-s3",
    "function-z2",
    "function-s3",
    "mirror-h4",
    "mirror-z2",
    "mirror-s3",
    "mirror-h4-data",
    "mirror-z2-data",
    "mirror-s3-data",
    "mirror-h4-trivial-phi",
    "bicross-h4-misordered",
    "bicross-h4-trivial-coaction",
    "z2",
    "s3",
    "crossed-z2",
    "two-group-z2",
    "remark-scenario1",
];

fn z2() -> FiniteGroup {
    FiniteGroup::cyclic(2, "σ")
}

fn mirror(h: &HopfData) -> Bundle {
    let m = build_mirror(h).expect("catalog antipodes are invertible");
    Bundle::Hopf2(build_hopf2(&m).expect("mirror prerequisites hold"))
}

fn mirror_data(h: &HopfData) -> Bundle {
    Bundle::BicrossedModule(build_mirror(h).expect("catalog antipodes are invertible"))
}

/// Mirror data of `H4` with `φ(b) = ε(b) 1`.
fn trivial_phi() -> Bundle {
    let m = build_mirror(&sweedler_h4()).expect("invertible antipode");
    let a = &m.data.a;
    let b = &m.data.b;
    let phi = LinearMap::from_fn(b.space(), a.space(), |i| a.unit().scale(&b.counit_basis(i))).expect("shape");
    Bundle::BicrossedModule(BicrossedModule::new(m.data.clone(), phi).expect("shape"))
}

fn crossed_z2() -> CrossedModuleData {
    CrossedModuleData::trivial(z2(), z2())
}

pub fn load(name: &str) -> Option<Bundle> {
    Some(match name {
        "sweedler" => Bundle::Hopf(sweedler_h4()),
        "group-trivial" => Bundle::Hopf(group_algebra(&FiniteGroup::trivial())),
        "group-z2" => Bundle::Hopf(group_algebra(&z2())),
        "group-s3" => Bundle::Hopf(group_algebra(&FiniteGroup::s3())),
        "function-z2" => Bundle::Hopf(function_hopf_algebra(&z2())),
        "function-s3" => Bundle::Hopf(function_hopf_algebra(&FiniteGroup::s3())),
        "mirror-h4" => mirror(&sweedler_h4()),
        "mirror-z2" => mirror(&group_algebra(&z2())),
        "mirror-s3" => mirror(&group_algebra(&FiniteGroup::s3())),
        "mirror-h4-data" => mirror_data(&sweedler_h4()),
        "mirror-z2-data" => mirror_data(&group_algebra(&z2())),
        "mirror-s3-data" => mirror_data(&group_algebra(&FiniteGroup::s3())),
        "mirror-h4-trivial-phi" => trivial_phi(),
        "bicross-h4-misordered" => Bundle::Bicross(misordered_mirror_data(&sweedler_h4())?),
        "bicross-h4-trivial-coaction" => Bundle::Bicross(trivial_coaction_mirror_data(&sweedler_h4())?),
        "z2" => Bundle::Group(z2()),
        "s3" => Bundle::Group(FiniteGroup::s3()),
        "crossed-z2" => Bundle::CrossedModule(crossed_z2()),
        "two-group-z2" => {
            let t = two_group_from_crossed_module(&crossed_z2()).expect("valid crossed module");
            Bundle::Hopf2(two_group_function_algebroid(&t).expect("valid 2-group"))
        }
        "remark-scenario1" => {
            let t = two_group_from_crossed_module(&crossed_z2()).expect("valid crossed module");
            Bundle::Hopf2(remark_counterexample(&t).expect("valid 2-group"))
        }
        _ => return None,
    })
}
