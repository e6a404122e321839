//! JSON interchange: structure-constant files and verification reports.
//!
//! Sparse entries are arrays whose last element is a rational string:
//!
//! * `mult`, `comult`: `[i, j, k, c]` for `e_i e_j ∋ c e_k` and `Δ(e_i) ∋ c e_j⊗e_k`;
//! * `unit`, `counit`: `[k, c]`;
//! * `antipode`, `phi`, `source`, `target`, `full_antipode`, `algebroid_counit`:
//!   `[i, k, c]` for `f(e_i) ∋ c e_k`;
//! * `action`: `[i, j, k, c]` for `b_i ◁ a_j ∋ c b_k`;
//! * `coaction`: `[i, j, k, c]` for `δ(a_i) ∋ c b_j⊗a_k`;
//! * `algebroid_coproduct`, `lambda_translation`, `mu_translation`:
//!   `[i, j, k, c]` for `f(e_i) ∋ c e_j⊗e_k`.

use serde::{Deserialize, Serialize};

use crate::algebroid::RightBialgebroid;
use crate::bicross::{BicrossData, BicrossedModule, Hopf2Algebra};
use crate::catalog::{CrossedModuleData, FiniteGroup};
use crate::exactlin::{Matrix, Vector};
use crate::hopfcore::{Algebra, HopfData};
use crate::report::CheckReport;
use crate::scalar::Scalar;
use crate::tensorspace::{BasedSpace, LinearMap};

pub type Entry1 = (usize, Scalar);
pub type Entry2 = (usize, usize, Scalar);
pub type Entry3 = (usize, usize, usize, Scalar);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Hopf,
    Bialgebroid,
    Bicross,
    BicrossedModule,
    Hopf2,
    Group,
    CrossedModule,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Hopf => "hopf",
            Kind::Bialgebroid => "bialgebroid",
            Kind::Bicross => "bicross",
            Kind::BicrossedModule => "bicrossed_module",
            Kind::Hopf2 => "hopf2",
            Kind::Group => "group",
            Kind::CrossedModule => "crossed_module",
        }
    }
}

/// An algebra, optionally with coalgebra structure and antipode.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfSection {
    pub name: String,
    pub basis: Vec<String>,
    pub mult: Vec<Entry3>,
    pub unit: Vec<Entry1>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comult: Option<Vec<Entry3>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counit: Option<Vec<Entry1>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<Entry2>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    pub name: String,
    pub field: String,
    pub kind: Kind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mult: Option<Vec<Entry3>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<Entry1>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comult: Option<Vec<Entry3>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counit: Option<Vec<Entry1>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<Entry2>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<HopfSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<HopfSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<HopfSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<Vec<Entry3>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coaction: Option<Vec<Entry3>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: Option<Vec<Entry2>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<Vec<Entry2>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<Vec<Entry2>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebroid_coproduct: Option<Vec<Entry3>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebroid_counit: Option<Vec<Entry2>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub full_antipode: Option<Vec<Entry2>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda_translation: Option<Vec<Entry3>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu_translation: Option<Vec<Entry3>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<FiniteGroup>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub crossed_module: Option<CrossedModuleData>,
}

impl StructureFile {
    fn empty(name: &str, kind: Kind) -> Self {
        StructureFile {
            name: name.to_string(),
            field: "Q".to_string(),
            kind,
            basis: None,
            mult: None,
            unit: None,
            comult: None,
            counit: None,
            antipode: None,
            base: None,
            a: None,
            b: None,
            action: None,
            coaction: None,
            phi: None,
            source: None,
            target: None,
            algebroid_coproduct: None,
            algebroid_counit: None,
            full_antipode: None,
            lambda_translation: None,
            mu_translation: None,
            group: None,
            crossed_module: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }

    pub fn from_json(text: &str) -> Result<Self, InputError> {
        serde_json::from_str(text).map_err(|e| InputError::new("json", e.to_string()))
    }
}

/// A malformed input file; `section` names the offending part.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("section {section}: {message}")]
pub struct InputError {
    pub section: String,
    pub message: String,
}

impl InputError {
    pub fn new(section: &str, message: impl Into<String>) -> Self {
        InputError {
            section: section.to_string(),
            message: message.into(),
        }
    }
}

/// A right bialgebroid together with optional Hopf-algebroid data.
#[derive(Clone, Debug)]
pub struct AlgebroidBundle {
    pub name: String,
    pub algebroid: RightBialgebroid,
    pub full_antipode: Option<LinearMap>,
    pub lambda_translation: Option<LinearMap>,
    pub mu_translation: Option<LinearMap>,
}

#[derive(Clone, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum Bundle {
    Hopf(HopfData),
    Algebroid(AlgebroidBundle),
    Bicross(BicrossData),
    BicrossedModule(BicrossedModule),
    Hopf2(Hopf2Algebra),
    Group(FiniteGroup),
    CrossedModule(CrossedModuleData),
}

impl Bundle {
    pub fn kind(&self) -> Kind {
        match self {
            Bundle::Hopf(_) => Kind::Hopf,
            Bundle::Algebroid(_) => Kind::Bialgebroid,
            Bundle::Bicross(_) => Kind::Bicross,
            Bundle::BicrossedModule(_) => Kind::BicrossedModule,
            Bundle::Hopf2(_) => Kind::Hopf2,
            Bundle::Group(_) => Kind::Group,
            Bundle::CrossedModule(_) => Kind::CrossedModule,
        }
    }

    pub fn to_file(&self, name: &str) -> StructureFile {
        let mut f = StructureFile::empty(name, self.kind());
        match self {
            Bundle::Hopf(h) => put_top(&mut f, &hopf_section(h)),
            Bundle::Algebroid(a) => {
                put_top(&mut f, &algebra_section(name, a.algebroid.total()));
                put_algebroid(&mut f, &a.algebroid);
                f.full_antipode = a.full_antipode.as_ref().map(entries2);
                f.lambda_translation = a
                    .lambda_translation
                    .as_ref()
                    .map(|m| coaction_entries(m, m.domain().dim()));
                f.mu_translation = a.mu_translation.as_ref().map(|m| coaction_entries(m, m.domain().dim()));
            }
            Bundle::Bicross(d) => put_bicross(&mut f, d),
            Bundle::BicrossedModule(m) => {
                put_bicross(&mut f, &m.data);
                f.phi = Some(entries2(&m.phi));
            }
            Bundle::Hopf2(h) => {
                put_top(&mut f, &hopf_section(&h.hopf));
                put_algebroid(&mut f, &h.algebroid);
                f.full_antipode = h.full_antipode.as_ref().map(entries2);
                f.lambda_translation = h
                    .lambda_translation
                    .as_ref()
                    .map(|m| coaction_entries(m, m.domain().dim()));
                f.mu_translation = h.mu_translation.as_ref().map(|m| coaction_entries(m, m.domain().dim()));
            }
            Bundle::Group(g) => f.group = Some(g.clone()),
            Bundle::CrossedModule(c) => f.crossed_module = Some(c.clone()),
        }
        f
    }

    pub fn from_file(f: &StructureFile) -> Result<Bundle, InputError> {
        if f.field != "Q" {
            return Err(InputError::new(
                "field",
                format!("unsupported field {:?}, expected \"Q\"", f.field),
            ));
        }
        Ok(match f.kind {
            Kind::Hopf => Bundle::Hopf(load_hopf(&top_section(f)?, "")?),
            Kind::Bialgebroid => {
                let top = top_section(f)?;
                let total = load_algebra(&top, "")?;
                let (algebroid, full, lt, mt) = load_algebroid(f, total)?;
                Bundle::Algebroid(AlgebroidBundle {
                    name: f.name.clone(),
                    algebroid,
                    full_antipode: full,
                    lambda_translation: lt,
                    mu_translation: mt,
                })
            }
            Kind::Bicross => Bundle::Bicross(load_bicross(f)?),
            Kind::BicrossedModule => {
                let data = load_bicross(f)?;
                let phi = map2(require(&f.phi, "phi")?, data.b.space(), data.a.space(), "phi")?;
                Bundle::BicrossedModule(
                    BicrossedModule::new(data, phi).map_err(|e| InputError::new("phi", e.to_string()))?,
                )
            }
            Kind::Hopf2 => {
                let hopf = load_hopf(&top_section(f)?, "")?;
                let (algebroid, full, lt, mt) = load_algebroid(f, hopf.algebra().clone())?;
                Bundle::Hopf2(Hopf2Algebra {
                    hopf,
                    algebroid,
                    canonical: Default::default(),
                    full_antipode: full,
                    lambda_translation: lt,
                    mu_translation: mt,
                })
            }
            Kind::Group => {
                let g = require(&f.group, "group")?;
                g.validate().map_err(|e| InputError::new("group", e.to_string()))?;
                Bundle::Group(g.clone())
            }
            Kind::CrossedModule => {
                let c = require(&f.crossed_module, "crossed_module")?;
                c.validate()
                    .map_err(|e| InputError::new("crossed_module", e.to_string()))?;
                Bundle::CrossedModule(c.clone())
            }
        })
    }
}

fn require<'a, T>(v: &'a Option<T>, section: &str) -> Result<&'a T, InputError> {
    v.as_ref()
        .ok_or_else(|| InputError::new(section, "required section is missing"))
}

fn sorted<T: Ord>(mut v: Vec<T>) -> Vec<T> {
    v.sort();
    v
}

fn vector_entries(v: &Vector) -> Vec<Entry1> {
    v.iter().map(|(i, c)| (i, c.clone())).collect()
}

fn entries2(m: &LinearMap) -> Vec<Entry2> {
    sorted(m.matrix().entries().into_iter().map(|(k, i, c)| (i, k, c)).collect())
}

fn product_entries(m: &LinearMap, inner: usize) -> Vec<Entry3> {
    sorted(
        m.matrix()
            .entries()
            .into_iter()
            .map(|(k, p, c)| (p / inner, p % inner, k, c))
            .collect(),
    )
}

/// Columns indexed by `i`, rows split as `j * inner + k`.
fn coaction_entries(m: &LinearMap, inner: usize) -> Vec<Entry3> {
    sorted(
        m.matrix()
            .entries()
            .into_iter()
            .map(|(r, i, c)| (i, r / inner, r % inner, c))
            .collect(),
    )
}

fn algebra_section(name: &str, a: &Algebra) -> HopfSection {
    HopfSection {
        name: name.to_string(),
        basis: a.space().labels().to_vec(),
        mult: product_entries(a.mult_map(), a.dim()),
        unit: vector_entries(a.unit()),
        comult: None,
        counit: None,
        antipode: None,
    }
}

fn hopf_section(h: &HopfData) -> HopfSection {
    let mut s = algebra_section(h.name(), h.algebra());
    s.comult = Some(coaction_entries(h.comult_map(), h.dim()));
    s.counit = Some(vector_entries(h.counit()));
    s.antipode = h.antipode().map(entries2);
    s
}

fn put_top(f: &mut StructureFile, s: &HopfSection) {
    f.basis = Some(s.basis.clone());
    f.mult = Some(s.mult.clone());
    f.unit = Some(s.unit.clone());
    f.comult = s.comult.clone();
    f.counit = s.counit.clone();
    f.antipode = s.antipode.clone();
}

fn top_section(f: &StructureFile) -> Result<HopfSection, InputError> {
    Ok(HopfSection {
        name: f.name.clone(),
        basis: require(&f.basis, "basis")?.clone(),
        mult: require(&f.mult, "mult")?.clone(),
        unit: require(&f.unit, "unit")?.clone(),
        comult: f.comult.clone(),
        counit: f.counit.clone(),
        antipode: f.antipode.clone(),
    })
}

fn put_algebroid(f: &mut StructureFile, r: &RightBialgebroid) {
    f.base = Some(hopf_section(r.base()));
    f.source = Some(entries2(r.source()));
    f.target = Some(entries2(r.target()));
    f.algebroid_coproduct = Some(coaction_entries(r.coproduct_rep(), r.dim()));
    f.algebroid_counit = Some(entries2(r.counit()));
}

fn put_bicross(f: &mut StructureFile, d: &BicrossData) {
    f.a = Some(hopf_section(&d.a));
    f.b = Some(hopf_section(&d.b));
    f.action = Some(product_entries(&d.action, d.a.dim()));
    f.coaction = Some(coaction_entries(&d.coaction, d.a.dim()));
}

fn qualified(prefix: &str, section: &str) -> String {
    if prefix.is_empty() {
        section.to_string()
    } else {
        format!("{prefix}.{section}")
    }
}

fn check_index(section: &str, i: usize, bound: usize) -> Result<(), InputError> {
    if i >= bound {
        return Err(InputError::new(
            section,
            format!("index {i} out of range (dimension {bound})"),
        ));
    }
    Ok(())
}

fn vector1(entries: &[Entry1], dim: usize, section: &str) -> Result<Vector, InputError> {
    let mut v = Vector::zeros(dim);
    for (i, c) in entries {
        check_index(section, *i, dim)?;
        v.add_at(*i, c);
    }
    Ok(v)
}

fn map2(entries: &[Entry2], dom: &BasedSpace, cod: &BasedSpace, section: &str) -> Result<LinearMap, InputError> {
    let mut cols = vec![Vector::zeros(cod.dim()); dom.dim()];
    for (i, k, c) in entries {
        check_index(section, *i, dom.dim())?;
        check_index(section, *k, cod.dim())?;
        cols[*i].add_at(*k, c);
    }
    let m = Matrix::from_columns(cod.dim(), cols).map_err(|e| InputError::new(section, e.to_string()))?;
    LinearMap::new(dom.clone(), cod.clone(), m).map_err(|e| InputError::new(section, e.to_string()))
}

/// `[i, j, k, c]` with `i` in `dom` and `(j, k)` in `left ⊗ right`.
fn map3(
    entries: &[Entry3],
    dom: &BasedSpace,
    left: &BasedSpace,
    right: &BasedSpace,
    section: &str,
) -> Result<LinearMap, InputError> {
    let cod = left.tensor(right);
    let mut cols = vec![Vector::zeros(cod.dim()); dom.dim()];
    for (i, j, k, c) in entries {
        check_index(section, *i, dom.dim())?;
        check_index(section, *j, left.dim())?;
        check_index(section, *k, right.dim())?;
        cols[*i].add_at(j * right.dim() + k, c);
    }
    let m = Matrix::from_columns(cod.dim(), cols).map_err(|e| InputError::new(section, e.to_string()))?;
    LinearMap::new(dom.clone(), cod, m).map_err(|e| InputError::new(section, e.to_string()))
}

/// `[i, j, k, c]` with `(i, j)` in `left ⊗ right` and `k` in `cod`.
fn product_map(
    entries: &[Entry3],
    left: &BasedSpace,
    right: &BasedSpace,
    cod: &BasedSpace,
    section: &str,
) -> Result<LinearMap, InputError> {
    let dom = left.tensor(right);
    let mut cols = vec![Vector::zeros(cod.dim()); dom.dim()];
    for (i, j, k, c) in entries {
        check_index(section, *i, left.dim())?;
        check_index(section, *j, right.dim())?;
        check_index(section, *k, cod.dim())?;
        cols[i * right.dim() + j].add_at(*k, c);
    }
    let m = Matrix::from_columns(cod.dim(), cols).map_err(|e| InputError::new(section, e.to_string()))?;
    LinearMap::new(dom, cod.clone(), m).map_err(|e| InputError::new(section, e.to_string()))
}

fn load_algebra(s: &HopfSection, prefix: &str) -> Result<Algebra, InputError> {
    let space =
        BasedSpace::new(s.basis.clone()).map_err(|e| InputError::new(&qualified(prefix, "basis"), e.to_string()))?;
    if space.dim() == 0 {
        return Err(InputError::new(&qualified(prefix, "basis"), "basis is empty"));
    }
    let mult = product_map(&s.mult, &space, &space, &space, &qualified(prefix, "mult"))?;
    let unit = vector1(&s.unit, space.dim(), &qualified(prefix, "unit"))?;
    Algebra::new(space, mult.matrix().clone(), unit)
        .map_err(|e| InputError::new(&qualified(prefix, "mult"), e.to_string()))
}

fn load_hopf(s: &HopfSection, prefix: &str) -> Result<HopfData, InputError> {
    let algebra = load_algebra(s, prefix)?;
    let space = algebra.space().clone();
    let comult_section = qualified(prefix, "comult");
    let comult = map3(
        s.comult
            .as_ref()
            .ok_or_else(|| InputError::new(&comult_section, "required section is missing"))?,
        &space,
        &space,
        &space,
        &comult_section,
    )?;
    let counit_section = qualified(prefix, "counit");
    let counit = vector1(
        s.counit
            .as_ref()
            .ok_or_else(|| InputError::new(&counit_section, "required section is missing"))?,
        space.dim(),
        &counit_section,
    )?;
    let antipode = match &s.antipode {
        Some(e) => Some(
            map2(e, &space, &space, &qualified(prefix, "antipode"))?
                .matrix()
                .clone(),
        ),
        None => None,
    };
    HopfData::new(s.name.clone(), algebra, comult.matrix().clone(), counit, antipode)
        .map_err(|e| InputError::new(&comult_section, e.to_string()))
}

type AlgebroidParts = (
    RightBialgebroid,
    Option<LinearMap>,
    Option<LinearMap>,
    Option<LinearMap>,
);

fn load_algebroid(f: &StructureFile, total: Algebra) -> Result<AlgebroidParts, InputError> {
    let base = load_hopf(require(&f.base, "base")?, "base")?;
    let space = total.space().clone();
    let source = map2(require(&f.source, "source")?, base.space(), &space, "source")?;
    let target = map2(require(&f.target, "target")?, base.space(), &space, "target")?;
    let coproduct = map3(
        require(&f.algebroid_coproduct, "algebroid_coproduct")?,
        &space,
        &space,
        &space,
        "algebroid_coproduct",
    )?;
    let counit = map2(
        require(&f.algebroid_counit, "algebroid_counit")?,
        &space,
        base.space(),
        "algebroid_counit",
    )?;
    let full = f
        .full_antipode
        .as_ref()
        .map(|e| map2(e, &space, &space, "full_antipode"))
        .transpose()?;
    let lt = f
        .lambda_translation
        .as_ref()
        .map(|e| map3(e, &space, &space, &space, "lambda_translation"))
        .transpose()?;
    let mt = f
        .mu_translation
        .as_ref()
        .map(|e| map3(e, &space, &space, &space, "mu_translation"))
        .transpose()?;
    let r = RightBialgebroid::assemble(total, base, source, target, coproduct, counit)
        .map_err(|e| InputError::new("algebroid_coproduct", e.to_string()))?;
    Ok((r, full, lt, mt))
}

fn load_bicross(f: &StructureFile) -> Result<BicrossData, InputError> {
    let a = load_hopf(require(&f.a, "a")?, "a")?;
    let b = load_hopf(require(&f.b, "b")?, "b")?;
    let action = product_map(require(&f.action, "action")?, b.space(), a.space(), b.space(), "action")?;
    let coaction = map3(
        require(&f.coaction, "coaction")?,
        a.space(),
        b.space(),
        a.space(),
        "coaction",
    )?;
    BicrossData::new(a, b, action, coaction).map_err(|e| InputError::new("action", e.to_string()))
}

/// One line of a verification report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportEntry {
    pub id: String,
    pub status: String,
    pub checked: usize,
    pub failures: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<crate::report::Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportFile {
    pub tool: String,
    pub version: String,
    pub input: String,
    pub input_digest: String,
    pub level: String,
    pub entries: Vec<ReportEntry>,
    pub verdict: String,
}

impl ReportFile {
    pub fn new(
        version: &str,
        input: &str,
        input_digest: &str,
        level: &str,
        report: &CheckReport,
        with_witness: bool,
    ) -> Self {
        let entries = report
            .entries
            .iter()
            .map(|e| ReportEntry {
                id: e.id.clone(),
                status: if e.passed { "pass" } else { "fail" }.to_string(),
                checked: e.checked,
                failures: e.failures,
                note: e.note.clone(),
                witness: if with_witness { e.witness.clone() } else { None },
            })
            .collect();
        ReportFile {
            tool: "hopf2".to_string(),
            version: version.to_string(),
            input: input.to_string(),
            input_digest: input_digest.to_string(),
            level: level.to_string(),
            entries,
            verdict: if report.passed() { "pass" } else { "fail" }.to_string(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }
}
