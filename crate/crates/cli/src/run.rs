use std::fmt;

use sha2::{Digest, Sha256};

use hopf2_core::algebroid::{check_algebroid_levels, AlgebroidLevel};
use hopf2_core::bicross::{
    assemble_bicrossproduct, assemble_hopf2, build_bicrossproduct, build_hopf2, build_mirror, check_bicross_conditions,
    check_hopf2_levels, check_peiffer, BicrossError, Hopf2BuildError, MirrorError,
};
use hopf2_core::catalog::{two_group_from_crossed_module, two_group_function_algebroid, CatalogError};
use hopf2_core::format::{Bundle, InputError, ReportFile, StructureFile};
use hopf2_core::hopfcore::{check_hopf_axioms, HopfData, HopfLevel};
use hopf2_core::tensorspace::{format_combination, BasedSpace, LinearMap};
use hopf2_core::{AxiomEntry, CheckReport, Scalar, Vector};

use crate::{builtins, BuildKind, Format, Level, TableMap};

pub enum Outcome {
    Pass,
    Fail,
}

#[derive(Debug)]
pub struct UsageError(String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<InputError> for UsageError {
    fn from(e: InputError) -> Self {
        UsageError(e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> UsageError {
    UsageError(msg.into())
}

struct Loaded {
    bundle: Bundle,
    name: String,
    digest: String,
}

fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

fn load(input: &str) -> Result<Loaded, UsageError> {
    if let Some(name) = input.strip_prefix("builtin:") {
        let bundle = builtins::load(name).ok_or_else(|| {
            usage(format!(
                "unknown builtin {name:?}; available: {}",
                builtins::NAMES.join(", ")
            ))
        })?;
        let text = bundle.to_file(name).to_json();
        return Ok(Loaded {
            bundle,
            name: name.to_string(),
            digest: sha256_hex(text.as_bytes()),
        });
    }
    let bytes = std::fs::read(input).map_err(|e| usage(format!("cannot read {input}: {e}")))?;
    let text = String::from_utf8(bytes.clone()).map_err(|_| usage(format!("{input} is not UTF-8")))?;
    let file = StructureFile::from_json(&text)?;
    let bundle = Bundle::from_file(&file)?;
    Ok(Loaded {
        bundle,
        name: file.name,
        digest: sha256_hex(&bytes),
    })
}

fn level_name(level: Level) -> &'static str {
    match level {
        Level::Hopf => "hopf",
        Level::Bialgebroid => "bialgebroid",
        Level::HopfAlgebroid => "hopf-algebroid",
        Level::FullHopfAlgebroid => "full-hopf-algebroid",
        Level::Hopf2 => "hopf2",
    }
}

fn algebroid_level(level: Level) -> Option<AlgebroidLevel> {
    match level {
        Level::Hopf => None,
        Level::Bialgebroid => Some(AlgebroidLevel::Bialgebroid),
        Level::HopfAlgebroid => Some(AlgebroidLevel::HopfAlgebroid),
        Level::FullHopfAlgebroid => Some(AlgebroidLevel::FullHopfAlgebroid),
        Level::Hopf2 => Some(AlgebroidLevel::Hopf2),
    }
}

fn product_hopf_report(product: Result<HopfData, BicrossError>) -> CheckReport {
    match product {
        Ok(h) => check_hopf_axioms(&h, HopfLevel::Hopf),
        Err(e) => {
            let mut r = CheckReport::new();
            r.push(AxiomEntry::fail("hopf.antipode", e.to_string()));
            r
        }
    }
}

/// The report for `bundle` at `level`; kinds without the requested structure
/// are usage errors.
pub fn evaluate(bundle: &Bundle, level: Level) -> Result<CheckReport, UsageError> {
    let kind = bundle.kind().as_str();
    let unsupported = || usage(format!("level {} does not apply to a {kind} bundle", level_name(level)));
    Ok(match bundle {
        Bundle::Hopf(h) if level == Level::Hopf => check_hopf_axioms(h, HopfLevel::Hopf),
        Bundle::Hopf2(h) => match algebroid_level(level) {
            None => check_hopf_axioms(&h.hopf, HopfLevel::Hopf),
            Some(l) => check_hopf2_levels(h, l),
        },
        Bundle::Algebroid(a) => match algebroid_level(level) {
            Some(l) if l != AlgebroidLevel::Hopf2 => check_algebroid_levels(
                &a.algebroid,
                a.full_antipode.as_ref(),
                a.lambda_translation.as_ref(),
                a.mu_translation.as_ref(),
                l,
            ),
            _ => return Err(unsupported()),
        },
        Bundle::Bicross(d) if level == Level::Hopf => {
            let mut r = check_bicross_conditions(d);
            r.extend(product_hopf_report(assemble_bicrossproduct(d)));
            r
        }
        Bundle::BicrossedModule(m) => {
            let mut r = check_bicross_conditions(&m.data);
            r.extend(check_peiffer(m));
            r.extend(product_hopf_report(assemble_bicrossproduct(&m.data)));
            if let Some(l) = algebroid_level(level) {
                match assemble_hopf2(m) {
                    Ok(h2) => r.extend(check_hopf2_levels(&h2, l)),
                    Err(e) => r.push(AxiomEntry::fail("hopf2.assembly", e.to_string())),
                }
            }
            r
        }
        _ => return Err(unsupported()),
    })
}

fn print_report(title: &str, report: &CheckReport, witness: bool) {
    println!("{title}");
    for e in &report.entries {
        let status = if e.passed { "PASS" } else { "FAIL" };
        let mut line = format!("{status} {} ({} checked", e.id, e.checked);
        if e.failures > 0 {
            line.push_str(&format!(", {} failed", e.failures));
        }
        line.push(')');
        if let Some(n) = &e.note {
            line.push_str(&format!(": {n}"));
        }
        println!("{line}");
        if witness {
            if let Some(w) = &e.witness {
                let side = |v: &[(String, Scalar)]| format_combination(v.iter().map(|(l, c)| (l.as_str(), c)));
                println!("    at [{}]", w.labels.join(", "));
                println!("    lhs = {}", side(&w.lhs));
                println!("    rhs = {}", side(&w.rhs));
            }
        }
    }
    println!("verdict: {}", if report.passed() { "pass" } else { "fail" });
}

fn write_file(path: &str, text: &str) -> Result<(), UsageError> {
    std::fs::write(path, text).map_err(|e| usage(format!("cannot write {path}: {e}")))
}

fn emit_report(
    input: &str,
    digest: &str,
    level: &str,
    report: &CheckReport,
    witness: bool,
    json_report: Option<&str>,
    format: Format,
) -> Result<Outcome, UsageError> {
    let file = ReportFile::new(env!("CARGO_PKG_VERSION"), input, digest, level, report, witness);
    let json = file.to_json();
    if let Some(p) = json_report {
        write_file(p, &json)?;
    }
    match format {
        Format::Json => print!("{json}"),
        Format::Text => print_report(&format!("{input} level={level}"), report, witness),
    }
    Ok(if report.passed() { Outcome::Pass } else { Outcome::Fail })
}

pub fn check(
    input: &str,
    level: Level,
    witness: bool,
    json_report: Option<&str>,
    format: Format,
) -> Result<Outcome, UsageError> {
    let loaded = load(input)?;
    let report = evaluate(&loaded.bundle, level)?;
    emit_report(
        input,
        &loaded.digest,
        level_name(level),
        &report,
        witness,
        json_report,
        format,
    )
}

fn single(id: &str, message: String) -> CheckReport {
    let mut r = CheckReport::new();
    r.push(AxiomEntry::fail(id, message));
    r
}

pub fn build(
    what: BuildKind,
    input: &str,
    out: Option<&str>,
    json_report: Option<&str>,
    witness: bool,
) -> Result<Outcome, UsageError> {
    let loaded = load(input)?;
    let fail = |report: CheckReport, stage: &str| {
        emit_report(
            input,
            &loaded.digest,
            stage,
            &report,
            witness,
            json_report,
            Format::Text,
        )
        .map(|_| Outcome::Fail)
    };
    let (bundle, name) = match (what, &loaded.bundle) {
        (BuildKind::Mirror, Bundle::Hopf(h)) => {
            let pre = check_hopf_axioms(h, HopfLevel::Hopf);
            if !pre.passed() {
                return fail(pre, "build-mirror");
            }
            let m = match build_mirror(h) {
                Ok(m) => m,
                Err(MirrorError::Singular { kernel }) => {
                    let k = h.space().format(&kernel);
                    return fail(
                        single("mirror.antipode-invertible", format!("antipode kills {k}")),
                        "build-mirror",
                    );
                }
                Err(e) => return fail(single("mirror.antipode-invertible", e.to_string()), "build-mirror"),
            };
            match build_hopf2(&m) {
                Ok(h2) => (Bundle::Hopf2(h2), format!("{0}⋈{0}_cop", h.name())),
                Err(Hopf2BuildError::Failed(r)) => return fail(r, "build-mirror"),
                Err(e) => return fail(single("hopf2.assembly", e.to_string()), "build-mirror"),
            }
        }
        (BuildKind::Bicrossproduct, Bundle::Bicross(_) | Bundle::BicrossedModule(_)) => {
            let d = match &loaded.bundle {
                Bundle::Bicross(d) => d,
                Bundle::BicrossedModule(m) => &m.data,
                _ => unreachable!(),
            };
            match build_bicrossproduct(d) {
                Ok(h) => {
                    let name = h.name().to_string();
                    (Bundle::Hopf(h), name)
                }
                Err(BicrossError::Conditions(r)) => return fail(r, "build-bicrossproduct"),
                Err(e) => return fail(single("hopf.antipode", e.to_string()), "build-bicrossproduct"),
            }
        }
        (BuildKind::TwoGroup, Bundle::CrossedModule(c)) => {
            let built = two_group_from_crossed_module(c).and_then(|t| two_group_function_algebroid(&t));
            match built {
                Ok(h2) => (Bundle::Hopf2(h2), format!("A(2-group of {})", loaded.name)),
                Err(CatalogError::Shape { structure, message }) => {
                    return Err(usage(format!("malformed {structure}: {message}")))
                }
                Err(e) => return fail(single("two-group.valid", e.to_string()), "build-two-group"),
            }
        }
        (_, b) => {
            return Err(usage(
                format!("cannot build {what:?} from a {} bundle", b.kind().as_str()).to_lowercase(),
            ));
        }
    };
    let text = bundle.to_file(&name).to_json();
    match out {
        Some(p) => write_file(p, &text)?,
        None => print!("{text}"),
    }
    Ok(Outcome::Pass)
}

pub fn export(input: &str, out: Option<&str>) -> Result<Outcome, UsageError> {
    let loaded = load(input)?;
    let text = loaded.bundle.to_file(&loaded.name).to_json();
    match out {
        Some(p) => write_file(p, &text)?,
        None => print!("{text}"),
    }
    Ok(Outcome::Pass)
}

/// Parses `2·(1⊗gx) − x⊗g`-style expressions over the labels of `space`.
pub fn parse_element(space: &BasedSpace, text: &str) -> Result<Vector, UsageError> {
    let text = text.trim();
    if let Some(i) = space.index_of(text) {
        return Ok(Vector::basis(space.dim(), i));
    }
    let normalized = text.replace('−', "-");
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut sign = false;
    let mut current = String::new();
    let mut depth = 0i32;
    let chars: Vec<char> = normalized.chars().collect();
    for (k, &ch) in chars.iter().enumerate() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        let boundary =
            depth == 0 && (ch == '+' || ch == '-') && (current.trim().is_empty() || (k > 0 && chars[k - 1] == ' '));
        if boundary {
            if !current.trim().is_empty() {
                terms.push((sign, current.trim().to_string()));
            }
            sign = ch == '-';
            current.clear();
        } else {
            current.push(ch);
        }
    }
    if !current.trim().is_empty() {
        terms.push((sign, current.trim().to_string()));
    }
    if terms.is_empty() {
        return Err(usage(format!("empty element {text:?}")));
    }
    let mut v = Vector::zeros(space.dim());
    for (neg, term) in terms {
        let (coeff, label) = match term.split_once(['·', '*']) {
            Some((c, l)) => {
                let c: Scalar = c
                    .trim()
                    .parse()
                    .map_err(|_| usage(format!("bad coefficient in {term:?}")))?;
                (c, l.trim().to_string())
            }
            None => (Scalar::one(), term.clone()),
        };
        let label = match space.index_of(&label) {
            Some(_) => label,
            None => label
                .strip_prefix('(')
                .and_then(|l| l.strip_suffix(')'))
                .map(str::to_string)
                .unwrap_or(label),
        };
        let i = space
            .index_of(&label)
            .ok_or_else(|| usage(format!("unknown label {label:?}")))?;
        let coeff = if neg { -coeff } else { coeff };
        v.add_at(i, &coeff);
    }
    Ok(v)
}

fn table_map(bundle: &Bundle, map: TableMap) -> Result<LinearMap, UsageError> {
    let missing = |what: &str| usage(format!("a {} bundle has no {what}", bundle.kind().as_str()));
    let hopf = |b: &Bundle| -> Option<HopfData> {
        match b {
            Bundle::Hopf(h) => Some(h.clone()),
            Bundle::Hopf2(h) => Some(h.hopf.clone()),
            Bundle::Bicross(d) => assemble_bicrossproduct(d).ok(),
            Bundle::BicrossedModule(m) => assemble_bicrossproduct(&m.data).ok(),
            _ => None,
        }
    };
    let hopf2 = |b: &Bundle| match b {
        Bundle::Hopf2(h) => Some(h.clone()),
        Bundle::BicrossedModule(m) => assemble_hopf2(m).ok(),
        _ => None,
    };
    Ok(match map {
        TableMap::Antipode => hopf(bundle)
            .and_then(|h| h.antipode().cloned())
            .ok_or_else(|| missing("antipode"))?,
        TableMap::Coproduct => hopf(bundle)
            .map(|h| h.comult_map().clone())
            .ok_or_else(|| missing("coproduct"))?,
        TableMap::FullAntipode => match bundle {
            Bundle::Algebroid(a) => a.full_antipode.clone(),
            b => hopf2(b).and_then(|h| h.full_antipode),
        }
        .ok_or_else(|| missing("full antipode"))?,
        TableMap::AlgebroidCoproduct => match bundle {
            Bundle::Algebroid(a) => Some(a.algebroid.coproduct_class().clone()),
            b => hopf2(b).map(|h| h.algebroid.coproduct_class().clone()),
        }
        .ok_or_else(|| missing("algebroid coproduct"))?,
    })
}

fn map_name(map: TableMap) -> &'static str {
    match map {
        TableMap::Antipode => "antipode",
        TableMap::FullAntipode => "full-antipode",
        TableMap::Coproduct => "coproduct",
        TableMap::AlgebroidCoproduct => "algebroid-coproduct",
    }
}

pub fn table(input: &str, map: TableMap, elements: &[String], format: Format) -> Result<Outcome, UsageError> {
    let loaded = load(input)?;
    let f = table_map(&loaded.bundle, map)?;
    let dom = f.domain();
    let elems: Vec<(String, Vector)> = if elements.is_empty() {
        (0..dom.dim())
            .map(|i| (dom.label(i).to_string(), Vector::basis(dom.dim(), i)))
            .collect()
    } else {
        elements
            .iter()
            .map(|e| parse_element(dom, e).map(|v| (dom.format(&v), v)))
            .collect::<Result<_, _>>()?
    };
    let rows: Vec<(String, Vector)> = elems.into_iter().map(|(l, v)| (l, f.apply(&v))).collect();
    match format {
        Format::Text => {
            for (label, image) in &rows {
                println!("{label} ↦ {}", f.codomain().format(image));
            }
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = rows
                .iter()
                .map(|(label, image)| {
                    let coords: Vec<(String, String)> = image
                        .iter()
                        .map(|(i, c)| (f.codomain().label(i).to_string(), c.to_string()))
                        .collect();
                    serde_json::json!({
                        "element": label,
                        "image": f.codomain().format(image),
                        "coordinates": coords,
                    })
                })
                .collect();
            let doc = serde_json::json!({ "input": input, "map": map_name(map), "rows": rows });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
    }
    Ok(Outcome::Pass)
}
