//! Axiom reports with reproducible counterexample witnesses.

use serde::{Deserialize, Serialize};

use crate::exactlin::Vector;
use crate::scalar::Scalar;

/// A failing basis tuple together with both sides of the identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub labels: Vec<String>,
    pub lhs: Vec<(String, Scalar)>,
    pub rhs: Vec<(String, Scalar)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomEntry {
    pub id: String,
    pub passed: bool,
    /// Number of basis tuples (or generators) examined.
    pub checked: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl AxiomEntry {
    pub fn pass(id: &str, checked: usize) -> Self {
        AxiomEntry {
            id: id.to_string(),
            passed: true,
            checked,
            failures: 0,
            witness: None,
            note: None,
        }
    }

    pub fn fail(id: &str, note: impl Into<String>) -> Self {
        AxiomEntry {
            id: id.to_string(),
            passed: false,
            checked: 0,
            failures: 1,
            witness: None,
            note: Some(note.into()),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn with_witness(mut self, w: Witness) -> Self {
        self.witness = Some(w);
        self
    }

    /// Combines sub-checks of one axiom; the first witness wins.
    pub fn merge(id: &str, parts: impl IntoIterator<Item = AxiomEntry>) -> AxiomEntry {
        let mut out = AxiomEntry::pass(id, 0);
        for p in parts {
            out.passed &= p.passed;
            out.checked += p.checked;
            out.failures += p.failures;
            if out.witness.is_none() {
                out.witness = p.witness;
            }
            if out.note.is_none() {
                out.note = p.note;
            }
        }
        out
    }
}

/// Ordered list of axiom outcomes. Order is fixed by the checker that produced it.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub entries: Vec<AxiomEntry>,
}

impl CheckReport {
    pub fn new() -> Self {
        CheckReport::default()
    }

    pub fn push(&mut self, entry: AxiomEntry) {
        self.entries.push(entry);
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.entries.extend(other.entries);
    }

    /// Appends `other` with every id prefixed by `prefix.`.
    pub fn extend_prefixed(&mut self, prefix: &str, other: CheckReport) {
        self.entries.extend(other.entries.into_iter().map(|mut e| {
            e.id = format!("{prefix}.{}", e.id);
            e
        }));
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn get(&self, id: &str) -> Option<&AxiomEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn first_failure(&self) -> Option<&AxiomEntry> {
        self.entries.iter().find(|e| !e.passed)
    }

    pub fn failing_ids(&self) -> Vec<&str> {
        self.entries
            .iter()
            .filter(|e| !e.passed)
            .map(|e| e.id.as_str())
            .collect()
    }
}

/// All index tuples of the given shape in row-major order.
pub fn tuples(dims: &[usize]) -> impl Iterator<Item = Vec<usize>> {
    let total: usize = dims.iter().product();
    let dims = dims.to_vec();
    (0..total).map(move |mut k| {
        let mut t = vec![0; dims.len()];
        for (slot, d) in t.iter_mut().zip(&dims).rev() {
            *slot = k % d;
            k /= d;
        }
        t
    })
}

pub(crate) fn coordinates(v: &Vector, label: &dyn Fn(usize) -> String) -> Vec<(String, Scalar)> {
    v.iter().map(|(i, c)| (label(i), c.clone())).collect()
}

/// Checks `lhs == rhs` for every tuple, in order, recording the number of
/// failures and the first failing tuple as witness.
pub(crate) fn verify(
    id: &str,
    tuple_iter: impl IntoIterator<Item = Vec<usize>>,
    describe: &dyn Fn(&[usize]) -> Vec<String>,
    coord_label: &dyn Fn(usize) -> String,
    mut eval: impl FnMut(&[usize]) -> (Vector, Vector),
) -> AxiomEntry {
    let mut entry = AxiomEntry::pass(id, 0);
    for t in tuple_iter {
        entry.checked += 1;
        let (lhs, rhs) = eval(&t);
        if lhs != rhs {
            entry.passed = false;
            entry.failures += 1;
            if entry.witness.is_none() {
                entry.witness = Some(Witness {
                    labels: describe(&t),
                    indices: t,
                    lhs: coordinates(&lhs, coord_label),
                    rhs: coordinates(&rhs, coord_label),
                });
            }
        }
    }
    entry
}
