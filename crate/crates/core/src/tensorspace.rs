//! Based vector spaces, linear maps between them, and quotients by spans of
//! relation vectors.
//!
//! Elements of a quotient are always compared through [`QuotientSpace::project`];
//! two ambient representatives are equal in the quotient exactly when their
//! projections agree.

use std::sync::Arc;

use crate::exactlin::{check_dim, rref_solve, LinError, Matrix, RowEchelon, Vector};
use crate::scalar::Scalar;

/// A vector space with a named, ordered basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BasedSpace {
    labels: Arc<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpaceError {
    #[error("duplicate basis label {0:?}")]
    DuplicateLabel(String),
}

impl BasedSpace {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self, SpaceError> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut sorted: Vec<&String> = labels.iter().collect();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(SpaceError::DuplicateLabel(w[0].clone()));
        }
        Ok(BasedSpace {
            labels: Arc::new(labels),
        })
    }

    /// `prefix0, prefix1, ...`
    pub fn numbered(prefix: &str, dim: usize) -> Self {
        BasedSpace::new((0..dim).map(|i| format!("{prefix}{i}"))).expect("distinct labels")
    }

    /// The ground field as a one-dimensional space.
    pub fn ground() -> Self {
        BasedSpace::new(["1"]).expect("single label")
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Tensor product with row-major basis `(i, j) ↦ i * other.dim() + j`.
    pub fn tensor(&self, other: &BasedSpace) -> BasedSpace {
        let labels = self
            .labels
            .iter()
            .flat_map(|a| other.labels.iter().map(move |b| tensor_label(a, b)))
            .collect();
        BasedSpace {
            labels: Arc::new(labels),
        }
    }

    pub fn zero_vector(&self) -> Vector {
        Vector::zeros(self.dim())
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        Vector::basis(self.dim(), i)
    }

    /// Renders `v` as a sum over basis labels, e.g. `x⊗g + 2·(1⊗gx)`.
    pub fn format(&self, v: &Vector) -> String {
        format_combination(v.iter().map(|(i, c)| (self.label(i), c)))
    }
}

pub fn tensor_label(a: &str, b: &str) -> String {
    let wrap = |s: &str| {
        if s.contains('⊗') {
            format!("({s})")
        } else {
            s.to_string()
        }
    };
    format!("{}⊗{}", wrap(a), wrap(b))
}

/// Human-readable linear combination with unicode minus signs.
pub fn format_combination<'a>(terms: impl IntoIterator<Item = (&'a str, &'a Scalar)>) -> String {
    let mut out = String::new();
    for (k, (label, c)) in terms.into_iter().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        match (k, neg) {
            (0, false) => {}
            (0, true) => out.push('−'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" − "),
        }
        let compound = label.contains(['⊗', ' ', '+', '−', '-']);
        if mag.is_one() {
            out.push_str(label);
        } else if compound {
            out.push_str(&format!("{mag}·({label})"));
        } else {
            out.push_str(&format!("{mag}·{label}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// A linear map between based spaces; the matrix is `codomain.dim() × domain.dim()`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearMap {
    domain: BasedSpace,
    codomain: BasedSpace,
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(domain: BasedSpace, codomain: BasedSpace, matrix: Matrix) -> Result<Self, LinError> {
        check_dim("linear map rows (codomain)", codomain.dim(), matrix.rows())?;
        check_dim("linear map columns (domain)", domain.dim(), matrix.cols())?;
        Ok(LinearMap {
            domain,
            codomain,
            matrix,
        })
    }

    /// Builds the map from the images of the domain basis vectors.
    pub fn from_fn(
        domain: &BasedSpace,
        codomain: &BasedSpace,
        mut image: impl FnMut(usize) -> Vector,
    ) -> Result<Self, LinError> {
        let columns = (0..domain.dim()).map(&mut image).collect();
        let matrix = Matrix::from_columns(codomain.dim(), columns)?;
        LinearMap::new(domain.clone(), codomain.clone(), matrix)
    }

    pub fn identity(space: &BasedSpace) -> Self {
        LinearMap {
            domain: space.clone(),
            codomain: space.clone(),
            matrix: Matrix::identity(space.dim()),
        }
    }

    pub fn domain(&self) -> &BasedSpace {
        &self.domain
    }

    pub fn codomain(&self) -> &BasedSpace {
        &self.codomain
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// Image of the `i`-th domain basis vector.
    pub fn image_of_basis(&self, i: usize) -> &Vector {
        self.matrix.column(i)
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        self.matrix
            .apply(v)
            .unwrap_or_else(|e| panic!("applying linear map: {e}"))
    }

    pub fn try_apply(&self, v: &Vector) -> Result<Vector, LinError> {
        self.matrix.apply(v)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LinearMap) -> Result<LinearMap, LinError> {
        let matrix = self.matrix.compose(&inner.matrix)?;
        LinearMap::new(inner.domain.clone(), self.codomain.clone(), matrix)
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    /// Same matrix, relabelled spaces of equal dimensions.
    pub fn relabel(&self, domain: &BasedSpace, codomain: &BasedSpace) -> Result<LinearMap, LinError> {
        LinearMap::new(domain.clone(), codomain.clone(), self.matrix.clone())
    }
}

/// `ambient / span(relations)` with a canonical basis: the ambient coordinates
/// that are not pivots of the reduced row-echelon form of the relation span.
#[derive(Clone, Debug)]
pub struct QuotientSpace {
    ambient: BasedSpace,
    relations: Vec<Vector>,
    echelon: RowEchelon,
    kept: Vec<usize>,
    position: Vec<Option<usize>>,
    space: BasedSpace,
}

impl QuotientSpace {
    pub fn ambient(&self) -> &BasedSpace {
        &self.ambient
    }

    /// The quotient itself as a based space; labels are those of the kept ambient coordinates.
    pub fn space(&self) -> &BasedSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.kept.len()
    }

    pub fn relations(&self) -> &[Vector] {
        &self.relations
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    /// Ambient coordinate represented by quotient basis element `q`.
    pub fn kept_coordinate(&self, q: usize) -> usize {
        self.kept[q]
    }

    /// Quotient coordinates of the class of `v`.
    pub fn project(&self, v: &Vector) -> Vector {
        debug_assert_eq!(v.dim(), self.ambient.dim());
        let r = self.echelon.reduce(v);
        let mut out = Vector::zeros(self.dim());
        for (i, c) in r.iter() {
            let q = self.position[i].expect("remainder lives on kept coordinates");
            out.add_at(q, c);
        }
        out
    }

    /// Canonical ambient representative of a quotient vector.
    pub fn lift(&self, v: &Vector) -> Vector {
        let mut out = Vector::zeros(self.ambient.dim());
        for (q, c) in v.iter() {
            out.add_at(self.kept[q], c);
        }
        out
    }

    pub fn is_zero_class(&self, v: &Vector) -> bool {
        self.echelon.contains(v)
    }

    pub fn projection(&self) -> LinearMap {
        LinearMap::from_fn(&self.ambient, &self.space, |i| {
            self.project(&Vector::basis(self.ambient.dim(), i))
        })
        .expect("projection dimensions")
    }

    pub fn section(&self) -> LinearMap {
        LinearMap::from_fn(&self.space, &self.ambient, |q| {
            Vector::basis(self.ambient.dim(), self.kept[q])
        })
        .expect("section dimensions")
    }
}

/// Quotient of `ambient` by the span of `relations`. An empty relation list
/// yields a quotient canonically identified with the ambient space.
pub fn quotient_by_relations(ambient: &BasedSpace, relations: Vec<Vector>) -> Result<QuotientSpace, LinError> {
    let mut echelon = RowEchelon::new(ambient.dim());
    for r in &relations {
        check_dim("relation vector", ambient.dim(), r.dim())?;
        echelon.insert(r);
    }
    Ok(finish_quotient(ambient, relations, echelon))
}

/// Like [`quotient_by_relations`] but consumes relations from an iterator
/// without retaining them; the quotient reports an empty relation list.
pub(crate) fn quotient_streaming(ambient: &BasedSpace, relations: impl IntoIterator<Item = Vector>) -> QuotientSpace {
    let mut echelon = RowEchelon::new(ambient.dim());
    for r in relations {
        echelon.insert(&r);
    }
    finish_quotient(ambient, Vec::new(), echelon)
}

fn finish_quotient(ambient: &BasedSpace, relations: Vec<Vector>, echelon: RowEchelon) -> QuotientSpace {
    let kept: Vec<usize> = (0..ambient.dim()).filter(|&i| !echelon.is_pivot(i)).collect();
    let mut position = vec![None; ambient.dim()];
    for (q, &i) in kept.iter().enumerate() {
        position[i] = Some(q);
    }
    let space = BasedSpace {
        labels: Arc::new(kept.iter().map(|&i| ambient.label(i).to_string()).collect()),
    };
    QuotientSpace {
        ambient: ambient.clone(),
        relations,
        echelon,
        kept,
        position,
        space,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InduceError {
    #[error(transparent)]
    Dimension(#[from] LinError),
    #[error("map is not well defined on the quotient: relation {relation_index} has nonzero image")]
    NotWellDefined {
        relation_index: usize,
        relation: Vector,
        image: Vector,
    },
}

/// `cod.projection ∘ f ∘ dom.section`, returned only after checking that
/// `cod.projection ∘ f` kills every relation generator of `dom`.
pub fn induce_map(f: &LinearMap, dom: &QuotientSpace, cod: &QuotientSpace) -> Result<LinearMap, InduceError> {
    check_dim("induce_map domain", dom.ambient().dim(), f.domain().dim())?;
    check_dim("induce_map codomain", cod.ambient().dim(), f.codomain().dim())?;
    for (k, r) in dom.relations().iter().enumerate() {
        let image = cod.project(&f.apply(r));
        if !image.is_zero() {
            return Err(InduceError::NotWellDefined {
                relation_index: k,
                relation: r.clone(),
                image,
            });
        }
    }
    Ok(LinearMap::from_fn(dom.space(), cod.space(), |q| {
        cod.project(f.image_of_basis(dom.kept_coordinate(q)))
    })?)
}

/// Proof attached to a membership decision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MembershipCertificate {
    /// `v = Σ coefficients[k] · generators[k]`.
    Coefficients(Vector),
    /// A functional vanishing on every generator but not on `v`.
    Separating(Vector),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Membership {
    pub member: bool,
    pub certificate: MembershipCertificate,
}

pub fn subspace_membership(space: &BasedSpace, generators: &[Vector], v: &Vector) -> Result<Membership, LinError> {
    check_dim("membership target", space.dim(), v.dim())?;
    for g in generators {
        check_dim("membership generator", space.dim(), g.dim())?;
    }
    let a = Matrix::from_columns(space.dim(), generators.to_vec())?;
    let solved = rref_solve(&a, std::slice::from_ref(v))?.remove(0);
    if let Some(coeffs) = solved.coefficients {
        return Ok(Membership {
            member: true,
            certificate: MembershipCertificate::Coefficients(coeffs),
        });
    }
    let mut echelon = RowEchelon::new(space.dim());
    for g in generators {
        echelon.insert(g);
    }
    let remainder = echelon.reduce(v);
    let j = remainder.first_index().expect("non-member has nonzero remainder");
    // y = e_j - Σ_p row_p[j] e_p reads off coordinate j of the remainder.
    let mut functional = Vector::basis(space.dim(), j);
    for p in echelon.pivots().collect::<Vec<_>>() {
        let c = echelon.row(p).expect("pivot row").get(j);
        functional.add_at(p, &-c);
    }
    Ok(Membership {
        member: false,
        certificate: MembershipCertificate::Separating(functional),
    })
}
