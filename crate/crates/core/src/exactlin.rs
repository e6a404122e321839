//! Exact sparse linear algebra over the rationals.
//!
//! Everything here is deterministic: vectors iterate in index order and every
//! elimination picks the leftmost pivot column, breaking ties by the first
//! row (in input order) with a nonzero entry.

use std::collections::BTreeMap;

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinError {
    #[error("dimension mismatch in {operand}: expected {expected}, found {found}")]
    DimensionMismatch {
        operand: String,
        expected: usize,
        found: usize,
    },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
}

pub(crate) fn check_dim(operand: &str, expected: usize, found: usize) -> Result<(), LinError> {
    if expected == found {
        Ok(())
    } else {
        Err(LinError::DimensionMismatch {
            operand: operand.to_string(),
            expected,
            found,
        })
    }
}

/// A sparse vector of fixed dimension. Zero entries are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Vector {
    dim: usize,
    entries: BTreeMap<usize, Scalar>,
}

impl Vector {
    pub fn zeros(dim: usize) -> Self {
        Vector {
            dim,
            entries: BTreeMap::new(),
        }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        assert!(i < dim, "basis index {i} out of range for dimension {dim}");
        let mut v = Vector::zeros(dim);
        v.entries.insert(i, Scalar::one());
        v
    }

    pub fn from_dense(values: &[Scalar]) -> Self {
        let mut v = Vector::zeros(values.len());
        for (i, c) in values.iter().enumerate() {
            if !c.is_zero() {
                v.entries.insert(i, c.clone());
            }
        }
        v
    }

    /// Builds a vector from (index, coefficient) pairs; repeated indices are summed.
    pub fn from_pairs<I>(dim: usize, pairs: I) -> Self
    where
        I: IntoIterator<Item = (usize, Scalar)>,
    {
        let mut v = Vector::zeros(dim);
        for (i, c) in pairs {
            v.add_at(i, &c);
        }
        v
    }

    pub fn from_ints(values: &[i64]) -> Self {
        let dense: Vec<Scalar> = values.iter().map(|&n| Scalar::from_int(n)).collect();
        Vector::from_dense(&dense)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize) -> Scalar {
        self.entries.get(&i).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn entry(&self, i: usize) -> Option<&Scalar> {
        self.entries.get(&i)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> + '_ {
        self.entries.iter().map(|(&i, c)| (i, c))
    }

    pub fn first_index(&self) -> Option<usize> {
        self.entries.keys().next().copied()
    }

    pub fn to_dense(&self) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, c) in self.iter() {
            out[i] = c.clone();
        }
        out
    }

    pub fn add_at(&mut self, i: usize, c: &Scalar) {
        assert!(i < self.dim, "index {i} out of range for dimension {}", self.dim);
        if c.is_zero() {
            return;
        }
        match self.entries.get_mut(&i) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.entries.remove(&i);
                }
            }
            None => {
                self.entries.insert(i, c.clone());
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Scalar, other: &Vector) {
        debug_assert_eq!(self.dim, other.dim);
        if c.is_zero() {
            return;
        }
        for (i, x) in other.iter() {
            self.add_at(i, &(c * x));
        }
    }

    pub fn add(&self, other: &Vector) -> Vector {
        let mut out = self.clone();
        out.add_scaled(&Scalar::one(), other);
        out
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        let mut out = self.clone();
        out.add_scaled(&-Scalar::one(), other);
        out
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        if c.is_zero() {
            return Vector::zeros(self.dim);
        }
        Vector {
            dim: self.dim,
            entries: self.entries.iter().map(|(&i, x)| (i, x * c)).collect(),
        }
    }

    pub fn dot(&self, other: &Vector) -> Scalar {
        let (small, large) = if self.nnz() <= other.nnz() {
            (self, other)
        } else {
            (other, self)
        };
        small.iter().filter_map(|(i, x)| large.entry(i).map(|y| x * y)).sum()
    }

    /// Kronecker product with row-major flattening: index `i * other.dim + j`.
    pub fn tensor(&self, other: &Vector) -> Vector {
        let mut out = Vector::zeros(self.dim * other.dim);
        for (i, x) in self.iter() {
            for (j, y) in other.iter() {
                out.entries.insert(i * other.dim + j, x * y);
            }
        }
        out
    }

    fn take_entry(&mut self, i: usize) -> Option<Scalar> {
        self.entries.remove(&i)
    }
}

/// A sparse matrix stored column by column.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    columns: Vec<Vector>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            columns: vec![Vector::zeros(rows); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Matrix {
            rows: n,
            cols: n,
            columns: (0..n).map(|i| Vector::basis(n, i)).collect(),
        }
    }

    pub fn from_columns(rows: usize, columns: Vec<Vector>) -> Result<Self, LinError> {
        for c in &columns {
            check_dim("matrix column", rows, c.dim())?;
        }
        Ok(Matrix {
            rows,
            cols: columns.len(),
            columns,
        })
    }

    /// Builds a matrix from `(row, col, value)` triples; repeated positions are summed.
    pub fn from_entries<I>(rows: usize, cols: usize, entries: I) -> Result<Self, LinError>
    where
        I: IntoIterator<Item = (usize, usize, Scalar)>,
    {
        let mut m = Matrix::zeros(rows, cols);
        for (r, c, x) in entries {
            if r >= rows {
                return Err(LinError::DimensionMismatch {
                    operand: "matrix row index".into(),
                    expected: rows,
                    found: r,
                });
            }
            if c >= cols {
                return Err(LinError::DimensionMismatch {
                    operand: "matrix column index".into(),
                    expected: cols,
                    found: c,
                });
            }
            m.columns[c].add_at(r, &x);
        }
        Ok(m)
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let entries = rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().enumerate().map(move |(j, &x)| (i, j, Scalar::from_int(x))));
        Matrix::from_entries(nrows, ncols, entries).expect("well-formed integer rows")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> &Vector {
        &self.columns[j]
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.columns[c].get(r)
    }

    /// Nonzero entries ordered by `(row, col)`.
    pub fn entries(&self) -> Vec<(usize, usize, Scalar)> {
        let mut out: Vec<_> = self
            .columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, x)| (r, c, x.clone())))
            .collect();
        out.sort_by_key(|a| (a.0, a.1));
        out
    }

    pub fn apply(&self, v: &Vector) -> Result<Vector, LinError> {
        check_dim("matrix-vector operand", self.cols, v.dim())?;
        let mut out = Vector::zeros(self.rows);
        for (j, x) in v.iter() {
            out.add_scaled(x, &self.columns[j]);
        }
        Ok(out)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Matrix) -> Result<Matrix, LinError> {
        check_dim("composition inner dimension", self.cols, other.rows)?;
        let columns = other
            .columns
            .iter()
            .map(|c| self.apply(c))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Matrix {
            rows: self.rows,
            cols: other.cols,
            columns,
        })
    }

    pub fn transpose(&self) -> Matrix {
        let entries = self.entries().into_iter().map(|(r, c, x)| (c, r, x));
        Matrix::from_entries(self.cols, self.rows, entries).expect("transpose in range")
    }

    /// Rows as sparse vectors of dimension `cols`.
    pub fn row_vectors(&self) -> Vec<Vector> {
        let mut rows = vec![Vector::zeros(self.cols); self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, x) in col.iter() {
                rows[r].entries.insert(c, x.clone());
            }
        }
        rows
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Matrix::identity(self.rows)
    }
}

/// A row space kept in fully reduced row-echelon form, keyed by pivot column.
///
/// Insertion order does not affect the final pivot set or rows, since the
/// reduced row-echelon form of a subspace is unique.
#[derive(Clone, Debug)]
pub struct RowEchelon {
    dim: usize,
    rows: BTreeMap<usize, Vector>,
}

impl RowEchelon {
    pub fn new(dim: usize) -> Self {
        RowEchelon {
            dim,
            rows: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.rows.contains_key(&col)
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn row(&self, pivot: usize) -> Option<&Vector> {
        self.rows.get(&pivot)
    }

    /// Remainder of `v` modulo the row space; supported on non-pivot columns only.
    pub fn reduce(&self, v: &Vector) -> Vector {
        let mut out = v.clone();
        let hits: Vec<usize> = v.iter().map(|(i, _)| i).filter(|i| self.is_pivot(*i)).collect();
        for p in hits {
            if let Some(c) = out.take_entry(p) {
                let row = &self.rows[&p];
                for (j, x) in row.iter() {
                    if j != p {
                        out.add_at(j, &-(&c * x));
                    }
                }
            }
        }
        out
    }

    /// Adds `v` to the row space; returns whether the rank grew.
    pub fn insert(&mut self, v: &Vector) -> bool {
        debug_assert_eq!(v.dim(), self.dim);
        let r = self.reduce(v);
        let Some(p) = r.first_index() else {
            return false;
        };
        let inv = r.get(p).recip().expect("nonzero pivot");
        let r = r.scale(&inv);
        for row in self.rows.values_mut() {
            if let Some(c) = row.entry(p).cloned() {
                row.add_scaled(&-c, &r);
            }
        }
        self.rows.insert(p, r);
        true
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.reduce(v).is_zero()
    }
}

/// Outcome of solving `A c = v` for one target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub member: bool,
    pub coefficients: Option<Vector>,
}

/// Gauss–Jordan elimination of `rows` restricted to pivot columns `< pivot_limit`.
/// Returns all rows, the first `pivots.len()` of which carry the pivots; the
/// remaining rows vanish on the first `pivot_limit` columns.
pub(crate) fn gauss_jordan(mut rows: Vec<Vector>, pivot_limit: usize) -> (Vec<Vector>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..pivot_limit {
        if next == rows.len() {
            break;
        }
        let Some(found) = (next..rows.len()).find(|&r| rows[r].entry(col).is_some()) else {
            continue;
        };
        rows.swap(next, found);
        let inv = rows[next].get(col).recip().expect("nonzero pivot");
        let pivot_row = rows[next].scale(&inv);
        for (r, row) in rows.iter_mut().enumerate() {
            if r == next {
                continue;
            }
            if let Some(c) = row.entry(col).cloned() {
                row.add_scaled(&-c, &pivot_row);
            }
        }
        rows[next] = pivot_row;
        pivots.push(col);
        next += 1;
    }
    (rows, pivots)
}

/// Decides for each target whether it lies in the column span of `a`, returning
/// one exact coefficient vector (free variables set to zero) when it does.
pub fn rref_solve(a: &Matrix, targets: &[Vector]) -> Result<Vec<SolveResult>, LinError> {
    for t in targets {
        check_dim("rref_solve target", a.rows(), t.dim())?;
    }
    let n = a.cols();
    let width = n + targets.len();
    let mut rows = Vec::with_capacity(a.rows());
    for (r, row) in a.row_vectors().into_iter().enumerate() {
        let mut aug = Vector::zeros(width);
        for (c, x) in row.iter() {
            aug.add_at(c, x);
        }
        for (k, t) in targets.iter().enumerate() {
            aug.add_at(n + k, &t.get(r));
        }
        rows.push(aug);
    }
    let (reduced, pivots) = gauss_jordan(rows, n);
    let results = (0..targets.len())
        .map(|k| {
            let col = n + k;
            // Rows past the rank have zeros in the first n columns; any nonzero
            // augmented entry there is an inconsistency.
            let mut consistent = true;
            let mut coeffs = Vector::zeros(n);
            for (row, &p) in reduced.iter().zip(&pivots) {
                coeffs.add_at(p, &row.get(col));
            }
            for row in reduced.iter().skip(pivots.len()) {
                if !row.get(col).is_zero() {
                    consistent = false;
                }
            }
            if consistent {
                SolveResult {
                    member: true,
                    coefficients: Some(coeffs),
                }
            } else {
                SolveResult {
                    member: false,
                    coefficients: None,
                }
            }
        })
        .collect();
    Ok(results)
}

/// Either the exact inverse or a nonzero kernel vector proving singularity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Inversion {
    Inverse(Matrix),
    Singular { kernel: Vector },
}

impl Inversion {
    pub fn inverse(self) -> Option<Matrix> {
        match self {
            Inversion::Inverse(m) => Some(m),
            Inversion::Singular { .. } => None,
        }
    }
}

/// Nonzero vector in the kernel of `a`, if any.
pub fn kernel_vector(a: &Matrix) -> Option<Vector> {
    let (reduced, pivots) = gauss_jordan(a.row_vectors(), a.cols());
    let free = (0..a.cols()).find(|c| !pivots.contains(c))?;
    let mut k = Vector::basis(a.cols(), free);
    for (row, &p) in reduced.iter().zip(&pivots) {
        k.add_at(p, &-row.get(free));
    }
    Some(k)
}

pub fn invert_matrix(a: &Matrix) -> Result<Inversion, LinError> {
    if a.rows() != a.cols() {
        return Err(LinError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let rows: Vec<Vector> = a
        .row_vectors()
        .into_iter()
        .enumerate()
        .map(|(r, row)| {
            let mut aug = Vector::zeros(2 * n);
            for (c, x) in row.iter() {
                aug.add_at(c, x);
            }
            aug.add_at(n + r, &Scalar::one());
            aug
        })
        .collect();
    let (reduced, pivots) = gauss_jordan(rows, n);
    if pivots.len() < n {
        let kernel = kernel_vector(a).expect("rank-deficient matrix has a kernel");
        return Ok(Inversion::Singular { kernel });
    }
    let entries = reduced.iter().enumerate().flat_map(|(r, row)| {
        row.iter()
            .filter(|(c, _)| *c >= n)
            .map(move |(c, x)| (r, c - n, x.clone()))
            .collect::<Vec<_>>()
    });
    Ok(Inversion::Inverse(Matrix::from_entries(n, n, entries)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vector {
        Vector::from_ints(v)
    }

    #[test]
    fn solve_identity() {
        let r = rref_solve(&Matrix::identity(2), &[ints(&[3, 5])]).unwrap();
        assert!(r[0].member);
        assert_eq!(r[0].coefficients, Some(ints(&[3, 5])));
    }

    #[test]
    fn solve_scalar_multiple() {
        let a = Matrix::from_int_rows(&[&[1], &[2]]);
        let r = rref_solve(&a, &[ints(&[2, 4]), ints(&[2, 5])]).unwrap();
        assert_eq!(r[0].coefficients, Some(ints(&[2])));
        assert!(!r[1].member);
        assert_eq!(r[1].coefficients, None);
    }

    #[test]
    fn solve_redundant_columns_is_deterministic() {
        // Columns (1,0), (0,1), (1,1); the free third column is set to zero.
        let a = Matrix::from_int_rows(&[&[1, 0, 1], &[0, 1, 1]]);
        let r = rref_solve(&a, &[ints(&[1, -1])]).unwrap();
        assert_eq!(r[0].coefficients, Some(ints(&[1, -1, 0])));
        let again = rref_solve(&a, &[ints(&[1, -1])]).unwrap();
        assert_eq!(r, again);
    }

    #[test]
    fn solve_dimension_mismatch_names_operand() {
        let err = rref_solve(&Matrix::identity(2), &[ints(&[1, 2, 3])]).unwrap_err();
        assert!(matches!(err, LinError::DimensionMismatch { ref operand, .. } if operand.contains("target")));
    }

    #[test]
    fn invert_identity_and_diagonal() {
        assert_eq!(
            invert_matrix(&Matrix::identity(3)).unwrap(),
            Inversion::Inverse(Matrix::identity(3))
        );
        let d = Matrix::from_int_rows(&[&[2, 0], &[0, 3]]);
        let inv = invert_matrix(&d).unwrap().inverse().unwrap();
        assert_eq!(inv.get(0, 0), Scalar::ratio(1, 2));
        assert_eq!(inv.get(1, 1), Scalar::ratio(1, 3));
        assert_eq!(inv.get(0, 1), Scalar::zero());
    }

    #[test]
    fn invert_singular_reports_kernel() {
        let a = Matrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        match invert_matrix(&a).unwrap() {
            Inversion::Singular { kernel } => {
                assert!(!kernel.is_zero());
                assert!(a.apply(&kernel).unwrap().is_zero());
            }
            other => panic!("expected singular, got {other:?}"),
        }
        assert!(matches!(
            invert_matrix(&Matrix::zeros(2, 3)),
            Err(LinError::NotSquare { rows: 2, cols: 3 })
        ));
    }

    #[test]
    fn echelon_is_order_independent() {
        let vs = [
            ints(&[1, 1, 0, 2]),
            ints(&[0, 2, 2, 0]),
            ints(&[1, 3, 2, 2]),
            ints(&[0, 0, 1, 1]),
        ];
        let mut a = RowEchelon::new(4);
        let mut b = RowEchelon::new(4);
        for v in &vs {
            a.insert(v);
        }
        for v in vs.iter().rev() {
            b.insert(v);
        }
        assert_eq!(a.rank(), 3);
        assert_eq!(a.pivots().collect::<Vec<_>>(), b.pivots().collect::<Vec<_>>());
        for p in a.pivots() {
            assert_eq!(a.row(p), b.row(p));
        }
        for v in &vs {
            assert!(a.contains(v));
        }
    }

    fn small_matrix(n: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(-3i64..=3, n * n).prop_map(move |xs| {
            let entries = xs
                .into_iter()
                .enumerate()
                .map(move |(k, x)| (k / n, k % n, Scalar::from_int(x)));
            Matrix::from_entries(n, n, entries).unwrap()
        })
    }

    proptest! {
        #[test]
        fn solved_coefficients_reproduce_target(a in small_matrix(4), c in proptest::collection::vec(-4i64..=4, 4)) {
            let v = a.apply(&ints(&c)).unwrap();
            let r = rref_solve(&a, std::slice::from_ref(&v)).unwrap();
            prop_assert!(r[0].member);
            let coeffs = r[0].coefficients.clone().unwrap();
            prop_assert_eq!(a.apply(&coeffs).unwrap(), v);
        }

        #[test]
        fn inverse_is_two_sided(a in small_matrix(3)) {
            match invert_matrix(&a).unwrap() {
                Inversion::Inverse(inv) => {
                    prop_assert!(inv.compose(&a).unwrap().is_identity());
                    prop_assert!(a.compose(&inv).unwrap().is_identity());
                }
                Inversion::Singular { kernel } => {
                    prop_assert!(!kernel.is_zero());
                    prop_assert!(a.apply(&kernel).unwrap().is_zero());
                }
            }
        }
    }
}
