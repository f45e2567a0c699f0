//! Dense row-major matrices and vectors over a [`Scalar`], plus the minor and
//! column-deletion operations every product in this crate is built from.

use std::fmt;

use crate::combinadics::{complement, IndexSet};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct Vector<S> {
    entries: Vec<S>,
}

impl<S: Scalar> Vector<S> {
    pub fn new(entries: Vec<S>) -> Result<Self> {
        for e in &entries {
            e.validate().map_err(Error::Domain)?;
        }
        Ok(Self { entries })
    }

    pub fn from_i64(values: &[i64]) -> Self {
        Self {
            entries: values.iter().map(|&v| S::from_i64(v)).collect(),
        }
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            entries: vec![S::zero(); dim],
        }
    }

    /// The `i`-th standard basis vector (0-based `i`).
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.entries[i] = S::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[S] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<S> {
        self.entries
    }

    pub fn get(&self, i: usize) -> &S {
        &self.entries[i]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero_value)
    }

    /// Componentwise equality under the scalar's comparison policy.
    pub fn approx_eq(&self, other: &Self) -> bool {
        self.dim() == other.dim()
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|(a, b)| a.approx_eq(b))
    }

    pub fn scale(&self, s: &S) -> Self {
        Self {
            entries: self.entries.iter().map(|x| x.clone() * s.clone()).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn neg(&self) -> Self {
        Self {
            entries: self.entries.iter().cloned().map(|x| -x).collect(),
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(S, S) -> S) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::shape(
                format!("vector of dim {}", self.dim()),
                format!("dim {}", other.dim()),
            ));
        }
        Ok(Self {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(a.clone(), b.clone()))
                .collect(),
        })
    }
}

impl<S: Scalar> fmt::Display for Vector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(Scalar::render).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `Σ u_i v_i`.
pub fn dot<S: Scalar>(u: &Vector<S>, v: &Vector<S>) -> Result<S> {
    if u.dim() != v.dim() {
        return Err(Error::shape(
            format!("vectors of equal dimension ({})", u.dim()),
            format!("dimension {}", v.dim()),
        ));
    }
    Ok(u.entries
        .iter()
        .zip(&v.entries)
        .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone()))
}

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    entries: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn new(rows: usize, cols: usize, entries: Vec<S>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::shape(
                format!("{} entries for a {rows}x{cols} matrix", rows * cols),
                format!("{} entries", entries.len()),
            ));
        }
        for e in &entries {
            e.validate().map_err(Error::Domain)?;
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    /// Stacks rows; all rows must have the same length.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != cols) {
            return Err(Error::shape(
                format!("{cols} entries in every row"),
                format!("{} entries in row {}", r.len(), i + 1),
            ));
        }
        let n = rows.len();
        Self::new(n, cols, rows.into_iter().flatten().collect())
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| S::from_i64(v)).collect())
                .collect(),
        )
    }

    pub fn from_vectors(rows: &[Vector<S>]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|v| v.entries.clone()).collect())
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vector<S>]) -> Result<Self> {
        Ok(Self::from_vectors(cols)?.transpose())
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = S::one();
        }
        m
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![S::zero(); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vector(&self, i: usize) -> Vector<S> {
        Vector {
            entries: self.row(i).to_vec(),
        }
    }

    pub fn row_vectors(&self) -> Vec<Vector<S>> {
        (0..self.rows).map(|i| self.row_vector(i)).collect()
    }

    pub fn column_vector(&self, j: usize) -> Vector<S> {
        Vector {
            entries: (0..self.rows).map(|i| self.get(i, j).clone()).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn neg(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().cloned().map(|x| -x).collect(),
        }
    }

    pub fn swap_rows(&self, a: usize, b: usize) -> Self {
        let mut rows: Vec<Vec<S>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        rows.swap(a, b);
        Self::from_rows(rows).expect("same shape")
    }

    pub fn with_row(&self, i: usize, row: &Vector<S>) -> Result<Self> {
        if row.dim() != self.cols {
            return Err(Error::shape(
                format!("row of length {}", self.cols),
                format!("length {}", row.dim()),
            ));
        }
        let mut m = self.clone();
        m.entries[i * self.cols..(i + 1) * self.cols].clone_from_slice(row.entries());
        Ok(m)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::shape(
                format!("left operand with {} columns", other.rows),
                format!("{}x{}", self.rows, self.cols),
            ));
        }
        Ok(Self::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).fold(S::zero(), |acc, t| {
                acc + self.get(i, t).clone() * other.get(t, j).clone()
            })
        }))
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|(a, b)| a.approx_eq(b))
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> S) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self {
            rows,
            cols,
            entries,
        }
    }

    /// Selects the columns listed in `s`, keeping their order.
    pub fn select_columns(&self, s: &IndexSet) -> Result<Self> {
        if s.ambient() != self.cols {
            return Err(Error::shape(
                format!("index set over {} columns", self.cols),
                format!("index set over {} columns", s.ambient()),
            ));
        }
        let idx = s.zero_based();
        Ok(Self::from_fn(self.rows, idx.len(), |i, j| {
            self.get(i, idx[j]).clone()
        }))
    }

    /// One-line-per-row text form accepted by [`parse_matrix`].
    pub fn to_text_rows(&self) -> Vec<String> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(Scalar::render)
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect()
    }
}

impl<S: Scalar> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.to_text_rows().join("; "))
    }
}

/// Determinant of a square matrix (Bareiss for exact, pivoted LU for float).
pub fn det<S: Scalar>(m: &Matrix<S>) -> Result<S> {
    if !m.is_square() {
        return Err(Error::shape(
            "square matrix",
            format!("{}x{}", m.rows(), m.cols()),
        ));
    }
    Ok(S::determinant(m))
}

/// The `k × k` submatrix `U_{i1…ik}` formed by the columns of `s`.
pub fn minor<S: Scalar>(u: &Matrix<S>, s: &IndexSet) -> Result<Matrix<S>> {
    if s.len() != u.rows() {
        return Err(Error::shape(
            format!("index set of length {} (one per row)", u.rows()),
            format!("length {}", s.len()),
        ));
    }
    u.select_columns(s)
}

/// `X_k`: the matrix with its `k`-th (1-based) column removed.
pub fn delete_column<S: Scalar>(m: &Matrix<S>, k: usize) -> Result<Matrix<S>> {
    let n = m.cols();
    if k == 0 || k > n {
        return Err(Error::domain(format!("column {k} out of range 1..={n}")));
    }
    Ok(Matrix::from_fn(m.rows(), n - 1, |i, j| {
        if j + 1 < k {
            m.get(i, j).clone()
        } else {
            m.get(i, j + 1).clone()
        }
    }))
}

/// Same result as [`delete_column`], routed through [`minor`] and
/// [`complement`].
pub fn delete_column_via_minor<S: Scalar>(m: &Matrix<S>, k: usize) -> Result<Matrix<S>> {
    let n = m.cols();
    let deleted = IndexSet::new(&[k], n)?;
    if n < 2 {
        return Err(Error::domain("cannot delete the only column"));
    }
    m.select_columns(&complement(&deleted)?)
}

/// Parses the whitespace-separated matrix text format.
///
/// Blank lines and lines starting with `#` are skipped. Row and column counts
/// are inferred; ragged rows are rejected with the offending line number.
pub fn parse_matrix<S: Scalar>(text: &str) -> Result<Matrix<S>> {
    let rows = parse_rows::<S>(text.lines().enumerate())?;
    matrix_from_parsed(rows)
}

pub(crate) fn matrix_from_parsed<S: Scalar>(rows: Vec<(usize, Vec<S>)>) -> Result<Matrix<S>> {
    let Some((_, first)) = rows.first() else {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: "no matrix rows found".into(),
        });
    };
    let cols = first.len();
    if let Some((line, r)) = rows.iter().find(|(_, r)| r.len() != cols) {
        return Err(Error::Parse {
            line: *line,
            column: 1,
            message: format!("ragged row: expected {cols} entries, found {}", r.len()),
        });
    }
    Matrix::from_rows(rows.into_iter().map(|(_, r)| r).collect())
}

/// Tokenizes `(line_index, line)` pairs into rows tagged with 1-based line
/// numbers.
pub(crate) fn parse_rows<'a, S: Scalar>(
    lines: impl Iterator<Item = (usize, &'a str)>,
) -> Result<Vec<(usize, Vec<S>)>> {
    let mut rows = Vec::new();
    for (idx, line) in lines {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        rows.push((idx + 1, parse_line(line, idx + 1)?));
    }
    Ok(rows)
}

pub(crate) fn parse_line<S: Scalar>(line: &str, line_no: usize) -> Result<Vec<S>> {
    let mut out = Vec::new();
    let mut chars = line.char_indices().peekable();
    while let Some(&(start, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        let mut end = start;
        while let Some(&(i, c)) = chars.peek() {
            if c.is_whitespace() {
                break;
            }
            end = i + c.len_utf8();
            chars.next();
        }
        let token = &line[start..end];
        let value = S::parse_token(token).map_err(|message| Error::Parse {
            line: line_no,
            column: line[..start].chars().count() + 1,
            message,
        })?;
        out.push(value);
    }
    Ok(out)
}
