//! The reversing operator `←M` (column order reversed), the exchange matrix
//! `J_n`, palindromic classification, and the closed-form signs relating the
//! vector product to reversal.
//!
//! `J_n` is never materialized on the hot path: reversing is a column
//! permutation. [`exchange_matrix`] builds it explicitly for checks.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{delete_column, Matrix, Vector};
use crate::scalar::Scalar;
use crate::wedge::cross;

/// A sign `±1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignParity {
    Plus,
    Minus,
}

impl SignParity {
    /// `(−1)^e`.
    pub fn from_exponent(e: usize) -> Self {
        if e.is_multiple_of(2) {
            SignParity::Plus
        } else {
            SignParity::Minus
        }
    }

    pub fn value(self) -> i64 {
        match self {
            SignParity::Plus => 1,
            SignParity::Minus => -1,
        }
    }

    pub fn to_scalar<S: Scalar>(self) -> S {
        S::from_i64(self.value())
    }

    pub fn apply<S: Scalar>(self, v: &Vector<S>) -> Vector<S> {
        match self {
            SignParity::Plus => v.clone(),
            SignParity::Minus => v.neg(),
        }
    }
}

impl fmt::Display for SignParity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SignParity::Plus => "+1",
            SignParity::Minus => "-1",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Palindromy {
    /// `←M = M`. The zero matrix is reported here even though it is also
    /// antipalindromic.
    Palindromic,
    /// `←M = −M`.
    Antipalindromic,
    Neither,
}

impl fmt::Display for Palindromy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Palindromy::Palindromic => "palindromic",
            Palindromy::Antipalindromic => "antipalindromic",
            Palindromy::Neither => "neither",
        })
    }
}

/// `←M`: entry `(i, j)` is `m_{i, n−j+1}`.
pub fn reverse_matrix<S: Scalar>(m: &Matrix<S>) -> Matrix<S> {
    let n = m.cols();
    Matrix::from_fn(m.rows(), n, |i, j| m.get(i, n - 1 - j).clone())
}

pub fn reverse_vector<S: Scalar>(v: &Vector<S>) -> Vector<S> {
    Vector::new(v.entries().iter().rev().cloned().collect()).expect("entries already valid")
}

/// Explicit `J_n`, the identity with its columns reversed.
pub fn exchange_matrix<S: Scalar>(n: usize) -> Matrix<S> {
    Matrix::from_fn(
        n,
        n,
        |i, j| {
            if i + j + 1 == n {
                S::one()
            } else {
                S::zero()
            }
        },
    )
}

/// `det(J_n)`: `(−1)^(n/2)` for even `n`, `(−1)^((n+3)/2)` for odd `n`.
pub fn exchange_det(n: usize) -> Result<SignParity> {
    if n == 0 {
        return Err(Error::domain("exchange matrix J_n needs n >= 1"));
    }
    Ok(if n.is_multiple_of(2) {
        SignParity::from_exponent(n / 2)
    } else {
        SignParity::from_exponent((n + 3) / 2)
    })
}

/// Sign `s` with `×(←M_1, …, ←M_{n−1}) = s · ←×(M_1, …, M_{n−1})`:
/// `(−1)^(3n/2)` for even `n`, `(−1)^((3n+1)/2)` for odd `n`.
pub fn prop3_sign(n: usize) -> Result<SignParity> {
    if n < 2 {
        return Err(Error::domain("reversed vector product needs n >= 2"));
    }
    Ok(if n.is_multiple_of(2) {
        SignParity::from_exponent(3 * n / 2)
    } else {
        SignParity::from_exponent((3 * n).div_ceil(2))
    })
}

pub fn classify<S: Scalar>(m: &Matrix<S>) -> Palindromy {
    let r = reverse_matrix(m);
    if r.approx_eq(m) {
        Palindromy::Palindromic
    } else if r.approx_eq(&m.neg()) {
        Palindromy::Antipalindromic
    } else {
        Palindromy::Neither
    }
}

pub fn classify_vector<S: Scalar>(v: &Vector<S>) -> Palindromy {
    classify(&Matrix::from_vectors(std::slice::from_ref(v)).expect("single row"))
}

/// `(←M)^(k)`, checked against `←(M^(n−k+1))` before it is returned.
///
/// `M` must be `(n−1) × n`. A mismatch is an internal invariant error.
pub fn reversed_deleted_column<S: Scalar>(m: &Matrix<S>, k: usize) -> Result<Matrix<S>> {
    let n = m.cols();
    if n < 2 || m.rows() != n - 1 {
        return Err(Error::shape(
            format!("(n-1) x n matrix, i.e. {} x {n}", n.saturating_sub(1)),
            format!("{} x {n}", m.rows()),
        ));
    }
    if k == 0 || k > n {
        return Err(Error::domain(format!("column {k} out of range 1..={n}")));
    }
    let lhs = delete_column(&reverse_matrix(m), k)?;
    let rhs = reverse_matrix(&delete_column(m, n - k + 1)?);
    if lhs != rhs {
        return Err(Error::Invariant(format!(
            "reversed deletion mismatch at k = {k}: {lhs} vs {rhs}"
        )));
    }
    Ok(lhs)
}

/// Vector product of `n − 1` vectors that are all palindromic or all
/// antipalindromic. For `n >= 4` every `M^(k)` keeps two equal (or opposite)
/// columns, so the result must be zero.
pub fn palindromic_cross_check<S: Scalar>(vectors: &[Vector<S>]) -> Result<Vector<S>> {
    let n = vectors.first().map_or(0, Vector::dim);
    if n < 4 {
        return Err(Error::domain(format!(
            "palindromic vanishing holds for n >= 4, got n = {n}"
        )));
    }
    let classes: Vec<Palindromy> = vectors.iter().map(classify_vector).collect();
    let homogeneous = classes.iter().all(|c| *c == Palindromy::Palindromic)
        || classes
            .iter()
            .zip(vectors)
            .all(|(c, v)| *c == Palindromy::Antipalindromic || v.is_zero());
    if !homogeneous {
        return Err(Error::domain(format!(
            "inputs must be all palindromic or all antipalindromic, got [{}]",
            classes
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        )));
    }
    let c = cross(vectors)?;
    if !c.is_zero() {
        return Err(Error::Invariant(format!(
            "vector product of palindromic family is nonzero: {c}"
        )));
    }
    Ok(c)
}
