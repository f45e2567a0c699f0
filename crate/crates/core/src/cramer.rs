//! Square linear systems `x_1 A_1 + … + x_n A_n = B` solved by Cramer's rule.
//!
//! Two routes are available. The cross-product route dots the system with
//! `A_1 × … × Â_i × … × A_n`, which annihilates every column but `A_i`. The
//! determinant-ratio route replaces column `i` by `B`. They agree exactly in
//! exact mode; the determinant route is the runtime default.

use crate::error::{Error, Result};
use crate::matrix::{det, dot, Matrix, Vector};
use crate::scalar::Scalar;
use crate::wedge::cross;

#[derive(Debug, Clone, PartialEq)]
pub struct LinearSystem<S> {
    columns: Vec<Vector<S>>,
    rhs: Vector<S>,
}

impl<S: Scalar> LinearSystem<S> {
    pub fn new(columns: Vec<Vector<S>>, rhs: Vector<S>) -> Result<Self> {
        let n = columns.len();
        if n == 0 {
            return Err(Error::domain("linear system with no unknowns"));
        }
        if let Some((i, c)) = columns.iter().enumerate().find(|(_, c)| c.dim() != n) {
            return Err(Error::shape(
                format!("column A_{} of dimension {n}", i + 1),
                format!("dimension {}", c.dim()),
            ));
        }
        if rhs.dim() != n {
            return Err(Error::shape(
                format!("right-hand side of dimension {n}"),
                format!("dimension {}", rhs.dim()),
            ));
        }
        Ok(Self { columns, rhs })
    }

    /// System whose coefficient matrix is `a` (so `A_i` is column `i` of `a`).
    pub fn from_matrix(a: &Matrix<S>, rhs: Vector<S>) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::shape(
                "square coefficient matrix",
                format!("{}x{}", a.rows(), a.cols()),
            ));
        }
        Self::new((0..a.cols()).map(|j| a.column_vector(j)).collect(), rhs)
    }

    pub fn n(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[Vector<S>] {
        &self.columns
    }

    pub fn rhs(&self) -> &Vector<S> {
        &self.rhs
    }

    pub fn coefficient_matrix(&self) -> Matrix<S> {
        Matrix::from_columns(&self.columns).expect("columns validated on construction")
    }

    /// `Σ x_i A_i − B`.
    pub fn residual(&self, x: &Vector<S>) -> Result<Vector<S>> {
        if x.dim() != self.n() {
            return Err(Error::shape(
                format!("solution of dimension {}", self.n()),
                format!("dimension {}", x.dim()),
            ));
        }
        let mut acc = self.rhs.neg();
        for (xi, col) in x.entries().iter().zip(&self.columns) {
            acc = acc.add(&col.scale(xi))?;
        }
        Ok(acc)
    }

    fn check_nonsingular(&self) -> Result<S> {
        let a = self.coefficient_matrix();
        let d = det(&a)?;
        if S::is_singular(&a) {
            return Err(Error::Singular { det: d.render() });
        }
        Ok(d)
    }

    fn check_component(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.n() {
            return Err(Error::domain(format!(
                "component {i} out of range 1..={}",
                self.n()
            )));
        }
        Ok(())
    }

    /// `det(A_1, …, B, …, A_n)` with `B` in slot `i` (1-based).
    fn replaced_det(&self, i: usize) -> Result<S> {
        let mut cols = self.columns.clone();
        cols[i - 1] = self.rhs.clone();
        det(&Matrix::from_columns(&cols)?)
    }

    /// The cross product of every column except `A_i` (1-based), in order.
    fn cross_without(&self, i: usize) -> Result<Vector<S>> {
        let others: Vec<Vector<S>> = self
            .columns
            .iter()
            .enumerate()
            .filter(|(j, _)| j + 1 != i)
            .map(|(_, c)| c.clone())
            .collect();
        cross(&others)
    }

    fn component_cross(&self, i: usize) -> Result<S> {
        if self.n() == 1 {
            // no factors to cross; the equation is x_1 a = b
            return Ok(self.rhs.get(0).clone() / self.columns[0].get(0).clone());
        }
        let c = self.cross_without(i)?;
        let num = dot(&self.rhs, &c)?;
        let den = dot(&self.columns[i - 1], &c)?;
        Ok(num / den)
    }
}

/// Solves by determinant ratios: `x_i = det(A with column i := B) / det(A)`.
pub fn solve<S: Scalar>(sys: &LinearSystem<S>) -> Result<Vector<S>> {
    let d = sys.check_nonsingular()?;
    let xs = (1..=sys.n())
        .map(|i| Ok(sys.replaced_det(i)? / d.clone()))
        .collect::<Result<Vec<_>>>()?;
    Vector::new(xs)
}

/// Solves by the cross-product quotient
/// `x_i = B·(×_{j≠i} A_j) / A_i·(×_{j≠i} A_j)`.
pub fn solve_by_cross<S: Scalar>(sys: &LinearSystem<S>) -> Result<Vector<S>> {
    sys.check_nonsingular()?;
    let xs = (1..=sys.n())
        .map(|i| sys.component_cross(i))
        .collect::<Result<Vec<_>>>()?;
    Vector::new(xs)
}

/// The `i`-th (1-based) unknown, computed along both routes.
///
/// Returns an invariant error if the routes disagree (exactly in exact mode,
/// within tolerance in float mode).
pub fn solve_component<S: Scalar>(sys: &LinearSystem<S>, i: usize) -> Result<S> {
    sys.check_component(i)?;
    let d = sys.check_nonsingular()?;
    let by_det = sys.replaced_det(i)? / d;
    let by_cross = sys.component_cross(i)?;
    if !by_det.approx_eq(&by_cross) {
        return Err(Error::Invariant(format!(
            "Cramer routes disagree for x_{i}: det-ratio {} vs cross-quotient {}",
            by_det.render(),
            by_cross.render()
        )));
    }
    Ok(by_det)
}
