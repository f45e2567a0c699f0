//! The generalized vector product over `R^n` and the exterior map
//! `(R^n)^k → R^C(n,k)`.
//!
//! The exterior map stores its components in *reversed* lexicographic order
//! with an alternating sign: the minor on the column subset of rank `r` lands
//! at 1-based position `C(n,k) − r + 1` multiplied by `(−1)^(C(n,k) − r)`.
//! With that convention `k = n − 1` reproduces the vector product exactly.
//! [`WedgeVector::to_plucker`] converts to the unsigned lexicographic ordering.

use crate::combinadics::{binomial, subsets};
use crate::error::{Error, Result};
use crate::matrix::{delete_column, det, minor, Matrix, Vector};
use crate::scalar::{sign_pow, Scalar};

/// Upper bound on `C(n, k)` accepted by [`wedge`] unless configured otherwise.
pub const DEFAULT_COMPONENT_CAP: usize = 1_000_000;

/// Ordering/sign convention carried by a [`WedgeVector`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convention {
    /// Reverse-lexicographic positions with sign `(−1)^(C(n,k) − r)`.
    PaperReversed,
}

impl Convention {
    pub fn tag(self) -> &'static str {
        match self {
            Convention::PaperReversed => "paper-reversed",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WedgeVector<S> {
    n: usize,
    k: usize,
    components: Vector<S>,
}

impl<S: Scalar> WedgeVector<S> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn convention(&self) -> Convention {
        Convention::PaperReversed
    }

    pub fn components(&self) -> &Vector<S> {
        &self.components
    }

    pub fn into_vector(self) -> Vector<S> {
        self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_zero()
    }

    /// Unsigned lexicographic Plücker coordinates: entry `r − 1` is the minor
    /// on the rank-`r` column subset.
    pub fn to_plucker(&self) -> Vector<S> {
        let c = self.components.dim();
        let entries = (1..=c)
            .map(|r| sign_pow::<S>(c - r) * self.components.get(c - r).clone())
            .collect();
        Vector::new(entries).expect("finite components stay finite")
    }

    /// Inverse of [`WedgeVector::to_plucker`].
    pub fn from_plucker(n: usize, k: usize, plucker: &Vector<S>) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::domain(format!(
                "exterior map requires 1 <= k <= n (n = {n}, k = {k})"
            )));
        }
        let c = binomial(n, k)?;
        if plucker.dim() != c {
            return Err(Error::shape(
                format!("{c} Plücker coordinates for n = {n}, k = {k}"),
                format!("{}", plucker.dim()),
            ));
        }
        let entries = (1..=c)
            .map(|pos| {
                let r = c - pos + 1;
                sign_pow::<S>(c - r) * plucker.get(r - 1).clone()
            })
            .collect();
        Ok(Self {
            n,
            k,
            components: Vector::new(entries)?,
        })
    }
}

/// Generalized vector product of `n − 1` vectors in `R^n`:
/// `Σ_k (−1)^(1+k) det(X_k) e_k`, where `X_k` drops column `k`.
pub fn cross<S: Scalar>(rows: &[Vector<S>]) -> Result<Vector<S>> {
    let n = rows.first().map_or(0, Vector::dim);
    if n < 2 {
        return Err(Error::domain(
            "vector product needs at least one factor in R^n with n >= 2",
        ));
    }
    if rows.len() != n - 1 {
        return Err(Error::shape(
            format!("{} factors in R^{n}", n - 1),
            format!("{} factors", rows.len()),
        ));
    }
    cross_matrix(&Matrix::from_vectors(rows)?)
}

/// [`cross`] applied to the rows of an `(n − 1) × n` matrix.
pub fn cross_matrix<S: Scalar>(m: &Matrix<S>) -> Result<Vector<S>> {
    let n = m.cols();
    if n < 2 || m.rows() != n - 1 {
        return Err(Error::shape(
            format!(
                "(n-1) x n matrix with n >= 2, i.e. {} x {n}",
                n.saturating_sub(1)
            ),
            format!("{} x {n}", m.rows()),
        ));
    }
    let entries = (1..=n)
        .map(|k| Ok(sign_pow::<S>(1 + k) * det(&delete_column(m, k)?)?))
        .collect::<Result<Vec<_>>>()?;
    Vector::new(entries)
}

/// Exterior product with the default component cap.
pub fn wedge<S: Scalar>(rows: &[Vector<S>]) -> Result<WedgeVector<S>> {
    wedge_with_cap(rows, DEFAULT_COMPONENT_CAP)
}

pub fn wedge_with_cap<S: Scalar>(rows: &[Vector<S>], cap: usize) -> Result<WedgeVector<S>> {
    if rows.is_empty() {
        return Err(Error::domain("exterior product needs at least one factor"));
    }
    wedge_matrix_with_cap(&Matrix::from_vectors(rows)?, cap)
}

pub fn wedge_matrix<S: Scalar>(u: &Matrix<S>) -> Result<WedgeVector<S>> {
    wedge_matrix_with_cap(u, DEFAULT_COMPONENT_CAP)
}

/// Exterior product of the rows of a `k × n` matrix.
///
/// Each component is an independent minor determinant.
pub fn wedge_matrix_with_cap<S: Scalar>(u: &Matrix<S>, cap: usize) -> Result<WedgeVector<S>> {
    let (k, n) = (u.rows(), u.cols());
    if n == 0 || k == 0 {
        return Err(Error::domain("exterior product of an empty matrix"));
    }
    if k > n {
        return Err(Error::domain(format!(
            "exterior product requires k <= n (k = {k}, n = {n})"
        )));
    }
    let c = binomial(n, k)?;
    if c > cap {
        return Err(Error::Capacity {
            what: format!("wedge of {k} vectors in R^{n}"),
            requested: c.to_string(),
            cap,
        });
    }
    let mut out = vec![S::zero(); c];
    for (idx, s) in subsets(n, k)?.enumerate() {
        let r = idx + 1;
        out[c - r] = sign_pow::<S>(c - r) * det(&minor(u, &s)?)?;
    }
    Ok(WedgeVector {
        n,
        k,
        components: Vector::new(out)?,
    })
}

/// `k = 1` exterior product for even `n`: `(u_n, −u_{n−1}, …, u_2, −u_1)`.
pub fn wedge_k1<S: Scalar>(u: &Vector<S>) -> Result<WedgeVector<S>> {
    if u.dim() == 0 || !u.dim().is_multiple_of(2) {
        return Err(Error::domain(format!(
            "single-factor orthogonal form needs even n >= 2, got n = {}",
            u.dim()
        )));
    }
    wedge(std::slice::from_ref(u))
}

/// The one component of the exterior product of the rows of a square matrix.
pub fn det_via_wedge<S: Scalar>(u: &Matrix<S>) -> Result<S> {
    if !u.is_square() {
        return Err(Error::shape(
            "square matrix",
            format!("{}x{}", u.rows(), u.cols()),
        ));
    }
    let w = wedge_matrix(u)?;
    Ok(w.components.get(0).clone())
}
