//! Field elements in two realizations: exact rationals and binary64 floats.
//!
//! A matrix or vector holds a single scalar type, so mixing modes inside one
//! object is ruled out by the type system. Operations that need a mode-specific
//! strategy (determinants, tolerance, parsing) dispatch through [`Scalar`].

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::matrix::Matrix;

/// Arbitrary-precision rational; always reduced with a positive denominator.
pub type Rational = BigRational;

pub const REL_TOL: f64 = 1e-9;
pub const ABS_FLOOR: f64 = 1e-12;
/// Pivot threshold, relative to the largest row norm, below which a float
/// matrix is treated as singular.
pub const PIVOT_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Float,
}

impl Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::Exact => "exact",
            Mode::Float => "float",
        })
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "exact" => Ok(Mode::Exact),
            "float" => Ok(Mode::Float),
            other => Err(format!("unknown mode '{other}' (expected exact|float)")),
        }
    }
}

pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    const MODE: Mode;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;

    /// Parses one matrix-file token.
    fn parse_token(token: &str) -> std::result::Result<Self, String>;

    /// Rejects values that may not enter a matrix (non-finite floats).
    fn validate(&self) -> std::result::Result<(), String> {
        Ok(())
    }

    /// Equality under the mode's comparison policy: exact for rationals,
    /// relative tolerance with an absolute floor for floats.
    fn approx_eq(&self, other: &Self) -> bool;

    fn is_zero_value(&self) -> bool {
        self.approx_eq(&Self::zero())
    }

    /// Determinant of a square matrix.
    fn determinant(m: &Matrix<Self>) -> Self;

    /// Whether a square matrix should be treated as singular.
    fn is_singular(m: &Matrix<Self>) -> bool;

    /// Textual form that [`Scalar::parse_token`] reads back to the same value.
    fn render(&self) -> String {
        self.to_string()
    }
}

pub fn parse_rational(token: &str) -> std::result::Result<Rational, String> {
    let (num, den) = match token.split_once('/') {
        Some((p, q)) => (p, Some(q)),
        None => (token, None),
    };
    let parse_int = |s: &str| {
        s.parse::<BigInt>()
            .map_err(|_| format!("'{token}' is not an exact value (expected p or p/q)"))
    };
    let p = parse_int(num)?;
    match den {
        None => Ok(Rational::from_integer(p)),
        Some(q) => {
            let q = parse_int(q)?;
            if q.is_zero() {
                return Err(format!("'{token}' has a zero denominator"));
            }
            Ok(Rational::new(p, q))
        }
    }
}

impl Scalar for Rational {
    const MODE: Mode = Mode::Exact;

    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn from_i64(v: i64) -> Self {
        Rational::from_integer(v.into())
    }

    fn parse_token(token: &str) -> std::result::Result<Self, String> {
        parse_rational(token)
    }

    fn approx_eq(&self, other: &Self) -> bool {
        self == other
    }

    fn determinant(m: &Matrix<Self>) -> Self {
        bareiss_det(m)
    }

    fn is_singular(m: &Matrix<Self>) -> bool {
        bareiss_det(m).is_zero()
    }
}

impl Scalar for f64 {
    const MODE: Mode = Mode::Float;

    fn zero() -> Self {
        0.0
    }

    fn one() -> Self {
        1.0
    }

    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn parse_token(token: &str) -> std::result::Result<Self, String> {
        let v: f64 = token
            .parse()
            .map_err(|_| format!("'{token}' is not a decimal literal"))?;
        v.validate()?;
        Ok(v)
    }

    fn validate(&self) -> std::result::Result<(), String> {
        if self.is_finite() {
            Ok(())
        } else {
            Err(format!("non-finite value {self}"))
        }
    }

    fn approx_eq(&self, other: &Self) -> bool {
        let diff = (self - other).abs();
        diff <= ABS_FLOOR || diff <= REL_TOL * self.abs().max(other.abs())
    }

    fn determinant(m: &Matrix<Self>) -> Self {
        lu_det(m).0
    }

    fn is_singular(m: &Matrix<Self>) -> bool {
        lu_det(m).1
    }

    fn render(&self) -> String {
        // `{:?}` keeps a trailing `.0` and round-trips exactly.
        format!("{self:?}")
    }
}

/// Fraction-free Bareiss elimination.
///
/// Each row is first scaled by the lcm of its denominators so that the
/// elimination runs over integers; every division inside the loop is exact.
pub fn bareiss_det(m: &Matrix<Rational>) -> Rational {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows();
    if n == 0 {
        return <Rational as One>::one();
    }
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let row = m.row(i);
            let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= &lcm;
            row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
        })
        .collect();

    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    negate = !negate;
                }
                None => return <Rational as Zero>::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = Rational::new(a[n - 1][n - 1].clone(), scale);
    if negate {
        -det
    } else {
        det
    }
}

/// Partial-pivot LU determinant. The flag reports a pivot below
/// `PIVOT_TOL` times the largest row norm.
pub fn lu_det(m: &Matrix<f64>) -> (f64, bool) {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows();
    if n == 0 {
        return (1.0, false);
    }
    let max_row_norm = (0..n)
        .map(|i| m.row(i).iter().map(|x| x * x).sum::<f64>().sqrt())
        .fold(0.0, f64::max);
    let threshold = PIVOT_TOL * max_row_norm;
    let mut a: Vec<Vec<f64>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut det = 1.0;
    let mut singular = max_row_norm == 0.0;
    for k in 0..n {
        let p = (k..n)
            .max_by(|&x, &y| a[x][k].abs().total_cmp(&a[y][k].abs()))
            .unwrap();
        if a[p][k].abs() <= threshold {
            singular = true;
        }
        if a[p][k] == 0.0 {
            return (0.0, true);
        }
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        let pivot = a[k][k];
        det *= pivot;
        let (top, below) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in below {
            let f = row[k] / pivot;
            for (x, &p) in row[k + 1..].iter_mut().zip(&pivot_row[k + 1..]) {
                *x -= f * p;
            }
        }
    }
    (det, singular)
}

/// `(-1)^e` as a scalar multiplier.
pub fn sign_pow<S: Scalar>(exponent: usize) -> S {
    if exponent.is_multiple_of(2) {
        S::one()
    } else {
        -S::one()
    }
}

/// Convenience for tests and examples: an integer-valued rational.
pub fn int(v: i64) -> Rational {
    Rational::from_i64(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_exact_tokens() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(
            parse_rational("-6/4").unwrap(),
            Rational::new((-3).into(), 2.into())
        );
        assert_eq!(
            parse_rational("5/-10").unwrap(),
            Rational::new((-1).into(), 2.into())
        );
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn rationals_stay_reduced() {
        let v = parse_rational("10/-4").unwrap();
        assert_eq!(v.numer(), &BigInt::from(-5));
        assert_eq!(v.denom(), &BigInt::from(2));
        assert_eq!(v.render(), "-5/2");
        assert_eq!(int(7).render(), "7");
    }

    #[test]
    fn parse_float_tokens() {
        assert_eq!(f64::parse_token("2.5").unwrap(), 2.5);
        assert_eq!(f64::parse_token("-1e3").unwrap(), -1000.0);
        assert!(f64::parse_token("NaN").is_err());
        assert!(f64::parse_token("inf").is_err());
        assert!(f64::parse_token("1/2").is_err());
        assert_eq!(3.0f64.render(), "3.0");
    }

    #[test]
    fn float_tolerance_policy() {
        assert!(1.0f64.approx_eq(&(1.0 + 5e-10)));
        assert!(!1.0f64.approx_eq(&(1.0 + 5e-9)));
        assert!(0.0f64.approx_eq(&5e-13));
        assert!(!0.0f64.approx_eq(&5e-12));
    }

    #[test]
    fn mode_round_trips_through_text() {
        for m in [Mode::Exact, Mode::Float] {
            assert_eq!(m.to_string().parse::<Mode>().unwrap(), m);
        }
        assert!("double".parse::<Mode>().is_err());
    }

    #[test]
    fn bareiss_with_fractions_and_pivoting() {
        let m = Matrix::from_rows(vec![
            vec![Rational::new(1.into(), 2.into()), int(1)],
            vec![int(1), Rational::new(1.into(), 3.into())],
        ])
        .unwrap();
        // 1/6 - 1
        assert_eq!(bareiss_det(&m), Rational::new((-5).into(), 6.into()));

        let p = Matrix::from_rows(vec![
            vec![int(0), int(1), int(0)],
            vec![int(1), int(0), int(0)],
            vec![int(0), int(0), int(1)],
        ])
        .unwrap();
        assert_eq!(bareiss_det(&p), int(-1));
    }

    #[test]
    fn lu_flags_singular() {
        let m = Matrix::from_rows(vec![vec![1.0, 2.0], vec![2.0, 4.0]]).unwrap();
        let (d, singular) = lu_det(&m);
        assert!(singular);
        assert!(d.abs() < 1e-12);
        let ok = Matrix::from_rows(vec![vec![2.0, 3.0], vec![4.0, 7.0]]).unwrap();
        let (d, singular) = lu_det(&ok);
        assert!(!singular);
        assert!(d.approx_eq(&2.0));
    }
}
