//! Independent reference implementations used only by tests.
//!
//! Nothing here calls into the library's determinant, subset enumeration or
//! product code; inputs and outputs are plain `Vec`s of rationals.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use wedgekit::{Matrix, Rational, Vector};

pub type Q = BigRational;
pub type Rows = Vec<Vec<Q>>;

pub fn q(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

pub fn rows_of(m: &Matrix<Rational>) -> Rows {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

pub fn int_rows(rows: &[Vec<i64>]) -> Rows {
    rows.iter()
        .map(|r| r.iter().map(|&x| q(x)).collect())
        .collect()
}

pub fn to_matrix(rows: &Rows) -> Matrix<Rational> {
    Matrix::from_rows(rows.clone()).unwrap()
}

pub fn to_vector(xs: &[Q]) -> Vector<Rational> {
    Vector::new(xs.to_vec()).unwrap()
}

/// Laplace expansion along successive rows, memoised on the set of columns
/// still available (so `O(n·2^n)` instead of `O(n!)`).
pub fn cofactor_det(a: &Rows) -> Q {
    let n = a.len();
    assert!(a.iter().all(|r| r.len() == n), "square input");
    assert!(n < 32, "oracle limited to n < 32");
    let mut memo = std::collections::HashMap::new();
    expand(a, 0, (1u32 << n) - 1, &mut memo)
}

fn expand(a: &Rows, row: usize, cols: u32, memo: &mut std::collections::HashMap<u32, Q>) -> Q {
    if row == a.len() {
        return Q::one();
    }
    if let Some(v) = memo.get(&cols) {
        return v.clone();
    }
    let mut total = Q::zero();
    // sign alternates over the columns still available, left to right
    let mut position = 0;
    for j in 0..a.len() {
        if cols & (1 << j) == 0 {
            continue;
        }
        if !a[row][j].is_zero() {
            let term = a[row][j].clone() * expand(a, row + 1, cols & !(1 << j), memo);
            if position % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        position += 1;
    }
    memo.insert(cols, total.clone());
    total
}

/// Sign of a permutation given as images `0..n`, by counting inversions.
pub fn permutation_sign(perm: &[usize]) -> i64 {
    let mut inversions = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// All k-subsets of `0..n`, via bitmasks, sorted lexicographically.
pub fn brute_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0u32..(1 << n))
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m & (1 << i) != 0).collect())
        .collect();
    out.sort();
    out
}

pub fn select_columns(a: &Rows, cols: &[usize]) -> Rows {
    a.iter()
        .map(|r| cols.iter().map(|&c| r[c].clone()).collect())
        .collect()
}

/// Exterior product straight from its definition: the rank-`r` minor goes to
/// 1-based slot `C − r + 1` with sign `(−1)^(C − r)`.
pub fn oracle_wedge(a: &Rows) -> Vec<Q> {
    let (k, n) = (a.len(), a[0].len());
    let subsets = brute_subsets(n, k);
    let c = subsets.len();
    let mut out = vec![Q::zero(); c];
    for (idx, s) in subsets.iter().enumerate() {
        let r = idx + 1;
        let d = cofactor_det(&select_columns(a, s));
        out[c - r] = if (c - r).is_multiple_of(2) { d } else { -d };
    }
    out
}

/// Unsigned minors in lexicographic subset order.
pub fn oracle_plucker(a: &Rows) -> Vec<Q> {
    let (k, n) = (a.len(), a[0].len());
    brute_subsets(n, k)
        .iter()
        .map(|s| cofactor_det(&select_columns(a, s)))
        .collect()
}

/// Vector product `Σ (−1)^(1+k) det(X_k) e_k` with cofactor determinants.
pub fn oracle_cross(a: &Rows) -> Vec<Q> {
    let n = a[0].len();
    (0..n)
        .map(|k| {
            let keep: Vec<usize> = (0..n).filter(|&c| c != k).collect();
            let d = cofactor_det(&select_columns(a, &keep));
            if k % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .collect()
}

/// Gauss-Jordan elimination over the rationals; `None` when singular.
pub fn gauss_solve(a: &Rows, b: &[Q]) -> Option<Vec<Q>> {
    let n = a.len();
    let mut m: Rows = a
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            let mut row = r.clone();
            row.push(bi.clone());
            row
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&i| !m[i][col].is_zero())?;
        m.swap(col, p);
        let pivot = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x = x.clone() / pivot.clone();
        }
        let pivot_row = m[col].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= p.clone() * f.clone();
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n].clone()).collect())
}

pub fn is_zero(xs: &[Q]) -> bool {
    xs.iter().all(Zero::is_zero)
}
