//! Lexicographically ordered k-subsets of `{1, …, n}`.
//!
//! These index the maximal minors of a `k × n` matrix. Positions are stored
//! 0-based inside an [`IndexSet`] and shown 1-based everywhere else; ranks
//! are 1-based so that `rank(first subset) == 1`.

use std::fmt;

use crate::error::{Error, Result};

/// `C(n, k)` with overflow checking.
///
/// Returns a capacity error when the value does not fit in `usize` and a
/// domain error when `k > n`.
pub fn binomial(n: usize, k: usize) -> Result<usize> {
    if k > n {
        return Err(Error::domain(format!("binomial({n}, {k}): k exceeds n")));
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc == C(n, i) here, so the division is exact.
        acc = acc
            .checked_mul((n - i) as u128)
            .ok_or_else(|| overflow(n, k))?
            / (i as u128 + 1);
        if acc > usize::MAX as u128 {
            return Err(overflow(n, k));
        }
    }
    Ok(acc as usize)
}

fn overflow(n: usize, k: usize) -> Error {
    Error::Capacity {
        what: format!("binomial({n}, {k})"),
        requested: "more than usize::MAX".into(),
        cap: usize::MAX,
    }
}

/// `C(n, k)` where the caller already knows the arguments are small; zero
/// when `k > n`.
fn choose(n: usize, k: usize) -> usize {
    if k > n {
        0
    } else {
        binomial(n, k).expect("binomial bounded by an existing C(n,k)")
    }
}

/// A strictly increasing k-tuple of column positions drawn from `{1, …, n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet {
    // 0-based, strictly increasing, all < ambient
    indices: Vec<usize>,
    ambient: usize,
}

impl IndexSet {
    /// Builds an index set from 1-based positions.
    pub fn new(one_based: &[usize], ambient: usize) -> Result<Self> {
        let zero_based = one_based
            .iter()
            .map(|&i| {
                i.checked_sub(1)
                    .ok_or_else(|| Error::domain("index positions are 1-based; got 0"))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_zero_based(zero_based, ambient)
    }

    pub fn from_zero_based(indices: Vec<usize>, ambient: usize) -> Result<Self> {
        let k = indices.len();
        if k == 0 || k > ambient {
            return Err(Error::domain(format!(
                "index set must satisfy 1 <= k <= n (k = {k}, n = {ambient})"
            )));
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::domain(format!(
                "index set {:?} is not strictly increasing",
                indices.iter().map(|i| i + 1).collect::<Vec<_>>()
            )));
        }
        if indices[k - 1] >= ambient {
            return Err(Error::domain(format!(
                "index {} exceeds ambient dimension {ambient}",
                indices[k - 1] + 1
            )));
        }
        Ok(Self { indices, ambient })
    }

    /// `{1, …, k}` inside `{1, …, n}`.
    pub fn first(n: usize, k: usize) -> Result<Self> {
        Self::from_zero_based((0..k).collect(), n)
    }

    pub fn zero_based(&self) -> &[usize] {
        &self.indices
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.indices.iter().map(|i| i + 1).collect()
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn contains(&self, zero_based: usize) -> bool {
        self.indices.binary_search(&zero_based).is_ok()
    }

    /// Lexicographic successor within the same `(n, k)`, or `None` at the end.
    pub fn next_lex(&self) -> Option<Self> {
        let n = self.ambient;
        let k = self.indices.len();
        let mut next = self.indices.clone();
        // rightmost slot that can still move right
        let j = (0..k).rev().find(|&j| next[j] < n - k + j)?;
        next[j] += 1;
        for t in j + 1..k {
            next[t] = next[t - 1] + 1;
        }
        Some(Self {
            indices: next,
            ambient: n,
        })
    }
}

impl fmt::Display for IndexSet {
    /// Paper-style concatenation (`234`) while every index is a single digit,
    /// comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.ambient <= 9 { "" } else { "," };
        let parts: Vec<String> = self.one_based().iter().map(|i| i.to_string()).collect();
        write!(f, "{}", parts.join(sep))
    }
}

fn check_nk(n: usize, k: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::domain(format!(
            "subsets require 1 <= k <= n (n = {n}, k = {k})"
        )));
    }
    Ok(())
}

/// All `C(n, k)` subsets in ascending lexicographic order.
pub fn enumerate_subsets(n: usize, k: usize) -> Result<Vec<IndexSet>> {
    check_nk(n, k)?;
    let total = binomial(n, k)?;
    let mut out = Vec::with_capacity(total);
    let mut cur = Some(IndexSet::first(n, k)?);
    while let Some(s) = cur {
        cur = s.next_lex();
        out.push(s);
    }
    debug_assert_eq!(out.len(), total);
    Ok(out)
}

/// Lazy counterpart of [`enumerate_subsets`].
pub fn subsets(n: usize, k: usize) -> Result<impl Iterator<Item = IndexSet>> {
    check_nk(n, k)?;
    let first = IndexSet::first(n, k)?;
    Ok(std::iter::successors(Some(first), |s| s.next_lex()))
}

/// 1-based lexicographic position of `s` among all subsets of its `(n, k)`.
///
/// Closed form: the subsets that come after `c_1 < … < c_k` are counted by
/// `Σ_j C(n − c_j, k − j + 1)`, so the rank is `C(n, k)` minus that sum.
pub fn rank(s: &IndexSet) -> Result<usize> {
    let n = s.ambient;
    let k = s.len();
    let total = binomial(n, k)?;
    let after: usize = s
        .one_based()
        .iter()
        .enumerate()
        .map(|(j, &c)| choose(n - c, k - j))
        .sum();
    Ok(total - after)
}

/// Inverse of [`rank`].
pub fn unrank(p: usize, n: usize, k: usize) -> Result<IndexSet> {
    check_nk(n, k)?;
    let total = binomial(n, k)?;
    if p == 0 || p > total {
        return Err(Error::domain(format!(
            "rank {p} out of range 1..={total} for n = {n}, k = {k}"
        )));
    }
    let mut remaining = p;
    let mut indices = Vec::with_capacity(k);
    let mut v = 0usize; // 0-based candidate
    for slot in 0..k {
        loop {
            // subsets with this slot fixed at v: choose the rest from v+1..n
            let block = choose(n - v - 1, k - slot - 1);
            if remaining <= block {
                break;
            }
            remaining -= block;
            v += 1;
        }
        indices.push(v);
        v += 1;
    }
    IndexSet::from_zero_based(indices, n)
}

/// `{1, …, n} \ s` as an `(n − k)`-subset.
pub fn complement(s: &IndexSet) -> Result<IndexSet> {
    let n = s.ambient;
    if s.len() >= n {
        return Err(Error::domain(
            "complement of the full index set is empty (requires k < n)",
        ));
    }
    let rest = (0..n).filter(|i| !s.contains(*i)).collect();
    IndexSet::from_zero_based(rest, n)
}
