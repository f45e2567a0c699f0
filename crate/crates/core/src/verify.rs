//! Seeded randomized and exhaustive suites for the algebraic identities.
//!
//! Every suite runs in exact arithmetic on integer matrices with entries
//! drawn uniformly from `[-9, 9]`, so identical seeds give identical reports.
//! Each [`Check`] aggregates all trials for one size (and property); on
//! failure it carries the first counterexample found.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::combinadics::binomial;
use crate::cramer::{solve, solve_by_cross, LinearSystem};
use crate::error::{Error, Result};
use crate::matrix::{delete_column, det, dot, Matrix, Vector};
use crate::reversing::{
    exchange_det, exchange_matrix, palindromic_cross_check, prop3_sign, reverse_matrix,
    reverse_vector,
};
use crate::scalar::{Rational, Scalar, REL_TOL};
use crate::wedge::{cross, det_via_wedge, wedge_k1, wedge_matrix_with_cap, DEFAULT_COMPONENT_CAP};

pub const ENTRY_BOUND: i64 = 9;
pub const DEFAULT_TRIALS: usize = 100;
pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
    pub note: Option<String>,
}

impl Check {
    fn pass(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed: true,
            witness: None,
            note: None,
        }
    }

    fn fail(name: impl Into<String>, witness: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed: false,
            witness: Some(witness.into()),
            note: None,
        }
    }

    fn from_outcome(name: impl Into<String>, outcome: std::result::Result<(), String>) -> Self {
        match outcome {
            Ok(()) => Self::pass(name),
            Err(w) => Self::fail(name, w),
        }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteId {
    Prop1,
    Prop2,
    Prop3,
    PalindromicVanish,
    WedgeProps,
    CramerEquiv,
    FinalRemarks,
}

impl SuiteId {
    pub const ALL: [SuiteId; 7] = [
        SuiteId::Prop1,
        SuiteId::Prop2,
        SuiteId::Prop3,
        SuiteId::PalindromicVanish,
        SuiteId::WedgeProps,
        SuiteId::CramerEquiv,
        SuiteId::FinalRemarks,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteId::Prop1 => "prop1",
            SuiteId::Prop2 => "prop2",
            SuiteId::Prop3 => "prop3",
            SuiteId::PalindromicVanish => "palindromic-vanish",
            SuiteId::WedgeProps => "wedge-props",
            SuiteId::CramerEquiv => "cramer-equiv",
            SuiteId::FinalRemarks => "final-remarks",
        }
    }

    pub fn default_sizes(self) -> RangeInclusive<usize> {
        match self {
            SuiteId::Prop1 => 1..=12,
            SuiteId::Prop2 | SuiteId::Prop3 => 2..=8,
            SuiteId::PalindromicVanish => 3..=8,
            SuiteId::WedgeProps => 1..=8,
            SuiteId::CramerEquiv => 2..=7,
            SuiteId::FinalRemarks => 4..=4,
        }
    }

    /// Sizes the suite accepts.
    pub fn allowed_sizes(self) -> RangeInclusive<usize> {
        match self {
            SuiteId::Prop1 => 1..=64,
            SuiteId::Prop2 | SuiteId::Prop3 => 2..=12,
            SuiteId::PalindromicVanish => 3..=12,
            SuiteId::WedgeProps => 1..=10,
            SuiteId::CramerEquiv => 1..=10,
            SuiteId::FinalRemarks => 4..=4,
        }
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SuiteId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SuiteId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| {
                let known: Vec<_> = SuiteId::ALL.iter().map(|id| id.name()).collect();
                Error::domain(format!(
                    "unknown suite '{s}' (expected one of {})",
                    known.join(", ")
                ))
            })
    }
}

/// Parses `"a..b"` (inclusive) or a single size `"a"`.
pub fn parse_size_range(s: &str) -> Result<RangeInclusive<usize>> {
    let bad = || Error::domain(format!("invalid size range '{s}' (expected a..b or a)"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (s, s),
    };
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(Error::domain(format!("empty size range {lo}..{hi}")));
    }
    Ok(lo..=hi)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    pub sizes: RangeInclusive<usize>,
    pub trials: usize,
    pub seed: u64,
    pub cap: usize,
}

impl SuiteConfig {
    pub fn defaults(id: SuiteId) -> Self {
        Self {
            sizes: id.default_sizes(),
            trials: DEFAULT_TRIALS,
            seed: DEFAULT_SEED,
            cap: DEFAULT_COMPONENT_CAP,
        }
    }
}

/// Results of one suite run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub checks: Vec<Check>,
    /// Named values worth reporting alongside the checks.
    pub values: Vec<(String, String)>,
}

impl SuiteOutcome {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

pub fn run_suite(id: SuiteId, cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let allowed = id.allowed_sizes();
    if cfg.sizes.start() > cfg.sizes.end()
        || cfg.sizes.start() < allowed.start()
        || cfg.sizes.end() > allowed.end()
    {
        return Err(Error::domain(format!(
            "size range {}..{} outside {}..{} accepted by {id}",
            cfg.sizes.start(),
            cfg.sizes.end(),
            allowed.start(),
            allowed.end()
        )));
    }
    if cfg.trials == 0 && id != SuiteId::Prop1 && id != SuiteId::FinalRemarks {
        return Err(Error::domain("trials must be at least 1"));
    }
    let mut sampler = Sampler::new(cfg.seed);
    let mut values = Vec::new();
    let checks = match id {
        SuiteId::Prop1 => suite_prop1(cfg),
        SuiteId::Prop2 => suite_prop2(cfg, &mut sampler)?,
        SuiteId::Prop3 => suite_prop3(cfg, &mut sampler)?,
        SuiteId::PalindromicVanish => suite_palindromic(cfg, &mut sampler)?,
        SuiteId::WedgeProps => suite_wedge(cfg, &mut sampler)?,
        SuiteId::CramerEquiv => suite_cramer(cfg, &mut sampler)?,
        SuiteId::FinalRemarks => suite_final_remarks(&mut values)?,
    };
    Ok(SuiteOutcome { checks, values })
}

/// Integer-valued random matrices and vectors from a seeded stream.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn int(&mut self) -> i64 {
        self.rng.random_range(-ENTRY_BOUND..=ENTRY_BOUND)
    }

    pub fn index(&mut self, bound: usize) -> usize {
        self.rng.random_range(0..bound)
    }

    pub fn ints(&mut self, len: usize) -> Vec<i64> {
        (0..len).map(|_| self.int()).collect()
    }

    pub fn vector<S: Scalar>(&mut self, n: usize) -> Vector<S> {
        Vector::from_i64(&self.ints(n))
    }

    pub fn matrix<S: Scalar>(&mut self, rows: usize, cols: usize) -> Matrix<S> {
        let rows: Vec<Vec<S>> = (0..rows)
            .map(|_| self.ints(cols).into_iter().map(S::from_i64).collect())
            .collect();
        Matrix::from_rows(rows).expect("uniform rows")
    }

    /// Mirror-symmetric vector; with `anti` the mirror image is negated (and
    /// the middle entry of an odd-length vector is zero).
    pub fn palindromic<S: Scalar>(&mut self, n: usize, anti: bool) -> Vector<S> {
        let mut xs = vec![0i64; n];
        for j in 0..n.div_ceil(2) {
            let mirror = n - 1 - j;
            let x = self.int();
            if j == mirror {
                xs[j] = if anti { 0 } else { x };
            } else {
                xs[j] = x;
                xs[mirror] = if anti { -x } else { x };
            }
        }
        Vector::from_i64(&xs)
    }

    /// Random nonsingular `n × n` matrix (resampled until `det != 0`).
    pub fn nonsingular(&mut self, n: usize) -> Matrix<Rational> {
        loop {
            let m = self.matrix::<Rational>(n, n);
            if !Rational::is_singular(&m) {
                return m;
            }
        }
    }
}

type Q = Rational;

/// Runs `trials` closures and reports the first failure.
fn trials(
    count: usize,
    mut f: impl FnMut() -> Result<std::result::Result<(), String>>,
) -> Result<std::result::Result<(), String>> {
    for _ in 0..count {
        if let Err(w) = f()? {
            return Ok(Err(w));
        }
    }
    Ok(Ok(()))
}

fn suite_prop1(cfg: &SuiteConfig) -> Vec<Check> {
    cfg.sizes
        .clone()
        .map(|n| {
            let closed = exchange_det(n).expect("n >= 1");
            let computed = Q::determinant(&exchange_matrix::<Q>(n));
            let name = format!("prop1 det(J_{n}) = {closed}");
            if computed == closed.to_scalar::<Q>() {
                Check::pass(name)
            } else {
                Check::fail(name, format!("elimination gives {}", computed.render()))
            }
        })
        .collect()
}

fn suite_prop2(cfg: &SuiteConfig, s: &mut Sampler) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in cfg.sizes.clone() {
        let outcome = trials(cfg.trials, || {
            let m = s.matrix::<Q>(n - 1, n);
            let rev = reverse_matrix(&m);
            for k in 1..=n {
                let lhs = delete_column(&rev, k)?;
                let rhs = reverse_matrix(&delete_column(&m, n - k + 1)?);
                if lhs != rhs {
                    return Ok(Err(format!("M = {m}, k = {k}: {lhs} != {rhs}")));
                }
            }
            Ok(Ok(()))
        })?;
        out.push(Check::from_outcome(
            format!("prop2 n={n} all k ({} trials)", cfg.trials),
            outcome,
        ));
    }
    Ok(out)
}

fn suite_prop3(cfg: &SuiteConfig, s: &mut Sampler) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in cfg.sizes.clone() {
        let sign = prop3_sign(n)?;
        let outcome = trials(cfg.trials, || {
            let m = s.matrix::<Q>(n - 1, n);
            let rows = m.row_vectors();
            let reversed: Vec<_> = rows.iter().map(reverse_vector).collect();
            let lhs = cross(&reversed)?;
            let rhs = sign.apply(&reverse_vector(&cross(&rows)?));
            if lhs != rhs {
                return Ok(Err(format!("M = {m}: {lhs} != {sign}·{rhs}")));
            }
            Ok(Ok(()))
        })?;
        out.push(Check::from_outcome(
            format!("prop3 n={n} sign {sign} ({} trials)", cfg.trials),
            outcome,
        ));
    }
    Ok(out)
}

fn suite_palindromic(cfg: &SuiteConfig, s: &mut Sampler) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in cfg.sizes.clone() {
        if n < 4 {
            // below four the product need not vanish; exhibit a nonzero case
            let mut found = None;
            for _ in 0..cfg.trials.max(1) * 10 {
                let rows: Vec<Vector<Q>> = (0..n - 1).map(|_| s.palindromic(n, false)).collect();
                let c = cross(&rows)?;
                if !c.is_zero() {
                    let m = Matrix::from_vectors(&rows)?;
                    found = Some(format!("M = {m} gives {c}"));
                    break;
                }
            }
            let name = format!("palindromic n={n} admits nonzero product");
            out.push(match found {
                Some(w) => Check::pass(name).with_note(w),
                None => Check::fail(name, "no nonzero product found"),
            });
            continue;
        }
        for anti in [false, true] {
            let outcome = trials(cfg.trials, || {
                let rows: Vec<Vector<Q>> = (0..n - 1).map(|_| s.palindromic(n, anti)).collect();
                match palindromic_cross_check(&rows) {
                    Ok(_) => Ok(Ok(())),
                    Err(Error::Invariant(msg)) => Ok(Err(msg)),
                    Err(e) => Err(e),
                }
            })?;
            let kind = if anti {
                "antipalindromic"
            } else {
                "palindromic"
            };
            out.push(Check::from_outcome(
                format!("{kind} n={n} product vanishes ({} trials)", cfg.trials),
                outcome,
            ));
        }
    }
    Ok(out)
}

fn suite_wedge(cfg: &SuiteConfig, s: &mut Sampler) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let cap = cfg.cap;
    let w = |m: &Matrix<Q>| wedge_matrix_with_cap(m, cap).map(|w| w.into_vector());
    for n in cfg.sizes.clone() {
        for k in 1..=n {
            if binomial(n, k)? > cap {
                out.push(
                    Check::pass(format!("wedge n={n} k={k}"))
                        .with_note(format!("skipped: C({n},{k}) exceeds cap {cap}")),
                );
                continue;
            }
            let tag = format!("n={n} k={k} ({} trials)", cfg.trials);

            let linear = trials(cfg.trials, || {
                let m = s.matrix::<Q>(k, n);
                let i = s.index(k);
                let b: Vector<Q> = s.vector(n);
                let (alpha, beta) = (Q::from_i64(s.int()), Q::from_i64(s.int()));
                let mixed = m.row_vector(i).scale(&alpha).add(&b.scale(&beta))?;
                let lhs = w(&m.with_row(i, &mixed)?)?;
                let rhs = w(&m)?
                    .scale(&alpha)
                    .add(&w(&m.with_row(i, &b)?)?.scale(&beta))?;
                Ok(if lhs == rhs {
                    Ok(())
                } else {
                    Err(format!(
                        "U = {m}, row {}, b = {b}, a = {alpha}, b = {beta}",
                        i + 1
                    ))
                })
            })?;
            out.push(Check::from_outcome(format!("k-linear {tag}"), linear));

            if k >= 2 {
                let anti = trials(cfg.trials, || {
                    let m = s.matrix::<Q>(k, n);
                    let i = s.index(k);
                    let j = (i + 1 + s.index(k - 1)) % k;
                    Ok(if w(&m.swap_rows(i, j))? == w(&m)?.neg() {
                        Ok(())
                    } else {
                        Err(format!("U = {m}, swap rows {} and {}", i + 1, j + 1))
                    })
                })?;
                out.push(Check::from_outcome(
                    format!("row-swap antisymmetry {tag}"),
                    anti,
                ));
            }

            let dependent = trials(cfg.trials, || {
                let m = dependent_rows(s, k, n)?;
                Ok(if w(&m)?.is_zero() {
                    Ok(())
                } else {
                    Err(format!("U = {m}"))
                })
            })?;
            out.push(Check::from_outcome(
                format!("dependent rows give zero {tag}"),
                dependent,
            ));

            if k == n {
                let square = trials(cfg.trials, || {
                    let m = s.matrix::<Q>(n, n);
                    Ok(if det_via_wedge(&m)? == det(&m)? {
                        Ok(())
                    } else {
                        Err(format!("U = {m}"))
                    })
                })?;
                out.push(Check::from_outcome(format!("k=n equals det {tag}"), square));
            }

            if n >= 2 && k == n - 1 {
                let as_cross = trials(cfg.trials, || {
                    let m = s.matrix::<Q>(k, n);
                    Ok(if w(&m)? == cross(&m.row_vectors())? {
                        Ok(())
                    } else {
                        Err(format!("U = {m}"))
                    })
                })?;
                out.push(Check::from_outcome(
                    format!("k=n-1 equals cross {tag}"),
                    as_cross,
                ));
            }

            if k == 1 && n % 2 == 0 {
                let ortho = trials(cfg.trials, || {
                    let u: Vector<Q> = s.vector(n);
                    let wu = wedge_k1(&u)?.into_vector();
                    let formula: Vec<Q> = (1..=n)
                        .map(|j| crate::scalar::sign_pow::<Q>(j + 1) * u.get(n - j).clone())
                        .collect();
                    let ok = dot(&u, &wu)? == Q::zero() && wu.entries() == formula.as_slice();
                    Ok(if ok {
                        Ok(())
                    } else {
                        Err(format!("u = {u}, wedge = {wu}"))
                    })
                })?;
                out.push(Check::from_outcome(
                    format!("k=1 orthogonality {tag}"),
                    ortho,
                ));
            }
        }
    }
    Ok(out)
}

/// `k` rows in `R^n` where one row is a random combination of the others.
fn dependent_rows(s: &mut Sampler, k: usize, n: usize) -> Result<Matrix<Q>> {
    let mut m = s.matrix::<Q>(k, n);
    let target = s.index(k);
    let mut combo = Vector::<Q>::zeros(n);
    for i in (0..k).filter(|&i| i != target) {
        combo = combo.add(&m.row_vector(i).scale(&Q::from_i64(s.int())))?;
    }
    m = m.with_row(target, &combo)?;
    Ok(m)
}

fn suite_cramer(cfg: &SuiteConfig, s: &mut Sampler) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in cfg.sizes.clone() {
        let tag = format!("n={n} ({} trials)", cfg.trials);
        let mut residual = Ok(());
        let mut routes = Ok(());
        let mut float_residual = Ok(());
        for _ in 0..cfg.trials {
            let a = s.nonsingular(n);
            let b: Vector<Q> = s.vector(n);
            let sys = LinearSystem::from_matrix(&a, b.clone())?;
            let x = solve(&sys)?;
            if residual.is_ok() && !sys.residual(&x)?.is_zero() {
                residual = Err(format!("A = {a}, B = {b}, x = {x}"));
            }
            let x_cross = solve_by_cross(&sys)?;
            if routes.is_ok() && x_cross != x {
                routes = Err(format!(
                    "A = {a}, B = {b}: det-ratio {x} vs cross {x_cross}"
                ));
            }
            if float_residual.is_ok() {
                float_residual = float_residual_check(&a, &b)?;
            }
        }
        out.push(Check::from_outcome(
            format!("exact residual zero {tag}"),
            residual,
        ));
        out.push(Check::from_outcome(
            format!("cross route equals det route {tag}"),
            routes,
        ));
        out.push(Check::from_outcome(
            format!("float residual <= {REL_TOL:e} relative {tag}"),
            float_residual,
        ));
    }
    Ok(out)
}

/// Solves the same system in float mode and bounds
/// `‖Σ x_i A_i − B‖∞ <= REL_TOL · (‖A‖∞ ‖x‖∞ + ‖B‖∞)`.
pub fn float_residual_check(
    a: &Matrix<Q>,
    b: &Vector<Q>,
) -> Result<std::result::Result<(), String>> {
    let to_f = |q: &Q| q.to_f64().expect("integer entries convert");
    let af = Matrix::from_fn(a.rows(), a.cols(), |i, j| to_f(a.get(i, j)));
    let bf = Vector::new(b.entries().iter().map(to_f).collect())?;
    let sys = LinearSystem::from_matrix(&af, bf.clone())?;
    let x = solve(&sys)?;
    let r = sys.residual(&x)?;
    let inf = |v: &[f64]| v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let a_norm = (0..af.rows())
        .map(|i| af.row(i).iter().map(|x| x.abs()).sum::<f64>())
        .fold(0.0, f64::max);
    let bound = REL_TOL * (a_norm * inf(x.entries()) + inf(bf.entries()));
    let rn = inf(r.entries());
    Ok(if rn <= bound {
        Ok(())
    } else {
        Err(format!("A = {a}, B = {b}: residual {rn:e} > {bound:e}"))
    })
}

/// The worked `2 × 4` example: no single sign relates `∧U` and `∧←U`.
pub fn final_remarks_matrix() -> Matrix<Q> {
    Matrix::from_i64(&[&[2, 3, -1, 5], &[4, 7, 2, 0]]).expect("fixed shape")
}

fn suite_final_remarks(values: &mut Vec<(String, String)>) -> Result<Vec<Check>> {
    let u = final_remarks_matrix();
    let w = wedge_matrix_with_cap(&u, DEFAULT_COMPONENT_CAP)?.into_vector();
    let wr = wedge_matrix_with_cap(&reverse_matrix(&u), DEFAULT_COMPONENT_CAP)?.into_vector();
    values.push(("U".into(), u.to_string()));
    values.push(("wedge(U)".into(), w.to_string()));
    values.push(("wedge(reversed U)".into(), wr.to_string()));

    let expected_w = Vector::<Q>::from_i64(&[-10, 35, 13, 20, 8, -2]);
    let expected_wr = Vector::<Q>::from_i64(&[-2, 8, -13, -20, 35, -10]);
    let mut checks = vec![
        Check::from_outcome(
            "wedge(U) = (-10, 35, 13, 20, 8, -2)",
            if w == expected_w {
                Ok(())
            } else {
                Err(w.to_string())
            },
        ),
        Check::from_outcome(
            "wedge(reversed U) = (-2, 8, -13, -20, 35, -10)",
            if wr == expected_wr {
                Ok(())
            } else {
                Err(wr.to_string())
            },
        ),
    ];
    let naive_holds = w == wr || w == wr.neg();
    checks.push(
        Check::from_outcome(
            "naive sign law wedge(U) = ±wedge(reversed U) fails",
            if naive_holds {
                Err(format!("{w} is ± {wr}"))
            } else {
                Ok(())
            },
        )
        .with_note("expected failure of the naive law"),
    );
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_ids_round_trip() {
        for id in SuiteId::ALL {
            assert_eq!(id.name().parse::<SuiteId>().unwrap(), id);
        }
        assert!("prop9".parse::<SuiteId>().is_err());
    }

    #[test]
    fn size_ranges() {
        assert_eq!(parse_size_range("2..8").unwrap(), 2..=8);
        assert_eq!(parse_size_range("2..=8").unwrap(), 2..=8);
        assert_eq!(parse_size_range("5").unwrap(), 5..=5);
        assert!(parse_size_range("8..2").is_err());
        assert!(parse_size_range("a..b").is_err());
    }

    #[test]
    fn out_of_range_sizes_rejected() {
        let mut cfg = SuiteConfig::defaults(SuiteId::Prop3);
        cfg.sizes = 1..=4;
        assert!(run_suite(SuiteId::Prop3, &cfg).is_err());
        cfg.sizes = 2..=4;
        cfg.trials = 0;
        assert!(run_suite(SuiteId::Prop3, &cfg).is_err());
    }

    #[test]
    fn sampler_is_deterministic_and_bounded() {
        let mut a = Sampler::new(7);
        let mut b = Sampler::new(7);
        let xs = a.ints(500);
        assert_eq!(xs, b.ints(500));
        assert!(xs.iter().all(|x| (-9..=9).contains(x)));
        assert!(xs.contains(&-9) && xs.contains(&9));
    }

    #[test]
    fn sampler_palindromes() {
        let mut s = Sampler::new(1);
        for n in 1..8 {
            let p: Vector<Q> = s.palindromic(n, false);
            assert_eq!(reverse_vector(&p), p);
            let a: Vector<Q> = s.palindromic(n, true);
            assert_eq!(reverse_vector(&a), a.neg());
        }
    }

    #[test]
    fn prop1_default_passes() {
        let out = run_suite(SuiteId::Prop1, &SuiteConfig::defaults(SuiteId::Prop1)).unwrap();
        assert_eq!(out.checks.len(), 12);
        assert!(out.all_passed());
    }

    #[test]
    fn final_remarks_reports_expected_failure() {
        let out = run_suite(
            SuiteId::FinalRemarks,
            &SuiteConfig::defaults(SuiteId::FinalRemarks),
        )
        .unwrap();
        assert!(out.all_passed(), "{:?}", out.checks);
        assert_eq!(out.values.len(), 3);
    }

    #[test]
    fn small_randomized_suites_pass() {
        for id in [
            SuiteId::Prop2,
            SuiteId::Prop3,
            SuiteId::PalindromicVanish,
            SuiteId::WedgeProps,
            SuiteId::CramerEquiv,
        ] {
            let mut cfg = SuiteConfig::defaults(id);
            cfg.trials = 5;
            cfg.sizes = *id.default_sizes().start()..=5;
            let out = run_suite(id, &cfg).unwrap();
            let failed: Vec<_> = out.checks.iter().filter(|c| !c.passed).collect();
            assert!(failed.is_empty(), "{id}: {failed:?}");
        }
    }
}
