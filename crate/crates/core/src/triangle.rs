//! The Jaco-Lucas triangle `JL(n, k)` (OEIS A245962): construction by
//! three independent engines, forward differences, diagonal sequences,
//! and row scans for log-concavity, sign patterns and the mode.
//!
//! Row `n` holds `k = 0 ..= floor(n/2)`; outside that range every lookup
//! is zero (zero-extension). Column `k = 0` is the Lucas sequence
//! 1, 3, 4, 7, 11, 18, ...

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::report::{Check, Method, Status};
use crate::Rational;

/// Which construction engine built a table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Engine {
    /// Direct summation of the closed form, term by term.
    ClosedForm,
    /// Column fill: second-order recurrence in `n` from the two
    /// boundary values on each column.
    RecColumns,
    /// Row fill: step in `k` from the Lucas column, using the next row.
    RecRows,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Engine::ClosedForm => "closed_form",
            Engine::RecColumns => "rec_columns",
            Engine::RecRows => "rec_rows",
        }
    }
}

/// Memoized Pascal triangle for the closed-form sums.
#[derive(Debug, Default)]
pub struct BinomialCache {
    rows: Vec<Vec<BigInt>>,
}

impl BinomialCache {
    pub fn new() -> Self {
        BinomialCache {
            rows: vec![vec![BigInt::one()]],
        }
    }

    fn grow(&mut self, n: usize) {
        while self.rows.len() <= n {
            let prev = self.rows.last().unwrap();
            let mut row = Vec::with_capacity(prev.len() + 1);
            row.push(BigInt::one());
            for w in prev.windows(2) {
                row.push(&w[0] + &w[1]);
            }
            row.push(BigInt::one());
            self.rows.push(row);
        }
    }

    pub fn get(&mut self, n: usize, k: usize) -> BigInt {
        if k > n {
            return BigInt::zero();
        }
        self.grow(n);
        self.rows[n][k].clone()
    }
}

/// One closed-form summand `n/(n-i) * C(n-i, i) * C(i, k)` as an exact
/// rational. Every summand is integer-valued; integrality is asserted by
/// the callers.
fn closed_form_term(cache: &mut BinomialCache, n: i64, i: i64, k: i64) -> Rational {
    let c1 = cache.get((n - i) as usize, i as usize);
    let c2 = cache.get(i as usize, k as usize);
    Rational::new(BigInt::from(n) * c1 * c2, BigInt::from(n - i))
}

/// Closed-form evaluation of a single entry. Returns 0 outside
/// `0 <= k <= floor(n/2)` (zero-extension); `n <= 0` is a domain error.
pub fn jl_closed_form(n: i64, k: i64) -> Result<BigInt> {
    let mut cache = BinomialCache::new();
    jl_closed_form_cached(&mut cache, n, k)
}

pub fn jl_closed_form_cached(cache: &mut BinomialCache, n: i64, k: i64) -> Result<BigInt> {
    if n <= 0 {
        return Err(Error::Domain {
            op: "jl_closed_form",
            reason: format!("n = {n} must be >= 1"),
        });
    }
    if k < 0 || k > n / 2 {
        return Ok(BigInt::zero());
    }
    let mut sum = Rational::zero();
    for i in k..=n / 2 {
        let term = closed_form_term(cache, n, i, k);
        if !term.is_integer() {
            return Err(Error::NonIntegerEntry {
                n,
                k,
                engine: "closed_form",
            });
        }
        sum += term;
    }
    debug_assert!(sum.is_integer());
    Ok(sum.to_integer())
}

/// Forward difference from the summation formula directly:
/// `sum_i n/(n-i) C(n-i,i) C(i,k) (i-2k-1)/(k+1)`. Independent of the
/// table-subtraction route; the two must agree.
pub fn delta_direct(cache: &mut BinomialCache, n: i64, k: i64) -> Result<BigInt> {
    if n <= 0 {
        return Err(Error::Domain {
            op: "delta_direct",
            reason: format!("n = {n} must be >= 1"),
        });
    }
    if k < 0 {
        return Err(Error::Domain {
            op: "delta_direct",
            reason: format!("k = {k} must be >= 0"),
        });
    }
    let mut sum = Rational::zero();
    for i in k..=n / 2 {
        let term = closed_form_term(cache, n, i, k)
            * Rational::new(BigInt::from(i - 2 * k - 1), BigInt::from(k + 1));
        sum += term;
    }
    if !sum.is_integer() {
        return Err(Error::NonIntegerEntry {
            n,
            k,
            engine: "delta_direct",
        });
    }
    Ok(sum.to_integer())
}

/// The mode formula `floor((n-4)/6) + 1`, floor toward negative
/// infinity so that `n = 1, 2, 3` give `0`.
pub fn mode_formula(n: i64) -> i64 {
    (n - 4).div_euclid(6) + 1
}

/// Dense triangle of exact entries for `1 <= n <= n_max`.
#[derive(Debug, Clone, PartialEq)]
pub struct JLTable {
    n_max: i64,
    rows: Vec<Vec<BigInt>>,
    engine: Engine,
}

impl JLTable {
    /// Builds the full triangle with the requested engine.
    pub fn build(n_max: i64, engine: Engine) -> Result<JLTable> {
        if n_max < 1 {
            return Err(Error::Domain {
                op: "JLTable::build",
                reason: format!("n_max = {n_max} must be >= 1"),
            });
        }
        let rows = match engine {
            Engine::ClosedForm => build_closed_form(n_max)?,
            Engine::RecColumns => build_rec_columns(n_max)?,
            Engine::RecRows => build_rec_rows(n_max)?,
        };
        let table = JLTable {
            n_max,
            rows,
            engine,
        };
        for n in 1..=n_max {
            let row = table.row(n);
            debug_assert_eq!(row.len() as i64, n / 2 + 1);
            if let Some(k) = row.iter().position(|v| !v.is_positive()) {
                return Err(Error::NonIntegerEntry {
                    n,
                    k: k as i64,
                    engine: engine.name(),
                });
            }
        }
        Ok(table)
    }

    pub fn n_max(&self) -> i64 {
        self.n_max
    }

    pub fn engine(&self) -> Engine {
        self.engine
    }

    pub fn row(&self, n: i64) -> &[BigInt] {
        &self.rows[(n - 1) as usize]
    }

    /// Entry with zero-extension outside `1 <= n <= n_max`,
    /// `0 <= k <= floor(n/2)`.
    pub fn get(&self, n: i64, k: i64) -> BigInt {
        if n < 1 || n > self.n_max || k < 0 || k > n / 2 {
            return BigInt::zero();
        }
        self.rows[(n - 1) as usize][k as usize].clone()
    }

    /// Forward difference `delta(n, k) = JL(n, k+1) - JL(n, k)` under
    /// zero-extension.
    pub fn delta(&self, n: i64, k: i64) -> BigInt {
        self.get(n, k + 1) - self.get(n, k)
    }

    /// `phi(n, k) = delta(n+1, k) - delta(n, k)`.
    pub fn phi(&self, n: i64, k: i64) -> BigInt {
        self.delta(n + 1, k) - self.delta(n, k)
    }

    /// Diagonal `delta(6k+4, k)`, strictly increasing from 1.
    pub fn diag_a(&self, k: i64) -> BigInt {
        self.delta(6 * k + 4, k)
    }

    /// Diagonal `delta(6k+3, k)`, strictly decreasing from -1.
    pub fn diag_b(&self, k: i64) -> BigInt {
        self.delta(6 * k + 3, k)
    }

    /// Copy with one entry replaced — fault-injection support for
    /// testing that the scans detect corrupted data.
    pub fn with_entry(&self, n: i64, k: i64, value: BigInt) -> JLTable {
        let mut copy = self.clone();
        copy.rows[(n - 1) as usize][k as usize] = value;
        copy
    }

    /// Copy holding only the first `n_max` rows.
    pub fn truncated(&self, n_max: i64) -> JLTable {
        let n_max = n_max.clamp(1, self.n_max);
        JLTable {
            n_max,
            rows: self.rows[..n_max as usize].to_vec(),
            engine: self.engine,
        }
    }

    /// Exact successive-row ratio `JL(n+1, k) / JL(n, k)`.
    pub fn ratio(&self, n: i64, k: i64) -> Result<Rational> {
        if n + 1 > self.n_max || k > n / 2 || k < 0 {
            return Err(Error::Domain {
                op: "JLTable::ratio",
                reason: format!("({n}, {k}) outside table of depth {}", self.n_max),
            });
        }
        Ok(Rational::new(self.get(n + 1, k), self.get(n, k)))
    }
}

fn build_closed_form(n_max: i64) -> Result<Vec<Vec<BigInt>>> {
    let mut cache = BinomialCache::new();
    let mut rows = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        // compute the k-independent factors once per (n, i)
        let lucas_terms: Vec<Rational> = (0..=n / 2)
            .map(|i| {
                Rational::new(
                    BigInt::from(n) * cache.get((n - i) as usize, i as usize),
                    BigInt::from(n - i),
                )
            })
            .collect();
        let mut row = Vec::with_capacity((n / 2 + 1) as usize);
        for k in 0..=n / 2 {
            let mut sum = Rational::zero();
            for i in k..=n / 2 {
                sum += &lucas_terms[i as usize]
                    * Rational::from(cache.get(i as usize, k as usize));
            }
            if !sum.is_integer() {
                return Err(Error::NonIntegerEntry {
                    n,
                    k,
                    engine: "closed_form",
                });
            }
            row.push(sum.to_integer());
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Column fill. Each column `k` starts from the boundary values
/// `JL(2k, k)` and `JL(2k+1, k)` and steps with the second-order
/// recurrence in `n`:
/// `JL(n+2,k) = (n-k+1)(n+2)/((n+1)(n-2k+2)) JL(n+1,k) + (n+2)/(n-2k+2) JL(n,k)`.
fn build_rec_columns(n_max: i64) -> Result<Vec<Vec<BigInt>>> {
    let mut cache = BinomialCache::new();
    let mut rows: Vec<Vec<BigInt>> = (1..=n_max)
        .map(|n| vec![BigInt::zero(); (n / 2 + 1) as usize])
        .collect();
    let set = |rows: &mut Vec<Vec<BigInt>>, n: i64, k: i64, v: BigInt| {
        rows[(n - 1) as usize][k as usize] = v;
    };
    for k in 0..=n_max / 2 {
        let base_n = (2 * k).max(1); // row 0 does not exist; column 0 starts at n = 1
        let mut prev = jl_closed_form_cached(&mut cache, base_n, k)?;
        set(&mut rows, base_n, k, prev.clone());
        if base_n + 1 > n_max {
            continue;
        }
        let mut cur = jl_closed_form_cached(&mut cache, base_n + 1, k)?;
        set(&mut rows, base_n + 1, k, cur.clone());
        for n in base_n..=(n_max - 2) {
            let num = Rational::new(BigInt::from((n - k + 1) * (n + 2)) * &cur, BigInt::from((n + 1) * (n - 2 * k + 2)))
                + Rational::new(BigInt::from(n + 2) * &prev, BigInt::from(n - 2 * k + 2));
            if !num.is_integer() {
                return Err(Error::NonIntegerEntry {
                    n: n + 2,
                    k,
                    engine: "rec_columns",
                });
            }
            let next = num.to_integer();
            set(&mut rows, n + 2, k, next.clone());
            prev = cur;
            cur = next;
        }
    }
    Ok(rows)
}

/// Row fill. Starting from the Lucas column `k = 0` (computed by the
/// closed form on an extended range), steps in `k` with
/// `JL(n,k+1) = -n(n-2k+1)/(5(n+1)(k+1)) JL(n+1,k) + (3n-5k)/(5(k+1)) JL(n,k)`,
/// which references the next row; column `k` is therefore carried up to
/// row `n_max + floor(n_max/2) - k`.
fn build_rec_rows(n_max: i64) -> Result<Vec<Vec<BigInt>>> {
    let mut cache = BinomialCache::new();
    let k_top = n_max / 2;
    let ext = n_max + k_top;
    // col[n] for the current k, index offset by 1 (n ranges 1..=ext)
    let mut col: Vec<BigInt> = std::iter::once(BigInt::zero())
        .chain((1..=ext).map(|n| jl_closed_form_cached(&mut cache, n, 0).unwrap()))
        .collect();
    let mut rows: Vec<Vec<BigInt>> = (1..=n_max)
        .map(|n| vec![BigInt::zero(); (n / 2 + 1) as usize])
        .collect();
    for (n, row) in rows.iter_mut().enumerate() {
        row[0] = col[n + 1].clone();
    }
    for k in 0..k_top {
        let reach = n_max + k_top - k - 1; // rows carried for column k+1
        let mut next = vec![BigInt::zero(); (reach + 1) as usize];
        for n in (2 * (k + 1))..=reach {
            let v = Rational::new(
                BigInt::from(-n * (n - 2 * k + 1)) * &col[(n + 1) as usize],
                BigInt::from(5 * (n + 1) * (k + 1)),
            ) + Rational::new(
                BigInt::from(3 * n - 5 * k) * &col[n as usize],
                BigInt::from(5 * (k + 1)),
            );
            if !v.is_integer() {
                return Err(Error::NonIntegerEntry {
                    n,
                    k: k + 1,
                    engine: "rec_rows",
                });
            }
            next[n as usize] = v.to_integer();
            if n <= n_max && k + 1 <= n / 2 {
                rows[(n - 1) as usize][(k + 1) as usize] = next[n as usize].clone();
            }
        }
        col = next;
    }
    Ok(rows)
}

/// Builds with every engine and compares entry-wise.
pub fn cross_check_engines(n_max: i64) -> Result<JLTable> {
    let a = JLTable::build(n_max, Engine::ClosedForm)?;
    let b = JLTable::build(n_max, Engine::RecColumns)?;
    let c = JLTable::build(n_max, Engine::RecRows)?;
    for n in 1..=n_max {
        for k in 0..=n / 2 {
            let (va, vb, vc) = (a.get(n, k), b.get(n, k), c.get(n, k));
            if va != vb {
                return Err(Error::EngineMismatch {
                    n,
                    k,
                    left: va.to_string(),
                    right: vb.to_string(),
                });
            }
            if va != vc {
                return Err(Error::EngineMismatch {
                    n,
                    k,
                    left: va.to_string(),
                    right: vc.to_string(),
                });
            }
        }
    }
    Ok(a)
}

/// Row argmax analysis.
#[derive(Debug, Clone, Serialize)]
pub struct ModeReport {
    pub n: i64,
    pub k_star: i64,
    /// The maximum is attained at exactly one index.
    pub unique: bool,
    /// The row is strictly increasing for `k < k_star`.
    pub strictly_increasing_left: bool,
    pub formula_k_star: i64,
    /// Whether argmax equals the formula (informational for `n < 4`).
    pub formula_agrees: bool,
}

pub fn row_argmax(table: &JLTable, n: i64) -> ModeReport {
    let row = table.row(n);
    let mut k_star = 0usize;
    for (k, v) in row.iter().enumerate() {
        if v > &row[k_star] {
            k_star = k;
        }
    }
    let unique = row
        .iter()
        .enumerate()
        .all(|(k, v)| k == k_star || v < &row[k_star]);
    let strictly_increasing_left = row.windows(2).take(k_star).all(|w| w[0] < w[1]);
    let formula_k_star = mode_formula(n);
    ModeReport {
        n,
        k_star: k_star as i64,
        unique,
        strictly_increasing_left,
        formula_k_star,
        formula_agrees: k_star as i64 == formula_k_star,
    }
}

/// Scan outcome for a sign condition over a lattice region.
#[derive(Debug, Clone, Serialize)]
pub struct SignScanReport {
    pub region: String,
    pub points_checked: u64,
    /// `(n, k, value)` triples violating the sign condition.
    pub violations: Vec<(i64, i64, String)>,
    /// Points where the non-strict inequality is an equality
    /// (strictness audit; informational).
    pub zeros: Vec<(i64, i64)>,
    pub strict_everywhere: bool,
}

impl SignScanReport {
    fn new(region: impl Into<String>) -> Self {
        SignScanReport {
            region: region.into(),
            points_checked: 0,
            violations: Vec::new(),
            zeros: Vec::new(),
            strict_everywhere: true,
        }
    }

    pub fn verified(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn status(&self) -> Status {
        if self.verified() {
            Status::Verified
        } else {
            Status::Violation
        }
    }

    pub fn into_check(self, id: &str) -> Check {
        let mut check = Check::new(id, self.region.clone(), Method::ExactPointwise);
        check.points_checked = self.points_checked;
        check.status = self.status();
        for (n, k, v) in &self.violations {
            check.failures.push(format!("({n}, {k}): {v}"));
        }
        if !self.zeros.is_empty() {
            check.note(format!(
                "{} equality point(s) inside the region: {:?}",
                self.zeros.len(),
                &self.zeros[..self.zeros.len().min(8)]
            ));
        } else {
            check.note("strict everywhere");
        }
        check
    }
}

/// Checks `JL(n,k)^2 >= JL(n,k-1) JL(n,k+1)` for all interior `k`,
/// recording whether every inequality is strict.
pub fn scan_log_concavity(table: &JLTable) -> SignScanReport {
    let mut report = SignScanReport::new(format!(
        "JL(n,k)^2 >= JL(n,k-1)*JL(n,k+1), 1 <= k < floor(n/2), n <= {}",
        table.n_max()
    ));
    for n in 1..=table.n_max() {
        for k in 1..n / 2 {
            report.points_checked += 1;
            let diff = table.get(n, k).pow(2) - table.get(n, k - 1) * table.get(n, k + 1);
            if diff.is_negative() {
                report.violations.push((n, k, diff.to_string()));
            } else if diff.is_zero() {
                report.zeros.push((n, k));
                report.strict_everywhere = false;
            }
        }
    }
    report
}

/// Checks the two-region sign pattern of the forward difference:
/// `delta <= 0` on `2k <= n <= 6k+3` and `delta >= 0` on `n >= 6k+4`,
/// with a strictness audit on both regions.
pub fn scan_delta_signs(table: &JLTable) -> (SignScanReport, SignScanReport) {
    let mut low = SignScanReport::new("delta(n,k) <= 0 on 2k <= n <= 6k+3".to_string());
    let mut high = SignScanReport::new("delta(n,k) >= 0 on n >= 6k+4".to_string());
    for n in 1..=table.n_max() {
        for k in 0..=n / 2 {
            let d = table.delta(n, k);
            if n >= 6 * k + 4 {
                high.points_checked += 1;
                if d.is_negative() {
                    high.violations.push((n, k, d.to_string()));
                } else if d.is_zero() {
                    high.zeros.push((n, k));
                    high.strict_everywhere = false;
                }
            } else {
                low.points_checked += 1;
                if d.is_positive() {
                    low.violations.push((n, k, d.to_string()));
                } else if d.is_zero() {
                    low.zeros.push((n, k));
                    low.strict_everywhere = false;
                }
            }
        }
    }
    (low, high)
}

/// Lucas numbers 1, 3, 4, 7, ... (the `k = 0` column).
pub fn lucas(n: i64) -> BigInt {
    let (mut a, mut b) = (BigInt::from(2), BigInt::one()); // indices 0, 1
    for _ in 0..n {
        let next = &a + &b;
        a = b;
        b = next;
    }
    a
}
