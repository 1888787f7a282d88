//! Reduced matrices over the prime field GF(q) and the test whether they
//! generate a Singer cycle, i.e. have multiplicative order exactly `q^n - 1`.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::factor::{factor_power_minus_one, is_prime, FactorBudget, PrimeFactorization};
use crate::recurrence::{template, Parity};

/// Largest `n` a scan accepts unless the caller raises it.
pub const DEFAULT_MAX_N: u32 = 200;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GFMatrix {
    n: usize,
    q: u64,
    // row-major, entries in [0, q)
    data: Vec<u64>,
}

fn check_prime_modulus(q: u64) -> Result<()> {
    if q > u32::MAX as u64 {
        return Err(Error::Domain(format!("modulus {q} too large; need q < 2^32")));
    }
    match is_prime(&BigUint::from(q), FactorBudget::default()) {
        Some(true) => Ok(()),
        _ => Err(Error::NotPrime(q.to_string())),
    }
}

/// Reduces an integer matrix entrywise modulo the prime `q`.
pub fn reduce_mod(mat: &[Vec<BigInt>], q: u64) -> Result<GFMatrix> {
    check_prime_modulus(q)?;
    let n = mat.len();
    if mat.iter().any(|r| r.len() != n) {
        return Err(Error::Domain("matrix must be square".into()));
    }
    let qb = BigInt::from(q);
    let data = mat.iter().flatten().map(|v| v.mod_floor(&qb).to_u64().unwrap()).collect();
    Ok(GFMatrix { n, q, data })
}

impl GFMatrix {
    pub fn identity(n: usize, q: u64) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1 % q;
        }
        GFMatrix { n, q, data }
    }

    /// `O_n` or `E_n` over GF(q).
    pub fn reduced(parity: Parity, n: usize, q: u64) -> Result<Self> {
        reduce_mod(&template(parity, n), q)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> u64 {
        self.q
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        self.data.chunks(self.n.max(1)).map(<[u64]>::to_vec).collect()
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.get(i, j) == u64::from(i == j) % self.q))
    }

    pub fn mul(&self, other: &GFMatrix) -> GFMatrix {
        let n = self.n;
        let q = self.q;
        let mut data = vec![0u64; n * n];
        // accumulate without reduction while the sum cannot overflow
        let small = (q - 1).checked_mul(q - 1).and_then(|s| s.checked_mul(n as u64)).is_some();
        for i in 0..n {
            let row = &self.data[i * n..(i + 1) * n];
            let out = &mut data[i * n..(i + 1) * n];
            if small {
                let mut acc = vec![0u64; n];
                for (k, &a) in row.iter().enumerate() {
                    if a == 0 {
                        continue;
                    }
                    for (o, &b) in acc.iter_mut().zip(&other.data[k * n..(k + 1) * n]) {
                        *o += a * b;
                    }
                }
                for (o, a) in out.iter_mut().zip(acc) {
                    *o = a % q;
                }
            } else {
                let mut acc = vec![0u128; n];
                for (k, &a) in row.iter().enumerate() {
                    for (o, &b) in acc.iter_mut().zip(&other.data[k * n..(k + 1) * n]) {
                        *o = (*o + a as u128 * b as u128) % q as u128;
                    }
                }
                for (o, a) in out.iter_mut().zip(acc) {
                    *o = a as u64;
                }
            }
        }
        GFMatrix { n, q, data }
    }

    pub fn pow(&self, e: &BigUint) -> GFMatrix {
        let mut acc = GFMatrix::identity(self.n, self.q);
        for i in (0..e.bits()).rev() {
            acc = acc.mul(&acc);
            if e.bit(i) {
                acc = acc.mul(self);
            }
        }
        acc
    }

    /// Determinant over GF(q) by Gaussian elimination.
    pub fn det(&self) -> u64 {
        let n = self.n;
        let q = self.q;
        let mut a = self.data.clone();
        let mut det = 1u64;
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| a[r * n + c] != 0) else {
                return 0;
            };
            if p != c {
                for j in 0..n {
                    a.swap(p * n + j, c * n + j);
                }
                det = (q - det) % q;
            }
            let pivot = a[c * n + c];
            det = det * pivot % q;
            let inv = mod_inverse(pivot, q);
            for r in c + 1..n {
                let f = a[r * n + c] * inv % q;
                if f == 0 {
                    continue;
                }
                for j in c..n {
                    let sub = f * a[c * n + j] % q;
                    a[r * n + j] = (a[r * n + j] + q - sub) % q;
                }
            }
        }
        det
    }
}

fn mod_inverse(a: u64, q: u64) -> u64 {
    // q prime
    let mut acc = 1u128;
    let mut b = a as u128;
    let m = q as u128;
    let mut e = q - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc as u64
}

impl fmt::Display for GFMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(u64::to_string).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    FullOrder,
    NotFull,
    NotInvertible,
    /// `M^(q^n-1) = I` but `q^n - 1` could not be fully factored.
    Unknown,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::FullOrder => "FULL_ORDER",
            Verdict::NotFull => "NOT_FULL",
            Verdict::NotInvertible => "NOT_INVERTIBLE",
            Verdict::Unknown => "UNKNOWN",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Verdict {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "FULL_ORDER" => Ok(Verdict::FullOrder),
            "NOT_FULL" => Ok(Verdict::NotFull),
            "NOT_INVERTIBLE" => Ok(Verdict::NotInvertible),
            "UNKNOWN" => Ok(Verdict::Unknown),
            other => Err(Error::Parse(format!("unknown verdict {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderCheck {
    pub verdict: Verdict,
    /// Factorization of `q^n - 1`, present whenever it was needed.
    pub factorization: Option<PrimeFactorization>,
}

/// Decides whether `mat` has order exactly `q^n - 1`.
///
/// `NOT_FULL` is reported as soon as it is certain: either `M^N != I`, or
/// `M^(N/p) = I` for some prime `p` already found. `FULL_ORDER` requires the
/// complete factorization of `N`; otherwise the verdict is `UNKNOWN`.
pub fn order_is_full(mat: &GFMatrix, budget: FactorBudget) -> Result<OrderCheck> {
    if mat.det() == 0 {
        return Ok(OrderCheck { verdict: Verdict::NotInvertible, factorization: None });
    }
    let n = u32::try_from(mat.n).map_err(|_| Error::Domain("dimension too large".into()))?;
    let big_n = BigUint::from(mat.q).pow(n) - 1u32;
    if !mat.pow(&big_n).is_identity() {
        return Ok(OrderCheck { verdict: Verdict::NotFull, factorization: None });
    }
    let fact = factor_power_minus_one(mat.q, n, budget)?;
    let collapses = fact.primes().any(|p| mat.pow(&(&big_n / p)).is_identity());
    let verdict = if collapses {
        Verdict::NotFull
    } else if fact.complete {
        Verdict::FullOrder
    } else {
        Verdict::Unknown
    };
    Ok(OrderCheck { verdict, factorization: Some(fact) })
}

/// Exact multiplicative order when it divides `q^n - 1` and that number
/// factors completely; `None` otherwise.
pub fn order_dividing_power_minus_one(mat: &GFMatrix, budget: FactorBudget) -> Result<Option<BigUint>> {
    let n = mat.n as u32;
    let big_n = BigUint::from(mat.q).pow(n) - 1u32;
    if mat.det() == 0 || !mat.pow(&big_n).is_identity() {
        return Ok(None);
    }
    let fact = factor_power_minus_one(mat.q, n, budget)?;
    if !fact.complete {
        return Ok(None);
    }
    let mut order = big_n;
    for f in &fact.factors {
        for _ in 0..f.exponent {
            let candidate = &order / &f.prime;
            if mat.pow(&candidate).is_identity() {
                order = candidate;
            } else {
                break;
            }
        }
    }
    Ok(Some(order))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingerEntry {
    pub n: u32,
    pub verdict: Verdict,
    pub factorization: Option<PrimeFactorization>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingerReport {
    pub family: Parity,
    pub q: u64,
    pub n_start: u32,
    pub n_end: u32,
    pub budget: FactorBudget,
    pub entries: Vec<SingerEntry>,
}

impl SingerReport {
    pub fn full_order_at(&self) -> Vec<u32> {
        self.with_verdict(Verdict::FullOrder)
    }

    pub fn with_verdict(&self, v: Verdict) -> Vec<u32> {
        self.entries.iter().filter(|e| e.verdict == v).map(|e| e.n).collect()
    }

    pub fn verdict(&self, n: u32) -> Option<Verdict> {
        self.entries.iter().find(|e| e.n == n).map(|e| e.verdict)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanOptions {
    pub budget: FactorBudget,
    pub max_n: u32,
    /// Record per-n wall time. Off by default so reports are reproducible.
    pub timings: bool,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions { budget: FactorBudget::default(), max_n: DEFAULT_MAX_N, timings: false }
    }
}

/// Runs [`order_is_full`] on `O_n` or `E_n` for every `n` in
/// `n_start..=n_end`. Different `n` are evaluated in parallel; entries come
/// back ordered by `n`.
pub fn singer_scan(family: Parity, q: u64, n_start: u32, n_end: u32, opts: ScanOptions) -> Result<SingerReport> {
    check_prime_modulus(q)?;
    if n_start == 0 || n_start > n_end {
        return Err(Error::Domain(format!("invalid range {n_start}..{n_end}")));
    }
    if n_end > opts.max_n {
        return Err(Error::Domain(format!("n = {n_end} exceeds the configured maximum {}", opts.max_n)));
    }
    let entries = (n_start..=n_end)
        .into_par_iter()
        .map(|n| {
            let start = Instant::now();
            let mat = GFMatrix::reduced(family, n as usize, q)?;
            let check = order_is_full(&mat, opts.budget)?;
            Ok(SingerEntry {
                n,
                verdict: check.verdict,
                factorization: check.factorization,
                elapsed_ms: opts.timings.then(|| start.elapsed().as_millis() as u64),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SingerReport { family, q, n_start, n_end, budget: opts.budget, entries })
}

/// Scan evidence set against a conjectured set of full-order dimensions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureEvidence {
    pub statement: String,
    pub predicted: Vec<u32>,
    pub observed: Vec<u32>,
    /// `n = 1` verdicts, reported apart because a 1x1 matrix is degenerate.
    pub boundary: Vec<(u32, Verdict)>,
    pub unknown: Vec<u32>,
    /// Observed and predicted agree for every `n >= 2` with a definite verdict.
    pub consistent: bool,
}

fn evidence(report: &SingerReport, statement: String, predict: impl Fn(u32) -> bool) -> ConjectureEvidence {
    let body = report.entries.iter().filter(|e| e.n >= 2);
    let predicted: Vec<u32> = body.clone().filter(|e| predict(e.n)).map(|e| e.n).collect();
    let observed: Vec<u32> = body.clone().filter(|e| e.verdict == Verdict::FullOrder).map(|e| e.n).collect();
    let unknown: Vec<u32> = body.clone().filter(|e| e.verdict == Verdict::Unknown).map(|e| e.n).collect();
    let consistent =
        body.filter(|e| e.verdict != Verdict::Unknown).all(|e| predict(e.n) == (e.verdict == Verdict::FullOrder));
    let boundary = report.entries.iter().filter(|e| e.n == 1).map(|e| (e.n, e.verdict)).collect();
    ConjectureEvidence { statement, predicted, observed, boundary, unknown, consistent }
}

/// `O_n` has order `q^n - 1` iff `q = 3` and `n` is a power of two.
pub fn odd_conjecture_evidence(report: &SingerReport) -> ConjectureEvidence {
    let q3 = report.q == 3;
    evidence(report, format!("O_n over GF({}) has full order iff q = 3 and n is a power of two", report.q), |n| {
        q3 && n.is_power_of_two()
    })
}

/// `E_n` can have order `q^n - 1` only for `q` in {2, 3}. For other `q` the
/// prediction is empty; for `q` in {2, 3} the conjecture makes no
/// prediction, so the observed set is reported as is.
pub fn even_conjecture_evidence(report: &SingerReport) -> ConjectureEvidence {
    let q = report.q;
    if q == 2 || q == 3 {
        let observed = report.full_order_at();
        let mut ev = evidence(report, String::new(), |n| observed.contains(&n));
        ev.statement = format!("E_n over GF({q}): no restriction predicted");
        return ev;
    }
    evidence(report, format!("E_n over GF({q}) never has full order (q not in {{2, 3}})"), |_| false)
}

/// Reads `n,verdict` lines; blank lines and `#` comments are skipped.
pub fn parse_fixture(text: &str) -> Result<Vec<(u32, Verdict)>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(i, line)| {
            let (n, v) =
                line.split_once(',').ok_or_else(|| Error::Parse(format!("line {}: expected n,verdict", i + 1)))?;
            let n = n.trim().parse().map_err(|_| Error::Parse(format!("line {}: bad n {n:?}", i + 1)))?;
            Ok((n, v.parse()?))
        })
        .collect()
}

pub fn render_fixture(report: &SingerReport) -> String {
    report.entries.iter().map(|e| format!("{},{}\n", e.n, e.verdict)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureMismatch {
    pub n: u32,
    pub expected: Verdict,
    pub actual: Option<Verdict>,
}

/// Fixture lines whose verdict differs from the report (or that the report
/// does not cover).
pub fn diff_fixture(report: &SingerReport, expected: &[(u32, Verdict)]) -> Vec<FixtureMismatch> {
    expected
        .iter()
        .filter_map(|&(n, v)| {
            let actual = report.verdict(n);
            (actual != Some(v)).then_some(FixtureMismatch { n, expected: v, actual })
        })
        .collect()
}

/// Brute-force multiplicative order by repeated multiplication, capped.
pub fn brute_force_order(mat: &GFMatrix, cap: u64) -> Option<u64> {
    let mut acc = mat.clone();
    for k in 1..=cap {
        if acc.is_identity() {
            return Some(k);
        }
        acc = acc.mul(mat);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::from_i64;
    use num_traits::Zero;

    fn b() -> FactorBudget {
        FactorBudget::default()
    }

    #[test]
    fn reduce_examples() {
        let e2 = reduce_mod(&template(Parity::Even, 2), 2).unwrap();
        assert_eq!(e2.rows(), [[1, 1], [1, 0]]);
        let o2 = reduce_mod(&template(Parity::Odd, 2), 3).unwrap();
        assert_eq!(o2.rows(), [[1, 1], [2, 1]]);
        let e1 = reduce_mod(&template(Parity::Even, 1), 2).unwrap();
        assert_eq!(e1.rows(), [[0]]);
        assert_eq!(reduce_mod(&from_i64(&[&[-1]]), 5).unwrap().rows(), [[4]]);
        assert_eq!(reduce_mod(&template(Parity::Even, 2), 4), Err(Error::NotPrime("4".into())));
        assert!(reduce_mod(&template(Parity::Even, 2), 1).is_err());
    }

    #[test]
    fn order_examples() {
        let e2 = GFMatrix::reduced(Parity::Even, 2, 2).unwrap();
        assert_eq!(order_is_full(&e2, b()).unwrap().verdict, Verdict::FullOrder);
        assert_eq!(brute_force_order(&e2, 100), Some(3));

        let o2 = GFMatrix::reduced(Parity::Odd, 2, 3).unwrap();
        assert_eq!(order_is_full(&o2, b()).unwrap().verdict, Verdict::FullOrder);
        let sq = o2.mul(&o2);
        assert_eq!(sq.rows(), [[0, 2], [1, 0]]);
        assert_eq!(brute_force_order(&o2, 100), Some(8));

        // det E_4 = -2, so E_4 is singular mod 2: not full either way
        let e4 = GFMatrix::reduced(Parity::Even, 4, 2).unwrap();
        assert_eq!(order_is_full(&e4, b()).unwrap().verdict, Verdict::NotInvertible);
        let e6 = GFMatrix::reduced(Parity::Even, 6, 2).unwrap();
        assert_eq!(order_is_full(&e6, b()).unwrap().verdict, Verdict::NotFull);

        let e1 = GFMatrix::reduced(Parity::Even, 1, 2).unwrap();
        assert_eq!(order_is_full(&e1, b()).unwrap().verdict, Verdict::NotInvertible);
    }

    #[test]
    fn scan_examples() {
        let r = singer_scan(Parity::Even, 2, 2, 14, ScanOptions::default()).unwrap();
        assert_eq!(r.full_order_at(), [2, 3, 5, 9, 11, 14]);
        let r = singer_scan(Parity::Even, 3, 3, 11, ScanOptions::default()).unwrap();
        assert_eq!(r.full_order_at(), [3, 5, 9, 11]);
        let r = singer_scan(Parity::Odd, 3, 1, 4, ScanOptions::default()).unwrap();
        assert_eq!(r.full_order_at(), [2, 4]);
        assert_eq!(r.verdict(1), Some(Verdict::NotFull));
    }

    #[test]
    fn scan_rejects_bad_input() {
        let o = ScanOptions::default();
        assert!(matches!(singer_scan(Parity::Even, 6, 2, 3, o), Err(Error::NotPrime(_))));
        assert!(singer_scan(Parity::Even, 2, 0, 3, o).is_err());
        assert!(singer_scan(Parity::Even, 2, 5, 3, o).is_err());
        assert!(singer_scan(Parity::Even, 2, 2, DEFAULT_MAX_N + 1, o).is_err());
    }

    #[test]
    fn starved_factorization_is_unknown() {
        // E_53 over GF(2) has full order, but not with a one-step budget
        let mat = GFMatrix::reduced(Parity::Even, 53, 2).unwrap();
        let starved = FactorBudget { trial_bound: 2, rho_iterations: 1 };
        let check = order_is_full(&mat, starved).unwrap();
        assert_eq!(check.verdict, Verdict::Unknown);
        assert!(!check.factorization.unwrap().complete);
    }

    #[test]
    fn fixture_round_trip() {
        let r = singer_scan(Parity::Even, 2, 1, 6, ScanOptions::default()).unwrap();
        let text = render_fixture(&r);
        let parsed = parse_fixture(&format!("# header\n\n{text}")).unwrap();
        assert!(diff_fixture(&r, &parsed).is_empty());
        let wrong = vec![(4, Verdict::FullOrder), (9, Verdict::NotFull)];
        let diff = diff_fixture(&r, &wrong);
        assert_eq!(diff.len(), 2);
        assert_eq!(diff[1].actual, None);
        assert!(parse_fixture("3;FULL_ORDER").is_err());
        assert!(parse_fixture("3,FULL").is_err());
        assert!(parse_fixture("x,FULL_ORDER").is_err());
    }

    #[test]
    fn determinant_mod_q() {
        let m = GFMatrix::reduced(Parity::Odd, 3, 5).unwrap();
        // det O_3 = -2
        assert_eq!(m.det(), 3);
        assert_eq!(GFMatrix::reduced(Parity::Odd, 3, 2).unwrap().det(), 0);
    }

    #[test]
    fn determinant_matches_closed_form() {
        use crate::recurrence::det_closed_form;
        for q in [2u64, 3, 5, 7] {
            for parity in [Parity::Odd, Parity::Even] {
                for n in 1..=30 {
                    let det = det_closed_form(parity.rows_for(n)).mod_floor(&BigInt::from(q));
                    let m = GFMatrix::reduced(parity, n, q).unwrap();
                    assert_eq!(BigInt::from(m.det()), det, "{parity}_{n} mod {q}");
                }
            }
        }
    }

    #[test]
    fn full_verdicts_are_sound() {
        for (parity, q, hi) in [(Parity::Even, 2, 30), (Parity::Even, 3, 20), (Parity::Odd, 3, 16)] {
            let r = singer_scan(parity, q, 1, hi, ScanOptions::default()).unwrap();
            for e in r.entries.iter().filter(|e| e.verdict == Verdict::FullOrder) {
                let m = GFMatrix::reduced(parity, e.n as usize, q).unwrap();
                let big_n = BigUint::from(q).pow(e.n) - 1u32;
                assert!(m.pow(&big_n).is_identity());
                let f = e.factorization.as_ref().unwrap();
                assert!(f.complete && f.product() == big_n);
                for p in f.primes() {
                    assert!(!m.pow(&(&big_n / p)).is_identity(), "{parity}_{} over GF({q}), p = {p}", e.n);
                }
            }
        }
    }

    #[test]
    fn scans_are_reproducible() {
        let a = singer_scan(Parity::Even, 3, 1, 25, ScanOptions::default()).unwrap();
        let b = singer_scan(Parity::Even, 3, 1, 25, ScanOptions::default()).unwrap();
        assert_eq!(a, b);
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }

    fn gl_order(n: u32, q: u64) -> BigUint {
        let qn = BigUint::from(q).pow(n);
        (0..n).map(|i| &qn - BigUint::from(q).pow(i)).product()
    }

    proptest::proptest! {
        #[test]
        fn verdict_matches_brute_force(
            n in 1usize..=3,
            qi in 0usize..4,
            raw in proptest::collection::vec(0u64..1000, 9),
        ) {
            let q = [2u64, 3, 5, 7][qi];
            let rows: Vec<Vec<BigInt>> = (0..n)
                .map(|i| (0..n).map(|j| BigInt::from(raw[i * 3 + j])).collect())
                .collect();
            let m = reduce_mod(&rows, q).unwrap();
            let check = order_is_full(&m, b()).unwrap();
            let full = BigUint::from(q).pow(n as u32) - 1u32;
            if m.det() == 0 {
                proptest::prop_assert_eq!(check.verdict, Verdict::NotInvertible);
            } else {
                let order = brute_force_order(&m, q.pow(n as u32)).expect("element orders in GL(n,q) are below q^n");
                let order = BigUint::from(order);
                proptest::prop_assert!((gl_order(n as u32, q) % &order).is_zero());
                proptest::prop_assert_eq!(check.verdict == Verdict::FullOrder, order == full);
                proptest::prop_assert!(check.verdict != Verdict::Unknown);
                if let Some(exact) = order_dividing_power_minus_one(&m, b()).unwrap() {
                    proptest::prop_assert_eq!(exact, order);
                }
            }
        }
    }
}
