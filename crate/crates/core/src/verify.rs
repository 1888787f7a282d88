//! The identity suite behind `verify`: every table, recurrence and operator
//! identity, each checked exhaustively over a bounded parameter range.
//!
//! Checks never return errors. A library error raised while evaluating a
//! case counts as a failed case and is described in `first_failure`.

use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classical::{check_claim, Claim};
use crate::deltaops::{
    closed_form, multiplier, multipliers, odd_factorization, uniform_factorization, CompositionBase, DeltaPoly, Family,
};
use crate::error::Result;
use crate::linalg;
use crate::pathtable::{enumerate_paths, half_height, PathTable, DEFAULT_NODE_BUDGET};
use crate::recurrence::{
    default_probe, det_closed_form, det_reduced, equivalence_report, full_transfer_matrix, has_recurrence_of_degree,
    minimal_recurrence, reduced_matrix, row_combination_witness, row_constant_combinations, window_det,
};

/// Oracle comparisons are capped here regardless of the requested bounds.
pub const ORACLE_MAX_M: usize = 6;
pub const ORACLE_MAX_X: usize = 10;
/// Minimality is checked by rank computations up to this `m`.
pub const MINIMALITY_MAX_M: usize = 10;
pub const WINDOW_MAX_M: usize = 10;
pub const WINDOW_MAX_N: usize = 12;
pub const IM_FORMULA_MAX_N: usize = 25;

pub const OPERATOR_MAX_AB: i64 = 12;
pub const PRODUCT_MAX_AB: i64 = 8;
pub const COMPOSE_MAX_AB: i64 = 10;
pub const OPERATOR_MAX_N: i64 = 40;
pub const FACTORIZATION_MAX_N: u64 = 64;
pub const CLASSICAL_MAX_N: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub cases: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

struct Tally {
    out: CheckOutcome,
}

impl Tally {
    fn new(name: &str) -> Self {
        Tally {
            out: CheckOutcome { name: name.to_string(), cases: 0, failures: 0, first_failure: None, elapsed_ms: None },
        }
    }

    fn case(&mut self, res: Result<bool>, what: impl FnOnce() -> String) {
        self.out.cases += 1;
        let failure = match res {
            Ok(true) => return,
            Ok(false) => what(),
            Err(e) => format!("{}: {e}", what()),
        };
        self.out.failures += 1;
        self.out.first_failure.get_or_insert(failure);
    }

    fn done(self) -> CheckOutcome {
        self.out
    }
}

/// Rows `0..=m+1` of a table as signed sequences; rows `0` and `m+1` are
/// the zero boundary.
struct Rows {
    rows: Vec<Vec<BigInt>>,
    sums: Vec<BigInt>,
}

impl Rows {
    fn build(m: usize, len: usize) -> Result<Self> {
        let table = PathTable::build(m, len)?;
        let mut rows = vec![vec![BigInt::zero(); len]];
        for y in 1..=m {
            rows.push(table.row_sequence(y)?);
        }
        rows.push(vec![BigInt::zero(); len]);
        let sums = table.column_sum_sequence();
        Ok(Rows { rows, sums })
    }
}

fn act(p: &DeltaPoly, seq: &[BigInt], n: usize) -> Result<BigInt> {
    p.apply(seq, n)
}

fn fam(m: usize) -> Family {
    Family::for_rows(m)
}

fn m_of(f: Family, n: i64) -> Result<DeltaPoly> {
    multiplier(f, n)
}

fn prime(n: i64) -> Result<DeltaPoly> {
    multiplier(Family::Prime, n)
}

// ---- table identities ----

pub fn check_oracle(m_max: usize, x_max: usize, budget: u64) -> CheckOutcome {
    let mut t = Tally::new("oracle_equivalence");
    for m in 1..=m_max {
        let Ok(table) = PathTable::build(m, x_max) else { continue };
        for x in 1..=x_max {
            for y in 1..=m {
                let res = enumerate_paths(m, (x, y), budget).and_then(|b| Ok(b == table.cell(x, y)?));
                t.case(res, || format!("m={m}, cell ({x},{y})"));
            }
        }
    }
    t.done()
}

pub fn check_row_symmetry(m_max: usize, n_max: usize) -> CheckOutcome {
    let mut t = Tally::new("row_symmetry");
    for m in 1..=m_max {
        let Ok(table) = PathTable::build(m, n_max) else { continue };
        for x in 1..=n_max {
            for y in 1..=m {
                let res = table.cell(x, y).and_then(|a| Ok(a == table.cell(x, m + 1 - y)?));
                t.case(res, || format!("m={m}, cell ({x},{y})"));
            }
        }
    }
    t.done()
}

pub fn check_monotone(m_max: usize, n_max: usize) -> CheckOutcome {
    let mut t = Tally::new("monotone_growth");
    for m in 1..=m_max {
        let Ok(table) = PathTable::build(m, n_max) else { continue };
        for x in 1..n_max {
            for y in 1..=m {
                let res = table.cell(x, y).and_then(|a| Ok(table.cell(x + 1, y)? >= a));
                t.case(res, || format!("m={m}, cell ({x},{y})"));
            }
        }
    }
    t.done()
}

/// `3 I_m(n) - I_m(n+1) = 2 C(n,1)`
pub fn check_sum_deficit(m_max: usize, n_max: usize) -> CheckOutcome {
    let mut t = Tally::new("column_sum_deficit");
    for m in 1..=m_max {
        let Ok(table) = PathTable::build(m, n_max + 1) else { continue };
        for n in 1..=n_max {
            let res = (|| {
                let lhs = BigInt::from(3u32 * table.column_sum(n)?) - BigInt::from(table.column_sum(n + 1)?);
                Ok(lhs == BigInt::from(2u32 * table.cell(n, 1)?))
            })();
            t.case(res, || format!("m={m}, n={n}"));
        }
    }
    t.done()
}

/// `T*_m C*(n) = C*(n+1)` and `T_m C(n) = C(n+1)`.
pub fn check_transfer(m_max: usize, n_max: usize) -> CheckOutcome {
    let mut t = Tally::new("transfer_property");
    let signed = |v: &[BigUint]| -> Vec<BigInt> { v.iter().cloned().map(BigInt::from).collect() };
    for m in 1..=m_max {
        let (Ok(table), Ok(red)) = (PathTable::build(m, n_max + 1), reduced_matrix(m)) else { continue };
        let full = full_transfer_matrix(m);
        for n in 1..=n_max {
            let res = (|| {
                let a = table.reduced_column(n)?.entries;
                let b = table.reduced_column(n + 1)?.entries;
                let reduced_ok = linalg::mat_vec(&red.entries, &signed(&a)) == signed(&b);
                let full_ok = linalg::mat_vec(&full, &signed(table.column(n)?)) == signed(table.column(n + 1)?);
                Ok(reduced_ok && full_ok)
            })();
            t.case(res, || format!("m={m}, n={n}"));
        }
    }
    t.done()
}

/// `M_m(k)` kills every row and the column sums.
pub fn check_annihilation(m_max: usize, n_max: usize) -> CheckOutcome {
    let mut t = Tally::new("annihilation");
    for m in 1..=m_max {
        let k = half_height(m);
        let Ok(rows) = Rows::build(m, n_max + k) else { continue };
        let Ok(op) = m_of(fam(m), k as i64) else { continue };
        for n in 1..=n_max {
            for y in 1..=m {
                t.case(act(&op, &rows.rows[y], n).map(|v| v.is_zero()), || format!("m={m}, row {y}, n={n}"));
            }
            t.case(act(&op, &rows.sums, n).map(|v| v.is_zero()), || format!("m={m}, I_m, n={n}"));
        }
    }
    t.done()
}

/// The solved recurrence holds on every row and on `I_m`.
pub fn check_recurrence_holds(m_max: usize, n_max: usize) -> CheckOutcome {
    let mut t = Tally::new("recurrence_holds");
    for m in 1..=m_max {
        let k = half_height(m);
        let res = (|| {
            let rec = minimal_recurrence(m)?;
            let rows = Rows::build(m, n_max + k)?;
            let mut ok = rec.violations(&rows.sums).is_empty();
            for y in 1..=m {
                ok &= rec.violations(&rows.rows[y]).is_empty();
            }
            Ok(ok)
        })();
        t.case(res, || format!("m={m}"));
    }
    t.done()
}

/// No recurrence of degree below `k` fits `C(., 1)`, while degree `k` does.
pub fn check_minimality(m_max: usize) -> CheckOutcome {
    let mut t = Tally::new("minimality");
    for m in 1..=m_max {
        let k = half_height(m);
        let res = (|| {
            let rows = Rows::build(m, 2 * k + 4)?;
            let seq = &rows.rows[1];
            Ok(!has_recurrence_of_degree(seq, k - 1) && has_recurrence_of_degree(seq, k))
        })();
        t.case(res, || format!("m={m}"));
    }
    t.done()
}

/// `(2 - Δ) I_m(n) = 2 C(n, 1)`
pub fn check_bridge_identity(m_max: usize, n_max: usize) -> CheckOutcome {
    let mut t = Tally::new("bridge_identity");
    let op = DeltaPoly::from_i64s(&[2, -1]);
    for m in 1..=m_max {
        let Ok(rows) = Rows::build(m, n_max + 1) else { continue };
        for n in 1..=n_max {
            let res = act(&op, &rows.sums, n).map(|v| v == &rows.rows[1][n - 1] * 2);
            t.case(res, || format!("m={m}, n={n}"));
        }
    }
    t.done()
}

/// Elimination and the period-6 closed form agree on `det T*_m`.
pub fn check_det_lemma(ms: impl IntoIterator<Item = usize>) -> CheckOutcome {
    let mut t = Tally::new("determinant_lemma");
    for m in ms {
        let res = reduced_matrix(m).map(|r| linalg::determinant(&r.entries) == det_closed_form(m));
        t.case(res, || format!("m={m}"));
    }
    t.done()
}

/// `det [C*(n+1) .. C*(n+k)] = det(T*_m)^n`
pub fn check_window_dets(m_max: usize, n_max: usize) -> CheckOutcome {
    let mut t = Tally::new("window_determinants");
    for m in 1..=m_max {
        let k = half_height(m);
        let Ok(table) = PathTable::build(m, n_max + k) else { continue };
        for n in 1..=n_max {
            let res = (|| Ok(window_det(&table, n)? == det_reduced(m)?.pow(n as u32)))();
            t.case(res, || format!("m={m}, n={n}"));
        }
    }
    t.done()
}

/// `det(xI - T*_m) = M_m(k)(x - 1) = ` the recurrence polynomial.
pub fn check_three_polynomials(ms: impl IntoIterator<Item = usize>) -> CheckOutcome {
    let mut t = Tally::new("three_polynomials");
    for m in ms {
        t.case(equivalence_report(m).map(|r| r.all_equal), || format!("m={m}"));
    }
    t.done()
}

/// `M_m(k-b) C(n,a) = M_m(k-a) C(n,b)` and `M'(b-1) C(n,a) = M'(a-1) C(n,b)`
pub fn check_row_equivalence(m_max: usize, n_max: usize) -> CheckOutcome {
    let mut t = Tally::new("row_equivalence");
    for m in 1..=m_max {
        let k = half_height(m);
        let Ok(rows) = Rows::build(m, n_max + k) else { continue };
        for a in 1..=k {
            for b in 1..=k {
                let (ai, bi) = (a as i64, b as i64);
                for n in 1..=n_max {
                    let res = (|| {
                        let f = fam(m);
                        let lhs = act(&m_of(f, (k - b) as i64)?, &rows.rows[a], n)?;
                        let rhs = act(&m_of(f, (k - a) as i64)?, &rows.rows[b], n)?;
                        let lhs2 = act(&prime(bi - 1)?, &rows.rows[a], n)?;
                        let rhs2 = act(&prime(ai - 1)?, &rows.rows[b], n)?;
                        Ok(lhs == rhs && lhs2 == rhs2)
                    })();
                    t.case(res, || format!("m={m}, a={a}, b={b}, n={n}"));
                }
            }
        }
    }
    t.done()
}

/// `M_o(b) C(n,a) = C(n,a-b) + C(n,a+b)` for `0 <= b <= min(a, k-a)`.
pub fn check_general_action(m_max: usize, n_max: usize) -> CheckOutcome {
    let mut t = Tally::new("general_action");
    for m in 1..=m_max {
        let k = half_height(m);
        let Ok(rows) = Rows::build(m, n_max + k) else { continue };
        for a in 1..=k {
            for b in 0..=a.min(k - a) {
                let Ok(op) = m_of(Family::Odd, b as i64) else { continue };
                for n in 1..=n_max {
                    let res =
                        act(&op, &rows.rows[a], n).map(|v| v == &rows.rows[a - b][n - 1] + &rows.rows[a + b][n - 1]);
                    t.case(res, || format!("m={m}, a={a}, b={b}, n={n}"));
                }
            }
        }
    }
    t.done()
}

fn sum_ops(ops: impl IntoIterator<Item = Result<DeltaPoly>>) -> Result<DeltaPoly> {
    ops.into_iter().try_fold(DeltaPoly::zero(), |acc, p| Ok(&acc + &p?))
}

/// The three `I_m` corollaries, for every `a <= k`:
///
/// * `M_m(k-a) I = 2(M_m(k-1) + ... + M_m(1) + 1) C(n,a)`
/// * `M_m(0) M'(a-1) I = 2(M'(k-1) + M_m(0)(M'(k-2) + ... + M'(0))) C(n,a)`
///   (the stated form divided through by `M_m(0)`)
/// * `M_m(k-a) I = 2(M'(k-1) + (M_m(0) - 1) M'(k-2)) C(n,a)`
pub fn check_im_formulas(m_max: usize, n_max: usize) -> CheckOutcome {
    let mut t = Tally::new("column_sum_formulas");
    for m in 1..=m_max {
        let k = half_height(m) as i64;
        let f = fam(m);
        let ops = (|| {
            let m0 = DeltaPoly::constant(f.base_constant());
            let partial = sum_ops((1..k).map(|j| m_of(f, j)))?.add(&DeltaPoly::one()).scale(2);
            let prime_tail = sum_ops((0..k - 1).map(prime))?;
            let prime_side = (&prime(k - 1)? + &(&m0 * &prime_tail)).scale(2);
            let combined = (&prime(k - 1)? + &(&(&m0 - &DeltaPoly::one()) * &prime(k - 2)?)).scale(2);
            Ok::<_, crate::Error>((m0, partial, prime_side, combined))
        })();
        let Ok((m0, partial, prime_side, combined)) = ops else {
            t.case(ops.map(|_| true), || format!("m={m}: building operators"));
            continue;
        };
        let Ok(rows) = Rows::build(m, n_max + k as usize) else { continue };
        for a in 1..=k {
            for n in 1..=n_max {
                let res = (|| {
                    let c = &rows.rows[a as usize];
                    let left_m = act(&m_of(f, k - a)?, &rows.sums, n)?;
                    let left_p = act(&(&m0 * &prime(a - 1)?), &rows.sums, n)?;
                    Ok(left_m == act(&partial, c, n)?
                        && left_p == act(&prime_side, c, n)?
                        && left_m == act(&combined, c, n)?)
                })();
                t.case(res, || format!("m={m}, a={a}, n={n}"));
            }
        }
    }
    t.done()
}

/// A constant combination beyond the antisymmetric ones exists iff
/// `m ≡ 1 (mod 4)`, and then the alternating witness sums to 1.
pub fn check_row_combinations(ms: impl IntoIterator<Item = usize>, n_max: usize) -> CheckOutcome {
    let mut t = Tally::new("row_combinations");
    for m in ms {
        let res = (|| {
            let report = row_constant_combinations(m, default_probe(m))?;
            let expect = m % 4 == 1;
            if report.exists != expect {
                return Ok(false);
            }
            if !expect {
                return Ok(true);
            }
            let w = row_combination_witness(m);
            let table = PathTable::build(m, n_max)?;
            let mut ok = report.matches_witness && report.lambda.is_one();
            for n in 1..=n_max {
                let s: BigInt = w.iter().zip(table.column(n)?).map(|(a, c)| a * BigInt::from(c.clone())).sum();
                ok &= s.is_one();
            }
            Ok(ok)
        })();
        t.case(res, || format!("m={m}"));
    }
    t.done()
}

// ---- operator identities ----

const FAMILIES: [Family; 3] = [Family::Odd, Family::Even, Family::Prime];

pub fn check_closed_forms(n_max: i64) -> CheckOutcome {
    let mut t = Tally::new("closed_forms");
    for f in FAMILIES {
        let rec = multipliers(f, n_max as usize);
        for n in 0..=n_max {
            t.case(closed_form(f, n).map(|c| c == rec[n as usize]), || format!("{f} n={n}"));
        }
    }
    t.done()
}

/// `X(a+b) = M'(a) X(b) - M'(a-1) X(b-1)` for `X` in every family.
pub fn check_addition(max: i64) -> CheckOutcome {
    let mut t = Tally::new("addition_theorem");
    for f in FAMILIES {
        for a in 1..=max {
            for b in 1..=max {
                let res =
                    (|| Ok(m_of(f, a + b)? == &(&prime(a)? * &m_of(f, b)?) - &(&prime(a - 1)? * &m_of(f, b - 1)?)))();
                t.case(res, || format!("{f} a={a}, b={b}"));
            }
        }
    }
    t.done()
}

/// `M_o(b) X(a) = X(a+b) + X(a-b)` for `0 <= b <= a`.
pub fn check_action(max: i64) -> CheckOutcome {
    let mut t = Tally::new("action_theorem");
    for f in FAMILIES {
        for a in 0..=max {
            for b in 0..=a {
                let res = (|| Ok(&m_of(Family::Odd, b)? * &m_of(f, a)? == &m_of(f, a + b)? + &m_of(f, a - b)?))();
                t.case(res, || format!("{f} a={a}, b={b}"));
            }
        }
    }
    t.done()
}

/// `X(ab) = M'(a-1)(M_o(b)) X(b) - M'(a-2)(M_o(b)) X(0)`
pub fn check_product(max: i64) -> CheckOutcome {
    let mut t = Tally::new("product_theorem");
    for f in FAMILIES {
        for a in 1..=max {
            for b in 1..=max {
                let res = (|| {
                    let base = m_of(Family::Odd, b)?;
                    let rhs = &(&prime(a - 1)?.compose(&base) * &m_of(f, b)?)
                        - &(&prime(a - 2)?.compose(&base) * &m_of(f, 0)?);
                    Ok(m_of(f, a * b)? == rhs)
                })();
                t.case(res, || format!("{f} a={a}, b={b}"));
            }
        }
    }
    t.done()
}

/// `M_o(a)∘M_o(b) = M_o(ab) = M_o(b)∘M_o(a)`, the prime decomposition of
/// `M_o(n)`, and the prime-function rebuild of every family.
pub fn check_factorization(compose_max: i64, n_max: u64) -> CheckOutcome {
    let mut t = Tally::new("odd_factorization");
    for a in 1..=compose_max {
        for b in 1..=compose_max {
            let res = (|| {
                let (ma, mb) = (m_of(Family::Odd, a)?, m_of(Family::Odd, b)?);
                let target = m_of(Family::Odd, a * b)?;
                Ok(ma.compose(&mb) == target && mb.compose(&ma) == target)
            })();
            t.case(res, || format!("compose a={a}, b={b}"));
        }
    }
    for n in 1..=n_max {
        t.case((|| Ok(odd_factorization(n)? == m_of(Family::Odd, n as i64)?))(), || {
            format!("prime decomposition n={n}")
        });
        for f in FAMILIES {
            t.case((|| Ok(uniform_factorization(f, n, CompositionBase::Odd)? == m_of(f, n as i64)?))(), || {
                format!("{f} prime functions n={n}")
            });
        }
    }
    t.done()
}

/// `M_e(n) = M'(n) - M'(n-1)` and `M_o(n) = M'(n) - M'(n-2)`
pub fn check_bridge_lemma(n_max: i64) -> CheckOutcome {
    let mut t = Tally::new("bridge_lemma");
    for n in 1..=n_max {
        let res = (|| {
            Ok(m_of(Family::Even, n)? == &prime(n)? - &prime(n - 1)?
                && m_of(Family::Odd, n)? == &prime(n)? - &prime(n - 2)?)
        })();
        t.case(res, || format!("n={n}"));
    }
    t.done()
}

/// `1 + M_m(1) + ... + M_m(n) = M'(n) + (M_m(0) - 1) M'(n-1)`
pub fn check_partial_sums(n_max: i64) -> CheckOutcome {
    let mut t = Tally::new("partial_sums");
    for f in [Family::Odd, Family::Even] {
        let mut acc = DeltaPoly::one();
        for n in 1..=n_max {
            let res = (|| {
                acc = &acc + &m_of(f, n)?;
                let c = DeltaPoly::constant(f.base_constant() - 1);
                Ok(acc == &prime(n)? + &(&c * &prime(n - 1)?))
            })();
            t.case(res, || format!("{f} n={n}"));
        }
    }
    t.done()
}

/// `M'(a-1) M_m(k-1) ≡ M_m(k-a) (mod M_m(k))`
pub fn check_congruence(max: i64) -> CheckOutcome {
    let mut t = Tally::new("congruence");
    for f in [Family::Odd, Family::Even] {
        for k in 1..=max {
            for a in 1..=k {
                let res = (|| {
                    let prod = &prime(a - 1)? * &m_of(f, k - 1)?;
                    Ok(prod.mod_reduce(&m_of(f, k)?)? == m_of(f, k - a)?)
                })();
                t.case(res, || format!("{f} k={k}, a={a}"));
            }
        }
    }
    t.done()
}

/// The classical identifications that do hold; see [`Claim::CORRECTED`].
pub fn check_classical(claims: &[Claim], n_max: usize) -> CheckOutcome {
    let mut t = Tally::new("classical_polynomials");
    for &claim in claims {
        let r = check_claim(claim, n_max);
        let mismatch = r.first_mismatch.clone();
        t.case(Ok(r.holds()), || format!("{claim}: {}", mismatch.map(|m| m.to_string()).unwrap_or_default()));
    }
    t.done()
}

// ---- suite ----

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub m_max: usize,
    pub n_max: usize,
    pub oracle_budget: u64,
    pub timings: bool,
}

impl SuiteConfig {
    pub fn new(m_max: usize, n_max: usize) -> Self {
        SuiteConfig { m_max, n_max, oracle_budget: DEFAULT_NODE_BUDGET, timings: false }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub m_max: usize,
    pub n_max: usize,
    pub checks: Vec<CheckOutcome>,
    pub passed: bool,
}

type Check = Box<dyn Fn() -> CheckOutcome + Send + Sync>;

fn checks(cfg: SuiteConfig) -> Vec<Check> {
    let SuiteConfig { m_max, n_max, oracle_budget, .. } = cfg;
    let im_n = n_max.min(IM_FORMULA_MAX_N);
    vec![
        Box::new(move || check_oracle(m_max.min(ORACLE_MAX_M), n_max.min(ORACLE_MAX_X), oracle_budget)),
        Box::new(move || check_row_symmetry(m_max, n_max)),
        Box::new(move || check_monotone(m_max, n_max)),
        Box::new(move || check_sum_deficit(m_max, n_max)),
        Box::new(move || check_transfer(m_max, n_max)),
        Box::new(move || check_annihilation(m_max, n_max)),
        Box::new(move || check_recurrence_holds(m_max, n_max)),
        Box::new(move || check_minimality(m_max.min(MINIMALITY_MAX_M))),
        Box::new(move || check_bridge_identity(m_max, n_max)),
        Box::new(move || check_det_lemma(1..=m_max)),
        Box::new(move || check_window_dets(m_max.min(WINDOW_MAX_M), n_max.min(WINDOW_MAX_N))),
        Box::new(move || check_three_polynomials(1..=m_max)),
        Box::new(move || check_row_equivalence(m_max, n_max)),
        Box::new(move || check_general_action(m_max, n_max)),
        Box::new(move || check_im_formulas(m_max, im_n)),
        Box::new(move || check_row_combinations(1..=m_max, n_max)),
        Box::new(|| check_closed_forms(OPERATOR_MAX_N)),
        Box::new(|| check_addition(OPERATOR_MAX_AB)),
        Box::new(|| check_action(OPERATOR_MAX_AB)),
        Box::new(|| check_product(PRODUCT_MAX_AB)),
        Box::new(|| check_factorization(COMPOSE_MAX_AB, FACTORIZATION_MAX_N)),
        Box::new(|| check_bridge_lemma(OPERATOR_MAX_N)),
        Box::new(|| check_partial_sums(OPERATOR_MAX_N)),
        Box::new(|| check_congruence(OPERATOR_MAX_AB)),
        Box::new(|| check_classical(&Claim::CORRECTED, CLASSICAL_MAX_N)),
    ]
}

/// Runs every check. Checks run in parallel; the report lists them in a
/// fixed order.
pub fn run_suite(cfg: SuiteConfig) -> SuiteReport {
    let checks: Vec<CheckOutcome> = checks(cfg)
        .par_iter()
        .map(|c| {
            let start = Instant::now();
            let mut out = c();
            if cfg.timings {
                out.elapsed_ms = Some(start.elapsed().as_millis() as u64);
            }
            out
        })
        .collect();
    SuiteReport { m_max: cfg.m_max, n_max: cfg.n_max, passed: checks.iter().all(CheckOutcome::passed), checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_suite_passes() {
        let r = run_suite(SuiteConfig::new(6, 20));
        for c in &r.checks {
            assert!(c.passed(), "{} failed: {:?}", c.name, c.first_failure);
            assert!(c.cases > 0, "{} ran no cases", c.name);
        }
        assert!(r.passed);
    }

    #[test]
    fn degenerate_suite_passes() {
        assert!(run_suite(SuiteConfig::new(1, 5)).passed);
    }

    #[test]
    fn stated_pairing_is_reported() {
        let c = check_classical(&Claim::STATED, 20);
        assert_eq!(c.failures, 2);
        assert!(c.first_failure.unwrap().contains("n=1"));
    }

    #[test]
    fn tally_records_errors() {
        let mut t = Tally::new("x");
        t.case(Err(crate::Error::Singular), || "case".into());
        t.case(Ok(true), || unreachable!());
        let out = t.done();
        assert_eq!((out.cases, out.failures), (2, 1));
        assert_eq!(out.first_failure.as_deref(), Some("case: singular system"));
    }
}
