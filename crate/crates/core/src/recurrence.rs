//! Reduced transfer matrices and the minimal linear recurrence shared by
//! every row and by the column sums of an `m`-row table.
//!
//! By row symmetry the top `k = ⌈m/2⌉` entries of a column determine it, and
//! the `k x k` reduced matrix `T*` advances them one column. Its
//! characteristic polynomial is the minimal recurrence polynomial, and it
//! equals the multiplier `M_m(k)` read in the shift `x = Δ + 1`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::deltaops::{multiplier, Family};
use crate::error::{Error, Result};
use crate::linalg::{self, IntMatrix};
use crate::pathtable::{half_height, PathTable};
use crate::poly::IntPoly;
use crate::serde_big::{bigint_str, bigint_str_vec};

/// Which reduced template a matrix follows: `O_k` for odd row counts,
/// `E_k` for even ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Parity {
    #[serde(rename = "O")]
    Odd,
    #[serde(rename = "E")]
    Even,
}

impl Parity {
    pub fn of_rows(m: usize) -> Parity {
        if m % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    /// Number of table rows whose reduced matrix has size `k`.
    pub fn rows_for(self, k: usize) -> usize {
        match self {
            Parity::Odd => 2 * k - 1,
            Parity::Even => 2 * k,
        }
    }

    pub fn family(self) -> Family {
        match self {
            Parity::Odd => Family::Odd,
            Parity::Even => Family::Even,
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Odd => "O",
            Parity::Even => "E",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedMatrix {
    pub m: usize,
    pub k: usize,
    pub entries: IntMatrix,
}

/// The template `O_k` or `E_k`: tridiagonal ones, except that the last row
/// is `(.., 2, 1)` for `O_k` and `(.., 1, 2)` for `E_k`.
pub fn template(parity: Parity, k: usize) -> IntMatrix {
    let mut a = vec![vec![BigInt::zero(); k]; k];
    for (i, row) in a.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            if i.abs_diff(j) <= 1 {
                *v = BigInt::one();
            }
        }
    }
    if k == 0 {
        return a;
    }
    match parity {
        Parity::Odd if k >= 2 => a[k - 1][k - 2] = BigInt::from(2),
        Parity::Odd => {}
        Parity::Even => a[k - 1][k - 1] = BigInt::from(2),
    }
    a
}

pub fn reduced_matrix(m: usize) -> Result<ReducedMatrix> {
    if m == 0 {
        return Err(Error::Domain("row count m must be positive".into()));
    }
    let k = half_height(m);
    Ok(ReducedMatrix { m, k, entries: template(Parity::of_rows(m), k) })
}

/// The full `m x m` tridiagonal transfer matrix of ones.
pub fn full_transfer_matrix(m: usize) -> IntMatrix {
    template(Parity::Odd, m)
        .into_iter()
        .enumerate()
        .map(|(i, mut row)| {
            if m >= 2 && i == m - 1 {
                row[m - 2] = BigInt::one();
            }
            row
        })
        .collect()
}

/// The periodic closed form of `det T*_m`.
pub fn det_closed_form(m: usize) -> BigInt {
    let k = half_height(m);
    let (sign_exp, doubled) = match Parity::of_rows(m) {
        Parity::Odd => ((k + 1) / 3, k % 3 == 0),
        Parity::Even => (k / 3, k % 3 == 1),
    };
    let mag = BigInt::from(if doubled { 2 } else { 1 });
    if sign_exp % 2 == 1 {
        -mag
    } else {
        mag
    }
}

/// `det T*_m` by elimination, cross-checked against the closed form.
pub fn det_reduced(m: usize) -> Result<BigInt> {
    let mat = reduced_matrix(m)?;
    let det = linalg::determinant(&mat.entries);
    let closed = det_closed_form(m);
    if det != closed {
        return Err(Error::Inconsistent(format!(
            "det of reduced matrix for m={m}: elimination gives {det}, closed form {closed}"
        )));
    }
    Ok(det)
}

pub fn charpoly(mat: &ReducedMatrix) -> IntPoly {
    linalg::charpoly(&mat.entries)
}

/// `a(n+k) = α_1 a(n) + ... + α_k a(n+k-1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Recurrence {
    pub k: usize,
    #[serde(with = "bigint_str_vec")]
    pub alphas: Vec<BigInt>,
}

impl Recurrence {
    /// `x^k - α_k x^(k-1) - ... - α_1`.
    pub fn polynomial(&self) -> IntPoly {
        let mut coeffs: Vec<BigInt> = self.alphas.iter().map(|a| -a).collect();
        coeffs.push(BigInt::one());
        IntPoly::new(coeffs)
    }

    /// Indices `n` (1-based) where `seq` violates the recurrence.
    pub fn violations(&self, seq: &[BigInt]) -> Vec<usize> {
        (0..seq.len().saturating_sub(self.k))
            .filter(|&i| {
                let rhs: BigInt = self.alphas.iter().zip(&seq[i..]).map(|(a, s)| a * s).sum();
                rhs != seq[i + self.k]
            })
            .map(|i| i + 1)
            .collect()
    }
}

impl fmt::Display for Recurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shift = |j: usize| if j == 0 { "a(n)".to_string() } else { format!("a(n+{j})") };
        write!(f, "{}=", shift(self.k))?;
        let mut first = true;
        for (j, a) in self.alphas.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let mag = a.abs();
            match (first, a.is_negative()) {
                (true, true) => f.write_str("-")?,
                (false, true) => f.write_str("-")?,
                (false, false) => f.write_str("+")?,
                (true, false) => {}
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            f.write_str(&shift(j))?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Solves `[C*(1) .. C*(k)] α = C*(k+1)` exactly; the matrix has
/// determinant 1 so the solution is integral.
pub fn minimal_recurrence(m: usize) -> Result<Recurrence> {
    if m == 0 {
        return Err(Error::Domain("row count m must be positive".into()));
    }
    let k = half_height(m);
    let table = PathTable::build(m, k + 1)?;
    let cols: Vec<Vec<BigInt>> = (1..=k).map(|n| reduced_signed(&table, n)).collect::<Result<_>>()?;
    let rhs = reduced_signed(&table, k + 1)?;
    let alphas = linalg::solve_integral(&linalg::from_columns(&cols), &rhs).map_err(|e| match e {
        Error::Singular | Error::NonIntegral => Error::Inconsistent(format!("initial window system for m={m}: {e}")),
        other => other,
    })?;
    if alphas[0].is_zero() {
        return Err(Error::Inconsistent(format!("recurrence for m={m} has α_1 = 0")));
    }
    Ok(Recurrence { k, alphas })
}

fn reduced_signed(table: &PathTable, n: usize) -> Result<Vec<BigInt>> {
    Ok(table.reduced_column(n)?.entries.into_iter().map(BigInt::from).collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceReport {
    pub m: usize,
    pub k: usize,
    pub recurrence: Recurrence,
    /// `det(xI - T*_m)`
    pub charpoly: String,
    /// `M_m(k)` with `Δ = x - 1`
    pub multiplier: String,
    /// `x^k` minus the recurrence combination
    pub recurrence_poly: String,
    pub all_equal: bool,
}

pub fn equivalence_report(m: usize) -> Result<EquivalenceReport> {
    let mat = reduced_matrix(m)?;
    let k = mat.k;
    let cp = charpoly(&mat);
    let x_minus_1 = IntPoly::from_i64s(&[-1, 1]);
    let mult = multiplier(Family::for_rows(m), k as i64)?.poly().compose(&x_minus_1);
    let rec = minimal_recurrence(m)?;
    let rp = rec.polynomial();
    Ok(EquivalenceReport {
        m,
        k,
        all_equal: cp == mult && mult == rp,
        charpoly: cp.to_string(),
        multiplier: mult.to_string(),
        recurrence_poly: rp.to_string(),
        recurrence: rec,
    })
}

/// `det [C*(n+1) .. C*(n+k)]`, checked against `det(T*_m)^n`.
pub fn window_det(table: &PathTable, n: usize) -> Result<BigInt> {
    let m = table.m();
    let k = half_height(m);
    if n + k > table.n_max() {
        return Err(Error::InsufficientLength { needed: n + k, len: table.n_max() });
    }
    let cols: Vec<Vec<BigInt>> = (n + 1..=n + k).map(|c| reduced_signed(table, c)).collect::<Result<_>>()?;
    let det = linalg::determinant(&linalg::from_columns(&cols));
    let expected = det_reduced(m)?.pow(n as u32);
    if det != expected {
        return Err(Error::Inconsistent(format!("window determinant m={m}, n={n}: {det} != det(T*)^n = {expected}")));
    }
    Ok(det)
}

/// Whether `seq` satisfies some linear recurrence of degree at most `degree`:
/// true iff the Hankel matrix with rows `(a(n), .., a(n+degree))` has a
/// nontrivial kernel.
pub fn has_recurrence_of_degree(seq: &[BigInt], degree: usize) -> bool {
    let rows: IntMatrix = seq.windows(degree + 1).map(<[BigInt]>::to_vec).collect();
    if rows.is_empty() {
        return true;
    }
    linalg::rank(&rows) < degree + 1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowComboReport {
    pub m: usize,
    /// A constant combination that is not antisymmetric exists.
    pub exists: bool,
    #[serde(with = "bigint_str")]
    pub lambda: BigInt,
    /// Full-length coefficient vector `α_1..α_m`; zero when `exists` is false.
    #[serde(with = "bigint_str_vec")]
    pub alphas: Vec<BigInt>,
    /// Dimension of the space of constant combinations found.
    pub solution_dim: usize,
    /// Dimension of its antisymmetric (trivial) part.
    pub trivial_dim: usize,
    /// The discovered combination agrees with the alternating witness.
    pub matches_witness: bool,
    pub verified_up_to: usize,
}

/// The alternating witness `α_j = (-1)^((j-1)/2)` on odd `j`, zero on even
/// `j`; constant 1 when `m ≡ 1 (mod 4)`.
pub fn row_combination_witness(m: usize) -> Vec<BigInt> {
    (1..=m)
        .map(|j| match (j % 2, (j - 1) / 2 % 2) {
            (1, 0) => BigInt::one(),
            (1, _) => -BigInt::one(),
            _ => BigInt::zero(),
        })
        .collect()
}

pub fn default_probe(m: usize) -> usize {
    m + 5
}

/// Finds all `α` with `Σ α_i C(n, i)` independent of `n`, by an exact
/// nullspace over the first `n_probe` columns, and separates the trivial
/// (antisymmetric) solutions from a genuine constant combination.
pub fn row_constant_combinations(m: usize, n_probe: usize) -> Result<RowComboReport> {
    if m == 0 {
        return Err(Error::Domain("row count m must be positive".into()));
    }
    if n_probe < m + 2 {
        return Err(Error::Domain(format!("n_probe must be at least m + 2 = {}", m + 2)));
    }
    let table = PathTable::build(m, n_probe)?;
    let system: IntMatrix = (1..n_probe)
        .map(|n| {
            let (a, b) = (table.column(n)?, table.column(n + 1)?);
            Ok(a.iter().zip(b).map(|(x, y)| BigInt::from(y.clone()) - BigInt::from(x.clone())).collect())
        })
        .collect::<Result<_>>()?;
    let basis = linalg::nullspace(&system);

    let symmetric = |v: &[BigRational]| -> Vec<BigRational> { (0..m).map(|i| &v[i] + &v[m - 1 - i]).collect() };
    let found = basis.iter().map(|v| symmetric(v)).find(|s| s.iter().any(|x| !x.is_zero()));
    let exists = found.is_some();
    let alphas = found.map(normalize).unwrap_or_else(|| vec![BigInt::zero(); m]);

    let combo = |n: usize| -> Result<BigInt> {
        let col = table.column(n)?;
        Ok(alphas.iter().zip(col).map(|(a, c)| a * BigInt::from(c.clone())).sum())
    };
    let lambda = combo(1)?;
    for n in 2..=n_probe {
        if combo(n)? != lambda {
            return Err(Error::Inconsistent(format!("row combination for m={m} drifts at column {n}")));
        }
    }
    Ok(RowComboReport {
        m,
        exists,
        matches_witness: exists && alphas == row_combination_witness(m),
        lambda,
        alphas,
        solution_dim: basis.len(),
        trivial_dim: basis.len() - usize::from(exists),
        verified_up_to: n_probe,
    })
}

/// Scales to integers with the first nonzero entry positive and the
/// entries coprime.
fn normalize(v: Vec<BigRational>) -> Vec<BigInt> {
    use num_integer::Integer;
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let lead_negative = ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    ints.into_iter()
        .map(|x| {
            let x = x / &g;
            if lead_negative {
                -x
            } else {
                x
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn reduced_matrix_examples() {
        assert_eq!(reduced_matrix(3).unwrap().entries, linalg::from_i64(&[&[1, 1], &[2, 1]]));
        assert_eq!(reduced_matrix(2).unwrap().entries, linalg::from_i64(&[&[2]]));
        assert_eq!(reduced_matrix(1).unwrap().entries, linalg::from_i64(&[&[1]]));
        assert_eq!(reduced_matrix(4).unwrap().entries, linalg::from_i64(&[&[1, 1], &[1, 2]]));
        assert_eq!(reduced_matrix(6).unwrap().entries, linalg::from_i64(&[&[1, 1, 0], &[1, 1, 1], &[0, 1, 2]]));
        assert!(reduced_matrix(0).is_err());
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(det_reduced(3).unwrap(), BigInt::from(-1));
        assert_eq!(det_reduced(5).unwrap(), BigInt::from(-2));
        assert_eq!(det_reduced(4).unwrap(), BigInt::from(1));
    }

    #[test]
    fn charpoly_examples() {
        assert_eq!(charpoly(&reduced_matrix(3).unwrap()), IntPoly::from_i64s(&[-1, -2, 1]));
        assert_eq!(charpoly(&reduced_matrix(1).unwrap()), IntPoly::from_i64s(&[-1, 1]));
        assert_eq!(charpoly(&reduced_matrix(5).unwrap()), IntPoly::from_i64s(&[2, 0, -3, 1]));
    }

    #[test]
    fn minimal_recurrence_examples() {
        assert_eq!(minimal_recurrence(3).unwrap().alphas, ints(&[1, 2]));
        assert_eq!(minimal_recurrence(1).unwrap().alphas, ints(&[1]));
        let r5 = minimal_recurrence(5).unwrap();
        assert_eq!(r5.alphas, ints(&[-2, 0, 3]));
        // column sums 5, 13, 35, 95, ...: 95 = 3*35 - 2*5
        let sums = PathTable::build(5, 6).unwrap().column_sum_sequence();
        assert!(r5.violations(&sums).is_empty());
    }

    #[test]
    fn recurrence_display() {
        assert_eq!(minimal_recurrence(3).unwrap().to_string(), "a(n+2)=2a(n+1)+a(n)");
        assert_eq!(minimal_recurrence(1).unwrap().to_string(), "a(n+1)=a(n)");
        assert_eq!(minimal_recurrence(5).unwrap().to_string(), "a(n+3)=3a(n+2)-2a(n)");
    }

    #[test]
    fn equivalence_examples() {
        let r = equivalence_report(3).unwrap();
        assert!(r.all_equal);
        assert_eq!(r.charpoly, "x^2 - 2x - 1");
        let r = equivalence_report(2).unwrap();
        assert!(r.all_equal);
        assert_eq!(r.multiplier, "x - 2");
        assert_eq!(equivalence_report(1).unwrap().recurrence_poly, "x - 1");
    }

    #[test]
    fn window_det_examples() {
        let t3 = PathTable::build(3, 6).unwrap();
        assert_eq!(window_det(&t3, 0).unwrap(), BigInt::one());
        assert_eq!(window_det(&t3, 1).unwrap(), BigInt::from(-1));
        let t5 = PathTable::build(5, 6).unwrap();
        assert_eq!(window_det(&t5, 2).unwrap(), BigInt::from(4));
        assert!(matches!(window_det(&t5, 4), Err(Error::InsufficientLength { .. })));
    }

    #[test]
    fn row_combination_examples() {
        let r = row_constant_combinations(5, default_probe(5)).unwrap();
        assert!(r.exists && r.matches_witness);
        assert_eq!(r.alphas, ints(&[1, 0, -1, 0, 1]));
        assert_eq!(r.lambda, BigInt::one());
        assert_eq!(r.trivial_dim, 2);

        let r = row_constant_combinations(3, default_probe(3)).unwrap();
        assert!(!r.exists);
        assert_eq!(r.trivial_dim, 1);

        let r = row_constant_combinations(1, default_probe(1)).unwrap();
        assert!(r.exists);
        assert_eq!(r.alphas, ints(&[1]));

        assert!(row_constant_combinations(5, 6).is_err());
    }

    #[test]
    fn row_combination_nine() {
        let r = row_constant_combinations(9, default_probe(9)).unwrap();
        assert!(r.exists && r.matches_witness);
        assert_eq!(r.alphas, ints(&[1, 0, -1, 0, 1, 0, -1, 0, 1]));
    }

    #[test]
    fn full_matrix_shape() {
        assert_eq!(full_transfer_matrix(3), linalg::from_i64(&[&[1, 1, 0], &[1, 1, 1], &[0, 1, 1]]));
        assert_eq!(full_transfer_matrix(1), linalg::from_i64(&[&[1]]));
    }

    #[test]
    fn hankel_degree() {
        let fib = ints(&[1, 1, 2, 3, 5, 8, 13, 21]);
        assert!(has_recurrence_of_degree(&fib, 2));
        assert!(!has_recurrence_of_degree(&fib, 1));
    }
}
