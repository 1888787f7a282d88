//! Exact integer linear algebra: fraction-free (Bareiss) elimination for
//! determinants, rank and solving, a rational nullspace, and Berkowitz's
//! division-free characteristic polynomial.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPoly;

/// Dense row-major integer matrix.
pub type IntMatrix = Vec<Vec<BigInt>>;

pub fn from_i64(rows: &[&[i64]]) -> IntMatrix {
    rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
}

pub fn identity(n: usize) -> IntMatrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect()
}

pub fn mat_vec(a: &[Vec<BigInt>], v: &[BigInt]) -> Vec<BigInt> {
    a.iter().map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum()).collect()
}

pub fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> IntMatrix {
    let cols = b.first().map_or(0, Vec::len);
    a.iter().map(|row| (0..cols).map(|j| row.iter().zip(b).map(|(x, brow)| x * &brow[j]).sum()).collect()).collect()
}

/// Matrix whose columns are the given vectors.
pub fn from_columns(cols: &[Vec<BigInt>]) -> IntMatrix {
    let rows = cols.first().map_or(0, Vec::len);
    (0..rows).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect()
}

/// In-place Bareiss elimination over the first `pivot_cols` columns.
/// Returns the pivot positions and the number of row swaps.
fn bareiss(m: &mut IntMatrix, pivot_cols: usize) -> (Vec<(usize, usize)>, usize) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut swaps = 0;
    let mut r = 0;
    for c in 0..pivot_cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            m.swap(p, r);
            swaps += 1;
        }
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (&m[i][j] * &m[r][c] - &m[i][c] * &m[r][j]) / &prev;
                m[i][j] = v;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        pivots.push((r, c));
        r += 1;
    }
    (pivots, swaps)
}

pub fn determinant(a: &[Vec<BigInt>]) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m = a.to_vec();
    let (pivots, swaps) = bareiss(&mut m, n);
    if pivots.len() < n {
        return BigInt::zero();
    }
    let det = m[n - 1][n - 1].clone();
    if swaps % 2 == 1 {
        -det
    } else {
        det
    }
}

pub fn rank(a: &[Vec<BigInt>]) -> usize {
    let cols = a.first().map_or(0, Vec::len);
    let mut m = a.to_vec();
    bareiss(&mut m, cols).0.len()
}

/// Solves the square system `a·x = b`, requiring an integral solution.
pub fn solve_integral(a: &[Vec<BigInt>], b: &[BigInt]) -> Result<Vec<BigInt>> {
    let n = a.len();
    let mut m: IntMatrix = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let (pivots, _) = bareiss(&mut m, n);
    if pivots.len() < n {
        return Err(Error::Singular);
    }
    let mut x = vec![BigInt::zero(); n];
    for i in (0..n).rev() {
        let mut acc = m[i][n].clone();
        for j in i + 1..n {
            acc -= &m[i][j] * &x[j];
        }
        let (q, r) = acc.div_rem(&m[i][i]);
        if !r.is_zero() {
            return Err(Error::NonIntegral);
        }
        x[i] = q;
    }
    Ok(x)
}

/// Basis of `{v : a·v = 0}` over the rationals, one vector per free column.
pub fn nullspace(a: &[Vec<BigInt>]) -> Vec<Vec<BigRational>> {
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<BigRational>> =
        a.iter().map(|row| row.iter().map(|v| BigRational::from_integer(v.clone())).collect()).collect();
    let rows = m.len();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        let inv = m[r][c].recip();
        for v in m[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let sub = &f * &m[r][j];
                    m[i][j] -= sub;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    (0..cols)
        .filter(|c| !pivot_cols.contains(c))
        .map(|free| {
            let mut v = vec![BigRational::zero(); cols];
            v[free] = BigRational::one();
            for (row, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -m[row][free].clone();
            }
            v
        })
        .collect()
}

/// `det(xI - a)` by Berkowitz's algorithm (no divisions).
pub fn charpoly(a: &[Vec<BigInt>]) -> IntPoly {
    let n = a.len();
    // descending coefficients of the leading principal minors' charpolys
    let mut vect: Vec<BigInt> = vec![BigInt::one()];
    for r in 0..n {
        // t = [1, -a_rr, -R C, -R S C, -R S^2 C, ...] with S the leading r x r block
        let mut t = vec![BigInt::one(), -a[r][r].clone()];
        let mut col: Vec<BigInt> = (0..r).map(|i| a[i][r].clone()).collect();
        for _ in 0..r {
            let rc: BigInt = (0..r).map(|j| &a[r][j] * &col[j]).sum();
            t.push(-rc);
            col = (0..r).map(|i| (0..r).map(|j| &a[i][j] * &col[j]).sum()).collect();
        }
        let next: Vec<BigInt> = (0..r + 2).map(|i| (0..=i.min(r)).map(|j| &t[i - j] * &vect[j]).sum()).collect();
        vect = next;
    }
    vect.reverse();
    IntPoly::new(vect)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinants() {
        assert_eq!(determinant(&from_i64(&[&[1, 1], &[2, 1]])), BigInt::from(-1));
        assert_eq!(determinant(&from_i64(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(determinant(&from_i64(&[&[1, 2], &[2, 4]])), BigInt::zero());
        assert_eq!(determinant(&from_i64(&[&[2, -3, 1], &[2, 0, -1], &[1, 4, 5]])), BigInt::from(49));
        assert_eq!(determinant(&[]), BigInt::one());
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(&from_i64(&[&[1, 2], &[2, 4], &[3, 6]])), 1);
        assert_eq!(rank(&from_i64(&[&[0, 0, 1], &[0, 1, 0]])), 2);
        assert_eq!(rank(&from_i64(&[&[0, 0], &[0, 0]])), 0);
    }

    #[test]
    fn solving() {
        let a = from_i64(&[&[1, 2], &[1, 3]]);
        let b = [BigInt::from(5), BigInt::from(7)];
        assert_eq!(solve_integral(&a, &b).unwrap(), [BigInt::from(1), BigInt::from(2)]);
        let a = from_i64(&[&[2, 0], &[0, 1]]);
        assert_eq!(solve_integral(&a, &[BigInt::one(), BigInt::one()]), Err(Error::NonIntegral));
        let a = from_i64(&[&[1, 2], &[2, 4]]);
        assert_eq!(solve_integral(&a, &[BigInt::one(), BigInt::one()]), Err(Error::Singular));
    }

    #[test]
    fn nullspace_basis() {
        let a = from_i64(&[&[1, 1, 0], &[0, 0, 1]]);
        let ns = nullspace(&a);
        assert_eq!(ns.len(), 1);
        let v: Vec<BigInt> = ns[0].iter().map(|q| q.to_integer()).collect();
        assert_eq!(v, [BigInt::from(-1), BigInt::one(), BigInt::zero()]);
        assert!(nullspace(&identity(3)).is_empty());
    }

    #[test]
    fn berkowitz_matches_known_charpolys() {
        assert_eq!(charpoly(&from_i64(&[&[1, 1], &[2, 1]])), IntPoly::from_i64s(&[-1, -2, 1]));
        assert_eq!(charpoly(&from_i64(&[&[1]])), IntPoly::from_i64s(&[-1, 1]));
        let o3 = from_i64(&[&[1, 1, 0], &[1, 1, 1], &[0, 2, 1]]);
        assert_eq!(charpoly(&o3), IntPoly::from_i64s(&[2, 0, -3, 1]));
        // companion-free check: p(0) = (-1)^n det(a)
        let a = from_i64(&[&[2, -3, 1], &[2, 0, -1], &[1, 4, 5]]);
        assert_eq!(charpoly(&a).coeff(0), -determinant(&a));
    }
}
