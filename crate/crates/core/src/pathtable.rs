//! Lattice-path counts inside an `m x ∞` table.
//!
//! A path moves one column to the right per step and may stay in its row or
//! move one row up or down, never leaving rows `1..=m`. `cell(x, y)` is the
//! number of paths that start anywhere in column 1 and end at column `x`,
//! row `y`. All public indices are 1-based.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Row offsets of the three admissible steps `(1,-1)`, `(1,0)`, `(1,1)`.
pub const STEPS: [i64; 3] = [-1, 0, 1];

/// Default cap on states visited by [`enumerate_paths`].
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathTable {
    m: usize,
    n_max: usize,
    // columns[x - 1][y - 1]
    columns: Vec<Vec<BigUint>>,
}

/// The top `⌈m/2⌉` entries of one column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedColumn {
    pub m: usize,
    pub n: usize,
    pub entries: Vec<BigUint>,
}

/// `⌈m/2⌉`, the size of the reduced column and reduced matrix.
pub fn half_height(m: usize) -> usize {
    m.div_ceil(2)
}

impl PathTable {
    /// Fills `n_max` columns by the three-neighbour recurrence.
    pub fn build(m: usize, n_max: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::Domain("row count m must be positive".into()));
        }
        if n_max == 0 {
            return Err(Error::Domain("column count n_max must be positive".into()));
        }
        let mut columns = Vec::with_capacity(n_max);
        columns.push(vec![BigUint::one(); m]);
        for _ in 1..n_max {
            let prev = columns.last().unwrap();
            let next = (0..m)
                .map(|y| {
                    let mut s = prev[y].clone();
                    if y > 0 {
                        s += &prev[y - 1];
                    }
                    if y + 1 < m {
                        s += &prev[y + 1];
                    }
                    s
                })
                .collect();
            columns.push(next);
        }
        Ok(PathTable { m, n_max, columns })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    fn check_column(&self, x: usize) -> Result<()> {
        if x == 0 || x > self.n_max {
            return Err(Error::OutOfRange { index: x, max: self.n_max });
        }
        Ok(())
    }

    /// Count at column `x`, row `y`. Rows `0` and `m + 1` are the zero
    /// boundary and are accepted.
    pub fn cell(&self, x: usize, y: usize) -> Result<BigUint> {
        self.check_column(x)?;
        if y == 0 || y == self.m + 1 {
            return Ok(BigUint::zero());
        }
        if y > self.m {
            return Err(Error::OutOfRange { index: y, max: self.m });
        }
        Ok(self.columns[x - 1][y - 1].clone())
    }

    pub fn column(&self, x: usize) -> Result<&[BigUint]> {
        self.check_column(x)?;
        Ok(&self.columns[x - 1])
    }

    /// `I_m(n)`: the number of paths from column 1 to anywhere in column `n`.
    pub fn column_sum(&self, n: usize) -> Result<BigUint> {
        Ok(self.column(n)?.iter().sum())
    }

    pub fn reduced_column(&self, n: usize) -> Result<ReducedColumn> {
        let col = self.column(n)?;
        Ok(ReducedColumn { m: self.m, n, entries: col[..half_height(self.m)].to_vec() })
    }

    /// Row `y` as a signed sequence indexed from column 1.
    pub fn row_sequence(&self, y: usize) -> Result<Vec<BigInt>> {
        if y == 0 || y > self.m {
            return Err(Error::OutOfRange { index: y, max: self.m });
        }
        Ok(self.columns.iter().map(|c| BigInt::from(c[y - 1].clone())).collect())
    }

    /// Column sums `I_m(1..=n_max)` as a signed sequence.
    pub fn column_sum_sequence(&self) -> Vec<BigInt> {
        self.columns.iter().map(|c| BigInt::from(c.iter().sum::<BigUint>())).collect()
    }
}

/// Counts paths ending at `(x, y)` by walking every path explicitly from
/// each first-column cell. Independent of [`PathTable::build`].
pub fn enumerate_paths(m: usize, target: (usize, usize), budget: u64) -> Result<BigUint> {
    let (x, y) = target;
    if m == 0 {
        return Err(Error::Domain("row count m must be positive".into()));
    }
    if x == 0 {
        return Err(Error::OutOfRange { index: x, max: usize::MAX });
    }
    if y == 0 || y > m {
        return Err(Error::OutOfRange { index: y, max: m });
    }

    let mut count = BigUint::zero();
    let mut visited: u64 = 0;
    // (column, row) stack
    let mut stack: Vec<(usize, i64)> = (1..=m as i64).map(|row| (1, row)).collect();
    while let Some((col, row)) = stack.pop() {
        visited += 1;
        if visited > budget {
            return Err(Error::BudgetExceeded { budget });
        }
        if col == x {
            if row == y as i64 {
                count += 1u32;
            }
            continue;
        }
        for step in STEPS {
            let next = row + step;
            if (1..=m as i64).contains(&next) {
                stack.push((col + 1, next));
            }
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn col(t: &PathTable, x: usize) -> Vec<u64> {
        t.column(x).unwrap().iter().map(|v| v.try_into().unwrap()).collect()
    }

    #[test]
    fn m7_top_rows() {
        let t = PathTable::build(7, 5).unwrap();
        assert_eq!(t.cell(3, 2).unwrap(), 8u32.into());
        assert_eq!(t.cell(4, 2).unwrap(), 22u32.into());
        assert_eq!(t.cell(5, 1).unwrap(), 35u32.into());
    }

    #[test]
    fn single_row_is_constant() {
        let t = PathTable::build(1, 10).unwrap();
        for x in 1..=10 {
            assert_eq!(t.cell(x, 1).unwrap(), BigUint::one());
        }
    }

    #[test]
    fn three_rows_columns() {
        let t = PathTable::build(3, 4).unwrap();
        assert_eq!(col(&t, 1), [1, 1, 1]);
        assert_eq!(col(&t, 2), [2, 3, 2]);
        assert_eq!(col(&t, 3), [5, 7, 5]);
        assert_eq!(col(&t, 4), [12, 17, 12]);
    }

    #[test]
    fn rejects_empty_dimensions() {
        assert!(matches!(PathTable::build(0, 3), Err(Error::Domain(_))));
        assert!(matches!(PathTable::build(3, 0), Err(Error::Domain(_))));
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_paths(3, (2, 2), DEFAULT_NODE_BUDGET).unwrap(), 3u32.into());
        assert_eq!(enumerate_paths(5, (1, 4), DEFAULT_NODE_BUDGET).unwrap(), 1u32.into());
        assert_eq!(enumerate_paths(7, (4, 1), DEFAULT_NODE_BUDGET).unwrap(), 13u32.into());
    }

    #[test]
    fn enumeration_errors() {
        assert!(matches!(enumerate_paths(3, (2, 4), 100), Err(Error::OutOfRange { .. })));
        assert!(matches!(enumerate_paths(3, (0, 1), 100), Err(Error::OutOfRange { .. })));
        assert!(matches!(enumerate_paths(6, (12, 1), 1000), Err(Error::BudgetExceeded { budget: 1000 })));
    }

    #[test]
    fn column_sums() {
        assert_eq!(PathTable::build(3, 3).unwrap().column_sum(3).unwrap(), 17u32.into());
        assert_eq!(PathTable::build(1, 7).unwrap().column_sum(7).unwrap(), 1u32.into());
        let t = PathTable::build(5, 4).unwrap();
        assert_eq!(col(&t, 4), [13, 22, 25, 22, 13]);
        assert_eq!(t.column_sum(4).unwrap(), 95u32.into());
        assert!(matches!(t.column_sum(5), Err(Error::OutOfRange { index: 5, max: 4 })));
    }

    #[test]
    fn reduced_columns() {
        let e = |t: &PathTable, n| -> Vec<u64> {
            t.reduced_column(n).unwrap().entries.iter().map(|v| v.try_into().unwrap()).collect()
        };
        assert_eq!(e(&PathTable::build(5, 3).unwrap(), 3), [5, 8, 9]);
        assert_eq!(e(&PathTable::build(1, 4).unwrap(), 4), [1]);
        assert_eq!(e(&PathTable::build(4, 2).unwrap(), 2), [2, 3]);
        assert!(PathTable::build(4, 2).unwrap().reduced_column(0).is_err());
    }

    #[test]
    fn boundary_rows_are_zero() {
        let t = PathTable::build(4, 3).unwrap();
        assert!(t.cell(2, 0).unwrap().is_zero());
        assert!(t.cell(2, 5).unwrap().is_zero());
        assert!(t.cell(2, 6).is_err());
    }
}
