use serde::{Deserialize, Serialize};

use super::modulus::Modulus;
use crate::error::{Error, Result};

/// Rows of residues mod `M`. Empty matrices (no rows, or no columns) are legal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ResidueMatrix {
    modulus: Modulus,
    cols: usize,
    rows: Vec<Vec<u64>>,
}

impl ResidueMatrix {
    pub fn new(modulus: Modulus, cols: usize, rows: Vec<Vec<u64>>) -> Result<Self> {
        let mut out = Vec::with_capacity(rows.len());
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            out.push(row.into_iter().map(|x| modulus.reduce(x)).collect());
        }
        Ok(ResidueMatrix {
            modulus,
            cols,
            rows: out,
        })
    }

    /// Builds a matrix from signed integers, reducing each entry into `[0, M)`.
    pub fn from_signed(modulus: Modulus, cols: usize, rows: &[Vec<i64>]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&x| modulus.reduce_signed(x as i128))
                    .collect()
            })
            .collect();
        Self::new(modulus, cols, rows)
    }

    pub fn empty(modulus: Modulus, cols: usize) -> Self {
        ResidueMatrix {
            modulus,
            cols,
            rows: Vec::new(),
        }
    }

    pub fn identity(modulus: Modulus, n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                let mut r = vec![0; n];
                r[i] = 1;
                r
            })
            .collect();
        ResidueMatrix {
            modulus,
            cols: n,
            rows,
        }
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.rows[i]
    }

    pub fn into_rows(self) -> Vec<Vec<u64>> {
        self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.rows[i][j]
    }

    pub fn push_row(&mut self, row: Vec<u64>) -> Result<()> {
        if row.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: row.len(),
            });
        }
        let m = self.modulus;
        self.rows
            .push(row.into_iter().map(|x| m.reduce(x)).collect());
        Ok(())
    }

    pub fn transpose(&self) -> Self {
        let rows = (0..self.cols)
            .map(|j| self.rows.iter().map(|r| r[j]).collect())
            .collect();
        ResidueMatrix {
            modulus: self.modulus,
            cols: self.rows.len(),
            rows,
        }
    }

    /// Keeps the listed columns, in the listed order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|r| cols.iter().map(|&c| r[c]).collect())
            .collect();
        ResidueMatrix {
            modulus: self.modulus,
            cols: cols.len(),
            rows,
        }
    }

    /// Row vector times matrix transpose: `(<v, row_i>)_i`.
    pub fn pairings(&self, v: &[u64]) -> Vec<u64> {
        self.rows.iter().map(|r| dot(self.modulus, r, v)).collect()
    }
}

pub fn dot(m: Modulus, a: &[u64], b: &[u64]) -> u64 {
    let mut acc: u128 = 0;
    let mm = m.get() as u128;
    for (x, y) in a.iter().zip(b) {
        acc = (acc + (*x as u128) * (*y as u128)) % mm;
    }
    acc as u64
}

pub fn add_vec(m: Modulus, a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| m.add(*x, *y)).collect()
}

pub fn sub_vec(m: Modulus, a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| m.sub(*x, *y)).collect()
}

pub fn scale_vec(m: Modulus, s: u64, a: &[u64]) -> Vec<u64> {
    a.iter().map(|x| m.mul(s, *x)).collect()
}

/// `a += s * b` in place.
pub fn axpy(m: Modulus, a: &mut [u64], s: u64, b: &[u64]) {
    if s == 0 {
        return;
    }
    for (x, y) in a.iter_mut().zip(b) {
        *x = m.add(*x, m.mul(s, *y));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_entries_and_checks_width() {
        let m = Modulus::new(4).unwrap();
        let a = ResidueMatrix::from_signed(m, 2, &[vec![-1, 9]]).unwrap();
        assert_eq!(a.rows(), &[vec![3, 1]]);
        assert!(ResidueMatrix::new(m, 2, vec![vec![1]]).is_err());
        assert_eq!(a.transpose().rows(), &[vec![3], vec![1]]);
        assert_eq!(a.pairings(&[1, 1]), vec![0]);
    }
}
