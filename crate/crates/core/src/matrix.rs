//! Square matrices over a fixed H(a, b).

use std::fmt;

use crate::algebra::{AlgebraParams, Quaternion};
use crate::error::{param, Error, Result};
use crate::rational::Rational;

/// An `n × n` matrix whose entries share one quaternion algebra.
#[derive(Clone, PartialEq, Eq)]
pub struct MatrixH {
    n: usize,
    algebra: AlgebraParams,
    entries: Vec<Quaternion>,
}

impl MatrixH {
    pub fn from_rows(algebra: &AlgebraParams, rows: Vec<Vec<Quaternion>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(param("matrix must have at least one row"));
        }
        let mut entries = Vec::with_capacity(n * n);
        for (r, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(param(format!(
                    "row {} has {} entries, expected {n}",
                    r + 1,
                    row.len()
                )));
            }
            for q in row {
                if q.algebra() != algebra {
                    return Err(Error::AlgebraMismatch);
                }
                entries.push(q);
            }
        }
        Ok(MatrixH {
            n,
            algebra: algebra.clone(),
            entries,
        })
    }

    pub fn from_fn(
        algebra: &AlgebraParams,
        n: usize,
        mut f: impl FnMut(usize, usize) -> Quaternion,
    ) -> Result<Self> {
        let rows = (0..n).map(|r| (0..n).map(|c| f(r, c)).collect()).collect();
        Self::from_rows(algebra, rows)
    }

    /// A matrix with scalar entries taken from `rows`.
    pub fn from_scalars(algebra: &AlgebraParams, rows: &[Vec<Rational>]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|s| Quaternion::scalar(algebra, s.clone()))
                    .collect()
            })
            .collect();
        Self::from_rows(algebra, rows)
    }

    pub fn identity(algebra: &AlgebraParams, n: usize) -> Result<Self> {
        Self::from_fn(algebra, n, |r, c| {
            if r == c {
                algebra.one()
            } else {
                algebra.zero()
            }
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn algebra(&self) -> &AlgebraParams {
        &self.algebra
    }

    /// Entry at 0-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> &Quaternion {
        &self.entries[row * self.n + col]
    }

    pub fn set(&mut self, row: usize, col: usize, q: Quaternion) -> Result<()> {
        if q.algebra() != &self.algebra {
            return Err(Error::AlgebraMismatch);
        }
        self.check_index(row)?;
        self.check_index(col)?;
        self.entries[row * self.n + col] = q;
        Ok(())
    }

    pub(crate) fn check_index(&self, m: usize) -> Result<()> {
        if m < self.n {
            Ok(())
        } else {
            Err(param(format!(
                "index {} out of range 1..={}",
                m + 1,
                self.n
            )))
        }
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Quaternion]> {
        self.entries.chunks(self.n)
    }

    /// The conjugate transpose `A*`.
    pub fn conj_transpose(&self) -> MatrixH {
        let mut out = self.clone();
        for r in 0..self.n {
            for c in 0..self.n {
                out.entries[c * self.n + r] = self.get(r, c).conj();
            }
        }
        out
    }

    pub fn is_hermitian(&self) -> bool {
        (0..self.n).all(|r| (r..self.n).all(|c| *self.get(r, c) == self.get(c, r).conj()))
    }

    /// True when every entry lies in the base field.
    pub fn is_scalar(&self) -> bool {
        self.entries.iter().all(Quaternion::is_scalar)
    }

    /// Copy with row `row` replaced.
    pub fn with_row(&self, row: usize, values: &[Quaternion]) -> Result<MatrixH> {
        self.check_index(row)?;
        if values.len() != self.n {
            return Err(param("replacement row has the wrong length"));
        }
        let mut out = self.clone();
        for (c, q) in values.iter().enumerate() {
            out.set(row, c, q.clone())?;
        }
        Ok(out)
    }

    /// Copy with column `col` replaced.
    pub fn with_col(&self, col: usize, values: &[Quaternion]) -> Result<MatrixH> {
        self.check_index(col)?;
        if values.len() != self.n {
            return Err(param("replacement column has the wrong length"));
        }
        let mut out = self.clone();
        for (r, q) in values.iter().enumerate() {
            out.set(r, col, q.clone())?;
        }
        Ok(out)
    }

    pub fn row(&self, row: usize) -> Vec<Quaternion> {
        (0..self.n).map(|c| self.get(row, c).clone()).collect()
    }

    pub fn col(&self, col: usize) -> Vec<Quaternion> {
        (0..self.n).map(|r| self.get(r, col).clone()).collect()
    }
}

impl fmt::Debug for MatrixH {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}×{} over {:?}", self.n, self.n, self.algebra)?;
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|q| format!("{q:?}")).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_ragged_and_mixed_input() {
        let h = AlgebraParams::hamilton();
        let ragged = vec![vec![h.one(), h.one()], vec![h.one()]];
        assert!(MatrixH::from_rows(&h, ragged).is_err());
        let s = AlgebraParams::split();
        let mixed = vec![vec![h.one()]];
        assert_eq!(MatrixH::from_rows(&s, mixed), Err(Error::AlgebraMismatch));
        assert!(MatrixH::from_rows(&h, vec![]).is_err());
    }

    #[test]
    fn conjugate_transpose_and_hermitian() {
        let h = AlgebraParams::hamilton();
        let q = Quaternion::from_ints(&h, 1, 2, 3, 4);
        let a = MatrixH::from_rows(
            &h,
            vec![
                vec![h.one(), q.clone()],
                vec![q.conj(), h.one().scale(&3.into())],
            ],
        )
        .unwrap();
        assert!(a.is_hermitian());
        assert_eq!(a.conj_transpose(), a);
        let b = a.with_row(0, &[h.i(), h.j()]).unwrap();
        assert!(!b.is_hermitian());
        assert_eq!(b.conj_transpose().get(1, 0), &h.j().conj());
    }
}
