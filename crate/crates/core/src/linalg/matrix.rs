use std::fmt;

use serde::{Deserialize, Serialize};

use super::Rat;
use crate::error::{Error, Result};

/// Dense row-major matrix of exact rationals.
///
/// Matrices are values: every operation returns a new matrix and nothing
/// mutates in place once constructed.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<Vec<Rat>>", try_from = "Vec<Vec<Rat>>")]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rat>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(RatMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { Rat::one() } else { Rat::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        RatMatrix {
            rows,
            cols,
            entries,
        }
    }

    /// Builds a matrix from rows; all rows must have the same length.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|r| r.len() != ncols) {
            return Err(Error::DimensionMismatch(format!(
                "row {bad} has {} entries, expected {ncols}",
                rows[bad].len()
            )));
        }
        Ok(RatMatrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&v| Rat::from_int(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        assert!(
            r < self.rows && c < self.cols,
            "index ({r},{c}) out of bounds"
        );
        &self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, k: &Rat) -> Self {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * k).collect(),
        }
    }

    /// The submatrix on the given row and column indices, in the order given.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |r, c| {
            self.get(rows[r], cols[c]).clone()
        })
    }

    pub fn without_row(&self, drop: usize) -> Self {
        let rows: Vec<usize> = (0..self.rows).filter(|&r| r != drop).collect();
        let cols: Vec<usize> = (0..self.cols).collect();
        self.submatrix(&rows, &cols)
    }

    pub fn without_col(&self, drop: usize) -> Self {
        let rows: Vec<usize> = (0..self.rows).collect();
        let cols: Vec<usize> = (0..self.cols).filter(|&c| c != drop).collect();
        self.submatrix(&rows, &cols)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let e = self.get(r, c);
                    if r == c {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Vec::with_capacity(self.rows * other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = Rat::zero();
                for k in 0..self.cols {
                    let a = self.get(r, k);
                    if a.is_zero() {
                        continue;
                    }
                    acc += &(a * other.get(k, c));
                }
                out.push(acc);
            }
        }
        RatMatrix::new(self.rows, other.cols, out)
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Result<Vec<Rat>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by a vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, _)| !a.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    pub fn rank(&self) -> usize {
        let mut work = self.to_rows();
        echelon(&mut work, self.cols).rank
    }

    pub fn det(&self) -> Result<Rat> {
        self.require_square()?;
        if self.rows == 0 {
            return Ok(Rat::one());
        }
        let mut work = self.to_rows();
        let ech = echelon(&mut work, self.cols);
        if ech.rank < self.rows {
            return Ok(Rat::zero());
        }
        let mut d: Rat = (0..self.rows).map(|i| work[i][i].clone()).product();
        if ech.swaps % 2 == 1 {
            d = -d;
        }
        Ok(d)
    }

    pub fn invert(&self) -> Result<RatMatrix> {
        self.require_square()?;
        let n = self.rows;
        let mut work: Vec<Vec<Rat>> = (0..n)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.extend((0..n).map(|c| if c == r { Rat::one() } else { Rat::zero() }));
                row
            })
            .collect();
        gauss_jordan(&mut work, n)?;
        RatMatrix::from_rows(work.into_iter().map(|row| row[n..].to_vec()).collect())
    }

    /// Solves `self * x = rhs` for square nonsingular `self`.
    pub fn solve(&self, rhs: &[Rat]) -> Result<Vec<Rat>> {
        self.require_square()?;
        if rhs.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side has length {}, expected {}",
                rhs.len(),
                self.rows
            )));
        }
        let n = self.rows;
        let mut work: Vec<Vec<Rat>> = (0..n)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.push(rhs[r].clone());
                row
            })
            .collect();
        gauss_jordan(&mut work, n)?;
        Ok(work.into_iter().map(|row| row[n].clone()).collect())
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }
}

struct Echelon {
    rank: usize,
    swaps: usize,
}

/// Forward elimination on the first `ncols` columns. Leaves `work` in row
/// echelon form; pivot rows are the first `rank` rows.
fn echelon(work: &mut [Vec<Rat>], ncols: usize) -> Echelon {
    let nrows = work.len();
    let mut rank = 0;
    let mut swaps = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|&r| !work[r][col].is_zero()) else {
            continue;
        };
        if pivot != rank {
            work.swap(pivot, rank);
            swaps += 1;
        }
        let (top, rest) = work.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in rest.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &prow[col];
            for c in col..row.len() {
                if prow[c].is_zero() {
                    continue;
                }
                let delta = &factor * &prow[c];
                row[c] -= &delta;
            }
        }
        rank += 1;
    }
    Echelon { rank, swaps }
}

/// Reduces the left `n` columns of an augmented system to the identity.
fn gauss_jordan(work: &mut [Vec<Rat>], n: usize) -> Result<()> {
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !work[r][col].is_zero())
            .ok_or(Error::Singular)?;
        work.swap(pivot, col);
        let inv = work[col][col].recip();
        for e in work[col].iter_mut() {
            *e *= &inv;
        }
        let prow = work[col].clone();
        for (r, row) in work.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (e, p) in row.iter_mut().zip(&prow) {
                if p.is_zero() {
                    continue;
                }
                *e -= &(&factor * p);
            }
        }
    }
    Ok(())
}

impl From<RatMatrix> for Vec<Vec<Rat>> {
    fn from(m: RatMatrix) -> Self {
        m.to_rows()
    }
}

impl TryFrom<Vec<Vec<Rat>>> for RatMatrix {
    type Error = Error;

    fn try_from(rows: Vec<Vec<Rat>>) -> Result<Self> {
        RatMatrix::from_rows(rows)
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatMatrix {}x{} ", self.rows, self.cols)?;
        f.debug_list().entries(self.to_rows()).finish()
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|r| self.row(r).iter().map(|e| e.to_string()).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in &cells {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_i64_rows(rows).unwrap()
    }

    #[test]
    fn identity_product() {
        let a = m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]);
        assert_eq!(RatMatrix::identity(3).mul(&a).unwrap(), a);
    }

    #[test]
    fn mul_dimension_mismatch() {
        let a = m(&[&[1, 2]]);
        assert!(matches!(a.mul(&a), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn rank_of_zero_and_degenerate() {
        assert_eq!(RatMatrix::zeros(3, 3).rank(), 0);
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(m(&[&[0, 1, 0], &[0, 0, 1]]).rank(), 2);
        assert_eq!(RatMatrix::zeros(0, 0).rank(), 0);
    }

    #[test]
    fn det_cases() {
        assert_eq!(RatMatrix::identity(4).det().unwrap(), 1);
        assert_eq!(m(&[&[0, 1], &[1, 0]]).det().unwrap(), -1);
        assert_eq!(m(&[&[2, 3], &[4, 6]]).det().unwrap(), 0);
        assert_eq!(RatMatrix::zeros(0, 0).det().unwrap(), 1);
        assert!(matches!(
            m(&[&[1, 2, 3]]).det(),
            Err(Error::NotSquare { rows: 1, cols: 3 })
        ));
    }

    #[test]
    fn invert_and_singular() {
        assert!(RatMatrix::identity(3).invert().unwrap().is_identity());
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = a.invert().unwrap();
        assert_eq!(inv, m(&[&[1, -1], &[-1, 2]]));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).invert(), Err(Error::Singular));
    }

    #[test]
    fn solve_identity_and_singular() {
        let v: Vec<Rat> = [3, -1, 7].iter().map(|&x| Rat::from_int(x)).collect();
        assert_eq!(RatMatrix::identity(3).solve(&v).unwrap(), v);
        assert_eq!(m(&[&[1, 1], &[1, 1]]).solve(&v[..2]), Err(Error::Singular));
        assert!(matches!(
            RatMatrix::identity(3).solve(&v[..2]),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn submatrix_and_drops() {
        let a = m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        assert_eq!(a.submatrix(&[0, 2], &[2, 0]), m(&[&[3, 1], &[9, 7]]));
        assert_eq!(a.without_col(1), m(&[&[1, 3], &[4, 6], &[7, 9]]));
        assert_eq!(a.without_row(0), m(&[&[4, 5, 6], &[7, 8, 9]]));
        assert_eq!(a.transpose().get(0, 2), &Rat::from_int(7));
    }

    #[test]
    fn new_checks_length() {
        assert!(RatMatrix::new(2, 2, vec![Rat::one(); 3]).is_err());
        assert!(RatMatrix::from_rows(vec![vec![Rat::one()], vec![]]).is_err());
    }
}
