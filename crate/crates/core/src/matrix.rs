//! Dense arbitrary-precision integer matrices and matrices whose columns
//! live in different cyclic rings.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{Modulus, Residue};
use crate::error::{Error, Result};

/// Row-major dense integer matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from row vectors; all rows must have the same length.
    pub fn from_rows<R, T>(rows: R) -> Result<Self>
    where
        R: IntoIterator,
        R::Item: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut entries = Vec::new();
        let mut nrows = 0;
        let mut ncols = None;
        for row in rows {
            let before = entries.len();
            entries.extend(row.into_iter().map(Into::into));
            let len = entries.len() - before;
            match ncols {
                None => ncols = Some(len),
                Some(c) if c != len => {
                    return Err(Error::DimensionMismatch(format!(
                        "row {nrows} has {len} entries, expected {c}"
                    )))
                }
                _ => {}
            }
            nrows += 1;
        }
        Ok(IntMatrix {
            rows: nrows,
            cols: ncols.unwrap_or(0),
            entries,
        })
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

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// `row[dst] += factor * row[src]`.
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let delta = factor * &self[(src, j)];
            self[(dst, j)] += delta;
        }
    }

    pub fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -&self[(i, j)];
            self[(i, j)] = v;
        }
    }

    pub fn checked_mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * &rhs[(k, j)];
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "matrix has {} columns, vector has length {}",
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// Entrywise reduction into `[0, m)`; identity when `m = 0`.
    pub fn reduce(&self, modulus: &Modulus) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| modulus.reduce(x)).collect(),
        }
    }

    /// Exact determinant by Bareiss fraction-free elimination.
    pub fn det(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "determinant of non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(i) => {
                        a.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                    a[(i, j)] = v;
                }
            }
            prev = a[(k, k)].clone();
        }
        Ok(sign * &a[(n - 1, n - 1)])
    }

    /// True when the determinant is +1 or -1.
    pub fn is_unimodular(&self) -> bool {
        matches!(self.det(), Ok(d) if d.abs().is_one())
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of range"
        );
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of range"
        );
        &mut self.entries[i * self.cols + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    /// Panics on shape mismatch; use [`IntMatrix::checked_mul`] otherwise.
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        self.checked_mul(rhs).expect("matrix shapes must agree")
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Block-diagonal assembly `diag(d1, d2)` of two square matrices.
pub fn block_diag(d1: &IntMatrix, d2: &IntMatrix) -> Result<IntMatrix> {
    if !d1.is_square() || !d2.is_square() {
        return Err(Error::DimensionMismatch(
            "block_diag expects square blocks".into(),
        ));
    }
    let (a, b) = (d1.rows(), d2.rows());
    let mut out = IntMatrix::zeros(a + b, a + b);
    for i in 0..a {
        for j in 0..a {
            out[(i, j)] = d1[(i, j)].clone();
        }
    }
    for i in 0..b {
        for j in 0..b {
            out[(a + i, a + j)] = d2[(i, j)].clone();
        }
    }
    Ok(out)
}

/// Matrix whose column `j` has entries in `Z/m_j` (with `m_j = 0` meaning `Z`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MixedMatrix {
    column_moduli: Vec<Modulus>,
    values: IntMatrix,
}

impl MixedMatrix {
    /// Entries are reduced into their column ring on construction.
    pub fn new(values: IntMatrix, column_moduli: Vec<Modulus>) -> Result<Self> {
        if values.cols() != column_moduli.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} columns but {} moduli",
                values.cols(),
                column_moduli.len()
            )));
        }
        let mut values = values;
        for i in 0..values.rows() {
            for (j, m) in column_moduli.iter().enumerate() {
                let v = m.reduce(&values[(i, j)]);
                values[(i, j)] = v;
            }
        }
        Ok(MixedMatrix {
            column_moduli,
            values,
        })
    }

    pub fn from_rows<R, T>(rows: R, column_moduli: Vec<Modulus>) -> Result<Self>
    where
        R: IntoIterator,
        R::Item: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let values = IntMatrix::from_rows(rows)?;
        if values.rows() == 0 {
            return Ok(MixedMatrix {
                values: IntMatrix::zeros(0, column_moduli.len()),
                column_moduli,
            });
        }
        MixedMatrix::new(values, column_moduli)
    }

    pub fn rows(&self) -> usize {
        self.values.rows()
    }

    pub fn cols(&self) -> usize {
        self.column_moduli.len()
    }

    pub fn column_moduli(&self) -> &[Modulus] {
        &self.column_moduli
    }

    /// Canonical representatives, row-major.
    pub fn values(&self) -> &IntMatrix {
        &self.values
    }

    pub fn entry(&self, i: usize, j: usize) -> Residue {
        self.column_moduli[j].residue(self.values[(i, j)].clone())
    }

    pub fn column(&self, j: usize) -> Vec<Residue> {
        (0..self.rows()).map(|i| self.entry(i, j)).collect()
    }

    /// `D * self`, reduced column by column.
    pub fn left_mul(&self, d: &IntMatrix) -> Result<MixedMatrix> {
        let prod = d.checked_mul(&self.values)?;
        MixedMatrix::new(prod, self.column_moduli.clone())
    }
}

/// Smith form of a diagonal relation matrix `diag(d_1, ..., d_k)`:
/// returns the invariant factors `s_1 | s_2 | ...` together with the number
/// of zero diagonal entries (the free rank). Units are dropped.
pub fn smith_diagonal(diagonal: &[BigInt]) -> (usize, Vec<BigInt>) {
    let mut nonzero: Vec<BigInt> = diagonal
        .iter()
        .filter(|d| !d.is_zero())
        .map(|d| d.abs())
        .collect();
    let free = diagonal.len() - nonzero.len();
    // Pairwise (gcd, lcm) sweeps push divisibility to the right.
    let k = nonzero.len();
    for i in 0..k {
        for j in i + 1..k {
            let g = nonzero[i].gcd(&nonzero[j]);
            let l = nonzero[i].lcm(&nonzero[j]);
            nonzero[i] = g;
            nonzero[j] = l;
        }
    }
    let torsion = nonzero.into_iter().filter(|s| !s.is_one()).collect();
    (free, torsion)
}
