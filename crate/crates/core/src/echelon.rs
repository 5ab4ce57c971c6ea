//! Row echelon forms reached by unimodular left multiplication, over integer
//! columns and over mixed integer/residue columns.
//!
//! Normal form: each pivot column is cleared below the pivot by an orbit
//! reduction of the remaining column segment, the pivot is the positive
//! `gcd_m` of that segment, and entries above a pivot are reduced into
//! `[0, pivot)`. When the segment is a single row only the sign can be
//! changed, so a residue pivot there becomes `min(x, m - x)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::arith::Modulus;
use crate::error::{Error, Result};
use crate::matrix::{IntMatrix, MixedMatrix};
use crate::orbit::orbit_reduce;

/// Leading-entry view of a matrix whose zero test may depend on the column.
pub trait RowLeading {
    fn row_count(&self) -> usize;
    /// Column of the first nonzero entry of row `i`, if any.
    fn leading_column(&self, i: usize) -> Option<usize>;

    /// Both echelon clauses: leading entries move strictly right going down,
    /// and zero rows sit below every nonzero row.
    fn is_echelon(&self) -> bool {
        let mut last: Option<usize> = None;
        let mut seen_zero = false;
        for i in 0..self.row_count() {
            match self.leading_column(i) {
                None => seen_zero = true,
                Some(c) => {
                    if seen_zero || last.is_some_and(|l| c <= l) {
                        return false;
                    }
                    last = Some(c);
                }
            }
        }
        true
    }
}

impl RowLeading for IntMatrix {
    fn row_count(&self) -> usize {
        self.rows()
    }

    fn leading_column(&self, i: usize) -> Option<usize> {
        self.row(i).iter().position(|x| !x.is_zero())
    }
}

impl RowLeading for MixedMatrix {
    fn row_count(&self) -> usize {
        self.rows()
    }

    fn leading_column(&self, i: usize) -> Option<usize> {
        (0..self.cols()).find(|&j| !self.values()[(i, j)].is_zero())
    }
}

/// Number of nonzero rows of a matrix already in echelon form.
pub fn echelon_rank<M: RowLeading>(b: &M) -> Result<usize> {
    if !b.is_echelon() {
        return Err(Error::NotEchelon);
    }
    Ok((0..b.row_count())
        .filter(|&i| b.leading_column(i).is_some())
        .count())
}

/// Unimodular `D` and echelon `B` with `D A = B` (columnwise mod the moduli).
pub fn row_echelon_mixed(a: &MixedMatrix) -> Result<(IntMatrix, MixedMatrix)> {
    let rows = a.rows();
    let moduli = a.column_moduli().to_vec();
    let mut b = a.values().clone();
    let mut d = IntMatrix::identity(rows);
    let mut pivot_row = 0;

    for (col, m) in moduli.iter().enumerate() {
        if pivot_row == rows {
            break;
        }
        let segment: Vec<_> = (pivot_row..rows)
            .map(|i| m.residue(b[(i, col)].clone()))
            .collect();
        if segment.len() >= 2 {
            let cert = orbit_reduce(m, &segment)?;
            let local = embed(&cert.transform, rows, pivot_row);
            b = &local * &b;
            d = &local * &d;
        } else if !m.is_integers() {
            let x = m.reduce(&b[(pivot_row, col)]);
            if (&x * 2u32) > *m.value() {
                b.negate_row(pivot_row);
                d.negate_row(pivot_row);
            }
        }
        reduce_columns(&mut b, &moduli);

        let pivot = b[(pivot_row, col)].clone();
        if pivot.is_zero() {
            continue;
        }
        if pivot.is_negative() {
            b.negate_row(pivot_row);
            d.negate_row(pivot_row);
            reduce_columns(&mut b, &moduli);
        }
        let pivot = b[(pivot_row, col)].clone();
        for i in 0..pivot_row {
            let q = b[(i, col)].div_floor(&pivot);
            if !q.is_zero() {
                let f = -q;
                b.add_row_multiple(i, pivot_row, &f);
                d.add_row_multiple(i, pivot_row, &f);
            }
        }
        reduce_columns(&mut b, &moduli);
        pivot_row += 1;
    }

    Ok((d, MixedMatrix::new(b, moduli)?))
}

/// Integer special case of [`row_echelon_mixed`]: a Hermite-style form.
pub fn row_echelon_int(a: &IntMatrix) -> Result<(IntMatrix, IntMatrix)> {
    let mixed = MixedMatrix::new(a.clone(), vec![Modulus::integers(); a.cols()])?;
    let (d, b) = row_echelon_mixed(&mixed)?;
    Ok((d, b.values().clone()))
}

fn embed(block: &IntMatrix, n: usize, offset: usize) -> IntMatrix {
    let mut out = IntMatrix::identity(n);
    for i in 0..block.rows() {
        for j in 0..block.cols() {
            out[(offset + i, offset + j)] = block[(i, j)].clone();
        }
    }
    out
}

fn reduce_columns(b: &mut IntMatrix, moduli: &[Modulus]) {
    for i in 0..b.rows() {
        for (j, m) in moduli.iter().enumerate() {
            if !m.is_integers() {
                let v = m.reduce(&b[(i, j)]);
                b[(i, j)] = v;
            }
        }
    }
}

/// Checks `D A == B` (mod each column modulus), `det D = +-1`, and the echelon predicate.
pub fn verify_echelon(a: &MixedMatrix, d: &IntMatrix, b: &MixedMatrix) -> bool {
    let Ok(prod) = a.left_mul(d) else {
        return false;
    };
    prod == *b && d.is_unimodular() && b.is_echelon()
}

/// Pivot value of each nonzero row (as stored, in `[0, m)` for residue columns).
pub fn pivots(b: &MixedMatrix) -> Vec<(usize, BigInt)> {
    (0..b.rows())
        .filter_map(|i| b.leading_column(i).map(|c| (c, b.values()[(i, c)].clone())))
        .collect()
}
