//! Integer lattices: kernels of integer matrices and Hermite normal forms.
//!
//! Lattices are given by generating rows. Everything here uses unimodular
//! row operations only, so the integer kernel comes out saturated.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::Rat;

/// Integer matrix from a rational one with the same kernel: each row times
/// the lcm of its denominators.
pub fn clear_denominators(m: &[Vec<Rat>]) -> Vec<Vec<BigInt>> {
    m.iter()
        .map(|row| {
            let l = row
                .iter()
                .fold(BigInt::from(1), |acc, c| acc.lcm(c.denom()));
            row.iter().map(|c| c.numer() * (&l / c.denom())).collect()
        })
        .collect()
}

/// Brings `rows` to echelon form over the first `width` columns using
/// unimodular operations; returns the number of pivot rows.
fn echelon_prefix(rows: &mut [Vec<BigInt>], width: usize) -> usize {
    let mut r = 0;
    for c in 0..width {
        // smallest nonzero entry in column c at or below r
        while let Some(best) = (r..rows.len())
            .filter(|&i| !rows[i][c].is_zero())
            .min_by(|&i, &j| rows[i][c].abs().cmp(&rows[j][c].abs()))
        {
            rows.swap(r, best);
            let mut done = true;
            for i in r + 1..rows.len() {
                if rows[i][c].is_zero() {
                    continue;
                }
                let q = rows[i][c].div_floor(&rows[r][c]);
                let (top, rest) = rows.split_at_mut(i);
                let piv = &top[r];
                for (x, y) in rest[0].iter_mut().zip(piv) {
                    *x -= &q * y;
                }
                if !rest[0][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if r < rows.len() && !rows[r][c].is_zero() {
            r += 1;
        }
    }
    r
}

/// Row Hermite normal form of the lattice spanned by `rows`: zero rows
/// dropped, pivots positive, entries above each pivot in `[0, pivot)`.
pub fn hnf(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let Some(width) = rows.first().map(Vec::len) else {
        return Vec::new();
    };
    let mut m = rows.to_vec();
    let rank = echelon_prefix(&mut m, width);
    m.truncate(rank);
    let mut pivot_col = 0;
    for r in 0..rank {
        while m[r][pivot_col].is_zero() {
            pivot_col += 1;
        }
        if m[r][pivot_col].is_negative() {
            for x in m[r].iter_mut() {
                *x = -&*x;
            }
        }
        for above in 0..r {
            let q = m[above][pivot_col].div_floor(&m[r][pivot_col]);
            if q.is_zero() {
                continue;
            }
            let (top, rest) = m.split_at_mut(r);
            for (x, y) in top[above].iter_mut().zip(&rest[0]) {
                *x -= &q * y;
            }
        }
    }
    m
}

/// Basis, in Hermite normal form, of `{v in Z^ncols : M v = 0}`.
pub fn integer_kernel(m: &[Vec<BigInt>], ncols: usize) -> Vec<Vec<BigInt>> {
    let nrows = m.len();
    // row i: (column i of M | e_i)
    let mut aug: Vec<Vec<BigInt>> = (0..ncols)
        .map(|i| {
            let mut row: Vec<BigInt> = m.iter().map(|r| r[i].clone()).collect();
            row.extend((0..ncols).map(|j| BigInt::from(u8::from(i == j))));
            row
        })
        .collect();
    let rank = echelon_prefix(&mut aug, nrows);
    let kernel: Vec<Vec<BigInt>> = aug[rank..].iter().map(|r| r[nrows..].to_vec()).collect();
    hnf(&kernel)
}

/// Whether `v` lies in the lattice with Hermite basis `basis`.
pub fn contains(basis: &[Vec<BigInt>], v: &[BigInt]) -> bool {
    let mut rest = v.to_vec();
    for row in basis {
        let Some(c) = row.iter().position(|x| !x.is_zero()) else {
            continue;
        };
        let (q, r) = rest[c].div_rem(&row[c]);
        if !r.is_zero() {
            return false;
        }
        for (x, y) in rest.iter_mut().zip(row) {
            *x -= &q * y;
        }
    }
    rest.iter().all(Zero::is_zero)
}
