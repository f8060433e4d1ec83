//! Exact right nullspaces by fraction-free elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::lattice::clear_denominators;
use crate::poly::domain::content;
use crate::Rat;

/// Integer row echelon form of a rational matrix. Rows are cleared of
/// denominators first, then eliminated with Bareiss' exact division.
struct Echelon {
    rows: Vec<Vec<BigInt>>,
    /// `(row, column)` of each pivot, in order.
    pivots: Vec<(usize, usize)>,
    ncols: usize,
}

fn echelon(m: &[Vec<Rat>], ncols: usize) -> Echelon {
    assert!(m.iter().all(|row| row.len() == ncols), "ragged matrix");
    let mut rows = clear_denominators(m);
    let nrows = rows.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(pr) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let (top, rest) = rows.split_at_mut(r + 1);
        let piv_row = &top[r];
        for row in rest.iter_mut() {
            let lead = std::mem::take(&mut row[c]);
            for j in c + 1..ncols {
                let v = &piv_row[c] * &row[j] - &lead * &piv_row[j];
                row[j] = v / &prev;
            }
        }
        prev = rows[r][c].clone();
        pivots.push((r, c));
        r += 1;
    }
    Echelon {
        rows,
        pivots,
        ncols,
    }
}

/// Rank of a rational matrix with `ncols` columns.
pub fn rank(m: &[Vec<Rat>], ncols: usize) -> usize {
    echelon(m, ncols).pivots.len()
}

/// Basis of `{v : M v = 0}` for a matrix with `ncols` columns. One vector
/// per free column, in column order, each scaled to a primitive integer
/// vector whose first nonzero entry is positive.
pub fn nullspace(m: &[Vec<Rat>], ncols: usize) -> Vec<Vec<Rat>> {
    let e = echelon(m, ncols);
    let pivot_cols: Vec<usize> = e.pivots.iter().map(|&(_, c)| c).collect();
    let free: Vec<usize> = (0..e.ncols).filter(|c| !pivot_cols.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![Rat::zero(); e.ncols];
            v[fc] = Rat::one();
            for &(r, c) in e.pivots.iter().rev() {
                let row = &e.rows[r];
                let s: Rat = (c + 1..e.ncols)
                    .filter(|&j| !row[j].is_zero())
                    .map(|j| Rat::from_integer(row[j].clone()) * &v[j])
                    .sum();
                v[c] = -s / Rat::from_integer(row[c].clone());
            }
            primitive(v)
        })
        .collect()
}

/// Scales a nonzero rational vector to coprime integers, first nonzero
/// entry positive.
pub fn primitive(v: Vec<Rat>) -> Vec<Rat> {
    let l = v.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = v.iter().map(|c| c.numer() * (&l / c.denom())).collect();
    let mut g = content(&ints);
    if g.is_zero() {
        return v;
    }
    if ints
        .iter()
        .find(|c| !c.is_zero())
        .is_some_and(|c| c.is_negative())
    {
        g = -g;
    }
    ints.into_iter()
        .map(|c| Rat::from_integer(c / &g))
        .collect()
}

/// `M v`
pub fn mat_vec(m: &[Vec<Rat>], v: &[Rat]) -> Vec<Rat> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}
