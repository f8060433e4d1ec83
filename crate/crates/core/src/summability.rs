//! Rational summability and the space of summable linear combinations.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hermite::hermite_list;
use crate::linalg::nullspace;
use crate::poly::Poly;
use crate::ratfun::RatFun;
use crate::reduction::simple_reduction;
use crate::residues::discrete_residues_multi;
use crate::Rat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summability {
    pub summable: bool,
    /// `g` with `f = g(x+1) - g(x)`, when summable and requested.
    pub certificate: Option<RatFun>,
}

/// `q` with `q(x+1) - q(x) = p` and `q(0) = 0`.
///
/// Writes `p = sum c_j binom(x, j)` with `c_j` the forward differences of
/// `p` at zero, then sums each binomial term.
pub fn polynomial_antidifference(p: &Poly) -> Poly {
    let Some(d) = p.degree() else {
        return Poly::zero();
    };
    let mut diffs: Vec<Rat> = (0..=d)
        .map(|i| p.eval(&Rat::from_integer(BigInt::from(i))))
        .collect();
    let mut out = Poly::zero();
    // binom(x, j + 1), built incrementally
    let mut binom = Poly::one();
    for j in 0..=d {
        let jr = Rat::from_integer(BigInt::from(j));
        binom = (&binom * &Poly::linear(&jr)).scale(&(jr + Rat::one()).recip());
        out = &out + &binom.scale(&diffs[0]);
        for i in 0..diffs.len() - 1 {
            diffs[i] = &diffs[i + 1] - &diffs[i];
        }
        diffs.pop();
    }
    out
}

/// Decides whether `f` is rationally summable. Polynomial parts always are.
/// The certificate, if asked for, is assembled from the per-layer reduction
/// certificates: with `f_k = delta(g_k)`,
/// `g = sum_k (-1)^(k-1) / (k-1)! * g_k^(k-1)`.
pub fn is_summable(f: &RatFun, want_certificate: bool) -> Result<Summability> {
    let (poly, proper) = f.proper_part();
    let mut certificate = RatFun::from_poly(polynomial_antidifference(&poly));
    if !proper.is_zero() {
        let layers = hermite_list(&proper)?;
        let mut fact = Rat::one();
        for (i, fk) in layers.layers.iter().enumerate() {
            if i > 0 {
                fact *= Rat::from_integer(BigInt::from(i));
            }
            let out = simple_reduction(fk, want_certificate)?;
            if !out.reduced.is_zero() {
                return Ok(Summability {
                    summable: false,
                    certificate: None,
                });
            }
            if let Some(gk) = out.certificate {
                let c = if i % 2 == 1 {
                    -fact.recip()
                } else {
                    fact.recip()
                };
                certificate = &certificate + &gk.nth_derivative(i).scale(&c);
            }
        }
    }
    Ok(Summability {
        summable: true,
        certificate: want_certificate.then_some(certificate),
    })
}

/// Basis of `{v in Q^n : sum v_i f_i is summable}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VSpaceBasis {
    pub vectors: Vec<Vec<Rat>>,
}

impl VSpaceBasis {
    pub fn dimension(&self) -> usize {
        self.vectors.len()
    }
}

/// The linear system: one row per order `k` and power of `x`, one column
/// per input, holding the coefficients of the `D_{i,k}` over a common `B`.
/// Polynomial parts are dropped first since they never obstruct
/// summability; inputs that are polynomials give zero columns.
pub fn residue_matrix(fs: &[RatFun]) -> Result<Vec<Vec<Rat>>> {
    if fs.is_empty() {
        return Err(Error::EmptyInput("vspace"));
    }
    let proper: Vec<RatFun> = fs.iter().map(|f| f.proper_part().1).collect();
    let live: Vec<usize> = (0..proper.len())
        .filter(|&i| !proper[i].is_zero())
        .collect();
    if live.is_empty() {
        return Ok(Vec::new());
    }
    let subset: Vec<RatFun> = live.iter().map(|&i| proper[i].clone()).collect();
    let multi = discrete_residues_multi(&subset)?;
    let width = multi.b.len().saturating_sub(1);
    let mut rows = Vec::with_capacity(multi.order() * width);
    for k in 0..multi.order() {
        for power in 0..width {
            let mut row = vec![Rat::zero(); fs.len()];
            for (col, &i) in live.iter().enumerate() {
                row[i] = multi.d[col][k].coeff(power);
            }
            if row.iter().any(|c| !c.is_zero()) {
                rows.push(row);
            }
        }
    }
    Ok(rows)
}

/// Basis of the space of coefficient vectors making `sum v_i f_i` summable.
pub fn vspace(fs: &[RatFun]) -> Result<VSpaceBasis> {
    let m = residue_matrix(fs)?;
    Ok(VSpaceBasis {
        vectors: nullspace(&m, fs.len()),
    })
}

/// `sum v_i f_i`
pub fn combine(v: &[Rat], fs: &[RatFun]) -> RatFun {
    v.iter().zip(fs).map(|(c, f)| f.scale(c)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    fn rf(n: &[i64], d: &[i64]) -> RatFun {
        RatFun::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn summable_examples() {
        let s = is_summable(&rf(&[1], &[0, 1, 1]), true).unwrap();
        assert_eq!(
            s,
            Summability {
                summable: true,
                certificate: Some(rf(&[-1], &[0, 1]))
            }
        );
        assert!(!is_summable(&rf(&[1], &[0, 1]), true).unwrap().summable);
        let s = is_summable(&RatFun::from_poly(p(&[1, 2])), true).unwrap();
        assert_eq!(s.certificate, Some(RatFun::from_poly(p(&[0, 0, 1]))));
        assert!(is_summable(&RatFun::zero(), false).unwrap().summable);
    }

    #[test]
    fn higher_order_certificate() {
        // 1/x^2 - 1/(x+1)^2 = delta(-1/x^2)
        let f = &rf(&[1], &[0, 0, 1]) - &rf(&[1], &[1, 2, 1]);
        let g = is_summable(&f, true).unwrap().certificate.unwrap();
        assert_eq!(g.delta(), f);
    }

    #[test]
    fn vspace_examples() {
        let b = vspace(&[rf(&[1], &[0, 1]), rf(&[1], &[1, 1])]).unwrap();
        assert_eq!(b.vectors, vec![vec![rat(1, 1), rat(-1, 1)]]);
        let f = rf(&[1, 3], &[0, 1, 5, 1]);
        let b = vspace(&[f.clone(), f]).unwrap();
        assert_eq!(b.vectors, vec![vec![rat(1, 1), rat(-1, 1)]]);
        assert_eq!(
            vspace(&[rf(&[1], &[0, 1]), rf(&[1], &[1, 0, 1])])
                .unwrap()
                .dimension(),
            0
        );
        assert!(vspace(&[]).is_err());
        let b = vspace(&[RatFun::from_poly(p(&[0, 1])), rf(&[1], &[0, 1])]).unwrap();
        assert_eq!(b.vectors, vec![vec![rat(1, 1), rat(0, 1)]]);
    }

    proptest! {
        #[test]
        fn antidifference(c in prop::collection::vec(-20i64..20, 0..7)) {
            let poly = p(&c);
            let q = polynomial_antidifference(&poly);
            prop_assert_eq!(&q.sigma(1) - &q, poly);
        }
    }
}
