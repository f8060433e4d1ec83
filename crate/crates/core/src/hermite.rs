//! Hermite reduction and its iteration into simple-pole layers.
//!
//! `hermite_list(f)` returns `(f_1, ..., f_m)` with squarefree denominators
//! such that
//!
//! ```text
//! f = sum_k (-1)^(k-1) / (k-1)! * d^(k-1)/dx^(k-1) f_k
//! ```
//!
//! The classical residue of `f_k` at a pole `alpha` is the order-`k`
//! residue of `f` at `alpha`, so each layer can be treated as a function
//! with simple poles only.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ratfun::RatFun;
use crate::Rat;

/// Splits a proper `f` into `(g, h)` with `f = g' + h`, both proper and
/// `den(h)` squarefree.
pub fn hermite_reduction(f: &RatFun) -> Result<(RatFun, RatFun)> {
    if !f.is_proper() {
        return Err(Error::NotProper("hermite_reduction"));
    }
    if f.is_zero() {
        return Ok((RatFun::zero(), RatFun::zero()));
    }
    let mut a = f.num().clone();
    let mut d = f.den().clone();
    let mut g = RatFun::zero();
    let sqf = d.squarefree_decomposition()?;
    for (v, i) in sqf.factors.iter().filter(|(_, i)| *i >= 2) {
        let u = d.exact_div(&v.pow(*i as u32))?;
        let uv1 = &u * &v.derivative();
        for j in (1..*i).rev() {
            let jr = Rat::from_integer(BigInt::from(j));
            // B U V' + C V = -A/j with deg B < deg V
            let rhs = a.scale(&(-jr.recip()));
            let (b, c) = Poly::diophantine(&uv1, v, &rhs)?;
            g = &g + &RatFun::new(b.clone(), v.pow(j as u32))?;
            a = &(-&c.scale(&jr)) - &(&u * &b.derivative());
        }
        d = &u * v;
    }
    let h = RatFun::new(a, d)?;
    debug_assert!(h.is_proper() && g.is_proper());
    Ok((g, h))
}

/// Simple-pole layers `(f_1, ..., f_m)` of a proper rational function,
/// indexed by pole order. Interior layers may be zero; the last is not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermiteLayers {
    pub layers: Vec<RatFun>,
}

impl HermiteLayers {
    /// Highest pole order `m`.
    pub fn order(&self) -> usize {
        self.layers.len()
    }

    /// Layer of order `k` (1-based); zero past the end.
    pub fn layer(&self, k: usize) -> RatFun {
        self.layers.get(k - 1).cloned().unwrap_or_else(RatFun::zero)
    }

    /// `sum_k (-1)^(k-1) / (k-1)! * f_k^(k-1)`, which gives back the input.
    pub fn reconstruct(&self) -> RatFun {
        let mut fact = Rat::one();
        let mut out = RatFun::zero();
        for (i, fk) in self.layers.iter().enumerate() {
            if i > 0 {
                fact *= Rat::from_integer(BigInt::from(i));
            }
            let mut c = fact.recip();
            if i % 2 == 1 {
                c = -c;
            }
            out = &out + &fk.nth_derivative(i).scale(&c);
        }
        out
    }
}

/// Iterated Hermite reduction of a nonzero proper `f`, with the layer
/// `fhat_k` of the `k`-th step rescaled by `(-1)^(k-1) (k-1)!`.
pub fn hermite_list(f: &RatFun) -> Result<HermiteLayers> {
    if f.is_zero() {
        return Err(Error::ZeroInput("hermite_list"));
    }
    if !f.is_proper() {
        return Err(Error::NotProper("hermite_list"));
    }
    let mut g = f.clone();
    let mut layers = Vec::new();
    let mut fact = Rat::one();
    while !g.is_zero() {
        let (next, hat) = hermite_reduction(&g)?;
        let k = layers.len();
        if k > 0 {
            fact *= Rat::from_integer(BigInt::from(k));
        }
        let c = if k % 2 == 1 {
            -fact.clone()
        } else {
            fact.clone()
        };
        layers.push(hat.scale(&c));
        g = next;
    }
    if layers.last().is_none_or(RatFun::is_zero) {
        return Err(Error::Internal("hermite_list: last layer vanished".into()));
    }
    Ok(HermiteLayers { layers })
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
    fn reduction_examples() {
        let (g, h) = hermite_reduction(&rf(&[1], &[0, 0, 1])).unwrap();
        assert_eq!(g, rf(&[-1], &[0, 1]));
        assert!(h.is_zero());
        let (g, h) = hermite_reduction(&rf(&[1], &[0, 1])).unwrap();
        assert!(g.is_zero());
        assert_eq!(h, rf(&[1], &[0, 1]));
        assert_eq!(
            hermite_reduction(&RatFun::from_poly(p(&[0, 1]))),
            Err(Error::NotProper("hermite_reduction"))
        );
    }

    #[test]
    fn list_examples() {
        let l = hermite_list(&rf(&[1], &[0, 1])).unwrap();
        assert_eq!(l.layers, vec![rf(&[1], &[0, 1])]);
        let l = hermite_list(&rf(&[1], &[0, 0, 1])).unwrap();
        assert_eq!(l.layers, vec![RatFun::zero(), rf(&[1], &[0, 1])]);
        assert!(hermite_list(&RatFun::zero()).is_err());
    }

    #[test]
    fn list_of_cube() {
        // 1/x^3 = (1/2) d^2/dx^2 (1/x): layers (0, 0, 1/x)
        let l = hermite_list(&rf(&[1], &[0, 0, 0, 1])).unwrap();
        assert_eq!(
            l.layers,
            vec![RatFun::zero(), RatFun::zero(), rf(&[1], &[0, 1])]
        );
        // 1/(x^2 (x+1)): residues -1 at 0, 1 at -1 (order 1); 1 at 0 (order 2)
        let l = hermite_list(&rf(&[1], &[0, 0, 1, 1])).unwrap();
        let want1 = &rf(&[-1], &[0, 1]) + &rf(&[1], &[1, 1]);
        assert_eq!(l.layers, vec![want1, rf(&[1], &[0, 1])]);
    }

    fn arb_layered() -> impl Strategy<Value = RatFun> {
        prop::collection::vec((-4i64..4, 1u32..=4, -9i64..=9), 1..6).prop_map(|terms| {
            terms
                .into_iter()
                .filter(|(_, _, c)| *c != 0)
                .map(|(a, k, c)| RatFun::simple_term(&rat(c, 1), &rat(a, 2), k))
                .sum()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn reduction_identity(f in arb_layered()) {
            let (g, h) = hermite_reduction(&f).unwrap();
            prop_assert_eq!(&g.derivative() + &h, f.clone());
            prop_assert!(h.den().is_squarefree());
        }

        #[test]
        fn layers_reconstruct(f in arb_layered()) {
            prop_assume!(!f.is_zero());
            let l = hermite_list(&f).unwrap();
            prop_assert_eq!(l.reconstruct(), f.clone());
            for fk in &l.layers {
                prop_assert!(fk.is_proper() && fk.den().is_squarefree());
            }
            let m = f.den().squarefree_decomposition().unwrap().max_multiplicity();
            prop_assert_eq!(l.order(), m);
        }
    }
}
