//! Reduced forms of functions with simple poles.
//!
//! Every pole is moved onto the leftmost pole of its orbit among the poles
//! of the denominator (its initial root). Moving a term `a/b` from `b`'s
//! roots `l` steps left changes `f` by a rational difference, so the result
//! differs from `f` by something summable and has at most one pole per
//! orbit.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ratfun::{parfrac, RatFun};
use crate::shiftset::shift_set;

/// One summand of the splitting: the part of the denominator sitting `shift`
/// steps right of the initial roots, and its partial-fraction numerator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftPart {
    pub shift: u64,
    pub den: Poly,
    pub num: Poly,
}

/// Intermediate data of a reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionParts {
    /// Divisor of initial roots.
    pub b0: Poly,
    /// `gcd(b, sigma^-l(b))` for each shift `l` of the denominator.
    pub shift_gcds: Vec<(u64, Poly)>,
    /// Least common multiple of `shift_gcds`.
    pub big_g: Poly,
    /// The parts with a nontrivial denominator, plus shift 0 always.
    pub parts: Vec<ShiftPart>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionOutput {
    pub reduced: RatFun,
    /// `g` with `f = reduced + delta(g)`, when requested.
    pub certificate: Option<RatFun>,
    pub parts: ReductionParts,
}

/// Shift structure of a squarefree denominator `b`.
struct InitialRoots {
    shifts: Vec<u64>,
    shift_gcds: Vec<(u64, Poly)>,
    big_g: Poly,
    b0: Poly,
}

fn initial_roots(b: &Poly) -> Result<InitialRoots> {
    let shifts = shift_set(b)?.shifts;
    let mut shift_gcds = Vec::with_capacity(shifts.len());
    let mut big_g = Poly::one();
    for &l in &shifts {
        let g = b.gcd(&b.sigma(-(l as i64)))?;
        big_g = big_g.lcm(&g)?;
        shift_gcds.push((l, g));
    }
    let b0 = b
        .exact_div(&big_g)
        .map_err(|_| Error::Internal("initial roots: G does not divide b".into()))?;
    Ok(InitialRoots {
        shifts,
        shift_gcds,
        big_g,
        b0,
    })
}

/// Splits `f` along `gcd(sigma^-l(b0), den f)` for `l` in `{0} u shifts` and
/// moves each piece back by `l`.
fn reduce_against(
    f: &RatFun,
    roots: &InitialRoots,
    want_certificate: bool,
) -> Result<ReductionOutput> {
    let b = f.den();
    let mut dens = vec![(0u64, roots.b0.gcd(b)?)];
    for &l in &roots.shifts {
        let bl = roots.b0.sigma(-(l as i64)).gcd(b)?;
        if !bl.is_constant() {
            dens.push((l, bl));
        }
    }
    let product = dens.iter().fold(Poly::one(), |acc, (_, d)| &acc * d);
    if product != *b {
        return Err(Error::Internal(
            "reduction: shifted parts do not multiply to the denominator".into(),
        ));
    }
    let den_list: Vec<Poly> = dens.iter().map(|(_, d)| d.clone()).collect();
    let nums = parfrac(f, &den_list).map_err(|e| match e {
        Error::PartsNotCoprime | Error::PartsProductMismatch => {
            Error::Internal(format!("reduction: bad splitting ({e})"))
        }
        other => other,
    })?;

    let mut reduced = RatFun::zero();
    let mut certificate = RatFun::zero();
    let mut parts = Vec::with_capacity(dens.len());
    for ((shift, den), num) in dens.into_iter().zip(nums) {
        if !num.is_zero() {
            let term = RatFun::new(num.clone(), den.clone())?;
            reduced = &reduced + &term.sigma(shift as i64);
            if want_certificate {
                for i in 0..shift {
                    certificate = &certificate - &term.sigma(i as i64);
                }
            }
        }
        parts.push(ShiftPart { shift, den, num });
    }
    Ok(ReductionOutput {
        reduced,
        certificate: want_certificate.then_some(certificate),
        parts: ReductionParts {
            b0: roots.b0.clone(),
            shift_gcds: roots.shift_gcds.clone(),
            big_g: roots.big_g.clone(),
            parts,
        },
    })
}

fn check_simple(f: &RatFun, who: &'static str) -> Result<()> {
    if !f.is_proper() {
        return Err(Error::NotProper(who));
    }
    if !f.den().is_squarefree() {
        return Err(Error::NotSquarefree(who));
    }
    Ok(())
}

/// Reduced form of a proper `f` with squarefree denominator: `f - reduced`
/// is summable and `reduced` has polar dispersion zero.
pub fn simple_reduction(f: &RatFun, want_certificate: bool) -> Result<ReductionOutput> {
    check_simple(f, "simple_reduction")?;
    let roots = initial_roots(f.den())?;
    reduce_against(f, &roots, want_certificate)
}

/// Reduced forms of several functions relative to the initial roots of the
/// lcm of their denominators. Poles of different inputs in the same orbit
/// land on the same point.
pub fn simple_reduction_multi(
    fs: &[RatFun],
    want_certificate: bool,
) -> Result<Vec<ReductionOutput>> {
    if fs.is_empty() {
        return Err(Error::EmptyInput("simple_reduction_multi"));
    }
    let mut b = Poly::one();
    for f in fs {
        check_simple(f, "simple_reduction_multi")?;
        b = b.lcm(f.den())?;
    }
    let roots = initial_roots(&b)?;
    fs.iter()
        .map(|f| reduce_against(f, &roots, want_certificate))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;
    use crate::shiftset::dispersion;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    fn rf(n: &[i64], d: &[i64]) -> RatFun {
        RatFun::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn telescoping_pair() {
        let f = rf(&[1], &[0, 1, 1]);
        let out = simple_reduction(&f, true).unwrap();
        assert!(out.reduced.is_zero());
        assert_eq!(out.certificate, Some(rf(&[-1], &[0, 1])));
        assert_eq!(out.parts.b0, p(&[1, 1]));
    }

    #[test]
    fn shift_free_input_is_unchanged() {
        let f = rf(&[1], &[0, 1]);
        let out = simple_reduction(&f, true).unwrap();
        assert_eq!(out.reduced, f);
        assert_eq!(out.certificate, Some(RatFun::zero()));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            simple_reduction(&rf(&[1], &[0, 0, 1]), false).unwrap_err(),
            Error::NotSquarefree("simple_reduction")
        );
        assert_eq!(
            simple_reduction(&rf(&[0, 0, 1], &[0, 1]), false).unwrap_err(),
            Error::NotProper("simple_reduction")
        );
        assert!(simple_reduction_multi(&[], false).is_err());
    }

    #[test]
    fn multi_examples() {
        let fs = [rf(&[1], &[0, 1]), rf(&[1], &[1, 1])];
        let out = simple_reduction_multi(&fs, true).unwrap();
        let want = rf(&[1], &[1, 1]);
        assert_eq!(out[0].reduced, want);
        assert_eq!(out[1].reduced, want);
        for (f, o) in fs.iter().zip(&out) {
            let g = o.certificate.as_ref().unwrap();
            assert_eq!(&o.reduced + &g.delta(), f.clone());
        }
        let f = rf(&[3, 1], &[0, 1, 0, 1]);
        let out = simple_reduction_multi(&[f.clone(), f], false).unwrap();
        assert_eq!(out[0].reduced, out[1].reduced);
    }

    fn arb_simple() -> impl Strategy<Value = RatFun> {
        prop::collection::btree_map(-12i64..12, -9i64..=9, 1..6).prop_map(|terms| {
            terms
                .into_iter()
                .filter(|(_, c)| *c != 0)
                .map(|(a, c)| RatFun::simple_term(&rat(c, 1), &rat(a, 3), 1))
                .sum()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn certificate_and_dispersion(f in arb_simple()) {
            let out = simple_reduction(&f, true).unwrap();
            let g = out.certificate.clone().unwrap();
            prop_assert_eq!(&out.reduced + &g.delta(), f.clone());
            if !out.reduced.is_zero() {
                prop_assert_eq!(dispersion(out.reduced.den()).unwrap(), 0);
                prop_assert!(out.reduced.den().divides(&out.parts.b0).unwrap());
            }
        }

        #[test]
        fn multi_shares_poles(f in arb_simple(), g in arb_simple()) {
            let out = simple_reduction_multi(&[f.clone(), g.clone()], true).unwrap();
            let b0 = &out[0].parts.b0;
            for (h, o) in [f, g].iter().zip(&out) {
                let c = o.certificate.as_ref().unwrap();
                prop_assert_eq!(&o.reduced + &c.delta(), h.clone());
                prop_assert!(o.reduced.den().divides(b0).unwrap());
            }
        }
    }
}
