//! Multiplicative relations among rational functions modulo
//! `{sigma(p)/p}`, which describe the Galois groups of diagonal difference
//! systems `sigma(Y) = diag(r_1, ..., r_n) Y`.
//!
//! An exponent vector `e` is a relation when `prod r_i^e_i = sigma(p)/p`
//! for some rational `p`. Taking logarithmic derivatives turns this into a
//! summability question for `sum e_i r_i'/r_i`, which pins down the
//! candidates up to a constant factor `gamma`; the relations are then the
//! candidates whose constants multiply to one.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::lattice::{clear_denominators, hnf, integer_kernel};
use crate::poly::{integer_roots, Poly};
use crate::ratfun::RatFun;
use crate::reduction::simple_reduction;
use crate::residues::first_residues;
use crate::summability::residue_matrix;
use crate::Rat;

/// Default limit for trial division when factoring the constants `gamma`.
pub const TRIAL_DIVISION_BOUND: u64 = 1_000_000;

/// Integer residue values of a simple-pole `g`, each with the factor of
/// the denominator where it occurs: `(c, gcd(b, r - c))`.
fn residue_classes(g: &RatFun) -> Result<Vec<(BigInt, Poly)>> {
    let pair = first_residues(g)?;
    if pair.is_trivial() {
        return Ok(Vec::new());
    }
    let values = pair.b.resultant_value(&pair.d)?;
    let mut classes = Vec::new();
    let mut covered = 0;
    for c in integer_roots(&values)? {
        let part = pair
            .b
            .gcd(&(&pair.d - &Poly::constant(Rat::from_integer(c.clone()))))?;
        covered += part.len() - 1;
        classes.push((c, part));
    }
    if covered != pair.b.len() - 1 {
        return Err(Error::NotLogDerivative(format!(
            "{g} has non-integer residues"
        )));
    }
    Ok(classes)
}

/// `r'/r` for nonzero `r`. The result has simple poles with integer
/// residues.
pub fn log_derivative(r: &RatFun) -> Result<RatFun> {
    if r.is_zero() {
        return Err(Error::ZeroInput("log_derivative"));
    }
    let out = r.derivative().checked_div(r)?;
    if !out.is_proper() || !out.den().is_squarefree() {
        return Err(Error::Internal(
            "log_derivative: result has a multiple pole".into(),
        ));
    }
    residue_classes(&out).map_err(|e| match e {
        Error::NotLogDerivative(m) => Error::Internal(format!("log_derivative: {m}")),
        other => other,
    })?;
    Ok(out)
}

/// Monic-numerator, monic-denominator `p` with `p'/p = g`, built from the
/// residue classes of `g` without factoring its denominator.
pub fn exp_log_derivative(g: &RatFun) -> Result<RatFun> {
    if !g.is_proper() {
        return Err(Error::NotProper("exp_log_derivative"));
    }
    if !g.is_zero() && !g.den().is_squarefree() {
        return Err(Error::NotSquarefree("exp_log_derivative"));
    }
    let mut p = RatFun::one();
    for (c, part) in residue_classes(g)? {
        let e = c
            .to_i64()
            .ok_or_else(|| Error::NotLogDerivative(format!("residue {c} is too large")))?;
        p = &p * &RatFun::from_poly(part).powi(e)?;
    }
    if log_derivative(&p)? != *g {
        return Err(Error::NotLogDerivative(format!("{g}")));
    }
    Ok(p)
}

/// Basis (Hermite normal form) of the integer vectors `e` making
/// `sum e_i f_i` summable.
pub fn integer_lattice_solutions(fs: &[RatFun]) -> Result<Vec<Vec<BigInt>>> {
    for f in fs {
        if !f.is_proper() {
            return Err(Error::NotProper("integer_lattice_solutions"));
        }
        if !f.is_zero() && !f.den().is_squarefree() {
            return Err(Error::NotSquarefree("integer_lattice_solutions"));
        }
    }
    let m = residue_matrix(fs)?;
    Ok(integer_kernel(&clear_denominators(&m), fs.len()))
}

/// `|n| = prod p^e` by trial division, with a prime cofactor allowed up to
/// `bound^2`.
fn factor(n: &BigInt, bound: u64) -> Result<Vec<(BigInt, u32)>> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::from(2);
    let limit = BigInt::from(bound);
    while &d * &d <= n {
        if d > limit {
            return Err(Error::FactorizationBound {
                value: n.to_string(),
                bound,
            });
        }
        let mut e = 0;
        while n.is_multiple_of(&d) {
            n /= &d;
            e += 1;
        }
        if e > 0 {
            out.push((d.clone(), e));
        }
        d += if d == BigInt::from(2) { 1 } else { 2 };
    }
    if n > BigInt::one() {
        out.push((n, 1));
    }
    Ok(out)
}

/// Relations among `r_1, ..., r_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationLattice {
    /// Basis `e_1, ..., e_s` of the vectors whose log-derivative combination
    /// is summable.
    pub tilde_basis: Vec<Vec<BigInt>>,
    /// `gamma_j = prod r_i^(e_j,i) * p_j / sigma(p_j)`, constants.
    pub gammas: Vec<Rat>,
    /// `p_j` with `prod r_i^(e_j,i) = gamma_j sigma(p_j)/p_j`.
    pub potentials: Vec<RatFun>,
    /// Coordinates `m` (over `tilde_basis`) of a basis of the relations.
    pub coordinates: Vec<Vec<BigInt>>,
    /// Basis of the relation lattice in exponent coordinates.
    pub basis: Vec<Vec<BigInt>>,
}

/// `prod r_i^e_i`
pub fn power_product(rs: &[RatFun], e: &[BigInt]) -> Result<RatFun> {
    let mut acc = RatFun::one();
    for (r, ei) in rs.iter().zip(e) {
        if ei.is_zero() {
            continue;
        }
        let k = ei
            .to_i64()
            .ok_or_else(|| Error::Internal("exponent out of range".into()))?;
        acc = &acc * &r.powi(k)?;
    }
    Ok(acc)
}

pub fn multiplicative_relations(rs: &[RatFun]) -> Result<RelationLattice> {
    multiplicative_relations_with_bound(rs, TRIAL_DIVISION_BOUND)
}

pub fn multiplicative_relations_with_bound(rs: &[RatFun], bound: u64) -> Result<RelationLattice> {
    if rs.is_empty() {
        return Err(Error::EmptyInput("multiplicative_relations"));
    }
    let fs = rs.iter().map(log_derivative).collect::<Result<Vec<_>>>()?;
    let tilde_basis = integer_lattice_solutions(&fs)?;

    let mut gammas = Vec::with_capacity(tilde_basis.len());
    let mut potentials = Vec::with_capacity(tilde_basis.len());
    for e in &tilde_basis {
        let h: RatFun = e
            .iter()
            .zip(&fs)
            .map(|(c, f)| f.scale(&Rat::from_integer(c.clone())))
            .sum();
        let out = simple_reduction(&h, true)?;
        if !out.reduced.is_zero() {
            return Err(Error::Internal(
                "multiplicative_relations: lattice vector is not summable".into(),
            ));
        }
        let g = out.certificate.expect("certificate requested");
        let p = exp_log_derivative(&g)
            .map_err(|e| Error::Internal(format!("multiplicative_relations: {e}")))?;
        let quotient = power_product(rs, e)?.checked_div(&p.sigma(1).checked_div(&p)?)?;
        let gamma = quotient.as_constant().ok_or_else(|| {
            Error::Internal(format!(
                "multiplicative_relations: {quotient} is not constant"
            ))
        })?;
        gammas.push(gamma);
        potentials.push(p);
    }

    let coordinates = constant_relations(&gammas, bound)?;
    let basis = coordinates
        .iter()
        .map(|m| {
            let mut e = vec![BigInt::zero(); rs.len()];
            for (mj, ej) in m.iter().zip(&tilde_basis) {
                for (x, y) in e.iter_mut().zip(ej) {
                    *x += mj * y;
                }
            }
            e
        })
        .collect::<Vec<_>>();
    Ok(RelationLattice {
        tilde_basis,
        gammas,
        potentials,
        coordinates,
        basis: hnf(&basis),
    })
}

/// Basis of `{m in Z^s : prod gamma_j^m_j = 1}` for nonzero rationals.
/// Each `gamma` becomes its vector of prime exponents plus a sign bit; the
/// sign condition `sum m_j s_j = 0 mod 2` is handled with one auxiliary
/// unknown `t` in `sum m_j s_j - 2t = 0`.
pub fn constant_relations(gammas: &[Rat], bound: u64) -> Result<Vec<Vec<BigInt>>> {
    let s = gammas.len();
    if s == 0 {
        return Ok(Vec::new());
    }
    let mut primes: Vec<BigInt> = Vec::new();
    let mut exps: Vec<Vec<(BigInt, i64)>> = Vec::with_capacity(s);
    for g in gammas {
        if g.is_zero() {
            return Err(Error::Internal("constant_relations: zero constant".into()));
        }
        let mut v = Vec::new();
        for (p, e) in factor(g.numer(), bound)? {
            v.push((p, i64::from(e)));
        }
        for (p, e) in factor(g.denom(), bound)? {
            v.push((p, -i64::from(e)));
        }
        for (p, _) in &v {
            if !primes.contains(p) {
                primes.push(p.clone());
            }
        }
        exps.push(v);
    }
    let mut rows: Vec<Vec<BigInt>> = primes
        .iter()
        .map(|p| {
            let mut row: Vec<BigInt> = exps
                .iter()
                .map(|v| {
                    v.iter()
                        .filter(|(q, _)| q == p)
                        .map(|(_, e)| BigInt::from(*e))
                        .sum()
                })
                .collect();
            row.push(BigInt::zero());
            row
        })
        .collect();
    let mut sign: Vec<BigInt> = gammas
        .iter()
        .map(|g| BigInt::from(u8::from(g.is_negative())))
        .collect();
    sign.push(BigInt::from(-2));
    rows.push(sign);
    let kernel = integer_kernel(&rows, s + 1);
    let projected: Vec<Vec<BigInt>> = kernel
        .into_iter()
        .map(|mut v| {
            v.pop();
            v
        })
        .collect();
    Ok(hnf(&projected))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    fn rf(n: &[i64], d: &[i64]) -> RatFun {
        RatFun::new(p(n), p(d)).unwrap()
    }

    fn poly(c: &[i64]) -> RatFun {
        RatFun::from_poly(p(c))
    }

    fn z(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn log_derivative_examples() {
        assert_eq!(log_derivative(&poly(&[0, 1])).unwrap(), rf(&[1], &[0, 1]));
        assert_eq!(
            log_derivative(&poly(&[0, 0, 1])).unwrap(),
            rf(&[2], &[0, 1])
        );
        let want = &rf(&[1], &[2, 1]) - &rf(&[1], &[0, 1]);
        assert_eq!(log_derivative(&rf(&[2, 1], &[0, 1])).unwrap(), want);
        assert!(log_derivative(&RatFun::zero()).is_err());
        assert!(log_derivative(&RatFun::constant(rat(3, 1)))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn exp_log_derivative_examples() {
        assert_eq!(
            exp_log_derivative(&rf(&[1], &[0, 1])).unwrap(),
            poly(&[0, 1])
        );
        assert_eq!(
            exp_log_derivative(&rf(&[2], &[0, 1])).unwrap(),
            poly(&[0, 0, 1])
        );
        let g = &rf(&[1], &[0, 1]) + &rf(&[1], &[1, 1]);
        assert_eq!(exp_log_derivative(&g).unwrap(), poly(&[0, 1, 1]));
        let g = &rf(&[-3], &[1, 0, 1]) * &poly(&[0, 2]);
        assert_eq!(
            exp_log_derivative(&g).unwrap(),
            rf(&[1], &[1, 0, 1]).powi(3).unwrap()
        );
        assert!(matches!(
            exp_log_derivative(&rf(&[1], &[0, 2])),
            Err(Error::NotLogDerivative(_))
        ));
        assert!(matches!(
            exp_log_derivative(&rf(&[1], &[1, 0, 1])),
            Err(Error::NotLogDerivative(_))
        ));
    }

    #[test]
    fn lattice_examples() {
        let fs = |rs: &[RatFun]| {
            rs.iter()
                .map(|r| log_derivative(r).unwrap())
                .collect::<Vec<_>>()
        };
        let l = integer_lattice_solutions(&fs(&[poly(&[0, 1]), poly(&[0, 2])])).unwrap();
        assert_eq!(l, vec![z(&[1, -1])]);
        let l = integer_lattice_solutions(&fs(&[poly(&[0, 1]), poly(&[0, 0, 1])])).unwrap();
        assert_eq!(l, vec![z(&[2, -1])]);
        let l = integer_lattice_solutions(&fs(&[poly(&[0, 1]), poly(&[1, 1]), poly(&[0, 1, 1])]))
            .unwrap();
        assert!(crate::lattice::contains(&l, &z(&[1, 1, -1])));
    }

    #[test]
    fn relation_examples() {
        let rel =
            multiplicative_relations(&[poly(&[0, 1]), poly(&[1, 1]), poly(&[0, 1, 1])]).unwrap();
        assert!(crate::lattice::contains(&rel.basis, &z(&[1, 1, -1])));

        let rel = multiplicative_relations(&[poly(&[0, 1]), poly(&[0, 2])]).unwrap();
        assert_eq!(rel.tilde_basis, vec![z(&[1, -1])]);
        assert_eq!(rel.gammas, vec![rat(1, 2)]);
        assert!(rel.basis.is_empty());

        let rel = multiplicative_relations(&[poly(&[0, 1]), poly(&[0, 2]), poly(&[0, 4])]).unwrap();
        assert_eq!(rel.basis, vec![z(&[1, -2, 1])]);

        // x and x + 1 differ by sigma(x)/x
        let rel = multiplicative_relations(&[poly(&[0, 1]), poly(&[1, 1])]).unwrap();
        assert_eq!(rel.tilde_basis, vec![z(&[1, -1])]);
        assert_eq!(rel.gammas, vec![rat(1, 1)]);
        assert_eq!(rel.basis, vec![z(&[1, -1])]);
    }

    #[test]
    fn signs_and_bound() {
        assert_eq!(
            constant_relations(&[rat(-1, 1)], 100).unwrap(),
            vec![z(&[2])]
        );
        assert_eq!(
            constant_relations(&[rat(-2, 1), rat(2, 1)], 100).unwrap(),
            vec![z(&[2, -2])]
        );
        assert_eq!(
            constant_relations(&[rat(6, 1), rat(1, 6)], 100).unwrap(),
            vec![z(&[1, 1])]
        );
        let big = Rat::from_integer(BigInt::from(1_000_003u64) * BigInt::from(1_000_033u64));
        assert!(matches!(
            constant_relations(&[big], 1000),
            Err(Error::FactorizationBound { .. })
        ));
        assert_eq!(factor(&BigInt::from(1_000_003u64), 1001).unwrap().len(), 1);
    }
}
