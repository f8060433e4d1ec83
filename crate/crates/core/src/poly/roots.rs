//! Integer roots of rational polynomials.
//!
//! Roots are found p-adically: pick a small prime modulo which the
//! squarefree part stays squarefree, find its roots there by exhaustion,
//! Newton-lift each one until the modulus exceeds twice the largest possible
//! root, and test the symmetric representative exactly. This never factors
//! the constant term, so it stays cheap when that term is huge.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::domain::primitive_part;
use super::{modp, Poly};
use crate::error::{Error, Result};

/// Sorted, deduplicated integer roots of a nonzero polynomial.
pub fn integer_roots(p: &Poly) -> Result<Vec<BigInt>> {
    if p.is_zero() {
        return Err(Error::ZeroInput("integer_roots"));
    }
    let (_, ints) = p.to_primitive_integer();
    let v = ints.iter().take_while(|c| c.is_zero()).count();
    let mut roots = Vec::new();
    if v > 0 {
        roots.push(BigInt::zero());
    }
    let q = &ints[v..];
    if q.len() > 1 {
        roots.extend(nonzero_integer_roots(q)?);
    }
    roots.sort();
    roots.dedup();
    Ok(roots)
}

/// Integer roots of an integer polynomial with nonzero constant term.
fn nonzero_integer_roots(q: &[BigInt]) -> Result<Vec<BigInt>> {
    let sq = Poly::from_bigints(q).squarefree_part()?;
    let (_, f) = sq.to_primitive_integer();
    let f = primitive_part(&f);
    if f.len() == 2 {
        // f0 + f1 x
        let (quot, r) = (-&f[0]).div_rem(&f[1]);
        return Ok(if r.is_zero() { vec![quot] } else { vec![] });
    }
    // every integer root divides the constant term
    let bound: BigInt = f[0].abs();
    let df: Vec<BigInt> = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect();

    let prime = choose_prime(&f)?;
    let fp = modp::reduce(&f, prime);
    let mut found = Vec::new();
    for r0 in modp::roots(&fp, prime) {
        let modulus_cap = &bound * 2u32;
        let mut r = BigInt::from(r0);
        let mut m = BigInt::from(prime);
        while m <= modulus_cap {
            m = &m * &m;
            let fr = eval_int(&f, &r).mod_floor(&m);
            let dfr = eval_int(&df, &r).mod_floor(&m);
            let inv = mod_inverse(&dfr, &m).ok_or_else(|| {
                Error::Internal("derivative not invertible during Hensel lift".into())
            })?;
            r = (&r - fr * inv).mod_floor(&m);
        }
        let half = &m / 2u32;
        let cand = if r > half { &r - &m } else { r };
        if eval_int(&f, &cand).is_zero() {
            found.push(cand);
        }
    }
    Ok(found)
}

/// Smallest prime above 100 that keeps `f` squarefree of the same degree.
fn choose_prime(f: &[BigInt]) -> Result<u64> {
    let lc = f.last().expect("nonconstant");
    let mut cand = 101u64;
    // a squarefree integer polynomial stays squarefree modulo all but
    // finitely many primes; the cap only guards against a logic error
    while cand < 1_000_000 {
        if modp::is_prime(cand) && !modp::is_zero_mod(lc, cand) {
            let fp = modp::reduce(f, cand);
            let dfp = modp::derivative(&fp, cand);
            if modp::gcd_degree(&fp, &dfp, cand) == Some(0) {
                return Ok(cand);
            }
        }
        cand += 2;
    }
    Err(Error::Internal("no lucky prime for root lifting".into()))
}

fn eval_int(p: &[BigInt], x: &BigInt) -> BigInt {
    p.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if !e.gcd.is_one() {
        return None;
    }
    Some(e.x.mod_floor(m))
}

/// Reference root finder: tries every signed divisor of the constant term.
/// Only usable when that term is small; kept for cross-checking.
pub fn integer_roots_by_divisors(p: &Poly) -> Result<Vec<BigInt>> {
    if p.is_zero() {
        return Err(Error::ZeroInput("integer_roots"));
    }
    let (_, ints) = p.to_primitive_integer();
    let v = ints.iter().take_while(|c| c.is_zero()).count();
    let mut roots = Vec::new();
    if v > 0 {
        roots.push(BigInt::zero());
    }
    let q = &ints[v..];
    if q.len() > 1 {
        let c0 = q[0].abs();
        let mut d = BigInt::one();
        while d <= c0 {
            if (&c0 % &d).is_zero() {
                for cand in [d.clone(), -d.clone()] {
                    if eval_int(q, &cand).is_zero() {
                        roots.push(cand);
                    }
                }
            }
            d += 1;
        }
    }
    roots.sort();
    Ok(roots)
}
