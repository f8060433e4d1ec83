//! Dense polynomials over a generic integral domain, just enough for
//! pseudo-remainders and subresultant resultants.
//!
//! Coefficient vectors are ascending and trimmed (no trailing zeros).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::Poly;
use crate::Rat;

/// An integral domain with exact division.
pub(crate) trait Domain: Clone + Zero + One {
    fn d_sub(&self, rhs: &Self) -> Self;
    fn d_mul(&self, rhs: &Self) -> Self;
    fn d_neg(&self) -> Self;
    /// Division known to be exact.
    fn d_div(&self, rhs: &Self) -> Self;

    fn d_pow(&self, n: usize) -> Self {
        let mut acc = <Self as One>::one();
        for _ in 0..n {
            acc = acc.d_mul(self);
        }
        acc
    }
}

impl Domain for BigInt {
    fn d_sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn d_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn d_neg(&self) -> Self {
        -self
    }
    fn d_div(&self, rhs: &Self) -> Self {
        debug_assert!(Zero::is_zero(&(self % rhs)), "inexact integer division");
        self / rhs
    }
    fn d_pow(&self, n: usize) -> Self {
        num_traits::pow(self.clone(), n)
    }
}

impl Domain for Rat {
    fn d_sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn d_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn d_neg(&self) -> Self {
        -self
    }
    fn d_div(&self, rhs: &Self) -> Self {
        self / rhs
    }
}

impl Domain for Poly {
    fn d_sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn d_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn d_neg(&self) -> Self {
        -self
    }
    fn d_div(&self, rhs: &Self) -> Self {
        Poly::exact_div(self, rhs).expect("subresultant division must be exact")
    }
    fn d_pow(&self, n: usize) -> Self {
        Poly::pow(self, n as u32)
    }
}

pub(crate) fn trim<T: Domain>(v: &mut Vec<T>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Pseudo-remainder: the remainder of `lc(b)^(deg a - deg b + 1) * a` by `b`.
pub(crate) fn prem<T: Domain>(a: &[T], b: &[T]) -> Vec<T> {
    assert!(!b.is_empty(), "pseudo-division by zero");
    if a.len() < b.len() {
        return a.to_vec();
    }
    let lb = b.last().unwrap();
    let mut r = a.to_vec();
    let mut e = a.len() - b.len() + 1;
    while r.len() >= b.len() {
        let lr = r.last().unwrap().clone();
        let off = r.len() - b.len();
        for c in r.iter_mut() {
            *c = c.d_mul(lb);
        }
        for (j, bj) in b.iter().enumerate() {
            r[off + j] = r[off + j].d_sub(&lr.d_mul(bj));
        }
        // the leading term cancels exactly
        r.pop();
        trim(&mut r);
        e -= 1;
    }
    if e > 0 {
        let f = lb.d_pow(e);
        for c in r.iter_mut() {
            *c = c.d_mul(&f);
        }
    }
    r
}

/// Resultant of two polynomials over an integral domain by the subresultant
/// algorithm (Collins-Brown, in the formulation of Cohen's Algorithm 3.3.7
/// without content extraction).
pub(crate) fn subresultant_resultant<T: Domain>(a: &[T], b: &[T]) -> T {
    if a.is_empty() || b.is_empty() {
        return T::zero();
    }
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    let mut sign_negative = false;
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
        if (a.len() - 1) % 2 == 1 && (b.len() - 1) % 2 == 1 {
            sign_negative = true;
        }
    }
    // Res(a, c) = c^deg(a) for a constant c
    if b.len() == 1 {
        let r = b[0].d_pow(a.len() - 1);
        return if sign_negative { r.d_neg() } else { r };
    }
    let mut g = T::one();
    let mut h = T::one();
    loop {
        let da = a.len() - 1;
        let db = b.len() - 1;
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            sign_negative = !sign_negative;
        }
        let r = prem(&a, &b);
        if r.is_empty() {
            return T::zero();
        }
        let divisor = g.d_mul(&h.d_pow(delta));
        a = b;
        b = r.iter().map(|c| c.d_div(&divisor)).collect();
        g = a.last().unwrap().clone();
        // h <- h^(1 - delta) g^delta
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => g.d_pow(delta).d_div(&h.d_pow(delta - 1)),
        };
        if b.len() == 1 {
            break;
        }
    }
    let da = a.len() - 1;
    let lb = b[0].clone();
    // h <- h^(1 - deg a) lb^deg a
    let h = if da == 0 {
        h
    } else {
        lb.d_pow(da).d_div(&h.d_pow(da - 1))
    };
    if sign_negative {
        h.d_neg()
    } else {
        h
    }
}

/// Gcd of all entries; zero for an all-zero slice.
pub(crate) fn content(v: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in v {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Divides out the content and makes the leading coefficient positive.
pub(crate) fn primitive_part(v: &[BigInt]) -> Vec<BigInt> {
    let mut c = content(v);
    if c.is_zero() {
        return Vec::new();
    }
    if v.last().is_some_and(|l| l < &BigInt::zero()) {
        c = -c;
    }
    v.iter().map(|x| x / &c).collect()
}
