//! Resultants, in particular `Res_x(b(x), b(x + z))` as a polynomial in `z`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::domain::subresultant_resultant;
use super::modp;
use super::Poly;
use crate::error::{Error, Result};
use crate::Rat;

impl Poly {
    /// Resultant of two polynomials over Q. Zero if either input is zero.
    pub fn resultant(&self, other: &Poly) -> Rat {
        if self.is_zero() || other.is_zero() {
            return Rat::zero();
        }
        let (sa, a) = self.to_primitive_integer();
        let (sb, b) = other.to_primitive_integer();
        let da = a.len() - 1;
        let db = b.len() - 1;
        let r = subresultant_resultant(&a, &b);
        Rat::from_integer(r) * num_traits::pow(sa, db) * num_traits::pow(sb, da)
    }

    /// `Res_x(b(x), b(x + z))` in `Q[z]`, by evaluation at `z = 0, 1, ..., d^2`
    /// and interpolation. The leading x-coefficient of `b(x + z)` does not
    /// depend on `z`, so every evaluation point is good. Evaluation and
    /// interpolation run modulo word-size primes not dividing that
    /// coefficient; the integer coefficients are recovered by Chinese
    /// remaindering once the modulus exceeds twice an a priori bound.
    pub fn resultant_shift(&self) -> Result<Poly> {
        let d = match self.degree() {
            Some(d) if d >= 2 => d,
            _ => return Err(Error::DegreeTooSmall("resultant_shift", 2)),
        };
        let (scale, b) = self.to_primitive_integer();
        let npoints = d * d + 1;
        let bound = shift_resultant_bound(&b);
        let mut modulus = BigInt::one();
        let mut coeffs = vec![BigInt::zero(); npoints];
        for m in modp::large_primes() {
            if modulus > &bound * 2u32 {
                break;
            }
            if modp::is_zero_mod(&b[d], m) {
                continue;
            }
            let bm = modp::reduce(&b, m);
            let values: Vec<u64> = (0..npoints as u64)
                .map(|z| modp::resultant(&bm, &modp::taylor_shift(&bm, z, m), m))
                .collect();
            let image = modp::interpolate_consecutive(&values, m);
            modp::crt_extend(&mut coeffs, &modulus, &image, m);
            modulus *= m;
        }
        let r = Poly::from_bigints(&modp::symmetric(coeffs, &modulus));
        Ok(r.scale(&num_traits::pow(scale, 2 * d)))
    }

    /// Same resultant computed directly by a subresultant remainder sequence
    /// over `Q[z]`. Slower; kept as an independent check on
    /// [`Poly::resultant_shift`].
    pub fn resultant_shift_subresultant(&self) -> Result<Poly> {
        match self.degree() {
            Some(d) if d >= 2 => {}
            _ => return Err(Error::DegreeTooSmall("resultant_shift", 2)),
        }
        let lhs: Vec<Poly> = self.coeffs().iter().cloned().map(Poly::constant).collect();
        Ok(subresultant_resultant(&lhs, &bivariate_shift(self)))
    }

    /// `Res_x(self(x), z - r(x))` in `Q[z]`. Its roots are the values of `r`
    /// at the roots of `self`.
    pub fn resultant_value(&self, r: &Poly) -> Result<Poly> {
        if self.is_zero() {
            return Err(Error::ZeroInput("resultant_value"));
        }
        let lhs: Vec<Poly> = self.coeffs().iter().cloned().map(Poly::constant).collect();
        let mut rhs: Vec<Poly> = r.coeffs().iter().map(|c| Poly::constant(-c)).collect();
        if rhs.is_empty() {
            rhs.push(Poly::zero());
        }
        rhs[0] = &rhs[0] + &Poly::x();
        super::domain::trim(&mut rhs);
        Ok(subresultant_resultant(&lhs, &rhs))
    }
}

/// `b(x + z)` as a polynomial in `x` whose coefficients lie in `Q[z]`.
fn bivariate_shift(b: &Poly) -> Vec<Poly> {
    let n = b.len();
    let mut binom = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        binom[i][0] = BigInt::one();
        for j in 1..=i {
            binom[i][j] = &binom[i - 1][j - 1] + &binom[i - 1][j];
        }
    }
    (0..n)
        .map(|j| {
            // coefficient of x^j: sum_{i >= j} b_i C(i, j) z^(i - j)
            Poly::new(
                (j..n)
                    .map(|i| b.coeff(i) * Rat::from_integer(binom[i][j].clone()))
                    .collect(),
            )
        })
        .collect()
}

/// Bound on the coefficients of `Res_x(b(x), b(x + z))` for an integer `b`
/// of degree `d` with leading coefficient `a`. The resultant equals
/// `a^(2d) prod_(i != j) (z + alpha_i - alpha_j)` times `z^d`, so its
/// coefficients are at most `|a|^(2d) (1 + 2 rho)^(d^2 - d)` for any bound
/// `rho` on the roots. Here `rho` is Fujiwara's `2 max |b_(d-i) / a|^(1/i)`.
fn shift_resultant_bound(b: &[BigInt]) -> BigInt {
    let d = b.len() - 1;
    let lead = b[d].abs();
    let mut t = BigInt::zero();
    for i in 1..=d {
        let c = b[d - i].abs();
        if c.is_zero() {
            continue;
        }
        // smallest integer s with s^i * |a| >= |b_(d-i)|, or one more
        let ratio = c.div_ceil(&lead);
        let s = ratio.nth_root(i as u32) + 1u32;
        t = t.max(s);
    }
    let rho = t * 2u32;
    num_traits::pow(lead, 2 * d) * num_traits::pow(rho * 2u32 + 1u32, d * d - d)
}
