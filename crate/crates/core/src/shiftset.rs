//! Integer shifts between roots of a polynomial.
//!
//! The shift set of `b` is `{l > 0 : gcd(b(x), b(x + l)) != 1}`. It is read
//! off the positive integer roots of `R(z) = Res_x(b(x), b(x + z))`. Since
//! the roots of `R` are the differences of roots of `b`, `R` is even up to
//! sign; after removing multiplicities and the root at zero, what remains is
//! `T(z^2)` and only square integer roots of `T` matter.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::{integer_roots, Poly};

/// Auxiliary polynomials of the computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftAux {
    /// `Res_x(b(x), b(x + z))`
    pub r: Poly,
    /// `R / (z * gcd(R, R'))`
    pub r_tilde: Poly,
    /// `T(z^2) = R~(z)`
    pub t: Poly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftSetResult {
    /// Sorted positive shifts.
    pub shifts: Vec<u64>,
    /// Absent when `deg b <= 1`.
    pub aux: Option<ShiftAux>,
}

/// The shift set of a nonzero polynomial.
pub fn shift_set(b: &Poly) -> Result<ShiftSetResult> {
    let Some(deg) = b.degree() else {
        return Err(Error::ZeroInput("shift_set"));
    };
    if deg <= 1 {
        return Ok(ShiftSetResult {
            shifts: Vec::new(),
            aux: None,
        });
    }
    let r = b.resultant_shift()?;
    let g = r.gcd(&r.derivative())?;
    let r_tilde = r
        .exact_div(&(&g * &Poly::x()))
        .map_err(|_| Error::Internal("shift_set: z * gcd(R, R') does not divide R".into()))?;
    if r_tilde.coeff(0).is_zero() {
        return Err(Error::Internal("shift_set: z divides R~".into()));
    }
    if r_tilde
        .coeffs()
        .iter()
        .skip(1)
        .step_by(2)
        .any(|c| !c.is_zero())
    {
        return Err(Error::Internal("shift_set: R~ is not even".into()));
    }
    let t = Poly::new(r_tilde.coeffs().iter().step_by(2).cloned().collect());
    let mut shifts = Vec::new();
    if !t.is_constant() {
        for root in integer_roots(&t)? {
            if root.is_positive() {
                if let Some(l) = exact_sqrt(&root) {
                    shifts.push(
                        l.to_u64()
                            .ok_or_else(|| Error::Internal("shift does not fit in u64".into()))?,
                    );
                }
            }
        }
    }
    shifts.sort_unstable();
    Ok(ShiftSetResult {
        shifts,
        aux: Some(ShiftAux { r, r_tilde, t }),
    })
}

fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    let s = n.sqrt();
    (&s * &s == *n).then_some(s)
}

/// Largest shift, or zero when there is none. `b` must be non-constant.
pub fn dispersion(b: &Poly) -> Result<u64> {
    if b.is_constant() {
        return Err(Error::DegreeTooSmall("dispersion", 1));
    }
    Ok(shift_set(b)?.shifts.last().copied().unwrap_or(0))
}
