use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::domain::{prem, primitive_part};
use super::modp;
use super::Poly;
use crate::error::{Error, Result};
use crate::Rat;

/// `s * a + t * b = g` with `g` the monic gcd.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtGcd {
    pub g: Poly,
    pub s: Poly,
    pub t: Poly,
}

/// `p = unit * prod(factor^multiplicity)`, factors monic, squarefree,
/// non-constant and pairwise coprime, listed by increasing multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    pub unit: Rat,
    pub factors: Vec<(Poly, usize)>,
}

impl SquarefreeDecomposition {
    /// Multiplies the decomposition back out.
    pub fn expand(&self) -> Poly {
        self.factors
            .iter()
            .fold(Poly::constant(self.unit.clone()), |acc, (f, m)| {
                &acc * &f.pow(*m as u32)
            })
    }

    /// Highest multiplicity, zero for a constant.
    pub fn max_multiplicity(&self) -> usize {
        self.factors.iter().map(|(_, m)| *m).max().unwrap_or(0)
    }

    /// Factor of multiplicity exactly `m`, or one.
    pub fn part(&self, m: usize) -> Poly {
        self.factors
            .iter()
            .find(|(_, k)| *k == m)
            .map(|(f, _)| f.clone())
            .unwrap_or_else(Poly::one)
    }
}

/// Gcd of two primitive integer polynomials of positive degree, primitive
/// with positive leading coefficient.
///
/// Images modulo primes not dividing either leading coefficient have degree
/// at least that of the true gcd; the lowest degree seen wins. Images are
/// scaled to leading coefficient `gcd(lc a, lc b)` and combined by CRT until
/// one more prime leaves the lift unchanged, then the primitive part of the
/// lift is accepted if it divides both inputs.
fn modular_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let la = a.last().expect("nonconstant");
    let lb = b.last().expect("nonconstant");
    let lead = la.gcd(lb);
    let mut state: Option<(Vec<BigInt>, BigInt)> = None;
    for m in modp::large_primes() {
        if modp::is_zero_mod(la, m) || modp::is_zero_mod(lb, m) {
            continue;
        }
        let mut g = modp::gcd(&modp::reduce(a, m), &modp::reduce(b, m), m);
        if g.len() == 1 {
            return vec![BigInt::one()];
        }
        let lm = modp::reduce(std::slice::from_ref(&lead), m)[0];
        for c in g.iter_mut() {
            *c = modp::mul_mod(*c, lm, m);
        }
        let stable = match &mut state {
            Some((coeffs, modulus)) if coeffs.len() == g.len() => {
                let before = modp::symmetric(coeffs.clone(), modulus);
                modp::crt_extend(coeffs, modulus, &g, m);
                *modulus *= m;
                modp::symmetric(coeffs.clone(), modulus) == before
            }
            Some((coeffs, _)) if coeffs.len() < g.len() => continue,
            _ => {
                state = Some((
                    g.iter().map(|&c| BigInt::from(c)).collect(),
                    BigInt::from(m),
                ));
                false
            }
        };
        if stable {
            let (coeffs, modulus) = state.as_ref().expect("set above");
            let h = primitive_part(&modp::symmetric(coeffs.clone(), modulus));
            if int_divides(&h, a) && int_divides(&h, b) {
                return h;
            }
        }
    }
    unreachable!("prime supply exhausted")
}

/// Quotient `a / h` in `Z[x]` when `h` divides `a` there; `h` nonzero.
pub(crate) fn int_quotient(a: &[BigInt], h: &[BigInt]) -> Option<Vec<BigInt>> {
    let lh = h.last().expect("nonzero");
    let dh = h.len() - 1;
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); r.len().saturating_sub(dh)];
    while r.len() > dh {
        let (c, rem) = r.last().expect("nonempty").div_rem(lh);
        if !rem.is_zero() {
            return None;
        }
        let off = r.len() - h.len();
        for (j, hj) in h.iter().enumerate() {
            r[off + j] -= &c * hj;
        }
        q[off] = c;
        r.pop();
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    r.is_empty().then_some(q)
}

fn int_divides(h: &[BigInt], a: &[BigInt]) -> bool {
    int_quotient(a, h).is_some()
}

fn int_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `(s, r)` with `s a = r mod b`, `r = Res(a, b)` and `deg s < deg b`, for
/// coprime `a`, `b` in `Z[x]` with `0 < deg a < deg b`.
///
/// `s` is the integer cofactor from the Sylvester adjugate, so its image
/// modulo any prime not dividing either leading coefficient is
/// `Res(a, b) * a^-1 mod b` there. Images are combined by CRT until stable
/// and the lift is checked by pseudo-division.
fn modular_inverse(a: &[BigInt], b: &[BigInt]) -> (Vec<BigInt>, BigInt) {
    let la = a.last().expect("nonconstant");
    let lb = b.last().expect("nonconstant");
    let width = b.len() - 1;
    let mut coeffs = vec![BigInt::zero(); width + 1];
    let mut modulus = BigInt::one();
    for m in modp::large_primes() {
        if modp::is_zero_mod(la, m) || modp::is_zero_mod(lb, m) {
            continue;
        }
        let (ap, bp) = (modp::reduce(a, m), modp::reduce(b, m));
        let r = modp::resultant(&ap, &bp, m);
        if r == 0 {
            continue;
        }
        let Some(s) = modp::inverse(&ap, &bp, m) else {
            continue;
        };
        let mut image: Vec<u64> = s.iter().map(|&c| modp::mul_mod(c, r, m)).collect();
        image.resize(width, 0);
        image.push(r);
        let before = modp::symmetric(coeffs.clone(), &modulus);
        modp::crt_extend(&mut coeffs, &modulus, &image, m);
        modulus *= m;
        let lifted = modp::symmetric(coeffs.clone(), &modulus);
        if lifted != before {
            continue;
        }
        let mut s = lifted;
        let r = s.pop().expect("resultant slot");
        while s.last().is_some_and(Zero::is_zero) {
            s.pop();
        }
        if s.is_empty() {
            continue;
        }
        let mut check = int_mul(&s, a);
        check[0] -= &r;
        while check.last().is_some_and(Zero::is_zero) {
            check.pop();
        }
        if check.is_empty() || prem(&check, b).is_empty() {
            return (s, r);
        }
    }
    unreachable!("prime supply exhausted")
}

impl Poly {
    /// Monic gcd, computed multi-modularly on the denominator-cleared inputs.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Err(Error::BothZero("gcd")),
            (true, false) => return Ok(other.monic()),
            (false, true) => return Ok(self.monic()),
            _ => {}
        }
        if self.is_constant() || other.is_constant() {
            return Ok(Poly::one());
        }
        let (_, a) = self.to_primitive_integer();
        let (_, b) = other.to_primitive_integer();
        Ok(Poly::from_bigints(&modular_gcd(&a, &b)).monic())
    }

    /// Monic gcd by a primitive polynomial remainder sequence over Z.
    /// Independent of [`Poly::gcd`] and much slower on large inputs.
    pub fn gcd_prs(&self, other: &Poly) -> Result<Poly> {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Err(Error::BothZero("gcd")),
            (true, false) => return Ok(other.monic()),
            (false, true) => return Ok(self.monic()),
            _ => {}
        }
        if self.is_constant() || other.is_constant() {
            return Ok(Poly::one());
        }
        let (_, mut a) = self.to_primitive_integer();
        let (_, mut b) = other.to_primitive_integer();
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            let r = prem(&a, &b);
            if r.is_empty() {
                break;
            }
            if r.len() == 1 {
                return Ok(Poly::one());
            }
            a = b;
            b = primitive_part(&r);
        }
        Ok(Poly::from_bigints(&b).monic())
    }

    /// Monic lcm. The lcm with zero is zero.
    pub fn lcm(&self, other: &Poly) -> Result<Poly> {
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero());
        }
        let g = self.gcd(other)?;
        Ok((self * &other.exact_div(&g)?).monic())
    }

    /// Extended Euclid over Q.
    pub fn ext_gcd(&self, other: &Poly) -> Result<ExtGcd> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero("ext_gcd"));
        }
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1)?;
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let inv = r0.leading_coeff().expect("nonzero gcd").recip();
        Ok(ExtGcd {
            g: r0.scale(&inv),
            s: s0.scale(&inv),
            t: t0.scale(&inv),
        })
    }

    /// Inverse of `self` modulo `m`, reduced to degree below `deg m`.
    /// Everything is zero modulo a nonzero constant.
    pub fn inverse_mod(&self, m: &Poly) -> Result<Poly> {
        if m.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if m.is_constant() {
            return Ok(Poly::zero());
        }
        let a = self.rem(m)?;
        if a.is_zero() {
            return Err(Error::NotInvertible);
        }
        if a.is_constant() {
            return Ok(Poly::constant(a.leading_coeff().expect("nonzero").recip()));
        }
        if !a.gcd(m)?.is_one() {
            return Err(Error::NotInvertible);
        }
        let (ca, ai) = a.to_primitive_integer();
        let (_, bi) = m.to_primitive_integer();
        let (s, r) = modular_inverse(&ai, &bi);
        Ok(Poly::from_bigints(&s).scale(&(ca * Rat::from_integer(r)).recip()))
    }

    /// [`Poly::inverse_mod`] by extended Euclid over Q.
    pub fn inverse_mod_euclid(&self, m: &Poly) -> Result<Poly> {
        if m.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if m.is_constant() {
            return Ok(Poly::zero());
        }
        let a = self.rem(m)?;
        if a.is_zero() {
            return Err(Error::NotInvertible);
        }
        let e = a.ext_gcd(m)?;
        if !e.g.is_one() {
            return Err(Error::NotInvertible);
        }
        e.s.rem(m)
    }

    /// Solves `s * a + t * b = c` with `deg s < deg b`, for coprime `a`, `b`.
    pub fn diophantine(a: &Poly, b: &Poly, c: &Poly) -> Result<(Poly, Poly)> {
        let s = (c * &a.inverse_mod(b)?).rem(b)?;
        let t = (c - &(&s * a)).exact_div(b)?;
        Ok((s, t))
    }

    /// `gcd(p, p') = 1`; false for zero, true for nonzero constants.
    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        if self.is_constant() {
            return true;
        }
        self.gcd(&self.derivative())
            .map(|g| g.is_one())
            .unwrap_or(false)
    }

    /// `p / gcd(p, p')`, monic.
    pub fn squarefree_part(&self) -> Result<Poly> {
        if self.is_zero() {
            return Err(Error::ZeroInput("squarefree_part"));
        }
        if self.is_constant() {
            return Ok(Poly::one());
        }
        let g = self.gcd(&self.derivative())?;
        Ok(self.exact_div(&g)?.monic())
    }

    /// Yun's squarefree decomposition.
    pub fn squarefree_decomposition(&self) -> Result<SquarefreeDecomposition> {
        let Some(lc) = self.leading_coeff() else {
            return Err(Error::ZeroInput("squarefree_decomposition"));
        };
        let unit = lc.clone();
        let mut factors = Vec::new();
        if self.is_constant() {
            return Ok(SquarefreeDecomposition { unit, factors });
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df)?;
        let mut b = f.exact_div(&a0)?;
        let c = df.exact_div(&a0)?;
        let mut d = &c - &b.derivative();
        let mut mult = 1;
        while !b.is_constant() {
            let a = b.gcd(&d)?;
            b = b.exact_div(&a)?;
            let c = d.exact_div(&a)?;
            d = &c - &b.derivative();
            if !a.is_constant() {
                factors.push((a, mult));
            }
            mult += 1;
        }
        Ok(SquarefreeDecomposition { unit, factors })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::tests::arb_poly;
    use crate::rat;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    fn prod(ps: &[Poly]) -> Poly {
        ps.iter().fold(Poly::one(), |a, b| &a * b)
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[1, -2, 1])).unwrap(), p(&[-1, 1]));
        assert_eq!(p(&[0, 1]).gcd(&p(&[1, 1])).unwrap(), Poly::one());
        assert_eq!(p(&[0, 2]).gcd(&Poly::zero()).unwrap(), p(&[0, 1]));
        assert_eq!(Poly::zero().gcd(&Poly::zero()), Err(Error::BothZero("gcd")));
    }

    #[test]
    fn gcd_shifted_initial_divisor() {
        // b0 = (x+3)(x^2+4x+5) shifted back by one against the full denominator
        let b0 = &p(&[3, 1]) * &p(&[5, 4, 1]);
        let b = prod(&[
            p(&[1, 0, 1]),
            p(&[3, 1]),
            p(&[5, 4, 1]),
            p(&[2, 1]),
            p(&[0, 1]),
        ]);
        assert_eq!(b0.sigma(-1).gcd(&b).unwrap(), p(&[2, 1]));
    }

    #[test]
    fn ext_gcd_examples() {
        let e = p(&[0, 1]).ext_gcd(&p(&[1, 1])).unwrap();
        assert_eq!((e.g, e.s, e.t), (Poly::one(), p(&[-1]), p(&[1])));
        let e = p(&[-1, 1]).ext_gcd(&p(&[-1, 1])).unwrap();
        assert_eq!((e.g, e.s, e.t), (p(&[-1, 1]), Poly::zero(), p(&[1])));
        let a = p(&[0, 2]);
        let b = p(&[1, 0, 1]);
        let e = a.ext_gcd(&b).unwrap();
        assert_eq!(e.g, Poly::one());
        assert_eq!(&(&e.s * &a) + &(&e.t * &b), Poly::one());
        assert_eq!(e.s, Poly::new(vec![rat(0, 1), rat(-1, 2)]));
    }

    #[test]
    fn inverse_of_derivative_mod_quadratic() {
        let b = p(&[1, 0, 1]);
        let inv = b.derivative().inverse_mod(&b).unwrap();
        assert_eq!(inv, Poly::new(vec![rat(0, 1), rat(-1, 2)]));
        assert_eq!(
            p(&[0, 1]).inverse_mod(&p(&[0, 0, 1])),
            Err(Error::NotInvertible)
        );
    }

    #[test]
    fn squarefree_decomposition_worked_example() {
        let x = p(&[0, 1]);
        let den = prod(&[
            x.pow(3),
            p(&[2, 1]).pow(3),
            p(&[3, 1]),
            p(&[1, 0, 1]),
            p(&[5, 4, 1]).pow(2),
        ]);
        let sq = den.squarefree_decomposition().unwrap();
        assert_eq!(
            sq.factors,
            vec![
                (&p(&[3, 1]) * &p(&[1, 0, 1]), 1),
                (p(&[5, 4, 1]), 2),
                (&x * &p(&[2, 1]), 3),
            ]
        );
        assert_eq!(sq.expand(), den);
    }

    #[test]
    fn squarefree_decomposition_small() {
        let b = p(&[0, 1, 1]);
        assert_eq!(
            b.squarefree_decomposition().unwrap().factors,
            vec![(b.clone(), 1)]
        );
        let sq = p(&[1, -2, 1]).squarefree_decomposition().unwrap();
        assert_eq!(sq.factors, vec![(p(&[-1, 1]), 2)]);
        let sq = p(&[-6]).squarefree_decomposition().unwrap();
        assert!(sq.factors.is_empty());
        assert_eq!(sq.unit, rat(-6, 1));
        assert!(Poly::zero().squarefree_decomposition().is_err());
    }

    proptest! {
        #[test]
        fn gcd_divides_and_ext_gcd_identity(a in arb_poly(6), b in arb_poly(6), c in arb_poly(3)) {
            let a = &a * &c;
            let b = &b * &c;
            prop_assume!(!(a.is_zero() && b.is_zero()));
            let g = a.gcd(&b).unwrap();
            prop_assert!(g.is_monic());
            prop_assert_eq!(&a.gcd_prs(&b).unwrap(), &g);
            prop_assert!(a.rem(&g).unwrap().is_zero());
            prop_assert!(b.rem(&g).unwrap().is_zero());
            if !c.is_zero() && !a.is_zero() && !b.is_zero() {
                prop_assert!(g.rem(&c.monic()).unwrap().is_zero());
            }
            let e = a.ext_gcd(&b).unwrap();
            prop_assert_eq!(&e.g, &g);
            prop_assert_eq!(&(&e.s * &a) + &(&e.t * &b), g);
        }

        #[test]
        fn modular_inverse_matches_euclid(a in arb_poly(5), b in arb_poly(6)) {
            prop_assume!(!b.is_zero());
            let fast = a.inverse_mod(&b);
            prop_assert_eq!(&fast, &a.inverse_mod_euclid(&b));
            if let Ok(s) = fast {
                if !b.is_constant() {
                    prop_assert!((&(&s * &a) - &Poly::one()).rem(&b).unwrap().is_zero());
                }
            }
        }

        #[test]
        fn exact_div_inverts_product(a in arb_poly(6), b in arb_poly(4)) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!(&(&a * &b).exact_div(&b).unwrap(), &a);
            let c = &(&a * &b) + &Poly::one();
            let (q, r) = c.divrem(&b).unwrap();
            match c.exact_div(&b) {
                Ok(e) => prop_assert!(r.is_zero() && e == q),
                Err(_) => prop_assert!(!r.is_zero()),
            }
        }

        #[test]
        fn squarefree_reexpands(a in arb_poly(3), b in arb_poly(3), c in arb_poly(2)) {
            let q = &(&a * &b.pow(2)) * &c.pow(3);
            prop_assume!(!q.is_zero());
            let sq = q.squarefree_decomposition().unwrap();
            prop_assert_eq!(sq.expand(), q);
            for (f, _) in &sq.factors {
                prop_assert!(f.is_squarefree());
                prop_assert!(f.is_monic());
            }
            for (i, (f, _)) in sq.factors.iter().enumerate() {
                for (g, _) in &sq.factors[i + 1..] {
                    prop_assert!(f.gcd(g).unwrap().is_one());
                }
            }
        }
    }
}
