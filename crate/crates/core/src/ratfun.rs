//! Reduced rational functions over Q, the shift operators, and partial
//! fractions over pre-factored squarefree denominators.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::Rat;

/// `num / den` with `den` monic and `gcd(num, den) = 1`. Zero is `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    /// Reduces `num / den` to lowest terms with a monic denominator.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFun::zero());
        }
        let g = num.gcd(&den)?;
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g)?, den.exact_div(&g)?)
        };
        let lc = den.leading_coeff().expect("nonzero").recip();
        Ok(RatFun {
            num: num.scale(&lc),
            den: den.scale(&lc),
        })
    }

    pub fn zero() -> Self {
        RatFun {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        RatFun::from_poly(Poly::one())
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFun {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        RatFun::from_poly(Poly::constant(c))
    }

    /// `c / (x - alpha)^k`
    pub fn simple_term(c: &Rat, alpha: &Rat, k: u32) -> Self {
        RatFun {
            num: Poly::constant(c.clone()),
            den: Poly::linear(alpha).pow(k),
        }
        .checked_zero()
    }

    fn checked_zero(self) -> Self {
        if self.num.is_zero() {
            RatFun::zero()
        } else {
            self
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn into_parts(self) -> (Poly, Poly) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Zero, or numerator degree below denominator degree.
    pub fn is_proper(&self) -> bool {
        self.num.len() < self.den.len()
    }

    /// Only simple poles.
    pub fn has_squarefree_den(&self) -> bool {
        self.den.is_squarefree()
    }

    /// Splits `f = p + fp` with `p` a polynomial and `fp` proper over the
    /// same denominator.
    pub fn proper_part(&self) -> (Poly, RatFun) {
        let (q, r) = self.num.divrem(&self.den).expect("denominator is nonzero");
        let fp = RatFun {
            num: r,
            den: self.den.clone(),
        };
        (q, fp.checked_zero())
    }

    pub fn scale(&self, c: &Rat) -> RatFun {
        if c.is_zero() {
            return RatFun::zero();
        }
        RatFun {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// `f(x + c)`. Shifting preserves reducedness and monicity.
    pub fn shift(&self, c: &Rat) -> RatFun {
        RatFun {
            num: self.num.shift(c),
            den: self.den.shift(c),
        }
    }

    /// `sigma^l(f) = f(x + l)`.
    pub fn sigma(&self, l: i64) -> RatFun {
        self.shift(&Rat::from_integer(l.into()))
    }

    /// `f(x + 1) - f(x)`.
    pub fn delta(&self) -> RatFun {
        &self.sigma(1) - self
    }

    pub fn derivative(&self) -> RatFun {
        if self.den.is_one() {
            return RatFun::from_poly(self.num.derivative());
        }
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        let den = &self.den * &self.den;
        RatFun::new(num, den).expect("nonzero denominator")
    }

    pub fn nth_derivative(&self, n: usize) -> RatFun {
        (0..n).fold(self.clone(), |f, _| f.derivative())
    }

    pub fn recip(&self) -> Result<RatFun> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFun::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &RatFun) -> Result<RatFun> {
        Ok(self * &rhs.recip()?)
    }

    /// Integer power; negative exponents invert.
    pub fn powi(&self, e: i64) -> Result<RatFun> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let n = u32::try_from(e.unsigned_abs())
            .map_err(|_| Error::Internal("exponent out of range".into()))?;
        Ok(RatFun {
            num: base.num.pow(n),
            den: base.den.pow(n),
        })
    }

    /// The value if `f` is a constant.
    pub fn as_constant(&self) -> Option<Rat> {
        if self.den.is_one() && self.num.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun({self})")
    }
}

impl From<Poly> for RatFun {
    fn from(p: Poly) -> Self {
        RatFun::from_poly(p)
    }
}

impl<'a> Add<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFun::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero den");
        }
        let g = self.den.gcd(&rhs.den).expect("nonzero dens");
        let lhs_cof = rhs.den.exact_div(&g).expect("gcd divides");
        let rhs_cof = self.den.exact_div(&g).expect("gcd divides");
        let num = &(&self.num * &lhs_cof) + &(&rhs.num * &rhs_cof);
        RatFun::new(num, &self.den * &lhs_cof).expect("nonzero den")
    }
}

impl<'a> Sub<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() || rhs.is_zero() {
            return RatFun::zero();
        }
        // cross-cancel first so the products stay small
        let g1 = self.num.gcd(&rhs.den).expect("nonzero");
        let g2 = rhs.num.gcd(&self.den).expect("nonzero");
        let num = &self.num.exact_div(&g1).unwrap() * &rhs.num.exact_div(&g2).unwrap();
        let den = &self.den.exact_div(&g2).unwrap() * &rhs.den.exact_div(&g1).unwrap();
        let lc = den.leading_coeff().expect("nonzero").recip();
        RatFun {
            num: num.scale(&lc),
            den: den.scale(&lc),
        }
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<RatFun> for RatFun {
            type Output = RatFun;
            fn $m(self, rhs: RatFun) -> RatFun {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a RatFun> for RatFun {
            type Output = RatFun;
            fn $m(self, rhs: &RatFun) -> RatFun {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<RatFun> for &'a RatFun {
            type Output = RatFun;
            fn $m(self, rhs: RatFun) -> RatFun {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl std::iter::Sum for RatFun {
    fn sum<I: Iterator<Item = RatFun>>(iter: I) -> RatFun {
        iter.fold(RatFun::zero(), |a, b| &a + &b)
    }
}

/// Partial fractions of a proper `f` over a coprime splitting of its
/// squarefree denominator: returns `a_i` with `deg a_i < deg b_i` and
/// `f = sum a_i / b_i`. Parts equal to one get numerator zero.
pub fn parfrac(f: &RatFun, parts: &[Poly]) -> Result<Vec<Poly>> {
    if !f.is_proper() {
        return Err(Error::NotProper("parfrac"));
    }
    let product = parts.iter().fold(Poly::one(), |acc, p| &acc * p);
    if product != *f.den() {
        return Err(Error::PartsProductMismatch);
    }
    if !f.den().is_squarefree() {
        return Err(Error::NotSquarefree("parfrac"));
    }
    for (i, a) in parts.iter().enumerate() {
        for b in &parts[i + 1..] {
            if !a.gcd(b)?.is_one() {
                return Err(Error::PartsNotCoprime);
            }
        }
    }
    parts
        .iter()
        .map(|b| {
            if b.is_constant() {
                return Ok(Poly::zero());
            }
            let cofactor = f.den().exact_div(b)?;
            let inv = cofactor.inverse_mod(b)?;
            (&f.num().rem(b)? * &inv).rem(b)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;
    use crate::rat;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    fn rf(n: &[i64], d: &[i64]) -> RatFun {
        RatFun::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(rf(&[2, 2], &[0, 2, 2]), rf(&[1], &[0, 1]));
        let z = rf(&[0], &[0, 0, 0, 1]);
        assert!(z.is_zero());
        assert!(z.den().is_one());
        let f = rf(&[0, 1], &[3]);
        assert_eq!(f.num(), &Poly::new(vec![rat(0, 1), rat(1, 3)]));
        assert!(f.den().is_one());
        assert_eq!(
            RatFun::new(p(&[1]), Poly::zero()),
            Err(Error::DivisionByZero)
        );
        // idempotent
        let g = RatFun::new(f.num().clone(), f.den().clone()).unwrap();
        assert_eq!(g, f);
    }

    #[test]
    fn proper_part_examples() {
        let f = &RatFun::from_poly(p(&[0, 1])) + &rf(&[1], &[0, 1]);
        assert_eq!(f.proper_part(), (p(&[0, 1]), rf(&[1], &[0, 1])));
        let g = rf(&[1], &[0, 1, 1]);
        assert_eq!(g.proper_part(), (Poly::zero(), g.clone()));
        assert_eq!(
            rf(&[1, 0, 0, 1], &[0, 0, 1]).proper_part(),
            (p(&[0, 1]), rf(&[1], &[0, 0, 1]))
        );
    }

    #[test]
    fn delta_examples() {
        assert_eq!(rf(&[-1], &[0, 1]).delta(), rf(&[1], &[0, 1, 1]));
        assert!(RatFun::constant(rat(7, 3)).delta().is_zero());
        assert_eq!(
            RatFun::from_poly(p(&[0, 0, 1])).delta(),
            RatFun::from_poly(p(&[1, 2]))
        );
    }

    #[test]
    fn parfrac_examples() {
        let f = rf(&[1], &[0, 1, 1]);
        assert_eq!(
            parfrac(&f, &[p(&[0, 1]), p(&[1, 1])]).unwrap(),
            vec![p(&[1]), p(&[-1])]
        );
        assert_eq!(
            parfrac(&f, &[f.den().clone()]).unwrap(),
            vec![f.num().clone()]
        );
        assert_eq!(
            parfrac(&f, &[Poly::one(), p(&[0, 1]), p(&[1, 1])]).unwrap(),
            vec![Poly::zero(), p(&[1]), p(&[-1])]
        );
    }

    #[test]
    fn parfrac_rejects_bad_parts() {
        let f = rf(&[1], &[0, 1, 1]);
        assert_eq!(parfrac(&f, &[p(&[0, 1])]), Err(Error::PartsProductMismatch));
        let g = rf(&[1], &[0, 0, 1]);
        assert_eq!(
            parfrac(&g, &[p(&[0, 1]), p(&[0, 1])]),
            Err(Error::NotSquarefree("parfrac"))
        );
        let h = RatFun::from_poly(p(&[0, 1]));
        assert_eq!(parfrac(&h, &[]), Err(Error::NotProper("parfrac")));
    }

    #[test]
    fn arithmetic_and_powers() {
        let a = rf(&[1], &[0, 1]);
        let b = rf(&[1], &[1, 1]);
        assert_eq!(&a - &b, rf(&[1], &[0, 1, 1]));
        assert_eq!(&a * &b, rf(&[1], &[0, 1, 1]));
        assert_eq!(a.powi(-2).unwrap(), RatFun::from_poly(p(&[0, 0, 1])));
        assert_eq!(rf(&[1], &[0, 0, 1]).derivative(), rf(&[-2], &[0, 0, 0, 1]));
        assert_eq!(RatFun::constant(rat(2, 3)).as_constant(), Some(rat(2, 3)));
    }

    pub(crate) fn arb_ratfun() -> impl Strategy<Value = RatFun> {
        (
            prop::collection::vec(-9i64..=9, 0..5),
            prop::collection::vec(-9i64..=9, 1..5),
        )
            .prop_filter_map("zero denominator", |(n, d)| RatFun::new(p(&n), p(&d)).ok())
    }

    proptest! {
        #[test]
        fn resummation(roots in prop::collection::btree_set(-6i64..6, 1..5), num in prop::collection::vec(-9i64..9, 0..4)) {
            let roots: Vec<i64> = roots.into_iter().collect();
            let parts: Vec<Poly> = roots.iter().map(|&r| p(&[-r, 1])).collect();
            let den = parts.iter().fold(Poly::one(), |a, b| &a * b);
            let numer = p(&num).rem(&den).unwrap();
            let f = RatFun::new(numer, den).unwrap();
            prop_assume!(f.den().len() == parts.len() + 1);
            let a = parfrac(&f, &parts).unwrap();
            let back: RatFun = a.iter().zip(&parts).map(|(n, d)| RatFun::new(n.clone(), d.clone()).unwrap()).sum();
            prop_assert_eq!(back, f);
        }

        #[test]
        fn field_laws(a in arb_ratfun(), b in arb_ratfun()) {
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            if !b.is_zero() {
                prop_assert_eq!((&a * &b).checked_div(&b).unwrap(), a.clone());
            }
            prop_assert_eq!(a.sigma(3).sigma(-3), a.clone());
        }
    }
}
