#![allow(dead_code)]

use dres_core::{rat, Poly, Rat, RatFun};

pub fn p(c: &[i64]) -> Poly {
    Poly::from_ints(c)
}

pub fn prod(fs: &[&[i64]]) -> Poly {
    fs.iter().fold(Poly::one(), |acc, f| &acc * &p(f))
}

/// `c * num / den` for integer-coefficient `num` and factored `den`.
pub fn frac(c: Rat, num: &[i64], den: &[&[i64]]) -> RatFun {
    RatFun::new(p(num).scale(&c), prod(den)).unwrap()
}

pub const X: &[i64] = &[0, 1];
pub const X_PLUS_2: &[i64] = &[2, 1];
pub const X_PLUS_3: &[i64] = &[3, 1];
pub const X2_PLUS_1: &[i64] = &[1, 0, 1];
pub const X2_4X_5: &[i64] = &[5, 4, 1];

/// `1 / (x^3 (x+2)^3 (x+3) (x^2+1) (x^2+4x+5)^2)`
pub fn example_f() -> RatFun {
    let den = prod(&[
        X, X, X, X_PLUS_2, X_PLUS_2, X_PLUS_2, X_PLUS_3, X2_PLUS_1, X2_4X_5, X2_4X_5,
    ]);
    RatFun::new(Poly::one(), den).unwrap()
}

pub fn example_layers() -> [RatFun; 3] {
    [
        frac(
            rat(1, 18000),
            &[5008, 9502, 9721, 9659, 4803, 787],
            &[X2_PLUS_1, X_PLUS_3, X2_4X_5, X_PLUS_2, X],
        ),
        frac(
            rat(-1, 18000),
            &[1030, 4696, 3372, 787],
            &[X2_4X_5, X, X_PLUS_2],
        ),
        frac(rat(-1, 300), &[-1, 7], &[X_PLUS_2, X]),
    ]
}
