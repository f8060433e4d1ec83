//! Word-size prime field arithmetic: seeds for p-adic root lifting and the
//! images of multi-modular resultants.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn reduce(p: &[BigInt], m: u64) -> Vec<u64> {
    let big = BigInt::from(m);
    let mut v: Vec<u64> = p
        .iter()
        .map(|c| c.mod_floor(&big).to_u64().expect("residue fits in u64"))
        .collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, m: u64) -> u64 {
    pow_mod(a, m - 2, m)
}

pub(crate) fn eval(p: &[u64], x: u64, m: u64) -> u64 {
    p.iter()
        .rev()
        .fold(0, |acc, &c| (mul_mod(acc, x, m) + c) % m)
}

pub(crate) fn derivative(p: &[u64], m: u64) -> Vec<u64> {
    let mut v: Vec<u64> = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| mul_mod(c, i as u64 % m, m))
        .collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn rem(a: &[u64], b: &[u64], m: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let lb_inv = inv_mod(*b.last().expect("nonzero divisor"), m);
    while r.len() >= b.len() {
        let q = mul_mod(*r.last().unwrap(), lb_inv, m);
        let off = r.len() - b.len();
        for (j, &bj) in b.iter().enumerate() {
            r[off + j] = (r[off + j] + m - mul_mod(q, bj, m)) % m;
        }
        while r.last() == Some(&0) {
            r.pop();
        }
    }
    r
}

/// Monic `gcd(a, b)` over `F_m`, `m` prime; empty when both are zero.
pub(crate) fn gcd(a: &[u64], b: &[u64], m: u64) -> Vec<u64> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b, m);
        a = b;
        b = r;
    }
    if let Some(&lead) = a.last() {
        let inv = inv_mod(lead, m);
        for c in a.iter_mut() {
            *c = mul_mod(*c, inv, m);
        }
    }
    a
}

fn sub_mul(a: &[u64], q: &[u64], b: &[u64], m: u64) -> Vec<u64> {
    let mut out = a.to_vec();
    let n = q.len() + b.len();
    if out.len() < n {
        out.resize(n, 0);
    }
    for (i, &qi) in q.iter().enumerate() {
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + m - mul_mod(qi, bj, m)) % m;
        }
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

/// `s` with `s a = 1 mod b` and `deg s < deg b` over `F_m`, or `None` when
/// `a` and `b` share a factor.
pub(crate) fn inverse(a: &[u64], b: &[u64], m: u64) -> Option<Vec<u64>> {
    let (mut r0, mut r1) = (b.to_vec(), rem(a, b, m));
    let (mut s0, mut s1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let lb_inv = inv_mod(*r1.last().unwrap(), m);
        let mut r = r0.clone();
        let mut q = vec![0u64; r.len().saturating_sub(r1.len()) + 1];
        while r.len() >= r1.len() {
            let c = mul_mod(*r.last().unwrap(), lb_inv, m);
            let off = r.len() - r1.len();
            q[off] = c;
            for (j, &bj) in r1.iter().enumerate() {
                r[off + j] = (r[off + j] + m - mul_mod(c, bj, m)) % m;
            }
            while r.last() == Some(&0) {
                r.pop();
            }
        }
        let s = sub_mul(&s0, &q, &s1, m);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    if r0.len() != 1 {
        return None;
    }
    let inv = inv_mod(r0[0], m);
    Some(s0.iter().map(|&c| mul_mod(c, inv, m)).collect())
}

/// Degree of `gcd(a, b)` over `F_m`, `m` prime; `None` when both are zero.
pub(crate) fn gcd_degree(a: &[u64], b: &[u64], m: u64) -> Option<usize> {
    gcd(a, b, m).len().checked_sub(1)
}

/// Extends residues `coeffs` modulo `modulus` by their images modulo the
/// prime `m`, in place.
pub(crate) fn crt_extend(coeffs: &mut [BigInt], modulus: &BigInt, image: &[u64], m: u64) {
    let mb = BigInt::from(m);
    let inv = BigInt::from(inv_mod(
        modulus
            .mod_floor(&mb)
            .to_u64()
            .expect("residue fits in u64"),
        m,
    ));
    for (c, &r) in coeffs.iter_mut().zip(image) {
        let delta = ((BigInt::from(r) - &*c) * &inv).mod_floor(&mb);
        if !delta.is_zero() {
            *c += modulus * delta;
        }
    }
}

/// Symmetric representatives in `(-modulus/2, modulus/2]`.
pub(crate) fn symmetric(coeffs: Vec<BigInt>, modulus: &BigInt) -> Vec<BigInt> {
    let half = modulus / 2u32;
    coeffs
        .into_iter()
        .map(|c| if c > half { c - modulus } else { c })
        .collect()
}

/// All roots in `F_m` by exhaustive evaluation.
pub(crate) fn roots(p: &[u64], m: u64) -> Vec<u64> {
    (0..m).filter(|&x| eval(p, x, m) == 0).collect()
}

/// Deterministic Miller-Rabin for all `u64`.
pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 4 {
        return n >= 2;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if a % n == 0 {
            continue;
        }
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes below `2^62`, descending.
pub(crate) fn large_primes() -> impl Iterator<Item = u64> {
    (1..(1u64 << 61))
        .map(|k| (1u64 << 62) - 2 * k + 1)
        .filter(|&n| is_prime_u64(n))
}

/// `p(x + c)`
pub(crate) fn taylor_shift(p: &[u64], c: u64, m: u64) -> Vec<u64> {
    let mut out: Vec<u64> = Vec::with_capacity(p.len());
    for &a in p.iter().rev() {
        out.push(0);
        for i in (1..out.len()).rev() {
            out[i] = (out[i - 1] + mul_mod(c, out[i], m)) % m;
        }
        out[0] = (mul_mod(c, out[0], m) + a) % m;
    }
    out
}

/// Resultant over `F_m` of two polynomials given with nonzero leading
/// coefficients (no trailing zeros).
pub(crate) fn resultant(a: &[u64], b: &[u64], m: u64) -> u64 {
    if a.is_empty() || b.is_empty() {
        return 0;
    }
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    let mut acc = 1u64;
    loop {
        let da = a.len() - 1;
        let db = b.len() - 1;
        if db == 0 {
            return mul_mod(acc, pow_mod(b[0], da as u64, m), m);
        }
        if da == 0 {
            return mul_mod(acc, pow_mod(a[0], db as u64, m), m);
        }
        // Res(a, b) = (-1)^(da db) lc(b)^(da - deg r) Res(b, r)
        let r = rem(&a, &b, m);
        if r.is_empty() {
            return 0;
        }
        if da % 2 == 1 && db % 2 == 1 {
            acc = (m - acc) % m;
        }
        acc = mul_mod(
            acc,
            pow_mod(*b.last().unwrap(), (da - (r.len() - 1)) as u64, m),
            m,
        );
        a = b;
        b = r;
    }
}

/// Coefficients of the polynomial of degree `< values.len()` taking
/// `values[j]` at `z = j`. Needs `m > values.len()`.
pub(crate) fn interpolate_consecutive(values: &[u64], m: u64) -> Vec<u64> {
    let n = values.len();
    let mut diffs = values.to_vec();
    let mut acc = vec![0u64; n];
    let mut falling = vec![1u64];
    let mut inv_fact = 1u64;
    for k in 0..n {
        if k > 0 {
            inv_fact = mul_mod(inv_fact, inv_mod(k as u64, m), m);
            let shift = (k - 1) as u64;
            let mut next = vec![0u64; falling.len() + 1];
            for (i, &c) in falling.iter().enumerate() {
                next[i + 1] = (next[i + 1] + c) % m;
                next[i] = (next[i] + m - mul_mod(c, shift, m)) % m;
            }
            falling = next;
        }
        let w = mul_mod(diffs[0], inv_fact, m);
        if w != 0 {
            for (i, &c) in falling.iter().enumerate() {
                acc[i] = (acc[i] + mul_mod(w, c, m)) % m;
            }
        }
        for j in 0..n - 1 - k {
            diffs[j] = (diffs[j + 1] + m - diffs[j]) % m;
        }
    }
    acc
}

pub(crate) fn is_zero_mod(c: &BigInt, m: u64) -> bool {
    (c % BigInt::from(m)).is_zero()
}
