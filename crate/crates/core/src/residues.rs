//! Discrete residues as pairs of polynomials.
//!
//! For a function with simple poles and polar dispersion zero, the discrete
//! residue at an orbit is just the classical residue at its unique pole
//! there, and those are the values of a single polynomial `D` at the roots
//! of the denominator `B`: `D = a * (B')^-1 mod B`.

use crate::error::{Error, Result};
use crate::hermite::hermite_list;
use crate::poly::Poly;
use crate::ratfun::RatFun;
use crate::reduction::{simple_reduction, simple_reduction_multi};

/// `(B, D)`: either `(1, 0)`, or `B` squarefree of dispersion zero with
/// `D != 0`, `deg D < deg B`, and `D(alpha)` the residue at each root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResiduePair {
    pub b: Poly,
    pub d: Poly,
}

impl ResiduePair {
    pub fn trivial() -> Self {
        ResiduePair {
            b: Poly::one(),
            d: Poly::zero(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.d.is_zero()
    }
}

/// Pairs `(B_k, D_k)` for orders `k = 1..=m`; `pairs[k - 1]` is order `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DresOutput {
    pub pairs: Vec<ResiduePair>,
}

impl DresOutput {
    /// True when every discrete residue vanishes.
    pub fn all_trivial(&self) -> bool {
        self.pairs.iter().all(ResiduePair::is_trivial)
    }
}

/// A shared `B` for all inputs and orders. `d[i][k - 1]` is `D_{i,k}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiDresOutput {
    pub b: Poly,
    pub d: Vec<Vec<Poly>>,
}

impl MultiDresOutput {
    /// Common number of orders `m`.
    pub fn order(&self) -> usize {
        self.d.first().map_or(0, Vec::len)
    }
}

/// `(den f, num f * den'(f)^-1 mod den f)`, or `(1, 0)` for `f = 0`.
pub fn first_residues(f: &RatFun) -> Result<ResiduePair> {
    if f.is_zero() {
        return Ok(ResiduePair::trivial());
    }
    if !f.is_proper() {
        return Err(Error::NotProper("first_residues"));
    }
    let b = f.den();
    let db = b.derivative();
    let inv = db.inverse_mod(b).map_err(|e| match e {
        Error::NotInvertible => Error::NotSquarefree("first_residues"),
        other => other,
    })?;
    let r = (f.num() * &inv).rem(b)?;
    if r.is_zero() || !(&(&r * &db) - f.num()).rem(b)?.is_zero() {
        return Err(Error::Internal(
            "first_residues: congruence check failed".into(),
        ));
    }
    Ok(ResiduePair { b: b.clone(), d: r })
}

/// Residues of several simple-pole functions over `B = lcm(den f_i)`:
/// `p_i` agrees with the residue polynomial of `f_i` modulo `den f_i` and
/// vanishes at the other roots of `B`.
pub fn first_residues_multi(fs: &[RatFun]) -> Result<(Poly, Vec<Poly>)> {
    let singles = fs.iter().map(first_residues).collect::<Result<Vec<_>>>()?;
    let mut big_b = Poly::one();
    for pair in &singles {
        big_b = big_b.lcm(&pair.b)?;
    }
    let ps = singles
        .iter()
        .map(|pair| {
            if pair.is_trivial() {
                return Ok(Poly::zero());
            }
            let d = big_b.exact_div(&pair.b)?;
            let lift = (&pair.d * &d.inverse_mod(&pair.b)?).rem(&pair.b)?;
            Ok(&d * &lift)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((big_b, ps))
}

fn check_input(f: &RatFun, who: &'static str) -> Result<()> {
    if f.is_zero() {
        return Err(Error::ZeroInput(who));
    }
    if !f.is_proper() {
        return Err(Error::NotProper(who));
    }
    Ok(())
}

/// Discrete residues of a nonzero proper `f`, each order reduced on its own.
/// Different orders may pick different representatives of the same orbit.
pub fn discrete_residues(f: &RatFun) -> Result<DresOutput> {
    check_input(f, "discrete_residues")?;
    let layers = hermite_list(f)?;
    let pairs = layers
        .layers
        .iter()
        .map(|fk| first_residues(&simple_reduction(fk, false)?.reduced))
        .collect::<Result<Vec<_>>>()?;
    Ok(DresOutput { pairs })
}

/// Discrete residues of a nonzero proper `f` with all orders reduced
/// together, so an orbit is represented by the same root in every `B_k`.
pub fn discrete_residues_coordinated(f: &RatFun) -> Result<DresOutput> {
    check_input(f, "discrete_residues")?;
    let layers = hermite_list(f)?;
    let pairs = simple_reduction_multi(&layers.layers, false)?
        .iter()
        .map(|out| first_residues(&out.reduced))
        .collect::<Result<Vec<_>>>()?;
    Ok(DresOutput { pairs })
}

/// Discrete residues of several nonzero proper functions over one `B`.
/// When everything is summable, `B = 1` and every `D_{i,k}` is zero.
pub fn discrete_residues_multi(fs: &[RatFun]) -> Result<MultiDresOutput> {
    if fs.is_empty() {
        return Err(Error::EmptyInput("discrete_residues_multi"));
    }
    let mut lists = Vec::with_capacity(fs.len());
    for f in fs {
        check_input(f, "discrete_residues_multi")?;
        lists.push(hermite_list(f)?);
    }
    let m = lists.iter().map(|l| l.order()).max().unwrap_or(0);
    let flat: Vec<RatFun> = lists
        .iter()
        .flat_map(|l| (1..=m).map(move |k| l.layer(k)))
        .collect();
    let reduced: Vec<RatFun> = simple_reduction_multi(&flat, false)?
        .into_iter()
        .map(|o| o.reduced)
        .collect();
    let (b, ps) = first_residues_multi(&reduced)?;
    let d = ps.chunks(m).map(<[Poly]>::to_vec).collect();
    Ok(MultiDresOutput { b, d })
}
