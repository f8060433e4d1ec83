//! Brute-force reference for discrete residues.
//!
//! Functions are built from explicit partial-fraction terms
//! `c / (x - alpha)^k` with rational `alpha`, so orbits can be decided by
//! exact subtraction and discrete residues summed straight from the
//! definition. The symbolic output is then compared root by root after
//! recovering the (rational) roots of each `B_k`.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::poly::{integer_roots, Poly};
use crate::ratfun::RatFun;
use crate::residues::{DresOutput, MultiDresOutput};
use crate::Rat;

/// `c / (x - alpha)^k`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub alpha: Rat,
    pub k: u32,
    pub c: Rat,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OrbitSpec {
    pub terms: Vec<Term>,
}

/// One nonzero discrete residue: orbit of `rep`, order `k`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct OracleResidue {
    pub rep: Rat,
    pub k: u32,
    pub value: Rat,
}

fn same_orbit(a: &Rat, b: &Rat) -> bool {
    (a - b).is_integer()
}

impl OrbitSpec {
    pub fn validate(&self) -> Result<()> {
        for (i, t) in self.terms.iter().enumerate() {
            if t.k == 0 {
                return Err(Error::InvalidSpec(format!(
                    "term {}: order must be positive",
                    i + 1
                )));
            }
            if t.c.is_zero() {
                return Err(Error::InvalidSpec(format!(
                    "term {}: zero coefficient",
                    i + 1
                )));
            }
            if self.terms[..i]
                .iter()
                .any(|u| u.alpha == t.alpha && u.k == t.k)
            {
                return Err(Error::InvalidSpec(format!(
                    "term {}: duplicate pole {} of order {}",
                    i + 1,
                    t.alpha,
                    t.k
                )));
            }
        }
        Ok(())
    }

    /// Highest order among the terms.
    pub fn order(&self) -> u32 {
        self.terms.iter().map(|t| t.k).max().unwrap_or(0)
    }

    /// Parses one `alpha k c` triple per line. Blank lines and `#` comments
    /// are skipped.
    pub fn parse(text: &str) -> Result<OrbitSpec> {
        let mut terms = Vec::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let bad = |what: &str| Error::InvalidSpec(format!("line {}: {what}", n + 1));
            let [alpha, k, c] = fields[..] else {
                return Err(bad("expected `alpha k c`"));
            };
            terms.push(Term {
                alpha: parse_rat(alpha).ok_or_else(|| bad("bad alpha"))?,
                k: k.parse().map_err(|_| bad("bad order"))?,
                c: parse_rat(c).ok_or_else(|| bad("bad coefficient"))?,
            });
        }
        let spec = OrbitSpec { terms };
        spec.validate()?;
        Ok(spec)
    }
}

fn parse_rat(s: &str) -> Option<Rat> {
    if s.ends_with("/0") || s.contains("/-") || s.contains("/+") {
        return None;
    }
    Rat::from_str(s).ok()
}

/// `sum c / (x - alpha)^k`
pub fn build_from_spec(spec: &OrbitSpec) -> Result<RatFun> {
    spec.validate()?;
    Ok(spec
        .terms
        .iter()
        .map(|t| RatFun::simple_term(&t.c, &t.alpha, t.k))
        .sum())
}

/// Discrete residues summed from the definition, sorted by
/// `(rep, k)`. The representative is the smallest pole of the orbit.
pub fn dres_by_definition(spec: &OrbitSpec) -> Vec<OracleResidue> {
    let mut reps: Vec<Rat> = Vec::new();
    for t in &spec.terms {
        match reps.iter_mut().find(|r| same_orbit(r, &t.alpha)) {
            Some(r) if t.alpha < *r => *r = t.alpha.clone(),
            Some(_) => {}
            None => reps.push(t.alpha.clone()),
        }
    }
    let mut sums: BTreeMap<(Rat, u32), Rat> = BTreeMap::new();
    for t in &spec.terms {
        let rep = reps
            .iter()
            .find(|r| same_orbit(r, &t.alpha))
            .expect("orbit recorded");
        *sums.entry((rep.clone(), t.k)).or_insert_with(Rat::zero) += &t.c;
    }
    sums.into_iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|((rep, k), value)| OracleResidue { rep, k, value })
        .collect()
}

/// Rational roots of a nonzero polynomial, sorted and distinct. With
/// `a_n` the leading coefficient of the primitive integer form, the roots
/// are `beta / a_n` for the integer roots `beta` of the monic
/// `a_n^(n-1) p(y / a_n)`.
pub fn rational_roots(p: &Poly) -> Result<Vec<Rat>> {
    if p.is_zero() {
        return Err(Error::ZeroInput("rational_roots"));
    }
    if p.is_constant() {
        return Ok(Vec::new());
    }
    let (_, a) = p.to_primitive_integer();
    let n = a.len() - 1;
    let lead = a[n].clone();
    let monic: Vec<BigInt> = (0..=n)
        .map(|i| {
            if i == n {
                BigInt::one()
            } else {
                &a[i] * num_traits::pow(lead.clone(), n - 1 - i)
            }
        })
        .collect();
    let mut out: Vec<Rat> = integer_roots(&Poly::from_bigints(&monic))?
        .into_iter()
        .map(|b| Rat::new(b, lead.clone()))
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Checks a symbolic output against the oracle: every root of every `B_k`
/// must be rational, lie in an orbit with nonzero order-`k` residue, and
/// carry that residue as the value of `D_k`; every such orbit must be hit
/// exactly once.
pub fn check_against_oracle(out: &DresOutput, spec: &OrbitSpec) -> std::result::Result<(), String> {
    let oracle = dres_by_definition(spec);
    if out.pairs.len() != spec.order() as usize {
        return Err(format!(
            "expected {} orders, got {}",
            spec.order(),
            out.pairs.len()
        ));
    }
    for (i, pair) in out.pairs.iter().enumerate() {
        let k = i as u32 + 1;
        let want: Vec<&OracleResidue> = oracle.iter().filter(|o| o.k == k).collect();
        let roots = rational_roots(&pair.b).map_err(|e| e.to_string())?;
        if roots.len() != pair.b.len() - 1 {
            return Err(format!(
                "order {k}: B = {} has irrational or repeated roots",
                pair.b
            ));
        }
        if roots.len() != want.len() {
            return Err(format!(
                "order {k}: {} roots of B but {} orbits with nonzero residue",
                roots.len(),
                want.len()
            ));
        }
        for rho in &roots {
            let hit: Vec<&&OracleResidue> =
                want.iter().filter(|o| same_orbit(&o.rep, rho)).collect();
            let [o] = hit[..] else {
                return Err(format!(
                    "order {k}: root {rho} matches {} orbits",
                    hit.len()
                ));
            };
            let got = pair.d.eval(rho);
            if got != o.value {
                return Err(format!(
                    "order {k}: residue at orbit of {} is {}, D({rho}) = {got}",
                    o.rep, o.value
                ));
            }
        }
    }
    Ok(())
}

/// Same check for a joint output over several specs: `B` must have exactly
/// one rational root per orbit carrying any nonzero residue, and
/// `D_{i,k}` must evaluate there to the residue of input `i` (zero if none).
pub fn check_multi_against_oracle(
    out: &MultiDresOutput,
    specs: &[OrbitSpec],
) -> std::result::Result<(), String> {
    let oracles: Vec<Vec<OracleResidue>> = specs.iter().map(dres_by_definition).collect();
    let roots = rational_roots(&out.b).map_err(|e| e.to_string())?;
    if roots.len() != out.b.len() - 1 {
        return Err(format!("B = {} has irrational or repeated roots", out.b));
    }
    let mut orbits: Vec<Rat> = Vec::new();
    for o in oracles.iter().flatten() {
        if !orbits.iter().any(|r| same_orbit(r, &o.rep)) {
            orbits.push(o.rep.clone());
        }
    }
    if orbits.len() != roots.len() {
        return Err(format!(
            "{} orbits but {} roots of B",
            orbits.len(),
            roots.len()
        ));
    }
    for orbit in &orbits {
        let hits: Vec<&Rat> = roots.iter().filter(|r| same_orbit(r, orbit)).collect();
        let [rho] = hits[..] else {
            return Err(format!("orbit of {orbit} hit {} times", hits.len()));
        };
        for (i, oracle) in oracles.iter().enumerate() {
            for (kk, d) in out.d[i].iter().enumerate() {
                let k = kk as u32 + 1;
                let want = oracle
                    .iter()
                    .find(|o| o.k == k && same_orbit(&o.rep, orbit))
                    .map_or_else(Rat::zero, |o| o.value.clone());
                if d.eval(rho) != want {
                    return Err(format!(
                        "input {i}, order {k}, orbit of {orbit}: want {want}"
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Shape of random specs.
#[derive(Debug, Clone)]
pub struct SpecParams {
    pub max_orbits: usize,
    pub max_members: usize,
    pub max_order: u32,
    /// Poles have denominators in `1..=max_den`.
    pub max_den: i64,
    /// Orbit base points have numerators in `-base_range..=base_range`.
    pub base_range: i64,
    /// Members sit up to this many steps right of the base point.
    pub max_step: i64,
    /// Coefficient numerators are at most this in absolute value.
    pub coeff_bound: i64,
}

impl Default for SpecParams {
    fn default() -> Self {
        SpecParams {
            max_orbits: 6,
            max_members: 3,
            max_order: 4,
            max_den: 5,
            base_range: 12,
            max_step: 4,
            coeff_bound: 1 << 15,
        }
    }
}

fn random_coeff<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Rat {
    loop {
        let n = rng.gen_range(-bound..=bound);
        if n != 0 {
            return Rat::new(n.into(), rng.gen_range(1..=16i64).into());
        }
    }
}

/// A random nonempty valid spec with rational poles.
pub fn random_spec<R: Rng + ?Sized>(rng: &mut R, params: &SpecParams) -> OrbitSpec {
    let norbits = rng.gen_range(1..=params.max_orbits);
    let mut bases: Vec<Rat> = Vec::new();
    // few residue classes mod 1 exist for small denominators; give up
    // rather than loop forever
    for _ in 0..1000 {
        if bases.len() == norbits {
            break;
        }
        let den = rng.gen_range(1..=params.max_den);
        let cand = Rat::new(
            rng.gen_range(-params.base_range..=params.base_range).into(),
            den.into(),
        );
        if !bases.iter().any(|b| same_orbit(b, &cand)) {
            bases.push(cand);
        }
    }
    let mut spec = OrbitSpec::default();
    for base in &bases {
        let members = rng.gen_range(1..=params.max_members);
        for _ in 0..members {
            let alpha = base + Rat::from_integer(rng.gen_range(0..=params.max_step).into());
            let k = rng.gen_range(1..=params.max_order);
            if spec.terms.iter().any(|t| t.alpha == alpha && t.k == k) {
                continue;
            }
            let c = random_coeff(rng, params.coeff_bound);
            spec.terms.push(Term { alpha, k, c });
        }
    }
    spec
}

/// Moves every term to its orbit's representative with the same `k` and
/// coefficient sum, giving a spec with the same discrete residues and
/// polar dispersion zero.
pub fn collapse_to_reps(spec: &OrbitSpec) -> OrbitSpec {
    OrbitSpec {
        terms: dres_by_definition(spec)
            .into_iter()
            .map(|o| Term {
                alpha: o.rep,
                k: o.k,
                c: o.value,
            })
            .collect(),
    }
}

/// Whether all poles of the spec are pairwise in different orbits.
pub fn is_shift_free(spec: &OrbitSpec) -> bool {
    let poles: Vec<&Rat> = spec.terms.iter().map(|t| &t.alpha).collect();
    poles
        .iter()
        .enumerate()
        .all(|(i, a)| poles[..i].iter().all(|b| *a == *b || !same_orbit(a, b)))
}
