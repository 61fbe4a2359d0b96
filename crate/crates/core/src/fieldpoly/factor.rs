//! Factorization of `x^n − δ` into monic irreducibles over `F_q`, `gcd(q, n) = 1`.
//!
//! The input is squarefree, so distinct-degree factorization followed by
//! Cantor–Zassenhaus equal-degree splitting yields the complete factorization.
//! Splitting is randomized with a seeded ChaCha8 stream; factors are sorted
//! canonically afterwards, so outputs do not depend on the seed.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::field::{Field, FieldElement};
use super::poly::Poly;
use crate::error::{Error, Result};

/// Seed used when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 0x5EED;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factor {
    pub poly: Poly,
    pub degree: usize,
}

/// `x^n − δ = Π f_j` with the `f_j` monic, irreducible, pairwise distinct,
/// in canonical order (see [`Poly::canonical_cmp`]).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization {
    pub n: usize,
    pub delta: FieldElement,
    pub factors: Vec<Factor>,
}

impl Factorization {
    pub fn r(&self) -> usize {
        self.factors.len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.degree).collect()
    }

    pub fn polys(&self) -> impl Iterator<Item = &Poly> {
        self.factors.iter().map(|f| &f.poly)
    }

    pub fn product(&self, field: &Field) -> Poly {
        self.polys().fold(Poly::one(), |acc, f| acc.mul(f, field))
    }
}

/// Factors `x^n − δ` with the default seed.
pub fn factor_xn_minus_delta(field: &Field, n: usize, delta: FieldElement) -> Result<Factorization> {
    factor_xn_minus_delta_seeded(field, n, delta, DEFAULT_SEED)
}

pub fn factor_xn_minus_delta_seeded(field: &Field, n: usize, delta: FieldElement, seed: u64) -> Result<Factorization> {
    check_length(field, n)?;
    field.elem(delta.enc())?;
    if delta.is_zero() {
        return Err(Error::InvalidInput("δ must be a nonzero element".into()));
    }
    let target = Poly::xn_minus(field, n, delta);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factors = Vec::new();
    for (d, block) in distinct_degree(&target, field)? {
        equal_degree_split(&block, d, field, &mut rng, &mut factors)?;
    }
    factors.sort_by(|a, b| a.canonical_cmp(b));
    let factors =
        factors.into_iter().map(|poly| Factor { degree: poly.degree().expect("nonconstant factor"), poly }).collect();
    Ok(Factorization { n, delta, factors })
}

pub(crate) fn check_length(field: &Field, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidInput("length n must be positive".into()));
    }
    if n.is_multiple_of(field.p() as usize) {
        return Err(Error::NotCoprime { p: field.p(), n });
    }
    Ok(())
}

/// Splits a squarefree monic polynomial into `(d, product of all irreducible factors of degree d)`.
fn distinct_degree(f: &Poly, field: &Field) -> Result<Vec<(usize, Poly)>> {
    let x = Poly::x();
    let mut rest = f.monic(field);
    let mut h = x.rem(&rest, field)?;
    let mut out = Vec::new();
    let mut d = 0;
    while let Some(deg) = rest.degree() {
        if deg == 0 {
            break;
        }
        d += 1;
        if 2 * d > deg {
            out.push((deg, rest.clone()));
            break;
        }
        h = h.pow_mod(field.q() as u64, &rest, field)?;
        let g = rest.gcd(&h.sub(&x, field), field);
        if !g.is_one() {
            rest = rest.divmod(&g, field)?.0;
            h = h.rem(&rest, field)?;
            out.push((d, g));
        }
    }
    Ok(out)
}

/// Cantor–Zassenhaus: `f` is a product of distinct monic irreducibles of degree `d`.
fn equal_degree_split(f: &Poly, d: usize, field: &Field, rng: &mut ChaCha8Rng, out: &mut Vec<Poly>) -> Result<()> {
    let deg = f.degree().expect("nonzero");
    if deg == d {
        out.push(f.clone());
        return Ok(());
    }
    loop {
        let a = Poly::new((0..deg).map(|_| field.random(rng)).collect());
        if a.degree().is_none_or(|k| k == 0) {
            continue;
        }
        let candidate = splitting_polynomial(&a, f, d, field)?;
        let g = f.gcd(&candidate, field);
        let dg = g.degree().unwrap_or(0);
        if dg > 0 && dg < deg {
            let h = f.divmod(&g, field)?.0;
            equal_degree_split(&g, d, field, rng, out)?;
            equal_degree_split(&h, d, field, rng, out)?;
            return Ok(());
        }
    }
}

/// For odd `q`: `a^{(q^d−1)/2} − 1`. For even `q`: the trace `Σ_{i<md} a^{2^i}`.
fn splitting_polynomial(a: &Poly, f: &Poly, d: usize, field: &Field) -> Result<Poly> {
    if field.p() == 2 {
        let steps = field.m() as usize * d;
        let mut term = a.rem(f, field)?;
        let mut acc = term.clone();
        for _ in 1..steps {
            term = term.mul_mod(&term, f, field)?;
            acc = acc.add(&term, field);
        }
        Ok(acc)
    } else {
        // (q^d − 1)/2 = (1 + q + … + q^{d−1})·(q − 1)/2
        let q = field.q() as u64;
        let mut frob = a.rem(f, field)?;
        let mut norm = frob.clone();
        for _ in 1..d {
            frob = frob.pow_mod(q, f, field)?;
            norm = norm.mul_mod(&frob, f, field)?;
        }
        let b = norm.pow_mod((q - 1) / 2, f, field)?;
        Ok(b.sub(&Poly::one(), field))
    }
}
