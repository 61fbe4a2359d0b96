//! Finite fields `F_q`, `q = p^m`, in a power basis over a monic irreducible modulus.
//!
//! Elements are stored by their integer encoding `enc(a) = Σ a_i p^i`, where
//! `a_i` are the coordinates of `a` in the power basis. Multiplication and
//! inversion go through log/antilog tables built once per field.

use std::fmt;
use std::sync::Arc;

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::poly::Poly;
use crate::error::{Error, Result};

/// Largest field order for which tables are built.
pub const MAX_FIELD_ORDER: u32 = 1 << 16;

/// An element of `F_q` by its integer encoding.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// Integer encoding `Σ coeffs[i]·p^i`.
    #[inline]
    pub fn enc(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Parameters of `F_q`: characteristic, degree and defining modulus over `F_p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    p: u32,
    m: u32,
    /// Coefficients of the modulus over `F_p`, ascending, monic, length `m + 1`.
    modulus: Vec<u32>,
}

impl FieldSpec {
    /// Builds the spec for `F_{p^m}`. Without an explicit modulus the
    /// smallest monic irreducible of degree `m` (as a base-`p` integer) is used.
    pub fn new(p: u32, m: u32, modulus: Option<Vec<u32>>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidInput(format!("p = {p} is not prime")));
        }
        if m == 0 {
            return Err(Error::InvalidInput("extension degree m must be positive".into()));
        }
        let q = (p as u64).checked_pow(m).filter(|&q| q <= MAX_FIELD_ORDER as u64);
        if q.is_none() {
            return Err(Error::InvalidInput(format!(
                "field order {p}^{m} exceeds the supported maximum {MAX_FIELD_ORDER}"
            )));
        }
        let modulus = match modulus {
            Some(coeffs) => {
                if coeffs.len() != m as usize + 1 || coeffs[m as usize] != 1 {
                    return Err(Error::InvalidInput(format!(
                        "modulus must be monic of degree {m} (got {} coefficients)",
                        coeffs.len()
                    )));
                }
                if coeffs.iter().any(|&c| c >= p) {
                    return Err(Error::InvalidInput("modulus coefficients must lie in [0, p)".into()));
                }
                if m > 1 && !is_irreducible_over_prime(p, &coeffs) {
                    return Err(Error::InvalidInput(format!("modulus {coeffs:?} is reducible over F_{p}")));
                }
                coeffs
            }
            None => smallest_irreducible(p, m),
        };
        Ok(FieldSpec { p, m, modulus })
    }

    pub fn prime(p: u32) -> Result<Self> {
        Self::new(p, 1, None)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn q(&self) -> u32 {
        self.p.pow(self.m)
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }
}

struct Inner {
    spec: FieldSpec,
    q: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// Arithmetic context for `F_q`. Cheap to clone; serializes as its [`FieldSpec`].
#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "FieldSpec", into = "FieldSpec")]
pub struct Field(Arc<Inner>);

impl From<Field> for FieldSpec {
    fn from(f: Field) -> Self {
        f.0.spec.clone()
    }
}

impl TryFrom<FieldSpec> for Field {
    type Error = Error;

    fn try_from(spec: FieldSpec) -> Result<Self> {
        Ok(Field::new(FieldSpec::new(spec.p, spec.m, Some(spec.modulus))?))
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.spec == other.0.spec
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}(p={}, modulus={:?})", self.q(), self.p(), self.0.spec.modulus)
    }
}

impl Field {
    pub fn new(spec: FieldSpec) -> Self {
        let q = spec.q();
        let slow_mul = |a: u32, b: u32| mul_power_basis(&spec, a, b);
        let (exp, log) = if q == 2 {
            (vec![1, 1], vec![0, 0])
        } else {
            let generator = (2..q)
                .find(|&g| multiplicative_order(g, q, &slow_mul) == q - 1)
                .expect("the multiplicative group of a finite field is cyclic");
            let mut exp = vec![0u32; 2 * (q as usize - 1)];
            let mut log = vec![0u32; q as usize];
            let mut acc = 1u32;
            for i in 0..(q as usize - 1) {
                exp[i] = acc;
                exp[i + q as usize - 1] = acc;
                log[acc as usize] = i as u32;
                acc = slow_mul(acc, generator);
            }
            (exp, log)
        };
        Field(Arc::new(Inner { spec, q, exp, log }))
    }

    /// Convenience constructor for `F_{p^m}` with the default modulus.
    pub fn gf(p: u32, m: u32) -> Result<Self> {
        Ok(Self::new(FieldSpec::new(p, m, None)?))
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.0.spec
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.0.spec.p
    }

    #[inline]
    pub fn m(&self) -> u32 {
        self.0.spec.m
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.0.q
    }

    /// Element with the given integer encoding.
    pub fn elem(&self, enc: u32) -> Result<FieldElement> {
        if enc >= self.q() {
            return Err(Error::InvalidInput(format!("{enc} is not an element encoding of F_{}", self.q())));
        }
        Ok(FieldElement(enc))
    }

    /// Element from power-basis coordinates; each coordinate is reduced mod `p`.
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() > self.m() as usize {
            return Err(Error::InvalidInput(format!("expected at most {} coordinates", self.m())));
        }
        let p = self.p();
        Ok(FieldElement(coeffs.iter().rev().fold(0, |acc, &c| acc * p + c % p)))
    }

    /// Power-basis coordinates (length `m`).
    pub fn coeffs(&self, a: FieldElement) -> Vec<u32> {
        let p = self.p();
        let mut x = a.0;
        (0..self.m())
            .map(|_| {
                let d = x % p;
                x /= p;
                d
            })
            .collect()
    }

    /// Integer `k` reduced into the prime subfield.
    pub fn from_int(&self, k: i64) -> FieldElement {
        FieldElement(k.rem_euclid(self.p() as i64) as u32)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::ONE
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q()).map(FieldElement)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElement> {
        (1..self.q()).map(FieldElement)
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElement {
        FieldElement(rng.random_range(0..self.q()))
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElement {
        FieldElement(rng.random_range(1..self.q()))
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = self.p();
        if p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        if self.m() == 1 {
            return FieldElement((a.0 + b.0) % p);
        }
        let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0, 1);
        while x > 0 || y > 0 {
            out += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place *= p;
        }
        FieldElement(out)
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let p = self.p();
        if p == 2 {
            return a;
        }
        if self.m() == 1 {
            return FieldElement((p - a.0) % p);
        }
        let (mut x, mut out, mut place) = (a.0, 0, 1);
        while x > 0 {
            out += ((p - x % p) % p) * place;
            x /= p;
            place *= p;
        }
        FieldElement(out)
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement::ZERO;
        }
        let inner = &*self.0;
        FieldElement(inner.exp[(inner.log[a.0 as usize] + inner.log[b.0 as usize]) as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let inner = &*self.0;
        let order = inner.q - 1;
        let l = inner.log[a.0 as usize];
        Ok(FieldElement(inner.exp[((order - l) % order) as usize]))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if e == 0 {
            return FieldElement::ONE;
        }
        if a.0 == 0 {
            return FieldElement::ZERO;
        }
        let inner = &*self.0;
        let order = (inner.q - 1) as u64;
        let l = inner.log[a.0 as usize] as u64;
        FieldElement(inner.exp[((l * (e % order)) % order) as usize])
    }

    /// Renders an element in the power basis with generator `y`, e.g. `y + 1`.
    pub fn display_poly_basis(&self, a: FieldElement) -> String {
        if self.m() == 1 {
            return a.0.to_string();
        }
        let coeffs = self.coeffs(a);
        let terms: Vec<String> = coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| {
                let var = match i {
                    0 => String::new(),
                    1 => "y".to_string(),
                    _ => format!("y^{i}"),
                };
                match (c, i) {
                    (_, 0) => c.to_string(),
                    (1, _) => var,
                    _ => format!("{c}*{var}"),
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

/// Trial-division primality test.
pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn multiplicative_order(g: u32, q: u32, mul: &impl Fn(u32, u32) -> u32) -> u32 {
    let mut acc = g;
    let mut k = 1;
    while acc != 1 {
        acc = mul(acc, g);
        k += 1;
        if k > q {
            return 0;
        }
    }
    k
}

/// Schoolbook product of two encodings in the power basis, reduced by the modulus.
fn mul_power_basis(spec: &FieldSpec, a: u32, b: u32) -> u32 {
    let (p, m) = (spec.p as u64, spec.m as usize);
    let digits = |mut x: u32| {
        (0..m)
            .map(|_| {
                let d = (x % spec.p) as u64;
                x /= spec.p;
                d
            })
            .collect::<Vec<u64>>()
    };
    let (da, db) = (digits(a), digits(b));
    let mut prod = vec![0u64; 2 * m];
    for (i, &x) in da.iter().enumerate() {
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for k in (m..2 * m).rev() {
        let c = prod[k];
        if c == 0 {
            continue;
        }
        prod[k] = 0;
        for (i, &mc) in spec.modulus[..m].iter().enumerate() {
            prod[k - m + i] = (prod[k - m + i] + (p - c) * mc as u64) % p;
        }
    }
    prod[..m].iter().rev().fold(0u64, |acc, &d| acc * p + d) as u32
}

/// Checks that a monic polynomial over `F_p` (ascending coefficients) is
/// irreducible: no factor of degree `k ≤ deg/2`, i.e. `gcd(f, x^{p^k} − x) = 1`.
fn is_irreducible_over_prime(p: u32, coeffs: &[u32]) -> bool {
    let fp = Field::new(FieldSpec { p, m: 1, modulus: vec![0, 1] });
    let f = Poly::new(coeffs.iter().map(|&c| FieldElement(c)).collect());
    f.is_irreducible(&fp)
}

fn smallest_irreducible(p: u32, m: u32) -> Vec<u32> {
    if m == 1 {
        return vec![0, 1];
    }
    let count = p.pow(m);
    (0..count)
        .map(|low| {
            let mut coeffs: Vec<u32> = Vec::with_capacity(m as usize + 1);
            let mut x = low;
            for _ in 0..m {
                coeffs.push(x % p);
                x /= p;
            }
            coeffs.push(1);
            coeffs
        })
        .find(|c| is_irreducible_over_prime(p, c))
        .expect("irreducible polynomials exist in every degree")
}
