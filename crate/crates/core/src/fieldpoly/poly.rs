//! Dense univariate polynomials over `F_q`.
//!
//! Coefficients are stored in ascending order with trailing zeros stripped,
//! so the zero polynomial has no coefficients and degree `None` (standing in
//! for `deg(0) = −∞`). Arithmetic takes the [`Field`] as an explicit context.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::field::{Field, FieldElement};
use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "PolyRepr")]
pub struct Poly {
    coeffs: Vec<FieldElement>,
}

#[derive(Deserialize)]
struct PolyRepr {
    coeffs: Vec<FieldElement>,
}

impl From<PolyRepr> for Poly {
    fn from(r: PolyRepr) -> Self {
        Poly::new(r.coeffs)
    }
}

impl Poly {
    pub fn new(coeffs: Vec<FieldElement>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    /// Polynomial from integer encodings of its coefficients, ascending.
    pub fn from_encs(field: &Field, encs: &[u32]) -> Result<Self> {
        let coeffs = encs.iter().map(|&e| field.elem(e)).collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(coeffs))
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(FieldElement::ONE)
    }

    pub fn x() -> Self {
        Poly::monomial(FieldElement::ONE, 1)
    }

    pub fn constant(c: FieldElement) -> Self {
        Poly::new(vec![c])
    }

    /// `c·x^k`
    pub fn monomial(c: FieldElement, k: usize) -> Self {
        let mut coeffs = vec![FieldElement::ZERO; k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    /// `x^n − δ`
    pub fn xn_minus(field: &Field, n: usize, delta: FieldElement) -> Self {
        let mut coeffs = vec![FieldElement::ZERO; n + 1];
        coeffs[n] = FieldElement::ONE;
        coeffs[0] = field.add(coeffs[0], field.neg(delta));
        Poly::new(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == FieldElement::ONE
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or_default()
    }

    pub fn lead(&self) -> FieldElement {
        self.coeffs.last().copied().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == FieldElement::ONE
    }

    /// Coefficients padded or truncated to exactly `len` entries.
    pub fn to_vec_padded(&self, len: usize) -> Vec<FieldElement> {
        (0..len).map(|i| self.coeff(i)).collect()
    }

    pub fn add(&self, other: &Poly, field: &Field) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..len).map(|i| field.add(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &Poly, field: &Field) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..len).map(|i| field.sub(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn neg(&self, field: &Field) -> Poly {
        Poly::new(self.coeffs.iter().map(|&c| field.neg(c)).collect())
    }

    pub fn scale(&self, c: FieldElement, field: &Field) -> Poly {
        Poly::new(self.coeffs.iter().map(|&a| field.mul(a, c)).collect())
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![FieldElement::ZERO; k];
        coeffs.extend_from_slice(&self.coeffs);
        Poly { coeffs }
    }

    pub fn mul(&self, other: &Poly, field: &Field) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![FieldElement::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = field.add(out[i + j], field.mul(a, b));
            }
        }
        Poly::new(out)
    }

    /// Division with remainder: `self = q·divisor + r`, `deg r < deg divisor`.
    pub fn divmod(&self, divisor: &Poly, field: &Field) -> Result<(Poly, Poly)> {
        let db = divisor.degree().ok_or(Error::DivisionByZero)?;
        let Some(da) = self.degree() else {
            return Ok((Poly::zero(), Poly::zero()));
        };
        if da < db {
            return Ok((Poly::zero(), self.clone()));
        }
        let lead_inv = field.inv(divisor.lead())?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![FieldElement::ZERO; da - db + 1];
        for k in (0..=da - db).rev() {
            let c = field.mul(rem[k + db], lead_inv);
            if c.is_zero() {
                continue;
            }
            quot[k] = c;
            for (i, &b) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = field.sub(rem[k + i], field.mul(c, b));
            }
        }
        rem.truncate(db);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    pub fn rem(&self, divisor: &Poly, field: &Field) -> Result<Poly> {
        Ok(self.divmod(divisor, field)?.1)
    }

    /// `self·other mod modulus`
    pub fn mul_mod(&self, other: &Poly, modulus: &Poly, field: &Field) -> Result<Poly> {
        self.mul(other, field).rem(modulus, field)
    }

    /// `self^e mod modulus` by square-and-multiply.
    pub fn pow_mod(&self, mut e: u64, modulus: &Poly, field: &Field) -> Result<Poly> {
        let mut base = self.rem(modulus, field)?;
        let mut acc = Poly::one().rem(modulus, field)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, modulus, field)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_mod(&base, modulus, field)?;
            }
        }
        Ok(acc)
    }

    /// Scales to leading coefficient 1; the zero polynomial stays zero.
    pub fn monic(&self, field: &Field) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let inv = field.inv(self.lead()).expect("nonzero leading coefficient");
        self.scale(inv, field)
    }

    /// Monic greatest common divisor (zero when both inputs are zero).
    pub fn gcd(&self, other: &Poly, field: &Field) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b, field).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic(field)
    }

    /// Extended Euclid: returns `(g, s, t)` with `g` monic, `s·self + t·other = g`,
    /// and Bézout coefficients reduced so that `deg s < deg other − deg g`
    /// and `deg t < deg self − deg g` (when `self` and `other` are both
    /// constant multiples of `g`, `s = 0` and `t` is a constant).
    pub fn ext_gcd(&self, other: &Poly, field: &Field) -> Result<(Poly, Poly, Poly)> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::InvalidInput("extended gcd of two zero polynomials".into()));
        }
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1, field)?;
            let s = s0.sub(&q.mul(&s1, field), field);
            let t = t0.sub(&q.mul(&t1, field), field);
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s);
            (t0, t1) = (t1, t);
        }
        let lead_inv = field.inv(r0.lead())?;
        let g = r0.scale(lead_inv, field);
        let mut s = s0.scale(lead_inv, field);
        let mut t = t0.scale(lead_inv, field);
        if !self.is_zero() && !other.is_zero() {
            let other_red = other.divmod(&g, field)?.0;
            let self_red = self.divmod(&g, field)?.0;
            let (k, s_red) = s.divmod(&other_red, field)?;
            s = s_red;
            t = t.add(&k.mul(&self_red, field), field);
        }
        Ok((g, s, t))
    }

    /// Evaluates at a field element by Horner's rule.
    pub fn eval(&self, x: FieldElement, field: &Field) -> FieldElement {
        self.coeffs.iter().rev().fold(FieldElement::ZERO, |acc, &c| field.add(field.mul(acc, x), c))
    }

    /// `x^{deg} · self(1/x)`: coefficient sequence reversed.
    pub fn reciprocal(&self) -> Poly {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Poly::new(coeffs)
    }

    /// Irreducibility over `F_q`: `gcd(self, x^{q^k} − x) = 1` for all `k ≤ deg/2`.
    pub fn is_irreducible(&self, field: &Field) -> bool {
        let Some(d) = self.degree() else { return false };
        if d == 0 {
            return false;
        }
        let f = self.monic(field);
        let x = Poly::x();
        let mut h = x.rem(&f, field).expect("nonzero modulus");
        for _ in 1..=d / 2 {
            h = h.pow_mod(field.q() as u64, &f, field).expect("nonzero modulus");
            if !f.gcd(&h.sub(&x, field), field).is_one() {
                return false;
            }
        }
        true
    }

    /// Canonical ordering: by degree, then as a base-`q` integer with the
    /// leading coefficient most significant.
    pub fn canonical_cmp(&self, other: &Poly) -> Ordering {
        self.coeffs.len().cmp(&other.coeffs.len()).then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl fmt::Display for Poly {
    /// Descending terms `c*x^k` with coefficients printed by encoding, e.g. `x^3 + x + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let var = match k {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{k}"),
            };
            match (c.enc(), k) {
                (_, 0) => write!(f, "{c}")?,
                (1, _) => write!(f, "{var}")?,
                _ => write!(f, "{c}*{var}")?,
            }
        }
        Ok(())
    }
}
