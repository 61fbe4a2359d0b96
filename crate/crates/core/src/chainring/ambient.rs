//! The ambient ring `R[x]/⟨x^n − λ⟩` for a unit `λ ∈ R`.
//!
//! `λ` travels with every element so that the constacyclic ambient and its
//! dual (`λ⁻¹`) are instances of one type; binary operations on elements of
//! different ambients fail with [`Error::AmbientMismatch`].

use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::ring::RingElement;
use crate::error::{Error, Result};
use crate::fieldpoly::Field;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AmbientElement {
    n: usize,
    lambda: RingElement,
    coeffs: Vec<RingElement>,
}

impl AmbientElement {
    /// Element with the given coefficients of `1, x, …, x^{n−1}`.
    pub fn new(coeffs: Vec<RingElement>, lambda: RingElement) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidInput("ambient length must be positive".into()));
        }
        if !lambda.is_unit() {
            return Err(Error::NotAUnit);
        }
        Ok(AmbientElement { n: coeffs.len(), lambda, coeffs })
    }

    pub fn zero(n: usize, lambda: RingElement) -> Result<Self> {
        Self::new(vec![RingElement::ZERO; n], lambda)
    }

    pub fn constant(c: RingElement, n: usize, lambda: RingElement) -> Result<Self> {
        let mut a = Self::zero(n, lambda)?;
        a.coeffs[0] = c;
        Ok(a)
    }

    pub fn one(n: usize, lambda: RingElement) -> Result<Self> {
        Self::constant(RingElement::ONE, n, lambda)
    }

    /// `x^k` reduced with `x^n = λ`.
    pub fn x_pow(k: usize, n: usize, lambda: RingElement, field: &Field) -> Result<Self> {
        let mut a = Self::zero(n, lambda)?;
        let mut c = RingElement::ONE;
        for _ in 0..k / n {
            c = c.mul(&lambda, field);
        }
        a.coeffs[k % n] = c;
        Ok(a)
    }

    pub fn random<R: Rng + ?Sized>(field: &Field, n: usize, lambda: RingElement, rng: &mut R) -> Result<Self> {
        Self::new((0..n).map(|_| RingElement::random(field, rng)).collect(), lambda)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> RingElement {
        self.lambda
    }

    pub fn coeffs(&self) -> &[RingElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> RingElement {
        self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(RingElement::is_zero)
    }

    pub fn same_ambient(&self, other: &Self) -> bool {
        self.n == other.n && self.lambda == other.lambda
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.same_ambient(other) {
            Ok(())
        } else {
            Err(Error::AmbientMismatch(format!(
                "R[x]/<x^{} - ({})> vs R[x]/<x^{} - ({})>",
                self.n, self.lambda, other.n, other.lambda
            )))
        }
    }

    pub fn add(&self, other: &Self, field: &Field) -> Result<Self> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.add(b, field)).collect();
        Ok(AmbientElement { coeffs, ..self.clone() })
    }

    pub fn sub(&self, other: &Self, field: &Field) -> Result<Self> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.sub(b, field)).collect();
        Ok(AmbientElement { coeffs, ..self.clone() })
    }

    pub fn scale(&self, c: &RingElement, field: &Field) -> Self {
        let coeffs = self.coeffs.iter().map(|a| a.mul(c, field)).collect();
        AmbientElement { coeffs, ..self.clone() }
    }

    /// Product with `x^n` folded back as `λ`.
    pub fn mul(&self, other: &Self, field: &Field) -> Result<Self> {
        self.check(other)?;
        let n = self.n;
        let mut low = vec![RingElement::ZERO; n];
        let mut high = vec![RingElement::ZERO; n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let prod = a.mul(b, field);
                let k = i + j;
                if k < n {
                    low[k] = low[k].add(&prod, field);
                } else {
                    high[k - n] = high[k - n].add(&prod, field);
                }
            }
        }
        let coeffs = low.iter().zip(&high).map(|(l, h)| l.add(&h.mul(&self.lambda, field), field)).collect();
        Ok(AmbientElement { coeffs, ..self.clone() })
    }

    /// Multiplication by `x`: `(c_0, …, c_{n−1}) ↦ (λc_{n−1}, c_0, …, c_{n−2})`.
    pub fn mul_x(&self, field: &Field) -> Self {
        let n = self.n;
        let mut coeffs = Vec::with_capacity(n);
        coeffs.push(self.coeffs[n - 1].mul(&self.lambda, field));
        coeffs.extend_from_slice(&self.coeffs[..n - 1]);
        AmbientElement { coeffs, ..self.clone() }
    }

    /// `a(x) ↦ a(x⁻¹) = λ·Σ a_i x^{n−i}` into `R[x]/⟨x^n − λ⁻¹⟩`.
    ///
    /// The `i = 0` term folds back with `x^n = λ⁻¹`, so constants are fixed.
    pub fn tau(&self, field: &Field) -> Result<Self> {
        let n = self.n;
        let lambda_inv = self.lambda.inv(field)?;
        let mut coeffs = vec![RingElement::ZERO; n];
        coeffs[0] = self.coeffs[0];
        for i in 1..n {
            coeffs[n - i] = self.coeffs[i].mul(&self.lambda, field);
        }
        Ok(AmbientElement { n, lambda: lambda_inv, coeffs })
    }
}

impl fmt::Display for AmbientElement {
    /// Descending powers of `x` with parenthesized multi-term coefficients,
    /// e.g. `x^6 + (u^2 + 1)*x^5 + u^2*x^3 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let var = match i {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{i}"),
            };
            if i == 0 {
                write!(f, "{c}")?;
            } else if *c == RingElement::ONE {
                write!(f, "{var}")?;
            } else if c.term_count() == 1 {
                write!(f, "{c}*{var}")?;
            } else {
                write!(f, "({c})*{var}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn lam(field: &Field, delta: u32, alpha: u32) -> RingElement {
        RingElement::from_encs(field, [delta, 0, alpha, 0]).unwrap()
    }

    #[test]
    fn x_times_x_to_n_minus_one_is_lambda() {
        let f = Field::gf(3, 1).unwrap();
        let l = lam(&f, 2, 1);
        let x = AmbientElement::x_pow(1, 5, l, &f).unwrap();
        let x4 = AmbientElement::x_pow(4, 5, l, &f).unwrap();
        assert_eq!(x.mul(&x4, &f).unwrap(), AmbientElement::constant(l, 5, l).unwrap());
        assert_eq!(AmbientElement::x_pow(5, 5, l, &f).unwrap(), AmbientElement::constant(l, 5, l).unwrap());
    }

    #[test]
    fn identity_and_mismatch() {
        let f = Field::gf(2, 1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let l = lam(&f, 1, 1);
        let a = AmbientElement::random(&f, 7, l, &mut rng).unwrap();
        assert_eq!(AmbientElement::one(7, l).unwrap().mul(&a, &f).unwrap(), a);
        let other = AmbientElement::one(7, RingElement::ONE).unwrap();
        assert!(matches!(a.mul(&other, &f), Err(Error::AmbientMismatch(_))));
        let shorter = AmbientElement::one(5, l).unwrap();
        assert!(matches!(a.add(&shorter, &f), Err(Error::AmbientMismatch(_))));
        assert_eq!(AmbientElement::zero(3, RingElement::u_pow(1)), Err(Error::NotAUnit));
    }

    #[test]
    fn ring_axioms_and_shift_consistency() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for (p, m, n) in [(2, 1, 7), (3, 1, 4), (2, 2, 5), (5, 1, 3)] {
            let f = Field::gf(p, m).unwrap();
            for _ in 0..30 {
                let l = RingElement([
                    f.random_nonzero(&mut rng),
                    f.random(&mut rng),
                    f.random(&mut rng),
                    f.random(&mut rng),
                ]);
                let a = AmbientElement::random(&f, n, l, &mut rng).unwrap();
                let b = AmbientElement::random(&f, n, l, &mut rng).unwrap();
                let c = AmbientElement::random(&f, n, l, &mut rng).unwrap();
                let ab = a.mul(&b, &f).unwrap();
                assert_eq!(ab, b.mul(&a, &f).unwrap());
                assert_eq!(ab.mul(&c, &f).unwrap(), a.mul(&b.mul(&c, &f).unwrap(), &f).unwrap());
                let left = a.mul(&b.add(&c, &f).unwrap(), &f).unwrap();
                let right = ab.add(&a.mul(&c, &f).unwrap(), &f).unwrap();
                assert_eq!(left, right);
                let x = AmbientElement::x_pow(1, n, l, &f).unwrap();
                assert_eq!(a.mul_x(&f), a.mul(&x, &f).unwrap());
            }
        }
    }

    #[test]
    fn display_matches_worked_example_style() {
        let f = Field::gf(2, 1).unwrap();
        let l = lam(&f, 1, 1);
        let one = RingElement::ONE;
        let u2_plus_1 = RingElement::from_encs(&f, [1, 0, 1, 0]).unwrap();
        let e2 = AmbientElement::new(
            vec![one, u2_plus_1, one, RingElement::ZERO, one, RingElement::ZERO, RingElement::ZERO],
            l,
        )
        .unwrap();
        assert_eq!(e2.to_string(), "x^4 + x^2 + (u^2 + 1)*x + 1");
        assert_eq!(AmbientElement::constant(RingElement::u_pow(2), 7, l).unwrap().to_string(), "u^2");
        assert_eq!(AmbientElement::zero(7, l).unwrap().to_string(), "0");
    }
}
