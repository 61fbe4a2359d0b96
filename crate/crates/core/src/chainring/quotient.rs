//! `𝒜 + v𝒜` with `𝒜 = F_q[x]/⟨(x^n − δ)²⟩` and `v² = α⁻¹(x^n − δ)`, and the
//! isomorphism `Ψ` onto `R[x]/⟨x^n − (δ + αu²)⟩`.
//!
//! `Ψ` splits each coordinate `ξ_i` by division by `α⁻¹(x^n − δ)`:
//! `ξ₀ = a₀ + α⁻¹(x^n − δ)a₂`, `ξ₁ = a₁ + α⁻¹(x^n − δ)a₃` with `deg a_k < n`,
//! and sends `ξ₀ + vξ₁` to `Σ_i (a_{0,i} + u a_{1,i} + u² a_{2,i} + u³ a_{3,i}) x^i`.

use serde::{Deserialize, Serialize};

use super::ambient::AmbientElement;
use super::ring::RingElement;
use crate::error::{Error, Result};
use crate::fieldpoly::{Field, FieldElement, Poly};

/// `ξ₀ + v·ξ₁` with both coordinates reduced mod `(x^n − δ)²`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BigQuotientElement {
    pub n: usize,
    pub delta: FieldElement,
    pub alpha: FieldElement,
    pub xi0: Poly,
    pub xi1: Poly,
}

/// `x^n − δ`
fn xn_minus_delta(field: &Field, n: usize, delta: FieldElement) -> Poly {
    Poly::xn_minus(field, n, delta)
}

/// `(x^n − δ)²`
fn modulus(field: &Field, n: usize, delta: FieldElement) -> Poly {
    let b = xn_minus_delta(field, n, delta);
    b.mul(&b, field)
}

/// `α⁻¹(x^n − δ)`, the value of `v²`.
pub(crate) fn v_squared(field: &Field, n: usize, delta: FieldElement, alpha: FieldElement) -> Result<Poly> {
    Ok(xn_minus_delta(field, n, delta).scale(field.inv(alpha)?, field))
}

/// `λ = δ + αu²`
pub fn constacyclic_lambda(delta: FieldElement, alpha: FieldElement) -> RingElement {
    RingElement([delta, FieldElement::ZERO, alpha, FieldElement::ZERO])
}

impl BigQuotientElement {
    pub fn new(
        field: &Field,
        n: usize,
        delta: FieldElement,
        alpha: FieldElement,
        xi0: Poly,
        xi1: Poly,
    ) -> Result<Self> {
        if delta.is_zero() || alpha.is_zero() {
            return Err(Error::InvalidInput("δ and α must be nonzero".into()));
        }
        if n == 0 {
            return Err(Error::InvalidInput("length n must be positive".into()));
        }
        let m = modulus(field, n, delta);
        Ok(BigQuotientElement { n, delta, alpha, xi0: xi0.rem(&m, field)?, xi1: xi1.rem(&m, field)? })
    }

    /// The element `ξ₀` (no `v` part).
    pub fn from_poly(field: &Field, n: usize, delta: FieldElement, alpha: FieldElement, xi0: Poly) -> Result<Self> {
        Self::new(field, n, delta, alpha, xi0, Poly::zero())
    }

    pub fn v(field: &Field, n: usize, delta: FieldElement, alpha: FieldElement) -> Result<Self> {
        Self::new(field, n, delta, alpha, Poly::zero(), Poly::one())
    }

    fn check(&self, other: &Self) -> Result<()> {
        if (self.n, self.delta, self.alpha) != (other.n, other.delta, other.alpha) {
            return Err(Error::AmbientMismatch("A + vA with different (n, δ, α)".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self, field: &Field) -> Result<Self> {
        self.check(other)?;
        Ok(BigQuotientElement {
            xi0: self.xi0.add(&other.xi0, field),
            xi1: self.xi1.add(&other.xi1, field),
            ..self.clone()
        })
    }

    /// `(ξ₀ + vξ₁)(η₀ + vη₁) = (ξ₀η₀ + α⁻¹(x^n − δ)ξ₁η₁) + v(ξ₀η₁ + ξ₁η₀)`
    pub fn mul(&self, other: &Self, field: &Field) -> Result<Self> {
        self.check(other)?;
        let m = modulus(field, self.n, self.delta);
        let vv = v_squared(field, self.n, self.delta, self.alpha)?;
        let c0 = self.xi0.mul(&other.xi0, field).add(&vv.mul(&self.xi1.mul(&other.xi1, field), field), field);
        let c1 = self.xi0.mul(&other.xi1, field).add(&self.xi1.mul(&other.xi0, field), field);
        Ok(BigQuotientElement { xi0: c0.rem(&m, field)?, xi1: c1.rem(&m, field)?, ..self.clone() })
    }
}

/// `Ψ`: `𝒜 + v𝒜 → R[x]/⟨x^n − (δ + αu²)⟩`.
pub fn psi_map(b: &BigQuotientElement, field: &Field) -> Result<AmbientElement> {
    let n = b.n;
    let vv = v_squared(field, n, b.delta, b.alpha)?;
    let (a2, a0) = b.xi0.divmod(&vv, field)?;
    let (a3, a1) = b.xi1.divmod(&vv, field)?;
    let coeffs = (0..n).map(|i| RingElement([a0.coeff(i), a1.coeff(i), a2.coeff(i), a3.coeff(i)])).collect();
    AmbientElement::new(coeffs, constacyclic_lambda(b.delta, b.alpha))
}

/// `Ψ⁻¹`. The ambient's `λ` must have the form `δ + αu²` with `δ, α ≠ 0`.
pub fn psi_inverse(a: &AmbientElement, field: &Field) -> Result<BigQuotientElement> {
    let [delta, l1, alpha, l3] = a.lambda().0;
    if !l1.is_zero() || !l3.is_zero() || alpha.is_zero() || delta.is_zero() {
        return Err(Error::InvalidInput(format!("λ = {} is not of the form δ + αu² with α ≠ 0", a.lambda())));
    }
    let n = a.n();
    let vv = v_squared(field, n, delta, alpha)?;
    let coord = |k: usize| Poly::new(a.coeffs().iter().map(|c| c.0[k]).collect());
    let xi0 = coord(0).add(&vv.mul(&coord(2), field), field);
    let xi1 = coord(1).add(&vv.mul(&coord(3), field), field);
    BigQuotientElement::new(field, n, delta, alpha, xi0, xi1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_element(
        field: &Field,
        n: usize,
        delta: FieldElement,
        alpha: FieldElement,
        rng: &mut ChaCha8Rng,
    ) -> BigQuotientElement {
        let mut poly = || Poly::new((0..2 * n).map(|_| field.random(rng)).collect());
        let (xi0, xi1) = (poly(), poly());
        BigQuotientElement::new(field, n, delta, alpha, xi0, xi1).unwrap()
    }

    #[test]
    fn images_of_basis_elements() {
        let f = Field::gf(3, 1).unwrap();
        let (n, delta, alpha) = (4, f.elem(2).unwrap(), f.elem(1).unwrap());
        let lam = constacyclic_lambda(delta, alpha);
        for i in 0..n {
            let xi = BigQuotientElement::from_poly(&f, n, delta, alpha, Poly::monomial(f.one(), i)).unwrap();
            assert_eq!(psi_map(&xi, &f).unwrap(), AmbientElement::x_pow(i, n, lam, &f).unwrap());
        }
        let v = BigQuotientElement::v(&f, n, delta, alpha).unwrap();
        assert_eq!(psi_map(&v, &f).unwrap(), AmbientElement::constant(RingElement::u_pow(1), n, lam).unwrap());
        let xn = BigQuotientElement::from_poly(&f, n, delta, alpha, Poly::monomial(f.one(), n)).unwrap();
        assert_eq!(psi_map(&xn, &f).unwrap(), AmbientElement::constant(lam, n, lam).unwrap());
    }

    #[test]
    fn inverse_images() {
        let f = Field::gf(2, 1).unwrap();
        let (n, one) = (7, f.one());
        let lam = constacyclic_lambda(one, one);
        let u = AmbientElement::constant(RingElement::u_pow(1), n, lam).unwrap();
        assert_eq!(psi_inverse(&u, &f).unwrap(), BigQuotientElement::v(&f, n, one, one).unwrap());
        let l = AmbientElement::constant(lam, n, lam).unwrap();
        assert_eq!(psi_inverse(&l, &f).unwrap().xi0, Poly::monomial(one, n));
        let bad = AmbientElement::one(n, RingElement::from_encs(&f, [1, 1, 0, 0]).unwrap()).unwrap();
        assert!(psi_inverse(&bad, &f).is_err());
    }

    #[test]
    fn psi_is_a_ring_isomorphism_on_samples() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for (p, m, n) in [(2, 1, 7), (3, 1, 4), (2, 2, 3), (2, 3, 5), (5, 1, 6)] {
            let f = Field::gf(p, m).unwrap();
            for _ in 0..20 {
                let delta = f.random_nonzero(&mut rng);
                let alpha = f.random_nonzero(&mut rng);
                let a = random_element(&f, n, delta, alpha, &mut rng);
                let b = random_element(&f, n, delta, alpha, &mut rng);
                let (pa, pb) = (psi_map(&a, &f).unwrap(), psi_map(&b, &f).unwrap());
                assert_eq!(psi_map(&a.add(&b, &f).unwrap(), &f).unwrap(), pa.add(&pb, &f).unwrap());
                assert_eq!(psi_map(&a.mul(&b, &f).unwrap(), &f).unwrap(), pa.mul(&pb, &f).unwrap());
                assert_eq!(psi_inverse(&pa, &f).unwrap(), a);
                let amb = AmbientElement::random(&f, n, constacyclic_lambda(delta, alpha), &mut rng).unwrap();
                assert_eq!(psi_map(&psi_inverse(&amb, &f).unwrap(), &f).unwrap(), amb);
            }
        }
    }
}
