//! Local components `𝒦_j + v𝒦_j`, `𝒦_j = F_q[x]/⟨f_j²⟩`, with `v² = ω_j f_j`.
//!
//! Every element has a unique `v`-expansion `t₀ + v t₁ + v² t₂ + v³ t₃` with
//! `deg t_k < d_j`; it is a unit iff `t₀ ≠ 0`, and `v` has nilpotency index 4.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fieldpoly::{Field, Poly};

/// Arithmetic context for one local component.
#[derive(Clone, Debug)]
pub struct LocalRing {
    field: Field,
    j: usize,
    f: Poly,
    f_sq: Poly,
    omega: Poly,
    omega_inv: Poly,
}

/// `a + v·b` with `a, b` reduced mod `f_j²`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalElement {
    pub j: usize,
    pub a: Poly,
    pub b: Poly,
}

impl LocalRing {
    /// `f` monic irreducible, `omega` a unit mod `f²`.
    pub fn new(field: &Field, j: usize, f: Poly, omega: Poly) -> Result<Self> {
        if f.degree().is_none_or(|d| d == 0) || !f.is_monic() {
            return Err(Error::InvalidInput("local modulus must be monic of positive degree".into()));
        }
        let f_sq = f.mul(&f, field);
        let omega = omega.rem(&f_sq, field)?;
        let (g, s, _) = omega.ext_gcd(&f_sq, field)?;
        if !g.is_one() {
            return Err(Error::NotAUnit);
        }
        let omega_inv = s.rem(&f_sq, field)?;
        Ok(LocalRing { field: field.clone(), j, f, f_sq, omega, omega_inv })
    }

    pub fn index(&self) -> usize {
        self.j
    }

    pub fn f(&self) -> &Poly {
        &self.f
    }

    pub fn omega(&self) -> &Poly {
        &self.omega
    }

    pub fn omega_inv(&self) -> &Poly {
        &self.omega_inv
    }

    pub fn degree(&self) -> usize {
        self.f.degree().expect("positive degree")
    }

    pub fn element(&self, a: Poly, b: Poly) -> Result<LocalElement> {
        Ok(LocalElement { j: self.j, a: a.rem(&self.f_sq, &self.field)?, b: b.rem(&self.f_sq, &self.field)? })
    }

    pub fn one(&self) -> LocalElement {
        LocalElement { j: self.j, a: Poly::one(), b: Poly::zero() }
    }

    pub fn v(&self) -> LocalElement {
        LocalElement { j: self.j, a: Poly::zero(), b: Poly::one() }
    }

    fn check(&self, e: &LocalElement) -> Result<()> {
        if e.j != self.j {
            return Err(Error::AmbientMismatch(format!("element of K_{} used in K_{}", e.j, self.j)));
        }
        Ok(())
    }

    pub fn add(&self, x: &LocalElement, y: &LocalElement) -> Result<LocalElement> {
        self.check(x)?;
        self.check(y)?;
        let fd = &self.field;
        Ok(LocalElement { j: self.j, a: x.a.add(&y.a, fd), b: x.b.add(&y.b, fd) })
    }

    /// `(a + vb)(c + vd) = (ac + ω f bd) + v(ad + bc)` mod `f²`.
    pub fn mul(&self, x: &LocalElement, y: &LocalElement) -> Result<LocalElement> {
        self.check(x)?;
        self.check(y)?;
        let fd = &self.field;
        let v_sq = self.omega.mul(&self.f, fd);
        let a = x.a.mul(&y.a, fd).add(&v_sq.mul(&x.b.mul(&y.b, fd), fd), fd);
        let b = x.a.mul(&y.b, fd).add(&x.b.mul(&y.a, fd), fd);
        self.element(a, b)
    }

    pub fn pow(&self, x: &LocalElement, k: usize) -> Result<LocalElement> {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, x)?;
        }
        Ok(acc)
    }

    /// `(t₀, t₁, t₂, t₃)` with `e = t₀ + v t₁ + v² t₂ + v³ t₃`, `deg t_k < d_j`.
    ///
    /// With `ξ_i = b_{i,0} + f b_{i,1}` (f-adic) and `f = v² ω⁻¹`, the `v²`
    /// digits are `h_i = ω⁻¹ b_{i,1} mod f`.
    pub fn v_expansion(&self, e: &LocalElement) -> Result<[Poly; 4]> {
        self.check(e)?;
        let fd = &self.field;
        let (b01, b00) = e.a.divmod(&self.f, fd)?;
        let (b11, b10) = e.b.divmod(&self.f, fd)?;
        let h0 = self.omega_inv.mul(&b01, fd).rem(&self.f, fd)?;
        let h1 = self.omega_inv.mul(&b11, fd).rem(&self.f, fd)?;
        Ok([b00, b10, h0, h1])
    }

    /// Inverse of [`Self::v_expansion`].
    pub fn recompose(&self, t: &[Poly; 4]) -> Result<LocalElement> {
        let fd = &self.field;
        let v_sq = self.omega.mul(&self.f, fd);
        let a = t[0].add(&v_sq.mul(&t[2], fd), fd);
        let b = t[1].add(&v_sq.mul(&t[3], fd), fd);
        self.element(a, b)
    }

    /// Unit iff the constant `v`-digit is nonzero.
    pub fn is_unit(&self, e: &LocalElement) -> Result<bool> {
        Ok(!self.v_expansion(e)?[0].is_zero())
    }

    /// Smallest `k` with `v^k = 0`.
    pub fn v_nilpotency_index(&self) -> Result<usize> {
        let v = self.v();
        let mut acc = self.one();
        for k in 1..=8 {
            acc = self.mul(&acc, &v)?;
            if acc.a.is_zero() && acc.b.is_zero() {
                return Ok(k);
            }
        }
        Err(Error::InternalError("v is not nilpotent".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// `K + vK` for `f = x^3 + x + 1` over F_2 with ω = F mod f², F = (x^7 + 1)/f.
    fn sample() -> (Field, LocalRing) {
        let fd = Field::gf(2, 1).unwrap();
        let f = Poly::from_encs(&fd, &[1, 1, 0, 1]).unwrap();
        let big = Poly::xn_minus(&fd, 7, fd.one()).divmod(&f, &fd).unwrap().0;
        let ring = LocalRing::new(&fd, 1, f, big).unwrap();
        (fd, ring)
    }

    #[test]
    fn expansion_of_powers_of_v_and_f() {
        let (fd, ring) = sample();
        let v2 = ring.pow(&ring.v(), 2).unwrap();
        assert_eq!(ring.v_expansion(&v2).unwrap(), [Poly::zero(), Poly::zero(), Poly::one(), Poly::zero()]);

        let f_elem = ring.element(ring.f().clone(), Poly::zero()).unwrap();
        let expected = ring.omega_inv().rem(ring.f(), &fd).unwrap();
        assert_eq!(ring.v_expansion(&f_elem).unwrap(), [Poly::zero(), Poly::zero(), expected, Poly::zero()]);

        let wf = ring.element(ring.omega().mul(ring.f(), &fd), Poly::zero()).unwrap();
        assert_eq!(ring.v_expansion(&wf).unwrap(), [Poly::zero(), Poly::zero(), Poly::one(), Poly::zero()]);
    }

    #[test]
    fn v_has_nilpotency_index_four() {
        let (_, ring) = sample();
        assert_eq!(ring.v_nilpotency_index().unwrap(), 4);
    }

    #[test]
    fn expansion_is_unique_and_recomposes() {
        let (fd, ring) = sample();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let d = ring.degree();
        for _ in 0..60 {
            let a = Poly::new((0..2 * d).map(|_| fd.random(&mut rng)).collect());
            let b = Poly::new((0..2 * d).map(|_| fd.random(&mut rng)).collect());
            let e = ring.element(a, b).unwrap();
            let t = ring.v_expansion(&e).unwrap();
            assert!(t.iter().all(|tk| tk.degree().is_none_or(|k| k < d)));
            assert_eq!(ring.recompose(&t).unwrap(), e);
            // unit criterion agrees with existence of an inverse
            let has_inverse = (0..1u32 << (4 * d)).any(|bits| {
                let digits: [Poly; 4] = std::array::from_fn(|k| {
                    Poly::new((0..d).map(|i| fd.elem((bits >> (k * d + i)) & 1).unwrap()).collect())
                });
                let cand = ring.recompose(&digits).unwrap();
                ring.mul(&e, &cand).unwrap() == ring.one()
            });
            assert_eq!(ring.is_unit(&e).unwrap(), has_inverse);
        }
    }

    #[test]
    fn rejects_non_unit_omega_and_foreign_elements() {
        let fd = Field::gf(2, 1).unwrap();
        let f = Poly::from_encs(&fd, &[1, 1]).unwrap();
        assert_eq!(LocalRing::new(&fd, 0, f.clone(), f.clone()).unwrap_err(), Error::NotAUnit);
        let (_, ring) = sample();
        let foreign = LocalElement { j: 9, a: Poly::one(), b: Poly::zero() };
        assert!(ring.mul(&ring.one(), &foreign).is_err());
    }
}
