//! The chain ring `R = F_q[u]/⟨u⁴⟩`.

use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fieldpoly::{Field, FieldElement};

/// `c[0] + c[1]·u + c[2]·u² + c[3]·u³`. Serialized as `[c0, c1, c2, c3]` encodings.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RingElement(pub [FieldElement; 4]);

impl RingElement {
    pub const ZERO: RingElement = RingElement([FieldElement::ZERO; 4]);
    pub const ONE: RingElement =
        RingElement([FieldElement::ONE, FieldElement::ZERO, FieldElement::ZERO, FieldElement::ZERO]);

    pub fn from_field(c: FieldElement) -> Self {
        let mut out = Self::ZERO;
        out.0[0] = c;
        out
    }

    /// `c·u^k`; zero for `k ≥ 4`.
    pub fn monomial(c: FieldElement, k: usize) -> Self {
        let mut out = Self::ZERO;
        if k < 4 {
            out.0[k] = c;
        }
        out
    }

    /// `u^k`; zero for `k ≥ 4`.
    pub fn u_pow(k: usize) -> Self {
        Self::monomial(FieldElement::ONE, k)
    }

    pub fn from_encs(field: &Field, encs: [u32; 4]) -> Result<Self> {
        let mut out = Self::ZERO;
        for (slot, e) in out.0.iter_mut().zip(encs) {
            *slot = field.elem(e)?;
        }
        Ok(out)
    }

    pub fn coords(&self) -> &[FieldElement; 4] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    /// Units of a chain ring are exactly the elements outside the maximal ideal `⟨u⟩`.
    pub fn is_unit(&self) -> bool {
        !self.0[0].is_zero()
    }

    pub fn random<R: Rng + ?Sized>(field: &Field, rng: &mut R) -> Self {
        RingElement(std::array::from_fn(|_| field.random(rng)))
    }

    pub fn add(&self, other: &Self, field: &Field) -> Self {
        RingElement(std::array::from_fn(|k| field.add(self.0[k], other.0[k])))
    }

    pub fn sub(&self, other: &Self, field: &Field) -> Self {
        RingElement(std::array::from_fn(|k| field.sub(self.0[k], other.0[k])))
    }

    pub fn neg(&self, field: &Field) -> Self {
        RingElement(std::array::from_fn(|k| field.neg(self.0[k])))
    }

    pub fn scale(&self, c: FieldElement, field: &Field) -> Self {
        RingElement(std::array::from_fn(|k| field.mul(self.0[k], c)))
    }

    /// Truncated convolution of the `u`-coordinates.
    pub fn mul(&self, other: &Self, field: &Field) -> Self {
        let mut out = Self::ZERO;
        for i in 0..4 {
            if self.0[i].is_zero() {
                continue;
            }
            for j in 0..4 - i {
                out.0[i + j] = field.add(out.0[i + j], field.mul(self.0[i], other.0[j]));
            }
        }
        out
    }

    /// Multiplication by `u^k`.
    pub fn shift_u(&self, k: usize) -> Self {
        let mut out = Self::ZERO;
        for i in 0..4usize.saturating_sub(k) {
            out.0[i + k] = self.0[i];
        }
        out
    }

    /// Inverse of a unit: with `a = a0(1 + w)`, `w ∈ ⟨u⟩`, the geometric
    /// series `1 − w + w² − w³` terminates because `w⁴ = 0`.
    pub fn inv(&self, field: &Field) -> Result<Self> {
        if !self.is_unit() {
            return Err(Error::NotAUnit);
        }
        let a0_inv = field.inv(self.0[0])?;
        let normalized = self.scale(a0_inv, field);
        let w = normalized.sub(&Self::ONE, field);
        let minus_w = w.neg(field);
        let mut term = Self::ONE;
        let mut acc = Self::ONE;
        for _ in 1..4 {
            term = term.mul(&minus_w, field);
            acc = acc.add(&term, field);
        }
        Ok(acc.scale(a0_inv, field))
    }

    /// Number of nonzero `u`-coordinates.
    pub(crate) fn term_count(&self) -> usize {
        self.0.iter().filter(|c| !c.is_zero()).count()
    }
}

impl fmt::Display for RingElement {
    /// Descending `c*u^k` terms, e.g. `u^2 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = (0..4)
            .rev()
            .filter(|&k| !self.0[k].is_zero())
            .map(|k| {
                let c = self.0[k];
                let var = match k {
                    0 => String::new(),
                    1 => "u".into(),
                    _ => format!("u^{k}"),
                };
                match (c.enc(), k) {
                    (_, 0) => c.to_string(),
                    (1, _) => var,
                    _ => format!("{c}*{var}"),
                }
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn r(field: &Field, encs: [u32; 4]) -> RingElement {
        RingElement::from_encs(field, encs).unwrap()
    }

    #[test]
    fn u_is_nilpotent_of_index_four() {
        let f = Field::gf(2, 1).unwrap();
        let u2 = RingElement::u_pow(2);
        assert!(u2.mul(&u2, &f).is_zero());
        assert!(!RingElement::u_pow(1).mul(&u2, &f).is_zero());
    }

    #[test]
    fn one_plus_u_squared_is_self_inverse_in_char_two() {
        let f = Field::gf(2, 1).unwrap();
        let a = r(&f, [1, 0, 1, 0]);
        assert_eq!(a.mul(&a, &f), RingElement::ONE);
        assert_eq!(a.inv(&f).unwrap(), a);
        let f8 = Field::gf(2, 3).unwrap();
        for alpha in f8.nonzero_elements() {
            let lam = RingElement([f8.one(), f8.zero(), alpha, f8.zero()]);
            assert_eq!(lam.inv(&f8).unwrap(), lam);
        }
    }

    #[test]
    fn geometric_series_inverse_over_f3() {
        let f = Field::gf(3, 1).unwrap();
        // (1 + u)(1 − u + u² − u³) = 1
        let a = r(&f, [1, 1, 0, 0]);
        let b = r(&f, [1, 2, 1, 2]);
        assert_eq!(a.mul(&b, &f), RingElement::ONE);
        assert_eq!(a.inv(&f).unwrap(), b);
    }

    #[test]
    fn inverse_of_delta_plus_alpha_u_squared() {
        let f = Field::gf(3, 1).unwrap();
        // (2 + u²)^{-1} = 2 + 2u²
        assert_eq!(r(&f, [2, 0, 1, 0]).inv(&f).unwrap(), r(&f, [2, 0, 2, 0]));
        assert_eq!(RingElement::ONE.inv(&f).unwrap(), RingElement::ONE);
        // closed form δ⁻¹ − αδ⁻²u²
        let f9 = Field::gf(3, 2).unwrap();
        for delta in f9.nonzero_elements() {
            for alpha in f9.nonzero_elements() {
                let lam = RingElement([delta, f9.zero(), alpha, f9.zero()]);
                let di = f9.inv(delta).unwrap();
                let expected = RingElement([di, f9.zero(), f9.neg(f9.mul(alpha, f9.mul(di, di))), f9.zero()]);
                assert_eq!(lam.inv(&f9).unwrap(), expected);
            }
        }
    }

    #[test]
    fn non_units_are_rejected() {
        let f = Field::gf(2, 1).unwrap();
        assert_eq!(RingElement::u_pow(1).inv(&f), Err(Error::NotAUnit));
        assert_eq!(RingElement::ZERO.inv(&f), Err(Error::NotAUnit));
    }

    #[test]
    fn commutative_ring_axioms() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for (p, m) in [(2, 1), (3, 1), (2, 2), (2, 3), (5, 1)] {
            let f = Field::gf(p, m).unwrap();
            for _ in 0..200 {
                let a = RingElement::random(&f, &mut rng);
                let b = RingElement::random(&f, &mut rng);
                let c = RingElement::random(&f, &mut rng);
                assert_eq!(a.mul(&b, &f), b.mul(&a, &f));
                assert_eq!(a.mul(&b, &f).mul(&c, &f), a.mul(&b.mul(&c, &f), &f));
                assert_eq!(a.mul(&b.add(&c, &f), &f), a.mul(&b, &f).add(&a.mul(&c, &f), &f));
                assert_eq!(a.shift_u(1), a.mul(&RingElement::u_pow(1), &f));
                if a.is_unit() {
                    assert_eq!(a.mul(&a.inv(&f).unwrap(), &f), RingElement::ONE);
                }
            }
        }
    }

    #[test]
    fn display_and_json() {
        let f = Field::gf(3, 1).unwrap();
        assert_eq!(r(&f, [1, 0, 1, 0]).to_string(), "u^2 + 1");
        assert_eq!(r(&f, [0, 2, 0, 1]).to_string(), "u^3 + 2*u");
        assert_eq!(serde_json::to_string(&r(&f, [1, 0, 2, 0])).unwrap(), "[1,0,2,0]");
    }
}
