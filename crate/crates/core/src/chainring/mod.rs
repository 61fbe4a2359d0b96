//! The chain ring `R = F_q[u]/⟨u⁴⟩` and the rings built over it: the ambient
//! `R[x]/⟨x^n − λ⟩`, the quotient `𝒜 + v𝒜` with its isomorphism `Ψ`, and the
//! local components `𝒦_j + v𝒦_j`.

pub mod ambient;
pub mod local;
pub mod parse;
pub mod quotient;
pub mod ring;

pub use ambient::AmbientElement;
pub use local::{LocalElement, LocalRing};
pub use parse::{parse_ambient, parse_ring};
pub use quotient::{constacyclic_lambda, psi_inverse, psi_map, BigQuotientElement};
pub use ring::RingElement;
