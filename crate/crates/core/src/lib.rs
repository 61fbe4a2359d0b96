//! Constacyclic codes over the chain ring `R = F_q[u]/⟨u⁴⟩`.
//!
//! For `λ = δ + αu²` with `δ, α ∈ F_q^×` and `gcd(n, q) = 1`, every ideal of
//! `R[x]/⟨x^n − λ⟩` is `⟨Σ_j u^{l_j} e_j(x)⟩` for idempotents `e_j` attached
//! to the irreducible factors of `x^n − δ`. This crate computes the
//! factorization, the idempotents, all `5^r` codes, their duals and (for
//! `q = 2^m`, `δ = 1`) the self-dual codes, and checks all of it with an
//! independent linear-algebra [`oracle`].
//!
//! ```
//! use constacyclic::codes::self_dual_codes;
//! use constacyclic::decomposition::compute_decomposition;
//! use constacyclic::fieldpoly::Field;
//!
//! let f2 = Field::gf(2, 1).unwrap();
//! let d = compute_decomposition(&f2, 7, f2.one(), f2.one()).unwrap();
//! assert_eq!(d.r(), 3);
//! let codes: Vec<_> = self_dual_codes(&d).unwrap().collect();
//! assert_eq!(codes.len(), 5);
//! assert_eq!(codes[2].generator.to_string(), "u^2");
//! ```

pub mod chainring;
pub mod cli;
pub mod codes;
pub mod decomposition;
pub mod error;
pub mod fieldpoly;
pub mod oracle;

pub use error::{Error, Result};
