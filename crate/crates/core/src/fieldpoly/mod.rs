//! Arithmetic in `F_q` and `F_q[x]`, and factorization of `x^n − δ`.

pub mod factor;
pub mod field;
pub mod poly;

pub use factor::{factor_xn_minus_delta, factor_xn_minus_delta_seeded, Factor, Factorization, DEFAULT_SEED};
pub use field::{Field, FieldElement, FieldSpec};
pub use poly::Poly;
