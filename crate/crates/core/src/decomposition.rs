//! CRT data for `R[x]/⟨x^n − (δ + αu²)⟩`.
//!
//! For `x^n − δ = f_1 ⋯ f_r` and `F_j = (x^n − δ)/f_j`, a Bézout pair
//! `g_j F_j² + h_j f_j² = 1` gives the idempotents `ε_j = g_j F_j² mod (x^n − δ)²`
//! of `𝒜`. Writing `ε_j = e_{j,0} + α⁻¹(x^n − δ)e_{j,1}` with `deg e_{j,i} < n`,
//! their images in the ambient are `e_j = e_{j,0} + u² e_{j,1}`. The unit
//! `ω_j = α⁻¹F_j mod f_j²` has inverse `αg_jF_j mod f_j²`.
//!
//! `τ` records how `a(x) ↦ a(x⁻¹)` permutes the idempotents.

use serde::{Deserialize, Serialize};

use crate::chainring::{constacyclic_lambda, AmbientElement, LocalRing, RingElement};
use crate::error::{Error, Result};
use crate::fieldpoly::{factor_xn_minus_delta_seeded, Field, FieldElement, Poly, DEFAULT_SEED};

/// Everything computed for one irreducible factor `f_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorRecord {
    pub f: Poly,
    pub degree: usize,
    /// `F_j = (x^n − δ)/f_j`
    pub cofactor: Poly,
    /// Bézout witnesses: `g·F_j² + h·f_j² = 1`.
    pub g: Poly,
    pub h: Poly,
    /// `ε_j` as a representative of degree `< 2n`.
    pub eps: Poly,
    /// `ε_j = e0 + α⁻¹(x^n − δ)·e1`
    pub e0: Poly,
    pub e1: Poly,
    /// `e_j = e0 + u²·e1` in the ambient.
    pub e: AmbientElement,
    pub omega: Poly,
    pub omega_inv: Poly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub field: Field,
    pub n: usize,
    pub delta: FieldElement,
    pub alpha: FieldElement,
    pub factors: Vec<FactorRecord>,
    /// `τ(j)` (0-based): `e_j(x⁻¹) = e_{τ(j)}(x)`. When `λ⁻¹ ≠ λ`, indices
    /// refer to the decomposition of the dual ambient (see [`compute_tau`]).
    pub tau: Vec<usize>,
    /// Number of `τ`-fixed indices; `None` when `τ` is not an involution.
    pub rho: Option<usize>,
    /// Number of swapped pairs; `None` when `τ` is not an involution.
    pub eps_pairs: Option<usize>,
    /// Whether factors are in the fixed / representative / partner block order.
    pub arranged: bool,
}

impl Decomposition {
    pub fn r(&self) -> usize {
        self.factors.len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.degree).collect()
    }

    /// `λ = δ + αu²`
    pub fn lambda(&self) -> RingElement {
        constacyclic_lambda(self.delta, self.alpha)
    }

    /// `λ⁻¹ = δ⁻¹ − αδ⁻²u²`
    pub fn dual_lambda(&self) -> RingElement {
        self.lambda().inv(&self.field).expect("δ ≠ 0 makes λ a unit")
    }

    pub fn is_self_reciprocal_ambient(&self) -> bool {
        self.lambda() == self.dual_lambda()
    }

    pub fn idempotents(&self) -> impl Iterator<Item = &AmbientElement> {
        self.factors.iter().map(|f| &f.e)
    }

    /// `𝒦_j + v𝒦_j` for factor `j`.
    pub fn local_ring(&self, j: usize) -> Result<LocalRing> {
        let rec = self.factors.get(j).ok_or_else(|| Error::InvalidIndex(format!("no factor {j}")))?;
        LocalRing::new(&self.field, j, rec.f.clone(), rec.omega.clone())
    }

    /// Re-checks every algebraic identity the decomposition is supposed to satisfy.
    pub fn verify(&self) -> Result<()> {
        let fd = &self.field;
        let n = self.n;
        let fail = |what: String| Err(Error::InternalError(what));
        let xn_delta = Poly::xn_minus(fd, n, self.delta);
        let modulus = xn_delta.mul(&xn_delta, fd);
        let lambda = self.lambda();

        let product = self.factors.iter().fold(Poly::one(), |acc, r| acc.mul(&r.f, fd));
        if product != xn_delta {
            return fail("product of factors is not x^n − δ".into());
        }
        let mut eps_sum = Poly::zero();
        let mut e_sum = AmbientElement::zero(n, lambda)?;
        for (j, rec) in self.factors.iter().enumerate() {
            let f_sq = rec.f.mul(&rec.f, fd);
            let cof_sq = rec.cofactor.mul(&rec.cofactor, fd);
            if rec.cofactor.mul(&rec.f, fd) != xn_delta {
                return fail(format!("F_{j} · f_{j} ≠ x^n − δ"));
            }
            if !rec.g.mul(&cof_sq, fd).add(&rec.h.mul(&f_sq, fd), fd).is_one() {
                return fail(format!("Bézout identity fails for factor {j}"));
            }
            if rec.eps.mul(&rec.eps, fd).rem(&modulus, fd)? != rec.eps {
                return fail(format!("ε_{j} is not idempotent"));
            }
            let alpha_inv = fd.inv(self.alpha)?;
            let resplit = rec.e0.add(&xn_delta.scale(alpha_inv, fd).mul(&rec.e1, fd), fd);
            if resplit != rec.eps {
                return fail(format!("split of ε_{j} does not recompose"));
            }
            if !rec.omega.mul(&rec.omega_inv, fd).rem(&f_sq, fd)?.is_one() {
                return fail(format!("ω_{j} · ω_{j}⁻¹ ≠ 1 mod f_{j}²"));
            }
            let lhs = xn_delta.scale(alpha_inv, fd).rem(&f_sq, fd)?;
            if lhs != rec.omega.mul(&rec.f, fd).rem(&f_sq, fd)? {
                return fail(format!("α⁻¹(x^n − δ) ≠ ω_{j} f_{j} mod f_{j}²"));
            }
            if rec.e.mul(&rec.e, fd)? != rec.e {
                return fail(format!("e_{j} is not idempotent"));
            }
            for (l, other) in self.factors.iter().enumerate().skip(j + 1) {
                if !rec.eps.mul(&other.eps, fd).rem(&modulus, fd)?.is_zero() {
                    return fail(format!("ε_{j} ε_{l} ≠ 0"));
                }
                if !rec.e.mul(&other.e, fd)?.is_zero() {
                    return fail(format!("e_{j} e_{l} ≠ 0"));
                }
            }
            eps_sum = eps_sum.add(&rec.eps, fd);
            e_sum = e_sum.add(&rec.e, fd)?;
        }
        if !eps_sum.rem(&modulus, fd)?.is_one() {
            return fail("Σ ε_j ≠ 1".into());
        }
        if e_sum != AmbientElement::one(n, lambda)? {
            return fail("Σ e_j ≠ 1".into());
        }
        if self.tau.len() != self.r() {
            return fail("τ has the wrong length".into());
        }
        if let (Some(rho), Some(eps)) = (self.rho, self.eps_pairs) {
            if rho + 2 * eps != self.r() {
                return fail("ρ + 2ε ≠ r".into());
            }
        }
        if self.tau != compute_tau(self)? {
            return fail("stored τ disagrees with recomputation".into());
        }
        Ok(())
    }
}

/// Full decomposition with the default factorization seed.
pub fn compute_decomposition(
    field: &Field,
    n: usize,
    delta: FieldElement,
    alpha: FieldElement,
) -> Result<Decomposition> {
    compute_decomposition_seeded(field, n, delta, alpha, DEFAULT_SEED)
}

pub fn compute_decomposition_seeded(
    field: &Field,
    n: usize,
    delta: FieldElement,
    alpha: FieldElement,
    seed: u64,
) -> Result<Decomposition> {
    let mut d = decompose_without_tau(field, n, delta, alpha, seed)?;
    d.tau = compute_tau(&d)?;
    (d.rho, d.eps_pairs) = involution_counts(&d.tau);
    Ok(d)
}

fn decompose_without_tau(
    field: &Field,
    n: usize,
    delta: FieldElement,
    alpha: FieldElement,
    seed: u64,
) -> Result<Decomposition> {
    field.elem(alpha.enc())?;
    if alpha.is_zero() {
        return Err(Error::InvalidInput("α must be a nonzero element".into()));
    }
    let factorization = factor_xn_minus_delta_seeded(field, n, delta, seed)?;
    let fd = field;
    let xn_delta = Poly::xn_minus(fd, n, delta);
    let modulus = xn_delta.mul(&xn_delta, fd);
    let alpha_inv = fd.inv(alpha)?;
    let v_sq = xn_delta.scale(alpha_inv, fd);
    let lambda = constacyclic_lambda(delta, alpha);

    let factors = factorization
        .factors
        .into_iter()
        .map(|factor| {
            let f = factor.poly;
            let cofactor = xn_delta.divmod(&f, fd)?.0;
            let f_sq = f.mul(&f, fd);
            let cof_sq = cofactor.mul(&cofactor, fd);
            let (gcd, g, h) = cof_sq.ext_gcd(&f_sq, fd)?;
            if !gcd.is_one() {
                return Err(Error::InternalError(format!("F² and f² not coprime for f = {f}")));
            }
            let eps = g.mul(&cof_sq, fd).rem(&modulus, fd)?;
            let (e1, e0) = eps.divmod(&v_sq, fd)?;
            let coeffs = (0..n)
                .map(|i| RingElement([e0.coeff(i), FieldElement::ZERO, e1.coeff(i), FieldElement::ZERO]))
                .collect();
            let e = AmbientElement::new(coeffs, lambda)?;
            let omega = cofactor.scale(alpha_inv, fd).rem(&f_sq, fd)?;
            let omega_inv = g.mul(&cofactor, fd).scale(alpha, fd).rem(&f_sq, fd)?;
            Ok(FactorRecord { degree: factor.degree, f, cofactor, g, h, eps, e0, e1, e, omega, omega_inv })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(Decomposition {
        field: field.clone(),
        n,
        delta,
        alpha,
        factors,
        tau: Vec::new(),
        rho: None,
        eps_pairs: None,
        arranged: false,
    })
}

/// `τ` by matching each `e_j(x⁻¹)` against the idempotents of the ambient it
/// lands in. When `λ⁻¹ = λ` that is the same ambient and `τ` is a permutation
/// of the factor indices; otherwise the targets are the idempotents of the
/// decomposition for `λ⁻¹ = δ⁻¹ + (−αδ⁻²)u²`.
pub fn compute_tau(d: &Decomposition) -> Result<Vec<usize>> {
    let fd = &d.field;
    let images = d.factors.iter().map(|rec| rec.e.tau(fd)).collect::<Result<Vec<_>>>()?;
    let dual;
    let targets: Vec<&AmbientElement> = if d.is_self_reciprocal_ambient() {
        d.idempotents().collect()
    } else {
        let delta_inv = fd.inv(d.delta)?;
        let dual_alpha = fd.neg(fd.mul(d.alpha, fd.mul(delta_inv, delta_inv)));
        dual = decompose_without_tau(fd, d.n, delta_inv, dual_alpha, DEFAULT_SEED)?;
        dual.idempotents().collect()
    };
    images
        .iter()
        .enumerate()
        .map(|(j, img)| {
            targets
                .iter()
                .position(|t| *t == img)
                .ok_or_else(|| Error::InternalError(format!("e_{j}(x⁻¹) matches no idempotent")))
        })
        .collect()
}

/// `(ρ, ε)` for an involution, `(None, None)` otherwise.
fn involution_counts(tau: &[usize]) -> (Option<usize>, Option<usize>) {
    if tau.iter().enumerate().any(|(j, &t)| tau.get(t) != Some(&j)) {
        return (None, None);
    }
    let rho = tau.iter().enumerate().filter(|(j, &t)| *j == t).count();
    (Some(rho), Some((tau.len() - rho) / 2))
}

/// Reorders factors so that `τ`-fixed indices come first, then one
/// representative of each swapped pair, then the partners in matching order:
/// `τ(j) = j` for `j < ρ` and `τ(ρ + i) = ρ + ε + i`.
pub fn canonical_rearrange(d: &Decomposition) -> Result<Decomposition> {
    let (Some(rho), Some(eps)) = (d.rho, d.eps_pairs) else {
        return Err(Error::InvalidInput("τ is not an involution on the factor indices".into()));
    };
    let fixed = (0..d.r()).filter(|&j| d.tau[j] == j);
    let reps: Vec<usize> = (0..d.r()).filter(|&j| d.tau[j] > j).collect();
    let partners: Vec<usize> = reps.iter().map(|&j| d.tau[j]).collect();
    let order: Vec<usize> = fixed.chain(reps).chain(partners).collect();

    let factors = order.iter().map(|&j| d.factors[j].clone()).collect();
    let tau = (0..d.r())
        .map(|k| match k {
            k if k < rho => k,
            k if k < rho + eps => k + eps,
            k => k - eps,
        })
        .collect();
    Ok(Decomposition { factors, tau, arranged: true, ..d.clone() })
}

/// Cross-check for `τ`: the monic reciprocal `x^{d_j} f_j(1/x)` of `f_j`
/// located among the factors of `x^n − δ⁻¹` (canonical order).
pub fn tau_by_reciprocals(d: &Decomposition) -> Result<Vec<usize>> {
    let fd = &d.field;
    let delta_inv = fd.inv(d.delta)?;
    let dual = factor_xn_minus_delta_seeded(fd, d.n, delta_inv, DEFAULT_SEED)?;
    d.factors
        .iter()
        .map(|rec| {
            let recip = rec.f.reciprocal().monic(fd);
            dual.polys()
                .position(|g| *g == recip)
                .ok_or_else(|| Error::InternalError(format!("reciprocal of {} is not a factor", rec.f)))
        })
        .collect()
}
