//! Enumeration of all `(δ + αu²)`-constacyclic codes of length `n` over `R`,
//! their duals, and (for `q = 2^m`, `δ = 1`) the self-dual ones.
//!
//! Code `𝒞_{(l_1,…,l_r)} = ⟨Σ_j u^{l_j} e_j(x)⟩` with `0 ≤ l_j ≤ 4` has
//! `q^{Σ (4 − l_j) d_j}` codewords. Its dual is `τ(⟨Σ_j u^{4 − l_j} e_j(x)⟩)`,
//! an ideal of `R[x]/⟨x^n − λ⁻¹⟩`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::chainring::{AmbientElement, RingElement};
use crate::decomposition::{compute_decomposition, Decomposition};
use crate::error::{Error, Result};

/// Exponents `(l_1, …, l_r)`, each in `0..=4`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CodeIndex(Vec<u8>);

impl CodeIndex {
    pub fn new(ls: Vec<u8>) -> Result<Self> {
        if let Some(bad) = ls.iter().find(|&&l| l > 4) {
            return Err(Error::InvalidIndex(format!("exponent {bad} outside 0..=4")));
        }
        Ok(CodeIndex(ls))
    }

    /// Checks the length against a decomposition.
    pub fn for_decomposition(ls: Vec<u8>, d: &Decomposition) -> Result<Self> {
        if ls.len() != d.r() {
            return Err(Error::InvalidIndex(format!("index has {} entries but r = {}", ls.len(), d.r())));
        }
        Self::new(ls)
    }

    /// The `rank`-th index of length `r` in lexicographic order.
    pub fn from_rank(mut rank: u128, r: usize) -> Self {
        let mut ls = vec![0u8; r];
        for slot in ls.iter_mut().rev() {
            *slot = (rank % 5) as u8;
            rank /= 5;
        }
        CodeIndex(ls)
    }

    pub fn ls(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(4 − l_1, …, 4 − l_r)`
    pub fn complement(&self) -> CodeIndex {
        CodeIndex(self.0.iter().map(|l| 4 - l).collect())
    }
}

impl fmt::Display for CodeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeRecord {
    pub index: CodeIndex,
    pub generator: AmbientElement,
    /// `log_q |𝒞|`
    pub log_q_size: usize,
    #[serde(rename = "lambda")]
    pub ambient_lambda: RingElement,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub self_dual: Option<bool>,
}

/// `5^r`, saturating.
pub fn code_count(r: usize) -> u128 {
    5u128.checked_pow(r as u32).unwrap_or(u128::MAX)
}

fn check_index(d: &Decomposition, idx: &CodeIndex) -> Result<()> {
    if idx.len() != d.r() {
        return Err(Error::InvalidIndex(format!("index has {} entries but r = {}", idx.len(), d.r())));
    }
    if idx.0.iter().any(|&l| l > 4) {
        return Err(Error::InvalidIndex(format!("{idx} has an exponent outside 0..=4")));
    }
    Ok(())
}

/// `Σ_j u^{l_j} e_j(x)`
fn generator_sum(d: &Decomposition, ls: &[u8]) -> Result<AmbientElement> {
    let fd = &d.field;
    d.factors.iter().zip(ls).try_fold(AmbientElement::zero(d.n, d.lambda())?, |acc, (rec, &l)| {
        acc.add(&rec.e.scale(&RingElement::u_pow(l as usize), fd), fd)
    })
}

/// Self-duality of an index when the classification applies (`q` even, `δ = 1`).
fn self_dual_flag(d: &Decomposition, idx: &CodeIndex) -> Option<bool> {
    if d.field.p() != 2 || d.delta.enc() != 1 {
        return None;
    }
    Some(d.tau.iter().enumerate().all(|(j, &t)| idx.0[t] == 4 - idx.0[j]))
}

pub fn build_code(d: &Decomposition, idx: &CodeIndex) -> Result<CodeRecord> {
    check_index(d, idx)?;
    let generator = generator_sum(d, &idx.0)?;
    let log_q_size = d.factors.iter().zip(&idx.0).map(|(rec, &l)| (4 - l as usize) * rec.degree).sum();
    Ok(CodeRecord {
        index: idx.clone(),
        generator,
        log_q_size,
        ambient_lambda: d.lambda(),
        self_dual: self_dual_flag(d, idx),
    })
}

/// The individual generators `u^{l_j} e_j(x)`; their ideal sum is the code.
pub fn component_generators(d: &Decomposition, idx: &CodeIndex) -> Result<Vec<AmbientElement>> {
    check_index(d, idx)?;
    Ok(d.factors.iter().zip(&idx.0).map(|(rec, &l)| rec.e.scale(&RingElement::u_pow(l as usize), &d.field)).collect())
}

/// Streams all `5^r` codes in lexicographic index order.
pub fn enumerate_codes(d: &Decomposition) -> CodeStream<'_> {
    enumerate_range(d, 0, None)
}

/// Streams codes with lexicographic rank in `offset..offset + limit`.
pub fn enumerate_range(d: &Decomposition, offset: u128, limit: Option<u128>) -> CodeStream<'_> {
    let total = code_count(d.r());
    let end = match limit {
        Some(l) => offset.saturating_add(l).min(total),
        None => total,
    };
    CodeStream { d, next: offset.min(end), end }
}

pub struct CodeStream<'a> {
    d: &'a Decomposition,
    next: u128,
    end: u128,
}

impl Iterator for CodeStream<'_> {
    type Item = CodeRecord;

    fn next(&mut self) -> Option<CodeRecord> {
        if self.next >= self.end {
            return None;
        }
        let idx = CodeIndex::from_rank(self.next, self.d.r());
        self.next += 1;
        Some(build_code(self.d, &idx).expect("ranks produce valid indices"))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = usize::try_from(self.end - self.next).unwrap_or(usize::MAX);
        (left, Some(left))
    }
}

/// `τ(a(x)) = a(x⁻¹)`, from `R[x]/⟨x^n − λ⟩` to `R[x]/⟨x^n − λ⁻¹⟩`.
pub fn tau_map(a: &AmbientElement, d: &Decomposition) -> Result<AmbientElement> {
    a.tau(&d.field)
}

/// The decomposition of the dual ambient `R[x]/⟨x^n − λ⁻¹⟩`, i.e. for
/// `(δ⁻¹, −αδ⁻²)`. Dual records' indices refer to it.
pub fn dual_decomposition(d: &Decomposition) -> Result<Decomposition> {
    if d.is_self_reciprocal_ambient() {
        return Ok(d.clone());
    }
    let fd = &d.field;
    let delta_inv = fd.inv(d.delta)?;
    let alpha = fd.neg(fd.mul(d.alpha, fd.mul(delta_inv, delta_inv)));
    compute_decomposition(fd, d.n, delta_inv, alpha)
}

/// `𝒞^⊥ = ⟨Σ_j u^{4 − l_j} e_j(x⁻¹)⟩`. The returned index `l'` satisfies
/// `l'_{τ(j)} = 4 − l_j` with respect to [`dual_decomposition`].
pub fn dual_code(d: &Decomposition, idx: &CodeIndex) -> Result<CodeRecord> {
    check_index(d, idx)?;
    let complement = idx.complement();
    let generator = tau_map(&generator_sum(d, &complement.0)?, d)?;
    let mut ls = vec![0u8; d.r()];
    for (j, &t) in d.tau.iter().enumerate() {
        ls[t] = complement.0[j];
    }
    let index = CodeIndex(ls);
    let log_q_size = d.factors.iter().zip(&idx.0).map(|(rec, &l)| l as usize * rec.degree).sum();
    let self_dual = if d.is_self_reciprocal_ambient() { self_dual_flag(d, &index) } else { None };
    Ok(CodeRecord { index, generator, log_q_size, ambient_lambda: d.dual_lambda(), self_dual })
}

/// All self-dual `(1 + αu²)`-constacyclic codes over `F_{2^m}[u]/⟨u⁴⟩`:
/// `l_j = 2` on `τ`-fixed indices and `l_{τ(j)} = 4 − l_j` on swapped pairs,
/// `5^ε` codes in lexicographic order of the pair representatives' exponents.
pub fn self_dual_codes(d: &Decomposition) -> Result<SelfDualStream<'_>> {
    if d.field.p() != 2 {
        return Err(Error::SelfDualUnsupported(format!("characteristic {} is odd; need q = 2^m", d.field.p())));
    }
    if d.delta.enc() != 1 {
        return Err(Error::SelfDualUnsupported(format!("δ = {} but the classification needs δ = 1", d.delta)));
    }
    let reps: Vec<usize> = (0..d.r()).filter(|&j| d.tau[j] > j).collect();
    let total = code_count(reps.len());
    Ok(SelfDualStream { d, reps, next: 0, total })
}

pub struct SelfDualStream<'a> {
    d: &'a Decomposition,
    reps: Vec<usize>,
    next: u128,
    total: u128,
}

impl SelfDualStream<'_> {
    /// `5^ε`
    pub fn total(&self) -> u128 {
        self.total
    }
}

impl Iterator for SelfDualStream<'_> {
    type Item = CodeRecord;

    fn next(&mut self) -> Option<CodeRecord> {
        if self.next >= self.total {
            return None;
        }
        let digits = CodeIndex::from_rank(self.next, self.reps.len());
        self.next += 1;
        let mut ls = vec![2u8; self.d.r()];
        for (&j, &l) in self.reps.iter().zip(digits.ls()) {
            ls[j] = l;
            ls[self.d.tau[j]] = 4 - l;
        }
        let mut rec = build_code(self.d, &CodeIndex(ls)).expect("valid self-dual index");
        rec.self_dual = Some(true);
        Some(rec)
    }
}
