//! Brute-force linear-algebra oracle over `F_q`.
//!
//! An ideal of `R[x]/⟨x^n − λ⟩` is viewed as an `F_q`-subspace of `F_q^{4n}`
//! (coordinate `(i, k)` is the `u^k` digit of the `x^i` coefficient, column
//! `4i + k`). The span of `{u^k x^i g}` is echelonized directly; nothing here
//! uses the factorization, the idempotents or the index formulas, so it can
//! cross-check them. The dual is computed from the bilinear form
//! `⟨a, b⟩ = [u³] Σ_i a_i b_i`, which is nondegenerate on `R^n` and whose
//! annihilator of an `R`-submodule is its `R`-orthogonal.

use serde::Serialize;

use crate::chainring::{AmbientElement, RingElement};
use crate::codes::CodeRecord;
use crate::error::{Error, Result};
use crate::fieldpoly::{Field, FieldElement};

/// Reduced row echelon basis of an `F_q`-subspace of `F_q^{4n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatCode {
    pub n: usize,
    pub lambda: RingElement,
    /// Rows sorted by pivot column; each pivot entry is 1 and the pivot
    /// columns are zero in every other row.
    pub rows: Vec<Vec<FieldElement>>,
    pub pivots: Vec<usize>,
}

impl FlatCode {
    fn empty(n: usize, lambda: RingElement) -> Self {
        FlatCode { n, lambda, rows: Vec::new(), pivots: Vec::new() }
    }

    /// `log_q` of the number of codewords.
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Residual of `v` after elimination against the basis.
    fn reduce(&self, v: &mut [FieldElement], field: &Field) {
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let a = v[c];
            if a.is_zero() {
                continue;
            }
            for (x, &r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = field.sub(*x, field.mul(a, r));
                }
            }
        }
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    fn insert(&mut self, mut v: Vec<FieldElement>, field: &Field) -> bool {
        self.reduce(&mut v, field);
        let Some(c) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = field.inv(v[c]).expect("nonzero pivot");
        for x in v.iter_mut() {
            *x = field.mul(*x, inv);
        }
        for row in self.rows.iter_mut() {
            let a = row[c];
            if a.is_zero() {
                continue;
            }
            for (x, &r) in row.iter_mut().zip(&v) {
                if !r.is_zero() {
                    *x = field.sub(*x, field.mul(a, r));
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < c);
        self.pivots.insert(at, c);
        self.rows.insert(at, v);
        true
    }

    pub fn contains(&self, v: &[FieldElement], field: &Field) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w, field);
        w.iter().all(|x| x.is_zero())
    }

    pub fn contains_element(&self, a: &AmbientElement, field: &Field) -> bool {
        a.n() == self.n && a.lambda() == self.lambda && self.contains(&flatten(a), field)
    }
}

/// Coordinates `(c_{i,k})` at column `4i + k`.
pub fn flatten(a: &AmbientElement) -> Vec<FieldElement> {
    a.coeffs().iter().flat_map(|c| c.0).collect()
}

/// `u·v`: each `u^k` digit moves to `u^{k+1}`, `u^3` drops out.
fn u_times(v: &[FieldElement]) -> Vec<FieldElement> {
    let mut out = vec![FieldElement::ZERO; v.len()];
    for (w, chunk) in out.chunks_mut(4).zip(v.chunks(4)) {
        w[1..4].copy_from_slice(&chunk[0..3]);
    }
    out
}

/// Product of two digit quadruples truncated at `u^4`.
fn digit_product(a: &[FieldElement], b: &[FieldElement], field: &Field) -> [FieldElement; 4] {
    let mut out = [FieldElement::ZERO; 4];
    for i in 0..4 {
        for j in 0..4 - i {
            out[i + j] = field.add(out[i + j], field.mul(a[i], b[j]));
        }
    }
    out
}

/// `x·v`: positions move up by one, the last wraps to position 0 times `λ`.
fn x_times(v: &[FieldElement], lambda: &RingElement, field: &Field) -> Vec<FieldElement> {
    let len = v.len();
    let mut out = vec![FieldElement::ZERO; len];
    out[4..].copy_from_slice(&v[..len - 4]);
    out[..4].copy_from_slice(&digit_product(&v[len - 4..], &lambda.0, field));
    out
}

/// Ideal generated by `g`: the `F_q`-span of `u^k x^i g`.
pub fn span_ideal(g: &AmbientElement, field: &Field) -> FlatCode {
    span_ideal_of(std::slice::from_ref(g), field).expect("single generator")
}

/// Ideal generated by several elements of one ambient.
pub fn span_ideal_of(gens: &[AmbientElement], field: &Field) -> Result<FlatCode> {
    let first = gens.first().ok_or_else(|| Error::InvalidInput("no generators".into()))?;
    let (n, lambda) = (first.n(), first.lambda());
    if gens.iter().any(|g| !g.same_ambient(first)) {
        return Err(Error::AmbientMismatch("generators live in different ambients".into()));
    }
    let mut code = FlatCode::empty(n, lambda);
    for g in gens {
        let mut shifted = flatten(g);
        for _ in 0..n {
            let mut w = shifted.clone();
            for _ in 0..4 {
                if w.iter().all(|x| x.is_zero()) {
                    break;
                }
                code.insert(w.clone(), field);
                w = u_times(&w);
            }
            shifted = x_times(&shifted, &lambda, field);
        }
    }
    Ok(code)
}

/// `|span(g)| = q^{log_q_size}`.
pub fn check_cardinality(rec: &CodeRecord, field: &Field) -> bool {
    rec.generator.lambda() == rec.ambient_lambda && span_ideal(&rec.generator, field).dim() == rec.log_q_size
}

/// Closed under the `λ`-constacyclic shift.
pub fn check_constacyclic(c: &FlatCode, field: &Field) -> bool {
    c.rows.iter().all(|r| c.contains(&x_times(r, &c.lambda, field), field))
}

/// Closed under the shift and under multiplication by `u`, i.e. an ideal.
pub fn check_ideal(c: &FlatCode, field: &Field) -> bool {
    check_constacyclic(c, field) && c.rows.iter().all(|r| c.contains(&u_times(r), field))
}

/// `Σ_i a_i b_i ∈ R`.
pub fn inner_product(a: &[FieldElement], b: &[FieldElement], field: &Field) -> RingElement {
    let mut acc = [FieldElement::ZERO; 4];
    for (x, y) in a.chunks(4).zip(b.chunks(4)) {
        let p = digit_product(x, y, field);
        for k in 0..4 {
            acc[k] = field.add(acc[k], p[k]);
        }
    }
    RingElement(acc)
}

/// `C` and `D` are mutually orthogonal over `R` and `dim C + dim D = 4n`.
pub fn check_duality(c: &FlatCode, d: &FlatCode, field: &Field) -> bool {
    c.n == d.n
        && c.dim() + d.dim() == 4 * c.n
        && c.rows.iter().all(|a| d.rows.iter().all(|b| inner_product(a, b, field).is_zero()))
}

/// `C^⊥` as a subspace of the `λ⁻¹` ambient.
pub fn euclidean_dual(c: &FlatCode, field: &Field) -> Result<FlatCode> {
    let width = 4 * c.n;
    // functional b ↦ [u³]⟨a, b⟩ has coefficient a_{i, 3−k} at column (i, k)
    let mut forms = FlatCode::empty(c.n, c.lambda);
    for a in &c.rows {
        let mut w = vec![FieldElement::ZERO; width];
        for i in 0..c.n {
            for k in 0..4 {
                w[4 * i + k] = a[4 * i + 3 - k];
            }
        }
        forms.insert(w, field);
    }
    let mut dual = FlatCode::empty(c.n, c.lambda.inv(field)?);
    let pivot_set: std::collections::HashSet<usize> = forms.pivots.iter().copied().collect();
    for free in (0..width).filter(|col| !pivot_set.contains(col)) {
        let mut v = vec![FieldElement::ZERO; width];
        v[free] = field.one();
        for (row, &pc) in forms.rows.iter().zip(&forms.pivots) {
            v[pc] = field.neg(row[free]);
        }
        dual.insert(v, field);
    }
    Ok(dual)
}

/// `span(g) = span(g)^⊥`; only meaningful when `λ⁻¹ = λ`.
pub fn check_self_dual(rec: &CodeRecord, field: &Field) -> Result<bool> {
    if rec.ambient_lambda.inv(field)? != rec.ambient_lambda {
        return Err(Error::AmbientMismatch(format!(
            "λ = {} is not its own inverse, so a code and its dual live in different ambients",
            rec.ambient_lambda
        )));
    }
    let c = span_ideal(&rec.generator, field);
    Ok(euclidean_dual(&c, field)? == c)
}

/// Full check of a claimed dual: the span of `dual.generator` equals the
/// oracle's `C^⊥` and sits in the `λ⁻¹` ambient.
pub fn check_dual_record(rec: &CodeRecord, dual: &CodeRecord, field: &Field) -> Result<bool> {
    let c = span_ideal(&rec.generator, field);
    let expected = euclidean_dual(&c, field)?;
    let claimed = span_ideal(&dual.generator, field);
    Ok(claimed == expected && dual.log_q_size == claimed.dim() && check_duality(&c, &claimed, field))
}

/// Outcome of checking one record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecordCheck {
    pub index: Vec<u8>,
    pub dim: usize,
    pub dual_dim: usize,
    pub cardinality: bool,
    pub constacyclic: bool,
    pub ideal: bool,
    pub duality: bool,
    /// What the record claims about self-duality, if anything.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub self_dual_claim: Option<bool>,
    /// The oracle's verdict, computed when there is a claim.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub self_dual: Option<bool>,
}

impl RecordCheck {
    pub fn passed(&self) -> bool {
        self.cardinality && self.constacyclic && self.ideal && self.duality && self.self_dual_claim == self.self_dual
    }
}

/// Runs every applicable check on `rec` and its claimed dual. If `rec`
/// makes a self-duality claim, the claim is checked as well.
pub fn check_record(rec: &CodeRecord, dual: &CodeRecord, field: &Field) -> Result<RecordCheck> {
    let c = span_ideal(&rec.generator, field);
    let claimed = span_ideal(&dual.generator, field);
    let expected = euclidean_dual(&c, field)?;
    let self_dual = match rec.self_dual {
        Some(_) => Some(check_self_dual(rec, field)?),
        None => None,
    };
    Ok(RecordCheck {
        index: rec.index.ls().to_vec(),
        dim: c.dim(),
        dual_dim: claimed.dim(),
        cardinality: rec.generator.lambda() == rec.ambient_lambda && c.dim() == rec.log_q_size,
        constacyclic: check_constacyclic(&c, field),
        ideal: check_ideal(&c, field),
        duality: claimed == expected
            && dual.generator.lambda() == dual.ambient_lambda
            && claimed.dim() == dual.log_q_size
            && check_duality(&c, &claimed, field),
        self_dual_claim: rec.self_dual,
        self_dual,
    })
}
