//! Dual codes, in the same ambient (λ⁻¹ = λ) and in a different one.
//!
//! cargo run --example dual

use constacyclic::codes::{build_code, dual_code, dual_decomposition, CodeIndex};
use constacyclic::decomposition::compute_decomposition;
use constacyclic::fieldpoly::Field;

fn main() -> constacyclic::Result<()> {
    let field = Field::gf(2, 1)?;
    let d = compute_decomposition(&field, 7, field.one(), field.one())?;
    for ls in [vec![0, 0, 0], vec![1, 2, 3], vec![2, 0, 4]] {
        let idx = CodeIndex::new(ls)?;
        let c = build_code(&d, &idx)?;
        let dual = dual_code(&d, &idx)?;
        println!("C{}: 2^{}, dual C{}: 2^{}", c.index, c.log_q_size, dual.index, dual.log_q_size);
        println!("    dual generator {}", dual.generator);
    }

    // over F_5 with λ = 1 + 3u², the dual is (1 + 2u²)-constacyclic
    let f5 = Field::gf(5, 1)?;
    let d5 = compute_decomposition(&f5, 4, f5.one(), f5.elem(3)?)?;
    let dd = dual_decomposition(&d5)?;
    let idx = CodeIndex::new(vec![1, 0, 3, 4])?;
    let dual = dual_code(&d5, &idx)?;
    println!("F_5: lambda = {}, dual lambda = {}", d5.lambda(), dual.ambient_lambda);
    assert_eq!(build_code(&dd, &dual.index)?.generator, dual.generator);
    println!("    dual of C{} is C{} of the dual ambient", idx, dual.index);
    Ok(())
}
