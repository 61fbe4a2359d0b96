//! Cross-check the classification against brute-force linear algebra.
//!
//! cargo run --release --example verify

use constacyclic::codes::{dual_code, enumerate_codes};
use constacyclic::decomposition::compute_decomposition;
use constacyclic::fieldpoly::Field;
use constacyclic::oracle::check_record;

fn main() -> constacyclic::Result<()> {
    for (p, m, n, delta, alpha) in [(2, 1, 7, 1, 1), (2, 2, 3, 1, 2), (3, 1, 4, 2, 1), (5, 1, 3, 2, 4)] {
        let field = Field::gf(p, m)?;
        let d = compute_decomposition(&field, n, field.elem(delta)?, field.elem(alpha)?)?;
        let (mut total, mut passed, mut self_dual) = (0, 0, 0);
        for rec in enumerate_codes(&d) {
            let check = check_record(&rec, &dual_code(&d, &rec.index)?, &field)?;
            total += 1;
            passed += check.passed() as usize;
            self_dual += (check.self_dual == Some(true)) as usize;
        }
        println!(
            "q = {}, n = {n}, lambda = {}: {passed}/{total} codes pass, {self_dual} self-dual",
            field.q(),
            d.lambda()
        );
    }
    Ok(())
}
