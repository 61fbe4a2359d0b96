//! Idempotents of R[x]/<x^7 − (1 + u²)>, the permutation τ, and the
//! local structure K_j + vK_j behind them.
//!
//! cargo run --example idempotents

use constacyclic::chainring::{psi_inverse, psi_map};
use constacyclic::decomposition::{canonical_rearrange, compute_decomposition, tau_by_reciprocals};
use constacyclic::fieldpoly::Field;

fn main() -> constacyclic::Result<()> {
    let field = Field::gf(2, 1)?;
    let d = compute_decomposition(&field, 7, field.one(), field.one())?;
    d.verify()?;
    println!("lambda = {}", d.lambda());
    for (j, rec) in d.factors.iter().enumerate() {
        println!("f_{}(x) = {}", j + 1, rec.f);
        println!("    e_{}(x) = {}", j + 1, rec.e);
        println!("    omega_{}(x) = {}", j + 1, rec.omega);
        let local = d.local_ring(j)?;
        println!("    v has nilpotency index {} in K_{} + vK_{}", local.v_nilpotency_index()?, j + 1, j + 1);
    }
    println!("tau = {:?} (0-based), rho = {:?}, epsilon = {:?}", d.tau, d.rho, d.eps_pairs);
    assert_eq!(tau_by_reciprocals(&d)?, d.tau);

    // Ψ carries ε_j in A + vA to e_j in the ambient
    let e2 = &d.factors[1].e;
    let back = psi_inverse(e2, &field)?;
    assert_eq!(&psi_map(&back, &field)?, e2);
    println!("Psi^-1(e_2) = {} + v*({})", back.xi0, back.xi1);

    // odd characteristic, δ ≠ 1: τ lands in the λ⁻¹ ambient
    let f3 = Field::gf(3, 1)?;
    let d3 = compute_decomposition(&f3, 8, f3.elem(2)?, f3.one())?;
    println!("F_3, x^8 - 2: lambda = {}, dual lambda = {}, tau = {:?}", d3.lambda(), d3.dual_lambda(), d3.tau);

    // x^15 − 1 over F_2 with factors reordered as fixed, representatives, partners
    let d15 = canonical_rearrange(&compute_decomposition(&field, 15, field.one(), field.one())?)?;
    let degrees: Vec<usize> = d15.degrees();
    println!("x^15 - 1: degrees {degrees:?}, tau = {:?}, rho = {:?}, epsilon = {:?}", d15.tau, d15.rho, d15.eps_pairs);
    Ok(())
}
