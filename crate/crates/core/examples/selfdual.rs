//! Self-dual (1 + αu²)-constacyclic codes over F_{2^m}[u]/<u^4>.
//!
//! cargo run --example selfdual

use constacyclic::codes::self_dual_codes;
use constacyclic::decomposition::compute_decomposition;
use constacyclic::fieldpoly::Field;

fn main() -> constacyclic::Result<()> {
    let f2 = Field::gf(2, 1)?;
    let d = compute_decomposition(&f2, 7, f2.one(), f2.one())?;
    for rec in self_dual_codes(&d)? {
        println!("g_{}(x) = {}", rec.index, rec.generator);
    }

    for (m, n, alpha) in [(1, 15, 1), (2, 5, 3), (3, 7, 5)] {
        let field = Field::gf(2, m)?;
        let d = compute_decomposition(&field, n, field.one(), field.elem(alpha)?)?;
        let stream = self_dual_codes(&d)?;
        println!(
            "q = {}, n = {n}: rho = {:?}, epsilon = {:?}, {} self-dual codes",
            field.q(),
            d.rho,
            d.eps_pairs,
            stream.total()
        );
    }

    let f3 = Field::gf(3, 1)?;
    let d3 = compute_decomposition(&f3, 4, f3.one(), f3.one())?;
    println!("odd q: {}", self_dual_codes(&d3).err().unwrap());
    Ok(())
}
