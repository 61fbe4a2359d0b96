//! Factor x^n − δ over a few fields.
//!
//! cargo run --example factor

use constacyclic::fieldpoly::{factor_xn_minus_delta, Field};

fn main() -> constacyclic::Result<()> {
    for (p, m, n, delta) in [(2, 1, 7, 1), (2, 1, 15, 1), (3, 1, 8, 2), (2, 2, 5, 2), (5, 1, 6, 3)] {
        let field = Field::gf(p, m)?;
        let fz = factor_xn_minus_delta(&field, n, field.elem(delta)?)?;
        println!("F_{}: x^{n} - {delta} has {} factors (degrees {:?})", field.q(), fz.r(), fz.degrees());
        for f in fz.polys() {
            println!("    {f}");
        }
        assert_eq!(fz.product(&field), constacyclic::fieldpoly::Poly::xn_minus(&field, n, field.elem(delta)?));
    }

    // p | n is rejected
    let f3 = Field::gf(3, 1)?;
    println!("x^6 - 1 over F_3: {}", factor_xn_minus_delta(&f3, 6, f3.one()).unwrap_err());
    Ok(())
}
