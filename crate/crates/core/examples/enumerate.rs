//! Enumerate every (1 + u²)-constacyclic code of length 7 over F_2[u]/<u^4>.
//!
//! cargo run --example enumerate

use std::collections::BTreeMap;

use constacyclic::codes::{code_count, enumerate_codes, enumerate_range};
use constacyclic::decomposition::compute_decomposition;
use constacyclic::fieldpoly::Field;

fn main() -> constacyclic::Result<()> {
    let field = Field::gf(2, 1)?;
    let d = compute_decomposition(&field, 7, field.one(), field.one())?;
    println!("{} codes", code_count(d.r()));

    let mut by_size: BTreeMap<usize, usize> = BTreeMap::new();
    for rec in enumerate_codes(&d) {
        *by_size.entry(rec.log_q_size).or_default() += 1;
    }
    for (k, count) in &by_size {
        println!("|C| = 2^{k:<2}  {count} codes");
    }

    for rec in enumerate_range(&d, 60, Some(3)) {
        println!("C{} = <{}>", rec.index, rec.generator);
    }

    // streaming keeps memory flat even when 5^r is large
    let d63 = compute_decomposition(&field, 63, field.one(), field.one())?;
    println!(
        "x^63 - 1: r = {}, {} codes; first: C{}",
        d63.r(),
        code_count(d63.r()),
        enumerate_codes(&d63).next().unwrap().index
    );
    Ok(())
}
