//! Code-side helpers: entropy, the GV rate, level counts, table lookups and
//! small explicit codes.

use idealpack::codes::{demo_code, entropy, gv_rate, max_levels, CodeTable};

fn main() -> idealpack::Result<()> {
    for q in [2u64, 3, 8, 9] {
        let top = (q - 1) as f64 / q as f64;
        println!(
            "q = {q}: H(1/4) = {:.6}, H((q-1)/q) = {:.12}, GV rate at 1/4 = {:.6}",
            entropy(q, 0.25)?,
            entropy(q, top)?,
            gv_rate(q, 0.25)?
        );
    }
    println!("levels for m=4, q=9: n=45 -> {}, n=64 -> {}, n=128 -> {}", max_levels(4, 9, 45), max_levels(4, 9, 64), max_levels(4, 9, 128));
    let table = CodeTable::bundled();
    for d in [3, 9, 27] {
        println!("best [64, k, >={d}] over GF(9): k = {}", table.best_dimension(9, 64, d)?);
    }
    let rs = demo_code(8, 8, 3)?;
    println!("Reed-Solomon [8,3] over GF(8): min weight {} by enumeration", rs.min_weight()?);
    Ok(())
}
