//! Recompute the reference rows with a code table (bundled snapshot by default).
//!
//! Usage: cargo run --release --example tables -- [code-table-file]

use idealpack::codes::{load_code_table, CodeTable};
use idealpack::lattice::TowerOptions;
use idealpack::packing::{finite_density_report, implied_code_sum, REFERENCE_PRIMES};
use idealpack::Error;
use std::io::BufReader;

fn main() -> idealpack::Result<()> {
    let table = match std::env::args().nth(1) {
        Some(path) => load_code_table(BufReader::new(std::fs::File::open(path)?))?,
        None => CodeTable::bundled(),
    };
    let opts = TowerOptions::default();
    println!("{:>5} {:>14} {:>5} {:>10} {:>12} {:>10}", "table", "prime", "dim", "listed", "computed", "sum k");
    for r in REFERENCE_PRIMES {
        let k = r.field()?;
        let prime = r.prime(&k, 0)?;
        for row in r.rows {
            let implied = implied_code_sum(&k, &prime, row.n, row.log2_delta, &opts)?;
            let computed = match finite_density_report(&k, &prime, row.n, &table, &opts) {
                Ok(rep) => format!("{:.4}", rep.log2_center_density),
                Err(Error::MissingEntry { q, n, d }) => format!("no ({q},{n},{d})"),
                Err(e) => return Err(e),
            };
            println!(
                "{:>5} {:>14} {:>5} {:>10.2} {:>12} {:>10.4}",
                r.table,
                r.label(),
                row.dimension,
                row.log2_delta,
                computed,
                implied.sum_k
            );
        }
    }
    Ok(())
}
