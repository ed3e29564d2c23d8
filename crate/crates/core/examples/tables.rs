//! Regenerates the three reference tables from first principles and diffs
//! them against the bundled fixtures.
//!
//! Usage: `cargo run --release --example tables -- [order]`

use oscq::bialgebra::table_one;
use oscq::lm::table_three;
use oscq::poisson::table_two;

fn main() {
    let order: i32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    for (name, rows) in [("I", table_one()), ("II", table_two()), ("III", table_three(order))] {
        let bad: Vec<_> = rows.iter().filter(|r| !r.matches).collect();
        println!("Table {name}: {} cells, {} mismatches", rows.len(), bad.len());
        for r in bad {
            println!("  {} {}: got {} want {}", r.family, r.entry, r.computed, r.expected);
        }
    }
}
