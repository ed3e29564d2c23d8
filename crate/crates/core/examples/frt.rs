//! FRT construction: quantum-group relations read off `R T₁ T₂ = T₂ T₁ R`
//! for each represented R-matrix, checked against the quantum groups.
//!
//! Usage: `cargo run --release --example frt -- [order]`

use oscq::hopf::families::QuantumFamily;
use oscq::report::{checks, Format};
use oscq::rmatrix::frt::{check, describe, extract};
use oscq::rmatrix::rep::{d_r_closed, PrimedReading};

fn main() {
    let order: i32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let mut rows = Vec::new();
    for f in QuantumFamily::ALL {
        let ex = extract(&d_r_closed(f, PrimedReading::Definition));
        println!("{}:", f.key());
        for (pair, value) in describe(&ex) {
            println!("  {pair} = {value}");
        }
        rows.extend(check(f, order));
    }
    print!("{}", checks(&rows, Format::Text));
}
