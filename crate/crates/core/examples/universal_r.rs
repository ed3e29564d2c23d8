//! Universal R-matrices as truncated series: QYBE, intertwining with the
//! coproduct, and their 3×3 representations.
//!
//! Usage: `cargo run --release --example universal_r -- [order]`

use oscq::hopf::families::QuantumFamily;
use oscq::report::{checks, Format};
use oscq::rmatrix::rep::{d_r_closed, PrimedReading};
use oscq::suite::r_matrix_checks;

fn main() {
    let order: i32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let mut rows = Vec::new();
    for f in QuantumFamily::ALL {
        rows.extend(r_matrix_checks(f, order));
        println!("D(R) for {}:\n{}", f.key(), d_r_closed(f, PrimedReading::Definition));
    }
    print!("{}", checks(&rows, Format::Text));
}
