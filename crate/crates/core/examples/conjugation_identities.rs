//! The four conjugation identities behind the intertwining property of the
//! type II non-standard R-matrix, in expanded and collected form.
//!
//! Usage: `cargo run --release --example conjugation_identities -- [order]`

use oscq::report::{checks, Format};
use oscq::rmatrix::conjugation::check;

fn main() {
    let order: i32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    print!("{}", checks(&check(order), Format::Text));
}
