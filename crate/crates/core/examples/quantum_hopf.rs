//! Verifies the Hopf axioms of the three quantum oscillator algebras and
//! the three quantum groups.
//!
//! Usage: `cargo run --release --example quantum_hopf -- [order]`

use oscq::hopf::{families::QuantumFamily, fun};
use oscq::report::{checks, Format};

fn main() {
    let order: i32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let mut rows = Vec::new();
    for f in QuantumFamily::ALL {
        let h = f.build(order);
        rows.extend(h.verify(f.key()));
    }
    for f in fun::FunFamily::ALL {
        let g = fun::build(f, order);
        rows.extend(g.verify(f.key()));
    }
    print!("{}", checks(&rows, Format::Text));
}
