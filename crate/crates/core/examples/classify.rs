//! Schouten brackets and the classification of skew r-matrices.
//!
//! Usage: `cargo run --example classify`

use oscq::algebra::render::{render, Style};
use oscq::algebra::uea::NAMES;
use oscq::bialgebra::{schouten, schouten_closed_form, Family, RMatrixSkew};
use oscq::cli::classify_r;

fn main() {
    let r = RMatrixSkew::generic();
    let s = schouten(&r);
    assert_eq!(s, schouten_closed_form(&r));
    println!("[[r,r]] for generic r:\n  {}\n", render(&s, &NAMES, Style::Text));

    for coeffs in [[1, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, 0], [1, 1, 0, 0, 0, 0], [0, 1, 1, -1, 0, 0], [0, 0, 0, 1, 0, 0]] {
        let c = classify_r(&RMatrixSkew::from_ints(coeffs), None).expect("numeric input is decidable");
        println!("{coeffs:?}: {}", c.summary);
    }

    println!();
    for f in Family::ALL {
        let c = classify_r(&f.r(), Some(&f.nonzero())).expect("family r classifies");
        println!("{:<4} {}", f.key(), c.summary);
    }
}
