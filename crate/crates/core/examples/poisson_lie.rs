//! The oscillator group, its invariant vector fields and the Sklyanin
//! brackets of one bialgebra family.
//!
//! Usage: `cargo run --release --example poisson_lie -- [family]`

use oscq::algebra::render::{render, Style};
use oscq::bialgebra::Family;
use oscq::poisson::{associativity_check, coordinate_bracket, field_defects, jacobi_check, multiplicativity_check, NAMES, PAIRS};

fn main() {
    let key = std::env::args().nth(1).unwrap_or_else(|| "I+n".into());
    let f = Family::parse(&key).unwrap_or_else(|| panic!("unknown family {key}"));
    println!("group law associative: {}", associativity_check());
    println!("invariant field defects: {:?}", field_defects(0));

    let r = f.r();
    println!("\nSklyanin brackets for {}:", f.key());
    for (a, b) in PAIRS {
        println!("  {{{}, {}}} = {}", a.name(), b.name(), render(&coordinate_bracket(&r, a, b), &NAMES, Style::Text));
    }
    println!("Jacobi: {}", jacobi_check(&r));
    println!("multiplicative: {:?}", multiplicativity_check(&r));
}
