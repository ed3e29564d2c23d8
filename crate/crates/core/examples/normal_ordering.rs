//! Normal ordering in the oscillator algebra and in a deformed algebra,
//! with a few truncated series.
//!
//! Usage: `cargo run --example normal_ordering`

use oscq::algebra::render::{render, Style};
use oscq::algebra::series::{exp_scaled, v_series};
use oscq::algebra::uea::{context, oscillator, NAMES};
use oscq::coeff::{Coefficient, Param};
use oscq::hopf::families::ii_n;

fn main() {
    let ctx = context();
    for word in ["Am*Ap", "Am*Ap*Ap", "Ap*A", "Am*A*Ap", "(A + Ap)^3"] {
        let e = ctx.element(word).expect("valid word");
        println!("{word:>12} = {}", render(&e, &NAMES, Style::Text));
    }

    let h = ii_n(3);
    let alg = &h.alg;
    let (a, ap) = (alg.gen(0), alg.gen(1));
    println!("\nwith the type II non-standard relations to order 3:");
    println!("  [A, Ap] = {}", render(&alg.commutator(&a, &ap), h.names(), Style::Text));

    let x = Coefficient::param(Param::X);
    let m = oscillator().gen(3);
    let o4 = oscq::algebra::uea::oscillator_at(4);
    println!("  e^(xM) = {}", render(&exp_scaled(o4, &x, &m), &NAMES, Style::Text));
    println!("  v(x)   = {}", render(&v_series(o4, &x, &m), &NAMES, Style::Text));
}
