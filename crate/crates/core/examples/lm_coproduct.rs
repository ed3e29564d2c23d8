//! LM coproducts: the data of each family, the matrix exponential for
//! type I+ non-standard, and recovery of the cocommutator at first order.
//!
//! Usage: `cargo run --release --example lm_coproduct -- [order]`

use oscq::algebra::render::{render, Style};
use oscq::algebra::uea::{oscillator_at, Generator, NAMES};
use oscq::bialgebra::Family;
use oscq::lm::{first_order_check, lm_coproduct, matrix_exp, LMSpec};

fn main() {
    let order: i32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let alg = oscillator_at(order);

    let spec = LMSpec::for_family(Family::IplusNonstandard);
    let e = matrix_exp(alg, &spec.nu_sum()).expect("commuting entries");
    println!("exp(Σ ν_i H_i) for I+n to order {order}:");
    for row in &e {
        let cells: Vec<String> = row.iter().map(|x| render(x, &NAMES, Style::Text)).collect();
        println!("  [{}]", cells.join(", "));
    }

    for f in Family::ALL {
        let spec = LMSpec::for_family(f);
        let map = lm_coproduct(&spec, alg).expect("valid LM data");
        println!("\n{} (basis change: {})", f.key(), spec.basis.describe());
        for g in Generator::ALL {
            println!("  Δ({g}) = {}", render(map.get(g), &NAMES, Style::Text));
        }
        println!("  first order recovers δ: {}", first_order_check(&spec, &f.r()));
    }
}
