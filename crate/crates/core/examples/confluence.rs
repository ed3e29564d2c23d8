//! Local confluence of the rewriting systems: every word reduces to the
//! same normal form whichever redex is rewritten first.
//!
//! Usage: `cargo run --release --example confluence -- [random words]`

use oscq::algebra::uea::oscillator_at;
use oscq::hopf::families::uz;
use oscq::hopf::fun::{build, FunFamily};
use oscq::hopf::rewrite::{confluence_failures, Rewriter};

fn main() {
    let count: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(200);
    let order = 4;
    let osc = oscillator_at(order);
    let q = uz(order);
    let g = build(FunFamily::Uz, order);

    let rw = Rewriter::new(osc.presentation(), Some(order));
    let words = rw.words(3);
    println!("oscillator, {} words of length 3: {:?}", words.len(), confluence_failures(osc, &words, &[1, 2], true));

    let rw = Rewriter::new(q.alg.presentation(), Some(order));
    let words = rw.words(3);
    println!("U_z, {} words of length 3: {:?}", words.len(), confluence_failures(&q.alg, &words, &[1, 2], true));

    let rw = Rewriter::new(g.alg.presentation(), Some(order));
    let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(7);
    let words: Vec<_> = (0..count).map(|_| rw.random_word(5, &mut rng)).collect();
    println!("Fun U_z, {count} random words of length 5: {:?}", confluence_failures(&g.alg, &words, &[3], false));
}
