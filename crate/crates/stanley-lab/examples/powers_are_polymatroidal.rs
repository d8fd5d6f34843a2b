//! Products and powers of polymatroidal ideals stay polymatroidal.
//!
//! Run with: cargo run -p stanley-lab --example powers_are_polymatroidal

use stanley_lab::classify::{is_polymatroidal, is_weakly_polymatroidal};
use stanley_lab::corpus::squarefree_veronese_ideal;
use stanley_lab::decomposer::{verify_conjecture, ConjectureOptions};

fn main() {
    // Start from the squarefree degree-2 ideal in three variables.
    let base = squarefree_veronese_ideal(3, 2);
    println!("base ideal: {base}");
    assert!(is_polymatroidal(&base));

    // Each power is generated by products of k base generators. The class
    // is closed under products, so every power stays inside it — and in
    // particular keeps its linear quotients and the depth formula.
    for k in 1..=4u32 {
        let power = base.power(k).expect("small exponents");
        let polymatroidal = is_polymatroidal(&power);
        let weakly = is_weakly_polymatroidal(&power);
        println!(
            "k = {k}: {} generators, polymatroidal: {polymatroidal}, weakly: {weakly}",
            power.num_gens()
        );
        assert!(polymatroidal && weakly);

        // The constructive decomposition therefore applies to every power.
        let report = verify_conjecture(&power, &ConjectureOptions::default())
            .expect("weakly polymatroidal");
        println!(
            "      pd = {}, depth = {}, constructed depth = {} ({} spaces), holds: {}",
            report.pd,
            report.depth,
            report.constructed_sdepth,
            report.num_spaces,
            report.conjecture_holds
        );
        assert!(report.conjecture_holds);
    }
}
