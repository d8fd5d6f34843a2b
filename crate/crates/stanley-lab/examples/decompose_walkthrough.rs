//! The constructive decomposition, step by step.
//!
//! Run with: cargo run -p stanley-lab --example decompose_walkthrough

use stanley_lab::decomposer::{decompose, DecomposeError};
use stanley_lab::homology::depth;
use stanley_lab::monomial::{Monomial, MonomialIdeal, VariableContext};
use stanley_lab::stanley::{verify_decomposition, DEFAULT_POINT_CAP};

fn ideal(n: usize, rows: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::minimalize(
        VariableContext::standard(n),
        rows.iter().map(|r| Monomial::new(r.to_vec())),
    )
}

fn main() {
    // The recursion eliminates the heaviest variable at every step: it is
    // either free, a generator, or the pivot of a deletion/quotient split.
    let triangle = ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
    let (decomposition, trace) = decompose(&triangle).expect("weakly polymatroidal");
    println!("I = {triangle}");
    println!("spaces:");
    print!("{}", decomposition.render_lines());
    println!("as a sum: {decomposition}");
    println!("\nrecursion trace:");
    print!("{trace}");

    // The result is a genuine partition of the standard monomials...
    verify_decomposition(&triangle, decomposition.spaces(), DEFAULT_POINT_CAP)
        .expect("the construction verifies");
    // ...and its depth never falls below depth(S/I).
    let report = depth(&triangle).expect("within caps");
    println!(
        "constructed depth {} >= depth {}",
        decomposition.sdepth(),
        report.depth
    );
    assert!(decomposition.sdepth() >= report.depth);

    // A principal squarefree ideal walks through every rule: split, free
    // variable, generator, and the zero ideal as base case.
    let principal = ideal(3, &[&[1, 1, 1]]);
    let (decomposition, trace) = decompose(&principal).expect("weakly polymatroidal");
    println!("\nI = {principal}");
    print!("{}", decomposition.render_lines());
    println!("trace:");
    print!("{trace}");

    // Ideals outside the method's reach are refused with a witness.
    let squares = ideal(2, &[&[2, 0], &[0, 2]]);
    match decompose(&squares) {
        Err(DecomposeError::NotWeaklyPolymatroidal(v)) => {
            println!(
                "\n{squares} is refused: {} over {} admits no exchange",
                v.upper, v.lower
            );
        }
        other => panic!("expected a refusal, got {other:?}"),
    }
}
