//! Monomials, monomial ideals, and the ideal text format.
//!
//! Run with: cargo run -p stanley-lab --example monomial_arithmetic

use std::path::Path;

use stanley_lab::monomial::{
    parse_ideal, read_ideal_file, Monomial, MonomialIdeal, VariableContext,
};

fn data(name: &str) -> std::path::PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("examples/data")
        .join(name)
}

fn main() {
    // Monomials are exponent vectors; a context provides variable names.
    let ctx = VariableContext::standard(3);
    let u = Monomial::new(vec![2, 1, 0]); // x1^2 * x2
    let v = Monomial::new(vec![1, 1, 1]); // x1 * x2 * x3
    println!("u = {}", u.display(&ctx));
    println!("v = {}", v.display(&ctx));
    println!("deg u = {}, deg v = {}", u.degree(), v.degree());
    println!("lcm(u, v) = {}", u.lcm(&v).display(&ctx));
    println!("gcd(u, v) = {}", u.gcd(&v).display(&ctx));
    println!("u divides lcm: {}", u.divides(&u.lcm(&v)));

    // Ideals keep only their minimal generators, sorted in descending pure
    // lexicographic order (x1 heaviest).
    let ideal = MonomialIdeal::minimalize(
        ctx.clone(),
        vec![
            Monomial::new(vec![1, 1, 0]),
            Monomial::new(vec![1, 0, 1]),
            Monomial::new(vec![0, 1, 1]),
            Monomial::new(vec![1, 1, 1]), // redundant: x1*x2 divides it
        ],
    );
    println!("\nminimalized: {ideal}");
    println!("contains x1*x2*x3: {}", ideal.contains(&v));
    println!("contains x3^5: {}", ideal.contains(&Monomial::new(vec![0, 0, 5])));

    // Colon and deletion are the two workhorses of the recursion machinery.
    let colon = ideal.colon_by_variable(0);
    println!("\n(I : x1) = {colon}");
    let deletion = ideal.delete_variable(0);
    println!(
        "I with x1 deleted = {deletion} in {}",
        deletion.context()
    );

    // Powers multiply generator sets and re-minimalize.
    let square = ideal.power(2).expect("exponents stay small");
    println!("\nI^2 has {} minimal generators", square.num_gens());

    // The text format: a header `n <variables>`, then exponent rows.
    let load = read_ideal_file(data("triangle.ideal")).expect("readable example data");
    assert_eq!(load.ideal, ideal);
    assert!(load.was_minimal());
    println!("\nloaded from file: {}", load.ideal);

    // Redundant rows are reported, not silently discarded.
    let sloppy = read_ideal_file(data("nonminimal.ideal")).expect("readable example data");
    let names: Vec<String> = sloppy
        .dropped
        .iter()
        .map(|m| m.display(sloppy.ideal.context()).to_string())
        .collect();
    println!(
        "nonminimal input: kept {}, dropped {}",
        sloppy.ideal.num_gens(),
        names.join(" and ")
    );

    // Parse errors carry line numbers.
    let err = parse_ideal("n 2\n1 oops\n").unwrap_err();
    println!("\nparse error example: {err}");
}
