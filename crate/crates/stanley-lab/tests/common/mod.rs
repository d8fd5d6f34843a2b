//! Shared fixtures for the integration tests: a frozen desk-scale corpus and
//! small construction helpers.

#![allow(dead_code)]

use stanley_lab::corpus::{generate, CorpusEntry, CorpusSpec, Family};
use stanley_lab::monomial::{Monomial, MonomialIdeal, VariableContext};

pub fn ideal(n: usize, rows: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::minimalize(
        VariableContext::standard(n),
        rows.iter().map(|r| Monomial::new(r.to_vec())),
    )
}

/// The corpus every sweep-style test runs over: deterministic families plus
/// seeded random draws filtered down to the weakly polymatroidal class.
/// Bounds: n <= 5 variables, t <= 10 generators, exponents <= 3.
pub fn acceptance_corpus() -> Vec<CorpusEntry> {
    let spec = CorpusSpec {
        seed: 1789,
        require_weakly_polymatroidal: true,
        max_vars: 5,
        max_gens: 10,
        families: vec![
            Family::SquarefreeVeronese { n: 3, d: 1 },
            Family::SquarefreeVeronese { n: 3, d: 2 },
            Family::SquarefreeVeronese { n: 4, d: 2 },
            Family::SquarefreeVeronese { n: 4, d: 3 },
            Family::SquarefreeVeronese { n: 5, d: 2 },
            Family::SquarefreeVeronese { n: 5, d: 4 },
            Family::VeroneseType {
                n: 2,
                d: 3,
                caps: vec![3, 3],
            },
            Family::VeroneseType {
                n: 3,
                d: 2,
                caps: vec![2, 2, 2],
            },
            Family::VeroneseType {
                n: 3,
                d: 3,
                caps: vec![2, 2, 2],
            },
            Family::VeroneseType {
                n: 3,
                d: 4,
                caps: vec![2, 2, 2],
            },
            Family::VeroneseType {
                n: 4,
                d: 2,
                caps: vec![1, 2, 2, 1],
            },
            Family::Power {
                base: Box::new(Family::SquarefreeVeronese { n: 3, d: 2 }),
                k: 2,
            },
            Family::Power {
                base: Box::new(Family::SquarefreeVeronese { n: 4, d: 3 }),
                k: 2,
            },
            Family::Principal {
                n: 3,
                max_degree: 3,
                count: 12,
            },
            Family::Principal {
                n: 4,
                max_degree: 2,
                count: 12,
            },
            Family::Principal {
                n: 5,
                max_degree: 1,
                count: 12,
            },
            Family::Random {
                n: 3,
                t: 2,
                max_exponent: 2,
                count: 80,
            },
            Family::Random {
                n: 3,
                t: 3,
                max_exponent: 2,
                count: 80,
            },
            Family::Random {
                n: 4,
                t: 2,
                max_exponent: 3,
                count: 80,
            },
            Family::Random {
                n: 4,
                t: 3,
                max_exponent: 2,
                count: 80,
            },
            Family::Random {
                n: 4,
                t: 4,
                max_exponent: 1,
                count: 60,
            },
            Family::Random {
                n: 5,
                t: 2,
                max_exponent: 2,
                count: 60,
            },
            Family::Random {
                n: 5,
                t: 3,
                max_exponent: 1,
                count: 60,
            },
        ],
    };
    generate(&spec).expect("the frozen corpus generates")
}
