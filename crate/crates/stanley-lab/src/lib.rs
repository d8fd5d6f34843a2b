//! Stanley decompositions of monomial quotient rings.
//!
//! This crate computes with monomial ideals in a polynomial ring: it
//! recognizes the polymatroidal and weakly polymatroidal classes, measures
//! depth through linear quotients or a homological oracle, constructs Stanley
//! decompositions whose depth provably meets `depth(S/I)`, searches for the
//! exact Stanley depth on small quotients, and batch-verifies all of the
//! above over seeded corpora.
//!
//! # Quick start
//!
//! ```
//! use stanley_lab::decomposer::decompose;
//! use stanley_lab::homology::depth;
//! use stanley_lab::monomial::{Monomial, MonomialIdeal, VariableContext};
//!
//! // I = (x1*x2, x1*x3, x2*x3) in K[x1,x2,x3]
//! let ideal = MonomialIdeal::minimalize(
//!     VariableContext::standard(3),
//!     [[1, 1, 0], [1, 0, 1], [0, 1, 1]].map(|e| Monomial::new(e.to_vec())),
//! );
//! let (decomposition, _trace) = decompose(&ideal).unwrap();
//! let report = depth(&ideal).unwrap();
//! assert!(decomposition.sdepth() >= report.depth);
//! println!("{decomposition}"); // 1*K[x3] + x2*K[x2] + x1*K[x1]
//! ```
//!
//! # Examples
//!
//! Each major capability has one runnable example:
//!
//! ```text
//! examples/
//! ├── monomial_arithmetic.rs       # Exponent vectors, ideals, colon/deletion
//! ├── classify_ideal.rs            # Class membership with witnesses
//! ├── depth_and_betti.rs           # Depth by formula and by oracle
//! ├── exact_sdepth.rs              # Exhaustive interval-partition search
//! ├── decompose_walkthrough.rs     # The constructive decomposition, traced
//! ├── powers_are_polymatroidal.rs  # Class closure under powers
//! ├── corpus_suite.rs              # Seeded corpora and batch verification
//! └── data/                        # Ideal files and a corpus spec
//! ```
//!
//! - **`monomial_arithmetic`** - Monomials, minimal generators, membership,
//!   colon and deletion ideals, powers, and the ideal file format
//! - **`classify_ideal`** - Polymatroidal and weakly polymatroidal checks,
//!   linear quotients, and the witnesses returned on failure
//! - **`depth_and_betti`** - `depth(S/I)` from linear quotients, multigraded
//!   Betti numbers over any characteristic as a cross-check
//! - **`exact_sdepth`** - The characteristic poset and the exact Stanley
//!   depth search, including its timeout fallback
//! - **`decompose_walkthrough`** - The recursive construction step by step,
//!   with its trace and the partition check
//! - **`powers_are_polymatroidal`** - Squares, cubes, and higher powers stay
//!   in class and keep the depth guarantee
//! - **`corpus_suite`** - Generate a reproducible corpus, sweep it in
//!   parallel, and write CSV/JSON reports
//!
//! ```bash
//! cargo run -p stanley-lab --example monomial_arithmetic
//! cargo run -p stanley-lab --example classify_ideal
//! cargo run -p stanley-lab --example depth_and_betti
//! cargo run -p stanley-lab --example exact_sdepth
//! cargo run -p stanley-lab --example decompose_walkthrough
//! cargo run -p stanley-lab --example powers_are_polymatroidal
//! cargo run -p stanley-lab --example corpus_suite
//! ```
//!
//! # Modules
//!
//! - [`monomial`] - Exponent-vector monomials, variable contexts, minimal
//!   generating sets, and the ideal text-file format
//! - [`classify`] - The polymatroidal / weakly polymatroidal / linear
//!   quotients hierarchy, with witness-carrying checkers
//! - [`homology`] - Projective dimension and depth, via the linear-quotients
//!   formula or multigraded Betti numbers from interval homology
//! - [`stanley`] - Stanley spaces and decompositions, the partition verifier,
//!   and the exact Stanley depth search
//! - [`decomposer`] - The recursive construction that realizes
//!   `sdepth(S/I) >= depth(S/I)` on weakly polymatroidal ideals
//! - [`corpus`] - Seeded, reproducible families of test ideals
//! - [`suite`] - Parallel batch verification with CSV/JSON reporting
//!
//! The same functionality is exposed on the command line as `stanley-lab`
//! with the subcommands `classify`, `depth`, `sdepth`, `decompose`, and
//! `suite`; see the README for the file formats and exit codes.

pub mod classify;
pub mod corpus;
pub mod decomposer;
pub mod homology;
pub mod monomial;
pub mod stanley;
pub mod suite;
