//! Constructive Stanley decompositions of `S/I` for weakly polymatroidal
//! ideals, with a full recursion trace.
//!
//! The construction recurses on the first (largest) variable of the current
//! ring. Writing `x` for that variable and `I` for the current ideal:
//!
//! * zero ideal: the whole ring is the single space `1 * K[all variables]`;
//! * `x` divides no generator: decompose the deletion (the same generators in
//!   the smaller ring) and re-attach `x` as a free variable of every space;
//! * `x` is itself a generator: no standard monomial involves `x`, so the
//!   decomposition of the deletion embeds with `x` exponent zero and `x` not
//!   free;
//! * otherwise split the standard monomials by `x`-degree: degree zero is the
//!   deletion, degree at least one is `x` times the quotient by `I : x`.
//!
//! Deletion and quotient by a variable both preserve weak polymatroidality,
//! and the split strictly shrinks either the variable count or the total
//! generator degree, so the recursion terminates in at most `n + total degree`
//! levels. The preservation facts are re-checked at every recursion entry, the
//! assembled decomposition is verified point-by-point at the root, and its
//! depth is checked against the depth of `S/I` — for weakly polymatroidal
//! ideals the construction never does worse.

use std::fmt;

use thiserror::Error;

use crate::classify::{check_weakly_polymatroidal, is_polymatroidal, WeakPolyViolation};
use crate::homology::{depth, Depth, DepthReport, HomologyError};
use crate::monomial::{ExponentOverflow, Monomial, MonomialIdeal};
use crate::stanley::{
    exact_sdepth_quotient, verify_decomposition, SdepthConfig, SdepthOutcome,
    StanleyDecomposition, StanleySpace, VerificationError, VerificationViolation,
    DEFAULT_POINT_CAP,
};

/// Which rule fired at a node of the recursion tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TraceCase {
    ZeroIdeal,
    UnitIdeal,
    FreeVariable,
    VariableGenerator,
    Split,
}

/// One node of the recursion tree: the ideal seen at this node, the rule that
/// fired, the variable the rule acted on, and the depth bound the subtree
/// achieved.
#[derive(Debug, Clone)]
pub struct TraceNode {
    pub ideal: MonomialIdeal,
    pub case: TraceCase,
    pub variable: Option<String>,
    pub bound: Depth,
    pub children: Vec<TraceNode>,
}

impl TraceNode {
    fn render_into(&self, level: usize, out: &mut String) {
        for _ in 0..level {
            out.push_str("  ");
        }
        let phrase = match (self.case, &self.variable) {
            (TraceCase::ZeroIdeal, _) => "whole ring as one space".to_string(),
            (TraceCase::UnitIdeal, _) => "zero module".to_string(),
            (TraceCase::FreeVariable, Some(v)) => format!("{v} is free"),
            (TraceCase::VariableGenerator, Some(v)) => format!("{v} is a generator"),
            (TraceCase::Split, Some(v)) => format!("split on {v}"),
            (case, None) => panic!("trace case {case:?} is missing its variable"),
        };
        out.push_str(&format!(
            "{} in {} — {phrase}; bound {}\n",
            self.ideal,
            self.ideal.context(),
            self.bound
        ));
        for child in &self.children {
            child.render_into(level + 1, out);
        }
    }

    /// Longest root-to-leaf path length, counting the root as one.
    pub fn height(&self) -> usize {
        1 + self
            .children
            .iter()
            .map(TraceNode::height)
            .max()
            .unwrap_or(0)
    }
}

/// The full recursion tree of a constructive decomposition.
#[derive(Debug, Clone)]
pub struct DecompositionTrace {
    root: TraceNode,
}

impl DecompositionTrace {
    pub fn root(&self) -> &TraceNode {
        &self.root
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        self.root.render_into(0, &mut out);
        out
    }
}

impl fmt::Display for DecompositionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

#[derive(Debug, Error)]
pub enum DecomposeError {
    #[error(
        "the ideal is not weakly polymatroidal: witness pair {} over {} at variable index {}",
        .0.upper, .0.lower, .0.slot
    )]
    NotWeaklyPolymatroidal(WeakPolyViolation),
    #[error("the unit ideal presents the zero module; there is nothing to decompose")]
    UnitIdeal,
    #[error("constructed decomposition failed verification: {0}")]
    Verification(VerificationViolation),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error(
        "the recursion measure (variables plus total generator degree = {measure}) \
         exceeds the cap of {cap}"
    )]
    RecursionTooDeep { measure: u64, cap: u64 },
    #[error(transparent)]
    Overflow(#[from] ExponentOverflow),
    #[error(transparent)]
    Depth(#[from] HomologyError),
}

/// Upper bound on `n + total generator degree`, which bounds the recursion
/// depth of the construction.
const MAX_RECURSION_MEASURE: u64 = 10_000;

/// Stack for the recursion worker: the colon chain can be as long as the
/// recursion measure, far deeper than a default thread stack.
const WORKER_STACK_BYTES: usize = 128 * 1024 * 1024;

/// Construct a Stanley decomposition of `S/I` for a weakly polymatroidal (or
/// zero) ideal `I`, returning the decomposition together with the recursion
/// trace. The result is verified before it is returned, and its depth is
/// checked against `depth(S/I)`.
pub fn decompose(
    ideal: &MonomialIdeal,
) -> Result<(StanleyDecomposition, DecompositionTrace), DecomposeError> {
    if ideal.is_unit() {
        return Err(DecomposeError::UnitIdeal);
    }
    if !ideal.is_zero() {
        check_weakly_polymatroidal(ideal).map_err(DecomposeError::NotWeaklyPolymatroidal)?;
    }
    let measure = ideal.n() as u64 + ideal.gens().iter().map(Monomial::degree).sum::<u64>();
    if measure > MAX_RECURSION_MEASURE {
        return Err(DecomposeError::RecursionTooDeep {
            measure,
            cap: MAX_RECURSION_MEASURE,
        });
    }
    let owned = ideal.clone();
    std::thread::Builder::new()
        .name("stanley-decompose".to_string())
        .stack_size(WORKER_STACK_BYTES)
        .spawn(move || decompose_checked(&owned))
        .expect("spawning the decomposition worker failed")
        .join()
        .unwrap_or_else(|payload| std::panic::resume_unwind(payload))
}

/// The body of [`decompose`], run on a worker thread sized for the recursion.
fn decompose_checked(
    ideal: &MonomialIdeal,
) -> Result<(StanleyDecomposition, DecompositionTrace), DecomposeError> {
    let (spaces, bound, root) = decompose_inner(ideal, true)?;
    let decomposition = StanleyDecomposition::new(ideal.clone(), spaces);
    if decomposition.sdepth() != bound {
        return Err(DecomposeError::Invariant(format!(
            "trace bound {bound} disagrees with the assembled depth {}",
            decomposition.sdepth()
        )));
    }
    match verify_decomposition(ideal, decomposition.spaces(), DEFAULT_POINT_CAP) {
        Ok(()) => {}
        // A box past the cap cannot be checked point-by-point; the
        // construction itself is the argument in that regime.
        Err(VerificationError::BoxTooLarge { .. }) => {}
        Err(VerificationError::Violation(v)) => return Err(DecomposeError::Verification(v)),
    }
    let report = depth(ideal)?;
    if decomposition.sdepth() < report.depth {
        return Err(DecomposeError::Invariant(format!(
            "constructed depth {} fell below depth {}",
            decomposition.sdepth(),
            report.depth
        )));
    }
    Ok((decomposition, DecompositionTrace { root }))
}

/// The recursive worker. `is_root` skips the weak polymatroidality re-check
/// at the root (the caller already did it and wants the witness error there).
fn decompose_inner(
    ideal: &MonomialIdeal,
    is_root: bool,
) -> Result<(Vec<StanleySpace>, Depth, TraceNode), DecomposeError> {
    let n = ideal.n();

    if ideal.is_zero() {
        let space = StanleySpace::new(Monomial::one(n), 0..n);
        let node = TraceNode {
            ideal: ideal.clone(),
            case: TraceCase::ZeroIdeal,
            variable: None,
            bound: Depth::Finite(n),
            children: Vec::new(),
        };
        return Ok((vec![space], Depth::Finite(n), node));
    }
    if ideal.is_unit() {
        return Err(DecomposeError::Invariant(
            "the unit ideal appeared inside the recursion".to_string(),
        ));
    }
    if !is_root {
        // Deletions and variable quotients of weakly polymatroidal ideals
        // stay weakly polymatroidal; hold the construction to that.
        if let Err(v) = check_weakly_polymatroidal(ideal) {
            return Err(DecomposeError::Invariant(format!(
                "a derived ideal lost weak polymatroidality: {} (witness pair {} over {})",
                ideal, v.upper, v.lower
            )));
        }
    }

    let name = ideal.context().name(0).to_string();
    let first_variable = Monomial::variable(n, 0);

    if !ideal.support_union().contains(&0) {
        // The first variable divides no generator: it is free.
        let deletion = ideal.delete_variable(0);
        let (inner, bound, child) = decompose_inner(&deletion, false)?;
        let spaces: Vec<StanleySpace> =
            inner.iter().map(|s| s.insert_variable(0, true)).collect();
        let bound = match bound {
            Depth::Finite(b) => Depth::Finite(b + 1),
            Depth::Infinite => Depth::Infinite,
        };
        let node = TraceNode {
            ideal: ideal.clone(),
            case: TraceCase::FreeVariable,
            variable: Some(name),
            bound,
            children: vec![child],
        };
        return Ok((spaces, bound, node));
    }

    if ideal.gens().contains(&first_variable) {
        // The first variable is a generator: every standard monomial avoids
        // it, so the deletion's decomposition embeds without freeing it.
        let deletion = ideal.delete_variable(0);
        let (inner, bound, child) = decompose_inner(&deletion, false)?;
        let spaces: Vec<StanleySpace> =
            inner.iter().map(|s| s.insert_variable(0, false)).collect();
        let node = TraceNode {
            ideal: ideal.clone(),
            case: TraceCase::VariableGenerator,
            variable: Some(name),
            bound,
            children: vec![child],
        };
        return Ok((spaces, bound, node));
    }

    // Split by the degree in the first variable: degree zero is the deletion,
    // degree at least one is the variable times the quotient S/(I : x).
    let deletion = ideal.delete_variable(0);
    let (deletion_spaces, deletion_bound, deletion_child) = decompose_inner(&deletion, false)?;
    let embedded: Vec<StanleySpace> = deletion_spaces
        .iter()
        .map(|s| s.insert_variable(0, false))
        .collect();

    let colon = ideal.colon_by_variable(0);
    let (colon_spaces, colon_bound, colon_child) = decompose_inner(&colon, false)?;
    let mut spaces = embedded;
    for s in &colon_spaces {
        spaces.push(s.multiply_by_variable(0)?);
    }

    let bound = deletion_bound.min(colon_bound);
    let node = TraceNode {
        ideal: ideal.clone(),
        case: TraceCase::Split,
        variable: Some(name),
        bound,
        children: vec![deletion_child, colon_child],
    };
    Ok((spaces, bound, node))
}

/// Options for [`verify_conjecture`].
#[derive(Debug, Clone, Default)]
pub struct ConjectureOptions {
    /// Also compute the exact Stanley depth (subject to the config's caps).
    pub exact: bool,
    pub sdepth: SdepthConfig,
}

/// Everything checked for one ideal: classification, depth, the constructed
/// decomposition's depth, and optionally the exact Stanley depth.
#[derive(Debug, Clone)]
pub struct ConjectureReport {
    pub polymatroidal: bool,
    pub pd: usize,
    pub depth: Depth,
    pub constructed_sdepth: Depth,
    pub num_spaces: usize,
    /// Present when requested and the poset fit its cap. The value inside is
    /// exact or a certified lower bound, per its `exact` flag.
    pub exact_sdepth: Option<SdepthOutcome>,
    /// Whether every computed Stanley depth bound sits at or above the depth,
    /// and the exact value (when proven exact) at or above the constructed
    /// bound.
    pub conjecture_holds: bool,
}

/// Decompose `S/I`, compute its depth, optionally compute exact Stanley
/// depth, and check the inequalities between them.
pub fn verify_conjecture(
    ideal: &MonomialIdeal,
    options: &ConjectureOptions,
) -> Result<ConjectureReport, DecomposeError> {
    let (decomposition, _trace) = decompose(ideal)?;
    let constructed = decomposition.sdepth();
    let DepthReport { pd, depth, .. } = depth(ideal)?;
    let polymatroidal = !ideal.is_zero() && is_polymatroidal(ideal);

    let exact_sdepth = if options.exact {
        // An oversized poset skips the search rather than failing the report.
        exact_sdepth_quotient(ideal, &options.sdepth).ok()
    } else {
        None
    };

    let mut conjecture_holds = constructed >= depth;
    if let Some(outcome) = &exact_sdepth {
        conjecture_holds &= outcome.value >= depth || !outcome.exact;
        if outcome.exact {
            conjecture_holds &= outcome.value >= constructed;
        }
    }

    Ok(ConjectureReport {
        polymatroidal,
        pd,
        depth,
        constructed_sdepth: constructed,
        num_spaces: decomposition.num_spaces(),
        exact_sdepth,
        conjecture_holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::VariableContext;

    fn ideal(n: usize, rows: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(
            VariableContext::standard(n),
            rows.iter().map(|r| Monomial::new(r.to_vec())),
        )
    }

    fn triangle() -> MonomialIdeal {
        ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]])
    }

    #[test]
    fn decompose_zero_ideal_is_whole_ring() {
        let z = MonomialIdeal::zero(VariableContext::standard(2));
        let (d, trace) = decompose(&z).unwrap();
        assert_eq!(d.render_lines(), "0 0 | x1 x2\n");
        assert_eq!(trace.root().case, TraceCase::ZeroIdeal);
        assert_eq!(d.sdepth(), Depth::Finite(2));
    }

    #[test]
    fn decompose_unit_ideal_is_refused() {
        let u = MonomialIdeal::unit(VariableContext::standard(2));
        assert!(matches!(decompose(&u), Err(DecomposeError::UnitIdeal)));
    }

    #[test]
    fn decompose_one_edge() {
        let i = ideal(2, &[&[1, 1]]);
        let (d, trace) = decompose(&i).unwrap();
        assert_eq!(d.render_lines(), "0 0 | x2\n1 0 | x1\n");
        assert_eq!(d.sdepth(), Depth::Finite(1));
        assert_eq!(trace.root().case, TraceCase::Split);
        assert_eq!(trace.root().variable.as_deref(), Some("x1"));
    }

    #[test]
    fn decompose_triangle_reproduces_hand_decomposition() {
        let (d, trace) = decompose(&triangle()).unwrap();
        assert_eq!(d.render_lines(), "0 0 0 | x3\n0 1 0 | x2\n1 0 0 | x1\n");
        assert_eq!(d.sdepth(), Depth::Finite(1));
        // Split at the root, with the deletion and the quotient as children.
        assert_eq!(trace.root().case, TraceCase::Split);
        assert_eq!(trace.root().children.len(), 2);
        assert!(trace.root().height() <= 3 + 6);
    }

    #[test]
    fn decompose_variable_generator_case() {
        let i = ideal(2, &[&[1, 0]]);
        let (d, trace) = decompose(&i).unwrap();
        assert_eq!(trace.root().case, TraceCase::VariableGenerator);
        // S/(x1) = K[x2]: one space, x2 free.
        assert_eq!(d.render_lines(), "0 0 | x2\n");
    }

    #[test]
    fn decompose_free_variable_case() {
        let i = ideal(2, &[&[0, 2]]);
        let (d, trace) = decompose(&i).unwrap();
        assert_eq!(trace.root().case, TraceCase::FreeVariable);
        assert_eq!(d.sdepth(), Depth::Finite(1));
        assert_eq!(d.render_lines(), "0 0 | x1\n0 1 | x1\n");
    }

    #[test]
    fn decompose_rejects_non_weakly_polymatroidal_input() {
        let i = ideal(2, &[&[2, 0], &[0, 2]]);
        match decompose(&i) {
            Err(DecomposeError::NotWeaklyPolymatroidal(v)) => {
                assert_eq!(v.upper, Monomial::new(vec![2, 0]));
                assert_eq!(v.lower, Monomial::new(vec![0, 2]));
            }
            other => panic!("expected a weak polymatroidality witness, got {other:?}"),
        }
    }

    #[test]
    fn decompose_meets_depth_on_samples() {
        for (i, want) in [
            (triangle(), Depth::Finite(1)),
            (ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]), Depth::Finite(0)),
            (ideal(3, &[&[1, 1, 1]]), Depth::Finite(2)),
            (ideal(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]), Depth::Finite(0)),
            // x2 * (x1, x3, x4): depth = 4 - (pd(S/(x1,x3,x4) shifted) = 3).
            (ideal(4, &[&[1, 1, 0, 0], &[0, 1, 1, 0], &[0, 1, 0, 1]]), Depth::Finite(1)),
        ] {
            let (d, _) = decompose(&i).unwrap();
            let report = depth(&i).unwrap();
            assert_eq!(report.depth, want, "ideal {i}");
            assert!(d.sdepth() >= report.depth, "ideal {i}");
        }
    }

    #[test]
    fn trace_renders_each_case_line() {
        let (_, trace) = decompose(&triangle()).unwrap();
        let text = trace.render();
        assert!(text.starts_with(
            "(x1*x2, x1*x3, x2*x3) in K[x1,x2,x3] — split on x1; bound 1\n"
        ));
        assert!(text.contains("(x2*x3) in K[x2,x3] — split on x2; bound 1"));
        assert!(text.contains("whole ring as one space"));
    }

    #[test]
    fn conjecture_report_for_triangle() {
        let options = ConjectureOptions {
            exact: true,
            ..ConjectureOptions::default()
        };
        let report = verify_conjecture(&triangle(), &options).unwrap();
        assert!(report.polymatroidal);
        assert_eq!(report.pd, 2);
        assert_eq!(report.depth, Depth::Finite(1));
        assert_eq!(report.constructed_sdepth, Depth::Finite(1));
        assert_eq!(report.num_spaces, 3);
        let exact = report.exact_sdepth.as_ref().unwrap();
        assert!(exact.exact);
        assert_eq!(exact.value, Depth::Finite(1));
        assert!(report.conjecture_holds);
    }

    #[test]
    fn conjecture_report_without_exact_search() {
        // Mixed generator degrees rule out the exchange property outright.
        let i = ideal(2, &[&[1, 0], &[0, 2]]);
        let report = verify_conjecture(&i, &ConjectureOptions::default()).unwrap();
        assert!(report.exact_sdepth.is_none());
        assert!(report.conjecture_holds);
        assert!(!report.polymatroidal);
    }

    #[test]
    fn conjecture_report_skips_exact_when_poset_is_capped() {
        let i = ideal(2, &[&[2000, 0], &[1999, 1]]);
        let options = ConjectureOptions {
            exact: true,
            sdepth: SdepthConfig {
                point_cap: 100,
                ..SdepthConfig::default()
            },
        };
        let report = verify_conjecture(&i, &options).unwrap();
        assert!(report.exact_sdepth.is_none());
    }
}
