//! Stanley spaces, Stanley decompositions, verification, and exact Stanley
//! depth of monomial quotients `S/I`.
//!
//! A Stanley space `u * K[Z]` is the set of monomials `u * w` where `w` runs
//! over monomials in the free variables `Z`. A Stanley decomposition of `S/I`
//! partitions the standard monomials (those outside `I`) into such spaces, and
//! its depth is the smallest `|Z|`. The Stanley depth of `S/I` is the best
//! value over all decompositions.
//!
//! Exact Stanley depth is computed combinatorially: the standard monomials
//! inside the box bounded by the generator exponent maximum `g` form a finite
//! poset, and Stanley depth is the largest `k` such that this poset splits
//! into intervals `[a, b]` whose top touches the bound in at least `k`
//! coordinates. The search here restricts the tops to *reduced* ones
//! (`b_i` is either `a_i` or `g_i`), which does not change the optimum: any
//! interval refines into reduced ones whose tops touch the bound at least as
//! often. Reduced intervals convert one-to-one into Stanley spaces
//! `x^a * K[{i : b_i = g_i}]`, so every reported value ships with a witness
//! decomposition, and the witness is verified before it is returned.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::homology::Depth;
use crate::monomial::{exponent_box, ExponentOverflow, Monomial, MonomialIdeal};

/// A Stanley space `u * K[Z]`: a generator monomial and a set of free
/// variable indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct StanleySpace {
    pub generator: Monomial,
    pub free: BTreeSet<usize>,
}

impl StanleySpace {
    pub fn new(generator: Monomial, free: impl IntoIterator<Item = usize>) -> Self {
        let free: BTreeSet<usize> = free.into_iter().collect();
        if let Some(&max) = free.iter().next_back() {
            assert!(max < generator.arity(), "free variable index out of range");
        }
        StanleySpace { generator, free }
    }

    /// Whether the monomial `m` lies in this space: the generator divides `m`
    /// and the quotient only involves free variables.
    pub fn contains(&self, m: &Monomial) -> bool {
        if !self.generator.divides(m) {
            return false;
        }
        m.exponents()
            .iter()
            .zip(self.generator.exponents())
            .enumerate()
            .all(|(i, (&e, &u))| e == u || self.free.contains(&i))
    }

    /// The same space viewed in a ring with one more variable spliced in at
    /// `index`. The new variable gets exponent zero; it joins the free set
    /// only when `free` is set.
    pub fn insert_variable(&self, index: usize, free: bool) -> StanleySpace {
        let mut shifted: BTreeSet<usize> = self
            .free
            .iter()
            .map(|&i| if i >= index { i + 1 } else { i })
            .collect();
        if free {
            shifted.insert(index);
        }
        StanleySpace {
            generator: self.generator.insert_variable(index),
            free: shifted,
        }
    }

    /// The space `x_index * self`.
    pub fn multiply_by_variable(&self, index: usize) -> Result<StanleySpace, ExponentOverflow> {
        Ok(StanleySpace {
            generator: self.generator.mul_var(index)?,
            free: self.free.clone(),
        })
    }
}

/// A list of Stanley spaces presented as a decomposition of `S/I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StanleyDecomposition {
    ideal: MonomialIdeal,
    spaces: Vec<StanleySpace>,
}

impl StanleyDecomposition {
    pub fn new(ideal: MonomialIdeal, spaces: Vec<StanleySpace>) -> Self {
        for space in &spaces {
            assert_eq!(
                space.generator.arity(),
                ideal.n(),
                "space arity differs from the ambient ring"
            );
        }
        StanleyDecomposition { ideal, spaces }
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn spaces(&self) -> &[StanleySpace] {
        &self.spaces
    }

    pub fn num_spaces(&self) -> usize {
        self.spaces.len()
    }

    /// The depth of this decomposition: the smallest free-set size. The empty
    /// decomposition (of the zero module) has infinite depth.
    pub fn sdepth(&self) -> Depth {
        self.spaces
            .iter()
            .map(|s| s.free.len())
            .min()
            .map_or(Depth::Infinite, Depth::Finite)
    }

    /// One line per space: the generator exponents, a pipe, then the free
    /// variable names in index order. Lines are sorted for stable output.
    pub fn render_lines(&self) -> String {
        let ctx = self.ideal.context();
        let mut sorted: Vec<&StanleySpace> = self.spaces.iter().collect();
        sorted.sort();
        let mut out = String::new();
        for space in sorted {
            let exps: Vec<String> = space
                .generator
                .exponents()
                .iter()
                .map(|e| e.to_string())
                .collect();
            out.push_str(&exps.join(" "));
            out.push_str(" |");
            for &i in &space.free {
                out.push(' ');
                out.push_str(ctx.name(i));
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for StanleyDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ctx = self.ideal.context();
        let mut sorted: Vec<&StanleySpace> = self.spaces.iter().collect();
        sorted.sort();
        let mut first = true;
        for space in sorted {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}*K[", space.generator.display(ctx))?;
            let names: Vec<&str> = space.free.iter().map(|&i| ctx.name(i)).collect();
            write!(f, "{}]", names.join(","))?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A concrete defect found while verifying a claimed decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerificationViolation {
    /// A space generator exceeds the checkable box: a bound coordinate may be
    /// at most `g_i` when the variable is not free and `g_i + 1` when it is.
    /// (Spaces beyond these bounds could cover points the box check never
    /// sees, so they are rejected outright.)
    #[error("space {space} reaches outside the verification box at variable index {index}")]
    SpaceOutsideBox { space: usize, index: usize },
    #[error("space {space} covers the ideal member {point}")]
    CoversIdealMember { space: usize, point: Monomial },
    #[error("standard monomial {point} is not covered by any space")]
    Uncovered { point: Monomial },
    #[error("standard monomial {point} is covered by spaces {spaces:?}")]
    MultiplyCovered { point: Monomial, spaces: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerificationError {
    #[error("verification box has {size} points, more than the cap of {cap}")]
    BoxTooLarge { size: u128, cap: u128 },
    #[error(transparent)]
    Violation(#[from] VerificationViolation),
}

/// Default point cap shared by the verifier box and the characteristic poset.
pub const DEFAULT_POINT_CAP: u128 = 1_000_000;

/// Check that `spaces` is a genuine Stanley decomposition of `S/I`.
///
/// The check runs over the finite box with `0 <= e_i <= g_i + 1`, where `g`
/// is the coordinatewise maximum of the generator exponents. Inside the box
/// every point must be covered exactly once if it is a standard monomial and
/// zero times otherwise. Spaces are first required to sit inside the box in
/// the sharp sense of [`VerificationViolation::SpaceOutsideBox`]; given that,
/// box-exactness implies exactness everywhere, because clamping any exponent
/// vector down to the box preserves both ideal membership and membership in
/// each space.
pub fn verify_decomposition(
    ideal: &MonomialIdeal,
    spaces: &[StanleySpace],
    point_cap: u128,
) -> Result<(), VerificationError> {
    let n = ideal.n();
    let g = ideal.exponent_bound();
    for space in spaces {
        assert_eq!(
            space.generator.arity(),
            n,
            "space arity differs from the ambient ring"
        );
    }

    for (s, space) in spaces.iter().enumerate() {
        for (i, (&u, &gi)) in space.generator.exponents().iter().zip(&g).enumerate() {
            let cap = if space.free.contains(&i) { gi + 1 } else { gi };
            if u > cap {
                return Err(VerificationViolation::SpaceOutsideBox { space: s, index: i }.into());
            }
        }
    }

    let bounds: Vec<u32> = g.iter().map(|&gi| gi + 1).collect();
    let size: u128 = bounds.iter().map(|&b| b as u128 + 1).product();
    if size > point_cap {
        return Err(VerificationError::BoxTooLarge {
            size,
            cap: point_cap,
        });
    }

    for exps in exponent_box(&bounds) {
        let point = Monomial::new(exps);
        let in_ideal = ideal.contains(&point);
        let covering: Vec<usize> = spaces
            .iter()
            .enumerate()
            .filter(|(_, sp)| sp.contains(&point))
            .map(|(s, _)| s)
            .collect();
        if in_ideal {
            if let Some(&s) = covering.first() {
                return Err(VerificationViolation::CoversIdealMember { space: s, point }.into());
            }
        } else if covering.is_empty() {
            return Err(VerificationViolation::Uncovered { point }.into());
        } else if covering.len() > 1 {
            return Err(VerificationViolation::MultiplyCovered {
                point,
                spaces: covering,
            }
            .into());
        }
    }
    Ok(())
}

/// The finite poset of standard monomials below the exponent bound `g`,
/// listed in ascending pure lexicographic order (a linear extension of
/// divisibility).
#[derive(Debug, Clone)]
pub struct CharacteristicPoset {
    g: Vec<u32>,
    elements: Vec<Vec<u32>>,
}

impl CharacteristicPoset {
    pub fn bound(&self) -> &[u32] {
        &self.g
    }

    pub fn elements(&self) -> &[Vec<u32>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SdepthError {
    #[error("characteristic poset box has {size} points, more than the cap of {cap}")]
    PosetTooLarge { size: u128, cap: u128 },
}

/// Build the characteristic poset of `S/I`: all exponent vectors `a <= g`
/// with `x^a` outside `I`. Fails when the bounding box exceeds `point_cap`.
pub fn characteristic_poset(
    ideal: &MonomialIdeal,
    point_cap: u128,
) -> Result<CharacteristicPoset, SdepthError> {
    assert!(!ideal.is_unit(), "the unit ideal has no standard monomials");
    let g = ideal.exponent_bound();
    let size: u128 = g.iter().map(|&gi| gi as u128 + 1).product();
    if size > point_cap {
        return Err(SdepthError::PosetTooLarge {
            size,
            cap: point_cap,
        });
    }
    let elements: Vec<Vec<u32>> = exponent_box(&g)
        .filter(|e| !ideal.contains(&Monomial::new(e.clone())))
        .collect();
    Ok(CharacteristicPoset { g, elements })
}

/// Tuning knobs for the exact Stanley depth search.
#[derive(Debug, Clone)]
pub struct SdepthConfig {
    /// Cap on the characteristic poset box (and the verification box).
    pub point_cap: u128,
    /// Wall-clock budget for the interval-partition search. On expiry the
    /// search falls back to a greedy partition, reported as inexact.
    pub timeout: Duration,
    /// Cap on the number of failed search states remembered per target value.
    pub memo_cap: usize,
}

impl Default for SdepthConfig {
    fn default() -> Self {
        SdepthConfig {
            point_cap: DEFAULT_POINT_CAP,
            timeout: Duration::from_secs(60),
            memo_cap: 200_000,
        }
    }
}

/// Result of a Stanley depth computation.
#[derive(Debug, Clone)]
pub struct SdepthOutcome {
    /// The Stanley depth when `exact`, otherwise a certified lower bound.
    pub value: Depth,
    /// Whether the search proved optimality or timed out into the greedy
    /// fallback.
    pub exact: bool,
    /// A verified decomposition attaining `value`.
    pub decomposition: StanleyDecomposition,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct ChosenInterval {
    lower: usize,
    raised_mask: u32,
}

struct IntervalSearch<'a> {
    ideal: &'a MonomialIdeal,
    g: Vec<u32>,
    elements: Vec<Vec<u32>>,
    index_of: HashMap<Vec<u32>, usize>,
    deadline: Instant,
    memo_cap: usize,
}

enum SearchOutcome {
    Found,
    Exhausted,
    TimedOut,
}

impl<'a> IntervalSearch<'a> {
    fn new(ideal: &'a MonomialIdeal, poset: &CharacteristicPoset, deadline: Instant, memo_cap: usize) -> Self {
        let index_of = poset
            .elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        IntervalSearch {
            ideal,
            g: poset.g.clone(),
            elements: poset.elements.clone(),
            index_of,
            deadline,
            memo_cap,
        }
    }

    fn n(&self) -> usize {
        self.g.len()
    }

    /// Positions where the bound still has room above `a`.
    fn raisable(&self, a: &[u32]) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.g[i] > a[i]).collect()
    }

    /// Rank of the reduced top over `a` obtained by raising `raised` (a mask
    /// into `raisable`): the number of coordinates equal to the bound.
    fn top_and_rank(&self, a: &[u32], raisable: &[usize], raised: u32) -> (Vec<u32>, usize) {
        let mut b = a.to_vec();
        for (bit, &pos) in raisable.iter().enumerate() {
            if raised & (1 << bit) != 0 {
                b[pos] = self.g[pos];
            }
        }
        let rank = b.iter().zip(&self.g).filter(|(x, y)| x == y).count();
        (b, rank)
    }

    /// Poset indices of all points in the reduced interval `[a, b]`.
    fn interval_points(&self, a: &[u32], b: &[u32]) -> Vec<usize> {
        let varying: Vec<usize> = (0..self.n()).filter(|&i| b[i] > a[i]).collect();
        let ranges: Vec<u32> = varying.iter().map(|&i| b[i] - a[i]).collect();
        let mut points = Vec::new();
        for offsets in exponent_box(&ranges) {
            let mut p = a.to_vec();
            for (k, &i) in varying.iter().enumerate() {
                p[i] = a[i] + offsets[k];
            }
            let idx = *self
                .index_of
                .get(&p)
                .expect("interval point is a standard monomial");
            points.push(idx);
        }
        points
    }

    /// Candidate reduced tops over `a` with rank at least `k`, ordered by
    /// rank descending then top descending in pure lexicographic order.
    fn candidates(&self, a: &[u32], k: usize) -> Vec<(Vec<u32>, u32, usize)> {
        let raisable = self.raisable(a);
        assert!(
            raisable.len() <= 24,
            "too many raisable coordinates for the interval search"
        );
        let mut out: Vec<(Vec<u32>, u32, usize)> = Vec::new();
        for raised in 0..(1u32 << raisable.len()) {
            let (b, rank) = self.top_and_rank(a, &raisable, raised);
            if rank < k {
                continue;
            }
            if self.ideal.contains(&Monomial::new(b.clone())) {
                continue;
            }
            out.push((b, raised, rank));
        }
        out.sort_by(|x, y| y.2.cmp(&x.2).then_with(|| y.0.cmp(&x.0)));
        out
    }

    fn try_cover(
        &self,
        k: usize,
        covered: &mut Vec<u64>,
        num_covered: &mut usize,
        chosen: &mut Vec<ChosenInterval>,
        failed: &mut HashSet<Vec<u64>>,
    ) -> SearchOutcome {
        if *num_covered == self.elements.len() {
            return SearchOutcome::Found;
        }
        if Instant::now() > self.deadline {
            return SearchOutcome::TimedOut;
        }
        if failed.contains(covered.as_slice()) {
            return SearchOutcome::Exhausted;
        }
        let first = (0..self.elements.len())
            .find(|&i| covered[i / 64] & (1 << (i % 64)) == 0)
            .expect("an uncovered element exists");
        let a = self.elements[first].clone();
        for (b, raised, _) in self.candidates(&a, k) {
            let points = self.interval_points(&a, &b);
            if points
                .iter()
                .any(|&i| covered[i / 64] & (1 << (i % 64)) != 0)
            {
                continue;
            }
            for &i in &points {
                covered[i / 64] |= 1 << (i % 64);
            }
            *num_covered += points.len();
            chosen.push(ChosenInterval {
                lower: first,
                raised_mask: raised,
            });
            match self.try_cover(k, covered, num_covered, chosen, failed) {
                SearchOutcome::Found => return SearchOutcome::Found,
                SearchOutcome::TimedOut => return SearchOutcome::TimedOut,
                SearchOutcome::Exhausted => {
                    chosen.pop();
                    for &i in &points {
                        covered[i / 64] &= !(1 << (i % 64));
                    }
                    *num_covered -= points.len();
                }
            }
        }
        if failed.len() < self.memo_cap {
            failed.insert(covered.clone());
        }
        SearchOutcome::Exhausted
    }

    /// Greedy partition with no rank threshold: always succeeds, value is the
    /// minimum rank among the chosen interval tops.
    fn greedy(&self) -> Vec<ChosenInterval> {
        let words = self.elements.len().div_ceil(64);
        let mut covered = vec![0u64; words];
        let mut num_covered = 0usize;
        let mut chosen = Vec::new();
        while num_covered < self.elements.len() {
            let first = (0..self.elements.len())
                .find(|&i| covered[i / 64] & (1 << (i % 64)) == 0)
                .expect("an uncovered element exists");
            let a = self.elements[first].clone();
            let mut picked = None;
            for (b, raised, _) in self.candidates(&a, 0) {
                let points = self.interval_points(&a, &b);
                if points
                    .iter()
                    .all(|&i| covered[i / 64] & (1 << (i % 64)) == 0)
                {
                    picked = Some((raised, points));
                    break;
                }
            }
            let (raised, points) = picked.expect("the singleton interval is always available");
            for &i in &points {
                covered[i / 64] |= 1 << (i % 64);
            }
            num_covered += points.len();
            chosen.push(ChosenInterval {
                lower: first,
                raised_mask: raised,
            });
        }
        chosen
    }

    /// Convert chosen intervals into Stanley spaces `x^a * K[{i : b_i = g_i}]`
    /// and report the minimum free-set size.
    fn spaces_from(&self, chosen: &[ChosenInterval]) -> (Vec<StanleySpace>, usize) {
        let mut spaces = Vec::with_capacity(chosen.len());
        let mut min_rank = usize::MAX;
        for interval in chosen {
            let a = &self.elements[interval.lower];
            let raisable = self.raisable(a);
            let (b, rank) = self.top_and_rank(a, &raisable, interval.raised_mask);
            min_rank = min_rank.min(rank);
            let free = (0..self.n()).filter(|&i| b[i] == self.g[i]);
            spaces.push(StanleySpace::new(Monomial::new(a.clone()), free));
        }
        (spaces, min_rank)
    }
}

/// Exact Stanley depth of `S/I`, with a verified witness decomposition.
///
/// The search tries target values from the best conceivable downward, so the
/// first feasible interval partition is optimal. If the wall-clock budget
/// runs out before a target is settled, a greedy partition is returned
/// instead and flagged as inexact (its value is a genuine lower bound).
pub fn exact_sdepth_quotient(
    ideal: &MonomialIdeal,
    config: &SdepthConfig,
) -> Result<SdepthOutcome, SdepthError> {
    if ideal.is_unit() {
        // S/S is the zero module: the empty decomposition, infinite depth.
        return Ok(SdepthOutcome {
            value: Depth::Infinite,
            exact: true,
            decomposition: StanleyDecomposition::new(ideal.clone(), Vec::new()),
        });
    }
    let poset = characteristic_poset(ideal, config.point_cap)?;
    let deadline = Instant::now() + config.timeout;
    let search = IntervalSearch::new(ideal, &poset, deadline, config.memo_cap);

    // The monomial 1 is minimal in the poset, so it is always a lower
    // endpoint; the best conceivable value is the best rank available there.
    let origin = vec![0u32; ideal.n()];
    let k_start = search
        .candidates(&origin, 0)
        .iter()
        .map(|(_, _, rank)| *rank)
        .max()
        .expect("the origin admits at least its singleton interval");

    let words = poset.len().div_ceil(64);
    let mut timed_out = false;
    for k in (0..=k_start).rev() {
        let mut covered = vec![0u64; words];
        let mut num_covered = 0usize;
        let mut chosen = Vec::new();
        let mut failed = HashSet::new();
        match search.try_cover(k, &mut covered, &mut num_covered, &mut chosen, &mut failed) {
            SearchOutcome::Found => {
                let (spaces, min_rank) = search.spaces_from(&chosen);
                assert!(min_rank >= k, "found partition misses its target rank");
                let outcome = SdepthOutcome {
                    value: Depth::Finite(min_rank),
                    exact: !timed_out,
                    decomposition: StanleyDecomposition::new(ideal.clone(), spaces),
                };
                check_witness(ideal, &outcome.decomposition, config);
                return Ok(outcome);
            }
            SearchOutcome::Exhausted => continue,
            SearchOutcome::TimedOut => {
                timed_out = true;
                break;
            }
        }
    }
    // Either every target failed (impossible: target 0 accepts singleton
    // covers) or the budget expired; fall back to the greedy partition.
    assert!(timed_out, "the search rejected the always-feasible target 0");
    let chosen = search.greedy();
    let (spaces, min_rank) = search.spaces_from(&chosen);
    let outcome = SdepthOutcome {
        value: Depth::Finite(min_rank),
        exact: false,
        decomposition: StanleyDecomposition::new(ideal.clone(), spaces),
    };
    check_witness(ideal, &outcome.decomposition, config);
    Ok(outcome)
}

/// Re-verify a witness decomposition; a failure here is a bug, not an input
/// problem. Skipped only when the verification box (one step larger than the
/// poset box) exceeds the cap — the search's own covering check has already
/// certified the partition in that case.
fn check_witness(ideal: &MonomialIdeal, decomposition: &StanleyDecomposition, config: &SdepthConfig) {
    match verify_decomposition(ideal, decomposition.spaces(), config.point_cap) {
        Ok(()) => {}
        Err(VerificationError::BoxTooLarge { .. }) => {}
        Err(VerificationError::Violation(v)) => {
            panic!("internal witness failed verification: {v}")
        }
    }
}

/// Re-express a decomposition of `S''/I''` as one of `S'/I'S'`, where `S'`
/// has one extra variable spliced in at `index`: every space picks up the new
/// variable as a free variable. This raises the depth of every space by one.
pub fn lift_free_variable(
    decomposition: &StanleyDecomposition,
    index: usize,
    name: &str,
) -> StanleyDecomposition {
    let ideal = decomposition.ideal().insert_variable(index, name);
    let spaces = decomposition
        .spaces()
        .iter()
        .map(|s| s.insert_variable(index, true))
        .collect();
    StanleyDecomposition::new(ideal, spaces)
}
