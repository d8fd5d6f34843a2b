//! Recognition of combinatorial ideal classes: linear quotients, weak
//! polymatroidality, and the polymatroidal exchange property.
//!
//! Every check either certifies the property or produces an explicit witness
//! of failure, so downstream consumers never have to trust a bare boolean.

use std::collections::{BTreeSet, HashSet};

use itertools::Itertools;
use thiserror::Error;

use crate::monomial::{Monomial, MonomialIdeal};

/// A verified linear-quotients order for `G(I)`.
///
/// `order[k]` indexes into `ideal.gens()`; for each position `k >= 1` the colon
/// of the prefix ideal `(u_0, ..., u_{k-1}) : u_k` is generated by the variables
/// listed in `steps[k-1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearQuotientCertificate {
    pub order: Vec<usize>,
    pub steps: Vec<BTreeSet<usize>>,
}

impl LinearQuotientCertificate {
    /// The sizes `n_k = |steps[k-1]|`, one per non-initial generator.
    pub fn counts(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.len()).collect()
    }

    /// The largest step size, `0` when the ideal is principal.
    pub fn max_count(&self) -> usize {
        self.steps.iter().map(|s| s.len()).max().unwrap_or(0)
    }
}

/// Why an order fails to give linear quotients: the first position whose prefix
/// colon has a minimal generator of degree two or more.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearQuotientFailure {
    pub position: usize,
    pub offending: Monomial,
}

/// Witness that an ideal is not weakly polymatroidal: a generator pair whose
/// first disagreement admits no compensating exchange.
///
/// `upper` beats `lower` in pure lexicographic order with first disagreement at
/// variable index `slot`, but no later variable of `lower` can be traded up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakPolyViolation {
    pub upper: Monomial,
    pub lower: Monomial,
    pub slot: usize,
}

/// Witness that an ideal is not polymatroidal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExchangeViolation {
    /// The generators do not share a single degree.
    MixedDegrees { a: Monomial, b: Monomial },
    /// For the pair `(u, v)` and a variable `index` with a larger exponent in
    /// `u`, no exchange lands back in the generating set.
    Exchange {
        u: Monomial,
        v: Monomial,
        index: usize,
    },
}

/// The backtracking order search gave up before exhausting the space.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("linear-quotients order search exceeded its node cap of {cap}")]
pub struct SearchCapExceeded {
    pub cap: u64,
}

fn assert_proper(ideal: &MonomialIdeal) {
    assert!(!ideal.is_zero(), "the zero ideal is outside this classifier");
    assert!(!ideal.is_unit(), "the unit ideal is outside this classifier");
}

/// Colon of the prefix ideal `(order[0], ..., order[i-1])` by `order[i]`,
/// i.e. the ideal generated by `u_k / gcd(u_k, u_i)` for `k < i`.
pub fn colon_of_prefix(ideal: &MonomialIdeal, order: &[usize], i: usize) -> MonomialIdeal {
    assert_proper(ideal);
    assert!(i >= 1 && i < order.len(), "prefix position out of range");
    let gens = ideal.gens();
    let u_i = &gens[order[i]];
    MonomialIdeal::minimalize(
        ideal.context().clone(),
        order[..i].iter().map(|&k| gens[k].div_by_gcd(u_i)),
    )
}

fn validate_order(ideal: &MonomialIdeal, order: &[usize]) {
    let t = ideal.num_gens();
    assert_eq!(order.len(), t, "order must list every generator exactly once");
    let mut seen = vec![false; t];
    for &k in order {
        assert!(k < t && !seen[k], "order is not a permutation of 0..t");
        seen[k] = true;
    }
}

/// Check whether a given generator order realizes linear quotients, returning
/// either the step-by-step variable sets or the first failing position.
pub fn linear_quotients_with_order(
    ideal: &MonomialIdeal,
    order: &[usize],
) -> Result<LinearQuotientCertificate, LinearQuotientFailure> {
    assert_proper(ideal);
    validate_order(ideal, order);
    let mut steps = Vec::with_capacity(order.len().saturating_sub(1));
    for i in 1..order.len() {
        let colon = colon_of_prefix(ideal, order, i);
        let mut vars = BTreeSet::new();
        for g in colon.gens() {
            if g.degree() != 1 {
                return Err(LinearQuotientFailure {
                    position: i,
                    offending: g.clone(),
                });
            }
            vars.insert(g.support()[0]);
        }
        steps.push(vars);
    }
    Ok(LinearQuotientCertificate {
        order: order.to_vec(),
        steps,
    })
}

/// Linear quotients in the stored descending pure lexicographic order.
pub fn linear_quotients_purelex(
    ideal: &MonomialIdeal,
) -> Result<LinearQuotientCertificate, LinearQuotientFailure> {
    let order: Vec<usize> = (0..ideal.num_gens()).collect();
    linear_quotients_with_order(ideal, &order)
}

/// Search for any linear-quotients order by greedy extension with backtracking.
///
/// Returns `Ok(Some(certificate))` on success, `Ok(None)` when the exhaustive
/// search proves no order works, and an error if the visited-node cap is hit
/// first. Failed prefix sets are memoized, which is sound because a prefix
/// colon depends only on the set of chosen generators.
pub fn find_linear_quotients_order(
    ideal: &MonomialIdeal,
    cap: u64,
) -> Result<Option<LinearQuotientCertificate>, SearchCapExceeded> {
    assert_proper(ideal);
    let t = ideal.num_gens();
    assert!(t <= 64, "order search supports at most 64 generators");
    let gens = ideal.gens();

    // steps_for(chosen_mask, candidate): Some(variable set) if admissible.
    let admissible = |mask: u64, cand: usize| -> Option<BTreeSet<usize>> {
        let u = &gens[cand];
        let colon = MonomialIdeal::minimalize(
            ideal.context().clone(),
            (0..t)
                .filter(|k| mask & (1 << k) != 0)
                .map(|k| gens[k].div_by_gcd(u)),
        );
        let mut vars = BTreeSet::new();
        for g in colon.gens() {
            if g.degree() != 1 {
                return None;
            }
            vars.insert(g.support()[0]);
        }
        Some(vars)
    };

    struct Search<'a> {
        t: usize,
        cap: u64,
        visited: u64,
        dead: HashSet<u64>,
        order: Vec<usize>,
        steps: Vec<BTreeSet<usize>>,
        admissible: &'a dyn Fn(u64, usize) -> Option<BTreeSet<usize>>,
    }

    impl Search<'_> {
        fn dfs(&mut self, mask: u64) -> Result<bool, SearchCapExceeded> {
            if self.order.len() == self.t {
                return Ok(true);
            }
            if self.dead.contains(&mask) {
                return Ok(false);
            }
            for cand in 0..self.t {
                if mask & (1 << cand) != 0 {
                    continue;
                }
                self.visited += 1;
                if self.visited > self.cap {
                    return Err(SearchCapExceeded { cap: self.cap });
                }
                let Some(vars) = (self.admissible)(mask, cand) else {
                    continue;
                };
                self.order.push(cand);
                let pushed_step = self.order.len() > 1;
                if pushed_step {
                    self.steps.push(vars);
                }
                if self.dfs(mask | (1 << cand))? {
                    return Ok(true);
                }
                self.order.pop();
                if pushed_step {
                    self.steps.pop();
                }
            }
            self.dead.insert(mask);
            Ok(false)
        }
    }

    let mut search = Search {
        t,
        cap,
        visited: 0,
        dead: HashSet::new(),
        order: Vec::with_capacity(t),
        steps: Vec::with_capacity(t.saturating_sub(1)),
        admissible: &admissible,
    };
    if search.dfs(0)? {
        Ok(Some(LinearQuotientCertificate {
            order: search.order,
            steps: search.steps,
        }))
    } else {
        Ok(None)
    }
}

/// Check the weakly polymatroidal condition in the fixed variable order.
///
/// For every generator pair `u > v` (pure lexicographic) with first
/// disagreement at variable `t`, some later variable `x_j` with positive
/// exponent in `v` must satisfy `x_t * (v / x_j) ∈ I`.
pub fn check_weakly_polymatroidal(ideal: &MonomialIdeal) -> Result<(), WeakPolyViolation> {
    assert_proper(ideal);
    let gens = ideal.gens();
    for (u, v) in gens.iter().tuple_combinations() {
        // Stored order is descending purelex, so u > v here.
        let a = u.exponents();
        let b = v.exponents();
        let slot = a
            .iter()
            .zip(b)
            .position(|(x, y)| x != y)
            .expect("distinct generators disagree somewhere");
        debug_assert!(a[slot] > b[slot], "descending order puts u above v");
        let exchanged = (slot + 1..ideal.n()).any(|j| {
            b[j] > 0 && {
                let moved = v
                    .div_exact(&Monomial::variable(ideal.n(), j))
                    .mul_var(slot)
                    .expect("exchange stays within exponent range");
                ideal.contains(&moved)
            }
        });
        if !exchanged {
            return Err(WeakPolyViolation {
                upper: u.clone(),
                lower: v.clone(),
                slot,
            });
        }
    }
    Ok(())
}

pub fn is_weakly_polymatroidal(ideal: &MonomialIdeal) -> bool {
    check_weakly_polymatroidal(ideal).is_ok()
}

/// Check the polymatroidal property: one shared degree, plus the symmetric
/// exchange condition with membership required in the minimal generating set
/// itself (not merely in the ideal).
pub fn check_polymatroidal(ideal: &MonomialIdeal) -> Result<(), ExchangeViolation> {
    assert_proper(ideal);
    let gens = ideal.gens();
    let d = gens[0].degree();
    for g in gens {
        if g.degree() != d {
            return Err(ExchangeViolation::MixedDegrees {
                a: gens[0].clone(),
                b: g.clone(),
            });
        }
    }
    let gen_set: HashSet<&Monomial> = gens.iter().collect();
    for u in gens {
        for v in gens {
            if u == v {
                continue;
            }
            let a = u.exponents();
            let b = v.exponents();
            for i in 0..ideal.n() {
                if a[i] <= b[i] {
                    continue;
                }
                let swapped = (0..ideal.n()).any(|j| {
                    a[j] < b[j] && {
                        let moved = u
                            .div_exact(&Monomial::variable(ideal.n(), i))
                            .mul_var(j)
                            .expect("exchange stays within exponent range");
                        gen_set.contains(&moved)
                    }
                });
                if !swapped {
                    return Err(ExchangeViolation::Exchange {
                        u: u.clone(),
                        v: v.clone(),
                        index: i,
                    });
                }
            }
        }
    }
    Ok(())
}

pub fn is_polymatroidal(ideal: &MonomialIdeal) -> bool {
    check_polymatroidal(ideal).is_ok()
}

/// Search all `n!` variable relabelings (supported up to `n = 7`) and report
/// which permutations make the ideal weakly polymatroidal. Each returned
/// permutation maps new position to old position, as in
/// [`MonomialIdeal::permute_variables`].
pub fn weakly_polymatroidal_permutations(ideal: &MonomialIdeal) -> Vec<Vec<usize>> {
    assert_proper(ideal);
    let n = ideal.n();
    assert!(n <= 7, "permutation search supports at most 7 variables");
    (0..n)
        .permutations(n)
        .filter(|perm| is_weakly_polymatroidal(&ideal.permute_variables(perm)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::VariableContext;

    fn mono(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    fn ideal(n: usize, rows: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(
            VariableContext::standard(n),
            rows.iter().map(|r| mono(r)),
        )
    }

    fn triangle() -> MonomialIdeal {
        ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]])
    }

    #[test]
    fn colon_of_prefix_examples() {
        // (x1x2) : x1x3 = (x2) and (x1x2, x1x3) : x2x3 = (x1).
        let i = triangle();
        let order = [0usize, 1, 2];
        assert_eq!(colon_of_prefix(&i, &order, 1).gens(), &[mono(&[0, 1, 0])]);
        assert_eq!(colon_of_prefix(&i, &order, 2).gens(), &[mono(&[1, 0, 0])]);
    }

    #[test]
    fn colon_of_prefix_brute_force_oracle() {
        // m lies in the prefix colon iff m * u_i lies in the prefix ideal.
        let i = ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 1]]);
        let order = [0usize, 1, 2];
        for pos in 1..3 {
            let colon = colon_of_prefix(&i, &order, pos);
            let prefix = MonomialIdeal::minimalize(
                i.context().clone(),
                order[..pos].iter().map(|&k| i.gens()[k].clone()),
            );
            let u = &i.gens()[order[pos]];
            for exps in crate::monomial::exponent_box(&[3, 3, 3]) {
                let m = Monomial::new(exps);
                let prod = m.try_mul(u).unwrap();
                assert_eq!(colon.contains(&m), prefix.contains(&prod));
            }
        }
    }

    #[test]
    fn purelex_linear_quotients_on_triangle() {
        let cert = linear_quotients_purelex(&triangle()).unwrap();
        assert_eq!(cert.counts(), vec![1, 1]);
        assert_eq!(
            cert.steps,
            vec![BTreeSet::from([1]), BTreeSet::from([0])]
        );
    }

    #[test]
    fn purelex_linear_quotients_on_variables() {
        // (x1, x2, x3): steps (x1), then (x1, x2).
        let i = ideal(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let cert = linear_quotients_purelex(&i).unwrap();
        assert_eq!(cert.counts(), vec![1, 2]);
    }

    #[test]
    fn principal_ideal_has_trivial_certificate() {
        let i = ideal(3, &[&[1, 1, 1]]);
        let cert = linear_quotients_purelex(&i).unwrap();
        assert!(cert.steps.is_empty());
        assert_eq!(cert.max_count(), 0);
    }

    #[test]
    fn linear_quotients_failure_witness() {
        // (x1x2, x3x4): the prefix colon is (x1x2), degree two.
        let i = ideal(4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        let err = linear_quotients_purelex(&i).unwrap_err();
        assert_eq!(err.position, 1);
        assert_eq!(err.offending, mono(&[1, 1, 0, 0]));
    }

    #[test]
    fn certificate_soundness_colon_equals_variable_ideal() {
        // For each step, the colon recomputed from scratch equals the ideal
        // generated by the certified variables.
        for i in [
            triangle(),
            ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]),
            ideal(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]),
        ] {
            let cert = linear_quotients_purelex(&i).unwrap();
            for (k, vars) in cert.steps.iter().enumerate() {
                let colon = colon_of_prefix(&i, &cert.order, k + 1);
                let from_vars = MonomialIdeal::minimalize(
                    i.context().clone(),
                    vars.iter().map(|&v| Monomial::variable(i.n(), v)),
                );
                assert_eq!(colon, from_vars);
            }
        }
    }

    #[test]
    fn search_finds_order_for_triangle_and_rejects_split_pair() {
        assert!(find_linear_quotients_order(&triangle(), 1_000_000)
            .unwrap()
            .is_some());
        let split = ideal(4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        assert_eq!(find_linear_quotients_order(&split, 1_000_000).unwrap(), None);
    }

    #[test]
    fn search_certificate_is_replayable() {
        let i = ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        let cert = find_linear_quotients_order(&i, 1_000_000).unwrap().unwrap();
        let replay = linear_quotients_with_order(&i, &cert.order).unwrap();
        assert_eq!(cert, replay);
    }

    #[test]
    fn search_cap_is_honored() {
        let i = ideal(4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        assert_eq!(
            find_linear_quotients_order(&i, 1),
            Err(SearchCapExceeded { cap: 1 })
        );
    }

    #[test]
    fn weakly_polymatroidal_examples() {
        assert!(is_weakly_polymatroidal(&triangle()));
        assert!(is_weakly_polymatroidal(&ideal(2, &[&[3, 1]])));

        let bad = ideal(2, &[&[2, 0], &[0, 2]]);
        let violation = check_weakly_polymatroidal(&bad).unwrap_err();
        assert_eq!(violation.upper, mono(&[2, 0]));
        assert_eq!(violation.lower, mono(&[0, 2]));
        assert_eq!(violation.slot, 0);
    }

    #[test]
    fn weakly_polymatroidal_requires_strictly_later_variable() {
        // (x1^2, x2) fails: the only disagreement slot is x1, and v = x2 has
        // no variable beyond x2 to give up.
        let i = ideal(2, &[&[2, 0], &[0, 1]]);
        assert!(!is_weakly_polymatroidal(&i));
    }

    #[test]
    fn polymatroidal_examples() {
        assert!(is_polymatroidal(&triangle()));
        assert!(is_polymatroidal(&ideal(2, &[&[2, 0], &[1, 1], &[0, 2]])));

        // Mixed degrees.
        let mixed = ideal(2, &[&[2, 0], &[0, 1]]);
        assert!(matches!(
            check_polymatroidal(&mixed).unwrap_err(),
            ExchangeViolation::MixedDegrees { .. }
        ));

        // Single degree but no exchange: (x1^2, x2^2) misses x1x2.
        let gap = ideal(2, &[&[2, 0], &[0, 2]]);
        assert!(matches!(
            check_polymatroidal(&gap).unwrap_err(),
            ExchangeViolation::Exchange { .. }
        ));
    }

    #[test]
    fn exchange_failure_witness_carries_the_pair() {
        // (x1^3, x1x2^2, x2^3): for the pair (x1^3, x1x2^2) at index 0 the
        // only exchange candidate is x1^2*x2, which is not a generator.
        let i = ideal(2, &[&[3, 0], &[1, 2], &[0, 3]]);
        let err = check_polymatroidal(&i).unwrap_err();
        assert!(matches!(err, ExchangeViolation::Exchange { index: 0, .. }));
    }

    #[test]
    fn polymatroidal_implies_weakly_polymatroidal_on_samples() {
        for i in [
            triangle(),
            ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]),
            ideal(3, &[&[1, 1, 0], &[1, 0, 1]]),
        ] {
            if is_polymatroidal(&i) {
                assert!(is_weakly_polymatroidal(&i));
            }
        }
    }

    #[test]
    fn permutation_search_recovers_hidden_order() {
        // (x1^2, x2) is not weakly polymatroidal as given, but swapping the
        // variables yields (x1, x2^2), which is.
        let i = ideal(2, &[&[2, 0], &[0, 1]]);
        let perms = weakly_polymatroidal_permutations(&i);
        assert_eq!(perms, vec![vec![1, 0]]);

        // The triangle ideal is symmetric: every permutation works.
        assert_eq!(weakly_polymatroidal_permutations(&triangle()).len(), 6);
    }

    #[test]
    #[should_panic(expected = "zero ideal")]
    fn classifiers_reject_zero_ideal() {
        let z = MonomialIdeal::zero(VariableContext::standard(2));
        let _ = is_weakly_polymatroidal(&z);
    }

    #[test]
    #[should_panic(expected = "unit ideal")]
    fn classifiers_reject_unit_ideal() {
        let u = MonomialIdeal::unit(VariableContext::standard(2));
        let _ = is_polymatroidal(&u);
    }
}
