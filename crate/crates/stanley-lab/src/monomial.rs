//! Monomials and monomial ideals over a fixed polynomial ring.
//!
//! A [`VariableContext`] fixes the ambient ring `K[x1, ..., xn]` together with the
//! variable order `x1 > x2 > ... > xn`. Monomials are exponent vectors; ideals store
//! their unique minimal generating set, sorted descending in the pure lexicographic
//! order so that the stored order is itself the canonical generator order.

use std::cmp::Ordering;
use std::fmt;
use std::path::Path;

use thiserror::Error;

/// The ambient polynomial ring: a number of variables and their display names.
///
/// The variable order `x1 > x2 > ... > xn` is fixed once and for all; reorderings
/// are expressed by permuting exponent vectors into a fresh ideal, never by
/// mutating a context. A context with zero variables is the field itself and is
/// allowed so that variable elimination can recurse all the way down.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableContext {
    names: Vec<String>,
}

/// Error building a context from explicit names.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ContextError {
    #[error("variable names must be distinct: `{0}` repeats")]
    DuplicateName(String),
    #[error("variable names must be nonempty")]
    EmptyName,
}

impl VariableContext {
    /// The ring `K[x1, ..., xn]` with the standard names.
    pub fn standard(n: usize) -> Self {
        VariableContext {
            names: (1..=n).map(|i| format!("x{i}")).collect(),
        }
    }

    /// A ring with custom variable names, which must be distinct and nonempty.
    pub fn with_names(names: Vec<String>) -> Result<Self, ContextError> {
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(ContextError::EmptyName);
            }
            if names[..i].contains(name) {
                return Err(ContextError::DuplicateName(name.clone()));
            }
        }
        Ok(VariableContext { names })
    }

    /// Number of variables.
    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// The context with variable `i` removed (indices above `i` shift down).
    pub fn without(&self, i: usize) -> VariableContext {
        let mut names = self.names.clone();
        names.remove(i);
        VariableContext { names }
    }

    /// The context with a new variable inserted at position `i`.
    pub fn inserting(&self, i: usize, name: impl Into<String>) -> VariableContext {
        let mut names = self.names.clone();
        names.insert(i, name.into());
        VariableContext { names }
    }
}

impl fmt::Display for VariableContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K[{}]", self.names.join(","))
    }
}

/// A monomial `x1^a1 * ... * xn^an`, stored as its exponent vector.
///
/// The derived ordering is the pure lexicographic order induced by
/// `x1 > x2 > ... > xn`: vectors compare at the first index where they differ,
/// and the larger exponent there wins.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exponents: Vec<u32>,
}

/// Exponent arithmetic overflowed the machine-integer exponent type.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("exponent arithmetic overflowed at variable index {index}")]
pub struct ExponentOverflow {
    pub index: usize,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    /// The monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial {
            exponents: vec![0; n],
        }
    }

    /// The variable `x_i` (0-based) in `n` variables.
    pub fn variable(n: usize, i: usize) -> Self {
        assert!(i < n, "variable index {i} out of range for {n} variables");
        let mut exponents = vec![0; n];
        exponents[i] = 1;
        Monomial { exponents }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exponents[i]
    }

    /// Number of variables of the ambient ring this monomial lives in.
    pub fn arity(&self) -> usize {
        self.exponents.len()
    }

    /// Total degree.
    pub fn degree(&self) -> u64 {
        self.exponents.iter().map(|&e| u64::from(e)).sum()
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        (0..self.arity()).filter(|&i| self.exponents[i] > 0).collect()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// Componentwise `<=`. Panics if the monomials live in different rings.
    pub fn divides(&self, other: &Monomial) -> bool {
        assert_eq!(
            self.arity(),
            other.arity(),
            "context mismatch: cannot compare monomials in {} and {} variables",
            self.arity(),
            other.arity()
        );
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b)
    }

    /// The pure lexicographic comparison (same as the derived `Ord`).
    pub fn purelex_cmp(&self, other: &Monomial) -> Ordering {
        assert_eq!(
            self.arity(),
            other.arity(),
            "context mismatch: cannot compare monomials in {} and {} variables",
            self.arity(),
            other.arity()
        );
        self.cmp(other)
    }

    /// Product, with checked exponent arithmetic.
    pub fn try_mul(&self, other: &Monomial) -> Result<Monomial, ExponentOverflow> {
        assert_eq!(self.arity(), other.arity(), "context mismatch in product");
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .enumerate()
            .map(|(index, (a, b))| a.checked_add(*b).ok_or(ExponentOverflow { index }))
            .collect::<Result<_, _>>()?;
        Ok(Monomial { exponents })
    }

    /// Exact quotient `self / divisor`. Panics unless `divisor` divides `self`.
    pub fn div_exact(&self, divisor: &Monomial) -> Monomial {
        assert!(divisor.divides(self), "inexact monomial division");
        let exponents = self
            .exponents
            .iter()
            .zip(&divisor.exponents)
            .map(|(a, b)| a - b)
            .collect();
        Monomial { exponents }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.arity(), other.arity(), "context mismatch in gcd");
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(a, b)| *a.min(b))
            .collect();
        Monomial { exponents }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.arity(), other.arity(), "context mismatch in lcm");
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial { exponents }
    }

    /// `self / gcd(self, other)` — the generator image under a colon by `other`.
    pub fn div_by_gcd(&self, other: &Monomial) -> Monomial {
        self.div_exact(&self.gcd(other))
    }

    /// Multiply by the single variable `x_i`.
    pub fn mul_var(&self, i: usize) -> Result<Monomial, ExponentOverflow> {
        let mut exponents = self.exponents.clone();
        exponents[i] = exponents[i]
            .checked_add(1)
            .ok_or(ExponentOverflow { index: i })?;
        Ok(Monomial { exponents })
    }

    /// Re-embed into a ring with one more variable, inserted at position `i`
    /// with exponent zero.
    pub fn insert_variable(&self, i: usize) -> Monomial {
        let mut exponents = self.exponents.clone();
        exponents.insert(i, 0);
        Monomial { exponents }
    }

    /// Project to the ring without variable `i`. Panics if `x_i` occurs.
    pub fn remove_variable(&self, i: usize) -> Monomial {
        assert_eq!(self.exponents[i], 0, "removing a variable that occurs");
        let mut exponents = self.exponents.clone();
        exponents.remove(i);
        Monomial { exponents }
    }

    /// Relabel variables: position `j` of the result takes the exponent that
    /// sat at position `perm[j]`.
    pub fn permute(&self, perm: &[usize]) -> Monomial {
        assert_eq!(perm.len(), self.arity(), "permutation length mismatch");
        let exponents = perm.iter().map(|&old| self.exponents[old]).collect();
        Monomial { exponents }
    }

    /// Render against a context's variable names, e.g. `x1^2*x3`.
    pub fn display<'a>(&'a self, context: &'a VariableContext) -> MonomialDisplay<'a> {
        assert_eq!(self.arity(), context.n(), "context mismatch in display");
        MonomialDisplay {
            monomial: self,
            context,
        }
    }
}

impl fmt::Display for Monomial {
    /// Context-free rendering as a bare exponent vector, e.g. `x^(0,1,2)`.
    /// Use [`Monomial::display`] when variable names are available.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^(")?;
        for (i, e) in self.exponents().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

pub struct MonomialDisplay<'a> {
    monomial: &'a Monomial,
    context: &'a VariableContext,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomial.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.monomial.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", self.context.name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A monomial ideal, stored as its unique minimal generating set.
///
/// Invariants: the generators are pairwise incomparable under divisibility (an
/// antichain) and sorted descending in pure lexicographic order. The zero ideal
/// has no generators; the unit ideal is generated by `1`. Both are first-class
/// values because variable elimination produces them as intermediate states.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    context: VariableContext,
    gens: Vec<Monomial>,
}

/// Error from the strict constructor that refuses to repair its input.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum IdealError {
    #[error("generating set is not minimal: generator {divisor_index} divides generator {multiple_index}")]
    NotMinimal {
        divisor_index: usize,
        multiple_index: usize,
    },
    #[error("generator has {got} exponents but the context has {expected} variables")]
    ArityMismatch { expected: usize, got: usize },
}

impl MonomialIdeal {
    /// The zero ideal.
    pub fn zero(context: VariableContext) -> Self {
        MonomialIdeal {
            context,
            gens: Vec::new(),
        }
    }

    /// The unit ideal, generated by `1`.
    pub fn unit(context: VariableContext) -> Self {
        let one = Monomial::one(context.n());
        MonomialIdeal {
            context,
            gens: vec![one],
        }
    }

    /// The principal ideal `(m)`.
    pub fn principal(context: VariableContext, m: Monomial) -> Self {
        assert_eq!(m.arity(), context.n(), "context mismatch");
        MonomialIdeal {
            context,
            gens: vec![m],
        }
    }

    /// Build an ideal from an arbitrary generating set: duplicates and
    /// non-minimal generators are dropped, and the survivors are sorted
    /// descending in pure lexicographic order. An empty set gives the zero
    /// ideal; any set containing `1` gives the unit ideal.
    pub fn minimalize(
        context: VariableContext,
        gens: impl IntoIterator<Item = Monomial>,
    ) -> Self {
        let mut gens: Vec<Monomial> = gens.into_iter().collect();
        for g in &gens {
            assert_eq!(g.arity(), context.n(), "context mismatch in generator");
        }
        gens.sort();
        gens.dedup();
        let kept: Vec<Monomial> = gens
            .iter()
            .filter(|g| !gens.iter().any(|h| h != *g && h.divides(g)))
            .cloned()
            .collect();
        let mut gens = kept;
        gens.sort_by(|a, b| b.cmp(a));
        MonomialIdeal { context, gens }
    }

    /// Strict constructor: requires the generators to already be an antichain.
    /// The canonical descending sort is applied; divisibility violations are
    /// rejected rather than repaired.
    pub fn from_minimal_generators(
        context: VariableContext,
        gens: Vec<Monomial>,
    ) -> Result<Self, IdealError> {
        for g in &gens {
            if g.arity() != context.n() {
                return Err(IdealError::ArityMismatch {
                    expected: context.n(),
                    got: g.arity(),
                });
            }
        }
        for (i, g) in gens.iter().enumerate() {
            for (j, h) in gens.iter().enumerate() {
                if i != j && g.divides(h) {
                    return Err(IdealError::NotMinimal {
                        divisor_index: i,
                        multiple_index: j,
                    });
                }
            }
        }
        let mut gens = gens;
        gens.sort_by(|a, b| b.cmp(a));
        Ok(MonomialIdeal { context, gens })
    }

    pub fn context(&self) -> &VariableContext {
        &self.context
    }

    pub fn n(&self) -> usize {
        self.context.n()
    }

    /// Minimal generators, sorted descending in pure lexicographic order.
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    /// Ideal membership: some minimal generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> bool {
        assert_eq!(m.arity(), self.n(), "context mismatch in membership test");
        self.gens.iter().any(|g| g.divides(m))
    }

    /// The colon ideal `(I : m)`, generated by `g / gcd(g, m)` over the
    /// minimal generators `g` of `I`.
    pub fn colon_by_monomial(&self, m: &Monomial) -> MonomialIdeal {
        assert_eq!(m.arity(), self.n(), "context mismatch in colon");
        MonomialIdeal::minimalize(
            self.context.clone(),
            self.gens.iter().map(|g| g.div_by_gcd(m)),
        )
    }

    /// The colon ideal `(I : x_i)`.
    pub fn colon_by_variable(&self, i: usize) -> MonomialIdeal {
        self.colon_by_monomial(&Monomial::variable(self.n(), i))
    }

    /// The intersection `I ∩ K[x1, ..., x̂i, ..., xn]`: keep the generators
    /// avoiding `x_i` and drop the coordinate. Keeping a subset of an
    /// antichain and deleting a coordinate that is zero throughout preserves
    /// both minimality and the descending sort.
    pub fn delete_variable(&self, i: usize) -> MonomialIdeal {
        assert!(i < self.n(), "variable index {i} out of range");
        let context = self.context.without(i);
        let gens = self
            .gens
            .iter()
            .filter(|g| g.exponent(i) == 0)
            .map(|g| g.remove_variable(i))
            .collect();
        MonomialIdeal { context, gens }
    }

    /// The product ideal `I * J`.
    pub fn multiply(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, ExponentOverflow> {
        assert_eq!(self.context, other.context, "context mismatch in product");
        if self.is_zero() || other.is_zero() {
            return Ok(MonomialIdeal::zero(self.context.clone()));
        }
        let mut products = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                products.push(g.try_mul(h)?);
            }
        }
        Ok(MonomialIdeal::minimalize(self.context.clone(), products))
    }

    /// The power `I^k` for `k >= 1`.
    pub fn power(&self, k: u32) -> Result<MonomialIdeal, ExponentOverflow> {
        assert!(k >= 1, "power exponent must be at least 1");
        let mut result = self.clone();
        for _ in 1..k {
            result = result.multiply(self)?;
        }
        Ok(result)
    }

    /// Componentwise maximum of the generator exponents (all zeros for the
    /// zero ideal). Membership of any monomial in `I` only depends on its
    /// exponents clamped into `[0, bound]`.
    pub fn exponent_bound(&self) -> Vec<u32> {
        let mut bound = vec![0u32; self.n()];
        for g in &self.gens {
            for (b, &e) in bound.iter_mut().zip(g.exponents()) {
                *b = (*b).max(e);
            }
        }
        bound
    }

    /// Union of the supports of the minimal generators.
    pub fn support_union(&self) -> Vec<usize> {
        (0..self.n())
            .filter(|&i| self.gens.iter().any(|g| g.exponent(i) > 0))
            .collect()
    }

    /// Re-embed into a ring with one more variable (the extension ideal `I S'`).
    pub fn insert_variable(&self, i: usize, name: impl Into<String>) -> MonomialIdeal {
        let context = self.context.inserting(i, name);
        let gens = self.gens.iter().map(|g| g.insert_variable(i)).collect();
        MonomialIdeal { context, gens }
    }

    /// Relabel variables into a fresh standard context: position `j` of each
    /// new exponent vector takes the old position `perm[j]`.
    pub fn permute_variables(&self, perm: &[usize]) -> MonomialIdeal {
        assert_eq!(perm.len(), self.n(), "permutation length mismatch");
        let mut seen = vec![false; self.n()];
        for &p in perm {
            assert!(p < self.n() && !seen[p], "not a permutation");
            seen[p] = true;
        }
        MonomialIdeal::minimalize(
            VariableContext::standard(self.n()),
            self.gens.iter().map(|g| g.permute(perm)),
        )
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", g.display(&self.context))?;
        }
        write!(f, ")")
    }
}

/// Iterator over all exponent vectors `0 <= a <= bounds` (componentwise), in
/// ascending pure lexicographic order. An empty bound list yields exactly the
/// empty vector.
pub fn exponent_box(bounds: &[u32]) -> ExponentBox {
    ExponentBox {
        bounds: bounds.to_vec(),
        next: Some(vec![0; bounds.len()]),
    }
}

pub struct ExponentBox {
    bounds: Vec<u32>,
    next: Option<Vec<u32>>,
}

impl Iterator for ExponentBox {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let current = self.next.take()?;
        // Odometer increment from the last coordinate, so iteration order is
        // ascending purelex.
        let mut succ = current.clone();
        let mut i = self.bounds.len();
        loop {
            if i == 0 {
                self.next = None;
                break;
            }
            i -= 1;
            if succ[i] < self.bounds[i] {
                succ[i] += 1;
                self.next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(current)
    }
}

// ---------------------------------------------------------------------------
// Ideal text format
//
//   n <number-of-variables>
//   # comment
//   e1 e2 ... en        (one generator per line)
//
// Empty generator list = zero ideal. Input is minimalized on load and the
// dropped generators are reported.
// ---------------------------------------------------------------------------

/// Result of loading an ideal from the text format: the minimalized ideal plus
/// whatever input generators were redundant (duplicates or proper multiples).
#[derive(Debug, Clone)]
pub struct IdealLoad {
    pub ideal: MonomialIdeal,
    pub dropped: Vec<Monomial>,
}

impl IdealLoad {
    pub fn was_minimal(&self) -> bool {
        self.dropped.is_empty()
    }
}

#[derive(Debug, Error)]
pub enum ParseIdealError {
    #[error("missing header line `n <count>`")]
    MissingHeader,
    #[error("line {line}: bad header, expected `n <count>`")]
    BadHeader { line: usize },
    #[error("the context needs at least one variable")]
    ZeroVariables,
    #[error("line {line}: bad exponent `{token}`")]
    BadExponent { line: usize, token: String },
    #[error("line {line}: generator has {got} exponents, expected {expected}")]
    WrongArity {
        line: usize,
        expected: usize,
        got: usize,
    },
    #[error("reading ideal file: {0}")]
    Io(#[from] std::io::Error),
}

/// Parse the ideal text format. The generator list is minimalized; redundant
/// input rows are returned in `dropped` rather than silently discarded.
pub fn parse_ideal(text: &str) -> Result<IdealLoad, ParseIdealError> {
    let mut n: Option<usize> = None;
    let mut header_seen = false;
    let mut rows: Vec<Monomial> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if !header_seen {
            let mut parts = content.split_whitespace();
            let tag = parts.next();
            let count = parts.next();
            match (tag, count, parts.next()) {
                (Some("n"), Some(c), None) => {
                    let parsed: usize = c
                        .parse()
                        .map_err(|_| ParseIdealError::BadHeader { line })?;
                    if parsed == 0 {
                        return Err(ParseIdealError::ZeroVariables);
                    }
                    n = Some(parsed);
                    header_seen = true;
                    continue;
                }
                _ => return Err(ParseIdealError::BadHeader { line }),
            }
        }
        let expected = n.expect("header parsed");
        let mut exponents = Vec::with_capacity(expected);
        for token in content.split_whitespace() {
            let e: u32 = token.parse().map_err(|_| ParseIdealError::BadExponent {
                line,
                token: token.to_string(),
            })?;
            exponents.push(e);
        }
        if exponents.len() != expected {
            return Err(ParseIdealError::WrongArity {
                line,
                expected,
                got: exponents.len(),
            });
        }
        rows.push(Monomial::new(exponents));
    }
    let n = n.ok_or(ParseIdealError::MissingHeader)?;
    let context = VariableContext::standard(n);
    let ideal = MonomialIdeal::minimalize(context, rows.clone());
    let mut kept_budget: Vec<Monomial> = ideal.gens().to_vec();
    let mut dropped = Vec::new();
    for row in rows {
        if let Some(pos) = kept_budget.iter().position(|g| *g == row) {
            kept_budget.remove(pos);
        } else {
            dropped.push(row);
        }
    }
    Ok(IdealLoad { ideal, dropped })
}

pub fn read_ideal_file(path: impl AsRef<Path>) -> Result<IdealLoad, ParseIdealError> {
    let text = std::fs::read_to_string(path)?;
    parse_ideal(&text)
}

/// Write an ideal in the text format accepted by [`parse_ideal`].
pub fn format_ideal(ideal: &MonomialIdeal) -> String {
    let mut out = format!("n {}\n", ideal.n());
    for g in ideal.gens() {
        let row: Vec<String> = g.exponents().iter().map(|e| e.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
