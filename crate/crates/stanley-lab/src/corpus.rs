//! Reproducible corpora of monomial ideals for batch experiments.
//!
//! A corpus is described by a small flat text format:
//!
//! ```text
//! # desk corpus
//! seed = 42
//! require-weakly-polymatroidal = true
//! max-vars = 6
//! max-gens = 100
//! family = veronese-type n=3 d=2 caps=2,2,1
//! family = squarefree-veronese n=4 d=2
//! family = principal n=4 max-degree=3 count=5
//! family = power base=squarefree-veronese n=3 d=2 k=2
//! family = random n=4 t=5 max-exponent=2 count=10
//! ```
//!
//! Generation is deterministic: the same spec always produces the same
//! corpus, byte for byte. Randomized families draw from a counter-based
//! generator seeded by `seed`; `count` is the number of draws, and draws
//! that fail the weak polymatroidality filter (when enabled) or the
//! generator-count cap are skipped.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::classify::{is_polymatroidal, is_weakly_polymatroidal};
use crate::monomial::{ExponentOverflow, Monomial, MonomialIdeal, VariableContext};

/// A recipe for one batch of ideals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// All monomials of total degree `d` with exponents capped coordinatewise.
    VeroneseType { n: usize, d: u32, caps: Vec<u32> },
    /// All squarefree monomials of total degree `d`.
    SquarefreeVeronese { n: usize, d: u32 },
    /// `count` random principal ideals with exponents up to `max_degree`.
    Principal {
        n: usize,
        max_degree: u32,
        count: usize,
    },
    /// The `k`-th power of every ideal the base family generates.
    Power { base: Box<Family>, k: u32 },
    /// `count` random ideals, each minimalized from `t` random monomials.
    Random {
        n: usize,
        t: usize,
        max_exponent: u32,
        count: usize,
    },
}

impl Family {
    pub fn label(&self) -> String {
        match self {
            Family::VeroneseType { .. } => "veronese-type".to_string(),
            Family::SquarefreeVeronese { .. } => "squarefree-veronese".to_string(),
            Family::Principal { .. } => "principal".to_string(),
            Family::Power { base, .. } => format!("power-of-{}", base.label()),
            Family::Random { .. } => "random".to_string(),
        }
    }

    fn variables(&self) -> usize {
        match self {
            Family::VeroneseType { n, .. }
            | Family::SquarefreeVeronese { n, .. }
            | Family::Principal { n, .. }
            | Family::Random { n, .. } => *n,
            Family::Power { base, .. } => base.variables(),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::VeroneseType { n, d, caps } => {
                let caps: Vec<String> = caps.iter().map(u32::to_string).collect();
                write!(f, "veronese-type n={n} d={d} caps={}", caps.join(","))
            }
            Family::SquarefreeVeronese { n, d } => write!(f, "squarefree-veronese n={n} d={d}"),
            Family::Principal {
                n,
                max_degree,
                count,
            } => write!(f, "principal n={n} max-degree={max_degree} count={count}"),
            Family::Power { base, k } => write!(f, "power base={base} k={k}"),
            Family::Random {
                n,
                t,
                max_exponent,
                count,
            } => write!(f, "random n={n} t={t} max-exponent={max_exponent} count={count}"),
        }
    }
}

/// A parsed corpus description.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusSpec {
    pub seed: u64,
    pub require_weakly_polymatroidal: bool,
    pub max_vars: usize,
    pub max_gens: usize,
    pub families: Vec<Family>,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            seed: 0,
            require_weakly_polymatroidal: true,
            max_vars: 10,
            max_gens: 100,
            families: Vec::new(),
        }
    }
}

/// One generated ideal, tagged with a stable id and its family label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub id: String,
    pub family: String,
    pub ideal: MonomialIdeal,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CorpusError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("family `{family}` uses {n} variables, over the corpus cap of {max}")]
    TooManyVariables { family: String, n: usize, max: usize },
    #[error("family `{family}` produced {t} generators, over the corpus cap of {max}")]
    TooManyGenerators { family: String, t: usize, max: usize },
    #[error("family `{family}` generates no monomials")]
    EmptyFamily { family: String },
    #[error(transparent)]
    Overflow(#[from] ExponentOverflow),
}

fn parse_err(line: usize, message: impl Into<String>) -> CorpusError {
    CorpusError::Parse {
        line,
        message: message.into(),
    }
}

/// Parse the flat key-value corpus format. Unknown keys and malformed values
/// are reported with their line number.
pub fn parse_corpus_spec(text: &str) -> Result<CorpusSpec, CorpusError> {
    let mut spec = CorpusSpec::default();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let (key, value) = content
            .split_once('=')
            .ok_or_else(|| parse_err(line, "expected `key = value`"))?;
        let key = key.trim();
        let value = value.trim();
        match key {
            "seed" => {
                spec.seed = value
                    .parse()
                    .map_err(|_| parse_err(line, format!("bad seed `{value}`")))?;
            }
            "require-weakly-polymatroidal" => {
                spec.require_weakly_polymatroidal = value
                    .parse()
                    .map_err(|_| parse_err(line, format!("bad boolean `{value}`")))?;
            }
            "max-vars" => {
                spec.max_vars = parse_positive(value, line, "max-vars")?;
            }
            "max-gens" => {
                spec.max_gens = parse_positive(value, line, "max-gens")?;
            }
            "family" => {
                spec.families.push(parse_family(value, line)?);
            }
            other => {
                return Err(parse_err(line, format!("unknown key `{other}`")));
            }
        }
    }
    Ok(spec)
}

fn parse_positive(value: &str, line: usize, key: &str) -> Result<usize, CorpusError> {
    let v: usize = value
        .parse()
        .map_err(|_| parse_err(line, format!("bad {key} `{value}`")))?;
    if v == 0 {
        return Err(parse_err(line, format!("{key} must be positive")));
    }
    Ok(v)
}

struct FamilyArgs<'a> {
    pairs: Vec<(&'a str, &'a str)>,
    used: Vec<bool>,
    line: usize,
}

impl<'a> FamilyArgs<'a> {
    fn new(tokens: &[&'a str], line: usize) -> Result<Self, CorpusError> {
        let mut pairs = Vec::new();
        for token in tokens {
            let (k, v) = token
                .split_once('=')
                .ok_or_else(|| parse_err(line, format!("expected key=value, got `{token}`")))?;
            pairs.push((k, v));
        }
        let used = vec![false; pairs.len()];
        Ok(FamilyArgs { pairs, used, line })
    }

    fn take(&mut self, key: &str) -> Result<&'a str, CorpusError> {
        for (i, &(k, v)) in self.pairs.iter().enumerate() {
            if k == key && !self.used[i] {
                self.used[i] = true;
                return Ok(v);
            }
        }
        Err(parse_err(self.line, format!("missing `{key}=`")))
    }

    fn number<T: std::str::FromStr>(&mut self, key: &str) -> Result<T, CorpusError> {
        let raw = self.take(key)?;
        raw.parse()
            .map_err(|_| parse_err(self.line, format!("bad {key} `{raw}`")))
    }

    fn finish(self) -> Result<(), CorpusError> {
        for (i, &(k, _)) in self.pairs.iter().enumerate() {
            if !self.used[i] {
                return Err(parse_err(self.line, format!("unknown argument `{k}`")));
            }
        }
        Ok(())
    }
}

fn parse_family(value: &str, line: usize) -> Result<Family, CorpusError> {
    let tokens: Vec<&str> = value.split_whitespace().collect();
    let Some((&kind, rest)) = tokens.split_first() else {
        return Err(parse_err(line, "empty family"));
    };
    let mut args = FamilyArgs::new(rest, line)?;
    let family = parse_kind(kind, &mut args, line)?;
    args.finish()?;
    validate_family(&family, line)?;
    Ok(family)
}

fn parse_kind(kind: &str, args: &mut FamilyArgs, line: usize) -> Result<Family, CorpusError> {
    match kind {
        "veronese-type" => {
            let n: usize = args.number("n")?;
            let d: u32 = args.number("d")?;
            let raw = args.take("caps")?;
            let caps: Vec<u32> = raw
                .split(',')
                .map(|c| {
                    c.trim()
                        .parse()
                        .map_err(|_| parse_err(line, format!("bad cap `{c}`")))
                })
                .collect::<Result<_, _>>()?;
            if caps.len() != n {
                return Err(parse_err(
                    line,
                    format!("caps has {} entries for n={n}", caps.len()),
                ));
            }
            Ok(Family::VeroneseType { n, d, caps })
        }
        "squarefree-veronese" => Ok(Family::SquarefreeVeronese {
            n: args.number("n")?,
            d: args.number("d")?,
        }),
        "principal" => Ok(Family::Principal {
            n: args.number("n")?,
            max_degree: args.number("max-degree")?,
            count: args.number("count")?,
        }),
        "power" => {
            let base_kind = args.take("base")?;
            if base_kind == "power" {
                return Err(parse_err(line, "power cannot be its own base"));
            }
            let k: u32 = args.number("k")?;
            if k == 0 {
                return Err(parse_err(line, "k must be positive"));
            }
            let base = parse_kind(base_kind, args, line)?;
            Ok(Family::Power {
                base: Box::new(base),
                k,
            })
        }
        "random" => Ok(Family::Random {
            n: args.number("n")?,
            t: args.number("t")?,
            max_exponent: args.number("max-exponent")?,
            count: args.number("count")?,
        }),
        other => Err(parse_err(line, format!("unknown family `{other}`"))),
    }
}

fn validate_family(family: &Family, line: usize) -> Result<(), CorpusError> {
    match family {
        Family::VeroneseType { n, d, caps } => {
            if *n == 0 || *d == 0 {
                return Err(parse_err(line, "n and d must be positive"));
            }
            if caps.iter().map(|&c| c as u64).sum::<u64>() < *d as u64 {
                return Err(parse_err(line, "caps cannot reach degree d"));
            }
        }
        Family::SquarefreeVeronese { n, d } => {
            if *n == 0 || *d == 0 {
                return Err(parse_err(line, "n and d must be positive"));
            }
            if (*d as usize) > *n {
                return Err(parse_err(line, "d cannot exceed n for squarefree monomials"));
            }
        }
        Family::Principal {
            n,
            max_degree,
            count,
        } => {
            if *n == 0 || *max_degree == 0 || *count == 0 {
                return Err(parse_err(line, "n, max-degree, and count must be positive"));
            }
        }
        Family::Power { base, .. } => validate_family(base, line)?,
        Family::Random {
            n,
            t,
            max_exponent,
            count,
        } => {
            if *n == 0 || *t == 0 || *max_exponent == 0 || *count == 0 {
                return Err(parse_err(
                    line,
                    "n, t, max-exponent, and count must be positive",
                ));
            }
        }
    }
    Ok(())
}

/// All exponent vectors with total degree `d` and `e_i <= caps[i]`, in
/// ascending pure lexicographic order.
fn capped_compositions(d: u32, caps: &[u32]) -> Vec<Vec<u32>> {
    fn go(slot: usize, remaining: u32, caps: &[u32], prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slot == caps.len() {
            if remaining == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        for e in 0..=caps[slot].min(remaining) {
            prefix.push(e);
            go(slot + 1, remaining - e, caps, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(0, d, caps, &mut Vec::new(), &mut out);
    out
}

/// The ideal generated by all monomials of degree `d` with capped exponents.
/// These ideals always satisfy the exchange property; that is asserted here.
pub fn veronese_type_ideal(n: usize, d: u32, caps: &[u32]) -> MonomialIdeal {
    assert_eq!(caps.len(), n, "one cap per variable");
    let gens = capped_compositions(d, caps).into_iter().map(Monomial::new);
    let ideal = MonomialIdeal::minimalize(VariableContext::standard(n), gens);
    assert!(
        !ideal.is_zero(),
        "the caps admit no monomial of degree {d}"
    );
    assert!(
        is_polymatroidal(&ideal),
        "a capped degree family lost the exchange property"
    );
    ideal
}

/// The ideal generated by all squarefree monomials of degree `d`.
pub fn squarefree_veronese_ideal(n: usize, d: u32) -> MonomialIdeal {
    veronese_type_ideal(n, d, &vec![1; n])
}

/// Generate the corpus described by `spec`. Deterministic in `spec`.
pub fn generate(spec: &CorpusSpec) -> Result<Vec<CorpusEntry>, CorpusError> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut entries = Vec::new();
    for family in &spec.families {
        let n = family.variables();
        if n > spec.max_vars {
            return Err(CorpusError::TooManyVariables {
                family: family.label(),
                n,
                max: spec.max_vars,
            });
        }
        let ideals = realize_family(family, spec, &mut rng)?;
        for ideal in ideals {
            if spec.require_weakly_polymatroidal
                && !ideal.is_zero()
                && !is_weakly_polymatroidal(&ideal)
            {
                continue;
            }
            entries.push(CorpusEntry {
                id: format!("{:04}-{}", entries.len(), family.label()),
                family: family.label(),
                ideal,
            });
        }
    }
    Ok(entries)
}

/// Produce the raw ideals of one family, before the corpus-level filter.
/// Deterministic families fail loudly when they exceed the generator cap;
/// random draws beyond the cap are skipped instead.
fn realize_family(
    family: &Family,
    spec: &CorpusSpec,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<MonomialIdeal>, CorpusError> {
    let check_cap = |ideal: MonomialIdeal| -> Result<MonomialIdeal, CorpusError> {
        if ideal.num_gens() > spec.max_gens {
            return Err(CorpusError::TooManyGenerators {
                family: family.label(),
                t: ideal.num_gens(),
                max: spec.max_gens,
            });
        }
        Ok(ideal)
    };
    match family {
        Family::VeroneseType { n, d, caps } => {
            Ok(vec![check_cap(veronese_type_ideal(*n, *d, caps))?])
        }
        Family::SquarefreeVeronese { n, d } => {
            Ok(vec![check_cap(squarefree_veronese_ideal(*n, *d))?])
        }
        Family::Principal {
            n,
            max_degree,
            count,
        } => {
            let mut out = Vec::new();
            for _ in 0..*count {
                let m = random_monomial(rng, *n, *max_degree);
                out.push(MonomialIdeal::principal(
                    VariableContext::standard(*n),
                    m,
                ));
            }
            Ok(out)
        }
        Family::Power { base, k } => {
            let mut out = Vec::new();
            for ideal in realize_family(base, spec, rng)? {
                out.push(check_cap(ideal.power(*k)?)?);
            }
            Ok(out)
        }
        Family::Random {
            n,
            t,
            max_exponent,
            count,
        } => {
            let mut out = Vec::new();
            for _ in 0..*count {
                let gens: Vec<Monomial> = (0..*t)
                    .map(|_| random_monomial(rng, *n, *max_exponent))
                    .collect();
                let ideal = MonomialIdeal::minimalize(VariableContext::standard(*n), gens);
                if ideal.num_gens() > spec.max_gens {
                    continue;
                }
                out.push(ideal);
            }
            Ok(out)
        }
    }
}

/// A uniformly random nonconstant monomial with exponents in `0..=max`.
fn random_monomial(rng: &mut ChaCha8Rng, n: usize, max: u32) -> Monomial {
    loop {
        let exps: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=max)).collect();
        if exps.iter().any(|&e| e > 0) {
            return Monomial::new(exps);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "\
# desk corpus
seed = 42
require-weakly-polymatroidal = true
max-vars = 6
max-gens = 100
family = veronese-type n=3 d=2 caps=2,2,1
family = squarefree-veronese n=4 d=2
family = principal n=4 max-degree=3 count=5
family = power base=squarefree-veronese n=3 d=2 k=2
family = random n=4 t=5 max-exponent=2 count=10
";

    #[test]
    fn parses_the_sample_spec() {
        let spec = parse_corpus_spec(SAMPLE).unwrap();
        assert_eq!(spec.seed, 42);
        assert!(spec.require_weakly_polymatroidal);
        assert_eq!(spec.max_vars, 6);
        assert_eq!(spec.max_gens, 100);
        assert_eq!(spec.families.len(), 5);
        assert_eq!(
            spec.families[0],
            Family::VeroneseType {
                n: 3,
                d: 2,
                caps: vec![2, 2, 1],
            }
        );
        assert_eq!(
            spec.families[3],
            Family::Power {
                base: Box::new(Family::SquarefreeVeronese { n: 3, d: 2 }),
                k: 2,
            }
        );
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = parse_corpus_spec("seed = 1\nbogus = 2\n").unwrap_err();
        assert_eq!(
            err,
            CorpusError::Parse {
                line: 2,
                message: "unknown key `bogus`".to_string(),
            }
        );
        let err = parse_corpus_spec("family = veronese-type n=3 d=2 caps=1,1\n").unwrap_err();
        assert!(matches!(err, CorpusError::Parse { line: 1, .. }));
        let err = parse_corpus_spec("family = squarefree-veronese n=2 d=3\n").unwrap_err();
        assert!(matches!(err, CorpusError::Parse { line: 1, .. }));
        let err = parse_corpus_spec("family = random n=4 t=5 max-exponent=2\n").unwrap_err();
        assert!(matches!(err, CorpusError::Parse { line: 1, .. }));
    }

    #[test]
    fn squarefree_veronese_is_capped_veronese() {
        let a = squarefree_veronese_ideal(3, 2);
        let b = veronese_type_ideal(3, 2, &[1, 1, 1]);
        assert_eq!(a, b);
        // Degree-2 squarefree monomials in three variables: the triangle.
        let exps: Vec<&[u32]> = a.gens().iter().map(|g| g.exponents()).collect();
        assert_eq!(exps, vec![&[1, 1, 0][..], &[1, 0, 1], &[0, 1, 1]]);
    }

    #[test]
    fn veronese_type_respects_caps() {
        let i = veronese_type_ideal(2, 2, &[2, 2]);
        assert_eq!(i.num_gens(), 3);
        let j = veronese_type_ideal(2, 2, &[1, 2]);
        let exps: Vec<&[u32]> = j.gens().iter().map(|g| g.exponents()).collect();
        assert_eq!(exps, vec![&[1, 1][..], &[0, 2]]);
    }

    #[test]
    fn squared_squarefree_veronese_has_six_generators() {
        // Multiplying the degree-2 squarefree family in three variables by
        // itself yields the full degree-4 antichain below caps (2,2,2):
        // six generators, not fewer.
        let base = squarefree_veronese_ideal(3, 2);
        let square = base.power(2).unwrap();
        assert_eq!(square.num_gens(), 6);
        let expected = veronese_type_ideal(3, 4, &[2, 2, 2]);
        assert_eq!(square, expected);
    }

    #[test]
    fn generation_is_deterministic() {
        let spec = parse_corpus_spec(SAMPLE).unwrap();
        let a = generate(&spec).unwrap();
        let b = generate(&spec).unwrap();
        assert_eq!(a, b);
        assert!(!a.is_empty());
    }

    #[test]
    fn ids_are_sequential_and_labeled() {
        let spec = parse_corpus_spec(SAMPLE).unwrap();
        let entries = generate(&spec).unwrap();
        assert_eq!(entries[0].id, "0000-veronese-type");
        assert_eq!(entries[1].id, "0001-squarefree-veronese");
        for (i, entry) in entries.iter().enumerate() {
            assert!(entry.id.starts_with(&format!("{i:04}-")));
        }
    }

    #[test]
    fn filter_keeps_only_weakly_polymatroidal_ideals() {
        let spec = CorpusSpec {
            seed: 7,
            families: vec![Family::Random {
                n: 4,
                t: 4,
                max_exponent: 2,
                count: 40,
            }],
            ..CorpusSpec::default()
        };
        let entries = generate(&spec).unwrap();
        assert!(!entries.is_empty());
        for entry in &entries {
            assert!(
                entry.ideal.is_zero() || is_weakly_polymatroidal(&entry.ideal),
                "{} slipped through the filter",
                entry.ideal
            );
        }

        // Without the filter the same seed yields strictly more ideals.
        let unfiltered = CorpusSpec {
            require_weakly_polymatroidal: false,
            ..spec
        };
        let all = generate(&unfiltered).unwrap();
        assert!(all.len() > entries.len());
    }

    #[test]
    fn different_seeds_give_different_draws() {
        let family = Family::Random {
            n: 4,
            t: 4,
            max_exponent: 2,
            count: 10,
        };
        let a = generate(&CorpusSpec {
            seed: 1,
            require_weakly_polymatroidal: false,
            families: vec![family.clone()],
            ..CorpusSpec::default()
        })
        .unwrap();
        let b = generate(&CorpusSpec {
            seed: 2,
            require_weakly_polymatroidal: false,
            families: vec![family],
            ..CorpusSpec::default()
        })
        .unwrap();
        assert_ne!(a, b);
    }

    #[test]
    fn variable_cap_is_enforced() {
        let spec = CorpusSpec {
            max_vars: 3,
            families: vec![Family::SquarefreeVeronese { n: 4, d: 2 }],
            ..CorpusSpec::default()
        };
        assert!(matches!(
            generate(&spec),
            Err(CorpusError::TooManyVariables { n: 4, max: 3, .. })
        ));
    }

    #[test]
    fn generator_cap_fails_deterministic_families() {
        let spec = CorpusSpec {
            max_gens: 2,
            families: vec![Family::SquarefreeVeronese { n: 4, d: 2 }],
            ..CorpusSpec::default()
        };
        assert!(matches!(
            generate(&spec),
            Err(CorpusError::TooManyGenerators { t: 6, max: 2, .. })
        ));
    }

    #[test]
    fn family_display_round_trips_through_the_parser() {
        let spec = parse_corpus_spec(SAMPLE).unwrap();
        for family in &spec.families {
            let line = format!("family = {family}");
            let reparsed = parse_corpus_spec(&line).unwrap();
            assert_eq!(reparsed.families, vec![family.clone()]);
        }
    }
}
