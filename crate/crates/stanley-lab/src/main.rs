//! Command-line front end: classify ideals, measure depth and Stanley depth,
//! construct decompositions, and run corpus suites.
//!
//! Exit codes: 0 on success, 1 on operational errors (unreadable input,
//! malformed files, size caps), 2 when a verification or conjecture check
//! fails.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use stanley_lab::classify::{
    check_polymatroidal, check_weakly_polymatroidal, find_linear_quotients_order,
    linear_quotients_purelex, weakly_polymatroidal_permutations, ExchangeViolation,
};
use stanley_lab::corpus::{generate, parse_corpus_spec};
use stanley_lab::decomposer::{decompose, DecomposeError};
use stanley_lab::homology::{betti_numbers, depth, Characteristic, DepthSource};
use stanley_lab::monomial::{read_ideal_file, IdealLoad, MonomialIdeal};
use stanley_lab::stanley::{exact_sdepth_quotient, SdepthConfig};
use stanley_lab::suite::{run_suite, timeout_from_env, write_reports, SuiteOptions};

#[derive(Parser)]
#[command(
    name = "stanley-lab",
    version,
    about = "Stanley decompositions and Stanley depth of monomial quotient rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report combinatorial properties of an ideal (exchange property,
    /// weak polymatroidality, linear quotients)
    Classify {
        /// Ideal file: a `n <count>` header line, then one exponent row per
        /// generator
        file: PathBuf,
    },
    /// Projective dimension and depth of S/I
    Depth {
        file: PathBuf,
        /// Compute multigraded Betti numbers instead of the quotient-order
        /// formula, and print the table
        #[arg(long)]
        oracle: bool,
        /// Field characteristic for the oracle (a prime; implies --oracle)
        #[arg(long = "char", value_name = "P")]
        characteristic: Option<u64>,
    },
    /// Stanley depth of S/I
    Sdepth {
        file: PathBuf,
        /// Exact value by interval-partition search (the default)
        #[arg(long, conflicts_with = "construct")]
        exact: bool,
        /// Lower bound from the constructive decomposition instead
        #[arg(long)]
        construct: bool,
    },
    /// Construct a Stanley decomposition and verify it
    Decompose {
        file: PathBuf,
        /// Print the recursion trace
        #[arg(long)]
        trace: bool,
        /// Also compute the exact Stanley depth and compare
        #[arg(long)]
        verify_exact: bool,
    },
    /// Generate a corpus and verify every ideal in it
    Suite {
        /// Corpus description file
        #[arg(long)]
        spec: PathBuf,
        /// Output directory for report.csv and report.json
        #[arg(long)]
        out: PathBuf,
        /// Also compute exact Stanley depth per ideal
        #[arg(long)]
        exact: bool,
        /// Worker threads (default: all cores)
        #[arg(long)]
        jobs: Option<usize>,
        /// Override the seed in the spec file
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Classify { file } => cmd_classify(&file),
        Command::Depth {
            file,
            oracle,
            characteristic,
        } => cmd_depth(&file, oracle || characteristic.is_some(), characteristic),
        Command::Sdepth {
            file,
            exact,
            construct,
        } => {
            // --exact is the default; the flag exists to be explicit.
            let _ = exact;
            cmd_sdepth(&file, !construct)
        }
        Command::Decompose {
            file,
            trace,
            verify_exact,
        } => cmd_decompose(&file, trace, verify_exact),
        Command::Suite {
            spec,
            out,
            exact,
            jobs,
            seed,
        } => cmd_suite(&spec, &out, exact, jobs, seed),
    }
}

/// Load an ideal file, reporting dropped redundant generators on stderr.
fn load_ideal(path: &Path) -> Result<MonomialIdeal, String> {
    let IdealLoad { ideal, dropped } =
        read_ideal_file(path).map_err(|e| format!("{}: {e}", path.display()))?;
    if !dropped.is_empty() {
        let ctx = ideal.context();
        let shown: Vec<String> = dropped.iter().map(|m| m.display(ctx).to_string()).collect();
        eprintln!(
            "note: dropped {} redundant generator{}: {}",
            dropped.len(),
            if dropped.len() == 1 { "" } else { "s" },
            shown.join(", ")
        );
    }
    Ok(ideal)
}

/// The Stanley depth search configuration, honoring STANLEY_LAB_TIMEOUT.
fn sdepth_config() -> Result<SdepthConfig, String> {
    let mut config = SdepthConfig::default();
    if let Some(timeout) = timeout_from_env()? {
        config.timeout = timeout;
    }
    Ok(config)
}

fn describe_ideal(ideal: &MonomialIdeal) {
    println!("ideal: {ideal} in {}", ideal.context());
    println!("minimal generators: {}", ideal.num_gens());
}

fn cmd_classify(file: &Path) -> Result<ExitCode, String> {
    let ideal = load_ideal(file)?;
    describe_ideal(&ideal);
    if ideal.is_zero() || ideal.is_unit() {
        println!("classification: trivial (no proper generators to compare)");
        return Ok(ExitCode::SUCCESS);
    }
    let ctx = ideal.context();

    match check_polymatroidal(&ideal) {
        Ok(()) => println!("polymatroidal: yes"),
        Err(ExchangeViolation::MixedDegrees { a, b }) => println!(
            "polymatroidal: no (mixed degrees: {} and {})",
            a.display(ctx),
            b.display(ctx)
        ),
        Err(ExchangeViolation::Exchange { u, v, index }) => println!(
            "polymatroidal: no (no exchange for {} against {} at {})",
            u.display(ctx),
            v.display(ctx),
            ctx.name(index)
        ),
    }

    let weakly = check_weakly_polymatroidal(&ideal);
    match &weakly {
        Ok(()) => println!("weakly polymatroidal: yes"),
        Err(v) => println!(
            "weakly polymatroidal: no ({} over {} fails at {})",
            v.upper.display(ctx),
            v.lower.display(ctx),
            ctx.name(v.slot)
        ),
    }

    if weakly.is_ok() {
        println!("weakly polymatroidal under some variable order: yes (as given)");
    } else if ideal.n() <= 7 {
        let perms = weakly_polymatroidal_permutations(&ideal);
        match perms.first() {
            Some(perm) => {
                let order: Vec<&str> = perm.iter().map(|&old| ctx.name(old)).collect();
                println!(
                    "weakly polymatroidal under some variable order: yes ({} of {}, first: {})",
                    perms.len(),
                    (1..=ideal.n()).product::<usize>(),
                    order.join(", ")
                );
            }
            None => println!("weakly polymatroidal under some variable order: no"),
        }
    } else {
        println!("weakly polymatroidal under some variable order: unknown (more than 7 variables)");
    }

    match linear_quotients_purelex(&ideal) {
        Ok(cert) => {
            let counts: Vec<String> = cert.counts().iter().map(usize::to_string).collect();
            println!(
                "linear quotients in the stored order: yes (step sizes {})",
                counts.join(", ")
            );
        }
        Err(failure) => {
            println!(
                "linear quotients in the stored order: no (the colon at position {} needs {})",
                failure.position,
                failure.offending.display(ctx)
            );
            match find_linear_quotients_order(&ideal, 1_000_000) {
                Ok(Some(cert)) => {
                    let order: Vec<String> = cert
                        .order
                        .iter()
                        .map(|&i| ideal.gens()[i].display(ctx).to_string())
                        .collect();
                    println!("linear quotients in some order: yes ({})", order.join(", "));
                }
                Ok(None) => println!("linear quotients in some order: no"),
                Err(cap) => println!("linear quotients in some order: unknown ({cap})"),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_depth(file: &Path, oracle: bool, characteristic: Option<u64>) -> Result<ExitCode, String> {
    let ideal = load_ideal(file)?;
    describe_ideal(&ideal);
    if oracle {
        if ideal.is_unit() {
            return Err("the unit ideal has no Betti table; S/S is the zero module".to_string());
        }
        let field = match characteristic {
            None | Some(0) => Characteristic::Zero,
            Some(p) => Characteristic::Prime(p),
        };
        let table = betti_numbers(&ideal, field).map_err(|e| e.to_string())?;
        let ctx = ideal.context();
        println!("betti numbers over characteristic {field}:");
        for i in 0..=table.pd() {
            let mut parts = Vec::new();
            for ((deg, multi), rank) in table.entries() {
                if *deg != i {
                    continue;
                }
                let m = stanley_lab::monomial::Monomial::new(multi.clone());
                let shown = m.display(ctx).to_string();
                parts.push(if *rank == 1 {
                    shown
                } else {
                    format!("{shown} ({rank})")
                });
            }
            println!("  b_{i} = {}: {}", table.total(i), parts.join(", "));
        }
        let pd = table.pd();
        println!("pd(S/I) = {pd}");
        println!("depth(S/I) = {}", ideal.n() - pd);
        return Ok(ExitCode::SUCCESS);
    }
    let report = depth(&ideal).map_err(|e| e.to_string())?;
    println!("pd(S/I) = {}", report.pd);
    println!("depth(S/I) = {}", report.depth);
    let method = match report.source {
        DepthSource::LinearQuotientsFormula => "linear-quotients formula",
        DepthSource::BettiOracle => "betti oracle (no linear quotients in the stored order)",
        DepthSource::Convention => "convention",
    };
    println!("method: {method}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_sdepth(file: &Path, exact: bool) -> Result<ExitCode, String> {
    let ideal = load_ideal(file)?;
    describe_ideal(&ideal);
    if exact {
        let config = sdepth_config()?;
        let outcome = exact_sdepth_quotient(&ideal, &config).map_err(|e| e.to_string())?;
        if outcome.exact {
            println!("sdepth(S/I) = {} (exact)", outcome.value);
        } else {
            println!(
                "sdepth(S/I) >= {} (lower bound; search timed out after {:?})",
                outcome.value, config.timeout
            );
        }
        println!(
            "decomposition ({} spaces):",
            outcome.decomposition.num_spaces()
        );
        print!("{}", outcome.decomposition.render_lines());
        return Ok(ExitCode::SUCCESS);
    }
    match decompose(&ideal) {
        Ok((decomposition, _)) => {
            println!("sdepth(S/I) >= {} (constructed)", decomposition.sdepth());
            println!("decomposition ({} spaces):", decomposition.num_spaces());
            print!("{}", decomposition.render_lines());
            Ok(ExitCode::SUCCESS)
        }
        Err(e) => Err(e.to_string()),
    }
}

fn cmd_decompose(file: &Path, trace: bool, verify_exact: bool) -> Result<ExitCode, String> {
    let ideal = load_ideal(file)?;
    describe_ideal(&ideal);
    let (decomposition, recursion) = match decompose(&ideal) {
        Ok(pair) => pair,
        Err(e @ (DecomposeError::Verification(_) | DecomposeError::Invariant(_))) => {
            eprintln!("error: {e}");
            return Ok(ExitCode::from(2));
        }
        Err(e) => return Err(e.to_string()),
    };
    println!(
        "constructed decomposition ({} spaces), depth {}:",
        decomposition.num_spaces(),
        decomposition.sdepth()
    );
    print!("{}", decomposition.render_lines());
    let report = depth(&ideal).map_err(|e| e.to_string())?;
    println!(
        "depth(S/I) = {}; the construction meets it: {}",
        report.depth,
        if decomposition.sdepth() >= report.depth {
            "yes"
        } else {
            "NO"
        }
    );
    if trace {
        println!("trace:");
        print!("{recursion}");
    }
    if verify_exact {
        let config = sdepth_config()?;
        let outcome = exact_sdepth_quotient(&ideal, &config).map_err(|e| e.to_string())?;
        if outcome.exact {
            println!("exact sdepth(S/I) = {}", outcome.value);
            if outcome.value < decomposition.sdepth() {
                eprintln!("error: the construction exceeds the proven optimum");
                return Ok(ExitCode::from(2));
            }
        } else {
            println!("exact sdepth(S/I) >= {} (search timed out)", outcome.value);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_suite(
    spec_path: &Path,
    out: &Path,
    exact: bool,
    jobs: Option<usize>,
    seed: Option<u64>,
) -> Result<ExitCode, String> {
    let text = std::fs::read_to_string(spec_path)
        .map_err(|e| format!("{}: {e}", spec_path.display()))?;
    let mut spec = parse_corpus_spec(&text).map_err(|e| format!("{}: {e}", spec_path.display()))?;
    if let Some(seed) = seed {
        spec.seed = seed;
    }
    let entries = generate(&spec).map_err(|e| e.to_string())?;
    println!(
        "corpus: {} ideals from {} families (seed {})",
        entries.len(),
        spec.families.len(),
        spec.seed
    );
    let mut options = SuiteOptions {
        exact,
        jobs,
        sdepth: sdepth_config()?,
    };
    if let Some(timeout) = timeout_from_env()? {
        options.sdepth.timeout = timeout;
    }
    let report = run_suite(&entries, &options);
    print!("{}", report.render_table());
    let summary = report.summary();
    println!(
        "summary: {} total, {} verified, {} skipped, {} errors, {} conjecture violations",
        summary.total, summary.verified, summary.skipped, summary.errors,
        summary.conjecture_violations
    );
    let (csv_path, json_path) =
        write_reports(&report, out).map_err(|e| format!("{}: {e}", out.display()))?;
    println!("reports: {} {}", csv_path.display(), json_path.display());
    if summary.all_passed {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(2))
    }
}
