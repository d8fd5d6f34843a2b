//! Batch verification over a corpus: classify, decompose, measure, report.
//!
//! Each corpus entry is processed independently (in parallel when asked),
//! producing one report row. Row order always matches corpus order, so a
//! suite run is reproducible regardless of the number of worker threads.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::is_weakly_polymatroidal;
use crate::corpus::CorpusEntry;
use crate::decomposer::{verify_conjecture, ConjectureOptions, DecomposeError};
use crate::homology::Depth;
use crate::stanley::SdepthConfig;

/// Options for a suite run.
#[derive(Debug, Clone, Default)]
pub struct SuiteOptions {
    /// Also compute exact Stanley depth per ideal (costlier).
    pub exact: bool,
    /// Worker threads; `None` uses the process-wide default.
    pub jobs: Option<usize>,
    pub sdepth: SdepthConfig,
}

/// What happened to one corpus entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RowStatus {
    /// Decomposed, measured, and checked.
    Verified,
    /// Outside the method's preconditions (not weakly polymatroidal, or the
    /// unit ideal); nothing was computed.
    Skipped,
    /// An internal failure; see `detail`.
    Error,
}

impl RowStatus {
    fn as_str(self) -> &'static str {
        match self {
            RowStatus::Verified => "verified",
            RowStatus::Skipped => "skipped",
            RowStatus::Error => "error",
        }
    }
}

/// One line of the suite report.
#[derive(Debug, Clone, Serialize)]
pub struct ReportRow {
    pub id: String,
    pub family: String,
    pub n: usize,
    pub t: usize,
    pub weakly_polymatroidal: bool,
    pub polymatroidal: bool,
    pub pd: Option<usize>,
    pub depth: Option<Depth>,
    pub constructed_sdepth: Option<Depth>,
    pub num_spaces: Option<usize>,
    pub exact_sdepth: Option<Depth>,
    /// `Some(false)` marks a timeout fallback: the value is only a bound.
    pub exact_is_proven: Option<bool>,
    pub conjecture_holds: Option<bool>,
    pub status: RowStatus,
    pub detail: String,
    pub wall_ms: u64,
}

/// The result of a full suite run.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub rows: Vec<ReportRow>,
}

/// Aggregate counts over a report, serialized into the JSON output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportSummary {
    pub total: usize,
    pub verified: usize,
    pub skipped: usize,
    pub errors: usize,
    pub conjecture_violations: usize,
    pub all_passed: bool,
}

impl VerificationReport {
    pub fn summary(&self) -> ReportSummary {
        let verified = self
            .rows
            .iter()
            .filter(|r| r.status == RowStatus::Verified)
            .count();
        let skipped = self
            .rows
            .iter()
            .filter(|r| r.status == RowStatus::Skipped)
            .count();
        let errors = self
            .rows
            .iter()
            .filter(|r| r.status == RowStatus::Error)
            .count();
        let conjecture_violations = self
            .rows
            .iter()
            .filter(|r| r.conjecture_holds == Some(false))
            .count();
        ReportSummary {
            total: self.rows.len(),
            verified,
            skipped,
            errors,
            conjecture_violations,
            all_passed: errors == 0 && conjecture_violations == 0,
        }
    }

    /// Whether every processed ideal verified cleanly: no internal errors and
    /// no conjecture violations. Skipped rows do not fail a run.
    pub fn all_passed(&self) -> bool {
        self.summary().all_passed
    }

    /// A fixed-width text table for terminal output.
    pub fn render_table(&self) -> String {
        let header = [
            "id", "family", "n", "t", "wp", "poly", "pd", "depth", "sdepth", "exact", "holds",
            "status", "ms",
        ];
        let mut grid: Vec<Vec<String>> = vec![header.iter().map(|s| s.to_string()).collect()];
        for row in &self.rows {
            let opt_usize = |v: Option<usize>| v.map_or(String::new(), |x| x.to_string());
            let opt_depth = |v: Option<Depth>| v.map_or(String::new(), |x| x.to_string());
            let exact = match (row.exact_sdepth, row.exact_is_proven) {
                (Some(v), Some(true)) => v.to_string(),
                (Some(v), Some(false)) => format!(">={v}"),
                _ => String::new(),
            };
            grid.push(vec![
                row.id.clone(),
                row.family.clone(),
                row.n.to_string(),
                row.t.to_string(),
                if row.weakly_polymatroidal { "y" } else { "n" }.to_string(),
                if row.polymatroidal { "y" } else { "n" }.to_string(),
                opt_usize(row.pd),
                opt_depth(row.depth),
                opt_depth(row.constructed_sdepth),
                exact,
                row.conjecture_holds
                    .map_or(String::new(), |h| if h { "y" } else { "NO" }.to_string()),
                row.status.as_str().to_string(),
                row.wall_ms.to_string(),
            ]);
        }
        let cols = header.len();
        let mut widths = vec![0usize; cols];
        for line in &grid {
            for (c, cell) in line.iter().enumerate() {
                widths[c] = widths[c].max(cell.len());
            }
        }
        let mut out = String::new();
        for line in &grid {
            for (c, cell) in line.iter().enumerate() {
                if c > 0 {
                    out.push_str("  ");
                }
                out.push_str(cell);
                for _ in cell.len()..widths[c] {
                    out.push(' ');
                }
            }
            while out.ends_with(' ') {
                out.pop();
            }
            out.push('\n');
        }
        out
    }
}

/// Process every corpus entry and assemble the report. Row order matches
/// entry order whatever the thread count.
pub fn run_suite(entries: &[CorpusEntry], options: &SuiteOptions) -> VerificationReport {
    let conjecture = ConjectureOptions {
        exact: options.exact,
        sdepth: options.sdepth.clone(),
    };
    let process = |entry: &CorpusEntry| process_entry(entry, &conjecture);
    let rows: Vec<ReportRow> = match options.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("building the suite thread pool failed")
            .install(|| entries.par_iter().map(process).collect()),
        None => entries.par_iter().map(process).collect(),
    };
    VerificationReport { rows }
}

fn process_entry(entry: &CorpusEntry, options: &ConjectureOptions) -> ReportRow {
    let started = Instant::now();
    let ideal = &entry.ideal;
    let weakly_polymatroidal =
        !ideal.is_unit() && (ideal.is_zero() || is_weakly_polymatroidal(ideal));
    let mut row = ReportRow {
        id: entry.id.clone(),
        family: entry.family.clone(),
        n: ideal.n(),
        t: ideal.num_gens(),
        weakly_polymatroidal,
        polymatroidal: false,
        pd: None,
        depth: None,
        constructed_sdepth: None,
        num_spaces: None,
        exact_sdepth: None,
        exact_is_proven: None,
        conjecture_holds: None,
        status: RowStatus::Verified,
        detail: String::new(),
        wall_ms: 0,
    };
    match verify_conjecture(ideal, options) {
        Ok(report) => {
            row.polymatroidal = report.polymatroidal;
            row.pd = Some(report.pd);
            row.depth = Some(report.depth);
            row.constructed_sdepth = Some(report.constructed_sdepth);
            row.num_spaces = Some(report.num_spaces);
            if let Some(outcome) = &report.exact_sdepth {
                row.exact_sdepth = Some(outcome.value);
                row.exact_is_proven = Some(outcome.exact);
            }
            row.conjecture_holds = Some(report.conjecture_holds);
        }
        Err(err @ (DecomposeError::NotWeaklyPolymatroidal(_) | DecomposeError::UnitIdeal)) => {
            row.status = RowStatus::Skipped;
            row.detail = err.to_string();
        }
        Err(err) => {
            row.status = RowStatus::Error;
            row.detail = err.to_string();
        }
    }
    row.wall_ms = started.elapsed().as_millis() as u64;
    row
}

/// Write `report.csv` and `report.json` under `out_dir` (created if needed).
/// Returns the two paths.
pub fn write_reports(
    report: &VerificationReport,
    out_dir: &Path,
) -> std::io::Result<(PathBuf, PathBuf)> {
    std::fs::create_dir_all(out_dir)?;
    let csv_path = out_dir.join("report.csv");
    let mut writer = csv::Writer::from_path(&csv_path)?;
    for row in &report.rows {
        writer.serialize(row)?;
    }
    writer.flush()?;

    #[derive(Serialize)]
    struct JsonReport<'a> {
        summary: ReportSummary,
        rows: &'a [ReportRow],
    }
    let json_path = out_dir.join("report.json");
    let mut file = std::fs::File::create(&json_path)?;
    serde_json::to_writer_pretty(
        &mut file,
        &JsonReport {
            summary: report.summary(),
            rows: &report.rows,
        },
    )?;
    file.write_all(b"\n")?;
    Ok((csv_path, json_path))
}

/// Per-ideal timeout override from the `STANLEY_LAB_TIMEOUT` environment
/// variable, in (possibly fractional) seconds. `Ok(None)` when unset; an
/// unparsable or non-positive value is an error.
pub fn timeout_from_env() -> Result<Option<Duration>, String> {
    match std::env::var("STANLEY_LAB_TIMEOUT") {
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(e) => Err(format!("STANLEY_LAB_TIMEOUT is unreadable: {e}")),
        Ok(raw) => {
            let seconds: f64 = raw
                .parse()
                .map_err(|_| format!("STANLEY_LAB_TIMEOUT must be seconds, got `{raw}`"))?;
            if !(seconds > 0.0 && seconds.is_finite()) {
                return Err(format!(
                    "STANLEY_LAB_TIMEOUT must be a positive number of seconds, got `{raw}`"
                ));
            }
            Ok(Some(Duration::from_secs_f64(seconds)))
        }
    }
}
