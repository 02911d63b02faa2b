//! `towerlab`: command-line front end over the tower verification library.
//!
//! Subcommands: `list` (catalog contents), `verify` (one instance), `scan`
//! (a parameter box), and `reverse` (ad-hoc tower reversal). Every rational
//! is printed exactly as `n` or `n/d`, never as a decimal. Exit codes:
//! 0 = all checks pass, 1 = a check (or reversal) failed, 2 = invalid input.

use std::collections::BTreeMap;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use towerlab_core::catalog::{
    self, CheckResult, FamilyInfo, ScanReport, VerificationReport,
};
use towerlab_core::cone::{ConeError, SimplicialCone, Tower};
use towerlab_core::lattice::{parse_rational, rational_str, LatticeVector, Overlattice};

#[derive(Parser)]
#[command(
    name = "towerlab",
    version,
    about = "Exact-arithmetic verifier for two-step towers of toric weighted blowups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// List the catalog: family ids, parameters, constraints, templates.
    List {
        /// Restrict the listing to one family.
        family: Option<String>,
    },
    /// Instantiate one catalog entry and run every check on it.
    Verify {
        family: String,
        /// Parameter assignment `name=value` (repeatable).
        #[arg(short = 'p', long = "param", value_name = "NAME=VALUE")]
        params: Vec<String>,
    },
    /// Verify every admissible tuple in a parameter box.
    Scan {
        family: String,
        /// Parameter range `name=lo..hi` (inclusive) or `name=value` (repeatable).
        #[arg(short = 'p', long = "param", value_name = "NAME=LO..HI")]
        params: Vec<String>,
        /// Default every unlisted parameter to its minimum..BOUND.
        #[arg(long, value_name = "BOUND")]
        bound: Option<i64>,
        /// Worker threads; the output is identical for every setting.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Reverse an ad-hoc tower and print both orders' weights.
    Reverse {
        /// First center, e.g. `3,2,1,4` (entries `n` or `n/d`).
        #[arg(long)]
        v1: String,
        /// Second center.
        #[arg(long)]
        v2: String,
        /// 1-based chart of the first subdivision hosting the second center
        /// (found automatically when omitted).
        #[arg(long)]
        chart: Option<usize>,
        /// Adjoined lattice generator, e.g. `0,1/2,1/2,1/2` (repeatable).
        #[arg(long = "gen", value_name = "VECTOR")]
        gens: Vec<String>,
    },
}

// ---------------------------------------------------------------------------
// Report documents (the stable JSON schema).

#[derive(Serialize, Deserialize)]
struct CheckDoc {
    name: String,
    status: String,
    lhs: String,
    rhs: String,
}

#[derive(Serialize, Deserialize)]
struct ReportDocument {
    schema_version: String,
    family: String,
    params: BTreeMap<String, i64>,
    checks: Vec<CheckDoc>,
    summary: String,
}

#[derive(Serialize, Deserialize)]
struct ScanDocument {
    schema_version: String,
    family: String,
    ranges: BTreeMap<String, (i64, i64)>,
    verified: usize,
    skipped: usize,
    failed: usize,
    reports: Vec<ReportDocument>,
    summary: String,
}

#[derive(Serialize)]
struct FamilyDocument {
    id: String,
    group: String,
    source: String,
    params: Vec<ParamDocument>,
    constraints: Vec<String>,
    templates: Vec<String>,
    notes: Vec<String>,
}

#[derive(Serialize)]
struct ParamDocument {
    name: String,
    min: i64,
    description: String,
}

#[derive(Serialize)]
struct TowerDocument {
    v1: String,
    chart: usize,
    v2: String,
    weight: String,
    quotient_type: String,
    coefficient: String,
    hat: String,
}

#[derive(Serialize)]
struct ReverseDocument {
    schema_version: String,
    lattice: String,
    forward: TowerDocument,
    reversed: TowerDocument,
    summary: String,
}

const SCHEMA_VERSION: &str = "1";

fn check_doc(c: &CheckResult) -> CheckDoc {
    CheckDoc {
        name: c.name.clone(),
        status: if c.passed { "pass" } else { "fail" }.to_string(),
        lhs: c.lhs.clone(),
        rhs: c.rhs.clone(),
    }
}

fn report_doc(rep: &VerificationReport) -> ReportDocument {
    let passed = rep.checks.iter().filter(|c| c.passed).count();
    ReportDocument {
        schema_version: SCHEMA_VERSION.to_string(),
        family: rep.family.clone(),
        params: rep.params.clone(),
        checks: rep.checks.iter().map(check_doc).collect(),
        summary: format!("{}/{} checks passed", passed, rep.checks.len()),
    }
}

fn params_str(params: &BTreeMap<String, i64>) -> String {
    if params.is_empty() {
        "(none)".to_string()
    } else {
        params
            .iter()
            .map(|(k, v)| format!("{}={}", k, v))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn print_report_text(doc: &ReportDocument) {
    println!("family: {}", doc.family);
    println!("params: {}", params_str(&doc.params));
    println!("{:<18} {:<6} computed | expected", "check", "status");
    for c in &doc.checks {
        println!("{:<18} {:<6} {} | {}", c.name, c.status, c.lhs, c.rhs);
    }
    println!("summary: {}", doc.summary);
}

// ---------------------------------------------------------------------------
// Argument parsing helpers.

fn split_assignment(item: &str) -> Result<(String, String)> {
    let (name, value) = item
        .split_once('=')
        .ok_or_else(|| anyhow!("expected NAME=VALUE, got `{}`", item))?;
    Ok((name.trim().to_string(), value.trim().to_string()))
}

fn parse_values(items: &[String]) -> Result<BTreeMap<String, i64>> {
    let mut out = BTreeMap::new();
    for item in items {
        let (name, value) = split_assignment(item)?;
        let value: i64 = value
            .parse()
            .with_context(|| format!("parameter `{}` is not an integer: `{}`", name, value))?;
        if out.insert(name.clone(), value).is_some() {
            bail!("parameter `{}` given twice", name);
        }
    }
    Ok(out)
}

fn parse_ranges(items: &[String]) -> Result<BTreeMap<String, (i64, i64)>> {
    let mut out = BTreeMap::new();
    for item in items {
        let (name, value) = split_assignment(item)?;
        let range = match value.split_once("..") {
            Some((lo, hi)) => {
                let lo: i64 = lo
                    .parse()
                    .with_context(|| format!("bad lower bound in `{}`", item))?;
                let hi: i64 = hi
                    .parse()
                    .with_context(|| format!("bad upper bound in `{}`", item))?;
                (lo, hi)
            }
            None => {
                let v: i64 = value
                    .parse()
                    .with_context(|| format!("parameter `{}` is not an integer or range", name))?;
                (v, v)
            }
        };
        if out.insert(name.clone(), range).is_some() {
            bail!("parameter `{}` given twice", name);
        }
    }
    Ok(out)
}

fn parse_vector(s: &str) -> Result<LatticeVector> {
    let coords = s
        .split(',')
        .map(|part| parse_rational(part).map_err(|e| anyhow!("{}", e)))
        .collect::<Result<Vec<_>>>()?;
    if coords.is_empty() {
        bail!("empty vector `{}`", s);
    }
    Ok(LatticeVector::new(coords))
}

// ---------------------------------------------------------------------------
// Subcommands.

fn family_doc(info: &FamilyInfo) -> FamilyDocument {
    FamilyDocument {
        id: info.id.to_string(),
        group: info.group.to_string(),
        source: info.source.to_string(),
        params: info
            .params
            .iter()
            .map(|p| ParamDocument {
                name: p.name.to_string(),
                min: p.min,
                description: p.description.to_string(),
            })
            .collect(),
        constraints: info.constraints.iter().map(|s| s.to_string()).collect(),
        templates: info.templates.iter().map(|s| s.to_string()).collect(),
        notes: info.notes.iter().map(|s| s.to_string()).collect(),
    }
}

fn cmd_list(family: Option<&str>, format: Format) -> Result<u8> {
    let all: Vec<&FamilyInfo> = match family {
        None => catalog::families().iter().collect(),
        Some(id) => vec![catalog::family(id)
            .ok_or_else(|| anyhow!("unknown family `{}`", id))?],
    };
    match format {
        Format::Json => {
            let docs: Vec<FamilyDocument> = all.iter().map(|f| family_doc(f)).collect();
            println!("{}", serde_json::to_string_pretty(&docs)?);
        }
        Format::Text => {
            for info in all {
                println!("{}  [group: {}]", info.id, info.group);
                println!("  source: {}", info.source);
                if info.params.is_empty() {
                    println!("  params: (none)");
                } else {
                    for p in info.params {
                        println!("  param: {} (min {}) — {}", p.name, p.min, p.description);
                    }
                }
                for c in info.constraints {
                    println!("  constraint: {}", c);
                }
                for t in info.templates {
                    println!("  template: {}", t);
                }
                for n in info.notes {
                    println!("  note: {}", n);
                }
                println!();
            }
        }
    }
    Ok(0)
}

fn cmd_verify(family: &str, params: &[String], format: Format) -> Result<u8> {
    let values = parse_values(params)?;
    let instance = catalog::instantiate(family, &values).map_err(|e| anyhow!("{}", e))?;
    let report = catalog::verify(&instance);
    let doc = report_doc(&report);
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&doc)?),
        Format::Text => print_report_text(&doc),
    }
    Ok(if report.passed() { 0 } else { 1 })
}

fn cmd_scan(
    family: &str,
    params: &[String],
    bound: Option<i64>,
    jobs: usize,
    format: Format,
) -> Result<u8> {
    let info = catalog::family(family).ok_or_else(|| anyhow!("unknown family `{}`", family))?;
    let mut ranges = parse_ranges(params)?;
    if let Some(bound) = bound {
        for spec in info.params {
            ranges.entry(spec.name.to_string()).or_insert((spec.min, bound));
        }
    }
    let report: ScanReport =
        catalog::scan(family, &ranges, jobs).map_err(|e| anyhow!("{}", e))?;
    let failed = report.reports.iter().filter(|r| !r.passed()).count();
    let summary = format!(
        "{} verified, {} skipped, {} failed",
        report.reports.len(),
        report.skipped,
        failed
    );
    match format {
        Format::Json => {
            let doc = ScanDocument {
                schema_version: SCHEMA_VERSION.to_string(),
                family: family.to_string(),
                ranges,
                verified: report.reports.len(),
                skipped: report.skipped,
                failed,
                reports: report.reports.iter().map(report_doc).collect(),
                summary,
            };
            println!("{}", serde_json::to_string_pretty(&doc)?);
        }
        Format::Text => {
            println!("family: {}", family);
            println!(
                "ranges: {}",
                ranges
                    .iter()
                    .map(|(k, (lo, hi))| format!("{}={}..{}", k, lo, hi))
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            for rep in &report.reports {
                if rep.passed() {
                    println!("{}: pass ({} checks)", params_str(&rep.params), rep.checks.len());
                } else {
                    println!("{}: FAIL", params_str(&rep.params));
                    for c in rep.checks.iter().filter(|c| !c.passed) {
                        println!("  {}: {} | expected {}", c.name, c.lhs, c.rhs);
                    }
                }
            }
            println!("summary: {}", summary);
        }
    }
    Ok(if failed == 0 { 0 } else { 1 })
}

fn tower_document(tower: &Tower) -> Result<TowerDocument> {
    let w = tower.second_weight();
    let quotient = tower
        .chart_cone()
        .quotient_type()
        .map_err(|e| anyhow!("{}", e))?;
    Ok(TowerDocument {
        v1: format!("{:?}", tower.v1()),
        chart: tower.chart(),
        v2: format!("{:?}", tower.v2()),
        weight: format!(
            "(1/{})({})",
            w.order,
            w.numerators
                .iter()
                .map(|n| n.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        ),
        quotient_type: quotient.to_string(),
        coefficient: rational_str(&w.marked_coefficient()),
        hat: format!("{:?}", w.hat),
    })
}

fn print_tower_text(label: &str, doc: &TowerDocument) {
    println!("{}:", label);
    println!("  center v1 = {}, chart {}", doc.v1, doc.chart);
    println!("  weight of v2 = {} in chart {}: {}", doc.v2, doc.chart, doc.weight);
    println!("  chart quotient type: {}", doc.quotient_type);
    println!(
        "  decomposition: v2 = {} * v1 + {}",
        doc.coefficient, doc.hat
    );
}

fn cmd_reverse(
    v1: &str,
    v2: &str,
    chart: Option<usize>,
    gens: &[String],
    format: Format,
) -> Result<u8> {
    let v1 = parse_vector(v1)?;
    let v2 = parse_vector(v2)?;
    let gens = gens
        .iter()
        .map(|g| parse_vector(g))
        .collect::<Result<Vec<_>>>()?;
    let lattice = Overlattice::canonicalize(v1.dim(), &gens).map_err(|e| anyhow!("{}", e))?;
    let orthant = SimplicialCone::orthant(lattice.clone()).map_err(|e| anyhow!("{}", e))?;

    let chart = match chart {
        Some(k) => k,
        None => {
            let charts = orthant.star_subdivide(&v1).map_err(|e| anyhow!("{}", e))?;
            let mut found = None;
            for (i, c) in charts.iter().enumerate() {
                if c.contains_interior(&v2).map_err(|e| anyhow!("{}", e))? {
                    found = Some(i + 1);
                    break;
                }
            }
            match found {
                Some(k) => k,
                None => {
                    eprintln!(
                        "not interchangeable: the second center lies on a wall of the subdivision along the first"
                    );
                    return Ok(1);
                }
            }
        }
    };

    let tower =
        Tower::new(lattice.clone(), v1, chart, v2).map_err(|e| anyhow!("{}", e))?;
    let reversed = match tower.reverse() {
        Ok(r) => r,
        Err(ConeError::NotInterchangeable(why)) => {
            eprintln!("not interchangeable: {}", why);
            return Ok(1);
        }
        Err(e) => return Err(anyhow!("{}", e)),
    };

    let doc = ReverseDocument {
        schema_version: SCHEMA_VERSION.to_string(),
        lattice: format!("{:?}", lattice),
        forward: tower_document(&tower)?,
        reversed: tower_document(&reversed)?,
        summary: "interchangeable; reversal computed".to_string(),
    };
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&doc)?),
        Format::Text => {
            println!("lattice: {}", doc.lattice);
            print_tower_text("forward tower", &doc.forward);
            print_tower_text("reversed tower", &doc.reversed);
            println!("summary: {}", doc.summary);
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::List { family } => cmd_list(family.as_deref(), cli.format),
        Command::Verify { family, params } => cmd_verify(family, params, cli.format),
        Command::Scan {
            family,
            params,
            bound,
            jobs,
        } => cmd_scan(family, params, *bound, *jobs, cli.format),
        Command::Reverse {
            v1,
            v2,
            chart,
            gens,
        } => cmd_reverse(v1, v2, *chart, gens, cli.format),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}
