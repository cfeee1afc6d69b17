use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use qdissect_core::overpartitions::{
    overpartition_oracle, overpartition_oracle_mod, scan_congruence_with, CongruenceClaim, ScanMode,
};
use qdissect_core::qlang::{self, SourceSpan};
use qdissect_core::verify::{
    catalog, export_catalog, parse_catalog, summarize, verify_records, Backend, Fidelity,
    IdentityRecord, Relation, Status, VerificationReport,
};

const PARSE_OR_USAGE: u8 = 2;
const CHECK_FAILED: u8 = 1;

#[derive(Parser)]
#[command(name = "qdissect", version, about = "q-series expansion and identity checking")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the coefficients of an expression through q^N.
    Expand {
        expr: String,
        #[arg(long, short = 'n')]
        order: usize,
        /// Work modulo m instead of over the integers.
        #[arg(long = "mod", short = 'm')]
        modulus: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Check catalog identities.
    Verify(VerifyArgs),
    /// Check pbar(step*n + offset) = 0 (mod m) for n <= nmax.
    Scan {
        #[arg(long)]
        step: usize,
        #[arg(long)]
        offset: usize,
        #[arg(long = "mod")]
        modulus: u64,
        #[arg(long)]
        nmax: usize,
        /// Use exact counts, reduced afterwards.
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print pbar(0..=K) from the counting recurrence.
    Oracle {
        #[arg(long)]
        nmax: usize,
        #[arg(long = "mod")]
        modulus: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// List catalog records, or write them in catalog text form.
    Catalog {
        /// Destination file, or `-` for standard output.
        #[arg(long)]
        export: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Record id (see `qdissect catalog`).
    #[arg(required_unless_present = "all", conflicts_with = "all")]
    id: Option<String>,
    #[arg(long)]
    all: bool,
    #[arg(long, short = 'n')]
    order: Option<usize>,
    #[arg(long)]
    parallel: bool,
    #[arg(long)]
    json: bool,
    /// Evaluate congruences over Z and reduce at the end.
    #[arg(long)]
    audit: bool,
    /// Check the printed form of corrected records instead.
    #[arg(long)]
    verbatim: bool,
    /// Read records from a catalog file instead of the built-in catalog.
    #[arg(long)]
    catalog: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Expand {
            expr,
            order,
            modulus,
            json,
        } => expand(&expr, order, modulus.unwrap_or(0), json),
        Command::Verify(args) => run_verify(args),
        Command::Scan {
            step,
            offset,
            modulus,
            nmax,
            exact,
            json,
        } => scan(step, offset, modulus, nmax, exact, json),
        Command::Oracle {
            nmax,
            modulus,
            json,
        } => oracle(nmax, modulus, json),
        Command::Catalog { export, json } => list_catalog(export, json),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(PARSE_OR_USAGE)
        }
    }
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json value"));
}

/// The input line with a caret marker under `span`.
fn underline(src: &str, span: SourceSpan) -> String {
    let start = span.start.min(src.len());
    let line_start = src[..start].rfind('\n').map_or(0, |i| i + 1);
    let line_end = src[start..].find('\n').map_or(src.len(), |i| start + i);
    let end = span.end.clamp(start, line_end);
    let pad = src[line_start..start].chars().count();
    let width = src[start..end].chars().count().max(1);
    format!("  {}\n  {}{}", &src[line_start..line_end], " ".repeat(pad), "^".repeat(width))
}

fn expand(src: &str, order: usize, modulus: u64, json: bool) -> Result<u8, String> {
    let series = qlang::expand(src, order, modulus)
        .map_err(|e| format!("{e}\n{}", underline(src, e.span())))?;
    let coeffs: Vec<String> = series.coefficients().iter().map(|c| c.to_string()).collect();
    if json {
        print_json(&json!({
            "expr": src,
            "order": order,
            "modulus": series.modulus(),
            "coefficients": coeffs,
        }));
    } else {
        println!("{}", coeffs.join(" "));
    }
    Ok(0)
}

fn load_records(args: &VerifyArgs) -> Result<Vec<IdentityRecord>, String> {
    let mut records = match &args.catalog {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            parse_catalog(&text).map_err(|e| format!("{}: {e}", path.display()))?
        }
        None => catalog().to_vec(),
    };
    if let Some(id) = &args.id {
        records.retain(|r| &r.id == id);
        if records.is_empty() {
            return Err(format!("no record with id `{id}`"));
        }
    }
    if args.verbatim {
        records = records
            .into_iter()
            .map(|r| r.as_verbatim().unwrap_or(r))
            .collect();
    }
    Ok(records)
}

fn run_verify(args: VerifyArgs) -> Result<u8, String> {
    let records = load_records(&args)?;
    if let Some(n) = args.order {
        if let Some(r) = records.iter().find(|r| n < r.min_order) {
            return Err(format!("order {n} is below the minimum {} of {}", r.min_order, r.id));
        }
    }
    let backend = if args.audit { Backend::Audit } else { Backend::Residue };
    let start = Instant::now();
    let reports = verify_records(&records, args.order, args.parallel, backend);
    let summary = summarize(&reports);
    if args.json {
        print_json(&serde_json::to_value(&reports).expect("reports serialise"));
    } else {
        for (rec, rep) in records.iter().zip(&reports) {
            println!("{}", report_line(rec, rep));
        }
        println!(
            "{} records: {} passed, {} failed, {} errors ({:.1} s)",
            summary.total,
            summary.passed,
            summary.failed,
            summary.errors,
            start.elapsed().as_secs_f64()
        );
    }
    Ok(if summary.all_passed() { 0 } else { CHECK_FAILED })
}

fn report_line(rec: &IdentityRecord, rep: &VerificationReport) -> String {
    let relation = match rec.relation {
        Relation::Equality => "=".to_string(),
        Relation::Congruence(m) => format!("mod {m}"),
    };
    let mark = if matches!(rec.fidelity, Fidelity::Corrected { .. }) { " (corrected)" } else { "" };
    let head = format!("{:<5} {:<12} {:<10} {:<7} order {}", status_word(rep.status), rep.id, rec.anchor, relation, rep.order_checked);
    match (&rep.first_mismatch, &rep.error) {
        (Some(m), _) => format!("{head}  first mismatch at q^{}: lhs {}, rhs {}{mark}", m.exponent, m.lhs, m.rhs),
        (_, Some(e)) => format!("{head}  {e}"),
        _ => format!("{head}  {} ms{mark}", rep.elapsed.as_millis()),
    }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Error => "ERROR",
    }
}

fn scan(step: usize, offset: usize, modulus: u64, nmax: usize, exact: bool, json: bool) -> Result<u8, String> {
    let claim = CongruenceClaim::new(step, offset, modulus, nmax).map_err(|e| e.to_string())?;
    let mode = if exact { ScanMode::Exact } else { ScanMode::Residue };
    let start = Instant::now();
    let violations = scan_congruence_with(&claim, mode);
    if json {
        print_json(&json!({
            "step": step,
            "offset": offset,
            "modulus": modulus,
            "nmax": nmax,
            "violations": violations,
            "ms": start.elapsed().as_millis() as u64,
        }));
    } else if violations.is_empty() {
        println!("pbar({step}n+{offset}) = 0 (mod {modulus}) for 0 <= n <= {nmax}: no violations");
    } else {
        println!("{} violations of pbar({step}n+{offset}) = 0 (mod {modulus}) for n <= {nmax}", violations.len());
        for v in &violations {
            println!("  n = {}: residue {}", v.n, v.residue);
        }
    }
    Ok(if violations.is_empty() { 0 } else { CHECK_FAILED })
}

fn oracle(nmax: usize, modulus: Option<u64>, json: bool) -> Result<u8, String> {
    let values: Vec<String> = match modulus {
        Some(m) => {
            CongruenceClaim::new(1, 0, m, 0).map_err(|e| e.to_string())?;
            overpartition_oracle_mod(nmax, m).iter().map(u64::to_string).collect()
        }
        None => overpartition_oracle(nmax).iter().map(|v| v.to_string()).collect(),
    };
    if json {
        print_json(&json!({ "nmax": nmax, "modulus": modulus.unwrap_or(0), "values": values }));
    } else {
        for (n, v) in values.iter().enumerate() {
            println!("{n} {v}");
        }
    }
    Ok(0)
}

fn list_catalog(export: Option<PathBuf>, json: bool) -> Result<u8, String> {
    let records = catalog();
    if let Some(path) = export {
        let text = export_catalog(records);
        if path.as_os_str() == "-" {
            print!("{text}");
        } else {
            fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display()))?;
            eprintln!("wrote {} records to {}", records.len(), path.display());
        }
        return Ok(0);
    }
    if json {
        let rows: Vec<Value> = records
            .iter()
            .map(|r| {
                json!({
                    "id": r.id,
                    "anchor": r.anchor,
                    "relation": match r.relation {
                        Relation::Equality => "eq".to_string(),
                        Relation::Congruence(m) => format!("mod {m}"),
                    },
                    "min_order": r.min_order,
                    "fidelity": if r.is_corrected() { "corrected" } else { "verbatim" },
                    "lhs": r.lhs.to_string(),
                    "rhs": r.rhs.to_string(),
                })
            })
            .collect();
        print_json(&Value::Array(rows));
        return Ok(0);
    }
    for r in records {
        let relation = match r.relation {
            Relation::Equality => "eq".to_string(),
            Relation::Congruence(m) => format!("mod {m}"),
        };
        let line = format!("{:<12} {:<18} {:<7} {}", r.id, r.anchor, relation, if r.is_corrected() { "corrected" } else { "" });
        println!("{}", line.trim_end());
    }
    Ok(0)
}
