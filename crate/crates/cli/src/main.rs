//! Command-line verification harness for the delta-invariant engine.
//!
//! Exit status: 0 on success, 1 on usage or input errors, 2 when the
//! verification sweep hits a non-marker mismatch. Output is TSV by default;
//! `verify-all` renders an aligned table mirroring the case-table layout,
//! and `--json` switches the data commands to JSON. Rationals are printed
//! exactly; `integrate --approx` adds a decimal column.

use std::borrow::Cow;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use fano_delta::catalog::{self, CaseEntry, EntrySpec};
use fano_delta::delta::{
    alpha_to_delta, delta_bound, isolating_alpha_bound, s_values, verdict_to_json,
};
use fano_delta::exactmath::to_f64;
use fano_delta::flags::ZariskiProfile;
use fano_delta::geometry::{Family, QuotientSingularity, CATALOG_FAMILY_IDS};
use fano_delta::{bi_center_kind, BiCenterKind, CenterClass, CenterKind, TriState, WeightedPoly};

/// Environment variable holding an alternative ledger path.
const LEDGER_ENV: &str = "FANO_DELTA_LEDGER";

#[derive(Parser)]
#[command(name = "fano-delta", version, about = "Delta-invariant lower bounds for Fano 3-fold weighted hypersurfaces", disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the cataloged families
    ListFamilies {
        /// Also print the singular basket of each family
        #[arg(long)]
        all: bool,
    },
    /// Print the singular basket of a general member
    Singularities {
        /// Catalog family number
        #[arg(long, conflicts_with = "raw")]
        family: Option<u64>,
        /// Ad hoc family literal "d;a0,a1,a2,a3,a4"
        #[arg(long)]
        raw: Option<String>,
    },
    /// Classify a singular point of an explicit member
    ClassifyCenter {
        #[arg(long)]
        family: u64,
        /// Polynomial file: one term per line, "coeff e0 e1 e2 e3 e4"
        #[arg(long)]
        poly: PathBuf,
        /// Point selector "1/r(w1,w2,w3)"
        #[arg(long)]
        point: String,
    },
    /// Compute the delta lower bound of one catalog case
    Delta {
        #[arg(long)]
        family: u64,
        #[arg(long)]
        point: String,
        /// Case label from the family table (i, ii, ...)
        #[arg(long, value_name = "LABEL")]
        case: String,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate the S-invariants of a JSON profile
    Integrate {
        #[arg(long)]
        profile: PathBuf,
        #[arg(long)]
        json: bool,
        /// Add a decimal column next to each exact value
        #[arg(long)]
        approx: bool,
    },
    /// Recompute every catalog entry and report matches
    VerifyAll {
        #[arg(long)]
        family: Option<u64>,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    // Die quietly when a pipe closes under us instead of panicking.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> fano_delta::Result<u8> {
    match command {
        Command::ListFamilies { all } => list_families(all),
        Command::Singularities { family, raw } => singularities(family, raw),
        Command::ClassifyCenter { family, poly, point } => classify_center(family, &poly, &point),
        Command::Delta { family, point, case, json } => delta(family, &point, &case, json),
        Command::Integrate { profile, json, approx } => integrate(&profile, json, approx),
        Command::VerifyAll { family, json } => verify_all(family, json),
    }
}

fn ledger_text() -> fano_delta::Result<Cow<'static, str>> {
    match std::env::var_os(LEDGER_ENV) {
        None => Ok(Cow::Borrowed(catalog::default_ledger())),
        Some(path) => std::fs::read_to_string(&path)
            .map(Cow::Owned)
            .map_err(|e| fano_delta::Error::BadLedger(0, format!("{}: {e}", path.to_string_lossy()))),
    }
}

fn list_families(all: bool) -> fano_delta::Result<u8> {
    let ledger = ledger_text()?;
    if all {
        println!("family\tmodel\tA3\tcases\tbasket");
    } else {
        println!("family\tmodel\tA3\tcases");
    }
    for id in CATALOG_FAMILY_IDS {
        let f = Family::catalog(id)?;
        let cases = catalog::entries_from(&ledger, Some(id))?.len();
        if all {
            let basket = basket_string(&f)?;
            println!("{id}\t{f}\t{}\t{cases}\t{basket}", f.anticanonical_cube());
        } else {
            println!("{id}\t{f}\t{}\t{cases}", f.anticanonical_cube());
        }
    }
    Ok(0)
}

fn basket_string(f: &Family) -> fano_delta::Result<String> {
    let basket = f.enumerate_singularities()?;
    let mut groups: Vec<(String, usize)> = Vec::new();
    for s in &basket {
        let name = s.to_string();
        match groups.last_mut() {
            Some((g, n)) if *g == name => *n += 1,
            _ => groups.push((name, 1)),
        }
    }
    Ok(groups
        .iter()
        .map(|(g, n)| if *n > 1 { format!("{n}x {g}") } else { g.clone() })
        .collect::<Vec<_>>()
        .join("; "))
}

fn singularities(family: Option<u64>, raw: Option<String>) -> fano_delta::Result<u8> {
    let f = match (family, raw) {
        (Some(id), None) => Family::catalog(id)?,
        (None, Some(lit)) => Family::from_literal(&lit)?,
        _ => {
            eprintln!("error: singularities needs exactly one of --family or --raw");
            return Ok(1);
        }
    };
    println!("{}", basket_string(&f)?);
    Ok(0)
}

fn classify_center(family_id: u64, poly: &PathBuf, selector: &str) -> fano_delta::Result<u8> {
    let family = Family::catalog(family_id)?;
    let point = QuotientSingularity::parse_selector(selector)?;
    let text = std::fs::read_to_string(poly).map_err(|e| {
        fano_delta::Error::BadPolyFile(0, format!("{}: {e}", poly.to_string_lossy()))
    })?;
    let member = WeightedPoly::parse(family.clone(), &text)?;
    let class = match bi_center_kind(&family, point.index()) {
        BiCenterKind::Qi { vertex } => fano_delta::classify_qi(&member, vertex)?,
        BiCenterKind::Iei => fano_delta::classify_iei(&member)?,
        BiCenterKind::Ei => CenterClass::ei(),
        BiCenterKind::NotACenter => CenterClass {
            kind: CenterKind::None,
            is_maximal: TriState::No,
        },
    };
    let cases = catalog::case_select(family_id, &point, Some(&member))?;
    println!("family\t{family_id}");
    println!("point\t{point}");
    println!("class\t{class}");
    println!(
        "cases\t{}",
        if cases.is_empty() { "-".to_string() } else { cases.join(",") }
    );
    Ok(0)
}

fn find_entry(family_id: u64, selector: &str, label: &str) -> fano_delta::Result<CaseEntry> {
    let point = QuotientSingularity::parse_selector(selector)?;
    let ledger = ledger_text()?;
    catalog::entries_from(&ledger, Some(family_id))?
        .into_iter()
        .find(|e| e.point.same_type(&point) && e.label == label)
        .ok_or_else(|| {
            fano_delta::Error::NoSuchCase(label.to_string(), point.to_string(), family_id)
        })
}

fn delta(family_id: u64, selector: &str, label: &str, json: bool) -> fano_delta::Result<u8> {
    let entry = find_entry(family_id, selector, label)?;
    match &entry.spec {
        EntrySpec::Flag(spec) => {
            let breakdown = s_values(&spec.profile()?)?;
            let verdict = delta_bound(spec)?;
            if json {
                println!("{}", verdict_to_json(&breakdown, &verdict));
            } else {
                println!("family\t{family_id}");
                println!("point\t{}", entry.point);
                println!("case\t{label}");
                println!("method\t{}", entry.method);
                println!("conditions\t{}", entry.conditions_text());
                println!("S_A_Y\t{}", breakdown.s_a_y);
                println!("S_V\t{}", breakdown.s_v);
                let ineq = if breakdown.s_w_exact { "" } else { " (upper bound)" };
                println!("S_W\t{}{ineq}", breakdown.s_w);
                println!("F_P\t{}{ineq}", breakdown.f_p);
                for (l, v) in &verdict.terms {
                    println!("term.{l}\t{v}");
                }
                println!("bound\t{}", verdict.bound);
                println!("exceeds_one\t{}", verdict.exceeds_one);
            }
        }
        EntrySpec::Alpha(alpha) => {
            let bound = alpha_to_delta(alpha);
            let exceeds = bound > fano_delta::exactmath::rat_i(1);
            if json {
                println!(
                    "{{\n  \"alpha\": \"{alpha}\",\n  \"bound\": \"{bound}\",\n  \"exceeds_one\": {exceeds}\n}}"
                );
            } else {
                println!("family\t{family_id}");
                println!("point\t{}", entry.point);
                println!("case\t{label}");
                println!("method\talpha");
                println!("alpha\t{alpha}");
                println!("bound\t{bound}");
                println!("exceeds_one\t{exceeds}");
            }
        }
        EntrySpec::IsolatingAlpha { r, n_class, e_max } => {
            let a3 = entry.family().anticanonical_cube();
            let alpha = isolating_alpha_bound(*r, *n_class, *e_max, &a3);
            let bound = alpha_to_delta(&alpha);
            let exceeds = bound > fano_delta::exactmath::rat_i(1);
            if json {
                println!(
                    "{{\n  \"alpha\": \"{alpha}\",\n  \"bound\": \"{bound}\",\n  \"exceeds_one\": {exceeds}\n}}"
                );
            } else {
                println!("family\t{family_id}");
                println!("point\t{}", entry.point);
                println!("case\t{label}");
                println!("method\tisoalpha");
                println!("alpha\t{alpha}");
                println!("bound\t{bound}");
                println!("exceeds_one\t{exceeds}");
            }
        }
    }
    Ok(0)
}

fn integrate(path: &PathBuf, json: bool, approx: bool) -> fano_delta::Result<u8> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| fano_delta::Error::Json(format!("{}: {e}", path.to_string_lossy())))?;
    let profile = ZariskiProfile::from_json(&text)?;
    let breakdown = s_values(&profile)?;
    // Degenerate profiles (identically zero volume) still get a breakdown;
    // the min-terms exist only when every S-value is nonzero.
    let verdict = delta_bound(&fano_delta::FlagSpec::Custom(profile)).ok();
    if json {
        match &verdict {
            Some(v) => println!("{}", verdict_to_json(&breakdown, v)),
            None => println!(
                "{{\n  \"S_A_Y\": \"{}\",\n  \"S_V\": \"{}\",\n  \"S_W\": \"{}\",\n  \"F_P\": \"{}\"\n}}",
                breakdown.s_a_y, breakdown.s_v, breakdown.s_w, breakdown.f_p
            ),
        }
        return Ok(0);
    }
    let row = |name: &str, v: &fano_delta::Rational| {
        if approx {
            println!("{name}\t{v}\t{}", to_f64(v));
        } else {
            println!("{name}\t{v}");
        }
    };
    row("S_A_Y", &breakdown.s_a_y);
    row("S_V", &breakdown.s_v);
    row("S_W", &breakdown.s_w);
    row("F_P", &breakdown.f_p);
    if let Some(v) = verdict {
        for (l, x) in &v.terms {
            row(&format!("term.{l}"), x);
        }
        row("bound", &v.bound);
        println!("exceeds_one\t{}", v.exceeds_one);
    }
    Ok(0)
}

fn verify_all(family: Option<u64>, json: bool) -> fano_delta::Result<u8> {
    let ledger = ledger_text()?;
    let summary = catalog::verify_all_from(&ledger, family)?;
    let entries = catalog::entries_from(&ledger, family)?;
    if json {
        print_summary_json(&summary, &entries);
    } else {
        print_summary_table(&summary, &entries);
    }
    Ok(if summary.n_mismatched() > 0 { 2 } else { 0 })
}

fn print_summary_table(summary: &catalog::Summary, entries: &[CaseEntry]) {
    let mut rows: Vec<[String; 7]> = vec![[
        "family".into(),
        "point".into(),
        "case".into(),
        "delta_P >=".into(),
        "flag".into(),
        "status".into(),
        "ref".into(),
    ]];
    for (report, entry) in summary.reports.iter().zip(entries) {
        let status = if !report.ok() {
            "MISMATCH".to_string()
        } else if report.markers.is_empty() {
            "ok".to_string()
        } else {
            "ok*".to_string()
        };
        rows.push([
            report.family_id.to_string(),
            report.point.clone(),
            format!("({})", report.label),
            report.bound.to_string(),
            report.method.to_string(),
            status,
            entry.citation.clone(),
        ]);
    }
    let mut widths = [0usize; 7];
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    for row in &rows {
        let line: Vec<String> = row
            .iter()
            .zip(widths)
            .map(|(cell, w)| format!("{cell:<w$}"))
            .collect();
        println!("{}", line.join("  ").trim_end());
    }
    let mut printed_header = false;
    for report in &summary.reports {
        for m in &report.markers {
            if !printed_header {
                println!();
                println!("printed-source discrepancies (reported, not failed):");
                printed_header = true;
            }
            println!("  {}({}) {}: {m}", report.family_id, report.label, report.point);
        }
        for c in report.checks.iter().filter(|c| !c.matched) {
            println!(
                "  MISMATCH {}({}) {}: {} computed {} expected {}",
                report.family_id, report.label, report.point, c.field, c.computed, c.expected
            );
        }
    }
    println!();
    println!(
        "{} entries, {} ok, {} mismatched, {} discrepancy markers; all bounds > 1: {}",
        summary.n_entries(),
        summary.n_entries() - summary.n_mismatched(),
        summary.n_mismatched(),
        summary.n_markers(),
        summary.reports.iter().all(|r| r.exceeds_one),
    );
}

fn print_summary_json(summary: &catalog::Summary, entries: &[CaseEntry]) {
    // Hand-rolled emission keeps the report schema stable and dependency-free.
    let mut out = String::from("{\n");
    out.push_str(&format!("  \"entries\": {},\n", summary.n_entries()));
    out.push_str(&format!("  \"mismatched\": {},\n", summary.n_mismatched()));
    out.push_str(&format!("  \"markers\": {},\n", summary.n_markers()));
    out.push_str("  \"reports\": [\n");
    let n = summary.reports.len();
    for (i, (r, entry)) in summary.reports.iter().zip(entries).enumerate() {
        out.push_str("    {");
        out.push_str(&format!(
            "\"family\": {}, \"point\": {:?}, \"case\": {:?}, \"method\": {:?}, \"bound\": {:?}, \"exceeds_one\": {}, \"ok\": {}, \"markers\": {}, \"citation\": {:?}",
            r.family_id,
            r.point,
            r.label,
            r.method.to_string(),
            r.bound.to_string(),
            r.exceeds_one,
            r.ok(),
            r.markers.len(),
            entry.citation,
        ));
        out.push_str(if i + 1 == n { "}\n" } else { "},\n" });
    }
    out.push_str("  ]\n}");
    println!("{out}");
}
