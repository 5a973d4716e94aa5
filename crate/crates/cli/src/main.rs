use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use geostruct_core::catalog::{build_e, build_f4, build_so, build_sp, build_su, golden};
use geostruct_core::flowcheck::{self, Causal, ContactStats, GeodesicSample, GeodesicStats, MetricChart};
use geostruct_core::spaces::{self, Column, GeodesicSpaceId, Table1Summary, Verdict};
use geostruct_core::Error;

/// Bumped whenever a field is added, removed or renamed.
const SCHEMA_VERSION: &str = "1.0.0";

#[derive(Parser)]
#[command(name = "geostruct", version, about = "Invariant structures on spaces of oriented geodesics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the invariant structures of one space.
    Classify {
        /// Space identifier, e.g. "LCP(2)" or "LplusS(4,0)".
        #[arg(long)]
        space: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Compare a list of spaces against the structure table.
    Table1 {
        /// Identifiers separated by ';' or by commas outside parentheses.
        /// Defaults to the generic battery.
        #[arg(long)]
        rows: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Validate the catalog algebras and the bracket identity tables.
    Selftest {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Floating-point check of the contact identities and explicit geodesics.
    Flowcheck {
        #[arg(long, default_value = "sphere")]
        chart: String,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = flowcheck::DEFAULT_TOL)]
        tol: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Serialize)]
struct ReportDocument<'a> {
    schema_version: &'static str,
    generated_at: String,
    command: &'static str,
    reports: &'a [spaces::ClassificationReport],
    summary: &'a Table1Summary,
}

fn now() -> String {
    chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Classify { space, format } => match parse_ids(&space) {
            Ok(ids) if ids.len() == 1 => run_table(&ids, format, "classify"),
            Ok(_) => usage("classify takes exactly one space"),
            Err(e) => unknown_space(&e),
        },
        Command::Table1 { rows, format } => {
            let ids = match rows {
                None => Ok(spaces::generic_battery()),
                Some(r) => parse_ids(&r),
            };
            match ids {
                Ok(ids) if !ids.is_empty() => run_table(&ids, format, "table1"),
                Ok(_) => usage("no rows given"),
                Err(e) => unknown_space(&e),
            }
        }
        Command::Selftest { format } => selftest(format),
        Command::Flowcheck { chart, samples, tol, seed, format } => run_flowcheck(&chart, samples, tol, seed, format),
    };
    ExitCode::from(code)
}

fn usage(msg: &str) -> u8 {
    eprintln!("error: {msg}");
    2
}

fn unknown_space(e: &Error) -> u8 {
    eprintln!("error: {e}");
    eprintln!("supported identifiers:");
    for g in GeodesicSpaceId::grammar() {
        eprintln!("  {g}");
    }
    2
}

/// Splits on ';' and on commas at parenthesis depth 0.
fn split_rows(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0i32;
    for ch in s.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if ch == ';' || (ch == ',' && depth == 0) {
            out.push(std::mem::take(&mut cur));
        } else {
            cur.push(ch);
        }
    }
    out.push(cur);
    out.into_iter().filter(|t| !t.trim().is_empty()).collect()
}

fn parse_ids(s: &str) -> Result<Vec<GeodesicSpaceId>, Error> {
    split_rows(s).iter().map(|t| t.parse()).collect()
}

fn run_table(ids: &[GeodesicSpaceId], format: Format, command: &'static str) -> u8 {
    let summary = spaces::table1_compare(ids);
    match format {
        Format::Json => {
            let doc = ReportDocument {
                schema_version: SCHEMA_VERSION,
                generated_at: now(),
                command,
                reports: &summary.reports,
                summary: &summary,
            };
            println!("{}", serde_json::to_string_pretty(&doc).expect("report serializes"));
        }
        Format::Text => print_text(&summary),
    }
    for row in &summary.rows {
        if let Some(e) = &row.error {
            eprintln!("error: {}: {e}", row.space);
        }
    }
    if summary.pass {
        0
    } else {
        1
    }
}

fn print_text(summary: &Table1Summary) {
    for r in &summary.reports {
        println!("== {} on {} ==", r.space, r.algebra);
        println!("dims g/h/m         {}/{}/{}", r.dims.g, r.dims.h, r.dims.m);
        println!("symmetric pair     {}", r.symmetric_pair);
        println!("2-forms            {} invariant, {} closed", r.invariant_two_forms, r.closed_two_forms);
        println!(
            "commutant          dim {}{}",
            r.commutant_dim,
            if r.commutant_commutative { ", commutative" } else { ", non-commutative" }
        );
        for (name, c) in [("complex", &r.complex), ("para-complex", &r.para)] {
            println!(
                "{name:<18} {} up to sign ({} integrable, {} not){}",
                c.candidates.len(),
                c.integrable,
                c.non_integrable,
                c.family_tangent_dim.map(|t| format!(", family of dimension {t}")).unwrap_or_default()
            );
        }
        for p in &r.pairs {
            println!(
                "pair               ε={:+} structure #{} integrable={} signature ({},{})",
                p.epsilon,
                p.structure,
                p.integrable.map_or("?".to_string(), |b| b.to_string()),
                p.signature.pos,
                p.signature.neg
            );
        }
        let header: Vec<String> = Column::ALL.iter().map(|c| format!("{:>15}", c.title())).collect();
        println!("{:<10}{}", "", header.join(""));
        let cells: Vec<String> = r.cells.iter().map(|c| format!("{:>15}", c.to_string())).collect();
        println!("{:<10}{}", "computed", cells.join(""));
        if !r.comparison.columns.is_empty() {
            let cells: Vec<String> = r.comparison.columns.iter().map(|c| format!("{:>15}", c.expected.to_string())).collect();
            println!("{:<10}{}", "table", cells.join(""));
        }
        println!("verdict            {}", r.comparison.verdict);
        println!();
    }
    for row in &summary.rows {
        let v = row.verdict.map_or("ERROR".to_string(), |v: Verdict| v.to_string());
        let diff: Vec<&str> = row.differing.iter().map(|c| c.title()).collect();
        if diff.is_empty() {
            println!("{:<16} {v}", row.space.to_string());
        } else {
            println!("{:<16} {v} (differs in: {})", row.space.to_string(), diff.join(", "));
        }
    }
    println!(
        "matches {}, up to convention {}, mismatches {}, errors {}",
        summary.matches, summary.convention_matches, summary.mismatches, summary.errors
    );
}

#[derive(Serialize)]
struct AlgebraCheck {
    algebra: String,
    dim: usize,
    valid: bool,
    error: Option<String>,
}

#[derive(Serialize)]
struct SelftestDocument {
    schema_version: &'static str,
    generated_at: String,
    command: &'static str,
    algebras: Vec<AlgebraCheck>,
    identities: Vec<golden::GoldenIdentity>,
    pass: bool,
}

fn selftest(format: Format) -> u8 {
    type Builder = Box<dyn Fn() -> geostruct_core::Result<geostruct_core::catalog::LabeledAlgebra>>;
    let mut builders: Vec<Builder> = Vec::new();
    for (p, q) in [(3, 0), (5, 0), (3, 2), (4, 1), (2, 2)] {
        builders.push(Box::new(move || build_so(p, q)));
    }
    for (p, q) in [(3, 0), (2, 1), (4, 0)] {
        builders.push(Box::new(move || build_e(p, q)));
    }
    for (p, q) in [(3, 0), (4, 0), (1, 2), (1, 3), (2, 2)] {
        builders.push(Box::new(move || build_su(p, q)));
    }
    for (p, q) in [(3, 0), (1, 2), (4, 0)] {
        builders.push(Box::new(move || build_sp(p, q)));
    }
    builders.push(Box::new(build_f4));
    let algebras: Vec<AlgebraCheck> = builders
        .iter()
        .map(|b| match b() {
            Ok(g) => {
                let res = g.algebra.validate();
                AlgebraCheck {
                    algebra: g.name.clone(),
                    dim: g.dim(),
                    valid: res.is_ok(),
                    error: res.err().map(|e| e.to_string()),
                }
            }
            Err(e) => AlgebraCheck { algebra: "?".into(), dim: 0, valid: false, error: Some(e.to_string()) },
        })
        .collect();
    let identities = match golden::golden_identities() {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: golden identities: {e}");
            return 1;
        }
    };
    let pass = algebras.iter().all(|a| a.valid) && identities.iter().all(|i| i.holds);
    match format {
        Format::Json => {
            let doc = SelftestDocument {
                schema_version: SCHEMA_VERSION,
                generated_at: now(),
                command: "selftest",
                algebras,
                identities,
                pass,
            };
            println!("{}", serde_json::to_string_pretty(&doc).expect("selftest serializes"));
        }
        Format::Text => {
            for a in &algebras {
                let status = if a.valid { "ok" } else { "FAIL" };
                println!("{status:<5} {} (dim {}) antisymmetry + Jacobi", a.algebra, a.dim);
                if let Some(e) = &a.error {
                    println!("      {e}");
                }
            }
            for i in &identities {
                println!("{:<5} {}: {}", if i.holds { "ok" } else { "FAIL" }, i.algebra, i.identity);
            }
            let held = identities.iter().filter(|i| i.holds).count();
            println!("{} algebras, {held}/{} identities hold", algebras.len(), identities.len());
        }
    }
    if pass {
        0
    } else {
        1
    }
}

#[derive(Serialize)]
struct FlowDocument {
    schema_version: &'static str,
    generated_at: String,
    command: &'static str,
    contact: ContactStats,
    geodesics: Vec<GeodesicStats>,
    pass: bool,
}

fn run_flowcheck(chart: &str, samples: usize, tol: f64, seed: u64, format: Format) -> u8 {
    let Some(c) = MetricChart::by_name(chart) else {
        eprintln!("error: unknown chart '{chart}'");
        eprintln!("supported charts: {}", MetricChart::NAMES.join(", "));
        return 2;
    };
    if !(tol > 0.0) {
        return usage("--tol must be positive");
    }
    let contact = match flowcheck::contact_residuals(&c, samples, tol, seed) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    let grid = GeodesicSample::uniform_grid(samples.max(100), 2.0);
    let mut geodesics = Vec::new();
    for (p, q, causal) in [(2, 1, Causal::Spacelike), (2, 1, Causal::Timelike), (3, 0, Causal::Spacelike)] {
        match GeodesicSample::random(p, q, causal, grid.clone(), seed) {
            Ok(s) => geodesics.push(flowcheck::geodesic_residuals(&s)),
            Err(e) => {
                eprintln!("error: {e}");
                return 1;
            }
        }
    }
    let pass = contact.pass && geodesics.iter().all(|g| g.max_constraint < tol && g.max_equation < tol);
    match format {
        Format::Json => {
            let doc = FlowDocument {
                schema_version: SCHEMA_VERSION,
                generated_at: now(),
                command: "flowcheck",
                contact,
                geodesics,
                pass,
            };
            println!("{}", serde_json::to_string_pretty(&doc).expect("flowcheck serializes"));
        }
        Format::Text => {
            println!("chart {} ({} samples, seed {}, tol {:e})", contact.chart, contact.samples, contact.seed, contact.tol);
            println!("  |θ(Γ) - 1|       max {:.3e}  mean {:.3e}", contact.max_theta_defect, contact.mean_theta_defect);
            println!("  |dθ(Γ, ·)|       max {:.3e}  mean {:.3e}", contact.max_dtheta, contact.mean_dtheta);
            println!("  Γ lower-index asymmetry {:.3e}", contact.max_christoffel_asymmetry);
            for g in &geodesics {
                println!(
                    "geodesic {:?} on {} points: constraint {:.3e}, equation {:.3e}",
                    g.causal, g.grid_points, g.max_constraint, g.max_equation
                );
            }
            println!("{}", if pass { "PASS" } else { "FAIL" });
        }
    }
    if pass {
        0
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_split_outside_parentheses() {
        assert_eq!(split_rows("LCP(2),LplusS(4,0); LOP2"), vec!["LCP(2)", "LplusS(4,0)", " LOP2"]);
        assert_eq!(parse_ids("LCP(2),LplusS(4,0)").unwrap().len(), 2);
    }
}
