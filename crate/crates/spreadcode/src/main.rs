use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use spreadcode::catalog::{self, CatalogPayload};
use spreadcode::code::{doubling, dual_union, is_optimal_53, Certificate};
use spreadcode::error::{Error, Result};
use spreadcode::format;
use spreadcode::gf2::{enumerate_subspaces, gaussian_binomial};
use spreadcode::hkk;
use spreadcode::repair::minimal_change_repair;
use spreadcode::spread::PartialSpread;

/// Workbench for maximal partial line spreads of PG(4,2) and optimal
/// (5,3) binary subspace codes.
#[derive(Parser)]
#[command(name = "spreadcode", version, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Certify a code file against the (5, 18, 3) target; exits 0 only when
    /// the code is optimal
    Verify { file: PathBuf },
    /// Inspect the built-in catalog of spreads and codes
    Catalog {
        #[command(subcommand)]
        cmd: CatalogCmd,
    },
    /// Classify the regulus pattern of a maximum partial spread file
    Classify { file: PathBuf },
    /// Replace one regulus of a spread with its opposite regulus
    Opposite {
        file: PathBuf,
        /// 1-based index into the spread's regulus list
        #[arg(long)]
        regulus: usize,
    },
    /// Join two spread files into a code (left lines + duals of right lines)
    Double {
        spread_a: PathBuf,
        spread_b: PathBuf,
        /// build the dual union (right lines + duals of left lines) instead
        #[arg(long)]
        dual_union: bool,
    },
    /// Search minimal one-row repairs for a code file with a single conflict
    Repair { file: PathBuf },
    /// The rank-metric construction
    Hkk {
        #[command(subcommand)]
        cmd: HkkCmd,
    },
    /// Enumerate the k-dimensional subspaces of GF(2)^n
    Enumerate {
        #[arg(long)]
        n: u8,
        #[arg(long)]
        k: usize,
        /// print only how many there are
        #[arg(long)]
        count: bool,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// List every entry with its kind
    List,
    /// Print one entry as a parseable document
    Show { name: String },
    /// Certify all entries and print their certificate documents
    VerifyAll,
}

#[derive(Subcommand)]
enum HkkCmd {
    /// Lift the Gabidulin codebook, find a context, shorten, and certify
    Build,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                // bad name or bad --n/--k: the command line itself is wrong
                Error::UnknownCatalogEntry { .. } | Error::DimOutOfRange { .. } => {
                    ExitCode::from(2)
                }
                _ => ExitCode::from(1),
            }
        }
    }
}

const OK: ExitCode = ExitCode::SUCCESS;

fn failed() -> ExitCode {
    ExitCode::from(1)
}

fn usage() -> ExitCode {
    ExitCode::from(2)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.cmd {
        Cmd::Verify { file } => verify(&file),
        Cmd::Catalog { cmd } => catalog_cmd(cmd),
        Cmd::Classify { file } => classify(&file),
        Cmd::Opposite { file, regulus } => opposite(&file, regulus),
        Cmd::Double { spread_a, spread_b, dual_union } => double(&spread_a, &spread_b, dual_union),
        Cmd::Repair { file } => repair(&file),
        Cmd::Hkk { cmd: HkkCmd::Build } => hkk_build(),
        Cmd::Enumerate { n, k, count } => enumerate(n, k, count),
    }
}

fn read_spread(path: &Path) -> Result<PartialSpread> {
    let text = fs::read_to_string(path)?;
    let doc = format::parse_document(&text, &path.display().to_string())?;
    format::spread_from_document(&doc)
}

fn certificate_block(cert: &Certificate, prefix: &str) -> String {
    let mut out = String::new();
    for (key, value) in [
        ("size", cert.size.to_string()),
        ("min_distance", cert.min_distance.to_string()),
        (
            "dimensions",
            cert.dimension_distribution
                .iter()
                .map(|(d, n)| format!("{d}:{n}"))
                .collect::<Vec<_>>()
                .join(" "),
        ),
        ("conflicts", cert.conflicts.len().to_string()),
        ("optimal", cert.optimal.to_string()),
        (
            "spread_types",
            cert.spread_types.map_or("-".to_string(), |t| t.to_string()),
        ),
    ] {
        out.push_str(&format!("{prefix}{key} = {value}\n"));
    }
    for c in &cert.conflicts {
        out.push_str(&format!("{prefix}conflict: {c}\n"));
    }
    out
}

fn verify(path: &Path) -> Result<ExitCode> {
    let text = fs::read_to_string(path)?;
    let doc = format::parse_document(&text, &path.display().to_string())?;
    let code = format::code_from_document(&doc)?;
    let cert = is_optimal_53(&code)?;
    print!("{}", certificate_block(&cert, ""));
    Ok(if cert.optimal { OK } else { failed() })
}

fn catalog_cmd(cmd: CatalogCmd) -> Result<ExitCode> {
    match cmd {
        CatalogCmd::List => {
            for name in catalog::names() {
                let entry = catalog::catalog_get(name)?;
                let kind = match entry.payload {
                    CatalogPayload::Spread(_) => "spread",
                    CatalogPayload::Code(_) => "code",
                };
                let flag = if entry.corrected { " (corrected)" } else { "" };
                println!("{name:10} {kind}{flag}  {}", entry.notes);
            }
            Ok(OK)
        }
        CatalogCmd::Show { name } => {
            let entry = catalog::catalog_get(&name)?;
            println!("# {} — {}", entry.name, entry.notes);
            if entry.corrected {
                println!("# stored with a correction; see catalog notes");
            }
            match &entry.payload {
                CatalogPayload::Spread(s) => {
                    for l in s.lines() {
                        println!("# {}", l.points_string());
                    }
                    print!("{}", format::serialize_spread(s));
                }
                CatalogPayload::Code(c) => {
                    let cert = is_optimal_53(c)?;
                    print!("{}", certificate_block(&cert, "# "));
                    print!("{}", format::serialize_code(c)?);
                }
            }
            Ok(OK)
        }
        CatalogCmd::VerifyAll => {
            let docs = catalog::verify_all();
            let mut all_passed = true;
            for doc in &docs {
                print!("{}", doc.to_canonical_string());
                println!();
                all_passed &= doc.passed();
            }
            println!("{} of {} entries verified", docs.iter().filter(|d| d.passed()).count(), docs.len());
            Ok(if all_passed { OK } else { failed() })
        }
    }
}

fn classify(path: &Path) -> Result<ExitCode> {
    let spread = read_spread(path)?;
    let pattern = spread.classify_pattern()?;
    println!("pattern = {}", pattern.kind());
    println!("{}", pattern.describe());
    Ok(OK)
}

fn opposite(path: &Path, regulus: usize) -> Result<ExitCode> {
    let spread = read_spread(path)?;
    let reguli = spread.reguli();
    if regulus == 0 || regulus > reguli.len() {
        eprintln!(
            "error: --regulus {regulus} is out of range; the spread has {} reguli (1..={})",
            reguli.len(),
            reguli.len()
        );
        return Ok(usage());
    }
    let target = &reguli[regulus - 1];
    let replaced = spread.replace_regulus(target)?;
    let opposite = target.opposite();
    println!("# regulus {regulus}: {}", describe_lines(target.lines()));
    println!("# opposite: {}", describe_lines(opposite.lines()));
    print!("{}", format::serialize_spread(&replaced));
    Ok(OK)
}

fn describe_lines(lines: &[spreadcode::gf2::Subspace]) -> String {
    lines.iter().map(|l| l.points_string()).collect::<Vec<_>>().join(" ")
}

fn double(a: &Path, b: &Path, dual: bool) -> Result<ExitCode> {
    let sa = read_spread(a)?;
    let sb = read_spread(b)?;
    let dc = if dual { dual_union(&sa, &sb) } else { doubling(&sa, &sb) };
    for w in &dc.warnings {
        eprintln!("warning: {w}");
    }
    print!("{}", certificate_block(&dc.certificate, "# "));
    print!("{}", format::serialize_code(&dc.code)?);
    Ok(OK)
}

fn repair(path: &Path) -> Result<ExitCode> {
    let text = fs::read_to_string(path)?;
    let doc = format::parse_document(&text, &path.display().to_string())?;
    let code = format::code_from_document(&doc)?;
    let outcome = minimal_change_repair(&code)?;
    for (i, r) in outcome.repairs.iter().enumerate() {
        println!("repair {} ({} change(s)):", i + 1, r.changes.len());
        for ch in &r.changes {
            println!("  {ch}");
        }
        println!("  {}", r.certificate.summary());
    }
    for d in &outcome.diagnostics {
        println!(
            "tried {} neighbors of {} ({}): {} direct, {} cascade",
            d.neighbors_tried,
            d.member.gens_string(),
            d.side,
            d.direct_repairs,
            d.cascade_repairs
        );
    }
    Ok(if outcome.repairs.is_empty() { failed() } else { OK })
}

fn hkk_build() -> Result<ExitCode> {
    let ctx = hkk::find_context()?;
    let shortened = hkk::shorten(&ctx)?;
    let report = hkk::certify_hkk(&shortened.code)?;
    println!("# point {} hyperplane {}", ctx.point, ctx.hyperplane.gens_string());
    println!(
        "# extra planes {} {}",
        ctx.extra_planes.0.gens_string(),
        ctx.extra_planes.1.gens_string()
    );
    println!("# line spread type {} / dual spread type {}", report.line_type, report.dual_type);
    println!(
        "# moving line {} in hole plane {}; 8-line core has {} reguli",
        report.moving_line.moving_line.points_string(),
        report.moving_line.plane.points_string(),
        report.sub_spread_regulus_count
    );
    print!("{}", certificate_block(&report.certificate, "# "));
    print!("{}", format::serialize_code(&report.code)?);
    Ok(OK)
}

fn enumerate(n: u8, k: usize, count: bool) -> Result<ExitCode> {
    if count {
        if !(1..=16).contains(&n) || k > n as usize {
            return Err(Error::DimOutOfRange { n, k });
        }
        println!("{}", gaussian_binomial(n as u32, k as u32));
        return Ok(OK);
    }
    for s in enumerate_subspaces(n, k)? {
        println!("{}", s.gens_string());
    }
    Ok(OK)
}
