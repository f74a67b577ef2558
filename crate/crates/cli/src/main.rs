//! Command-line front end: single-D reports, range sweeps, golden-corpus
//! verification, form/prototype listings, polygon rendering and bound
//! audits.
//!
//! Exit codes: 0 success, 1 verification or bound failure, 2 bad input,
//! 3 I/O or parse failure.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use num_traits::ToPrimitive;
use serde::Serialize;

use prym_topo::arith::Discriminant;
use prym_topo::class_numbers;
use prym_topo::corpus::{self, CorpusRow};
use prym_topo::cusps;
use prym_topo::error::Error;
use prym_topo::euler::{self, ChiBreakdown};
use prym_topo::flat;
use prym_topo::topology::{self, InvariantRecord};
use prym_topo::Rat;

const JOBS_ENV: &str = "PRYM_TOPO_JOBS";

#[derive(Parser)]
#[command(
    name = "prym-topo",
    about = "Topological invariants of the Prym-Teichmüller curves W_D(6)",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Full invariant report for one discriminant
    Invariants {
        /// Discriminant D (positive, ≡ 0 or 1 mod 4, nonsquare, ≥ 5)
        d: i64,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Invariants for every nonsquare discriminant in a range
    Sweep {
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
        #[arg(long, value_enum, default_value_t = SweepFormat::Csv)]
        format: SweepFormat,
        /// Write the table here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads (default: PRYM_TOPO_JOBS or all cores)
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Recompute a reference corpus and diff it column by column
    Verify {
        /// Corpus CSV (default: the embedded table of all D ≤ 200)
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
    /// Audit the proven genus/cusp/orbifold bounds over a range
    Bounds {
        #[arg(long)]
        to: u64,
    },
    /// Cusp count (and prototype list) for one discriminant
    Cusps {
        d: i64,
        #[arg(long)]
        list: bool,
    },
    /// Class number h(−C) (and reduced-form list)
    Forms {
        c: u64,
        #[arg(long)]
        list: bool,
    },
    /// Build a polygon model, optionally unfolding its canonical cover
    Polygon {
        family: Family,
        /// Complex parameter "re,im" (turtle and hurricane only)
        #[arg(long, allow_hyphen_values = true)]
        param: Option<String>,
        /// Write an SVG rendering here
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Write the polygon/surface data as JSON here
        #[arg(long)]
        json: Option<PathBuf>,
        /// Operate on the unfolded translation surface instead of the base polygon
        #[arg(long)]
        unfolded: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum SweepFormat {
    Csv,
    Json,
    Md,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Turtle,
    Hurricane,
    C10,
    C12,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::NotADiscriminant(_)
        | Error::Domain(_)
        | Error::SquareDiscriminant(_)
        | Error::DegenerateParameter(_) => 2,
        Error::Corpus(_) | Error::Io(_) => 3,
        Error::NonIntegralGenus { .. } | Error::Internal(_) | Error::Gluing(_) => 1,
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.cmd {
        Cmd::Invariants { d, format } => cmd_invariants(d, format),
        Cmd::Sweep {
            from,
            to,
            format,
            out,
            jobs,
        } => cmd_sweep(from, to, format, out.as_deref(), jobs),
        Cmd::Verify { corpus } => cmd_verify(corpus.as_deref()),
        Cmd::Bounds { to } => cmd_bounds(to),
        Cmd::Cusps { d, list } => cmd_cusps(d, list),
        Cmd::Forms { c, list } => cmd_forms(c, list),
        Cmd::Polygon {
            family,
            param,
            svg,
            json,
            unfolded,
        } => cmd_polygon(family, param.as_deref(), svg.as_deref(), json.as_deref(), unfolded),
    }
}

fn parse_nonsquare(d: i64) -> Result<Discriminant, Error> {
    let disc = Discriminant::new(d)?;
    if disc.is_square() {
        return Err(Error::SquareDiscriminant(disc.value()));
    }
    if disc.value() < 5 {
        return Err(Error::Domain(format!("need D >= 5, got {}", disc.value())));
    }
    Ok(disc)
}

fn rat_pair(r: &Rat) -> (i64, i64) {
    (
        r.numer().to_i64().expect("numerator fits i64"),
        r.denom().to_i64().expect("denominator fits i64"),
    )
}

#[derive(Serialize)]
struct InvariantsJson {
    #[serde(rename = "D")]
    d: u64,
    f: u64,
    #[serde(rename = "D0")]
    d0: u64,
    zeta_num: i64,
    zeta_den: i64,
    #[serde(rename = "F_num")]
    f_num: i64,
    #[serde(rename = "F_den")]
    f_den: i64,
    chi_x_num: i64,
    chi_x_den: i64,
    chi_num: i64,
    chi_den: i64,
    #[serde(rename = "C")]
    cusps: u64,
    e2: u64,
    e3: u64,
    e5: u64,
    e6: u64,
    h0: u64,
    g: u64,
}

fn cmd_invariants(d: i64, format: ReportFormat) -> Result<ExitCode, Error> {
    let disc = parse_nonsquare(d)?;
    let breakdown = euler::chi_breakdown(&disc)?;
    let rec = topology::invariants(&disc)?;
    match format {
        ReportFormat::Text => print_invariants_text(&disc, &breakdown, &rec),
        ReportFormat::Json => {
            let (zeta_num, zeta_den) = rat_pair(&breakdown.zeta_m1);
            let (f_num, f_den) = rat_pair(&breakdown.conductor_factor);
            let (chi_x_num, chi_x_den) = rat_pair(&breakdown.chi_x);
            let (chi_num, chi_den) = rat_pair(&rec.chi);
            let out = InvariantsJson {
                d: rec.d,
                f: disc.conductor(),
                d0: disc.fundamental(),
                zeta_num,
                zeta_den,
                f_num,
                f_den,
                chi_x_num,
                chi_x_den,
                chi_num,
                chi_den,
                cusps: rec.cusps,
                e2: rec.e2,
                e3: rec.e3,
                e5: rec.e5,
                e6: rec.e6,
                h0: rec.h0,
                g: rec.genus,
            };
            println!("{}", serde_json::to_string_pretty(&out).expect("serializes"));
        }
        ReportFormat::Csv => {
            println!("{}", corpus::CSV_HEADER);
            println!("{}", CorpusRow::from_record(&rec).to_csv_line());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_invariants_text(disc: &Discriminant, breakdown: &ChiBreakdown, rec: &InvariantRecord) {
    println!(
        "D = {} = f^2 * D0 with f = {}, D0 = {}",
        disc.value(),
        disc.conductor(),
        disc.fundamental()
    );
    println!("zeta_D0(-1) = {}", breakdown.zeta_m1);
    println!("F(D)        = {}", breakdown.conductor_factor);
    println!("chi(X_D)    = {}", breakdown.chi_x);
    println!("chi(W_D)    = {}", rec.chi);
    println!("cusps C     = {}", rec.cusps);
    println!(
        "e2 = {}, e3 = {}, e5 = {}, e6 = {}",
        rec.e2, rec.e3, rec.e5, rec.e6
    );
    println!("h0 = {}", rec.h0);
    println!("genus       = {}", rec.genus);
}

fn resolve_jobs(flag: Option<usize>) -> Result<Option<usize>, Error> {
    if let Some(n) = flag {
        if n == 0 {
            return Err(Error::Domain("--jobs must be at least 1".into()));
        }
        return Ok(Some(n));
    }
    match std::env::var(JOBS_ENV) {
        Ok(raw) => {
            let n: usize = raw
                .parse()
                .map_err(|_| Error::Domain(format!("{JOBS_ENV}={raw:?} is not a thread count")))?;
            if n == 0 {
                return Err(Error::Domain(format!("{JOBS_ENV} must be at least 1")));
            }
            Ok(Some(n))
        }
        Err(_) => Ok(None),
    }
}

fn cmd_sweep(
    from: u64,
    to: u64,
    format: SweepFormat,
    out: Option<&Path>,
    jobs: Option<usize>,
) -> Result<ExitCode, Error> {
    if from < 5 || from > to {
        return Err(Error::Domain(format!(
            "sweep range must satisfy 5 <= from <= to, got {from}..{to}"
        )));
    }
    let records = match resolve_jobs(jobs)? {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Error::Internal(format!("worker pool: {e}")))?;
            pool.install(|| topology::sweep(from, to))?
        }
        None => topology::sweep(from, to)?,
    };
    let rows: Vec<CorpusRow> = records.iter().map(CorpusRow::from_record).collect();
    let rendered = match format {
        SweepFormat::Csv => {
            let mut s = String::from(corpus::CSV_HEADER);
            s.push('\n');
            for row in &rows {
                s.push_str(&row.to_csv_line());
                s.push('\n');
            }
            s
        }
        SweepFormat::Json => {
            let mut s = serde_json::to_string_pretty(&rows).expect("serializes");
            s.push('\n');
            s
        }
        SweepFormat::Md => {
            let mut s = String::from("| D | g | chi | C | e2 | e3 | e5 | e6 |\n");
            s.push_str("|---|---|-----|---|----|----|----|----|\n");
            for (row, rec) in rows.iter().zip(&records) {
                s.push_str(&format!(
                    "| {} | {} | {} | {} | {} | {} | {} | {} |\n",
                    row.d, row.g, rec.chi, row.c, row.e2, row.e3, row.e5, row.e6
                ));
            }
            s
        }
    };
    match out {
        Some(path) => std::fs::write(path, rendered)?,
        None => print!("{rendered}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(corpus_path: Option<&Path>) -> Result<ExitCode, Error> {
    let text = match corpus_path {
        Some(path) => std::fs::read_to_string(path)?,
        None => corpus::EMBEDDED.to_string(),
    };
    let rows = corpus::parse(&text)?;
    let mismatches = corpus::verify(&rows)?;
    if mismatches.is_empty() {
        println!("verified {} rows: all invariants match", rows.len());
        return Ok(ExitCode::SUCCESS);
    }
    let first_d = mismatches[0].d;
    println!("mismatch at D={first_d}:");
    for m in mismatches.iter().take_while(|m| m.d == first_d) {
        println!(
            "  column {}: corpus={}, computed={}",
            m.column, m.corpus, m.computed
        );
    }
    let rows_with_diffs = {
        let mut ds: Vec<u64> = mismatches.iter().map(|m| m.d).collect();
        ds.dedup();
        ds.len()
    };
    println!("({rows_with_diffs} mismatching row(s) in total)");
    Ok(ExitCode::from(1))
}

fn cmd_bounds(to: u64) -> Result<ExitCode, Error> {
    if to < 5 {
        return Err(Error::Domain(format!("bounds audit needs --to >= 5, got {to}")));
    }
    let records = topology::sweep(5, to)?;
    let mut violations = Vec::new();
    for rec in &records {
        let disc = Discriminant::new(rec.d as i64)?;
        violations.extend(topology::full_bounds_audit(&disc, rec));
    }
    for v in &violations {
        println!("bound violated at D={}: {} bound: {}", v.d, v.bound, v.detail);
    }
    if violations.is_empty() {
        println!(
            "all bounds hold for {} nonsquare discriminants up to {to}",
            records.len()
        );
        Ok(ExitCode::SUCCESS)
    } else {
        println!(
            "{} violation(s) over {} nonsquare discriminants up to {to}",
            violations.len(),
            records.len()
        );
        Ok(ExitCode::from(1))
    }
}

fn cmd_cusps(d: i64, list: bool) -> Result<ExitCode, Error> {
    let disc = parse_nonsquare(d)?;
    let protos = cusps::list_prototypes(&disc)?;
    println!("D={}: C = {}", disc.value(), protos.len());
    if list {
        println!("a\tb\tc\te");
        for p in &protos {
            println!("{}\t{}\t{}\t{}", p.a, p.b, p.c, p.e);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_forms(c: u64, list: bool) -> Result<ExitCode, Error> {
    let forms = class_numbers::list_reduced_forms(c)?;
    println!("h(-{c}) = {}", forms.len());
    if list {
        println!("a\tb\tc");
        for f in &forms {
            println!("{}\t{}\t{}", f.a, f.b, f.c);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_param(raw: &str) -> Result<Complex64, Error> {
    let parts: Vec<&str> = raw.split(',').collect();
    if parts.len() != 2 {
        return Err(Error::Domain(format!(
            "--param expects \"re,im\", got {raw:?}"
        )));
    }
    let re: f64 = parts[0]
        .trim()
        .parse()
        .map_err(|_| Error::Domain(format!("bad real part {:?}", parts[0])))?;
    let im: f64 = parts[1]
        .trim()
        .parse()
        .map_err(|_| Error::Domain(format!("bad imaginary part {:?}", parts[1])))?;
    Ok(Complex64::new(re, im))
}

fn cmd_polygon(
    family: Family,
    param: Option<&str>,
    svg: Option<&Path>,
    json: Option<&Path>,
    unfolded: bool,
) -> Result<ExitCode, Error> {
    let polygon = match family {
        Family::Turtle | Family::Hurricane => {
            let raw = param.ok_or_else(|| {
                Error::Domain("this family needs --param re,im".into())
            })?;
            let z = parse_param(raw)?;
            match family {
                Family::Turtle => flat::turtle_base(z)?,
                _ => flat::hurricane_base(z)?,
            }
        }
        Family::C10 | Family::C12 => {
            if param.is_some() {
                return Err(Error::Domain(
                    "this family is parameter-free; drop --param".into(),
                ));
            }
            match family {
                Family::C10 => flat::c10_base(),
                _ => flat::c12_base(),
            }
        }
    };

    if unfolded {
        let surface = flat::unfold(&polygon, polygon.k())?;
        if let Some(path) = svg {
            flat::emit_surface_svg(&surface, path)?;
        }
        if let Some(path) = json {
            std::fs::write(path, surface.to_json())?;
        }
        if svg.is_none() && json.is_none() {
            let cones: Vec<String> = surface
                .cone_points()
                .iter()
                .map(|(_, a)| format!("{:.6}*pi", a / std::f64::consts::PI))
                .collect();
            println!(
                "unfolded surface: {} faces, genus {}, cone angles [{}]",
                surface.faces().len(),
                surface.genus(),
                cones.join(", ")
            );
        }
    } else {
        if let Some(path) = svg {
            flat::emit_polygon_svg(&polygon, path)?;
        }
        if let Some(path) = json {
            std::fs::write(path, polygon.to_json())?;
        }
        if svg.is_none() && json.is_none() {
            println!(
                "polygon: k = {}, {} edges, cone angles {:?} (units of 2pi/k)",
                polygon.k(),
                polygon.edges().len(),
                polygon.cone_spec()
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}
