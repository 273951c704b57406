//! `hodge`: batch front-end for the discrete Hodge algebra toolkit.
//!
//! Exit codes: 0 on success, 1 when a consistency check or sweep property
//! fails, 2 on unreadable input or invalid arguments.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hodge_core::detsym::{detsym_report, DetsymReport};
use hodge_core::invariants::{
    depth_stanley_reisner, is_buchsbaum_complex, is_cohen_macaulay_poset, InvariantReport, SCHEMA_VERSION,
};
use hodge_core::rees::{rees_cm_report, Degenerate, ReesReport};
use hodge_core::simplicial::ComplexFile;
use hodge_core::sweep::{run_sweep, Enumeration, SweepConfig, SweepSummary};
use hodge_core::{Error, FieldSpec, IdealRefFile, Poset, PosetFile, SimplicialComplex};
use serde::de::DeserializeOwned;
use serde::Serialize;

#[derive(Parser)]
#[command(name = "hodge", version, about = "Invariants of discrete Hodge algebras, posets and simplicial complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Output {
    /// Coefficient field characteristic: 0 or a prime. Repeatable; defaults to 0 and 2.
    #[arg(long = "char", value_name = "P")]
    chars: Vec<u64>,
    /// Print machine-readable JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Purity, Cohen-Macaulayness, Buchsbaumness and depth of a poset's order complex.
    CheckPoset {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Stanley-Reisner invariants of a simplicial complex.
    CheckComplex {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Builds P ⊎ Q and reports Cohen-Macaulayness of the Rees algebra.
    Uplus {
        poset: PathBuf,
        ideal: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Dimension and depth of the discrete 2-minor algebra of a symmetric n × n matrix.
    Detsym {
        #[arg(long)]
        n: usize,
        /// Minor size; only t = 2 has a full report.
        #[arg(long, default_value_t = 2)]
        t: usize,
        /// Largest n accepted; the polarized complex grows as 2^O(n²).
        #[arg(long, default_value_t = 5)]
        cap: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Checks the Rees-algebra statements on every small poset and ideal.
    Sweep {
        #[arg(long, default_value_t = 4)]
        max_elements: usize,
        /// Enumerate every labelled poset instead of only naturally labelled ones.
        #[arg(long)]
        labelled: bool,
        /// Additional random (P, Q) pairs.
        #[arg(long, default_value_t = 0)]
        random: usize,
        /// Size range of random posets, as MIN..=MAX.
        #[arg(long, default_value = "6..=6", value_parser = parse_range)]
        random_elements: (usize, usize),
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest enumeration size accepted.
        #[arg(long, default_value_t = 6)]
        cap: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Reduced Betti numbers of a complex, or of a poset's order complex.
    Homology {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
}

/// A failure reported to the user with exit code 2.
#[derive(Debug)]
struct InputError(String);

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError(e.to_string())
    }
}

type CliResult = Result<(String, bool), InputError>;

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (lo, hi) = s.split_once("..=").ok_or_else(|| format!("expected MIN..=MAX, got `{s}`"))?;
    let lo: usize = lo.trim().parse().map_err(|e| format!("{e}"))?;
    let hi: usize = hi.trim().parse().map_err(|e| format!("{e}"))?;
    if lo > hi {
        return Err(format!("empty range `{s}`"));
    }
    Ok((lo, hi))
}

fn fields(out: &Output) -> Result<Vec<FieldSpec>, InputError> {
    if out.chars.is_empty() {
        return Ok(vec![FieldSpec::RATIONAL, FieldSpec::GF2]);
    }
    let mut fs: Vec<FieldSpec> = Vec::new();
    for &p in &out.chars {
        let f = FieldSpec::new(p)?;
        if !fs.contains(&f) {
            fs.push(f);
        }
    }
    Ok(fs)
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, InputError> {
    let text = std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| {
        let line = text.lines().nth(e.line().saturating_sub(1)).unwrap_or("");
        InputError(format!("{}: {e}\n  {} | {line}", path.display(), e.line()))
    })
}

fn read_poset(path: &Path) -> Result<Poset, InputError> {
    Ok(Poset::try_from(read_json::<PosetFile>(path)?)?)
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize") + "\n"
}

#[derive(Serialize)]
struct FieldFlags {
    field: FieldSpec,
    cm: bool,
    buchsbaum: bool,
    depth: usize,
}

#[derive(Serialize)]
struct PosetReport {
    schema_version: u32,
    elements: usize,
    pure: bool,
    euler_char: i64,
    dim: usize,
    fields: Vec<FieldFlags>,
}

fn check_poset(file: &Path, out: &Output) -> CliResult {
    let fs = fields(out)?;
    let p = read_poset(file)?;
    let delta = p.order_complex()?;
    let report = PosetReport {
        schema_version: SCHEMA_VERSION,
        elements: p.len(),
        pure: p.is_pure(),
        euler_char: p.reduced_euler_char(),
        dim: p.height(),
        fields: fs
            .iter()
            .map(|&field| FieldFlags {
                field,
                cm: is_cohen_macaulay_poset(&p, field),
                buchsbaum: is_buchsbaum_complex(&delta, field),
                depth: depth_stanley_reisner(&delta, field).unwrap_or(0),
            })
            .collect(),
    };
    if out.json {
        return Ok((to_json(&report), true));
    }
    let mut s = String::new();
    writeln!(s, "elements: {}", report.elements).unwrap();
    writeln!(s, "pure: {}", report.pure).unwrap();
    writeln!(s, "reduced euler characteristic: {}", report.euler_char).unwrap();
    writeln!(s, "dim k[Δ(P)]: {}", report.dim).unwrap();
    for f in &report.fields {
        writeln!(s, "[{}] cm: {}  buchsbaum: {}  depth: {}", f.field, f.cm, f.buchsbaum, f.depth).unwrap();
    }
    Ok((s, true))
}

#[derive(Serialize)]
struct ComplexReport {
    schema_version: u32,
    vertices: usize,
    f_vector: Vec<usize>,
    equidimensional: bool,
    reports: Vec<InvariantReport>,
}

fn check_complex(file: &Path, out: &Output) -> CliResult {
    let fs = fields(out)?;
    let k = SimplicialComplex::try_from(read_json::<ComplexFile>(file)?)?;
    let report = ComplexReport {
        schema_version: SCHEMA_VERSION,
        vertices: k.vertices().len(),
        f_vector: k.f_vector(),
        equidimensional: k.is_equidimensional(),
        reports: fs.iter().map(|&f| InvariantReport::compute(&k, f)).collect(),
    };
    if out.json {
        return Ok((to_json(&report), true));
    }
    let mut s = String::new();
    writeln!(s, "vertices: {}", report.vertices).unwrap();
    writeln!(s, "f-vector (from ∅): {:?}", report.f_vector).unwrap();
    writeln!(s, "equidimensional: {}", report.equidimensional).unwrap();
    for r in &report.reports {
        writeln!(s, "[{}] dim: {}  depth: {}  cm: {}  buchsbaum: {}", r.field, r.dim, r.depth, r.cm, r.buchsbaum)
            .unwrap();
    }
    Ok((s, true))
}

#[derive(Serialize)]
struct UplusReport {
    schema_version: u32,
    uplus: PosetFile,
    reports: Vec<ReesReport>,
    consistent: bool,
}

fn uplus(poset: &Path, ideal: &Path, out: &Output) -> CliResult {
    let fs = fields(out)?;
    let p = read_poset(poset)?;
    let q = read_json::<IdealRefFile>(ideal)?.resolve(&p)?;
    let doubled = p.uplus(&q)?;
    let reports = fs.iter().map(|&f| rees_cm_report(&p, &q, f)).collect::<hodge_core::Result<Vec<_>>>()?;
    let consistent = reports.iter().all(|r| r.consistent);
    if let Some(d) = reports.first().and_then(|r| r.degenerate) {
        let which = match d {
            Degenerate::EmptyQ => "Q is empty",
            Degenerate::FullQ => "Q is all of P",
        };
        eprintln!("warning: {which}; conditions are reported but the Cohen-Macaulay equivalence is not asserted");
    }
    let report = UplusReport { schema_version: SCHEMA_VERSION, uplus: PosetFile::from(&doubled), reports, consistent };
    if out.json {
        return Ok((to_json(&report), consistent));
    }
    let mut s = String::new();
    writeln!(s, "P ⊎ Q elements: {}", report.uplus.elements.join(" ")).unwrap();
    let covers: Vec<String> = report.uplus.covers.iter().map(|(a, b)| format!("{a}<{b}")).collect();
    writeln!(s, "P ⊎ Q covers: {}", covers.join(" ")).unwrap();
    for r in &report.reports {
        let a = r.a_negative.map_or("undefined".to_string(), |a| a.to_string());
        writeln!(
            s,
            "[{}] cm(P): {}  cm(P ⊎ Q): {}  a-negative: {a}  euler(Q): {}  euler(intervals): {}  consistent: {}",
            r.field, r.cm_p, r.cm_uplus, r.cond_q, r.cond_interval, r.consistent
        )
        .unwrap();
    }
    writeln!(s, "consistent: {consistent}").unwrap();
    Ok((s, consistent))
}

fn detsym(n: usize, t: usize, cap: usize, out: &Output) -> CliResult {
    let fs = fields(out)?;
    if n > cap {
        return Err(Error::CapExceeded { n, cap }.into());
    }
    if t != 2 {
        return Err(InputError(format!("t = {t}: only t = 2 has a dimension and depth report")));
    }
    let reports = fs.iter().map(|&f| detsym_report(n, f)).collect::<hodge_core::Result<Vec<DetsymReport>>>()?;
    if out.json {
        return Ok((to_json(&reports), true));
    }
    let mut s = String::new();
    for r in &reports {
        writeln!(s, "[{}] n = {}", r.field, r.n).unwrap();
        writeln!(s, "  dim: {}  depth: {}", r.dim, r.depth).unwrap();
        writeln!(
            s,
            "  core dim: {}  core depth: {}  regular part: {}",
            r.core_dim,
            r.core_depth,
            r.regular_part.join(" ")
        )
        .unwrap();
        writeln!(
            s,
            "  polarized: {} extra variables, dim {}, depth {}, facets of size {:?} present: {}",
            r.polarization_aux, r.polarized_dim, r.polarized_depth, r.facet_sizes, r.facets_present
        )
        .unwrap();
    }
    Ok((s, true))
}

fn sweep(config: SweepConfig, cap: usize, json: bool) -> CliResult {
    let cap = cap.min(hodge_core::sweep::MAX_ENUMERATED);
    if config.max_elements > cap {
        return Err(Error::CapExceeded { n: config.max_elements, cap }.into());
    }
    if config.random_pairs > 0 && config.random_elements.1 > hodge_core::sweep::MAX_ENUMERATED {
        return Err(Error::CapExceeded { n: config.random_elements.1, cap: hodge_core::sweep::MAX_ENUMERATED }.into());
    }
    let summary: SweepSummary = run_sweep(&config);
    let clean = summary.is_clean();
    if json {
        return Ok((to_json(&summary), clean));
    }
    let mut s = String::new();
    writeln!(s, "posets: {}  (P, Q) pairs: {}", summary.posets, summary.pairs).unwrap();
    for t in &summary.tallies {
        writeln!(s, "{:?}: checked {}, violations {}", t.property, t.checked, t.violations).unwrap();
    }
    match &summary.first_counterexample {
        Some(c) => writeln!(s, "first counterexample: {}", serde_json::to_string(c).unwrap()).unwrap(),
        None => writeln!(s, "no violations").unwrap(),
    }
    Ok((s, clean))
}

#[derive(Serialize)]
struct HomologyEntry {
    field: FieldSpec,
    /// Reduced Betti numbers starting at degree −1.
    betti: Vec<u64>,
}

#[derive(Serialize)]
struct HomologyReport {
    schema_version: u32,
    euler_char: i64,
    homology: Vec<HomologyEntry>,
}

fn homology(file: &Path, out: &Output) -> CliResult {
    let fs = fields(out)?;
    let value: serde_json::Value = read_json(file)?;
    let k = if value.get("elements").is_some() {
        read_poset(file)?.order_complex()?
    } else {
        SimplicialComplex::try_from(read_json::<ComplexFile>(file)?)?
    };
    let report = HomologyReport {
        schema_version: SCHEMA_VERSION,
        euler_char: k.reduced_euler_char(),
        homology: fs
            .iter()
            .map(|&field| HomologyEntry { field, betti: k.reduced_betti_numbers(field).values().to_vec() })
            .collect(),
    };
    if out.json {
        return Ok((to_json(&report), true));
    }
    let mut s = String::new();
    writeln!(s, "reduced euler characteristic: {}", report.euler_char).unwrap();
    for h in &report.homology {
        let parts: Vec<String> = h.betti.iter().enumerate().map(|(i, b)| format!("β̃{}={b}", i as i64 - 1)).collect();
        writeln!(s, "[{}] {}", h.field, parts.join(" ")).unwrap();
    }
    Ok((s, true))
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::CheckPoset { file, out } => check_poset(&file, &out),
        Command::CheckComplex { file, out } => check_complex(&file, &out),
        Command::Uplus { poset, ideal, out } => uplus(&poset, &ideal, &out),
        Command::Detsym { n, t, cap, out } => detsym(n, t, cap, &out),
        Command::Sweep { max_elements, labelled, random, random_elements, seed, cap, out } => {
            let config = SweepConfig {
                max_elements,
                enumeration: if labelled { Enumeration::Labelled } else { Enumeration::NaturallyLabelled },
                fields: fields(&out)?,
                random_pairs: random,
                random_elements,
                seed,
            };
            sweep(config, cap, out.json)
        }
        Command::Homology { file, out } => homology(&file, &out),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((text, ok)) => {
            print!("{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
