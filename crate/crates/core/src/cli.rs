//! The `selfdual` command-line tool.
//!
//! Exit codes: 0 success, 2 usage or invalid input, 3 resource cap hit,
//! 4 verification mismatch.

use std::collections::HashSet;
use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::codes::{self, CodeSpec, Family};
use crate::error::Error;
use crate::gf2m::{FieldElement, FieldSpec};
use crate::gray;
use crate::oracle;
use crate::solver;
use crate::ypoly::YPoly;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "selfdual", version, about = "Self-dual cyclic codes of length 2^s over F_{2^m} + uF_{2^m}")]
pub struct Cli {
    /// Write output to this file instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<std::path::PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct FieldArgs {
    /// Code length exponent: N = 2^s.
    #[arg(long)]
    pub s: u32,
    /// Field degree: F_{2^m}.
    #[arg(long, default_value_t = 1)]
    pub m: u32,
    /// Irreducible modulus as hex, e.g. 0x7 for x^2+x+1.
    #[arg(long)]
    pub modulus: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Stream every self-dual cyclic code.
    Enumerate {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Emit only the first N records.
        #[arg(long)]
        limit: Option<u64>,
        /// Refuse to stream more than this many codes.
        #[arg(long, env = oracle::CAP_ENV)]
        cap: Option<u64>,
    },
    /// Print the exact number of self-dual (or all) cyclic codes.
    Count {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        all_cyclic: bool,
    },
    /// Check the enumeration against the brute-force oracle.
    Verify {
        #[command(flatten)]
        field: FieldArgs,
        /// Also recount over every cyclic code of the length.
        #[arg(long)]
        full: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, env = oracle::CAP_ENV)]
        cap: Option<u64>,
    },
    /// Print the structured matrices or x^{-1}.
    Tables {
        /// M_l as rows of 0/1.
        #[arg(long = "M", value_name = "L", group = "table")]
        m_matrix: Option<usize>,
        /// G_{2^lambda} as rows of 0/1.
        #[arg(long = "G", value_name = "LAMBDA", group = "table")]
        g_matrix: Option<u32>,
        /// x^{-1} modulo (x+1)^l in the (x+1)-basis.
        #[arg(long, value_name = "L", group = "table")]
        xinv: Option<usize>,
    },
    /// Print the parametrization of S_l or its truncation S_l^[delta].
    Space {
        #[arg(long)]
        l: usize,
        #[arg(long, default_value_t = 0)]
        delta: usize,
    },
    /// Gray image generators and weight distributions of one self-dual code.
    Gray {
        #[command(flatten)]
        field: FieldArgs,
        /// Position in the enumeration order.
        #[arg(long)]
        index: u64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long, env = oracle::CAP_ENV)]
        cap: Option<u64>,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Cap(String),
    Mismatch(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } | Error::SizeOverflow { .. } => Failure::Cap(e.to_string()),
            Error::CardinalityMismatch { .. } => Failure::Mismatch(e.to_string()),
            e => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type CmdResult = std::result::Result<(), Failure>;

fn parse_field(args: &FieldArgs) -> std::result::Result<FieldSpec, Failure> {
    codes::check_s(args.s)?;
    let field = match &args.modulus {
        None => FieldSpec::with_default_modulus(args.m)?,
        Some(hex) => {
            let digits = hex.trim_start_matches("0x").trim_start_matches("0X");
            let modulus = u32::from_str_radix(digits, 16)
                .map_err(|_| Failure::Usage(format!("modulus {hex:?} is not hex")))?;
            FieldSpec::new(args.m, modulus)?
        }
    };
    Ok(field)
}

fn hex(x: FieldElement) -> String {
    format!("{x:x}")
}

#[derive(Serialize)]
struct CodeRecord {
    family: &'static str,
    s: u32,
    m: u32,
    modulus: String,
    k: Option<usize>,
    t: Option<usize>,
    b: Vec<String>,
    generators: Vec<Vec<String>>,
}

/// The JSON line `enumerate` prints for `c`.
pub fn record_json(c: &CodeSpec) -> String {
    serde_json::to_string(&record(c)).expect("plain data")
}

fn record(c: &CodeSpec) -> CodeRecord {
    let case = c.case_form();
    CodeRecord {
        family: c.family().name(),
        s: c.s(),
        m: c.field().m(),
        modulus: format!("0x{:x}", c.field().modulus()),
        k: case.k(),
        t: case.t(),
        b: c.b().map(|b| b.coeffs().iter().map(|&x| hex(x)).collect()).unwrap_or_default(),
        generators: c
            .generators()
            .iter()
            .map(|g| g.entries().iter().map(|e| e.to_string()).collect())
            .collect(),
    }
}

fn opt(x: Option<usize>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

fn cmd_enumerate(out: &mut dyn Write, f: &FieldArgs, format: Format, limit: Option<u64>, cap: Option<u64>) -> CmdResult {
    let field = parse_field(f)?;
    let cap = cap.or(if limit.is_none() { Some(oracle::configured_cap()) } else { None });
    let total = codes::count_selfdual(f.s, field.m());
    let stream = codes::enumerate_selfdual(f.s, &field, cap)?;
    if format == Format::Csv {
        writeln!(out, "index,family,k,t,b")?;
    }
    let mut emitted = 0u64;
    for c in stream.take(limit.map_or(usize::MAX, |l| l.try_into().unwrap_or(usize::MAX))) {
        match format {
            Format::Json => {
                serde_json::to_writer(&mut *out, &record(&c)).map_err(io::Error::from)?;
                writeln!(out)?;
            }
            Format::Csv => {
                let r = record(&c);
                writeln!(out, "{emitted},{},{},{},{}", r.family, opt(r.k), opt(r.t), r.b.join(" "))?;
            }
        }
        emitted += 1;
    }
    match format {
        Format::Json => writeln!(out, "{{\"summary\":{{\"total\":{total},\"emitted\":{emitted}}}}}")?,
        Format::Csv => writeln!(out, "# total {total}, emitted {emitted}")?,
    }
    Ok(())
}

fn cmd_count(out: &mut dyn Write, f: &FieldArgs, all_cyclic: bool) -> CmdResult {
    let field = parse_field(f)?;
    let n = if all_cyclic { codes::count_all_cyclic(f.s, field.m()) } else { codes::count_selfdual(f.s, field.m()) };
    writeln!(out, "{n}")?;
    Ok(())
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

fn cmd_verify(out: &mut dyn Write, f: &FieldArgs, full: bool, cap: u64) -> CmdResult {
    let field = parse_field(f)?;
    let m = field.m();
    let expected = codes::count_selfdual(f.s, m);
    if expected > BigUint::from(cap) {
        return Err(Error::CapExceeded { what: "self-dual codes", needed: expected.to_string(), cap }.into());
    }
    let mut ok = true;
    let mut keys = HashSet::new();
    for family in Family::SELF_DUAL {
        let specs: Vec<CodeSpec> = codes::enumerate_selfdual_families(f.s, &field, &[family], None)?.collect();
        let checked: Vec<(Vec<Vec<FieldElement>>, bool)> = specs
            .par_iter()
            .map(|c| (oracle::code_subspace(c).rows().to_vec(), oracle::is_self_dual(c)))
            .collect();
        let good = checked.iter().filter(|(_, sd)| *sd).count();
        let fresh = checked.into_iter().filter(|(key, _)| keys.insert(key.clone())).count();
        let count_ok = BigUint::from(specs.len()) == codes::count_selfdual_family(f.s, m, family);
        let family_ok = good == specs.len() && fresh == specs.len() && count_ok;
        ok &= family_ok;
        writeln!(out, "{family}: {} ({good}/{} self-dual, {fresh} distinct)", pass(family_ok), specs.len())?;
    }
    let listed = keys.len();
    let count_ok = BigUint::from(listed) == expected;
    ok &= count_ok;
    writeln!(out, "count: {} ({listed} enumerated, formula {expected})", pass(count_ok))?;
    if full {
        let census = oracle::census(f.s, &field, cap)?;
        let found: HashSet<_> =
            census.self_dual.par_iter().map(|c| oracle::code_subspace(c).rows().to_vec()).collect();
        let census_ok = BigUint::from(census.self_dual.len()) == expected
            && census.distinct == census.total
            && BigUint::from(census.total) == codes::count_all_cyclic(f.s, m)
            && found == keys;
        ok &= census_ok;
        writeln!(
            out,
            "census: {} ({}/{} self-dual, {} distinct cyclic codes)",
            pass(census_ok),
            census.self_dual.len(),
            census.total,
            census.distinct
        )?;
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Mismatch("verification failed".into()))
    }
}

fn cmd_tables(out: &mut dyn Write, m_l: Option<usize>, g: Option<u32>, xinv: Option<usize>) -> CmdResult {
    let rows = match (m_l, g, xinv) {
        (Some(l), None, None) => solver::build_m(l)?.to_row_strings(),
        (None, Some(level), None) => solver::build_g(level)?.to_row_strings(),
        (None, None, Some(l)) => {
            let p = YPoly::x_inverse(FieldSpec::with_default_modulus(1)?, l)?;
            let coeffs: Vec<String> = p.coeffs().iter().map(|&c| hex(c)).collect();
            let json = serde_json::json!({ "l": l, "coeffs": coeffs });
            vec![json.to_string()]
        }
        _ => return Err(Failure::Usage("tables needs exactly one of --M, --G, --xinv".into())),
    };
    for r in rows {
        writeln!(out, "{r}")?;
    }
    Ok(())
}

fn cmd_space(out: &mut dyn Write, l: usize, delta: usize) -> CmdResult {
    let space = solver::solve_recursive(l)?.truncate(delta)?;
    writeln!(out, "{space}")?;
    Ok(())
}

fn cmd_gray(out: &mut dyn Write, f: &FieldArgs, index: u64, format: Format, cap: u64) -> CmdResult {
    let field = parse_field(f)?;
    let total = codes::count_selfdual(f.s, field.m());
    if BigUint::from(index) >= total {
        return Err(Failure::Usage(format!("index {index} out of range: {total} codes")));
    }
    let code = codes::enumerate_selfdual(f.s, &field, None)?
        .nth(index as usize)
        .ok_or_else(|| Failure::Usage(format!("index {index} out of range")))?;
    let set = oracle::expand(&code, cap)?;
    let image = gray::gray_image(&set);
    let generators = gray::image_generators(&code);
    let lee = gray::lee_distribution(&set);
    let hamming = gray::hamming_distribution(&image);
    let checks = [
        ("linear", image.is_linear()),
        ("self_dual", image.is_self_dual()),
        ("quasi_cyclic", image.is_block_quasi_cyclic()),
        ("lee_equals_hamming", lee == hamming),
    ];
    let rows: Vec<Vec<String>> =
        generators.rows().iter().map(|r| r.iter().map(|&x| hex(x)).collect()).collect();
    match format {
        Format::Csv => {
            writeln!(out, "# code {index}: {} {}", code.family(), code.describe())?;
            writeln!(out, "# generators")?;
            for r in &rows {
                writeln!(out, "{}", r.join(","))?;
            }
            for (name, dist) in [("lee", &lee), ("hamming", &hamming)] {
                writeln!(out, "# {name}")?;
                writeln!(out, "weight,count")?;
                for (w, c) in dist {
                    writeln!(out, "{w},{c}")?;
                }
            }
            writeln!(out, "# checks")?;
            for (name, v) in checks {
                writeln!(out, "{name},{v}")?;
            }
        }
        Format::Json => {
            let json = serde_json::json!({
                "index": index,
                "record": record(&code),
                "generators": rows,
                "lee": lee,
                "hamming": hamming,
                "checks": checks.iter().map(|(n, v)| (n.to_string(), *v)).collect::<std::collections::BTreeMap<_, _>>(),
            });
            writeln!(out, "{json}")?;
        }
    }
    if checks.iter().all(|(_, v)| *v) {
        Ok(())
    } else {
        Err(Failure::Mismatch("gray image checks failed".into()))
    }
}

fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> std::result::Result<T, Failure> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(pool.install(f))
}

fn dispatch(cli: &Cli, out: &mut (dyn Write + Send)) -> CmdResult {
    match &cli.command {
        Command::Enumerate { field, format, limit, cap } => cmd_enumerate(out, field, *format, *limit, *cap),
        Command::Count { field, all_cyclic } => cmd_count(out, field, *all_cyclic),
        Command::Verify { field, full, jobs, cap } => {
            let cap = cap.unwrap_or_else(oracle::configured_cap);
            with_jobs(*jobs, || cmd_verify(out, field, *full, cap))?
        }
        Command::Tables { m_matrix, g_matrix, xinv } => cmd_tables(out, *m_matrix, *g_matrix, *xinv),
        Command::Space { l, delta } => cmd_space(out, *l, *delta),
        Command::Gray { field, index, format, cap } => {
            cmd_gray(out, field, *index, *format, cap.unwrap_or_else(oracle::configured_cap))
        }
    }
}

/// Runs the tool on `args` (including the program name) and returns the
/// exit code. Output goes to `out` unless `--output` is given.
pub fn run<I, T>(args: I, out: &mut (dyn Write + Send), err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let result = match &cli.output {
        Some(path) => match File::create(path) {
            Ok(file) => {
                let mut file = io::BufWriter::new(file);
                dispatch(&cli, &mut file).and_then(|()| file.flush().map_err(Failure::Io))
            }
            Err(e) => Err(Failure::Io(e)),
        },
        None => dispatch(&cli, out),
    };
    let _ = out.flush();
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Cap(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_CAP
        }
        Err(Failure::Mismatch(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_MISMATCH
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
