use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use gf2kq::bench::{fits, run_bench, to_csv};
use gf2kq::catalog::{self, catalog_lookup, FamilyKind};
use gf2kq::circuit::{emit_netlist, parse_netlist};
use gf2kq::gf2::BinaryPolynomial;
use gf2kq::sim::{default_seed, verify_multiplier, VerifyMode};
use gf2kq::synth::{synth, LadderStyle, OutputForm, SynthError, SynthesisOptions, Variant};

const OK: u8 = 0;
const VERIFY_FAILED: u8 = 1;
const BAD_MODULUS: u8 = 2;
const UNSUPPORTED: u8 = 3;
const PARSE_IO: u8 = 4;

#[derive(Parser)]
#[command(
    name = "gf2kq",
    version,
    about = "Quantum GF(2^n) multipliers with O(n^log2(3)) CCZ gates"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Synthesize a multiplier and write its netlist.
    Synth(SynthArgs),
    /// Check a netlist against field multiplication.
    Verify(VerifyArgs),
    /// Resource table over a range of sizes (CSV).
    Bench(BenchArgs),
    /// List catalog moduli.
    Catalog(CatalogArgs),
}

#[derive(Args)]
struct SynthArgs {
    /// Modulus as an exponent list (`4,1,0`) or `x^4+x+1`.
    #[arg(long)]
    poly: String,
    #[arg(long, default_value = "compact")]
    variant: Variant,
    /// ccz or toffoli (default: toffoli for baseline, ccz otherwise).
    #[arg(long)]
    form: Option<String>,
    /// sequential or prefix (log-depth only).
    #[arg(long, default_value = "prefix")]
    ladder: String,
    /// Accept a reducible modulus (multiplies in GF(2)[x]/P).
    #[arg(long)]
    allow_reducible: bool,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    circuit: PathBuf,
    #[arg(long)]
    poly: String,
    #[arg(long, conflicts_with_all = ["trials", "seed"])]
    exhaustive: bool,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct BenchArgs {
    /// `4,8,16` or an inclusive range `a..b`.
    #[arg(long)]
    sizes: String,
    /// Comma-separated variants (default: all).
    #[arg(long, value_delimiter = ',')]
    variant: Vec<Variant>,
    #[arg(long, default_value = "generic")]
    family: FamilyKind,
    #[arg(long)]
    fit: bool,
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Args)]
struct CatalogArgs {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    family: Option<FamilyKind>,
}

struct Failure(u8, String);

type CmdResult = Result<u8, Failure>;

fn parse_poly(s: &str) -> Result<BinaryPolynomial, Failure> {
    s.parse().map_err(|e| Failure(PARSE_IO, format!("{e}")))
}

fn synth_code(e: &SynthError) -> u8 {
    match e {
        SynthError::UnsupportedFamily(_) | SynthError::UnsupportedForm(_) => UNSUPPORTED,
        _ => BAD_MODULUS,
    }
}

fn cmd_synth(a: SynthArgs) -> CmdResult {
    let p = parse_poly(&a.poly)?;
    let mut opts = SynthesisOptions::new(a.variant, p);
    opts.allow_reducible = a.allow_reducible;
    opts.output_form = match a.form.as_deref() {
        None => opts.output_form,
        Some("ccz") => OutputForm::Ccz,
        Some("toffoli") => OutputForm::Toffoli,
        Some(f) => {
            return Err(Failure(
                PARSE_IO,
                format!("unknown form `{f}` (ccz, toffoli)"),
            ))
        }
    };
    opts.ladder_style = match a.ladder.as_str() {
        "prefix" => LadderStyle::Prefix,
        "sequential" => LadderStyle::Sequential,
        l => {
            return Err(Failure(
                PARSE_IO,
                format!("unknown ladder `{l}` (sequential, prefix)"),
            ))
        }
    };
    let circuit = synth(&opts).map_err(|e| Failure(synth_code(&e), e.to_string()))?;
    fs::write(&a.out, emit_netlist(&circuit))
        .map_err(|e| Failure(PARSE_IO, format!("{}: {e}", a.out.display())))?;
    println!(
        "{} P={} -> {}",
        opts.variant,
        opts.modulus.to_pretty(),
        a.out.display()
    );
    println!("{}", circuit.report());
    Ok(OK)
}

fn cmd_verify(a: VerifyArgs) -> CmdResult {
    let text = fs::read_to_string(&a.circuit)
        .map_err(|e| Failure(PARSE_IO, format!("{}: {e}", a.circuit.display())))?;
    let circuit = parse_netlist(&text).map_err(|e| Failure(PARSE_IO, e.to_string()))?;
    let p = parse_poly(&a.poly)?;
    let n = p.degree().unwrap_or(0);
    let mode = if a.exhaustive {
        VerifyMode::Exhaustive
    } else if a.trials.is_some() || a.seed.is_some() {
        VerifyMode::Randomized {
            trials: a.trials.unwrap_or(1000),
            seed: a.seed.unwrap_or_else(default_seed),
        }
    } else {
        VerifyMode::auto(n)
    };
    let report = verify_multiplier(&circuit, &p, mode)
        .map_err(|e| Failure(VERIFY_FAILED, format!("FAIL {e}")))?;
    println!("{report}");
    Ok(if report.passed && report.ancillas_clean {
        OK
    } else {
        VERIFY_FAILED
    })
}

fn parse_sizes(s: &str) -> Result<Vec<usize>, Failure> {
    let bad = || Failure(PARSE_IO, format!("bad size list `{s}`"));
    if let Some((lo, hi)) = s.split_once("..") {
        let lo: usize = lo.trim().parse().map_err(|_| bad())?;
        let hi: usize = hi
            .trim()
            .trim_start_matches('=')
            .parse()
            .map_err(|_| bad())?;
        return Ok((lo..=hi).collect());
    }
    s.split(',')
        .map(|t| t.trim().parse().map_err(|_| bad()))
        .collect()
}

fn cmd_bench(a: BenchArgs) -> CmdResult {
    let sizes = parse_sizes(&a.sizes)?;
    let variants = if a.variant.is_empty() {
        Variant::ALL.to_vec()
    } else {
        a.variant
    };
    let (rows, failures) = run_bench(&sizes, &variants, a.family);
    let f = if a.fit { fits(&rows) } else { Vec::new() };
    let text = to_csv(&rows, &failures, &f);
    match a.csv {
        Some(path) => fs::write(&path, text)
            .map_err(|e| Failure(PARSE_IO, format!("{}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(OK)
}

fn cmd_catalog(a: CatalogArgs) -> CmdResult {
    let sizes: Vec<usize> = match a.n {
        Some(n) => vec![n],
        None => (catalog::MIN_N..=catalog::MAX_N).collect(),
    };
    for n in sizes {
        match a.family {
            Some(f) => match catalog_lookup(n, f) {
                Ok(e) => println!("{e}"),
                Err(e) if a.n.is_some() => return Err(Failure(BAD_MODULUS, e.to_string())),
                Err(_) => {}
            },
            None => {
                for e in catalog::entries(n).map_err(|e| Failure(BAD_MODULUS, e.to_string()))? {
                    println!("{e}");
                }
            }
        }
    }
    Ok(OK)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { PARSE_IO } else { OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.cmd {
        Cmd::Synth(a) => cmd_synth(a),
        Cmd::Verify(a) => cmd_verify(a),
        Cmd::Bench(a) => cmd_bench(a),
        Cmd::Catalog(a) => cmd_catalog(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
