//! Batch front end for the `stabchar` library.
//!
//! Exit status: 0 on success (and when every verified case passes), 1 when a
//! verification case fails, 2 on usage, parse or computation errors.

macro_rules! outln {
    ($($t:tt)*) => {
        $crate::emit(&format!("{}\n", format_args!($($t)*)))
    };
}

mod scan;
mod verify;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use stabchar::embeddings::{f_image_skew, f_image_table, Decomposition, EmbeddingTable};
use stabchar::kr::{format_weights, validity_note, w_decomposition, weight_notation, Family};
use stabchar::rational;
use stabchar::series::{kappa_expansion, product_expansion, KappaExpansion, Series};
use stabchar::{bcd, cache, schur, Basis, FormalSum, Partition};

#[derive(Parser)]
#[command(
    name = "stabchar",
    version,
    about = "Exact stable characters of the classical groups"
)]
struct Cli {
    /// Directory for the persistent Littlewood–Richardson cache; overrides
    /// the STABCHAR_CACHE_DIR environment variable.
    #[arg(long, global = true, value_name = "DIR")]
    cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Schur-ring products and skews.
    Expand(ExpandArgs),
    /// The Schur expansion of κ_p, or a positivity verdict.
    Kappa(KappaArgs),
    /// f(s_λ) from a series, a table of m_ij, or a KR family.
    Embed(EmbedArgs),
    /// Check identities case by case and report PASS/FAIL lines.
    Verify(verify::VerifyArgs),
    /// Coefficients of κ_p for the quadratic p = 1 + b x + a x².
    #[command(after_long_help = scan::CSV_HELP)]
    Scan(scan::ScanArgs),
    /// Write the m_ij table of f_p as JSON.
    Table(TableArgs),
}

#[derive(Args)]
struct ExpandArgs {
    /// Skew shape `L/M`, e.g. `3,2,2/1,1`.
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["multiply", "lambda"])]
    skew: Option<String>,
    /// Product `A/B` of two basis elements, e.g. `2,1/1`.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "lambda")]
    multiply: Option<String>,
    /// Outer shape; alone it prints s_λ, with --mu the skew s_{λ/μ}.
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires = "lambda")]
    mu: Option<String>,
    /// Multiply in the stable sp ring (Newell–Littlewood) instead.
    #[arg(long, requires = "multiply")]
    bcd: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct KappaArgs {
    /// `one`, `geom`, `geom2` or coefficients `1,a1,a2,...`.
    #[arg(long)]
    series: String,
    #[arg(long)]
    degree: usize,
    /// Print only the first negative coefficient, or the positive verdict.
    #[arg(long)]
    check_positivity: bool,
    /// Expand ∏ p(xᵢ) instead of κ_p.
    #[arg(long)]
    product: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct EmbedArgs {
    #[arg(long, conflicts_with = "table")]
    series: Option<String>,
    /// JSON file of m_ij entries.
    #[arg(long, value_name = "FILE")]
    table: Option<PathBuf>,
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    /// C or BD. Alone it gives the KR character W(λ); with a series or table
    /// it only selects the output basis (sp for C, o for BD).
    #[arg(long)]
    family: Option<Family>,
    #[arg(long)]
    json: bool,
    /// Print summands as V(Σ c_ℓ w_ℓ).
    #[arg(long)]
    weights: bool,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long)]
    series: String,
    #[arg(long)]
    cutoff: usize,
}

/// Writes to stdout, surfacing a closed pipe as an error instead of a panic.
pub(crate) fn emit(text: &str) -> Result<()> {
    io::stdout().lock().write_all(text.as_bytes())?;
    Ok(())
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain().any(|c| {
        c.downcast_ref::<io::Error>()
            .is_some_and(|io| io.kind() == io::ErrorKind::BrokenPipe)
    })
}

pub(crate) fn parse_partition(s: &str) -> Result<Partition> {
    s.parse().map_err(|e| anyhow!("{e}"))
}

fn parse_pair(s: &str) -> Result<(Partition, Partition)> {
    let (a, b) = s
        .split_once('/')
        .with_context(|| format!("expected A/B, got {s:?}"))?;
    Ok((parse_partition(a)?, parse_partition(b)?))
}

pub(crate) fn parse_series(s: &str, order: usize) -> Result<Series> {
    Series::parse(s, order).map_err(|e| anyhow!("{e}"))
}

fn print_sum(sum: &FormalSum, json: bool) -> Result<()> {
    if json {
        outln!("{}", serde_json::to_string(&sum.to_json())?)?;
    } else {
        outln!("{sum}")?;
    }
    Ok(())
}

fn expand(args: ExpandArgs) -> Result<()> {
    let s = |p: Partition| FormalSum::basis_element(Basis::Schur, p);
    let sum = if let Some(text) = &args.skew {
        let (l, m) = parse_pair(text)?;
        schur::skew_expand(&l, &m)
    } else if let Some(text) = &args.multiply {
        let (a, b) = parse_pair(text)?;
        if args.bcd {
            let sp = |p: Partition| FormalSum::basis_element(Basis::Sp, p);
            bcd::multiply(&sp(a), &sp(b))?
        } else {
            schur::multiply(&s(a), &s(b))?
        }
    } else if let Some(text) = &args.lambda {
        let l = parse_partition(text)?;
        match &args.mu {
            Some(m) => schur::skew_expand(&l, &parse_partition(m)?),
            None => s(l),
        }
    } else {
        bail!("expand needs --skew, --multiply or --lambda");
    };
    print_sum(&sum, args.json)
}

fn kappa_json(series: &str, k: &KappaExpansion) -> serde_json::Value {
    let degrees: Vec<_> = k
        .graded()
        .iter()
        .enumerate()
        .map(|(d, g)| json!({ "degree": d, "terms": g.json_terms() }))
        .collect();
    json!({ "schema": 1, "series": series, "cutoff": k.cutoff(), "degrees": degrees })
}

fn kappa(args: KappaArgs) -> Result<()> {
    let p = parse_series(&args.series, args.degree)?;
    let k = if args.product {
        product_expansion(&p, args.degree)?
    } else {
        kappa_expansion(&p, args.degree)?
    };
    if args.check_positivity {
        let verdict = k.verdict();
        if args.json {
            let v = match &verdict {
                stabchar::series::Verdict::Positive { through } => {
                    json!({ "positive": true, "through": through })
                }
                stabchar::series::Verdict::Violation { shape, coeff } => {
                    json!({ "positive": false, "shape": shape, "coeff": rational::to_text(coeff) })
                }
            };
            outln!(
                "{}",
                serde_json::to_string(&json!({ "schema": 1, "verdict": v }))?
            )?;
        } else {
            outln!("{verdict}")?;
        }
        return Ok(());
    }
    if args.json {
        outln!("{}", serde_json::to_string(&kappa_json(&args.series, &k))?)?;
    } else {
        for (d, g) in k.graded().iter().enumerate() {
            outln!("{d}: {g}")?;
        }
    }
    Ok(())
}

fn embed(args: EmbedArgs) -> Result<()> {
    let lambda = parse_partition(&args.lambda)?;
    let mut d: Decomposition = match (&args.series, &args.table, args.family) {
        (Some(s), _, _) => f_image_skew(&parse_series(s, lambda.size())?, &lambda)?,
        (None, Some(path), _) => {
            let text =
                fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            f_image_table(&EmbeddingTable::from_json(&text)?, &lambda)?
        }
        (None, None, Some(f)) => w_decomposition(&lambda, f)?,
        (None, None, None) => bail!("embed needs --series, --table or --family"),
    };
    if let Some(f) = args.family {
        d = d.relabel(f.basis());
    }
    let note = args.family.map(|_| validity_note(&lambda));
    if args.json {
        let mut v = d.to_json();
        if let Some(n) = &note {
            v["note"] = json!(n);
        }
        if args.weights {
            v["weights"] = d
                .sum()
                .sorted_terms()
                .into_iter()
                .map(|(mu, c)| json!({ "weight": weight_notation(mu), "coeff": rational::to_text(c) }))
                .collect();
        }
        outln!("{}", serde_json::to_string(&v)?)?;
    } else {
        if args.weights {
            outln!("{}", format_weights(d.sum()))?;
        } else {
            outln!("{d}")?;
        }
        if let Some(n) = note {
            outln!("# {n}")?;
        }
    }
    Ok(())
}

fn table(args: TableArgs) -> Result<()> {
    let p = parse_series(&args.series, args.cutoff)?;
    let t = EmbeddingTable::from_series(&p, args.cutoff)?;
    outln!("{}", serde_json::to_string(&t.to_json())?)?;
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    let cache_dir = cli.cache_dir.or_else(cache::dir_from_env);
    if let Some(dir) = &cache_dir {
        cache::load(dir).with_context(|| format!("loading cache from {}", dir.display()))?;
    }
    let ok = match cli.command {
        Command::Expand(a) => expand(a).map(|_| true),
        Command::Kappa(a) => kappa(a).map(|_| true),
        Command::Embed(a) => embed(a).map(|_| true),
        Command::Verify(a) => verify::run(a),
        Command::Scan(a) => scan::run(a).map(|_| true),
        Command::Table(a) => table(a).map(|_| true),
    }?;
    if let Some(dir) = &cache_dir {
        cache::save(dir).with_context(|| format!("saving cache to {}", dir.display()))?;
    }
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
