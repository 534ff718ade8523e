use std::cmp::Ordering;
use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use clap::Args;
use num_traits::{Signed, Zero};

use stabchar::rational::{self, to_text, Rational};
use stabchar::series::{double_hook, quadratic_scan, shape_32211, QuadraticReport};

pub const CSV_HELP: &str = "\
CSV columns, one row per grid point:
  a              coefficient of x^2, exact rational
  b              coefficient of x, exact rational
  degree         expansion cutoff N
  coeff_32211    coefficient of s[3,2,2,1,1] in kappa_p, exact; empty if degree < 9
  sign_32211     -1, 0 or 1; empty if degree < 9
  binding_shape  most negative shape in degrees <= N, or empty
  binding_coeff  its coefficient, or empty
  boundary_b     a*sqrt(a+2)/(a+1) as a float, empty for a < 0
  b_vs_boundary  below, on or above, decided exactly; empty for a < 0
  hooks          t:coeff pairs for s[2^t,1^t], separated by ';'";

#[derive(Args)]
pub struct ScanArgs {
    #[arg(
        long,
        allow_hyphen_values = true,
        requires = "b",
        conflicts_with = "grid"
    )]
    a: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires = "a")]
    b: Option<String>,
    /// `a=START..END:STEP,b=START..END:STEP` with rational endpoints.
    #[arg(long)]
    grid: Option<String>,
    /// Expansion cutoff; s[3,2,2,1,1] needs at least 9.
    #[arg(long, default_value_t = 11)]
    degree: usize,
    /// Write one CSV row per point to FILE.
    #[arg(long, value_name = "FILE")]
    csv: Option<PathBuf>,
}

fn parse_range(text: &str) -> Result<Vec<Rational>> {
    let (range, step) = text
        .split_once(':')
        .with_context(|| format!("range {text:?} lacks :STEP"))?;
    let (start, end) = range
        .split_once("..")
        .with_context(|| format!("range {text:?} lacks .."))?;
    let r = |s: &str| rational::parse(s).map_err(|e| anyhow!("{e}"));
    let (start, end, step) = (r(start)?, r(end)?, r(step)?);
    if !step.is_positive() {
        bail!("step in {text:?} must be positive");
    }
    let mut out = Vec::new();
    let mut x = start;
    while x <= end {
        out.push(x.clone());
        x += &step;
    }
    Ok(out)
}

fn parse_grid(text: &str) -> Result<(Vec<Rational>, Vec<Rational>)> {
    let mut a = None;
    let mut b = None;
    for part in text.split(',') {
        match part.split_once('=') {
            Some(("a", r)) => a = Some(parse_range(r)?),
            Some(("b", r)) => b = Some(parse_range(r)?),
            _ => bail!("grid component {part:?} is not a=.. or b=.."),
        }
    }
    Ok((a.context("grid lacks a=")?, b.context("grid lacks b=")?))
}

fn sign(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

fn side(o: Option<Ordering>) -> &'static str {
    match o {
        Some(Ordering::Less) => "below",
        Some(Ordering::Equal) => "on",
        Some(Ordering::Greater) => "above",
        None => "",
    }
}

fn hooks_text(r: &QuadraticReport, sep: &str) -> String {
    r.hooks
        .iter()
        .map(|(t, c)| format!("{t}:{}", to_text(c)))
        .collect::<Vec<_>>()
        .join(sep)
}

fn csv_row(r: &QuadraticReport) -> String {
    let (shape, coeff) = match &r.binding {
        Some((l, c)) => (l.to_text(), to_text(c)),
        None => (String::new(), String::new()),
    };
    let edge = if r.boundary.is_some() {
        format!("{:.10}", r.boundary_approx)
    } else {
        String::new()
    };
    format!(
        "{},{},{},{},{},{},{},{},{},{}",
        to_text(&r.a),
        to_text(&r.b),
        r.cutoff,
        r.coeff_32211.as_ref().map(to_text).unwrap_or_default(),
        r.coeff_32211
            .as_ref()
            .map(|c| sign(c).to_string())
            .unwrap_or_default(),
        shape,
        coeff,
        edge,
        side(r.boundary),
        hooks_text(r, ";"),
    )
}

fn print_report(r: &QuadraticReport) -> Result<()> {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "a={} b={} degree={}",
        to_text(&r.a),
        to_text(&r.b),
        r.cutoff
    );
    if let Some(c) = &r.coeff_32211 {
        let _ = writeln!(out, "s{}: {}", shape_32211().bracketed(), to_text(c));
    }
    for (t, c) in &r.hooks {
        let _ = writeln!(out, "s{}: {}", double_hook(*t).bracketed(), to_text(c));
    }
    match &r.binding {
        Some((l, c)) => {
            let _ = writeln!(out, "binding: s{} coeff {}", l.bracketed(), to_text(c));
        }
        None => {
            let _ = writeln!(out, "binding: none, all coefficients nonnegative");
        }
    }
    if r.boundary.is_some() {
        let _ = writeln!(
            out,
            "boundary: b* = {:.10}, b is {}",
            r.boundary_approx,
            side(r.boundary)
        );
    }
    for (d, l, c) in &r.min_by_degree {
        let _ = writeln!(out, "min degree {d}: s{} {}", l.bracketed(), to_text(c));
    }
    crate::emit(&out)
}

pub fn run(args: ScanArgs) -> Result<()> {
    let points: Vec<(Rational, Rational)> = match (&args.a, &args.b, &args.grid) {
        (Some(a), Some(b), None) => {
            let r = |s: &str| rational::parse(s).map_err(|e| anyhow!("{e}"));
            vec![(r(a)?, r(b)?)]
        }
        (None, None, Some(g)) => {
            let (xs, ys) = parse_grid(g)?;
            xs.iter()
                .flat_map(|a| ys.iter().map(move |b| (a.clone(), b.clone())))
                .collect()
        }
        _ => bail!("scan needs --a and --b, or --grid"),
    };
    let reports = points
        .iter()
        .map(|(a, b)| quadratic_scan(a, b, args.degree))
        .collect::<Result<Vec<_>, _>>()?;
    if let Some(path) = &args.csv {
        let mut csv = String::from(
            "a,b,degree,coeff_32211,sign_32211,binding_shape,binding_coeff,boundary_b,b_vs_boundary,hooks\n",
        );
        for r in &reports {
            csv.push_str(&csv_row(r));
            csv.push('\n');
        }
        fs::write(path, csv).with_context(|| format!("writing {}", path.display()))?;
    }
    if let [r] = reports.as_slice() {
        return print_report(r);
    }
    for r in &reports {
        let binding = match &r.binding {
            Some((l, c)) => format!("s{}:{}", l.bracketed(), to_text(c)),
            None => "none".into(),
        };
        let s32211 = r
            .coeff_32211
            .as_ref()
            .map(to_text)
            .unwrap_or_else(|| "-".into());
        outln!(
            "a={} b={} s32211={} binding={} boundary={}",
            to_text(&r.a),
            to_text(&r.b),
            s32211,
            binding,
            side(r.boundary)
        )?;
    }
    Ok(())
}
