use anyhow::{bail, Result};
use clap::{Args, ValueEnum};

use stabchar::embeddings::{
    check_oracle, check_ring_hom, parity_coefficient, verify_prop_constant, verify_prop_linear,
    EmbeddingTable, SkewEmbedding,
};
use stabchar::kr::{eq_quad_sweep, kr_sweep};
use stabchar::partition::display_order;
use stabchar::rational::{seeded_rng, to_text};
use stabchar::series::Series;
use stabchar::Partition;

use crate::parse_series;

#[derive(Clone, Copy, ValueEnum)]
pub enum Prop {
    /// m_{(k),(1^{k-d})} and its two-row companion on random tables.
    Linear,
    /// m_{(k^d),((k-1)^d)} = k m_{d,0} - (k-1) m_{d+1,1} on random tables.
    Constant,
    /// m_{(2k+1,1),∅} = a_{2k} - a_{2k+2} for even series.
    Parity,
    /// Skewing and table constructions of f_p agree.
    Oracle,
    /// f_p(s_μ s_ν) = f_p(s_μ) f_p(s_ν).
    Ringhom,
    /// W(m^l)^2 = W((m+1)^l) W((m-1)^l) + W(m^(l-1)) W(m^(l+1)).
    Eqquad,
    /// W(m^l) is the domino closure of the l x m rectangle.
    Kr,
}

#[derive(Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    prop: Prop,
    /// Largest rectangle side for kr (default 5) and eqquad (default 4).
    #[arg(long)]
    max: Option<usize>,
    /// Largest |λ| for oracle (default 8) and |μ|, |ν| for ringhom (default 4).
    #[arg(long)]
    max_size: Option<usize>,
    /// Only this diagonal depth for linear and constant (default 1 to 3).
    #[arg(long)]
    d: Option<usize>,
    /// Largest k for linear and constant (default 9); the exact k for parity.
    #[arg(long)]
    k: Option<usize>,
    /// Random tables or series per case.
    #[arg(long, default_value_t = 5)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Series to test instead of the built-in or random ones.
    #[arg(long)]
    series: Option<String>,
}

struct Report {
    passed: usize,
    failed: usize,
}

impl Report {
    fn line(&mut self, ok: bool, text: String) -> Result<()> {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
        outln!("{} {text}", if ok { "PASS" } else { "FAIL" })
    }
}

fn default_series(order: usize, seed: u64) -> Vec<(String, Series)> {
    let mut rng = seeded_rng(seed);
    let random = Series::random_polynomial(&mut rng, 2, false);
    vec![
        ("one".into(), Series::one()),
        ("geom2".into(), Series::geom2(order)),
        ("geom".into(), Series::geom(order)),
        (
            "1,1".into(),
            Series::parse("1,1", order).expect("valid series"),
        ),
        (random.to_string(), random),
    ]
}

fn chosen_series(
    args: &VerifyArgs,
    order: usize,
    fallback: Vec<(String, Series)>,
) -> Result<Vec<(String, Series)>> {
    Ok(match &args.series {
        Some(s) => vec![(s.clone(), parse_series(s, order)?)],
        None => fallback,
    })
}

pub fn run(args: VerifyArgs) -> Result<bool> {
    outln!("seed {}", args.seed)?;
    let mut r = Report {
        passed: 0,
        failed: 0,
    };
    let mut rng = seeded_rng(args.seed);
    match args.prop {
        Prop::Linear | Prop::Constant => {
            let ds: Vec<usize> = match args.d {
                Some(d) => vec![d],
                None => vec![1, 2, 3],
            };
            let kmax = args.k.unwrap_or(9);
            for d in ds {
                for k in d + 2..=kmax {
                    for trial in 0..args.trials {
                        let t = EmbeddingTable::random_constant_below(d, k + d, &mut rng);
                        if matches!(args.prop, Prop::Linear) {
                            let v = verify_prop_linear(&t, d, k)?;
                            r.line(
                                v.equal,
                                format!(
                                    "linear d={d} k={k} trial={trial} lhs1={} rhs1={} lhs2={}",
                                    to_text(&v.lhs1),
                                    to_text(&v.rhs1),
                                    to_text(&v.lhs2)
                                ),
                            )?;
                        } else {
                            let v = verify_prop_constant(&t, d, k)?;
                            r.line(
                                v.equal,
                                format!(
                                    "constant d={d} k={k} trial={trial} lhs={} rhs={}",
                                    to_text(&v.lhs),
                                    to_text(&v.rhs)
                                ),
                            )?;
                        }
                    }
                }
            }
        }
        Prop::Parity => {
            let ks: Vec<usize> = match args.k {
                Some(k) => vec![k],
                None => (0..=3).collect(),
            };
            let order = 2 * ks.iter().max().copied().unwrap_or(0) + 2;
            let cases = match &args.series {
                Some(s) => vec![(s.clone(), parse_series(s, order)?)],
                None => (0..args.trials)
                    .map(|_| {
                        let p = Series::random_polynomial(&mut rng, order, true);
                        (p.to_string(), p)
                    })
                    .collect(),
            };
            for (name, p) in cases {
                if !p.is_even() {
                    bail!("series {name} has a nonzero odd coefficient");
                }
                for &k in &ks {
                    let v = parity_coefficient(&p, k)?;
                    r.line(
                        v.equal,
                        format!(
                            "parity series={name} k={k} computed={} expected={}",
                            to_text(&v.computed),
                            to_text(&v.expected)
                        ),
                    )?;
                }
            }
        }
        Prop::Oracle => {
            let n = args.max_size.unwrap_or(8);
            for (name, p) in chosen_series(&args, n, default_series(n, args.seed))? {
                let skew = SkewEmbedding::new(&p, n)?;
                let table = EmbeddingTable::from_series(&p, n)?;
                for size in 0..=n {
                    let shapes = Partition::all_of(size);
                    let mut bad = Vec::new();
                    for l in &shapes {
                        if !check_oracle(&skew, &table, l)? {
                            bad.push(l.to_text());
                        }
                    }
                    r.line(
                        bad.is_empty(),
                        format!(
                            "oracle series={name} size={size} shapes={} mismatched=[{}]",
                            shapes.len(),
                            bad.join(" ")
                        ),
                    )?;
                }
            }
        }
        Prop::Ringhom => {
            let n = args.max_size.unwrap_or(4);
            let fallback = vec![
                ("one".into(), Series::one()),
                ("geom2".into(), Series::geom2(2 * n)),
            ];
            for (name, p) in chosen_series(&args, 2 * n, fallback)? {
                let skew = SkewEmbedding::new(&p, 2 * n)?;
                for a in 0..=n {
                    for b in a..=n {
                        let mut bad = Vec::new();
                        for mu in Partition::all_of(a) {
                            for nu in Partition::all_of(b) {
                                if !check_ring_hom(&skew, &mu, &nu)? {
                                    bad.push(format!("{}*{}", mu.to_text(), nu.to_text()));
                                }
                            }
                        }
                        r.line(
                            bad.is_empty(),
                            format!(
                                "ringhom series={name} sizes={a},{b} mismatched=[{}]",
                                bad.join(" ")
                            ),
                        )?;
                    }
                }
            }
        }
        Prop::Eqquad => {
            for v in eq_quad_sweep(args.max.unwrap_or(4))? {
                r.line(
                    v.holds,
                    format!(
                        "eqquad family={} l={} m={} terms={}",
                        v.family,
                        v.ell,
                        v.m,
                        v.lhs.len()
                    ),
                )?;
            }
        }
        Prop::Kr => {
            for v in kr_sweep(args.max.unwrap_or(5))? {
                let mut shapes: Vec<&Partition> = v.rhs.iter().collect();
                shapes.sort_by(|x, y| display_order(x, y));
                let shapes: Vec<String> = shapes.into_iter().map(Partition::to_text).collect();
                r.line(
                    v.matches,
                    format!(
                        "kr family={} l={} m={} shapes=[{}]",
                        v.family,
                        v.ell,
                        v.m,
                        shapes.join(" ")
                    ),
                )?;
            }
        }
    }
    outln!("summary passed={} failed={}", r.passed, r.failed)?;
    Ok(r.failed == 0)
}
