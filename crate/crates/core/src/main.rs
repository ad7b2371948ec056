use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;
use num_rational::BigRational;

use bicolored::arith::decimal_render;
use bicolored::asymptotic::verify_h;
use bicolored::bounds::{ratio_table, BoundReport};
use bicolored::dirichlet::{twisted_product, CyclicCharacter};
use bicolored::enumeration::{
    count_exact, count_naive, free_fraction_lower_bound, free_fraction_lower_bound_raw,
    orbit_census,
};
use bicolored::limits::HARD_MAX_PQ;
use bicolored::record::{Format, OutputRecord};
use bicolored::verify::{self, Suite, VerifyConfig};
use bicolored::{row, Error, Limits, Permutation, QSqrt2, StirlingTable};

/// Exact counts and bounds for unlabelled bicolored graphs.
#[derive(Parser, Debug)]
#[command(name = "bicolored", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Output format: json, csv, tsv or plain.
    #[arg(long, global = true, default_value = "plain")]
    format: Format,
    /// Largest p*q for the subset census.
    #[arg(long, global = true, default_value_t = Limits::default().max_pq)]
    max_pq: usize,
    /// Largest p or q for exact counting and the bounds.
    #[arg(long, global = true, default_value_t = Limits::default().max_degree)]
    max_degree: usize,
    /// Seed for the randomized property checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Decimal places for rendered decimals.
    #[arg(long, global = true, default_value_t = 6)]
    places: u32,
}

#[derive(Subcommand, Debug)]
#[allow(clippy::large_enum_variant)]
enum Command {
    /// |B_u(p,q)| by the class-sum formula.
    Count {
        p: usize,
        q: usize,
        /// Cross-check against an independent method.
        #[arg(long, value_parser = ["naive", "census"])]
        oracle: Option<String>,
    },
    /// Character bound, binomial bounds and, when feasible, the exact count.
    Bound { p: usize, q: usize },
    /// Ratio of the binomial upper bound to the character bound over a grid.
    Table {
        #[arg(long, default_value_t = 3)]
        p_min: usize,
        #[arg(long, default_value_t = 48)]
        p_max: usize,
        #[arg(long, default_value_t = 3)]
        p_step: usize,
        #[arg(long, default_value_t = 0)]
        k_min: usize,
        #[arg(long, default_value_t = 4)]
        k_max: usize,
        /// Add exact Q(sqrt2) columns next to the decimals.
        #[arg(long)]
        exact: bool,
    },
    /// Fraction of subsets in free orbits, and its lower bound.
    Orbits { p: usize, q: usize },
    /// A cyclic character on S_p with value z on transpositions.
    Char {
        p: usize,
        /// Base in Q(sqrt2), e.g. 1/2, sqrt2, 1+1*sqrt2.
        #[arg(allow_hyphen_values = true)]
        z: QSqrt2,
        /// Evaluate on this permutation, in cycle notation.
        #[arg(long)]
        sigma: Option<String>,
        /// Degree q of a second character for the twisted product.
        #[arg(long, requires = "z_prime")]
        q: Option<usize>,
        /// Base of the second character.
        #[arg(long, requires = "q", allow_hyphen_values = true)]
        z_prime: Option<QSqrt2>,
    },
    /// Where max_p a_{h,p} sits for each h, and the least cutoff that works.
    Hscan {
        #[arg(long, default_value_t = 0)]
        k: u64,
        #[arg(long, default_value_t = 64)]
        h_max: u64,
        #[arg(long, default_value_t = 512)]
        p_max: u64,
    },
    /// Run property suites; exits 1 if any property fails.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        /// Overwrite one Stirling number before running, as N:K:VALUE.
        #[arg(long)]
        stirling_override: Vec<String>,
    },
}

enum Failure {
    Usage(String),
    Cap(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } => Failure::Cap(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn rat(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        r.to_string()
    }
}

fn dec_rat(r: &BigRational, places: u32) -> String {
    decimal_render(&QSqrt2::rational(r.clone()), places)
}

fn limits(g: &Global) -> Result<Limits, Failure> {
    if g.max_pq > HARD_MAX_PQ {
        return Err(Failure::Usage(format!(
            "--max-pq {} is above the supported maximum {HARD_MAX_PQ}",
            g.max_pq
        )));
    }
    Ok(Limits {
        max_degree: g.max_degree,
        max_pq: g.max_pq,
        ..Limits::default()
    })
}

fn run(cli: Cli) -> Result<(OutputRecord, bool), Failure> {
    let g = &cli.global;
    let l = limits(g)?;
    let places = g.places;
    let mut ok = true;
    let rec = match cli.command {
        Command::Count { p, q, oracle } => {
            let count = count_exact(p, q, &l)?;
            let mut rec = OutputRecord::new("count").param("p", p).param("q", q);
            let mut r = row! { "count" => count };
            if let Some(o) = oracle {
                let other: BigUint = match o.as_str() {
                    "naive" => count_naive(p, q, &l)?,
                    _ => orbit_census(p, q, &l)?.orbit_count,
                };
                let agree = other == count;
                ok = agree;
                r.insert("oracle".into(), o);
                r.insert("oracle_count".into(), other.to_string());
                r.insert("agreement".into(), agree.to_string());
            }
            rec.push_row(r);
            rec
        }
        Command::Bound { p, q } => {
            let b = BoundReport::new(p, q, &l)?;
            let mut rec = OutputRecord::new("bound")
                .param("p", p)
                .param("q", q)
                .param("places", places);
            let flag = |v: Option<bool>| v.map_or("unknown".to_string(), |b| b.to_string());
            rec.push_row(row! {
                "theorem_bound" => b.theorem_bound,
                "theorem_bound_decimal" => decimal_render(&b.theorem_bound, places),
                "ao_lower" => rat(&b.ao_lower),
                "ao_lower_decimal" => dec_rat(&b.ao_lower, places),
                "ao_upper" => rat(&b.ao_upper),
                "ao_upper_decimal" => dec_rat(&b.ao_upper, places),
                "exact" => b.exact.as_ref().map_or("unavailable".to_string(), ToString::to_string),
                "theorem_bound_holds" => flag(b.theorem_bound_holds()),
                "ao_sandwich_holds" => flag(b.ao_sandwich_holds()),
            });
            rec
        }
        Command::Table {
            p_min,
            p_max,
            p_step,
            k_min,
            k_max,
            exact,
        } => {
            if p_step == 0 || p_min == 0 || p_min > p_max || k_min > k_max {
                return Err(Failure::Usage(
                    "need 1 <= p-min <= p-max, p-step >= 1 and k-min <= k-max".into(),
                ));
            }
            let ps: Vec<usize> = (p_min..=p_max).step_by(p_step).collect();
            let ks: Vec<usize> = (k_min..=k_max).collect();
            let table = ratio_table(&ps, &ks, places, &l)?;
            let with_exact = exact || g.format == Format::Json;
            let mut rec = OutputRecord::new("table")
                .param("p", format!("{p_min}..={p_max} step {p_step}"))
                .param("k", format!("{k_min}..={k_max}"))
                .param("places", places)
                .param("value", "binomial upper bound / character bound");
            for row_cells in &table.rows {
                let mut r = row! { "p" => format!("p={}", row_cells[0].p) };
                for c in row_cells {
                    r.insert(format!("k={}", c.k), c.decimal.clone());
                }
                if with_exact {
                    for c in row_cells {
                        r.insert(format!("exact k={}", c.k), c.exact.to_string());
                    }
                }
                rec.push_row(r);
            }
            rec
        }
        Command::Orbits { p, q } => {
            let mut rec = OutputRecord::new("orbits")
                .param("p", p)
                .param("q", q)
                .param("places", places);
            let lower = free_fraction_lower_bound(p, q, &l)?;
            let raw = free_fraction_lower_bound_raw(p, q, &l)?;
            let mut r = row! {};
            match orbit_census(p, q, &l) {
                Ok(c) => {
                    let f = BigRational::new(c.free_element_count.clone().into(), c.total.clone().into());
                    r.insert("census".into(), "complete".into());
                    r.insert("f".into(), rat(&f));
                    r.insert("f_decimal".into(), dec_rat(&f, places));
                    r.insert("orbit_count".into(), c.orbit_count.to_string());
                    r.insert("free_orbit_count".into(), c.free_orbit_count().to_string());
                }
                Err(Error::CapExceeded { .. }) => {
                    r.insert("census".into(), "cap_exceeded".into());
                }
                Err(e) => return Err(e.into()),
            }
            r.insert("lower_bound".into(), rat(&lower));
            r.insert("lower_bound_decimal".into(), dec_rat(&lower, places));
            r.insert("lower_bound_unclamped".into(), rat(&raw));
            rec.push_row(r);
            rec
        }
        Command::Char {
            p,
            z,
            sigma,
            q,
            z_prime,
        } => {
            let chi = CyclicCharacter::new(p, z.clone())?;
            let mut rec = OutputRecord::new("char")
                .param("p", p)
                .param("z", &z)
                .param("places", places);
            let avg = chi.average();
            let table = chi.to_table();
            let mut r = row! {
                "average" => &avg,
                "average_decimal" => decimal_render(&avg, places),
                "cyclic" => table.is_cyclic(),
            };
            for (i, v) in table.values().iter().enumerate() {
                r.insert(format!("value_on_{}_cycle", i + 1), v.to_string());
            }
            if let Some(s) = sigma {
                rec = rec.param("sigma", &s);
                let perm = Permutation::parse_cycles(p, &s)?;
                r.insert("value_on_sigma".into(), chi.eval(&perm)?.to_string());
            }
            if let (Some(q), Some(zp)) = (q, z_prime) {
                rec = rec.param("q", q).param("z_prime", &zp);
                let tp = twisted_product(p, &z, q, &zp)?;
                r.insert("twisted_product_decimal".into(), decimal_render(&tp, places));
                r.insert("twisted_product".into(), tp.to_string());
            }
            rec.push_row(r);
            rec
        }
        Command::Hscan { k, h_max, p_max } => {
            let scan = verify_h(k, h_max, p_max);
            let mut rec = OutputRecord::new("hscan")
                .param("k", k)
                .param("h_max", h_max)
                .param("p_max", p_max)
                .param("minimal_cutoff", scan.minimal_cutoff());
            for r in &scan.rows {
                rec.push_row(row! {
                    "h" => r.h,
                    "argmax_p" => r.argmax_p,
                    "log2_max" => format!("{:.9}", r.max_log2),
                    "log2_first" => format!("{:.9}", r.first_log2),
                    "log2_margin" => format!("{:.9}", r.margin_log2),
                    "max_at_first" => r.attained_at_first,
                });
            }
            rec
        }
        Command::Verify {
            suite,
            stirling_override,
        } => {
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse()?]
            };
            let mut cfg = VerifyConfig::new(g.seed);
            cfg.limits = l;
            for o in &stirling_override {
                apply_override(&mut cfg.stirling, o)?;
            }
            let mut rec = OutputRecord::new("verify")
                .param("suite", &suite)
                .param("seed", g.seed);
            if !stirling_override.is_empty() {
                rec = rec.param("stirling_override", stirling_override.join(" "));
            }
            for res in verify::run(&suites, &cfg) {
                ok &= res.passed;
                rec.push_row(row! {
                    "status" => if res.passed { "PASS" } else { "FAIL" },
                    "suite" => res.suite,
                    "property" => res.name,
                    "cases" => res.cases,
                    "detail" => res.detail,
                });
            }
            rec
        }
    };
    Ok((rec, ok))
}

fn apply_override(table: &mut StirlingTable, arg: &str) -> Result<(), Failure> {
    let bad = || Failure::Usage(format!("bad --stirling-override {arg:?}, expected N:K:VALUE"));
    let parts: Vec<&str> = arg.split(':').collect();
    let [n, k, v] = parts.as_slice() else {
        return Err(bad());
    };
    let n: usize = n.parse().map_err(|_| bad())?;
    let k: usize = k.parse().map_err(|_| bad())?;
    let v: BigUint = v.parse().map_err(|_| bad())?;
    if n > table.max_n() || k > n {
        return Err(bad());
    }
    table.set(n, k, v);
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.global.format;
    match run(cli) {
        Ok((rec, ok)) => match rec.render(format) {
            Ok(text) => {
                let mut out = std::io::stdout().lock();
                if let Err(e) = out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
                    if e.kind() != std::io::ErrorKind::BrokenPipe {
                        eprintln!("error: {e}");
                        return ExitCode::from(2);
                    }
                }
                if ok {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                }
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
