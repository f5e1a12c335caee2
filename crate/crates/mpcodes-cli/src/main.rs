//! Command-line front end: bounds tables, code construction, distance
//! queries, codebook verification, decoding, and channel simulation.
//!
//! Exit status: 0 on success, 1 on a detected failure (a decode that
//! reports failure, a verification that does not hold), 2 on usage
//! errors.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use mpcodes::bounds::{
    bounds_report, ceil_rational, classical_uppers, clt_upper, egf_upper, singleton_upper,
};
use mpcodes::channel::{simulate, ErrorModel, SimDecoder};
use mpcodes::constructions::{
    check_almost_disjoint, design_code, greedy_mpc_hamming, greedy_perm_ulam_code, grouping_code,
    interleaved_code, layered_hamming_code, semilatin_code, ComponentSpec, GroupingParams,
};
use mpcodes::decode::{decode_grouping, decode_intersection, decode_min_distance, DecodeResult};
use mpcodes::designs::{khare_rbibd, make_semi_latin};
use mpcodes::format::{
    codebook_from_json, codebook_to_json, grouping_construction, grouping_params_from,
    ConstructionSpec,
};
use mpcodes::metrics::{code_min_distance, hamming, hamming_r, ulam, ulam_r, ulam_r_oracle};
use mpcodes::perm::{OrderedSetPartition, DEFAULT_ENUM_CAP};
use mpcodes::{Codebook, Error, Metric, Permutation};

#[derive(Parser)]
#[command(
    name = "mpcodes",
    version,
    about = "Multipermutation codes in the Ulam and Hamming metrics"
)]
struct Cli {
    /// Cap on exhaustive enumerations (items).
    #[arg(long, global = true, default_value_t = DEFAULT_ENUM_CAP)]
    cap: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the upper-bound grid for 3-regular codes of length 9.
    Table1,
    /// CSV sweep of all bounds over the distance range.
    Bounds(BoundsArgs),
    /// Distance between two permutations under a chosen metric.
    Distance(DistanceArgs),
    /// Build a codebook and write it as a JSON document.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// Reload a codebook file and re-verify its claimed parameters.
    Verify(VerifyArgs),
    /// Decode a received permutation against a codebook file.
    Decode(DecodeArgs),
    /// Monte Carlo decoding campaign; emits one CSV row.
    Simulate(SimulateArgs),
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    r: u32,
    /// First distance of the sweep.
    #[arg(long, default_value_t = 1)]
    d_min: u32,
    /// Last distance of the sweep (defaults to n).
    #[arg(long)]
    d_max: Option<u32>,
}

#[derive(Args)]
struct DistanceArgs {
    /// One of: hamming, ulam, hamming-r, ulam-r.
    #[arg(long)]
    metric: String,
    /// Regularity for the r-metrics.
    #[arg(long, default_value_t = 1)]
    r: u32,
    /// Use the exhaustive oracle instead of the dynamic program
    /// (ulam-r only).
    #[arg(long)]
    oracle: bool,
    a: String,
    b: String,
}

#[derive(Subcommand)]
enum ConstructKind {
    /// Grouping code: groups of 2t+1 labels travel together.
    Grouping {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        t: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// Rows of a generated semi-Latin square.
    SemiLatin {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// All class orderings of the diagonal resolvable design on r².
    Design {
        /// Block size; an odd prime.
        #[arg(long)]
        r: u32,
        #[arg(long, default_value_t = 2)]
        k: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// Interleave r greedy permutation codes over consecutive parts.
    Interleaved {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// Layered construction over greedy Hamming-metric level codes.
    Layered {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        d: u32,
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// Greedy maximal Hamming-metric multipermutation code.
    GreedyHamming {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// Greedy maximal permutation code under the plain Ulam distance.
    GreedyUlam {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    codebook: PathBuf,
    /// Re-verify the Ulam distance with the exhaustive oracle.
    #[arg(long)]
    oracle: bool,
    /// Also run the almost-disjoint certificate at this t.
    #[arg(long)]
    t: Option<u32>,
}

#[derive(Args)]
struct DecodeArgs {
    #[arg(long)]
    codebook: PathBuf,
    /// Received permutation, e.g. 3,2,4,1.
    #[arg(long)]
    received: String,
    /// One of: intersection, grouping, min-distance.
    #[arg(long)]
    decoder: String,
    #[arg(long)]
    t: u32,
}

#[derive(Args)]
struct SimulateArgs {
    #[arg(long)]
    codebook: PathBuf,
    /// One of: intersection, grouping, min-distance.
    #[arg(long)]
    decoder: String,
    /// One of: translocation, rank-displacement.
    #[arg(long)]
    errors: String,
    #[arg(long)]
    t: u32,
    #[arg(long)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let cap = cli.cap;
    match cli.command {
        Command::Table1 => {
            print!("{}", render_table1()?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Bounds(args) => {
            let d_max = args.d_max.unwrap_or(args.n);
            print!("{}", render_bounds_csv(args.n, args.r, args.d_min, d_max)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Distance(args) => {
            let a: Permutation = args.a.parse()?;
            let b: Permutation = args.b.parse()?;
            let value = match args.metric.as_str() {
                "hamming" => hamming(&a, &b)?,
                "ulam" => ulam(&a, &b)?,
                "hamming-r" => hamming_r(&a, &b, args.r)?,
                "ulam-r" if args.oracle => ulam_r_oracle(&a, &b, args.r, cap)?.value,
                "ulam-r" => ulam_r(&a, &b, args.r)?,
                other => {
                    return Err(Error::ParamInvalid(format!(
                        "unknown metric {other:?}; use hamming, ulam, hamming-r, or ulam-r"
                    )))
                }
            };
            println!("{value}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Construct { kind } => {
            let (code, construction, out) = build(kind, cap)?;
            let text = codebook_to_json(&code, &construction);
            std::fs::write(&out, text).map_err(|e| Error::Format(e.to_string()))?;
            println!(
                "wrote {} (n={}, r={}, metric={}, claimed distance {}, {} words)",
                out.display(),
                code.n,
                code.r,
                code.metric,
                code.claimed_distance,
                code.len()
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => {
            let text = std::fs::read_to_string(&args.codebook)
                .map_err(|e| Error::Format(e.to_string()))?;
            let (code, _) = codebook_from_json(&text)?;
            let mut use_oracle = args.oracle;
            if use_oracle && !mpcodes::metrics::ulam_r_oracle_feasible(code.n, code.r, cap) {
                println!("oracle scan exceeds the cap of {cap}; using the dynamic program");
                use_oracle = false;
            }
            let distance = code_min_distance(&code, code.metric, use_oracle, cap)?;
            let mut pass = distance >= code.claimed_distance;
            println!(
                "codebook: n={} r={} metric={} words={}",
                code.n,
                code.r,
                code.metric,
                code.len()
            );
            println!(
                "minimum distance: {} (claimed {}) [{}]",
                distance,
                code.claimed_distance,
                if pass { "ok" } else { "VIOLATED" }
            );
            if let Some(t) = args.t {
                let report = check_almost_disjoint(&code, t)?;
                println!(
                    "almost-disjoint at t={t}: {}{}",
                    if report.pass { "pass" } else { "fail" },
                    report
                        .violation
                        .as_deref()
                        .map(|v| format!(" ({v})"))
                        .unwrap_or_default()
                );
                pass &= report.pass;
            }
            Ok(if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Decode(args) => {
            let text = std::fs::read_to_string(&args.codebook)
                .map_err(|e| Error::Format(e.to_string()))?;
            let (code, construction) = codebook_from_json(&text)?;
            let omega: Permutation = args.received.parse()?;
            let result =
                dispatch_decoder(&args.decoder, &code, &construction, &omega, args.t, cap)?;
            match &result.word {
                Some(word) => {
                    println!("decoded: {word}");
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    println!(
                        "detected failure (candidate counts per rank: {:?})",
                        result.diagnostics
                    );
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Simulate(args) => {
            let text = std::fs::read_to_string(&args.codebook)
                .map_err(|e| Error::Format(e.to_string()))?;
            let (code, construction) = codebook_from_json(&text)?;
            let decoder = match args.decoder.as_str() {
                "intersection" => SimDecoder::Intersection,
                "grouping" => SimDecoder::Grouping(grouping_params_from(&construction)?),
                "min-distance" => SimDecoder::MinDistance(code.metric),
                other => {
                    return Err(Error::ParamInvalid(format!(
                        "unknown decoder {other:?}; use intersection, grouping, or min-distance"
                    )))
                }
            };
            let model: ErrorModel = args.errors.parse()?;
            let stats = simulate(&code, &decoder, model, args.t, args.trials, args.seed)?;
            println!("trials,correct,detected,miscorrected,rate");
            println!(
                "{},{},{},{},{}",
                stats.trials,
                stats.decoded_correct,
                stats.detected_failures,
                stats.miscorrections,
                stats.success_rate()
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn build(kind: ConstructKind, cap: u64) -> Result<(Codebook, ConstructionSpec, PathBuf), Error> {
    match kind {
        ConstructKind::Grouping { n, r, t, out } => {
            let params = GroupingParams::consecutive(n, r, t)?;
            let code = grouping_code(&params, cap)?;
            Ok((code, grouping_construction(&params), out))
        }
        ConstructKind::SemiLatin { n, r, out } => {
            let square = make_semi_latin(n, r)?;
            let code = semilatin_code(&square)?;
            let construction =
                ConstructionSpec::new("semi-latin", serde_json::json!({"n": n, "r": r}));
            Ok((code, construction, out))
        }
        ConstructKind::Design { r, k, d, out } => {
            let design = khare_rbibd(r)?;
            let code = design_code(&design, k, d, cap)?;
            let construction = ConstructionSpec::new(
                "design",
                serde_json::json!({
                    "k": k,
                    "d": d,
                    "design": serde_json::from_str::<serde_json::Value>(
                        &mpcodes::format::design_to_json(&design)
                    )
                    .expect("valid json"),
                }),
            );
            Ok((code, construction, out))
        }
        ConstructKind::Interleaved { n, r, d, out } => {
            if r == 0 || n % r != 0 {
                return Err(Error::NonDivisible { n, r });
            }
            let part_len = n / r;
            let parts: Vec<Vec<u32>> = (0..r)
                .map(|i| (i * part_len + 1..=(i + 1) * part_len).collect())
                .collect();
            let codes = parts
                .iter()
                .map(|part| {
                    let base = greedy_perm_ulam_code(part_len, d, cap)?;
                    Ok(base
                        .into_iter()
                        .map(|p| {
                            let shifted: Vec<u32> =
                                p.elements().iter().map(|e| e + part[0] - 1).collect();
                            Permutation::new(shifted).expect("labels distinct")
                        })
                        .collect())
                })
                .collect::<Result<Vec<_>, Error>>()?;
            let spec = ComponentSpec::new(parts, codes, d)?;
            let code = interleaved_code(&spec)?;
            let construction = ConstructionSpec::new(
                "interleaved",
                serde_json::json!({"n": n, "r": r, "d": d, "components": "greedy-ulam"}),
            );
            Ok((code, construction, out))
        }
        ConstructKind::Layered { n, r, d, k, out } => {
            let code = layered_hamming_code(n, r, d, k, |m| greedy_mpc_hamming(m, r, d, cap))?;
            let construction = ConstructionSpec::new(
                "layered",
                serde_json::json!({"n": n, "r": r, "d": d, "k": k, "levels": "greedy-hamming"}),
            );
            Ok((code, construction, out))
        }
        ConstructKind::GreedyHamming { n, r, d, out } => {
            let code = greedy_mpc_hamming(n, r, d, cap)?;
            let construction = ConstructionSpec::new(
                "greedy-hamming",
                serde_json::json!({"n": n, "r": r, "d": d}),
            );
            Ok((code, construction, out))
        }
        ConstructKind::GreedyUlam { m, d, out } => {
            let words = greedy_perm_ulam_code(m, d, cap)?
                .iter()
                .map(|p| OrderedSetPartition::from_permutation(p, 1))
                .collect::<Result<Vec<_>, Error>>()?;
            let code = Codebook::new_explicit(m, 1, d, Metric::UlamR, words)?;
            let construction =
                ConstructionSpec::new("greedy-ulam", serde_json::json!({"m": m, "d": d}));
            Ok((code, construction, out))
        }
    }
}

fn dispatch_decoder(
    name: &str,
    code: &Codebook,
    construction: &ConstructionSpec,
    omega: &Permutation,
    t: u32,
    cap: u64,
) -> Result<DecodeResult, Error> {
    match name {
        "intersection" => decode_intersection(code, omega, t),
        "grouping" => {
            let params = grouping_params_from(construction)?;
            decode_grouping(&params, omega)
        }
        "min-distance" => decode_min_distance(code, omega, code.metric, t, cap),
        other => Err(Error::ParamInvalid(format!(
            "unknown decoder {other:?}; use intersection, grouping, or min-distance"
        ))),
    }
}

fn render_table1() -> Result<String, Error> {
    let mut out = String::new();
    let ds: Vec<u32> = (1..=9).collect();
    let mut header = String::from("bound");
    for d in &ds {
        write!(header, ",d={d}").unwrap();
    }
    writeln!(out, "{header}").unwrap();

    let mut luo_row = String::from("luo");
    let mut huc_row = String::from("huczynska");
    let mut singleton_row = String::from("singleton");
    let mut clt_row = String::from("clt");
    let mut egf_row = String::from("egf");
    for &d in &ds {
        let classical = classical_uppers(9, 3, d)?;
        match classical.luo {
            Some(l) => write!(luo_row, ",{}", rational_text(&l)).unwrap(),
            None => write!(luo_row, ",-").unwrap(),
        }
        write!(huc_row, ",{}", classical.huczynska).unwrap();
        write!(singleton_row, ",{}", singleton_upper(9, 3, d)?).unwrap();
        write!(clt_row, ",{}", clt_upper(9, 3, d)?.value.floor() as i64).unwrap();
        write!(egf_row, ",{}", egf_upper(9, 3, d)?).unwrap();
    }
    for row in [luo_row, huc_row, singleton_row, clt_row, egf_row] {
        writeln!(out, "{row}").unwrap();
    }
    Ok(out)
}

fn render_bounds_csv(n: u32, r: u32, d_min: u32, d_max: u32) -> Result<String, Error> {
    if d_min == 0 || d_min > d_max || d_max > n {
        return Err(Error::ParamInvalid(format!(
            "distance range {d_min}..={d_max} is not within 1..={n}"
        )));
    }
    let mut out = String::new();
    writeln!(
        out,
        "d,luo,huczynska,singleton,egf,clt,clt_valid,gv_hamming,gv_hamming_ceil,gv_ulam,gv_ulam_ceil"
    )
    .unwrap();
    for d in d_min..=d_max {
        let report = bounds_report(n, r, d)?;
        writeln!(
            out,
            "{},{},{},{},{},{:.3},{},{},{},{},{}",
            d,
            report
                .luo
                .as_ref()
                .map(rational_text)
                .unwrap_or_else(|| "-".into()),
            report.huczynska,
            report.singleton,
            report.egf,
            report.clt.value,
            report.clt.valid,
            rational_text(&report.gv_hamming),
            ceil_rational(&report.gv_hamming),
            rational_text(&report.gv_ulam),
            ceil_rational(&report.gv_ulam),
        )
        .unwrap();
    }
    Ok(out)
}

fn rational_text(x: &num_rational::BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}
