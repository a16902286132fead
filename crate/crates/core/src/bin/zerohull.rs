use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use zerohull::batch::{expand_inputs, run_batch};
use zerohull::construct::{facet_certificate, find_containing_simplex, good_vertex};
use zerohull::family::{
    fast_maximal_avoiding, fast_minimal_containing, oracle_maximal_avoiding,
    oracle_minimal_containing, Enumerator, Route, DEFAULT_ORACLE_CAP,
};
use zerohull::generate::{generate, GenerateOptions};
use zerohull::io::{
    bigint_to_json, families_to_json, hyperplane_family_to_json, instance_to_json, read_instance,
    report_to_json, subset_family_to_json, write_json,
};
use zerohull::verify::verify;
use zerohull::{Hyperplane, Result};

#[derive(Parser)]
#[command(name = "zerohull")]
#[command(about = "Minimal z-containing and maximal z-avoiding subsets of point sets")]
#[command(version)]
struct Cli {
    /// Largest |S| the brute-force subset scan accepts
    #[arg(long, global = true, default_value_t = DEFAULT_ORACLE_CAP)]
    oracle_cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    #[value(name = "C")]
    C,
    #[value(name = "A")]
    A,
    #[value(name = "Smpl")]
    Smpl,
    #[value(name = "F")]
    F,
    #[value(name = "H")]
    H,
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    Simplex,
    FacetCert,
    GoodVertex,
}

#[derive(Subcommand)]
enum Command {
    /// Position analysis and theorem verdicts
    Check {
        file: PathBuf,
        /// Print the full report (families and counts too)
        #[arg(long)]
        full: bool,
    },
    /// Print families and counts
    Enumerate {
        file: PathBuf,
        /// Use the brute-force subset scan even in general position
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum)]
        family: Option<FamilyName>,
    },
    /// Run a certificate-producing construction
    Construct {
        file: PathBuf,
        #[arg(long, value_enum)]
        op: Construction,
        /// Point indices, comma separated (P for simplex, A for facet-cert)
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<usize>>,
        /// Point outside A for facet-cert
        #[arg(long)]
        s: Option<usize>,
    },
    /// Generate a seeded random instance with z at the origin
    Gen {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        /// Resample until z is interior to conv(S)
        #[arg(long)]
        containing: bool,
        /// Coordinate bound (default max(100, n))
        #[arg(long)]
        bound: Option<i64>,
        /// Skip the general-position rejection step
        #[arg(long)]
        allow_degenerate: bool,
        #[arg(short = 'o', long)]
        output: PathBuf,
    },
    /// Verify many instance files (directories expand to their *.json files)
    Batch {
        inputs: Vec<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(short = 'o', long)]
        output: PathBuf,
    },
    /// Compare the fast paths against the subset scan
    OracleCompare { file: PathBuf },
}

fn print(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json values serialize"));
}

fn hyperplane_json(h: &Hyperplane) -> Value {
    json!({
        "normal": h.normal().iter().map(bigint_to_json).collect::<Vec<_>>(),
        "offset": bigint_to_json(h.offset()),
    })
}

fn run(cli: Cli) -> Result<u8> {
    let cap = cli.oracle_cap;
    match cli.command {
        Command::Check { file, full } => {
            let inst = read_instance(&file)?;
            let report = verify(&inst, Route::Auto { cap })?;
            let falsified = report.falsifications();
            if full {
                print(&report_to_json(&report));
            } else {
                print(&json!({
                    "position": report.position,
                    "containing": report.containing,
                    "verdicts": report.verdicts,
                    "falsifications": falsified,
                }));
            }
            Ok(if falsified.is_empty() { 0 } else { 2 })
        }
        Command::Enumerate {
            file,
            oracle,
            family,
        } => {
            let inst = read_instance(&file)?;
            let route = if oracle {
                Route::Oracle { cap }
            } else {
                Route::Auto { cap }
            };
            let e = Enumerator::new(&inst, route)?;
            let fam = e.families()?;
            let out = match family {
                None => json!({
                    "families": families_to_json(&fam),
                    "counts": e.counts(&fam),
                }),
                Some(FamilyName::C) => subset_family_to_json(&fam.minimal_containing),
                Some(FamilyName::A) => subset_family_to_json(&fam.maximal_avoiding),
                Some(FamilyName::Smpl) => subset_family_to_json(&fam.simplices),
                Some(FamilyName::F) => subset_family_to_json(&fam.facets),
                Some(FamilyName::H) => hyperplane_family_to_json(&fam.hyperplanes),
            };
            print(&out);
            Ok(0)
        }
        Command::Construct { file, op, set, s } => {
            let inst = read_instance(&file)?;
            let out = match op {
                Construction::Simplex => {
                    let set = set.unwrap_or_else(|| (0..inst.len()).collect());
                    let c = find_containing_simplex(&inst, &set)?;
                    json!({ "simplex": c.vertices, "verified": c.verified })
                }
                Construction::FacetCert => {
                    let (Some(a), Some(s)) = (set, s) else {
                        return Err(zerohull::Error::Precondition(
                            "facet-cert needs --set and --s".into(),
                        ));
                    };
                    let c = facet_certificate(&inst, &a, s)?;
                    json!({
                        "T": c.facet,
                        "s": c.s,
                        "hyperplane": hyperplane_json(&c.hyperplane),
                        "verified": true,
                    })
                }
                Construction::GoodVertex => {
                    let c = good_vertex(&inst)?;
                    json!({
                        "u": c.u,
                        "simplex": c.simplex,
                        "hyperplane": hyperplane_json(&c.hyperplane),
                        "verified": true,
                    })
                }
            };
            print(&out);
            Ok(0)
        }
        Command::Gen {
            d,
            n,
            seed,
            containing,
            bound,
            allow_degenerate,
            output,
        } => {
            let mut opts = GenerateOptions::new(d, n, seed)
                .containing(containing)
                .general_position(!allow_degenerate);
            if let Some(b) = bound {
                opts = opts.bound(b);
            }
            let inst = generate(&opts)?;
            write_json(&output, &instance_to_json(&inst))?;
            Ok(0)
        }
        Command::Batch {
            inputs,
            jobs,
            output,
        } => {
            let files = expand_inputs(&inputs)?;
            let report = run_batch(&files, jobs, Route::Auto { cap })?;
            let value = report.to_json();
            write_json(&output, &value)?;
            eprintln!(
                "{} instances, {} errors, {} falsifications",
                report.entries.len(),
                report.errors(),
                report.falsifications()
            );
            Ok(report.exit_code() as u8)
        }
        Command::OracleCompare { file } => {
            let inst = read_instance(&file)?;
            let fast_c = fast_minimal_containing(&inst)?;
            let fast_a = fast_maximal_avoiding(&inst)?;
            let oracle_c = oracle_minimal_containing(&inst, cap)?;
            let oracle_a = oracle_maximal_avoiding(&inst, cap)?;
            let equal = fast_c == oracle_c && fast_a == oracle_a;
            print(&json!({
                "equal": equal,
                "C": { "fast": fast_c, "oracle": oracle_c },
                "A": { "fast": fast_a, "oracle": oracle_a },
            }));
            Ok(if equal { 0 } else { 2 })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
