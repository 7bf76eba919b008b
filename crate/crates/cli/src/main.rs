//! Command-line front end: graph construction, invariants, exact spectra,
//! theorem verification, table generation, DOT export, and a reduced-scale
//! selftest. Output is deterministic for a fixed --seed.
//!
//! Exit codes: 0 success, 1 verification/conjecture failure, 2 usage
//! error, 3 size-guard refusal.

use clap::{Args, Parser, Subcommand, ValueEnum};
use divgraph_core::acceptance::{self, CheckStatus, Scale};
use divgraph_core::arith::{self, FactorizationType};
use divgraph_core::divgraph::{self, dot::DotLabels, planarity, DivGraph};
use divgraph_core::error::Error;
use divgraph_core::exactla::{self, IntMatrix};
use divgraph_core::poset::FinitePoset;
use divgraph_core::spectra::{self, SpectrumOptions, SPECIAL_LAMBDAS};
use num_traits::ToPrimitive;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "divgraph",
    version,
    about = "Exact structural and spectral analysis of divisibility relation graphs",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Seed for the randomized (but certified) modular linear algebra.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Worker threads; defaults to the number of cores.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Dot,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct TargetArgs {
    /// Concrete integer n ≥ 1.
    #[arg(long)]
    n: Option<u64>,

    /// Factorization type as comma-separated exponents, e.g. 2,2.
    #[arg(long = "type", value_name = "a1,a2,...", value_delimiter = ',')]
    r#type: Option<Vec<u32>>,
}

impl TargetArgs {
    fn resolve(&self) -> Result<FactorizationType, Error> {
        match (&self.n, &self.r#type) {
            (Some(n), None) => arith::factorization_type(*n),
            (None, Some(exps)) => FactorizationType::new(exps.clone()),
            _ => unreachable!("clap enforces the group"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckId {
    /// f_n | f_npq for one type.
    ThmMain,
    /// f_n² | f_npq when some prime divides n exactly once.
    ThmMain2,
    /// The Möbius −2-eigenvector.
    Mobius,
    /// The {1, n}-supported −1-eigenvector.
    MinusOne,
    /// det of type (1,a) is 6-periodic in a.
    DetPeriod,
    /// 0 is an eigenvalue of type (1,a) iff a ≡ 1 (mod 6).
    Mod6,
    /// The explicit kernel of type (u,v) with u ≡ v ≡ 1 (mod 6).
    KernelPq,
    /// f_P | f_(P×S0) on random posets.
    PosetLift,
    /// The squarefree multiplicity tables.
    Tables,
    /// OEIS-shaped patterns in the tables.
    Oeis,
}

#[derive(Subcommand)]
enum Command {
    /// Structural invariants of one graph as JSON.
    Info {
        #[command(flatten)]
        target: TargetArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Exact characteristic polynomial (decimal strings, constant first).
    Charpoly {
        #[command(flatten)]
        target: TargetArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Certified integer-eigenvalue multiplicities and determinant.
    Spectrum {
        #[command(flatten)]
        target: TargetArgs,
        /// Eigenvalues to certify (default −2,−1,0,1).
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        lambda: Option<Vec<i64>>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run one named verification; exit 1 if it is falsified.
    Verify {
        #[arg(value_enum)]
        check: CheckId,
        #[command(flatten)]
        target: OptionalTargetArgs,
        /// Largest ω for tables/oeis.
        #[arg(long, default_value_t = 8)]
        omega_max: u32,
        /// Largest a for det-period (default 29) and mod6 (default 25).
        #[arg(long)]
        a_max: Option<u32>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Multiplicity table over squarefree types.
    Table {
        /// Eigenvalues to tabulate (default −2,−1,0,1).
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        lambda: Option<Vec<i64>>,
        #[arg(long, default_value_t = 8)]
        omega_max: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// DOT export of one graph.
    Export {
        #[command(flatten)]
        target: TargetArgs,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
        /// Vertex labels: exponent vectors, divisors, or subfields.
        #[arg(long, value_enum, default_value = "auto")]
        labels: LabelChoice,
    },
    /// Reduced-scale run of the acceptance battery with timings.
    Selftest,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LabelChoice {
    /// Divisors when built from --n, exponent vectors otherwise.
    Auto,
    Exponents,
    Divisors,
    Subfields,
}

#[derive(Args)]
#[group(required = false, multiple = false)]
struct OptionalTargetArgs {
    #[arg(long)]
    n: Option<u64>,

    #[arg(long = "type", value_name = "a1,a2,...", value_delimiter = ',')]
    r#type: Option<Vec<u32>>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .is_err()
        {
            eprintln!("warning: thread pool already initialized; --jobs ignored");
        }
    }
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::GuardExceeded { .. } => ExitCode::from(3),
                Error::VerificationFailed(_) => ExitCode::from(1),
                Error::InvalidInput(_) | Error::Precondition(_) => ExitCode::from(2),
            }
        }
    }
}

fn emit(cli: &Cli, content: &str) -> Result<(), Error> {
    match &cli.out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(content.as_bytes())
                .map_err(|e| Error::InvalidInput(format!("cannot write stdout: {e}")))
        }
    }
}

fn emit_json(cli: &Cli, value: &serde_json::Value) -> Result<(), Error> {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    emit(cli, &text)
}

fn require_format(got: Format, allowed: &[Format]) -> Result<(), Error> {
    if allowed.contains(&got) {
        Ok(())
    } else {
        Err(Error::InvalidInput(
            "unsupported --format for this subcommand".into(),
        ))
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    match &cli.command {
        Command::Info { target, format } => {
            require_format(*format, &[Format::Json])?;
            let t = target.resolve()?;
            emit_json(cli, &info_report(&t)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Charpoly { target, format } => {
            require_format(*format, &[Format::Json])?;
            let t = target.resolve()?;
            let g = DivGraph::build(&t)?;
            let cp = exactla::charpoly(&IntMatrix::from_adjacency(g.adj()))?;
            emit_json(
                cli,
                &serde_json::json!({
                    "type": t.exponents(),
                    "dim": g.vertex_count(),
                    "charpoly": cp.to_decimal_strings(),
                    "display": cp.to_string(),
                }),
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Spectrum {
            target,
            lambda,
            format,
        } => {
            require_format(*format, &[Format::Json])?;
            let t = target.resolve()?;
            let lambdas = lambda.clone().unwrap_or_else(|| SPECIAL_LAMBDAS.to_vec());
            let opts = SpectrumOptions {
                seed: cli.seed,
                ..SpectrumOptions::default()
            };
            let report = spectra::special_multiplicities(&t, &lambdas, &opts)?;
            emit_json(cli, &report.to_json())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            check,
            target,
            omega_max,
            a_max,
            format,
        } => {
            require_format(*format, &[Format::Json])?;
            let value = run_verify(cli, *check, target, *omega_max, *a_max)?;
            let conjecture_ok = value
                .get("ok")
                .and_then(serde_json::Value::as_bool)
                .unwrap_or(true);
            emit_json(cli, &value)?;
            Ok(if conjecture_ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Table {
            lambda,
            omega_max,
            format,
        } => {
            require_format(*format, &[Format::Json, Format::Csv])?;
            let lambdas = lambda.clone().unwrap_or_else(|| SPECIAL_LAMBDAS.to_vec());
            let rows = spectra::squarefree_table(*omega_max, &lambdas, cli.seed)?;
            match format {
                Format::Csv => {
                    let mut out = String::new();
                    if lambdas.len() == 1 {
                        out.push_str(&format!("omega,m_{}\n", lambdas[0]));
                        for r in &rows {
                            out.push_str(&format!("{},{}\n", r.omega, r.multiplicity));
                        }
                    } else {
                        out.push_str("omega,lambda,multiplicity\n");
                        for r in &rows {
                            out.push_str(&format!("{},{},{}\n", r.omega, r.lambda, r.multiplicity));
                        }
                    }
                    emit(cli, &out)?;
                }
                _ => emit_json(cli, &serde_json::json!({ "rows": rows }))?,
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Export {
            target,
            format,
            labels,
        } => {
            require_format(*format, &[Format::Dot])?;
            let (graph, default_labels) = match (&target.n, &target.r#type) {
                (Some(n), None) => (DivGraph::build_from_integer(*n)?, DotLabels::Divisors),
                _ => (DivGraph::build(&target.resolve()?)?, DotLabels::Exponents),
            };
            let labels = match labels {
                LabelChoice::Auto => default_labels,
                LabelChoice::Exponents => DotLabels::Exponents,
                LabelChoice::Divisors => DotLabels::Divisors,
                LabelChoice::Subfields => DotLabels::Subfields,
            };
            emit(cli, &divgraph::dot::to_dot(&graph, labels)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Selftest => {
            let outcomes = acceptance::run_all(Scale::Quick, cli.seed);
            let mut text = String::new();
            for o in &outcomes {
                text.push_str(&o.summary_line());
                text.push('\n');
            }
            let failed = outcomes.iter().any(|o| o.status == CheckStatus::Failed);
            let refused = outcomes.iter().any(|o| o.status == CheckStatus::Refused);
            text.push_str(&format!(
                "selftest: {} checks, {} passed, {} failed, {} refused\n",
                outcomes.len(),
                outcomes.iter().filter(|o| o.passed()).count(),
                outcomes
                    .iter()
                    .filter(|o| o.status == CheckStatus::Failed)
                    .count(),
                outcomes
                    .iter()
                    .filter(|o| o.status == CheckStatus::Refused)
                    .count(),
            ));
            emit(cli, &text)?;
            Ok(if failed {
                ExitCode::from(1)
            } else if refused {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            })
        }
    }
}

fn info_report(t: &FactorizationType) -> Result<serde_json::Value, Error> {
    let g = DivGraph::build(t)?;
    let (v, e) = divgraph::counts(t);
    let clique = divgraph::clique_number(t)?;
    let independence = divgraph::independence_number(t)?;
    let planarity = planarity::planarity_class(t)?;
    let connectivity = divgraph::connectivity_checks(t)?;
    let profile = divgraph::min_degree_analysis(t)?;
    let vcount = g.vertex_count() as u64;
    let diameter = if vcount <= 1 {
        0
    } else if g.edge_count() == vcount * (vcount - 1) / 2 {
        1
    } else {
        2
    };
    Ok(serde_json::json!({
        "type": t.exponents(),
        "v": v.to_u64(),
        "e": e.to_u64(),
        "big_omega": t.big_omega(),
        "small_omega": t.num_parts(),
        "mobius": t.mobius(),
        "clique": clique.size,
        "chromatic": clique.size,
        "independence": independence.size,
        "min_degree": profile.min_degree,
        "diameter": diameter,
        "planar": planarity.planar,
        "connected": connectivity.connected,
        "middle_connected": connectivity.middle_connected,
        "bipartite": connectivity.bipartite,
    }))
}

fn resolve_optional(target: &OptionalTargetArgs) -> Result<Option<FactorizationType>, Error> {
    match (&target.n, &target.r#type) {
        (Some(n), None) => Ok(Some(arith::factorization_type(*n)?)),
        (None, Some(exps)) => Ok(Some(FactorizationType::new(exps.clone())?)),
        (None, None) => Ok(None),
        _ => unreachable!("clap enforces the group"),
    }
}

fn run_verify(
    cli: &Cli,
    check: CheckId,
    target: &OptionalTargetArgs,
    omega_max: u32,
    a_max: Option<u32>,
) -> Result<serde_json::Value, Error> {
    let t = resolve_optional(target)?;
    let need_type = || {
        t.clone()
            .ok_or_else(|| Error::InvalidInput("this check needs --n or --type".into()))
    };
    match check {
        CheckId::ThmMain => {
            let t = need_type()?;
            let rep = spectra::verify_f_divides(&t)?;
            Ok(serde_json::json!({
                "check": "thm-main",
                "type": rep.ftype.exponents(),
                "augmented_type": rep.augmented.exponents(),
                "ok": true,
                "quotient": rep.quotient.to_decimal_strings(),
                "quotient_display": rep.quotient.to_string(),
            }))
        }
        CheckId::ThmMain2 => {
            let t = need_type()?;
            let rep = spectra::verify_f_squared_divides(&t)?;
            Ok(serde_json::json!({
                "check": "thm-main2",
                "type": rep.ftype.exponents(),
                "augmented_type": rep.augmented.exponents(),
                "ok": true,
                "quotient": rep.quotient.to_decimal_strings(),
                "quotient_display": rep.quotient.to_string(),
            }))
        }
        CheckId::Mobius => {
            let n = target
                .n
                .ok_or_else(|| Error::InvalidInput("mobius needs a concrete --n".into()))?;
            let w = spectra::mobius_eigenvector(n)?;
            Ok(serde_json::json!({
                "check": "mobius",
                "n": n,
                "lambda": w.lambda,
                "ok": true,
                "vector_by_ascending_divisors": w.values,
            }))
        }
        CheckId::MinusOne => {
            let t = need_type()?;
            let w = spectra::minus_one_eigenvector(&t)?;
            Ok(serde_json::json!({
                "check": "minus-one",
                "type": t.exponents(),
                "lambda": w.lambda,
                "ok": true,
            }))
        }
        CheckId::DetPeriod => {
            let a_max = a_max.unwrap_or(29);
            let dets = spectra::det_sequence_pq_power(a_max)?;
            Ok(serde_json::json!({
                "check": "det-period",
                "a_max": a_max,
                "ok": true,
                "determinants": dets.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
            }))
        }
        CheckId::Mod6 => {
            let a_max = a_max.unwrap_or(25);
            let has_zero: Vec<bool> = (0..=a_max)
                .map(spectra::zero_iff_mod6)
                .collect::<Result<_, _>>()?;
            Ok(serde_json::json!({
                "check": "mod6",
                "a_max": a_max,
                "ok": true,
                "has_zero_eigenvalue": has_zero,
            }))
        }
        CheckId::KernelPq => {
            let exps = target.r#type.clone().ok_or_else(|| {
                Error::InvalidInput("kernel-pq needs --type u,v with u ≡ v ≡ 1 (mod 6)".into())
            })?;
            if exps.len() != 2 {
                return Err(Error::InvalidInput(
                    "kernel-pq needs exactly two exponents".into(),
                ));
            }
            let w = spectra::kernel_vector_two_prime_powers(exps[0], exps[1])?;
            let six = spectra::six_case_identities(exps[1])?;
            Ok(serde_json::json!({
                "check": "kernel-pq",
                "u": exps[0],
                "v": exps[1],
                "ok": true,
                "kernel_block_order": w.values,
                "block_identity_scalar": six.s,
            }))
        }
        CheckId::PosetLift => {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(cli.seed);
            let count = 50;
            for _ in 0..count {
                let p = FinitePoset::random(rng.gen_range(1..=8), &mut rng);
                divgraph_core::poset::verify_poset_lift(&p, 8)?;
            }
            Ok(serde_json::json!({
                "check": "poset-lift",
                "random_posets": count,
                "max_size": 8,
                "ok": true,
            }))
        }
        CheckId::Tables => {
            let rows = spectra::squarefree_table(omega_max, &SPECIAL_LAMBDAS, cli.seed)?;
            Ok(serde_json::json!({
                "check": "tables",
                "omega_max": omega_max,
                "ok": true,
                "rows": rows,
            }))
        }
        CheckId::Oeis => {
            let rows = spectra::squarefree_table(omega_max, &SPECIAL_LAMBDAS, cli.seed)?;
            let report = spectra::oeis_pattern_checks(&rows);
            Ok(serde_json::json!({
                "check": "oeis",
                "omega_max": omega_max,
                "ok": report.all_hold,
                "observations": report.observations,
            }))
        }
    }
}
