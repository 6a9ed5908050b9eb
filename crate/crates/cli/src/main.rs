use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use spo_core::character::{koike_terada, super_schur, wcf_so_odd, wcf_spo};
use spo_core::littlewood::{euler_det, homology, littlewood_terms, tor_ideal, tor_m, Homology, IdealVariant};
use spo_core::modrule::{modrule_border, modrule_weyl, ModResult};
use spo_core::superweyl::verify_commutator_suite;
use spo_core::verify::{criterion, run_criterion, CRITERIA};
use spo_core::zmodule::{quadric_weight_space, z_hilbert, z_hilbert_closed};
use spo_core::{littlewood, Partition, SuiteReport};

mod output;

use output::{int, laurent_json, report_json, report_text, schur_json};

#[derive(Parser)]
#[command(name = "spo", version, about = "Characters, Littlewood complexes and resolutions for SpO(2m|1)")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Torus character of an irreducible or a super Schur functor.
    Char(CharArgs),
    /// Index and terminal partition of the modification rule.
    Modrule(ModruleArgs),
    /// Terms, Euler characteristic and homology of a Littlewood complex.
    Littlewood(LittlewoodArgs),
    /// Equivariant Tor of the ideal (S²E) or of M_λ.
    Tor(TorArgs),
    /// Hilbert series and weight spaces of Z.
    Zmod {
        #[command(subcommand)]
        command: ZmodCommand,
    },
    /// Run verification suites.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Group {
    /// so(2m+1) Weyl character formula.
    #[value(alias = "so_odd")]
    SoOdd,
    /// SpO(2m|1) Weyl character formula.
    Spo,
    /// Koike–Terada determinant.
    #[value(alias = "koike_terada")]
    KoikeTerada,
    /// Super Schur polynomial of C^{2m|1}.
    #[value(alias = "super_schur")]
    SuperSchur,
}

#[derive(Args)]
struct CharArgs {
    #[arg(long, value_enum, default_value = "so-odd")]
    group: Group,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    lambda: Partition,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Weyl,
    Border,
}

#[derive(Args)]
struct ModruleArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    mu: Partition,
    #[arg(long, value_enum, default_value = "weyl")]
    method: Method,
}

#[derive(Args)]
struct LittlewoodArgs {
    #[arg(long)]
    lambda: Partition,
    /// Needed for the Euler characteristic and homology.
    #[arg(long)]
    m: Option<usize>,
    /// Highest homological degree of the listed terms.
    #[arg(long)]
    max_i: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    S22ev,
    S22od,
    General,
}

#[derive(Args)]
struct TorArgs {
    #[arg(long)]
    m: usize,
    /// Resolve M_λ; without it, resolve the ideal.
    #[arg(long)]
    lambda: Option<Partition>,
    #[arg(long, value_enum, default_value = "general")]
    variant: Variant,
    /// Highest homological degree.
    #[arg(long, default_value_t = 3)]
    max_i: usize,
}

#[derive(Subcommand)]
enum ZmodCommand {
    /// Graded dimensions of Z.
    Hilbert {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 8)]
        deg: usize,
        /// Expand the closed form instead of the character.
        #[arg(long)]
        closed: bool,
    },
    /// A GL_n weight space of Z, from the character and from the quadric ring.
    Weight {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        weight: String,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// `all`, a criterion name or its number.
    suite: String,
    /// Run the desk-scale defaults (the only mode of `all`).
    #[arg(long)]
    quick: bool,
    /// Truncation degree for degree-bounded suites.
    #[arg(long)]
    deg: Option<usize>,
    /// With `--n`, restrict `commutators` or `balance` to one shape.
    #[arg(long, requires = "n")]
    m: Option<usize>,
    #[arg(long, requires = "m")]
    n: Option<usize>,
    /// Include wall-clock times in the output.
    #[arg(long)]
    timings: bool,
}

/// Failure to produce an answer from the given arguments.
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

enum Outcome {
    Done(Value, String),
    Verified(Vec<SuiteReport>, bool),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli.command) {
        Ok(Outcome::Done(value, text)) => {
            if cli.json {
                let mut value = value;
                value["schema"] = json!("1");
                println!("{}", serde_json::to_string_pretty(&value).expect("JSON values serialize"));
            } else {
                println!("{text}");
            }
            ExitCode::SUCCESS
        }
        Ok(Outcome::Verified(reports, timings)) => {
            let passed = reports.iter().all(|r| r.passed());
            if cli.json {
                let status = if passed { "pass" } else { "fail" };
                let suites: Vec<Value> = reports.iter().map(|r| report_json(r, timings)).collect();
                let value = json!({ "schema": "1", "status": status, "suites": suites });
                println!("{}", serde_json::to_string_pretty(&value).expect("JSON values serialize"));
            } else {
                for r in &reports {
                    println!("{}", report_text(r, timings));
                }
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: &Command) -> Result<Outcome, Usage> {
    match command {
        Command::Char(a) => {
            let value = match a.group {
                Group::SoOdd => wcf_so_odd(&a.lambda, a.m)?,
                Group::Spo => wcf_spo(&a.lambda, a.m)?,
                Group::KoikeTerada => koike_terada(&a.lambda, a.m)?,
                Group::SuperSchur => super_schur(&a.lambda, a.m)?,
            };
            let dim = value.dimension();
            let body = json!({ "lambda": a.lambda.to_string(), "m": a.m, "dimension": int(&dim), "terms": laurent_json(&value) });
            Ok(Outcome::Done(body, value.to_string()))
        }
        Command::Modrule(a) => {
            let result = match a.method {
                Method::Weyl => modrule_weyl(&a.mu, a.m),
                Method::Border => modrule_border(&a.mu, a.m),
            };
            Ok(match result {
                ModResult::Finite { i, tau, strips } => Outcome::Done(
                    json!({ "mu": a.mu.to_string(), "m": a.m, "i": i, "tau": tau.to_string(), "strips": strips }),
                    format!("i={i} tau={tau}"),
                ),
                ModResult::Infinite => {
                    Outcome::Done(json!({ "mu": a.mu.to_string(), "m": a.m, "i": Value::Null }), "i=infinity".into())
                }
            })
        }
        Command::Littlewood(a) => littlewood_cmd(a),
        Command::Tor(a) => tor_cmd(a),
        Command::Zmod { command } => zmod_cmd(command),
        Command::Verify(a) => verify_cmd(a),
    }
}

fn littlewood_cmd(a: &LittlewoodArgs) -> Result<Outcome, Usage> {
    let terms = littlewood_terms(&a.lambda, a.max_i);
    let mut lines: Vec<String> = terms.terms.iter().map(|(i, t)| format!("L_{i} = {t}")).collect();
    let mut body = json!({
        "lambda": a.lambda.to_string(),
        "terms": terms.terms.iter().map(|(i, t)| json!({ "i": i, "schur": schur_json(t) })).collect::<Vec<_>>(),
    });
    if let Some(m) = a.m {
        let euler = euler_det(&a.lambda, m)?;
        lines.push(format!("euler = {euler}"));
        body["m"] = json!(m);
        body["euler"] = laurent_json(&euler);
        match homology(&a.lambda, m) {
            Homology::Concentrated { degree, tau } => {
                lines.push(format!("H_{degree} = S_[{tau}], all other homology zero"));
                body["homology"] = json!({ "degree": degree, "tau": tau.to_string() });
            }
            Homology::Zero => {
                lines.push("homology is zero".into());
                body["homology"] = Value::Null;
            }
        }
    }
    Ok(Outcome::Done(body, lines.join("\n")))
}

fn tor_cmd(a: &TorArgs) -> Result<Outcome, Usage> {
    let (rows, label) = match &a.lambda {
        Some(lambda) => (tor_m(lambda, a.m, a.max_i)?.rows, format!("M_{lambda}")),
        None => {
            let variant = match a.variant {
                Variant::S22ev => IdealVariant::S22Even,
                Variant::S22od => IdealVariant::S22Odd,
                Variant::General => IdealVariant::General(a.m),
            };
            ((0..=a.max_i).map(|i| tor_ideal(i, variant)).collect(), "ideal".into())
        }
    };
    let text = rows.iter().enumerate().map(|(i, r)| format!("Tor_{i} = {r}")).collect::<Vec<_>>().join("\n");
    let body = json!({
        "module": label,
        "m": a.m,
        "rows": rows.iter().map(schur_json).collect::<Vec<_>>(),
    });
    Ok(Outcome::Done(body, text))
}

fn zmod_cmd(command: &ZmodCommand) -> Result<Outcome, Usage> {
    match *command {
        ZmodCommand::Hilbert { m, n, deg, closed } => {
            let series = if closed { z_hilbert_closed(m, n, deg) } else { z_hilbert(m, n, deg)? };
            let text = series.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ");
            Ok(Outcome::Done(json!({ "m": m, "n": n, "series": series.iter().map(int).collect::<Vec<_>>() }), text))
        }
        ZmodCommand::Weight { m, ref weight } => {
            let w: Vec<usize> = weight
                .split(',')
                .map(|s| s.trim().parse::<usize>())
                .collect::<Result<_, _>>()
                .map_err(|e| Usage(format!("bad weight {weight:?}: {e}")))?;
            let ws = quadric_weight_space(m, &w)?;
            let text = format!("extracted={} product={}", ws.extracted, ws.product);
            let body = json!({ "m": m, "weight": w, "extracted": int(&ws.extracted), "product": int(&ws.product) });
            Ok(Outcome::Done(body, text))
        }
    }
}

fn verify_cmd(a: &VerifyArgs) -> Result<Outcome, Usage> {
    if a.suite == "all" {
        let reports = CRITERIA.iter().map(|c| run_criterion(c.id, None).expect("listed criterion")).collect();
        return Ok(Outcome::Verified(reports, a.timings));
    }
    let c = criterion(&a.suite).ok_or_else(|| {
        let names: Vec<&str> = CRITERIA.iter().map(|c| c.name).collect();
        Usage(format!("unknown suite {:?}; expected all or one of {}", a.suite, names.join(", ")))
    })?;
    let report = match (c.name, a.m.zip(a.n)) {
        (_, None) => run_criterion(c.id, a.deg).expect("listed criterion"),
        ("commutators", Some((m, n))) => verify_commutator_suite(m, n, a.deg.unwrap_or(4))?,
        ("balance", Some((m, n))) => littlewood::verify_balance(m, n, a.deg.unwrap_or(8)),
        (name, Some(_)) => return Err(Usage(format!("suite {name} does not take --m/--n"))),
    };
    Ok(Outcome::Verified(vec![report], a.timings))
}
