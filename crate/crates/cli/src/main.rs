mod config;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use qkborel::alcove::{admissible_subsets, parse_seq};
use qkborel::ichevalley::{ic2_closed_form, inverse_chevalley, lhs_weight};
use qkborel::qbg::{build_graph, export_dot, export_json};
use qkborel::qkpres::{f_rational, ideal_generators, schubert_poly};
use qkborel::relations::{elementary_e, solve_system};
use qkborel::semimod::{ff, FfVariant};
use qkborel::verify::{run_suite, Suite};
use qkborel::weyl::{SignedPerm, MAX_ENUMERATION_RANK};
use serde_json::json;

use config::Defaults;
use report::VerificationReport;

#[derive(Parser, Debug)]
#[command(name = "qkborel", version, about = "Identity checks for the Borel-type presentation of quantum K-theory of type C flag manifolds")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Include wall-clock times (makes reports run-dependent).
    #[arg(long, global = true)]
    timings: bool,
    /// Flat key = value defaults file; flags override it.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run identity suites.
    Verify(VerifyArgs),
    /// Print an object.
    Show {
        #[command(subcommand)]
        what: ShowCmd,
    },
    /// Quantum Bruhat graph exports.
    Qbg {
        #[command(subcommand)]
        what: QbgCmd,
    },
    /// Quantum alcove model listings.
    Alcove {
        #[command(subcommand)]
        what: AlcoveCmd,
    },
    /// Inverse Chevalley expansion at s_1..s_n..s_k with m = k.
    Ic {
        #[arg(long, value_parser = rank_parser())]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Solve the recurrence system and compare with E_l.
    SolveSystem {
        #[arg(long, value_parser = rank_parser())]
        n: usize,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_parser = rank_parser())]
    n: Option<usize>,
    /// Truncation degree for shift-operator series (default 2n+2).
    #[arg(long)]
    trunc: Option<u32>,
    #[arg(long, value_enum)]
    mode: Option<Mode>,
    /// qbg, alcove, ic, semimod, relations, qkpres or all.
    #[arg(long)]
    suite: Option<String>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Truncated,
    Exact,
}

#[derive(Subcommand, Debug)]
enum ShowCmd {
    /// F_l as a z-polynomial with exact coefficients.
    F(PolyArgs),
    /// The module element F_l.
    Ff(PolyArgs),
    /// Ideal generators F_l - E_l.
    Ideal {
        #[arg(long, value_parser = rank_parser())]
        n: usize,
    },
    /// Polynomial representing the Schubert class of s_1..s_k (or s_1..s_n..s_k).
    Schubert {
        #[arg(long, value_parser = rank_parser())]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        barred: bool,
    },
}

#[derive(Args, Debug)]
struct PolyArgs {
    #[arg(long, value_parser = rank_parser())]
    n: usize,
    #[arg(long)]
    l: usize,
    /// full, upper:K or barred:K.
    #[arg(long, default_value = "full")]
    variant: String,
}

#[derive(Subcommand, Debug)]
enum QbgCmd {
    Export {
        #[arg(long, value_parser = rank_parser())]
        n: usize,
        #[arg(long, value_enum, default_value = "dot")]
        format: ExportFormat,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ExportFormat {
    Dot,
    Json,
}

#[derive(Subcommand, Debug)]
enum AlcoveCmd {
    /// Admissible subsets of a root sequence for w.
    List {
        #[arg(long, value_parser = rank_parser())]
        n: usize,
        /// Window notation, e.g. [2,-1,3].
        #[arg(long)]
        w: String,
        /// theta:K or gamma:K.
        #[arg(long)]
        seq: String,
    },
}

fn rank_parser() -> clap::builder::RangedU64ValueParser<usize> {
    clap::builder::RangedU64ValueParser::new().range(1..=MAX_ENUMERATION_RANK as u64)
}

/// A failed check versus a usage problem.
enum Outcome {
    Pass,
    Fail,
}

fn parse_variant(n: usize, s: &str) -> Result<FfVariant> {
    let variant = match s.split_once(':') {
        None if s == "full" => FfVariant::Full,
        Some(("upper", k)) => FfVariant::Upper(k.parse().context("bad K in upper:K")?),
        Some(("barred", k)) => FfVariant::Barred(k.parse().context("bad K in barred:K")?),
        _ => bail!("variant must be full, upper:K or barred:K"),
    };
    qkborel::semimod::subset_range(n, variant)?;
    Ok(variant)
}

fn print(json: bool, value: serde_json::Value, text: String) {
    if json {
        println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
    } else {
        print!("{text}");
        if !text.ends_with('\n') {
            println!();
        }
    }
}

fn verify(cli: &Cli, args: &VerifyArgs) -> Result<Outcome> {
    let defaults = match &cli.config {
        Some(p) => Defaults::load(p)?,
        None => Defaults::default(),
    };
    let n = args.n.or(defaults.n).ok_or_else(|| anyhow!("--n is required (flag or config)"))?;
    if n == 0 || n > MAX_ENUMERATION_RANK {
        bail!("rank {n} outside 1..={MAX_ENUMERATION_RANK}");
    }
    let mode = match (args.mode, defaults.mode.as_deref()) {
        (Some(m), _) => m,
        (None, Some("exact")) => Mode::Exact,
        (None, Some("truncated")) | (None, None) => Mode::Truncated,
        (None, Some(other)) => bail!("unknown mode {other:?}"),
    };
    let trunc = match mode {
        Mode::Exact => None,
        Mode::Truncated => Some(args.trunc.or(defaults.trunc).unwrap_or(2 * n as u32 + 2)),
    };
    let names = match (&args.suite, &defaults.suites) {
        (Some(s), _) => vec![s.clone()],
        (None, Some(v)) => v.clone(),
        (None, None) => vec!["all".to_string()],
    };
    let mut suites: Vec<Suite> = Vec::new();
    for name in &names {
        for s in Suite::parse(name)? {
            if !suites.contains(&s) {
                suites.push(s);
            }
        }
    }
    let runs = suites.iter().map(|&s| run_suite(s, n, trunc)).collect::<qkborel::Result<Vec<_>>>()?;
    let mode_name = if mode == Mode::Exact { "exact" } else { "truncated" };
    let report = VerificationReport::new(n, trunc, mode_name, &runs, cli.timings);
    print(cli.json, serde_json::to_value(&report)?, report.render_text());
    Ok(if report.passed { Outcome::Pass } else { Outcome::Fail })
}

fn show(cli: &Cli, what: &ShowCmd) -> Result<Outcome> {
    match what {
        ShowCmd::F(a) => {
            let v = parse_variant(a.n, &a.variant)?;
            let p = f_rational(a.n, a.l, v)?;
            print(cli.json, json!({ "n": a.n, "l": a.l, "variant": a.variant, "terms": p.to_json() }), p.to_string());
        }
        ShowCmd::Ff(a) => {
            let v = parse_variant(a.n, &a.variant)?;
            let e = ff(a.n, a.l, v, None)?;
            print(cli.json, json!({ "n": a.n, "l": a.l, "variant": a.variant, "terms": e.to_json() }), e.render());
        }
        ShowCmd::Ideal { n } => {
            let gens = ideal_generators(*n)?;
            let text: String = gens.iter().enumerate().map(|(i, g)| format!("F{} - E{}: {g}\n", i + 1, i + 1)).collect();
            let value = json!({ "n": n, "generators": gens.iter().map(|g| g.to_json()).collect::<Vec<_>>() });
            print(cli.json, value, text);
        }
        ShowCmd::Schubert { n, k, barred } => {
            if *k == 0 || k > n {
                bail!("k must lie in 1..={n}");
            }
            let p = schubert_poly(*n, *k, *barred)?;
            print(cli.json, json!({ "n": n, "k": k, "barred": barred, "terms": p.to_json() }), p.to_string());
        }
    }
    Ok(Outcome::Pass)
}

fn ic(cli: &Cli, n: usize, k: usize) -> Result<Outcome> {
    if k == 0 || k > n {
        bail!("k must lie in 1..={n}");
    }
    let w = SignedPerm::mountain(n, k);
    let got = inverse_chevalley(&w, k)?;
    let closed = ic2_closed_form(n, k)?;
    let ok = got == closed.rhs && lhs_weight(&w, k) == closed.lhs_weight;
    let value = json!({
        "n": n, "k": k, "w": w.to_string(),
        "lhs_weight": lhs_weight(&w, k).coords(),
        "rhs": got.to_json(),
        "matches_closed_form": ok,
    });
    let text = format!(
        "e^{{{}}} [O(w)] with w = {w}:\n{}\nclosed form: {}\n",
        lhs_weight(&w, k),
        got.render().trim_end(),
        if ok { "PASS" } else { "FAIL" }
    );
    print(cli.json, value, text);
    Ok(if ok { Outcome::Pass } else { Outcome::Fail })
}

fn solve(cli: &Cli, n: usize) -> Result<Outcome> {
    let sol = solve_system(n)?;
    let mut ok = true;
    let mut text = String::new();
    let mut rows = Vec::new();
    for (l, x) in sol.iter().enumerate() {
        let same = *x == elementary_e(n, l as i64);
        ok &= same;
        text.push_str(&format!("F{l} = {x}  [{}]\n", if same { "= E_l, PASS" } else { "!= E_l, FAIL" }));
        rows.push(json!({ "l": l, "value": x.to_string(), "equals_elementary": same }));
    }
    text.push_str(&format!("overall: {}\n", if ok { "PASS" } else { "FAIL" }));
    print(cli.json, json!({ "n": n, "solution": rows, "passed": ok }), text);
    Ok(if ok { Outcome::Pass } else { Outcome::Fail })
}

fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Verify(a) => verify(cli, a),
        Command::Show { what } => show(cli, what),
        Command::Qbg { what: QbgCmd::Export { n, format } } => {
            let edges = build_graph(*n)?;
            match format {
                ExportFormat::Dot => print!("{}", export_dot(*n, &edges)?),
                ExportFormat::Json => println!("{}", serde_json::to_string_pretty(&export_json(*n, &edges)?)?),
            }
            Ok(Outcome::Pass)
        }
        Command::Alcove { what: AlcoveCmd::List { n, w, seq } } => {
            let w: SignedPerm = w.parse()?;
            if w.rank() != *n {
                bail!("w has rank {}, expected {n}", w.rank());
            }
            let seq = parse_seq(*n, seq)?;
            let subs = admissible_subsets(&w, &seq);
            let text: String = subs.iter().map(|a| format!("{a}\n")).collect();
            let value = json!({ "w": w.to_string(), "subsets": subs.iter().map(|a| a.to_json()).collect::<Vec<_>>() });
            print(cli.json, value, text);
            Ok(Outcome::Pass)
        }
        Command::Ic { n, k } => ic(cli, *n, *k),
        Command::SolveSystem { n } => solve(cli, *n),
    }
}

fn configure_threads() -> Result<()> {
    if let Ok(v) = std::env::var("QKC_THREADS") {
        let threads: usize = v.parse().with_context(|| format!("QKC_THREADS={v:?} is not a number"))?;
        rayon::ThreadPoolBuilder::new().num_threads(threads).build_global()?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads().and_then(|_| run(&cli));
    match result {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
