//! `maya-painleve`: build, verify and render rational solutions of cyclic
//! dressing chains from the command line.
//!
//! Exit codes: 0 when every verification passes, 2 for bad input, 3 when a
//! verification fails.

use std::fmt::Display;
use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use itertools::Itertools;
use rayon::prelude::*;

use maya_painleve::chain::CycleSpec;
use maya_painleve::error::Error;
use maya_painleve::gold::{self, GoldKind};
use maya_painleve::hermite::HermiteCache;
use maya_painleve::json;
use maya_painleve::maya::{admissible_shifts, enumerate_cyclic, odd_compositions, KBlockCoordinates, MayaDiagram};
use maya_painleve::painleve::classify_p4;
use maya_painleve::pipeline::{reverify, solve_with, Solved};

#[derive(Parser)]
#[command(name = "maya-painleve", version, about = "Rational Painleve solutions from cyclic Maya diagrams")]
struct Cli {
    /// Worker threads for independent verifications
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: u16,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Render a Maya diagram with its index, genus and block coordinates
    Show(ShowArgs),
    /// List the cyclic signatures for a period, or the signature of a diagram
    Classify(ClassifyArgs),
    /// Stream every (p,k)-cyclic coordinate tuple up to a bound
    Enumerate(EnumerateArgs),
    /// Build and verify the chain, Noumi-Yamada and Painleve data for one spec
    Solve(SolveArgs),
    /// Re-verify a JSON document produced by `solve --json`
    Verify(VerifyArgs),
    /// Only the P_IV or P_V reduction of one spec
    Scalar(SpecArgs),
    /// Run every built-in reference example
    Reproduce(ReproduceArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct ShowArgs {
    /// Block coordinates; classes mod k separated by `|`, e.g. `0,3,8` or `0|3|2`
    #[arg(long)]
    blocks: Option<String>,
    /// Frobenius symbol `s_1,...|t_1,...`
    #[arg(long)]
    frobenius: Option<String>,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Number of flips
    #[arg(long, required_unless_present = "blocks", conflicts_with = "blocks")]
    p: Option<usize>,
    /// Diagram in block syntax
    #[arg(long, requires = "k")]
    blocks: Option<String>,
    /// Shift
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    p: usize,
    #[arg(long)]
    k: usize,
    /// Largest coordinate
    #[arg(long, default_value_t = 4)]
    max: i64,
    /// Print totals only
    #[arg(long)]
    count: bool,
    /// Build and verify every spec
    #[arg(long)]
    verify: bool,
    /// Allow repeated coordinates within a class
    #[arg(long)]
    degenerate: bool,
    /// Every flip order instead of the canonical one
    #[arg(long)]
    all_perms: bool,
}

#[derive(Args)]
struct SpecArgs {
    /// Expected signature, e.g. `1,3`
    #[arg(long)]
    sig: Option<String>,
    /// k-block coordinates, e.g. `0|3,4,6`
    #[arg(long)]
    coords: String,
    /// Flip order, a permutation of 0..p (default: canonical order)
    #[arg(long)]
    perm: Option<String>,
    /// Emit JSON
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    spec: SpecArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// JSON file, or `-` for stdin
    #[arg(long, default_value = "-")]
    input: String,
    /// Print the recomputed report as JSON
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ReproduceArgs {
    /// Restrict to one family
    #[arg(long, value_parser = ["p4", "p5", "a4"])]
    only: Option<String>,
    /// Deliberately break a component to check that failures are caught
    #[arg(long)]
    inject_fault: Option<Fault>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Fault {
    Hermite,
}

enum Failure {
    Input(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs as usize).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match pool.install(|| run(cli.command)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(m)) => {
            eprintln!("verification failed: {m}");
            ExitCode::from(3)
        }
    }
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Show(a) => show(a),
        Command::Classify(a) => classify(a),
        Command::Enumerate(a) => enumerate(a),
        Command::Solve(a) => solve(a.spec),
        Command::Verify(a) => verify(a),
        Command::Scalar(a) => scalar(a),
        Command::Reproduce(a) => reproduce(a),
    }
}

fn join<T: Display>(xs: &[T]) -> String {
    xs.iter().join(",")
}

fn parse_list(s: &str, what: &str) -> Result<Vec<usize>, Failure> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| x.trim().parse().map_err(|_| Failure::Input(format!("bad {what} entry {x:?}"))))
        .collect()
}

fn parse_frobenius(s: &str) -> Result<MayaDiagram, Failure> {
    let (minus, plus) = s
        .split_once('|')
        .ok_or_else(|| Failure::Input(format!("Frobenius symbol {s:?} needs a `|`")))?;
    let list = |part: &str| -> Result<Vec<i64>, Failure> {
        parse_list(part, "Frobenius").map(|v| v.into_iter().map(|x| x as i64).collect())
    };
    Ok(MayaDiagram::from_frobenius(&list(minus)?, &list(plus)?)?)
}

fn show(a: ShowArgs) -> Outcome {
    let (m, kblocks) = match (a.blocks, a.frobenius) {
        (Some(b), _) => {
            let kb = KBlockCoordinates::parse(&b)?;
            (kb.diagram(), Some(kb))
        }
        (_, Some(f)) => (parse_frobenius(&f)?, None),
        _ => unreachable!("clap enforces one of the two"),
    };
    println!("{}", m.render());
    println!("frobenius  {m}");
    println!("index      {}", m.index());
    println!("genus      {}", m.genus());
    println!("blocks     {}", join(m.block_coordinates().betas()));
    if let Some(kb) = kblocks.filter(|kb| kb.k() > 1) {
        println!("k-blocks   {kb}  (k = {}, signature {})", kb.k(), join(&kb.signature()));
    }
    Ok(())
}

fn classify(a: ClassifyArgs) -> Outcome {
    if let Some(b) = a.blocks {
        let k = a.k.expect("clap requires --k");
        if k == 0 {
            return Err(Failure::Input("k must be positive".into()));
        }
        let m = KBlockCoordinates::parse(&b)?.diagram();
        let (sig, p) = m.cyclic_signature(k as i64)?;
        println!("k = {k}  signature ({})  p = {p}", join(&sig));
        return Ok(());
    }
    let p = a.p.expect("clap requires --p");
    if p == 0 {
        return Err(Failure::Input("p must be positive".into()));
    }
    let shifts = admissible_shifts(p);
    let shifts: Vec<usize> = match a.k {
        Some(k) if !shifts.contains(&k) => {
            return Err(Error::InvalidShift(format!("k = {k} is not admissible for p = {p}")).into())
        }
        Some(k) => vec![k],
        None => shifts,
    };
    for k in shifts {
        let sigs = odd_compositions(p, k).iter().map(|s| format!("({})", join(s))).join(" ");
        println!("p = {p}  k = {k}  {sigs}");
    }
    Ok(())
}

fn enumerate(a: EnumerateArgs) -> Outcome {
    let coords: Vec<KBlockCoordinates> = enumerate_cyclic(a.p, a.k, a.max, a.degenerate)?.collect();
    let perms: Vec<Vec<usize>> = if a.all_perms {
        (0..a.p).permutations(a.p).collect()
    } else {
        vec![(0..a.p).collect()]
    };
    let specs: Vec<CycleSpec> = coords
        .iter()
        .cartesian_product(&perms)
        .map(|(c, perm)| CycleSpec::new(c.clone(), perm.clone()))
        .collect::<Result<_, _>>()?;

    if !a.verify {
        if a.count {
            println!("{} specs", specs.len());
        } else {
            for s in &specs {
                println!("{}  perm {}", s.kblocks, join(&s.perm));
            }
        }
        return Ok(());
    }

    let cache = HermiteCache::global();
    let results: Vec<Result<bool, Error>> =
        specs.par_iter().map(|s| solve_with(cache, s).map(|sol| sol.report.passed())).collect();
    let mut passed = 0;
    for (s, r) in specs.iter().zip(&results) {
        let status = match r {
            Ok(true) => {
                passed += 1;
                "ok".to_string()
            }
            Ok(false) => "FAIL".to_string(),
            Err(e) => format!("FAIL ({e})"),
        };
        if !a.count {
            println!("{}  perm {}  {status}", s.kblocks, join(&s.perm));
        }
    }
    println!("{passed}/{} specs verified", specs.len());
    if passed == specs.len() {
        Ok(())
    } else {
        Err(Failure::Verification(format!("{} specs failed", specs.len() - passed)))
    }
}

fn parse_spec(a: &SpecArgs) -> Result<CycleSpec, Failure> {
    let kb = KBlockCoordinates::parse(&a.coords)?;
    if let Some(sig) = &a.sig {
        let sig = parse_list(sig, "signature")?;
        if sig != kb.signature() {
            return Err(Failure::Input(format!(
                "coordinates {kb} have signature ({}), not ({})",
                join(&kb.signature()),
                join(&sig)
            )));
        }
    }
    let perm = match &a.perm {
        Some(p) => parse_list(p, "permutation")?,
        None => (0..kb.p()).collect(),
    };
    Ok(CycleSpec::new(kb, perm)?)
}

fn verdict(what: &str, ok: bool) -> String {
    format!("{what:<16}{}", if ok { "ok" } else { "FAIL" })
}

fn print_solution(s: &Solved) {
    let c = &s.chain;
    println!("coords  {}  perm {}  (p = {}, k = {})", c.spec.kblocks, join(&c.spec.perm), c.p(), c.k());
    println!("flips   {}", join(&c.flip_seq.mus));
    println!("sigma   {}", join(&c.sigmas));
    println!("a       {}", join(&c.a));
    println!("delta   {}", c.delta);
    for (i, t) in c.taus.iter().enumerate() {
        println!("tau_{i}   {}  {}", t.diagram, t.poly);
    }
    for (i, w) in c.ws.iter().enumerate() {
        println!("w_{i} = {w}");
    }
    println!("alpha   {}", join(&s.ny.alphas));
    for (i, f) in s.ny.fs.iter().enumerate() {
        println!("f_{i} = {f}");
    }
    print_scalar(s);
    let r = &s.report;
    println!("{}", verdict("chain", r.chain.passed()));
    println!("{}", verdict("noumi-yamada", r.noumi_yamada.passed()));
    if let Some(ok) = r.p4 {
        println!("{}", verdict("P_IV", ok));
    }
    if let Some(ok) = r.p5 {
        println!("{}", verdict("P_V", ok));
    }
}

fn print_scalar(s: &Solved) {
    if let Some(p4) = &s.p4 {
        println!("P_IV    a = {}, b = {}", p4.a, p4.b);
        println!("y = {}", p4.y);
        if let Ok(form) = classify_p4(&s.chain.spec) {
            println!(
                "closed form  {} row {} (n1 = {}, n2 = {})",
                form.family.name(),
                form.row,
                form.n1,
                form.n2
            );
        }
    }
    if let Some(p5) = &s.p5 {
        println!("P_V     a = {}, b = {}, c = {}, d = {}", p5.a, p5.b, p5.c, p5.d);
        println!("y = {}", p5.y);
    }
}

fn finish(s: &Solved) -> Outcome {
    if s.report.passed() {
        Ok(())
    } else {
        Err(Failure::Verification(format!("spec {} perm {}", s.chain.spec.kblocks, join(&s.chain.spec.perm))))
    }
}

fn solve(a: SpecArgs) -> Outcome {
    let spec = parse_spec(&a)?;
    let solved = solve_with(HermiteCache::global(), &spec)?;
    if a.json {
        println!("{}", json::to_string_pretty(&solved.certificate())?);
    } else {
        print_solution(&solved);
    }
    finish(&solved)
}

fn scalar(a: SpecArgs) -> Outcome {
    let spec = parse_spec(&a)?;
    if !(3..=4).contains(&spec.p()) {
        return Err(Failure::Input(format!("scalar reductions need p = 3 or 4, got p = {}", spec.p())));
    }
    let solved = solve_with(HermiteCache::global(), &spec)?;
    if a.json {
        let doc = solved.document();
        match (&doc.p4, &doc.p5) {
            (Some(p4), _) => println!("{}", json::to_string_pretty(p4)?),
            (_, Some(p5)) => println!("{}", json::to_string_pretty(p5)?),
            _ => unreachable!("p is 3 or 4"),
        }
    } else {
        print_scalar(&solved);
        let ok = solved.report.p4.or(solved.report.p5).unwrap_or(false);
        println!("{}", verdict("residual", ok));
    }
    finish(&solved)
}

fn verify(a: VerifyArgs) -> Outcome {
    let text = if a.input == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::Input(e.to_string()))?;
        s
    } else {
        std::fs::read_to_string(&a.input).map_err(|e| Failure::Input(format!("{}: {e}", a.input)))?
    };
    let r = reverify(&text)?;
    if a.json {
        println!("{}", json::to_string_pretty(&r.report)?);
    } else {
        println!("{}", verdict("chain", r.report.chain.passed()));
        println!("{}", verdict("noumi-yamada", r.report.noumi_yamada.passed()));
        if let Some(ok) = r.report.p4 {
            println!("{}", verdict("P_IV", ok));
        }
        if let Some(ok) = r.report.p5 {
            println!("{}", verdict("P_V", ok));
        }
        match r.matches_embedded {
            Some(ok) => println!("{}", verdict("embedded report", ok)),
            None => println!("embedded report none"),
        }
        println!("{}", verdict("stable json", r.stable));
    }
    if r.passed() {
        Ok(())
    } else {
        Err(Failure::Verification(a.input))
    }
}

fn reproduce(a: ReproduceArgs) -> Outcome {
    let only = a.only.as_deref().and_then(GoldKind::parse);
    let cache = match a.inject_fault {
        Some(Fault::Hermite) => HermiteCache::faulty(),
        None => HermiteCache::new(),
    };
    let examples: Vec<_> =
        gold::catalog().into_iter().filter(|ex| only.map_or(true, |k| ex.kind == k)).collect();
    let outcomes: Vec<_> = examples.par_iter().map(|ex| gold::run_example(ex, &cache)).collect();
    let mut passed = 0;
    for o in &outcomes {
        println!("{o}");
        for w in &o.warnings {
            println!("  erratum: {w}");
        }
        passed += o.passed() as usize;
    }
    println!("{passed}/{} examples pass", outcomes.len());
    if passed == outcomes.len() {
        Ok(())
    } else {
        Err(Failure::Verification(format!("{} examples failed", outcomes.len() - passed)))
    }
}
