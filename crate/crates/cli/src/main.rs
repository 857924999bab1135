//! `liftkit`: lifting properties of finite spaces and groups from the command line.
//!
//! Exit status: 0 when the query holds (or every asserted law passes), 1 when it fails,
//! 2 on usage, parse and evaluation errors.

use std::fmt::Display;
use std::path::Path;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use liftkit_core::engine::{enumerate_class, prepare, Category, EvalError, EvalOptions, LiftResult, LiftWitness, Square};
use liftkit_core::fingrp::{self, oracle as gro, FinGrp, FiniteGroup, GroupHom};
use liftkit_core::fintop::dictionary::{lifting_dictionary, map_oracles, Status, Subject};
use liftkit_core::fintop::{enumerate_maps, lift_maps, space_properties, spaces_of_size, FinTop, SpaceMap};
use liftkit_core::harness::{self, Suite, DEFAULT_BOUND, MAX_BOUND, MAX_EXTENDED_BOUND};
use liftkit_core::notation::{
    parse_class_expr_with, parse_map_with, parse_space, render_expr, render_map, render_space, MapMode, ParseError,
};

/// Working bound for inner steps of dictionary rows in `props`.
const PROPS_INNER_BOUND: usize = 3;

#[derive(Parser)]
#[command(name = "liftkit", version, about = "Lifting properties and iterated orthogonals of finite spaces and groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide LEFT ⧄ RIGHT and print a diagonal or a square without one.
    Lift {
        left: String,
        right: String,
        /// Require every domain label to be written in the codomain.
        #[arg(long)]
        strict: bool,
    },
    /// List a class up to isomorphism, or decide membership of one map.
    Class(ClassArgs),
    /// Run a suite of laws.
    Verify(VerifyArgs),
    /// List spaces or maps.
    Enumerate(EnumerateArgs),
    /// Properties of a space, computed directly and through the lifting dictionary.
    Props { space: String },
    /// Finite groups and homomorphisms.
    #[command(subcommand)]
    Group(GroupCommand),
}

#[derive(Args)]
struct ClassArgs {
    expr: String,
    /// Largest endpoint size listed.
    #[arg(long)]
    max_size: usize,
    /// Decide membership of this map instead of listing.
    #[arg(long)]
    member: Option<String>,
    /// Working bound for inner steps without an explicit bound.
    #[arg(long)]
    inner_bound: Option<usize>,
    #[arg(long)]
    strict: bool,
    /// List non-members too.
    #[arg(long)]
    all: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_parser = parse_suite)]
    suite: Suite,
    #[arg(long, default_value_t = DEFAULT_BOUND)]
    max_size: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Allow bounds up to 6.
    #[arg(long)]
    extended: bool,
    /// Run a single law of the suite.
    #[arg(long)]
    law: Option<String>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct EnumerateTarget {
    /// Spaces with exactly N points.
    #[arg(long, value_name = "N")]
    spaces: Option<usize>,
    /// Continuous maps between two spaces.
    #[arg(long, num_args = 2, value_names = ["A", "B"])]
    maps: Option<Vec<String>>,
}

#[derive(Args)]
struct EnumerateArgs {
    #[command(flatten)]
    target: EnumerateTarget,
    /// With --spaces, list labelled spaces instead of homeomorphism classes.
    #[arg(long)]
    labelled: bool,
}

#[derive(Subcommand)]
enum GroupCommand {
    /// The catalog, up to an order.
    List {
        #[arg(long, default_value_t = 16)]
        max_order: usize,
    },
    /// Every homomorphism G → H.
    Homs { g: String, h: String },
    /// Decide F ⧄ G for homomorphisms written DOM->COD, DOM->COD#k or DOM->COD:i0,i1,...
    Lift { f: String, g: String },
    /// Group-theoretic properties.
    Props { g: String },
}

/// A failure that maps to exit status 2.
struct UsageError(String);

impl<E: Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type Outcome = Result<bool, UsageError>;

fn parse_suite(s: &str) -> Result<Suite, String> {
    Suite::from_name(s).ok_or_else(|| {
        let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
        format!("unknown suite {s:?}; expected one of {}", names.join(", "))
    })
}

fn parse_error(what: &str, input: &str, e: ParseError) -> UsageError {
    UsageError(format!("cannot parse {what}: {e}\n{}", e.pointer(input)))
}

fn mode(strict: bool) -> MapMode {
    if strict {
        MapMode::Strict
    } else {
        MapMode::LabelUnion
    }
}

fn map_arg(text: &str, strict: bool) -> Result<SpaceMap, UsageError> {
    parse_map_with(text, mode(strict)).map_err(|e| parse_error("map", text, e))
}

fn print_square<M>(sq: &Square<M>, render: impl Fn(&M) -> String) {
    println!("  top:    {}", render(&sq.top));
    println!("  bottom: {}", render(&sq.bottom));
}

fn print_lift<M>(res: &LiftResult<M>, render: impl Fn(&M) -> String) {
    match &res.witness {
        LiftWitness::Vacuous => println!("holds (no commuting squares)"),
        LiftWitness::Diagonal { square, diagonal } => {
            println!("holds");
            println!("example square:");
            print_square(square, &render);
            println!("  diagonal: {}", render(diagonal));
        }
        LiftWitness::Counterexample(square) => {
            println!("fails");
            println!("square without a diagonal:");
            print_square(square, &render);
        }
    }
}

fn cmd_lift(left: &str, right: &str, strict: bool) -> Outcome {
    let f = map_arg(left, strict)?;
    let g = map_arg(right, strict)?;
    let res = lift_maps(&f, &g);
    print_lift(&res, render_map);
    Ok(res.holds)
}

fn cmd_class(args: &ClassArgs) -> Outcome {
    let expr = parse_class_expr_with(&args.expr, mode(args.strict)).map_err(|e| parse_error("class", &args.expr, e))?;
    let cat = FinTop::new();
    let oracles = (expr.steps.len() > 1).then(|| {
        let mut set = map_oracles();
        set.verify(&cat, args.max_size.min(4));
        set
    });
    let opts = EvalOptions { inner_bound: args.inner_bound, oracles: oracles.as_ref() };
    let explain = |e: EvalError| UsageError(e.to_string());
    println!("class {}", render_expr(&expr));

    if let Some(text) = &args.member {
        let h = map_arg(text, args.strict)?;
        let prepared = prepare(&cat, &expr, &opts).map_err(explain)?;
        for r in prepared.records() {
            println!("  {r}");
        }
        let v = prepared.member(&h);
        let scope = if v.definitive { "definitive" } else { "within the bounds only" };
        println!("{}: {} ({scope})", render_map(&h), v.kind);
        if let Some(note) = &v.note {
            println!("  {note}");
        }
        if let Some(w) = &v.witness {
            println!("  fails against {}", render_map(&w.against));
            print_square(&w.square, render_map);
        }
        return Ok(v.is_yes());
    }

    if args.max_size > MAX_EXTENDED_BOUND {
        return Err(UsageError(format!("--max-size {} exceeds the limit of {MAX_EXTENDED_BOUND}", args.max_size)));
    }
    let prepared = prepare(&cat, &expr, &opts).map_err(explain)?;
    for r in prepared.records() {
        println!("  {r}");
    }
    let listing = enumerate_class(&expr, &cat, args.max_size, &opts).map_err(explain)?;
    let mut members = 0;
    for (h, v) in &listing {
        if v.is_yes() {
            members += 1;
        }
        if v.is_yes() || args.all {
            let mark = if v.definitive { "" } else { "?" };
            println!("{:<11} {}", format!("{}{mark}", v.kind), render_map(h));
        }
    }
    println!("{members} of {} representatives with endpoints of at most {} points", listing.len(), args.max_size);
    Ok(true)
}

fn cmd_verify(args: &VerifyArgs) -> Outcome {
    let limit = if args.extended { MAX_EXTENDED_BOUND } else { MAX_BOUND };
    if args.max_size > limit {
        let hint = if args.extended { "" } else { " (use --extended for up to 6)" };
        return Err(UsageError(format!("--max-size {} exceeds the limit of {limit}{hint}", args.max_size)));
    }
    let report = match &args.law {
        Some(id) => {
            let law = harness::registry()
                .into_iter()
                .find(|l| &l.id == id && l.suite == args.suite)
                .ok_or_else(|| UsageError(format!("no law {id:?} in suite {}", args.suite)))?;
            let record = harness::run_law_by_id(&law.id, args.max_size).expect("law exists");
            harness::Report { suite: args.suite, bound: args.max_size, laws: vec![record] }
        }
        None => harness::run_suite(args.suite, args.max_size),
    };
    match args.format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => println!("{}", report.to_json()),
    }
    Ok(report.passed())
}

fn cmd_enumerate(args: &EnumerateArgs) -> Outcome {
    if let Some(n) = args.target.spaces {
        let spaces = spaces_of_size(n, !args.labelled)?;
        for s in &spaces {
            println!("{}", render_space(s));
        }
        let what = if args.labelled { "labelled spaces" } else { "homeomorphism classes" };
        println!("{} {what} on {n} points", spaces.len());
    } else if let Some(pair) = &args.target.maps {
        let a = Arc::new(parse_space(&pair[0]).map_err(|e| parse_error("space", &pair[0], e))?);
        let b = Arc::new(parse_space(&pair[1]).map_err(|e| parse_error("space", &pair[1], e))?);
        let maps = enumerate_maps(&a, &b);
        for f in &maps {
            let assignment: Vec<String> =
                (0..a.len()).map(|x| format!("{}↦{}", a.label(x), b.label(f.apply(x)))).collect();
            println!("{}    {}", assignment.join(" "), render_map(f));
        }
        println!("{} continuous maps", maps.len());
    }
    Ok(true)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_props(text: &str) -> Outcome {
    let x = Arc::new(parse_space(text).map_err(|e| parse_error("space", text, e))?);
    println!("space {}", render_space(&x));
    println!("direct:");
    for (p, holds) in space_properties(&x) {
        println!("  {:<24} {}", p.name(), yes_no(holds));
    }
    println!("through lifting:");
    let cat = FinTop::new();
    let mut oracles = map_oracles();
    oracles.verify(&cat, PROPS_INNER_BOUND);
    let opts = EvalOptions { inner_bound: Some(PROPS_INNER_BOUND), oracles: Some(&oracles) };
    let mut agree = true;
    for e in lifting_dictionary() {
        let Subject::Space(props) = e.subject else { continue };
        let compiled = e.compile(&cat, &opts)?;
        let out = compiled.space(&x);
        let direct = e.oracle_space(&x);
        let names: Vec<&str> = props.iter().map(|p| p.name()).collect();
        let scope = if out.definitive { "" } else { " (bounded)" };
        let flag = if out.holds == direct { "" } else { "  <- differs from direct" };
        if out.holds != direct && out.definitive && e.status == Status::Asserted {
            agree = false;
        }
        println!("  {:<36} {:<24} {}{scope}{flag}", e.id, names.join(", "), yes_no(out.holds));
    }
    Ok(agree)
}

/// A catalog name, or a path to a Cayley-table file.
fn group_arg(text: &str) -> Result<Arc<FiniteGroup>, UsageError> {
    if let Some(g) = fingrp::by_name(text) {
        return Ok(Arc::new(g));
    }
    let path = Path::new(text);
    if path.is_file() {
        let contents = std::fs::read_to_string(path)?;
        let name = path.file_stem().and_then(|s| s.to_str()).unwrap_or("G");
        return Ok(Arc::new(FiniteGroup::parse_table(name, &contents)?));
    }
    Err(fingrp::GroupError::Unknown(text.to_string()).into())
}

fn cmd_group(cmd: &GroupCommand) -> Outcome {
    match cmd {
        GroupCommand::List { max_order } => {
            let groups = fingrp::catalog(*max_order);
            for g in &groups {
                let kind = if g.is_abelian() { "abelian" } else { "non-abelian" };
                println!("{:<10} order {:>3}  {kind}", g.name(), g.order());
            }
            println!("{} groups", groups.len());
        }
        GroupCommand::Homs { g, h } => {
            let (g, h) = (group_arg(g)?, group_arg(h)?);
            let homs = fingrp::enumerate_homs(&g, &h)?;
            for (k, f) in homs.iter().enumerate() {
                let mut tags = Vec::new();
                if f.is_injective() {
                    tags.push("injective");
                }
                if f.is_surjective() {
                    tags.push("surjective");
                }
                println!("#{k:<4} {f}  {}", tags.join(" "));
            }
            println!("{} homomorphisms", homs.len());
        }
        GroupCommand::Lift { f, g } => {
            let (f, g) = (fingrp::parse_hom(f)?, fingrp::parse_hom(g)?);
            let res = FinGrp::new().lift(&f, &g);
            print_lift(&res, GroupHom::to_string);
            return Ok(res.holds);
        }
        GroupCommand::Props { g } => {
            let g = group_arg(g)?;
            println!("group {} of order {}", g.name(), g.order());
            println!("  {:<12} {}", "abelian", yes_no(g.is_abelian()));
            println!("  {:<12} {}", "nilpotent", yes_no(gro::is_nilpotent(&g)));
            println!("  {:<12} {}", "solvable", yes_no(gro::is_solvable(&g)));
            for p in [2, 3, 5, 7] {
                if gro::is_p_group(&g, p) && g.order() > 1 {
                    println!("  {:<12} yes", format!("{p}-group"));
                }
            }
            let gens: Vec<String> = g.generators().iter().map(|x| x.to_string()).collect();
            println!("  generators   {}", gens.join(", "));
            let orders: Vec<String> = g.order_profile().iter().map(|x| x.to_string()).collect();
            println!("  element orders {}", orders.join(" "));
        }
    }
    Ok(true)
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Lift { left, right, strict } => cmd_lift(left, right, *strict),
        Command::Class(args) => cmd_class(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Props { space } => cmd_props(space),
        Command::Group(cmd) => cmd_group(cmd),
    }
}

fn main() -> ExitCode {
    // die quietly when piped into `head`
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(n) = std::env::var("LIFTKIT_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
