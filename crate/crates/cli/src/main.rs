use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use tenselat::congfil::{self, enumerate_congruences, enumerate_tense_filters, TenseAlgebra};
use tenselat::drl::{validate_drl, validate_tense_drl, TenseDrl};
use tenselat::icrdl::{check_double_negation_hom, validate_icrdl, Icrdl};
use tenselat::kalman::{center, full_drl_algebra, kalman, roundtrip_drl, roundtrip_icrdl};
use tenselat::tense::{check_bakhshi_trl, check_glivenko_theorem, validate_tense_icrdl, with_derived_adjoints, TenseIcrdl};
use tenselat::term::{parse_equation, parse_term, Signature};
use tenselat::translate::{consequence_check_all, parse_query, tau_star, tau_star_eqs, SweepConfig, Translation};
use tenselat::{fixtures, load_algebra, Error, FiniteAlgebra, Report};

/// Finite-model toolkit for tense residuated lattices.
///
/// Algebra arguments are file paths, `-` for standard input, or `@name` for
/// a built-in fixture (remark34, remark34_printed, remark35, bool2).
#[derive(Parser)]
#[command(name = "tenselat", version)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Icrdl,
    TenseIcrdl,
    Bakhshi,
    Drl,
    TenseDrl,
    Glivenko,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TenseKind {
    TenseIcrdl,
    TenseDrl,
}

#[derive(Subcommand)]
enum Command {
    /// Run an axiom suite and print the report.
    Validate {
        input: String,
        #[arg(long = "as", value_enum, default_value_t = Kind::TenseIcrdl)]
        kind: Kind,
        /// Replace F and P by the adjoints computed from H and G.
        #[arg(long)]
        derive_adjoints: bool,
    },
    /// Print K(L) for a tense ICRDL-algebra L.
    Kalman {
        input: String,
        #[arg(long)]
        derive_adjoints: bool,
    },
    /// Print C(A) for a tense DRL-algebra A.
    Center { input: String },
    /// Verify the unit maps alpha or beta and their properties.
    Roundtrip {
        input: String,
        #[arg(long = "as", value_enum, default_value_t = TenseKind::TenseIcrdl)]
        kind: TenseKind,
    },
    /// List all congruences.
    Congruences {
        input: String,
        #[arg(long = "as", value_enum, default_value_t = TenseKind::TenseIcrdl)]
        kind: TenseKind,
        #[arg(long, env = "TENSELAT_MAX_SIZE")]
        max_size: Option<usize>,
    },
    /// List all tense filters.
    Filters {
        input: String,
        #[arg(long = "as", value_enum, default_value_t = TenseKind::TenseIcrdl)]
        kind: TenseKind,
        #[arg(long, env = "TENSELAT_MAX_SIZE")]
        max_size: Option<usize>,
    },
    /// Verify the congruence and tense filter correspondences.
    Correspondences {
        input: String,
        #[arg(long = "as", value_enum, default_value_t = TenseKind::TenseIcrdl)]
        kind: TenseKind,
        #[arg(long, env = "TENSELAT_MAX_SIZE")]
        max_size: Option<usize>,
    },
    /// Translate a tDRL query file, or one tDRL term or equation per line.
    Translate { input: String },
    /// Decide a query file over a registry of algebras.
    Check {
        query: String,
        /// Registry algebras, checked in the given order.
        #[arg(long, required = true, num_args = 1..)]
        registry: Vec<String>,
        /// Read the registry as tense ICRDL-algebras L and use K(L).
        #[arg(long)]
        kalman: bool,
    },
    /// Compare evaluation in K(L) with translated evaluation in L.
    Sweep {
        input: String,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(long, default_value_t = 2)]
        literal_depth: usize,
        #[arg(long, default_value_t = 2)]
        vars: usize,
        #[arg(long, default_value_t = 200)]
        random: usize,
        #[arg(long, default_value_t = 6)]
        random_depth: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

// Output goes through these so a closed pipe downstream is not a panic.
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        let _ = write!(std::io::stdout().lock(), $($t)*);
    }};
}

macro_rules! outln {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stdout().lock(), $($t)*);
    }};
}

/// Exit statuses.
const PASS: u8 = 0;
const FAILED: u8 = 1;
const USAGE: u8 = 2;
const VIOLATION: u8 = 3;

struct Failure {
    code: u8,
    message: String,
    report: Option<Report>,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let message = e.to_string();
        match e {
            Error::Invalid(r) => {
                let code = if r.has_violation() { VIOLATION } else { FAILED };
                Failure { code, message, report: Some(*r) }
            }
            Error::Violation(_) => Failure { code: VIOLATION, message, report: None },
            _ => Failure { code: USAGE, message, report: None },
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: USAGE, message: message.into(), report: None }
}

fn read_input(arg: &str) -> Result<String, Failure> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| usage(format!("stdin: {e}")))?;
        Ok(s)
    } else if let Some(name) = arg.strip_prefix('@') {
        fixtures::fixture(name)
            .map(str::to_string)
            .ok_or_else(|| usage(format!("no built-in fixture `{name}`")))
    } else {
        std::fs::read_to_string(arg).map_err(|e| usage(format!("{arg}: {e}")))
    }
}

fn read_algebra(arg: &str) -> Result<FiniteAlgebra, Failure> {
    Ok(load_algebra(&read_input(arg)?)?)
}

fn report_code(r: &Report) -> u8 {
    if r.has_violation() {
        VIOLATION
    } else if r.all_pass() {
        PASS
    } else {
        FAILED
    }
}

fn emit_report(format: Format, r: &Report) -> u8 {
    match format {
        Format::Text => out!("{r}"),
        Format::Json => outln!("{}", r.to_json()),
    }
    report_code(r)
}

fn emit_algebra(format: Format, alg: &FiniteAlgebra) -> u8 {
    match format {
        Format::Text => out!("{}", alg.to_source()),
        Format::Json => outln!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "name": alg.name(),
                "size": alg.size(),
                "source": alg.to_source(),
            }))
            .expect("json")
        ),
    }
    PASS
}

fn tense_icrdl(arg: &str, derive: bool) -> Result<TenseIcrdl, Failure> {
    let mut alg = read_algebra(arg)?;
    if derive {
        alg = with_derived_adjoints(alg)?;
    }
    Ok(TenseIcrdl::new(alg)?)
}

fn tense_drl(arg: &str) -> Result<TenseDrl, Failure> {
    Ok(TenseDrl::new(read_algebra(arg)?)?)
}

fn bound(max_size: Option<usize>) -> usize {
    max_size.unwrap_or_else(congfil::max_size)
}

fn validate(format: Format, input: &str, kind: Kind, derive: bool) -> Result<u8, Failure> {
    let mut alg = read_algebra(input)?;
    if derive {
        alg = with_derived_adjoints(alg)?;
    }
    let report = match kind {
        Kind::Icrdl => validate_icrdl(&alg)?,
        Kind::TenseIcrdl => validate_tense_icrdl(&alg)?,
        Kind::Drl => validate_drl(&alg)?,
        Kind::TenseDrl => validate_tense_drl(&alg)?,
        Kind::Bakhshi => {
            let base = Icrdl::new(alg)?;
            check_bakhshi_trl(&base)?.report
        }
        Kind::Glivenko => {
            let t = TenseIcrdl::new(alg)?;
            let mut r = check_glivenko_theorem(&t)?;
            r.extend(check_double_negation_hom(t.base())?);
            r
        }
    };
    Ok(emit_report(format, &report))
}

fn list<T>(
    format: Format,
    what: &str,
    items: &[T],
    names: &[String],
    render: impl Fn(&T, &[String]) -> String,
) -> u8 {
    let rendered: Vec<String> = items.iter().map(|x| render(x, names)).collect();
    match format {
        Format::Text => {
            outln!("{} {what}", rendered.len());
            for r in &rendered {
                outln!("  {r}");
            }
        }
        Format::Json => outln!(
            "{}",
            serde_json::to_string_pretty(&json!({ "count": rendered.len(), what: rendered })).expect("json")
        ),
    }
    PASS
}

fn enumerate<A: TenseAlgebra>(format: Format, a: &A, congruences: bool, bound: usize) -> Result<u8, Failure> {
    Ok(if congruences {
        let cons = enumerate_congruences(&a.full_algebra(), bound)?;
        list(format, "congruences", &cons, a.names(), |c, n| c.render(n))
    } else {
        let fils = enumerate_tense_filters(a, bound)?;
        list(format, "filters", &fils, a.names(), |f, n| f.render(n))
    })
}

fn translate(input: &str) -> Result<u8, Failure> {
    let text = read_input(input)?;
    let is_query = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .is_some_and(|l| l.starts_with("signature"));
    if is_query {
        out!("{}", parse_query(&text)?.translate()?.to_source());
        return Ok(PASS);
    }
    for (n, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let at_line = |e: tenselat::term::TermError| usage(format!("line {}: {e}", n + 1));
        if line.contains('=') {
            let eq = parse_equation(line, Signature::Tdrl).map_err(at_line)?;
            for e in tau_star_eqs(&[eq]).map_err(at_line)? {
                outln!("{e}");
            }
        } else {
            let t = parse_term(line, Signature::Tdrl).map_err(at_line)?;
            outln!("{}", tau_star(&t).map_err(at_line)?);
        }
    }
    Ok(PASS)
}

fn check(format: Format, query: &str, registry: &[String], use_kalman: bool) -> Result<u8, Failure> {
    let q = parse_query(&read_input(query)?)?;
    let mut algebras = Vec::new();
    for arg in registry {
        let alg = match (q.signature, use_kalman) {
            (Signature::Tdrl, true) => kalman(&tense_icrdl(arg, false)?)?.algebra().clone(),
            (Signature::Tdrl, false) => {
                let alg = read_algebra(arg)?;
                match TenseDrl::new(alg.clone()) {
                    Ok(d) => full_drl_algebra(&d),
                    Err(_) => alg,
                }
            }
            (Signature::Ticrl, false) => read_algebra(arg)?,
            (Signature::Ticrl, true) => return Err(usage("--kalman applies to tDRL queries only")),
        };
        algebras.push(alg);
    }
    let refs: Vec<&FiniteAlgebra> = algebras.iter().collect();
    let v = consequence_check_all(&refs, q.signature, &q.premises, &q.goals)?;
    match format {
        Format::Json => outln!("{}", serde_json::to_string_pretty(&v).expect("json")),
        Format::Text => match &v.countermodel {
            None => outln!("holds in all {} registry algebras", refs.len()),
            Some(cm) => {
                let vals: Vec<String> = cm.valuation.iter().map(|(k, x)| format!("{k} = {x}")).collect();
                outln!("fails in {}: {}", cm.algebra, vals.join(", "));
            }
        },
    }
    Ok(if v.verdict { PASS } else { FAILED })
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let format = cli.format;
    match cli.command {
        Command::Validate { input, kind, derive_adjoints } => validate(format, &input, kind, derive_adjoints),
        Command::Kalman { input, derive_adjoints } => {
            let k = kalman(&tense_icrdl(&input, derive_adjoints)?)?;
            Ok(emit_algebra(format, k.algebra()))
        }
        Command::Center { input } => {
            let c = center(&tense_drl(&input)?)?;
            Ok(emit_algebra(format, c.algebra.algebra()))
        }
        Command::Roundtrip { input, kind } => {
            let r = match kind {
                TenseKind::TenseIcrdl => roundtrip_icrdl(&tense_icrdl(&input, false)?)?,
                TenseKind::TenseDrl => roundtrip_drl(&tense_drl(&input)?)?,
            };
            Ok(emit_report(format, &r))
        }
        Command::Congruences { input, kind, max_size } => match kind {
            TenseKind::TenseIcrdl => enumerate(format, &tense_icrdl(&input, false)?, true, bound(max_size)),
            TenseKind::TenseDrl => enumerate(format, &tense_drl(&input)?, true, bound(max_size)),
        },
        Command::Filters { input, kind, max_size } => match kind {
            TenseKind::TenseIcrdl => enumerate(format, &tense_icrdl(&input, false)?, false, bound(max_size)),
            TenseKind::TenseDrl => enumerate(format, &tense_drl(&input)?, false, bound(max_size)),
        },
        Command::Correspondences { input, kind, max_size } => {
            let r = match kind {
                TenseKind::TenseIcrdl => congfil::correspondences_icrdl(&tense_icrdl(&input, false)?, bound(max_size))?,
                TenseKind::TenseDrl => congfil::correspondences_drl(&tense_drl(&input)?, bound(max_size))?,
            };
            Ok(emit_report(format, &r))
        }
        Command::Translate { input } => translate(&input),
        Command::Check { query, registry, kalman } => check(format, &query, &registry, kalman),
        Command::Sweep { input, depth, literal_depth, vars, random, random_depth, seed } => {
            let t = tense_icrdl(&input, false)?;
            let k = kalman(&t)?;
            let cfg = SweepConfig { depth, literal_depth, vars, random_terms: random, random_depth, seed };
            let r = Translation::new(&t, &k)?.sweep(&cfg)?;
            Ok(emit_report(format, &r))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    ExitCode::from(match run(cli) {
        Ok(code) => code,
        Err(f) => {
            if let Some(r) = &f.report {
                emit_report(format, r);
            }
            eprintln!("error: {}", f.message);
            f.code
        }
    })
}
