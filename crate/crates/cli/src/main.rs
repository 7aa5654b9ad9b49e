//! `monge`: command-line front end.
//!
//! Exit codes: 0 success, 1 input error, 2 a verification or claim failed,
//! 3 a prolongation reached its cap.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use monge_core::catalog::{catalog, make_fmn};
use monge_core::cohomology::{cohomology, Module};
use monge_core::extensions::{classify_pure_extensions, hilbert_cartan_chain, parabolic_tower};
use monge_core::geometry::{
    carnot_at_point, cartan_distribution, darboux_triples, derived_flag, model_symmetries, named_class,
    realize_extension_ode, realize_named, sample_point, symmetry_commutator_table, FlagMode, MongeEquation,
};
use monge_core::gnla::{check_gnla, describe_vector, Gnla};
use monge_core::reproduce::{expected_tanaka_sequence, run_suite};
use monge_core::tanaka::{prolong, Status};
use monge_core::CoreError;
use rayon::prelude::*;
use serde_json::{json, Value};
use symbolic::{format_rational, parse_rational, Rational};

#[derive(Parser)]
#[command(name = "monge", version, about = "Graded nilpotent Lie algebras of Monge equations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Worker threads for independent jobs; output does not depend on it.
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Build, look up or check algebras.
    #[command(subcommand)]
    Gnla(GnlaCmd),
    #[command(subcommand)]
    Tanaka(TanakaCmd),
    /// Graded cohomology of an algebra with trivial or adjoint coefficients.
    Cohomology {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long, default_value_t = 2)]
        degree: usize,
        #[arg(long, value_enum, default_value_t = ModuleKind::Trivial)]
        module: ModuleKind,
    },
    /// Central extensions and their realization.
    #[command(subcommand)]
    Ext(ExtCmd),
    /// Jet-space geometry of a Monge equation.
    #[command(subcommand)]
    Monge(MongeCmd),
    /// Admissible factor orders of Darboux-integrable pairs.
    Darboux {
        #[arg(value_parser = ["triples"], default_value = "triples")]
        what: String,
    },
    /// Run the acceptance checks.
    Reproduce {
        #[arg(long)]
        filter: Option<String>,
    },
}

#[derive(Args)]
struct AlgebraArg {
    /// `f:m,n`, a catalog name such as `p(6)` or `ell6`, or `@file.json`.
    #[arg(long)]
    algebra: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModuleKind {
    Trivial,
    Adjoint,
}

#[derive(Subcommand)]
enum GnlaCmd {
    /// Print `f(m,n)` as JSON.
    Make {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Print a catalog entry as JSON.
    Catalog { name: String },
    /// Check grading, Jacobi, purity and generation; exit 2 on a violation.
    Check {
        /// Same forms as `--algebra`; a bare path is read as JSON.
        algebra: String,
    },
}

#[derive(Subcommand)]
enum TanakaCmd {
    Prolong {
        #[command(flatten)]
        algebra: AlgebraArg,
        /// Highest grade to compute.
        #[arg(long)]
        cap: Option<i32>,
    },
    /// Tanaka dimensions of `f(m,n)` for `1 <= m <= n`, checked against the closed form.
    Grid {
        #[arg(long, default_value_t = 6)]
        mmax: usize,
        #[arg(long, default_value_t = 6)]
        nmax: usize,
    },
}

#[derive(Subcommand)]
enum ExtCmd {
    /// Gauge classes of pure central extensions in one grading.
    Classify {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long)]
        grading: i32,
    },
    /// Realize a named class of the `(m,n)` model as an ODE system.
    Realize {
        /// `m,n`
        #[arg(long, default_value = "1,2")]
        model: String,
        /// `par`, `hyp` or `ell`; with another model, a grading picks all classes there.
        #[arg(long)]
        class: Option<String>,
        #[arg(long)]
        grading: Option<i32>,
    },
    /// Maximal-grading extensions of `p(n)` for `5 <= n <= nmax`.
    Tower {
        #[arg(long, default_value_t = 12)]
        nmax: usize,
    },
    /// Successive top-grade quotients down to the `(2,1,2)` algebra.
    Chain {
        #[command(flatten)]
        algebra: AlgebraArg,
    },
}

#[derive(Args)]
struct EquationArg {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
    /// Right side in `x, y0.., z0..`; defaults to the model `z{n}^2`.
    #[arg(long = "rhs")]
    rhs: Option<String>,
    /// Comma-separated rational coordinates; defaults to the sample point.
    #[arg(long)]
    point: Option<String>,
}

#[derive(Subcommand)]
enum MongeCmd {
    Flag {
        #[command(flatten)]
        eq: EquationArg,
        #[arg(long, value_enum, default_value_t = Mode::Weak)]
        mode: Mode,
    },
    Carnot {
        #[command(flatten)]
        eq: EquationArg,
    },
    /// Symmetry generators of the model and their commutator table.
    Symmetries {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Weak,
    Strong,
}

/// What a command produced: a human table, a JSON value and an exit code.
struct Output {
    table: String,
    json: Value,
    code: u8,
}

impl Output {
    fn ok(table: String, json: Value) -> Output {
        Output { table, json, code: 0 }
    }
}

fn input_error(msg: impl Into<String>) -> CoreError {
    CoreError::InvalidInput(msg.into())
}

fn exit_code(e: &CoreError) -> u8 {
    match e {
        CoreError::Verification(_) | CoreError::PotentialBound { .. } => 2,
        _ => 1,
    }
}

fn load_algebra(spec: &str) -> Result<Gnla, CoreError> {
    let path = spec.strip_prefix('@').or_else(|| spec.ends_with(".json").then_some(spec));
    match path {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| input_error(format!("{path}: {e}")))?;
            Gnla::from_json(&text)
        }
        None => catalog(spec),
    }
}

fn parse_pair(s: &str) -> Result<(usize, usize), CoreError> {
    let v: Option<Vec<usize>> = s.split(',').map(|t| t.trim().parse().ok()).collect();
    match v.as_deref() {
        Some(&[m, n]) => Ok((m, n)),
        _ => Err(input_error(format!("expected m,n, got {s:?}"))),
    }
}

fn equation(arg: &EquationArg) -> Result<(MongeEquation, Vec<Rational>), CoreError> {
    let eq = match &arg.rhs {
        Some(f) => MongeEquation::parse(arg.m, arg.n, f)?,
        None => MongeEquation::model(arg.m, arg.n)?,
    };
    let point = match &arg.point {
        Some(s) => {
            let p: Vec<Rational> =
                s.split(',').map(|t| parse_rational(t.trim())).collect::<Result<_, _>>().map_err(|e| input_error(e.to_string()))?;
            if p.len() != eq.dim() {
                return Err(input_error(format!("point needs {} coordinates", eq.dim())));
            }
            p
        }
        None => sample_point(eq.chart(), 0),
    };
    Ok((eq, point))
}

fn algebra_json(a: &Gnla) -> Value {
    serde_json::to_value(a.to_json_value()).expect("serializable")
}

fn algebra_table(a: &Gnla) -> String {
    let mut s = String::new();
    if let Some(tag) = a.tag() {
        let _ = writeln!(s, "{tag}");
    }
    for g in a.grades() {
        let names: Vec<&str> = a.indices_of_grade(g).into_iter().map(|i| a.name(i)).collect();
        let _ = writeln!(s, "grade {g:>3}: {}", names.join(" "));
    }
    for (&(i, j), v) in a.brackets() {
        let _ = writeln!(s, "[{}, {}] = {}", a.name(i), a.name(j), a.describe(v));
    }
    s
}

fn run(cli: &Cli) -> Result<Output, CoreError> {
    match &cli.command {
        Command::Gnla(cmd) => gnla(cmd),
        Command::Tanaka(cmd) => tanaka(cmd),
        Command::Cohomology { algebra, degree, module } => {
            let a = load_algebra(&algebra.algebra)?;
            let module = match module {
                ModuleKind::Trivial => Module::trivial(&a),
                ModuleKind::Adjoint => Module::adjoint(&a),
            };
            let report = cohomology(&a, &module, *degree);
            let j = report.to_json(&a, &module);
            let mut t = format!("{:>8} {:>5} {:>5} {:>5}\n", "grading", "Z", "B", "H");
            for (w, p) in &j.by_grading {
                let _ = writeln!(t, "{w:>8} {:>5} {:>5} {:>5}", p.z, p.b, p.h);
            }
            let _ = writeln!(t, "total {}", j.total);
            Ok(Output::ok(t, serde_json::to_value(j).expect("serializable")))
        }
        Command::Ext(cmd) => ext(cmd),
        Command::Monge(cmd) => monge(cmd),
        Command::Darboux { .. } => {
            let all = darboux_triples();
            let mut t = format!("{:>3} {:>3} {:>3}\n", "m1", "m2", "k");
            for d in &all {
                let _ = writeln!(t, "{:>3} {:>3} {:>3}", d.m1, d.m2, d.k);
            }
            let _ = writeln!(t, "{} triples", all.len());
            Ok(Output::ok(t, json!({ "count": all.len(), "triples": all })))
        }
        Command::Reproduce { filter } => {
            let results = run_suite(filter.as_deref());
            if results.is_empty() {
                return Err(input_error(format!("no criterion matches {filter:?}")));
            }
            let mut t = String::new();
            for r in &results {
                let _ = writeln!(t, "{}", r.line());
                if let (false, Some(why)) = (r.outcome.passed, r.known_failure) {
                    let _ = writeln!(t, "  known failure: {why}");
                }
            }
            let rows: Vec<Value> = results
                .iter()
                .map(|r| {
                    json!({ "id": r.id, "title": r.title, "status": r.status(), "detail": r.outcome.detail,
                            "knownFailure": r.known_failure })
                })
                .collect();
            let code = if results.iter().all(|r| r.as_expected()) { 0 } else { 2 };
            Ok(Output { table: t, json: Value::Array(rows), code })
        }
    }
}

fn gnla(cmd: &GnlaCmd) -> Result<Output, CoreError> {
    match cmd {
        GnlaCmd::Make { m, n } => {
            let a = make_fmn(*m, *n)?;
            Ok(Output::ok(a.to_json(), algebra_json(&a)))
        }
        GnlaCmd::Catalog { name } => {
            let a = catalog(name)?;
            Ok(Output::ok(a.to_json(), algebra_json(&a)))
        }
        GnlaCmd::Check { algebra } => {
            let a = load_algebra(algebra)?;
            let r = check_gnla(&a);
            let mut t = String::new();
            for (name, ok) in [
                ("grading", r.grading_ok),
                ("pure", r.pure),
                ("jacobi", r.jacobi_ok),
                ("fundamental", r.fundamental),
                ("nilpotent", r.nilpotent),
            ] {
                let _ = writeln!(t, "{name:<12} {}", if ok { "ok" } else { "FAIL" });
            }
            for v in &r.violations {
                let _ = writeln!(t, "  {v}");
            }
            let code = if r.all_ok() { 0 } else { 2 };
            Ok(Output { table: t, json: serde_json::to_value(&r).expect("serializable"), code })
        }
    }
}

fn tanaka(cmd: &TanakaCmd) -> Result<Output, CoreError> {
    match cmd {
        TanakaCmd::Prolong { algebra, cap } => {
            let a = load_algebra(&algebra.algebra)?;
            let r = prolong(&a, *cap)?;
            let mut t = String::new();
            for (g, d) in r.graded_dims() {
                let _ = writeln!(t, "grade {g:>3}: {d}");
            }
            match r.status {
                Status::Finite(k) => {
                    let _ = writeln!(t, "finite, top grade {k}, dim {}", r.total_dim());
                }
                Status::CappedAt(k) => {
                    let _ = writeln!(t, "capped at grade {k}; nonnegative dims {:?}", r.nonnegative_dims());
                }
            }
            let code = if r.is_finite() { 0 } else { 3 };
            Ok(Output { table: t, json: serde_json::to_value(r.to_json()).expect("serializable"), code })
        }
        TanakaCmd::Grid { mmax, nmax } => {
            let cases: Vec<(usize, usize)> =
                (1..=*nmax).flat_map(|n| (1..=n.min(*mmax)).map(move |m| (m, n))).collect();
            // results come back in input order
            let rows: Vec<(usize, usize, Option<usize>, Vec<usize>)> = cases
                .par_iter()
                .map(|&(m, n)| {
                    let r = prolong(&make_fmn(m, n)?, None)?;
                    Ok((m, n, r.is_finite().then(|| r.total_dim()), r.graded_sequence()))
                })
                .collect::<Result<_, CoreError>>()?;
            let mut t = format!("{:>3} {:>3} {:>6} {:>9}  sequence\n", "m", "n", "dim", "expected");
            let mut out = Vec::new();
            let mut mismatch = false;
            for (m, n, dim, seq) in rows {
                let exceptional = m == 1 && n <= 2;
                let expected = (!exceptional).then(|| if m == 1 { 2 * n + 5 } else { 2 * n + 4 });
                let ok = exceptional || (dim == expected && seq == expected_tanaka_sequence(m, n));
                mismatch |= !ok;
                let show = |d: Option<usize>| d.map_or("-".to_string(), |d| d.to_string());
                let _ = writeln!(
                    t,
                    "{m:>3} {n:>3} {:>6} {:>9}  {seq:?}{}",
                    show(dim),
                    show(expected),
                    if ok { "" } else { "  MISMATCH" }
                );
                out.push(json!({ "m": m, "n": n, "dim": dim, "expected": expected, "sequence": seq, "ok": ok }));
            }
            Ok(Output { table: t, json: Value::Array(out), code: if mismatch { 2 } else { 0 } })
        }
    }
}

fn ext(cmd: &ExtCmd) -> Result<Output, CoreError> {
    match cmd {
        ExtCmd::Classify { algebra, grading } => {
            let a = load_algebra(&algebra.algebra)?;
            let classes = classify_pure_extensions(&a, *grading)?;
            let mut t = format!("{} classes in grading {grading}\n", classes.len());
            for (i, c) in classes.iter().enumerate() {
                let class: Vec<String> = c.class.iter().map(format_rational).collect();
                let _ = writeln!(
                    t,
                    "{i}: [{}] orbit {} profile {} tanaka {} match {}{}",
                    class.join(", "),
                    c.orbit_dim,
                    c.profile,
                    c.fingerprint.tanaka_label(),
                    c.matched.as_deref().unwrap_or("-"),
                    if c.unseparated { " (unseparated)" } else { "" }
                );
            }
            Ok(Output::ok(t, serde_json::to_value(&classes).expect("serializable")))
        }
        ExtCmd::Realize { model, class, grading } => {
            let (m, n) = parse_pair(model)?;
            let r = match (class, grading) {
                (Some(c), None) if (m, n) == (1, 2) => {
                    named_class(c)?;
                    realize_named(c)?
                }
                (None, Some(k)) => {
                    let a = make_fmn(m, n)?;
                    let piece = monge_core::cohomology::h2_piece(&a, *k);
                    if piece.h() == 0 {
                        return Err(input_error(format!("H^2 of f({m},{n}) vanishes in grading {k}")));
                    }
                    realize_extension_ode(m, n, *k, &piece.reps)?
                }
                _ => return Err(input_error("give --class for the (1,2) model, or --grading")),
            };
            let j = r.to_json_value();
            let mut t = String::new();
            for line in &j.system {
                let _ = writeln!(t, "{line}");
            }
            let _ = writeln!(t, "beta: {}", j.beta);
            let _ = writeln!(t, "fingerprint match: {}", j.fingerprint_match.as_deref().unwrap_or("-"));
            let _ = writeln!(t, "symbol agrees: {}", j.symbol_agrees);
            let code = if r.symbol_agrees() { 0 } else { 2 };
            Ok(Output { table: t, json: serde_json::to_value(j).expect("serializable"), code })
        }
        ExtCmd::Tower { nmax } => {
            let rows = parabolic_tower(*nmax)?;
            let mut t = format!("{:>3} {:>6} {:>6} {:>4} {:>7} {:>8}\n", "n", "Z2max", "H2max", "ext", "t(p)", "t(p')");
            let show = |d: Option<usize>| d.map_or("-".to_string(), |d| d.to_string());
            for r in &rows {
                let _ = writeln!(
                    t,
                    "{:>3} {:>6} {:>6} {:>4} {:>7} {:>8}",
                    r.n,
                    r.z2_max,
                    r.h2_max,
                    r.extensions,
                    show(r.tanaka_p_next),
                    show(r.tanaka_pprime_next)
                );
            }
            Ok(Output::ok(t, serde_json::to_value(&rows).expect("serializable")))
        }
        ExtCmd::Chain { algebra } => {
            let chain = hilbert_cartan_chain(&load_algebra(&algebra.algebra)?)?;
            let t = chain
                .iter()
                .map(|a| format!("dim {:>2}: {:?}", a.dim(), a.grade_profile().by_depth()))
                .collect::<Vec<_>>()
                .join("\n")
                + "\n";
            Ok(Output::ok(t, Value::Array(chain.iter().map(algebra_json).collect())))
        }
    }
}

fn monge(cmd: &MongeCmd) -> Result<Output, CoreError> {
    match cmd {
        MongeCmd::Flag { eq, mode } => {
            let (e, p) = equation(eq)?;
            let mode = match mode {
                Mode::Weak => FlagMode::Weak,
                Mode::Strong => FlagMode::Strong,
            };
            let f = derived_flag(&cartan_distribution(&e), &p, mode, e.dim() + 1)?;
            let t = format!("growth {:?}\nranks {:?}\n", f.growth, f.ranks);
            Ok(Output::ok(t, serde_json::to_value(f.to_json_value()).expect("serializable")))
        }
        MongeCmd::Carnot { eq } => {
            let (e, p) = equation(eq)?;
            let c = carnot_at_point(&cartan_distribution(&e), &p)?;
            Ok(Output::ok(algebra_table(&c.algebra), algebra_json(&c.algebra)))
        }
        MongeCmd::Symmetries { m, n } => {
            let gens = model_symmetries(*m, *n)?;
            let table = symmetry_commutator_table(*m, *n)?;
            let mut t = String::new();
            for (name, v) in &gens {
                let _ = writeln!(t, "{name} = {v}");
            }
            let name = |k: usize| table.names[k].clone();
            let mut brackets = BTreeMap::new();
            for (&(i, j), v) in &table.brackets {
                let s = describe_vector(v, name);
                let _ = writeln!(t, "[{}, {}] = {s}", table.names[i], table.names[j]);
                brackets.insert(format!("[{},{}]", table.names[i], table.names[j]), s);
            }
            let _ = writeln!(t, "{} generators, table {}", gens.len(), if table.matches() { "matches" } else { "MISMATCH" });
            for mm in &table.mismatches {
                let _ = writeln!(t, "  {mm}");
            }
            let j = json!({
                "generators": gens.iter().map(|(n, v)| json!({ "name": n, "field": v.to_string() })).collect::<Vec<_>>(),
                "brackets": brackets,
                "closed": table.closed,
                "mismatches": table.mismatches,
            });
            Ok(Output { table: t, json: j, code: if table.matches() { 0 } else { 2 } })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match run(&cli) {
        Ok(out) => {
            match cli.format {
                Format::Table => print!("{}", out.table),
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable")),
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
