//! Batch command-line front end.
//!
//! `run` takes the argument vector and returns the exit code together with
//! everything that would go to stdout and stderr, so the binary is a thin
//! wrapper and the whole surface is testable in-process.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bundles::{
    abelian_pbundle, default_surface, projectivization_chern, BundleModel, SurfaceModel,
};
use crate::cobordism::{
    c1_cn1_functional, c1_power_functional, cp_class, product, s_functional, s_number,
    CobordismClass, Functional,
};
use crate::error::{Error, Result};
use crate::genus::{
    chi_p_functionals, chi_y, chi_y_functional, euler_functional, l_genus_functional,
    pontryagin_functionals, todd_functional, Poly,
};
use crate::json::{from_json, poly_to_strings, to_json};
use crate::linalg::Subspace;
use crate::rational::{int, parse_pq, to_pq, to_short, Rational};
use crate::symfun::{enumerate_partitions, Partition};
use crate::verifier::{
    beta_sequence, chi_span_certificate, cp_sequence, gamma_sequence, unboundedness_demo,
    verify_generators, verify_theorem, GeneratorSequence, IdealKind, VerificationReport,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(
    name = "cobordism-calc",
    version,
    about = "Exact Chern-number calculator for the rational complex cobordism ring"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write the result to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// c_1^2 of the base surface X used for the beta generators.
    #[arg(long, global = true, default_value = "152", value_parser = rational_arg, allow_hyphen_values = true)]
    surface_c1sq: Rational,
    /// c_2 of the base surface X.
    #[arg(long, global = true, default_value = "100", value_parser = rational_arg, allow_hyphen_values = true)]
    surface_c2: Rational,
    /// c_2 of the bundles over X in the beta generators.
    #[arg(long, global = true, default_value = "248", value_parser = rational_arg, allow_hyphen_values = true)]
    twist_c: Rational,
    /// c_2 of the bundles over the abelian surface in the gamma generators.
    #[arg(long, global = true, default_value = "-1", value_parser = rational_arg, allow_hyphen_values = true)]
    gamma_c: Rational,
    /// Worker threads for independent verify targets.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: u16,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the partitions of n in canonical order.
    Partitions { n: usize },
    /// Build a class from a spec or keyword form and print its Chern numbers.
    Class(Box<ClassArgs>),
    /// Product of two classes.
    Product { a: String, b: String },
    /// The s-number of a class.
    SNumber { spec: String },
    /// Evaluate a genus on a class.
    Genus {
        #[arg(value_enum)]
        name: GenusName,
        #[arg(long)]
        class: String,
    },
    #[command(subcommand)]
    Verify(VerifyCommand),
    #[command(subcommand)]
    Demo(DemoCommand),
}

#[derive(Args, Debug)]
struct ClassArgs {
    /// `cp:<n>`, `surface:<a>,<b>`, `pbundle:<a>,<b>,<c>,<rank>`,
    /// `abelian:<c>,<rank>`, `file:<path>`, or one of the keywords
    /// cp, surface, pbundle, abelian with the options below.
    spec: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    c1sq: Option<Rational>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    c2: Option<Rational>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    base_c1sq: Option<Rational>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    base_c2: Option<Rational>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    c2e: Option<Rational>,
    #[arg(long)]
    rank: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GenusName {
    Todd,
    ChiY,
    Signature,
    Euler,
    Pontryagin,
}

#[derive(Subcommand, Debug)]
enum VerifyCommand {
    /// Generator criterion and basis check for the beta and gamma sequences.
    Generators {
        #[arg(long, default_value_t = 8)]
        max_dim: usize,
    },
    /// Compare an ideal's annihilator with the expected invariants.
    Theorem {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        dim: usize,
        /// Generator family; `auto` uses gamma for betti and beta otherwise.
        #[arg(long, value_enum, default_value_t = Family::Auto)]
        generators: Family,
    },
    /// Run every check up to the given dimension.
    All {
        #[arg(long, default_value_t = 8)]
        max_dim: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Auto,
    Beta,
    Gamma,
    Cp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Do,
    D,
    H,
    Betti,
}

impl From<KindArg> for IdealKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Do => IdealKind::Do,
            KindArg::D => IdealKind::D,
            KindArg::H => IdealKind::H,
            KindArg::Betti => IdealKind::I,
        }
    }
}

#[derive(Subcommand, Debug)]
enum DemoCommand {
    /// Tabulate a functional on finite coverings of a chi_y-kernel class.
    Unbounded {
        /// c1-power, s-number, c1-cn1, euler, todd, signature, chi_<p>, or coord:<parts>.
        #[arg(long)]
        functional: String,
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long, value_delimiter = ',', default_value = "1,2,4,8")]
        degrees: Vec<u64>,
    },
}

fn rational_arg(s: &str) -> std::result::Result<Rational, String> {
    parse_pq(s).map_err(|e| e.to_string())
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = std::result::Result<String, Failure>;

/// Parses and executes one invocation.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let mut rendered = e.render().to_string();
            if e.use_stderr() && !rendered.contains("Usage:") {
                rendered = format!(
                    "{}\n{}\n",
                    rendered.trim_end(),
                    Cli::command().render_usage()
                );
            }
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: rendered,
                    stderr: String::new(),
                }
            };
        }
    };
    let (code, body) = match execute(&cli) {
        Ok(body) => (EXIT_OK, body),
        Err(Failure::Verification(body)) => (EXIT_FAILED, body),
        Err(Failure::Usage(msg)) => {
            return usage_error(&msg);
        }
    };
    match &cli.output {
        Some(path) => match std::fs::write(path, &body) {
            Ok(()) => Outcome {
                code,
                stdout: String::new(),
                stderr: String::new(),
            },
            Err(e) => usage_error(&format!("cannot write {}: {e}", path.display())),
        },
        None => Outcome {
            code,
            stdout: body,
            stderr: String::new(),
        },
    }
}

fn usage_error(msg: &str) -> Outcome {
    let line = msg.lines().next().unwrap_or_default();
    Outcome {
        code: EXIT_USAGE,
        stdout: String::new(),
        stderr: format!("error: {line}\n\n{}\n", Cli::command().render_usage()),
    }
}

fn execute(cli: &Cli) -> CmdResult {
    let fmt = cli.format;
    match &cli.command {
        Command::Partitions { n } => Ok(render_partitions(*n, fmt)),
        Command::Class(args) => Ok(render_class(&class_from_args(args)?, fmt)),
        Command::Product { a, b } => {
            let x = product(&parse_class_spec(a)?, &parse_class_spec(b)?);
            Ok(render_class(&x, fmt))
        }
        Command::SNumber { spec } => {
            let x = parse_class_spec(spec)?;
            let s = s_number(&x)?;
            Ok(render_scalar("s-number", x.dim(), &s, fmt))
        }
        Command::Genus { name, class } => genus_command(*name, &parse_class_spec(class)?, fmt),
        Command::Verify(v) => {
            let params = Params::from_cli(cli)?;
            match v {
                VerifyCommand::Generators { max_dim } => {
                    verify_generators_command(&params, *max_dim, fmt)
                }
                VerifyCommand::Theorem {
                    kind,
                    dim,
                    generators,
                } => verify_theorem_command(&params, (*kind).into(), *dim, *generators, fmt),
                VerifyCommand::All { max_dim } => {
                    verify_all_command(&params, *max_dim, cli.jobs as usize, fmt)
                }
            }
        }
        Command::Demo(DemoCommand::Unbounded {
            functional,
            dim,
            degrees,
        }) => {
            let f = parse_functional(functional, *dim)?;
            let g = gamma_sequence(&cli.gamma_c, f.dim())?;
            let report = match unboundedness_demo(&f, &g, degrees) {
                Err(Error::MemberOfChiSpan { certificate }) => {
                    let coeffs: Vec<String> = certificate.iter().map(to_pq).collect();
                    return Err(Failure::Usage(format!(
                        "functional lies in the span of chi_0..chi_{}; coefficients [{}]",
                        coeffs.len() - 1,
                        coeffs.join(", ")
                    )));
                }
                other => other?,
            };
            Ok(match fmt {
                Format::Json => json_line(&report),
                Format::Table => {
                    let mut out = String::new();
                    let _ = writeln!(out, "functional {} (dim {})", functional_name(&f), f.dim());
                    let _ = writeln!(
                        out,
                        "witness gamma_{}  f = {}",
                        report.witness,
                        to_short(&report.base_value)
                    );
                    let rows: Vec<(String, String)> = report
                        .values
                        .iter()
                        .map(|(d, v)| (d.to_string(), to_short(v)))
                        .collect();
                    out.push_str(&table(("d", "value"), &rows));
                    let _ = writeln!(
                        out,
                        "linear: {}",
                        if report.linear() { "yes" } else { "no" }
                    );
                    out
                }
            })
        }
    }
}

/// Parses the class grammar used on the command line.
pub fn parse_class_spec(spec: &str) -> Result<CobordismClass> {
    let bad = |why: &str| Error::invalid(format!("bad class spec {spec:?}: {why}"));
    let (head, rest) = spec
        .split_once(':')
        .ok_or_else(|| bad("expected <kind>:<args>"))?;
    if head == "file" {
        let text = std::fs::read_to_string(rest)
            .map_err(|e| Error::invalid(format!("cannot read {rest}: {e}")))?;
        return from_json(&text);
    }
    let fields: Vec<&str> = rest.split(',').collect();
    let count = |k: usize| {
        if fields.len() == k {
            Ok(())
        } else {
            Err(bad(&format!("{head} takes {k} argument(s)")))
        }
    };
    let rank = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| bad("rank must be a non-negative integer"))
    };
    match head {
        "cp" => {
            count(1)?;
            let n = fields[0]
                .trim()
                .parse::<usize>()
                .map_err(|_| bad("dimension must be a non-negative integer"))?;
            Ok(cp_class(n))
        }
        "surface" => {
            count(2)?;
            Ok(SurfaceModel::new(parse_pq(fields[0])?, parse_pq(fields[1])?).to_class())
        }
        "pbundle" => {
            count(4)?;
            let s = SurfaceModel::new(parse_pq(fields[0])?, parse_pq(fields[1])?);
            let e = BundleModel::new(rank(fields[3])?, parse_pq(fields[2])?)?;
            projectivization_chern(&s, &e)
        }
        "abelian" => {
            count(2)?;
            abelian_pbundle(rank(fields[1])?, parse_pq(fields[0])?)
        }
        _ => Err(bad("unknown kind")),
    }
}

fn class_from_args(a: &ClassArgs) -> Result<CobordismClass> {
    let given: Vec<(&str, bool)> = vec![
        ("--n", a.n.is_some()),
        ("--c1sq", a.c1sq.is_some()),
        ("--c2", a.c2.is_some()),
        ("--base-c1sq", a.base_c1sq.is_some()),
        ("--base-c2", a.base_c2.is_some()),
        ("--c2e", a.c2e.is_some()),
        ("--rank", a.rank.is_some()),
    ];
    let allowed: &[&str] = match a.spec.as_str() {
        "cp" => &["--n"],
        "surface" => &["--c1sq", "--c2"],
        "pbundle" => &["--base-c1sq", "--base-c2", "--c2e", "--rank"],
        "abelian" => &["--c2e", "--rank"],
        _ => &[],
    };
    for (flag, set) in &given {
        if *set && !allowed.contains(flag) {
            return Err(Error::invalid(format!(
                "option {flag} does not apply to class {:?}",
                a.spec
            )));
        }
    }
    fn need<T: Clone>(v: &Option<T>, flag: &str) -> Result<T> {
        v.clone()
            .ok_or_else(|| Error::invalid(format!("missing {flag}")))
    }
    match a.spec.as_str() {
        "cp" => Ok(cp_class(need(&a.n, "--n")?)),
        "surface" => {
            Ok(SurfaceModel::new(need(&a.c1sq, "--c1sq")?, need(&a.c2, "--c2")?).to_class())
        }
        "pbundle" => {
            let s = SurfaceModel::new(
                need(&a.base_c1sq, "--base-c1sq")?,
                need(&a.base_c2, "--base-c2")?,
            );
            projectivization_chern(
                &s,
                &BundleModel::new(need(&a.rank, "--rank")?, need(&a.c2e, "--c2e")?)?,
            )
        }
        "abelian" => abelian_pbundle(need(&a.rank, "--rank")?, need(&a.c2e, "--c2e")?),
        spec => parse_class_spec(spec),
    }
}

/// Named functionals accepted by the demo.
fn parse_functional(name: &str, dim: Option<usize>) -> Result<Functional> {
    if let Some(parts) = name.strip_prefix("coord:") {
        let parts = parts
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::invalid(format!("bad partition in {name:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let lambda = Partition::new(parts)?;
        if let Some(n) = dim {
            if n != lambda.weight() {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: lambda.weight(),
                });
            }
        }
        return Ok(Functional::coordinate(&lambda).with_label(format!("c{lambda}")));
    }
    let n = dim.ok_or_else(|| Error::invalid(format!("functional {name:?} needs --dim")))?;
    if n == 0 {
        return Err(Error::invalid("--dim must be positive"));
    }
    if let Some(p) = name.strip_prefix("chi_") {
        let p: usize = p
            .parse()
            .map_err(|_| Error::invalid(format!("bad functional {name:?}")))?;
        return chi_p_functionals(n)?
            .into_iter()
            .nth(p)
            .ok_or_else(|| Error::invalid(format!("chi_{p} needs p <= {n}")));
    }
    match name {
        "c1-power" => Ok(c1_power_functional(n).with_label("c1-power")),
        "s-number" => Ok(s_functional(n)?.with_label("s-number")),
        "c1-cn1" => Ok(c1_cn1_functional(n)?.with_label("c1-cn1")),
        "euler" => Ok(euler_functional(n)?.with_label("euler")),
        "todd" => Ok(todd_functional(n)?.with_label("todd")),
        "signature" => Ok(l_genus_functional(n)?.with_label("signature")),
        _ => Err(Error::invalid(format!("unknown functional {name:?}"))),
    }
}

fn functional_name(f: &Functional) -> String {
    f.label().map(str::to_string).unwrap_or_else(|| "f".into())
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = to_json(value);
    s.push('\n');
    s
}

/// Left column left-aligned, right column right-aligned.
fn table(header: (&str, &str), rows: &[(String, String)]) -> String {
    let w0 = rows
        .iter()
        .map(|r| r.0.len())
        .chain([header.0.len()])
        .max()
        .unwrap_or(0);
    let w1 = rows
        .iter()
        .map(|r| r.1.len())
        .chain([header.1.len()])
        .max()
        .unwrap_or(0);
    let mut out = format!("{:<w0$}  {:>w1$}\n", header.0, header.1);
    for (a, b) in rows {
        let _ = writeln!(out, "{a:<w0$}  {b:>w1$}");
    }
    out
}

fn render_partitions(n: usize, fmt: Format) -> String {
    let parts = enumerate_partitions(n);
    match fmt {
        Format::Json => {
            let v: Vec<&[usize]> = parts.iter().map(Partition::parts).collect();
            json_line(&v)
        }
        Format::Table => parts.iter().map(|p| format!("{p}\n")).collect(),
    }
}

fn render_class(x: &CobordismClass, fmt: Format) -> String {
    match fmt {
        Format::Json => json_line(x),
        Format::Table => {
            let mut out = match x.label() {
                Some(l) => format!("{l}, dim {}\n", x.dim()),
                None => format!("dim {}\n", x.dim()),
            };
            let rows: Vec<(String, String)> = enumerate_partitions(x.dim())
                .iter()
                .map(|p| (format!("c{p}"), to_short(&x.chern_number(p))))
                .collect();
            out.push_str(&table(("chern", "value"), &rows));
            out
        }
    }
}

fn render_scalar(name: &str, dim: usize, v: &Rational, fmt: Format) -> String {
    match fmt {
        Format::Json => json_line(&json!({ "quantity": name, "dim": dim, "value": to_pq(v) })),
        Format::Table => format!("{}\n", to_short(v)),
    }
}

fn render_poly(name: &str, dim: usize, p: &Poly, fmt: Format) -> String {
    match fmt {
        Format::Json => {
            json_line(&json!({ "genus": name, "dim": dim, "coeffs": poly_to_strings(p) }))
        }
        Format::Table => format!("{p}\n"),
    }
}

/// `c(3) - 2 c(2,1)` style rendering of a functional.
fn render_terms(f: &Functional) -> String {
    let mut out = String::new();
    for lambda in enumerate_partitions(f.dim()) {
        let c = f.coeff(&lambda);
        if c.is_zero() {
            continue;
        }
        let neg = c < Rational::zero();
        let mag = if neg { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !mag.is_one() {
            let _ = write!(out, "{} ", to_short(&mag));
        }
        let _ = write!(out, "c{lambda}");
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn genus_command(name: GenusName, x: &CobordismClass, fmt: Format) -> CmdResult {
    let n = x.dim();
    let scalar =
        |label: &str, f: Functional| -> CmdResult { Ok(render_scalar(label, n, &f.eval(x)?, fmt)) };
    match name {
        GenusName::ChiY => Ok(render_poly("chi-y", n, &chi_y(x)?, fmt)),
        GenusName::Todd if n == 0 => Ok(render_scalar(
            "todd",
            0,
            &x.chern_number(&Partition::empty()),
            fmt,
        )),
        GenusName::Signature if n == 0 => Ok(render_scalar(
            "signature",
            0,
            &x.chern_number(&Partition::empty()),
            fmt,
        )),
        GenusName::Todd => scalar("todd", todd_functional(n)?),
        GenusName::Signature => scalar("signature", l_genus_functional(n)?),
        GenusName::Euler => scalar("euler", euler_functional(n)?),
        GenusName::Pontryagin => {
            let values = pontryagin_functionals(n)?
                .into_iter()
                .map(|(p, f)| Ok((p, f.eval(x)?)))
                .collect::<Result<Vec<_>>>()?;
            Ok(match fmt {
                Format::Json => {
                    let map: serde_json::Map<String, Value> = values
                        .iter()
                        .rev()
                        .map(|(p, v)| (p.to_key(), Value::String(to_pq(v))))
                        .collect();
                    json_line(&json!({ "genus": "pontryagin", "dim": n, "coeffs": map }))
                }
                Format::Table => {
                    let rows: Vec<(String, String)> = values
                        .iter()
                        .map(|(p, v)| (format!("p{p}"), to_short(v)))
                        .collect();
                    table(("pontryagin", "value"), &rows)
                }
            })
        }
    }
}

/// Surface and twist parameters shared by the verify commands.
#[derive(Clone, Debug)]
pub struct Params {
    pub surface: SurfaceModel,
    pub twist_c: Rational,
    pub gamma_c: Rational,
}

impl Default for Params {
    fn default() -> Self {
        Self {
            surface: default_surface(),
            twist_c: int(248),
            gamma_c: int(-1),
        }
    }
}

impl Params {
    fn from_cli(cli: &Cli) -> Result<Self> {
        Ok(Self {
            surface: SurfaceModel::new(cli.surface_c1sq.clone(), cli.surface_c2.clone())
                .with_label("X"),
            twist_c: cli.twist_c.clone(),
            gamma_c: cli.gamma_c.clone(),
        })
    }

    pub fn sequence(&self, kind: IdealKind, max_deg: usize) -> Result<GeneratorSequence> {
        match kind {
            IdealKind::I => gamma_sequence(&self.gamma_c, max_deg),
            _ => beta_sequence(&self.surface, &self.twist_c, max_deg),
        }
    }
}

fn report_summary(r: &VerificationReport) -> String {
    let members: Vec<String> = r.in_ideal.iter().map(ToString::to_string).collect();
    let mut line = format!(
        "in_ideal [{}]; annihilator_dim {}, expected_dim {}",
        members.join(" "),
        r.annihilator_dim,
        r.expected_dim,
    );
    if let Some(w) = &r.witness {
        let _ = write!(
            line,
            "; witness {}: {}; this indicates an implementation bug",
            functional_name(w),
            render_terms(w)
        );
    } else if !r.passed() {
        line.push_str("; individual annihilation or rank check failed");
    }
    line
}

fn render_report_line(r: &VerificationReport) -> String {
    format!(
        "{} {} n={}: {}\n",
        if r.passed() { "PASS" } else { "FAIL" },
        r.kind,
        r.dim,
        report_summary(r)
    )
}

fn verify_theorem_command(
    params: &Params,
    kind: IdealKind,
    n: usize,
    family: Family,
    fmt: Format,
) -> CmdResult {
    if n == 0 {
        return Err(Failure::Usage("--dim must be positive".into()));
    }
    let g = match family {
        Family::Auto => params.sequence(kind, n)?,
        Family::Beta => params.sequence(IdealKind::Do, n)?,
        Family::Gamma => params.sequence(IdealKind::I, n)?,
        Family::Cp => cp_sequence(n),
    };
    let r = verify_theorem(kind, n, &g)?;
    let body = match fmt {
        Format::Json => json_line(&r),
        Format::Table => render_report_line(&r),
    };
    if r.passed() {
        Ok(body)
    } else {
        Err(Failure::Verification(body))
    }
}

fn verify_generators_command(params: &Params, max_dim: usize, fmt: Format) -> CmdResult {
    if max_dim == 0 {
        return Err(Failure::Usage("--max-dim must be positive".into()));
    }
    let beta = verify_generators(&params.sequence(IdealKind::Do, max_dim)?, max_dim)?;
    let gamma = verify_generators(&params.sequence(IdealKind::I, max_dim)?, max_dim)?;
    let passed = beta.passed() && gamma.passed();
    let body = match fmt {
        Format::Json => json_line(&json!({ "beta": beta, "gamma": gamma, "passed": passed })),
        Format::Table => {
            let mut out = String::new();
            for (name, r) in [("beta", &beta), ("gamma", &gamma)] {
                let s: Vec<String> = r.s_numbers.iter().map(to_short).collect();
                let singular: Vec<String> = r
                    .basis_checks
                    .iter()
                    .filter(|(_, ok)| !ok)
                    .map(|(n, _)| n.to_string())
                    .collect();
                let _ = writeln!(
                    out,
                    "{} {name}: s_k = [{}]; monomial matrices {}",
                    if r.passed() { "PASS" } else { "FAIL" },
                    s.join(", "),
                    if singular.is_empty() {
                        "invertible".to_string()
                    } else {
                        format!("singular at n = {}", singular.join(", "))
                    }
                );
            }
            out
        }
    };
    if passed {
        Ok(body)
    } else {
        Err(Failure::Verification(body))
    }
}

/// Outcome of one target in the full sweep.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

type Check = Box<dyn Fn() -> Result<(bool, String)> + Send + Sync>;

fn check(f: impl Fn() -> Result<(bool, String)> + Send + Sync + 'static) -> Check {
    Box::new(f)
}

/// Every check the calculator knows about, up to complex dimension
/// `max_dim`, in a fixed order.
pub fn suite(params: &Params, max_dim: usize) -> Result<Vec<(String, Check)>> {
    if max_dim < 3 {
        return Err(Error::invalid("--max-dim must be at least 3"));
    }
    let beta = Arc::new(params.sequence(IdealKind::Do, max_dim)?);
    let gamma = Arc::new(params.sequence(IdealKind::I, max_dim)?);
    let mut out: Vec<(String, Check)> = Vec::new();

    out.push((
        "s-number closed form".into(),
        check(|| {
            let grid = [-7i64, -1, 2, 13];
            for rank in 2..=11usize {
                let n = rank as i64 - 1;
                for &a in &grid {
                    for &b in &grid {
                        for &c in &grid {
                            let s = SurfaceModel::from_ints(a, b);
                            let x = projectivization_chern(&s, &BundleModel::new(rank, int(c))?)?;
                            if s_number(&x)? != int(-(n + 1) * (n + 3) * c) {
                                return Ok((
                                    false,
                                    format!("rank {rank}, surface ({a},{b}), c = {c}"),
                                ));
                            }
                        }
                    }
                }
            }
            Ok((true, "ranks 2..11 over a 64-point grid".into()))
        }),
    ));

    out.push((
        "c1-power closed form".into(),
        check(|| {
            for i in 3..=12usize {
                for c in [-3i64, -1, 1, 5] {
                    let x = abelian_pbundle(i - 1, int(c))?;
                    let want = -int(i as i64 - 1).pow(i as i32) * int(c);
                    if x.chern_number(&Partition::repeated(1, i)) != want {
                        return Ok((false, format!("i = {i}, c = {c}")));
                    }
                }
            }
            Ok((true, "i = 3..12".into()))
        }),
    ));

    for i in 3..=max_dim {
        let c = params.gamma_c.clone();
        out.push((
            format!("chi_y vanishes on gamma_{i}"),
            check(move || {
                for c in [c.clone(), int(2), int(-7)] {
                    let x = abelian_pbundle(i - 1, c.clone())?;
                    if !chi_y(&x)?.is_zero() {
                        return Ok((false, format!("c = {}", to_short(&c))));
                    }
                }
                Ok((true, String::new()))
            }),
        ));
    }

    out.push((
        "surface genus formulas".into(),
        check(|| {
            let chi = chi_y_functional(2)?;
            let (a, b) = (Partition::new(vec![1, 1])?, Partition::single(2));
            let ok = chi.y_coefficient(0).coeff(&a) == Rational::new(1.into(), 12.into())
                && chi.y_coefficient(0).coeff(&b) == Rational::new(1.into(), 12.into())
                && chi.y_coefficient(1).coeff(&a) == Rational::new(1.into(), 6.into())
                && chi.y_coefficient(1).coeff(&b) == Rational::new((-5).into(), 6.into())
                && chi_y(&cp_class(2))?.to_string() == "1 - y + y^2";
            Ok((ok, String::new()))
        }),
    ));

    for n in 1..=max_dim {
        out.push((
            format!("specializations in dim {n}"),
            check(move || {
                let chi = chi_y_functional(n)?;
                let euler = chi.specialize(&int(-1)) == euler_functional(n)?;
                let sig = chi.specialize(&int(1)) == l_genus_functional(n)?;
                let todd = todd_functional(n)?.eval(&cp_class(n))?.is_one();
                Ok((
                    euler && sig && todd,
                    format!("euler {euler}, signature {sig}, todd {todd}"),
                ))
            }),
        ));
    }

    out.push((
        "chi_y is multiplicative".into(),
        check(|| {
            let mut classes = vec![
                cp_class(1),
                cp_class(2),
                cp_class(3),
                SurfaceModel::from_ints(152, 100).to_class(),
            ];
            classes.push(abelian_pbundle(2, int(-1))?);
            classes.push(projectivization_chern(
                &SurfaceModel::from_ints(-8, 4),
                &BundleModel::new(2, int(3))?,
            )?);
            for a in &classes {
                for b in &classes {
                    if a.dim() + b.dim() > 6 {
                        continue;
                    }
                    if chi_y(&product(a, b))? != &chi_y(a)? * &chi_y(b)? {
                        return Ok((false, format!("dims {} and {}", a.dim(), b.dim())));
                    }
                }
            }
            Ok((true, String::new()))
        }),
    ));

    for n in 2..=max_dim {
        out.push((
            format!("chi_p span in dim {n}"),
            check(move || {
                let chi = chi_p_functionals(n)?;
                let vecs: Vec<Vec<Rational>> = chi.iter().map(Functional::to_dense).collect();
                let span = Subspace::span(enumerate_partitions(n).len(), &vecs)?;
                let sign = if n % 2 == 0 { int(1) } else { int(-1) };
                let symmetric = (0..=n).all(|p| chi[p] == chi[n - p].scaled(&sign));
                let lw = span.contains(&c1_cn1_functional(n)?.to_dense());
                let dim_ok = span.dim() == (n + 2) / 2;
                let ok = symmetric && lw && dim_ok && chi_span_certificate(&chi[0])?.is_some();
                Ok((ok, format!("dim {}", span.dim())))
            }),
        ));
    }

    {
        let (beta, gamma, c) = (beta.clone(), gamma.clone(), params.twist_c.clone());
        let sigma = params.surface.signature();
        out.push((
            "generator criterion".into(),
            check(move || {
                let s = beta.s_numbers(max_dim)?;
                let mut ok = s[0] == int(2) && s[1] == &sigma * int(6);
                for k in 3..=max_dim {
                    let k2 = int((k * k - 1) as i64);
                    ok &= s[k - 1] == -int(2) * k2 * &c;
                }
                ok &= verify_generators(&beta, max_dim)?.passed()
                    && verify_generators(&gamma, max_dim)?.passed();
                let shown: Vec<String> = s.iter().map(to_short).collect();
                Ok((ok, format!("s_k(beta_k) = [{}]", shown.join(", "))))
            }),
        ));
    }

    for kind in IdealKind::ALL {
        for n in kind.min_dim()..=max_dim {
            let g = if kind == IdealKind::I {
                gamma.clone()
            } else {
                beta.clone()
            };
            out.push((
                format!("theorem {kind} n={n}"),
                check(move || {
                    let r = verify_theorem(kind, n, &g)?;
                    Ok((r.passed(), report_summary(&r)))
                }),
            ));
        }
    }

    {
        let gamma = gamma.clone();
        out.push((
            "unboundedness demo".into(),
            check(move || {
                for i in 3..=max_dim.min(6) {
                    let r = unboundedness_demo(&c1_power_functional(i), &gamma, &[1, 2, 4, 8])?;
                    if !r.linear() {
                        return Ok((
                            false,
                            format!("c1-power in dim {i} does not scale linearly"),
                        ));
                    }
                }
                let chi0 = chi_y_functional(4)?.y_coefficient(0);
                let rejected = matches!(
                    unboundedness_demo(&chi0, &gamma, &[1]),
                    Err(Error::MemberOfChiSpan { .. })
                );
                Ok((
                    rejected,
                    if rejected {
                        String::new()
                    } else {
                        "chi_0 was not rejected".into()
                    },
                ))
            }),
        ));
    }
    Ok(out)
}

/// Runs the suite on `jobs` threads; results keep the suite order.
pub fn run_suite(params: &Params, max_dim: usize, jobs: usize) -> Result<Vec<CheckResult>> {
    let checks = suite(params, max_dim)?;
    let eval = |(name, f): &(String, Check)| {
        let (passed, detail) = match f() {
            Ok(r) => r,
            Err(e) => (false, format!("error: {e}")),
        };
        CheckResult {
            name: name.clone(),
            passed,
            detail,
        }
    };
    if jobs <= 1 {
        return Ok(checks.iter().map(eval).collect());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::invalid(e.to_string()))?;
    Ok(pool.install(|| checks.par_iter().map(eval).collect()))
}

fn verify_all_command(params: &Params, max_dim: usize, jobs: usize, fmt: Format) -> CmdResult {
    let results = run_suite(params, max_dim, jobs)?;
    let passed = results.iter().all(|r| r.passed);
    let body = match fmt {
        Format::Json => json_line(&json!({ "checks": results, "passed": passed })),
        Format::Table => {
            let mut out = String::new();
            for r in &results {
                let _ = write!(out, "{} {}", if r.passed { "PASS" } else { "FAIL" }, r.name);
                if !r.detail.is_empty() {
                    let _ = write!(out, ": {}", r.detail);
                }
                out.push('\n');
            }
            let failed = results.iter().filter(|r| !r.passed).count();
            let _ = writeln!(out, "{} checks, {failed} failed", results.len());
            out
        }
    };
    if passed {
        Ok(body)
    } else {
        Err(Failure::Verification(body))
    }
}
