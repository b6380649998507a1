//! The `regsemi` command line: argument parsing, input loading, report
//! rendering and the mapping from library errors to exit codes.

pub mod analyze;
pub mod checks;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use regsemi::biorder::{format_bos, parse_bos};
use regsemi::category::{cone_semigroup, IdealCategory, Side};
use regsemi::fundamental::build_te_mod_p;
use regsemi::groupoid::{reconstruct, singular_squares};
use regsemi::idempotent::{
    check_proper, confirm_sandwich_relations, gamma0, gamma_tau, present_ig, present_rig, CycleSet,
    OracleOutcome,
};
use regsemi::semigroup::{format_cay, parse_cay};
use regsemi::{BiorderedSet, Caps, Error, Family, Result, Semigroup};
use serde::Serialize;
use serde_json::{json, Value};

use crate::checks::{run_corpus, CheckKind};
use crate::report::{render_human, InputDescriptor, Report, Timings, TOOL};

pub const EXIT_OK: i32 = 0;
pub const EXIT_WITNESS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

const AFTER_HELP: &str = "\
Exit codes: 0 success, 1 a mathematical witness was found (axiom or theorem
failure on the input), 2 usage or input error, 3 a cap or budget was exceeded.

Every --cap-* flag can also be set through the environment:
  REGSEMI_CAP_ELEMENTS, REGSEMI_CAP_CONE_OBJECTS, REGSEMI_CAP_CHAIN_LENGTH,
  REGSEMI_CAP_ORACLE_BUDGET";

#[derive(Debug, Parser)]
#[command(
    name = "regsemi",
    version,
    about = "Regular semigroups, biordered sets and their groupoids and categories"
)]
#[command(after_help = AFTER_HELP)]
pub struct Cli {
    /// Write the primary output here instead of stdout.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,
    /// Emit single-line JSON instead of the human-readable listing.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for extra randomized spot checks. Never changes a verdict.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub caps: CapArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct CapArgs {
    /// Largest semigroup built or accepted.
    #[arg(long, global = true, env = "REGSEMI_CAP_ELEMENTS", default_value_t = Caps::default().elements)]
    pub cap_elements: usize,
    /// Largest category handed to cone enumeration.
    #[arg(long, global = true, env = "REGSEMI_CAP_CONE_OBJECTS", default_value_t = Caps::default().cone_objects)]
    pub cap_cone_objects: usize,
    /// Default E-cycle length bound.
    #[arg(long, global = true, env = "REGSEMI_CAP_CHAIN_LENGTH", default_value_t = Caps::default().chain_length)]
    pub cap_chain_length: usize,
    /// Chains visited per oracle query.
    #[arg(long, global = true, env = "REGSEMI_CAP_ORACLE_BUDGET", default_value_t = Caps::default().oracle_budget)]
    pub cap_oracle_budget: usize,
}

impl CapArgs {
    pub fn caps(&self) -> Caps {
        Caps {
            elements: self.cap_elements,
            cone_objects: self.cap_cone_objects,
            chain_length: self.cap_chain_length,
            oracle_budget: self.cap_oracle_budget,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a named family, e.g. `gen brandt 2` or `gen rectangular-band 2 3`.
    Gen { family: String, params: Vec<usize> },
    /// Full report on one semigroup.
    Analyze {
        /// A `.cay` file.
        #[arg(required_unless_present = "family", conflicts_with = "family")]
        file: Option<PathBuf>,
        /// A family instead of a file, as `kind:p1,p2`, e.g. `brandt:2`.
        #[arg(long)]
        family: Option<String>,
    },
    #[command(subcommand)]
    Biorder(BiorderCommand),
    #[command(subcommand)]
    Fundamental(FundamentalCommand),
    #[command(subcommand)]
    Groupoid(GroupoidCommand),
    #[command(subcommand)]
    Presentation(PresentationCommand),
    #[command(subcommand)]
    Category(CategoryCommand),
    /// Run checks over every semigroup of order at most N, up to isomorphism.
    /// One JSON line per member, then a summary line.
    Corpus {
        #[arg(long)]
        max_order: usize,
        /// Repeatable; defaults to all checks.
        #[arg(long = "check", value_enum)]
        checks: Vec<CheckKind>,
    },
}

#[derive(Debug, Subcommand)]
pub enum BiorderCommand {
    /// Write the biordered set of a `.cay` file in `.bos` form.
    Extract { file: PathBuf },
    /// Check the biorder axioms of a `.cay` or `.bos` file.
    Check { file: PathBuf },
    /// The sandwich set `S(e, f)`, by index into `E`.
    Sandwich { file: PathBuf, e: usize, f: usize },
}

#[derive(Debug, Subcommand)]
pub enum FundamentalCommand {
    /// The fundamental semigroup `T_E/p` of a regular biorder. With `-o X.cay`
    /// a sidecar `X.json` maps classes to representative ω-isomorphisms.
    Build { file: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum GroupoidCommand {
    /// Rebuild the semigroup from its inductive groupoid and compare.
    Roundtrip { file: PathBuf },
    /// Nondegenerate singular E-squares, as JSON.
    Squares { file: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CycleKind {
    /// Boundaries of singular squares.
    Gamma0,
    /// All τ-commutative cycles.
    GammaTau,
}

#[derive(Debug, Subcommand)]
pub enum PresentationCommand {
    /// The free idempotent-generated presentation.
    Ig {
        file: PathBuf,
        /// Emit GAP input instead of the neutral text form.
        #[arg(long)]
        gap: bool,
    },
    /// The regular variant, adding `e·f = e·h·f` for sandwich elements `h`.
    Rig {
        file: PathBuf,
        #[arg(long)]
        gap: bool,
    },
    /// Write a cycle set, one cycle per line.
    Cycles {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "gamma0")]
        kind: CycleKind,
        /// Longest cycle, counted in vertices including the repeated base.
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Check axioms (P1)–(P3) for a cycle-set file.
    Proper {
        file: PathBuf,
        #[arg(long)]
        cycles: PathBuf,
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Confirm each sandwich relation with the chain-equivalence oracle.
    Confirm {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "gamma-tau")]
        kind: CycleKind,
        #[arg(long)]
        bound: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    #[value(name = "L", alias = "l")]
    L,
    #[value(name = "R", alias = "r")]
    R,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::L => Side::Left,
            SideArg::R => Side::Right,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum CategoryCommand {
    /// JSON dump of objects, morphisms, hom-set sizes and inclusions.
    Build {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "L")]
        side: SideArg,
    },
    /// Normal cones and the multiplication table of the cone semigroup.
    Cones {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "L")]
        side: SideArg,
    },
    /// Normal-category axioms and normal factorizations.
    Check {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "L")]
        side: SideArg,
    },
}

/// A command-level failure: either a library error or an I/O problem.
#[derive(Debug)]
enum Failure {
    Lib(Error),
    Io(PathBuf, std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } => EXIT_CAP,
        Error::NotRegular(_)
        | Error::NotRegularBiorder(..)
        | Error::AxiomFailure { .. }
        | Error::TheoremViolation { .. }
        | Error::WellDefinednessViolation(_)
        | Error::NotQuasiOrder { .. }
        | Error::FactorizationNotFound(_) => EXIT_WITNESS,
        _ => EXIT_USAGE,
    }
}

/// The variant name, for the machine-readable error object.
fn error_kind(e: &Error) -> String {
    let dbg = format!("{e:?}");
    dbg.split(|c: char| !c.is_alphanumeric())
        .next()
        .unwrap_or_default()
        .to_string()
}

struct Ctx<'a> {
    out: &'a mut dyn Write,
    output: Option<PathBuf>,
    json: bool,
    seed: u64,
    caps: Caps,
}

impl Ctx<'_> {
    fn write_primary(&mut self, text: &str) -> std::result::Result<(), Failure> {
        match &self.output {
            Some(p) => std::fs::write(p, text).map_err(|e| Failure::Io(p.clone(), e)),
            None => self
                .out
                .write_all(text.as_bytes())
                .map_err(|e| Failure::Io("<stdout>".into(), e)),
        }
    }

    fn emit<T: Serialize>(&mut self, report: &T) -> std::result::Result<(), Failure> {
        let value = serde_json::to_value(report).expect("reports serialize");
        let text = if self.json {
            format!(
                "{}\n",
                serde_json::to_string(report).expect("reports serialize")
            )
        } else {
            render_human(&value)
        };
        self.write_primary(&text)
    }

    fn report<T: Serialize>(
        &mut self,
        input: InputDescriptor,
        results: T,
        timing: Timings,
    ) -> std::result::Result<(), Failure> {
        self.emit(&Report {
            tool: TOOL,
            input,
            results,
            timing_ms: timing,
        })
    }
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

fn load_semigroup(path: &Path, caps: &Caps) -> std::result::Result<Semigroup, Failure> {
    let s = parse_cay(&read(path)?)?;
    if s.order() > caps.elements {
        return Err(Error::CapExceeded {
            what: "semigroup order",
            limit: caps.elements,
            actual: s.order(),
        }
        .into());
    }
    Ok(s)
}

fn is_bos(path: &Path) -> bool {
    path.extension().is_some_and(|x| x == "bos")
}

/// A verified biorder from a `.bos` file or extracted from a `.cay` file.
fn load_biorder(path: &Path, caps: &Caps) -> std::result::Result<BiorderedSet, Failure> {
    if is_bos(path) {
        Ok(parse_bos(&read(path)?)?.into_verified()?)
    } else {
        Ok(BiorderedSet::extract(&load_semigroup(path, caps)?))
    }
}

fn source(path: &Path) -> String {
    format!("file:{}", path.display())
}

/// A descriptor for biorder-only input: order is `|E|`, the hash covers the
/// `.bos` serialization.
fn biorder_descriptor(path: &Path, b: &BiorderedSet) -> InputDescriptor {
    use sha2::{Digest, Sha256};
    InputDescriptor {
        source: source(path),
        order: b.size(),
        sha256: hex::encode(Sha256::digest(format_bos(b).as_bytes())),
    }
}

/// `kind:p1,p2` as used by `analyze --family`.
fn parse_family_arg(arg: &str) -> Result<Family> {
    let (kind, params) = arg.split_once(':').unwrap_or((arg, ""));
    let params = params
        .split(',')
        .filter(|p| !p.is_empty())
        .map(|p| {
            p.trim()
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("bad family parameter {p:?}")))
        })
        .collect::<Result<Vec<usize>>>()?;
    Family::from_parts(kind, &params)
}

fn witness_status(pass: bool) -> i32 {
    if pass {
        EXIT_OK
    } else {
        EXIT_WITNESS
    }
}

type Outcome = std::result::Result<i32, Failure>;

fn gen(ctx: &mut Ctx, family: &str, params: &[usize]) -> Outcome {
    let s = Family::from_parts(family, params)?.generate(&ctx.caps)?;
    ctx.write_primary(&format_cay(&s))?;
    Ok(EXIT_OK)
}

fn analyze_cmd(ctx: &mut Ctx, file: Option<&Path>, family: Option<&str>) -> Outcome {
    let mut timing = Timings::default();
    let (src, s) = match (file, family) {
        (Some(p), _) => (
            source(p),
            timing.time("load", || load_semigroup(p, &ctx.caps))?,
        ),
        (None, Some(arg)) => {
            let f = parse_family_arg(arg)?;
            (
                format!("family:{f}"),
                timing.time("load", || f.generate(&ctx.caps))?,
            )
        }
        (None, None) => unreachable!("clap requires one input"),
    };
    let (results, failed) = analyze::analyze(&s, &ctx.caps, &mut timing)?;
    ctx.report(InputDescriptor::new(src, &s), results, timing)?;
    Ok(witness_status(!failed))
}

fn biorder_cmd(ctx: &mut Ctx, cmd: &BiorderCommand) -> Outcome {
    match cmd {
        BiorderCommand::Extract { file } => {
            let s = load_semigroup(file, &ctx.caps)?;
            ctx.write_primary(&format_bos(&BiorderedSet::extract(&s)))?;
            Ok(EXIT_OK)
        }
        BiorderCommand::Check { file } => {
            let mut timing = Timings::default();
            let (input, report, regular_semigroup) = if is_bos(file) {
                let raw = parse_bos(&read(file)?)?;
                let report = timing.time("axioms", || raw.verify_axioms());
                let input = match raw.into_verified() {
                    Ok(b) => biorder_descriptor(file, &b),
                    Err(_) => InputDescriptor {
                        source: source(file),
                        order: 0,
                        sha256: String::new(),
                    },
                };
                (input, report, None)
            } else {
                let s = load_semigroup(file, &ctx.caps)?;
                let b = BiorderedSet::extract(&s);
                let report = timing.time("axioms", || b.verify_axioms());
                (
                    InputDescriptor::new(source(file), &s),
                    report,
                    Some(s.is_regular()),
                )
            };
            // (R) is required only of biorders of regular semigroups.
            let pass =
                report.all_biorder_pass() && (regular_semigroup != Some(true) || report.r.passed());
            ctx.report(input, json!({ "pass": pass, "axioms": report }), timing)?;
            Ok(witness_status(pass))
        }
        BiorderCommand::Sandwich { file, e, f } => {
            let b = load_biorder(file, &ctx.caps)?;
            for &x in [e, f] {
                if x >= b.size() {
                    return Err(Error::InvalidParameter(format!(
                        "index {x} outside E of size {}",
                        b.size()
                    ))
                    .into());
                }
            }
            let h = b.sandwich(*e, *f);
            let labels: Vec<&str> = h.iter().map(|&x| b.label(x)).collect();
            let results = json!({ "e": e, "f": f, "sandwich": h, "labels": labels });
            ctx.report(biorder_descriptor(file, &b), results, Timings::default())?;
            Ok(EXIT_OK)
        }
    }
}

fn fundamental_cmd(ctx: &mut Ctx, cmd: &FundamentalCommand) -> Outcome {
    let FundamentalCommand::Build { file } = cmd;
    let mut timing = Timings::default();
    let b = load_biorder(file, &ctx.caps)?;
    let q = timing.time("build", || build_te_mod_p(&b))?;
    let t = q.semigroup();
    let classes: Vec<Value> = (0..t.order())
        .map(|c| json!({ "class": c, "size": q.classes()[c].len(), "representative": q.representative(c) }))
        .collect();
    let sidecar = Report {
        tool: TOOL,
        input: biorder_descriptor(file, &b),
        results: json!({ "order": t.order(), "sha256": report::content_hash(t), "classes": classes }),
        timing_ms: timing,
    };
    match ctx.output.clone() {
        Some(path) => {
            ctx.write_primary(&format_cay(t))?;
            let side = path.with_extension("json");
            let text = format!(
                "{}\n",
                serde_json::to_string(&sidecar).expect("serializable")
            );
            std::fs::write(&side, text).map_err(|e| Failure::Io(side.clone(), e))?;
        }
        None if ctx.json => ctx.emit(&sidecar)?,
        None => ctx.write_primary(&format_cay(t))?,
    }
    Ok(EXIT_OK)
}

fn groupoid_cmd(ctx: &mut Ctx, cmd: &GroupoidCommand) -> Outcome {
    match cmd {
        GroupoidCommand::Roundtrip { file } => {
            let s = load_semigroup(file, &ctx.caps)?;
            let mut timing = Timings::default();
            let r = timing.time("reconstruct", || reconstruct(&s))?;
            let results = json!({
                "pass": true,
                "classes": r.classes.len(),
                "isomorphism": r.class_of_element,
                "independent_isomorphism": r.witness,
            });
            ctx.report(InputDescriptor::new(source(file), &s), results, timing)?;
            Ok(EXIT_OK)
        }
        GroupoidCommand::Squares { file } => {
            let s = load_semigroup(file, &ctx.caps)?;
            let b = BiorderedSet::extract(&s);
            let mut timing = Timings::default();
            let squares = timing.time("squares", || singular_squares(&b));
            ctx.json = true;
            ctx.report(
                InputDescriptor::new(source(file), &s),
                json!({ "count": squares.len(), "squares": squares }),
                timing,
            )?;
            Ok(EXIT_OK)
        }
    }
}

fn cycle_set(b: &BiorderedSet, kind: CycleKind, bound: usize) -> Result<CycleSet> {
    match kind {
        CycleKind::Gamma0 => gamma0(b, bound),
        CycleKind::GammaTau => gamma_tau(b, bound),
    }
}

fn presentation_cmd(ctx: &mut Ctx, cmd: &PresentationCommand) -> Outcome {
    let bound_or = |b: &Option<usize>, caps: &Caps| b.unwrap_or(caps.chain_length);
    match cmd {
        PresentationCommand::Ig { file, gap } | PresentationCommand::Rig { file, gap } => {
            let b = load_biorder(file, &ctx.caps)?;
            let p = match cmd {
                PresentationCommand::Ig { .. } => present_ig(&b),
                _ => present_rig(&b)?,
            };
            if ctx.json {
                ctx.report(biorder_descriptor(file, &b), p, Timings::default())?;
            } else {
                ctx.write_primary(&if *gap { p.to_gap() } else { p.to_text() })?;
            }
            Ok(EXIT_OK)
        }
        PresentationCommand::Cycles { file, kind, bound } => {
            let b = load_biorder(file, &ctx.caps)?;
            let g = cycle_set(&b, *kind, bound_or(bound, &ctx.caps))?;
            ctx.write_primary(&g.to_file_string())?;
            Ok(EXIT_OK)
        }
        PresentationCommand::Proper {
            file,
            cycles,
            bound,
        } => {
            let b = load_biorder(file, &ctx.caps)?;
            let g = CycleSet::parse(&b, bound_or(bound, &ctx.caps), &read(cycles)?)?;
            let mut timing = Timings::default();
            let r = timing.time("proper", || check_proper(&b, &g))?;
            let pass = r.all_pass();
            ctx.report(
                biorder_descriptor(file, &b),
                json!({ "pass": pass, "cycles": g.len(), "axioms": r }),
                timing,
            )?;
            Ok(witness_status(pass))
        }
        PresentationCommand::Confirm { file, kind, bound } => {
            let b = load_biorder(file, &ctx.caps)?;
            let mut timing = Timings::default();
            let g = timing.time("cycles", || {
                cycle_set(&b, *kind, bound_or(bound, &ctx.caps))
            })?;
            let checks = timing.time("oracle", || {
                confirm_sandwich_relations(&b, &g, ctx.caps.oracle_budget)
            })?;
            let over_budget = checks.iter().any(|c| {
                matches!(
                    c.outcome,
                    OracleOutcome::NotFoundWithinBudget {
                        exhausted: false,
                        ..
                    }
                )
            });
            let pass = checks.iter().all(|c| c.verified);
            ctx.report(
                biorder_descriptor(file, &b),
                json!({ "pass": pass, "cycles": g.len(), "relations": checks.len(), "checks": checks }),
                timing,
            )?;
            Ok(if pass {
                EXIT_OK
            } else if over_budget {
                EXIT_CAP
            } else {
                EXIT_WITNESS
            })
        }
    }
}

fn category_cmd(ctx: &mut Ctx, cmd: &CategoryCommand) -> Outcome {
    let (CategoryCommand::Build { file, side }
    | CategoryCommand::Cones { file, side }
    | CategoryCommand::Check { file, side }) = cmd;
    let s = load_semigroup(file, &ctx.caps)?;
    let input = InputDescriptor::new(source(file), &s);
    let mut timing = Timings::default();
    let c = timing.time("build", || IdealCategory::build(&s, (*side).into()))?;
    let cat = c.category();
    match cmd {
        CategoryCommand::Build { .. } => {
            ctx.json = true;
            ctx.report(input, c.dump(), timing)?;
            Ok(EXIT_OK)
        }
        CategoryCommand::Cones { .. } => {
            let t = timing.time("cones", || {
                cone_semigroup(cat, ctx.caps.cone_objects, ctx.caps.elements)
            })?;
            let results = json!({
                "cones": t.cones,
                "table": t.semigroup.rows(),
                "regular": t.semigroup.is_regular(),
            });
            ctx.json = true;
            ctx.report(input, results, timing)?;
            Ok(EXIT_OK)
        }
        CategoryCommand::Check { .. } => {
            let nc = timing.time("nc", || cat.verify_nc());
            let mut factorization_failure = None;
            timing.time("factorizations", || {
                for m in 0..cat.morphism_count() {
                    if let Err(e) = c.normal_factorize(m) {
                        factorization_failure =
                            Some(json!({ "morphism": m, "violation": e.to_string() }));
                        break;
                    }
                }
            });
            let pass = nc.all_pass() && factorization_failure.is_none();
            let results = json!({
                "pass": pass,
                "objects": cat.object_count(),
                "morphisms": cat.morphism_count(),
                "nc": nc,
                "factorization_failure": factorization_failure,
            });
            ctx.report(input, results, timing)?;
            Ok(witness_status(pass))
        }
    }
}

fn corpus_cmd(ctx: &mut Ctx, max_order: usize, checks: &[CheckKind]) -> Outcome {
    let checks: Vec<CheckKind> = if checks.is_empty() {
        CheckKind::value_variants().to_vec()
    } else {
        let mut c = checks.to_vec();
        c.sort();
        c.dedup();
        c
    };
    let (members, summary) = run_corpus(max_order, &checks, &ctx.caps, ctx.seed)?;
    let mut text = String::new();
    for m in &members {
        text.push_str(&serde_json::to_string(m).expect("serializable"));
        text.push('\n');
    }
    text.push_str(&serde_json::to_string(&summary).expect("serializable"));
    text.push('\n');
    ctx.write_primary(&text)?;
    Ok(witness_status(summary.all_pass()))
}

fn dispatch(ctx: &mut Ctx, command: &Command) -> Outcome {
    match command {
        Command::Gen { family, params } => gen(ctx, family, params),
        Command::Analyze { file, family } => analyze_cmd(ctx, file.as_deref(), family.as_deref()),
        Command::Biorder(c) => biorder_cmd(ctx, c),
        Command::Fundamental(c) => fundamental_cmd(ctx, c),
        Command::Groupoid(c) => groupoid_cmd(ctx, c),
        Command::Presentation(c) => presentation_cmd(ctx, c),
        Command::Category(c) => category_cmd(ctx, c),
        Command::Corpus { max_order, checks } => corpus_cmd(ctx, *max_order, checks),
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code. Reports go to `out`; diagnostics go to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
            } else {
                let _ = out.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    let json = cli.json;
    let mut ctx = Ctx {
        out,
        output: cli.output.clone(),
        json,
        seed: cli.seed,
        caps: cli.caps.caps(),
    };
    match dispatch(&mut ctx, &cli.command) {
        Ok(code) => code,
        Err(Failure::Lib(e)) => {
            let code = exit_code(&e);
            let _ = writeln!(err, "error: {e}");
            if json {
                let obj = json!({ "error": { "kind": error_kind(&e), "message": e.to_string(), "exit_code": code } });
                let _ = writeln!(err, "{obj}");
            }
            code
        }
        Err(Failure::Io(path, e)) => {
            let _ = writeln!(err, "error: {}: {e}", path.display());
            EXIT_USAGE
        }
    }
}
