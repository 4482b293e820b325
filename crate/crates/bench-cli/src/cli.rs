//! The `sfm` command line: invariant tables for .sfm files, band-sum
//! composition, slice/ribbon obstruction reports, the linking-form identity
//! report, randomized check suites, and the built-in catalog.
//!
//! Exit codes: 0 success, 1 failed check or obstructed input under
//! `--expect`, 2 input error, 3 explicitly requested invariant undefined.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use compose::{band_sum, LinkPresentation1};
use concord1::prop12_report;
use exactalg::{det_int, IntMatrix};
use obstruct::{
    ribbon_obstruction, slice_report, FoxMilnor, MetabolizerOutcome, SliceOptions, Verdict,
};
use seifert::form::symmetrized_determinant;
use seifert::{
    alexander, alexander_module, arf, conway, signature, Arf, Epsilon, FormKind, SeifertForm,
};

use crate::catalog::{catalog, catalog_get, Payload};
use crate::checks::{
    check_additivity, check_oracles, check_prop12, check_properties, CheckReport,
};
use crate::report::{check_rows, Format, Report};
use crate::sfm_format::{parse_sfm, write_sfm};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;
pub const EXIT_UNDEFINED: i32 = 3;

const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Parser)]
#[command(
    name = "sfm",
    version,
    about = "Exact invariants, compositions, and obstruction reports for Seifert forms"
)]
struct Cli {
    /// Output style for reports
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Table)]
    format: FormatArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Table,
    Records,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Table => Format::Table,
            FormatArg::Records => Format::Records,
        }
    }
}

fn epsilon_arg(s: &str) -> Result<Epsilon, String> {
    s.parse()
}

/// Invariant selectors for `invariants`; none set means "everything that
/// applies". Explicitly requesting an inapplicable invariant is an input
/// error, and an undefined Arf exits with code 3.
#[derive(Debug, Clone, Copy, Args)]
struct InvariantFlags {
    /// Signature of A + A^T
    #[arg(long)]
    signature: bool,
    /// Arf invariant (epsilon +1 only)
    #[arg(long)]
    arf: bool,
    /// Alexander polynomial and module torsion (knot forms only)
    #[arg(long)]
    alexander: bool,
    /// Conway polynomial with c1 and c3 (epsilon +1 only)
    #[arg(long)]
    conway: bool,
    /// Determinants of the intersection and symmetrized matrices
    #[arg(long)]
    det: bool,
}

impl InvariantFlags {
    fn any(self) -> bool {
        self.signature || self.arf || self.alexander || self.conway || self.det
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the invariants of the payload in an .sfm file
    Invariants {
        path: PathBuf,
        #[command(flatten)]
        flags: InvariantFlags,
    },
    /// Compose a link2 presentation into its band-sum knot form (.sfm to stdout)
    Bandsum { path: PathBuf },
    /// Slice obstruction report for a knot form
    Slice {
        path: PathBuf,
        /// Entry bound for metabolizer candidate vectors
        #[arg(long, default_value_t = 2)]
        search_bound: i64,
        /// Rank cap for the metabolizer search
        #[arg(long, default_value_t = 8)]
        rank_max: usize,
        /// Exit 1 when the verdict is "not slice"
        #[arg(long)]
        expect: bool,
    },
    /// Ribbon obstruction (Alexander module torsion) for a knot form
    Ribbon {
        path: PathBuf,
        /// Exit 1 when the module obstructs
        #[arg(long)]
        expect: bool,
    },
    /// Linking-form identity report for a link1 payload
    Prop12 { path: PathBuf },
    /// Randomized theorem and oracle check suites
    Check {
        #[command(subcommand)]
        suite: CheckCommand,
    },
    /// Built-in worked examples
    Catalog {
        #[command(subcommand)]
        action: CatalogCommand,
    },
}

#[derive(Subcommand)]
enum CheckCommand {
    /// Band-sum additivity of Arf (+1) or signature (-1)
    Additivity {
        /// Parity sign +1 or -1; omitted runs both
        #[arg(long, value_parser = epsilon_arg, allow_hyphen_values = true)]
        epsilon: Option<Epsilon>,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        /// Largest component rank sampled (even ranks up to this)
        #[arg(long, default_value_t = 8)]
        rank_max: usize,
        /// Entry bound for the random coupling block
        #[arg(long, default_value_t = 3)]
        coupling_bound: i64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// The two Arf identities over torus links, twist ladders, and split unions
    Prop12 {
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Oracle equivalences and algebraic property suites
    Oracles {
        #[arg(long, default_value_t = 500)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// Names and descriptions of every entry
    List,
    /// Note and invariants of one entry
    Show { name: String },
    /// Canonical .sfm text of one entry, to stdout or a file
    Export {
        name: String,
        /// Destination file (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Input(String),
    Undefined(String),
}

fn input_error(msg: impl Into<String>) -> Failure {
    Failure::Input(msg.into())
}

/// Parses argv and runs one command, writing the report to `out` and error
/// notes to `err`; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    EXIT_INPUT_ERROR
                }
            };
        }
    };
    let format = cli.format.into();
    match dispatch(cli.command, format) {
        Ok((text, code)) => {
            let _ = write!(out, "{text}");
            code
        }
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT_ERROR
        }
        Err(Failure::Undefined(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_UNDEFINED
        }
    }
}

fn dispatch(command: Command, format: Format) -> Result<(String, i32), Failure> {
    match command {
        Command::Invariants { path, flags } => cmd_invariants(&path, flags, format),
        Command::Bandsum { path } => cmd_bandsum(&path),
        Command::Slice {
            path,
            search_bound,
            rank_max,
            expect,
        } => cmd_slice(&path, search_bound, rank_max, expect, format),
        Command::Ribbon { path, expect } => cmd_ribbon(&path, expect, format),
        Command::Prop12 { path } => cmd_prop12(&path, format),
        Command::Check { suite } => cmd_check(suite, format),
        Command::Catalog { action } => cmd_catalog(action, format),
    }
}

fn load_payload(path: &Path) -> Result<Payload, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| input_error(format!("cannot read {}: {e}", path.display())))?;
    parse_sfm(&text).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

/// Shared by `invariants` and `catalog show`. Honors the selection flags and
/// their error semantics; with no flags set, prints whatever applies.
fn push_invariant_rows(
    rows: &mut Report,
    payload: &Payload,
    flags: InvariantFlags,
) -> Result<(), Failure> {
    let form = payload.underlying_form();
    let all = !flags.any();
    rows.push("kind", payload.kind_label());
    rows.push("epsilon", form.epsilon());
    if let Payload::Link2(p) = payload {
        rows.push(
            "component_ranks",
            format!("{} {}", p.comp1().rank(), p.comp2().rank()),
        );
    }
    rows.push("rank", form.rank());

    if all || flags.det {
        let q_det = det_int(&form.intersection_form()).expect("intersection form is square");
        rows.push("det(A - eps*A^T)", q_det);
        rows.push("det(A + A^T)", symmetrized_determinant(&form));
    }
    if all || flags.signature {
        rows.push("signature", signature(&form));
    }
    if all || flags.arf {
        match form.epsilon() {
            Epsilon::Minus if flags.arf => {
                return Err(input_error("arf requires epsilon +1, form has epsilon -1"));
            }
            Epsilon::Minus => rows.push("arf", "n/a (epsilon -1)"),
            Epsilon::Plus => {
                let a = arf(&form).expect("epsilon +1 form");
                if a == Arf::Undefined && flags.arf {
                    return Err(Failure::Undefined(
                        "arf is undefined for this form: the quadratic refinement is nonzero \
                         on the radical (odd linking number)"
                            .to_string(),
                    ));
                }
                rows.push("arf", a);
            }
        }
    }
    if all || flags.alexander {
        if form.kind() == FormKind::Knot {
            let delta = alexander(&form).expect("knot form");
            rows.push("alexander", &delta);
            let module = alexander_module(&form).expect("knot form");
            if module.is_empty() {
                rows.push("alexander_module", "trivial");
            } else {
                let list: Vec<String> = module.iter().map(|d| format!("({d})")).collect();
                rows.push("alexander_module", list.join(" "));
            }
        } else if flags.alexander {
            return Err(input_error(format!(
                "alexander requires a knot form, got {}",
                payload.kind_label()
            )));
        }
    }
    if all || flags.conway {
        match conway(&form) {
            Ok(data) => {
                rows.push("conway", data.display());
                rows.push("c1", &data.c1);
                rows.push("c3", &data.c3);
            }
            Err(_) if all => rows.push("conway", "n/a (epsilon -1)"),
            Err(e) => return Err(input_error(e.to_string())),
        }
    }
    Ok(())
}

fn cmd_invariants(
    path: &Path,
    flags: InvariantFlags,
    format: Format,
) -> Result<(String, i32), Failure> {
    let payload = load_payload(path)?;
    let mut rows = Report::new();
    push_invariant_rows(&mut rows, &payload, flags)?;
    Ok((rows.render(format), EXIT_OK))
}

fn cmd_bandsum(path: &Path) -> Result<(String, i32), Failure> {
    let payload = load_payload(path)?;
    let Payload::Link2(p) = payload else {
        return Err(input_error("bandsum needs a link2 payload"));
    };
    let composed = Payload::Form(band_sum(&p));
    Ok((write_sfm(&composed), EXIT_OK))
}

fn format_basis(basis: &[Vec<i64>]) -> String {
    if basis.is_empty() {
        return "(empty)".to_string();
    }
    basis
        .iter()
        .map(|v| {
            let cells: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            format!("[{}]", cells.join(","))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_slice(
    path: &Path,
    search_bound: i64,
    rank_max: usize,
    expect: bool,
    format: Format,
) -> Result<(String, i32), Failure> {
    let form = load_payload(path)?.underlying_form();
    let options = SliceOptions {
        entry_bound: search_bound,
        rank_cap: rank_max,
        ..Default::default()
    };
    let r = slice_report(&form, &options).map_err(|e| input_error(e.to_string()))?;
    let mut rows = Report::new();
    rows.push("signature", r.signature);
    match &r.fox_milnor {
        FoxMilnor::Pass { witness } => {
            rows.push("fox_milnor", "pass");
            rows.push("fox_milnor.witness", witness);
        }
        FoxMilnor::Fail {
            factor,
            multiplicity,
        } => {
            rows.push("fox_milnor", "fail");
            rows.push(
                "fox_milnor.factor",
                format!("{factor} (multiplicity {multiplicity})"),
            );
        }
    }
    match r.arf {
        Some(a) => rows.push("arf", a),
        None => rows.push("arf", "n/a (epsilon -1)"),
    }
    match &r.metabolizer {
        MetabolizerOutcome::Found { basis } => {
            rows.push("metabolizer", "found");
            rows.push("metabolizer.basis", format_basis(basis));
        }
        MetabolizerOutcome::NotFoundWithinBounds {
            entry_bound,
            rank_cap,
        } => rows.push(
            "metabolizer",
            format!("not found within |entries| <= {entry_bound}, rank <= {rank_cap}"),
        ),
    }
    rows.push(
        "verdict",
        match r.verdict {
            Verdict::NotSlice => "not slice",
            Verdict::Inconclusive => "inconclusive (no obstruction found)",
        },
    );
    let code = if expect && r.verdict == Verdict::NotSlice {
        EXIT_CHECK_FAILED
    } else {
        EXIT_OK
    };
    Ok((rows.render(format), code))
}

fn cmd_ribbon(path: &Path, expect: bool, format: Format) -> Result<(String, i32), Failure> {
    let form = load_payload(path)?.underlying_form();
    let verdict = ribbon_obstruction(&form).map_err(|e| input_error(e.to_string()))?;
    let mut rows = Report::new();
    rows.push("obstructed", verdict.obstructed);
    if verdict.non_unit_divisors.is_empty() {
        rows.push("module_torsion", "none");
    } else {
        let list: Vec<String> = verdict
            .non_unit_divisors
            .iter()
            .map(|d| format!("({d})"))
            .collect();
        rows.push("module_torsion", list.join(" "));
    }
    let code = if expect && verdict.obstructed {
        EXIT_CHECK_FAILED
    } else {
        EXIT_OK
    };
    Ok((rows.render(format), code))
}

fn claim(value: Option<bool>) -> &'static str {
    match value {
        Some(true) => "holds",
        Some(false) => "VIOLATED",
        None => "not evaluated (undefined input)",
    }
}

fn cmd_prop12(path: &Path, format: Format) -> Result<(String, i32), Failure> {
    let payload = load_payload(path)?;
    let p = match payload {
        Payload::Link1(p) => p,
        Payload::Form(f) if f.kind() == FormKind::Link1 => {
            // bare link1 file: treat both components as unknotted
            let empty = SeifertForm::knot(IntMatrix::zeros(0, 0), Epsilon::Plus);
            LinkPresentation1::new(f, empty.clone(), empty)
                .map_err(|e| input_error(e.to_string()))?
        }
        _ => return Err(input_error("prop12 needs a link1 payload")),
    };
    let r = prop12_report(&p).map_err(|e| input_error(e.to_string()))?;
    let mut rows = Report::new();
    rows.push("lk", &r.lk);
    rows.push("c3", &r.c3);
    match r.beta_star {
        Some(b) => rows.push("beta_star", b),
        None => rows.push("beta_star", "undefined (odd linking number)"),
    }
    match r.lambda_mod2 {
        Some(l) => rows.push("lambda_mod2", l),
        None => rows.push("lambda_mod2", "undefined (odd linking number)"),
    }
    rows.push("arf_L", r.arf_l);
    rows.push("arf_L1", r.arf_l1);
    rows.push("arf_L2", r.arf_l2);
    rows.push("identity1", claim(r.identity1_holds));
    rows.push("identity2", claim(r.identity2_holds));
    if !r.violations.is_empty() {
        rows.push("violations", r.violations.join("; "));
    }
    Ok((rows.render(format), EXIT_OK))
}

fn cmd_check(suite: CheckCommand, format: Format) -> Result<(String, i32), Failure> {
    let reports: Vec<CheckReport> = match suite {
        CheckCommand::Additivity {
            epsilon,
            trials,
            rank_max,
            coupling_bound,
            seed,
        } => {
            let signs = match epsilon {
                Some(e) => vec![e],
                None => vec![Epsilon::Plus, Epsilon::Minus],
            };
            signs
                .into_iter()
                .map(|e| check_additivity(e, trials, rank_max, coupling_bound, seed))
                .collect()
        }
        CheckCommand::Prop12 { trials, seed } => vec![check_prop12(trials, seed)],
        CheckCommand::Oracles { trials, seed } => {
            let mut reports = check_oracles(trials, seed);
            reports.extend(check_properties(trials, seed));
            reports
        }
    };
    let mut text = String::new();
    for (i, report) in reports.iter().enumerate() {
        if i > 0 && format == Format::Table {
            text.push('\n');
        }
        text += &check_rows(report).render(format);
    }
    let code = if reports.iter().all(CheckReport::passed) {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    };
    Ok((text, code))
}

fn cmd_catalog(action: CatalogCommand, format: Format) -> Result<(String, i32), Failure> {
    match action {
        CatalogCommand::List => {
            let mut rows = Report::new();
            for entry in catalog() {
                rows.push(entry.name, entry.note);
            }
            Ok((rows.render(format), EXIT_OK))
        }
        CatalogCommand::Show { name } => {
            let entry = catalog_get(&name).map_err(|e| input_error(e.to_string()))?;
            let mut rows = Report::new();
            rows.push("name", entry.name);
            rows.push("note", entry.note);
            let everything = InvariantFlags {
                signature: false,
                arf: false,
                alexander: false,
                conway: false,
                det: false,
            };
            push_invariant_rows(&mut rows, &entry.payload, everything)?;
            Ok((rows.render(format), EXIT_OK))
        }
        CatalogCommand::Export { name, out } => {
            let entry = catalog_get(&name).map_err(|e| input_error(e.to_string()))?;
            let text = write_sfm(&entry.payload);
            match out {
                Some(path) => {
                    fs::write(&path, &text).map_err(|e| {
                        input_error(format!("cannot write {}: {e}", path.display()))
                    })?;
                    Ok((String::new(), EXIT_OK))
                }
                None => Ok((text, EXIT_OK)),
            }
        }
    }
}
