//! `cychom` — exact cyclic (co)homology from the command line.
//!
//! Exit codes: `0` success, `1` a mathematical identity or certificate
//! failed (broken input data, gate refusal, probe failure), `2` usage or
//! parse error, `3` the computation would exceed the memory budget.

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_traits::Zero;

use cychom::input::{load_action, load_algebra, InputError};
use cychom::lambda::{verify_relations, LambdaMorphism};
use cychom::module::{canonical_cyclic_module, cocyclic_coalgebra_module};
use cychom::pairing::{
    characteristic_map, gated_cocycles, phi_map, s_compatibility_probe, well_definedness_probe,
    PairingError,
};
use cychom::qmat::{format_q, parse_q};
use cychom::report::{OutputFormat, Report, Table};
use cychom::theories::{connes_model, hc, hochschild_dims, Method, TheoryError};
use cychom::Q;

// ---------------------------------------------------------------------------
// Arguments.
// ---------------------------------------------------------------------------

#[derive(Parser)]
#[command(
    name = "cychom",
    version,
    about = "Exact cyclic and Hochschild (co)homology of finite-dimensional algebras",
    after_help = "Exit codes: 0 success, 1 mathematical violation, 2 usage error, 3 over budget.\n\
                  Every flag can also be set via CYCHOM_* environment variables; flags win."
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Output format: table, csv, or json.
    #[arg(long, global = true, env = "CYCHOM_OUTPUT", default_value = "table",
          value_parser = parse_output)]
    output: OutputFormat,

    /// Omit the timestamp so output is byte-identical across runs.
    #[arg(long, global = true, env = "CYCHOM_NO_TIMESTAMP")]
    no_timestamp: bool,

    /// Refuse computations whose estimated peak memory exceeds this many
    /// megabytes (0 = unlimited). The estimate is a coarse upper bound.
    #[arg(long, global = true, env = "CYCHOM_BUDGET_MB", default_value_t = 0)]
    budget_mb: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Check the defining relations of the index category (and optionally
    /// of the module attached to an algebra file) by exhaustive rewriting.
    Verify {
        /// Largest object level to instantiate relations at.
        #[arg(long, default_value_t = 4)]
        max_level: usize,
        /// Also check the structure-map relations of this algebra's module.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Truncation level for the module check.
        #[arg(long, default_value_t = 3)]
        truncation: usize,
    },
    /// Normalize a composite of generators, e.g. "s1_1 . d1_0 . t1^1"
    /// (rightmost factor applies first).
    Compose {
        /// The expression to normalize.
        expression: String,
    },
    /// Hochschild and cyclic dimensions of an algebra from a TOML file.
    Hc {
        /// Algebra file (kind = "algebra" or "group_algebra").
        #[arg(long)]
        input: PathBuf,
        /// Compute dimensions for degrees 0..=MAX.
        #[arg(long, env = "CYCHOM_MAX_DEGREE", default_value_t = 4)]
        max_degree: usize,
        /// connes, bicomplex, mixed, or all.
        #[arg(long, env = "CYCHOM_METHOD", default_value = "all",
              value_parser = parse_method)]
        method: MethodChoice,
        /// Truncation level (default: max-degree + 1, the smallest safe one).
        #[arg(long)]
        truncation: Option<usize>,
    },
    /// Pair gated cocycles of an action file against a trace.
    Charmap {
        /// Action file (kind = "action").
        #[arg(long)]
        action: PathBuf,
        /// Cocycle degree.
        #[arg(long, default_value_t = 0)]
        degree: usize,
        /// Trace functional as comma-separated fractions (default: the
        /// `trace` entry of the action file).
        #[arg(long)]
        trace: Option<String>,
        /// Pair this single cocycle (comma-separated fractions) instead of
        /// every gated basis vector.
        #[arg(long)]
        xi: Option<String>,
        /// Perturb each cocycle this many times and re-pair (0 = skip).
        #[arg(long, env = "CYCHOM_PROBE_TRIALS", default_value_t = 0)]
        probe_trials: usize,
        /// Seed for the perturbation probe.
        #[arg(long, default_value_t = 0xC0FFEE)]
        seed: u64,
        /// Also transport each class through the degree shift on both
        /// sides and record whether the results agree.
        #[arg(long)]
        s_compat: bool,
    },
}

#[derive(Clone, Copy)]
enum MethodChoice {
    All,
    One(Method),
}

fn parse_output(s: &str) -> Result<OutputFormat, String> {
    s.parse()
}

fn parse_method(s: &str) -> Result<MethodChoice, String> {
    if s.eq_ignore_ascii_case("all") {
        Ok(MethodChoice::All)
    } else {
        s.parse().map(MethodChoice::One)
    }
}

// ---------------------------------------------------------------------------
// Error-to-exit-code mapping.
// ---------------------------------------------------------------------------

enum CliError {
    /// A mathematical identity, gate, or certificate failed — exit 1.
    Math(String),
    /// Bad arguments, unreadable or unparseable file — exit 2.
    Usage(String),
    /// Estimated memory exceeds the budget — exit 3.
    Budget(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Math(m) => write!(f, "mathematical violation: {m}"),
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Budget(m) => write!(f, "over budget: {m}"),
        }
    }
}

impl From<InputError> for CliError {
    fn from(e: InputError) -> Self {
        match e {
            // Files that parse but describe broken mathematics are math
            // violations; everything else is a usage problem.
            InputError::Module(_) | InputError::Pairing(_) => CliError::Math(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<TheoryError> for CliError {
    fn from(e: TheoryError) -> Self {
        match e {
            // Asking outside the certified window is a usage problem.
            TheoryError::UnsafeDegree { .. } | TheoryError::WrongVariance { .. } => {
                CliError::Usage(e.to_string())
            }
            _ => CliError::Math(e.to_string()),
        }
    }
}

impl From<PairingError> for CliError {
    fn from(e: PairingError) -> Self {
        match e {
            PairingError::Theory(t) => t.into(),
            _ => CliError::Math(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut report = Report::new(!cli.common.no_timestamp);
    match run(&cli, &mut report) {
        Ok(clean) => {
            print!("{}", report.render(cli.common.output));
            if clean {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("cychom: {e}");
            match e {
                CliError::Math(_) => ExitCode::from(1),
                CliError::Usage(_) => ExitCode::from(2),
                CliError::Budget(_) => ExitCode::from(3),
            }
        }
    }
}

/// Runs the subcommand, filling `report`. `Ok(false)` means the report was
/// produced but records a mathematical violation (exit 1 after printing).
fn run(cli: &Cli, report: &mut Report) -> Result<bool, CliError> {
    match &cli.command {
        Command::Verify {
            max_level,
            input,
            truncation,
        } => cmd_verify(
            report,
            &cli.common,
            *max_level,
            input.as_deref(),
            *truncation,
        ),
        Command::Compose { expression } => cmd_compose(report, expression),
        Command::Hc {
            input,
            max_degree,
            method,
            truncation,
        } => cmd_hc(
            report,
            &cli.common,
            input,
            *max_degree,
            *method,
            *truncation,
        ),
        Command::Charmap {
            action,
            degree,
            trace,
            xi,
            probe_trials,
            seed,
            s_compat,
        } => cmd_charmap(
            report,
            &cli.common,
            action,
            *degree,
            trace.as_deref(),
            xi.as_deref(),
            *probe_trials,
            *seed,
            *s_compat,
        ),
    }
}

// ---------------------------------------------------------------------------
// Budget estimation.
// ---------------------------------------------------------------------------

/// Coarse upper bound on peak bytes for homology of one algebra: the
/// two-periodic grid stacks all levels `0..=N` into one total degree, and
/// elimination can densify, so charge (sum of level dimensions)^2 entries
/// at an assumed 64 bytes per exact rational.
fn homology_bytes(dim: usize, truncation: usize) -> u128 {
    let mut total: u128 = 0;
    let mut level: u128 = 1;
    for _ in 0..=truncation {
        level = level.saturating_mul(dim as u128);
        total = total.saturating_add(level);
    }
    total.saturating_mul(total).saturating_mul(64)
}

fn check_budget(common: &Common, bytes: u128, what: &str) -> Result<(), CliError> {
    if common.budget_mb == 0 {
        return Ok(());
    }
    let budget = (common.budget_mb as u128) * 1024 * 1024;
    if bytes > budget {
        return Err(CliError::Budget(format!(
            "{what}: estimated peak ~{} MiB exceeds --budget-mb {}",
            bytes / (1024 * 1024),
            common.budget_mb
        )));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Subcommands.
// ---------------------------------------------------------------------------

fn cmd_verify(
    report: &mut Report,
    common: &Common,
    max_level: usize,
    input: Option<&std::path::Path>,
    truncation: usize,
) -> Result<bool, CliError> {
    let mut table = Table::new(
        format!("relation checks (levels <= {max_level})"),
        ["check", "instances", "violations"],
    );
    let mut clean = true;

    let category = verify_relations(max_level);
    clean &= category.is_clean();
    table.push_row([
        "index category".to_string(),
        category.checked.to_string(),
        category.violations.len().to_string(),
    ]);

    if let Some(path) = input {
        let loaded = load_algebra(path)?;
        check_budget(
            common,
            homology_bytes(loaded.algebra.dim(), truncation),
            "verify",
        )?;
        let rep = canonical_cyclic_module(&loaded.algebra, truncation);
        let module_report = rep.check_relations();
        clean &= module_report.is_clean();
        let name = loaded.name.unwrap_or_else(|| path.display().to_string());
        table.push_row([
            format!("module of {name} (truncation {truncation})"),
            module_report.checked.to_string(),
            module_report.violations.len().to_string(),
        ]);
        for v in module_report.violations.iter().take(5) {
            table.push_row(["  violation".to_string(), String::new(), v.clone()]);
        }
    }
    for v in category.violations.iter().take(5) {
        table.push_row(["  violation".to_string(), String::new(), v.clone()]);
    }
    report.push(table);
    Ok(clean)
}

fn cmd_compose(report: &mut Report, expression: &str) -> Result<bool, CliError> {
    let morphism = LambdaMorphism::parse(expression).map_err(|e| CliError::Usage(e.to_string()))?;
    let mut table = Table::new("composition", ["field", "value"]);
    table.push_row(["expression", expression]);
    table.push_row(["normal form", &morphism.to_string()]);
    table.push_row(["source", &format!("[{}]", morphism.source())]);
    table.push_row(["target", &format!("[{}]", morphism.target())]);
    table.push_row([
        "underlying map".to_string(),
        format!("{:?}", morphism.underlying_map()),
    ]);
    table.push_row([
        "isomorphism".to_string(),
        morphism.is_isomorphism().to_string(),
    ]);
    report.push(table);
    Ok(true)
}

fn cmd_hc(
    report: &mut Report,
    common: &Common,
    input: &std::path::Path,
    max_degree: usize,
    method: MethodChoice,
    truncation: Option<usize>,
) -> Result<bool, CliError> {
    let loaded = load_algebra(input)?;
    let truncation = truncation.unwrap_or(max_degree + 1);
    if truncation <= max_degree {
        return Err(CliError::Usage(format!(
            "truncation {truncation} certifies degrees 0..={} only; raise it or lower --max-degree",
            truncation.saturating_sub(1)
        )));
    }
    check_budget(
        common,
        homology_bytes(loaded.algebra.dim(), truncation),
        "hc",
    )?;
    let name = loaded.name.unwrap_or_else(|| input.display().to_string());
    let rep = canonical_cyclic_module(&loaded.algebra, truncation);

    let hh = hochschild_dims(&rep, max_degree)?;
    let methods: Vec<Method> = match method {
        MethodChoice::All => Method::ALL.to_vec(),
        MethodChoice::One(m) => vec![m],
    };
    let tables: Vec<(Method, Vec<usize>)> = methods
        .iter()
        .map(|&m| hc(&rep, m, max_degree).map(|dims| (m, dims)))
        .collect::<Result<_, _>>()?;

    let mut columns = vec!["degree".to_string(), "hochschild".to_string()];
    for (m, _) in &tables {
        columns.push(format!("cyclic ({m})"));
    }
    columns.push("agree".to_string());
    let mut table = Table::new(
        format!(
            "dimensions of {name} (dim {}, truncation {truncation})",
            loaded.algebra.dim()
        ),
        columns,
    );
    let mut clean = true;
    for k in 0..=max_degree {
        let mut row = vec![k.to_string(), hh[k].to_string()];
        let first = tables[0].1[k];
        let agree = tables.iter().all(|(_, dims)| dims[k] == first);
        clean &= agree;
        for (_, dims) in &tables {
            row.push(dims[k].to_string());
        }
        row.push(if agree { "yes" } else { "NO" }.to_string());
        table.push_row(row);
    }
    report.push(table);
    Ok(clean)
}

#[allow(clippy::too_many_arguments)]
fn cmd_charmap(
    report: &mut Report,
    common: &Common,
    action_path: &std::path::Path,
    degree: usize,
    trace: Option<&str>,
    xi: Option<&str>,
    probe_trials: usize,
    seed: u64,
    s_compat: bool,
) -> Result<bool, CliError> {
    let loaded = load_action(action_path)?;
    let action = loaded.action;
    let nu: Vec<Q> = match trace {
        Some(text) => parse_fraction_list(text)?,
        None => loaded.trace.ok_or_else(|| {
            CliError::Usage(
                "no trace: pass --trace or add a `trace` entry to the action file".into(),
            )
        })?,
    };
    let measuring = action.measuring();
    let (dh, da) = (action.hopf().dim(), measuring.algebra().dim());
    check_budget(
        common,
        homology_bytes(dh.max(da), degree + if s_compat { 3 } else { 1 }),
        "charmap",
    )?;

    let c_side = cocyclic_coalgebra_module(action.hopf().coalgebra(), degree + 1);
    let candidates: Vec<(String, Vec<Q>)> = match xi {
        Some(text) => {
            let v = parse_fraction_list(text)?;
            if v.len() != c_side.dim(degree) {
                return Err(CliError::Usage(format!(
                    "--xi has length {}, expected {} at degree {degree}",
                    v.len(),
                    c_side.dim(degree)
                )));
            }
            vec![("xi".to_string(), v)]
        }
        None => gated_cocycles(&c_side, degree)?
            .into_iter()
            .enumerate()
            .map(|(i, v)| (format!("gated[{i}]"), v))
            .collect(),
    };

    let mut info = Table::new("pairing setup", ["field", "value"]);
    let name = loaded
        .name
        .unwrap_or_else(|| action_path.display().to_string());
    info.push_row(["action", &name]);
    info.push_row(["mode".to_string(), format!("{:?}", action.mode())]);
    info.push_row(["hopf dim".to_string(), dh.to_string()]);
    info.push_row(["algebra dim".to_string(), da.to_string()]);
    info.push_row(["degree".to_string(), degree.to_string()]);
    info.push_row(["trace".to_string(), fraction_list(&nu)]);
    info.push_row(["gated cocycles".to_string(), candidates.len().to_string()]);
    // The structural certificate: the pairing transformation commutes with
    // every generator at this truncation.
    let phi = phi_map(measuring, degree + 1)?;
    info.push_row([
        "certified generators".to_string(),
        phi.checked_generators.to_string(),
    ]);
    report.push(info);

    let dual = canonical_cyclic_module(measuring.algebra(), degree + 1).dualize();
    let model = connes_model(&dual)?;

    let mut columns = vec![
        "cocycle".to_string(),
        "coefficients".to_string(),
        "paired functional".to_string(),
        "class".to_string(),
    ];
    if probe_trials > 0 {
        columns.push("probe".to_string());
    }
    if s_compat {
        columns.push("shift transport".to_string());
    }
    let mut table = Table::new("paired classes", columns);
    let mut clean = true;
    for (label, v) in &candidates {
        let chi = characteristic_map(measuring, degree, v, &nu)?;
        let mut row = vec![
            label.clone(),
            fraction_list(v),
            fraction_list(&chi),
            if model.is_trivial_class(degree, &chi)? {
                "trivial".to_string()
            } else {
                "nontrivial".to_string()
            },
        ];
        if probe_trials > 0 {
            let outcome = well_definedness_probe(measuring, degree, v, &nu, probe_trials, seed)?;
            clean &= outcome.all_passed();
            row.push(format!(
                "{}/{}{}",
                outcome.passes,
                outcome.trials,
                if outcome.vacuous { " (vacuous)" } else { "" }
            ));
        }
        if s_compat {
            let verdict = s_compatibility_probe(measuring, degree, v, &nu)?;
            row.push(format!(
                "equal={} left_trivial={} right_trivial={}",
                verdict.classes_equal, verdict.left_trivial, verdict.right_trivial
            ));
        }
        table.push_row(row);
    }
    report.push(table);
    Ok(clean)
}

// ---------------------------------------------------------------------------
// Small parsers/formatters.
// ---------------------------------------------------------------------------

fn parse_fraction_list(text: &str) -> Result<Vec<Q>, CliError> {
    text.split(',')
        .map(|t| parse_q(t.trim()).map_err(CliError::Usage))
        .collect()
}

fn fraction_list(v: &[Q]) -> String {
    if v.iter().all(Q::is_zero) {
        return format!("0 (x{})", v.len());
    }
    v.iter().map(format_q).collect::<Vec<_>>().join(",")
}
