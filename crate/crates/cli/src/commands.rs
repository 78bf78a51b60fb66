//! Subcommands and their exit codes.
//!
//! Exit codes: 0 success, 1 malformed input or a violated precondition, 2 a
//! failed internal check (invariant violation, formula mismatch, failed audit
//! or verification suite).

use crate::io::{
    collection_of, decomposition_json, exst_json, measure_json, read_bodies, read_poset, read_support_difference,
    report_json, scaled_json, show_rational, show_scaled, show_vector, space_json, vector_json, InputError,
};
use crate::verify::{run_suite, VerifyConfig, SUITES};
use afx_core::criticality::{classify, CriticalityReport};
use afx_core::extremals::{extremal_space_with_seed, extremality_test_in, local_af_extension, ExtremalSpace};
use afx_core::mixedvol::{mixed_area_measure, mixed_volume};
use afx_core::stanley::exst_equivalence_audit;
use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use std::io::Write;
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(name = "afx", version, about = "Exact mixed volumes, extremal functions and poset sequences")]
pub struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Append decimal approximations, marked inexact.
    #[arg(long, global = true)]
    pub decimal: bool,
    /// Seed for background perturbations and random instances.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Mixed volume of n polytopes in R^n.
    Mixedvol { files: Vec<PathBuf> },
    /// Mixed area measure of n−1 polytopes in R^n.
    Areameasure { files: Vec<PathBuf> },
    /// Criticality class and reduction data of a reference collection.
    Classify { files: Vec<PathBuf> },
    /// Extremal space of a reference collection.
    Extremal {
        files: Vec<PathBuf>,
        /// Test a support difference `{"plus", "minus", "scale"}` for extremality.
        #[arg(long)]
        test: Option<PathBuf>,
    },
    /// Local extension of extremal functions off the active facets.
    Localaf {
        files: Vec<PathBuf>,
        /// Replaced body, 1-based; all bodies when omitted.
        #[arg(long)]
        r: Option<usize>,
    },
    /// Rank sequence of the distinguished element and its equality audit.
    Stanley { poset: PathBuf },
    /// Run the verification suites.
    Verify {
        /// Cap on random instances per suite.
        #[arg(long)]
        size: Option<usize>,
        /// Run a single suite.
        #[arg(long)]
        suite: Option<usize>,
    },
}

/// An error together with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }

    fn check(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::input(e.to_string())
    }
}

impl From<afx_core::Error> for Failure {
    fn from(e: afx_core::Error) -> Self {
        match e {
            afx_core::Error::Invariant(_) => Failure::check(e.to_string()),
            _ => Failure::input(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

/// Runs one command, writing results to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Outcome {
    match &cli.command {
        Command::Mixedvol { files } => mixedvol(cli, files, out),
        Command::Areameasure { files } => areameasure(cli, files, out),
        Command::Classify { files } => classify_cmd(cli, files, out),
        Command::Extremal { files, test } => extremal(cli, files, test.as_ref(), out),
        Command::Localaf { files, r } => localaf(cli, files, *r, out),
        Command::Stanley { poset } => stanley(cli, poset, out),
        Command::Verify { size, suite } => verify(cli, *size, *suite, out),
    }
}

fn load(files: &[PathBuf]) -> Result<afx_core::mixedvol::BodyCollection, Failure> {
    if files.is_empty() {
        return Err(Failure::input("no input files"));
    }
    let source = files[0].display().to_string();
    Ok(collection_of(read_bodies(files)?, &source)?)
}

fn emit(out: &mut dyn Write, v: &Value) -> Outcome {
    writeln!(out, "{}", serde_json::to_string_pretty(v).expect("serializable"))?;
    Ok(())
}

fn mixedvol(cli: &Cli, files: &[PathBuf], out: &mut dyn Write) -> Outcome {
    let c = load(files)?;
    let v = mixed_volume(&c)?;
    if cli.json {
        emit(out, &json!({"mixed_volume": scaled_json(&v)}))
    } else {
        writeln!(out, "{}", show_scaled(&v, cli.decimal))?;
        Ok(())
    }
}

fn areameasure(cli: &Cli, files: &[PathBuf], out: &mut dyn Write) -> Outcome {
    let c = load(files)?;
    let m = mixed_area_measure(&c)?;
    if cli.json {
        return emit(out, &measure_json(&m));
    }
    if m.is_zero() {
        writeln!(out, "zero measure")?;
    }
    for a in m.atoms() {
        writeln!(out, "{}  {}", show_vector(&a.normal), show_scaled(&a.weight, cli.decimal))?;
    }
    Ok(())
}

fn one_based(v: &[usize]) -> String {
    let items: Vec<String> = v.iter().map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn report_text(r: &CriticalityReport) -> String {
    let mut s = format!("class={}", r.class.name());
    if !r.eta.is_empty() {
        s += &format!(", eta={} (dim L_eta = {})", one_based(&r.eta), r.l_eta.dim());
    }
    if !r.maximal_sets.is_empty() {
        let sets: Vec<String> = r.maximal_sets.iter().map(|m| one_based(m)).collect();
        s += &format!(", maximal sets {}", sets.join(" "));
    }
    s
}

fn classify_cmd(cli: &Cli, files: &[PathBuf], out: &mut dyn Write) -> Outcome {
    let c = load(files)?;
    let r = classify(&c);
    if cli.json {
        emit(out, &report_json(&r))
    } else {
        writeln!(out, "{}", report_text(&r))?;
        Ok(())
    }
}

fn dimension_line(x: &ExtremalSpace) -> String {
    let mut s = format!(
        "class={}, dim X = {} = {} (linear)",
        x.criticality.class.name(),
        x.dim(),
        x.dim_l
    );
    for (k, c) in x.components.iter().enumerate() {
        s += &format!(" + {} (D_{})", c.dim, k + 1);
    }
    s
}

fn space(cli: &Cli, files: &[PathBuf]) -> Result<ExtremalSpace, Failure> {
    let c = load(files)?;
    let x = extremal_space_with_seed(&c, cli.seed)?;
    if x.dim() != x.formula_dim() || x.dim() != x.decomposition_rank() {
        return Err(Failure::check(format!(
            "dimension mismatch: kernel {}, formula {}, decomposition rank {}",
            x.dim(),
            x.formula_dim(),
            x.decomposition_rank()
        )));
    }
    Ok(x)
}

fn extremal(cli: &Cli, files: &[PathBuf], test: Option<&PathBuf>, out: &mut dyn Write) -> Outcome {
    let x = space(cli, files)?;
    let outcome = match test {
        Some(path) => Some(extremality_test_in(&x, &read_support_difference(path)?)?),
        None => None,
    };
    if cli.json {
        let mut v = space_json(&x);
        if let Some(o) = &outcome {
            v["test"] = json!({
                "extremal": o.extremal,
                "measure": measure_json(&o.measure),
                "decomposition": o.decomposition.as_ref().map(decomposition_json),
            });
        }
        return emit(out, &v);
    }
    writeln!(out, "{}", dimension_line(&x))?;
    writeln!(out, "active facets: {} of {}", x.active().len(), x.graph.num_facets())?;
    if let Some(o) = outcome {
        if o.extremal {
            writeln!(out, "extremal: yes")?;
        } else {
            writeln!(out, "extremal: no ({} atoms in S_f)", o.measure.len())?;
        }
        if let Some(d) = o.decomposition {
            writeln!(out, "linear part: {}", show_vector(&d.s))?;
            for (k, c) in d.components.iter().enumerate() {
                writeln!(out, "D_{} part: {}", k + 1, show_vector(c))?;
            }
        }
    }
    Ok(())
}

fn localaf(cli: &Cli, files: &[PathBuf], r: Option<usize>, out: &mut dyn Write) -> Outcome {
    let x = space(cli, files)?;
    let m = x.graph.reference.len();
    let rs: Vec<usize> = match r {
        Some(0) => return Err(Failure::input("--r is 1-based")),
        Some(r) if r > m => return Err(Failure::input(format!("--r {r} exceeds the {m} bodies"))),
        Some(r) => vec![r - 1],
        None => (0..m).collect(),
    };
    let mut rows = Vec::new();
    let mut failed = false;
    for &r in &rs {
        for (k, z) in x.basis.iter().enumerate() {
            let ext = local_af_extension(&x.graph, r, z)?;
            let pass = ext.audit_passes();
            failed |= !pass;
            if cli.json {
                rows.push(json!({
                    "r": r + 1,
                    "basis_index": k + 1,
                    "extension": vector_json(&ext.z),
                    "quadratic": vector_json(&ext.quadratic),
                    "audit": pass,
                }));
            } else {
                let worst = ext.quadratic.iter().max().cloned().unwrap_or_default();
                writeln!(
                    out,
                    "r={} z_{}: max quadratic term {}, audit {}",
                    r + 1,
                    k + 1,
                    show_rational(&worst, cli.decimal),
                    if pass { "pass" } else { "FAIL" }
                )?;
            }
        }
    }
    if cli.json {
        emit(out, &json!({"extensions": rows}))?;
    }
    if failed {
        return Err(Failure::check("local extension audit failed"));
    }
    Ok(())
}

fn list(v: &[usize]) -> String {
    v.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
}

fn stanley(cli: &Cli, path: &PathBuf, out: &mut dyn Write) -> Outcome {
    let p = read_poset(path)?;
    let r = exst_equivalence_audit(&p);
    if cli.json {
        emit(out, &exst_json(&r))?;
    } else {
        let counts: Vec<String> = r.counts.counts.iter().map(|c| c.to_string()).collect();
        let zeros = r.counts.zero_indices();
        let mut line = format!("N = [{}]", counts.join(", "));
        if !zeros.is_empty() {
            line += &format!("; trivial zeros at i={}", list(&zeros));
        }
        writeln!(out, "{line}")?;
        writeln!(out, "log-concave: {}", if r.log_concave { "yes" } else { "no" })?;
        writeln!(out, "equality at i: {}", none_or(&r.equality_indices()))?;
        writeln!(out, "condition d at i: {}", none_or(&r.condition_d_indices()))?;
        writeln!(out, "audit: {}", if r.passes() { "pass" } else { "FAIL" })?;
    }
    if !r.passes() {
        return Err(Failure::check("equality audit failed"));
    }
    Ok(())
}

fn none_or(v: &[usize]) -> String {
    if v.is_empty() {
        "none".into()
    } else {
        list(v)
    }
}

fn verify(cli: &Cli, size: Option<usize>, suite: Option<usize>, out: &mut dyn Write) -> Outcome {
    let cfg = VerifyConfig { seed: cli.seed, size };
    let ids: Vec<usize> = match suite {
        Some(k) if (1..=SUITES).contains(&k) => vec![k],
        Some(k) => return Err(Failure::input(format!("no suite {k}; suites are 1..={SUITES}"))),
        None => (1..=SUITES).collect(),
    };
    let mut failed = 0;
    let mut rows = Vec::new();
    for id in ids {
        let r = run_suite(id, &cfg);
        if !r.passed() {
            failed += 1;
        }
        if cli.json {
            rows.push(json!({
                "criterion": r.id,
                "title": r.title,
                "pass": r.passed(),
                "instances": r.instances,
                "failures": r.failures.iter().map(|f| json!({"what": f.what, "instance": f.instance})).collect::<Vec<_>>(),
            }));
        } else {
            writeln!(out, "{}", r.line())?;
            for d in r.details() {
                writeln!(out, "{d}")?;
            }
        }
    }
    if cli.json {
        emit(out, &json!({"seed": cli.seed, "suites": rows}))?;
    }
    if failed > 0 {
        return Err(Failure::check(format!("{failed} suite(s) failed")));
    }
    Ok(())
}
