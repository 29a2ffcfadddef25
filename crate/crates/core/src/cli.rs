//! Command-line surface: compute reports, run exact verification suites,
//! extract witnesses, and manage the model catalog.

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::catalog::{builtin_model, CATALOG_KEYS};
use crate::cohomology::{self, CohomologyReport};
use crate::complex::SpecDocument;
use crate::error::{EngineError, Result};
use crate::hodge::{self, MetricSpec};
use crate::matrix::ExactMatrix;
use crate::scalar::GaussianRational;
use crate::twist::{leibniz_check, TwistedComplex};

#[derive(Debug, Parser)]
#[command(
    name = "twisted-hodge",
    version,
    about = "Exact twisted cohomology and Hodge theory of invariant complexes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the five cohomologies, natural maps, and verdicts.
    Compute(RunArgs),
    /// Run exact identity suites; nonzero exit iff a check fails.
    Verify(VerifyArgs),
    /// Extract and re-verify a witness of a failing lemma.
    Witness(RunArgs),
    /// Inspect the built-in model catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogCmd,
    },
    /// Print a catalog model as an algebra document (JSON).
    Export {
        /// Catalog key to export.
        #[arg(long)]
        model: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogCmd {
    /// List available models.
    List,
    /// Show one model's structure equations and canonical twists.
    Show {
        /// Catalog key.
        key: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Operators,
    Hodge,
    Kahler,
    Duality,
    Frolicher,
    All,
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    /// Catalog key of a built-in model (exclusive with --file).
    #[arg(long)]
    pub model: Option<String>,
    /// Path to an algebra document in JSON (exclusive with --model).
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Twist theta1 in the grammar `term (+|- term)*`, term = `coeff*mu<k>`
    /// or `mu<k>`; e.g. `1/2*mu1 - 1/3i*mu2`.
    #[arg(long, default_value = "0")]
    pub theta1: String,
    /// Twist theta2, same grammar as --theta1.
    #[arg(long, default_value = "0")]
    pub theta2: String,
    /// Hermitian metric as a JSON matrix of Q(i) strings, e.g.
    /// `[["1","i"],["-i","2"]]`; defaults to the identity.
    #[arg(long)]
    pub metric: Option<String>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: OutputFormat,
    /// Restrict table output to these comma-separated total degrees.
    #[arg(long)]
    pub degrees: Option<String>,
    /// Override the size guard on complex dimension.
    #[arg(long)]
    pub allow_large: bool,
}

/// Parse a twist expression into coefficient vectors for `mu^1..mu^n`.
pub fn parse_twist_expr(n: usize, input: &str) -> Result<Vec<GaussianRational>> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    let mut out = vec![GaussianRational::zero(); n];
    if s.is_empty() || s == "0" {
        return Ok(out);
    }
    // Split into signed terms at top-level + / -.
    let mut terms: Vec<String> = Vec::new();
    let mut cur = String::new();
    for (idx, c) in s.chars().enumerate() {
        if (c == '+' || c == '-') && idx > 0 {
            terms.push(std::mem::take(&mut cur));
            if c == '-' {
                cur.push('-');
            }
        } else {
            cur.push(c);
        }
    }
    terms.push(cur);
    for t in terms {
        if t.is_empty() {
            return Err(EngineError::ParseError(format!(
                "empty term in twist expression `{input}`"
            )));
        }
        let (neg, body) = match t.strip_prefix('-') {
            Some(b) => (true, b),
            None => (false, t.as_str()),
        };
        let (coeff_str, mu) = match body.split_once('*') {
            Some((c, m)) => (c, m),
            None => ("1", body),
        };
        let idx_str = mu.strip_prefix("mu").ok_or_else(|| {
            EngineError::ParseError(format!("expected mu<k> in twist term `{t}`"))
        })?;
        let k: usize = idx_str.parse().map_err(|_| {
            EngineError::ParseError(format!("bad generator index in twist term `{t}`"))
        })?;
        if k == 0 || k > n {
            return Err(EngineError::ParseError(format!(
                "generator index {k} out of range 1..={n} in `{t}`"
            )));
        }
        let mut c = GaussianRational::parse(coeff_str)?;
        if neg {
            c = -c;
        }
        out[k - 1] = &out[k - 1] + &c;
    }
    Ok(out)
}

fn parse_metric(n: usize, input: Option<&str>) -> Result<MetricSpec> {
    let Some(s) = input else {
        return Ok(MetricSpec::identity(n));
    };
    let rows: Vec<Vec<String>> = serde_json::from_str(s)
        .map_err(|e| EngineError::ParseError(format!("metric JSON: {e}")))?;
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(EngineError::BadMetric(format!(
            "metric must be a {n} x {n} matrix"
        )));
    }
    let mut h = ExactMatrix::zeros(n, n);
    for (r, row) in rows.iter().enumerate() {
        for (c, entry) in row.iter().enumerate() {
            h.set(r, c, GaussianRational::parse(entry)?);
        }
    }
    MetricSpec::new(n, h)
}

fn load_document(args: &RunArgs) -> Result<SpecDocument> {
    match (&args.model, &args.file) {
        (Some(_), Some(_)) | (None, None) => Err(EngineError::ParseError(
            "give exactly one of --model or --file".into(),
        )),
        (Some(key), None) => Ok(builtin_model(key)?.doc),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| EngineError::ParseError(format!("{}: {e}", path.display())))?;
            serde_json::from_str(&text)
                .map_err(|e| EngineError::ParseError(format!("{}: {e}", path.display())))
        }
    }
}

fn build(args: &RunArgs) -> Result<TwistedComplex> {
    let doc = load_document(args)?;
    let theta1 = parse_twist_expr(doc.n, &args.theta1)?;
    let theta2 = parse_twist_expr(doc.n, &args.theta2)?;
    crate::build_complex(&doc, theta1, theta2, args.allow_large)
}

fn parse_degrees(args: &RunArgs, top: usize) -> Result<Option<Vec<usize>>> {
    let Some(s) = &args.degrees else {
        return Ok(None);
    };
    let mut out = Vec::new();
    for part in s.split(',') {
        let k: usize = part.trim().parse().map_err(|_| {
            EngineError::ParseError(format!("bad degree list `{s}`"))
        })?;
        if k > top {
            return Err(EngineError::ParseError(format!(
                "degree {k} exceeds top degree {top}"
            )));
        }
        out.push(k);
    }
    Ok(Some(out))
}

// ---------------------------------------------------------------------------
// Rendering

fn report_table(report: &CohomologyReport, degrees: &Option<Vec<usize>>) -> String {
    let mut out = String::new();
    let push = |out: &mut String, s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    push(&mut out, format!("model: {}", report.model));
    push(
        &mut out,
        format!(
            "twist: theta1 = [{}], theta2 = [{}], phi = {}",
            report.twist.theta1.join(", "),
            report.twist.theta2.join(", "),
            report.twist.phi
        ),
    );
    push(&mut out, String::new());
    push(
        &mut out,
        format!("{:>4} {:>6} {:>6} {:>8} {:>6} {:>6}", "k", "dR", "del", "delbar", "BC", "A"),
    );
    for k in 0..report.dims.de_rham.len() {
        if let Some(ds) = degrees {
            if !ds.contains(&k) {
                continue;
            }
        }
        push(
            &mut out,
            format!(
                "{:>4} {:>6} {:>6} {:>8} {:>6} {:>6}",
                k,
                report.dims.de_rham[k],
                report.dims.del[k],
                report.dims.delbar[k],
                report.dims.bott_chern[k],
                report.dims.aeppli[k]
            ),
        );
    }
    push(&mut out, String::new());
    let v = &report.verdicts;
    push(&mut out, format!("lemma holds:               {}", v.lemma_holds));
    if !v.lemma_failing_degrees.is_empty() {
        push(
            &mut out,
            format!("lemma fails at degrees:    {:?}", v.lemma_failing_degrees),
        );
    }
    push(
        &mut out,
        format!("hodge decomposition holds: {}", v.hodge_decomposition_holds),
    );
    push(&mut out, format!("frolicher inequalities ok: {}", v.frolicher_ok));
    for (name, m) in &report.maps {
        push(
            &mut out,
            format!(
                "map {name}: injective = {}, surjective = {}",
                m.injective, m.surjective
            ),
        );
    }
    for r in report.inequalities.iter().filter(|r| !r.holds) {
        push(
            &mut out,
            format!(
                "inequality fails (allowed, unasserted): {} at degree {}: {} < {}",
                r.name, r.degree, r.lhs, r.rhs
            ),
        );
    }
    if let Some(w) = &report.witness {
        push(&mut out, String::new());
        push(&mut out, format!("witness (degree {}): {}", w.degree, w.form));
        if let (Some(op), Some(p)) = (&w.primitive_operator, &w.primitive) {
            push(&mut out, format!("primitive: {p}  (under {op})"));
        }
        for f in &w.memberships {
            push(&mut out, format!("  verified: {f}"));
        }
    }
    out
}

fn print_report(report: &CohomologyReport, args: &RunArgs, top: usize) -> Result<()> {
    match args.format {
        OutputFormat::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(report).expect("report serializes")
            );
        }
        OutputFormat::Table => {
            let degrees = parse_degrees(args, top)?;
            print!("{}", report_table(report, &degrees));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Subcommands

pub fn cmd_compute(args: &RunArgs) -> Result<()> {
    let tc = build(args)?;
    let name = load_document(args)?.name;
    let report = cohomology::analyze(&tc, &name)?;
    print_report(&report, args, tc.basis.top())
}

pub fn cmd_witness(args: &RunArgs) -> Result<()> {
    let tc = build(args)?;
    let name = load_document(args)?.name;
    let report = cohomology::analyze(&tc, &name)?;
    let Some(w) = &report.witness else {
        return Err(EngineError::NoWitness);
    };
    match args.format {
        OutputFormat::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&serde_json::json!({
                    "schema": "twisted-hodge/1",
                    "model": report.model,
                    "twist": report.twist,
                    "witness": w,
                }))
                .expect("witness serializes")
            );
        }
        OutputFormat::Table => {
            println!("model: {}", report.model);
            println!("witness (degree {}): {}", w.degree, w.form);
            if let (Some(op), Some(p)) = (&w.primitive_operator, &w.primitive) {
                println!("primitive: {p}  (under {op})");
            }
            for f in &w.memberships {
                println!("  verified: {f}");
            }
        }
    }
    Ok(())
}

pub fn cmd_verify(args: &RunArgs, suite: Suite) -> Result<()> {
    let tc = build(args)?;
    let mut results: Vec<(String, bool)> = Vec::new();
    let pass = |results: &mut Vec<(String, bool)>, name: &str| {
        results.push((name.to_string(), true));
    };

    let run_operators = |results: &mut Vec<(String, bool)>| -> Result<()> {
        if !tc.del_tw.compose(&tc.del_tw).is_zero() {
            return Err(EngineError::EquivalenceViolation("del_tw^2 != 0".into()));
        }
        results.push(("del_tw^2 = 0".into(), true));
        if !tc.delbar_tw.compose(&tc.delbar_tw).is_zero() {
            return Err(EngineError::EquivalenceViolation("delbar_tw^2 != 0".into()));
        }
        results.push(("delbar_tw^2 = 0".into(), true));
        if !tc.del_tw.anticommutator(&tc.delbar_tw).is_zero() {
            return Err(EngineError::EquivalenceViolation(
                "del_tw delbar_tw + delbar_tw del_tw != 0".into(),
            ));
        }
        results.push(("del_tw delbar_tw + delbar_tw del_tw = 0".into(), true));
        if !tc.d_phi.compose(&tc.d_phi).is_zero() {
            return Err(EngineError::EquivalenceViolation("d_phi^2 != 0".into()));
        }
        results.push(("d_phi^2 = 0".into(), true));
        if let Some(alpha) = leibniz_check(&tc) {
            return Err(EngineError::EquivalenceViolation(format!(
                "Leibniz rule fails on {}",
                crate::complex::format_form(tc.spec.n, &alpha)
            )));
        }
        results.push(("graded Leibniz rule on the full monomial basis".into(), true));
        Ok(())
    };

    let metric = parse_metric(tc.spec.n, args.metric.as_deref())?;

    match suite {
        Suite::Operators => run_operators(&mut results)?,
        Suite::Frolicher => {
            let spaces = cohomology::five_cohomologies(&tc);
            let records = cohomology::frolicher_audit(&tc, &spaces)?;
            for r in records.iter().filter(|r| r.asserted) {
                results.push((format!("{} at degree {}", r.name, r.degree), r.holds));
            }
        }
        Suite::Hodge | Suite::Kahler | Suite::Duality => {
            let ht = hodge::hodge_theory(&tc, metric.clone())?;
            pass(&mut results, "Gram and star adjoints agree (del_tw, delbar_tw, d_phi, L_phi)");
            pass(&mut results, "star(star(x)) = (-1)^k x");
            let laps = hodge::laplacians(&tc, &ht);
            pass(&mut results, "five Laplacians self-adjoint and positive semidefinite");
            match suite {
                Suite::Hodge => {
                    let spaces = cohomology::five_cohomologies(&tc);
                    hodge::harmonic_spaces(&laps, &spaces)?;
                    pass(&mut results, "harmonic dimensions match cohomology in all five theories");
                }
                Suite::Kahler => {
                    for c in hodge::kahler_identity_suite(&tc, &ht, &laps)? {
                        results.push((c.name, c.holds));
                    }
                }
                Suite::Duality => {
                    for c in hodge::star_duality_check(&tc, &ht, &laps)? {
                        results.push((c.name, c.holds));
                    }
                }
                _ => unreachable!(),
            }
        }
        Suite::All => {
            run_operators(&mut results)?;
            let spaces = cohomology::five_cohomologies(&tc);
            let records = cohomology::frolicher_audit(&tc, &spaces)?;
            results.push((
                format!(
                    "Frolicher-type inequalities ({} asserted records)",
                    records.iter().filter(|r| r.asserted).count()
                ),
                true,
            ));
            let ht = hodge::hodge_theory(&tc, metric.clone())?;
            pass(&mut results, "Gram and star adjoints agree (del_tw, delbar_tw, d_phi, L_phi)");
            let laps = hodge::laplacians(&tc, &ht);
            pass(&mut results, "five Laplacians self-adjoint and positive semidefinite");
            hodge::harmonic_spaces(&laps, &spaces)?;
            pass(&mut results, "harmonic dimensions match cohomology in all five theories");
            for c in hodge::star_duality_check(&tc, &ht, &laps)? {
                results.push((c.name, c.holds));
            }
            if ht.hs.kahler {
                for c in hodge::kahler_identity_suite(&tc, &ht, &laps)? {
                    results.push((c.name, c.holds));
                }
            } else {
                results.push(("Kahler suite skipped (metric is not Kahler)".into(), true));
            }
        }
    }
    match args.format {
        OutputFormat::Json => {
            let map: BTreeMap<String, bool> = results.into_iter().collect();
            println!(
                "{}",
                serde_json::to_string_pretty(&serde_json::json!({
                    "schema": "twisted-hodge/1",
                    "suite": format!("{suite:?}").to_lowercase(),
                    "checks": map,
                    "pass": true,
                }))
                .expect("serializes")
            );
        }
        OutputFormat::Table => {
            for (name, ok) in &results {
                println!("{} {}", if *ok { "PASS" } else { "FAIL" }, name);
            }
        }
    }
    Ok(())
}

pub fn cmd_catalog(action: &CatalogCmd) -> Result<()> {
    match action {
        CatalogCmd::List => {
            for key in CATALOG_KEYS {
                let entry = builtin_model(key)?;
                println!("{key:10} n={}  {}", entry.spec.n, entry.description);
            }
        }
        CatalogCmd::Show { key } => {
            let entry = builtin_model(key)?;
            println!("key:         {}", entry.key);
            println!("description: {}", entry.description);
            println!("n:           {}", entry.spec.n);
            for (k, f) in entry.spec.d_holo_gen.iter().enumerate() {
                println!(
                    "d mu{} = {}",
                    k + 1,
                    crate::complex::format_form(entry.spec.n, f)
                );
            }
            println!("canonical twists:");
            for (t1, t2) in &entry.interesting_twists {
                println!("  theta1 = {t1:14} theta2 = {t2}");
            }
        }
    }
    Ok(())
}

pub fn cmd_export(model: &str) -> Result<()> {
    let entry = builtin_model(model)?;
    println!(
        "{}",
        serde_json::to_string_pretty(&entry.doc).expect("document serializes")
    );
    Ok(())
}

// ---------------------------------------------------------------------------
// Exit-code policy

fn error_kind(e: &EngineError) -> &'static str {
    match e {
        EngineError::DivisionByZero => "DivisionByZero",
        EngineError::DimensionError(_) => "DimensionError",
        EngineError::NotAChainMap(_) => "NotAChainMap",
        EngineError::NotIntegrable(_) => "NotIntegrable",
        EngineError::NotALieAlgebra(_) => "NotALieAlgebra",
        EngineError::ParseError(_) => "ParseError",
        EngineError::SizeGuard(_) => "SizeGuard",
        EngineError::NotBottChernClosed(_) => "NotBottChernClosed",
        EngineError::BadMetric(_) => "BadMetric",
        EngineError::AdjointMismatch(_) => "AdjointMismatch",
        EngineError::HodgeIsoViolation(_) => "HodgeIsoViolation",
        EngineError::DualityViolation(_) => "DualityViolation",
        EngineError::KahlerIdentityViolation(_) => "KahlerIdentityViolation",
        EngineError::NotKahler => "NotKahler",
        EngineError::EquivalenceViolation(_) => "EquivalenceViolation",
        EngineError::InequalityViolation(_) => "InequalityViolation",
        EngineError::NoWitness => "NoWitness",
        EngineError::UnknownModel(_) => "UnknownModel",
    }
}

/// 2 for input/validation errors, 3 for failures of exact identities that are
/// theorems for valid input (engine bugs).
fn exit_code(e: &EngineError) -> i32 {
    match e {
        EngineError::NotAChainMap(_)
        | EngineError::AdjointMismatch(_)
        | EngineError::HodgeIsoViolation(_)
        | EngineError::DualityViolation(_)
        | EngineError::KahlerIdentityViolation(_)
        | EngineError::EquivalenceViolation(_)
        | EngineError::InequalityViolation(_) => 3,
        _ => 2,
    }
}

/// Run the parsed CLI; returns the process exit code.
pub fn run(cli: &Cli) -> i32 {
    let result = match &cli.command {
        Command::Compute(args) => cmd_compute(args),
        Command::Verify(v) => cmd_verify(&v.run, v.suite),
        Command::Witness(args) => cmd_witness(args),
        Command::Catalog { action } => cmd_catalog(action),
        Command::Export { model } => cmd_export(model),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!(
                "{}",
                serde_json::json!({
                    "schema": "twisted-hodge/1",
                    "error": { "kind": error_kind(&e), "message": e.to_string() },
                })
            );
            exit_code(&e)
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub run: RunArgs,
    /// Which exact-identity suite to run.
    #[arg(long, value_enum, default_value = "all")]
    pub suite: Suite,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twist_grammar() {
        let v = parse_twist_expr(2, "1/2*mu1 - 1/3i*mu2").unwrap();
        assert_eq!(v[0], GaussianRational::from_ratio(1, 2));
        assert_eq!(v[1], GaussianRational::from_ratios(0, 1, -1, 3));
        let v = parse_twist_expr(2, "mu1+1/2i*mu2").unwrap();
        assert_eq!(v[0], GaussianRational::one());
        assert_eq!(v[1], GaussianRational::from_ratios(0, 1, 1, 2));
        let v = parse_twist_expr(3, "0").unwrap();
        assert!(v.iter().all(|c| c.is_zero()));
        // Terms accumulate per generator.
        let v = parse_twist_expr(1, "mu1+mu1-1/2*mu1").unwrap();
        assert_eq!(v[0], GaussianRational::from_ratio(3, 2));
        assert!(parse_twist_expr(2, "mu3").is_err());
        assert!(parse_twist_expr(2, "nonsense").is_err());
        assert!(parse_twist_expr(2, "2^*mu1").is_err());
    }

    #[test]
    fn metric_parsing() {
        let m = parse_metric(2, Some(r#"[["1","i"],["-i","2"]]"#)).unwrap();
        assert_eq!(*m.h.get(0, 1), GaussianRational::i());
        assert!(parse_metric(2, Some(r#"[["1","i"],["i","2"]]"#)).is_err());
        assert!(parse_metric(2, Some("[")).is_err());
        assert!(parse_metric(1, None).is_ok());
    }
}
