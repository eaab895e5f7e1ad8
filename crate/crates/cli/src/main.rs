//! `hgrade`: command-line driver.
//!
//! Exit codes: 0 success, 1 a cross-check or verification failed, 2 usage or
//! schema error, 3 the requested object does not exist (for example a
//! projector with a pole at δ = 0) or exceeds a size guard.

mod config;

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use hecke_grading::arith::{binom_at_zero_formula, binom_spec_table, is_prime, Fp, Scalar};
use hecke_grading::coxeter::{CoxeterError, CoxeterSystem};
use hecke_grading::dihedral_double0::{
    basis_to_csv, basis_to_json, check_invariants, compute_basis, compute_cells, structure_constant_check,
    summand_check, verify_closed_form, Double0Error, MAX_LENGTH,
};
use hecke_grading::grading::{validate, GradingGroup};
use hecke_grading::hecke::{hecke_to_json, HeckeAlgebra, HeckeElement, HeckeError, ParameterMap};
use hecke_grading::temperley_lieb::{
    check_jw_homogeneity, degree, element_to_json, jw_at_zero, jw_two_step, TLElement, TlError, TwoColorDegreeData,
};

#[derive(Parser)]
#[command(name = "hgrade", version, about = "Exact computations for graded Hecke categories")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum JwMethod {
    GenericSpecialize,
    TwoStep,
}

#[derive(Clone, Copy, ValueEnum)]
enum HeckeMethod {
    Iterative,
    Deodhar,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Params {
    Generic,
    Equal,
}

#[derive(Clone, Copy, ValueEnum)]
enum Double0Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Quantum binomials [n choose k] at δ = 0, optionally reduced mod p.
    Binom {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
    /// Jones–Wenzl projector in TL_n(0).
    Jw {
        #[arg(long)]
        n: usize,
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
        #[arg(long, value_enum, default_value_t = JwMethod::GenericSpecialize)]
        method: JwMethod,
        /// Print the degree of every diagram and a verdict.
        #[arg(long)]
        check_homogeneity: bool,
        /// Integer degrees f_s,g_s,f_t,g_t; symbolic degrees in ℤ⁴ if omitted.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        degrees: Option<Vec<i64>>,
        #[arg(long)]
        json: bool,
    },
    /// Validates a grading configuration clause by clause.
    GradingCheck {
        #[arg(long)]
        config: std::path::PathBuf,
    },
    /// Standard-basis expansion of a Bott–Samelson element.
    Hecke {
        /// "inf", an integer m for I₂(m), or A<n> for the symmetric group S_{n+1}.
        #[arg(long, default_value = "inf")]
        coxeter: String,
        /// Take the Coxeter matrix from a configuration file instead.
        #[arg(long)]
        config: Option<std::path::PathBuf>,
        #[arg(long, default_value = "")]
        expression: String,
        #[arg(long, value_enum, default_value_t = HeckeMethod::Both)]
        method: HeckeMethod,
        #[arg(long, value_enum, default_value_t = Params::Generic)]
        params: Params,
        #[arg(long)]
        json: bool,
    },
    /// The double-0 canonical basis of the infinite dihedral group.
    Double0 {
        #[arg(long, default_value_t = 10)]
        max_length: u64,
        /// Closed formulas, product identities and shape invariants.
        #[arg(long)]
        verify: bool,
        /// Windowed right and two-sided cells.
        #[arg(long)]
        cells: bool,
        #[arg(long, value_enum, default_value_t = Double0Format::Csv)]
        format: Double0Format,
    },
}

enum Failure {
    Mismatch(String),
    Usage(String),
    Absent(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Mismatch(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Absent(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Mismatch(m) | Failure::Usage(m) | Failure::Absent(m) => m,
        }
    }
}

impl From<TlError> for Failure {
    fn from(e: TlError) -> Self {
        match e {
            TlError::PoleAtZero | TlError::NonIntegralAtP { .. } | TlError::ProjectorMissing(_) | TlError::SizeLimit { .. } => {
                Failure::Absent(e.to_string())
            }
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<HeckeError> for Failure {
    fn from(e: HeckeError) -> Self {
        match e {
            HeckeError::Coxeter(CoxeterError::SizeLimit { .. }) => Failure::Absent(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<Double0Error> for Failure {
    fn from(e: Double0Error) -> Self {
        match e {
            Double0Error::Hecke(h) => h.into(),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn check_characteristic(p: u64) -> Result<(), Failure> {
    if p == 0 || is_prime(p) {
        Ok(())
    } else {
        Err(Failure::Usage(format!("characteristic {p} is neither 0 nor prime")))
    }
}

fn reduce(x: &BigInt, p: u64) -> String {
    if p == 0 {
        x.to_string()
    } else {
        Fp::from_bigint(x, p).to_string()
    }
}

fn cmd_binom(max_n: usize, p: u64, format: TableFormat) -> Outcome {
    check_characteristic(p)?;
    if max_n > 200 {
        return Err(Failure::Usage("--max-n is limited to 200".into()));
    }
    let table = binom_spec_table(max_n).map_err(|e| Failure::Mismatch(e.to_string()))?;
    let mut rows = Vec::new();
    for (n, row) in table.iter().enumerate() {
        for (k, value) in row.iter().enumerate() {
            let formula = binom_at_zero_formula(n, k);
            if *value != formula {
                return Err(Failure::Mismatch(format!("[{n} choose {k}] at 0 is {value}, formula gives {formula}")));
            }
            rows.push((n, k, reduce(value, p)));
        }
    }
    let mut out = String::new();
    match format {
        TableFormat::Text => {
            for (n, k, v) in rows {
                writeln!(out, "{n}\t{k}\t{v}").unwrap();
            }
        }
        TableFormat::Csv => {
            out.push_str("n,k,value\n");
            for (n, k, v) in rows {
                writeln!(out, "{n},{k},{v}").unwrap();
            }
        }
        TableFormat::Json => {
            let items: Vec<_> = rows.into_iter().map(|(n, k, v)| json!({"n": n, "k": k, "value": v})).collect();
            out = serde_json::to_string_pretty(&json!({"characteristic": p, "table": items})).unwrap();
            out.push('\n');
        }
    }
    Ok(out)
}

fn reduce_element(x: &TLElement<Scalar>, p: u64) -> Result<TLElement<Scalar>, Failure> {
    if p == 0 {
        return Ok(x.clone());
    }
    x.try_map_coeffs(Scalar::zero(p), |c| {
        let q = c.as_rational().expect("two-step works over ℚ");
        Scalar::from_rational(q, p).map_err(|e| Failure::Absent(format!("projector does not exist: {e}")))
    })
}

fn cmd_jw(n: usize, p: u64, method: JwMethod, check: bool, degrees: Option<Vec<i64>>, as_json: bool) -> Outcome {
    check_characteristic(p)?;
    let jw = match method {
        JwMethod::GenericSpecialize => jw_at_zero(n, p)?,
        JwMethod::TwoStep => {
            if n % 2 == 0 {
                return Err(Failure::Absent(format!("JW_{n} does not exist at δ = 0; the two-step recursion needs odd n")));
            }
            let two = reduce_element(&jw_two_step(n)?, p)?;
            let oracle = jw_at_zero(n, p)?;
            if two != oracle {
                return Err(Failure::Mismatch(format!("two-step JW_{n} differs from the specialised projector")));
            }
            two
        }
    };
    let data = match degrees {
        None => TwoColorDegreeData::symbolic(),
        Some(d) if d.len() != 4 => return Err(Failure::Usage("--degrees takes four integers f_s,g_s,f_t,g_t".into())),
        Some(d) => {
            let g = GradingGroup::free(1);
            TwoColorDegreeData::new(g.elem(&[d[0]]), g.elem(&[d[1]]), g.elem(&[d[2]]), g.elem(&[d[3]]))
        }
    };
    let report = if check { Some(check_jw_homogeneity(n, p, &data)?) } else { None };
    if as_json {
        let mut v = json!({"n": n, "characteristic": p, "projector": element_to_json(&jw)});
        if let Some(r) = &report {
            v["homogeneous"] = json!(r.homogeneous());
            v["degrees"] = json!(jw
                .terms()
                .into_iter()
                .map(|(m, _)| json!({"diagram": m.to_string(), "degree": degree(m, &data).representative()}))
                .collect::<Vec<_>>());
        }
        return Ok(serde_json::to_string_pretty(&v).unwrap() + "\n");
    }
    let mut out = String::new();
    for (m, c) in jw.terms() {
        if check {
            writeln!(out, "{c}\t{m}\t{:?}", degree(m, &data).representative()).unwrap();
        } else {
            writeln!(out, "{c}\t{m}").unwrap();
        }
    }
    if let Some(r) = report {
        let verdict = if r.homogeneous() { "homogeneous" } else { "not homogeneous" };
        writeln!(out, "verdict: {verdict} ({} diagrams, {} of nonzero degree)", r.diagrams, r.violators.len()).unwrap();
    }
    Ok(out)
}

fn read_config(path: &std::path::Path) -> Result<config::RealizationConfig, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    config::load(&text).map_err(Failure::Usage)
}

fn cmd_grading_check(path: &std::path::Path) -> Outcome {
    let c = read_config(path)?;
    let report = validate(&c.grading, &c.matrix, &c.cartan);
    let text = report.to_string();
    match report.first_failure() {
        None => Ok(text + "grading extends\n"),
        Some(r) => {
            print!("{text}");
            Err(Failure::Mismatch(format!("grading does not extend: {} fails", r.clause)))
        }
    }
}

fn parse_system(spec: &str) -> Result<CoxeterSystem, Failure> {
    let bad = || Failure::Usage(format!("unknown Coxeter system {spec:?}"));
    if spec == "inf" {
        return Ok(CoxeterSystem::Dihedral(None));
    }
    if let Some(rest) = spec.strip_prefix('A') {
        let n: usize = rest.parse().map_err(|_| bad())?;
        if n == 0 || n > 8 {
            return Err(Failure::Usage("type A rank must be between 1 and 8".into()));
        }
        return Ok(CoxeterSystem::Symmetric(n + 1));
    }
    let m: u64 = spec.parse().map_err(|_| bad())?;
    CoxeterSystem::dihedral(Some(m)).map_err(|e| Failure::Usage(e.to_string()))
}

fn system_from_matrix(m: &hecke_grading::grading::CoxeterMatrix) -> Result<CoxeterSystem, Failure> {
    let n = m.size();
    if n == 2 {
        return Ok(CoxeterSystem::Dihedral(m.get(0, 1)));
    }
    let sym = CoxeterSystem::Symmetric(n + 1);
    if (0..n).all(|s| (0..n).all(|t| m.get(s, t) == sym.m(s, t))) {
        Ok(sym)
    } else {
        Err(Failure::Usage("only rank two and type A Coxeter matrices are supported".into()))
    }
}

fn format_hecke(sys: &CoxeterSystem, h: &HeckeElement) -> String {
    let mut terms: Vec<_> = h.terms().collect();
    terms.sort_by_key(|(w, _)| (sys.length(w), (*w).clone()));
    let mut out = String::new();
    for (w, c) in terms {
        writeln!(out, "{}\t{c}", sys.word_string(w)).unwrap();
    }
    out
}

fn cmd_hecke(
    coxeter: &str,
    config: Option<&std::path::Path>,
    expression: &str,
    method: HeckeMethod,
    params: Params,
    as_json: bool,
) -> Outcome {
    let sys = match config {
        Some(p) => system_from_matrix(&read_config(p)?.matrix)?,
        None => parse_system(coxeter)?,
    };
    let word = sys.parse_expression(expression).map_err(|e| Failure::Usage(e.to_string()))?;
    let params = match params {
        Params::Generic => ParameterMap::generic(&sys),
        Params::Equal => ParameterMap::equal(&sys),
    };
    let h = HeckeAlgebra::new(sys, params);
    let result = match method {
        HeckeMethod::Iterative => h.bott_samelson(&word)?,
        HeckeMethod::Deodhar => h.deodhar_expand(&word)?,
        HeckeMethod::Both => {
            let a = h.bott_samelson(&word)?;
            if a != h.deodhar_expand(&word)? {
                return Err(Failure::Mismatch("defect formula disagrees with the iterated product".into()));
            }
            a
        }
    };
    if as_json {
        Ok(serde_json::to_string_pretty(&hecke_to_json(&sys, &result)).unwrap() + "\n")
    } else {
        Ok(format_hecke(&sys, &result))
    }
}

fn cmd_double0(n: u64, verify: bool, cells: bool, format: Double0Format) -> Outcome {
    if !(1..=MAX_LENGTH).contains(&n) {
        return Err(Failure::Usage(format!("--max-length must be between 1 and {MAX_LENGTH}")));
    }
    if cells && n < 8 {
        return Err(Failure::Usage("--cells needs --max-length at least 8".into()));
    }
    let basis = compute_basis(n)?;
    let mut failed = Vec::new();
    let mut report = serde_json::Map::new();
    if verify {
        let cf = verify_closed_form(&basis)?;
        for m in &cf.mismatches {
            failed.push(format!("closed form of {} differs at {}: expected {}, found {}", m.element, m.at, m.expected, m.found));
        }
        let inv = check_invariants(&basis)?;
        if !(inv.unitriangular && inv.spans_window) {
            failed.push("basis is not unitriangular".into());
        }
        let mut v = json!({
            "closed_form": {"checked": cf.checked, "passed": cf.passed()},
            "unitriangular": inv.unitriangular,
            "nonnegative_coefficients": inv.nonnegative,
            "non_monomial_coefficients": inv.non_monomial.len(),
            "non_monomial_only_at_odd_length": inv.non_monomial_only_at_odd_length(&basis.algebra().system),
        });
        if n >= 8 {
            let st = structure_constant_check(&basis, 8)?;
            for f in st.failures() {
                failed.push(format!("identity fails: {}", f.name));
            }
            v["identities"] = json!({"max_k": st.max_k, "checked": st.checks.len(), "passed": st.passed()});
        } else {
            v["identities"] = json!("skipped: needs --max-length at least 8");
        }
        report.insert("verification".into(), v);
    }
    if cells {
        let c = compute_cells(&basis)?;
        let (right_ok, two_ok) = c.matches_expected(&basis);
        let summands = summand_check(&basis, 5)?;
        if !(right_ok && two_ok && summands.violations.is_empty()) {
            failed.push("cell structure differs from the expected pattern".into());
        }
        let sys = &basis.algebra().system;
        let names = |cells: &[Vec<hecke_grading::coxeter::Element>]| -> Vec<Vec<String>> {
            cells.iter().map(|c| c.iter().map(|w| sys.word_string(w)).collect()).collect()
        };
        report.insert(
            "cells".into(),
            json!({
                "window": c.window,
                "right": names(&c.right_cells),
                "two_sided": names(&c.two_sided_cells),
                "matches_expected": {"right": right_ok, "two_sided": two_ok},
                "generator_summand_pairs": summands.pairs_checked,
                "generator_summand_violations": summands.violations.len(),
                "caveat": c.caveat,
            }),
        );
    }
    let out = match format {
        Double0Format::Json => {
            let mut v = basis_to_json(&basis);
            for (k, x) in report {
                v[k] = x;
            }
            serde_json::to_string_pretty(&v).unwrap() + "\n"
        }
        Double0Format::Csv => {
            let mut out = basis_to_csv(&basis);
            for (k, x) in report {
                writeln!(out, "# {k}: {x}").unwrap();
            }
            out
        }
    };
    if failed.is_empty() {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::Mismatch(failed.join("\n")))
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Binom { max_n, characteristic, format } => cmd_binom(max_n, characteristic, format),
        Command::Jw { n, characteristic, method, check_homogeneity, degrees, json } => {
            cmd_jw(n, characteristic, method, check_homogeneity, degrees, json)
        }
        Command::GradingCheck { config } => cmd_grading_check(&config),
        Command::Hecke { coxeter, config, expression, method, params, json } => {
            cmd_hecke(&coxeter, config.as_deref(), &expression, method, params, json)
        }
        Command::Double0 { max_length, verify, cells, format } => cmd_double0(max_length, verify, cells, format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("hgrade: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
