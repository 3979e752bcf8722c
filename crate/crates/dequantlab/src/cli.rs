//! Argument parsing and command dispatch.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dequantlab_core::census::{
    proposition_witness, separable_fraction, CensusError, CensusReport, MAX_BRUTE_FORCE_ARITY,
};
use dequantlab_core::limits;
use dequantlab_core::linalg::Mat2;
use dequantlab_core::optical::{decompose_su2, optical_deutsch, optical_dj2, OpticalError};
use dequantlab_core::oracle::{classify, BooleanFunction};
use dequantlab_core::qstate::StateError;
use dequantlab_core::separability::{
    entanglement_scan, factor_product_state, pair_product_invariant, Factorization,
    PairProductLevel, SeparabilityError,
};
use dequantlab_core::solver::{
    solve_deutsch_classical, solve_dj2_classical, solve_dj_dequantised, solve_dj_quantum,
    SolveResult, SolverError,
};
use dequantlab_core::Complex64;
use serde_json::{json, Map, Value};

use crate::census_parallel::parallel_census;
use crate::input::{parse_inline, read_tables, Table};
use crate::report::{Format, Report, EXIT_FAILURE, EXIT_OK, EXIT_USAGE};
use crate::verify::{run_all, Fault, VerifyConfig, CENSUS_THREADS};

/// Environment variable overriding the state-size ceiling in qubits.
pub const MAX_QUBITS_ENV: &str = "DEQUANTLAB_MAX_QUBITS";

/// Largest arity for which the full bipartition scan is reported.
pub const CUT_SCAN_MAX_QUBITS: usize = 6;
/// Largest arity for which the witness command scans qubits.
pub const WITNESS_SCAN_MAX_QUBITS: usize = 12;

#[derive(Debug, Parser)]
#[command(
    name = "dequantlab",
    version,
    about = "Deutsch-Jozsa simulation, separability analysis and classical de-quantisation"
)]
pub struct Cli {
    /// Emit a single JSON object instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// Truth table: a binary string such as 0110, or hex such as 0x6.
    #[arg(
        long = "f",
        value_name = "TABLE",
        required_unless_present = "file",
        conflicts_with = "file"
    )]
    pub table: Option<String>,
    /// File with one truth table per line.
    #[arg(long, value_name = "PATH")]
    pub file: Option<PathBuf>,
    /// Arity, required to pad hex tables.
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// State-vector simulation, any n.
    Quantum,
    /// Complex-bit black-box, n <= 2.
    Classical,
    /// Photon polarisation with wave plates, n <= 2.
    Optical,
    /// Product oracle on independent two-component vectors.
    Dequantised,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Quantum => "quantum",
            Method::Classical => "classical",
            Method::Optical => "optical",
            Method::Dequantised => "dequantised",
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide constant vs balanced with one black-box query.
    Solve {
        #[command(flatten)]
        tables: TableArgs,
        #[arg(long, value_enum, default_value_t = Method::Quantum)]
        method: Method,
    },
    /// Classify tables as constant, balanced or invalid.
    Classify {
        #[command(flatten)]
        tables: TableArgs,
    },
    /// Pair-product, factorisation and bipartition analysis of the oracle state.
    Separability {
        #[command(flatten)]
        tables: TableArgs,
    },
    /// Count valid and separable functions.
    Census {
        /// Number of input bits.
        #[arg(long)]
        n: usize,
        /// Scan every truth table instead of using the formulas (n <= 4).
        #[arg(long)]
        brute_force: bool,
        /// List the separable functions.
        #[arg(long)]
        list: bool,
        /// Add a row per arity 1..=n.
        #[arg(long)]
        table: bool,
        /// Worker threads for the brute-force scan.
        #[arg(long, default_value_t = CENSUS_THREADS)]
        threads: usize,
    },
    /// Balanced function whose oracle state has no separable qubit.
    Witness {
        /// Number of input bits, at least 3.
        #[arg(long)]
        n: usize,
    },
    /// Quarter/half/quarter wave-plate angles for a 2x2 special unitary.
    #[command(name = "decompose-su2")]
    DecomposeSu2 {
        /// Eight reals, row-major with re/im interleaved.
        #[arg(required = true, num_args = 1.., allow_negative_numbers = true)]
        values: Vec<String>,
        /// Accept any unitary and divide out the square root of its determinant.
        #[arg(long)]
        rescale: bool,
    },
    /// Run the acceptance suite.
    Verify {
        /// Largest arity used by the exhaustive checks.
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        /// Seed for the randomised checks.
        #[arg(long)]
        seed: Option<u64>,
        /// Wire a sign flip into the black-box; the suite must fail.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

/// Applies `DEQUANTLAB_MAX_QUBITS` if set.
pub fn configure_from_env() -> Result<Option<usize>, String> {
    match std::env::var(MAX_QUBITS_ENV) {
        Ok(v) => {
            let n: usize = v
                .trim()
                .parse()
                .map_err(|_| format!("{MAX_QUBITS_ENV}={v:?} is not a qubit count"))?;
            if n == 0 || n > limits::ABSOLUTE_MAX_QUBITS {
                return Err(format!(
                    "{MAX_QUBITS_ENV}={n} outside 1..={}",
                    limits::ABSOLUTE_MAX_QUBITS
                ));
            }
            Ok(Some(limits::set_max_qubits(n)))
        }
        Err(_) => Ok(None),
    }
}

impl Cli {
    pub fn format(&self) -> Format {
        if self.json {
            Format::Json
        } else {
            Format::Text
        }
    }
}

/// Runs a parsed command. `echo` is the command line shown in the report.
pub fn run(cli: &Cli, echo: &str) -> Report {
    match &cli.command {
        Command::Solve { tables, method } => per_table(echo, tables, |t| solve(t, *method)),
        Command::Classify { tables } => per_table(echo, tables, classify_table),
        Command::Separability { tables } => per_table(echo, tables, separability),
        Command::Census {
            n,
            brute_force,
            list,
            table,
            threads,
        } => census(echo, *n, *brute_force, *list, *table, *threads),
        Command::Witness { n } => witness(echo, *n),
        Command::DecomposeSu2 { values, rescale } => decompose(echo, values, *rescale),
        Command::Verify {
            max_n,
            seed,
            inject_fault,
        } => verify(echo, *max_n, *seed, *inject_fault),
    }
}

/// Result of one table: payload fields and exit code.
struct Outcome {
    fields: Map<String, Value>,
    exit_code: i32,
}

impl Outcome {
    fn fail(code: i32, mut fields: Map<String, Value>, message: String) -> Self {
        fields.insert("status".into(), "error".into());
        fields.insert("error".into(), message.into());
        Outcome {
            fields,
            exit_code: code,
        }
    }
}

fn into_map(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        other => {
            let mut m = Map::new();
            m.insert("value".into(), other);
            m
        }
    }
}

fn load_tables(args: &TableArgs) -> Result<Vec<Table>, String> {
    if let Some(n) = args.n {
        if n > limits::max_qubits() {
            return Err(format!(
                "arity {n} exceeds the state-size ceiling of {} qubits (set {MAX_QUBITS_ENV} to raise it)",
                limits::max_qubits()
            ));
        }
    }
    let tables = match (&args.table, &args.file) {
        (Some(t), _) => vec![parse_inline(t, args.n).map_err(|e| e.to_string())?],
        (None, Some(path)) => read_tables(path, args.n).map_err(|e| e.to_string())?,
        (None, None) => return Err("one of --f or --file is required".into()),
    };
    if let Some(t) = tables
        .iter()
        .find(|t| t.function.n() > limits::max_qubits())
    {
        return Err(format!(
            "table {} has arity {}, above the state-size ceiling of {} qubits",
            t.source,
            t.function.n(),
            limits::max_qubits()
        ));
    }
    Ok(tables)
}

/// Runs `each` per table. A single table fills the report directly; several
/// are listed under `results` and the worst exit code wins.
fn per_table(echo: &str, args: &TableArgs, each: impl Fn(&Table) -> Outcome) -> Report {
    let tables = match load_tables(args) {
        Ok(t) => t,
        Err(e) => return Report::error(echo, EXIT_USAGE, e),
    };
    let mut outcomes: Vec<Outcome> = tables.iter().map(each).collect();
    let mut report = Report::new(echo);
    report.exit_code = outcomes
        .iter()
        .map(|o| o.exit_code)
        .max()
        .unwrap_or(EXIT_OK);
    if outcomes.len() == 1 {
        report.payload = outcomes.remove(0).fields;
    } else {
        report.insert("count", outcomes.len());
        let results: Vec<Value> = outcomes
            .into_iter()
            .map(|o| Value::Object(o.fields))
            .collect();
        report.insert("results", results);
    }
    report
}

fn base_fields(t: &Table) -> Map<String, Value> {
    let c = classify(&t.function);
    into_map(json!({
        "table": t.function.to_bit_string(),
        "n": t.function.n(),
        "kind": c.kind.as_str(),
        "ones": c.ones_count,
    }))
}

/// Compact decimal rendering of a complex number.
pub fn fmt_complex(c: Complex64) -> String {
    fn num(x: f64) -> String {
        let x = if x.abs() < 1e-15 { 0.0 } else { x };
        let s = format!("{x:.12}");
        let s = s.trim_end_matches('0').trim_end_matches('.');
        if s == "-0" {
            "0".into()
        } else {
            s.into()
        }
    }
    let (re, im) = (num(c.re), num(c.im));
    match (re.as_str(), im.as_str()) {
        (_, "0") => re,
        ("0", "1") => "i".into(),
        ("0", "-1") => "-i".into(),
        ("0", _) => format!("{im}i"),
        (_, i) if i.starts_with('-') => format!("{re}{im}i"),
        _ => format!("{re}+{im}i"),
    }
}

fn solver_failure(fields: Map<String, Value>, e: &SolverError) -> Outcome {
    match e {
        SolverError::PromiseViolated { .. } | SolverError::DecodeMismatch { .. } => {
            let message = match e {
                SolverError::PromiseViolated { .. } => e.to_string(),
                _ => format!("promise violated: {e}"),
            };
            Outcome::fail(EXIT_FAILURE, fields, message)
        }
        SolverError::Entangled { .. } => Outcome::fail(EXIT_FAILURE, fields, e.to_string()),
        SolverError::State(StateError::TooManyQubits { .. }) => {
            Outcome::fail(EXIT_USAGE, fields, e.to_string())
        }
        _ => Outcome::fail(EXIT_FAILURE, fields, e.to_string()),
    }
}

fn solve(t: &Table, method: Method) -> Outcome {
    let f = &t.function;
    let mut fields = base_fields(t);
    fields.insert("method".into(), method.name().into());
    let n = f.n();
    if matches!(method, Method::Classical | Method::Optical) && n >= 3 {
        let message = format!(
            "no separable de-quantisation: the {} route covers n <= 2 only. From n = 3 a \
             balanced oracle can entangle the register (00011110 does), and the separable \
             share of valid functions falls to {} at n = {n}; use --method dequantised to \
             test this f",
            method.name(),
            separable_fraction(n.min(30)).map_or_else(|_| "almost zero".into(), |r| r.to_string()),
        );
        return Outcome::fail(EXIT_USAGE, fields, message);
    }
    if method == Method::Classical && !classify(f).kind.is_valid() {
        let e = SolverError::PromiseViolated {
            ones: f.ones(),
            len: f.len(),
            zero_probability: None,
        };
        return solver_failure(fields, &e);
    }
    let result: Result<SolveResult, SolverError> = match method {
        Method::Quantum => solve_dj_quantum(f),
        Method::Classical if n == 1 => solve_deutsch_classical(f),
        Method::Classical => solve_dj2_classical(f),
        Method::Dequantised => solve_dj_dequantised(f),
        Method::Optical => {
            let r = if n == 1 {
                optical_deutsch(f)
            } else {
                optical_dj2(f)
            };
            match r {
                Ok(r) => Ok(r),
                Err(OpticalError::Solver(e)) => Err(e),
                Err(e) => return Outcome::fail(EXIT_FAILURE, fields, e.to_string()),
            }
        }
    };
    match result {
        Ok(r) => {
            fields.insert("verdict".into(), r.verdict.as_str().into());
            fields.insert("oracle_calls".into(), r.oracle_calls.into());
            fields.insert(
                "identified_function".into(),
                r.identified_function
                    .as_ref()
                    .map_or(Value::Null, |g| g.to_bit_string().into()),
            );
            if let Some(d) = &r.distribution {
                fields.insert("zero_probability".into(), d.probability(0).into());
            }
            fields.insert("trace".into(), r.trace.clone().into());
            Outcome {
                fields,
                exit_code: EXIT_OK,
            }
        }
        Err(e) => {
            if let SolverError::PromiseViolated {
                zero_probability: Some(p),
                ..
            } = e
            {
                fields.insert("zero_probability".into(), p.into());
            }
            solver_failure(fields, &e)
        }
    }
}

fn classify_table(t: &Table) -> Outcome {
    Outcome {
        fields: base_fields(t),
        exit_code: EXIT_OK,
    }
}

fn ppi_json(f: &BooleanFunction) -> Result<Value, SeparabilityError> {
    let state = f.phase_state()?;
    if f.n() < 2 {
        return Ok(Value::Null);
    }
    let report = pair_product_invariant(&state)?;
    let levels: Vec<Value> = report
        .levels
        .iter()
        .map(|l| match *l {
            PairProductLevel::Consistent { k, constant } => json!({
                "k": k,
                "consistent": true,
                "constant": fmt_complex(constant),
            }),
            PairProductLevel::Violated { k, first, second } => {
                let big_k = 1usize << k;
                json!({
                    "k": k,
                    "consistent": false,
                    "violation": format!(
                        "a{first}*a{} != a{second}*a{}",
                        big_k - first - 1,
                        big_k - second - 1
                    ),
                })
            }
        })
        .collect();
    Ok(json!({
        "invariant": report.invariant,
        "exact": report.exact,
        "decides_separability": report.decides_separability(),
        "levels": levels,
    }))
}

fn separability(t: &Table) -> Outcome {
    let f = &t.function;
    let mut fields = base_fields(t);
    let analysis = (|| -> Result<(), SeparabilityError> {
        fields.insert("ppi".into(), ppi_json(f)?);
        let state = f.phase_state()?;
        match factor_product_state(&state)? {
            Factorization::Product(p) => {
                fields.insert("separable".into(), true.into());
                let factors: Vec<Value> = p
                    .factors
                    .iter()
                    .map(|q| {
                        format!(
                            "({}, {})",
                            fmt_complex(q.amplitude(0)),
                            fmt_complex(q.amplitude(1))
                        )
                        .into()
                    })
                    .collect();
                fields.insert("factors".into(), factors.into());
                fields.insert("global_phase".into(), fmt_complex(p.global_phase).into());
            }
            Factorization::Entangled { qubit } => {
                fields.insert("separable".into(), false.into());
                fields.insert("entangled_at_qubit".into(), qubit.into());
            }
        }
        let scan = entanglement_scan(&state, CUT_SCAN_MAX_QUBITS)?;
        fields.insert(
            "separable_qubits".into(),
            scan.separable_qubits.clone().into(),
        );
        if let Some(cuts) = &scan.separable_cuts {
            let cuts: Vec<Value> = cuts.iter().map(|c| c.clone().into()).collect();
            fields.insert("separable_cuts".into(), cuts.into());
        }
        Ok(())
    })();
    match analysis {
        Ok(()) => Outcome {
            fields,
            exit_code: EXIT_OK,
        },
        Err(e) => Outcome::fail(EXIT_USAGE, fields, e.to_string()),
    }
}

fn census_error(echo: &str, e: CensusError) -> Report {
    let hint = match e {
        CensusError::ArityTooLarge { .. } => format!(
            "{e}; brute force covers n <= {MAX_BRUTE_FORCE_ARITY}, drop --brute-force to use the formulas"
        ),
        _ => e.to_string(),
    };
    Report::error(echo, EXIT_USAGE, hint)
}

fn census(
    echo: &str,
    n: usize,
    brute_force: bool,
    list: bool,
    table: bool,
    threads: usize,
) -> Report {
    let result = if brute_force {
        parallel_census(n, threads).map(|mut r| {
            if !list {
                r.separable_set = None;
            }
            r
        })
    } else {
        CensusReport::from_formulas(n, list)
    };
    let r = match result {
        Ok(r) => r,
        Err(e) => return census_error(echo, e),
    };
    let mut report = Report::new(echo);
    report.insert("n", r.n);
    report.insert("a_n", r.separable_count.to_string());
    report.insert("b_n", r.valid_count.to_string());
    report.insert("fraction", r.fraction.to_string());
    report.insert("method", r.method.as_str());
    if brute_force {
        report.insert("threads", threads.max(1));
    }
    if let Some(set) = &r.separable_set {
        let tables: Vec<Value> = set.iter().map(|f| f.to_bit_string().into()).collect();
        report.insert("separable_set", tables);
    }
    if table {
        let rows: Result<Vec<Value>, CensusError> = (1..=n)
            .map(|k| {
                let row = CensusReport::from_formulas(k, false)?;
                Ok(json!({
                    "n": k,
                    "a_n": row.separable_count.to_string(),
                    "b_n": row.valid_count.to_string(),
                    "fraction": row.fraction.to_string(),
                }))
            })
            .collect();
        match rows {
            Ok(rows) => report.insert("rows", rows),
            Err(e) => return census_error(echo, e),
        }
    }
    report
}

fn witness(echo: &str, n: usize) -> Report {
    if n > limits::max_qubits() {
        return Report::error(
            echo,
            EXIT_USAGE,
            format!(
                "arity {n} exceeds the state-size ceiling of {} qubits",
                limits::max_qubits()
            ),
        );
    }
    let w = match proposition_witness(n) {
        Ok(w) => w,
        Err(e) => return Report::error(echo, EXIT_USAGE, e.to_string()),
    };
    let mut report = Report::new(echo);
    report.insert("n", n);
    report.insert("table", w.to_bit_string());
    report.insert("kind", classify(&w).kind.as_str());
    if n <= WITNESS_SCAN_MAX_QUBITS {
        let scan = w
            .phase_state()
            .map_err(SeparabilityError::from)
            .and_then(|s| entanglement_scan(&s, CUT_SCAN_MAX_QUBITS));
        match scan {
            Ok(scan) => {
                report.insert("separable_qubits", scan.separable_qubits.clone());
                report.insert("no_separable_qubit", scan.no_separable_qubit());
                if let Some(none) = scan.no_separable_cut() {
                    report.insert("no_separable_cut", none);
                }
            }
            Err(e) => return Report::error(echo, EXIT_FAILURE, e.to_string()),
        }
    }
    report
}

fn parse_matrix(values: &[String]) -> Result<Mat2, String> {
    let reals: Vec<f64> = values
        .iter()
        .flat_map(|v| v.split_whitespace())
        .map(|s| {
            s.parse::<f64>()
                .map_err(|_| format!("{s:?} is not a real number"))
        })
        .collect::<Result<_, _>>()?;
    let arr: [f64; 8] = reals
        .as_slice()
        .try_into()
        .map_err(|_| format!("expected 8 reals, got {}", reals.len()))?;
    if arr.iter().any(|x| !x.is_finite()) {
        return Err("matrix entries must be finite".into());
    }
    Ok(Mat2::from_interleaved(arr))
}

fn decompose(echo: &str, values: &[String], rescale: bool) -> Report {
    let mut u = match parse_matrix(values) {
        Ok(u) => u,
        Err(e) => return Report::error(echo, EXIT_USAGE, e),
    };
    if rescale {
        u = u.to_special_unitary();
    }
    match decompose_su2(&u) {
        Ok(d) => {
            let mut report = Report::new(echo);
            report.insert("angles", d.angles.to_vec());
            let plates: Vec<Value> = d.plates().iter().map(|p| p.to_string().into()).collect();
            report.insert("plates", plates);
            report.insert("residual", d.residual);
            report.insert("global_phase", fmt_complex(d.global_phase));
            report
        }
        Err(e @ OpticalError::NoConvergence(_)) => Report::error(echo, EXIT_FAILURE, e.to_string()),
        Err(e) => Report::error(echo, EXIT_USAGE, e.to_string()),
    }
}

fn verify(echo: &str, max_n: usize, seed: Option<u64>, inject_fault: bool) -> Report {
    if !(1..=MAX_BRUTE_FORCE_ARITY).contains(&max_n) {
        return Report::error(
            echo,
            EXIT_USAGE,
            format!("--max-n must be in 1..={MAX_BRUTE_FORCE_ARITY}"),
        );
    }
    let mut cfg = VerifyConfig {
        max_n,
        fault: inject_fault.then_some(Fault::SignFlip),
        ..Default::default()
    };
    if let Some(s) = seed {
        cfg.seed = s;
    }
    let results = run_all(&cfg);
    let failed: Vec<usize> = results.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    let rows: Vec<Value> = results
        .iter()
        .map(|r| {
            json!({
                "id": r.id,
                "name": r.name,
                "passed": r.passed,
                "elapsed_ms": (r.elapsed.as_secs_f64() * 1e3 * 1e3).round() / 1e3,
                "detail": r.detail,
            })
        })
        .collect();
    let mut report = Report::new(echo);
    report.exit_code = if failed.is_empty() {
        EXIT_OK
    } else {
        EXIT_FAILURE
    };
    report.insert("max_n", max_n);
    report.insert("seed", cfg.seed);
    report.insert("passed", results.len() - failed.len());
    report.insert("failed", failed);
    report.insert("criteria", rows);
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_formatting() {
        assert_eq!(fmt_complex(Complex64::new(0.5, 0.0)), "0.5");
        assert_eq!(fmt_complex(Complex64::new(0.0, -1.0)), "-i");
        assert_eq!(fmt_complex(Complex64::new(-0.0, 0.25)), "0.25i");
        assert_eq!(fmt_complex(Complex64::new(1.0, -2.0)), "1-2i");
        assert_eq!(fmt_complex(Complex64::new(1.0, 1e-17)), "1");
    }

    #[test]
    fn matrix_parsing() {
        let v: Vec<String> = vec![
            "1 0 0 0".into(),
            "0".into(),
            "0".into(),
            "1".into(),
            "0".into(),
        ];
        assert_eq!(parse_matrix(&v).unwrap(), Mat2::IDENTITY);
        assert!(parse_matrix(&["1 2".into()]).is_err());
        assert!(parse_matrix(&["1 0 0 0 0 0 x 0".into()]).is_err());
    }
}
