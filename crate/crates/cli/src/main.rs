//! Command-line front end: parameter tables, single solves, verification
//! sweeps, explicit witnesses and broadcast analysis.
//!
//! Exit status is 0 on success, 1 on a verification mismatch and 2 on a
//! usage, format or domain error.

mod graph_spec;

use std::fmt;
use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Instant;

use broadcasts::broadcast::{analyze, AnalysisOptions, Broadcast, Cap, Kind};
use broadcasts::constructions::{construct_witness, ConstructionError};
use broadcasts::formulas::{formula_for_graph, formula_value, Family, FormulaError};
use broadcasts::lemmas;
use broadcasts::solver::{satisfies, SolveResult};
use broadcasts::{Graph, Parameter, Solver};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use graph_spec::GraphSpec;

/// Largest order accepted by `witness --check-optimal`.
const CHECK_OPTIMAL_MAX: usize = 13;

#[derive(Parser)]
#[command(name = "broadcasts", version, about = "Exact broadcast parameters of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// One row per order n of a path or cycle family.
    Table {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        #[arg(long, value_enum, default_value_t = Set::Broadcast)]
        set: Set,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Report wall-clock times (makes output run-dependent).
        #[arg(long)]
        timings: bool,
    },
    /// Solve one parameter on one graph.
    Solve {
        #[arg(long)]
        graph: GraphSpec,
        #[arg(long, value_parser = parse_parameter)]
        param: Parameter,
        /// Include the lexicographically smallest optimal broadcast.
        #[arg(long)]
        witness: bool,
        /// List every optimal broadcast, up to --limit.
        #[arg(long)]
        all_witnesses: bool,
        #[arg(long, default_value_t = 1000)]
        limit: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long)]
        timings: bool,
    },
    /// Formula, construction, chain and (optionally) lemma checks over a range.
    Verify {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        /// Comma-separated broadcast parameter names; all eight by default.
        #[arg(long, value_delimiter = ',', value_parser = parse_parameter)]
        params: Vec<Parameter>,
        #[arg(long)]
        lemmas: bool,
        #[arg(long)]
        fail_fast: bool,
    },
    /// Print the explicit optimal broadcast for a path or cycle.
    Witness {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, value_parser = parse_parameter)]
        param: Parameter,
        #[arg(long)]
        n: usize,
        /// Also solve exactly and compare (n <= 13).
        #[arg(long)]
        check_optimal: bool,
        #[arg(long, value_enum, default_value_t = WitnessFormat::Text)]
        format: WitnessFormat,
    },
    /// Report hearing sets, private borders, kinds and extremality as JSON.
    Analyze {
        #[arg(long)]
        graph: GraphSpec,
        #[arg(long)]
        broadcast: String,
        /// Kinds whose minimality and maximality are reported; all by default.
        #[arg(long, value_delimiter = ',', value_parser = parse_kind)]
        extremality: Vec<Kind>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Path,
    Cycle,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Path => Family::Path,
            FamilyArg::Cycle => Family::Cycle,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Set {
    Broadcast,
    Classical,
    All,
}

impl Set {
    fn parameters(self) -> &'static [Parameter] {
        match self {
            Set::Broadcast => Parameter::broadcast(),
            Set::Classical => Parameter::classical(),
            Set::All => &Parameter::ALL,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Formula,
    Solve,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WitnessFormat {
    Text,
    Json,
}

fn parse_parameter(s: &str) -> Result<Parameter, String> {
    s.parse().map_err(|_| {
        let names: Vec<_> = Parameter::ALL.iter().map(|p| p.name()).collect();
        format!("unknown parameter {s:?}; expected one of {}", names.join(", "))
    })
}

fn parse_kind(s: &str) -> Result<Kind, String> {
    s.parse().map_err(|e: broadcasts::BroadcastError| e.to_string())
}

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl fmt::Display) -> Self {
        Failure { code: 2, message: message.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure { code: 2, message: e.to_string() }
    }
}

impl From<FormulaError> for Failure {
    fn from(e: FormulaError) -> Self {
        Failure::usage(e)
    }
}

impl From<broadcasts::SolveError> for Failure {
    fn from(e: broadcasts::SolveError) -> Self {
        Failure::usage(e)
    }
}

impl From<broadcasts::GraphError> for Failure {
    fn from(e: broadcasts::GraphError) -> Self {
        Failure::usage(e)
    }
}

type CliResult = Result<ExitCode, Failure>;

/// One (graph, parameter) result, the unit of JSON and CSV output.
#[derive(Clone, Serialize)]
struct Record {
    graph: String,
    parameter: Parameter,
    value: Option<u32>,
    witness: Option<String>,
    formula_value: Option<u32>,
    #[serde(rename = "match")]
    matches: Option<bool>,
    nodes_explored: Option<u64>,
    elapsed_ms: Option<f64>,
}

impl Record {
    fn new(g: &Graph, parameter: Parameter) -> Self {
        Record {
            graph: g.to_string(),
            parameter,
            value: None,
            witness: None,
            formula_value: None,
            matches: None,
            nodes_explored: None,
            elapsed_ms: None,
        }
    }

    fn with_solution(mut self, r: &SolveResult, witness: bool, timings: bool) -> Self {
        self.value = Some(r.value);
        self.nodes_explored = Some(r.nodes_explored);
        if witness {
            self.witness = Some(r.witness.to_string());
        }
        if timings {
            self.elapsed_ms = Some(r.elapsed.as_secs_f64() * 1e3);
        }
        self
    }
}

fn check_range(family: Family, from: usize, to: usize) -> Result<(), Failure> {
    if from < family.min_order() {
        return Err(Failure::usage(format!("{family} order must be at least {}, got --from {from}", family.min_order())));
    }
    if from > to {
        return Err(Failure::usage(format!("empty range --from {from} --to {to}")));
    }
    Ok(())
}

fn write_json<T: Serialize>(value: &T) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value).map_err(Failure::usage)?;
    writeln!(out)?;
    Ok(())
}

fn write_csv(records: &[Record]) -> Result<(), Failure> {
    let mut w = csv::Writer::from_writer(io::stdout().lock());
    for r in records {
        w.serialize(r).map_err(Failure::usage)?;
    }
    w.flush()?;
    Ok(())
}

fn cell(v: Option<u32>) -> String {
    v.map_or_else(|| "-".into(), |v| v.to_string())
}

fn cmd_table(family: Family, from: usize, to: usize, set: Set, method: Method, format: Format, timings: bool) -> CliResult {
    check_range(family, from, to)?;
    let params = set.parameters();
    if method == Method::Formula {
        if let Some(p) = params.iter().find(|p| p.is_classical()) {
            return Err(FormulaError::Unsupported(*p).into());
        }
    }
    let mut rows: Vec<(usize, Vec<Record>)> = Vec::new();
    let mut all_match = true;
    for n in from..=to {
        let g = family.make(n)?;
        let solver = Solver::new(&g);
        let mut records = Vec::new();
        for &p in params {
            let formula = formula_value(family, p, n).ok();
            let mut rec = Record::new(&g, p);
            match method {
                Method::Formula => {
                    rec.value = formula;
                    rec.formula_value = formula;
                }
                Method::Solve => rec = rec.with_solution(&solver.solve_parameter(p)?, true, timings),
                Method::Both => {
                    rec = rec.with_solution(&solver.solve_parameter(p)?, true, timings);
                    rec.formula_value = formula;
                    rec.matches = formula.map(|f| Some(f) == rec.value);
                }
            }
            all_match &= rec.matches != Some(false);
            records.push(rec);
        }
        rows.push((n, records));
    }

    match format {
        Format::Json => write_json(&rows.iter().flat_map(|(_, r)| r).collect::<Vec<_>>())?,
        Format::Csv => write_csv(&rows.into_iter().flat_map(|(_, r)| r).collect::<Vec<_>>())?,
        Format::Table => {
            let mut out = io::stdout().lock();
            let mut header = format!("{:>4}", "n");
            for p in params {
                header += &format!(" {:>9}", p.name());
            }
            if method == Method::Both {
                header += "  match";
            }
            writeln!(out, "{header}")?;
            for (n, records) in &rows {
                let mut line = format!("{n:>4}");
                for r in records {
                    let text = match method {
                        Method::Both => format!("{}/{}", cell(r.value), cell(r.formula_value)),
                        _ => cell(r.value),
                    };
                    line += &format!(" {text:>9}");
                }
                if method == Method::Both {
                    let ok = records.iter().all(|r| r.matches != Some(false));
                    line += if ok { "  yes" } else { "  NO" };
                }
                writeln!(out, "{line}")?;
            }
        }
    }
    Ok(if all_match { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

#[derive(Serialize)]
struct SolveOutput {
    #[serde(flatten)]
    record: Record,
    #[serde(skip_serializing_if = "Option::is_none")]
    witnesses: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    truncated: Option<bool>,
}

fn cmd_solve(
    spec: &GraphSpec,
    param: Parameter,
    witness: bool,
    all_witnesses: bool,
    limit: usize,
    format: Format,
    timings: bool,
) -> CliResult {
    let g = spec.build()?;
    let solver = Solver::new(&g);
    let result = solver.solve_parameter(param)?;
    let mut record = Record::new(&g, param).with_solution(&result, witness, timings);
    record.formula_value = formula_for_graph(&g, param);
    record.matches = record.formula_value.map(|f| f == result.value);
    let mismatch = record.matches == Some(false);

    let (list, truncated) = if all_witnesses {
        let w = solver.solve_all_witnesses(param.spec(), limit)?;
        (Some(w.broadcasts.iter().map(Broadcast::to_string).collect::<Vec<_>>()), Some(w.truncated))
    } else {
        (None, None)
    };

    match format {
        Format::Json => write_json(&SolveOutput { record, witnesses: list, truncated })?,
        Format::Csv => match list {
            Some(list) => {
                let rows: Vec<Record> = list
                    .into_iter()
                    .map(|w| Record { witness: Some(w), ..record.clone() })
                    .collect();
                write_csv(&rows)?
            }
            None => write_csv(&[record])?,
        },
        Format::Table => {
            let mut out = io::stdout().lock();
            writeln!(out, "graph          {}", record.graph)?;
            writeln!(out, "parameter      {param}")?;
            writeln!(out, "value          {}", result.value)?;
            if let Some(w) = &record.witness {
                writeln!(out, "witness        {w}")?;
            }
            if let Some(f) = record.formula_value {
                writeln!(out, "formula_value  {f}")?;
                writeln!(out, "match          {}", f == result.value)?;
            }
            writeln!(out, "nodes_explored {}", result.nodes_explored)?;
            if let Some(ms) = record.elapsed_ms {
                writeln!(out, "elapsed_ms     {ms:.3}")?;
            }
            if let Some(list) = list {
                writeln!(out, "witnesses      {}{}", list.len(), if truncated == Some(true) { " (truncated)" } else { "" })?;
                for w in list {
                    writeln!(out, "  {w}")?;
                }
            }
        }
    }
    Ok(if mismatch { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

struct Tally {
    passed: usize,
    failures: Vec<String>,
    fail_fast: bool,
}

impl Tally {
    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) -> bool {
        if ok {
            self.passed += 1;
        } else {
            let msg = what();
            println!("FAIL {msg}");
            self.failures.push(msg);
        }
        !(self.fail_fast && !ok)
    }
}

fn cmd_verify(family: Family, from: usize, to: usize, params: Vec<Parameter>, lemmas: bool, fail_fast: bool) -> CliResult {
    check_range(family, from, to)?;
    if let Some(p) = params.iter().find(|p| p.is_classical()) {
        return Err(FormulaError::Unsupported(*p).into());
    }
    let params = if params.is_empty() { Parameter::broadcast().to_vec() } else { params };
    let mut tally = Tally { passed: 0, failures: Vec::new(), fail_fast };
    let start = Instant::now();
    'orders: for n in from..=to {
        let g = family.make(n)?;
        let solver = Solver::new(&g);
        let before = tally.passed;
        for &p in &params {
            let expected = formula_value(family, p, n)?;
            let r = solver.solve_parameter(p)?;
            let ok = r.value == expected && satisfies(&g, &r.witness, p.spec());
            if !tally.record(ok, || format!("{g} {p}: solver {} ({}) vs formula {expected}", r.value, r.witness)) {
                break 'orders;
            }
            let built = construct_witness(family, p, n);
            let ok = matches!(&built, Ok(w) if w.broadcast.cost() == r.value);
            let describe = || match &built {
                Ok(w) => format!("{g} {p}: construction {} costs {} but the optimum is {}", w.broadcast, w.broadcast.cost(), r.value),
                Err(ConstructionError::Consistency { reason, .. }) => format!("{g} {p}: construction failed: {reason}"),
                Err(e) => format!("{g} {p}: {e}"),
            };
            if !tally.record(ok, describe) {
                break 'orders;
            }
        }
        let chain = solver.chain_report()?;
        for c in &chain.checks {
            if !tally.record(c.holds, || format!("{g}: chain relation {} fails", c.relation)) {
                break 'orders;
            }
        }
        if lemmas {
            for (_, result) in lemmas::suite(family, &g) {
                let ok = result.is_ok();
                if !tally.record(ok, || result.unwrap_err()) {
                    break 'orders;
                }
            }
        }
        println!("ok   {g}: {} checks", tally.passed - before);
    }
    let failed = tally.failures.len();
    println!(
        "verify {family} {from}..{to}: {} passed, {failed} failed ({:.1}s)",
        tally.passed,
        start.elapsed().as_secs_f64()
    );
    Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

#[derive(Serialize)]
struct WitnessOutput {
    family: Family,
    parameter: Parameter,
    n: usize,
    pattern: String,
    witness: String,
    cost: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    optimum: Option<u32>,
    #[serde(rename = "match", skip_serializing_if = "Option::is_none")]
    matches: Option<bool>,
}

fn cmd_witness(family: Family, param: Parameter, n: usize, check_optimal: bool, format: WitnessFormat) -> CliResult {
    if check_optimal && n > CHECK_OPTIMAL_MAX {
        return Err(Failure::usage(format!("--check-optimal supports n <= {CHECK_OPTIMAL_MAX}, got {n}")));
    }
    let recipe = construct_witness(family, param, n).map_err(|e| match e {
        ConstructionError::Domain(e) => Failure::usage(e),
        e => Failure { code: 1, message: e.to_string() },
    })?;
    let optimum = if check_optimal {
        let g = family.make(n)?;
        Some(Solver::new(&g).solve_parameter(param)?.value)
    } else {
        None
    };
    let cost = recipe.broadcast.cost();
    let matches = optimum.map(|o| o == cost);
    match format {
        WitnessFormat::Text => {
            println!("{}", recipe.broadcast);
            if let Some(o) = optimum {
                println!("optimum {o}: {}", if o == cost { "match" } else { "MISMATCH" });
            }
        }
        WitnessFormat::Json => write_json(&WitnessOutput {
            family,
            parameter: param,
            n,
            pattern: recipe.pattern.to_string(),
            witness: recipe.broadcast.to_string(),
            cost,
            optimum,
            matches,
        })?,
    }
    Ok(if matches == Some(false) { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn cmd_analyze(spec: &GraphSpec, text: &str, extremality: Vec<Kind>) -> CliResult {
    let g = spec.build()?;
    let f: Broadcast = text.parse().map_err(Failure::usage)?;
    let options = AnalysisOptions {
        extremality: if extremality.is_empty() { Kind::ALL.to_vec() } else { extremality },
        cap: Cap::Eccentricity,
    };
    let report = analyze(&g, &f, &options).map_err(Failure::usage)?;
    write_json(&report)?;
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Table { family, from, to, set, method, format, timings } => {
            cmd_table(family.into(), from, to, set, method, format, timings)
        }
        Command::Solve { graph, param, witness, all_witnesses, limit, format, timings } => {
            cmd_solve(&graph, param, witness, all_witnesses, limit, format, timings)
        }
        Command::Verify { family, from, to, params, lemmas, fail_fast } => {
            cmd_verify(family.into(), from, to, params, lemmas, fail_fast)
        }
        Command::Witness { family, param, n, check_optimal, format } => {
            cmd_witness(family.into(), param, n, check_optimal, format)
        }
        Command::Analyze { graph, broadcast, extremality } => cmd_analyze(&graph, &broadcast, extremality),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
