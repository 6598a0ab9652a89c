//! The `nsgff` command-line front end.
//!
//! Every invocation writes exactly one JSON document to stdout (or a plain
//! text rendering with `--pretty`). Exit codes: 0 success or pass, 1 failed
//! verification, 2 input error, 3 exhausted search budget.

pub mod expr;

use std::io::BufRead;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::classify::classify;
use crate::enumerate::multiplicity_range;
use crate::error::Error;
use crate::rohrbach;
use crate::semigroup::NumericalSemigroup;
use crate::verify;

pub const SCHEMA_VERSION: &str = "1.0.0";

/// JSON schema for every document the binary emits.
pub const SCHEMA: &str = include_str!("../../schema/report.schema.json");

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "nsgff", version, about = "Numerical semigroups and far-flung Gorenstein rings")]
pub struct Cli {
    /// Render a plain-text table instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Invariants, trace ideal, flags and bounds of one semigroup.
    Info {
        /// Comma-separated generators, e.g. 7,8,11,17,20.
        generators: Option<String>,
        /// Read one generator list per line from stdin.
        #[arg(long)]
        stdin_batch: bool,
    },
    /// Evaluate a relative-ideal expression over H.
    Ideal {
        generators: String,
        /// Atoms H, C, K (conductor), N (normalization), {g1,g2,..};
        /// operators * (product) and : (colon); parentheses.
        expression: String,
    },
    /// Solve the Rohrbach problem for r elements.
    Rohrbach {
        r: usize,
        /// Exhaustive branch and bound (default).
        #[arg(long, conflicts_with = "table")]
        exact: bool,
        /// Tabulated value, r <= 25.
        #[arg(long)]
        table: bool,
        #[arg(long, default_value_t = rohrbach::DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Run a verification campaign.
    Verify {
        #[arg(value_enum)]
        campaign: Campaign,
        #[arg(long, default_value_t = 18)]
        max_genus: u32,
        /// Family parameter bound for the type3 campaign.
        #[arg(long, default_value_t = 5)]
        max_m: i64,
        /// Semigroups sampled by thm41 / bidual.
        #[arg(long)]
        sample: Option<usize>,
        /// Ideals per semigroup (thm41) or in total (bidual).
        #[arg(long)]
        ideals: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Multiplicities of far-flung Gorenstein semigroups of a given type.
    Explore {
        type_r: usize,
        #[arg(long, default_value_t = 20)]
        max_genus: u32,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Campaign {
    Type2,
    Type3,
    Interval,
    Bounds,
    Endo,
    Thm41,
    Bidual,
    Routes,
    Valuations,
}

/// What an invocation produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
}

struct Failure {
    code: i32,
    kind: String,
    message: String,
    position: Option<usize>,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: EXIT_INPUT,
            kind: e.kind().to_string(),
            message: e.to_string(),
            position: None,
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INPUT,
        kind: "Usage".into(),
        message: message.into(),
        position: None,
    }
}

/// Parses `"7, 8,11"` into generators.
pub fn parse_generators(s: &str) -> Result<Vec<i64>, Error> {
    let gens: Vec<i64> = s
        .split(',')
        .map(|t| t.trim())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<i64>().map_err(|_| {
                if t.trim_start_matches('-').chars().all(|c| c.is_ascii_digit()) {
                    Error::InputTooLarge(format!("generator {t}"))
                } else {
                    Error::NonPositiveGenerator(0)
                }
            })
        })
        .collect::<Result<_, _>>()
        .map_err(|e| match e {
            Error::NonPositiveGenerator(_) => {
                Error::BadParameters(format!("cannot parse generator list {s:?}"))
            }
            other => other,
        })?;
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    Ok(gens)
}

fn semigroup(s: &str) -> Result<NumericalSemigroup, Error> {
    NumericalSemigroup::from_generators(&parse_generators(s)?)
}

/// Applies `NSGFF_THREADS` to the global thread pool.
pub fn configure_threads(value: Option<&str>) -> Result<(), String> {
    let Some(v) = value else { return Ok(()) };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("NSGFF_THREADS must be a positive integer, got {v:?}"))?;
    // a pool that is already set up (e.g. by an earlier call) is kept
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Output {
                    code: EXIT_OK,
                    stdout: e.to_string(),
                };
            }
            let doc = json!({
                "schema_version": SCHEMA_VERSION,
                "command": "",
                "error": { "kind": "Usage", "message": e.to_string().trim_end() },
            });
            return Output {
                code: EXIT_INPUT,
                stdout: render(&doc, false),
            };
        }
    };
    if let Err(msg) = configure_threads(std::env::var("NSGFF_THREADS").ok().as_deref()) {
        let doc = json!({
            "schema_version": SCHEMA_VERSION,
            "command": command_name(&cli.command),
            "error": { "kind": "Usage", "message": msg },
        });
        return Output {
            code: EXIT_INPUT,
            stdout: render(&doc, cli.pretty),
        };
    }

    let name = command_name(&cli.command);
    let start = Instant::now();
    let (input, outcome) = dispatch(&cli.command, stdin);
    let timing_ms = start.elapsed().as_millis() as u64;
    let (code, doc) = match outcome {
        Ok((code, result)) => (
            code,
            json!({
                "schema_version": SCHEMA_VERSION,
                "command": name,
                "input": input,
                "result": result,
                "timing_ms": timing_ms,
            }),
        ),
        Err(f) => {
            let mut error = json!({ "kind": f.kind, "message": f.message });
            if let Some(p) = f.position {
                error["position"] = json!(p);
            }
            (
                f.code,
                json!({
                    "schema_version": SCHEMA_VERSION,
                    "command": name,
                    "input": input,
                    "error": error,
                }),
            )
        }
    };
    Output {
        code,
        stdout: render(&doc, cli.pretty),
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Info { .. } => "info",
        Command::Ideal { .. } => "ideal",
        Command::Rohrbach { .. } => "rohrbach",
        Command::Verify { .. } => "verify",
        Command::Explore { .. } => "explore",
    }
}

type Outcome = Result<(i32, Value), Failure>;

fn dispatch(cmd: &Command, stdin: &mut dyn BufRead) -> (Value, Outcome) {
    match cmd {
        Command::Info {
            generators,
            stdin_batch,
        } => cmd_info(generators.as_deref(), *stdin_batch, stdin),
        Command::Ideal {
            generators,
            expression,
        } => (
            json!({ "generators": generators, "expression": expression }),
            cmd_ideal(generators, expression),
        ),
        Command::Rohrbach {
            r,
            exact: _,
            table,
            budget,
        } => (
            json!({ "r": r, "mode": if *table { "table" } else { "exact" }, "budget": budget }),
            cmd_rohrbach(*r, *table, *budget),
        ),
        Command::Verify {
            campaign,
            max_genus,
            max_m,
            sample,
            ideals,
            seed,
        } => {
            let (sample, ideals) = match campaign {
                Campaign::Thm41 => (sample.unwrap_or(200), ideals.unwrap_or(50)),
                _ => (sample.unwrap_or(50), ideals.unwrap_or(1000)),
            };
            (
                json!({
                    "campaign": campaign,
                    "max_genus": max_genus,
                    "max_m": max_m,
                    "sample": sample,
                    "ideals": ideals,
                    "seed": seed,
                }),
                cmd_verify(*campaign, *max_genus, *max_m, sample, ideals, *seed),
            )
        }
        Command::Explore { type_r, max_genus } => (
            json!({ "type": type_r, "max_genus": max_genus }),
            cmd_explore(*type_r, *max_genus),
        ),
    }
}

fn cmd_info(generators: Option<&str>, batch: bool, stdin: &mut dyn BufRead) -> (Value, Outcome) {
    if batch {
        let mut lines = Vec::new();
        for line in stdin.lines() {
            match line {
                Ok(l) if l.trim().is_empty() => {}
                Ok(l) => lines.push(l.trim().to_string()),
                Err(e) => return (json!({ "batch": lines }), Err(usage(e.to_string()))),
            }
        }
        let input = json!({ "batch": lines });
        let mut reports = Vec::new();
        for l in &lines {
            match semigroup(l) {
                Ok(h) => reports.push(serde_json::to_value(classify(&h)).unwrap()),
                Err(e) => return (input, Err(e.into())),
            }
        }
        return (input, Ok((EXIT_OK, Value::Array(reports))));
    }
    let Some(g) = generators else {
        return (Value::Null, Err(usage("info needs a generator list or --stdin-batch")));
    };
    let input = json!({ "generators": g });
    let outcome = semigroup(g)
        .map(|h| (EXIT_OK, serde_json::to_value(classify(&h)).unwrap()))
        .map_err(Failure::from);
    (input, outcome)
}

fn cmd_ideal(generators: &str, expression: &str) -> Outcome {
    let h = semigroup(generators)?;
    let e = expr::parse(expression).map_err(|p| Failure {
        code: EXIT_INPUT,
        kind: "ParseError".into(),
        message: p.to_string(),
        position: Some(p.position),
    })?;
    let ideal = e.eval(&h)?;
    Ok((
        EXIT_OK,
        json!({
            "expression": e.to_string(),
            "ideal": ideal,
            "members_preview": ideal.members_below_bound(),
        }),
    ))
}

fn cmd_rohrbach(r: usize, table: bool, budget: u64) -> Outcome {
    if r == 0 {
        return Err(usage("r must be at least 1"));
    }
    if table {
        let value = rohrbach::known_table(r)?;
        return Ok((EXIT_OK, json!({ "mode": "table", "r": r, "value": value, "exact": true })));
    }
    match rohrbach::rohrbach_max(r, budget) {
        Ok(s) => Ok((
            EXIT_OK,
            json!({
                "mode": "exact",
                "r": r,
                "value": s.value,
                "exact": true,
                "witness": s.witness.elements(),
                "nodes": s.nodes,
            }),
        )),
        Err(Error::BudgetExceeded {
            budget,
            lower_bound,
            witness,
        }) => Ok((
            EXIT_BUDGET,
            json!({
                "mode": "exact",
                "r": r,
                "value": lower_bound,
                "exact": false,
                "witness": witness,
                "nodes": budget,
            }),
        )),
        Err(e) => Err(e.into()),
    }
}

fn cmd_verify(c: Campaign, max_genus: u32, max_m: i64, sample: usize, ideals: usize, seed: u64) -> Outcome {
    if matches!(c, Campaign::Bidual) && (sample == 0 || ideals == 0) {
        return Err(usage("bidual needs --sample and --ideals to be positive"));
    }
    if matches!(c, Campaign::Type3) && max_m < 1 {
        return Err(usage("--max-m must be at least 1"));
    }
    let v = match c {
        Campaign::Type2 => verify::verify_type2_classification(max_genus),
        Campaign::Type3 => verify::verify_type3_classification(max_m),
        Campaign::Interval => verify::verify_interval_characterization(max_genus),
        Campaign::Bounds => verify::verify_bounds(max_genus),
        Campaign::Endo => verify::verify_endomorphism(max_genus),
        Campaign::Thm41 => verify::verify_canonical_colon_tail(max_genus, sample, ideals, seed),
        Campaign::Bidual => verify::verify_canonical_bidual(max_genus, sample, ideals, seed),
        Campaign::Routes => verify::verify_route_agreement(max_genus),
        Campaign::Valuations => verify::verify_valuations(max_genus),
    }?;
    let code = if v.pass { EXIT_OK } else { EXIT_FAIL };
    Ok((code, serde_json::to_value(v).unwrap()))
}

fn cmd_explore(type_r: usize, max_genus: u32) -> Outcome {
    if type_r == 0 {
        return Err(usage("type must be at least 1"));
    }
    let found = multiplicity_range(type_r, max_genus)?;
    let note = if type_r == 1 {
        "type 1 means Gorenstein; apart from the full monoid (excluded here) no Gorenstein \
         semigroup is far-flung Gorenstein"
    } else {
        "multiplicities observed in a finite corpus"
    };
    Ok((
        EXIT_OK,
        json!({
            "type": type_r,
            "max_genus": max_genus,
            "multiplicities": found.iter().map(|w| w.multiplicity).collect::<Vec<_>>(),
            "witnesses": found,
            "rohrbach_bound": rohrbach::known_table(type_r).ok(),
            "lower_data_only": true,
            "note": note,
        }),
    ))
}

fn render(doc: &Value, pretty: bool) -> String {
    if !pretty {
        let mut s = serde_json::to_string(doc).expect("serializable");
        s.push('\n');
        return s;
    }
    let mut rows = Vec::new();
    flatten("", doc, &mut rows);
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter()
        .map(|(k, v)| format!("{k:<width$}  {v}\n"))
        .collect()
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&key, v, out);
            }
        }
        Value::Array(items) if items.iter().any(|x| x.is_object()) => {
            for (i, x) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), x, out);
            }
        }
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, Value) {
        let mut argv = vec!["nsgff"];
        argv.extend_from_slice(args);
        let out = run(argv, &mut std::io::empty());
        (out.code, serde_json::from_str(&out.stdout).unwrap())
    }

    #[test]
    fn generator_parsing() {
        assert_eq!(parse_generators("7, 8,11").unwrap(), vec![7, 8, 11]);
        assert_eq!(parse_generators(""), Err(Error::EmptyGenerators));
        assert!(matches!(parse_generators("3,x"), Err(Error::BadParameters(_))));
        assert!(matches!(
            parse_generators("3,99999999999999999999"),
            Err(Error::InputTooLarge(_))
        ));
    }

    #[test]
    fn info_reports() {
        let (code, v) = call(&["info", "7,8,11,17,20"]);
        assert_eq!(code, 0);
        assert_eq!(v["result"]["flags"]["ffg"], true);
        assert_eq!(v["result"]["trace"]["min"], 14);
        assert_eq!(v["result"]["trace"]["is_tail"], true);

        let (code, v) = call(&["info", "1"]);
        assert_eq!(code, 0);
        assert_eq!(v["result"]["semigroup"]["frobenius"], -1);

        let (code, v) = call(&["info", "4,6"]);
        assert_eq!(code, 2);
        assert_eq!(v["error"]["kind"], "GcdNotOne");
    }

    #[test]
    fn batch_info() {
        let mut input = std::io::Cursor::new("3,4,5\n\n5,6,13,14\n");
        let out = run(["nsgff", "info", "--stdin-batch"], &mut input);
        assert_eq!(out.code, 0);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["result"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn ideal_expressions() {
        let (code, v) = call(&["ideal", "7,8,11,17,20", "(H:C)*C"]);
        assert_eq!(code, 0);
        assert_eq!(v["result"]["ideal"]["min"], 14);
        assert_eq!(v["result"]["ideal"]["is_tail"], true);

        let (_, v) = call(&["ideal", "3,4,5", "C*C"]);
        assert_eq!(v["result"]["ideal"]["generators"], json!([0, 1, 2]));
        assert_eq!(v["result"]["ideal"]["is_tail"], true);

        let (_, v) = call(&["ideal", "3,4,5", "H:H"]);
        assert_eq!(v["result"]["ideal"]["generators"], json!([0]));

        let (code, v) = call(&["ideal", "3,4,5", "H:*"]);
        assert_eq!(code, 2);
        assert_eq!(v["error"]["kind"], "ParseError");
        assert_eq!(v["error"]["position"], 2);
    }

    #[test]
    fn rohrbach_modes() {
        let (code, v) = call(&["rohrbach", "25", "--table"]);
        assert_eq!(code, 0);
        assert_eq!(v["result"]["value"], 213);
        let (_, v) = call(&["rohrbach", "1", "--exact"]);
        assert_eq!(v["result"]["value"], 1);
        assert_eq!(v["result"]["witness"], json!([0]));
        let (code, v) = call(&["rohrbach", "7", "--budget", "100"]);
        assert_eq!(code, 3);
        assert_eq!(v["result"]["exact"], false);
        let (code, _) = call(&["rohrbach", "26", "--table"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn verify_and_explore() {
        let (code, v) = call(&["verify", "type2", "--max-genus", "8"]);
        assert_eq!(code, 0);
        assert_eq!(v["result"]["pass"], true);
        let (code, _) = call(&["verify", "nonsense"]);
        assert_eq!(code, 2);
        let (code, _) = call(&["verify", "bounds", "--max-genus", "99"]);
        assert_eq!(code, 2);
        let (code, v) = call(&["explore", "2", "--max-genus", "10"]);
        assert_eq!(code, 0);
        assert_eq!(v["result"]["multiplicities"], json!([3]));
        assert_eq!(v["result"]["lower_data_only"], true);
    }

    #[test]
    fn pretty_renders_rows() {
        let out = run(["nsgff", "--pretty", "info", "3,4,5"], &mut std::io::empty());
        assert_eq!(out.code, 0);
        assert!(out.stdout.lines().any(|l| l.starts_with("result.flags.ffg") && l.ends_with("true")));
    }

    #[test]
    fn thread_setting_is_validated() {
        assert!(configure_threads(Some("0")).is_err());
        assert!(configure_threads(Some("abc")).is_err());
        assert!(configure_threads(None).is_ok());
    }
}
