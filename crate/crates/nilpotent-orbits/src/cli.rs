//! Command-line front end.
//!
//! Grammar:
//!
//! ```text
//! orbits <family> <size> [--filter all|sp|ms] [--format text|json]
//! dual <map> [<family>] <partition>          map: dls|dsp|dbv|mls|msp|mbv
//! collapse <family> <partition>
//! char <partition> --rank <n> [--format text|json]
//! lift orbit <partition> --a <a>
//! lift char <entries> --a <a>
//! pairing <partition>
//! attach <partition>
//! verify [--max-rank N] [--a-offset K] [--check C1..C14] [--jobs N] [--format text|json]
//! poset <family> <size> [--filter all|sp|ms] --format dot|json
//! ```
//!
//! Partitions are comma lists like `"3,1"`, with `"-"` for the empty
//! diagram; character entries are comma lists of half-integers like
//! `"3/2,1/2"`. Half-integers appear in JSON as strings so nothing is ever
//! rounded. Exit codes: 0 on success, 1 on a usage error (with a one-line
//! diagnostic on the error stream), 2 when `verify` finds a failing check.

use std::collections::BTreeMap;
use std::io::Write;
use std::str::FromStr;

use serde_json::json;

use crate::character::{
    infinitesimal_character, row_pairing, theta_lift_character, unipotent_attachment, InfChar,
};
use crate::collapse::collapse;
use crate::duality::{
    barbasch_vogan, lusztig_spaltenstein, metaplectic_barbasch_vogan,
    metaplectic_lusztig_spaltenstein, metaplectic_spaltenstein_dual, spaltenstein_dual, DualPair,
    theta_lift_orbit,
};
use crate::orbit::{enumerate_orbits, hasse_edges, Family, OrbitFilter};
use crate::partition::Partition;
use crate::verify::{run_check, CheckId, CheckReport, DEFAULT_A_OFFSET};

const USAGE: &str = "usage: nilo <command> [args]

commands:
  orbits <family> <size> [--filter all|sp|ms] [--format text|json]
  dual <map> [<family>] <partition>          map: dls|dsp|dbv|mls|msp|mbv
  collapse <family> <partition>
  char <partition> --rank <n> [--format text|json]
  lift orbit <partition> --a <a>
  lift char <entries> --a <a>
  pairing <partition>
  attach <partition>
  verify [--max-rank N] [--a-offset K] [--check C1..C14] [--jobs N] [--format text|json]
  poset <family> <size> [--filter all|sp|ms] --format dot|json

partitions are comma lists like \"3,1\"; \"-\" is the empty diagram.
character entries are comma lists of half-integers like \"3/2,1/2\".";

const DEFAULT_VERIFY_RANK: u32 = 6;

/// Runs the CLI against explicit streams; returns the process exit code.
pub fn run<O: Write, E: Write>(args: &[String], out: &mut O, err: &mut E) -> i32 {
    match dispatch(args, out) {
        Ok(code) => code,
        Err(Failure::Usage(message)) => {
            let _ = writeln!(err, "nilo: error: {message}");
            1
        }
        Err(Failure::Help) => {
            let _ = writeln!(out, "{USAGE}");
            0
        }
        // The reader hung up (e.g. piped into head); not our error.
        Err(Failure::BrokenPipe) => 0,
    }
}

enum Failure {
    Usage(String),
    Help,
    BrokenPipe,
}

type CliResult<T> = std::result::Result<T, Failure>;

fn usage<T>(message: impl Into<String>) -> CliResult<T> {
    Err(Failure::Usage(message.into()))
}

fn dispatch<O: Write>(args: &[String], out: &mut O) -> CliResult<i32> {
    let Some(command) = args.first() else {
        return usage("missing command; run `nilo --help` for usage");
    };
    let rest = &args[1..];
    match command.as_str() {
        "--help" | "-h" | "help" => Err(Failure::Help),
        "orbits" => cmd_orbits(rest, out),
        "dual" => cmd_dual(rest, out),
        "collapse" => cmd_collapse(rest, out),
        "char" => cmd_char(rest, out),
        "lift" => cmd_lift(rest, out),
        "pairing" => cmd_pairing(rest, out),
        "attach" => cmd_attach(rest, out),
        "verify" => cmd_verify(rest, out),
        "poset" => cmd_poset(rest, out),
        other => usage(format!("unknown command {other:?}")),
    }
}

/// Positional arguments plus `--flag value` pairs, with unknown flags
/// rejected up front.
struct Parsed {
    positionals: Vec<String>,
    flags: BTreeMap<String, String>,
}

fn parse(args: &[String], allowed_flags: &[&str]) -> CliResult<Parsed> {
    let mut positionals = Vec::new();
    let mut flags = BTreeMap::new();
    let mut items = args.iter();
    while let Some(item) = items.next() {
        if let Some(name) = item.strip_prefix("--") {
            if !allowed_flags.contains(&name) {
                return usage(format!("unknown flag --{name}"));
            }
            let Some(value) = items.next() else {
                return usage(format!("flag --{name} needs a value"));
            };
            if flags.insert(name.to_string(), value.clone()).is_some() {
                return usage(format!("flag --{name} given twice"));
            }
        } else {
            positionals.push(item.clone());
        }
    }
    Ok(Parsed { positionals, flags })
}

impl Parsed {
    fn expect_positionals(&self, names: &[&str]) -> CliResult<()> {
        if self.positionals.len() != names.len() {
            return usage(format!(
                "expected {} argument(s): {}",
                names.len(),
                names.join(" ")
            ));
        }
        Ok(())
    }

    fn flag(&self, name: &str) -> Option<&str> {
        self.flags.get(name).map(String::as_str)
    }
}

fn parse_with<T: FromStr>(value: &str, what: &str) -> CliResult<T>
where
    T::Err: std::fmt::Display,
{
    value
        .parse::<T>()
        .map_err(|e| Failure::Usage(format!("bad {what}: {e}")))
}

fn parse_number(value: &str, what: &str) -> CliResult<u32> {
    value
        .parse::<u32>()
        .map_err(|_| Failure::Usage(format!("bad {what}: {value:?} is not a nonnegative integer")))
}

fn lib<T>(result: crate::error::Result<T>) -> CliResult<T> {
    result.map_err(|e| Failure::Usage(e.to_string()))
}

fn emit<O: Write>(out: &mut O, text: std::fmt::Arguments<'_>) -> CliResult<()> {
    out.write_fmt(text).map_err(|e| {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            Failure::BrokenPipe
        } else {
            Failure::Usage(format!("write failed: {e}"))
        }
    })
}

enum TextOrJson {
    Text,
    Json,
}

fn parse_text_or_json(parsed: &Parsed) -> CliResult<TextOrJson> {
    match parsed.flag("format") {
        None | Some("text") => Ok(TextOrJson::Text),
        Some("json") => Ok(TextOrJson::Json),
        Some(other) => usage(format!("bad format {other:?}: expected text or json")),
    }
}

fn cmd_orbits<O: Write>(args: &[String], out: &mut O) -> CliResult<i32> {
    let parsed = parse(args, &["filter", "format"])?;
    parsed.expect_positionals(&["family", "size"])?;
    let family: Family = parse_with(&parsed.positionals[0], "family")?;
    let size = parse_number(&parsed.positionals[1], "size")?;
    let filter: OrbitFilter = match parsed.flag("filter") {
        None => OrbitFilter::All,
        Some(s) => parse_with(s, "filter")?,
    };
    let orbits = lib(enumerate_orbits(family, size, filter))?;
    match parse_text_or_json(&parsed)? {
        TextOrJson::Text => {
            for orbit in &orbits {
                emit(out, format_args!("{orbit}\n"))?;
            }
        }
        TextOrJson::Json => {
            let value = json!({
                "family": family.to_string(),
                "size": size,
                "filter": filter.to_string(),
                "orbits": orbits.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            });
            emit(out, format_args!("{value}\n"))?;
        }
    }
    Ok(0)
}

fn cmd_dual<O: Write>(args: &[String], out: &mut O) -> CliResult<i32> {
    let parsed = parse(args, &[])?;
    let positionals = &parsed.positionals;
    let Some(map) = positionals.first() else {
        return usage("dual needs a map: dls|dsp|dbv|mls|msp|mbv");
    };
    let classical = match map.as_str() {
        "dls" | "dsp" | "dbv" => true,
        "mls" | "msp" | "mbv" => false,
        other => return usage(format!("unknown duality map {other:?}")),
    };
    let result = if classical {
        if positionals.len() != 3 {
            return usage(format!("dual {map} needs a family and a partition"));
        }
        let family: Family = parse_with(&positionals[1], "family")?;
        let partition: Partition = parse_with(&positionals[2], "partition")?;
        match map.as_str() {
            "dls" => lib(lusztig_spaltenstein(&partition, family))?,
            "dsp" => lib(spaltenstein_dual(&partition, family))?,
            _ => {
                let pair = lib(DualPair::langlands(family, partition.size()))?;
                lib(barbasch_vogan(&partition, &pair))?
            }
        }
    } else {
        if positionals.len() != 2 {
            return usage(format!("dual {map} takes a partition and no family"));
        }
        let partition: Partition = parse_with(&positionals[1], "partition")?;
        match map.as_str() {
            "mls" => lib(metaplectic_lusztig_spaltenstein(&partition))?,
            "msp" => lib(metaplectic_spaltenstein_dual(&partition))?,
            _ => lib(metaplectic_barbasch_vogan(&partition))?,
        }
    };
    emit(out, format_args!("{result}\n"))?;
    Ok(0)
}

fn cmd_collapse<O: Write>(args: &[String], out: &mut O) -> CliResult<i32> {
    let parsed = parse(args, &[])?;
    parsed.expect_positionals(&["family", "partition"])?;
    let family: Family = parse_with(&parsed.positionals[0], "family")?;
    let partition: Partition = parse_with(&parsed.positionals[1], "partition")?;
    let collapsed = lib(collapse(&partition, family))?;
    emit(out, format_args!("{collapsed}\n"))?;
    Ok(0)
}

fn cmd_char<O: Write>(args: &[String], out: &mut O) -> CliResult<i32> {
    let parsed = parse(args, &["rank", "format"])?;
    parsed.expect_positionals(&["partition"])?;
    let partition: Partition = parse_with(&parsed.positionals[0], "partition")?;
    let Some(rank_text) = parsed.flag("rank") else {
        return usage("char needs --rank <n>");
    };
    let rank = parse_number(rank_text, "rank")?;
    let character = lib(infinitesimal_character(&partition, rank))?;
    match parse_text_or_json(&parsed)? {
        TextOrJson::Text => emit(out, format_args!("{character}\n"))?,
        TextOrJson::Json => {
            let value = json!({
                "partition": partition.to_string(),
                "rank": rank,
                "entries": character.entries().iter().map(|e| e.to_string()).collect::<Vec<_>>(),
                "metaplectic_integral": character.is_metaplectic_integral(),
            });
            emit(out, format_args!("{value}\n"))?;
        }
    }
    Ok(0)
}

fn cmd_lift<O: Write>(args: &[String], out: &mut O) -> CliResult<i32> {
    let parsed = parse(args, &["a"])?;
    parsed.expect_positionals(&["orbit|char", "value"])?;
    let Some(a_text) = parsed.flag("a") else {
        return usage("lift needs --a <a>");
    };
    let a = parse_number(a_text, "a")?;
    match parsed.positionals[0].as_str() {
        "orbit" => {
            let partition: Partition = parse_with(&parsed.positionals[1], "partition")?;
            let lifted = lib(theta_lift_orbit(&partition, a))?;
            emit(out, format_args!("{lifted}\n"))?;
        }
        "char" => {
            let character: InfChar = parse_with(&parsed.positionals[1], "entries")?;
            let lifted = theta_lift_character(&character, a);
            emit(out, format_args!("{lifted}\n"))?;
        }
        other => return usage(format!("lift expects orbit or char, got {other:?}")),
    }
    Ok(0)
}

fn comma_list(values: &[u32]) -> String {
    if values.is_empty() {
        "-".to_string()
    } else {
        values
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

fn cmd_pairing<O: Write>(args: &[String], out: &mut O) -> CliResult<i32> {
    let parsed = parse(args, &[])?;
    parsed.expect_positionals(&["partition"])?;
    let partition: Partition = parse_with(&parsed.positionals[0], "partition")?;
    let pairing = lib(row_pairing(&partition))?;
    emit(
        out,
        format_args!("distinct_even: {}\n", comma_list(pairing.distinct_even())),
    )?;
    emit(out, format_args!("paired: {}\n", comma_list(pairing.paired())))?;
    emit(
        out,
        format_args!("core_columns: {}\n", comma_list(pairing.core_columns())),
    )?;
    Ok(0)
}

fn cmd_attach<O: Write>(args: &[String], out: &mut O) -> CliResult<i32> {
    let parsed = parse(args, &[])?;
    parsed.expect_positionals(&["partition"])?;
    let partition: Partition = parse_with(&parsed.positionals[0], "partition")?;
    let (character, dual) = lib(unipotent_attachment(&partition))?;
    emit(out, format_args!("character: {character}\n"))?;
    emit(out, format_args!("orbit: {dual}\n"))?;
    Ok(0)
}

fn cmd_verify<O: Write>(args: &[String], out: &mut O) -> CliResult<i32> {
    let parsed = parse(args, &["max-rank", "a-offset", "check", "jobs", "format"])?;
    parsed.expect_positionals(&[])?;
    let max_rank = match parsed.flag("max-rank") {
        None => DEFAULT_VERIFY_RANK,
        Some(s) => parse_number(s, "max-rank")?,
    };
    let a_offset = match parsed.flag("a-offset") {
        None => DEFAULT_A_OFFSET,
        Some(s) => parse_number(s, "a-offset")?,
    };
    let checks: Vec<CheckId> = match parsed.flag("check") {
        None => CheckId::ALL.to_vec(),
        Some(s) => vec![parse_with(s, "check")?],
    };
    let jobs = match parsed.flag("jobs") {
        None => None,
        Some(s) => {
            let j = parse_number(s, "jobs")?;
            if j == 0 {
                return usage("--jobs must be at least 1");
            }
            Some(j as usize)
        }
    };

    let run_all = || -> crate::error::Result<Vec<CheckReport>> {
        checks.iter().map(|&id| run_check(id, max_rank, a_offset)).collect()
    };
    let reports = match jobs {
        None => lib(run_all())?,
        Some(threads) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .map_err(|e| Failure::Usage(format!("could not build thread pool: {e}")))?;
            lib(pool.install(run_all))?
        }
    };

    match parse_text_or_json(&parsed)? {
        TextOrJson::Text => {
            emit(
                out,
                format_args!(
                    "{:<5} {:<6} {:>10} {:>9} {:>11}  description\n",
                    "check", "result", "instances", "failures", "elapsed_ms"
                ),
            )?;
            for report in &reports {
                emit(
                    out,
                    format_args!(
                        "{:<5} {:<6} {:>10} {:>9} {:>11}  {}\n",
                        report.id.to_string(),
                        if report.passed() { "PASS" } else { "FAIL" },
                        report.instances,
                        report.failures,
                        report.elapsed.as_millis(),
                        report.id.description(),
                    ),
                )?;
                for witness in &report.witnesses {
                    let fields: Vec<String> = witness
                        .input
                        .iter()
                        .map(|(k, v)| format!("{k}={v}"))
                        .collect();
                    emit(out, format_args!("      witness: {}\n", fields.join(" ")))?;
                }
            }
            let failing = reports.iter().filter(|r| !r.passed()).count();
            emit(
                out,
                format_args!(
                    "{} check(s), {} passed, {} failed\n",
                    reports.len(),
                    reports.len() - failing,
                    failing
                ),
            )?;
        }
        TextOrJson::Json => {
            let text = serde_json::to_string(&reports)
                .map_err(|e| Failure::Usage(format!("serialization failed: {e}")))?;
            emit(out, format_args!("{text}\n"))?;
        }
    }
    Ok(verify_exit_code(&reports))
}

/// Exit code contract for `verify`: 2 iff at least one report has failures.
pub fn verify_exit_code(reports: &[CheckReport]) -> i32 {
    if reports.iter().any(|r| !r.passed()) {
        2
    } else {
        0
    }
}

fn cmd_poset<O: Write>(args: &[String], out: &mut O) -> CliResult<i32> {
    let parsed = parse(args, &["filter", "format"])?;
    parsed.expect_positionals(&["family", "size"])?;
    let family: Family = parse_with(&parsed.positionals[0], "family")?;
    let size = parse_number(&parsed.positionals[1], "size")?;
    let filter: OrbitFilter = match parsed.flag("filter") {
        None => OrbitFilter::All,
        Some(s) => parse_with(s, "filter")?,
    };
    let orbits = lib(enumerate_orbits(family, size, filter))?;
    let edges = lib(hasse_edges(&orbits))?;
    match parsed.flag("format") {
        Some("dot") => {
            emit(out, format_args!("digraph poset {{\n"))?;
            for orbit in &orbits {
                emit(out, format_args!("  \"{orbit}\";\n"))?;
            }
            for (small, large) in &edges {
                emit(out, format_args!("  \"{small}\" -> \"{large}\";\n"))?;
            }
            emit(out, format_args!("}}\n"))?;
        }
        Some("json") => {
            let value = json!({
                "family": family.to_string(),
                "size": size,
                "filter": filter.to_string(),
                "nodes": orbits.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                "edges": edges
                    .iter()
                    .map(|(a, b)| vec![a.to_string(), b.to_string()])
                    .collect::<Vec<_>>(),
            });
            emit(out, format_args!("{value}\n"))?;
        }
        Some(other) => return usage(format!("bad format {other:?}: expected dot or json")),
        None => return usage("poset needs --format dot|json"),
    }
    Ok(0)
}
