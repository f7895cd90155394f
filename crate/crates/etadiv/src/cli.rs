//! Command-line front end. Every subcommand is deterministic: identical
//! inputs produce byte-identical output. Text is the default; `--json`
//! emits a single object `{"level": ..., "query": ..., "result": ...}`
//! with every numeric value rendered as an exact-rational string.
//!
//! Exit codes: 0 success or verified, 1 verification failure, 2 usage or
//! domain error.

use std::ffi::OsString;

use clap::{Args, ColorChoice, Parser, Subcommand};
use serde_json::{Map, Value};

use crate::catalog::{self, EllipticInterpretation, GenusBoundCheck};
use crate::eta::EtaQuotient;
use crate::gamma0;
use crate::rational::{format_rational, parse_rational, rat, Rational};
use crate::valence::{self, Divisor};
use crate::Error;

/// What a finished invocation produced. The caller decides how to emit it;
/// the binary prints `stdout`/`stderr` and exits with `code`.
#[derive(Debug)]
pub struct RunOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser)]
#[command(
    name = "etadiv",
    version,
    color = ColorChoice::Never,
    about = "Exact divisors and zero-locations of eta-quotients and classical modular forms on Gamma_0(N)"
)]
struct Cli {
    /// Emit a JSON object {level, query, result} instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Index, elliptic-point counts, cusp count, and genus of Gamma_0(N)
    Invariants {
        #[arg(long)]
        level: u64,
    },
    /// Enumerate cusp class representatives with their widths
    Cusps {
        #[arg(long)]
        level: u64,
    },
    /// Eta-quotient reports
    #[command(subcommand)]
    Eta(EtaCommand),
    /// Valence-formula accounting for divisors
    #[command(subcommand)]
    Valence(ValenceCommand),
    /// Residual zero-mass of a weight-2 form at prime level, away from cusps
    Residual {
        #[arg(long)]
        prime: u64,
    },
    /// The embedded catalog of cuspforms with constrained zero sets
    #[command(subcommand)]
    Catalog(CatalogCommand),
    /// Dimension of the space of level-1 modular forms of even weight
    Dim1 {
        #[arg(long)]
        weight: u64,
    },
}

#[derive(Args)]
struct EtaArgs {
    #[arg(long)]
    level: u64,
    /// Eta-quotient spec `d:r,...`, e.g. `1:12,11:-12`
    #[arg(long)]
    eta: String,
}

#[derive(Subcommand)]
enum EtaCommand {
    /// The four modularity conditions, the weight, and character data
    Check(EtaArgs),
    /// Orders of vanishing at every cusp of the level
    Divisor(EtaArgs),
    /// q-expansion at the cusp infinity
    Qexp {
        #[command(flatten)]
        eta: EtaArgs,
        /// Number of q-powers kept beyond the leading term
        #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u32).range(1..))]
        terms: u32,
    },
}

#[derive(Subcommand)]
enum ValenceCommand {
    /// Compare a divisor's weighted degree with the budget k*mu/12
    Check {
        #[arg(long)]
        level: u64,
        /// Weight as an exact rational `p` or `p/q`
        #[arg(long)]
        weight: String,
        /// Divisor spec `place=order;...` with places 0, inf, a/c, i, w, pt:LABEL
        #[arg(long)]
        divisor: String,
    },
    /// Infer the weight a form with the given divisor must have
    Infer {
        #[arg(long)]
        level: u64,
        /// Divisor spec `place=order;...`
        #[arg(long)]
        divisor: String,
    },
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// Check every row (or the rows of one level) and report per-row status
    Verify {
        /// Restrict to rows with this level
        #[arg(long)]
        row: Option<u64>,
    },
}

struct CommandOutput {
    query: &'static str,
    level: Value,
    result: Value,
    text: String,
    verified: bool,
}

/// Run the CLI against an argument vector. The first element is the
/// program name, as in `std::env::args_os`.
pub fn run<I, S>(argv: I) -> RunOutput
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                RunOutput { code: 2, stdout: String::new(), stderr: rendered }
            } else {
                // --help and --version land here
                RunOutput { code: 0, stdout: rendered, stderr: String::new() }
            };
        }
    };
    match execute(&cli.command) {
        Ok(out) => {
            let stdout = if cli.json {
                let mut top = Map::new();
                top.insert("level".to_string(), out.level);
                top.insert("query".to_string(), Value::String(out.query.to_string()));
                top.insert("result".to_string(), out.result);
                let mut s = Value::Object(top).to_string();
                s.push('\n');
                s
            } else {
                out.text
            };
            RunOutput { code: i32::from(!out.verified), stdout, stderr: String::new() }
        }
        Err(e) => RunOutput { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn execute(command: &Command) -> Result<CommandOutput, Error> {
    match command {
        Command::Invariants { level } => invariants_cmd(*level),
        Command::Cusps { level } => cusps_cmd(*level),
        Command::Eta(EtaCommand::Check(args)) => eta_check_cmd(args),
        Command::Eta(EtaCommand::Divisor(args)) => eta_divisor_cmd(args),
        Command::Eta(EtaCommand::Qexp { eta, terms }) => eta_qexp_cmd(eta, *terms),
        Command::Valence(ValenceCommand::Check { level, weight, divisor }) => {
            valence_check_cmd(*level, weight, divisor)
        }
        Command::Valence(ValenceCommand::Infer { level, divisor }) => {
            valence_infer_cmd(*level, divisor)
        }
        Command::Residual { prime } => residual_cmd(*prime),
        Command::Catalog(CatalogCommand::Verify { row }) => catalog_verify_cmd(*row),
        Command::Dim1 { weight } => dim1_cmd(*weight),
    }
}

fn s(v: impl ToString) -> Value {
    Value::String(v.to_string())
}

fn r(v: &Rational) -> Value {
    Value::String(format_rational(v))
}

fn invariants_cmd(level: u64) -> Result<CommandOutput, Error> {
    let d = gamma0::invariants(level)?;
    let text = format!(
        "level={} index={} nu2={} nu3={} cusps={} genus={}\n",
        d.level, d.index, d.nu2, d.nu3, d.cusp_count, d.genus
    );
    let mut result = Map::new();
    result.insert("index".into(), s(d.index));
    result.insert("nu2".into(), s(d.nu2));
    result.insert("nu3".into(), s(d.nu3));
    result.insert("cusp_count".into(), s(d.cusp_count));
    result.insert("genus".into(), s(d.genus));
    Ok(CommandOutput {
        query: "invariants",
        level: s(level),
        result: Value::Object(result),
        text,
        verified: true,
    })
}

fn cusps_cmd(level: u64) -> Result<CommandOutput, Error> {
    let list = gamma0::cusps(level)?;
    let mut text = String::new();
    let mut items = Vec::new();
    for c in &list {
        text.push_str(&format!(
            "{}: a/c={}/{} width={}\n",
            c.label(),
            c.numerator(),
            c.denominator(),
            c.width()
        ));
        let mut item = Map::new();
        item.insert("label".into(), s(c.label()));
        item.insert("numerator".into(), s(c.numerator()));
        item.insert("denominator".into(), s(c.denominator()));
        item.insert("width".into(), s(c.width()));
        items.push(Value::Object(item));
    }
    Ok(CommandOutput {
        query: "cusps",
        level: s(level),
        result: Value::Array(items),
        text,
        verified: true,
    })
}

fn eta_check_cmd(args: &EtaArgs) -> Result<CommandOutput, Error> {
    let f = EtaQuotient::parse(args.level, &args.eta)?;
    let rep = f.ligozat_check();
    let ok = rep.all_conditions_hold();
    let mut text = format!(
        "cond1 (sum d*r_d = 0 mod 24): {}\n\
         cond2 (sum (N/d)*r_d = 0 mod 24): {}\n\
         cond3 (sum r_d = 0): {}\n\
         cond4 (prod (N/d)^r_d is a square): {}\n\
         weight: {}\n",
        rep.cond1,
        rep.cond2,
        rep.cond3,
        rep.cond4,
        format_rational(&rep.weight)
    );
    let mut result = Map::new();
    result.insert("cond1".into(), Value::Bool(rep.cond1));
    result.insert("cond2".into(), Value::Bool(rep.cond2));
    result.insert("cond3".into(), Value::Bool(rep.cond3));
    result.insert("cond4".into(), Value::Bool(rep.cond4));
    result.insert("weight".into(), r(&rep.weight));
    if let Some(ch) = &rep.character {
        text.push_str(&format!(
            "character discriminant ((-1)^k prod d^r_d): {}\n\
             character discriminant is a square: {}\n",
            format_rational(&ch.discriminant),
            ch.is_square
        ));
        result.insert("character_discriminant".into(), r(&ch.discriminant));
        result.insert("character_is_square".into(), Value::Bool(ch.is_square));
    }
    text.push_str(&format!("modular function of weight 0: {ok}\n"));
    result.insert("all_conditions".into(), Value::Bool(ok));
    Ok(CommandOutput {
        query: "eta check",
        level: s(args.level),
        result: Value::Object(result),
        text,
        verified: ok,
    })
}

fn eta_divisor_cmd(args: &EtaArgs) -> Result<CommandOutput, Error> {
    let f = EtaQuotient::parse(args.level, &args.eta)?;
    let div = f.divisor();
    let mut text = div.to_text();
    text.push('\n');
    if !div.is_integral() {
        text.push_str("warning: non-integral cusp orders; the quotient fails the congruence conditions\n");
    }
    let items: Vec<Value> = div
        .orders()
        .iter()
        .map(|(c, o)| {
            let mut item = Map::new();
            item.insert("cusp".into(), s(c.label()));
            item.insert("order".into(), r(o));
            Value::Object(item)
        })
        .collect();
    let mut result = Map::new();
    result.insert("orders".into(), Value::Array(items));
    result.insert("integral".into(), Value::Bool(div.is_integral()));
    Ok(CommandOutput {
        query: "eta divisor",
        level: s(args.level),
        result: Value::Object(result),
        text,
        verified: true,
    })
}

fn eta_qexp_cmd(args: &EtaArgs, terms: u32) -> Result<CommandOutput, Error> {
    let f = EtaQuotient::parse(args.level, &args.eta)?;
    let leading: i64 = f.exponents().map(|(d, r)| d as i64 * r).sum();
    let precision = leading + 24 * i64::from(terms);
    let series = f.expansion(precision)?;
    let text = format!("{}\n", series.to_text());
    let triples: Vec<Value> = series
        .terms()
        .map(|(e, c)| {
            Value::Array(vec![s(e), s(c.numer()), s(c.denom())])
        })
        .collect();
    let mut result = Map::new();
    result.insert("precision".into(), s(series.precision()));
    result.insert("terms".into(), Value::Array(triples));
    Ok(CommandOutput {
        query: "eta qexp",
        level: s(args.level),
        result: Value::Object(result),
        text,
        verified: true,
    })
}

fn valence_check_cmd(level: u64, weight: &str, divisor: &str) -> Result<CommandOutput, Error> {
    let weight = parse_rational(weight)?;
    let div = Divisor::parse(level, divisor)?;
    let equal = valence::check_valence(&div, level, &weight)?;
    let degree = div.weighted_degree();
    let budget = valence::budget(level, &weight)?;
    let text = format!(
        "degree={} budget={} equal={equal}\n",
        format_rational(&degree),
        format_rational(&budget)
    );
    let mut result = Map::new();
    result.insert("degree".into(), r(&degree));
    result.insert("budget".into(), r(&budget));
    result.insert("equal".into(), Value::Bool(equal));
    Ok(CommandOutput {
        query: "valence check",
        level: s(level),
        result: Value::Object(result),
        text,
        verified: equal,
    })
}

fn valence_infer_cmd(level: u64, divisor: &str) -> Result<CommandOutput, Error> {
    let div = Divisor::parse(level, divisor)?;
    let weight = valence::infer_weight(&div, level)?;
    let degree = div.weighted_degree();
    let text = format!(
        "degree={} inferred_weight={}\n",
        format_rational(&degree),
        format_rational(&weight)
    );
    let mut result = Map::new();
    result.insert("degree".into(), r(&degree));
    result.insert("weight".into(), r(&weight));
    Ok(CommandOutput {
        query: "valence infer",
        level: s(level),
        result: Value::Object(result),
        text,
        verified: true,
    })
}

fn residual_cmd(prime: u64) -> Result<CommandOutput, Error> {
    let residual = valence::residual_weight(prime)?;
    let data = gamma0::invariants(prime)?;
    let budget = valence::budget(prime, &rat(2))?;
    let text = format!(
        "p={} class={} genus={} budget={} residual={}\n",
        prime,
        prime % 12,
        data.genus,
        format_rational(&budget),
        format_rational(&residual)
    );
    let mut result = Map::new();
    result.insert("class_mod_12".into(), s(prime % 12));
    result.insert("genus".into(), s(data.genus));
    result.insert("budget".into(), r(&budget));
    result.insert("residual_weight".into(), r(&residual));
    Ok(CommandOutput {
        query: "residual",
        level: s(prime),
        result: Value::Object(result),
        text,
        verified: true,
    })
}

fn catalog_verify_cmd(level_filter: Option<u64>) -> Result<CommandOutput, Error> {
    let rows: Vec<_> = catalog::rows()
        .into_iter()
        .filter(|r| level_filter.is_none_or(|n| r.level == n))
        .collect();
    if rows.is_empty() {
        return Err(Error::InvalidArgument(format!(
            "no catalog row has level {}",
            level_filter.expect("filter caused emptiness")
        )));
    }
    let mut text = String::new();
    let mut items = Vec::new();
    let mut all_ok = true;
    for row in &rows {
        let report = catalog::verify_row(row)?;
        let ok = report.is_ok();
        all_ok &= ok;
        let elliptic = match report.elliptic_interpretation {
            EllipticInterpretation::Elliptic => "elliptic",
            EllipticInterpretation::OrdinaryFiber => "ordinary",
            EllipticInterpretation::NotPresent => "-",
        };
        let genus_bound = match report.genus_bound {
            GenusBoundCheck::NotApplicable => "n/a",
            GenusBoundCheck::Holds { equality: true } => "equal",
            GenusBoundCheck::Holds { equality: false } => "holds",
            GenusBoundCheck::Violated => "violated",
        };
        let flag = |b: bool| if b { "ok" } else { "fail" };
        text.push_str(&format!(
            "N={} weight={} valence={} cusps={} elliptic={} genus_bound={} {}\n",
            report.level,
            format_rational(&report.inferred_weight),
            flag(report.valence_ok && report.weight_integral),
            flag(report.cusp_count_ok),
            elliptic,
            genus_bound,
            if ok { "OK" } else { "FAIL" }
        ));
        let mut item = Map::new();
        item.insert("level".into(), s(report.level));
        item.insert("weight".into(), r(&report.inferred_weight));
        item.insert("weight_integral".into(), Value::Bool(report.weight_integral));
        item.insert("valence_ok".into(), Value::Bool(report.valence_ok));
        item.insert("cusp_count_ok".into(), Value::Bool(report.cusp_count_ok));
        item.insert("elliptic".into(), s(elliptic));
        item.insert("genus_bound".into(), s(genus_bound));
        item.insert("ok".into(), Value::Bool(ok));
        items.push(Value::Object(item));
    }
    Ok(CommandOutput {
        query: "catalog verify",
        level: level_filter.map_or(Value::Null, s),
        result: Value::Array(items),
        text,
        verified: all_ok,
    })
}

fn dim1_cmd(weight: u64) -> Result<CommandOutput, Error> {
    let dim = valence::dim_level1(weight)?;
    let text = format!("weight={weight} dim={dim}\n");
    let mut result = Map::new();
    result.insert("dimension".into(), s(dim));
    Ok(CommandOutput {
        query: "dim1",
        level: s(1),
        result: Value::Object(result),
        text,
        verified: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> RunOutput {
        let mut argv = vec!["etadiv"];
        argv.extend_from_slice(args);
        run(argv)
    }

    #[test]
    fn h11_divisor_golden() {
        let out = run_args(&["eta", "divisor", "--level", "11", "--eta", "1:12,11:-12"]);
        assert_eq!(out.code, 0);
        assert_eq!(out.stdout, "0: 5, inf: -5\n");
    }

    #[test]
    fn invariants_golden() {
        let out = run_args(&["invariants", "--level", "31"]);
        assert_eq!(out.code, 0);
        assert_eq!(out.stdout, "level=31 index=32 nu2=0 nu3=2 cusps=2 genus=2\n");
    }

    #[test]
    fn usage_errors_exit_2() {
        let out = run_args(&["eta", "divisor", "--level", "11", "--eta", "1:bogus"]);
        assert_eq!(out.code, 2);
        assert!(out.stderr.contains("bogus"), "{}", out.stderr);
        let out = run_args(&["no-such-command"]);
        assert_eq!(out.code, 2);
        let out = run_args(&["invariants"]);
        assert_eq!(out.code, 2); // missing --level
    }

    #[test]
    fn help_exits_0() {
        let out = run_args(&["--help"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("invariants"));
    }
}
