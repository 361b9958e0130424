//! Command-line front end for the conjugate-polynomial verifier.
//!
//! Subcommands: `verify`, `factor`, `galois`, `normcheck`. Exit codes:
//! 0 when every applicable assertion passes, 1 on an assertion failure
//! or internal error, 2 on a parse or usage error, 3 when an input
//! violates a hypothesis (the message names which one).

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::process::ExitCode;
use std::str::FromStr;

use serde_json::json;

use polyconj_core::arith::{Integer, PrimeField, Rationals};
use polyconj_core::conjtheorem::{frobenius_setting, ConjugateSetting, DivisorSpec};
use polyconj_core::error::Error;
use polyconj_core::factor_fp;
use polyconj_core::factor_qq;
use polyconj_core::normtheorem::{MonogenicRing, RingElement};
use polyconj_core::splitting::{automorphisms, build_splitting_field, compose, is_identity};

use polyconj_cli::parse::{self, parse_indices, parse_integer_list, PolyParser};
use polyconj_cli::{print, report};

const USAGE: &str = "polyconj - exact verification of conjugate-polynomial products

USAGE:
  polyconj verify --field q --f \"<poly>\" (--roots i,j,... | --g \"<poly over M>\")
                  [--corollary] [--json] [--seed <int>]
  polyconj verify --field fp --p <prime> --f \"<poly>\" (--roots ... | --g ...)
                  [--corollary] [--json] [--seed <int>]
  polyconj factor --field q|fp [--p <prime>] --f \"<poly>\" [--json] [--seed <int>]
  polyconj galois --f \"<poly>\" [--json] [--seed <int>]
  polyconj normcheck --minpoly \"<poly>\" --theta <int> --thetaprime a,b,...
                     [--json] [--seed <int>]

Polynomials use the variable x (case-insensitive), '^' for powers and an
optional '*', e.g. \"3/2*x^4 - x + 7\". Inside an extension field the
generator is written g, e.g. --g \"x^2 - (g + g^2)*x\".

Exit codes: 0 pass, 1 assertion failure, 2 parse/usage error,
3 hypothesis violation.";

enum CliError {
    Usage(String),
    Hypothesis(String),
    Failure(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Hypothesis(_) => 3,
            CliError::Failure(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Hypothesis(m) | CliError::Failure(m) => m,
        }
    }
}

impl From<parse::ParseError> for CliError {
    fn from(e: parse::ParseError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::NotIrreducible
            | Error::NotSeparable
            | Error::NotSquarefree
            | Error::NotMonic
            | Error::NotPrime
            | Error::DoesNotDivide
            | Error::ZeroDivisor
            | Error::ZeroPolynomial
            | Error::ConstantPolynomial
            | Error::DegenerateDivisor
            | Error::EmptySet
            | Error::IndexOutOfRange(_)
            | Error::FieldMismatch
            | Error::DegreeCapExceeded(_)
            | Error::CapExceeded(_)
            | Error::HypothesisViolated(_) => CliError::Hypothesis(e.to_string()),
            other => CliError::Failure(other.to_string()),
        }
    }
}

struct Flags {
    values: BTreeMap<String, String>,
    switches: Vec<String>,
}

impl Flags {
    fn parse(args: &[String], switch_names: &[&str]) -> Result<Flags, CliError> {
        let mut values = BTreeMap::new();
        let mut switches = Vec::new();
        let mut i = 0usize;
        while i < args.len() {
            let arg = &args[i];
            let Some(name) = arg.strip_prefix("--") else {
                return Err(CliError::Usage(format!("unexpected argument '{arg}'")));
            };
            if switch_names.contains(&name) {
                switches.push(name.to_string());
                i += 1;
                continue;
            }
            let value = args
                .get(i + 1)
                .ok_or_else(|| CliError::Usage(format!("--{name} requires a value")))?;
            values.insert(name.to_string(), value.clone());
            i += 2;
        }
        Ok(Flags { values, switches })
    }

    fn require(&self, name: &str) -> Result<&str, CliError> {
        self.values
            .get(name)
            .map(String::as_str)
            .ok_or_else(|| CliError::Usage(format!("missing required flag --{name}")))
    }

    fn get(&self, name: &str) -> Option<&str> {
        self.values.get(name).map(String::as_str)
    }

    fn switch(&self, name: &str) -> bool {
        self.switches.iter().any(|s| s == name)
    }

    fn seed(&self) -> Result<u64, CliError> {
        match self.get("seed") {
            None => Ok(0),
            Some(s) => s
                .parse::<u64>()
                .map_err(|_| CliError::Usage(format!("invalid --seed '{s}'"))),
        }
    }

    fn known(&self, allowed: &[&str]) -> Result<(), CliError> {
        for name in self.values.keys() {
            if !allowed.contains(&name.as_str()) {
                return Err(CliError::Usage(format!("unknown flag --{name}")));
            }
        }
        Ok(())
    }
}

/// Writes to stdout, exiting quietly when the reading end of a pipe has
/// closed instead of panicking.
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if out.write_all(text.as_bytes()).is_err() || out.flush().is_err() {
        std::process::exit(0);
    }
}

fn emit_json(value: &serde_json::Value) {
    let text = serde_json::to_string_pretty(value).expect("serializable");
    emit(&text);
    emit("\n");
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match run(&args) {
        Ok(pass) => {
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            if matches!(e, CliError::Usage(_)) {
                eprintln!("\n{USAGE}");
            }
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(args: &[String]) -> Result<bool, CliError> {
    let Some(command) = args.first() else {
        return Err(CliError::Usage("missing subcommand".into()));
    };
    let rest = &args[1..];
    match command.as_str() {
        "verify" => cmd_verify(rest),
        "factor" => cmd_factor(rest),
        "galois" => cmd_galois(rest),
        "normcheck" => cmd_normcheck(rest),
        "help" | "--help" | "-h" => {
            emit(USAGE);
            emit("\n");
            Ok(true)
        }
        other => Err(CliError::Usage(format!("unknown subcommand '{other}'"))),
    }
}

fn divisor_flags(flags: &Flags) -> Result<(), CliError> {
    match (flags.get("roots"), flags.get("g")) {
        (Some(_), Some(_)) => Err(CliError::Usage(
            "--roots and --g are mutually exclusive".into(),
        )),
        (None, None) => Err(CliError::Usage("one of --roots or --g is required".into())),
        _ => Ok(()),
    }
}

fn cmd_verify(args: &[String]) -> Result<bool, CliError> {
    let flags = Flags::parse(args, &["json", "corollary"])?;
    flags.known(&["field", "p", "f", "roots", "g", "seed"])?;
    divisor_flags(&flags)?;
    let seed = flags.seed()?;
    let corollary = flags.switch("corollary");
    let json = flags.switch("json");

    match flags.require("field")? {
        "q" => {
            let f = PolyParser::new(&Rationals, None).parse(flags.require("f")?)?;
            let m = build_splitting_field(&f, seed)?;
            let divisor = match flags.get("roots") {
                Some(list) => DivisorSpec::RootIndices(parse_indices(list)?),
                None => {
                    let parser =
                        PolyParser::new(m.field(), Some(m.field().generator()));
                    DivisorSpec::Explicit(parser.parse(flags.require("g")?)?)
                }
            };
            let setting = ConjugateSetting::over_rationals(&m, &divisor, seed)?;
            let report = if corollary {
                setting.verify_corollary()?
            } else {
                setting.verify_theorem()?
            };
            if json {
                emit_json(&report::verify_json_q(&setting, &report));
            } else {
                emit(&report::verify_text_q(&setting, &report));
            }
            Ok(report.pass())
        }
        "fp" => {
            let p = flags
                .require("p")?
                .parse::<u64>()
                .map_err(|_| CliError::Usage("invalid --p".into()))?;
            let field = PrimeField::new(p)?;
            let f = PolyParser::new(&field, None).parse(flags.require("f")?)?;
            // The extension is defined by f itself; parse an explicit g
            // against a provisional setting's field.
            let provisional = frobenius_setting(
                &field,
                &f,
                &DivisorSpec::RootIndices(vec![0]),
                seed,
            )?;
            let divisor = match flags.get("roots") {
                Some(list) => DivisorSpec::RootIndices(parse_indices(list)?),
                None => {
                    let ext = provisional.extension();
                    let parser = PolyParser::new(ext, Some(ext.generator()));
                    DivisorSpec::Explicit(parser.parse(flags.require("g")?)?)
                }
            };
            let setting = frobenius_setting(&field, &f, &divisor, seed)?;
            let report = if corollary {
                setting.verify_corollary()?
            } else {
                setting.verify_theorem()?
            };
            if json {
                emit_json(&report::verify_json_fp(p, &setting, &report));
            } else {
                emit(&report::verify_text_fp(p, &setting, &report));
            }
            Ok(report.pass())
        }
        other => Err(CliError::Usage(format!(
            "--field must be 'q' or 'fp', got '{other}'"
        ))),
    }
}

fn cmd_factor(args: &[String]) -> Result<bool, CliError> {
    let flags = Flags::parse(args, &["json"])?;
    flags.known(&["field", "p", "f", "seed"])?;
    let seed = flags.seed()?;
    let json = flags.switch("json");

    match flags.require("field")? {
        "q" => {
            let f = PolyParser::new(&Rationals, None).parse(flags.require("f")?)?;
            let factors = factor_qq::factor_over_q(&f, seed)?;
            if json {
                let value = json!({
                    "base_field": {"kind": "q"},
                    "input": print::q_poly_string(&f, "x"),
                    "lc": f.leading_coefficient().map(|c| c.to_string()),
                    "factors": factors.iter().map(|(p, m)| json!({
                        "factor": print::q_poly_string(p, "x"),
                        "multiplicity": m,
                    })).collect::<Vec<_>>(),
                });
                emit_json(&value);
            } else {
                let mut out = String::new();
                let _ = writeln!(out, "input: {}", print::q_poly_string(&f, "x"));
                let _ = writeln!(out, "lc: {}", f.leading_coefficient().expect("nonzero input"));
                for (p, m) in &factors {
                    let _ = writeln!(out, "  ({})^{m}", print::q_poly_string(p, "x"));
                }
                emit(&out);
            }
            Ok(true)
        }
        "fp" => {
            let p = flags
                .require("p")?
                .parse::<u64>()
                .map_err(|_| CliError::Usage("invalid --p".into()))?;
            let field = PrimeField::new(p)?;
            let f = PolyParser::new(&field, None).parse(flags.require("f")?)?;
            let factors = factor_fp::factor_mod_p(&field, &f, seed)?;
            if json {
                let value = json!({
                    "base_field": {"kind": "fp", "p": p},
                    "input": print::fp_poly_string(&f, "x"),
                    "lc": f.leading_coefficient().map(|c| c.residue().to_string()),
                    "factors": factors.iter().map(|(q, m)| json!({
                        "factor": print::fp_poly_string(q, "x"),
                        "multiplicity": m,
                    })).collect::<Vec<_>>(),
                });
                emit_json(&value);
            } else {
                let mut out = String::new();
                let _ = writeln!(out, "input: {}", print::fp_poly_string(&f, "x"));
                for (q, m) in &factors {
                    let _ = writeln!(out, "  ({})^{m}", print::fp_poly_string(q, "x"));
                }
                emit(&out);
            }
            Ok(true)
        }
        other => Err(CliError::Usage(format!(
            "--field must be 'q' or 'fp', got '{other}'"
        ))),
    }
}

fn cmd_galois(args: &[String]) -> Result<bool, CliError> {
    let flags = Flags::parse(args, &["json"])?;
    flags.known(&["f", "seed"])?;
    let seed = flags.seed()?;
    let json = flags.switch("json");

    let f = PolyParser::new(&Rationals, None).parse(flags.require("f")?)?;
    let m = build_splitting_field(&f, seed)?;
    let autos = automorphisms(&m)?;

    // Composition table and a cyclicity check via element orders.
    let n = autos.len();
    let mut table = vec![vec![0usize; n]; n];
    for (i, a) in autos.iter().enumerate() {
        for (j, b) in autos.iter().enumerate() {
            let c = compose(&m, a, b);
            table[i][j] = autos
                .iter()
                .position(|x| *x == c)
                .expect("group closure");
        }
    }
    let cyclic = (0..n).any(|i| {
        let mut k = i;
        let mut order = 1usize;
        while !is_identity(&m, &autos[k]) {
            k = table[k][i];
            order += 1;
        }
        order == n
    });

    if json {
        let value = json!({
            "f": print::q_poly_string(&f, "x"),
            "field_degree": m.degree(),
            "order": n,
            "automorphisms": autos.iter().map(|a| json!({
                "gamma_image": print::nf_elem_string(m.field(), a.gamma_image()),
                "cycles": report::cycles_string(&a.cycles()),
            })).collect::<Vec<_>>(),
            "table": table,
            "cyclic": cyclic,
        });
        emit_json(&value);
    } else {
        let mut out = String::new();
        let _ = writeln!(out, "f = {}", print::q_poly_string(&f, "x"));
        let _ = writeln!(out, "[M:Q] = {}, group order {n}, cyclic: {cyclic}", m.degree());
        let _ = writeln!(out, "automorphisms (gamma = generator of M):");
        for (i, a) in autos.iter().enumerate() {
            let _ = writeln!(
                out,
                "  [{i}] {}  g -> {}",
                report::cycles_string(&a.cycles()),
                print::nf_elem_string(m.field(), a.gamma_image())
            );
        }
        let _ = writeln!(out, "composition table (row . column):");
        for row in &table {
            let cells: Vec<String> = row.iter().map(|k| k.to_string()).collect();
            let _ = writeln!(out, "  {}", cells.join(" "));
        }
        emit(&out);
    }
    Ok(true)
}

fn cmd_normcheck(args: &[String]) -> Result<bool, CliError> {
    let flags = Flags::parse(args, &["json"])?;
    flags.known(&["minpoly", "theta", "thetaprime", "seed"])?;
    let seed = flags.seed()?;
    let json = flags.switch("json");

    let minpoly_q = PolyParser::new(&Rationals, None).parse(flags.require("minpoly")?)?;
    let coeffs: Option<Vec<Integer>> = minpoly_q
        .coeffs()
        .iter()
        .map(|c| c.to_integer())
        .collect();
    let coeffs = coeffs.ok_or_else(|| {
        CliError::Hypothesis("the minimal polynomial must have integer coefficients".into())
    })?;
    let minpoly = factor_qq::zp(coeffs);
    let ring = MonogenicRing::new(&minpoly, seed)?;

    let theta = Integer::from_str(flags.require("theta")?)
        .map_err(|_| CliError::Usage("invalid --theta".into()))?;
    let coords = parse_integer_list(flags.require("thetaprime")?)?;
    if coords.len() != ring.degree() {
        return Err(CliError::Hypothesis(format!(
            "--thetaprime needs {} coordinates for this ring",
            ring.degree()
        )));
    }
    let theta_prime = RingElement::from_i64(&coords);
    let report = ring.verify_norm_theorem(&theta, &theta_prime)?;

    if json {
        let value = json!({
            "minpoly": print::q_poly_string(&factor_qq::zp_to_rational(&minpoly), "x"),
            "theta": report.theta.to_string(),
            "theta_prime": report.theta_prime.coords().iter()
                .map(|c| c.to_string()).collect::<Vec<_>>(),
            "Theta": report.big_theta.to_string(),
            "n": report.n,
            "u": report.u.to_string(),
            "bound": report.bound,
            "assertions": {
                "u_is_unit": report.u_is_unit,
                "n_within_bound": report.n_within_bound,
            },
        });
        emit_json(&value);
    } else {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "ring: Z[a], a with minimal polynomial {}",
            print::q_poly_string(&factor_qq::zp_to_rational(&minpoly), "x")
        );
        let _ = writeln!(out, "theta = {}, theta' coords = {:?}", report.theta, coords);
        let _ = writeln!(
            out,
            "Theta = N(theta') = {}, n = {}, u = {}, bound = {}",
            report.big_theta, report.n, report.u, report.bound
        );
        let _ = writeln!(
            out,
            "u is a unit: {}; n <= bound: {}",
            if report.u_is_unit { "pass" } else { "FAIL" },
            if report.n_within_bound { "pass" } else { "FAIL" }
        );
        let _ = writeln!(out, "result: {}", if report.pass() { "PASS" } else { "FAIL" });
        emit(&out);
    }
    Ok(report.pass())
}
