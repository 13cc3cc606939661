//! Command implementations and argument plumbing for the `ckcas` binary.
//!
//! Exit codes: 0 success, 2 usage error, 3 verification failure (with a
//! JSON witness on stderr).

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use anyhow::{anyhow, bail, Result};
use ck_core::casimirs::{verify_centrality, CasimirSet};
use ck_core::gelfand::{
    expected_mg_rank, gelfand_classical_casimirs, mg_rank, proportionality_ratio, t_matrix,
    tau_bound, w_squared_identity_check, witness_monomial_check, AlphaAssignment,
};
use ck_core::wsymbols::WIndexSet;
use ck_core::{Centrality, OmegaEntry, OmegaSpec, Rational};
use clap::{Args, Parser, Subcommand};
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::jsonfmt::{element_to_json, JsonCasimirSet, JsonLabeledElement};
use crate::registry::{self, AliasTable, OmegaArg, OmegaToken};
use crate::render::{render_casimir_set, Format};

#[derive(Parser, Debug)]
#[command(name = "ckcas", version, about = "Casimir invariants of the Cayley-Klein algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct SpecArgs {
    /// Dimension parameter N of so_{w1..wN}(N+1)
    #[arg(long)]
    pub n: Option<usize>,
    /// Comma list of exact rationals / `k` / `-1/c2` / `symbolic` per
    /// slot, or the single word `symbolic`
    #[arg(long)]
    pub omega: Option<String>,
    /// Named algebra from the catalog
    #[arg(long)]
    pub name: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    /// text, latex or json
    #[arg(long, default_value = "text")]
    pub format: String,
    /// Write output to a file instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generate the full Casimir set of an algebra
    Generate {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Normal-order [generator, Casimir] for every generator
    Verify {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Substitute contraction values and re-render the invariants
    Contract {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Comma list VAR=VALUE (k, c, or w1..wN; c accepts `inf`)
        #[arg(long)]
        set: String,
    },
    /// Randomized rank of M_g and the independent-Casimir bound
    Rank {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Independent cross-checks through the T-matrix route
    GelfandCheck {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Emit the (3+1) kinematical table
    Table1 {
        #[command(flatten)]
        output: OutputArgs,
    },
    /// List the named algebras
    Catalog {
        #[command(flatten)]
        output: OutputArgs,
    },
}

/// Error wrapper distinguishing usage problems (exit 2) from
/// verification failures (exit 3, JSON witness attached).
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Verification { message: String, witness: serde_json::Value },
}

pub type CliResult = std::result::Result<(), CliError>;

fn usage(e: impl ToString) -> CliError {
    CliError::Usage(e.to_string())
}

/// Resolved invocation target: spec plus rendering data.
pub struct Target {
    pub omega: OmegaArg,
    pub spec: OmegaSpec,
    pub aliases: AliasTable,
    pub label: String,
}

pub fn resolve_target(args: &SpecArgs) -> Result<Target> {
    match (&args.name, &args.omega) {
        (Some(name), None) => {
            let n = args.n.unwrap_or(4);
            let entry = registry::resolve(name, n)?;
            Ok(Target {
                spec: entry.omega.to_spec(),
                omega: entry.omega.clone(),
                aliases: entry.aliases,
                label: entry.name,
            })
        }
        (None, Some(list)) => {
            let omega = if list == "symbolic" {
                let n = args
                    .n
                    .ok_or_else(|| anyhow!("--omega symbolic requires --n"))?;
                OmegaArg::symbolic(n)
            } else {
                OmegaArg::parse(list)?
            };
            if let Some(n) = args.n {
                if n != omega.n() {
                    bail!("--n {n} does not match omega list of length {}", omega.n());
                }
            }
            let aliases = if omega.n() == 4 && omega.kinematical_tokens() {
                AliasTable::kinematical()
            } else {
                AliasTable::default()
            };
            Ok(Target {
                spec: omega.to_spec(),
                label: format!("so_{{{}}}({})", omega_label(&omega), omega.n() + 1),
                omega,
                aliases,
            })
        }
        (Some(_), Some(_)) => bail!("--name and --omega are mutually exclusive"),
        (None, None) => bail!("one of --name or --omega is required"),
    }
}

fn omega_label(omega: &OmegaArg) -> String {
    omega
        .tokens
        .iter()
        .enumerate()
        .map(|(i, t)| match t {
            OmegaToken::Fixed(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            OmegaToken::Symbolic => format!("w{}", i + 1),
            OmegaToken::Kappa => "k".into(),
            OmegaToken::InvC2 => "-1/c^2".into(),
        })
        .collect::<Vec<_>>()
        .join(",")
}

fn parse_format(output: &OutputArgs) -> Result<Format> {
    output.format.parse()
}

fn deliver(output: &OutputArgs, content: &str) -> CliResult {
    match &output.out {
        Some(path) => std::fs::write(path, content).map_err(|e| usage(e)),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn generate_text(target: &Target, format: Format) -> Result<String> {
    let mut out = String::new();
    let header = if target.label.starts_with("so_") {
        target.label.clone()
    } else {
        format!(
            "{} = so_{{{}}}({})",
            target.label,
            omega_label(&target.omega),
            target.omega.n() + 1
        )
    };
    if format != Format::Latex {
        writeln!(out, "{header}").unwrap();
    }
    for (label, text) in render_casimir_set(format, &target.omega, &target.aliases, &target.spec)? {
        writeln!(out, "{label} = {text}").unwrap();
    }
    Ok(out)
}

fn generate_json(target: &Target) -> Result<String> {
    let set = CasimirSet::generate(&target.spec)?;
    let invariants = set
        .members()
        .map(|(label, e)| JsonLabeledElement {
            label,
            element: element_to_json(&target.spec, e),
        })
        .collect();
    let doc = JsonCasimirSet { invariants };
    Ok(format!("{}\n", serde_json::to_string_pretty(&doc).unwrap()))
}

pub fn cmd_generate(spec: &SpecArgs, output: &OutputArgs) -> CliResult {
    let target = resolve_target(spec).map_err(usage)?;
    let format = parse_format(output).map_err(usage)?;
    let content = match format {
        Format::Json => generate_json(&target).map_err(usage)?,
        _ => generate_text(&target, format).map_err(usage)?,
    };
    deliver(output, &content)
}

pub fn cmd_verify(spec: &SpecArgs, output: &OutputArgs) -> CliResult {
    let target = resolve_target(spec).map_err(usage)?;
    let report = verify_centrality(&target.spec).map_err(usage)?;
    let total = report.entries.len();
    let central = report
        .entries
        .iter()
        .filter(|(_, c)| c.is_central())
        .count();
    let mut content = String::new();
    for (label, c) in &report.entries {
        writeln!(
            content,
            "{label}: {}",
            if c.is_central() { "central" } else { "NOT CENTRAL" }
        )
        .unwrap();
    }
    writeln!(content, "{central}/{total} central").unwrap();
    if central != total {
        let failures: Vec<serde_json::Value> = report
            .entries
            .iter()
            .filter_map(|(label, c)| match c {
                Centrality::Central => None,
                Centrality::NotCentral { generator, remainder } => Some(json!({
                    "casimir": label,
                    "generator": format!("O_{}{}", generator.a(), generator.b()),
                    "remainder_terms": remainder.num_terms(),
                })),
            })
            .collect();
        return Err(CliError::Verification {
            message: content,
            witness: json!({"command": "verify", "failures": failures}),
        });
    }
    deliver(output, &content)
}

fn parse_set_list(set: &str, omega: &OmegaArg) -> Result<BTreeMap<usize, Rational>> {
    let n = omega.n();
    let mut asg = BTreeMap::new();
    for item in set.split(',') {
        let (var, value) = item
            .split_once('=')
            .ok_or_else(|| anyhow!("--set items must be VAR=VALUE, got `{item}`"))?;
        let (slot, val) = match var.trim() {
            "k" | "kappa" => (1, parse_plain_rational(value)?),
            "c" => {
                let v = value.trim();
                let val = if v == "inf" {
                    Rational::zero()
                } else {
                    let c = parse_plain_rational(v)?;
                    if c.is_zero() {
                        bail!("c must be nonzero or inf");
                    }
                    -(Rational::one() / (&c * &c))
                };
                (2, val)
            }
            w => {
                let slot: usize = w
                    .strip_prefix('w')
                    .and_then(|d| d.parse().ok())
                    .ok_or_else(|| anyhow!("unknown variable `{w}`"))?;
                if slot == 0 || slot > n {
                    bail!("w{slot} out of range for n = {n}");
                }
                (slot, parse_plain_rational(value)?)
            }
        };
        asg.insert(slot, val);
    }
    Ok(asg)
}

fn parse_plain_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: i64 = p.parse()?;
        let q: i64 = q.parse()?;
        if q == 0 {
            bail!("zero denominator");
        }
        Ok(Rational::new(p.into(), q.into()))
    } else {
        let p: i64 = s.parse().map_err(|_| anyhow!("bad rational `{s}`"))?;
        Ok(Rational::from_integer(p.into()))
    }
}

pub fn cmd_contract(spec: &SpecArgs, output: &OutputArgs, set: &str) -> CliResult {
    let base = resolve_target(spec).map_err(usage)?;
    let format = parse_format(output).map_err(usage)?;
    let asg = parse_set_list(set, &base.omega).map_err(usage)?;

    // re-open the targeted slots symbolically, then substitute exactly
    let family_tokens: Vec<OmegaToken> = base
        .omega
        .tokens
        .iter()
        .enumerate()
        .map(|(i, t)| {
            if asg.contains_key(&(i + 1)) {
                OmegaToken::Symbolic
            } else {
                t.clone()
            }
        })
        .collect();
    let family = OmegaArg {
        tokens: family_tokens,
    };
    let family_spec = family.to_spec();
    let contracted_spec = family_spec.substitute(&asg).map_err(usage)?;

    // engine substitution into the symbolic family ...
    let family_set = CasimirSet::generate(&family_spec).map_err(usage)?;
    let substituted: Vec<(String, ck_core::EnvelopingElement)> = family_set
        .members()
        .map(|(label, e)| {
            ck_core::enveloping::substitute(&family_spec, e, &asg).map(|s| (label, s))
        })
        .collect::<std::result::Result<_, _>>()
        .map_err(usage)?;
    // ... must agree with direct generation on the contracted spec
    let direct = CasimirSet::generate(&contracted_spec).map_err(usage)?;
    for ((label, sub), (_, dir)) in substituted.iter().zip(direct.members()) {
        if sub != dir {
            return Err(CliError::Verification {
                message: format!("contraction mismatch in {label}\n"),
                witness: json!({
                    "command": "contract",
                    "casimir": label,
                    "detail": "substituted family invariant differs from direct generation",
                }),
            });
        }
    }

    let contracted = Target {
        omega: OmegaArg::fixed_and_tokens(&contracted_spec, &base.omega),
        spec: contracted_spec,
        aliases: base.aliases.clone(),
        label: String::new(),
    };
    let content = match format {
        Format::Json => generate_json(&contracted).map_err(usage)?,
        _ => {
            let mut target = contracted;
            target.label = format!(
                "so_{{{}}}({})",
                omega_label(&target.omega),
                target.omega.n() + 1
            );
            generate_text(&target, format).map_err(usage)?
        }
    };
    deliver(output, &content)
}

pub fn cmd_rank(spec: &SpecArgs, output: &OutputArgs, seed: u64) -> CliResult {
    let target = resolve_target(spec).map_err(usage)?;
    let n = target.spec.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rank = mg_rank(&target.spec, &mut rng, 3).map_err(usage)?;
    let tau = tau_bound(&target.spec, &mut rng, 3).map_err(usage)?;
    let expected = expected_mg_rank(n);
    let expected_tau = (n + 1) / 2;
    let format = parse_format(output).map_err(usage)?;
    let content = if format == Format::Json {
        format!(
            "{}\n",
            serde_json::to_string_pretty(&json!({
                "n": n,
                "dim": n * (n + 1) / 2,
                "rank": rank,
                "tau": tau,
                "expected_rank": expected,
                "expected_tau": expected_tau,
            }))
            .unwrap()
        )
    } else {
        format!(
            "n = {n}, dim g = {}\nrank M_g = {rank} (expected {expected})\ntau = {tau} (expected {expected_tau})\n",
            n * (n + 1) / 2
        )
    };
    if rank != expected || tau != expected_tau {
        return Err(CliError::Verification {
            message: content,
            witness: json!({
                "command": "rank",
                "rank": rank,
                "expected_rank": expected,
                "tau": tau,
                "expected_tau": expected_tau,
            }),
        });
    }
    deliver(output, &content)
}

pub fn cmd_gelfand_check(spec: &SpecArgs, output: &OutputArgs, seed: u64) -> CliResult {
    let target = resolve_target(spec).map_err(usage)?;
    let s = &target.spec;
    let n = s.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut lines = Vec::new();
    let mut failures = Vec::new();

    let rank = mg_rank(s, &mut rng, 3).map_err(usage)?;
    if rank == expected_mg_rank(n) {
        lines.push(format!("ok   rank M_g = {rank}"));
    } else {
        lines.push(format!("FAIL rank M_g = {rank}, expected {}", expected_mg_rank(n)));
        failures.push(json!({"check": "rank", "got": rank, "expected": expected_mg_rank(n)}));
    }

    match witness_monomial_check(s, &mut rng) {
        Ok(true) => lines.push("ok   constructive minor witness".into()),
        Ok(false) => {
            lines.push("FAIL constructive minor witness".into());
            failures.push(json!({"check": "witness"}));
        }
        Err(e) => return Err(usage(e)),
    }

    let all_nonzero = (1..=n).all(|a| match s.entry(a) {
        OmegaEntry::Fixed(r) => !r.is_zero(),
        OmegaEntry::Symbolic => false,
    });
    if all_nonzero {
        let mut sets = Vec::new();
        for mask in 1u32..(1 << (n + 1)) {
            let c = mask.count_ones() as usize;
            if c >= 2 && c % 2 == 0 {
                let ix: Vec<usize> = (0..=n).filter(|i| mask & (1 << i) != 0).collect();
                sets.push(WIndexSet::new(ix, n).unwrap());
            }
        }
        let mut bad = 0usize;
        for _ in 0..5 {
            let alpha = AlphaAssignment::random(n, &mut rng, 100);
            for ix in &sets {
                if !w_squared_identity_check(s, &alpha, ix).map_err(usage)? {
                    bad += 1;
                }
            }
            // odd minors
            for size in (1..=n + 1).step_by(2) {
                let subset: Vec<usize> = (0..size).collect();
                let t = t_matrix(s, &alpha, &subset).map_err(usage)?;
                if !t.det().is_zero() {
                    bad += 1;
                }
            }
        }
        if bad == 0 {
            lines.push("ok   W^2 perfect-square identity and odd minors".into());
        } else {
            lines.push(format!("FAIL W^2 identity / odd minors ({bad} cases)"));
            failures.push(json!({"check": "w-squared", "failed_cases": bad}));
        }
        if n <= 4 {
            let classical = gelfand_classical_casimirs(s).map_err(usage)?;
            let central = classical
                .iter()
                .filter(|c| {
                    ck_core::enveloping::is_central(s, c)
                        .map(|r| r.is_central())
                        .unwrap_or(false)
                })
                .count();
            if central == classical.len() {
                lines.push(format!("ok   classical invariants central ({central})"));
            } else {
                lines.push(format!(
                    "FAIL classical invariants: {central}/{} central",
                    classical.len()
                ));
                failures.push(json!({"check": "classical", "central": central}));
            }
            // degree-2 invariants are forced proportional
            let mut t = ck_core::WTable::new(s);
            let c1 = ck_core::casimirs::casimir_s(&mut t, 1).ok();
            if let (Some(c1), Some(cl)) = (c1, classical.first()) {
                match proportionality_ratio(cl, &c1) {
                    Some(r) if !r.is_zero() => {
                        lines.push(format!("ok   classical C_1 scale factor {r}"))
                    }
                    _ => {
                        lines.push("FAIL classical C_1 not proportional".into());
                        failures.push(json!({"check": "proportionality"}));
                    }
                }
            }
        } else {
            lines.push("skip classical invariants (n > 4)".into());
        }
    } else {
        lines.push("skip T-matrix checks (omega has zeros or symbols)".into());
    }

    let content = lines.join("\n") + "\n";
    if failures.is_empty() {
        deliver(output, &content)
    } else {
        Err(CliError::Verification {
            message: content,
            witness: json!({"command": "gelfand-check", "failures": failures}),
        })
    }
}

/// The six (3+1) kinematical algebras with both invariants.
pub fn table1_text() -> Result<String> {
    let rows = [
        ("Oscillating Newton-Hooke", "newton-hooke-osc", "(+,0,+,+)", "k=1, c=inf"),
        ("Galilei", "galilei", "(0,0,+,+)", "k=0, c=inf"),
        ("Expanding Newton-Hooke", "newton-hooke-exp", "(-,0,+,+)", "k=-1, c=inf"),
        ("Anti-DeSitter", "anti-desitter", "(+,-,+,+)", "k=1, c=1"),
        ("Poincare", "poincare", "(0,-,+,+)", "k=0, c=1"),
        ("DeSitter", "desitter", "(-,-,+,+)", "k=-1, c=1"),
    ];
    let mut out = String::new();
    writeln!(out, "Table: Casimir invariants of so_{{k,-1/c^2,+,+}}(5)").unwrap();
    for (title, name, signature, constants) in rows {
        let entry = registry::resolve(name, 4)?;
        let spec = entry.omega.to_spec();
        writeln!(out).unwrap();
        writeln!(out, "[{title}]  {signature}  {constants}").unwrap();
        for (label, text) in
            render_casimir_set(Format::Text, &entry.omega, &entry.aliases, &spec)?
        {
            writeln!(out, "{label} = {text}").unwrap();
        }
    }
    Ok(out)
}

pub fn cmd_table1(output: &OutputArgs) -> CliResult {
    let content = table1_text().map_err(usage)?;
    deliver(output, &content)
}

pub fn cmd_catalog(output: &OutputArgs) -> CliResult {
    let mut out = String::new();
    for e in registry::catalog() {
        writeln!(
            out,
            "{:<18} n={}  omega=({})  {}",
            e.name,
            e.n,
            omega_label(&e.omega),
            e.description
        )
        .unwrap();
        for alt in &e.alternates {
            let alt_str: Vec<String> = alt.iter().map(|v| v.to_string()).collect();
            writeln!(out, "{:<18} alternate omega=({})", "", alt_str.join(",")).unwrap();
        }
    }
    for (name, what) in [
        ("euclidean", "iso(n), any n"),
        ("carroll", "ii'so(n-1), any n >= 2"),
        ("flag", "so_{0,..,0}(n+1), any n"),
        ("so(p,q)", "p+q = n+1"),
        ("iso(p,q)", "p+q = n"),
    ] {
        writeln!(out, "{name:<18} family: {what}").unwrap();
    }
    deliver(output, &out)
}

/// Runs one parsed invocation; translates errors to exit codes.
pub fn run(cli: Cli) -> i32 {
    let result = match &cli.command {
        Command::Generate { spec, output } => cmd_generate(spec, output),
        Command::Verify { spec, output } => cmd_verify(spec, output),
        Command::Contract { spec, output, set } => cmd_contract(spec, output, set),
        Command::Rank { spec, output, seed } => cmd_rank(spec, output, *seed),
        Command::GelfandCheck { spec, output, seed } => cmd_gelfand_check(spec, output, *seed),
        Command::Table1 { output } => cmd_table1(output),
        Command::Catalog { output } => cmd_catalog(output),
    };
    match result {
        Ok(()) => 0,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(CliError::Verification { message, witness }) => {
            print!("{message}");
            eprintln!("{witness}");
            3
        }
    }
}
