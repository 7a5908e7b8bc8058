//! The `cyclic` command-line front end.
//!
//! Data goes to standard output and errors to standard error as one line
//! `error\t<kind>\t<message>`. Exit codes: 0 success, 1 a checked property
//! failed (the witness is on standard output), 2 invalid input.

use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::crossed::{enumerate_sym, verify_csg_axioms, CrossedOracle, SymMap};
use crate::delta::{count_monotone, enumerate_monotone, interval_dual, interval_dual_inv, EndpointMap, OrdinalMap};
use crate::error::{Error, Result};
use crate::lambda::{canonical_factor, compose_cyclic, count_hom, dual, enumerate_hom, CyclicMap};
use crate::lifting::has_rlp;
use crate::presheaf::{
    boundary_faces, cyclic_horn, representable_cyclic, representable_simplicial, spine, triangulation_object, Arrow,
    FinCyclicSet, FinSimplicialSet, Flavor,
};
use crate::reedy::{classify, latching, matching, verify_generalized_reedy};
use crate::report::AxiomCheck;
use crate::segal::{cyclic_segal_check, segal_check, two_segal_check, two_segal_report, Triangulation};
use crate::suites::{cyclic_suite, simplicial_suite};

#[derive(Debug, Parser)]
#[command(name = "cyclic", version, about = "Exact computations in Δ, ∇, Λ and their finite presheaves")]
pub struct Cli {
    /// Output format for counts and reports.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum HomCat {
    Delta,
    Lambda,
    Sym,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PresheafCat {
    Delta,
    Lambda,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Simplicial,
    Cyclic,
    Crossed,
    Reedy,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count or list a hom-set.
    Hom {
        #[arg(long, value_enum)]
        cat: HomCat,
        #[arg(long)]
        src: usize,
        #[arg(long)]
        tgt: usize,
        #[arg(long, conflicts_with = "list")]
        count: bool,
        #[arg(long)]
        list: bool,
    },
    /// Compose `g ∘ f`; morphisms are inline JSON, a file path, or `-`.
    Compose { g: String, f: String },
    /// Canonical factorization of a morphism.
    Factor { morphism: String },
    /// The self-duality of Λ, or the Δ/∇ duality.
    Dual { morphism: String },
    /// The representable presheaf on `[n]` or `⟨n⟩`.
    Representable {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = PresheafCat::Lambda)]
        cat: PresheafCat,
        #[arg(long)]
        truncation: Option<usize>,
    },
    /// The inclusion `∂Λ[n] → Λ[n]`.
    Boundary {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        truncation: Option<usize>,
    },
    /// The inclusion `Λ[n,k] → Λ[n]`.
    Horn {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        truncation: Option<usize>,
    },
    /// The spine `Γ(n) → Λ[n]`.
    Spine {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        truncation: Option<usize>,
    },
    /// The subobject of `Δ[n]` or `Λ[n]` generated by a triangulation.
    Triangulate {
        /// Triangles as `a,b,c;a,b,c;…`.
        #[arg(long)]
        triangles: String,
        #[arg(long, value_enum, default_value_t = PresheafCat::Lambda)]
        cat: PresheafCat,
        #[arg(long, default_value_t = 3)]
        truncation: usize,
    },
    /// Segal maps of a simplicial set, or both Segal routes for a cyclic set.
    SegalCheck {
        #[arg(long)]
        input: String,
        #[arg(long)]
        max_n: usize,
    },
    /// 2-Segal maps for one triangulation or all of them up to `--max-n`.
    TwoSegalCheck {
        #[arg(long)]
        input: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        triangles: Option<String>,
    },
    /// The latching object `L_n X` with its cyclic action.
    Latching {
        #[arg(long)]
        input: String,
        #[arg(long)]
        n: usize,
    },
    /// The matching object `M_n X` with its cyclic action.
    Matching {
        #[arg(long)]
        input: String,
        #[arg(long)]
        n: usize,
    },
    /// Whether `p` has the right lifting property against `i`.
    Rlp {
        #[arg(long)]
        i: String,
        #[arg(long)]
        p: String,
    },
    /// Run an identity suite up to a degree bound.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
}

/// What a subcommand produced.
struct Outcome {
    json: Value,
    tsv: Option<Vec<String>>,
    ok: bool,
}

impl Outcome {
    fn data(value: impl Serialize) -> Result<Self> {
        Ok(Outcome { json: to_json(&value)?, tsv: None, ok: true })
    }

    fn report(value: impl Serialize, rows: Vec<String>, ok: bool) -> Result<Self> {
        Ok(Outcome { json: to_json(&value)?, tsv: Some(rows), ok })
    }
}

fn to_json(value: &impl Serialize) -> Result<Value> {
    Ok(serde_json::to_value(value)?)
}

enum Morphism {
    Delta(OrdinalMap),
    Nabla(EndpointMap),
    Lambda(CyclicMap),
    Sym(SymMap),
}

fn read_input(arg: &str) -> Result<String> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(arg.to_string());
    }
    if arg == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map_err(|e| Error::Parse(format!("stdin: {e}")))?;
        return Ok(text);
    }
    std::fs::read_to_string(arg).map_err(|e| Error::Parse(format!("cannot read {arg}: {e}")))
}

fn parse_morphism(arg: &str) -> Result<Morphism> {
    let value: Value = serde_json::from_str(&read_input(arg)?)?;
    let cat = value.get("cat").and_then(Value::as_str).unwrap_or_default().to_string();
    Ok(match cat.as_str() {
        "delta" => Morphism::Delta(serde_json::from_value(value)?),
        "nabla" => Morphism::Nabla(serde_json::from_value(value)?),
        "lambda" => Morphism::Lambda(serde_json::from_value(value)?),
        "sym" => Morphism::Sym(serde_json::from_value(value)?),
        other => return Err(Error::Parse(format!("unknown morphism category {other:?}"))),
    })
}

enum AnyPresheaf {
    Simplicial(FinSimplicialSet),
    Cyclic(FinCyclicSet),
}

fn parse_presheaf(arg: &str) -> Result<AnyPresheaf> {
    let value: Value = serde_json::from_str(&read_input(arg)?)?;
    match value.get("kind").and_then(Value::as_str) {
        Some("cyclic-set") => Ok(AnyPresheaf::Cyclic(serde_json::from_value(value)?)),
        Some("simplicial-set") => Ok(AnyPresheaf::Simplicial(serde_json::from_value(value)?)),
        _ => Err(Error::Parse("expected kind \"cyclic-set\" or \"simplicial-set\"".into())),
    }
}

fn parse_cyclic(arg: &str) -> Result<FinCyclicSet> {
    match parse_presheaf(arg)? {
        AnyPresheaf::Cyclic(x) => Ok(x),
        AnyPresheaf::Simplicial(_) => Err(Error::Parse("expected a cyclic set".into())),
    }
}

fn parse_simplicial(arg: &str) -> Result<FinSimplicialSet> {
    match parse_presheaf(arg)? {
        AnyPresheaf::Simplicial(x) => Ok(x),
        AnyPresheaf::Cyclic(x) => Ok(x.underlying_simplicial()),
    }
}

fn parse_arrow(arg: &str) -> Result<Arrow<FinCyclicSet>> {
    let raw: Arrow<FinCyclicSet> = serde_json::from_str(&read_input(arg)?)?;
    Arrow::new(raw.source, raw.target, raw.map)
}

fn compose(g: Morphism, f: Morphism) -> Result<Outcome> {
    match (g, f) {
        (Morphism::Delta(g), Morphism::Delta(f)) => Outcome::data(crate::delta::compose_ordinal(&g, &f)?),
        (Morphism::Nabla(g), Morphism::Nabla(f)) => Outcome::data(g.compose(&f)?),
        (Morphism::Lambda(g), Morphism::Lambda(f)) => Outcome::data(compose_cyclic(&g, &f)?),
        (Morphism::Sym(g), Morphism::Sym(f)) => Outcome::data(crate::crossed::compose_sym(&g, &f)?),
        _ => Err(Error::Parse("morphisms belong to different categories".into())),
    }
}

fn factor(m: Morphism) -> Result<Outcome> {
    match m {
        Morphism::Lambda(phi) => Outcome::data(canonical_factor(&phi)),
        Morphism::Delta(f) => {
            let (epi, mono) = f.epi_mono();
            Outcome::data(json!({ "epi": epi, "mono": mono }))
        }
        Morphism::Sym(f) => {
            let (delta, automorphism) = f.canonical_factor();
            Outcome::data(json!({ "delta": delta, "automorphism": automorphism }))
        }
        Morphism::Nabla(_) => Err(Error::Parse("factor is defined for delta, lambda and sym morphisms".into())),
    }
}

fn dualize(m: Morphism) -> Result<Outcome> {
    match m {
        Morphism::Lambda(phi) => Outcome::data(dual(&phi)),
        Morphism::Delta(f) => Outcome::data(interval_dual(&f)),
        Morphism::Nabla(g) => Outcome::data(interval_dual_inv(&g)),
        Morphism::Sym(_) => Err(Error::Parse("dual is defined for delta, nabla and lambda morphisms".into())),
    }
}

fn hom(cat: HomCat, src: usize, tgt: usize, list: bool) -> Result<Outcome> {
    let name = match cat {
        HomCat::Delta => "delta",
        HomCat::Lambda => "lambda",
        HomCat::Sym => "sym",
    };
    if list {
        return match cat {
            HomCat::Delta => Outcome::data(enumerate_monotone(src, tgt)?),
            HomCat::Lambda => Outcome::data(enumerate_hom(src, tgt)?),
            HomCat::Sym => Outcome::data(enumerate_sym(src, tgt)?),
        };
    }
    let count = match cat {
        HomCat::Delta => count_monotone(src, tgt),
        HomCat::Lambda => count_hom(src, tgt),
        HomCat::Sym => enumerate_sym(src, tgt)?.len() as u128,
    };
    // u128 does not fit a JSON number in general; counts at feasible sizes do.
    let value = u64::try_from(count).map(Value::from).unwrap_or_else(|_| Value::String(count.to_string()));
    Ok(Outcome { json: value, tsv: Some(vec![format!("{name}\t{src}\t{tgt}\t{count}")]), ok: true })
}

fn check_rows(prefix: &str, checks: &[AxiomCheck]) -> Vec<String> {
    checks.iter().map(|c| format!("{prefix}{}\t{}\t{}", c.axiom, c.pass, c.checked)).collect()
}

fn verify(suite: Suite, max_degree: usize) -> Result<Outcome> {
    match suite {
        Suite::Simplicial => {
            let report = simplicial_suite(max_degree)?;
            let rows = check_rows("", &report.checks);
            Outcome::report(&report, rows, report.pass)
        }
        Suite::Cyclic => {
            let report = cyclic_suite(max_degree)?;
            let rows = check_rows("", &report.checks);
            Outcome::report(&report, rows, report.pass)
        }
        Suite::Reedy => {
            let report = verify_generalized_reedy(max_degree, &classify)?;
            let rows = check_rows("", &report.axioms);
            Outcome::report(&report, rows, report.pass)
        }
        Suite::Crossed => {
            let lambda = verify_csg_axioms(&CrossedOracle::lambda(), max_degree)?;
            let sym = verify_csg_axioms(&CrossedOracle::symmetric(), max_degree)?;
            let delta = verify_csg_axioms(&CrossedOracle::delta(), max_degree)?;
            let reports = [lambda, sym, delta];
            let mut rows = Vec::new();
            for r in &reports {
                rows.extend(check_rows(&format!("{}\t", r.oracle), &r.laws));
                rows.extend(
                    r.factorization
                        .iter()
                        .map(|p| format!("{}\tfactorization {},{}\t{}\t{}", r.oracle, p.n, p.m, p.pass, p.morphisms)),
                );
            }
            let pass = reports.iter().all(|r| r.pass);
            Outcome::report(
                json!({ "suite": "crossed", "max_degree": max_degree, "reports": reports, "pass": pass }),
                rows,
                pass,
            )
        }
    }
}

fn witness_cell(value: &impl Serialize) -> String {
    serde_json::to_string(value).unwrap_or_default()
}

fn segal(input: &str, max_n: usize) -> Result<Outcome> {
    match parse_presheaf(input)? {
        AnyPresheaf::Simplicial(x) => {
            let verdicts = (2..=max_n).map(|n| segal_check(&x, n)).collect::<Result<Vec<_>>>()?;
            let pass = verdicts.iter().all(|v| v.is_bijective());
            let rows = verdicts
                .iter()
                .map(|v| {
                    format!("{}\t{}\t{}", v.n, witness_cell(&v.verdict).trim_matches('"'), witness_cell(&v.witness))
                })
                .collect();
            Outcome::report(json!({ "max_n": max_n, "verdicts": verdicts, "pass": pass }), rows, pass)
        }
        AnyPresheaf::Cyclic(x) => {
            let report = cyclic_segal_check(&x, max_n)?;
            let rows = report
                .levels
                .iter()
                .map(|l| {
                    format!(
                        "{}\t{}\t{}\t{}\t{}",
                        l.n,
                        witness_cell(&l.segal.verdict).trim_matches('"'),
                        l.restriction_bijective,
                        l.agree,
                        witness_cell(&l.segal.witness)
                    )
                })
                .collect();
            Outcome::report(&report, rows, report.pass)
        }
    }
}

fn two_segal(input: &str, max_n: Option<usize>, triangles: Option<&str>) -> Result<Outcome> {
    let x = parse_simplicial(input)?;
    let verdicts = match (max_n, triangles) {
        (_, Some(text)) => vec![two_segal_check(&x, &Triangulation::parse(text)?)?],
        (Some(max_n), None) => two_segal_report(&x, max_n)?.verdicts,
        (None, None) => return Err(Error::Parse("two-segal-check needs --max-n or --triangles".into())),
    };
    let pass = verdicts.iter().all(|v| v.is_bijective());
    let rows = verdicts
        .iter()
        .map(|v| {
            let tri = v.triangulation.as_deref().unwrap_or_default();
            let tri = tri.iter().map(|t| format!("{},{},{}", t[0], t[1], t[2])).collect::<Vec<_>>().join(";");
            format!("{}\t{}\t{}\t{}", v.n, tri, witness_cell(&v.verdict).trim_matches('"'), witness_cell(&v.witness))
        })
        .collect();
    Outcome::report(json!({ "max_n": max_n, "verdicts": verdicts, "pass": pass }), rows, pass)
}

fn truncation_or(truncation: Option<usize>, n: usize) -> usize {
    truncation.unwrap_or(n + 1)
}

fn dispatch(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Hom { cat, src, tgt, count: _, list } => hom(cat, src, tgt, list),
        Command::Compose { g, f } => compose(parse_morphism(&g)?, parse_morphism(&f)?),
        Command::Factor { morphism } => factor(parse_morphism(&morphism)?),
        Command::Dual { morphism } => dualize(parse_morphism(&morphism)?),
        Command::Representable { n, cat, truncation } => {
            let top = truncation_or(truncation, n);
            match cat {
                PresheafCat::Lambda => Outcome::data(representable_cyclic(n, top)?),
                PresheafCat::Delta => Outcome::data(representable_simplicial(n, top)?),
            }
        }
        Command::Boundary { n, truncation } => Outcome::data(boundary_faces(n, truncation_or(truncation, n))?),
        Command::Horn { n, k, truncation } => Outcome::data(cyclic_horn(n, k, truncation_or(truncation, n))?),
        Command::Spine { n, truncation } => Outcome::data(spine(n, truncation_or(truncation, n))?),
        Command::Triangulate { triangles, cat, truncation } => {
            let t = Triangulation::parse(&triangles)?;
            let flavor = match cat {
                PresheafCat::Lambda => Flavor::Cyclic,
                PresheafCat::Delta => Flavor::Simplicial,
            };
            Outcome::data(triangulation_object(&t, flavor, truncation)?)
        }
        Command::SegalCheck { input, max_n } => segal(&input, max_n),
        Command::TwoSegalCheck { input, max_n, triangles } => two_segal(&input, max_n, triangles.as_deref()),
        Command::Latching { input, n } => Outcome::data(latching(&parse_cyclic(&input)?, n)?),
        Command::Matching { input, n } => Outcome::data(matching(&parse_cyclic(&input)?, n)?),
        Command::Rlp { i, p } => {
            let verdict = has_rlp(&parse_arrow(&p)?, &parse_arrow(&i)?)?;
            let rows = vec![format!("{}\t{}", verdict.holds, verdict.squares)];
            let ok = verdict.holds;
            Outcome::report(&verdict, rows, ok)
        }
        Command::Verify { suite, max_degree } => verify(suite, max_degree),
    }
}

fn error_line(err: &mut dyn Write, kind: &str, message: &str) {
    let message = message.replace(['\n', '\t'], " ");
    let _ = writeln!(err, "error\t{kind}\t{}", message.trim());
}

/// Runs the tool on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let rendered = e.render().to_string();
            let first = rendered.lines().next().unwrap_or("invalid arguments");
            error_line(err, "usage", first.trim_start_matches("error: "));
            return 2;
        }
    };
    let format = cli.format;
    let outcome = match dispatch(cli) {
        Ok(outcome) => outcome,
        Err(e) => {
            error_line(err, e.kind(), &e.to_string());
            return 2;
        }
    };
    let written = match (format, &outcome.tsv) {
        (Format::Json, _) => writeln!(out, "{}", outcome.json),
        (Format::Tsv, Some(rows)) => rows.iter().try_for_each(|row| writeln!(out, "{row}")),
        (Format::Tsv, None) => {
            error_line(err, "unsupported-format", "tsv output is available for counts and reports only");
            return 2;
        }
    };
    match written {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => return 0,
        Err(e) => {
            error_line(err, "io", &e.to_string());
            return 2;
        }
        Ok(()) => {}
    }
    if outcome.ok {
        0
    } else {
        1
    }
}
