//! Command-line front end for `supercohom`.
//!
//! Every subcommand prints one JSON report on stdout (or an aligned table
//! with `--format table`). Exit codes: 0 success, 1 a validation or
//! consistency check failed, 2 usage error or malformed input.

pub mod cocycle;
pub mod document;
pub mod report;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use supercohom::families::{self, FamilyKind};
use supercohom::{
    extension_catalog, CochainComplex, RestrictedComplex, RestrictedSuperalgebra, SplitKind, SuperDim,
};

use document::AlgebraDocument;
use report::{CohomologyView, Provenance};

#[derive(Parser, Debug)]
#[command(name = "supercohom", version, about = "Cohomology of restricted Lie superalgebras over F_p")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the superalgebra axioms and the [p]-operator axioms.
    Validate(Source),
    /// Ordinary cohomology H^1 or H^2.
    Cohomology {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(1..=2))]
        degree: u8,
    },
    /// Restricted cohomology H^1_res and H^2_res.
    ResCohomology(Source),
    /// Verify the six-term exact sequence.
    Sixterm(Source),
    /// Build the central extension of an even restricted cocycle.
    Extend {
        #[command(flatten)]
        source: Source,
        /// `x^{1,2}`, `x1^y2`, `frob:3`, `coords:...`, or a `+`-sum of terms.
        #[arg(long)]
        cocycle: String,
    },
    /// Named extensions of a family member.
    Catalog(Source),
    /// Print a family member as an algebra document.
    Family(FamilyArgs),
    /// Check the closed-form H^2_res dimensions over a parameter grid.
    Sweep(SweepArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    HeisenbergEven,
    HeisenbergOdd,
}

#[derive(Args, Debug, Clone)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    pub family: Option<FamilyName>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub p: Option<u32>,
    /// Comma-separated residues, or `random` (seeded by `--seed`).
    #[arg(long)]
    pub lambda: Option<String>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args, Debug, Clone)]
pub struct Source {
    /// Algebra document (JSON); alternatively use `--family`.
    pub input: Option<PathBuf>,
    #[command(flatten)]
    pub family: FamilyArgs,
}

#[derive(Args, Debug, Clone)]
pub struct SweepArgs {
    #[arg(long, value_enum, default_value_t = FamilyName::HeisenbergEven)]
    pub family: FamilyName,
    /// Comma-separated values of m (even-centre family only).
    #[arg(long, default_value = "1,2")]
    pub m: String,
    /// Comma-separated values of n.
    #[arg(long)]
    pub n: Option<String>,
    #[arg(long, default_value = "3,5,7")]
    pub p: String,
    /// Seed of the pseudorandom lambda in each cell.
    #[arg(long, default_value_t = 2024)]
    pub seed: u64,
    /// Worker threads; cells are independent.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

/// Exit code and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Check(Value),
}

type Step = Result<Value, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let render = |v: &Value| match cli.format {
        Format::Json => report::to_json(v),
        Format::Table => report::to_table(v),
    };
    match dispatch(&cli.command) {
        Ok(v) => Outcome { code: 0, stdout: render(&v), stderr: String::new() },
        Err(Failure::Check(v)) => Outcome { code: 1, stdout: render(&v), stderr: String::new() },
        Err(Failure::Usage(msg)) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}

fn dispatch(command: &Command) -> Step {
    match command {
        Command::Validate(src) => validate(&load(src)?),
        Command::Cohomology { source, degree } => cohomology(&load(source)?, *degree),
        Command::ResCohomology(src) => res_cohomology(&load(src)?),
        Command::Sixterm(src) => sixterm(&load(src)?),
        Command::Extend { source, cocycle } => extend(&load(source)?, cocycle),
        Command::Catalog(src) => catalog(&load(src)?),
        Command::Family(args) => {
            let r = build_family(args)?.ok_or_else(|| usage("`family` needs --family"))?;
            let doc = AlgebraDocument::from_restricted(&r);
            let text = doc.to_canonical_json().map_err(|e| usage(e.to_string()))?;
            Ok(serde_json::from_str(&text).expect("own output"))
        }
        Command::Sweep(args) => sweep(args),
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("plain data")
}

fn parse_list<T: std::str::FromStr>(what: &str, s: &str) -> Result<Vec<T>, Failure> {
    s.split(',')
        .map(|x| x.trim().parse::<T>().map_err(|_| usage(format!("bad value `{x}` in --{what}"))))
        .collect()
}

fn build_family(args: &FamilyArgs) -> Result<Option<RestrictedSuperalgebra>, Failure> {
    let Some(name) = args.family else {
        if args.m.is_some() || args.n.is_some() || args.lambda.is_some() {
            return Err(usage("--m/--n/--lambda need --family"));
        }
        return Ok(None);
    };
    let p = args.p.ok_or_else(|| usage("--family needs --p"))?;
    let n = args.n.ok_or_else(|| usage("--family needs --n"))?;
    let built = match name {
        FamilyName::HeisenbergEven => {
            let m = args.m.ok_or_else(|| usage("heisenberg-even needs --m"))?;
            let len = 2 * m + 1;
            let lambda = match args.lambda.as_deref() {
                None => vec![0; len],
                Some("random") => families::seeded_lambda(len, p, args.seed),
                Some(list) => parse_list::<i64>("lambda", list)?
                    .into_iter()
                    .map(|v| v.rem_euclid(i64::from(p.max(1))) as u32)
                    .collect(),
            };
            families::heisenberg_even(m, n, p, &lambda)
        }
        FamilyName::HeisenbergOdd => {
            if args.m.is_some() || args.lambda.is_some() {
                return Err(usage("heisenberg-odd takes only --n and --p"));
            }
            families::heisenberg_odd(n, p)
        }
    };
    built.map(Some).map_err(|e| usage(e.to_string()))
}

fn load(src: &Source) -> Result<RestrictedSuperalgebra, Failure> {
    let fam = build_family(&src.family)?;
    match (&src.input, fam) {
        (Some(_), Some(_)) => Err(usage("give either a document or --family, not both")),
        (None, None) => Err(usage("no algebra given: pass a document path or --family")),
        (None, Some(r)) => Ok(r),
        (Some(path), None) => {
            let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            let doc = AlgebraDocument::parse(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            doc.to_restricted().map_err(|e| usage(format!("{}: {e}", path.display())))
        }
    }
}

fn algebra_summary(r: &RestrictedSuperalgebra) -> Value {
    let a = r.algebra();
    let mut v = json!({
        "p": a.field().characteristic(),
        "sdim": SuperDim::new(a.even_dim(), a.odd_dim()),
    });
    if let Some(kind) = families::recognize_family(r) {
        v["family"] = to_value(&kind);
    }
    v
}

fn validate(r: &RestrictedSuperalgebra) -> Step {
    let sup = r.algebra().validate();
    let res = r.validate();
    let passed = sup.all_passed() && res.all_passed();
    let v = json!({
        "command": "validate",
        "algebra": algebra_summary(r),
        "superalgebra": sup,
        "restricted": res,
        "passed": passed,
    });
    if passed {
        Ok(v)
    } else {
        Err(Failure::Check(v))
    }
}

/// Refuses to compute cohomology of something that is not a restricted
/// Lie superalgebra.
fn require_valid(r: &RestrictedSuperalgebra) -> Result<(), Failure> {
    match validate(r) {
        Ok(_) => Ok(()),
        Err(Failure::Check(mut v)) => {
            v["error"] = json!("input is not a restricted Lie superalgebra");
            Err(Failure::Check(v))
        }
        Err(e) => Err(e),
    }
}

enum Quantity {
    H1,
    H2,
    H2Res,
}

fn closed_form(kind: &FamilyKind, q: Quantity) -> (String, SuperDim) {
    match (kind, q) {
        (FamilyKind::HeisenbergEven { m, n, .. }, Quantity::H1) => (
            "sdim H^1(h_{m,n}) = sdim H^1_res(h^lambda_{m,n}) = (2m, n)".into(),
            families::expected_sdim_h1_even_family(*m, *n),
        ),
        (FamilyKind::HeisenbergEven { m, n, .. }, Quantity::H2) => (
            "sdim H^2(h_{m,n}) = (2m^2-m+(n^2+n)/2-1, 2mn)".into(),
            families::expected_sdim_h2_even_family(*m, *n),
        ),
        (FamilyKind::HeisenbergEven { m, n, .. }, Quantity::H2Res) => (
            "sdim H^2_res(h^lambda_{m,n}) = (2m^2+m+(n^2+n)/2, 2mn) for every lambda".into(),
            families::expected_sdim_h2res_even_family(*m, *n),
        ),
        (FamilyKind::HeisenbergOdd { n }, Quantity::H1) => (
            "sdim H^1(ba_n) = sdim H^1_res(ba_n) = (n, n)".into(),
            families::expected_sdim_h1_odd_family(*n),
        ),
        (FamilyKind::HeisenbergOdd { n }, Quantity::H2) => (
            "sdim H^2(ba_n) = (n^2, n^2-1+delta_{1,n})".into(),
            families::expected_sdim_h2_odd_family(*n),
        ),
        (FamilyKind::HeisenbergOdd { n }, Quantity::H2Res) => (
            "sdim H^2_res(ba_n) = (n^2+n, n^2-1+delta_{1,n})".into(),
            families::expected_sdim_h2res_odd_family(*n),
        ),
    }
}

fn provenance(r: &RestrictedSuperalgebra, q: Quantity, computed: SuperDim) -> Option<Provenance> {
    let kind = families::recognize_family(r)?;
    let (claim, expected) = closed_form(&kind, q);
    Some(Provenance::new(claim, expected, computed))
}

fn with_provenance(mut v: Value, entries: Vec<Option<Provenance>>) -> Step {
    let entries: Vec<Provenance> = entries.into_iter().flatten().collect();
    let ok = entries.iter().all(|p| p.matches);
    if !entries.is_empty() {
        v["provenance"] = to_value(&entries);
    }
    if ok {
        Ok(v)
    } else {
        Err(Failure::Check(v))
    }
}

fn cohomology(r: &RestrictedSuperalgebra, degree: u8) -> Step {
    require_valid(r)?;
    let c = CochainComplex::new(r.algebra());
    let rep = c.cohomology(degree);
    let q = if degree == 1 { Quantity::H1 } else { Quantity::H2 };
    let v = json!({
        "command": "cohomology",
        "algebra": algebra_summary(r),
        "cohomology": CohomologyView::from(&rep),
    });
    with_provenance(v, vec![provenance(r, q, rep.sdim)])
}

fn res_cohomology(r: &RestrictedSuperalgebra) -> Step {
    require_valid(r)?;
    let rc = RestrictedComplex::new(r);
    let h1 = rc.h1_res();
    let h2 = rc.h2_res();
    let v = json!({
        "command": "res-cohomology",
        "algebra": algebra_summary(r),
        "h1_res": CohomologyView::from(&h1),
        "h2_res": CohomologyView::from(&h2),
    });
    with_provenance(
        v,
        vec![provenance(r, Quantity::H1, h1.sdim), provenance(r, Quantity::H2Res, h2.sdim)],
    )
}

fn sixterm(r: &RestrictedSuperalgebra) -> Step {
    require_valid(r)?;
    let rc = RestrictedComplex::new(r);
    match rc.sixterm_verify() {
        Ok(rep) => {
            let v = json!({
                "command": "sixterm",
                "algebra": algebra_summary(r),
                "dims": rep.dims,
                "ranks": rep.ranks,
                "iota1_injective": rep.iota1_injective,
                "exact_at": {
                    "h1": rep.exact_at_h1,
                    "hom_fr": rep.exact_at_hom_fr,
                    "h2_res": rep.exact_at_h2_res,
                    "h2": rep.exact_at_h2,
                },
                "exact": rep.exact(),
                "d_is_zero": rep.d_is_zero(),
                "h_is_zero": rep.h_is_zero(),
            });
            if rep.exact() {
                Ok(v)
            } else {
                Err(Failure::Check(v))
            }
        }
        Err(e) => Err(Failure::Check(json!({
            "command": "sixterm",
            "algebra": algebra_summary(r),
            "error": e.to_string(),
        }))),
    }
}

fn extend(r: &RestrictedSuperalgebra, spec: &str) -> Step {
    require_valid(r)?;
    let rc = RestrictedComplex::new(r);
    let z = cocycle::parse(&rc, spec).map_err(|e| usage(format!("--cocycle: {e}")))?;
    let names = rc.c2_res_names();
    let expression = supercohom::cochain::expression(rc.field(), &z.to_coords(), &names);
    match supercohom::central_extension(r, &z) {
        Ok(ext) => {
            let split = supercohom::extensions::is_split_ordinary(rc.ordinary(), &z.phi)
                .expect("restricted cocycles are ordinary cocycles");
            let doc = AlgebraDocument::from_restricted(&ext.extended);
            let validates = ext.validates();
            let center_ok = ext.center_ok();
            let v = json!({
                "command": "extend",
                "cocycle": expression,
                "kind": if split { SplitKind::Split } else { SplitKind::NonSplit },
                "center": ext.extended.algebra().basis().label(ext.center),
                "validates": validates,
                "center_ok": center_ok,
                "extension": serde_json::from_str::<Value>(&doc.to_canonical_json().expect("valid")).expect("json"),
            });
            if validates && center_ok {
                Ok(v)
            } else {
                Err(Failure::Check(v))
            }
        }
        Err(e) => {
            let mut v = json!({
                "command": "extend",
                "cocycle": expression,
                "error": e.to_string(),
            });
            if let supercohom::ExtensionError::NotACocycle(violation) = &e {
                v["violation"] = to_value(violation);
            }
            Err(Failure::Check(v))
        }
    }
}

fn catalog(r: &RestrictedSuperalgebra) -> Step {
    require_valid(r)?;
    let kind = families::recognize_family(r)
        .ok_or_else(|| usage("catalogs exist only for the two Heisenberg families (canonical basis order)"))?;
    let entries = extension_catalog(r).map_err(|e| usage(e.to_string()))?;
    let rc = RestrictedComplex::new(r);
    let names = rc.c2_res_names();
    let (expected_split, expected_non_split) = match kind {
        FamilyKind::HeisenbergEven { m, n, .. } => (2 * m + 1, 2 * m * m - m + (n * n + n) / 2 - 1),
        FamilyKind::HeisenbergOdd { n } => (n, n * n),
    };
    let split = entries.iter().filter(|e| e.kind == SplitKind::Split).count();
    let non_split = entries.len() - split;
    let mut all_ok = true;
    let listed: Vec<Value> = entries
        .iter()
        .map(|e| {
            let validates = e.extension.validates();
            let center_ok = e.extension.center_ok();
            all_ok &= validates && center_ok;
            json!({
                "name": e.name,
                "kind": e.kind,
                "cocycle": supercohom::cochain::expression(rc.field(), &e.extension.cocycle.to_coords(), &names),
                "validates": validates,
                "center_ok": center_ok,
            })
        })
        .collect();
    let cocycles: Vec<_> = entries.iter().map(|e| e.extension.cocycle.clone()).collect();
    let mut inequivalent = true;
    for i in 0..cocycles.len() {
        for j in i + 1..cocycles.len() {
            if supercohom::extensions::cocycles_equivalent(&rc, &cocycles[i], &cocycles[j]).expect("catalog cocycles") {
                inequivalent = false;
            }
        }
    }
    let counts_match = split == expected_split && non_split == expected_non_split;
    let v = json!({
        "command": "catalog",
        "algebra": algebra_summary(r),
        "extensions": listed,
        "pairwise_inequivalent": inequivalent,
        "provenance": {
            "claim": "split / non-split counts: 2m+1 and 2m^2-m+(n^2+n)/2-1 for h^lambda_{m,n}; n and n^2 for ba_n",
            "expected": {"split": expected_split, "non_split": expected_non_split},
            "computed": {"split": split, "non_split": non_split},
            "match": counts_match,
        },
    });
    if all_ok && inequivalent && counts_match {
        Ok(v)
    } else {
        Err(Failure::Check(v))
    }
}

struct Cell {
    m: Option<usize>,
    n: usize,
    p: u32,
    lambda: Option<(String, Vec<u32>)>,
}

fn sweep(args: &SweepArgs) -> Step {
    let ns: Vec<usize> = match (&args.n, args.family) {
        (Some(s), _) => parse_list("n", s)?,
        (None, FamilyName::HeisenbergEven) => vec![1, 2, 3],
        (None, FamilyName::HeisenbergOdd) => vec![1, 2, 3, 4],
    };
    let ps: Vec<u32> = parse_list("p", &args.p)?;
    let mut cells = Vec::new();
    match args.family {
        FamilyName::HeisenbergEven => {
            for m in parse_list::<usize>("m", &args.m)? {
                for &n in &ns {
                    for &p in &ps {
                        for lam in families::lambda_panel(m, p, args.seed) {
                            cells.push(Cell { m: Some(m), n, p, lambda: Some(lam) });
                        }
                    }
                }
            }
        }
        FamilyName::HeisenbergOdd => {
            for &n in &ns {
                for &p in &ps {
                    cells.push(Cell { m: None, n, p, lambda: None });
                }
            }
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs.max(1))
        .build()
        .map_err(|e| usage(e.to_string()))?;
    let results: Vec<Result<Value, String>> = pool.install(|| cells.par_iter().map(sweep_cell).collect());
    let results = results.into_iter().collect::<Result<Vec<_>, _>>().map_err(usage)?;
    let all_match = results.iter().all(|v| v["match"] == json!(true));
    let v = json!({
        "command": "sweep",
        "cells": results,
        "all_match": all_match,
    });
    if all_match {
        Ok(v)
    } else {
        Err(Failure::Check(v))
    }
}

fn sweep_cell(cell: &Cell) -> Result<Value, String> {
    let r = match (cell.m, &cell.lambda) {
        (Some(m), Some((_, lam))) => families::heisenberg_even(m, cell.n, cell.p, lam),
        _ => families::heisenberg_odd(cell.n, cell.p),
    }
    .map_err(|e| e.to_string())?;
    let computed = RestrictedComplex::new(&r).h2_res().sdim;
    let expected = match cell.m {
        Some(m) => families::expected_sdim_h2res_even_family(m, cell.n),
        None => families::expected_sdim_h2res_odd_family(cell.n),
    };
    let mut v = json!({
        "n": cell.n,
        "p": cell.p,
        "h2_res": computed,
        "expected": expected,
        "match": computed == expected,
    });
    if let (Some(m), Some((name, lam))) = (cell.m, &cell.lambda) {
        v["m"] = json!(m);
        v["lambda"] = json!({"name": name, "value": lam});
    }
    Ok(v)
}
