//! `gradcon`: build the graded algebras, contract them, enumerate nice sets
//! and re-run the classification checks.
//!
//! Exit codes: 0 success, 1 verification failure or rejected input, 2 usage
//! or parse error.

mod suites;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use gradcon::contraction::{
    check_admissible, check_general, classify, contract, find_normalization, make_normal_form, AdmissibleMap,
    EpsilonMap, NormalForm,
};
use gradcon::exactnum::{Field, Scalar};
use gradcon::fano::{all_collineations, Edge, EdgeSet, FanoIndex};
use gradcon::invariants::StructureReport;
use gradcon::liealg::{build_algebra, check_good_grading, realize_collineation, AlgebraKind};
use gradcon::nicesets::NiceCensus;
use rayon::prelude::*;
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "gradcon", version, about = "Graded contractions of g2, b3 and d4 over Z2^3")]
struct Cli {
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the good-grading axioms and lift all 168 collineations.
    VerifyGradings {
        /// Contract this edge to zero before checking (fault injection).
        #[arg(long, value_name = "EDGE")]
        drop_edge: Option<String>,
    },
    /// Enumerate the nice sets and write the orbit census.
    Census {
        #[arg(long)]
        out: PathBuf,
    },
    /// Contract an algebra and report its structure and class.
    Contract {
        #[arg(long, default_value = "b3")]
        algebra: AlgebraKind,
        #[arg(long, default_value = "C")]
        field: Field,
        /// JSON file holding an ε map.
        #[arg(long, conflicts_with_all = ["support", "family"])]
        epsilon: Option<PathBuf>,
        /// Comma-separated edge list; builds ε^T.
        #[arg(long, conflicts_with = "family")]
        support: Option<String>,
        /// Normal form `eta:λ`, `mu:λ` or `beta:λ,λ′`, optionally `@i,j,k` (default `@1,2,3`).
        #[arg(long)]
        family: Option<String>,
    },
    /// Re-run the classification checks.
    VerifyPaper {
        #[arg(long, value_enum, default_value = "all")]
        scope: suites::Scope,
        /// Sample count for randomized checks.
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
}

enum CliError {
    Usage(String),
    Failure(String),
}

type CliResult = Result<Value, CliError>;

fn usage<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Usage(e.to_string())
}

fn parse_family(spec: &str) -> Result<NormalForm, CliError> {
    let (tag, rest) = spec.split_once(':').ok_or_else(|| usage(format!("family `{spec}` must look like TAG:PARAMS")))?;
    let (params, indices) = match rest.split_once('@') {
        Some((p, i)) => (p, i),
        None => (rest, "1,2,3"),
    };
    let params: Vec<Scalar> = params.split(',').map(|s| s.trim().parse::<Scalar>()).collect::<Result<_, _>>().map_err(usage)?;
    let idx: Vec<FanoIndex> = indices
        .split(',')
        .map(|s| s.trim().parse::<u8>().map_err(usage).and_then(|n| FanoIndex::new(n).map_err(usage)))
        .collect::<Result<_, _>>()?;
    let [i, j, k]: [FanoIndex; 3] = idx.try_into().map_err(|_| usage("family indices must be i,j,k"))?;
    let arity = |n: usize| {
        if params.len() == n {
            Ok(())
        } else {
            Err(usage(format!("family `{tag}` takes {n} parameter(s)")))
        }
    };
    match tag {
        "eta" => arity(1).map(|_| NormalForm::eta(params[0].clone(), i, j, k)),
        "mu" => arity(1).map(|_| NormalForm::mu(params[0].clone(), i, j, k)),
        "beta" => arity(2).map(|_| NormalForm::beta(params[0].clone(), params[1].clone(), i, j, k)),
        other => Err(usage(format!("unknown family `{other}` (expected eta, mu or beta)"))),
    }
}

fn verify_gradings(drop_edge: Option<String>) -> CliResult {
    let dropped: Option<Edge> = drop_edge.map(|e| e.parse()).transpose().map_err(usage)?;
    let mut reports = Vec::new();
    let mut passes = true;
    for kind in AlgebraKind::ALL {
        let mut alg = build_algebra(kind, Field::Complex).map_err(|e| CliError::Failure(e.to_string()))?;
        if let Some(e) = dropped {
            alg = alg.rescaled(|i, j| {
                let zero = i != j && Edge::new(i, j).is_ok_and(|x| x == e);
                Scalar::from(if zero { 0 } else { 1 })
            });
        }
        let grading = check_good_grading(&alg);
        let realized = all_collineations()
            .par_iter()
            .filter(|s| realize_collineation(&alg, s).is_ok_and(|f| f.is_graded(&alg) && f.is_isomorphism(&alg, &alg)))
            .count();
        passes &= grading.passes && realized == 168;
        let report = json!({"grading": grading, "collineations_realized": realized});
        for pair in report["grading"]["failing_pairs"].as_array().into_iter().flatten() {
            eprintln!("{kind}: grading fails at pair {pair}");
        }
        reports.push(report);
    }
    let out = json!({"passes": passes, "algebras": reports});
    if passes {
        Ok(out)
    } else {
        Err(CliError::Failure(serde_json::to_string_pretty(&out).expect("json")))
    }
}

fn census(out: PathBuf) -> CliResult {
    let c = NiceCensus::compute();
    std::fs::write(&out, c.to_json() + "\n").map_err(|e| CliError::Failure(format!("{}: {e}", out.display())))?;
    eprintln!("{} nice sets, {} orbits", c.sets.len(), c.orbits.len());
    let sizes: Vec<Value> = c.orbit_sizes().into_iter().map(|(id, n)| json!({"orbit": format!("T{id}"), "size": n})).collect();
    Ok(json!({"nice_sets": c.sets.len(), "orbits": c.orbits.len(), "orbit_sizes": sizes, "out": out.display().to_string()}))
}

fn run_contract(
    algebra: AlgebraKind,
    field: Field,
    epsilon: Option<PathBuf>,
    support: Option<String>,
    family: Option<String>,
) -> CliResult {
    let (eps, form) = match (epsilon, support, family) {
        (Some(path), None, None) => {
            let text = std::fs::read_to_string(&path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            (EpsilonMap::from_json(&text).map_err(usage)?, None)
        }
        (None, Some(s), None) => {
            let t: EdgeSet = s.parse().map_err(usage)?;
            (EpsilonMap::Admissible(AdmissibleMap::indicator(t)), None)
        }
        (None, None, Some(f)) => {
            let nf = parse_family(&f)?;
            let m = make_normal_form(&nf).map_err(usage)?;
            (EpsilonMap::Admissible(m), Some(nf))
        }
        _ => return Err(usage("exactly one of --epsilon, --support or --family is required")),
    };
    if field == Field::Real {
        let real = match &eps {
            EpsilonMap::Admissible(m) => m.is_real(),
            EpsilonMap::General(_) => true,
        };
        if !real {
            return Err(usage("--field R needs real ε values"));
        }
    }
    let alg = build_algebra(algebra, field).map_err(|e| CliError::Failure(e.to_string()))?;
    let mut out = json!({"algebra": algebra, "field": field, "epsilon": eps.to_value()});
    let admissible = match &eps {
        EpsilonMap::Admissible(m) => {
            if let Err(t) = check_admissible(m) {
                return Err(CliError::Failure(format!("not a graded contraction: condition (b2) fails on the triple {t:?}")));
            }
            Some(m.clone())
        }
        EpsilonMap::General(g) => {
            if !check_general(g, &alg) {
                return Err(CliError::Failure("not a graded contraction: conditions (a1)/(a2) fail".into()));
            }
            let a = gradcon::contraction::admissibilize(g);
            check_admissible(&a).is_ok().then_some(a)
        }
    };
    let l = contract(&alg, &eps).map_err(|e| CliError::Failure(e.to_string()))?;
    let support = admissible.as_ref().map(AdmissibleMap::support);
    out["structure"] = serde_json::to_value(StructureReport::compute(&l, support)).expect("json");
    if let Some(m) = admissible {
        out["support"] = json!(m.support().to_string());
        let class = classify(&m).map_err(|e| CliError::Failure(e.to_string()))?;
        out["classification"] = class.to_value();
        let (nf, alpha) = find_normalization(&m).map_err(|e| CliError::Failure(e.to_string()))?;
        out["normal_form"] = nf.to_value();
        out["normalization"] = json!(alpha.alpha.iter().map(|a| a.to_string()).collect::<Vec<_>>());
        if let Some(f) = form {
            out["family"] = f.to_value();
        }
    }
    Ok(out)
}

fn verify_paper(scope: suites::Scope, samples: usize, seed: u64) -> CliResult {
    let reports = suites::run(scope, samples, seed);
    for r in &reports {
        eprintln!("{:<12} {} ({} checked, {} failed)", r.suite, if r.passes { "PASS" } else { "FAIL" }, r.checked, r.failed);
    }
    let passes = reports.iter().all(|r| r.passes);
    let out = json!({"passes": passes, "seed": seed, "samples": samples, "suites": reports});
    if passes {
        Ok(out)
    } else {
        Err(CliError::Failure(serde_json::to_string_pretty(&out).expect("json")))
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let result = match cli.command {
        Command::VerifyGradings { drop_edge } => verify_gradings(drop_edge),
        Command::Census { out } => census(out),
        Command::Contract { algebra, field, epsilon, support, family } => {
            run_contract(algebra, field, epsilon, support, family)
        }
        Command::VerifyPaper { scope, samples } => verify_paper(scope, samples, cli.seed),
    };
    // A closed stdout (e.g. piped into `head`) is not an error.
    let emit = |text: &str| {
        let _ = writeln!(std::io::stdout().lock(), "{text}");
    };
    match result {
        Ok(v) => {
            emit(&serde_json::to_string_pretty(&v).expect("json"));
            ExitCode::SUCCESS
        }
        Err(CliError::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(CliError::Failure(m)) => {
            emit(&m);
            eprintln!("verification failed");
            ExitCode::from(1)
        }
    }
}
