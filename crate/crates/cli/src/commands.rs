use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use degchrom_core::counting::{brute_force_count_with_budget, resolve_method};
use degchrom_core::theorem::all_pair_bounds;
use degchrom_core::{
    certify_tree, degree_chromatic_polynomial, parse_edge_list, random_tree, verify_tree_theorem, ConstraintParams,
    CountError, Graph, LabeledTree, OracleBudget, PolyError, TheoremError,
};

use crate::args::{BoundsArgs, BudgetArgs, CampaignArgs, ComputeArgs, Format, GeneratorArgs, OracleArgs, VerifyArgs};
use crate::records::{BoundRecord, CountRecord, PolynomialRecord, VerifyRecord};

/// Errors mapped onto process exit codes.
#[derive(Debug)]
pub enum CliError {
    /// Bad input or usage: exit 2.
    Usage(String),
    /// A computation produced a mathematical failure: exit 1.
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failure(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Failure(msg) => f.write_str(msg),
        }
    }
}

impl From<CountError> for CliError {
    fn from(e: CountError) -> Self {
        match e {
            CountError::Poly(PolyError::NonIntegral { .. }) => CliError::Failure(format!("integrality failure: {e}")),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<TheoremError> for CliError {
    fn from(e: TheoremError) -> Self {
        match e {
            TheoremError::Count(c) => c.into(),
            other => CliError::Usage(other.to_string()),
        }
    }
}

/// Whether every produced record passed.
pub type Outcome = Result<bool, CliError>;

/// Where a campaign's trees come from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InputSource {
    File(PathBuf),
    Random {
        count: usize,
        n_min: usize,
        n_max: usize,
        seed: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CampaignConfig {
    pub source: InputSource,
    pub m: Vec<usize>,
    pub format: Format,
    pub timings: bool,
}

struct Instance {
    label: String,
    seed: Option<u64>,
    tree: LabeledTree,
}

fn read_graph(path: &Path) -> Result<Graph, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    parse_edge_list(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn read_tree(path: &Path) -> Result<LabeledTree, CliError> {
    certify_tree(read_graph(path)?).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn budget(args: &BudgetArgs) -> OracleBudget {
    if args.allow_large {
        OracleBudget::unlimited()
    } else {
        OracleBudget::default()
    }
}

fn params(m: usize, k: u32) -> Result<ConstraintParams, CliError> {
    ConstraintParams::new(m, k).map_err(|e| CliError::Usage(e.to_string()))
}

fn json_line<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("records serialize")
}

fn emit(out: &mut dyn Write, lines: impl IntoIterator<Item = String>) -> Result<(), CliError> {
    for line in lines {
        writeln!(out, "{line}").map_err(|e| CliError::Usage(format!("write failed: {e}")))?;
    }
    Ok(())
}

pub fn compute(args: &ComputeArgs, out: &mut dyn Write) -> Outcome {
    let g = read_graph(&args.graph)?;
    params(args.m, 0)?;
    let method = resolve_method(&g, args.method.into());
    let poly = degree_chromatic_polynomial(&g, args.m, args.method.into(), budget(&args.budget))?;
    let coefficients = poly.assert_integral().map_err(CountError::from)?;
    let record = PolynomialRecord {
        n: g.n(),
        m: args.m,
        method: method.to_string(),
        coefficients: coefficients.iter().map(ToString::to_string).collect(),
    };
    let lines = match args.format {
        Format::Json => vec![json_line(&record)],
        Format::Csv => vec![PolynomialRecord::CSV_HEADER.to_string(), record.csv_row()],
        Format::Text => vec![record.text(&poly)],
    };
    emit(out, lines)?;
    Ok(true)
}

pub fn oracle(args: &OracleArgs, out: &mut dyn Write) -> Outcome {
    let g = read_graph(&args.graph)?;
    let (k_min, k_max) = match args.k {
        Some(k) => (k, k),
        None => (args.k_min, args.k_max.unwrap_or(g.n() as u32)),
    };
    if k_min > k_max {
        return Err(CliError::Usage(format!("empty k range {k_min}..={k_max}")));
    }
    let budget = budget(&args.budget);
    let mut records = Vec::new();
    for k in k_min..=k_max {
        let count = brute_force_count_with_budget(&g, &params(args.m, k)?, budget)?;
        records.push(CountRecord {
            n: g.n(),
            m: args.m,
            k,
            count: count.value.to_string(),
            method: count.method.to_string(),
        });
    }
    let lines: Vec<String> = match args.format {
        Format::Json => records.iter().map(json_line).collect(),
        Format::Csv => std::iter::once(CountRecord::CSV_HEADER.to_string())
            .chain(records.iter().map(CountRecord::csv_row))
            .collect(),
        Format::Text => records.iter().map(CountRecord::text).collect(),
    };
    emit(out, lines)?;
    Ok(true)
}

fn instances(source: &InputSource) -> Result<Vec<Instance>, CliError> {
    match source {
        InputSource::File(path) => Ok(vec![Instance {
            label: path.display().to_string(),
            seed: None,
            tree: read_tree(path)?,
        }]),
        &InputSource::Random {
            count,
            n_min,
            n_max,
            seed,
        } => {
            if n_min < 2 || n_min > n_max {
                return Err(CliError::Usage(format!(
                    "random trees need 2 <= n-min <= n-max, got {n_min}..={n_max}"
                )));
            }
            let mut sizes = ChaCha8Rng::seed_from_u64(seed);
            let plan: Vec<(u64, usize)> = (0..count as u64)
                .map(|i| (seed.wrapping_add(i), sizes.gen_range(n_min..=n_max)))
                .collect();
            Ok(plan
                .into_par_iter()
                .map(|(tree_seed, n)| Instance {
                    label: format!("random(n={n}, seed={tree_seed})"),
                    seed: Some(tree_seed),
                    tree: random_tree(n, tree_seed).expect("n >= 2"),
                })
                .collect())
        }
    }
}

/// Verifies every (tree, m) pair; pairs outside `1 < m < n` are skipped
/// with a notice on stderr.
pub fn run_campaign(config: &CampaignConfig, out: &mut dyn Write) -> Outcome {
    let trees = instances(&config.source)?;
    let mut jobs = Vec::new();
    for inst in &trees {
        for &m in &config.m {
            if m <= 1 || m >= inst.tree.n() {
                eprintln!(
                    "notice: skipping {} with m = {m} (needs 1 < m < n = {})",
                    inst.label,
                    inst.tree.n()
                );
            } else {
                jobs.push((inst, m));
            }
        }
    }
    let reports = jobs
        .par_iter()
        .map(|&(inst, m)| verify_tree_theorem(&inst.tree, m).map(|r| (inst, r)))
        .collect::<Result<Vec<_>, TheoremError>>()?;

    let records: Vec<(VerifyRecord, _)> = reports
        .iter()
        .map(|(inst, r)| (VerifyRecord::new(r, inst.label.clone(), inst.seed, config.timings), r))
        .collect();
    let lines: Vec<String> = match config.format {
        Format::Json => records.iter().map(|(rec, _)| json_line(rec)).collect(),
        Format::Csv => std::iter::once(VerifyRecord::CSV_HEADER.to_string())
            .chain(records.iter().map(|(rec, _)| rec.csv_row()))
            .collect(),
        Format::Text => records.iter().map(|(rec, r)| rec.text(r)).collect(),
    };
    emit(out, lines)?;

    let passed = records.iter().filter(|(rec, _)| rec.pass).count();
    eprintln!("{passed}/{} verifications passed", records.len());
    Ok(passed == records.len())
}

fn random_source(count: usize, generator: &GeneratorArgs) -> InputSource {
    InputSource::Random {
        count,
        n_min: generator.n_min,
        n_max: generator.n_max,
        seed: generator.seed,
    }
}

pub fn verify(args: &VerifyArgs, out: &mut dyn Write) -> Outcome {
    let source = match (&args.source.graph, args.source.random) {
        (Some(path), None) => InputSource::File(path.clone()),
        (None, Some(count)) => random_source(count, &args.generator),
        _ => return Err(CliError::Usage("exactly one of --graph or --random is required".into())),
    };
    run_campaign(
        &CampaignConfig {
            source,
            m: args.m.clone(),
            format: args.format,
            timings: args.timings,
        },
        out,
    )
}

pub fn campaign(args: &CampaignArgs, out: &mut dyn Write) -> Outcome {
    run_campaign(
        &CampaignConfig {
            source: random_source(args.random, &args.generator),
            m: args.m.clone(),
            format: args.format,
            timings: args.timings,
        },
        out,
    )
}

pub fn bounds(args: &BoundsArgs, out: &mut dyn Write) -> Outcome {
    if args.m < 2 {
        return Err(CliError::Usage(format!(
            "bound checks need m >= 2 (the adjacent-pair bound assumes it), got m = {}",
            args.m
        )));
    }
    if args.k_min == 0 || args.k_min > args.k_max {
        return Err(CliError::Usage(format!(
            "need 1 <= k-min <= k-max, got {}..={}",
            args.k_min, args.k_max
        )));
    }
    let tree = read_tree(&args.graph)?;
    let budget = budget(&args.budget);
    let mut records = Vec::new();
    for k in args.k_min..=args.k_max {
        let reports = all_pair_bounds(&tree, &params(args.m, k)?, budget)?;
        records.extend(reports.iter().map(BoundRecord::from));
    }
    let lines: Vec<String> = match args.format {
        Format::Json => records.iter().map(json_line).collect(),
        Format::Csv => std::iter::once(BoundRecord::CSV_HEADER.to_string())
            .chain(records.iter().map(BoundRecord::csv_row))
            .collect(),
        Format::Text => records.iter().map(BoundRecord::text).collect(),
    };
    emit(out, lines)?;
    let failed = records.iter().filter(|r| !r.pass).count();
    if failed > 0 {
        eprintln!("{failed} of {} bound checks failed", records.len());
    }
    Ok(failed == 0)
}
