//! Implementation of the `kac` command-line tool.
//!
//! Everything user-facing lives here so it can be unit-tested (and fuzzed)
//! without spawning a process; `main.rs` only declares the clap surface and
//! maps results to exit codes.
//!
//! Exit codes: 0 = everything verified, 1 = a mathematical mismatch was
//! found (the tool's reason for existing), 2 = usage or configuration
//! error. Exact values are serialized as decimal strings (integers) or
//! `p/q` strings (rationals), never as native JSON numbers: coefficients
//! outgrow every fixed-width type well before n = 60.

use kac_core::charpoly::{charpoly_direct_with_cap, charpoly_recurrence, ORACLE_CAP};
use kac_core::pyramid::{
    count_layer_distinct_with, count_slice_separated_with, PyramidModel, PYRAMID_BUDGET,
    PYRAMID_CAP,
};
use kac_core::spectrum::{eigenvector, verify_functional_equation};
use kac_core::symmfunc::{
    lhs_sum, max_k, rhs_sum_enum_with_cap, verify_identity_with, IdentityOptions, IdentityReport,
    ENUM_CAP,
};
use kac_core::weights::WeightSequence;
use rayon::prelude::*;
use serde_json::{json, Value};
use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable naming the default directory for `--output` files
/// given as relative paths.
pub const OUTPUT_DIR_ENV: &str = "KAC_OUTPUT_DIR";

/// A fatal usage/configuration problem; mapped to exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

impl std::error::Error for UsageError {}

impl From<std::io::Error> for UsageError {
    fn from(e: std::io::Error) -> Self {
        UsageError(e.to_string())
    }
}

fn usage<T: std::fmt::Display>(e: T) -> UsageError {
    UsageError(e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

pub fn parse_format(s: &str) -> Result<OutputFormat, UsageError> {
    match s.trim() {
        "csv" => Ok(OutputFormat::Csv),
        "json" => Ok(OutputFormat::Json),
        other => Err(UsageError(format!(
            "unknown format {other:?}; expected csv or json"
        ))),
    }
}

/// The verification routes a sweep may run. The three polynomial-time
/// routes are always computed (they are the identity being verified);
/// selecting a subset controls which columns are emitted and whether the
/// expensive optional routes run at all.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Route {
    LhsDp,
    RhsDp,
    Charpoly,
    RhsEnum,
    Pyramid,
}

impl Route {
    pub fn name(self) -> &'static str {
        match self {
            Route::LhsDp => "lhs_dp",
            Route::RhsDp => "rhs_dp",
            Route::Charpoly => "charpoly",
            Route::RhsEnum => "rhs_enum",
            Route::Pyramid => "pyramid",
        }
    }
}

pub const ALL_ROUTES: [Route; 5] = [
    Route::LhsDp,
    Route::RhsDp,
    Route::Charpoly,
    Route::RhsEnum,
    Route::Pyramid,
];

/// Parses a comma-separated route list, or `all`.
pub fn parse_routes(s: &str) -> Result<BTreeSet<Route>, UsageError> {
    if s.trim() == "all" {
        return Ok(ALL_ROUTES.into_iter().collect());
    }
    let mut routes = BTreeSet::new();
    for part in s.split(',') {
        let route = match part.trim() {
            "lhs_dp" => Route::LhsDp,
            "rhs_dp" => Route::RhsDp,
            "charpoly" => Route::Charpoly,
            "rhs_enum" => Route::RhsEnum,
            "pyramid" => Route::Pyramid,
            other => {
                return Err(UsageError(format!(
                    "unknown route {other:?}; expected lhs_dp, rhs_dp, charpoly, rhs_enum, pyramid, or all"
                )))
            }
        };
        routes.insert(route);
    }
    if routes.is_empty() {
        return Err(UsageError("route list must not be empty".into()));
    }
    Ok(routes)
}

/// Which k values a sweep visits for each n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KPolicy {
    /// Every k from 0 to floor((n+1)/2).
    AllValid,
    /// An explicit list, sorted and deduplicated.
    List(Vec<i64>),
}

impl KPolicy {
    pub fn ks_for(&self, n: usize) -> Vec<i64> {
        match self {
            KPolicy::AllValid => (0..=max_k(n) as i64).collect(),
            KPolicy::List(ks) => ks.clone(),
        }
    }
}

/// Parses `all` or a comma-separated list of integers.
pub fn parse_k_spec(s: &str) -> Result<KPolicy, UsageError> {
    if s.trim() == "all" {
        return Ok(KPolicy::AllValid);
    }
    let mut ks = Vec::new();
    for part in s.split(',') {
        let k: i64 = part
            .trim()
            .parse()
            .map_err(|_| UsageError(format!("invalid k value {:?}", part.trim())))?;
        ks.push(k);
    }
    ks.sort_unstable();
    ks.dedup();
    if ks.is_empty() {
        return Err(UsageError("k list must not be empty".into()));
    }
    Ok(KPolicy::List(ks))
}

/// Parses a comma-separated list of orders, e.g. `10,20,40`.
pub fn parse_n_list(s: &str) -> Result<Vec<usize>, UsageError> {
    let mut ns = Vec::new();
    for part in s.split(',') {
        let n: usize = part
            .trim()
            .parse()
            .map_err(|_| UsageError(format!("invalid n value {:?}", part.trim())))?;
        if n == 0 {
            return Err(UsageError("n must be at least 1".into()));
        }
        ns.push(n);
    }
    if ns.is_empty() {
        return Err(UsageError("n list must not be empty".into()));
    }
    Ok(ns)
}

/// Joins a relative `--output` path onto `KAC_OUTPUT_DIR` when that is set.
pub fn resolve_output_path(path: &Path) -> PathBuf {
    if path.is_relative() {
        if let Ok(dir) = std::env::var(OUTPUT_DIR_ENV) {
            if !dir.is_empty() {
                return PathBuf::from(dir).join(path);
            }
        }
    }
    path.to_path_buf()
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub k: KPolicy,
    pub routes: BTreeSet<Route>,
    pub format: OutputFormat,
    pub allow_large: bool,
}

impl SweepConfig {
    fn validate(&self) -> Result<(), UsageError> {
        if self.n_min == 0 {
            return Err(UsageError("--n-min must be at least 1".into()));
        }
        if self.n_min > self.n_max {
            return Err(UsageError(format!(
                "empty range: --n-min {} exceeds --n-max {}",
                self.n_min, self.n_max
            )));
        }
        if self.routes.is_empty() {
            return Err(UsageError("route list must not be empty".into()));
        }
        if !self.allow_large {
            if self.routes.contains(&Route::Pyramid) && self.n_max > PYRAMID_CAP {
                return Err(UsageError(format!(
                    "pyramid route is capped at n = {PYRAMID_CAP}; pass --allow-large to override"
                )));
            }
            if self.routes.contains(&Route::RhsEnum) && self.n_max > ENUM_CAP {
                return Err(UsageError(format!(
                    "rhs_enum route is capped at n = {ENUM_CAP}; pass --allow-large to override"
                )));
            }
        }
        Ok(())
    }

    fn identity_options(&self) -> IdentityOptions {
        let mut opts = IdentityOptions {
            with_enum: self.routes.contains(&Route::RhsEnum),
            with_pyramid: self.routes.contains(&Route::Pyramid),
            ..IdentityOptions::default()
        };
        if self.allow_large {
            opts.enum_cap = usize::MAX;
            opts.pyramid_cap = usize::MAX;
            opts.pyramid_budget = u64::MAX;
        }
        opts
    }
}

/// Runs the identity sweep and writes one row per (n, k) in deterministic
/// order. Returns `EXIT_MISMATCH` if any row disagrees.
pub fn cmd_verify(cfg: &SweepConfig, out: &mut dyn Write) -> Result<i32, UsageError> {
    cfg.validate()?;
    let opts = cfg.identity_options();
    // Cells are independent; compute n-slices in parallel and emit in order.
    let reports: Vec<IdentityReport> = (cfg.n_min..=cfg.n_max)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&n| {
            cfg.k
                .ks_for(n)
                .into_iter()
                .map(|k| verify_identity_with(n, k, opts))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()
        .map_err(usage)?
        .into_iter()
        .flatten()
        .collect();

    let mut all_ok = true;
    for report in &reports {
        if !report.all_equal {
            all_ok = false;
            eprintln!(
                "MISMATCH at n={} k={}: lhs={} rhs_dp={} charpoly_abs={}{}{}{}",
                report.n,
                report.k,
                report.lhs,
                report.rhs_dp,
                report.charpoly_abs,
                report
                    .rhs_enum
                    .as_ref()
                    .map(|v| format!(" rhs_enum={v}"))
                    .unwrap_or_default(),
                report
                    .pyramid_layer
                    .as_ref()
                    .map(|v| format!(" pyramid_layer={v}"))
                    .unwrap_or_default(),
                report
                    .pyramid_slice
                    .as_ref()
                    .map(|v| format!(" pyramid_slice={v}"))
                    .unwrap_or_default(),
            );
        }
    }

    match cfg.format {
        OutputFormat::Csv => write_verify_csv(cfg, &reports, out)?,
        OutputFormat::Json => write_verify_json(cfg, &reports, out)?,
    }
    Ok(if all_ok { EXIT_OK } else { EXIT_MISMATCH })
}

fn write_verify_csv(
    cfg: &SweepConfig,
    reports: &[IdentityReport],
    out: &mut dyn Write,
) -> Result<(), UsageError> {
    let mut header = String::from("n,k");
    for route in ALL_ROUTES {
        if cfg.routes.contains(&route) {
            let column = match route {
                Route::LhsDp => "lhs",
                Route::RhsDp => "rhs_dp",
                Route::Charpoly => "charpoly_abs",
                Route::RhsEnum => "rhs_enum",
                Route::Pyramid => "pyramid",
            };
            write!(header, ",{column}").expect("string write");
        }
    }
    writeln!(out, "{header},equal")?;
    for r in reports {
        let mut row = format!("{},{}", r.n, r.k);
        for route in ALL_ROUTES {
            if !cfg.routes.contains(&route) {
                continue;
            }
            let cell = match route {
                Route::LhsDp => r.lhs.to_string(),
                Route::RhsDp => r.rhs_dp.to_string(),
                Route::Charpoly => r.charpoly_abs.to_string(),
                Route::RhsEnum => r.rhs_enum.as_ref().map(ToString::to_string).unwrap_or_default(),
                // The layer-distinct count; the slice count participates in
                // `equal` and appears in the JSON form.
                Route::Pyramid => r
                    .pyramid_layer
                    .as_ref()
                    .map(ToString::to_string)
                    .unwrap_or_default(),
            };
            write!(row, ",{cell}").expect("string write");
        }
        writeln!(out, "{row},{}", r.all_equal)?;
    }
    Ok(())
}

fn write_verify_json(
    cfg: &SweepConfig,
    reports: &[IdentityReport],
    out: &mut dyn Write,
) -> Result<(), UsageError> {
    let rows: Vec<Value> = reports
        .iter()
        .map(|r| {
            let mut obj = serde_json::Map::new();
            obj.insert("n".into(), json!(r.n));
            obj.insert("k".into(), json!(r.k));
            if cfg.routes.contains(&Route::LhsDp) {
                obj.insert("lhs".into(), json!(r.lhs.to_string()));
            }
            if cfg.routes.contains(&Route::RhsDp) {
                obj.insert("rhs_dp".into(), json!(r.rhs_dp.to_string()));
            }
            if cfg.routes.contains(&Route::Charpoly) {
                obj.insert("charpoly_abs".into(), json!(r.charpoly_abs.to_string()));
            }
            if let Some(v) = &r.rhs_enum {
                obj.insert("rhs_enum".into(), json!(v.to_string()));
            }
            if let Some(v) = &r.pyramid_layer {
                obj.insert("pyramid_layer".into(), json!(v.to_string()));
            }
            if let Some(v) = &r.pyramid_slice {
                obj.insert("pyramid_slice".into(), json!(v.to_string()));
            }
            obj.insert("equal".into(), json!(r.all_equal));
            Value::Object(obj)
        })
        .collect();
    writeln!(out, "{}", serde_json::to_string_pretty(&rows).map_err(usage)?)?;
    Ok(())
}

/// Dumps all n+1 exact eigenpairs of S_n with verification flags.
pub fn cmd_spectrum(n: usize, format: OutputFormat, out: &mut dyn Write) -> Result<i32, UsageError> {
    if n == 0 {
        return Err(UsageError("--n must be at least 1".into()));
    }
    let mut pairs = Vec::with_capacity(n + 1);
    let mut all_ok = true;
    for d in 0..=n {
        let pair = eigenvector(n, d).map_err(usage)?;
        let verified =
            pair.check_eigen_relation() && verify_functional_equation(&pair, pair.d() + 2);
        all_ok &= verified;
        if !verified {
            eprintln!("MISMATCH: eigenpair n={n} d={d} failed exact verification");
        }
        pairs.push((pair, verified));
    }

    match format {
        OutputFormat::Json => {
            let entries: Vec<Value> = pairs
                .iter()
                .map(|(pair, verified)| {
                    json!({
                        "d": pair.d(),
                        "lambda": pair.lambda(),
                        "degree": pair.poly().actual_degree(),
                        "symmetry": pair.reflection_symmetry(),
                        "vector": pair
                            .vector()
                            .iter()
                            .map(|v| v.to_string())
                            .collect::<Vec<_>>(),
                        "integer_vector": pair
                            .integer_vector()
                            .iter()
                            .map(|v| v.to_string())
                            .collect::<Vec<_>>(),
                        "verified": verified,
                    })
                })
                .collect();
            let doc = json!({ "n": n, "pairs": entries });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).map_err(usage)?)?;
        }
        OutputFormat::Csv => {
            writeln!(out, "n,d,lambda,degree,symmetry,verified,vector")?;
            for (pair, verified) in &pairs {
                let degree = pair
                    .poly()
                    .actual_degree()
                    .map(|d| d.to_string())
                    .unwrap_or_default();
                let symmetry = pair
                    .reflection_symmetry()
                    .map(|s| s.to_string())
                    .unwrap_or_default();
                let vector = pair
                    .vector()
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" ");
                writeln!(
                    out,
                    "{n},{},{},{degree},{symmetry},{verified},{vector}",
                    pair.d(),
                    pair.lambda()
                )?;
            }
        }
    }
    Ok(if all_ok { EXIT_OK } else { EXIT_MISMATCH })
}

/// Where the weights for `cmd_charpoly` come from.
#[derive(Debug, Clone)]
pub enum WeightsSource {
    Kac(usize),
    File(PathBuf),
}

/// Dumps the parity-compressed coefficients d_{k,n} for one matrix.
pub fn cmd_charpoly(
    source: &WeightsSource,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<i32, UsageError> {
    let weights = match source {
        WeightsSource::Kac(n) => WeightSequence::kac(*n).map_err(usage)?,
        WeightsSource::File(path) => {
            let doc = std::fs::read_to_string(path)
                .map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
            WeightSequence::from_json_str(&doc).map_err(usage)?
        }
    };
    let chi = charpoly_recurrence(&weights);
    match format {
        OutputFormat::Csv => {
            writeln!(out, "n,k,d_kn")?;
            for (k, c) in chi.coeffs().iter().enumerate() {
                writeln!(out, "{},{k},{c}", chi.n())?;
            }
        }
        OutputFormat::Json => {
            let doc = json!({
                "n": chi.n(),
                "coeffs": chi.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>(),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).map_err(usage)?)?;
        }
    }
    Ok(EXIT_OK)
}

/// Dumps the cube table of the pyramid model.
pub fn cmd_pyramid(n: usize, format: OutputFormat, out: &mut dyn Write) -> Result<i32, UsageError> {
    let model = PyramidModel::build(n).map_err(usage)?;
    match format {
        OutputFormat::Csv => {
            writeln!(out, "layer,row,col,slice")?;
            for c in model.cubes() {
                writeln!(out, "{},{},{},{}", c.layer, c.row, c.col, c.slice)?;
            }
        }
        OutputFormat::Json => {
            let doc = json!({
                "n": model.n(),
                "total": model.total(),
                "layer_sizes": model
                    .layer_sizes()
                    .into_iter()
                    .map(|(j, s)| (j.to_string(), json!(s)))
                    .collect::<serde_json::Map<_, _>>(),
                "slice_sizes": model
                    .slice_sizes()
                    .into_iter()
                    .map(|(s, c)| (s.to_string(), json!(c)))
                    .collect::<serde_json::Map<_, _>>(),
                "cubes": model
                    .cubes()
                    .iter()
                    .map(|c| json!({
                        "layer": c.layer,
                        "row": c.row,
                        "col": c.col,
                        "slice": c.slice,
                    }))
                    .collect::<Vec<_>>(),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).map_err(usage)?)?;
        }
    }
    Ok(EXIT_OK)
}

/// One timed route of the benchmark table.
struct BenchRow {
    n: usize,
    route: &'static str,
    reps: usize,
    median_ns: u128,
}

/// Times every route at each order, taking the median of `reps` runs.
/// Enumeration, oracle, and pyramid routes are skipped above their caps.
/// Timings are reported, never asserted.
pub fn cmd_bench(
    ns: &[usize],
    k: &KPolicy,
    reps: usize,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<i32, UsageError> {
    if reps == 0 {
        return Err(UsageError("--reps must be at least 1".into()));
    }
    let mut rows = Vec::new();
    for &n in ns {
        let ks = k.ks_for(n);
        let kac = WeightSequence::kac(n).map_err(usage)?;

        let mut time_route = |route: &'static str, body: &dyn Fn()| {
            let mut samples: Vec<u128> = (0..reps)
                .map(|_| {
                    let start = Instant::now();
                    body();
                    start.elapsed().as_nanos()
                })
                .collect();
            samples.sort_unstable();
            let mid = samples.len() / 2;
            let median_ns = if samples.len() % 2 == 1 {
                samples[mid]
            } else {
                (samples[mid - 1] + samples[mid]) / 2
            };
            rows.push(BenchRow {
                n,
                route,
                reps,
                median_ns,
            });
        };

        time_route("lhs_dp", &|| {
            for &k in &ks {
                std::hint::black_box(lhs_sum(n, k));
            }
        });
        time_route("rhs_dp", &|| {
            for &k in &ks {
                std::hint::black_box(kac_core::symmfunc::rhs_sum_dp(n, k));
            }
        });
        time_route("charpoly", &|| {
            std::hint::black_box(charpoly_recurrence(&kac));
        });
        if n <= ENUM_CAP {
            time_route("rhs_enum", &|| {
                for &k in &ks {
                    std::hint::black_box(rhs_sum_enum_with_cap(k, &kac, ENUM_CAP).unwrap());
                }
            });
        } else {
            eprintln!("note: rhs_enum skipped at n={n} (cap {ENUM_CAP})");
        }
        if n <= ORACLE_CAP {
            time_route("oracle", &|| {
                std::hint::black_box(charpoly_direct_with_cap(&kac, ORACLE_CAP).unwrap());
            });
        } else {
            eprintln!("note: oracle skipped at n={n} (cap {ORACLE_CAP})");
        }
        if n <= PYRAMID_CAP {
            time_route("pyramid", &|| {
                let model = PyramidModel::build(n).unwrap();
                for &k in &ks {
                    if k >= 0 {
                        let k = k as usize;
                        std::hint::black_box(
                            count_layer_distinct_with(&model, k, PYRAMID_CAP, PYRAMID_BUDGET)
                                .unwrap(),
                        );
                        std::hint::black_box(
                            count_slice_separated_with(&model, k, PYRAMID_CAP, PYRAMID_BUDGET)
                                .unwrap(),
                        );
                    }
                }
            });
        } else {
            eprintln!("note: pyramid skipped at n={n} (cap {PYRAMID_CAP})");
        }
    }

    match format {
        OutputFormat::Csv => {
            writeln!(out, "n,route,reps,median_ns")?;
            for r in &rows {
                writeln!(out, "{},{},{},{}", r.n, r.route, r.reps, r.median_ns)?;
            }
        }
        OutputFormat::Json => {
            let entries: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "n": r.n,
                        "route": r.route,
                        "reps": r.reps,
                        "median_ns": r.median_ns as u64,
                    })
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&entries).map_err(usage)?)?;
        }
    }
    Ok(EXIT_OK)
}
