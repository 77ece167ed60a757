//! Subcommand implementations: orchestration over the library modules.

use std::path::{Path, PathBuf};

use lstat_core::arith::PrimeTable;
use lstat_core::correlations::{correlation_scan, sine_kernel, singular_series};
use lstat_core::lfunc::{
    cache_load, cache_store, elliptic_coefficients, load_legacy_list, tau_coefficients,
    von_mangoldt_table, CoefficientKind, LFunctionKind, LFunctionSpec, PrimeCoefficients,
    VonMangoldtTable, TAU_LIMIT_MAX,
};
use lstat_core::variance::{geometric_grid, variance_scan_with_grid};
use lstat_core::zerostats::{
    load_zeros, pair_correlation_f, pair_correlation_f_truncated, r2_diagonal_zeta,
    r2_offdiagonal_zeta,
};
use lstat_core::{Error, Result};

use crate::config::Settings;
use crate::output::{fmt15, CsvSink};
use crate::SpecArgs;

/// Inline elliptic point counting is allowed up to this prime bound; larger
/// runs must go through the `coeffs` subcommand and the cache.
const EC_INLINE_BUDGET: u64 = 200_000;

fn parse_spec(args: &SpecArgs) -> Result<LFunctionSpec> {
    match args.spec.as_str() {
        "zeta" => Ok(LFunctionSpec::zeta()),
        "tau" => Ok(LFunctionSpec::ramanujan_tau()),
        "ec" => {
            let w = parse_weierstrass(args.weierstrass.as_deref().ok_or_else(|| {
                Error::InvalidArgument("--spec ec requires --weierstrass".into())
            })?)?;
            let conductor = args.conductor.ok_or_else(|| {
                Error::InvalidArgument("--spec ec requires --conductor".into())
            })?;
            LFunctionSpec::elliptic_curve(w, conductor)
        }
        other => Err(Error::InvalidArgument(format!(
            "unknown spec {other:?} (expected zeta, tau, or ec)"
        ))),
    }
}

fn parse_weierstrass(text: &str) -> Result<[i64; 5]> {
    let parts: Vec<i64> = text
        .split(',')
        .map(|s| s.trim().parse::<i64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| {
            Error::InvalidArgument(format!("bad weierstrass tuple {text:?}"))
        })?;
    if parts.len() != 5 {
        return Err(Error::InvalidArgument(
            "weierstrass tuple needs 5 comma-separated integers".into(),
        ));
    }
    Ok([parts[0], parts[1], parts[2], parts[3], parts[4]])
}

fn spec_summary(spec: &LFunctionSpec) -> String {
    match spec.kind() {
        LFunctionKind::Zeta => "zeta".into(),
        LFunctionKind::RamanujanTau => "tau".into(),
        LFunctionKind::EllipticCurve => format!(
            "ec weierstrass={} conductor={}",
            spec.weierstrass()
                .unwrap()
                .iter()
                .map(|a| a.to_string())
                .collect::<Vec<_>>()
                .join(","),
            spec.conductor()
        ),
    }
}

fn cache_file_name(spec: &LFunctionSpec, limit: u64) -> String {
    match spec.kind() {
        LFunctionKind::RamanujanTau => format!("tau_{limit}.coeffs"),
        LFunctionKind::EllipticCurve => {
            let w = spec.weierstrass().unwrap();
            format!(
                "ec_{}_{}_{}_{}_{}_n{}_{limit}.coeffs",
                w[0],
                w[1],
                w[2],
                w[3],
                w[4],
                spec.conductor()
            )
        }
        LFunctionKind::Zeta => unreachable!("zeta has no coefficient cache"),
    }
}

/// Find a cache file for this spec covering at least `limit` primes.
fn find_cached(settings: &Settings, spec: &LFunctionSpec, limit: u64) -> Option<PathBuf> {
    let dir = settings.cache_dir.as_ref()?;
    let prefix = match spec.kind() {
        LFunctionKind::RamanujanTau => "tau_".to_string(),
        LFunctionKind::EllipticCurve => {
            let w = spec.weierstrass().unwrap();
            format!(
                "ec_{}_{}_{}_{}_{}_n{}_",
                w[0], w[1], w[2], w[3], w[4],
                spec.conductor()
            )
        }
        LFunctionKind::Zeta => return None,
    };
    let mut best: Option<(u64, PathBuf)> = None;
    for entry in std::fs::read_dir(dir).ok()? {
        let entry = entry.ok()?;
        let name = entry.file_name().to_string_lossy().into_owned();
        if let Some(rest) = name.strip_prefix(&prefix) {
            if let Some(stem) = rest.strip_suffix(".coeffs") {
                if let Ok(l) = stem.parse::<u64>() {
                    if l >= limit && best.as_ref().map_or(true, |&(bl, _)| l < bl) {
                        best = Some((l, entry.path()));
                    }
                }
            }
        }
    }
    best.map(|(_, p)| p)
}

/// Load coefficients from the cache or compute them inline within budget.
fn acquire_coefficients(
    settings: &Settings,
    spec: &LFunctionSpec,
    limit: u64,
) -> Result<Option<PrimeCoefficients>> {
    match spec.kind() {
        LFunctionKind::Zeta => Ok(None),
        LFunctionKind::RamanujanTau => {
            if let Some(path) = find_cached(settings, spec, limit) {
                return Ok(Some(cache_load(&path)?));
            }
            if limit > TAU_LIMIT_MAX {
                return Err(Error::Capacity(format!(
                    "tau coefficients are certified only up to {TAU_LIMIT_MAX}; \
                     build a cache with the `coeffs` subcommand"
                )));
            }
            let coeffs = tau_coefficients(limit)?;
            write_through(settings, spec, limit, &coeffs);
            Ok(Some(coeffs))
        }
        LFunctionKind::EllipticCurve => {
            if let Some(path) = find_cached(settings, spec, limit) {
                return Ok(Some(cache_load(&path)?));
            }
            if limit > EC_INLINE_BUDGET {
                return Err(Error::Capacity(format!(
                    "elliptic point counting to {limit} exceeds the inline budget \
                     {EC_INLINE_BUDGET}; precompute with: lstat coeffs --spec ec \
                     --weierstrass ... --conductor ... --limit {limit}"
                )));
            }
            let w = spec.weierstrass().unwrap();
            let coeffs = elliptic_coefficients(w, spec.conductor(), limit)?;
            write_through(settings, spec, limit, &coeffs);
            Ok(Some(coeffs))
        }
    }
}

fn write_through(settings: &Settings, spec: &LFunctionSpec, limit: u64, coeffs: &PrimeCoefficients) {
    if let Some(dir) = &settings.cache_dir {
        if std::fs::create_dir_all(dir).is_ok() {
            let path = dir.join(cache_file_name(spec, limit));
            // Best effort: a failed cache write must not fail the run.
            let _ = cache_store(&path, coeffs);
        }
    }
}

fn build_table(
    settings: &Settings,
    spec: &LFunctionSpec,
    limit: u64,
) -> Result<VonMangoldtTable> {
    let coeffs = acquire_coefficients(settings, spec, limit)?;
    let pt = PrimeTable::sieve(limit)?;
    von_mangoldt_table(spec, coeffs.as_ref(), &pt, limit)
}

#[allow(clippy::too_many_arguments)]
pub fn variance(
    settings: &Settings,
    spec_args: &SpecArgs,
    x: u64,
    h_min: f64,
    h_max: f64,
    ratio: f64,
    h_list: Option<&str>,
    output: Option<&Path>,
    dry_run: bool,
) -> Result<()> {
    let spec = parse_spec(spec_args)?;
    let grid: Vec<f64> = match h_list {
        Some(text) => text
            .split(',')
            .map(|s| s.trim().parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::InvalidArgument(format!("bad h list {text:?}")))?,
        None => geometric_grid(h_min, h_max, ratio)?,
    };
    if grid.is_empty() {
        return Err(Error::InvalidArgument("empty h grid".into()));
    }
    // The largest index any window touches is floor(X + max h).
    let top_h = grid.iter().cloned().fold(0.0f64, f64::max);
    let limit = (x as f64 + top_h).floor() as u64;

    if dry_run {
        println!("# dry run: variance --spec {}", spec_summary(&spec));
        println!("table_limit,{limit}");
        println!("table_memory_bytes,{}", 16 * (limit + 1));
        println!("rows,{}", grid.len());
        println!("window_ops,{}", grid.len() as u64 * x);
        return Ok(());
    }

    let table = build_table(settings, &spec, limit)?;
    let series = variance_scan_with_grid(&spec, &table, x, &grid)?;

    let mut sink = CsvSink::open(output)?;
    sink.comment(&format!(
        "lstat variance spec={} x={x} h_min={h_min} h_max={h_max} ratio={ratio}",
        spec_summary(&spec)
    ))?;
    sink.header("log_x_over_h,var_over_h,pred_small_h,pred_universal")?;
    for row in &series.rows {
        sink.row(&[
            fmt15(row.log_ratio),
            fmt15(row.empirical),
            fmt15(row.pred_small_h),
            fmt15(row.pred_universal),
        ])?;
    }
    sink.finish()
}

pub fn correlate(
    settings: &Settings,
    spec_args: &SpecArgs,
    r_list: &str,
    n: u64,
    step: u64,
    output: Option<&Path>,
    dry_run: bool,
) -> Result<()> {
    let spec = parse_spec(spec_args)?;
    let shifts: Vec<u64> = r_list
        .split(',')
        .map(|s| s.trim().parse::<u64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::InvalidArgument(format!("bad shift list {r_list:?}")))?;
    if shifts.is_empty() {
        return Err(Error::InvalidArgument("no shifts given".into()));
    }
    let limit = n + shifts.iter().max().unwrap() + 1;

    if dry_run {
        println!("# dry run: correlate --spec {}", spec_summary(&spec));
        println!("table_limit,{limit}");
        println!("table_memory_bytes,{}", 16 * (limit + 1));
        println!("product_ops,{}", n * shifts.len() as u64);
        return Ok(());
    }

    let table = build_table(settings, &spec, limit)?;
    for &r in &shifts {
        let series = correlation_scan(&table, r, n, step)?;
        let path = per_shift_path(output, r, shifts.len() > 1);
        let mut sink = CsvSink::open(path.as_deref())?;
        sink.comment(&format!(
            "lstat correlate spec={} r={r} n={n} step={step}",
            spec_summary(&spec)
        ))?;
        if let Some(hl) = series.hl_reference {
            sink.comment(&format!("hl_singular_series={}", fmt15(hl)))?;
        }
        sink.header("N,c_r_value")?;
        for &(np, v) in &series.checkpoints {
            sink.row(&[np.to_string(), fmt15(v)])?;
        }
        sink.finish()?;
    }
    Ok(())
}

fn per_shift_path(base: Option<&Path>, r: u64, multi: bool) -> Option<PathBuf> {
    let base = base?;
    if !multi {
        return Some(base.to_path_buf());
    }
    let stem = base
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "correlations".into());
    let ext = base
        .extension()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "csv".into());
    Some(base.with_file_name(format!("{stem}_r{r}.{ext}")))
}

pub fn hl(r: i64, cutoff: u64, output: Option<&Path>, dry_run: bool) -> Result<()> {
    if dry_run {
        println!("# dry run: hl --r {r} --cutoff {cutoff}");
        println!("sieve_memory_bytes,{cutoff}");
        return Ok(());
    }
    let s = singular_series(r, cutoff)?;
    let mut sink = CsvSink::open(output)?;
    sink.comment(&format!("lstat hl r={r} cutoff={cutoff}"))?;
    sink.header("r,value,twin_constant,tail_bound")?;
    sink.row(&[
        r.to_string(),
        fmt15(s.value),
        fmt15(s.twin_constant),
        fmt15(s.tail_bound),
    ])?;
    sink.finish()
}

pub fn paircorr(
    zeros: &Path,
    x: f64,
    t: f64,
    delta_cut: Option<f64>,
    output: Option<&Path>,
    dry_run: bool,
) -> Result<()> {
    if dry_run {
        println!("# dry run: paircorr --zeros {} --x {x} --t {t}", zeros.display());
        let lines = std::fs::read_to_string(zeros)?.lines().count() as u64;
        println!("zero_count,{lines}");
        println!("pair_ops,{}", lines * lines / 2);
        return Ok(());
    }
    let zd = load_zeros(zeros)?;
    let result = match delta_cut {
        Some(cut) => pair_correlation_f_truncated(&zd, x, t, cut)?,
        None => pair_correlation_f(&zd, x, t)?,
    };
    let mut sink = CsvSink::open(output)?;
    sink.comment(&format!(
        "lstat paircorr zeros={} x={x} t={t} zero_count={} tail_bound={}",
        zeros.display(),
        result.zero_count,
        fmt15(result.tail_bound)
    ))?;
    sink.header("X,T,F,normalized,conj_small_x,conj_large_x")?;
    sink.row(&[
        fmt15(result.x),
        fmt15(result.t),
        fmt15(result.f_value),
        fmt15(result.normalized),
        fmt15(result.conjecture_small_x),
        fmt15(result.conjecture_large_x),
    ])?;
    sink.finish()
}

pub fn model(
    x_grid: &str,
    t: f64,
    cutoff: u64,
    output: Option<&Path>,
    dry_run: bool,
) -> Result<()> {
    let parts: Vec<f64> = x_grid
        .split(':')
        .map(|s| s.trim().parse::<f64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::InvalidArgument(format!("bad x grid {x_grid:?}")))?;
    let [start, end, step] = parts.as_slice() else {
        return Err(Error::InvalidArgument(
            "x grid must be start:end:step".into(),
        ));
    };
    if *step <= 0.0 || end < start {
        return Err(Error::InvalidArgument("empty x grid".into()));
    }
    let count = ((end - start) / step).floor() as usize + 1;
    if dry_run {
        println!("# dry run: model --x-grid {x_grid} --t {t}");
        println!("grid_points,{count}");
        println!("sieve_memory_bytes,{cutoff}");
        return Ok(());
    }
    let mut sink = CsvSink::open(output)?;
    sink.comment(&format!("lstat model x_grid={x_grid} t={t} cutoff={cutoff}"))?;
    sink.header("x,sine_kernel,r2_diagonal,r2_offdiagonal")?;
    for i in 0..count {
        let x = start + *step * i as f64;
        sink.row(&[
            fmt15(x),
            fmt15(sine_kernel(x)),
            fmt15(r2_diagonal_zeta(x, cutoff)?),
            fmt15(r2_offdiagonal_zeta(x, t, cutoff)?),
        ])?;
    }
    sink.finish()
}

pub fn coeffs(
    settings: &Settings,
    spec_args: &SpecArgs,
    limit: u64,
    legacy_list: Option<&Path>,
    dry_run: bool,
) -> Result<()> {
    let spec = parse_spec(spec_args)?;
    let dir = settings.cache_dir.clone().ok_or_else(|| {
        Error::InvalidArgument("coeffs needs --cache-dir (or LSTAT_CACHE_DIR)".into())
    })?;
    if dry_run {
        println!("# dry run: coeffs --spec {} --limit {limit}", spec_summary(&spec));
        println!("target,{}", dir.join(cache_file_name(&spec, limit)).display());
        return Ok(());
    }
    let coeffs = match (spec.kind(), legacy_list) {
        (LFunctionKind::Zeta, _) => {
            return Err(Error::InvalidArgument(
                "zeta needs no coefficient cache".into(),
            ))
        }
        (LFunctionKind::RamanujanTau, None) => tau_coefficients(limit)?,
        (LFunctionKind::RamanujanTau, Some(p)) => {
            load_legacy_list(p, CoefficientKind::Tau, limit)?
        }
        (LFunctionKind::EllipticCurve, None) => {
            elliptic_coefficients(spec.weierstrass().unwrap(), spec.conductor(), limit)?
        }
        (LFunctionKind::EllipticCurve, Some(p)) => load_legacy_list(
            p,
            CoefficientKind::EllipticCurve {
                weierstrass: spec.weierstrass().unwrap(),
                conductor: spec.conductor(),
            },
            limit,
        )?,
    };
    std::fs::create_dir_all(&dir)?;
    let path = dir.join(cache_file_name(&spec, limit));
    cache_store(&path, &coeffs)?;
    println!("{}", path.display());
    Ok(())
}
