//! Short-interval variances of generalized von Mangoldt sums and the
//! theoretical predictions for both regimes.
//!
//! psi(x, h; F) = sum_{x < n <= x+h} Lambda(n; F) is read off the compensated
//! prefix sums, so a full variance pass over x = 1..X is O(X). The x variable
//! runs over integers (the table-generating convention; the integral
//! definition is approximated by this Riemann sum), and an empty window
//! contributes |m(F) h|^2 literally.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::kahan::KahanSum;
use crate::lfunc::{LFunctionSpec, VonMangoldtTable};
use crate::EULER_GAMMA;

const LOG_2PI: f64 = 1.837_877_066_409_345_6;

/// Window sum psi(x, h; F) over the half-open interval (x, x+h].
///
/// The upper endpoint is floor(x + h) evaluated in f64, matching the loop
/// bound `i <= x + h` that generated the reference tables.
pub fn psi(table: &VonMangoldtTable, x: u64, h: f64) -> Result<f64> {
    let upper = (x as f64 + h).floor();
    if upper < 0.0 || upper as u64 > table.limit() {
        return Err(Error::Capacity(format!(
            "window (x, x+h] = ({x}, {upper}] exceeds table limit {}",
            table.limit()
        )));
    }
    let prefix = table.prefix();
    Ok(prefix[upper as usize] - prefix[x as usize])
}

/// Var^fix(X, h; F) = (1/X) sum_{x=1..X} |psi(x, h; F) - m(F) h|^2.
pub fn var_fixed(table: &VonMangoldtTable, x_max: u64, h: f64) -> Result<f64> {
    if !(h >= 1.0) || h > x_max as f64 {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= h <= X, got h = {h}, X = {x_max}"
        )));
    }
    if x_max == 0 {
        return Err(Error::InvalidArgument("X must be positive".into()));
    }
    let last_window = (x_max as f64 + h).floor() as u64;
    if last_window > table.limit() {
        return Err(Error::Capacity(format!(
            "X + h = {last_window} exceeds table limit {}",
            table.limit()
        )));
    }
    let m = table.spec().polar_order() as f64;
    let prefix = table.prefix();
    let mut acc = KahanSum::new();
    for x in 1..=x_max {
        let upper = (x as f64 + h).floor() as usize;
        let d = (prefix[upper] - prefix[x as usize]) - m * h;
        acc.add(d * d);
    }
    Ok(acc.value() / x_max as f64)
}

/// Var^mul(X, delta; F) = (1/X) sum_{x=1..X} |psi(x, delta x; F) - m(F) delta x|^2.
pub fn var_mult(table: &VonMangoldtTable, x_max: u64, delta: f64) -> Result<f64> {
    if !(delta > 0.0 && delta <= 1.0) {
        return Err(Error::InvalidArgument(format!(
            "need 0 < delta <= 1, got {delta}"
        )));
    }
    let last_window = (x_max as f64 * (1.0 + delta)).floor() as u64;
    if x_max == 0 || last_window > table.limit() {
        return Err(Error::Capacity(format!(
            "X (1 + delta) = {last_window} exceeds table limit {}",
            table.limit()
        )));
    }
    let m = table.spec().polar_order() as f64;
    let prefix = table.prefix();
    let mut acc = KahanSum::new();
    for x in 1..=x_max {
        let h = delta * x as f64;
        let upper = (x as f64 + h).floor() as usize;
        let d = (prefix[upper] - prefix[x as usize]) - m * h;
        acc.add(d * d);
    }
    Ok(acc.value() / x_max as f64)
}

/// Degree-sensitive prediction for Var^fix / h:
/// deg(F) log(X/h) - deg(F) (log 2 pi + gamma) + log q(F).
pub fn predict_small_h(spec: &LFunctionSpec, x: f64, h: f64) -> f64 {
    let deg = spec.degree() as f64;
    deg * (x / h).ln() - deg * (LOG_2PI + EULER_GAMMA) + (spec.conductor() as f64).ln()
}

/// Universal (flat-regime) prediction for Var^fix / h:
/// (1/6) (6 log X - (3 + 8 log 2)).
pub fn predict_universal(_spec: &LFunctionSpec, x: f64) -> f64 {
    (6.0 * x.ln() - (3.0 + 8.0 * 2.0f64.ln())) / 6.0
}

/// Prediction for Var^mul in the small-delta regime:
/// (1/6) delta X (3 log X - 4 log 2).
pub fn predict_mul_small(_spec: &LFunctionSpec, x: f64, delta: f64) -> f64 {
    delta * x * (3.0 * x.ln() - 4.0 * 2.0f64.ln()) / 6.0
}

/// Prediction for Var^mul in the complementary regime:
/// (1/2) delta X (deg(F) log(1/delta) - deg(F)(log 2 pi + gamma - 1) + log q(F)).
pub fn predict_mul_universal(spec: &LFunctionSpec, x: f64, delta: f64) -> f64 {
    let deg = spec.degree() as f64;
    0.5 * delta
        * x
        * (deg * (1.0 / delta).ln() - deg * (LOG_2PI + EULER_GAMMA - 1.0)
            + (spec.conductor() as f64).ln())
}

/// The variance changes regime at h of order X^{1 - 1/deg(F)}.
pub fn crossover_h(spec: &LFunctionSpec, x: f64) -> f64 {
    x.powf(1.0 - 1.0 / spec.degree() as f64)
}

/// One scan row: empirical Var^fix / h next to both predictions.
#[derive(Debug, Clone)]
pub struct VarianceRow {
    pub h: f64,
    /// log(X / h)
    pub log_ratio: f64,
    /// Var^fix(X, h; F) / h
    pub empirical: f64,
    pub pred_small_h: f64,
    pub pred_universal: f64,
}

#[derive(Debug, Clone)]
pub struct VarianceSeries {
    pub spec: LFunctionSpec,
    pub x: u64,
    /// Rows in descending log_ratio (ascending h).
    pub rows: Vec<VarianceRow>,
}

/// The geometric h grid h = h_min, h_min * ratio, ... while h <= h_max,
/// generated by successive multiplication. That is what produced the
/// reference tables, so the h values carry the accumulated f64 rounding of
/// the process.
pub fn geometric_grid(h_min: f64, h_max: f64, ratio: f64) -> Result<Vec<f64>> {
    if !(ratio > 1.0) {
        return Err(Error::InvalidArgument(format!(
            "ratio must exceed 1, got {ratio}"
        )));
    }
    if h_min > h_max {
        return Err(Error::InvalidArgument(format!(
            "h_min = {h_min} exceeds h_max = {h_max}"
        )));
    }
    let mut grid = Vec::new();
    let mut h = h_min;
    while h <= h_max {
        grid.push(h);
        h *= ratio;
    }
    Ok(grid)
}

/// Scan a geometric h grid (see [`geometric_grid`]).
pub fn variance_scan(
    spec: &LFunctionSpec,
    table: &VonMangoldtTable,
    x_max: u64,
    h_min: f64,
    h_max: f64,
    ratio: f64,
) -> Result<VarianceSeries> {
    let grid = geometric_grid(h_min, h_max, ratio)?;
    variance_scan_with_grid(spec, table, x_max, &grid)
}

/// Scan an explicit h grid (ascending), one row per h.
pub fn variance_scan_with_grid(
    spec: &LFunctionSpec,
    table: &VonMangoldtTable,
    x_max: u64,
    grid: &[f64],
) -> Result<VarianceSeries> {
    if grid.is_empty() {
        return Err(Error::InvalidArgument("empty h grid".into()));
    }
    if spec != table.spec() {
        return Err(Error::InvalidArgument(
            "spec does not match the supplied table".into(),
        ));
    }
    let rows: Result<Vec<VarianceRow>> = grid
        .par_iter()
        .map(|&h| {
            let var = var_fixed(table, x_max, h)?;
            let x = x_max as f64;
            Ok(VarianceRow {
                h,
                log_ratio: (x / h).ln(),
                empirical: var / h,
                pred_small_h: predict_small_h(spec, x, h),
                pred_universal: predict_universal(spec, x),
            })
        })
        .collect();
    let rows = rows?;
    // Ascending h means strictly descending log_ratio.
    debug_assert!(rows.windows(2).all(|w| w[1].log_ratio < w[0].log_ratio));
    Ok(VarianceSeries {
        spec: spec.clone(),
        x: x_max,
        rows,
    })
}
