//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! with the measured numbers. Run with
//!
//!     cargo test -p lstat-cli --test acceptance -- --nocapture
//!
//! The criteria pin reference values from the published variance and
//! correlation tables; tolerances are stated next to each assertion.

mod reference;

use std::path::PathBuf;
use std::process::Command;
use std::sync::Mutex;
use std::time::Instant;

use lstat_core::arith::{gcd, ramanujan_sum, PrimeTable};
use lstat_core::correlations::{
    correlation_scan, sine_integral, sine_kernel, singular_series,
};
use lstat_core::lfunc::{
    elliptic_coefficients, tau_values, von_mangoldt_table, LFunctionSpec,
};
use lstat_core::variance::{predict_universal, var_fixed, var_mult, variance_scan};
use lstat_core::zerostats::{load_zeros, pair_correlation_f, r2_diagonal_rescaled, r2_offdiagonal_rescaled};

use reference::{TAU_VARIANCE_TABLE, ZETA_H_GRID, ZETA_VARIANCE_TABLE};

// Criteria run one at a time so the stated runtime budgets are meaningful.
static GATE: Mutex<()> = Mutex::new(());

fn serial() -> std::sync::MutexGuard<'static, ()> {
    GATE.lock().unwrap_or_else(|poisoned| poisoned.into_inner())
}

fn lstat_bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lstat"))
}

fn workspace_tmp(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("lstat-accept-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn zeros_fixture() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/data/zeta_zeros_1e4.txt")
}

/// Parse the first two CSV columns of a scan output.
fn read_csv_2col(path: &std::path::Path) -> Vec<(f64, f64)> {
    std::fs::read_to_string(path)
        .unwrap()
        .lines()
        .filter(|l| !l.starts_with('#') && !l.starts_with("log") && !l.starts_with('N'))
        .map(|l| {
            let mut it = l.split(',');
            let a = it.next().unwrap().parse().unwrap();
            let b = it.next().unwrap().parse().unwrap();
            (a, b)
        })
        .collect()
}

fn least_squares_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let sx: f64 = points.iter().map(|p| p.0).sum();
    let sy: f64 = points.iter().map(|p| p.1).sum();
    let sxx: f64 = points.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = points.iter().map(|p| p.0 * p.1).sum();
    (n * sxy - sx * sy) / (n * sxx - sx * sx)
}

/// Criterion 1: zeta correlations at shifts 2 and 6 reproduce the reference
/// final values at N = 10^6 to 1e-6, in under 5 s.
#[test]
fn criterion_1_zeta_correlation_reproduction() {
    let _g = serial();
    let start = Instant::now();
    let dir = workspace_tmp("c1");
    let base = dir.join("corr.csv");
    let status = lstat_bin()
        .args([
            "correlate", "--spec", "zeta", "--r", "2,6", "--n", "1000000",
            "--step", "10000", "--output",
        ])
        .arg(&base)
        .status()
        .unwrap();
    assert!(status.success());
    let c2 = read_csv_2col(&dir.join("corr_r2.csv"));
    let c6 = read_csv_2col(&dir.join("corr_r6.csv"));
    let elapsed = start.elapsed().as_secs_f64();
    let (n2, v2) = *c2.last().unwrap();
    let (n6, v6) = *c6.last().unwrap();
    assert_eq!((n2, n6), (1e6, 1e6));
    assert!((v2 - 1.312844345).abs() < 1e-6, "C(2, 1e6) = {v2}");
    assert!((v6 - 2.631198767).abs() < 1e-6, "C(6, 1e6) = {v6}");
    assert!(elapsed < 5.0, "runtime {elapsed:.2} s exceeds 5 s");
    println!(
        "acceptance 1: PASS  C(2,1e6) = {v2:.9} (ref 1.312844345), \
         C(6,1e6) = {v6:.9} (ref 2.631198767), {elapsed:.2} s"
    );
    std::fs::remove_dir_all(&dir).ok();
}

/// Criterion 2: Hardy-Littlewood reference: singular series value, exact
/// doubling at r = 6, and closeness of C(2, 1e6; zeta), in under 1 s for the
/// series itself.
#[test]
fn criterion_2_hardy_littlewood_reference() {
    let _g = serial();
    let start = Instant::now();
    let s2 = singular_series(2, 1_000_000).unwrap();
    let s6 = singular_series(6, 1_000_000).unwrap();
    let series_elapsed = start.elapsed().as_secs_f64();
    assert!((s2.value - 1.32032).abs() < 1e-4, "S(2) = {}", s2.value);
    assert_eq!(s6.value, 2.0 * s2.value, "S(6) must be exactly 2 S(2)");
    assert!(series_elapsed < 1.0, "runtime {series_elapsed:.2} s exceeds 1 s");

    let pt = PrimeTable::sieve(1_000_010).unwrap();
    let table = von_mangoldt_table(&LFunctionSpec::zeta(), None, &pt, 1_000_010).unwrap();
    let c2 = correlation_scan(&table, 2, 1_000_000, 1_000_000)
        .unwrap()
        .final_value();
    assert!(
        (c2 - s2.value).abs() < 0.01,
        "|C(2,1e6) - S(2)| = {}",
        (c2 - s2.value).abs()
    );
    println!(
        "acceptance 2: PASS  S(2) = {:.7} (tail < {:.1e}), S(6) = 2 S(2) exactly, \
         |C(2,1e6) - S(2)| = {:.5}, series in {series_elapsed:.3} s",
        s2.value,
        s2.tail_bound,
        (c2 - s2.value).abs()
    );
}

/// Criterion 3: the full 36-row zeta variance table at X = 15e6 reproduces
/// the reference (log X/h, Var/h) rows to 1e-6 relative (fallback 0.5%),
/// within 60 s and 300 MB.
#[test]
fn criterion_3_zeta_variance_table() {
    let _g = serial();
    let start = Instant::now();
    let dir = workspace_tmp("c3");
    let out = dir.join("zeta_var.csv");
    let h_list = ZETA_H_GRID
        .iter()
        .map(|h| h.to_string())
        .collect::<Vec<_>>()
        .join(",");
    let status = lstat_bin()
        .args(["variance", "--spec", "zeta", "--x", "15000000", "--h-list"])
        .arg(&h_list)
        .arg("--output")
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let elapsed = start.elapsed().as_secs_f64();
    let peak_mb = children_peak_rss_mb();

    let rows = read_csv_2col(&out);
    assert_eq!(rows.len(), 36);
    let mut worst = 0.0f64;
    for ((lr, v), (ref_lr, ref_v)) in rows.iter().zip(ZETA_VARIANCE_TABLE) {
        assert!((lr - ref_lr).abs() < 1e-12 * ref_lr.abs(), "grid drift at {ref_lr}");
        let rel = (v - ref_v).abs() / ref_v.abs();
        worst = worst.max(rel);
        assert!(
            rel < 5e-3,
            "row log(X/h) = {ref_lr}: {v} vs {ref_v} (rel {rel:.2e})"
        );
    }
    let strict = worst < 1e-6;
    assert!(
        strict,
        "fallback engaged: worst relative error {worst:.2e} exceeds 1e-6"
    );
    assert!(elapsed < 60.0, "runtime {elapsed:.1} s exceeds 60 s");
    assert!(
        peak_mb < 300.0,
        "peak child RSS {peak_mb:.0} MB exceeds 300 MB"
    );
    println!(
        "acceptance 3: PASS  36/36 rows within 1e-6 (worst {worst:.1e}), \
         {elapsed:.1} s, {peak_mb:.0} MB"
    );
    std::fs::remove_dir_all(&dir).ok();
}

/// Peak resident set over reaped child processes, in MB.
fn children_peak_rss_mb() -> f64 {
    // ru_maxrss is in kilobytes on Linux.
    let mut usage = std::mem::MaybeUninit::<libc::rusage>::uninit();
    let rc = unsafe { libc::getrusage(libc::RUSAGE_CHILDREN, usage.as_mut_ptr()) };
    assert_eq!(rc, 0);
    let usage = unsafe { usage.assume_init() };
    usage.ru_maxrss as f64 / 1024.0
}

/// Criterion 4: the 49-row Ramanujan tau variance table at X = 10^6
/// reproduces the reference to 1e-6 (fallback 0.5%) in under 120 s, and the
/// fitted slopes match the stated regime windows.
///
/// The reference data itself has least-squares slope ~1.38 over
/// log(X/h) in [7.5, 9.2], so the < 0.4 flatness assertion below cannot hold
/// together with the (satisfied) row-reproduction assertion; it is kept as
/// stated and fails honestly.
#[test]
fn criterion_4_tau_variance_regimes() {
    let _g = serial();
    let start = Instant::now();
    let dir = workspace_tmp("c4");
    let out = dir.join("tau_var.csv");
    let status = lstat_bin()
        .args([
            "variance", "--spec", "tau", "--x", "1000000", "--h-min", "100",
            "--h-max", "10000", "--ratio", "1.1", "--output",
        ])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let elapsed = start.elapsed().as_secs_f64();
    assert!(elapsed < 120.0, "runtime {elapsed:.1} s exceeds 120 s");

    let rows = read_csv_2col(&out);
    assert_eq!(rows.len(), 49);
    let mut worst = 0.0f64;
    for ((lr, v), (ref_lr, ref_v)) in rows.iter().zip(TAU_VARIANCE_TABLE) {
        assert!((lr - ref_lr).abs() < 1e-12 * ref_lr.abs());
        let rel = (v - ref_v).abs() / ref_v.abs();
        worst = worst.max(rel);
        assert!(rel < 5e-3, "row {ref_lr}: {v} vs {ref_v}");
    }
    assert!(worst < 1e-6, "worst relative error {worst:.2e}");
    println!("acceptance 4: rows 49/49 within 1e-6 (worst {worst:.1e}), {elapsed:.1} s");

    let window: Vec<(f64, f64)> = rows
        .iter()
        .copied()
        .filter(|&(lr, _)| (4.6..=6.0).contains(&lr))
        .collect();
    let steep = least_squares_slope(&window);
    assert!(
        (1.4..=2.6).contains(&steep),
        "slope over [4.6, 6.0] = {steep:.3}"
    );
    println!("acceptance 4: slope over [4.6, 6.0] = {steep:.3} in [1.4, 2.6]");

    let flat_window: Vec<(f64, f64)> = rows
        .iter()
        .copied()
        .filter(|&(lr, _)| (7.5..=9.2).contains(&lr))
        .collect();
    let flat = least_squares_slope(&flat_window);
    std::fs::remove_dir_all(&dir).ok();
    println!(
        "acceptance 4: flat-regime slope over [7.5, 9.2] = {flat:.3} \
         (required < 0.4; the reference rows being reproduced have this slope, \
         so the requirement is unsatisfiable as stated)"
    );
    assert!(
        flat < 0.4,
        "slope over [7.5, 9.2] = {flat:.3}; the reproduced reference table \
         itself slopes at ~1.38 here, so this bound contradicts the \
         row-reproduction requirement of the same criterion"
    );
}

/// Criterion 5: conductor-27 and conductor-37 scans at X = 10^5 sit within
/// +-1.0 of the universal prediction in the flat regime.
#[test]
fn criterion_5_elliptic_universality() {
    let _g = serial();
    let start = Instant::now();
    let x_max = 100_000u64;
    let limit = x_max + 2_001;
    let pt = PrimeTable::sieve(limit).unwrap();
    let pred = predict_universal(&LFunctionSpec::ramanujan_tau(), x_max as f64);
    let mut levels = Vec::new();
    for (w, conductor) in [([0i64, 0, 1, 0, -7], 27u64), ([0, 0, 1, -1, 0], 37)] {
        let spec = LFunctionSpec::elliptic_curve(w, conductor).unwrap();
        let coeffs = elliptic_coefficients(w, conductor, limit).unwrap();
        let table = von_mangoldt_table(&spec, Some(&coeffs), &pt, limit).unwrap();
        let series = variance_scan(&spec, &table, x_max, 10.0, 2000.0, 1.1).unwrap();
        // Flat regime: h well below the crossover X^{1/2} ~ 316.
        let flat: Vec<f64> = series
            .rows
            .iter()
            .filter(|r| (5.8..=7.5).contains(&r.log_ratio))
            .map(|r| r.empirical)
            .collect();
        let level = flat.iter().sum::<f64>() / flat.len() as f64;
        assert!(
            (level - pred).abs() <= 1.0,
            "conductor {conductor}: flat level {level:.3} vs prediction {pred:.3}"
        );
        levels.push((conductor, level));
    }
    let elapsed = start.elapsed().as_secs_f64();
    println!(
        "acceptance 5: PASS  prediction {pred:.4}; flat levels {} ({elapsed:.1} s)",
        levels
            .iter()
            .map(|(c, l)| format!("N={c}: {l:.4}"))
            .collect::<Vec<_>>()
            .join(", ")
    );
}

/// Criterion 5, slow variant: full X = 10^6 reproduction of the reference
/// elliptic variance tables through the coefficient cache (tens of minutes).
#[test]
#[ignore = "tens of minutes: elliptic point counting to 1.01e6"]
fn criterion_5_slow_elliptic_tables_x_1e6() {
    let _g = serial();
    let dir = workspace_tmp("c5slow");
    let cache = dir.join("cache");
    for (w, conductor, reference) in [
        ("0,0,1,0,-7", 27u64, reference::E27_VARIANCE_TABLE),
        ("0,0,1,-1,0", 37, reference::E37_VARIANCE_TABLE),
    ] {
        let status = lstat_bin()
            .args(["coeffs", "--spec", "ec", "--weierstrass", w])
            .args(["--conductor", &conductor.to_string()])
            .args(["--limit", "1010000", "--cache-dir"])
            .arg(&cache)
            .status()
            .unwrap();
        assert!(status.success());
        let out = dir.join(format!("ec{conductor}.csv"));
        let status = lstat_bin()
            .args(["variance", "--spec", "ec", "--weierstrass", w])
            .args(["--conductor", &conductor.to_string()])
            .args(["--x", "1000000", "--h-min", "100", "--h-max", "10000"])
            .args(["--ratio", "1.1", "--cache-dir"])
            .arg(&cache)
            .arg("--output")
            .arg(&out)
            .status()
            .unwrap();
        assert!(status.success());
        let rows = read_csv_2col(&out);
        assert_eq!(rows.len(), reference.len());
        let mut worst = 0.0f64;
        for ((_, v), (_, ref_v)) in rows.iter().zip(reference) {
            let rel = (v - ref_v).abs() / ref_v.abs();
            worst = worst.max(rel);
            assert!(rel < 5e-3, "conductor {conductor}: {v} vs {ref_v}");
        }
        println!(
            "acceptance 5 (slow): conductor {conductor} within 0.5% (worst {worst:.2e})"
        );
    }
    std::fs::remove_dir_all(&dir).ok();
}

/// Criterion 6: F(X, T) on the 10^4-zero fixture equals the brute-force
/// oracle on 500-zero subsets to 1e-9, and the normalized statistic at X = T
/// lies in [0.9, 1.1]; under 30 s.
#[test]
fn criterion_6_pair_correlation() {
    let _g = serial();
    let start = Instant::now();
    let zd = load_zeros(&zeros_fixture()).unwrap();
    assert!(zd.count() >= 10_000);

    // Brute-force oracle on two 500-zero subsets.
    for skip in [0usize, 5000] {
        let subset = lstat_core::zerostats::ZeroData::from_ordinates(
            zd.ordinates()[skip..skip + 500].to_vec(),
            "subset",
        )
        .unwrap();
        let t = subset.max_ordinate();
        let x = 50.0;
        let got = pair_correlation_f(&subset, x, t).unwrap().f_value;
        let zeros = &subset.ordinates()[..subset.count_below(t)];
        let logx = x.ln();
        let mut oracle = 0.0f64;
        for &gm in zeros {
            for &gn in zeros {
                let u = gm - gn;
                oracle += (u * logx).cos() * 4.0 / (4.0 + u * u);
            }
        }
        assert!(
            (got - oracle).abs() < 1e-9 * oracle.abs(),
            "subset at {skip}: {got} vs {oracle}"
        );
    }

    // Montgomery regime: X = T on the full fixture.
    let t = zd.max_ordinate();
    let result = pair_correlation_f(&zd, t, t).unwrap();
    assert!(
        (0.9..=1.1).contains(&result.normalized),
        "normalized F(T, T) = {}",
        result.normalized
    );
    let elapsed = start.elapsed().as_secs_f64();
    assert!(elapsed < 30.0, "runtime {elapsed:.1} s exceeds 30 s");
    println!(
        "acceptance 6: PASS  oracle match on 500-zero subsets; normalized \
         F(T,T) = {:.4} with T = {t:.1}, N = {} ({elapsed:.1} s)",
        result.normalized, result.zero_count
    );
}

/// Criterion 7: rescaled 2-point model converges to the universal forms
/// within 5% at density scale 2 pi * 10; Si and the sine kernel match their
/// oracles to 1e-10; under 5 s.
#[test]
fn criterion_7_universal_limits_and_special_functions() {
    let _g = serial();
    let start = Instant::now();
    let pi = std::f64::consts::PI;
    let scale = 2.0 * pi * 10.0;
    for x in [0.5f64, 1.0, 2.0] {
        let target_d = -1.0 / (2.0 * pi * pi * x * x);
        let target_o = (2.0 * pi * x).cos() / (2.0 * pi * pi * x * x);
        let d = r2_diagonal_rescaled(x, scale, 100_000).unwrap();
        let o = r2_offdiagonal_rescaled(x, scale, 100_000).unwrap();
        assert!(
            (d - target_d).abs() < 0.05 * target_d.abs(),
            "diagonal x = {x}: {d} vs {target_d}"
        );
        assert!(
            (o - target_o).abs() < 0.05 * target_o.abs(),
            "off-diagonal x = {x}: {o} vs {target_o}"
        );
    }

    // Frozen high-precision reference values.
    for (x, expect) in [
        (1.0, 0.94608307036718301494),
        (std::f64::consts::PI, 1.8519370519824661704),
        (10.0, 1.6583475942188740493),
        (100.0, 1.5622254668890562934),
    ] {
        assert!((sine_integral(x) - expect).abs() < 1e-10, "Si({x})");
    }
    // Sine kernel against direct evaluation on a grid.
    let mut x = -10.0;
    while x <= 10.0 {
        let direct = if x == 0.0 {
            0.0
        } else {
            1.0 - ((pi * x).sin() / (pi * x)).powi(2)
        };
        assert!((sine_kernel(x) - direct).abs() < 1e-10);
        x += 0.125;
    }
    let elapsed = start.elapsed().as_secs_f64();
    assert!(elapsed < 5.0, "runtime {elapsed:.1} s exceeds 5 s");
    println!(
        "acceptance 7: PASS  rescaled diagonal/off-diagonal within 5% at \
         density scale 20 pi; Si and sine kernel at 1e-10 ({elapsed:.2} s)"
    );
}

/// Criterion 8: oracle equivalence batteries, under 10 s.
#[test]
fn criterion_8_oracle_batteries() {
    let _g = serial();
    let start = Instant::now();

    // var_fixed / var_mult vs naive double loops at X <= 10^3.
    let pt = PrimeTable::sieve(2100).unwrap();
    let zeta_table = von_mangoldt_table(&LFunctionSpec::zeta(), None, &pt, 2100).unwrap();
    let values = zeta_table.values();
    for (x_max, h) in [(1000u64, 7.0f64), (1000, 50.0), (317, 13.5)] {
        let fast = var_fixed(&zeta_table, x_max, h).unwrap();
        let mut total = 0.0;
        for x in 1..=x_max {
            let mut psi = 0.0;
            let mut n = x + 1;
            while (n as f64) <= x as f64 + h {
                psi += values[n as usize];
                n += 1;
            }
            total += (psi - h) * (psi - h);
        }
        let slow = total / x_max as f64;
        assert!((fast - slow).abs() <= 1e-9 * slow.max(1.0));
    }
    for (x_max, delta) in [(1000u64, 0.05f64), (900, 0.31)] {
        let fast = var_mult(&zeta_table, x_max, delta).unwrap();
        let mut total = 0.0;
        for x in 1..=x_max {
            let h = delta * x as f64;
            let mut psi = 0.0;
            let mut n = x + 1;
            while (n as f64) <= x as f64 + h {
                psi += values[n as usize];
                n += 1;
            }
            total += (psi - h) * (psi - h);
        }
        let slow = total / x_max as f64;
        assert!((fast - slow).abs() <= 1e-9 * slow.max(1.0));
    }

    // Ramanujan sums vs the direct exponential definition for all n <= 10^4.
    let pt_r = PrimeTable::sieve(10_000).unwrap();
    for n in 1..=10_000u64 {
        let exact = ramanujan_sum(4, n, &pt_r).unwrap();
        let mut direct = 0.0f64;
        for l in 1..=n {
            if gcd(l, n) == 1 {
                direct += (std::f64::consts::TAU * l as f64 * 4.0 / n as f64).cos();
            }
        }
        assert!(
            (direct - exact as f64).abs() < 1e-6,
            "c(4, {n}): {exact} vs {direct}"
        );
    }

    // a_p vs the short-Weierstrass Legendre sum for p <= 200, three curves.
    for (w, conductor) in [
        ([0i64, -1, 1, -10, -20], 11u64),
        ([0, 0, 1, 0, -7], 27),
        ([0, 0, 1, -1, 0], 37),
    ] {
        let coeffs = elliptic_coefficients(w, conductor, 200).unwrap();
        for &(p, ap) in coeffs.raw() {
            if p < 5 || conductor % p == 0 {
                continue;
            }
            assert_eq!(ap as i64, legendre_ap(w, p), "curve {w:?} at p = {p}");
        }
    }

    // tau congruence mod 691 for n <= 10^3.
    let tau = tau_values(1000).unwrap();
    for n in 1u64..=1000 {
        let mut sigma = 0u64;
        for d in 1..=n {
            if n % d == 0 {
                sigma = (sigma + pow_mod(d % 691, 11, 691)) % 691;
            }
        }
        assert_eq!(tau[n as usize].rem_euclid(691) as u64, sigma);
    }

    let elapsed = start.elapsed().as_secs_f64();
    assert!(elapsed < 10.0, "runtime {elapsed:.1} s exceeds 10 s");
    println!(
        "acceptance 8: PASS  variance, Ramanujan-sum, a_p and tau oracle \
         batteries all exact/1e-9 ({elapsed:.1} s)"
    );
}

fn legendre_ap(w: [i64; 5], p: u64) -> i64 {
    let [a1, a2, a3, a4, a6] = w.map(i128::from);
    let b2 = a1 * a1 + 4 * a2;
    let b4 = 2 * a4 + a1 * a3;
    let b6 = a3 * a3 + 4 * a6;
    let c4 = b2 * b2 - 24 * b4;
    let c6 = -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6;
    let m = p as i128;
    let a = (-27 * c4).rem_euclid(m) as u128;
    let b = (-54 * c6).rem_euclid(m) as u128;
    let mut sum = 0i64;
    for x in 0..p as u128 {
        let fx = (x * x % p as u128 * x + a * x + b) % p as u128;
        sum += legendre_symbol(fx as u64, p);
    }
    -sum
}

fn legendre_symbol(a: u64, p: u64) -> i64 {
    if a % p == 0 {
        return 0;
    }
    if pow_mod(a, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

fn pow_mod(b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u128;
    let mm = m as u128;
    let mut bb = b as u128 % mm;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * bb % mm;
        }
        bb = bb * bb % mm;
        e >>= 1;
    }
    acc as u64
}
