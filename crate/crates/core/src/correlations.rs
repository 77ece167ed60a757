//! Arithmetic pair correlations, the Hardy-Littlewood singular series, and
//! the smoothed-correlation asymptotics.
//!
//! C(r, N; F) = (1/N) sum_{n <= N} Lambda(n + r; F) Lambda*(n; F), tabulated
//! as running averages. Conjugation is the identity for the three implemented
//! families (real coefficients); the API keeps the conjugate semantics in its
//! name for future complex-coefficient sources.

use crate::error::{Error, Result};
use crate::kahan::KahanSum;
use crate::lfunc::{LFunctionSpec, VonMangoldtTable};

/// Running averages of Lambda(n + r; F) Lambda*(n; F).
#[derive(Debug, Clone)]
pub struct CorrelationSeries {
    pub spec: LFunctionSpec,
    pub r: u64,
    /// (N', C(r, N'; F)) at N' = step, 2 step, ..., N.
    pub checkpoints: Vec<(u64, f64)>,
    /// Hardy-Littlewood singular series for degree-1 specs (even r), if defined.
    pub hl_reference: Option<f64>,
}

impl CorrelationSeries {
    /// The last running average, C(r, N; F).
    pub fn final_value(&self) -> f64 {
        self.checkpoints.last().map(|&(_, v)| v).unwrap_or(0.0)
    }
}

/// Single-pass correlation scan with checkpoints every `step`.
pub fn correlation_scan(
    table: &VonMangoldtTable,
    r: u64,
    n_max: u64,
    step: u64,
) -> Result<CorrelationSeries> {
    if step < 1 {
        return Err(Error::InvalidArgument("step must be >= 1".into()));
    }
    if n_max < 1 {
        return Err(Error::InvalidArgument("N must be >= 1".into()));
    }
    if n_max + r > table.limit() {
        return Err(Error::Capacity(format!(
            "N + r = {} exceeds table limit {}",
            n_max + r,
            table.limit()
        )));
    }
    let values = table.values();
    let mut acc = KahanSum::new();
    let mut checkpoints = Vec::with_capacity((n_max / step) as usize + 1);
    for n in 1..=n_max {
        acc.add(values[(n + r) as usize] * values[n as usize]);
        if n % step == 0 || n == n_max {
            checkpoints.push((n, acc.value() / n as f64));
        }
    }
    let spec = table.spec().clone();
    let hl_reference = if spec.degree() == 1 && r != 0 {
        Some(singular_series(r as i64, DEFAULT_SINGULAR_CUTOFF)?.value)
    } else {
        None
    };
    Ok(CorrelationSeries {
        spec,
        r,
        checkpoints,
        hl_reference,
    })
}

const DEFAULT_SINGULAR_CUTOFF: u64 = 1_000_000;

/// The Hardy-Littlewood singular series at shift r, from the truncated Euler
/// product.
#[derive(Debug, Clone)]
pub struct SingularSeries {
    pub r: i64,
    /// 2 prod_{2 < p <= cutoff} (1 - 1/(p-1)^2), the twin-prime constant.
    pub twin_constant: f64,
    /// Zero for odd r, twin_constant * prod_{q | r, q > 2} (q-1)/(q-2) for even r.
    pub value: f64,
    pub prime_cutoff: u64,
    /// Bound on the neglected tail: sum_{p > cutoff} (p-1)^{-2} < 1/(cutoff-1).
    pub tail_bound: f64,
}

/// Evaluate the singular series with primes up to `prime_cutoff`.
pub fn singular_series(r: i64, prime_cutoff: u64) -> Result<SingularSeries> {
    if r == 0 {
        return Err(Error::InvalidArgument(
            "singular series is defined for nonzero shifts".into(),
        ));
    }
    if prime_cutoff < 3 {
        return Err(Error::InvalidArgument("prime cutoff must be >= 3".into()));
    }
    let mut product = 1.0f64;
    sieve_odd_primes(prime_cutoff, |p| {
        let pm1 = (p - 1) as f64;
        product *= 1.0 - 1.0 / (pm1 * pm1);
    });
    let twin_constant = 2.0 * product;
    let tail_bound = 1.0 / (prime_cutoff - 1) as f64;
    let value = if r % 2 != 0 {
        0.0
    } else {
        let mut v = twin_constant;
        for q in odd_prime_divisors(r.unsigned_abs()) {
            v *= (q - 1) as f64 / (q - 2) as f64;
        }
        v
    };
    Ok(SingularSeries {
        r,
        twin_constant,
        value,
        prime_cutoff,
        tail_bound,
    })
}

/// Plain bitset sieve calling `f` on every odd prime <= limit.
fn sieve_odd_primes(limit: u64, mut f: impl FnMut(u64)) {
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut i = 3usize;
    while i * i <= n {
        if !composite[i] {
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += 2 * i;
            }
        }
        i += 2;
    }
    let mut k = 3usize;
    while k <= n {
        if !composite[k] {
            f(k as u64);
        }
        k += 2;
    }
}

fn odd_prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    while n % 2 == 0 {
        n /= 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 2;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Averaged Hardy-Littlewood asymptotic 1 - log|r| / (2|r|), the large-|r|
/// behaviour of the window-averaged singular series.
pub fn averaged_hl_asymptotic(r: i64) -> Result<f64> {
    let a = r.unsigned_abs();
    if a < 2 {
        return Err(Error::InvalidArgument("need |r| >= 2".into()));
    }
    let a = a as f64;
    Ok(1.0 - a.ln() / (2.0 * a))
}

/// Smoothed correlation asymptotic -deg(F) Si(r) / (pi r).
pub fn smoothed_correlation_asymptotic(spec: &LFunctionSpec, r: f64) -> Result<f64> {
    if r == 0.0 {
        return Err(Error::InvalidArgument(
            "the smoothed asymptotic is stated for r != 0".into(),
        ));
    }
    Ok(-(spec.degree() as f64) * sine_integral(r) / (std::f64::consts::PI * r))
}

/// The universal sine kernel 1 - (sin pi x / (pi x))^2, with the removable
/// singularity at 0 filled in.
pub fn sine_kernel(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    let px = std::f64::consts::PI * x;
    let s = px.sin() / px;
    1.0 - s * s
}

/// Sine integral Si(x) = int_0^x sin t / t dt.
///
/// Power series for |x| <= 4, adaptive Simpson quadrature for the middle
/// range, asymptotic expansion beyond |x| = 25. Absolute error below 1e-10
/// throughout.
pub fn sine_integral(x: f64) -> f64 {
    if x < 0.0 {
        return -sine_integral(-x);
    }
    if x == 0.0 {
        0.0
    } else if x <= 4.0 {
        si_series(x)
    } else if x <= 25.0 {
        si_series(4.0) + adaptive_simpson(sinc, 4.0, x, 1e-13, 40)
    } else {
        si_asymptotic(x)
    }
}

/// Cosine integral Ci(x) = gamma + log x + int_0^x (cos t - 1)/t dt, x > 0.
///
/// Used by the 1-line zeta evaluators; series for small x (where it is
/// cancellation-free), quadrature for the middle range, asymptotic beyond 25.
pub fn cosine_integral(x: f64) -> Result<f64> {
    if x <= 0.0 {
        return Err(Error::Domain("Ci requires x > 0".into()));
    }
    if x <= 2.0 {
        Ok(ci_series(x))
    } else if x <= 25.0 {
        Ok(ci_series(2.0) + adaptive_simpson(|t| t.cos() / t, 2.0, x, 1e-13, 40))
    } else {
        let (f, g) = si_fg(x);
        Ok(f * x.sin() - g * x.cos())
    }
}

/// Ci(x) = gamma + ln x + sum_{k>=1} (-x^2)^k / (2k (2k)!), safe for x <= 2.
fn ci_series(x: f64) -> f64 {
    let mut sum = 0.0f64;
    let mut term = 1.0f64; // x^{2k} / (2k)!
    let x2 = x * x;
    for k in 1..60 {
        term *= x2 / ((2 * k - 1) as f64 * (2 * k) as f64);
        let contrib = if k % 2 == 0 { term } else { -term } / (2 * k) as f64;
        sum += contrib;
        if term / ((2 * k) as f64) < 1e-18 {
            break;
        }
    }
    crate::EULER_GAMMA + x.ln() + sum
}

fn sinc(t: f64) -> f64 {
    if t.abs() < 1e-8 {
        1.0 - t * t / 6.0
    } else {
        t.sin() / t
    }
}

/// Si(x) = sum_{k>=0} (-1)^k x^{2k+1} / ((2k+1)(2k+1)!).
fn si_series(x: f64) -> f64 {
    let mut sum = x;
    let mut term = x; // x^{2k+1} / (2k+1)!
    let x2 = x * x;
    for k in 1..60 {
        term *= -x2 / ((2 * k) as f64 * (2 * k + 1) as f64);
        let contrib = term / (2 * k + 1) as f64;
        sum += contrib;
        if contrib.abs() < 1e-17 {
            break;
        }
    }
    sum
}

/// Si(x) = pi/2 - f(x) cos x - g(x) sin x for large x, with the standard
/// divergent expansions of f and g truncated at their smallest term.
fn si_asymptotic(x: f64) -> f64 {
    let (f, g) = si_fg(x);
    std::f64::consts::FRAC_PI_2 - f * x.cos() - g * x.sin()
}

/// Auxiliary asymptotic series f(x) ~ (1/x) sum (-1)^k (2k)!/x^{2k} and
/// g(x) ~ (1/x^2) sum (-1)^k (2k+1)!/x^{2k}.
fn si_fg(x: f64) -> (f64, f64) {
    let x2 = x * x;
    let mut f = 0.0f64;
    let mut g = 0.0f64;
    let mut term_f = 1.0 / x;
    let mut term_g = 1.0 / x2;
    let mut prev_f = f64::INFINITY;
    for k in 0..40 {
        if term_f.abs() > prev_f {
            break; // divergence point reached
        }
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        f += sign * term_f;
        g += sign * term_g;
        prev_f = term_f.abs();
        let k2 = (2 * k + 1) as f64;
        term_f *= k2 * (k2 + 1.0) / x2;
        term_g *= (k2 + 1.0) * (k2 + 2.0) / x2;
    }
    (f, g)
}

fn adaptive_simpson(f: impl Fn(f64) -> f64 + Copy, a: f64, b: f64, tol: f64, depth: u32) -> f64 {
    let c = 0.5 * (a + b);
    let (fa, fb, fc) = (f(a), f(b), f(c));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fc + fb);
    simpson_step(f, a, b, fa, fb, fc, whole, tol, depth)
}

#[allow(clippy::too_many_arguments)]
fn simpson_step(
    f: impl Fn(f64) -> f64 + Copy,
    a: f64,
    b: f64,
    fa: f64,
    fb: f64,
    fc: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let c = 0.5 * (a + b);
    let d = 0.5 * (a + c);
    let e = 0.5 * (c + b);
    let (fd, fe) = (f(d), f(e));
    let left = (c - a) / 6.0 * (fa + 4.0 * fd + fc);
    let right = (b - c) / 6.0 * (fc + 4.0 * fe + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        left + right + delta / 15.0
    } else {
        simpson_step(f, a, c, fa, fc, fd, left, tol / 2.0, depth - 1)
            + simpson_step(f, c, b, fc, fb, fe, right, tol / 2.0, depth - 1)
    }
}
