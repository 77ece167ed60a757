//! Montgomery's pair-correlation statistic over ingested zero ordinates and
//! the closed-form 2-point correlation model for zeta.
//!
//! F(X, T) = sum_{m,n} X^{i(g_m - g_n)} w(g_m - g_n) over ordinates
//! 0 < g < T with w(u) = 4/(4 + u^2). The sum is real by m <-> n symmetry and
//! is evaluated as diagonal + 2 sum_{m < n} cos((g_n - g_m) log X) w(g_n - g_m).
//!
//! The model evaluators work on the 1-line. Truncated prime sums carry an
//! explicit main-term tail correction: the contributions of primes beyond the
//! cutoff are approximated by the PNT integrals, whose regularized closed
//! forms involve Si and Ci. What remains is the fluctuation of psi(t) - t
//! beyond the cutoff, which is orders of magnitude below the model's use.

use std::path::Path;
use std::sync::Mutex;

use rayon::prelude::*;

use crate::correlations::{cosine_integral, sine_integral};
use crate::error::{Error, Result};
use crate::kahan::KahanSum;
use crate::lfunc::LFunctionSpec;

const TWO_PI: f64 = std::f64::consts::TAU;
const FRAC_PI_2: f64 = std::f64::consts::FRAC_PI_2;

/// Sorted positive zero ordinates (heights on the critical line).
#[derive(Debug, Clone)]
pub struct ZeroData {
    ordinates: Vec<f64>,
    source_path: String,
}

impl ZeroData {
    /// Validate and wrap a list of ordinates.
    ///
    /// Requires strictly increasing positive values. When the data spans past
    /// T = 100 from a low starting point, the count is checked against the
    /// mean-density prediction (T/2pi) log(T/2pi) - T/2pi within 5%.
    pub fn from_ordinates(ordinates: Vec<f64>, source_path: impl Into<String>) -> Result<Self> {
        if ordinates.is_empty() {
            return Err(Error::DataIntegrity("no zero ordinates".into()));
        }
        if ordinates[0] <= 0.0 {
            return Err(Error::DataIntegrity(
                "zero ordinates must be positive".into(),
            ));
        }
        for w in ordinates.windows(2) {
            if w[1] <= w[0] {
                return Err(Error::DataIntegrity(format!(
                    "ordinates not strictly increasing near {}",
                    w[0]
                )));
            }
        }
        let data = Self {
            ordinates,
            source_path: source_path.into(),
        };
        let max = data.max_ordinate();
        if data.ordinates[0] < 100.0 && max > 100.0 {
            for t in [100.0, max] {
                let expected = riemann_von_mangoldt(t);
                let count = data.count_below(t) as f64;
                if (count - expected).abs() > 0.05 * expected {
                    return Err(Error::DataIntegrity(format!(
                        "zero count {count} at T = {t} is more than 5% from the \
                         mean-density prediction {expected:.1}"
                    )));
                }
            }
        }
        Ok(data)
    }

    pub fn ordinates(&self) -> &[f64] {
        &self.ordinates
    }

    pub fn count(&self) -> usize {
        self.ordinates.len()
    }

    pub fn source_path(&self) -> &str {
        &self.source_path
    }

    pub fn max_ordinate(&self) -> f64 {
        *self.ordinates.last().unwrap()
    }

    /// Number of ordinates strictly below t.
    pub fn count_below(&self, t: f64) -> usize {
        self.ordinates.partition_point(|&g| g < t)
    }

    /// A prefix of the data, for oracle comparisons on subsets.
    pub fn head(&self, n: usize) -> Result<Self> {
        Self::from_ordinates(
            self.ordinates.iter().take(n).copied().collect(),
            format!("{}[..{n}]", self.source_path),
        )
    }
}

/// N(T) ~ (T/2pi) log(T/2pi) - T/2pi.
fn riemann_von_mangoldt(t: f64) -> f64 {
    let u = t / TWO_PI;
    u * u.ln() - u
}

/// Read one decimal ordinate per line; `#` starts a comment line.
pub fn load_zeros(path: &Path) -> Result<ZeroData> {
    let text = std::fs::read_to_string(path)?;
    let mut ordinates = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let v: f64 = line.parse().map_err(|_| Error::Parse {
            line: idx + 1,
            message: format!("expected a decimal ordinate, got {line:?}"),
        })?;
        ordinates.push(v);
    }
    ZeroData::from_ordinates(ordinates, path.display().to_string())
}

/// F(X, T) together with its normalization and the conjectured asymptotics.
#[derive(Debug, Clone)]
pub struct PairCorrelationResult {
    pub x: f64,
    pub t: f64,
    pub f_value: f64,
    /// F(X, T) * 2pi / (T log T).
    pub normalized: f64,
    /// T log X / (2 pi): the regime X <= T.
    pub conjecture_small_x: f64,
    /// (T/2pi) log(T/2pi) - T/2pi: the regime X >= T.
    pub conjecture_large_x: f64,
    /// Ordinates entering the sum (0 < g < T).
    pub zero_count: usize,
    /// Rigorous bound on the discarded pair weight; zero for the exact sum.
    pub tail_bound: f64,
}

/// Exact F(X, T): every pair is summed.
pub fn pair_correlation_f(zd: &ZeroData, x: f64, t: f64) -> Result<PairCorrelationResult> {
    pair_correlation_impl(zd, x, t, None)
}

/// F(X, T) restricted to pairs with |g_m - g_n| <= delta_cut, plus the exact
/// diagonal. The neglected tail is below 4 count^2 / delta_cut^2, reported in
/// the result.
pub fn pair_correlation_f_truncated(
    zd: &ZeroData,
    x: f64,
    t: f64,
    delta_cut: f64,
) -> Result<PairCorrelationResult> {
    if !(delta_cut > 0.0) {
        return Err(Error::InvalidArgument("delta_cut must be positive".into()));
    }
    pair_correlation_impl(zd, x, t, Some(delta_cut))
}

fn pair_correlation_impl(
    zd: &ZeroData,
    x: f64,
    t: f64,
    delta_cut: Option<f64>,
) -> Result<PairCorrelationResult> {
    if !(x > 1.0) {
        return Err(Error::InvalidArgument(format!("need X > 1, got {x}")));
    }
    if !(t > 0.0) {
        return Err(Error::InvalidArgument("need T > 0".into()));
    }
    if t > zd.max_ordinate() {
        return Err(Error::Capacity(format!(
            "T = {t} exceeds the data range (max ordinate {})",
            zd.max_ordinate()
        )));
    }
    let zeros = &zd.ordinates()[..zd.count_below(t)];
    let n = zeros.len();
    let logx = x.ln();
    let cut = delta_cut.unwrap_or(f64::INFINITY);

    // Fixed-size chunks keep the reduction order independent of thread count.
    const CHUNK: usize = 256;
    let partials: Vec<f64> = zeros
        .par_chunks(CHUNK)
        .enumerate()
        .map(|(ci, chunk)| {
            let base = ci * CHUNK;
            let mut acc = KahanSum::new();
            for (i, &gm) in chunk.iter().enumerate() {
                let m = base + i;
                for &gn in &zeros[m + 1..] {
                    let u = gn - gm;
                    if u > cut {
                        break;
                    }
                    acc.add((u * logx).cos() * 4.0 / (4.0 + u * u));
                }
            }
            acc.value()
        })
        .collect();
    let mut total = KahanSum::new();
    for p in partials {
        total.add(p);
    }
    let f_value = n as f64 + 2.0 * total.value();

    let tail_bound = match delta_cut {
        Some(c) if n > 0 => 4.0 * (n as f64) * (n as f64) / (c * c),
        _ => 0.0,
    };
    Ok(PairCorrelationResult {
        x,
        t,
        f_value,
        normalized: f_value * TWO_PI / (t * t.ln()),
        conjecture_small_x: t * logx / TWO_PI,
        conjecture_large_x: riemann_von_mangoldt(t),
        zero_count: n,
        tail_bound,
    })
}

/// Mean density of zeros: (1/2pi) log(q(F) (|t|/2pi)^deg(F)).
pub fn mean_density(spec: &LFunctionSpec, t: f64) -> Result<f64> {
    if t == 0.0 {
        return Err(Error::Domain("mean density undefined at t = 0".into()));
    }
    let inner = spec.conductor() as f64 * (t.abs() / TWO_PI).powi(spec.degree() as i32);
    let d = inner.ln() / TWO_PI;
    if d <= 0.0 {
        return Err(Error::Domain(format!(
            "mean density nonpositive at |t| = {} (below 2pi / q^(1/deg))",
            t.abs()
        )));
    }
    Ok(d)
}

#[derive(Debug, Clone, Copy)]
struct Complex {
    re: f64,
    im: f64,
}

impl Complex {
    const ZERO: Complex = Complex { re: 0.0, im: 0.0 };
    const ONE: Complex = Complex { re: 1.0, im: 0.0 };

    fn new(re: f64, im: f64) -> Self {
        Self { re, im }
    }

    /// e^{i phi}
    fn cis(phi: f64) -> Self {
        Self::new(phi.cos(), phi.sin())
    }

    fn add(self, o: Complex) -> Complex {
        Complex::new(self.re + o.re, self.im + o.im)
    }

    fn sub(self, o: Complex) -> Complex {
        Complex::new(self.re - o.re, self.im - o.im)
    }

    fn mul(self, o: Complex) -> Complex {
        Complex::new(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }

    fn scale(self, s: f64) -> Complex {
        Complex::new(self.re * s, self.im * s)
    }

    fn div(self, o: Complex) -> Complex {
        let d = o.norm_sqr();
        Complex::new(
            (self.re * o.re + self.im * o.im) / d,
            (self.im * o.re - self.re * o.im) / d,
        )
    }

    fn exp(self) -> Complex {
        Complex::cis(self.im).scale(self.re.exp())
    }

    fn norm_sqr(self) -> f64 {
        self.re * self.re + self.im * self.im
    }
}

// The model sweeps call the evaluators at many x with one cutoff; keep the
// last sieve around.
static PRIME_CACHE: Mutex<Option<(u64, std::sync::Arc<Vec<u64>>)>> = Mutex::new(None);

fn primes_up_to(cutoff: u64) -> Result<std::sync::Arc<Vec<u64>>> {
    {
        let guard = PRIME_CACHE.lock().unwrap();
        if let Some((c, ref primes)) = *guard {
            if c == cutoff {
                return Ok(primes.clone());
            }
        }
    }
    let pt = crate::arith::PrimeTable::sieve(cutoff)?;
    let primes = std::sync::Arc::new(pt.primes().to_vec());
    *PRIME_CACHE.lock().unwrap() = Some((cutoff, primes.clone()));
    Ok(primes)
}

fn check_model_args(x: f64, cutoff: u64) -> Result<f64> {
    if cutoff < 1000 {
        return Err(Error::InvalidArgument(
            "prime cutoff must be at least 10^3".into(),
        ));
    }
    let ax = x.abs();
    if ax < 1e-3 {
        return Err(Error::Domain(
            "|x| below 1e-3: use the x -> 0 expansions instead".into(),
        ));
    }
    Ok(ax)
}

/// zeta(1 + ix) from the Euler product over primes <= cutoff with the
/// main-term tail restored in closed form.
///
/// log zeta(1+ix) = sum_{p <= P, k} p^{-k(1+ix)} / k + int_P^inf t^{-1-ix} dt/log t
/// and the tail integral is -Ci(x log P) - i (pi/2 - Si(x log P)).
pub fn zeta_one_line(x: f64, cutoff: u64) -> Result<(f64, f64)> {
    let ax = check_model_args(x, cutoff)?;
    let z = zeta_one_line_complex(ax, cutoff, true)?;
    // zeta(1 - ix) = conj zeta(1 + ix).
    Ok(if x < 0.0 { (z.re, -z.im) } else { (z.re, z.im) })
}

/// Same Euler product with no tail correction: the raw truncation, exposed so
/// the stabilization can be inspected against the corrected value.
pub fn zeta_one_line_raw(x: f64, cutoff: u64) -> Result<(f64, f64)> {
    let ax = check_model_args(x, cutoff)?;
    let z = zeta_one_line_complex(ax, cutoff, false)?;
    Ok(if x < 0.0 { (z.re, -z.im) } else { (z.re, z.im) })
}

/// |zeta(1+ix)|^2, averaged over the two cutoffs P and P/2 (Cesaro-style
/// smoothing of the residual oscillation).
pub fn zeta_one_line_abs_sq(x: f64, cutoff: u64) -> Result<f64> {
    let ax = check_model_args(x, cutoff)?;
    let a = zeta_one_line_complex(ax, cutoff, true)?.norm_sqr();
    let b = zeta_one_line_complex(ax, cutoff / 2, true)?.norm_sqr();
    Ok(0.5 * (a + b))
}

fn zeta_one_line_complex(x: f64, cutoff: u64, tail: bool) -> Result<Complex> {
    let primes = primes_up_to(cutoff)?;
    let mut log_zeta_re = KahanSum::new();
    let mut log_zeta_im = KahanSum::new();
    for &p in primes.iter() {
        let pf = p as f64;
        let logp = pf.ln();
        let mut pk = 1.0f64;
        for k in 1..64 {
            pk /= pf;
            if pk < 1e-18 {
                break;
            }
            let w = pk / k as f64;
            let phase = -(k as f64) * x * logp;
            log_zeta_re.add(w * phase.cos());
            log_zeta_im.add(w * phase.sin());
        }
    }
    let mut log_zeta = Complex::new(log_zeta_re.value(), log_zeta_im.value());
    if tail {
        let a = x * (cutoff as f64).ln();
        let t = Complex::new(-cosine_integral(a)?, -(FRAC_PI_2 - sine_integral(a)));
        log_zeta = log_zeta.add(t);
    }
    Ok(log_zeta.exp())
}

/// (zeta'/zeta)'(1 + ix) = sum_{p,k} k (log p)^2 p^{-k(1+ix)}, truncated at
/// the cutoff with the regularized main-term tail
/// -e^{-ix log P} (i log P / x + 1/x^2) restored.
fn zeta_log_deriv_prime(x: f64, cutoff: u64) -> Result<Complex> {
    let primes = primes_up_to(cutoff)?;
    let mut re = KahanSum::new();
    let mut im = KahanSum::new();
    for &p in primes.iter() {
        let pf = p as f64;
        let logp = pf.ln();
        let l2 = logp * logp;
        let mut pk = 1.0f64;
        for k in 1..64 {
            pk /= pf;
            if pk < 1e-18 {
                break;
            }
            let w = k as f64 * l2 * pk;
            let phase = -(k as f64) * x * logp;
            re.add(w * phase.cos());
            im.add(w * phase.sin());
        }
    }
    let a = (cutoff as f64).ln();
    let tail = Complex::cis(-x * a)
        .mul(Complex::new(1.0 / (x * x), a / x))
        .scale(-1.0);
    Ok(Complex::new(re.value(), im.value()).add(tail))
}

/// Diagonal contribution to the 2-point correlation for zeta:
/// (1/2pi^2) Re[(zeta'/zeta)'(1+ix) - sum_p (log p / (p^{1+ix} - 1))^2].
pub fn r2_diagonal_zeta(x: f64, prime_cutoff: u64) -> Result<f64> {
    let ax = check_model_args(x, prime_cutoff)?;
    let d = zeta_log_deriv_prime(ax, prime_cutoff)?;
    let primes = primes_up_to(prime_cutoff)?;
    let mut sum = Complex::ZERO;
    for &p in primes.iter() {
        let pf = p as f64;
        let logp = pf.ln();
        // p^{1+ix} - 1
        let denom = Complex::cis(ax * logp).scale(pf).sub(Complex::ONE);
        let q = Complex::new(logp, 0.0).div(denom);
        sum = sum.add(q.mul(q));
    }
    Ok((d.sub(sum)).re / (2.0 * std::f64::consts::PI * std::f64::consts::PI))
}

/// Off-diagonal contribution to the 2-point correlation for zeta at height T:
/// (1/2pi^2) Re[e^{-2pi i x dmean(T)} |zeta(1+ix)|^2 A(x)] with the absolutely
/// convergent product A(x) = prod_p (1 - p^{-1-ix})(1 - 2/p + p^{-1-ix})/(1-1/p)^2.
pub fn r2_offdiagonal_zeta(x: f64, t: f64, prime_cutoff: u64) -> Result<f64> {
    let ax = check_model_args(x, prime_cutoff)?;
    let dmean = mean_density(&LFunctionSpec::zeta(), t)?;
    let zeta = zeta_one_line_complex(ax, prime_cutoff, true)?;
    let abs_sq = zeta.norm_sqr();
    let primes = primes_up_to(prime_cutoff)?;
    let mut log_prod = Complex::ZERO;
    for &p in primes.iter() {
        let pf = p as f64;
        // p^{-1-ix}
        let u = Complex::cis(-ax * pf.ln()).scale(1.0 / pf);
        let one_minus_u = Complex::ONE.sub(u);
        let second = Complex::new(1.0 - 2.0 / pf, 0.0).add(u);
        let denom = (1.0 - 1.0 / pf) * (1.0 - 1.0 / pf);
        let factor = one_minus_u.mul(second).scale(1.0 / denom);
        // log of a factor that is 1 + O(p^{-2}): safe principal branch.
        log_prod = log_prod.add(Complex::new(
            0.5 * factor.norm_sqr().ln(),
            factor.im.atan2(factor.re),
        ));
    }
    let a_product = log_prod.exp();
    let phase = Complex::cis(-TWO_PI * ax * dmean);
    let value = phase.mul(a_product).scale(abs_sq);
    Ok(value.re / (2.0 * std::f64::consts::PI * std::f64::consts::PI))
}

/// Rescaled diagonal: r2_diagonal(x / scale) / scale^2, which tends to the
/// universal -1/(2 pi^2 x^2) as the density scale grows.
pub fn r2_diagonal_rescaled(x: f64, scale: f64, prime_cutoff: u64) -> Result<f64> {
    if !(scale > 0.0) {
        return Err(Error::InvalidArgument("scale must be positive".into()));
    }
    Ok(r2_diagonal_zeta(x / scale, prime_cutoff)? / (scale * scale))
}

/// Rescaled off-diagonal evaluated at the height T with dmean(T) = scale:
/// tends to cos(2 pi x) / (2 pi^2 x^2).
pub fn r2_offdiagonal_rescaled(x: f64, scale: f64, prime_cutoff: u64) -> Result<f64> {
    if !(scale > 0.0) {
        return Err(Error::InvalidArgument("scale must be positive".into()));
    }
    let t = TWO_PI * (TWO_PI * scale).exp();
    Ok(r2_offdiagonal_zeta(x / scale, t, prime_cutoff)? / (scale * scale))
}
