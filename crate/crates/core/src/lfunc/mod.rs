//! L-function metadata and generalized von Mangoldt tables.
//!
//! An L-function is described by its degree, conductor and polar order plus a
//! source of normalized prime coefficients lambda(p). Three concrete families
//! are implemented: the Riemann zeta function, the weight-12 cusp form Delta
//! (Ramanujan tau), and elliptic curves over Q given by a Weierstrass tuple.
//!
//! For a degree-2 L-function with |lambda(p)| <= 2 at a good prime p, writing
//! lambda(p) = 2 cos(theta_p), the prime-power von Mangoldt values are
//!
//!   Lambda(p^k; F) = 2 cos(k theta_p) log p.
//!
//! At a bad prime (p dividing the conductor) the second Satake parameter
//! vanishes and the power sum collapses to
//!
//!   Lambda(p^k; E) = (a_p / sqrt(p))^k log p,   a_p in {-1, 0, 1}.

mod cache;
mod elliptic;
mod tau;

pub use cache::{cache_load, cache_store, load_legacy_list};
pub use elliptic::{elliptic_coefficients, elliptic_discriminant};
pub use tau::{tau_coefficients, tau_values, TAU_LIMIT_MAX};

use crate::arith::{prefix_sums, PrimeTable};
use crate::error::{Error, Result};

/// The implemented L-function families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LFunctionKind {
    Zeta,
    RamanujanTau,
    EllipticCurve,
}

/// Analytic metadata for one L-function.
#[derive(Debug, Clone, PartialEq)]
pub struct LFunctionSpec {
    kind: LFunctionKind,
    degree: u32,
    conductor: u64,
    polar_order: u32,
    weierstrass: Option<[i64; 5]>,
}

impl LFunctionSpec {
    /// The Riemann zeta function: degree 1, conductor 1, simple pole at s = 1.
    pub fn zeta() -> Self {
        Self {
            kind: LFunctionKind::Zeta,
            degree: 1,
            conductor: 1,
            polar_order: 1,
            weierstrass: None,
        }
    }

    /// The L-function of the weight-12 cusp form Delta: degree 2, conductor 1.
    pub fn ramanujan_tau() -> Self {
        Self {
            kind: LFunctionKind::RamanujanTau,
            degree: 2,
            conductor: 1,
            polar_order: 0,
            weierstrass: None,
        }
    }

    /// The L-function of an elliptic curve y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
    ///
    /// The conductor is supplied by the caller alongside the Weierstrass
    /// tuple; it is not recomputed. The curve must be nonsingular over Q.
    pub fn elliptic_curve(weierstrass: [i64; 5], conductor: u64) -> Result<Self> {
        if elliptic_discriminant(weierstrass) == 0 {
            return Err(Error::InvalidArgument(
                "singular curve: discriminant is zero".into(),
            ));
        }
        if conductor < 1 {
            return Err(Error::InvalidArgument("conductor must be positive".into()));
        }
        Ok(Self {
            kind: LFunctionKind::EllipticCurve,
            degree: 2,
            conductor,
            polar_order: 0,
            weierstrass: Some(weierstrass),
        })
    }

    pub fn kind(&self) -> LFunctionKind {
        self.kind
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Polar order m(F): 1 for zeta, 0 for the cuspidal degree-2 families.
    pub fn polar_order(&self) -> u32 {
        self.polar_order
    }

    pub fn weierstrass(&self) -> Option<[i64; 5]> {
        self.weierstrass
    }
}

/// Which family a coefficient set belongs to, with the data needed to rebuild
/// its normalization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoefficientKind {
    Tau,
    EllipticCurve {
        weierstrass: [i64; 5],
        conductor: u64,
    },
}

/// Normalized prime coefficients lambda(p; F) for one L-function, together
/// with the exact integers they were derived from.
///
/// The integers (tau(p) or a_p) are what the cache serializes; the normalized
/// values are recomputed on load so a round trip is exact.
#[derive(Debug, Clone)]
pub struct PrimeCoefficients {
    kind: CoefficientKind,
    limit: u64,
    /// (p, integer coefficient) in ascending p, one entry per prime <= limit.
    raw: Vec<(u64, i128)>,
    /// lambda(p; F), same order as `raw`.
    lam: Vec<f64>,
    /// Primes dividing the conductor.
    bad_primes: Vec<u64>,
}

impl PrimeCoefficients {
    pub(crate) fn from_raw(kind: CoefficientKind, limit: u64, raw: Vec<(u64, i128)>) -> Result<Self> {
        let bad_primes = match &kind {
            CoefficientKind::Tau => Vec::new(),
            CoefficientKind::EllipticCurve { conductor, .. } => {
                distinct_prime_divisors(*conductor)
            }
        };
        let mut lam = Vec::with_capacity(raw.len());
        for &(p, a) in &raw {
            let l = match kind {
                CoefficientKind::Tau => a as f64 / (p as f64).powf(5.5),
                CoefficientKind::EllipticCurve { .. } => a as f64 / (p as f64).sqrt(),
            };
            let bad = bad_primes.contains(&p);
            if bad {
                if a.unsigned_abs() > 1 {
                    return Err(Error::InvariantViolation(format!(
                        "bad prime p = {p} must have a_p in {{-1, 0, 1}}, got {a}"
                    )));
                }
            } else if l.abs() > 2.0 {
                return Err(Error::InvariantViolation(format!(
                    "|lambda({p})| = {} exceeds 2 at a good prime",
                    l.abs()
                )));
            }
            lam.push(l);
        }
        Ok(Self {
            kind,
            limit,
            raw,
            lam,
            bad_primes,
        })
    }

    pub fn kind(&self) -> &CoefficientKind {
        &self.kind
    }

    /// All primes up to this bound are covered.
    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// (p, integer coefficient) pairs in ascending p.
    pub fn raw(&self) -> &[(u64, i128)] {
        &self.raw
    }

    /// Normalized coefficient lambda(p; F), if p is covered.
    pub fn lambda(&self, p: u64) -> Option<f64> {
        self.raw
            .binary_search_by_key(&p, |&(q, _)| q)
            .ok()
            .map(|i| self.lam[i])
    }

    /// Integer coefficient (tau(p) or a_p), if p is covered.
    pub fn raw_at(&self, p: u64) -> Option<i128> {
        self.raw
            .binary_search_by_key(&p, |&(q, _)| q)
            .ok()
            .map(|i| self.raw[i].1)
    }

    pub fn bad_primes(&self) -> &[u64] {
        &self.bad_primes
    }

    pub fn is_bad_prime(&self, p: u64) -> bool {
        self.bad_primes.contains(&p)
    }
}

fn distinct_prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Dense table of Lambda(n; F) for 1 <= n <= limit with compensated prefix sums.
#[derive(Debug, Clone)]
pub struct VonMangoldtTable {
    spec: LFunctionSpec,
    limit: u64,
    values: Vec<f64>,
    prefix: Vec<f64>,
}

impl VonMangoldtTable {
    /// All-zero table, for exercising degenerate paths in tests.
    #[cfg(test)]
    pub(crate) fn zero_stub(spec: LFunctionSpec, limit: u64) -> Self {
        Self {
            spec,
            limit,
            values: vec![0.0; (limit + 1) as usize],
            prefix: vec![0.0; (limit + 1) as usize],
        }
    }

    pub fn spec(&self) -> &LFunctionSpec {
        &self.spec
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// values[n] = Lambda(n; F); index 0 is unused.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// prefix[n] = sum_{m <= n} Lambda(m; F).
    pub fn prefix(&self) -> &[f64] {
        &self.prefix
    }
}

/// Build the von Mangoldt table for `spec` up to `limit`.
///
/// `coeffs` must be `None` for zeta and must cover every prime <= limit for
/// the degree-2 families.
pub fn von_mangoldt_table(
    spec: &LFunctionSpec,
    coeffs: Option<&PrimeCoefficients>,
    pt: &PrimeTable,
    limit: u64,
) -> Result<VonMangoldtTable> {
    if limit < 2 || limit > pt.limit() {
        return Err(Error::InvalidArgument(format!(
            "table limit {limit} outside sieve range 2..={}",
            pt.limit()
        )));
    }
    let mut values = vec![0.0f64; (limit + 1) as usize];
    match spec.kind() {
        LFunctionKind::Zeta => {
            if coeffs.is_some() {
                return Err(Error::InvalidArgument(
                    "zeta takes no prime coefficients".into(),
                ));
            }
            for &p in pt.primes() {
                if p > limit {
                    break;
                }
                let logp = (p as f64).ln();
                let mut pk = p;
                loop {
                    values[pk as usize] = logp;
                    match pk.checked_mul(p) {
                        Some(next) if next <= limit => pk = next,
                        _ => break,
                    }
                }
            }
        }
        LFunctionKind::RamanujanTau | LFunctionKind::EllipticCurve => {
            let coeffs = coeffs.ok_or_else(|| {
                Error::InvalidArgument("degree-2 spec requires prime coefficients".into())
            })?;
            match (spec.kind(), coeffs.kind()) {
                (LFunctionKind::RamanujanTau, CoefficientKind::Tau) => {}
                (LFunctionKind::EllipticCurve, CoefficientKind::EllipticCurve { .. }) => {}
                _ => {
                    return Err(Error::InvalidArgument(
                        "coefficient kind does not match the L-function spec".into(),
                    ))
                }
            }
            if coeffs.limit() < limit {
                return Err(Error::Capacity(format!(
                    "coefficients cover primes <= {}, table needs {limit}",
                    coeffs.limit()
                )));
            }
            for &p in pt.primes() {
                if p > limit {
                    break;
                }
                let lam = coeffs.lambda(p).ok_or_else(|| {
                    Error::DataIntegrity(format!("missing coefficient for prime {p}"))
                })?;
                let logp = (p as f64).ln();
                if coeffs.is_bad_prime(p) {
                    // beta(p) = 0: the power sum is lambda^k.
                    let mut pk = p;
                    let mut lk = lam;
                    loop {
                        values[pk as usize] = lk * logp;
                        match pk.checked_mul(p) {
                            Some(next) if next <= limit => {
                                pk = next;
                                lk *= lam;
                            }
                            _ => break,
                        }
                    }
                } else {
                    if lam.abs() > 2.0 {
                        return Err(Error::InvariantViolation(format!(
                            "|lambda({p})/2| > 1 at a good prime"
                        )));
                    }
                    let theta = (lam / 2.0).acos();
                    let mut pk = p;
                    let mut k = 1u32;
                    loop {
                        values[pk as usize] = 2.0 * (k as f64 * theta).cos() * logp;
                        match pk.checked_mul(p) {
                            Some(next) if next <= limit => {
                                pk = next;
                                k += 1;
                            }
                            _ => break,
                        }
                    }
                }
            }
        }
    }
    let prefix = prefix_sums(&values);
    Ok(VonMangoldtTable {
        spec: spec.clone(),
        limit,
        values,
        prefix,
    })
}
