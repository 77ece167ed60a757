//! Classical multiplicative-function machinery: primes, von Mangoldt, Moebius,
//! totient, and Ramanujan sums.
//!
//! Everything here is exact integer arithmetic except the von Mangoldt values
//! themselves, which are natural logarithms stored as f64.

use crate::error::{Error, Result};
use crate::kahan::KahanSum;

/// Least-prime-factor sieve up to an inclusive limit.
///
/// Stores the least prime factor of every odd n <= limit (even n have factor
/// 2), so prime-power detection, Moebius and totient are O(log n) per query.
#[derive(Debug, Clone)]
pub struct PrimeTable {
    limit: u64,
    primes: Vec<u64>,
    /// lpf_odd[i] = least prime factor of (2i + 1); entry 0 (n = 1) is unused.
    lpf_odd: Vec<u32>,
}

impl PrimeTable {
    /// Sieve all primes up to `limit` (inclusive).
    pub fn sieve(limit: u64) -> Result<Self> {
        if limit < 2 {
            return Err(Error::InvalidArgument(format!(
                "sieve limit must be >= 2, got {limit}"
            )));
        }
        if limit > (1 << 31) {
            return Err(Error::Capacity(format!(
                "sieve limit {limit} exceeds 2^31"
            )));
        }
        let n = limit as usize;
        let mut lpf_odd = vec![0u32; n / 2 + 1];
        let mut primes = vec![2u64];
        let mut i = 3usize;
        while i * i <= n {
            if lpf_odd[i / 2] == 0 {
                let mut j = i * i;
                while j <= n {
                    if lpf_odd[j / 2] == 0 {
                        lpf_odd[j / 2] = i as u32;
                    }
                    j += 2 * i;
                }
            }
            i += 2;
        }
        let mut k = 3usize;
        while k <= n {
            if lpf_odd[k / 2] == 0 {
                primes.push(k as u64);
            }
            k += 2;
        }
        Ok(Self {
            limit,
            primes,
            lpf_odd,
        })
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// All primes <= limit, ascending.
    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// Least prime factor of n (2 <= n <= limit).
    pub fn least_prime_factor(&self, n: u64) -> Result<u64> {
        self.check_range(n)?;
        if n < 2 {
            return Err(Error::InvalidArgument(
                "least prime factor undefined for n < 2".into(),
            ));
        }
        if n % 2 == 0 {
            return Ok(2);
        }
        let entry = self.lpf_odd[(n / 2) as usize];
        Ok(if entry == 0 { n } else { entry as u64 })
    }

    pub fn is_prime(&self, n: u64) -> bool {
        n >= 2 && n <= self.limit && self.least_prime_factor(n).map_or(false, |p| p == n)
    }

    /// If n = p^k for a prime p and k >= 1, return (p, k).
    pub fn prime_power(&self, n: u64) -> Result<Option<(u64, u32)>> {
        self.check_range(n)?;
        if n < 2 {
            return Ok(None);
        }
        let p = self.least_prime_factor(n)?;
        let mut m = n;
        let mut k = 0u32;
        while m % p == 0 {
            m /= p;
            k += 1;
        }
        Ok(if m == 1 { Some((p, k)) } else { None })
    }

    /// Distinct prime factors of n together with their exponents.
    pub fn factorize(&self, n: u64) -> Result<Vec<(u64, u32)>> {
        self.check_range(n)?;
        let mut m = n;
        let mut out = Vec::new();
        while m > 1 {
            let p = self.least_prime_factor(m)?;
            let mut k = 0u32;
            while m % p == 0 {
                m /= p;
                k += 1;
            }
            out.push((p, k));
        }
        Ok(out)
    }

    fn check_range(&self, n: u64) -> Result<()> {
        if n < 1 || n > self.limit {
            return Err(Error::InvalidArgument(format!(
                "n = {n} outside table range 1..={}",
                self.limit
            )));
        }
        Ok(())
    }
}

/// Moebius function: (-1)^k for squarefree n with k prime factors, else 0.
pub fn moebius(n: u64, pt: &PrimeTable) -> Result<i8> {
    let factors = pt.factorize(n)?;
    if factors.iter().any(|&(_, k)| k > 1) {
        return Ok(0);
    }
    Ok(if factors.len() % 2 == 0 { 1 } else { -1 })
}

/// Euler's totient, phi(n) = n prod_{p | n} (1 - 1/p), exactly.
pub fn totient(n: u64, pt: &PrimeTable) -> Result<u64> {
    let factors = pt.factorize(n)?;
    let mut phi = n;
    for (p, _) in factors {
        phi = phi / p * (p - 1);
    }
    Ok(phi)
}

/// Ramanujan's sum c(r, n) via the Moebius convolution
/// c(r, n) = sum_{d | gcd(|r|, n)} d * mu(n / d).
///
/// Exact integers throughout; the complex-exponential definition is never
/// evaluated. c(0, n) = phi(n) falls out of gcd(0, n) = n.
pub fn ramanujan_sum(r: i64, n: u64, pt: &PrimeTable) -> Result<i64> {
    if n < 1 {
        return Err(Error::InvalidArgument(
            "ramanujan_sum requires n >= 1".into(),
        ));
    }
    pt.check_range(n)?;
    let g = gcd(r.unsigned_abs(), n);
    let mut total = 0i64;
    for d in divisors(g, pt)? {
        if n % d == 0 {
            total += d as i64 * moebius(n / d, pt)? as i64;
        }
    }
    Ok(total)
}

/// All divisors of n (unordered).
pub fn divisors(n: u64, pt: &PrimeTable) -> Result<Vec<u64>> {
    if n == 0 {
        // gcd(0, n) = n is handled by the caller; 0 itself has no divisor set.
        return Ok(vec![]);
    }
    let factors = pt.factorize(n)?;
    let mut divs = vec![1u64];
    for (p, k) in factors {
        let prev = divs.clone();
        let mut pe = 1u64;
        for _ in 0..k {
            pe *= p;
            divs.extend(prev.iter().map(|d| d * pe));
        }
    }
    Ok(divs)
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// The classical von Mangoldt function tabulated to the sieve limit, with
/// compensated prefix sums.
///
/// values[n] = log p when n = p^k, 0 otherwise; prefix[n] = sum_{m <= n} values[m].
#[derive(Debug, Clone)]
pub struct ClassicalLambda {
    values: Vec<f64>,
    prefix: Vec<f64>,
}

impl ClassicalLambda {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn prefix(&self) -> &[f64] {
        &self.prefix
    }

    pub fn limit(&self) -> u64 {
        (self.values.len() - 1) as u64
    }
}

/// Tabulate Lambda(n) for 1 <= n <= pt.limit().
pub fn classical_lambda(pt: &PrimeTable) -> ClassicalLambda {
    let limit = pt.limit();
    let mut values = vec![0.0f64; (limit + 1) as usize];
    for &p in pt.primes() {
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
    let prefix = prefix_sums(&values);
    ClassicalLambda { values, prefix }
}

/// Compensated running sums: out[n] = sum_{m <= n} values[m].
pub(crate) fn prefix_sums(values: &[f64]) -> Vec<f64> {
    let mut acc = KahanSum::new();
    let mut prefix = Vec::with_capacity(values.len());
    for &v in values {
        acc.add(v);
        prefix.push(acc.value());
    }
    prefix
}
