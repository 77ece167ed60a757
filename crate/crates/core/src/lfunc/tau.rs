//! Ramanujan tau values via the eta-product factorization of Delta.
//!
//! Delta / q = prod_{n>=1} (1 - q^n)^24 = J(q)^8 where, by Jacobi's identity,
//!
//!   J(q) = prod_{n>=1} (1 - q^n)^3 = sum_{k>=0} (-1)^k (2k+1) q^{k(k+1)/2}.
//!
//! J has O(sqrt(limit)) nonzero terms below q^limit, so Delta is assembled by
//! seven sparse-by-dense multiplications at O(limit^{3/2}) total cost instead
//! of the O(limit^2) dense convolution. Coefficients are exact signed 128-bit
//! integers; |tau(n)| <= d(n) n^{11/2} keeps everything below 2^127 for
//! limit <= 2e6.

use rayon::prelude::*;

use crate::arith::PrimeTable;
use crate::error::{Error, Result};

use super::{CoefficientKind, PrimeCoefficients};

/// Largest limit the 128-bit coefficient arithmetic is certified for.
pub const TAU_LIMIT_MAX: u64 = 2_000_000;

/// Exact tau(n) for 0 <= n <= limit (index n; tau(0) = 0, tau(1) = 1).
pub fn tau_values(limit: u64) -> Result<Vec<i128>> {
    if limit < 2 {
        return Err(Error::InvalidArgument(format!(
            "tau limit must be >= 2, got {limit}"
        )));
    }
    if limit > TAU_LIMIT_MAX {
        return Err(Error::Capacity(format!(
            "tau limit {limit} exceeds the 128-bit safety bound {TAU_LIMIT_MAX}"
        )));
    }
    let deg = (limit - 1) as usize; // degree bound for J^8 = Delta/q

    // Sparse terms of J: (offset k(k+1)/2, weight (-1)^k (2k+1)).
    let mut terms: Vec<(usize, i64)> = Vec::new();
    let mut k = 0u64;
    loop {
        let off = k * (k + 1) / 2;
        if off > deg as u64 {
            break;
        }
        let w = (2 * k + 1) as i64;
        terms.push((off as usize, if k % 2 == 0 { w } else { -w }));
        k += 1;
    }

    // Dense J, then seven sparse multiplications.
    let mut acc = vec![0i128; deg + 1];
    for &(off, w) in &terms {
        acc[off] = w as i128;
    }
    for _ in 0..7 {
        acc = sparse_multiply(&acc, &terms)?;
    }

    let mut tau = vec![0i128; (limit + 1) as usize];
    tau[1..].copy_from_slice(&acc[..limit as usize]);
    Ok(tau)
}

/// One pass out[m] = sum_k weight_k * a[m - offset_k].
///
/// When every |a[j]| is below i128::MAX / sum_k |weight_k| the pass provably
/// cannot overflow and runs unchecked; otherwise it falls back to checked
/// arithmetic and reports overflow as a capacity error.
fn sparse_multiply(a: &[i128], terms: &[(usize, i64)]) -> Result<Vec<i128>> {
    let weight_sum: i128 = terms.iter().map(|&(_, w)| (w as i128).abs()).sum();
    let max_abs = a.iter().map(|v| v.unsigned_abs()).max().unwrap_or(0);
    let safe = max_abs <= (i128::MAX / weight_sum) as u128;

    let mut out = vec![0i128; a.len()];
    const CHUNK: usize = 8192;
    let results: Result<Vec<()>> = out
        .par_chunks_mut(CHUNK)
        .enumerate()
        .map(|(ci, chunk)| {
            let base = ci * CHUNK;
            if safe {
                for (i, slot) in chunk.iter_mut().enumerate() {
                    let m = base + i;
                    let mut acc = 0i128;
                    for &(off, w) in terms {
                        if off > m {
                            break;
                        }
                        acc += a[m - off] * w as i128;
                    }
                    *slot = acc;
                }
                Ok(())
            } else {
                for (i, slot) in chunk.iter_mut().enumerate() {
                    let m = base + i;
                    let mut acc = 0i128;
                    for &(off, w) in terms {
                        if off > m {
                            break;
                        }
                        acc = a[m - off]
                            .checked_mul(w as i128)
                            .and_then(|t| acc.checked_add(t))
                            .ok_or_else(|| {
                                Error::Capacity(
                                    "tau coefficient overflowed 128 bits".into(),
                                )
                            })?;
                    }
                    *slot = acc;
                }
                Ok(())
            }
        })
        .collect();
    results?;
    Ok(out)
}

/// Normalized coefficients lambda(p; Delta) = tau(p) / p^{11/2} for all
/// primes p <= limit, backed by the exact integers tau(p).
pub fn tau_coefficients(limit: u64) -> Result<PrimeCoefficients> {
    let tau = tau_values(limit)?;
    let pt = PrimeTable::sieve(limit)?;
    let raw: Vec<(u64, i128)> = pt
        .primes()
        .iter()
        .map(|&p| (p, tau[p as usize]))
        .collect();
    PrimeCoefficients::from_raw(CoefficientKind::Tau, limit, raw)
}

#[cfg(test)]
mod tests {
    use super::*;

    // Leading coefficients of Delta, from expanding q prod (1-q^n)^24 directly.
    const TAU_SMALL: [i128; 12] = [
        1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920, 534612, -370944,
    ];

    #[test]
    fn tau_first_values() {
        let tau = tau_values(100).unwrap();
        for (i, &expect) in TAU_SMALL.iter().enumerate() {
            assert_eq!(tau[i + 1], expect, "tau({})", i + 1);
        }
    }

    /// Independent oracle: dense expansion of q prod_{n<=limit} (1 - q^n)^24
    /// with exact integers, no Jacobi identity involved.
    fn tau_dense_oracle(limit: usize) -> Vec<i128> {
        let mut f = vec![0i128; limit + 1];
        f[0] = 1;
        for n in 1..=limit {
            for _ in 0..24 {
                // multiply by (1 - q^n)
                for m in (n..=limit).rev() {
                    let t = f[m - n];
                    f[m] -= t;
                }
            }
        }
        let mut tau = vec![0i128; limit + 2];
        for m in 0..=limit {
            tau[m + 1] = f[m];
        }
        tau
    }

    #[test]
    fn tau_matches_dense_oracle() {
        let limit = 300;
        let oracle = tau_dense_oracle(limit);
        let tau = tau_values(limit as u64).unwrap();
        for n in 1..=limit {
            assert_eq!(tau[n], oracle[n], "tau({n})");
        }
    }

    #[test]
    fn tau_multiplicative_spot() {
        let tau = tau_values(100).unwrap();
        assert_eq!(tau[6], tau[2] * tau[3]);
        assert_eq!(tau[10], tau[2] * tau[5]);
        assert_eq!(tau[15], tau[3] * tau[5]);
        // tau(p^2) = tau(p)^2 - p^11.
        assert_eq!(tau[4], tau[2] * tau[2] - (1i128 << 11));
        assert_eq!(tau[9], tau[3] * tau[3] - 177_147);
    }

    #[test]
    fn tau_ramanujan_congruence() {
        // tau(n) == sigma_11(n) mod 691 for n <= 1000.
        let tau = tau_values(1000).unwrap();
        for n in 1u64..=1000 {
            let mut sigma = 0u64;
            for d in 1..=n {
                if n % d == 0 {
                    sigma = (sigma + pow_mod(d % 691, 11, 691)) % 691;
                }
            }
            let t = tau[n as usize].rem_euclid(691) as u64;
            assert_eq!(t, sigma % 691, "n = {n}");
        }
    }

    fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
        let mut acc = 1u64;
        b %= m;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % m;
            }
            b = b * b % m;
            e >>= 1;
        }
        acc
    }

    #[test]
    fn deligne_bound_on_primes() {
        let coeffs = tau_coefficients(100_000).unwrap();
        for &(p, _) in coeffs.raw() {
            let lam = coeffs.lambda(p).unwrap();
            assert!(lam.abs() <= 2.0, "|lambda({p})| = {}", lam.abs());
        }
        let lam2 = coeffs.lambda(2).unwrap();
        assert!((lam2 + 0.530330).abs() < 1e-6);
    }

    #[test]
    fn limit_bounds_enforced() {
        assert!(matches!(tau_values(1), Err(Error::InvalidArgument(_))));
        assert!(matches!(
            tau_values(TAU_LIMIT_MAX + 1),
            Err(Error::Capacity(_))
        ));
    }
}
