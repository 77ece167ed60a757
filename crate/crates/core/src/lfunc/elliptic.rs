//! Elliptic-curve coefficients a_p by point counting over F_p.
//!
//! For odd p, completing the square in y turns the long Weierstrass equation
//! into (2y + a1 x + a3)^2 = D(x) with the cubic
//!
//!   D(x) = 4x^3 + b2 x^2 + 2 b4 x + b6,
//!
//! so the affine point count is sum_x (1 + chi(D(x))) and
//! a_p = p + 1 - #E(F_p) = -sum_x chi(D(x)), where chi is the quadratic
//! character mod p. This holds at good and bad primes alike: at a bad prime
//! the count includes the singular point and the same formula lands on
//! a_p = 1 / -1 / 0 for split / nonsplit / additive reduction. D(x) is swept
//! with cubic finite differences (three modular additions per x) and chi is a
//! table lookup, so each prime costs O(p) word operations.

use rayon::prelude::*;

use crate::arith::PrimeTable;
use crate::error::{Error, Result};

use super::{CoefficientKind, PrimeCoefficients};

/// b-invariants of a Weierstrass tuple.
fn b_invariants(w: [i64; 5]) -> (i128, i128, i128, i128) {
    let [a1, a2, a3, a4, a6] = w.map(i128::from);
    let b2 = a1 * a1 + 4 * a2;
    let b4 = 2 * a4 + a1 * a3;
    let b6 = a3 * a3 + 4 * a6;
    let b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    (b2, b4, b6, b8)
}

/// Discriminant of the curve; zero iff the curve is singular over Q.
pub fn elliptic_discriminant(w: [i64; 5]) -> i128 {
    let (b2, b4, b6, b8) = b_invariants(w);
    -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6
}

/// a_p for every prime p <= limit, normalized to lambda(p; E) = a_p / sqrt(p).
///
/// Bad primes (divisors of the supplied conductor) carry a_p in {-1, 0, 1};
/// good primes satisfy the Hasse bound |a_p| <= 2 sqrt(p). Both fall out of
/// the same uniform point count.
pub fn elliptic_coefficients(
    weierstrass: [i64; 5],
    conductor: u64,
    limit: u64,
) -> Result<PrimeCoefficients> {
    if elliptic_discriminant(weierstrass) == 0 {
        return Err(Error::InvalidArgument(
            "singular curve: discriminant is zero".into(),
        ));
    }
    if conductor < 1 {
        return Err(Error::InvalidArgument("conductor must be positive".into()));
    }
    let pt = PrimeTable::sieve(limit)?;
    let primes = pt.primes();

    let raw: Result<Vec<(u64, i128)>> = primes
        .par_chunks(64)
        .map(|chunk| {
            let mut scratch = Vec::new();
            chunk
                .iter()
                .map(|&p| {
                    let ap = if p <= 3 {
                        count_ap_enumerate(weierstrass, p)
                    } else {
                        count_ap_quadratic(weierstrass, p, &mut scratch)
                    };
                    let hasse_sq = (ap as i128) * (ap as i128) <= 4 * p as i128;
                    if !hasse_sq {
                        return Err(Error::InvariantViolation(format!(
                            "a_{p} = {ap} violates the Hasse bound"
                        )));
                    }
                    Ok((p, ap as i128))
                })
                .collect::<Result<Vec<_>>>()
        })
        .try_reduce(Vec::new, |mut a, mut b| {
            a.append(&mut b);
            Ok(a)
        });
    let mut raw = raw?;
    raw.sort_unstable_by_key(|&(p, _)| p);

    PrimeCoefficients::from_raw(
        CoefficientKind::EllipticCurve {
            weierstrass,
            conductor,
        },
        limit,
        raw,
    )
}

/// Exhaustive point enumeration on the long Weierstrass form (used for p = 2, 3).
fn count_ap_enumerate(w: [i64; 5], p: u64) -> i64 {
    let m = p as i64;
    let [a1, a2, a3, a4, a6] = w.map(|a| a.rem_euclid(m));
    let mut affine = 0i64;
    for x in 0..m {
        for y in 0..m {
            let lhs = (y * y + a1 * x * y + a3 * y).rem_euclid(m);
            let rhs = (((x * x).rem_euclid(m) * x) + a2 * x * x + a4 * x + a6).rem_euclid(m);
            if lhs == rhs {
                affine += 1;
            }
        }
    }
    m + 1 - (affine + 1)
}

/// a_p = -sum_x chi(D(x)) for odd p, chi from a squares table, D swept by
/// finite differences.
fn count_ap_quadratic(w: [i64; 5], p: u64, qr: &mut Vec<bool>) -> i64 {
    let (b2, b4, b6, _) = b_invariants(w);
    let m = p as i64;
    let b2 = b2.rem_euclid(m as i128) as i64;
    let b4 = b4.rem_euclid(m as i128) as i64;
    let b6 = b6.rem_euclid(m as i128) as i64;

    // Squares table: qr[v] == true iff v is a nonzero square mod p.
    qr.clear();
    qr.resize(p as usize, false);
    let mut s = 0u64;
    for x in 0..=(p - 1) / 2 {
        if x > 0 {
            qr[s as usize] = true;
        }
        s += 2 * x + 1;
        while s >= p {
            s -= p;
        }
    }

    // D(x) = 4x^3 + b2 x^2 + 2 b4 x + b6 via third-order differences.
    let eval = |x: i64| -> u64 {
        let x = x as i128;
        (4 * x * x * x + (b2 as i128) * x * x + 2 * (b4 as i128) * x + b6 as i128)
            .rem_euclid(m as i128) as u64
    };
    let d0 = eval(0);
    let (d1, d2, d3) = (eval(1), eval(2), eval(3));
    let mut cur = d0;
    let mut e = (p + d1 - d0) % p;
    let mut f = (2 * p + d2 - 2 * d1 + d0) % p;
    let g = (4 * p + d3 + 3 * d1 - 3 * d2 - d0) % p;
    debug_assert_eq!(g, 24 % p);

    let mut sum = 0i64;
    for _ in 0..p {
        if cur != 0 {
            sum += if qr[cur as usize] { 1 } else { -1 };
        }
        cur += e;
        if cur >= p {
            cur -= p;
        }
        e += f;
        if e >= p {
            e -= p;
        }
        f += g;
        if f >= p {
            f -= p;
        }
    }
    -sum
}
