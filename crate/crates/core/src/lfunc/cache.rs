//! Coefficient cache files.
//!
//! UTF-8 text, one header line, one `p <integer>` line per prime in ascending
//! order, and a trailing CRC32 line over everything before it:
//!
//! ```text
//! #lstat-coeffs kind=tau limit=1010000 conductor=1 weierstrass=
//! 2 -24
//! 3 252
//! ...
//! #crc32=1a2b3c4d
//! ```
//!
//! Coefficients are serialized as the exact integers tau(p) / a_p, never as
//! floats, so store -> load is the identity. Writes go to a temp file in the
//! target directory followed by an atomic rename.
//!
//! A legacy import mode reads one-integer-per-line dumps with implicit prime
//! indexing (the i-th line belongs to the i-th prime).

use std::fs;
use std::io::Write;
use std::path::Path;

use crate::arith::PrimeTable;
use crate::error::{Error, Result};

use super::{CoefficientKind, PrimeCoefficients};

const HEADER_TAG: &str = "#lstat-coeffs";

/// Write `coeffs` to `path` (temp file + atomic rename).
pub fn cache_store(path: &Path, coeffs: &PrimeCoefficients) -> Result<()> {
    let mut body = String::new();
    let (kind, conductor, weierstrass) = match coeffs.kind() {
        CoefficientKind::Tau => ("tau".to_string(), 1u64, String::new()),
        CoefficientKind::EllipticCurve {
            weierstrass,
            conductor,
        } => (
            "ec".to_string(),
            *conductor,
            weierstrass
                .iter()
                .map(|a| a.to_string())
                .collect::<Vec<_>>()
                .join(","),
        ),
    };
    body.push_str(&format!(
        "{HEADER_TAG} kind={kind} limit={} conductor={conductor} weierstrass={weierstrass}\n",
        coeffs.limit()
    ));
    for &(p, a) in coeffs.raw() {
        body.push_str(&format!("{p} {a}\n"));
    }
    let crc = crc32(body.as_bytes());
    let tmp = path.with_extension("tmp");
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(body.as_bytes())?;
        writeln!(f, "#crc32={crc:08x}")?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path)?;
    Ok(())
}

/// Load a cache file written by [`cache_store`].
pub fn cache_load(path: &Path) -> Result<PrimeCoefficients> {
    let text = fs::read_to_string(path)?;
    let crc_start = text.rfind("#crc32=").ok_or_else(|| {
        Error::CorruptCache(format!("{}: missing #crc32 trailer", path.display()))
    })?;
    let body = &text[..crc_start];
    let crc_line = text[crc_start..].trim();
    let stated = u32::from_str_radix(crc_line.trim_start_matches("#crc32="), 16)
        .map_err(|_| Error::CorruptCache(format!("{}: malformed crc line", path.display())))?;
    let actual = crc32(body.as_bytes());
    if stated != actual {
        return Err(Error::CorruptCache(format!(
            "{}: crc mismatch (stated {stated:08x}, computed {actual:08x})",
            path.display()
        )));
    }

    let mut lines = body.lines().enumerate();
    let (_, header) = lines.next().ok_or_else(|| Error::Parse {
        line: 1,
        message: "empty cache file".into(),
    })?;
    let (kind, limit) = parse_header(header)?;

    let mut raw: Vec<(u64, i128)> = Vec::new();
    for (idx, line) in lines {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        let perr = |message: &str| Error::Parse {
            line: idx + 1,
            message: message.into(),
        };
        let p: u64 = parts
            .next()
            .ok_or_else(|| perr("missing prime"))?
            .parse()
            .map_err(|_| perr("bad prime"))?;
        let a: i128 = parts
            .next()
            .ok_or_else(|| perr("missing coefficient"))?
            .parse()
            .map_err(|_| perr("bad coefficient"))?;
        if parts.next().is_some() {
            return Err(perr("trailing tokens"));
        }
        if let Some(&(q, _)) = raw.last() {
            if p <= q {
                return Err(Error::DataIntegrity(format!(
                    "primes out of order at line {}",
                    idx + 1
                )));
            }
        }
        raw.push((p, a));
    }
    validate_prime_coverage(&raw, limit)?;
    PrimeCoefficients::from_raw(kind, limit, raw)
}

/// Import a one-integer-per-line dump: the i-th line is the coefficient of
/// the i-th prime. The prime enumeration is reconstructed from `limit`.
pub fn load_legacy_list(path: &Path, kind: CoefficientKind, limit: u64) -> Result<PrimeCoefficients> {
    let text = fs::read_to_string(path)?;
    let pt = PrimeTable::sieve(limit)?;
    let primes = pt.primes();
    let mut raw: Vec<(u64, i128)> = Vec::with_capacity(primes.len());
    let mut count = 0usize;
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let a: i128 = line.parse().map_err(|_| Error::Parse {
            line: idx + 1,
            message: format!("expected integer, got {line:?}"),
        })?;
        if count >= primes.len() {
            return Err(Error::DataIntegrity(format!(
                "more coefficients than primes <= {limit}"
            )));
        }
        raw.push((primes[count], a));
        count += 1;
    }
    if count != primes.len() {
        return Err(Error::DataIntegrity(format!(
            "{count} coefficients for {} primes <= {limit}",
            primes.len()
        )));
    }
    PrimeCoefficients::from_raw(kind, limit, raw)
}

fn parse_header(header: &str) -> Result<(CoefficientKind, u64)> {
    let perr = |message: String| Error::Parse { line: 1, message };
    if !header.starts_with(HEADER_TAG) {
        return Err(perr(format!("expected {HEADER_TAG} header")));
    }
    let mut kind = None;
    let mut limit = None;
    let mut conductor = 1u64;
    let mut weierstrass_raw = String::new();
    for field in header[HEADER_TAG.len()..].split_whitespace() {
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| perr(format!("malformed header field {field:?}")))?;
        match key {
            "kind" => kind = Some(value.to_string()),
            "limit" => {
                limit = Some(
                    value
                        .parse::<u64>()
                        .map_err(|_| perr("bad limit".into()))?,
                )
            }
            "conductor" => {
                conductor = value
                    .parse::<u64>()
                    .map_err(|_| perr("bad conductor".into()))?
            }
            "weierstrass" => weierstrass_raw = value.to_string(),
            _ => return Err(perr(format!("unknown header field {key:?}"))),
        }
    }
    let limit = limit.ok_or_else(|| perr("header missing limit".into()))?;
    let kind = match kind.as_deref() {
        Some("tau") => CoefficientKind::Tau,
        Some("ec") => {
            let parts: Vec<i64> = weierstrass_raw
                .split(',')
                .map(|s| s.parse::<i64>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| perr("bad weierstrass tuple".into()))?;
            if parts.len() != 5 {
                return Err(perr("weierstrass tuple must have 5 entries".into()));
            }
            CoefficientKind::EllipticCurve {
                weierstrass: [parts[0], parts[1], parts[2], parts[3], parts[4]],
                conductor,
            }
        }
        other => return Err(perr(format!("unknown kind {other:?}"))),
    };
    Ok((kind, limit))
}

/// The stored prime sequence must be exactly the primes up to the stated limit.
fn validate_prime_coverage(raw: &[(u64, i128)], limit: u64) -> Result<()> {
    let pt = PrimeTable::sieve(limit)?;
    let primes = pt.primes();
    if raw.len() != primes.len() {
        return Err(Error::DataIntegrity(format!(
            "cache holds {} primes, expected {} up to {limit}",
            raw.len(),
            primes.len()
        )));
    }
    for (&(p, _), &q) in raw.iter().zip(primes.iter()) {
        if p != q {
            return Err(Error::DataIntegrity(format!(
                "cache prime {p} does not match sieve prime {q}"
            )));
        }
    }
    Ok(())
}

/// CRC32 (IEEE, reflected, polynomial 0xEDB88320).
pub(crate) fn crc32(bytes: &[u8]) -> u32 {
    const TABLE: [u32; 256] = crc32_table();
    let mut crc = 0xFFFF_FFFFu32;
    for &b in bytes {
        crc = (crc >> 8) ^ TABLE[((crc ^ b as u32) & 0xFF) as usize];
    }
    !crc
}

const fn crc32_table() -> [u32; 256] {
    let mut table = [0u32; 256];
    let mut i = 0;
    while i < 256 {
        let mut c = i as u32;
        let mut k = 0;
        while k < 8 {
            c = if c & 1 == 1 { 0xEDB8_8320 ^ (c >> 1) } else { c >> 1 };
            k += 1;
        }
        table[i] = c;
        i += 1;
    }
    table
}
