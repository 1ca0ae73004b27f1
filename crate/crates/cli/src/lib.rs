//! IO, file formats and verification suites on top of `k0rep-core`.

pub mod dot;
pub mod golden;
pub mod json;
pub mod sweep;

use std::ops::RangeInclusive;

/// Parses `LO..HI` (inclusive). A single number `N` means `N..N`.
pub fn parse_range(s: &str) -> Result<RangeInclusive<u64>, String> {
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (lo, hi.strip_prefix('=').unwrap_or(hi)),
        None => (s, s),
    };
    let num = |t: &str| {
        t.trim()
            .parse::<u64>()
            .map_err(|e| format!("bad bound {t:?}: {e}"))
    };
    let (lo, hi) = (num(lo)?, num(hi)?);
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok(lo..=hi)
}
