//! Size caps for constructions whose carriers grow multiplicatively.

use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Default cap on the number of elements of any materialized table.
pub const DEFAULT_MAX_TABLE: usize = 4096;

/// Environment variable overriding [`DEFAULT_MAX_TABLE`].
pub const MAX_TABLE_ENV: &str = "HSG_MAX_TABLE";

/// Cap on the element count of a materialized Cayley table. Read once from
/// `HSG_MAX_TABLE`, falling back to [`DEFAULT_MAX_TABLE`].
pub fn max_table() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var(MAX_TABLE_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .filter(|&v| v > 0)
            .unwrap_or(DEFAULT_MAX_TABLE)
    })
}

pub(crate) fn check_cap(what: &'static str, size: u128, cap: usize) -> Result<()> {
    if size > cap as u128 {
        return Err(Error::CapExceeded {
            what,
            size,
            cap: cap as u128,
        });
    }
    Ok(())
}
