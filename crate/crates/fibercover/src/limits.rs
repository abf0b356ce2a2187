//! Process-wide caps on search sizes.
//!
//! Defaults can be overridden at runtime, which is how the CLI honours its
//! environment variables.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};

pub const DEFAULT_ORDER_CAP: u64 = 10_000_000;
pub const DEFAULT_ENUMERATION_CAP: u64 = 10_000_000;
pub const DEFAULT_NORMALIZER_DEGREE: u64 = 9;
/// Groups at most this large may be listed element by element.
pub const DEFAULT_ELEMENT_LIST_CAP: u64 = 2_000_000;

static ORDER_CAP: AtomicU64 = AtomicU64::new(DEFAULT_ORDER_CAP);
static ENUMERATION_CAP: AtomicU64 = AtomicU64::new(DEFAULT_ENUMERATION_CAP);
static NORMALIZER_DEGREE: AtomicU64 = AtomicU64::new(DEFAULT_NORMALIZER_DEGREE);
static ELEMENT_LIST_CAP: AtomicU64 = AtomicU64::new(DEFAULT_ELEMENT_LIST_CAP);

pub fn order_cap() -> u64 {
    ORDER_CAP.load(Ordering::Relaxed)
}

pub fn set_order_cap(v: u64) {
    ORDER_CAP.store(v, Ordering::Relaxed);
}

pub fn enumeration_cap() -> u64 {
    ENUMERATION_CAP.load(Ordering::Relaxed)
}

pub fn set_enumeration_cap(v: u64) {
    ENUMERATION_CAP.store(v, Ordering::Relaxed);
}

pub fn normalizer_degree() -> u64 {
    NORMALIZER_DEGREE.load(Ordering::Relaxed)
}

pub fn set_normalizer_degree(v: u64) {
    NORMALIZER_DEGREE.store(v, Ordering::Relaxed);
}

pub fn element_list_cap() -> u64 {
    ELEMENT_LIST_CAP.load(Ordering::Relaxed)
}

pub fn set_element_list_cap(v: u64) {
    ELEMENT_LIST_CAP.store(v, Ordering::Relaxed);
}

pub(crate) fn check(what: &str, value: u128, cap: u64) -> Result<()> {
    if value > cap as u128 {
        Err(Error::CapExceeded {
            what: format!("{what} ({value})"),
            cap: cap as u128,
        })
    } else {
        Ok(())
    }
}
