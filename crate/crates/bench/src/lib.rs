//! Shared fixtures for the criterion benchmarks.

use fusionkit::{catalog_table, Bounds, GroupTable};

pub fn fixture(name: &str) -> GroupTable {
    catalog_table(name, &Bounds::default()).expect("catalog fixture")
}
