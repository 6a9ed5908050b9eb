//! Shared inputs for the criterion benchmarks.

use spo_core::Partition;

/// All partitions of size at most `n` that are admissible for `m`.
pub fn admissible_up_to(n: usize, m: usize) -> Vec<Partition> {
    Partition::all_up_to(n).into_iter().filter(|p| p.is_admissible(m)).collect()
}

/// All partitions of size at most `n` with at most `rows` rows.
pub fn short_partitions(n: usize, rows: usize) -> Vec<Partition> {
    Partition::all_up_to(n).into_iter().filter(|p| p.len() <= rows).collect()
}
