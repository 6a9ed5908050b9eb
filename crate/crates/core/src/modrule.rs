//! The modification rule for `SpO(2m|1)` and `O(2m+1)`: assigns to a
//! partition `μ` an index `i(μ)` and an admissible partition `τ(μ)`, or
//! declares `i(μ) = ∞`. Two independent constructions are provided, one by
//! removing border strips and one through the dotted action of `D_∞`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ModResult {
    Finite { i: usize, tau: Partition, strips: usize },
    Infinite,
}

impl ModResult {
    pub fn index(&self) -> Option<usize> {
        match self {
            ModResult::Finite { i, .. } => Some(*i),
            ModResult::Infinite => None,
        }
    }

    pub fn tau(&self) -> Option<&Partition> {
        match self {
            ModResult::Finite { tau, .. } => Some(tau),
            ModResult::Infinite => None,
        }
    }
}

impl fmt::Debug for ModResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModResult::Finite { i, tau, strips } => write!(f, "Finite(i={i}, τ={tau:?}, strips={strips})"),
            ModResult::Infinite => f.write_str("Infinite"),
        }
    }
}

/// Border-strip version: while `μ` is not admissible, strip `2c - 2m - 1`
/// boxes off the rim starting from the first column (`c` = current first
/// column length), adding `c(R) - 1` to the index. The terminal partition is
/// twisted by `σ` when an odd number of strips was removed.
pub fn modrule_border(mu: &Partition, m: usize) -> ModResult {
    let mut current = mu.clone();
    let mut i = 0;
    let mut strips = 0;
    while !current.is_admissible(m) {
        let len = 2 * current.column(0) - 2 * m - 1;
        let Some((rest, cols)) = current.remove_border_strip(len) else {
            return ModResult::Infinite;
        };
        i += cols - 1;
        strips += 1;
        current = rest;
    }
    let tau = if strips % 2 == 0 { current } else { current.sigma(m).expect("loop exits on an admissible partition") };
    ModResult::Finite { i, tau, strips }
}

/// Number of coordinates of `D_∞` kept by [`modrule_weyl`].
pub fn weyl_truncation(mu: &Partition, m: usize) -> usize {
    mu.size() + 2 * m + 2
}

/// Weyl-group version: straighten `μ^T + ρ`, `ρ = -½(2m+1, 2m+3, …)`, by
/// signed permutations with an even number of sign changes.
///
/// Coordinates are doubled, so every entry of `2(μ^T + ρ)` is odd and never
/// zero. The rule is infinite exactly when two entries share an absolute
/// value; otherwise the dominant representative is `(±a_1, -a_2, -a_3, …)`
/// for the sorted absolute values, with the sign of `a_1` fixed by the parity
/// of the number of positive entries.
pub fn modrule_weyl(mu: &Partition, m: usize) -> ModResult {
    let n = weyl_truncation(mu, m);
    let conj = mu.conjugate();
    let rho2 = |i: usize| -(2 * m as i64 + 2 * i as i64 + 1);
    let x: Vec<i64> = (0..n).map(|i| 2 * conj.part(i) as i64 + rho2(i)).collect();

    let mut abs: Vec<i64> = x.iter().map(|v| v.abs()).collect();
    abs.sort_unstable();
    if abs.windows(2).any(|w| w[0] == w[1]) {
        return ModResult::Infinite;
    }
    let positives = x.iter().filter(|&&v| v > 0).count();
    let mut y: Vec<i64> = abs.iter().map(|a| -a).collect();
    if positives % 2 == 1 {
        y[0] = abs[0];
    }
    let cols: Vec<usize> = y
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let c = v - rho2(i);
            debug_assert!(c >= 0 && c % 2 == 0, "straightened weight left the dominant chamber");
            (c / 2) as usize
        })
        .collect();
    let tau = Partition::from_columns(&cols).expect("dominant weights give partitions");

    // Length of the straightening element of D_n.
    let mut length = 0;
    for i in 0..n {
        for j in i + 1..n {
            if x[i] < x[j] {
                length += 1;
            }
            if x[i] + x[j] > 0 {
                length += 1;
            }
        }
    }
    // Each strip in the border version corresponds to one positive entry,
    // except a positive entry that is already the smallest in absolute value.
    let min_pos = x.iter().min_by_key(|v| v.abs()).is_some_and(|&v| v > 0);
    let strips = positives - usize::from(min_pos);
    ModResult::Finite { i: length, tau, strips }
}

/// The unique `μ` with `i(μ) = 1` and `τ(μ) = λ`: change the first
/// two column lengths to `2m+2-λ^T_2` and `2m+2-λ^T_1`.
pub fn tor1_partner(lambda: &Partition, m: usize) -> Result<Partition> {
    if !lambda.is_admissible(m) {
        return Err(Error::NotAdmissible { partition: lambda.to_string(), m });
    }
    let mut cols = lambda.conjugate().parts().to_vec();
    cols.resize(cols.len().max(2), 0);
    let (c1, c2) = (cols[0], cols[1]);
    cols[0] = 2 * m + 2 - c2;
    cols[1] = 2 * m + 2 - c1;
    Partition::from_columns(&cols)
}
