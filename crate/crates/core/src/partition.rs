//! Integer partitions and the combinatorics built on them: conjugation,
//! Frobenius coordinates, the `Q`-families of partitions with constant
//! arm-minus-leg offset, admissibility for `SpO(2m|1)` / `O(2m+1)`, the
//! first-column involution `σ`, and border-strip removal.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing tuple of positive integers.
///
/// Trailing zeros are trimmed on construction, so two partitions compare
/// equal exactly when their Young diagrams coincide. The total order is
/// by size first and then lexicographic on the parts, which is the order
/// used for every deterministic listing in this crate.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// Sorts the input into decreasing order first.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(value^count)`.
    pub fn rectangle(value: usize, count: usize) -> Self {
        if value == 0 {
            return Self::empty();
        }
        Partition(vec![value; count])
    }

    /// The partition whose column lengths are `columns`.
    pub fn from_columns(columns: &[usize]) -> Result<Self> {
        Ok(Self::new(columns.to_vec())?.conjugate())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Length of the `j`-th column (0-based).
    pub fn column(&self, j: usize) -> usize {
        self.0.iter().take_while(|&&p| p > j).count()
    }

    pub fn conjugate(&self) -> Self {
        let width = self.part(0);
        Partition((0..width).map(|j| self.column(j)).collect())
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Largest `d` with `λ_d ≥ d`.
    pub fn rank(&self) -> usize {
        self.0.iter().enumerate().take_while(|(i, &p)| p > *i).count()
    }

    pub fn frobenius(&self) -> FrobCoords {
        let d = self.rank();
        let conj = self.conjugate();
        FrobCoords {
            arms: (0..d).map(|i| self.0[i] - i - 1).collect(),
            legs: (0..d).map(|i| conj.0[i] - i - 1).collect(),
        }
    }

    pub fn from_frobenius(coords: &FrobCoords) -> Result<Self> {
        coords.validate()?;
        let d = coords.rank();
        // Rows 1..d are read off the arms; below the diagonal square the
        // row lengths are determined by the legs.
        let mut rows: Vec<usize> = (0..d).map(|i| coords.arms[i] + i + 1).collect();
        let depth = if d == 0 { 0 } else { coords.legs[0] + 1 };
        for r in d..depth {
            // Row r (0-based, r ≥ d) has one box in column j < d iff leg_j + j ≥ r.
            let width = (0..d).filter(|&j| coords.legs[j] + j >= r).count();
            rows.push(width);
        }
        Partition::new(rows)
    }

    /// `λ^T_1 + λ^T_2 ≤ 2m + 1`.
    pub fn is_admissible(&self, m: usize) -> bool {
        self.column(0) + self.column(1) <= 2 * m + 1
    }

    /// Replaces the first column length `c` by `2m + 1 - c`.
    pub fn sigma(&self, m: usize) -> Result<Self> {
        if !self.is_admissible(m) {
            return Err(Error::NotAdmissible { partition: self.to_string(), m });
        }
        let mut cols = self.conjugate().0;
        let first = 2 * m + 1 - self.column(0);
        match cols.first_mut() {
            Some(c) => *c = first,
            None => cols.push(first),
        }
        Partition::from_columns(&cols)
    }

    /// Whichever of `λ`, `λ^σ` has at most `m` rows.
    pub fn bar(&self, m: usize) -> Result<Self> {
        if !self.is_admissible(m) {
            return Err(Error::NotAdmissible { partition: self.to_string(), m });
        }
        if self.len() <= m {
            Ok(self.clone())
        } else {
            self.sigma(m)
        }
    }

    /// Removes `len` boxes along the rim, starting at the bottom box of the
    /// first column and walking north-east. Returns the remaining partition
    /// and the number of columns the strip meets, or `None` when the rim
    /// runs out or the remainder is not a Young diagram.
    pub fn remove_border_strip(&self, len: usize) -> Option<(Partition, usize)> {
        if len == 0 || self.is_empty() {
            return None;
        }
        let mut removed = vec![0usize; self.len()];
        let mut columns = 1;
        let (mut r, mut c) = (self.len() - 1, 0usize);
        let mut taken = 1;
        removed[r] += 1;
        while taken < len {
            if c + 1 < self.0[r] {
                c += 1;
                columns += 1;
            } else if r > 0 {
                r -= 1;
            } else {
                return None;
            }
            removed[r] += 1;
            taken += 1;
        }
        // Every row keeps a left-justified prefix; the walk ends at column c
        // of row r, which must be that row's last box.
        if c + 1 != self.0[r] {
            return None;
        }
        let rows: Vec<usize> = self.0.iter().zip(&removed).map(|(p, k)| p - k).collect();
        Partition::new(rows).ok().map(|p| (p, columns))
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fill_partitions(n, n, &mut cur, &mut out);
        out
    }

    /// All partitions of size at most `n`, sorted by the crate order.
    pub fn all_up_to(n: usize) -> Vec<Partition> {
        let mut out: Vec<Partition> = (0..=n).flat_map(Self::all_of_size).collect();
        out.sort();
        out
    }
}

fn fill_partitions(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for p in (1..=rest.min(max)).rev() {
        cur.push(p);
        fill_partitions(rest - p, p, cur, out);
        cur.pop();
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::InvalidPartition(format!("{s:?}: {e}")))?;
        Self::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

/// Shorthand for building partitions in code and tests; panics on invalid input.
#[macro_export]
macro_rules! part {
    () => { $crate::partition::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::partition::Partition::new(vec![$($p),+]).expect("invalid partition literal")
    };
}

/// Frobenius coordinates `(a_1, …, a_d | b_1, …, b_d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct FrobCoords {
    pub arms: Vec<usize>,
    pub legs: Vec<usize>,
}

impl FrobCoords {
    pub fn new(arms: Vec<usize>, legs: Vec<usize>) -> Result<Self> {
        let f = FrobCoords { arms, legs };
        f.validate()?;
        Ok(f)
    }

    pub fn rank(&self) -> usize {
        self.arms.len()
    }

    /// `a_1 + … + a_d`.
    pub fn degree(&self) -> usize {
        self.arms.iter().sum()
    }

    fn validate(&self) -> Result<()> {
        if self.arms.len() != self.legs.len() {
            return Err(Error::InvalidFrobenius(format!("{} arms but {} legs", self.arms.len(), self.legs.len())));
        }
        let strictly = |v: &[usize]| v.windows(2).all(|w| w[0] > w[1]);
        if !strictly(&self.arms) || !strictly(&self.legs) {
            return Err(Error::InvalidFrobenius(format!(
                "({:?} | {:?}) is not strictly decreasing",
                self.arms, self.legs
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Parity {
    Any,
    Even,
    Odd,
}

impl Parity {
    pub fn accepts(self, d: usize) -> bool {
        match self {
            Parity::Any => true,
            Parity::Even => d.is_multiple_of(2),
            Parity::Odd => d % 2 == 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum QBound {
    MaxSize(usize),
    MaxDegree(usize),
}

/// Describes a finite slice of `Q_i`, `Q_i^{ev}` or `Q_i^{od}`: partitions
/// whose Frobenius coordinates satisfy `a_j - b_j = offset` for every `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QSetSpec {
    pub offset: i64,
    pub parity: Parity,
    pub bound: QBound,
}

impl QSetSpec {
    pub fn new(offset: i64, parity: Parity, bound: QBound) -> Self {
        QSetSpec { offset, parity, bound }
    }
}

/// Lists the partitions described by `spec`, sorted by size then parts.
pub fn enumerate_q(spec: &QSetSpec) -> Vec<Partition> {
    let lo = spec.offset.max(0) as usize;
    // Cost of an arm `a` under the bound: its box count `2a - offset + 1`,
    // or `a` itself for a degree bound.
    let cost = |a: usize| -> usize {
        match spec.bound {
            QBound::MaxSize(_) => (2 * a as i64 - spec.offset + 1) as usize,
            QBound::MaxDegree(_) => a,
        }
    };
    let budget = match spec.bound {
        QBound::MaxSize(s) | QBound::MaxDegree(s) => s,
    };

    let mut out = Vec::new();
    let mut d = 0;
    loop {
        // Cheapest rank-d tuple is (lo+d-1, …, lo).
        let min_cost: usize = (0..d).map(|j| cost(lo + j)).sum();
        if min_cost > budget {
            break;
        }
        if spec.parity.accepts(d) {
            let mut arms = Vec::with_capacity(d);
            arms_rec(d, lo, None, budget, &cost, &mut arms, &mut |arms| {
                let legs = arms.iter().map(|&a| (a as i64 - spec.offset) as usize).collect();
                let f = FrobCoords { arms: arms.to_vec(), legs };
                out.push(Partition::from_frobenius(&f).expect("valid by construction"));
            });
        }
        d += 1;
        if d > budget + 1 {
            break;
        }
    }
    out.sort();
    out
}

fn arms_rec(
    remaining: usize,
    lo: usize,
    upper: Option<usize>,
    budget: usize,
    cost: &dyn Fn(usize) -> usize,
    arms: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if remaining == 0 {
        emit(arms);
        return;
    }
    // The remaining `remaining - 1` arms need at least these values below us.
    let floor_rest: usize = (0..remaining - 1).map(|j| cost(lo + j)).sum();
    let mut a = lo + remaining - 1;
    loop {
        if upper.is_some_and(|u| a >= u) {
            break;
        }
        let c = cost(a);
        if c + floor_rest > budget {
            break;
        }
        arms.push(a);
        arms_rec(remaining - 1, lo, Some(a), budget - c, cost, arms, emit);
        arms.pop();
        a += 1;
    }
}


#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn partition_strategy(max: usize) -> impl Strategy<Value = Partition> {
        proptest::collection::vec(0..=max, 0..=max).prop_map(Partition::from_unsorted)
    }

    proptest! {
        #[test]
        fn conjugate_is_involutive(p in partition_strategy(8)) {
            prop_assert_eq!(p.conjugate().conjugate(), p.clone());
            prop_assert_eq!(p.conjugate().size(), p.size());
        }

        #[test]
        fn frobenius_round_trips(p in partition_strategy(8)) {
            let f = p.frobenius();
            prop_assert_eq!(Partition::from_frobenius(&f).unwrap(), p.clone());
            prop_assert_eq!(f.rank(), p.rank());
            prop_assert_eq!(p.conjugate().frobenius(), FrobCoords { arms: f.legs, legs: f.arms });
        }

        #[test]
        fn coordinates_round_trip(arms in proptest::collection::btree_set(0usize..7, 0..4),
                                  legs_seed in proptest::collection::btree_set(0usize..7, 0..4)) {
            let d = arms.len().min(legs_seed.len());
            let arms: Vec<usize> = arms.into_iter().rev().take(d).collect();
            let legs: Vec<usize> = legs_seed.into_iter().rev().take(d).collect();
            let mut arms = arms; arms.sort_unstable_by(|a, b| b.cmp(a));
            let mut legs = legs; legs.sort_unstable_by(|a, b| b.cmp(a));
            let f = FrobCoords::new(arms, legs).unwrap();
            prop_assert_eq!(Partition::from_frobenius(&f).unwrap().frobenius(), f);
        }
    }
}
