//! Dotted Weyl group actions: Bott's algorithm on Grassmannians (general and
//! Frobenius forms), regular pairs and the straightening map `φ`, and the
//! search for linking sequences in type B.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{FrobCoords, Partition};

/// A weight with entries in `½Z`, stored as twice its value so that all
/// arithmetic stays in the integers.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Weight {
    doubled: Vec<i64>,
}

impl Weight {
    pub fn from_doubled(doubled: Vec<i64>) -> Self {
        Weight { doubled }
    }

    pub fn from_integers(entries: &[i64]) -> Self {
        Weight { doubled: entries.iter().map(|x| 2 * x).collect() }
    }

    pub fn doubled(&self) -> &[i64] {
        &self.doubled
    }

    pub fn rank(&self) -> usize {
        self.doubled.len()
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight { doubled: self.doubled.iter().zip(&other.doubled).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight { doubled: self.doubled.iter().zip(&other.doubled).map(|(a, b)| a - b).collect() }
    }

    /// Integer entries, if every entry is integral.
    pub fn to_integers(&self) -> Option<Vec<i64>> {
        self.doubled.iter().map(|&d| (d % 2 == 0).then_some(d / 2)).collect()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.doubled.iter().map(|&d| if d % 2 == 0 { (d / 2).to_string() } else { format!("{d}/2") }).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

// ---------------------------------------------------------------------------
// Type A

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DottedSort {
    /// `σ(α + ρ)`, strictly decreasing.
    pub sorted: Vec<i64>,
    /// `σ(α + ρ) - ρ`.
    pub result: Vec<i64>,
    /// Inversion count of the sorting permutation.
    pub length: usize,
    /// `permutation[k]` is the index in `α + ρ` of the `k`-th sorted entry.
    pub permutation: Vec<usize>,
}

/// Sorts `α + ρ` into decreasing order. Returns `None` if it has a repeated
/// entry, in which case all cohomology vanishes.
pub fn dotted_sort(alpha: &[i64], rho: &[i64]) -> Option<DottedSort> {
    assert_eq!(alpha.len(), rho.len(), "weight and ρ must have the same length");
    let shifted: Vec<i64> = alpha.iter().zip(rho).map(|(a, r)| a + r).collect();
    let mut permutation: Vec<usize> = (0..shifted.len()).collect();
    permutation.sort_by(|&i, &j| shifted[j].cmp(&shifted[i]));
    let sorted: Vec<i64> = permutation.iter().map(|&i| shifted[i]).collect();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    let length = (0..shifted.len())
        .flat_map(|i| (i + 1..shifted.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| shifted[i] < shifted[j])
        .count();
    let result = sorted.iter().zip(rho).map(|(s, r)| s - r).collect();
    Some(DottedSort { sorted, result, length, permutation })
}

/// `ρ = (n-1, …, 1, 0)`.
pub fn rho_a(n: usize) -> Vec<i64> {
    (0..n as i64).rev().collect()
}

/// Bott's theorem on `Gr(k, n)` for the bundle with weight `α = (μ | λ)`:
/// `μ` padded to `n - k` entries followed by `λ` padded to `k`. Returns the
/// weight `σ(α+ρ) - ρ` and the cohomological degree `ℓ(σ)`.
pub fn bott_general(lambda: &Partition, mu: &Partition, k: usize, n: usize) -> Result<Option<(Vec<i64>, usize)>> {
    if k > n || lambda.len() > k || mu.len() > n - k {
        return Err(Error::Precondition(format!(
            "need ℓ(λ) ≤ k ≤ n and ℓ(μ) ≤ n-k, got λ={lambda:?}, μ={mu:?}, k={k}, n={n}"
        )));
    }
    let alpha: Vec<i64> = (0..n - k).map(|i| mu.part(i) as i64).chain((0..k).map(|i| lambda.part(i) as i64)).collect();
    Ok(dotted_sort(&alpha, &rho_a(n)).map(|s| (s.result, s.length)))
}

/// Frobenius form of Bott's theorem for `S_{(a|b)}` of the tautological
/// rank-`k` bundle: vanishes iff `a_d < n - k`, otherwise the answer is
/// `(a - (n-k) | b + (n-k))` in degree `d(n-k)`.
pub fn bott_frobenius(f: &FrobCoords, k: usize, n: usize) -> Result<Option<(FrobCoords, usize)>> {
    let lambda = Partition::from_frobenius(f)?;
    if k > n || lambda.len() > k {
        return Err(Error::Precondition(format!("need ℓ(λ) ≤ k ≤ n, got λ={lambda:?}, k={k}, n={n}")));
    }
    let shift = n - k;
    let d = f.rank();
    if d > 0 && f.arms[d - 1] < shift {
        return Ok(None);
    }
    let shifted = FrobCoords {
        arms: f.arms.iter().map(|a| a - shift).collect(),
        legs: f.legs.iter().map(|b| b + shift).collect(),
    };
    Ok(Some((shifted, d * shift)))
}

/// `(λ | μ) + ρ` for `λ` padded to `m` entries and `μ` to `n - m`.
fn pair_weight(lambda: &Partition, mu: &Partition, m: usize, n: usize) -> Result<Vec<i64>> {
    if lambda.len() > m || m > n || mu.len() > n - m {
        return Err(Error::Precondition(format!(
            "need ℓ(λ) ≤ m and ℓ(μ) ≤ n - m, got λ={lambda:?}, μ={mu:?}, m={m}, n={n}"
        )));
    }
    Ok((0..m).map(|i| lambda.part(i) as i64).chain((0..n - m).map(|i| mu.part(i) as i64)).collect())
}

/// Whether `(λ | μ) + ρ` has distinct entries.
pub fn is_regular_pair(lambda: &Partition, mu: &Partition, m: usize, n: usize) -> Result<bool> {
    let alpha = pair_weight(lambda, mu, m, n)?;
    Ok(dotted_sort(&alpha, &rho_a(n)).is_some())
}

/// Straightens `(λ | μ)`: returns `α = w•(λ | μ)` and `ℓ(w)`.
pub fn phi(lambda: &Partition, mu: &Partition, m: usize, n: usize) -> Result<(Partition, usize)> {
    let alpha = pair_weight(lambda, mu, m, n)?;
    let sorted = dotted_sort(&alpha, &rho_a(n))
        .ok_or_else(|| Error::SingularPair { lambda: lambda.to_string(), mu: mu.to_string() })?;
    let parts = sorted.result.iter().map(|&x| x as usize).collect();
    Ok((Partition::new(parts)?, sorted.length))
}

// ---------------------------------------------------------------------------
// Type B linkage

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Root {
    /// `ε_i`
    Short(usize),
    /// `ε_i - ε_j`, `i < j`
    Minus(usize, usize),
    /// `ε_i + ε_j`, `i < j`
    Plus(usize, usize),
}

impl Root {
    /// The root as a weight.
    pub fn weight(&self, rank: usize) -> Weight {
        let mut d = vec![0; rank];
        match *self {
            Root::Short(i) => d[i] = 2,
            Root::Minus(i, j) => {
                d[i] = 2;
                d[j] = -2;
            }
            Root::Plus(i, j) => {
                d[i] = 2;
                d[j] = 2;
            }
        }
        Weight::from_doubled(d)
    }

    /// `⟨v, γ^∨⟩` when it is an integer.
    pub fn coroot_pairing(&self, v: &Weight) -> Option<i64> {
        let d = v.doubled();
        match *self {
            Root::Short(i) => Some(d[i]),
            Root::Minus(i, j) => {
                let s = d[i] - d[j];
                (s % 2 == 0).then_some(s / 2)
            }
            Root::Plus(i, j) => {
                let s = d[i] + d[j];
                (s % 2 == 0).then_some(s / 2)
            }
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Root::Short(i) => write!(f, "ε_{}", i + 1),
            Root::Minus(i, j) => write!(f, "ε_{}-ε_{}", i + 1, j + 1),
            Root::Plus(i, j) => write!(f, "ε_{}+ε_{}", i + 1, j + 1),
        }
    }
}

/// The root system of `so(2r+1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TypeB {
    pub rank: usize,
}

impl TypeB {
    /// `ε_i`, then `ε_i - ε_j`, then `ε_i + ε_j`, each lexicographic in the indices.
    pub fn positive_roots(&self) -> Vec<Root> {
        let r = self.rank;
        let pairs: Vec<(usize, usize)> = (0..r).flat_map(|i| (i + 1..r).map(move |j| (i, j))).collect();
        (0..r)
            .map(Root::Short)
            .chain(pairs.iter().map(|&(i, j)| Root::Minus(i, j)))
            .chain(pairs.iter().map(|&(i, j)| Root::Plus(i, j)))
            .collect()
    }

    /// `ρ = ½(2r-1, 2r-3, …, 1)`.
    pub fn rho(&self) -> Weight {
        Weight::from_doubled((0..self.rank).map(|i| 2 * (self.rank - i) as i64 - 1).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkingSequence {
    pub roots: Vec<Root>,
    /// `λ(0), …, λ(r)`.
    pub weights: Vec<Weight>,
    /// `n_i = ⟨λ(i-1) + ρ, γ_i^∨⟩`.
    pub steps: Vec<i64>,
}

impl LinkingSequence {
    /// Re-checks `λ(i) = λ(i-1) - n_i γ_i` with `n_i` a positive integer.
    pub fn verify(&self, sys: &TypeB) -> bool {
        let rho = sys.rho();
        self.weights.len() == self.roots.len() + 1
            && self.steps.len() == self.roots.len()
            && self.roots.iter().enumerate().all(|(i, g)| {
                let n = g.coroot_pairing(&self.weights[i].add(&rho));
                let gw = g.weight(sys.rank);
                n == Some(self.steps[i])
                    && self.steps[i] > 0
                    && self.weights[i + 1]
                        .doubled()
                        .iter()
                        .zip(self.weights[i].doubled())
                        .zip(gw.doubled())
                        .all(|((next, prev), gd)| *next == prev - self.steps[i] * gd)
            })
    }
}

/// All linking sequences from `start` to `target` of at most `max_len` steps.
///
/// Each step lowers the weight by a positive combination of positive roots,
/// so a branch is abandoned as soon as `current - target` leaves the
/// positive root cone (some partial sum of its entries goes negative).
pub fn find_linking_sequences(
    start: &Weight,
    target: &Weight,
    sys: &TypeB,
    max_len: usize,
) -> Result<Vec<LinkingSequence>> {
    if max_len > 4 {
        return Err(Error::Precondition(format!("max_len {max_len} exceeds 4")));
    }
    if start.rank() != sys.rank || target.rank() != sys.rank {
        return Err(Error::Precondition("weights must have the rank of the root system".into()));
    }
    let roots = sys.positive_roots();
    let rho = sys.rho();
    let mut out = Vec::new();
    let mut path = LinkingSequence { roots: vec![], weights: vec![start.clone()], steps: vec![] };
    link_dfs(target, sys, &roots, &rho, max_len, &mut path, &mut out);
    Ok(out)
}

fn in_cone(diff: &Weight) -> bool {
    let mut partial = 0;
    for &d in diff.doubled() {
        if d % 2 != 0 {
            return false;
        }
        partial += d / 2;
        if partial < 0 {
            return false;
        }
    }
    true
}

fn link_dfs(
    target: &Weight,
    sys: &TypeB,
    roots: &[Root],
    rho: &Weight,
    budget: usize,
    path: &mut LinkingSequence,
    out: &mut Vec<LinkingSequence>,
) {
    let current = path.weights.last().expect("path starts with a weight").clone();
    if &current == target {
        out.push(path.clone());
        return;
    }
    if budget == 0 || !in_cone(&current.sub(target)) {
        return;
    }
    let shifted = current.add(rho);
    for &g in roots {
        let Some(n) = g.coroot_pairing(&shifted) else { continue };
        if n <= 0 {
            continue;
        }
        let step = g.weight(sys.rank);
        let next = Weight::from_doubled(current.doubled().iter().zip(step.doubled()).map(|(c, s)| c - n * s).collect());
        path.roots.push(g);
        path.steps.push(n);
        path.weights.push(next);
        link_dfs(target, sys, roots, rho, budget - 1, path, out);
        path.roots.pop();
        path.steps.pop();
        path.weights.pop();
    }
}

/// `ζ = ((½ - m)^n, 0^m)` in the rank `m + n` root system.
pub fn zeta(m: usize, n: usize) -> Weight {
    let head = 1 - 2 * m as i64;
    Weight::from_doubled(std::iter::repeat_n(head, n).chain(std::iter::repeat_n(0, m)).collect())
}

/// `ζ - 2ε_n`.
pub fn zeta_lowered(m: usize, n: usize) -> Weight {
    let mut d = zeta(m, n).doubled().to_vec();
    d[n - 1] -= 4;
    Weight::from_doubled(d)
}
