//! Brute-force reference computations that share no code with the
//! tableau-rule implementations in [`crate::schur`].
//!
//! Products of Schur polynomials are expanded at the level of monomial
//! coefficients: the coefficient of `x^α` in `s_μ s_ν` is
//! `Σ_{β+γ=α} K_{μβ} K_{νγ}`, with each Kostka number obtained by filling
//! tableaux cell by cell. The Schur expansion is then peeled off from the
//! dominant monomials, largest first.

use std::collections::{BTreeMap, HashMap};

use crate::partition::Partition;

/// Number of semistandard tableaux of shape `shape` and content `content`
/// (`content[v]` entries equal to `v + 1`).
pub fn ssyt_count(shape: &Partition, content: &[usize]) -> u64 {
    if shape.size() != content.iter().sum::<usize>() {
        return 0;
    }
    let cells: Vec<(usize, usize)> = (0..shape.len()).flat_map(|r| (0..shape.part(r)).map(move |c| (r, c))).collect();
    let mut grid: Vec<Vec<usize>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
    let mut left = content.to_vec();
    fill(&cells, 0, &mut grid, &mut left)
}

fn fill(cells: &[(usize, usize)], pos: usize, grid: &mut [Vec<usize>], left: &mut [usize]) -> u64 {
    let Some(&(r, c)) = cells.get(pos) else { return 1 };
    let lo_row = if c > 0 { grid[r][c - 1] } else { 0 };
    let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 0 };
    let mut total = 0;
    for v in lo_row.max(lo_col)..left.len() {
        if left[v] == 0 {
            continue;
        }
        left[v] -= 1;
        grid[r][c] = v;
        total += fill(cells, pos + 1, grid, left);
        left[v] += 1;
    }
    total
}

/// Compositions `β ≤ α` entrywise with `|β| = size`.
fn sub_compositions(alpha: &[usize], size: usize) -> Vec<Vec<usize>> {
    fn rec(alpha: &[usize], pos: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if pos == alpha.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let rest: usize = alpha[pos + 1..].iter().sum();
        for b in left.saturating_sub(rest)..=alpha[pos].min(left) {
            cur.push(b);
            rec(alpha, pos + 1, left - b, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(alpha, 0, size, &mut Vec::new(), &mut out);
    out
}

struct Kostka {
    cache: HashMap<(Partition, Vec<usize>), u64>,
}

impl Kostka {
    fn get(&mut self, shape: &Partition, content: &[usize]) -> u64 {
        let key = (shape.clone(), content.to_vec());
        if let Some(&v) = self.cache.get(&key) {
            return v;
        }
        let v = ssyt_count(shape, content);
        self.cache.insert(key, v);
        v
    }
}

/// Coefficients of `s_μ s_ν` in the Schur basis, by monomial expansion.
pub fn lr_by_monomials(mu: &Partition, nu: &Partition) -> BTreeMap<Partition, u64> {
    let size = mu.size() + nu.size();
    let vars = mu.len() + nu.len();
    let mut kostka = Kostka { cache: HashMap::new() };

    // Coefficient of x^α for every partition α, padded to `vars` entries.
    let mut dominant: Vec<(Partition, i128)> = Partition::all_of_size(size)
        .into_iter()
        .filter(|a| a.len() <= vars)
        .map(|alpha| {
            let mut padded = alpha.parts().to_vec();
            padded.resize(vars, 0);
            let mut coeff = 0u64;
            for beta in sub_compositions(&padded, mu.size()) {
                let gamma: Vec<usize> = padded.iter().zip(&beta).map(|(a, b)| a - b).collect();
                let left = kostka.get(mu, &beta);
                if left > 0 {
                    coeff += left * kostka.get(nu, &gamma);
                }
            }
            (alpha, coeff as i128)
        })
        .collect();
    // Reverse lexicographic order refines dominance, so each leading
    // dominant monomial is the top of one Schur polynomial.
    dominant.sort_by(|a, b| b.0.parts().cmp(a.0.parts()));

    let mut out = BTreeMap::new();
    for k in 0..dominant.len() {
        let (lambda, c) = dominant[k].clone();
        if c == 0 {
            continue;
        }
        assert!(c > 0, "negative Schur coefficient for {lambda:?}");
        for entry in dominant.iter_mut().skip(k) {
            let mut content = entry.0.parts().to_vec();
            content.resize(vars, 0);
            entry.1 -= c * kostka.get(&lambda, &content) as i128;
        }
        out.insert(lambda, c as u64);
    }
    out
}
