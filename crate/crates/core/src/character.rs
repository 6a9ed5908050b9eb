//! Torus characters of `so(2m+1)` and `spo(2m|1)` representations, and the
//! Grothendieck-ring bookkeeping between the Schur basis, the stable basis of
//! irreducibles `S_{[λ]}`, and its specialization to rank `m`.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::Laurent;
use crate::modrule::{modrule_weyl, ModResult};
use crate::partition::{enumerate_q, Parity, Partition, QBound, QSetSpec};
use crate::ring::{determinant, half_determinant, CommRing};
use crate::schur::{skew, SchurSum};

// ---------------------------------------------------------------------------
// Complete homogeneous characters

fn h_even_cache() -> &'static Mutex<HashMap<(usize, usize), Laurent>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize), Laurent>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `[S^d(C^{2m})]`: the complete homogeneous polynomial of degree `d` in
/// `x_1^{±1}, …, x_m^{±1}`.
pub fn h_even(d: i64, m: usize) -> Laurent {
    if d < 0 {
        return Laurent::zero(m);
    }
    let d = d as usize;
    if let Some(hit) = h_even_cache().lock().expect("cache poisoned").get(&(d, m)) {
        return hit.clone();
    }
    // table[k] = h_k in the variables processed so far.
    let mut table: Vec<Laurent> = (0..=d).map(|k| if k == 0 { Laurent::one(m) } else { Laurent::zero(m) }).collect();
    for i in 0..m {
        for sign in [1i64, -1] {
            let mut next = vec![Laurent::zero(m); d + 1];
            for k in 0..=d {
                for j in 0..=k {
                    let power = Laurent::var_pow(m, i, sign * j as i64);
                    next[k] = next[k].add(&table[k - j].mul(&power));
                }
            }
            table = next;
        }
    }
    let value = table.pop().expect("table has d+1 entries");
    h_even_cache().lock().expect("cache poisoned").insert((d, m), value.clone());
    value
}

/// `[S^d(C^{2m+1})] = Σ_{i ≤ d} h_even(i)`.
pub fn h_odd(d: i64, m: usize) -> Laurent {
    (0..=d).fold(Laurent::zero(m), |acc, i| acc.add(&h_even(i, m)))
}

/// `[S^d(C^{2m|1})] = h_even(d) + h_even(d-1)`.
pub fn h_super(d: i64, m: usize) -> Laurent {
    h_even(d, m).add(&h_even(d - 1, m))
}

// ---------------------------------------------------------------------------
// Weyl group of type BC_m

/// A signed permutation `w(e_i) = signs[i]·e_{perm[i]}` with `det = sign`.
#[derive(Clone, Debug)]
struct SignedPerm {
    perm: Vec<usize>,
    signs: Vec<i64>,
    det: i64,
}

impl SignedPerm {
    /// `(w v)_{perm[i]} = signs[i] v_i`.
    fn act(&self, v: &[i64]) -> Vec<i64> {
        let mut out = vec![0; v.len()];
        for (i, &x) in v.iter().enumerate() {
            out[self.perm[i]] = self.signs[i] * x;
        }
        out
    }
}

fn signed_perms(m: usize) -> Vec<SignedPerm> {
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for k in 0..=p.len() {
                let mut q = p.clone();
                q.insert(k, n - 1);
                out.push(q);
            }
        }
        out
    }
    let mut out = Vec::new();
    for p in perms(m) {
        let inv = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        let psign = if inv % 2 == 0 { 1 } else { -1 };
        for mask in 0..(1u32 << m) {
            let signs: Vec<i64> = (0..m).map(|i| if mask & (1 << i) != 0 { -1 } else { 1 }).collect();
            let det = psign * signs.iter().product::<i64>();
            out.push(SignedPerm { perm: p.clone(), signs, det });
        }
    }
    out
}

/// `Σ_w det(w) y^{w v}` for a doubled exponent `v`.
fn alternant(v: &[i64]) -> Laurent {
    let m = v.len();
    Laurent::from_terms(m, signed_perms(m).into_iter().map(|w| (w.act(v), BigInt::from(w.det))))
}

fn halve_exponents(p: &Laurent) -> Result<Laurent> {
    let mut terms = Vec::with_capacity(p.len());
    for (e, c) in p.terms() {
        if e.iter().any(|x| x % 2 != 0) {
            return Err(Error::InexactDivision(format!("half-integral exponent {e:?} in a character")));
        }
        terms.push((e.iter().map(|x| x / 2).collect(), c.clone()));
    }
    Ok(Laurent::from_terms(p.nvars(), terms))
}

fn check_length(lambda: &Partition, m: usize) -> Result<()> {
    if lambda.len() > m {
        return Err(Error::Precondition(format!("ℓ({lambda:?}) exceeds m = {m}")));
    }
    Ok(())
}

/// Weyl character formula for the irreducible `so(2m+1)`-module of highest
/// weight `λ`: `A_{λ+ρ} / A_ρ` with `ρ = (m-½, …, ½)`, computed in the
/// square-root variables and divided exactly.
pub fn wcf_so_odd(lambda: &Partition, m: usize) -> Result<Laurent> {
    check_length(lambda, m)?;
    if m == 0 {
        return Ok(Laurent::one(0));
    }
    let rho2: Vec<i64> = (0..m).map(|i| 2 * (m - i) as i64 - 1).collect();
    let top: Vec<i64> = (0..m).map(|i| 2 * lambda.part(i) as i64 + rho2[i]).collect();
    let quotient = alternant(&top).div_exact(&alternant(&rho2))?;
    halve_exponents(&quotient)
}

/// Super Weyl character formula for `spo(2m|1)` with even positive roots
/// `ε_i ± ε_j`, `2ε_i` and odd positive roots `ε_i`:
///
/// `Π(1 + x_i^{-1}) · Σ_w det(w) x^{w(λ+ρ)-ρ} / Π_{α even}(1 - x^{-α})`,
/// where `ρ = ρ_0 - ρ_1 = (m-½, …, ½)`.
pub fn wcf_spo(lambda: &Partition, m: usize) -> Result<Laurent> {
    if !lambda.is_admissible(m) {
        return Err(Error::NotAdmissible { partition: lambda.to_string(), m });
    }
    check_length(lambda, m)?;
    if m == 0 {
        return Ok(Laurent::one(0));
    }
    let rho2: Vec<i64> = (0..m).map(|i| 2 * (m - i) as i64 - 1).collect();
    let top: Vec<i64> = (0..m).map(|i| 2 * lambda.part(i) as i64 + rho2[i]).collect();
    let mut numerator = Laurent::zero(m);
    for w in signed_perms(m) {
        let e: Vec<i64> = w.act(&top).iter().zip(&rho2).map(|(a, r)| (a - r) / 2).collect();
        numerator.add_term(e, &BigInt::from(w.det));
    }
    let one = Laurent::one(m);
    let inv = |i: usize, k: i64| Laurent::var_pow(m, i, -k);
    for i in 0..m {
        numerator = numerator.mul(&one.add(&inv(i, 1)));
    }
    let mut denominator = one.clone();
    for i in 0..m {
        denominator = denominator.mul(&one.sub(&inv(i, 2)));
        for j in i + 1..m {
            let mut e = vec![0; m];
            e[i] = -1;
            e[j] = 1;
            denominator = denominator.mul(&one.sub(&Laurent::monomial(e.clone(), BigInt::one())));
            e[j] = -1;
            denominator = denominator.mul(&one.sub(&Laurent::monomial(e, BigInt::one())));
        }
    }
    numerator.div_exact(&denominator)
}

/// Koike–Terada: `det(h_odd(λ_i - i + j) - h_odd(λ_i - i - j))` over
/// `ℓ(λ)` rows.
pub fn koike_terada(lambda: &Partition, m: usize) -> Result<Laurent> {
    koike_terada_rows(lambda, m, lambda.len())
}

/// Koike–Terada with an explicit matrix size `r ≥ ℓ(λ)`.
pub fn koike_terada_rows(lambda: &Partition, m: usize, r: usize) -> Result<Laurent> {
    check_length(lambda, m)?;
    if r < lambda.len() {
        return Err(Error::Precondition(format!("r = {r} is shorter than ℓ(λ) = {}", lambda.len())));
    }
    let matrix: Vec<Vec<Laurent>> = (0..r)
        .map(|i| {
            let li = lambda.part(i) as i64 - i as i64 - 1;
            (1..=r as i64).map(|j| h_odd(li + j, m).sub(&h_odd(li - j, m))).collect()
        })
        .collect();
    determinant(&matrix, &Laurent::one(m))
}

/// `½ det(h_super(λ_i - i + j) + h_super(λ_i - i - j + 2))` over
/// `r ≥ max(ℓ(λ), 1)` rows: the Euler characteristic of the Littlewood complex.
pub fn super_half_determinant(lambda: &Partition, m: usize, r: usize) -> Result<Laurent> {
    if r < lambda.len() || r == 0 {
        return Err(Error::Precondition(format!("r = {r} must be positive and at least ℓ(λ) = {}", lambda.len())));
    }
    let matrix: Vec<Vec<Laurent>> = (0..r)
        .map(|i| {
            let li = lambda.part(i) as i64 - i as i64 - 1;
            (1..=r as i64).map(|j| h_super(li + j, m).add(&h_super(li - j + 2, m))).collect()
        })
        .collect();
    half_determinant(&matrix, &Laurent::one(m))
}

/// Torus character of `S_λ(C^{2m|1})`: Jacobi–Trudi with `h_super`.
pub fn super_schur(lambda: &Partition, m: usize) -> Result<Laurent> {
    let r = lambda.len();
    let matrix: Vec<Vec<Laurent>> =
        (0..r).map(|i| (0..r).map(|j| h_super(lambda.part(i) as i64 - i as i64 + j as i64, m)).collect()).collect();
    determinant(&matrix, &Laurent::one(m))
}

/// Torus character of a Schur-basis class of `C^{2m|1}`.
pub fn super_schur_sum(f: &SchurSum, m: usize) -> Result<Laurent> {
    let mut out = Laurent::zero(m);
    for (p, c) in f.iter() {
        out.add_assign_scaled(&super_schur(p, m)?, c);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Grothendieck classes

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Basis {
    /// `[S_λ]`
    Schur,
    /// `[S_{[λ]}]`
    Irr,
}

/// A class written in one of the two bases. Irreducible labels `λ` and
/// `λ^σ` name the two twins that differ by the determinant character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KClass {
    pub basis: Basis,
    pub terms: SchurSum,
}

impl KClass {
    pub fn schur(terms: SchurSum) -> Self {
        KClass { basis: Basis::Schur, terms }
    }

    pub fn irr(terms: SchurSum) -> Self {
        KClass { basis: Basis::Irr, terms }
    }

    fn expect(&self, basis: Basis) -> Result<()> {
        if self.basis != basis {
            return Err(Error::Precondition(format!("expected a class in the {basis:?} basis")));
        }
        Ok(())
    }
}

/// Partitions `(2ν)^T` with at most `size` boxes: the summands of `S^•(∧²)`.
pub fn even_column_partitions(size: usize) -> Vec<Partition> {
    Partition::all_up_to(size / 2)
        .into_iter()
        .map(|nu| Partition::new(nu.parts().iter().map(|x| 2 * x).collect()).expect("doubling keeps order").conjugate())
        .collect()
}

/// `[S_{[λ]}] = Σ_{μ ∈ Q_{-1}} (-1)^{|μ|/2} [S_{λ/μ}]`.
pub fn irr_to_schur(k: &KClass) -> Result<KClass> {
    k.expect(Basis::Irr)?;
    let mut out = SchurSum::zero();
    for (lam, c) in k.terms.iter() {
        for mu in enumerate_q(&QSetSpec::new(-1, Parity::Any, QBound::MaxSize(lam.size()))) {
            let sign = if (mu.size() / 2) % 2 == 0 { c.clone() } else { -c };
            out.add_scaled(&skew(lam, &mu), &sign);
        }
    }
    Ok(KClass::schur(out))
}

/// `[S_λ] = Σ_{μ,ν} c^λ_{μ,(2ν)^T} [S_{[μ]}]`.
pub fn schur_to_irr(k: &KClass) -> Result<KClass> {
    k.expect(Basis::Schur)?;
    let mut out = SchurSum::zero();
    for (lam, c) in k.terms.iter() {
        for col in even_column_partitions(lam.size()) {
            out.add_scaled(&skew(lam, &col), c);
        }
    }
    Ok(KClass::irr(out))
}

/// Specializes a stable irreducible class to `SpO(2m|1)`:
/// `[S_{[λ]}] ↦ (-1)^{i(λ)} [S_{[τ(λ)]}]`, and to zero when `i(λ) = ∞`.
pub fn specialize_spo(k: &KClass, m: usize) -> Result<KClass> {
    k.expect(Basis::Irr)?;
    let mut out = SchurSum::zero();
    for (lam, c) in k.terms.iter() {
        if let ModResult::Finite { i, tau, .. } = modrule_weyl(lam, m) {
            let sign = if i % 2 == 0 { c.clone() } else { -c };
            out.add_term(tau, &sign);
        }
    }
    Ok(KClass::irr(out))
}

fn wcf_cache() -> &'static Mutex<HashMap<(Partition, usize), Laurent>> {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, usize), Laurent>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn wcf_so_odd_cached(lambda: &Partition, m: usize) -> Result<Laurent> {
    let key = (lambda.clone(), m);
    if let Some(hit) = wcf_cache().lock().expect("cache poisoned").get(&key) {
        return Ok(hit.clone());
    }
    let value = wcf_so_odd(lambda, m)?;
    wcf_cache().lock().expect("cache poisoned").insert(key, value.clone());
    Ok(value)
}

/// Torus character of an admissible irreducible class: both twins `λ` and
/// `λ^σ` restrict to the `so(2m+1)` character of `bar(λ)`.
pub fn torus_character(k: &KClass, m: usize) -> Result<Laurent> {
    k.expect(Basis::Irr)?;
    let mut out = Laurent::zero(m);
    for (lam, c) in k.terms.iter() {
        out.add_assign_scaled(&wcf_so_odd_cached(&lam.bar(m)?, m)?, c);
    }
    Ok(out)
}

/// `dim` of the `so(2m+1)`-irreducible of highest weight `λ`, `ℓ(λ) ≤ m`,
/// by the Weyl dimension formula `Π_{α>0} ⟨λ+ρ, α⟩ / ⟨ρ, α⟩`.
pub fn dim_so_odd(lambda: &Partition, m: usize) -> Result<BigInt> {
    check_length(lambda, m)?;
    // Doubled coordinates of λ + ρ and ρ.
    let lr: Vec<i64> = (0..m).map(|i| 2 * lambda.part(i) as i64 + 2 * (m - i) as i64 - 1).collect();
    let r: Vec<i64> = (0..m).map(|i| 2 * (m - i) as i64 - 1).collect();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..m {
        num *= lr[i];
        den *= r[i];
        for j in i + 1..m {
            num *= (lr[i] - lr[j]) * (lr[i] + lr[j]);
            den *= (r[i] - r[j]) * (r[i] + r[j]);
        }
    }
    if (&num % &den) != BigInt::zero() {
        return Err(Error::InexactDivision(format!("Weyl dimension {num}/{den}")));
    }
    Ok(num / den)
}
