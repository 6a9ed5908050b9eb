//! Littlewood complexes for `SpO(2m|1)`: their terms, Euler characteristics
//! and homology, together with the equivariant Tor modules of the ideal
//! generated by `S²E` and of the modules `M_λ`.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::character::{schur_to_irr, specialize_spo, super_half_determinant, super_schur_sum, KClass};
use crate::error::{Error, Result};
use crate::laurent::Laurent;
use crate::modrule::{modrule_weyl, ModResult};
use crate::partition::{enumerate_q, Parity, Partition, QBound, QSetSpec};
use crate::report::SuiteReport;
use crate::ring::CommRing;
use crate::schur::{plethysm_family, skew, Graded, PairSum, PlethysmFamily, SchurSum};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexTerms {
    pub lambda: Partition,
    /// Homological degree `i` ↦ `⊕_{μ ∈ Q_{-1}, |μ| = 2i} S_{λ/μ}`.
    pub terms: BTreeMap<usize, SchurSum>,
}

impl ComplexTerms {
    pub fn term(&self, i: usize) -> SchurSum {
        self.terms.get(&i).cloned().unwrap_or_default()
    }
}

/// Terms of the Littlewood complex `L^λ_•` in degrees `0..=max_i` (all
/// degrees when `max_i` is `None`).
pub fn littlewood_terms(lambda: &Partition, max_i: Option<usize>) -> ComplexTerms {
    let mut terms = BTreeMap::new();
    for mu in enumerate_q(&QSetSpec::new(-1, Parity::Any, QBound::MaxSize(lambda.size()))) {
        let i = mu.size() / 2;
        if max_i.is_some_and(|k| i > k) || !lambda.contains(&mu) {
            continue;
        }
        let part = skew(lambda, &mu);
        if !part.is_zero() {
            let slot: &mut SchurSum = terms.entry(i).or_default();
            *slot = slot.add(&part);
        }
    }
    ComplexTerms { lambda: lambda.clone(), terms }
}

/// `Σ_i (-1)^i` of the torus characters of the terms, for `U = C^{2m|1}`.
pub fn euler_alternating(lambda: &Partition, m: usize) -> Result<Laurent> {
    let mut out = Laurent::zero(m);
    for (i, term) in littlewood_terms(lambda, None).terms {
        let sign = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        out.add_assign_scaled(&super_schur_sum(&term, m)?, &sign);
    }
    Ok(out)
}

/// `½ det(h_{λ_i-i+j} + h_{λ_i-i-j+2})` with `h_d = [S^d(C^{2m|1})]`.
pub fn euler_det(lambda: &Partition, m: usize) -> Result<Laurent> {
    super_half_determinant(lambda, m, lambda.len().max(1))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Homology {
    /// `H_degree = S_{[tau]}(U)`, all other homology zero.
    Concentrated {
        degree: usize,
        tau: Partition,
    },
    Zero,
}

pub fn homology(lambda: &Partition, m: usize) -> Homology {
    match modrule_weyl(lambda, m) {
        ModResult::Finite { i, tau, .. } => Homology::Concentrated { degree: i, tau },
        ModResult::Infinite => Homology::Zero,
    }
}

// ---------------------------------------------------------------------------
// Tor of the ideal (S²E) and of M_λ

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum IdealVariant {
    /// `Q_0^{ev}`: the ideal generated by `S_{(2,2)}` (the `m = 0` case).
    S22Even,
    /// `Q_0^{od}`.
    S22Odd,
    /// Partitions of even Frobenius rank with `b_j - a_j = 2m`.
    General(usize),
}

/// `Tor_i` of the ideal: every partition of the chosen family whose
/// Frobenius degree `a_1 + … + a_d` equals `i`, with coefficient one.
pub fn tor_ideal(i: usize, variant: IdealVariant) -> SchurSum {
    let (offset, parity) = match variant {
        IdealVariant::S22Even => (0, Parity::Even),
        IdealVariant::S22Odd => (0, Parity::Odd),
        IdealVariant::General(m) => (-2 * m as i64, Parity::Even),
    };
    let family = enumerate_q(&QSetSpec::new(offset, parity, QBound::MaxDegree(i)));
    SchurSum::from_terms(family.into_iter().filter(|p| p.frobenius().degree() == i).map(|p| (p, BigInt::one())))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorTable {
    pub lambda: Partition,
    pub m: usize,
    /// `rows[i] = Tor_i(M_λ, C)` as a Schur sum in `E`.
    pub rows: Vec<SchurSum>,
}

fn check_admissible(lambda: &Partition, m: usize) -> Result<()> {
    if !lambda.is_admissible(m) {
        return Err(Error::NotAdmissible { partition: lambda.to_string(), m });
    }
    Ok(())
}

/// `Tor_i(M_λ, C) = ⊕_{τ(α) = λ, i(α) = i} S_α(E)` for `i ≤ max_i`.
///
/// The preimages are generated from the `D_∞` side. Write `A` for the set of
/// absolute values of `λ^T + ρ`. Every `α` with `τ(α) = λ` has
/// `α^T + ρ = (P decreasing, -(A∖P) increasing)` for a subset `P ⊆ A` of the
/// right parity. Its length is at least `|P|(|P|-1)/2`, and each element of
/// `P` is paired positively with every smaller element of `A∖P`, so only
/// subsets of the `max_i + |P| + 1` smallest elements of `A` can reach an
/// index `≤ max_i`. This makes the search exhaustive without a size bound.
pub fn tor_m(lambda: &Partition, m: usize, max_i: usize) -> Result<TorTable> {
    check_admissible(lambda, m)?;
    let mut p_max = 0;
    while (p_max + 1) * p_max / 2 <= max_i {
        p_max += 1;
    }
    let pool = max_i + p_max + 1;
    let n = (lambda.part(0) + pool + 1).max(pool);
    let conj = lambda.conjugate();
    let rho2 = |k: usize| -(2 * m as i64 + 2 * k as i64 + 1);
    let y: Vec<i64> = (0..n).map(|k| 2 * conj.part(k) as i64 + rho2(k)).collect();
    let parity = y.iter().filter(|&&v| v > 0).count() % 2;
    let mut abs: Vec<i64> = y.iter().map(|v| v.abs()).collect();
    abs.sort_unstable();

    let mut rows = vec![SchurSum::zero(); max_i + 1];
    let mut chosen = Vec::new();
    subsets(pool.min(n), p_max, 0, &mut chosen, &mut |set| {
        if set.len() % 2 != parity {
            return;
        }
        let mut x: Vec<i64> = set.iter().rev().map(|&k| abs[k]).collect();
        x.extend((0..n).filter(|k| !set.contains(k)).map(|k| -abs[k]));
        let cols: Option<Vec<usize>> = x
            .iter()
            .enumerate()
            .map(|(k, &v)| {
                let c = v - rho2(k);
                (c >= 0).then_some((c / 2) as usize)
            })
            .collect();
        let Some(cols) = cols else { return };
        let Ok(alpha) = Partition::from_columns(&cols) else { return };
        if let ModResult::Finite { i, tau, .. } = modrule_weyl(&alpha, m) {
            if i <= max_i && &tau == lambda {
                rows[i].add_term(alpha, &BigInt::one());
            }
        }
    });
    Ok(TorTable { lambda: lambda.clone(), m, rows })
}

/// Calls `emit` with every subset of `0..pool` of size at most `max`, as
/// increasing index lists.
fn subsets(pool: usize, max: usize, start: usize, chosen: &mut Vec<usize>, emit: &mut dyn FnMut(&[usize])) {
    emit(chosen);
    if chosen.len() == max {
        return;
    }
    for k in start..pool {
        chosen.push(k);
        subsets(pool, max, k + 1, chosen, emit);
        chosen.pop();
    }
}

/// The same table by brute force over every partition of size at most
/// `size_bound`.
pub fn tor_m_by_size(lambda: &Partition, m: usize, max_i: usize, size_bound: usize) -> Result<TorTable> {
    check_admissible(lambda, m)?;
    let mut rows = vec![SchurSum::zero(); max_i + 1];
    for alpha in Partition::all_up_to(size_bound) {
        if let ModResult::Finite { i, tau, .. } = modrule_weyl(&alpha, m) {
            if i <= max_i && &tau == lambda {
                rows[i].add_term(alpha, &BigInt::one());
            }
        }
    }
    Ok(TorTable { lambda: lambda.clone(), m, rows })
}

/// `Σ_{τ(α)=λ} (-1)^{i(α)} s_α`, grouped by `λ`, over all `α` with
/// `|α| ≤ max_size` and `ℓ(α) ≤ max_len`.
pub fn signed_preimages(m: usize, max_size: usize, max_len: usize) -> BTreeMap<Partition, SchurSum> {
    let mut out: BTreeMap<Partition, SchurSum> = BTreeMap::new();
    for alpha in Partition::all_up_to(max_size).into_iter().filter(|a| a.len() <= max_len) {
        if let ModResult::Finite { i, tau, .. } = modrule_weyl(&alpha, m) {
            let sign = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            out.entry(tau).or_default().add_term(alpha, &sign);
        }
    }
    out
}

/// `[S^•(∧²E)]` truncated at size `max_size`, in at most `max_len` rows.
pub fn sym_wedge2_series(max_size: usize, max_len: usize) -> SchurSum {
    let series = plethysm_family(PlethysmFamily::SymOfWedge, max_size / 2);
    let mut out = SchurSum::zero();
    for d in &series.coeffs {
        out = out.add(&d.restrict_length(max_len));
    }
    out
}

/// Splits a pair sum into slices by the size of the right label.
pub fn grade_by_right_size(total: &PairSum, max: usize) -> Graded<PairSum> {
    let mut coeffs = vec![PairSum::zero(); max + 1];
    for ((l, r), c) in total.iter() {
        if r.size() <= max {
            coeffs[r.size()].add_term(l.clone(), r.clone(), c);
        }
    }
    Graded { truncation: max, coeffs }
}

/// `Σ_λ S_{[λ]} ⊗ [M_λ]` truncated at `E`-degree `D`, with
/// `[M_λ] = Σ_{τ(α)=λ} (-1)^{i(α)} s_α · [S^•(∧²E)]` in `dim E = n`.
pub fn tor_side(m: usize, n: usize, max_degree: usize) -> Graded<PairSum> {
    let wedge = sym_wedge2_series(max_degree, n);
    let mut total = PairSum::zero();
    for (lambda, alt) in signed_preimages(m, max_degree, n) {
        let product = alt.mul_bounded(&wedge, Some(n), Some(max_degree));
        total.add_tensor(&lambda, &product, &BigInt::one());
    }
    grade_by_right_size(&total, max_degree)
}

/// `S^•(E ⊗ U) = ⊕_μ S_μ(U) ⊗ S_μ(E)` with the `U`-factor rewritten in the
/// irreducible basis of `SpO(2m|1)`, truncated at degree `D`, `dim E = n`.
pub fn cauchy_side(m: usize, n: usize, max_degree: usize) -> Result<Graded<PairSum>> {
    let mut total = PairSum::zero();
    for mu in Partition::all_up_to(max_degree).into_iter().filter(|p| p.len() <= n) {
        let irr = specialize_spo(&schur_to_irr(&KClass::schur(SchurSum::single(mu.clone())))?, m)?;
        for (lambda, c) in irr.terms.iter() {
            total.add_term(lambda.clone(), mu.clone(), c);
        }
    }
    Ok(grade_by_right_size(&total, max_degree))
}

fn compare_graded(report: &mut SuiteReport, label: &str, lhs: &Graded<PairSum>, rhs: &Graded<PairSum>) {
    for d in 0..=lhs.truncation.min(rhs.truncation) {
        let (a, b) = (&lhs.coeffs[d], &rhs.coeffs[d]);
        report.cases += 1;
        if let Some(((l, r), x, y)) = a.first_difference(b) {
            report.failures.push(crate::report::Failure {
                case: format!("{label} degree {d}, coefficient of [{l}]⊗({r})"),
                expected: y.to_string(),
                actual: x.to_string(),
            });
        }
    }
}

/// Checks `Σ_λ S_{[λ]} ⊗ [M_λ] = [S^•(E ⊗ U)]` degree by degree.
pub fn verify_balance(m: usize, n: usize, max_degree: usize) -> SuiteReport {
    let start = Instant::now();
    let mut report = SuiteReport::new(format!("balance m={m} n={n} D={max_degree}"));
    match cauchy_side(m, n, max_degree) {
        Ok(rhs) => compare_graded(&mut report, &format!("m={m} n={n}"), &tor_side(m, n, max_degree), &rhs),
        Err(e) => report.error(format!("m={m} n={n}"), e),
    }
    report.elapsed = start.elapsed();
    report
}

/// `Σ_{ℓ(λ) ≤ n} S_{[λ]} ⊗ s_λ · [S^•(∧²E)]`, truncated at degree `D`.
pub fn quotient_times_wedge(n: usize, max_degree: usize, keep: impl Fn(&Partition) -> bool) -> Graded<PairSum> {
    let wedge = sym_wedge2_series(max_degree, n);
    let mut total = PairSum::zero();
    for lambda in Partition::all_up_to(max_degree).into_iter().filter(|p| p.len() <= n && keep(p)) {
        let product = SchurSum::single(lambda.clone()).mul_bounded(&wedge, Some(n), Some(max_degree));
        total.add_tensor(&lambda, &product, &BigInt::one());
    }
    grade_by_right_size(&total, max_degree)
}

/// For `n ≤ m`: `[S^•(E ⊗ U)] = [S^•(E ⊗ U)/(∧²E)] · [S^•(∧²E)]`, where the
/// quotient is `⊕_{ℓ(λ) ≤ n} S_{[λ]}(U) ⊗ S_λ(E)`.
pub fn acyclicity_identity(m: usize, n: usize, max_degree: usize) -> SuiteReport {
    let start = Instant::now();
    let mut report = SuiteReport::new(format!("acyclicity m={m} n={n} D={max_degree}"));
    if n > m {
        report.error(format!("m={m} n={n}"), "acyclicity requires n ≤ m");
    } else {
        match cauchy_side(m, n, max_degree) {
            Ok(lhs) => {
                let rhs = quotient_times_wedge(n, max_degree, |_| true);
                compare_graded(&mut report, &format!("m={m} n={n}"), &rhs, &lhs);
            }
            Err(e) => report.error(format!("m={m} n={n}"), e),
        }
    }
    report.elapsed = start.elapsed();
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::torus_character;
    use crate::modrule::tor1_partner;
    use crate::part;

    fn s(p: Partition) -> SchurSum {
        SchurSum::single(p)
    }

    #[test]
    fn term_examples() {
        let t = littlewood_terms(&part![1], None);
        assert_eq!(t.terms.len(), 1);
        assert_eq!(t.term(0), s(part![1]));
        let t = littlewood_terms(&part![1, 1], None);
        assert_eq!((t.term(0), t.term(1)), (s(part![1, 1]), SchurSum::one()));
        let t = littlewood_terms(&part![2, 1], None);
        assert_eq!((t.term(0), t.term(1)), (s(part![2, 1]), s(part![1])));
        assert_eq!(littlewood_terms(&part![2, 1], Some(0)).terms.len(), 1);
    }

    #[test]
    fn terms_have_expected_sizes() {
        for lam in Partition::all_up_to(8) {
            for (i, term) in littlewood_terms(&lam, None).terms {
                assert!(2 * i <= lam.size());
                for (p, _) in term.iter() {
                    assert_eq!(p.size() + 2 * i, lam.size());
                }
            }
        }
    }

    #[test]
    fn euler_examples() {
        for m in 1..=2 {
            assert_eq!(euler_det(&part![1], m).unwrap(), crate::character::h_super(1, m));
            assert_eq!(euler_det(&part![], m).unwrap(), Laurent::one(m));
        }
        let want = super_schur_sum(&s(part![1, 1]), 1).unwrap().sub(&Laurent::one(1));
        assert_eq!(euler_det(&part![1, 1], 1).unwrap(), want);
    }

    #[test]
    fn euler_matches_homology() {
        for m in 1..=2 {
            for lam in Partition::all_up_to(7) {
                let alt = euler_alternating(&lam, m).unwrap();
                assert_eq!(euler_det(&lam, m).unwrap(), alt, "λ={lam:?} m={m}");
                let want = match homology(&lam, m) {
                    Homology::Zero => Laurent::zero(m),
                    Homology::Concentrated { degree, tau } => {
                        let c = torus_character(&KClass::irr(s(tau)), m).unwrap();
                        if degree % 2 == 0 {
                            c
                        } else {
                            c.neg()
                        }
                    }
                };
                assert_eq!(alt, want, "λ={lam:?} m={m}");
            }
        }
    }

    #[test]
    fn homology_examples() {
        assert_eq!(homology(&part![2, 1], 1), Homology::Concentrated { degree: 0, tau: part![2, 1] });
        assert_eq!(homology(&part![2, 2, 2, 2], 1), Homology::Concentrated { degree: 1, tau: part![] });
        assert_eq!(homology(&part![1, 1], 0), Homology::Zero);
    }

    #[test]
    fn ideal_examples() {
        assert_eq!(tor_ideal(0, IdealVariant::General(1)), SchurSum::one());
        assert_eq!(tor_ideal(1, IdealVariant::General(1)), s(part![2, 2, 2, 2]));
        assert_eq!(tor_ideal(1, IdealVariant::S22Even), s(part![2, 2]));
        assert_eq!(tor_ideal(0, IdealVariant::S22Odd), s(part![1]));
        assert_eq!(tor_ideal(1, IdealVariant::S22Odd), s(part![2, 1]));
        for i in 0..=5 {
            assert_eq!(tor_ideal(i, IdealVariant::General(0)), tor_ideal(i, IdealVariant::S22Even));
        }
    }

    #[test]
    fn ideal_is_tor_of_trivial_module() {
        for m in 0..=2 {
            let table = tor_m(&part![], m, 6).unwrap();
            for i in 0..=6 {
                assert_eq!(table.rows[i], tor_ideal(i, IdealVariant::General(m)), "m={m} i={i}");
            }
        }
    }

    #[test]
    fn tor_examples() {
        let t = tor_m(&part![], 1, 1).unwrap();
        assert_eq!(t.rows, vec![SchurSum::one(), s(part![2, 2, 2, 2])]);
        let t = tor_m(&part![1], 1, 1).unwrap();
        assert_eq!(t.rows, vec![s(part![1]), s(part![2, 2, 2, 1])]);
        assert!(tor_m(&part![2, 2], 1, 1).is_err());
    }

    #[test]
    fn orbit_search_matches_brute_force() {
        for m in 0..=2 {
            for lam in Partition::all_up_to(4).into_iter().filter(|p| p.is_admissible(m)) {
                let fast = tor_m(&lam, m, 3).unwrap();
                let max_size = fast.rows.iter().flat_map(|r| r.iter().map(|(p, _)| p.size())).max().unwrap_or(0);
                // Doubling the size bound past the largest preimage changes nothing.
                let slow = tor_m_by_size(&lam, m, 3, (2 * max_size).min(22)).unwrap();
                assert_eq!(fast, slow, "λ={lam:?} m={m}");
            }
        }
    }

    #[test]
    fn tor1_is_a_single_class() {
        for m in 0..=2 {
            for lam in Partition::all_up_to(6).into_iter().filter(|p| p.is_admissible(m)) {
                let t = tor_m(&lam, m, 1).unwrap();
                assert_eq!(t.rows[0], s(lam.clone()));
                assert_eq!(t.rows[1], s(tor1_partner(&lam, m).unwrap()));
            }
        }
    }

    #[test]
    fn balance_and_acyclicity_small() {
        assert!(verify_balance(1, 2, 4).passed());
        assert!(verify_balance(1, 1, 5).passed());
        assert!(acyclicity_identity(1, 1, 4).passed());
        assert!(!acyclicity_identity(1, 2, 2).passed());
    }
}
