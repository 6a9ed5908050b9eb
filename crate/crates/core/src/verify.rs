//! The acceptance suites. Each one checks an exact identity over a bounded
//! range and returns a [`SuiteReport`].

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::character::{koike_terada, torus_character, wcf_so_odd, wcf_spo, KClass};
use crate::laurent::Laurent;
use crate::littlewood::{acyclicity_identity, euler_alternating, euler_det, homology, tor_m, verify_balance, Homology};
use crate::modrule::{modrule_border, modrule_weyl, tor1_partner};
use crate::oracle::lr_by_monomials;
use crate::partition::Partition;
use crate::report::SuiteReport;
use crate::ring::CommRing;
use crate::schur::{lr_product, SchurSum};
use crate::superweyl::verify_commutator_suite;
use crate::weyl::{find_linking_sequences, zeta, zeta_lowered, Root, TypeB};
use crate::zmodule::{quadric_dims, quadric_weight_space, z_hilbert, z_hilbert_closed};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Criterion {
    pub id: usize,
    pub name: &'static str,
    pub summary: &'static str,
    /// Truncation degree used when none is given.
    pub default_degree: Option<usize>,
}

pub const CRITERIA: [Criterion; 11] = [
    Criterion {
        id: 1,
        name: "characters",
        summary: "super WCF = so(2m+1) WCF = Koike–Terada, ℓ(λ) ≤ m, |λ| ≤ 6, m ≤ 3",
        default_degree: None,
    },
    Criterion {
        id: 2,
        name: "modrule",
        summary: "border-strip rule = D∞ dotted rule, |μ| ≤ 12, m ≤ 3",
        default_degree: None,
    },
    Criterion {
        id: 3,
        name: "euler",
        summary: "Littlewood Euler characteristic = half-determinant = homology, |λ| ≤ 8, m ≤ 2",
        default_degree: None,
    },
    Criterion {
        id: 4,
        name: "balance",
        summary: "Σ [M_λ][S_[λ]] = [S(E⊗U)] to degree D, m ≤ 2, n ≤ 3",
        default_degree: Some(8),
    },
    Criterion {
        id: 5,
        name: "acyclicity",
        summary: "[S(E⊗U)] = [quotient]·[S(∧²E)], n ≤ m ≤ 3, degree 6",
        default_degree: Some(6),
    },
    Criterion {
        id: 6,
        name: "hilbert",
        summary: "Hilbert series of Z = ((1+t)/(1-t)^{2m})^n, m, n ≤ 2",
        default_degree: Some(10),
    },
    Criterion {
        id: 7,
        name: "weights",
        summary: "weight spaces of Z = products of quadric pieces, |w| ≤ 6, m, n ≤ 2",
        default_degree: Some(6),
    },
    Criterion {
        id: 8,
        name: "commutators",
        summary: "r, Δ, E supercommutator identities on degree ≤ 4, m, n ≤ 2",
        default_degree: Some(4),
    },
    Criterion {
        id: 9,
        name: "linkage",
        summary: "the only linking sequence ζ → ζ-2ε_n of length ≤ 3 is (ε_n), m, n ≤ 2",
        default_degree: None,
    },
    Criterion {
        id: 10,
        name: "tor1",
        summary: "Tor_1(M_λ) is the single partner class, |λ| ≤ 6, m ≤ 2",
        default_degree: None,
    },
    Criterion {
        id: 11,
        name: "lr-oracle",
        summary: "tableau LR rule = monomial expansion, |μ|, |ν| ≤ 5",
        default_degree: None,
    },
];

pub fn criterion(key: &str) -> Option<&'static Criterion> {
    CRITERIA.iter().find(|c| c.name == key || c.id.to_string() == key)
}

/// Runs criterion `id`, with `degree` overriding its truncation degree.
pub fn run_criterion(id: usize, degree: Option<usize>) -> Option<SuiteReport> {
    let c = CRITERIA.iter().find(|c| c.id == id)?;
    let d = degree.or(c.default_degree);
    let start = Instant::now();
    let mut report = match id {
        1 => characters(),
        2 => modification_rules(),
        3 => euler(),
        4 => balance(d.unwrap_or(8)),
        5 => acyclicity(d.unwrap_or(6)),
        6 => hilbert(d.unwrap_or(10)),
        7 => weights(d.unwrap_or(6)),
        8 => commutators(d.unwrap_or(4)),
        9 => linkage(),
        10 => tor1(),
        11 => lr_oracle(),
        _ => unreachable!("criterion ids are 1..=11"),
    };
    report.name = format!("{}. {}", c.id, c.name);
    report.elapsed = start.elapsed();
    Some(report)
}

/// Merges per-case reports in input order.
fn merged(name: &str, parts: Vec<SuiteReport>) -> SuiteReport {
    let mut out = SuiteReport::new(name);
    for p in parts {
        out.absorb(p);
    }
    out
}

fn characters() -> SuiteReport {
    let cases: Vec<(usize, Partition)> = (1..=3usize)
        .flat_map(|m| Partition::all_up_to(6).into_iter().filter(move |l| l.len() <= m).map(move |l| (m, l)))
        .collect();
    let parts = cases
        .par_iter()
        .map(|(m, lam)| {
            let mut r = SuiteReport::new("");
            let case = || format!("m={m} λ={lam}");
            match (wcf_so_odd(lam, *m), wcf_spo(lam, *m), koike_terada(lam, *m)) {
                (Ok(a), Ok(b), Ok(c)) => {
                    r.check(|| format!("{} super WCF", case()), &a, &b);
                    r.check(|| format!("{} Koike–Terada", case()), &a, &c);
                }
                (a, b, c) => {
                    let err = [a.err(), b.err(), c.err()].into_iter().flatten().next().expect("one side failed");
                    r.error(case(), err);
                }
            }
            r
        })
        .collect();
    merged("characters", parts)
}

fn modification_rules() -> SuiteReport {
    let cases: Vec<(usize, Partition)> =
        (0..=3usize).flat_map(|m| Partition::all_up_to(12).into_iter().map(move |p| (m, p))).collect();
    let parts = cases
        .par_chunks(256)
        .map(|chunk| {
            let mut r = SuiteReport::new("");
            for (m, mu) in chunk {
                r.check(|| format!("m={m} μ={mu}"), &modrule_border(mu, *m), &modrule_weyl(mu, *m));
            }
            r
        })
        .collect();
    merged("modrule", parts)
}

fn signed_homology(lam: &Partition, m: usize) -> crate::Result<Laurent> {
    match homology(lam, m) {
        Homology::Zero => Ok(Laurent::zero(m)),
        Homology::Concentrated { degree, tau } => {
            let c = torus_character(&KClass::irr(SchurSum::single(tau)), m)?;
            Ok(if degree % 2 == 0 { c } else { c.neg() })
        }
    }
}

fn euler() -> SuiteReport {
    let cases: Vec<(usize, Partition)> =
        (0..=2usize).flat_map(|m| Partition::all_up_to(8).into_iter().map(move |p| (m, p))).collect();
    let parts = cases
        .par_iter()
        .map(|(m, lam)| {
            let mut r = SuiteReport::new("");
            let case = format!("m={m} λ={lam}");
            match (euler_alternating(lam, *m), euler_det(lam, *m), signed_homology(lam, *m)) {
                (Ok(alt), Ok(det), Ok(hom)) => {
                    r.check(|| format!("{case} determinant"), &alt, &det);
                    r.check(|| format!("{case} homology"), &alt, &hom);
                }
                (a, b, c) => {
                    let err = [a.err(), b.err(), c.err()].into_iter().flatten().next().expect("one side failed");
                    r.error(case, err);
                }
            }
            r
        })
        .collect();
    merged("euler", parts)
}

fn balance(d: usize) -> SuiteReport {
    let cases: Vec<(usize, usize)> = (0..=2).flat_map(|m| (1..=3).map(move |n| (m, n))).collect();
    merged("balance", cases.par_iter().map(|&(m, n)| verify_balance(m, n, d)).collect())
}

fn acyclicity(d: usize) -> SuiteReport {
    let cases: Vec<(usize, usize)> = (1..=3).flat_map(|m| (1..=m).map(move |n| (m, n))).collect();
    merged("acyclicity", cases.par_iter().map(|&(m, n)| acyclicity_identity(m, n, d)).collect())
}

fn binomial_row(n: usize, d: usize) -> Vec<BigInt> {
    (0..=d).map(|k| num_integer::binomial(BigInt::from(n), BigInt::from(k))).collect()
}

fn hilbert(d: usize) -> SuiteReport {
    let cases: Vec<(usize, usize)> = (0..=2).flat_map(|m| (1..=2).map(move |n| (m, n))).collect();
    let parts = cases
        .par_iter()
        .map(|&(m, n)| {
            let mut r = SuiteReport::new("");
            let closed = z_hilbert_closed(m, n, d);
            match z_hilbert(m, n, d) {
                Ok(series) => r.check(|| format!("m={m} n={n} character vs closed form"), &closed, &series),
                Err(e) => r.error(format!("m={m} n={n}"), e),
            }
            if m == 0 {
                r.check(|| format!("n={n} spinor limit"), &binomial_row(n, d), &closed);
            }
            if n == 1 {
                r.check(|| format!("m={m} quadric limit"), &quadric_dims(m, d), &closed);
            }
            r
        })
        .collect();
    merged("hilbert", parts)
}

fn weights(d: usize) -> SuiteReport {
    let mut cases: Vec<(usize, Vec<usize>)> = Vec::new();
    for m in 0..=2 {
        for a in 0..=d {
            cases.push((m, vec![a]));
            for b in 0..=d - a {
                cases.push((m, vec![a, b]));
            }
        }
    }
    let parts = cases
        .par_iter()
        .map(|(m, w)| {
            let mut r = SuiteReport::new("");
            match quadric_weight_space(*m, w) {
                Ok(ws) => r.check(|| format!("m={m} w={w:?}"), &ws.product, &ws.extracted),
                Err(e) => r.error(format!("m={m} w={w:?}"), e),
            }
            r
        })
        .collect();
    merged("weights", parts)
}

fn commutators(d: usize) -> SuiteReport {
    let cases: Vec<(usize, usize)> = (0..=2).flat_map(|m| (1..=2).map(move |n| (m, n))).collect();
    let parts = cases
        .iter()
        .map(|&(m, n)| match verify_commutator_suite(m, n, d) {
            Ok(r) => r,
            Err(e) => {
                let mut r = SuiteReport::new("");
                r.error(format!("m={m} n={n}"), e);
                r
            }
        })
        .collect();
    merged("commutators", parts)
}

fn linkage() -> SuiteReport {
    let mut r = SuiteReport::new("linkage");
    for m in 1..=2 {
        for n in 1..=2 {
            let sys = TypeB { rank: m + n };
            let case = || format!("m={m} n={n}");
            match find_linking_sequences(&zeta(m, n), &zeta_lowered(m, n), &sys, 3) {
                Ok(seqs) => {
                    let found: Vec<Vec<Root>> = seqs.iter().map(|s| s.roots.clone()).collect();
                    r.check(case, &vec![vec![Root::Short(n - 1)]], &found);
                    r.check(|| format!("m={m} n={n} steps verified"), &true, &seqs.iter().all(|s| s.verify(&sys)));
                }
                Err(e) => r.error(case(), e),
            }
        }
    }
    r
}

fn tor1() -> SuiteReport {
    let cases: Vec<(usize, Partition)> = (0..=2usize)
        .flat_map(|m| Partition::all_up_to(6).into_iter().filter(move |p| p.is_admissible(m)).map(move |p| (m, p)))
        .collect();
    let parts = cases
        .par_iter()
        .map(|(m, lam)| {
            let mut r = SuiteReport::new("");
            match (tor_m(lam, *m, 1), tor1_partner(lam, *m)) {
                (Ok(t), Ok(p)) => r.check(|| format!("m={m} λ={lam}"), &SchurSum::single(p), &t.rows[1]),
                (Err(e), _) | (_, Err(e)) => r.error(format!("m={m} λ={lam}"), e),
            }
            r
        })
        .collect();
    merged("tor1", parts)
}

fn lr_oracle() -> SuiteReport {
    let shapes = Partition::all_up_to(5);
    let cases: Vec<(Partition, Partition)> =
        shapes.iter().flat_map(|a| shapes.iter().map(move |b| (a.clone(), b.clone()))).collect();
    let parts = cases
        .par_iter()
        .map(|(mu, nu)| {
            let mut r = SuiteReport::new("");
            let rule: BTreeMap<Partition, u64> = lr_product(mu, nu, None).into_iter().filter(|(_, c)| *c > 0).collect();
            r.check(|| format!("s({mu})·s({nu})"), &lr_by_monomials(mu, nu), &rule);
            r
        })
        .collect();
    merged("lr-oracle", parts)
}
