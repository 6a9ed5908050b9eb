//! Differential operators on the polynomial superalgebra `C[X]`,
//! `X = Hom(E, C^{2m|1})`, with even variables `φ_{a,i}` (`0 < |a| ≤ m`) and
//! odd variables `φ_{0,i}`, and the operators `r_{i,j}`, `Δ_{i,j}`, `E_{i,j}`
//! spanning a copy of `so(E ⊕ E^*)`.
//!
//! Indices `i, j` are 0-based in the API and 1-based when displayed.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::report::{Failure, SuiteReport};

/// Shape of the variable set: `2m` even and one odd variable per `i < n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuperSpace {
    pub m: usize,
    pub n: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    /// `φ_{a,i}` with `a ≠ 0`.
    Even { a: i64, i: usize },
    /// `φ_{0,i}`.
    Odd { i: usize },
}

impl Var {
    pub fn new(a: i64, i: usize) -> Var {
        if a == 0 {
            Var::Odd { i }
        } else {
            Var::Even { a, i }
        }
    }

    pub fn is_odd(self) -> bool {
        matches!(self, Var::Odd { .. })
    }
}

impl SuperSpace {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if n > 31 {
            return Err(Error::Precondition(format!("at most 31 odd variables, got n = {n}")));
        }
        Ok(SuperSpace { m, n })
    }

    fn even_count(&self) -> usize {
        2 * self.m * self.n
    }

    fn even_index(&self, a: i64, i: usize) -> usize {
        let m = self.m as i64;
        assert!(a != 0 && a.abs() <= m && i < self.n, "variable φ_({a},{i}) out of range");
        let slot = if a < 0 { a + m } else { a + m - 1 };
        slot as usize * self.n + i
    }

    fn even_var(&self, idx: usize) -> (i64, usize) {
        let m = self.m as i64;
        let slot = (idx / self.n) as i64;
        let a = if slot < m { slot - m } else { slot - m + 1 };
        (a, idx % self.n)
    }

    /// Every variable, even ones first.
    pub fn vars(&self) -> Vec<Var> {
        let mut out: Vec<Var> = (0..self.even_count())
            .map(|k| {
                let (a, i) = self.even_var(k);
                Var::Even { a, i }
            })
            .collect();
        out.extend((0..self.n).map(|i| Var::Odd { i }));
        out
    }

    /// All monomials of total degree `≤ max_deg`.
    pub fn basis(&self, max_deg: usize) -> Vec<Monomial> {
        let mut out = Vec::new();
        for mask in 0u32..(1u32 << self.n) {
            let odd = mask.count_ones() as usize;
            if odd > max_deg {
                continue;
            }
            let mut exps = vec![0u16; self.even_count()];
            compositions(&mut exps, 0, max_deg - odd, &mut |e| out.push(Monomial { even: e.to_vec(), odd: mask }));
        }
        out.sort();
        out
    }

    /// `GL(E)` weight: entry `i` counts the variables with second index `i`.
    pub fn gl_weight(&self, mono: &Monomial) -> Vec<i64> {
        let mut w = vec![0; self.n];
        for (k, &e) in mono.even.iter().enumerate() {
            w[self.even_var(k).1] += e as i64;
        }
        for (i, wi) in w.iter_mut().enumerate() {
            *wi += i64::from(mono.odd >> i & 1 == 1);
        }
        w
    }

    /// Torus weight for `SpO(2m|1)`: entry `a-1` is `deg φ_{a,·} - deg φ_{-a,·}`.
    pub fn torus_weight(&self, mono: &Monomial) -> Vec<i64> {
        let mut w = vec![0; self.m];
        for (k, &e) in mono.even.iter().enumerate() {
            let (a, _) = self.even_var(k);
            w[a.unsigned_abs() as usize - 1] += a.signum() * e as i64;
        }
        w
    }

    pub fn display(&self, mono: &Monomial) -> String {
        let mut parts = Vec::new();
        for (k, &e) in mono.even.iter().enumerate() {
            if e > 0 {
                let (a, i) = self.even_var(k);
                parts.push(if e == 1 { format!("φ({a},{})", i + 1) } else { format!("φ({a},{})^{e}", i + 1) });
            }
        }
        for i in 0..self.n {
            if mono.odd >> i & 1 == 1 {
                parts.push(format!("φ(0,{})", i + 1));
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

fn compositions(exps: &mut [u16], pos: usize, budget: usize, emit: &mut dyn FnMut(&[u16])) {
    if pos == exps.len() {
        emit(exps);
        return;
    }
    for e in 0..=budget {
        exps[pos] = e as u16;
        compositions(exps, pos + 1, budget - e, emit);
    }
    exps[pos] = 0;
}

/// Even exponents in the order of [`SuperSpace::vars`], odd variables as a
/// bitmask. The product is normalized with odd variables in increasing `i`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub even: Vec<u16>,
    pub odd: u32,
}

impl Monomial {
    pub fn one(space: &SuperSpace) -> Self {
        Monomial { even: vec![0; space.even_count()], odd: 0 }
    }

    pub fn degree(&self) -> usize {
        self.even.iter().map(|&e| e as usize).sum::<usize>() + self.odd.count_ones() as usize
    }
}

pub type Vector = BTreeMap<Monomial, BigInt>;

fn add_to(v: &mut Vector, mono: Monomial, c: &BigInt) {
    if c.is_zero() {
        return;
    }
    let slot = v.entry(mono.clone()).or_default();
    *slot += c;
    if slot.is_zero() {
        v.remove(&mono);
    }
}

/// Multiplication by, or differentiation in, one variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basic {
    Mul(Var),
    Der(Var),
}

impl Basic {
    fn is_odd(self) -> bool {
        match self {
            Basic::Mul(v) | Basic::Der(v) => v.is_odd(),
        }
    }

    /// Applies to a single monomial, returning the image with its sign.
    fn apply(self, space: &SuperSpace, mono: &Monomial) -> Option<(Monomial, i64)> {
        let mut out = mono.clone();
        match self {
            Basic::Mul(Var::Even { a, i }) => {
                out.even[space.even_index(a, i)] += 1;
                Some((out, 1))
            }
            Basic::Der(Var::Even { a, i }) => {
                let k = space.even_index(a, i);
                let e = out.even[k];
                if e == 0 {
                    return None;
                }
                out.even[k] -= 1;
                Some((out, e as i64))
            }
            Basic::Mul(Var::Odd { i }) | Basic::Der(Var::Odd { i }) => {
                let set = mono.odd >> i & 1 == 1;
                if set != matches!(self, Basic::Der(_)) {
                    return None;
                }
                let sign = if (mono.odd & ((1u32 << i) - 1)).count_ones().is_multiple_of(2) { 1 } else { -1 };
                out.odd ^= 1 << i;
                Some((out, sign))
            }
        }
    }
}

/// An integer combination of words in [`Basic`] operators, divided by
/// `2^half`. Words act right to left. Every operator built here is
/// homogeneous, with parity `odd`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Operator {
    pub terms: Vec<(BigInt, Vec<Basic>)>,
    pub half: u32,
    pub odd: bool,
}

impl Operator {
    pub fn zero(odd: bool) -> Self {
        Operator { terms: Vec::new(), half: 0, odd }
    }

    pub fn identity() -> Self {
        Operator { terms: vec![(BigInt::one(), Vec::new())], half: 0, odd: false }
    }

    pub fn basic(b: Basic) -> Self {
        Operator { terms: vec![(BigInt::one(), vec![b])], half: 0, odd: b.is_odd() }
    }

    fn word(c: i64, word: Vec<Basic>) -> Self {
        let odd = word.iter().filter(|b| b.is_odd()).count() % 2 == 1;
        Operator { terms: vec![(BigInt::from(c), word)], half: 0, odd }
    }

    fn rescaled(&self, half: u32) -> Vec<(BigInt, Vec<Basic>)> {
        let factor = BigInt::one() << (half - self.half);
        self.terms.iter().map(|(c, w)| (c * &factor, w.clone())).collect()
    }

    pub fn add(&self, other: &Operator) -> Operator {
        let odd = if self.terms.is_empty() {
            other.odd
        } else {
            assert!(other.terms.is_empty() || self.odd == other.odd, "sum of operators of different parity");
            self.odd
        };
        let half = self.half.max(other.half);
        let mut terms = self.rescaled(half);
        terms.extend(other.rescaled(half));
        Operator { terms, half, odd }
    }

    pub fn scale(&self, k: i64) -> Operator {
        let terms = if k == 0 { Vec::new() } else { self.terms.iter().map(|(c, w)| (c * k, w.clone())).collect() };
        Operator { terms, half: self.half, odd: self.odd }
    }

    pub fn sub(&self, other: &Operator) -> Operator {
        self.add(&other.scale(-1))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Operator) -> Operator {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (c1, w1) in &self.terms {
            for (c2, w2) in &other.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                terms.push((c1 * c2, w));
            }
        }
        Operator { terms, half: self.half + other.half, odd: self.odd != other.odd }
    }

    /// `[f, g] = fg - (-1)^{|f||g|} gf`.
    pub fn supercommutator(&self, other: &Operator) -> Operator {
        let sign = if self.odd && other.odd { -1 } else { 1 };
        self.compose(other).sub(&other.compose(self).scale(sign))
    }

    /// `2^half · self(v)`. Fails if an intermediate monomial exceeds degree
    /// `max_deg`.
    pub fn apply_scaled(&self, space: &SuperSpace, v: &Vector, max_deg: usize) -> Result<Vector> {
        let mut out = Vector::new();
        for (c, word) in &self.terms {
            for (mono, x) in v {
                let mut cur = mono.clone();
                let mut coeff = c * x;
                let mut alive = true;
                for b in word.iter().rev() {
                    match b.apply(space, &cur) {
                        Some((next, s)) => {
                            if next.degree() > max_deg {
                                return Err(Error::DegreeOverflow { degree: next.degree(), max: max_deg });
                            }
                            cur = next;
                            coeff *= s;
                        }
                        None => {
                            alive = false;
                            break;
                        }
                    }
                }
                if alive {
                    add_to(&mut out, cur, &coeff);
                }
            }
        }
        Ok(out)
    }
}

fn phi(a: i64, i: usize) -> Basic {
    Basic::Mul(Var::new(a, i))
}

fn dphi(a: i64, i: usize) -> Basic {
    Basic::Der(Var::new(a, i))
}

/// `r_{i,j} = φ_{0,i}φ_{0,j} + Σ_{a=1}^m (φ_{-a,i}φ_{a,j} - φ_{-a,j}φ_{a,i})`.
pub fn op_r(space: &SuperSpace, i: usize, j: usize) -> Operator {
    let mut out = Operator::word(1, vec![phi(0, i), phi(0, j)]);
    for a in 1..=space.m as i64 {
        out = out.add(&Operator::word(1, vec![phi(-a, i), phi(a, j)]));
        out = out.add(&Operator::word(-1, vec![phi(-a, j), phi(a, i)]));
    }
    out
}

/// `Δ_{i,j} = ∂_{0,i}∂_{0,j} + Σ_{a=1}^m (∂_{-a,i}∂_{a,j} - ∂_{-a,j}∂_{a,i})`.
pub fn op_delta(space: &SuperSpace, i: usize, j: usize) -> Operator {
    let mut out = Operator::word(1, vec![dphi(0, i), dphi(0, j)]);
    for a in 1..=space.m as i64 {
        out = out.add(&Operator::word(1, vec![dphi(-a, i), dphi(a, j)]));
        out = out.add(&Operator::word(-1, vec![dphi(-a, j), dphi(a, i)]));
    }
    out
}

/// `E_{i,j} = Σ_{a=-m}^m φ_{a,i}∂_{a,j} + (2m-1)/2 · δ_{i,j}`.
pub fn op_euler(space: &SuperSpace, i: usize, j: usize) -> Operator {
    let m = space.m as i64;
    let mut out = Operator::zero(false);
    for a in -m..=m {
        out = out.add(&Operator::word(2, vec![phi(a, i), dphi(a, j)]));
    }
    if i == j {
        out = out.add(&Operator::word(2 * m - 1, Vec::new()));
    }
    Operator { half: out.half + 1, ..out }
}

/// Outcome of comparing two operators on a set of monomials.
pub fn operator_difference(
    space: &SuperSpace,
    lhs: &Operator,
    rhs: &Operator,
    basis: &[Monomial],
    max_deg: usize,
) -> Result<Option<(Monomial, Vector, Vector)>> {
    let half = lhs.half.max(rhs.half);
    let l = Operator { terms: lhs.rescaled(half), half, odd: lhs.odd };
    let r = Operator { terms: rhs.rescaled(half), half, odd: rhs.odd };
    for mono in basis {
        let v: Vector = [(mono.clone(), BigInt::one())].into_iter().collect();
        let (a, b) = (l.apply_scaled(space, &v, max_deg)?, r.apply_scaled(space, &v, max_deg)?);
        if a != b {
            return Ok(Some((mono.clone(), a, b)));
        }
    }
    Ok(None)
}

fn delta(a: usize, b: usize) -> i64 {
    i64::from(a == b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identity {
    /// `[r_{ij}, Δ_{kl}] = -δ_{ik}E_{jl} + δ_{il}E_{jk} + δ_{kj}E_{il} - δ_{jl}E_{ik}`.
    RDelta,
    /// `[E_{ij}, r_{kl}] = δ_{kj} r_{il} - δ_{lj} r_{ik}`.
    ER,
    /// `[E_{ij}, Δ_{kl}] = -δ_{ik} Δ_{jl} + δ_{il} Δ_{jk}`.
    EDelta,
    /// `[E_{ij}, E_{kl}] = δ_{jk} E_{il} - δ_{il} E_{kj}`.
    EE,
}

impl Identity {
    pub const ALL: [Identity; 4] = [Identity::RDelta, Identity::ER, Identity::EDelta, Identity::EE];

    pub fn name(self) -> &'static str {
        match self {
            Identity::RDelta => "[r,Δ]",
            Identity::ER => "[E,r]",
            Identity::EDelta => "[E,Δ]",
            Identity::EE => "[E,E]",
        }
    }
}

/// Both sides of an identity for the index tuple `(i, j, k, l)`, built from
/// arbitrary generators so the same structure constants can be checked on
/// other realizations.
pub fn identity_sides<T>(
    id: Identity,
    (i, j, k, l): (usize, usize, usize, usize),
    r: &impl Fn(usize, usize) -> T,
    d: &impl Fn(usize, usize) -> T,
    e: &impl Fn(usize, usize) -> T,
    bracket: impl Fn(&T, &T) -> T,
    combine: impl Fn(&[(i64, T)]) -> T,
) -> (T, T) {
    match id {
        Identity::RDelta => (
            bracket(&r(i, j), &d(k, l)),
            combine(&[
                (-delta(i, k), e(j, l)),
                (delta(i, l), e(j, k)),
                (delta(k, j), e(i, l)),
                (-delta(j, l), e(i, k)),
            ]),
        ),
        Identity::ER => (bracket(&e(i, j), &r(k, l)), combine(&[(delta(k, j), r(i, l)), (-delta(l, j), r(i, k))])),
        Identity::EDelta => (bracket(&e(i, j), &d(k, l)), combine(&[(-delta(i, k), d(j, l)), (delta(i, l), d(j, k))])),
        Identity::EE => (bracket(&e(i, j), &e(k, l)), combine(&[(delta(j, k), e(i, l)), (-delta(i, l), e(k, j))])),
    }
}

fn combine_ops(terms: &[(i64, Operator)]) -> Operator {
    terms.iter().fold(Operator::zero(false), |acc, (c, op)| acc.add(&op.scale(*c)))
}

fn index_tuples(n: usize) -> Vec<(usize, usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    out.push((i, j, k, l));
                }
            }
        }
    }
    out
}

fn vector_string(space: &SuperSpace, v: &Vector) -> String {
    if v.is_empty() {
        return "0".into();
    }
    v.iter().map(|(mono, c)| format!("{c}·{}", space.display(mono))).collect::<Vec<_>>().join(" + ")
}

/// Checks one identity for every index tuple on every monomial of degree
/// `≤ max_deg`.
pub fn verify_identity(space: &SuperSpace, id: Identity, max_deg: usize) -> SuiteReport {
    let start = Instant::now();
    let basis = space.basis(max_deg);
    let r = |i, j| op_r(space, i, j);
    let d = |i, j| op_delta(space, i, j);
    let e = |i, j| op_euler(space, i, j);
    let results: Vec<Option<Failure>> = index_tuples(space.n)
        .into_par_iter()
        .map(|t| {
            let (lhs, rhs) = identity_sides(id, t, &r, &d, &e, |a, b| a.supercommutator(b), combine_ops);
            let case = || format!("{} (i,j,k,l)=({},{},{},{})", id.name(), t.0 + 1, t.1 + 1, t.2 + 1, t.3 + 1);
            match operator_difference(space, &lhs, &rhs, &basis, max_deg + 4) {
                Ok(None) => None,
                Ok(Some((mono, a, b))) => Some(Failure {
                    case: format!("{} on {}", case(), space.display(&mono)),
                    expected: vector_string(space, &b),
                    actual: vector_string(space, &a),
                }),
                Err(err) => Some(Failure { case: case(), expected: "a value".into(), actual: format!("error: {err}") }),
            }
        })
        .collect();
    let mut report = SuiteReport::new(format!("{} m={} n={} D={max_deg}", id.name(), space.m, space.n));
    report.cases = results.len();
    report.failures = results.into_iter().flatten().collect();
    report.elapsed = start.elapsed();
    report
}

/// `r_{ij} + r_{ji} = 0` and `Δ_{ij} + Δ_{ji} = 0` as operators.
pub fn verify_antisymmetry(space: &SuperSpace, max_deg: usize) -> SuiteReport {
    let mut report = SuiteReport::new(format!("antisymmetry m={} n={}", space.m, space.n));
    let basis = space.basis(max_deg);
    for i in 0..space.n {
        for j in 0..space.n {
            for (name, sum) in [
                ("r", op_r(space, i, j).add(&op_r(space, j, i))),
                ("Δ", op_delta(space, i, j).add(&op_delta(space, j, i))),
            ] {
                let outcome = operator_difference(space, &sum, &Operator::zero(false), &basis, max_deg + 2);
                report.check(
                    || format!("{name}({},{}) + {name}({},{})", i + 1, j + 1, j + 1, i + 1),
                    &Ok(None),
                    &outcome,
                );
            }
        }
    }
    report
}

/// Weight bookkeeping: `r_{ij}` shifts the `GL(E)` weight by `ε_i + ε_j`,
/// `Δ_{ij}` by `-ε_i - ε_j`, `E_{ij}` by `ε_i - ε_j`, and all of them
/// preserve the `SpO` torus weight.
pub fn verify_weights(space: &SuperSpace, max_deg: usize) -> SuiteReport {
    let mut report = SuiteReport::new(format!("weights m={} n={}", space.m, space.n));
    let basis = space.basis(max_deg);
    for i in 0..space.n {
        for j in 0..space.n {
            let shift = |si: i64, sj: i64| {
                let mut w = vec![0; space.n];
                w[i] += si;
                w[j] += sj;
                w
            };
            let cases = [
                ("r", op_r(space, i, j), shift(1, 1)),
                ("Δ", op_delta(space, i, j), shift(-1, -1)),
                ("E", op_euler(space, i, j), shift(1, -1)),
            ];
            for (name, op, dw) in cases {
                for mono in &basis {
                    let v: Vector = [(mono.clone(), BigInt::one())].into_iter().collect();
                    let image = match op.apply_scaled(space, &v, max_deg + 2) {
                        Ok(image) => image,
                        Err(err) => {
                            report.error(format!("{name}({},{})", i + 1, j + 1), err);
                            continue;
                        }
                    };
                    let gl: Vec<i64> = space.gl_weight(mono).iter().zip(&dw).map(|(a, b)| a + b).collect();
                    let torus = space.torus_weight(mono);
                    for out in image.keys() {
                        report.check(
                            || format!("{name}({},{}) on {}", i + 1, j + 1, space.display(mono)),
                            &(gl.clone(), torus.clone()),
                            &(space.gl_weight(out), space.torus_weight(out)),
                        );
                    }
                }
            }
        }
    }
    report
}

/// `[ab, cd] = a[b,c]d + ± [a,c]bd + ± ca[b,d] + ± c[a,d]b` for homogeneous
/// `a, b, c, d`, on every `stride`-th quadruple of generators.
pub fn verify_bracket_expansion(space: &SuperSpace, max_deg: usize, stride: usize) -> SuiteReport {
    let mut report = SuiteReport::new(format!("bracket expansion m={} n={}", space.m, space.n));
    let basis = space.basis(max_deg);
    let gens: Vec<Operator> = space
        .vars()
        .into_iter()
        .flat_map(|v| [Operator::basic(Basic::Mul(v)), Operator::basic(Basic::Der(v))])
        .collect();
    let g = gens.len();
    let p = |op: &Operator| i64::from(op.odd);
    let sign = |e: i64| if e % 2 == 0 { 1 } else { -1 };
    let mut idx = 0;
    while idx < g.pow(4) {
        let (a, b, c, d) = (&gens[idx / g.pow(3)], &gens[idx / g.pow(2) % g], &gens[idx / g % g], &gens[idx % g]);
        let lhs = a.compose(b).supercommutator(&c.compose(d));
        let rhs = combine_ops(&[
            (1, a.compose(&b.supercommutator(c)).compose(d)),
            (sign(p(b) * p(c)), a.supercommutator(c).compose(b).compose(d)),
            (sign((p(a) + p(b)) * p(c)), c.compose(a).compose(&b.supercommutator(d))),
            (sign(p(a) * p(c) + p(b) * (p(d) + p(c))), c.compose(&a.supercommutator(d)).compose(b)),
        ]);
        let outcome = operator_difference(space, &lhs, &rhs, &basis, max_deg + 4);
        report.check(|| format!("quadruple #{idx}"), &Ok(None), &outcome);
        idx += stride.max(1);
    }
    report
}

/// Square integer matrix.
pub type Matrix = Vec<Vec<i64>>;

fn mat_zero(k: usize) -> Matrix {
    vec![vec![0; k]; k]
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let k = a.len();
    let mut out = mat_zero(k);
    for i in 0..k {
        for l in 0..k {
            if a[i][l] != 0 {
                for j in 0..k {
                    out[i][j] += a[i][l] * b[l][j];
                }
            }
        }
    }
    out
}

fn mat_combine(k: usize, terms: &[(i64, Matrix)]) -> Matrix {
    let mut out = mat_zero(k);
    for (c, m) in terms {
        for i in 0..k {
            for j in 0..k {
                out[i][j] += c * m[i][j];
            }
        }
    }
    out
}

fn mat_bracket(a: &Matrix, b: &Matrix) -> Matrix {
    mat_combine(a.len(), &[(1, mat_mul(a, b)), (-1, mat_mul(b, a))])
}

/// The defining realization of `so(E ⊕ E^*)` in block form:
/// `r_{ij} ↦ [[0, 0], [e_{ij} - e_{ji}, 0]]`.
pub fn so_r(n: usize, i: usize, j: usize) -> Matrix {
    let mut m = mat_zero(2 * n);
    m[n + i][j] += 1;
    m[n + j][i] -= 1;
    m
}

/// `Δ_{ij} ↦ [[0, e_{ij} - e_{ji}], [0, 0]]`.
pub fn so_delta(n: usize, i: usize, j: usize) -> Matrix {
    let mut m = mat_zero(2 * n);
    m[i][n + j] += 1;
    m[j][n + i] -= 1;
    m
}

/// `E_{ij} ↦ [[-e_{ji}, 0], [0, e_{ij}]]`.
pub fn so_euler(n: usize, i: usize, j: usize) -> Matrix {
    let mut m = mat_zero(2 * n);
    m[j][i] -= 1;
    m[n + i][n + j] += 1;
    m
}

/// The four identities hold for the matrices [`so_r`], [`so_delta`] and
/// [`so_euler`]: they are the structure constants of `so(2n)`.
pub fn verify_so_structure(n: usize) -> SuiteReport {
    let mut report = SuiteReport::new(format!("so(2n) structure n={n}"));
    let (r, d, e) = (|i, j| so_r(n, i, j), |i, j| so_delta(n, i, j), |i, j| so_euler(n, i, j));
    for id in Identity::ALL {
        for t in index_tuples(n) {
            let (lhs, rhs) = identity_sides(id, t, &r, &d, &e, mat_bracket, |ts| mat_combine(2 * n, ts));
            report.check(
                || format!("{} (i,j,k,l)=({},{},{},{})", id.name(), t.0 + 1, t.1 + 1, t.2 + 1, t.3 + 1),
                &rhs,
                &lhs,
            );
        }
    }
    report
}

/// The four commutator identities on all monomials of degree `≤ max_deg`,
/// plus antisymmetry, weight bookkeeping, the bracket expansion of `[ab, cd]` and
/// the `so(2n)` structure constants.
pub fn verify_commutator_suite(m: usize, n: usize, max_deg: usize) -> Result<SuiteReport> {
    let start = Instant::now();
    let space = SuperSpace::new(m, n)?;
    let mut report = SuiteReport::new(format!("commutators m={m} n={n} D={max_deg}"));
    for id in Identity::ALL {
        report.absorb(verify_identity(&space, id, max_deg));
    }
    report.absorb(verify_antisymmetry(&space, max_deg));
    report.absorb(verify_weights(&space, max_deg));
    report.absorb(verify_bracket_expansion(&space, max_deg.min(2), 97));
    report.absorb(verify_so_structure(n));
    report.elapsed = start.elapsed();
    Ok(report)
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit(space: &SuperSpace) -> Vector {
        [(Monomial::one(space), BigInt::one())].into_iter().collect()
    }

    fn mono(space: &SuperSpace, even: &[((i64, usize), u16)], odd: &[usize]) -> Monomial {
        let mut out = Monomial::one(space);
        for &((a, i), e) in even {
            out.even[space.even_index(a, i)] = e;
        }
        for &i in odd {
            out.odd |= 1 << i;
        }
        out
    }

    #[test]
    fn apply_examples() {
        for m in 0..=2 {
            let sp = SuperSpace::new(m, 2).unwrap();
            let e = op_euler(&sp, 0, 0);
            let got = e.apply_scaled(&sp, &unit(&sp), 4).unwrap();
            assert_eq!(e.half, 1);
            assert_eq!(
                got,
                [(Monomial::one(&sp), BigInt::from(2 * m as i64 - 1))]
                    .into_iter()
                    .filter(|(_, c)| !c.is_zero())
                    .collect()
            );
            assert!(op_delta(&sp, 0, 1).apply_scaled(&sp, &unit(&sp), 4).unwrap().is_empty());
        }
        let sp = SuperSpace::new(1, 2).unwrap();
        let got = op_r(&sp, 0, 1).apply_scaled(&sp, &unit(&sp), 2).unwrap();
        let want: Vector = [
            (mono(&sp, &[], &[0, 1]), BigInt::one()),
            (mono(&sp, &[((-1, 0), 1), ((1, 1), 1)], &[]), BigInt::one()),
            (mono(&sp, &[((-1, 1), 1), ((1, 0), 1)], &[]), -BigInt::one()),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn odd_variables_anticommute() {
        let sp = SuperSpace::new(0, 3).unwrap();
        let x = |i| Operator::basic(Basic::Mul(Var::Odd { i }));
        let d = |i| Operator::basic(Basic::Der(Var::Odd { i }));
        let basis = sp.basis(3);
        for i in 0..3 {
            for j in 0..3 {
                let anti = x(i).supercommutator(&x(j));
                assert_eq!(operator_difference(&sp, &anti, &Operator::zero(false), &basis, 5).unwrap(), None);
                let leibniz = d(i).supercommutator(&x(j));
                let want = Operator::identity().scale(delta(i, j));
                assert_eq!(operator_difference(&sp, &leibniz, &want, &basis, 5).unwrap(), None);
            }
        }
    }

    #[test]
    fn degree_overflow_is_reported() {
        let sp = SuperSpace::new(1, 1).unwrap();
        let v: Vector = [(mono(&sp, &[((1, 0), 2)], &[]), BigInt::one())].into_iter().collect();
        let twice = op_r(&sp, 0, 0).compose(&op_r(&sp, 0, 0));
        assert!(Operator::basic(Basic::Mul(Var::Even { a: 1, i: 0 })).apply_scaled(&sp, &v, 2).is_err());
        assert!(twice.apply_scaled(&sp, &v, 5).is_err());
        assert!(twice.apply_scaled(&sp, &v, 6).is_ok());
    }

    #[test]
    fn basis_sizes() {
        // 2 even variables and 1 odd: monomials of degree ≤ 2.
        let sp = SuperSpace::new(1, 1).unwrap();
        assert_eq!(sp.basis(2).len(), 6 + 3);
        assert_eq!(SuperSpace::new(0, 3).unwrap().basis(3).len(), 8);
    }

    #[test]
    fn commutator_examples() {
        let sp = SuperSpace::new(2, 2).unwrap();
        let basis = sp.basis(3);
        let e11 = op_euler(&sp, 0, 0);
        assert_eq!(
            operator_difference(&sp, &e11.supercommutator(&e11), &Operator::zero(false), &basis, 7).unwrap(),
            None
        );
        let lhs = op_r(&sp, 0, 1).supercommutator(&op_delta(&sp, 0, 1));
        let rhs = op_euler(&sp, 1, 1).add(&op_euler(&sp, 0, 0)).scale(-1);
        assert_eq!(operator_difference(&sp, &lhs, &rhs, &basis, 7).unwrap(), None);
        let sp = SuperSpace::new(1, 3).unwrap();
        let lhs = op_euler(&sp, 0, 1).supercommutator(&op_r(&sp, 1, 2));
        assert_eq!(operator_difference(&sp, &lhs, &op_r(&sp, 0, 2), &sp.basis(3), 7).unwrap(), None);
    }

    #[test]
    fn wrong_constant_is_detected() {
        let sp = SuperSpace::new(1, 2).unwrap();
        let lhs = op_r(&sp, 0, 1).supercommutator(&op_delta(&sp, 0, 1));
        let shifted = op_euler(&sp, 1, 1).add(&op_euler(&sp, 0, 0)).add(&Operator::identity()).scale(-1);
        assert!(operator_difference(&sp, &lhs, &shifted, &sp.basis(2), 6).unwrap().is_some());
    }

    #[test]
    fn suites_pass() {
        for (m, n, d) in [(1, 1, 3), (1, 2, 4), (2, 2, 3), (0, 2, 3)] {
            let report = verify_commutator_suite(m, n, d).unwrap();
            assert!(report.passed(), "{:?}", report.failures.first());
        }
    }

    #[test]
    fn so_structure() {
        for n in 1..=3 {
            assert!(verify_so_structure(n).passed());
        }
    }
}
