//! Multivariate Laurent polynomials with integer coefficients, used as
//! characters of a rank-`m` torus.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::{halve_int, CommRing};

/// Exponent vector of a monomial `x_1^{e_1} ⋯ x_m^{e_m}`.
pub type Exponent = Vec<i64>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Laurent {
    nvars: usize,
    terms: BTreeMap<Exponent, BigInt>,
}

impl Laurent {
    pub fn zero(nvars: usize) -> Self {
        Laurent { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], BigInt::one())
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(vec![0; nvars], c.into())
    }

    pub fn monomial(exp: Exponent, coeff: BigInt) -> Self {
        let mut out = Laurent { nvars: exp.len(), terms: BTreeMap::new() };
        if !coeff.is_zero() {
            out.terms.insert(exp, coeff);
        }
        out
    }

    /// `x_i^k`, 0-based `i`.
    pub fn var_pow(nvars: usize, i: usize, k: i64) -> Self {
        let mut e = vec![0; nvars];
        e[i] = k;
        Self::monomial(e, BigInt::one())
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponent, BigInt)>) -> Self {
        let mut out = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent length mismatch");
            out.add_term(e, &c);
        }
        out
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: &[i64]) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exp: Exponent, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign_scaled(&mut self, other: &Laurent, scale: &BigInt) {
        for (e, c) in &other.terms {
            self.add_term(e.clone(), &(c * scale));
        }
    }

    pub fn scale(&self, k: &BigInt) -> Laurent {
        let mut out = Laurent::zero(self.nvars);
        out.add_assign_scaled(self, k);
        out
    }

    /// Value at `x = (1, …, 1)`: the dimension of a character.
    pub fn dimension(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Substitutes `x_i ↦ x_i^{-1}` in every variable.
    pub fn invert(&self) -> Laurent {
        Laurent::from_terms(self.nvars, self.terms.iter().map(|(e, c)| (e.iter().map(|x| -x).collect(), c.clone())))
    }

    /// True when the polynomial is invariant under every signed permutation
    /// of the variables.
    pub fn is_weyl_invariant_bc(&self) -> bool {
        self.terms.iter().all(|(e, c)| {
            let mut key: Vec<i64> = e.iter().map(|x| x.abs()).collect();
            key.sort_unstable();
            // Invariance means every monomial in the orbit has the same coefficient;
            // comparing with the dominant representative suffices.
            key.reverse();
            self.coeff(&key) == *c
        })
    }

    fn leading(&self) -> Option<(&Exponent, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Exact quotient `self / divisor`. Errors when the division leaves a
    /// remainder or the divisor is zero.
    pub fn div_exact(&self, divisor: &Laurent) -> Result<Laurent> {
        let (lead_e, lead_c) = divisor.leading().ok_or_else(|| Error::InexactDivision("division by zero".into()))?;
        let n = self.nvars;
        // Per-variable degree ranges bound every exponent of the quotient.
        let range = |p: &Laurent, i: usize| -> (i64, i64) {
            let lo = p.terms.keys().map(|e| e[i]).min().unwrap_or(0);
            let hi = p.terms.keys().map(|e| e[i]).max().unwrap_or(0);
            (lo, hi)
        };
        let bounds: Vec<(i64, i64)> = (0..n)
            .map(|i| {
                let (flo, fhi) = range(self, i);
                let (glo, ghi) = range(divisor, i);
                (flo - glo, fhi - ghi)
            })
            .collect();

        let mut rest = self.clone();
        let mut quotient = Laurent::zero(n);
        while let Some((e, c)) = rest.leading() {
            let qe: Exponent = e.iter().zip(lead_e).map(|(a, b)| a - b).collect();
            let (qc, r) = c.div_rem(lead_c);
            if !r.is_zero() || qe.iter().zip(&bounds).any(|(x, (lo, hi))| x < lo || x > hi) {
                return Err(Error::InexactDivision(format!("nonzero remainder with leading term {c}·x^{e:?}")));
            }
            let neg = -&qc;
            for (de, dc) in &divisor.terms {
                let ee: Exponent = de.iter().zip(&qe).map(|(a, b)| a + b).collect();
                rest.add_term(ee, &(dc * &neg));
            }
            quotient.add_term(qe, &qc);
        }
        Ok(quotient)
    }

    /// Terms in descending lexicographic exponent order.
    pub fn terms_desc(&self) -> Vec<(Exponent, BigInt)> {
        self.terms.iter().rev().map(|(e, c)| (e.clone(), c.clone())).collect()
    }
}

impl CommRing for Laurent {
    fn zero_like(&self) -> Self {
        Laurent::zero(self.nvars)
    }
    fn one_like(&self) -> Self {
        Laurent::one(self.nvars)
    }
    fn vanishes(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign_scaled(other, &BigInt::one());
        out
    }
    fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign_scaled(other, &-BigInt::one());
        out
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = Laurent::zero(self.nvars.max(other.nvars));
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, &(c1 * c2));
            }
        }
        out
    }
    fn neg(&self) -> Self {
        self.scale(&-BigInt::one())
    }
    fn halve(&self) -> Result<Self> {
        let mut out = Laurent::zero(self.nvars);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), halve_int(c)?);
        }
        Ok(out)
    }
}

impl fmt::Display for Laurent {
    /// `x^1 + 1 + x^-1` in one variable, `x1^2*x2^-1 + …` in several;
    /// terms in descending lexicographic order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(i, x)| if self.nvars == 1 { format!("x^{x}") } else { format!("x{}^{x}", i + 1) })
                .collect();
            let abs = c.abs();
            let body = match (mono.is_empty(), abs.is_one()) {
                (true, _) => abs.to_string(),
                (false, true) => mono.join("*"),
                (false, false) => format!("{abs}*{}", mono.join("*")),
            };
            let sign = if c.is_negative() { "-" } else { "+" };
            if k == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
                f.write_str(&body)?;
            } else {
                write!(f, " {sign} {body}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(k: i64) -> Laurent {
        Laurent::var_pow(1, 0, k)
    }

    #[test]
    fn display() {
        let p = x(1).add(&Laurent::one(1)).add(&x(-1));
        assert_eq!(p.to_string(), "x^1 + 1 + x^-1");
        let q = x(2).scale(&BigInt::from(-3)).add(&Laurent::constant(1, 2));
        assert_eq!(q.to_string(), "-3*x^2 + 2");
        assert_eq!(Laurent::zero(2).to_string(), "0");
        let r = Laurent::var_pow(2, 0, 1).mul(&Laurent::var_pow(2, 1, -1));
        assert_eq!(r.to_string(), "x1^1*x2^-1");
    }

    #[test]
    fn exact_division() {
        // (x - x^-1)(x + 1 + x^-1) = x^2 + x - x^-1 - x^-2
        let a = x(1).sub(&x(-1));
        let b = x(1).add(&Laurent::one(1)).add(&x(-1));
        let prod = a.mul(&b);
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert_eq!(prod.div_exact(&b).unwrap(), a);
        assert!(prod.add(&Laurent::one(1)).div_exact(&a).is_err());
        assert!(b.div_exact(&Laurent::zero(1)).is_err());
        assert!(Laurent::one(1).div_exact(&Laurent::constant(1, 2)).is_err());
    }

    #[test]
    fn dimension_and_inversion() {
        let p = x(3).scale(&BigInt::from(2)).add(&x(-1));
        assert_eq!(p.dimension(), BigInt::from(3));
        assert_eq!(p.invert(), x(-3).scale(&BigInt::from(2)).add(&x(1)));
    }

    use proptest::prelude::*;

    fn arb_laurent() -> impl Strategy<Value = Laurent> {
        proptest::collection::vec(((-3i64..4, -3i64..4), -4i64..5), 0..6)
            .prop_map(|ts| Laurent::from_terms(2, ts.into_iter().map(|((a, b), c)| (vec![a, b], BigInt::from(c)))))
    }

    proptest! {
        #[test]
        fn division_inverts_multiplication(p in arb_laurent(), q in arb_laurent()) {
            prop_assume!(!q.is_empty());
            prop_assert_eq!(p.mul(&q).div_exact(&q).unwrap(), p);
        }

        #[test]
        fn ring_axioms(p in arb_laurent(), q in arb_laurent(), r in arb_laurent()) {
            prop_assert_eq!(p.mul(&q), q.mul(&p));
            prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
            prop_assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
            prop_assert!(p.sub(&p).is_empty());
        }
    }
}
