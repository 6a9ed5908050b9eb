//! The graded character of `Z_{V,E}` for `V = C^{2m+1}`, `E = C^n`: its
//! Hilbert series, the PBW upper bound and the weight spaces that factor
//! through the quadric hypersurface ring `A = S^•(V)/(q)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::character::dim_so_odd;
use crate::error::{Error, Result};
use crate::littlewood::{quotient_times_wedge, tor_side};
use crate::partition::Partition;
use crate::schur::{dim_gl, kostka, Graded, PairSum, SchurSum};

/// `t`-degree ↦ (`O(V)`-label ↦ Schur sum in `E`). The `t`-degree of
/// `V ⊗ E` is one and of `∧²E` is two, so it equals the size of the
/// `E`-partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigradedCharacter {
    pub m: usize,
    pub n: usize,
    pub truncation: usize,
    pub coeffs: Vec<BTreeMap<Partition, SchurSum>>,
}

impl BigradedCharacter {
    fn from_graded(m: usize, n: usize, graded: Graded<PairSum>) -> Self {
        let coeffs = graded
            .coeffs
            .iter()
            .map(|slice| {
                let mut out: BTreeMap<Partition, SchurSum> = BTreeMap::new();
                for ((v, e), c) in slice.iter() {
                    out.entry(v.clone()).or_default().add_term(e.clone(), c);
                }
                out
            })
            .collect();
        BigradedCharacter { m, n, truncation: graded.truncation, coeffs }
    }

    pub fn coeff(&self, degree: usize, v: &Partition, e: &Partition) -> BigInt {
        self.coeffs.get(degree).and_then(|d| d.get(v)).map(|s| s.coeff(e)).unwrap_or_default()
    }

    /// Every `(degree, V-label, E-label)` with a nonzero coefficient in
    /// either character.
    pub fn support_union<'a>(&'a self, other: &'a Self) -> Vec<(usize, Partition, Partition)> {
        let mut keys = std::collections::BTreeSet::new();
        for ch in [self, other] {
            for (d, slice) in ch.coeffs.iter().enumerate() {
                for (v, sum) in slice {
                    for (e, _) in sum.iter() {
                        keys.insert((d, v.clone(), e.clone()));
                    }
                }
            }
        }
        keys.into_iter().collect()
    }

    /// Dimension of each graded piece.
    pub fn dimensions(&self) -> Result<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|slice| {
                let mut total = BigInt::zero();
                for (v, sum) in slice {
                    let dv = dim_so_odd(&v.bar(self.m)?, self.m)?;
                    for (e, c) in sum.iter() {
                        total += c * &dv * dim_gl(e, self.n);
                    }
                }
                Ok(total)
            })
            .collect()
    }
}

/// `Z_{V,E} = ⊕_λ S_{[λ]}(V) ⊗ L(ζ' - λ^op)`, with each `so(E ⊕ E^*)`
/// character taken from the Tor alternating sum.
pub fn z_character(m: usize, n: usize, max_degree: usize) -> BigradedCharacter {
    BigradedCharacter::from_graded(m, n, tor_side(m, n, max_degree))
}

/// Graded dimensions of `Z_{V,E}` from its character.
pub fn z_hilbert(m: usize, n: usize, max_degree: usize) -> Result<Vec<BigInt>> {
    z_character(m, n, max_degree).dimensions()
}

/// Coefficients of `((1+t)/(1-t)^{2m})^n` up to `t^D`.
pub fn z_hilbert_closed(m: usize, n: usize, max_degree: usize) -> Vec<BigInt> {
    let r = 2 * m * n;
    (0..=max_degree)
        .map(|d| {
            (0..=n.min(d))
                .map(|k| {
                    let tail = if r == 0 {
                        BigInt::from(u8::from(d == k))
                    } else {
                        binomial(BigInt::from(d - k + r - 1), BigInt::from(r - 1))
                    };
                    binomial(BigInt::from(n), BigInt::from(k)) * tail
                })
                .sum()
        })
        .collect()
}

/// `[S^•(E ⊗ V)/(S²E)] · [S^•(∧²E)]`, where the quotient is
/// `⊕_{λ admissible, ℓ(λ) ≤ n} S_{[λ]}(V) ⊗ S_λ(E)`.
pub fn pbw_upper_bound(m: usize, n: usize, max_degree: usize) -> BigradedCharacter {
    BigradedCharacter::from_graded(m, n, quotient_times_wedge(n, max_degree, |p| p.is_admissible(m)))
}

/// `dim A_d = dim S^d(V) - dim S^{d-2}(V)` for `d = 0..=D`.
pub fn quadric_dims(m: usize, max_degree: usize) -> Vec<BigInt> {
    let sym = |d: usize| binomial(BigInt::from(d + 2 * m), BigInt::from(2 * m));
    (0..=max_degree).map(|d| if d < 2 { sym(d) } else { sym(d) - sym(d - 2) }).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSpace {
    pub weight: Vec<usize>,
    /// Dimension read off from the character of `Z_{V,E}` via Kostka numbers.
    pub extracted: BigInt,
    /// `Π_i dim A_{w_i}`.
    pub product: BigInt,
}

/// The `GL_n` weight space of `Z_{V,C^n}` of weight `w`, computed both ways.
pub fn quadric_weight_space(m: usize, weight: &[usize]) -> Result<WeightSpace> {
    let n = weight.len();
    if n == 0 {
        return Err(Error::Precondition("weight must have at least one entry".into()));
    }
    let degree: usize = weight.iter().sum();
    let z = z_character(m, n, degree);
    let mut extracted = BigInt::zero();
    for (v, sum) in &z.coeffs[degree] {
        let dv = dim_so_odd(&v.bar(m)?, m)?;
        for (e, c) in sum.iter() {
            extracted += c * &dv * kostka(e, weight);
        }
    }
    let dims = quadric_dims(m, weight.iter().copied().max().unwrap_or(0));
    let product = weight.iter().fold(BigInt::one(), |acc, &w| acc * &dims[w]);
    Ok(WeightSpace { weight: weight.to_vec(), extracted, product })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    /// Power series product, truncated to the length of `a`.
    fn series_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        (0..a.len()).map(|d| (0..=d).map(|k| &a[k] * &b[d - k]).sum()).collect()
    }

    /// `((1+t)/(1-t)^{2m})^n` by repeated series multiplication.
    fn closed_oracle(m: usize, n: usize, d: usize) -> Vec<BigInt> {
        let mut base = vec![BigInt::zero(); d + 1];
        base[0] = BigInt::one();
        if d >= 1 {
            base[1] = BigInt::one();
        }
        let geom = vec![BigInt::one(); d + 1];
        for _ in 0..2 * m {
            base = series_mul(&base, &geom);
        }
        let mut out = vec![BigInt::zero(); d + 1];
        out[0] = BigInt::one();
        for _ in 0..n {
            out = series_mul(&out, &base);
        }
        out
    }

    #[test]
    fn closed_form_matches_series() {
        for m in 0..=3 {
            for n in 1..=3 {
                assert_eq!(z_hilbert_closed(m, n, 10), closed_oracle(m, n, 10), "m={m} n={n}");
            }
        }
        assert_eq!(z_hilbert_closed(1, 1, 4), ints(&[1, 3, 5, 7, 9]));
        assert_eq!(z_hilbert_closed(1, 2, 3), ints(&[1, 6, 19, 44]));
    }

    #[test]
    fn character_examples() {
        let z = z_character(1, 1, 2);
        assert_eq!(z.coeffs[0].len(), 1);
        assert_eq!(z.coeff(0, &part![], &part![]), BigInt::one());
        assert_eq!(z.coeffs[1].len(), 1);
        assert_eq!(z.coeff(1, &part![1], &part![1]), BigInt::one());
        assert_eq!(z.dimensions().unwrap(), ints(&[1, 3, 5]));
    }

    #[test]
    fn hilbert_matches_closed_form() {
        for m in 0..=2 {
            for n in 1..=2 {
                assert_eq!(z_hilbert(m, n, 6).unwrap(), z_hilbert_closed(m, n, 6), "m={m} n={n}");
            }
        }
        assert_eq!(z_hilbert(0, 3, 4).unwrap(), ints(&[1, 3, 3, 1, 0]));
    }

    #[test]
    fn quadric_limit() {
        for m in 0..=3 {
            assert_eq!(quadric_dims(m, 8), z_hilbert_closed(m, 1, 8));
        }
        assert_eq!(quadric_dims(1, 4), ints(&[1, 3, 5, 7, 9]));
    }

    #[test]
    fn pbw_bound_dominates() {
        for m in 0..=2 {
            for n in 1..=2 {
                let (z, bound) = (z_character(m, n, 6), pbw_upper_bound(m, n, 6));
                for (d, v, e) in z.support_union(&bound) {
                    let (a, b) = (z.coeff(d, &v, &e), bound.coeff(d, &v, &e));
                    assert!(a >= BigInt::zero() && a <= b, "m={m} n={n} d={d} [{v}]⊗({e}): {a} > {b}");
                }
            }
        }
    }

    #[test]
    fn pbw_bound_sharp_in_rank_one() {
        for m in 0..=2 {
            assert_eq!(z_character(m, 1, 6), pbw_upper_bound(m, 1, 6));
        }
    }

    #[test]
    fn pbw_bound_strict_for_spinors() {
        let (z, bound) = (z_character(0, 2, 4), pbw_upper_bound(0, 2, 4));
        assert_eq!(bound.coeff(4, &part![], &part![2, 2]), BigInt::one());
        assert_eq!(z.coeff(4, &part![], &part![2, 2]), BigInt::zero());
    }

    #[test]
    fn weight_space_examples() {
        let w = quadric_weight_space(1, &[0, 0]).unwrap();
        assert_eq!((w.extracted.clone(), w.product.clone()), (BigInt::one(), BigInt::one()));
        let w = quadric_weight_space(1, &[2]).unwrap();
        assert_eq!(w.extracted, BigInt::from(5));
        let w = quadric_weight_space(1, &[2, 1]).unwrap();
        assert_eq!((w.extracted, w.product), (BigInt::from(15), BigInt::from(15)));
        assert!(quadric_weight_space(1, &[]).is_err());
    }

    #[test]
    fn weight_spaces_factor() {
        for m in 0..=2 {
            for a in 0..=4usize {
                for b in 0..=4 - a {
                    let w = quadric_weight_space(m, &[a, b]).unwrap();
                    assert_eq!(w.extracted, w.product, "m={m} w=({a},{b})");
                    let swapped = quadric_weight_space(m, &[b, a]).unwrap();
                    assert_eq!(w.extracted, swapped.extracted);
                }
            }
        }
    }
}
