//! A minimal commutative-ring interface and exact determinants over it.
//!
//! Jacobi–Trudi style determinants appear over two coefficient rings in this
//! crate (Schur sums and Laurent characters), so the expansion is written once.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub trait CommRing: Clone + PartialEq + std::fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn vanishes(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Exact division of every coefficient by two.
    fn halve(&self) -> Result<Self>;
}

impl CommRing for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn halve(&self) -> Result<Self> {
        halve_int(self)
    }
}

pub(crate) fn halve_int(c: &BigInt) -> Result<BigInt> {
    let (q, r) = c.div_rem(&BigInt::from(2));
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::OddCoefficient(c.to_string()))
    }
}

fn check_square<R>(matrix: &[Vec<R>]) -> Result<()> {
    let rows = matrix.len();
    for row in matrix {
        if row.len() != rows {
            return Err(Error::NotSquare { rows, cols: row.len() });
        }
    }
    Ok(())
}

/// Determinant by Laplace expansion along the first row, memoizing each
/// minor by the set of columns it still uses. `one` supplies the unit for the
/// empty matrix.
pub fn determinant<R: CommRing>(matrix: &[Vec<R>], one: &R) -> Result<R> {
    check_square(matrix)?;
    let n = matrix.len();
    if n > 63 {
        return Err(Error::Precondition(format!("{n}x{n} determinant is too large")));
    }
    let mut memo: HashMap<u64, R> = HashMap::new();
    Ok(minor(matrix, (1u64 << n) - 1, one, &mut memo))
}

fn minor<R: CommRing>(matrix: &[Vec<R>], cols: u64, one: &R, memo: &mut HashMap<u64, R>) -> R {
    if cols == 0 {
        return one.clone();
    }
    if let Some(v) = memo.get(&cols) {
        return v.clone();
    }
    let n = matrix.len();
    let row = n - cols.count_ones() as usize;
    let mut acc: Option<R> = None;
    let mut sign_positive = true;
    for c in 0..n {
        if cols & (1 << c) == 0 {
            continue;
        }
        let entry = &matrix[row][c];
        if !entry.vanishes() {
            let sub = minor(matrix, cols & !(1 << c), one, memo);
            if !sub.vanishes() {
                let term = entry.mul(&sub);
                acc = Some(match acc {
                    None if sign_positive => term,
                    None => term.neg(),
                    Some(a) if sign_positive => a.add(&term),
                    Some(a) => a.sub(&term),
                });
            }
        }
        sign_positive = !sign_positive;
    }
    let value = acc.unwrap_or_else(|| one.zero_like());
    memo.insert(cols, value.clone());
    value
}

/// `½·det`, failing if the determinant has an odd coefficient.
pub fn half_determinant<R: CommRing>(matrix: &[Vec<R>], one: &R) -> Result<R> {
    determinant(matrix, one)?.halve()
}
