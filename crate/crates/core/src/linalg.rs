//! Exact integer and rational linear algebra on small dense matrices.

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, Zero};

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

/// Fraction-free (Bareiss) determinant with checked `i64` arithmetic.
///
/// Every intermediate value is a minor of the input, and every division
/// is exact.
pub fn bareiss_determinant(matrix: &[Vec<i64>]) -> Result<i64> {
    let n = matrix.len();
    if matrix.iter().any(|row| row.len() != n) {
        return Err(Error::BadInput("determinant of a non-square matrix".into()));
    }
    if n == 0 {
        return Ok(1);
    }
    let overflow = || Error::Overflow("determinant");
    let mut a: Vec<Vec<i64>> = matrix.to_vec();
    let mut sign = 1i64;
    let mut prev = 1i64;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let lhs = a[i][j].checked_mul(a[k][k]).ok_or_else(overflow)?;
                let rhs = a[i][k].checked_mul(a[k][j]).ok_or_else(overflow)?;
                a[i][j] = lhs.checked_sub(rhs).ok_or_else(overflow)? / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    a[n - 1][n - 1].checked_mul(sign).ok_or_else(overflow)
}

/// Solves `matrix * x = rhs` exactly over the rationals.
///
/// Pivots are taken as the first nonzero entry at or below the diagonal.
pub fn solve_rational(matrix: &[Vec<Rational>], rhs: &[Rational]) -> Result<Vec<Rational>> {
    let n = matrix.len();
    if rhs.len() != n || matrix.iter().any(|row| row.len() != n) {
        return Err(Error::BadInput(
            "linear system has inconsistent shape".into(),
        ));
    }
    let overflow = || Error::Overflow("rational elimination");
    let mut aug: Vec<Vec<Rational>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(*b);
            r
        })
        .collect();

    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !aug[r][col].is_zero())
            .ok_or(Error::SingularSystem)?;
        aug.swap(col, pivot);
        let p = aug[col][col];
        for v in &mut aug[col][col..] {
            *v = v.checked_div(&p).ok_or_else(overflow)?;
        }
        let pivot_row = aug[col].clone();
        for (i, row) in aug.iter_mut().enumerate() {
            if i == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col];
            for (v, pv) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                let delta = factor.checked_mul(pv).ok_or_else(overflow)?;
                *v = v.checked_sub(&delta).ok_or_else(overflow)?;
            }
        }
    }
    Ok(aug.into_iter().map(|row| row[n]).collect())
}

/// Checked sum of rationals.
pub fn rational_sum<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Option<Rational> {
    values
        .into_iter()
        .try_fold(Rational::zero(), |acc, v| acc.checked_add(v))
}

/// Renders a rational as `"num/den"` in lowest terms, even for integers.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let err = || Error::Parse {
        input: s.to_string(),
        reason: "expected \"num/den\"".into(),
    };
    let (num, den) = s.split_once('/').ok_or_else(err)?;
    let num: i64 = num.trim().parse().map_err(|_| err())?;
    let den: i64 = den.trim().parse().map_err(|_| err())?;
    if den == 0 {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}
