//! Fraction-free (Bareiss) elimination over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Matrix = Vec<Vec<BigInt>>;

/// Rank by Bareiss forward elimination. Every division is exact.
pub fn rank(matrix: &Matrix) -> usize {
    let mut a = matrix.clone();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                a[i][j] = exact_div(&v, &prev);
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// Integer inverse of a square matrix, or `None` when the matrix is
/// singular or its inverse has non-integral entries.
///
/// Fraction-free Gauss-Jordan on `[M | I]` ends with `[D·I | D·M⁻¹]`, where
/// `D = ±det M`; the right block is then divided by `D`.
pub fn integer_inverse(matrix: &Matrix) -> Option<Matrix> {
    let n = matrix.len();
    assert!(matrix.iter().all(|row| row.len() == n), "matrix must be square");
    let mut a: Matrix = matrix
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }));
            r
        })
        .collect();
    let mut prev = BigInt::one();
    for k in 0..n {
        let p = (k..n).find(|&i| !a[i][k].is_zero())?;
        a.swap(k, p);
        let (pivot_row, pivot) = (a[k].clone(), a[k][k].clone());
        for (i, row) in a.iter_mut().enumerate() {
            if i == k {
                continue;
            }
            let factor = row[k].clone();
            for (x, pk) in row.iter_mut().zip(&pivot_row) {
                let v = &pivot * &*x - &factor * pk;
                *x = exact_div(&v, &prev);
            }
        }
        prev = pivot;
    }
    let det = prev;
    let mut inverse = Matrix::with_capacity(n);
    for row in a {
        let mut out = Vec::with_capacity(n);
        for x in &row[n..] {
            let (q, r) = x.div_rem(&det);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        inverse.push(out);
    }
    Some(inverse)
}

pub fn mat_vec(m: &Matrix, v: &[BigInt]) -> Vec<BigInt> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

fn exact_div(v: &BigInt, d: &BigInt) -> BigInt {
    let (q, r) = v.div_rem(d);
    debug_assert!(r.is_zero(), "Bareiss division must be exact");
    q
}

/// `|det|` via Bareiss; zero for singular matrices.
pub fn abs_determinant(matrix: &Matrix) -> BigInt {
    let n = matrix.len();
    let mut a = matrix.clone();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return BigInt::zero();
        };
        a.swap(k, p);
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = exact_div(&v, &prev);
            }
        }
        prev = a[k][k].clone();
    }
    prev.abs()
}
