//! Smith normal form by minimal-pivot elimination.
//!
//! Small matrices are first reduced in `i64` with checked arithmetic; any
//! overflow restarts the reduction over `BigInt`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::{IntegerMatrix, Matrix};

trait Entry: Clone + Zero {
    fn abs_cmp(&self, other: &Self) -> Ordering;
    fn floor_div(&self, d: &Self) -> Option<Self>;
    /// `self - q * b`
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self>;
}

impl Entry for i64 {
    fn abs_cmp(&self, other: &Self) -> Ordering {
        self.unsigned_abs().cmp(&other.unsigned_abs())
    }

    fn floor_div(&self, d: &Self) -> Option<Self> {
        self.checked_div_euclid(*d)
    }

    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self> {
        q.checked_mul(*b).and_then(|p| self.checked_sub(p))
    }
}

impl Entry for BigInt {
    fn abs_cmp(&self, other: &Self) -> Ordering {
        self.magnitude().cmp(other.magnitude())
    }

    fn floor_div(&self, d: &Self) -> Option<Self> {
        Some(Integer::div_floor(self, d))
    }

    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self> {
        Some(self - q * b)
    }
}

/// Invariant factors `d_1 | d_2 | ⋯ | d_r` of `m`, with `r = rank(m)`.
pub fn smith_normal_form(m: &IntegerMatrix) -> Vec<BigInt> {
    let small = m.data_i64();
    let diag = match small {
        Some(s) => diagonalize(s).map(to_big).unwrap_or_else(|| {
            diagonalize(m.clone()).expect("bigint arithmetic cannot overflow")
        }),
        None => diagonalize(m.clone()).expect("bigint arithmetic cannot overflow"),
    };
    normalize(diag)
}

/// Same as [`smith_normal_form`] for a machine-integer matrix.
pub fn invariant_factors(m: &Matrix<i64>) -> Vec<BigInt> {
    let diag = match diagonalize(m.clone()) {
        Some(d) => to_big(d),
        None => diagonalize(m.to_integer()).expect("bigint arithmetic cannot overflow"),
    };
    normalize(diag)
}

fn to_big(d: Vec<i64>) -> Vec<BigInt> {
    d.into_iter().map(BigInt::from).collect()
}

impl IntegerMatrix {
    fn data_i64(&self) -> Option<Matrix<i64>> {
        use num_traits::ToPrimitive;
        let mut out = Matrix::zeros(self.rows(), self.cols());
        for i in 0..self.rows() {
            for j in 0..self.cols() {
                out.set(i, j, self.get(i, j).to_i64()?);
            }
        }
        Some(out)
    }
}

/// Diagonal of an equivalent diagonal matrix, or `None` on overflow.
fn diagonalize<T: Entry>(mut a: Matrix<T>) -> Option<Vec<T>> {
    let (rows, cols) = (a.rows(), a.cols());
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows && t < cols {
        let Some((pi, pj)) = min_abs_in_block(&a, t) else { break };
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);
        loop {
            let mut clean = true;
            let pivot = a.get(t, t).clone();
            for i in t + 1..rows {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let q = a.get(i, t).floor_div(&pivot)?;
                for j in t..cols {
                    let v = a.get(i, j).sub_mul(&q, a.get(t, j))?;
                    a.set(i, j, v);
                }
                if !a.get(i, t).is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let q = a.get(t, j).floor_div(&pivot)?;
                for i in t..rows {
                    let v = a.get(i, j).sub_mul(&q, a.get(i, t))?;
                    a.set(i, j, v);
                }
                if !a.get(t, j).is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
            // A remainder smaller than the pivot survived: promote it.
            let mut best = (t, t);
            for i in t + 1..rows {
                let v = a.get(i, t);
                if !v.is_zero() && v.abs_cmp(a.get(best.0, best.1)) == Ordering::Less {
                    best = (i, t);
                }
            }
            for j in t + 1..cols {
                let v = a.get(t, j);
                if !v.is_zero() && v.abs_cmp(a.get(best.0, best.1)) == Ordering::Less {
                    best = (t, j);
                }
            }
            a.swap_rows(t, best.0);
            a.swap_cols(t, best.1);
        }
        diag.push(a.get(t, t).clone());
        t += 1;
    }
    Some(diag)
}

fn min_abs_in_block<T: Entry>(a: &Matrix<T>, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let v = a.get(i, j);
            if v.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if v.abs_cmp(a.get(bi, bj)) != Ordering::Less => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

/// Turns any nonzero diagonal into the divisibility chain of invariant factors.
fn normalize(diag: Vec<BigInt>) -> Vec<BigInt> {
    let mut d: Vec<BigInt> = diag.into_iter().map(|x| x.abs()).filter(|x| !x.is_zero()).collect();
    let n = d.len();
    for i in 0..n {
        for j in i + 1..n {
            if d[i].is_one() {
                break;
            }
            let g = d[i].gcd(&d[j]);
            if g != d[i] {
                let l = &d[i] / &g * &d[j];
                d[i] = g;
                d[j] = l;
            }
        }
    }
    d
}

/// Rank over `F_p`.
pub fn rank_mod_p(m: &Matrix<i64>, p: u64) -> usize {
    let (rows, cols) = (m.rows(), m.cols());
    let pi = p as i128;
    let mut a: Vec<Vec<u64>> = (0..rows)
        .map(|i| m.row(i).iter().map(|&x| (x as i128).rem_euclid(pi) as u64).collect())
        .collect();
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| a[r][c] != 0) else { continue };
        a.swap(rank, piv);
        let inv = mod_inv(a[rank][c], p);
        for j in c..cols {
            a[rank][j] = mul_mod(a[rank][j], inv, p);
        }
        for r in 0..rows {
            if r != rank && a[r][c] != 0 {
                let f = a[r][c];
                for j in c..cols {
                    let sub = mul_mod(f, a[rank][j], p);
                    a[r][j] = (a[r][j] + p - sub) % p;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    r
}

pub(crate) fn mod_inv(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}
