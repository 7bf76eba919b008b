//! Fraction-free Gaussian elimination (Bareiss) over big integers:
//! exact determinants, row echelon forms of rectangular matrices, and
//! exact rational kernels read off the echelon form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact determinant by one-step Bareiss elimination. Consumes its input.
pub fn determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, r);
            sign = -sign;
        }
        let (upper, lower) = a.split_at_mut(k + 1);
        let pivot_row = &upper[k];
        let pivot = pivot_row[k].clone();
        for row in lower.iter_mut() {
            let head = std::mem::replace(&mut row[k], BigInt::zero());
            if head.is_zero() && pivot.is_one() && prev.is_one() {
                continue;
            }
            for j in (k + 1)..n {
                let num = &row[j] * &pivot - &head * &pivot_row[j];
                debug_assert!((&num % &prev).is_zero());
                row[j] = num / &prev;
            }
        }
        prev = pivot;
    }
    let det = std::mem::take(&mut a[n - 1][n - 1]);
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Row echelon form of a rectangular integer matrix, computed
/// fraction-free. Entries stay integral; pivots advance left to right,
/// skipping columns with no usable pivot.
pub struct Echelon {
    pub rows: Vec<Vec<BigInt>>,
    pub ncols: usize,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

pub fn echelon(mut a: Vec<Vec<BigInt>>, ncols: usize) -> Echelon {
    let nrows = a.len();
    let mut prev = BigInt::one();
    let mut r = 0usize;
    let mut pivots = Vec::new();
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(pr) = (r..nrows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, pr);
        let (upper, lower) = a.split_at_mut(r + 1);
        let pivot_row = &upper[r];
        let pivot = pivot_row[col].clone();
        for row in lower.iter_mut() {
            let head = std::mem::replace(&mut row[col], BigInt::zero());
            for j in (col + 1)..ncols {
                let num = &row[j] * &pivot - &head * &pivot_row[j];
                debug_assert!((&num % &prev).is_zero());
                row[j] = num / &prev;
            }
        }
        prev = pivot;
        pivots.push(col);
        r += 1;
    }
    a.truncate(r);
    Echelon {
        rows: a,
        ncols,
        pivots,
    }
}

/// Exact kernel basis over the rationals from an echelon form: one vector
/// per free column, carrying 1 at its own free column and 0 at the others.
pub fn kernel_from_echelon(e: &Echelon) -> Vec<Vec<BigRational>> {
    let rank = e.rank();
    let mut is_pivot = vec![false; e.ncols];
    for &c in &e.pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for free in 0..e.ncols {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![BigRational::zero(); e.ncols];
        v[free] = BigRational::one();
        for r in (0..rank).rev() {
            let pc = e.pivots[r];
            if pc > free {
                continue;
            }
            let mut acc = BigRational::zero();
            for j in (pc + 1)..=free {
                if !e.rows[r][j].is_zero() && !v[j].is_zero() {
                    acc += BigRational::from(e.rows[r][j].clone()) * &v[j];
                }
            }
            v[pc] = -acc / BigRational::from(e.rows[r][pc].clone());
        }
        basis.push(v);
    }
    basis
}

/// Scales a rational vector to a primitive integer vector (clears
/// denominators, divides by the content). The zero vector maps to itself.
pub fn clear_denominators(v: &[BigRational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut gcd = BigInt::zero();
    for x in &ints {
        gcd = gcd.gcd(x);
    }
    if gcd.is_zero() || gcd.is_one() {
        return ints;
    }
    ints.into_iter().map(|x| x / &gcd).collect()
}

/// Rank of a rational matrix, by clearing each row and running the
/// fraction-free echelon.
pub fn rational_rank(rows: &[Vec<BigRational>], ncols: usize) -> usize {
    let cleared: Vec<Vec<BigInt>> = rows.iter().map(|r| clear_denominators(r)).collect();
    echelon(cleared, ncols).rank()
}
