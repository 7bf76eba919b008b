//! Prime-field linear algebra used by the certified fast paths: ranks,
//! kernels, characteristic polynomials and determinants mod word-sized
//! primes, plus CRT lifting and rational reconstruction.
//!
//! All primes used here live in (2^30, 2^31), so products of two residues
//! fit in a u64 with room to spare.

use crate::arith::{is_prime, mul_mod, pow_mod};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

pub const PRIME_LO: u64 = 1 << 30;
pub const PRIME_HI: u64 = 1 << 31;

#[inline]
fn add_p(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
fn sub_p(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
fn inv_p(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

#[inline]
pub fn entry_mod_p(e: i64, p: u64) -> u64 {
    e.rem_euclid(p as i64) as u64
}

/// Uniform random prime in (2^30, 2^31), distinct from `exclude`.
pub fn random_prime(rng: &mut impl Rng, exclude: &[u64]) -> u64 {
    loop {
        let candidate = rng.gen_range(PRIME_LO + 1..PRIME_HI) | 1;
        if is_prime(candidate) && !exclude.contains(&candidate) {
            return candidate;
        }
    }
}

/// The `count` largest primes below 2^31, descending. Used where a
/// reproducible prime sequence is wanted (CRT with a proven bound does
/// not need randomness to be sound).
pub fn descending_primes(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut candidate = PRIME_HI - 1;
    while out.len() < count {
        if is_prime(candidate) {
            out.push(candidate);
        }
        candidate -= 2;
    }
    out
}

/// Row-reduced echelon form over F_p. Rows are stored as u32 (valid since
/// p < 2^31).
pub struct RrefModP {
    pub rows: Vec<Vec<u32>>,
    pub ncols: usize,
    pub pivots: Vec<usize>,
    pub p: u64,
}

impl RrefModP {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Kernel basis: one vector per free column, with value 1 at its own
    /// free column and 0 at every other free column.
    pub fn kernel_basis(&self) -> Vec<Vec<u32>> {
        let p = self.p;
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.ncols];
            for (r, &c) in self.pivots.iter().enumerate() {
                v[c] = Some(r);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.ncols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut vec = vec![0u32; self.ncols];
            vec[free] = 1;
            for (r, &c) in self.pivots.iter().enumerate() {
                // pivot entry is 1 in RREF, so x_c = −rows[r][free]
                let val = self.rows[r][free] as u64;
                vec[c] = sub_p(0, val, p) as u32;
            }
            basis.push(vec);
        }
        basis
    }
}

/// Full Gauss-Jordan over F_p on a rectangular matrix.
pub fn rref_mod_p(mut rows: Vec<Vec<u32>>, ncols: usize, p: u64) -> RrefModP {
    let nrows = rows.len();
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(pr) = (r..nrows).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, pr);
        // normalize pivot row
        let inv = inv_p(rows[r][col] as u64, p);
        if rows[r][col] != 1 {
            for x in rows[r][col..].iter_mut() {
                *x = mul_mod(*x as u64, inv, p) as u32;
            }
        }
        let (head, tail) = rows.split_at_mut(r);
        let (pivot_row, below) = tail.split_first_mut().unwrap();
        for other in head.iter_mut().chain(below.iter_mut()) {
            let f = other[col] as u64;
            if f == 0 {
                continue;
            }
            let neg_f = p - f;
            for (x, &pv) in other[col..].iter_mut().zip(&pivot_row[col..]) {
                if pv != 0 {
                    *x = add_p(*x as u64, mul_mod(neg_f, pv as u64, p), p) as u32;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    RrefModP {
        rows: rows.into_iter().take(pivots.len().max(r)).collect(),
        ncols,
        pivots,
        p,
    }
}

/// det(A) mod p by plain elimination.
pub fn det_mod_p(mut a: Vec<Vec<u64>>, p: u64) -> u64 {
    let n = a.len();
    let mut det = 1u64 % p;
    for col in 0..n {
        let Some(pr) = (col..n).find(|&i| a[i][col] != 0) else {
            return 0;
        };
        if pr != col {
            a.swap(col, pr);
            det = sub_p(0, det, p);
        }
        det = mul_mod(det, a[col][col], p);
        let inv = inv_p(a[col][col], p);
        for i in (col + 1)..n {
            let f = a[i][col];
            if f == 0 {
                continue;
            }
            let neg = p - mul_mod(f, inv, p);
            for j in col..n {
                let add = mul_mod(neg, a[col][j], p);
                a[i][j] = add_p(a[i][j], add, p);
            }
        }
    }
    det
}

/// Monic characteristic polynomial det(xI − A) mod p, coefficients
/// constant-first. Hessenberg reduction by similarity, then the standard
/// leading-minor recurrence.
pub fn charpoly_mod_p(mut a: Vec<Vec<u64>>, p: u64) -> Vec<u64> {
    let n = a.len();
    if n == 0 {
        return vec![1 % p];
    }
    // reduce to upper Hessenberg form
    for k in 0..n.saturating_sub(2) {
        if a[k + 1][k] == 0 {
            if let Some(r) = (k + 2..n).find(|&r| a[r][k] != 0) {
                a.swap(k + 1, r);
                for row in a.iter_mut() {
                    row.swap(k + 1, r);
                }
            } else {
                continue;
            }
        }
        let inv = inv_p(a[k + 1][k], p);
        for i in (k + 2)..n {
            if a[i][k] == 0 {
                continue;
            }
            let f = mul_mod(a[i][k], inv, p);
            let neg_f = p - f;
            for j in k..n {
                let sub = mul_mod(neg_f, a[k + 1][j], p);
                a[i][j] = add_p(a[i][j], sub, p);
            }
            for row in a.iter_mut() {
                let add = mul_mod(f, row[i], p);
                row[k + 1] = add_p(row[k + 1], add, p);
            }
        }
    }
    // p_0 = 1; p_k = (x − h_kk) p_{k−1} − Σ_m h_{k−m,k} (∏ subdiagonals) p_{k−m−1}
    let mut polys: Vec<Vec<u64>> = vec![vec![1 % p]];
    for k in 1..=n {
        let prev = &polys[k - 1];
        let h = a[k - 1][k - 1];
        let mut pk = vec![0u64; k + 1];
        for (i, &c) in prev.iter().enumerate() {
            pk[i + 1] = add_p(pk[i + 1], c, p);
            pk[i] = sub_p(pk[i], mul_mod(h, c, p), p);
        }
        let mut beta = 1u64 % p;
        for i in (1..k).rev() {
            beta = mul_mod(beta, a[i][i - 1], p);
            if beta == 0 {
                break;
            }
            let coef = mul_mod(a[i - 1][k - 1], beta, p);
            if coef == 0 {
                continue;
            }
            let neg = p - coef;
            for (x, &c) in pk.iter_mut().zip(polys[i - 1].iter()) {
                *x = add_p(*x, mul_mod(neg, c, p), p);
            }
        }
        polys.push(pk);
    }
    polys.pop().unwrap()
}

/// Balanced CRT: combines residues into the representative of smallest
/// absolute value mod ∏ primes.
pub fn crt_balanced(residues: &[u64], primes: &[u64]) -> BigInt {
    let (value, modulus) = crt_raw(residues, primes);
    balance(value, &modulus)
}

pub fn crt_raw(residues: &[u64], primes: &[u64]) -> (BigInt, BigInt) {
    let mut value = BigInt::zero();
    let mut modulus = BigInt::one();
    for (&r, &p) in residues.iter().zip(primes) {
        let pi = BigInt::from(p);
        // value' ≡ value (mod modulus), value' ≡ r (mod p)
        let diff = (BigInt::from(r) - &value).mod_floor(&pi);
        let inv = mod_inverse(&modulus, &pi).expect("primes are distinct");
        let t = (diff * inv).mod_floor(&pi);
        value += &modulus * t;
        modulus *= pi;
    }
    (value, modulus)
}

pub fn balance(value: BigInt, modulus: &BigInt) -> BigInt {
    if &value * 2 > *modulus {
        value - modulus
    } else {
        value
    }
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

/// Wang rational reconstruction: the unique num/den with
/// |num|, den ≤ ⌊√(m/2)⌋ congruent to `x` mod `m`, if one exists.
pub fn rational_reconstruct(x: &BigInt, modulus: &BigInt) -> Option<BigRational> {
    let bound = (modulus / BigInt::from(2)).to_biguint()?.sqrt();
    let bound = BigInt::from(bound);
    let mut r0 = modulus.clone();
    let mut r1 = x.mod_floor(modulus);
    let mut s0 = BigInt::zero();
    let mut s1 = BigInt::one();
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let s2 = &s0 - &q * &s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if s1.is_zero() || s1.abs() > bound {
        return None;
    }
    let (num, den) = if s1.is_negative() {
        (-r1, -s1)
    } else {
        (r1, s1)
    };
    if num.gcd(&den) != BigInt::one() {
        return None;
    }
    Some(BigRational::new(num, den))
}

/// ⌈log2⌉ of a positive BigUint bound, used to size prime batches.
pub fn bits_of(bound: &BigUint) -> u64 {
    bound.bits()
}
