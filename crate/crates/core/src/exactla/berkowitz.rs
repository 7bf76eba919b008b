//! Division-free characteristic polynomial (Samuelson-Berkowitz). All
//! arithmetic stays in the integers; cost is O(n^4) big-integer products,
//! so callers keep this to modest dimensions and cross-check the modular
//! path against it.

use super::{IntMatrix, IntPolynomial};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Monic det(λI − M), coefficients constant-first.
pub fn charpoly_berkowitz(m: &IntMatrix) -> IntPolynomial {
    let n = m.dim();
    // leading-coefficient-first working vector
    let mut poly: Vec<BigInt> = vec![BigInt::one()];
    for k in 0..n {
        // principal (k+1)×(k+1) block: corner a, row r, column s
        let a = BigInt::from(m.get(k, k));
        let mut q: Vec<BigInt> = Vec::with_capacity(k + 2);
        q.push(BigInt::one());
        q.push(-a);
        if k > 0 {
            let mut s: Vec<BigInt> = (0..k).map(|i| BigInt::from(m.get(i, k))).collect();
            for j in 0..k {
                // q_{j+2} = −(row · M^j · col)
                let dot: BigInt = (0..k).map(|t| BigInt::from(m.get(k, t)) * &s[t]).sum();
                q.push(-dot);
                if j + 1 < k {
                    s = (0..k)
                        .map(|row| (0..k).map(|t| BigInt::from(m.get(row, t)) * &s[t]).sum())
                        .collect();
                }
            }
        }
        // poly ← conv(q, poly) truncated to k + 2 terms
        let mut next = vec![BigInt::zero(); k + 2];
        for (i, qi) in q.iter().enumerate() {
            if qi.is_zero() {
                continue;
            }
            for (j, pj) in poly.iter().enumerate() {
                if i + j < k + 2 {
                    next[i + j] += qi * pj;
                }
            }
        }
        poly = next;
    }
    poly.reverse();
    IntPolynomial::from_coeffs(poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charpoly_k2_k3() {
        let k2 = IntMatrix::from_rows(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(charpoly_berkowitz(&k2).to_i64_coeffs(), vec![-1, 0, 1]);
        let k3 = IntMatrix::from_rows(vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]).unwrap();
        assert_eq!(charpoly_berkowitz(&k3).to_i64_coeffs(), vec![-2, -3, 0, 1]);
    }

    #[test]
    fn charpoly_general_2x2() {
        let m = IntMatrix::from_rows(vec![vec![3, -1], vec![2, 5]]).unwrap();
        // (λ−3)(λ−5) + 2 = λ² − 8λ + 17
        assert_eq!(charpoly_berkowitz(&m).to_i64_coeffs(), vec![17, -8, 1]);
    }

    #[test]
    fn charpoly_empty_and_single() {
        let empty = IntMatrix::from_rows(Vec::new()).unwrap();
        assert_eq!(charpoly_berkowitz(&empty).to_i64_coeffs(), vec![1]);
        let single = IntMatrix::from_rows(vec![vec![7]]).unwrap();
        assert_eq!(charpoly_berkowitz(&single).to_i64_coeffs(), vec![-7, 1]);
    }
}
