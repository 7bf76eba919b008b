//! Elementary arithmetic over 64-bit integers: factorization, divisor
//! enumeration, and the multiplicative functions Ω, ω, μ.
//!
//! Graph-scale work keys off the factorization type, so 64 bits of `n`
//! is all the construction side ever needs.

use crate::error::{Error, Result};
use serde::Serialize;

/// Prime factorization `n = p_1^{a_1} ⋯ p_d^{a_d}` with primes strictly
/// increasing and every exponent ≥ 1. Empty for `n = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pairs: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.pairs
    }

    /// Product of `prime^exponent`, i.e. the integer that was factored.
    pub fn value(&self) -> u64 {
        self.pairs
            .iter()
            .map(|&(p, a)| p.pow(a))
            .product::<u64>()
            .max(1)
    }
}

/// The sorted exponent multiset `(a_1 ≤ … ≤ a_d)` of an integer. Two
/// integers with the same type have isomorphic divisibility graphs, so
/// everything downstream is keyed on this. Empty represents `n = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct FactorizationType {
    exponents: Vec<u32>,
}

impl FactorizationType {
    /// Builds a type from exponents in any order; they are sorted
    /// nondecreasing. Zero exponents are rejected.
    pub fn new(mut exponents: Vec<u32>) -> Result<Self> {
        if exponents.contains(&0) {
            return Err(Error::InvalidInput(
                "factorization type parts must be positive".into(),
            ));
        }
        exponents.sort_unstable();
        Ok(Self { exponents })
    }

    pub fn empty() -> Self {
        Self {
            exponents: Vec::new(),
        }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// ω: number of distinct prime factors.
    pub fn num_parts(&self) -> usize {
        self.exponents.len()
    }

    /// Ω: number of prime factors with multiplicity.
    pub fn big_omega(&self) -> u64 {
        self.exponents.iter().map(|&a| u64::from(a)).sum()
    }

    /// μ of any integer with this type: 0 if some exponent exceeds 1,
    /// otherwise (−1)^ω.
    pub fn mobius(&self) -> i64 {
        if self.exponents.iter().any(|&a| a >= 2) {
            0
        } else if self.exponents.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.exponents.iter().all(|&a| a == 1)
    }

    /// Number of divisors ∏(a_i + 1), or `None` on u64 overflow.
    pub fn vertex_count(&self) -> Option<u64> {
        self.exponents
            .iter()
            .try_fold(1u64, |acc, &a| acc.checked_mul(u64::from(a) + 1))
    }

    /// The type of `n·p·q` for two fresh primes: two new parts equal 1.
    pub fn augment_two_primes(&self) -> Self {
        let mut exps = self.exponents.clone();
        exps.insert(0, 1);
        exps.insert(0, 1);
        Self { exponents: exps }
    }

    /// Smallest integer with this type: largest exponents on the
    /// smallest primes. `None` if it does not fit in 64 bits.
    pub fn smallest_instance(&self) -> Option<u64> {
        let mut n: u64 = 1;
        for (i, &a) in self.exponents.iter().rev().enumerate() {
            let p = nth_prime(i)?;
            for _ in 0..a {
                n = n.checked_mul(p)?;
            }
        }
        Some(n)
    }

    /// Squarefree type with ω parts.
    pub fn squarefree(omega: usize) -> Self {
        Self {
            exponents: vec![1; omega],
        }
    }
}

impl std::fmt::Display for FactorizationType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.exponents.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

fn nth_prime(i: usize) -> Option<u64> {
    let mut count = 0;
    let mut p = 2u64;
    loop {
        if is_prime(p) {
            if count == i {
                return Some(p);
            }
            count += 1;
        }
        p = p.checked_add(1)?;
    }
}

/// Deterministic Miller-Rabin, valid for the full u64 range.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Brent's cycle variant of Pollard's rho. `n` must be odd, composite,
/// and not a prime power of a small prime (callers strip those first).
fn pollard_brent(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut ys) = (2u64, 2u64);
        let (mut y, mut d) = (2u64, 1u64);
        let m = 128;
        let mut r = 1u64;
        let mut q = 1u64;
        while d == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && d == 1 {
                ys = y;
                for _ in 0..m.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                d = gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if d == n {
            // backtrack
            d = 1;
            while d == 1 {
                ys = f(ys);
                d = gcd(x.abs_diff(ys), n);
            }
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

/// Factors `n ≥ 1`. Trial division over a short prime wheel, then
/// Miller-Rabin + Brent rho for what remains; deterministic output.
pub fn factor(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::InvalidInput("factor(0) is undefined".into()));
    }
    let mut pairs: Vec<(u64, u32)> = Vec::new();
    let mut rest = n;
    for p in 2u64..=97 {
        if p * p > rest {
            break;
        }
        if rest % p == 0 {
            let mut a = 0;
            while rest % p == 0 {
                rest /= p;
                a += 1;
            }
            pairs.push((p, a));
        }
    }
    let mut stack = Vec::new();
    if rest > 1 {
        stack.push(rest);
    }
    while let Some(m) = stack.pop() {
        if is_prime(m) {
            match pairs.iter_mut().find(|(p, _)| *p == m) {
                Some((_, a)) => *a += 1,
                None => pairs.push((m, 1)),
            }
        } else {
            let d = pollard_brent(m);
            stack.push(d);
            stack.push(m / d);
        }
    }
    pairs.sort_unstable_by_key(|&(p, _)| p);
    Ok(Factorization { pairs })
}

/// The factorization type of `n`: exponents of `factor(n)` sorted
/// nondecreasing.
pub fn factorization_type(n: u64) -> Result<FactorizationType> {
    let f = factor(n)?;
    FactorizationType::new(f.pairs().iter().map(|&(_, a)| a).collect())
}

/// Ω(n): number of prime factors counted with multiplicity; Ω(1) = 0.
pub fn big_omega(n: u64) -> Result<u64> {
    Ok(factor(n)?.pairs().iter().map(|&(_, a)| u64::from(a)).sum())
}

/// ω(n): number of distinct prime factors.
pub fn small_omega(n: u64) -> Result<u64> {
    Ok(factor(n)?.pairs().len() as u64)
}

/// Möbius function: μ(1) = 1, 0 when n is not squarefree, (−1)^ω(n)
/// otherwise.
pub fn mobius(n: u64) -> Result<i64> {
    let f = factor(n)?;
    if f.pairs().iter().any(|&(_, a)| a >= 2) {
        return Ok(0);
    }
    Ok(if f.pairs().len() % 2 == 0 { 1 } else { -1 })
}

/// All divisors of `n`, ascending.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    let f = factor(n)?;
    let mut divs = vec![1u64];
    for &(p, a) in f.pairs() {
        let mut next = Vec::with_capacity(divs.len() * (a as usize + 1));
        for &d in &divs {
            let mut pk = 1u64;
            for _ in 0..=a {
                next.push(d * pk);
                if pk <= u64::MAX / p {
                    pk *= p;
                } else {
                    break;
                }
            }
        }
        divs = next;
    }
    divs.sort_unstable();
    Ok(divs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn factor_examples() {
        assert_eq!(factor(1).unwrap().pairs(), &[]);
        assert_eq!(factor(45).unwrap().pairs(), &[(3, 2), (5, 1)]);
        assert_eq!(factor(36).unwrap().pairs(), &[(2, 2), (3, 2)]);
        assert!(factor(0).is_err());
    }

    #[test]
    fn factorization_type_examples() {
        assert_eq!(factorization_type(45).unwrap().exponents(), &[1, 2]);
        assert_eq!(factorization_type(27).unwrap().exponents(), &[3]);
        assert_eq!(factorization_type(1).unwrap().exponents(), &[] as &[u32]);
    }

    #[test]
    fn multiplicative_function_examples() {
        assert_eq!(big_omega(36).unwrap(), 4);
        assert_eq!(mobius(30).unwrap(), -1);
        assert_eq!(divisors(6).unwrap(), vec![1, 2, 3, 6]);
        assert_eq!(big_omega(1).unwrap(), 0);
        assert_eq!(mobius(1).unwrap(), 1);
    }

    #[test]
    fn mobius_divisor_sums_vanish() {
        // Σ_{d|m} μ(d) = [m = 1] for every m ≤ 10^4.
        for m in 1u64..=10_000 {
            let total: i64 = divisors(m)
                .unwrap()
                .iter()
                .map(|&d| mobius(d).unwrap())
                .sum();
            assert_eq!(total, i64::from(m == 1), "failed at m = {m}");
        }
    }

    #[test]
    fn divisor_count_matches_type() {
        for n in 1u64..=10_000 {
            let t = factorization_type(n).unwrap();
            assert_eq!(
                divisors(n).unwrap().len() as u64,
                t.vertex_count().unwrap(),
                "failed at n = {n}"
            );
        }
    }

    #[test]
    fn type_invariant_under_prime_relabeling() {
        // Instantiate each small type with two different prime tuples and
        // re-derive the type.
        let primes_a = [2u64, 3, 5, 7];
        let primes_b = [101u64, 13, 29, 3];
        let mut types = Vec::new();
        for d in 0..=4usize {
            fn rec(d: usize, min: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
                if cur.len() == d {
                    out.push(cur.clone());
                    return;
                }
                for a in min..=3 {
                    cur.push(a);
                    rec(d, a, cur, out);
                    cur.pop();
                }
            }
            rec(d, 1, &mut Vec::new(), &mut types);
        }
        for exps in types {
            let t = FactorizationType::new(exps.clone()).unwrap();
            for primes in [primes_a, primes_b] {
                let n: u64 = exps
                    .iter()
                    .zip(primes.iter())
                    .map(|(&a, &p)| p.pow(a))
                    .product();
                assert_eq!(factorization_type(n).unwrap(), t);
            }
        }
    }

    #[test]
    fn smallest_instance_examples() {
        assert_eq!(
            FactorizationType::new(vec![1, 1])
                .unwrap()
                .smallest_instance(),
            Some(6)
        );
        assert_eq!(
            FactorizationType::new(vec![1, 2])
                .unwrap()
                .smallest_instance(),
            Some(12)
        );
        assert_eq!(FactorizationType::empty().smallest_instance(), Some(1));
    }

    #[test]
    fn is_prime_small() {
        let primes: Vec<u64> = (2..100).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            primes,
            vec![
                2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79,
                83, 89, 97
            ]
        );
        assert!(is_prime(2_147_483_647)); // 2^31 − 1
        assert!(!is_prime(2_147_483_647 * 2 + 1));
    }

    proptest! {
        #[test]
        fn factor_roundtrips(n in 1u64..=1_000_000_000_000u64) {
            let f = factor(n).unwrap();
            prop_assert_eq!(f.value(), n);
            for w in f.pairs().windows(2) {
                prop_assert!(w[0].0 < w[1].0);
            }
            for &(p, a) in f.pairs() {
                prop_assert!(is_prime(p));
                prop_assert!(a >= 1);
            }
        }

        #[test]
        fn augment_adds_two_unit_parts(exps in proptest::collection::vec(1u32..5, 0..4)) {
            let t = FactorizationType::new(exps).unwrap();
            let aug = t.augment_two_primes();
            prop_assert_eq!(aug.num_parts(), t.num_parts() + 2);
            prop_assert_eq!(aug.big_omega(), t.big_omega() + 2);
            prop_assert_eq!(aug.vertex_count(), t.vertex_count().map(|v| v * 4));
        }
    }
}
