//! Exact dense linear algebra over big integers, rationals, and prime
//! fields: characteristic polynomials, determinants, certified nullities,
//! and exact polynomial division.
//!
//! Two routes exist for the heavy objects. The division-free Berkowitz
//! charpoly and Bareiss determinant work entirely in the integers; the
//! modular route computes mod enough word-sized primes that a Hadamard
//! bound on the result makes the CRT lift unconditional. Both routes are
//! exact; tests pin them against each other on overlapping dimensions.

pub mod bareiss;
pub mod berkowitz;
pub mod modular;

use crate::adjacency::AdjMatrix;
use crate::error::{Error, Result};
use crate::guards;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

pub use berkowitz::charpoly_berkowitz;

const BERKOWITZ_CUTOVER: usize = 64;

/// Square integer matrix with word-sized entries. Inputs to this module
/// are adjacency-shaped (entries in a small range); everything that can
/// grow — determinants, charpoly coefficients, kernel vectors — is
/// produced in arbitrary precision.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            entries: vec![0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidInput("matrix must be square".into()));
        }
        Ok(Self {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_adjacency(adj: &AdjMatrix) -> Self {
        let n = adj.n();
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in adj.neighbors(i) {
                m.set(i, j, 1);
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.entries[i * self.n + j] = v;
    }

    /// self − λI.
    pub fn shifted(&self, lambda: i64) -> Self {
        let mut m = self.clone();
        for i in 0..self.n {
            let e = m.get(i, i) - lambda;
            m.set(i, i, e);
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                m.set(j, i, self.get(i, j));
            }
        }
        m
    }

    pub fn max_abs_entry(&self) -> u64 {
        self.entries
            .iter()
            .map(|e| e.unsigned_abs())
            .max()
            .unwrap_or(0)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Exact product; i128 accumulation, so callers keep entries small.
    pub fn matmul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.n != other.n {
            return Err(Error::InvalidInput("dimension mismatch".into()));
        }
        let mut out = IntMatrix::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                let mut acc: i128 = 0;
                for k in 0..self.n {
                    acc += i128::from(self.get(i, k)) * i128::from(other.get(k, j));
                }
                let v = i64::try_from(acc)
                    .map_err(|_| Error::InvalidInput("matmul overflow".into()))?;
                out.set(i, j, v);
            }
        }
        Ok(out)
    }

    pub fn mul_vec_i64(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.n);
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }

    fn to_bigint_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| BigInt::from(self.get(i, j))).collect())
            .collect()
    }

    fn to_mod_rows_u64(&self, p: u64) -> Vec<Vec<u64>> {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| modular::entry_mod_p(self.get(i, j), p))
                    .collect()
            })
            .collect()
    }
}

impl std::fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "IntMatrix({}×{})", self.n, self.n)?;
        if self.n <= 16 {
            for i in 0..self.n {
                let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
                writeln!(f, "  [{}]", row.join(" "))?;
            }
        }
        Ok(())
    }
}

/// Anything that can present itself row-by-row, both exactly and mod p.
/// Lets the nullity pipeline run on `M − λI` straight off a bit-packed
/// adjacency without materializing a dense integer matrix, and on
/// rectangular constraint systems.
pub trait MatrixSource: Sync {
    fn nrows(&self) -> usize;
    fn ncols(&self) -> usize;
    fn entry(&self, i: usize, j: usize) -> i64;

    fn write_row_mod_p(&self, i: usize, p: u64, out: &mut [u32]) {
        for (j, slot) in out.iter_mut().enumerate() {
            *slot = modular::entry_mod_p(self.entry(i, j), p) as u32;
        }
    }

    fn mul_bigint(&self, v: &[BigInt]) -> Vec<BigInt> {
        (0..self.nrows())
            .map(|i| {
                let mut acc = BigInt::zero();
                for (j, x) in v.iter().enumerate() {
                    let e = self.entry(i, j);
                    if e != 0 && !x.is_zero() {
                        acc += BigInt::from(e) * x;
                    }
                }
                acc
            })
            .collect()
    }

    fn bigint_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.nrows())
            .map(|i| {
                (0..self.ncols())
                    .map(|j| BigInt::from(self.entry(i, j)))
                    .collect()
            })
            .collect()
    }
}

impl MatrixSource for IntMatrix {
    fn nrows(&self) -> usize {
        self.n
    }

    fn ncols(&self) -> usize {
        self.n
    }

    fn entry(&self, i: usize, j: usize) -> i64 {
        self.get(i, j)
    }
}

/// `adjacency − λI`, evaluated lazily.
pub struct AdjShift<'a> {
    pub adj: &'a AdjMatrix,
    pub lambda: i64,
}

impl MatrixSource for AdjShift<'_> {
    fn nrows(&self) -> usize {
        self.adj.n()
    }

    fn ncols(&self) -> usize {
        self.adj.n()
    }

    fn entry(&self, i: usize, j: usize) -> i64 {
        let a = i64::from(self.adj.has_edge(i, j));
        if i == j {
            a - self.lambda
        } else {
            a
        }
    }

    fn write_row_mod_p(&self, i: usize, p: u64, out: &mut [u32]) {
        let row = self.adj.row(i);
        for (j, slot) in out.iter_mut().enumerate() {
            *slot = (row[j / 64] >> (j % 64) & 1) as u32;
        }
        out[i] = modular::entry_mod_p(i64::from(self.adj.has_edge(i, i)) - self.lambda, p) as u32;
    }

    fn mul_bigint(&self, v: &[BigInt]) -> Vec<BigInt> {
        let mut out = self.adj.mul_bigint(v);
        if self.lambda != 0 {
            for (o, x) in out.iter_mut().zip(v) {
                *o -= BigInt::from(self.lambda) * x;
            }
        }
        out
    }
}

/// Dense integer polynomial, coefficients constant-term first. The zero
/// polynomial is the single coefficient 0; otherwise the top coefficient
/// is nonzero. Characteristic polynomials here are monic with the
/// det(λI − M) sign convention.
#[derive(Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self {
            coeffs: vec![BigInt::zero()],
        }
    }

    pub fn one() -> Self {
        Self {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().unwrap()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(out)
    }

    pub fn square(&self) -> IntPolynomial {
        self.mul(self)
    }

    /// Quotient and remainder dividing by (λ − root).
    pub fn synthetic_div(&self, root: &BigInt) -> (IntPolynomial, BigInt) {
        let n = self.coeffs.len();
        if n == 1 {
            return (IntPolynomial::zero(), self.coeffs[0].clone());
        }
        let mut q = vec![BigInt::zero(); n - 1];
        let mut carry = BigInt::zero();
        for i in (0..n).rev() {
            let value = &self.coeffs[i] + &carry * root;
            if i == 0 {
                return (IntPolynomial::from_coeffs(q), value);
            }
            q[i - 1] = value.clone();
            carry = value;
        }
        unreachable!()
    }

    /// Long division by a monic divisor; stays in the integers.
    fn div_rem_monic(&self, d: &IntPolynomial) -> (IntPolynomial, IntPolynomial) {
        debug_assert!(d.is_monic());
        if self.degree() < d.degree() && !self.is_zero() {
            return (IntPolynomial::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let dd = d.degree();
        let mut q = vec![BigInt::zero(); self.degree() - dd + 1];
        for i in (0..q.len()).rev() {
            let c = rem[i + dd].clone();
            if c.is_zero() {
                continue;
            }
            q[i] = c.clone();
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
        }
        (
            IntPolynomial::from_coeffs(q),
            IntPolynomial::from_coeffs(rem),
        )
    }

    /// Serialization shape used everywhere: decimal strings, constant
    /// term first.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    pub fn to_i64_coeffs(&self) -> Vec<i64> {
        self.coeffs
            .iter()
            .map(|c| c.to_i64().expect("coefficient fits i64"))
            .collect()
    }
}

impl std::fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if i == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}·")?;
                }
                if i == 1 {
                    write!(f, "λ")?;
                } else {
                    write!(f, "λ^{i}")?;
                }
            }
        }
        Ok(())
    }
}

impl std::fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

/// Monic characteristic polynomial det(λI − M). Division-free Berkowitz
/// below the cutover dimension; above it, Hessenberg charpolys mod a
/// prime batch sized by a Hadamard coefficient bound, recombined by CRT.
/// The bound makes the modular result exact, not heuristic.
pub fn charpoly(m: &IntMatrix) -> Result<IntPolynomial> {
    guards::check_dim("charpoly", m.dim(), guards::CHARPOLY_MAX_DIM)?;
    if m.dim() <= BERKOWITZ_CUTOVER {
        Ok(charpoly_berkowitz(m))
    } else {
        Ok(charpoly_crt(m))
    }
}

/// Modular-CRT charpoly; exposed so tests can pin it against Berkowitz.
pub fn charpoly_crt(m: &IntMatrix) -> IntPolynomial {
    let n = m.dim();
    if n == 0 {
        return IntPolynomial::one();
    }
    let beta = m.max_abs_entry().max(1);
    let bound = charpoly_coeff_bound(n, beta);
    let primes = modular::descending_primes(prime_count_for(&bound));
    let per_prime: Vec<Vec<u64>> = primes
        .par_iter()
        .map(|&p| modular::charpoly_mod_p(m.to_mod_rows_u64(p), p))
        .collect();
    let coeffs: Vec<BigInt> = (0..=n)
        .into_par_iter()
        .map(|i| {
            let residues: Vec<u64> = per_prime.iter().map(|cp| cp[i]).collect();
            modular::crt_balanced(&residues, &primes)
        })
        .collect();
    IntPolynomial::from_coeffs(coeffs)
}

/// max_k C(n,k) · β^k · k^{⌈k/2⌉}: every charpoly coefficient is a signed
/// sum of C(n,k) principal k×k minors, each Hadamard-bounded.
fn charpoly_coeff_bound(n: usize, beta: u64) -> BigUint {
    let mut best = BigUint::one();
    let mut binom = BigUint::one();
    for k in 1..=n {
        binom = binom * BigUint::from(n - k + 1) / BigUint::from(k);
        let minor = BigUint::from(beta).pow(k as u32) * BigUint::from(k).pow(k.div_ceil(2) as u32);
        let b = &binom * minor;
        if b > best {
            best = b;
        }
    }
    best
}

fn prime_count_for(bound: &BigUint) -> usize {
    // primes exceed 2^30, so `count` primes give ≥ 30·count bits;
    // require product > 2·bound.
    let bits = modular::bits_of(bound) + 2;
    (bits as usize).div_ceil(30) + 1
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &IntMatrix) -> Result<BigInt> {
    guards::check_dim("determinant", m.dim(), guards::DET_MAX_DIM)?;
    Ok(bareiss::determinant(m.to_bigint_rows()))
}

/// Exact determinant via modular residues and a Hadamard bound; useful
/// past the comfortable range of Bareiss on dense big integers.
pub fn determinant_crt(m: &IntMatrix) -> BigInt {
    let n = m.dim();
    if n == 0 {
        return BigInt::one();
    }
    let beta = m.max_abs_entry().max(1);
    let bound = BigUint::from(beta).pow(n as u32) * BigUint::from(n).pow(n.div_ceil(2) as u32);
    let primes = modular::descending_primes(prime_count_for(&bound));
    let residues: Vec<u64> = primes
        .par_iter()
        .map(|&p| modular::det_mod_p(m.to_mod_rows_u64(p), p))
        .collect();
    modular::crt_balanced(&residues, &primes)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NullityMode {
    RationalExact,
    /// Two agreeing random primes plus an exactly verified lifted kernel
    /// basis; the seed makes the prime draw reproducible.
    Modular {
        seed: u64,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct NullityCertificate {
    pub nullity: usize,
    pub method: &'static str,
    pub primes: Vec<u64>,
    pub seed: Option<u64>,
    pub basis_verified: bool,
    /// Primitive integer kernel vectors, each satisfying M·v = 0 exactly.
    #[serde(skip)]
    pub kernel_basis: Vec<Vec<BigInt>>,
}

/// Certified kernel dimension of a square integer matrix.
pub fn nullity(m: &IntMatrix, mode: NullityMode) -> Result<NullityCertificate> {
    nullity_of(m, mode)
}

/// Same, over any [`MatrixSource`] (in particular `M − λI` views of
/// bit-packed adjacencies).
pub fn nullity_of<S: MatrixSource>(source: &S, mode: NullityMode) -> Result<NullityCertificate> {
    match mode {
        NullityMode::RationalExact => rational_nullity(source),
        NullityMode::Modular { seed } => modular_nullity(source, seed),
    }
}

fn rational_nullity<S: MatrixSource>(source: &S) -> Result<NullityCertificate> {
    let n = source.ncols();
    guards::check_dim(
        "nullity (rational-exact)",
        n.max(source.nrows()),
        guards::RATIONAL_NULLITY_MAX_DIM,
    )?;
    let ech = bareiss::echelon(source.bigint_rows(), n);
    let kernel = bareiss::kernel_from_echelon(&ech);
    let mut basis = Vec::with_capacity(kernel.len());
    for v in &kernel {
        let w = bareiss::clear_denominators(v);
        verify_kernel_vector(source, &w)?;
        basis.push(w);
    }
    Ok(NullityCertificate {
        nullity: n - ech.rank(),
        method: "rational-exact",
        primes: Vec::new(),
        seed: None,
        basis_verified: true,
        kernel_basis: basis,
    })
}

fn mod_rows_of<S: MatrixSource>(source: &S, p: u64) -> Vec<Vec<u32>> {
    let ncols = source.ncols();
    (0..source.nrows())
        .into_par_iter()
        .map(|i| {
            let mut row = vec![0u32; ncols];
            source.write_row_mod_p(i, p, &mut row);
            row
        })
        .collect()
}

fn modular_nullity<S: MatrixSource>(source: &S, seed: u64) -> Result<NullityCertificate> {
    let n = source.ncols();
    guards::check_dim(
        "nullity (modular)",
        n.max(source.nrows()),
        guards::MODULAR_NULLITY_MAX_DIM,
    )?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    for _attempt in 0..4 {
        let p1 = modular::random_prime(&mut rng, &[]);
        let p2 = modular::random_prime(&mut rng, &[p1]);
        let (r1, r2) = rayon::join(
            || modular::rref_mod_p(mod_rows_of(source, p1), n, p1),
            || modular::rref_mod_p(mod_rows_of(source, p2), n, p2),
        );
        if r1.rank() != r2.rank() || r1.pivots != r2.pivots {
            continue;
        }
        let nullity = n - r1.rank();
        let mut primes = vec![p1, p2];
        let mut rrefs = vec![r1, r2];
        if nullity == 0 {
            // rank mod p never exceeds the rational rank, so full modular
            // rank certifies full rational rank outright.
            return Ok(NullityCertificate {
                nullity: 0,
                method: "modular-agreement",
                primes,
                seed: Some(seed),
                basis_verified: true,
                kernel_basis: Vec::new(),
            });
        }
        'widen: loop {
            match reconstruct_kernel(source, &primes, &rrefs) {
                Some(basis) => {
                    return Ok(NullityCertificate {
                        nullity,
                        method: "modular-agreement",
                        primes,
                        seed: Some(seed),
                        basis_verified: true,
                        kernel_basis: basis,
                    });
                }
                None => {
                    if primes.len() >= 8 {
                        break 'widen;
                    }
                    // entries too large for the current modulus: widen it
                    let mut added = 0;
                    let mut draws = 0;
                    while added < 2 {
                        draws += 1;
                        if draws > 16 {
                            break 'widen;
                        }
                        let p = modular::random_prime(&mut rng, &primes);
                        let r = modular::rref_mod_p(mod_rows_of(source, p), n, p);
                        match r.rank().cmp(&rrefs[0].rank()) {
                            std::cmp::Ordering::Equal if r.pivots == rrefs[0].pivots => {
                                primes.push(p);
                                rrefs.push(r);
                                added += 1;
                            }
                            std::cmp::Ordering::Greater => {
                                // both original primes were unlucky; start over
                                break 'widen;
                            }
                            _ => {} // unlucky new prime, redraw
                        }
                    }
                }
            }
        }
    }

    // escalate per the certificate contract
    if n <= guards::RATIONAL_NULLITY_MAX_DIM {
        rational_nullity(source)
    } else {
        Err(Error::VerificationFailed(
            "modular nullity: primes kept disagreeing and the matrix is too large for the rational-exact fallback".into(),
        ))
    }
}

fn reconstruct_kernel<S: MatrixSource>(
    source: &S,
    primes: &[u64],
    rrefs: &[modular::RrefModP],
) -> Option<Vec<Vec<BigInt>>> {
    let bases: Vec<Vec<Vec<u32>>> = rrefs.iter().map(|r| r.kernel_basis()).collect();
    let count = bases[0].len();
    let n = source.ncols();
    let mut out = Vec::with_capacity(count);
    for v_idx in 0..count {
        let mut rational = Vec::with_capacity(n);
        for j in 0..n {
            let residues: Vec<u64> = bases.iter().map(|b| b[v_idx][j] as u64).collect();
            let (value, modulus) = modular::crt_raw(&residues, primes);
            rational.push(modular::rational_reconstruct(&value, &modulus)?);
        }
        let w = bareiss::clear_denominators(&rational);
        if verify_kernel_vector(source, &w).is_err() {
            return None;
        }
        out.push(w);
    }
    // independence is structural: vector i carries the only nonzero among
    // the free coordinates of the basis; confirm that survived the lift.
    let free_cols: Vec<usize> = {
        let mut is_pivot = vec![false; n];
        for &c in &rrefs[0].pivots {
            is_pivot[c] = true;
        }
        (0..n).filter(|&c| !is_pivot[c]).collect()
    };
    for (i, w) in out.iter().enumerate() {
        for (k, &c) in free_cols.iter().enumerate() {
            if (k == i) == w[c].is_zero() {
                return None;
            }
        }
    }
    Some(out)
}

fn verify_kernel_vector<S: MatrixSource>(source: &S, w: &[BigInt]) -> Result<()> {
    let product = source.mul_bigint(w);
    if product.iter().all(Zero::is_zero) {
        Ok(())
    } else {
        Err(Error::VerificationFailed(
            "claimed kernel vector has nonzero residual".into(),
        ))
    }
}

/// Does `f` divide `g` exactly? Returns the quotient on success. Divisors
/// in this crate are monic characteristic polynomials, so division stays
/// over the integers; non-monic divisors are handled through a rational
/// division with an integrality check.
pub fn poly_divides(f: &IntPolynomial, g: &IntPolynomial) -> Result<Option<IntPolynomial>> {
    if f.is_zero() {
        return Err(Error::InvalidInput(
            "division by the zero polynomial".into(),
        ));
    }
    if g.is_zero() {
        return Ok(Some(IntPolynomial::zero()));
    }
    if g.degree() < f.degree() {
        return Ok(None);
    }
    if f.is_monic() {
        let (q, r) = g.div_rem_monic(f);
        return Ok(if r.is_zero() { Some(q) } else { None });
    }
    // rational long division
    let mut rem: Vec<BigRational> = g
        .coeffs
        .iter()
        .map(|c| BigRational::from(c.clone()))
        .collect();
    let dd = f.degree();
    let lead = BigRational::from(f.leading().clone());
    let mut q = vec![BigRational::zero(); g.degree() - dd + 1];
    for i in (0..q.len()).rev() {
        let c = &rem[i + dd] / &lead;
        if c.is_zero() {
            continue;
        }
        q[i] = c.clone();
        for (j, dc) in f.coeffs.iter().enumerate() {
            let sub = &c * BigRational::from(dc.clone());
            rem[i + j] -= sub;
        }
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return Ok(None);
    }
    if q.iter().any(|c| !c.is_integer()) {
        return Ok(None);
    }
    Ok(Some(IntPolynomial::from_coeffs(
        q.into_iter().map(|c| c.to_integer()).collect(),
    )))
}

/// Largest k with (λ − λ0)^k dividing f, by repeated synthetic division.
pub fn eval_multiplicity(f: &IntPolynomial, lambda0: i64) -> Result<usize> {
    if f.is_zero() {
        return Err(Error::InvalidInput(
            "root multiplicity of the zero polynomial".into(),
        ));
    }
    let root = BigInt::from(lambda0);
    let mut k = 0;
    let mut cur = f.clone();
    loop {
        let (q, r) = cur.synthetic_div(&root);
        if !r.is_zero() {
            return Ok(k);
        }
        k += 1;
        if q.is_zero() {
            return Ok(k);
        }
        cur = q;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn adj_pq() -> AdjMatrix {
        // D_{pq} on vertices 1, p, q, pq
        let mut a = AdjMatrix::zeros(4);
        a.set_edge(0, 1);
        a.set_edge(0, 2);
        a.set_edge(0, 3);
        a.set_edge(1, 3);
        a.set_edge(2, 3);
        a
    }

    #[test]
    fn charpoly_examples() {
        let k2 = IntMatrix::from_adjacency(&AdjMatrix::complete(2));
        assert_eq!(charpoly(&k2).unwrap().to_i64_coeffs(), vec![-1, 0, 1]);
        let k3 = IntMatrix::from_adjacency(&AdjMatrix::complete(3));
        assert_eq!(charpoly(&k3).unwrap().to_i64_coeffs(), vec![-2, -3, 0, 1]);
        let dpq = IntMatrix::from_adjacency(&adj_pq());
        assert_eq!(
            charpoly(&dpq).unwrap().to_i64_coeffs(),
            vec![0, -4, -5, 0, 1]
        );
    }

    #[test]
    fn charpoly_crt_matches_berkowitz() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for n in [1usize, 2, 5, 9, 17] {
            let mut m = IntMatrix::zeros(n);
            for i in 0..n {
                for j in 0..=i {
                    let e = rng.gen_range(-2i64..=2);
                    m.set(i, j, e);
                    m.set(j, i, e);
                }
            }
            assert_eq!(charpoly_crt(&m), charpoly_berkowitz(&m), "n = {n}");
        }
    }

    #[test]
    fn charpoly_agrees_with_point_determinants() {
        // independent route: evaluate det(xI − M) by Bareiss at integers
        let m = IntMatrix::from_adjacency(&adj_pq());
        let cp = charpoly(&m).unwrap();
        for x in -3i64..=3 {
            let shifted = m.shifted(x); // M − xI
            let det = determinant(&shifted).unwrap();
            // det(xI − M) = (−1)^n det(M − xI)
            let expect = if m.dim() % 2 == 0 { det } else { -det };
            assert_eq!(cp.eval(&BigInt::from(x)), expect, "x = {x}");
        }
    }

    #[test]
    fn determinant_examples() {
        let k2 = IntMatrix::from_adjacency(&AdjMatrix::complete(2));
        assert_eq!(determinant(&k2).unwrap(), BigInt::from(-1));
        let dpq = IntMatrix::from_adjacency(&adj_pq());
        assert_eq!(determinant(&dpq).unwrap(), BigInt::zero());
        assert_eq!(determinant(&IntMatrix::identity(3)).unwrap(), BigInt::one());
        assert_eq!(determinant_crt(&IntMatrix::identity(3)), BigInt::one());
    }

    #[test]
    fn nullity_examples() {
        let zero3 = IntMatrix::zeros(3);
        let c = nullity(&zero3, NullityMode::RationalExact).unwrap();
        assert_eq!(c.nullity, 3);
        assert!(c.basis_verified);

        let dpq = IntMatrix::from_adjacency(&adj_pq());
        for mode in [NullityMode::RationalExact, NullityMode::Modular { seed: 1 }] {
            let c = nullity(&dpq, mode).unwrap();
            assert_eq!(c.nullity, 1, "mode {mode:?}");
        }

        // K3 + I is the all-ones matrix: eigenvalue −1 of K3 has multiplicity 2
        let k3 = IntMatrix::from_adjacency(&AdjMatrix::complete(3));
        let shifted = k3.shifted(-1);
        let c = nullity(&shifted, NullityMode::RationalExact).unwrap();
        assert_eq!(c.nullity, 2);
        assert_eq!(c.kernel_basis.len(), 2);
    }

    #[test]
    fn modular_nullity_agrees_with_rational_and_seeds() {
        let dpq = IntMatrix::from_adjacency(&adj_pq());
        for lambda in [-2i64, -1, 0, 1, 2] {
            let m = dpq.shifted(lambda);
            let exact = nullity(&m, NullityMode::RationalExact).unwrap().nullity;
            for seed in [1u64, 99, 7777] {
                let c = nullity(&m, NullityMode::Modular { seed }).unwrap();
                assert_eq!(c.nullity, exact, "λ = {lambda}, seed = {seed}");
                assert!(c.basis_verified);
                assert!(c.primes.len() >= 2);
            }
        }
    }

    #[test]
    fn poly_division_examples() {
        let f = IntPolynomial::from_i64(&[0, 1]); // λ
        let g = IntPolynomial::from_i64(&[0, -4, -5, 0, 1]); // λ⁴−5λ²−4λ
        let q = poly_divides(&f, &g).unwrap().unwrap();
        assert_eq!(q.to_i64_coeffs(), vec![-4, -5, 0, 1]); // λ³−5λ−4

        let f2 = IntPolynomial::from_i64(&[-1, 0, 1]); // λ²−1
        let g2 = IntPolynomial::from_i64(&[-2, -3, 0, 1]); // λ³−3λ−2
        assert!(poly_divides(&f2, &g2).unwrap().is_none());

        let self_q = poly_divides(&g, &g).unwrap().unwrap();
        assert_eq!(self_q.to_i64_coeffs(), vec![1]);

        assert!(poly_divides(&IntPolynomial::zero(), &g).is_err());
    }

    #[test]
    fn eval_multiplicity_examples() {
        let k3 = IntPolynomial::from_i64(&[-2, -3, 0, 1]);
        assert_eq!(eval_multiplicity(&k3, -1).unwrap(), 2);
        let dpq = IntPolynomial::from_i64(&[0, -4, -5, 0, 1]);
        assert_eq!(eval_multiplicity(&dpq, 0).unwrap(), 1);
        assert_eq!(eval_multiplicity(&dpq, 2).unwrap(), 0);
        assert!(eval_multiplicity(&IntPolynomial::zero(), 0).is_err());
    }

    #[test]
    fn complete_graph_charpoly_family() {
        // charpoly(K_{r+1}) = (λ − r)(λ + 1)^r
        for r in 0..=12usize {
            let m = IntMatrix::from_adjacency(&AdjMatrix::complete(r + 1));
            let cp = charpoly(&m).unwrap();
            let mut expect = IntPolynomial::from_i64(&[-(r as i64), 1]);
            let lam_plus_1 = IntPolynomial::from_i64(&[1, 1]);
            for _ in 0..r {
                expect = expect.mul(&lam_plus_1);
            }
            assert_eq!(cp, expect, "r = {r}");
        }
    }

    #[test]
    fn display_formatting() {
        let p = IntPolynomial::from_i64(&[0, -4, -5, 0, 1]);
        assert_eq!(p.to_string(), "λ^4 - 5·λ^2 - 4·λ");
        assert_eq!(p.to_decimal_strings(), vec!["0", "-4", "-5", "0", "1"]);
    }

    #[test]
    fn guards_refuse_oversized() {
        let m = IntMatrix::zeros(321);
        assert!(matches!(charpoly(&m), Err(Error::GuardExceeded { .. })));
    }
}
