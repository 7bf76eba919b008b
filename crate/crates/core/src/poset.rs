//! Finite partially ordered sets, their comparability graphs, cartesian
//! products, and the tensor eigenvector lift. Divisor graphs are the
//! special case where the poset is a box of exponent vectors, but the
//! lift works for any finite poset.

use crate::adjacency::AdjMatrix;
use crate::arith::FactorizationType;
use crate::error::{Error, Result};
use crate::exactla::{self, charpoly, nullity_of, AdjShift, IntPolynomial, NullityMode};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;

/// Finite poset stored as its strict-less relation; comparability is the
/// symmetric closure. Construction checks irreflexivity, antisymmetry,
/// and transitivity.
#[derive(Clone, PartialEq, Eq)]
pub struct FinitePoset {
    size: usize,
    lt: Vec<bool>,
}

impl FinitePoset {
    pub fn new(size: usize, lt: Vec<bool>) -> Result<Self> {
        if lt.len() != size * size {
            return Err(Error::InvalidInput("relation matrix has wrong size".into()));
        }
        let p = Self { size, lt };
        for a in 0..size {
            if p.lt(a, a) {
                return Err(Error::InvalidInput(format!("not irreflexive at {a}")));
            }
            for b in 0..size {
                if p.lt(a, b) && p.lt(b, a) {
                    return Err(Error::InvalidInput(format!(
                        "not antisymmetric at ({a},{b})"
                    )));
                }
                for c in 0..size {
                    if p.lt(a, b) && p.lt(b, c) && !p.lt(a, c) {
                        return Err(Error::InvalidInput(format!(
                            "not transitive at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        Ok(p)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.lt[a * self.size + b]
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.lt(a, b) || self.lt(b, a)
    }

    /// Total order on k elements (0 < 1 < … < k−1).
    pub fn chain(k: usize) -> Self {
        let mut lt = vec![false; k * k];
        for a in 0..k {
            for b in (a + 1)..k {
                lt[a * k + b] = true;
            }
        }
        Self { size: k, lt }
    }

    /// k pairwise incomparable elements.
    pub fn antichain(k: usize) -> Self {
        Self {
            size: k,
            lt: vec![false; k * k],
        }
    }

    /// The four-element box {0,1}², ordered componentwise. Element (α1, α2)
    /// sits at index α1 + 2·α2.
    pub fn s0() -> Self {
        Self::chain(2).product(&Self::chain(2))
    }

    /// Exponent-vector poset of a factorization type, elements in the
    /// canonical mixed-radix order (coordinate 1 fastest).
    pub fn divisor_poset(t: &FactorizationType) -> Result<Self> {
        let radices: Vec<usize> = t.exponents().iter().map(|&a| a as usize + 1).collect();
        let size = radices
            .iter()
            .try_fold(1usize, |acc, &r| acc.checked_mul(r));
        let Some(size) = size.filter(|&s| s <= (1 << 20)) else {
            return Err(Error::GuardExceeded {
                what: "divisor_poset",
                requested: u64::MAX,
                limit: 1 << 20,
            });
        };
        let decode = |mut idx: usize| -> Vec<usize> {
            radices
                .iter()
                .map(|&r| {
                    let d = idx % r;
                    idx /= r;
                    d
                })
                .collect()
        };
        let mut lt = vec![false; size * size];
        for a in 0..size {
            let va = decode(a);
            for b in 0..size {
                if a == b {
                    continue;
                }
                let vb = decode(b);
                lt[a * size + b] = va.iter().zip(&vb).all(|(x, y)| x <= y);
            }
        }
        Ok(Self { size, lt })
    }

    /// Cartesian product with componentwise order. Element (i, j) of
    /// P × Q sits at index i + |P|·j — the P coordinate runs fastest,
    /// matching the canonical divisor-graph vertex order.
    pub fn product(&self, other: &FinitePoset) -> FinitePoset {
        let size = self.size * other.size;
        let mut lt = vec![false; size * size];
        for i1 in 0..self.size {
            for j1 in 0..other.size {
                let a = i1 + self.size * j1;
                for i2 in 0..self.size {
                    for j2 in 0..other.size {
                        let b = i2 + self.size * j2;
                        if a == b {
                            continue;
                        }
                        let le_p = i1 == i2 || self.lt(i1, i2);
                        let le_q = j1 == j2 || other.lt(j1, j2);
                        lt[a * size + b] = le_p && le_q;
                    }
                }
            }
        }
        FinitePoset { size, lt }
    }

    /// Symmetric 0/1 matrix joining strictly comparable pairs.
    pub fn comparability_graph(&self) -> AdjMatrix {
        let mut adj = AdjMatrix::zeros(self.size);
        for a in 0..self.size {
            for b in (a + 1)..self.size {
                if self.comparable(a, b) {
                    adj.set_edge(a, b);
                }
            }
        }
        adj
    }

    /// Random poset: random strict order on a shuffled carrier, then the
    /// transitive closure. Deterministic for a fixed RNG state.
    pub fn random(size: usize, rng: &mut impl Rng) -> FinitePoset {
        let mut perm: Vec<usize> = (0..size).collect();
        for i in (1..size).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let mut lt = vec![false; size * size];
        for i in 0..size {
            for j in (i + 1)..size {
                if rng.gen_bool(0.4) {
                    lt[perm[i] * size + perm[j]] = true;
                }
            }
        }
        // transitive closure
        for k in 0..size {
            for a in 0..size {
                if lt[a * size + k] {
                    for b in 0..size {
                        if lt[k * size + b] {
                            lt[a * size + b] = true;
                        }
                    }
                }
            }
        }
        FinitePoset { size, lt }
    }
}

impl std::fmt::Debug for FinitePoset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FinitePoset(size {}, ", self.size)?;
        let pairs: Vec<String> = (0..self.size)
            .flat_map(|a| {
                (0..self.size)
                    .filter(move |&b| self.lt(a, b))
                    .map(move |b| format!("{a}<{b}"))
            })
            .collect();
        write!(f, "{})", pairs.join(" "))
    }
}

/// Exact rational values attached to poset elements — eigenvector
/// candidates, kernel vectors, lifts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexFunction {
    values: Vec<BigRational>,
}

impl VertexFunction {
    pub fn new(values: Vec<BigRational>) -> Self {
        Self { values }
    }

    pub fn from_i64(values: &[i64]) -> Self {
        Self {
            values: values
                .iter()
                .map(|&v| BigRational::from(BigInt::from(v)))
                .collect(),
        }
    }

    pub fn from_bigints(values: &[BigInt]) -> Self {
        Self {
            values: values.iter().cloned().map(BigRational::from).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }
}

/// The distinguished 0-eigenvector of the box {0,1}²: zero at bottom and
/// top, +1 at (0,1), −1 at (1,0). Its strictly-below and strictly-above
/// sums vanish at every element, which is what makes the lift work.
pub fn h_vector() -> VertexFunction {
    VertexFunction::from_i64(&[0, -1, 1, 0])
}

/// Tensor product: value at (s, γ) = g(s)·h(γ), laid out with the first
/// factor fastest to match [`FinitePoset::product`].
pub fn tensor_lift(g: &VertexFunction, h: &VertexFunction) -> VertexFunction {
    let mut values = Vec::with_capacity(g.len() * h.len());
    for hv in h.values() {
        for gv in g.values() {
            values.push(gv * hv);
        }
    }
    VertexFunction::new(values)
}

/// Applies an adjacency matrix to a vertex function. Errors on length
/// mismatch.
pub fn apply_adjacency(adj: &AdjMatrix, f: &VertexFunction) -> Result<VertexFunction> {
    if adj.n() != f.len() {
        return Err(Error::InvalidInput(format!(
            "vertex function has length {}, graph has {} vertices",
            f.len(),
            adj.n()
        )));
    }
    Ok(VertexFunction::new(adj.mul_rational(f.values())))
}

/// Is M·f = λ·f exactly?
pub fn is_eigenvector(adj: &AdjMatrix, f: &VertexFunction, lambda: i64) -> Result<bool> {
    let image = apply_adjacency(adj, f)?;
    let lam = BigRational::from(BigInt::from(lambda));
    Ok(image
        .values()
        .iter()
        .zip(f.values())
        .all(|(got, v)| *got == &lam * v))
}

#[derive(Debug, Clone)]
pub struct PosetLiftReport {
    pub poset_size: usize,
    pub f_poset: IntPolynomial,
    pub f_product: IntPolynomial,
    pub quotient: IntPolynomial,
}

/// Computes the characteristic polynomials of D_P and D_{P×S0} and
/// certifies the exact divisibility f_P | f_{P×S0}, returning the
/// quotient. A failure would falsify the lift theorem, so it surfaces as
/// a hard error rather than a report field.
pub fn verify_poset_lift(p: &FinitePoset, max_size: usize) -> Result<PosetLiftReport> {
    if p.size() > max_size {
        return Err(Error::GuardExceeded {
            what: "verify_poset_lift",
            requested: p.size() as u64,
            limit: max_size as u64,
        });
    }
    let f_poset = charpoly(&exactla::IntMatrix::from_adjacency(
        &p.comparability_graph(),
    ))?;
    let product = p.product(&FinitePoset::s0());
    let f_product = charpoly(&exactla::IntMatrix::from_adjacency(
        &product.comparability_graph(),
    ))?;
    match exactla::poly_divides(&f_poset, &f_product)? {
        Some(quotient) => Ok(PosetLiftReport {
            poset_size: p.size(),
            f_poset,
            f_product,
            quotient,
        }),
        None => Err(Error::VerificationFailed(format!(
            "f_P does not divide f_(P×S0) for {p:?}"
        ))),
    }
}

/// Integer roots of a monic integer polynomial within [−bound, bound].
pub fn integer_roots(f: &IntPolynomial, bound: i64) -> Vec<i64> {
    (-bound..=bound)
        .filter(|&x| f.eval(&BigInt::from(x)).is_zero())
        .collect()
}

#[derive(Debug, Clone)]
pub struct EigenLiftCheck {
    pub eigenvalues_checked: Vec<i64>,
    pub vectors_lifted: usize,
}

/// For every integer eigenvalue λ of D_P: lifts an exact kernel basis of
/// M − λI through the tensor construction and checks, exactly, that each
/// lift is a λ-eigenvector of D_{P×S0} and that the lifted family keeps
/// full rank.
pub fn verify_eigenvector_lifts(p: &FinitePoset) -> Result<EigenLiftCheck> {
    let adj = p.comparability_graph();
    let f = charpoly(&exactla::IntMatrix::from_adjacency(&adj))?;
    let product_adj = p.product(&FinitePoset::s0()).comparability_graph();
    let h = h_vector();
    let mut lifted = 0usize;
    let lambdas = integer_roots(&f, p.size() as i64);
    for &lambda in &lambdas {
        let cert = nullity_of(&AdjShift { adj: &adj, lambda }, NullityMode::RationalExact)?;
        let mut lifts: Vec<Vec<BigRational>> = Vec::new();
        for basis_vec in &cert.kernel_basis {
            let g = VertexFunction::from_bigints(basis_vec);
            let lift = tensor_lift(&g, &h);
            if !is_eigenvector(&product_adj, &lift, lambda)? {
                return Err(Error::VerificationFailed(format!(
                    "lift of a λ={lambda} eigenvector is not a λ-eigenvector of the product"
                )));
            }
            lifts.push(lift.values().to_vec());
            lifted += 1;
        }
        if !lifts.is_empty() {
            let rank = crate::exactla::bareiss::rational_rank(&lifts, product_adj.n());
            if rank != lifts.len() {
                return Err(Error::VerificationFailed(format!(
                    "lifted λ={lambda} eigenvectors lost rank: {rank} < {}",
                    lifts.len()
                )));
            }
        }
    }
    Ok(EigenLiftCheck {
        eigenvalues_checked: lambdas,
        vectors_lifted: lifted,
    })
}

/// The poset analogue of the squared-divisibility theorem: with
/// S′ = S × {0,1}, check f_{S′}² | f_{S′×S0} exactly.
pub fn verify_squared_lift(p: &FinitePoset, max_size: usize) -> Result<()> {
    if p.size() > max_size {
        return Err(Error::GuardExceeded {
            what: "verify_squared_lift",
            requested: p.size() as u64,
            limit: max_size as u64,
        });
    }
    let doubled = p.product(&FinitePoset::chain(2));
    let f_doubled = charpoly(&exactla::IntMatrix::from_adjacency(
        &doubled.comparability_graph(),
    ))?;
    let f_big = charpoly(&exactla::IntMatrix::from_adjacency(
        &doubled.product(&FinitePoset::s0()).comparability_graph(),
    ))?;
    if exactla::poly_divides(&f_doubled.square(), &f_big)?.is_none() {
        return Err(Error::VerificationFailed(format!(
            "f_(P×2)² does not divide f_((P×2)×S0) for {p:?}"
        )));
    }
    Ok(())
}
