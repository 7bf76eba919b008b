//! Construction of divisibility relation graphs from factorization types
//! and their structural (non-spectral) invariants: counts, degrees,
//! distance, connectivity, cliques, colorings, planarity.

pub mod brute;
pub mod dot;
pub mod planarity;

use crate::adjacency::AdjMatrix;
use crate::arith::{self, FactorizationType};
use crate::error::{Error, Result};
use crate::guards;
use num_bigint::BigUint;
use num_traits::One;

/// A divisor of an integer of type `t`, encoded by its exponents:
/// coordinates α with 0 ≤ α_i ≤ a_i.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentVector {
    coords: Vec<u32>,
}

impl ExponentVector {
    pub fn new(coords: Vec<u32>) -> Self {
        Self { coords }
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn validate(&self, t: &FactorizationType) -> Result<()> {
        if self.coords.len() != t.num_parts()
            || self.coords.iter().zip(t.exponents()).any(|(&x, &a)| x > a)
        {
            return Err(Error::InvalidInput(format!(
                "exponent vector {:?} is not a divisor of type {t}",
                self.coords
            )));
        }
        Ok(())
    }

    /// Σ α_i, the Ω-weight of the divisor.
    pub fn weight(&self) -> u64 {
        self.coords.iter().map(|&x| u64::from(x)).sum()
    }

    /// Every coordinate at 0 or at its maximum.
    pub fn is_extremal(&self, exponents: &[u32]) -> bool {
        self.coords
            .iter()
            .zip(exponents)
            .all(|(&x, &a)| x == 0 || x == a)
    }

    /// Componentwise comparability, i.e. divisibility one way or the other.
    pub fn comparable(&self, other: &ExponentVector) -> bool {
        let le = self.coords.iter().zip(&other.coords).all(|(a, b)| a <= b);
        let ge = self.coords.iter().zip(&other.coords).all(|(a, b)| a >= b);
        le || ge
    }
}

/// The divisibility relation graph of a factorization type: all exponent
/// vectors in canonical mixed-radix order (coordinate 1 fastest), with
/// edges between componentwise-comparable pairs.
#[derive(Clone)]
pub struct DivGraph {
    ftype: FactorizationType,
    /// Exponents in the order actually used for vertex coordinates. For
    /// type-built graphs this is the sorted type; for integer-built
    /// graphs it follows increasing primes.
    exponents_in_order: Vec<u32>,
    adj: AdjMatrix,
    labels: Option<Vec<u64>>,
}

fn decode(mut idx: usize, radices: &[usize]) -> Vec<u32> {
    radices
        .iter()
        .map(|&r| {
            let d = idx % r;
            idx /= r;
            d as u32
        })
        .collect()
}

fn encode(coords: &[u32], radices: &[usize]) -> usize {
    let mut idx = 0usize;
    let mut scale = 1usize;
    for (&c, &r) in coords.iter().zip(radices) {
        idx += c as usize * scale;
        scale *= r;
    }
    idx
}

fn checked_vertex_count(exponents: &[u32]) -> Result<u64> {
    exponents
        .iter()
        .try_fold(1u64, |acc, &a| acc.checked_mul(u64::from(a) + 1))
        .filter(|&v| v <= guards::BUILD_HARD_MAX_VERTICES)
        .ok_or(Error::GuardExceeded {
            what: "divisor graph build",
            requested: u64::MAX,
            limit: guards::BUILD_HARD_MAX_VERTICES,
        })
}

fn build_adjacency(exponents: &[u32]) -> Result<AdjMatrix> {
    if exponents.len() > guards::BUILD_MAX_PARTS {
        return Err(Error::GuardExceeded {
            what: "divisor graph build (parts)",
            requested: exponents.len() as u64,
            limit: guards::BUILD_MAX_PARTS as u64,
        });
    }
    let v = checked_vertex_count(exponents)?;
    guards::check_vertices("divisor graph build", v)?;
    let v = v as usize;
    let radices: Vec<usize> = exponents.iter().map(|&a| a as usize + 1).collect();
    let verts: Vec<Vec<u32>> = (0..v).map(|i| decode(i, &radices)).collect();
    let mut adj = AdjMatrix::zeros(v);
    for i in 0..v {
        for j in (i + 1)..v {
            let le = verts[i].iter().zip(&verts[j]).all(|(a, b)| a <= b);
            let ge = le || verts[i].iter().zip(&verts[j]).all(|(a, b)| a >= b);
            if ge {
                adj.set_edge(i, j);
            }
        }
    }
    Ok(adj)
}

impl DivGraph {
    /// Builds D of a factorization type in canonical vertex order.
    pub fn build(t: &FactorizationType) -> Result<DivGraph> {
        let adj = build_adjacency(t.exponents())?;
        Ok(DivGraph {
            ftype: t.clone(),
            exponents_in_order: t.exponents().to_vec(),
            adj,
            labels: None,
        })
    }

    /// Builds D_n with actual divisors as labels. Vertex order follows
    /// the mixed-radix enumeration over primes in increasing order, so
    /// the graph is order-isomorphic (not always equal) to the canonical
    /// type-built graph; see [`DivGraph::canonical_permutation`].
    pub fn build_from_integer(n: u64) -> Result<DivGraph> {
        let f = arith::factor(n)?;
        let exponents: Vec<u32> = f.pairs().iter().map(|&(_, a)| a).collect();
        let primes: Vec<u64> = f.pairs().iter().map(|&(p, _)| p).collect();
        let adj = build_adjacency(&exponents)?;
        let radices: Vec<usize> = exponents.iter().map(|&a| a as usize + 1).collect();
        let labels = (0..adj.n())
            .map(|i| {
                decode(i, &radices)
                    .iter()
                    .zip(&primes)
                    .map(|(&a, &p)| p.pow(a))
                    .product()
            })
            .collect();
        Ok(DivGraph {
            ftype: FactorizationType::new(exponents.clone())?,
            exponents_in_order: exponents,
            adj,
            labels: Some(labels),
        })
    }

    pub fn ftype(&self) -> &FactorizationType {
        &self.ftype
    }

    pub fn adj(&self) -> &AdjMatrix {
        &self.adj
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.n()
    }

    pub fn edge_count(&self) -> u64 {
        self.adj.edge_count()
    }

    /// Divisor labels, present on integer-built graphs.
    pub fn labels(&self) -> Option<&[u64]> {
        self.labels.as_deref()
    }

    fn radices(&self) -> Vec<usize> {
        self.exponents_in_order
            .iter()
            .map(|&a| a as usize + 1)
            .collect()
    }

    pub fn vertex(&self, idx: usize) -> ExponentVector {
        ExponentVector::new(decode(idx, &self.radices()))
    }

    pub fn index_of(&self, x: &ExponentVector) -> Result<usize> {
        if x.coords.len() != self.exponents_in_order.len()
            || x.coords
                .iter()
                .zip(&self.exponents_in_order)
                .any(|(&c, &a)| c > a)
        {
            return Err(Error::InvalidInput(format!(
                "vertex {:?} not in graph of type {}",
                x.coords, self.ftype
            )));
        }
        Ok(encode(&x.coords, &self.radices()))
    }

    /// Index 0: the exponent vector 0, i.e. the divisor 1.
    pub fn bottom_index(&self) -> usize {
        0
    }

    /// Last index: the top divisor n.
    pub fn top_index(&self) -> usize {
        self.adj.n() - 1
    }

    pub fn omega_weight(&self, idx: usize) -> u64 {
        self.vertex(idx).weight()
    }

    /// Maps this graph's vertex indices onto the canonical type-built
    /// graph: coordinates are stably re-sorted by exponent.
    pub fn canonical_permutation(&self) -> Vec<usize> {
        let d = self.exponents_in_order.len();
        let mut order: Vec<usize> = (0..d).collect();
        order.sort_by_key(|&i| self.exponents_in_order[i]);
        let sorted_radices: Vec<usize> = order
            .iter()
            .map(|&i| self.exponents_in_order[i] as usize + 1)
            .collect();
        let radices = self.radices();
        (0..self.adj.n())
            .map(|idx| {
                let coords = decode(idx, &radices);
                let sorted_coords: Vec<u32> = order.iter().map(|&i| coords[i]).collect();
                encode(&sorted_coords, &sorted_radices)
            })
            .collect()
    }

    /// Graph distance: 0 for equal vertices, 1 for adjacent ones, 2 for
    /// everything else (the bottom vertex is a common neighbor).
    pub fn distance(&self, x: usize, y: usize) -> u8 {
        if x == y {
            0
        } else if self.adj.has_edge(x, y) {
            1
        } else {
            2
        }
    }
}

impl std::fmt::Debug for DivGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "DivGraph(type {}, {} vertices, {} edges)",
            self.ftype,
            self.vertex_count(),
            self.edge_count()
        )
    }
}

/// Closed-form vertex and edge counts:
/// v = ∏(a_i+1), e = ∏ (a_i+1)(a_i+2)/2 − v. Exact for any valid type.
pub fn counts(t: &FactorizationType) -> (BigUint, BigUint) {
    let mut v = BigUint::one();
    let mut f = BigUint::one();
    for &a in t.exponents() {
        let a = BigUint::from(a);
        v *= &a + 1u32;
        f *= (&a + 1u32) * (&a + 2u32) / 2u32;
    }
    let e = f - &v;
    (v, e)
}

/// Closed-form vertex degree f(x) = ∏(a_i+1−x_i) + ∏(x_i+1) − 2.
pub fn degree(t: &FactorizationType, x: &ExponentVector) -> Result<u128> {
    x.validate(t)?;
    let up: u128 = t
        .exponents()
        .iter()
        .zip(x.coords())
        .map(|(&a, &xi)| u128::from(a - xi) + 1)
        .product();
    let down: u128 = x.coords().iter().map(|&xi| u128::from(xi) + 1).product();
    Ok(up + down - 2)
}

/// Degree increment Δ_i(x) = ∏_{j≠i}(x_j+1) − ∏_{j≠i}(a_j+1−x_j);
/// independent of the value of x_i. `i` is a 0-based coordinate.
pub fn delta(t: &FactorizationType, x: &ExponentVector, i: usize) -> Result<i128> {
    x.validate(t)?;
    if i >= t.num_parts() {
        return Err(Error::InvalidInput(format!(
            "coordinate {i} out of range for type {t}"
        )));
    }
    let mut down: i128 = 1;
    let mut up: i128 = 1;
    for (j, (&a, &xj)) in t.exponents().iter().zip(x.coords()).enumerate() {
        if j == i {
            continue;
        }
        down *= i128::from(xj) + 1;
        up *= i128::from(a - xj) + 1;
    }
    Ok(down - up)
}

/// Per-vertex degrees with the minimal-degree structure of the type.
#[derive(Debug, Clone)]
pub struct DegreeProfile {
    pub degrees: Vec<u64>,
    pub min_degree: u64,
    /// Canonical indices of all vertices of minimal degree.
    pub minimizers: Vec<usize>,
    pub minimizer_extremal: Vec<bool>,
}

/// Computes every degree by the closed form and certifies the
/// minimal-degree structure: some minimizer is extremal, every
/// minimizer satisfies Δ_i = 0 at each nonextremal coordinate, and the
/// extremal minimizers are exactly the extremal vertices minimizing
/// ∏_{i∈A}(a_i+1) + ∏_{j∈B}(a_j+1) with A = {x_i = a_i}, B = {x_j = 0}.
pub fn min_degree_analysis(t: &FactorizationType) -> Result<DegreeProfile> {
    let v = checked_vertex_count(t.exponents())?;
    guards::check_vertices("min_degree_analysis", v)?;
    let v = v as usize;
    let radices: Vec<usize> = t.exponents().iter().map(|&a| a as usize + 1).collect();

    let mut degrees = Vec::with_capacity(v);
    for idx in 0..v {
        let x = ExponentVector::new(decode(idx, &radices));
        degrees.push(degree(t, &x)? as u64);
    }
    let min_degree = degrees.iter().copied().min().unwrap_or(0);
    let minimizers: Vec<usize> = (0..v).filter(|&i| degrees[i] == min_degree).collect();
    let minimizer_extremal: Vec<bool> = minimizers
        .iter()
        .map(|&i| ExponentVector::new(decode(i, &radices)).is_extremal(t.exponents()))
        .collect();

    // degree sum must equal twice the closed-form edge count
    let (_, e) = counts(t);
    let degree_sum: BigUint = degrees.iter().map(|&d| BigUint::from(d)).sum();
    if degree_sum != e * 2u32 {
        return Err(Error::VerificationFailed(format!(
            "degree sum does not match edge count for type {t}"
        )));
    }

    if !minimizer_extremal.iter().any(|&b| b) {
        return Err(Error::VerificationFailed(format!(
            "no extremal vertex of minimal degree in type {t}"
        )));
    }
    for &idx in &minimizers {
        let x = ExponentVector::new(decode(idx, &radices));
        for (i, (&a, &xi)) in t.exponents().iter().zip(x.coords()).enumerate() {
            let extremal_coord = xi == 0 || xi == a;
            if !extremal_coord && delta(t, &x, i)? != 0 {
                return Err(Error::VerificationFailed(format!(
                    "minimizer {:?} violates the stability condition at coordinate {i}",
                    x.coords()
                )));
            }
        }
    }
    // extremal-minimizer criterion
    let d = t.num_parts();
    let mut extremal: Vec<(u64, u128)> = Vec::new(); // (degree, A/B score)
    for mask in 0..(1u32 << d) {
        let coords: Vec<u32> = (0..d)
            .map(|i| {
                if mask >> i & 1 == 1 {
                    t.exponents()[i]
                } else {
                    0
                }
            })
            .collect();
        let x = ExponentVector::new(coords.clone());
        let deg = degree(t, &x)? as u64;
        let score: u128 = {
            let prod_a: u128 = (0..d)
                .filter(|&i| coords[i] == t.exponents()[i])
                .map(|i| u128::from(t.exponents()[i]) + 1)
                .product();
            let prod_b: u128 = (0..d)
                .filter(|&i| coords[i] == 0)
                .map(|i| u128::from(t.exponents()[i]) + 1)
                .product();
            prod_a + prod_b
        };
        extremal.push((deg, score));
    }
    let min_ext_deg = extremal.iter().map(|&(d, _)| d).min().unwrap();
    let min_score = extremal.iter().map(|&(_, s)| s).min().unwrap();
    for &(deg, score) in &extremal {
        if (deg == min_ext_deg) != (score == min_score) {
            return Err(Error::VerificationFailed(format!(
                "extremal-minimizer criterion broke for type {t}"
            )));
        }
    }

    Ok(DegreeProfile {
        degrees,
        min_degree,
        minimizers,
        minimizer_extremal,
    })
}

/// The 2^k × 2^k matrix with entry (i,j) = C(i,j) + C(j,i) mod 2, with
/// C(i,j) = 0 for j > i. Lucas' theorem turns the binomial parity into a
/// submask test, and the result is exactly the adjacency of the
/// squarefree graph of type 1^k under the binary vertex order.
pub fn lucas_adjacency(k: u32) -> Result<AdjMatrix> {
    if k > guards::LUCAS_MAX_K {
        return Err(Error::GuardExceeded {
            what: "lucas_adjacency",
            requested: u64::from(k),
            limit: u64::from(guards::LUCAS_MAX_K),
        });
    }
    let n = 1usize << k;
    guards::check_vertices("lucas_adjacency", n as u64)?;
    let mut adj = AdjMatrix::zeros(n);
    for i in 0..n {
        for j in (i + 1)..n {
            // C(i,j) ≡ 1 mod 2 iff j is a submask of i
            if i & j == j || i & j == i {
                adj.set_edge(i, j);
            }
        }
    }
    Ok(adj)
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct ConnectivityReport {
    pub connected: bool,
    pub middle_connected: bool,
    pub bipartite: bool,
}

/// Connectivity of D, connectivity of D minus its bottom and top, and
/// bipartiteness, each certified against the classified answer:
/// D is always connected; the middle is disconnected exactly for type
/// (1,1); D is bipartite exactly for type (1) (the one-vertex graph of
/// the empty type is vacuously bipartite as well).
pub fn connectivity_checks(t: &FactorizationType) -> Result<ConnectivityReport> {
    let g = DivGraph::build(t)?;
    let connected = g.adj().is_connected();
    let v = g.vertex_count();
    let middle: Vec<usize> = (1..v.saturating_sub(1)).collect();
    let middle_connected = g.adj().induced(&middle).is_connected();
    let bipartite = g.adj().is_bipartite();

    if !connected {
        return Err(Error::VerificationFailed(format!(
            "D of type {t} is not connected"
        )));
    }
    let expect_middle = t.exponents() != [1, 1];
    if middle_connected != expect_middle {
        return Err(Error::VerificationFailed(format!(
            "middle connectivity of type {t}: got {middle_connected}, expected {expect_middle}"
        )));
    }
    let expect_bipartite = t.exponents() == [1];
    if t.num_parts() > 0 && bipartite != expect_bipartite {
        return Err(Error::VerificationFailed(format!(
            "bipartiteness of type {t}: got {bipartite}, expected {expect_bipartite}"
        )));
    }
    Ok(ConnectivityReport {
        connected,
        middle_connected,
        bipartite,
    })
}

#[derive(Debug, Clone)]
pub struct CliqueReport {
    /// 1 + Ω(n).
    pub size: u64,
    /// Canonical vertex indices of a maximum clique, built as a divisor
    /// chain by the inductive construction.
    pub witness: Vec<usize>,
    /// Present when the graph is small enough for the exact search.
    pub brute_force_size: Option<u64>,
}

/// Clique number 1 + Ω(n) with an explicit divisor-chain witness.
pub fn clique_number(t: &FactorizationType) -> Result<CliqueReport> {
    let v = checked_vertex_count(t.exponents())?;
    guards::check_vertices("clique_number", v)?;
    // chain construction: powers of the new prime, then the old chain
    // shifted to the top slice
    let mut chain: Vec<Vec<u32>> = vec![vec![]];
    for (k, &a) in t.exponents().iter().enumerate() {
        let mut next: Vec<Vec<u32>> = (0..a)
            .map(|j| {
                let mut c = vec![0u32; k];
                c.push(j);
                c
            })
            .collect();
        for old in &chain {
            let mut c = old.clone();
            c.push(a);
            next.push(c);
        }
        chain = next;
    }
    let size = 1 + t.big_omega();
    debug_assert_eq!(chain.len() as u64, size);
    for w in chain.windows(2) {
        debug_assert!(w[0].iter().zip(&w[1]).all(|(a, b)| a <= b));
    }
    let radices: Vec<usize> = t.exponents().iter().map(|&a| a as usize + 1).collect();
    let witness: Vec<usize> = chain.iter().map(|c| encode(c, &radices)).collect();

    let brute_force_size = if v <= 24 {
        let g = DivGraph::build(t)?;
        let (found, _) = brute::max_clique(g.adj());
        if found as u64 != size {
            return Err(Error::VerificationFailed(format!(
                "clique formula {size} disagrees with exact search {found} on type {t}"
            )));
        }
        Some(found as u64)
    } else {
        None
    };
    Ok(CliqueReport {
        size,
        witness,
        brute_force_size,
    })
}

#[derive(Debug, Clone)]
pub struct IndependenceReport {
    pub size: u64,
    /// The middle Ω-layer: all vertices of weight ⌊Ω/2⌋.
    pub witness: Vec<usize>,
    pub brute_force_size: Option<u64>,
}

/// Independence number: the count of divisors of Ω-weight ⌊Ω(n)/2⌋
/// ("degree" of the divisor as a number, not its graph degree). The
/// middle layer is an antichain, hence independent; the exact search
/// confirms maximality on every small graph.
pub fn independence_number(t: &FactorizationType) -> Result<IndependenceReport> {
    let v = checked_vertex_count(t.exponents())?;
    guards::check_vertices("independence_number", v)?;
    let v = v as usize;
    let radices: Vec<usize> = t.exponents().iter().map(|&a| a as usize + 1).collect();
    let target = t.big_omega() / 2;
    let witness: Vec<usize> = (0..v)
        .filter(|&i| {
            decode(i, &radices)
                .iter()
                .map(|&x| u64::from(x))
                .sum::<u64>()
                == target
        })
        .collect();
    let size = witness.len() as u64;
    let brute_force_size = if v <= 24 {
        let g = DivGraph::build(t)?;
        for (ai, &a) in witness.iter().enumerate() {
            for &b in &witness[ai + 1..] {
                if g.adj().has_edge(a, b) {
                    return Err(Error::VerificationFailed(format!(
                        "middle layer of type {t} is not an antichain"
                    )));
                }
            }
        }
        let (found, _) = brute::max_independent_set(g.adj());
        if found as u64 != size {
            return Err(Error::VerificationFailed(format!(
                "independence formula {size} disagrees with exact search {found} on type {t}"
            )));
        }
        Some(found as u64)
    } else {
        None
    };
    Ok(IndependenceReport {
        size,
        witness,
        brute_force_size,
    })
}

#[derive(Debug, Clone)]
pub struct ColoringReport {
    /// Color of each vertex: its Ω-weight.
    pub colors: Vec<u64>,
    pub color_count: u64,
}

/// The weight coloring c(m) = Ω(m): proper because comparable distinct
/// divisors have different weights, and it uses exactly 1 + Ω(n) colors —
/// matching the clique number, which exhibits perfectness concretely.
pub fn omega_coloring(t: &FactorizationType) -> Result<ColoringReport> {
    let g = DivGraph::build(t)?;
    let colors: Vec<u64> = (0..g.vertex_count()).map(|i| g.omega_weight(i)).collect();
    for (a, b) in g.adj().edges() {
        if colors[a] == colors[b] {
            return Err(Error::VerificationFailed(format!(
                "weight coloring is not proper on type {t}"
            )));
        }
    }
    let distinct: std::collections::BTreeSet<u64> = colors.iter().copied().collect();
    let color_count = distinct.len() as u64;
    if color_count != 1 + t.big_omega() {
        return Err(Error::VerificationFailed(format!(
            "weight coloring of type {t} uses {color_count} colors, expected {}",
            1 + t.big_omega()
        )));
    }
    Ok(ColoringReport {
        colors,
        color_count,
    })
}

/// All factorization types with at most `max_v` divisors, in a
/// deterministic order (lexicographic by the nondecreasing exponent
/// lists as they are generated).
pub fn enumerate_types(max_v: u64) -> Vec<FactorizationType> {
    fn rec(min_part: u32, budget: u64, cur: &mut Vec<u32>, out: &mut Vec<FactorizationType>) {
        out.push(FactorizationType::new(cur.clone()).expect("parts are positive"));
        let mut a = min_part;
        while u64::from(a) < budget {
            cur.push(a);
            rec(a, budget / (u64::from(a) + 1), cur, out);
            cur.pop();
            a += 1;
        }
    }
    let mut out = Vec::new();
    if max_v >= 1 {
        rec(1, max_v, &mut Vec::new(), &mut out);
    }
    out
}
