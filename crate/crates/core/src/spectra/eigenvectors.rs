//! Explicit integer eigenvectors: the Möbius vector for λ = −2 and the
//! {1, n}-supported vector for λ = −1. Each witness verifies its own
//! residual exactly on construction.

use crate::adjacency::AdjMatrix;
use crate::arith::{self, FactorizationType};
use crate::divgraph::DivGraph;
use crate::error::{Error, Result};

/// An integer eigenvector given in its own natural vertex order
/// together with the permutation into the canonical vertex order of the
/// type-built graph. `M·w = λ·w` holds exactly by construction.
#[derive(Debug, Clone)]
pub struct KernelWitness {
    pub lambda: i64,
    /// Values in the witness's own vertex order.
    pub values: Vec<i64>,
    /// `perm_to_canonical[i]` = canonical index of witness vertex i.
    pub perm_to_canonical: Vec<usize>,
}

impl KernelWitness {
    /// Builds the witness and verifies the eigen-identity against the
    /// canonical adjacency; refuses zero vectors.
    pub fn verified(
        lambda: i64,
        values: Vec<i64>,
        perm_to_canonical: Vec<usize>,
        canonical_adj: &AdjMatrix,
    ) -> Result<Self> {
        let n = canonical_adj.n();
        if values.len() != n || perm_to_canonical.len() != n {
            return Err(Error::InvalidInput("witness length mismatch".into()));
        }
        let mut seen = vec![false; n];
        for &p in &perm_to_canonical {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidInput("not a permutation".into()));
            }
        }
        if values.iter().all(|&v| v == 0) {
            return Err(Error::Precondition("witness vector is zero".into()));
        }
        let w = Self {
            lambda,
            values,
            perm_to_canonical,
        };
        let canonical = w.canonical_values(n);
        let image = canonical_adj.mul_i64(&canonical);
        for (got, want) in image.iter().zip(canonical.iter().map(|&v| lambda * v)) {
            if *got != want {
                return Err(Error::VerificationFailed(format!(
                    "eigenvector residual nonzero for λ = {lambda}"
                )));
            }
        }
        Ok(w)
    }

    pub fn canonical_values(&self, n: usize) -> Vec<i64> {
        let mut out = vec![0i64; n];
        for (i, &v) in self.values.iter().enumerate() {
            out[self.perm_to_canonical[i]] = v;
        }
        out
    }
}

/// The Möbius eigenvector for λ = −2 on squarefree n with μ(n) = −1:
/// zero at 1 and n, μ(d) elsewhere, indexed by ascending divisors.
/// Requires Ω(n) ≥ 2 — for prime n the recipe gives the zero vector.
pub fn mobius_eigenvector(n: u64) -> Result<KernelWitness> {
    if arith::mobius(n)? != -1 {
        return Err(Error::Precondition(format!("μ({n}) must be −1")));
    }
    if arith::big_omega(n)? < 2 {
        return Err(Error::Precondition(format!(
            "Ω({n}) ≥ 2 required: for prime n the Möbius vector vanishes"
        )));
    }
    let divs = arith::divisors(n)?;
    let values: Vec<i64> = divs
        .iter()
        .map(|&d| {
            if d == 1 || d == n {
                Ok(0)
            } else {
                arith::mobius(d)
            }
        })
        .collect::<Result<_>>()?;

    let g = DivGraph::build_from_integer(n)?;
    let canon = g.canonical_permutation();
    let labels = g.labels().expect("integer build has labels");
    let perm: Vec<usize> = divs
        .iter()
        .map(|d| {
            let gi = labels.iter().position(|l| l == d).expect("divisor present");
            canon[gi]
        })
        .collect();
    let canonical_graph = DivGraph::build(&arith::factorization_type(n)?)?;
    KernelWitness::verified(-2, values, perm, canonical_graph.adj())
}

/// The vector +1 at the divisor 1 and −1 at n: always a −1-eigenvector,
/// because 1 and n are adjacent to every other vertex.
pub fn minus_one_eigenvector(t: &FactorizationType) -> Result<KernelWitness> {
    let g = DivGraph::build(t)?;
    let v = g.vertex_count();
    if v < 2 {
        return Err(Error::Precondition(
            "the one-vertex graph has no −1 eigenvector of this shape".into(),
        ));
    }
    let mut values = vec![0i64; v];
    values[0] = 1;
    values[v - 1] = -1;
    KernelWitness::verified(-1, values, (0..v).collect(), g.adj())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mobius_examples() {
        let w = mobius_eigenvector(30).unwrap();
        assert_eq!(w.lambda, -2);
        // divisors ascending: 1, 2, 3, 5, 6, 10, 15, 30
        assert_eq!(w.values, vec![0, -1, -1, -1, 1, 1, 1, 0]);

        mobius_eigenvector(105).unwrap();
        mobius_eigenvector(2 * 3 * 5 * 7 * 11).unwrap();

        assert!(mobius_eigenvector(6).is_err()); // μ = 1
        assert!(mobius_eigenvector(7).is_err()); // prime: Ω < 2
        assert!(mobius_eigenvector(12).is_err()); // not squarefree
    }

    #[test]
    fn minus_one_examples() {
        let t1 = FactorizationType::new(vec![1]).unwrap();
        let w = minus_one_eigenvector(&t1).unwrap();
        assert_eq!(w.values, vec![1, -1]);

        let t11 = FactorizationType::new(vec![1, 1]).unwrap();
        let w = minus_one_eigenvector(&t11).unwrap();
        assert_eq!(w.values, vec![1, 0, 0, -1]);

        let t22 = FactorizationType::new(vec![2, 2]).unwrap();
        let w = minus_one_eigenvector(&t22).unwrap();
        assert_eq!(w.values.len(), 9);

        assert!(minus_one_eigenvector(&FactorizationType::empty()).is_err());
    }

    #[test]
    fn witness_rejects_bad_input() {
        let g = DivGraph::build(&FactorizationType::new(vec![1, 1]).unwrap()).unwrap();
        // the all-ones vector is not a −1 eigenvector of D_pq
        assert!(KernelWitness::verified(-1, vec![1, 1, 1, 1], (0..4).collect(), g.adj()).is_err());
        // zero vector refused
        assert!(KernelWitness::verified(-1, vec![0; 4], (0..4).collect(), g.adj()).is_err());
        // non-permutation refused
        assert!(KernelWitness::verified(-1, vec![1, 0, 0, -1], vec![0, 0, 1, 2], g.adj()).is_err());
    }
}
