//! Exact construction and analysis of divisibility relation graphs.
//!
//! For a positive integer n, the divisibility relation graph D_n has the
//! divisors of n as vertices, two of them adjacent when one divides the
//! other. Up to isomorphism D_n depends only on the sorted multiset of
//! prime exponents of n — its factorization type — so everything here is
//! keyed on types, with integer-built graphs carrying divisor labels.
//!
//! The crate computes structural invariants (counts, degrees, cliques,
//! independence, coloring, planarity) in closed form and certifies them
//! against enumeration and search, and it treats the spectral side
//! entirely in exact arithmetic: characteristic polynomials over big
//! integers, certified kernel dimensions for the integer eigenvalues
//! −2, −1, 0, 1, explicit eigenvectors with zero residual, divisibility
//! of characteristic polynomials under adjoining two fresh primes, and
//! the determinant periodicity of the p·q^a family.
//!
//! Nothing in the crate uses floating point.

pub mod acceptance;
pub mod adjacency;
pub mod arith;
pub mod divgraph;
pub mod error;
pub mod exactla;
pub mod guards;
pub mod poset;
pub mod spectra;
