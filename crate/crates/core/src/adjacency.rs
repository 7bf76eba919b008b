//! Dense symmetric 0/1 adjacency matrices with bit-packed rows. Dense is
//! the right shape here: everything downstream is exact linear algebra on
//! the full matrix.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use std::collections::VecDeque;

#[derive(Clone, PartialEq, Eq)]
pub struct AdjMatrix {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl AdjMatrix {
    pub fn zeros(n: usize) -> Self {
        let words = n.div_ceil(64);
        Self {
            n,
            words,
            bits: vec![0u64; n * words],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Inserts the undirected edge {i, j}. Loops are ignored.
    pub fn set_edge(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.bits[i * self.words + j / 64] |= 1 << (j % 64);
        self.bits[j * self.words + i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    pub fn degree(&self, i: usize) -> u64 {
        self.row(i).iter().map(|w| u64::from(w.count_ones())).sum()
    }

    pub fn edge_count(&self) -> u64 {
        let total: u64 = self.bits.iter().map(|w| u64::from(w.count_ones())).sum();
        total / 2
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        let row = self.row(i);
        (0..self.n).filter(move |&j| row[j / 64] >> (j % 64) & 1 == 1)
    }

    /// All edges {i, j} with i < j, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count() as usize);
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self.has_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Do i and j share a neighbor?
    pub fn have_common_neighbor(&self, i: usize, j: usize) -> bool {
        self.row(i).iter().zip(self.row(j)).any(|(a, b)| a & b != 0)
    }

    /// Induced subgraph on `keep` (indices in ascending order of `keep`).
    pub fn induced(&self, keep: &[usize]) -> AdjMatrix {
        let mut sub = AdjMatrix::zeros(keep.len());
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate().skip(a + 1) {
                if self.has_edge(i, j) {
                    sub.set_edge(a, b);
                }
            }
        }
        sub
    }

    /// Exact matrix-vector product over i64. Entries of the result are
    /// sums of at most n vector entries, so callers keep inputs small.
    pub fn mul_i64(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.n);
        (0..self.n)
            .map(|i| self.neighbors(i).map(|j| v[j]).sum())
            .collect()
    }

    pub fn mul_bigint(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.n);
        (0..self.n)
            .map(|i| self.neighbors(i).fold(BigInt::zero(), |acc, j| acc + &v[j]))
            .collect()
    }

    pub fn mul_rational(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(v.len(), self.n);
        (0..self.n)
            .map(|i| {
                self.neighbors(i)
                    .fold(BigRational::zero(), |acc, j| acc + &v[j])
            })
            .collect()
    }

    /// BFS distances from `start`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, start: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.n];
        dist[start] = Some(0);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Empty and single-vertex graphs count as connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.bfs_distances(0).iter().all(|d| d.is_some())
    }

    /// Two-coloring test; vacuously true for the empty graph.
    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![None; self.n];
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for w in self.neighbors(u) {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    pub fn complete(n: usize) -> AdjMatrix {
        let mut m = AdjMatrix::zeros(n);
        for i in 0..n {
            for j in (i + 1)..n {
                m.set_edge(i, j);
            }
        }
        m
    }
}

impl std::fmt::Debug for AdjMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "AdjMatrix({} vertices, {} edges)",
            self.n,
            self.edge_count()
        )?;
        if self.n <= 20 {
            for i in 0..self.n {
                for j in 0..self.n {
                    write!(f, "{}", u8::from(self.has_edge(i, j)))?;
                }
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut m = AdjMatrix::zeros(4);
        m.set_edge(0, 1);
        m.set_edge(0, 2);
        m.set_edge(0, 3);
        m.set_edge(1, 3);
        m.set_edge(2, 3);
        assert_eq!(m.edge_count(), 5);
        assert!(m.has_edge(3, 1));
        assert!(!m.has_edge(1, 2));
        assert_eq!(m.degree(0), 3);
        assert_eq!(m.neighbors(3).collect::<Vec<_>>(), vec![0, 1, 2]);
        assert!(m.is_connected());
        assert!(!m.is_bipartite());
        assert!(m.have_common_neighbor(1, 2));
    }

    #[test]
    fn bipartite_and_connectivity() {
        assert!(AdjMatrix::zeros(0).is_connected());
        assert!(AdjMatrix::zeros(1).is_connected());
        assert!(!AdjMatrix::zeros(2).is_connected());
        assert!(AdjMatrix::complete(2).is_bipartite());
        assert!(!AdjMatrix::complete(3).is_bipartite());
    }

    #[test]
    fn induced_subgraph() {
        let m = AdjMatrix::complete(5);
        let sub = m.induced(&[1, 2, 4]);
        assert_eq!(sub.n(), 3);
        assert_eq!(sub.edge_count(), 3);
    }
}
