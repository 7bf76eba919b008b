//! Small exact search oracles: maximum clique and maximum independent
//! set by branch and bound over bitmask neighborhoods. Capped at 64
//! vertices; the callers cap far lower.

use crate::adjacency::AdjMatrix;

struct Search {
    neighbors: Vec<u64>,
    best: u64,
}

impl Search {
    fn expand(&mut self, clique: u64, mut candidates: u64) {
        if candidates == 0 {
            if clique.count_ones() > self.best.count_ones() {
                self.best = clique;
            }
            return;
        }
        if clique.count_ones() + candidates.count_ones() <= self.best.count_ones() {
            return;
        }
        // pivot on the candidate with the most candidate-neighbors
        let pivot = {
            let mut best_v = 0;
            let mut best_score = u32::MAX;
            let mut c = candidates;
            while c != 0 {
                let v = c.trailing_zeros() as usize;
                c &= c - 1;
                let score = (candidates & !self.neighbors[v]).count_ones();
                if score < best_score {
                    best_score = score;
                    best_v = v;
                }
            }
            best_v
        };
        let mut branch = candidates & !self.neighbors[pivot];
        while branch != 0 {
            let v = branch.trailing_zeros() as usize;
            branch &= branch - 1;
            candidates &= !(1 << v);
            self.expand(clique | 1 << v, candidates & self.neighbors[v]);
        }
    }
}

/// Exact maximum clique; panics beyond 64 vertices.
pub fn max_clique(adj: &AdjMatrix) -> (usize, Vec<usize>) {
    let n = adj.n();
    assert!(n <= 64, "brute-force clique capped at 64 vertices");
    if n == 0 {
        return (0, Vec::new());
    }
    let neighbors: Vec<u64> = (0..n)
        .map(|i| adj.neighbors(i).fold(0u64, |m, j| m | 1 << j))
        .collect();
    let mut s = Search { neighbors, best: 0 };
    let all = if n == 64 { u64::MAX } else { (1 << n) - 1 };
    s.expand(0, all);
    let witness: Vec<usize> = (0..n).filter(|&i| s.best >> i & 1 == 1).collect();
    (witness.len(), witness)
}

/// Exact maximum independent set, as a clique of the complement.
pub fn max_independent_set(adj: &AdjMatrix) -> (usize, Vec<usize>) {
    let n = adj.n();
    let mut comp = AdjMatrix::zeros(n);
    for i in 0..n {
        for j in (i + 1)..n {
            if !adj.has_edge(i, j) {
                comp.set_edge(i, j);
            }
        }
    }
    max_clique(&comp)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clique_of_complete_graph() {
        for n in 0..=6 {
            let (size, w) = max_clique(&AdjMatrix::complete(n));
            assert_eq!(size, n);
            assert_eq!(w.len(), n);
        }
    }

    #[test]
    fn clique_of_cycle5() {
        let mut c5 = AdjMatrix::zeros(5);
        for i in 0..5 {
            c5.set_edge(i, (i + 1) % 5);
        }
        assert_eq!(max_clique(&c5).0, 2);
        assert_eq!(max_independent_set(&c5).0, 2);
    }

    #[test]
    fn independent_set_of_empty_graph() {
        let (size, _) = max_independent_set(&AdjMatrix::zeros(7));
        assert_eq!(size, 7);
    }
}
