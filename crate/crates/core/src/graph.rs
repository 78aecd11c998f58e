//! Simple undirected graphs on dense labels `0..n-1`, stored as bitset
//! adjacency rows. Everything downstream (embedding, blocks, search)
//! assumes this representation, so `n` is capped at 64 vertices.

use std::fmt;

/// Hard cap implied by the `u64` adjacency rows.
pub const MAX_VERTICES: usize = 64;

/// Simple undirected graph: no loops, no multi-edges, labels `0..n-1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Empty graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "graph too large: {n} > {MAX_VERTICES}");
        Graph { n, adj: vec![0; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Cycle `0-1-...-(n-1)-0`; `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let mut g = Graph::empty(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
        g
    }

    /// Path `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop {u}");
        assert!(u < self.n && v < self.n, "edge ({u},{v}) out of range");
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Neighbor bitmask of `v`.
    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> BitIter {
        BitIter(self.adj[v])
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in BitIter(self.adj[u] & !((1 << (u + 1)) - 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.component_of(0).count_ones() as usize == self.n
    }

    /// Bitmask of the component containing `start`.
    pub fn component_of(&self, start: usize) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in BitIter(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    /// Vertex bitmasks of all connected components.
    pub fn components(&self) -> Vec<u64> {
        let mut left = if self.n == 64 { !0u64 } else { (1u64 << self.n) - 1 };
        let mut out = Vec::new();
        while left != 0 {
            let v = left.trailing_zeros() as usize;
            let comp = self.component_of(v);
            out.push(comp);
            left &= !comp;
        }
        out
    }

    /// Subgraph induced on the vertices of `mask`, relabelled densely in
    /// increasing label order.
    pub fn induced(&self, mask: u64) -> Graph {
        let verts: Vec<usize> = BitIter(mask).collect();
        let mut g = Graph::empty(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Copy with vertex `old` renamed to `perm[old]`; `perm` must be a
    /// permutation of `0..n`.
    pub fn relabelled(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// New graph with one extra vertex `n`, adjacent to the vertices of
    /// `neighborhood`.
    pub fn with_new_vertex(&self, neighborhood: u64) -> Graph {
        let mut g = Graph::empty(self.n + 1);
        g.adj[..self.n].copy_from_slice(&self.adj);
        for v in BitIter(neighborhood) {
            g.add_edge(self.n, v);
        }
        g
    }

    /// Upper-triangle adjacency bits in column-major (graph6) order:
    /// for j in 1..n, for i in 0..j.
    pub fn upper_triangle_bits(&self) -> Vec<bool> {
        let mut bits = Vec::with_capacity(self.n * (self.n.max(1) - 1) / 2);
        for j in 1..self.n {
            for i in 0..j {
                bits.push(self.has_edge(i, j));
            }
        }
        bits
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Iterator over set bit positions of a `u64`.
#[derive(Clone, Copy)]
pub struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_count_is_half_degree_sum() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]);
        let degsum: usize = (0..5).map(|v| g.degree(v)).sum();
        assert_eq!(g.edge_count() * 2, degsum);
    }

    #[test]
    fn components_of_disjoint_triangles() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
        assert!(!g.is_connected());
        assert_eq!(g.components().len(), 2);
        assert_eq!(g.induced(g.component_of(3)).edge_count(), 3);
    }

    #[test]
    fn relabel_preserves_edge_count() {
        let g = Graph::cycle(5);
        let perm = [2, 4, 1, 3, 0];
        let h = g.relabelled(&perm);
        assert_eq!(h.edge_count(), 5);
        assert!(h.has_edge(2, 4)); // image of edge (0,1)
    }
}
