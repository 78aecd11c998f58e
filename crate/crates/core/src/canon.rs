//! Canonical forms and automorphism orbits via equitable refinement plus
//! individualization. The canonical code is the maximum upper-triangle bit
//! string over all labelings reachable from the refined partition; discovered
//! automorphisms prune the root level of the search and yield exact orbits,
//! which the enumeration module needs for canonical-augmentation checks.

use crate::graph::{BitIter, Graph};

/// Total-order key identifying an isomorphism class: vertex count plus the
/// packed upper-triangle bits of the canonically relabelled graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalCode {
    n: usize,
    words: Vec<u64>,
}

/// Result of a full canonization run.
pub struct Canonized {
    pub code: CanonicalCode,
    /// `labeling[v]` = canonical position of vertex `v`.
    pub labeling: Vec<usize>,
    /// Orbit representative (smallest member) per vertex under Aut(G).
    pub orbits: Vec<usize>,
}

pub fn canonical_form(g: &Graph) -> CanonicalCode {
    canonize(g).code
}

/// Two vertices in the same automorphism orbit?
pub fn same_orbit(c: &Canonized, u: usize, v: usize) -> bool {
    c.orbits[u] == c.orbits[v]
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        if self.0[x] != x {
            let r = self.find(self.0[x]);
            self.0[x] = r;
        }
        self.0[x]
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.0[hi] = lo;
        }
    }
}

/// Ordered partition of the vertex set into cells.
#[derive(Clone)]
struct Partition {
    cells: Vec<Vec<usize>>,
}

impl Partition {
    fn unit(n: usize) -> Self {
        Partition { cells: vec![(0..n).collect()] }
    }

    fn is_discrete(&self) -> bool {
        self.cells.iter().all(|c| c.len() == 1)
    }

    /// Equitable refinement to fixpoint: split any cell whose members have
    /// differing neighbor counts into some splitter cell, sub-cells ordered
    /// by ascending count. The first splitting (splitter, target) pair in
    /// scan order is a function of the partition structure alone, so the
    /// result is deterministic and equivariant under relabeling.
    fn refine(&mut self, g: &Graph) {
        'restart: loop {
            for s in 0..self.cells.len() {
                let mut splitter_mask = 0u64;
                for &v in &self.cells[s] {
                    splitter_mask |= 1 << v;
                }
                for i in 0..self.cells.len() {
                    if self.cells[i].len() < 2 {
                        continue;
                    }
                    let counts: Vec<u32> = self.cells[i]
                        .iter()
                        .map(|&v| (g.row(v) & splitter_mask).count_ones())
                        .collect();
                    if counts.iter().any(|&c| c != counts[0]) {
                        let mut groups: Vec<(u32, Vec<usize>)> = Vec::new();
                        for (&v, &c) in self.cells[i].iter().zip(&counts) {
                            match groups.iter_mut().find(|(gc, _)| *gc == c) {
                                Some((_, vs)) => vs.push(v),
                                None => groups.push((c, vec![v])),
                            }
                        }
                        groups.sort_by_key(|(c, _)| *c);
                        let replacement: Vec<Vec<usize>> = groups.into_iter().map(|(_, vs)| vs).collect();
                        self.cells.splice(i..=i, replacement);
                        continue 'restart;
                    }
                }
            }
            return;
        }
    }

    /// Split `v` out of its cell, placed before the remainder.
    fn individualize(&self, v: usize) -> Partition {
        let mut out = Vec::with_capacity(self.cells.len() + 1);
        for cell in &self.cells {
            if cell.len() > 1 && cell.contains(&v) {
                out.push(vec![v]);
                out.push(cell.iter().copied().filter(|&x| x != v).collect());
            } else {
                out.push(cell.clone());
            }
        }
        Partition { cells: out }
    }

    fn first_non_singleton(&self) -> Option<usize> {
        self.cells.iter().position(|c| c.len() > 1)
    }
}

fn pack_code(g: &Graph, labeling: &[usize]) -> CanonicalCode {
    let n = g.n();
    // Relabelled adjacency rows.
    let mut rows = vec![0u64; n];
    for u in 0..n {
        for v in BitIter(g.row(u)) {
            rows[labeling[u]] |= 1 << labeling[v];
        }
    }
    let mut words = Vec::new();
    let mut cur = 0u64;
    let mut used = 0;
    for j in 1..n {
        for i in 0..j {
            cur = cur << 1 | (rows[i] >> j & 1);
            used += 1;
            if used == 64 {
                words.push(cur);
                cur = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        words.push(cur << (64 - used));
    }
    CanonicalCode { n, words }
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(CanonicalCode, Vec<usize>)>,
    uf: UnionFind,
}

impl<'a> Search<'a> {
    fn leaf(&mut self, partition: &Partition) {
        let n = self.g.n();
        let mut labeling = vec![0usize; n];
        for (pos, cell) in partition.cells.iter().enumerate() {
            labeling[cell[0]] = pos;
        }
        let code = pack_code(self.g, &labeling);
        match &self.best {
            None => self.best = Some((code, labeling)),
            Some((best_code, best_labeling)) => {
                if code > *best_code {
                    self.best = Some((code, labeling));
                } else if code == *best_code {
                    // labeling and best differ by an automorphism:
                    // sigma = best^{-1} o labeling.
                    let mut best_inv = vec![0usize; n];
                    for v in 0..n {
                        best_inv[best_labeling[v]] = v;
                    }
                    for v in 0..n {
                        self.uf.union(v, best_inv[labeling[v]]);
                    }
                }
            }
        }
    }

    fn descend(&mut self, partition: Partition, at_root: bool) {
        match partition.first_non_singleton() {
            None => self.leaf(&partition),
            Some(cell_idx) => {
                let candidates = partition.cells[cell_idx].clone();
                let mut explored: Vec<usize> = Vec::new();
                for v in candidates {
                    if at_root {
                        let rv = self.uf.find(v);
                        if explored.iter().any(|&u| self.uf.find(u) == rv) {
                            continue;
                        }
                        explored.push(v);
                    }
                    let mut child = partition.individualize(v);
                    child.refine(self.g);
                    self.descend(child, false);
                }
            }
        }
    }
}

/// Full canonization: code, canonical labeling, and exact orbits.
pub fn canonize(g: &Graph) -> Canonized {
    let n = g.n();
    if n == 0 {
        return Canonized { code: CanonicalCode { n: 0, words: vec![] }, labeling: vec![], orbits: vec![] };
    }
    let mut root = Partition::unit(n);
    root.refine(g);
    let mut search = Search { g, best: None, uf: UnionFind::new(n) };
    search.descend(root, true);
    let (code, labeling) = search.best.unwrap();
    let mut uf = search.uf;
    let orbits = (0..n).map(|v| uf.find(v)).collect();
    Canonized { code, labeling, orbits }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn relabeled_cycles_share_code() {
        let c5a = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let c5b = Graph::from_edges(5, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]);
        assert_eq!(canonical_form(&c5a), canonical_form(&c5b));
    }

    #[test]
    fn cycle_and_path_differ() {
        assert_ne!(canonical_form(&Graph::cycle(5)), canonical_form(&Graph::path(5)));
    }

    #[test]
    fn vertex_transitive_cycle_has_single_orbit() {
        let c = canonize(&Graph::cycle(6));
        assert!(c.orbits.iter().all(|&r| r == 0));
    }

    #[test]
    fn star_orbits_split_hub_from_leaves() {
        let g = Graph::from_edges(5, &[(0, 4), (1, 4), (2, 4), (3, 4)]);
        let c = canonize(&g);
        assert_eq!(c.orbits[0], c.orbits[1]);
        assert_eq!(c.orbits[0], c.orbits[3]);
        assert_ne!(c.orbits[0], c.orbits[4]);
    }

    #[test]
    fn complete_graph_code_is_all_ones_prefix() {
        let g = Graph::complete(5);
        let c = canonize(&g);
        assert_eq!(c.code, pack_code(&g, &[0, 1, 2, 3, 4]));
        assert!(c.orbits.iter().all(|&r| r == 0));
    }

    /// Brute-force oracle: orbit representative of the labeled-graph class
    /// under all n! permutations, as a set of edge lists.
    fn perm_orbit_classes(n: usize) -> usize {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 1 {
                return vec![vec![0]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for pos in 0..n {
                    let mut q = p.clone();
                    for x in q.iter_mut() {
                        if *x >= pos {
                            *x += 1;
                        }
                    }
                    q.push(pos);
                    out.push(q);
                }
            }
            out
        }
        let all_perms = perms(n);
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect();
        let m = pairs.len();
        let mut reps = std::collections::HashSet::new();
        for bits in 0u32..(1 << m) {
            let edges: Vec<(usize, usize)> =
                (0..m).filter(|&i| bits >> i & 1 == 1).map(|i| pairs[i]).collect();
            let g = Graph::from_edges(n, &edges);
            let mut best: Option<Vec<(usize, usize)>> = None;
            for p in &all_perms {
                let mut relabeled: Vec<(usize, usize)> = g
                    .edges()
                    .iter()
                    .map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v])))
                    .collect();
                relabeled.sort_unstable();
                if best.as_ref().is_none_or(|b| relabeled < *b) {
                    best = Some(relabeled);
                }
            }
            reps.insert(best.unwrap());
        }
        reps.len()
    }

    #[test]
    fn five_vertex_codes_match_permutation_orbit_oracle() {
        // 34 isomorphism classes of 5-vertex graphs, recomputed by the
        // independent permutation-orbit oracle and by canonical_form.
        let oracle = perm_orbit_classes(5);
        let pairs: Vec<(usize, usize)> =
            (0..5).flat_map(|u| ((u + 1)..5).map(move |v| (u, v))).collect();
        let mut codes = std::collections::HashSet::new();
        for bits in 0u32..(1 << 10) {
            let edges: Vec<(usize, usize)> =
                (0..10).filter(|&i| bits >> i & 1 == 1).map(|i| pairs[i]).collect();
            codes.insert(canonical_form(&Graph::from_edges(5, &edges)));
        }
        assert_eq!(oracle, 34);
        assert_eq!(codes.len(), 34);
    }
}
