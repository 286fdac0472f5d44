//! Immutable simple undirected graphs with bit-set adjacency.
//!
//! Orders up to [`MAX_ORDER`] are representable (one `u128` row per vertex);
//! the exact solvers additionally enforce [`SOLVER_MAX_ORDER`].

use crate::error::{Error, Result};

/// Largest order a `Graph` can hold at all (parsers accept up to this).
pub const MAX_ORDER: usize = 128;
/// Largest order the exact solvers accept.
pub const SOLVER_MAX_ORDER: usize = 64;

/// A set of vertices of a fixed host graph, stored as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: u128,
    host_order: usize,
}

impl VertexSet {
    pub fn empty(host_order: usize) -> Self {
        VertexSet { bits: 0, host_order }
    }

    pub fn full(host_order: usize) -> Self {
        let bits = if host_order == 128 { !0 } else { (1u128 << host_order) - 1 };
        VertexSet { bits, host_order }
    }

    pub fn from_bits(bits: u128, host_order: usize) -> Self {
        debug_assert!(host_order == 128 || bits >> host_order == 0);
        VertexSet { bits, host_order }
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(host_order: usize, verts: I) -> Self {
        let mut s = Self::empty(host_order);
        for v in verts {
            s.insert(v);
        }
        s
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    pub fn host_order(&self) -> usize {
        self.host_order
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.host_order, "vertex {v} out of range for order {}", self.host_order);
        self.bits |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.bits &= !(1u128 << v);
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.host_order && self.bits >> v & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet { bits: self.bits | other.bits, host_order: self.host_order }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet { bits: self.bits & other.bits, host_order: self.host_order }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet { bits: self.bits & !other.bits, host_order: self.host_order }
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let bits = self.bits;
        (0..self.host_order).filter(move |v| bits >> v & 1 == 1)
    }

    /// Sorted vertex indices, handy for fixtures and JSON output.
    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "VertexSet{:?}", self.to_vec())
    }
}

/// Immutable simple undirected graph. Rows are symmetric and loop-free.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u128>,
}

impl Graph {
    /// Builds a graph from an edge list; duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge(n, MAX_ORDER));
        }
        let mut adj = vec![0u128; n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::EdgeOutOfRange(u, v, n));
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { n, adj })
    }

    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge(n, MAX_ORDER));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn row(&self, v: usize) -> u128 {
        self.adj[v]
    }

    pub fn neighborhood(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[v], self.n)
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[v] | 1 << v, self.n)
    }

    /// `pri(v, S) = N[v] \ N[S \ {v}]`: the part of `N[v]` dominated by `v`
    /// alone among the members of `S`. Requires `v` to be in `S`.
    pub fn private_neighbors(&self, v: usize, s: &VertexSet) -> Result<VertexSet> {
        if !s.contains(v) {
            return Err(Error::Contract(format!("private_neighbors: vertex {v} not in S")));
        }
        let mut dominated_by_rest = 0u128;
        for u in s.iter() {
            if u != v {
                dominated_by_rest |= self.adj[u] | 1 << u;
            }
        }
        Ok(VertexSet::from_bits((self.adj[v] | 1 << v) & !dominated_by_rest, self.n))
    }

    /// Induced subgraph on `s` plus the map from new indices back to the host.
    /// New vertex `i` is the `i`-th smallest member of `s`.
    pub fn induced_subgraph(&self, s: &VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = s.to_vec();
        let m = map.len();
        let mut adj = vec![0u128; m];
        for i in 0..m {
            for j in (i + 1)..m {
                if self.has_edge(map[i], map[j]) {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
            }
        }
        (Graph { n: m, adj }, map)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = 1u128;
        loop {
            let mut next = seen;
            for v in 0..self.n {
                if seen >> v & 1 == 1 {
                    next |= self.adj[v];
                }
            }
            if next == seen {
                break;
            }
            seen = next;
        }
        seen.count_ones() as usize == self.n
    }

    /// `(minimum degree, maximum degree)`; requires at least one vertex.
    pub fn degree_stats(&self) -> (usize, usize) {
        assert!(self.n > 0, "degree_stats on the empty graph");
        let degs = (0..self.n).map(|v| self.degree(v));
        let min = degs.clone().min().unwrap();
        let max = degs.max().unwrap();
        (min, max)
    }

    pub fn is_tree(&self) -> bool {
        self.n > 0 && self.is_connected() && self.edge_count() == self.n - 1
    }

    pub fn leaves(&self) -> VertexSet {
        VertexSet::from_iter(self.n, (0..self.n).filter(|&v| self.degree(v) == 1))
    }

    pub fn support_vertices(&self) -> VertexSet {
        let leaves = self.leaves();
        VertexSet::from_iter(
            self.n,
            (0..self.n).filter(|&v| !self.neighborhood(v).intersection(&leaves).is_empty()),
        )
    }

    /// A caterpillar is a tree whose leaf-deleted remainder is a (possibly
    /// empty or single-vertex) path. Non-trees return false.
    pub fn is_caterpillar(&self) -> bool {
        if !self.is_tree() {
            return false;
        }
        let non_leaves = VertexSet::full(self.n).difference(&self.leaves());
        let (spine, _) = self.induced_subgraph(&non_leaves);
        spine.is_path()
    }

    /// True for the empty graph, K1, and any path P_n.
    pub fn is_path(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        if !self.is_connected() || self.edge_count() != self.n - 1 {
            return false;
        }
        (0..self.n).all(|v| self.degree(v) <= 2)
    }

    pub fn is_cycle(&self) -> bool {
        self.n >= 3 && self.is_connected() && (0..self.n).all(|v| self.degree(v) == 2)
    }

    /// No four vertices induce a P4 (quadruple enumeration; desk scale only).
    pub fn is_p4_free(&self) -> bool {
        for a in 0..self.n {
            for b in (a + 1)..self.n {
                for c in (b + 1)..self.n {
                    for d in (c + 1)..self.n {
                        if induces_p4(self, [a, b, c, d]) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    pub fn is_regular(&self, k: usize) -> bool {
        (0..self.n).all(|v| self.degree(v) == k)
    }

    /// Disjoint union, other's vertices shifted by `self.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge(n, MAX_ORDER));
        }
        let mut adj = vec![0u128; n];
        adj[..self.n].copy_from_slice(&self.adj);
        for v in 0..other.n {
            adj[self.n + v] = other.adj[v] << self.n;
        }
        Ok(Graph { n, adj })
    }
}

fn induces_p4(g: &Graph, vs: [usize; 4]) -> bool {
    // check every ordering of the quadruple for the path pattern a-b-c-d
    const PERMS: [[usize; 4]; 12] = [
        [0, 1, 2, 3], [0, 1, 3, 2], [0, 2, 1, 3], [0, 2, 3, 1], [0, 3, 1, 2], [0, 3, 2, 1],
        [1, 0, 2, 3], [1, 0, 3, 2], [1, 2, 0, 3], [2, 0, 1, 3], [2, 1, 0, 3], [3, 0, 1, 2],
    ];
    for p in PERMS {
        let [a, b, c, d] = [vs[p[0]], vs[p[1]], vs[p[2]], vs[p[3]]];
        if g.has_edge(a, b)
            && g.has_edge(b, c)
            && g.has_edge(c, d)
            && !g.has_edge(a, c)
            && !g.has_edge(a, d)
            && !g.has_edge(b, d)
        {
            return true;
        }
    }
    false
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
