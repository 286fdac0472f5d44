//! Canonical forms and isomorph-free enumeration of small graphs.
//!
//! Canonical codes come from minimizing the upper-triangle bit string over
//! all vertex relabelings (with prefix pruning), so two graphs have equal
//! codes exactly when they are isomorphic. Everything here is desk scale:
//! codes up to order 10, internal enumeration up to order 8.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order `canonical_code` accepts.
pub const CANON_MAX_ORDER: usize = 10;
/// Largest order the internal enumerator accepts.
pub const ENUM_MAX_ORDER: usize = 8;

/// Lexicographically minimal upper-triangle bit string over all vertex
/// permutations, packed MSB-first behind a leading order byte.
pub fn canonical_code(g: &Graph) -> Result<Vec<u8>> {
    let n = g.n();
    if n > CANON_MAX_ORDER {
        return Err(Error::OrderTooLarge(n, CANON_MAX_ORDER));
    }
    let bits = canonical_bits(g);
    let nbits = n * n.saturating_sub(1) / 2;
    let mut code = vec![n as u8];
    for byte in 0..nbits.div_ceil(8) {
        code.push((bits >> (56 - 8 * byte)) as u8);
    }
    Ok(code)
}

/// Minimal packed triangle as a u64, bit for pair index 0 at the MSB.
/// Pair index of (i, j) with i < j is j(j-1)/2 + i (column-major), so the
/// string grows one column at a time as vertices are placed.
fn canonical_bits(g: &Graph) -> u64 {
    let n = g.n();
    debug_assert!(n <= CANON_MAX_ORDER);
    if n < 2 {
        return 0;
    }
    let mut best = u64::MAX;
    let mut placed = Vec::with_capacity(n);
    search(g, &mut placed, 0, 0, &mut best);
    best
}

fn search(g: &Graph, placed: &mut Vec<usize>, used: u16, prefix: u64, best: &mut u64) {
    let n = g.n();
    let p = placed.len();
    if p == n {
        if prefix < *best {
            *best = prefix;
        }
        return;
    }
    let prefix_len = p * (p + 1) / 2;
    let mask = if prefix_len == 0 { 0 } else { !0u64 << (64 - prefix_len) };
    for v in 0..n {
        if used >> v & 1 == 1 {
            continue;
        }
        let mut next = prefix;
        let base = p * p.saturating_sub(1) / 2;
        for (q, &u) in placed.iter().enumerate() {
            if g.has_edge(u, v) {
                next |= 1 << (63 - (base + q));
            }
        }
        // a prefix already beaten by the incumbent cannot lead to a minimum
        if next & mask > *best & mask {
            continue;
        }
        placed.push(v);
        search(g, placed, used | 1 << v, next, best);
        placed.pop();
    }
}

/// One representative per isomorphism class of graphs of order `n`
/// (connected or not), built by vertex augmentation with canonical dedup.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > ENUM_MAX_ORDER {
        return Err(Error::OrderTooLarge(n, ENUM_MAX_ORDER));
    }
    if n == 0 {
        return Ok(vec![Graph::empty(0)?]);
    }
    let mut current = vec![Graph::empty(1)?];
    for k in 2..=n {
        let mut seen: HashSet<u64> = HashSet::new();
        let mut next = Vec::new();
        for g in &current {
            for mask in 0u32..(1 << (k - 1)) {
                let mut edges = g.edges();
                for u in 0..(k - 1) {
                    if mask >> u & 1 == 1 {
                        edges.push((u, k - 1));
                    }
                }
                let h = Graph::from_edges(k, &edges)?;
                if seen.insert(canonical_bits(&h)) {
                    next.push(h);
                }
            }
        }
        current = next;
    }
    Ok(current)
}

/// Largest order `enumerate_trees` accepts.
pub const TREE_ENUM_MAX_ORDER: usize = 12;

/// One representative per isomorphism class of trees of order `n`, built by
/// leaf attachment with AHU canonical dedup (cheaper than the generic
/// canonical form, so the cap is higher).
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    if n > TREE_ENUM_MAX_ORDER {
        return Err(Error::OrderTooLarge(n, TREE_ENUM_MAX_ORDER));
    }
    if n == 0 {
        return Ok(vec![Graph::empty(0)?]);
    }
    let mut current = vec![Graph::empty(1)?];
    for k in 2..=n {
        let mut seen: HashSet<Vec<u8>> = HashSet::new();
        let mut next = Vec::new();
        for t in &current {
            for v in 0..(k - 1) {
                let mut edges = t.edges();
                edges.push((v, k - 1));
                let h = Graph::from_edges(k, &edges)?;
                if seen.insert(tree_code(&h)) {
                    next.push(h);
                }
            }
        }
        current = next;
    }
    Ok(current)
}

/// AHU code of a tree: root at the center (minimum over both centers when
/// there are two) and encode each subtree as '(' sorted child codes ')'.
fn tree_code(t: &Graph) -> Vec<u8> {
    debug_assert!(t.is_tree());
    let n = t.n();
    if n == 1 {
        return b"()".to_vec();
    }
    // peel leaves until at most two vertices remain
    let mut deg: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut alive = vec![true; n];
    let mut remaining = n;
    let mut frontier: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    while remaining > 2 {
        let mut nxt = Vec::new();
        for &v in &frontier {
            alive[v] = false;
            remaining -= 1;
            for u in t.neighborhood(v).iter() {
                if alive[u] {
                    deg[u] -= 1;
                    if deg[u] == 1 {
                        nxt.push(u);
                    }
                }
            }
        }
        frontier = nxt;
    }
    let centers: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    centers.iter().map(|&c| rooted_code(t, c, usize::MAX)).min().unwrap()
}

fn rooted_code(t: &Graph, v: usize, parent: usize) -> Vec<u8> {
    let mut kids: Vec<Vec<u8>> =
        t.neighborhood(v).iter().filter(|&u| u != parent).map(|u| rooted_code(t, u, v)).collect();
    kids.sort();
    let mut out = vec![b'('];
    for k in kids {
        out.extend(k);
    }
    out.push(b')');
    out
}

/// One representative per isomorphism class of *connected* graphs of order
/// `n` that satisfy `filter`.
pub fn enumerate_connected_graphs(
    n: usize,
    filter: impl Fn(&Graph) -> bool,
) -> Result<Vec<Graph>> {
    let mut graphs = enumerate_graphs(n)?;
    graphs.retain(|g| g.is_connected() && filter(g));
    Ok(graphs)
}
