//! Exact computation of the four domination parameters.
//!
//! Two independent paths: `oracle_minimum` enumerates subsets by ascending
//! cardinality, `solve` runs an iterative-deepening branch-and-bound. They
//! must agree everywhere; the test suite holds them to that.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, SOLVER_MAX_ORDER};

/// Documented cap for the enumeration oracle.
pub const ORACLE_MAX_ORDER: usize = 24;

/// Which of the four set kinds is being asked for.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DomKind {
    /// Dominating set: N[S] = V.
    Dominating,
    /// Total dominating set: every vertex has a neighbor in S.
    TotalDominating,
    /// [1,2]-set: dominating, and every vertex outside S sees at most 2 of S.
    OneTwo,
    /// Total [1,2]-set: every vertex sees 1 or 2 members of S.
    TotalOneTwo,
}

impl DomKind {
    pub const ALL: [DomKind; 4] =
        [DomKind::Dominating, DomKind::TotalDominating, DomKind::OneTwo, DomKind::TotalOneTwo];

    /// Whether members of S are themselves constrained (total kinds).
    fn total(self) -> bool {
        matches!(self, DomKind::TotalDominating | DomKind::TotalOneTwo)
    }

    /// Whether the at-most-2 upper bound applies.
    fn upper_bounded(self) -> bool {
        matches!(self, DomKind::OneTwo | DomKind::TotalOneTwo)
    }

    pub fn label(self) -> &'static str {
        match self {
            DomKind::Dominating => "gamma",
            DomKind::TotalDominating => "gamma_t",
            DomKind::OneTwo => "gamma_12",
            DomKind::TotalOneTwo => "gamma_t12",
        }
    }
}

/// A domination parameter value; `Infinite` means no qualifying set exists.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DomValue {
    Finite(usize),
    Infinite,
}

impl DomValue {
    pub fn is_finite(&self) -> bool {
        matches!(self, DomValue::Finite(_))
    }

    pub fn finite(&self) -> Option<usize> {
        match self {
            DomValue::Finite(k) => Some(*k),
            DomValue::Infinite => None,
        }
    }
}

impl PartialOrd for DomValue {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DomValue {
    /// `Infinite` compares above every finite value.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        match (self, other) {
            (DomValue::Finite(a), DomValue::Finite(b)) => a.cmp(b),
            (DomValue::Finite(_), DomValue::Infinite) => std::cmp::Ordering::Less,
            (DomValue::Infinite, DomValue::Finite(_)) => std::cmp::Ordering::Greater,
            (DomValue::Infinite, DomValue::Infinite) => std::cmp::Ordering::Equal,
        }
    }
}

impl std::fmt::Display for DomValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DomValue::Finite(k) => write!(f, "{k}"),
            DomValue::Infinite => write!(f, "infinity"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SolveResult {
    pub value: DomValue,
    /// Lexicographically smallest minimum set when the value is finite.
    pub witness: Option<VertexSet>,
    pub nodes_explored: u64,
}

pub fn is_dominating(g: &Graph, s: &VertexSet) -> bool {
    is_valid_set(g, s, DomKind::Dominating)
}

pub fn is_total_dominating(g: &Graph, s: &VertexSet) -> bool {
    is_valid_set(g, s, DomKind::TotalDominating)
}

pub fn is_12_set(g: &Graph, s: &VertexSet) -> bool {
    is_valid_set(g, s, DomKind::OneTwo)
}

pub fn is_total_12_set(g: &Graph, s: &VertexSet) -> bool {
    is_valid_set(g, s, DomKind::TotalOneTwo)
}

/// Checks the defining constraints of `kind` for `s` by direct scan.
pub fn is_valid_set(g: &Graph, s: &VertexSet, kind: DomKind) -> bool {
    for v in 0..g.n() {
        let in_s = s.contains(v);
        let c = (g.row(v) & s.bits()).count_ones();
        if kind.total() || !in_s {
            if c < 1 {
                return false;
            }
            if kind.upper_bounded() && c > 2 {
                return false;
            }
        }
    }
    true
}

fn check_order(n: usize, cap: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Parameter("domination parameters are defined for order >= 1".into()));
    }
    if n > cap {
        return Err(Error::OrderTooLarge(n, cap));
    }
    Ok(())
}

/// Reference oracle: ascending cardinality, all subsets of each size in
/// lexicographic order, first hit wins (hence minimal and lex-smallest).
pub fn oracle_minimum(g: &Graph, kind: DomKind) -> Result<SolveResult> {
    let n = g.n();
    check_order(n, ORACLE_MAX_ORDER)?;
    let mut nodes = 0u64;
    for k in 1..=n {
        let mut hit: Option<VertexSet> = None;
        combinations(n, k, &mut |idx| {
            nodes += 1;
            let s = VertexSet::from_iter(n, idx.iter().copied());
            if is_valid_set(g, &s, kind) {
                hit = Some(s);
                false
            } else {
                true
            }
        });
        if let Some(s) = hit {
            return Ok(SolveResult { value: DomValue::Finite(k), witness: Some(s), nodes_explored: nodes });
        }
    }
    Ok(SolveResult { value: DomValue::Infinite, witness: None, nodes_explored: nodes })
}

/// Branch-and-bound fast path. Same contract as `oracle_minimum`, but caps
/// at order 64 and prunes:
///  - a vertex whose last candidate dominator is decided away,
///  - more than two selected neighbors where the [1,2] bound applies,
///  - partial size plus covering lower bound exceeding the target size.
pub fn solve(g: &Graph, kind: DomKind) -> Result<SolveResult> {
    let n = g.n();
    check_order(n, SOLVER_MAX_ORDER)?;

    // isolated vertices: total kinds have no qualifying set at all
    if kind.total() && (0..n).any(|v| g.degree(v) == 0) {
        return Ok(SolveResult { value: DomValue::Infinite, witness: None, nodes_explored: 0 });
    }

    let max_deg = (0..n).map(|v| g.degree(v)).max().unwrap_or(0);
    let cover = if kind.total() { max_deg } else { max_deg + 1 };

    // last decision index at which vertex u's lower-bound constraint settles
    let mut finalize_at: Vec<Vec<usize>> = vec![Vec::new(); n];
    for u in 0..n {
        let mut last = if kind.total() { None } else { Some(u) };
        for v in g.neighborhood(u).iter() {
            last = Some(last.map_or(v, |l: usize| l.max(v)));
        }
        if let Some(l) = last {
            finalize_at[l].push(u);
        }
    }

    let mut ctx = Search {
        g,
        kind,
        cover: cover.max(1),
        finalize_at,
        target: 0,
        in_set: 0,
        c_in: vec![0u8; n],
        selected: 0,
        nodes: 0,
    };

    let lower = n.div_ceil(ctx.cover);
    for k in lower.max(1)..=n {
        ctx.target = k;
        if ctx.dfs(0) {
            let s = VertexSet::from_bits(ctx.in_set, n);
            debug_assert!(is_valid_set(g, &s, kind));
            return Ok(SolveResult {
                value: DomValue::Finite(k),
                witness: Some(s),
                nodes_explored: ctx.nodes,
            });
        }
    }
    Ok(SolveResult { value: DomValue::Infinite, witness: None, nodes_explored: ctx.nodes })
}

struct Search<'a> {
    g: &'a Graph,
    kind: DomKind,
    cover: usize,
    finalize_at: Vec<Vec<usize>>,
    target: usize,
    in_set: u128,
    c_in: Vec<u8>,
    selected: usize,
    nodes: u64,
}

impl Search<'_> {
    /// Looks for a qualifying set of size exactly `target`, deciding vertices
    /// in index order with the include branch first, so the first full
    /// assignment found is the lexicographically smallest witness.
    fn dfs(&mut self, pos: usize) -> bool {
        let n = self.g.n();
        self.nodes += 1;
        if pos == n {
            return true;
        }
        if self.selected + (n - pos) < self.target {
            return false;
        }
        // covering lower bound on the vertices already out of candidates
        let mut deficit = 0usize;
        for u in 0..n {
            if self.c_in[u] == 0 {
                let settled = if self.kind.total() {
                    true
                } else {
                    u < pos && self.in_set >> u & 1 == 0
                };
                if settled {
                    deficit += 1;
                }
            }
        }
        if self.selected + deficit.div_ceil(self.cover) > self.target {
            return false;
        }

        // include branch
        if self.selected < self.target && self.try_include(pos) {
            return true;
        }
        // exclude branch
        if self.kind == DomKind::OneTwo && self.c_in[pos] > 2 {
            // pos would sit outside S with three selected neighbors
            return false;
        }
        if !self.finalize_ok(pos) {
            return false;
        }
        self.dfs(pos + 1)
    }

    fn try_include(&mut self, pos: usize) -> bool {
        let nbrs: Vec<usize> = self.g.neighborhood(pos).to_vec();
        let mut ok = true;
        for &u in &nbrs {
            self.c_in[u] += 1;
            if self.kind.upper_bounded() && self.c_in[u] == 3 {
                match self.kind {
                    DomKind::TotalOneTwo => ok = false,
                    DomKind::OneTwo => {
                        // only vertices settled outside S are bounded
                        if u < pos && self.in_set >> u & 1 == 0 {
                            ok = false;
                        }
                    }
                    _ => unreachable!(),
                }
            }
        }
        self.in_set |= 1 << pos;
        self.selected += 1;
        let found = ok && self.finalize_ok(pos) && self.dfs(pos + 1);
        if !found {
            self.in_set &= !(1u128 << pos);
            self.selected -= 1;
            for &u in &nbrs {
                self.c_in[u] -= 1;
            }
        }
        found
    }

    /// Lower-bound constraints that become final once `pos` is decided.
    fn finalize_ok(&self, pos: usize) -> bool {
        for &u in &self.finalize_at[pos] {
            if self.c_in[u] == 0 && (self.kind.total() || self.in_set >> u & 1 == 0) {
                return false;
            }
        }
        true
    }
}

/// Minimum dominating set in which every member keeps a private neighbor
/// outside the set. Existence is guaranteed for isolate-free graphs; running
/// out of candidates is reported as a theorem violation, never fabricated.
pub fn min_dominating_with_private(g: &Graph) -> Result<VertexSet> {
    let n = g.n();
    check_order(n, ORACLE_MAX_ORDER)?;
    if (0..n).any(|v| g.degree(v) == 0) {
        return Err(Error::Parameter("graph has an isolated vertex".into()));
    }
    let gamma = oracle_minimum(g, DomKind::Dominating)?
        .value
        .finite()
        .expect("domination number is always finite");
    let mut found: Option<VertexSet> = None;
    combinations(n, gamma, &mut |idx| {
        let d = VertexSet::from_iter(n, idx.iter().copied());
        if !is_dominating(g, &d) {
            return true;
        }
        let all_private = idx.iter().all(|&v| {
            let pri = g.private_neighbors(v, &d).expect("v is in d");
            !pri.difference(&d).is_empty()
        });
        if all_private {
            found = Some(d);
            false
        } else {
            true
        }
    });
    found.ok_or(Error::TheoremViolation)
}

/// Every minimum set of the given kind, in lexicographic order; empty when
/// no qualifying set exists. Subset enumeration, so oracle-scale only.
pub fn all_minimum_sets(g: &Graph, kind: DomKind) -> Result<Vec<VertexSet>> {
    let n = g.n();
    check_order(n, ORACLE_MAX_ORDER)?;
    let min = match oracle_minimum(g, kind)?.value {
        DomValue::Finite(k) => k,
        DomValue::Infinite => return Ok(Vec::new()),
    };
    let mut out = Vec::new();
    combinations(n, min, &mut |idx| {
        let s = VertexSet::from_iter(n, idx.iter().copied());
        if is_valid_set(g, &s, kind) {
            out.push(s);
        }
        true
    });
    Ok(out)
}

/// Calls `f` on each k-combination of 0..n in lexicographic order until it
/// returns false.
fn combinations(n: usize, k: usize, f: &mut impl FnMut(&[usize]) -> bool) {
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return;
    }
    loop {
        if !f(&idx) {
            return;
        }
        let mut i = k;
        let mut advanced = false;
        while i > 0 {
            i -= 1;
            if idx[i] != i + n - k {
                idx[i] += 1;
                for j in (i + 1)..k {
                    idx[j] = idx[j - 1] + 1;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            return;
        }
    }
}
