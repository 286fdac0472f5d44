//! Deterministic generators for every graph family used by the verifier.
//!
//! Labelings are fixed so repeated runs emit identical graph6 lines:
//! host/clique vertices come first, pendant structure after, in the order
//! documented on each constructor.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

fn param_err(msg: impl Into<String>) -> Error {
    Error::Parameter(msg.into())
}

/// Path P_n with vertices 0..n in path order.
pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(param_err("path requires n >= 1"));
    }
    let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    Graph::from_edges(n, &edges)
}

/// Cycle C_n, n >= 3.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(param_err("cycle requires n >= 3"));
    }
    let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edges.push((n - 1, 0));
    Graph::from_edges(n, &edges)
}

/// Complete graph K_n.
pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(param_err("complete requires n >= 1"));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

/// Complete bipartite K_{a,b}; blocks [0,a) and [a,a+b).
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a < 1 || b < 1 {
        return Err(param_err("complete_bipartite requires a, b >= 1"));
    }
    let mut edges = Vec::new();
    for u in 0..a {
        for v in a..a + b {
            edges.push((u, v));
        }
    }
    Graph::from_edges(a + b, &edges)
}

/// k-corona H∘P_k: one pendant path on k new vertices per host vertex.
/// Host vertices keep their labels; the path for host vertex i occupies
/// |H| + i*k .. |H| + (i+1)*k, ordered by distance from the host.
pub fn corona_path(h: &Graph, k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(param_err("corona_path requires k >= 1"));
    }
    let hn = h.n();
    let n = hn * (k + 1);
    let mut edges = h.edges();
    for i in 0..hn {
        let start = hn + i * k;
        edges.push((i, start));
        for j in 0..k - 1 {
            edges.push((start + j, start + j + 1));
        }
    }
    Graph::from_edges(n, &edges)
}

/// Double k-corona H∘2P_k: two pendant paths on k new vertices each per
/// host vertex. Paths for host vertex i occupy |H| + 2ik .. |H| + 2(i+1)k,
/// first path then second, each ordered by distance from the host.
pub fn double_corona_path(h: &Graph, k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(param_err("double_corona_path requires k >= 1"));
    }
    let hn = h.n();
    let n = hn * (2 * k + 1);
    let mut edges = h.edges();
    for i in 0..hn {
        for side in 0..2 {
            let start = hn + 2 * i * k + side * k;
            edges.push((i, start));
            for j in 0..k - 1 {
                edges.push((start + j, start + j + 1));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Corona H∘K1: one new leaf per host vertex; leaf of vertex i is |H| + i.
pub fn corona_k1(h: &Graph) -> Result<Graph> {
    let hn = h.n();
    if hn < 1 {
        return Err(param_err("corona_k1 requires a nonempty host"));
    }
    let mut edges = h.edges();
    for i in 0..hn {
        edges.push((i, hn + i));
    }
    Graph::from_edges(2 * hn, &edges)
}

/// F_{n,k}: order-n graph with total [1,2]-domination number k, built from a
/// clique K_{n-k} and pendant pairs, split by k mod 4.
///
/// Labels: clique v_1..v_{n-k} at 0..n-k; then w_1.. and w_1'.. blocks; for
/// odd k the final triple w, w', w'' sits at n-3, n-2, n-1.
pub fn family_f_nk(n: usize, k: usize) -> Result<Graph> {
    let bound = 4 * n / 5;
    if k % 2 == 0 {
        if !(10..=bound).contains(&k) {
            return Err(param_err(format!("F_nk with even k requires 10 <= k <= floor(4n/5) = {bound}")));
        }
    } else if !(k >= 10 && k < bound) {
        return Err(param_err(format!("F_nk with odd k requires 10 <= k < floor(4n/5) = {bound}")));
    }
    let m = n - k; // clique size
    let r = k / 4;
    if k % 2 == 1 && m < r + 2 {
        return Err(param_err("F_nk with odd k requires n - k - r >= 2"));
    }
    let mut edges = Vec::new();
    for u in 0..m {
        for v in (u + 1)..m {
            edges.push((u, v));
        }
    }
    // 1-based accessors into the w / w' blocks
    let pairs = if k % 2 == 0 { k / 2 } else { (k - 3) / 2 };
    let w = |i: usize| m + (i - 1);
    let wp = |i: usize| m + pairs + (i - 1);
    let v = |i: usize| i - 1;
    for i in 1..=pairs {
        edges.push((w(i), wp(i)));
    }
    match k % 4 {
        0 => {
            for i in 1..=(r - 1) {
                edges.push((v(i), w(2 * i - 1)));
                edges.push((v(i), w(2 * i)));
            }
            edges.push((v(r), w(2 * r - 1)));
            for j in (r + 1)..=m {
                edges.push((v(j), w(2 * r)));
                edges.push((v(j), wp(2 * r)));
            }
        }
        2 => {
            for i in 1..=r {
                edges.push((v(i), w(2 * i - 1)));
                edges.push((v(i), w(2 * i)));
            }
            for j in (r + 1)..=m {
                edges.push((v(j), w(2 * r + 1)));
                edges.push((v(j), wp(2 * r + 1)));
            }
        }
        parity => {
            // odd k: trailing path w - w' - w''
            let (wl, wmid, wr) = (n - 3, n - 2, n - 1);
            edges.push((wl, wmid));
            edges.push((wmid, wr));
            let top = if parity == 1 { r - 1 } else { r };
            for i in 1..=top {
                edges.push((v(i), w(2 * i - 1)));
                edges.push((v(i), w(2 * i)));
            }
            if parity == 1 {
                edges.push((v(r), w(2 * r - 1)));
            }
            edges.push((v(r + 1), wl));
            edges.push((v(r + 2), wr));
            for j in (r + 3)..=m {
                edges.push((v(j), wmid));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// F_k: order 3k, minimum degree 2, clique K_k threaded through k bridges
/// v_i - w_i - w_i' - v_{i+1} (indices cyclic). Labels: v block 0..k, then
/// w_1..w_k, then w_1'..w_k'.
pub fn family_f_k(k: usize) -> Result<Graph> {
    if k < 4 {
        return Err(param_err("F_k requires k >= 4"));
    }
    let mut edges = Vec::new();
    for u in 0..k {
        for v in (u + 1)..k {
            edges.push((u, v));
        }
    }
    for i in 0..k {
        let (vi, wi, wpi, vnext) = (i, k + i, 2 * k + i, (i + 1) % k);
        edges.push((vi, wi));
        edges.push((wi, wpi));
        edges.push((wpi, vnext));
    }
    Graph::from_edges(3 * k, &edges)
}

/// Even-count core for H_{n,k}: clique K_{nc-kc}, r = (kc-2)/2 two-vertex
/// bridges threaded cyclically through the first r clique vertices, and a
/// dominating tail pair {w, w'} adjacent to every remaining clique vertex.
/// Contributes exactly kc to the total [1,2]-domination number.
fn h_core_edges(edges: &mut Vec<(usize, usize)>, nc: usize, kc: usize) {
    let m = nc - kc;
    let r = (kc - 2) / 2;
    for u in 0..m {
        for v in (u + 1)..m {
            edges.push((u, v));
        }
    }
    let v = |i: usize| i - 1;
    let w = |i: usize| m + (i - 1);
    let wp = |i: usize| m + r + (i - 1);
    for i in 1..=r {
        let next = if i == r { 1 } else { i + 1 };
        edges.push((v(i), w(i)));
        edges.push((w(i), wp(i)));
        edges.push((wp(i), v(next)));
    }
    let (wa, wb) = (nc - 2, nc - 1); // w, w'
    edges.push((wa, wb));
    for j in (r + 1)..=m {
        edges.push((v(j), wa));
        edges.push((v(j), wb));
    }
}

/// H_{n,k}: order n, minimum degree 2, total [1,2]-domination number k.
/// Even k: clique K_{n-k} with r = (k-2)/2 cyclic bridges plus a dominating
/// tail pair. Odd k: the even-style core on n - 5 vertices hitting k - 3,
/// together with a disjoint 5-cycle that contributes the remaining 3.
/// Labels: clique, then w block, w' block, tail pair, then the cycle.
pub fn family_h_nk(n: usize, k: usize) -> Result<Graph> {
    let bound = (2 * n / 3).saturating_sub(1);
    if !(8..=bound).contains(&k) {
        return Err(param_err(format!("H_nk requires 8 <= k <= floor(2n/3)-1 = {bound}")));
    }
    let mut edges = Vec::new();
    if k % 2 == 0 {
        h_core_edges(&mut edges, n, k);
    } else {
        let nc = n - 5;
        h_core_edges(&mut edges, nc, k - 3);
        for i in 0..5 {
            edges.push((nc + i, nc + (i + 1) % 5));
        }
    }
    Graph::from_edges(n, &edges)
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

/// All k-subsets of 0..n in lexicographic order.
fn subsets_lex(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
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
            return out;
        }
    }
}

/// G_{p,k}: K_p plus one degree-k vertex per k-subset of the clique.
/// Clique at 0..p, subset vertices after in lexicographic subset order.
pub fn family_g_pk(p: usize, k: usize) -> Result<Graph> {
    if !(p >= k + 2 && k >= 3) {
        return Err(param_err("G_pk requires p >= k + 2 >= 5"));
    }
    let order = p + binomial(p, k);
    if order > MAX_ORDER {
        return Err(Error::OrderTooLarge(order, MAX_ORDER));
    }
    let mut edges = Vec::new();
    for u in 0..p {
        for v in (u + 1)..p {
            edges.push((u, v));
        }
    }
    for (i, s) in subsets_lex(p, k).iter().enumerate() {
        for &u in s {
            edges.push((p + i, u));
        }
    }
    Graph::from_edges(order, &edges)
}

/// Middle-levels graph G(n;a,b): a-subsets and b-subsets of an n-set,
/// adjacent by containment. a-subsets first, both blocks in lexicographic
/// subset order.
pub fn middle_levels(n: usize, a: usize, b: usize) -> Result<Graph> {
    if !(a < b && b <= n) {
        return Err(param_err("middle_levels requires 0 <= a < b <= n"));
    }
    let ca = binomial(n, a);
    let cb = binomial(n, b);
    let order = ca + cb;
    if order > MAX_ORDER {
        return Err(Error::OrderTooLarge(order, MAX_ORDER));
    }
    let asets = subsets_lex(n, a);
    let bsets = subsets_lex(n, b);
    let mut edges = Vec::new();
    for (i, s) in asets.iter().enumerate() {
        for (j, t) in bsets.iter().enumerate() {
            if s.iter().all(|x| t.contains(x)) {
                edges.push((i, ca + j));
            }
        }
    }
    Graph::from_edges(order, &edges)
}

/// Simple k-regular graph on n vertices via the pairing model: pair up
/// n*k stubs uniformly, restart whenever a loop or multi-edge appears.
/// Deterministic for a fixed seed.
pub fn random_regular(n: usize, k: usize, seed: u64) -> Result<Graph> {
    if n * k % 2 != 0 {
        return Err(param_err("random_regular requires n*k even"));
    }
    if k >= n {
        return Err(param_err("random_regular requires k < n"));
    }
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge(n, MAX_ORDER));
    }
    if k == 0 {
        return Graph::empty(n);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stubs: Vec<usize> = (0..n * k).map(|s| s / k).collect();
    'restart: loop {
        stubs.shuffle(&mut rng);
        let mut edges = Vec::with_capacity(n * k / 2);
        let mut seen = std::collections::HashSet::new();
        for pair in stubs.chunks(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || !seen.insert((u.min(v), u.max(v))) {
                continue 'restart;
            }
            edges.push((u, v));
        }
        return Graph::from_edges(n, &edges);
    }
}

/// Parameters naming one of the generated families.
#[derive(Clone, Debug)]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    CompleteBipartite { a: usize, b: usize },
    CoronaPath { host: Graph, k: usize },
    DoubleCoronaPath { host: Graph, k: usize },
    CoronaK1 { host: Graph },
    FNk { n: usize, k: usize },
    FK { k: usize },
    HNk { n: usize, k: usize },
    GPk { p: usize, k: usize },
    MiddleLevels { n: usize, a: usize, b: usize },
    RandomRegular { n: usize, k: usize, seed: u64 },
}

impl FamilySpec {
    pub fn generate(&self) -> Result<Graph> {
        match self {
            FamilySpec::Path { n } => path(*n),
            FamilySpec::Cycle { n } => cycle(*n),
            FamilySpec::Complete { n } => complete(*n),
            FamilySpec::CompleteBipartite { a, b } => complete_bipartite(*a, *b),
            FamilySpec::CoronaPath { host, k } => corona_path(host, *k),
            FamilySpec::DoubleCoronaPath { host, k } => double_corona_path(host, *k),
            FamilySpec::CoronaK1 { host } => corona_k1(host),
            FamilySpec::FNk { n, k } => family_f_nk(*n, *k),
            FamilySpec::FK { k } => family_f_k(*k),
            FamilySpec::HNk { n, k } => family_h_nk(*n, *k),
            FamilySpec::GPk { p, k } => family_g_pk(*p, *k),
            FamilySpec::MiddleLevels { n, a, b } => middle_levels(*n, *a, *b),
            FamilySpec::RandomRegular { n, k, seed } => random_regular(*n, *k, *seed),
        }
    }
}
