//! Exhaustive graph invariants. Every routine here enumerates subsets,
//! partitions or edge sets outright; the intended scale is n <= 10.

use crate::graph::{bits, full_mask, Graph};
use crate::rational::{int, Rational};

/// Hamiltonicity and traceability of every induced subgraph, computed once.
#[derive(Clone, Debug)]
pub struct CycleTable {
    n: usize,
    ham: Vec<bool>,
    trace: Vec<bool>,
}

impl CycleTable {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let size = 1usize << n;
        // ends[m]: vertices at which a path from the lowest vertex of m,
        // covering exactly m, can stop
        let mut ends = vec![0u64; size];
        // any[m]: vertices at which some spanning path of m can stop
        let mut any = vec![0u64; size];
        for v in 0..n {
            ends[1 << v] = 1 << v;
            any[1 << v] = 1 << v;
        }
        for m in 1..size {
            let mask = m as u64;
            let low = mask.trailing_zeros();
            let higher = !((1u64 << (low + 1)) - 1);
            let e = ends[m];
            for v in bits(e) {
                for w in bits(g.neighbors(v) & !mask & higher) {
                    ends[m | 1 << w] |= 1 << w;
                }
            }
            let a = any[m];
            for v in bits(a) {
                for w in bits(g.neighbors(v) & !mask) {
                    any[m | 1 << w] |= 1 << w;
                }
            }
        }
        let ham = (0..size)
            .map(|m| {
                let mask = m as u64;
                mask.count_ones() >= 3 && ends[m] & g.neighbors(mask.trailing_zeros() as usize) != 0
            })
            .collect();
        let trace = (0..size).map(|m| m != 0 && any[m] != 0).collect();
        CycleTable { n, ham, trace }
    }

    pub fn is_hamiltonian_on(&self, mask: u64) -> bool {
        self.ham[mask as usize]
    }

    pub fn is_traceable_on(&self, mask: u64) -> bool {
        self.trace[mask as usize]
    }

    pub fn hamiltonian(&self) -> bool {
        self.ham[full_mask(self.n) as usize]
    }

    pub fn traceable(&self) -> bool {
        self.n == 0 || self.trace[full_mask(self.n) as usize]
    }

    /// Lengths `l` in `3..=n` for which the graph has an `l`-cycle.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut seen = vec![false; self.n + 1];
        for (m, &h) in self.ham.iter().enumerate() {
            if h {
                seen[m.count_ones() as usize] = true;
            }
        }
        (3..=self.n).filter(|&l| seen[l]).collect()
    }

    pub fn pancyclic(&self) -> bool {
        self.cycle_lengths().len() == self.n.saturating_sub(2)
    }

    /// `G - X` hamiltonian for every `X` with `|X| <= k`.
    pub fn k_hamiltonian(&self, k: usize) -> bool {
        let full = full_mask(self.n);
        (0..=full).all(|x| x.count_ones() as usize > k || self.ham[(full & !x) as usize])
    }

    /// Smallest number of vertex-disjoint paths covering every vertex.
    pub fn path_cover_number(&self) -> usize {
        let size = 1usize << self.n;
        let mut best = vec![usize::MAX; size];
        best[0] = 0;
        for m in 1..size {
            let low = m & m.wrapping_neg();
            let rest = m ^ low;
            // submasks of `rest`, each joined with the lowest vertex
            let mut sub = rest;
            loop {
                let part = sub | low;
                if self.trace[part] && best[m ^ part] != usize::MAX {
                    best[m] = best[m].min(best[m ^ part] + 1);
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & rest;
            }
        }
        best[size - 1]
    }

    /// Whether the vertex set splits into parts that each carry a spanning cycle.
    pub fn has_cycle_partition(&self) -> bool {
        let size = 1usize << self.n;
        if self.n == 0 {
            return true;
        }
        let mut ok = vec![false; size];
        ok[0] = true;
        for m in 1..size {
            let low = m & m.wrapping_neg();
            let rest = m ^ low;
            let mut sub = rest;
            loop {
                let part = sub | low;
                if self.ham[part] && ok[m ^ part] {
                    ok[m] = true;
                    break;
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & rest;
            }
        }
        ok[size - 1]
    }
}

/// Hamiltonian path between every pair of distinct vertices.
pub fn hamiltonian_connected(g: &Graph) -> bool {
    let n = g.n();
    if n <= 1 {
        return true;
    }
    let size = 1usize << n;
    let full = full_mask(n);
    let mut ends = vec![0u64; size];
    for u in 0..n {
        ends.iter_mut().for_each(|e| *e = 0);
        ends[1 << u] = 1 << u;
        for m in 1..size {
            let e = ends[m];
            if e == 0 {
                continue;
            }
            for v in bits(e) {
                for w in bits(g.neighbors(v) & !(m as u64)) {
                    ends[m | 1 << w] |= 1 << w;
                }
            }
        }
        if ends[full as usize] != full & !(1 << u) {
            return false;
        }
    }
    true
}

/// Every set of vertex-disjoint paths with at most `k` edges lies on a
/// common hamiltonian cycle.
pub fn k_edge_hamiltonian(g: &Graph, k: usize) -> bool {
    let edges = g.edges();
    let index = |u: usize, v: usize| edges.iter().position(|&e| e == (u.min(v), u.max(v))).unwrap();
    let cycles = hamiltonian_cycles(g, &index);
    if cycles.is_empty() {
        return false;
    }
    let mut chosen = Vec::new();
    let mut deg = vec![0u8; g.n()];
    linear_forests_covered(&edges, 0, k, &mut chosen, &mut deg, &cycles)
}

fn hamiltonian_cycles(g: &Graph, index: &dyn Fn(usize, usize) -> usize) -> Vec<u64> {
    let n = g.n();
    let mut out = Vec::new();
    if n < 3 {
        return out;
    }
    // cycles through vertex 0, second vertex below the last to fix orientation
    fn walk(
        g: &Graph,
        index: &dyn Fn(usize, usize) -> usize,
        path: &mut Vec<usize>,
        used: u64,
        emask: u64,
        out: &mut Vec<u64>,
    ) {
        let n = g.n();
        let last = *path.last().unwrap();
        if path.len() == n {
            if g.has_edge(last, 0) && path[1] < last {
                out.push(emask | 1 << index(last, 0));
            }
            return;
        }
        for w in bits(g.neighbors(last) & !used) {
            path.push(w);
            walk(g, index, path, used | 1 << w, emask | 1 << index(last, w), out);
            path.pop();
        }
    }
    walk(g, index, &mut vec![0], 1, 0, &mut out);
    out
}

fn linear_forests_covered(
    edges: &[(usize, usize)],
    from: usize,
    budget: usize,
    chosen: &mut Vec<usize>,
    deg: &mut [u8],
    cycles: &[u64],
) -> bool {
    let mask = chosen.iter().fold(0u64, |m, &e| m | 1 << e);
    if !cycles.iter().any(|&c| c & mask == mask) {
        return false;
    }
    if budget == 0 {
        return true;
    }
    for e in from..edges.len() {
        let (u, v) = edges[e];
        if deg[u] >= 2 || deg[v] >= 2 || creates_cycle(edges, chosen, u, v) {
            continue;
        }
        deg[u] += 1;
        deg[v] += 1;
        chosen.push(e);
        let ok = linear_forests_covered(edges, e + 1, budget - 1, chosen, deg, cycles);
        chosen.pop();
        deg[u] -= 1;
        deg[v] -= 1;
        if !ok {
            return false;
        }
    }
    true
}

fn creates_cycle(edges: &[(usize, usize)], chosen: &[usize], u: usize, v: usize) -> bool {
    // walk the path that starts at u inside the chosen forest
    let mut prev = usize::MAX;
    let mut cur = u;
    loop {
        let next = chosen.iter().map(|&e| edges[e]).find_map(|(a, b)| {
            if a == cur && b != prev {
                Some(b)
            } else if b == cur && a != prev {
                Some(a)
            } else {
                None
            }
        });
        match next {
            Some(w) if w == v => return true,
            Some(w) => {
                prev = cur;
                cur = w;
            }
            None => return false,
        }
    }
}

pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if g.is_complete() {
        return n.saturating_sub(1);
    }
    let full = full_mask(n);
    let mut best = n - 1;
    for s in 0..=full {
        let size = s.count_ones() as usize;
        if size < best && g.components_in(full & !s) >= 2 {
            best = size;
        }
    }
    best
}

pub fn edge_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if n <= 1 {
        return 0;
    }
    let full = full_mask(n);
    let mut best = usize::MAX;
    // sides containing vertex 0, proper and nonempty
    let rest = full & !1;
    let mut sub = rest;
    loop {
        let side = sub | 1;
        if side != full {
            let cut: usize = bits(side).map(|v| (g.neighbors(v) & !side).count_ones() as usize).sum();
            best = best.min(cut);
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & rest;
    }
    best
}

/// Minimum of `|N(S)| / |S|` over nonempty `S` with `N(S) != V`, with one
/// minimizing `S`.
pub fn binding_number(g: &Graph) -> (Rational, u64) {
    let n = g.n();
    let full = full_mask(n);
    let mut best: Option<(Rational, u64)> = None;
    for s in 1..=full {
        let nb = bits(s).fold(0u64, |acc, v| acc | g.neighbors(v));
        if nb == full {
            continue;
        }
        let r = Rational::new(nb.count_ones() as i64, s.count_ones() as i64);
        if best.is_none_or(|(b, _)| r < b) {
            best = Some((r, s));
        }
    }
    best.unwrap_or((int(n as i64 - 1), 0))
}

/// Minimum of `|X| / c(G - X)` over `X` leaving at least two components,
/// with one minimizing `X`. Complete graphs get `n - 1`.
pub fn toughness(g: &Graph) -> (Rational, u64) {
    let n = g.n();
    let full = full_mask(n);
    let mut best: Option<(Rational, u64)> = None;
    for x in 0..=full {
        let c = g.components_in(full & !x);
        if c < 2 {
            continue;
        }
        let r = Rational::new(x.count_ones() as i64, c as i64);
        if best.is_none_or(|(b, _)| r < b) {
            best = Some((r, x));
        }
    }
    best.unwrap_or((int(n as i64 - 1), 0))
}

pub fn max_matching(g: &Graph) -> usize {
    let mut memo = std::collections::HashMap::new();
    matching_on(g, g.vertex_mask(), &mut memo)
}

fn matching_on(g: &Graph, mask: u64, memo: &mut std::collections::HashMap<u64, usize>) -> usize {
    if mask.count_ones() < 2 {
        return 0;
    }
    if let Some(&m) = memo.get(&mask) {
        return m;
    }
    let v = mask.trailing_zeros() as usize;
    let rest = mask & !(1 << v);
    let mut best = matching_on(g, rest, memo);
    for w in bits(g.neighbors(v) & rest) {
        best = best.max(1 + matching_on(g, rest & !(1 << w), memo));
    }
    memo.insert(mask, best);
    best
}

/// Vertices left uncovered by a maximum matching.
pub fn deficiency(g: &Graph) -> usize {
    g.n() - 2 * max_matching(g)
}

/// Spanning `k`-regular subgraph, found by edge-subset backtracking.
pub fn has_k_factor(g: &Graph, k: usize) -> bool {
    let n = g.n();
    if k == 0 {
        return true;
    }
    if (n * k) % 2 == 1 || (0..n).any(|v| g.degree(v) < k) {
        return false;
    }
    let edges = g.edges();
    let mut need = vec![k; n];
    // remaining[v]: undecided edges at v
    let mut remaining: Vec<usize> = g.degrees();
    factor_search(&edges, 0, &mut need, &mut remaining)
}

fn factor_search(edges: &[(usize, usize)], e: usize, need: &mut [usize], remaining: &mut [usize]) -> bool {
    if e == edges.len() {
        return need.iter().all(|&x| x == 0);
    }
    let (u, v) = edges[e];
    remaining[u] -= 1;
    remaining[v] -= 1;
    let mut found = false;
    if need[u] > 0 && need[v] > 0 {
        need[u] -= 1;
        need[v] -= 1;
        if need[u] <= remaining[u] && need[v] <= remaining[v] {
            found = factor_search(edges, e + 1, need, remaining);
        }
        need[u] += 1;
        need[v] += 1;
    }
    if !found && need[u] <= remaining[u] && need[v] <= remaining[v] {
        found = factor_search(edges, e + 1, need, remaining);
    }
    remaining[u] += 1;
    remaining[v] += 1;
    found
}

pub fn independence_number(g: &Graph) -> usize {
    let full = full_mask(g.n());
    (0..=full).filter(|&s| g.edges_in(s) == 0).map(|s| s.count_ones() as usize).max().unwrap_or(0)
}

pub fn clique_number(g: &Graph) -> usize {
    independence_number(&g.complement())
}

/// Fewest parts in a vertex partition whose parts all satisfy `good`.
fn min_partition(n: usize, good: impl Fn(u64) -> bool) -> usize {
    let size = 1usize << n;
    let ok: Vec<bool> = (0..size).map(|m| good(m as u64)).collect();
    let mut best = vec![usize::MAX; size];
    best[0] = 0;
    for m in 1..size {
        let low = m & m.wrapping_neg();
        let rest = m ^ low;
        let mut sub = rest;
        loop {
            let part = sub | low;
            if ok[part] && best[m ^ part] != usize::MAX {
                best[m] = best[m].min(best[m ^ part] + 1);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    best[size - 1]
}

pub fn chromatic_number(g: &Graph) -> usize {
    min_partition(g.n(), |m| g.edges_in(m) == 0)
}

/// Fewest parts each inducing a forest.
pub fn vertex_arboricity(g: &Graph) -> usize {
    min_partition(g.n(), |m| m == 0 || g.edges_in(m) + g.components_in(m) == m.count_ones() as usize)
}
