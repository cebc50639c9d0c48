//! Small simple graphs stored as adjacency bitmasks.

use crate::error::{Error, Result};
use crate::sequence::DegreeSequence;
use serde::{Deserialize, Serialize};

pub const MAX_VERTICES: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

/// Wire form: `{"n": 4, "edges": [[0, 1], ...]}` with sorted 0-based pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "graph too large");
        Graph { n, adj: vec![0; n] }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        let all = full_mask(n);
        for v in 0..n {
            g.adj[v] = all & !(1u64 << v);
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::InvalidGraph(format!("{n} vertices exceeds {MAX_VERTICES}")));
        }
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge ({u},{v}) out of range")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at {u}")));
            }
            if g.has_edge(u, v) {
                return Err(Error::InvalidGraph(format!("repeated edge ({u},{v})")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::new(self.degrees())
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.adj[u] >> (u + 1)) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() * 2 == self.n * self.n.saturating_sub(1)
    }

    pub fn complement(&self) -> Graph {
        let all = full_mask(self.n);
        Graph { n: self.n, adj: (0..self.n).map(|v| all & !self.adj[v] & !(1u64 << v)).collect() }
    }

    /// Disjoint union; `other`'s vertices are renumbered after ours.
    pub fn union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        assert!(n <= MAX_VERTICES, "graph too large");
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|a| a << self.n));
        Graph { n, adj }
    }

    /// Disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.union(other);
        let left = full_mask(self.n);
        let right = full_mask(g.n) & !left;
        for v in 0..self.n {
            g.adj[v] |= right;
        }
        for v in self.n..g.n {
            g.adj[v] |= left;
        }
        g
    }

    /// Number of connected components of the subgraph induced by `mask`.
    pub fn components_in(&self, mask: u64) -> usize {
        let mut rest = mask;
        let mut count = 0;
        while rest != 0 {
            count += 1;
            let mut frontier = rest & rest.wrapping_neg();
            let mut seen = frontier;
            while frontier != 0 {
                let mut next = 0;
                for v in bits(frontier) {
                    next |= self.adj[v];
                }
                next &= mask & !seen;
                seen |= next;
                frontier = next;
            }
            rest &= !seen;
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.components_in(self.vertex_mask()) <= 1
    }

    /// Edges inside the subgraph induced by `mask`.
    pub fn edges_in(&self, mask: u64) -> usize {
        bits(mask).map(|v| (self.adj[v] & mask).count_ones() as usize).sum::<usize>() / 2
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson { n: self.n, edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect() }
    }

    pub fn from_json(json: &GraphJson) -> Result<Graph> {
        let edges: Vec<_> = json.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::from_edges(json.n, &edges)
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = GraphJson::deserialize(d)?;
        Graph::from_json(&raw).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn join_and_union_degrees() {
        // K2 + (E2 u K3): the 7-vertex non-hamiltonian extremal graph
        let g = Graph::complete(2).join(&Graph::empty(2).union(&Graph::complete(3)));
        assert_eq!(g.n(), 7);
        assert_eq!(g.degree_sequence().degrees(), &[2, 2, 4, 4, 4, 6, 6]);
    }

    #[test]
    fn components() {
        let g = Graph::complete(3).union(&Graph::empty(2));
        assert_eq!(g.components_in(g.vertex_mask()), 3);
        assert!(cycle(5).is_connected());
        assert_eq!(cycle(6).components_in(0b110110), 2);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::from_edges(3, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn json_is_sorted_edge_list() {
        let g = Graph::from_edges(4, &[(2, 3), (0, 3), (1, 0)]).unwrap();
        let text = serde_json::to_string(&g).unwrap();
        assert_eq!(text, r#"{"n":4,"edges":[[0,1],[0,3],[2,3]]}"#);
        let back: Graph = serde_json::from_str(&text).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn complement_involution() {
        let g = cycle(5);
        assert_eq!(g.complement().complement(), g);
        assert_eq!(g.complement().edge_count(), 5);
    }
}
