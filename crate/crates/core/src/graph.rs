//! Simple undirected graphs on at most 64 vertices, stored as adjacency
//! bitsets, plus the named families used throughout the crate.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// An undirected simple graph on vertices `0..n`.
///
/// `adj[v]` holds the neighbors of `v`. The adjacency is always symmetric
/// and loop-free; every constructor enforces this.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::domain(format!(
                "graphs are limited to {MAX_VERTICES} vertices, got {n}"
            )));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    /// Builds a graph from an edge list. Duplicate edges are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::domain(format!(
                "edge {u}-{v} out of range for {} vertices",
                self.n
            )));
        }
        if u == v {
            return Err(Error::domain(format!("self-loop at vertex {u}")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Maximum degree of the whole graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|a| a.len()).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// Degree of `v` inside the subgraph induced by `set`.
    pub fn induced_degree(&self, set: VertexSet, v: usize) -> Result<usize> {
        self.check_set(set)?;
        if !set.contains(v) {
            return Err(Error::domain(format!("vertex {v} is not in the set")));
        }
        Ok(self.adj[v].intersection(set).len())
    }

    /// Maximum degree of the subgraph induced by `set`; 0 when `|set| <= 1`.
    ///
    /// Members outside `0..n` are ignored.
    #[inline]
    pub fn max_degree_within(&self, set: VertexSet) -> usize {
        let set = set.intersection(self.vertices());
        set.iter()
            .map(|v| self.adj[v].intersection(set).len())
            .max()
            .unwrap_or(0)
    }

    /// Number of edges with both ends in `set`.
    pub fn edge_count_within(&self, set: VertexSet) -> usize {
        let set = set.intersection(self.vertices());
        set.iter()
            .map(|v| self.adj[v].intersection(set).len())
            .sum::<usize>()
            / 2
    }

    /// Induced degree sequence of `set`.
    pub fn degree_profile(&self, set: VertexSet) -> DegreeProfile {
        let set = set.intersection(self.vertices());
        let degrees: Vec<usize> = set
            .iter()
            .map(|v| self.adj[v].intersection(set).len())
            .collect();
        let max_degree = degrees.iter().copied().max().unwrap_or(0);
        DegreeProfile {
            degrees,
            max_degree,
        }
    }

    /// The subgraph induced by `set`, relabeled to `0..|set|` in ascending
    /// id order. The returned vector maps new ids back to old ones.
    pub fn induced_subgraph(&self, set: VertexSet) -> (Graph, Vec<usize>) {
        let set = set.intersection(self.vertices());
        let map = set.to_vec();
        let mut index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| {
                self.adj[v]
                    .intersection(set)
                    .iter()
                    .map(|u| index[u])
                    .collect()
            })
            .collect();
        (Graph { n: map.len(), adj }, map)
    }

    /// Erdős–Rényi `G(n, p)`.
    pub fn random<R: rand::Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for v in 1..n {
            for u in 0..v {
                if rng.gen_bool(p) {
                    g.add_edge(u, v)?;
                }
            }
        }
        Ok(g)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        check_permutation(perm, self.n)?;
        let mut g = Graph::empty(self.n)?;
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v])?;
        }
        Ok(g)
    }

    /// Complement graph.
    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let adj = (0..self.n)
            .map(|v| all.difference(self.adj[v]).without(v))
            .collect();
        Graph { n: self.n, adj }
    }

    pub(crate) fn check_set(&self, set: VertexSet) -> Result<()> {
        if set.is_subset(self.vertices()) {
            Ok(())
        } else {
            Err(Error::domain(format!(
                "vertex set {set:?} is not contained in 0..{}",
                self.n
            )))
        }
    }

    // --- families ---

    /// Path `0 - 1 - .. - (n-1)`.
    pub fn path(n: usize) -> Result<Graph> {
        if n < 1 {
            return Err(Error::domain("path needs n >= 1"));
        }
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::domain("cycle needs n >= 3"));
        }
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn complete(n: usize) -> Result<Graph> {
        if n < 1 {
            return Err(Error::domain("complete graph needs n >= 1"));
        }
        Ok(Graph::empty(n)?.complement())
    }

    /// `K_{m,n}` with parts `{0..m}` and `{m..m+n}`.
    pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
        if m < 1 || n < 1 {
            return Err(Error::domain("complete bipartite graph needs m, n >= 1"));
        }
        if m + n > MAX_VERTICES {
            return Err(Error::domain(format!(
                "K_{{{m},{n}}} exceeds {MAX_VERTICES} vertices"
            )));
        }
        Graph::from_edges(m + n, (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v))))
    }

    /// Hypercube `Q_d`: vertex ids are the integers whose binary digits are
    /// the coordinates; edges join ids at Hamming distance one.
    pub fn hypercube(d: usize) -> Result<Graph> {
        if d < 1 {
            return Err(Error::domain("hypercube needs dimension >= 1"));
        }
        if d > 6 {
            return Err(Error::domain(format!(
                "Q_{d} exceeds {MAX_VERTICES} vertices"
            )));
        }
        let n = 1usize << d;
        Graph::from_edges(
            n,
            (0..n).flat_map(|x| {
                (0..d)
                    .map(move |i| (x, x ^ (1 << i)))
                    .filter(|&(x, y)| x < y)
            }),
        )
    }
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::domain(format!(
            "order has {} entries, expected {n}",
            perm.len()
        )));
    }
    let mut seen = VertexSet::EMPTY;
    for &v in perm {
        if v >= n || seen.contains(v) {
            return Err(Error::domain(format!(
                "order is not a permutation of 0..{n} (entry {v})"
            )));
        }
        seen.insert(v);
    }
    Ok(())
}

/// Induced degrees of the members of a vertex set, with their maximum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub max_degree: usize,
}
