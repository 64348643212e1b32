//! Simple undirected graphs on the vertex set `0..n`.
//!
//! Adjacency is stored as one bitset row per vertex. Values are immutable
//! once built; every operation that "changes" a graph returns a new one.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(WORD).max(1)
}

/// A simple undirected graph with dense vertex labels `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    edges: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        Graph { n, words, edges: 0, adj: vec![0; n * words] }
    }

    /// The complete graph `K_k`.
    pub fn complete(k: usize) -> Self {
        let mut g = Graph::empty(k);
        for u in 0..k {
            for v in (u + 1)..k {
                g.insert(u, v);
            }
        }
        g
    }

    /// The star `K_{1,k}` with centre 0.
    pub fn star(k: usize) -> Self {
        let mut g = Graph::empty(k + 1);
        for v in 1..=k {
            g.insert(0, v);
        }
        g
    }

    /// The path on `k` vertices, `0 - 1 - ... - (k-1)`.
    pub fn path(k: usize) -> Self {
        let mut g = Graph::empty(k);
        for v in 1..k {
            g.insert(v - 1, v);
        }
        g
    }

    /// The cycle on `k >= 3` vertices.
    pub fn cycle(k: usize) -> Self {
        let mut g = Graph::path(k);
        if k >= 3 {
            g.insert(0, k - 1);
        }
        g
    }

    /// Builds a graph from an edge list. Edges may be given in either
    /// orientation; self-loops, out-of-range endpoints and repeated edges are
    /// rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if g.has_edge(u, v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.insert(u, v);
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.edges
    }

    pub(crate) fn check_vertex(&self, x: usize) -> Result<()> {
        if x < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: x, n: self.n })
        }
    }

    #[inline]
    pub(crate) fn row(&self, u: usize) -> &[u64] {
        &self.adj[u * self.words..(u + 1) * self.words]
    }

    /// Adds `uv`. Callers guarantee `u != v`, both in range, and `uv` absent.
    pub(crate) fn insert(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n && !self.has_edge(u, v));
        self.adj[u * self.words + v / WORD] |= 1 << (v % WORD);
        self.adj[v * self.words + u / WORD] |= 1 << (u % WORD);
        self.edges += 1;
    }

    /// Whether `uv` is an edge. Out-of-range vertices are never adjacent.
    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && (self.adj[u * self.words + v / WORD] >> (v % WORD)) & 1 == 1
    }

    /// Degree of `x`; panics if `x` is out of range.
    #[inline]
    pub fn deg(&self, x: usize) -> usize {
        self.row(x).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Iterates the neighbours of `x` in ascending order; panics if `x` is
    /// out of range.
    pub fn neighbor_iter(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(x).iter().enumerate().flat_map(|(i, &w)| BitIter(w).map(move |b| i * WORD + b))
    }

    /// Size of `N(u) ∩ N(v)`.
    pub fn common_neighbor_count(&self, u: usize, v: usize) -> usize {
        self.row(u).iter().zip(self.row(v)).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    /// Open neighbourhood `N(x)`, ascending.
    pub fn neighbors(&self, x: usize) -> Result<Vec<usize>> {
        self.check_vertex(x)?;
        Ok(self.neighbor_iter(x).collect())
    }

    /// Closed neighbourhood `N[x] = N(x) ∪ {x}`, ascending.
    pub fn closed_neighbors(&self, x: usize) -> Result<Vec<usize>> {
        let mut out = self.neighbors(x)?;
        let pos = out.partition_point(|&y| y < x);
        out.insert(pos, x);
        Ok(out)
    }

    pub fn degree(&self, x: usize) -> Result<usize> {
        self.check_vertex(x)?;
        Ok(self.deg(x))
    }

    /// Number of neighbours of `x` inside `set`. Repeated entries of `set`
    /// count once.
    pub fn degree_in(&self, x: usize, set: &[usize]) -> Result<usize> {
        self.check_vertex(x)?;
        let mut mask = vec![0u64; self.words];
        for &s in set {
            self.check_vertex(s)?;
            mask[s / WORD] |= 1 << (s % WORD);
        }
        Ok(self.row(x).iter().zip(&mask).map(|(a, b)| (a & b).count_ones() as usize).sum())
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|x| self.deg(x)).collect()
    }

    pub fn is_isolated(&self, x: usize) -> bool {
        self.row(x).iter().all(|&w| w == 0)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        (0..self.n).any(|x| self.is_isolated(x))
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbor_iter(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Non-adjacent pairs `(x, y)` with `x < y`, in lexicographic order.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |x| ((x + 1)..self.n).filter(move |&y| !self.has_edge(x, y)).map(move |y| (x, y)))
    }

    /// `G + xy`.
    pub fn with_edge(&self, x: usize, y: usize) -> Result<Graph> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        if x == y {
            return Err(Error::SelfLoop(x));
        }
        if self.has_edge(x, y) {
            return Err(Error::DuplicateEdge(x.min(y), x.max(y)));
        }
        let mut g = self.clone();
        g.insert(x, y);
        Ok(g)
    }

    /// Appends the vertices of `other` above this graph's, with the edges of
    /// both and, when `join` is set, every cross edge.
    fn combine(&self, other: &Graph, join: bool) -> Graph {
        let off = self.n;
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.insert(u, v);
        }
        for (u, v) in other.edges() {
            g.insert(u + off, v + off);
        }
        if join {
            for u in 0..self.n {
                for v in 0..other.n {
                    g.insert(u, v + off);
                }
            }
        }
        g
    }

    /// Disjoint union; `other`'s vertex `i` becomes `self.order() + i`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        self.combine(other, false)
    }

    /// Join `self ∨ other`: the disjoint union plus all cross edges. This
    /// graph's vertices keep their labels.
    pub fn join(&self, other: &Graph) -> Graph {
        self.combine(other, true)
    }

    /// Appends an isolated vertex with label `n`.
    pub fn add_isolated(&self) -> Graph {
        self.disjoint_union(&Graph::empty(1))
    }

    /// Appends vertex `n` adjacent to every existing vertex.
    pub fn add_dominating(&self) -> Graph {
        self.combine(&Graph::empty(1), true)
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation of
    /// `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::invalid("permutation length differs from vertex count"));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            self.check_vertex(p)?;
            if core::mem::replace(&mut seen[p], true) {
                return Err(Error::invalid("relabelling is not a permutation"));
            }
        }
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.insert(perm[u], perm[v]);
        }
        Ok(g)
    }

    /// Subgraph induced by `keep`, relabelled `0..keep.len()` in the given
    /// order.
    pub fn induced(&self, keep: &[usize]) -> Result<Graph> {
        for &x in keep {
            self.check_vertex(x)?;
        }
        let mut g = Graph::empty(keep.len());
        for i in 0..keep.len() {
            for j in (i + 1)..keep.len() {
                if keep[i] == keep[j] {
                    return Err(Error::invalid("repeated vertex in induced subgraph"));
                }
                if self.has_edge(keep[i], keep[j]) {
                    g.insert(i, j);
                }
            }
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}
