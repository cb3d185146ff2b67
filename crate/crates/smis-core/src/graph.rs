//! Undirected simple graphs as symmetric bit-matrix adjacency.
//!
//! Vertices are 0-based contiguous integers. A [`Graph`] is immutable after
//! construction: every constructor and combinator returns a fresh value, so
//! graphs can be shared and sent between threads freely.

use thiserror::Error;

/// Index of a vertex, always in `[0, n)` for the owning graph.
pub type VertexId = usize;

/// Hard cap on vertex count. Keeps per-vertex bit rows in small fixed
/// buffers; the missing-subgraph engine is superpolynomial anyway.
pub const MAX_VERTICES: usize = 4096;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has {n} vertices, the cap is {MAX_VERTICES}")]
    TooManyVertices { n: usize },
    #[error("edge ({u}, {v}) has an endpoint out of range for {n} vertices")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop ({v}, {v}) is not allowed")]
    SelfLoop { v: usize },
    #[error("vertex selection contains out-of-range index {v} (n = {n})")]
    SelectionOutOfRange { v: usize, n: usize },
    #[error("vertex selection repeats index {v}")]
    DuplicateSelection { v: usize },
}

/// An explicit list of unordered edges over `n` vertices.
///
/// `normalize` orders each pair as `u < v`, sorts, and drops duplicates;
/// [`Graph::from_edge_list`] accepts unnormalized input and collapses
/// duplicates itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<(VertexId, VertexId)>,
}

impl EdgeList {
    pub fn new(n: usize, edges: Vec<(VertexId, VertexId)>) -> Self {
        EdgeList { n, edges }
    }

    /// Orders endpoints, sorts the list, and removes duplicates.
    pub fn normalize(&mut self) {
        for e in &mut self.edges {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        self.edges.sort_unstable();
        self.edges.dedup();
    }
}

/// Undirected simple graph: no self-loops, no parallel edges.
///
/// Adjacency is stored as one bit row per vertex, `words_per_row` u64 words
/// each. Rows are kept symmetric and the diagonal clear; bits at positions
/// `>= n` are never set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words_per_row: usize,
    rows: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, edges=[", self.n, self.edge_count())?;
        let mut first = true;
        for (u, v) in self.edges() {
            if !first {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
            first = false;
        }
        write!(f, "])")
    }
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let words_per_row = n.div_ceil(64);
        Ok(Graph {
            n,
            words_per_row,
            rows: vec![0u64; n * words_per_row],
        })
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        for u in 0..n {
            for v in 0..u {
                g.set_edge(u, v);
            }
        }
        Ok(g)
    }

    /// Builds a graph from an edge list; duplicate edges collapse.
    pub fn from_edge_list(list: &EdgeList) -> Result<Self, GraphError> {
        Self::from_edges(list.n, &list.edges)
    }

    /// Builds a graph from explicit pairs; duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { v });
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    // Only constructors mutate; never exposed.
    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u < self.n && v < self.n && u != v);
        let w = self.words_per_row;
        self.rows[u * w + v / 64] |= 1u64 << (v % 64);
        self.rows[v * w + u / 64] |= 1u64 << (u % 64);
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        let ones: u32 = self.rows.iter().map(|w| w.count_ones()).sum();
        ones as usize / 2
    }

    /// True iff `u` and `v` are adjacent. Panics if either index is out of
    /// range.
    #[inline]
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        assert!(u < self.n && v < self.n, "vertex index out of range");
        self.adj_unchecked(u, v)
    }

    #[inline(always)]
    pub(crate) fn adj_unchecked(&self, u: usize, v: usize) -> bool {
        (self.rows[u * self.words_per_row + (v >> 6)] >> (v & 63)) & 1 != 0
    }

    /// Bit row of `v`: word `i` holds adjacency bits for vertices
    /// `64*i .. 64*i+63`.
    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words_per_row..(v + 1) * self.words_per_row]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        assert!(v < self.n, "vertex index out of range");
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        let row = self.row(v);
        row.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Disjoint union: `other`'s vertices are shifted by `self.n`; no cross
    /// edges are added.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        let mut g = Graph::empty(n)?;
        for (u, v) in self.edges() {
            g.set_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.set_edge(u + self.n, v + self.n);
        }
        Ok(g)
    }

    /// Induced subgraph on an ordered selection of distinct vertices:
    /// vertex `i` of the result is `vs[i]`, and `result.has_edge(i, j)`
    /// equals `self.has_edge(vs[i], vs[j])`.
    pub fn induced(&self, vs: &[VertexId]) -> Result<Graph, GraphError> {
        let mut seen = vec![0u64; self.n.div_ceil(64).max(1)];
        for &v in vs {
            if v >= self.n {
                return Err(GraphError::SelectionOutOfRange { v, n: self.n });
            }
            let (w, b) = (v / 64, v % 64);
            if seen[w] >> b & 1 != 0 {
                return Err(GraphError::DuplicateSelection { v });
            }
            seen[w] |= 1 << b;
        }
        let mut g = Graph::empty(vs.len())?;
        for i in 0..vs.len() {
            for j in 0..i {
                if self.adj_unchecked(vs[i], vs[j]) {
                    g.set_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// True iff the graph has no edges.
    pub fn is_edgeless(&self) -> bool {
        self.rows.iter().all(|&w| w == 0)
    }
}
