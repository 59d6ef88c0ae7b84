//! Immutable simple undirected graphs with bitset adjacency.
//!
//! Vertex ids are contiguous `0..n` with `n <= 64`, so each adjacency row is
//! one `u64` and neighborhood intersections are single AND instructions.

use crate::error::{Error, Result, MAX_VERTICES};

/// Simple undirected graph. No self-loops, no multi-edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > MAX_VERTICES {
            return Err(Error::SizeCap(n, MAX_VERTICES));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn check_vertex(&self, u: usize) -> Result<()> {
        if u >= self.n {
            return Err(Error::VertexOutOfRange { id: u, n: self.n });
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1 << v) != 0
    }

    /// Neighborhood of `u` as a bitmask.
    pub fn neighbors(&self, u: usize) -> u64 {
        self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones() as usize
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut m = if u + 1 >= 64 {
                0
            } else {
                self.adj[u] & !((1u64 << (u + 1)) - 1)
            };
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                out.push((u, v));
                m &= m - 1;
            }
        }
        out
    }

    /// Graph with vertex `u` of `self` renamed to `perm[u]`.
    pub fn relabeled(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            let mut m = self.adj[u];
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                adj[perm[u]] |= 1 << perm[v];
                m &= m - 1;
            }
        }
        Graph { n: self.n, adj }
    }

    /// Extends by one vertex adjacent to the vertices in `neighborhood`.
    pub fn with_appended_vertex(&self, neighborhood: u64) -> Result<Graph> {
        let n = self.n + 1;
        if n > MAX_VERTICES {
            return Err(Error::SizeCap(n, MAX_VERTICES));
        }
        debug_assert_eq!(neighborhood >> self.n, 0);
        let mut adj = self.adj.clone();
        adj.push(neighborhood);
        let mut m = neighborhood;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            adj[v] |= 1 << self.n;
            m &= m - 1;
        }
        Ok(Graph { n, adj })
    }

    /// True iff a BFS from vertex 0 reaches all vertices.
    pub fn is_connected(&self) -> bool {
        let full = full_mask(self.n);
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            let mut m = frontier;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                next |= self.adj[v];
                m &= m - 1;
            }
            frontier = next & !seen;
            seen |= frontier;
        }
        seen == full
    }

    /// Two-colors the graph, or reports the odd cycle verdict.
    ///
    /// Returns `Ok(None)` when the graph is not bipartite.
    pub fn bipartition(&self) -> Result<Option<Bipartition>> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let mut side = vec![Side::A; self.n];
        let mut seen = 1u64;
        let mut frontier = 1u64;
        let mut current = Side::A;
        while frontier != 0 {
            let next_side = current.other();
            let mut next = 0u64;
            let mut m = frontier;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                // an edge inside the current level closes an odd cycle
                if self.adj[v] & frontier != 0 {
                    return Ok(None);
                }
                next |= self.adj[v];
                m &= m - 1;
            }
            frontier = next & !seen;
            seen |= frontier;
            let mut m = frontier;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                side[v] = next_side;
                m &= m - 1;
            }
            current = next_side;
        }
        Ok(Some(Bipartition { side }))
    }

    /// Parses the plain edge-list text format: a `n m` header line followed
    /// by one `u v` line per edge.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::EdgeList("empty input".into()))?;
        let (n, m) = parse_pair(header)
            .ok_or_else(|| Error::EdgeList(format!("bad header line {header:?}")))?;
        let mut edges = Vec::with_capacity(m);
        for line in lines {
            let (u, v) =
                parse_pair(line).ok_or_else(|| Error::EdgeList(format!("bad edge line {line:?}")))?;
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::EdgeList(format!(
                "header promises {m} edges, found {}",
                edges.len()
            )));
        }
        Graph::from_edges(n, &edges)
    }

    /// Renders the edge-list text format.
    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.n, edges.len());
        for (u, v) in edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    if it.next().is_some() {
        return None;
    }
    Some((a, b))
}

pub fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

impl Side {
    fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

/// A proper 2-coloring: every edge joins an A-vertex to a B-vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    side: Vec<Side>,
}

impl Bipartition {
    pub fn side(&self, u: usize) -> Side {
        self.side[u]
    }

    pub fn side_members(&self, s: Side) -> Vec<usize> {
        (0..self.side.len()).filter(|&u| self.side[u] == s).collect()
    }
}
