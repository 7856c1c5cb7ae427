//! Immutable simple graphs on at most 64 vertices.
//!
//! Adjacency is stored as one `u64` bitrow per vertex, so neighborhood
//! intersections, degree counts and common-neighbor tests are single word
//! operations. Every other module in the crate works on [`Graph`].

use std::fmt;

use thiserror::Error;

/// Largest supported order.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order must be between 1 and {MAX_ORDER}, got {0}")]
    BadOrder(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    OutOfRange { vertex: usize, order: usize },
    #[error("self loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is not triangle-free")]
    NotTriangleFree,
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("malformed edge list: {0}")]
    MalformedEdgeList(String),
}

/// Iterate over the set bits of a mask, lowest first.
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
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

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline]
pub fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Simple undirected graph on vertices `0..order`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    rows: Vec<u64>,
}

/// Eccentricity bound of a graph; `Infinite` iff the graph is disconnected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphMetrics {
    pub min_degree: usize,
    pub max_degree: usize,
    pub diameter: Diameter,
    pub triangle_free: bool,
    pub edge_count: usize,
}

impl Graph {
    /// Edgeless graph of the given order.
    pub fn empty(order: usize) -> Result<Self, GraphError> {
        if order == 0 || order > MAX_ORDER {
            return Err(GraphError::BadOrder(order));
        }
        Ok(Graph { rows: vec![0; order] })
    }

    /// Build from unordered pairs. Duplicate pairs collapse to one edge.
    pub fn from_edge_list<I>(order: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(order)?;
        for (u, v) in edges {
            for x in [u, v] {
                if x >= order {
                    return Err(GraphError::OutOfRange { vertex: x, order });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.rows[u] |= bit(v);
            g.rows[v] |= bit(u);
        }
        Ok(g)
    }

    /// Build directly from adjacency rows. Caller guarantees symmetry and an
    /// empty diagonal.
    pub(crate) fn from_rows(rows: Vec<u64>) -> Self {
        debug_assert!(!rows.is_empty() && rows.len() <= MAX_ORDER);
        debug_assert!((0..rows.len()).all(|v| rows[v] & bit(v) == 0));
        debug_assert!((0..rows.len())
            .all(|u| bits(rows[u]).all(|v| v < rows.len() && rows[v] & bit(u) != 0)));
        Graph { rows }
    }

    pub fn complete(order: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(order)?;
        let all = full_mask(order);
        for v in 0..order {
            g.rows[v] = all & !bit(v);
        }
        Ok(g)
    }

    pub fn cycle(order: usize) -> Result<Self, GraphError> {
        if order < 3 {
            return Err(GraphError::BadOrder(order));
        }
        Graph::from_edge_list(order, (0..order).map(|i| (i, (i + 1) % order)))
    }

    pub fn path(order: usize) -> Result<Self, GraphError> {
        Graph::from_edge_list(order, (1..order).map(|i| (i - 1, i)))
    }

    /// Complete bipartite graph with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self, GraphError> {
        Graph::from_edge_list(
            a + b,
            (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))),
        )
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] & bit(v) != 0
    }

    /// Neighborhood of `v` as a bitmask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.rows[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.order())
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically. This is the
    /// canonical edge order used for labelings.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.order() {
            for v in bits(self.rows[u] & !full_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.order()).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Relabel: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order());
        let mut rows = vec![0u64; self.order()];
        for u in 0..self.order() {
            let mut r = 0;
            for v in bits(self.rows[u]) {
                r |= bit(perm[v]);
            }
            rows[perm[u]] = r;
        }
        Graph { rows }
    }

    /// Subgraph induced by `vertices`, relabelled `0..len` in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut rows = vec![0u64; vertices.len()];
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate() {
                if self.has_edge(u, v) {
                    rows[i] |= bit(j);
                }
            }
        }
        Graph::from_rows(rows)
    }

    /// Copy with one more vertex adjacent to `neighbors`.
    pub fn with_vertex(&self, neighbors: u64) -> Graph {
        let n = self.order();
        assert!(n < MAX_ORDER);
        debug_assert_eq!(neighbors & !self.vertex_mask(), 0);
        let mut rows = self.rows.clone();
        for v in bits(neighbors) {
            rows[v] |= bit(n);
        }
        rows.push(neighbors);
        Graph { rows }
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Graph {
        assert!(u != v && u < self.order() && v < self.order());
        let mut rows = self.rows.clone();
        rows[u] |= bit(v);
        rows[v] |= bit(u);
        Graph { rows }
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut rows = self.rows.clone();
        rows[u] &= !bit(v);
        rows[v] &= !bit(u);
        Graph { rows }
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        dist[source] = Some(0);
        let mut seen = bit(source);
        let mut frontier = bit(source);
        let mut d = 0;
        while frontier != 0 {
            d += 1;
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.rows[v];
            }
            next &= !seen;
            for v in bits(next) {
                dist[v] = Some(d);
            }
            seen |= next;
            frontier = next;
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0) == self.vertex_mask()
    }

    /// Vertex set of the component containing `v`.
    pub fn component_of(&self, v: usize) -> u64 {
        connected_closure(&self.rows, bit(v), self.vertex_mask())
    }

    pub fn diameter(&self) -> Diameter {
        let mut best = 0;
        for s in 0..self.order() {
            for d in self.distances_from(s) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Diameter::Infinite,
                }
            }
        }
        Diameter::Finite(best)
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges()
            .iter()
            .all(|&(u, v)| self.rows[u] & self.rows[v] == 0)
    }

    pub fn metrics(&self) -> GraphMetrics {
        GraphMetrics {
            min_degree: self.min_degree(),
            max_degree: self.max_degree(),
            diameter: self.diameter(),
            triangle_free: self.is_triangle_free(),
            edge_count: self.size(),
        }
    }

    /// True iff adding any missing edge would create a triangle, i.e. every
    /// non-adjacent pair has a common neighbor.
    pub fn is_maximal_triangle_free(&self) -> Result<bool, GraphError> {
        if !self.is_triangle_free() {
            return Err(GraphError::NotTriangleFree);
        }
        Ok(self.every_nonadjacent_pair_has_common_neighbor())
    }

    pub(crate) fn every_nonadjacent_pair_has_common_neighbor(&self) -> bool {
        let n = self.order();
        for u in 0..n {
            let non = self.vertex_mask() & !self.rows[u] & !full_mask(u + 1);
            for w in bits(non) {
                if self.rows[u] & self.rows[w] == 0 {
                    return false;
                }
            }
        }
        true
    }

    /// Standard graph6 encoding (no trailing newline).
    pub fn to_graph6(&self) -> String {
        let n = self.order();
        let mut out = Vec::with_capacity(4 + (n * n) / 12);
        if n <= 62 {
            out.push(n as u8 + 63);
        } else {
            out.extend_from_slice(&[126, 0, 0, 0]);
            out[1] = ((n >> 12) & 63) as u8 + 63;
            out[2] = ((n >> 6) & 63) as u8 + 63;
            out[3] = (n & 63) as u8 + 63;
        }
        let mut acc = 0u8;
        let mut filled = 0;
        for j in 1..n {
            for i in 0..j {
                acc = (acc << 1) | self.has_edge(i, j) as u8;
                filled += 1;
                if filled == 6 {
                    out.push(acc + 63);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push((acc << (6 - filled)) + 63);
        }
        String::from_utf8(out).expect("graph6 bytes are printable ASCII")
    }

    pub fn from_graph6(text: &str) -> Result<Self, GraphError> {
        let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
        let bad = |msg: &str| GraphError::MalformedGraph6(msg.to_string());
        if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
            return Err(GraphError::MalformedGraph6(format!("byte {b} outside 63..126")));
        }
        let (n, body) = match bytes {
            [] => return Err(bad("empty input")),
            [126, 126, ..] => return Err(bad("order too large")),
            [126, rest @ ..] => {
                if rest.len() < 3 {
                    return Err(bad("truncated long-form header"));
                }
                let n = rest[..3]
                    .iter()
                    .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
                (n, &rest[3..])
            }
            [h, rest @ ..] => ((h - 63) as usize, rest),
        };
        if n == 0 || n > MAX_ORDER {
            return Err(GraphError::BadOrder(n));
        }
        let nbits = n * (n - 1) / 2;
        let need = nbits.div_ceil(6);
        if body.len() != need {
            return Err(GraphError::MalformedGraph6(format!(
                "expected {need} data bytes for order {n}, got {}",
                body.len()
            )));
        }
        let mut g = Graph::empty(n)?;
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                let byte = body[k / 6] - 63;
                if byte & (1 << (5 - k % 6)) != 0 {
                    g.rows[i] |= bit(j);
                    g.rows[j] |= bit(i);
                }
                k += 1;
            }
        }
        Ok(g)
    }

    /// Plain edge-list text: `"n m"` then `m` lines `"u v"`.
    pub fn to_edge_list_text(&self) -> String {
        let edges = self.edges();
        let mut s = format!("{} {}\n", self.order(), edges.len());
        for (u, v) in edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    /// Parse one edge-list block from the start of `text`.
    pub fn from_edge_list_text(text: &str) -> Result<Self, GraphError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let g = parse_edge_list_block(&mut lines)?;
        if lines.next().is_some() {
            return Err(GraphError::MalformedEdgeList("trailing lines".into()));
        }
        Ok(g)
    }
}

/// Read one edge-list block from a line iterator. Used for streams holding
/// several graphs back to back.
pub fn parse_edge_list_block<'a, I>(lines: &mut I) -> Result<Graph, GraphError>
where
    I: Iterator<Item = &'a str>,
{
    let bad = |m: String| GraphError::MalformedEdgeList(m);
    let header = lines.next().ok_or_else(|| bad("missing header".into()))?;
    let nums = parse_pair(header).map_err(bad)?;
    let (n, m) = nums;
    let mut edges = Vec::with_capacity(m);
    for i in 0..m {
        let line = lines
            .next()
            .ok_or_else(|| bad(format!("expected {m} edges, found {i}")))?;
        edges.push(parse_pair(line).map_err(bad)?);
    }
    Graph::from_edge_list(n, edges)
}

fn parse_pair(line: &str) -> Result<(usize, usize), String> {
    let mut it = line.split_whitespace();
    let mut next = || -> Result<usize, String> {
        it.next()
            .ok_or_else(|| format!("expected two integers in {line:?}"))?
            .parse::<usize>()
            .map_err(|e| format!("{e} in {line:?}"))
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(format!("extra tokens in {line:?}"));
    }
    Ok((a, b))
}

/// Vertices reachable from `start` inside `within`.
pub(crate) fn connected_closure(rows: &[u64], start: u64, within: u64) -> u64 {
    let mut seen = start & within;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for v in bits(frontier) {
            next |= rows[v];
        }
        next &= within & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({} {:?})", self.to_graph6(), self.edges())
    }
}
