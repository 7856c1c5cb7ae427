//! Canonical labeling and isomorphism testing for small graphs.
//!
//! Partition refinement to an equitable ordered partition, then
//! individualization-refinement search over the first non-singleton cell.
//! The canonical form is the least graph6 bit string over all leaves of the
//! search tree. Two prunings keep the tree small without changing that
//! minimum: twins (vertices with equal neighborhoods apart from each other)
//! inside a cell are interchangeable, and at the root only one vertex per
//! orbit of the automorphisms found so far is explored.

use std::cmp::Ordering;
use std::fmt;

use crate::graph::{bit, bits, full_mask, Graph};

/// Canonical graph6 string. Equal forms iff isomorphic graphs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A canonical relabeling: `labeling[v]` is the new label of vertex `v`,
/// and `graph` is the relabelled graph.
#[derive(Debug, Clone)]
pub struct Canonical {
    pub graph: Graph,
    pub labeling: Vec<usize>,
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    CanonicalForm(canonical_labeling(g).graph.to_graph6())
}

/// Canonical relabelled copy of `g`, usable as a hash key for dedup.
pub fn canonical_graph(g: &Graph) -> Graph {
    canonical_labeling(g).graph
}

pub fn canonical_labeling(g: &Graph) -> Canonical {
    let mut search = Search::new(g);
    let root = vec![g.vertex_mask()];
    search.descend(root, 0);
    let (_, labeling) = search.best.expect("search reaches at least one leaf");
    Canonical {
        graph: g.permuted(&labeling),
        labeling,
    }
}

/// Isomorphism test. On success the witness maps each vertex of `g` to its
/// image in `h`.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.order() != h.order() || g.size() != h.size() || g.degree_sequence() != h.degree_sequence() {
        return None;
    }
    let cg = canonical_labeling(g);
    let ch = canonical_labeling(h);
    if cg.graph != ch.graph {
        return None;
    }
    let mut inv_h = vec![0; h.order()];
    for (v, &l) in ch.labeling.iter().enumerate() {
        inv_h[l] = v;
    }
    Some(cg.labeling.iter().map(|&l| inv_h[l]).collect())
}

/// Checks that `perm` is a bijection carrying edges to edges and non-edges to
/// non-edges.
pub fn is_isomorphism(g: &Graph, h: &Graph, perm: &[usize]) -> bool {
    let n = g.order();
    if h.order() != n || perm.len() != n {
        return false;
    }
    let mut seen = 0u64;
    for &p in perm {
        if p >= n || seen & bit(p) != 0 {
            return false;
        }
        seen |= bit(p);
    }
    (0..n).all(|u| (0..n).all(|v| g.has_edge(u, v) == h.has_edge(perm[u], perm[v])))
}

/// graph6 bit string of `g` relabelled by `labeling`, packed most
/// significant first so that `Vec` ordering is the string ordering.
fn code_of(g: &Graph, labeling: &[usize]) -> Vec<u64> {
    let n = g.order();
    let mut inv = vec![0; n];
    for (v, &l) in labeling.iter().enumerate() {
        inv[l] = v;
    }
    let nbits = n * (n - 1) / 2;
    let mut words = vec![0u64; nbits.div_ceil(64).max(1)];
    let mut k = 0;
    for j in 1..n {
        let row = g.neighbors(inv[j]);
        for i in 0..j {
            if row & bit(inv[i]) != 0 {
                words[k / 64] |= 1u64 << (63 - k % 64);
            }
            k += 1;
        }
    }
    words
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u64>, Vec<usize>)>,
    /// Union-find over vertices, merged along discovered automorphisms.
    orbit: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph) -> Self {
        Search {
            g,
            best: None,
            orbit: (0..g.order()).collect(),
        }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.orbit[v] != v {
            self.orbit[v] = self.orbit[self.orbit[v]];
            v = self.orbit[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.orbit[hi] = lo;
        }
    }

    fn descend(&mut self, mut cells: Vec<u64>, depth: usize) {
        refine(self.g, &mut cells);
        let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
            self.leaf(&cells);
            return;
        };
        let cell = cells[target];
        let mut explored: Vec<usize> = Vec::new();
        for v in bits(cell) {
            if explored.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            if depth == 0 {
                let rv = self.find(v);
                if explored.iter().any(|&u| self.find(u) == rv) {
                    continue;
                }
            }
            explored.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(bit(v));
            child.push(cell & !bit(v));
            child.extend_from_slice(&cells[target + 1..]);
            self.descend(child, depth + 1);
        }
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        let mask = !(bit(u) | bit(v));
        self.g.neighbors(u) & mask == self.g.neighbors(v) & mask
    }

    fn leaf(&mut self, cells: &[u64]) {
        let mut labeling = vec![0; self.g.order()];
        for (pos, c) in cells.iter().enumerate() {
            labeling[c.trailing_zeros() as usize] = pos;
        }
        let code = code_of(self.g, &labeling);
        let ord = match &self.best {
            None => Ordering::Less,
            Some((best, _)) => code.cmp(best),
        };
        match ord {
            Ordering::Less => self.best = Some((code, labeling)),
            Ordering::Equal => {
                // same graph from two labelings: best^-1 . labeling is an automorphism
                let best_lab = self.best.as_ref().unwrap().1.clone();
                let mut inv = vec![0; best_lab.len()];
                for (v, &l) in best_lab.iter().enumerate() {
                    inv[l] = v;
                }
                for v in 0..labeling.len() {
                    self.union(v, inv[labeling[v]]);
                }
            }
            Ordering::Greater => {}
        }
    }
}

/// Refine an ordered partition until equitable. Each cell is split by the
/// number of neighbors in a splitter cell; fragments are ordered by that
/// count, so the result depends only on the graph and the input partition.
pub(crate) fn refine(g: &Graph, cells: &mut Vec<u64>) {
    let mut changed = true;
    while changed {
        changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter = cells[s];
            let mut i = 0;
            let mut split_any = false;
            while i < cells.len() {
                let cell = cells[i];
                if cell.count_ones() == 1 {
                    i += 1;
                    continue;
                }
                let mut groups: Vec<(u32, u64)> = Vec::new();
                for v in bits(cell) {
                    let c = (g.neighbors(v) & splitter).count_ones();
                    match groups.iter_mut().find(|(k, _)| *k == c) {
                        Some((_, m)) => *m |= bit(v),
                        None => groups.push((c, bit(v))),
                    }
                }
                if groups.len() > 1 {
                    groups.sort_unstable_by_key(|&(k, _)| k);
                    let len = groups.len();
                    cells.splice(i..=i, groups.into_iter().map(|(_, m)| m));
                    i += len;
                    split_any = true;
                } else {
                    i += 1;
                }
            }
            if split_any {
                changed = true;
                break;
            }
            s += 1;
        }
    }
    debug_assert_eq!(cells.iter().fold(0, |a, c| a | c), full_mask(g.order()));
}
