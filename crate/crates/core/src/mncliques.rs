//! Colored mixed graphs, signed graphs and oriented graphs over a base
//! [`Graph`], with absolute-clique tests and exhaustive labeling searches.
//!
//! An (m, n)-colored mixed graph labels each base edge either with one of
//! `n` edge colors or with one of `m` arc colors plus a direction. It is a
//! clique iff every non-adjacent pair `u, w` is joined by a special 2-path
//! `u v w` (see [`is_special_2path`]).
//!
//! Labelings are mixed-radix words over the base edges in canonical order
//! (the first edge is the most significant digit). For (m, n) the per-edge
//! radix is `2m + n`: digit `2(c-1)` is arc color `c` from the lower to the
//! higher endpoint, `2(c-1)+1` the same arc reversed, and `2m + c - 1` is
//! edge color `c`. Signings use 0 = positive, 1 = negative; orientations use
//! 0 = lower to higher endpoint, 1 = reversed.
//!
//! Searches walk labelings in lexicographic order and return the first that
//! satisfies every pair, so the witness is the lexicographically least one.
//! A pair is checked as soon as every edge it depends on has a digit, which
//! prunes whole subtrees without skipping any candidate.

use std::fmt::{self, Write as _};

use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{bits, full_mask, Graph};

/// Default cap on the size of a labeling space.
pub const DEFAULT_BUDGET: u128 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliqueError {
    #[error("{u} {v} {w} is not a 2-path of the base graph")]
    NotA2Path { u: usize, v: usize, w: usize },
    #[error("labeling space of {space} exceeds budget {budget}")]
    SearchBudget { space: u128, budget: u128 },
    #[error("invalid labeling: {0}")]
    InvalidLabeling(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeLabel {
    /// Undirected edge of color `1..=n`.
    Edge(u8),
    /// Arc of color `1..=m` from `from` to `to`.
    Arc { color: u8, from: usize, to: usize },
}

/// Lookup from vertex pair to canonical edge index.
#[derive(Debug, Clone, PartialEq, Eq)]
struct EdgeIndex {
    n: usize,
    index: Vec<u16>,
}

impl EdgeIndex {
    const NONE: u16 = u16::MAX;

    fn new(g: &Graph) -> Self {
        let n = g.order();
        let mut index = vec![Self::NONE; n * n];
        for (i, (u, v)) in g.edges().into_iter().enumerate() {
            index[u * n + v] = i as u16;
            index[v * n + u] = i as u16;
        }
        EdgeIndex { n, index }
    }

    fn get(&self, u: usize, v: usize) -> Option<usize> {
        match self.index[u * self.n + v] {
            Self::NONE => None,
            i => Some(i as usize),
        }
    }
}

/// Base graph with one label per edge, in canonical edge order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedGraph {
    base: Graph,
    m: usize,
    n: usize,
    labels: Vec<EdgeLabel>,
    index: EdgeIndex,
}

impl MixedGraph {
    pub fn new(base: Graph, m: usize, n: usize, labels: Vec<EdgeLabel>) -> Result<Self, CliqueError> {
        let edges = base.edges();
        let bad = |s: String| Err(CliqueError::InvalidLabeling(s));
        if labels.len() != edges.len() {
            return bad(format!("{} labels for {} edges", labels.len(), edges.len()));
        }
        if !edges.is_empty() && m + n == 0 {
            return bad("no edge or arc types".into());
        }
        for (&(u, v), l) in edges.iter().zip(&labels) {
            match *l {
                EdgeLabel::Edge(c) if c == 0 || c as usize > n => {
                    return bad(format!("edge color {c} outside 1..={n}"))
                }
                EdgeLabel::Arc { color, .. } if color == 0 || color as usize > m => {
                    return bad(format!("arc color {color} outside 1..={m}"))
                }
                EdgeLabel::Arc { from, to, .. } if (from, to) != (u, v) && (from, to) != (v, u) => {
                    return bad(format!("arc {from}->{to} does not match edge {u}-{v}"))
                }
                _ => {}
            }
        }
        let index = EdgeIndex::new(&base);
        Ok(MixedGraph { base, m, n, labels, index })
    }

    /// Decode a digit word (see module docs).
    pub fn from_digits(base: Graph, m: usize, n: usize, digits: &[u8]) -> Result<Self, CliqueError> {
        let edges = base.edges();
        if digits.len() != edges.len() {
            return Err(CliqueError::InvalidLabeling("digit count differs from edge count".into()));
        }
        let labels = edges
            .iter()
            .zip(digits)
            .map(|(&(u, v), &d)| mixed_label(m, u, v, d))
            .collect();
        MixedGraph::new(base, m, n, labels)
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn types(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn labels(&self) -> &[EdgeLabel] {
        &self.labels
    }

    pub fn label(&self, u: usize, v: usize) -> Option<EdgeLabel> {
        self.index.get(u, v).map(|i| self.labels[i])
    }

    /// `u v : E<c>` or `u v : A<c> ->` / `u v : A<c> <-` per edge.
    pub fn witness_lines(&self) -> String {
        let mut s = String::new();
        for (&(u, v), l) in self.base.edges().iter().zip(&self.labels) {
            match *l {
                EdgeLabel::Edge(c) => writeln!(s, "{u} {v} : E{c}"),
                EdgeLabel::Arc { color, from, .. } => {
                    let dir = if from == u { "->" } else { "<-" };
                    writeln!(s, "{u} {v} : A{color} {dir}")
                }
            }
            .unwrap();
        }
        s
    }
}

fn mixed_label(m: usize, u: usize, v: usize, d: u8) -> EdgeLabel {
    let d = d as usize;
    if d < 2 * m {
        let color = (d / 2 + 1) as u8;
        if d % 2 == 0 {
            EdgeLabel::Arc { color, from: u, to: v }
        } else {
            EdgeLabel::Arc { color, from: v, to: u }
        }
    } else {
        EdgeLabel::Edge((d - 2 * m + 1) as u8)
    }
}

/// Whether `u v w` is a special 2-path: one of
///
/// 1. `uv`, `vw` edges of different colors;
/// 2. arcs `u->v` and `v->w`;
/// 3. arcs `v->u` and `w->v`;
/// 4. arcs `u->v` and `w->v` of different colors;
/// 5. arcs `v->u` and `v->w` of different colors;
/// 6. exactly one of `uv`, `vw` an edge.
pub fn is_special_2path(g: &MixedGraph, u: usize, v: usize, w: usize) -> Result<bool, CliqueError> {
    let n = g.base.order();
    let err = CliqueError::NotA2Path { u, v, w };
    if u >= n || v >= n || w >= n || u == w {
        return Err(err);
    }
    let (Some(a), Some(b)) = (g.label(u, v), g.label(v, w)) else {
        return Err(err);
    };
    Ok(special(a, b, u, v))
}

fn special(uv: EdgeLabel, vw: EdgeLabel, u: usize, v: usize) -> bool {
    use EdgeLabel::*;
    match (uv, vw) {
        (Edge(c1), Edge(c2)) => c1 != c2,
        (Edge(_), Arc { .. }) | (Arc { .. }, Edge(_)) => true,
        (Arc { color: c1, from: f1, .. }, Arc { color: c2, from: f2, .. }) => {
            let u_to_v = f1 == u;
            let v_to_w = f2 == v;
            (u_to_v && v_to_w)
                || (!u_to_v && !v_to_w)
                || (u_to_v && !v_to_w && c1 != c2)
                || (!u_to_v && v_to_w && c1 != c2)
        }
    }
}

/// Non-adjacent pairs `(u, w)`, `u < w`.
fn nonadjacent_pairs(g: &Graph) -> impl Iterator<Item = (usize, usize)> + '_ {
    (0..g.order()).flat_map(move |u| {
        let non = g.vertex_mask() & !g.neighbors(u) & !full_mask(u + 1);
        bits(non).map(move |w| (u, w))
    })
}

/// Clique test. On failure returns the first pair (in lexicographic order)
/// with no special 2-path.
pub fn is_mn_clique(g: &MixedGraph) -> Result<(), (usize, usize)> {
    let base = &g.base;
    for (u, w) in nonadjacent_pairs(base) {
        let sees = bits(base.neighbors(u) & base.neighbors(w)).any(|v| {
            special(g.label(u, v).unwrap(), g.label(v, w).unwrap(), u, v)
        });
        if !sees {
            return Err((u, w));
        }
    }
    Ok(())
}

/// Base graph with a sign per edge (canonical edge order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedGraph {
    base: Graph,
    negative: Vec<bool>,
    index: EdgeIndex,
}

impl SignedGraph {
    pub fn new(base: Graph, negative: Vec<bool>) -> Result<Self, CliqueError> {
        if negative.len() != base.size() {
            return Err(CliqueError::InvalidLabeling("sign count differs from edge count".into()));
        }
        let index = EdgeIndex::new(&base);
        Ok(SignedGraph { base, negative, index })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn is_negative(&self, u: usize, v: usize) -> Option<bool> {
        self.index.get(u, v).map(|i| self.negative[i])
    }

    pub fn witness_lines(&self) -> String {
        let mut s = String::new();
        for (&(u, v), &neg) in self.base.edges().iter().zip(&self.negative) {
            writeln!(s, "{u} {v} : {}", if neg { '-' } else { '+' }).unwrap();
        }
        s
    }
}

/// Base graph with one direction per edge (canonical edge order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedGraph {
    base: Graph,
    /// `true` when the edge `(u, v)`, `u < v`, is oriented `v -> u`.
    reversed: Vec<bool>,
    index: EdgeIndex,
}

impl OrientedGraph {
    pub fn new(base: Graph, reversed: Vec<bool>) -> Result<Self, CliqueError> {
        if reversed.len() != base.size() {
            return Err(CliqueError::InvalidLabeling("direction count differs from edge count".into()));
        }
        let index = EdgeIndex::new(&base);
        Ok(OrientedGraph { base, reversed, index })
    }

    /// Orient by an explicit arc list; every base edge must appear once.
    pub fn from_arcs(base: Graph, arcs: &[(usize, usize)]) -> Result<Self, CliqueError> {
        let index = EdgeIndex::new(&base);
        let mut reversed = vec![None; base.size()];
        for &(a, b) in arcs {
            let i = index
                .get(a, b)
                .ok_or_else(|| CliqueError::InvalidLabeling(format!("{a}->{b} is not an edge")))?;
            if reversed[i].replace(a > b).is_some() {
                return Err(CliqueError::InvalidLabeling(format!("edge {a}-{b} oriented twice")));
            }
        }
        let reversed = reversed
            .into_iter()
            .collect::<Option<Vec<bool>>>()
            .ok_or_else(|| CliqueError::InvalidLabeling("unoriented edge".into()))?;
        OrientedGraph::new(base, reversed)
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    /// Whether the arc between `a` and `b` points `a -> b`.
    pub fn points(&self, a: usize, b: usize) -> Option<bool> {
        self.index.get(a, b).map(|i| self.reversed[i] == (a > b))
    }

    pub fn witness_lines(&self) -> String {
        let mut s = String::new();
        for (&(u, v), &rev) in self.base.edges().iter().zip(&self.reversed) {
            writeln!(s, "{u} {v} : {}", if rev { "<-" } else { "->" }).unwrap();
        }
        s
    }
}

/// Number of arcs of the closed walk `cycle[0] -> cycle[1] -> ... -> cycle[0]`
/// that point along the walk.
pub fn forward_arcs(g: &OrientedGraph, cycle: &[usize]) -> usize {
    (0..cycle.len())
        .filter(|&i| g.points(cycle[i], cycle[(i + 1) % cycle.len()]) == Some(true))
        .count()
}

/// Every non-adjacent pair lies on a 4-cycle with an odd number of
/// negative edges.
pub fn is_signed_absolute_clique(g: &SignedGraph) -> bool {
    let base = &g.base;
    nonadjacent_pairs(base).all(|(u, w)| {
        let common: Vec<usize> = bits(base.neighbors(u) & base.neighbors(w)).collect();
        common.iter().enumerate().any(|(i, &a)| {
            common[i + 1..].iter().any(|&b| {
                let neg = [(u, a), (a, w), (w, b), (b, u)]
                    .iter()
                    .filter(|&&(x, y)| g.is_negative(x, y) == Some(true))
                    .count();
                neg % 2 == 1
            })
        })
    })
}

/// Every non-adjacent pair lies on a 4-cycle with an odd number of arcs
/// pointing along a fixed traversal of the cycle. Reversing the traversal
/// maps `k` forward arcs to `4 - k`, so the parity does not depend on it.
pub fn is_pushable_absolute_clique(g: &OrientedGraph) -> bool {
    let base = &g.base;
    nonadjacent_pairs(base).all(|(u, w)| {
        let common: Vec<usize> = bits(base.neighbors(u) & base.neighbors(w)).collect();
        common.iter().enumerate().any(|(i, &a)| {
            common[i + 1..]
                .iter()
                .any(|&b| forward_arcs(g, &[u, a, w, b]) % 2 == 1)
        })
    })
}

/// Every non-adjacent pair has at least two common neighbors.
pub fn two_disjoint_2paths_property(g: &Graph) -> bool {
    nonadjacent_pairs(g).all(|(u, w)| (g.neighbors(u) & g.neighbors(w)).count_ones() >= 2)
}

/// `(2m + n - 1)^2`: the most degree-2 vertices sharing both neighbors that
/// an underlying (m, n)-clique can contain. `None` when `2m + n = 0`.
pub fn degree2_agreement_bound(m: u64, n: u64) -> Option<u64> {
    let k = 2 * m + n;
    (k >= 1).then(|| (k - 1) * (k - 1))
}

// ---------------------------------------------------------------------------
// exhaustive labeling search

/// One pair constraint: satisfied iff some witness (a 2-path or a 4-cycle,
/// given as edge indices plus orientation data) accepts the digits.
#[derive(Debug, Clone)]
struct PairCheck {
    witnesses: Vec<Witness>,
}

#[derive(Debug, Clone, Copy)]
enum Witness {
    /// `u v w` with edge indices of `uv` and `vw`; `u_low` / `v_low` record
    /// whether `u < v` and `v < w` so digits can be read as directions.
    Path { uv: usize, vw: usize, u_low: bool, v_low: bool },
    /// Four edges of a 4-cycle, each with whether the traversal goes from
    /// the lower to the higher endpoint.
    Cycle { edges: [usize; 4], low_first: [bool; 4] },
}

impl Witness {
    fn last_edge(&self) -> usize {
        match *self {
            Witness::Path { uv, vw, .. } => uv.max(vw),
            Witness::Cycle { edges, .. } => *edges.iter().max().unwrap(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Rule {
    Mixed { m: usize },
    Signed,
    Pushable,
}

impl Rule {
    fn accepts(self, w: &Witness, digits: &[u8]) -> bool {
        match (self, *w) {
            (Rule::Mixed { m }, Witness::Path { uv, vw, u_low, v_low }) => {
                // rebuild labels on a virtual path 0 - 1 - 2
                let (a, b) = (digits[uv] as usize, digits[vw] as usize);
                let la = virtual_label(m, a, u_low, 0, 1);
                let lb = virtual_label(m, b, v_low, 1, 2);
                special(la, lb, 0, 1)
            }
            (Rule::Signed, Witness::Cycle { edges, .. }) => {
                edges.iter().filter(|&&e| digits[e] == 1).count() % 2 == 1
            }
            (Rule::Pushable, Witness::Cycle { edges, low_first }) => {
                (0..4)
                    .filter(|&i| (digits[edges[i]] == 0) == low_first[i])
                    .count()
                    % 2
                    == 1
            }
            _ => unreachable!("rule and witness kinds are built together"),
        }
    }
}

/// Label of the virtual edge `x - y` whose real edge has its path-first
/// endpoint lower iff `first_low`.
fn virtual_label(m: usize, d: usize, first_low: bool, x: usize, y: usize) -> EdgeLabel {
    let (lo, hi) = if first_low { (x, y) } else { (y, x) };
    mixed_label(m, lo, hi, d as u8)
}

struct Problem {
    radix: u8,
    edges: usize,
    rule: Rule,
    /// Checks grouped by the edge index after which they become decidable.
    checks_at: Vec<Vec<PairCheck>>,
    infeasible: bool,
}

impl Problem {
    fn build(g: &Graph, radix: u8, rule: Rule) -> Self {
        let idx = EdgeIndex::new(g);
        let edges = g.size();
        let mut checks_at: Vec<Vec<PairCheck>> = vec![Vec::new(); edges.max(1)];
        let mut infeasible = false;
        for (u, w) in nonadjacent_pairs(g) {
            let common: Vec<usize> = bits(g.neighbors(u) & g.neighbors(w)).collect();
            let witnesses: Vec<Witness> = match rule {
                Rule::Mixed { .. } => common
                    .iter()
                    .map(|&v| Witness::Path {
                        uv: idx.get(u, v).unwrap(),
                        vw: idx.get(v, w).unwrap(),
                        u_low: u < v,
                        v_low: v < w,
                    })
                    .collect(),
                Rule::Signed | Rule::Pushable => {
                    let mut out = Vec::new();
                    for (i, &a) in common.iter().enumerate() {
                        for &b in &common[i + 1..] {
                            let walk = [(u, a), (a, w), (w, b), (b, u)];
                            out.push(Witness::Cycle {
                                edges: walk.map(|(x, y)| idx.get(x, y).unwrap()),
                                low_first: walk.map(|(x, y)| x < y),
                            });
                        }
                    }
                    out
                }
            };
            if witnesses.is_empty() {
                infeasible = true;
                continue;
            }
            let last = witnesses.iter().map(Witness::last_edge).max().unwrap();
            checks_at[last].push(PairCheck { witnesses });
        }
        Problem { radix, edges, rule, checks_at, infeasible }
    }

    fn space(&self) -> u128 {
        (self.radix as u128)
            .checked_pow(self.edges as u32)
            .unwrap_or(u128::MAX)
    }

    fn ok_at(&self, i: usize, digits: &[u8]) -> bool {
        self.checks_at[i]
            .iter()
            .all(|c| c.witnesses.iter().any(|w| self.rule.accepts(w, digits)))
    }

    fn extend(&self, digits: &mut Vec<u8>) -> bool {
        let i = digits.len();
        if i == self.edges {
            return true;
        }
        for d in 0..self.radix {
            digits.push(d);
            if self.ok_at(i, digits) && self.extend(digits) {
                return true;
            }
            digits.pop();
        }
        false
    }

    /// Lexicographically least accepted word. Work is split over the
    /// first two digits; `find_map_first` keeps the serial answer.
    fn solve(&self) -> Option<Vec<u8>> {
        if self.infeasible {
            return None;
        }
        if self.edges == 0 {
            return Some(Vec::new());
        }
        let depth = self.edges.min(2);
        let prefixes: Vec<Vec<u8>> = (0..(self.radix as usize).pow(depth as u32))
            .map(|code| {
                let mut p = vec![0u8; depth];
                let mut c = code;
                for slot in p.iter_mut().rev() {
                    *slot = (c % self.radix as usize) as u8;
                    c /= self.radix as usize;
                }
                p
            })
            .collect();
        prefixes.into_par_iter().find_map_first(|prefix| {
            let mut digits = Vec::with_capacity(self.edges);
            for &d in &prefix {
                digits.push(d);
                if !self.ok_at(digits.len() - 1, &digits) {
                    return None;
                }
            }
            self.extend(&mut digits).then_some(digits)
        })
    }
}

/// Result of an exhaustive search: the witness, or `None` after covering
/// `space` labelings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Search<T> {
    pub witness: Option<T>,
    pub space: u128,
}

impl<T> Search<T> {
    pub fn none_line(&self) -> String {
        format!("NONE exhausted={}", self.space)
    }
}

fn run<T>(
    g: &Graph,
    radix: usize,
    rule: Rule,
    budget: u128,
    build: impl FnOnce(Vec<u8>) -> Result<T, CliqueError>,
) -> Result<Search<T>, CliqueError> {
    let problem = Problem::build(g, radix as u8, rule);
    let space = problem.space();
    if space > budget {
        return Err(CliqueError::SearchBudget { space, budget });
    }
    let witness = problem.solve().map(build).transpose()?;
    Ok(Search { witness, space })
}

pub fn search_mn_clique_labeling(g: &Graph, m: usize, n: usize) -> Result<Option<MixedGraph>, CliqueError> {
    Ok(search_mn_clique(g, m, n, DEFAULT_BUDGET)?.witness)
}

pub fn search_mn_clique(g: &Graph, m: usize, n: usize, budget: u128) -> Result<Search<MixedGraph>, CliqueError> {
    let radix = 2 * m + n;
    if radix == 0 || radix > u8::MAX as usize {
        return Err(CliqueError::InvalidLabeling(format!("unsupported (m, n) = ({m}, {n})")));
    }
    run(g, radix, Rule::Mixed { m }, budget, |d| {
        MixedGraph::from_digits(g.clone(), m, n, &d)
    })
}

pub fn search_signed_clique(g: &Graph, budget: u128) -> Result<Search<SignedGraph>, CliqueError> {
    run(g, 2, Rule::Signed, budget, |d| {
        SignedGraph::new(g.clone(), d.iter().map(|&x| x == 1).collect())
    })
}

pub fn search_pushable_clique(g: &Graph, budget: u128) -> Result<Search<OrientedGraph>, CliqueError> {
    run(g, 2, Rule::Pushable, budget, |d| {
        OrientedGraph::new(g.clone(), d.iter().map(|&x| x == 1).collect())
    })
}

/// Check `samples` uniformly random labelings directly with
/// [`is_mn_clique`]; returns how many were cliques. Used to audit a `None`
/// answer independently of the search.
pub fn audit_random_labelings(g: &Graph, m: usize, n: usize, samples: usize, seed: u64) -> usize {
    let radix = (2 * m + n) as u8;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let edges = g.size();
    (0..samples)
        .filter(|_| {
            let digits: Vec<u8> = (0..edges).map(|_| rng.gen_range(0..radix)).collect();
            let mg = MixedGraph::from_digits(g.clone(), m, n, &digits).expect("digits in range");
            is_mn_clique(&mg).is_ok()
        })
        .count()
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeLabel::Edge(c) => write!(f, "E{c}"),
            EdgeLabel::Arc { color, from, to } => write!(f, "A{color} {from}->{to}"),
        }
    }
}
