//! Minor containment with explicit branch-set witnesses.
//!
//! The search works on a shrinking copy of the host. Host vertices are
//! visited lowest index first; the current vertex is either kept as the
//! image of a pattern vertex (finalized), grows by contracting an adjacent
//! unfinalized vertex into it, or is deleted. Once exactly `|V(pattern)|`
//! finalized vertices remain, the pattern is embedded as a spanning subgraph
//! by backtracking over pattern vertices in decreasing degree order. Each
//! working vertex carries the set of original host vertices merged into it,
//! and those sets are the branch sets of the returned model.
//!
//! When the pattern has minimum degree at least 3, host vertices of degree
//! at most 2 are removed or suppressed first. Such a vertex can only be a
//! connector inside a branch set, so the reduction neither creates nor
//! destroys models.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::graph::{bit, bits, connected_closure, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MinorError {
    #[error("pattern order {pattern} / host order {host} exceed search bounds ({max_pattern}, {max_host})")]
    SizeBound {
        pattern: usize,
        host: usize,
        max_pattern: usize,
        max_host: usize,
    },
}

/// Branch sets of a minor model, indexed by pattern vertex; each set is a
/// bitmask over host vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MinorModel {
    pub branch_sets: Vec<u64>,
}

impl MinorModel {
    pub fn branch_set(&self, p: usize) -> impl Iterator<Item = usize> {
        bits(self.branch_sets[p])
    }

    /// Single-line form `p:v,v;p:v;...` for verdict lines.
    pub fn to_inline(&self) -> String {
        self.branch_sets
            .iter()
            .enumerate()
            .map(|(p, &s)| {
                let vs: Vec<String> = bits(s).map(|v| v.to_string()).collect();
                format!("{p}:{}", vs.join(","))
            })
            .collect::<Vec<_>>()
            .join(";")
    }

    /// Parse the multi-line `p: v1 v2 ...` certificate text.
    pub fn parse(text: &str) -> Result<MinorModel, String> {
        let mut sets: Vec<u64> = Vec::new();
        for (i, line) in text.lines().filter(|l| !l.trim().is_empty()).enumerate() {
            let (p, rest) = line
                .split_once(':')
                .ok_or_else(|| format!("missing ':' in {line:?}"))?;
            let p: usize = p.trim().parse().map_err(|e| format!("{e} in {line:?}"))?;
            if p != i {
                return Err(format!("pattern vertex {p} out of order, expected {i}"));
            }
            let mut mask = 0u64;
            for tok in rest.split_whitespace() {
                let v: usize = tok.parse().map_err(|e| format!("{e} in {line:?}"))?;
                if v >= 64 {
                    return Err(format!("host vertex {v} out of range"));
                }
                mask |= bit(v);
            }
            sets.push(mask);
        }
        Ok(MinorModel { branch_sets: sets })
    }
}

/// Certificate text: one line per pattern vertex, `p: v1 v2 ...`.
impl fmt::Display for MinorModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (p, &s) in self.branch_sets.iter().enumerate() {
            write!(f, "{p}:")?;
            for v in bits(s) {
                write!(f, " {v}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// The three forbidden minors used for non-membership certificates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Obstruction {
    K35,
    K44Minus,
    F0,
}

impl Obstruction {
    /// Battery order.
    pub const ALL: [Obstruction; 3] = [Obstruction::K35, Obstruction::K44Minus, Obstruction::F0];

    pub fn pattern(self) -> Graph {
        match self {
            Obstruction::K35 => Graph::complete_bipartite(3, 5).unwrap(),
            Obstruction::K44Minus => Graph::complete_bipartite(4, 4).unwrap().without_edge(3, 7),
            Obstruction::F0 => crate::catalog::fixtures::f0(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Obstruction::K35 => "K35",
            Obstruction::K44Minus => "K44minus",
            Obstruction::F0 => "F0",
        }
    }

    pub fn from_name(s: &str) -> Option<Obstruction> {
        match s.to_ascii_lowercase().as_str() {
            "k35" => Some(Obstruction::K35),
            "k44minus" | "k44m" => Some(Obstruction::K44Minus),
            "f0" => Some(Obstruction::F0),
            _ => None,
        }
    }
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Size limits for the exhaustive search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBounds {
    pub max_pattern: usize,
    pub max_host: usize,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds {
            max_pattern: 10,
            max_host: 24,
        }
    }
}

pub fn find_minor(pattern: &Graph, host: &Graph) -> Result<Option<MinorModel>, MinorError> {
    find_minor_bounded(pattern, host, SearchBounds::default())
}

pub fn find_minor_bounded(
    pattern: &Graph,
    host: &Graph,
    bounds: SearchBounds,
) -> Result<Option<MinorModel>, MinorError> {
    if pattern.order() > bounds.max_pattern || host.order() > bounds.max_host {
        return Err(MinorError::SizeBound {
            pattern: pattern.order(),
            host: host.order(),
            max_pattern: bounds.max_pattern,
            max_host: bounds.max_host,
        });
    }
    let model = MinorSearch::new(pattern, host).run();
    debug_assert!(model.as_ref().is_none_or(|m| verify_model(m, pattern, host)));
    Ok(model)
}

/// Try K3,5, then K4,4 minus an edge, then F0; first hit wins.
pub fn obstruction_certificate(
    host: &Graph,
) -> Result<Option<(Obstruction, MinorModel)>, MinorError> {
    for ob in Obstruction::ALL {
        if let Some(m) = find_minor(&ob.pattern(), host)? {
            return Ok(Some((ob, m)));
        }
    }
    Ok(None)
}

/// Independent witness check: branch sets nonempty, inside the host,
/// pairwise disjoint, connected, and every pattern edge realized by a host
/// edge between the corresponding sets.
pub fn verify_model(model: &MinorModel, pattern: &Graph, host: &Graph) -> bool {
    let sets = &model.branch_sets;
    if sets.len() != pattern.order() {
        return false;
    }
    let mut used = 0u64;
    for &s in sets {
        if s == 0 || s & !host.vertex_mask() != 0 || s & used != 0 {
            return false;
        }
        used |= s;
        let start = s & s.wrapping_neg();
        if connected_closure(host.rows(), start, s) != s {
            return false;
        }
    }
    pattern.edges().iter().all(|&(p, q)| {
        bits(sets[p]).any(|v| host.neighbors(v) & sets[q] != 0)
    })
}

struct MinorSearch<'a> {
    pattern: &'a Graph,
    host: &'a Graph,
    k: usize,
    pattern_edges: usize,
    pattern_min_degree: usize,
    /// Pattern degrees ascending, for the finalized-degree prune.
    pattern_degrees: Vec<usize>,
    /// Pattern vertices in embedding order.
    embed_order: Vec<usize>,
    failed: HashSet<Vec<u64>>,
}

#[derive(Clone)]
struct State {
    alive: u64,
    finalized: u64,
    adj: Vec<u64>,
    sets: Vec<u64>,
}

impl State {
    fn edges(&self) -> usize {
        bits(self.alive).map(|v| self.adj[v].count_ones() as usize).sum::<usize>() / 2
    }

    fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    fn delete(&mut self, v: usize) {
        for u in bits(self.adj[v]) {
            self.adj[u] &= !bit(v);
        }
        self.adj[v] = 0;
        self.alive &= !bit(v);
        self.finalized &= !bit(v);
    }

    /// Merge `w` into `v`; `v` keeps its label.
    fn contract(&mut self, v: usize, w: usize) {
        let nw = self.adj[w] & !bit(v);
        for u in bits(self.adj[w]) {
            self.adj[u] &= !bit(w);
        }
        self.adj[w] = 0;
        self.alive &= !bit(w);
        self.adj[v] |= nw;
        for u in bits(nw) {
            self.adj[u] |= bit(v);
        }
        self.sets[v] |= self.sets[w];
        self.sets[w] = 0;
    }

    fn key(&self) -> Vec<u64> {
        let mut k = Vec::with_capacity(2 + self.alive.count_ones() as usize);
        k.push(self.alive);
        k.push(self.finalized);
        k.extend(bits(self.alive).map(|v| self.adj[v]));
        k
    }
}

impl<'a> MinorSearch<'a> {
    fn new(pattern: &'a Graph, host: &'a Graph) -> Self {
        let k = pattern.order();
        let mut embed_order: Vec<usize> = Vec::with_capacity(k);
        let mut placed = 0u64;
        while embed_order.len() < k {
            // highest degree first; prefer vertices touching already placed ones
            let next = (0..k)
                .filter(|&p| placed & bit(p) == 0)
                .max_by_key(|&p| {
                    (
                        (pattern.neighbors(p) & placed).count_ones(),
                        pattern.degree(p),
                        std::cmp::Reverse(p),
                    )
                })
                .unwrap();
            embed_order.push(next);
            placed |= bit(next);
        }
        let mut pattern_degrees: Vec<usize> = (0..k).map(|p| pattern.degree(p)).collect();
        pattern_degrees.sort_unstable();
        MinorSearch {
            pattern,
            host,
            k,
            pattern_edges: pattern.size(),
            pattern_min_degree: pattern.min_degree(),
            pattern_degrees,
            embed_order,
            failed: HashSet::new(),
        }
    }

    fn run(mut self) -> Option<MinorModel> {
        let n = self.host.order();
        let mut state = State {
            alive: self.host.vertex_mask(),
            finalized: 0,
            adj: self.host.rows().to_vec(),
            sets: (0..n).map(bit).collect(),
        };
        self.reduce(&mut state);
        self.dfs(state)
    }

    /// Remove host vertices that cannot carry a pattern vertex of minimum
    /// degree `d`: isolated vertices when `d >= 1`, leaves when `d >= 2`,
    /// and degree-2 vertices (contracted into a neighbor) when `d >= 3`.
    fn reduce(&self, s: &mut State) {
        let d = self.pattern_min_degree;
        loop {
            let mut progress = false;
            for v in bits(s.alive) {
                if s.alive & bit(v) == 0 {
                    continue;
                }
                let deg = s.degree(v);
                if deg < d && deg <= 1 {
                    s.delete(v);
                    progress = true;
                } else if deg == 2 && d >= 3 {
                    let u = s.adj[v].trailing_zeros() as usize;
                    s.contract(u, v);
                    progress = true;
                }
            }
            if !progress {
                break;
            }
        }
    }

    fn feasible(&self, s: &State) -> bool {
        if (s.alive.count_ones() as usize) < self.k
            || (s.finalized.count_ones() as usize) > self.k
            || s.edges() < self.pattern_edges
        {
            return false;
        }
        let mut fin: Vec<usize> = bits(s.finalized).map(|v| s.degree(v)).collect();
        fin.sort_unstable();
        fin.iter().zip(&self.pattern_degrees).all(|(have, need)| have >= need)
    }

    fn dfs(&mut self, s: State) -> Option<MinorModel> {
        if !self.feasible(&s) {
            return None;
        }
        let key = s.key();
        if self.failed.contains(&key) {
            return None;
        }
        let found = self.expand(&s);
        if found.is_none() {
            self.failed.insert(key);
        }
        found
    }

    fn expand(&mut self, s: &State) -> Option<MinorModel> {
        let open = s.alive & !s.finalized;
        if s.alive.count_ones() as usize == self.k {
            let mut all = s.clone();
            all.finalized = all.alive;
            if !self.feasible(&all) {
                return None;
            }
            return self.embed(&all);
        }
        if open == 0 {
            return None;
        }
        let v = open.trailing_zeros() as usize;

        if s.degree(v) >= self.pattern_min_degree {
            let mut t = s.clone();
            t.finalized |= bit(v);
            if let Some(m) = self.dfs(t) {
                return Some(m);
            }
        }
        for w in bits(s.adj[v] & open) {
            let mut t = s.clone();
            t.contract(v, w);
            if let Some(m) = self.dfs(t) {
                return Some(m);
            }
        }
        let mut t = s.clone();
        t.delete(v);
        self.dfs(t)
    }

    /// Bijective embedding of the pattern onto the alive vertices.
    fn embed(&self, s: &State) -> Option<MinorModel> {
        let mut image = vec![usize::MAX; self.k];
        if self.embed_rec(s, 0, 0, &mut image) {
            Some(MinorModel {
                branch_sets: image.iter().map(|&v| s.sets[v]).collect(),
            })
        } else {
            None
        }
    }

    fn embed_rec(&self, s: &State, i: usize, used: u64, image: &mut [usize]) -> bool {
        if i == self.k {
            return true;
        }
        let p = self.embed_order[i];
        let mut cand = s.alive & !used;
        for q in bits(self.pattern.neighbors(p)) {
            if image[q] != usize::MAX {
                cand &= s.adj[image[q]];
            }
        }
        let need = self.pattern.degree(p);
        for v in bits(cand) {
            if s.degree(v) < need {
                continue;
            }
            image[p] = v;
            if self.embed_rec(s, i + 1, used | bit(v), image) {
                return true;
            }
        }
        image[p] = usize::MAX;
        false
    }
}
