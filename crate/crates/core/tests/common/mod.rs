//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the search code under test; only `Graph` is used as a container.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet};

use pp2::graph::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    let mut a = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

/// Upper-triangle code of `g` relabeled by `perm` (vertex `v` becomes
/// `perm[v]`), as a bit string read column by column.
fn code_under(a: &[Vec<bool>], inv: &[usize]) -> u128 {
    let n = a.len();
    let mut code = 0u128;
    for j in 1..n {
        for i in 0..j {
            code = code << 1 | a[inv[i]][inv[j]] as u128;
        }
    }
    code
}

/// Maximum code over all relabelings: an isomorphism invariant that
/// separates non-isomorphic graphs.
pub fn brute_canon(g: &Graph, perms: &[Vec<usize>]) -> (usize, u128) {
    let a = adjacency(g);
    let best = perms.iter().map(|p| code_under(&a, p)).max().unwrap_or(0);
    (g.order(), best)
}

pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.size() != h.size() {
        return false;
    }
    let (a, b) = (adjacency(g), adjacency(h));
    let n = g.order();
    permutations(n)
        .iter()
        .any(|p| (0..n).all(|u| (0..n).all(|v| a[u][v] == b[p[u]][p[v]])))
}

/// Every labeled triangle-free graph on `n` vertices.
pub fn labeled_triangle_free(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let mut out = Vec::new();
    let mut adj = vec![vec![false; n]; n];
    fn rec(
        i: usize,
        pairs: &[(usize, usize)],
        adj: &mut Vec<Vec<bool>>,
        n: usize,
        out: &mut Vec<Graph>,
    ) {
        if i == pairs.len() {
            let edges: Vec<(usize, usize)> =
                pairs.iter().copied().filter(|&(u, v)| adj[u][v]).collect();
            out.push(Graph::from_edge_list(n, edges).unwrap());
            return;
        }
        rec(i + 1, pairs, adj, n, out);
        let (u, v) = pairs[i];
        if !(0..n).any(|w| adj[u][w] && adj[v][w]) {
            adj[u][v] = true;
            adj[v][u] = true;
            rec(i + 1, pairs, adj, n, out);
            adj[u][v] = false;
            adj[v][u] = false;
        }
    }
    rec(0, &pairs, &mut adj, n, &mut out);
    out
}

fn connected(a: &[Vec<bool>]) -> bool {
    let n = a.len();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if a[u][v] && !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Triangle-free and adding any missing edge creates a triangle.
pub fn brute_is_mtf(g: &Graph) -> bool {
    let a = adjacency(g);
    let n = a.len();
    let tri_free = (0..n).all(|u| {
        (0..n).all(|v| (0..n).all(|w| !(a[u][v] && a[v][w] && a[u][w])))
    });
    let maximal = (0..n).all(|u| {
        (0..n).all(|v| u == v || a[u][v] || (0..n).any(|w| a[u][w] && a[w][v]))
    });
    tri_free && maximal && connected(&a)
}

/// Canonical keys of all connected maximal triangle-free graphs on `n`
/// vertices, found by filtering every labeled triangle-free graph.
pub fn brute_mtf(n: usize) -> BTreeSet<(usize, u128)> {
    let perms = permutations(n);
    labeled_triangle_free(n)
        .into_iter()
        .filter(brute_is_mtf)
        .map(|g| brute_canon(&g, &perms))
        .collect()
}

/// Brute-force minor relation. A graph on `k` vertices is a minor of a host
/// iff it is a spanning subgraph of a quotient obtained by deleting some
/// host vertices and contracting the rest into `k` connected blocks.
pub struct MinorOracle {
    max_k: usize,
    perms: Vec<Vec<Vec<usize>>>,
    keys: HashMap<(usize, u32), (usize, u128)>,
}

impl MinorOracle {
    pub fn new(max_k: usize) -> Self {
        MinorOracle {
            max_k,
            perms: (0..=max_k).map(permutations).collect(),
            keys: HashMap::new(),
        }
    }

    pub fn key(&self, g: &Graph) -> (usize, u128) {
        brute_canon(g, &self.perms[g.order()])
    }

    fn mask_key(&mut self, k: usize, mask: u32) -> (usize, u128) {
        if let Some(&key) = self.keys.get(&(k, mask)) {
            return key;
        }
        let edges = (0..k).flat_map(|j| (0..j).map(move |i| (i, j)));
        let edges: Vec<_> = edges.filter(|&(i, j)| mask >> pair_bit(i, j) & 1 == 1).collect();
        let key = self.key(&Graph::from_edge_list(k, edges).unwrap());
        self.keys.insert((k, mask), key);
        key
    }

    /// Canonical keys of every minor of `host` with at most `max_k` vertices.
    pub fn minors(&mut self, host: &Graph) -> HashSet<(usize, u128)> {
        let quotients = minor_quotients(host, self.max_k);
        let mut out = HashSet::new();
        for (k, qs) in quotients.into_iter().enumerate().skip(1) {
            // downward closure under edge deletion
            let mut seen: HashSet<u32> = HashSet::new();
            let mut stack: Vec<u32> = qs.into_iter().collect();
            while let Some(q) = stack.pop() {
                if !seen.insert(q) {
                    continue;
                }
                let mut rest = q;
                while rest != 0 {
                    let b = rest & rest.wrapping_neg();
                    rest ^= b;
                    stack.push(q ^ b);
                }
            }
            for q in seen {
                out.insert(self.mask_key(k, q));
            }
        }
        out
    }
}

/// For each block count `k <= max_k`, the distinct quotient graphs of
/// `host`, adjacency encoded as an upper-triangle bitmask over blocks.
fn minor_quotients(host: &Graph, max_k: usize) -> Vec<HashSet<u32>> {
    let a = adjacency(host);
    let n = a.len();
    let mut out = vec![HashSet::new(); max_k + 1];
    // block[v] = usize::MAX for deleted vertices
    let mut block = vec![usize::MAX; n];
    fn rec(v: usize, k: usize, block: &mut Vec<usize>, a: &[Vec<bool>], out: &mut Vec<HashSet<u32>>) {
        let n = a.len();
        if v == n {
            for b in 0..k {
                let members: Vec<usize> = (0..n).filter(|&x| block[x] == b).collect();
                let mut seen = vec![false; n];
                let mut stack = vec![members[0]];
                seen[members[0]] = true;
                while let Some(x) = stack.pop() {
                    for &y in &members {
                        if a[x][y] && !seen[y] {
                            seen[y] = true;
                            stack.push(y);
                        }
                    }
                }
                if members.iter().any(|&x| !seen[x]) {
                    return;
                }
            }
            let mut mask = 0u32;
            for x in 0..n {
                for y in 0..n {
                    let (bx, by) = (block[x], block[y]);
                    if a[x][y] && bx != usize::MAX && by != usize::MAX && bx < by {
                        mask |= 1 << pair_bit(bx, by);
                    }
                }
            }
            out[k].insert(mask);
            return;
        }
        block[v] = usize::MAX;
        rec(v + 1, k, block, a, out);
        for b in 0..=k.min(out.len() - 2) {
            block[v] = b;
            rec(v + 1, k.max(b + 1), block, a, out);
        }
        block[v] = usize::MAX;
    }
    rec(0, 0, &mut block, &a, &mut out);
    out
}

fn pair_bit(i: usize, j: usize) -> usize {
    j * (j - 1) / 2 + i
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 0..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, edges).unwrap()
}

pub fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        p.swap(i, rng.gen_range(0..=i));
    }
    p
}

/// All labeled graphs on `n` vertices (`n <= 6`).
pub fn all_labeled(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    (0u32..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::from_edge_list(n, edges).unwrap()
    })
}

/// One representative per isomorphism class of graphs on `n` vertices.
/// Every graph is a smaller one plus a vertex with some neighborhood, so
/// extending all classes of order `n - 1` in every way reaches them all.
pub fn unlabeled(n: usize) -> Vec<Graph> {
    if n <= 1 {
        return all_labeled(n).collect();
    }
    let perms = permutations(n);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for g in unlabeled(n - 1) {
        for mask in 0u64..1 << (n - 1) {
            let h = g.with_vertex(mask);
            if seen.insert(brute_canon(&h, &perms)) {
                out.push(h);
            }
        }
    }
    out
}

/// `enumerate_mtf` against [`brute_mtf`] for every order up to `max_n`.
pub fn suite_mtf(max_n: usize) -> Result<String, String> {
    let graphs = pp2::enumerate::enumerate_mtf(max_n).map_err(|e| e.to_string())?;
    let mut counts = Vec::new();
    for n in 1..=max_n {
        let perms = permutations(n);
        let ours: Vec<(usize, u128)> = graphs
            .iter()
            .filter(|g| g.order() == n)
            .map(|g| brute_canon(g, &perms))
            .collect();
        let distinct: BTreeSet<_> = ours.iter().copied().collect();
        if distinct.len() != ours.len() {
            return Err(format!("n={n}: duplicate isomorphism classes"));
        }
        if distinct != brute_mtf(n) {
            return Err(format!("n={n}: class sets differ"));
        }
        counts.push(ours.len().to_string());
    }
    Ok(format!("counts {}", counts.join(",")))
}

/// `find_minor` against [`MinorOracle`] for every host in `hosts` and every
/// pattern on at most `max_pattern` vertices. Returned models must verify.
pub fn suite_minor(hosts: &[Graph], max_pattern: usize) -> Result<String, String> {
    use pp2::minor::{find_minor, verify_model};
    let mut oracle = MinorOracle::new(max_pattern);
    let patterns: Vec<Graph> = (1..=max_pattern).flat_map(unlabeled).collect();
    let keys: Vec<(usize, u128)> = patterns.iter().map(|p| oracle.key(p)).collect();
    let mut checked = 0;
    let mut positive = 0;
    for host in hosts {
        let minors = oracle.minors(host);
        for (p, key) in patterns.iter().zip(&keys) {
            let expected = p.order() <= host.order() && minors.contains(key);
            let got = find_minor(p, host).map_err(|e| e.to_string())?;
            if got.is_some() != expected {
                return Err(format!(
                    "pattern {} in host {}: expected {expected}",
                    p.to_graph6(),
                    host.to_graph6()
                ));
            }
            if let Some(model) = got {
                if !verify_model(&model, p, host) {
                    return Err(format!("invalid model for {} in {}", p.to_graph6(), host.to_graph6()));
                }
                positive += 1;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} pairs, {positive} minors"))
}

/// Canonical forms partition all labeled graphs on `n` vertices exactly as
/// the brute-force invariant does.
pub fn suite_canonical_exhaustive(n: usize) -> Result<String, String> {
    let perms = permutations(n);
    let mut forward: HashMap<String, (usize, u128)> = HashMap::new();
    let mut backward: HashMap<(usize, u128), String> = HashMap::new();
    let mut labeled = 0;
    for g in all_labeled(n) {
        let ours = pp2::iso::canonical_form(&g).to_string();
        let brute = brute_canon(&g, &perms);
        if *forward.entry(ours.clone()).or_insert(brute) != brute
            || *backward.entry(brute).or_insert(ours.clone()) != ours
        {
            return Err(format!("n={n}: partitions differ at {}", g.to_graph6()));
        }
        labeled += 1;
    }
    Ok(format!("n={n}: {labeled} labeled, {} classes", forward.len()))
}

/// `are_isomorphic` against the all-permutations oracle on random pairs of
/// order `n`: relabeled copies, and same-size graphs.
pub fn suite_iso_random(n: usize, pairs: usize, seed: u64) -> Result<String, String> {
    use pp2::iso::{are_isomorphic, is_isomorphism};
    let mut r = rng(seed);
    let mut yes = 0;
    for i in 0..pairs {
        let p = [0.3, 0.5, 0.7][i % 3];
        let g = random_graph(&mut r, n, p);
        let h = if i % 2 == 0 {
            g.permuted(&random_permutation(&mut r, n))
        } else {
            // same edge count, otherwise random
            loop {
                let h = random_graph(&mut r, n, p);
                if h.size() == g.size() {
                    break h;
                }
            }
        };
        let expected = brute_isomorphic(&g, &h);
        match are_isomorphic(&g, &h) {
            Some(w) if expected && is_isomorphism(&g, &h, &w) => yes += 1,
            None if !expected => {}
            other => {
                return Err(format!(
                    "{} vs {}: expected {expected}, got {other:?}",
                    g.to_graph6(),
                    h.to_graph6()
                ))
            }
        }
    }
    Ok(format!("n={n}: {pairs} pairs, {yes} isomorphic"))
}
