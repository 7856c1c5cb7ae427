//! Brute-force count of connected maximal triangle-free graphs: filter
//! every labeled triangle-free graph and collapse by the largest adjacency
//! code over all relabelings. Regenerates the frozen counts in the tests.
//!
//! `cargo run --release --example mtf_counts_oracle -- 8`

use std::collections::HashSet;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn count(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let perms = permutations(n);
    let mut adj = vec![0u32; n];
    let mut seen = HashSet::new();
    fn rec(i: usize, pairs: &[(usize, usize)], adj: &mut [u32], perms: &[Vec<usize>], seen: &mut HashSet<u64>) {
        let n = adj.len();
        if i == pairs.len() {
            let maximal = (0..n).all(|u| {
                (0..n).all(|v| u == v || adj[u] >> v & 1 == 1 || adj[u] & adj[v] != 0)
            });
            if !maximal {
                return;
            }
            let code = perms
                .iter()
                .map(|p| pairs.iter().fold(0u64, |c, &(u, v)| c << 1 | (adj[p[u]] >> p[v] & 1) as u64))
                .max()
                .unwrap();
            seen.insert(code);
            return;
        }
        rec(i + 1, pairs, adj, perms, seen);
        let (u, v) = pairs[i];
        if adj[u] & adj[v] == 0 {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
            rec(i + 1, pairs, adj, perms, seen);
            adj[u] &= !(1 << v);
            adj[v] &= !(1 << u);
        }
    }
    rec(0, &pairs, &mut adj, &perms, &mut seen);
    seen.len()
}

fn main() {
    let max_n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    // maximal + n >= 2 implies connected (diameter at most 2)
    let counts: Vec<usize> = (1..=max_n).map(count).collect();
    println!("{counts:?}");
}
