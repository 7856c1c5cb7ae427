//! Classify graph6 lines from stdin, or a few built-in examples.
//!
//! `pp2 construct k34s:2 | cargo run --example classify_graphs -- -`

use std::io::Read;

use pp2::{classify, Graph};

fn main() {
    let graphs: Vec<Graph> = if std::env::args().nth(1).as_deref() == Some("-") {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).unwrap();
        text.lines().filter(|l| !l.is_empty()).map(|l| Graph::from_graph6(l.trim()).unwrap()).collect()
    } else {
        vec![
            Graph::cycle(5).unwrap(),
            Graph::complete_bipartite(4, 4).unwrap(),
            Graph::complete_bipartite(2, 7).unwrap(),
            Graph::path(4).unwrap(),
            Graph::complete_bipartite(3, 4).unwrap().permuted(&[6, 5, 4, 3, 2, 1, 0]),
        ]
    };
    for g in graphs {
        match classify(&g) {
            Ok(c) => println!("{}  {}", g.to_graph6(), c.verdict_line()),
            Err(e) => println!("{}  error: {e}", g.to_graph6()),
        }
    }
}
