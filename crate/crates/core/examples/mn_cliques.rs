//! Colored mixed cliques: W8+ is an oriented clique, W8 a 2-edge-colored
//! one, and neither extends to the larger catalog graphs.

use pp2::mncliques::{is_mn_clique, search_mn_clique, DEFAULT_BUDGET};
use pp2::FamilySpec;

fn main() {
    for (name, m, n) in [("w8p", 1, 0), ("p10", 1, 0), ("m11", 1, 0), ("w8", 0, 2), ("w8p", 0, 2)] {
        let g = name.parse::<FamilySpec>().unwrap().construct().unwrap();
        let s = search_mn_clique(&g, m, n, DEFAULT_BUDGET).unwrap();
        println!("== {name} ({m},{n})");
        match s.witness {
            Some(w) => {
                assert!(is_mn_clique(&w).is_ok());
                print!("{}", w.witness_lines());
            }
            None => println!("{}", s.none_line()),
        }
    }
}
