//! Domination numbers of the fixed exceptional graphs.

use pp2::catalog::Special;
use pp2::classify::{domination_number, dominates};

fn main() {
    for s in Special::ALL {
        let g = s.graph();
        let r = domination_number(&g).unwrap();
        assert!(dominates(&g, &r.witness));
        println!("{s:?}: gamma={} witness={:?}", r.number, r.witness);
    }
}
