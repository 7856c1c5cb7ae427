//! Signed and pushable absolute cliques on K3,4, and the common-neighbor
//! filter that rules out larger catalog graphs.

use pp2::catalog::all_members_with_order;
use pp2::mncliques::*;
use pp2::Graph;

fn main() {
    let k34 = Graph::complete_bipartite(3, 4).unwrap();
    let s = search_signed_clique(&k34, DEFAULT_BUDGET).unwrap();
    print!("signed K3,4:\n{}", s.witness.unwrap().witness_lines());
    let p = search_pushable_clique(&k34, DEFAULT_BUDGET).unwrap();
    print!("pushable K3,4:\n{}", p.witness.unwrap().witness_lines());

    for k in 3..=12 {
        for spec in all_members_with_order(k) {
            if two_disjoint_2paths_property(&spec.construct().unwrap()) {
                println!("two common neighbors for all non-adjacent pairs: {spec}");
            }
        }
    }
}
