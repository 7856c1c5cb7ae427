//! Canonical forms and isomorphism witnesses.

use pp2::iso::{are_isomorphic, canonical_form, is_isomorphism};
use pp2::{FamilySpec, Graph};

fn main() {
    let a: Graph = "c5:1,0".parse::<FamilySpec>().unwrap().construct().unwrap();
    let b: Graph = "c5:0,1".parse::<FamilySpec>().unwrap().construct().unwrap();
    println!("c5:1,0 canonical {}", canonical_form(&a));
    println!("c5:0,1 canonical {}", canonical_form(&b));
    let w = are_isomorphic(&a, &b).expect("mirror images");
    println!("witness {w:?}, valid: {}", is_isomorphism(&a, &b, &w));

    let k33 = Graph::complete_bipartite(3, 3).unwrap();
    let c6 = Graph::cycle(6).unwrap();
    println!("K3,3 ~ C6: {}", are_isomorphic(&k33, &c6).is_some());
}
