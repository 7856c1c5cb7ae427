//! Obstruction battery with checkable branch-set models.

use pp2::minor::{obstruction_certificate, verify_model};
use pp2::{FamilySpec, Graph};

fn main() {
    let hosts = [
        ("K4,4", Graph::complete_bipartite(4, 4).unwrap()),
        ("K3,5", Graph::complete_bipartite(3, 5).unwrap()),
        ("F1", "f1".parse::<FamilySpec>().unwrap().construct().unwrap()),
        ("F2", "f2".parse::<FamilySpec>().unwrap().construct().unwrap()),
        ("M11", "m11".parse::<FamilySpec>().unwrap().construct().unwrap()),
    ];
    for (name, host) in hosts {
        match obstruction_certificate(&host).unwrap() {
            Some((ob, model)) => {
                let ok = verify_model(&model, &ob.pattern(), &host);
                println!("{name}: {ob} {} (verified: {ok})", model.to_inline());
            }
            None => println!("{name}: no obstruction minor"),
        }
    }
}
