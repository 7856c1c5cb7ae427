//! Build every catalog member of a given order and print its signature.
//!
//! `cargo run --example construct_families -- 11`

use pp2::catalog::all_members_with_order;

fn main() {
    let order: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(9);
    for spec in all_members_with_order(order) {
        let g = spec.construct().expect("catalog parameters are in range");
        let m = g.metrics();
        println!(
            "{spec:<10} n={} m={} degrees {}..{} diameter {}  {}",
            g.order(),
            g.size(),
            m.min_degree,
            m.max_degree,
            m.diameter,
            g.to_graph6()
        );
    }
}
