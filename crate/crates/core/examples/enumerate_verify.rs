//! Enumerate connected maximal triangle-free graphs and re-derive the
//! characterization and the domination bound.
//!
//! `cargo run --release --example enumerate_verify -- 11`

use pp2::enumerate::{verify_domination, verify_theorem2};

fn main() {
    let max_n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10);
    let report = verify_theorem2(max_n).unwrap();
    print!("{}", report.table());
    println!("anomalies={}", report.anomaly_count());
    println!("{}", verify_domination(max_n).unwrap().summary());
}
