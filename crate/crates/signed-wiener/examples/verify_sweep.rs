//! Sweep of orders 30..=100: at every one of them the balanced family tree
//! strictly beats the alternating path. Each value is computed twice (closed
//! form and direct summation) before a verdict is printed.
//!
//! Run with `cargo run --example verify_sweep`.

use signed_wiener::search::{family_vs_path, Verdict};

fn main() {
    let rows = family_vs_path(30, 100).expect("closed forms must agree with direct computation");
    println!(
        "{:>4} {:>16} {:>10} {:>10} {:>8}  verdict",
        "n", "spec", "W_family", "W_path", "margin"
    );
    for r in &rows {
        println!(
            "{:>4} {:>16} {:>10} {:>10} {:>8}  {}",
            r.n,
            r.spec.to_string(),
            r.family_wiener,
            r.path_wiener,
            r.margin,
            r.verdict
        );
    }
    let wins = rows.iter().filter(|r| r.verdict == Verdict::Pass).count();
    println!("\n{wins}/{} orders are strict wins for the family tree", rows.len());
    assert_eq!(wins, rows.len());
}
