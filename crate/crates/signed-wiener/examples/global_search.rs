//! Global minimum of the signed Wiener index over EVERY tree and EVERY
//! signing of a fixed small order, and whether the alternating path attains
//! it. Orders up to 10 settle in well under a minute.
//!
//! Run with `cargo run --example global_search`.

use signed_wiener::search::global_minimum;

fn main() {
    println!(
        "{:>3} {:>8} {:>14} {:>12}  status",
        "n", "min_W", "W_alpha(P_n)", "minimizers"
    );
    for n in 1..=10usize {
        let result = global_minimum(n).expect("within default caps");
        println!(
            "{:>3} {:>8} {:>14} {:>12}  {}",
            n,
            result.min_wiener,
            result.baseline_alternating,
            result.witnesses.len(),
            result.conjecture_status
        );
    }
    println!("\nwitness details for n = 7:");
    let result = global_minimum(7).unwrap();
    for w in &result.witnesses {
        println!(
            "  host edges {:?}, optimal signing {}, {} optimal signings",
            w.host
                .edges()
                .iter()
                .map(|&(u, v, _)| (u, v))
                .collect::<Vec<_>>(),
            w.witness,
            w.optimal_count
        );
    }
}
