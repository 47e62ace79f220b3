//! Enumeration of all free (unlabeled) trees of a given order, cross-checked
//! against an independent oracle that decodes every Prüfer sequence and
//! deduplicates by canonical form.
//!
//! Run with `cargo run --release --example free_trees`.

use signed_wiener::search::{count_free_trees_prufer, free_trees};

fn main() {
    println!("{:>3} {:>12} {:>14}", "n", "enumerated", "prufer oracle");
    for n in 1..=9usize {
        let enumerated = free_trees(n).expect("within the order cap").len() as u64;
        let oracle = count_free_trees_prufer(n).expect("within the oracle cap");
        println!("{n:>3} {enumerated:>12} {oracle:>14}");
        assert_eq!(enumerated, oracle);
    }
    println!("(the oracle walks all n^(n-2) labeled trees; n = 10 takes a minute)");

    println!("\nall 6 trees of order 6, as edge lists:");
    for (i, t) in free_trees(6).unwrap().iter().enumerate() {
        let edges: Vec<(usize, usize)> = t.edges().iter().map(|&(u, v, _)| (u, v)).collect();
        println!("  #{i}: {edges:?}");
    }
}
