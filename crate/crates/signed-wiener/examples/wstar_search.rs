//! Exhaustive minimization of the signed Wiener index over all signings of a
//! fixed host tree, with the optimal-signing witness and multiplicity.
//!
//! Run with `cargo run --example wstar_search`.

use signed_wiener::families::{alternating_path, build_star_tree, StarSpec};
use signed_wiener::formulas::alternating_path_wiener;
use signed_wiener::search::minimal_signed_wiener;

fn main() {
    println!("paths: the alternating signing is optimal");
    for n in 2..=14usize {
        let result = minimal_signed_wiener(&alternating_path(n)).expect("under the edge cap");
        assert_eq!(result.min_wiener, alternating_path_wiener(n as u64));
        println!(
            "  P_{n:<2}  min W = {:>3}  witness {}  ({} optimal signings)",
            result.min_wiener, result.witness, result.optimal_count
        );
    }

    println!("\nsmall star trees:");
    for arms in [vec![3u64], vec![2, 2], vec![1, 2, 3], vec![2, 2, 2, 2]] {
        let spec = StarSpec::new(arms);
        let host = build_star_tree(&spec);
        let result = minimal_signed_wiener(&host).expect("under the edge cap");
        println!(
            "  T({spec})  n = {:<2}  min W = {:>3}  witness {}  ({} optimal signings)",
            host.vertex_count(),
            result.min_wiener,
            result.witness,
            result.optimal_count
        );
    }
}
