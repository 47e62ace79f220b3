//! The `u v s` edge-list format: parsing, dumping, and signed distances on
//! small general graphs where several paths compete.
//!
//! Run with `cargo run --example edge_list_io`.

use signed_wiener::{SignedGraph, SignedTree};

fn main() {
    let text = "\
# a 6-vertex signed tree
0 1 +1
1 2 -1
1 3 +
3 4 -
3 5 -1
";
    let tree = SignedTree::from_edge_list(text).expect("valid tree");
    println!("parsed tree with n = {}", tree.vertex_count());
    println!("W_sigma = {}", tree.signed_wiener());
    println!("W_classic = {}", tree.classic_wiener());
    println!("round-tripped edge list:\n{}", tree.to_edge_list());

    // On a graph with cycles the signed distance minimizes over all simple
    // paths; opposite corners of a (+,-,+,-) square cancel to 0.
    let square = SignedGraph::from_edge_list("0 1 +\n1 2 -\n2 3 +\n3 0 -\n").unwrap();
    for (u, v) in [(0, 2), (1, 3), (0, 1)] {
        println!(
            "square d_sigma({u},{v}) = {}",
            square.signed_distance(u, v).unwrap()
        );
    }
}
