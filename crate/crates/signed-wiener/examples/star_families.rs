//! The two-level star families: 2k+1 trees of consecutive orders
//! k^2+1 ..= (k+1)^2 for each k, tiling every order exactly once, plus the
//! balanced signing that makes them competitive.
//!
//! Run with `cargo run --example star_families`.

use signed_wiener::families::{
    balanced_signing, build_star_tree, family_listing, spec_for_order, FamilyIndex,
};
use signed_wiener::formulas::balanced_star_wiener;

fn main() {
    println!("family k = 2 (spec and order per line):");
    print!("{}", family_listing(2));

    println!("\nselector: the unique family tree for a handful of orders");
    for n in [1u64, 2, 9, 30, 31, 100, 1000] {
        let idx = FamilyIndex::for_order(n);
        let spec = spec_for_order(n);
        println!(
            "  n = {n:>4}: k = {:>2}, {:?} s = {:>2}, T({spec}), W_sigma = {}",
            idx.k,
            idx.variant,
            idx.s,
            balanced_star_wiener(&spec)
        );
    }

    println!("\nbalanced signing of T(2,3), as an edge list:");
    let star = build_star_tree(&spec_for_order(8));
    let signed = star
        .with_signing(&balanced_signing(&star).expect("roles attached"))
        .expect("length matches");
    print!("{}", signed.to_edge_list());
}
