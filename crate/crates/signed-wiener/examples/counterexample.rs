//! The order-30 and order-31 counterexamples: balanced-signed star trees
//! whose signed Wiener index beats the alternating path's.
//!
//! Run with `cargo run --example counterexample`.

use signed_wiener::families::{alternating_path, balanced_signing, build_star_tree, StarSpec};
use signed_wiener::formulas::{alternating_path_wiener, balanced_star_wiener};

fn main() {
    for arms in [vec![3, 4, 4, 4, 4, 4], vec![5, 5, 5, 5, 5]] {
        let spec = StarSpec::new(arms);
        let n = spec.order();

        let star = build_star_tree(&spec);
        let signed = star
            .with_signing(&balanced_signing(&star).expect("star trees carry roles"))
            .expect("signing matches edge count");

        let family_direct = signed.signed_wiener();
        let family_formula = balanced_star_wiener(&spec);
        let path_direct = alternating_path(n as usize).signed_wiener();
        let path_formula = alternating_path_wiener(n);

        println!("T({spec}) on {n} vertices, balanced signing:");
        println!("  W_sigma(T)    = {family_direct} (closed form {family_formula})");
        println!("  W_alpha(P_{n}) = {path_direct} (closed form {path_formula})");
        assert_eq!(family_direct, family_formula);
        assert_eq!(path_direct, path_formula);
        assert!(family_direct < path_direct);
        println!(
            "  => the star tree wins by {}\n",
            path_direct - family_direct
        );
    }
}
