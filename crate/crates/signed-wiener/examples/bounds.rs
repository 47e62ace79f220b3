//! The two inequality workhorses: the bipartition lower bound on any signed
//! tree, and the exact rational chain that proves the family beats the path
//! at every order above 100.
//!
//! Run with `cargo run --example bounds`.

use num_traits::ToPrimitive;

use signed_wiener::families::{alternating_path, balanced_signing, build_star_tree, StarSpec};
use signed_wiener::formulas::{
    alternating_path_wiener, bipartition_lower_bound, family_member_wiener,
    family_path_ratio_bound, family_top_upper_bound, Rational,
};
use signed_wiener::families::{FamilyIndex, FamilyVariant};

fn main() {
    println!("bipartition lower bound (tight on alternating paths):");
    for n in [5usize, 12, 30] {
        let r = bipartition_lower_bound(&alternating_path(n));
        println!("  P_{n}: W = {}, bound = {}, slack = {}", r.lhs, r.rhs, r.slack);
        assert!(r.holds);
    }
    let star = build_star_tree(&StarSpec::new(vec![3, 4, 4, 4, 4, 4]));
    let signed = star.with_signing(&balanced_signing(&star).unwrap()).unwrap();
    let r = bipartition_lower_bound(&signed);
    println!(
        "  T(3,4,4,4,4,4): W = {}, bound = {}, slack = {}",
        r.lhs, r.rhs, r.slack
    );

    println!("\nratio chain for k >= 10 (exact rationals, shown as floats):");
    println!(
        "{:>5} {:>12} {:>12} {:>10} {:>10}",
        "k", "W(top)", "W_alpha(P_m)", "ratio", "bound"
    );
    for k in [10u64, 20, 50, 100, 200] {
        let top = FamilyIndex {
            k,
            variant: FamilyVariant::High,
            s: k,
        };
        let w_top = family_member_wiener(&top);
        let w_path = alternating_path_wiener(k * k + 1);
        let ratio = Rational::new(w_top as i128, w_path as i128);
        let bound = family_path_ratio_bound(k);
        assert!(ratio < bound && bound < Rational::from_integer(1));
        assert!(Rational::from_integer(w_top as i128) < family_top_upper_bound(k));
        println!(
            "{k:>5} {w_top:>12} {w_path:>12} {:>10.6} {:>10.6}",
            ratio.to_f64().unwrap(),
            bound.to_f64().unwrap()
        );
    }
    println!("\nratio < bound < 1 for every listed k: the family member of any");
    println!("order in [k^2+1, (k+1)^2] beats the alternating path of that order.");
}
