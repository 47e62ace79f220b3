//! Growth of the family's signed Wiener index: W/n^(3/2) drifts toward 2,
//! printed next to the sqrt(2)*n^(3/2) - 10n floor that holds for the
//! minimum over ALL signed trees.
//!
//! Run with `cargo run --example asymptotics`.

use signed_wiener::formulas::{growth_ratio_table, min_wiener_asymptotic_floor};

fn main() {
    let ks: Vec<u64> = vec![1, 2, 5, 10, 20, 50, 100, 200, 500, 1000];
    let extra: Vec<u64> = ks.iter().map(|k| k * k + 1).collect();
    let rows = growth_ratio_table(0, &extra);

    println!(
        "{:>9} {:>14} {:>10} {:>16}",
        "n", "W", "W/n^1.5", "sqrt2*n^1.5-10n"
    );
    for r in &rows {
        println!(
            "{:>9} {:>14} {:>10.6} {:>16.1}",
            r.n,
            r.w,
            r.ratio,
            min_wiener_asymptotic_floor(r.n)
        );
    }
    let last = rows.last().unwrap();
    assert!(last.ratio > 1.9 && last.ratio < 2.1);
    println!("\nratio at n = {} is already within [1.9, 2.1]", last.n);
}
