//! Closed-form evaluators and inequality checks, every one of them
//! cross-validated elsewhere against direct computation on constructed trees.
//!
//! Counterexample margins are tiny (238 vs 240), so everything here is exact
//! integer or rational arithmetic; floating point only ever appears in ratio
//! reporting.

use num_rational::Ratio;
use serde::Serialize;

use crate::families::{FamilyIndex, StarSpec};
use crate::graph::{Sign, SignedTree};

/// Exact rational with enough headroom for every bound in this module.
pub type Rational = Ratio<i128>;

fn binom2(x: u64) -> u64 {
    x * x.saturating_sub(1) / 2
}

/// Signed Wiener index of a balanced-signed star tree `T(a_1, ..., a_k)`:
///
/// `2 * sum binom2(a_i) + 2 * binom2(floor(k/2)) + 2 * binom2(ceil(k/2))
///  + k * (1 + sum a_i)`
///
/// The value is the same for every balanced signing of the tree.
pub fn balanced_star_wiener(spec: &StarSpec) -> u64 {
    let k = spec.branch_count();
    let arm_sum: u64 = spec.arms().iter().sum();
    let pair_sum: u64 = spec.arms().iter().map(|&a| binom2(a)).sum();
    2 * pair_sum + 2 * binom2(k / 2) + 2 * binom2(k.div_ceil(2)) + k * (1 + arm_sum)
}

/// Same value as [`balanced_star_wiener`] computed straight from family
/// coordinates in O(1), without materializing the spec.
pub fn family_member_wiener(idx: &FamilyIndex) -> u64 {
    let k = idx.k;
    let mut arm_sum = 0u64;
    let mut pair_sum = 0u64;
    for (count, value) in idx.arm_groups() {
        arm_sum += count * value;
        pair_sum += count * binom2(value);
    }
    2 * pair_sum + 2 * binom2(k / 2) + 2 * binom2(k.div_ceil(2)) + k * (1 + arm_sum)
}

/// Signed Wiener index of the alternating path: `floor(n/2) * ceil(n/2)`.
pub fn alternating_path_wiener(n: u64) -> u64 {
    (n / 2) * n.div_ceil(2)
}

/// The cubic `2k^3 + (5/2)k^2 + (1/2)k - 1/4`, an upper bound on the signed
/// Wiener index of the largest order-`k` family member `T(k+1, ..., k+1)`.
/// Strict for every `k >= 2`; at `k = 1` the polynomial dips below the true
/// value 5, so nothing is claimed there.
pub fn family_top_upper_bound(k: u64) -> Rational {
    let k = k as i128;
    Ratio::new(8 * k * k * k + 10 * k * k + 2 * k - 1, 4)
}

/// `8/k + 10/k^2 + 2/k^3`, an upper bound on
/// `W(largest member of family k) / W(alternating path of the smallest
/// family order)`. Drops below 1 from `k = 10` on, which is what makes every
/// family member of order above 100 beat the alternating path.
pub fn family_path_ratio_bound(k: u64) -> Rational {
    assert!(k >= 1);
    let k = k as i128;
    Ratio::new(8 * k * k + 10 * k + 2, k * k * k)
}

/// Asymptotic floor `sqrt(2) * n^(3/2) - 10n` for the minimum signed Wiener
/// index over all signed trees on `n` vertices. Reported alongside ratio
/// tables for trend inspection; negative for small `n`.
pub fn min_wiener_asymptotic_floor(n: u64) -> f64 {
    let nf = n as f64;
    std::f64::consts::SQRT_2 * nf.powf(1.5) - 10.0 * nf
}

/// One side-by-side comparison of an exact Wiener value against a bound.
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub n: u64,
    /// Exact signed Wiener index.
    pub lhs: u64,
    /// Bound value it is compared against.
    pub rhs: u64,
    /// `lhs - rhs`; nonnegative when the lower bound holds.
    pub slack: i64,
    pub holds: bool,
}

/// Lower bound on the signed Wiener index from the bipartition structure:
///
/// `W >= |U||V| + 2 * sum over u in U of (binom2(d_u^+) + binom2(d_u^-))`
///
/// where `(U, V)` is the tree's bipartition with `|U| <= |V|` and `d_u^+`,
/// `d_u^-` count positive and negative edges at `u`. Odd-hop pairs
/// contribute the first term, same-signed cherries centered in `U` the rest.
pub fn bipartition_lower_bound(t: &SignedTree) -> BoundReport {
    let (small, large) = t.bipartition();
    let mut cherry_pairs = 0u64;
    for &u in &small {
        let mut pos = 0u64;
        let mut neg = 0u64;
        for (_, s) in t.neighbors(u) {
            match s {
                Sign::Plus => pos += 1,
                Sign::Minus => neg += 1,
            }
        }
        cherry_pairs += binom2(pos) + binom2(neg);
    }
    let rhs = (small.len() as u64) * (large.len() as u64) + 2 * cherry_pairs;
    let lhs = t.signed_wiener();
    BoundReport {
        n: t.vertex_count() as u64,
        lhs,
        rhs,
        slack: lhs as i64 - rhs as i64,
        holds: lhs >= rhs,
    }
}

/// One row of the growth-ratio table.
#[derive(Debug, Clone, Serialize)]
pub struct RatioRow {
    pub n: u64,
    /// Exact signed Wiener index of the family tree on `n` vertices.
    #[serde(rename = "W")]
    pub w: u64,
    /// `w / n^(3/2)`; tends to 2 as `n` grows.
    pub ratio: f64,
}

/// CSV rendering of a ratio table, header `n,W,ratio`, ratios with six
/// decimal places.
pub fn ratio_table_csv(rows: &[RatioRow]) -> String {
    use std::fmt::Write;
    let mut out = String::from("n,W,ratio\n");
    for r in rows {
        writeln!(out, "{},{},{:.6}", r.n, r.w, r.ratio).unwrap();
    }
    out
}

/// Exact family Wiener values with their `n^(3/2)` ratios, at the boundary
/// orders `k^2+1` and `(k+1)^2` for every `k <= k_max`, plus any extra
/// orders requested. Rows are ascending in `n` and deduplicated.
pub fn growth_ratio_table(k_max: u64, extra_n: &[u64]) -> Vec<RatioRow> {
    let mut orders: Vec<u64> = Vec::with_capacity(2 * k_max as usize + extra_n.len());
    for k in 1..=k_max {
        orders.push(k * k + 1);
        orders.push((k + 1) * (k + 1));
    }
    orders.extend(extra_n.iter().copied().filter(|&n| n >= 1));
    orders.sort_unstable();
    orders.dedup();
    orders
        .into_iter()
        .map(|n| {
            let w = family_member_wiener(&FamilyIndex::for_order(n));
            RatioRow {
                n,
                w,
                ratio: w as f64 / (n as f64).powf(1.5),
            }
        })
        .collect()
}
