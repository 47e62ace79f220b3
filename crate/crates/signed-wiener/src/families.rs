//! Structured tree constructors: two-level star trees `T(a_1, ..., a_k)`,
//! their balanced signings, the order-indexed family covering every vertex
//! count, and alternating paths.
//!
//! A two-level star tree has a root joined to `k` branch vertices, with
//! branch `i` carrying `a_i` leaves. Under a balanced signing the root edges
//! split as evenly as possible between the two signs and every leaf edge
//! takes the sign opposite to its branch's root edge; every root-to-leaf path
//! then cancels, which is what makes these trees beat the alternating path
//! for large orders.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedTree, Signing, VertexRole};

/// Leaf counts `(a_1, ..., a_k)` of a two-level star tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StarSpec {
    arms: Vec<u64>,
}

impl Serialize for StarSpec {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.arms.iter())
    }
}

impl StarSpec {
    pub fn new(arms: Vec<u64>) -> Self {
        StarSpec { arms }
    }

    pub fn arms(&self) -> &[u64] {
        &self.arms
    }

    /// Number of branch vertices.
    pub fn branch_count(&self) -> u64 {
        self.arms.len() as u64
    }

    /// Vertex count of the resulting tree: `1 + k + sum(a_i)`.
    pub fn order(&self) -> u64 {
        1 + self.branch_count() + self.arms.iter().sum::<u64>()
    }
}

impl fmt::Display for StarSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.arms.iter().map(|a| a.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for StarSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Ok(StarSpec::new(vec![]));
        }
        let arms = trimmed
            .split(',')
            .map(|tok| {
                tok.trim().parse::<u64>().map_err(|_| Error::Parse {
                    line: 0,
                    message: format!("invalid arm count `{}` in spec `{}`", tok.trim(), s),
                })
            })
            .collect::<Result<Vec<u64>>>()?;
        Ok(StarSpec::new(arms))
    }
}

/// Builds the all-positive two-level star tree for `spec`, with vertex roles
/// attached: root is vertex 0, branches are `1..=k` in spec order, leaves
/// follow grouped by branch. Edges are inserted root edges first, then leaf
/// edges branch by branch.
pub fn build_star_tree(spec: &StarSpec) -> SignedTree {
    let k = spec.arms.len();
    let n = spec.order() as usize;
    let mut edges = Vec::with_capacity(n - 1);
    let mut roles = vec![VertexRole::Plain; n];
    roles[0] = VertexRole::Root;
    roles[1..=k].fill(VertexRole::Branch);
    for b in 1..=k {
        edges.push((0, b, Sign::Plus));
    }
    let mut next = k + 1;
    for (i, &a) in spec.arms.iter().enumerate() {
        let branch = i + 1;
        for _ in 0..a {
            roles[next] = VertexRole::Leaf;
            edges.push((branch, next, Sign::Plus));
            next += 1;
        }
    }
    SignedTree::with_roles(n, edges, roles).expect("star construction yields a valid tree")
}

// Root-edge sign for branch id b (1-based): odd branches positive. This puts
// ceil(k/2) positives among the k root edges.
fn root_edge_sign(branch: usize) -> Sign {
    if branch % 2 == 1 {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

fn classify_edge(t: &SignedTree, u: usize, v: usize) -> Result<(usize, bool)> {
    // -> (branch id, is_root_edge)
    match (t.role(u), t.role(v)) {
        (VertexRole::Root, VertexRole::Branch) => Ok((v, true)),
        (VertexRole::Branch, VertexRole::Root) => Ok((u, true)),
        (VertexRole::Branch, VertexRole::Leaf) => Ok((u, false)),
        (VertexRole::Leaf, VertexRole::Branch) => Ok((v, false)),
        _ => Err(Error::MissingRoles),
    }
}

/// The canonical balanced signing of a star tree built by [`build_star_tree`]:
/// root edges of odd-numbered branches are positive, even-numbered negative,
/// and every leaf edge takes the sign opposite to its branch's root edge.
///
/// Errors on trees without role annotations.
pub fn balanced_signing(t: &SignedTree) -> Result<Signing> {
    if t.role(0) != VertexRole::Root {
        return Err(Error::MissingRoles);
    }
    let mut signs = Vec::with_capacity(t.edge_count());
    for &(u, v, _) in t.edges() {
        let (branch, is_root_edge) = classify_edge(t, u, v)?;
        let root_sign = root_edge_sign(branch);
        signs.push(if is_root_edge {
            root_sign
        } else {
            root_sign.flipped()
        });
    }
    Ok(Signing::new(signs))
}

/// A uniformly shuffled balanced signing: the positive root edges are a
/// random subset of the allowed size, leaf edges oppose their branch as
/// always. Every signing this returns satisfies the same two constraints as
/// [`balanced_signing`].
pub fn random_balanced_signing<R: Rng + ?Sized>(t: &SignedTree, rng: &mut R) -> Result<Signing> {
    if t.role(0) != VertexRole::Root {
        return Err(Error::MissingRoles);
    }
    let k = (0..t.vertex_count())
        .filter(|&v| t.role(v) == VertexRole::Branch)
        .count();
    let positives = if k % 2 == 0 {
        k / 2
    } else if rng.gen::<bool>() {
        k / 2 + 1
    } else {
        k / 2
    };
    let mut branches: Vec<usize> = (1..=k).collect();
    branches.shuffle(rng);
    let positive_set: std::collections::HashSet<usize> =
        branches.into_iter().take(positives).collect();

    let mut signs = Vec::with_capacity(t.edge_count());
    for &(u, v, _) in t.edges() {
        let (branch, is_root_edge) = classify_edge(t, u, v)?;
        let root_sign = if positive_set.contains(&branch) {
            Sign::Plus
        } else {
            Sign::Minus
        };
        signs.push(if is_root_edge {
            root_sign
        } else {
            root_sign.flipped()
        });
    }
    Ok(Signing::new(signs))
}

/// Which of the two parameter patterns a family member uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FamilyVariant {
    /// `T(k-1, ..., k-1, k, ..., k)` with `s` copies of `k`; order `k^2+1+s`.
    Low,
    /// `T(k, ..., k, k+1, ..., k+1)` with `s` copies of `k+1`; order `k^2+k+1+s`.
    High,
}

/// Coordinates `(k, variant, s)` of a tree inside the order-`k` family.
///
/// The family for a given `k` holds `2k+1` trees of consecutive orders
/// `k^2+1 ..= (k+1)^2`; the union over all `k` covers every order exactly
/// once. The seam tree `T(k, ..., k)` is addressed as `(Low, s = k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FamilyIndex {
    pub k: u64,
    pub variant: FamilyVariant,
    pub s: u64,
}

impl FamilyIndex {
    /// Locates the unique family tree with `n` vertices.
    pub fn for_order(n: u64) -> FamilyIndex {
        assert!(n >= 1, "order must be positive");
        let k = (n - 1).isqrt();
        if n <= k * k + k + 1 {
            FamilyIndex {
                k,
                variant: FamilyVariant::Low,
                s: n - k * k - 1,
            }
        } else {
            FamilyIndex {
                k,
                variant: FamilyVariant::High,
                s: n - k * k - k - 1,
            }
        }
    }

    pub fn order(&self) -> u64 {
        match self.variant {
            FamilyVariant::Low => self.k * self.k + 1 + self.s,
            FamilyVariant::High => self.k * self.k + self.k + 1 + self.s,
        }
    }

    /// Leaf counts: `k - s` copies of the smaller value, `s` of the larger.
    pub fn arm_groups(&self) -> [(u64, u64); 2] {
        // (count, value) pairs in nondecreasing value order
        match self.variant {
            FamilyVariant::Low => [(self.k - self.s, self.k.saturating_sub(1)), (self.s, self.k)],
            FamilyVariant::High => [(self.k - self.s, self.k), (self.s, self.k + 1)],
        }
    }

    pub fn spec(&self) -> StarSpec {
        let mut arms = Vec::with_capacity(self.k as usize);
        for (count, value) in self.arm_groups() {
            for _ in 0..count {
                arms.push(value);
            }
        }
        StarSpec::new(arms)
    }
}

/// The `2k+1` star specs of consecutive orders `k^2+1 ..= (k+1)^2`,
/// ascending. The tree shared by both variants is emitted once.
pub fn star_family(k: u64) -> Vec<StarSpec> {
    let mut specs = Vec::with_capacity(2 * k as usize + 1);
    for s in 0..=k {
        specs.push(
            FamilyIndex {
                k,
                variant: FamilyVariant::Low,
                s,
            }
            .spec(),
        );
    }
    for s in 1..=k {
        specs.push(
            FamilyIndex {
                k,
                variant: FamilyVariant::High,
                s,
            }
            .spec(),
        );
    }
    specs
}

/// The unique family spec with `n` vertices.
pub fn spec_for_order(n: u64) -> StarSpec {
    FamilyIndex::for_order(n).spec()
}

/// Text listing of the order-`k` family, one `spec order` line per member.
pub fn family_listing(k: u64) -> String {
    use fmt::Write;
    let mut out = String::new();
    for spec in star_family(k) {
        writeln!(out, "{} {}", spec, spec.order()).unwrap();
    }
    out
}

/// Path on `n` vertices with signs alternating `+1, -1, +1, ...` along it.
pub fn alternating_path(n: usize) -> SignedTree {
    assert!(n >= 1, "order must be positive");
    let edges = (0..n.saturating_sub(1))
        .map(|i| {
            let s = if i % 2 == 0 { Sign::Plus } else { Sign::Minus };
            (i, i + 1, s)
        })
        .collect();
    SignedTree::new(n, edges).expect("path is a valid tree")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn spec(arms: &[u64]) -> StarSpec {
        StarSpec::new(arms.to_vec())
    }

    // Structural check of the two balanced-signing constraints.
    fn assert_balanced(t: &SignedTree, signing: &Signing) {
        let signed = t.with_signing(signing).unwrap();
        let mut root_pos = 0i64;
        let mut root_neg = 0i64;
        let mut branch_root_sign = std::collections::HashMap::new();
        for &(u, v, s) in signed.edges() {
            if let Ok((branch, true)) = classify_edge(&signed, u, v) {
                branch_root_sign.insert(branch, s);
                match s {
                    Sign::Plus => root_pos += 1,
                    Sign::Minus => root_neg += 1,
                }
            }
        }
        assert!((root_pos - root_neg).abs() <= 1, "root edges unbalanced");
        for &(u, v, s) in signed.edges() {
            if let Ok((branch, false)) = classify_edge(&signed, u, v) {
                assert_eq!(s, branch_root_sign[&branch].flipped(), "leaf edge must oppose its branch");
            }
        }
    }

    #[test]
    fn spec_orders() {
        assert_eq!(spec(&[3, 4, 4, 4, 4, 4]).order(), 30);
        assert_eq!(spec(&[]).order(), 1);
        assert_eq!(spec(&[0, 0]).order(), 3);
        assert_eq!(spec(&[5, 5, 5, 5, 5]).order(), 31);
    }

    #[test]
    fn spec_parse_and_display() {
        let s: StarSpec = "3,4,4,4,4,4".parse().unwrap();
        assert_eq!(s, spec(&[3, 4, 4, 4, 4, 4]));
        assert_eq!(s.to_string(), "3,4,4,4,4,4");
        assert_eq!("".parse::<StarSpec>().unwrap(), spec(&[]));
        assert!(" 1, 2 ,3 ".parse::<StarSpec>().is_ok());
        assert!("1,x".parse::<StarSpec>().is_err());
    }

    #[test]
    fn builds_counterexample_tree() {
        let t = build_star_tree(&spec(&[3, 4, 4, 4, 4, 4]));
        assert_eq!(t.vertex_count(), 30);
        assert_eq!(t.role(0), VertexRole::Root);
        for b in 1..=6 {
            assert_eq!(t.role(b), VertexRole::Branch);
        }
        for leaf in 7..30 {
            assert_eq!(t.role(leaf), VertexRole::Leaf);
        }
        // branch 1 has 3 leaves, the rest 4
        assert_eq!(t.degree(1), 4);
        assert_eq!(t.degree(2), 5);
    }

    #[test]
    fn builds_degenerate_specs() {
        let single = build_star_tree(&spec(&[]));
        assert_eq!(single.vertex_count(), 1);
        assert_eq!(single.role(0), VertexRole::Root);

        // two branch vertices, no leaves: a 3-path rooted at its center
        let p3 = build_star_tree(&spec(&[0, 0]));
        assert_eq!(p3.vertex_count(), 3);
        assert!(p3.is_path());
        assert_eq!(p3.degree(0), 2);
    }

    #[test]
    fn balanced_signing_splits_root_edges() {
        let t = build_star_tree(&spec(&[3, 4, 4, 4, 4, 4]));
        let s = balanced_signing(&t).unwrap();
        assert_balanced(&t, &s);
        let root_signs: Vec<Sign> = s.signs()[..6].to_vec();
        assert_eq!(
            root_signs,
            vec![Sign::Plus, Sign::Minus, Sign::Plus, Sign::Minus, Sign::Plus, Sign::Minus]
        );
    }

    #[test]
    fn balanced_signing_degenerate_cases() {
        let single = build_star_tree(&spec(&[]));
        assert_eq!(balanced_signing(&single).unwrap().len(), 0);

        // one branch with two leaves: leaf edges oppose the single root edge
        let t = build_star_tree(&spec(&[2]));
        let s = balanced_signing(&t).unwrap();
        assert_balanced(&t, &s);
        assert_eq!(s.signs()[0], Sign::Plus);
        assert_eq!(s.signs()[1], s.signs()[0].flipped());
        assert_eq!(s.signs()[2], s.signs()[0].flipped());
    }

    #[test]
    fn balanced_signing_requires_roles() {
        let plain = alternating_path(4);
        assert_eq!(balanced_signing(&plain), Err(Error::MissingRoles));
    }

    #[test]
    fn random_balanced_signings_stay_balanced() {
        let t = build_star_tree(&spec(&[3, 4, 4, 4, 4, 4]));
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let s = random_balanced_signing(&t, &mut rng).unwrap();
            assert_balanced(&t, &s);
        }
        // odd k: both floor and ceil positive counts occur
        let odd = build_star_tree(&spec(&[1, 1, 1]));
        let mut seen = std::collections::HashSet::new();
        for _ in 0..50 {
            let s = random_balanced_signing(&odd, &mut rng).unwrap();
            assert_balanced(&odd, &s);
            let pos = s.signs()[..3].iter().filter(|&&x| x == Sign::Plus).count();
            seen.insert(pos);
        }
        assert_eq!(seen, [1usize, 2].into_iter().collect());
    }

    #[test]
    fn family_of_k2_matches_known_list() {
        let fam = star_family(2);
        let expected = vec![
            spec(&[1, 1]),
            spec(&[1, 2]),
            spec(&[2, 2]),
            spec(&[2, 3]),
            spec(&[3, 3]),
        ];
        assert_eq!(fam, expected);
        let orders: Vec<u64> = fam.iter().map(StarSpec::order).collect();
        assert_eq!(orders, vec![5, 6, 7, 8, 9]);
    }

    #[test]
    fn family_listing_lines() {
        let listing = family_listing(2);
        let lines: Vec<&str> = listing.lines().collect();
        assert_eq!(
            lines,
            vec!["1,1 5", "1,2 6", "2,2 7", "2,3 8", "3,3 9"]
        );
    }

    #[test]
    fn family_edge_cases() {
        assert_eq!(star_family(0), vec![spec(&[])]);
        let fam5 = star_family(5);
        assert_eq!(fam5.len(), 11);
        let t31 = fam5.iter().find(|s| s.order() == 31).unwrap();
        assert_eq!(*t31, spec(&[5, 5, 5, 5, 5]));
    }

    #[test]
    fn family_orders_are_consecutive_without_gaps() {
        for k in 0..=12u64 {
            let fam = star_family(k);
            assert_eq!(fam.len(), 2 * k as usize + 1);
            let orders: Vec<u64> = fam.iter().map(StarSpec::order).collect();
            let expected: Vec<u64> = (k * k + 1..=(k + 1) * (k + 1)).collect();
            assert_eq!(orders, expected, "family k={k}");
        }
    }

    #[test]
    fn selector_hits_every_order() {
        assert_eq!(spec_for_order(31), spec(&[5, 5, 5, 5, 5]));
        assert_eq!(spec_for_order(1), spec(&[]));
        assert_eq!(spec_for_order(30), spec(&[4, 5, 5, 5, 5]));
        for n in 1..=200u64 {
            let idx = FamilyIndex::for_order(n);
            let s = idx.spec();
            assert_eq!(s.order(), n, "selector order mismatch at n={n}");
            assert_eq!(idx.order(), n);
            let k = (n - 1).isqrt();
            assert!(
                star_family(k).contains(&s),
                "spec for n={n} missing from family k={k}"
            );
        }
    }

    #[test]
    fn seam_tree_is_shared_between_variants() {
        let k = 4u64;
        let low = FamilyIndex { k, variant: FamilyVariant::Low, s: k };
        let high = FamilyIndex { k, variant: FamilyVariant::High, s: 0 };
        assert_eq!(low.spec(), high.spec());
        assert_eq!(low.order(), high.order());
    }

    #[test]
    fn alternating_path_signs() {
        let p2 = alternating_path(2);
        assert_eq!(p2.edges(), &[(0, 1, Sign::Plus)]);

        let p4 = alternating_path(4);
        let signs: Vec<Sign> = p4.edges().iter().map(|&(_, _, s)| s).collect();
        assert_eq!(signs, vec![Sign::Plus, Sign::Minus, Sign::Plus]);

        assert_eq!(alternating_path(1).vertex_count(), 1);
    }

    #[test]
    fn counterexample_values_direct() {
        let t = build_star_tree(&spec(&[3, 4, 4, 4, 4, 4]));
        let signed = t.with_signing(&balanced_signing(&t).unwrap()).unwrap();
        assert_eq!(signed.signed_wiener(), 222);
        assert_eq!(alternating_path(30).signed_wiener(), 225);
    }

    #[test]
    fn balanced_star_distances() {
        let t = build_star_tree(&spec(&[3, 4, 4, 4, 4, 4]));
        let signed = t.with_signing(&balanced_signing(&t).unwrap()).unwrap();
        // two leaves under the same branch: both edges share a sign
        assert_eq!(signed.signed_distance(7, 8).unwrap(), 2);
        // root to any leaf: the two path edges cancel
        for leaf in 7..30 {
            assert_eq!(signed.signed_distance(0, leaf).unwrap(), 0);
        }
    }
}
