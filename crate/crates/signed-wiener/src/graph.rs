//! Signed trees and small signed graphs, their signed distances and the
//! signed Wiener index.
//!
//! The signed distance between two distinct vertices is the minimum over all
//! simple paths joining them of the absolute value of the path's sign sum.
//! On a tree the path is unique, which keeps everything exact and fast; on a
//! general graph we enumerate simple paths and therefore enforce a size cap.

use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Edge sign, `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    fn parse_token(tok: &str) -> Option<Sign> {
        match tok {
            "+" | "+1" => Some(Sign::Plus),
            "-" | "-1" => Some(Sign::Minus),
            _ => None,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+1"),
            Sign::Minus => write!(f, "-1"),
        }
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_i8(self.value() as i8)
    }
}

/// Structural role a vertex plays in a tree built from a [`StarSpec`].
///
/// Trees assembled by hand carry [`VertexRole::Plain`] everywhere.
///
/// [`StarSpec`]: crate::families::StarSpec
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum VertexRole {
    #[default]
    Plain,
    Root,
    Branch,
    Leaf,
}

/// An assignment of signs to the edges of a fixed host tree, indexed by the
/// host's edge insertion order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signing(Vec<Sign>);

impl Signing {
    pub fn new(signs: Vec<Sign>) -> Self {
        Signing(signs)
    }

    /// Decodes `len` signs from a bitmask; bit `i` set means edge `i` is negative.
    pub fn from_mask(mask: u64, len: usize) -> Self {
        assert!(len <= 64);
        Signing(
            (0..len)
                .map(|i| {
                    if mask >> i & 1 == 1 {
                        Sign::Minus
                    } else {
                        Sign::Plus
                    }
                })
                .collect(),
        )
    }

    pub fn to_mask(&self) -> u64 {
        assert!(self.0.len() <= 64);
        self.0
            .iter()
            .enumerate()
            .fold(0u64, |m, (i, s)| m | (((*s == Sign::Minus) as u64) << i))
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn negated(&self) -> Self {
        Signing(self.0.iter().map(|s| s.flipped()).collect())
    }
}

impl fmt::Display for Signing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl Serialize for Signing {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.0.iter())
    }
}

// Above this many vertices the all-roots sweep moves onto the thread pool.
// Integer sums are associative, so the result does not depend on the split.
const PARALLEL_ROOTS_THRESHOLD: usize = 2048;

impl Serialize for SignedTree {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("SignedTree", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("edges", &self.edges)?;
        st.end()
    }
}

/// A tree on `n` vertices with a sign on every edge.
///
/// Vertex ids are contiguous in `[0, n)`; edges keep their insertion order,
/// which is also the order a [`Signing`] indexes them by. Connectivity and
/// acyclicity are checked at construction, so every instance is a valid tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedTree {
    n: usize,
    edges: Vec<(usize, usize, Sign)>,
    adj: Vec<Vec<(usize, Sign)>>,
    roles: Vec<VertexRole>,
}

impl SignedTree {
    pub fn new(n: usize, edges: Vec<(usize, usize, Sign)>) -> Result<Self> {
        Self::with_roles(n, edges, vec![VertexRole::Plain; n])
    }

    pub(crate) fn with_roles(
        n: usize,
        edges: Vec<(usize, usize, Sign)>,
        roles: Vec<VertexRole>,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if edges.len() != n - 1 {
            return Err(Error::WrongEdgeCount {
                n,
                edges: edges.len(),
            });
        }
        debug_assert_eq!(roles.len(), n);
        let adj = build_adjacency(n, &edges)?;
        if !connected(n, &adj) {
            return Err(Error::Disconnected);
        }
        // n-1 edges + connected => acyclic
        Ok(SignedTree {
            n,
            edges,
            adj,
            roles,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize, Sign)] {
        &self.edges
    }

    pub fn role(&self, v: usize) -> VertexRole {
        self.roles[v]
    }

    pub fn has_roles(&self) -> bool {
        self.roles.iter().any(|r| *r != VertexRole::Plain)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = (usize, Sign)> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn is_path(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) <= 2)
    }

    /// The current signs in edge order.
    pub fn signing(&self) -> Signing {
        Signing(self.edges.iter().map(|&(_, _, s)| s).collect())
    }

    /// Same tree structure and roles, signs replaced by `signing`.
    pub fn with_signing(&self, signing: &Signing) -> Result<Self> {
        if signing.len() != self.edges.len() {
            return Err(Error::SigningLength {
                expected: self.edges.len(),
                got: signing.len(),
            });
        }
        let edges = self
            .edges
            .iter()
            .zip(signing.signs())
            .map(|(&(u, v, _), &s)| (u, v, s))
            .collect();
        Self::with_roles(self.n, edges, self.roles.clone())
    }

    /// Every sign flipped. Signed distances are invariant under this.
    pub fn negated(&self) -> Self {
        let edges = self
            .edges
            .iter()
            .map(|&(u, v, s)| (u, v, s.flipped()))
            .collect();
        Self::with_roles(self.n, edges, self.roles.clone()).expect("negation preserves validity")
    }

    /// Relabels vertices through the permutation `perm` (old id -> new id).
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::InvalidPermutation(format!(
                "permutation has {} entries, tree has {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || seen[p] {
                return Err(Error::InvalidPermutation(
                    "not a bijection on vertex ids".into(),
                ));
            }
            seen[p] = true;
        }
        let edges = self
            .edges
            .iter()
            .map(|&(u, v, s)| (perm[u], perm[v], s))
            .collect();
        let mut roles = vec![VertexRole::Plain; self.n];
        for (v, &r) in self.roles.iter().enumerate() {
            roles[perm[v]] = r;
        }
        Self::with_roles(self.n, edges, roles)
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SamePair(u));
        }
        Ok(())
    }

    /// Signed distance between two distinct vertices: the absolute sign sum
    /// along the unique path joining them.
    pub fn signed_distance(&self, u: usize, v: usize) -> Result<u32> {
        self.check_pair(u, v)?;
        let (sum, _) = self.path_sums(u, v);
        Ok(sum.unsigned_abs() as u32)
    }

    /// Hop count of the unique path between two distinct vertices.
    pub fn hop_distance(&self, u: usize, v: usize) -> Result<u32> {
        self.check_pair(u, v)?;
        let (_, hops) = self.path_sums(u, v);
        Ok(hops)
    }

    // (sign sum, hop count) along the unique u-v path.
    fn path_sums(&self, u: usize, v: usize) -> (i64, u32) {
        let mut parent = vec![usize::MAX; self.n];
        let mut parent_sign = vec![Sign::Plus; self.n];
        let mut stack = vec![u];
        parent[u] = u;
        'outer: while let Some(x) = stack.pop() {
            for &(y, s) in &self.adj[x] {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    parent_sign[y] = s;
                    if y == v {
                        break 'outer;
                    }
                    stack.push(y);
                }
            }
        }
        let mut sum = 0i64;
        let mut hops = 0u32;
        let mut cur = v;
        while cur != u {
            sum += parent_sign[cur].value();
            hops += 1;
            cur = parent[cur];
        }
        (sum, hops)
    }

    /// Signed Wiener index: the sum of signed distances over all unordered
    /// pairs of distinct vertices.
    ///
    /// One depth-first sweep per root carries the running sign sum, so the
    /// whole computation is O(n^2) and exact.
    pub fn signed_wiener(&self) -> u64 {
        self.wiener_by(|sum, _| sum.unsigned_abs())
    }

    /// Wiener index of the underlying unsigned tree (hop-count distances).
    pub fn classic_wiener(&self) -> u64 {
        self.wiener_by(|_, depth| depth as u64)
    }

    fn wiener_by(&self, pair_value: impl Fn(i64, u32) -> u64 + Sync) -> u64 {
        let per_root = |root: usize| {
            let mut total = 0u64;
            let mut stack: Vec<(usize, usize, i64, u32)> = vec![(root, root, 0, 0)];
            while let Some((v, prev, sum, depth)) = stack.pop() {
                for &(y, s) in &self.adj[v] {
                    if y != prev {
                        let nsum = sum + s.value();
                        total += pair_value(nsum, depth + 1);
                        stack.push((y, v, nsum, depth + 1));
                    }
                }
            }
            total
        };
        let doubled: u64 = if self.n >= PARALLEL_ROOTS_THRESHOLD {
            (0..self.n).into_par_iter().map(per_root).sum()
        } else {
            (0..self.n).map(per_root).sum()
        };
        debug_assert_eq!(doubled % 2, 0);
        doubled / 2
    }

    /// Histogram of signed distances over unordered pairs; index = distance.
    pub fn distance_histogram(&self) -> Vec<u64> {
        let mut hist = vec![0u64; self.n.max(1)];
        for root in 0..self.n {
            let mut stack: Vec<(usize, usize, i64)> = vec![(root, root, 0)];
            while let Some((v, prev, sum)) = stack.pop() {
                for &(y, s) in &self.adj[v] {
                    if y != prev {
                        let nsum = sum + s.value();
                        hist[nsum.unsigned_abs() as usize] += 1;
                        stack.push((y, v, nsum));
                    }
                }
            }
        }
        for h in &mut hist {
            *h /= 2;
        }
        while hist.len() > 1 && *hist.last().unwrap() == 0 {
            hist.pop();
        }
        hist
    }

    /// Two-coloring of the tree. Returns `(smaller side, larger side)`;
    /// on a tie the side containing vertex 0 comes first.
    pub fn bipartition(&self) -> (Vec<usize>, Vec<usize>) {
        let mut color = vec![u8::MAX; self.n];
        color[0] = 0;
        let mut stack = vec![0usize];
        while let Some(v) = stack.pop() {
            for &(y, _) in &self.adj[v] {
                if color[y] == u8::MAX {
                    color[y] = 1 - color[v];
                    stack.push(y);
                }
            }
        }
        let side0: Vec<usize> = (0..self.n).filter(|&v| color[v] == 0).collect();
        let side1: Vec<usize> = (0..self.n).filter(|&v| color[v] == 1).collect();
        if side1.len() < side0.len() {
            (side1, side0)
        } else {
            (side0, side1)
        }
    }

    /// Parses the `u v s` edge-list format; vertex count is `1 + max id`.
    /// Rejects anything that is not a tree.
    pub fn from_edge_list(text: &str) -> Result<Self> {
        let edges = parse_edge_list(text)?;
        let n = infer_vertex_count(&edges)?;
        Self::new(n, edges)
    }

    /// Edge-list text, one `u v s` line per edge, in insertion order.
    pub fn to_edge_list(&self) -> String {
        edge_list_string(self.n, &self.edges)
    }
}

/// A connected simple graph with signed edges, for desk-scale experiments.
///
/// Signed distance minimizes |sign sum| over **all** simple paths between the
/// endpoints, by exhaustive enumeration; instances above the cap are rejected
/// rather than approximated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedGraph {
    n: usize,
    edges: Vec<(usize, usize, Sign)>,
    adj: Vec<Vec<(usize, Sign)>>,
}

/// Default vertex cap for simple-path enumeration.
pub const DEFAULT_PATH_ENUMERATION_CAP: usize = 14;

impl SignedGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize, Sign)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let adj = build_adjacency(n, &edges)?;
        if !connected(n, &adj) {
            return Err(Error::Disconnected);
        }
        Ok(SignedGraph { n, edges, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize, Sign)] {
        &self.edges
    }

    /// Signed distance under the default enumeration cap.
    pub fn signed_distance(&self, u: usize, v: usize) -> Result<u32> {
        self.signed_distance_capped(u, v, DEFAULT_PATH_ENUMERATION_CAP)
    }

    /// Signed distance with an explicit vertex cap (at most 64).
    pub fn signed_distance_capped(&self, u: usize, v: usize, cap: usize) -> Result<u32> {
        if self.n > cap.min(64) {
            return Err(Error::InstanceTooLarge {
                size: self.n,
                cap: cap.min(64),
            });
        }
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SamePair(u));
        }
        let mut best = u32::MAX;
        self.all_paths(u, v, 1u64 << u, 0, &mut best);
        debug_assert_ne!(best, u32::MAX, "graph is connected");
        Ok(best)
    }

    fn all_paths(&self, v: usize, target: usize, visited: u64, sum: i64, best: &mut u32) {
        if *best == 0 {
            return;
        }
        if v == target {
            *best = (*best).min(sum.unsigned_abs() as u32);
            return;
        }
        for &(y, s) in &self.adj[v] {
            if visited & (1 << y) == 0 {
                self.all_paths(y, target, visited | (1 << y), sum + s.value(), best);
            }
        }
    }

    pub fn from_edge_list(text: &str) -> Result<Self> {
        let edges = parse_edge_list(text)?;
        let n = infer_vertex_count(&edges)?;
        Self::new(n, edges)
    }

    pub fn to_edge_list(&self) -> String {
        edge_list_string(self.n, &self.edges)
    }
}

fn build_adjacency(n: usize, edges: &[(usize, usize, Sign)]) -> Result<Vec<Vec<(usize, Sign)>>> {
    let mut adj = vec![Vec::new(); n];
    let mut seen = std::collections::HashSet::new();
    for &(u, v, s) in edges {
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        adj[u].push((v, s));
        adj[v].push((u, s));
    }
    Ok(adj)
}

fn connected(n: usize, adj: &[Vec<(usize, Sign)>]) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &(y, _) in &adj[v] {
            if !seen[y] {
                seen[y] = true;
                count += 1;
                stack.push(y);
            }
        }
    }
    count == n
}

/// Parses `u v s` lines; `#` starts a comment, blank lines are skipped,
/// `s` is one of `+1`, `-1`, `+`, `-`.
pub fn parse_edge_list(text: &str) -> Result<Vec<(usize, usize, Sign)>> {
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if tokens.len() != 3 {
            return Err(Error::Parse {
                line,
                message: format!("expected `u v s`, got {} tokens", tokens.len()),
            });
        }
        let parse_id = |tok: &str| -> Result<usize> {
            tok.parse().map_err(|_| Error::Parse {
                line,
                message: format!("invalid vertex id `{tok}`"),
            })
        };
        let u = parse_id(tokens[0])?;
        let v = parse_id(tokens[1])?;
        let s = Sign::parse_token(tokens[2]).ok_or_else(|| Error::Parse {
            line,
            message: format!("invalid sign `{}` (use +1, -1, + or -)", tokens[2]),
        })?;
        edges.push((u, v, s));
    }
    Ok(edges)
}

fn infer_vertex_count(edges: &[(usize, usize, Sign)]) -> Result<usize> {
    edges
        .iter()
        .map(|&(u, v, _)| u.max(v) + 1)
        .max()
        .ok_or(Error::Parse {
            line: 0,
            message: "edge list is empty".into(),
        })
}

fn edge_list_string(n: usize, edges: &[(usize, usize, Sign)]) -> String {
    use fmt::Write;
    let mut out = String::new();
    writeln!(out, "# {} vertices, {} edges", n, edges.len()).unwrap();
    for &(u, v, s) in edges {
        writeln!(out, "{u} {v} {s}").unwrap();
    }
    out
}
