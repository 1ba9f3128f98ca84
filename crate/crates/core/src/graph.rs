//! Ordered-graph data model: vertices are identified with positions `1..=n`,
//! edges are unordered pairs, and every vertex carries sorted predecessor
//! (`N⁻`) and successor (`N⁺`) lists.

use std::fmt::Write as _;
use std::sync::OnceLock;

use thiserror::Error;

use crate::pattern::{PairClass, Pattern};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphParseError {
    #[error("line {line}: malformed record `{text}`")]
    Malformed { line: usize, text: String },
    #[error("line {line}: vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: endpoints must satisfy u < v")]
    UnorderedEndpoints { line: usize },
    #[error("line {line}: duplicate edge {{{u},{v}}}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("expected {expected} edges, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("missing header line")]
    MissingHeader,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge count {m} exceeds maximum {max} for n={n}")]
    TooManyEdges { n: usize, m: usize, max: usize },
    #[error("invalid edge ({u},{v}) for n={n}")]
    InvalidEdge { u: usize, v: usize, n: usize },
    #[error("duplicate edge ({u},{v})")]
    DuplicateEdge { u: usize, v: usize },
}

/// Packed adjacency matrix, built lazily for detectors that need O(1)
/// adjacency queries. Linear-time detectors never touch it.
#[derive(Debug)]
pub struct BitMatrix {
    n: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    fn build(g: &OrderedGraph) -> Self {
        let n = g.n();
        let words_per_row = n / 64 + 1;
        let mut bits = vec![0u64; (n + 1) * words_per_row];
        for &(u, v) in g.edges() {
            bits[u * words_per_row + v / 64] |= 1 << (v % 64);
            bits[v * words_per_row + u / 64] |= 1 << (u % 64);
        }
        BitMatrix { n, words_per_row, bits }
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u >= 1 && u <= self.n && v >= 1 && v <= self.n);
        self.bits[u * self.words_per_row + v / 64] >> (v % 64) & 1 == 1
    }
}

/// An immutable vertex-ordered graph. Positions run `1..=n`.
#[derive(Debug)]
pub struct OrderedGraph {
    n: usize,
    /// Edges as pairs (u, v) with u < v, sorted lexicographically.
    edges: Vec<(usize, usize)>,
    /// pred[i] = sorted neighbours of i below i (index 0 unused).
    pred: Vec<Vec<usize>>,
    /// succ[i] = sorted neighbours of i above i (index 0 unused).
    succ: Vec<Vec<usize>>,
    adjacency: OnceLock<BitMatrix>,
}

impl OrderedGraph {
    /// Builds a graph from an edge list, validating range, loops and
    /// duplicates. Accepts endpoints in either order.
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Self, GraphError> {
        let max = n * n.saturating_sub(1) / 2;
        if edge_list.len() > max {
            return Err(GraphError::TooManyEdges { n, m: edge_list.len(), max });
        }
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(a, b) in edge_list {
            if a == b || a < 1 || b < 1 || a > n || b > n {
                return Err(GraphError::InvalidEdge { u: a, v: b, n });
            }
            edges.push((a.min(b), a.max(b)));
        }
        let edges = sort_edges(n, edges);
        for w in edges.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge { u: w[0].0, v: w[0].1 });
            }
        }
        Ok(Self::from_sorted_edges(n, edges))
    }

    fn from_sorted_edges(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let (pred, succ) = build_neighborhoods(n, &edges);
        OrderedGraph { n, edges, pred, succ, adjacency: OnceLock::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges as (u, v) pairs with u < v, lexicographically sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbours of `i` strictly below `i`.
    pub fn pred(&self, i: usize) -> &[usize] {
        &self.pred[i]
    }

    /// Sorted neighbours of `i` strictly above `i`.
    pub fn succ(&self, i: usize) -> &[usize] {
        &self.succ[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.pred[i].len() + self.succ[i].len()
    }

    /// O(log deg) adjacency test; positions need not be ordered.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u == v || u < 1 || v < 1 || u > self.n || v > self.n {
            return false;
        }
        let (a, b) = (u.min(v), u.max(v));
        self.succ[a].binary_search(&b).is_ok()
    }

    /// O(1) adjacency queries backed by the lazily-built bit matrix.
    pub fn adjacency_matrix(&self) -> &BitMatrix {
        self.adjacency.get_or_init(|| BitMatrix::build(self))
    }

    /// Relabels every position i to n+1-i, reversing the order.
    pub fn mirror(&self) -> OrderedGraph {
        let n = self.n;
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| (n + 1 - v, n + 1 - u))
            .collect();
        OrderedGraph::from_sorted_edges(n, sort_edges(n, edges))
    }

    /// Same vertices; a pair is an edge iff it was not. Θ(n²).
    pub fn complement(&self) -> OrderedGraph {
        let n = self.n;
        let mut edges = Vec::new();
        for u in 1..=n {
            let mut it = self.succ[u].iter().copied().peekable();
            for v in u + 1..=n {
                if it.peek() == Some(&v) {
                    it.next();
                } else {
                    edges.push((u, v));
                }
            }
        }
        OrderedGraph::from_sorted_edges(n, edges)
    }

    /// Canonical text rendering; `parse` round-trips it byte-exactly.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Parses the edge-list format: header `n m`, then m lines `u v` with
    /// 1 ≤ u < v ≤ n. `#` starts a comment, blank lines are ignored.
    pub fn parse(text: &str) -> Result<OrderedGraph, GraphParseError> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut edge_lines: Vec<usize> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let mut it = content.split_whitespace();
            let a = it.next();
            let b = it.next();
            let (a, b) = match (a, b, it.next()) {
                (Some(a), Some(b), None) => (a, b),
                _ => return Err(GraphParseError::Malformed { line, text: content.into() }),
            };
            let parse_num = |s: &str| -> Result<usize, GraphParseError> {
                s.parse()
                    .map_err(|_| GraphParseError::Malformed { line, text: content.into() })
            };
            let (a, b) = (parse_num(a)?, parse_num(b)?);
            match header {
                None => header = Some((a, b)),
                Some((n, _)) => {
                    for &x in &[a, b] {
                        if x < 1 || x > n {
                            return Err(GraphParseError::VertexOutOfRange { line, vertex: x, n });
                        }
                    }
                    if a == b {
                        return Err(GraphParseError::SelfLoop { line, vertex: a });
                    }
                    if a > b {
                        return Err(GraphParseError::UnorderedEndpoints { line });
                    }
                    edges.push((a, b));
                    edge_lines.push(line);
                }
            }
        }
        let (n, m) = header.ok_or(GraphParseError::MissingHeader)?;
        if edges.len() != m {
            return Err(GraphParseError::EdgeCountMismatch { expected: m, found: edges.len() });
        }
        // Duplicate detection reports the later of the two offending lines.
        let mut seen: Vec<(usize, usize, usize)> = edges
            .iter()
            .zip(&edge_lines)
            .map(|(&(u, v), &l)| (u, v, l))
            .collect();
        seen.sort_unstable();
        for w in seen.windows(2) {
            if (w[0].0, w[0].1) == (w[1].0, w[1].1) {
                return Err(GraphParseError::DuplicateEdge { line: w[1].2, u: w[1].0, v: w[1].1 });
            }
        }
        Ok(OrderedGraph::from_sorted_edges(
            n,
            seen.into_iter().map(|(u, v, _)| (u, v)).collect(),
        ))
    }
}

/// Counting sort of edge pairs by (u, v): radix pass on v, then stable
/// pass on u. Never comparison-sorts, so neighbour lists stay O(n+m).
fn sort_edges(n: usize, edges: Vec<(usize, usize)>) -> Vec<(usize, usize)> {
    let mut by_v: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n + 1];
    for e in edges {
        by_v[e.1].push(e);
    }
    let mut by_u: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n + 1];
    for bucket in by_v {
        for e in bucket {
            by_u[e.0].push(e);
        }
    }
    by_u.into_iter().flatten().collect()
}

/// Sorted N⁻/N⁺ lists built by counting over positions in O(n+m).
fn build_neighborhoods(
    n: usize,
    sorted_edges: &[(usize, usize)],
) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let mut pred: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    // Edges arrive sorted by (u, v): succ lists fill in increasing order.
    for &(u, v) in sorted_edges {
        succ[u].push(v);
    }
    // A second pass grouped by v keeps pred lists increasing: iterate u
    // ascending so that each pred[v] receives its entries in order.
    for &(u, v) in sorted_edges {
        pred[v].push(u);
    }
    for v in 1..=n {
        debug_assert!(pred[v].windows(2).all(|w| w[0] < w[1]));
        debug_assert!(succ[v].windows(2).all(|w| w[0] < w[1]));
    }
    (pred, succ)
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WitnessError {
    #[error("witness positions must be strictly increasing")]
    NotIncreasing,
    #[error("witness positions start at 1")]
    OutOfRange,
}

/// A strictly increasing tuple of graph positions realizing a pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness(Vec<usize>);

impl Witness {
    pub fn new(positions: Vec<usize>) -> Result<Self, WitnessError> {
        if positions.first().is_some_and(|&p| p < 1) {
            return Err(WitnessError::OutOfRange);
        }
        if !positions.windows(2).all(|w| w[0] < w[1]) {
            return Err(WitnessError::NotIncreasing);
        }
        Ok(Witness(positions))
    }

    pub fn positions(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The image of this witness under the order reversal of a graph on
    /// n vertices: each position p maps to n+1-p and the tuple reverses.
    pub fn mirror(&self, n: usize) -> Witness {
        let mut positions: Vec<usize> = self.0.iter().map(|&p| n + 1 - p).collect();
        positions.reverse();
        Witness(positions)
    }
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for p in &self.0 {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RealizationError {
    #[error("witness length {got} does not match pattern size {want}")]
    LengthMismatch { got: usize, want: usize },
    #[error("witness position {pos} exceeds n={n}")]
    OutOfRange { pos: usize, n: usize },
}

/// Does the ordered subgraph induced by `x` realize `p`? Mandatory pairs
/// must be edges, forbidden pairs non-edges, undecided pairs are free.
pub fn is_realization(
    g: &OrderedGraph,
    x: &Witness,
    p: &Pattern,
) -> Result<bool, RealizationError> {
    let pos = x.positions();
    if pos.len() != p.k() {
        return Err(RealizationError::LengthMismatch { got: pos.len(), want: p.k() });
    }
    if let Some(&last) = pos.last() {
        if last > g.n() {
            return Err(RealizationError::OutOfRange { pos: last, n: g.n() });
        }
    }
    for a in 1..=p.k() {
        for b in a + 1..=p.k() {
            let present = g.has_edge(pos[a - 1], pos[b - 1]);
            match p.pair(a, b) {
                PairClass::Mandatory if !present => return Ok(false),
                PairClass::Forbidden if present => return Ok(false),
                _ => {}
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::Pattern;
    use proptest::prelude::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> OrderedGraph {
        OrderedGraph::new(n, edges).unwrap()
    }

    #[test]
    fn parse_basic() {
        let g = OrderedGraph::parse("3 2\n1 2\n2 3\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), &[(1, 2), (2, 3)]);
    }

    #[test]
    fn parse_empty_edges() {
        let g = OrderedGraph::parse("2 0\n").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.m(), 0);
    }

    #[test]
    fn parse_self_loop_reports_line() {
        let err = OrderedGraph::parse("3 1\n2 2\n").unwrap_err();
        assert_eq!(err, GraphParseError::SelfLoop { line: 2, vertex: 2 });
    }

    #[test]
    fn parse_rejects_duplicates() {
        let err = OrderedGraph::parse("3 2\n1 2\n1 2\n").unwrap_err();
        assert_eq!(err, GraphParseError::DuplicateEdge { line: 3, u: 1, v: 2 });
    }

    #[test]
    fn parse_out_of_range_and_count() {
        let err = OrderedGraph::parse("3 1\n1 4\n").unwrap_err();
        assert_eq!(err, GraphParseError::VertexOutOfRange { line: 2, vertex: 4, n: 3 });
        let err = OrderedGraph::parse("3 2\n1 2\n").unwrap_err();
        assert_eq!(err, GraphParseError::EdgeCountMismatch { expected: 2, found: 1 });
    }

    #[test]
    fn parse_comments_and_blank_lines() {
        let g = OrderedGraph::parse("# header\n3 1\n\n1 3 # chord\n").unwrap();
        assert_eq!(g.edges(), &[(1, 3)]);
    }

    #[test]
    fn neighborhoods_examples() {
        let g = graph(4, &[(1, 3), (1, 4), (2, 3)]);
        assert_eq!(g.succ(1), &[3, 4]);
        assert_eq!(g.pred(3), &[1, 2]);
        assert_eq!(g.pred(4), &[1]);

        let star = graph(4, &[(1, 2), (1, 3), (1, 4)]);
        assert_eq!(star.succ(1), &[2, 3, 4]);
        for k in 2..=4 {
            assert_eq!(star.pred(k), &[1]);
        }
    }

    #[test]
    fn mirror_examples() {
        let g = graph(3, &[(1, 2)]);
        assert_eq!(g.mirror().edges(), &[(2, 3)]);
        let palindromic = graph(3, &[(1, 3)]);
        assert_eq!(palindromic.mirror().edges(), &[(1, 3)]);
        let g = graph(4, &[(1, 2), (2, 4)]);
        assert_eq!(g.mirror().edges(), &[(1, 3), (3, 4)]);
    }

    #[test]
    fn complement_examples() {
        let g = graph(3, &[]);
        assert_eq!(g.complement().edges(), &[(1, 2), (1, 3), (2, 3)]);
        let g = graph(2, &[(1, 2)]);
        assert_eq!(g.complement().m(), 0);
    }

    #[test]
    fn is_realization_examples() {
        let interval = Pattern::from_pairs(3, &[(1, 3)], &[(1, 2)]).unwrap();
        let g = graph(3, &[(1, 3)]);
        let x = Witness::new(vec![1, 2, 3]).unwrap();
        assert!(is_realization(&g, &x, &interval).unwrap());

        let g2 = graph(3, &[(1, 2), (1, 3)]);
        assert!(!is_realization(&g2, &x, &interval).unwrap());

        let free = Pattern::new(3);
        assert!(is_realization(&g2, &x, &free).unwrap());

        let short = Witness::new(vec![1, 2]).unwrap();
        assert!(is_realization(&g, &short, &interval).is_err());
    }

    #[test]
    fn witness_validation() {
        assert!(Witness::new(vec![1, 2, 2]).is_err());
        assert!(Witness::new(vec![0, 1]).is_err());
        assert!(Witness::new(vec![2, 5, 9]).is_ok());
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = OrderedGraph> {
        (1..=max_n).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (1..=n)
                .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
                .collect();
            proptest::sample::subsequence(pairs.clone(), 0..=pairs.len())
                .prop_map(move |es| OrderedGraph::new(n, &es).unwrap())
        })
    }

    proptest! {
        #[test]
        fn render_parse_round_trip(g in arb_graph(9)) {
            let back = OrderedGraph::parse(&g.render()).unwrap();
            prop_assert_eq!(g.edges(), back.edges());
            prop_assert_eq!(g.n(), back.n());
        }

        #[test]
        fn mirror_involution(g in arb_graph(9)) {
            prop_assert_eq!(g.mirror().mirror().edges(), g.edges());
        }

        #[test]
        fn complement_involution(g in arb_graph(9)) {
            prop_assert_eq!(g.complement().complement().edges(), g.edges());
        }

        #[test]
        fn degree_sum(g in arb_graph(9)) {
            let total: usize = (1..=g.n()).map(|i| g.pred(i).len() + g.succ(i).len()).sum();
            prop_assert_eq!(total, 2 * g.m());
        }
    }
}
