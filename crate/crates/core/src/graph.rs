//! Undirected simple graphs on vertex set `0..n`, bitset vertex sets, and
//! all-pairs shortest-path distances.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Distance sentinel for vertex pairs in different components.
pub const UNREACHABLE: u32 = u32::MAX;

/// Subset of `0..n` stored as a bit vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(n: usize) -> Self {
        VertexSet { n, words: alloc::vec![0u64; n.div_ceil(64)] }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::new(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    pub fn from_members(n: usize, members: &[usize]) -> Self {
        let mut s = Self::new(n);
        for &v in members {
            s.insert(v);
        }
        s
    }

    /// Size of the universe `0..n`, not the cardinality.
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < self.n, "vertex {} outside universe {}", v, self.n);
        self.words[v / 64] |= 1u64 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < self.n);
        self.words[v / 64] &= !(1u64 << (v % 64));
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn cardinality(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut rest = w;
            core::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * 64 + b)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn smallest(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn subtract(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.subtract(other);
        s
    }

    pub fn complement(&self) -> VertexSet {
        let mut s = VertexSet::full(self.n);
        s.subtract(self);
        s
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint_from(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Lexicographic order on the ascending member sequences.  This is the
    /// tie-break order used for canonical witnesses; it differs from any
    /// order on the raw words.
    pub fn cmp_members(&self, other: &VertexSet) -> core::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Undirected simple graph with sorted adjacency lists and bitset rows.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<Vec<usize>>,
    bits: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph on `0..n`, deduplicating edges.  Self-loops and
    /// endpoints outside `0..n` are rejected.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::BadParameter("graph order must be at least 1".into()));
        }
        let mut bits: Vec<VertexSet> = (0..n).map(|_| VertexSet::new(n)).collect();
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::OutOfRangeVertex { vertex: u, order: n });
            }
            if v >= n {
                return Err(Error::OutOfRangeVertex { vertex: v, order: n });
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            bits[u].insert(v);
            bits[v].insert(u);
        }
        let adj: Vec<Vec<usize>> = bits.iter().map(|row| row.to_vec()).collect();
        let m = adj.iter().map(|a| a.len()).sum::<usize>() / 2;
        Ok(Graph { n, m, adj, bits })
    }

    /// Parses the plain edge-list format: an `n m` header line followed by
    /// `m` lines `u v`.  Blank lines and lines starting with `#` are skipped.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let data = raw.trim();
            if data.is_empty() || data.starts_with('#') {
                continue;
            }
            let mut fields = data.split_whitespace();
            let a = fields.next();
            let b = fields.next();
            let extra = fields.next();
            let (a, b) = match (a, b, extra) {
                (Some(a), Some(b), None) => (a, b),
                _ => {
                    return Err(Error::Syntax {
                        line,
                        reason: "expected exactly two integers".into(),
                    })
                }
            };
            let parse = |tok: &str| -> Result<usize> {
                tok.parse::<usize>().map_err(|_| Error::Syntax {
                    line,
                    reason: alloc::format!("invalid integer `{tok}`"),
                })
            };
            let (a, b) = (parse(a)?, parse(b)?);
            if header.is_none() {
                header = Some((a, b));
            } else {
                edges.push((a, b));
            }
        }
        let (n, m) = header.ok_or(Error::Syntax { line: 0, reason: "empty input".into() })?;
        if edges.len() != m {
            return Err(Error::Syntax {
                line: 0,
                reason: alloc::format!("header announces {m} edges, found {}", edges.len()),
            });
        }
        Graph::build(n, &edges)
    }

    /// Serializes to the same edge-list format, edges sorted as `(min, max)`
    /// pairs in lexicographic order.  The output is canonical for a graph.
    pub fn to_edge_list(&self) -> String {
        let mut out = alloc::format!("{} {}\n", self.n, self.m);
        for (u, v) in self.edges() {
            out.push_str(&alloc::format!("{u} {v}\n"));
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn neighbor_bits(&self, v: usize) -> &VertexSet {
        &self.bits[v]
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.bits[v].clone();
        s.insert(v);
        s
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u].contains(v)
    }

    /// Edges as `(min, max)` pairs in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = VertexSet::new(self.n);
        let mut queue = Vec::with_capacity(self.n);
        seen.insert(0);
        queue.push(0);
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            for &w in &self.adj[u] {
                if !seen.contains(w) {
                    seen.insert(w);
                    queue.push(w);
                }
            }
        }
        queue.len() == self.n
    }

    /// BFS distances from every vertex.  Pairs in different components get
    /// [`UNREACHABLE`].
    pub fn distances(&self) -> DistanceMatrix {
        let n = self.n;
        let mut d = alloc::vec![UNREACHABLE; n * n];
        let mut queue = Vec::with_capacity(n);
        for s in 0..n {
            let row = &mut d[s * n..(s + 1) * n];
            queue.clear();
            row[s] = 0;
            queue.push(s);
            let mut head = 0;
            while head < queue.len() {
                let u = queue[head];
                head += 1;
                let du = row[u];
                for &w in &self.adj[u] {
                    if row[w] == UNREACHABLE {
                        row[w] = du + 1;
                        queue.push(w);
                    }
                }
            }
        }
        DistanceMatrix { n, d }
    }

    /// Largest distance over all pairs; rejects disconnected graphs.
    pub fn diameter(&self) -> Result<usize> {
        let dist = self.distances();
        if !dist.is_connected() {
            return Err(Error::DisconnectedGraph);
        }
        Ok((0..self.n)
            .flat_map(|u| (0..self.n).map(move |v| (u, v)))
            .map(|(u, v)| dist.get(u, v))
            .max()
            .unwrap_or(0) as usize)
    }

    /// Vertices of degree one.
    pub fn leaf_set(&self) -> VertexSet {
        let mut s = VertexSet::new(self.n);
        for v in 0..self.n {
            if self.degree(v) == 1 {
                s.insert(v);
            }
        }
        s
    }

    pub fn is_complete(&self) -> bool {
        self.m == self.n * (self.n - 1) / 2
    }

    /// True when some vertex is adjacent to all others; equivalent to
    /// domination number one.  Holds vacuously for the one-vertex graph.
    pub fn has_universal_vertex(&self) -> bool {
        (0..self.n).any(|v| self.degree(v) == self.n - 1)
    }

    pub fn is_tree(&self) -> bool {
        self.m == self.n - 1 && self.is_connected()
    }

    /// Vertex sets of the biconnected components.  A bridge forms a
    /// two-vertex block; isolated vertices belong to no block.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        struct State<'a> {
            g: &'a Graph,
            timer: usize,
            disc: Vec<usize>,
            low: Vec<usize>,
            stack: Vec<(usize, usize)>,
            out: Vec<Vec<usize>>,
        }
        const UNSET: usize = usize::MAX;
        fn dfs(s: &mut State<'_>, v: usize, parent: usize) {
            s.disc[v] = s.timer;
            s.low[v] = s.timer;
            s.timer += 1;
            for &w in s.g.neighbors(v) {
                if w == parent {
                    continue;
                }
                if s.disc[w] == UNSET {
                    s.stack.push((v, w));
                    dfs(s, w, v);
                    s.low[v] = s.low[v].min(s.low[w]);
                    if s.low[w] >= s.disc[v] {
                        let mut members = VertexSet::new(s.g.n());
                        while let Some(&(a, b)) = s.stack.last() {
                            s.stack.pop();
                            members.insert(a);
                            members.insert(b);
                            if (a, b) == (v, w) {
                                break;
                            }
                        }
                        s.out.push(members.to_vec());
                    }
                } else if s.disc[w] < s.disc[v] {
                    s.stack.push((v, w));
                    s.low[v] = s.low[v].min(s.disc[w]);
                }
            }
        }
        let mut state = State {
            g: self,
            timer: 0,
            disc: alloc::vec![UNSET; self.n],
            low: alloc::vec![0; self.n],
            stack: Vec::new(),
            out: Vec::new(),
        };
        for root in 0..self.n {
            if state.disc[root] == UNSET {
                dfs(&mut state, root, usize::MAX);
            }
        }
        state.out
    }

    /// Connected graph each of whose blocks induces a clique.
    pub fn is_block_graph(&self) -> bool {
        if !self.is_connected() {
            return false;
        }
        self.blocks().iter().all(|block| {
            block
                .iter()
                .enumerate()
                .all(|(i, &u)| block[i + 1..].iter().all(|&v| self.has_edge(u, v)))
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.m, self.edges())
    }
}

/// Flat `n * n` matrix of BFS distances.
#[derive(Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn is_connected(&self) -> bool {
        self.d.iter().all(|&x| x != UNREACHABLE)
    }
}

impl fmt::Debug for DistanceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "DistanceMatrix(n={})", self.n)?;
        for u in 0..self.n {
            for v in 0..self.n {
                let x = self.get(u, v);
                if x == UNREACHABLE {
                    write!(f, "  -")?;
                } else {
                    write!(f, "{x:3}")?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::build(n, &edges).unwrap()
    }

    #[test]
    fn build_dedups_and_sorts() {
        let g = Graph::build(3, &[(0, 1), (1, 0), (2, 1), (1, 2)]).unwrap();
        assert_eq!(g.m(), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
        assert_eq!(g.degree(0), 1);
        assert_eq!(g.degree(1), 2);
    }

    #[test]
    fn build_rejects_bad_edges() {
        assert_eq!(
            Graph::build(3, &[(0, 3)]),
            Err(Error::OutOfRangeVertex { vertex: 3, order: 3 })
        );
        assert_eq!(Graph::build(3, &[(1, 1)]), Err(Error::SelfLoop { vertex: 1 }));
        assert!(matches!(Graph::build(0, &[]), Err(Error::BadParameter(_))));
    }

    #[test]
    fn parse_round_trip() {
        let text = "# a triangle with a tail\n4 4\n0 1\n1 2\n2 0\n\n2 3\n";
        let g = Graph::parse_edge_list(text).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 4);
        assert_eq!(g.to_edge_list(), "4 4\n0 1\n0 2\n1 2\n2 3\n");
        let again = Graph::parse_edge_list(&g.to_edge_list()).unwrap();
        assert_eq!(again, g);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Graph::parse_edge_list("2 1\n0\n"),
            Err(Error::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            Graph::parse_edge_list("2 1\n0 x\n"),
            Err(Error::Syntax { line: 2, .. })
        ));
        assert!(matches!(Graph::parse_edge_list(""), Err(Error::Syntax { .. })));
        assert!(matches!(
            Graph::parse_edge_list("3 2\n0 1\n"),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            Graph::parse_edge_list("2 1\n0 5\n"),
            Err(Error::OutOfRangeVertex { vertex: 5, order: 2 })
        ));
    }

    #[test]
    fn distances_on_small_graphs() {
        let p3 = path(3);
        let d = p3.distances();
        assert_eq!(d.get(0, 2), 2);
        assert_eq!(d.get(2, 0), 2);
        assert_eq!(d.get(1, 1), 0);

        let c4 = Graph::build(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let d = c4.distances();
        assert_eq!(d.get(0, 2), 2);
        assert_eq!(d.get(1, 3), 2);
        assert_eq!(d.get(0, 1), 1);

        let split = Graph::build(4, &[(0, 1), (2, 3)]).unwrap();
        let d = split.distances();
        assert_eq!(d.get(0, 3), UNREACHABLE);
        assert!(!d.is_connected());
        assert!(split.diameter().is_err());
    }

    #[test]
    fn diameter_examples() {
        let k4 = Graph::build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.diameter().unwrap(), 1);
        assert_eq!(path(5).diameter().unwrap(), 4);
        let k1 = Graph::build(1, &[]).unwrap();
        assert_eq!(k1.diameter().unwrap(), 0);
        assert!(k1.is_connected());
    }

    #[test]
    fn leaves_and_recognizers() {
        assert_eq!(path(4).leaf_set().to_vec(), alloc::vec![0, 3]);
        let c5 = Graph::build(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!(c5.leaf_set().is_empty());
        assert!(c5.is_connected());
        assert!(!c5.is_complete());
        assert!(!c5.has_universal_vertex());
        assert!(path(4).is_tree());
        assert!(!c5.is_tree());
        let star = Graph::build(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(star.has_universal_vertex());
        assert_eq!(star.leaf_set().cardinality(), 3);
    }

    #[test]
    fn vertex_set_basics() {
        let mut s = VertexSet::new(70);
        s.insert(0);
        s.insert(65);
        s.insert(3);
        assert_eq!(s.to_vec(), alloc::vec![0, 3, 65]);
        assert_eq!(s.cardinality(), 3);
        assert!(s.contains(65));
        s.remove(3);
        assert!(!s.contains(3));
        assert_eq!(s.smallest(), Some(0));
        assert_eq!(alloc::format!("{s}"), "{0, 65}");
        assert_eq!(alloc::format!("{}", VertexSet::new(4)), "{}");

        let a = VertexSet::from_members(6, &[0, 2, 4]);
        let b = VertexSet::from_members(6, &[2, 3]);
        assert_eq!(a.union(&b).to_vec(), alloc::vec![0, 2, 3, 4]);
        assert_eq!(a.intersection(&b).to_vec(), alloc::vec![2]);
        assert_eq!(a.difference(&b).to_vec(), alloc::vec![0, 4]);
        assert_eq!(a.complement().to_vec(), alloc::vec![1, 3, 5]);
        assert!(VertexSet::from_members(6, &[2]).is_subset_of(&b));
        assert!(a.is_disjoint_from(&VertexSet::from_members(6, &[1, 5])));
    }

    #[test]
    fn member_order_is_sequence_lex() {
        // {0, 70} < {1, 2} even though the high word of the first is larger.
        let a = VertexSet::from_members(80, &[0, 70]);
        let b = VertexSet::from_members(80, &[1, 2]);
        assert_eq!(a.cmp_members(&b), core::cmp::Ordering::Less);
    }

    #[test]
    fn blocks_of_bowtie_and_path() {
        let bowtie =
            Graph::build(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        let mut blocks = bowtie.blocks();
        blocks.sort();
        assert_eq!(blocks, alloc::vec![alloc::vec![0, 1, 2], alloc::vec![2, 3, 4]]);

        let mut path_blocks = path(4).blocks();
        path_blocks.sort();
        assert_eq!(
            path_blocks,
            alloc::vec![alloc::vec![0, 1], alloc::vec![1, 2], alloc::vec![2, 3]]
        );
    }

    #[test]
    fn block_graph_recognition() {
        let bowtie =
            Graph::build(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert!(bowtie.is_block_graph());
        assert!(path(4).is_block_graph());
        let k4 = Graph::build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(k4.is_block_graph());
        let c4 = Graph::build(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(!c4.is_block_graph());
        let c5 = Graph::build(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!(!c5.is_block_graph());
        let two_parts = Graph::build(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_parts.is_block_graph());
    }
}
