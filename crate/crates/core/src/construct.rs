//! Graph products, named families, seeded random generators, and exhaustive
//! enumeration of small instances.
//!
//! Product vertices are indexed row-major: the pair `(g, h)` of factors of
//! orders `nG, nH` becomes `g * nH + h`.  The corona places the host graph
//! first, then the copies of the second factor in host-vertex order.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// `(g, h) -> g * nH + h`
pub fn product_index(g: usize, h: usize, n_h: usize) -> usize {
    g * n_h + h
}

/// Cartesian product: `(g,h) ~ (g',h')` when one coordinate is equal and the
/// other pair is an edge of its factor.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let (ng, nh) = (g.n(), h.n());
    let mut edges = Vec::new();
    for (a, b) in g.edges() {
        for x in 0..nh {
            edges.push((product_index(a, x, nh), product_index(b, x, nh)));
        }
    }
    for x in 0..ng {
        for (a, b) in h.edges() {
            edges.push((product_index(x, a, nh), product_index(x, b, nh)));
        }
    }
    Graph::build(ng * nh, &edges).expect("factor edges stay in range")
}

/// Lexicographic product: `(g,h) ~ (g',h')` when `gg'` is an edge of the
/// first factor, or `g = g'` and `hh'` is an edge of the second.
pub fn lexicographic_product(g: &Graph, h: &Graph) -> Graph {
    let (ng, nh) = (g.n(), h.n());
    let mut edges = Vec::new();
    for (a, b) in g.edges() {
        for x in 0..nh {
            for y in 0..nh {
                edges.push((product_index(a, x, nh), product_index(b, y, nh)));
            }
        }
    }
    for x in 0..ng {
        for (a, b) in h.edges() {
            edges.push((product_index(x, a, nh), product_index(x, b, nh)));
        }
    }
    Graph::build(ng * nh, &edges).expect("factor edges stay in range")
}

/// Join: disjoint union plus every edge between the two sides.  The second
/// graph's vertices are shifted by the first graph's order.
pub fn join_graph(g: &Graph, h: &Graph) -> Graph {
    let (ng, nh) = (g.n(), h.n());
    let mut edges = g.edges();
    for (a, b) in h.edges() {
        edges.push((ng + a, ng + b));
    }
    for u in 0..ng {
        for v in 0..nh {
            edges.push((u, ng + v));
        }
    }
    Graph::build(ng + nh, &edges).expect("shifted edges stay in range")
}

/// Corona: one copy of the second factor per host vertex, fully joined to
/// it.  Copy `i` occupies `nG + i*nH .. nG + (i+1)*nH`.
pub fn corona_product(g: &Graph, h: &Graph) -> Graph {
    let (ng, nh) = (g.n(), h.n());
    let mut edges = g.edges();
    for i in 0..ng {
        let base = ng + i * nh;
        for (a, b) in h.edges() {
            edges.push((base + a, base + b));
        }
        for j in 0..nh {
            edges.push((i, base + j));
        }
    }
    Graph::build(ng + ng * nh, &edges).expect("copy edges stay in range")
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::BadParameter("path needs n >= 1".into()));
    }
    let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    Graph::build(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::BadParameter("cycle needs n >= 3".into()));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::build(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::BadParameter("complete graph needs n >= 1".into()));
    }
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            edges.push((u, v));
        }
    }
    Graph::build(n, &edges)
}

/// Star with the center at vertex 0 and the given number of leaves.
pub fn star(leaves: usize) -> Result<Graph> {
    if leaves == 0 {
        return Err(Error::BadParameter("star needs at least one leaf".into()));
    }
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    Graph::build(leaves + 1, &edges)
}

/// Complete bipartite graph; the first side is `0..a`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::BadParameter("both sides need at least one vertex".into()));
    }
    let mut edges = Vec::new();
    for u in 0..a {
        for v in 0..b {
            edges.push((u, a + v));
        }
    }
    Graph::build(a + b, &edges)
}

/// Cycle `0..n` plus outer vertices `n+i`, each adjacent to the consecutive
/// cycle vertices `i` and `(i+1) mod n`.
pub fn crown(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::BadParameter("crown needs n >= 3".into()));
    }
    let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    for i in 0..n {
        edges.push((n + i, i));
        edges.push((n + i, (i + 1) % n));
    }
    Graph::build(2 * n, &edges)
}

/// 12-cycle with five parallel chords; exactly the two chordless vertices 0
/// and 6 are simplicial.  Used as a fixed regression instance.
pub fn figure1() -> Graph {
    let mut edges: Vec<_> = (0..12).map(|i| (i, (i + 1) % 12)).collect();
    edges.extend([(1, 11), (2, 10), (3, 9), (4, 8), (5, 7)]);
    Graph::build(12, &edges).expect("fixed instance")
}

/// Theta-like 11-vertex instance whose largest feasible set is unique.
pub fn figure2() -> Graph {
    let edges = [
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 4),
        (4, 5),
        (5, 6),
        (5, 7),
        (7, 8),
        (8, 9),
        (9, 1),
        (2, 10),
        (10, 7),
        (4, 10),
        (10, 9),
    ];
    Graph::build(11, &edges).expect("fixed instance")
}

/// The 11-vertex instance extended by two extra degree-two vertices.
pub fn figure3() -> Graph {
    let mut edges = figure2().edges();
    edges.extend([(2, 11), (11, 7), (4, 12), (12, 9)]);
    Graph::build(13, &edges).expect("fixed instance")
}

/// Triple Cartesian product of two triangles and an edge.
pub fn figure4_host() -> Graph {
    let k3 = complete(3).expect("fixed instance");
    let k2 = complete(2).expect("fixed instance");
    cartesian_product(&cartesian_product(&k3, &k3), &k2)
}

/// Uniform random labeled tree via a random sequence decoded with the
/// standard smallest-leaf rule.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::BadParameter("random tree needs n >= 1".into()));
    }
    if n <= 2 {
        return path(n);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = alloc::vec![1usize; n];
    for &v in &code {
        degree[v] += 1;
    }
    let mut heap: alloc::collections::BinaryHeap<core::cmp::Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(core::cmp::Reverse)
        .collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in &code {
        let core::cmp::Reverse(leaf) = heap.pop().expect("a tree code always leaves a leaf");
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            heap.push(core::cmp::Reverse(v));
        }
    }
    let core::cmp::Reverse(a) = heap.pop().expect("two leaves remain");
    let core::cmp::Reverse(b) = heap.pop().expect("two leaves remain");
    edges.push((a, b));
    Graph::build(n, &edges)
}

/// Edge-probability-1/2 random graph, resampled until connected.
pub fn random_connected(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::BadParameter("random graph needs n >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut edges = Vec::new();
        for v in 1..n {
            for u in 0..v {
                if rng.gen_bool(0.5) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::build(n, &edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
}

/// Random connected graph whose blocks are cliques: each block picks a size
/// in `2..=max_block` and is glued to a uniformly chosen existing vertex.
pub fn random_block(blocks: usize, max_block: usize, seed: u64) -> Result<Graph> {
    if blocks == 0 {
        return Err(Error::BadParameter("need at least one block".into()));
    }
    if max_block < 2 {
        return Err(Error::BadParameter("blocks need at least two vertices".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sizes: Vec<usize> = (0..blocks).map(|_| rng.gen_range(2..=max_block)).collect();
    let mut n = sizes[0];
    let mut cliques = alloc::vec![(0..n).collect::<Vec<_>>()];
    for &s in &sizes[1..] {
        let cut = rng.gen_range(0..n);
        let mut members = alloc::vec![cut];
        members.extend(n..n + s - 1);
        n += s - 1;
        cliques.push(members);
    }
    let mut edges = Vec::new();
    for clique in &cliques {
        for (i, &u) in clique.iter().enumerate() {
            for &v in &clique[i + 1..] {
                edges.push((u, v));
            }
        }
    }
    Graph::build(n, &edges)
}

/// Parameter record for [`generate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    Star { leaves: usize },
    CompleteBipartite { a: usize, b: usize },
    Crown { n: usize },
    RandomTree { n: usize, seed: u64 },
    RandomConnected { n: usize, seed: u64 },
    RandomBlock { blocks: usize, max_block: usize, seed: u64 },
    Figure1,
    Figure2,
    Figure3,
    Figure4Host,
}

/// Builds the requested family member.  The same parameters always produce
/// the identical graph, including for the seeded random families.
pub fn generate(family: &Family) -> Result<Graph> {
    match *family {
        Family::Path { n } => path(n),
        Family::Cycle { n } => cycle(n),
        Family::Complete { n } => complete(n),
        Family::Star { leaves } => star(leaves),
        Family::CompleteBipartite { a, b } => complete_bipartite(a, b),
        Family::Crown { n } => crown(n),
        Family::RandomTree { n, seed } => random_tree(n, seed),
        Family::RandomConnected { n, seed } => random_connected(n, seed),
        Family::RandomBlock { blocks, max_block, seed } => random_block(blocks, max_block, seed),
        Family::Figure1 => Ok(figure1()),
        Family::Figure2 => Ok(figure2()),
        Family::Figure3 => Ok(figure3()),
        Family::Figure4Host => Ok(figure4_host()),
    }
}

fn rooted_code(g: &Graph, v: usize, parent: Option<usize>) -> String {
    let mut parts: Vec<String> = g
        .neighbors(v)
        .iter()
        .filter(|&&w| Some(w) != parent)
        .map(|&w| rooted_code(g, w, Some(v)))
        .collect();
    parts.sort();
    let mut out = String::from("(");
    for p in parts {
        out.push_str(&p);
    }
    out.push(')');
    out
}

/// Isomorphism-invariant code of a free tree: strip leaves to find the one
/// or two central vertices, then combine their rooted codes.
fn tree_code(g: &Graph) -> String {
    let n = g.n();
    if n == 1 {
        return String::from("()");
    }
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = alloc::vec![false; n];
    let mut remaining = n;
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            remaining -= 1;
            for &w in g.neighbors(v) {
                if !removed[w] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    let centers: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    match centers[..] {
        [c] => rooted_code(g, c, None),
        [c1, c2] => {
            let a = rooted_code(g, c1, Some(c2));
            let b = rooted_code(g, c2, Some(c1));
            let (a, b) = if a <= b { (a, b) } else { (b, a) };
            alloc::format!("[{a}{b}]")
        }
        _ => unreachable!("a tree has one or two centers"),
    }
}

/// One representative per isomorphism class of trees on `n` vertices, built
/// by attaching a leaf to every smaller representative and deduplicating by
/// canonical code.  Sorted by code for a stable order.
pub fn free_trees(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::BadParameter("trees need n >= 1".into()));
    }
    let mut reps = alloc::vec![Graph::build(1, &[]).expect("single vertex")];
    for k in 2..=n {
        let mut seen: BTreeMap<String, Graph> = BTreeMap::new();
        for t in &reps {
            let mut edges = t.edges();
            for v in 0..k - 1 {
                edges.push((v, k - 1));
                let grown = Graph::build(k, &edges).expect("leaf extension");
                seen.entry(tree_code(&grown)).or_insert(grown);
                edges.pop();
            }
        }
        reps = seen.into_values().collect();
    }
    Ok(reps)
}

/// Every labeled connected graph on `n` vertices, in increasing order of the
/// edge-subset bitmask.  No isomorphism reduction; counts grow as the
/// connected-graph sequence 1, 1, 4, 38, 728, 26704.
pub fn labeled_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    const LIMIT: usize = 6;
    if n == 0 {
        return Err(Error::BadParameter("need n >= 1".into()));
    }
    if n > LIMIT {
        return Err(Error::TooLarge { order: n, limit: LIMIT });
    }
    let mut pairs = Vec::new();
    for v in 1..n {
        for u in 0..v {
            pairs.push((u, v));
        }
    }
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|&(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::build(n, &edges)?;
        if g.is_connected() {
            out.push(g);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::vec;

    #[test]
    fn cartesian_square_of_edges_is_a_square() {
        let k2 = complete(2).unwrap();
        let c4 = cartesian_product(&k2, &k2);
        assert_eq!(c4.edges(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn cartesian_grid_shape() {
        let g = cartesian_product(&path(2).unwrap(), &path(3).unwrap());
        assert_eq!(g.n(), 6);
        assert_eq!(g.m(), 7);
        assert_eq!(g.diameter().unwrap(), 3);
    }

    #[test]
    fn cartesian_distances_add() {
        let g = path(4).unwrap();
        let h = cycle(5).unwrap();
        let p = cartesian_product(&g, &h);
        let (dg, dh, dp) = (g.distances(), h.distances(), p.distances());
        for a in 0..4 {
            for b in 0..5 {
                for c in 0..4 {
                    for d in 0..5 {
                        assert_eq!(
                            dp.get(product_index(a, b, 5), product_index(c, d, 5)),
                            dg.get(a, c) + dh.get(b, d)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn triple_cartesian_product_shape() {
        let g = figure4_host();
        assert_eq!(g.n(), 18);
        assert_eq!(g.m(), 45);
        assert_eq!(g.diameter().unwrap(), 3);
        assert!((0..18).all(|v| g.degree(v) == 5));
    }

    #[test]
    fn lexicographic_with_edge_host_is_a_join_of_copies() {
        let p3 = path(3).unwrap();
        let lex = lexicographic_product(&complete(2).unwrap(), &p3);
        let join = join_graph(&p3, &p3);
        assert_eq!(lex, join);
    }

    #[test]
    fn lexicographic_identities_and_counts() {
        let p3 = path(3).unwrap();
        let k1 = complete(1).unwrap();
        assert_eq!(lexicographic_product(&p3, &k1), p3);
        let g = lexicographic_product(&cycle(5).unwrap(), &complete(2).unwrap());
        assert_eq!(g.n(), 10);
        assert_eq!(g.m(), 25);
    }

    #[test]
    fn lexicographic_distance_rule() {
        // Distances: host distance for different fibers, min(copy distance, 2)
        // inside a fiber.
        let g = path(4).unwrap();
        let h = path(3).unwrap();
        let lex = lexicographic_product(&g, &h);
        let (dg, dh, dl) = (g.distances(), h.distances(), lex.distances());
        for a in 0..4 {
            for b in 0..3 {
                for c in 0..4 {
                    for d in 0..3 {
                        let expect = if a == c { dh.get(b, d).min(2) } else { dg.get(a, c) };
                        assert_eq!(dl.get(product_index(a, b, 3), product_index(c, d, 3)), expect);
                    }
                }
            }
        }
    }

    #[test]
    fn join_shapes() {
        let p4 = path(4).unwrap();
        let j = join_graph(&p4, &p4);
        assert_eq!(j.n(), 8);
        assert_eq!(j.m(), 22);
        let star_like = join_graph(&complete(1).unwrap(), &path(3).unwrap());
        assert!(star_like.has_universal_vertex());
        assert_eq!(join_graph(&complete(2).unwrap(), &complete(2).unwrap()), complete(4).unwrap());
    }

    #[test]
    fn corona_shapes() {
        let single = corona_product(&complete(1).unwrap(), &path(3).unwrap());
        assert_eq!(single, join_graph(&complete(1).unwrap(), &path(3).unwrap()));

        let g = corona_product(&path(3).unwrap(), &complete(2).unwrap());
        assert_eq!(g.n(), 9);
        assert_eq!(g.m(), 11);

        let sun = corona_product(&cycle(5).unwrap(), &complete(1).unwrap());
        assert_eq!(sun.n(), 10);
        assert_eq!(sun.leaf_set().cardinality(), 5);
    }

    #[test]
    fn named_families() {
        assert_eq!(path(1).unwrap().n(), 1);
        assert_eq!(cycle(6).unwrap().m(), 6);
        assert!(cycle(2).is_err());
        assert!(complete(8).unwrap().is_complete());
        assert_eq!(star(3).unwrap().degree(0), 3);
        let kb = complete_bipartite(2, 3).unwrap();
        assert_eq!(kb.m(), 6);
        assert_eq!(kb.diameter().unwrap(), 2);
        let cr = crown(5).unwrap();
        assert_eq!(cr.n(), 10);
        assert_eq!(cr.m(), 15);
    }

    #[test]
    fn fixed_instances() {
        let f1 = figure1();
        assert_eq!((f1.n(), f1.m()), (12, 17));
        assert_eq!(f1.diameter().unwrap(), 6);
        assert_eq!((0..12).filter(|&v| f1.degree(v) == 2).count(), 2);
        let f2 = figure2();
        assert_eq!((f2.n(), f2.m()), (11, 14));
        let f3 = figure3();
        assert_eq!((f3.n(), f3.m()), (13, 18));
    }

    #[test]
    fn random_families_are_seed_deterministic() {
        let t1 = random_tree(9, 77).unwrap();
        let t2 = random_tree(9, 77).unwrap();
        assert_eq!(t1, t2);
        assert!(t1.is_tree());
        assert_ne!(random_tree(9, 78).unwrap(), t1);

        let g1 = random_connected(8, 5).unwrap();
        assert_eq!(g1, random_connected(8, 5).unwrap());
        assert!(g1.is_connected());

        let b = random_block(4, 4, 11).unwrap();
        assert_eq!(b, random_block(4, 4, 11).unwrap());
        assert!(b.is_connected());
    }

    #[test]
    fn random_trees_hit_every_size() {
        for n in 1..=12 {
            assert!(random_tree(n, 3).unwrap().is_tree());
            assert!(random_connected(n, 3).unwrap().is_connected());
        }
    }

    #[test]
    fn generate_matches_direct_constructors() {
        assert_eq!(generate(&Family::Cycle { n: 5 }).unwrap(), cycle(5).unwrap());
        assert_eq!(
            generate(&Family::RandomTree { n: 7, seed: 9 }).unwrap(),
            random_tree(7, 9).unwrap()
        );
        assert!(generate(&Family::Star { leaves: 0 }).is_err());
    }

    #[test]
    fn free_tree_counts() {
        let expect = [1usize, 1, 1, 2, 3, 6, 11, 23];
        for (i, &count) in expect.iter().enumerate() {
            let trees = free_trees(i + 1).unwrap();
            assert_eq!(trees.len(), count, "tree count at n = {}", i + 1);
            assert!(trees.iter().all(|t| t.is_tree()));
        }
    }

    #[test]
    fn free_trees_are_pairwise_nonisomorphic() {
        let trees = free_trees(7).unwrap();
        let codes: alloc::collections::BTreeSet<String> =
            trees.iter().map(tree_code).collect();
        assert_eq!(codes.len(), trees.len());
    }

    #[test]
    fn labeled_connected_counts() {
        assert_eq!(labeled_connected_graphs(1).unwrap().len(), 1);
        assert_eq!(labeled_connected_graphs(2).unwrap().len(), 1);
        assert_eq!(labeled_connected_graphs(3).unwrap().len(), 4);
        assert_eq!(labeled_connected_graphs(4).unwrap().len(), 38);
        assert_eq!(labeled_connected_graphs(5).unwrap().len(), 728);
        assert!(matches!(labeled_connected_graphs(9), Err(Error::TooLarge { .. })));
    }
}
