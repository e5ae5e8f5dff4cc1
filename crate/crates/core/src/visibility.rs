//! Exact computation of total mutual-visibility sets.
//!
//! A set `X` is feasible when every vertex pair of the graph has a shortest
//! path whose internal vertices avoid `X`.  Feasibility is hereditary, which
//! the search exploits: once a pair loses its last shortest path, no
//! superset can repair it.
//!
//! Two independent feasibility routes are implemented.  The optimized route
//! walks the layered DAG of shortest paths per pair; the oracle route in
//! [`brute_force_max_tmv`] deletes blocked vertices and re-runs BFS.  Tests
//! hold the two equal.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph, VertexSet, UNREACHABLE};

/// Outcome of an exact search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    /// Optimum cardinality.
    pub value: usize,
    /// The lexicographically smallest optimal set (ascending member order).
    pub witness: VertexSet,
    /// Search nodes visited; deterministic for a given input.
    pub nodes_explored: u64,
}

/// Partition of the simplicial vertices into true-twin classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinPartition {
    /// Classes sorted by smallest member; members of a class share their
    /// closed neighborhood.
    pub classes: Vec<VertexSet>,
}

/// True when `u` and `v` lie on a common shortest path avoiding `x`
/// internally.  Membership of the endpoints themselves in `x` is irrelevant.
/// Pairs in different components are never visible.
pub fn is_pair_visible(g: &Graph, d: &DistanceMatrix, x: &VertexSet, u: usize, v: usize) -> bool {
    let dist = d.get(u, v);
    if dist == UNREACHABLE {
        return false;
    }
    if dist <= 1 {
        return true;
    }
    // Walk the layered DAG of shortest u-v paths, dropping blocked vertices.
    let mut cur = VertexSet::new(g.n());
    for &w in g.neighbors(u) {
        if d.get(w, v) == dist - 1 && !x.contains(w) {
            cur.insert(w);
        }
    }
    for t in 2..dist {
        if cur.is_empty() {
            return false;
        }
        let mut next = VertexSet::new(g.n());
        for w in cur.iter() {
            next.union_with(g.neighbor_bits(w));
        }
        next.subtract(x);
        let mut layer = VertexSet::new(g.n());
        for w in next.iter() {
            if d.get(u, w) == t && d.get(w, v) == dist - t {
                layer.insert(w);
            }
        }
        cur = layer;
    }
    !cur.is_empty()
}

/// Whether `x` is a total mutual-visibility set of the connected graph `g`.
pub fn is_tmv_set(g: &Graph, x: &VertexSet) -> Result<bool> {
    let d = g.distances();
    if !d.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if !is_pair_visible(g, &d, x, u, v) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Vertices whose neighborhood induces a clique.  Such vertices are internal
/// to no shortest path, so adding them to a feasible set keeps it feasible.
pub fn simplicial_set(g: &Graph) -> VertexSet {
    let mut s = VertexSet::new(g.n());
    'vertex: for v in 0..g.n() {
        let nb = g.neighbors(v);
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if !g.has_edge(a, b) {
                    continue 'vertex;
                }
            }
        }
        s.insert(v);
    }
    s
}

/// Vertices `v` for which two distinct vertices `u, w` satisfy
/// `N[u] ∩ N[w] = {v}`.  Such a `v` is the interior of the unique shortest
/// `u`-`w` path, so no feasible set may contain it.
pub fn convex_p3_centers(g: &Graph) -> VertexSet {
    let mut p = VertexSet::new(g.n());
    for u in 0..g.n() {
        let nu = g.closed_neighborhood(u);
        for w in u + 1..g.n() {
            let mut common = g.closed_neighborhood(w);
            common.intersect_with(&nu);
            if common.cardinality() == 1 {
                p.insert(common.smallest().expect("cardinality one"));
            }
        }
    }
    p
}

/// Partition of [`simplicial_set`] into classes with equal closed
/// neighborhoods, sorted by smallest member.
pub fn twin_partition(g: &Graph) -> TwinPartition {
    let mut by_neighborhood: alloc::collections::BTreeMap<Vec<usize>, VertexSet> =
        alloc::collections::BTreeMap::new();
    for v in simplicial_set(g).iter() {
        let key = g.closed_neighborhood(v).to_vec();
        by_neighborhood
            .entry(key)
            .or_insert_with(|| VertexSet::new(g.n()))
            .insert(v);
    }
    let mut classes: Vec<VertexSet> = by_neighborhood.into_values().collect();
    classes.sort_by_key(|c| c.smallest().expect("classes are nonempty"));
    TwinPartition { classes }
}

/// Per-pair shortest-path layer structure shared by one search.
struct SearchContext<'a> {
    g: &'a Graph,
    /// Non-adjacent pairs `(u, v)` with `u < v`.
    pairs: Vec<(usize, usize)>,
    /// For pair `i`: interior layers `1..dist` as vertex sets.
    layers: Vec<Vec<VertexSet>>,
    /// For each vertex: indices of pairs whose interior contains it.
    incident: Vec<Vec<usize>>,
}

impl<'a> SearchContext<'a> {
    fn build(g: &'a Graph, d: &DistanceMatrix) -> SearchContext<'a> {
        let n = g.n();
        let mut pairs = Vec::new();
        let mut layers = Vec::new();
        let mut incident = alloc::vec![Vec::new(); n];
        for u in 0..n {
            for v in u + 1..n {
                let dist = d.get(u, v);
                if dist < 2 {
                    continue;
                }
                let idx = pairs.len();
                let mut pair_layers = Vec::with_capacity(dist as usize - 1);
                for t in 1..dist {
                    let mut layer = VertexSet::new(n);
                    for w in 0..n {
                        if d.get(u, w) == t && d.get(w, v) == dist - t {
                            layer.insert(w);
                            incident[w].push(idx);
                        }
                    }
                    pair_layers.push(layer);
                }
                pairs.push((u, v));
                layers.push(pair_layers);
            }
        }
        SearchContext { g, pairs, layers, incident }
    }

    /// Layered reachability for one pair with the given blocked set.
    fn pair_visible(&self, idx: usize, blocked: &VertexSet) -> bool {
        let layers = &self.layers[idx];
        let mut cur = layers[0].difference(blocked);
        for layer in &layers[1..] {
            if cur.is_empty() {
                return false;
            }
            let mut reach = VertexSet::new(self.g.n());
            for w in cur.iter() {
                reach.union_with(self.g.neighbor_bits(w));
            }
            reach.intersect_with(layer);
            reach.subtract(blocked);
            cur = reach;
        }
        !cur.is_empty()
    }

    fn feasible(&self, x: &VertexSet) -> bool {
        (0..self.pairs.len()).all(|idx| self.pair_visible(idx, x))
    }
}

struct Search<'a> {
    ctx: &'a SearchContext<'a>,
    free: Vec<usize>,
    independent: bool,
    chosen: VertexSet,
    chosen_count: usize,
    best: VertexSet,
    best_count: usize,
    nodes: u64,
}

impl Search<'_> {
    fn run(&mut self, idx: usize) {
        self.nodes += 1;
        if self.chosen_count + (self.free.len() - idx) <= self.best_count {
            return;
        }
        if idx == self.free.len() {
            // Unreachable given the bound check, kept for clarity.
            return;
        }
        let v = self.free[idx];
        let can_add = (!self.independent
            || self.ctx.g.neighbor_bits(v).is_disjoint_from(&self.chosen))
            && {
                self.chosen.insert(v);
                let ok = self.ctx.incident[v]
                    .iter()
                    .all(|&p| self.ctx.pair_visible(p, &self.chosen));
                if !ok {
                    self.chosen.remove(v);
                }
                ok
            };
        if can_add {
            self.chosen_count += 1;
            if self.chosen_count > self.best_count {
                self.best_count = self.chosen_count;
                self.best = self.chosen.clone();
            }
            self.run(idx + 1);
            self.chosen_count -= 1;
            self.chosen.remove(v);
        }
        self.run(idx + 1);
    }
}

fn solve(
    g: &Graph,
    must_include: &VertexSet,
    must_exclude: &VertexSet,
    independent: bool,
) -> Result<SolveResult> {
    let n = g.n();
    assert_eq!(must_include.universe(), n, "constraint universe mismatch");
    assert_eq!(must_exclude.universe(), n, "constraint universe mismatch");
    let d = g.distances();
    if !d.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    if !must_include.is_disjoint_from(must_exclude) {
        return Err(Error::Infeasible);
    }
    let ctx = SearchContext::build(g, &d);
    if !ctx.feasible(must_include) {
        return Err(Error::Infeasible);
    }
    if independent {
        for v in must_include.iter() {
            if !g.neighbor_bits(v).is_disjoint_from(must_include) {
                return Err(Error::Infeasible);
            }
        }
    }

    // No feasible set meets the convex-path centers, so they join the
    // excluded side up front.
    let mut excluded = must_exclude.clone();
    excluded.union_with(&convex_p3_centers(g));
    debug_assert!(excluded.is_disjoint_from(must_include));

    // Every constrained optimum contains all non-excluded simplicial
    // vertices, so they form a sound starting incumbent.  Not valid under
    // the independence constraint, where an optimum may trade a simplicial
    // vertex for a neighbor.
    let mut seed = simplicial_set(g);
    seed.subtract(&excluded);
    seed.union_with(must_include);
    let incumbent = if !independent && ctx.feasible(&seed) {
        seed
    } else {
        must_include.clone()
    };

    let free: Vec<usize> = (0..n)
        .filter(|&v| !excluded.contains(v) && !must_include.contains(v))
        .collect();
    let mut search = Search {
        ctx: &ctx,
        free,
        independent,
        chosen: must_include.clone(),
        chosen_count: must_include.cardinality(),
        best_count: incumbent.cardinality(),
        best: incumbent,
        nodes: 0,
    };
    if !search.free.is_empty() {
        search.run(0);
    }
    Ok(SolveResult {
        value: search.best_count,
        witness: search.best,
        nodes_explored: search.nodes,
    })
}

/// Largest feasible set containing `must_include` and avoiding
/// `must_exclude`; the witness is the lexicographically smallest optimum.
/// Fails with [`Error::Infeasible`] when `must_include` itself is not
/// feasible or the constraints overlap.
pub fn max_tmv(g: &Graph, must_include: &VertexSet, must_exclude: &VertexSet) -> Result<SolveResult> {
    solve(g, must_include, must_exclude, false)
}

/// Total mutual-visibility number with canonical witness.
pub fn mu_t(g: &Graph) -> Result<SolveResult> {
    let empty = VertexSet::new(g.n());
    solve(g, &empty, &empty, false)
}

/// Largest independent feasible set.
pub fn mu_it(g: &Graph) -> Result<SolveResult> {
    let empty = VertexSet::new(g.n());
    solve(g, &empty, &empty, true)
}

/// Vertices contained in every optimum: excluding such a vertex lowers the
/// optimum.  One unconstrained plus `n` constrained solves.
pub fn compulsory_set(g: &Graph) -> Result<VertexSet> {
    let base = mu_t(g)?.value;
    let empty = VertexSet::new(g.n());
    let mut c = VertexSet::new(g.n());
    for v in 0..g.n() {
        let banned = VertexSet::from_members(g.n(), &[v]);
        if solve(g, &empty, &banned, false)?.value < base {
            c.insert(v);
        }
    }
    Ok(c)
}

/// Vertices contained in no optimum: forcing such a vertex in is infeasible
/// or lowers the optimum.
pub fn forbidden_set(g: &Graph) -> Result<VertexSet> {
    let base = mu_t(g)?.value;
    let empty = VertexSet::new(g.n());
    let mut f = VertexSet::new(g.n());
    for v in 0..g.n() {
        let forced = VertexSet::from_members(g.n(), &[v]);
        match solve(g, &forced, &empty, false) {
            Ok(r) => {
                if r.value < base {
                    f.insert(v);
                }
            }
            Err(Error::Infeasible) => f.insert(v),
            Err(e) => return Err(e),
        }
    }
    Ok(f)
}

/// Oracle-grade visibility: delete the blocked vertices (keeping the
/// endpoints) and compare the BFS distance against the original.
pub fn survives_deletion(
    g: &Graph,
    d: &DistanceMatrix,
    x: &VertexSet,
    u: usize,
    v: usize,
) -> bool {
    let base = d.get(u, v);
    if base == UNREACHABLE {
        return false;
    }
    if base <= 1 {
        return true;
    }
    let mut blocked = x.clone();
    blocked.remove(u);
    blocked.remove(v);
    let n = g.n();
    let mut dist = alloc::vec![UNREACHABLE; n];
    let mut queue = Vec::with_capacity(n);
    dist[u] = 0;
    queue.push(u);
    let mut head = 0;
    while head < queue.len() {
        let a = queue[head];
        head += 1;
        if dist[a] >= base {
            break;
        }
        for &b in g.neighbors(a) {
            if !blocked.contains(b) && dist[b] == UNREACHABLE {
                dist[b] = dist[a] + 1;
                queue.push(b);
            }
        }
    }
    dist[v] == base
}

fn next_combination(comb: &mut [usize], n: usize) -> bool {
    let k = comb.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if comb[i] < n - k + i {
            comb[i] += 1;
            for j in i + 1..k {
                comb[j] = comb[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Exhaustive reference search, independent of the optimized solver: scans
/// cardinality classes from `n` downward, combinations in lexicographic
/// order, using the deletion-based visibility route.  The first feasible
/// set found is the canonical optimum.  Capped at 20 vertices.
pub fn brute_force_max_tmv(g: &Graph) -> Result<SolveResult> {
    const LIMIT: usize = 20;
    let n = g.n();
    if n > LIMIT {
        return Err(Error::TooLarge { order: n, limit: LIMIT });
    }
    let d = g.distances();
    if !d.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if d.get(u, v) >= 2 {
                pairs.push((u, v));
            }
        }
    }
    let mut tested: u64 = 0;
    for k in (0..=n).rev() {
        let mut comb: Vec<usize> = (0..k).collect();
        loop {
            tested += 1;
            let x = VertexSet::from_members(n, &comb);
            if pairs.iter().all(|&(u, v)| survives_deletion(g, &d, &x, u, v)) {
                return Ok(SolveResult { value: k, witness: x, nodes_explored: tested });
            }
            if !next_combination(&mut comb, n) {
                break;
            }
        }
    }
    unreachable!("the empty set is always feasible")
}
