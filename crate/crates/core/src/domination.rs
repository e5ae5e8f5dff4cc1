//! Exact domination and connected-domination solvers.
//!
//! Search proceeds by increasing cardinality with subsets of each size in
//! lexicographic order, so the first feasible set is the canonical witness.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Optimum value with the lexicographically smallest optimal set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationResult {
    pub value: usize,
    pub witness: VertexSet,
}

fn dominates(g: &Graph, x: &VertexSet) -> bool {
    let mut covered = x.clone();
    for v in x.iter() {
        covered.union_with(g.neighbor_bits(v));
    }
    covered.cardinality() == g.n()
}

/// Whether the subgraph induced by `x` is connected; the empty set counts
/// as disconnected here since it cannot serve as a connected witness.
fn induces_connected(g: &Graph, x: &VertexSet) -> bool {
    let start = match x.smallest() {
        Some(v) => v,
        None => return false,
    };
    let mut seen = VertexSet::new(g.n());
    let mut stack = alloc::vec![start];
    seen.insert(start);
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if x.contains(w) && !seen.contains(w) {
                seen.insert(w);
                stack.push(w);
            }
        }
    }
    seen == *x
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

fn search<F: Fn(&VertexSet) -> bool>(g: &Graph, feasible: F) -> Result<DominationResult> {
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let n = g.n();
    for k in 1..=n {
        let mut comb: Vec<usize> = (0..k).collect();
        loop {
            let x = VertexSet::from_members(n, &comb);
            if feasible(&x) {
                return Ok(DominationResult { value: k, witness: x });
            }
            if !next_combination(&mut comb, n) {
                break;
            }
        }
    }
    unreachable!("the full vertex set dominates a connected graph")
}

/// Minimum dominating set.
pub fn domination_number(g: &Graph) -> Result<DominationResult> {
    search(g, |x| dominates(g, x))
}

/// Minimum dominating set inducing a connected subgraph.  The one-vertex
/// graph yields 1.
pub fn connected_domination_number(g: &Graph) -> Result<DominationResult> {
    search(g, |x| dominates(g, x) && induces_connected(g, x))
}

/// Every minimum connected dominating set, in lexicographic order.  Capped
/// at 14 vertices; enumeration beyond that is not desk-scale.
pub fn all_minimum_connected_dominating_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    const LIMIT: usize = 14;
    let n = g.n();
    if n > LIMIT {
        return Err(Error::TooLarge { order: n, limit: LIMIT });
    }
    let k = connected_domination_number(g)?.value;
    let mut out = Vec::new();
    let mut comb: Vec<usize> = (0..k).collect();
    loop {
        let x = VertexSet::from_members(n, &comb);
        if dominates(g, &x) && induces_connected(g, &x) {
            out.push(x);
        }
        if !next_combination(&mut comb, n) {
            break;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{complete, cycle, figure1, path, random_tree, star};
    use std::vec;

    fn set(n: usize, members: &[usize]) -> VertexSet {
        VertexSet::from_members(n, members)
    }

    #[test]
    fn domination_basics() {
        for n in 1..=6 {
            let r = domination_number(&complete(n).unwrap()).unwrap();
            assert_eq!((r.value, r.witness), (1, set(n, &[0])));
        }
        let r = domination_number(&cycle(5).unwrap()).unwrap();
        assert_eq!((r.value, r.witness), (2, set(5, &[0, 2])));
        let r = domination_number(&path(4).unwrap()).unwrap();
        assert_eq!((r.value, r.witness), (2, set(4, &[0, 2])));
        assert!(domination_number(&Graph::build(3, &[(0, 1)]).unwrap()).is_err());
    }

    #[test]
    fn connected_domination_basics() {
        let r = connected_domination_number(&path(4).unwrap()).unwrap();
        assert_eq!((r.value, r.witness), (2, set(4, &[1, 2])));
        assert_eq!(connected_domination_number(&path(2).unwrap()).unwrap().value, 1);
        for n in 3..=7 {
            assert_eq!(
                connected_domination_number(&path(n).unwrap()).unwrap().value,
                n - 2,
                "path on {n}"
            );
        }
        assert_eq!(connected_domination_number(&complete(1).unwrap()).unwrap().value, 1);
        assert_eq!(connected_domination_number(&star(5).unwrap()).unwrap().value, 1);
    }

    #[test]
    fn connected_domination_on_fixed_instance() {
        let r = connected_domination_number(&figure1()).unwrap();
        assert_eq!(r.value, 5);
        assert_eq!(r.witness, set(12, &[1, 2, 3, 4, 5]));
    }

    #[test]
    fn trees_need_their_internal_vertices() {
        for seed in 0..10 {
            let t = random_tree(8, seed).unwrap();
            let leaves = t.leaf_set().cardinality();
            assert_eq!(
                connected_domination_number(&t).unwrap().value,
                8 - leaves,
                "tree from seed {seed}"
            );
        }
    }

    #[test]
    fn gamma_is_at_most_gamma_c() {
        for seed in 0..10 {
            let g = crate::construct::random_connected(7, seed).unwrap();
            let gamma = domination_number(&g).unwrap();
            let gamma_c = connected_domination_number(&g).unwrap();
            assert!(gamma.value <= gamma_c.value);
            assert!(gamma_c.value + 1 >= g.diameter().unwrap());
        }
    }

    #[test]
    fn minimum_cds_enumeration() {
        let sets = all_minimum_connected_dominating_sets(&cycle(4).unwrap()).unwrap();
        assert_eq!(
            sets,
            vec![set(4, &[0, 1]), set(4, &[0, 3]), set(4, &[1, 2]), set(4, &[2, 3])]
        );
        let sets = all_minimum_connected_dominating_sets(&complete(3).unwrap()).unwrap();
        assert_eq!(sets, vec![set(3, &[0]), set(3, &[1]), set(3, &[2])]);
        assert!(matches!(
            all_minimum_connected_dominating_sets(&path(15).unwrap()),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn oracle_equivalence_with_plain_subset_scan() {
        // Reference route: test every bitmask, track the best by (size, lex).
        for seed in 0..6 {
            let g = crate::construct::random_connected(7, 50 + seed).unwrap();
            let n = g.n();
            let mut best: Option<VertexSet> = None;
            for mask in 0u32..1 << n {
                let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                let x = set(n, &members);
                if dominates(&g, &x)
                    && best.as_ref().is_none_or(|b| x.cardinality() < b.cardinality())
                {
                    best = Some(x);
                }
            }
            let reference = best.unwrap();
            let got = domination_number(&g).unwrap();
            assert_eq!(got.value, reference.cardinality());
        }
    }
}
