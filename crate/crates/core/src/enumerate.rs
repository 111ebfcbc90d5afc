//! Exhaustive enumeration of small graphs up to isomorphism.
//!
//! Graphs on `n` vertices are obtained by attaching a new vertex to every
//! graph on `n - 1` vertices in every possible way, then deduplicating by a
//! brute-force canonical form (minimum edge mask over all relabelings).
//! Practical up to `n = 7`.

use std::collections::BTreeSet;

use crate::graph::Graph;

pub const MAX_ENUMERATION_VERTICES: usize = 7;

fn pair_index(u: usize, v: usize) -> usize {
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    b * (b - 1) / 2 + a
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn canonical(edges: &[(usize, usize)], perms: &[Vec<usize>]) -> u32 {
    perms
        .iter()
        .map(|p| edges.iter().fold(0, |m, &(u, v)| m | (1 << pair_index(p[u], p[v]))))
        .min()
        .unwrap_or(0)
}

fn from_mask(n: usize, mask: u32) -> Graph {
    let edges = (0..n).flat_map(|v| (0..v).map(move |u| (u, v)));
    Graph::new(n, edges.filter(|&(u, v)| mask & (1 << pair_index(u, v)) != 0))
        .expect("mask edges are in range")
}

/// One representative of every isomorphism class of graphs on `n` vertices,
/// ordered by canonical edge mask.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= MAX_ENUMERATION_VERTICES, "enumeration limited to {MAX_ENUMERATION_VERTICES} vertices");
    let mut classes: BTreeSet<u32> = BTreeSet::from([0]);
    for size in 1..=n {
        let perms = permutations(size);
        let new_vertex = size - 1;
        let mut next = BTreeSet::new();
        for &mask in &classes {
            let base: Vec<(usize, usize)> = from_mask(new_vertex, mask).edges().collect();
            for attach in 0u32..(1 << new_vertex) {
                let mut edges = base.clone();
                edges.extend((0..new_vertex).filter(|&u| attach & (1 << u) != 0).map(|u| (u, new_vertex)));
                next.insert(canonical(&edges, &perms));
            }
        }
        classes = next;
    }
    classes.into_iter().map(|m| from_mask(n, m)).collect()
}

/// Connected graphs on exactly `n` vertices, up to isomorphism.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(Graph::is_connected).collect()
}

/// Connected graphs on `1..=max_n` vertices, up to isomorphism.
pub fn connected_graphs_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(connected_graphs).collect()
}

/// Canonical edge mask; equal for isomorphic graphs.
pub fn canonical_mask(g: &Graph) -> u32 {
    let edges: Vec<_> = g.edges().collect();
    canonical(&edges, &permutations(g.n()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        // Known counts of unlabeled graphs and connected graphs (OEIS A000088, A001349).
        let all: Vec<usize> = (1..=6).map(|n| all_graphs(n).len()).collect();
        assert_eq!(all, [1, 2, 4, 11, 34, 156]);
        let connected: Vec<usize> = (1..=6).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(connected, [1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn canonical_form_ignores_labels() {
        let a = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = Graph::new(4, [(2, 0), (0, 3), (3, 1)]).unwrap();
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(canonical_mask(&a), canonical_mask(&b));
        assert_ne!(canonical_mask(&a), canonical_mask(&star));
    }
}
