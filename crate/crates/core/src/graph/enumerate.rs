//! Isomorphism classes of small graphs, generated by vertex augmentation with
//! brute-force canonical labelling. Practical up to 7 vertices.

use std::collections::BTreeSet;

use super::Graph;
use crate::perm::Permutation;

/// Largest vertex count accepted by [`graphs_up_to_iso`].
pub const MAX_ENUMERATION_N: usize = 7;

#[inline]
fn pair_bit(i: usize, j: usize) -> u64 {
    // i < j, zero based, graph6 bit order
    1u64 << (j * (j - 1) / 2 + i)
}

#[cfg(test)]
fn mask_of(edges: &[(usize, usize)]) -> u64 {
    edges.iter().fold(0, |m, &(i, j)| m | pair_bit(i.min(j), i.max(j)))
}

fn edges_of(n: usize, mask: u64) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if mask & pair_bit(i, j) != 0 {
                out.push((i, j));
            }
        }
    }
    out
}

/// Largest adjacency mask over all relabellings.
fn canonical_mask(edges: &[(usize, usize)], perms: &[Permutation]) -> u64 {
    perms
        .iter()
        .map(|p| {
            edges.iter().fold(0u64, |m, &(i, j)| {
                let a = p.apply(i as u16 + 1) as usize - 1;
                let b = p.apply(j as u16 + 1) as usize - 1;
                m | pair_bit(a.min(b), a.max(b))
            })
        })
        .max()
        .unwrap_or(0)
}

fn graph_from_mask(n: usize, mask: u64) -> Graph {
    Graph::new(
        n,
        edges_of(n, mask).into_iter().map(|(i, j)| (i as u16 + 1, j as u16 + 1)),
    )
    .expect("mask edges are simple")
}

/// One representative per isomorphism class of graphs on `n` vertices,
/// ordered by canonical adjacency mask. Panics if `n > MAX_ENUMERATION_N`.
pub fn graphs_up_to_iso(n: usize) -> Vec<Graph> {
    assert!(n <= MAX_ENUMERATION_N, "graph enumeration is limited to n <= {MAX_ENUMERATION_N}");
    let mut classes: BTreeSet<u64> = BTreeSet::new();
    classes.insert(0);
    for size in 2..=n {
        let perms = Permutation::all(size);
        let mut next = BTreeSet::new();
        for &mask in &classes {
            let base = edges_of(size - 1, mask);
            for nbrs in 0u64..(1 << (size - 1)) {
                let mut edges = base.clone();
                for i in 0..size - 1 {
                    if nbrs >> i & 1 == 1 {
                        edges.push((i, size - 1));
                    }
                }
                next.insert(canonical_mask(&edges, &perms));
            }
        }
        classes = next;
    }
    if n == 0 {
        return vec![Graph::empty(0)];
    }
    classes.into_iter().map(|m| graph_from_mask(n, m)).collect()
}

pub fn is_connected(g: &Graph) -> bool {
    if g.n() <= 1 {
        return true;
    }
    let adj = g.adjacency();
    let mut seen = vec![false; g.n() + 1];
    let mut stack = vec![1u16];
    seen[1] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in &adj[v as usize] {
            if !seen[w as usize] {
                seen[w as usize] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == g.n()
}

/// Connected graphs on exactly `n` vertices, up to isomorphism.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    graphs_up_to_iso(n).into_iter().filter(is_connected).collect()
}
