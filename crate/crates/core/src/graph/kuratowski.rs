//! Exhaustive search for a subdivision of K5 or K3,3.
//!
//! Branch vertices are chosen among vertices of sufficient degree and the
//! model edges are realized one at a time by internally disjoint paths, with
//! backtracking. Exponential in the worst case; meant for graphs with a dozen
//! or so vertices.

use serde::{Deserialize, Serialize};

use super::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum KuratowskiKind {
    K5,
    K33,
}

impl KuratowskiKind {
    /// Model edges as pairs of positions into `branch_vertices`.
    pub fn model_edges(self) -> Vec<(usize, usize)> {
        match self {
            KuratowskiKind::K5 => {
                let mut out = Vec::new();
                for i in 0..5 {
                    for j in i + 1..5 {
                        out.push((i, j));
                    }
                }
                out
            }
            KuratowskiKind::K33 => {
                let mut out = Vec::new();
                for i in 0..3 {
                    for j in 3..6 {
                        out.push((i, j));
                    }
                }
                out
            }
        }
    }

    pub fn branch_count(self) -> usize {
        match self {
            KuratowskiKind::K5 => 5,
            KuratowskiKind::K33 => 6,
        }
    }
}

/// A subgraph homeomorphic to K5 or K3,3.
///
/// For K3,3 the first three branch vertices form one side. `paths[k]` realizes
/// `kind.model_edges()[k]` and runs from the first to the second branch vertex
/// of that model edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubdivisionWitness {
    pub kind: KuratowskiKind,
    pub branch_vertices: Vec<u16>,
    pub paths: Vec<Vec<u16>>,
}

impl SubdivisionWitness {
    /// Checks that the witness really is a Kuratowski subdivision inside `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        let model = self.kind.model_edges();
        if self.branch_vertices.len() != self.kind.branch_count() || self.paths.len() != model.len() {
            return false;
        }
        let mut used = vec![false; g.n() + 1];
        for &b in &self.branch_vertices {
            if b == 0 || b as usize > g.n() || used[b as usize] {
                return false;
            }
            used[b as usize] = true;
        }
        for (path, &(i, j)) in self.paths.iter().zip(&model) {
            if path.len() < 2
                || path[0] != self.branch_vertices[i]
                || *path.last().unwrap() != self.branch_vertices[j]
            {
                return false;
            }
            if path.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
                return false;
            }
            for &v in &path[1..path.len() - 1] {
                if v == 0 || v as usize > g.n() || used[v as usize] {
                    return false;
                }
                used[v as usize] = true;
            }
        }
        true
    }

    /// Number of subdivision vertices along all paths.
    pub fn internal_vertex_count(&self) -> usize {
        self.paths.iter().map(|p| p.len() - 2).sum()
    }
}

struct Search<'a> {
    adj: &'a [Vec<u16>],
    /// Vertex is a branch vertex or an interior vertex of an already chosen path.
    used: Vec<bool>,
    is_branch: Vec<bool>,
}

impl Search<'_> {
    fn connect(
        &mut self,
        branch: &[u16],
        model: &[(usize, usize)],
        k: usize,
        paths: &mut Vec<Vec<u16>>,
    ) -> bool {
        if k == model.len() {
            return true;
        }
        if !self.degrees_feasible(branch, &model[k..]) {
            return false;
        }
        let (s, t) = (branch[model[k].0], branch[model[k].1]);
        let mut path = vec![s];
        self.extend(branch, model, k, t, &mut path, paths)
    }

    fn extend(
        &mut self,
        branch: &[u16],
        model: &[(usize, usize)],
        k: usize,
        target: u16,
        path: &mut Vec<u16>,
        paths: &mut Vec<Vec<u16>>,
    ) -> bool {
        let last = *path.last().unwrap();
        // Try the direct edge first.
        if self.adj[last as usize].binary_search(&target).is_ok() {
            path.push(target);
            paths.push(path.clone());
            if self.connect(branch, model, k + 1, paths) {
                return true;
            }
            paths.pop();
            path.pop();
        }
        for idx in 0..self.adj[last as usize].len() {
            let next = self.adj[last as usize][idx];
            if self.used[next as usize] || self.is_branch[next as usize] {
                continue;
            }
            self.used[next as usize] = true;
            path.push(next);
            let found = self.extend(branch, model, k, target, path, paths);
            path.pop();
            self.used[next as usize] = false;
            if found {
                return true;
            }
        }
        false
    }

    /// Every branch vertex needs a free incident edge for each model edge it
    /// still has to realize.
    fn degrees_feasible(&self, branch: &[u16], remaining: &[(usize, usize)]) -> bool {
        let mut need = vec![0usize; branch.len()];
        for &(i, j) in remaining {
            need[i] += 1;
            need[j] += 1;
        }
        branch.iter().zip(&need).all(|(&b, &need)| {
            need == 0
                || self.adj[b as usize]
                    .iter()
                    .filter(|&&w| self.is_branch[w as usize] || !self.used[w as usize])
                    .count()
                    >= need
        })
    }
}

fn combinations(items: &[u16], k: usize, visit: &mut impl FnMut(&[u16]) -> bool) -> bool {
    fn rec(items: &[u16], k: usize, start: usize, cur: &mut Vec<u16>, visit: &mut impl FnMut(&[u16]) -> bool) -> bool {
        if cur.len() == k {
            return visit(cur);
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            if rec(items, k, i + 1, cur, visit) {
                return true;
            }
            cur.pop();
        }
        false
    }
    rec(items, k, 0, &mut Vec::with_capacity(k), visit)
}

/// Adjacency lists after repeatedly deleting vertices of degree at most one;
/// such vertices never lie on a Kuratowski subdivision.
fn pruned_adjacency(g: &Graph) -> Vec<Vec<u16>> {
    let mut adj = g.adjacency();
    loop {
        let low: Vec<u16> = (1..=g.n() as u16)
            .filter(|&v| adj[v as usize].len() == 1)
            .collect();
        if low.is_empty() {
            return adj;
        }
        for v in low {
            if let Some(&w) = adj[v as usize].first() {
                adj[w as usize].retain(|&x| x != v);
                adj[v as usize].clear();
            }
        }
    }
}

fn try_branch_set(
    adj: &[Vec<u16>],
    n: usize,
    kind: KuratowskiKind,
    branch: &[u16],
) -> Option<SubdivisionWitness> {
    let mut search = Search {
        adj,
        used: vec![false; n + 1],
        is_branch: vec![false; n + 1],
    };
    for &b in branch {
        search.used[b as usize] = true;
        search.is_branch[b as usize] = true;
    }
    let model = kind.model_edges();
    let mut paths = Vec::with_capacity(model.len());
    search
        .connect(branch, &model, 0, &mut paths)
        .then(|| SubdivisionWitness {
            kind,
            branch_vertices: branch.to_vec(),
            paths,
        })
}

/// Finds a subdivision of K5 or K3,3 in `g`, or `None` when `g` is planar.
/// K5 is tried first.
pub fn find_kuratowski_subdivision(g: &Graph) -> Option<SubdivisionWitness> {
    let n = g.n();
    if n < 5 || g.m() < 9 {
        return None;
    }
    let adj = pruned_adjacency(g);
    let with_degree = |d: usize| -> Vec<u16> {
        (1..=n as u16).filter(|&v| adj[v as usize].len() >= d).collect()
    };

    let mut found = None;
    let deg4 = with_degree(4);
    combinations(&deg4, 5, &mut |branch| {
        found = try_branch_set(&adj, n, KuratowskiKind::K5, branch);
        found.is_some()
    });
    if found.is_some() {
        return found;
    }

    let deg3 = with_degree(3);
    combinations(&deg3, 6, &mut |six| {
        // Split into two sides; the smallest vertex always goes to the first side.
        let rest = &six[1..];
        combinations(rest, 2, &mut |pair| {
            let side_a = [six[0], pair[0], pair[1]];
            let side_b: Vec<u16> = rest.iter().copied().filter(|v| !pair.contains(v)).collect();
            let branch = [side_a[0], side_a[1], side_a[2], side_b[0], side_b[1], side_b[2]];
            found = try_branch_set(&adj, n, KuratowskiKind::K33, &branch);
            found.is_some()
        })
    });
    found
}

/// True iff no Kuratowski subdivision exists. Graphs with `m > 3n - 6` are
/// reported non-planar without searching.
pub fn is_planar(g: &Graph) -> bool {
    if g.n() >= 3 && g.m() > 3 * g.n() - 6 {
        return false;
    }
    find_kuratowski_subdivision(g).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k5_has_trivial_witness() {
        let g = Graph::complete(5);
        let w = find_kuratowski_subdivision(&g).unwrap();
        assert_eq!(w.kind, KuratowskiKind::K5);
        assert_eq!(w.internal_vertex_count(), 0);
        assert!(w.verify(&g));
    }

    #[test]
    fn k33_and_petersen() {
        let g = Graph::complete_bipartite(3, 3);
        let w = find_kuratowski_subdivision(&g).unwrap();
        assert_eq!(w.kind, KuratowskiKind::K33);
        assert!(w.verify(&g));

        let p = Graph::petersen();
        let w = find_kuratowski_subdivision(&p).unwrap();
        assert_eq!(w.kind, KuratowskiKind::K33);
        assert!(w.verify(&p));
        assert!(!is_planar(&p));
    }

    #[test]
    fn planar_families() {
        assert!(is_planar(&Graph::complete(4)));
        assert!(is_planar(&Graph::cycle(8)));
        assert!(is_planar(&Graph::path(9)));
        let star = Graph::new(7, (2..=7).map(|v| (1, v))).unwrap();
        assert!(is_planar(&star));
        let k33_minus = Graph::complete_bipartite(3, 3).remove_edge(1, 4).unwrap();
        assert!(find_kuratowski_subdivision(&k33_minus).is_none());
        assert!(!is_planar(&Graph::complete(5)));
    }

    #[test]
    fn subdivision_preserves_non_planarity() {
        for g in [Graph::complete(5), Graph::complete_bipartite(3, 3)] {
            for &(a, b) in g.edges() {
                let h = g.subdivide(a, b).unwrap();
                let w = find_kuratowski_subdivision(&h).expect("still non-planar");
                assert!(w.verify(&h));
                assert_eq!(w.internal_vertex_count(), 1);
            }
        }
    }

    #[test]
    fn verify_rejects_bad_witnesses() {
        let g = Graph::complete(5);
        let mut w = find_kuratowski_subdivision(&g).unwrap();
        w.paths[0] = vec![w.branch_vertices[0], w.branch_vertices[2]];
        assert!(!w.verify(&g));
    }
}
