use super::{filling_order, Filling, Numbering, Partition};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// All semistandard fillings of `shape` with content `weight` (the value `v`
/// appears `weight[v - 1]` times), sorted by [`filling_order`].
pub fn enumerate_ssyt(shape: &Partition, weight: &Partition) -> Result<Vec<Filling>> {
    if shape.n() != weight.n() {
        return Err(Error::InvalidShape(format!(
            "shape {shape} and weight {weight} have different sizes"
        )));
    }
    let target = shape.parts().to_vec();
    let mut rows: Vec<Vec<u16>> = vec![Vec::new(); target.len()];
    let mut out = Vec::new();
    place_value(&target, weight.parts(), 0, &mut rows, &mut out);
    out.sort_by(|a, b| filling_order(a.rows(), b.rows()));
    Ok(out)
}

/// Adds the copies of value `v + 1` as a horizontal strip, in every possible way.
fn place_value(target: &[usize], weight: &[usize], v: usize, rows: &mut Vec<Vec<u16>>, out: &mut Vec<Filling>) {
    if v == weight.len() {
        out.push(Filling { rows: rows.clone() });
        return;
    }
    let before: Vec<usize> = rows.iter().map(|r| r.len()).collect();
    distribute(target, weight, v, &before, 0, weight[v], rows, out);
}

#[allow(clippy::too_many_arguments)]
fn distribute(
    target: &[usize],
    weight: &[usize],
    v: usize,
    before: &[usize],
    row: usize,
    remaining: usize,
    rows: &mut Vec<Vec<u16>>,
    out: &mut Vec<Filling>,
) {
    if remaining == 0 {
        place_value(target, weight, v + 1, rows, out);
        return;
    }
    if row == target.len() {
        return;
    }
    // Horizontal strip: a row may grow at most up to the old length of the row above.
    let cap = if row == 0 { target[0] } else { before[row - 1].min(target[row]) };
    let max_here = cap.saturating_sub(before[row]).min(remaining);
    for take in (0..=max_here).rev() {
        for _ in 0..take {
            rows[row].push(v as u16 + 1);
        }
        distribute(target, weight, v, before, row + 1, remaining - take, rows, out);
        for _ in 0..take {
            rows[row].pop();
        }
    }
}

/// Standard Young tableaux of `shape`, sorted by [`filling_order`].
pub fn enumerate_syt(shape: &Partition) -> Vec<Numbering> {
    let ones = Partition::new(vec![1; shape.n()]).expect("(1^n) is a partition");
    enumerate_ssyt(shape, &ones)
        .expect("sizes agree")
        .into_iter()
        .map(|f| Numbering { rows: f.rows })
        .collect()
}

/// The numbering `T(F)` of the spanning subgraph with edge set `subset`: one
/// row per connected component, entries increasing along rows, longer rows
/// first and equal-length rows ordered by their smallest entry.
pub fn numbering_of_subgraph(g: &Graph, subset: &[Edge]) -> Result<Numbering> {
    let n = g.n();
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    for &(a, b) in subset {
        if !g.has_edge(a, b) {
            return Err(Error::NotAnEdge(a, b));
        }
        let (ra, rb) = (find(&mut parent, a as usize), find(&mut parent, b as usize));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut comps: Vec<Vec<u16>> = vec![Vec::new(); n + 1];
    for v in 1..=n {
        let r = find(&mut parent, v);
        comps[r].push(v as u16);
    }
    let mut rows: Vec<Vec<u16>> = comps.into_iter().filter(|c| !c.is_empty()).collect();
    rows.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
    Ok(Numbering { rows })
}

/// Turns a semistandard filling `y` into a numbering by relabelling with the
/// reading word of `t`.
///
/// Reading words run along rows, top row first. The word of `y` is sorted
/// stably; the cell holding the `r`-th smallest letter receives the `r`-th
/// letter of the word of `t`. The content of `y` must match the row lengths of
/// `t`.
pub fn standardize(y: &Filling, t: &Numbering) -> Result<Numbering> {
    let weight = y.weight();
    let t_shape = t.shape();
    if weight.as_slice() != t_shape.parts() {
        return Err(Error::Standardize(format!(
            "content {weight:?} of {y} does not match the row lengths of {t}"
        )));
    }
    let word = y.word();
    let t_word = t.word();
    let mut order: Vec<usize> = (0..word.len()).collect();
    order.sort_by_key(|&k| word[k]);
    let mut relabelled = vec![0u16; word.len()];
    for (rank, &pos) in order.iter().enumerate() {
        relabelled[pos] = t_word[rank];
    }
    let mut cells = relabelled.into_iter();
    let rows = y
        .rows()
        .iter()
        .map(|r| cells.by_ref().take(r.len()).collect())
        .collect();
    Ok(Numbering { rows })
}
