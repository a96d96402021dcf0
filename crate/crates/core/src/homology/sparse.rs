//! Smith diagonal of large sparse matrices with mostly unit entries.
//!
//! Unit pivots are eliminated directly on sparse rows; whatever survives is
//! handed to the dense algorithm.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{smith_diagonal, IntMatrix};

/// Sparse matrix given by its nonzero entries.
#[derive(Clone, Debug, Default)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), BigInt>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Adds `x` to entry `(i, j)`.
    pub fn add(&mut self, i: usize, j: usize, x: &BigInt) {
        assert!(i < self.rows && j < self.cols, "entry out of range");
        let e = self.entries.entry((i, j)).or_default();
        *e += x;
        if e.is_zero() {
            self.entries.remove(&(i, j));
        }
    }

    pub fn get(&self, i: usize, j: usize) -> BigInt {
        self.entries.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn to_dense(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows, self.cols);
        for (&(i, j), x) in &self.entries {
            m[(i, j)] = x.clone();
        }
        m
    }

    /// `self · other`, both sparse.
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut by_row: Vec<Vec<(usize, &BigInt)>> = vec![Vec::new(); other.rows];
        for (&(k, j), x) in &other.entries {
            by_row[k].push((j, x));
        }
        let mut out = SparseMatrix::new(self.rows, other.cols);
        for (&(i, k), a) in &self.entries {
            for &(j, b) in &by_row[k] {
                out.add(i, j, &(a * b));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Nonzero Smith diagonal entries, sorted so each divides the next.
    pub fn smith_diagonal(&self) -> Vec<BigInt> {
        let mut rows: Vec<BTreeMap<usize, BigInt>> = vec![BTreeMap::new(); self.rows];
        let mut cols: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); self.cols];
        for (&(i, j), x) in &self.entries {
            rows[i].insert(j, x.clone());
            cols[j].insert(i);
        }
        let mut alive_rows: BTreeSet<usize> = (0..self.rows).filter(|&i| !rows[i].is_empty()).collect();
        let mut units = 0usize;

        loop {
            // Unit pivot with the fewest entries in its column, searching short rows first.
            let mut order: Vec<usize> = alive_rows.iter().copied().collect();
            order.sort_by_key(|&i| rows[i].len());
            let mut pivot = None;
            for &i in &order {
                let best = rows[i]
                    .iter()
                    .filter(|(_, x)| x.abs() == BigInt::from(1))
                    .min_by_key(|(&j, _)| cols[j].len())
                    .map(|(&j, _)| j);
                if let Some(j) = best {
                    pivot = Some((i, j));
                    break;
                }
            }
            let Some((pi, pj)) = pivot else { break };
            let prow = rows[pi].clone();
            let p = prow[&pj].clone();
            let others: Vec<usize> = cols[pj].iter().copied().filter(|&r| r != pi).collect();
            for r in others {
                // row_r -= (a / p) * row_p, exact because p = ±1
                let q = &rows[r][&pj] * &p;
                for (&j, x) in &prow {
                    let e = rows[r].entry(j).or_default();
                    *e -= &q * x;
                    if e.is_zero() {
                        rows[r].remove(&j);
                        cols[j].remove(&r);
                    } else {
                        cols[j].insert(r);
                    }
                }
                if rows[r].is_empty() {
                    alive_rows.remove(&r);
                }
            }
            // Column pj is now the pivot alone; column operations clear the row.
            for &j in prow.keys() {
                cols[j].remove(&pi);
            }
            rows[pi].clear();
            alive_rows.remove(&pi);
            units += 1;
        }

        let live_rows: Vec<usize> = alive_rows.into_iter().collect();
        let live_cols: Vec<usize> = (0..self.cols).filter(|&j| !cols[j].is_empty()).collect();
        let col_pos: BTreeMap<usize, usize> = live_cols.iter().enumerate().map(|(k, &j)| (j, k)).collect();
        let mut rest = IntMatrix::zeros(live_rows.len(), live_cols.len());
        for (a, &i) in live_rows.iter().enumerate() {
            for (j, x) in &rows[i] {
                rest[(a, col_pos[j])] = x.clone();
            }
        }
        let mut diag = vec![BigInt::from(1); units];
        diag.extend(smith_diagonal(&rest));
        diag
    }
}
