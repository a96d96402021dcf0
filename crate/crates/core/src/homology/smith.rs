//! Smith and Hermite normal forms over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// `u · m · v = s` with `u`, `v` unimodular and `s` diagonal with
/// nonnegative entries, each dividing the next.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
    pub rank: usize,
}

impl SmithForm {
    /// The nonzero diagonal entries.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.s[(i, i)].clone()).collect()
    }

    /// Diagonal entries greater than one.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.diagonal().into_iter().filter(|d| !d.is_one()).collect()
    }
}

/// Nearest-integer quotient: `a - q*b` has absolute value at most `|b|/2`.
fn round_div(a: &BigInt, b: &BigInt) -> BigInt {
    let bb = b.abs();
    let two = BigInt::from(2);
    let q = (a * &two + &bb).div_floor(&(&bb * &two));
    if b.is_negative() {
        -q
    } else {
        q
    }
}

struct Elimination {
    a: IntMatrix,
    u: Option<IntMatrix>,
    v: Option<IntMatrix>,
    v_inv: Option<IntMatrix>,
}

impl Elimination {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some(u) = &mut self.u {
            u.swap_rows(i, j);
        }
    }

    fn swap_columns(&mut self, i: usize, j: usize) {
        self.a.swap_columns(i, j);
        if let Some(v) = &mut self.v {
            v.swap_columns(i, j);
        }
        if let Some(w) = &mut self.v_inv {
            w.swap_rows(i, j);
        }
    }

    /// `row[dst] += q * row[src]`
    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        self.a.add_row_multiple(dst, src, q);
        if let Some(u) = &mut self.u {
            u.add_row_multiple(dst, src, q);
        }
    }

    /// `col[dst] += q * col[src]`
    fn add_column(&mut self, dst: usize, src: usize, q: &BigInt) {
        self.a.add_column_multiple(dst, src, q);
        if let Some(v) = &mut self.v {
            v.add_column_multiple(dst, src, q);
        }
        if let Some(w) = &mut self.v_inv {
            w.add_row_multiple(src, dst, &-q);
        }
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        if let Some(u) = &mut self.u {
            u.negate_row(i);
        }
    }

    /// Position of a nonzero entry of least absolute value in `a[t.., t..]`.
    fn min_entry(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, BigInt)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = &self.a[(i, j)];
                if x.is_zero() {
                    continue;
                }
                let ax = x.abs();
                if best.as_ref().is_none_or(|(_, _, b)| ax < *b) {
                    let unit = ax.is_one();
                    best = Some((i, j, ax));
                    if unit {
                        break;
                    }
                }
            }
            if best.as_ref().is_some_and(|(_, _, b)| b.is_one()) {
                break;
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    fn run(&mut self) -> usize {
        let (rows, cols) = (self.a.rows(), self.a.cols());
        let mut t = 0;
        while t < rows.min(cols) {
            let Some((pi, pj)) = self.min_entry(t) else {
                break;
            };
            self.swap_rows(t, pi);
            self.swap_columns(t, pj);
            loop {
                let mut clean = true;
                for i in t + 1..rows {
                    if !self.a[(i, t)].is_zero() {
                        let q = round_div(&self.a[(i, t)], &self.a[(t, t)]);
                        self.add_row(i, t, &-q);
                        if !self.a[(i, t)].is_zero() {
                            clean = false;
                        }
                    }
                }
                for j in t + 1..cols {
                    if !self.a[(t, j)].is_zero() {
                        let q = round_div(&self.a[(t, j)], &self.a[(t, t)]);
                        self.add_column(j, t, &-q);
                        if !self.a[(t, j)].is_zero() {
                            clean = false;
                        }
                    }
                }
                if !clean {
                    // Remainders are smaller than the pivot; move the least one up.
                    let mut best: Option<(bool, usize, BigInt)> = None;
                    for i in t + 1..rows {
                        let x = self.a[(i, t)].abs();
                        if !x.is_zero() && best.as_ref().is_none_or(|(_, _, b)| x < *b) {
                            best = Some((true, i, x));
                        }
                    }
                    for j in t + 1..cols {
                        let x = self.a[(t, j)].abs();
                        if !x.is_zero() && best.as_ref().is_none_or(|(_, _, b)| x < *b) {
                            best = Some((false, j, x));
                        }
                    }
                    match best {
                        Some((true, i, _)) => self.swap_rows(t, i),
                        Some((false, j, _)) => self.swap_columns(t, j),
                        None => {}
                    }
                    continue;
                }
                // Row and column are clear; enforce divisibility of the rest.
                let p = self.a[(t, t)].clone();
                let bad = (t + 1..rows).find(|&i| {
                    (t + 1..cols).any(|j| !self.a[(i, j)].is_multiple_of(&p))
                });
                match bad {
                    Some(i) => self.add_row(t, i, &BigInt::one()),
                    None => break,
                }
            }
            if self.a[(t, t)].is_negative() {
                self.negate_row(t);
            }
            t += 1;
        }
        t
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let mut e = Elimination {
        a: m.clone(),
        u: Some(IntMatrix::identity(m.rows())),
        v: Some(IntMatrix::identity(m.cols())),
        v_inv: Some(IntMatrix::identity(m.cols())),
    };
    let rank = e.run();
    SmithForm {
        s: e.a,
        u: e.u.unwrap(),
        v: e.v.unwrap(),
        v_inv: e.v_inv.unwrap(),
        rank,
    }
}

/// Nonzero diagonal of the Smith form, without tracking transforms.
pub fn smith_diagonal(m: &IntMatrix) -> Vec<BigInt> {
    let mut e = Elimination {
        a: m.clone(),
        u: None,
        v: None,
        v_inv: None,
    };
    let rank = e.run();
    (0..rank).map(|i| e.a[(i, i)].clone()).collect()
}

pub fn rank(m: &IntMatrix) -> usize {
    smith_diagonal(m).len()
}

/// Columns form a lattice basis of `{x : m x = 0}`.
pub fn kernel_basis(m: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(m);
    snf.v.columns_from(snf.rank)
}

/// Column-style Hermite reduction: `m · v = h` with `v` unimodular and `h` in
/// column echelon form. Returns `(h, v, pivots)` where `pivots[k]` is the
/// pivot row of column `k`; columns past `pivots.len()` are zero.
pub fn column_hermite(m: &IntMatrix) -> (IntMatrix, IntMatrix, Vec<usize>) {
    let mut h = m.clone();
    let mut v = IntMatrix::identity(m.cols());
    let mut pivots = Vec::new();
    let mut k = 0;
    for i in 0..m.rows() {
        if k == m.cols() {
            break;
        }
        // Euclid across columns k.. on row i until one nonzero remains.
        loop {
            let mut best: Option<(usize, BigInt)> = None;
            for j in k..h.cols() {
                let x = h[(i, j)].abs();
                if !x.is_zero() && best.as_ref().is_none_or(|(_, b)| x < *b) {
                    best = Some((j, x));
                }
            }
            let Some((j, _)) = best else { break };
            h.swap_columns(k, j);
            v.swap_columns(k, j);
            let mut done = true;
            for j in k + 1..h.cols() {
                if !h[(i, j)].is_zero() {
                    let q = h[(i, j)].div_floor(&h[(i, k)]);
                    h.add_column_multiple(j, k, &-&q);
                    v.add_column_multiple(j, k, &-q);
                    if !h[(i, j)].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if !h[(i, k)].is_zero() {
            if h[(i, k)].is_negative() {
                for r in 0..h.rows() {
                    let x = std::mem::take(&mut h[(r, k)]);
                    h[(r, k)] = -x;
                }
                for r in 0..v.rows() {
                    let x = std::mem::take(&mut v[(r, k)]);
                    v[(r, k)] = -x;
                }
            }
            pivots.push(i);
            k += 1;
        }
    }
    (h, v, pivots)
}

/// Some `x` with `m x = b`, or `None` when `b` is outside the integer column
/// span of `m`.
pub fn solve_integer(m: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(m.rows(), b.len(), "right-hand side has the wrong length");
    let (h, v, pivots) = column_hermite(m);
    let mut residual = b.to_vec();
    let mut y = vec![BigInt::zero(); m.cols()];
    let mut next_row = 0;
    for (k, &pr) in pivots.iter().enumerate() {
        if residual[next_row..pr].iter().any(|x| !x.is_zero()) {
            return None;
        }
        let (q, r) = residual[pr].div_rem(&h[(pr, k)]);
        if !r.is_zero() {
            return None;
        }
        for i in pr..m.rows() {
            let hk = &h[(i, k)];
            if !hk.is_zero() {
                residual[i] -= &q * hk;
            }
        }
        y[k] = q;
        next_row = pr + 1;
    }
    if residual.iter().any(|x| !x.is_zero()) {
        return None;
    }
    Some(v.mul_vec(&y))
}
