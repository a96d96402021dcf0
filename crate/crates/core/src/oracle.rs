//! Brute-force realization of Specht vectors in the integer group algebra of
//! `S_n`, independent of the straightening rules.
//!
//! Everything here is exponential in `n` and meant for cross-checking the
//! symbolic layer on small graphs.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::complex::restricted_bases;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::homology::{sparse_homology, HomologyResult, IntMatrix, SparseMatrix};
use crate::perm::Permutation;
use crate::tableaux::{Numbering, NumberingVector, Partition};

/// Largest `n` accepted by [`oracle_restricted_matrices`].
pub const RESTRICTED_ORACLE_BOUND: usize = 7;
/// Largest `n` accepted by [`full_h1_small`].
pub const FULL_ORACLE_BOUND: usize = 5;

/// An element of `Z[S_n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraVector {
    n: usize,
    terms: HashMap<Permutation, i64>,
}

impl GroupAlgebraVector {
    pub fn zero(n: usize) -> Self {
        GroupAlgebraVector {
            n,
            terms: HashMap::new(),
        }
    }

    pub fn basis_element(p: Permutation) -> Self {
        let n = p.degree();
        let mut v = Self::zero(n);
        v.add_term(p, 1);
        v
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, p: Permutation, c: i64) {
        assert_eq!(p.degree(), self.n, "permutation degree mismatch");
        if c == 0 {
            return;
        }
        let e = self.terms.entry(p.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&p);
        }
    }

    pub fn coefficient(&self, p: &Permutation) -> i64 {
        self.terms.get(p).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, i64)> {
        self.terms.iter().map(|(p, &c)| (p, c))
    }

    pub fn add_scaled(&mut self, other: &GroupAlgebraVector, c: i64) {
        for (p, d) in other.terms() {
            self.add_term(p.clone(), c * d);
        }
    }

    /// Product in the group algebra: `Σ a_σ b_τ (σ ∘ τ)`.
    pub fn mul(&self, other: &GroupAlgebraVector) -> GroupAlgebraVector {
        let mut out = Self::zero(self.n);
        for (s, a) in self.terms() {
            for (t, b) in other.terms() {
                out.add_term(s.compose(t), a * b);
            }
        }
        out
    }
}

/// Sizes of the row and column stabilizers of a numbering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetrizerSpec {
    pub t: Numbering,
    pub row_group_size: u64,
    pub column_group_size: u64,
}

fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

fn columns(t: &Numbering) -> Vec<Vec<u16>> {
    let width = t.rows().first().map_or(0, |r| r.len());
    (0..width)
        .map(|c| t.rows().iter().filter_map(|r| r.get(c).copied()).collect())
        .collect()
}

pub fn symmetrizer_spec(t: &Numbering) -> SymmetrizerSpec {
    SymmetrizerSpec {
        t: t.clone(),
        row_group_size: t.rows().iter().map(|r| factorial(r.len())).product(),
        column_group_size: columns(t).iter().map(|c| factorial(c.len())).product(),
    }
}

/// All products of one permutation from each block's symmetric group.
fn block_group(n: usize, blocks: &[Vec<u16>]) -> Vec<Permutation> {
    let mut group = vec![Permutation::identity(n)];
    for b in blocks.iter().filter(|b| b.len() > 1) {
        let local = Permutation::all_on(n, b);
        group = group
            .iter()
            .flat_map(|g| local.iter().map(move |l| g.compose(l)))
            .collect();
    }
    group
}

/// `a_T`, the sum over the row stabilizer of `t`.
pub fn row_symmetrizer(t: &Numbering) -> GroupAlgebraVector {
    let mut v = GroupAlgebraVector::zero(t.n());
    for p in block_group(t.n(), t.rows()) {
        v.add_term(p, 1);
    }
    v
}

/// `b_T`, the signed sum over the column stabilizer of `t`.
pub fn column_antisymmetrizer(t: &Numbering) -> GroupAlgebraVector {
    let mut v = GroupAlgebraVector::zero(t.n());
    for p in block_group(t.n(), &columns(t)) {
        let s = p.sign();
        v.add_term(p, s);
    }
    v
}

/// `v_t^s = σ b_t a_t`, where `σ` relabels `t` into the reference `s`.
pub fn specht_vector(t: &Numbering, s: &Numbering) -> Result<GroupAlgebraVector> {
    let sigma = t.transport_to(s)?;
    let n = t.n();
    let rows = block_group(n, t.rows());
    let cols = block_group(n, &columns(t));
    let mut v = GroupAlgebraVector::zero(n);
    for g in &cols {
        let sg = sigma.compose(g);
        let sign = g.sign();
        for r in &rows {
            v.add_term(sg.compose(r), sign);
        }
    }
    Ok(v)
}

/// Connected components of `(V, F)` as sorted vertex lists.
fn components(n: usize, f: &[Edge]) -> Vec<Vec<u16>> {
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut x = x;
        while p[x] != r {
            let next = p[x];
            p[x] = r;
            x = next;
        }
        r
    }
    for &(a, b) in f {
        let (ra, rb) = (find(&mut parent, a as usize), find(&mut parent, b as usize));
        parent[ra.max(rb)] = ra.min(rb);
    }
    let mut by_root: BTreeMap<usize, Vec<u16>> = BTreeMap::new();
    for v in 1..=n {
        let r = find(&mut parent, v);
        by_root.entry(r).or_default().push(v as u16);
    }
    by_root.into_values().collect()
}

/// Integer basis of `M_F = Z[S_n] · a_F`: the sums over left cosets of the
/// stabilizer of the components of `F`.
pub fn permutation_module_basis(g: &Graph, f: &[Edge]) -> Vec<GroupAlgebraVector> {
    let n = g.n();
    let blocks = components(n, f);
    let stabilizer = block_group(n, &blocks);
    let mut seen: BTreeMap<Vec<u32>, ()> = BTreeMap::new();
    let mut out = Vec::new();
    for sigma in Permutation::all(n) {
        let key = coset_key(&sigma, &blocks);
        if seen.insert(key, ()).is_none() {
            let mut v = GroupAlgebraVector::zero(n);
            for r in &stabilizer {
                v.add_term(sigma.compose(r), 1);
            }
            out.push(v);
        }
    }
    out
}

/// The coset `σ R_F` is determined by the image set of each block.
fn coset_key(sigma: &Permutation, blocks: &[Vec<u16>]) -> Vec<u32> {
    blocks
        .iter()
        .map(|b| b.iter().fold(0u32, |m, &x| m | 1 << sigma.apply(x)))
        .collect()
}

/// Solves `v = Σ c_k b_k` for a fixed linearly independent family `b`.
///
/// Gaussian elimination over the rationals is done once; each solve reduces
/// the target, demands an integral answer and re-checks it exactly.
pub struct BasisSolver {
    basis: Vec<GroupAlgebraVector>,
    columns: HashMap<Permutation, usize>,
    /// Reduced rows: pivot column, entries, and the row as a combination of `basis`.
    reduced: Vec<(usize, BTreeMap<usize, BigRational>, Vec<BigRational>)>,
}

impl BasisSolver {
    pub fn new(basis: Vec<GroupAlgebraVector>) -> Result<Self> {
        let mut solver = BasisSolver {
            basis: Vec::new(),
            columns: HashMap::new(),
            reduced: Vec::new(),
        };
        let k = basis.len();
        for (idx, b) in basis.iter().enumerate() {
            let mut row = solver.sparse(b, true);
            let mut combo = vec![BigRational::zero(); k];
            combo[idx] = BigRational::one();
            solver.reduce(&mut row, &mut combo);
            let Some((&pivot, _)) = row.iter().next() else {
                return Err(Error::DimensionMismatch("basis vectors are linearly dependent".into()));
            };
            solver.reduced.push((pivot, row, combo));
        }
        solver.basis = basis;
        Ok(solver)
    }

    fn sparse(&mut self, v: &GroupAlgebraVector, grow: bool) -> BTreeMap<usize, BigRational> {
        let mut row = BTreeMap::new();
        let mut fresh = 0usize;
        for (p, c) in v.terms() {
            let col = match self.columns.get(p) {
                Some(&col) => col,
                None if grow => {
                    let col = self.columns.len();
                    self.columns.insert(p.clone(), col);
                    col
                }
                None => {
                    // A permutation no basis vector touches: unreachable column.
                    fresh += 1;
                    usize::MAX - fresh
                }
            };
            row.insert(col, BigRational::from_integer(c.into()));
        }
        row
    }

    fn reduce(&self, row: &mut BTreeMap<usize, BigRational>, combo: &mut [BigRational]) {
        for (pivot, r, t) in &self.reduced {
            let Some(x) = row.get(pivot) else { continue };
            let f = x / &r[pivot];
            for (col, y) in r {
                let e = row.entry(*col).or_insert_with(BigRational::zero);
                *e -= &f * y;
                if e.is_zero() {
                    row.remove(col);
                }
            }
            for (c, y) in combo.iter_mut().zip(t) {
                if !y.is_zero() {
                    *c -= &f * y;
                }
            }
        }
    }

    pub fn solve(&mut self, v: &GroupAlgebraVector) -> Result<Vec<BigInt>> {
        let k = self.basis.len();
        let mut row = self.sparse(v, false);
        let mut combo = vec![BigRational::zero(); k];
        self.reduce(&mut row, &mut combo);
        if !row.is_empty() {
            return Err(Error::NotInSpan);
        }
        // combo now holds -coefficients
        let mut coeffs = Vec::with_capacity(k);
        for c in combo {
            let c = -c;
            if !c.is_integer() {
                return Err(Error::NonIntegerSolution);
            }
            coeffs.push(c.to_integer());
        }
        let mut check = v.clone();
        for (b, c) in self.basis.iter().zip(&coeffs) {
            let c = i64::try_from(c).map_err(|_| Error::NonIntegerSolution)?;
            check.add_scaled(b, -c);
        }
        if !check.is_zero() {
            return Err(Error::NotInSpan);
        }
        Ok(coeffs)
    }
}

/// Integer coefficients of `v` in a linearly independent `basis`.
pub fn expand_in_basis(v: &GroupAlgebraVector, basis: &[GroupAlgebraVector]) -> Result<Vec<BigInt>> {
    BasisSolver::new(basis.to_vec())?.solve(v)
}

/// Expands a formal combination of numberings in a basis of numberings by
/// realizing everything in the group algebra.
pub fn expand_numbering_vector(v: &NumberingVector, basis: &[Numbering]) -> Result<Vec<BigInt>> {
    let Some(reference) = basis.first() else {
        return if v.is_empty() { Ok(Vec::new()) } else { Err(Error::NotInSpan) };
    };
    let vectors = basis
        .iter()
        .map(|b| specht_vector(b, reference))
        .collect::<Result<Vec<_>>>()?;
    let mut target = GroupAlgebraVector::zero(reference.n());
    for (s, c) in v.terms() {
        let c = i64::try_from(c).map_err(|_| Error::DimensionMismatch("coefficient too large".into()))?;
        target.add_scaled(&specht_vector(s, reference)?, c);
    }
    BasisSolver::new(vectors)?.solve(&target)
}

/// `d1`, `d2` of the restricted complex recomputed in the group algebra.
pub fn oracle_restricted_matrices(g: &Graph, shape: &Partition) -> Result<(IntMatrix, IntMatrix)> {
    if g.n() > RESTRICTED_ORACLE_BOUND {
        return Err(Error::SizeBound {
            n: g.n(),
            bound: RESTRICTED_ORACLE_BOUND,
        });
    }
    let bases = restricted_bases(g, shape)?;
    let Some(reference) = bases.basis0.first() else {
        return Ok((IntMatrix::zeros(0, 0), IntMatrix::zeros(0, 0)));
    };
    let vec_of = |t: &Numbering| specht_vector(t, reference);

    let mut top = BasisSolver::new(bases.basis0.iter().map(vec_of).collect::<Result<_>>()?)?;
    let mut d1 = IntMatrix::zeros(bases.basis0.len(), bases.basis1.len());
    let mut blocks = Vec::new();
    let mut x_vectors = Vec::new();
    for (j, (_, x)) in bases.basis1.iter().enumerate() {
        let v = vec_of(x)?;
        for (i, c) in top.solve(&v)?.into_iter().enumerate() {
            d1[(i, j)] = c;
        }
        x_vectors.push(v);
    }
    for block in x_vectors.chunks(bases.copies1.max(1)) {
        blocks.push(BasisSolver::new(block.to_vec())?);
    }

    let mut d2 = IntMatrix::zeros(bases.basis1.len(), bases.basis2.len());
    for (col, (pc, w)) in bases.basis2.iter().enumerate() {
        let v = vec_of(w)?;
        let (a, b) = pc.pair;
        // removing the smaller edge keeps e_b (sign +), removing e_b keeps e_a (sign -)
        for (edge, sign) in [(b, 1), (a, -1)] {
            for (l, c) in blocks[edge].solve(&v)?.into_iter().enumerate() {
                d2[(edge * bases.copies1 + l, col)] += c * sign;
            }
        }
    }
    Ok((d1, d2))
}

/// One summand `M_F` of the full complex with its coset indexing.
struct Summand {
    edges: Vec<usize>,
    blocks: Vec<Vec<u16>>,
    /// Coset key to position within the summand.
    index: HashMap<Vec<u32>, usize>,
    offset: usize,
}

fn summand(g: &Graph, edges: Vec<usize>, all: &[Permutation], offset: usize) -> Summand {
    let f: Vec<Edge> = edges.iter().map(|&i| g.edges()[i]).collect();
    let blocks = components(g.n(), &f);
    let mut index = HashMap::new();
    for sigma in all {
        let key = coset_key(sigma, &blocks);
        let next = index.len();
        index.entry(key).or_insert(next);
    }
    Summand {
        edges,
        blocks,
        index,
        offset,
    }
}

/// Matrix of `d : ⊕_{|F|=i} M_F -> ⊕_{|F|=i-1} M_F`. The coset sum of `σ R_F`
/// maps to `Σ_e (-1)^{#edges of F below e}` times its image in `M_{F-e}`,
/// which is the sum of the cosets of `R_{F-e}` inside `σ R_F`.
fn full_differential(upper: &[Summand], lower: &[Summand], all: &[Permutation]) -> SparseMatrix {
    let rows = lower.iter().map(|s| s.index.len()).sum();
    let cols = upper.iter().map(|s| s.index.len()).sum();
    let mut d = SparseMatrix::new(rows, cols);
    let lower_pos: HashMap<&[usize], &Summand> = lower.iter().map(|s| (s.edges.as_slice(), s)).collect();
    for s in upper {
        for (drop_pos, _) in s.edges.iter().enumerate() {
            let sign = if drop_pos % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            let mut rest = s.edges.clone();
            rest.remove(drop_pos);
            let t = lower_pos[rest.as_slice()];
            // Each coset of R_F splits into cosets of R_{F-e}; iterate the
            // group once and record every (coarse, fine) incidence.
            let mut seen = std::collections::HashSet::new();
            for sigma in all {
                let coarse = s.index[&coset_key(sigma, &s.blocks)];
                let fine = t.index[&coset_key(sigma, &t.blocks)];
                if seen.insert((coarse, fine)) {
                    d.add(t.offset + fine, s.offset + coarse, &sign);
                }
            }
        }
    }
    d
}

/// `H1` of the whole q-degree-zero complex, all isotypic components at once.
pub fn full_h1_small(g: &Graph) -> Result<HomologyResult> {
    let n = g.n();
    if n > FULL_ORACLE_BOUND {
        return Err(Error::SizeBound {
            n,
            bound: FULL_ORACLE_BOUND,
        });
    }
    let m = g.m();
    if m == 0 {
        return Ok(HomologyResult::zero());
    }
    let all = Permutation::all(n);
    let mut offset = 0;
    let mut build = |subsets: Vec<Vec<usize>>| -> Vec<Summand> {
        offset = 0;
        subsets
            .into_iter()
            .map(|e| {
                let s = summand(g, e, &all, offset);
                offset += s.index.len();
                s
            })
            .collect()
    };
    let c0 = build(vec![vec![]]);
    let c1 = build((0..m).map(|i| vec![i]).collect());
    let c2 = build((0..m).flat_map(|i| (i + 1..m).map(move |j| vec![i, j])).collect());
    let d1 = full_differential(&c1, &c0, &all);
    let d2 = full_differential(&c2, &c1, &all);
    sparse_homology(&d1, &d2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::enumerate_syt;

    fn num(s: &str) -> Numbering {
        s.parse().unwrap()
    }

    #[test]
    fn symmetrizer_sizes() {
        let spec = symmetrizer_spec(&num("(1,2|3,4|5)"));
        assert_eq!(spec.row_group_size, 4);
        assert_eq!(spec.column_group_size, 12);
        let t = num("(1,2|3)");
        assert_eq!(row_symmetrizer(&t).len(), 2);
        assert_eq!(column_antisymmetrizer(&t).len(), 2);
        assert_eq!(specht_vector(&t, &t).unwrap().len(), 4);
        let t = num("(1|2|3)");
        let v = specht_vector(&t, &t).unwrap();
        assert_eq!(v, column_antisymmetrizer(&t));
        let t = num("(1,2,3)");
        assert_eq!(specht_vector(&t, &t).unwrap(), row_symmetrizer(&t));
    }

    #[test]
    fn specht_vector_is_sigma_b_a() {
        let t = num("(1,4|2,3|5)");
        let s = num("(1,2|3,4|5)");
        let sigma = GroupAlgebraVector::basis_element(t.transport_to(&s).unwrap());
        let direct = sigma.mul(&column_antisymmetrizer(&t)).mul(&row_symmetrizer(&t));
        assert_eq!(specht_vector(&t, &s).unwrap(), direct);
    }

    #[test]
    fn worked_expansion() {
        let ys = enumerate_syt(&Partition::new(vec![2, 2, 1]).unwrap());
        let basis: Vec<_> = ys.iter().map(|y| specht_vector(y, &ys[0]).unwrap()).collect();
        let v = specht_vector(&num("(1,4|2,3|5)"), &ys[0]).unwrap();
        let c = expand_in_basis(&v, &basis).unwrap();
        assert_eq!(c, [-1, 0, -1, 0, 0].map(BigInt::from).to_vec());
        let c = expand_in_basis(&basis[2], &basis).unwrap();
        assert_eq!(c, [0, 0, 1, 0, 0].map(BigInt::from).to_vec());
        // a numbering of another shape is not in the span
        let other = specht_vector(&num("(1,2,3|4,5)"), &num("(1,2,3|4,5)")).unwrap();
        assert!(matches!(expand_in_basis(&other, &basis), Err(Error::NotInSpan)));
    }

    #[test]
    fn non_integral_expansion_is_rejected() {
        let id = GroupAlgebraVector::basis_element(Permutation::identity(2));
        let swap = GroupAlgebraVector::basis_element(Permutation::transposition(2, 1, 2));
        let mut plus = id.clone();
        plus.add_scaled(&swap, 1);
        let mut minus = id.clone();
        minus.add_scaled(&swap, -1);
        assert!(matches!(
            expand_in_basis(&id, &[plus, minus]),
            Err(Error::NonIntegerSolution)
        ));
    }

    #[test]
    fn permutation_modules() {
        let g = Graph::complete(5);
        assert_eq!(permutation_module_basis(&Graph::empty(3), &[]).len(), 6);
        let m = permutation_module_basis(&g, &[(1, 2)]);
        assert_eq!(m.len(), 60);
        assert!(m.iter().all(|v| v.len() == 2));
        assert_eq!(permutation_module_basis(&g, &[(1, 2), (3, 4)]).len(), 30);
    }

    #[test]
    fn k5_oracle_matches_worked_example() {
        let g = Graph::complete(5);
        let (d1, d2) = oracle_restricted_matrices(&g, &Partition::new(vec![2, 2, 1]).unwrap()).unwrap();
        assert_eq!((d1.rows(), d1.cols(), d2.cols()), (5, 20, 15));
        let col: Vec<i64> = d1.column(4).iter().map(|c| i64::try_from(c).unwrap()).collect();
        assert_eq!(col, vec![-1, 0, -1, 0, 0]);
        assert!(d1.mul(&d2).is_zero());
    }

    #[test]
    fn full_homology_small_cases() {
        assert!(full_h1_small(&Graph::empty(3)).unwrap().is_zero());
        let tri = full_h1_small(&Graph::complete(3)).unwrap();
        assert!(tri.is_torsion_free());
        assert!(full_h1_small(&Graph::complete(6)).is_err());
    }
}
