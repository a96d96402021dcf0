//! The chain complex `C2 -> C1 -> C0` in q-degree zero, cut down to the
//! isotypic component of one two-column shape `(2^k, 1^(n-2k))`.
//!
//! `C0` is spanned by the standard tableaux `Y`. `C1` has one block per edge
//! `e_i`, spanned by numberings `X_i^l` whose first row is `e_i`. `C2` has one
//! block per pair of disjoint edges `(e_i, e_j)`, spanned by numberings
//! `W_{i,j}^l` whose top two rows are `e_i` and `e_j`. Pairs of edges sharing a
//! vertex contribute nothing for two-column shapes.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::homology::IntMatrix;
use crate::tableaux::{
    enumerate_ssyt, enumerate_syt, numbering_of_subgraph, standardize, Numbering, NumberingVector, Partition,
    Straightener,
};

/// A basis element `X_i^l` of `C1`; `edge` and `copy` are zero-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeCopy {
    pub edge: usize,
    pub copy: usize,
}

/// A basis element `W_{i,j}^l` of `C2`; indices are zero-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairCopy {
    pub pair: (usize, usize),
    pub copy: usize,
}

/// Indexed bases of the three chain groups, without the differentials.
#[derive(Clone, Debug)]
pub struct RestrictedBases {
    pub shape: Partition,
    pub basis0: Vec<Numbering>,
    pub basis1: Vec<(EdgeCopy, Numbering)>,
    pub basis2: Vec<(PairCopy, Numbering)>,
    /// Copies of the Specht module per edge block.
    pub copies1: usize,
    /// Copies per pair block.
    pub copies2: usize,
    /// Disjoint edge pairs in lexicographic order.
    pub pairs: Vec<(usize, usize)>,
}

fn two_column_k(g: &Graph, shape: &Partition) -> Result<usize> {
    let k = shape
        .two_column_k()
        .ok_or_else(|| Error::InvalidShape(format!("{shape} is not of the form (2^k,1^m)")))?;
    if shape.n() != g.n() {
        return Err(Error::InvalidShape(format!(
            "{shape} is a partition of {} but the graph has {} vertices",
            shape.n(),
            g.n()
        )));
    }
    Ok(k)
}

pub fn restricted_bases(g: &Graph, shape: &Partition) -> Result<RestrictedBases> {
    two_column_k(g, shape)?;
    let n = g.n();
    let basis0 = enumerate_syt(shape);

    let mut basis1 = Vec::new();
    let mut copies1 = 0;
    if n >= 2 {
        let mu = Partition::two_column(n, 1)?;
        let ssyt = enumerate_ssyt(shape, &mu)?;
        copies1 = ssyt.len();
        for (i, &e) in g.edges().iter().enumerate() {
            let t = numbering_of_subgraph(g, &[e])?;
            for (l, y) in ssyt.iter().enumerate() {
                basis1.push((EdgeCopy { edge: i, copy: l }, standardize(y, &t)?));
            }
        }
    }

    let (pairs, _) = g.edge_pairs_by_type();
    let mut basis2 = Vec::new();
    let mut copies2 = 0;
    if n >= 4 && shape.two_column_k() >= Some(2) {
        let nu = Partition::two_column(n, 2)?;
        let ssyt = enumerate_ssyt(shape, &nu)?;
        copies2 = ssyt.len();
        for &(i, j) in &pairs {
            let t = numbering_of_subgraph(g, &[g.edges()[i], g.edges()[j]])?;
            for (l, y) in ssyt.iter().enumerate() {
                basis2.push((PairCopy { pair: (i, j), copy: l }, standardize(y, &t)?));
            }
        }
    }

    Ok(RestrictedBases {
        shape: shape.clone(),
        basis0,
        basis1,
        basis2,
        copies1,
        copies2,
        pairs,
    })
}

/// `d1 : C1 -> C0` and `d2 : C2 -> C1` with their indexed bases.
#[derive(Clone, Debug)]
pub struct RestrictedComplex {
    graph: Graph,
    bases: RestrictedBases,
    d1: IntMatrix,
    d2: IntMatrix,
}

impl RestrictedComplex {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn shape(&self) -> &Partition {
        &self.bases.shape
    }

    pub fn k(&self) -> usize {
        self.bases.shape.two_column_k().unwrap_or(0)
    }

    pub fn bases(&self) -> &RestrictedBases {
        &self.bases
    }

    pub fn basis0(&self) -> &[Numbering] {
        &self.bases.basis0
    }

    pub fn basis1(&self) -> &[(EdgeCopy, Numbering)] {
        &self.bases.basis1
    }

    pub fn basis2(&self) -> &[(PairCopy, Numbering)] {
        &self.bases.basis2
    }

    pub fn d1(&self) -> &IntMatrix {
        &self.d1
    }

    pub fn d2(&self) -> &IntMatrix {
        &self.d2
    }

    /// `(|basis2|, |basis1|, |basis0|)`.
    pub fn dims(&self) -> (usize, usize, usize) {
        (self.bases.basis2.len(), self.bases.basis1.len(), self.bases.basis0.len())
    }

    pub fn basis1_index(&self, edge: usize, copy: usize) -> Option<usize> {
        (edge < self.graph.m() && copy < self.bases.copies1).then(|| edge * self.bases.copies1 + copy)
    }

    pub fn basis2_index(&self, pair: (usize, usize), copy: usize) -> Option<usize> {
        if copy >= self.bases.copies2 {
            return None;
        }
        let p = self.bases.pairs.binary_search(&pair).ok()?;
        Some(p * self.bases.copies2 + copy)
    }

    /// Coordinates over `basis1` of `Σ c · v_S`, each `S` placed in the block
    /// of the edge formed by its first row.
    pub fn one_chain<'a>(&self, terms: impl IntoIterator<Item = (&'a Numbering, &'a BigInt)>) -> Result<Vec<BigInt>> {
        let mut by_edge: Vec<NumberingVector> = Vec::new();
        for (s, c) in terms {
            let top = s
                .rows()
                .first()
                .filter(|r| r.len() == 2)
                .ok_or_else(|| Error::InvalidNumbering(format!("{s} has no edge in its first row")))?;
            let (a, b) = (top[0].min(top[1]), top[0].max(top[1]));
            let e = self.graph.edge_index(a, b).ok_or(Error::NotAnEdge(a, b))?;
            if by_edge.len() <= e {
                by_edge.resize_with(e + 1, || NumberingVector::new(1));
            }
            by_edge[e].add(s, c);
        }
        let copies = self.bases.copies1;
        let mut out = vec![BigInt::zero(); self.bases.basis1.len()];
        for (e, v) in by_edge.iter().enumerate().filter(|(_, v)| !v.is_empty()) {
            let block = self.bases.basis1[e * copies..(e + 1) * copies]
                .iter()
                .map(|(_, x)| x.clone())
                .collect();
            let coeffs = Straightener::new(block, 1)?.straighten(v)?;
            for (l, c) in coeffs.into_iter().enumerate() {
                out[e * copies + l] += c;
            }
        }
        Ok(out)
    }
}

/// Straighteners for `C0` and for each edge block of `C1`.
struct Expanders {
    top: Straightener,
    blocks: Vec<Straightener>,
}

impl Expanders {
    fn new(bases: &RestrictedBases, m: usize) -> Result<Self> {
        let top = Straightener::new(bases.basis0.clone(), 0)?;
        let blocks = (0..m)
            .map(|i| {
                let block = bases.basis1[i * bases.copies1..(i + 1) * bases.copies1]
                    .iter()
                    .map(|(_, x)| x.clone())
                    .collect();
                Straightener::new(block, 1)
            })
            .collect::<Result<_>>()?;
        Ok(Expanders { top, blocks })
    }
}

/// Column of `d1` for one `X`: its expansion in the standard basis. The only
/// edge is also the smallest, so the sign is `+1`.
fn d1_column_with(ex: &Expanders, x: &Numbering) -> Result<Vec<BigInt>> {
    ex.top.straighten(&NumberingVector::from_numbering(x, 0))
}

/// Column of `d2` for `W` on the pair `(e_i, e_j)`, `i < j`: dropping `e_i`
/// (sign `+`) leaves `v_W` inside the `e_j` block, dropping `e_j` (sign `-`)
/// leaves it inside the `e_i` block.
fn d2_column_with(ex: &Expanders, copies1: usize, rows1: usize, pair: (usize, usize), w: &Numbering) -> Result<Vec<BigInt>> {
    let (i, j) = pair;
    let mut col = vec![BigInt::zero(); rows1];

    // Put e_j on top; exchanging two rows of length two has no sign.
    let mut swapped = w.rows().to_vec();
    swapped.swap(0, 1);
    let swapped = Numbering::from_rows_unchecked(swapped);
    let cj = ex.blocks[j].straighten(&NumberingVector::from_numbering(&swapped, 1))?;
    for (l, c) in cj.into_iter().enumerate() {
        col[j * copies1 + l] += c;
    }

    let ci = ex.blocks[i].straighten(&NumberingVector::from_numbering(w, 1))?;
    for (l, c) in ci.into_iter().enumerate() {
        col[i * copies1 + l] -= c;
    }
    Ok(col)
}

pub fn build_restricted_complex(g: &Graph, shape: &Partition) -> Result<RestrictedComplex> {
    let bases = restricted_bases(g, shape)?;
    let ex = Expanders::new(&bases, g.m())?;

    let cols1: Vec<Vec<BigInt>> = bases
        .basis1
        .iter()
        .map(|(_, x)| d1_column_with(&ex, x))
        .collect::<Result<_>>()?;
    let d1 = IntMatrix::from_columns(bases.basis0.len(), &cols1);

    let rows1 = bases.basis1.len();
    let cols2: Vec<Vec<BigInt>> = bases
        .basis2
        .iter()
        .map(|(pc, w)| d2_column_with(&ex, bases.copies1, rows1, pc.pair, w))
        .collect::<Result<_>>()?;
    let d2 = IntMatrix::from_columns(rows1, &cols2);

    if !d1.mul(&d2).is_zero() {
        return Err(Error::ComplexNotExact);
    }
    Ok(RestrictedComplex {
        graph: g.clone(),
        bases,
        d1,
        d2,
    })
}

/// Column of `d1` for the basis element at `index` of `basis1`.
pub fn d1_column(c: &RestrictedComplex, index: usize) -> Result<Vec<BigInt>> {
    let (_, x) = c
        .basis1()
        .get(index)
        .ok_or_else(|| Error::DimensionMismatch(format!("no basis1 element {index}")))?;
    let ex = Expanders::new(&c.bases, 0)?;
    d1_column_with(&ex, x)
}

/// Column of `d2` for the basis element at `index` of `basis2`.
pub fn d2_column(c: &RestrictedComplex, index: usize) -> Result<Vec<BigInt>> {
    let (pc, w) = c
        .basis2()
        .get(index)
        .ok_or_else(|| Error::DimensionMismatch(format!("no basis2 element {index}")))?;
    let ex = Expanders::new(&c.bases, c.graph.m())?;
    d2_column_with(&ex, c.bases.copies1, c.bases.basis1.len(), pc.pair, w)
}
