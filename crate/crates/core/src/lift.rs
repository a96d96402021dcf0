//! Torsion certificates for K5 and K3,3 and their transport to every graph
//! containing a subdivision of one of them.
//!
//! A certificate is moved along two kinds of steps:
//!
//! * subdividing an edge `(a, b)` by a new vertex `c = n + 1`: every numbering
//!   gains a bottom box `c`; a numbering whose first row is the broken edge is
//!   rewritten by the exchange between its first row and that box,
//!   `v(a,b|..|c) = -v(c,b|..|a) - v(a,c|..|b)`, so it lands on the two new
//!   edges;
//! * embedding into a larger graph: bottom boxes for the new vertices, then a
//!   relabelling of all entries.
//!
//! Both steps commute with the differentials, so `d1 h = 0` and `2h ∈ im d2`
//! survive; `h ∉ im d2` is re-checked on every step, and the witness `x` is
//! re-solved rather than transported.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::complex::{build_restricted_complex, RestrictedComplex};
use crate::error::{Error, Result};
use crate::graph::{find_kuratowski_subdivision, Edge, Graph, KuratowskiKind, SubdivisionWitness};
use crate::homology::{check_certificate, solve_integer, TorsionCertificate};
use crate::tableaux::{Numbering, Partition};

/// A hand-checked certificate: `h` and the 2-chain `g` with `d2 g = 2h`, as
/// signed terms with one-based edge, pair and copy indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalSeed {
    pub kind: KuratowskiKind,
    pub graph: Graph,
    pub shape: Partition,
    /// `(coefficient, edge, copy)`
    pub h_terms: Vec<(i64, usize, usize)>,
    /// `(coefficient, (edge, edge), copy)`
    pub g_terms: Vec<(i64, (usize, usize), usize)>,
}

const K5_H: &[(i64, usize, usize)] = &[(1, 9, 1), (1, 10, 1), (-1, 2, 1), (1, 7, 2), (1, 9, 2)];

const K5_G: &[(i64, (usize, usize))] = &[
    (1, (1, 8)),
    (1, (1, 9)),
    (1, (1, 10)),
    (1, (2, 6)),
    (-1, (2, 7)),
    (-1, (2, 10)),
    (1, (3, 5)),
    (1, (3, 7)),
    (1, (3, 9)),
    (1, (4, 5)),
    (1, (4, 6)),
    (1, (4, 8)),
    (-1, (5, 10)),
    (-1, (6, 9)),
    (1, (7, 8)),
];

const K33_H: &[(i64, usize, usize)] = &[(1, 6, 3), (-1, 7, 3), (1, 8, 3), (-1, 9, 2)];

const K33_G: &[(i64, (usize, usize))] = &[
    (1, (1, 6)),
    (-1, (1, 7)),
    (1, (1, 8)),
    (1, (1, 9)),
    (-1, (2, 4)),
    (-1, (2, 5)),
    (1, (2, 7)),
    (1, (2, 9)),
    (1, (3, 4)),
    (-1, (3, 5)),
    (1, (3, 6)),
    (1, (3, 8)),
    (1, (4, 8)),
    (1, (4, 9)),
    (1, (5, 6)),
    (1, (5, 7)),
    (-1, (6, 9)),
    (1, (7, 8)),
];

impl CanonicalSeed {
    /// The certificate on the seed graph with the witness `x = g`.
    pub fn certificate(&self) -> Result<(TorsionCertificate, RestrictedComplex)> {
        let complex = build_restricted_complex(&self.graph, &self.shape)?;
        let (n2, n1, _) = complex.dims();
        let mut h = vec![BigInt::zero(); n1];
        for &(c, e, l) in &self.h_terms {
            let idx = complex
                .basis1_index(e - 1, l - 1)
                .ok_or_else(|| Error::Certificate(format!("no basis element X_{e}^{l}")))?;
            h[idx] += c;
        }
        let mut x = vec![BigInt::zero(); n2];
        for &(c, (i, j), l) in &self.g_terms {
            let idx = complex
                .basis2_index((i - 1, j - 1), l - 1)
                .ok_or_else(|| Error::Certificate(format!("no basis element W_{{{i},{j}}}^{l}")))?;
            x[idx] += c;
        }
        let cert = TorsionCertificate {
            graph: self.graph.clone(),
            shape: self.shape.clone(),
            prime: 2,
            h,
            witness_x: x,
        };
        Ok((cert, complex))
    }

    /// True when all three certificate checks pass.
    pub fn verifies(&self) -> Result<bool> {
        let (cert, complex) = self.certificate()?;
        Ok(check_certificate(&cert, &complex)?.is_valid())
    }
}

fn seed_terms(g: &[(i64, (usize, usize))]) -> Vec<(i64, (usize, usize), usize)> {
    g.iter().map(|&(c, p)| (c, p, 1)).collect()
}

pub fn k5_seed() -> CanonicalSeed {
    CanonicalSeed {
        kind: KuratowskiKind::K5,
        graph: Graph::complete(5),
        shape: Partition::new(vec![2, 2, 1]).expect("valid shape"),
        h_terms: K5_H.to_vec(),
        g_terms: seed_terms(K5_G),
    }
}

/// K3,3 with sides `side_a` and its complement in `1..=6`.
pub fn k33_with_sides(side_a: [u16; 3]) -> Graph {
    let side_b: Vec<u16> = (1..=6).filter(|v| !side_a.contains(v)).collect();
    let edges = side_a.iter().flat_map(|&a| side_b.iter().map(move |&b| (a.min(b), a.max(b))));
    Graph::new(6, edges).expect("K3,3 is simple")
}

/// Every split of `1..=6` into two sides of three, the side holding 1 listed
/// first; `{1,2,3} | {4,5,6}` comes first.
pub fn k33_labelings() -> Vec<[u16; 3]> {
    let mut out = Vec::new();
    for a in 2..=6u16 {
        for b in a + 1..=6 {
            out.push([1, a, b]);
        }
    }
    out
}

/// The K3,3 seed under the first labelling for which the stated terms verify.
pub fn k33_seed() -> Result<CanonicalSeed> {
    for side_a in k33_labelings() {
        let seed = CanonicalSeed {
            kind: KuratowskiKind::K33,
            graph: k33_with_sides(side_a),
            shape: Partition::new(vec![2, 2, 1, 1]).expect("valid shape"),
            h_terms: K33_H.to_vec(),
            g_terms: seed_terms(K33_G),
        };
        // Labellings where some stated W does not exist are skipped.
        if let Ok(true) = seed.verifies() {
            return Ok(seed);
        }
    }
    Err(Error::Certificate("no labelling of K3,3 verifies the stored terms".into()))
}

pub fn canonical_certificates() -> Result<(CanonicalSeed, CanonicalSeed)> {
    let k5 = k5_seed();
    if !k5.verifies()? {
        return Err(Error::Certificate("K5 seed does not verify".into()));
    }
    Ok((k5, k33_seed()?))
}

/// One step of a lift, in user-facing one-based labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "op")]
pub enum LiftStep {
    Seed { kind: KuratowskiKind, graph: String },
    Subdivide { edge: Edge, new_vertex: u16 },
    /// `map[v - 1]` is the image of vertex `v`.
    Embed { map: Vec<u16> },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftTrace {
    pub steps: Vec<LiftStep>,
}

/// Numberings and coefficients of the nonzero entries of `h`.
fn h_terms<'a>(cert: &'a TorsionCertificate, complex: &'a RestrictedComplex) -> Vec<(&'a Numbering, &'a BigInt)> {
    complex
        .basis1()
        .iter()
        .zip(&cert.h)
        .filter(|(_, c)| !c.is_zero())
        .map(|((_, x), c)| (x, c))
        .collect()
}

/// Builds the complex for `h` on `graph`, re-solves `x` and re-verifies.
fn finish(graph: Graph, shape: Partition, prime: u32, h: Vec<BigInt>, complex: RestrictedComplex) -> Result<(TorsionCertificate, RestrictedComplex)> {
    if h.iter().all(Zero::is_zero) {
        return Err(Error::LiftFailed(format!("lifted chain on {} is zero", graph.id())));
    }
    let p = BigInt::from(prime);
    let ph: Vec<BigInt> = h.iter().map(|c| c * &p).collect();
    let x = solve_integer(complex.d2(), &ph)
        .ok_or_else(|| Error::LiftFailed(format!("{prime}h is not a boundary on {}", graph.id())))?;
    let cert = TorsionCertificate {
        graph,
        shape,
        prime,
        h,
        witness_x: x,
    };
    let verdict = check_certificate(&cert, &complex)?;
    if !verdict.is_valid() {
        return Err(Error::LiftFailed(format!(
            "on {}: cycle={}, doubled={}, not_in_image={}",
            cert.graph.id(),
            verdict.cycle,
            verdict.doubled,
            verdict.not_in_image
        )));
    }
    Ok((cert, complex))
}

/// Moves a certificate on `g` to `g` with the edge `(a, b)` subdivided by the
/// new vertex `n + 1`.
pub fn lift_subdivision(
    cert: &TorsionCertificate,
    complex: &RestrictedComplex,
    edge: Edge,
) -> Result<(TorsionCertificate, RestrictedComplex)> {
    let g = &cert.graph;
    let (a, b) = edge;
    let broken = g.edge_index(a, b).ok_or(Error::NotAnEdge(a, b))?;
    let big = g.subdivide(a, b)?;
    let c = g.n() as u16 + 1;
    let shape = cert.shape.with_extra_boxes(1);
    let big_complex = build_restricted_complex(&big, &shape)?;

    let minus = -BigInt::one();
    let mut terms: Vec<(Numbering, BigInt)> = Vec::new();
    for ((ec, x), coeff) in complex.basis1().iter().zip(&cert.h) {
        if coeff.is_zero() {
            continue;
        }
        let lifted = x.with_bottom_boxes(1);
        if ec.edge != broken {
            terms.push((lifted, coeff.clone()));
            continue;
        }
        // Exchange c (alone in the last row) with each entry of the first row.
        let last = lifted.rows().len() - 1;
        for pos in 0..2 {
            let mut rows = lifted.rows().to_vec();
            let moved = rows[0][pos];
            rows[0][pos] = c;
            rows[last][0] = moved;
            terms.push((Numbering::new(rows)?, coeff * &minus));
        }
    }
    let h = big_complex.one_chain(terms.iter().map(|(s, c)| (s, c)))?;
    finish(big, shape, cert.prime, h, big_complex)
}

/// Moves a certificate on `g` to `g_big`, where `embedding[v - 1]` is the
/// image of vertex `v` and every edge of `g` maps to an edge of `g_big`.
pub fn lift_subgraph(
    cert: &TorsionCertificate,
    complex: &RestrictedComplex,
    g_big: &Graph,
    embedding: &[u16],
) -> Result<(TorsionCertificate, RestrictedComplex)> {
    let g = &cert.graph;
    let (n, n_big) = (g.n(), g_big.n());
    if embedding.len() != n {
        return Err(Error::NotASubgraph(format!(
            "embedding has {} entries for {n} vertices",
            embedding.len()
        )));
    }
    let mut perm = vec![0u16; n_big];
    let mut used = vec![false; n_big + 1];
    for (v, &w) in embedding.iter().enumerate() {
        if w == 0 || w as usize > n_big || used[w as usize] {
            return Err(Error::NotASubgraph(format!("vertex {} maps to {w}", v + 1)));
        }
        used[w as usize] = true;
        perm[v] = w;
    }
    for &(a, b) in g.edges() {
        let (x, y) = (embedding[a as usize - 1], embedding[b as usize - 1]);
        if !g_big.has_edge(x, y) {
            return Err(Error::NotASubgraph(format!("edge ({a},{b}) maps to non-edge ({x},{y})")));
        }
    }
    // New vertices n+1.. fill the unused labels in increasing order.
    let mut free = (1..=n_big as u16).filter(|&w| !used[w as usize]);
    for slot in perm.iter_mut().skip(n) {
        *slot = free.next().expect("counts match");
    }
    let relabel = crate::perm::Permutation::from_images(perm).expect("bijection");

    let shape = cert.shape.with_extra_boxes(n_big - n);
    let big_complex = build_restricted_complex(g_big, &shape)?;
    let terms: Vec<(Numbering, BigInt)> = h_terms(cert, complex)
        .into_iter()
        .map(|(x, c)| (x.with_bottom_boxes(n_big - n).act(&relabel), c.clone()))
        .collect();
    let h = big_complex.one_chain(terms.iter().map(|(s, c)| (s, c)))?;
    finish(g_big.clone(), shape, cert.prime, h, big_complex)
}

/// A verified certificate for a non-planar graph together with how it was
/// obtained.
#[derive(Clone, Debug)]
pub struct NonplanarCertificate {
    pub certificate: TorsionCertificate,
    pub complex: RestrictedComplex,
    pub witness: SubdivisionWitness,
    /// The subdivided seed, labelled seed vertices first, then new vertices
    /// in order of insertion.
    pub canonical_graph: Graph,
    /// `embedding[v - 1]`: vertex of the input graph playing canonical vertex `v`.
    pub embedding: Vec<u16>,
    pub trace: LiftTrace,
}

/// Finds a Kuratowski subdivision in `g` and lifts the matching seed
/// certificate onto `g`.
pub fn certify_nonplanar(g: &Graph) -> Result<NonplanarCertificate> {
    let witness = find_kuratowski_subdivision(g).ok_or(Error::PlanarInput)?;
    certify_with_witness(g, &witness)
}

pub fn certify_with_witness(g: &Graph, witness: &SubdivisionWitness) -> Result<NonplanarCertificate> {
    if !witness.verify(g) {
        return Err(Error::Certificate("witness is not a Kuratowski subdivision of the graph".into()));
    }
    let seed = match witness.kind {
        KuratowskiKind::K5 => k5_seed(),
        KuratowskiKind::K33 => k33_seed()?,
    };
    // Seed vertex order matching the witness branch order.
    let seed_vertices: Vec<u16> = match witness.kind {
        KuratowskiKind::K5 => (1..=5).collect(),
        KuratowskiKind::K33 => {
            let a: Vec<u16> = (1..=6).filter(|&v| v == 1 || !seed.graph.has_edge(1, v)).collect();
            let b: Vec<u16> = (1..=6).filter(|v| !a.contains(v)).collect();
            a.into_iter().chain(b).collect()
        }
    };
    let mut to_target: Vec<u16> = vec![0; seed.graph.n()];
    for (pos, &sv) in seed_vertices.iter().enumerate() {
        to_target[sv as usize - 1] = witness.branch_vertices[pos];
    }
    let from_target = |t: u16, map: &[u16]| map.iter().position(|&x| x == t).map(|p| p as u16 + 1);

    let mut trace = LiftTrace {
        steps: vec![LiftStep::Seed {
            kind: witness.kind,
            graph: seed.graph.id(),
        }],
    };
    let (mut cert, mut complex) = seed.certificate()?;
    let seed_verdict = check_certificate(&cert, &complex)?;
    if !seed_verdict.is_valid() {
        return Err(Error::Certificate("seed certificate does not verify".into()));
    }

    for path in &witness.paths {
        if path.len() <= 2 {
            continue;
        }
        let mut path = path.clone();
        if path[0] > path[path.len() - 1] {
            path.reverse();
        }
        let end = from_target(path[path.len() - 1], &to_target).expect("branch vertex");
        let mut prev = from_target(path[0], &to_target).expect("branch vertex");
        for &inner in &path[1..path.len() - 1] {
            let edge = (prev.min(end), prev.max(end));
            let (next_cert, next_complex) = lift_subdivision(&cert, &complex, edge)?;
            let c = cert.graph.n() as u16 + 1;
            trace.steps.push(LiftStep::Subdivide { edge, new_vertex: c });
            cert = next_cert;
            complex = next_complex;
            to_target.push(inner);
            prev = c;
        }
    }

    let canonical_graph = cert.graph.clone();
    let embedding = to_target;
    let (cert, complex) = if canonical_graph == *g && embedding.iter().enumerate().all(|(i, &w)| w as usize == i + 1) {
        (cert, complex)
    } else {
        let lifted = lift_subgraph(&cert, &complex, g, &embedding)?;
        trace.steps.push(LiftStep::Embed { map: embedding.clone() });
        lifted
    };
    Ok(NonplanarCertificate {
        certificate: cert,
        complex,
        witness: witness.clone(),
        canonical_graph,
        embedding,
        trace,
    })
}
