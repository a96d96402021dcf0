//! The on-disk form of a torsion certificate.
//!
//! Chains are stored by what their basis elements mean (an edge or a pair of
//! edges given by their endpoints, plus a one-based copy index) rather than by
//! matrix position, so a reader can rebuild the complex from the graph alone
//! and map the terms back. Terms are sorted, so the JSON text is a function of
//! the certificate.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::complex::RestrictedComplex;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, SubdivisionWitness};
use crate::homology::{CertificateVerdict, TorsionCertificate};
use crate::lift::{LiftTrace, NonplanarCertificate};
use crate::tableaux::Partition;

/// One term of `h`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeTerm {
    pub edge: Edge,
    pub copy: usize,
    pub coeff: i64,
}

/// One term of the witness `x`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PairTerm {
    pub pair: (Edge, Edge),
    pub copy: usize,
    pub coeff: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalLabelling {
    /// Subdivided K5 or K3,3 the seed was lifted along.
    pub graph: Graph,
    /// `embedding[v - 1]` is the vertex of the certified graph playing `v`.
    pub embedding: Vec<u16>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDocument {
    pub graph: Graph,
    pub shape: Partition,
    pub prime: u32,
    pub h: Vec<EdgeTerm>,
    pub x: Vec<PairTerm>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdict: Option<CertificateVerdict>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<SubdivisionWitness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub canonical: Option<CanonicalLabelling>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<LiftTrace>,
}

fn small(c: &BigInt) -> Result<i64> {
    i64::try_from(c).map_err(|_| Error::Certificate(format!("coefficient {c} does not fit in 64 bits")))
}

impl CertificateDocument {
    pub fn from_certificate(cert: &TorsionCertificate, complex: &RestrictedComplex) -> Result<Self> {
        let (n2, n1, _) = complex.dims();
        if cert.h.len() != n1 || cert.witness_x.len() != n2 {
            return Err(Error::DimensionMismatch("certificate does not match its complex".into()));
        }
        let edges = complex.graph().edges();
        let mut h = Vec::new();
        for ((ec, _), c) in complex.basis1().iter().zip(&cert.h) {
            if !c.is_zero() {
                h.push(EdgeTerm {
                    edge: edges[ec.edge],
                    copy: ec.copy + 1,
                    coeff: small(c)?,
                });
            }
        }
        let mut x = Vec::new();
        for ((pc, _), c) in complex.basis2().iter().zip(&cert.witness_x) {
            if !c.is_zero() {
                x.push(PairTerm {
                    pair: (edges[pc.pair.0], edges[pc.pair.1]),
                    copy: pc.copy + 1,
                    coeff: small(c)?,
                });
            }
        }
        h.sort();
        x.sort();
        Ok(CertificateDocument {
            graph: cert.graph.clone(),
            shape: cert.shape.clone(),
            prime: cert.prime,
            h,
            x,
            verdict: None,
            witness: None,
            canonical: None,
            trace: None,
        })
    }

    pub fn from_nonplanar(nc: &NonplanarCertificate, verdict: CertificateVerdict) -> Result<Self> {
        let mut doc = Self::from_certificate(&nc.certificate, &nc.complex)?;
        doc.verdict = Some(verdict);
        doc.witness = Some(nc.witness.clone());
        doc.canonical = Some(CanonicalLabelling {
            graph: nc.canonical_graph.clone(),
            embedding: nc.embedding.clone(),
        });
        doc.trace = Some(nc.trace.clone());
        Ok(doc)
    }

    /// Coordinates of the stored chains over the bases of `complex`, which must
    /// belong to the same graph and shape. Unknown or repeated basis elements
    /// are errors.
    pub fn to_certificate(&self, complex: &RestrictedComplex) -> Result<TorsionCertificate> {
        if self.graph != *complex.graph() {
            return Err(Error::DimensionMismatch(format!(
                "certificate is for {} but the graph is {}",
                self.graph.id(),
                complex.graph().id()
            )));
        }
        if self.shape != *complex.shape() {
            return Err(Error::DimensionMismatch(format!(
                "certificate shape {} differs from {}",
                self.shape,
                complex.shape()
            )));
        }
        let g = complex.graph();
        let edge = |(a, b): Edge| g.edge_index(a.min(b), a.max(b)).ok_or(Error::NotAnEdge(a, b));
        let copy = |c: usize| {
            c.checked_sub(1)
                .ok_or_else(|| Error::Certificate("copy indices start at 1".into()))
        };

        let (n2, n1, _) = complex.dims();
        let mut h = vec![BigInt::zero(); n1];
        let mut seen = vec![false; n1];
        for t in &self.h {
            let idx = complex
                .basis1_index(edge(t.edge)?, copy(t.copy)?)
                .ok_or_else(|| Error::Certificate(format!("no copy {} on edge {:?}", t.copy, t.edge)))?;
            if std::mem::replace(&mut seen[idx], true) {
                return Err(Error::Certificate(format!("repeated term for edge {:?} copy {}", t.edge, t.copy)));
            }
            h[idx] = BigInt::from(t.coeff);
        }
        let mut x = vec![BigInt::zero(); n2];
        let mut seen = vec![false; n2];
        for t in &self.x {
            let (i, j) = (edge(t.pair.0)?, edge(t.pair.1)?);
            let idx = complex
                .basis2_index((i.min(j), i.max(j)), copy(t.copy)?)
                .ok_or_else(|| Error::Certificate(format!("no copy {} on pair {:?}", t.copy, t.pair)))?;
            if std::mem::replace(&mut seen[idx], true) {
                return Err(Error::Certificate(format!("repeated term for pair {:?} copy {}", t.pair, t.copy)));
            }
            x[idx] = BigInt::from(t.coeff);
        }
        Ok(TorsionCertificate {
            graph: self.graph.clone(),
            shape: self.shape.clone(),
            prime: self.prime,
            h,
            witness_x: x,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate documents always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Certificate(e.to_string()))
    }
}
