//! Exact q-degree-zero chromatic symmetric homology of graphs.
//!
//! The pipeline: a [`Graph`] and a two-column shape give a
//! [`RestrictedComplex`] (via symbolic straightening of Specht vectors), whose
//! integer homology is computed with Smith normal forms. For non-planar graphs
//! a `Z/2` torsion certificate is produced by lifting a certificate for K5 or
//! K3,3 along a Kuratowski subdivision.

pub mod complex;
pub mod error;
pub mod graph;
pub mod homology;
pub mod lift;
pub mod oracle;
pub mod perm;
pub mod report;
pub mod tableaux;
pub mod worked_examples;

pub use complex::{build_restricted_complex, RestrictedComplex};
pub use error::{Error, Result};
pub use graph::{Graph, NormalizationReport, RawGraph, SubdivisionWitness};
pub use lift::{certify_nonplanar, NonplanarCertificate};
pub use homology::{check_certificate, homology_group, CertificateVerdict, HomologyResult, IntMatrix, TorsionCertificate};
pub use perm::Permutation;
pub use report::CertificateDocument;
pub use tableaux::{Numbering, NumberingVector, Partition};
