//! Exact integer linear algebra and homology of two-step complexes.

mod matrix;
mod smith;
mod sparse;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::complex::RestrictedComplex;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::tableaux::Partition;

pub use matrix::IntMatrix;
pub use smith::{column_hermite, kernel_basis, rank, smith_diagonal, smith_normal_form, solve_integer, SmithForm};
pub use sparse::SparseMatrix;

/// `H = ker d1 / im d2` as `Z^betti ⊕ Z/f_1 ⊕ ... ⊕ Z/f_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyResult {
    pub betti: usize,
    /// Factors greater than one, each dividing the next.
    pub invariant_factors: Vec<BigInt>,
}

impl HomologyResult {
    pub fn zero() -> Self {
        HomologyResult {
            betti: 0,
            invariant_factors: Vec::new(),
        }
    }

    pub fn is_torsion_free(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    /// Some invariant factor is even, so `Z/2` is a subgroup.
    pub fn has_z2(&self) -> bool {
        self.invariant_factors.iter().any(|f| f.is_even())
    }

    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.invariant_factors.is_empty()
    }
}

fn nonunit(diag: Vec<BigInt>) -> Vec<BigInt> {
    diag.into_iter().filter(|d| !d.is_one()).collect()
}

/// Homology at the middle of `C2 --d2--> C1 --d1--> C0`.
///
/// `d2` is rewritten in a lattice basis of `ker d1` taken from the Smith form
/// of `d1`; the Smith form of the result gives the torsion and the rank.
pub fn homology_group(d1: &IntMatrix, d2: &IntMatrix) -> Result<HomologyResult> {
    if d1.cols() != d2.rows() {
        return Err(Error::DimensionMismatch(format!(
            "d1 has {} columns but d2 has {} rows",
            d1.cols(),
            d2.rows()
        )));
    }
    if !d1.mul(d2).is_zero() {
        return Err(Error::ComplexNotExact);
    }
    let snf = smith_normal_form(d1);
    let coords = snf.v_inv.mul(d2);
    // Rows from rank(d1) on are coordinates in the kernel basis; the rest vanish.
    let a = coords.rows_from(snf.rank);
    let diag = smith_diagonal(&a);
    Ok(HomologyResult {
        betti: d1.cols() - snf.rank - diag.len(),
        invariant_factors: nonunit(diag),
    })
}

/// Same result from ranks and the Smith diagonal of `d2` alone. Valid because
/// `C0` is free, so `ker d1` is a direct summand of `C1`.
pub fn homology_by_ranks(d1: &IntMatrix, d2: &IntMatrix) -> HomologyResult {
    let r1 = rank(d1);
    let diag = smith_diagonal(d2);
    HomologyResult {
        betti: d1.cols() - r1 - diag.len(),
        invariant_factors: nonunit(diag),
    }
}

/// The sparse counterpart of [`homology_by_ranks`].
pub fn sparse_homology(d1: &SparseMatrix, d2: &SparseMatrix) -> Result<HomologyResult> {
    if d1.cols() != d2.rows() {
        return Err(Error::DimensionMismatch(format!(
            "d1 has {} columns but d2 has {} rows",
            d1.cols(),
            d2.rows()
        )));
    }
    if !d1.mul(d2).is_zero() {
        return Err(Error::ComplexNotExact);
    }
    let r1 = d1.smith_diagonal().len();
    let diag = d2.smith_diagonal();
    Ok(HomologyResult {
        betti: d1.cols() - r1 - diag.len(),
        invariant_factors: nonunit(diag),
    })
}

/// A 1-chain `h` with `d1 h = 0` and `p h = d2 x` but `h` not a boundary,
/// witnessing `Z/p` inside `H1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionCertificate {
    pub graph: Graph,
    pub shape: Partition,
    pub prime: u32,
    /// Coordinates over `basis1`.
    pub h: Vec<BigInt>,
    /// Coordinates over `basis2` with `d2 x = p h`.
    pub witness_x: Vec<BigInt>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateVerdict {
    /// `d1 h = 0`
    pub cycle: bool,
    /// `d2 x = p h`
    pub doubled: bool,
    /// `d2 y = h` has no integer solution
    pub not_in_image: bool,
}

impl CertificateVerdict {
    pub fn is_valid(&self) -> bool {
        self.cycle && self.doubled && self.not_in_image
    }
}

/// Runs the three checks against a complex built independently of the
/// certificate.
pub fn check_certificate(cert: &TorsionCertificate, complex: &RestrictedComplex) -> Result<CertificateVerdict> {
    if cert.graph != *complex.graph() {
        return Err(Error::DimensionMismatch("certificate belongs to a different graph".into()));
    }
    if cert.shape != *complex.shape() {
        return Err(Error::DimensionMismatch(format!(
            "certificate shape {} differs from complex shape {}",
            cert.shape,
            complex.shape()
        )));
    }
    let (n2, n1, _) = complex.dims();
    if cert.h.len() != n1 || cert.witness_x.len() != n2 {
        return Err(Error::DimensionMismatch(format!(
            "certificate has |h| = {}, |x| = {}; complex has {n1}, {n2}",
            cert.h.len(),
            cert.witness_x.len()
        )));
    }
    let cycle = complex.d1().mul_vec(&cert.h).iter().all(Zero::is_zero);
    let p = BigInt::from(cert.prime);
    let ph: Vec<BigInt> = cert.h.iter().map(|c| c * &p).collect();
    let doubled = complex.d2().mul_vec(&cert.witness_x) == ph;
    let not_in_image = solve_integer(complex.d2(), &cert.h).is_none();
    Ok(CertificateVerdict {
        cycle,
        doubled,
        not_in_image,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn homology_of_small_complexes() {
        // Z --2--> Z --0--> Z: H = Z/2
        let d1 = IntMatrix::from_rows(&[vec![0i64]]);
        let d2 = IntMatrix::from_rows(&[vec![2i64]]);
        let h = homology_group(&d1, &d2).unwrap();
        assert_eq!(h.betti, 0);
        assert_eq!(h.invariant_factors, vec![BigInt::from(2)]);
        assert!(h.has_z2());
        assert_eq!(homology_by_ranks(&d1, &d2), h);

        // d2 = 0: free of rank dim ker d1
        let d1 = IntMatrix::from_rows(&[vec![1i64, 1, 0]]);
        let d2 = IntMatrix::zeros(3, 2);
        let h = homology_group(&d1, &d2).unwrap();
        assert_eq!(h, HomologyResult { betti: 2, invariant_factors: vec![] });

        let d1 = IntMatrix::from_rows(&[vec![1i64]]);
        let d2 = IntMatrix::from_rows(&[vec![1i64]]);
        assert!(matches!(homology_group(&d1, &d2), Err(Error::ComplexNotExact)));
    }

    #[test]
    fn empty_d2() {
        let d1 = IntMatrix::from_rows(&[vec![1i64, -1]]);
        let d2 = IntMatrix::zeros(2, 0);
        assert_eq!(homology_group(&d1, &d2).unwrap().betti, 1);
    }
}
