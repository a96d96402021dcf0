use chromhom_core::{build_restricted_complex, homology_group, Graph, HomologyResult, Partition};
use serde::{Deserialize, Serialize};

use crate::exit::Failure;

/// `H1` of the complex restricted to one shape.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeReport {
    pub shape: Partition,
    pub k: usize,
    /// `(dim C2, dim C1, dim C0)`
    pub dims: [usize; 3],
    pub betti: usize,
    pub torsion: Vec<u64>,
    pub has_z2: bool,
}

impl ShapeReport {
    /// `Z^3 + Z/2 + Z/4`, or `0`.
    pub fn group(&self) -> String {
        let mut parts = Vec::new();
        if self.betti > 0 {
            parts.push(format!("Z^{}", self.betti));
        }
        parts.extend(self.torsion.iter().map(|f| format!("Z/{f}")));
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

fn torsion_u64(h: &HomologyResult) -> Result<Vec<u64>, Failure> {
    h.invariant_factors
        .iter()
        .map(|f| u64::try_from(f).map_err(|_| Failure::internal(anyhow::anyhow!("invariant factor {f} overflows u64"))))
        .collect()
}

pub fn shape_report(g: &Graph, shape: &Partition) -> Result<ShapeReport, Failure> {
    let complex = build_restricted_complex(g, shape)?;
    let h = homology_group(complex.d1(), complex.d2())?;
    let (n2, n1, n0) = complex.dims();
    Ok(ShapeReport {
        shape: shape.clone(),
        k: complex.k(),
        dims: [n2, n1, n0],
        betti: h.betti,
        torsion: torsion_u64(&h)?,
        has_z2: h.has_z2(),
    })
}
