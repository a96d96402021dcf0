//! Inputs shared by the benchmarks.

use chromhom_core::{Graph, Partition};

/// Graphs paired with the shape `(2, 2, 1^(n-4))`, smallest first.
pub fn complex_inputs() -> Vec<(&'static str, Graph, Partition)> {
    let k5 = Graph::complete(5);
    let k33 = Graph::complete_bipartite(3, 3);
    let k6 = Graph::complete(6);
    let k7 = Graph::complete(7);
    [("K5", k5), ("K3,3", k33), ("K6", k6), ("K7", k7)]
        .into_iter()
        .map(|(name, g)| {
            let shape = Partition::two_column(g.n(), 2).expect("n >= 4");
            (name, g, shape)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inputs_build() {
        for (name, g, shape) in complex_inputs() {
            assert!(chromhom_core::build_restricted_complex(&g, &shape).is_ok(), "{name}");
        }
    }
}
