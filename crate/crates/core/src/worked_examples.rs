//! Golden checks for the K5 computations worked out by hand: the tableaux
//! lists, the exchange relations, single columns of both differentials, the
//! dimensions, both seed certificates and the subdivision rewriting.

use std::fmt;

use num_bigint::BigInt;

use crate::complex::{build_restricted_complex, RestrictedComplex};
use crate::error::Result;
use crate::graph::Graph;
use crate::homology::{check_certificate, homology_group};
use crate::lift::{k33_seed, k5_seed, CanonicalSeed};
use crate::oracle::{specht_vector, GroupAlgebraVector};
use crate::tableaux::{enumerate_ssyt, enumerate_syt, pi_expand, Filling, Numbering, NumberingVector, Partition};

/// A deliberately wrong convention, used to show the battery can fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mutation {
    /// Swap the signs of the two face maps in `d2`.
    D2Sign,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

fn num(s: &str) -> Numbering {
    s.parse().expect("literal numbering")
}

fn fill(s: &str) -> Filling {
    s.parse().expect("literal filling")
}

fn shape(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("literal shape")
}

fn ints(v: &[BigInt]) -> Vec<i64> {
    v.iter().map(|c| i64::try_from(c).unwrap_or(i64::MAX)).collect()
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn outcome(name: &'static str, passed: bool, detail: String) -> CheckOutcome {
    CheckOutcome { name, passed, detail }
}

/// `Σ c_i e_{idx_i}` in a space of dimension `len`.
fn unit_combination(len: usize, terms: &[(i64, usize)]) -> Vec<i64> {
    let mut v = vec![0; len];
    for &(c, i) in terms {
        v[i] += c;
    }
    v
}

fn check_syt() -> CheckOutcome {
    let got = enumerate_syt(&shape(&[2, 2, 1]));
    let want: Vec<Numbering> = ["(1,2|3,4|5)", "(1,2|3,5|4)", "(1,3|2,4|5)", "(1,3|2,5|4)", "(1,4|2,5|3)"]
        .iter()
        .map(|s| num(s))
        .collect();
    outcome("standard tableaux Y1..Y5 of (2,2,1)", got == want, join(&got))
}

fn check_ssyt() -> Result<CheckOutcome> {
    let got = enumerate_ssyt(&shape(&[2, 2, 1]), &shape(&[2, 1, 1, 1]))?;
    let want = vec![fill("(1,1|2,3|4)"), fill("(1,1|2,4|3)")];
    Ok(outcome("semistandard Z1, Z2 of weight (2,1,1,1)", got == want, join(&got)))
}

fn check_first_edge(c: &RestrictedComplex) -> CheckOutcome {
    let x11 = &c.basis1()[c.basis1_index(0, 0).expect("X_1^1")].1;
    let x12 = &c.basis1()[c.basis1_index(0, 1).expect("X_1^2")].1;
    let y = c.basis0();
    let passed = *x11 == y[0] && *x12 == y[1];
    outcome("X_1^1 = Y1 and X_1^2 = Y2", passed, format!("X_1^1 = {x11}, X_1^2 = {x12}"))
}

fn check_pi() -> Result<CheckOutcome> {
    let first = pi_expand(&num("(1,4|2,3|5)"), 1, 1)?;
    let mut want = NumberingVector::new(0);
    want.add(&num("(1,2|4,3|5)"), &BigInt::from(-1));
    want.add(&num("(2,4|1,3|5)"), &BigInt::from(-1));
    let second = pi_expand(&num("(2,4|1,3|5)"), 1, 2)?;
    let passed = first == want && second == NumberingVector::from_numbering(&num("(1,3|2,4|5)"), 0);
    Ok(outcome(
        "pi_{1,1}(X_3^1) and pi_{1,2}",
        passed,
        format!("pi_11 = {first:?}, pi_12 = {second:?}"),
    ))
}

fn check_d1(c: &RestrictedComplex) -> CheckOutcome {
    let x31 = c.basis1_index(2, 0).expect("X_3^1");
    let x32 = c.basis1_index(2, 1).expect("X_3^2");
    let col31 = ints(&c.d1().column(x31));
    let col32 = ints(&c.d1().column(x32));
    let passed = col31 == [-1, 0, -1, 0, 0] && col32 == [0, 0, 0, 0, 1];
    outcome(
        "d1(X_3^1) = -Y1 - Y3, d1(X_3^2) = Y5",
        passed,
        format!("{col31:?}, {col32:?}"),
    )
}

/// Recomputes the `d2` column of `W_{1,8}` from its two face maps, then
/// compares it with the expected value and with the built matrix.
fn check_d2(c: &RestrictedComplex, mutation: Option<Mutation>) -> Result<CheckOutcome> {
    let w = c.basis2_index((0, 7), 0).expect("W_{1,8}");
    let wn = &c.basis2()[w].1;
    let mut rows = wn.rows().to_vec();
    rows.swap(0, 1);
    let swapped = Numbering::new(rows)?;

    let (keep_j, keep_i) = match mutation {
        None => (BigInt::from(1), BigInt::from(-1)),
        Some(Mutation::D2Sign) => (BigInt::from(-1), BigInt::from(1)),
    };
    let col = c.one_chain([(&swapped, &keep_j), (wn, &keep_i)])?;

    let x11 = c.basis1_index(0, 0).expect("X_1^1");
    let x81 = c.basis1_index(7, 0).expect("X_8^1");
    let want = unit_combination(col.len(), &[(-1, x11), (1, x81)]);
    let got = ints(&col);
    let built = ints(&c.d2().column(w));
    let nonzero: Vec<String> = c
        .basis1()
        .iter()
        .zip(&got)
        .filter(|(_, v)| **v != 0)
        .map(|((ec, _), v)| format!("{v:+} X_{}^{}", ec.edge + 1, ec.copy + 1))
        .collect();
    Ok(outcome(
        "d2(W_{1,8}) = -X_1^1 + X_8^1",
        got == want && built == want,
        nonzero.join(" "),
    ))
}

fn check_dims(c: &RestrictedComplex) -> CheckOutcome {
    let dims = c.dims();
    outcome("K5 dimensions (C2, C1, C0) = (15, 20, 5)", dims == (15, 20, 5), format!("{dims:?}"))
}

fn check_seed(name: &'static str, seed: &CanonicalSeed) -> Result<CheckOutcome> {
    let (cert, complex) = seed.certificate()?;
    let verdict = check_certificate(&cert, &complex)?;
    let h = homology_group(complex.d1(), complex.d2())?;
    let factors: Vec<String> = h.invariant_factors.iter().map(ToString::to_string).collect();
    Ok(outcome(
        name,
        verdict.is_valid() && h.has_z2(),
        format!(
            "{} shape {}: cycle={} doubled={} not_in_image={}; H1 = Z^{} + torsion [{}]",
            seed.graph.id(),
            seed.shape,
            verdict.cycle,
            verdict.doubled,
            verdict.not_in_image,
            h.betti,
            factors.join(", ")
        ),
    ))
}

/// `v(1,5|2,3|4|6) = -v(2,5|1,3|4|6) - v(1,2|3,5|4|6)`, both as the exchange
/// relation and as an identity of group algebra elements.
fn check_rewriting() -> Result<CheckOutcome> {
    let lhs = num("(1,5|2,3|4|6)");
    let a = num("(2,5|1,3|4|6)");
    let b = num("(1,2|3,5|4|6)");
    let mut want = NumberingVector::new(0);
    want.add(&a, &BigInt::from(-1));
    want.add(&b, &BigInt::from(-1));
    let by_exchange = pi_expand(&lhs, 1, 1)? == want;

    let reference = num("(1,2|3,4|5|6)");
    let mut sum = GroupAlgebraVector::zero(6);
    sum.add_scaled(&specht_vector(&lhs, &reference)?, 1);
    sum.add_scaled(&specht_vector(&a, &reference)?, 1);
    sum.add_scaled(&specht_vector(&b, &reference)?, 1);
    let by_group_algebra = sum.is_zero();

    Ok(outcome(
        "subdivision rewriting (1,5|2,3|4|6)",
        by_exchange && by_group_algebra,
        format!("exchange relation {by_exchange}, group algebra identity {by_group_algebra}"),
    ))
}

/// Runs every check; a check that errors is reported as failed.
pub fn run_worked_examples(mutation: Option<Mutation>) -> Vec<CheckOutcome> {
    let mut out = vec![check_syt()];
    let caught = |name: &'static str, r: Result<CheckOutcome>| r.unwrap_or_else(|e| outcome(name, false, e.to_string()));
    out.push(caught("semistandard Z1, Z2", check_ssyt()));

    match build_restricted_complex(&Graph::complete(5), &shape(&[2, 2, 1])) {
        Ok(c) => {
            out.push(check_first_edge(&c));
            out.push(caught("pi exchanges", check_pi()));
            out.push(check_d1(&c));
            out.push(caught("d2(W_{1,8})", check_d2(&c, mutation)));
            out.push(check_dims(&c));
        }
        Err(e) => out.push(outcome("K5 complex", false, e.to_string())),
    }

    out.push(caught("K5 certificate", check_seed("K5 certificate and Z/2", &k5_seed())));
    let k33 = k33_seed().and_then(|s| check_seed("K3,3 certificate and Z/2", &s));
    out.push(caught("K3,3 certificate", k33));
    out.push(caught("subdivision rewriting", check_rewriting()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_pass() {
        let out = run_worked_examples(None);
        assert_eq!(out.len(), 10);
        for o in &out {
            assert!(o.passed, "{o}");
        }
    }

    #[test]
    fn sign_mutation_breaks_d2_only() {
        let out = run_worked_examples(Some(Mutation::D2Sign));
        let failed: Vec<_> = out.iter().filter(|o| !o.passed).map(|o| o.name).collect();
        assert_eq!(failed, vec!["d2(W_{1,8}) = -X_1^1 + X_8^1"]);
    }
}
