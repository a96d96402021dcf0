//! Formal combinations of numberings and straightening by row exchanges.
//!
//! A numbering `S` stands for the Specht vector `v_S` (see
//! [`crate::oracle::specht_vector`]). Permuting entries inside a row leaves
//! `v_S` unchanged; exchanging two rows of length `L` multiplies it by
//! `(-1)^L`. The exchange relation
//!
//! ```text
//! v_S = (-1)^j * sum over U in Xi_{i,j}(S) of v_U
//! ```
//!
//! where `U` runs over the numberings obtained by swapping the first `j`
//! entries of row `i + 1` with any `j` entries of row `i`, rewrites any vector
//! into a combination of standard ones.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Numbering;
use crate::error::{Error, Result};

/// Term-steps allowed before straightening gives up and asks the oracle.
pub const DEFAULT_STEP_LIMIT: usize = 1_000_000;

/// Largest `n` for which a stalled straightening falls back to the
/// group-algebra solve.
const ORACLE_FALLBACK_BOUND: usize = 8;

/// Canonical representative of `s` with the sign relating their Specht
/// vectors: `v_s = sign * v_canonical`.
///
/// Every row is sorted. Rows from `frozen` on are then ordered by first entry
/// within each block of equal length; rows above `frozen` keep their position.
pub fn canonical_form(s: &Numbering, frozen: usize) -> (Numbering, i32) {
    let mut rows: Vec<Vec<u16>> = s.rows().to_vec();
    for r in &mut rows {
        r.sort_unstable();
    }
    let mut sign = 1i32;
    let mut start = frozen.min(rows.len());
    while start < rows.len() {
        let len = rows[start].len();
        let mut end = start + 1;
        while end < rows.len() && rows[end].len() == len {
            end += 1;
        }
        if len % 2 == 1 && end - start > 1 {
            sign *= sort_sign(&rows[start..end]);
        }
        rows[start..end].sort_unstable_by_key(|r| r[0]);
        start = end;
    }
    (Numbering::from_rows_unchecked(rows), sign)
}

/// Sign of the permutation that sorts the rows by first entry.
fn sort_sign(rows: &[Vec<u16>]) -> i32 {
    let keys: Vec<u16> = rows.iter().map(|r| r[0]).collect();
    let mut inversions = 0usize;
    for i in 0..keys.len() {
        for j in i + 1..keys.len() {
            if keys[i] > keys[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The set `Xi_{r,j}(s)` for zero-based upper row `r`: all numberings obtained
/// by exchanging the first `j` entries of row `r + 1` with `j` entries of row
/// `r`, each subset keeping its order.
pub fn pi_terms(s: &Numbering, r: usize, j: usize) -> Result<Vec<Numbering>> {
    let rows = s.rows();
    if r + 1 >= rows.len() || j == 0 || rows[r + 1].len() < j || rows[r].len() < j {
        return Err(Error::InvalidExchange {
            row: r + 1,
            prefix: j,
            rows: rows.len(),
        });
    }
    let upper = &rows[r];
    let lower = &rows[r + 1];
    let incoming = &lower[..j];
    let mut out = Vec::new();
    let mut positions: Vec<usize> = (0..j).collect();
    loop {
        let mut new_upper = upper.clone();
        let mut new_lower: Vec<u16> = positions.iter().map(|&p| upper[p]).collect();
        new_lower.extend_from_slice(&lower[j..]);
        for (k, &p) in positions.iter().enumerate() {
            new_upper[p] = incoming[k];
        }
        let mut new_rows = rows.to_vec();
        new_rows[r] = new_upper;
        new_rows[r + 1] = new_lower;
        out.push(Numbering::from_rows_unchecked(new_rows));

        // next j-subset of positions in lexicographic order
        let m = upper.len();
        let mut i = j;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if positions[i] < m - j + i {
                positions[i] += 1;
                for t in i + 1..j {
                    positions[t] = positions[t - 1] + 1;
                }
                break;
            }
        }
    }
}

/// `π_{i,j}(s) = (-1)^j Σ_{U ∈ Ξ_{i,j}(s)} U` with `upper_row = i` counted from
/// one, returned with canonical keys.
pub fn pi_expand(s: &Numbering, upper_row: usize, prefix: usize) -> Result<NumberingVector> {
    if upper_row == 0 {
        return Err(Error::InvalidExchange {
            row: 0,
            prefix,
            rows: s.rows().len(),
        });
    }
    let sign = if prefix.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    let mut v = NumberingVector::new(0);
    for u in pi_terms(s, upper_row - 1, prefix)? {
        v.add(&u, &sign);
    }
    Ok(v)
}

/// Integer combination of numberings of one shape, keyed by canonical form.
///
/// `frozen` top rows are never reordered when canonicalizing keys.
#[derive(Clone, PartialEq, Eq)]
pub struct NumberingVector {
    frozen: usize,
    terms: BTreeMap<Numbering, BigInt>,
}

impl NumberingVector {
    pub fn new(frozen: usize) -> Self {
        NumberingVector {
            frozen,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_numbering(s: &Numbering, frozen: usize) -> Self {
        let mut v = Self::new(frozen);
        v.add(s, &BigInt::one());
        v
    }

    pub fn frozen(&self) -> usize {
        self.frozen
    }

    /// Adds `coeff · v_s`.
    pub fn add(&mut self, s: &Numbering, coeff: &BigInt) {
        let (key, sign) = canonical_form(s, self.frozen);
        let c = if sign > 0 { coeff.clone() } else { -coeff };
        add_term(&mut self.terms, key, c);
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Numbering, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, s: &Numbering) -> BigInt {
        let (key, sign) = canonical_form(s, self.frozen);
        self.terms
            .get(&key)
            .map(|c| if sign > 0 { c.clone() } else { -c })
            .unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The same vector with keys recanonicalized for a different frozen count.
    pub fn refrozen(&self, frozen: usize) -> NumberingVector {
        let mut v = NumberingVector::new(frozen);
        for (s, c) in &self.terms {
            v.add(s, c);
        }
        v
    }
}

fn add_term(terms: &mut BTreeMap<Numbering, BigInt>, key: Numbering, c: BigInt) {
    if c.is_zero() {
        return;
    }
    match terms.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl fmt::Debug for NumberingVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (s, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c:+}{s}")?;
        }
        Ok(())
    }
}

/// First pair of rows `(r, r + 1)`, `r >= frozen`, whose columns fail to
/// increase. Assumes a canonical key.
fn first_violation(s: &Numbering, frozen: usize) -> Option<usize> {
    let rows = s.rows();
    (frozen..rows.len().saturating_sub(1))
        .find(|&r| rows[r + 1].iter().zip(&rows[r]).any(|(lo, hi)| lo < hi))
}

/// Expresses vectors in a fixed basis of numberings.
pub struct Straightener {
    basis: Vec<Numbering>,
    index: HashMap<Numbering, (usize, i32)>,
    frozen: usize,
    step_limit: usize,
}

impl Straightener {
    /// `basis` must consist of pairwise distinct canonical numberings of one
    /// two-column shape `(2^k, 1^(n-2k))`.
    pub fn new(basis: Vec<Numbering>, frozen: usize) -> Result<Self> {
        let mut index = HashMap::with_capacity(basis.len());
        let shape = basis.first().map(|b| b.shape());
        for (i, b) in basis.iter().enumerate() {
            if Some(b.shape()) != shape {
                return Err(Error::InvalidShape("basis numberings have different shapes".into()));
            }
            let (key, sign) = canonical_form(b, frozen);
            if index.insert(key, (i, sign)).is_some() {
                return Err(Error::InvalidNumbering(format!("basis element {b} is repeated")));
            }
        }
        if let Some(shape) = shape {
            if shape.two_column_k().is_none() {
                return Err(Error::InvalidShape(format!(
                    "straightening is implemented for shapes (2^k,1^m), not {shape}"
                )));
            }
        }
        Ok(Straightener {
            basis,
            index,
            frozen,
            step_limit: DEFAULT_STEP_LIMIT,
        })
    }

    pub fn with_step_limit(mut self, limit: usize) -> Self {
        self.step_limit = limit;
        self
    }

    pub fn basis(&self) -> &[Numbering] {
        &self.basis
    }

    pub fn frozen(&self) -> usize {
        self.frozen
    }

    /// Coefficients `c` with `v = Σ c_b v_b`.
    ///
    /// Repeatedly applies the `j = 1` exchange at the topmost pair of unfrozen
    /// rows whose columns do not increase. If that exceeds the step limit, or
    /// leaves a standard term outside the basis, the group-algebra oracle
    /// solves the system instead.
    pub fn straighten(&self, v: &NumberingVector) -> Result<Vec<BigInt>> {
        match self.rewrite(v) {
            Ok(c) => Ok(c),
            Err(Error::StraighteningStalled(steps)) => {
                let n = v.terms().next().map(|(s, _)| s.n()).unwrap_or(0);
                if n > ORACLE_FALLBACK_BOUND {
                    return Err(Error::StraighteningStalled(steps));
                }
                crate::oracle::expand_numbering_vector(v, &self.basis)
            }
            Err(e) => Err(e),
        }
    }

    /// The rewriting alone, without the oracle fallback.
    pub fn rewrite(&self, v: &NumberingVector) -> Result<Vec<BigInt>> {
        let mut work: BTreeMap<Numbering, BigInt> = BTreeMap::new();
        for (s, c) in v.terms() {
            let (key, sign) = canonical_form(s, self.frozen);
            add_term(&mut work, key, if sign > 0 { c.clone() } else { -c });
        }
        let mut out = vec![BigInt::zero(); self.basis.len()];
        let mut steps = 0usize;
        while let Some((s, c)) = work.pop_first() {
            if let Some(&(idx, sign)) = self.index.get(&s) {
                if sign > 0 {
                    out[idx] += c;
                } else {
                    out[idx] -= c;
                }
                continue;
            }
            let Some(r) = first_violation(&s, self.frozen) else {
                // Standard but not a basis element.
                return Err(Error::StraighteningStalled(steps));
            };
            for u in pi_terms(&s, r, 1)? {
                let (key, sign) = canonical_form(&u, self.frozen);
                // (-1)^1 from the exchange relation
                add_term(&mut work, key, if sign > 0 { -c.clone() } else { c.clone() });
            }
            steps += 1;
            if steps > self.step_limit {
                return Err(Error::StraighteningStalled(steps));
            }
        }
        Ok(out)
    }
}

/// One-shot form of [`Straightener::straighten`].
pub fn straighten(v: &NumberingVector, basis: &[Numbering], frozen: usize) -> Result<Vec<BigInt>> {
    Straightener::new(basis.to_vec(), frozen)?.straighten(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::{enumerate_syt, Partition};

    fn num(s: &str) -> Numbering {
        s.parse().unwrap()
    }

    fn ints(v: &[BigInt]) -> Vec<i64> {
        v.iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn canonical_form_signs() {
        assert_eq!(canonical_form(&num("(2,1|3)"), 0), (num("(1,2|3)"), 1));
        assert_eq!(canonical_form(&num("(2,4|1,3|5)"), 0), (num("(1,3|2,4|5)"), 1));
        // Swapping two singleton rows is a column transposition: sign -1.
        assert_eq!(canonical_form(&num("(1,2|4|3|5)"), 0), (num("(1,2|3|4|5)"), -1));
        assert_eq!(canonical_form(&num("(1,2|5|4|3)"), 0), (num("(1,2|3|4|5)"), -1));
        assert_eq!(canonical_form(&num("(1,2|4|5|3)"), 0), (num("(1,2|3|4|5)"), 1));
        // Frozen rows stay put.
        assert_eq!(canonical_form(&num("(3,4|2,1|5)"), 1), (num("(3,4|1,2|5)"), 1));
        assert_eq!(canonical_form(&num("(3,4|2,1|5)"), 0), (num("(1,2|3,4|5)"), 1));
    }

    #[test]
    fn pi_examples() {
        let v = pi_expand(&num("(1,4|2,3|5)"), 1, 1).unwrap();
        assert_eq!(v.len(), 2);
        assert_eq!(v.coefficient(&num("(1,2|4,3|5)")), BigInt::from(-1));
        assert_eq!(v.coefficient(&num("(2,4|1,3|5)")), BigInt::from(-1));
        assert_eq!(v.coefficient(&num("(1,2|3,4|5)")), BigInt::from(-1));

        let v = pi_expand(&num("(2,4|1,3|5)"), 1, 2).unwrap();
        assert_eq!(v, NumberingVector::from_numbering(&num("(1,3|2,4|5)"), 0));

        assert_eq!(pi_terms(&num("(1,2|3)"), 0, 1).unwrap().len(), 2);
        assert!(pi_expand(&num("(1,2|3)"), 2, 1).is_err());
        assert!(pi_expand(&num("(1,2|3)"), 1, 2).is_err());
        assert!(pi_expand(&num("(1,2|3)"), 0, 1).is_err());
    }

    #[test]
    fn straighten_worked_example() {
        let ys = enumerate_syt(&Partition::new(vec![2, 2, 1]).unwrap());
        let v = NumberingVector::from_numbering(&num("(1,4|2,3|5)"), 0);
        assert_eq!(ints(&straighten(&v, &ys, 0).unwrap()), vec![-1, 0, -1, 0, 0]);
        let v = NumberingVector::from_numbering(&ys[4], 0);
        assert_eq!(ints(&straighten(&v, &ys, 0).unwrap()), vec![0, 0, 0, 0, 1]);
    }

    #[test]
    fn basis_must_be_distinct() {
        let b = vec![num("(1,2|3)"), num("(2,1|3)")];
        assert!(Straightener::new(b, 0).is_err());
        let b = vec![num("(1,2,3)")];
        assert!(Straightener::new(b, 0).is_err());
    }
}
