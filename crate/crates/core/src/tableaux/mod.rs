//! Partitions, numberings and semistandard fillings of Young diagrams.

mod enumerate;
mod straighten;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub use enumerate::{enumerate_ssyt, enumerate_syt, numbering_of_subgraph, standardize};
pub use straighten::{
    canonical_form, pi_expand, pi_terms, straighten, NumberingVector, Straightener, DEFAULT_STEP_LIMIT,
};

/// A partition of `n`, parts weakly decreasing and positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidShape(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// The shape `(2^k, 1^(n-2k))`.
    pub fn two_column(n: usize, k: usize) -> Result<Self> {
        if 2 * k > n {
            return Err(Error::InvalidShape(format!("(2^{k}, 1^{}) is not a partition of {n}", n as i64 - 2 * k as i64)));
        }
        let mut parts = vec![2; k];
        parts.extend(std::iter::repeat_n(1, n - 2 * k));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn is_two_column(&self, k: usize) -> bool {
        self.two_column_k() == Some(k)
    }

    /// `Some(k)` when the shape is `(2^k, 1^(n-2k))`.
    pub fn two_column_k(&self) -> Option<usize> {
        if self.parts.iter().all(|&p| p <= 2) {
            Some(self.parts.iter().filter(|&&p| p == 2).count())
        } else {
            None
        }
    }

    /// The shape with `extra` boxes appended as new bottom rows of length one.
    pub fn with_extra_boxes(&self, extra: usize) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend(std::iter::repeat_n(1, extra));
        Partition { parts }
    }

    /// Dominance order `self ⊵ other` (same size assumed).
    pub fn dominates(&self, other: &Partition) -> bool {
        let (mut a, mut b) = (0usize, 0usize);
        for i in 0..self.len().max(other.len()) {
            a += self.parts.get(i).copied().unwrap_or(0);
            b += other.parts.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The total order on fillings of one shape: find the topmost row
/// where the two differ, then the rightmost differing column in that row; the
/// filling with the larger entry there is the larger one.
pub fn filling_order(a: &[Vec<u16>], b: &[Vec<u16>]) -> Ordering {
    for (ra, rb) in a.iter().zip(b) {
        if ra != rb {
            for (x, y) in ra.iter().zip(rb).rev() {
                if x != y {
                    return x.cmp(y);
                }
            }
            return ra.len().cmp(&rb.len());
        }
    }
    a.len().cmp(&b.len())
}

fn shape_of(rows: &[Vec<u16>]) -> Result<Partition> {
    Partition::new(rows.iter().map(|r| r.len()).collect())
}

fn fmt_rows(rows: &[Vec<u16>], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "(")?;
    for (i, row) in rows.iter().enumerate() {
        if i > 0 {
            write!(f, "|")?;
        }
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", cells.join(","))?;
    }
    write!(f, ")")
}

fn parse_rows(s: &str) -> Result<Vec<Vec<u16>>> {
    let s = s.trim();
    let s = s.strip_prefix('(').unwrap_or(s);
    let s = s.strip_suffix(')').unwrap_or(s);
    s.split('|')
        .map(|row| {
            row.split([',', ' '])
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.trim()
                        .parse::<u16>()
                        .map_err(|_| Error::InvalidNumbering(format!("bad entry {t:?}")))
                })
                .collect()
        })
        .collect()
}

/// A filling of a Young diagram by the distinct labels `1..=n`.
///
/// Rows are stored top to bottom, cells left to right. Entries need not
/// increase along rows or columns.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Numbering {
    rows: Vec<Vec<u16>>,
}

impl Numbering {
    pub fn new(rows: Vec<Vec<u16>>) -> Result<Self> {
        shape_of(&rows)?;
        let n: usize = rows.iter().map(|r| r.len()).sum();
        let mut seen = vec![false; n + 1];
        for &x in rows.iter().flatten() {
            if x == 0 || x as usize > n || seen[x as usize] {
                return Err(Error::InvalidNumbering(format!(
                    "entries must be exactly 1..={n}, found {x}"
                )));
            }
            seen[x as usize] = true;
        }
        Ok(Numbering { rows })
    }

    /// Skips validation; callers guarantee the invariant.
    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<u16>>) -> Self {
        Numbering { rows }
    }

    pub fn rows(&self) -> &[Vec<u16>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition {
            parts: self.rows.iter().map(|r| r.len()).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    /// Entries read left to right along each row, top row first.
    pub fn word(&self) -> Vec<u16> {
        self.rows.iter().flatten().copied().collect()
    }

    /// `σ · T`: every entry `x` is replaced by `σ(x)`.
    pub fn act(&self, sigma: &Permutation) -> Numbering {
        Numbering {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|&x| sigma.apply(x)).collect())
                .collect(),
        }
    }

    /// The permutation `σ_{self,target}` with `σ · self = target`.
    pub fn transport_to(&self, target: &Numbering) -> Result<Permutation> {
        if self.shape() != target.shape() {
            return Err(Error::InvalidShape(format!(
                "cannot map {} onto {}: shapes differ",
                self, target
            )));
        }
        Permutation::mapping(&self.word(), &target.word())
            .ok_or_else(|| Error::InvalidNumbering("numberings use different labels".into()))
    }

    /// Appends singleton rows holding `n + 1, ..., n + extra`.
    pub fn with_bottom_boxes(&self, extra: usize) -> Numbering {
        let n = self.n() as u16;
        let mut rows = self.rows.clone();
        for k in 1..=extra as u16 {
            rows.push(vec![n + k]);
        }
        Numbering { rows }
    }

    /// Rows from `frozen` on increase left to right, and every column
    /// increases downward within those rows.
    pub fn is_standard_below(&self, frozen: usize) -> bool {
        let rows = &self.rows[frozen.min(self.rows.len())..];
        rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
            && rows
                .windows(2)
                .all(|w| w[1].iter().zip(&w[0]).all(|(lo, hi)| lo > hi))
    }

    pub fn is_standard(&self) -> bool {
        self.is_standard_below(0)
    }
}

impl fmt::Display for Numbering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_rows(&self.rows, f)
    }
}

impl fmt::Debug for Numbering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_rows(&self.rows, f)
    }
}

/// Parses `"(1,2|3,4|5)"`; parentheses optional, commas or spaces between cells.
impl FromStr for Numbering {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Numbering::new(parse_rows(s)?)
    }
}

/// A filling with possibly repeated entries; used for semistandard tableaux.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Filling {
    rows: Vec<Vec<u16>>,
}

impl Filling {
    pub fn new(rows: Vec<Vec<u16>>) -> Result<Self> {
        shape_of(&rows)?;
        if rows.iter().flatten().any(|&x| x == 0) {
            return Err(Error::InvalidNumbering("entries must be positive".into()));
        }
        Ok(Filling { rows })
    }

    pub fn rows(&self) -> &[Vec<u16>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition {
            parts: self.rows.iter().map(|r| r.len()).collect(),
        }
    }

    pub fn word(&self) -> Vec<u16> {
        self.rows.iter().flatten().copied().collect()
    }

    /// `weight[v - 1]` = number of cells holding `v`.
    pub fn weight(&self) -> Vec<usize> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0) as usize;
        let mut w = vec![0; max];
        for &x in self.rows.iter().flatten() {
            w[x as usize - 1] += 1;
        }
        w
    }

    pub fn is_semistandard(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]))
            && self
                .rows
                .windows(2)
                .all(|w| w[1].iter().zip(&w[0]).all(|(lo, hi)| lo > hi))
    }
}

impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_rows(&self.rows, f)
    }
}

impl fmt::Debug for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_rows(&self.rows, f)
    }
}

impl FromStr for Filling {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Filling::new(parse_rows(s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions() {
        let p = Partition::two_column(5, 2).unwrap();
        assert_eq!(p.parts(), &[2, 2, 1]);
        assert!(p.is_two_column(2));
        assert!(!p.is_two_column(1));
        assert_eq!(p.with_extra_boxes(2).parts(), &[2, 2, 1, 1, 1]);
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::two_column(3, 2).is_err());
        assert_eq!(Partition::new(vec![3, 1]).unwrap().two_column_k(), None);
        let mu = Partition::new(vec![2, 1, 1, 1]).unwrap();
        assert!(mu.dominates(&Partition::new(vec![1; 5]).unwrap()));
        assert!(!p.dominates(&Partition::new(vec![3, 1, 1]).unwrap()));
    }

    #[test]
    fn numbering_parse_and_validate() {
        let t: Numbering = "(1,4|2,3|5)".parse().unwrap();
        assert_eq!(t.rows(), &[vec![1, 4], vec![2, 3], vec![5]]);
        assert_eq!(t.to_string(), "(1,4|2,3|5)");
        assert_eq!(t.word(), vec![1, 4, 2, 3, 5]);
        assert!("(1,1|2)".parse::<Numbering>().is_err());
        assert!("(1|2,3)".parse::<Numbering>().is_err());
        assert!(!t.is_standard());
        assert!("(1,2|3,4|5)".parse::<Numbering>().unwrap().is_standard());
        assert!(t.is_standard_below(1));
    }

    #[test]
    fn transport_and_action() {
        let t: Numbering = "(1,2|3)".parse().unwrap();
        let s: Numbering = "(3,1|2)".parse().unwrap();
        let sigma = t.transport_to(&s).unwrap();
        assert_eq!(t.act(&sigma), s);
    }

    #[test]
    fn order_compares_topmost_row_rightmost_column() {
        let y1: Numbering = "(1,2|3,4|5)".parse().unwrap();
        let y2: Numbering = "(1,2|3,5|4)".parse().unwrap();
        let y3: Numbering = "(1,3|2,4|5)".parse().unwrap();
        assert_eq!(filling_order(y1.rows(), y2.rows()), Ordering::Less);
        assert_eq!(filling_order(y2.rows(), y3.rows()), Ordering::Less);
        assert_eq!(filling_order(y3.rows(), y3.rows()), Ordering::Equal);
    }
}
